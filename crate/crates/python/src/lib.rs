use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use plucker_git as core;
use plucker_git::catalog::Case;
use plucker_git::presentations::matching_probes;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pair(p: (usize, usize), n: usize) -> PyResult<core::PlueckerIndex> {
    core::PlueckerIndex::checked(p.0, p.1, n).map_err(err)
}

/// The window `[v, w]` of a Richardson variety in G(2,n).
#[pyclass(name = "SupportRange", frozen)]
struct PySupportRange {
    inner: core::SupportRange,
}

#[pymethods]
impl PySupportRange {
    #[new]
    #[pyo3(signature = (n, w=None, v=None))]
    fn new(n: usize, w: Option<(usize, usize)>, v: Option<(usize, usize)>) -> PyResult<Self> {
        let w = pair(w.unwrap_or((n.saturating_sub(1), n)), n)?;
        let v = pair(v.unwrap_or((1, 2)), n)?;
        Ok(PySupportRange { inner: core::SupportRange::richardson(n, v, w).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn v(&self) -> (u8, u8) {
        (self.inner.v().i, self.inner.v().j)
    }

    #[getter]
    fn w(&self) -> (u8, u8) {
        (self.inner.w().i, self.inner.w().j)
    }

    fn elements(&self) -> Vec<(u8, u8)> {
        self.inner.elements().into_iter().map(|p| (p.i, p.j)).collect()
    }

    fn __repr__(&self) -> String {
        format!("SupportRange(n={}, v={}, w={})", self.inner.n(), self.inner.v(), self.inner.w())
    }
}

/// A polynomial in the Plücker coordinates with rational coefficients.
#[pyclass(name = "PluckerPolynomial", frozen)]
struct PyPolynomial {
    inner: core::Polynomial,
}

#[pymethods]
impl PyPolynomial {
    #[staticmethod]
    fn parse(s: &str, n: usize) -> PyResult<Self> {
        Ok(PyPolynomial { inner: core::parse_plucker(s, n).map_err(err)? })
    }

    fn straighten(&self, range: &PySupportRange) -> Self {
        PyPolynomial { inner: core::straighten(&self.inner, &range.inner) }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPolynomial { inner: &self.inner + &other.inner }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyPolynomial { inner: &self.inner - &other.inner }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPolynomial { inner: &self.inner * &other.inner }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PluckerPolynomial('{}')", self.inner)
    }
}

#[pyfunction]
fn minimal_elements(n: usize) -> PyResult<((u8, u8), (u8, u8))> {
    let (ss, s) = core::minimal_elements(n).map_err(err)?;
    Ok(((ss.i, ss.j), (s.i, s.j)))
}

#[pyfunction]
#[pyo3(signature = (w, n, d=None))]
fn stability_status(w: (usize, usize), n: usize, d: Option<usize>) -> PyResult<String> {
    let coset = core::CosetElement::Pair(pair(w, n)?);
    Ok(core::stability_status(&coset, n, d.unwrap_or(n / 2)).map_err(err)?.to_string())
}

#[pyfunction]
fn standard_basis(range: &PySupportRange, degree: usize) -> Vec<String> {
    core::standard_basis(&range.inner, degree).iter().map(ToString::to_string).collect()
}

#[pyfunction]
fn invariant_basis(range: &PySupportRange, d: usize) -> PyResult<Vec<(String, String)>> {
    let set = core::invariant_basis(&range.inner, d).map_err(err)?;
    Ok(set.labels.into_iter().zip(set.values.iter().map(ToString::to_string)).collect())
}

#[pyfunction]
fn hilbert_count(range: &PySupportRange, d: usize) -> PyResult<usize> {
    core::hilbert_count(&range.inner, d).map_err(err)
}

#[pyfunction]
fn multiplication_kernel(range: &PySupportRange, d: usize) -> PyResult<Vec<String>> {
    Ok(core::multiplication_kernel(&range.inner, d).map_err(err)?.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn degree_one_generation_check(range: &PySupportRange, d: usize) -> PyResult<bool> {
    core::degree_one_generation_check(&range.inner, d).map_err(err)
}

#[pyfunction]
fn verify_identity(lhs: &str, rhs: &str, range: &PySupportRange) -> PyResult<bool> {
    let n = range.inner.n();
    let l = core::parse_plucker(lhs, n).map_err(err)?;
    let r = core::parse_plucker(rhs, n).map_err(err)?;
    Ok(core::verify_identity(&l, &r, &range.inner))
}

/// `(label, passed, discrepancy)` for every displayed relation of a case.
#[pyfunction]
#[pyo3(signature = (case, n=None, k=None))]
fn catalog_suite(case: &str, n: Option<usize>, k: Option<usize>) -> PyResult<Vec<(String, bool, Option<String>)>> {
    let case = if case.eq_ignore_ascii_case("richardson") {
        match (n, k) {
            (Some(n), Some(k)) => Case::Richardson { n, k },
            _ => return Err(PyValueError::new_err("richardson needs n and k")),
        }
    } else {
        case.parse().map_err(err)?
    };
    let rep = core::catalog_suite(case).map_err(err)?;
    Ok(rep
        .records
        .into_iter()
        .map(|r| {
            let ok = r.discrepancy.is_none() && r.vanishes_at_points;
            (r.relation_label, ok, r.discrepancy)
        })
        .collect())
}

/// Jacobian matrix (as strings), rank, and singular flag.
#[pyfunction]
fn jacobian(relations: Vec<String>, point: Vec<String>, codim: usize) -> PyResult<(Vec<Vec<String>>, usize, bool)> {
    let pt = point
        .iter()
        .map(|s| s.trim().parse::<BigRational>().map_err(|_| PyValueError::new_err(format!("bad rational '{s}'"))))
        .collect::<PyResult<Vec<_>>>()?;
    let rels = relations
        .iter()
        .map(|s| core::parse_expr(s, 0).and_then(|e| e.to_formal(Some(pt.len()))).map_err(err))
        .collect::<PyResult<Vec<_>>>()?;
    let rep = core::jacobian(&rels, &pt, codim).map_err(err)?;
    let matrix = rep.matrix.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    Ok((matrix, rep.rank, rep.singular))
}

/// Whether the toric system is confluent on all matchings, with each
/// probe's normal forms.
#[pyfunction]
#[pyo3(signature = (symbols=6))]
fn confluence_check(symbols: u8) -> PyResult<(bool, Vec<(String, Vec<String>)>)> {
    let rep = core::confluence_check(&core::ReductionSystem::toric(symbols), &matching_probes(symbols)).map_err(err)?;
    Ok((rep.confluent, rep.probes.into_iter().map(|p| (p.probe, p.normal_forms)).collect()))
}

/// `(|K|, |L|)` for the Schubert variety `X(w)`.
#[pyfunction]
#[pyo3(signature = (n, w=None, seed=0))]
fn singular_candidates(n: usize, w: Option<(usize, usize)>, seed: u64) -> PyResult<(usize, usize)> {
    let w = pair(w.unwrap_or((n.saturating_sub(1), n)), n)?;
    let set = core::singular_candidates(w, n, seed).map_err(err)?;
    Ok((set.k.len(), set.l_size))
}

#[pymodule]
fn plucker_git_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySupportRange>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_function(wrap_pyfunction!(minimal_elements, m)?)?;
    m.add_function(wrap_pyfunction!(stability_status, m)?)?;
    m.add_function(wrap_pyfunction!(standard_basis, m)?)?;
    m.add_function(wrap_pyfunction!(invariant_basis, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_count, m)?)?;
    m.add_function(wrap_pyfunction!(multiplication_kernel, m)?)?;
    m.add_function(wrap_pyfunction!(degree_one_generation_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_suite, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian, m)?)?;
    m.add_function(wrap_pyfunction!(confluence_check, m)?)?;
    m.add_function(wrap_pyfunction!(singular_candidates, m)?)?;
    Ok(())
}
