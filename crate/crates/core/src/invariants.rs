//! Torus-invariant standard monomials, Hilbert counts, and the kernels of
//! multiplication maps from polynomial rings in the degree-one generators.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::label_table;
use crate::error::{param, Result};
use crate::formal::{FormalMonomial, FormalPolynomial, Var};
use crate::linalg;
use crate::plucker::{Monomial, Polynomial};
use crate::standard::{is_standard, Straightener, SupportRange};
use crate::weyl::{bruhat_leq, PlueckerIndex};

/// `counts[i-1]` is how often row `i` occurs among the factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ContentVector(pub Vec<u32>);

impl ContentVector {
    /// True iff every row occurs exactly `d` times.
    pub fn is_uniform(&self, d: u32) -> bool {
        self.0.iter().all(|&c| c == d)
    }
}

pub fn content(m: &Monomial, n: usize) -> ContentVector {
    let mut counts = vec![0u32; n];
    for f in m.factors() {
        counts[f.i as usize - 1] += 1;
        counts[f.j as usize - 1] += 1;
    }
    ContentVector(counts)
}

/// Labelled invariant monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub labels: Vec<String>,
    pub values: Vec<Monomial>,
}

impl GeneratorSet {
    pub fn from_labelled(pairs: Vec<(String, Monomial)>) -> Self {
        let (labels, values) = pairs.into_iter().unzip();
        GeneratorSet { labels, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn polynomial(&self, k: usize) -> Polynomial {
        Polynomial::monomial(self.values[k].clone())
    }

    /// Plücker value of `x_k` (1-based).
    pub fn value_of(&self, v: Var) -> Polynomial {
        match v {
            Var::X(k) => self.polynomial(k as usize - 1),
            Var::Y(..) => panic!("generator sets are indexed by x_k"),
        }
    }
}

fn check_even(range: &SupportRange) -> Result<()> {
    if range.n() % 2 != 0 {
        return param(format!("n = {} must be even", range.n()));
    }
    Ok(())
}

/// Standard monomials on the range with content `(d, ..., d)`, in
/// lexicographic order of their factor lists.
fn invariant_monomials(range: &SupportRange, d: usize) -> Vec<Monomial> {
    let n = range.n();
    let elems = range.elements();
    let mut remaining = vec![d as u32; n + 1];
    remaining[0] = 0;
    let mut chain: Vec<PlueckerIndex> = Vec::with_capacity(d * n / 2);
    let mut out = Vec::new();

    // The rows still to be used must be covered by the remaining factors.
    // Factors come in lexicographic order, so the smallest unfinished row can
    // only be supplied as a first component, i.e. by the next factor.
    fn rec(
        elems: &[PlueckerIndex],
        from: usize,
        remaining: &mut Vec<u32>,
        chain: &mut Vec<PlueckerIndex>,
        out: &mut Vec<Monomial>,
    ) {
        let Some(s) = remaining.iter().position(|&c| c > 0) else {
            out.push(Monomial::from_sorted(chain.clone()));
            return;
        };
        for k in from..elems.len() {
            let t = elems[k];
            if (t.i as usize) < s {
                continue;
            }
            if t.i as usize > s {
                break;
            }
            if remaining[t.j as usize] == 0 || chain.last().is_some_and(|&last| !bruhat_leq(last, t)) {
                continue;
            }
            remaining[t.i as usize] -= 1;
            remaining[t.j as usize] -= 1;
            chain.push(t);
            rec(elems, k, remaining, chain, out);
            chain.pop();
            remaining[t.i as usize] += 1;
            remaining[t.j as usize] += 1;
        }
    }
    if d > 0 {
        rec(&elems, 0, &mut remaining, &mut chain, &mut out);
    } else {
        out.push(Monomial::one());
    }
    out
}

pub fn invariant_basis(range: &SupportRange, d: usize) -> Result<GeneratorSet> {
    check_even(range)?;
    if d == 0 {
        return param("degree must be at least 1");
    }
    let mut values = invariant_monomials(range, d);
    if d == 1 {
        if let Some(table) = label_table(range) {
            let mut sorted: Vec<&Monomial> = table.iter().map(|(_, m)| m).collect();
            sorted.sort();
            let mut found: Vec<&Monomial> = values.iter().collect();
            found.sort();
            if sorted == found {
                let (labels, values) = table.into_iter().unzip();
                return Ok(GeneratorSet { labels, values });
            }
        }
    }
    let prefix = if d == 1 { "X" } else { "M" };
    let labels = (1..=values.len()).map(|k| format!("{prefix}{k}")).collect();
    values.shrink_to_fit();
    Ok(GeneratorSet { labels, values })
}

pub fn hilbert_count(range: &SupportRange, d: usize) -> Result<usize> {
    Ok(invariant_basis(range, d)?.len())
}

/// Multisets of size `d` from `0..g`, as non-decreasing index lists in
/// lexicographic order.
pub fn generator_multisets(g: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(g: usize, d: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for k in from..g {
            cur.push(k);
            rec(g, d, k, cur, out);
            cur.pop();
        }
    }
    rec(g, d, 0, &mut cur, &mut out);
    out
}

/// The matrix of the multiplication map in degree `d`: one column per
/// generator multiset, one row per invariant standard monomial.
#[derive(Debug, Clone)]
pub struct ProductMatrix {
    pub generators: GeneratorSet,
    pub columns: Vec<Vec<usize>>,
    pub basis: Vec<Monomial>,
    pub rows: Vec<Vec<BigInt>>,
    /// Whether every product was already a single standard monomial.
    pub all_products_standard: bool,
}

impl ProductMatrix {
    pub fn rank(&self) -> usize {
        linalg::rank_int(self.rows.clone(), self.columns.len())
    }

    pub fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        self.rows.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect()
    }
}

pub fn product_matrix(range: &SupportRange, d: usize) -> Result<ProductMatrix> {
    let generators = invariant_basis(range, 1)?;
    let basis = invariant_monomials(range, d);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let columns = generator_multisets(generators.len(), d);
    let forms: Vec<(Monomial, std::collections::BTreeMap<Monomial, BigInt>)> = columns
        .par_iter()
        .map_init(
            || Straightener::new(*range),
            |s, col| {
                let product = col.iter().fold(Monomial::one(), |acc, &k| acc.mul(&generators.values[k]));
                let nf = s.straighten_monomial(&product);
                (product, nf)
            },
        )
        .collect();
    let mut rows = vec![vec![BigInt::zero(); columns.len()]; basis.len()];
    let mut all_products_standard = true;
    for (c, (product, nf)) in forms.iter().enumerate() {
        if !(nf.len() == 1 && nf.contains_key(product) && is_standard(product, range)) {
            all_products_standard = false;
        }
        for (m, coeff) in nf {
            let r = *index.get(m).expect("normal form of an invariant product lies in the invariant basis");
            rows[r][c] = coeff.clone();
        }
    }
    Ok(ProductMatrix { generators, columns, basis, rows, all_products_standard })
}

fn formal_monomial(col: &[usize]) -> FormalMonomial {
    FormalMonomial::new(col.iter().map(|&k| Var::X(k as u32 + 1)).collect())
}

/// Kernel basis of the multiplication map in degree `d_target`, one relation
/// per free column of the reduced row-echelon form.
pub fn multiplication_kernel(range: &SupportRange, d_target: usize) -> Result<Vec<FormalPolynomial>> {
    if !(2..=3).contains(&d_target) {
        return param(format!("d_target = {d_target} must be 2 or 3"));
    }
    let pm = product_matrix(range, d_target)?;
    let kernel = linalg::kernel(&pm.rational_rows(), pm.columns.len());
    Ok(kernel
        .into_iter()
        .map(|vec| {
            let p: FormalPolynomial =
                vec.into_iter().zip(&pm.columns).map(|(c, col)| (formal_monomial(col), c)).collect();
            p.normalized()
        })
        .collect())
}

/// Rank of the product matrix equals the number of invariant standard
/// monomials of degree `d`.
pub fn degree_one_generation_check(range: &SupportRange, d: usize) -> Result<bool> {
    if d < 2 {
        return param(format!("d = {d} must be at least 2"));
    }
    let pm = product_matrix(range, d)?;
    Ok(pm.rank() == pm.basis.len())
}

/// Whether `target` lies in the span of `basis`.
pub fn in_span(basis: &[FormalPolynomial], target: &FormalPolynomial) -> bool {
    let mut monos: Vec<FormalMonomial> =
        basis.iter().chain(std::iter::once(target)).flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let row = |p: &FormalPolynomial| monos.iter().map(|m| p.coeff(m)).collect::<Vec<_>>();
    let rows: Vec<Vec<BigRational>> = basis.iter().map(row).collect();
    let before = linalg::rank(&rows, monos.len());
    let mut with = rows;
    with.push(row(target));
    linalg::rank(&with, monos.len()) == before
}
