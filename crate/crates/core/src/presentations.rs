//! Checking displayed relations, Jacobians of presentations at points, and
//! confluence of monomial rewriting systems.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::catalog::Case;
use crate::error::{Error, Result};
use crate::formal::{FormalMonomial, FormalPolynomial, Var};
use crate::invariants::GeneratorSet;
use crate::linalg;
use crate::plucker::{evaluate, fmt_rational, random_schubert_point, Polynomial};
use crate::standard::{straighten, SupportRange};

/// Seeded points used to cross-check each relation numerically.
pub const CHECK_POINTS: u64 = 20;

pub fn verify_identity(lhs: &Polynomial, rhs: &Polynomial, range: &SupportRange) -> bool {
    straighten(&(lhs - rhs), range).is_zero()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationRecord {
    pub case: String,
    pub relation_label: String,
    pub status: Status,
    pub lhs_normal_form: String,
    pub rhs_normal_form: String,
    /// Normal form of `lhs - rhs` when it is nonzero.
    pub discrepancy: Option<String>,
    pub vanishes_at_points: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub case: String,
    pub records: Vec<RelationRecord>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}

fn vanishes(p: &Polynomial, range: &SupportRange) -> bool {
    (0..CHECK_POINTS).all(|seed| evaluate(p, &random_schubert_point(range, seed)).is_zero())
}

fn record(case: &Case, label: &str, lhs: &Polynomial, rhs: &Polynomial, range: &SupportRange) -> RelationRecord {
    let (l, r) = (straighten(lhs, range), straighten(rhs, range));
    let diff = &l - &r;
    let points = vanishes(&(lhs - rhs), range);
    RelationRecord {
        case: case.to_string(),
        relation_label: label.to_string(),
        status: if diff.is_zero() && points { Status::Pass } else { Status::Fail },
        lhs_normal_form: l.to_string(),
        rhs_normal_form: r.to_string(),
        discrepancy: (!diff.is_zero()).then(|| diff.to_string()),
        vanishes_at_points: points,
    }
}

/// Every displayed identity and relation of a worked example, checked by
/// straightening and by evaluation at seeded points. Failures are reported
/// as computed.
pub fn catalog_suite(case: Case) -> Result<SuiteReport> {
    let range = case.range()?;
    let gens = GeneratorSet::from_labelled(case.generators()?);
    let identities = case.identities()?;
    let relations = case.relations()?;
    let mut records: Vec<RelationRecord> =
        identities.par_iter().map(|id| record(&case, &id.label, &id.lhs, &id.rhs, &range)).collect();
    records.par_extend(relations.par_iter().map(|(label, f)| {
        let lhs = f.substitute(|v| gens.value_of(v));
        record(&case, label, &lhs, &Polynomial::zero(), &range)
    }));
    Ok(SuiteReport { case: case.to_string(), records })
}

/// Values of the generators at a seeded point of the range.
pub fn generator_point(gens: &GeneratorSet, range: &SupportRange, seed: u64) -> Vec<BigRational> {
    let a = random_schubert_point(range, seed);
    gens.values.iter().map(|m| evaluate(&Polynomial::monomial(m.clone()), &a)).collect()
}

fn serialize_matrix<S: Serializer>(m: &[Vec<BigRational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(fmt_rational).collect()).collect();
    strings.serialize(s)
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobianReport {
    /// `matrix[i][j] = dF_i/dx_{j+1}` at the point.
    #[serde(serialize_with = "serialize_matrix")]
    pub matrix: Vec<Vec<BigRational>>,
    pub rank: usize,
    pub codim_target: usize,
    pub singular: bool,
}

pub fn jacobian(relations: &[FormalPolynomial], point: &[BigRational], codim_target: usize) -> Result<JacobianReport> {
    let g = point.len();
    if let Some(bad) = relations.iter().flat_map(|f| f.variables()).find(|v| !matches!(v, Var::X(k) if (*k as usize) <= g)) {
        return Err(Error::Dimension { expected: g, got: bad_index(bad) });
    }
    let value = |v: Var| match v {
        Var::X(k) => point[k as usize - 1].clone(),
        Var::Y(..) => unreachable!(),
    };
    let matrix: Vec<Vec<BigRational>> =
        relations.iter().map(|f| (1..=g as u32).map(|k| f.derivative(Var::X(k)).evaluate(value)).collect()).collect();
    let rank = linalg::rank(&matrix, g);
    Ok(JacobianReport { matrix, rank, codim_target, singular: rank < codim_target })
}

fn bad_index(v: Var) -> usize {
    match v {
        Var::X(k) => k as usize,
        Var::Y(..) => 0,
    }
}

/// Rewrite rules `lhs -> rhs` acting on formal polynomials.
#[derive(Debug, Clone, Default)]
pub struct ReductionSystem {
    pub rules: Vec<(FormalMonomial, FormalPolynomial)>,
}

impl ReductionSystem {
    pub fn new(rules: Vec<(FormalMonomial, FormalPolynomial)>) -> Result<Self> {
        for (lhs, rhs) in &rules {
            if rhs.terms().any(|(m, _)| m.divide(lhs).is_some()) {
                return Err(Error::Precondition(format!("rule {lhs} -> {rhs} rewrites into its own left side")));
            }
        }
        Ok(ReductionSystem { rules })
    }

    /// `y_{ij} y_{ms} -> y_{im} y_{js}` and `y_{im} y_{js} -> y_{is} y_{jm}` for
    /// all `i < j < m < s` in `1..=symbols`.
    pub fn toric(symbols: u8) -> Self {
        let mut rules = Vec::new();
        let y = |a, b| Var::Y(a, b);
        for i in 1..=symbols {
            for j in i + 1..=symbols {
                for m in j + 1..=symbols {
                    for s in m + 1..=symbols {
                        rules.push((
                            FormalMonomial::new(vec![y(i, j), y(m, s)]),
                            FormalPolynomial::monomial(FormalMonomial::new(vec![y(i, m), y(j, s)])),
                        ));
                        rules.push((
                            FormalMonomial::new(vec![y(i, m), y(j, s)]),
                            FormalPolynomial::monomial(FormalMonomial::new(vec![y(i, s), y(j, m)])),
                        ));
                    }
                }
            }
        }
        ReductionSystem { rules }
    }

    fn successors(&self, p: &FormalPolynomial) -> Vec<FormalPolynomial> {
        let mut out = Vec::new();
        for (m, c) in p.terms() {
            for (lhs, rhs) in &self.rules {
                if let Some(rest) = m.divide(lhs) {
                    let mut next = p.clone();
                    next.add_term(m.clone(), -c.clone());
                    for (t, k) in rhs.terms() {
                        next.add_term(rest.mul(t), c * k);
                    }
                    out.push(next);
                }
            }
        }
        out
    }
}

/// Every perfect matching of `1..=symbols` as a monomial in the `y_{i,j}`.
pub fn matching_probes(symbols: u8) -> Vec<FormalMonomial> {
    fn rec(free: &[u8], cur: &mut Vec<Var>, out: &mut Vec<FormalMonomial>) {
        let Some((&a, rest)) = free.split_first() else {
            out.push(FormalMonomial::new(cur.clone()));
            return;
        };
        for (k, &b) in rest.iter().enumerate() {
            let mut left = rest.to_vec();
            left.remove(k);
            cur.push(Var::Y(a, b));
            rec(&left, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let all: Vec<u8> = (1..=symbols).collect();
    rec(&all, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeResult {
    pub probe: String,
    pub normal_forms: Vec<String>,
    pub states: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfluenceReport {
    pub probes: Vec<ProbeResult>,
    pub confluent: bool,
}

/// Cap on distinct states explored per probe.
pub const MAX_STATES: usize = 100_000;

/// Explores every rewrite sequence from each probe and collects the
/// irreducible states reached.
pub fn confluence_check(system: &ReductionSystem, probes: &[FormalMonomial]) -> Result<ConfluenceReport> {
    let results: Vec<Result<ProbeResult>> = probes
        .par_iter()
        .map(|probe| {
            let start = FormalPolynomial::monomial(probe.clone());
            let mut seen: HashSet<FormalPolynomial> = HashSet::from([start.clone()]);
            let mut queue = VecDeque::from([start]);
            let mut normal: BTreeSet<String> = BTreeSet::new();
            while let Some(p) = queue.pop_front() {
                let next = system.successors(&p);
                if next.is_empty() {
                    normal.insert(p.to_string());
                }
                for q in next {
                    if seen.insert(q.clone()) {
                        if seen.len() > MAX_STATES {
                            return Err(Error::ResourceLimit(format!(
                                "more than {MAX_STATES} states reachable from {probe}"
                            )));
                        }
                        queue.push_back(q);
                    }
                }
            }
            Ok(ProbeResult { probe: probe.to_string(), normal_forms: normal.into_iter().collect(), states: seen.len() })
        })
        .collect();
    let probes = results.into_iter().collect::<Result<Vec<_>>>()?;
    let confluent = probes.iter().all(|p| p.normal_forms.len() == 1);
    Ok(ConfluenceReport { probes, confluent })
}

/// Every relation is a difference of two monomials.
pub fn is_binomial_presentation(relations: &[FormalPolynomial]) -> bool {
    relations.iter().all(FormalPolynomial::is_binomial)
}

/// The binomial relations among the `Y_{i,j}` of the toric Richardson range,
/// written in the variables `y_{i,j}`.
pub fn toric_relations(n: usize, k: usize) -> Result<Vec<FormalPolynomial>> {
    Case::Richardson { n, k }.range()?;
    let top = (n / 2 + 2) as u8;
    let y = |a, b| FormalPolynomial::var(Var::Y(a, b));
    let mut out = Vec::new();
    for i in k as u8 + 1..=top {
        for j in i + 1..=top {
            for m in j + 1..=top {
                for s in m + 1..=top {
                    out.push(y(i, j) * y(m, s) - y(i, m) * y(j, s));
                    out.push(y(i, m) * y(j, s) - y(i, s) * y(j, m));
                }
            }
        }
    }
    Ok(out)
}
