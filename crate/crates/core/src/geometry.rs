//! The distinguished point `xi`, its translates `v xi`, and the candidate
//! singular set of a Schubert quotient.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::plucker::{evaluate, Monomial, PlaneMatrix, Polynomial, RationalSource};
use crate::weyl::{bruhat_leq, coset_reps, pair_status, CosetElement, PlueckerIndex, StabilityStatus};

const MAX_RETRIES: u64 = 5;

/// Column 1 is free on rows `1..n/2-1` with pivot 1 at row `n/2`; column 2
/// is free on rows `n/2+1..n-1` with pivot 1 at row `n`.
#[derive(Debug, Clone)]
pub struct XiPoint {
    pub matrix: PlaneMatrix,
    pub parameters: Vec<BigRational>,
}

impl XiPoint {
    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    /// The plane `v xi`: row `r` of `xi` moved to row `v(r)`.
    pub fn translate(&self, v: &CosetElement) -> PlaneMatrix {
        self.matrix.permute_rows(&v.permutation(self.n()))
    }

    fn is_generic(&self) -> bool {
        let h = self.n() / 2;
        let mut seen = std::collections::HashSet::new();
        self.parameters.iter().all(|p| !p.is_zero() && seen.insert(p.clone()))
            && (1..=h).all(|k| !self.matrix.minor(PlueckerIndex::of(k as u8, (h + k) as u8)).is_zero())
    }
}

pub fn xi_point(n: usize, seed: u64) -> Result<XiPoint> {
    if n % 2 != 0 || n < 4 || n > u8::MAX as usize {
        return param(format!("n = {n} must be even and at least 4"));
    }
    let h = n / 2;
    for attempt in 0..MAX_RETRIES {
        let mut src = RationalSource::new(seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        let mut matrix = PlaneMatrix::zeros(n);
        let mut parameters = Vec::with_capacity(n - 2);
        for (col, lo, pivot) in [(0, 1, h), (1, h + 1, n)] {
            for r in lo..pivot {
                let x = src.next_distinct();
                matrix.set(r, col, x.clone());
                parameters.push(x);
            }
            matrix.set(pivot, col, BigRational::one());
        }
        let xi = XiPoint { matrix, parameters };
        if xi.is_generic() {
            return Ok(xi);
        }
    }
    Err(Error::ResourceLimit(format!("no generic xi found in {MAX_RETRIES} attempts")))
}

pub fn sorted_pair(a: usize, b: usize) -> Result<PlueckerIndex> {
    if a == b {
        return Err(Error::Index(format!("sorted_pair needs distinct entries, got ({a},{b})")));
    }
    PlueckerIndex::new(a.min(b), a.max(b))
}

fn half_subset(v: &CosetElement, n: usize) -> Result<Vec<u8>> {
    let s = v.values();
    if s.len() != n / 2 || s.iter().any(|&x| x == 0 || x as usize > n) {
        return param(format!("{v} is not an n/2-subset of 1..={n}"));
    }
    Ok(s)
}

/// `M = prod_k p_{sort(v(k), v(n/2+k))}`.
pub fn witness_monomial(v: &CosetElement, n: usize) -> Result<Monomial> {
    let h = n / 2;
    let s = half_subset(v, n)?;
    if s.iter().enumerate().all(|(k, &x)| x as usize == k + 1) || s.iter().enumerate().all(|(k, &x)| x as usize == h + k + 1)
    {
        return Err(Error::Precondition(format!("{v} is the identity or the reversal coset")));
    }
    let perm = v.permutation(n);
    let factors = (0..h).map(|k| sorted_pair(perm[k] as usize, perm[h + k] as usize)).collect::<Result<Vec<_>>>()?;
    Ok(Monomial::from_factors(factors))
}

/// `v xi` lies in `X(w)` iff every pair with one entry in `S` and one
/// outside is below `w`.
pub fn translate_in_schubert(v: &CosetElement, w: PlueckerIndex, n: usize) -> Result<bool> {
    let s = half_subset(v, n)?;
    let out: Vec<u8> = (1..=n as u8).filter(|x| !s.contains(x)).collect();
    Ok(s.iter().all(|&a| out.iter().all(|&b| bruhat_leq(PlueckerIndex::of(a.min(b), a.max(b)), w))))
}

/// The same membership test, by vanishing of the Plücker coordinates above
/// `w` at the plane `v xi`.
pub fn translate_in_schubert_by_minors(xi: &XiPoint, v: &CosetElement, w: PlueckerIndex) -> bool {
    let a = xi.translate(v);
    crate::weyl::pairs(xi.n()).into_iter().filter(|&t| !bruhat_leq(t, w)).all(|t| a.minor(t).is_zero())
}

#[derive(Debug, Clone, Serialize)]
pub struct SingularCandidateSet {
    pub n: usize,
    pub w: PlueckerIndex,
    /// Subsets `v` with `v xi` in `X(w)`.
    #[serde(rename = "K", serialize_with = "serialize_cosets")]
    pub k: Vec<CosetElement>,
    /// Each `v` with its partner `v w_0`, listed once with the smaller first.
    #[serde(serialize_with = "serialize_pairs")]
    pub pairs: Vec<(CosetElement, CosetElement)>,
    #[serde(rename = "L_size")]
    pub l_size: usize,
}

fn serialize_cosets<S: serde::Serializer>(k: &[CosetElement], s: S) -> std::result::Result<S::Ok, S::Error> {
    k.iter().map(CosetElement::values).collect::<Vec<_>>().serialize(s)
}

fn serialize_pairs<S: serde::Serializer>(
    p: &[(CosetElement, CosetElement)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    p.iter().map(|(a, b)| (a.values(), b.values())).collect::<Vec<_>>().serialize(s)
}

/// The coset of `v w_0`: the complementary subset.
pub fn partner(v: &CosetElement, n: usize) -> Result<CosetElement> {
    let s = half_subset(v, n)?;
    CosetElement::subset((1..=n as u8).filter(|x| !s.contains(x)).collect(), n)
}

pub fn singular_candidates(w: PlueckerIndex, n: usize, seed: u64) -> Result<SingularCandidateSet> {
    if pair_status(w, n)? == StabilityStatus::NoSemistable {
        return Err(Error::Precondition(format!("X({w}) in G(2,{n}) has no semistable points")));
    }
    let xi = xi_point(n, seed)?;
    let k: Vec<CosetElement> = coset_reps(n, n / 2)?
        .into_par_iter()
        .filter(|v| translate_in_schubert_by_minors(&xi, v, w))
        .collect();
    let mut pairs = Vec::new();
    for v in &k {
        let u = partner(v, n)?;
        if u == *v || !k.contains(&u) {
            return Err(Error::Precondition(format!("{v} has no partner in K")));
        }
        if *v < u {
            pairs.push((v.clone(), u));
        }
    }
    Ok(SingularCandidateSet { n, w, l_size: pairs.len(), k, pairs })
}

/// `b + 1 - n/2` for `w = (b+1, n)` with `b >= n/2`.
pub fn smooth_locus_width(w: PlueckerIndex, n: usize) -> Result<usize> {
    let h = n / 2;
    if n % 2 != 0 || w.j as usize != n || (w.i as usize) < h + 1 {
        return param(format!("{w} is not of the form (b+1, {n}) with b >= {h}"));
    }
    Ok(w.i as usize - h)
}

/// Values of the given invariants at `v xi`, scaled so the first nonzero
/// entry is 1.
pub fn projective_values(invariants: &[Monomial], xi: &XiPoint, v: &CosetElement) -> Vec<BigRational> {
    let a = xi.translate(v);
    let vals: Vec<BigRational> = invariants.iter().map(|m| evaluate(&Polynomial::monomial(m.clone()), &a)).collect();
    match vals.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.clone();
            vals.into_iter().map(|x| x / &lead).collect()
        }
        None => vals,
    }
}
