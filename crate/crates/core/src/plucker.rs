//! Exact polynomials in the Plücker coordinates `p_{ij}` of `G_{2,n}`,
//! the quadratic Plücker relations, and evaluation at explicit 2-planes.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{param, Result};
use crate::standard::SupportRange;
use crate::weyl::PlueckerIndex;

/// A commutative product of Plücker variables, stored as the sorted list
/// of its factors (with repetition).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<PlueckerIndex>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_factors(mut factors: Vec<PlueckerIndex>) -> Self {
        factors.sort_unstable();
        Monomial(factors)
    }

    pub fn var(p: PlueckerIndex) -> Self {
        Monomial(vec![p])
    }

    /// Factors in lexicographic order.
    pub fn factors(&self) -> &[PlueckerIndex] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `(variable, exponent)` pairs in lexicographic order.
    pub fn exponents(&self) -> Vec<(PlueckerIndex, u32)> {
        let mut out: Vec<(PlueckerIndex, u32)> = Vec::new();
        for &f in &self.0 {
            match out.last_mut() {
                Some((g, e)) if *g == f => *e += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x <= y {
                        v.push(*a.next().unwrap());
                    } else {
                        v.push(*b.next().unwrap());
                    }
                }
                (Some(_), None) => v.push(*a.next().unwrap()),
                (None, Some(_)) => v.push(*b.next().unwrap()),
                (None, None) => break,
            }
        }
        Monomial(v)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() * e as usize);
        for f in &self.0 {
            v.extend(std::iter::repeat_n(*f, e as usize));
        }
        Monomial(v)
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|p| p.j as usize).max().unwrap_or(0)
    }

    pub(crate) fn from_sorted(factors: Vec<PlueckerIndex>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        Monomial(factors)
    }
}

// Graded lexicographic on the sorted factor sequence.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|(p, e)| if e == 1 { format!("p[{},{}]", p.i, p.j) } else { format!("p[{},{}]^{e}", p.i, p.j) })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Sparse exact-rational combination of Plücker monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn var(p: PlueckerIndex) -> Self {
        Self::monomial(Monomial::var(p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True if every term has the same degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn max_index(&self) -> usize {
        self.terms.keys().map(Monomial::max_index).max().unwrap_or(0)
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Monomial) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }
}

impl FromIterator<(Monomial, BigRational)> for Polynomial {
    fn from_iter<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &'a Polynomial) -> Polynomial { (&self).$f(rhs) }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Writes `sum c*m` with the leading (largest) term first. `m` formats to
/// `"1"` for the empty monomial.
pub(crate) fn write_terms<'a, M: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a M, &'a BigRational, bool)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c, is_one) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if is_one {
            f.write_str(&fmt_rational(&abs))?;
        } else if abs.is_one() {
            write!(f, "{m}")?;
        } else {
            write!(f, "{}*{m}", fmt_rational(&abs))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(m, c)| (m, c, m.degree() == 0)))
    }
}

macro_rules! serialize_as_string {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }
    )*};
}
serialize_as_string!(Monomial, Polynomial);

/// The Plücker relation `p_{il} p_{jk} - p_{ik} p_{jl} + p_{ij} p_{kl}`.
pub fn plucker_relation(i: usize, j: usize, k: usize, l: usize) -> Result<Polynomial> {
    if !(1 <= i && i < j && j < k && k < l) {
        return param(format!("relation needs 1 <= i < j < k < l, got ({i},{j},{k},{l})"));
    }
    let v = |a, b| PlueckerIndex::new(a, b).map(Monomial::var);
    let one = BigRational::one();
    Ok([
        (v(i, l)?.mul(&v(j, k)?), one.clone()),
        (v(i, k)?.mul(&v(j, l)?), -one.clone()),
        (v(i, j)?.mul(&v(k, l)?), one),
    ]
    .into_iter()
    .collect())
}

/// A 2-plane in `C^n` presented by two spanning columns; rows are `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMatrix {
    rows: Vec<[BigRational; 2]>,
}

impl PlaneMatrix {
    pub fn new(rows: Vec<[BigRational; 2]>) -> Self {
        PlaneMatrix { rows }
    }

    pub fn from_integers(rows: &[[i64; 2]]) -> Self {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        PlaneMatrix { rows: rows.iter().map(|[a, b]| [r(*a), r(*b)]).collect() }
    }

    pub fn zeros(n: usize) -> Self {
        PlaneMatrix { rows: vec![[BigRational::zero(), BigRational::zero()]; n] }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Entry at 1-based row `r`, 0-based column `c`.
    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.rows[r - 1][c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.rows[r - 1][c] = value;
    }

    pub fn rows(&self) -> &[[BigRational; 2]] {
        &self.rows
    }

    /// The 2x2 minor on rows `i < j` (1-based).
    pub fn minor(&self, p: PlueckerIndex) -> BigRational {
        let a = &self.rows[p.i as usize - 1];
        let b = &self.rows[p.j as usize - 1];
        &a[0] * &b[1] - &b[0] * &a[1]
    }

    pub fn is_rank_two(&self) -> bool {
        let n = self.n();
        (1..n).any(|i| (i + 1..=n).any(|j| !self.minor(PlueckerIndex::of(i as u8, j as u8)).is_zero()))
    }

    /// The plane with rows permuted so that row `r` of `self` becomes row
    /// `perm[r-1]` of the result (`perm` in one-line notation, 1-based).
    pub fn permute_rows(&self, perm: &[u8]) -> PlaneMatrix {
        let mut out = PlaneMatrix::zeros(self.n());
        for (r, &target) in perm.iter().enumerate() {
            out.rows[target as usize - 1] = self.rows[r].clone();
        }
        out
    }
}

/// Substitutes each `p_{ij}` by the corresponding minor of `a`.
///
/// Indices beyond `a.n()` panic.
pub fn evaluate(p: &Polynomial, a: &PlaneMatrix) -> BigRational {
    let mut minors: HashMap<PlueckerIndex, BigRational> = HashMap::new();
    let mut total = BigRational::zero();
    for (m, c) in p.terms() {
        let mut value = c.clone();
        for (v, e) in m.exponents() {
            let x = minors.entry(v).or_insert_with(|| a.minor(v));
            for _ in 0..e {
                value *= &*x;
            }
            if value.is_zero() {
                break;
            }
        }
        total += value;
    }
    total
}

pub(crate) struct RationalSource {
    rng: ChaCha8Rng,
    used: HashSet<BigRational>,
}

impl RationalSource {
    pub(crate) fn new(seed: u64) -> Self {
        RationalSource { rng: ChaCha8Rng::seed_from_u64(seed), used: HashSet::new() }
    }

    /// A nonzero rational `p/q`, `|p|, q <= 100`, never returned before by
    /// this source.
    pub(crate) fn next_distinct(&mut self) -> BigRational {
        loop {
            let num: i64 = self.rng.gen_range(1..=100) * if self.rng.gen_bool(0.5) { 1 } else { -1 };
            let den: i64 = self.rng.gen_range(1..=100);
            let r = BigRational::new(num.into(), den.into());
            if self.used.insert(r.clone()) {
                return r;
            }
        }
    }
}

/// A seeded rank-2 matrix with all entries nonzero and distinct.
pub fn random_plane_matrix(n: usize, seed: u64) -> PlaneMatrix {
    let mut src = RationalSource::new(seed);
    loop {
        let rows = (0..n).map(|_| [src.next_distinct(), src.next_distinct()]).collect();
        let m = PlaneMatrix::new(rows);
        if m.is_rank_two() {
            return m;
        }
    }
}

/// A seeded point of the Richardson variety `X^v_w`.
///
/// Column 1 is supported on rows `v.i..=w.i` with pivot 1 at row `w.i`,
/// column 2 on rows `v.j..=w.j` with pivot 1 at row `w.j`; the remaining
/// support entries are distinct nonzero rationals. Hence `p_tau` vanishes
/// unless `v <= tau <= w`. For `v = (1,2)` this is a point of the open
/// Schubert cell of `X(w)`.
pub fn random_schubert_point(range: &SupportRange, seed: u64) -> PlaneMatrix {
    let mut src = RationalSource::new(seed);
    let (v, w) = (range.v(), range.w());
    let mut a = PlaneMatrix::zeros(range.n());
    for (col, lo, hi) in [(0, v.i, w.i), (1, v.j, w.j)] {
        for r in lo..hi {
            a.set(r as usize, col, src.next_distinct());
        }
        a.set(hi as usize, col, BigRational::one());
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{bruhat_leq, pairs};

    fn v(i: u8, j: u8) -> Polynomial {
        Polynomial::var(PlueckerIndex::of(i, j))
    }

    #[test]
    fn multiply_examples() {
        assert_eq!((v(1, 2) * v(3, 4)).to_string(), "p[1,2]*p[3,4]");
        assert!(((v(1, 2) + v(1, 3)) * Polynomial::zero()).is_zero());
        let x1 = v(1, 4) * v(2, 5) * v(3, 6);
        let x2 = v(1, 2) * v(3, 5) * v(4, 6);
        assert_eq!((&x1 * &x2).to_string(), "p[1,2]*p[1,4]*p[2,5]*p[3,5]*p[3,6]*p[4,6]");
    }

    #[test]
    fn relation_examples() {
        assert_eq!(plucker_relation(2, 3, 4, 5).unwrap(), v(2, 5) * v(3, 4) - v(2, 4) * v(3, 5) + v(2, 3) * v(4, 5));
        assert_eq!(plucker_relation(1, 2, 3, 4).unwrap(), v(1, 4) * v(2, 3) - v(1, 3) * v(2, 4) + v(1, 2) * v(3, 4));
        assert_eq!(plucker_relation(3, 4, 5, 6).unwrap(), v(3, 6) * v(4, 5) - v(3, 5) * v(4, 6) + v(3, 4) * v(5, 6));
        assert!(plucker_relation(1, 3, 2, 4).is_err());
        assert!(plucker_relation(0, 1, 2, 3).is_err());
    }

    #[test]
    fn display_canonical() {
        let p = v(2, 4) * v(3, 5) - v(2, 3) * v(4, 5);
        assert_eq!(p.to_string(), "p[2,4]*p[3,5] - p[2,3]*p[4,5]");
        let q = v(1, 2).pow(2).scale(&BigRational::new(3.into(), 2.into())) - Polynomial::constant(BigRational::one());
        assert_eq!(q.to_string(), "3/2*p[1,2]^2 - 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn evaluate_examples() {
        let mut rows = vec![[0i64, 0]; 4];
        rows[0] = [1, 0];
        rows[1] = [0, 1];
        let a = PlaneMatrix::from_integers(&rows);
        assert_eq!(evaluate(&v(1, 2), &a), BigRational::one());
        assert!(evaluate(&v(3, 4), &a).is_zero());
    }

    #[test]
    fn relations_vanish_on_random_planes() {
        for n in [4usize, 6, 8, 10] {
            for seed in 0..100u64 {
                if n == 10 && seed >= 20 {
                    break;
                }
                let a = random_plane_matrix(n, seed);
                for i in 1..=n {
                    for j in i + 1..=n {
                        for k in j + 1..=n {
                            for l in k + 1..=n {
                                assert!(evaluate(&plucker_relation(i, j, k, l).unwrap(), &a).is_zero());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn minor_alternating_sum() {
        let a = random_plane_matrix(6, 3);
        let x1 = v(1, 4) * v(2, 5) * v(3, 6);
        let x2 = v(1, 2) * v(3, 5) * v(4, 6);
        let x3 = v(1, 3) * v(2, 5) * v(4, 6);
        let m = |i: u8, j: u8| a.minor(PlueckerIndex::of(i, j));
        let want = m(1, 4) * m(2, 5) * m(3, 6) - m(1, 2) * m(3, 5) * m(4, 6) + m(1, 3) * m(2, 5) * m(4, 6);
        assert_eq!(evaluate(&(x1 - x2 + x3), &a), want);
    }

    #[test]
    fn schubert_point_vanishing_pattern() {
        let n = 8;
        for w in pairs(n) {
            let range = SupportRange::schubert(n, w).unwrap();
            for seed in 0..20 {
                let a = random_schubert_point(&range, seed);
                for tau in pairs(n) {
                    let nonzero = !a.minor(tau).is_zero();
                    assert_eq!(nonzero, bruhat_leq(tau, w), "w={w} tau={tau} seed={seed}");
                }
            }
        }
    }

    #[test]
    fn schubert_point_examples() {
        let a = random_schubert_point(&SupportRange::schubert(8, PlueckerIndex::of(6, 8)).unwrap(), 0);
        assert!(a.minor(PlueckerIndex::of(7, 8)).is_zero());
        let full = random_schubert_point(&SupportRange::full(6).unwrap(), 1);
        assert!(pairs(6).iter().all(|&t| !full.minor(t).is_zero()));
        let a = random_schubert_point(&SupportRange::schubert(6, PlueckerIndex::of(3, 6)).unwrap(), 2);
        let alive: Vec<_> = pairs(6).into_iter().filter(|&t| !a.minor(t).is_zero()).collect();
        assert!(alive.iter().all(|t| t.i <= 3));
        assert_eq!(alive.len(), 5 + 4 + 3);
    }

    #[test]
    fn richardson_point_pattern() {
        let n = 8;
        let all = pairs(n);
        for &lo in &all {
            for &hi in &all {
                if !bruhat_leq(lo, hi) {
                    continue;
                }
                let range = SupportRange::richardson(n, lo, hi).unwrap();
                let a = random_schubert_point(&range, 5);
                for &tau in &all {
                    if !(bruhat_leq(lo, tau) && bruhat_leq(tau, hi)) {
                        assert!(a.minor(tau).is_zero());
                    }
                }
                assert!(a.is_rank_two());
            }
        }
    }
}
