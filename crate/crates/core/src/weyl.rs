//! Coset combinatorics for `SL_n` and the torus (semi)stability test for
//! Schubert varieties in the Grassmannian of 2-planes.
//!
//! A Schubert variety `X(w)` in `G_{2,n}` is indexed by a pair `w = (a, b)`,
//! `1 <= a < b <= n`, and the Bruhat order on such pairs is componentwise.
//! Weights are handled in epsilon-coordinates: `d * omega_2` has epsilon
//! vector `(d, d, 0, ..., 0)`, and once we subtract the mean `2d/n` it lies in
//! the root lattice exactly when `n | 2d`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{param, Error, Result};

/// A pair `(i, j)` with `1 <= i < j`, indexing a Plücker coordinate and a
/// torus-fixed point of `G_{2,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlueckerIndex {
    pub i: u8,
    pub j: u8,
}

impl PlueckerIndex {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > u8::MAX as usize {
            return Err(Error::Index(format!("({i},{j}) is not a valid pair 1 <= i < j")));
        }
        Ok(Self { i: i as u8, j: j as u8 })
    }

    /// Checks the pair against the ambient `n`.
    pub fn checked(i: usize, j: usize, n: usize) -> Result<Self> {
        let p = Self::new(i, j)?;
        if j > n {
            return Err(Error::Index(format!("({i},{j}) exceeds n = {n}")));
        }
        Ok(p)
    }

    pub(crate) const fn of(i: u8, j: u8) -> Self {
        debug_assert!(0 < i && i < j);
        Self { i, j }
    }

    pub fn leq(self, other: Self) -> bool {
        bruhat_leq(self, other)
    }

    pub fn comparable(self, other: Self) -> bool {
        bruhat_leq(self, other) || bruhat_leq(other, self)
    }
}

impl fmt::Display for PlueckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl Serialize for PlueckerIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

/// Bruhat order on `I(2,n)`: componentwise comparison.
pub fn bruhat_leq(a: PlueckerIndex, b: PlueckerIndex) -> bool {
    a.i <= b.i && a.j <= b.j
}

/// A minimal coset representative, stored by its defining subset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CosetElement {
    /// Representative in `W^{P^{alpha_2}}`.
    Pair(PlueckerIndex),
    /// Representative in `W^{P^{alpha_k}}`: a strictly increasing k-subset.
    Subset(Vec<u8>),
}

impl CosetElement {
    pub fn subset(values: Vec<u8>, n: usize) -> Result<Self> {
        if values.is_empty() || values.len() >= n {
            return param(format!("subset of size {} is not a proper coset for n = {n}", values.len()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) || values[0] == 0 || *values.last().unwrap() as usize > n {
            return Err(Error::Index(format!("{values:?} is not a strictly increasing subset of 1..={n}")));
        }
        Ok(CosetElement::Subset(values))
    }

    /// The defining values `w(1) < ... < w(r)`.
    pub fn values(&self) -> Vec<u8> {
        match self {
            CosetElement::Pair(p) => vec![p.i, p.j],
            CosetElement::Subset(s) => s.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            CosetElement::Pair(_) => 2,
            CosetElement::Subset(s) => s.len(),
        }
    }

    /// One-line notation of the full permutation: the subset in increasing
    /// order followed by its complement in increasing order.
    pub fn permutation(&self, n: usize) -> Vec<u8> {
        let head = self.values();
        let mut perm = head.clone();
        perm.extend((1..=n as u8).filter(|v| !head.contains(v)));
        perm
    }
}

impl fmt::Display for CosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetElement::Pair(p) => p.fmt(f),
            CosetElement::Subset(s) => {
                let parts: Vec<String> = s.iter().map(u8::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

/// All strictly increasing r-tuples of `{1..n}` in lexicographic order.
pub fn coset_reps(n: usize, r: usize) -> Result<Vec<CosetElement>> {
    if r == 0 || r + 1 > n || n > u8::MAX as usize {
        return param(format!("need 1 <= r <= n-1, got r = {r}, n = {n}"));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn rec(start: u8, n: u8, r: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        let need = (r - cur.len()) as u8;
        for v in start..=n + 1 - need {
            cur.push(v);
            rec(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(1, n as u8, r, &mut current, &mut out);
    Ok(out
        .into_iter()
        .map(|s| {
            if r == 2 {
                CosetElement::Pair(PlueckerIndex::of(s[0], s[1]))
            } else {
                CosetElement::Subset(s)
            }
        })
        .collect())
}

/// All pairs of `I(2,n)` in lexicographic order.
pub fn pairs(n: usize) -> Vec<PlueckerIndex> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 1..n {
        for j in i + 1..=n {
            out.push(PlueckerIndex::of(i as u8, j as u8));
        }
    }
    out
}

/// Coefficients `a_1..a_{n-1}` of a weight in the basis of simple roots
/// `alpha_k = eps_k - eps_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootCoordinateVector(pub Vec<i64>);

impl RootCoordinateVector {
    /// Expands back to epsilon-coordinates: `c_i = a_i - a_{i-1}` with
    /// `a_0 = a_n = 0`.
    pub fn to_epsilon(&self) -> Vec<i64> {
        let n = self.0.len() + 1;
        (0..n)
            .map(|i| {
                let cur = if i < n - 1 { self.0[i] } else { 0 };
                let prev = if i > 0 { self.0[i - 1] } else { 0 };
                cur - prev
            })
            .collect()
    }
}

/// Root coordinates of `w(d * omega_k)` where `k` is the size of the coset
/// subset (2 for pairs).
pub fn weight_root_coords(w: &CosetElement, n: usize, d: usize) -> Result<RootCoordinateVector> {
    let r = w.rank();
    if r * d % n != 0 {
        return Err(Error::NotInRootLattice { n, d });
    }
    let values = w.values();
    if values.iter().any(|&v| v == 0 || v as usize > n) {
        return Err(Error::Index(format!("{w} is not a coset of n = {n}")));
    }
    let shift = (r * d / n) as i64;
    let mut acc = 0i64;
    let mut coords = Vec::with_capacity(n - 1);
    for i in 1..n {
        let c = if values.contains(&(i as u8)) { d as i64 } else { 0 } - shift;
        acc += c;
        coords.push(acc);
    }
    Ok(RootCoordinateVector(coords))
}

/// Outcome of the torus stability test on `X(w)`, ordered by strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum StabilityStatus {
    NoSemistable,
    SemistableOnly,
    Stable,
}

impl fmt::Display for StabilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StabilityStatus::NoSemistable => "no-semistable",
            StabilityStatus::SemistableOnly => "semistable-only",
            StabilityStatus::Stable => "stable",
        };
        f.write_str(s)
    }
}

/// Stable iff every root coordinate of `w(d * omega)` is `<= -1`,
/// semistable iff every coordinate is `<= 0`.
pub fn stability_status(w: &CosetElement, n: usize, d: usize) -> Result<StabilityStatus> {
    let coords = weight_root_coords(w, n, d)?;
    Ok(if coords.0.iter().all(|&a| a <= -1) {
        StabilityStatus::Stable
    } else if coords.0.iter().all(|&a| a <= 0) {
        StabilityStatus::SemistableOnly
    } else {
        StabilityStatus::NoSemistable
    })
}

/// Stability of the Schubert variety `X(w)` for the line bundle
/// `L((n/2) omega_2)`.
pub fn pair_status(w: PlueckerIndex, n: usize) -> Result<StabilityStatus> {
    if n % 2 != 0 {
        return param(format!("n = {n} must be even"));
    }
    stability_status(&CosetElement::Pair(w), n, n / 2)
}

/// The minimal Schubert varieties admitting semistable, resp. stable points:
/// `((n/2, n), (n/2 + 1, n))`.
pub fn minimal_elements(n: usize) -> Result<(PlueckerIndex, PlueckerIndex)> {
    if n % 2 != 0 || n < 4 {
        return param(format!("n = {n} must be even and at least 4"));
    }
    let h = n / 2;
    Ok((PlueckerIndex::checked(h, n, n)?, PlueckerIndex::checked(h + 1, n, n)?))
}

/// Bruhat-minimal elements of `{w : status(w) >= at_least}` found by scanning
/// all of `I(2,n)`.
pub fn scan_minimal(n: usize, at_least: StabilityStatus) -> Result<Vec<PlueckerIndex>> {
    let mut hits = Vec::new();
    for w in pairs(n) {
        if pair_status(w, n)? >= at_least {
            hits.push(w);
        }
    }
    Ok(hits
        .iter()
        .copied()
        .filter(|&w| !hits.iter().any(|&u| u != w && bruhat_leq(u, w)))
        .collect())
}
