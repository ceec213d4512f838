//! Standard monomials and the straightening law for `G_{2,n}` and its
//! Schubert and Richardson subvarieties.
//!
//! A monomial `p_{t1} ... p_{tm}` is standard on `X^v_w` when its factors
//! form a chain `v <= t1 <= ... <= tm <= w`. Sorting the factors
//! lexicographically, this holds iff the second components are weakly
//! increasing and the endpoints are inside `[v, w]`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{param, Result};
use crate::plucker::{Monomial, Polynomial};
use crate::weyl::{bruhat_leq, pairs, PlueckerIndex};

/// Guard against runaway rewriting; a correct run never comes close.
const MAX_REWRITES: usize = 1_000_000;

/// The window `[v, w]` of a Richardson variety `X^v_w` in `G_{2,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SupportRange {
    n: usize,
    v: PlueckerIndex,
    w: PlueckerIndex,
}

impl SupportRange {
    pub fn richardson(n: usize, v: PlueckerIndex, w: PlueckerIndex) -> Result<Self> {
        if n < 2 || n > u8::MAX as usize {
            return param(format!("n = {n} out of range"));
        }
        if w.j as usize > n {
            return param(format!("{w} exceeds n = {n}"));
        }
        if !bruhat_leq(v, w) {
            return param(format!("empty range: {v} is not <= {w}"));
        }
        Ok(SupportRange { n, v, w })
    }

    pub fn schubert(n: usize, w: PlueckerIndex) -> Result<Self> {
        Self::richardson(n, PlueckerIndex::of(1, 2), w)
    }

    pub fn full(n: usize) -> Result<Self> {
        if n < 2 {
            return param(format!("n = {n} out of range"));
        }
        Self::schubert(n, PlueckerIndex::new(n - 1, n)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn v(&self) -> PlueckerIndex {
        self.v
    }

    pub fn w(&self) -> PlueckerIndex {
        self.w
    }

    pub fn is_schubert(&self) -> bool {
        self.v == PlueckerIndex::of(1, 2)
    }

    pub fn contains(&self, t: PlueckerIndex) -> bool {
        bruhat_leq(self.v, t) && bruhat_leq(t, self.w)
    }

    /// The poset `[v, w]` in lexicographic order.
    pub fn elements(&self) -> Vec<PlueckerIndex> {
        pairs(self.n).into_iter().filter(|&t| self.contains(t)).collect()
    }
}

/// True iff the sorted factors form a chain (no range bounds).
pub fn is_chain(m: &Monomial) -> bool {
    first_descent(m.factors()).is_none()
}

pub fn is_standard(m: &Monomial, range: &SupportRange) -> bool {
    let f = m.factors();
    match (f.first(), f.last()) {
        (Some(&lo), Some(&hi)) => {
            is_chain(m) && bruhat_leq(range.v, lo) && bruhat_leq(hi, range.w) && hi.j as usize <= range.n
        }
        _ => true,
    }
}

// For lexicographically sorted factors, an incomparable pair exists iff
// some adjacent pair has a strictly decreasing second component.
fn first_descent(f: &[PlueckerIndex]) -> Option<usize> {
    f.windows(2).position(|w| w[0].j > w[1].j)
}

/// How to pick the incomparable pair to rewrite. Every choice yields the same
/// normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// The first adjacent descent in the sorted factor list.
    Leftmost,
    /// A uniformly random incomparable pair from a seeded generator.
    Seeded(u64),
}

/// Straightening with a fixed range and pair-selection strategy.
///
/// One rewrite step replaces an incomparable pair `p_{ab} p_{cd}` with
/// `a < c < d < b` by `p_{ad} p_{cb} - p_{ac} p_{db}`. Both new monomials
/// are strictly smaller than the old one in the lexicographic order of
/// sorted factor lists (the smallest changed factor `(a,b)` is replaced by
/// `(a,d)` resp. `(a,c)`), so processing pending monomials from the largest
/// down visits each monomial at most once and terminates.
pub struct Straightener {
    range: SupportRange,
    strategy: Strategy,
    rng: Option<ChaCha8Rng>,
}

impl Straightener {
    pub fn new(range: SupportRange) -> Self {
        Self::with_strategy(range, Strategy::Leftmost)
    }

    pub fn with_strategy(range: SupportRange, strategy: Strategy) -> Self {
        let rng = match strategy {
            Strategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            Strategy::Leftmost => None,
        };
        Straightener { range, strategy, rng }
    }

    pub fn range(&self) -> &SupportRange {
        &self.range
    }

    fn alive(&self, t: &PlueckerIndex) -> bool {
        bruhat_leq(*t, self.range.w)
    }

    fn pick(&mut self, f: &[PlueckerIndex]) -> (usize, usize) {
        match self.strategy {
            Strategy::Leftmost => {
                let k = first_descent(f).expect("caller checked non-standard");
                (k, k + 1)
            }
            Strategy::Seeded(_) => {
                let mut bad = Vec::new();
                for a in 0..f.len() {
                    for b in a + 1..f.len() {
                        if !f[a].comparable(f[b]) {
                            bad.push((a, b));
                        }
                    }
                }
                let rng = self.rng.as_mut().unwrap();
                bad[rng.gen_range(0..bad.len())]
            }
        }
    }

    /// Normal form of a single monomial with integer coefficients.
    pub fn straighten_monomial(&mut self, m: &Monomial) -> BTreeMap<Monomial, BigInt> {
        let mut out = BTreeMap::new();
        if !m.factors().iter().all(|t| self.alive(t)) {
            return out;
        }
        let mut pending: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        pending.insert(m.clone(), BigInt::one());
        let mut steps = 0usize;
        while let Some((mono, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            if is_chain(&mono) {
                if mono.factors().first().is_none_or(|&lo| bruhat_leq(self.range.v, lo)) {
                    out.insert(mono, c);
                }
                continue;
            }
            steps += 1;
            assert!(steps <= MAX_REWRITES, "straightening exceeded {MAX_REWRITES} rewrites on {m}");
            let (x, y) = self.pick(mono.factors());
            let f = mono.factors();
            let (p, q) = if f[x].i < f[y].i { (f[x], f[y]) } else { (f[y], f[x]) };
            // p = (a,b), q = (c,d) with a < c < d < b
            let (a, b, cc, d) = (p.i, p.j, q.i, q.j);
            debug_assert!(a < cc && cc < d && d < b);
            let rest: Vec<PlueckerIndex> =
                f.iter().enumerate().filter(|&(k, _)| k != x && k != y).map(|(_, t)| *t).collect();
            for (s, t, sign) in [
                (PlueckerIndex::of(a, d), PlueckerIndex::of(cc, b), 1i32),
                (PlueckerIndex::of(a, cc), PlueckerIndex::of(d, b), -1),
            ] {
                if !self.alive(&s) || !self.alive(&t) {
                    continue;
                }
                let mut fac = rest.clone();
                fac.push(s);
                fac.push(t);
                let next = Monomial::from_factors(fac);
                let entry = pending.entry(next).or_insert_with(BigInt::zero);
                if sign > 0 {
                    *entry += &c;
                } else {
                    *entry -= &c;
                }
            }
        }
        out
    }

    pub fn straighten(&mut self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            for (nm, k) in self.straighten_monomial(m) {
                out.add_term(nm, c * BigRational::from_integer(k));
            }
        }
        out
    }
}

/// Expansion of `p` in the standard-monomial basis of `X^v_w`.
pub fn straighten(p: &Polynomial, range: &SupportRange) -> Polynomial {
    Straightener::new(*range).straighten(p)
}

pub fn straighten_with(p: &Polynomial, range: &SupportRange, strategy: Strategy) -> Polynomial {
    Straightener::with_strategy(*range, strategy).straighten(p)
}

/// All standard monomials of degree `m` on the range, chains enumerated
/// lexicographically.
pub fn standard_basis(range: &SupportRange, m: usize) -> Vec<Monomial> {
    let elems = range.elements();
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(m);
    fn rec(elems: &[PlueckerIndex], from: usize, m: usize, chain: &mut Vec<PlueckerIndex>, out: &mut Vec<Monomial>) {
        if chain.len() == m {
            out.push(Monomial::from_sorted(chain.clone()));
            return;
        }
        for k in from..elems.len() {
            if chain.last().is_none_or(|&last| bruhat_leq(last, elems[k])) {
                chain.push(elems[k]);
                rec(elems, k, m, chain, out);
                chain.pop();
            }
        }
    }
    rec(&elems, 0, m, &mut chain, &mut out);
    out
}

/// Number of degree-`m` standard monomials, counted with memoisation on
/// `(last element, remaining degree)`.
pub fn count_standard(range: &SupportRange, m: usize) -> u128 {
    let elems = range.elements();
    let mut memo: HashMap<(usize, usize), u128> = HashMap::new();
    fn rec(elems: &[PlueckerIndex], last: usize, left: usize, memo: &mut HashMap<(usize, usize), u128>) -> u128 {
        if left == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(&(last, left)) {
            return c;
        }
        let total = (last..elems.len()).filter(|&k| bruhat_leq(elems[last], elems[k])).map(|k| rec(elems, k, left - 1, memo)).sum();
        memo.insert((last, left), total);
        total
    }
    if m == 0 {
        return 1;
    }
    (0..elems.len()).map(|k| rec(&elems, k, m - 1, &mut memo)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plucker::{evaluate, random_plane_matrix, random_schubert_point};

    fn pi(i: u8, j: u8) -> PlueckerIndex {
        PlueckerIndex::of(i, j)
    }

    fn v(i: u8, j: u8) -> Polynomial {
        Polynomial::var(pi(i, j))
    }

    fn mono(f: &[(u8, u8)]) -> Monomial {
        Monomial::from_factors(f.iter().map(|&(i, j)| pi(i, j)).collect())
    }

    #[test]
    fn standardness_examples() {
        let g26 = SupportRange::full(6).unwrap();
        assert!(is_standard(&mono(&[(1, 4), (2, 5), (3, 6)]), &g26));
        assert!(!is_standard(&mono(&[(1, 4), (2, 3)]), &SupportRange::full(4).unwrap()));
        let w = SupportRange::schubert(6, pi(3, 6)).unwrap();
        assert!(!is_standard(&mono(&[(1, 2), (4, 5)]), &w));
        let r = SupportRange::richardson(6, pi(1, 3), pi(5, 6)).unwrap();
        assert!(!is_standard(&mono(&[(1, 2), (3, 4)]), &r));
        assert!(is_standard(&Monomial::one(), &r));
    }

    #[test]
    fn straighten_examples() {
        let g26 = SupportRange::full(6).unwrap();
        assert_eq!(straighten(&(v(2, 5) * v(3, 4)), &g26), v(2, 4) * v(3, 5) - v(2, 3) * v(4, 5));
        let g24 = SupportRange::full(4).unwrap();
        assert_eq!(straighten(&(v(1, 4) * v(2, 3)), &g24), v(1, 3) * v(2, 4) - v(1, 2) * v(3, 4));
        assert_eq!(straighten(&(v(1, 2) * v(3, 4)), &g24), v(1, 2) * v(3, 4));
    }

    #[test]
    fn schubert_restriction_drops_dead_variables() {
        let w = SupportRange::schubert(6, pi(3, 6)).unwrap();
        assert!(straighten(&v(4, 5), &w).is_zero());
        // p16 p25 = p15 p26 - p12 p56, and p56 dies on X(3,6)
        assert_eq!(straighten(&(v(1, 6) * v(2, 5)), &w), v(1, 5) * v(2, 6));
    }

    #[test]
    fn basis_examples() {
        let g24 = SupportRange::full(4).unwrap();
        assert_eq!(standard_basis(&g24, 1).len(), 6);
        assert_eq!(standard_basis(&g24, 2).len(), 20);
        let w = SupportRange::schubert(6, pi(3, 6)).unwrap();
        let b = standard_basis(&w, 1);
        assert_eq!(b.len(), 12);
        assert!(b.iter().all(|m| m.factors()[0].i <= 3));
    }

    // brute force over all multisets of pairs
    fn multichain_oracle(range: &SupportRange, m: usize) -> usize {
        let elems = range.elements();
        let mut count = 0;
        let mut idx = vec![0usize; m];
        loop {
            if idx.windows(2).all(|w| w[0] <= w[1]) {
                let f: Vec<_> = idx.iter().map(|&k| elems[k]).collect();
                let mut ok = true;
                for a in 0..m {
                    for b in 0..m {
                        if a != b && !f[a].comparable(f[b]) {
                            ok = false;
                        }
                    }
                }
                if ok {
                    count += 1;
                }
            }
            let mut k = 0;
            loop {
                if k == m {
                    return count;
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn basis_matches_oracle_and_count() {
        for (range, m) in [
            (SupportRange::full(4).unwrap(), 2),
            (SupportRange::full(5).unwrap(), 3),
            (SupportRange::schubert(6, pi(3, 6)).unwrap(), 3),
            (SupportRange::richardson(6, pi(1, 3), pi(4, 6)).unwrap(), 3),
        ] {
            let b = standard_basis(&range, m);
            assert_eq!(b.len(), multichain_oracle(&range, m));
            assert_eq!(b.len() as u128, count_standard(&range, m));
            assert!(b.iter().all(|x| is_standard(x, &range)));
        }
    }

    #[test]
    fn straightening_preserves_values() {
        let g = SupportRange::full(6).unwrap();
        let p = v(3, 6) * v(2, 5) * v(1, 4) * v(4, 5) - v(1, 6) * v(2, 3) * v(3, 5) * v(2, 4);
        let s = straighten(&p, &g);
        for seed in 0..10 {
            let a = random_plane_matrix(6, seed);
            assert_eq!(evaluate(&p, &a), evaluate(&s, &a));
        }
        let w = SupportRange::schubert(6, pi(4, 6)).unwrap();
        let s = straighten(&p, &w);
        for seed in 0..10 {
            let a = random_schubert_point(&w, seed);
            assert_eq!(evaluate(&p, &a), evaluate(&s, &a));
        }
    }

    #[test]
    fn strategies_agree() {
        let g = SupportRange::full(7).unwrap();
        let p = v(1, 7) * v(2, 6) * v(3, 5) * v(4, 5) * v(2, 3);
        let a = straighten_with(&p, &g, Strategy::Leftmost);
        for seed in 0..5 {
            assert_eq!(straighten_with(&p, &g, Strategy::Seeded(seed)), a);
        }
    }
}
