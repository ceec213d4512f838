//! Polynomials over abstract generator symbols `x_k` and `y_{i,j}`, used for
//! presentations of invariant rings.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::plucker::{write_terms, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `x_k`, 1-based.
    X(u32),
    /// `y_{i,j}`.
    Y(u8, u8),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(k) => write!(f, "x_{k}"),
            Var::Y(i, j) => write!(f, "y_{{{i},{j}}}"),
        }
    }
}

/// Commutative monomial in formal variables, stored as a sorted list with
/// repetition. Ordered so that higher degree comes first, then
/// lexicographically on the sorted variable list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FormalMonomial(Vec<Var>);

impl FormalMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(mut vars: Vec<Var>) -> Self {
        vars.sort_unstable();
        FormalMonomial(vars)
    }

    pub fn var(v: Var) -> Self {
        FormalMonomial(vec![v])
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> Vec<(Var, u32)> {
        let mut out: Vec<(Var, u32)> = Vec::new();
        for &v in &self.0 {
            match out.last_mut() {
                Some((u, e)) if *u == v => *e += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    pub fn mul(&self, other: &FormalMonomial) -> FormalMonomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FormalMonomial::new(v)
    }

    /// `self / other` if `other` divides `self`.
    pub fn divide(&self, other: &FormalMonomial) -> Option<FormalMonomial> {
        let mut rest = self.0.clone();
        for v in &other.0 {
            let pos = rest.iter().position(|u| u == v)?;
            rest.remove(pos);
        }
        Some(FormalMonomial(rest))
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().filter(|&&u| u == v).count() as u32
    }
}

impl Ord for FormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.len().cmp(&self.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.exponents().into_iter().map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") }).collect();
        f.write_str(&parts.join("*"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct FormalPolynomial {
    terms: BTreeMap<FormalMonomial, BigRational>,
}

impl FormalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(FormalMonomial::one(), c)
    }

    pub fn term(m: FormalMonomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: FormalMonomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(FormalMonomial::var(v))
    }

    pub fn x(k: u32) -> Self {
        Self::var(Var::X(k))
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

    /// Terms in display order.
    pub fn terms(&self) -> impl Iterator<Item = (&FormalMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &FormalMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: FormalMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FormalPolynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars().iter().copied()).collect()
    }

    pub fn max_x(&self) -> u32 {
        self.variables().into_iter().filter_map(|v| if let Var::X(k) = v { Some(k) } else { None }).max().unwrap_or(0)
    }

    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let rest = m.divide(&FormalMonomial::var(v)).unwrap();
            out.add_term(rest, c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn evaluate(&self, value: impl Fn(Var) -> BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.vars() {
                t *= value(*v);
            }
            total += t;
        }
        total
    }

    /// Replaces each variable by a Plücker polynomial.
    pub fn substitute(&self, value: impl Fn(Var) -> Polynomial) -> Polynomial {
        let mut cache: BTreeMap<Var, Polynomial> = BTreeMap::new();
        let mut total = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for v in m.vars() {
                let p = cache.entry(*v).or_insert_with(|| value(*v));
                t = &t * &*p;
            }
            total = total + t;
        }
        total
    }

    /// Exactly two terms with coefficients `+1` and `-1`.
    pub fn is_binomial(&self) -> bool {
        let cs: Vec<&BigRational> = self.terms.values().collect();
        cs.len() == 2 && {
            let one = BigRational::one();
            (*cs[0] == one && *cs[1] == -one.clone()) || (*cs[0] == -one.clone() && *cs[1] == one)
        }
    }

    /// Scales so the first term in display order has coefficient 1.
    pub fn normalized(&self) -> Self {
        match self.terms.values().next() {
            None => Self::zero(),
            Some(c) => self.scale(&(BigRational::one() / c)),
        }
    }
}

impl FromIterator<(FormalMonomial, BigRational)> for FormalPolynomial {
    fn from_iter<I: IntoIterator<Item = (FormalMonomial, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl fmt::Display for FormalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(m, c)| (m, c, m.degree() == 0)))
    }
}

impl Serialize for FormalPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a FormalPolynomial> for &'a FormalPolynomial {
    type Output = FormalPolynomial;
    fn add(self, rhs: &'a FormalPolynomial) -> FormalPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a FormalPolynomial> for &'a FormalPolynomial {
    type Output = FormalPolynomial;
    fn sub(self, rhs: &'a FormalPolynomial) -> FormalPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a FormalPolynomial> for &'a FormalPolynomial {
    type Output = FormalPolynomial;
    fn mul(self, rhs: &'a FormalPolynomial) -> FormalPolynomial {
        let mut out = FormalPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &FormalPolynomial {
    type Output = FormalPolynomial;
    fn neg(self) -> FormalPolynomial {
        self.scale(&-BigRational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<FormalPolynomial> for FormalPolynomial {
            type Output = FormalPolynomial;
            fn $f(self, rhs: FormalPolynomial) -> FormalPolynomial { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a FormalPolynomial> for FormalPolynomial {
            type Output = FormalPolynomial;
            fn $f(self, rhs: &'a FormalPolynomial) -> FormalPolynomial { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
