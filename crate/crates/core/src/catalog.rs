//! Named invariants and displayed relations for the worked examples:
//! the full `G_{2,6}`, the Schubert varieties `X(6,8)` in `G_{2,8}` and
//! `X(7,10)` in `G_{2,10}`, and the toric Richardson family.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::expr::parse_formal;
use crate::formal::FormalPolynomial;
use crate::plucker::{Monomial, Polynomial};
use crate::standard::SupportRange;
use crate::weyl::PlueckerIndex;

fn mono(factors: &[(u8, u8)]) -> Monomial {
    Monomial::from_factors(factors.iter().map(|&(i, j)| PlueckerIndex::of(i, j)).collect())
}

const G26_X: [&[(u8, u8)]; 5] = [
    &[(1, 4), (2, 5), (3, 6)],
    &[(1, 2), (3, 5), (4, 6)],
    &[(1, 3), (2, 5), (4, 6)],
    &[(1, 2), (3, 4), (5, 6)],
    &[(1, 3), (2, 4), (5, 6)],
];

const G26_Y: [&[(u8, u8)]; 2] =
    [&[(1, 2), (1, 4), (2, 4), (3, 5), (3, 6), (5, 6)], &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]];

const G26_W: [&[(u8, u8)]; 3] = [
    &[(1, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6), (5, 6)],
    &[(1, 2), (1, 2), (1, 3), (2, 3), (3, 5), (4, 5), (4, 6), (4, 6), (5, 6)],
    &[(1, 2), (1, 3), (1, 3), (2, 3), (2, 4), (4, 5), (4, 6), (5, 6), (5, 6)],
];

const X68_X: [&[(u8, u8)]; 9] = [
    &[(1, 2), (3, 4), (5, 7), (6, 8)],
    &[(1, 2), (3, 5), (4, 7), (6, 8)],
    &[(1, 3), (2, 5), (4, 7), (6, 8)],
    &[(1, 3), (2, 4), (5, 7), (6, 8)],
    &[(1, 4), (2, 5), (3, 7), (6, 8)],
    &[(1, 4), (2, 6), (3, 7), (5, 8)],
    &[(1, 3), (2, 6), (4, 7), (5, 8)],
    &[(1, 2), (3, 6), (4, 7), (5, 8)],
    &[(1, 5), (2, 6), (3, 7), (4, 8)],
];

const X68_Y: [&[(u8, u8)]; 5] = [
    &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 7), (5, 7), (6, 8), (6, 8)],
    &[(1, 2), (1, 4), (2, 4), (3, 5), (3, 7), (5, 7), (6, 8), (6, 8)],
    &[(1, 2), (1, 4), (2, 4), (3, 6), (3, 7), (5, 7), (5, 8), (6, 8)],
    &[(1, 2), (1, 3), (2, 3), (4, 6), (4, 7), (5, 7), (5, 8), (6, 8)],
    &[(1, 2), (1, 5), (2, 5), (3, 6), (3, 7), (4, 7), (4, 8), (6, 8)],
];

const X710_X: [&[(u8, u8)]; 14] = [
    &[(1, 2), (3, 4), (5, 8), (6, 9), (7, 10)],
    &[(1, 2), (3, 5), (4, 8), (6, 9), (7, 10)],
    &[(1, 2), (3, 6), (4, 8), (5, 9), (7, 10)],
    &[(1, 2), (3, 7), (4, 8), (5, 9), (6, 10)],
    &[(1, 3), (2, 6), (4, 8), (5, 9), (7, 10)],
    &[(1, 3), (2, 5), (4, 8), (6, 9), (7, 10)],
    &[(1, 3), (2, 4), (5, 8), (6, 9), (7, 10)],
    &[(1, 3), (2, 7), (4, 8), (5, 9), (6, 10)],
    &[(1, 4), (2, 6), (3, 8), (5, 9), (7, 10)],
    &[(1, 4), (2, 5), (3, 8), (6, 9), (7, 10)],
    &[(1, 4), (2, 7), (3, 8), (5, 9), (6, 10)],
    &[(1, 5), (2, 6), (3, 8), (4, 9), (7, 10)],
    &[(1, 5), (2, 7), (3, 8), (4, 9), (6, 10)],
    &[(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)],
];

const X710_Y: [&[(u8, u8)]; 3] = [
    &[(1, 2), (1, 3), (2, 3), (4, 7), (4, 8), (5, 8), (5, 9), (6, 9), (6, 10), (7, 10)],
    &[(1, 2), (1, 3), (2, 3), (4, 6), (4, 8), (5, 8), (5, 9), (6, 9), (7, 10), (7, 10)],
    &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 8), (5, 8), (6, 9), (6, 9), (7, 10), (7, 10)],
];

const G26_IDENTITIES: [(&str, &str); 6] = [
    ("X1*X4", "Y1 - X2*X5 + X4*X5 - X4^2 + X2*X4"),
    ("X3*X4", "X2*X5 - Y2"),
    ("X3*X4^2", "X2*X4*X5 - W1"),
    ("X1*X3*X4", "X1*X2*X5 - X2*X3*X5 + X2^2*X5 - W2 + X2*X5^2 - W3 - X2*X4*X5 + W1"),
    ("X2*X3*X4", "X2^2*X5 - W2"),
    ("X3*X4*X5", "X2*X5^2 - W3"),
];

const G26_RELATIONS: [(&str, &str); 1] =
    [("F", "x_3*x_4^2 - x_1*x_2*x_5 + x_1*x_3*x_4 - x_2*x_3*x_4 + x_2*x_3*x_5 - x_3*x_4*x_5")];

const X68_IDENTITIES: [(&str, &str); 9] = [
    ("X1*X3", "X2*X4 - Y1"),
    ("X1*X5", "Y2 - X2*X4 + X1*X2 + X1*X4 - X1^2"),
    ("X1*X6", "Y3 - X4*X8 + X1*X8 + X1*X4 - X1^2"),
    ("X1*X7", "X4*X8 - Y4"),
    ("X1*X9", "X5*X8 - X3*X8 + X1*X8 + X2*X4 - X1*X2 - Y1"),
    ("X2*X6", "X5*X8 - X4*X8 + X1*X8 + X2*X4 - X1*X2"),
    ("X2*X7", "X3*X8 - Y4 + Y1"),
    ("X2*X9", "Y5 - X3*X8 + X2*X8 + X2*X3 - X2^2"),
    ("X4*X9", "X3*X6 - X3*X8 + X4*X8 - Y1"),
];

const X68_RELATIONS: [(&str, &str); 5] = [
    ("F1", "x_2*x_6 - x_5*x_8 + x_4*x_8 - x_1*x_8 - x_2*x_4 + x_1*x_2"),
    ("F2", "x_1*x_3 - x_2*x_4 + x_3*x_6 - x_3*x_8 + x_4*x_8 - x_4*x_9"),
    ("F3", "x_2*x_7 - x_1*x_7 - x_3*x_6 + x_4*x_9"),
    ("F4", "x_3*x_6 - x_5*x_7"),
    ("F5", "x_1*x_3 - x_2*x_4 + x_2*x_6 - x_3*x_8 + x_4*x_8 - x_1*x_9"),
];

const X710_IDENTITIES: [(&str, &str); 3] = [("Y1", "X4*X7 - X1*X8"), ("Y2", "X3*X7 - X1*X5"), ("Y3", "X2*X7 - X1*X6")];

const X710_RELATIONS: [(&str, &str); 21] = [
    ("F1", "x_2*x_9 - x_3*x_10 + x_3*x_7 - x_1*x_3 - x_2*x_7 + x_1*x_2"),
    ("F2", "x_2*x_11 - x_4*x_10 + x_4*x_7 - x_1*x_4 - x_2*x_7 + x_1*x_2"),
    ("F3", "x_3*x_8 - x_4*x_5 - x_1*x_8 + x_4*x_7 - x_3*x_7 + x_1*x_5"),
    ("F4", "x_3*x_13 - x_4*x_12 + x_4*x_6 - x_2*x_4 - x_3*x_6 + x_2*x_3"),
    ("F5", "x_3*x_11 - x_4*x_9 + x_4*x_7 - x_1*x_4 - x_3*x_7 + x_1*x_3"),
    ("F6", "x_10*x_14 - x_9*x_13 + x_4*x_9 - x_4*x_10 + x_3*x_7 - x_1*x_3 - x_2*x_7 + x_1*x_2"),
    ("F7", "x_5*x_10 - x_6*x_9"),
    ("F8", "x_8*x_12 - x_5*x_13"),
    ("F9", "x_5*x_11 - x_8*x_9"),
    ("F10", "x_6*x_11 - x_8*x_10"),
    ("F11", "x_9*x_13 - x_11*x_12"),
    ("F12", "x_2*x_8 - x_4*x_6 - x_2*x_7 + x_4*x_7 - x_1*x_8 + x_1*x_6"),
    ("F13", "x_2*x_5 - x_3*x_6 + x_3*x_7 - x_1*x_5 + x_1*x_6 - x_2*x_7"),
    ("F14", "x_1*x_14 - x_4*x_9 + x_4*x_5 - x_1*x_4 + x_1*x_3 - x_1*x_5"),
    ("F15", "x_1*x_13 - x_4*x_10 + x_4*x_6 - x_1*x_4 - x_1*x_6 + x_1*x_2"),
    ("F16", "x_1*x_12 - x_3*x_10 + x_3*x_6 - x_1*x_3 - x_1*x_6 + x_1*x_2"),
    ("F17", "x_7*x_14 - x_8*x_9 + x_4*x_5 - x_4*x_7 + x_3*x_7 - x_1*x_5"),
    ("F18", "x_6*x_14 - x_8*x_12 + x_4*x_5 - x_4*x_6 + x_3*x_7 - x_1*x_5 + x_1*x_6 - x_2*x_7"),
    ("F19", "x_2*x_14 - x_4*x_12 + x_4*x_5 - x_2*x_4 - x_3*x_6 + x_2*x_3 + x_3*x_7 - x_1*x_5 + x_1*x_6 - x_2*x_7"),
    ("F20", "x_7*x_12 - x_5*x_10 + x_3*x_6 - x_3*x_7 + x_2*x_7 - x_1*x_6"),
    ("F21", "x_7*x_13 - x_8*x_10 + x_4*x_6 - x_4*x_7 + x_2*x_7 - x_1*x_6"),
];

/// `X_t = p_{1,t} ∏_{k=2}^{t-1} p_{k,h+k} ∏_{k=t}^{h} p_{k+1,h+k}` with
/// `h = n/2`, for `2 <= t <= h+1`.
pub fn x_t(n: usize, t: usize) -> Result<Monomial> {
    let h = n / 2;
    if n % 2 != 0 || n < 4 || t < 2 || t > h + 1 {
        return param(format!("X_t needs even n >= 4 and 2 <= t <= n/2+1, got n={n}, t={t}"));
    }
    let mut f = vec![PlueckerIndex::new(1, t)?];
    for k in 2..t {
        f.push(PlueckerIndex::new(k, h + k)?);
    }
    for k in t..=h {
        f.push(PlueckerIndex::new(k + 1, h + k)?);
    }
    Ok(Monomial::from_factors(f))
}

/// `Y_{i,j} = p_{1,i} p_{2,j} ∏_{l=3}^{i-1} p_{l,h+l} ∏_{l=i+1}^{j-1} p_{l,h+l-1}
/// ∏_{l=j+1}^{h+2} p_{l,h+l-2}` with `h = n/2`, for `3 <= i < j <= h+2`.
pub fn y_ij(n: usize, i: usize, j: usize) -> Result<Monomial> {
    let h = n / 2;
    if n % 2 != 0 || n < 6 || i < 3 || i >= j || j > h + 2 {
        return param(format!("Y_(i,j) needs even n >= 6 and 3 <= i < j <= n/2+2, got n={n}, i={i}, j={j}"));
    }
    let mut f = vec![PlueckerIndex::new(1, i)?, PlueckerIndex::new(2, j)?];
    for l in 3..i {
        f.push(PlueckerIndex::new(l, h + l)?);
    }
    for l in i + 1..j {
        f.push(PlueckerIndex::new(l, h + l - 1)?);
    }
    for l in j + 1..=h + 2 {
        f.push(PlueckerIndex::new(l, h + l - 2)?);
    }
    Ok(Monomial::from_factors(f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    G26,
    X68,
    X710,
    /// The toric range `v = (1,k+1)`, `w = (n/2+2, n)`.
    Richardson { n: usize, k: usize },
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::G26 => f.write_str("G26"),
            Case::X68 => f.write_str("X68"),
            Case::X710 => f.write_str("X710"),
            Case::Richardson { n, k } => write!(f, "Richardson(n={n},k={k})"),
        }
    }
}

impl std::str::FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Case> {
        match s.to_ascii_uppercase().as_str() {
            "G26" => Ok(Case::G26),
            "X68" => Ok(Case::X68),
            "X710" => Ok(Case::X710),
            _ => param(format!("unknown case '{s}' (expected G26, X68, X710)")),
        }
    }
}

/// A displayed identity between Plücker polynomials.
#[derive(Debug, Clone)]
pub struct Identity {
    pub label: String,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl Case {
    pub fn range(&self) -> Result<SupportRange> {
        match *self {
            Case::G26 => SupportRange::full(6),
            Case::X68 => SupportRange::schubert(8, PlueckerIndex::of(6, 8)),
            Case::X710 => SupportRange::schubert(10, PlueckerIndex::of(7, 10)),
            Case::Richardson { n, k } => {
                if n % 2 != 0 || k < 2 || k + 2 > n / 2 {
                    return param(format!("Richardson case needs even n and 2 <= k <= n/2-2, got n={n}, k={k}"));
                }
                SupportRange::richardson(n, PlueckerIndex::new(1, k + 1)?, PlueckerIndex::new(n / 2 + 2, n)?)
            }
        }
    }

    /// Degree-one generators with their labels, in the fixed naming order.
    pub fn generators(&self) -> Result<Vec<(String, Monomial)>> {
        Ok(match *self {
            Case::G26 => named("X", &G26_X),
            Case::X68 => named("X", &X68_X),
            Case::X710 => named("X", &X710_X),
            Case::Richardson { n, k } => {
                self.range()?;
                let mut out = Vec::new();
                for i in k + 1..=n / 2 + 2 {
                    for j in i + 1..=n / 2 + 2 {
                        out.push((format!("Y({i},{j})"), y_ij(n, i, j)?));
                    }
                }
                out
            }
        })
    }

    fn named_monomials(&self) -> Result<BTreeMap<String, Monomial>> {
        let mut out: BTreeMap<String, Monomial> = self.generators()?.into_iter().collect();
        let extra = match self {
            Case::G26 => [named("Y", &G26_Y), named("W", &G26_W)].concat(),
            Case::X68 => named("Y", &X68_Y),
            Case::X710 => named("Y", &X710_Y),
            Case::Richardson { .. } => Vec::new(),
        };
        out.extend(extra);
        Ok(out)
    }

    /// Displayed identities `lhs = rhs` in the Plücker coordinates.
    pub fn identities(&self) -> Result<Vec<Identity>> {
        if let Case::Richardson { n, k } = *self {
            return richardson_identities(n, k);
        }
        let table: &[(&str, &str)] = match self {
            Case::G26 => &G26_IDENTITIES,
            Case::X68 => &X68_IDENTITIES,
            Case::X710 => &X710_IDENTITIES,
            Case::Richardson { .. } => unreachable!(),
        };
        let names = self.named_monomials()?;
        table
            .iter()
            .map(|(lhs, rhs)| {
                Ok(Identity { label: (*lhs).to_string(), lhs: labelled_sum(lhs, &names)?, rhs: labelled_sum(rhs, &names)? })
            })
            .collect()
    }

    /// Displayed relations among the degree-one generators, `x_k` standing
    /// for the `k`-th generator.
    pub fn relations(&self) -> Result<Vec<(String, FormalPolynomial)>> {
        let table: &[(&str, &str)] = match self {
            Case::G26 => &G26_RELATIONS,
            Case::X68 => &X68_RELATIONS,
            Case::X710 => &X710_RELATIONS,
            Case::Richardson { .. } => &[],
        };
        table.iter().map(|(l, s)| Ok(((*l).to_string(), parse_formal(s)?))).collect()
    }
}

fn named(prefix: &str, table: &[&[(u8, u8)]]) -> Vec<(String, Monomial)> {
    table.iter().enumerate().map(|(k, f)| (format!("{prefix}{}", k + 1), mono(f))).collect()
}

/// Evaluates `c*A*B^2 - C + ...` over named monomials.
fn labelled_sum(s: &str, names: &BTreeMap<String, Monomial>) -> Result<Polynomial> {
    let mut total = Polynomial::zero();
    let mut sign = BigRational::one();
    for tok in s.split_whitespace() {
        match tok {
            "+" => sign = BigRational::one(),
            "-" => sign = -BigRational::one(),
            _ => {
                let mut m = Monomial::one();
                for f in tok.split('*') {
                    let (name, e) = match f.split_once('^') {
                        Some((b, e)) => (b, e.parse::<u32>().map_err(|_| Error::Parameter(format!("bad exponent in {f}")))?),
                        None => (f, 1),
                    };
                    let base = names.get(name).ok_or_else(|| Error::Parameter(format!("unknown name {name}")))?;
                    m = m.mul(&base.pow(e));
                }
                total.add_term(m, sign.clone());
            }
        }
    }
    Ok(total)
}

fn richardson_identities(n: usize, k: usize) -> Result<Vec<Identity>> {
    Case::Richardson { n, k }.range()?;
    let y = |i, j| y_ij(n, i, j).map(Polynomial::from);
    let top = n / 2 + 2;
    let mut out = Vec::new();
    for i in k + 1..=top {
        for j in i + 1..=top {
            for m in j + 1..=top {
                for s in m + 1..=top {
                    out.push(Identity {
                        label: format!("Y({i},{j})Y({m},{s})=Y({i},{m})Y({j},{s})"),
                        lhs: y(i, j)? * y(m, s)?,
                        rhs: y(i, m)? * y(j, s)?,
                    });
                    out.push(Identity {
                        label: format!("Y({i},{m})Y({j},{s})=Y({i},{s})Y({j},{m})"),
                        lhs: y(i, m)? * y(j, s)?,
                        rhs: y(i, s)? * y(j, m)?,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Fixed labels for the degree-one generators of a range, if it is one of
/// the worked examples or a member of the `X_t` / `Y_{i,j}` families.
pub fn label_table(range: &SupportRange) -> Option<Vec<(String, Monomial)>> {
    for case in [Case::G26, Case::X68, Case::X710] {
        if case.range().ok().as_ref() == Some(range) {
            return case.generators().ok();
        }
    }
    let (n, v, w) = (range.n(), range.v(), range.w());
    if n % 2 != 0 || v.i != 1 || w.j as usize != n {
        return None;
    }
    let (h, k) = (n / 2, v.j as usize - 1);
    if w.i as usize == h + 1 && k >= 1 && k <= h {
        return (k + 1..=h + 1).map(|t| Some((format!("X_{t}"), x_t(n, t).ok()?))).collect();
    }
    if w.i as usize == h + 2 && k >= 2 && k + 2 <= h {
        return Case::Richardson { n, k }.generators().ok();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_t_matches_g26_generators() {
        assert_eq!(x_t(6, 2).unwrap(), mono(G26_X[1]));
        assert_eq!(x_t(6, 4).unwrap().to_string(), "p[1,4]*p[2,5]*p[3,6]");
        assert!(x_t(6, 5).is_err());
    }

    #[test]
    fn y_ij_has_unit_content() {
        for (i, j) in [(3, 4), (3, 7), (5, 6), (4, 7)] {
            let m = y_ij(10, i, j).unwrap();
            let mut counts = [0; 11];
            for f in m.factors() {
                counts[f.i as usize] += 1;
                counts[f.j as usize] += 1;
            }
            assert!(counts[1..].iter().all(|&c| c == 1), "Y({i},{j}) = {m}");
        }
    }

    #[test]
    fn tables_parse() {
        for case in [Case::G26, Case::X68, Case::X710, Case::Richardson { n: 10, k: 2 }] {
            case.identities().unwrap();
            case.relations().unwrap();
        }
        assert_eq!(Case::X710.relations().unwrap().len(), 21);
        assert_eq!(Case::Richardson { n: 10, k: 2 }.identities().unwrap().len(), 2 * 5);
    }
}
