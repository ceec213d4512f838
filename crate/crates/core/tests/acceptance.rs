//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plucker_git::catalog::{x_t, Case};
use plucker_git::expr::parse_formal;
use plucker_git::geometry::{partner, witness_monomial, xi_point};
use plucker_git::invariants::{in_span, product_matrix};
use plucker_git::presentations::{matching_probes, toric_relations, ReductionSystem};
use plucker_git::standard::straighten_with;
use plucker_git::weyl::pairs;
use plucker_git::{
    confluence_check, degree_one_generation_check, evaluate, hilbert_count, invariant_basis,
    is_binomial_presentation, is_standard, jacobian, minimal_elements, multiplication_kernel, catalog_suite,
    random_plane_matrix, singular_candidates, straighten, Monomial, PlueckerIndex, Polynomial, Strategy, SupportRange,
};

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn pi(i: usize, j: usize) -> PlueckerIndex {
    PlueckerIndex::new(i, j).unwrap()
}

fn q(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// Status of the pair (i,j) from scaled prefix sums of its weight:
// 2 = stable, 1 = semistable only, 0 = neither.
fn oracle_status(i: usize, j: usize, n: usize) -> u8 {
    let d = (n / 2) as i64;
    let mut prefix = 0i64;
    let (mut stable, mut semistable) = (true, true);
    for r in 1..n {
        let inside = if r == i || r == j { 1 } else { 0 };
        prefix += n as i64 * d * inside - 2 * d;
        stable &= prefix <= -(n as i64);
        semistable &= prefix <= 0;
    }
    if stable {
        2
    } else if semistable {
        1
    } else {
        0
    }
}

fn criterion_1() -> Outcome {
    for n in [4, 6, 8, 10, 12] {
        let (ss, s) = minimal_elements(n).map_err(|e| e.to_string())?;
        check(ss == pi(n / 2, n) && s == pi(n / 2 + 1, n), format!("n={n}: got {ss}, {s}"))?;
        let all: Vec<(usize, usize)> = pairs(n).into_iter().map(|p| (p.i as usize, p.j as usize)).collect();
        let minimal = |level: u8| -> Vec<(usize, usize)> {
            let hits: Vec<_> = all.iter().copied().filter(|&(i, j)| oracle_status(i, j, n) >= level).collect();
            hits.iter().copied().filter(|&(a, b)| !hits.iter().any(|&(c, e)| (c, e) != (a, b) && c <= a && e <= b)).collect()
        };
        check(minimal(1) == vec![(n / 2, n)], format!("n={n}: semistable scan {:?}", minimal(1)))?;
        check(minimal(2) == vec![(n / 2 + 1, n)], format!("n={n}: stable scan {:?}", minimal(2)))?;
    }
    Ok("n in {4,6,8,10,12} match the exhaustive scan".into())
}

fn criterion_2() -> Outcome {
    let h = |r: &SupportRange| hilbert_count(r, 1).map_err(|e| e.to_string());
    check(h(&Case::G26.range().unwrap())? == 5, "G(2,6)")?;
    check(h(&Case::X68.range().unwrap())? == 9, "X(6,8)")?;
    check(h(&Case::X710.range().unwrap())? == 14, "X(7,10)")?;
    for n in [4, 6, 8, 10, 12] {
        check(h(&SupportRange::schubert(n, pi(n / 2, n)).unwrap())? == 1, format!("X(n/2,n), n={n}"))?;
        check(h(&SupportRange::schubert(n, pi(n / 2 + 1, n)).unwrap())? == n / 2, format!("X(n/2+1,n), n={n}"))?;
    }
    Ok("5, 9, 14, 1, n/2".into())
}

fn criterion_3() -> Outcome {
    let cases = [Case::G26, Case::X68, Case::X710, Case::Richardson { n: 10, k: 2 }, Case::Richardson { n: 10, k: 3 }];
    let mut summary = Vec::new();
    for case in cases {
        let rep = catalog_suite(case).map_err(|e| e.to_string())?;
        let bad: Vec<String> =
            rep.failures().map(|r| format!("{} (diff {})", r.relation_label, r.discrepancy.clone().unwrap_or_default())).collect();
        check(bad.is_empty(), format!("{case}: {bad:?}"))?;
        summary.push(format!("{case}:{}", rep.records.len()));
    }
    let counts: Vec<usize> = cases[..3].iter().map(|c| catalog_suite(*c).unwrap().records.len()).collect();
    check(counts == [2 + 4 + 1, 9 + 5, 3 + 21], format!("record counts {counts:?}"))?;
    let a = parse_formal("x_1*x_6 - x_4*x_6 - x_2*x_7 + x_4*x_7 - x_1*x_8 + x_2*x_8").unwrap();
    let b = parse_formal("x_2*x_8 - x_4*x_6 - x_2*x_7 + x_4*x_7 - x_1*x_8 + x_1*x_6").unwrap();
    check(a == b, "the two printed forms of the x_1*x_6 relation differ")?;
    Ok(summary.join(" "))
}

fn criterion_4() -> Outcome {
    let g26 = Case::G26.range().unwrap();
    check(multiplication_kernel(&g26, 2).unwrap().is_empty(), "G(2,6) has a quadratic relation")?;
    let k3 = multiplication_kernel(&g26, 3).unwrap();
    let f = Case::G26.relations().unwrap().remove(0).1;
    check(in_span(&k3, &f), "F not in the cubic kernel")?;
    let k68 = multiplication_kernel(&Case::X68.range().unwrap(), 2).unwrap();
    check(k68.len() >= 5, format!("X(6,8) kernel dim {}", k68.len()))?;
    for (l, r) in Case::X68.relations().unwrap() {
        check(in_span(&k68, &r), format!("X(6,8) {l} not in kernel"))?;
    }
    let k710 = multiplication_kernel(&Case::X710.range().unwrap(), 2).unwrap();
    for (l, r) in Case::X710.relations().unwrap() {
        check(in_span(&k710, &r), format!("X(7,10) {l} not in kernel"))?;
    }
    Ok(format!("dims: G26 d=2 0, d=3 {}; X68 {}; X710 {}", k3.len(), k68.len(), k710.len()))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for n in [6, 8, 10] {
        let h = n / 2;
        for k in 2..=h {
            let range = SupportRange::richardson(n, pi(1, k + 1), pi(h + 1, n)).unwrap();
            let gens = invariant_basis(&range, 1).unwrap();
            let expect: Vec<Monomial> = (k + 1..=h + 1).map(|t| x_t(n, t).unwrap()).collect();
            check(gens.values == expect, format!("n={n} k={k}: generators are not X_t"))?;
            for d in 1..=3 {
                let size = hilbert_count(&range, d).unwrap();
                check(size == binomial(h - k + d, d), format!("n={n} k={k} d={d}: {size}"))?;
                if d >= 2 {
                    let pm = product_matrix(&range, d).unwrap();
                    check(pm.all_products_standard, format!("n={n} k={k} d={d}: a product is not standard"))?;
                    let mut distinct: Vec<Monomial> = pm
                        .columns
                        .iter()
                        .map(|c| c.iter().fold(Monomial::one(), |acc, &i| acc.mul(&pm.generators.values[i])))
                        .collect();
                    distinct.sort();
                    distinct.dedup();
                    check(distinct.len() == pm.columns.len(), format!("n={n} k={k} d={d}: products collide"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n,k,d) cases"))
}

fn criterion_6() -> Outcome {
    let rep = confluence_check(&ReductionSystem::toric(6), &matching_probes(6)).map_err(|e| e.to_string())?;
    check(rep.confluent, "toric system not confluent")?;
    for p in &rep.probes {
        check(p.normal_forms == ["y_{1,6}*y_{2,5}*y_{3,4}"], format!("{} -> {:?}", p.probe, p.normal_forms))?;
    }
    for k in [2, 3] {
        check(is_binomial_presentation(&toric_relations(10, k).unwrap()), format!("k={k} not binomial"))?;
    }
    Ok(format!("{} probes, unique normal form y_{{1,6}}*y_{{2,5}}*y_{{3,4}}", rep.probes.len()))
}

fn criterion_7() -> Outcome {
    let f = Case::G26.relations().unwrap().remove(0).1;
    let rep = jacobian(&[f], &[q(1), q(0), q(0), q(0), q(0)], 1).map_err(|e| e.to_string())?;
    check(rep.matrix[0].iter().all(Zero::is_zero) && rep.singular, "gradient of F at (1,0,0,0,0)")?;
    let fs: Vec<_> = Case::X68.relations().unwrap().into_iter().map(|(_, f)| f).collect();
    let mut p = vec![q(0); 9];
    p[8] = q(1);
    let rep = jacobian(&fs, &p, 4).map_err(|e| e.to_string())?;
    check(rep.matrix.len() == 5 && rep.matrix[0].len() == 9, "shape")?;
    let nonzero: Vec<(usize, usize, String)> = rep
        .matrix
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(j, x)| (i + 1, j + 1, x.to_string())))
        .collect();
    let expect = vec![(2, 4, "-1".to_string()), (3, 4, "1".to_string()), (5, 1, "-1".to_string())];
    check(nonzero == expect, format!("nonzero entries {nonzero:?}"))?;
    check(rep.rank == 2 && rep.singular, format!("rank {}", rep.rank))?;
    Ok("G26 gradient 0; X68 rank 2 < 4".into())
}

fn criterion_8() -> Outcome {
    let mut sizes = Vec::new();
    for n in [6, 8, 10] {
        let set = singular_candidates(pi(n - 1, n), n, 0).map_err(|e| e.to_string())?;
        check(set.l_size == binomial(n, n / 2) / 2, format!("n={n}: L_size {}", set.l_size))?;
        check(set.k.len() == 2 * set.pairs.len(), format!("n={n}: pairing not perfect"))?;
        for (a, b) in &set.pairs {
            check(a != b && partner(b, n).unwrap() == *a, format!("n={n}: {a} <-> {b}"))?;
        }
        let h = n / 2;
        let diag = Monomial::from_factors((1..=h).map(|k| pi(k, h + k)).collect());
        for seed in 0..5 {
            let xi = xi_point(n, seed).unwrap();
            let base = evaluate(&Polynomial::monomial(diag.clone()), &xi.matrix);
            for v in &set.k {
                let Ok(m) = witness_monomial(v, n) else { continue };
                let at = evaluate(&Polynomial::monomial(m), &xi.translate(v));
                check(!at.is_zero() && (at == base || at == -base.clone()), format!("n={n} v={v} seed={seed}"))?;
            }
        }
        sizes.push(set.l_size);
    }
    Ok(format!("L_size {sizes:?}"))
}

fn random_polynomial(rng: &mut ChaCha8Rng, n: usize) -> Polynomial {
    let all = pairs(n);
    (0..rng.gen_range(1..=4))
        .map(|_| {
            let deg = rng.gen_range(1..=3);
            let m = Monomial::from_factors((0..deg).map(|_| all[rng.gen_range(0..all.len())]).collect());
            (m, q(rng.gen_range(-9..=9)))
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..200u64 {
        let n = rng.gen_range(4..=8);
        let range = SupportRange::full(n).unwrap();
        let p = random_polynomial(&mut rng, n);
        let s = straighten(&p, &range);
        check(s.terms().all(|(m, _)| is_standard(m, &range)), format!("sample {k}: non-standard output"))?;
        check(straighten(&s, &range) == s, format!("sample {k}: not idempotent"))?;
        check(straighten_with(&p, &range, Strategy::Seeded(k)) == s, format!("sample {k}: strategy dependent"))?;
        for j in 0..20 {
            let a = random_plane_matrix(n, k * 20 + j);
            check(evaluate(&p, &a) == evaluate(&s, &a), format!("sample {k}: value changed at point {j}"))?;
        }
    }
    Ok("200 polynomials x 20 points".into())
}

fn criterion_10() -> Outcome {
    let mut ranges = vec![
        ("G(2,6)".to_string(), Case::G26.range().unwrap()),
        ("X(6,8)".to_string(), Case::X68.range().unwrap()),
        ("X(7,10)".to_string(), Case::X710.range().unwrap()),
    ];
    for (n, v, w) in [(6, (1, 3), (5, 6)), (6, (1, 4), (5, 6)), (8, (1, 3), (6, 8)), (10, (1, 3), (7, 10)), (10, (1, 4), (7, 10))] {
        let r = SupportRange::richardson(n, pi(v.0, v.1), pi(w.0, w.1)).unwrap();
        ranges.push((format!("X^({},{})_({},{})", v.0, v.1, w.0, w.1), r));
    }
    for (name, r) in &ranges {
        for d in [2, 3] {
            check(degree_one_generation_check(r, d).map_err(|e| e.to_string())?, format!("{name} d={d}"))?;
        }
    }
    Ok(format!("{} ranges at d=2,3", ranges.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("minimal elements", criterion_1),
        ("invariant dimensions", criterion_2),
        ("relation reproduction", criterion_3),
        ("kernel structure", criterion_4),
        ("projective-space quotients", criterion_5),
        ("confluence and binomiality", criterion_6),
        ("jacobian singularities", criterion_7),
        ("singular counts", criterion_8),
        ("straightening soundness", criterion_9),
        ("degree-one generation", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
