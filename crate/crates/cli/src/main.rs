use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use plucker_git::catalog::Case;
use plucker_git::geometry::{singular_candidates, smooth_locus_width};
use plucker_git::presentations::{matching_probes, catalog_suite, ReductionSystem};
use plucker_git::weyl::{pair_status, scan_minimal};
use plucker_git::{
    confluence_check, invariant_basis, jacobian, minimal_elements, multiplication_kernel, parse_expr, standard_basis,
    stability_status, straighten, verify_identity, weight_root_coords, CosetElement, Error, FormalPolynomial, PlueckerIndex,
    StabilityStatus, SupportRange,
};

#[derive(Parser)]
#[command(name = "plucker-git", version, about = "Torus quotients of Schubert and Richardson varieties in G(2,n)")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct RangeArgs {
    #[arg(long)]
    n: usize,
    /// Upper end `i,j` of the range; defaults to `n-1,n`.
    #[arg(long, value_parser = parse_pair)]
    w: Option<(usize, usize)>,
    /// Lower end `i,j` of the range; defaults to `1,2`.
    #[arg(long, value_parser = parse_pair)]
    v: Option<(usize, usize)>,
}

impl RangeArgs {
    fn range(&self) -> plucker_git::Result<SupportRange> {
        let (wi, wj) = self.w.unwrap_or((self.n.saturating_sub(1), self.n));
        let (vi, vj) = self.v.unwrap_or((1, 2));
        SupportRange::richardson(self.n, PlueckerIndex::checked(vi, vj, self.n)?, PlueckerIndex::checked(wi, wj, self.n)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Minimal Schubert varieties with semistable and stable points.
    Minimal {
        #[arg(long)]
        n: usize,
    },
    /// Stability of X(w) for the line bundle of degree d.
    Stability {
        #[arg(long)]
        n: usize,
        /// A pair `i,j` or a longer subset `a,b,c,...`.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        w: Vec<u8>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Standard monomials of a degree, or torus invariants with --invariant.
    Basis {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        invariant: bool,
    },
    /// Normal form of a Plücker expression on a range.
    Straighten {
        #[command(flatten)]
        range: RangeArgs,
        expr: String,
    },
    /// Kernel of the multiplication map in degree 2 or 3.
    Relations {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Checks `lhs = rhs` on a range.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Checks every displayed relation of a worked example.
    Reproduce {
        /// g26, x68, x710 or richardson.
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Jacobian of relations at a point.
    Jacobian {
        /// Take the relations of a worked example.
        #[arg(long)]
        case: Option<String>,
        /// A relation in the `x_k` (repeatable).
        #[arg(long)]
        relation: Vec<String>,
        /// Comma-separated rationals, one per generator.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        point: Vec<BigRational>,
        #[arg(long, default_value_t = 1)]
        codim: usize,
    },
    /// Confluence of the toric rewriting system on matchings.
    Confluence {
        #[arg(long, default_value_t = 6)]
        symbols: u8,
    },
    /// Size of the candidate singular set of X(w).
    SingularCount {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_pair)]
        w: Option<(usize, usize)>,
    },
    /// The candidate singular set of X(w) with its pairing.
    Candidates {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_pair)]
        w: Option<(usize, usize)>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = t.split_once(',').ok_or_else(|| format!("expected i,j, got '{s}'"))?;
    let a = a.trim().parse().map_err(|_| format!("bad index in '{s}'"))?;
    let b = b.trim().parse().map_err(|_| format!("bad index in '{s}'"))?;
    Ok((a, b))
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, value: &impl Serialize, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
        } else {
            println!("{}", text());
        }
    }
}

fn pair_json(p: PlueckerIndex) -> Value {
    json!([p.i, p.j])
}

fn case_of(name: &str, n: Option<usize>, k: Option<usize>) -> Result<Case, Failure> {
    if name.eq_ignore_ascii_case("richardson") {
        match (n, k) {
            (Some(n), Some(k)) => Ok(Case::Richardson { n, k }),
            _ => Err(Failure::Usage("richardson needs --n and --k".into())),
        }
    } else {
        Ok(name.parse()?)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Out { json: cli.json };
    match cli.command {
        Command::Minimal { n } => {
            let (ss, s) = minimal_elements(n)?;
            let scan_ss = scan_minimal(n, StabilityStatus::SemistableOnly)?;
            let scan_s = scan_minimal(n, StabilityStatus::Stable)?;
            if scan_ss != [ss] || scan_s != [s] {
                return Err(Failure::Verification);
            }
            out.emit(&json!({"w_ss_min": pair_json(ss), "w_s_min": pair_json(s)}), || {
                format!("w_ss_min = {ss}\nw_s_min = {s}")
            });
        }
        Command::Stability { n, w, d } => {
            let coset = if w.len() == 2 {
                CosetElement::Pair(PlueckerIndex::checked(w[0] as usize, w[1] as usize, n)?)
            } else {
                CosetElement::subset(w, n)?
            };
            let r = coset.rank();
            let d = d.unwrap_or_else(|| (1..=n).find(|d| r * d % n == 0).unwrap_or(n));
            let status = stability_status(&coset, n, d)?;
            let coords = weight_root_coords(&coset, n, d)?;
            out.emit(
                &json!({"w": coset.values(), "n": n, "d": d, "status": status.to_string(), "root_coords": coords.0}),
                || format!("{coset} in G({r},{n}), d = {d}: {status}\nroot coordinates: {:?}", coords.0),
            );
        }
        Command::Basis { range, degree, invariant } => {
            let r = range.range()?;
            if invariant {
                let set = invariant_basis(&r, degree)?;
                let rows: Vec<Value> = set
                    .labels
                    .iter()
                    .zip(&set.values)
                    .map(|(l, m)| json!({"label": l, "monomial": m.to_string()}))
                    .collect();
                out.emit(&json!({"range": r, "degree": degree, "count": rows.len(), "basis": rows}), || {
                    let mut s = format!("{} invariants of degree {degree}", set.len());
                    for (l, m) in set.labels.iter().zip(&set.values) {
                        s.push_str(&format!("\n{l} = {m}"));
                    }
                    s
                });
            } else {
                let basis = standard_basis(&r, degree);
                let rows: Vec<String> = basis.iter().map(ToString::to_string).collect();
                out.emit(&json!({"range": r, "degree": degree, "count": rows.len(), "basis": rows}), || {
                    format!("{} standard monomials of degree {degree}\n{}", rows.len(), rows.join("\n"))
                });
            }
        }
        Command::Straighten { range, expr } => {
            let r = range.range()?;
            let p = parse_expr(&expr, r.n())?.to_plucker()?;
            let nf = straighten(&p, &r);
            out.emit(&json!({"input": p.to_string(), "normal_form": nf.to_string(), "terms": nf.len()}), || nf.to_string());
        }
        Command::Relations { range, degree } => {
            let r = range.range()?;
            let gens = invariant_basis(&r, 1)?;
            let rels = multiplication_kernel(&r, degree)?;
            let gen_rows: Vec<Value> = gens
                .labels
                .iter()
                .zip(&gens.values)
                .enumerate()
                .map(|(k, (l, m))| json!({"variable": format!("x_{}", k + 1), "label": l, "monomial": m.to_string()}))
                .collect();
            let rel_rows: Vec<String> = rels.iter().map(ToString::to_string).collect();
            out.emit(&json!({"range": r, "degree": degree, "generators": gen_rows, "relations": rel_rows}), || {
                let mut s = String::new();
                for (k, (l, m)) in gens.labels.iter().zip(&gens.values).enumerate() {
                    s.push_str(&format!("x_{} = {l} = {m}\n", k + 1));
                }
                s.push_str(&format!("{} relations in degree {degree}", rel_rows.len()));
                for rel in &rel_rows {
                    s.push_str(&format!("\n{rel}"));
                }
                s
            });
        }
        Command::Verify { range, lhs, rhs } => {
            let r = range.range()?;
            let l = parse_expr(&lhs, r.n())?.to_plucker()?;
            let rr = parse_expr(&rhs, r.n())?.to_plucker()?;
            let ok = verify_identity(&l, &rr, &r);
            let diff = straighten(&(&l - &rr), &r);
            out.emit(&json!({"holds": ok, "difference": diff.to_string()}), || {
                if ok {
                    "holds".to_string()
                } else {
                    format!("fails: lhs - rhs = {diff}")
                }
            });
            if !ok {
                return Err(Failure::Verification);
            }
        }
        Command::Reproduce { case, n, k } => {
            let case = case_of(&case, n, k)?;
            let rep = catalog_suite(case)?;
            out.emit(&rep, || {
                let mut s = String::new();
                for rec in &rep.records {
                    let status = if rec.discrepancy.is_none() && rec.vanishes_at_points { "pass" } else { "FAIL" };
                    s.push_str(&format!("{status} {} {}", rec.case, rec.relation_label));
                    if let Some(d) = &rec.discrepancy {
                        s.push_str(&format!("  lhs = {}  rhs = {}  difference = {d}", rec.lhs_normal_form, rec.rhs_normal_form));
                    }
                    s.push('\n');
                }
                let failed = rep.failures().count();
                s.push_str(&format!("{} relations, {failed} failed", rep.records.len()));
                s
            });
            if !rep.all_pass() {
                return Err(Failure::Verification);
            }
        }
        Command::Jacobian { case, relation, point, codim } => {
            let mut rels: Vec<FormalPolynomial> = Vec::new();
            if let Some(c) = case {
                rels.extend(case_of(&c, None, None)?.relations()?.into_iter().map(|(_, f)| f));
            }
            for s in &relation {
                rels.push(parse_expr(s, 0)?.to_formal(Some(point.len()))?);
            }
            if rels.is_empty() {
                return Err(Failure::Usage("give --case or at least one --relation".into()));
            }
            let rep = jacobian(&rels, &point, codim)?;
            out.emit(&rep, || {
                let mut s = String::new();
                for row in &rep.matrix {
                    let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                    s.push_str(&format!("[{}]\n", cells.join(" ")));
                }
                s.push_str(&format!(
                    "rank {} (codimension {}): {}",
                    rep.rank,
                    rep.codim_target,
                    if rep.singular { "singular" } else { "nonsingular" }
                ));
                s
            });
        }
        Command::Confluence { symbols } => {
            let rep = confluence_check(&ReductionSystem::toric(symbols), &matching_probes(symbols))?;
            out.emit(&rep, || {
                let mut s = String::new();
                for p in &rep.probes {
                    s.push_str(&format!("{} -> {}\n", p.probe, p.normal_forms.join(" | ")));
                }
                s.push_str(if rep.confluent { "confluent" } else { "not confluent" });
                s
            });
        }
        Command::SingularCount { n, w } => {
            let w = full_or(n, w)?;
            let set = singular_candidates(w, n, cli.seed)?;
            let width = smooth_locus_width(w, n).ok();
            out.emit(&json!({"n": n, "w": pair_json(w), "K_size": set.k.len(), "L_size": set.l_size, "codimension": width}), || {
                set.l_size.to_string()
            });
        }
        Command::Candidates { n, w } => {
            let w = full_or(n, w)?;
            if pair_status(w, n)? == StabilityStatus::NoSemistable {
                return Err(Failure::Usage(format!("X({w}) has no semistable points")));
            }
            let set = singular_candidates(w, n, cli.seed)?;
            out.emit(&set, || {
                let mut s = format!("|K| = {}, |L| = {}", set.k.len(), set.l_size);
                for (a, b) in &set.pairs {
                    s.push_str(&format!("\n{a} <-> {b}"));
                }
                s
            });
        }
    }
    Ok(())
}

fn full_or(n: usize, w: Option<(usize, usize)>) -> Result<PlueckerIndex, Failure> {
    let (i, j) = w.unwrap_or((n.saturating_sub(1), n));
    Ok(PlueckerIndex::checked(i, j, n)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
