//! The `wakimoto` command line.
//!
//! Every subcommand returns a JSON value and a text rendering; `--format`
//! picks one. Exit codes: 0 on success, 1 when a verification finds a
//! counterexample, 2 on usage or domain errors.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::admissible::{
    admissible_check, certificates, omega_theorem, orbit_table, pr_k_bar, richardson,
    AdmissibleLevel,
};
use crate::affine::{
    bracket_closure, pi_affine, verify_affine_comm, zhu_check, CommSlice, FieldExpr, Realization,
};
use crate::character::{Character, Window};
use crate::error::{Error, Result};
use crate::lie::{parse_root, Basis, Lie};
use crate::rational::{fmt_q, parse_q, Q};
use crate::relaxed::{
    character_relaxed_verma, character_relaxed_wakimoto, find_singular_vectors, RelaxedVerma,
};
use crate::root_data::Weight;
use crate::weyl_poly::{
    gamma_alpha_multiplicity, pi_g, pq_polynomials, twist_character, verify_pi_hom, FockKind,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "wakimoto",
    version,
    about = "Exact free-field realizations of affine sl_n"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Rank parameter: the algebra is sl_n.
    #[arg(short = 'n', long, global = true, default_value_t = 2)]
    pub n: usize,
    /// Level k as a rational, e.g. -1/2.
    #[arg(short = 'k', long, global = true, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Numerator of k + n.
    #[arg(short = 'p', long, global = true)]
    pub p: Option<i64>,
    /// Denominator of k + n.
    #[arg(short = 'q', long, global = true)]
    pub q: Option<i64>,
    /// Energy cutoff.
    #[arg(short = 'D', long = "dmax", global = true, default_value_t = 2)]
    pub dmax: u32,
    /// Weight window radius in simple-root coordinates.
    #[arg(long, global = true, default_value_t = 4)]
    pub window: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Top {
    Verma,
    Gt,
}

/// Options naming a module: `λ`, the top kind and the twisting root.
#[derive(Args, Debug, Clone)]
pub struct ModuleArgs {
    /// Highest weight in fundamental-weight coordinates, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = Top::Verma)]
    pub top: Top,
    /// Positive root for a Gelfand–Tsetlin top, e.g. a1+a2.
    #[arg(long, default_value = "a1")]
    pub alpha: String,
    /// Truncation of the top for a non-simple root.
    #[arg(long, default_value_t = 3)]
    pub cap: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// π_g of a Chevalley basis element, e.g. e:a1, f:a1+a2, h:1.
    PiG { element: String },
    /// The polynomials p^γ_α and q^γ_α for a simple root γ.
    PqPolys {
        #[arg(long, default_value = "a1")]
        gamma: String,
    },
    /// Character of the twisted Verma module on the window.
    TwistChar {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// c_α spectrum on a weight space of the Gelfand–Tsetlin Fock module.
    GammaMult {
        #[command(flatten)]
        module: ModuleArgs,
        /// Target weight; defaults to λ.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// The free field π_{κ,g}(a)(z) of a basis element.
    FfField {
        element: String,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Ω_k(p_Σ) with admissible-module certificates.
    Omega {
        /// Marked simple roots, comma separated (empty for the Borel).
        #[arg(long, default_value = "")]
        sigma: String,
    },
    /// The admissible weights P̄r_k with a generating y for each.
    Prk,
    /// Nilpotent orbits of sl_n with dimensions, covers and Richardson data.
    Orbits,
    /// The Richardson orbit of p_Σ.
    Richardson {
        #[arg(long, default_value = "")]
        sigma: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// π_g([a,b]) = [π_g(a), π_g(b)] on all basis pairs.
    PiHom,
    /// Affine commutators on a slice of the relaxed Wakimoto module.
    AffineComm {
        #[command(flatten)]
        module: ModuleArgs,
        /// Largest top degree of the test vectors.
        #[arg(long, default_value_t = 1)]
        top_max: u32,
        /// Modes range over -M..=M.
        #[arg(long, default_value_t = 2)]
        modes: i64,
    },
    /// Zero modes on the top component against π_g.
    ZhuDiagram {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 4)]
        top_max: u32,
    },
    /// Relaxed Verma and relaxed Wakimoto characters agree on the window.
    Characters {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Singular vectors of the relaxed Verma module, each rechecked.
    Singular {
        #[command(flatten)]
        module: ModuleArgs,
    },
}

/// What a command produced.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome {
            json,
            text,
            failed: false,
        }
    }
}

/// Parses `args` and runs the command, returning the printed output and the exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.to_string(), code);
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let body = match cli.global.format {
                Format::Json => {
                    let mut v = json!({"schema_version": SCHEMA_VERSION});
                    if let (Value::Object(m), Value::Object(extra)) = (&mut v, out.json) {
                        m.extend(extra);
                    }
                    serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
                }
                Format::Text => out.text,
            };
            (body, if out.failed { 1 } else { 0 })
        }
        Err(e) => (format!("error: {e}\n"), 2),
    }
}

fn lie(g: &Global) -> Result<Lie> {
    Lie::new(g.n)
}

fn level(g: &Global) -> Result<Q> {
    match (&g.k, g.p, g.q) {
        (Some(k), None, None) => parse_q(k),
        (None, Some(p), Some(q)) if q != 0 => {
            Ok(Q::new(p.into(), q.into()) - crate::rational::q(g.n as i64))
        }
        (None, None, None) => Err(Error::Parse("a level is required: -k or -p/-q".into())),
        _ => Err(Error::Parse("give either -k or both -p and -q".into())),
    }
}

fn admissible(g: &Global) -> Result<AdmissibleLevel> {
    if let (None, Some(p), Some(q)) = (&g.k, g.p, g.q) {
        return AdmissibleLevel::from_pq(g.n, p, q);
    }
    admissible_check(&level(g)?, g.n)
}

fn parse_weight(s: Option<&str>, rank: usize) -> Result<Weight> {
    let Some(s) = s.filter(|s| !s.trim().is_empty()) else {
        return Ok(Weight::zero(rank));
    };
    let coords = s.split(',').map(parse_q).collect::<Result<Vec<_>>>()?;
    if coords.len() != rank {
        return Err(Error::DimensionError(format!(
            "weight {s:?} needs {rank} coordinates"
        )));
    }
    Ok(Weight::new(coords))
}

fn parse_sigma(s: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part
            .trim_start_matches('a')
            .parse()
            .map_err(|_| Error::Parse(format!("bad simple root {part:?}")))?;
        if i == 0 || i >= n {
            return Err(Error::Parse(format!("simple root {i} out of range 1..{n}")));
        }
        out.push(i);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn root_index(lie: &Lie, label: &str) -> Result<usize> {
    let root = parse_root(label, lie.rank())?;
    lie.rs
        .root_index(&root)
        .ok_or_else(|| Error::Parse(format!("{label:?} is not a positive root")))
}

fn module(lie: &Lie, m: &ModuleArgs) -> Result<(FockKind, Weight)> {
    let lambda = parse_weight(m.lambda.as_deref(), lie.rank())?;
    let kind = match m.top {
        Top::Verma => FockKind::Verma,
        Top::Gt => FockKind::Gt(root_index(lie, &m.alpha)?),
    };
    Ok((kind, lambda))
}

fn window(g: &Global) -> Result<Window> {
    let w = Window::new(g.window, g.dmax);
    if w.is_empty() {
        return Err(Error::EmptyWindow);
    }
    Ok(w)
}

fn character_text(lie: &Lie, ch: &Character) -> String {
    let mut s = String::new();
    for ((o, d), m) in &ch.cells {
        let bound = if m.lower_bound { ">=" } else { "" };
        s.push_str(&format!(
            "{}\t{d}\t{bound}{}\n",
            ch.weight_of(&lie.rs, o).render(),
            m.count
        ));
    }
    s
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::PiG { element } => {
            let lie = lie(g)?;
            let b = lie.parse_symbol(element)?;
            let img = pi_g(&lie, &lie.basis_element(b)).render(&lie);
            Ok(Outcome::ok(
                json!({"n": g.n, "element": lie.symbol(b), "image": img}),
                img.clone() + "\n",
            ))
        }
        Command::PqPolys { gamma } => {
            let lie = lie(g)?;
            let gi = root_index(&lie, gamma)?;
            let (ps, qs) = pq_polynomials(&lie, gi)?;
            let names: Vec<String> = lie
                .rs
                .positive_roots
                .iter()
                .map(|r| format!("x_{{{}}}", r.label()))
                .collect();
            let mut rows = Vec::new();
            let mut text = String::new();
            for (a, (p, q)) in ps.iter().zip(&qs).enumerate() {
                let label = lie.rs.positive_roots[a].label();
                let (p, q) = (p.render(&names), q.render(&names));
                text.push_str(&format!("{label}\tp = {p}\tq = {q}\n"));
                rows.push(json!({"alpha": label, "p": p, "q": q}));
            }
            Ok(Outcome::ok(
                json!({"n": g.n, "gamma": gamma, "polynomials": rows}),
                text,
            ))
        }
        Command::TwistChar { module: m } => {
            let lie = lie(g)?;
            let lambda = parse_weight(m.lambda.as_deref(), lie.rank())?;
            let alpha = root_index(&lie, &m.alpha)?;
            let ch = twist_character(&lie, &lambda, alpha, &Window::new(g.window, 0), m.cap)?;
            Ok(Outcome::ok(
                json!({"n": g.n, "lambda": lambda.to_json(), "alpha": m.alpha, "character": ch.to_json(&lie.rs)}),
                character_text(&lie, &ch),
            ))
        }
        Command::GammaMult { module: m, mu } => {
            let lie = lie(g)?;
            let lambda = parse_weight(m.lambda.as_deref(), lie.rank())?;
            let mu = match mu {
                Some(s) => parse_weight(Some(s), lie.rank())?,
                None => lambda.clone(),
            };
            let alpha = root_index(&lie, &m.alpha)?;
            let rep = gamma_alpha_multiplicity(&lie, &lambda, alpha, &mu, g.dmax)?;
            let eig: Vec<Value> = rep
                .eigenvalues
                .iter()
                .map(|(e, k)| json!({"eigenvalue": fmt_q(e), "multiplicity": k}))
                .collect();
            let mut text = format!("slice dimension {}\n", rep.slice_dim);
            for (e, k) in &rep.eigenvalues {
                text.push_str(&format!("{}\t{k}\n", fmt_q(e)));
            }
            if rep.irrational_degree > 0 {
                text.push_str(&format!(
                    "irrational part of degree {}\n",
                    rep.irrational_degree
                ));
            }
            Ok(Outcome::ok(
                json!({
                    "n": g.n, "lambda": lambda.to_json(), "mu": mu.to_json(), "alpha": m.alpha, "degree": g.dmax,
                    "slice_dim": rep.slice_dim, "eigenvalues": eig,
                    "irrational_degree": rep.irrational_degree, "invariant": rep.invariant,
                }),
                text,
            ))
        }
        Command::FfField { element, module: m } => {
            let lie = lie(g)?;
            let k = level(g)?;
            let (kind, lambda) = module(&lie, m)?;
            let b = lie.parse_symbol(element)?;
            let real = Realization::new(&lie, kind, lambda, k.clone())?;
            let field: FieldExpr = match b {
                Basis::E(beta) if lie.rs.positive_roots[beta].height() > 1 => {
                    bracket_closure(&lie, beta)?
                }
                _ => pi_affine(&lie, &lie.basis_element(b), &k, &real.c_gamma)?,
            };
            let text = field.render(&lie);
            let c: Vec<String> = real.c_gamma.iter().map(fmt_q).collect();
            Ok(Outcome::ok(
                json!({"n": g.n, "k": fmt_q(&k), "element": lie.symbol(b), "field": text, "c_gamma": c}),
                text.clone() + "\n",
            ))
        }
        Command::Verify { suite } => verify(g, suite),
        Command::Omega { sigma } => {
            let lvl = admissible(g)?;
            let s = parse_sigma(sigma, g.n)?;
            let omega = omega_theorem(&s, &lvl);
            let certs = certificates(&s, &lvl);
            let text: String = omega.iter().map(|w| w.render() + "\n").collect();
            Ok(Outcome::ok(
                json!({
                    "level": lvl.to_json(),
                    "sigma": s,
                    "omega": omega.iter().map(Weight::to_json).collect::<Vec<_>>(),
                    "certificates": certs.iter()
                        .map(|(l, a)| json!({"lambda": l.to_json(), "alpha": a.label()}))
                        .collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::Prk => {
            let lvl = admissible(g)?;
            let entries = pr_k_bar(&lvl);
            let text: String = entries.iter().map(|e| e.lambda.render() + "\n").collect();
            Ok(Outcome::ok(
                json!({
                    "level": lvl.to_json(),
                    "weights": entries.iter()
                        .map(|e| json!({"lambda": e.lambda.to_json(), "y": e.y.to_json(), "base": e.base.to_json()}))
                        .collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::Orbits => {
            if g.n < 2 {
                return Err(Error::InvalidRank(g.n));
            }
            let rows = orbit_table(g.n);
            let mut text = String::new();
            for r in &rows {
                let covers: Vec<String> = r.covers.iter().map(ToString::to_string).collect();
                text.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    r.partition,
                    r.dim,
                    r.labels.join(","),
                    covers.join(" ")
                ));
            }
            Ok(Outcome::ok(
                json!({"n": g.n, "orbits": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>()}),
                text,
            ))
        }
        Command::Richardson { sigma } => {
            if g.n < 2 {
                return Err(Error::InvalidRank(g.n));
            }
            let s = parse_sigma(sigma, g.n)?;
            let p = richardson(&s, g.n);
            Ok(Outcome::ok(
                json!({"n": g.n, "sigma": s, "partition": p.0, "dim": p.orbit_dim()}),
                format!("{p}\t{}\n", p.orbit_dim()),
            ))
        }
    }
}

fn verify(g: &Global, suite: &Suite) -> Result<Outcome> {
    let lie = lie(g)?;
    let summary = |name: &str, checks: usize, failures: usize| {
        if failures == 0 {
            format!("{name}: passed {checks} checks\n")
        } else {
            format!("{name}: FAILED {failures} of {checks} checks\n")
        }
    };
    match suite {
        Suite::PiHom => {
            let bad = verify_pi_hom(&lie);
            let checks = lie.dim() * lie.dim();
            let failures: Vec<Value> = bad
                .iter()
                .map(|&(a, b)| json!([lie.symbol(lie.basis[a]), lie.symbol(lie.basis[b])]))
                .collect();
            Ok(Outcome {
                text: summary("pi-hom", checks, bad.len()),
                json: json!({"suite": "pi-hom", "n": g.n, "checks": checks, "failures": failures}),
                failed: !bad.is_empty(),
            })
        }
        Suite::AffineComm {
            module: m,
            top_max,
            modes,
        } => {
            let k = level(g)?;
            let (kind, lambda) = module(&lie, m)?;
            let real = Realization::new(&lie, kind, lambda, k.clone())?;
            let rep = verify_affine_comm(
                &real,
                CommSlice {
                    dmax: g.dmax,
                    top_max: *top_max,
                    mode_max: *modes,
                },
            );
            Ok(Outcome {
                text: summary("affine-comm", rep.checks, rep.failures.len()),
                json: json!({
                    "suite": "affine-comm", "n": g.n, "k": fmt_q(&k), "dmax": g.dmax,
                    "checks": rep.checks, "failures": serde_json::to_value(&rep.failures).expect("serializable"),
                }),
                failed: !rep.passed(),
            })
        }
        Suite::ZhuDiagram { module: m, top_max } => {
            let k = level(g)?;
            let (kind, lambda) = module(&lie, m)?;
            let real = Realization::new(&lie, kind, lambda, k.clone())?;
            let rep = zhu_check(&real, *top_max);
            Ok(Outcome {
                text: summary("zhu-diagram", rep.checks, rep.failures.len()),
                json: json!({
                    "suite": "zhu-diagram", "n": g.n, "k": fmt_q(&k), "slice_dim": rep.slice_dim,
                    "checks": rep.checks, "failures": rep.failures,
                }),
                failed: !rep.failures.is_empty(),
            })
        }
        Suite::Characters { module: m } => {
            let (kind, lambda) = module(&lie, m)?;
            let w = window(g)?;
            let a = character_relaxed_verma(&lie, kind, &lambda, &w, m.cap)?;
            let b = character_relaxed_wakimoto(&lie, kind, &lambda, &w, m.cap)?;
            let cells: std::collections::BTreeSet<_> =
                a.cells.keys().chain(b.cells.keys()).collect();
            let diffs: Vec<Value> = cells
                .iter()
                .filter(|(o, d)| a.get(o, *d) != b.get(o, *d))
                .map(|(o, d)| {
                    json!({
                        "weight": a.weight_of(&lie.rs, o).render(), "degree": d,
                        "verma": a.get(o, *d).to_json(), "wakimoto": b.get(o, *d).to_json(),
                    })
                })
                .collect();
            Ok(Outcome {
                text: summary("characters", cells.len(), diffs.len()),
                json: json!({"suite": "characters", "n": g.n, "cells": cells.len(), "failures": diffs}),
                failed: !diffs.is_empty(),
            })
        }
        Suite::Singular { module: m } => {
            let k = level(g)?;
            let (kind, lambda) = module(&lie, m)?;
            let rv = RelaxedVerma::new(&lie, kind, lambda.clone(), k.clone())?;
            let found = find_singular_vectors(&rv, &window(g)?)?;
            let mut text = String::new();
            let mut bad = 0;
            for s in &found {
                let killed = (0..lie.dim()).all(|i| rv.act(i, 1, &s.vector).is_zero());
                bad += usize::from(!killed);
                let weight = Character::new(lambda.clone()).weight_of(&lie.rs, &s.offset);
                text.push_str(&format!(
                    "energy {}\tweight {}\t{}\n",
                    s.energy,
                    weight.render(),
                    s.vector.render(&lie)
                ));
            }
            text.push_str(&summary("singular", found.len(), bad));
            Ok(Outcome {
                text,
                json: json!({
                    "suite": "singular", "n": g.n, "k": fmt_q(&k), "lambda": lambda.to_json(),
                    "vectors": found.iter().map(|s| s.to_json(&lie, &lambda)).collect::<Vec<_>>(),
                    "failures": bad,
                }),
                failed: bad > 0,
            })
        }
    }
}
