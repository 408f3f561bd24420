//! The `uniserial` command line. Every command prints one JSON document (or
//! DOT for `ar-quiver`) and exits with 0 on success, 2 on invalid input and
//! 3 when a check fails.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::field::{PrimeField, Rationals};
use crate::perp::perp;
use crate::proalgebra::{
    check_invariance, coalgebra_dual_check, inj_matrix_algebra, path_coalgebra, transport,
    BaseBijection,
};
use crate::site::{CoverPoint, Site, Vertex};
use crate::sweep::{objects_up_to_winding, oracle_sweep, random_object};
use crate::tube::{
    ar_sequence, ext_dim, hom_space, irreducibles_in, irreducibles_out, subobject_chain, tau,
    IntervalObject, Label,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "uniserial",
    version,
    about = "Exact queries on tubes, big tubes and linear orders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SiteArg {
    /// Site descriptor, e.g. {"kind":"loop","base":"cyclic","rank":2}
    #[arg(long)]
    site: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis shifts of Hom(from, to).
    Hom {
        #[command(flatten)]
        site: SiteArg,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// dim Ext^1(from, to).
    Ext {
        #[command(flatten)]
        site: SiteArg,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// The almost split sequence ending in an object.
    Ar {
        #[command(flatten)]
        site: SiteArg,
        #[arg(long)]
        obj: String,
    },
    /// Neighbourhood of an object in the AR quiver.
    ArQuiver {
        #[command(flatten)]
        site: SiteArg,
        #[arg(long)]
        center: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// The chain of subobjects, from zero upwards.
    Subobjects {
        #[command(flatten)]
        site: SiteArg,
        #[arg(long)]
        obj: String,
        #[arg(long, default_value_t = 64)]
        limit: usize,
    },
    /// Perpendicular category to the simples outside a keep set.
    Perp {
        #[command(flatten)]
        site: SiteArg,
        /// JSON array of kept vertices
        #[arg(long)]
        keep: String,
        /// Optional ambient object to test and reflect
        #[arg(long)]
        obj: Option<String>,
    },
    /// Compare hom and ext with the matrix oracle on a finite tube.
    OracleCheck {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = 2)]
        max_winding: u64,
        /// `p` (F_1009), a prime, or `Q`
        #[arg(long, default_value = "p")]
        field: String,
    },
    /// Path coalgebra axioms and duality with the ray algebra.
    CoalgebraCheck {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = 8)]
        trunc: u32,
    },
    /// The ray endomorphism algebra of a keep set.
    InjMatrix {
        #[command(flatten)]
        site: SiteArg,
        #[arg(long)]
        keep: String,
        #[arg(long)]
        anchor: Option<String>,
        #[arg(long, default_value_t = 8)]
        trunc: usize,
        /// Random triples for the associativity check
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Invariance of hom, ext, tau and AR data under a base automorphism.
    TransportCheck {
        #[command(flatten)]
        site: SiteArg,
        /// e.g. {"kind":"rotate","by":1}
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(v: Value) -> Self {
        Self::json(EXIT_OK, v)
    }

    fn json(code: i32, v: Value) -> Self {
        let stdout = serde_json::to_string_pretty(&v).expect("values serialize") + "\n";
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::invalid(e)
    }
}

type CmdResult = std::result::Result<Outcome, Outcome>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(|e| e)
}

fn parse_json<'a, T: Deserialize<'a>>(what: &str, s: &'a str) -> std::result::Result<T, Outcome> {
    serde_json::from_str(s).map_err(|e| Outcome::invalid(format!("bad {what} JSON: {e}")))
}

fn parse_site(arg: &SiteArg) -> std::result::Result<Site, Outcome> {
    parse_json("site", &arg.site)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ObjectForm {
    Label {
        socle: Vertex,
        top: Vertex,
        #[serde(default)]
        winding: u64,
    },
    Cover {
        a: CoverPoint,
        b: CoverPoint,
    },
}

/// Parses `{"socle","top","winding"}` or `{"a","b"}` cover form.
pub fn parse_object(site: Site, s: &str) -> crate::error::Result<IntervalObject> {
    let form: ObjectForm = serde_json::from_str(s)
        .map_err(|e| Error::InvalidLabel(format!("bad object JSON: {e}")))?;
    match form {
        ObjectForm::Label {
            socle,
            top,
            winding,
        } => IntervalObject::from_label(
            site,
            Label {
                socle,
                top,
                winding,
            },
        ),
        ObjectForm::Cover { a, b } => IntervalObject::from_cover(site, a, b),
    }
}

fn object(site: Site, s: &str) -> std::result::Result<IntervalObject, Outcome> {
    parse_object(site, s).map_err(Outcome::from)
}

fn keep_set(s: &str) -> std::result::Result<Vec<Vertex>, Outcome> {
    parse_json("keep", s)
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Hom { site, from, to } => {
            let site = parse_site(&site)?;
            let (x, y) = (object(site, &from)?, object(site, &to)?);
            Ok(Outcome::ok(json!(hom_space(&x, &y)?)))
        }
        Command::Ext { site, from, to } => {
            let site = parse_site(&site)?;
            let (x, y) = (object(site, &from)?, object(site, &to)?);
            Ok(Outcome::ok(json!({ "dim": ext_dim(&x, &y)? })))
        }
        Command::Ar { site, obj } => {
            let x = object(parse_site(&site)?, &obj)?;
            Ok(Outcome::ok(json!(ar_sequence(&x)?)))
        }
        Command::ArQuiver {
            site,
            center,
            radius,
            format,
        } => {
            if format != "dot" {
                return Err(Outcome::invalid(format!("unknown format {format:?}")));
            }
            let x = object(parse_site(&site)?, &center)?;
            Ok(Outcome {
                code: EXIT_OK,
                stdout: ar_quiver_dot(&x, radius),
                stderr: String::new(),
            })
        }
        Command::Subobjects { site, obj, limit } => {
            let x = object(parse_site(&site)?, &obj)?;
            let chain = subobject_chain(&x, limit);
            Ok(Outcome::ok(
                json!({ "chain": chain.entries, "complete": chain.complete }),
            ))
        }
        Command::Perp { site, keep, obj } => {
            let site = parse_site(&site)?;
            let pp = perp(site, &keep_set(&keep)?)?;
            let mut out = json!({
                "ambient": pp.ambient,
                "keep": pp.keep,
                "inner": pp.inner,
                "simples": pp.simples(),
            });
            if let Some(o) = obj {
                let x = object(site, &o)?;
                out["object"] = json!({
                    "contains": pp.contains(&x)?,
                    "reflect": pp.reflect(&x)?,
                });
            }
            Ok(Outcome::ok(out))
        }
        Command::OracleCheck {
            rank,
            max_winding,
            field,
        } => {
            if rank == 0 {
                return Err(Outcome::invalid("rank must be at least 1"));
            }
            let objects = objects_up_to_winding(rank, max_winding);
            let report = match field.as_str() {
                "Q" | "q" => oracle_sweep(&Rationals, &objects)?,
                "p" => oracle_sweep(&PrimeField::default(), &objects)?,
                other => {
                    let p: u64 = other
                        .parse()
                        .map_err(|_| Outcome::invalid(format!("unknown field {other:?}")))?;
                    oracle_sweep(&PrimeField::new(p)?, &objects)?
                }
            };
            let code = if report.mismatches.is_empty() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(Outcome::json(code, json!(report)))
        }
        Command::CoalgebraCheck { rank, trunc } => {
            let c = path_coalgebra(rank, trunc)?;
            let basis = c.basis();
            let coassociative = basis.iter().all(|&a| c.is_coassociative_at(a));
            let counit = basis.iter().all(|&a| c.counit_holds_at(a));
            let dual = coalgebra_dual_check(&c)?;
            let passed = coassociative && counit && dual.passed;
            let code = if passed { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(Outcome::json(
                code,
                json!({
                    "rank": rank,
                    "trunc": trunc,
                    "paths": basis.len(),
                    "coassociative": coassociative,
                    "counit": counit,
                    "dual": dual,
                }),
            ))
        }
        Command::InjMatrix {
            site,
            keep,
            anchor,
            trunc,
            samples,
            seed,
        } => {
            let site = parse_site(&site)?;
            let anchor = anchor
                .map(|a| parse_json::<Vertex>("anchor", &a))
                .transpose()?;
            let alg = inj_matrix_algebra(site, &keep_set(&keep)?, anchor, trunc)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut failures = 0;
            for _ in 0..samples {
                let (a, b, c) = (
                    alg.random(&mut rng),
                    alg.random(&mut rng),
                    alg.random(&mut rng),
                );
                let left = alg.mul(&alg.mul(&a, &b)?, &c)?;
                let right = alg.mul(&a, &alg.mul(&b, &c)?)?;
                failures += usize::from(left != right);
            }
            let socles: Vec<Vertex> = alg.rays.iter().map(|r| r.socle()).collect();
            let code = if failures == 0 {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(Outcome::json(
                code,
                json!({
                    "socles": socles,
                    "precision": alg.precision,
                    "pattern": alg.pattern,
                    "filtration": (0..=alg.size()).map(|d| alg.filtration(d)).collect::<Vec<_>>(),
                    "associativity": { "samples": samples, "failures": failures },
                }),
            ))
        }
        Command::TransportCheck {
            site,
            map,
            pairs,
            seed,
        } => {
            let site = parse_site(&site)?;
            let map: BaseBijection = parse_json("map", &map)?;
            let t = transport(site, site, map)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut failures = Vec::new();
            for _ in 0..pairs {
                let x = random_object(site, &mut rng, 20, 3);
                let y = random_object(site, &mut rng, 20, 3);
                let report = check_invariance(&t, &x, &y)?;
                if !report.passed() {
                    failures.push(json!({ "from": x, "to": y, "report": report }));
                }
            }
            let code = if failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(Outcome::json(
                code,
                json!({ "map": t.map, "pairs": pairs, "failures": failures }),
            ))
        }
    }
}

/// Breadth-first neighbourhood along irreducible maps, with `τ` drawn as
/// dashed edges.
pub fn ar_quiver_dot(center: &IntervalObject, radius: usize) -> String {
    let mut seen = BTreeSet::from([*center]);
    let mut queue = VecDeque::from([(*center, 0)]);
    while let Some((x, d)) = queue.pop_front() {
        if d == radius {
            continue;
        }
        for y in irreducibles_out(&x).into_iter().chain(irreducibles_in(&x)) {
            if seen.insert(y) {
                queue.push_back((y, d + 1));
            }
        }
    }
    let mut out = String::from("digraph ar {\n  rankdir=LR;\n");
    for x in &seen {
        let shape = if x == center { ", shape=box" } else { "" };
        let _ = writeln!(out, "  \"{x}\" [label=\"{x}\"{shape}];");
    }
    for x in &seen {
        for y in irreducibles_out(x) {
            if seen.contains(&y) {
                let _ = writeln!(out, "  \"{x}\" -> \"{y}\";");
            }
        }
    }
    for x in &seen {
        if let Ok(t) = tau(x) {
            if seen.contains(&t) {
                let _ = writeln!(
                    out,
                    "  \"{x}\" -> \"{t}\" [style=dashed, constraint=false];"
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
