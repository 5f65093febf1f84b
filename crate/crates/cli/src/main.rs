//! Command-line front end: run individual theorem checks or the full
//! verification matrix, dump constructed objects, and query the
//! symmetric-space catalog.
//!
//! Exit codes: 0 all checks pass, 1 any check fails, 2 usage error.

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use weylres::propagation::{self, Family, FamilyParams};
use weylres::report::{envelope, VerificationReport};
use weylres::rootsys::ClassicalType;
use weylres::suite::{self, SuiteConfig};
use weylres::{geometry, invariants, spectral, weylgrp};

#[derive(Parser)]
#[command(
    name = "weylres",
    version,
    about = "Exact checks for classical Weyl group restriction, invariants, and polynomial Paley-Wiener operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run theorem checks.
    Verify(VerifyArgs),
    /// Serialize constructed objects.
    Dump(DumpArgs),
    /// Evaluate one row of the symmetric-space table.
    Catalog(CatalogArgs),
    /// Branch an irreducible along a propagation pair.
    Branch(BranchArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    what: VerifyWhat,
}

#[derive(Args, Clone)]
struct CommonVerify {
    /// Deterministic seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// The full check matrix.
    All {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// A named check (or glob like `pw-*`) from the matrix.
    Suite {
        /// Check id or glob; see `--list`.
        #[arg(long, default_value = "all")]
        filter: String,
        /// List the available check ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// Weyl restriction on one propagation pair.
    Weyl {
        #[arg(long, value_parser = parse_type)]
        r#type: ClassicalType,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Compare extended groups.
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// Invariant restriction identities and the surjectivity dichotomy.
    Invariants {
        #[arg(long, value_parser = parse_type)]
        r#type: ClassicalType,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// Convex domain checks: subset at a rank, or propagation on a pair.
    Omega {
        #[arg(long, value_parser = parse_type)]
        r#type: ClassicalType,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// Injectivity radii.
    Radius {
        /// Whole four-series table.
        #[arg(long)]
        all: bool,
        #[arg(long, value_parser = parse_type)]
        r#type: Option<ClassicalType>,
        #[arg(long)]
        rank: Option<usize>,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// Polynomial Paley-Wiener checks on one propagation pair.
    Pw {
        #[arg(long, value_parser = parse_type)]
        r#type: ClassicalType,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// Extended-Weyl equivariance of the complex spherical function (type D).
    SigmaEquivariance {
        #[arg(long, default_value_t = 4)]
        rank: usize,
        /// I-vector coefficients of the class-one weights added to rho.
        #[arg(long, default_value = "0,0,0,0")]
        lambda: String,
        #[command(flatten)]
        common: CommonVerify,
    },
}

#[derive(Args)]
struct DumpArgs {
    #[command(subcommand)]
    what: DumpWhat,
}

#[derive(Subcommand)]
enum DumpWhat {
    /// Root system context.
    Rootsys {
        #[arg(long, value_parser = parse_type)]
        r#type: ClassicalType,
        #[arg(long)]
        rank: usize,
    },
    /// Weyl group order, generators, and (small groups) elements.
    Weyl {
        #[arg(long, value_parser = parse_type)]
        r#type: ClassicalType,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        extended: bool,
    },
    /// Invariant generator family.
    Invariants {
        #[arg(long, value_parser = parse_type)]
        r#type: ClassicalType,
        #[arg(long)]
        rank: usize,
    },
    /// The 11-row symmetric-space family table.
    Catalog,
    /// Class-one fundamental weights.
    Xi {
        #[arg(long, value_parser = parse_type)]
        r#type: ClassicalType,
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Args)]
struct CatalogArgs {
    /// Family label: A, B, C, D, AIII, AI, AII, BDI, DIII, CII, CI.
    #[arg(long)]
    family: String,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BranchArgs {
    #[arg(long, value_parser = parse_type)]
    r#type: ClassicalType,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// I-vector over the class-one weights of the large system, e.g. 1,0,1,0.
    #[arg(long)]
    weight: String,
    #[arg(long)]
    json: bool,
}

fn parse_type(s: &str) -> Result<ClassicalType, String> {
    ClassicalType::parse(s).map_err(|e| e.to_string())
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|e| e.to_string()))
        .collect()
}

fn emit(reports: &[VerificationReport], json: bool) -> i32 {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&envelope(reports)).expect("json")
        );
    } else {
        for r in reports {
            println!("{}", r.line());
        }
        let pass = reports.iter().filter(|r| r.status.is_pass()).count();
        println!(
            "-- {} checks, {} pass, {} fail",
            reports.len(),
            pass,
            reports.len() - pass
        );
    }
    if reports.iter().all(|r| r.status.is_pass()) {
        0
    } else {
        1
    }
}

fn run() -> Result<i32, weylres::Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(v) => run_verify(v),
        Command::Dump(d) => run_dump(d),
        Command::Catalog(c) => run_catalog(c),
        Command::Branch(b) => run_branch(b),
    }
}

fn run_parallel_suite(
    filter: &str,
    cfg: &SuiteConfig,
) -> Result<Vec<VerificationReport>, weylres::Error> {
    // Dispatch one job per matching check id to the worker pool; assemble in
    // deterministic id order regardless of completion order.
    let ids: Vec<&str> = suite::CHECK_IDS
        .iter()
        .chain(suite::EXTRA_CHECK_IDS.iter())
        .copied()
        .filter(|id| {
            filter == "all"
                || filter == "*"
                || *id == filter
                || filter
                    .strip_suffix('*')
                    .map(|p| id.starts_with(p))
                    .unwrap_or(false)
        })
        .collect();
    if ids.is_empty() {
        return Err(weylres::Error::BadParams(format!(
            "no check matches `{filter}`; known ids: {}",
            suite::CHECK_IDS.join(", ")
        )));
    }
    let mut reports: Vec<VerificationReport> = ids
        .par_iter()
        .map(|id| suite::run_suite(id, cfg))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(reports)
}

fn run_verify(v: VerifyArgs) -> Result<i32, weylres::Error> {
    match v.what {
        VerifyWhat::All {
            max_rank,
            samples,
            trials,
            common,
        } => {
            let cfg = SuiteConfig {
                max_rank,
                samples,
                trials,
                seed: common.seed,
            };
            let reports = run_parallel_suite("all", &cfg)?;
            Ok(emit(&reports, common.json))
        }
        VerifyWhat::Suite {
            filter,
            list,
            max_rank,
            samples,
            trials,
            common,
        } => {
            if list {
                for id in suite::CHECK_IDS.iter().chain(suite::EXTRA_CHECK_IDS.iter()) {
                    println!("{id}");
                }
                return Ok(0);
            }
            let cfg = SuiteConfig {
                max_rank,
                samples,
                trials,
                seed: common.seed,
            };
            let reports = run_parallel_suite(&filter, &cfg)?;
            Ok(emit(&reports, common.json))
        }
        VerifyWhat::Weyl {
            r#type: ty,
            n,
            k,
            extended,
            common,
        } => {
            let r = weylgrp::check_restriction_theorem(ty, n, k)?;
            let (restricted_order, expected, pass) = if extended {
                let small =
                    weylgrp::WeylGroup::new(weylres::rootsys::build_permissive(ty, n)?, true)?;
                let large =
                    weylgrp::WeylGroup::new(weylres::rootsys::build_permissive(ty, k)?, true)?;
                let sr = weylgrp::stabilizer_restriction(&large, small.ctx.ambient_dim)?;
                let expected = small.order()? as usize;
                let pass =
                    sr.restricted.len() == expected && &sr.restricted == small.enumerate()?;
                (sr.restricted.len(), expected, pass)
            } else {
                let expected = match ty {
                    ClassicalType::D if n < k => 2 * r.small_order,
                    _ => r.small_order,
                };
                (r.restricted_order, expected, r.pass)
            };
            let report = VerificationReport::from_bool(
                "weyl-restriction",
                pass,
                json!({"type": ty.letter().to_string(), "n": n, "k": k, "extended": extended}),
                json!({
                    "subgroup_order": r.subgroup_order,
                    "restricted_order": restricted_order,
                    "expected": expected,
                    "pass": pass,
                }),
                common.seed,
            );
            Ok(emit(&[report], common.json))
        }
        VerifyWhat::Invariants {
            r#type: ty,
            n,
            k,
            common,
        } => {
            let r = invariants::check_surjectivity(ty, n, k)?;
            let report = VerificationReport::from_bool(
                "invariant-restriction",
                r.pass,
                json!({"type": ty.letter().to_string(), "n": n, "k": k}),
                json!({
                    "generators_hit": r.generators_hit,
                    "vanishing_ok": r.vanishing_ok,
                    "image_even": r.image_even,
                    "pfaffian_odd": r.pfaffian_odd,
                    "pfaffian_square_hit": r.pfaffian_square_hit,
                }),
                common.seed,
            );
            Ok(emit(&[report], common.json))
        }
        VerifyWhat::Omega {
            r#type: ty,
            rank,
            n,
            k,
            samples,
            common,
        } => {
            let report = match (rank, n, k) {
                (Some(rank), None, None) => {
                    let r = geometry::check_omega_star_subset(ty, rank, samples, common.seed)?;
                    VerificationReport::from_bool(
                        "omega-subset",
                        r.pass,
                        json!({"type": ty.letter().to_string(), "rank": rank, "samples": samples}),
                        json!({
                            "members_checked": r.members_checked,
                            "violations": r.violations,
                            "certificate_ok": r.certificate_ok,
                        }),
                        common.seed,
                    )
                }
                (None, Some(n), Some(k)) => {
                    let pair = propagation::make_pair(ty, n, k)?;
                    let r = geometry::check_omega_star_propagation(&pair, samples, common.seed)?;
                    VerificationReport::from_bool(
                        "omega-propagation",
                        r.pass,
                        json!({"type": ty.letter().to_string(), "n": n, "k": k, "samples": samples}),
                        json!({
                            "equivalence_violations": r.equivalence_violations,
                            "type_a_bound_ok": r.type_a_bound_ok,
                            "directed_probes_ok": r.directed_probes_ok,
                        }),
                        common.seed,
                    )
                }
                _ => {
                    return Err(weylres::Error::BadParams(
                        "pass either --rank, or both --n and --k".into(),
                    ))
                }
            };
            Ok(emit(&[report], common.json))
        }
        VerifyWhat::Radius {
            all,
            r#type: ty,
            rank,
            common,
        } => {
            let reports = if let (false, Some(ty)) = (all, ty) {
                let rank = rank.unwrap_or(ty.min_rank(false));
                let r = geometry::injectivity_radius(ty, rank)?;
                let expect = geometry::expected_radius(ty);
                let support = geometry::support_radius_bound(ty, rank)?;
                let mut witnesses = geometry::radius_report_json(&r);
                witnesses["support_radius_lower_bound"] =
                    serde_json::Value::String(support.display);
                vec![VerificationReport::from_bool(
                    "radius",
                    r.radius == expect,
                    json!({"type": ty.letter().to_string(), "rank": rank}),
                    witnesses,
                    common.seed,
                )]
            } else {
                suite::radius_table()?
            };
            Ok(emit(&reports, common.json))
        }
        VerifyWhat::Pw {
            r#type: ty,
            n,
            k,
            trials,
            common,
        } => {
            let pair = propagation::make_pair(ty, n, k)?;
            let witness =
                weylres::pwtransform::surjectivity_witness(&pair, trials.min(8), common.seed)?;
            let fam = invariants::char_poly_family(ty, k, true)?;
            let extended = ty == ClassicalType::D;
            let poly = if extended {
                fam.generators[0].mul(&fam.generators[0])?
            } else {
                fam.generators.last().unwrap().clone()
            };
            let routes = weylres::pwtransform::c_coeff(
                &pair,
                &weylres::pwtransform::SymPoly { extended, poly },
                3,
            )?;
            let pass = witness.pass && routes.agree;
            let report = VerificationReport::from_bool(
                "pw-pair",
                pass,
                json!({"type": ty.letter().to_string(), "n": n, "k": k, "trials": trials}),
                json!({
                    "surjectivity_witnessed": witness.pass,
                    "witness_failures": witness.failures,
                    "coefficient_routes_agree": routes.agree,
                }),
                common.seed,
            );
            Ok(emit(&[report], common.json))
        }
        VerifyWhat::SigmaEquivariance {
            rank,
            lambda,
            common,
        } => {
            let ctx = weylres::rootsys::build(ClassicalType::D, rank)?;
            let coeffs = parse_u64_list(&lambda).map_err(weylres::Error::BadParams)?;
            let xi = propagation::class_one_weights(&ctx)?;
            let mu = xi.weight_for(&coeffs)?;
            let lam = ctx.rho.add(&mu);
            let r = spectral::check_sigma_equivariance(&ctx, &lam, true)?;
            let report = VerificationReport::from_bool(
                "sigma-equivariance",
                r.pass,
                json!({"rank": rank, "lambda_i": coeffs}),
                json!({
                    "denominator_fixed": r.denominator_fixed,
                    "identity_holds": r.identity_holds,
                }),
                common.seed,
            );
            Ok(emit(&[report], common.json))
        }
    }
}

fn run_dump(d: DumpArgs) -> Result<i32, weylres::Error> {
    let value = match d.what {
        DumpWhat::Rootsys { r#type: ty, rank } => {
            let ctx = weylres::rootsys::build_permissive(ty, rank)?;
            json!({"schema": weylres::SCHEMA, "rootsys": ctx.to_json()})
        }
        DumpWhat::Weyl {
            r#type: ty,
            rank,
            extended,
        } => {
            let group =
                weylgrp::WeylGroup::new(weylres::rootsys::build_permissive(ty, rank)?, extended)?;
            let order = group.predicted_order();
            let elements = if order <= 2000 {
                Some(
                    group
                        .enumerate()?
                        .iter()
                        .map(|w| {
                            json!({
                                "perm": (0..w.dim()).map(|i| w.image(i)).collect::<Vec<_>>(),
                                "signs": (0..w.dim()).map(|i| w.sign(i) as i64).collect::<Vec<_>>(),
                            })
                        })
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            json!({
                "schema": weylres::SCHEMA,
                "type": ty.letter().to_string(),
                "rank": rank,
                "extended": extended,
                "order": order.to_string(),
                "elements": elements,
            })
        }
        DumpWhat::Invariants { r#type: ty, rank } => {
            let fam = invariants::char_poly_family(ty, rank, true)?;
            json!({
                "schema": weylres::SCHEMA,
                "type": ty.letter().to_string(),
                "rank": rank,
                "pfaffian_index": fam.pfaffian_index,
                "generators": fam
                    .generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| json!({
                        "nu": i + 1,
                        "degree": g.total_degree(),
                        "text": g.to_string(),
                        "terms": g.to_json()["terms"],
                    }))
                    .collect::<Vec<_>>(),
            })
        }
        DumpWhat::Catalog => {
            json!({
                "schema": weylres::SCHEMA,
                "families": propagation::catalog_families(),
            })
        }
        DumpWhat::Xi { r#type: ty, rank } => {
            let ctx = weylres::rootsys::build_permissive(ty, rank)?;
            let xi = propagation::class_one_weights(&ctx)?;
            json!({
                "schema": weylres::SCHEMA,
                "type": ty.letter().to_string(),
                "rank": rank,
                "xi": xi.xi.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
            })
        }
    };
    println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    Ok(0)
}

fn run_catalog(c: CatalogArgs) -> Result<i32, weylres::Error> {
    let family = Family::parse(&c.family)?;
    let params = if family.takes_pq() {
        match (c.p, c.q) {
            (Some(p), Some(q)) => FamilyParams::PQ { p, q },
            _ => {
                return Err(weylres::Error::BadParams(
                    "this family takes --p and --q".into(),
                ))
            }
        }
    } else {
        match c.j {
            Some(j) => FamilyParams::J(j),
            None => return Err(weylres::Error::BadParams("this family takes --j".into())),
        }
    };
    let entry = propagation::catalog_lookup(family, params)?;
    if c.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schema": weylres::SCHEMA,
                "entry": entry.to_json(),
            }))
            .expect("json")
        );
    } else {
        println!(
            "{}: G = {} (compact {}), K = {}, rank {}, dim {}, Sigma_1/2 = {}_{}{}",
            entry.label,
            entry.g_noncompact,
            entry.g_compact,
            entry.k_subgroup,
            entry.rank,
            entry.dim,
            entry.sigma_half_type.letter(),
            entry.sigma_half_rank,
            if entry.nonreduced {
                " (nonreduced)"
            } else {
                ""
            }
        );
    }
    Ok(0)
}

fn run_branch(b: BranchArgs) -> Result<i32, weylres::Error> {
    let pair = propagation::make_pair(b.r#type, b.n, b.k)?;
    let coeffs = parse_u64_list(&b.weight).map_err(weylres::Error::BadParams)?;
    let xi_large = propagation::class_one_weights(&pair.large)?;
    let xi_small = propagation::class_one_weights(&pair.small)?;
    let mu = xi_large.weight_for(&coeffs)?;
    let components = spectral::branch(&pair, &mu, spectral::WEIGHT_CAP)?;
    let rows: Vec<serde_json::Value> = components
        .iter()
        .map(|(nu, m)| {
            json!({
                "weight": nu.to_json(),
                "i_vector": xi_small.class_one_coefficients(nu),
                "multiplicity": m,
                "dim": spectral::weyl_dim(&pair.small, nu).map(|d| d.to_string()).ok(),
            })
        })
        .collect();
    let value = json!({
        "schema": weylres::SCHEMA,
        "type": b.r#type.letter().to_string(),
        "n": b.n,
        "k": b.k,
        "highest_weight": mu.to_json(),
        "dim": spectral::weyl_dim(&pair.large, &mu)?.to_string(),
        "components": rows,
    });
    if b.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        println!(
            "branch {}_{} -> {}_{}  dim {}",
            b.r#type.letter(),
            b.k,
            b.r#type.letter(),
            b.n,
            value["dim"].as_str().unwrap_or("?")
        );
        for r in &rows {
            println!(
                "  mult {} x dim {:>6}  weight {}",
                r["multiplicity"],
                r["dim"].as_str().unwrap_or("?"),
                r["weight"]
            );
        }
    }
    Ok(0)
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
