//! Command-line front end. Every report is JSON on stdout with a
//! schema_version field and rationals rendered "p/q"; progress and errors go
//! to stderr. Exit codes: 0 all requested verifications pass, 1 a
//! verification failed, 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use weakdual_core::acceptance;
use weakdual_core::classical::{casselman_shalika_value, hecke_local_factor, tate_local_factor};
use weakdual_core::cones::{enumerate_automorphic, enumerate_relevant};
use weakdual_core::engine::{assemble_global, automorphic_tables, period_pair, PlaceInput};
use weakdual_core::integrality::{
    is_integral, oracle_agreement_garrett, oracle_agreement_ginzburg, LocalPoint, Vt,
};
use weakdual_core::lfactors::{hilbert_series, spectral_tables, LfactorSpace};
use weakdual_core::rat::{fmt_q, parse_q, Q};
use weakdual_core::reptheory::SatakePoint;
use weakdual_core::rootdata::{
    all_cases, c3_auxiliary, case_description, load_case, CaseData, CoweightVector,
};
use weakdual_core::sampling::{sample_satake, seed_from_env};
use weakdual_core::series::{GradedSeries, HalfPowerSeries};

const SCHEMA_VERSION: &str = "1";
const DEFAULT_SEED: u64 = 2024;

#[derive(Parser)]
#[command(
    name = "weakdual",
    about = "Exact-arithmetic checks for singular rank-one period identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the case catalog with pairing data and derived constants
    Groups {
        /// Restrict to one case
        #[arg(long)]
        case: Option<String>,
    },
    /// Enumerate relevant weights or automorphic coweights stratified by degree
    Weights {
        #[arg(long)]
        case: String,
        #[arg(long, value_enum, default_value_t = WeightKind::Relevant)]
        kind: WeightKind,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Hilbert series of a catalogued cone by weight enumeration
    Hilbert {
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 12)]
        trunc: usize,
    },
    /// Local factor of a space at given Satake points
    Lfactor {
        /// Case name or a1 | a2 | a3 | rank1cone | tensor
        #[arg(long)]
        space: String,
        /// Satake point as comma-separated rationals; repeat for tensor spaces
        #[arg(long = "point", required = true, allow_hyphen_values = true)]
        points: Vec<String>,
        #[arg(long, default_value_t = 12)]
        trunc: usize,
    },
    /// Integrality of local parameters against the cone forms
    Integrality {
        #[command(subcommand)]
        action: IntegralityAction,
    },
    /// Compare automorphic and spectral local factors at sampled points
    Match {
        /// ginzburg | garrett
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 12)]
        trunc: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Overrides the WEAKDUAL_SEED environment variable and the default
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Global period identity: local checks at listed places plus the ledger
    Identity {
        /// ginzburg | garrett
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 2)]
        genus: i64,
        /// JSON file: [{"q": int, "satake": {"semisimple": ["p/q",...], "gm": "p/q"}}]
        #[arg(long)]
        places: PathBuf,
        #[arg(long, default_value_t = 12)]
        trunc: usize,
    },
    /// Classical anchors: Tate factors, Hecke unfolding, Whittaker values
    Classical {
        #[arg(long, value_enum)]
        check: ClassicalCheck,
        /// Tate character value chi(p) as "p/q"
        #[arg(long, allow_hyphen_values = true)]
        chi_p: Option<String>,
        /// Satake point as comma-separated rationals (hecke, cs)
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Coweight as comma-separated rationals (cs)
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
        /// Case name for the cs check
        #[arg(long)]
        case: Option<String>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        twist: i64,
        #[arg(long, default_value_t = 12)]
        trunc: i64,
    },
    /// Run the full acceptance suite and report each criterion
    Acceptance,
}

#[derive(Subcommand)]
enum IntegralityAction {
    /// Decide integrality of one local parameter
    Check {
        #[arg(long)]
        case: String,
        /// Coweight as comma-separated rationals
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        /// Twisting valuation: an integer or "inf"
        #[arg(long, allow_hyphen_values = true)]
        vt: String,
    },
    /// Sweep a grid and compare the forms with the valuation oracle
    Verify {
        /// ginzburg_auto | garrett_auto
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long, default_value_t = -2, allow_negative_numbers = true)]
        vt_lo: i64,
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        vt_hi: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightKind {
    Relevant,
    Automorphic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassicalCheck {
    Tate,
    Hecke,
    Cs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Groups { case } => cmd_groups(case),
        Command::Weights { case, kind, max_degree } => cmd_weights(&case, kind, max_degree),
        Command::Hilbert { case, trunc } => cmd_hilbert(&case, trunc),
        Command::Lfactor { space, points, trunc } => cmd_lfactor(&space, &points, trunc),
        Command::Integrality { action } => cmd_integrality(action),
        Command::Match { pair, trunc, samples, seed } => {
            cmd_match(&pair, trunc, samples, seed.unwrap_or_else(|| seed_from_env(DEFAULT_SEED)))
        }
        Command::Identity { pair, genus, places, trunc } => {
            cmd_identity(&pair, genus, &places, trunc)
        }
        Command::Classical { check, chi_p, point, chi, case, twist, trunc } => {
            cmd_classical(check, chi_p, point, chi, case, twist, trunc)
        }
        Command::Acceptance => cmd_acceptance(),
    }
}

fn report(command: &str, fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("command".into(), json!(command));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("report serializes"));
}

fn parse_rationals(s: &str) -> Result<Vec<Q>> {
    s.split(',')
        .map(|part| parse_q(part.trim()).map_err(|e| anyhow!("{e}")))
        .collect::<Result<Vec<_>>>()
        .with_context(|| format!("parsing rational list {s:?}"))
}

fn parse_point(s: &str) -> Result<SatakePoint> {
    SatakePoint::new(parse_rationals(s)?, None).map_err(|e| anyhow!("{e}"))
}

fn coeff_strings(s: &GradedSeries) -> Vec<String> {
    s.coeffs().iter().map(fmt_q).collect()
}

fn half_power_strings(s: &HalfPowerSeries, trunc: usize) -> Vec<String> {
    (0..=trunc as i64).map(|d| fmt_q(&s.coeff(d))).collect()
}

fn constants_json(cd: &CaseData) -> Value {
    match cd.derived_constants() {
        Ok(c) => json!({
            "a": fmt_q(&c.a),
            "gamma": fmt_q(&c.gamma),
            "gimel": fmt_q(&c.gimel),
            "epsilon": fmt_q(&c.epsilon),
            "eigenform_power": fmt_q(&c.eigenform_power),
            "dim_g": c.dim_g,
            "dim_u": c.dim_u,
            "dim_g_mod_u": c.dim_g_mod_u,
            "discrepancy_exponent": fmt_q(&c.discrepancy_exponent),
        }),
        Err(_) => Value::Null,
    }
}

fn cmd_groups(filter: Option<String>) -> Result<bool> {
    let mut cases: Vec<&CaseData> = all_cases().collect();
    cases.push(c3_auxiliary());
    if let Some(name) = &filter {
        cases.retain(|c| &c.name == name);
        if cases.is_empty() {
            bail!("unknown case {name}");
        }
    }
    let listed: Vec<Value> = cases
        .iter()
        .map(|cd| {
            json!({
                "description": serde_json::to_value(case_description(cd)).expect("description"),
                "constants": constants_json(cd),
                "cone_dim": cd.cone_dim,
            })
        })
        .collect();
    emit(&report("groups", vec![("cases", Value::Array(listed))]));
    Ok(true)
}

fn cmd_weights(name: &str, kind: WeightKind, max_degree: usize) -> Result<bool> {
    let cd = load_case(name)?;
    let (kind_name, by_degree): (&str, Vec<Vec<Vec<Q>>>) = match kind {
        WeightKind::Relevant => {
            let set = enumerate_relevant(cd, max_degree)?;
            ("relevant", set.by_degree.iter().map(|s| s.iter().map(|w| w.0.clone()).collect()).collect())
        }
        WeightKind::Automorphic => {
            let set = enumerate_automorphic(cd, max_degree)?;
            ("automorphic", set.by_degree.iter().map(|s| s.iter().map(|c| c.0.clone()).collect()).collect())
        }
    };
    let total: usize = by_degree.iter().map(Vec::len).sum();
    let mut strata = Map::new();
    for (d, stratum) in by_degree.iter().enumerate() {
        let rows: Vec<Value> =
            stratum.iter().map(|w| json!(w.iter().map(fmt_q).collect::<Vec<_>>())).collect();
        strata.insert(d.to_string(), Value::Array(rows));
    }
    emit(&report(
        "weights",
        vec![
            ("case", json!(cd.name)),
            ("kind", json!(kind_name)),
            ("max_degree", json!(max_degree)),
            ("total", json!(total)),
            ("by_degree", Value::Object(strata)),
        ],
    ));
    Ok(true)
}

fn cmd_hilbert(name: &str, trunc: usize) -> Result<bool> {
    let cd = load_case(name)?;
    let s = hilbert_series(cd, trunc)?;
    emit(&report(
        "hilbert",
        vec![
            ("space", json!(cd.name)),
            ("trunc", json!(trunc)),
            ("coeffs", json!(coeff_strings(&s))),
        ],
    ));
    Ok(true)
}

fn cmd_lfactor(space_name: &str, point_args: &[String], trunc: usize) -> Result<bool> {
    let space = LfactorSpace::parse(space_name)?;
    let points: Vec<SatakePoint> =
        point_args.iter().map(|s| parse_point(s)).collect::<Result<_>>()?;
    let s = space.local_factor(&points, trunc)?;
    let rendered: Vec<Vec<String>> =
        points.iter().map(|p| p.values().iter().map(fmt_q).collect()).collect();
    emit(&report(
        "lfactor",
        vec![
            ("space", json!(space_name)),
            ("points", json!(rendered)),
            ("trunc", json!(trunc)),
            ("coeffs", json!(coeff_strings(&s))),
        ],
    ));
    Ok(true)
}

fn cmd_integrality(action: IntegralityAction) -> Result<bool> {
    match action {
        IntegralityAction::Check { case, chi, vt } => {
            let cd = load_case(&case)?;
            let coords = parse_rationals(&chi)?;
            let v_t = match vt.as_str() {
                "inf" | "infinity" => Vt::Infinite,
                s => Vt::Finite(s.parse::<i64>().with_context(|| format!("valuation {s:?}"))?),
            };
            let point = LocalPoint { chi: CoweightVector(coords.clone()), v_t };
            let integral = is_integral(cd, &point)?;
            emit(&report(
                "integrality check",
                vec![
                    ("case", json!(cd.name)),
                    ("chi", json!(coords.iter().map(fmt_q).collect::<Vec<_>>())),
                    ("vt", json!(vt)),
                    ("integral", json!(integral)),
                ],
            ));
            Ok(true)
        }
        IntegralityAction::Verify { case, bound, vt_lo, vt_hi } => {
            let r = match case.as_str() {
                "ginzburg_auto" => oracle_agreement_ginzburg(bound, vt_lo, vt_hi)?,
                "garrett_auto" => oracle_agreement_garrett(bound, vt_lo, vt_hi)?,
                other => bail!("no valuation oracle for case {other}"),
            };
            let pass = r.pass();
            emit(&report(
                "integrality verify",
                vec![
                    ("case", json!(r.case_name)),
                    ("bound", json!(bound)),
                    ("vt_lo", json!(vt_lo)),
                    ("vt_hi", json!(vt_hi)),
                    ("grid_size", json!(r.grid_size)),
                    ("disagreements", json!(r.disagreements)),
                    ("pass", json!(pass)),
                ],
            ));
            Ok(pass)
        }
    }
}

fn cmd_match(pair_name: &str, trunc: usize, samples: usize, seed: u64) -> Result<bool> {
    if samples == 0 {
        bail!("samples must be at least 1");
    }
    let pair = period_pair(pair_name)?;
    let aut = automorphic_tables(pair.automorphic, trunc)?;
    let spec = spectral_tables(pair.dual, trunc)?;
    let points = sample_satake(pair.dual.rank, samples, seed);
    let mut verdicts = Vec::with_capacity(points.len());
    let mut all_pass = true;
    for point in &points {
        let a = aut.local_factor(point)?;
        let s = spec.local_factor(point)?.to_half_power(1);
        let first = a.first_mismatch(&s, trunc as i64);
        all_pass &= first.is_none();
        verdicts.push(json!({
            "label": point.label,
            "values": point.values().iter().map(fmt_q).collect::<Vec<_>>(),
            "automorphic": half_power_strings(&a, trunc),
            "spectral": half_power_strings(&s, trunc),
            "pass": first.is_none(),
            "first_mismatch_degree": first,
        }));
    }
    emit(&report(
        "match",
        vec![
            ("pair", json!(pair_name)),
            ("automorphic_case", json!(pair.automorphic.name)),
            ("dual_case", json!(pair.dual.name)),
            ("trunc", json!(trunc)),
            ("samples", json!(samples)),
            ("seed", json!(seed)),
            ("points", Value::Array(verdicts)),
            ("pass", json!(all_pass)),
        ],
    ));
    Ok(all_pass)
}

#[derive(Deserialize)]
struct PlaceFileEntry {
    q: u64,
    satake: PlaceSatake,
}

#[derive(Deserialize)]
struct PlaceSatake {
    semisimple: Vec<String>,
    gm: String,
}

fn cmd_identity(pair_name: &str, genus: i64, places_path: &PathBuf, trunc: usize) -> Result<bool> {
    let pair = period_pair(pair_name)?;
    let raw = std::fs::read_to_string(places_path)
        .with_context(|| format!("reading {}", places_path.display()))?;
    let entries: Vec<PlaceFileEntry> =
        serde_json::from_str(&raw).with_context(|| format!("parsing {}", places_path.display()))?;
    if entries.is_empty() {
        bail!("places file lists no places");
    }
    let mut places = Vec::with_capacity(entries.len());
    for e in &entries {
        let mut values: Vec<Q> = e
            .satake
            .semisimple
            .iter()
            .map(|s| parse_q(s).map_err(|err| anyhow!("{err}")))
            .collect::<Result<_>>()?;
        values.push(parse_q(&e.satake.gm).map_err(|err| anyhow!("{err}"))?);
        if values.len() != pair.dual.rank {
            bail!(
                "place q={} has {} coordinates, case {} needs {}",
                e.q,
                values.len(),
                pair.dual.name,
                pair.dual.rank
            );
        }
        let point = SatakePoint::new(values, Some(format!("q={}", e.q)))?;
        places.push(PlaceInput { q: e.q, point });
    }
    let g = assemble_global(pair.automorphic, genus, &places, trunc)?;
    let pass = g.pass;
    let Value::Object(body) = serde_json::to_value(&g)? else {
        unreachable!("comparison serializes to an object")
    };
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("command".into(), json!("identity"));
    map.insert("pair".into(), json!(pair_name));
    map.extend(body);
    emit(&Value::Object(map));
    Ok(pass)
}

fn cmd_classical(
    check: ClassicalCheck,
    chi_p: Option<String>,
    point: Option<String>,
    chi: Option<String>,
    case: Option<String>,
    twist: i64,
    trunc: i64,
) -> Result<bool> {
    match check {
        ClassicalCheck::Tate => {
            let chi_p = chi_p.ok_or_else(|| anyhow!("tate check needs --chi-p"))?;
            let value = parse_q(&chi_p).map_err(|e| anyhow!("{e}"))?;
            if trunc < 0 {
                bail!("trunc must be nonnegative");
            }
            let s = tate_local_factor(&value, trunc as usize)?;
            // The defining identity: (1 - chi(p) t) L(chi, t) = 1.
            let product = GradedSeries::one_minus_term(trunc as usize, &value, 1).mul(&s);
            let pass = product.coeffs() == GradedSeries::one(trunc as usize).coeffs();
            emit(&report(
                "classical tate",
                vec![
                    ("chi_p", json!(fmt_q(&value))),
                    ("trunc", json!(trunc)),
                    ("coeffs", json!(coeff_strings(&s))),
                    ("pass", json!(pass)),
                ],
            ));
            Ok(pass)
        }
        ClassicalCheck::Hecke => {
            let point = point.ok_or_else(|| anyhow!("hecke check needs --point"))?;
            let p = parse_point(&point)?;
            let v = hecke_local_factor(&p, twist, trunc)?;
            let pass = v.pass;
            emit(&report(
                "classical hecke",
                vec![
                    ("point", json!(p.values().iter().map(fmt_q).collect::<Vec<_>>())),
                    ("twist", json!(v.m)),
                    ("trunc", json!(v.trunc)),
                    ("pass", json!(v.pass)),
                    ("first_mismatch_degree", json!(v.first_mismatch_degree)),
                ],
            ));
            Ok(pass)
        }
        ClassicalCheck::Cs => {
            let case_name = case.ok_or_else(|| anyhow!("cs check needs --case"))?;
            let chi = chi.ok_or_else(|| anyhow!("cs check needs --chi"))?;
            let point = point.ok_or_else(|| anyhow!("cs check needs --point"))?;
            let cd = load_case(&case_name)?;
            let coords = parse_rationals(&chi)?;
            let p = parse_point(&point)?;
            let v = casselman_shalika_value(cd, &CoweightVector(coords.clone()), &p, twist)?;
            emit(&report(
                "classical cs",
                vec![
                    ("case", json!(cd.name)),
                    ("chi", json!(coords.iter().map(fmt_q).collect::<Vec<_>>())),
                    ("point", json!(p.values().iter().map(fmt_q).collect::<Vec<_>>())),
                    ("twist", json!(twist)),
                    ("character", json!(fmt_q(&v.character))),
                    ("u_exponent", json!(fmt_q(&v.u_exponent))),
                ],
            ));
            Ok(true)
        }
    }
}

fn cmd_acceptance() -> Result<bool> {
    let results = acceptance::run_all();
    let mut all_pass = true;
    for r in &results {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        eprintln!("[{tag}] criterion {:02}: {} ({})", r.id, r.name, r.details);
        all_pass &= r.pass;
    }
    emit(&report(
        "acceptance",
        vec![("criteria", serde_json::to_value(&results)?), ("pass", json!(all_pass))],
    ));
    Ok(all_pass)
}
