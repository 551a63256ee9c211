//! Scriptable interface over the library: single queries, grid sweeps and
//! the route-agreement crosscheck harness, with text/json/csv rendering
//! and an optional append-only result cache.
//!
//! Exit codes: 0 success, 1 crosscheck failures, 2 flag errors, 3 internal
//! assertion (non-integer characteristic, failed exact division, ...).

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigRational, Zero};
use serde_json::{json, Value};

use pairs_verlinde::bigfloat::BigFloat;
use pairs_verlinde::chambers::{
    blowup_level_b, canonical_label, chamber_index, dictionary, is_ample, region_ok, theta_label,
    walls, ChamberSpec, LineBundleLabel,
};
use pairs_verlinde::crosscheck::{run_crosscheck, Grid, Suite};
use pairs_verlinde::error::Error;
use pairs_verlinde::poincare::{p_bundles_hn, p_pairs_moduli, p_symprod};
use pairs_verlinde::poly::{render, Polynomial};
use pairs_verlinde::rat::{rat_string, Rat};
use pairs_verlinde::symprod::{ni_residue, ni_ring, ni_y};
use pairs_verlinde::verlinde::{
    dimv, dimv_residue, dimv_sum, verlinde_exact, verlinde_trig, DimStatus, FSpec, Parity,
    VerlindeQuery,
};

#[derive(Parser)]
#[command(name = "pairs-verlinde", version, about = "Exact Verlinde numbers, linear-system dimensions and Betti numbers for moduli of stable pairs")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Append-only JSON-lines result cache
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RoutesArg {
    All,
    Residue,
    Sum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    #[value(name = "Mi", alias = "mi")]
    Mi,
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "Xj", alias = "xj")]
    Xj,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Ni,
    Dimv,
    Poincare,
    Verlinde,
    Identities,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension of the level-k Verlinde space of rank-2 bundles
    Verlinde {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        k: i64,
        /// Parity of the determinant degree
        #[arg(long, value_enum)]
        parity: ParityArg,
    },
    /// dim V_{m,n} with per-route trace
    Dimv {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = RoutesArg::All)]
        routes: RoutesArg,
    },
    /// Poincare polynomial of a moduli space or symmetric product
    Poincare {
        /// Mi: pair moduli in chamber i; N: fixed-determinant bundles;
        /// Xj: j-th symmetric product of the curve
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        i: Option<i64>,
        #[arg(long)]
        j: Option<i64>,
    },
    /// Wall-crossing Euler characteristics N_i by all three routes
    Ni {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Single chamber index; omitted sweeps i = 0..=b
        #[arg(long)]
        i: Option<i64>,
    },
    /// Chamber structure, walls and ample cones
    Chamber {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        /// Stability parameter as a fraction P/Q
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Route-agreement suites over a parameter grid
    Crosscheck {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        gmax: i64,
        #[arg(long, default_value_t = 12)]
        dmax: i64,
        #[arg(long, default_value_t = 8)]
        mmax: i64,
        #[arg(long, default_value_t = 8)]
        nmax: i64,
        /// Worker threads (results are identical for any value)
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn precision_digits() -> u32 {
    std::env::var("PAIRS_VERLINDE_PRECISION")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(40)
}

fn main() {
    let cli = Cli::parse(); // clap exits 2 on flag errors
    let key = canonical_key(&cli.cmd);
    let record = match cached(&cli.cache, &key) {
        Some(v) => v,
        None => match execute(&cli.cmd) {
            Ok(v) => {
                store(&cli.cache, &key, &v);
                v
            }
            Err(e) => {
                eprintln!("error: {e}");
                std::process::exit(3);
            }
        },
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&record).unwrap()),
        Format::Text => print!("{}", render_text(&record)),
        Format::Csv => print!("{}", render_csv(&record)),
    }
    if record.pointer("/result/failures").and_then(Value::as_u64).unwrap_or(0) > 0 {
        std::process::exit(1);
    }
}

fn canonical_key(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Verlinde { g, k, parity } => {
            format!("verlinde g={g} k={k} parity={}", parity_str(*parity))
        }
        Cmd::Dimv { g, d, m, n, routes } => {
            let r = match routes {
                RoutesArg::All => "all",
                RoutesArg::Residue => "residue",
                RoutesArg::Sum => "sum",
            };
            format!("dimv g={g} d={d} m={m} n={n} routes={r}")
        }
        Cmd::Poincare { space, g, d, i, j } => {
            let s = match space {
                SpaceArg::Mi => "Mi",
                SpaceArg::N => "N",
                SpaceArg::Xj => "Xj",
            };
            format!(
                "poincare space={s} g={g} d={} i={} j={}",
                opt(d), opt(i), opt(j)
            )
        }
        Cmd::Ni { g, d, m, n, i } => format!("ni g={g} d={d} m={m} n={n} i={}", opt(i)),
        Cmd::Chamber { g, d, m, n, sigma } => format!(
            "chamber g={g} d={d} m={} n={} sigma={}",
            opt(m), opt(n), sigma.as_deref().unwrap_or("-")
        ),
        Cmd::Crosscheck { suite, gmax, dmax, mmax, nmax, .. } => format!(
            "crosscheck suite={} gmax={gmax} dmax={dmax} mmax={mmax} nmax={nmax}",
            suite_str(*suite)
        ),
    }
}

fn opt(v: &Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

fn parity_str(p: ParityArg) -> &'static str {
    match p {
        ParityArg::Even => "even",
        ParityArg::Odd => "odd",
    }
}

fn suite_str(s: SuiteArg) -> &'static str {
    match s {
        SuiteArg::All => "all",
        SuiteArg::Ni => "ni",
        SuiteArg::Dimv => "dimv",
        SuiteArg::Poincare => "poincare",
        SuiteArg::Verlinde => "verlinde",
        SuiteArg::Identities => "identities",
    }
}

fn poly_json(p: &Polynomial) -> Value {
    json!({
        "polynomial": render(p, "t"),
        "coefficients": p.coeffs().iter().map(rat_string).collect::<Vec<_>>(),
    })
}

fn trig_decimal(x: &BigFloat, digits: u32) -> String {
    let r = x.to_rational();
    let scale = num::BigInt::from(10).pow(digits.min(30));
    let scaled = (r * BigRational::from_integer(scale.clone())).round();
    let v = BigRational::new(scaled.to_integer(), scale);
    format!("{:.1$}", rat_to_f64(&v), 15)
}

fn rat_to_f64(r: &Rat) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

fn execute(cmd: &Cmd) -> Result<Value, Error> {
    let query_key = canonical_key(cmd);
    let (result, trace) = match cmd {
        Cmd::Verlinde { g, k, parity } => {
            let parity = match parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            let q = VerlindeQuery { g: *g, k: *k, parity };
            let exact = verlinde_exact(&q)?;
            let digits = precision_digits();
            let trig = verlinde_trig(&q, digits);
            if trig.round() != exact {
                return Err(Error::PrecisionInsufficient {
                    defect: format!("trig {} vs exact {exact}", trig.to_f64()),
                });
            }
            (
                json!({ "value": exact.to_string() }),
                json!([
                    { "route": "residue", "value": exact.to_string() },
                    { "route": "trig", "value": trig_decimal(&trig, digits), "digits": digits },
                ]),
            )
        }
        Cmd::Dimv { g, d, m, n, routes } => {
            let full = dimv(*g, *d, *m, *n)?;
            let status = serde_json::to_value(full.status).unwrap();
            let value = full.value.as_ref().map(|v| v.to_string());
            let trace: Vec<Value> = match routes {
                RoutesArg::All => full
                    .trace
                    .iter()
                    .map(|(r, v)| json!({ "route": r, "value": v.to_string() }))
                    .collect(),
                RoutesArg::Residue | RoutesArg::Sum => {
                    let name = if *routes == RoutesArg::Residue { "residue" } else { "sum" };
                    if full.status == DimStatus::ResidueRegion {
                        let spec = FSpec::new(*g, *d, *m, *n)?;
                        let v = if *routes == RoutesArg::Residue {
                            dimv_residue(&spec)?
                        } else {
                            dimv_sum(&spec)?
                        };
                        vec![json!({ "route": name, "value": v.to_string() })]
                    } else {
                        vec![]
                    }
                }
            };
            (json!({ "status": status, "value": value }), Value::Array(trace))
        }
        Cmd::Poincare { space, g, d, i, j } => {
            let p = match space {
                SpaceArg::Xj => {
                    let j = j.ok_or_else(|| Error::OutOfRange("--j required for Xj".into()))?;
                    if j < 0 {
                        return Err(Error::OutOfRange("--j must be nonnegative".into()));
                    }
                    p_symprod(j, *g)
                }
                SpaceArg::N => p_bundles_hn(*g)?,
                SpaceArg::Mi => {
                    let d = d.ok_or_else(|| Error::OutOfRange("--d required for Mi".into()))?;
                    let i = i.ok_or_else(|| Error::OutOfRange("--i required for Mi".into()))?;
                    p_pairs_moduli(i, d, *g)?
                }
            };
            (poly_json(&p), json!([]))
        }
        Cmd::Ni { g, d, m, n, i } => {
            let spec = ChamberSpec::new(*g, *d)?;
            if !region_ok(*m, *n, &spec) {
                return Err(Error::RegionViolation);
            }
            let b = blowup_level_b(*m, *n, &spec)?;
            let levels: Vec<i64> = match i {
                Some(i) => vec![*i],
                None => (0..=b).collect(),
            };
            let mut rows = Vec::new();
            for i in levels {
                let a = ni_ring(i, *m, *n, *d, *g)?;
                let r = ni_residue(i, *m, *n, *d, *g)?;
                let y = ni_y(i, *m, *n, *d, *g)?;
                if a != r || r != y {
                    return Err(Error::NonInteger(format!(
                        "route disagreement at i={i}: ring {a}, residue {r}, series {y}"
                    )));
                }
                rows.push(json!({ "i": i, "value": a.to_string() }));
            }
            (
                json!({ "b": b, "terms": rows }),
                json!([{ "routes": ["ring", "residue", "series"], "agree": true }]),
            )
        }
        Cmd::Chamber { g, d, m, n, sigma } => {
            let spec = ChamberSpec::new(*g, *d)?;
            let mut result = json!({
                "w": spec.w(),
                "walls": walls(&spec).iter().map(rat_string).collect::<Vec<_>>(),
            });
            if let Some(s) = sigma {
                let sig = parse_fraction(s)?;
                match chamber_index(&sig, &spec) {
                    Ok(idx) => result["chamber"] = json!(idx),
                    Err(Error::OnWall(w)) => result["chamber"] = json!(format!("wall at {w}")),
                    Err(e) => return Err(e),
                }
            }
            if let (Some(m), Some(n)) = (m, n) {
                let mut verdicts = Vec::new();
                for i in 1..=spec.w() {
                    let v = is_ample(&LineBundleLabel { m: *m, n: *n, i }, &spec)?;
                    verdicts.push(json!({ "i": i, "verdict": serde_json::to_value(v).unwrap() }));
                }
                result["ample"] = Value::Array(verdicts);
                let rec = dictionary(*m, *n, &spec);
                result["dictionary"] = serde_json::to_value(&rec).unwrap();
                if region_ok(*m, *n, &spec) {
                    result["b"] = json!(blowup_level_b(*m, *n, &spec)?);
                }
                let k = canonical_label(spec.w(), &spec);
                result["canonical"] = json!({ "m": k.m, "n": k.n });
                if let Some((tm, tn)) = theta_label(1, &spec) {
                    result["theta"] = json!({ "m": tm, "n": tn });
                }
            }
            (result, json!([]))
        }
        Cmd::Crosscheck { suite, gmax, dmax, mmax, nmax, jobs } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Ni => Suite::Ni,
                SuiteArg::Dimv => Suite::Dimv,
                SuiteArg::Poincare => Suite::Poincare,
                SuiteArg::Verlinde => Suite::Verlinde,
                SuiteArg::Identities => Suite::Identities,
            };
            let grid = Grid { gmax: *gmax, dmax: *dmax, mmax: *mmax, nmax: *nmax };
            let report = run_crosscheck(suite, grid, *jobs)?;
            (serde_json::to_value(&report).unwrap(), json!([]))
        }
    };
    Ok(json!({
        "query": query_key,
        "result": result,
        "trace": trace,
    }))
}

fn parse_fraction(s: &str) -> Result<Rat, Error> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<num::BigInt>()
            .map_err(|_| Error::OutOfRange(format!("bad fraction `{s}`")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

fn cached(path: &Option<PathBuf>, key: &str) -> Option<Value> {
    let path = path.as_ref()?;
    let file = std::fs::File::open(path).ok()?;
    let mut hit = None;
    for line in std::io::BufReader::new(file).lines().map_while(|l| l.ok()) {
        if let Ok(v) = serde_json::from_str::<Value>(&line) {
            if v.get("key").and_then(Value::as_str) == Some(key) {
                hit = v.get("record").cloned(); // last write wins
            }
        }
    }
    hit
}

fn store(path: &Option<PathBuf>, key: &str, record: &Value) {
    let Some(path) = path else { return };
    let line = json!({ "key": key, "record": record });
    if let Ok(mut f) = std::fs::OpenOptions::new().create(true).append(true).open(path) {
        let _ = writeln!(f, "{line}");
    }
}

fn render_text(record: &Value) -> String {
    let mut out = String::new();
    let result = &record["result"];
    if let Some(v) = result.get("value") {
        match v {
            Value::Null => out.push_str("value: undetermined (outside the validated region)\n"),
            _ => out.push_str(&format!("value: {}\n", v.as_str().unwrap_or("?"))),
        }
        if let Some(s) = result.get("status").and_then(Value::as_str) {
            out.push_str(&format!("status: {s}\n"));
        }
    } else if let Some(p) = result.get("polynomial").and_then(Value::as_str) {
        out.push_str(&format!("{p}\n"));
    } else if let Some(terms) = result.get("terms").and_then(Value::as_array) {
        out.push_str(&format!("b = {}\n", result["b"]));
        for t in terms {
            out.push_str(&format!("N_{} = {}\n", t["i"], t["value"].as_str().unwrap_or("?")));
        }
    } else if let Some(suites) = result.get("suites").and_then(Value::as_array) {
        for s in suites {
            let fails = s["failures"].as_array().map(Vec::len).unwrap_or(0);
            out.push_str(&format!(
                "suite {}: {} cases, {} failures\n",
                s["suite"].as_str().unwrap_or("?"),
                s["cases"],
                fails
            ));
            for f in s["failures"].as_array().into_iter().flatten() {
                out.push_str(&format!(
                    "  FAIL {}: {}\n",
                    f["id"].as_str().unwrap_or("?"),
                    f["detail"].as_str().unwrap_or("?")
                ));
            }
        }
        out.push_str(&format!(
            "total: {} cases, {} failures\n",
            result["cases"], result["failures"]
        ));
    } else if result.get("w").is_some() {
        out.push_str(&format!("w = {}\n", result["w"]));
        if let Some(ws) = result.get("walls").and_then(Value::as_array) {
            let list: Vec<&str> = ws.iter().filter_map(Value::as_str).collect();
            out.push_str(&format!("walls: {}\n", list.join(", ")));
        }
        if let Some(c) = result.get("chamber") {
            match c.as_str() {
                Some(s) => out.push_str(&format!("chamber: {s}\n")),
                None => out.push_str(&format!("chamber: {c}\n")),
            }
        }
        if let Some(amp) = result.get("ample").and_then(Value::as_array) {
            for a in amp {
                out.push_str(&format!(
                    "M_{}: {}\n",
                    a["i"],
                    a["verdict"].as_str().unwrap_or("?")
                ));
            }
        }
    }
    for t in record["trace"].as_array().into_iter().flatten() {
        if let Some(route) = t.get("route").and_then(Value::as_str) {
            out.push_str(&format!("  {route}: {}\n", t["value"].as_str().unwrap_or("?")));
        }
    }
    out
}

fn render_csv(record: &Value) -> String {
    let result = &record["result"];
    let query = record["query"].as_str().unwrap_or("");
    if let Some(terms) = result.get("terms").and_then(Value::as_array) {
        let mut out = String::from("query,i,value\n");
        for t in terms {
            out.push_str(&format!("{query},{},{}\n", t["i"], t["value"].as_str().unwrap_or("")));
        }
        return out;
    }
    if let Some(suites) = result.get("suites").and_then(Value::as_array) {
        let mut out = String::from("query,suite,cases,failures\n");
        for s in suites {
            let fails = s["failures"].as_array().map(Vec::len).unwrap_or(0);
            out.push_str(&format!(
                "{query},{},{},{fails}\n",
                s["suite"].as_str().unwrap_or(""),
                s["cases"]
            ));
        }
        return out;
    }
    let value = result
        .get("value")
        .map(|v| v.as_str().unwrap_or("").to_string())
        .or_else(|| result.get("polynomial").and_then(Value::as_str).map(String::from))
        .unwrap_or_default();
    format!("query,value\n{query},{value}\n")
}
