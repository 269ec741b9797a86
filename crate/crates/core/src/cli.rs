//! Command-line front end. [`run`] parses arguments, runs one subcommand
//! and writes its report; `main` only forwards the exit status.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::charging::{charge_audit, charge_cap_closed_form};
use crate::constructions::{
    construction_report, ConstructionKind, ConstructionSpec, TREND_CONSTANTS,
};
use crate::crossing::{Universe, INDEXING_CONVENTION, MAX_POINTS};
use crate::enumerate::{
    count_plane_graphs, enumerate_triangulations, expected_degree_vector, work_estimate,
    EnumConfig, DEFAULT_MAX_N,
};
use crate::error::Error;
use crate::geometry::PointSet;
use crate::pts;
use crate::verify::{ClaimGroup, Status, VerificationReport, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the default point-count cap.
pub const MAX_N_ENV: &str = "PLANEGRAPH_MAX_N";

/// Above this size a work estimate is printed before enumerating.
const ESTIMATE_ABOVE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "planegraph",
    version,
    about = "Exhaustive plane graph statistics on small point sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,

    /// Report format (default json, csv for construction-report).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest point count to enumerate.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,

    /// Lift the point-count cap up to the hard limit.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a point file is well formed and in general position.
    Validate { pts: PathBuf },
    /// Number of plane graphs.
    Count { pts: PathBuf },
    /// Exact expected degree vector of a uniform random plane graph.
    Degrees { pts: PathBuf },
    /// Triangulation count and degree census.
    Triangulations { pts: PathBuf },
    /// Charging bookkeeping: families, graph charges and the visibility census.
    ChargeAudit { pts: PathBuf },
    /// Verify the degree bounds and supporting lemmas exhaustively.
    Verify {
        pts: PathBuf,
        /// Comma-separated claim groups; defaults to all point-set claims.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
    },
    /// Generate a point set.
    Gen {
        /// convex_chain, cap_with_apex or triangular_hull_random.
        kind: String,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output .pts path; stdout when omitted.
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Exact convex counts against the asymptotic leading term, and the
    /// expected-isolated-vertex trend of the apex construction.
    ConstructionReport { n_max: usize },
}

struct Context<'a> {
    cli: &'a Cli,
    cfg: EnumConfig,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    fn format(&self, default: Format) -> Format {
        self.cli.format.unwrap_or(default)
    }

    fn load(&mut self, path: &Path) -> Result<(PointSet, Universe), Error> {
        let points = pts::read(path)?;
        let n = points.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints { n, max: MAX_POINTS });
        }
        self.cfg.check(n)?;
        self.announce(n);
        let u = Universe::new(points.clone())?;
        Ok((points, u))
    }

    fn announce(&mut self, n: usize) {
        if n > ESTIMATE_ABOVE {
            let (low, high) = work_estimate(n);
            let _ = writeln!(
                self.err,
                "enumerating n = {n}: expect between {low:.3e} and {high:.3e} plane graphs"
            );
        }
    }
}

fn resolve_cap(cli: &Cli) -> Result<usize, Error> {
    if cli.force {
        return Ok(MAX_POINTS);
    }
    if let Some(k) = cli.max_n {
        return check_cap(k);
    }
    match std::env::var(MAX_N_ENV) {
        Ok(v) => {
            let k = v.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{MAX_N_ENV} must be an integer, got {v:?}"))
            })?;
            check_cap(k)
        }
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_cap(k: usize) -> Result<usize, Error> {
    if k > MAX_POINTS {
        Err(Error::TooManyPoints {
            n: k,
            max: MAX_POINTS,
        })
    } else {
        Ok(k)
    }
}

/// Runs the tool on `args` (including the program name). Reports go to
/// `out` unless `--out` is given; diagnostics go to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let max_n = match resolve_cap(&cli) {
        Ok(k) => k,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let cfg = EnumConfig {
        max_n,
        workers: cli.workers as usize,
        ..EnumConfig::default()
    };
    let mut ctx = Context {
        cli: &cli,
        cfg,
        err,
    };
    match execute(&mut ctx) {
        Ok((report, code)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &report).map_err(Error::from),
                None => out.write_all(report.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(ctx.err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn header(command: &str, points: Option<&PointSet>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("tool".into(), json!("planegraph"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    if let Some(p) = points {
        m.insert("n".into(), json!(p.len()));
        m.insert("input_sha256".into(), json!(pts::hash(p)));
    }
    m.insert("segment_indexing".into(), json!(INDEXING_CONVENTION));
    m
}

fn big(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

fn rational(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

fn finish_json(mut m: Map<String, Value>, body: Value) -> String {
    if let Value::Object(b) = body {
        m.extend(b);
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
    s.push('\n');
    s
}

fn csv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join(",") + "\n").collect()
}

/// Quotes a CSV field when it contains a separator or quote.
fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "claim": r.claim,
        "point_set": r.point_set,
        "status": r.status.as_str(),
        "witness": r.witness.as_ref().map(|w| json!({
            "graph": w.graph.map(|g| g.to_hex()),
            "vertex": w.vertex,
            "detail": w.detail,
        })),
        "margin": r.margin.as_ref().map(rational),
        "note": r.note,
    })
}

fn execute(ctx: &mut Context) -> Result<(String, i32), Error> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Validate { pts: path } => {
            let points = pts::read(path)?;
            let hull = points.convex_hull().ok();
            let body = json!({
                "valid": true,
                "hull": hull,
                "triangular_hull": points.is_triangular_hull(),
                "internal_points": points.internal_points(),
            });
            let text = match ctx.format(Format::Json) {
                Format::Json => finish_json(header("validate", Some(&points)), body),
                Format::Csv => csv(&[
                    vec!["n".into(), "valid".into(), "triangular_hull".into()],
                    vec![
                        points.len().to_string(),
                        "true".into(),
                        points.is_triangular_hull().to_string(),
                    ],
                ]),
            };
            Ok((text, EXIT_OK))
        }
        Command::Count { pts: path } => {
            let (points, u) = ctx.load(path)?;
            let pg = count_plane_graphs(&u, &ctx.cfg)?;
            let text = match ctx.format(Format::Json) {
                Format::Json => {
                    finish_json(header("count", Some(&points)), json!({ "pg": big(&pg) }))
                }
                Format::Csv => csv(&[vec!["pg".into()], vec![pg.to_string()]]),
            };
            Ok((text, EXIT_OK))
        }
        Command::Degrees { pts: path } => {
            let (points, u) = ctx.load(path)?;
            let d = expected_degree_vector(&u, &ctx.cfg)?;
            let text = match ctx.format(Format::Json) {
                Format::Json => {
                    let rows: Vec<Value> = (0..d.ving_counts.len())
                        .map(|i| {
                            json!({
                                "i": i,
                                "ving_count": big(&d.ving_counts[i]),
                                "vhat": rational(&d.vhat(i)),
                            })
                        })
                        .collect();
                    finish_json(
                        header("degrees", Some(&points)),
                        json!({ "pg": big(&d.pg), "edge_total": big(&d.edge_total), "degrees": rows }),
                    )
                }
                Format::Csv => {
                    let mut rows = vec![vec![
                        "i".into(),
                        "ving_count".into(),
                        "vhat_numerator".into(),
                        "vhat_denominator".into(),
                    ]];
                    for i in 0..d.ving_counts.len() {
                        let v = d.vhat(i);
                        rows.push(vec![
                            i.to_string(),
                            d.ving_counts[i].to_string(),
                            v.numer().to_string(),
                            v.denom().to_string(),
                        ]);
                    }
                    csv(&rows)
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Triangulations { pts: path } => {
            let (points, u) = ctx.load(path)?;
            let stats = enumerate_triangulations(&u, &ctx.cfg, |_| {})?;
            let text = match ctx.format(Format::Json) {
                Format::Json => {
                    let census: Vec<Value> = stats
                        .v3_v4_census
                        .iter()
                        .map(|((v3, v4), c)| json!({ "v3": v3, "v4": v4, "count": big(c) }))
                        .collect();
                    finish_json(
                        header("triangulations", Some(&points)),
                        json!({
                            "count": big(&stats.count),
                            "degree_totals": stats.degree_totals.iter().map(big).collect::<Vec<_>>(),
                            "v3_v4_census": census,
                        }),
                    )
                }
                Format::Csv => {
                    let mut rows = vec![vec!["v3".into(), "v4".into(), "count".into()]];
                    for ((v3, v4), c) in &stats.v3_v4_census {
                        rows.push(vec![v3.to_string(), v4.to_string(), c.to_string()]);
                    }
                    csv(&rows)
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::ChargeAudit { pts: path } => {
            let (points, u) = ctx.load(path)?;
            let a = charge_audit(&u, &ctx.cfg)?;
            let text = match ctx.format(Format::Json) {
                Format::Json => {
                    let census: Vec<Value> = a
                        .census
                        .iter()
                        .map(|r| json!({ "point": r.point, "visibility": r.visibility, "multiplicity": big(&r.multiplicity) }))
                        .collect();
                    finish_json(
                        header("charge-audit", Some(&points)),
                        json!({
                            "pg": big(&a.pg),
                            "ving_counts": a.ving_counts.iter().map(big).collect::<Vec<_>>(),
                            "total_charge": rational(&a.total_charge.to_rational()),
                            "max_graph_charge": rational(&a.max_graph_charge.to_rational()),
                            "max_charge_graph": a.max_charge_witness.to_hex(),
                            "charge_cap": rational(&charge_cap_closed_form(a.n as u64)),
                            "census": census,
                        }),
                    )
                }
                Format::Csv => {
                    let mut rows = vec![vec![
                        "point".into(),
                        "visibility_j".into(),
                        "multiplicity".into(),
                    ]];
                    for r in &a.census {
                        rows.push(vec![
                            r.point.to_string(),
                            r.visibility.to_string(),
                            r.multiplicity.to_string(),
                        ]);
                    }
                    csv(&rows)
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify { pts: path, claims } => {
            let groups = if claims.is_empty() {
                ClaimGroup::DEFAULT.to_vec()
            } else {
                claims
                    .iter()
                    .map(|c| c.trim().parse())
                    .collect::<Result<Vec<ClaimGroup>, _>>()?
            };
            let (points, u) = ctx.load(path)?;
            let reports = Verifier::new(&u, &ctx.cfg).run(&groups)?;
            let code = if reports.iter().any(|r| r.status == Status::Violated) {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            let text = match ctx.format(Format::Json) {
                Format::Json => finish_json(
                    header("verify", Some(&points)),
                    json!({ "reports": reports.iter().map(report_json).collect::<Vec<_>>() }),
                ),
                Format::Csv => {
                    let mut rows = vec![[
                        "claim",
                        "status",
                        "margin_num",
                        "margin_den",
                        "witness_graph",
                        "witness_vertex",
                        "detail",
                    ]
                    .map(String::from)
                    .to_vec()];
                    for r in &reports {
                        let (mn, md) = r
                            .margin
                            .as_ref()
                            .map(|m| (m.numer().to_string(), m.denom().to_string()))
                            .unwrap_or_default();
                        let w = r.witness.as_ref();
                        rows.push(vec![
                            field(&r.claim),
                            r.status.as_str().into(),
                            mn,
                            md,
                            w.and_then(|w| w.graph)
                                .map(|g| g.to_hex())
                                .unwrap_or_default(),
                            w.and_then(|w| w.vertex)
                                .map(|v| v.to_string())
                                .unwrap_or_default(),
                            field(
                                w.map(|w| w.detail.as_str())
                                    .or(r.note.as_deref())
                                    .unwrap_or(""),
                            ),
                        ]);
                    }
                    csv(&rows)
                }
            };
            Ok((text, code))
        }
        Command::Gen {
            kind,
            n,
            seed,
            output,
        } => {
            let kind: ConstructionKind = kind.parse()?;
            let spec = ConstructionSpec {
                kind,
                n: *n,
                seed: *seed,
            };
            let points = spec.generate()?;
            match output {
                Some(path) => {
                    pts::write(path, &points)?;
                    Ok((String::new(), EXIT_OK))
                }
                None => Ok((pts::to_string(&points), EXIT_OK)),
            }
        }
        Command::ConstructionReport { n_max } => {
            if *n_max < 4 {
                return Err(Error::InvalidArgument(
                    "construction-report needs n_max >= 4".into(),
                ));
            }
            if *n_max > MAX_POINTS {
                return Err(Error::TooManyPoints {
                    n: *n_max,
                    max: MAX_POINTS,
                });
            }
            ctx.cfg.check(*n_max)?;
            ctx.announce(*n_max);
            let rep = construction_report(*n_max, &ctx.cfg)?;
            let code = if rep.product_law.iter().any(|r| r.status == Status::Violated) {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            let text = match ctx.format(Format::Csv) {
                Format::Csv => {
                    let mut rows = vec![["m", "exact", "leading_term", "ratio", "growth"]
                        .map(String::from)
                        .to_vec()];
                    for r in &rep.ratios {
                        rows.push(vec![
                            r.m.to_string(),
                            r.exact.to_string(),
                            format!("{:.6}", r.approx),
                            format!("{:.6}", r.ratio),
                            r.growth.map(|g| format!("{g:.6}")).unwrap_or_default(),
                        ]);
                    }
                    let mut s = csv(&rows);
                    s.push('\n');
                    let mut rows = vec![vec!["n".into(), "vhat0_num".into(), "vhat0_den".into()]];
                    rows[0].extend(
                        TREND_CONSTANTS
                            .iter()
                            .map(|c| format!("vhat0_x_{c}_over_n")),
                    );
                    rows[0].push("product_law".into());
                    for (t, p) in rep.trend.iter().zip(&rep.product_law) {
                        let mut row = vec![
                            t.n.to_string(),
                            t.vhat0.numer().to_string(),
                            t.vhat0.denom().to_string(),
                        ];
                        row.extend(t.scaled.iter().map(|v| format!("{v:.6}")));
                        row.push(p.status.as_str().into());
                        rows.push(row);
                    }
                    s.push_str(&csv(&rows));
                    s
                }
                Format::Json => {
                    let ratios: Vec<Value> = rep
                        .ratios
                        .iter()
                        .map(|r| json!({ "m": r.m, "exact": big(&r.exact), "leading_term": r.approx, "ratio": r.ratio, "growth": r.growth }))
                        .collect();
                    let trend: Vec<Value> = rep
                        .trend
                        .iter()
                        .map(|t| {
                            let scaled: Map<String, Value> = TREND_CONSTANTS
                                .iter()
                                .zip(t.scaled)
                                .map(|(c, v)| (c.to_string(), json!(v)))
                                .collect();
                            json!({ "n": t.n, "vhat0": rational(&t.vhat0), "predicted_lower": rational(&t.predicted), "scaled": scaled })
                        })
                        .collect();
                    finish_json(
                        header("construction-report", None),
                        json!({
                            "ratios": ratios,
                            "trend": trend,
                            "product_law": rep.product_law.iter().map(report_json).collect::<Vec<_>>(),
                        }),
                    )
                }
            };
            Ok((text, code))
        }
    }
}
