//! Command-line front end. Results go to stdout as JSON.
//!
//! Exit codes: 0 verified, 1 refuted, 2 invalid input, 3 inconclusive.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vdreg::betti::{betti_table, is_sequentially_cm, Subject, HOCHSTER_RING_CAP};
use vdreg::decomp::shelling::{find_shelling, shelling_violation, ShellingOptions, ShellingSearch};
use vdreg::decomp::vd::{is_vertex_decomposable, VdOptions, VdVerdict};
use vdreg::homology::{reduced_homology_dims, reisner_obstruction, REISNER_GROUND_CAP};
use vdreg::hunt::{hunt, GraphModel, HuntConfig};
use vdreg::io::{self, GraphJson};
use vdreg::report::{report_counterexample1_over, report_counterexample2_over};
use vdreg::{FieldSpec, SqFreeIdeal};

#[derive(Parser)]
#[command(name = "vdreg", version, about = "Invariants of edge ideals and simplicial complexes")]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Coefficient field characteristics.
    #[arg(long = "char", global = true, value_delimiter = ',', default_values_t = [2u64, 32003])]
    chars: Vec<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph statistics, edge ideal invariants and decomposability.
    AnalyzeGraph {
        file: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Complex statistics, homology and Cohen-Macaulayness.
    AnalyzeComplex { file: PathBuf },
    /// Graded Betti table of an ideal or its quotient.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SubjectArg::Quotient)]
        subject: SubjectArg,
    },
    /// Verify or search for shelling orders.
    Shelling {
        #[command(subcommand)]
        action: ShellingAction,
    },
    /// Vertex decomposability of a graph, with a replayable trace.
    Vd {
        file: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Rebuild and check one of the two counterexamples.
    Paper {
        #[arg(value_enum)]
        which: Which,
    },
    /// Random search on graphs with `n` vertices; violators are printed one per line.
    Hunt {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModelArg::Er)]
        model: ModelArg,
        /// Edge probability for the Erdős–Rényi model.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Graph files examined before the random samples.
        #[arg(long)]
        include: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ShellingAction {
    /// Check an order file against a complex file.
    Verify { complex: PathBuf, order: PathBuf },
    /// Search for a shelling.
    Find {
        complex: PathBuf,
        #[arg(long, default_value_t = 100)]
        facet_cap: usize,
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SubjectArg {
    Quotient,
    Ideal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Ex1,
    Ex2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Er,
    Tree,
}

#[derive(Clone, Copy)]
enum Verdict {
    Verified = 0,
    Refuted = 1,
    Inconclusive = 3,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => ExitCode::from(v as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print(cli: &Cli, value: &Value) {
    if cli.pretty {
        print!("{}", io::to_json_pretty(value));
    } else {
        println!("{value}");
    }
}

fn fields(cli: &Cli) -> Result<Vec<FieldSpec>> {
    cli.chars
        .iter()
        .map(|&p| FieldSpec::new(p).map_err(Into::into))
        .collect()
}

fn per_char<T: serde::Serialize>(
    fields: &[FieldSpec],
    f: impl Fn(FieldSpec) -> vdreg::Result<T>,
) -> Result<Value> {
    let mut map = serde_json::Map::new();
    for &p in fields {
        map.insert(p.characteristic().to_string(), serde_json::to_value(f(p)?)?);
    }
    Ok(Value::Object(map))
}

fn run(cli: &Cli) -> Result<Verdict> {
    let fields = fields(cli)?;
    match &cli.command {
        Command::AnalyzeGraph { file, budget } => {
            let g = io::read_graph(file).with_context(|| format!("reading {}", file.display()))?;
            let ideal = SqFreeIdeal::edge_ideal(&g);
            let mut out = json!({
                "vertex_count": g.vertex_count(),
                "edge_count": g.edge_count(),
                "stats": g.stats(),
                "induced_matching_number": g.induced_matching_number(),
                "is_chordal": g.is_chordal(),
                "is_forest": g.is_forest(),
            });
            if !ideal.is_zero() {
                out["height"] = json!(ideal.height()?);
                out["minimal_primes"] = json!(ideal.minimal_primes()?.0);
            }
            if g.ground_size() <= HOCHSTER_RING_CAP {
                out["reg_quotient"] = per_char(&fields, |f| {
                    betti_table(&ideal, Subject::Quotient, f).map(|t| t.regularity())
                })?;
                out["sequentially_cm"] = per_char(&fields, |f| is_sequentially_cm(&g, f))?;
            }
            let (vd, _) = is_vertex_decomposable(&g, &VdOptions { state_budget: *budget });
            out["vertex_decomposable"] = json!(vd);
            print(cli, &out);
            Ok(Verdict::Verified)
        }
        Command::AnalyzeComplex { file } => {
            let (_, delta) = io::read_complex(file).with_context(|| format!("reading {}", file.display()))?;
            let mut out = json!({ "stats": delta.stats() });
            if !delta.is_void() {
                out["reduced_homology"] = per_char(&fields, |f| {
                    reduced_homology_dims(&delta, f)
                        .map(|h| h.into_iter().filter(|&(_, r)| r > 0).collect::<Vec<_>>())
                })?;
                if delta.ground_size() <= REISNER_GROUND_CAP {
                    out["cohen_macaulay"] =
                        per_char(&fields, |f| reisner_obstruction(&delta, f).map(|w| w.is_none()))?;
                }
            }
            out["stanley_reisner_generators"] = json!(SqFreeIdeal::stanley_reisner(&delta).gens());
            print(cli, &out);
            Ok(Verdict::Verified)
        }
        Command::Betti { file, subject } => {
            let ideal = io::read_ideal(file).with_context(|| format!("reading {}", file.display()))?;
            let subject = match subject {
                SubjectArg::Quotient => Subject::Quotient,
                SubjectArg::Ideal => Subject::Ideal,
            };
            let tables = fields
                .iter()
                .map(|&f| betti_table(&ideal, subject, f))
                .collect::<vdreg::Result<Vec<_>>>()?;
            let regs: Vec<_> = tables.iter().map(|t| t.regularity()).collect();
            let agree = tables.windows(2).all(|w| w[0].entries == w[1].entries);
            print(
                cli,
                &json!({ "tables": tables, "regularity": regs, "characteristics_agree": agree }),
            );
            Ok(Verdict::Verified)
        }
        Command::Shelling { action } => shelling(cli, action),
        Command::Vd { file, budget } => {
            let g = io::read_graph(file).with_context(|| format!("reading {}", file.display()))?;
            let (vd, trace) = is_vertex_decomposable(&g, &VdOptions { state_budget: *budget });
            print(cli, &serde_json::to_value(&trace)?);
            Ok(match vd {
                VdVerdict::Decomposable => Verdict::Verified,
                VdVerdict::NotDecomposable => Verdict::Refuted,
                VdVerdict::Inconclusive => Verdict::Inconclusive,
            })
        }
        Command::Paper { which } => {
            let report = match which {
                Which::Ex1 => report_counterexample1_over(&fields),
                Which::Ex2 => report_counterexample2_over(&fields),
            };
            print(cli, &serde_json::to_value(&report)?);
            Ok(if report.passed() { Verdict::Verified } else { Verdict::Refuted })
        }
        Command::Hunt { n, samples, seed, model, p, budget, include } => {
            let mut cfg = HuntConfig::new(*n, *seed, *samples);
            cfg.model = match model {
                ModelArg::Er => GraphModel::ErdosRenyi { p: *p },
                ModelArg::Tree => GraphModel::Tree,
            };
            cfg.vd_budget = *budget;
            cfg.fields = fields;
            for path in include {
                let g = io::read_graph(path).with_context(|| format!("reading {}", path.display()))?;
                cfg.include.push(GraphJson::from_graph(&g));
            }
            let summary = hunt(&cfg, |r| {
                print(cli, &serde_json::to_value(&r).expect("reports serialize"))
            })?;
            eprintln!("{}", serde_json::to_string(&summary)?);
            Ok(Verdict::Verified)
        }
    }
}

fn shelling(cli: &Cli, action: &ShellingAction) -> Result<Verdict> {
    match action {
        ShellingAction::Verify { complex, order } => {
            let (file, delta) =
                io::read_complex(complex).with_context(|| format!("reading {}", complex.display()))?;
            let order: io::OrderJson =
                io::read_json(order).with_context(|| format!("reading {}", order.display()))?;
            let cert = file.resolve_order(&order)?;
            let violation = shelling_violation(&delta, &cert)?;
            print(cli, &json!({ "shelling": violation.is_none(), "violation": violation }));
            Ok(if violation.is_none() { Verdict::Verified } else { Verdict::Refuted })
        }
        ShellingAction::Find { complex, facet_cap, budget } => {
            let (file, delta) =
                io::read_complex(complex).with_context(|| format!("reading {}", complex.display()))?;
            let opts = ShellingOptions {
                facet_cap: *facet_cap,
                node_budget: *budget,
                ..ShellingOptions::default()
            };
            let search = find_shelling(&delta, &opts)?;
            let mut out = serde_json::to_value(&search)?;
            if let ShellingSearch::Found(cert) = &search {
                out["positions"] = json!(file.positions(cert));
            }
            print(cli, &out);
            Ok(match search {
                ShellingSearch::Found(_) => Verdict::Verified,
                ShellingSearch::NotShellable(_) => Verdict::Refuted,
                ShellingSearch::Inconclusive(_) => Verdict::Inconclusive,
            })
        }
    }
}
