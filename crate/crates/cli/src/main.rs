//! `twodist`: build, solve, reduce and draw exact two-distance graphs.
//!
//! Vertex labels on the command line and in printed output are 1-based, as
//! in printed edge lists.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use twodist::catalog::SpindleDistance;
use twodist::exactnum::{parse_rational, HexC, Q33};
use twodist::graphs::{automorphism_report, format_edge_list, EdgeGraph};
use twodist::solver::{
    color_decide, color_enumerate, forces_mono_pair, reduce_preserving, Budget, ColoringQuery,
    OrderPolicy, Verdict,
};
use twodist::Error;
use twodist_cli::build::{build, BuildOptions};
use twodist_cli::render::{render_svg, RenderOptions};
use twodist_cli::verify::{verify, Status, VerifyOptions};
use twodist_cli::AnyGraph;

#[derive(Parser)]
#[command(
    name = "twodist",
    version,
    about = "Exact two-distance plane graphs and their colourings"
)]
struct Cli {
    /// Default solver budget in seconds; 0 means unlimited.
    #[arg(long, global = true, env = "TWODIST_TIMEOUT", default_value_t = 0)]
    timeout: u64,
    /// Bits for coordinate enclosures used in drawings.
    #[arg(long, global = true, default_value_t = 64)]
    precision: u32,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named catalog graph and write its JSON document.
    Build {
        name: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Disk centre for the hexagon sum, as four rationals a,b,c,d.
        #[arg(long)]
        center: Option<String>,
        /// Squared disk radius for the hexagon sum, as a,d meaning a + d√33.
        #[arg(long)]
        r_sq: Option<String>,
        /// Deletion order for the hexagon reduction.
        #[arg(long, default_value = "periphery")]
        policy: String,
        /// Which target the spindled copies of the pair realize.
        #[arg(long, value_enum, default_value_t = Distance::One)]
        distance: Distance,
    },
    /// Print the edge lists in {i,j} notation.
    Edges {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Both)]
        kind: Kind,
    },
    /// Decide k-colourability.
    Solve {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        /// Extra pair that must get different colours, as u,v.
        #[arg(long = "diff")]
        diff: Vec<String>,
        /// Write the colouring as a JSON array.
        #[arg(long)]
        model_out: Option<PathBuf>,
        /// Exit 1 unless the verdict matches.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Is the pair monochromatic in every proper k-colouring?
    ForcePair {
        graph: PathBuf,
        u: usize,
        v: usize,
        #[arg(short)]
        k: usize,
    },
    /// List proper k-colourings of a small graph.
    Enumerate {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        /// One colouring per colour-permutation class.
        #[arg(long)]
        canonical: bool,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Greedy deletion keeping the pair forced.
    Reduce {
        graph: PathBuf,
        u: usize,
        v: usize,
        #[arg(short)]
        k: usize,
        /// periphery, degree or random:SEED.
        #[arg(long, default_value = "periphery")]
        policy: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Join two copies at a pivot so the copies of target are at a forbidden distance.
    Spindle {
        graph: PathBuf,
        pivot: usize,
        target: usize,
        #[arg(long, value_enum, default_value_t = Distance::One)]
        distance: Distance,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Orders of the automorphism groups.
    Automorphisms { graph: PathBuf },
    /// Write the colouring CNF in DIMACS format.
    ExportCnf {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long = "diff")]
        diff: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Draw the graph as SVG.
    Render {
        graph: PathBuf,
        /// JSON array with one colour per vertex.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Vertices drawn in black, e.g. a forced pair.
        #[arg(long, value_delimiter = ',')]
        highlight: Vec<usize>,
        #[arg(long)]
        labels: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the full reproduction battery.
    VerifyPaper {
        /// Also run the long forcing check on the 313-vertex graph.
        #[arg(long)]
        include_slow: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Distance {
    One,
    Two,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    One,
    Two,
    Both,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Expect {
    Sat,
    Unsat,
}

/// Exit status carried through `anyhow`.
#[derive(Debug)]
struct Exit(u8);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "exit {}", self.0)
    }
}

impl std::error::Error for Exit {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(Exit(code)) = e.downcast_ref::<Exit>() {
                return ExitCode::from(*code);
            }
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::Timeout) => 3,
                Some(Error::Parse(_))
                | Some(Error::VertexOutOfRange { .. })
                | Some(Error::PairIsEdge(..)) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn budget(cli: &Cli) -> Budget {
    match cli.timeout {
        0 => Budget::unlimited(),
        s => Budget::timeout(Duration::from_secs(s)),
    }
}

fn load(path: &Path) -> anyhow::Result<AnyGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(AnyGraph::from_json(&text)?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// 1-based label to index.
fn vertex(g: &EdgeGraph, label: usize) -> anyhow::Result<usize> {
    if label == 0 || label > g.n() {
        return Err(Error::VertexOutOfRange {
            index: label,
            len: g.n(),
        }
        .into());
    }
    Ok(label - 1)
}

fn pairs(g: &EdgeGraph, specs: &[String]) -> anyhow::Result<Vec<(usize, usize)>> {
    specs
        .iter()
        .map(|s| {
            let (a, b) = s
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected u,v, got {s}")))?;
            let p = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad vertex {x}")))
            };
            Ok((vertex(g, p(a)?)?, vertex(g, p(b)?)?))
        })
        .collect()
}

fn rationals(s: &str, n: usize) -> anyhow::Result<Vec<twodist::exactnum::Rational>> {
    let v = s
        .split(',')
        .map(|x| parse_rational(x.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    if v.len() != n {
        return Err(
            Error::Parse(format!("expected {n} comma-separated rationals, got {s}")).into(),
        );
    }
    Ok(v)
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    match &cli.cmd {
        Cmd::Build {
            name,
            out,
            center,
            r_sq,
            policy,
            distance,
        } => {
            let mut opts = BuildOptions {
                budget: budget(cli),
                ..Default::default()
            };
            if let Some(c) = center {
                let v = rationals(c, 4)?;
                opts.filter.center =
                    HexC::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
            }
            if let Some(r) = r_sq {
                let v = rationals(r, 2)?;
                opts.filter.r_sq = Q33::new(v[0].clone(), v[1].clone());
            }
            opts.policy = policy.parse()?;
            opts.distance = match distance {
                Distance::One => SpindleDistance::One,
                Distance::Two => SpindleDistance::Two,
            };
            let g = build(name, &opts)?;
            eprintln!(
                "{name}: {} vertices, {} + {} edges",
                g.graph().n(),
                g.graph().e1().len(),
                g.graph().e2().len()
            );
            emit(out.as_ref(), &g.to_json())
        }
        Cmd::Edges { graph, kind } => {
            let g = load(graph)?;
            let one = |e: &[(usize, usize)]| format_edge_list(e);
            match kind {
                Kind::One => println!("{}", one(g.graph().e1())),
                Kind::Two => println!("{}", one(g.graph().e2())),
                Kind::Both => {
                    println!("E1 ({}): {}", g.graph().e1().len(), one(g.graph().e1()));
                    println!("E2 ({}): {}", g.graph().e2().len(), one(g.graph().e2()));
                }
            }
            Ok(())
        }
        Cmd::Solve {
            graph,
            k,
            diff,
            model_out,
            expect,
        } => {
            let g = load(graph)?;
            let mut q = ColoringQuery::new(g.graph(), *k);
            for (u, v) in pairs(g.graph(), diff)? {
                q = q.with_diff_pair(u, v);
            }
            let out = color_decide(&q, budget(cli))?;
            let st = &out.stats;
            eprintln!(
                "{} ms, {} conflicts, {} decisions",
                out.runtime_ms, st.conflicts, st.decisions
            );
            let got = match &out.verdict {
                Verdict::Colorable(c) => {
                    println!("SAT");
                    println!("{}", serde_json::to_string(c)?);
                    if let Some(p) = model_out {
                        fs::write(p, serde_json::to_string(c)?)?;
                    }
                    Expect::Sat
                }
                Verdict::NotColorable => {
                    println!("UNSAT");
                    Expect::Unsat
                }
                Verdict::Timeout => {
                    println!("TIMEOUT");
                    bail!(Exit(3));
                }
            };
            if expect.is_some_and(|e| e != got) {
                bail!(Exit(1));
            }
            Ok(())
        }
        Cmd::ForcePair { graph, u, v, k } => {
            let g = load(graph)?;
            let (a, b) = (vertex(g.graph(), *u)?, vertex(g.graph(), *v)?);
            if forces_mono_pair(g.graph(), a, b, *k, budget(cli))? {
                println!("forced");
                Ok(())
            } else {
                println!("not forced");
                bail!(Exit(1))
            }
        }
        Cmd::Enumerate {
            graph,
            k,
            canonical,
            count,
        } => {
            let g = load(graph)?;
            let all = color_enumerate(g.graph(), *k, *canonical)?;
            println!("{}", all.len());
            if !count {
                for c in &all {
                    println!("{}", serde_json::to_string(c)?);
                }
            }
            Ok(())
        }
        Cmd::Reduce {
            graph,
            u,
            v,
            k,
            policy,
            out,
        } => {
            let g = load(graph)?;
            let (a, b) = (vertex(g.graph(), *u)?, vertex(g.graph(), *v)?);
            let policy: OrderPolicy = policy.parse()?;
            let coords = g.coords();
            let r = reduce_preserving(g.graph(), a, b, *k, policy, Some(&coords), budget(cli))?;
            eprintln!(
                "kept {} of {} vertices in {} passes, {} forcing checks; pair is now {} {}",
                r.kept.len(),
                g.graph().n(),
                r.passes,
                r.checks,
                r.pair.0 + 1,
                r.pair.1 + 1
            );
            let reduced = g.induced(
                &r.kept,
                format!(
                    "{} reduced around {u},{v} at k = {k} ({policy:?})",
                    g.provenance()
                ),
            )?;
            emit(out.as_ref(), &reduced.to_json())
        }
        Cmd::Spindle {
            graph,
            pivot,
            target,
            distance,
            out,
        } => {
            let g = load(graph)?;
            let (p, t) = (vertex(g.graph(), *pivot)?, vertex(g.graph(), *target)?);
            let which = match distance {
                Distance::One => 1,
                Distance::Two => 2,
            };
            let s = g.spindled(p, t, which)?;
            eprintln!(
                "{} vertices, {} edges",
                s.graph().n(),
                s.graph().edge_count()
            );
            emit(out.as_ref(), &s.to_json())
        }
        Cmd::Automorphisms { graph } => {
            let r = automorphism_report(load(graph)?.graph());
            println!("color-preserving {}", r.order_color_preserving);
            println!("color-permuting {}", r.order_color_permuting);
            println!("uncolored {}", r.order_uncolored);
            Ok(())
        }
        Cmd::ExportCnf {
            graph,
            k,
            diff,
            out,
        } => {
            let g = load(graph)?;
            let mut q = ColoringQuery::new(g.graph(), *k);
            for (u, v) in pairs(g.graph(), diff)? {
                q = q.with_diff_pair(u, v);
            }
            q.validate()?;
            q.precolored = q.effective_precoloring();
            emit(out.as_ref(), &q.to_cnf().to_dimacs())
        }
        Cmd::Render {
            graph,
            coloring,
            highlight,
            labels,
            out,
        } => {
            let g = load(graph)?;
            let colors: Option<Vec<usize>> = match coloring {
                Some(p) => Some(serde_json::from_str(&fs::read_to_string(p)?)?),
                None => None,
            };
            if colors.as_ref().is_some_and(|c| c.len() != g.graph().n()) {
                bail!(Error::Validation(
                    "colouring length differs from vertex count".into()
                ));
            }
            let hl = highlight
                .iter()
                .map(|&h| vertex(g.graph(), h))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let coords = render_coords(&g, cli.precision);
            let svg = render_svg(
                g.graph(),
                &coords,
                &RenderOptions {
                    coloring: colors.as_deref(),
                    highlight: &hl,
                    labels: *labels,
                    ..Default::default()
                },
            );
            emit(out.as_ref(), &svg)
        }
        Cmd::VerifyPaper { include_slow, json } => {
            let mut opts = VerifyOptions {
                include_slow: *include_slow,
                ..Default::default()
            };
            if cli.timeout > 0 {
                opts.slow_budget = Duration::from_secs(cli.timeout);
            }
            let report = verify(&opts);
            if *json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for c in &report.checks {
                    println!("{c}");
                }
            }
            let failed = report
                .checks
                .iter()
                .filter(|c| c.mandatory && c.status != Status::Pass)
                .count();
            println!(
                "{}",
                if report.passed() {
                    "all mandatory checks pass".to_string()
                } else {
                    format!("{failed} mandatory checks fail")
                }
            );
            if report.passed() {
                Ok(())
            } else {
                bail!(Exit(1))
            }
        }
    }
}

/// Drawing coordinates. Above 64 bits the plain families are re-approximated
/// at the requested precision; spindled copies always use 64-bit rotation.
fn render_coords(g: &AnyGraph, precision: u32) -> Vec<(f64, f64)> {
    use twodist::geometry::Family;
    use twodist_cli::Embedded;
    fn at<F: Family>(p: &F::Point, bits: u32) -> (f64, f64) {
        F::approx_xy(p, bits)
            .map(|(x, y)| (x.midpoint_f64(), y.midpoint_f64()))
            .unwrap_or((f64::NAN, f64::NAN))
    }
    match g {
        AnyGraph::Pent(Embedded::Plain(t)) => t
            .points()
            .iter()
            .map(|p| at::<twodist::geometry::Pentagon>(p, precision))
            .collect(),
        AnyGraph::Hex(Embedded::Plain(t)) => t
            .points()
            .iter()
            .map(|p| at::<twodist::geometry::Hexagon>(p, precision))
            .collect(),
        _ => g.coords(),
    }
}
