use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nsgraph::analysis::KuratowskiKind;
use nsgraph::classifier::{classify, classify_ideal, ClassificationReport};
use nsgraph::export;
use nsgraph::sweep::{self, check_instance, Check, SweepConfig};
use nsgraph::{build_graph, divisors, make_ideal, NumericalSemigroup};

#[derive(Parser)]
#[command(
    name = "nsgraph",
    version,
    about = "Graphs of irreducible ideals of numerical semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators, Frobenius number and gaps.
    Info {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
    /// The divisor set B(x).
    Bx {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long)]
        x: u32,
    },
    /// The graph on B*(x).
    Graph {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long)]
        x: u32,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Order, type, case and planarity of the graph on B*(x).
    Classify {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long)]
        x: u32,
        #[arg(long)]
        json: bool,
    },
    /// Graph and irreducibility of the ideal generated by `--ideal-gens`.
    Ideal {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        ideal_gens: Vec<u32>,
        /// Print the ideal's graph in DOT.
        #[arg(long)]
        graph: bool,
        #[arg(long)]
        json: bool,
    },
    /// Sweep every semigroup in the bounded family and check every claim.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        #[arg(long, default_value_t = 30)]
        max_gen: u32,
        #[arg(long, default_value_t = 200)]
        max_x: u32,
        /// Worker threads, 0 for all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Per-instance classification rows (orders up to 7).
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Every violation, one per line.
        #[arg(long)]
        violations: Option<PathBuf>,
        /// Full report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

type AnyResult<T> = Result<T, Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> AnyResult<ExitCode> {
    let mut out = std::io::stdout().lock();
    match cmd {
        Command::Info { gens, json } => {
            let s = NumericalSemigroup::new(&gens)?;
            if json {
                writeln!(out, "{}", export::semigroup_json(&s))?;
            } else {
                writeln!(out, "semigroup {s}")?;
                writeln!(out, "embedding dimension {}", s.embedding_dimension())?;
                writeln!(out, "frobenius {}", s.frobenius())?;
                writeln!(out, "genus {}", s.gaps().len())?;
                writeln!(out, "gaps {}", export::join(s.gaps()))?;
            }
        }
        Command::Bx { gens, x } => {
            let s = NumericalSemigroup::new(&gens)?;
            let b = divisors(&s, x)?;
            writeln!(out, "B({x}) = {{{}}}", export::join(b.elements()))?;
            writeln!(out, "|B*({x})| = {}", b.nonzero_elements().len())?;
        }
        Command::Graph { gens, x, format } => {
            let s = NumericalSemigroup::new(&gens)?;
            let g = build_graph(&s, x)?;
            match format {
                Format::Dot => write!(out, "{}", export::to_dot(&g, &export::graph_name(&s, x)))?,
                Format::Json => writeln!(out, "{}", export::graph_json(&s, Some(x), &g))?,
            }
        }
        Command::Classify { gens, x, json } => {
            let s = NumericalSemigroup::new(&gens)?;
            let r = classify(&s, x)?;
            if json {
                writeln!(out, "{}", export::report_json(&r))?;
            } else {
                print_report(&mut out, &r)?;
                let failed = check_instance(&s, x)?.failed;
                let ids: Vec<&str> = failed.iter().map(|c| c.id()).collect();
                writeln!(
                    out,
                    "failed checks: {}",
                    if ids.is_empty() {
                        "none".into()
                    } else {
                        ids.join(", ")
                    }
                )?;
            }
        }
        Command::Ideal {
            gens,
            ideal_gens,
            graph,
            json,
        } => {
            let s = NumericalSemigroup::new(&gens)?;
            let ideal = make_ideal(&s, &ideal_gens)?;
            let r = classify_ideal(&s, &ideal)?;
            if json {
                writeln!(out, "{}", export::ideal_report_json(&s, &r))?;
            } else {
                writeln!(out, "semigroup {s}")?;
                writeln!(out, "ideal generators {}", export::join(ideal.generators()))?;
                match r.irreducible_at {
                    Some(x) => writeln!(out, "irreducible: yes, equals S \\ B({x})")?,
                    None => writeln!(out, "irreducible: no")?,
                }
                writeln!(out, "order {}", r.graph.order())?;
                writeln!(out, "edges {}", r.graph.edge_count())?;
                if let Some(v) = &r.planarity_by_oracle {
                    writeln!(out, "planar (oracle): {}", yes_no(v.planar))?;
                }
                if let Some(c) = &r.classification {
                    writeln!(out, "--")?;
                    print_report(&mut out, c)?;
                }
            }
            if graph {
                write!(
                    out,
                    "{}",
                    export::to_dot(&r.graph, &format!("I_<{}>", export::join(s.generators())))
                )?;
            }
        }
        Command::Verify {
            max_dim,
            max_gen,
            max_x,
            jobs,
            csv,
            violations,
            report,
        } => {
            let cfg = SweepConfig {
                max_embedding_dim: max_dim,
                max_generator: max_gen,
                max_x,
                jobs,
                ..Default::default()
            };
            let mut csv_file = csv
                .map(|p| File::create(p).map(BufWriter::new))
                .transpose()?;
            let mut viol_file = violations
                .map(|p| File::create(p).map(BufWriter::new))
                .transpose()?;
            let r = sweep::sweep_to(
                &cfg,
                csv_file.as_mut().map(|w| w as &mut dyn Write),
                viol_file.as_mut().map(|w| w as &mut dyn Write),
            )?;
            if let Some(p) = report {
                serde_json::to_writer_pretty(BufWriter::new(File::create(p)?), &r)?;
            }
            writeln!(out, "semigroups {}", r.semigroups)?;
            writeln!(out, "instances {}", r.instances_scanned)?;
            let orders: Vec<String> = r
                .order_counts
                .iter()
                .filter(|(&n, _)| n <= 8)
                .map(|(n, c)| format!("{n}:{c}"))
                .collect();
            writeln!(out, "orders (<= 8) {}", orders.join(" "))?;
            writeln!(out, "order-6 types {:?}", r.type_counts.order6)?;
            writeln!(out, "order-7 types {:?}", r.type_counts.order7)?;
            writeln!(out, "order-6 cases {:?}", r.case_counts.order6)?;
            writeln!(out, "order-7 cases {:?}", r.case_counts.order7)?;
            for c in Check::ALL {
                writeln!(out, "check {:<30} violations {}", c.id(), r.count(c))?;
            }
            for v in &r.violations {
                writeln!(
                    out,
                    "violation {} <{}> x={}",
                    v.check,
                    export::join(&v.generators),
                    v.x
                )?;
            }
            writeln!(out, "violations {}", r.total_violations)?;
            writeln!(out, "elapsed {:.2}s", r.duration.as_secs_f64())?;
            if !r.is_clean() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn braced(v: &[u32]) -> String {
    format!("{{{}}}", export::join(v))
}

fn print_report(out: &mut impl Write, r: &ClassificationReport) -> std::io::Result<()> {
    writeln!(out, "semigroup {}", r.semigroup)?;
    writeln!(out, "x {}", r.x)?;
    writeln!(out, "order {}", r.order)?;
    let ds: Vec<String> = r.degree_sequence.iter().map(usize::to_string).collect();
    writeln!(out, "degree sequence {}", ds.join(","))?;
    match &r.table_type {
        Some(t) => writeln!(
            out,
            "type {} (representative match: {})",
            t.type_index,
            yes_no(t.matches_representative)
        )?,
        None => writeln!(out, "type none")?,
    }
    match &r.theorem_case {
        Some(c) => {
            let w: Vec<String> = c
                .witness
                .iter()
                .map(|f| format!("{:?}", f.coefficients()))
                .collect();
            writeln!(out, "case {} (witness {})", c.case_index, w.join(" "))?;
        }
        None => writeln!(out, "case none")?,
    }
    let theorem = match r.planarity_by_theorem.as_bool() {
        Some(true) => "planar",
        Some(false) => "non-planar",
        None => "out of range",
    };
    writeln!(out, "planarity (theorem) {theorem}")?;
    if let Some(v) = &r.planarity_by_oracle {
        writeln!(
            out,
            "planarity (oracle) {}",
            if v.planar { "planar" } else { "non-planar" }
        )?;
        if let Some(c) = &v.certificate {
            match c.kind {
                KuratowskiKind::K33 => writeln!(
                    out,
                    "certificate K3,3 parts {} / {}",
                    braced(&c.parts[0]),
                    braced(&c.parts[1])
                )?,
                KuratowskiKind::K5 => {
                    writeln!(out, "certificate K5 branch {}", braced(&c.parts[0]))?
                }
            }
        }
    }
    writeln!(out, "agreement {}", yes_no(r.agreement))?;
    let ex: Vec<String> = r.exclusions.iter().map(ToString::to_string).collect();
    writeln!(
        out,
        "exclusions {}",
        if ex.is_empty() {
            "none".into()
        } else {
            ex.join(",")
        }
    )?;
    Ok(())
}
