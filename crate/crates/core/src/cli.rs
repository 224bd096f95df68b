//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns what would be written
//! to stdout and stderr plus the exit code, so the binary is a thin shell
//! around it. Exit codes: 0 when the command ran (negative answers
//! included), 2 for usage and parse errors, 3 for invalid diagrams.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bicolor::{admissible_by_bicoloring, bicoloring, phi_class};
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::moves::{random_diagram, reidemeister_two, switch_crossing, OverStrand, R2Spec};
use crate::rcc::{apply_rcc, CrossingSet, RccAnalysis, RegionSet};
use crate::scheme::{parse_diagram, serialize_diagram, EmbeddingScheme};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "rcc", version, about = "Region crossing change on link diagrams in closed surfaces")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Strand {
    A,
    B,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Counts, surface, ranks and class exponent
    Info { file: PathBuf },
    /// Compare rank(M) with r - n - 1 + rank(N)
    Verify { file: PathBuf },
    /// Print the region/crossing incidence matrix
    Matrix { file: PathBuf },
    /// Print the homology matrix of the components
    Homology { file: PathBuf },
    /// Decide whether a crossing set can be switched by region changes
    Admissible {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        crossings: Vec<usize>,
    },
    /// Basis of the region sets that change no crossing
    Ineffective { file: PathBuf },
    /// Bi-coloring of semi-arcs for a crossing set and its homology class
    Bicolor {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        crossings: Vec<usize>,
    },
    /// Apply region crossing changes and write the new diagram
    Apply {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        regions: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find region changes turning the first diagram into the second
    Equivalent { first: PathBuf, second: PathBuf },
    /// Second Reidemeister move between two edge-sides of one region
    MoveR2 {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        darts: Vec<usize>,
        #[arg(long, value_enum, default_value = "a")]
        over: Strand,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Switch a single crossing
    Switch {
        file: PathBuf,
        #[arg(long)]
        crossing: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random connected diagram
    Random {
        #[arg(long)]
        crossings: usize,
        #[arg(long, default_value_t = 0.5)]
        neg_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a PD code document to the diagram format
    ImportPd {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invalid(_) | Error::Pd(_) => 3,
            Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandResult { code, stdout: text, stderr: String::new() }
            } else {
                CommandResult { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => CommandResult {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(f) => CommandResult {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn load(path: &PathBuf) -> Result<EmbeddingScheme, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_diagram(&text)?)
}

fn emit_diagram(d: &EmbeddingScheme, output: &Option<PathBuf>) -> Result<String, Failure> {
    let text = serialize_diagram(d);
    match output {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn matrix_rows(m: &BitMatrix) -> Vec<Vec<u8>> {
    m.row_iter().map(|r| r.to_bits()).collect()
}

fn matrix_text(m: &BitMatrix) -> String {
    let mut out = String::new();
    for row in m.row_iter() {
        let cells: Vec<&str> = (0..m.cols()).map(|j| if row.get(j) { "1" } else { "0" }).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    out
}

fn list(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("plain data");
        s.push('\n');
        s
    } else {
        text
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Info { file } => {
            let d = load(file)?;
            let a = RccAnalysis::new(&d)?;
            let s = a.surface;
            let value = json!({
                "crossings": d.crossing_count(),
                "edges": d.edge_count(),
                "regions": a.region_count(),
                "components": a.component_count,
                "euler_characteristic": s.euler_characteristic,
                "orientable": s.orientable,
                "genus": s.genus,
                "surface": s.name(),
                "rank_m": a.incidence_rank,
                "rank_n": a.homology_matrix.rank,
                "class_exponent": a.class_exponent(),
            });
            let text = format!(
                "crossings: {}\nedges: {}\nregions: {}\ncomponents: {}\neuler characteristic: {}\n\
                 orientable: {}\ngenus: {}\nsurface: {}\nrank M: {}\nrank N: {}\nclass exponent: {}\n",
                d.crossing_count(),
                d.edge_count(),
                a.region_count(),
                a.component_count,
                s.euler_characteristic,
                s.orientable,
                s.genus,
                s.name(),
                a.incidence_rank,
                a.homology_matrix.rank,
                a.class_exponent(),
            );
            Ok(render(json, value, text))
        }
        Command::Verify { file } => {
            let d = load(file)?;
            let a = RccAnalysis::new(&d)?;
            let r = a.rank_report();
            let value = json!({
                "lhs": r.lhs,
                "rhs": r.rhs,
                "equal": r.equal,
                "regions": a.region_count(),
                "components": a.component_count,
                "rank_n": a.homology_matrix.rank,
            });
            let text = format!(
                "rank M = {}\nr - n - 1 + rank N = {} - {} - 1 + {} = {}\nequal: {}\n",
                r.lhs,
                a.region_count(),
                a.component_count,
                a.homology_matrix.rank,
                r.rhs,
                r.equal
            );
            Ok(render(json, value, text))
        }
        Command::Matrix { file } => {
            let d = load(file)?;
            let a = RccAnalysis::new(&d)?;
            let m = a.incidence.matrix();
            let value = json!({
                "rows": m.rows(),
                "cols": m.cols(),
                "rank": a.incidence_rank,
                "matrix": matrix_rows(m),
            });
            let text = format!(
                "incidence matrix ({} regions x {} crossings, rank {}):\n{}",
                m.rows(),
                m.cols(),
                a.incidence_rank,
                matrix_text(m)
            );
            Ok(render(json, value, text))
        }
        Command::Homology { file } => {
            let d = load(file)?;
            let a = RccAnalysis::new(&d)?;
            let n = &a.homology_matrix;
            let value = json!({
                "components": n.matrix.rows(),
                "dimension": n.matrix.cols(),
                "rank": n.rank,
                "rank_m": a.incidence_rank,
                "matrix": matrix_rows(&n.matrix),
            });
            let text = format!(
                "homology matrix ({} components x H1 dimension {}, rank {}):\n{}rank M: {}\n",
                n.matrix.rows(),
                n.matrix.cols(),
                n.rank,
                matrix_text(&n.matrix),
                a.incidence_rank
            );
            Ok(render(json, value, text))
        }
        Command::Admissible { file, crossings } => {
            let d = load(file)?;
            let a = RccAnalysis::new(&d)?;
            let p = CrossingSet::new(crossings.iter().copied());
            let by_matrix = a.admissible(&p)?;
            let by_coloring = admissible_by_bicoloring(&d, &a.homology, &p)?;
            let agree = by_matrix.is_some() == by_coloring.is_some();
            let regions: Option<Vec<usize>> = by_matrix.as_ref().map(|s| s.iter().collect());
            let colors = by_coloring.as_ref().map(|phi| phi.colors.to_bits());
            let value = json!({
                "crossings": p.iter().collect::<Vec<_>>(),
                "admissible": by_matrix.is_some(),
                "infeasible": by_matrix.is_none(),
                "regions": regions,
                "bicoloring": {
                    "admissible": by_coloring.is_some(),
                    "colors": colors,
                },
                "agree": agree,
            });
            let mut text = format!("crossings: {}\n", list(&p.iter().collect::<Vec<_>>()));
            match &regions {
                Some(r) => {
                    let _ = writeln!(text, "matrix method: admissible via regions {}", list(r));
                }
                None => text.push_str("matrix method: infeasible\n"),
            }
            match &by_coloring {
                Some(phi) => {
                    let _ = writeln!(text, "bi-coloring method: admissible, colors {}", phi.colors);
                }
                None => text.push_str("bi-coloring method: infeasible\n"),
            }
            let _ = writeln!(text, "methods agree: {agree}");
            Ok(render(json, value, text))
        }
        Command::Ineffective { file } => {
            let d = load(file)?;
            let a = RccAnalysis::new(&d)?;
            let basis: Vec<Vec<usize>> = a.ineffective_basis().iter().map(|s| s.iter().collect()).collect();
            let board = a.checkerboard()?;
            let value = json!({
                "dimension": basis.len(),
                "basis": basis,
                "checkerboard": board.as_ref().map(|b| b.colors.clone()),
            });
            let mut text = format!(
                "ineffective sets: dimension {} (= r - rank M = {} - {})\n",
                basis.len(),
                a.region_count(),
                a.incidence_rank
            );
            for s in &basis {
                let _ = writeln!(text, "  {}", list(s));
            }
            match &board {
                Some(b) => {
                    let _ = writeln!(
                        text,
                        "checkerboard: {} / {}",
                        list(&b.color_class(0).iter().collect::<Vec<_>>()),
                        list(&b.color_class(1).iter().collect::<Vec<_>>())
                    );
                }
                None => text.push_str("checkerboard: none\n"),
            }
            Ok(render(json, value, text))
        }
        Command::Bicolor { file, crossings } => {
            let d = load(file)?;
            let a = RccAnalysis::new(&d)?;
            let p = CrossingSet::new(crossings.iter().copied());
            let phi = bicoloring(&d, &p)?;
            let class = phi.as_ref().map(|phi| phi_class(&d, &a.homology, phi)).transpose()?;
            let witness = admissible_by_bicoloring(&d, &a.homology, &p)?;
            let value = json!({
                "crossings": p.iter().collect::<Vec<_>>(),
                "exists": phi.is_some(),
                "infeasible": phi.is_none(),
                "colors": phi.as_ref().map(|x| x.colors.to_bits()),
                "class": class.as_ref().map(|c| c.to_bits()),
                "admissible": witness.is_some(),
                "witness": witness.as_ref().map(|w| w.colors.to_bits()),
            });
            let mut text = format!("crossings: {}\n", list(&p.iter().collect::<Vec<_>>()));
            match (&phi, &class) {
                (Some(phi), Some(class)) => {
                    let _ = writeln!(text, "bi-coloring: {}\nclass: [{}]", phi.colors, class);
                }
                _ => text.push_str("bi-coloring: infeasible\n"),
            }
            match &witness {
                Some(w) => {
                    let _ = writeln!(text, "null-homologous witness: {}\nadmissible: true", w.colors);
                }
                None => text.push_str("admissible: false\n"),
            }
            Ok(render(json, value, text))
        }
        Command::Apply { file, regions, output } => {
            let d = load(file)?;
            let out = apply_rcc(&d, &RegionSet::new(regions.iter().copied()))?;
            emit_diagram(&out, output)
        }
        Command::Equivalent { first, second } => {
            let d1 = load(first)?;
            let d2 = load(second)?;
            if !d1.same_shadow(&d2) {
                return Err(Error::ShadowMismatch("crossings, edges or signs differ".into()).into());
            }
            let a = RccAnalysis::new(&d1)?;
            let s = a.equivalent_flags(d1.over_pairs(), d2.over_pairs())?;
            let regions: Option<Vec<usize>> = s.as_ref().map(|s| s.iter().collect());
            let value = json!({
                "equivalent": s.is_some(),
                "infeasible": s.is_none(),
                "regions": regions,
            });
            let text = match &regions {
                Some(r) => format!("equivalent: true\nregions: {}\n", list(r)),
                None => "equivalent: false (infeasible)\n".to_string(),
            };
            Ok(render(json, value, text))
        }
        Command::MoveR2 { file, darts, over, output } => {
            if darts.len() != 2 {
                return Err(usage(format!("--darts takes two darts, got {}", darts.len())));
            }
            let d = load(file)?;
            let spec = R2Spec {
                dart_a: darts[0],
                dart_b: darts[1],
                over: match over {
                    Strand::A => OverStrand::A,
                    Strand::B => OverStrand::B,
                },
            };
            emit_diagram(&reidemeister_two(&d, spec)?, output)
        }
        Command::Switch { file, crossing, output } => {
            let d = load(file)?;
            emit_diagram(&switch_crossing(&d, *crossing)?, output)
        }
        Command::Random { crossings, neg_prob, seed, output } => {
            emit_diagram(&random_diagram(*crossings, *neg_prob, *seed)?, output)
        }
        Command::ImportPd { file, output } => emit_diagram(&load(file)?, output),
    }
}
