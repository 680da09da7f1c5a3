//! The `rckb` command line.
//!
//! Exit codes:
//!
//! | code | meaning                                         |
//! |------|-------------------------------------------------|
//! | 0    | success                                         |
//! | 1    | the coloring is not rainbow k-connected         |
//! | 2    | bad parameters, including `r < g(k)`            |
//! | 3    | I/O failure                                     |
//! | 4    | malformed coloring file or vertex label         |
//! | 5    | no valid coloring within `--max-colors`         |
//! | 6    | exhaustive search refused by the cost guard     |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::construction::{build_coloring, classify_pair, make_scheme, WitnessGenerator};
use crate::error::Error;
use crate::format::{to_dot, ColoringFile, PathRecord, ReportFile};
use crate::oracle::{count_valid_colorings, rc_k_bruteforce, SearchOptions};
use crate::verifier::verify_k_connectivity;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_CONNECTED: u8 = 1;
pub const EXIT_PARAMETER: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_FORMAT: u8 = 4;
pub const EXIT_CAP: u8 = 5;
pub const EXIT_GUARD: u8 = 6;

/// Default color cap of the `rc_k` search.
pub const DEFAULT_MAX_COLORS: usize = 6;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parameter(_) | Error::Threshold { .. } | Error::MalformedPath(_) => EXIT_PARAMETER,
        Error::WitnessShortfall { .. } => EXIT_NOT_CONNECTED,
        Error::Io(_) => EXIT_IO,
        Error::Format(_) | Error::Json(_) | Error::Labeling(_) => EXIT_FORMAT,
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::CostGuard { .. } => EXIT_GUARD,
    }
}

#[derive(Debug, Parser)]
#[command(name = "rckb", version, about = "Rainbow k-connectivity of K_{r,r}")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the 3-coloring for (k, r) and write it as a coloring file.
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check whether a coloring file is rainbow k-connected.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        k: usize,
        /// Include one maximum packing per pair in the report.
        #[arg(long)]
        witnesses: bool,
        /// Include the packing of every pair in the report.
        #[arg(long)]
        per_pair: bool,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print the case and witness paths of a vertex pair.
    Witness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        json: bool,
    },
    /// Compute rc_k(K_{r,r}) by exhaustive search.
    Oracle {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        /// Largest color count tried; with --count, the color cap counted.
        #[arg(long)]
        max_colors: Option<usize>,
        /// Count the valid canonical colorings with at most --max-colors colors.
        #[arg(long, requires = "max_colors")]
        count: bool,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Skip the cost guard.
        #[arg(long)]
        force: bool,
    },
    /// Print the case tag and transform of a vertex pair.
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
}

#[derive(Serialize)]
struct WitnessOutput<'a> {
    u: &'a str,
    v: &'a str,
    case: String,
    transform: String,
    supplemented: usize,
    paths: Vec<PathRecord>,
}

/// Parses `args` (program name first) and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_PARAMETER
            } else {
                EXIT_OK
            };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> crate::Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> crate::Result<u8> {
    match command {
        Command::Construct {
            k,
            r,
            out: path,
            dot,
        } => {
            let scheme = make_scheme(k, r)?;
            let file = ColoringFile::from_scheme(&scheme, build_coloring(&scheme));
            file.write(&path)?;
            if let Some(dot_path) = dot {
                std::fs::write(dot_path, to_dot(&file.coloring, &file.labels)?)?;
            }
            writeln!(
                out,
                "wrote K_{{{r},{r}}} with {} colors (k1 = {}, r1 = {}) to {}",
                file.coloring.colors_used(),
                scheme.k1(),
                scheme.r1(),
                path.display()
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            coloring,
            k,
            witnesses,
            per_pair,
            report,
            jobs,
        } => {
            let file = ColoringFile::read(&coloring)?;
            let result = with_jobs(jobs, || verify_k_connectivity(&file.coloring, k, witnesses))??;
            let rendered = ReportFile::new(&result, &file.labels, per_pair);
            if let Some(path) = report {
                std::fs::write(path, rendered.to_json())?;
            }
            writeln!(
                out,
                "k = {k}: {} (min packing {}, {} pair(s) at minimum)",
                if result.ok { "ok" } else { "FAILED" },
                result.min_packing,
                rendered.worst_pairs.len()
            )?;
            if !result.ok {
                for p in rendered.worst_pairs.iter().take(10) {
                    writeln!(out, "  {} {} : {}", p.u, p.v, p.packing)?;
                }
            }
            Ok(if result.ok {
                EXIT_OK
            } else {
                EXIT_NOT_CONNECTED
            })
        }
        Command::Witness { k, r, u, v, json } => {
            let scheme = make_scheme(k, r)?;
            let (a, b) = (scheme.labeling().parse(&u)?, scheme.labeling().parse(&v)?);
            let gen = WitnessGenerator::new(scheme);
            let w = gen.witnesses(&a, &b)?;
            if json {
                let labels = crate::format::Labels::for_scheme(scheme.labeling());
                let body = WitnessOutput {
                    u: &u,
                    v: &v,
                    case: w.case.tag.to_string(),
                    transform: w.case.transform.to_string(),
                    supplemented: w.supplemented,
                    paths: w
                        .paths
                        .iter()
                        .map(|p| PathRecord::new(p, &labels))
                        .collect(),
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&body)?)?;
            } else {
                writeln!(out, "case {}", w.case)?;
                for p in &w.paths {
                    writeln!(out, "{}", p.display_with(scheme.labeling()))?;
                }
                if w.supplemented > 0 {
                    writeln!(
                        err,
                        "note: {} path(s) found by search outside the families",
                        w.supplemented
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle {
            r,
            k,
            max_colors,
            count,
            jobs,
            force,
        } => {
            let opts = SearchOptions {
                force,
                ..SearchOptions::default()
            };
            let value = if count {
                let j = max_colors.expect("clap enforces --max-colors with --count");
                with_jobs(jobs, || count_valid_colorings(r, k, j, opts))?? as usize
            } else {
                let cap = max_colors.unwrap_or(DEFAULT_MAX_COLORS);
                with_jobs(jobs, || rc_k_bruteforce(r, k, cap, opts))??
            };
            writeln!(out, "{value}")?;
            Ok(EXIT_OK)
        }
        Command::Classify { k, r, u, v } => {
            let scheme = make_scheme(k, r)?;
            let (a, b) = (scheme.labeling().parse(&u)?, scheme.labeling().parse(&v)?);
            let c = classify_pair(&scheme, &a, &b)?;
            writeln!(out, "{}", c.tag)?;
            writeln!(out, "transform: {}", c.transform)?;
            if c.endpoints_swapped {
                writeln!(out, "endpoints swapped")?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rckb(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("rckb").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn classify_examples() {
        let (code, out, _) = rckb(&[
            "classify", "--k", "4", "--r", "18", "--u", "U:1:1", "--v", "W:1:1",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("1.2.1\n"));
        let (_, out, _) = rckb(&[
            "classify", "--k", "4", "--r", "18", "--u", "U:e:1", "--v", "U:e:2",
        ]);
        assert!(out.starts_with("2.1.2\n"));
        let (_, out, _) = rckb(&[
            "classify", "--k", "4", "--r", "18", "--u", "W:2:1", "--v", "U:3:1",
        ]);
        assert!(out.contains("side swap"));
    }

    #[test]
    fn error_codes() {
        let (code, _, err) = rckb(&[
            "classify", "--k", "4", "--r", "18", "--u", "U:1:1", "--v", "U:1:1",
        ]);
        assert_eq!(code, EXIT_PARAMETER, "{err}");
        let (code, _, _) = rckb(&[
            "classify", "--k", "4", "--r", "18", "--u", "U:9:1", "--v", "U:1:1",
        ]);
        assert_eq!(code, EXIT_FORMAT);
        let (code, _, err) = rckb(&[
            "witness", "--k", "2", "--r", "3", "--u", "U:1:1", "--v", "U:2:1",
        ]);
        assert_eq!(code, EXIT_PARAMETER);
        assert!(err.contains("g(2) = 4"));
        let (code, _, _) = rckb(&["oracle", "--r", "5", "--k", "2"]);
        assert_eq!(code, EXIT_GUARD);
        let (code, _, _) = rckb(&["oracle", "--r", "2", "--k", "2", "--max-colors", "3"]);
        assert_eq!(code, EXIT_CAP);
        let (code, _, _) = rckb(&["verify", "--coloring", "/nonexistent/file.json", "--k", "1"]);
        assert_eq!(code, EXIT_IO);
        let (code, _, _) = rckb(&["oracle", "--r", "2", "--k", "2", "--count"]);
        assert_eq!(code, EXIT_PARAMETER);
        let (code, _, _) = rckb(&["nonsense"]);
        assert_eq!(code, EXIT_PARAMETER);
    }

    #[test]
    fn witness_text() {
        let (code, out, _) = rckb(&[
            "witness", "--k", "4", "--r", "18", "--u", "U:1:1", "--v", "U:1:2",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[0].starts_with("case 1.1.1"));
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[1], "U:1:1 -1- W:1:1 -3- U:1:2");
    }
}
