//! Command-line front end: construct geometries, enumerate flats, evaluate
//! Gaussian binomials, scan for long lines, check growth bounds, and run
//! the built-in claim suite.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use matflat::error::Error;
use matflat::flats::{enumerate_flats_capped, DEFAULT_FLAT_CAP};
use matflat::geometry;
use matflat::json::{load_matroid, matroid_to_json};
use matflat::minor::{check_whitney_bound, max_line_length_capped};
use matflat::qbinom::qbinom;
use matflat::report::ReportStatus;
use matflat::verify::{verify_paper, Profile};
use std::path::PathBuf;
use std::process::ExitCode;

// sysexits-style codes
const EXIT_USAGE: u8 = 64;
const EXIT_DATAERR: u8 = 65;
const EXIT_NOINPUT: u8 = 66;
const EXIT_UNAVAILABLE: u8 = 69;
const EXIT_SOFTWARE: u8 = 70;
const EXIT_VIOLATED: u8 = 2;

#[derive(Parser)]
#[command(name = "matflat", version, about = "Matroid flats, finite geometries, and growth-bound checks over GF(q)")]
struct Cli {
    /// Worker threads for enumeration (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Cap on the size of one flat level
    #[arg(long, global = true, default_value_t = DEFAULT_FLAT_CAP)]
    cap: usize,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Pg,
    Ag,
    Blokhuis,
    Pgfree,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a named matroid and emit it in the matroid JSON format
    Construct {
        family: Family,
        /// Rank (required for pg and ag; blokhuis and pgfree are rank 3)
        #[arg(long)]
        r: Option<usize>,
        /// Field order
        #[arg(long)]
        q: u64,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Count flats per rank, or list the flats of one rank
    Flats {
        file: PathBuf,
        /// Rank to report (all ranks when omitted)
        #[arg(long)]
        k: Option<usize>,
        /// List the flats as sorted element lists instead of counting
        #[arg(long)]
        list: bool,
    },
    /// Print the exact Gaussian binomial [r k]_q
    Qbinom { q: u64, r: u32, k: i64 },
    /// Scan for the longest line over all contractions
    Minor {
        file: PathBuf,
        /// Report the maximum line length with a witness interval
        #[arg(long = "max-line", default_value_t = true)]
        max_line: bool,
    },
    /// Check the flat-count bound W_k <= [r k]_q* for a matroid in U(ell);
    /// exits 2 with a JSON witness when the bound is violated
    Check {
        file: PathBuf,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        k: usize,
    },
    /// Run the built-in claim suite and emit a traceability report
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("matflat: could not configure {n} threads: {e}");
            return ExitCode::from(EXIT_SOFTWARE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("matflat: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Parse(_) | Error::InvalidMatroid(_) => EXIT_NOINPUT,
        Error::ResourceLimit(_) => EXIT_UNAVAILABLE,
        Error::NotInClass { .. } => EXIT_DATAERR,
        Error::OutOfRange(_) | Error::NotPrimePower(_) | Error::Unsupported(_) => EXIT_USAGE,
        _ => EXIT_SOFTWARE,
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.cmd {
        Cmd::Construct { family, r, q, out } => {
            let m = match family {
                Family::Pg => {
                    let r = r.ok_or_else(|| {
                        Error::OutOfRange("pg needs --r <rank>".into())
                    })?;
                    geometry::build_pg(r, *q)?
                }
                Family::Ag => {
                    let r = r.ok_or_else(|| {
                        Error::OutOfRange("ag needs --r <rank>".into())
                    })?;
                    geometry::build_ag(r, *q)?
                }
                Family::Blokhuis => {
                    if let Some(r) = r {
                        if *r != 3 {
                            return Err(Error::OutOfRange(
                                "blokhuis matroids have rank 3; omit --r or pass 3".into(),
                            ));
                        }
                    }
                    geometry::build_blokhuis(*q)?
                }
                Family::Pgfree => {
                    if let Some(r) = r {
                        if *r != 3 {
                            return Err(Error::OutOfRange(
                                "pgfree matroids have rank 3; omit --r or pass 3".into(),
                            ));
                        }
                    }
                    geometry::build_pg_plus_free_point(*q)?
                }
            };
            let text = matroid_to_json(&m)?;
            match out {
                Some(path) => std::fs::write(path, text + "\n")?,
                None => println!("{text}"),
            }
            Ok(0)
        }

        Cmd::Flats { file, k, list } => {
            let m = load_matroid(file)?;
            let top = k.unwrap_or(m.rank());
            if top > m.rank() {
                return Err(Error::OutOfRange(format!(
                    "--k {top} exceeds the matroid rank {}",
                    m.rank()
                )));
            }
            let levels = enumerate_flats_capped(&m, top, cli.cap)?;
            if *list {
                let which = k.unwrap_or(top);
                match cli.format {
                    Format::Json => {
                        let flats: Vec<Vec<usize>> =
                            levels.level(which).iter().map(|f| f.members.to_vec()).collect();
                        println!(
                            "{}",
                            serde_json::json!({"k": which, "count": flats.len(), "flats": flats})
                        );
                    }
                    Format::Table => {
                        for f in levels.level(which) {
                            let elems: Vec<String> =
                                f.members.iter().map(|e| e.to_string()).collect();
                            println!("{}", elems.join(" "));
                        }
                    }
                }
            } else {
                match (k, cli.format) {
                    (Some(k), Format::Table) => println!("{}", levels.count(*k)),
                    (Some(k), Format::Json) => {
                        println!("{}", serde_json::json!({"k": k, "count": levels.count(*k)}))
                    }
                    (None, Format::Table) => {
                        for rank in 0..=top {
                            println!("W_{rank} = {}", levels.count(rank));
                        }
                    }
                    (None, Format::Json) => {
                        let counts: Vec<usize> = (0..=top).map(|r| levels.count(r)).collect();
                        println!("{}", serde_json::json!({"counts": counts}));
                    }
                }
            }
            Ok(0)
        }

        Cmd::Qbinom { q, r, k } => {
            if *q < 2 {
                return Err(Error::OutOfRange(format!("q must be at least 2, got {q}")));
            }
            println!("{}", qbinom(*q, *r, *k));
            Ok(0)
        }

        Cmd::Minor { file, max_line: _ } => {
            let m = load_matroid(file)?;
            let rep = max_line_length_capped(&m, None, cli.cap)?;
            match cli.format {
                Format::Json => {
                    let witness = rep.witness.map(|(f, g)| {
                        serde_json::json!({
                            "bottom": {"rank": f.rank, "members": f.members.to_vec()},
                            "top": {"rank": g.rank, "members": g.members.to_vec()},
                        })
                    });
                    let histogram: Option<serde_json::Map<String, serde_json::Value>> =
                        rep.histogram.map(|h| {
                            h.into_iter()
                                .map(|(k, v)| (k.to_string(), serde_json::json!(v)))
                                .collect()
                        });
                    println!(
                        "{}",
                        serde_json::json!({
                            "max_line_length": rep.max_line_length,
                            "witness": witness,
                            "histogram": histogram,
                        })
                    );
                }
                Format::Table => {
                    println!("{}", rep.max_line_length);
                    if let Some((f, g)) = rep.witness {
                        println!(
                            "witness: [{:?} (rank {}), {:?} (rank {})]",
                            f.members, f.rank, g.members, g.rank
                        );
                    }
                }
            }
            Ok(0)
        }

        Cmd::Check { file, ell, k } => {
            let m = load_matroid(file)?;
            let rep = check_whitney_bound(&m, *ell, *k, cli.cap)?;
            if rep.passed() {
                match cli.format {
                    Format::Json => println!("{}", serde_json::to_string_pretty(&rep).unwrap()),
                    Format::Table => println!("{}", rep.summary_line()),
                }
                Ok(0)
            } else {
                // violation: the witness goes to stdout as JSON
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
                Ok(EXIT_VIOLATED)
            }
        }

        Cmd::VerifyPaper { profile, out } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let set = verify_paper(profile, cli.cap);
            let json = serde_json::to_string_pretty(&set).unwrap();
            match out {
                Some(path) => std::fs::write(path, json + "\n")?,
                None => match cli.format {
                    Format::Json => println!("{json}"),
                    Format::Table => {
                        for rep in &set.reports {
                            println!("{}", rep.summary_line());
                        }
                        println!(
                            "{} claims: {} passed, {} failed, {} skipped",
                            set.reports.len(),
                            set.passed,
                            set.failed,
                            set.skipped
                        );
                    }
                },
            }
            if set.reports.iter().any(|r| r.status == ReportStatus::Fail) {
                Ok(1)
            } else {
                Ok(0)
            }
        }
    }
}
