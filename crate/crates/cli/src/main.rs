use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use helberg::{
    build_weights, corrupt, decode, decode_deletions, format_weights, full_run_cost, moment, random_plan,
    verify_exhaustive, BigInt, Error, Params, VerifyMode, Weights, Word,
};

/// Largest full verification run allowed without `--force`.
const FULL_RUN_LIMIT: u128 = 100_000_000;

#[derive(Parser)]
#[command(name = "helberg", version, about = "Generalized Helberg insertion/deletion codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CodeArgs {
    /// Codeword length.
    #[arg(long)]
    n: usize,
    /// Number of correctable insertions and deletions.
    #[arg(long)]
    d: usize,
    /// Alphabet size.
    #[arg(long)]
    q: u32,
    /// Residue of the codebook.
    #[arg(long, allow_negative_numbers = true)]
    r: BigInt,
}

impl CodeArgs {
    fn params(&self) -> Result<Params, Error> {
        Params::new(self.n, self.d, self.q, self.r.clone())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print w_0 .. w_{count-1}, one per line.
    Weights {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        count: usize,
    },
    /// Print the moment of a word.
    Moment {
        word: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
    },
    /// Test codebook membership.
    Member {
        word: String,
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Decode a received word.
    Decode {
        word: String,
        #[command(flatten)]
        code: CodeArgs,
        /// Also print the decoder trace.
        #[arg(long)]
        trace: bool,
    },
    /// Recover a word from deletions given its exact moment.
    DecodeDeletions {
        word: String,
        #[arg(long)]
        n_target: usize,
        #[arg(long)]
        moment: BigInt,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
    },
    /// Apply a seeded random corruption.
    Corrupt {
        word: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        ins: usize,
        #[arg(long)]
        del: usize,
        #[arg(long)]
        seed: u64,
        /// Edit budget; defaults to `ins + del`.
        #[arg(long)]
        d: Option<usize>,
    },
    /// List every codeword.
    Enumerate {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Decode corruptions of every codeword and check the results.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Every codeword under every plan.
        #[arg(long, conflicts_with_all = ["seed", "count"])]
        full: bool,
        /// Seed for sampled mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sampled (codeword, plan) pairs.
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        /// Run a full verification regardless of its size.
        #[arg(long)]
        force: bool,
    },
}

/// Outcome of a command: text for stdout and an exit status.
struct Report {
    out: String,
    status: u8,
}

impl Report {
    fn ok(out: String) -> Self {
        Report { out, status: 0 }
    }
}

fn exit_status(err: &Error) -> u8 {
    match err {
        Error::InvariantViolation(_) => 3,
        Error::NoCodeword | Error::MultipleCodewords(_) => 1,
        _ => 2,
    }
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Weights { q, d, count } => {
            let w: Weights = build_weights(q, d, count)?;
            Ok(Report::ok(format_weights(&w)))
        }
        Command::Moment { word, q, d } => {
            let x = Word::parse(&word, q)?;
            let w: Weights = build_weights(q, d, x.len() + 1)?;
            Ok(Report::ok(format!("{}\n", moment(&x, &w)?)))
        }
        Command::Member { word, code } => {
            let params = code.params()?;
            let x = Word::parse(&word, code.q)?;
            Ok(if params.is_codeword(&x)? {
                Report::ok("member\n".into())
            } else {
                Report {
                    out: "non-member\n".into(),
                    status: 1,
                }
            })
        }
        Command::Decode { word, code, trace } => {
            let params = code.params()?;
            let y = Word::parse(&word, code.q)?;
            match decode(&y, &params) {
                Ok(out) => {
                    let mut text = format!("{}\n", out.word.to_text(code.q));
                    if trace {
                        text += &out.trace.to_text();
                    }
                    if !out.verified {
                        eprintln!("output failed final verification");
                    }
                    Ok(Report {
                        out: text,
                        status: if out.verified { 0 } else { 1 },
                    })
                }
                Err(failure) => {
                    eprintln!("error: {}", failure.error);
                    let text = if trace { failure.trace.to_text() } else { String::new() };
                    Ok(Report {
                        out: text,
                        status: exit_status(&failure.error),
                    })
                }
            }
        }
        Command::DecodeDeletions {
            word,
            n_target,
            moment,
            q,
            d,
        } => {
            let y = Word::parse(&word, q)?;
            let x = decode_deletions(&y, n_target, &moment, q, d)?;
            Ok(Report::ok(format!("{}\n", x.to_text(q))))
        }
        Command::Corrupt {
            word,
            q,
            ins,
            del,
            seed,
            d,
        } => {
            let x = Word::parse(&word, q)?;
            let plan = random_plan(x.len(), ins, del, seed, q, d.unwrap_or(ins + del))?;
            let y = corrupt(&x, &plan)?;
            Ok(Report::ok(format!("{}\n{}\n", y.to_text(q), plan)))
        }
        Command::Enumerate { code } => {
            let params = code.params()?;
            let text: String = params.codebook().map(|x| format!("{}\n", x.to_text(code.q))).collect();
            Ok(Report::ok(text))
        }
        Command::Verify {
            code,
            full,
            seed,
            count,
            force,
        } => {
            let params = code.params()?;
            let mode = if full {
                let cost = full_run_cost(&params);
                if cost > FULL_RUN_LIMIT && !force {
                    return Err(Error::InvalidParameter(format!(
                        "full run needs about {cost} decodes (limit {FULL_RUN_LIMIT}); pass --force or use --seed/--count"
                    )));
                }
                VerifyMode::Full
            } else {
                VerifyMode::Sampled { seed, count }
            };
            let report = verify_exhaustive(&params, mode);
            eprintln!("wall_clock={:.3}s", report.wall_clock.as_secs_f64());
            Ok(Report {
                out: report.to_text(),
                status: if report.passed() { 0 } else { 1 },
            })
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let status = match run(cli.command) {
        Ok(report) => {
            print!("{}", report.out);
            report.status
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_status(&err)
        }
    };
    ExitCode::from(status)
}
