use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use qcartan::commands::{cohomology_summary, AlgebraName, MatrixObject, Space, Workspace};
use qcartan::linalg::Matrix;
use qcartan::scalar::{Field, Params, Scalar};
use qcartan::verify::{verify, Mode, Suite, VerificationReport};

#[derive(Parser)]
#[command(name = "qcartan", version, about = "Exact computations in the quantum exterior and Clifford algebras of sl2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite an expression on the canonical basis
    Normalize {
        #[arg(long, default_value = "cl")]
        algebra: AlgebraName,
        text: String,
    },
    /// Run the identity checks
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Evaluate at this rational q instead of symbolically
        #[arg(long)]
        q: Option<String>,
        /// Value of c at the point, may mention q (default 1)
        #[arg(long, requires = "q")]
        c: Option<String>,
        /// Write the JSON report here (`-` for stdout)
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print a named matrix
    Matrix {
        /// sigma, sigma-inv, sigma-tilde, d-ext, d-cl, iota(x), L(g)
        object: MatrixObject,
        /// V2pi, ext or cl
        spaces: Vec<Space>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long, requires = "q")]
        c: Option<String>,
    },
    /// Cohomology of d_ext or d_cl
    Cohomology {
        #[arg(long, default_value = "ext")]
        algebra: AlgebraName,
        /// Specialise the symbolic differential at q (q = 1 is allowed here)
        #[arg(long)]
        q: Option<String>,
        #[arg(long, requires = "q")]
        c: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type Failure = Box<dyn std::error::Error>;

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Normalize { algebra, text } => {
            let ws = Workspace::new(Params::<Scalar>::symbolic())?;
            println!("{}", ws.normalize(algebra, &text)?);
        }
        Command::Verify { suite, q, c, json } => {
            let mode = match q {
                None => Mode::Symbolic,
                Some(q) => Mode::at(&q, c.as_deref().unwrap_or("1"))?,
            };
            let report = verify(suite, &mode)?;
            emit_report(&report, json)?;
            return Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Command::Matrix { object, spaces, q, c } => match q {
            None => print_matrix(&Workspace::new(Params::<Scalar>::symbolic())?.matrix(object, &spaces)?),
            Some(q) => {
                let Mode::At { q, c } = Mode::at(&q, c.as_deref().unwrap_or("1"))? else {
                    unreachable!("Mode::at returns a point")
                };
                print_matrix(&Workspace::new(Params::at(q, c)?)?.matrix(object, &spaces)?)
            }
        },
        Command::Cohomology { algebra, q, c, json } => {
            let point = q.map(|q| point(&q, c.as_deref().unwrap_or("1"))).transpose()?;
            let summary = cohomology_summary(algebra, point.as_ref().map(|(q, c)| (q, c)))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&summary)?);
            } else {
                println!("{summary}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn point(q: &str, c: &str) -> Result<(BigRational, BigRational), Failure> {
    let zero = BigRational::from_integer(0.into());
    let q = qcartan::expr::parse(q)?.eval_rational(&zero, &zero)?;
    let c = qcartan::expr::parse(c)?.eval_rational(&q, &zero)?;
    Ok((q, c))
}

fn emit_report(report: &VerificationReport, json: Option<PathBuf>) -> Result<(), Failure> {
    match json {
        Some(path) if path.as_os_str() == "-" => println!("{}", serde_json::to_string_pretty(report)?),
        Some(path) => {
            fs::write(&path, serde_json::to_string_pretty(report)?)?;
            println!("{report}");
        }
        None => println!("{report}"),
    }
    Ok(())
}

fn print_matrix<F: Field>(m: &Matrix<F>) {
    println!("{}x{}", m.rows(), m.cols());
    println!("{m}");
}
