use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use hurwitz_core::dual::dual_nf;
use hurwitz_core::garside::normal_form;
use hurwitz_core::hurwitz::{orbit_with, OrbitOptions, OrbitOutcome, Subgroup, DEFAULT_ORBIT_CAP};
use hurwitz_core::nielsen_thurston::{classify_with, ClassifyOptions};
use hurwitz_core::orbit_graph::{check_structure, feature_report, OrbitGraph};
use hurwitz_core::verify::verify_paper;
use hurwitz_core::{BraidSystem, BraidWord, Error};

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Braid normal forms, Nielsen-Thurston types and Hurwitz orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Garside left normal form of a braid word.
    Nf {
        #[arg(long)]
        degree: usize,
        word: String,
    },
    /// Print the band-generator normal form of a 3-braid.
    DualNf {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        word: String,
    },
    /// Print `periodic`, `reducible`, `pA` or `inconclusive`.
    Classify {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 20_000)]
        summit_cap: usize,
        word: String,
    },
    /// Enumerate the Hurwitz orbit of a braid system, one word per entry.
    Orbit {
        #[arg(long)]
        degree: usize,
        #[arg(long, env = "HURWITZ_CAP", default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
        #[arg(long, default_value = "full", value_parser = ["full", "pure", "free"])]
        subgroup: String,
        /// Skip the infiniteness certificates and search directly.
        #[arg(long)]
        no_certificates: bool,
        /// Exit with status 1 unless the orbit is finite.
        #[arg(long)]
        expect_finite: bool,
        #[arg(required = true)]
        entries: Vec<String>,
    },
    /// Build the orbit graph of a length-3 system in degree 3.
    OrbitGraph {
        #[arg(long)]
        degree: usize,
        #[arg(long, env = "HURWITZ_CAP", default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
        /// Write the graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(required = true, num_args = 3)]
        entries: Vec<String>,
    },
    /// Run the built-in theorem checks.
    VerifyPaper {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum Status {
    Ok,
    Violation,
    CapExceeded,
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Nf { degree, word } => {
            let w = BraidWord::parse(&word, degree)?;
            println!("{}", normal_form(&w));
        }
        Command::DualNf { degree, word } => {
            let w = BraidWord::parse(&word, degree)?;
            println!("{}", dual_nf(&w)?);
        }
        Command::Classify {
            degree,
            summit_cap,
            word,
        } => {
            let w = BraidWord::parse(&word, degree)?;
            let opts = ClassifyOptions {
                summit_cap,
                ..ClassifyOptions::default()
            };
            match classify_with(&w, &opts) {
                Ok(t) => println!("{t}"),
                Err(Error::Inconclusive(msg)) => {
                    println!("inconclusive");
                    eprintln!("{msg}");
                    return Ok(Status::CapExceeded);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Orbit {
            degree,
            cap,
            subgroup,
            no_certificates,
            expect_finite,
            entries,
        } => {
            let s = BraidSystem::parse(degree, &entries)?;
            let subgroup: Subgroup = subgroup.parse()?;
            let opts = OrbitOptions {
                subgroup,
                cap,
                certificates: !no_certificates,
                ..OrbitOptions::default()
            };
            let result = orbit_with(&s, &opts)?;
            for line in &result.skipped {
                eprintln!("skipped: {line}");
            }
            print!("{}", result.record());
            return Ok(match result.outcome {
                OrbitOutcome::Finite(_) => Status::Ok,
                OrbitOutcome::CapExceeded { .. } => Status::CapExceeded,
                OrbitOutcome::ProvablyInfinite(_) if expect_finite => Status::Violation,
                OrbitOutcome::ProvablyInfinite(_) => Status::Ok,
            });
        }
        Command::OrbitGraph {
            degree,
            cap,
            dot,
            entries,
        } => {
            let s = BraidSystem::parse(degree, &entries)?;
            let g = match OrbitGraph::build(&s, cap) {
                Ok(g) => g,
                Err(Error::OrbitCapExceeded { cap }) => {
                    eprintln!("orbit graph exceeds cap {cap}");
                    return Ok(Status::CapExceeded);
                }
                Err(e) => return Err(e.into()),
            };
            if let Some(path) = dot {
                fs::write(&path, g.to_dot()).with_context(|| format!("writing {}", path.display()))?;
            }
            print!("{}", feature_report(&g));
            let report = check_structure(&g);
            println!("unchecked={}", report.unchecked.join(","));
            for v in &report.violations {
                println!("violation={}:v{}:{}", v.rule, v.vertex, v.detail);
            }
            if !report.passed() {
                return Ok(Status::Violation);
            }
        }
        Command::VerifyPaper { seed } => {
            let reports = verify_paper(seed);
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{r}");
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(Status::Violation);
            }
        }
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Ok(Status::CapExceeded) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            // malformed words and bad arguments are usage errors
            match e.downcast_ref::<Error>() {
                Some(Error::OrbitCapExceeded { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
