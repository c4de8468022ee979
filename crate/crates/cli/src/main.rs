//! `bredon`: equivariant K- and KO-homology from the command line.

mod output;

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bredon_core::arithmetic_k::{cstar_k_p11, cstar_ko_p11, psl_zp_bredon, psl_zp_k, sl_zp_k};
use bredon_core::bredon::{
    bredon_homology_with, fuchsian_cocompact_datum, fuchsian_noncocompact_datum,
    lifted_fuchsian_datum, parse_datum, render_datum, sl3_datum, GammaCwDatum,
};
use bredon_core::fuchsian::{equivariant_k, hecke_bredon, hecke_signature, Signature};
use bredon_core::ko_assembly::{collapse_complex, kunneth_times_z2, ko_homology, ko_homology_times_z2};
use bredon_core::verify::{verify_all, VerifyConfig};
use bredon_core::{Error, Execution, FinAbGroup};

use output::{Layout, Output, Section};

#[derive(Parser, Debug)]
#[command(name = "bredon", version, about = "Bredon homology and equivariant K/KO-homology")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Run batch work on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// SL3(Z) from the shipped cell complex.
    Sl3 {
        #[arg(long)]
        ko: bool,
        /// Print the shipped complex in input-file format and exit.
        #[arg(long)]
        emit_datum: bool,
    },
    /// GL3(Z) = SL3(Z) x Z2 through the Kunneth formula.
    Gl3 {
        #[arg(long)]
        ko: bool,
    },
    /// A Fuchsian group given by its signature `[g,s;m1,...]`.
    Fuchsian {
        #[arg(long)]
        signature: String,
        /// Use the central Z2 extension in SL2(R) (needs s > 0, periods 2 and 3).
        #[arg(long)]
        lift: bool,
        #[arg(long)]
        bredon: bool,
    },
    /// Signature and Bredon homology of the Hecke subgroup Γ0(p).
    Hecke {
        #[arg(short, long)]
        prime: u64,
    },
    /// PSL2(Z[1/p]); with --lift, SL2(Z[1/p]).
    Psl2zp {
        #[arg(short, long)]
        prime: u64,
        #[arg(long)]
        lift: bool,
        #[arg(long)]
        bredon: bool,
    },
    /// SL2(Z[1/p]).
    Sl2zp {
        #[arg(short, long)]
        prime: u64,
    },
    /// Reduced group C*-algebra of PSL2(Z[1/p]) for p = 11 mod 12.
    Cstar {
        #[arg(short, long)]
        prime: u64,
        #[arg(long)]
        ko: bool,
    },
    /// A Γ-CW datum read from a file.
    Complex {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        ko: bool,
        /// Re-render the parsed datum and exit.
        #[arg(long)]
        emit_datum: bool,
    },
    /// Check every tabulated result; exit status 3 on any mismatch.
    Verify {
        /// Inclusive prime range for the sweeps, e.g. `2..200`.
        #[arg(long, value_parser = parse_range)]
        primes: Option<RangeInclusive<u64>>,
        /// Replace the shipped SL3(Z) complex.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got `{s}`"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: u64 = a.trim().parse().map_err(|_| format!("bad bound `{a}`"))?;
    let hi: u64 = b.trim().parse().map_err(|_| format!("bad bound `{b}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_input_error() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn load(path: &Path) -> Result<GammaCwDatum, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_datum(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn k_section(k0: FinAbGroup, k1: FinAbGroup) -> Section {
    Section::new(Layout::Inline, vec![("K0".into(), k0), ("K1".into(), k1)]).periodic()
}

fn homology_section(h: &[FinAbGroup]) -> Section {
    let entries = h
        .iter()
        .enumerate()
        .map(|(n, g)| (format!("H{n}"), g.clone()))
        .collect();
    Section::new(Layout::Lines, entries)
}

fn ko_section(ko: &bredon_core::GradedGroup) -> Section {
    let entries = ko
        .groups()
        .iter()
        .enumerate()
        .map(|(n, g)| (format!("KO{n}"), g.clone()))
        .collect();
    Section::new(Layout::Lines, entries)
        .periodic()
        .ambiguous(ko.ambiguous_degrees().collect())
}

enum Outcome {
    Report(Output),
    Raw(String),
    /// Verification ran but something failed.
    Failed(Output),
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let out = match &cli.command {
        Command::Sl3 { ko, emit_datum } => {
            let d = sl3_datum();
            if *emit_datum {
                return Ok(Outcome::Raw(render_datum(&d)));
            }
            let mut out = Output::new("sl3").input("ko", ko);
            if *ko {
                out.push(ko_section(&ko_homology(&d, exec)?));
            } else {
                let h = bredon_homology_with(&d, exec)?;
                let (k0, k1) = collapse_complex(&h)?;
                out.push(homology_section(&h));
                out.push(k_section(k0, k1));
            }
            out
        }
        Command::Gl3 { ko } => {
            let d = sl3_datum();
            let mut out = Output::new("gl3").input("ko", ko);
            if *ko {
                out.push(ko_section(&ko_homology_times_z2(&d, exec)?));
            } else {
                let h = kunneth_times_z2(&bredon_homology_with(&d, exec)?)?;
                let (k0, k1) = collapse_complex(&h)?;
                out.push(homology_section(&h));
                out.push(k_section(k0, k1));
            }
            out
        }
        Command::Fuchsian {
            signature,
            lift,
            bredon,
        } => {
            let sig: Signature = signature.parse()?;
            let mut out = Output::new("fuchsian")
                .input("signature", &sig)
                .input("lift", lift);
            let h = if *lift {
                bredon_homology_with(&lifted_fuchsian_datum(&sig)?, exec)?
            } else if sig.is_cocompact() {
                bredon_homology_with(&fuchsian_cocompact_datum(&sig)?, exec)?
            } else {
                bredon_homology_with(&fuchsian_noncocompact_datum(&sig)?, exec)?
            };
            let (k0, k1) = collapse_complex(&h)?;
            if !*lift && (k0.clone(), k1.clone()) != equivariant_k(&sig) {
                return Err(Failure {
                    code: 1,
                    message: format!("chain-level K disagrees with the closed form for {sig}"),
                });
            }
            if *bredon {
                out.push(homology_section(&h));
            }
            out.push(k_section(k0, k1));
            out
        }
        Command::Hecke { prime } => {
            let sig = hecke_signature(*prime)?;
            let (h0, h1) = hecke_bredon(*prime)?;
            Output::new("hecke")
                .input("prime", prime)
                .note(format!("signature = {sig}"))
                .input("signature", &sig)
                .with(homology_section(&[h0, h1]))
        }
        Command::Psl2zp {
            prime,
            lift,
            bredon,
        } => psl_output(if *lift { "sl2zp" } else { "psl2zp" }, *prime, *lift, *bredon)?,
        Command::Sl2zp { prime } => psl_output("sl2zp", *prime, true, false)?,
        Command::Cstar { prime, ko } => {
            let out = Output::new("cstar").input("prime", prime).input("ko", ko);
            if *ko {
                out.with(ko_section(&cstar_ko_p11(*prime)?))
            } else {
                let (k0, k1) = cstar_k_p11(*prime)?;
                out.with(k_section(k0, k1))
            }
        }
        Command::Complex {
            file,
            ko,
            emit_datum,
        } => {
            let d = load(file)?;
            if *emit_datum {
                return Ok(Outcome::Raw(render_datum(&d)));
            }
            let mut out = Output::new("complex")
                .input("file", file.display())
                .input("name", &d.name)
                .input("ko", ko);
            let h = bredon_homology_with(&d, exec)?;
            out.push(homology_section(&h));
            if *ko {
                out.push(ko_section(&ko_homology(&d, exec)?));
            } else {
                match collapse_complex(&h) {
                    Ok((k0, k1)) => out.push(k_section(k0, k1)),
                    Err(e) => out.add_note(format!("K not assembled: {e}")),
                }
            }
            out
        }
        Command::Verify { primes, file } => {
            let mut config = VerifyConfig {
                exec,
                ..VerifyConfig::default()
            };
            if let Some(r) = primes {
                config.primes = r.clone();
            }
            if let Some(path) = file {
                config.sl3 = Some(load(path)?);
            }
            let report = verify_all(&config);
            let out = Output::new("verify")
                .input("primes", format!("{}..{}", config.primes.start(), config.primes.end()))
                .checks(&report);
            if !report.all_passed() {
                return Ok(Outcome::Failed(out));
            }
            out
        }
    };
    Ok(Outcome::Report(out))
}

fn psl_output(command: &str, prime: u64, lift: bool, bredon: bool) -> Result<Output, Failure> {
    let mut out = Output::new(command).input("prime", prime);
    if bredon {
        let h = psl_zp_bredon(prime)?;
        let h: Vec<FinAbGroup> = if lift {
            h.iter().map(|g| g.power(2)).collect()
        } else {
            h
        };
        out.push(homology_section(&h));
    }
    let (k0, k1) = if lift { sl_zp_k(prime)? } else { psl_zp_k(prime)? };
    out.push(k_section(k0, k1));
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let render = |o: &Output| match cli.format {
        Format::Text => o.to_text(),
        Format::Json => o.to_json(),
    };
    match run(&cli) {
        Ok(Outcome::Report(o)) => {
            println!("{}", render(&o));
            ExitCode::SUCCESS
        }
        Ok(Outcome::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(o)) => {
            println!("{}", render(&o));
            eprintln!("error: verification failed");
            ExitCode::from(3)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
