//! Batch front-end: ingest lattice/module/group JSON, select a point set,
//! run analyses and the check registry, export reports and DOT graphs.
//!
//! Exit codes: 0 clean, 1 check failures, 2 usage or input errors.

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use latspec_core::checks::{CheckContext, CheckStatus};
use latspec_core::corpus::{run_corpus, run_single};
use latspec_core::io::{
    build_context, build_lattice, build_module, parse_input, InputFile, XSelector,
};
use latspec_core::report::{analysis_report, checks_json_timed, to_canonical_string};
use latspec_core::{dot, gen, Caps};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "latspec", version, about = "Finite-lattice spectra workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an input file and print a short summary.
    Validate {
        /// Input path, `-` for stdin.
        file: String,
    },
    /// Emit a builtin family as JSON on stdout.
    Gen {
        /// chain N | boolean K | antichain K | n5 | m3 | divisor N |
        /// module N:d1,d2,... | group {s3,z4,q8,d4}
        family: String,
        /// Family parameter, when one is needed.
        param: Option<String>,
    },
    /// Full analysis report for one input and point-set selector.
    Analyze(AnalyzeArgs),
    /// Run the check registry on one input.
    Check(CheckArgs),
    /// Export DOT: the Hasse diagram, or the specialization preorder of
    /// the classical topology.
    ExportDot(ExportDotArgs),
    /// Batch operations over a corpus directory.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input path, `-` for stdin.
    file: String,
    /// Point-set selector: max, min, si, sh, spec_p, spec_c, spec_s,
    /// spec_f, normal, center, finite_center, or a comma-separated list of
    /// element labels.
    #[arg(long = "x", default_value = "max")]
    x: String,
    /// Force the dual orientation (explicit selectors only; the named
    /// selectors carry their own orientation).
    #[arg(long)]
    dual: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Input path, `-` for stdin.
    file: String,
    #[arg(long = "x", default_value = "max")]
    x: String,
    #[arg(long)]
    dual: bool,
    /// Run only these comma-separated check ids.
    #[arg(long)]
    only: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ExportDotArgs {
    /// Input path, `-` for stdin.
    file: String,
    /// Export the specialization preorder of the classical topology
    /// instead of the Hasse diagram.
    #[arg(long)]
    specialization: bool,
    #[arg(long = "x", default_value = "max")]
    x: String,
    #[arg(long)]
    dual: bool,
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Run every applicable selector and check over a directory of JSON
    /// files.
    Run {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_input(path: &str) -> Result<InputFile> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    parse_input(&text).map_err(|e| anyhow!("{path}: {e}"))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(family: &str, param: Option<&str>, caps: &Caps) -> Result<InputFile> {
    let need = |what: &str| anyhow!("family `{family}` needs a parameter: {what}");
    match family {
        "chain" => {
            let n: usize = param.ok_or_else(|| need("element count"))?.parse()?;
            Ok(InputFile::from_lattice(
                &gen::chain(n, caps)?,
                &format!("chain{n}"),
            ))
        }
        "boolean" => {
            let k: u32 = param.ok_or_else(|| need("exponent"))?.parse()?;
            Ok(InputFile::from_lattice(
                &gen::boolean(k, caps)?,
                &format!("boolean{k}"),
            ))
        }
        "antichain" => {
            let k: usize = param.ok_or_else(|| need("antichain width"))?.parse()?;
            Ok(InputFile::from_lattice(
                &gen::antichain_bounded(k, caps)?,
                &format!("antichain{k}"),
            ))
        }
        "n5" => Ok(InputFile::from_lattice(&gen::n5(caps)?, "n5")),
        "m3" => Ok(InputFile::from_lattice(&gen::m3(caps)?, "m3")),
        "divisor" => {
            let n: u64 = param.ok_or_else(|| need("modulus"))?.parse()?;
            Ok(InputFile::from_module(n, vec![n], &format!("divisor{n}")))
        }
        "module" => {
            let spec = param.ok_or_else(|| need("n:d1,d2,..."))?;
            let (n, factors) = spec
                .split_once(':')
                .ok_or_else(|| anyhow!("module parameter must look like 12:12 or 2:2,2"))?;
            let modulus: u64 = n.parse()?;
            let invariant_factors: Vec<u64> = factors
                .split(',')
                .map(|d| d.trim().parse::<u64>())
                .collect::<Result<_, _>>()?;
            Ok(InputFile::from_module(
                modulus,
                invariant_factors,
                &format!("module{spec}"),
            ))
        }
        "group" => {
            let name = param.ok_or_else(|| need("one of s3, z4, q8, d4"))?;
            let table = gen::builtin_group(name)
                .ok_or_else(|| anyhow!("unknown builtin group `{name}`"))?;
            Ok(InputFile::from_group(&table, name))
        }
        other => Err(anyhow!("unknown family `{other}`")),
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    let caps = Caps::from_env();
    match cli.command {
        Command::Validate { file } => {
            let input = read_input(&file)?;
            let size = match &input {
                InputFile::Lattice(li) => {
                    build_lattice(li, &caps).map_err(|e| anyhow!("{e}"))?.len()
                }
                InputFile::Module(mi) => {
                    build_module(mi, &caps)
                        .map_err(|e| anyhow!("{e}"))?
                        .lattice
                        .len()
                }
                InputFile::Group(gi) => {
                    let group = latspec_core::groups::GroupTable::new(gi.table.clone())
                        .map_err(|e| anyhow!("{e}"))?;
                    group.order()
                }
            };
            let summary = serde_json::json!({
                "kind": input.kind(),
                "name": input.name(),
                "digest": input.digest(),
                "size": size,
                "valid": true,
            });
            println!("{}", to_canonical_string(&summary).trim_end());
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { family, param } => {
            let input = generate(&family, param.as_deref(), &caps)?;
            let value = serde_json::to_value(&input)?;
            println!("{}", to_canonical_string(&value).trim_end());
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze(args) => {
            let input = read_input(&args.file)?;
            let selector = XSelector::parse(&args.x);
            let built =
                build_context(&input, &selector, args.dual, &caps).map_err(|e| anyhow!("{e}"))?;
            let report = analysis_report(&input, &built, args.seed);
            emit(args.out.as_ref(), &to_canonical_string(&report))?;
            let any_fail = report["checks"]
                .as_array()
                .is_some_and(|cs| cs.iter().any(|c| c["status"] == "fail"));
            Ok(if any_fail {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Check(args) => {
            let input = read_input(&args.file)?;
            let selector = XSelector::parse(&args.x);
            let mut results = run_single(&input, &selector, args.dual, args.seed, &caps)
                .map_err(|e| anyhow!("{e}"))?;
            if let Some(only) = &args.only {
                let wanted: Vec<&str> = only.split(',').map(str::trim).collect();
                for id in &wanted {
                    if !results.iter().any(|r| r.check_id == *id) {
                        return Err(anyhow!("unknown check `{id}`"));
                    }
                }
                results.retain(|r| wanted.contains(&r.check_id));
            }
            let failed = results.iter().any(|r| r.status == CheckStatus::Fail);
            println!(
                "{}",
                to_canonical_string(&checks_json_timed(&results)).trim_end()
            );
            Ok(if failed {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::ExportDot(args) => {
            let input = read_input(&args.file)?;
            let selector = XSelector::parse(&args.x);
            let built =
                build_context(&input, &selector, args.dual, &caps).map_err(|e| anyhow!("{e}"))?;
            let text = if args.specialization {
                let cc = CheckContext::new(&built.ctx, 0);
                let labels: Vec<String> = built
                    .ctx
                    .points()
                    .iter()
                    .map(|&p| built.ctx.lattice().label(p).to_string())
                    .collect();
                dot::specialization(&cc.tcl, &labels)
            } else {
                dot::lattice_hasse(built.ctx.lattice())
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { action } => match action {
            CorpusAction::Run {
                dir,
                jobs,
                seed,
                out,
            } => {
                let run = run_corpus(&dir, jobs, seed, &caps)
                    .with_context(|| format!("reading corpus {}", dir.display()))?;
                emit(out.as_ref(), &to_canonical_string(&run.to_json()))?;
                Ok(if run.failed() {
                    ExitCode::FAILURE
                } else {
                    ExitCode::SUCCESS
                })
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("latspec: {e:#}");
            ExitCode::from(2)
        }
    }
}
