use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cmsym::FieldSpec;
use cmsym_cli::{CommandOutput, OutputFormat, RunConfig, CAPS_ENV, EXIT_INPUT};

#[derive(Parser)]
#[command(
    name = "cmsym",
    version,
    about = "Cohen-Macaulay tests for symbolic powers of Stanley-Reisner ideals"
)]
struct Cli {
    /// Coefficient field: `Q` or `Fp:<p>`.
    #[arg(long, global = true, default_value = "Q")]
    field: FieldSpec,
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true)]
    facet_cap: Option<usize>,
    #[arg(long, global = true)]
    labelling_cap: Option<usize>,
    /// Largest symbolic power listed by `classify`.
    #[arg(long, global = true, default_value_t = 3)]
    m_cap: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether I^(m), or every symbolic power, is Cohen-Macaulay.
    Check {
        complex: PathBuf,
        #[arg(short, long, conflicts_with = "all_m")]
        m: Option<u32>,
        #[arg(long)]
        all_m: bool,
    },
    /// Run the bundled examples against their stated verdicts.
    Demo,
    /// Decide Cohen-Macaulayness of an unmixed monomial ideal.
    Ideal { ideal: PathBuf },
    /// Strict system and incidence certificate of a facet subset (1-based indices).
    Certify {
        complex: PathBuf,
        #[arg(long)]
        gamma: String,
    },
    /// Structural profile of a complex.
    Classify { complex: PathBuf },
    /// Local cohomology table of an unmixed monomial ideal.
    Lcoh { ideal: PathBuf },
}

fn run(cli: Cli) -> anyhow::Result<CommandOutput> {
    let mut cfg = RunConfig {
        field: cli.field,
        m_cap: cli.m_cap,
        jobs: cli.jobs,
        output: if cli.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
        ..RunConfig::default()
    };
    if let Ok(spec) = std::env::var(CAPS_ENV) {
        cfg.apply_caps_spec(&spec)?;
    }
    if let Some(c) = cli.facet_cap {
        cfg.facet_cap = c;
    }
    if let Some(c) = cli.labelling_cap {
        cfg.labelling_cap = c;
    }
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    pool.install(|| match &cli.command {
        Command::Check { complex, m, all_m } => cmsym_cli::cmd_check(complex, *m, *all_m, &cfg),
        Command::Demo => cmsym_cli::cmd_demo(&cfg),
        Command::Ideal { ideal } => cmsym_cli::cmd_ideal(ideal, &cfg),
        Command::Certify { complex, gamma } => cmsym_cli::cmd_certify(complex, gamma, &cfg),
        Command::Classify { complex } => cmsym_cli::cmd_classify(complex, &cfg),
        Command::Lcoh { ideal } => cmsym_cli::cmd_lcoh(ideal, &cfg),
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
