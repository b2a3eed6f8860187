use clap::{Args, Parser, Subcommand};
use panelbreak::error::{CliError, EXIT_OK};
use panelbreak::ingest::write_long_csv;
use panelbreak::pipeline::{run_pipeline, write_bundle, Stage};
use panelbreak::render;
use panelbreak::RunConfig;
use panelbreak_core::synth::{generate, DgpKind, DgpSpec, VARIABLES};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "panelbreak", version, about = "Panel cointegration and VECM analysis with a policy break")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every stage and write the full report bundle.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Overrides `output_dir` from the config.
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
    /// Write a synthetic panel in long CSV format.
    Synth {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 106)]
        entities: usize,
        #[arg(long, default_value_t = 43)]
        years: usize,
    },
    /// Load and prepare the panel and print the variable summary.
    Ingest(StageArgs),
    /// Panel unit-root tests in levels and differences.
    UnitRoot(StageArgs),
    /// Pedroni residual cointegration tests.
    Cointegration(StageArgs),
    /// VECM estimates.
    Vecm(StageArgs),
    /// Variance decomposition, impulse responses and companion roots.
    Dynamics(StageArgs),
    /// Granger, serial correlation, heteroskedasticity and slope homogeneity tests.
    Diagnostics(StageArgs),
}

#[derive(Args)]
struct StageArgs {
    #[arg(long)]
    config: PathBuf,
    /// Printed format: csv, markdown or json.
    #[arg(long, default_value = "markdown")]
    format: String,
    /// Also write the stage's artifacts here.
    #[arg(long)]
    output_dir: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Run { config, output_dir } => {
            let cfg = RunConfig::load(&config)?;
            let dir = output_dir.unwrap_or_else(|| cfg.output_dir.clone());
            let bundle = run_pipeline(&cfg, Stage::Diagnostics);
            write_bundle(&bundle, &dir, &cfg.formats)?;
            match &bundle.failure {
                Some(e) => eprintln!("error: {e} (partial bundle in {})", dir.display()),
                None => eprintln!("wrote {} artifacts to {}", bundle.artifacts.len() + 1, dir.display()),
            }
            Ok(bundle.exit_code())
        }
        Command::Synth { kind, seed, out, entities, years } => {
            let kind = DgpKind::parse(&kind).ok_or_else(|| CliError::Config(format!("unknown kind `{kind}`")))?;
            if entities == 0 || years == 0 {
                return Err(CliError::Config("entities and years must be positive".into()));
            }
            let p = generate(&DgpSpec::new(kind, entities, years, seed))?;
            let file = std::fs::File::create(&out).map_err(|e| CliError::io(&out, e))?;
            write_long_csv(&p, &VARIABLES, std::io::BufWriter::new(file))?;
            Ok(EXIT_OK)
        }
        Command::Ingest(a) => stage(Stage::Ingest, a),
        Command::UnitRoot(a) => stage(Stage::UnitRoot, a),
        Command::Cointegration(a) => stage(Stage::Cointegration, a),
        Command::Vecm(a) => stage(Stage::Vecm, a),
        Command::Dynamics(a) => stage(Stage::Dynamics, a),
        Command::Diagnostics(a) => stage(Stage::Diagnostics, a),
    }
}

/// Runs the pipeline through `target` and prints only that stage's artifacts.
fn stage(target: Stage, args: StageArgs) -> Result<i32, CliError> {
    if !panelbreak::config::FORMATS.contains(&args.format.as_str()) {
        return Err(CliError::Config(format!("unknown format `{}`", args.format)));
    }
    let cfg = RunConfig::load(&args.config)?;
    let bundle = run_pipeline(&cfg, target);
    if let Some(e) = bundle.failure {
        return Err(e);
    }
    let own: Vec<_> = bundle
        .artifacts
        .iter()
        .filter(|a| target.artifacts().contains(&a.id.as_str()))
        .collect();
    for a in &own {
        print!("{}", render::render(a, &args.format));
    }
    if let Some(dir) = args.output_dir {
        std::fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        for a in own {
            render::write_artifact(&dir, a, &cfg.formats)?;
        }
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
