use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::Parser;
use nhent::commands::{run, Command};
use nhent::config::{apply_override, unwrap_record, PolicyKind, RunConfig};
use nhent::CliError;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "nhent",
    version,
    about = "Entanglement of non-Hermitian free-fermion chains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON run configuration, or a previous run record to replay.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Override a config key, e.g. `--set cells=80` or `--set model.w=[2,0]`.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Payload destination (config key `out`); a `<out>.record.json` run record is written next to it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Branch policy for the entanglement entropy.
    #[arg(long, global = true, value_enum)]
    policy: Option<PolicyKind>,
}

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::IoFailure {
        path: path.display().to_string(),
        source,
    }
}

fn load(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut root = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
            unwrap_record(
                serde_json::from_str(&text)
                    .map_err(|e| CliError::ConfigInvalid(format!("{}: {e}", path.display())))?,
            )
        }
        None => Value::Object(Default::default()),
    };
    for s in &cli.overrides {
        apply_override(&mut root, s)?;
    }
    if let Some(p) = cli.policy {
        root["policy"] = serde_json::to_value(p).expect("policy serializes");
    }
    if let Some(out) = &cli.out {
        root["out"] = Value::String(out.display().to_string());
    }
    RunConfig::from_value(root)
}

fn unix_seconds() -> f64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0.0, |d| d.as_secs_f64())
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let cfg = load(cli)?;
    let started = unix_seconds();
    let clock = Instant::now();
    let result = run(cli.command, &cfg);
    let wall = clock.elapsed().as_secs_f64();
    let Some(path) = cfg.out.as_deref().map(Path::new) else {
        let out = result?;
        return std::io::stdout()
            .lock()
            .write_all(out.payload.as_bytes())
            .map_err(|e| io_err(Path::new("<stdout>"), e));
    };
    let mut record = json!({
        "tool": "nhent",
        "version": env!("CARGO_PKG_VERSION"),
        "command": cli.command.name(),
        "config": cfg,
        "started_unix_s": started,
        "wall_time_s": wall,
    });
    let outcome = match result {
        Ok(out) => {
            fs::write(path, &out.payload).map_err(|e| io_err(path, e))?;
            record["payload"] = json!(path.display().to_string());
            record["summary"] = out.summary;
            record["error"] = Value::Null;
            Ok(())
        }
        Err(e) => {
            record["error"] = json!({ "category": e.category(), "message": e.to_string() });
            Err(e)
        }
    };
    let mut rec_path = path.as_os_str().to_owned();
    rec_path.push(".record.json");
    let rec_path = PathBuf::from(rec_path);
    let text = serde_json::to_string_pretty(&record).expect("record serializes") + "\n";
    fs::write(&rec_path, text).map_err(|e| io_err(&rec_path, e))?;
    outcome
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!(
                "{}",
                json!({ "error": e.category(), "message": e.to_string() })
            );
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
