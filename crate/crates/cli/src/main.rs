use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use skeindaha::cluster::{loop30, parse_script, Seed};
use skeindaha::daha::{e_sided, word_eval, GenPoly};
use skeindaha::skein::{curve_operator, CurveSpec};
use skeindaha::{Error, Operator, Report, Suite};

#[derive(Parser)]
#[command(name = "skeindaha", version, about = "Exact checks for the skein algebra of the twice-punctured torus")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON artifact to this file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Qdiff,
    Daha,
    Skein,
    Cluster,
    Pi1,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Qdiff => Suite::Qdiff,
            SuiteArg::Daha => Suite::Daha,
            SuiteArg::Skein => Suite::Skein,
            SuiteArg::Cluster => Suite::Cluster,
            SuiteArg::Pi1 => Suite::Pi1,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Normal,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Evaluate a generator word such as `T0 T1^-1 X` in the polynomial representation.
    EvalWord {
        #[arg(long)]
        word: String,
        /// Multiply by the idempotent on the right.
        #[arg(long)]
        e_sided: bool,
    },
    /// Operator image of a curve, e.g. `--base k2 --twists 1^2`.
    EvalCurve {
        #[arg(long)]
        base: String,
        #[arg(long, default_value = "")]
        twists: String,
        #[arg(long, value_enum, default_value = "normal")]
        form: Form,
    },
    /// Apply a mutation script such as `2,3,s(3,5),1` to a seed.
    Mutate {
        #[arg(long)]
        script: String,
        /// Seed JSON file, or `initial`.
        #[arg(long, default_value = "initial")]
        seed: String,
    },
    /// Run the length-30 mutation loop checks.
    Loop30,
}

enum Outcome {
    Report(Report),
    Operator(Operator, Form),
    Seed(Box<Seed>),
}

fn run(cmd: Command) -> skeindaha::Result<Outcome> {
    Ok(match cmd {
        Command::Verify { suite } => Outcome::Report(Suite::from(suite).run()),
        Command::EvalWord { word, e_sided: e } => {
            let op = word_eval(&GenPoly::parse(&word)?);
            Outcome::Operator(if e { e_sided(&op) } else { op }, Form::Normal)
        }
        Command::EvalCurve { base, twists, form } => Outcome::Operator(curve_operator(&CurveSpec::parse(&base, &twists)?)?, form),
        Command::Mutate { script, seed } => {
            let start = if seed == "initial" {
                Seed::initial()
            } else {
                let text = std::fs::read_to_string(&seed).map_err(|e| Error::Json(format!("{seed}: {e}")))?;
                let v: Value = serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))?;
                Seed::from_json(&v)?
            };
            Outcome::Seed(Box::new(start.run(&parse_script(&script)?)?))
        }
        Command::Loop30 => Outcome::Report(loop30()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(cli.cmd) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (artifact, text, ok) = match outcome {
        Outcome::Report(r) => {
            let r = if cli.json { r.without_timing() } else { r };
            (r.to_json(), r.render_table(), r.all_pass())
        }
        Outcome::Operator(op, form) => {
            let j = op.to_json();
            let text = match form {
                Form::Normal => op.render(),
                Form::Json => serde_json::to_string_pretty(&j).expect("json"),
                Form::Latex => op.to_latex(),
            };
            (j, text, true)
        }
        Outcome::Seed(s) => {
            let j = s.to_json();
            (j.clone(), serde_json::to_string_pretty(&j).expect("json"), true)
        }
    };
    let pretty = serde_json::to_string_pretty(&artifact).expect("json");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{pretty}\n")) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let _ = writeln!(std::io::stdout(), "{}", if cli.json { pretty } else { text });
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
