use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use idealkit_cli::commands::run_command;
use idealkit_cli::corpus::LemmaId;
use idealkit_cli::input::{Overrides, SessionInput};
use idealkit_cli::lemmas::verify_lemma;
use idealkit_cli::report::{render_bundle, Format};
use idealkit_cli::{configure_threads, parse_field, parse_order, CliError};

#[derive(Parser)]
#[command(name = "idealkit", version, about = "Exact ideal computations and lemma certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the certificate bundle of an embedded lemma.
    Verify {
        /// 2, 3, 4 or huneke
        #[arg(long)]
        lemma: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// q or fp:<p>
        #[arg(long)]
        field: Option<String>,
    },
    /// Execute a command on the objects of a session file.
    Run {
        file: String,
        command: String,
        #[arg(allow_hyphen_values = true, trailing_var_arg = true)]
        args: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// lex or degrevlex
        #[arg(long)]
        order: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<bool, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Verify { lemma, format, field } => {
            let id: LemmaId = lemma.parse()?;
            let overrides = Overrides {
                field: field.as_deref().map(parse_field).transpose()?,
                order: None,
            };
            let bundle = verify_lemma(id, &overrides)?;
            print!("{}", render_bundle(&bundle, format.into()));
            Ok(bundle.all_verified())
        }
        Command::Run {
            file,
            command,
            args,
            format,
            order,
        } => {
            let text = std::fs::read_to_string(&file).map_err(|source| CliError::Io {
                path: file.clone(),
                source,
            })?;
            let overrides = Overrides {
                field: None,
                order: order.as_deref().map(parse_order).transpose()?,
            };
            let session = SessionInput::parse_with(&text, &overrides)?;
            let out = run_command(&session, &command, &args)?;
            print!("{}", out.render(&command, format.into()));
            Ok(out.success())
        }
    }
}
