use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use redotted::cli::commands::{parse_block, parse_word};
use redotted::cli::{run, Command, FieldChoice, Options};

#[derive(Parser)]
#[command(
    name = "redotted",
    version,
    about = "Exact computations with the redotted Webster algebra W(n,1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Number of red strands.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Degree cap for truncated computations.
    #[arg(long)]
    cap: Option<i64>,
    /// Coefficient field: Q or Fp:p.
    #[arg(long, default_value = "Q")]
    field: FieldChoice,
    /// Seed for randomized steps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Human-readable output.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonical block form of an expression.
    NormalForm {
        #[command(flatten)]
        common: Common,
        /// Expression such as "psi[2] ; psi[2] ; e_2".
        #[arg(long)]
        expr: String,
        /// Thick position for E1, E2.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Graded dimension of a block e(a) W e(b).
    Gdim {
        #[command(flatten)]
        common: Common,
        /// Block as a,b.
        #[arg(long, value_parser = parse_block)]
        block: Option<(usize, usize)>,
    },
    /// Center of W(n,1).
    Center {
        #[command(flatten)]
        common: Common,
    },
    /// Relation suite of W(n,1) and the embeddings rho_p.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Restrict the rho checks to one thick position.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Hochschild cohomology of A_n^!.
    Hh {
        #[command(flatten)]
        common: Common,
    },
    /// Rouquier complex of a braid word.
    Braid {
        #[command(flatten)]
        common: Common,
        /// Braid word such as "1 2 1" or "1 -2".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Word to compare with; defaults to one braid move applied to --word.
        #[arg(long, allow_hyphen_values = true)]
        compare: Option<String>,
    },
    /// Burau matrices on K_0.
    Burau {
        #[command(flatten)]
        common: Common,
        /// Braid word whose matrix is printed.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Singular Soergel bimodule tables.
    SoergelTable {
        #[command(flatten)]
        common: Common,
    },
}

fn options(c: &Common) -> Options {
    let mut o = Options::new(c.n);
    o.cap = c.cap;
    o.field = c.field;
    o.seed = c.seed;
    o
}

fn words(text: Option<&str>) -> Result<Option<Vec<i64>>, ExitCode> {
    text.map(parse_word).transpose().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, common, opts) = match cli.command {
        Cmd::NormalForm { common, expr, p } => {
            let mut o = options(&common);
            o.expr = Some(expr);
            o.p = p;
            (Command::NormalForm, common, o)
        }
        Cmd::Gdim { common, block } => {
            let mut o = options(&common);
            o.block = block;
            (Command::Gdim, common, o)
        }
        Cmd::Center { common } => (Command::Center, common.clone(), options(&common)),
        Cmd::Verify { common, p } => {
            let mut o = options(&common);
            o.p = p;
            (Command::Verify, common, o)
        }
        Cmd::Hh { common } => (Command::Hh, common.clone(), options(&common)),
        Cmd::Braid {
            common,
            word,
            compare,
        } => {
            let mut o = options(&common);
            o.word = match words(Some(&word)) {
                Ok(w) => w,
                Err(code) => return code,
            };
            o.compare = match words(compare.as_deref()) {
                Ok(w) => w,
                Err(code) => return code,
            };
            (Command::Braid, common, o)
        }
        Cmd::Burau { common, word } => {
            let mut o = options(&common);
            o.word = match words(word.as_deref()) {
                Ok(w) => w,
                Err(code) => return code,
            };
            (Command::Burau, common, o)
        }
        Cmd::SoergelTable { common } => (Command::SoergelTable, common.clone(), options(&common)),
    };
    match run(cmd, &opts) {
        Ok(out) => {
            let text = if common.pretty {
                let check = &out.json["paper_check"];
                format!(
                    "{}: {}\nscope: {}\n{}",
                    if out.passed { "PASS" } else { "FAIL" },
                    check["statement"].as_str().unwrap_or(""),
                    check["scope"].as_str().unwrap_or(""),
                    serde_json::to_string_pretty(&out.json["result"])
                        .expect("JSON values serialize")
                )
            } else {
                serde_json::to_string(&out.json).expect("JSON values serialize")
            };
            // A closed pipe on stdout is not an error of the computation.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
