use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use posetres::completion::{self, CompletionLattice};
use posetres::{builtins, dsl, format, residuation, search, ComplementedPoset, Structure, Verdict};

/// Finite posets with complementation: properties, residuation, completion,
/// identities and small-model search.
#[derive(Parser)]
#[command(name = "posetres", version)]
struct Cli {
    /// Worker threads (results do not depend on this).
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a named property; exit 1 with a witness if it fails.
    Check {
        file: PathBuf,
        #[arg(long, short)]
        property: String,
    },
    /// Print residuation tables (term operations, or M/R with --operator).
    Residuate {
        file: PathBuf,
        #[arg(long)]
        operator: bool,
    },
    /// Emit the Dedekind-MacNeille completion.
    Complete {
        file: PathBuf,
        /// Only the sublattice generated by the principal ideals.
        #[arg(long)]
        d0: bool,
        /// Extend the complementation as A* = L(A').
        #[arg(long)]
        star: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Evaluate an identity.
    Eval(EvalArgs),
    /// Direct product of two structures.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, short)]
        output: PathBuf,
    },
    /// Find the first small structure with the required properties.
    Search {
        /// Largest size tried.
        #[arg(long)]
        size: usize,
        /// `property` or `property=true|false`; repeatable.
        #[arg(long = "require", value_name = "PROP[=BOOL]")]
        require: Vec<String>,
        #[arg(long)]
        complemented: bool,
        #[arg(long)]
        bounded: bool,
    },
    /// Emit a built-in structure.
    Builtin {
        name: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct EvalFormula {
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    file: PathBuf,
    #[command(flatten)]
    which: EvalFormula,
}

/// Reads a structure file; `builtin:NAME` loads a built-in instead.
fn load(path: &Path) -> Result<Structure> {
    if let Some(name) = path.to_str().and_then(|s| s.strip_prefix("builtin:")) {
        return builtins::by_name(name).ok_or_else(|| anyhow!("unknown built-in `{name}`"));
    }
    let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    format::parse(&src).with_context(|| format!("{}", path.display()))
}

fn complemented<'a>(s: &'a Structure, what: &str) -> Result<&'a ComplementedPoset> {
    s.complemented()
        .ok_or_else(|| anyhow!("{what} needs a complementation (add a `complement:` section)"))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report(v: &Verdict, s: &Structure) -> ExitCode {
    match v {
        Verdict::Holds => {
            println!("holds");
            ExitCode::SUCCESS
        }
        Verdict::Fails(w) => {
            println!("fails: {}", w.note);
            let rendered = w.render(s.poset());
            if !rendered.is_empty() {
                println!("{rendered}");
            }
            ExitCode::from(1)
        }
    }
}

fn render_completion(c: &CompletionLattice) -> String {
    let p = c.base();
    let order = c.order();
    let mut out = String::new();
    let _ = writeln!(out, "# closed sets");
    for i in 0..c.len() {
        let _ = writeln!(out, "# {} = {}", order.label(i), p.render_set(c.set(i)));
    }
    let emb: Vec<String> = (0..p.len())
        .map(|x| format!("{}->{}", p.label(x), order.label(c.embedding()[x])))
        .collect();
    let _ = writeln!(out, "# embedding: {}", emb.join(" "));
    let s = match c.as_complemented() {
        Some(cp) => Structure::Complemented(cp),
        None => Structure::Plain(order.clone()),
    };
    out.push_str(&format::render(&s));
    out
}

fn parse_requirement(r: &str) -> Result<(String, bool)> {
    let (name, value) = match r.split_once('=') {
        Some((n, v)) => (n, v),
        None => (r, "true"),
    };
    let value = match value {
        "true" | "yes" | "1" => true,
        "false" | "no" | "0" => false,
        other => bail!("`{other}` is not a boolean in --require {r}"),
    };
    Ok((name.to_string(), value))
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(k) = cli.jobs {
        if k == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()?;
    }
    match cli.command {
        Command::Check { file, property } => {
            let s = load(&file)?;
            let v = search::check_property(&property, &s)?;
            Ok(report(&v, &s))
        }
        Command::Residuate { file, operator } => {
            let s = load(&file)?;
            let cp = complemented(&s, "residuation")?;
            let text = if operator {
                residuation::render_operator_tables(cp)
            } else {
                residuation::render_term_tables(cp)?
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Complete {
            file,
            d0,
            star,
            output,
        } => {
            let s = load(&file)?;
            let mut c = completion::dm_completion(s.poset());
            if d0 {
                c = completion::d0_sublattice(&c);
            }
            if star {
                let cp = complemented(&s, "--star")?;
                c = completion::star_extension(&c, cp)?;
            }
            emit(&render_completion(&c), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval(args) => {
            let s = load(&args.file)?;
            let f = match (args.which.formula, args.which.builtin) {
                (Some(src), _) => dsl::parse(&src)?,
                (None, Some(name)) => dsl::builtin(&name).ok_or_else(|| {
                    let names: Vec<&str> = dsl::BUILTINS.iter().map(|(n, _)| *n).collect();
                    anyhow!(
                        "unknown builtin formula `{name}` (known: {})",
                        names.join(", ")
                    )
                })?,
                (None, None) => unreachable!("clap requires one"),
            };
            let v = dsl::evaluate(&f, &s)?;
            Ok(report(&v, &s))
        }
        Command::Product {
            first,
            second,
            output,
        } => {
            let a = load(&first)?;
            let b = load(&second)?;
            emit(&format::render(&a.direct_product(&b)), Some(&output))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Search {
            size,
            require,
            complemented,
            bounded,
        } => {
            let reqs = require
                .iter()
                .map(|r| parse_requirement(r))
                .collect::<Result<Vec<_>>>()?;
            let constraints: Vec<(&str, bool)> =
                reqs.iter().map(|(n, b)| (n.as_str(), *b)).collect();
            let opts = search::SearchOptions {
                max_n: size,
                require_bounded: bounded,
                complemented,
            };
            match search::find_witness(&constraints, opts)? {
                Some(s) => {
                    print!("{}", format::render(&s));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!("no witness with at most {size} elements");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Builtin { name, output } => {
            let s = builtins::by_name(&name).ok_or_else(|| {
                anyhow!(
                    "unknown built-in `{name}` (known: {})",
                    builtins::NAMES.join(", ")
                )
            })?;
            emit(&format::render(&s), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
