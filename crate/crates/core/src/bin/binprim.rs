use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use binprim::interpretations::{
    enumerate_interpretations, is_disjoint_over, is_extendable, square_interpretations,
};
use binprim::ls_equation::{classify_any, instantiate_family, ls_check};
use binprim::oracle::{brute_ls_solutions, brute_witnesses, enum_codes, enum_words, EnumConfig};
use binprim::primpres::decide;
use binprim::verify::{run, Suite};
use binprim::words::primitive_root;
use binprim::{BinaryCode, Error, LsFamily, Word};

/// Primitivity preserving binary codes.
#[derive(Parser)]
#[command(name = "binprim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Primitive root of a word.
    Prim { word: String },
    /// Decide whether {x, y} preserves primitivity.
    Witness { x: String, y: String },
    /// Interpretations of u by the remaining words, or of x·x with --square.
    Interpret {
        #[arg(long)]
        square: bool,
        #[arg(long)]
        disjoint: bool,
        #[arg(long)]
        extendable: bool,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Solve x^j y^k = z^l, or instantiate a family with --family.
    Ls {
        #[arg(long, value_name = "SPEC")]
        family: Option<String>,
        args: Vec<String>,
    },
    /// Run an exhaustive verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_list: Option<usize>,
        #[arg(long)]
        max_exp: Option<usize>,
        /// Restrict the theorem1 suite to one code, as `x,y`.
        #[arg(long)]
        code: Option<String>,
    },
    /// Print an enumeration, one item per line.
    Dump {
        what: DumpKind,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        max_list: usize,
        #[arg(long, default_value_t = 3)]
        max_exp: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpKind {
    Words,
    Codes,
    Witnesses,
    Ls,
}

const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;

type Outcome = std::result::Result<ExitCode, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Prim { word } => prim(&word),
        Command::Witness { x, y } => witness(&x, &y),
        Command::Interpret { square, disjoint, extendable, words } => {
            interpret(&words, square, disjoint, extendable)
        }
        Command::Ls { family, args } => ls(family.as_deref(), &args),
        Command::Verify { suite, max_len, max_list, max_exp, code } => {
            verify(&suite, max_len, max_list, max_exp, code.as_deref())
        }
        Command::Dump { what, max_len, max_list, max_exp } => dump(what, max_len, max_list, max_exp),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("binprim: {e}");
        ExitCode::from(USAGE)
    })
}

fn word(s: &str) -> Result<Word, Error> {
    let w: Word = s.parse()?;
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w)
}

fn number(s: &str) -> Result<usize, Error> {
    s.parse().map_err(|_| Error::Parse(format!("expected a number, got {s:?}")))
}

fn prim(w: &str) -> Outcome {
    let root = primitive_root(&word(w)?)?;
    if root.exponent == 1 {
        println!("primitive");
    } else {
        println!("imprimitive root={} exp={}", root.root, root.exponent);
    }
    Ok(ExitCode::SUCCESS)
}

fn witness(x: &str, y: &str) -> Outcome {
    let code = BinaryCode::new(word(x)?, word(y)?)?;
    let report = decide(&code);
    println!("{report}");
    Ok(if report.preserving { ExitCode::from(NEGATIVE) } else { ExitCode::SUCCESS })
}

fn interpret(args: &[String], square: bool, disjoint: bool, extendable: bool) -> Outcome {
    let words = args.iter().map(|a| word(a)).collect::<Result<Vec<_>, _>>()?;
    let found = if square {
        let [x, y] = words.as_slice() else {
            return Err(Error::Parse("--square takes exactly two words x y".into()));
        };
        square_interpretations(x, y)?
    } else {
        let (u, gens) = words.split_first().expect("clap requires one word");
        if gens.is_empty() {
            return Err(Error::Parse("expected u followed by at least one generator".into()));
        }
        let mut kept = Vec::new();
        for i in enumerate_interpretations(u, gens)? {
            if disjoint && !is_disjoint_over(&i, gens)? {
                continue;
            }
            if extendable && !is_extendable(&i, gens)? {
                continue;
            }
            kept.push(i);
        }
        kept
    };
    for i in &found {
        println!("{i}");
    }
    Ok(if found.is_empty() { ExitCode::from(NEGATIVE) } else { ExitCode::SUCCESS })
}

fn ls(family: Option<&str>, args: &[String]) -> Outcome {
    if let Some(spec) = family {
        let f: LsFamily = spec.parse()?;
        let (j, k, ell) = match (args, f.implied_exponents()) {
            ([], Some(e)) => e,
            ([j, k, l], _) => (number(j)?, number(k)?, number(l)?),
            _ => return Err(Error::Parse("expected exponents j k l".into())),
        };
        println!("{}", instantiate_family(&f, j, k, ell)?);
        return Ok(ExitCode::SUCCESS);
    }
    let [x, y, j, k] = args else {
        return Err(Error::Parse("expected x y j k".into()));
    };
    let (j, k) = (number(j)?, number(k)?);
    if j == 0 || k == 0 {
        return Err(Error::PreconditionViolated("need j, k >= 1"));
    }
    match ls_check(&word(x)?, &word(y)?, j, k)? {
        Some(sol) => {
            let (f, mirrored) = classify_any(&sol)?;
            let marker = if mirrored { " mirrored=1" } else { "" };
            println!("{sol} family={f}{marker}");
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("primitive product");
            Ok(ExitCode::from(NEGATIVE))
        }
    }
}

fn verify(
    suite: &str,
    max_len: Option<usize>,
    max_list: Option<usize>,
    max_exp: Option<usize>,
    code: Option<&str>,
) -> Outcome {
    let suite: Suite = suite.parse()?;
    let mut bounds = suite.default_bounds();
    bounds.max_len = max_len.unwrap_or(bounds.max_len);
    bounds.max_list = max_list.unwrap_or(bounds.max_list);
    bounds.max_exp = max_exp.unwrap_or(bounds.max_exp);
    bounds.code = code.map(str::parse).transpose()?;
    let tally = run(suite, &bounds);
    println!("{tally}");
    Ok(if tally.passed() { ExitCode::SUCCESS } else { ExitCode::from(NEGATIVE) })
}

fn dump(what: DumpKind, max_len: usize, max_list: usize, max_exp: usize) -> Outcome {
    let cfg = EnumConfig::new(2, max_len, max_list)?;
    match what {
        DumpKind::Words => enum_words(&cfg).iter().for_each(|w| println!("{w}")),
        DumpKind::Codes => enum_codes(&cfg).iter().for_each(|c| println!("{c}")),
        DumpKind::Witnesses => {
            for code in enum_codes(&cfg) {
                for ws in brute_witnesses(&code, max_list) {
                    println!("{code} {ws}");
                }
            }
        }
        DumpKind::Ls => brute_ls_solutions(&cfg, max_exp)
            .iter()
            .for_each(|s| println!("{}", s.to_record())),
    }
    Ok(ExitCode::SUCCESS)
}
