use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use artin_core::freegroup::DEFAULT_MAX_WORD_LEN;
use artin_core::presenter::{relators_from_tree_with_limit, relators_small3_with_limit};
use artin_core::{
    admits_positive, classify_small3, enumerate_positive, positivity_slack, presets, ArtinPresentation,
    BigAbelianInvariants, EnumMode, EnumOptions, Error, FramedTwistTree, NegativeMode,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod svg;

/// Artin presentations, framed twist trees and positivity checks.
#[derive(Parser)]
#[command(name = "artin", version, about)]
struct Cli {
    /// Allow at most one negative block in a twist tree.
    #[arg(long, global = true)]
    strict_negatives: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Artin condition and positivity of a presentation.
    Verify { file: Option<PathBuf> },
    /// Compose two presentations, S then R.
    Compose {
        s: PathBuf,
        r: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Which composition rule to apply.
        #[arg(long, value_enum, default_value_t = Rule::Conjugate)]
        rule: Rule,
    },
    /// Relators of a framed twist tree.
    Gen {
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Relators of the three-chord family.
    GenSmall3 {
        #[command(flatten)]
        params: Small3,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide the three-chord family.
    Classify3 {
        #[command(flatten)]
        params: Small3,
    },
    /// Decide whether a framed twist tree gives a positive presentation.
    Admits { file: Option<PathBuf> },
    /// Exponent of the trailing generator power in each relator.
    Slack { file: Option<PathBuf> },
    /// List every positive Artin presentation up to a total length.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        /// Test every tuple instead of solving for the last relator.
        #[arg(long)]
        reference: bool,
    },
    /// Invariant factors of the first homology.
    Abelianize { file: Option<PathBuf> },
    /// Print a bundled input.
    Preset {
        name: String,
        /// For `compose-example`, print only one operand.
        #[arg(long, value_enum)]
        part: Option<Part>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a framed twist tree as SVG.
    Diagram {
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Small3 {
    #[arg(long, allow_negative_numbers = true)]
    e: i64,
    #[arg(long, allow_negative_numbers = true)]
    e1: i64,
    #[arg(long, allow_negative_numbers = true)]
    f1: i64,
    /// Framing as `M1,M2,M3`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_triple)]
    m: [i64; 3],
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    /// `s_i` followed by `r_i` with each `x_j` replaced by `s_j^-1 x_j s_j`.
    Conjugate,
    /// `r_i` with each `x_j` replaced by `s_j x_j s_j^-1`, followed by `s_i`.
    Action,
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    S,
    R,
}

fn parse_triple(s: &str) -> Result<[i64; 3], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<_, _>>()?;
    v.try_into()
        .map_err(|v: Vec<i64>| format!("expected 3 values, got {}", v.len()))
}

enum Failure {
    /// Bad invocation or environment, or unreadable files.
    Usage(String),
    Core {
        source: String,
        err: Error,
    },
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core {
                err: Error::ResourceLimit { .. },
                ..
            } => 4,
            Failure::Core { .. } => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Core { source, err } => match err {
                Error::Parse { .. } => format!("{source}:{err}"),
                _ if source.is_empty() => err.to_string(),
                _ => format!("{source}: {err}"),
            },
        }
    }
}

fn core(source: &str) -> impl Fn(Error) -> Failure + '_ {
    move |err| Failure::Core {
        source: source.to_string(),
        err,
    }
}

type Outcome = Result<bool, Failure>;

struct Limits {
    word: usize,
    enumeration: Option<usize>,
}

impl Limits {
    fn from_env() -> Result<Self, Failure> {
        Ok(Limits {
            word: env_usize("ARTIN_MAX_WORDLEN")?.unwrap_or(DEFAULT_MAX_WORD_LEN),
            enumeration: env_usize("ARTIN_MAX_ENUM")?,
        })
    }
}

fn env_usize(key: &str) -> Result<Option<usize>, Failure> {
    match std::env::var(key) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{key} must be a nonnegative integer, got `{v}`"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Failure::Usage(format!("{key}: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("artin: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits::from_env()?;
    let strict = cli.strict_negatives;
    match cli.command {
        Command::Verify { file } => {
            let (_, p) = read_presentation(file.as_deref(), &limits)?;
            let artin = p.verify_artin();
            emit(
                None,
                &format!("artin: {}\npositive: {}\n", yes_no(artin), yes_no(p.is_positive())),
            )?;
            Ok(artin)
        }
        Command::Compose { s, r, output, rule } => {
            let (sn, sp) = read_presentation(Some(&s), &limits)?;
            let (rn, rp) = read_presentation(Some(&r), &limits)?;
            if sp.n() != rp.n() {
                return Err(core(&format!("{sn}, {rn}"))(Error::LengthMismatch {
                    expected: sp.n(),
                    found: rp.n(),
                }));
            }
            let bound = composed_length_bound(&sp, &rp);
            if bound > limits.word as u128 {
                return Err(core("")(Error::ResourceLimit {
                    what: "composed relator length",
                    limit: limits.word,
                    requested: usize::try_from(bound).unwrap_or(usize::MAX),
                }));
            }
            let out = match rule {
                Rule::Conjugate => sp.compose(&rp),
                Rule::Action => sp.compose_action(&rp),
            }
            .map_err(core(""))?;
            emit(output.as_deref(), &out.to_string())?;
            Ok(true)
        }
        Command::Gen { file, output } => {
            let (name, ft) = read_tree(file.as_deref(), strict)?;
            let p = relators_from_tree_with_limit(&ft, limits.word).map_err(core(&name))?;
            emit(output.as_deref(), &p.to_string())?;
            Ok(true)
        }
        Command::GenSmall3 { params, output } => {
            let Small3 { e, e1, f1, m } = params;
            let p = relators_small3_with_limit(e, e1, f1, m, limits.word).map_err(core(""))?;
            emit(output.as_deref(), &p.to_string())?;
            Ok(true)
        }
        Command::Classify3 { params } => {
            let Small3 { e, e1, f1, m } = params;
            relators_small3_with_limit(e, e1, f1, m, limits.word).map_err(core(""))?;
            let v = classify_small3(e1, f1, e, m).map_err(core(""))?;
            emit(None, &v.to_string())?;
            Ok(v.admissible)
        }
        Command::Admits { file } => {
            let (name, ft) = read_tree(file.as_deref(), strict)?;
            relators_from_tree_with_limit(&ft, limits.word).map_err(core(&name))?;
            let v = admits_positive(&ft).map_err(core(&name))?;
            emit(None, &v.to_string())?;
            Ok(v.admissible)
        }
        Command::Slack { file } => {
            let (name, ft) = read_tree(file.as_deref(), strict)?;
            let slack = positivity_slack(&ft).map_err(core(&name))?;
            let text: String = slack.iter().map(|s| format!("{s}\n")).collect();
            emit(None, &text)?;
            Ok(true)
        }
        Command::Enumerate { n, max_len, reference } => {
            let opts = EnumOptions {
                mode: if reference {
                    EnumMode::Reference
                } else {
                    EnumMode::Pruned
                },
                max_len_limit: limits.enumeration,
            };
            let found = enumerate_positive(n, max_len, opts).map_err(core(""))?;
            let text = found.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
            emit(None, &text)?;
            Ok(true)
        }
        Command::Abelianize { file } => {
            let (_, p) = read_presentation(file.as_deref(), &limits)?;
            let ab: BigAbelianInvariants = p.abelianization();
            emit(None, &ab.to_string())?;
            Ok(true)
        }
        Command::Preset { name, part, output } => {
            let text = match (name.as_str(), part) {
                ("compose-example", Some(Part::S)) => presets::COMPOSE_S.to_string(),
                ("compose-example", Some(Part::R)) => presets::COMPOSE_R.to_string(),
                (_, Some(_)) => return Err(Failure::Usage("--part applies only to compose-example".into())),
                _ => presets::text(&name).ok_or_else(|| {
                    Failure::Usage(format!(
                        "unknown preset `{name}`; available: {}",
                        presets::NAMES.join(", ")
                    ))
                })?,
            };
            emit(output.as_deref(), &text)?;
            Ok(true)
        }
        Command::Diagram { file, output } => {
            let (name, ft) = read_tree(file.as_deref(), strict)?;
            ft.tree.validate(NegativeMode::Lax).map_err(core(&name))?;
            emit(output.as_deref(), &svg::render(&ft))?;
            Ok(true)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Longest relator `s_i r_i^s` can be before cancellation.
fn composed_length_bound(s: &ArtinPresentation, r: &ArtinPresentation) -> u128 {
    s.relators()
        .iter()
        .zip(r.relators())
        .map(|(si, ri)| {
            let expanded: u128 = ri
                .letters()
                .iter()
                .map(|l| 2 * s.relator(l.generator() as usize).len() as u128 + 1)
                .sum();
            si.len() as u128 + expanded
        })
        .max()
        .unwrap_or(0)
}

/// Contents and display name of a file, or of stdin for `None` and `-`.
fn read_input(path: Option<&Path>) -> Result<(String, String), Failure> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => {
            let name = p.display().to_string();
            let text = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{name}: {e}")))?;
            Ok((name, text))
        }
    }
}

fn read_stdin() -> Result<(String, String), Failure> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Usage(format!("<stdin>: {e}")))?;
    Ok(("<stdin>".to_string(), text))
}

fn read_presentation(path: Option<&Path>, limits: &Limits) -> Result<(String, ArtinPresentation), Failure> {
    let (name, text) = read_input(path)?;
    let p = ArtinPresentation::parse_with_limit(&text, limits.word).map_err(core(&name))?;
    Ok((name, p))
}

fn read_tree(path: Option<&Path>, strict: bool) -> Result<(String, FramedTwistTree), Failure> {
    let (name, text) = read_input(path)?;
    let ft = FramedTwistTree::parse(&text).map_err(core(&name))?;
    if strict {
        ft.tree.validate(NegativeMode::Strict).map_err(core(&name))?;
    }
    Ok((name, ft))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut out = io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                Ok(()) => Ok(()),
                // a closed pipe downstream is not our failure
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(Failure::Usage(format!("<stdout>: {e}"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples() {
        assert_eq!(parse_triple("1,0,-2"), Ok([1, 0, -2]));
        assert!(parse_triple("1,2").is_err());
        assert!(parse_triple("1,x,2").is_err());
    }

    #[test]
    fn composed_bound_covers_the_unreduced_product() {
        let (s, r) = presets::compose_example();
        let bound = composed_length_bound(&s, &r);
        let c = s.compose(&r).unwrap();
        assert!(c.relators().iter().all(|w| (w.len() as u128) <= bound));
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
