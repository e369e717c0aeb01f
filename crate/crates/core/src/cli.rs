//! The `sgrp` command line: JSON in, JSON reports out.
//!
//! Exit codes: 0 when the property holds or the command succeeded, 1 when it
//! fails (a witness is reported), 2 when the step budget runs out, 3 on bad
//! input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::alphabet::GeneratingMap;
use crate::analysis::{
    check_absorption, check_tower_lsc, is_equidivisible, is_kr_cover_with, is_letter_super_cancellative,
    is_v_morphism, tower_coherence, AnalysisError,
};
use crate::budget::Budget;
use crate::cayley::{DotOptions, TwoSidedCayleyGraph};
use crate::freeprod::{normal_form, separate, truncated_free_product, Separation};
use crate::identity::Identity;
use crate::json::{form_from_json, parse_semigroup, ExpansionFile, Loaded, SemigroupFile};
use crate::kr::{compare_with_oracle, kr_expand, kr_tower, KrError};
use crate::semigroup::FiniteSemigroup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sgrp", version, about = "Finite semigroups and two-sided Karnofsky-Rhodes expansions")]
pub struct Cli {
    /// Omit timing from reports so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_meta: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, idempotents, Green's classes and the minimal ideal.
    Info { file: PathBuf },
    /// Compute the expansion of a generating map.
    Kr {
        file: PathBuf,
        #[command(flatten)]
        gens: GensArg,
        /// Write the two-sided Cayley graph as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Cross-check against brute-force enumeration of words up to this length.
        #[arg(long, value_name = "L")]
        oracle: Option<usize>,
        /// Write the expansion JSON here instead of embedding it in the report.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = Budget::DEFAULT_STEPS, value_parser = positive)]
        budget: u64,
    },
    /// Iterate the expansion and check the connecting maps.
    Tower {
        file: PathBuf,
        #[command(flatten)]
        gens: GensArg,
        /// Number of expansion steps.
        #[arg(short = 'n', default_value_t = 2)]
        depth: usize,
        /// Letter whose ω-power should absorb every word at every level.
        #[arg(long, value_name = "LETTER")]
        absorb: Option<String>,
        /// Maximum word length for the absorption and cancellativity probes.
        #[arg(short = 'L', default_value_t = 6, value_parser = positive_usize)]
        max_len: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_STEPS, value_parser = positive)]
        budget: u64,
    },
    /// Decide a property: equidiv, krcover, lsc, or identity EQN.
    Check {
        property: Property,
        /// The equation (identity only), then the input file.
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        #[command(flatten)]
        gens: GensArg,
        #[arg(long, default_value_t = Budget::DEFAULT_STEPS, value_parser = positive)]
        budget: u64,
    },
    /// Truncated free product of the given factors.
    Freeprod {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Maximum number of alternation blocks.
        #[arg(long, default_value_t = 4, value_parser = positive_usize)]
        cap: usize,
        /// Two words as JSON arrays of [factor, element] pairs.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        separate: Option<Vec<String>>,
        /// Write the product in the semigroup JSON format here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Two-sided Cayley graph as DOT, transition edges bold.
    Dot {
        file: PathBuf,
        #[command(flatten)]
        gens: GensArg,
        /// Keep only vertices on some path of a word.
        #[arg(long)]
        only_reachable: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Equidiv,
    Krcover,
    Lsc,
    Identity,
}

#[derive(Debug, clap::Args)]
pub struct GensArg {
    /// Generating map as `letter=element,...`; elements by name or index.
    /// Defaults to the file's generators, then to every element.
    #[arg(long, value_name = "MAP")]
    gens: Option<String>,
}

fn positive(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_usize(s: &str) -> Result<usize, String> {
    positive(s).map(|n| n as usize)
}

/// A failed command: message and exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Self { code: EXIT_INPUT, message: message.to_string() }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        let code = if e.is_budget() { EXIT_BUDGET } else { EXIT_INPUT };
        Self { code, message: e.to_string() }
    }
}

impl From<KrError> for Failure {
    fn from(e: KrError) -> Self {
        AnalysisError::from(e).into()
    }
}

/// What a command produced.
enum Output {
    Report(Value, i32),
    Text(String),
}

struct Input {
    loaded: Loaded,
    sha256: String,
}

fn read_input(path: &Path) -> Result<Input, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| Failure::input(format!("{} is not UTF-8", path.display())))?;
    let loaded = parse_semigroup(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok(Input { loaded, sha256 })
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

/// `a=0,b=g`: letters in the order given, targets by name first, then index.
fn parse_gens(text: &str, s: &FiniteSemigroup) -> Result<GeneratingMap, Failure> {
    let mut letters = Vec::new();
    let mut targets = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (letter, target) =
            part.split_once('=').ok_or_else(|| Failure::input(format!("generator {part:?} is not letter=element")))?;
        let target = target.trim();
        let x = s
            .element_by_name(target)
            .or_else(|| target.parse().ok().filter(|&x: &usize| x < s.order()))
            .ok_or_else(|| Failure::input(format!("unknown element {target:?}")))?;
        letters.push(letter.trim().to_string());
        targets.push(x);
    }
    GeneratingMap::new(s, letters, targets).map_err(Failure::input)
}

fn generating_map(input: &Input, gens: &GensArg) -> Result<GeneratingMap, Failure> {
    match &gens.gens {
        Some(text) => parse_gens(text, &input.loaded.semigroup),
        None => Ok(input.loaded.generating_map()),
    }
}

fn names(s: &FiniteSemigroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.name(x)).collect()
}

fn cmd_info(input: &Input) -> Output {
    let s = &input.loaded.semigroup;
    let g = s.greens();
    let classes = |cs: &Vec<Vec<usize>>| cs.iter().map(|c| names(s, c)).collect::<Vec<_>>();
    let j_classes: Vec<Value> = g
        .j_classes_top_down()
        .iter()
        .map(|&j| json!({ "elements": names(s, &g.j_classes[j]), "regular": g.j_regular[j] }))
        .collect();
    let report = json!({
        "command": "info",
        "input_sha256": input.sha256,
        "order": s.order(),
        "names": names(s, &s.elements().collect::<Vec<_>>()),
        "idempotents": names(s, &s.idempotents()),
        "commutative": s.is_commutative(),
        "r_classes": classes(&g.r_classes),
        "l_classes": classes(&g.l_classes),
        "h_classes": classes(&g.h_classes),
        "j_classes": j_classes,
        "minimal_ideal": names(s, &s.minimal_ideal()),
        "completely_simple": s.is_completely_simple(),
    });
    Output::Report(report, EXIT_OK)
}

fn cmd_kr(
    input: &Input,
    gens: &GensArg,
    dot: Option<&Path>,
    oracle: Option<usize>,
    out: Option<&Path>,
    budget: u64,
) -> Result<Output, Failure> {
    let s = &input.loaded.semigroup;
    let phi = generating_map(input, gens)?;
    let exp = kr_expand(s, &phi, &Budget::new(budget))?;
    if let Some(path) = dot {
        write_file(path, &exp.graph().export_dot(&DotOptions::default()))?;
    }
    let xyz: Identity = "xyz=xz".parse().expect("valid identity");
    let v = is_v_morphism(exp.result(), s, exp.projection(), &[xyz]);
    let mut code = if v.verdict { EXIT_OK } else { EXIT_FAILS };
    let mut report = json!({
        "command": "kr",
        "input_sha256": input.sha256,
        "base_order": s.order(),
        "letters": phi.letters(),
        "order": exp.order(),
        "transition_edges": exp.graph().transition_edges().len(),
        "projection_onto": exp.projection().is_onto(),
        "xyz_eq_xz_on_fibers": v,
    });
    let file = ExpansionFile::new(&exp);
    match out {
        Some(path) => {
            let text = serde_json::to_string_pretty(&file).expect("serializable") + "\n";
            write_file(path, &text)?;
        }
        None => report["expansion"] = serde_json::to_value(&file).expect("serializable"),
    }
    if let Some(len) = oracle {
        let cmp = compare_with_oracle(&exp, len);
        if !cmp.matches() {
            code = EXIT_FAILS;
        }
        report["oracle"] = json!({
            "max_len": cmp.max_len,
            "words": cmp.words,
            "classes_seen": cmp.classes_seen,
            "matches": cmp.matches(),
            "mismatch": cmp.mismatch.map(|(u, v)| [phi.format_word(&u), phi.format_word(&v)]),
        });
    }
    Ok(Output::Report(report, code))
}

fn cmd_tower(
    input: &Input,
    gens: &GensArg,
    depth: usize,
    absorb: Option<&str>,
    max_len: usize,
    budget: u64,
) -> Result<Output, Failure> {
    let s = &input.loaded.semigroup;
    let phi = generating_map(input, gens)?;
    let b = absorb
        .map(|name| phi.letter_index(name).ok_or_else(|| Failure::input(format!("unknown letter {name:?}"))))
        .transpose()?;
    let tower = kr_tower(s, &phi, depth, &Budget::new(budget))?;
    let levels: Vec<Value> = (0..tower.len())
        .map(|n| json!({ "level": n, "order": tower.level(n).order() }))
        .collect();
    let coherence = tower_coherence(&tower);
    // the probe is quadratic in the number of words
    let probe_len = max_len.min(3);
    let mut ok = coherence.passed;
    let mut report = json!({
        "command": "tower",
        "input_sha256": input.sha256,
        "letters": phi.letters(),
        "requested_depth": depth,
        "complete": tower.is_complete(),
        "levels": levels,
        "coherence": coherence,
        "lsc_probe": { "max_len": probe_len, "levels": check_tower_lsc(&tower, probe_len) },
    });
    if let Some(b) = b {
        let absorption = check_absorption(&tower, b, max_len);
        ok &= absorption.passed;
        report["absorption"] = serde_json::to_value(&absorption).expect("serializable");
    }
    let code = match tower.budget_error() {
        Some(e) => {
            report["budget_error"] = json!(e.to_string());
            EXIT_BUDGET
        }
        None if ok => EXIT_OK,
        None => EXIT_FAILS,
    };
    Ok(Output::Report(report, code))
}

fn cmd_check(property: Property, args: &[String], gens: &GensArg, budget: u64) -> Result<Output, Failure> {
    let (eqn, file) = match (property, args) {
        (Property::Identity, [eqn, file]) => (Some(eqn.as_str()), file),
        (Property::Identity, _) => return Err(Failure::input("check identity needs an equation and a file")),
        (_, [file]) => (None, file),
        _ => return Err(Failure::input("expected a single input file")),
    };
    let input = read_input(Path::new(file))?;
    let s = &input.loaded.semigroup;
    let (verdict, detail) = match property {
        Property::Equidiv => {
            let r = is_equidivisible(s);
            (r.verdict, serde_json::to_value(r))
        }
        Property::Krcover => {
            let phi = match &gens.gens {
                Some(text) => parse_gens(text, s)?,
                None => GeneratingMap::identity(s),
            };
            let r = is_kr_cover_with(s, &phi, &Budget::new(budget))?;
            (r.verdict, serde_json::to_value(r))
        }
        Property::Lsc => {
            let r = is_letter_super_cancellative(s, &generating_map(&input, gens)?);
            (r.verdict, serde_json::to_value(r))
        }
        Property::Identity => {
            let id: Identity = eqn.unwrap_or_default().parse().map_err(Failure::input)?;
            let w = id.counterexample(s);
            (w.is_none(), Ok(json!({ "identity": id.to_string(), "witness": w })))
        }
    };
    let report = json!({
        "command": "check",
        "property": format!("{property:?}").to_lowercase(),
        "input_sha256": input.sha256,
        "verdict": verdict,
        "report": detail.expect("serializable"),
    });
    Ok(Output::Report(report, if verdict { EXIT_OK } else { EXIT_FAILS }))
}

fn cmd_freeprod(
    files: &[PathBuf],
    cap: usize,
    separate_args: Option<&[String]>,
    out: Option<&Path>,
) -> Result<Output, Failure> {
    let inputs = files.iter().map(|f| read_input(f)).collect::<Result<Vec<_>, _>>()?;
    let factors: Vec<FiniteSemigroup> = inputs.iter().map(|i| i.loaded.semigroup.clone()).collect();
    let hashes: Vec<&str> = inputs.iter().map(|i| i.sha256.as_str()).collect();
    if let Some([u, v]) = separate_args {
        let parse = |text: &str| -> Result<_, Failure> {
            let value: Value = serde_json::from_str(text).map_err(Failure::input)?;
            let symbols = form_from_json(&value).map_err(Failure::input)?;
            normal_form(&symbols, &factors).map_err(Failure::input)
        };
        let (u, v) = (parse(u)?, parse(v)?);
        let report = match separate(&u, &v, &factors).map_err(Failure::input)? {
            Separation::Equal => json!({ "command": "freeprod", "input_sha256": hashes, "result": "equal" }),
            Separation::Separated { product, u, v } => json!({
                "command": "freeprod",
                "input_sha256": hashes,
                "result": "separated",
                "cap": product.cap(),
                "order": product.result().order(),
                "u": product.result().name(u),
                "v": product.result().name(v),
            }),
        };
        return Ok(Output::Report(report, EXIT_OK));
    }
    let product = truncated_free_product(&factors, cap).map_err(Failure::input)?;
    let file = SemigroupFile::from_semigroup(product.result(), None);
    let mut report = json!({
        "command": "freeprod",
        "input_sha256": hashes,
        "cap": cap,
        "order": product.result().order(),
        "zero": product.result().name(product.zero()),
    });
    match out {
        Some(path) => write_file(path, &(serde_json::to_string_pretty(&file).expect("serializable") + "\n"))?,
        None => report["product"] = serde_json::to_value(&file).expect("serializable"),
    }
    Ok(Output::Report(report, EXIT_OK))
}

fn cmd_dot(input: &Input, gens: &GensArg, only_reachable: bool, out: Option<&Path>) -> Result<Output, Failure> {
    let phi = generating_map(input, gens)?;
    let graph = TwoSidedCayleyGraph::build(&input.loaded.semigroup, &phi).map_err(Failure::input)?;
    let dot = graph.export_dot(&DotOptions { only_reachable, graph_name: None });
    match out {
        Some(path) => {
            write_file(path, &dot)?;
            Ok(Output::Text(String::new()))
        }
        None => Ok(Output::Text(dot)),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Info { file } => Ok(cmd_info(&read_input(file)?)),
        Command::Kr { file, gens, dot, oracle, out, budget } => {
            cmd_kr(&read_input(file)?, gens, dot.as_deref(), *oracle, out.as_deref(), *budget)
        }
        Command::Tower { file, gens, depth, absorb, max_len, budget } => {
            cmd_tower(&read_input(file)?, gens, *depth, absorb.as_deref(), *max_len, *budget)
        }
        Command::Check { property, args, gens, budget } => cmd_check(*property, args, gens, *budget),
        Command::Freeprod { files, cap, separate, out } => {
            cmd_freeprod(files, *cap, separate.as_deref(), out.as_deref())
        }
        Command::Dot { file, gens, only_reachable, out } => {
            cmd_dot(&read_input(file)?, gens, *only_reachable, out.as_deref())
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out`, diagnostics to `err`. Returns the exit code.
pub fn run_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(Output::Report(mut report, code)) => {
            if !cli.no_meta {
                report["meta"] = json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 });
            }
            let text = serde_json::to_string_pretty(&report).expect("serializable");
            if writeln!(out, "{text}").is_err() {
                return EXIT_INPUT;
            }
            code
        }
        Ok(Output::Text(text)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            EXIT_OK
        }
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "sgrp: {message}");
            code
        }
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_args(args, &mut stdout.lock(), &mut stderr.lock())
}
