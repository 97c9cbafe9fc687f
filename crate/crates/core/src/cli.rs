//! The `lpres` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a verification or
//! property check failed, 3 a resource cap (cosets, points, recursion) was hit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::catalog::{self, CatalogEntry, Source};
use crate::contract::WordProblem;
use crate::coset::{abelianization_series, order_from_presentation, todd_coxeter, AbelianInvariants};
use crate::dsl::{parse_file, parse_word, parse_words, print, GroupFile};
use crate::error::Error;
use crate::lpres::{DedupMode, EnumerationFrontier, LPresentation};
use crate::treeauto::{vertex_path, LevelOracle, Perm, DEFAULT_POINT_BOUND};
use crate::verify::{self, Status, SuiteConfig};
use crate::words::{check_small_cancellation, Alphabet, Lambda, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lpres", version, about = "L-presentations, self-similar groups and their verification")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Target {
    /// Catalog entry name.
    #[arg(long)]
    pub entry: Option<String>,
    /// Group file in the .grp language.
    #[arg(long, conflicts_with = "entry")]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Dedup {
    Exact,
    Cyclic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List relators Q ∪ Φ*(R) up to a substitution depth.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Dedup::Cyclic)]
        dedup: Dedup,
    },
    /// Abelian invariants of the depth-truncated presentations.
    Abelianize {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 5)]
        depth: usize,
    },
    /// Decide triviality with the contracting word-problem algorithm: `wp [ENTRY] WORD`.
    Wp {
        #[command(flatten)]
        target: Target,
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Tree action of a word: `act [ENTRY] WORD`.
    Act {
        #[command(flatten)]
        target: Target,
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        #[arg(long, default_value_t = 3)]
        level: usize,
    },
    /// Level-quotient order (with --level) or order by coset enumeration.
    Order {
        #[command(flatten)]
        target: Target,
        name: Option<String>,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        max_cosets: usize,
    },
    /// Run verification checks on catalog entries or a group file.
    Verify {
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        entry: Option<String>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Todd–Coxeter on the depth-truncated presentation.
    Tc {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Comma-separated subgroup generators.
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        max_cosets: usize,
    },
    /// Finitely presented ascending HNN extension containing the group.
    Embed {
        #[command(flatten)]
        target: Target,
    },
    /// Small-cancellation test of a word set (default: R ∪ Φ(S) of the target).
    Smallcanc {
        #[command(flatten)]
        target: Target,
        /// Comma-separated generator names (with --words).
        #[arg(long, requires = "words")]
        generators: Option<String>,
        /// Comma-separated words.
        #[arg(long)]
        words: Option<String>,
        #[arg(long, default_value = "1/6")]
        lambda: Lambda,
    },
    /// Built-in groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    /// Print an entry as a group file with its notes and fixtures.
    Show { name: String },
    /// Write every listed entry to DIR/<name>.grp.
    Export { dir: PathBuf },
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CosetOverflow(_) | Error::BoundExceeded(_) | Error::RecursionLimit(_) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: EXIT_USAGE, message: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, message: msg.into() }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced: text, JSON, and the exit code.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Text => write!(out, "{}", o.text),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("serializable")),
            };
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn execute(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Enumerate { target, depth, dedup } => enumerate(&load(target, None)?, *depth, *dedup),
        Command::Abelianize { target, depth } => abelianize(&load(target, None)?, *depth),
        Command::Wp { target, args } => {
            let (name, word) = split_args(target, args)?;
            wp(&load(target, name)?, word)
        }
        Command::Act { target, args, level } => {
            let (name, word) = split_args(target, args)?;
            act(&load(target, name)?, word, *level)
        }
        Command::Order { target, name, level, depth, max_cosets } => {
            order(&load(target, name.as_deref())?, *level, *depth, *max_cosets)
        }
        Command::Verify { names, all, file, entry, depth, level, seed, samples, max_cosets } => {
            let config = SuiteConfig {
                depth: *depth,
                level: *level,
                seed: *seed,
                wp_samples: *samples,
                max_cosets: *max_cosets,
                ..Default::default()
            };
            let mut entries: Vec<CatalogEntry> = vec![];
            let mut names = names.clone();
            if *all {
                names.extend(catalog::default_names());
            }
            names.extend(entry.iter().cloned());
            for n in &names {
                entries.push(catalog::get_entry(n)?);
            }
            if let Some(path) = file {
                entries.push(CatalogEntry::from_file(read_file(path)?));
            }
            if entries.is_empty() {
                return Err(usage("nothing to verify: give entry names, --all, --entry or --file"));
            }
            verify_entries(&entries, &config)
        }
        Command::Tc { target, depth, subgroup, max_cosets } => tc(&load(target, None)?, *depth, subgroup.as_deref(), *max_cosets),
        Command::Embed { target } => embed(&load(target, None)?),
        Command::Smallcanc { target, generators, words, lambda } => {
            smallcanc(target, generators.as_deref(), words.as_deref(), *lambda)
        }
        Command::Catalog { action } => catalog_cmd(action),
    }
}

fn split_args<'a>(target: &Target, args: &'a [String]) -> CliResult<(Option<&'a str>, &'a str)> {
    let explicit = target.entry.is_some() || target.file.is_some();
    match (explicit, args) {
        (true, [w]) => Ok((None, w)),
        (false, [n, w]) => Ok((Some(n), w)),
        (true, _) => Err(usage("expected a single WORD when --entry or --file is given")),
        (false, _) => Err(usage("expected ENTRY WORD")),
    }
}

fn read_file(path: &PathBuf) -> CliResult<GroupFile> {
    let src = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_file(&src).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(target: &Target, positional: Option<&str>) -> CliResult<CatalogEntry> {
    match (target.entry.as_deref(), &target.file, positional) {
        (Some(n), None, None) | (None, None, Some(n)) => Ok(catalog::get_entry(n)?),
        (None, Some(p), None) => Ok(CatalogEntry::from_file(read_file(p)?)),
        (None, None, None) => Err(usage("no group given: use --entry NAME or --file PATH")),
        _ => Err(usage("give exactly one of ENTRY, --entry, --file")),
    }
}

fn invariants_json(a: &AbelianInvariants) -> Value {
    let torsion: Vec<Value> = a
        .torsion
        .iter()
        .map(|t| t.to_u64().map_or_else(|| json!(t.to_string()), |v| json!(v)))
        .collect();
    json!({ "torsion": torsion, "free_rank": a.free_rank, "text": a.to_string() })
}

fn source_json(s: &Source) -> Value {
    serde_json::to_value(s).expect("serializable")
}

fn enumerate(e: &CatalogEntry, depth: usize, dedup: Dedup) -> CliResult<Output> {
    let l = e.lpres();
    let mode = match dedup {
        Dedup::Exact => DedupMode::Exact,
        Dedup::Cyclic => DedupMode::Cyclic,
    };
    let mut f = EnumerationFrontier::new(l, mode);
    f.advance_to(l, depth);
    let mut text = String::new();
    let mut rels = vec![];
    for r in f.relators() {
        let origin = verify::describe_origin(l, &r.origin);
        let w = l.format_word(&r.word);
        let _ = writeln!(text, "{origin}\t{w}");
        rels.push(json!({ "origin": origin, "depth": r.origin.depth(), "length": r.word.len(), "word": w }));
    }
    let json = json!({ "entry": e.name, "depth": depth, "dedup": format!("{dedup:?}").to_lowercase(), "exhausted": f.is_exhausted(), "relators": rels });
    Ok(Output::ok(text, json))
}

fn abelianize(e: &CatalogEntry, depth: usize) -> CliResult<Output> {
    let series = abelianization_series(e.lpres(), depth);
    let last = series.last().expect("depth 0 present");
    let mut text = String::new();
    for a in &series {
        let _ = writeln!(text, "depth {}: {}", a.depth, a.invariants);
    }
    let _ = writeln!(text, "{}", if last.stabilized() { "stabilized" } else { "not yet stabilized" });
    let json = json!({
        "entry": e.name,
        "depth": depth,
        "invariants": invariants_json(&last.invariants),
        "stabilized": last.stabilized(),
        "series": series.iter().map(|a| invariants_json(&a.invariants)).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

/// Parses over the presentation alphabet (embedded into the recursion) or,
/// failing that, over the recursion's own generators.
fn tree_word(e: &CatalogEntry, src: &str) -> CliResult<Word> {
    let m = e.model().ok_or_else(|| usage(format!("`{}` has no tree action", e.name)))?;
    match parse_word(&e.lpres().alphabet, src) {
        Ok(w) => Ok(m.embed(&w)),
        Err(first) => parse_word(m.spec.alphabet(), src).map_err(|_| first.into()),
    }
}

fn wp(e: &CatalogEntry, src: &str) -> CliResult<Output> {
    let w = tree_word(e, src)?;
    let spec = e.spec().expect("checked by tree_word");
    let mut solver = WordProblem::for_spec(spec)?;
    let trivial = solver.is_trivial(&w)?;
    let verdict = if trivial { "trivial" } else { "nontrivial" };
    let json = json!({
        "entry": e.name,
        "word": spec.alphabet().format(&w),
        "normal_form": spec.alphabet().format(&spec.normalize(&w)),
        "trivial": trivial,
        "contraction": spec.contraction,
    });
    Ok(Output::ok(format!("{verdict}\n"), json))
}

fn vertex_label(d: usize, level: usize, i: usize) -> String {
    let path = vertex_path(d, level, i);
    if d <= 9 {
        path.iter().map(|x| char::from(b'1' + *x as u8)).collect()
    } else {
        path.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(".")
    }
}

fn cycles_text(p: &Perm, label: impl Fn(usize) -> String) -> String {
    let cs = p.cycles();
    if cs.is_empty() {
        return "()".into();
    }
    cs.iter()
        .map(|c| format!("({})", c.iter().map(|&i| label(i as usize)).collect::<Vec<_>>().join(" ")))
        .collect()
}

fn act(e: &CatalogEntry, src: &str, level: usize) -> CliResult<Output> {
    let w = tree_word(e, src)?;
    let spec = e.spec().expect("checked by tree_word");
    let d = spec.degree();
    let f = spec.wreath_decompose(&w);
    let perm = spec.level_permutation(&w, level)?;
    let first = LevelOracle::new(spec).first_nontrivial_level(&w, level.max(20));
    let sections: Vec<String> = f.sections.iter().map(|s| spec.alphabet().format(s)).collect();
    let mut text = String::new();
    let _ = writeln!(text, "word: {}", spec.alphabet().format(&w));
    let _ = writeln!(text, "top: {}", cycles_text(&f.top, |i| (i + 1).to_string()));
    let _ = writeln!(text, "sections: {}", sections.join(", "));
    let _ = writeln!(text, "level {level}: {}", cycles_text(&perm, |i| vertex_label(d, level, i)));
    let _ = writeln!(text, "first nontrivial level: {}", first.map_or("none up to 20".into(), |n| n.to_string()));
    let json = json!({
        "entry": e.name,
        "word": spec.alphabet().format(&w),
        "degree": d,
        "level": level,
        "top": f.top.images(),
        "sections": sections,
        "permutation": perm.images(),
        "first_nontrivial_level": first,
    });
    Ok(Output::ok(text, json))
}

fn order(e: &CatalogEntry, level: Option<usize>, depth: Option<usize>, max_cosets: usize) -> CliResult<Output> {
    if let Some(n) = level {
        let spec = e.spec().ok_or_else(|| usage(format!("`{}` has no tree action", e.name)))?;
        let o = spec.level_quotient_order(n, DEFAULT_POINT_BOUND)?;
        let json = json!({ "entry": e.name, "method": "level-quotient", "level": n, "order": o.to_string() });
        return Ok(Output::ok(format!("{o}\n"), json));
    }
    let depth = depth.unwrap_or(e.defaults.depth);
    let o = order_from_presentation(e.lpres(), depth, max_cosets)?;
    let json = json!({ "entry": e.name, "method": "todd-coxeter", "depth": depth, "order": o.to_string() });
    Ok(Output::ok(format!("{o}\n"), json))
}

fn verify_entries(entries: &[CatalogEntry], config: &SuiteConfig) -> CliResult<Output> {
    let reports: Vec<_> = entries.iter().map(|e| verify::verify_entry(e, config)).collect();
    let mut text = String::new();
    for r in &reports {
        for c in &r.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let _ = write!(text, "{status}  {}  {}", c.entry, c.check);
            if let Some(Source::Derived(_)) = c.source {
                text.push_str("  [derived]");
            }
            if let Some(d) = &c.detail {
                let _ = write!(text, "  ({d})");
            }
            if let Some(w) = &c.witness {
                let _ = write!(text, "\n      witness: {w}");
            }
            text.push('\n');
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(text, "{} entries, {failed} with failures", reports.len());
    let code = if failed == 0 { EXIT_OK } else { EXIT_FAILED };
    Ok(Output { text, json: verify::reports_to_json(&reports), code })
}

fn tc(e: &CatalogEntry, depth: usize, subgroup: Option<&str>, max_cosets: usize) -> CliResult<Output> {
    let p = e.lpres().truncate(depth);
    let h = match subgroup {
        Some(s) => parse_words(&p.alphabet, s)?,
        None => vec![],
    };
    let t = todd_coxeter(&p, &h, max_cosets)?;
    let perms = t.permutations();
    let mut text = format!("{} cosets\n", t.cosets());
    for (g, im) in perms.iter().enumerate() {
        let perm = Perm::from_images(im.clone()).expect("closed table");
        let _ = writeln!(text, "{}: {}", p.alphabet.name(g as u32), cycles_text(&perm, |i| (i + 1).to_string()));
    }
    let json = json!({
        "entry": e.name,
        "depth": depth,
        "relators": p.relators.len(),
        "cosets": t.cosets(),
        "generators": p.alphabet.names(),
        "permutations": perms,
    });
    Ok(Output::ok(text, json))
}

fn embed(e: &CatalogEntry) -> CliResult<Output> {
    let p = e.lpres().hnn_embed()?;
    let file = GroupFile {
        name: format!("{}-hnn", e.name),
        lpres: LPresentation::finite(p.clone()),
        model: None,
    };
    let text = print(&file);
    let json = json!({
        "entry": e.name,
        "generators": p.alphabet.names(),
        "relators": p.relators.iter().map(|w| p.alphabet.format(w)).collect::<Vec<_>>(),
        "group_file": text,
    });
    Ok(Output::ok(text, json))
}

fn smallcanc(target: &Target, generators: Option<&str>, words: Option<&str>, lambda: Lambda) -> CliResult<Output> {
    let (alphabet, ws, name) = match (generators, words) {
        (Some(g), Some(w)) => {
            let names: Vec<&str> = g.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let a = Alphabet::new(&names)?;
            let ws = parse_words(&a, w)?;
            (a, ws, None)
        }
        (None, Some(_)) => return Err(usage("--words needs --generators")),
        _ => {
            let e = load(target, None)?;
            let l = e.lpres();
            let mut ws = l.iterated.clone();
            for phi in &l.endos {
                ws.extend(phi.images().iter().filter(|w| !w.is_identity()).cloned());
            }
            (l.alphabet.clone(), ws, Some(e.name))
        }
    };
    let r = check_small_cancellation(&ws, lambda)?;
    let mut text = format!(
        "C'({lambda}) {}: {} words in the symmetrized closure, longest piece {}\n",
        if r.holds { "holds" } else { "fails" },
        r.closure_size,
        r.longest_piece
    );
    let witness = r.witness.as_ref().map(|p| {
        let _ = writeln!(
            text,
            "piece {} shared by {} and {}",
            alphabet.format(&p.piece),
            alphabet.format(&p.u),
            alphabet.format(&p.v)
        );
        json!({ "piece": alphabet.format(&p.piece), "u": alphabet.format(&p.u), "v": alphabet.format(&p.v) })
    });
    let json = json!({
        "entry": name,
        "lambda": lambda.to_string(),
        "holds": r.holds,
        "closure_size": r.closure_size,
        "longest_piece": r.longest_piece,
        "witness": witness,
    });
    Ok(Output { text, json, code: if r.holds { EXIT_OK } else { EXIT_FAILED } })
}

fn entry_json(e: &CatalogEntry) -> Value {
    let fx = &e.fixtures;
    json!({
        "name": e.name,
        "title": e.title,
        "group_file": print(&e.file),
        "direct_model": e.direct_model.as_ref().map(|m| m.kind()),
        "contraction": e.contraction(),
        "notes": e.notes,
        "fixtures": {
            "abelianization": fx.abelianization.as_ref().map(|f| json!({ "value": invariants_json(&f.value), "source": source_json(&f.source) })),
            "level_orders": fx.level_orders.iter().map(|(n, f)| json!({ "level": n, "order": f.value, "source": source_json(&f.source) })).collect::<Vec<_>>(),
            "order": fx.order.as_ref().map(|f| json!({ "value": f.value, "source": source_json(&f.source) })),
            "conjugation_table": fx.conjugation_table.iter().map(|c| json!({ "identity": c.label, "source": source_json(&c.source) })).collect::<Vec<_>>(),
        },
    })
}

fn catalog_cmd(action: &CatalogAction) -> CliResult<Output> {
    match action {
        CatalogAction::List => {
            let mut text = String::new();
            let mut items = vec![];
            for n in catalog::ENTRY_NAMES {
                let e = catalog::get_entry(n)?;
                let _ = writeln!(text, "{n:24} {}", e.title);
                items.push(json!({ "name": n, "title": e.title }));
            }
            for f in catalog::FAMILIES {
                let _ = writeln!(text, "{f:24} (parameterized)");
                items.push(json!({ "name": f, "title": "parameterized family" }));
            }
            Ok(Output::ok(text, json!({ "entries": items })))
        }
        CatalogAction::Show { name } => {
            let e = catalog::get_entry(name)?;
            let mut text = print(&e.file);
            for n in &e.notes {
                let _ = writeln!(text, "# {n}");
            }
            if let Some(a) = &e.fixtures.abelianization {
                let _ = writeln!(text, "# abelianization: {}", a.value);
            }
            for (n, f) in &e.fixtures.level_orders {
                let _ = writeln!(text, "# |G/Stab({n})| = {}", f.value);
            }
            Ok(Output::ok(text, entry_json(&e)))
        }
        CatalogAction::Export { dir } => {
            std::fs::create_dir_all(dir)?;
            let mut written = vec![];
            for e in catalog::all_entries() {
                let path = dir.join(format!("{}.grp", e.file_stem()));
                std::fs::write(&path, print(&e.file))?;
                written.push(path.display().to_string());
            }
            let text = written.iter().map(|p| format!("wrote {p}\n")).collect();
            Ok(Output::ok(text, json!({ "written": written })))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = vec![];
        let mut err = vec![];
        let code = run(std::iter::once("lpres").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn wp_ignores_spaces() {
        let (code, out, _) = run_str(&["wp", "grigorchuk", "adad adad"]);
        assert_eq!(code, 0);
        assert_eq!(out, "trivial\n");
        let (_, out, _) = run_str(&["wp", "grigorchuk", "ab"]);
        assert_eq!(out, "nontrivial\n");
    }

    #[test]
    fn order_by_level() {
        let (code, out, _) = run_str(&["order", "grigorchuk", "--level", "2"]);
        assert_eq!((code, out.as_str()), (0, "8\n"));
    }

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(run_str(&["frobnicate"]).0, 1);
        assert_eq!(run_str(&["wp", "nope", "a"]).0, 1);
        assert_eq!(run_str(&["enumerate"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn resource_cap_exits_3() {
        let (code, _, err) = run_str(&["tc", "--entry", "lamplighter", "--depth", "1", "--max-cosets", "50"]);
        assert_eq!(code, 3, "{err}");
    }

    #[test]
    fn smallcanc_exit_codes() {
        assert_eq!(run_str(&["smallcanc", "--generators", "x,y", "--words", "x^7, y^7, (x y)^7"]).0, 0);
        let (code, out, _) = run_str(&["smallcanc", "--generators", "x,y", "--words", "[x, y]"]);
        assert_eq!(code, 2);
        assert!(out.contains("piece"));
    }
}
