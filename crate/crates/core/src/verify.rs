//! Cross-checks between presentations, tree actions, direct models and
//! the coset/abelianization oracles.
//!
//! Level checks are necessary but not sufficient for triviality; their
//! reports say "soundness at level n".

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{conjugate_table_entry, get_entry, CatalogEntry, Source};
use crate::contract::{build_flag_table, check_contraction, WordProblem};
use crate::coset::{abelianization_series, order_from_presentation};
use crate::error::{Error, Result};
use crate::lpres::{DedupMode, EnumerationFrontier, LPresentation, Origin};
use crate::treeauto::LevelOracle;
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One line of a report: `{entry, check, status, witness?, params}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub entry: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<Source>,
    pub params: BTreeMap<String, Value>,
}

impl CheckResult {
    fn new(entry: &str, check: impl Into<String>, status: Status) -> Self {
        CheckResult {
            entry: entry.to_string(),
            check: check.into(),
            status,
            witness: None,
            detail: None,
            source: None,
            params: BTreeMap::new(),
        }
    }

    fn param(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.params.insert(k.to_string(), v.into());
        self
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    fn skip(entry: &str, check: &str, reason: &str) -> Self {
        CheckResult::new(entry, check, Status::Skip).detail(reason)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub entry: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    fn new(entry: &str) -> Self {
        VerificationReport { entry: entry.to_string(), checks: vec![] }
    }

    fn one(c: CheckResult) -> Self {
        VerificationReport { entry: c.entry.clone(), checks: vec![c] }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

/// `φ∘ψ(R[i])`-style description of where a relator came from.
pub fn describe_origin(l: &LPresentation, origin: &Origin) -> String {
    match origin {
        Origin::Fixed(i) => format!("Q[{i}]"),
        Origin::Iterated { index, phis } if phis.is_empty() => format!("R[{index}]"),
        Origin::Iterated { index, phis } => {
            let names: Vec<&str> = phis.iter().rev().map(|&j| l.endos[j].name.as_str()).collect();
            format!("{}(R[{index}])", names.join("∘"))
        }
    }
}

const MAX_WITNESSES: usize = 5;

/// Every relator up to `depth` acts trivially: on tree level `level` for
/// entries with a recursion, in the direct model otherwise.
pub fn verify_relators_act_trivially(entry: &CatalogEntry, depth: usize, level: usize) -> VerificationReport {
    let l = entry.lpres();
    let mut f = EnumerationFrontier::new(l, DedupMode::Cyclic);
    f.advance_to(l, depth);
    let mut report = VerificationReport::new(&entry.name);
    let words: Vec<(String, &Word)> = f
        .relators()
        .iter()
        .map(|r| (describe_origin(l, &r.origin), &r.word))
        .chain(entry.families.iter().flat_map(|fam| fam.words.iter().map(move |w| (fam.name.clone(), w))))
        .collect();

    let (check, trivial): (String, Box<dyn Fn(&Word) -> bool>) = if let Some(m) = entry.model() {
        let action = match m.spec.level_action(level) {
            Ok(a) => a,
            Err(e) => {
                return VerificationReport::one(CheckResult::skip(&entry.name, "relators", &e.to_string()));
            }
        };
        (format!("relators (soundness at level {level})"), Box::new(move |w: &Word| action.word(&m.embed(w)).is_identity()))
    } else if let Some(dm) = &entry.direct_model {
        (format!("relators ({} model)", dm.kind()), Box::new(move |w: &Word| dm.is_identity(w)))
    } else {
        return VerificationReport::one(CheckResult::skip(&entry.name, "relators", "no tree action or direct model"));
    };

    let bad: Vec<&(String, &Word)> = words.iter().filter(|(_, w)| !trivial(w)).collect();
    let mut c = CheckResult::new(&entry.name, check, if bad.is_empty() { Status::Pass } else { Status::Fail })
        .param("depth", depth)
        .param("relators", f.relators().len())
        .param("family_words", words.len() - f.relators().len());
    if entry.model().is_some() {
        c = c.param("level", level);
    }
    if !bad.is_empty() {
        let shown: Vec<String> =
            bad.iter().take(MAX_WITNESSES).map(|(o, w)| format!("{o}: {}", l.format_word(w))).collect();
        c = c.witness(shown.join("; ")).detail(format!("{} of {} words act nontrivially", bad.len(), words.len()));
    }
    report.checks.push(c);
    report
}

/// Each stored identity `k^s = w` compared as tree actions on `level`.
pub fn verify_conjugation_table(entry: &CatalogEntry, level: usize) -> VerificationReport {
    let mut report = VerificationReport::new(&entry.name);
    if entry.fixtures.conjugation_table.is_empty() {
        return VerificationReport::one(CheckResult::skip(&entry.name, "conjugation", "no conjugation table"));
    }
    let Some(m) = entry.model() else {
        return VerificationReport::one(CheckResult::skip(&entry.name, "conjugation", "no tree action"));
    };
    let action = match m.spec.level_action(level) {
        Ok(a) => a,
        Err(e) => return VerificationReport::one(CheckResult::skip(&entry.name, "conjugation", &e.to_string())),
    };
    for id in &entry.fixtures.conjugation_table {
        let lhs = conjugate_table_entry(&id.element, &id.conjugator);
        let ok = action.word(&m.embed(&lhs)) == action.word(&m.embed(&id.expected));
        let mut c = CheckResult::new(&entry.name, format!("conjugation {}", id.label), if ok { Status::Pass } else { Status::Fail })
            .param("level", level);
        c.source = Some(id.source);
        if !ok {
            let residue = lhs.mul(&id.expected.inverse());
            let first = LevelOracle::new(&m.spec).first_nontrivial_level(&m.embed(&residue), level);
            c = c
                .witness(entry.lpres().format_word(&residue))
                .detail(format!("differs first at level {}", first.map_or("?".into(), |n| n.to_string())));
        }
        report.checks.push(c);
    }
    report
}

/// Random-word agreement between the contracting decision procedure and
/// the level action: trivial ⟹ identity at level 12, nontrivial ⟹ moves
/// something by level 20.
pub fn cross_check_word_problem(entry: &CatalogEntry, samples: usize, max_len: usize, seed: u64) -> VerificationReport {
    const TRIVIAL_LEVEL: usize = 12;
    const SEARCH_LEVEL: usize = 20;
    let name = "word problem vs level action";
    let Some(spec) = entry.spec() else {
        return VerificationReport::one(CheckResult::skip(&entry.name, name, "no tree action"));
    };
    let Some(d) = spec.contraction else {
        return VerificationReport::one(CheckResult::skip(&entry.name, name, "no contraction constant"));
    };
    let mut wp = match WordProblem::new(spec, d) {
        Ok(wp) => wp,
        Err(e) => return VerificationReport::one(CheckResult::new(&entry.name, name, Status::Fail).detail(e.to_string())),
    };
    let mut oracle = LevelOracle::new(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = spec.alphabet().len();
    let (mut trivial, mut nontrivial) = (0usize, 0usize);
    let mut bad = vec![];
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let w = Word::random(&mut rng, rank, len);
        let agrees = match wp.is_trivial(&w) {
            Ok(true) => {
                trivial += 1;
                oracle.is_identity_at(&w, TRIVIAL_LEVEL)
            }
            Ok(false) => {
                nontrivial += 1;
                oracle.first_nontrivial_level(&w, SEARCH_LEVEL).is_some()
            }
            Err(e) => {
                bad.push(format!("{} ({e})", spec.alphabet().format(&w)));
                continue;
            }
        };
        if !agrees {
            bad.push(spec.alphabet().format(&w));
        }
    }
    let mut c = CheckResult::new(&entry.name, name, if bad.is_empty() { Status::Pass } else { Status::Fail })
        .param("samples", samples)
        .param("max_len", max_len)
        .param("seed", seed)
        .param("contraction", d)
        .detail(format!("{trivial} trivial, {nontrivial} nontrivial, {} disagreements", bad.len()));
    if !bad.is_empty() {
        c = c.witness(bad.iter().take(MAX_WITNESSES).cloned().collect::<Vec<_>>().join("; "));
    }
    VerificationReport::one(c)
}

/// Invariants at `max_depth` equal those at `max_depth - 1` and the fixture.
pub fn verify_abelianization(entry: &CatalogEntry, max_depth: usize) -> VerificationReport {
    let name = "abelianization";
    let Some(fx) = &entry.fixtures.abelianization else {
        return VerificationReport::one(CheckResult::skip(&entry.name, name, "no fixture"));
    };
    let series = abelianization_series(entry.lpres(), max_depth);
    let last = series.last().expect("depth 0 is always present");
    let stabilized = series.len() < 2 || series[series.len() - 2].invariants == last.invariants;
    let ok = stabilized && last.invariants == fx.value;
    let trail: Vec<String> = series.iter().map(|a| a.invariants.to_string()).collect();
    let mut c = CheckResult::new(&entry.name, name, if ok { Status::Pass } else { Status::Fail })
        .param("max_depth", max_depth)
        .param("expected", fx.value.to_string())
        .detail(format!("by depth: {}", trail.join(" | ")));
    c.source = Some(fx.source);
    if !ok {
        c = c.witness(last.invariants.to_string());
    }
    VerificationReport::one(c)
}

/// Stored `|G/Stab(n)|` fixtures against Schreier–Sims.
pub fn verify_level_orders(entry: &CatalogEntry) -> VerificationReport {
    let mut report = VerificationReport::new(&entry.name);
    let Some(spec) = entry.spec() else { return report };
    for (n, fx) in &entry.fixtures.level_orders {
        let check = format!("level {n} quotient order");
        let mut c = match spec.level_quotient_order(*n, crate::treeauto::DEFAULT_POINT_BOUND) {
            Ok(o) if o == fx.value.into() => CheckResult::new(&entry.name, check, Status::Pass),
            Ok(o) => CheckResult::new(&entry.name, check, Status::Fail).witness(o.to_string()),
            Err(e) => CheckResult::skip(&entry.name, &check, &e.to_string()),
        }
        .param("level", *n)
        .param("expected", fx.value);
        c.source = Some(fx.source);
        report.checks.push(c);
    }
    report
}

/// Todd–Coxeter on the depth-truncated presentation against the known order.
pub fn verify_order(entry: &CatalogEntry, depth: usize, max_cosets: usize) -> VerificationReport {
    let name = "order by coset enumeration";
    let Some(fx) = &entry.fixtures.order else {
        return VerificationReport::one(CheckResult::skip(&entry.name, name, "no order fixture"));
    };
    let base = CheckResult::new(&entry.name, name, Status::Pass)
        .param("depth", depth)
        .param("max_cosets", max_cosets)
        .param("expected", fx.value);
    let c = match order_from_presentation(entry.lpres(), depth, max_cosets) {
        Ok(n) if n as u64 == fx.value => base,
        Ok(n) => CheckResult { status: Status::Fail, ..base }.witness(n.to_string()),
        Err(e) => CheckResult { status: Status::Fail, ..base }.detail(e.to_string()),
    };
    VerificationReport::one(c)
}

/// Rewrite rules hold in the action, and sections shrink beyond D.
pub fn verify_contraction(entry: &CatalogEntry, level: usize) -> VerificationReport {
    let mut report = VerificationReport::new(&entry.name);
    let Some(spec) = entry.spec() else { return report };
    if !spec.rules().is_empty() {
        let c = match spec.check_rules(level) {
            Ok(()) => CheckResult::new(&entry.name, format!("rewrite rules (soundness at level {level})"), Status::Pass),
            Err(e) => CheckResult::new(&entry.name, format!("rewrite rules (soundness at level {level})"), Status::Fail).witness(e.to_string()),
        };
        report.checks.push(c.param("level", level).param("rules", spec.rules().len()));
    }
    if let Some(d) = spec.contraction {
        let check = "contraction certificate";
        let c = match build_flag_table(spec, d) {
            Err(e) => CheckResult::new(&entry.name, check, Status::Fail).witness(e.to_string()),
            Ok(_) => {
                let cert = check_contraction(spec, d, d + 4);
                let c = CheckResult::new(&entry.name, check, if cert.passed() { Status::Pass } else { Status::Fail })
                    .detail(format!("{} stabilizing words checked", cert.checked_words));
                match cert.violations.first() {
                    Some(w) => c.witness(spec.alphabet().format(w)),
                    None => c,
                }
            }
        };
        report.checks.push(c.param("contraction", d).param("max_length", d + 4));
    }
    report
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub depth: Option<usize>,
    pub level: Option<usize>,
    pub seed: u64,
    pub wp_samples: Option<usize>,
    pub wp_max_len: Option<usize>,
    pub max_cosets: Option<usize>,
    pub abelianization_depth: Option<usize>,
}

pub const DEFAULT_SEED: u64 = 20_240_601;

impl SuiteConfig {
    pub fn seeded(seed: u64) -> Self {
        SuiteConfig { seed, ..Default::default() }
    }
}

/// All applicable checks for one entry.
pub fn verify_entry(entry: &CatalogEntry, config: &SuiteConfig) -> VerificationReport {
    let d = entry.defaults;
    let depth = config.depth.unwrap_or(d.depth);
    let level = config.level.unwrap_or(d.level);
    let mut report = VerificationReport::new(&entry.name);
    report.merge(verify_relators_act_trivially(entry, depth, level));
    if !entry.fixtures.conjugation_table.is_empty() {
        report.merge(verify_conjugation_table(entry, level));
    }
    report.merge(verify_abelianization(entry, config.abelianization_depth.unwrap_or(d.abelianization_depth)));
    report.merge(verify_level_orders(entry));
    if entry.fixtures.order.is_some() {
        report.merge(verify_order(entry, depth, config.max_cosets.unwrap_or(d.max_cosets)));
    }
    report.merge(verify_contraction(entry, level));
    if entry.contraction().is_some() {
        report.merge(cross_check_word_problem(
            entry,
            config.wp_samples.unwrap_or(d.wp_samples),
            config.wp_max_len.unwrap_or(d.wp_max_len),
            config.seed,
        ));
    }
    report
}

/// Reports in the order of `names`; unknown names are an error up front.
pub fn run_suite<S: AsRef<str>>(names: &[S], config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let entries = names.iter().map(|n| get_entry(n.as_ref())).collect::<Result<Vec<_>>>()?;
    Ok(entries.iter().map(|e| verify_entry(e, config)).collect())
}

pub fn reports_to_json(reports: &[VerificationReport]) -> Value {
    json!(reports.iter().flat_map(|r| r.checks.iter()).collect::<Vec<_>>())
}

/// A single-token fault injected into a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub description: String,
    pub entry: CatalogEntry,
}

#[derive(Clone, Copy, Debug)]
enum Site {
    Fixed(usize),
    Iterated(usize),
    Image(usize, u32),
}

fn mutate_word(w: &Word, rank: usize) -> Vec<(String, Word)> {
    let letters = w.letters();
    let mut out = vec![];
    for i in 0..letters.len() {
        let mut v = letters.to_vec();
        let l = v[i];
        v[i].gen = (l.gen + 1) % rank as u32;
        out.push((format!("letter {i} -> generator {}", v[i].gen), Word::reduce(v)));
        let mut v = letters.to_vec();
        v.remove(i);
        out.push((format!("delete letter {i}"), Word::reduce(v)));
    }
    let mut v = letters.to_vec();
    v.push(crate::words::Letter::pos(0));
    out.push(("append generator 0".into(), Word::reduce(v)));
    out.into_iter().filter(|(_, m)| m != w).collect()
}

/// Deterministic fault set: every letter of every relator and nontrivial
/// substitution image is replaced by the next generator or deleted, and
/// generator 0 is appended.
pub fn mutations(entry: &CatalogEntry) -> Vec<Mutation> {
    let l = entry.lpres();
    let rank = l.rank();
    let mut sites: Vec<(Site, &Word)> = vec![];
    sites.extend(l.fixed.iter().enumerate().map(|(i, w)| (Site::Fixed(i), w)));
    sites.extend(l.iterated.iter().enumerate().map(|(i, w)| (Site::Iterated(i), w)));
    for (j, e) in l.endos.iter().enumerate() {
        for g in 0..rank as u32 {
            if e.image(g) != &Word::gen(g) {
                sites.push((Site::Image(j, g), e.image(g)));
            }
        }
    }
    let mut out = vec![];
    for (site, w) in sites {
        for (how, m) in mutate_word(w, rank) {
            let mut e = entry.clone();
            let lp = &mut e.file.lpres;
            let place = match site {
                Site::Fixed(i) => {
                    lp.fixed[i] = m;
                    format!("Q[{i}]")
                }
                Site::Iterated(i) => {
                    lp.iterated[i] = m;
                    format!("R[{i}]")
                }
                Site::Image(j, g) => {
                    lp.endos[j].set_image(g, m);
                    format!("{}({})", lp.endos[j].name, lp.alphabet.name(g))
                }
            };
            out.push(Mutation { description: format!("{place}: {how}"), entry: e });
        }
    }
    out
}

/// How an injected fault was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Catch {
    /// A relator, abelianization or order check failed.
    Semantic(String),
    /// Only the canonical text differs from the pristine entry's golden
    /// file: the fault is invisible to the desk-scale soundness checks
    /// (an equivalent presentation, or one with fewer consequences).
    Golden,
    Missed,
}

type FailureKey = (String, Option<String>, Option<String>);

/// Relator, abelianization and (when a fixture exists) order checks.
fn semantic_failures(e: &CatalogEntry, config: &SuiteConfig) -> BTreeSet<FailureKey> {
    let d = e.defaults;
    let depth = config.depth.unwrap_or(d.depth);
    let level = config.level.unwrap_or(d.level);
    let mut checks = vec![
        verify_relators_act_trivially(e, depth, level),
        verify_abelianization(e, config.abelianization_depth.unwrap_or(d.abelianization_depth)),
    ];
    if e.fixtures.order.is_some() {
        checks.push(verify_order(e, d.depth, config.max_cosets.unwrap_or(d.max_cosets)));
    }
    checks
        .iter()
        .flat_map(|r| r.failures())
        .map(|f| (f.check.clone(), f.witness.clone(), f.detail.clone()))
        .collect()
}

fn classify(m: &Mutation, pristine: &CatalogEntry, baseline: &BTreeSet<FailureKey>, config: &SuiteConfig) -> Catch {
    // Entries that already fail must fail differently: same verdicts are no signal.
    if let Some((check, _, _)) = semantic_failures(&m.entry, config).into_iter().find(|f| !baseline.contains(f)) {
        return Catch::Semantic(check);
    }
    if crate::dsl::print(&m.entry.file) != crate::dsl::print(&pristine.file) {
        Catch::Golden
    } else {
        Catch::Missed
    }
}

pub fn mutation_caught(m: &Mutation, pristine: &CatalogEntry, config: &SuiteConfig) -> Catch {
    classify(m, pristine, &semantic_failures(pristine, config), config)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MutationSummary {
    pub total: usize,
    pub semantic: usize,
    /// Descriptions of faults caught only by the golden-file comparison.
    pub golden_only: Vec<String>,
    pub missed: Vec<String>,
}

impl MutationSummary {
    pub fn all_caught(&self) -> bool {
        self.missed.is_empty()
    }
}

pub fn run_mutation_harness(entry: &CatalogEntry, config: &SuiteConfig) -> MutationSummary {
    let mut s = MutationSummary::default();
    let baseline = semantic_failures(entry, config);
    for m in mutations(entry) {
        s.total += 1;
        match classify(&m, entry, &baseline, config) {
            Catch::Semantic(_) => s.semantic += 1,
            Catch::Golden => s.golden_only.push(m.description),
            Catch::Missed => s.missed.push(m.description),
        }
    }
    s
}

pub fn unknown_entries<S: AsRef<str>>(names: &[S]) -> Vec<String> {
    names
        .iter()
        .filter(|n| matches!(get_entry(n.as_ref()), Err(Error::UnknownEntry(_))))
        .map(|n| n.as_ref().to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_word;

    #[test]
    fn grigorchuk_relators_pass_and_mutant_fails() {
        let e = get_entry("grigorchuk").unwrap();
        assert!(verify_relators_act_trivially(&e, 3, 6).passed());
        let mut bad = e.clone();
        bad.file.lpres.iterated[0] = parse_word(&bad.lpres().alphabet, "a^2 c").unwrap();
        let r = verify_relators_act_trivially(&bad, 3, 6);
        assert!(!r.passed());
        assert!(r.checks[0].witness.as_deref().unwrap().contains("R[0]: a^2 c"));
    }

    #[test]
    fn skips_without_model() {
        let e = get_entry("rationals-embedding-H").unwrap();
        assert_eq!(verify_relators_act_trivially(&e, 2, 3).checks[0].status, Status::Skip);
    }

    #[test]
    fn empty_suite_and_unknown_names() {
        assert!(run_suite::<&str>(&[], &SuiteConfig::default()).unwrap().is_empty());
        assert!(matches!(run_suite(&["nope"], &SuiteConfig::default()), Err(Error::UnknownEntry(_))));
        assert_eq!(unknown_entries(&["grigorchuk", "nope"]), vec!["nope"]);
    }

    #[test]
    fn word_problem_reports_are_deterministic() {
        let e = get_entry("grigorchuk").unwrap();
        let a = cross_check_word_problem(&e, 60, 16, 7);
        let b = cross_check_word_problem(&e, 60, 16, 7);
        assert!(a.passed());
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn origins_are_described() {
        let e = get_entry("fabrykowski-gupta").unwrap();
        let o = Origin::Iterated { index: 2, phis: vec![0, 2] };
        assert_eq!(describe_origin(e.lpres(), &o), "chi2∘sigma(R[2])");
    }
}
