//! The word problem in contracting self-similar groups.
//!
//! Words of length at most D are classified once by a fixpoint over their
//! sections; longer words are decided by recursing into sections, which are
//! strictly shorter once the group contracts beyond D.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::treeauto::SelfSimilarSpec;
use crate::words::{Letter, Word};

pub const DEFAULT_RECURSION_LIMIT: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flag {
    Trivial,
    Nontrivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagTable {
    pub bound: usize,
    flags: HashMap<Word, Flag>,
}

impl FlagTable {
    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Flag of a normal-form word of length ≤ bound.
    pub fn get(&self, w: &Word) -> Option<Flag> {
        self.flags.get(w).copied()
    }

    /// Normalizes first, so any word whose normal form is short works.
    pub fn flag(&self, spec: &SelfSimilarSpec, w: &Word) -> Option<Flag> {
        self.get(&spec.normalize(w))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, Flag)> {
        self.flags.iter().map(|(w, f)| (w, *f))
    }
}

/// All reduced words in normal form (no rewrite-rule left side occurs)
/// with length in `min..=max`, shortlex ordered.
pub fn normal_words(spec: &SelfSimilarSpec, min: usize, max: usize) -> Vec<Word> {
    fn go(spec: &SelfSimilarSpec, cur: &mut Vec<Letter>, min: usize, max: usize, out: &mut Vec<Word>) {
        if cur.len() >= min {
            out.push(Word::reduce(cur.iter().copied()));
        }
        if cur.len() == max {
            return;
        }
        for i in 0..2 * spec.alphabet().len() {
            let l = Letter::from_index(i);
            if cur.last() == Some(&l.inverse()) {
                continue;
            }
            cur.push(l);
            let ok = spec.rules().iter().all(|r| !cur.ends_with(r.lhs.letters()));
            if ok {
                go(spec, cur, min, max, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(spec, &mut Vec::new(), min, max, &mut out);
    out.sort();
    out
}

/// Normalized sections of a level-1 stabilizing word, or `None` if `w`
/// moves the first level.
fn stabilizer_sections(spec: &SelfSimilarSpec, w: &Word) -> Option<Vec<Word>> {
    let f = spec.wreath_decompose(w);
    f.top.is_identity().then(|| f.sections.iter().map(|s| spec.normalize(s)).collect())
}

pub fn build_flag_table(spec: &SelfSimilarSpec, bound: usize) -> Result<FlagTable> {
    build_flag_table_in_order(spec, bound, None)
}

/// As [`build_flag_table`], sweeping words in an order shuffled by `seed`;
/// the fixpoint does not depend on it.
pub fn build_flag_table_in_order(spec: &SelfSimilarSpec, bound: usize, seed: Option<u64>) -> Result<FlagTable> {
    if bound == 0 {
        return Err(Error::InvalidInput("contraction constant must be at least 1".into()));
    }
    let words = normal_words(spec, 0, bound);
    let mut flags: HashMap<Word, Flag> = HashMap::new();
    let mut pending: Vec<(Word, Vec<Word>)> = Vec::new();
    for w in words {
        if w.is_identity() {
            flags.insert(w, Flag::Trivial);
            continue;
        }
        match stabilizer_sections(spec, &w) {
            None => {
                flags.insert(w, Flag::Nontrivial);
            }
            Some(secs) => {
                if let Some(s) = secs.iter().find(|s| s.len() > bound) {
                    return Err(Error::ContractionViolation {
                        word: spec.alphabet().format(&w),
                        section_len: s.len(),
                        bound,
                    });
                }
                pending.push((w, secs));
            }
        }
    }
    if let Some(seed) = seed {
        pending.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    loop {
        let mut changed = false;
        pending.retain(|(w, secs)| {
            let f: Vec<Option<Flag>> = secs.iter().map(|s| flags.get(s).copied()).collect();
            let verdict = if f.contains(&Some(Flag::Nontrivial)) {
                Some(Flag::Nontrivial)
            } else if f.iter().all(|x| *x == Some(Flag::Trivial)) {
                Some(Flag::Trivial)
            } else {
                None
            };
            match verdict {
                Some(v) => {
                    flags.insert(w.clone(), v);
                    changed = true;
                    false
                }
                None => true,
            }
        });
        if !changed {
            break;
        }
    }
    // what is left stabilizes every level
    for (w, _) in pending {
        flags.insert(w, Flag::Trivial);
    }
    Ok(FlagTable { bound, flags })
}

/// Decision procedure with a flag table and memoized recursion.
pub struct WordProblem<'a> {
    spec: &'a SelfSimilarSpec,
    table: FlagTable,
    memo: HashMap<Word, bool>,
    limit: usize,
}

impl<'a> WordProblem<'a> {
    pub fn new(spec: &'a SelfSimilarSpec, bound: usize) -> Result<Self> {
        Ok(Self::with_table(spec, build_flag_table(spec, bound)?))
    }

    /// Uses the spec's stored contraction constant.
    pub fn for_spec(spec: &'a SelfSimilarSpec) -> Result<Self> {
        let d = spec
            .contraction
            .ok_or_else(|| Error::InvalidInput("no contraction constant recorded".into()))?;
        Self::new(spec, d)
    }

    pub fn with_table(spec: &'a SelfSimilarSpec, table: FlagTable) -> Self {
        WordProblem { spec, table, memo: HashMap::new(), limit: DEFAULT_RECURSION_LIMIT }
    }

    pub fn with_recursion_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn table(&self) -> &FlagTable {
        &self.table
    }

    pub fn is_trivial(&mut self, w: &Word) -> Result<bool> {
        self.spec.alphabet().check_word(w)?;
        let mut stack = HashSet::new();
        Ok(self.solve(w, 0, &mut stack)?.0)
    }

    /// Returns the verdict and whether it leaned on a word still on the
    /// recursion stack (such verdicts are not memoized).
    fn solve(&mut self, w: &Word, depth: usize, stack: &mut HashSet<Word>) -> Result<(bool, bool)> {
        if depth > self.limit {
            return Err(Error::RecursionLimit(self.limit));
        }
        let w = self.spec.normalize(w);
        if w.len() <= self.table.bound {
            return Ok((self.table.get(&w) != Some(Flag::Nontrivial), false));
        }
        if let Some(&v) = self.memo.get(&w) {
            return Ok((v, false));
        }
        if stack.contains(&w) {
            return Ok((true, true));
        }
        let Some(secs) = stabilizer_sections(self.spec, &w) else {
            self.memo.insert(w, false);
            return Ok((false, false));
        };
        stack.insert(w.clone());
        let mut assumed = false;
        let mut verdict = true;
        for s in &secs {
            let (v, a) = self.solve(s, depth + 1, stack)?;
            assumed |= a;
            if !v {
                verdict = false;
                assumed = false;
                break;
            }
        }
        stack.remove(&w);
        if !verdict || !assumed {
            self.memo.insert(w, verdict);
        }
        Ok((verdict, assumed))
    }
}

pub fn is_trivial(spec: &SelfSimilarSpec, table: &FlagTable, w: &Word) -> Result<bool> {
    WordProblem::with_table(spec, table.clone()).is_trivial(w)
}

/// Evidence (not proof) that sections of stabilizing words shrink beyond D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionCertificate {
    pub bound: usize,
    pub checked_length: usize,
    pub checked_words: usize,
    pub violations: Vec<Word>,
}

impl ContractionCertificate {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const MAX_REPORTED_VIOLATIONS: usize = 32;

pub fn check_contraction(spec: &SelfSimilarSpec, bound: usize, max_length: usize) -> ContractionCertificate {
    let mut cert = ContractionCertificate { bound, checked_length: max_length, checked_words: 0, violations: vec![] };
    if max_length <= bound {
        return cert;
    }
    for w in normal_words(spec, bound + 1, max_length) {
        if let Some(secs) = stabilizer_sections(spec, &w) {
            cert.checked_words += 1;
            if secs.iter().any(|s| s.len() >= w.len()) && cert.violations.len() < MAX_REPORTED_VIOLATIONS {
                cert.violations.push(w);
            }
        }
    }
    cert
}
