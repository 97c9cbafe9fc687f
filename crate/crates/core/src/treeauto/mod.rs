//! Self-similar groups acting on the d-regular rooted tree.
//!
//! Conventions: right action, `g = (g₁,…,g_d)π` acts by
//! `(x w)^g = x^π w^{g_x}`, so `(uv)_i = u_i · v_{i^{π_u}}`.
//! Level-n vertices are ordered lexicographically (big-endian base d).

mod perm;
mod schreier_sims;

pub use perm::Perm;
pub use schreier_sims::{PermGroup, StabChain};

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// Default cap on `dⁿ` for level-quotient computations.
pub const DEFAULT_POINT_BOUND: usize = 59049;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenRecursion {
    pub sections: Vec<Word>,
    pub top: Perm,
}

/// `lhs → rhs`; both sides must define the same tree automorphism and `rhs`
/// must be shortlex-smaller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfSimilarSpec {
    degree: usize,
    alphabet: Alphabet,
    gens: Vec<GenRecursion>,
    rules: Vec<RewriteRule>,
    pub contraction: Option<usize>,
    pub branching: Vec<Word>,
}

/// A wreath-recursion element: sections and top permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathForm {
    pub sections: Vec<Word>,
    pub top: Perm,
}

impl SelfSimilarSpec {
    pub fn new(degree: usize, alphabet: Alphabet, gens: Vec<GenRecursion>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidInput("tree degree must be at least 2".into()));
        }
        if gens.len() != alphabet.len() {
            return Err(Error::InvalidInput(format!(
                "{} recursions for {} generators",
                gens.len(),
                alphabet.len()
            )));
        }
        for (g, r) in gens.iter().enumerate() {
            if r.sections.len() != degree || r.top.degree() != degree {
                return Err(Error::InvalidInput(format!(
                    "generator `{}` needs {degree} sections and a degree-{degree} permutation",
                    alphabet.name(g as u32)
                )));
            }
            for s in &r.sections {
                alphabet.check_word(s)?;
            }
        }
        Ok(SelfSimilarSpec { degree, alphabet, gens, rules: vec![], contraction: None, branching: vec![] })
    }

    pub fn with_rules(mut self, rules: Vec<RewriteRule>) -> Result<Self> {
        for r in &rules {
            self.alphabet.check_word(&r.lhs)?;
            self.alphabet.check_word(&r.rhs)?;
            if r.rhs >= r.lhs {
                return Err(Error::InvalidInput(format!(
                    "rewrite rule {} -> {} does not decrease in shortlex order",
                    self.alphabet.format(&r.lhs),
                    self.alphabet.format(&r.rhs)
                )));
            }
        }
        self.rules = rules;
        Ok(self)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn recursion(&self, g: u32) -> &GenRecursion {
        &self.gens[g as usize]
    }

    pub fn recursions(&self) -> &[GenRecursion] {
        &self.gens
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    fn letter_form(&self, l: Letter) -> (Vec<Word>, Perm) {
        let r = &self.gens[l.gen as usize];
        if !l.inv {
            return (r.sections.clone(), r.top.clone());
        }
        let inv = r.top.inverse();
        let sections = (0..self.degree).map(|p| r.sections[inv.apply(p)].inverse()).collect();
        (sections, inv)
    }

    /// ψ extended to the whole group.
    pub fn wreath_decompose(&self, w: &Word) -> WreathForm {
        let d = self.degree;
        let mut raw: Vec<Vec<Letter>> = vec![Vec::new(); d];
        let mut top = Perm::identity(d);
        for &l in w.letters() {
            let (secs, p) = self.letter_form(l);
            // (u g)_i = u_i g_{i^{top_u}}
            for (i, r) in raw.iter_mut().enumerate() {
                r.extend_from_slice(secs[top.apply(i)].letters());
            }
            top = top.then(&p);
        }
        WreathForm { sections: raw.into_iter().map(Word::reduce).collect(), top }
    }

    pub fn top(&self, w: &Word) -> Perm {
        w.letters().iter().fold(Perm::identity(self.degree), |p, &l| {
            let t = &self.gens[l.gen as usize].top;
            p.then(&if l.inv { t.inverse() } else { t.clone() })
        })
    }

    /// Image of a vertex (0-based digits) under `w`.
    pub fn act(&self, w: &Word, v: &[u32]) -> Result<Vec<u32>> {
        self.alphabet.check_word(w)?;
        if let Some(&x) = v.iter().find(|&&x| x as usize >= self.degree) {
            return Err(Error::InvalidInput(format!("vertex digit {} out of range", x + 1)));
        }
        let mut out = Vec::with_capacity(v.len());
        let mut cur = w.clone();
        for &x in v {
            let f = self.wreath_decompose(&cur);
            out.push(f.top.apply(x as usize) as u32);
            cur = f.sections[x as usize].clone();
        }
        Ok(out)
    }

    /// Applies the rewrite rules and free reduction to a fixpoint.
    pub fn normalize(&self, w: &Word) -> Word {
        if self.rules.is_empty() {
            return w.clone();
        }
        let mut cur: Vec<Letter> = w.letters().to_vec();
        'outer: loop {
            for r in &self.rules {
                let lhs = r.lhs.letters();
                if let Some(pos) = cur.windows(lhs.len()).position(|s| s == lhs) {
                    let mut next = cur[..pos].to_vec();
                    next.extend_from_slice(r.rhs.letters());
                    next.extend_from_slice(&cur[pos + lhs.len()..]);
                    cur = Word::reduce(next).into_letters();
                    continue 'outer;
                }
            }
            return Word::reduce(cur);
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| {
            let lhs = r.lhs.letters();
            !w.letters().windows(lhs.len()).any(|s| s == lhs)
        })
    }

    /// Permutations of Σⁿ induced by each generator, for n = 0..=level.
    pub fn level_action(&self, level: usize) -> Result<LevelAction> {
        LevelAction::build(self, level, usize::MAX)
    }

    pub fn level_permutation(&self, w: &Word, n: usize) -> Result<Perm> {
        self.alphabet.check_word(w)?;
        Ok(self.level_action(n)?.word(w))
    }

    /// Least level ≤ `max_level` on which `w` acts nontrivially.
    pub fn first_nontrivial_level(&self, w: &Word, max_level: usize) -> Option<usize> {
        LevelOracle::new(self).first_nontrivial_level(w, max_level)
    }

    /// Order of the group induced on Σⁿ, via a stabilizer chain.
    pub fn level_quotient_order(&self, n: usize, bound: usize) -> Result<BigUint> {
        let action = LevelAction::build(self, n, bound)?;
        let gens: Vec<Perm> = (0..self.alphabet.len() as u32)
            .map(|g| action.generator(g).clone())
            .collect();
        Ok(PermGroup::new(action.points(), gens).order())
    }

    /// Checks every rewrite rule against the action on Σⁿ.
    pub fn check_rules(&self, n: usize) -> Result<()> {
        let mut oracle = LevelOracle::new(self);
        for r in &self.rules {
            let w = r.lhs.mul(&r.rhs.inverse());
            if oracle.first_nontrivial_level(&w, n).is_some() {
                return Err(Error::InvalidInput(format!(
                    "rewrite rule {} -> {} changes the tree action",
                    self.alphabet.format(&r.lhs),
                    self.alphabet.format(&r.rhs)
                )));
            }
        }
        Ok(())
    }
}

/// Level-n permutations of every generator, built bottom-up.
#[derive(Clone, Debug)]
pub struct LevelAction {
    degree: usize,
    level: usize,
    gens: Vec<Perm>,
    invs: Vec<Perm>,
}

impl LevelAction {
    pub fn build(spec: &SelfSimilarSpec, level: usize, bound: usize) -> Result<Self> {
        let d = spec.degree;
        let points = d
            .checked_pow(level as u32)
            .filter(|&p| p <= bound)
            .ok_or_else(|| Error::BoundExceeded(format!("{d}^{level} points exceeds {bound}")))?;
        let _ = points;
        let k = spec.alphabet.len();
        let mut cur = LevelAction {
            degree: d,
            level: 0,
            gens: vec![Perm::identity(1); k],
            invs: vec![Perm::identity(1); k],
        };
        for n in 1..=level {
            let block = d.pow(n as u32 - 1);
            let mut gens = Vec::with_capacity(k);
            for r in &spec.gens {
                let mut img = vec![0u32; block * d];
                for x in 0..d {
                    let below = cur.word(&r.sections[x]);
                    let base = (r.top.apply(x) * block) as u32;
                    for (y, &z) in below.images().iter().enumerate() {
                        img[x * block + y] = base + z;
                    }
                }
                gens.push(Perm::from_images(img).expect("level images form a permutation"));
            }
            let invs = gens.iter().map(Perm::inverse).collect();
            cur = LevelAction { degree: d, level: n, gens, invs };
        }
        Ok(cur)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn points(&self) -> usize {
        self.degree.pow(self.level as u32)
    }

    pub fn generator(&self, g: u32) -> &Perm {
        &self.gens[g as usize]
    }

    pub fn word(&self, w: &Word) -> Perm {
        let mut img: Vec<u32> = (0..self.points() as u32).collect();
        for l in w.letters() {
            let p = if l.inv { &self.invs[l.gen as usize] } else { &self.gens[l.gen as usize] };
            for x in img.iter_mut() {
                *x = p.images()[*x as usize];
            }
        }
        Perm::from_images(img).expect("composition of permutations")
    }
}

#[derive(Clone, Copy, Debug)]
enum Known {
    /// Acts trivially on Σⁿ for every n up to this level.
    TrivialTo(usize),
    FirstMoves(usize),
}

/// Memoized recursive evaluation of the action, cheaper than full level
/// permutations for deep levels. Uses free reduction only.
pub struct LevelOracle<'a> {
    spec: &'a SelfSimilarSpec,
    memo: HashMap<Word, Known>,
}

impl<'a> LevelOracle<'a> {
    pub fn new(spec: &'a SelfSimilarSpec) -> Self {
        LevelOracle { spec, memo: HashMap::new() }
    }

    pub fn first_nontrivial_level(&mut self, w: &Word, max_level: usize) -> Option<usize> {
        if w.is_identity() || max_level == 0 {
            return None;
        }
        match self.memo.get(w) {
            Some(Known::FirstMoves(l)) => return (*l <= max_level).then_some(*l),
            Some(Known::TrivialTo(l)) if *l >= max_level => return None,
            _ => {}
        }
        let f = self.spec.wreath_decompose(w);
        let res = if !f.top.is_identity() {
            Some(1)
        } else {
            let mut best: Option<usize> = None;
            for s in &f.sections {
                let cap = best.map_or(max_level - 1, |b| b - 2);
                if cap == 0 {
                    break;
                }
                if let Some(l) = self.first_nontrivial_level(s, cap) {
                    best = Some(l + 1);
                }
            }
            best
        };
        let known = match res {
            Some(l) => Known::FirstMoves(l),
            None => Known::TrivialTo(max_level),
        };
        self.memo.insert(w.clone(), known);
        res
    }

    pub fn is_identity_at(&mut self, w: &Word, level: usize) -> bool {
        self.first_nontrivial_level(w, level).is_none()
    }
}

/// Vertex index ↔ digit path at a given level.
pub fn vertex_index(d: usize, v: &[u32]) -> usize {
    v.iter().fold(0, |acc, &x| acc * d + x as usize)
}

pub fn vertex_path(d: usize, n: usize, mut i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    for k in (0..n).rev() {
        v[k] = (i % d) as u32;
        i /= d;
    }
    v
}

/// An L-presentation's generators realized as words in a self-similar group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeModel {
    pub spec: SelfSimilarSpec,
    pub embedding: Vec<Word>,
}

impl TreeModel {
    pub fn new(spec: SelfSimilarSpec, embedding: Vec<Word>) -> Result<Self> {
        for w in &embedding {
            spec.alphabet.check_word(w)?;
        }
        Ok(TreeModel { spec, embedding })
    }

    /// Embedding that maps each presentation generator to the spec
    /// generator of the same name.
    pub fn by_name(spec: SelfSimilarSpec, names: &Alphabet) -> Result<Self> {
        let emb = names.names().iter().map(|n| spec.alphabet.gen(n)).collect::<Result<_>>()?;
        Ok(TreeModel { spec, embedding: emb })
    }

    pub fn embed(&self, w: &Word) -> Word {
        w.substitute(|g| self.embedding[g as usize].clone())
    }

    pub fn is_identity_map(&self, names: &Alphabet) -> bool {
        self.embedding.len() == names.len()
            && names.names().iter().enumerate().all(|(i, n)| {
                self.spec.alphabet.index_of(n).map(Word::gen).as_ref() == Some(&self.embedding[i])
            })
    }
}
