use std::collections::VecDeque;

use super::LPresentation;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Endomorphism, Letter, Word};

/// Right action of the generators on cosets `0..n`; coset 0 is the subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetAction {
    perms: Vec<Vec<u32>>,
    invs: Vec<Vec<u32>>,
}

impl CosetAction {
    pub fn new(perms: Vec<Vec<u32>>) -> Result<Self> {
        let n = perms.first().map_or(1, |p| p.len());
        let mut invs = Vec::with_capacity(perms.len());
        for p in &perms {
            if p.len() != n {
                return Err(Error::InconsistentAction("generators act on different coset counts".into()));
            }
            let mut inv = vec![u32::MAX; n];
            for (i, &x) in p.iter().enumerate() {
                match inv.get_mut(x as usize) {
                    Some(slot) if *slot == u32::MAX => *slot = i as u32,
                    _ => return Err(Error::InconsistentAction(format!("{p:?} is not a permutation"))),
                }
            }
            invs.push(inv);
        }
        Ok(CosetAction { perms, invs })
    }

    pub fn trivial(rank: usize) -> Self {
        CosetAction { perms: vec![vec![0]; rank], invs: vec![vec![0]; rank] }
    }

    pub fn cosets(&self) -> usize {
        self.perms.first().map_or(1, |p| p.len())
    }

    pub fn rank(&self) -> usize {
        self.perms.len()
    }

    pub fn step(&self, c: usize, l: Letter) -> usize {
        let t = if l.inv { &self.invs } else { &self.perms };
        t[l.gen as usize][c] as usize
    }

    pub fn trace(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, &l| self.step(c, l))
    }

    /// Shortlex-least representatives found breadth first; prefix closed.
    pub fn schreier_transversal(&self) -> Result<Vec<Word>> {
        let n = self.cosets();
        let mut reps: Vec<Option<Word>> = vec![None; n];
        reps[0] = Some(Word::identity());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for i in 0..2 * self.rank() {
                let l = Letter::from_index(i);
                let d = self.step(c, l);
                if reps[d].is_none() {
                    reps[d] = Some(reps[c].as_ref().unwrap().mul(&Word::letter(l)));
                    queue.push_back(d);
                }
            }
        }
        reps.into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InconsistentAction("action is not transitive".into()))
    }
}

struct Rewriter<'a> {
    action: &'a CosetAction,
    /// Symbol index of (coset, generator), or `None` when the Schreier
    /// generator is freely trivial.
    symbol: Vec<Option<u32>>,
    rank: usize,
}

impl Rewriter<'_> {
    fn rewrite_from(&self, start: usize, w: &Word) -> (Word, usize) {
        let mut c = start;
        let mut out = Vec::new();
        for &l in w.letters() {
            if l.inv {
                let d = self.action.step(c, l);
                if let Some(s) = self.symbol[d * self.rank + l.gen as usize] {
                    out.push(Letter::neg(s));
                }
                c = d;
            } else {
                if let Some(s) = self.symbol[c * self.rank + l.gen as usize] {
                    out.push(Letter::pos(s));
                }
                c = self.action.step(c, l);
            }
        }
        (Word::reduce(out), c)
    }

    fn rewrite_closed(&self, w: &Word, what: &str) -> Result<Word> {
        let (r, end) = self.rewrite_from(0, w);
        if end != 0 {
            return Err(Error::InconsistentAction(format!("{what} does not lie in the subgroup")));
        }
        Ok(r)
    }
}

impl LPresentation {
    /// Reidemeister–Schreier presentation of the subgroup fixing coset 0.
    /// Schreier generators are named `{s}_{i}` for coset `i`.
    pub fn subgroup_presentation(&self, action: &CosetAction, transversal: &[Word]) -> Result<LPresentation> {
        let n = action.cosets();
        let k = self.rank();
        if action.rank() != k {
            return Err(Error::InconsistentAction(format!(
                "action has {} generators, presentation {k}",
                action.rank()
            )));
        }
        if transversal.len() != n || transversal.first().is_none_or(|t| !t.is_identity()) {
            return Err(Error::InconsistentAction(
                "transversal needs one word per coset, starting with the identity".into(),
            ));
        }
        for (i, t) in transversal.iter().enumerate() {
            self.alphabet.check_word(t)?;
            if action.trace(0, t) != i {
                return Err(Error::InconsistentAction(format!("transversal word {i} does not reach coset {i}")));
            }
        }
        let mut names = Vec::new();
        let mut symbol = vec![None; n * k];
        let mut schreier = Vec::new();
        for i in 0..n {
            for s in 0..k {
                let l = Letter::pos(s as u32);
                let j = action.step(i, l);
                let w = transversal[i].mul(&Word::letter(l)).mul(&transversal[j].inverse());
                if !w.is_identity() {
                    symbol[i * k + s] = Some(names.len() as u32);
                    names.push(format!("{}_{i}", self.alphabet.name(s as u32)));
                    schreier.push(w);
                }
            }
        }
        let rw = Rewriter { action, symbol, rank: k };
        let alphabet = Alphabet::new(&names)?;
        let mut fixed = Vec::new();
        // t_j rewritten from coset 0 spells t_j · t_j⁻¹
        for t in transversal {
            fixed.push(rw.rewrite_from(0, t).0);
        }
        for q in &self.fixed {
            for t in transversal {
                fixed.push(rw.rewrite_closed(&t.mul(q).mul(&t.inverse()), "a fixed relator")?);
            }
        }
        fixed.retain(|w| !w.is_identity());
        let mut iterated = Vec::new();
        for r in &self.iterated {
            for t in transversal {
                let w = rw.rewrite_closed(&t.mul(r).mul(&t.inverse()), "an iterated relator")?;
                if !w.is_identity() {
                    iterated.push(w);
                }
            }
        }
        let endos = self
            .endos
            .iter()
            .map(|e| {
                let imgs = schreier
                    .iter()
                    .map(|w| rw.rewrite_closed(&e.apply(w), &format!("the image under `{}`", e.name)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Endomorphism::new(e.name.clone(), imgs))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LPresentation { alphabet, fixed, endos, iterated })
    }
}
