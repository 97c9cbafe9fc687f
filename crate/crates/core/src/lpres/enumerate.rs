use std::collections::HashSet;

use super::LPresentation;
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DedupMode {
    /// Identical reduced words only.
    Exact,
    /// Also identify cyclic conjugates and inverses.
    #[default]
    Cyclic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Fixed(usize),
    /// `phis` lists endomorphism indices in application order: the word is
    /// `φ_{phis[k-1]}(…φ_{phis[0]}(R[index]))`.
    Iterated { index: usize, phis: Vec<usize> },
}

impl Origin {
    pub fn depth(&self) -> usize {
        match self {
            Origin::Fixed(_) => 0,
            Origin::Iterated { phis, .. } => phis.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub word: Word,
    pub origin: Origin,
}

/// Breadth-first state of the Φ*-orbit of R. Orbit words seen before are
/// not expanded again: their descendants are reached sooner through the
/// earlier copy. Fixed relators only suppress output, never expansion.
#[derive(Clone, Debug)]
pub struct EnumerationFrontier {
    pub depth: usize,
    mode: DedupMode,
    emitted_keys: HashSet<Word>,
    orbit_keys: HashSet<Word>,
    emitted: Vec<Relator>,
    frontier: Vec<(Word, Vec<usize>, usize)>,
}

impl EnumerationFrontier {
    pub fn new(l: &LPresentation, mode: DedupMode) -> Self {
        let mut f = EnumerationFrontier {
            depth: 0,
            mode,
            emitted_keys: HashSet::new(),
            orbit_keys: HashSet::new(),
            emitted: Vec::new(),
            frontier: Vec::new(),
        };
        for (i, q) in l.fixed.iter().enumerate() {
            if !q.is_identity() && f.emitted_keys.insert(f.key(q)) {
                f.emitted.push(Relator { word: q.clone(), origin: Origin::Fixed(i) });
            }
        }
        for (i, r) in l.iterated.iter().enumerate() {
            f.visit(r.clone(), vec![], i);
        }
        f
    }

    fn key(&self, w: &Word) -> Word {
        match self.mode {
            DedupMode::Exact => w.clone(),
            DedupMode::Cyclic => w.cyclic_canonical(),
        }
    }

    fn visit(&mut self, w: Word, phis: Vec<usize>, index: usize) {
        if w.is_identity() {
            return;
        }
        let k = self.key(&w);
        if !self.orbit_keys.insert(k.clone()) {
            return;
        }
        if self.emitted_keys.insert(k) {
            let origin = Origin::Iterated { index, phis: phis.clone() };
            self.emitted.push(Relator { word: w.clone(), origin });
        }
        self.frontier.push((w, phis, index));
    }

    /// One more layer of Φ-images. Returns the number of new relators.
    pub fn advance(&mut self, l: &LPresentation) -> usize {
        let before = self.emitted.len();
        for (w, phis, index) in std::mem::take(&mut self.frontier) {
            for (j, phi) in l.endos.iter().enumerate() {
                let mut p = phis.clone();
                p.push(j);
                self.visit(phi.apply(&w), p, index);
            }
        }
        self.depth += 1;
        self.emitted.len() - before
    }

    pub fn advance_to(&mut self, l: &LPresentation, depth: usize) {
        while self.depth < depth {
            self.advance(l);
        }
    }

    /// No further layer can produce anything new.
    pub fn is_exhausted(&self) -> bool {
        self.frontier.is_empty()
    }

    pub fn relators(&self) -> &[Relator] {
        &self.emitted
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.emitted.iter().map(|r| &r.word)
    }

    pub fn into_words(self) -> Vec<Word> {
        self.emitted.into_iter().map(|r| r.word).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_word;
    use crate::words::{Alphabet, Endomorphism};

    fn lamplighter() -> LPresentation {
        let a = Alphabet::new(&["a", "b", "t"]).unwrap();
        let p = |s| parse_word(&a, s).unwrap();
        let phi = Endomorphism::from_pairs("phi", 3, vec![(1, p("b^t"))]);
        LPresentation::new(a.clone(), vec![p("a^2"), p("a^-1 b")], vec![phi], vec![p("[a,b]")])
            .unwrap()
    }

    #[test]
    fn lamplighter_depth_two() {
        let l = lamplighter();
        let a = &l.alphabet;
        let p = |s| parse_word(a, s).unwrap();
        let got = l.enumerate_relators(2, DedupMode::Exact);
        let want = vec![p("a^2"), p("a^-1 b"), p("[a,b]"), p("[a,b^t]"), p("[a, b^(t^2)]")];
        assert_eq!(got, want);
    }

    #[test]
    fn depth_zero_is_q_and_r() {
        let l = lamplighter();
        let mut w = l.fixed.clone();
        w.extend(l.iterated.clone());
        assert_eq!(l.enumerate_relators(0, DedupMode::Exact), w);
    }

    #[test]
    fn origins_and_monotonicity() {
        let l = lamplighter();
        let mut f = EnumerationFrontier::new(&l, DedupMode::Cyclic);
        f.advance_to(&l, 3);
        let last = f.relators().last().unwrap();
        assert_eq!(last.origin, Origin::Iterated { index: 0, phis: vec![0, 0, 0] });
        let d2 = l.enumerate_relators(2, DedupMode::Cyclic);
        let d3 = l.enumerate_relators(3, DedupMode::Cyclic);
        assert!(d2.iter().all(|w| d3.contains(w)));
    }

    #[test]
    fn images_of_fixed_duplicates_still_expand() {
        let a = Alphabet::new(&["x", "y"]).unwrap();
        let p = |s| parse_word(&a, s).unwrap();
        let phi = Endomorphism::from_pairs("phi", 2, vec![(0, p("y"))]);
        let l = LPresentation::new(a.clone(), vec![p("x")], vec![phi.clone()], vec![p("x")]).unwrap();
        let phi2 = Endomorphism::new("s", vec![p("x y"), p("y")]);
        let l2 = LPresentation::new(a.clone(), vec![p("x y")], vec![phi2], vec![p("x")]).unwrap();
        assert_eq!(l.enumerate_relators(1, DedupMode::Exact), vec![p("x"), p("y")]);
        assert_eq!(l2.enumerate_relators(2, DedupMode::Exact), vec![p("x y"), p("x"), p("x y^2")]);
    }

    #[test]
    fn trivial_images_dropped() {
        let a = Alphabet::new(&["x"]).unwrap();
        let kill = Endomorphism::new("k", vec![Word::identity()]);
        let l = LPresentation::new(a, vec![], vec![kill], vec![Word::gen(0)]).unwrap();
        let mut f = EnumerationFrontier::new(&l, DedupMode::Exact);
        f.advance(&l);
        assert_eq!(f.relators().len(), 1);
        assert!(f.is_exhausted());
    }
}
