//! Endomorphic presentations ⟨S | Q | Φ | R⟩ and their combinators.

mod combinators;
mod enumerate;
mod subgroup;
mod tietze;

pub use combinators::{ExtensionData, HnnGenerator};
pub use enumerate::{DedupMode, EnumerationFrontier, Origin, Relator};
pub use subgroup::CosetAction;
pub use tietze::TietzeMove;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Endomorphism, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPresentation {
    pub alphabet: Alphabet,
    pub fixed: Vec<Word>,
    pub endos: Vec<Endomorphism>,
    pub iterated: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePresentation {
    pub alphabet: Alphabet,
    pub relators: Vec<Word>,
}

impl LPresentation {
    pub fn new(
        alphabet: Alphabet,
        fixed: Vec<Word>,
        endos: Vec<Endomorphism>,
        iterated: Vec<Word>,
    ) -> Result<Self> {
        let l = LPresentation { alphabet, fixed, endos, iterated };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        for w in self.fixed.iter().chain(&self.iterated) {
            self.alphabet.check_word(w)?;
        }
        for e in &self.endos {
            e.check(&self.alphabet)?;
        }
        Ok(())
    }

    pub fn finite(p: FinitePresentation) -> Self {
        LPresentation { alphabet: p.alphabet, fixed: p.relators, endos: vec![], iterated: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    pub fn is_ascending(&self) -> bool {
        self.fixed.is_empty()
    }

    pub fn is_finite_presentation(&self) -> bool {
        self.endos.is_empty()
    }

    pub fn endo_index(&self, name: &str) -> Option<usize> {
        self.endos.iter().position(|e| e.name == name)
    }

    /// Q ∪ ⋃_{φ ∈ Φ*, |φ| ≤ depth} φ(R), breadth first.
    pub fn enumerate_relators(&self, depth: usize, mode: DedupMode) -> Vec<Word> {
        let mut f = EnumerationFrontier::new(self, mode);
        f.advance_to(self, depth);
        f.into_words()
    }

    /// The finite presentation obtained by truncating Φ* at `depth`.
    pub fn truncate(&self, depth: usize) -> FinitePresentation {
        FinitePresentation {
            alphabet: self.alphabet.clone(),
            relators: self.enumerate_relators(depth, DedupMode::Cyclic),
        }
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet.format(w)
    }

    pub(crate) fn check_same_alphabet(&self, ws: &[Word]) -> Result<()> {
        ws.iter().try_for_each(|w| {
            self.alphabet
                .check_word(w)
                .map_err(|e| Error::AlphabetMismatch(e.to_string()))
        })
    }
}

impl FinitePresentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            alphabet.check_word(r)?;
        }
        Ok(FinitePresentation { alphabet, relators })
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }
}
