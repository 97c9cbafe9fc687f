use super::{Alphabet, Word};
use crate::error::{Error, Result};

/// A free-group endomorphism given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    pub name: String,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(name: impl Into<String>, images: Vec<Word>) -> Self {
        Endomorphism { name: name.into(), images }
    }

    pub fn identity(name: impl Into<String>, rank: usize) -> Self {
        Endomorphism::new(name, (0..rank as u32).map(Word::gen).collect())
    }

    /// Builds an endomorphism from the listed images; unlisted generators are fixed.
    pub fn from_pairs(name: impl Into<String>, rank: usize, pairs: Vec<(u32, Word)>) -> Self {
        let mut e = Endomorphism::identity(name, rank);
        for (g, w) in pairs {
            e.images[g as usize] = w;
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, g: u32) -> &Word {
        &self.images[g as usize]
    }

    pub fn set_image(&mut self, g: u32, w: Word) {
        self.images[g as usize] = w;
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| *w == Word::gen(i as u32))
    }

    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        if self.images.len() != alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "endomorphism `{}` has {} images for {} generators",
                self.name,
                self.images.len(),
                alphabet.len()
            )));
        }
        self.images.iter().try_for_each(|w| alphabet.check_word(w))
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(|g| self.images[g as usize].clone())
    }

    pub fn try_apply(&self, w: &Word) -> Result<Word> {
        if let Some(g) = w.max_gen() {
            if g as usize >= self.images.len() {
                return Err(Error::GeneratorOutOfRange { index: g, rank: self.images.len() });
            }
        }
        Ok(self.apply(w))
    }

    /// `(self ∘ other)(s) = self(other(s))`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if self.rank() != other.rank() {
            return Err(Error::AlphabetMismatch(format!(
                "cannot compose `{}` (rank {}) with `{}` (rank {})",
                self.name,
                self.rank(),
                other.name,
                other.rank()
            )));
        }
        Ok(Endomorphism {
            name: format!("{}∘{}", self.name, other.name),
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        })
    }

    /// Same map on a larger alphabet, fixing the generators at `rank..new_rank`
    /// after the existing ones are relabelled by `map`.
    pub fn extend(&self, map: &[u32], new_rank: usize) -> Endomorphism {
        let mut e = Endomorphism::identity(self.name.clone(), new_rank);
        for (g, w) in self.images.iter().enumerate() {
            e.images[map[g] as usize] = w.relabel(map);
        }
        e
    }
}
