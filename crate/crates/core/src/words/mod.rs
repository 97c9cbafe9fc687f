//! Free-group words over a finite alphabet.
//!
//! Words are stored freely reduced at all times, so equality of elements of
//! the free group is structural equality.

mod endo;
mod expr;
mod smallcanc;

pub use endo::Endomorphism;
pub use expr::Expr;
pub use smallcanc::{check_small_cancellation, Lambda, Piece, SmallCancellation};

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// A generator or its formal inverse. The derived order puts `g` before `g⁻¹`
/// before `g+1`, which is the letter order used for shortlex comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub inv: bool,
}

impl Letter {
    pub const fn new(gen: u32, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub const fn pos(gen: u32) -> Self {
        Letter { gen, inv: false }
    }

    pub const fn neg(gen: u32) -> Self {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    /// Dense index in `0..2*rank`.
    pub fn index(self) -> usize {
        2 * self.gen as usize + self.inv as usize
    }

    pub fn from_index(i: usize) -> Self {
        Letter { gen: (i / 2) as u32, inv: i % 2 == 1 }
    }
}

/// A freely reduced word. Ordered shortlex.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: u32) -> Self {
        Word(vec![Letter::pos(g)])
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Wraps letters that are already known to be reduced.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_gen(&self) -> Option<u32> {
        self.0.iter().map(|l| l.gen).max()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut k = 0;
        let (a, b) = (&self.0, &other.0);
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[k].inverse() {
            k += 1;
        }
        let mut v = Vec::with_capacity(a.len() + b.len() - 2 * k);
        v.extend_from_slice(&a[..a.len() - k]);
        v.extend_from_slice(&b[k..]);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let (core, conj) = base.cyclic_reduce();
        // conj⁻¹ core^n conj, built without intermediate reduction
        let mut v = conj.inverse().0;
        for _ in 0..n.unsigned_abs() {
            v.extend_from_slice(&core.0);
        }
        v.extend_from_slice(&conj.0);
        Word::reduce(v)
    }

    /// `self^h = h⁻¹ · self · h`.
    pub fn conj(&self, h: &Word) -> Word {
        h.inverse().mul(self).mul(h)
    }

    /// `[u,v] = u⁻¹v⁻¹uv`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.inverse().mul(&v.inverse()).mul(u).mul(v)
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(ws: I) -> Word {
        Word::reduce(ws.into_iter().flat_map(|w| w.0.iter().copied()))
    }

    /// Splits `w = c⁻¹ · core · c` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.0.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.0[k] == self.0[n - 1 - k].inverse() {
            k += 1;
        }
        let core = Word(self.0[k..n - k].to_vec());
        let conj = Word(self.0[..k].to_vec()).inverse();
        (core, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(a), Some(b)) => self.0.len() == 1 || *a != b.inverse(),
            _ => true,
        }
    }

    /// Rotation by `k` letters; only meaningful on cyclically reduced words.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return Word::identity();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Canonical representative of the conjugacy class of `w^{±1}`: the
    /// shortlex-least rotation of the cyclic core or of its inverse.
    pub fn cyclic_canonical(&self) -> Word {
        let (core, _) = self.cyclic_reduce();
        let inv = core.inverse();
        let a = core.rotate(least_rotation(&core.0));
        let b = inv.rotate(least_rotation(&inv.0));
        a.min(b)
    }

    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in &self.0 {
            v[l.gen as usize] += l.sign();
        }
        v
    }

    /// Substitute each generator `g` by `f(g)`; inverse letters get the
    /// inverted image.
    pub fn substitute<F: Fn(u32) -> Word>(&self, f: F) -> Word {
        let mut v = Vec::new();
        for l in &self.0 {
            let img = f(l.gen);
            if l.inv {
                v.extend(img.0.iter().rev().map(|x| x.inverse()));
            } else {
                v.extend_from_slice(&img.0);
            }
        }
        Word::reduce(v)
    }

    /// Renumbers generators through `map` (old index → new index).
    pub fn relabel(&self, map: &[u32]) -> Word {
        Word::reduce(self.0.iter().map(|l| Letter::new(map[l.gen as usize], l.inv)))
    }

    /// Uniformly random reduced word of exactly `len` letters over `rank` generators.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, rank: usize, len: usize) -> Word {
        assert!(rank > 0 || len == 0);
        let mut v: Vec<Letter> = Vec::with_capacity(len);
        while v.len() < len {
            let l = Letter::from_index(rng.gen_range(0..2 * rank));
            if v.last() != Some(&l.inverse()) {
                v.push(l);
            }
        }
        Word(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "g{}{}", l.gen, if l.inv { "⁻" } else { "" })?;
        }
        Ok(())
    }
}

/// Generator names. Identifier syntax: `[A-Za-z_][A-Za-z0-9_']*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

/// Start of the lexicographically least rotation, in linear time.
fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i = (i + k + 1).max(j + 1);
                k = 0;
            }
            Ordering::Less => {
                j = (j + k + 1).max(i + 1);
                k = 0;
            }
        }
    }
    i.min(j)
}

pub fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut index = HashMap::new();
        let mut out = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(Error::InvalidAlphabet(format!("`{n}` is not an identifier")));
            }
            if index.insert(n.to_string(), i as u32).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate generator `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(Alphabet { names: out, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: u32) -> &str {
        &self.names[g as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn gen(&self, name: &str) -> Result<Word> {
        self.index_of(name)
            .map(Word::gen)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Reduces a raw letter sequence after checking generator indices.
    pub fn reduce(&self, letters: &[Letter]) -> Result<Word> {
        for l in letters {
            self.check_gen(l.gen)?;
        }
        Ok(Word::reduce(letters.iter().copied()))
    }

    pub fn check_gen(&self, g: u32) -> Result<()> {
        if (g as usize) < self.names.len() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { index: g, rank: self.names.len() })
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_gen() {
            Some(g) => self.check_gen(g),
            None => Ok(()),
        }
    }

    /// Canonical text form: space separated, runs compressed to `x^k`,
    /// `1` for the identity.
    pub fn format(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".into();
        }
        let mut out = String::new();
        let ls = w.letters();
        let mut i = 0;
        while i < ls.len() {
            let mut j = i;
            while j < ls.len() && ls[j] == ls[i] {
                j += 1;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(self.name(ls[i].gen));
            let k = (j - i) as i64 * ls[i].sign();
            if k != 1 {
                out.push_str(&format!("^{k}"));
            }
            i = j;
        }
        out
    }

    /// Appends the generators of `other`, renaming clashes with a numeric
    /// suffix. Returns the merged alphabet and the index map for `other`.
    pub fn disjoint_union(&self, other: &Alphabet) -> (Alphabet, Vec<u32>) {
        let mut names = self.names.clone();
        let mut map = Vec::with_capacity(other.len());
        for n in &other.names {
            let mut cand = n.clone();
            let mut k = 2;
            while names.contains(&cand) || (cand != *n && other.contains(&cand)) {
                cand = format!("{n}{k}");
                k += 1;
            }
            map.push(names.len() as u32);
            names.push(cand);
        }
        (Alphabet::new(&names).expect("renamed names stay distinct identifiers"), map)
    }

    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Alphabet> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Alphabet::new(&names)
    }
}
