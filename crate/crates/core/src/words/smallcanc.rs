use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::Word;
use crate::error::{Error, Result};

/// A rational `num/den` in (0,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lambda {
    pub num: u64,
    pub den: u64,
}

impl Lambda {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num == 0 || num >= den {
            return Err(Error::InvalidInput(format!("λ = {num}/{den} is not in (0,1)")));
        }
        Ok(Lambda { num, den })
    }
}

impl FromStr for Lambda {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("expected a fraction p/q, got `{s}`"));
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        Lambda::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?)
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A common prefix of two distinct members of the symmetrized closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub piece: Word,
    pub u: Word,
    pub v: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallCancellation {
    pub holds: bool,
    pub witness: Option<Piece>,
    pub closure_size: usize,
    pub longest_piece: usize,
}

/// Cyclic conjugates of the cyclic cores of `ws` and of their inverses.
pub fn symmetrized_closure(ws: &[Word]) -> Result<BTreeSet<Word>> {
    let mut out = BTreeSet::new();
    for w in ws {
        let (core, _) = w.cyclic_reduce();
        if core.is_identity() {
            return Err(Error::InvalidInput("small cancellation needs nontrivial words".into()));
        }
        let inv = core.inverse();
        for k in 0..core.len() {
            out.insert(core.rotate(k));
            out.insert(inv.rotate(k));
        }
    }
    Ok(out)
}

fn common_prefix(u: &Word, v: &Word) -> usize {
    u.letters().iter().zip(v.letters()).take_while(|(a, b)| a == b).count()
}

/// Checks C′(λ): every piece between distinct `u, v` of the symmetrized
/// closure is shorter than `λ·min(|u|,|v|)`.
pub fn check_small_cancellation(ws: &[Word], lambda: Lambda) -> Result<SmallCancellation> {
    let closure: Vec<Word> = symmetrized_closure(ws)?.into_iter().collect();
    let mut witness = None;
    let mut longest = 0;
    for (i, u) in closure.iter().enumerate() {
        for v in &closure[i + 1..] {
            let p = common_prefix(u, v);
            longest = longest.max(p);
            let m = u.len().min(v.len()) as u64;
            if witness.is_none() && p as u64 * lambda.den >= lambda.num * m {
                witness = Some(Piece {
                    piece: Word::from_reduced(u.letters()[..p].to_vec()),
                    u: u.clone(),
                    v: v.clone(),
                });
            }
        }
    }
    Ok(SmallCancellation {
        holds: witness.is_none(),
        witness,
        closure_size: closure.len(),
        longest_piece: longest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_word;
    use crate::words::Alphabet;

    fn xy(s: &str) -> Word {
        parse_word(&Alphabet::new(&["x", "y"]).unwrap(), s).unwrap()
    }

    #[test]
    fn vacuous() {
        let r = check_small_cancellation(&[], Lambda::new(1, 6).unwrap()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn triangle_sevens() {
        let ws = [xy("x^7"), xy("y^7"), xy("(x y)^7")];
        let r = check_small_cancellation(&ws, Lambda::new(1, 6).unwrap()).unwrap();
        assert!(r.holds);
        assert_eq!(r.longest_piece, 1);
    }

    #[test]
    fn commutator_fails() {
        let r = check_small_cancellation(&[xy("[x,y]")], "1/6".parse().unwrap()).unwrap();
        assert!(!r.holds);
        let p = r.witness.unwrap();
        assert_eq!(p.piece.len(), 1);
        assert_ne!(p.u, p.v);
    }

    #[test]
    fn rejects_trivial_words_and_bad_lambda() {
        assert!(check_small_cancellation(&[Word::identity()], Lambda::new(1, 6).unwrap()).is_err());
        assert!(check_small_cancellation(&[xy("x y x^-1")], Lambda::new(1, 6).unwrap()).is_ok());
        assert!(Lambda::new(7, 6).is_err());
        assert!("1/0".parse::<Lambda>().is_err());
    }
}
