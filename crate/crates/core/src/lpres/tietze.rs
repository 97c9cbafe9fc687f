use super::LPresentation;
use crate::error::{Error, Result};
use crate::words::{Endomorphism, Letter, Word};

/// Generator changes for ascending L-presentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TietzeMove {
    /// Replace `gen` by `new_name = gen · by^{±1}` (so `gen := new_name · by^{∓1}`).
    Substitute { gen: String, by: String, inverse: bool, new_name: String },
    /// New generator `name` together with the relator `name`.
    AddGenerator { name: String },
    /// Drop `name`, which must appear as an iterated relator.
    RemoveGenerator { name: String },
}

impl LPresentation {
    pub fn change_generators(&self, moves: &[TietzeMove]) -> Result<LPresentation> {
        if !self.is_ascending() {
            return Err(Error::NotAscending);
        }
        moves.iter().try_fold(self.clone(), |l, m| l.apply_move(m))
    }

    fn apply_move(&self, m: &TietzeMove) -> Result<LPresentation> {
        let idx = |n: &str| {
            self.alphabet.index_of(n).ok_or_else(|| Error::UnknownGenerator(n.to_string()))
        };
        match m {
            TietzeMove::Substitute { gen, by, inverse, new_name } => {
                let s = idx(gen)?;
                let t = idx(by)?;
                if s == t {
                    return Err(Error::InvalidInput("cannot substitute a generator by itself".into()));
                }
                let mut names = self.alphabet.names().to_vec();
                names[s as usize] = new_name.clone();
                let alphabet = crate::words::Alphabet::new(&names)?;
                let tl = Letter::new(t, *inverse);
                // θ(s) = s′ · t^{∓1}
                let theta_s = Word::reduce([Letter::pos(s), tl.inverse()]);
                let theta = |w: &Word| {
                    w.substitute(|g| if g == s { theta_s.clone() } else { Word::gen(g) })
                };
                let st = Word::reduce([Letter::pos(s), tl]);
                let endos = self
                    .endos
                    .iter()
                    .map(|e| {
                        let imgs = (0..self.rank() as u32)
                            .map(|g| theta(&if g == s { e.apply(&st) } else { e.image(g).clone() }))
                            .collect();
                        Endomorphism::new(e.name.clone(), imgs)
                    })
                    .collect();
                LPresentation::new(alphabet, vec![], endos, self.iterated.iter().map(theta).collect())
            }
            TietzeMove::AddGenerator { name } => {
                let alphabet = self.alphabet.extended(&[name])?;
                let s = self.rank() as u32;
                let map: Vec<u32> = (0..s).collect();
                let endos = self
                    .endos
                    .iter()
                    .map(|e| {
                        let mut e = e.extend(&map, self.rank() + 1);
                        e.set_image(s, Word::identity());
                        e
                    })
                    .collect();
                let mut iterated = self.iterated.clone();
                iterated.push(Word::gen(s));
                LPresentation::new(alphabet, vec![], endos, iterated)
            }
            TietzeMove::RemoveGenerator { name } => {
                let s = idx(name)?;
                let sw = Word::gen(s);
                if !self.iterated.iter().any(|r| *r == sw || *r == sw.inverse()) {
                    return Err(Error::NotARelator(name.clone()));
                }
                let names: Vec<&String> =
                    self.alphabet.names().iter().filter(|n| *n != name).collect();
                let alphabet = crate::words::Alphabet::new(&names)?;
                let map: Vec<u32> = (0..self.rank() as u32)
                    .map(|g| if g > s { g - 1 } else { g })
                    .collect();
                let kill = |w: &Word| {
                    w.substitute(|g| if g == s { Word::identity() } else { Word::gen(map[g as usize]) })
                };
                let mut iterated: Vec<Word> = self
                    .iterated
                    .iter()
                    .filter(|r| **r != sw && **r != sw.inverse())
                    .map(kill)
                    .collect();
                let endos = self
                    .endos
                    .iter()
                    .map(|e| {
                        iterated.push(kill(e.image(s)));
                        let imgs = (0..self.rank() as u32).filter(|&g| g != s).map(|g| kill(e.image(g))).collect();
                        Endomorphism::new(e.name.clone(), imgs)
                    })
                    .collect();
                iterated.retain(|w| !w.is_identity());
                LPresentation::new(alphabet, vec![], endos, iterated)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_file;

    fn lamplighter_ascending() -> LPresentation {
        // ℤ/2 ≀ ℤ with a² and a⁻¹b moved into R
        parse_file(
            "group l { generators: a, b, t; endo phi: b -> b^t; iterated: a^2, a^-1 b, [a,b]; }",
        )
        .unwrap()
        .lpres
    }

    #[test]
    fn add_generator() {
        let l = lamplighter_ascending();
        let l2 = l.change_generators(&[TietzeMove::AddGenerator { name: "s".into() }]).unwrap();
        assert_eq!(l2.rank(), 4);
        assert_eq!(l2.iterated.last(), Some(&Word::gen(3)));
        assert!(l2.endos[0].image(3).is_identity());
        assert_eq!(l.change_generators(&[]).unwrap(), l);
    }

    #[test]
    fn remove_generator() {
        let l = lamplighter_ascending();
        let l2 = l
            .change_generators(&[
                TietzeMove::AddGenerator { name: "s".into() },
                TietzeMove::RemoveGenerator { name: "s".into() },
            ])
            .unwrap();
        assert_eq!(l2.alphabet, l.alphabet);
        assert_eq!(l2.iterated, l.iterated);
        let bad = l.change_generators(&[TietzeMove::RemoveGenerator { name: "a".into() }]);
        assert!(matches!(bad, Err(Error::NotARelator(_))));
    }

    #[test]
    fn substitute_and_back() {
        let l = lamplighter_ascending();
        let fwd = TietzeMove::Substitute {
            gen: "b".into(),
            by: "t".into(),
            inverse: false,
            new_name: "bt".into(),
        };
        let back = TietzeMove::Substitute {
            gen: "bt".into(),
            by: "t".into(),
            inverse: true,
            new_name: "b".into(),
        };
        let l1 = l.change_generators(std::slice::from_ref(&fwd)).unwrap();
        assert_eq!(l1.alphabet.names(), &["a", "bt", "t"]);
        assert_eq!(l1.format_word(&l1.iterated[1]), "a^-1 bt t^-1");
        let l2 = l.change_generators(&[fwd, back]).unwrap();
        assert_eq!(l2.iterated, l.iterated);
        assert_eq!(l2.endos[0].images(), l.endos[0].images());
    }

    #[test]
    fn rejects_non_ascending() {
        let l = parse_file("group g { generators: a; fixed: a^2; }").unwrap().lpres;
        assert_eq!(l.change_generators(&[]), Err(Error::NotAscending));
    }
}
