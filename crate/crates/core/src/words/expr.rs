use super::{Letter, Word};
use crate::error::{Error, Result};

/// Word expressions with the usual notations: `g^h = h⁻¹gh`,
/// `[g,h] = g⁻¹h⁻¹gh`, and exponent sums `g^{Σ nᵢhᵢ} = Π hᵢ⁻¹ g^{nᵢ} hᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    One,
    Gen(u32),
    Inv(Box<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    Conj(Box<Expr>, Box<Expr>),
    Comm(Box<Expr>, Box<Expr>),
    /// Terms `(n, h)`; `h = None` stands for the identity conjugator.
    ExpSum(Box<Expr>, Vec<(i64, Option<Expr>)>),
}

impl Expr {
    pub fn gen(g: u32) -> Self {
        Expr::Gen(g)
    }
    pub fn pow(self, n: i64) -> Self {
        Expr::Power(Box::new(self), n)
    }
    pub fn conj(self, h: Expr) -> Self {
        Expr::Conj(Box::new(self), Box::new(h))
    }
    pub fn comm(a: Expr, b: Expr) -> Self {
        Expr::Comm(Box::new(a), Box::new(b))
    }
    pub fn inv(self) -> Self {
        Expr::Inv(Box::new(self))
    }

    /// Expands to a reduced word; `rank` bounds the generator indices.
    pub fn build(&self, rank: usize) -> Result<Word> {
        Ok(match self {
            Expr::One => Word::identity(),
            Expr::Gen(g) => {
                if *g as usize >= rank {
                    return Err(Error::GeneratorOutOfRange { index: *g, rank });
                }
                Word::letter(Letter::pos(*g))
            }
            Expr::Inv(e) => e.build(rank)?.inverse(),
            Expr::Product(es) => {
                let mut w = Word::identity();
                for e in es {
                    w = w.mul(&e.build(rank)?);
                }
                w
            }
            Expr::Power(e, n) => e.build(rank)?.pow(*n),
            Expr::Conj(g, h) => g.build(rank)?.conj(&h.build(rank)?),
            Expr::Comm(a, b) => Word::commutator(&a.build(rank)?, &b.build(rank)?),
            Expr::ExpSum(g, terms) => {
                if terms.is_empty() {
                    return Err(Error::InvalidInput("empty exponent sum".into()));
                }
                let g = g.build(rank)?;
                let mut w = Word::identity();
                for (n, h) in terms {
                    let t = g.pow(*n);
                    let t = match h {
                        Some(h) => t.conj(&h.build(rank)?),
                        None => t,
                    };
                    w = w.mul(&t);
                }
                w
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_with_conjugate() {
        // [d, d^a] over a=0, d=1
        let e = Expr::comm(Expr::gen(1), Expr::gen(1).conj(Expr::gen(0)));
        let w = e.build(2).unwrap();
        let expect = Word::reduce(
            [(1, true), (0, true), (1, true), (0, false), (1, false), (0, true), (1, false), (0, false)]
                .map(|(g, i)| Letter::new(g, i)),
        );
        assert_eq!(w, expect);
        assert_eq!(w.len(), 8);
    }

    #[test]
    fn exponent_sum_phi_minus_7() {
        // x^{φ−7} = φ⁻¹xφ · x⁻⁷ over x=0, φ=1
        let e = Expr::ExpSum(Box::new(Expr::gen(0)), vec![(1, Some(Expr::gen(1))), (-7, None)]);
        let w = e.build(2).unwrap();
        let mut expect = vec![Letter::neg(1), Letter::pos(0), Letter::pos(1)];
        expect.extend(std::iter::repeat_n(Letter::neg(0), 7));
        assert_eq!(w, Word::reduce(expect));
        assert_eq!(Expr::gen(0).pow(1).build(1).unwrap(), Word::gen(0));
    }

    #[test]
    fn malformed() {
        assert!(Expr::gen(3).build(2).is_err());
        assert!(Expr::ExpSum(Box::new(Expr::gen(0)), vec![]).build(1).is_err());
    }
}
