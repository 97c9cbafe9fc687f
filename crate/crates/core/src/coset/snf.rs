use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lpres::{DedupMode, EnumerationFrontier, LPresentation};
use crate::words::Word;

/// `ℤ^free_rank ⊕ ⊕ ℤ/dᵢ` with `d₁ | d₂ | …`, every `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigUint>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn new(torsion: &[u64], free_rank: usize) -> Self {
        AbelianInvariants { torsion: torsion.iter().map(|&d| BigUint::from(d)).collect(), free_rank }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// A row-echelon basis of the lattice spanned by inserted integer rows.
/// Keeps at most `ncols` rows however many relators are added.
#[derive(Clone, Debug)]
pub struct EchelonLattice {
    ncols: usize,
    /// `rows[c]` has pivot in column `c` and zeros before it.
    rows: Vec<Option<Vec<BigInt>>>,
}

impl EchelonLattice {
    pub fn new(ncols: usize) -> Self {
        EchelonLattice { ncols, rows: vec![None; ncols] }
    }

    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.ncols);
        for c in 0..self.ncols {
            if v[c].is_zero() {
                continue;
            }
            let Some(b) = self.rows[c].as_mut() else {
                if v[c].is_negative() {
                    v.iter_mut().for_each(|x| *x = -&*x);
                }
                self.rows[c] = Some(v);
                return;
            };
            let e = b[c].extended_gcd(&v[c]);
            let (bu, vu) = (&b[c] / &e.gcd, &v[c] / &e.gcd);
            let nb: Vec<BigInt> = b.iter().zip(&v).map(|(x, y)| &e.x * x + &e.y * y).collect();
            let nv: Vec<BigInt> = b.iter().zip(&v).map(|(x, y)| &bu * y - &vu * x).collect();
            *b = nb;
            v = nv;
            debug_assert!(v[c].is_zero());
        }
    }

    pub fn insert_word(&mut self, w: &Word) {
        self.insert(w.exponent_sums(self.ncols).into_iter().map(BigInt::from).collect());
    }

    pub fn matrix(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn invariants(&self) -> AbelianInvariants {
        smith_normal_form(&self.matrix(), self.ncols)
    }
}

/// Abelian invariants of ℤ^ncols modulo the row span of `m`.
pub fn smith_normal_form(m: &[Vec<BigInt>], ncols: usize) -> AbelianInvariants {
    let mut a: Vec<Vec<BigInt>> = m.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry of the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..nrows {
            if !a[i][t].is_zero() {
                let q = a[i][t].div_floor(&a[t][t]);
                let pivot_row = a[t].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                clean &= a[i][t].is_zero();
            }
        }
        for j in t + 1..ncols {
            if !a[t][j].is_zero() {
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let p = row[t].clone();
                    row[j] -= &q * p;
                }
                clean &= a[t][j].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold any offending row into row t and retry
        let p = a[t][t].clone();
        let bad = (t + 1..nrows).find(|&i| a[i][t + 1..].iter().any(|x| !(x % &p).is_zero()));
        if let Some(i) = bad {
            let r = a[i].clone();
            for (x, y) in a[t].iter_mut().zip(&r) {
                *x += y;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    let rank = diag.len();
    let torsion = diag
        .into_iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_biguint().expect("absolute value"))
        .collect();
    AbelianInvariants { torsion, free_rank: ncols - rank }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub depth: usize,
    pub invariants: AbelianInvariants,
    /// Invariants at `depth - 1`, when `depth > 0`.
    pub previous: Option<AbelianInvariants>,
    pub relators: usize,
}

impl Abelianization {
    pub fn stabilized(&self) -> bool {
        self.previous.as_ref() == Some(&self.invariants)
    }
}

/// SNF of the exponent-sum matrix of the relators up to Φ-depth `depth`.
pub fn abelianization(l: &LPresentation, depth: usize) -> Abelianization {
    abelianization_series(l, depth).pop().expect("at least depth 0")
}

/// Invariants at every depth `0..=depth`.
pub fn abelianization_series(l: &LPresentation, depth: usize) -> Vec<Abelianization> {
    let mut f = EnumerationFrontier::new(l, DedupMode::Cyclic);
    let mut lat = EchelonLattice::new(l.rank());
    let mut done = 0;
    let mut out: Vec<Abelianization> = Vec::new();
    for d in 0..=depth {
        f.advance_to(l, d);
        for w in f.words().skip(done) {
            lat.insert_word(w);
        }
        done = f.relators().len();
        let inv = lat.invariants();
        out.push(Abelianization {
            depth: d,
            previous: out.last().map(|a| a.invariants.clone()),
            invariants: inv,
            relators: done,
        });
    }
    out
}

pub fn bigint_matrix(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}
