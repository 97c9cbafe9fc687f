use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..n` acting on the right: `i^p = p[i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::InvalidInput(format!("{images:?} is not a permutation"))),
            }
        }
        Ok(Perm(images))
    }

    /// Builds from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut p: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x == 0 || x as usize > n || std::mem::replace(&mut used[x as usize - 1], true) {
                    return Err(Error::InvalidInput(format!("bad cycle {c:?} for degree {n}")));
                }
                p[x as usize - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        Ok(Perm(p))
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x as u32 + 1);
                x = self.0[x] as usize;
            }
            out.push(c);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u32;
        }
        Perm(v)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return f.write_str("()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_roundtrip() {
        let p = Perm::from_cycles(5, &[vec![1, 3, 2], vec![4, 5]]).unwrap();
        assert_eq!(p.images(), &[2, 0, 1, 4, 3]);
        assert_eq!(p.cycles(), vec![vec![1, 3, 2], vec![4, 5]]);
        assert!(p.then(&p.inverse()).is_identity());
        assert!(Perm::from_cycles(3, &[vec![1, 1]]).is_err());
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn right_action_composition() {
        let a = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![2, 3]]).unwrap();
        // 1^(ab) = (1^a)^b = 2^b = 3
        assert_eq!(a.then(&b).apply(0), 2);
    }
}
