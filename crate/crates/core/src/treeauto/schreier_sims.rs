//! Deterministic Schreier–Sims: base points are chosen as the first point
//! moved by the generator that forces a new level.

use num_bigint::BigUint;

use super::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    invs: Vec<Perm>,
    /// Schreier vector: for orbit points, (predecessor, generator index).
    edge: Vec<Option<(u32, u32)>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut l = Level { base, gens: vec![], invs: vec![], edge: vec![None; n], orbit: vec![] };
        l.rebuild();
        l
    }

    fn push(&mut self, g: Perm) {
        self.invs.push(g.inverse());
        self.gens.push(g);
        self.rebuild();
    }

    fn rebuild(&mut self) {
        self.edge.iter_mut().for_each(|e| *e = None);
        self.edge[self.base] = Some((self.base as u32, u32::MAX));
        self.orbit = vec![self.base];
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k];
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.apply(p);
                if self.edge[q].is_none() {
                    self.edge[q] = Some((p as u32, gi as u32));
                    self.orbit.push(q);
                }
            }
            k += 1;
        }
    }

    fn contains(&self, p: usize) -> bool {
        self.edge[p].is_some()
    }

    /// Coset representative mapping the base point to `p`.
    fn transversal(&self, mut p: usize, n: usize) -> Perm {
        let mut u = Perm::identity(n);
        while p != self.base {
            let (q, gi) = self.edge[p].expect("point in orbit");
            u = self.gens[gi as usize].then(&u);
            p = q as usize;
        }
        u
    }

    /// `h · u_p⁻¹`, walking the Schreier vector back to the base.
    fn strip(&self, mut h: Perm, mut p: usize) -> Perm {
        while p != self.base {
            let (q, gi) = self.edge[p].expect("point in orbit");
            h = h.then(&self.invs[gi as usize]);
            p = q as usize;
        }
        h
    }
}

/// A base and strong generating set.
#[derive(Clone, Debug)]
pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn first_moved(g: &Perm) -> Option<usize> {
        (0..g.degree()).find(|&i| g.apply(i) != i)
    }

    /// Sifts `h` from level `start`; returns the residue and the level where
    /// sifting stopped (`levels.len()` when it passed every level).
    fn sift(&self, mut h: Perm, start: usize) -> (Perm, usize) {
        for (k, l) in self.levels.iter().enumerate().skip(start) {
            let x = h.apply(l.base);
            if !l.contains(x) {
                return (h, k);
            }
            h = l.strip(h, x);
        }
        (h, self.levels.len())
    }

    fn add_strong(&mut self, h: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let b = Self::first_moved(&h).expect("residue is not the identity");
            self.levels.push(Level::new(b, self.n));
        }
        for l in from..=to {
            self.levels[l].push(h.clone());
        }
    }

    pub fn new(n: usize, gens: &[Perm]) -> Self {
        let gens: Vec<&Perm> = gens.iter().filter(|g| !g.is_identity()).collect();
        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(Self::first_moved(g).expect("nonidentity"));
            }
        }
        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(b, n)).collect();
        for (k, l) in levels.iter_mut().enumerate() {
            for g in &gens {
                if base[..k].iter().all(|&b| g.apply(b) == b) {
                    l.invs.push(g.inverse());
                    l.gens.push((*g).clone());
                }
            }
            l.rebuild();
        }
        let mut chain = StabChain { n, levels };
        let mut i = chain.levels.len();
        while i > 0 {
            let lvl = i - 1;
            let mut found = None;
            'scan: for &p in &chain.levels[lvl].orbit {
                let up = chain.levels[lvl].transversal(p, n);
                for s in &chain.levels[lvl].gens {
                    let q = s.apply(p);
                    let h = chain.levels[lvl].strip(up.then(s), q);
                    let (r, j) = chain.sift(h, lvl + 1);
                    if j < chain.levels.len() || !r.is_identity() {
                        found = Some((r, j));
                        break 'scan;
                    }
                }
            }
            match found {
                Some((r, j)) => {
                    chain.add_strong(r, lvl + 1, j);
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
        chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (r, j) = self.sift(g.clone(), 0);
        j == self.levels.len() && r.is_identity()
    }
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    pub degree: usize,
    pub gens: Vec<Perm>,
    chain: StabChain,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Self {
        let chain = StabChain::new(degree, &gens);
        PermGroup { degree, gens, chain }
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }
}
