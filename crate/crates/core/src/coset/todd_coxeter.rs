//! HLT coset enumeration: relators are scanned from every live coset in
//! order, undefined entries are defined eagerly, coincidences are merged
//! with a union-find queue.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::lpres::{CosetAction, FinitePresentation, LPresentation};
use crate::words::{Letter, Word};

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    rank: usize,
    /// Row per coset, column per letter index (`2g`, `2g+1` for `g⁻¹`).
    rows: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn cosets(&self) -> usize {
        self.rows.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, c: usize, l: Letter) -> usize {
        self.rows[c][l.index()] as usize
    }

    pub fn trace(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, &l| self.get(c, l))
    }

    /// Image arrays of the generators (right action).
    pub fn permutations(&self) -> Vec<Vec<u32>> {
        (0..self.rank).map(|g| self.rows.iter().map(|r| r[2 * g]).collect()).collect()
    }

    pub fn action(&self) -> CosetAction {
        CosetAction::new(self.permutations()).expect("closed table columns are permutations")
    }

    /// Post-hoc check that the table is a consistent closed enumeration.
    pub fn validate(&self, relators: &[Word], subgroup: &[Word]) -> Result<()> {
        for (c, row) in self.rows.iter().enumerate() {
            for (i, &d) in row.iter().enumerate() {
                let back = Letter::from_index(i).inverse().index();
                if d as usize >= self.rows.len() || self.rows[d as usize][back] as usize != c {
                    return Err(Error::InconsistentAction(format!("entry ({c},{i}) is not invertible")));
                }
            }
            for r in relators {
                if self.trace(c, r) != c {
                    return Err(Error::InconsistentAction(format!("a relator does not close at coset {c}")));
                }
            }
        }
        for h in subgroup {
            if self.trace(0, h) != 0 {
                return Err(Error::InconsistentAction("a subgroup generator moves coset 0".into()));
            }
        }
        Ok(())
    }
}

struct Enumerator {
    width: usize,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    live: usize,
    max: usize,
    queue: VecDeque<u32>,
}

fn inv(i: usize) -> usize {
    i ^ 1
}

impl Enumerator {
    fn new(rank: usize, max: usize) -> Self {
        Enumerator {
            width: 2 * rank,
            table: vec![vec![UNDEF; 2 * rank]],
            parent: vec![0],
            live: 1,
            max,
            queue: VecDeque::new(),
        }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[c as usize] != root {
            let n = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = n;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.live >= self.max {
            return Err(Error::CosetOverflow(self.max));
        }
        let d = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.width]);
        self.parent.push(d);
        self.live += 1;
        self.table[c][x] = d;
        self.table[d as usize][inv(x)] = c as u32;
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.width {
                let f = self.table[e as usize][x];
                if f == UNDEF {
                    continue;
                }
                if self.table[f as usize][inv(x)] == e {
                    self.table[f as usize][inv(x)] = UNDEF;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.table[e1 as usize][x];
                let fx = self.table[f1 as usize][inv(x)];
                if ex != UNDEF {
                    self.merge(f1, ex);
                } else if fx != UNDEF {
                    self.merge(e1, fx);
                } else {
                    self.table[e1 as usize][x] = f1;
                    self.table[f1 as usize][inv(x)] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f][w[i]] != UNDEF {
                f = self.table[f][w[i]] as usize;
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f as u32, b as u32);
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b][inv(w[j as usize])] != UNDEF {
                b = self.table[b][inv(w[j as usize])] as usize;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f as u32, b as u32);
                return Ok(());
            }
            if j == i as isize {
                self.table[f][w[i]] = b as u32;
                self.table[b][inv(w[i])] = f as u32;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Renumbers live cosets breadth first from coset 0.
    fn standardize(&self) -> Vec<Vec<u32>> {
        let mut num = vec![UNDEF; self.table.len()];
        let mut order = vec![0usize];
        num[0] = 0;
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            for x in 0..self.width {
                let d = self.table[c][x] as usize;
                if num[d] == UNDEF {
                    num[d] = order.len() as u32;
                    order.push(d);
                }
            }
            k += 1;
        }
        order
            .iter()
            .map(|&c| self.table[c].iter().map(|&d| num[d as usize]).collect())
            .collect()
    }
}

/// Enumerates the cosets of ⟨subgroup⟩ in the group presented by `p`.
pub fn todd_coxeter(p: &FinitePresentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::InvalidInput("max_cosets must be positive".into()));
    }
    let rank = p.rank();
    let letters = |w: &Word| w.letters().iter().map(|l| l.index()).collect::<Vec<_>>();
    let rels: Vec<Vec<usize>> = p.relators.iter().map(letters).collect();
    let mut e = Enumerator::new(rank, max_cosets);
    for h in subgroup {
        p.alphabet.check_word(h)?;
        e.scan_and_fill(0, &letters(h))?;
    }
    let mut c = 0;
    while c < e.table.len() {
        for r in &rels {
            if !e.alive(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        if e.alive(c) {
            for x in 0..e.width {
                if e.table[c][x] == UNDEF {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    let table = CosetTable { rank, rows: e.standardize() };
    table.validate(&p.relators, subgroup)?;
    Ok(table)
}

/// Order of the group given by the relators of `l` up to Φ-depth `depth`.
pub fn order_from_presentation(l: &LPresentation, depth: usize, max_cosets: usize) -> Result<usize> {
    Ok(todd_coxeter(&l.truncate(depth), &[], max_cosets)?.cosets())
}
