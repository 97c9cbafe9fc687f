//! Concrete models used where a group has no (convenient) tree action.

use std::collections::{BTreeMap, BTreeSet};

use crate::treeauto::Perm;
use crate::words::Word;

/// Generator semantics in ℤ/2 ≀ ℤ = (finite-support ℤ → ℤ/2) ⋊ ℤ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LampMove {
    /// Toggle the lamp under the cursor.
    Flip,
    /// Move the cursor one step.
    Step,
}

/// A permutation of ℤ agreeing with `x ↦ x + shift` off a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftPerm {
    shift: i64,
    moved: BTreeMap<i64, i64>,
}

impl ShiftPerm {
    pub fn translation(shift: i64) -> Self {
        ShiftPerm { shift, moved: BTreeMap::new() }
    }

    pub fn transposition(i: i64, j: i64) -> Self {
        let moved = if i == j { BTreeMap::new() } else { BTreeMap::from([(i, j), (j, i)]) };
        ShiftPerm { shift: 0, moved }
    }

    pub fn apply(&self, x: i64) -> i64 {
        self.moved.get(&x).copied().unwrap_or(x + self.shift)
    }

    fn from_points(shift: i64, pts: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let moved = pts.into_iter().filter(|&(x, y)| y != x + shift).collect();
        ShiftPerm { shift, moved }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &ShiftPerm) -> ShiftPerm {
        let cand: BTreeSet<i64> =
            self.moved.keys().copied().chain(other.moved.keys().map(|k| k - self.shift)).collect();
        ShiftPerm::from_points(self.shift + other.shift, cand.into_iter().map(|x| (x, other.apply(self.apply(x)))))
    }

    pub fn inverse(&self) -> ShiftPerm {
        ShiftPerm::from_points(-self.shift, self.moved.iter().map(|(&x, &y)| (y, x)))
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.moved.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectModel {
    Lamplighter(Vec<LampMove>),
    /// Finite permutation images of the generators.
    Permutations(Vec<Perm>),
    /// ℤⁿ: a word is trivial iff all exponent sums vanish.
    FreeAbelian,
    ShiftPermutations(Vec<ShiftPerm>),
}

impl DirectModel {
    pub fn kind(&self) -> &'static str {
        match self {
            DirectModel::Lamplighter(_) => "lamplighter",
            DirectModel::Permutations(_) => "permutations",
            DirectModel::FreeAbelian => "free-abelian",
            DirectModel::ShiftPermutations(_) => "shift-permutations",
        }
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        match self {
            DirectModel::Lamplighter(moves) => {
                let mut lamps = BTreeSet::new();
                let mut cursor = 0i64;
                for l in w.letters() {
                    match moves[l.gen as usize] {
                        LampMove::Flip => {
                            if !lamps.remove(&cursor) {
                                lamps.insert(cursor);
                            }
                        }
                        LampMove::Step => cursor += l.sign(),
                    }
                }
                cursor == 0 && lamps.is_empty()
            }
            DirectModel::Permutations(perms) => {
                let n = perms.first().map_or(0, Perm::degree);
                let inv: Vec<Perm> = perms.iter().map(Perm::inverse).collect();
                w.letters()
                    .iter()
                    .fold(Perm::identity(n), |acc, l| acc.then(if l.inv { &inv[l.gen as usize] } else { &perms[l.gen as usize] }))
                    .is_identity()
            }
            DirectModel::FreeAbelian => w.exponent_sums(w.max_gen().map_or(0, |g| g as usize + 1)).iter().all(|&e| e == 0),
            DirectModel::ShiftPermutations(gens) => {
                let inv: Vec<ShiftPerm> = gens.iter().map(ShiftPerm::inverse).collect();
                w.letters()
                    .iter()
                    .fold(ShiftPerm::translation(0), |acc, l| acc.then(if l.inv { &inv[l.gen as usize] } else { &gens[l.gen as usize] }))
                    .is_identity()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Letter, Word};

    #[test]
    fn shift_perms_form_a_group() {
        let s = ShiftPerm::transposition(1, 2);
        let t = ShiftPerm::translation(1);
        assert!(s.then(&s).is_identity());
        assert!(t.then(&t.inverse()).is_identity());
        let st = s.then(&t);
        assert_eq!(st.apply(1), 3);
        assert_eq!(st.apply(5), 6);
        assert!(st.then(&st.inverse()).is_identity());
        assert!(st.inverse().then(&st).is_identity());
        // conjugating (1 2) by a translation moves it
        let c = t.inverse().then(&s).then(&t);
        assert_eq!(c, ShiftPerm::transposition(2, 3));
    }

    #[test]
    fn lamplighter_model() {
        let m = DirectModel::Lamplighter(vec![LampMove::Flip, LampMove::Step]);
        let a = Word::gen(0);
        let t = Word::gen(1);
        assert!(m.is_identity(&a.pow(2)));
        assert!(!m.is_identity(&a));
        assert!(!m.is_identity(&t));
        assert!(m.is_identity(&Word::commutator(&a, &a.conj(&t.pow(3)))));
        assert!(!m.is_identity(&Word::reduce([Letter::pos(0), Letter::pos(1), Letter::pos(0), Letter::neg(1)])));
    }
}
