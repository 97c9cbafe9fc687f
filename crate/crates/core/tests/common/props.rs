//! Property suites shared by the `properties` test target and the
//! acceptance runner, which needs to count cases.

use std::collections::BTreeSet;

use lpres::catalog::{get_entry, DirectModel};
use lpres::coset::{smith_normal_form, todd_coxeter, AbelianInvariants};
use lpres::lpres::DedupMode;
use lpres::treeauto::{Perm, SelfSimilarSpec};
use lpres::words::{check_small_cancellation, Lambda};
use lpres::{Alphabet, Endomorphism, LPresentation, Letter, Word};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};

pub struct Suite {
    pub name: &'static str,
    pub cases: u32,
    pub run: fn(&mut TestRunner) -> Result<(), String>,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "free-reduction laws", cases: 3000, run: free_reduction },
    Suite { name: "action laws", cases: 2000, run: action_laws },
    Suite { name: "wreath multiplicativity", cases: 2000, run: wreath_multiplicativity },
    Suite { name: "SNF invariance", cases: 1500, run: snf_invariance },
    Suite { name: "TC validation", cases: 400, run: tc_validation },
    Suite { name: "enumeration monotonicity", cases: 300, run: enumeration_monotonicity },
    Suite { name: "contracting word problem vs level action", cases: 400, run: word_problem },
    Suite { name: "small cancellation vs pair oracle", cases: 1500, run: small_cancellation },
];

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng)
}

pub fn run_suite(s: &Suite) -> Result<(), String> {
    (s.run)(&mut runner(s.cases))
}

pub fn total_cases() -> u32 {
    SUITES.iter().map(|s| s.cases).sum()
}

fn letters(rank: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..rank, any::<bool>()).prop_map(|(g, i)| Letter::new(g, i)), 0..=max_len)
}

fn word(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
    letters(rank, max_len).prop_map(Word::reduce)
}

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn free_reduction(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(letters(3, 30), word(3, 20), word(3, 20), 0usize..40), |(raw, v, w, k)| {
        let u = Word::reduce(raw.clone());
        prop_assert!(u.letters().windows(2).all(|p| p[0] != p[1].inverse()));
        prop_assert_eq!(Word::reduce(u.letters().to_vec()), u.clone());
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        prop_assert_eq!(u.mul(&Word::identity()), u.clone());
        prop_assert_eq!(Word::identity().mul(&u), u.clone());
        prop_assert!(u.mul(&u.inverse()).is_identity());
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
        // reducing in pieces agrees with reducing all at once
        let mut joined = raw.clone();
        joined.extend_from_slice(v.letters());
        prop_assert_eq!(Word::reduce(joined), u.mul(&v));
        let sums: Vec<i64> = u.exponent_sums(3).iter().zip(v.exponent_sums(3)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(u.mul(&v).exponent_sums(3), sums);
        prop_assert_eq!(v.conj(&w), w.inverse().mul(&v).mul(&w));
        let (core, _) = u.cyclic_reduce();
        if !core.is_identity() {
            let rotated = core.rotate(k % core.len());
            prop_assert_eq!(rotated.cyclic_canonical(), core.cyclic_canonical());
        }
        Ok(())
    })
    .map_err(fail)
}

fn spec(name: &str) -> SelfSimilarSpec {
    get_entry(name).unwrap().spec().unwrap().clone()
}

fn tree_case(names: &'static [&'static str]) -> impl Strategy<Value = (usize, Word, Word, Vec<u32>)> {
    (0..names.len()).prop_flat_map(move |i| {
        let s = spec(names[i]);
        let rank = s.alphabet().len() as u32;
        let d = s.degree() as u32;
        (Just(i), word(rank, 12), word(rank, 12), prop::collection::vec(0..d, 0..=6))
    })
}

const TREE_GROUPS: &[&str] = &["grigorchuk", "grigorchuk-supergroup", "fabrykowski-gupta", "gupta-sidki", "bsv"];

fn action_laws(r: &mut TestRunner) -> Result<(), String> {
    let specs: Vec<SelfSimilarSpec> = TREE_GROUPS.iter().map(|n| spec(n)).collect();
    r.run(&tree_case(TREE_GROUPS), |(i, u, v, x)| {
        let s = &specs[i];
        let act = |w: &Word, x: &[u32]| s.act(w, x).map_err(|e| TestCaseError::fail(e.to_string()));
        // right action: x^(uv) = (x^u)^v
        prop_assert_eq!(act(&u.mul(&v), &x)?, act(&v, &act(&u, &x)?)?);
        prop_assert_eq!(act(&u.inverse(), &act(&u, &x)?)?, x.clone());
        prop_assert_eq!(act(&s.normalize(&u), &x)?, act(&u, &x)?);
        // level permutations are a homomorphism for the same convention
        let n = x.len().min(4);
        let lp = |w: &Word| s.level_permutation(w, n).map_err(|e| TestCaseError::fail(e.to_string()));
        prop_assert_eq!(lp(&u.mul(&v))?, lp(&u)?.then(&lp(&v)?));
        Ok(())
    })
    .map_err(fail)
}

fn wreath_multiplicativity(r: &mut TestRunner) -> Result<(), String> {
    let specs: Vec<SelfSimilarSpec> = TREE_GROUPS.iter().map(|n| spec(n)).collect();
    r.run(&tree_case(TREE_GROUPS), |(i, u, v, x)| {
        let s = &specs[i];
        let (fu, fv, fuv) = (s.wreath_decompose(&u), s.wreath_decompose(&v), s.wreath_decompose(&u.mul(&v)));
        prop_assert_eq!(&fuv.top, &fu.top.then(&fv.top));
        for (k, sec) in fuv.sections.iter().enumerate() {
            // (uv)_k = u_k v_{k^{π_u}}
            let expected = fu.sections[k].mul(&fv.sections[fu.top.apply(k)]);
            prop_assert_eq!(sec, &expected);
        }
        // ψ agrees with the vertex action: (kx)^w = k^{π_w} x^{w_k}
        if let Some((&k, rest)) = x.split_first() {
            let image = s.act(&u, &x).unwrap();
            prop_assert_eq!(image[0] as usize, fu.top.apply(k as usize));
            prop_assert_eq!(&image[1..], &s.act(&fu.sections[k as usize], rest).unwrap()[..]);
        }
        Ok(())
    })
    .map_err(fail)
}

#[derive(Clone, Debug)]
enum Op {
    AddRow(usize, usize, i64),
    AddCol(usize, usize, i64),
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    NegRow(usize),
}

fn apply_op(m: &mut [Vec<i64>], op: &Op) {
    match *op {
        Op::AddRow(i, j, k) if i != j => {
            let src = m[j].clone();
            m[i].iter_mut().zip(src).for_each(|(a, b)| *a += k * b);
        }
        Op::AddCol(i, j, k) if i != j => m.iter_mut().for_each(|row| row[i] += k * row[j]),
        Op::SwapRows(i, j) => m.swap(i, j),
        Op::SwapCols(i, j) => m.iter_mut().for_each(|row| row.swap(i, j)),
        Op::NegRow(i) => m[i].iter_mut().for_each(|a| *a = -*a),
        _ => {}
    }
}

fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Determinant by cofactor expansion; only used on ≤ 4×4.
fn det(m: &[Vec<i64>]) -> i128 {
    if m.len() == 1 {
        return m[0][0] as i128;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

fn snf_invariance(r: &mut TestRunner) -> Result<(), String> {
    let case = (1usize..=4, 1usize..=4).prop_flat_map(|(rows, cols)| {
        let op = prop_oneof![
            (0..rows, 0..rows, -3i64..=3).prop_map(|(i, j, k)| Op::AddRow(i, j, k)),
            (0..cols, 0..cols, -3i64..=3).prop_map(|(i, j, k)| Op::AddCol(i, j, k)),
            (0..rows, 0..rows).prop_map(|(i, j)| Op::SwapRows(i, j)),
            (0..cols, 0..cols).prop_map(|(i, j)| Op::SwapCols(i, j)),
            (0..rows).prop_map(Op::NegRow),
        ];
        (
            Just(cols),
            prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows),
            prop::collection::vec(op, 0..12),
        )
    });
    r.run(&case, |(cols, m, ops)| {
        let inv = smith_normal_form(&big(&m), cols);
        let mut shuffled = m.clone();
        ops.iter().for_each(|op| apply_op(&mut shuffled, op));
        prop_assert_eq!(&smith_normal_form(&big(&shuffled), cols), &inv);
        if m.len() == cols {
            let d = det(&m).unsigned_abs();
            if d == 0 {
                prop_assert!(inv.free_rank > 0);
            } else {
                let prod = inv.torsion.iter().fold(num_bigint::BigUint::from(1u8), |a, t| a * t);
                prop_assert_eq!(inv.free_rank, 0);
                prop_assert_eq!(prod, num_bigint::BigUint::from(d));
            }
        }
        for pair in inv.torsion.windows(2) {
            prop_assert!(&pair[1] % &pair[0] == num_bigint::BigUint::from(0u8));
        }
        Ok(())
    })
    .map_err(fail)?;
    let trivial = smith_normal_form(&[], 2);
    if trivial != AbelianInvariants::new(&[], 2) {
        return Err(format!("empty matrix gave {trivial:?}"));
    }
    Ok(())
}

/// Order of the subgroup of `gens`' group generated by `sub`, by closure.
fn closure_order(n: usize, sub: &[Perm]) -> usize {
    let mut seen = BTreeSet::from([Perm::identity(n).images().to_vec()]);
    let mut stack = vec![Perm::identity(n)];
    while let Some(p) = stack.pop() {
        for g in sub {
            let q = p.then(g);
            if seen.insert(q.images().to_vec()) {
                stack.push(q);
            }
        }
    }
    seen.len()
}

fn eval(perms: &[Perm], w: &Word) -> Perm {
    let n = perms[0].degree();
    w.letters().iter().fold(Perm::identity(n), |acc, l| {
        let p = &perms[l.gen as usize];
        acc.then(&if l.inv { p.inverse() } else { p.clone() })
    })
}

fn tc_validation(r: &mut TestRunner) -> Result<(), String> {
    let entries: Vec<_> = ["sym(4)", "sym-transpositions(4)"].iter().map(|n| get_entry(n).unwrap()).collect();
    let case = (0..entries.len()).prop_flat_map(move |i| (Just(i), prop::collection::vec(word(3, 6), 0..=2)));
    r.run(&case, |(i, sub)| {
        let e = &entries[i];
        if sub.iter().any(|w| w.max_gen().is_some_and(|g| g as usize >= e.lpres().rank())) {
            return Ok(());
        }
        let p = e.lpres().truncate(e.defaults.depth);
        let table = todd_coxeter(&p, &sub, 100_000).map_err(|e| TestCaseError::fail(e.to_string()))?;
        table.validate(&p.relators, &sub).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let Some(DirectModel::Permutations(perms)) = &e.direct_model else {
            return Err(TestCaseError::fail("no permutation model"));
        };
        let images: Vec<Perm> = sub.iter().map(|w| eval(perms, w)).collect();
        let order = closure_order(perms[0].degree(), &images);
        prop_assert_eq!(table.cosets() * order, 24);
        Ok(())
    })
    .map_err(fail)
}

fn random_lpres() -> impl Strategy<Value = LPresentation> {
    (
        prop::collection::vec(prop::collection::vec(word(2, 3), 2), 1..=2),
        prop::collection::vec(word(2, 4).prop_filter("nontrivial", |w| !w.is_identity()), 1..=3),
        prop::collection::vec(word(2, 4), 0..=1),
    )
        .prop_map(|(images, iterated, fixed)| {
            let endos = images.into_iter().enumerate().map(|(k, im)| Endomorphism::new(format!("phi{k}"), im)).collect();
            let fixed = fixed.into_iter().filter(|w| !w.is_identity()).collect();
            LPresentation::new(Alphabet::new(&["a", "b"]).unwrap(), fixed, endos, iterated).unwrap()
        })
}

fn enumeration_monotonicity(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(random_lpres(), 0usize..3), |(l, k)| {
        for mode in [DedupMode::Exact, DedupMode::Cyclic] {
            let lo = l.enumerate_relators(k, mode);
            let hi = l.enumerate_relators(k + 1, mode);
            prop_assert!(hi.len() >= lo.len());
            prop_assert_eq!(&hi[..lo.len()], &lo[..], "depth {} is not a prefix of depth {}", k, k + 1);
        }
        // cyclic dedup only identifies conjugates and inverses
        let classes = |ws: Vec<Word>| -> BTreeSet<Word> {
            ws.iter()
                .filter(|w| !w.is_identity())
                .map(|w| w.cyclic_canonical().min(w.inverse().cyclic_canonical()))
                .collect()
        };
        prop_assert_eq!(
            classes(l.enumerate_relators(k + 1, DedupMode::Exact)),
            classes(l.enumerate_relators(k + 1, DedupMode::Cyclic))
        );
        let f = l.truncate(k + 1);
        prop_assert_eq!(f.relators.len(), l.enumerate_relators(k + 1, DedupMode::Cyclic).len());
        Ok(())
    })
    .map_err(fail)
}

fn word_problem(r: &mut TestRunner) -> Result<(), String> {
    use lpres::contract::WordProblem;
    use lpres::treeauto::LevelOracle;
    let specs: Vec<SelfSimilarSpec> = ["grigorchuk", "gupta-sidki"].iter().map(|n| spec(n)).collect();
    let case = (0..specs.len()).prop_flat_map(|i| (Just(i), letters(4, 24)));
    r.run(&case, |(i, raw)| {
        let s = &specs[i];
        let w = Word::reduce(raw.into_iter().filter(|l| (l.gen as usize) < s.alphabet().len()));
        let mut wp = WordProblem::for_spec(s).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let trivial = wp.is_trivial(&w).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let mut oracle = LevelOracle::new(s);
        if trivial {
            prop_assert!(oracle.is_identity_at(&w, 12));
        } else {
            prop_assert!(oracle.first_nontrivial_level(&w, 20).is_some());
        }
        Ok(())
    })
    .map_err(fail)
}

/// Symmetrized closure and pieces computed from scratch on letter vectors.
pub fn pair_oracle(ws: &[Word], lambda: Lambda) -> (bool, usize, usize) {
    let mut closure: BTreeSet<Vec<Letter>> = BTreeSet::new();
    for w in ws {
        let mut core = w.letters().to_vec();
        while core.len() > 1 && core[0] == core[core.len() - 1].inverse() {
            core = core[1..core.len() - 1].to_vec();
        }
        let inv: Vec<Letter> = core.iter().rev().map(|l| l.inverse()).collect();
        for c in [core, inv] {
            for k in 0..c.len() {
                closure.insert([&c[k..], &c[..k]].concat());
            }
        }
    }
    let all: Vec<Vec<Letter>> = closure.into_iter().collect();
    let (mut holds, mut longest) = (true, 0);
    for (i, u) in all.iter().enumerate() {
        for (j, v) in all.iter().enumerate() {
            if i == j {
                continue;
            }
            let p = u.iter().zip(v).take_while(|(a, b)| a == b).count();
            longest = longest.max(p);
            if (p as u64) * lambda.den >= lambda.num * u.len().min(v.len()) as u64 {
                holds = false;
            }
        }
    }
    (holds, longest, all.len())
}

fn small_cancellation(r: &mut TestRunner) -> Result<(), String> {
    let set = prop::collection::vec(word(3, 14).prop_filter("nontrivial core", |w| !w.cyclic_reduce().0.is_identity()), 1..=4)
        .prop_filter("total length ≤ 40", |ws| ws.iter().map(Word::len).sum::<usize>() <= 40);
    let lambda = prop_oneof![Just((1u64, 6u64)), Just((1, 4)), Just((1, 3)), Just((1, 2)), Just((2, 3))];
    r.run(&(set, lambda), |(ws, (p, q))| {
        let lambda = Lambda::new(p, q).unwrap();
        let got = check_small_cancellation(&ws, lambda).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let (holds, longest, size) = pair_oracle(&ws, lambda);
        prop_assert_eq!(got.holds, holds);
        prop_assert_eq!(got.longest_piece, longest);
        prop_assert_eq!(got.closure_size, size);
        if let Some(piece) = &got.witness {
            prop_assert!(piece.u != piece.v);
            prop_assert!(piece.u.letters().starts_with(piece.piece.letters()));
            prop_assert!(piece.v.letters().starts_with(piece.piece.letters()));
        }
        Ok(())
    })
    .map_err(fail)
}

fn all_reduced(rank: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![];
    let mut layer = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = vec![];
        for w in &layer {
            for g in 0..rank {
                for inv in [false, true] {
                    let l = Letter::new(g, inv);
                    if w.letters().last() != Some(&l.inverse()) {
                        next.push(w.mul(&Word::letter(l)));
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Checker against the pair oracle on every rank-2 singleton of length ≤ 7
/// and every pair of words of length ≤ 4. Returns the number of sets checked.
pub fn exhaustive_small_cancellation() -> Result<usize, String> {
    let lambdas = [Lambda::new(1, 6).unwrap(), Lambda::new(1, 3).unwrap()];
    let nontrivial = |w: &Word| !w.cyclic_reduce().0.is_identity();
    let singles: Vec<Vec<Word>> = all_reduced(2, 7).into_iter().filter(nontrivial).map(|w| vec![w]).collect();
    let short: Vec<Word> = all_reduced(2, 4).into_iter().filter(nontrivial).collect();
    let pairs = short.iter().enumerate().flat_map(|(i, u)| short[i..].iter().map(move |v| vec![u.clone(), v.clone()]));
    let mut n = 0;
    for ws in singles.into_iter().chain(pairs) {
        for lambda in lambdas {
            let got = check_small_cancellation(&ws, lambda).map_err(fail)?;
            if (got.holds, got.longest_piece, got.closure_size) != pair_oracle(&ws, lambda) {
                return Err(format!("disagreement on {ws:?} at {lambda}"));
            }
            n += 1;
        }
    }
    Ok(n)
}
