use std::collections::{HashMap, VecDeque};

use super::models::{DirectModel, LampMove, ShiftPerm};
use super::{CatalogEntry, ConjugationIdentity, Defaults, Fixture, Fixtures, Source, WordFamily};
use crate::coset::AbelianInvariants;
use crate::dsl::{parse_file, parse_word, GroupFile};
use crate::error::{Error, Result};
use crate::lpres::LPresentation;
use crate::treeauto::Perm;
use crate::words::{Alphabet, Endomorphism, Expr, Word};

pub(super) const GRIGORCHUK: &str = r#"
group grigorchuk {
  generators: a, c, d;
  endo sigma: a -> a c a, c -> c d, d -> c;
  iterated: a^2, [d, d^a], [d^(a c), (d^(a c))^a];
  recursion degree 2 {
    a = perm(1 2);
    b = (a, c);
    c = (a, d);
    d = (1, b);
    reduce: a^-1 -> a, b^-1 -> b, c^-1 -> c, d^-1 -> d, a a -> 1, b b -> 1, c c -> 1, d d -> 1,
      b c -> d, c b -> d, b d -> c, d b -> c, c d -> b, d c -> b;
    branching: (a b)^2;
  }
  contraction D = 1;
}
"#;

const LYSIONOK: &str = r#"
group "grigorchuk-lysionok" {
  generators: a, c, d;
  endo sigma: a -> a c a, c -> c d, d -> c;
  iterated: a^2, (a d)^4, (a d a c a c)^4;
  recursion degree 2 {
    a = perm(1 2);
    b = (a, c);
    c = (a, d);
    d = (1, b);
    reduce: a^-1 -> a, b^-1 -> b, c^-1 -> c, d^-1 -> d, a a -> 1, b b -> 1, c c -> 1, d d -> 1,
      b c -> d, c b -> d, b d -> c, d b -> c, c d -> b, d c -> b;
    branching: (a b)^2;
  }
  contraction D = 1;
}
"#;

const SUPERGROUP: &str = r#"
group "grigorchuk-supergroup" {
  generators: a, bt, ct, dt;
  endo sigma: a -> a bt a, bt -> dt, ct -> bt, dt -> ct;
  iterated: a^2, [bt, ct], [ct, ct^a], [ct, dt^a], [dt, dt^a],
    [ct^(a bt), (ct^(a bt))^a], [ct^(a bt), (dt^(a bt))^a], [dt^(a bt), (dt^(a bt))^a];
  recursion degree 2 {
    a = perm(1 2);
    bt = (a, ct);
    ct = (1, dt);
    dt = (1, bt);
    reduce: a^-1 -> a, bt^-1 -> bt, ct^-1 -> ct, dt^-1 -> dt, a a -> 1, bt bt -> 1, ct ct -> 1, dt dt -> 1,
      ct bt -> bt ct, dt bt -> bt dt, dt ct -> ct dt;
    branching: (a bt)^2, (a dt)^2;
  }
  contraction D = 3;
}
"#;

const FABRYKOWSKI_GUPTA: &str = r#"
group "fabrykowski-gupta" {
  generators: a, r;
  endo sigma: a -> r^(a^-1);
  endo chi1: r -> r^-1;
  endo chi2: a -> a^-1;
  recursion degree 3 {
    a = perm(1 2 3);
    r = (a, 1, r);
    reduce: a a -> a^-1, a^-1 a^-1 -> a, r r -> r^-1, r^-1 r^-1 -> r;
    branching: [a, r];
  }
  contraction D = 1;
}
"#;

const GUPTA_SIDKI: &str = r#"
group "gupta-sidki" {
  generators: a, t, u, v;
  fixed: a^3, t^3, u^-1 t^a, v^-1 t^(a^-1);
  endo sigma: u -> u^-1 t v^-1 t u v t^-1, v -> t^-1 v u t v^-1 t u^-1;
  endo chi: t -> t^-1, u -> u^-1, v -> v^-1;
  iterated: (t u v)^3, [v, t][v t, u^-1 t v^-1 u], [t, u]^3 [u, v]^3 [t, v]^3;
  recursion degree 3 {
    a = perm(1 2 3);
    t = (a, a^-1, t);
    u := t^a;
    v := t^(a^-1);
    reduce: a a -> a^-1, a^-1 a^-1 -> a, t t -> t^-1, t^-1 t^-1 -> t;
    branching: [a, t];
  }
  contraction D = 1;
}
"#;

const GAMMA_BAR_MODEL: &str = r#"
group "gamma-bar" {
  generators: x, y;
  recursion degree 3 {
    a = perm(1 2 3);
    s = (a, a, s);
    x := a s^-1;
    y := s^-1 a;
    reduce: a a -> a^-1, a^-1 a^-1 -> a, s s -> s^-1, s^-1 s^-1 -> s;
  }
  contraction D = 1;
}
"#;

const LAMPLIGHTER: &str = r#"
group lamplighter {
  generators: a, b, t;
  fixed: a^2, a^-1 b;
  endo phi: b -> b^t;
  iterated: [a, b];
}
"#;

const BSV: &str = r#"
group bsv {
  generators: l, t;
  endo phi: l -> t^2 l^-1 t^2, t -> t^2;
  iterated: [l, l^t], [l, l^(t^3)];
  recursion degree 2 {
    m = perm(1 2) (m^-1, 1);
    t = perm(1 2) (t, 1);
    l := t m^-1;
  }
}
"#;

const SYM_INFINITY: &str = r#"
group "sym-infinity-z" {
  generators: t, s, sb;
  fixed: s sb;
  endo phi: sb -> sb^t;
  iterated: s^2, [s, t]^3, [s, sb^(t^2)];
}
"#;

const SYM_INFINITY_TAU: &str = r#"
group "sym-infinity-z-tau" {
  generators: t, s, tb;
  fixed: t^-1 tb;
  endo psi: tb -> t tb;
  iterated: s^2, [s, t]^3, [s, s^(t tb)];
}
"#;

const RATIONALS_H: &str = r#"
group "rationals-embedding-H" {
  generators: x, y, a, b, c, d, e, c', d', e';
  fixed: c^-1 c', d^-1 d', e^-1 e', [d, x], [d, y], [e, x], [e, y];
  endo phi1: a -> b a c;
  endo phi2: a -> 1, b -> d^-1 y b x d;
  endo phi3: a -> 1, b -> y e x;
  endo phi4: c' -> c' c, d' -> d' d, e' -> e' e;
  iterated: y x b a c, (e')^(d') c';
}
"#;

const HNN_EXAMPLE: &str = r#"
group "hnn-example" {
  generators: x, y;
  endo phi: x -> x^7, y -> y^7;
  iterated: (x y)^7;
}
"#;

fn dsl(src: &str) -> GroupFile {
    parse_file(src).expect("built-in group file parses")
}

fn word(a: &Alphabet, s: &str) -> Word {
    parse_word(a, s).expect("built-in word parses")
}

fn abel(torsion: &[u64], free_rank: usize, how: &'static str) -> Option<Fixture<AbelianInvariants>> {
    Some(Fixture { value: AbelianInvariants::new(torsion, free_rank), source: Source::Derived(how) })
}

const SNF: &str = "Smith normal form of the depth-5 relator matrix";
const SCHREIER_SIMS: &str = "Schreier-Sims on the level action";

fn level_orders(values: &[(usize, u64)]) -> Vec<(usize, Fixture<u64>)> {
    values
        .iter()
        .map(|&(n, v)| (n, Fixture { value: v, source: Source::Derived(SCHREIER_SIMS) }))
        .collect()
}

fn entry(name: &str, file: GroupFile, title: &'static str, defaults: Defaults) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        title,
        file,
        direct_model: None,
        fixtures: Fixtures::default(),
        defaults,
        named_words: vec![],
        families: vec![],
        notes: vec![],
    }
}

pub(super) fn grigorchuk() -> CatalogEntry {
    let mut e = entry(
        "grigorchuk",
        dsl(GRIGORCHUK),
        "first Grigorchuk group",
        Defaults { depth: 6, level: 9, ..Defaults::default() },
    );
    e.fixtures.abelianization = abel(&[2, 2, 2], 0, SNF);
    e.fixtures.level_orders = level_orders(&[(1, 2), (2, 8), (3, 128), (4, 4096)]);
    e.notes.push("b is a recursion-only generator; b = c d in the group");
    e
}

pub(super) fn grigorchuk_lysionok() -> CatalogEntry {
    let mut e = entry(
        "grigorchuk-lysionok",
        dsl(LYSIONOK),
        "Grigorchuk group, Lysionok's relator family",
        Defaults { depth: 6, level: 9, ..Defaults::default() },
    );
    e.fixtures.abelianization = abel(&[2, 2, 2], 0, SNF);
    e.fixtures.level_orders = level_orders(&[(1, 2), (2, 8), (3, 128), (4, 4096)]);
    e
}

pub(super) fn grigorchuk_supergroup() -> CatalogEntry {
    let mut e = entry(
        "grigorchuk-supergroup",
        dsl(SUPERGROUP),
        "Grigorchuk supergroup",
        Defaults { depth: 4, level: 9, ..Defaults::default() },
    );
    e.fixtures.abelianization = abel(&[2, 2, 2, 2], 0, SNF);
    e.fixtures.level_orders = level_orders(&[(1, 2), (2, 8), (3, 128), (4, 32768)]);
    e.notes.push("bt, ct, dt stand for the decorated generators b~, c~, d~");
    e
}

pub(super) fn fabrykowski_gupta() -> CatalogEntry {
    let mut file = dsl(FABRYKOWSKI_GUPTA);
    let (a, r) = (Expr::gen(0), Expr::gen(1));
    let ai = || Some(Expr::gen(0).inv());
    let sum = |terms: Vec<(i64, Option<Expr>)>| Expr::ExpSum(Box::new(Expr::gen(1)), terms);
    let rels = [
        a.clone().pow(3),
        // r^{1 + a^-1 - 1 + a + 1}
        Expr::comm(sum(vec![(1, None), (1, ai()), (-1, None), (1, Some(a.clone())), (1, None)]), a.clone()),
        Expr::Product(vec![
            Expr::comm(a.clone().inv(), sum(vec![(1, None), (1, Some(a.clone())), (1, ai())])),
            Expr::comm(sum(vec![(1, Some(a.clone())), (1, None), (1, ai())]), a.clone()),
        ]),
    ];
    let _ = r;
    file.lpres.iterated = rels.iter().map(|e| e.build(2).expect("rank 2")).collect();
    let mut e = entry("fabrykowski-gupta", file, "Fabrykowski-Gupta group", Defaults { depth: 4, level: 6, ..Defaults::default() });
    e.fixtures.abelianization = abel(&[3, 3], 0, SNF);
    e.fixtures.level_orders = level_orders(&[(1, 3), (2, 81), (3, 59049), (4, 22876792454961)]);
    e.notes.push("exponent sums g^{n1 h1 + ...} expand to h1^-1 g^n1 h1 ... in the written order");
    e
}

pub(super) fn gupta_sidki() -> CatalogEntry {
    let mut e = entry("gupta-sidki", dsl(GUPTA_SIDKI), "Gupta-Sidki group", Defaults { depth: 4, level: 6, ..Defaults::default() });
    e.fixtures.abelianization = abel(&[3, 3], 0, SNF);
    e.fixtures.level_orders = level_orders(&[(1, 3), (2, 27), (3, 2187), (4, 1162261467)]);
    e.notes.push("u = t^a and v = t^(a^-1); sigma and chi fix a");
    e
}

/// k^s for the Γ̄ conjugation table.
pub fn conjugate_table_entry(k: &Word, s: &Word) -> Word {
    s.mul(k).mul(&s.inverse())
}

pub(super) fn gamma_bar() -> CatalogEntry {
    let mut file = dsl(GAMMA_BAR_MODEL);
    let al = file.lpres.alphabet.clone();
    let w = |s: &str| word(&al, s);
    let alpha = w("x^-1 y");
    let beta = w("y^-1 x^-1 y^-1");
    let gamma = w("x^-1 y^-1 x^-1");
    let delta = w("x y^-1");
    let prod = |ws: &[&Word]| Word::product(ws.iter().copied());
    let e_ = prod(&[&beta.inverse(), &delta, &gamma]);
    let f_ = prod(&[&gamma, &beta.inverse(), &delta]);
    let g_ = prod(&[&gamma.inverse(), &alpha, &beta]);
    let h_ = prod(&[&beta, &gamma.inverse(), &alpha]);
    let ks = [("e", &e_), ("f", &f_), ("g", &g_), ("h", &h_)];
    let kw = |name: &str| ks.iter().find(|(n, _)| *n == name).unwrap().1.clone();
    let expr = |s: &str| -> Word {
        // words over e, f, g, h with optional ^-1
        s.split_whitespace()
            .map(|t| match t.strip_suffix("^-1") {
                Some(n) => kw(n).inverse(),
                None => kw(t),
            })
            .fold(Word::identity(), |acc, x| acc.mul(&x))
    };
    let rows: [(&str, [Option<&str>; 4]); 4] = [
        ("x", [Some("g^-1 h f^-1 g^-1"), Some("f^-1 g^-1"), Some("e"), Some("g^-1 h e")]),
        ("x^-1", [Some("e h f^-1"), Some("h^-1 e^-1"), Some("h^-1 f^-1"), None]),
        ("y", [Some("g^-1 e^-1"), Some("h^-1 e^-1"), Some("g^-1 e h"), Some("f")]),
        ("y^-1", [Some("e^-1 g f"), Some("h"), Some("f^-1 g^-1"), Some("f^-1 g^-1 e f")]),
    ];
    let mut table = vec![];
    let mut fixed = vec![];
    for (s, cols) in rows {
        let sw = w(s);
        for ((kname, k), rhs) in ks.iter().zip(cols) {
            let Some(rhs) = rhs else { continue };
            let expected = expr(rhs);
            fixed.push(conjugate_table_entry(k, &sw).mul(&expected.inverse()));
            table.push(ConjugationIdentity {
                label: format!("{kname}^{s} = {rhs}"),
                element: (*k).clone(),
                conjugator: sw.clone(),
                expected,
                source: Source::Literature("conjugation table for K'"),
            });
        }
    }
    table.push(ConjugationIdentity {
        label: "h^x^-1 = h^-1 f^-1".into(),
        element: h_.clone(),
        conjugator: w("x^-1"),
        expected: expr("h^-1 f^-1"),
        source: Source::Derived("tree-action search over short words in e, f, g, h"),
    });
    for (kname, k) in ks {
        table.push(ConjugationIdentity {
            label: format!("{kname}^1 = {kname}"),
            element: k.clone(),
            conjugator: Word::identity(),
            expected: k.clone(),
            source: Source::Elementary,
        });
    }
    file.lpres.fixed = fixed;

    let mut families = vec![WordFamily {
        name: "stabilizer relators".into(),
        words: vec![
            Word::commutator(&alpha, &gamma),
            Word::commutator(&alpha.mul(&beta), &gamma.mul(&delta)),
        ],
    }];
    let mut shifted = vec![];
    for n in -3i64..=3 {
        let bn = beta.pow(n);
        let gn = gamma.pow(n);
        let an = alpha.pow(n);
        shifted.push(Word::commutator(&alpha.mul(&gamma.inverse()), &gamma.inverse().conj(&bn)));
        shifted.push(Word::commutator(&beta.conj(&gn), &delta.conj(&an)));
    }
    families.push(WordFamily { name: "stabilizer relators, n in -3..3".into(), words: shifted });

    let mut e = entry("gamma-bar", file, "the group K < Gamma-bar", Defaults { level: 8, ..Defaults::default() });
    e.named_words = [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma), ("delta", &delta), ("e", &e_), ("f", &f_), ("g", &g_), ("h", &h_)]
        .iter()
        .map(|(n, w)| (n.to_string(), (*w).clone()))
        .collect();
    e.fixtures.conjugation_table = table;
    e.fixtures.abelianization = abel(&[], 2, SNF);
    e.fixtures.level_orders = level_orders(&[(1, 3), (2, 81), (3, 19683), (4, 94143178827)]);
    e.families = families;
    e.notes.push("fixed relators are the conjugation table k^s = w; the closed L-presentation is not given");
    e.notes.push("x = a s^-1, y = s^-1 a over the recursion s = (a, a, s)");
    e.notes.push("table entries are read as k^s = s k s^-1");
    e
}

pub(super) fn lamplighter() -> CatalogEntry {
    let mut e = entry("lamplighter", dsl(LAMPLIGHTER), "lamplighter group Z/2 wr Z", Defaults { depth: 12, ..Defaults::default() });
    e.direct_model = Some(DirectModel::Lamplighter(vec![LampMove::Flip, LampMove::Flip, LampMove::Step]));
    e.fixtures.abelianization = abel(&[2], 1, SNF);
    e
}

pub(super) fn bsv() -> CatalogEntry {
    let mut e = entry("bsv", dsl(BSV), "Brunner-Sidki-Vieira group", Defaults { depth: 4, level: 10, ..Defaults::default() });
    e.fixtures.abelianization = abel(&[], 2, SNF);
    e.fixtures.level_orders = level_orders(&[(1, 2), (2, 4), (3, 16), (4, 128)]);
    e.notes.push("l stands for lambda = tau mu^-1; m is mu");
    e
}

fn hnn_example() -> CatalogEntry {
    let mut e = entry("hnn-example", dsl(HNN_EXAMPLE), "ascending example with a small-cancellation HNN embedding", Defaults { depth: 2, ..Defaults::default() });
    e.fixtures.abelianization = abel(&[7], 1, SNF);
    e
}

fn sym_infinity() -> CatalogEntry {
    let mut e = entry("sym-infinity-z", dsl(SYM_INFINITY), "Sym_inf(Z), copy of sigma", Defaults { depth: 4, ..Defaults::default() });
    let s = ShiftPerm::transposition(1, 2);
    e.direct_model = Some(DirectModel::ShiftPermutations(vec![ShiftPerm::translation(1), s.clone(), s]));
    e.fixtures.abelianization = abel(&[2], 1, SNF);
    e.notes.push("sb is the copy sigma-bar of sigma");
    e
}

fn sym_infinity_tau() -> CatalogEntry {
    let mut e = entry("sym-infinity-z-tau", dsl(SYM_INFINITY_TAU), "Sym_inf(Z), copy of tau", Defaults { depth: 4, ..Defaults::default() });
    let t = ShiftPerm::translation(1);
    e.direct_model = Some(DirectModel::ShiftPermutations(vec![t.clone(), ShiftPerm::transposition(1, 2), t]));
    e.fixtures.abelianization = abel(&[2], 1, SNF);
    e.notes.push("tb is the copy tau-bar of tau");
    e
}

fn rationals_h() -> CatalogEntry {
    let mut e = entry("rationals-embedding-H", dsl(RATIONALS_H), "L-presented group containing Q", Defaults { depth: 3, ..Defaults::default() });
    e.notes.push("[<d,e>,<x,y>] is spelled out as the four generator commutators");
    e
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn transposition(n: usize, i: usize, j: usize) -> Perm {
    let mut im: Vec<u32> = (0..n as u32).collect();
    im.swap(i, j);
    Perm::from_images(im).expect("valid transposition")
}

/// Shortlex-least minimal words over the Coxeter generators for every
/// element of Sym(n), by breadth-first search in generator order.
fn coxeter_words(n: usize) -> HashMap<Vec<u32>, Word> {
    let gens: Vec<Perm> = (0..n - 1).map(|i| transposition(n, i, i + 1)).collect();
    let id = Perm::identity(n);
    let mut seen = HashMap::from([(id.images().to_vec(), Word::identity())]);
    let mut queue = VecDeque::from([(id, Word::identity())]);
    while let Some((p, w)) = queue.pop_front() {
        for (i, g) in gens.iter().enumerate() {
            let q = p.then(g);
            if !seen.contains_key(q.images()) {
                let wq = w.mul(&Word::gen(i as u32));
                seen.insert(q.images().to_vec(), wq.clone());
                queue.push_back((q, wq));
            }
        }
    }
    seen
}

pub const MAX_SYM_DEGREE: usize = 8;

fn parse_degree(name: &str, prefix: &str, min: usize, max: usize) -> Result<Option<usize>> {
    let Some(rest) = name.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) else {
        return Ok(None);
    };
    let n: usize = rest.trim().parse().map_err(|_| Error::UnknownEntry(name.to_string()))?;
    if n < min || n > max {
        return Err(Error::InvalidInput(format!("{prefix}n) needs {min} <= n <= {max}, got {n}")));
    }
    Ok(Some(n))
}

/// Three relators over σ₁..σ_{n-1}; φ_p lifts conjugation by p ∈ {(1..n), (1 2), (3..n)}.
fn sym(n: usize) -> CatalogEntry {
    let names: Vec<String> = (1..n).map(|i| format!("s{i}")).collect();
    let alphabet = Alphabet::new(&names).expect("valid names");
    let words = coxeter_words(n);
    let cycle = Perm::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap();
    let swap = transposition(n, 0, 1);
    let tail = Perm::from_images((0..n as u32).map(|i| if i < 2 { i } else if i + 1 == n as u32 { 2 } else { i + 1 }).collect()).unwrap();
    let endo = |name: &str, p: &Perm| {
        let images = (0..n - 1)
            .map(|i| {
                let t = transposition(n, p.apply(i), p.apply(i + 1));
                words[t.images()].clone()
            })
            .collect();
        Endomorphism::new(name, images)
    };
    let endos = vec![endo("phi_cycle", &cycle), endo("phi_swap", &swap), endo("phi_tail", &tail)];
    let (s1, s2, s3) = (Word::gen(0), Word::gen(1), Word::gen(2));
    let iterated = vec![s1.pow(2), s1.mul(&s2).pow(3), s1.mul(&s3).pow(2)];
    let lpres = LPresentation::new(alphabet, vec![], endos, iterated).expect("valid");
    let mut e = entry(
        &format!("sym({n})"),
        GroupFile { name: format!("sym({n})"), lpres, model: None },
        "symmetric group, Coxeter generators",
        Defaults { depth: 4, ..Defaults::default() },
    );
    e.direct_model = Some(DirectModel::Permutations((0..n - 1).map(|i| transposition(n, i, i + 1)).collect()));
    e.fixtures.order = Some(Fixture { value: factorial(n), source: Source::Elementary });
    e.fixtures.abelianization = abel(&[2], 0, SNF);
    e.notes.push("phi_p(s_i) is the shortlex-least minimal word for the transposition (i^p, (i+1)^p)");
    e
}

/// Two relators over all transpositions σ_{i,j}.
fn sym_transpositions(n: usize) -> CatalogEntry {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let names: Vec<String> = pairs.iter().map(|(i, j)| format!("s{}_{}", i + 1, j + 1)).collect();
    let alphabet = Alphabet::new(&names).expect("valid names");
    let idx = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap() as u32;
    let endo = |name: &str, p: &Perm| {
        Endomorphism::new(name, pairs.iter().map(|&(i, j)| Word::gen(idx(p.apply(i), p.apply(j)))).collect())
    };
    let swap = transposition(n, 0, 1);
    let cycle = Perm::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap();
    let endos = vec![endo("phi_swap", &swap), endo("phi_cycle", &cycle)];
    let (s12, s23, s13) = (Word::gen(idx(0, 1)), Word::gen(idx(1, 2)), Word::gen(idx(0, 2)));
    let iterated = vec![s12.pow(2), Word::product([&s12, &s23, &s13, &s23])];
    let lpres = LPresentation::new(alphabet, vec![], endos, iterated).expect("valid");
    let name = format!("sym-transpositions({n})");
    let mut e = entry(&name, GroupFile { name: name.clone(), lpres, model: None }, "symmetric group, all transpositions", Defaults { depth: 6, ..Defaults::default() });
    e.direct_model = Some(DirectModel::Permutations(pairs.iter().map(|&(i, j)| transposition(n, i, j)).collect()));
    e.fixtures.order = Some(Fixture { value: factorial(n), source: Source::Elementary });
    e.fixtures.abelianization = abel(&[2], 0, SNF);
    e.notes.push("s{i}_{j} is the transposition (i, j)");
    e
}

fn zn(n: usize) -> CatalogEntry {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let alphabet = Alphabet::new(&names).expect("valid names");
    let n32 = n as u32;
    let phi1 = Endomorphism::new("phi1", (0..n32).map(|i| Word::gen((i + 1) % n32)).collect());
    let phi2 = Endomorphism::new("phi2", (0..n32).map(|i| Word::gen(if i == 0 { 0 } else if i + 1 == n32 { 1 } else { i + 1 })).collect());
    let lpres = LPresentation::new(alphabet, vec![], vec![phi1, phi2], vec![Word::commutator(&Word::gen(0), &Word::gen(1))]).expect("valid");
    let name = format!("zn({n})");
    let mut e = entry(&name, GroupFile { name: name.clone(), lpres, model: None }, "free abelian group", Defaults { depth: 3, ..Defaults::default() });
    e.direct_model = Some(DirectModel::FreeAbelian);
    e.fixtures.abelianization = Some(Fixture { value: AbelianInvariants::new(&[], n), source: Source::Elementary });
    e
}

pub const MAX_ZN_RANK: usize = 12;

pub(super) fn lookup(name: &str) -> Result<CatalogEntry> {
    if let Some(n) = parse_degree(name, "sym(", 4, MAX_SYM_DEGREE)? {
        return Ok(sym(n));
    }
    if let Some(n) = parse_degree(name, "sym-transpositions(", 3, MAX_SYM_DEGREE)? {
        return Ok(sym_transpositions(n));
    }
    if let Some(n) = parse_degree(name, "zn(", 2, MAX_ZN_RANK)? {
        return Ok(zn(n));
    }
    Ok(match name {
        "grigorchuk" => grigorchuk(),
        "grigorchuk-lysionok" => grigorchuk_lysionok(),
        "grigorchuk-supergroup" => grigorchuk_supergroup(),
        "fabrykowski-gupta" => fabrykowski_gupta(),
        "gamma-bar" => gamma_bar(),
        "gupta-sidki" => gupta_sidki(),
        "lamplighter" => lamplighter(),
        "bsv" => bsv(),
        "hnn-example" => hnn_example(),
        "sym-infinity-z" => sym_infinity(),
        "sym-infinity-z-tau" => sym_infinity_tau(),
        "rationals-embedding-H" => rationals_h(),
        _ => return Err(Error::UnknownEntry(name.to_string())),
    })
}
