use super::{FinitePresentation, LPresentation};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Endomorphism, Letter, Word};

/// A generator `word` of the associated subgroup and its image under ψ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnnGenerator {
    pub word: Word,
    pub image: Word,
}

/// Lifting data of an extension `1 → G → X → H → 1`, as words over G's
/// generators: `g_p` per fixed relator of H, and `g_{s,t} = s^{σ(t)}`
/// indexed `[s][t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    pub g_p: Vec<Word>,
    pub g_st: Vec<Vec<Word>>,
}

fn unique_endo_names(endos: &mut [Endomorphism]) {
    let mut seen: Vec<String> = Vec::new();
    for e in endos.iter_mut() {
        let base = e.name.clone();
        let mut k = 2;
        while seen.contains(&e.name) {
            e.name = format!("{base}{k}");
            k += 1;
        }
        seen.push(e.name.clone());
    }
}

impl LPresentation {
    /// ⟨S∪T | Q∪P | Φ∪Ψ | R∪U⟩, every endomorphism fixing the other factor.
    pub fn free_product(&self, other: &LPresentation) -> LPresentation {
        let (alphabet, map) = self.alphabet.disjoint_union(&other.alphabet);
        let n = alphabet.len();
        let own: Vec<u32> = (0..self.rank() as u32).collect();
        let mut fixed = self.fixed.clone();
        fixed.extend(other.fixed.iter().map(|w| w.relabel(&map)));
        let mut iterated = self.iterated.clone();
        iterated.extend(other.iterated.iter().map(|w| w.relabel(&map)));
        let mut endos: Vec<Endomorphism> = self.endos.iter().map(|e| e.extend(&own, n)).collect();
        endos.extend(other.endos.iter().map(|e| e.extend(&map, n)));
        unique_endo_names(&mut endos);
        LPresentation { alphabet, fixed, endos, iterated }
    }

    /// ⟨S∪{ψ} | Q∪{ψ(t)⁻¹t^ψ} | Φ | R⟩ for ψ: ⟨T⟩ → K.
    pub fn hnn_extension(&self, stable: &str, gens: &[HnnGenerator]) -> Result<LPresentation> {
        for g in gens {
            self.check_same_alphabet(&[g.word.clone(), g.image.clone()])?;
        }
        let alphabet = self.alphabet.extended(&[stable])?;
        let psi = Word::gen(self.rank() as u32);
        let own: Vec<u32> = (0..self.rank() as u32).collect();
        let mut fixed = self.fixed.clone();
        fixed.extend(gens.iter().map(|g| g.image.inverse().mul(&g.word.conj(&psi))));
        let endos = self.endos.iter().map(|e| e.extend(&own, alphabet.len())).collect();
        Ok(LPresentation { alphabet, fixed, endos, iterated: self.iterated.clone() })
    }

    /// The presentation of an extension of `self` (= G) by `h` (= H).
    pub fn group_extension(&self, h: &LPresentation, data: &ExtensionData, split: bool) -> Result<LPresentation> {
        if !split && !(h.endos.is_empty() && h.iterated.is_empty()) {
            return Err(Error::Unsupported(
                "non-split extensions need a finitely presented quotient".into(),
            ));
        }
        if data.g_p.len() != h.fixed.len() {
            return Err(Error::InvalidInput(format!(
                "{} lifts for {} relators of the quotient",
                data.g_p.len(),
                h.fixed.len()
            )));
        }
        if data.g_st.len() != self.rank() || data.g_st.iter().any(|r| r.len() != h.rank()) {
            return Err(Error::InvalidInput("conjugation data must be |S| × |T|".into()));
        }
        if split && data.g_p.iter().any(|w| !w.is_identity()) {
            return Err(Error::InvalidInput("split extensions have trivial relator lifts".into()));
        }
        self.check_same_alphabet(&data.g_p)?;
        for row in &data.g_st {
            self.check_same_alphabet(row)?;
        }
        let (alphabet, map) = self.alphabet.disjoint_union(&h.alphabet);
        let n = alphabet.len();
        let own: Vec<u32> = (0..self.rank() as u32).collect();
        let mut fixed = self.fixed.clone();
        for (p, g) in h.fixed.iter().zip(&data.g_p) {
            fixed.push(p.relabel(&map).mul(&g.inverse()));
        }
        for s in 0..self.rank() {
            for t in 0..h.rank() {
                let st = Word::gen(s as u32).conj(&Word::gen(map[t]));
                fixed.push(st.mul(&data.g_st[s][t].inverse()));
            }
        }
        let mut endos: Vec<Endomorphism> = self.endos.iter().map(|e| e.extend(&own, n)).collect();
        endos.extend(h.endos.iter().map(|e| e.extend(&map, n)));
        unique_endo_names(&mut endos);
        let mut iterated = self.iterated.clone();
        iterated.extend(h.iterated.iter().map(|w| w.relabel(&map)));
        Ok(LPresentation { alphabet, fixed, endos, iterated })
    }

    /// `G ≀ H` for abelian G (not checked): generators S, T, S̄ with
    /// `s̄ = s`, `ω_t(s̄) = s̄^t` and iterated relators `[s₁, s̄₂]`.
    pub fn wreath_product(&self, h: &LPresentation) -> LPresentation {
        let (st, tmap) = self.alphabet.disjoint_union(&h.alphabet);
        let bar_names: Vec<String> = self.alphabet.names().iter().map(|s| format!("{s}b")).collect();
        let bar_alpha = Alphabet::new(&bar_names).expect("suffixed identifiers");
        let (alphabet, bmap) = st.disjoint_union(&bar_alpha);
        let n = alphabet.len();
        let k = self.rank();
        let own: Vec<u32> = (0..k as u32).collect();
        let mut fixed = self.fixed.clone();
        fixed.extend(h.fixed.iter().map(|w| w.relabel(&tmap)));
        for s in 0..k {
            fixed.push(Word::reduce([Letter::neg(s as u32), Letter::pos(bmap[s])]));
        }
        let mut endos: Vec<Endomorphism> = self.endos.iter().map(|e| e.extend(&own, n)).collect();
        endos.extend(h.endos.iter().map(|e| e.extend(&tmap, n)));
        for (t, &tg) in tmap.iter().enumerate() {
            let pairs = bmap.iter().map(|&b| (b, Word::gen(b).conj(&Word::gen(tg)))).collect();
            endos.push(Endomorphism::from_pairs(format!("omega_{}", h.alphabet.name(t as u32)), n, pairs));
        }
        unique_endo_names(&mut endos);
        let mut iterated = self.iterated.clone();
        iterated.extend(h.iterated.iter().map(|w| w.relabel(&tmap)));
        for s1 in 0..k {
            for &b in &bmap {
                iterated.push(Word::commutator(&Word::gen(s1 as u32), &Word::gen(b)));
            }
        }
        LPresentation { alphabet, fixed, endos, iterated }
    }

    /// ⟨S | Q∪N | Φ | R⟩.
    pub fn quotient(&self, extra: &[Word]) -> Result<LPresentation> {
        self.check_same_alphabet(extra)?;
        let mut l = self.clone();
        l.fixed.extend(extra.iter().cloned());
        Ok(l)
    }

    /// The finitely presented ascending HNN extension
    /// ⟨S∪Φ | {s^φ φ(s)⁻¹} ∪ R⟩.
    pub fn hnn_embed(&self) -> Result<FinitePresentation> {
        if !self.is_ascending() {
            return Err(Error::NotAscending);
        }
        let stable: Vec<String> = self.endos.iter().map(|e| e.name.clone()).collect();
        let mut names = self.alphabet.names().to_vec();
        for s in &stable {
            let mut c = s.clone();
            let mut k = 2;
            while names.contains(&c) {
                c = format!("{s}{k}");
                k += 1;
            }
            names.push(c);
        }
        let alphabet = Alphabet::new(&names)?;
        let mut relators = Vec::new();
        for s in 0..self.rank() as u32 {
            for (j, e) in self.endos.iter().enumerate() {
                let phi = Word::gen((self.rank() + j) as u32);
                relators.push(Word::gen(s).conj(&phi).mul(&e.image(s).inverse()));
            }
        }
        relators.extend(self.iterated.iter().cloned());
        Ok(FinitePresentation { alphabet, relators })
    }

    /// ⟨X⊔Y | Y | {φ_{x,y}} | {w}⟩ with `φ_{x,y}(y) = x y` for `x ∈ X^{±1}`.
    pub fn relatively_free(x: &Alphabet, y: &Alphabet, w: &Word) -> Result<LPresentation> {
        if let Some(n) = x.names().iter().find(|n| y.contains(n)) {
            return Err(Error::InvalidInput(format!("`{n}` occurs in both alphabets")));
        }
        y.check_word(w)?;
        let names: Vec<&String> = x.names().iter().chain(y.names()).collect();
        let alphabet = Alphabet::new(&names)?;
        let off = x.len() as u32;
        let n = alphabet.len();
        let mut endos = Vec::new();
        for xi in 0..x.len() as u32 {
            for inv in [false, true] {
                for yi in 0..y.len() as u32 {
                    let name = format!(
                        "phi_{}{}_{}",
                        x.name(xi),
                        if inv { "i" } else { "" },
                        y.name(yi)
                    );
                    let img = Word::reduce([Letter::new(xi, inv), Letter::pos(off + yi)]);
                    endos.push(Endomorphism::from_pairs(name, n, vec![(off + yi, img)]));
                }
            }
        }
        let shift: Vec<u32> = (0..y.len() as u32).map(|g| g + off).collect();
        Ok(LPresentation {
            alphabet,
            fixed: (0..y.len() as u32).map(|g| Word::gen(g + off)).collect(),
            endos,
            iterated: vec![w.relabel(&shift)],
        })
    }
}
