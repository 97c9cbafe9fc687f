use super::GroupFile;
use crate::words::{is_identifier, Alphabet, Word};

fn list(alphabet: &Alphabet, ws: &[Word]) -> String {
    ws.iter().map(|w| alphabet.format(w)).collect::<Vec<_>>().join(", ")
}

/// Canonical text of a group file; `parse_file(print(g)) == g`.
pub fn print(g: &GroupFile) -> String {
    let l = &g.lpres;
    let a = &l.alphabet;
    let mut out = String::new();
    let name = if is_identifier(&g.name) { g.name.clone() } else { format!("\"{}\"", g.name) };
    out.push_str(&format!("group {name} {{\n"));
    out.push_str(&format!("  generators: {};\n", a.names().join(", ")));
    if !l.fixed.is_empty() {
        out.push_str(&format!("  fixed: {};\n", list(a, &l.fixed)));
    }
    for e in &l.endos {
        let maps: Vec<String> = e
            .images()
            .iter()
            .enumerate()
            .filter(|(i, w)| **w != Word::gen(*i as u32))
            .map(|(i, w)| format!("{} -> {}", a.name(i as u32), a.format(w)))
            .collect();
        out.push_str(&format!("  endo {}: {};\n", e.name, maps.join(", ")));
    }
    if !l.iterated.is_empty() {
        out.push_str(&format!("  iterated: {};\n", list(a, &l.iterated)));
    }
    if let Some(m) = &g.model {
        let s = &m.spec;
        let sa = s.alphabet();
        out.push_str(&format!("  recursion degree {} {{\n", s.degree()));
        for (i, r) in s.recursions().iter().enumerate() {
            let mut line = format!("    {} =", sa.name(i as u32));
            if !r.top.is_identity() {
                line.push_str(" perm");
                for c in r.top.cycles() {
                    let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    line.push_str(&format!("({})", c.join(" ")));
                }
            }
            if r.top.is_identity() || r.sections.iter().any(|w| !w.is_identity()) {
                line.push_str(&format!(" ({})", list(sa, &r.sections)));
            }
            out.push_str(&line);
            out.push_str(";\n");
        }
        for (i, w) in m.embedding.iter().enumerate() {
            let n = a.name(i as u32);
            if sa.index_of(n).map(Word::gen).as_ref() != Some(w) {
                out.push_str(&format!("    {n} := {};\n", sa.format(w)));
            }
        }
        if !s.rules().is_empty() {
            let rules: Vec<String> = s
                .rules()
                .iter()
                .map(|r| format!("{} -> {}", sa.format(&r.lhs), sa.format(&r.rhs)))
                .collect();
            out.push_str(&format!("    reduce: {};\n", rules.join(", ")));
        }
        if !s.branching.is_empty() {
            out.push_str(&format!("    branching: {};\n", list(sa, &s.branching)));
        }
        out.push_str("  }\n");
        if let Some(d) = s.contraction {
            out.push_str(&format!("  contraction D = {d};\n"));
        }
    }
    out.push_str("}\n");
    out
}
