//! The `.grp` presentation language.
//!
//! ```text
//! group grigorchuk {
//!   generators: a, c, d;
//!   endo sigma: a -> a c a, c -> c d, d -> c;
//!   iterated: a^2, [d, d^a], [d^(a c), d^(a c a)];
//!   recursion degree 2 {
//!     a = perm(1 2);
//!     b = (a, c);
//!     c = (a, d);
//!     d = (1, b);
//!   }
//! }
//! ```
//!
//! `x^y` with a word exponent is conjugation `y⁻¹xy`, `[u,v] = u⁻¹v⁻¹uv`,
//! and identifiers that are not generator names are split greedily into
//! generator names (`aca` = `a c a`).

mod lexer;
mod parser;
mod printer;

pub use parser::{parse_file, parse_word, parse_words};
pub use printer::print;

use crate::lpres::LPresentation;
use crate::treeauto::TreeModel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub name: String,
    pub lpres: LPresentation,
    pub model: Option<TreeModel>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::words::Alphabet;

    const GRIG: &str = "
group grigorchuk {
  generators: a, c, d;
  endo sigma: a -> aca, c -> cd, d -> c;
  iterated: a^2, [d, d^a], [d^(ac), (d^(ac))^a];
  recursion degree 2 {
    a = perm(1 2)
    b = (a, c)
    c = (a, d)
    d = (1, b)
    reduce: a^-1 -> a, a a -> 1;
    branching: (a b)^2;
  }
  contraction D = 1;
}";

    #[test]
    fn parses_grigorchuk() {
        let g = parse_file(GRIG).unwrap();
        assert_eq!(g.name, "grigorchuk");
        assert_eq!(g.lpres.iterated.len(), 3);
        assert_eq!(g.lpres.endos.len(), 1);
        assert_eq!(g.lpres.format_word(&g.lpres.iterated[1]), "d^-1 a^-1 d^-1 a d a^-1 d a");
        let m = g.model.as_ref().unwrap();
        assert_eq!(m.spec.degree(), 2);
        assert_eq!(m.spec.contraction, Some(1));
        assert_eq!(m.spec.branching.len(), 1);
        assert!(m.is_identity_map(&g.lpres.alphabet));
    }

    #[test]
    fn missing_realization_points_at_recursion_block() {
        let src = "group g {\n  generators: a, x;\n  recursion degree 2 {\n    a = perm(1 2);\n  }\n}";
        match parse_file(src) {
            Err(Error::Syntax { line, column, message }) => {
                assert_eq!((line, column), (3, 3));
                assert!(message.contains("`x`"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn print_parse_roundtrip() {
        let g = parse_file(GRIG).unwrap();
        let text = print(&g);
        let g2 = parse_file(&text).unwrap();
        assert_eq!(g, g2);
        assert_eq!(print(&g2), text);
    }

    #[test]
    fn embedding_definitions() {
        let src = "group \"bsv\" { generators: l, t; iterated: [l, l^t];
            recursion degree 2 { m = perm(1 2) (m^-1, 1); t = perm(1 2) (t, 1); l := t m^-1; } }";
        let g = parse_file(src).unwrap();
        let m = g.model.unwrap();
        assert_eq!(m.spec.alphabet().format(&m.embedding[0]), "t m^-1");
        assert!(print(&parse_file(src).unwrap()).contains("l := t m^-1;"));
    }

    #[test]
    fn syntax_errors_have_positions() {
        assert!(matches!(
            parse_file("group g { generators: ; }"),
            Err(Error::Syntax { line: 1, column: 23, .. })
        ));
        let e = parse_file("group g {\n generators: a;\n iterated: a q;\n}").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 3, column: 14, .. }), "{e}");
        assert!(parse_file("group g { generators: a; iterated: a^; }").is_err());
        assert!(parse_file("group g { generators: a; recursion degree 2 { a = (1); } }").is_err());
        assert!(parse_file("group g { generators: a; contraction D = 2; }").is_err());
        assert!(parse_file("group g { generators: a, a; }").is_err());
    }

    #[test]
    fn word_syntax() {
        let a = Alphabet::new(&["a", "d", "x1", "x"]).unwrap();
        assert_eq!(parse_word(&a, "[d, d^a]").unwrap().len(), 8);
        assert_eq!(parse_word(&a, "adad adad").unwrap(), parse_word(&a, "(a d)^4").unwrap());
        assert_eq!(parse_word(&a, "x1x").unwrap().len(), 2);
        assert_eq!(parse_word(&a, "d^a^x").unwrap(), parse_word(&a, "(d^a)^x").unwrap());
        assert_eq!(parse_word(&a, "[a,d,x]").unwrap(), parse_word(&a, "[[a,d],x]").unwrap());
        assert!(parse_word(&a, "1").unwrap().is_identity());
        assert!(parse_word(&a, "a^-1 a").unwrap().is_identity());
        assert!(parse_word(&a, "b").is_err());
        assert_eq!(parse_words(&a, "a, d x").unwrap().len(), 2);
    }
}
