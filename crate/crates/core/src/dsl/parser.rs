use super::lexer::{describe, lex, Tok, Token};
use super::GroupFile;
use crate::error::{Error, Result};
use crate::lpres::LPresentation;
use crate::treeauto::{GenRecursion, Perm, RewriteRule, SelfSimilarSpec, TreeModel};
use crate::words::{Alphabet, Endomorphism, Expr, Word};

#[derive(Clone, Debug)]
enum Ast {
    One,
    Ident(String, usize, usize),
    Seq(Vec<Ast>),
    Pow(Box<Ast>, i64),
    Conj(Box<Ast>, Box<Ast>),
    Comm(Vec<Ast>),
}

impl Ast {
    fn to_expr(&self, alphabet: &Alphabet) -> Result<Expr> {
        Ok(match self {
            Ast::One => Expr::One,
            Ast::Ident(name, line, col) => {
                let gens = split_identifier(alphabet, name).ok_or_else(|| Error::Syntax {
                    line: *line,
                    column: *col,
                    message: format!("unknown generator `{name}`"),
                })?;
                if gens.len() == 1 {
                    Expr::Gen(gens[0])
                } else {
                    Expr::Product(gens.into_iter().map(Expr::Gen).collect())
                }
            }
            Ast::Seq(xs) => Expr::Product(xs.iter().map(|x| x.to_expr(alphabet)).collect::<Result<_>>()?),
            Ast::Pow(x, n) => x.to_expr(alphabet)?.pow(*n),
            Ast::Conj(x, h) => x.to_expr(alphabet)?.conj(h.to_expr(alphabet)?),
            Ast::Comm(xs) => {
                let mut it = xs.iter();
                let first = it.next().expect("commutator has two entries").to_expr(alphabet)?;
                it.try_fold(first, |acc, x| Ok::<_, Error>(Expr::comm(acc, x.to_expr(alphabet)?)))?
            }
        })
    }

    fn resolve(&self, alphabet: &Alphabet) -> Result<Word> {
        self.to_expr(alphabet)?.build(alphabet.len())
    }
}

/// Exact name, else the greedy longest-prefix split into generator names.
fn split_identifier(alphabet: &Alphabet, name: &str) -> Option<Vec<u32>> {
    if let Some(g) = alphabet.index_of(name) {
        return Some(vec![g]);
    }
    let mut out = Vec::new();
    let mut rest = name;
    while !rest.is_empty() {
        let (g, len) = alphabet
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len())
            .map(|(i, n)| (i as u32, n.len()))?;
        out.push(g);
        rest = &rest[len..];
    }
    Some(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type Located<T> = (T, usize, usize);

struct RawRecursion {
    /// Position of the `recursion` keyword.
    at: (usize, usize),
    degree: usize,
    gens: Vec<(Located<String>, Option<Perm>, Option<Vec<Ast>>)>,
    defs: Vec<(Located<String>, Ast)>,
    rules: Vec<(Ast, Ast)>,
    branching: Vec<Ast>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax { line, column, message: message.into() })
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", describe(&t), describe(self.peek())))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.next();
                Ok(())
            }
            t => {
                let t = describe(t);
                self.error(format!("expected `{kw}`, found {t}"))
            }
        }
    }

    fn ident(&mut self) -> Result<Located<String>> {
        let (l, c) = self.here();
        match self.next() {
            Tok::Ident(s) => Ok((s, l, c)),
            t => {
                self.pos -= 1;
                self.error(format!("expected a name, found {}", describe(&t)))
            }
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            t => self.error(format!("expected an integer, found {}", describe(&t))),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::LParen | Tok::LBrack | Tok::Int(_))
    }

    fn word(&mut self) -> Result<Ast> {
        let mut terms = Vec::new();
        while self.starts_atom() {
            terms.push(self.term()?);
        }
        match terms.len() {
            0 => self.error(format!("expected a word, found {}", describe(self.peek()))),
            1 => Ok(terms.pop().unwrap()),
            _ => Ok(Ast::Seq(terms)),
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut a = self.atom()?;
        while self.eat(&Tok::Caret) {
            a = match self.peek().clone() {
                Tok::Minus => {
                    self.next();
                    let n = self.int()?;
                    Ast::Pow(Box::new(a), -(n as i64))
                }
                Tok::Int(n) => {
                    self.next();
                    Ast::Pow(Box::new(a), n as i64)
                }
                _ => Ast::Conj(Box::new(a), Box::new(self.atom()?)),
            };
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Ast> {
        let (l, c) = self.here();
        match self.next() {
            Tok::Ident(s) => Ok(Ast::Ident(s, l, c)),
            Tok::Int(1) => Ok(Ast::One),
            Tok::LParen => {
                let w = self.word()?;
                self.expect(Tok::RParen)?;
                Ok(w)
            }
            Tok::LBrack => {
                let mut parts = vec![self.word()?];
                self.expect(Tok::Comma)?;
                parts.push(self.word()?);
                while self.eat(&Tok::Comma) {
                    parts.push(self.word()?);
                }
                self.expect(Tok::RBrack)?;
                Ok(Ast::Comm(parts))
            }
            t => {
                self.pos -= 1;
                self.error(format!("expected a generator, `1`, `(` or `[`, found {}", describe(&t)))
            }
        }
    }

    fn word_list(&mut self) -> Result<Vec<Ast>> {
        let mut ws = Vec::new();
        if matches!(self.peek(), Tok::Semi) {
            return Ok(ws);
        }
        ws.push(self.word()?);
        while self.eat(&Tok::Comma) {
            ws.push(self.word()?);
        }
        Ok(ws)
    }

    fn section_header(&mut self, kw: &str) -> Result<()> {
        self.keyword(kw)?;
        self.expect(Tok::Colon)
    }

    fn perm(&mut self, degree: usize) -> Result<Perm> {
        self.keyword("perm")?;
        let mut cycles = Vec::new();
        loop {
            self.expect(Tok::LParen)?;
            let mut c = Vec::new();
            while let Tok::Int(n) = self.peek().clone() {
                self.next();
                c.push(n as u32);
            }
            self.expect(Tok::RParen)?;
            cycles.push(c);
            let another = matches!(self.peek(), Tok::LParen)
                && matches!(self.peek_at(1), Tok::Int(_))
                && matches!(self.peek_at(2), Tok::Int(_));
            if !another {
                break;
            }
        }
        match Perm::from_cycles(degree, &cycles) {
            Ok(p) => Ok(p),
            Err(e) => self.error(e.to_string()),
        }
    }

    fn recursion(&mut self) -> Result<RawRecursion> {
        let at = self.here();
        self.keyword("recursion")?;
        self.keyword("degree")?;
        let degree = self.int()? as usize;
        if degree < 2 {
            return self.error("tree degree must be at least 2");
        }
        self.expect(Tok::LBrace)?;
        let mut r = RawRecursion { at, degree, gens: vec![], defs: vec![], rules: vec![], branching: vec![] };
        while !self.eat(&Tok::RBrace) {
            let is_section = matches!(self.peek_at(1), Tok::Colon);
            match self.peek().clone() {
                Tok::Ident(kw) if is_section && kw == "reduce" => {
                    self.section_header("reduce")?;
                    loop {
                        let lhs = self.word()?;
                        self.expect(Tok::Arrow)?;
                        let rhs = self.word()?;
                        r.rules.push((lhs, rhs));
                        if !self.eat(&Tok::Comma) {
                            break;
                        }
                    }
                }
                Tok::Ident(kw) if is_section && kw == "branching" => {
                    self.section_header("branching")?;
                    r.branching.extend(self.word_list()?);
                }
                Tok::Ident(_) if matches!(self.peek_at(1), Tok::Define) => {
                    let name = self.ident()?;
                    self.next();
                    r.defs.push((name, self.word()?));
                }
                Tok::Ident(_) => {
                    let name = self.ident()?;
                    self.expect(Tok::Eq)?;
                    let top = match self.peek() {
                        Tok::Ident(s) if s == "perm" => Some(self.perm(degree)?),
                        _ => None,
                    };
                    let sections = if self.eat(&Tok::LParen) {
                        let ws = self.word_list()?;
                        self.expect(Tok::RParen)?;
                        Some(ws)
                    } else {
                        None
                    };
                    if top.is_none() && sections.is_none() {
                        return self.error("expected `perm(...)` or a section list");
                    }
                    r.gens.push((name, top, sections));
                }
                t => {
                    let t = describe(&t);
                    return self.error(format!("unexpected {t} in recursion block"));
                }
            }
            self.eat(&Tok::Semi);
        }
        Ok(r)
    }

    fn file(&mut self) -> Result<GroupFile> {
        self.keyword("group")?;
        let name = match self.next() {
            Tok::Ident(s) | Tok::Str(s) => s,
            t => {
                self.pos -= 1;
                return self.error(format!("expected a group name, found {}", describe(&t)));
            }
        };
        self.expect(Tok::LBrace)?;
        let mut gens: Option<Vec<Located<String>>> = None;
        let mut fixed = Vec::new();
        let mut iterated = Vec::new();
        let mut endos: Vec<(String, Vec<(Located<String>, Ast)>)> = Vec::new();
        let mut recursion: Option<RawRecursion> = None;
        let mut contraction: Option<(usize, usize, usize)> = None;
        while !self.eat(&Tok::RBrace) {
            let (line, col) = self.here();
            let kw = match self.peek() {
                Tok::Ident(s) => s.clone(),
                t => {
                    let t = describe(t);
                    return self.error(format!("expected a section, found {t}"));
                }
            };
            match kw.as_str() {
                "generators" => {
                    self.section_header("generators")?;
                    if gens.is_some() {
                        return Err(Error::Syntax { line, column: col, message: "duplicate generators section".into() });
                    }
                    if matches!(self.peek(), Tok::Semi) {
                        return self.error("generator list is empty");
                    }
                    let mut list = vec![self.ident()?];
                    while self.eat(&Tok::Comma) {
                        list.push(self.ident()?);
                    }
                    gens = Some(list);
                    self.expect(Tok::Semi)?;
                }
                "fixed" => {
                    self.section_header("fixed")?;
                    fixed.extend(self.word_list()?);
                    self.expect(Tok::Semi)?;
                }
                "iterated" => {
                    self.section_header("iterated")?;
                    iterated.extend(self.word_list()?);
                    self.expect(Tok::Semi)?;
                }
                "endo" => {
                    self.next();
                    let (ename, ..) = self.ident()?;
                    self.expect(Tok::Colon)?;
                    let mut images = Vec::new();
                    if !matches!(self.peek(), Tok::Semi) {
                        loop {
                            let g = self.ident()?;
                            self.expect(Tok::Arrow)?;
                            images.push((g, self.word()?));
                            if !self.eat(&Tok::Comma) {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::Semi)?;
                    endos.push((ename, images));
                }
                "recursion" => {
                    if recursion.is_some() {
                        return self.error("duplicate recursion block");
                    }
                    recursion = Some(self.recursion()?);
                    self.eat(&Tok::Semi);
                }
                "contraction" => {
                    self.next();
                    self.keyword("D")?;
                    self.expect(Tok::Eq)?;
                    contraction = Some((self.int()? as usize, line, col));
                    self.expect(Tok::Semi)?;
                }
                other => return self.error(format!("unknown section `{other}`")),
            }
        }
        if !matches!(self.peek(), Tok::Eof) {
            return self.error(format!("trailing input {}", describe(self.peek())));
        }
        let gens = match gens {
            Some(g) => g,
            None => return self.error("missing generators section"),
        };
        let names: Vec<&str> = gens.iter().map(|g| g.0.as_str()).collect();
        let alphabet = Alphabet::new(&names).map_err(|e| Error::Syntax {
            line: gens[0].1,
            column: gens[0].2,
            message: e.to_string(),
        })?;
        let fixed = fixed.iter().map(|w| w.resolve(&alphabet)).collect::<Result<Vec<_>>>()?;
        let iterated = iterated.iter().map(|w| w.resolve(&alphabet)).collect::<Result<Vec<_>>>()?;
        let mut es = Vec::new();
        for (ename, images) in endos {
            let mut e = Endomorphism::identity(ename.clone(), alphabet.len());
            let mut seen = vec![false; alphabet.len()];
            for ((g, line, col), w) in images {
                let gi = alphabet.index_of(&g).ok_or_else(|| Error::Syntax {
                    line,
                    column: col,
                    message: format!("unknown generator `{g}` in endomorphism `{ename}`"),
                })?;
                if std::mem::replace(&mut seen[gi as usize], true) {
                    return Err(Error::Syntax {
                        line,
                        column: col,
                        message: format!("`{g}` mapped twice in endomorphism `{ename}`"),
                    });
                }
                e.set_image(gi, w.resolve(&alphabet)?);
            }
            es.push(e);
        }
        let lpres = LPresentation::new(alphabet, fixed, es, iterated)?;
        let model = match recursion {
            Some(r) => Some(build_model(r, &lpres.alphabet, contraction.map(|c| c.0))?),
            None => {
                if let Some((_, line, column)) = contraction {
                    return Err(Error::Syntax {
                        line,
                        column,
                        message: "contraction constant given without a recursion block".into(),
                    });
                }
                None
            }
        };
        Ok(GroupFile { name, lpres, model })
    }
}

fn build_model(r: RawRecursion, outer: &Alphabet, contraction: Option<usize>) -> Result<TreeModel> {
    let (line, column) = r.at;
    let names: Vec<&str> = r.gens.iter().map(|g| g.0 .0.as_str()).collect();
    if names.is_empty() {
        return Err(Error::Syntax { line, column, message: "recursion block declares no generators".into() });
    }
    let alphabet = Alphabet::new(&names).map_err(|e| {
        let (_, l, c) = &r.gens[0].0;
        Error::Syntax { line: *l, column: *c, message: e.to_string() }
    })?;
    let mut recs = Vec::new();
    for ((name, line, col), top, sections) in &r.gens {
        let sections = match sections {
            Some(ws) => {
                if ws.len() != r.degree {
                    return Err(Error::Syntax {
                        line: *line,
                        column: *col,
                        message: format!("`{name}` has {} sections, expected {}", ws.len(), r.degree),
                    });
                }
                ws.iter().map(|w| w.resolve(&alphabet)).collect::<Result<Vec<_>>>()?
            }
            None => vec![Word::identity(); r.degree],
        };
        let top = top.clone().unwrap_or_else(|| Perm::identity(r.degree));
        recs.push(GenRecursion { sections, top });
    }
    let rules = r
        .rules
        .iter()
        .map(|(l, rh)| Ok(RewriteRule { lhs: l.resolve(&alphabet)?, rhs: rh.resolve(&alphabet)? }))
        .collect::<Result<Vec<_>>>()?;
    let mut spec = SelfSimilarSpec::new(r.degree, alphabet, recs)?.with_rules(rules)?;
    spec.contraction = contraction;
    spec.branching = r.branching.iter().map(|w| w.resolve(spec.alphabet())).collect::<Result<_>>()?;
    let mut embedding: Vec<Option<Word>> = vec![None; outer.len()];
    for ((name, line, col), w) in &r.defs {
        let g = outer.index_of(name).ok_or_else(|| Error::Syntax {
            line: *line,
            column: *col,
            message: format!("`{name}` is not a generator of the presentation"),
        })?;
        embedding[g as usize] = Some(w.resolve(spec.alphabet())?);
    }
    let embedding = embedding
        .into_iter()
        .enumerate()
        .map(|(i, w)| match w {
            Some(w) => Ok(w),
            None => spec.alphabet().gen(outer.name(i as u32)).map_err(|_| Error::Syntax {
                line,
                column,
                message: format!("generator `{}` has no tree realization", outer.name(i as u32)),
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    TreeModel::new(spec, embedding)
}

pub fn parse_file(src: &str) -> Result<GroupFile> {
    Parser { toks: lex(src)?, pos: 0 }.file()
}

pub fn parse_word(alphabet: &Alphabet, src: &str) -> Result<Word> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let w = p.word()?;
    if !matches!(p.peek(), Tok::Eof) {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    w.resolve(alphabet)
}

pub fn parse_words(alphabet: &Alphabet, src: &str) -> Result<Vec<Word>> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let ws = if matches!(p.peek(), Tok::Eof) { vec![] } else { p.word_list()? };
    if !matches!(p.peek(), Tok::Eof) {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    ws.iter().map(|w| w.resolve(alphabet)).collect()
}
