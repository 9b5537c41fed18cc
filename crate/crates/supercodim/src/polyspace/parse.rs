//! Parser and expander for the polynomial DSL.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    := '-'? term (('+'|'-') term)*
//! term    := integer? factor+            juxtaposition is product
//! factor  := primary ('o' primary)*      'o' is the Jordan product
//! primary := var | '[' expr (',' expr)+ ']' | '(' expr ')'
//! var     := ('y'|'z') integer
//! ```
//!
//! Commutators are left-normed: `[a,b,c] = [[a,b],c]`. Expansion relabels
//! the variables canonically (y indices in sorted order become `y1..`,
//! z indices become the trailing sector variables), so `[y0,y1]` and
//! `[y1,y2]` expand to the same sector polynomial.

use super::{MultilinearPoly, Sector};
use crate::linalg::Rational;
use crate::{Error, Result};
use std::collections::BTreeMap;

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarKind {
    Y,
    Z,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyExpr {
    Var(VarKind, u32),
    /// Juxtaposition product.
    Product(Vec<PolyExpr>),
    Scaled(i64, Box<PolyExpr>),
    Sum(Vec<PolyExpr>),
    /// Left-normed commutator, arity >= 2.
    Commutator(Vec<PolyExpr>),
    /// `f o g = fg + gf`.
    Jordan(Box<PolyExpr>, Box<PolyExpr>),
}

impl PolyExpr {
    pub fn y(i: u32) -> Self {
        PolyExpr::Var(VarKind::Y, i)
    }
    pub fn z(i: u32) -> Self {
        PolyExpr::Var(VarKind::Z, i)
    }
    pub fn commutator(entries: Vec<PolyExpr>) -> Self {
        PolyExpr::Commutator(entries)
    }
    pub fn product(factors: Vec<PolyExpr>) -> Self {
        PolyExpr::Product(factors)
    }
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Var(VarKind, u32),
    Int(i64),
    Plus,
    Minus,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Jordan,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                toks.push((start, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((start, Tok::Minus));
                i += 1;
            }
            '[' => {
                toks.push((start, Tok::LBracket));
                i += 1;
            }
            ']' => {
                toks.push((start, Tok::RBracket));
                i += 1;
            }
            '(' => {
                toks.push((start, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((start, Tok::RParen));
                i += 1;
            }
            ',' => {
                toks.push((start, Tok::Comma));
                i += 1;
            }
            'o' => {
                toks.push((start, Tok::Jordan));
                i += 1;
            }
            'y' | 'z' => {
                let kind = if c == 'y' { VarKind::Y } else { VarKind::Z };
                i += 1;
                let num_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if num_start == i {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("'{c}' must be followed by an index"),
                    });
                }
                let idx: u32 = text[num_start..i].parse().map_err(|_| Error::Parse {
                    pos: num_start,
                    msg: "index too large".into(),
                })?;
                toks.push((start, Tok::Var(kind, idx)));
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: i64 = text[start..i].parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "integer too large".into(),
                })?;
                toks.push((start, Tok::Int(v)));
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character '{c}'"),
                });
            }
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end: text.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }
    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }
    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }
    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(Error::Parse {
                pos,
                msg: format!("expected {what}"),
            }),
        }
    }
}

/// Parses DSL text into an expression tree.
pub fn parse(text: &str) -> Result<PolyExpr> {
    let mut lx = lex(text)?;
    let e = parse_expr(&mut lx)?;
    if lx.peek().is_some() {
        return Err(Error::Parse {
            pos: lx.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

fn parse_expr(lx: &mut Lexer) -> Result<PolyExpr> {
    let mut terms = Vec::new();
    let negate = matches!(lx.peek(), Some(Tok::Minus));
    if negate {
        lx.bump();
    }
    let first = parse_term(lx)?;
    terms.push(if negate {
        PolyExpr::Scaled(-1, Box::new(first))
    } else {
        first
    });
    loop {
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.bump();
                terms.push(parse_term(lx)?);
            }
            Some(Tok::Minus) => {
                lx.bump();
                terms.push(PolyExpr::Scaled(-1, Box::new(parse_term(lx)?)));
            }
            _ => break,
        }
    }
    Ok(if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        PolyExpr::Sum(terms)
    })
}

fn starts_factor(t: Option<&Tok>) -> bool {
    matches!(t, Some(Tok::Var(..)) | Some(Tok::LBracket) | Some(Tok::LParen))
}

fn parse_term(lx: &mut Lexer) -> Result<PolyExpr> {
    let coeff = if let Some(Tok::Int(v)) = lx.peek() {
        let v = *v;
        lx.bump();
        Some(v)
    } else {
        None
    };
    let mut factors = Vec::new();
    while starts_factor(lx.peek()) {
        factors.push(parse_factor(lx)?);
    }
    if factors.is_empty() {
        return Err(Error::Parse {
            pos: lx.here(),
            msg: "expected a variable, '[' or '('".into(),
        });
    }
    let body = if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        PolyExpr::Product(factors)
    };
    Ok(match coeff {
        Some(c) => PolyExpr::Scaled(c, Box::new(body)),
        None => body,
    })
}

fn parse_factor(lx: &mut Lexer) -> Result<PolyExpr> {
    let mut f = parse_primary(lx)?;
    while matches!(lx.peek(), Some(Tok::Jordan)) {
        lx.bump();
        let g = parse_primary(lx)?;
        f = PolyExpr::Jordan(Box::new(f), Box::new(g));
    }
    Ok(f)
}

fn parse_primary(lx: &mut Lexer) -> Result<PolyExpr> {
    let pos = lx.here();
    match lx.bump() {
        Some(Tok::Var(kind, idx)) => Ok(PolyExpr::Var(kind, idx)),
        Some(Tok::LParen) => {
            let e = parse_expr(lx)?;
            lx.expect(Tok::RParen, "')'")?;
            Ok(e)
        }
        Some(Tok::LBracket) => {
            let mut entries = vec![parse_expr(lx)?];
            while matches!(lx.peek(), Some(Tok::Comma)) {
                lx.bump();
                entries.push(parse_expr(lx)?);
            }
            lx.expect(Tok::RBracket, "']'")?;
            if entries.len() < 2 {
                return Err(Error::CommutatorArity(pos));
            }
            Ok(PolyExpr::Commutator(entries))
        }
        _ => Err(Error::Parse {
            pos,
            msg: "expected a variable, '[' or '('".into(),
        }),
    }
}

pub(crate) type FreeWord = Vec<(VarKind, u32)>;

/// A multilinear element of the free superalgebra, prior to sector
/// canonicalization. Keeps one witness word so a fully cancelling
/// expression still knows its variable set.
pub(crate) struct FreePoly {
    terms: BTreeMap<FreeWord, Rational>,
    witness: Option<FreeWord>,
}

impl FreePoly {
    pub(crate) fn new() -> Self {
        FreePoly {
            terms: BTreeMap::new(),
            witness: None,
        }
    }

    fn var(kind: VarKind, idx: u32) -> Self {
        let mut p = Self::new();
        p.push(vec![(kind, idx)], Rational::from_integer(1.into()))
            .unwrap();
        p
    }

    pub(crate) fn push(&mut self, word: FreeWord, c: Rational) -> Result<()> {
        for (i, v) in word.iter().enumerate() {
            if word[i + 1..].contains(v) {
                return Err(Error::NotMultilinear(format!(
                    "{}{} repeats in a monomial",
                    if v.0 == VarKind::Y { 'y' } else { 'z' },
                    v.1
                )));
            }
        }
        if self.witness.is_none() {
            self.witness = Some(word.clone());
        }
        if num::Zero::is_zero(&c) {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if num::Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    fn add(mut self, other: FreePoly) -> Result<FreePoly> {
        for (w, c) in other.terms {
            self.push(w, c)?;
        }
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        Ok(self)
    }

    fn scale(mut self, c: i64) -> FreePoly {
        if c == 0 {
            self.terms.clear();
            return self;
        }
        let c = Rational::from_integer(c.into());
        for v in self.terms.values_mut() {
            *v *= &c;
        }
        self
    }

    fn mul(&self, other: &FreePoly) -> Result<FreePoly> {
        let mut out = FreePoly::new();
        // keep a witness even if all products cancel later
        if let (Some(a), Some(b)) = (&self.witness, &other.witness) {
            let mut w = a.clone();
            w.extend(b.iter().copied());
            out.push(w, Rational::from_integer(0.into()))?;
        }
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend(wb.iter().copied());
                out.push(w, ca * cb)?;
            }
        }
        Ok(out)
    }

    fn commutator(&self, other: &FreePoly) -> Result<FreePoly> {
        self.mul(other)?.add(other.mul(self)?.scale(-1))
    }

    fn jordan(&self, other: &FreePoly) -> Result<FreePoly> {
        self.mul(other)?.add(other.mul(self)?)
    }

    /// Canonical relabeling into a sector polynomial.
    pub(crate) fn into_multilinear(self) -> Result<MultilinearPoly> {
        let witness = self.witness.ok_or_else(|| {
            Error::MixedSector("empty expression has no variable set".into())
        })?;
        let mut ys: Vec<u32> = witness
            .iter()
            .filter(|(k, _)| *k == VarKind::Y)
            .map(|(_, i)| *i)
            .collect();
        let mut zs: Vec<u32> = witness
            .iter()
            .filter(|(k, _)| *k == VarKind::Z)
            .map(|(_, i)| *i)
            .collect();
        ys.sort_unstable();
        zs.sort_unstable();
        let n = ys.len() + zs.len();
        let sector = Sector::new(n, zs.len())?;
        let relabel = |v: &(VarKind, u32)| -> Result<u8> {
            let slot = match v.0 {
                VarKind::Y => ys.binary_search(&v.1).ok().map(|p| p + 1),
                VarKind::Z => zs.binary_search(&v.1).ok().map(|p| ys.len() + p + 1),
            };
            slot.map(|s| s as u8).ok_or_else(|| {
                Error::MixedSector(format!(
                    "{}{} is not in the sector of the first monomial",
                    if v.0 == VarKind::Y { 'y' } else { 'z' },
                    v.1
                ))
            })
        };
        let mut out = MultilinearPoly::zero(sector);
        for (word, c) in &self.terms {
            if word.len() != n {
                return Err(Error::MixedSector(format!(
                    "monomials of degree {} and {n} in one expression",
                    word.len()
                )));
            }
            let mut w: Vec<u8> = Vec::with_capacity(n);
            for v in word {
                w.push(relabel(v)?);
            }
            out.add_term(super::word_rank(&w) as u32, c.clone());
        }
        Ok(out)
    }
}

fn expand_free(expr: &PolyExpr) -> Result<FreePoly> {
    match expr {
        PolyExpr::Var(kind, idx) => Ok(FreePoly::var(*kind, *idx)),
        PolyExpr::Product(fs) => {
            let mut it = fs.iter();
            let first = it.next().ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "empty product".into(),
            })?;
            let mut acc = expand_free(first)?;
            for f in it {
                acc = acc.mul(&expand_free(f)?)?;
            }
            Ok(acc)
        }
        PolyExpr::Scaled(c, inner) => Ok(expand_free(inner)?.scale(*c)),
        PolyExpr::Sum(terms) => {
            let mut acc = FreePoly::new();
            for t in terms {
                acc = acc.add(expand_free(t)?)?;
            }
            Ok(acc)
        }
        PolyExpr::Commutator(entries) => {
            if entries.len() < 2 {
                return Err(Error::CommutatorArity(0));
            }
            let mut it = entries.iter();
            let mut acc = expand_free(it.next().unwrap())?;
            for e in it {
                acc = acc.commutator(&expand_free(e)?)?;
            }
            Ok(acc)
        }
        PolyExpr::Jordan(a, b) => expand_free(a)?.jordan(&expand_free(b)?),
    }
}

pub(crate) fn expand_expr(expr: &PolyExpr) -> Result<MultilinearPoly> {
    expand_free(expr)?.into_multilinear()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyspace::parse_poly;

    #[test]
    fn commutator_definition() {
        let p = parse_poly("[y1,y2]").unwrap();
        assert_eq!(p.to_string(), "y1y2 - y2y1");
    }

    #[test]
    fn jordan_product() {
        let p = parse_poly("z1 o z2").unwrap();
        assert_eq!(p.to_string(), "z1z2 + z2z1");
    }

    #[test]
    fn left_normed_triple() {
        // [[y1,y2],y3] = y1y2y3 - y2y1y3 - y3y1y2 + y3y2y1
        let p = parse_poly("[y1,y2,y3]").unwrap();
        let q = parse_poly("y1y2y3 - y2y1y3 - y3y1y2 + y3y2y1").unwrap();
        assert_eq!(p, q);
        // against a direct bracket expansion
        let direct = parse_poly("[y1,y2]y3 - y3[y1,y2]").unwrap();
        assert_eq!(p, direct);
        // coefficient of y3y2y1 in the 4-term expansion
        assert_eq!(p.coeff(&[3, 2, 1]), crate::linalg::rat_int(1));
    }

    #[test]
    fn commutator_products_expand() {
        let p = parse_poly("[y1,y2][y3,y4]").unwrap();
        assert_eq!(p.term_count(), 4);
        assert_eq!(p.sector(), crate::polyspace::Sector::new(4, 0).unwrap());
    }

    #[test]
    fn expansion_is_linear() {
        let f = parse_poly("[y1,y2] + 3 y1y2").unwrap();
        let a = parse_poly("[y1,y2]").unwrap();
        let b = parse_poly("y1y2").unwrap();
        let sum = a
            .add(&b.scale(&crate::linalg::rat_int(3)))
            .unwrap();
        assert_eq!(f, sum);
    }

    #[test]
    fn canonical_relabeling() {
        // y0[y1,y2,y3] and y1[y2,y3,y4] are the same sector polynomial
        let a = parse_poly("y0[y1,y2,y3]").unwrap();
        let b = parse_poly("y1[y2,y3,y4]").unwrap();
        assert_eq!(a, b);
        // mixed y/z relabeling: z's go to the trailing indices
        let c = parse_poly("[y1,z1]").unwrap();
        let d = parse_poly("[y1,z2]").unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("y1 + @") {
            Err(crate::Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse("[y1]"),
            Err(crate::Error::CommutatorArity(_))
        ));
        assert!(parse("y").is_err());
        assert!(parse("y1 +").is_err());
        assert!(parse("(y1").is_err());
    }

    #[test]
    fn non_multilinear_rejected() {
        assert!(matches!(
            parse_poly("y1 y1"),
            Err(crate::Error::NotMultilinear(_))
        ));
        assert!(matches!(
            parse_poly("[y1,y1]"),
            Err(crate::Error::NotMultilinear(_))
        ));
    }

    #[test]
    fn mixed_sector_rejected() {
        assert!(matches!(
            parse_poly("y1 + y2"),
            Err(crate::Error::MixedSector(_))
        ));
        assert!(matches!(
            parse_poly("y1y2 + y1"),
            Err(crate::Error::MixedSector(_))
        ));
    }

    #[test]
    fn antisymmetry_sanity() {
        let a = parse_poly("[y1,y2]").unwrap();
        let b = parse_poly("[y2,y1]").unwrap();
        assert!(a.add(&b).unwrap().is_zero());
    }

    #[test]
    fn parenthesized_groups() {
        let p = parse_poly("(y1y2 + 2y2y1)y3").unwrap();
        let q = parse_poly("y1y2y3 + 2 y2y1y3").unwrap();
        assert_eq!(p, q);
        // terms of a sum must share one variable set
        assert!(matches!(
            parse_poly("(y1 + 2y2)y3"),
            Err(crate::Error::MixedSector(_))
        ));
    }
}
