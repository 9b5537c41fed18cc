//! Multilinear graded polynomial sectors.
//!
//! The sector `(n, r)` holds the multilinear polynomials in the even
//! variables `y1 .. y_{n-r}` and odd variables `z_{n-r+1} .. z_n`; its
//! monomial basis is the set of all `n!` orderings of the `n` variables,
//! listed in lexicographic order of the index word. Polynomials carry their
//! sector, coefficients are exact rationals, and zero coefficients are
//! never stored.

mod parse;

pub use parse::{parse, PolyExpr, VarKind};

use crate::linalg::Rational;
use crate::{Error, Result};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Hard cap on sector degree; words stay rank-encodable in one machine word
/// and sector dimensions stay at most 7! = 5040.
pub const DEGREE_CAP: usize = 7;

pub(crate) const FACTORIALS: [usize; 13] = [
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800, 479001600,
];

pub fn factorial(n: usize) -> usize {
    FACTORIALS[n]
}

/// The sector `P_{n-r,r}`: degree `n`, with the last `r` variables odd.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Sector {
    n: u8,
    r: u8,
}

impl Sector {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r > n || n > DEGREE_CAP {
            return Err(Error::CapExceeded {
                n,
                cap: DEGREE_CAP,
            });
        }
        Ok(Sector {
            n: n as u8,
            r: r as u8,
        })
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn y_count(&self) -> usize {
        (self.n - self.r) as usize
    }

    pub fn z_count(&self) -> usize {
        self.r as usize
    }

    /// Sector dimension `n!`.
    pub fn dim(&self) -> usize {
        factorial(self.n as usize)
    }

    /// Variables are numbered 1..=n; the trailing `r` of them are odd.
    pub fn is_odd_var(&self, var: u8) -> bool {
        var > self.n - self.r
    }

    pub fn var_kind(&self, var: u8) -> VarKind {
        if self.is_odd_var(var) {
            VarKind::Z
        } else {
            VarKind::Y
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.y_count(), self.z_count())
    }
}

/// Lexicographic rank of a permutation word of `1..=n`.
pub fn word_rank(word: &[u8]) -> usize {
    let n = word.len();
    let mut used = [false; DEGREE_CAP + 1];
    let mut rank = 0usize;
    for (i, &w) in word.iter().enumerate() {
        let smaller = (1..w).filter(|&v| !used[v as usize]).count();
        rank += smaller * factorial(n - 1 - i);
        used[w as usize] = true;
    }
    rank
}

/// Inverse of [`word_rank`].
pub fn word_unrank(n: usize, mut rank: usize) -> Vec<u8> {
    let mut avail: Vec<u8> = (1..=n as u8).collect();
    let mut word = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let k = rank / f;
        rank %= f;
        word.push(avail.remove(k));
    }
    word
}

/// A graded monomial: an ordering of the sector's variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial {
    pub sector: Sector,
    pub word: Vec<u8>,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.word {
            let kind = if self.sector.is_odd_var(v) { 'z' } else { 'y' };
            write!(f, "{kind}{v}")?;
        }
        Ok(())
    }
}

/// All `n!` monomials of the sector, in lexicographic word order.
pub fn sector_basis(n: usize, r: usize) -> Result<Vec<Monomial>> {
    let sector = Sector::new(n, r)?;
    Ok((0..sector.dim())
        .map(|idx| Monomial {
            sector,
            word: word_unrank(n, idx),
        })
        .collect())
}

/// A rational linear combination of the sector's monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultilinearPoly {
    sector: Sector,
    coeffs: BTreeMap<u32, Rational>,
}

impl MultilinearPoly {
    pub fn zero(sector: Sector) -> Self {
        MultilinearPoly {
            sector,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(sector: Sector, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u8>, Rational)>,
    {
        let mut p = Self::zero(sector);
        for (word, c) in terms {
            debug_assert_eq!(word.len(), sector.degree());
            p.add_term(word_rank(&word) as u32, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, rank: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(rank) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, word: &[u8]) -> Rational {
        self.coeffs
            .get(&(word_rank(word) as u32))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<u8>, &Rational)> {
        let n = self.sector.degree();
        self.coeffs
            .iter()
            .map(move |(&rank, c)| (word_unrank(n, rank as usize), c))
    }

    /// Dense coefficient vector in the monomial basis.
    pub fn to_dense(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.sector.dim()];
        for (&rank, c) in &self.coeffs {
            v[rank as usize] = c.clone();
        }
        v
    }

    pub fn add(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        if self.sector != other.sector {
            return Err(Error::MixedSector(format!(
                "{} vs {}",
                self.sector, other.sector
            )));
        }
        let mut out = self.clone();
        for (&rank, c) in &other.coeffs {
            out.add_term(rank, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultilinearPoly {
        if c.is_zero() {
            return Self::zero(self.sector);
        }
        MultilinearPoly {
            sector: self.sector,
            coeffs: self.coeffs.iter().map(|(&r, v)| (r, v * c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    /// Variable-renaming action of `S_{n-r} x S_r`: `g` permutes the y
    /// indices, `h` the z indices.
    pub fn act(&self, g: &Perm, h: &Perm) -> Result<MultilinearPoly> {
        if g.size() != self.sector.y_count() || h.size() != self.sector.z_count() {
            return Err(Error::PermSizeMismatch);
        }
        let yc = self.sector.y_count() as u8;
        let mut out = Self::zero(self.sector);
        for (word, c) in self.terms() {
            let new_word: Vec<u8> = word
                .iter()
                .map(|&v| {
                    if v <= yc {
                        g.apply(v)
                    } else {
                        yc + h.apply(v - yc)
                    }
                })
                .collect();
            out.add_term(word_rank(&new_word) as u32, c.clone());
        }
        Ok(out)
    }

    /// Graded substitution: replaces each variable by a word of fresh
    /// variables. Even variables need images of even z-degree, odd
    /// variables odd z-degree; images must be pairwise disjoint and
    /// nonempty. The result lives in the canonically relabeled target
    /// sector.
    pub fn substitute(
        &self,
        images: &BTreeMap<u8, Vec<(VarKind, u32)>>,
    ) -> Result<MultilinearPoly> {
        let n = self.sector.degree() as u8;
        let mut seen: BTreeMap<(VarKind, u32), ()> = BTreeMap::new();
        for v in 1..=n {
            let img = images
                .get(&v)
                .ok_or_else(|| Error::VariableReuse(format!("variable {v} has no image")))?;
            if img.is_empty() {
                return Err(Error::ParityViolation(format!(
                    "empty image for variable {v}"
                )));
            }
            let z_count = img.iter().filter(|(k, _)| *k == VarKind::Z).count();
            let want_odd = self.sector.is_odd_var(v);
            if (z_count % 2 == 1) != want_odd {
                return Err(Error::ParityViolation(format!(
                    "image of variable {v} has z-degree {z_count}"
                )));
            }
            for &fresh in img {
                if seen.insert(fresh, ()).is_some() {
                    return Err(Error::VariableReuse(format!(
                        "{}{} appears in two images",
                        if fresh.0 == VarKind::Y { 'y' } else { 'z' },
                        fresh.1
                    )));
                }
            }
        }
        let mut free = parse::FreePoly::new();
        for (word, c) in self.terms() {
            let mut fw: parse::FreeWord = Vec::new();
            for &v in &word {
                fw.extend(images[&v].iter().copied());
            }
            free.push(fw, c.clone())?;
        }
        free.into_multilinear()
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = Rational::from_integer(1.into());
        let minus_one = Rational::from_integer((-1).into());
        for (i, (word, c)) in self.terms().enumerate() {
            let mono = Monomial {
                sector: self.sector,
                word,
            };
            if i == 0 {
                if *c == minus_one {
                    write!(f, "-")?;
                } else if *c != one {
                    write!(f, "{} ", crate::linalg::format_rational(c))?;
                }
            } else if *c == one {
                write!(f, " + ")?;
            } else if *c == minus_one {
                write!(f, " - ")?;
            } else if c < &Rational::zero() {
                write!(f, " - {} ", crate::linalg::format_rational(&-c.clone()))?;
            } else {
                write!(f, " + {} ", crate::linalg::format_rational(c))?;
            }
            write!(f, "{mono}")?;
        }
        Ok(())
    }
}

/// Expands a parsed expression into its sector polynomial.
pub fn expand(expr: &PolyExpr) -> Result<MultilinearPoly> {
    parse::expand_expr(expr)
}

/// Parses and expands in one step.
pub fn parse_poly(text: &str) -> Result<MultilinearPoly> {
    expand(&parse(text)?)
}

/// A permutation of `1..=m` (image table).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((1..=m as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            if v == 0 || v as usize > m || seen[v as usize] {
                return Err(Error::PermSizeMismatch);
            }
            seen[v as usize] = true;
        }
        Ok(Perm(images))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[(i - 1) as usize]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&v| self.apply(v)).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[(v - 1) as usize] = (i + 1) as u8;
        }
        Perm(inv)
    }

    pub fn transposition(m: usize, a: u8, b: u8) -> Perm {
        let mut images: Vec<u8> = (1..=m as u8).collect();
        images.swap((a - 1) as usize, (b - 1) as usize);
        Perm(images)
    }

    pub fn sign(&self) -> i64 {
        let mut inv = 0;
        for i in 0..self.0.len() {
            for j in (i + 1)..self.0.len() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All of `S_m` in lexicographic order of image words.
    pub fn all(m: usize) -> Vec<Perm> {
        (0..factorial(m))
            .map(|idx| Perm(word_unrank(m, idx)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;

    #[test]
    fn rank_unrank_round_trip() {
        for n in 0..=5 {
            for idx in 0..factorial(n) {
                let w = word_unrank(n, idx);
                assert_eq!(word_rank(&w), idx);
            }
        }
    }

    #[test]
    fn sector_basis_small() {
        let b = sector_basis(2, 0).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].to_string(), "y1y2");
        assert_eq!(b[1].to_string(), "y2y1");

        let b = sector_basis(2, 1).unwrap();
        assert_eq!(b[0].to_string(), "y1z2");
        assert_eq!(b[1].to_string(), "z2y1");

        assert_eq!(sector_basis(4, 2).unwrap().len(), 24);
        assert!(sector_basis(8, 0).is_err());
    }

    #[test]
    fn act_identity_and_transposition() {
        let f = parse_poly("y1y2 + 2 y2y1").unwrap();
        let id = Perm::identity(2);
        let h = Perm::identity(0);
        assert_eq!(f.act(&id, &h).unwrap(), f);

        let t = Perm::transposition(2, 1, 2);
        let g = f.act(&t, &h).unwrap();
        assert_eq!(g, parse_poly("y2y1 + 2 y1y2").unwrap());
    }

    #[test]
    fn act_is_a_group_action() {
        let f = parse_poly("[y1,y2]y3 + y3y1y2").unwrap();
        let h = Perm::identity(0);
        for g1 in Perm::all(3) {
            for g2 in Perm::all(3) {
                let lhs = f.act(&g1.compose(&g2), &h).unwrap();
                let rhs = f.act(&g2, &h).unwrap().act(&g1, &h).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn act_is_a_group_action_on_both_factors() {
        // S_3 x S_2 on the sector (3,2)
        let f = parse_poly("[y1,y2]y3z4z5 - 2 z5y1y2y3z4").unwrap();
        for g1 in Perm::all(3) {
            for g2 in Perm::all(3) {
                for h1 in Perm::all(2) {
                    for h2 in Perm::all(2) {
                        let lhs = f.act(&g1.compose(&g2), &h1.compose(&h2)).unwrap();
                        let rhs = f.act(&g2, &h2).unwrap().act(&g1, &h1).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn act_permutes_basis_coefficients() {
        let f = parse_poly("y1y2z3 - 3 y2y1z3").unwrap();
        let g = Perm::transposition(2, 1, 2);
        let h = Perm::identity(1);
        let acted = f.act(&g, &h).unwrap();
        let mut before: Vec<Rational> = f.terms().map(|(_, c)| c.clone()).collect();
        let mut after: Vec<Rational> = acted.terms().map(|(_, c)| c.clone()).collect();
        before.sort();
        after.sort();
        assert_eq!(before, after);
    }

    #[test]
    fn substitution_relabels_canonically() {
        // y1 -> z1 z2 (even image), y2 -> y3: [z1z2, y3] in sector (1,2)
        let f = parse_poly("[y1,y2]").unwrap();
        let mut images = BTreeMap::new();
        images.insert(1u8, vec![(VarKind::Z, 1), (VarKind::Z, 2)]);
        images.insert(2u8, vec![(VarKind::Y, 3)]);
        let g = f.substitute(&images).unwrap();
        assert_eq!(g.sector(), Sector::new(3, 2).unwrap());
        // z1z2y1 - y1z1z2 in canonical variables (y1; z2, z3)
        assert_eq!(g, parse_poly("z2z3y1 - y1z2z3").unwrap());
    }

    #[test]
    fn substitution_identity_returns_f() {
        let f = parse_poly("[y1,y2]z3").unwrap();
        let mut images = BTreeMap::new();
        images.insert(1u8, vec![(VarKind::Y, 1)]);
        images.insert(2u8, vec![(VarKind::Y, 2)]);
        images.insert(3u8, vec![(VarKind::Z, 3)]);
        assert_eq!(f.substitute(&images).unwrap(), f);
    }

    #[test]
    fn substitution_rejects_parity_and_reuse() {
        let f = parse_poly("z1").unwrap();
        let mut images = BTreeMap::new();
        images.insert(1u8, vec![(VarKind::Y, 1)]);
        assert!(matches!(
            f.substitute(&images),
            Err(Error::ParityViolation(_))
        ));

        let f = parse_poly("[y1,y2]").unwrap();
        let mut images = BTreeMap::new();
        images.insert(1u8, vec![(VarKind::Y, 5)]);
        images.insert(2u8, vec![(VarKind::Y, 5)]);
        assert!(matches!(f.substitute(&images), Err(Error::VariableReuse(_))));
    }

    #[test]
    fn display_round_trips_through_parser() {
        for text in ["[y1,y2]", "[y1,y2][y3,y4]", "z1 o z2", "2y1y2 - y2y1"] {
            let p = parse_poly(text).unwrap();
            let q = parse_poly(&p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn zero_sum_keeps_sector() {
        let a = parse_poly("[y1,y2]").unwrap();
        let b = parse_poly("[y2,y1]").unwrap();
        let s = a.add(&b).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.sector(), Sector::new(2, 0).unwrap());
    }

    #[test]
    fn dense_vector_layout() {
        let f = parse_poly("[y1,y2]").unwrap();
        assert_eq!(f.to_dense(), vec![rat_int(1), rat_int(-1)]);
    }
}
