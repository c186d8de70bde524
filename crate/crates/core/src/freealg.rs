//! The free associative algebra on an ordered alphabet.
//!
//! Words are ordered degree-lexicographically: shorter words come first and
//! words of equal length compare letter by letter using the declared variable
//! order. Polynomials keep their terms sorted by descending word so the
//! leading term is always the first one.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

/// Ordered variable names; index 0 is the smallest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub const MAX_VARS: usize = 255;

    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Presentation("variable set is empty".into()));
        }
        if names.len() > Self::MAX_VARS {
            return Err(Error::Presentation(format!(
                "at most {} variables are supported",
                Self::MAX_VARS
            )));
        }
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if let Some(j) = seen.insert(n.as_str(), i) {
                return Err(Error::Presentation(format!(
                    "variable `{n}` declared twice (positions {j} and {i})"
                )));
            }
        }
        Ok(Self { names })
    }

    /// Variables `x1 < x2 < ... < xn`.
    pub fn numbered(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}"))).expect("nonempty distinct names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: u8) -> &str {
        &self.names[i as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }

    /// Parses a word written as names separated by spaces or `*`, with
    /// optional `^k` powers, e.g. `x^2*y`. The empty string or `1` is `e`.
    pub fn word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for factor in s.split(|c: char| c == '*' || c.is_whitespace()) {
            if factor.is_empty() {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<usize>()
                        .map_err(|_| Error::Word(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let v = self
                .index_of(name)
                .ok_or_else(|| Error::Word(format!("unknown variable `{name}`")))?;
            letters.extend(std::iter::repeat_n(v, exp));
        }
        Ok(Word::new(letters))
    }
}

/// A monomial of the free monoid: a sequence of variable indices.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(v: u8) -> Self {
        Word(vec![v])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Position of the leftmost occurrence of `factor` in `self`.
    pub fn find(&self, factor: &Word) -> Option<usize> {
        find_factor(&self.0, &factor.0)
    }

    pub fn contains(&self, factor: &Word) -> bool {
        self.find(factor).is_some()
    }

    pub fn check_alphabet(&self, vars: &VariableSet) -> Result<()> {
        match self.0.iter().find(|&&v| v as usize >= vars.len()) {
            Some(v) => Err(Error::Word(format!(
                "letter index {v} outside an alphabet of size {}",
                vars.len()
            ))),
            None => Ok(()),
        }
    }

    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> WordDisplay<'a> {
        WordDisplay { word: self, vars }
    }
}

pub(crate) fn find_factor(hay: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    if needle.len() > hay.len() {
        return None;
    }
    hay.windows(needle.len()).position(|w| w == needle)
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_cmp(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    vars: &'a VariableSet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.word.letters();
        if l.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < l.len() {
            let mut j = i;
            while j < l.len() && l[j] == l[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.vars.name(l[i]))?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Degree-lexicographic comparison.
pub fn deglex_cmp(a: &Word, b: &Word) -> Ordering {
    a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0))
}

/// Position of a word in the deglex enumeration of all words over `n`
/// letters, with the empty word at position 0.
pub fn word_rank(a: &Word, n: usize) -> Option<u128> {
    let n = n as u128;
    let mut offset: u128 = 0;
    let mut block: u128 = 1;
    for _ in 0..a.degree() {
        offset = offset.checked_add(block)?;
        block = block.checked_mul(n)?;
    }
    let mut lex: u128 = 0;
    for &v in a.letters() {
        lex = lex.checked_mul(n)?.checked_add(v as u128)?;
    }
    offset.checked_add(lex)
}

/// Inverse of [`word_rank`].
pub fn word_unrank(mut pos: u128, n: usize) -> Word {
    let nn = n as u128;
    let mut d = 0usize;
    let mut block: u128 = 1;
    while pos >= block {
        pos -= block;
        d += 1;
        block = block.saturating_mul(nn);
    }
    let mut letters = vec![0u8; d];
    for slot in letters.iter_mut().rev() {
        *slot = (pos % nn) as u8;
        pos /= nn;
    }
    Word(letters)
}

/// The word `r` steps after `a` in the deglex order on `vars`.
pub fn word_successor(vars: &VariableSet, a: &Word, r: i64) -> Result<Word> {
    a.check_alphabet(vars)?;
    let n = vars.len();
    let pos = word_rank(a, n).ok_or_else(|| Error::Word("word too long to rank".into()))?;
    let target = if r >= 0 {
        pos.checked_add(r as u128)
            .ok_or_else(|| Error::Word("successor overflows".into()))?
    } else {
        pos.checked_sub(r.unsigned_abs() as u128)
            .ok_or(Error::BelowEmptyWord)?
    };
    Ok(word_unrank(target, n))
}

/// All words of length `d` over `n` letters in ascending order.
pub fn all_words(n: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(out.len() * n);
        for w in &out {
            for v in 0..n as u8 {
                let mut l = w.0.clone();
                l.push(v);
                next.push(Word(l));
            }
        }
        out = next;
    }
    out
}

/// A finite linear combination of words with nonzero coefficients, stored
/// in descending deglex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    terms: Vec<(Word, E)>,
}

impl<E: Clone> Polynomial<E> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Word, E)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Word, E)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The deglex-maximal word, if any.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.first().map(|(w, _)| w)
    }

    pub fn leading_coeff(&self) -> Option<&E> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading_word().map(Word::degree)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.last().map(|(w, _)| w.degree())
    }

    /// Common degree of all terms, or `None` for mixed degrees or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.degree()?;
        (self.min_degree() == Some(d)).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn coeff_of(&self, w: &Word) -> Option<&E> {
        self.terms
            .binary_search_by(|(t, _)| deglex_cmp(w, t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.iter().map(|(w, _)| w)
    }
}

impl<E: Clone + PartialEq> Polynomial<E> {
    /// Builds a polynomial from arbitrary terms: merges duplicates and drops
    /// zero coefficients.
    pub fn from_terms<F: Field<Elem = E>>(field: &F, terms: Vec<(Word, E)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| deglex_cmp(&b.0, &a.0));
        let mut out: Vec<(Word, E)> = Vec::with_capacity(terms.len());
        for (w, c) in terms {
            match out.last_mut() {
                Some((lw, lc)) if *lw == w => *lc = field.add(lc, &c),
                _ => out.push((w, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Self { terms: out }
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, w: Word, c: E) -> Self {
        if field.is_zero(&c) {
            Self::zero()
        } else {
            Self { terms: vec![(w, c)] }
        }
    }

    pub fn word<F: Field<Elem = E>>(field: &F, w: Word) -> Self {
        Self::monomial(field, w, field.one())
    }

    /// `(α, c_α)` with `α` the deglex-maximal word.
    pub fn leading_term(&self) -> Result<(Word, E)> {
        self.terms.first().cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.combine(field, other, |a| a.clone())
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.combine(field, other, |a| field.neg(a))
    }

    fn combine<F: Field<Elem = E>>(
        &self,
        field: &F,
        other: &Self,
        map_other: impl Fn(&E) -> E,
    ) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => deglex_cmp(&y.0, &x.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), map_other(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&a[i].1, &map_other(&b[j].1));
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms: out }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), field.mul(x, c)))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.leading_coeff() {
            Some(c) if !field.is_one(c) => self.scale(field, &field.inv(c)),
            _ => self.clone(),
        }
    }

    /// `u · self · w` for words `u`, `w`. Multiplication by words on both
    /// sides is strictly monotone for deglex, so order is preserved.
    pub fn sandwich(&self, u: &Word, w: &Word) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    let mut l = Vec::with_capacity(u.degree() + t.degree() + w.degree());
                    l.extend_from_slice(u.letters());
                    l.extend_from_slice(t.letters());
                    l.extend_from_slice(w.letters());
                    (Word(l), c.clone())
                })
                .collect(),
        }
    }

    /// Noncommutative product by distributive concatenation.
    pub fn multiply<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                terms.push((a.concat(b), field.mul(x, y)));
            }
        }
        Self::from_terms(field, terms)
    }

    pub fn constant_term(&self) -> Option<&E> {
        match self.terms.last() {
            Some((w, c)) if w.is_empty() => Some(c),
            _ => None,
        }
    }

    pub fn display<'a, F: Field<Elem = E>>(
        &'a self,
        field: &'a F,
        vars: &'a VariableSet,
    ) -> PolyDisplay<'a, F> {
        PolyDisplay {
            poly: self,
            field,
            vars,
        }
    }
}

pub struct PolyDisplay<'a, F: Field> {
    poly: &'a Polynomial<F::Elem>,
    field: &'a F,
    vars: &'a VariableSet,
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.poly.terms().iter().enumerate() {
            let (neg, mag) = self.field.signed_parts(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", w.display(self.vars))?;
            } else {
                write!(f, "{mag}*{}", w.display(self.vars))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn xy() -> VariableSet {
        VariableSet::new(["x", "y"]).unwrap()
    }

    fn p(field: &PrimeField, vars: &VariableSet, terms: &[(i64, &str)]) -> Polynomial<u32> {
        Polynomial::from_terms(
            field,
            terms
                .iter()
                .map(|(c, w)| (vars.word(w).unwrap(), field.from_i64(*c)))
                .collect(),
        )
    }

    #[test]
    fn deglex_examples() {
        let v = xy();
        let w = |s| v.word(s).unwrap();
        assert_eq!(deglex_cmp(&w("y"), &w("x*x")), Ordering::Less);
        assert_eq!(deglex_cmp(&w("x*x"), &w("x*y")), Ordering::Less);
        assert_eq!(deglex_cmp(&w("y*x*y"), &w("y*x*y")), Ordering::Equal);
    }

    #[test]
    fn successor_examples() {
        let v = xy();
        let w = |s| v.word(s).unwrap();
        assert_eq!(word_successor(&v, &Word::empty(), 1).unwrap(), w("x"));
        assert_eq!(word_successor(&v, &w("y"), 1).unwrap(), w("x^2"));
        assert_eq!(word_successor(&v, &w("x^2"), -1).unwrap(), w("y"));
        assert_eq!(
            word_successor(&v, &w("x"), -2),
            Err(Error::BelowEmptyWord)
        );
    }

    #[test]
    fn leading_term_examples() {
        let f = PrimeField::default();
        let v = xy();
        let lt = p(&f, &v, &[(1, "x*y"), (-1, "x^2")]).leading_term().unwrap();
        assert_eq!(lt, (v.word("x*y").unwrap(), 1));
        let lt = p(&f, &v, &[(1, "x^3"), (-1, "y^2*x")]).leading_term().unwrap();
        assert_eq!(lt, (v.word("y^2*x").unwrap(), f.from_i64(-1)));
        let lt = p(&f, &v, &[(5, "x")]).leading_term().unwrap();
        assert_eq!(lt, (v.word("x").unwrap(), 5));
        assert_eq!(
            Polynomial::<u32>::zero().leading_term(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn multiply_examples() {
        let f = PrimeField::default();
        let v = xy();
        let x = p(&f, &v, &[(1, "x")]);
        let y = p(&f, &v, &[(1, "y")]);
        assert_eq!(x.multiply(&f, &y), p(&f, &v, &[(1, "x*y")]));
        let a = p(&f, &v, &[(1, "x"), (1, "y")]);
        let b = p(&f, &v, &[(1, "x"), (-1, "y")]);
        assert_eq!(
            a.multiply(&f, &b),
            p(&f, &v, &[(1, "x^2"), (-1, "x*y"), (1, "y*x"), (-1, "y^2")])
        );
        assert!(a.multiply(&f, &Polynomial::zero()).is_zero());
    }

    #[test]
    fn display_round_trips_through_word_parser() {
        let f = PrimeField::default();
        let v = xy();
        let q = p(&f, &v, &[(3, "x^2*y"), (-1, "y*x")]);
        assert_eq!(q.display(&f, &v).to_string(), "3*x^2*y - y*x");
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..3, 0..5).prop_map(Word::new)
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<u32>> {
        prop::collection::vec((arb_word(), 0u32..7), 0..4).prop_map(|t| {
            Polynomial::from_terms(&PrimeField::new(7).unwrap(), t)
        })
    }

    proptest! {
        #[test]
        fn deglex_is_total_order(a in arb_word(), b in arb_word(), c in arb_word()) {
            let ab = deglex_cmp(&a, &b);
            prop_assert_eq!(ab.reverse(), deglex_cmp(&b, &a));
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab != Ordering::Greater && deglex_cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(deglex_cmp(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn deglex_is_multiplicative(a in arb_word(), b in arb_word(), u in arb_word(), w in arb_word()) {
            prop_assume!(a < b);
            prop_assert!(u.concat(&a).concat(&w) < u.concat(&b).concat(&w));
        }

        #[test]
        fn leading_term_commutes_with_sandwich(q in arb_poly(), u in arb_word(), w in arb_word()) {
            prop_assume!(!q.is_zero());
            let (lw, lc) = q.leading_term().unwrap();
            let s = q.sandwich(&u, &w);
            prop_assert_eq!(s.leading_term().unwrap(), (u.concat(&lw).concat(&w), lc));
        }

        #[test]
        fn successor_inverts(a in arb_word(), r in 1i64..40) {
            let v = VariableSet::new(["a", "b", "c"]).unwrap();
            let s = word_successor(&v, &a, r).unwrap();
            prop_assert!(s > a);
            prop_assert_eq!(word_successor(&v, &s, -r).unwrap(), a.clone());
            let s1 = word_successor(&v, &a, 1).unwrap();
            // nothing lies strictly between a and its successor
            prop_assert!(all_words(3, s1.degree()).into_iter()
                .chain(all_words(3, a.degree()))
                .all(|w| !(w > a && w < s1)));
        }

        #[test]
        fn multiply_is_associative_and_distributive(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let f = PrimeField::new(7).unwrap();
            prop_assert_eq!(a.multiply(&f, &b).multiply(&f, &c), a.multiply(&f, &b.multiply(&f, &c)));
            prop_assert_eq!(a.multiply(&f, &b.add(&f, &c)), a.multiply(&f, &b).add(&f, &a.multiply(&f, &c)));
        }
    }
}
