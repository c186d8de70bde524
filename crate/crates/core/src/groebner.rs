//! Two-sided Gröbner bases in the free algebra, truncated by degree.
//!
//! Completion follows the usual overlap (ambiguity) resolution: every pair of
//! leading words that overlap produces an S-polynomial, which must reduce to
//! zero. Ambiguities are processed in ascending deglex order of their ambient
//! word and only while the ambient degree stays within the bound `D`. Since
//! reduction never raises deglex, everything in degrees `<= D` is exact for
//! homogeneous input. Ambiguities above `D` are checked once at the end; if
//! all of them resolve, the basis is complete in every degree.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::freealg::{all_words, find_factor, Polynomial, VariableSet, Word};
use crate::grassoc;
use crate::linalg::{Echelon, SparseVec};

/// A finitely presented algebra `K<vars> / (relations)`, truncated at `bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation<F: Field> {
    field: F,
    vars: VariableSet,
    relations: Vec<Polynomial<F::Elem>>,
    bound: usize,
    homogeneous: bool,
}

impl<F: Field> Presentation<F> {
    /// Validates the relations. `bound = None` picks `max(8, 2 * maxdeg)`.
    pub fn new(
        field: F,
        vars: VariableSet,
        relations: Vec<Polynomial<F::Elem>>,
        bound: Option<usize>,
    ) -> Result<Self> {
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::Presentation(format!("relation {} is zero", i + 1)));
            }
            if r.constant_term().is_some() {
                return Err(Error::Presentation(format!(
                    "relation {} has a nonzero constant term",
                    i + 1
                )));
            }
            for w in r.words() {
                w.check_alphabet(&vars)?;
            }
        }
        let homogeneous = relations.iter().all(Polynomial::is_homogeneous);
        if homogeneous {
            if let Some((i, _)) = relations
                .iter()
                .enumerate()
                .find(|(_, r)| r.degree() < Some(2))
            {
                return Err(Error::Presentation(format!(
                    "homogeneous relation {} has degree below 2",
                    i + 1
                )));
            }
        }
        let maxdeg = relations.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        let bound = bound.unwrap_or_else(|| default_bound(maxdeg));
        if bound < maxdeg {
            return Err(Error::Truncation(format!(
                "bound {bound} is below the maximal relation degree {maxdeg}"
            )));
        }
        Ok(Self {
            field,
            vars,
            relations,
            bound,
            homogeneous,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }
    pub fn relations(&self) -> &[Polynomial<F::Elem>] {
        &self.relations
    }
    pub fn bound(&self) -> usize {
        self.bound
    }
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }
    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// Same presentation with another truncation bound.
    pub fn with_bound(&self, bound: usize) -> Result<Self> {
        Self::new(
            self.field.clone(),
            self.vars.clone(),
            self.relations.clone(),
            Some(bound),
        )
    }

    /// Parses relations written in the job-file polynomial syntax.
    pub fn from_strs(field: F, vars: &[&str], relations: &[&str], bound: Option<usize>) -> Result<Self> {
        let vars = VariableSet::new(vars.iter().copied())?;
        let rels = relations
            .iter()
            .enumerate()
            .map(|(i, s)| crate::parse::parse_polynomial(&field, &vars, s, i + 1))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, vars, rels, bound)
    }
}

pub fn default_bound(max_relation_degree: usize) -> usize {
    8.max(2 * max_relation_degree)
}

/// Index from leading words to basis elements, used for leftmost reduction.
#[derive(Clone, Debug, Default)]
struct Reducer {
    by_word: HashMap<Vec<u8>, usize>,
    lengths: Vec<usize>,
}

impl Reducer {
    fn build<'a>(leads: impl Iterator<Item = (usize, &'a Word)>) -> Self {
        let mut r = Reducer::default();
        for (i, w) in leads {
            r.by_word
                .entry(w.letters().to_vec())
                .and_modify(|j| *j = (*j).min(i))
                .or_insert(i);
        }
        let mut lengths: Vec<usize> = r.by_word.keys().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths.dedup();
        r.lengths = lengths;
        r
    }

    /// Leftmost occurrence of some leading word in `w`; ties at the same
    /// position go to the lowest element index.
    fn find(&self, w: &[u8]) -> Option<(usize, usize, usize)> {
        for start in 0..w.len() {
            let mut best: Option<(usize, usize)> = None;
            for &len in &self.lengths {
                if start + len > w.len() {
                    break;
                }
                if let Some(&idx) = self.by_word.get(&w[start..start + len]) {
                    if best.is_none_or(|(b, _)| idx < b) {
                        best = Some((idx, len));
                    }
                }
            }
            if let Some((idx, len)) = best {
                return Some((idx, start, len));
            }
        }
        None
    }
}

/// Fully reduces `f` modulo monic `elements` using the reducer index.
fn reduce_full<F: Field>(
    field: &F,
    elements: &[Polynomial<F::Elem>],
    reducer: &Reducer,
    f: &Polynomial<F::Elem>,
) -> Polynomial<F::Elem> {
    if reducer.by_word.is_empty() {
        return f.clone();
    }
    let mut work: BTreeMap<Word, F::Elem> = f.terms().iter().cloned().collect();
    let mut out = Vec::new();
    while let Some((w, c)) = work.pop_last() {
        match reducer.find(w.letters()) {
            None => out.push((w, c)),
            Some((idx, start, len)) => {
                let u = w.subword(0, start);
                let v = w.subword(start + len, w.degree());
                for (t, x) in &elements[idx].terms()[1..] {
                    let mut l = Vec::with_capacity(u.degree() + t.degree() + v.degree());
                    l.extend_from_slice(u.letters());
                    l.extend_from_slice(t.letters());
                    l.extend_from_slice(v.letters());
                    let delta = field.neg(&field.mul(&c, x));
                    let key = Word::new(l);
                    match work.get_mut(&key) {
                        Some(y) => {
                            *y = field.add(y, &delta);
                            if field.is_zero(y) {
                                work.remove(&key);
                            }
                        }
                        None => {
                            work.insert(key, delta);
                        }
                    }
                }
            }
        }
    }
    // `out` is already in descending order.
    Polynomial::from_terms(field, out)
}

/// How two leading words interact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum OverlapKind {
    /// A suffix of `u` of this length equals a prefix of `w`.
    SuffixPrefix { length: usize },
    /// `u` occurs inside `w` starting at this position.
    Containment { position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub ambient: Word,
}

/// All proper suffix/prefix overlaps of `u` followed by `w`, and all
/// occurrences of `u` as a factor of a different word `w`.
pub fn overlaps(u: &Word, w: &Word) -> Vec<Overlap> {
    let (a, b) = (u.letters(), w.letters());
    let mut out = Vec::new();
    let max = a.len().min(b.len());
    // longer overlaps give shorter ambient words; list in ascending ambient
    for len in (1..max).rev() {
        if a[a.len() - len..] == b[..len] {
            let mut amb = a.to_vec();
            amb.extend_from_slice(&b[len..]);
            out.push(Overlap {
                kind: OverlapKind::SuffixPrefix { length: len },
                ambient: Word::new(amb),
            });
        }
    }
    if a.len() <= b.len() && a != b {
        for pos in 0..=(b.len() - a.len()) {
            if b[pos..pos + a.len()] == *a {
                out.push(Overlap {
                    kind: OverlapKind::Containment { position: pos },
                    ambient: w.clone(),
                });
            }
        }
    }
    out
}

/// The S-polynomial of monic `g` (leading word `u`) and `h` (leading word
/// `w`) for the given overlap.
fn s_polynomial<F: Field>(
    field: &F,
    g: &Polynomial<F::Elem>,
    h: &Polynomial<F::Elem>,
    ov: &Overlap,
) -> Polynomial<F::Elem> {
    let u = g.leading_word().expect("nonzero");
    let w = h.leading_word().expect("nonzero");
    match ov.kind {
        OverlapKind::SuffixPrefix { length } => {
            let left = u.subword(0, u.degree() - length);
            let right = w.subword(length, w.degree());
            g.sandwich(&Word::empty(), &right)
                .sub(field, &h.sandwich(&left, &Word::empty()))
        }
        OverlapKind::Containment { position } => {
            let left = w.subword(0, position);
            let right = w.subword(position + u.degree(), w.degree());
            h.sub(field, &g.sandwich(&left, &right))
        }
    }
}

/// An ambiguity above the bound whose S-polynomial did not reduce to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendingAmbiguity {
    pub ambient: Word,
    pub remainder_degree: usize,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    vars: VariableSet,
    elements: Vec<Polynomial<F::Elem>>,
    bound: usize,
    complete_below: usize,
    homogeneous: bool,
    pending: Vec<PendingAmbiguity>,
    notices: Vec<String>,
    reducer: Reducer,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }
    pub fn elements(&self) -> &[Polynomial<F::Elem>] {
        &self.elements
    }
    pub fn bound(&self) -> usize {
        self.bound
    }
    /// Largest degree through which the leading-word ideal is certified.
    pub fn complete_below(&self) -> usize {
        self.complete_below
    }
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }
    /// Ambiguities beyond the bound that still produce new elements.
    pub fn pending(&self) -> &[PendingAmbiguity] {
        &self.pending
    }
    /// True when every ambiguity, of any degree, resolves.
    pub fn is_complete(&self) -> bool {
        self.pending.is_empty()
    }
    pub fn notices(&self) -> &[String] {
        &self.notices
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.elements
            .iter()
            .map(|g| g.leading_word().expect("nonzero").clone())
            .collect()
    }

    /// Number of basis elements per leading-word degree, for degrees `0..=upto`.
    pub fn degree_counts(&self, upto: usize) -> Vec<usize> {
        let mut c = vec![0; upto + 1];
        for w in self.leading_words() {
            if w.degree() <= upto {
                c[w.degree()] += 1;
            }
        }
        c
    }

    pub fn normal_form(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        reduce_full(&self.field, &self.elements, &self.reducer, f)
    }

    /// Whether `w` contains no leading word as a factor.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.reducer.find(w.letters()).is_none()
    }
}

/// Normal form of `f` modulo `g`.
pub fn normal_form<F: Field>(f: &Polynomial<F::Elem>, g: &GroebnerBasis<F>) -> Polynomial<F::Elem> {
    g.normal_form(f)
}

/// Completion state: elements by insertion id, `None` once superseded.
struct Completion<'a, F: Field> {
    field: &'a F,
    bound: usize,
    slots: Vec<Option<Polynomial<F::Elem>>>,
    queue: BinaryHeap<Reverse<(Word, usize, usize, usize)>>,
    notices: Vec<String>,
    cache: Option<(Vec<Polynomial<F::Elem>>, Reducer)>,
}

impl<F: Field> Completion<'_, F> {
    fn alive(&self) -> Vec<Polynomial<F::Elem>> {
        self.slots.iter().flatten().cloned().collect()
    }

    fn reduce(&mut self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        // Alive elements in insertion order, so the smallest index is the
        // oldest element.
        if self.cache.is_none() {
            let els = self.alive();
            let reducer = Reducer::build(els.iter().enumerate().map(|(i, g)| (i, g.leading_word().unwrap())));
            self.cache = Some((els, reducer));
        }
        let (els, reducer) = self.cache.as_ref().unwrap();
        reduce_full(self.field, els, reducer, f)
    }

    /// Adds a reduced nonzero element, retiring elements whose leading word
    /// it divides and re-adding their remainders.
    fn add(&mut self, h: Polynomial<F::Elem>) {
        let mut work = vec![h];
        while let Some(h) = work.pop() {
            let h = self.reduce(&h);
            if h.is_zero() {
                continue;
            }
            let h = h.monic(self.field);
            let lw = h.leading_word().unwrap().clone();
            for i in 0..self.slots.len() {
                let retire = matches!(&self.slots[i], Some(g) if g.leading_word().unwrap().contains(&lw));
                if retire {
                    let g = self.slots[i].take().unwrap();
                    work.push(g);
                }
            }
            let id = self.slots.len();
            self.slots.push(Some(h));
            self.cache = None;
            for j in 0..=id {
                let Some(g) = &self.slots[j] else { continue };
                let gw = g.leading_word().unwrap().clone();
                let mut pairs = vec![(id, j)];
                if j != id {
                    pairs.push((j, id));
                }
                for (a, b) in pairs {
                    let (wa, wb) = if a == id { (&lw, &gw) } else { (&gw, &lw) };
                    for ov in overlaps(wa, wb) {
                        if let OverlapKind::SuffixPrefix { length } = ov.kind {
                            if ov.ambient.degree() <= self.bound {
                                self.queue.push(Reverse((ov.ambient, a, b, length)));
                            }
                        }
                    }
                }
            }
        }
    }

    fn run(&mut self) {
        while let Some(Reverse((ambient, a, b, length))) = self.queue.pop() {
            let (Some(g), Some(h)) = (&self.slots[a], &self.slots[b]) else {
                continue;
            };
            let ov = Overlap {
                kind: OverlapKind::SuffixPrefix { length },
                ambient,
            };
            let s = s_polynomial(self.field, g, h, &ov);
            let r = self.reduce(&s);
            if !r.is_zero() {
                self.add(r);
            }
        }
    }
}

/// Truncated completion of the relations of `p`.
pub fn complete<F: Field>(p: &Presentation<F>) -> GroebnerBasis<F> {
    let field = p.field();
    let mut st = Completion {
        field,
        bound: p.bound(),
        slots: Vec::new(),
        queue: BinaryHeap::new(),
        notices: Vec::new(),
        cache: None,
    };
    for (i, r) in p.relations().iter().enumerate() {
        let red = st.reduce(r);
        if red.is_zero() {
            st.notices.push(format!(
                "relation {} reduces to 0 against earlier relations and was dropped",
                i + 1
            ));
            continue;
        }
        st.add(red);
    }
    st.run();

    // Inter-reduce tails so the result is the reduced basis.
    let mut els = st.alive();
    els.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
    for i in 0..els.len() {
        let head = Polynomial::monomial(field, els[i].leading_word().unwrap().clone(), field.one());
        let tail = els[i].sub(field, &head);
        let others: Vec<Polynomial<F::Elem>> = els.clone();
        let reducer = Reducer::build(
            others
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(j, g)| (j, g.leading_word().unwrap())),
        );
        let tail = reduce_full(field, &others, &reducer, &tail);
        els[i] = head.add(field, &tail);
    }
    let reducer = Reducer::build(els.iter().enumerate().map(|(i, g)| (i, g.leading_word().unwrap())));

    // Every remaining ambiguity has ambient degree above the bound.
    let mut pending = Vec::new();
    for i in 0..els.len() {
        for j in 0..els.len() {
            let (u, w) = (els[i].leading_word().unwrap(), els[j].leading_word().unwrap());
            for ov in overlaps(u, w) {
                if !matches!(ov.kind, OverlapKind::SuffixPrefix { .. }) || ov.ambient.degree() <= p.bound() {
                    continue;
                }
                let s = s_polynomial(field, &els[i], &els[j], &ov);
                let r = reduce_full(field, &els, &reducer, &s);
                if let Some(d) = r.degree() {
                    pending.push(PendingAmbiguity {
                        ambient: ov.ambient,
                        remainder_degree: d,
                    });
                }
            }
        }
    }
    pending.sort_by(|a, b| a.ambient.cmp(&b.ambient));
    let complete_below = if p.is_homogeneous() {
        p.bound()
    } else {
        pending
            .iter()
            .map(|a| a.remainder_degree.saturating_sub(1))
            .min()
            .unwrap_or(p.bound())
            .min(p.bound())
    };
    GroebnerBasis {
        field: field.clone(),
        vars: p.vars().clone(),
        elements: els,
        bound: p.bound(),
        complete_below,
        homogeneous: p.is_homogeneous(),
        pending,
        notices: st.notices,
        reducer,
    }
}

/// Whether `set` (not necessarily reduced) already resolves every ambiguity
/// with ambient degree at most `bound`.
pub fn is_groebner_within<F: Field>(
    field: &F,
    set: &[Polynomial<F::Elem>],
    bound: usize,
) -> bool {
    let els: Vec<Polynomial<F::Elem>> = set.iter().filter(|g| !g.is_zero()).map(|g| g.monic(field)).collect();
    let reducer = Reducer::build(els.iter().enumerate().map(|(i, g)| (i, g.leading_word().unwrap())));
    for i in 0..els.len() {
        for j in 0..els.len() {
            let (u, w) = (els[i].leading_word().unwrap(), els[j].leading_word().unwrap());
            if i != j && u == w {
                let s = els[j].sub(field, &els[i]);
                if !reduce_full(field, &els, &reducer, &s).is_zero() {
                    return false;
                }
                continue;
            }
            for ov in overlaps(u, w) {
                if ov.ambient.degree() > bound {
                    continue;
                }
                let s = s_polynomial(field, &els[i], &els[j], &ov);
                if !reduce_full(field, &els, &reducer, &s).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Per-degree dimensions of `I` and `I' = V·I + I·V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealDims {
    pub degree: usize,
    pub dim_i: usize,
    pub dim_i_prime: usize,
}

impl IdealDims {
    pub fn essential(&self) -> usize {
        self.dim_i - self.dim_i_prime
    }
}

/// Columns are the words of one degree; column 0 is the largest word, so an
/// echelon pivot is exactly the leading word of its row.
struct WordColumns {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl WordColumns {
    fn new(n: usize, d: usize) -> Self {
        let mut words = all_words(n, d);
        words.reverse();
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Self { words, index }
    }

    fn encode<E: Clone>(&self, p: &Polynomial<E>) -> SparseVec<E> {
        // descending words map to ascending columns
        p.terms().iter().map(|(w, c)| (self.index[w], c.clone())).collect()
    }

    fn decode<F: Field>(&self, field: &F, v: &SparseVec<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial::from_terms(field, v.iter().map(|(c, x)| (self.words[*c].clone(), x.clone())).collect())
    }
}

/// Degree-by-degree construction shared by [`ideal_dims`] and
/// [`essential_generating_set`]: returns dims and the essential rows.
fn degree_sweep<F: Field>(
    p: &Presentation<F>,
) -> Result<(Vec<IdealDims>, Vec<Polynomial<F::Elem>>)> {
    if !p.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let field = p.field();
    let n = p.vars().len();
    let maxdeg = p.max_relation_degree();
    let mut dims = Vec::new();
    let mut essential = Vec::new();
    let mut prev_basis: Vec<Polynomial<F::Elem>> = Vec::new();
    for m in 0..=maxdeg.min(p.bound()) {
        let cols = WordColumns::new(n, m);
        let mut ech = Echelon::new(field.clone(), cols.words.len());
        let mut ws = ech.workspace();
        for h in &prev_basis {
            for v in 0..n as u8 {
                let x = Word::letter(v);
                ech.insert_with(&cols.encode(&h.sandwich(&x, &Word::empty())), &mut ws);
                ech.insert_with(&cols.encode(&h.sandwich(&Word::empty(), &x)), &mut ws);
            }
        }
        let dim_i_prime = ech.rank();
        for r in p.relations().iter().filter(|r| r.degree() == Some(m)) {
            let red = ech.reduce_with(&cols.encode(r), &mut ws);
            if ech.insert_with(&red, &mut ws).is_some() {
                // remainder of r modulo earlier rows: still in I_m, and its
                // leading word is a fresh pivot
                essential.push(cols.decode(field, &red).monic(field));
            }
        }
        dims.push(IdealDims {
            degree: m,
            dim_i: ech.rank(),
            dim_i_prime,
        });
        prev_basis = ech.rows().iter().map(|r| cols.decode(field, r)).collect();
    }
    Ok((dims, essential))
}

/// `(m, dim I_m, dim I'_m)` for `m <= D`. Degrees above the largest relation
/// degree have `I_m = I'_m`; there `dim I_m` is read off the completed basis
/// as `n^m` minus the number of normal words.
pub fn ideal_dims<F: Field>(p: &Presentation<F>) -> Result<Vec<IdealDims>> {
    let (mut dims, _) = degree_sweep(p)?;
    let maxdeg = p.max_relation_degree();
    if p.bound() > maxdeg {
        let g = complete(p);
        let m = grassoc::associated_graded(&g);
        let h = grassoc::hilbert_coeffs(&m);
        let n = p.vars().len();
        for d in maxdeg + 1..=p.bound() {
            let total = n.pow(d as u32);
            let dim = total - h[d];
            dims.push(IdealDims {
                degree: d,
                dim_i: dim,
                dim_i_prime: dim,
            });
        }
    }
    Ok(dims)
}

/// Homogeneous essential relations, grouped by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct EssentialSet<E> {
    pub elements: Vec<Polynomial<E>>,
    pub counts: Vec<(usize, usize)>,
}

/// Builds an essential generating set degree by degree: the echelon of `I'_m`
/// is extended by the degree-`m` relations, and the extension rows are the
/// essential relations. Their leading words are pivots outside `I'_m`, so the
/// leading monomial property holds by construction.
pub fn essential_generating_set<F: Field>(p: &Presentation<F>) -> Result<EssentialSet<F::Elem>> {
    let (_, elements) = degree_sweep(p)?;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for e in &elements {
        *counts.entry(e.degree().unwrap()).or_default() += 1;
    }
    Ok(EssentialSet {
        elements,
        counts: counts.into_iter().collect(),
    })
}

/// Offending pair for the leading monomial property: the leading word of
/// `inner` occurs in the leading word of `outer` as `left · inner · right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LmpWitness {
    pub inner: usize,
    pub outer: usize,
    pub inner_word: Word,
    pub outer_word: Word,
    pub left: Word,
    pub right: Word,
}

pub fn leading_monomial_property<E: Clone + PartialEq>(
    set: &[Polynomial<E>],
) -> (bool, Option<LmpWitness>) {
    let leads: Vec<&Word> = set.iter().filter_map(Polynomial::leading_word).collect();
    for (o, ow) in leads.iter().enumerate() {
        for (i, iw) in leads.iter().enumerate() {
            if i == o {
                continue;
            }
            if let Some(pos) = find_factor(ow.letters(), iw.letters()) {
                return (
                    false,
                    Some(LmpWitness {
                        inner: i,
                        outer: o,
                        inner_word: (*iw).clone(),
                        outer_word: (*ow).clone(),
                        left: ow.subword(0, pos),
                        right: ow.subword(pos + iw.degree(), ow.degree()),
                    }),
                );
            }
        }
    }
    (true, None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EssentialVerdict {
    Yes,
    No { degree: usize, essential: usize, monomial: usize },
    InconclusiveAtBound { bound: usize },
}

/// Evidence behind an [`EssentialVerdict`]: per-degree essential counts
/// against minimal monomial generators of the leading-word ideal.
#[derive(Clone, Debug, Serialize)]
pub struct EssentialCertificate {
    pub verdict: EssentialVerdict,
    /// `(m, dim (I/I')_m, minimal generators of J in degree m)`.
    pub table: Vec<(usize, usize, usize)>,
    pub leading_words: Vec<Word>,
    pub pending: Vec<PendingAmbiguity>,
}

/// Decides whether the ideal has an essential Gröbner basis by comparing
/// `dim (I/I')_m` with the number of minimal generators of the leading-word
/// ideal in each degree `m <= D`.
pub fn essential_groebner_test<F: Field>(p: &Presentation<F>) -> Result<EssentialCertificate> {
    if !p.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let ess = essential_generating_set(p)?;
    let g = complete(p);
    essential_certificate(&ess, &g)
}

pub(crate) fn essential_certificate<F: Field>(
    ess: &EssentialSet<F::Elem>,
    g: &GroebnerBasis<F>,
) -> Result<EssentialCertificate> {
    let upto = g.complete_below();
    let mono = g.degree_counts(upto);
    let mut essc = vec![0usize; upto + 1];
    for (d, c) in &ess.counts {
        if *d <= upto {
            essc[*d] = *c;
        }
    }
    let table: Vec<(usize, usize, usize)> = (0..=upto)
        .filter(|&m| essc[m] > 0 || mono[m] > 0)
        .map(|m| (m, essc[m], mono[m]))
        .collect();
    let verdict = match table.iter().find(|(_, e, j)| e != j) {
        Some(&(degree, essential, monomial)) => EssentialVerdict::No {
            degree,
            essential,
            monomial,
        },
        None if !g.is_complete() => EssentialVerdict::InconclusiveAtBound { bound: g.bound() },
        None => EssentialVerdict::Yes,
    };
    Ok(EssentialCertificate {
        verdict,
        table,
        leading_words: g.leading_words(),
        pending: g.pending().to_vec(),
    })
}
