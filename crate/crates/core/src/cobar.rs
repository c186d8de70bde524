//! Truncated cobar complex of a connected algebra `A`.
//!
//! Chains are tuples `a_1 ⊗ … ⊗ a_n` of normal words of positive degree, with
//! `d = Σ_{i=1}^{n-1} (-1)^i a_1 ⊗ … ⊗ a_i a_{i+1} ⊗ … ⊗ a_n`. Homology of
//! this chain complex, block by block, gives the dimensions of `Ext_A(K, K)`;
//! cohomology classes are represented by cochains on the chain basis.
//!
//! Two block structures are supported. [`Grading::ByDegree`] splits by total
//! degree and works for any homogeneous quotient. [`Grading::ByWord`] splits
//! by the concatenated word and is only valid for monomial algebras, where
//! every product is a concatenation or zero; its blocks are tiny.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::freealg::{Polynomial, VariableSet, Word};
use crate::grassoc::{self, MonomialAlgebra};
use crate::groebner::{complete, GroebnerBasis, Presentation};
use crate::linalg::{Echelon, SparseVec};

/// A connected algebra given by its normal words and a product on them:
/// either a monomial algebra or a quotient by a completed basis.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<F: Field> {
    field: F,
    normal: MonomialAlgebra,
    basis: Option<GroebnerBasis<F>>,
    monomial: bool,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn monomial(field: F, m: MonomialAlgebra) -> Self {
        Self {
            field,
            normal: m,
            basis: None,
            monomial: true,
        }
    }

    /// Quotient of the free algebra by the ideal of a completed basis. Normal
    /// words are certified up to the basis' `complete_below`.
    pub fn quotient(g: GroebnerBasis<F>) -> Self {
        let monomial = g.elements().iter().all(|e| e.len() == 1);
        Self {
            field: g.field().clone(),
            normal: grassoc::associated_graded(&g),
            basis: Some(g),
            monomial,
        }
    }

    pub fn from_presentation(p: &Presentation<F>) -> Self {
        Self::quotient(complete(p))
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn vars(&self) -> &VariableSet {
        self.normal.vars()
    }
    /// Largest degree whose normal words and products are exact.
    pub fn bound(&self) -> usize {
        self.normal.bound()
    }
    /// The associated monomial algebra (same normal words).
    pub fn normal_algebra(&self) -> &MonomialAlgebra {
        &self.normal
    }
    pub fn basis(&self) -> Option<&GroebnerBasis<F>> {
        self.basis.as_ref()
    }
    /// True when every product of normal words is a word or zero.
    pub fn is_monomial(&self) -> bool {
        self.monomial
    }
    pub fn is_homogeneous(&self) -> bool {
        self.basis.as_ref().is_none_or(|g| g.is_homogeneous())
    }

    pub fn normal_words(&self, degree: usize) -> Vec<Word> {
        self.normal.normal_words_unchecked(degree)
    }

    /// Normal form of `a · b` as `(word, coefficient)` terms.
    pub fn product(&self, a: &Word, b: &Word) -> Vec<(Word, F::Elem)> {
        match (&self.basis, self.monomial) {
            (Some(g), false) => g
                .normal_form(&Polynomial::word(&self.field, a.concat(b)))
                .into_terms(),
            _ => self
                .normal
                .product(a, b)
                .map(|w| vec![(w, self.field.one())])
                .unwrap_or_default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Grading {
    ByDegree,
    ByWord,
}

/// Index of a block of the complex: a total degree, or a concatenated word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BlockKey {
    Degree(usize),
    Word(Word),
}

impl BlockKey {
    pub fn degree(&self) -> usize {
        match self {
            BlockKey::Degree(d) => *d,
            BlockKey::Word(w) => w.degree(),
        }
    }

    fn of_tuple(grading: Grading, t: &[Word]) -> Self {
        match grading {
            Grading::ByDegree => BlockKey::Degree(t.iter().map(Word::degree).sum()),
            Grading::ByWord => BlockKey::Word(Word::new(t.iter().flat_map(|w| w.letters().iter().copied()).collect())),
        }
    }

    /// Splits into the keys of a prefix of degree `p` and the rest.
    fn split(&self, p: usize) -> (BlockKey, BlockKey) {
        match self {
            BlockKey::Degree(d) => (BlockKey::Degree(p), BlockKey::Degree(d - p)),
            BlockKey::Word(w) => (
                BlockKey::Word(w.subword(0, p)),
                BlockKey::Word(w.subword(p, w.degree())),
            ),
        }
    }
}

/// Basis of one block of `A_+^{⊗n}`.
#[derive(Clone, Debug)]
pub struct ChainBasis {
    n: usize,
    key: BlockKey,
    tuples: Vec<Vec<Word>>,
    index: HashMap<Vec<Word>, usize>,
}

impl ChainBasis {
    fn from_tuples(n: usize, key: BlockKey, tuples: Vec<Vec<Word>>) -> Self {
        let index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Self { n, key, tuples, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn key(&self) -> &BlockKey {
        &self.key
    }
    pub fn tuples(&self) -> &[Vec<Word>] {
        &self.tuples
    }
    pub fn len(&self) -> usize {
        self.tuples.len()
    }
    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
    pub fn position(&self, t: &[Word]) -> Option<usize> {
        self.index.get(t).copied()
    }
}

fn degree_tuples(words: &[Vec<Word>], n: usize, j: usize, cur: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
    if n == 0 {
        if j == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if j < n {
        return;
    }
    for a in 1..=j - (n - 1) {
        for w in &words[a] {
            cur.push(w.clone());
            degree_tuples(words, n - 1, j - a, cur, out);
            cur.pop();
        }
    }
}

/// All ways of cutting `letters[start..]` into `n` nonempty normal pieces.
fn cuttings(
    m: &MonomialAlgebra,
    letters: &[u8],
    n: usize,
    start: usize,
    cur: &mut Vec<Word>,
    out: &mut Vec<Vec<Word>>,
) {
    let len = letters.len();
    if n == 0 {
        if start == len {
            out.push(cur.clone());
        }
        return;
    }
    if len - start < n {
        return;
    }
    let aut = m.automaton();
    let mut s = aut.start();
    for end in start + 1..=len - (n - 1) {
        s = aut.step(s, letters[end - 1]);
        if aut.is_forbidden(s) {
            break;
        }
        cur.push(Word::new(letters[start..end].to_vec()));
        cuttings(m, letters, n - 1, end, cur, out);
        cur.pop();
    }
}

/// Normal words per degree `0..=bound`.
fn words_by_degree<F: Field>(alg: &GradedAlgebra<F>, bound: usize) -> Vec<Vec<Word>> {
    (0..=bound).map(|j| alg.normal_words(j)).collect()
}

fn chain_basis_with<F: Field>(
    alg: &GradedAlgebra<F>,
    words: &[Vec<Word>],
    n: usize,
    key: &BlockKey,
) -> ChainBasis {
    let mut out = Vec::new();
    match key {
        BlockKey::Degree(j) => degree_tuples(words, n, *j, &mut Vec::new(), &mut out),
        BlockKey::Word(w) => cuttings(alg.normal_algebra(), w.letters(), n, 0, &mut Vec::new(), &mut out),
    }
    ChainBasis::from_tuples(n, key.clone(), out)
}

/// Chain basis of the block `key` in cohomological degree `n`.
pub fn chain_basis<F: Field>(alg: &GradedAlgebra<F>, n: usize, key: &BlockKey) -> ChainBasis {
    let words = words_by_degree(alg, key.degree());
    chain_basis_with(alg, &words, n, key)
}

type ProductCache<E> = HashMap<(Word, Word), Vec<(Word, E)>>;

fn differential_row<F: Field>(
    alg: &GradedAlgebra<F>,
    t: &[Word],
    target: &ChainBasis,
    cache: &mut ProductCache<F::Elem>,
) -> SparseVec<F::Elem> {
    let f = alg.field();
    let mut row = Vec::new();
    for k in 0..t.len().saturating_sub(1) {
        // merging entries i and i+1 with i = k + 1 carries (-1)^i
        let negative = k % 2 == 0;
        let prod = cache
            .entry((t[k].clone(), t[k + 1].clone()))
            .or_insert_with(|| alg.product(&t[k], &t[k + 1]));
        for (w, c) in prod.iter() {
            let mut merged = Vec::with_capacity(t.len() - 1);
            merged.extend_from_slice(&t[..k]);
            merged.push(w.clone());
            merged.extend_from_slice(&t[k + 2..]);
            let idx = target
                .position(&merged)
                .expect("product of normal words lies in the target block");
            row.push((idx, if negative { f.neg(c) } else { c.clone() }));
        }
    }
    crate::linalg::normalize(f, row)
}

/// Matrix of `d: (A_+^{⊗n})_j → (A_+^{⊗(n-1)})_j`: one sparse row per source
/// tuple, in target coordinates.
#[derive(Clone, Debug)]
pub struct DifferentialMatrix<E> {
    pub source: ChainBasis,
    pub target: ChainBasis,
    pub rows: Vec<SparseVec<E>>,
}

impl<E: Clone> DifferentialMatrix<E> {
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        crate::linalg::rank(field, self.target.len(), &self.rows)
    }
}

/// The degree-`j` block of the differential on `n`-chains.
pub fn chain_differential<F: Field>(
    alg: &GradedAlgebra<F>,
    n: usize,
    j: usize,
) -> Result<DifferentialMatrix<F::Elem>> {
    if !alg.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    if j > alg.bound() {
        return Err(Error::Truncation(format!(
            "degree {j} exceeds the certified bound {}",
            alg.bound()
        )));
    }
    if n == 0 {
        return Err(Error::Truncation("the differential starts at n = 1".into()));
    }
    let words = words_by_degree(alg, j);
    let key = BlockKey::Degree(j);
    let source = chain_basis_with(alg, &words, n, &key);
    let target = chain_basis_with(alg, &words, n - 1, &key);
    let mut cache = HashMap::new();
    let rows = source
        .tuples()
        .iter()
        .map(|t| differential_row(alg, t, &target, &mut cache))
        .collect();
    Ok(DifferentialMatrix { source, target, rows })
}

/// Cohomology of one block at one cohomological degree.
///
/// Cocycles are parametrised by their values on the non-pivot columns of
/// the boundary echelon. Coboundaries restricted to those columns form a
/// second echelon; its free columns index the classes.
#[derive(Clone, Debug)]
struct Level<F: Field> {
    basis: ChainBasis,
    boundaries: Echelon<F>,
    free_cols: Vec<usize>,
    free_pos: Vec<Option<usize>>,
    coboundaries: Echelon<F>,
    class_of: Vec<Option<usize>>,
    /// Class representatives, dense over the chain basis.
    reps: Vec<Vec<F::Elem>>,
}

impl<F: Field> Level<F> {
    fn build(
        field: &F,
        basis: ChainBasis,
        up: &[SparseVec<F::Elem>],
        down: &[SparseVec<F::Elem>],
        below: usize,
    ) -> Self {
        let ncols = basis.len();
        let mut boundaries = Echelon::new(field.clone(), ncols);
        let mut ws = boundaries.workspace();
        for r in up {
            if !r.is_empty() {
                boundaries.insert_with(r, &mut ws);
            }
        }
        let free_cols: Vec<usize> = (0..ncols).filter(|c| !boundaries.is_pivot(*c)).collect();
        let mut free_pos = vec![None; ncols];
        for (k, &c) in free_cols.iter().enumerate() {
            free_pos[c] = Some(k);
        }
        let mut cob_vecs: Vec<SparseVec<F::Elem>> = vec![Vec::new(); below];
        for (c, row) in down.iter().enumerate() {
            if let Some(k) = free_pos[c] {
                for (s, x) in row {
                    cob_vecs[*s].push((k, x.clone()));
                }
            }
        }
        let mut coboundaries = Echelon::new(field.clone(), free_cols.len());
        let mut ws = coboundaries.workspace();
        for v in cob_vecs.iter().filter(|v| !v.is_empty()) {
            coboundaries.insert_with(v, &mut ws);
        }
        let mut class_of = vec![None; free_cols.len()];
        let mut reps = Vec::new();
        for k in 0..free_cols.len() {
            if coboundaries.is_pivot(k) {
                continue;
            }
            class_of[k] = Some(reps.len());
            let ext = boundaries.annihilating_extension(&[(free_cols[k], field.one())]);
            let mut dense = vec![field.zero(); ncols];
            for (c, x) in ext {
                dense[c] = x;
            }
            reps.push(dense);
        }
        Self {
            basis,
            boundaries,
            free_cols,
            free_pos,
            coboundaries,
            class_of,
            reps,
        }
    }

    fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Class coordinates of a cocycle given by its values on the free columns.
    fn coords_from_free(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        self.coboundaries
            .reduce(v)
            .into_iter()
            .map(|(k, x)| (self.class_of[k].expect("remainder lies on class columns"), x))
            .collect()
    }

    fn restrict(&self, f: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        f.iter()
            .filter_map(|(c, x)| self.free_pos[*c].map(|k| (k, x.clone())))
            .collect()
    }

    fn kills_boundaries(&self, field: &F, f: &[(usize, F::Elem)]) -> bool {
        self.boundaries
            .rows()
            .iter()
            .all(|r| field.is_zero(&crate::linalg::dot(field, r, f)))
    }
}

#[derive(Clone, Debug)]
struct Block<F: Field> {
    levels: Vec<Level<F>>,
}

impl<F: Field> Block<F> {
    fn has_classes(&self) -> bool {
        self.levels.iter().any(|l| l.dim() > 0)
    }
}

fn compute_levels<F: Field>(
    alg: &GradedAlgebra<F>,
    words: &[Vec<Word>],
    key: &BlockKey,
    lo: usize,
    hi: usize,
) -> Vec<Level<F>> {
    let bases: Vec<ChainBasis> = (lo.saturating_sub(1)..=hi + 1)
        .map(|n| chain_basis_with(alg, words, n, key))
        .collect();
    let off = lo.saturating_sub(1);
    let mut cache = HashMap::new();
    let diffs: Vec<Vec<SparseVec<F::Elem>>> = bases
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if i == 0 || b.n() == 0 {
                return vec![Vec::new(); b.len()];
            }
            b.tuples()
                .iter()
                .map(|t| differential_row(alg, t, &bases[i - 1], &mut cache))
                .collect()
        })
        .collect();
    (lo..=hi)
        .map(|n| {
            let i = n - off;
            let below = if n == 0 { 0 } else { bases[i - 1].len() };
            let down: &[SparseVec<F::Elem>] = if n == 0 { &[] } else { &diffs[i] };
            Level::build(alg.field(), bases[i].clone(), &diffs[i + 1], down, below)
        })
        .collect()
}

/// Concatenated words of length `<= bound` that can be cut into at most
/// `max_pieces` normal pieces. Greedy longest-prefix cutting is optimal for
/// factor-closed sets, so the search follows the greedy cut.
fn word_keys(m: &MonomialAlgebra, bound: usize, max_pieces: usize) -> Vec<Word> {
    fn go(
        m: &MonomialAlgebra,
        bound: usize,
        max_pieces: usize,
        buf: &mut Vec<u8>,
        pieces: usize,
        state: usize,
        out: &mut Vec<Word>,
    ) {
        out.push(Word::new(buf.clone()));
        if buf.len() == bound {
            return;
        }
        let aut = m.automaton();
        for c in 0..m.vars().len() as u8 {
            let cont = aut.step(state, c);
            let (next, np) = if pieces > 0 && !aut.is_forbidden(cont) {
                (cont, pieces)
            } else {
                let fresh = aut.step(aut.start(), c);
                if aut.is_forbidden(fresh) || pieces + 1 > max_pieces {
                    continue;
                }
                (fresh, pieces + 1)
            };
            buf.push(c);
            go(m, bound, max_pieces, buf, np, next, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(m, bound, max_pieces, &mut Vec::new(), 0, m.automaton().start(), &mut out);
    out.sort();
    out
}

/// Values of a cochain on individual tuples.
type TupleValues<E> = Vec<(Vec<Word>, E)>;

/// A cochain on `n`-chains of total degree `degree`, keyed by tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<E> {
    pub n: usize,
    pub degree: usize,
    pub values: BTreeMap<Vec<Word>, E>,
}

impl<E: Clone> Cochain<E> {
    /// The unit class at `(0, 0)`.
    pub fn unit<F: Field<Elem = E>>(field: &F) -> Self {
        Self {
            n: 0,
            degree: 0,
            values: BTreeMap::from([(Vec::new(), field.one())]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }
}

/// Bigraded dimensions `dims(n, j)` with class representatives.
#[derive(Clone, Debug)]
pub struct ExtTable<E> {
    pub nmax: usize,
    pub bound: usize,
    dims: BTreeMap<(usize, usize), usize>,
    reps: BTreeMap<(usize, usize), Vec<Cochain<E>>>,
}

impl<E> ExtTable<E> {
    pub fn dim(&self, n: usize, j: usize) -> usize {
        self.dims.get(&(n, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(n, j)` order.
    pub fn nonzero(&self) -> Vec<((usize, usize), usize)> {
        self.dims.iter().filter(|(_, d)| **d > 0).map(|(k, d)| (*k, *d)).collect()
    }

    /// `Σ_j dims(n, j)`.
    pub fn total(&self, n: usize) -> usize {
        self.dims.iter().filter(|((m, _), _)| *m == n).map(|(_, d)| d).sum()
    }

    pub fn representatives(&self, n: usize, j: usize) -> &[Cochain<E>] {
        self.reps.get(&(n, j)).map_or(&[], |v| v.as_slice())
    }

    /// `Σ_n (-1)^n dims(n, j) t^j` for `j <= bound`.
    pub fn euler_series(&self) -> Vec<i64> {
        let mut s = vec![0i64; self.bound + 1];
        for ((n, j), d) in &self.dims {
            let d = *d as i64;
            s[*j] += if n % 2 == 0 { d } else { -d };
        }
        s
    }
}

/// Product of a Hilbert series with an Euler series, truncated to their
/// common length. For a connected algebra with `nmax >= bound` the result is
/// `1, 0, 0, …`.
pub fn hilbert_euler_product(hilbert: &[usize], euler: &[i64]) -> Vec<i64> {
    let len = hilbert.len().min(euler.len());
    (0..len)
        .map(|k| (0..=k).map(|i| hilbert[i] as i64 * euler[k - i]).sum())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deficiency {
    pub n: usize,
    pub degree: usize,
    pub ext_dim: usize,
    pub generated_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum K2Verdict {
    /// Cup products of degree-1 and degree-2 classes miss part of `Ext`.
    CertifiedNotK2 {
        witness: Deficiency,
        deficient: Vec<Deficiency>,
    },
    /// No deficiency for `n <= nmax`, `j <= bound`.
    EvidenceK2UpTo { nmax: usize, bound: usize },
}

impl K2Verdict {
    pub fn is_certified_not_k2(&self) -> bool {
        matches!(self, K2Verdict::CertifiedNotK2 { .. })
    }
}

/// Cohomology of the truncated cobar complex, block by block.
pub struct Cobar<F: Field> {
    alg: GradedAlgebra<F>,
    grading: Grading,
    nmax: usize,
    bound: usize,
    words: Vec<Vec<Word>>,
    blocks: BTreeMap<BlockKey, Block<F>>,
}

impl<F: Field> Cobar<F> {
    pub fn new(alg: &GradedAlgebra<F>, grading: Grading, nmax: usize, bound: usize) -> Result<Self> {
        if bound > alg.bound() {
            return Err(Error::Truncation(format!(
                "degree bound {bound} exceeds the certified bound {}",
                alg.bound()
            )));
        }
        let keys: Vec<BlockKey> = match grading {
            Grading::ByDegree => {
                if !alg.is_homogeneous() {
                    return Err(Error::Inhomogeneous);
                }
                (0..=bound).map(BlockKey::Degree).collect()
            }
            Grading::ByWord => {
                if !alg.is_monomial() {
                    return Err(Error::Presentation(
                        "word grading requires a monomial algebra".into(),
                    ));
                }
                word_keys(alg.normal_algebra(), bound, nmax + 1)
                    .into_iter()
                    .map(BlockKey::Word)
                    .collect()
            }
        };
        let words = words_by_degree(alg, bound);
        let blocks: BTreeMap<BlockKey, Block<F>> = keys
            .into_par_iter()
            .map(|key| {
                let levels = compute_levels(alg, &words, &key, 0, nmax);
                (key, Block { levels })
            })
            .filter(|(_, b)| b.has_classes())
            .collect();
        Ok(Self {
            alg: alg.clone(),
            grading,
            nmax,
            bound,
            words,
            blocks,
        })
    }

    /// Word grading for monomial algebras, degree grading otherwise.
    pub fn auto(alg: &GradedAlgebra<F>, nmax: usize, bound: usize) -> Result<Self> {
        let grading = if alg.is_monomial() {
            Grading::ByWord
        } else {
            Grading::ByDegree
        };
        Self::new(alg, grading, nmax, bound)
    }

    pub fn algebra(&self) -> &GradedAlgebra<F> {
        &self.alg
    }
    pub fn grading(&self) -> Grading {
        self.grading
    }
    pub fn nmax(&self) -> usize {
        self.nmax
    }
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn dim(&self, n: usize, j: usize) -> usize {
        self.blocks
            .iter()
            .filter(|(k, _)| k.degree() == j)
            .map(|(_, b)| b.levels.get(n).map_or(0, Level::dim))
            .sum()
    }

    /// Keys with nonzero cohomology, with per-level dimensions.
    pub fn block_dims(&self) -> Vec<(BlockKey, Vec<usize>)> {
        self.blocks
            .iter()
            .map(|(k, b)| (k.clone(), b.levels.iter().map(Level::dim).collect()))
            .collect()
    }

    fn rep_cochain(&self, level: &Level<F>, i: usize, degree: usize) -> Cochain<F::Elem> {
        let f = self.alg.field();
        let values = level.reps[i]
            .iter()
            .enumerate()
            .filter(|(_, x)| !f.is_zero(x))
            .map(|(c, x)| (level.basis.tuples()[c].clone(), x.clone()))
            .collect();
        Cochain {
            n: level.basis.n(),
            degree,
            values,
        }
    }

    /// Class representatives at `(n, j)`, in coordinate order.
    pub fn classes(&self, n: usize, j: usize) -> Vec<Cochain<F::Elem>> {
        let mut out = Vec::new();
        for (k, b) in self.blocks.iter().filter(|(k, _)| k.degree() == j) {
            if let Some(l) = b.levels.get(n) {
                out.extend((0..l.dim()).map(|i| self.rep_cochain(l, i, k.degree())));
            }
        }
        out
    }

    pub fn table(&self) -> ExtTable<F::Elem> {
        let mut dims = BTreeMap::new();
        let mut reps = BTreeMap::new();
        for n in 0..=self.nmax {
            for j in 0..=self.bound {
                let d = self.dim(n, j);
                if d > 0 {
                    dims.insert((n, j), d);
                    reps.insert((n, j), self.classes(n, j));
                }
            }
        }
        ExtTable {
            nmax: self.nmax,
            bound: self.bound,
            dims,
            reps,
        }
    }

    fn level_for(&self, key: &BlockKey, n: usize) -> Result<std::borrow::Cow<'_, Level<F>>> {
        if key.degree() > self.bound {
            return Err(Error::Truncation(format!(
                "degree {} exceeds the bound {}",
                key.degree(),
                self.bound
            )));
        }
        if let Some(l) = self.blocks.get(key).and_then(|b| b.levels.get(n)) {
            return Ok(std::borrow::Cow::Borrowed(l));
        }
        let mut ls = compute_levels(&self.alg, &self.words, key, n, n);
        Ok(std::borrow::Cow::Owned(ls.pop().expect("one level")))
    }

    /// Splits a cochain into per-block sparse vectors.
    fn split_cochain(&self, f: &Cochain<F::Elem>) -> Result<Vec<(BlockKey, TupleValues<F::Elem>)>> {
        let mut groups: BTreeMap<BlockKey, TupleValues<F::Elem>> = BTreeMap::new();
        for (t, x) in &f.values {
            if t.len() != f.n || t.iter().map(Word::degree).sum::<usize>() != f.degree {
                return Err(Error::NotCocycle(format!(
                    "tuple of the wrong shape for ({}, {})",
                    f.n, f.degree
                )));
            }
            if !self.alg.field().is_zero(x) {
                groups.entry(BlockKey::of_tuple(self.grading, t)).or_default().push((t.clone(), x.clone()));
            }
        }
        Ok(groups.into_iter().collect())
    }

    fn encode(level: &Level<F>, entries: &[(Vec<Word>, F::Elem)]) -> Result<SparseVec<F::Elem>> {
        let mut v = Vec::with_capacity(entries.len());
        for (t, x) in entries {
            let c = level
                .basis
                .position(t)
                .ok_or_else(|| Error::NotCocycle("tuple outside the chain basis".into()))?;
            v.push((c, x.clone()));
        }
        v.sort_by_key(|(c, _)| *c);
        Ok(v)
    }

    /// Whether `f` vanishes on every boundary.
    pub fn is_cocycle(&self, f: &Cochain<F::Elem>) -> Result<bool> {
        for (key, entries) in self.split_cochain(f)? {
            let level = self.level_for(&key, f.n)?;
            let v = Self::encode(&level, &entries)?;
            if !level.kills_boundaries(self.alg.field(), &v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of the class of `f` against [`Cobar::classes`]. Requires
    /// `f.n <= nmax`.
    pub fn class_coordinates(&self, f: &Cochain<F::Elem>) -> Result<Vec<F::Elem>> {
        if f.n > self.nmax {
            return Err(Error::Truncation(format!(
                "cohomological degree {} exceeds nmax {}",
                f.n, self.nmax
            )));
        }
        if !self.is_cocycle(f)? {
            return Err(Error::NotCocycle("cochain does not vanish on boundaries".into()));
        }
        let field = self.alg.field();
        let groups: HashMap<BlockKey, TupleValues<F::Elem>> = self.split_cochain(f)?.into_iter().collect();
        let mut out = Vec::new();
        for (key, b) in self.blocks.iter().filter(|(k, _)| k.degree() == f.degree) {
            let level = &b.levels[f.n];
            let mut local = vec![field.zero(); level.dim()];
            if let Some(entries) = groups.get(key) {
                let v = Self::encode(level, entries)?;
                for (i, x) in level.coords_from_free(&level.restrict(&v)) {
                    local[i] = x;
                }
            }
            out.extend(local);
        }
        Ok(out)
    }

    /// Cup product `(f ⌣ g)(a_1 ⊗ … ⊗ a_{n+m}) = f(a_1 ⊗ … ⊗ a_n) · g(rest)`.
    pub fn cup(&self, f: &Cochain<F::Elem>, g: &Cochain<F::Elem>) -> Result<Cochain<F::Elem>> {
        for (name, c) in [("left", f), ("right", g)] {
            if !self.is_cocycle(c)? {
                return Err(Error::NotCocycle(format!("{name} factor")));
            }
        }
        let field = self.alg.field();
        let mut values = BTreeMap::new();
        for (s, x) in &f.values {
            for (t, y) in &g.values {
                let v = field.mul(x, y);
                if !field.is_zero(&v) {
                    let mut st = s.clone();
                    st.extend(t.iter().cloned());
                    values.insert(st, v);
                }
            }
        }
        Ok(Cochain {
            n: f.n + g.n,
            degree: f.degree + g.degree,
            values,
        })
    }

    /// Dense cocycles spanning the subalgebra generated by degrees 1 and 2,
    /// and the per-level ranks, for one block.
    fn generated_block(
        &self,
        key: &BlockKey,
        spans: &HashMap<BlockKey, Vec<Vec<Vec<F::Elem>>>>,
    ) -> (Vec<Vec<Vec<F::Elem>>>, Vec<usize>) {
        let field = self.alg.field();
        let block = &self.blocks[key];
        let mut out: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); self.nmax + 1];
        let mut ranks = vec![0; self.nmax + 1];
        for n in 0..=self.nmax {
            let level = &block.levels[n];
            if level.dim() == 0 {
                continue;
            }
            if n <= 2 {
                out[n] = level.reps.clone();
                ranks[n] = level.dim();
                continue;
            }
            let mut span = Echelon::new(field.clone(), level.dim());
            let mut ws = span.workspace();
            for a in [1usize, 2] {
                // free positions grouped by the degree of their first `a` entries
                let mut groups: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
                for (k, &c) in level.free_cols.iter().enumerate() {
                    let p: usize = level.basis.tuples()[c][..a].iter().map(Word::degree).sum();
                    groups.entry(p).or_default().push((k, c));
                }
                for (p, entries) in groups {
                    let (bk, gk) = key.split(p);
                    let Some(left) = self.blocks.get(&bk).map(|b| &b.levels[a]) else { continue };
                    let Some(right_span) = spans.get(&gk).map(|s| &s[n - a]) else { continue };
                    if left.dim() == 0 || right_span.is_empty() {
                        continue;
                    }
                    let right = &self.blocks[&gk].levels[n - a];
                    let idx: Vec<(usize, usize, usize)> = entries
                        .iter()
                        .filter_map(|&(k, c)| {
                            let t = &level.basis.tuples()[c];
                            Some((k, left.basis.position(&t[..a])?, right.basis.position(&t[a..])?))
                        })
                        .collect();
                    for fl in &left.reps {
                        for gr in right_span {
                            let v: SparseVec<F::Elem> = idx
                                .iter()
                                .filter_map(|&(k, i, j)| {
                                    let x = field.mul(&fl[i], &gr[j]);
                                    (!field.is_zero(&x)).then_some((k, x))
                                })
                                .collect();
                            if v.is_empty() {
                                continue;
                            }
                            span.insert_with(&level.coords_from_free(&v), &mut ws);
                            if span.rank() == level.dim() {
                                break;
                            }
                        }
                    }
                }
            }
            ranks[n] = span.rank();
            out[n] = span
                .rows()
                .iter()
                .map(|row| {
                    let mut dense = vec![field.zero(); level.basis.len()];
                    for (cls, x) in row {
                        for (c, y) in level.reps[*cls].iter().enumerate() {
                            if !field.is_zero(y) {
                                dense[c] = field.add(&dense[c], &field.mul(x, y));
                            }
                        }
                    }
                    dense
                })
                .collect();
        }
        (out, ranks)
    }

    /// Dimension at each `(n, j)` of the subalgebra generated by the classes
    /// of cohomological degrees 1 and 2.
    pub fn generated_dims(&self) -> BTreeMap<(usize, usize), usize> {
        let mut spans: HashMap<BlockKey, Vec<Vec<Vec<F::Elem>>>> = HashMap::new();
        let mut dims = BTreeMap::new();
        for deg in 0..=self.bound {
            let keys: Vec<&BlockKey> = self.blocks.keys().filter(|k| k.degree() == deg).collect();
            let done: Vec<(BlockKey, Vec<Vec<Vec<F::Elem>>>, Vec<usize>)> = keys
                .par_iter()
                .map(|k| {
                    let (s, r) = self.generated_block(k, &spans);
                    ((*k).clone(), s, r)
                })
                .collect();
            for (k, s, r) in done {
                for (n, rank) in r.into_iter().enumerate() {
                    if rank > 0 {
                        *dims.entry((n, deg)).or_insert(0) += rank;
                    }
                }
                spans.insert(k, s);
            }
        }
        dims
    }

    /// Compares the generated subalgebra with the full table.
    pub fn k2_verdict(&self) -> K2Verdict {
        let generated = self.generated_dims();
        let mut deficient = Vec::new();
        for n in 3..=self.nmax {
            for j in 0..=self.bound {
                let ext_dim = self.dim(n, j);
                let generated_dim = generated.get(&(n, j)).copied().unwrap_or(0);
                if generated_dim < ext_dim {
                    deficient.push(Deficiency {
                        n,
                        degree: j,
                        ext_dim,
                        generated_dim,
                    });
                }
            }
        }
        match deficient.first() {
            Some(w) => K2Verdict::CertifiedNotK2 {
                witness: w.clone(),
                deficient,
            },
            None => K2Verdict::EvidenceK2UpTo {
                nmax: self.nmax,
                bound: self.bound,
            },
        }
    }
}

/// Bigraded dimensions of `Ext_A(K, K)` for `n <= nmax`, `j <= bound`.
pub fn ext_dims<F: Field>(alg: &GradedAlgebra<F>, nmax: usize, bound: usize) -> Result<ExtTable<F::Elem>> {
    Ok(Cobar::auto(alg, nmax, bound)?.table())
}

/// Cup product of two cocycles of `alg`'s cobar complex.
pub fn cup_product<F: Field>(
    cobar: &Cobar<F>,
    f: &Cochain<F::Elem>,
    g: &Cochain<F::Elem>,
) -> Result<Cochain<F::Elem>> {
    cobar.cup(f, g)
}

/// Whether `Ext` is generated by degrees 1 and 2 within the bounds.
pub fn k2_test<F: Field>(alg: &GradedAlgebra<F>, nmax: usize, bound: usize) -> Result<K2Verdict> {
    Ok(Cobar::auto(alg, nmax, bound)?.k2_verdict())
}

/// `Ext` of a homogeneous quotient against `Ext` of its associated monomial
/// algebra.
#[derive(Clone, Debug)]
pub struct LambdaDimCheck<E> {
    pub holds: bool,
    pub algebra: ExtTable<E>,
    pub graded: ExtTable<E>,
    /// Bidegrees where the quotient has strictly smaller `Ext`.
    pub strict: Vec<(usize, usize)>,
    /// Bidegrees violating the inequality.
    pub violations: Vec<(usize, usize)>,
}

/// Checks `dim Ext^{n,j}(A) <= dim Ext^{n,j}(gr A)` for `n <= nmax`,
/// `j <= bound`.
pub fn lambda_dim_check<F: Field>(
    p: &Presentation<F>,
    nmax: usize,
    bound: usize,
) -> Result<LambdaDimCheck<F::Elem>> {
    if !p.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let p = p.with_bound(bound.max(p.max_relation_degree()))?;
    let alg = GradedAlgebra::from_presentation(&p);
    let gr = GradedAlgebra::monomial(p.field().clone(), alg.normal_algebra().clone());
    let algebra = Cobar::new(&alg, Grading::ByDegree, nmax, bound)?.table();
    let graded = Cobar::new(&gr, Grading::ByWord, nmax, bound)?.table();
    let mut strict = Vec::new();
    let mut violations = Vec::new();
    for n in 0..=nmax {
        for j in 0..=bound {
            let (a, b) = (algebra.dim(n, j), graded.dim(n, j));
            if a > b {
                violations.push((n, j));
            } else if a < b {
                strict.push((n, j));
            }
        }
    }
    Ok(LambdaDimCheck {
        holds: violations.is_empty(),
        algebra,
        graded,
        strict,
        violations,
    })
}

/// Outcome for one class of the associated monomial algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassLift {
    pub word: Word,
    /// Index of the class within its word block.
    pub index: usize,
    pub lifted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub n: usize,
    pub bound: usize,
    pub classes: Vec<ClassLift>,
    /// `(word, classes at the word, dimension of the lifted image)`.
    pub images: Vec<(Word, usize, usize)>,
    /// Exact when the presentation is homogeneous.
    pub exact: bool,
    pub caveats: Vec<String>,
}

impl LiftReport {
    pub fn all_lifted(&self) -> bool {
        self.classes.iter().all(|c| c.lifted)
    }

    pub fn image_dim(&self) -> usize {
        self.images.iter().map(|(_, _, d)| d).sum()
    }
}

/// For each class of `gr A` at `(n, α)` with `|α| <= bound`, looks for a
/// cochain on the `n`-chains of `A` of degree `<= bound` that vanishes below
/// `α`, is annihilated by `d` on all `(n+1)`-chains of degree `<= bound`, and
/// restricts to the class at `α`.
///
/// Columns of the system are the coboundaries of the chain indicators.
/// Processing words in descending order, the columns above `α` span an
/// echelon; a class lifts exactly when its combined column at `α` reduces
/// to zero against it.
pub fn lambda_surjectivity_evidence<F: Field>(
    p: &Presentation<F>,
    n: usize,
    bound: usize,
) -> Result<LiftReport> {
    if n == 0 {
        return Err(Error::Truncation("lift evidence starts at n = 1".into()));
    }
    let p = p.with_bound(bound.max(p.max_relation_degree()))?;
    let g = complete(&p);
    let mut caveats = Vec::new();
    let top = bound.min(g.complete_below());
    if top < bound {
        caveats.push(format!(
            "basis certified only through degree {top}; lifting checked through {top}"
        ));
    }
    let exact = p.is_homogeneous();
    if !exact {
        caveats.push(format!(
            "inhomogeneous presentation: constraints truncated at degree {top}"
        ));
    }
    let alg = GradedAlgebra::quotient(g);
    let field = alg.field().clone();
    let gr_alg = GradedAlgebra::monomial(field.clone(), alg.normal_algebra().with_bound(top));
    let gr = Cobar::new(&gr_alg, Grading::ByWord, n, top)?;

    let words = words_by_degree(&alg, top);
    let all_chains = |m: usize| -> Vec<Vec<Word>> {
        let mut out = Vec::new();
        for j in m..=top {
            degree_tuples(&words, m, j, &mut Vec::new(), &mut out);
        }
        out
    };
    let cn = ChainBasis::from_tuples(n, BlockKey::Degree(top), all_chains(n));
    let cn1 = all_chains(n + 1);
    // column of chain t: coefficients of t in d(s) over (n+1)-chains s
    let mut columns: Vec<SparseVec<F::Elem>> = vec![Vec::new(); cn.len()];
    let mut cache = HashMap::new();
    for (si, s) in cn1.iter().enumerate() {
        for (t, x) in differential_row(&alg, s, &cn, &mut cache) {
            columns[t].push((si, x));
        }
    }

    let mut by_word: BTreeMap<Word, Vec<usize>> = BTreeMap::new();
    for (i, t) in cn.tuples().iter().enumerate() {
        let BlockKey::Word(w) = BlockKey::of_tuple(Grading::ByWord, t) else { unreachable!() };
        by_word.entry(w).or_default().push(i);
    }

    let mut above = Echelon::new(field.clone(), cn1.len());
    let mut ws = above.workspace();
    let mut classes = Vec::new();
    let mut images = Vec::new();
    for (alpha, members) in by_word.iter().rev() {
        let key = BlockKey::Word(alpha.clone());
        if let Some(level) = gr.blocks.get(&key).map(|b| &b.levels[n]) {
            if level.dim() > 0 {
                let mut rems = Echelon::new(field.clone(), cn1.len());
                for (q, rep) in level.reps.iter().enumerate() {
                    let mut v = Vec::new();
                    for &i in members {
                        let gi = level
                            .basis
                            .position(&cn.tuples()[i])
                            .expect("chains over α coincide with the monomial block");
                        if !field.is_zero(&rep[gi]) {
                            v.extend(columns[i].iter().map(|(s, x)| (*s, field.mul(x, &rep[gi]))));
                        }
                    }
                    let r = above.reduce_with(&crate::linalg::normalize(&field, v), &mut ws);
                    classes.push(ClassLift {
                        word: alpha.clone(),
                        index: q,
                        lifted: r.is_empty(),
                    });
                    rems.insert(&r);
                }
                images.push((alpha.clone(), level.dim(), level.dim() - rems.rank()));
            }
        }
        for &i in members {
            if !columns[i].is_empty() {
                let col = crate::linalg::normalize(&field, columns[i].clone());
                above.insert_with(&col, &mut ws);
            }
        }
    }
    classes.sort_by(|a, b| (&a.word, a.index).cmp(&(&b.word, b.index)));
    images.sort();
    Ok(LiftReport {
        n,
        bound: top,
        classes,
        images,
        exact,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::groebner::ideal_dims;

    fn mono(vars: &[&str], gens: &[&str], d: usize) -> GradedAlgebra<PrimeField> {
        GradedAlgebra::monomial(PrimeField::default(), MonomialAlgebra::from_strs(vars, gens, d).unwrap())
    }

    fn quot(vars: &[&str], rels: &[&str], d: usize) -> GradedAlgebra<PrimeField> {
        let p = Presentation::from_strs(PrimeField::default(), vars, rels, Some(d)).unwrap();
        GradedAlgebra::from_presentation(&p)
    }

    fn nonzero(t: &ExtTable<u32>) -> Vec<((usize, usize), usize)> {
        t.nonzero()
    }

    /// Homology dimensions from dense ranks of every differential block.
    fn brute_dims(alg: &GradedAlgebra<PrimeField>, nmax: usize, d: usize) -> BTreeMap<(usize, usize), usize> {
        let f = alg.field();
        let mut out = BTreeMap::new();
        for j in 0..=d {
            let size = |n: usize| chain_basis(alg, n, &BlockKey::Degree(j)).len();
            let rank = |n: usize| {
                if n == 0 {
                    0
                } else {
                    chain_differential(alg, n, j).unwrap().rank(f)
                }
            };
            for n in 0..=nmax {
                let h = size(n) - rank(n) - rank(n + 1);
                if h > 0 {
                    out.insert((n, j), h);
                }
            }
        }
        out
    }

    const B: [&str; 3] = ["x^2*y", "y*z^2", "x^3*z"];

    #[test]
    fn differential_examples() {
        let a = mono(&["x"], &["x^2"], 4);
        let d = chain_differential(&a, 2, 2).unwrap();
        assert_eq!(d.source.len(), 1);
        assert!(d.is_zero());
        let free = GradedAlgebra::monomial(
            PrimeField::default(),
            MonomialAlgebra::free(VariableSet::new(["x"]).unwrap(), 4),
        );
        let d = chain_differential(&free, 2, 2).unwrap();
        assert_eq!(d.rank(free.field()), 1);
        assert_eq!(d.rows[0], vec![(0, PrimeField::default().from_i64(-1))]);
    }

    fn assert_dd_zero(alg: &GradedAlgebra<PrimeField>, nmax: usize, d: usize) {
        let f = alg.field();
        for j in 0..=d {
            for n in 2..=nmax {
                let hi = chain_differential(alg, n, j).unwrap();
                let lo = chain_differential(alg, n - 1, j).unwrap();
                for row in &hi.rows {
                    let mut acc = Vec::new();
                    for (s, x) in row {
                        acc.extend(lo.rows[*s].iter().map(|(c, y)| (*c, f.mul(x, y))));
                    }
                    assert!(crate::linalg::normalize(f, acc).is_empty(), "d∘d ≠ 0 at ({n}, {j})");
                }
            }
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        assert_dd_zero(&mono(&["x", "y", "z"], &B, 6), 4, 6);
        assert_dd_zero(&quot(&["x", "y"], &["y*x - x*y", "y^3 + x^2*y"], 6), 4, 6);
    }

    #[test]
    fn resolution_dims_of_monomial_example() {
        let b = mono(&["x", "y", "z"], &B, 6);
        let expect = vec![((0, 0), 1), ((1, 1), 3), ((2, 3), 2), ((2, 4), 1), ((3, 5), 1)];
        assert_eq!(nonzero(&Cobar::new(&b, Grading::ByWord, 4, 6).unwrap().table()), expect);
        assert_eq!(nonzero(&Cobar::new(&b, Grading::ByDegree, 4, 6).unwrap().table()), expect);
    }

    #[test]
    fn gradings_agree_with_brute_force() {
        for (vars, gens) in [
            (vec!["x"], vec!["x^2"]),
            (vec!["x", "y"], vec!["y*x", "y^3"]),
            (vec!["x", "y"], vec!["x*y", "y*x", "x^3", "y^3"]),
            (vec!["x", "y"], vec!["x*y*x", "y^2"]),
        ] {
            let a = mono(&vars, &gens, 6);
            let brute = brute_dims(&a, 4, 6);
            for g in [Grading::ByWord, Grading::ByDegree] {
                let t = Cobar::new(&a, g, 4, 6).unwrap().table();
                let got: BTreeMap<_, _> = t.nonzero().into_iter().collect();
                assert_eq!(got, brute, "{gens:?} {g:?}");
            }
        }
    }

    #[test]
    fn dual_numbers_have_one_class_per_diagonal_degree() {
        let a = mono(&["x"], &["x^2"], 6);
        let t = ext_dims(&a, 5, 6).unwrap();
        let expect: Vec<_> = (0..=5).map(|n| ((n, n), 1)).collect();
        assert_eq!(t.nonzero(), expect);
        assert_eq!(brute_dims(&a, 5, 6), expect.into_iter().collect());
    }

    #[test]
    fn two_generator_monomial_dims() {
        let t = ext_dims(&mono(&["x", "y"], &["y*x", "y^3"], 6), 3, 6).unwrap();
        assert_eq!(t.dim(1, 1), 2);
        assert_eq!(t.dim(2, 2), 1);
        assert_eq!(t.dim(2, 3), 1);
        assert_eq!(t.total(2), 2);
    }

    #[test]
    fn degree_one_classes_count_generators() {
        for a in [mono(&["x", "y", "z"], &B, 5), quot(&["x", "y"], &["y*x - x*y", "x^2"], 5)] {
            let t = ext_dims(&a, 2, 5).unwrap();
            assert_eq!(t.dim(1, 1), a.vars().len());
            assert_eq!(t.total(1), a.vars().len());
            for n in 0..=2 {
                for j in 0..n {
                    assert_eq!(t.dim(n, j), 0);
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_per_degree() {
        let a = quot(&["x", "y"], &["x*y - x^2", "y*x", "y^3"], 6);
        let t = ext_dims(&a, 6, 6).unwrap();
        for j in 0..=6 {
            let mut chains = 0i64;
            for n in 0..=6 {
                let s = chain_basis(&a, n, &BlockKey::Degree(j)).len() as i64;
                chains += if n % 2 == 0 { s } else { -s };
            }
            assert_eq!(chains, t.euler_series()[j], "degree {j}");
        }
    }

    #[test]
    fn second_ext_matches_essential_count() {
        let rels = ["x*y - x^2", "y*x", "y^3"];
        let p = Presentation::from_strs(PrimeField::default(), &["x", "y"], &rels, Some(6)).unwrap();
        let t = ext_dims(&GradedAlgebra::from_presentation(&p), 2, 6).unwrap();
        for row in ideal_dims(&p).unwrap() {
            assert_eq!(t.dim(2, row.degree), row.essential(), "degree {}", row.degree);
        }
    }

    #[test]
    fn hilbert_euler_product_is_one() {
        for a in [mono(&["x", "y", "z"], &B, 6), mono(&["x", "y"], &["y*x", "y^3"], 7)] {
            let d = a.bound();
            let t = ext_dims(&a, d, d).unwrap();
            let h = grassoc::hilbert_coeffs(a.normal_algebra());
            let prod = hilbert_euler_product(&h, &t.euler_series());
            assert_eq!(prod[0], 1);
            assert!(prod[1..].iter().all(|c| *c == 0), "{prod:?}");
        }
    }

    #[test]
    fn cup_products() {
        let a = mono(&["x"], &["x^2"], 4);
        let c = Cobar::auto(&a, 3, 4).unwrap();
        let e1 = c.classes(1, 1);
        assert_eq!(e1.len(), 1);
        let sq = c.cup(&e1[0], &e1[0]).unwrap();
        assert_eq!((sq.n, sq.degree), (2, 2));
        let coords = c.class_coordinates(&sq).unwrap();
        assert!(coords.iter().any(|x| *x != 0));

        let unit = Cochain::unit(a.field());
        assert_eq!(c.cup(&e1[0], &unit).unwrap(), e1[0]);
        assert_eq!(c.cup(&unit, &e1[0]).unwrap(), e1[0]);
    }

    #[test]
    fn cup_with_coboundary_is_trivial_in_cohomology() {
        let f = PrimeField::default();
        let a = mono(&["x", "y"], &["y*x", "y^3"], 6);
        let c = Cobar::auto(&a, 3, 6).unwrap();
        let v = a.vars().clone();
        let w = |s: &str| v.word(s).unwrap();
        // coboundary of the indicator of x^2: g(a ⊗ b) = [ab = x^2]
        let cob = Cochain {
            n: 2,
            degree: 2,
            values: BTreeMap::from([(vec![w("x"), w("x")], f.from_i64(-1))]),
        };
        assert!(c.is_cocycle(&cob).unwrap());
        assert!(c.class_coordinates(&cob).unwrap().iter().all(|x| *x == 0));
        for e in c.classes(1, 1) {
            let prod = c.cup(&e, &cob).unwrap();
            assert!(c.class_coordinates(&prod).unwrap().iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn cup_rejects_non_cocycles() {
        let a = mono(&["x", "y"], &["y*x"], 4);
        let c = Cobar::auto(&a, 2, 4).unwrap();
        let w = |s: &str| a.vars().word(s).unwrap();
        let bad = Cochain {
            n: 1,
            degree: 2,
            values: BTreeMap::from([(vec![w("x^2")], 1u32)]),
        };
        assert!(!c.is_cocycle(&bad).unwrap());
        assert!(matches!(c.cup(&bad, &bad), Err(Error::NotCocycle(_))));
    }

    #[test]
    fn k2_examples() {
        let b = mono(&["x", "y", "z"], &B, 6);
        match k2_test(&b, 4, 6).unwrap() {
            K2Verdict::CertifiedNotK2 { witness, .. } => {
                assert_eq!((witness.n, witness.degree, witness.ext_dim, witness.generated_dim), (3, 5, 1, 0));
            }
            v => panic!("{v:?}"),
        }
        let gr = mono(&["x", "y"], &["x*y", "y*x", "x^3", "y^3"], 8);
        assert_eq!(k2_test(&gr, 4, 8).unwrap(), K2Verdict::EvidenceK2UpTo { nmax: 4, bound: 8 });
        let koszul = mono(&["x", "y"], &["y*x"], 6);
        assert!(!k2_test(&koszul, 4, 6).unwrap().is_certified_not_k2());
    }

    #[test]
    fn k2_on_degree_grading_matches_word_grading() {
        let b = mono(&["x", "y", "z"], &B, 6);
        let by_word = Cobar::new(&b, Grading::ByWord, 4, 6).unwrap();
        let by_degree = Cobar::new(&b, Grading::ByDegree, 4, 6).unwrap();
        assert_eq!(by_word.generated_dims(), by_degree.generated_dims());
        assert_eq!(by_word.k2_verdict(), by_degree.k2_verdict());
    }

    #[test]
    fn lambda_dimension_examples() {
        let p = Presentation::from_strs(PrimeField::default(), &["x", "y"], &["x*y - x^2", "y*x", "y^3"], Some(6)).unwrap();
        let c = lambda_dim_check(&p, 3, 6).unwrap();
        assert!(c.holds);
        assert!(c.strict.contains(&(2, 3)));
        assert_eq!((c.algebra.dim(2, 3), c.graded.dim(2, 3)), (1, 2));

        let p = Presentation::from_strs(PrimeField::default(), &["x", "y"], &["y*x", "y^3"], Some(6)).unwrap();
        let c = lambda_dim_check(&p, 3, 6).unwrap();
        assert!(c.holds && c.strict.is_empty());
    }

    #[test]
    fn lift_examples() {
        let f = PrimeField::default();
        let p = Presentation::from_strs(f, &["x", "y"], &["y*x - x*y", "y^3 + x^2*y"], Some(8)).unwrap();
        let r = lambda_surjectivity_evidence(&p, 2, 8).unwrap();
        assert!(r.exact);
        assert_eq!(r.classes.len(), 2);
        assert!(r.all_lifted());

        let p = Presentation::from_strs(f, &["x", "y"], &["x*y - x^2", "y*x", "y^3"], Some(6)).unwrap();
        let r = lambda_surjectivity_evidence(&p, 2, 6).unwrap();
        assert_eq!(r.classes.len(), 4);
        assert!(!r.all_lifted());
        assert_eq!(r.image_dim(), 3);

        let p = Presentation::from_strs(f, &["x", "y"], &["y*x - x*y", "x^3 - y^2"], Some(8)).unwrap();
        for n in [1, 2] {
            let r = lambda_surjectivity_evidence(&p, n, 8).unwrap();
            assert!(!r.exact);
            assert_eq!(r.classes.len(), 2);
            assert!(r.all_lifted(), "n = {n}: {r:?}");
        }
    }
}
