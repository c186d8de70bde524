//! Simplicial complexes and their anticommutative face rings.
//!
//! Faces are bitmasks over vertex indices. An ordering lists vertex indices
//! from smallest to largest; the face ring presentation names its variables
//! in that order.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::freealg::{Polynomial, VariableSet, Word};
use crate::groebner::Presentation;

/// Default largest vertex count for exhaustive ordering search.
pub const DEFAULT_SEARCH_CAP: usize = 8;

type Face = u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    faces: BTreeSet<Face>,
}

fn mask_of(vertices: &[String], names: &[String]) -> Result<Face> {
    let mut m = 0;
    for n in names {
        let i = vertices
            .iter()
            .position(|v| v == n)
            .ok_or_else(|| Error::Complex(format!("unknown vertex `{n}`")))?;
        m |= 1 << i;
    }
    Ok(m)
}

fn subsets(m: Face) -> impl Iterator<Item = Face> {
    // all submasks of m, including 0 and m
    let mut s = Some(m);
    std::iter::from_fn(move || {
        let cur = s?;
        s = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

impl SimplicialComplex {
    fn check_vertices(vertices: &[String]) -> Result<()> {
        if vertices.is_empty() || vertices.len() > 63 {
            return Err(Error::Complex("need between 1 and 63 vertices".into()));
        }
        if vertices.iter().duplicates().next().is_some() {
            return Err(Error::Complex("duplicate vertex names".into()));
        }
        Ok(())
    }

    /// Explicit face list; must be downward closed and contain every vertex.
    pub fn from_faces(vertices: Vec<String>, faces: &[Vec<String>]) -> Result<Self> {
        Self::check_vertices(&vertices)?;
        let mut set = BTreeSet::from([0]);
        for f in faces {
            set.insert(mask_of(&vertices, f)?);
        }
        for &f in &set {
            for v in 0..vertices.len() {
                let sub = f & !(1 << v);
                if sub != f && !set.contains(&sub) {
                    return Err(Error::Complex("face list is not downward closed".into()));
                }
            }
        }
        for v in 0..vertices.len() {
            if !set.contains(&(1 << v)) {
                return Err(Error::Complex(format!("vertex `{}` is not a face", vertices[v])));
            }
        }
        Ok(Self { vertices, faces: set })
    }

    /// Downward closure of the facets; every vertex is a face.
    pub fn from_facets(vertices: Vec<String>, facets: &[Vec<String>]) -> Result<Self> {
        Self::check_vertices(&vertices)?;
        let mut set = BTreeSet::new();
        for v in 0..vertices.len() {
            set.insert(1 << v);
            set.insert(0);
        }
        for f in facets {
            set.extend(subsets(mask_of(&vertices, f)?));
        }
        Ok(Self { vertices, faces: set })
    }

    /// All vertex sets containing none of the given missing sets.
    pub fn from_missing(vertices: Vec<String>, missing: &[Vec<String>]) -> Result<Self> {
        Self::check_vertices(&vertices)?;
        let masks = missing
            .iter()
            .map(|m| mask_of(&vertices, m))
            .collect::<Result<Vec<_>>>()?;
        if let Some(m) = masks.iter().find(|m| m.count_ones() < 2) {
            return Err(Error::Complex(format!(
                "missing set of size {} would remove a vertex",
                m.count_ones()
            )));
        }
        if vertices.len() > 24 {
            return Err(Error::Complex("missing-face input supports at most 24 vertices".into()));
        }
        let all: Face = (1 << vertices.len()) - 1;
        let faces = subsets(all).filter(|f| masks.iter().all(|m| f & m != *m)).collect();
        Ok(Self { vertices, faces })
    }

    /// The boundary of the full simplex on `n` vertices `x1..xn`.
    pub fn simplex_boundary(n: usize) -> Result<Self> {
        let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::from_missing(vertices.clone(), &[vertices])
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.faces.contains(&face.iter().fold(0, |m, v| m | (1 << v)))
    }

    fn has(&self, m: Face) -> bool {
        self.faces.contains(&m)
    }

    /// Faces as sorted vertex-index lists.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces.iter().map(|&m| indices(m)).collect()
    }

    /// Number of faces of each cardinality `0..=|vertices|`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.vertices.len() + 1];
        for f in &self.faces {
            c[f.count_ones() as usize] += 1;
        }
        c
    }

    fn missing_masks(&self) -> Vec<Face> {
        let n = self.vertices.len();
        let mut out = BTreeSet::new();
        for &f in &self.faces {
            for v in 0..n {
                let y = f | (1 << v);
                if y != f && !self.has(y) && (0..n).all(|w| y & (1 << w) == 0 || self.has(y & !(1 << w))) {
                    out.insert(y);
                }
            }
        }
        let mut v: Vec<Face> = out.into_iter().collect();
        v.sort_by_key(|m| (m.count_ones(), indices(*m)));
        v
    }

    pub fn minimally_missing_faces(&self) -> Vec<MissingFace> {
        self.missing_masks().into_iter().map(|m| MissingFace(indices(m))).collect()
    }

    pub fn display_face(&self, face: &[usize]) -> String {
        format!("{{{}}}", face.iter().map(|&v| self.vertices[v].as_str()).join(", "))
    }
}

fn indices(m: Face) -> Vec<usize> {
    (0..64).filter(|i| m & (1 << i) != 0).collect()
}

/// A non-face all of whose proper subsets are faces, as sorted vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingFace(pub Vec<usize>);

/// Vertex indices from smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(order: Vec<usize>, vertex_count: usize) -> Result<Self> {
        let mut seen = vec![false; vertex_count];
        if order.len() != vertex_count {
            return Err(Error::Ordering(format!(
                "expected {vertex_count} vertices, got {}",
                order.len()
            )));
        }
        for &v in &order {
            if v >= vertex_count || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Ordering("not a permutation of the vertices".into()));
            }
        }
        Ok(Self(order))
    }

    pub fn identity(vertex_count: usize) -> Self {
        Self((0..vertex_count).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    fn ranks(&self) -> Vec<usize> {
        let mut r = vec![0; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            r[v] = k;
        }
        r
    }

    pub fn names<'a>(&self, c: &'a SimplicialComplex) -> Vec<&'a str> {
        self.0.iter().map(|&v| c.vertices()[v].as_str()).collect()
    }
}

/// A missing face `Y` and a vertex `u` strictly between its extremes such
/// that both `Y - min ∪ u` and `Y - max ∪ u` are faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingWitness {
    pub missing: Vec<usize>,
    pub vertex: usize,
}

fn check_order(c: &SimplicialComplex, missing: &[Face], ranks: &[usize]) -> Option<OrderingWitness> {
    for &y in missing {
        let members = indices(y);
        let lo = *members.iter().min_by_key(|&&v| ranks[v]).expect("nonempty");
        let hi = *members.iter().max_by_key(|&&v| ranks[v]).expect("nonempty");
        for u in 0..c.len() {
            if y & (1 << u) != 0 || ranks[u] <= ranks[lo] || ranks[u] >= ranks[hi] {
                continue;
            }
            let drop_lo = (y & !(1 << lo)) | (1 << u);
            let drop_hi = (y & !(1 << hi)) | (1 << u);
            if c.has(drop_lo) && c.has(drop_hi) {
                return Some(OrderingWitness {
                    missing: members,
                    vertex: u,
                });
            }
        }
    }
    None
}

/// Whether every minimally missing face passes the betweenness condition
/// under `ordering`; otherwise the first failing pair.
pub fn betweenness_check(
    c: &SimplicialComplex,
    ordering: &VertexOrdering,
) -> Result<(bool, Option<OrderingWitness>)> {
    if ordering.0.len() != c.len() {
        return Err(Error::Ordering("ordering does not match the vertex count".into()));
    }
    let w = check_order(c, &c.missing_masks(), &ordering.ranks());
    Ok((w.is_none(), w))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingSearch {
    pub ordering: Option<VertexOrdering>,
    /// Number of orderings examined.
    pub checks: usize,
}

/// First ordering in lexicographic permutation order passing
/// [`betweenness_check`].
pub fn find_good_ordering(c: &SimplicialComplex, cap: usize) -> Result<OrderingSearch> {
    if c.len() > cap {
        return Err(Error::CapExceeded {
            count: c.len(),
            cap,
        });
    }
    let missing = c.missing_masks();
    let mut checks = 0;
    for perm in (0..c.len()).permutations(c.len()) {
        checks += 1;
        let ord = VertexOrdering(perm);
        if check_order(c, &missing, &ord.ranks()).is_none() {
            return Ok(OrderingSearch {
                ordering: Some(ord),
                checks,
            });
        }
    }
    Ok(OrderingSearch {
        ordering: None,
        checks,
    })
}

/// Presentation of the anticommutative face ring with variables named by the
/// vertices in `ordering`: anticommutators, squares, and the ascending product
/// of each minimally missing face.
pub fn face_algebra_presentation<F: Field>(
    field: F,
    c: &SimplicialComplex,
    ordering: &VertexOrdering,
    bound: Option<usize>,
) -> Result<Presentation<F>> {
    if ordering.0.len() != c.len() {
        return Err(Error::Ordering("ordering does not match the vertex count".into()));
    }
    let vars = VariableSet::new(ordering.names(c))?;
    let ranks = ordering.ranks();
    let n = c.len() as u8;
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let terms = vec![
                (Word::new(vec![j, i]), field.one()),
                (Word::new(vec![i, j]), field.one()),
            ];
            rels.push(Polynomial::from_terms(&field, terms));
        }
    }
    for i in 0..n {
        rels.push(Polynomial::word(&field, Word::new(vec![i, i])));
    }
    for MissingFace(y) in c.minimally_missing_faces() {
        let mut letters: Vec<u8> = y.iter().map(|&v| ranks[v] as u8).collect();
        letters.sort();
        rels.push(Polynomial::word(&field, Word::new(letters)));
    }
    Presentation::new(field, vars, rels, bound)
}
