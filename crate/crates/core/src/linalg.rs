//! Sparse exact linear algebra: incremental row echelon forms.
//!
//! Rows are sparse vectors sorted by column. An [`Echelon`] keeps its rows in
//! semi-reduced form: every stored row is monic at its pivot (its smallest
//! column) and has no entries left of it, and pivots are pairwise distinct.
//! Reduction of a vector clears every pivot column, so the remainder is a
//! canonical representative modulo the row space.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::field::Field;

/// Sparse vector as `(column, value)` pairs, sorted by column, no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Scratch buffers for reductions against an [`Echelon`] with `ncols` columns.
pub struct Workspace<E> {
    acc: Vec<Option<E>>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl<E: Clone> Workspace<E> {
    pub fn new(ncols: usize) -> Self {
        Self {
            acc: vec![None; ncols],
            heap: BinaryHeap::new(),
        }
    }

    fn ensure(&mut self, ncols: usize) {
        if self.acc.len() < ncols {
            self.acc.resize(ncols, None);
        }
    }
}

#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Self {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Pivot columns in the order rows were added.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn row_with_pivot(&self, col: usize) -> Option<&SparseVec<F::Elem>> {
        self.pivot_row[col].map(|i| &self.rows[i])
    }

    pub fn workspace(&self) -> Workspace<F::Elem> {
        Workspace::new(self.ncols)
    }

    /// Remainder of `v` modulo the row space: zero in every pivot column.
    pub fn reduce_with(
        &self,
        v: &[(usize, F::Elem)],
        ws: &mut Workspace<F::Elem>,
    ) -> SparseVec<F::Elem> {
        let f = &self.field;
        ws.ensure(self.ncols);
        for (c, x) in v {
            debug_assert!(*c < self.ncols);
            match &mut ws.acc[*c] {
                Some(y) => *y = f.add(y, x),
                slot @ None => {
                    *slot = Some(x.clone());
                    ws.heap.push(Reverse(*c));
                }
            }
        }
        let mut out = Vec::new();
        while let Some(Reverse(c)) = ws.heap.pop() {
            let Some(x) = ws.acc[c].take() else { continue };
            if f.is_zero(&x) {
                continue;
            }
            match self.pivot_row[c] {
                Some(ri) => {
                    let row = &self.rows[ri];
                    for (rc, rx) in &row[1..] {
                        let delta = f.mul(&x, rx);
                        match &mut ws.acc[*rc] {
                            Some(y) => *y = f.sub(y, &delta),
                            slot @ None => {
                                *slot = Some(f.neg(&delta));
                                ws.heap.push(Reverse(*rc));
                            }
                        }
                    }
                }
                None => out.push((c, x)),
            }
        }
        out
    }

    pub fn reduce(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut ws = self.workspace();
        self.reduce_with(v, &mut ws)
    }

    /// Adds `v` to the row space. Returns the pivot column of the new row, or
    /// `None` when `v` already lies in the span.
    pub fn insert_with(
        &mut self,
        v: &[(usize, F::Elem)],
        ws: &mut Workspace<F::Elem>,
    ) -> Option<usize> {
        let mut r = self.reduce_with(v, ws);
        if r.is_empty() {
            return None;
        }
        let inv = self.field.inv(&r[0].1);
        for (_, x) in r.iter_mut() {
            *x = self.field.mul(x, &inv);
        }
        let pivot = r[0].0;
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(r);
        Some(pivot)
    }

    pub fn insert(&mut self, v: &[(usize, F::Elem)]) -> Option<usize> {
        let mut ws = self.workspace();
        self.insert_with(v, &mut ws)
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Covector with prescribed values on the non-pivot columns: the unique
    /// covector `g` with `g[c] = free[c]` on non-pivot columns (missing
    /// entries are zero) that vanishes on every row.
    pub fn annihilating_extension(&self, free: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut val: Vec<Option<F::Elem>> = vec![None; self.ncols];
        for (c, x) in free {
            debug_assert!(!self.is_pivot(*c));
            val[*c] = Some(x.clone());
        }
        // Rows only reach right of their pivot, so resolve pivots from the
        // rightmost one leftwards.
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| Reverse(self.rows[i][0].0));
        for i in order {
            let row = &self.rows[i];
            let mut s = f.zero();
            for (c, x) in &row[1..] {
                if let Some(v) = &val[*c] {
                    s = f.add(&s, &f.mul(x, v));
                }
            }
            if !f.is_zero(&s) {
                val[row[0].0] = Some(f.neg(&s));
            }
        }
        val.into_iter()
            .enumerate()
            .filter_map(|(c, v)| v.filter(|x| !f.is_zero(x)).map(|x| (c, x)))
            .collect()
    }
}

/// Rank of a list of sparse rows.
pub fn rank<F: Field>(field: &F, ncols: usize, rows: &[SparseVec<F::Elem>]) -> usize {
    let mut e = Echelon::new(field.clone(), ncols);
    let mut ws = e.workspace();
    for r in rows {
        e.insert_with(r, &mut ws);
    }
    e.rank()
}

/// Dot product of two sparse vectors.
pub fn dot<F: Field>(field: &F, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> F::Elem {
    let (mut i, mut j) = (0, 0);
    let mut s = field.zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s = field.add(&s, &field.mul(&a[i].1, &b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    s
}

/// Sorts, merges duplicate columns and drops zeros.
pub fn normalize<F: Field>(field: &F, mut v: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    v.sort_by_key(|(c, _)| *c);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx = field.add(lx, &x),
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !field.is_zero(x));
    out
}
