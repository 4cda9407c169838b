//! Exact row reduction: rank, kernel, linear solve.

use std::collections::BTreeMap;

use super::field::{Field, Scalar};
use super::sparse::{SparseMatrix, SparseVec};

/// Rank of a matrix together with a basis of its (right) kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    /// Pivot columns of the reduced row echelon form, increasing.
    pub pivots: Vec<usize>,
    /// One vector per free column `f`: `e_f − Σ rref[r][f]·e_{pivot(r)}`.
    /// Ordered by free column, so the basis is itself in reduced echelon
    /// form read from the last coordinate.
    pub kernel: Vec<SparseVec>,
}

/// Reduced row echelon form of the row space, held as pivot rows with
/// leading coefficient one.
struct Echelon {
    /// pivot column -> row (leading entry 1 at the key)
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    /// Reduces `v` against every existing pivot row. The result has a zero
    /// at every pivot column.
    fn reduce(&self, field: &Field, v: SparseVec) -> SparseVec {
        let mut cur: BTreeMap<usize, Scalar> = v.into_iter().collect();
        let mut cursor = 0usize;
        loop {
            let next = cur
                .range(cursor..)
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(c, a)| (*c, a.clone()));
            let Some((col, a)) = next else { break };
            for (k, p) in &self.rows[&col] {
                let t = field.mul(&a, p);
                let e = cur.entry(*k).or_default();
                *e -= &t;
                if e.is_zero() {
                    cur.remove(k);
                }
            }
            cursor = col + 1;
        }
        cur.into_iter().collect()
    }

    /// Inserts a row; returns whether it was independent.
    fn insert(&mut self, field: &Field, v: SparseVec) -> bool {
        let r = self.reduce(field, v);
        let Some((lead, a)) = r.first().cloned() else { return false };
        let inv = field.inv(&a).expect("nonzero field element is invertible");
        let row: SparseVec = r.into_iter().map(|(c, v)| (c, field.mul(&v, &inv))).collect();
        self.rows.insert(lead, row);
        true
    }

    /// Back-substitution: clears every pivot column in all other rows.
    fn into_rref(mut self, field: &Field) -> BTreeMap<usize, SparseVec> {
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for &p in &pivots {
            let prow = self.rows[&p].clone();
            for (&q, row) in self.rows.range_mut(..p) {
                debug_assert!(q < p);
                let Ok(k) = row.binary_search_by_key(&p, |(c, _)| *c) else { continue };
                let a = row[k].1.clone();
                let mut acc: BTreeMap<usize, Scalar> = std::mem::take(row).into_iter().collect();
                for (c, v) in &prow {
                    let t = field.mul(&a, v);
                    let e = acc.entry(*c).or_default();
                    *e -= &t;
                    if e.is_zero() {
                        acc.remove(c);
                    }
                }
                *row = acc.into_iter().collect();
            }
        }
        self.rows
    }
}

/// Exact rank.
pub fn rank(field: &Field, m: &SparseMatrix) -> usize {
    let mut ech = Echelon::new();
    m.row_vectors()
        .into_iter()
        .filter(|r| !r.is_empty())
        .filter(|r| ech.insert(field, r.clone()))
        .count()
}

/// Exact rank and kernel basis.
///
/// The reduced row echelon form is unique, so the pivot set and the kernel
/// basis depend only on the matrix, not on the order rows are processed.
pub fn rank_and_kernel(field: &Field, m: &SparseMatrix) -> RankKernel {
    let mut ech = Echelon::new();
    for r in m.row_vectors() {
        if !r.is_empty() {
            ech.insert(field, r);
        }
    }
    let rref = ech.into_rref(field);
    let pivots: Vec<usize> = rref.keys().copied().collect();
    let mut kernel = Vec::new();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for f in (0..m.cols()).filter(|&f| !is_pivot[f]) {
        let mut v: Vec<(usize, Scalar)> = Vec::new();
        for (&p, row) in &rref {
            if p > f {
                break;
            }
            if let Ok(k) = row.binary_search_by_key(&f, |(c, _)| *c) {
                v.push((p, -&row[k].1));
            }
        }
        v.push((f, Scalar::one()));
        kernel.push(v);
    }
    RankKernel { rank: pivots.len(), pivots, kernel }
}

/// Some solution `x` of `m·x = rhs`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(field: &Field, m: &SparseMatrix, rhs: &[(usize, Scalar)]) -> Option<SparseVec> {
    let n = m.cols();
    let mut rows = m.row_vectors();
    for (r, b) in rhs {
        rows[*r].push((n, b.clone()));
    }
    let mut ech = Echelon::new();
    for r in rows {
        if !r.is_empty() {
            ech.insert(field, r);
        }
    }
    if ech.rows.contains_key(&n) {
        return None;
    }
    let rref = ech.into_rref(field);
    let mut x = Vec::new();
    for (&p, row) in &rref {
        if let Some((c, v)) = row.last() {
            if *c == n {
                x.push((p, v.clone()));
            }
        }
    }
    Some(x)
}
