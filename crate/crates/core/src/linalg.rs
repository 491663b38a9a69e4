//! Sparse exact linear algebra: incremental row echelon forms with
//! optional tracking of how each pivot row was built.

use std::collections::BTreeMap;

use crate::field::Field;

/// Sparse vector as `(index, value)` pairs, strictly increasing index, no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a + c·b` on sparse vectors.
pub fn axpy<F: Field>(field: &F, a: &SparseVec<F::Elem>, c: &F::Elem, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|t| t.0).unwrap_or(usize::MAX);
        let bj = b.get(j).map(|t| t.0).unwrap_or(usize::MAX);
        if ai < bj {
            out.push(a[i].clone());
            i += 1;
        } else if bj < ai {
            out.push((bj, field.mul(c, &b[j].1)));
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(c, &b[j].1));
            if !field.is_zero(&v) {
                out.push((ai, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_scale<F: Field>(field: &F, a: &SparseVec<F::Elem>, c: &F::Elem) -> SparseVec<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, field.mul(v, c))).collect()
}

pub fn to_dense<F: Field>(field: &F, a: &SparseVec<F::Elem>, len: usize) -> Vec<F::Elem> {
    let mut d = vec![field.zero(); len];
    for (i, v) in a {
        d[*i] = v.clone();
    }
    d
}

pub fn from_dense<F: Field>(field: &F, a: &[F::Elem]) -> SparseVec<F::Elem> {
    a.iter().enumerate().filter(|(_, v)| !field.is_zero(v)).map(|(i, v)| (i, v.clone())).collect()
}

struct Pivot<E> {
    row: SparseVec<E>,
    combo: SparseVec<E>,
}

/// Echelon form of the span of inserted vectors, keyed by the largest index
/// of each pivot row. Each pivot remembers its expression in the inserted
/// vectors, so membership queries can return coordinates.
pub struct Span<F: Field> {
    field: F,
    pivots: BTreeMap<usize, Pivot<F::Elem>>,
    inserted: usize,
    track: bool,
}

impl<F: Field> Span<F> {
    pub fn new(field: &F, track: bool) -> Self {
        Span { field: field.clone(), pivots: BTreeMap::new(), inserted: 0, track }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Number of vectors inserted so far (dependent ones included).
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduce `v` against the pivots; returns residue and the combination used.
    fn reduce(&self, mut v: SparseVec<F::Elem>, mut combo: SparseVec<F::Elem>) -> (SparseVec<F::Elem>, SparseVec<F::Elem>) {
        let f = &self.field;
        // pivot rows only touch indices at or below their own pivot, so hits strictly decrease
        let mut bound = usize::MAX;
        loop {
            let hit = v
                .iter()
                .rev()
                .filter(|t| t.0 < bound)
                .find(|t| self.pivots.contains_key(&t.0))
                .map(|t| (t.0, f.neg(&t.1)));
            let (idx, c) = match hit {
                Some(h) => h,
                None => break,
            };
            let p = &self.pivots[&idx];
            v = axpy(f, &v, &c, &p.row);
            if self.track {
                combo = axpy(f, &combo, &c, &p.combo);
            }
            bound = idx;
        }
        (v, combo)
    }

    /// Insert `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let f = self.field.clone();
        let id = self.inserted;
        self.inserted += 1;
        let combo = if self.track { vec![(id, f.one())] } else { Vec::new() };
        let (row, combo) = self.reduce(v, combo);
        match row.last() {
            None => false,
            Some((lead, lc)) => {
                let inv = f.inv(lc).expect("nonzero pivot");
                let lead = *lead;
                let row = sparse_scale(&f, &row, &inv);
                let combo = sparse_scale(&f, &combo, &inv);
                self.pivots.insert(lead, Pivot { row, combo });
                true
            }
        }
    }

    /// Coordinates of `v` in the inserted vectors, if it lies in the span.
    ///
    /// When the inserted vectors are independent the answer is unique.
    pub fn express(&self, v: &SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        assert!(self.track, "span built without combination tracking");
        let f = &self.field;
        let (res, combo) = self.reduce(v.clone(), Vec::new());
        if res.is_empty() {
            Some(sparse_scale(f, &combo, &f.from_i64(-1)))
        } else {
            None
        }
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(v.clone(), Vec::new()).0.is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<F: Field>(field: &F, rows: impl IntoIterator<Item = SparseVec<F::Elem>>) -> usize {
    let mut s = Span::new(field, false);
    for r in rows {
        s.insert(r);
    }
    s.rank()
}

/// Dense square matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    pub field: F,
    pub dim: usize,
    pub entries: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, dim: usize) -> Self {
        Matrix { field: field.clone(), dim, entries: vec![field.zero(); dim * dim] }
    }

    pub fn identity(field: &F, dim: usize) -> Self {
        let mut m = Self::zeros(field, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = field.one();
        }
        m
    }

    /// Build from columns given as sparse vectors (column `j` = image of basis vector `j`).
    pub fn from_columns(field: &F, dim: usize, cols: &[SparseVec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, dim);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col {
                m.entries[i * dim + j] = v.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let d = self.dim;
        let mut out = Self::zeros(f, d);
        for i in 0..d {
            for l in 0..d {
                let a = &self.entries[i * d + l];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[l * d + j];
                    if !f.is_zero(b) {
                        let cur = &out.entries[i * d + j];
                        out.entries[i * d + j] = f.add(cur, &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Matrix { field: f.clone(), dim: self.dim, entries: self.entries.iter().map(|a| f.neg(a)).collect() }
    }

    /// `P⁻¹ M P` for the permutation matrix `P` sending basis `j` to `perm[j]`,
    /// i.e. the entry `(i, j)` of the result is `M[perm[i], perm[j]]`.
    pub fn conjugate_by(&self, perm: &[usize]) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(&self.field, d);
        for i in 0..d {
            for j in 0..d {
                out.entries[i * d + j] = self.entries[perm[i] * d + perm[j]].clone();
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.dim)
            .map(|i| {
                serde_json::Value::Array(
                    (0..self.dim).map(|j| serde_json::Value::String(self.field.format(self.get(i, j)))).collect(),
                )
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_and_express() {
        let q = Rationals;
        let v = |a: &[i64]| from_dense(&q, &a.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>());
        let mut s = Span::new(&q, true);
        assert!(s.insert(v(&[1, 2, 0])));
        assert!(s.insert(v(&[0, 1, 1])));
        assert!(!s.insert(v(&[1, 3, 1])));
        assert_eq!(s.rank(), 2);
        let c = s.express(&v(&[2, 5, 1])).unwrap();
        // 2·(1,2,0) + 1·(0,1,1)
        assert_eq!(c, vec![(0, q.from_i64(2)), (1, q.from_i64(1))]);
        assert!(s.express(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn rank_mod_p_can_drop() {
        let p = PrimeField::new(3).unwrap();
        let rows = vec![vec![(0, 1u32), (1, 1)], vec![(0, 1), (1, 1 + 3 - 3)], vec![(0, 2), (1, 2)]];
        assert_eq!(rank(&p, rows), 1);
    }

    #[test]
    fn matrix_ops() {
        let q = Rationals;
        let m = Matrix::from_columns(&q, 2, &[vec![(1, q.one())], vec![]]);
        assert_eq!(m.mul(&m), Matrix::zeros(&q, 2));
        assert_eq!(m.conjugate_by(&[1, 0]).get(0, 1), &q.one());
    }
}
