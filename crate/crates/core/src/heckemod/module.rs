use serde_json::json;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, rank, Matrix, SparseVec};

/// A finite-dimensional `H_n(0)`-module given by the action of `π̄_1, …, π̄_{n−1}`
/// on a labeled basis. `gens[i-1][j]` is the image of basis vector `j` under `π̄_i`.
#[derive(Clone, Debug)]
pub struct FiniteHeckeModule<F: Field> {
    pub n: usize,
    pub field: F,
    pub labels: Vec<String>,
    pub gens: Vec<Vec<SparseVec<F::Elem>>>,
    pub degrees: Option<Vec<usize>>,
    pub generator_index: Option<usize>,
}

/// Outcome of comparing two modules along a basis bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismReport {
    pub pair: (String, String),
    pub ok: bool,
    pub first_failing_generator: Option<usize>,
}

impl IsomorphismReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "pair": [self.pair.0, self.pair.1],
            "ok": self.ok,
            "first_failing_generator": self.first_failing_generator,
        })
    }
}

impl<F: Field> FiniteHeckeModule<F> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `π̄_i · v`.
    pub fn apply(&self, i: usize, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let cols = &self.gens[i - 1];
        let mut out = Vec::new();
        for (j, c) in v {
            out = axpy(&self.field, &out, c, &cols[*j]);
        }
        out
    }

    fn apply_word(&self, word: &[usize], v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        word.iter().rev().fold(v.clone(), |acc, &i| self.apply(i, &acc))
    }

    pub fn matrix(&self, i: usize) -> Matrix<F> {
        Matrix::from_columns(&self.field, self.dim(), &self.gens[i - 1])
    }

    /// `M_i² = −M_i`, far commutation and braid relations, checked on every basis vector.
    pub fn check_relations(&self) -> bool {
        let f = &self.field;
        let m1 = f.from_i64(-1);
        let n = self.n;
        for j in 0..self.dim() {
            let e = vec![(j, f.one())];
            for i in 1..n {
                let a = self.apply_word(&[i, i], &e);
                if axpy(f, &a, &f.one(), &self.apply(i, &e)) != Vec::new() {
                    return false;
                }
                for l in i + 2..n {
                    let a = self.apply_word(&[i, l], &e);
                    let b = self.apply_word(&[l, i], &e);
                    if axpy(f, &a, &m1, &b) != Vec::new() {
                        return false;
                    }
                }
                if i + 1 < n {
                    let a = self.apply_word(&[i, i + 1, i], &e);
                    let b = self.apply_word(&[i + 1, i, i + 1], &e);
                    if a != b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every `π̄_i` maps each homogeneous basis vector into its own degree.
    pub fn check_grading(&self) -> bool {
        match &self.degrees {
            None => true,
            Some(d) => self
                .gens
                .iter()
                .all(|cols| cols.iter().enumerate().all(|(j, col)| col.iter().all(|(r, _)| d[*r] == d[j]))),
        }
    }

    /// Copy with one entry of `π̄_i` perturbed, for negative controls.
    pub fn corrupted(&self, i: usize, j: usize) -> Self {
        let mut m = self.clone();
        let f = &self.field;
        m.gens[i - 1][j] = axpy(f, &m.gens[i - 1][j], &f.one(), &vec![(j, f.one())]);
        m
    }

    /// `dim Hom(M, C_γ)` where `π̄_i` acts on `C_γ` by `−1` for `i ∈ Des(γ)` and `0` otherwise.
    ///
    /// For a projective `M` this is the multiplicity of `P_γ` as a summand.
    pub fn hom_to_simple(&self, descents: &[usize]) -> usize {
        // f ∈ M* with f∘(M_i − λ_i) = 0 for all i; count = dim − rank of the stacked columns
        let f = &self.field;
        let d = self.dim();
        let mut cols = Vec::new();
        for i in 1..self.n {
            let lambda = if descents.contains(&i) { f.from_i64(-1) } else { f.zero() };
            for j in 0..d {
                let col = &self.gens[i - 1][j];
                cols.push(if f.is_zero(&lambda) { col.clone() } else { axpy(f, col, &f.neg(&lambda), &vec![(j, f.one())]) });
            }
        }
        d - rank(f, cols)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "field": self.field.tag(),
            "labels": self.labels,
            "matrices": (1..self.n).map(|i| self.matrix(i).to_json()).collect::<Vec<_>>(),
            "degrees": self.degrees,
            "generator_index": self.generator_index,
        })
    }
}

/// Compare `π̄_i` on `a` with `π̄_i` on `b` transported along `map`, where
/// basis vector `j` of `a` corresponds to basis vector `map[j]` of `b`.
pub fn check_isomorphism<F: Field>(
    a: &FiniteHeckeModule<F>,
    b: &FiniteHeckeModule<F>,
    map: &[usize],
) -> Result<IsomorphismReport> {
    if a.dim() != b.dim() || map.len() != a.dim() {
        return Err(Error::LengthMismatch { expected: a.dim(), got: b.dim().min(map.len()) });
    }
    if a.n != b.n {
        return Err(Error::LengthMismatch { expected: a.n, got: b.n });
    }
    let mut inv = vec![usize::MAX; map.len()];
    for (j, &t) in map.iter().enumerate() {
        if t >= map.len() || inv[t] != usize::MAX {
            return Err(Error::InvalidParameters("basis map is not a bijection".into()));
        }
        inv[t] = j;
    }
    let pair = (
        a.labels.first().cloned().unwrap_or_default(),
        b.labels.first().cloned().unwrap_or_default(),
    );
    for i in 1..a.n {
        for j in 0..a.dim() {
            let mut moved: SparseVec<F::Elem> =
                b.gens[i - 1][map[j]].iter().map(|(r, c)| (inv[*r], c.clone())).collect();
            moved.sort_by_key(|t| t.0);
            if moved != a.gens[i - 1][j] {
                return Ok(IsomorphismReport { pair, ok: false, first_failing_generator: Some(i) });
            }
        }
    }
    Ok(IsomorphismReport { pair, ok: true, first_failing_generator: None })
}

/// Bijection from labels of `a` to positions in `b`, matching labels through `key`.
pub fn label_map<F: Field>(
    a: &FiniteHeckeModule<F>,
    b: &FiniteHeckeModule<F>,
    key: impl Fn(&str) -> String,
) -> Result<Vec<usize>> {
    let index: std::collections::HashMap<&str, usize> =
        b.labels.iter().enumerate().map(|(j, l)| (l.as_str(), j)).collect();
    a.labels
        .iter()
        .map(|l| {
            let k = key(l);
            index
                .get(k.as_str())
                .copied()
                .ok_or_else(|| Error::InvalidParameters(format!("label {k} missing from target module")))
        })
        .collect()
}
