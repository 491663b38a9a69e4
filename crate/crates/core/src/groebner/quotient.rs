use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::basis::{buchberger, GroebnerBasis, Ideal};
use crate::combinatorics::QTPoly;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, SparseVec};
use crate::polyring::{Monomial, Polynomial};

/// `F[x]/I` for a zero-dimensional ideal, with coordinates in the standard
/// monomial basis.
pub struct QuotientRing<F: Field> {
    pub groebner: GroebnerBasis<F>,
    /// Standard monomials, ascending in neglex.
    pub standard: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `mult[j][s]`: coordinates of `x_{j+1} · standard[s]`.
    mult: Vec<Vec<SparseVec<F::Elem>>>,
}

impl<F: Field> QuotientRing<F> {
    pub fn new(ideal: &Ideal<F>) -> Result<Self> {
        Self::from_groebner(buchberger(ideal))
    }

    /// `S_{n,k}` over the given field.
    pub fn s_nk(field: &F, n: usize, k: usize) -> Result<Self> {
        Self::new(&Ideal::j_nk(field, n, k)?)
    }

    pub fn from_groebner(gb: GroebnerBasis<F>) -> Result<Self> {
        let standard = standard_monomials(&gb)?;
        let index: HashMap<Monomial, usize> =
            standard.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let n = gb.n;
        let field = gb.field.clone();
        let mult: Vec<Vec<SparseVec<F::Elem>>> = (1..=n)
            .map(|j| {
                let xj = Monomial::var(j, n);
                standard
                    .par_iter()
                    .map(|s| {
                        let t = s.mul(&xj);
                        if let Some(&i) = index.get(&t) {
                            return vec![(i, field.one())];
                        }
                        let nf = gb.normal_form(&Polynomial::monomial(&field, t)).expect("same n");
                        let mut v: SparseVec<F::Elem> =
                            nf.terms().iter().map(|(m, c)| (index[m], c.clone())).collect();
                        v.sort_by_key(|e| e.0);
                        v
                    })
                    .collect()
            })
            .collect();
        Ok(QuotientRing { groebner: gb, standard, index, mult })
    }

    pub fn n(&self) -> usize {
        self.groebner.n
    }

    pub fn field(&self) -> &F {
        &self.groebner.field
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `Σ_m q^{deg m}` over standard monomials.
    pub fn hilbert(&self) -> QTPoly {
        let mut h = QTPoly::zero();
        for m in &self.standard {
            h.add_term(m.degree() as u32, 0, 1.into());
        }
        h
    }

    /// Coordinates of `v · x_j`.
    fn times_var(&self, v: &SparseVec<F::Elem>, j: usize) -> SparseVec<F::Elem> {
        let f = self.field();
        let mut acc = Vec::new();
        for (s, c) in v {
            acc = axpy(f, &acc, c, &self.mult[j - 1][*s]);
        }
        acc
    }

    fn monomial_coords(&self, m: &Monomial, memo: &mut HashMap<Monomial, SparseVec<F::Elem>>) -> SparseVec<F::Elem> {
        if let Some(&i) = self.index.get(m) {
            return vec![(i, self.field().one())];
        }
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let j = (1..=m.n()).rev().find(|&j| m.exp(j) > 0).expect("non-standard monomial is not 1");
        let mut prev = m.clone();
        prev.set_exp(j, m.exp(j) - 1);
        let pv = self.monomial_coords(&prev, memo);
        let v = self.times_var(&pv, j);
        memo.insert(m.clone(), v.clone());
        v
    }

    /// Coordinates of the normal form of `f` in the standard monomial basis.
    pub fn coords(&self, f: &Polynomial<F>) -> SparseVec<F::Elem> {
        let mut memo = HashMap::new();
        self.coords_with(f, &mut memo)
    }

    /// Same as [`coords`](Self::coords) with a caller-owned monomial cache.
    pub fn coords_with(&self, f: &Polynomial<F>, memo: &mut HashMap<Monomial, SparseVec<F::Elem>>) -> SparseVec<F::Elem> {
        let field = self.field();
        let mut acc = Vec::new();
        for (m, c) in f.terms() {
            let v = self.monomial_coords(m, memo);
            acc = axpy(field, &acc, c, &v);
        }
        acc
    }

    pub fn from_coords(&self, v: &SparseVec<F::Elem>) -> Polynomial<F> {
        Polynomial::from_terms(self.field(), self.n(), v.iter().map(|(i, c)| (self.standard[*i].clone(), c.clone())))
    }

    /// Normal form as a polynomial, via the multiplication tables.
    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        self.from_coords(&self.coords(f))
    }

    /// Product in the quotient.
    pub fn multiply(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.reduce(&self.reduce(a).mul(&self.reduce(b)))
    }
}

/// Monomials outside the initial ideal, ascending in neglex; the ideal must
/// be zero-dimensional.
pub fn standard_monomials<F: Field>(gb: &GroebnerBasis<F>) -> Result<Vec<Monomial>> {
    standard_monomials_of(gb.n, &gb.leading_monomials())
}

/// Monomials not divisible by any of `gens`, ascending in neglex; fails
/// unless every variable has a pure power among `gens`.
pub fn standard_monomials_of(n: usize, gens: &[Monomial]) -> Result<Vec<Monomial>> {
    for j in 1..=n {
        let has_power = gens.iter().any(|m| (1..=n).all(|i| i == j || m.exp(i) == 0));
        if !has_power {
            return Err(Error::InvalidParameters(format!(
                "ideal is not zero-dimensional: no pure power of x{j} in the initial ideal"
            )));
        }
    }
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let one = Monomial::one(n);
    if !gens.iter().any(|l| l.divides(&one)) {
        let mut stack = vec![one.clone()];
        seen.insert(one);
        while let Some(m) = stack.pop() {
            for j in 1..=n {
                let t = m.mul(&Monomial::var(j, n));
                if !seen.contains(&t) && !gens.iter().any(|l| l.divides(&t)) {
                    seen.insert(t.clone());
                    stack.push(t);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}
