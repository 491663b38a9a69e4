use std::collections::BTreeMap;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::field::Field;

/// Element of `H_n(0)` in the basis `{π_w}`.
#[derive(Clone, Debug)]
pub struct HeckeElement<F: Field> {
    pub n: usize,
    pub field: F,
    pub coords: BTreeMap<Permutation, F::Elem>,
}

impl<F: Field> PartialEq for HeckeElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.coords == other.coords
    }
}

impl<F: Field> HeckeElement<F> {
    pub fn zero(field: &F, n: usize) -> Self {
        HeckeElement { n, field: field.clone(), coords: BTreeMap::new() }
    }

    /// `π_w`.
    pub fn pi_w(field: &F, w: &Permutation) -> Self {
        let mut e = Self::zero(field, w.n());
        e.coords.insert(w.clone(), field.one());
        e
    }

    pub fn one(field: &F, n: usize) -> Self {
        Self::pi_w(field, &Permutation::identity(n))
    }

    /// `π̄_w = π̄_{i_1} ⋯ π̄_{i_ℓ}` along the canonical reduced word.
    pub fn pibar_w(field: &F, w: &Permutation) -> Self {
        let mut e = Self::one(field, w.n());
        for &i in w.reduced_word().iter().rev() {
            e = e.left_pibar(i);
        }
        e
    }

    fn add_coeff(&mut self, w: Permutation, c: F::Elem) {
        let f = &self.field;
        if f.is_zero(&c) {
            return;
        }
        let slot = self.coords.entry(w.clone()).or_insert_with(|| f.zero());
        *slot = f.add(slot, &c);
        if f.is_zero(slot) {
            self.coords.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.coords {
            out.add_coeff(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(&self.field, self.n);
        for (w, a) in &self.coords {
            out.add_coeff(w.clone(), self.field.mul(a, c));
        }
        out
    }

    /// `π_i · x`: `π_i π_u = π_{s_i u}` if `ℓ(s_i u) > ℓ(u)`, else `π_u`.
    pub fn left_pi(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.field, self.n);
        for (u, c) in &self.coords {
            if u.left_ascent(i) {
                out.add_coeff(u.left_simple(i), c.clone());
            } else {
                out.add_coeff(u.clone(), c.clone());
            }
        }
        out
    }

    /// `π̄_i · x = π_i · x − x`.
    pub fn left_pibar(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.field, self.n);
        for (u, c) in &self.coords {
            if u.left_ascent(i) {
                out.add_coeff(u.left_simple(i), c.clone());
                out.add_coeff(u.clone(), self.field.neg(c));
            }
        }
        out
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, got: other.n });
        }
        let mut out = Self::zero(&self.field, self.n);
        for (w, c) in &self.coords {
            let mut t = other.clone();
            for &i in w.reduced_word().iter().rev() {
                t = t.left_pi(i);
            }
            out = out.add(&t.scale(c));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn pi(i: usize, n: usize) -> HeckeElement<Rationals> {
        HeckeElement::pi_w(&Rationals, &Permutation::simple(i, n).unwrap())
    }

    #[test]
    fn zero_hecke_relations() {
        let q = Rationals;
        let n = 3;
        let (p1, p2) = (pi(1, n), pi(2, n));
        assert_eq!(p1.mul(&p1).unwrap(), p1);
        let pb1 = p1.add(&HeckeElement::one(&q, n).scale(&q.from_i64(-1)));
        assert!(pb1.mul(&p1).unwrap().is_zero());
        assert!(p1.mul(&pb1).unwrap().is_zero());
        let a = p1.mul(&p2).unwrap().mul(&p1).unwrap();
        let b = p2.mul(&p1).unwrap().mul(&p2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, HeckeElement::pi_w(&q, &Permutation::longest(3)));
    }

    #[test]
    fn associativity_s3() {
        let q = Rationals;
        let els: Vec<_> = crate::combinatorics::all_permutations(3)
            .iter()
            .map(|w| HeckeElement::pibar_w(&q, w).add(&HeckeElement::pi_w(&q, w)))
            .collect();
        for a in &els {
            for b in &els {
                for c in &els {
                    let l = a.mul(b).unwrap().mul(c).unwrap();
                    let r = a.mul(&b.mul(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}
