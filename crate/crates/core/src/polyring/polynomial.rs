use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::Signed;

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::Field;

/// Sparse polynomial in `x_1, …, x_n` over a field `F`.
///
/// Terms are kept sorted ascending in neglex with no zero coefficients, so the
/// leading term is the last entry.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    n: usize,
    field: F,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F, n: usize) -> Self {
        Polynomial { n, field: field.clone(), terms: Vec::new() }
    }

    pub fn constant(field: &F, n: usize, c: F::Elem) -> Self {
        Self::term(field, Monomial::one(n), c)
    }

    pub fn one(field: &F, n: usize) -> Self {
        Self::constant(field, n, field.one())
    }

    pub fn term(field: &F, m: Monomial, c: F::Elem) -> Self {
        let n = m.n();
        let terms = if field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { n, field: field.clone(), terms }
    }

    pub fn monomial(field: &F, m: Monomial) -> Self {
        Self::term(field, m, field.one())
    }

    pub fn var(field: &F, i: usize, n: usize) -> Self {
        Self::monomial(field, Monomial::var(i, n))
    }

    /// Collect arbitrary (possibly repeated) terms.
    pub fn from_terms(field: &F, n: usize, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.n(), n);
            match acc.get_mut(&m) {
                Some(slot) => *slot = field.add(slot, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F::Elem)> =
            acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { n, field: field.clone(), terms }
    }

    /// Build from terms already sorted ascending, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(field: &F, n: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        Polynomial { n, field: field.clone(), terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending neglex order.
    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    /// Terms in descending neglex order (the emitted order).
    pub fn terms_desc(&self) -> impl Iterator<Item = &(Monomial, F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    /// Remove and return the leading term.
    pub fn pop_leading(&mut self) -> Option<(Monomial, F::Elem)> {
        self.terms.pop()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.last()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|t| t.0.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|t| t.0.degree() == d).cloned().collect();
        Self::from_sorted_unchecked(&self.field, self.n, terms)
    }

    /// Top-degree homogeneous component.
    pub fn top_component(&self) -> Self {
        match self.degree() {
            Some(d) => self.component(d),
            None => self.clone(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let take_other = |c: &F::Elem| if negate_other { f.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b.0.clone(), take_other(&b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { f.sub(&a.1, &b.1) } else { f.add(&a.1, &b.1) };
                    if !f.is_zero(&c) {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|b| (b.0.clone(), take_other(&b.1))));
        Self::from_sorted_unchecked(f, self.n, out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect();
        Self::from_sorted_unchecked(f, self.n, terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.n);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect();
        Self::from_sorted_unchecked(f, self.n, terms)
    }

    /// `c · m · self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.n);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(a, c))).collect();
        Self::from_sorted_unchecked(f, self.n, terms)
    }

    /// `self − c · m · g` in one merge pass.
    pub fn sub_mul_term(&self, m: &Monomial, c: &F::Elem, g: &Self) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        for (t, a) in &g.terms {
            let tm = t.mul(m);
            while i < self.terms.len() && self.terms[i].0 < tm {
                out.push(self.terms[i].clone());
                i += 1;
            }
            let prod = f.mul(a, c);
            if i < self.terms.len() && self.terms[i].0 == tm {
                let v = f.sub(&self.terms[i].1, &prod);
                if !f.is_zero(&v) {
                    out.push((tm, v));
                }
                i += 1;
            } else {
                out.push((tm, f.neg(&prod)));
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        Self::from_sorted_unchecked(f, self.n, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(f, self.n);
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.field, self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rescale so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// `s_i(f)`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        Self::from_terms(&self.field, self.n, self.terms.iter().map(|(m, c)| (m.swap(i), c.clone())))
    }

    /// `w(f)` with `x_j ↦ x_{w(j)}`.
    pub fn permute_vars(&self, w: &[usize]) -> Self {
        Self::from_terms(&self.field, self.n, self.terms.iter().map(|(m, c)| (m.permute(w), c.clone())))
    }

    pub fn eval(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: point.len() });
        }
        let f = &self.field;
        let mut total = f.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    v = f.mul(&v, x);
                }
            }
            total = f.add(&total, &v);
        }
        Ok(total)
    }

    /// Transport to another field through canonical numerator/denominator pairs.
    pub fn to_field<G: Field>(&self, g: &G) -> Result<Polynomial<G>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (num, den) = self.field.to_ratio(c);
            let v = g.from_ratio(&num, &den)?;
            if !g.is_zero(&v) {
                terms.push((m.clone(), v));
            }
        }
        Ok(Polynomial::from_sorted_unchecked(g, self.n, terms))
    }

    /// JSON form `{n, field, terms: [{exps, num, den}]}`, terms neglex descending.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms_desc()
            .map(|(m, c)| {
                let (num, den) = self.field.to_ratio(c);
                serde_json::json!({"exps": m.exps(), "num": num.to_string(), "den": den.to_string()})
            })
            .collect();
        serde_json::json!({"n": self.n, "field": self.field.tag(), "terms": terms})
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// ASCII rendering such as `x1^2*x2 - 1/2*x3 + 1`, leading term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let (num, den) = self.field.to_ratio(c);
            let neg = num.is_negative();
            let mag = num.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = mag == 1.into() && den == 1.into();
            let coef = if den == 1.into() { mag.to_string() } else { format!("{mag}/{den}") };
            if m.is_one() {
                f.write_str(&coef)?;
            } else if unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coef}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn x(i: usize, n: usize) -> Polynomial<Rationals> {
        Polynomial::var(&Rationals, i, n)
    }

    #[test]
    fn ring_operations() {
        let f = x(1, 3).add(&x(2, 3));
        let g = x(2, 3).sub(&x(3, 3));
        let fg = f.mul(&g);
        assert_eq!(fg, g.mul(&f));
        assert_eq!(fg.to_string(), "-x2*x3 - x1*x3 + x2^2 + x1*x2");
        assert_eq!(fg.leading_monomial().unwrap(), &f.leading_monomial().unwrap().mul(g.leading_monomial().unwrap()));
        assert!(f.sub(&f).is_zero());
        let h = fg.sub_mul_term(&Monomial::var(1, 3), &Rationals.from_i64(2), &g);
        assert_eq!(h, fg.sub(&g.mul(&x(1, 3)).scale(&Rationals.from_i64(2))));
    }

    #[test]
    fn evaluation_and_transport() {
        let f = x(1, 2).mul(&x(2, 2)).add(&Polynomial::constant(&Rationals, 2, Rationals.from_i64(-3)));
        let v = f.eval(&[Rationals.from_i64(2), Rationals.from_i64(5)]).unwrap();
        assert_eq!(v, Rationals.from_i64(7));
        let p = PrimeField::new(5).unwrap();
        let g = f.to_field(&p).unwrap();
        assert_eq!(g.eval(&[2, 0]).unwrap(), 2);
        assert!(f.eval(&[Rationals.from_i64(1)]).is_err());
    }

    #[test]
    fn json_is_neglex_descending() {
        let f = x(1, 2).add(&x(2, 2));
        let j = f.to_json();
        assert_eq!(j["terms"][0]["exps"], serde_json::json!([0, 1]));
        assert_eq!(j["field"], "Q");
    }
}
