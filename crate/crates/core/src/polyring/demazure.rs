//! Divided differences and isobaric Demazure operators, computed
//! monomial by monomial with telescoping sums (no polynomial division).

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::field::Field;

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    Ok(())
}

fn with_pair(m: &Monomial, i: usize, a: u16, b: u16) -> Monomial {
    let mut out = m.clone();
    out.set_exp(i, a);
    out.set_exp(i + 1, b);
    out
}

/// Apply a map producing `(monomial, ±1)` terms to every term of `f`.
fn termwise<F: Field>(f: &Polynomial<F>, op: impl Fn(&Monomial, &mut Vec<(Monomial, bool)>)) -> Polynomial<F> {
    let field = f.field();
    let mut buf = Vec::new();
    let mut out = Vec::new();
    for (m, c) in f.terms() {
        buf.clear();
        op(m, &mut buf);
        let nc = field.neg(c);
        for (t, negative) in buf.drain(..) {
            out.push((t, if negative { nc.clone() } else { c.clone() }));
        }
    }
    Polynomial::from_terms(field, f.n(), out)
}

/// `π̄_i` on one monomial, with `a = a_i`, `b = a_{i+1}`:
/// `Σ_{j=1}^{a−b} x_i^{a−j} x_{i+1}^{b+j}` for `a ≥ b`, and
/// `−Σ_{j=0}^{b−a−1} x_i^{a+j} x_{i+1}^{b−j}` for `a < b`.
fn pibar_monomial(m: &Monomial, i: usize, out: &mut Vec<(Monomial, bool)>) {
    let (a, b) = (m.exp(i), m.exp(i + 1));
    if a >= b {
        for j in 1..=(a - b) {
            out.push((with_pair(m, i, a - j, b + j), false));
        }
    } else {
        for j in 0..(b - a) {
            out.push((with_pair(m, i, a + j, b - j), true));
        }
    }
}

/// `∂_i` on one monomial.
fn partial_monomial(m: &Monomial, i: usize, out: &mut Vec<(Monomial, bool)>) {
    let (a, b) = (m.exp(i), m.exp(i + 1));
    if a > b {
        for j in 0..(a - b) {
            out.push((with_pair(m, i, a - 1 - j, b + j), false));
        }
    } else if a < b {
        for j in 0..(b - a) {
            out.push((with_pair(m, i, b - 1 - j, a + j), true));
        }
    }
}

/// `π̄_i = π_i − 1`.
pub fn demazure_pibar<F: Field>(i: usize, f: &Polynomial<F>) -> Result<Polynomial<F>> {
    check_index(i, f.n())?;
    Ok(termwise(f, |m, out| pibar_monomial(m, i, out)))
}

/// `π_i(f) = (x_i f − x_{i+1} s_i(f)) / (x_i − x_{i+1})`.
pub fn demazure_pi<F: Field>(i: usize, f: &Polynomial<F>) -> Result<Polynomial<F>> {
    Ok(demazure_pibar(i, f)?.add(f))
}

/// Divided difference `∂_i(f) = (f − s_i f) / (x_i − x_{i+1})`.
pub fn divided_difference<F: Field>(i: usize, f: &Polynomial<F>) -> Result<Polynomial<F>> {
    check_index(i, f.n())?;
    Ok(termwise(f, |m, out| partial_monomial(m, i, out)))
}

/// Apply `π_{i_1} ⋯ π_{i_ℓ}` (or the barred version) for a word, last letter first.
pub fn demazure_word<F: Field>(word: &[usize], f: &Polynomial<F>, barred: bool) -> Result<Polynomial<F>> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = if barred { demazure_pibar(i, &g)? } else { demazure_pi(i, &g)? };
        if g.is_zero() {
            break;
        }
    }
    Ok(g)
}

/// `π_w(f)` or `π̄_w(f)` along the canonical reduced word of `w`.
pub fn demazure_pi_w<F: Field>(w: &Permutation, f: &Polynomial<F>, barred: bool) -> Result<Polynomial<F>> {
    if w.n() != f.n() {
        return Err(Error::LengthMismatch { expected: f.n(), got: w.n() });
    }
    demazure_word(&w.reduced_word(), f, barred)
}

/// Demazure character `κ_γ`: `x^γ` if `γ` is weakly decreasing, otherwise
/// `π_i(κ_{s_i γ})` for the smallest `i` with `γ_i < γ_{i+1}`.
pub fn key_polynomial<F: Field>(field: &F, gamma: &[i64]) -> Result<Polynomial<F>> {
    if let Some(&bad) = gamma.iter().find(|&&g| g < 0) {
        return Err(Error::NegativeEntry(bad));
    }
    let g: Vec<usize> = gamma.iter().map(|&x| x as usize).collect();
    let mut word = Vec::new();
    let mut cur = g;
    // κ_γ = π_{i_1} π_{i_2} ⋯ x^{sort(γ)}; collect the lifting sequence first
    while let Some(i) = (1..cur.len()).find(|&i| cur[i - 1] < cur[i]) {
        word.push(i);
        cur.swap(i - 1, i);
    }
    let base = Polynomial::monomial(field, Monomial::from_usize(&cur));
    demazure_word(&word, &base, false)
}

/// `κ_γ` using an arbitrary admissible choice sequence, for confluence checks.
///
/// `choose` receives the ascent positions of the current vector and returns the one to use.
pub fn key_polynomial_with<F: Field>(
    field: &F,
    gamma: &[usize],
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Polynomial<F> {
    let mut word = Vec::new();
    let mut cur = gamma.to_vec();
    loop {
        let ascents: Vec<usize> = (1..cur.len()).filter(|&i| cur[i - 1] < cur[i]).collect();
        if ascents.is_empty() {
            break;
        }
        let i = choose(&ascents);
        word.push(i);
        cur.swap(i - 1, i);
    }
    let base = Polynomial::monomial(field, Monomial::from_usize(&cur));
    demazure_word(&word, &base, false).expect("indices in range")
}

/// Exact check of `π_i(fg) = ∂_i(f)·(x_i g) + s_i(f)·π_i(g)`.
pub fn leibniz_check<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, i: usize) -> Result<bool> {
    let n = f.n();
    let lhs = demazure_pi(i, &f.mul(g))?;
    let xi_g = g.mul_term(&Monomial::var(i, n), &f.field().one());
    let rhs = divided_difference(i, f)?.mul(&xi_g).add(&f.swap_vars(i).mul(&demazure_pi(i, g)?));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::polyring::{complete_h, elementary_e};

    fn mono(e: &[u16]) -> Polynomial<Rationals> {
        Polynomial::monomial(&Rationals, Monomial::new(e))
    }

    #[test]
    fn pibar_square() {
        let r = demazure_pibar(1, &mono(&[2, 0])).unwrap();
        assert_eq!(r, mono(&[1, 1]).add(&mono(&[0, 2])));
        assert_eq!(demazure_pibar(1, &mono(&[0, 1])).unwrap(), mono(&[0, 1]).neg());
        assert!(demazure_pibar(2, &mono(&[0, 1])).is_err());
    }

    #[test]
    fn pi_matches_rational_definition() {
        // (x_i f − x_{i+1} s_i f) = (x_i − x_{i+1}) π_i f, checked as polynomials
        let n = 3;
        let f = mono(&[3, 1, 0]).add(&mono(&[0, 2, 1]).scale(&Rationals.from_i64(-2))).add(&mono(&[1, 4, 2]));
        for i in 1..n {
            let lhs = f.mul(&Polynomial::var(&Rationals, i, n)).sub(&f.swap_vars(i).mul(&Polynomial::var(&Rationals, i + 1, n)));
            let diff = Polynomial::var(&Rationals, i, n).sub(&Polynomial::var(&Rationals, i + 1, n));
            assert_eq!(lhs, diff.mul(&demazure_pi(i, &f).unwrap()));
            assert_eq!(f.sub(&f.swap_vars(i)), diff.mul(&divided_difference(i, &f).unwrap()));
        }
    }

    #[test]
    fn shift_identity_and_symmetric_fixed() {
        let n = 5;
        for k in 1..4 {
            for i in 1..n {
                let h = complete_h(&Rationals, k, i, n);
                assert_eq!(demazure_pi(i, &h).unwrap(), complete_h(&Rationals, k, i + 1, n));
            }
        }
        let e = elementary_e(&Rationals, 2, n);
        for i in 1..n {
            assert_eq!(demazure_pi(i, &e).unwrap(), e);
        }
    }

    #[test]
    fn key_polynomials_small() {
        let k = key_polynomial(&Rationals, &[0, 1, 1]).unwrap();
        assert_eq!(k, elementary_e(&Rationals, 2, 3));
        assert_eq!(key_polynomial(&Rationals, &[2, 1, 0]).unwrap(), mono(&[2, 1, 0]));
        assert_eq!(key_polynomial(&Rationals, &[1, -1]).unwrap_err(), Error::NegativeEntry(-1));
    }

    #[test]
    fn identity_word_is_noop() {
        let f = mono(&[1, 2, 3]);
        assert_eq!(demazure_pi_w(&Permutation::identity(3), &f, true).unwrap(), f);
    }
}
