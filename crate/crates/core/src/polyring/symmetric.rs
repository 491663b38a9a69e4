use itertools::Itertools;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::combinatorics::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::field::Field;

/// `e_d(x_1, …, x_n)`.
pub fn elementary_e<F: Field>(field: &F, d: usize, n: usize) -> Polynomial<F> {
    let vars: Vec<usize> = (1..=n).collect();
    elementary_in(field, d, &vars, n)
}

/// `e_d` of the listed variables (1-based indices) inside `F[x_1..x_n]`.
pub fn elementary_in<F: Field>(field: &F, d: usize, vars: &[usize], n: usize) -> Polynomial<F> {
    let terms = vars.iter().combinations(d).map(|c| {
        let mut m = Monomial::one(n);
        for &&v in &c {
            m.set_exp(v, 1);
        }
        (m, field.one())
    });
    Polynomial::from_terms(field, n, terms)
}

/// `h_d(x_1, …, x_i)` inside `F[x_1..x_n]`.
pub fn complete_h<F: Field>(field: &F, d: usize, i: usize, n: usize) -> Polynomial<F> {
    let terms = (1..=i).combinations_with_replacement(d).map(|c| {
        let mut m = Monomial::one(n);
        for v in c {
            m.set_exp(v, m.exp(v) + 1);
        }
        (m, field.one())
    });
    Polynomial::from_terms(field, n, terms)
}

/// `x(S) = ∏ x_{s_j}^{s_j − j + 1}`; the reversed form puts that exponent on `x_{n − s_j + 1}`.
pub fn skip_monomial(s: &[usize], n: usize, reversed: bool) -> Result<Monomial> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut m = Monomial::one(n);
    for (j, &sj) in sorted.iter().enumerate() {
        if sj == 0 || sj > n {
            return Err(Error::IndexOutOfRange { index: sj, max: n });
        }
        let var = if reversed { n - sj + 1 } else { sj };
        m.set_exp(var, (sj - j) as u16);
    }
    Ok(m)
}

/// `x_{α,𝐢}`: the exponent of `x_j` is `|{r ∈ Des(α) : r ≥ j}| + i_j`.
pub fn x_alpha_i(alpha: &Composition, i: &[usize]) -> Result<Monomial> {
    let n = alpha.n();
    if i.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: i.len() });
    }
    let des = alpha.descents();
    let exps: Vec<usize> = (1..=n)
        .map(|j| des.iter().filter(|&&r| r >= j).count() + i[j - 1])
        .collect();
    Ok(Monomial::from_usize(&exps))
}

/// Generalized Garsia–Stanton monomial `gs_{w,𝐢} = w(x_{α,𝐢})` with `Des(α) = Des(w)`.
pub fn gs_monomial(w: &Permutation, i: &[usize]) -> Result<Monomial> {
    let n = w.n();
    let alpha = Composition::from_descents(n, &w.descents())?;
    Ok(x_alpha_i(&alpha, i)?.permute(w.one_line()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::field::Rationals;

    #[test]
    fn small_symmetric_functions() {
        assert_eq!(elementary_e(&Rationals, 1, 2).to_string(), "x2 + x1");
        assert_eq!(complete_h(&Rationals, 2, 2, 2).to_string(), "x2^2 + x1*x2 + x1^2");
        assert!(elementary_e(&Rationals, 4, 3).is_zero());
        assert_eq!(elementary_e(&Rationals, 0, 3), Polynomial::one(&Rationals, 3));
        assert_eq!(complete_h(&Rationals, 0, 2, 3), Polynomial::one(&Rationals, 3));
        for k in 0..5 {
            for i in 1..5 {
                let h = complete_h(&Rationals, k, i, 5);
                assert_eq!(h.len() as u64, binomial((k + i - 1) as i64, k as i64));
                if k > 0 {
                    assert_eq!(h.leading_monomial().unwrap(), &{
                        let mut m = Monomial::one(5);
                        m.set_exp(i, k as u16);
                        m
                    });
                }
            }
        }
    }

    #[test]
    fn skip_monomials() {
        assert_eq!(skip_monomial(&[2, 5, 7, 8], 8, false).unwrap().to_string(), "x2^2*x5^4*x7^5*x8^5");
        assert_eq!(skip_monomial(&[2, 5, 7, 8], 9, true).unwrap().to_string(), "x2^5*x3^5*x5^4*x8^2");
        assert_eq!(skip_monomial(&[1], 3, false).unwrap().to_string(), "x1");
        assert!(skip_monomial(&[4], 3, false).is_err());
    }

    #[test]
    fn gs_monomial_example() {
        let w = Permutation::parse("254689137").unwrap();
        let m = gs_monomial(&w, &[2, 2, 1, 1, 0, 0, 0, 0, 0]).unwrap();
        // (x2 x5)(x2 x5 x4 x6 x8 x9)(x2^2 x5^2 x4 x6)
        assert_eq!(m.to_string(), "x2^4*x4^2*x5^4*x6^2*x8*x9");
        assert_eq!(m.degree(), w.maj() + 6);
        let a = Composition::new(vec![2, 4, 3]).unwrap();
        assert_eq!(x_alpha_i(&a, &[2, 2, 1, 1, 0, 0, 0, 0, 0]).unwrap().to_string(), "x1^4*x2^4*x3^2*x4^2*x5*x6");
        assert!(gs_monomial(&Permutation::identity(4), &[0; 4]).unwrap().is_one());
    }
}
