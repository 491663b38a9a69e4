use itertools::Itertools;

use crate::error::Result;
use crate::polyring::{skip_monomial, Monomial};

use super::basis::check_nk;

/// Subsets `S ⊆ [n−1]` with `|S| = n−k+1`, in lexicographic order.
pub fn kappa_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let size = n + 1 - k;
    if n == 0 || size > n - 1 {
        return Vec::new();
    }
    (1..n).combinations(size).collect()
}

/// `γ(S)*`, the exponent vector of the reverse skip monomial `x(S)*`.
pub fn gamma_star(s: &[usize], n: usize) -> Vec<usize> {
    skip_monomial(s, n, true).expect("S inside [n]").exps().iter().map(|&e| e as usize).collect()
}

/// Every exponent vector in `[0, k)^n`, ascending in neglex.
fn box_monomials(n: usize, k: usize) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..n)
        .map(|_| 0..k as u16)
        .multi_cartesian_product()
        .map(|e| Monomial::new(&e))
        .collect();
    if n == 0 {
        out = vec![Monomial::one(0)];
    }
    out.sort();
    out
}

/// `𝒞_{n,k}`: `(n,k)`-reverse nonskip monomials, with `S` ranging over `[n−1]`.
pub fn cnk_direct(n: usize, k: usize) -> Result<Vec<Monomial>> {
    check_nk(n, k)?;
    let skips: Vec<Monomial> = kappa_sets(n, k)
        .iter()
        .map(|s| skip_monomial(s, n, true).expect("valid"))
        .collect();
    Ok(box_monomials(n, k)
        .into_iter()
        .filter(|m| !skips.iter().any(|s| s.divides(m)))
        .collect())
}

/// `(n,k)`-staircases: shuffles of `(k−1, …, 1, 0)` with `n−k` copies of `k−1`.
pub fn staircases(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    check_nk(n, k)?;
    let extra = n - k;
    let mut out = Vec::new();
    for pos in (0..n).combinations(extra) {
        let mut seq = Vec::with_capacity(n);
        let mut down = (0..k).rev();
        for j in 0..n {
            if pos.contains(&j) {
                seq.push(k - 1);
            } else {
                seq.push(down.next().expect("k entries"));
            }
        }
        out.push(seq);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Monomials componentwise below some `(n,k)`-staircase, ascending in neglex.
pub fn staircase_monomials(n: usize, k: usize) -> Result<Vec<Monomial>> {
    let stairs = staircases(n, k)?;
    Ok(box_monomials(n, k)
        .into_iter()
        .filter(|m| {
            stairs
                .iter()
                .any(|st| m.exps().iter().zip(st).all(|(&a, &b)| (a as usize) <= b))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c42_list() {
        let got: Vec<String> = cnk_direct(4, 2).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(got.len(), 14);
        assert!(!got.contains(&"x2*x3*x4".to_string()));
        assert!(got.contains(&"x1*x3*x4".to_string()));
        assert_eq!(cnk_direct(4, 2).unwrap(), staircase_monomials(4, 2).unwrap());
    }

    #[test]
    fn staircases_53() {
        let mut want = vec![
            vec![2, 1, 0, 2, 2],
            vec![2, 1, 2, 0, 2],
            vec![2, 2, 1, 0, 2],
            vec![2, 1, 2, 2, 0],
            vec![2, 2, 1, 2, 0],
            vec![2, 2, 2, 1, 0],
        ];
        want.sort();
        assert_eq!(staircases(5, 3).unwrap(), want);
    }

    #[test]
    fn artin_when_k_equals_n() {
        for n in 1..=5 {
            let c = cnk_direct(n, n).unwrap();
            assert!(c.iter().all(|m| (1..=n).all(|i| (m.exp(i) as usize) <= n - i)));
            assert_eq!(c.len() as u64, crate::combinatorics::factorial(n));
        }
    }

    #[test]
    fn kappa_sets_64() {
        let got: Vec<Vec<usize>> = kappa_sets(6, 4).iter().map(|s| gamma_star(s, 6)).collect();
        assert_eq!(got[0], vec![0, 0, 0, 1, 1, 1]);
        assert_eq!(got[1], vec![0, 0, 2, 0, 1, 1]);
        assert_eq!(got.len(), 10);
        assert!(kappa_sets(4, 1).is_empty());
    }
}
