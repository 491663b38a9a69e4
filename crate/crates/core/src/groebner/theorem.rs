use itertools::Itertools;

use super::nonskip::{gamma_star, kappa_sets};
use super::quotient::{standard_monomials_of, QuotientRing};
use crate::field::Field;
use crate::polyring::{complete_h, key_polynomial, skip_monomial, Monomial, Polynomial};

/// Outcome of checking the explicit Gröbner basis family for `J_{n,k}`.
#[derive(Debug, Clone)]
pub struct GroebnerTheoremReport {
    pub n: usize,
    pub k: usize,
    /// `γ(S)*` for each `S`, in lexicographic order of `S`.
    pub kappa_indices: Vec<Vec<usize>>,
    /// Every `h_k(x_1..x_i)` reduces to zero.
    pub h_in_ideal: bool,
    /// `S` whose `κ_{γ(S)*}` failed to reduce to zero.
    pub kappa_not_in_ideal: Vec<Vec<usize>>,
    /// `S` for which `in(κ_{γ(S)*}) ≠ x(S)*`.
    pub kappa_bad_leading: Vec<Vec<usize>>,
    /// The family's leading monomials cut out the same standard monomials.
    pub generates_initial_ideal: bool,
    /// For `k < n`: no leading monomial divides another. `None` when `k = n`.
    pub minimal: Option<bool>,
}

impl GroebnerTheoremReport {
    pub fn pass(&self) -> bool {
        self.h_in_ideal
            && self.kappa_not_in_ideal.is_empty()
            && self.kappa_bad_leading.is_empty()
            && self.generates_initial_ideal
            && self.minimal != Some(false)
    }
}

/// The polynomials `h_k(x_1..x_i)` followed by `κ_{γ(S)*}` for `S ⊆ [n−1]`, `|S| = n−k+1`.
pub fn theorem_family<F: Field>(field: &F, n: usize, k: usize) -> Vec<Polynomial<F>> {
    let mut out: Vec<Polynomial<F>> = (1..=n).map(|i| complete_h(field, k, i, n)).collect();
    for s in kappa_sets(n, k) {
        let g: Vec<i64> = gamma_star(&s, n).iter().map(|&x| x as i64).collect();
        out.push(key_polynomial(field, &g).expect("nonnegative"));
    }
    out
}

pub fn verify_groebner_theorem<F: Field>(ring: &QuotientRing<F>, k: usize) -> GroebnerTheoremReport {
    let field = ring.field();
    let n = ring.n();
    let sets = kappa_sets(n, k);
    let family = theorem_family(field, n, k);
    let (hs, kappas) = family.split_at(n);
    let h_in_ideal = hs.iter().all(|h| ring.groebner.contains(h).expect("same n"));
    let mut kappa_not_in_ideal = Vec::new();
    let mut kappa_bad_leading = Vec::new();
    for (s, kap) in sets.iter().zip(kappas) {
        if !ring.groebner.contains(kap).expect("same n") {
            kappa_not_in_ideal.push(s.clone());
        }
        let want = skip_monomial(s, n, true).expect("valid");
        if kap.leading_monomial() != Some(&want) {
            kappa_bad_leading.push(s.clone());
        }
    }
    let lms: Vec<Monomial> = family.iter().filter_map(|p| p.leading_monomial().cloned()).collect();
    let generates_initial_ideal = standard_monomials_of(n, &lms).map(|s| s == ring.standard).unwrap_or(false);
    let minimal = (k < n).then(|| {
        lms.iter()
            .enumerate()
            .cartesian_product(lms.iter().enumerate())
            .all(|((i, a), (j, b))| i == j || !a.divides(b))
    });
    GroebnerTheoremReport {
        n,
        k,
        kappa_indices: sets.iter().map(|s| gamma_star(s, n)).collect(),
        h_in_ideal,
        kappa_not_in_ideal,
        kappa_bad_leading,
        generates_initial_ideal,
        minimal,
    }
}
