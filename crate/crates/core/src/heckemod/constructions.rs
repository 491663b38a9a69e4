use std::collections::HashMap;

use rayon::prelude::*;

use super::algebra::HeckeElement;
use super::module::FiniteHeckeModule;
use crate::combinatorics::{all_permutations, osp_all, osp_of_shape, Composition, OrderedSetPartition, Permutation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{admissible_permutations, ank_index_set, QuotientRing};
use crate::linalg::{SparseVec, Span};
use crate::polyring::{demazure_pi_w, demazure_pibar, x_alpha_i, Monomial, Polynomial};

/// Largest `n` for which the regular representation of `H_n(0)` is used.
pub const MAX_HECKE_N: usize = 6;

fn osp_module<F: Field>(field: &F, n: usize, basis: Vec<OrderedSetPartition>) -> FiniteHeckeModule<F> {
    let index: HashMap<OrderedSetPartition, usize> = basis.iter().cloned().enumerate().map(|(j, s)| (s, j)).collect();
    let m1 = field.from_i64(-1);
    let gens = (1..n)
        .map(|i| {
            basis
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    let (a, b) = (s.block_of(i), s.block_of(i + 1));
                    if a == b {
                        Vec::new()
                    } else if b < a {
                        vec![(j, m1.clone())]
                    } else {
                        let t = s.word().left_simple(i);
                        let sw = OrderedSetPartition::from_pair(&t, &s.shape()).expect("same shape");
                        vec![(index[&sw], field.one())]
                    }
                })
                .collect()
        })
        .collect();
    let generator_index = basis.iter().position(|s| s.word() == Permutation::identity(n));
    FiniteHeckeModule {
        n,
        field: field.clone(),
        labels: basis.iter().map(|s| s.to_bar_string()).collect(),
        gens,
        degrees: None,
        generator_index,
    }
}

/// `𝔽[OP_α]` with basis ordered by the word of each partition.
pub fn module_osp<F: Field>(field: &F, alpha: &Composition) -> FiniteHeckeModule<F> {
    osp_module(field, alpha.n(), osp_of_shape(alpha))
}

/// `𝔽[OP_{n,k}]`, block diagonal over shapes in lex order.
pub fn module_osp_all<F: Field>(field: &F, n: usize, k: usize) -> Result<FiniteHeckeModule<F>> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    let mut m = osp_module(field, n, osp_all(n, k));
    m.generator_index = None;
    Ok(m)
}

fn descent_window(w: &Permutation, lo: &[usize], hi: &[usize]) -> bool {
    let d = w.descents();
    lo.iter().all(|x| d.contains(x)) && d.iter().all(|x| hi.contains(x))
}

/// `P_{α,β} = H_n(0) π̄_{w_0(α)} π_{w_0(β^c)}` on the basis
/// `π̄_w π_{w_0(β^c)}` with `Des(α) ⊆ Des(w) ⊆ Des(β)`, permutations in lex order.
pub fn module_projective_pair<F: Field>(field: &F, alpha: &Composition, beta: &Composition) -> Result<FiniteHeckeModule<F>> {
    let n = alpha.n();
    if beta.n() != n {
        return Err(Error::LengthMismatch { expected: n, got: beta.n() });
    }
    if !alpha.is_coarsening_of(beta) {
        return Err(Error::InvalidParameters(format!("{alpha:?} is not coarser than {beta:?}")));
    }
    if n > MAX_HECKE_N {
        return Err(Error::SizeGuard(format!("H_n(0) arithmetic limited to n ≤ {MAX_HECKE_N}")));
    }
    let perms = all_permutations(n);
    let pos: HashMap<Permutation, usize> = perms.iter().cloned().enumerate().map(|(j, w)| (w, j)).collect();
    let (lo, hi) = (alpha.descents(), beta.descents());
    let ws: Vec<Permutation> = perms.iter().filter(|w| descent_window(w, &lo, &hi)).cloned().collect();
    let tail = HeckeElement::pi_w(field, &Permutation::w0(&beta.complement()));
    let coords = |e: &HeckeElement<F>| -> SparseVec<F::Elem> {
        let mut v: SparseVec<F::Elem> = e.coords.iter().map(|(w, c)| (pos[w], c.clone())).collect();
        v.sort_by_key(|t| t.0);
        v
    };
    let basis: Vec<HeckeElement<F>> = ws
        .iter()
        .map(|w| HeckeElement::pibar_w(field, w).mul(&tail).expect("same n"))
        .collect();
    let mut span = Span::new(field, true);
    for b in &basis {
        if !span.insert(coords(b)) {
            return Err(Error::TheoremViolation(format!("P_{{α,β}} basis is dependent for α={alpha:?}, β={beta:?}")));
        }
    }
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            let img = coords(&b.left_pibar(i));
            cols.push(span.express(&img).ok_or_else(|| {
                Error::TheoremViolation(format!("π̄_{i} leaves the span of the P_{{α,β}} basis"))
            })?);
        }
        gens.push(cols);
    }
    let w0 = Permutation::w0(alpha);
    Ok(FiniteHeckeModule {
        n,
        field: field.clone(),
        labels: ws.iter().map(|w| w.to_compact()).collect(),
        gens,
        degrees: None,
        generator_index: ws.iter().position(|w| *w == w0),
    })
}

/// `P_α = P_{α,α}`.
pub fn module_projective<F: Field>(field: &F, alpha: &Composition) -> Result<FiniteHeckeModule<F>> {
    module_projective_pair(field, alpha, alpha)
}

/// `N_{α,𝐢}`: span of `π̄_w(x_{α,𝐢})` in the quotient, for `Des(α) ⊆ Des(w) ⊆ Des(α∪𝐢)`.
///
/// A dependent basis or an action leaving the span is reported as a theorem violation.
pub fn module_n<F: Field>(ring: &QuotientRing<F>, k: usize, alpha: &Composition, i: &[usize]) -> Result<FiniteHeckeModule<F>> {
    let n = ring.n();
    let field = ring.field().clone();
    if !ank_index_set(n, k)?.iter().any(|(a, ii)| a == alpha && ii.as_slice() == i) {
        return Err(Error::InvalidParameters(format!("({alpha:?}, {i:?}) is not in A_{{{n},{k}}}")));
    }
    let x = Polynomial::monomial(&field, x_alpha_i(alpha, i)?);
    let ws = admissible_permutations(alpha, i)?;
    let mut memo: HashMap<Monomial, SparseVec<F::Elem>> = HashMap::new();
    let polys: Vec<Polynomial<F>> = ws.iter().map(|w| demazure_pi_w(w, &x, true)).collect::<Result<_>>()?;
    let mut span = Span::new(&field, true);
    for p in &polys {
        if !span.insert(ring.coords_with(p, &mut memo)) {
            return Err(Error::TheoremViolation(format!("N basis is dependent for α={alpha:?}, i={i:?}")));
        }
    }
    let mut gens = Vec::with_capacity(n - 1);
    for j in 1..n {
        let mut cols = Vec::with_capacity(polys.len());
        for p in &polys {
            let img = ring.coords_with(&demazure_pibar(j, p)?, &mut memo);
            cols.push(span.express(&img).ok_or_else(|| {
                Error::TheoremViolation(format!("π̄_{j} leaves N for α={alpha:?}, i={i:?}"))
            })?);
        }
        gens.push(cols);
    }
    let deg = x.degree().unwrap_or(0);
    let w0 = Permutation::w0(alpha);
    Ok(FiniteHeckeModule {
        n,
        field,
        labels: ws.iter().map(|w| w.to_compact()).collect(),
        gens,
        degrees: Some(vec![deg; ws.len()]),
        generator_index: ws.iter().position(|w| *w == w0),
    })
}

/// Every `N_{α,𝐢}` for `(α,𝐢) ∈ A_{n,k}`, in index-set order.
pub fn modules_n_all<F: Field>(ring: &QuotientRing<F>, k: usize) -> Result<Vec<(Composition, Vec<usize>, FiniteHeckeModule<F>)>> {
    ank_index_set(ring.n(), k)?
        .into_par_iter()
        .map(|(a, i)| module_n(ring, k, &a, &i).map(|m| (a, i, m)))
        .collect()
}

/// The quotient itself as a graded module on its standard monomial basis.
pub fn module_quotient<F: Field>(ring: &QuotientRing<F>) -> Result<FiniteHeckeModule<F>> {
    let n = ring.n();
    let field = ring.field().clone();
    let gens = (1..n)
        .into_par_iter()
        .map(|j| {
            let mut memo = HashMap::new();
            ring.standard
                .iter()
                .map(|m| {
                    let img = demazure_pibar(j, &Polynomial::monomial(&field, m.clone()))?;
                    Ok(ring.coords_with(&img, &mut memo))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteHeckeModule {
        n,
        field,
        labels: ring.standard.iter().map(|m| m.to_string()).collect(),
        gens,
        degrees: Some(ring.standard.iter().map(|m| m.degree()).collect()),
        generator_index: None,
    })
}
