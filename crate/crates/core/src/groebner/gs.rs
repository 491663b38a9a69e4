//! Garsia–Stanton type families of `S_{n,k}` and the index set `A_{n,k}`.

use std::collections::HashMap;

use rayon::prelude::*;

use super::basis::check_nk;
use super::quotient::QuotientRing;
use crate::combinatorics::{all_compositions, all_permutations, Composition, Permutation};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{rank, SparseVec};
use crate::polyring::{demazure_pi_w, gs_monomial, x_alpha_i, Monomial, Polynomial};

/// Weakly decreasing sequences of length `len` with entries `≤ max`, padded by
/// `pad` zeros, in lexicographically decreasing order.
fn decreasing_sequences(len: usize, max: i64, pad: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            rec(len, v, cur, out);
            cur.pop();
        }
    }
    if max < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(len, max as usize, &mut Vec::new(), &mut out);
    for s in &mut out {
        s.extend(std::iter::repeat(0).take(pad));
    }
    out
}

/// `(w, 𝐢)` with `k − des(w) > i_1 ≥ ⋯ ≥ i_{n−k} ≥ 0 = i_{n−k+1} = ⋯ = i_n`.
pub fn gs_index_set(n: usize, k: usize) -> Result<Vec<(Permutation, Vec<usize>)>> {
    check_nk(n, k)?;
    let mut out = Vec::new();
    for w in all_permutations(n) {
        let bound = k as i64 - w.des() as i64 - 1;
        for i in decreasing_sequences(n - k, bound, k) {
            out.push((w.clone(), i));
        }
    }
    Ok(out)
}

/// `A_{n,k}`: `α_1 > n−k` and `k − ℓ(α) ≥ i_1 ≥ ⋯ ≥ i_{n−k} ≥ 0`, trailing zeros.
///
/// Ordered by `α` ascending, then `𝐢` descending.
pub fn ank_index_set(n: usize, k: usize) -> Result<Vec<(Composition, Vec<usize>)>> {
    check_nk(n, k)?;
    let mut out = Vec::new();
    for a in all_compositions(n) {
        if a.parts()[0] <= n - k {
            continue;
        }
        for i in decreasing_sequences(n - k, k as i64 - a.len() as i64, k) {
            out.push((a.clone(), i));
        }
    }
    Ok(out)
}

/// `w` with `Des(α) ⊆ Des(w) ⊆ Des(α ∪ 𝐢)`.
pub fn admissible_permutations(alpha: &Composition, i: &[usize]) -> Result<Vec<Permutation>> {
    let upper = alpha.union(i)?;
    let lo = alpha.descents();
    let hi = upper.descents();
    Ok(all_permutations(alpha.n())
        .into_iter()
        .filter(|w| {
            let d = w.descents();
            lo.iter().all(|x| d.contains(x)) && d.iter().all(|x| hi.contains(x))
        })
        .collect())
}

/// `𝐢′` with `i′_j = i_j − |{r ∈ Des(w) ∩ [n−k] : r ≥ j}|`.
pub fn i_prime(w: &Permutation, i: &[usize], n: usize, k: usize) -> Vec<i64> {
    let des: Vec<usize> = w.descents().into_iter().filter(|&r| r <= n - k).collect();
    (1..=n)
        .map(|j| i[j - 1] as i64 - des.iter().filter(|&&r| r >= j).count() as i64)
        .collect()
}

/// One member of the Demazure-type family.
#[derive(Clone, Debug)]
pub struct DemazureElement<F: Field> {
    pub alpha: Composition,
    pub i: Vec<usize>,
    pub w: Permutation,
    pub poly: Polynomial<F>,
}

pub fn classical_family<F: Field>(field: &F, n: usize, k: usize) -> Result<Vec<(Permutation, Vec<usize>, Polynomial<F>)>> {
    Ok(gs_index_set(n, k)?
        .into_iter()
        .map(|(w, i)| {
            let m = gs_monomial(&w, &i).expect("length n");
            (w, i, Polynomial::monomial(field, m))
        })
        .collect())
}

/// `{π̄_w(x_{α,𝐢}) : (α,𝐢) ∈ A_{n,k}, Des(α) ⊆ Des(w) ⊆ Des(α∪𝐢)}`.
pub fn demazure_family<F: Field>(field: &F, n: usize, k: usize) -> Result<Vec<DemazureElement<F>>> {
    let mut jobs = Vec::new();
    for (alpha, i) in ank_index_set(n, k)? {
        for w in admissible_permutations(&alpha, &i)? {
            jobs.push((alpha.clone(), i.clone(), w));
        }
    }
    Ok(jobs
        .into_par_iter()
        .map(|(alpha, i, w)| {
            let x = Polynomial::monomial(field, x_alpha_i(&alpha, &i).expect("length n"));
            let poly = demazure_pi_w(&w, &x, true).expect("same n");
            DemazureElement { alpha, i, w, poly }
        })
        .collect())
}

/// Rank of the images of `polys` in the quotient, in standard-monomial coordinates.
pub fn quotient_rank<F: Field>(ring: &QuotientRing<F>, polys: &[Polynomial<F>]) -> usize {
    let chunks: Vec<Vec<SparseVec<F::Elem>>> = polys
        .par_chunks(64)
        .map(|chunk| {
            let mut memo: HashMap<Monomial, SparseVec<F::Elem>> = HashMap::new();
            chunk.iter().map(|p| ring.coords_with(p, &mut memo)).collect()
        })
        .collect();
    rank(ring.field(), chunks.into_iter().flatten())
}
