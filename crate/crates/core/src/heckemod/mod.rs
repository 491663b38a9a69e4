//! Finite-dimensional modules over the 0-Hecke algebra `H_n(0)`, given by explicit
//! matrices for the generators `π̄_i = π_i − 1`.

mod algebra;
mod constructions;
mod module;

use std::collections::BTreeMap;

pub use algebra::HeckeElement;
pub use constructions::{
    module_n, module_osp, module_osp_all, module_projective, module_projective_pair, module_quotient, modules_n_all,
    MAX_HECKE_N,
};
pub use module::{check_isomorphism, label_map, FiniteHeckeModule, IsomorphismReport};

use crate::combinatorics::{all_compositions, all_permutations, binomial, Composition};
use crate::field::Field;

/// `β ↦ binom(n − ℓ(β), k − ℓ(β))`, nonzero entries only.
pub fn decomposition_multiplicities(n: usize, k: usize) -> BTreeMap<Composition, u64> {
    let mut out = BTreeMap::new();
    for b in all_compositions(n) {
        let l = b.len();
        if l <= k {
            let m = binomial((n - l) as i64, (k - l) as i64);
            if m > 0 {
                out.insert(b, m);
            }
        }
    }
    out
}

/// `#{w ∈ S_n : Des(w) = Des(γ)}`, the dimension of `P_γ`.
pub fn descent_class_size(gamma: &Composition) -> usize {
    let d = gamma.descents();
    all_permutations(gamma.n()).iter().filter(|w| w.descents() == d).count()
}

/// Multiplicities of simple tops `C_γ` in `M`, via `dim Hom(M, C_γ)`.
///
/// When `M` is projective these are the multiplicities of the summands `P_γ`;
/// compare [`summand_dimension`] against `M.dim()` to confirm.
pub fn projective_summands<F: Field>(m: &FiniteHeckeModule<F>) -> BTreeMap<Composition, u64> {
    all_compositions(m.n)
        .into_iter()
        .filter_map(|g| {
            let c = m.hom_to_simple(&g.descents()) as u64;
            (c > 0).then_some((g, c))
        })
        .collect()
}

/// `Σ_γ mult(γ) · dim P_γ`.
pub fn summand_dimension(mult: &BTreeMap<Composition, u64>) -> u64 {
    mult.iter().map(|(g, c)| c * descent_class_size(g) as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{factorial, stirling2, OrderedSetPartition};
    use crate::field::Rationals;
    use crate::groebner::QuotientRing;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn osp_action_example() {
        let q = Rationals;
        let m = module_osp(&q, &comp(&[2, 1, 3]));
        let sigma = OrderedSetPartition::parse("25|6|134").unwrap().to_bar_string();
        let j = m.labels.iter().position(|l| *l == sigma).unwrap();
        let e = vec![(j, q.one())];
        // π_i = π̄_i + 1
        let pi = |i: usize| crate::linalg::axpy(&q, &m.apply(i, &e), &q.one(), &e);
        assert!(pi(1).is_empty());
        let other = OrderedSetPartition::parse("35|6|124").unwrap().to_bar_string();
        let k = m.labels.iter().position(|l| *l == other).unwrap();
        let mut want = vec![(j, q.one()), (k, q.one())];
        want.sort_by_key(|t| t.0);
        assert_eq!(pi(2), want);
        assert_eq!(pi(3), e);
    }

    #[test]
    fn relations_and_negative_control() {
        let q = Rationals;
        for n in 1..=5 {
            for a in all_compositions(n) {
                assert!(module_osp(&q, &a).check_relations(), "{a:?}");
            }
        }
        let m = module_osp_all(&q, 4, 2).unwrap();
        assert_eq!(m.dim(), 14);
        assert!(m.check_relations());
        assert!(!m.corrupted(2, 3).check_relations());
        let p = module_projective_pair(&q, &comp(&[4]), &comp(&[2, 2])).unwrap();
        assert!(p.check_relations());
    }

    #[test]
    fn projective_dimensions_n4() {
        let q = Rationals;
        for (p, d) in [(vec![4], 1), (vec![1, 3], 3), (vec![2, 2], 5), (vec![3, 1], 3)] {
            let m = module_projective(&q, &comp(&p)).unwrap();
            assert_eq!(m.dim(), d);
            assert!(m.check_relations());
        }
        assert!(module_projective_pair(&q, &comp(&[2, 2]), &comp(&[4])).is_err());
    }

    #[test]
    fn simple_top_of_projective() {
        let q = Rationals;
        for a in all_compositions(4) {
            let m = module_projective(&q, &a).unwrap();
            let g = m.generator_index.unwrap();
            let des = a.descents();
            for i in 1..4 {
                let img = m.apply(i, &vec![(g, q.one())]);
                let diag = img.iter().find(|t| t.0 == g).map(|t| t.1.clone()).unwrap_or_else(|| q.zero());
                let want = if des.contains(&i) { q.from_i64(-1) } else { q.zero() };
                assert_eq!(diag, want, "{a:?} i={i}");
            }
            let mut one = BTreeMap::new();
            one.insert(a.clone(), 1);
            assert_eq!(projective_summands(&m), one);
        }
    }

    #[test]
    fn osp_shape_matches_pair_module() {
        let q = Rationals;
        for n in 1..=5 {
            let top = comp(&[n]);
            for a in all_compositions(n) {
                let osp = module_osp(&q, &a);
                let pair = module_projective_pair(&q, &top, &a).unwrap();
                let map = label_map(&osp, &pair, |l| OrderedSetPartition::parse(l).unwrap().word().to_compact()).unwrap();
                assert!(check_isomorphism(&osp, &pair, &map).unwrap().ok, "{a:?}");
                // one P_γ per γ with (n) ⪯ γ ⪯ α
                let mult = projective_summands(&pair);
                assert_eq!(mult.len(), top.interval(&a).len());
                assert_eq!(summand_dimension(&mult), pair.dim() as u64);
            }
        }
    }

    #[test]
    fn multiplicities_formula() {
        let m = decomposition_multiplicities(4, 2);
        assert_eq!(m[&comp(&[4])], 3);
        assert_eq!(m[&comp(&[1, 3])], 1);
        assert_eq!(m.len(), 4);
        for n in 1..=5 {
            for k in 1..=n {
                let m = decomposition_multiplicities(n, k);
                let total = factorial(k) * stirling2(n, k);
                assert_eq!(summand_dimension(&m), total);
                let osp = module_osp_all(&Rationals, n, k).unwrap();
                assert_eq!(projective_summands(&osp), m, "n={n} k={k}");
            }
            assert!(decomposition_multiplicities(n, n).values().all(|&c| c == 1));
            assert_eq!(decomposition_multiplicities(n, n).len(), 1 << (n - 1));
            assert_eq!(decomposition_multiplicities(n, 1).len(), 1);
        }
    }

    #[test]
    fn n_modules_for_s42() {
        let q = Rationals;
        let ring = QuotientRing::s_nk(&q, 4, 2).unwrap();
        let all = modules_n_all(&ring, 2).unwrap();
        assert_eq!(all.iter().map(|t| t.2.dim()).sum::<usize>(), 14);
        let find = |p: &[usize], i: &[usize]| all.iter().find(|t| t.0 == comp(p) && t.1 == i).unwrap().2.clone();
        let cases: [(&[usize], &[usize], Vec<Vec<usize>>); 4] = [
            (&[3, 1], &[0, 0, 0, 0], vec![vec![3, 1]]),
            (&[4], &[1, 1, 0, 0], vec![vec![4], vec![2, 2]]),
            (&[4], &[1, 0, 0, 0], vec![vec![4], vec![1, 3]]),
            (&[4], &[0, 0, 0, 0], vec![vec![4]]),
        ];
        for (a, i, summands) in cases {
            let m = find(a, i);
            assert!(m.check_relations() && m.check_grading());
            let got: Vec<Composition> = projective_summands(&m).into_keys().collect();
            let mut want: Vec<Composition> = summands.iter().map(|p| comp(p)).collect();
            want.sort();
            assert_eq!(got, want, "{a:?} {i:?}");
            let upper = comp(a).union(i).unwrap();
            let p = module_projective_pair(&q, &comp(a), &upper).unwrap();
            let map: Vec<usize> = (0..m.dim()).collect();
            assert_eq!(m.labels, p.labels);
            assert!(check_isomorphism(&m, &p, &map).unwrap().ok);
        }
        let whole = module_quotient(&ring).unwrap();
        assert!(whole.check_relations() && whole.check_grading());
        assert_eq!(projective_summands(&whole), decomposition_multiplicities(4, 2));
    }

    #[test]
    fn identity_map_is_isomorphism() {
        let m = module_osp_all(&Rationals, 4, 3).unwrap();
        let id: Vec<usize> = (0..m.dim()).collect();
        assert!(check_isomorphism(&m, &m, &id).unwrap().ok);
        let bad = m.corrupted(1, 0);
        assert_eq!(check_isomorphism(&m, &bad, &id).unwrap().first_failing_generator, Some(1));
    }
}
