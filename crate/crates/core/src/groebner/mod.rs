//! Buchberger's algorithm under neglex, the ideals `J_{n,k}`, quotient
//! rings and the standard-monomial and Garsia–Stanton type bases of `S_{n,k}`.

mod basis;
mod gs;
mod nonskip;
mod quotient;
mod theorem;

pub use basis::{buchberger, interreduce, s_polynomial, GroebnerBasis, Ideal};
pub use gs::{
    admissible_permutations, ank_index_set, classical_family, demazure_family, gs_index_set, i_prime,
    quotient_rank, DemazureElement,
};
pub use nonskip::{cnk_direct, gamma_star, kappa_sets, staircase_monomials, staircases};
pub use quotient::{standard_monomials, standard_monomials_of, QuotientRing};
pub use theorem::{theorem_family, verify_groebner_theorem, GroebnerTheoremReport};
