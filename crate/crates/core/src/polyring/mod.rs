//! Sparse polynomials under the neglex order, symmetric-function
//! constructors and Demazure-type operators.

mod demazure;
mod monomial;
mod polynomial;
mod symmetric;

pub use demazure::{
    demazure_pi, demazure_pi_w, demazure_pibar, demazure_word, divided_difference, key_polynomial,
    key_polynomial_with, leibniz_check,
};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use symmetric::{complete_h, elementary_e, elementary_in, gs_monomial, skip_monomial, x_alpha_i};
