//! Compositions, permutations, ordered set partitions, tableaux and
//! q-analogs, with the descent-type statistics used throughout the crate.

mod composition;
mod osp;
mod permutation;
mod qtpoly;
mod tableau;

pub use composition::{all_compositions, sequence_descents, Composition};
pub use osp::{osp_all, osp_of_shape, OrderedSetPartition};
pub use permutation::{all_permutations, Permutation};
pub use qtpoly::{
    binomial, factorial, q_binomial, q_factorial, q_int, q_multinomial, q_stirling, stirling2,
    QTPoly,
};
pub use tableau::{partitions, schensted, standard_tableaux, StandardTableau};
