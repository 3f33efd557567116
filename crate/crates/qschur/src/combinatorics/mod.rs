//! Partitions, tableaux, residues, degree statistics, ladders, and the
//! partition transforms feeding the Fock-space and Hecke modules.

pub mod partition;
pub mod perm;
pub mod tableau;

pub use partition::{
    e_decompose, hat_tilde, ladder_monomial, partitions_of, partitions_of_unbounded, residue_of,
    Composition, Dominance, Node, Partition, DEFAULT_BOUND,
};
pub use perm::Perm;
pub use tableau::{coset_word, standard_tableaux, standard_tableaux_bounded, ResidueSeq, StandardTableau};
