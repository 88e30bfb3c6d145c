//! Artin braid words and the abelian invariants of pure braids.
//!
//! Strands are named by their starting position and threaded through the
//! word; `σ_i` contributes `+1` to the crossing count of the two strands it
//! exchanges, so `ψ(σ₁²) = 1`.

mod linking;
pub mod samples;
mod word;

pub use linking::{
    abelianization_rank, conjugation_image, hub_property, in_commutator_subgroup, linking_matrix, LinkingMatrix,
};
pub use word::{concentric_generator, conjugate, is_pure, permutation_of, BraidWord, Permutation};
