//! Conjugacy decisions in braid groups and their finite-index-style
//! subgroups, with explicit conjugating elements.
//!
//! The crate has three layers:
//!
//! * a Garside engine for the braid group `B_n` ([`braid`], [`conjugacy`],
//!   [`centralizer`]): left normal forms, the word problem, summit sets,
//!   conjugacy decisions with witnesses, and centralizer generating sets;
//! * a subgroup layer ([`subgroup`]) that settles conjugacy inside a
//!   subgroup `H = phi^-1(K')` of `B_n`, given a homomorphism `phi` onto a
//!   group where membership is decidable and `K'` is finite;
//! * ready-made instances ([`instances`]): braid groups fixing a set of
//!   strands, colored braids, the Artin groups of type B and affine types A
//!   and C realized inside braid groups, and braid groups of the punctured
//!   disc.

pub mod braid;
pub mod centralizer;
pub mod conjugacy;
pub mod error;
pub mod instances;
pub mod perm;
pub mod subgroup;
pub mod testkit;

pub use braid::{equals, BraidWord, NormalForm};
pub use centralizer::centralizer_generators;
pub use conjugacy::{
    conjugate_in_braid_group, summit_representative, summit_set, ConjugacyCertificate, SummitSet,
};
pub use error::{Error, Result};
pub use instances::{
    affine_a_context, affine_c_context, alternating_product, bn_x_context, colored_context,
    ib_context, strand_deletion, type_b_context, verify_homomorphism, ArtinPresentation,
    RealizedGroup,
};
pub use perm::{build_chain, enumerate_sigma_x, PermGroupChain, Permutation};
pub use subgroup::{
    conjugate_in_subgroup, lift_conjugator, subgroup_centralizer, GroupContext, KElement, KPrime,
    PhiMap, PreimageTriple,
};
