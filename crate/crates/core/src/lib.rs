//! Artin n-presentations of 3-manifold groups, framed block-twist pure
//! braids, and decision procedures for positive presentations.
//!
//! Arithmetic is exact throughout. Words in the free group are kept freely
//! reduced; abelian invariants are generic over the integer type.

pub mod artin;
pub mod classifier;
pub mod error;
pub mod freegroup;
pub mod presenter;
pub mod presets;
pub mod smith;
pub mod twist;

pub use artin::{substitute_conjugates, AbelianInvariants, ArtinPresentation};
pub use classifier::{
    admits_positive, classify_small3, enumerate_positive, matches_family_n2, CaseTag, EnumMode, EnumOptions, Verdict,
};
pub use error::{Error, Result};
pub use freegroup::{Letter, Word};
pub use presenter::{positivity_slack, relators_from_tree, relators_small3};
pub use smith::{invariant_factors, ExactInteger};
pub use twist::{small3, Block, BraidWord, FramedTwistTree, NegativeMode, Sigma, TwistTree, Violation};

/// Abelian invariants over machine integers.
pub type AbelianInvariants64 = AbelianInvariants<i64>;

/// Abelian invariants over arbitrary-precision integers.
pub type BigAbelianInvariants = AbelianInvariants<num_bigint::BigInt>;
