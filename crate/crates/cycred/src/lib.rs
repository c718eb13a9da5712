//! Calculus of cyclically reduced words.
//!
//! The free group on an alphabet `X` sits inside the free monoid on
//! `X ∪ X⁻¹` as the set of reduced words; the cyclically reduced words are
//! those all of whose rotations stay reduced. Where the reduced product
//! `u · v = ρ(uv)` makes the reduced words a group, the cyclically reduced
//! product `u * v = ρ̂(uv)` is not associative, and this crate implements
//! the machinery that measures exactly how far it is from being one:
//!
//! - [`word`]: words, reduction, cyclic reduction with conjugator
//!   witnesses, both products, rotations, reversal and primitive roots;
//! - [`equations`]: Levi splits, factorization alignments, maximal
//!   cancellation and the position of a product's cyclically reduced core
//!   relative to its factors;
//! - [`identities`]: identities among relations — sequences of conjugated
//!   relators, Peiffer deletions and exchanges, basic and strictly basic
//!   certification, normal forms, bounded collapse search;
//! - [`twisted`]: certificate-producing witnesses showing that
//!   `u * (u⁻¹ * w)` recovers `ρ̂(w)` up to rotation once `u` is replaced
//!   by a suitable rotation, or that `w` rotates onto a literal conjugated
//!   concatenation `u′ h (u⁻¹*w) h⁻¹`; plus an exhaustive brute-force
//!   oracle;
//! - [`sweep`]: enumeration of all reduced words up to a length bound and
//!   the pair-by-pair verification harness.
//!
//! Words use a compact text notation: lowercase letters are generators
//! (`a` is generator 1), uppercase their inverses, `"1"` the empty word.
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program; the `cycred` binary exposes the same operations as
//! subcommands.

pub mod equations;
pub mod identities;
pub mod sweep;
pub mod twisted;
pub mod word;

pub use equations::{
    align_factorizations, decompose_product, levi_split, max_cancellation, BarPlacement,
    EquationError, LeviSide, LeviSolution, ProductDecomposition,
};
pub use identities::{
    format_identity, format_terms, parse_identity, parse_terms, ConjugatedRelator, ExchangeKind,
    IdentityError, IdentitySequence, PeifferMove, TwoSidedIdentity,
};
pub use sweep::{
    enumerate_reduced_words, reduced_words_up_to, run_sweep, FailureSample, SweepConfig,
    SweepError, SweepReport,
};
pub use twisted::{
    cancellation_witness, symmetric_witness, oracle_witness_search, twist_left, twist_right,
    twist_rotated, twist_split, twisted_associativity, verify_witness, AssocWitness,
    CancellationWitness, SymmetricWitness, OracleWitnesses, ProductSide, RotationMode,
    TwistError, TwistWitness, VerificationReport, WitnessRecord,
};
pub use word::{
    format_word, parse_word, CyclicReductionWitness, Letter, NotationError, ParseError,
    PrimitiveRoot, Sign, Word,
};
