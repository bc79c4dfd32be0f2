//! Exact-arithmetic computations with finitely presented connected graded
//! algebras: truncated noncommutative Groebner bases, quadratic (Koszul)
//! duals with their Frobenius structure, Nakayama automorphisms,
//! homological determinants, and turnkey verifiers for the identities that
//! relate these invariants across smash products, graded twists, Ore
//! extensions, tensor products, and quotients by normal elements.
//!
//! Everything is computed over exact fields (rationals, prime fields,
//! cyclotomic fields), so every identity check is an equality of canonical
//! representations.

pub mod algebra;
pub mod catalog;
pub mod construct;
pub mod error;
pub mod expr;
pub mod free;
pub mod koszul;
pub mod matrix;
pub mod rewrite;
pub mod rng;
pub mod scalar;
pub mod verify;

pub use algebra::{
    AutomorphismOrder, GradedAlgebra, GradedAutomorphism, HdetRule, KnownData, Provenance,
    DEFAULT_ORDER_CAP,
};
pub use construct::{
    eigenvalue_on, graded_twist, hi1_candidate, inner_witness, nakayama_of_quotient,
    normality_witness, ore_extension, quadratic_presentation, quotient_by_normal,
    rectify_diagonal, smash_product, tensor_automorphism, tensor_product, NormalityWitness,
    SmashAlgebra, SmashAutomorphismCandidate, SmashElement, DEFAULT_GROUP_CAP,
};
pub use error::{Error, Result};
pub use free::{GeneratorTable, Multidegree, NcPolynomial, Word};
pub use koszul::{
    certify_koszul_as_regular, hdet_koszul, hdet_lookup, nakayama_koszul, quadratic_dual,
    FrobeniusData, KoszulCertificate, QuadraticData,
};
pub use matrix::Matrix;
pub use rewrite::{buchberger_truncated, HilbertPrefix, RewriteSystem};
pub use scalar::{root_of_unity_solve, FieldSpec, RootSolution, Scalar};
pub use verify::{
    hdet_any, nakayama_data, verify_center, verify_hdet_descent, verify_hi1_cy, verify_hi2,
    verify_hi2_against, verify_hi3, verify_ore_hdet, verify_quotient, verify_tensor, IdentityTag,
    NakayamaData, Verdict, VerdictKind,
};
