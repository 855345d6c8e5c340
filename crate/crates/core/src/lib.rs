//! Finite fields 𝔽_{q^n} as Frobenius modules over 𝔽_q[x].
//!
//! The crate classifies elements of 𝔽_{q^n} by normality, by normal α-depth
//! (β, β − α, …, β − (b−1)α all normal) and by whether every Galois conjugate
//! keeps that depth ("sociable") or not ("lonely"). Every closed-form count
//! is paired with an exhaustive enumeration over all q^n elements.
//!
//! Layers, bottom up:
//! - [`field`]: the tower 𝔽_p ⊆ 𝔽_q ⊆ 𝔽_{q^n}, Frobenius and trace
//! - [`poly`], [`cyclotomic`]: 𝔽_q[x], Φ_q and the factorization of xⁿ − 1
//! - [`frobenius`]: circle action, annihilators, φ_α and the primary decomposition
//! - [`depth`]: normal α-depth and the Φ_b count
//! - [`sociability`]: lonely/sociable classification and closed-form counts

pub mod cyclotomic;
pub mod depth;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod linalg;
pub mod nt;
pub mod poly;
pub mod report;
pub mod sociability;

pub use cyclotomic::{euler_phi_q, factor_xn_minus_1, CyclotomicFactor, CyclotomicFactorization};
pub use depth::{DepthQuery, OneDepthReport};
pub use enumerate::EnumOptions;
pub use error::{Error, Result};
pub use field::{ExtCtx, FieldCtx, FieldElem, Fq};
pub use frobenius::{FrobeniusModule, NormalBasisMap, NormalEquivalences, PrimaryDecomposition, TraceNormalization};
pub use poly::{Poly, PolyRing};
pub use report::{ExactInt, ReportRecord};
pub use sociability::{FormulaKind, SociabilityReport, TfaeSociable};
