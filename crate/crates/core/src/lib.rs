//! Exact symbolic kernel for the ℓ-weight monoid and q-character ring of
//! shifted twisted quantum affine algebras, covering all six twisted affine
//! families A₂⁽²⁾, A₂ₙ⁽²⁾, A₂ₙ₋₁⁽²⁾, Dₙ₊₁⁽²⁾, E₆⁽²⁾ and D₄⁽³⁾.
//!
//! Modules:
//! - [`cartan`]: folded Cartan matrices, σ-orbits, symmetrizers, relation
//!   prefactors (P-polynomials, g-functions).
//! - [`scalar`]: the coefficient ring ℚ(ζ_L)[q^{±1/2}, u^{±1}] and spectral
//!   parameters ε·q^r·u^e.
//! - [`ratfun`]: factored rational functions in z with exact expansions.
//! - [`lweight`]: ℓ-weights, the generators Y/Ỹ/Ψ/A, evaluation, canonical
//!   factorization, shift maps and the deformed coproduct.
//! - [`classify`]: lattice and dominance predicates, the weight order, and
//!   the A₂⁽²⁾ Ψ₀Ψ₊ factorization.
//! - [`qchar`]: the q-character ring, the explicit A₂⁽²⁾ expansions, the
//!   Nakajima cone order, and the Borel restriction product.
//! - [`relcheck`]: machine verification of the structural identities
//!   (symmetrizer, marks, g-reciprocity, P-divisibility, δ-difference
//!   calculus, u-rescaling homogeneity).
//! - [`parse`]: the expression grammar shared by the CLI and config files.

pub mod cartan;
pub mod classify;
pub mod error;
pub mod json;
pub mod lweight;
pub mod parse;
pub mod qchar;
pub mod ratfun;
pub mod relcheck;
pub mod scalar;

pub use error::Error;
