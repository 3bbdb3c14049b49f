//! Exact, desk-scale homotopy theory of towers of chain complexes.
//!
//! The engine models spectra as bounded chain complexes of finitely generated
//! free abelian groups (homology standing in for stable homotopy), represents
//! pro-objects as N-indexed towers with realized windows and symbolic tails,
//! and computes generalized cohomology of pro-spectra through the
//! Atiyah-Hirzebruch exact couple with explicit conditional-convergence
//! diagnostics. All arithmetic is exact integer linear algebra; every
//! asymptotic verdict carries a scope marker (window-proven or tail-proven).
//!
//! Degree conventions: `[X, Y]^r = [Σ^{-r} X, Y] = [X, Σ^r Y]`, and cohomology
//! `H^r(X; A)` is the colimit over levels of `[X_s, Σ^r HA]`, so a complex
//! with homology `Z` in degree `2` has `H^2(-; Z) = Z`.

pub mod abelian;
pub mod ahss;
pub mod complexes;
pub mod matrix;
pub mod procat;
pub mod prospectra;
pub mod verdict;

pub use verdict::{Scope, Verdict};
