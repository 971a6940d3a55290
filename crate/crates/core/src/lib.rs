//! Exact computations with invariant complex structures on real Lie algebras
//! and the special Hermitian metrics they carry.
//!
//! Everything is done over ℚ(i) with arbitrary-precision rationals. The
//! crate builds type-A Chevalley bases, the split and compact real forms,
//! complex structures given as subalgebras `q` with `g = q ⊕ σq`, the
//! Chevalley–Eilenberg calculus on the dual coframe, and the positivity
//! tests used to obstruct Kähler-type metrics.

pub mod complex_structures;
pub mod error;
pub mod exterior;
pub mod flag;
pub mod lie;
pub mod metrics;
pub mod numeric;
pub mod positivity;
pub mod real_forms;
pub mod scenarios;

pub use error::{Error, Result};
