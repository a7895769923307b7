//! Exact enumeration and construction of integral Apollonian gaskets.
//!
//! Irreducible integral gaskets are in one-to-one correspondence with the
//! solutions `(B, µ, k, n)` of `B² + µ² = k·n` subject to `3µ² ≤ B²`,
//! `2µ ≤ k ≤ n` and `gcd(B, k, n) = 1`. This crate enumerates those
//! solutions, expands any of them into circles with exact rational centers,
//! computes the Pythagorean triples carried by tangent pairs together with
//! their linear recurrence, and renders packings to SVG.
//!
//! ```
//! use apollon::enumeration::{solve_master, quintet};
//! use apollon::numerics::int;
//!
//! let keys = solve_master(&int(6));
//! assert_eq!(keys.len(), 3);
//! assert_eq!(quintet(&keys[2]).to_string(), "(-6,11,14,15,23)");
//! ```

pub mod cli;
pub mod descartes;
pub mod enumeration;
pub mod error;
pub mod frames;
pub mod numerics;
pub mod render;
pub mod symbols;

pub use enumeration::{BendQuintet, GasketKey, GasketRecord, SymmetryClass};
pub use error::{Error, Result};
pub use frames::{Frame, TransitionMatrix, TriangleTriple};
pub use numerics::{Int, Rat};
pub use render::{LabelMode, RenderOptions};

pub use symbols::{CircleSymbol, DescartesConfig, Packing};
