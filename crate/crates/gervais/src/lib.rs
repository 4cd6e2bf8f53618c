//! Gervais presentation of the mapping class group Mod(S_{g,b}), van Kampen
//! diagrams over it, and a constructive transformation of fillings of
//! ball-avoiding loops into certified avoidant fillings.
//!
//! The crate is organized around the pipeline:
//!
//! 1. [`curves`] enumerates the Gervais curves and their intersection table;
//! 2. [`presentation`] builds the twist generators and the commuting / braid
//!    / star / degenerate-star relators, each with a common commuter;
//! 3. [`raag`] measures twist words in the right-angled Artin group on the
//!    non-intersection graph (exact in RAAG mode, an upper bound for Mod(S));
//! 4. [`lattice`] builds ball-avoiding paths and disk fillings in the flat
//!    cosets, realized as integer lattices;
//! 5. [`diagram`] holds the half-edge van Kampen diagrams;
//! 6. [`transform`] pushes cells by commuter powers, connects them with
//!    commuting-square strips, fills per-vertex holes in flats, and certifies
//!    the avoidance of everything it builds;
//! 7. [`harness`] generates random fillings, runs (r, l) sweeps, and fits
//!    growth exponents.
//!
//! See the `examples/` directory for one runnable program per capability and
//! the `gervais` binary for the equivalent CLI subcommands.

pub mod curves;
pub mod diagram;
pub mod error;
pub mod harness;
pub mod lattice;
pub mod presentation;
pub mod raag;
pub mod transform;

pub use curves::{build_incidence, enumerate_curves, validate_incidence, CurveId, SurfaceSpec};
pub use presentation::{build_presentation, GervaisPresentation, Relator, RelatorKind};
pub use raag::{geodesic_length, raag_from_presentation, reduce, CommutationGraph};
