//! Exact computer algebra for plane-curve singularities in `S = k[x,y,z]`:
//! Gröbner bases over `Q` and `Q(sqrt(d))`, Schreyer syzygies, minimal graded
//! free resolutions of Milnor algebras `S/J_f`, graded Betti tables, and the
//! strong-Ziegler comparison of conic-line arrangements with matching
//! combinatorics.
//!
//! Start with [`catalog`] for the bundled arrangements, [`curvelab`] for the
//! analysis pipeline, or the `examples/` directory for runnable tours of each
//! capability. The `ziegler` binary exposes the same workflows for batch use.

pub mod catalog;
pub mod cli;
pub mod curvelab;
pub mod groebner;
pub mod polyring;
pub mod resolution;
pub mod scalars;
pub mod textio;

pub use curvelab::{
    analyze, compare_betti, curve_polynomial, jacobian_ideal, milnor_resolution, singular_report,
    ziegler_verdict, Curve, Verdict,
};
pub use resolution::{betti_table, free_resolution, minimize, BettiTable, FreeResolution};
pub use scalars::{FieldElement, FieldKind};
