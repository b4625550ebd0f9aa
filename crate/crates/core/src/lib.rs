//! Exact machinery for deciding pure binomial inequalities in homomorphism
//! numbers of the almost-star trees `S_0, S_{2,1^0}, ..., S_{2,1^{m-1}}`.
//!
//! The toolkit is organized around the explicit rational polyhedral cone that
//! carries every valid inequality of this shape:
//!
//! * [`graph`] — simple graphs, the almost-star patterns, and the realizing
//!   graph families (stars, balanced complete bipartite graphs, path blow-ups).
//! * [`hom`] — exact homomorphism counting (brute-force oracle plus a tree
//!   dynamic program) and profile vectors.
//! * [`cone`] / [`simplex`] — exact rational polyhedral cones: extreme rays by
//!   double description, dual-cone membership with verifiable multiplier or
//!   Farkas certificates, and a small two-phase simplex.
//! * [`trop`] — the explicit profile cone `Q(m)`, the star-family cone, the
//!   named extreme-ray families with their tropical decompositions, and
//!   closed-form profiles of the realizing families.
//! * [`certify`] — the headline operation: decide a binomial inequality by
//!   linear programming over `Q(m)`, returning a conical-combination
//!   certificate or a refuting ray with a concrete counterexample graph.
//! * [`hde`] — homomorphism domination exponents via the polymatroid min-max
//!   linear program.
//! * [`falsify`] — seeded empirical checking of inequalities on structured
//!   families and random graphs, with exact big-integer comparisons.
//!
//! All certification arithmetic is exact (big integers and big rationals);
//! floating point appears only in slope diagnostics.

pub mod certify;
pub mod cone;
pub mod error;
pub mod falsify;
pub mod graph;
pub mod hde;
pub mod hom;
pub mod num;
pub mod simplex;
pub mod trop;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
