//! p-Ferrer diagrams and the squarefree monomial ideals they define.
//!
//! A p-Ferrer diagram is a finite downward-closed set of boxes in `(ℕ*)^p`,
//! stored as a recursively nested weakly decreasing partition. Each box
//! `(α_1, …, α_p)` contributes the generator `x1_{α_1}·…·xp_{α_p}` to the
//! diagram's ideal, and the homological invariants of that ideal are read off
//! the diagonal statistics of the diagram:
//!
//! - [`diagram`]: partitions, boxes, diagonal profiles, last-diagonal removal
//! - [`ideal`]: monomial ideals over grouped variables, minimal primes,
//!   colon ideals, Alexander duality
//! - [`invariants`]: Betti numbers, height, projective dimension, regularity,
//!   the arithmetical-rank certificate, pure-resolution arithmetic
//! - [`series`]: exact Hilbert series, h-polynomials, s-vectors, dual series
//! - [`macaulay`]: M-vectors, revlex segment multicomplexes, realizations
//! - [`oracle`]: brute-force graded Betti numbers and Hilbert functions used to
//!   cross-check every closed form above

pub mod binomial;
pub mod diagram;
pub mod ideal;
pub mod invariants;
pub mod limits;
pub mod macaulay;
pub mod oracle;
pub mod series;

pub use diagram::{Cell, Containment, DiagonalProfile, DiagramError, PFerrerPartition};
pub use ideal::{IdealError, Monomial, MonomialIdeal, PrimeComponent, Variable};
pub use invariants::{AraCertificate, BettiTable, HomologicalSummary};
pub use limits::Limits;
pub use macaulay::{MVector, MacaulayError, Multicomplex, Realization};
pub use oracle::{GradedBettiTable, OracleError};
pub use series::{IntPolynomial, RationalSeries, SeriesError};
