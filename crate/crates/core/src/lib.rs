//! Exact minimal log discrepancies of monomial R-ideals on the affine plane.
//!
//! A monomial R-ideal is a formal product of monomial ideals in two
//! variables raised to positive rational exponents. Its minimal log
//! discrepancy at the origin is read off the Newton polygon: it is
//! nonnegative exactly when the polygon contains (1,1), and in either case
//! some toric divisor computes it. This crate constructs such a witness
//! divisor whose own log discrepancy obeys an explicit bound depending only
//! on the exponent set, and ships an exhaustive lattice oracle to check
//! everything against.
//!
//! All arithmetic is exact: arbitrary-precision rationals everywhere, no
//! floating point.
//!
//! ```
//! use newton_mld::{full_solve, rat, MldValue, RIdeal};
//!
//! let rideal = RIdeal::single(vec![(4, 0), (0, 1)], rat(5, 4))?;
//! let w = full_solve(&rideal)?;
//! assert_eq!(w.mld, MldValue::Finite(rat(0, 1)));
//! assert_eq!((w.divisor.x(), w.divisor.y()), (1, 4));
//! assert!(w.logdisc <= w.bound);
//! # Ok::<(), newton_mld::Error>(())
//! ```

pub mod coeffs;
pub mod error;
pub mod geom;
pub mod io;
pub mod mld;
pub mod newton;
pub mod sample;
pub mod witness;

pub use coeffs::{bound_minus_inf, bound_nonneg, gamma_of, CoefficientSet, GammaResult};
pub use error::{Error, Result};
pub use geom::{
    ceil_lambda, floor_lambda, in_triangle, line_side, parse_rat, rat, rat_int, LineSide, Point,
    Rat,
};
pub use mld::{
    brute_force_oracle, has_negative_within, log_discrepancy, minimal_computing_logdisc, Divisor,
    MldValue, OracleReport,
};
pub use newton::{
    facet_lattice_step, vertex_representable, Facet, LatticeStep, MonomialIdeal, NewtonPolygon,
    RIdeal,
};
pub use witness::{
    classify, full_solve, full_solve_with, witness_minus_infinity, witness_nonnegative, CaseTag,
    WitnessCase, WitnessResult,
};
