//! Exact scalars: rationals, Laurent polynomials in `v = q^{1/2}`, and
//! truncated power series in `X = q^{-s}`.

pub mod laurent;
pub mod rational;
pub mod series;

pub use laurent::LaurentScalar;
pub use rational::{format_rational, int, parse_rational, parse_rational_list, rat, Rational};
pub use series::{series_invert, TruncSeries, XPoly};
