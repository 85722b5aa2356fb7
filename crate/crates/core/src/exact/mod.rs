//! Exact substrate: truncated univariate series and sparse bivariate
//! polynomials over an exact field.

mod bipoly;
mod series;

pub use bipoly::{BiPoly, Exps};
pub use series::{Order, TruncSeries};
