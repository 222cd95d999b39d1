//! Exact dense polynomial arithmetic over ℤ and the exact rationals.
//!
//! Every congruence checked by this crate lives in ℤ[q]. Polynomials are
//! stored densely, lowest degree first, with no trailing zero coefficients.

mod intpoly;
mod rat;
mod text;

pub use intpoly::{Degree, IntPoly};
pub use rat::BigRat;
pub use text::ParsePolyError;
