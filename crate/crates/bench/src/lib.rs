//! Fixtures shared by the kernel benchmarks.

use qcong_core::IntPoly;

/// `[3^a]_q^2`, the modulus of the central-sum congruence.
pub fn three_power_square(a: u32) -> IntPoly {
    IntPoly::repunit(3usize.pow(a)).square()
}
