//! Exact scalar arithmetic and exact linear algebra.
//!
//! Everything downstream (bimodule calculus, hom-space solving, the
//! decategorified layer) reduces to arithmetic in ℚ or in the real
//! cyclotomic fields ℚ(δ) with δ = 2cos(π/n), and to Gaussian
//! elimination with exact pivoting. No floats, no thresholds.

mod matrix;
mod numberfield;
mod poly;
mod solve;

pub use matrix::{ExactMatrix, QMatrix};
pub(crate) use matrix::rref as matrix_rref;
pub use numberfield::{quantum_integer, NumberFieldElem};
pub use poly::{minpoly_delta, LaurentIntPoly};
pub use solve::LinearSystem;

use num::BigRational;

/// Exact rational scalar: always reduced, positive denominator.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational p/q. Panics on zero denominator.
pub fn qr(p: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(p.into(), den.into())
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((p, den)) = s.split_once('/') {
        let p: num::BigInt = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: num::BigInt = den.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if den == 0.into() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rational::new(p, den))
    } else {
        let p: num::BigInt = s.parse().map_err(|_| format!("bad rational {s:?}"))?;
        Ok(Rational::from_integer(p))
    }
}

/// Render a rational as "p" or "p/q".
pub fn rational_string(x: &Rational) -> String {
    if x.denom() == &num::BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Scalar operations shared by ℚ and ℚ(δ); the matrix code is generic
/// over this.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
}

impl Scalar for Rational {
    fn zero() -> Self {
        q(0)
    }
    fn one() -> Self {
        q(1)
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Scalar::is_zero(self), "inverse of zero");
        self.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_roundtrip() {
        assert_eq!(parse_rational("3/4").unwrap(), qr(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), q(-7));
        assert_eq!(parse_rational("6/-4").unwrap(), qr(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_string(&qr(-3, 2)), "-3/2");
        assert_eq!(rational_string(&q(5)), "5");
    }
}
