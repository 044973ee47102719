//! Exact scalar types shared across the crate.
//!
//! Every quantity that enters an equality test (chamber membership,
//! series coefficients) is an arbitrary-precision rational or a Gaussian
//! rational; no floating point appears anywhere in the library.

use num::bigint::Sign;
use num::{BigInt, BigRational, Complex, One, Signed, Zero};

/// Arbitrary-precision rational.
pub type Rat = BigRational;

/// Gaussian rational a + bi with exact components.
pub type GaussRat = Complex<Rat>;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics on d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Gaussian rational from integer parts.
pub fn gauss_int(re: i64, im: i64) -> GaussRat {
    Complex::new(rat_int(re), rat_int(im))
}

/// Sign of a rational as -1, 0, +1.
pub fn sign(x: &Rat) -> i8 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Complex conjugate.
pub fn conj(z: &GaussRat) -> GaussRat {
    Complex::new(z.re.clone(), -z.im.clone())
}

/// Renders a rational as `n` or `n/d` with the sign on the numerator.
pub fn rat_display(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Serde adapter rendering rationals as exact `n` or `n/d` strings, the
/// form used by every report.
pub mod rat_string {
    use super::{rat_display, Rat};
    use num::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_display(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let text = String::deserialize(d)?;
        let (n, den) = match text.split_once('/') {
            Some((n, den)) => (n, den),
            None => (text.as_str(), "1"),
        };
        let n: BigInt = n.trim().parse().map_err(serde::de::Error::custom)?;
        let den: BigInt = den.trim().parse().map_err(serde::de::Error::custom)?;
        if den == BigInt::from(0) {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rat::new(n, den))
    }
}

/// Renders a Gaussian rational as `re+im*i` with exact components.
pub fn gauss_display(z: &GaussRat) -> String {
    let re = rat_display(&z.re);
    if z.im.is_zero() {
        return re;
    }
    let im = rat_display(&z.im.abs());
    let op = if sign(&z.im) < 0 { '-' } else { '+' };
    format!("{re}{op}{im}i")
}
