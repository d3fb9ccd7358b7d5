//! Rational scalars. Every coefficient in the crate is a `BigRational`, kept
//! in lowest terms with a positive denominator by `num-rational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Scalar {
    Scalar::from_integer(n)
}

/// The integer value, if `x` is an integer fitting in `i64`.
pub fn to_i64(x: &Scalar) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn is_unit_magnitude(x: &Scalar) -> bool {
    x.abs().is_one()
}

/// Decimal text: `n` or `n/d`.
pub fn format(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(format(&x), "-3/2");
        assert_eq!(format(&int(7)), "7");
        assert_eq!(to_i64(&ratio(8, 2)), Some(4));
        assert_eq!(to_i64(&ratio(1, 2)), None);
    }
}
