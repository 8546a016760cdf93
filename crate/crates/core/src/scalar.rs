//! Exact scalar arithmetic.
//!
//! Every coefficient in this crate is an arbitrary-precision rational,
//! kept in lowest terms with a positive denominator. All arithmetic is
//! exact; there is no floating point and no tolerance anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational scalar.
pub type Rational = BigRational;

/// Shorthand for an integer scalar.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for the fraction `num/den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let x = frac(4, -6);
        assert_eq!(x, frac(-2, 3));
        assert_eq!(*x.numer(), BigInt::from(-2));
        assert_eq!(*x.denom(), BigInt::from(3));
        assert!(x.denom().is_positive());

        let y = frac(0, 17);
        assert!(y.is_zero());
        assert_eq!(*y.denom(), BigInt::from(1));
    }

    #[test]
    fn arithmetic_is_exact() {
        // (a/b)+(c/d) and (a/b)*(c/d) reproduce rational arithmetic exactly.
        let a = frac(1, 3);
        let b = frac(1, 6);
        assert_eq!(a.clone() + b.clone(), frac(1, 2));
        assert_eq!(a.clone() * b.clone(), frac(1, 18));
        assert_eq!(a.clone() - b.clone(), frac(1, 6));
        assert_eq!(a / b, int(2));

        // No rounding on repeated operations: summing 1/10 ten times is 1.
        let tenth = frac(1, 10);
        let mut acc = zero();
        for _ in 0..10 {
            acc += tenth.clone();
        }
        assert_eq!(acc, one());
    }

    #[test]
    fn big_values_do_not_overflow() {
        let mut x = int(10);
        for _ in 0..40 {
            x = x.clone() * x; // 10^(2^40 / ...) grows far past machine ints
            if x.numer().bits() > 4096 {
                break;
            }
        }
        assert!(x.numer().bits() > 64);
    }
}
