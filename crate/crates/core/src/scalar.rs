//! Exact rational arithmetic helpers.

use alloc::string::{String, ToString};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Arbitrary-precision rational; every index and bound value is one of these.
pub type ExactScalar = BigRational;

pub fn int(v: impl Into<BigInt>) -> ExactScalar {
    ExactScalar::from_integer(v.into())
}

/// Binomial coefficient, zero when `k > n`.
pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn pow(base: impl Into<BigInt>, exp: usize) -> BigInt {
    Pow::pow(base.into(), exp)
}

pub fn pow_ratio(base: &ExactScalar, exp: usize) -> ExactScalar {
    Pow::pow(base, exp)
}

/// Exact square root of a nonnegative rational if it is a perfect square.
pub fn exact_sqrt(x: &ExactScalar) -> Option<ExactScalar> {
    if x.is_negative() {
        return None;
    }
    let (num, den) = (x.numer(), x.denom());
    let rn = num.sqrt();
    let rd = den.sqrt();
    (&rn * &rn == *num && &rd * &rd == *den).then(|| ExactScalar::new(rn, rd))
}

/// Exact `num/den` rendering; the denominator is omitted when it is 1.
pub fn to_exact_string(x: &ExactScalar) -> String {
    x.to_string()
}

/// Decimal rendering truncated toward zero to `digits` fractional digits.
pub fn to_decimal(x: &ExactScalar, digits: usize) -> String {
    let scale = pow(10u32, digits);
    let scaled = (x.numer() * &scale) / x.denom();
    render_scaled(&scaled, x.is_negative(), digits)
}

/// Decimal rendering of `sqrt(x)` for nonnegative `x`, truncated.
pub fn sqrt_to_decimal(x: &ExactScalar, digits: usize) -> String {
    let scale = pow(10u32, 2 * digits);
    let scaled = ((x.numer() * scale) / x.denom()).sqrt();
    render_scaled(&scaled, false, digits)
}

fn render_scaled(scaled: &BigInt, negative: bool, digits: usize) -> String {
    let mut s = scaled.magnitude().to_string();
    if digits > 0 {
        if s.len() <= digits {
            let pad = digits + 1 - s.len();
            s.insert_str(0, &"0".repeat(pad));
        }
        s.insert(s.len() - digits, '.');
    }
    if negative && scaled.sign() != Sign::NoSign {
        s.insert(0, '-');
    }
    s
}

/// Lossy conversion used only for sanity cross-checks against floating point.
pub fn to_f64(x: &ExactScalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(a: i64, b: i64) -> ExactScalar {
        ExactScalar::new(a.into(), b.into())
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(4, 0), BigInt::from(1));
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(
            binom(60, 30),
            "118264581564861424".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn exact_rendering() {
        assert_eq!(to_exact_string(&ratio(243, 4)), "243/4");
        assert_eq!(to_exact_string(&ratio(8, 4)), "2");
        assert_eq!(to_decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&ratio(-7, 2), 2), "-3.50");
        assert_eq!(to_decimal(&ratio(12, 1), 0), "12");
        assert_eq!(sqrt_to_decimal(&ratio(2, 1), 6), "1.414213");
    }

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(exact_sqrt(&ratio(2, 1)), None);
        assert_eq!(exact_sqrt(&ratio(-4, 1)), None);
    }
}
