//! Exact integer and rational arithmetic.
//!
//! Every quantity in the library is carried exactly: bends grow without bound
//! as a packing is refined, so nothing here is allowed to overflow or round.
//! Rounding happens only when a value is printed, see [`format_decimal`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Reduced rational with a positive denominator.
///
/// `BigRational` normalizes on construction, so structural equality is value
/// equality (`1/2 == 2/4`).
pub type Rat = BigRational;

/// Shorthand for building an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Builds the reduced rational `num / den`.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn rat(num: impl Into<Int>, den: impl Into<Int>) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Lifts an integer into the rationals.
pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Exact integer square root: `Some(s)` with `s * s == v` when `v` is a perfect
/// square, `None` otherwise.
///
/// # Panics
///
/// Panics on a negative argument.
pub fn isqrt_exact(v: &Int) -> Option<Int> {
    assert!(!v.is_negative(), "isqrt_exact of negative value {v}");
    let s = v.sqrt();
    if &s * &s == *v {
        Some(s)
    } else {
        None
    }
}

/// Nonnegative greatest common divisor of three integers; `gcd3(0, 0, 0) == 0`.
pub fn gcd3(a: &Int, b: &Int, c: &Int) -> Int {
    a.gcd(b).gcd(c)
}

/// True when the rational has denominator one.
pub fn is_integral(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Renders `r` as a plain decimal string with `sig` significant digits,
/// rounding half to even. Trailing zeros after the decimal point are trimmed.
///
/// # Panics
///
/// Panics if `sig` is zero.
pub fn format_decimal(r: &Rat, sig: u32) -> String {
    assert!(sig > 0, "need at least one significant digit");
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let a = r.abs();
    let ten = int(10);

    // e = floor(log10(a)), found by exact comparison against powers of ten.
    let mut e: i64 = (a.numer().to_string().len() as i64) - (a.denom().to_string().len() as i64);
    loop {
        if a < pow10_rat(e) {
            e -= 1;
        } else if a >= pow10_rat(e + 1) {
            e += 1;
        } else {
            break;
        }
    }

    let shift = sig as i64 - 1 - e;
    let scaled = &a * pow10_rat(shift);
    let mut q = round_half_even(&scaled);
    let mut exp10 = -shift;
    if q == num_traits::pow(ten.clone(), sig as usize) {
        q /= &ten;
        exp10 += 1;
    }

    let digits = q.to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp10 >= 0 {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', exp10 as usize));
        return out;
    }
    let point = digits.len() as i64 + exp10;
    let (int_part, frac_part) = if point > 0 {
        let (i, f) = digits.split_at(point as usize);
        (i.to_string(), f.to_string())
    } else {
        ("0".to_string(), "0".repeat((-point) as usize) + &digits)
    };
    let frac_part = frac_part.trim_end_matches('0');
    out.push_str(&int_part);
    if !frac_part.is_empty() {
        out.push('.');
        out.push_str(frac_part);
    }
    out
}

fn pow10_rat(e: i64) -> Rat {
    let p = num_traits::pow(int(10), e.unsigned_abs() as usize);
    if e >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(Int::one(), p)
    }
}

fn round_half_even(x: &Rat) -> Int {
    let floor = x.floor().to_integer();
    let frac = x - Rat::from_integer(floor.clone());
    let half = rat(1, 2);
    if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt_exact(&int(0)), Some(int(0)));
        assert_eq!(isqrt_exact(&int(49)), Some(int(7)));
        assert_eq!(isqrt_exact(&int(48)), None);
    }

    #[test]
    #[should_panic]
    fn isqrt_rejects_negative() {
        isqrt_exact(&int(-4));
    }

    #[test]
    fn gcd3_examples() {
        assert_eq!(gcd3(&int(6), &int(4), &int(9)), int(1));
        assert_eq!(gcd3(&int(6), &int(2), &int(18)), int(2));
        assert_eq!(gcd3(&int(0), &int(0), &int(1)), int(1));
        assert_eq!(gcd3(&int(0), &int(0), &int(0)), int(0));
        assert_eq!(gcd3(&int(-6), &int(4), &int(-10)), int(2));
    }

    #[test]
    fn rationals_are_normalized() {
        assert_eq!(rat(1, 2), rat(2, 4));
        let r = rat(3, -6);
        assert_eq!(r.numer(), &int(-1));
        assert_eq!(r.denom(), &int(2));
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(format_decimal(&rat(0, 1), 12), "0");
        assert_eq!(format_decimal(&rat(1, 3), 12), "0.333333333333");
        assert_eq!(format_decimal(&rat(2, 3), 12), "0.666666666667");
        assert_eq!(format_decimal(&rat(-5, 2), 12), "-2.5");
        assert_eq!(format_decimal(&rat(1234, 1), 2), "1200");
        assert_eq!(format_decimal(&rat(1, 1000), 12), "0.001");
        assert_eq!(format_decimal(&rat(999_999, 1_000_000), 3), "1");
        // ties go to the even neighbour
        assert_eq!(format_decimal(&rat(25, 1000), 1), "0.02");
        assert_eq!(format_decimal(&rat(35, 1000), 1), "0.04");
        assert_eq!(format_decimal(&rat(125, 1), 2), "120");
    }

    proptest! {
        #[test]
        fn isqrt_brackets_floor(v in 0u64..1_000_000_000_000) {
            let v = Int::from(v);
            match isqrt_exact(&v) {
                Some(s) => prop_assert_eq!(&s * &s, v),
                None => {
                    let f = v.sqrt();
                    prop_assert!(&f * &f < v);
                    prop_assert!(v < (&f + 1u32) * (&f + 1u32));
                }
            }
        }

        #[test]
        fn rational_addition_is_exact(
            a in -10_000i64..10_000, b in 1i64..10_000,
            c in -10_000i64..10_000, d in 1i64..10_000,
        ) {
            let sum = rat(a, b) + rat(c, d);
            let scaled = sum * rat_int(&(int(b) * int(d)));
            prop_assert!(is_integral(&scaled));
            prop_assert_eq!(scaled.to_integer(), int(a) * int(d) + int(c) * int(b));
        }

        #[test]
        fn decimal_is_close(num in -1_000_000i64..1_000_000, den in 1i64..1_000_000) {
            let r = rat(num, den);
            let s = format_decimal(&r, 12);
            let parsed: f64 = s.parse().unwrap();
            let exact = num as f64 / den as f64;
            prop_assert!((parsed - exact).abs() <= exact.abs() * 1e-11 + 1e-300);
        }
    }
}
