//! Exact arithmetic carriers: arbitrary-precision rationals, a certified
//! rational enclosure of pi with directed tail bounds, and linear forms
//! p*pi + q whose signs are decided against that enclosure — never by
//! floating point.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rational = num::BigRational;

/// Small-integer rational constructor.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Certified sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Rational interval lower < pi < upper built from the hexadecimal digit
/// series pi = sum_k (4/(8k+1) - 2/(8k+4) - 1/(8k+5) - 1/(8k+6)) / 16^k.
/// Every term of the series is positive, so partial sums approach pi from
/// below; for k >= 1 the k-th term is below (1/2) 16^-k, giving the tail
/// bound  sum_{k>n} term_k < (8/15) 16^-(n+1).
#[derive(Debug, Clone)]
pub struct PiEnclosure {
    pub lower: Rational,
    pub upper: Rational,
}

impl PiEnclosure {
    /// Enclosure of width (8/15)*16^-(terms+1); `terms = 40` gives well
    /// under 2^-128.
    pub fn with_terms(terms: u32) -> Self {
        let mut sum = rat(0, 1);
        let sixteenth = rat(1, 16);
        let mut scale = rat(1, 1);
        for k in 0..=terms as i64 {
            let k8 = 8 * k;
            let term = rat(4, k8 + 1) - rat(2, k8 + 4) - rat(1, k8 + 5) - rat(1, k8 + 6);
            sum += term * &scale;
            scale *= &sixteenth;
        }
        // scale is now 16^-(terms+1)
        let tail = rat(8, 15) * scale;
        PiEnclosure {
            upper: &sum + &tail,
            lower: sum,
        }
    }

    /// Default 128+ bit enclosure.
    pub fn standard() -> Self {
        Self::with_terms(40)
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }
}

/// Exact linear form p*pi + q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiLinear {
    pub p: Rational,
    pub q: Rational,
}

impl PiLinear {
    pub fn new(p: Rational, q: Rational) -> Self {
        PiLinear { p, q }
    }

    pub fn constant(q: Rational) -> Self {
        PiLinear { p: rat(0, 1), q }
    }

    pub fn scale(&self, f: &Rational) -> Self {
        PiLinear {
            p: &self.p * f,
            q: &self.q * f,
        }
    }

    pub fn add(&self, other: &PiLinear) -> Self {
        PiLinear {
            p: &self.p + &other.p,
            q: &self.q + &other.q,
        }
    }

    /// Nearest-f64 value, computed in double-double so that forms like
    /// (2025/64) pi - 99 keep their small difference.
    pub fn to_f64(&self) -> f64 {
        use crate::real::{Dd, Real};
        let p = Dd::from_f64(self.p.to_f64().unwrap_or(f64::NAN));
        let q = Dd::from_f64(self.q.to_f64().unwrap_or(f64::NAN));
        (p * Dd::PI + q).to_f64()
    }

    /// Certified sign against a pi enclosure. An interval that straddles
    /// zero is an `Indeterminate` error, never a guess.
    pub fn sign(&self, enc: &PiEnclosure) -> Result<Sign> {
        if self.p.is_zero() {
            return Ok(Sign::of(&self.q));
        }
        // value in (p*lo + q, p*hi + q) for p > 0, reversed for p < 0
        let a = &self.p * &enc.lower + &self.q;
        let b = &self.p * &enc.upper + &self.q;
        let (lo, hi) = if self.p.is_positive() { (a, b) } else { (b, a) };
        if lo.is_positive() {
            Ok(Sign::Positive)
        } else if hi.is_negative() {
            Ok(Sign::Negative)
        } else {
            Err(Error::Indeterminate(format!(
                "p*pi+q with p={}, q={} straddles zero within the enclosure",
                self.p, self.q
            )))
        }
    }
}

/// Exact rational value of a double-double (both limbs are dyadic).
pub fn dd_to_rational(x: crate::real::Dd) -> Rational {
    f64_to_rational(x.hi) + f64_to_rational(x.lo)
}

/// Exact rational value of a finite f64.
pub fn f64_to_rational(x: f64) -> Rational {
    assert!(x.is_finite());
    if x == 0.0 {
        return rat(0, 1);
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exponent = ((bits >> 52) & 0x7ff) as i64;
    let mantissa = bits & ((1u64 << 52) - 1);
    let (mant, exp) = if exponent == 0 {
        (mantissa, -1074i64)
    } else {
        (mantissa | (1u64 << 52), exponent - 1075)
    };
    let mut num = BigInt::from(mant) * BigInt::from(sign);
    let mut den = BigInt::one();
    if exp >= 0 {
        num <<= exp as usize;
    } else {
        den <<= (-exp) as usize;
    }
    Rational::new(num, den)
}

/// Decimal string with `sig` significant digits (round half away from zero),
/// used by the CLI's extended-precision printing.
pub fn rational_to_decimal(x: &Rational, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let abs = x.abs();
    // decimal exponent: largest e with 10^e <= abs
    let mut e: i64 = 0;
    let ten = rat_int(10);
    let one = rat(1, 1);
    let mut v = abs.clone();
    if v >= one {
        while v >= ten {
            v /= &ten;
            e += 1;
        }
    } else {
        while v < one {
            v *= &ten;
            e -= 1;
        }
    }
    // digits = round(abs * 10^(sig-1-e))
    let shift = sig as i64 - 1 - e;
    let mut scaled = abs;
    if shift >= 0 {
        scaled *= Rational::from_integer(ten.to_integer().pow(shift as u32));
    } else {
        scaled /= Rational::from_integer(ten.to_integer().pow((-shift) as u32));
    }
    let rounded = (scaled + rat(1, 2)).floor().to_integer();
    let mut digits = rounded.to_string();
    if digits.len() > sig {
        // rounding overflowed into an extra digit (e.g. 999.. -> 1000..)
        e += 1;
        digits.truncate(sig);
    }
    let mantissa = if digits.len() > 1 {
        format!("{}.{}", &digits[..1], &digits[1..])
    } else {
        digits.clone()
    };
    let s = format!("{mantissa}e{e}");
    if neg {
        format!("-{s}")
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::{Dd, Real};

    #[test]
    fn enclosure_brackets_pi() {
        let enc = PiEnclosure::standard();
        let lo = enc.lower.to_f64().unwrap();
        let hi = enc.upper.to_f64().unwrap();
        assert!(lo <= std::f64::consts::PI && std::f64::consts::PI <= hi);
        // width under 2^-128
        let w = enc.width();
        assert!(w < rat(1, i64::MAX) * rat(1, i64::MAX) * rat(1, 4));
        assert!(enc.lower < enc.upper);
    }

    #[test]
    fn enclosure_tightens_with_terms() {
        let a = PiEnclosure::with_terms(5);
        let b = PiEnclosure::with_terms(10);
        assert!(b.width() < a.width());
        assert!(a.lower <= b.lower && b.upper <= a.upper);
    }

    #[test]
    fn pi_linear_signs() {
        let enc = PiEnclosure::standard();
        // 2025/64 pi - 99 > 0
        let c0 = PiLinear::new(rat(2025, 64), rat(-99, 1));
        assert_eq!(c0.sign(&enc).unwrap(), Sign::Positive);
        // pi - 22/7 < 0
        let x = PiLinear::new(rat(1, 1), rat(-22, 7));
        assert_eq!(x.sign(&enc).unwrap(), Sign::Negative);
        // pure rational
        assert_eq!(PiLinear::constant(rat(0, 1)).sign(&enc).unwrap(), Sign::Zero);
    }

    #[test]
    fn pi_linear_indeterminate_is_loud() {
        // an enclosure of width ~1e-2 cannot separate pi from a point inside it
        let coarse = PiEnclosure {
            lower: rat(314, 100),
            upper: rat(315, 100),
        };
        let x = PiLinear::new(rat(1, 1), -rat(3141, 1000));
        assert!(matches!(x.sign(&coarse), Err(Error::Indeterminate(_))));
    }

    #[test]
    fn f64_roundtrip_exact() {
        for v in [0.1, -3.75, 1e-300, 123456.789, f64::MIN_POSITIVE] {
            let r = f64_to_rational(v);
            assert_eq!(r.to_f64().unwrap(), v);
        }
    }

    #[test]
    fn dd_to_rational_keeps_both_limbs() {
        let x = Dd::PI;
        let r = dd_to_rational(x);
        let back = r.to_f64().unwrap();
        assert_eq!(back, x.hi);
        let residue = r - f64_to_rational(x.hi);
        assert_eq!(residue.to_f64().unwrap(), x.lo);
    }

    #[test]
    fn decimal_printing() {
        assert_eq!(rational_to_decimal(&rat(1, 4), 5), "2.5000e-1");
        assert_eq!(rational_to_decimal(&rat(-1234, 1), 3), "-1.23e3");
        assert_eq!(rational_to_decimal(&rat(9999, 1), 3), "1.00e4");
        let pi32 = rational_to_decimal(&dd_to_rational(Dd::PI), 32);
        assert!(pi32.starts_with("3.1415926535897932384626433832795"));
    }

    #[test]
    fn real_from_ratio_matches_rational() {
        let r = rat(193, 20480).to_f64().unwrap();
        assert_eq!(<f64 as Real>::from_ratio(193, 20480), r);
    }
}
