//! Floating-point scalar abstraction: standard `f64` plus a compensated
//! double-double format giving >= 100 significand bits.
//!
//! Everything numeric in this crate that has to survive cancellation near the
//! interval endpoints is written against the [`Real`] trait so the same code
//! runs in both precisions. The double-double arithmetic follows the classic
//! error-free transformations (Dekker/Knuth two-sum and split-based two-prod,
//! no FMA so the code is portable).

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Which scalar format an evaluation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    Double,
    Extended,
}

impl Precision {
    pub fn name(self) -> &'static str {
        match self {
            Precision::Double => "double",
            Precision::Extended => "extended",
        }
    }
}

/// Scalar used by the evaluation kernels.
pub trait Real:
    Copy
    + PartialOrd
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(v: f64) -> Self;
    /// Exact for |v| < 2^53.
    fn from_i64(v: i64) -> Self {
        Self::from_f64(v as f64)
    }
    /// n/d evaluated in the format's full precision.
    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_i64(n) / Self::from_i64(d)
    }
    fn to_f64(self) -> f64;
    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn ln(self) -> Self;
    fn exp(self) -> Self;
    fn powi(self, n: i32) -> Self;
    fn pi() -> Self;
    fn ln2() -> Self;
    /// Unit roundoff of the format.
    fn eps() -> f64;
    /// Series truncation target (relative).
    fn series_eps() -> f64;
    fn is_finite(self) -> bool;
}

impl Real for f64 {
    const NAME: &'static str = "double";

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn ln2() -> Self {
        std::f64::consts::LN_2
    }
    fn eps() -> f64 {
        f64::EPSILON
    }
    fn series_eps() -> f64 {
        // 2^-60: a few guard bits below the f64 unit roundoff.
        8.673617379884035e-19
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    const C: f64 = 134217729.0; // 2^27 + 1
    let t = C * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    (p, e)
}

impl Dd {
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };
    pub const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.3190468138462996e-17,
    };
    /// Gamma(1/4), used by the sharp-constant computations.
    pub const GAMMA_QUARTER: Dd = Dd {
        hi: 3.625609908221908,
        lo: 1.0555907647086408e-16,
    };

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_f64(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }

    fn add_dd(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let (t, f) = two_sum(self.lo, other.lo);
        let (s1, e1) = quick_two_sum(s, e + t);
        let (s2, e2) = quick_two_sum(s1, e1 + f);
        Dd { hi: s2, lo: e2 }
    }

    fn mul_dd(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + (self.hi * other.lo + self.lo * other.hi);
        let (s, e) = quick_two_sum(p, e);
        Dd { hi: s, lo: e }
    }

    fn div_dd(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.add_dd(-(other.mul_dd(Dd::from_f64(q1))));
        let q2 = r.hi / other.hi;
        let r = r.add_dd(-(other.mul_dd(Dd::from_f64(q2))));
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e + q3 }
    }

    pub fn recip(self) -> Dd {
        Dd::from_f64(1.0).div_dd(self)
    }

    /// ldexp on both components; exact while 2^k is normal.
    fn scale2(self, k: i32) -> Dd {
        let f = (2.0f64).powi(k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }
}

impl From<f64> for Dd {
    fn from(v: f64) -> Self {
        Dd::from_f64(v)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        self.add_dd(rhs)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self.add_dd(-rhs)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        self.mul_dd(rhs)
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        self.div_dd(rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl PartialEq for Dd {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Real for Dd {
    const NAME: &'static str = "extended";

    fn zero() -> Self {
        Dd::from_f64(0.0)
    }
    fn one() -> Self {
        Dd::from_f64(1.0)
    }
    fn from_f64(v: f64) -> Self {
        Dd::from_f64(v)
    }
    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    fn sqrt(self) -> Self {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::zero();
        }
        debug_assert!(self.hi > 0.0, "dd sqrt of negative value");
        // One Newton step from the f64 seed doubles the accurate bits.
        let y = 1.0 / self.hi.sqrt();
        let s = self.hi * y;
        let sd = Dd::from_f64(s);
        let err = self - sd * sd;
        Dd::new(s, err.hi * (y * 0.5))
    }

    fn ln(self) -> Self {
        debug_assert!(self.hi > 0.0, "dd ln of non-positive value");
        // Newton iteration y <- y + x e^{-y} - 1 from the f64 seed.
        let mut y = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Dd::one();
        }
        y
    }

    fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -709.0 {
            return Dd::zero();
        }
        // Reduce x = k ln2 + r with |r| <= ln2/2, then a plain Taylor sum.
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self - Dd::LN2 * Dd::from_f64(k);
        let mut term = Dd::one();
        let mut sum = Dd::one();
        for n in 1..64 {
            term = term * r / Dd::from_f64(n as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        sum.scale2(k as i32)
    }

    fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Dd::one();
        }
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn pi() -> Self {
        Dd::PI
    }
    fn ln2() -> Self {
        Dd::LN2
    }
    fn eps() -> f64 {
        // 2^-104
        4.930380657631324e-32
    }
    fn series_eps() -> f64 {
        // 2^-110
        7.70371977754894e-34
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd_close(a: Dd, b: Dd, tol: f64) -> bool {
        ((a - b).to_f64()).abs() <= tol * b.to_f64().abs().max(1.0)
    }

    #[test]
    fn two_sum_exact() {
        let (s, e) = two_sum(1.0, 1e-30);
        assert_eq!(s, 1.0);
        assert_eq!(e, 1e-30);
    }

    #[test]
    fn mul_recovers_product_error() {
        // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60; the 2^-60 tail survives in lo.
        let x = Dd::from_f64(1.0 + (0.5f64).powi(30));
        let sq = x * x;
        let expected = Dd::new(1.0 + (0.5f64).powi(29), (0.5f64).powi(60));
        assert!(dd_close(sq, expected, 1e-31));
    }

    #[test]
    fn division_and_recip() {
        let x = Dd::from_f64(3.0);
        let y = Dd::one() / x;
        let back = y * x - Dd::one();
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn sqrt_squares_back() {
        for v in [2.0, 0.5, 10.0, 1e-8, 123456.789] {
            let s = Dd::from_f64(v).sqrt();
            let err = (s * s - Dd::from_f64(v)).to_f64().abs();
            assert!(err < 1e-30 * v, "sqrt({v}) err {err}");
        }
    }

    #[test]
    fn exp_matches_reference() {
        // e to 32+ digits: 2.7182818284590452353602874713527...
        let e1 = Dd::one().exp();
        let reference = Dd::new(std::f64::consts::E, 1.4456468917292502e-16);
        assert!(dd_close(e1, reference, 1e-30));
    }

    #[test]
    fn ln_matches_reference() {
        let l2 = Dd::from_f64(2.0).ln();
        assert!(dd_close(l2, Dd::LN2, 1e-30));
        // ln(10) = 2.302585092994045684017991454684364...
        let l10 = Dd::from_f64(10.0).ln();
        let reference = Dd::new(std::f64::consts::LN_10, -2.1707562233822494e-16);
        assert!(dd_close(l10, reference, 1e-30));
    }

    #[test]
    fn exp_ln_roundtrip() {
        for v in [0.3, 1.0, 2.5, 17.0, 1e-4] {
            let x = Dd::from_f64(v);
            let y = x.ln().exp();
            assert!(dd_close(y, x, 1e-29), "roundtrip at {v}");
        }
    }

    #[test]
    fn pi_self_consistent() {
        // sin is not implemented; instead check pi against the Machin-like
        // combination 4*(4 atan(1/5) - atan(1/239)) evaluated by series in dd.
        fn atan_series(inv: i64) -> Dd {
            let x = Dd::one() / Dd::from_f64(inv as f64);
            let x2 = x * x;
            let mut term = x;
            let mut sum = x;
            let mut n = 1i64;
            loop {
                term = term * x2;
                n += 2;
                let contrib = term / Dd::from_f64(n as f64);
                let contrib = if (n / 2) % 2 == 1 { -contrib } else { contrib };
                sum = sum + contrib;
                if contrib.to_f64().abs() < 1e-35 {
                    return sum;
                }
            }
        }
        let pi = (atan_series(5) * Dd::from_f64(4.0) - atan_series(239)) * Dd::from_f64(4.0);
        assert!(dd_close(pi, Dd::PI, 1e-30));
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let x = Dd::from_f64(1.5);
        let mut acc = Dd::one();
        for _ in 0..7 {
            acc = acc * x;
        }
        assert!(dd_close(x.powi(7), acc, 1e-31));
        assert!(dd_close(x.powi(-3), Dd::one() / (x * x * x), 1e-31));
    }

    #[test]
    fn ordering_uses_both_limbs() {
        let a = Dd::new(1.0, 1e-20);
        let b = Dd::new(1.0, 2e-20);
        assert!(a < b);
        assert!(Dd::from_f64(1.0) < a);
    }

    #[test]
    fn from_ratio_is_tight() {
        let third = <Dd as Real>::from_ratio(1, 3);
        let err = (third * Dd::from_f64(3.0) - Dd::one()).to_f64().abs();
        assert!(err < 1e-31);
    }
}
