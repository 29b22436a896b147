//! Gamma and digamma in double precision, plus exact symbolic values at
//! integer and half-integer arguments where the bound constants need them
//! bit-tight (there Gamma is a rational multiple of a power of sqrt(pi) and
//! psi is a rational plus a multiple of ln 2, with the Euler constant
//! cancelling out of every combination this crate evaluates).

use crate::exact::{rat, Rational};
use num::{BigInt, One, ToPrimitive};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// Lanczos coefficients (Pugh, g = 10.900511, 11 terms); max relative error
/// around 1e-15 over the positive axis.
const LANCZOS_G: f64 = 10.900511;
const LANCZOS_DK: [f64; 11] = [
    2.4857408913875355e-5,
    1.0514237858172197,
    -3.4568709722201625,
    4.512277094668948,
    -2.9828522532357664,
    1.056397115771267,
    -1.9542877319164587e-1,
    1.709705434044412e-2,
    -5.719261174043057e-4,
    4.633994733599057e-6,
    -2.7199490848860772e-9,
];
const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657;

/// Gamma(x) for real x (poles at non-positive integers return infinity/NaN
/// the way the reflection formula produces them).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        let s: f64 = LANCZOS_DK
            .iter()
            .enumerate()
            .skip(1)
            .fold(LANCZOS_DK[0], |acc, (i, d)| acc + d / (i as f64 - x));
        std::f64::consts::PI
            / ((std::f64::consts::PI * x).sin()
                * s
                * TWO_SQRT_E_OVER_PI
                * ((0.5 - x + LANCZOS_G) / std::f64::consts::E).powf(0.5 - x))
    } else {
        let s: f64 = LANCZOS_DK
            .iter()
            .enumerate()
            .skip(1)
            .fold(LANCZOS_DK[0], |acc, (i, d)| acc + d / (x + i as f64 - 1.0));
        s * TWO_SQRT_E_OVER_PI * ((x - 0.5 + LANCZOS_G) / std::f64::consts::E).powf(x - 0.5)
    }
}

/// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0: shift with the recurrence
/// psi(x+1) = psi(x) + 1/x into x >= 10, then the Stirling-type asymptotic
/// series with Bernoulli coefficients.
pub fn digamma(mut x: f64) -> f64 {
    debug_assert!(x > 0.0, "digamma domain is x > 0 here");
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    // B_2/2 x^-2 .. B_12/12 x^-12
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))));
    shift + x.ln() - 0.5 * inv - series
}

/// Is 2x an integer (so the exact half-integer paths apply)?
pub fn is_half_integer(x: f64) -> bool {
    let t = 2.0 * x;
    t == t.round() && t.abs() < 1e6
}

/// Gamma at z = two_z / 2 expressed exactly as `rat * sqrt(pi)^sqrt_pi_pow`.
/// Defined for every half-integer that is not a pole (i.e. two_z odd, or
/// two_z even and positive).
pub fn gamma_half(two_z: i64) -> (Rational, i32) {
    assert!(
        two_z % 2 != 0 || two_z > 0,
        "gamma pole at non-positive integer {}",
        two_z / 2
    );
    if two_z % 2 == 0 {
        // integer n: (n-1)!
        let n = two_z / 2;
        let mut acc = BigInt::one();
        for k in 2..n {
            acc *= k;
        }
        (Rational::from_integer(acc), 0)
    } else if two_z >= 1 {
        // z = k + 1/2, k >= 0: (2k)! / (4^k k!) * sqrt(pi)
        let k = (two_z - 1) / 2;
        let mut acc = rat(1, 1);
        // product of (j - 1/2) for j = 1..=k
        for j in 1..=k {
            acc *= rat(2 * j - 1, 2);
        }
        (acc, 1)
    } else {
        // negative half-odd: walk down with Gamma(z) = Gamma(z+1)/z
        let (mut acc, pow) = gamma_half(1); // Gamma(1/2) = sqrt(pi)
        let mut t = two_z;
        while t < 1 {
            acc /= rat(t, 2);
            t += 2;
        }
        (acc, pow)
    }
}

/// psi(z) + Euler's gamma for half-integer z = two_z/2 > 0, expressed
/// exactly as `rat + ln2_mult * ln 2`.
pub fn psi_tilde_half(two_z: i64) -> (Rational, i64) {
    assert!(two_z > 0, "psi pole or negative argument");
    if two_z % 2 == 0 {
        // psi(n) + gamma = H_{n-1}
        let n = two_z / 2;
        let mut acc = rat(0, 1);
        for k in 1..n {
            acc += rat(1, k);
        }
        (acc, 0)
    } else {
        // psi(k + 1/2) + gamma = -2 ln 2 + 2 sum_{j=1}^{k} 1/(2j-1)
        let k = (two_z - 1) / 2;
        let mut acc = rat(0, 1);
        for j in 1..=k {
            acc += rat(2, 2 * j - 1);
        }
        (acc, -2)
    }
}

/// Numeric value of `psi_tilde_half`, i.e. psi(z) + gamma in f64.
pub fn psi_tilde_f64(two_z: i64) -> f64 {
    let (r, m) = psi_tilde_half(two_z);
    r.to_f64().unwrap() + m as f64 * std::f64::consts::LN_2
}

/// Evaluate `rat * sqrt(pi)^pow` in f64.
pub fn gamma_half_f64(two_z: i64) -> f64 {
    let (r, pow) = gamma_half(two_z);
    let sp = std::f64::consts::PI.sqrt();
    r.to_f64().unwrap() * sp.powi(pow)
}
