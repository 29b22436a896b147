//! Complete elliptic integrals K(r), E(r), the Grötzsch ring modulus
//! mu(r) = (pi/2) K(r')/K(r), and its inverse.
//!
//! The default path for K is the arithmetic-geometric mean, which is
//! quadratically convergent and well conditioned as r -> 1; the
//! hypergeometric-series path exists as an independent cross-check oracle.

use crate::error::{Error, Result};
use crate::hypergeom::{f_half_half, gauss_2f1, HypParams};
use crate::real::Real;

/// Modulus r in (0,1) stored together with the complementary modulus
/// r' = sqrt(1-r^2), computed as sqrt((1-r)(1+r)) so that values of r very
/// close to 1 keep full accuracy in r'.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    r: f64,
    rp: f64,
}

impl Modulus {
    pub fn new(r: f64) -> Result<Self> {
        if !(0.0 < r && r < 1.0) {
            return Err(Error::Domain(format!("modulus needs 0 < r < 1, got {r}")));
        }
        let rp = ((1.0 - r) * (1.0 + r)).sqrt();
        Ok(Modulus { r, rp })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn rp(&self) -> f64 {
        self.rp
    }

    /// The complementary modulus as a Modulus.
    pub fn complement(&self) -> Modulus {
        Modulus {
            r: self.rp,
            rp: self.r,
        }
    }
}

const AGM_MAX_ITER: usize = 200;

/// Common limit of the arithmetic-geometric iteration, to relative 2^-60
/// (or the format's roundoff, whichever is coarser to reach first; the
/// iteration is quadratic so the pair collapses in a handful of steps).
pub fn agm<R: Real>(a: R, b: R) -> Result<R> {
    if !(a > R::zero() && b > R::zero()) {
        return Err(Error::Domain("agm needs positive arguments".into()));
    }
    // Target 2^-60 relative, floored at the format roundoff. The iteration
    // is quadratic, so once the gap stalls at a last-place oscillation the
    // midpoint is converged far beyond the target.
    let tol = R::from_f64(8.673617379884035e-19f64.max(4.0 * R::eps()));
    let mut a = a;
    let mut b = b;
    let mut prev_gap = R::from_f64(f64::INFINITY);
    for _ in 0..AGM_MAX_ITER {
        let an = (a + b) * R::from_ratio(1, 2);
        let bn = (a * b).sqrt();
        let gap = (an - bn).abs();
        if gap <= tol * an || gap >= prev_gap {
            return Ok((an + bn) * R::from_ratio(1, 2));
        }
        prev_gap = gap;
        a = an;
        b = bn;
    }
    Err(Error::NonConvergence("agm iteration cap".into()))
}

/// K from the complementary modulus: K = pi / (2 agm(1, r')).
pub fn ellip_k_agm<R: Real>(rp: R) -> Result<R> {
    Ok(R::pi() / (R::from_f64(2.0) * agm(R::one(), rp)?))
}

/// Complete elliptic integral of the first kind (AGM path).
pub fn ellip_k(m: &Modulus) -> f64 {
    ellip_k_agm(m.rp()).expect("modulus invariant guarantees rp > 0")
}

/// Series path for K: (pi/2) F(1/2,1/2;1;r^2). Cross-check oracle only.
pub fn ellip_k_series(m: &Modulus) -> Result<f64> {
    let x = m.r() * m.r();
    Ok(std::f64::consts::FRAC_PI_2 * f_half_half(1.0, x)?)
}

/// Complete elliptic integral of the second kind via the AGM sum.
pub fn ellip_e(m: &Modulus) -> f64 {
    let mut a = 1.0f64;
    let mut b = m.rp();
    let mut sum = m.r() * m.r();
    let mut pow2 = 1.0f64;
    let mut prev_c = f64::INFINITY;
    for _ in 0..AGM_MAX_ITER {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        let c = 0.5 * (a - b);
        // stop once c hits the rounding floor; past that point the doubling
        // weight would amplify last-place noise
        if c.abs() <= 2.0 * f64::EPSILON * an || c.abs() >= prev_c {
            break;
        }
        pow2 *= 2.0;
        sum += pow2 * c * c;
        prev_c = c.abs();
        a = an;
        b = bn;
    }
    let k = std::f64::consts::PI / (2.0 * a);
    k * (1.0 - 0.5 * sum)
}

/// Series path for E: (pi/2) F(1/2,-1/2;1;r^2).
pub fn ellip_e_series(m: &Modulus) -> Result<f64> {
    let x = m.r() * m.r();
    let p = HypParams {
        a: 0.5,
        b: -0.5,
        c: 1.0,
    };
    Ok(std::f64::consts::FRAC_PI_2 * gauss_2f1(&p, x)?)
}

/// Grötzsch modulus mu(r) = (pi/2) K(r')/K(r) = (pi/2) agm(1,r')/agm(1,r).
pub fn grotzsch_mu(m: &Modulus) -> f64 {
    let num = agm(1.0, m.rp()).expect("rp > 0");
    let den = agm(1.0, m.r()).expect("r > 0");
    std::f64::consts::FRAC_PI_2 * num / den
}

/// Inverse of mu by bracketed bisection (mu is strictly decreasing from
/// +inf to 0 on (0,1)); |mu(r) - y| is driven below 1e-12.
pub fn mu_inverse(y: f64) -> Result<f64> {
    if !y.is_finite() || y <= 0.0 {
        return Err(Error::Domain(format!("mu_inverse needs y > 0, got {y}")));
    }
    let mut lo = f64::MIN_POSITIVE.sqrt(); // mu(lo) is enormous
    let mut hi = 1.0 - 1e-16;
    let mu_at = |r: f64| grotzsch_mu(&Modulus { r, rp: ((1.0 - r) * (1.0 + r)).sqrt() });
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let v = mu_at(mid);
        if (v - y).abs() < 1e-13 {
            return Ok(mid);
        }
        if v > y {
            lo = mid; // mu decreasing: value too large means r too small
        } else {
            hi = mid;
        }
        if hi - lo < 1e-17 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}
