//! The named functions Q1(x) = K(sqrt x)/ln(c/sqrt(1-x)),
//! Q2(r) = K(r)/ln(1+4/r'), D(x) = K(sqrt x) - ln(1+4/sqrt(1-x)), their
//! analytic derivatives, the sharp constants, and the bound families of
//! the inequalities built on them.
//!
//! Second derivatives come from their analytic displays in terms of
//! F(1/2,1/2;c;x) — never from finite differences, which survive only as
//! loose test oracles. Functions that suffer internal cancellation return
//! a magnitude alongside the value so sweeps can bound their rounding
//! error honestly.

use crate::elliptic::ellip_k_agm;
use crate::error::{Error, Result};
use crate::hypergeom::f_half_half;
use crate::real::{Dd, Real};

/// ln of the sharp concavity constant c = e^(4/3), exactly representable.
pub fn ln_c_sharp<R: Real>() -> R {
    R::from_ratio(4, 3)
}

/// Value together with the gross magnitude of the terms that formed it;
/// rounding error scales with the magnitude, not the (possibly tiny) value.
#[derive(Debug, Clone, Copy)]
pub struct Valued<R> {
    pub value: R,
    pub magnitude: R,
}

fn check_unit_open(x: f64, what: &str) -> Result<()> {
    if !(0.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("{what} needs (0,1), got {x}")));
    }
    Ok(())
}

/// K(sqrt(x)) through the complementary modulus sqrt(1-x).
pub fn k_of_sqrt_x<R: Real>(x: R) -> Result<R> {
    ellip_k_agm((R::one() - x).sqrt())
}

/// K(r) with r' computed as sqrt((1-r)(1+r)).
pub fn k_of_r<R: Real>(r: R) -> Result<R> {
    ellip_k_agm(((R::one() - r) * (R::one() + r)).sqrt())
}

/// Q1(x) = K(sqrt x) / ln(c / sqrt(1-x)) with ln c supplied directly.
pub fn q1<R: Real>(x: R, ln_c: R) -> Result<R> {
    let xf = x.to_f64();
    check_unit_open(xf, "Q1")?;
    if ln_c.to_f64() < 0.0 {
        return Err(Error::Domain("Q1 needs c >= 1".into()));
    }
    // c = 1 with x -> 0 is a 0/0 corner the theory never uses
    if ln_c.to_f64() == 0.0 && xf < 1e-300 {
        return Err(Error::Domain(
            "Q1 with c = 1 is singular as x -> 0; rejected below the underflow guard".into(),
        ));
    }
    let ell = ln_c - (R::one() - x).ln() * R::from_ratio(1, 2);
    Ok(k_of_sqrt_x(x)? / ell)
}

/// Q1 with the constant given as c itself.
pub fn q1_c(x: f64, c: f64) -> Result<f64> {
    if c.is_nan() || c < 1.0 {
        return Err(Error::Domain(format!("Q1 needs c >= 1, got {c}")));
    }
    q1(x, c.ln())
}

/// Analytic second derivative of Q1 from its display:
/// (2/pi) Q1'' = [ (9/32) F(5/2,5/2;3;x) L - F(1/2,1/2;1;x)/(2(1-x)^2) ]/L^2
///             - [ (1/4) F(3/2,3/2;2;x) L - F(1/2,1/2;1;x)/(2(1-x)) ]/((1-x) L^3)
/// with L = ln(c/sqrt(1-x)).
pub fn q1_second<R: Real>(x: R, ln_c: R) -> Result<Valued<R>> {
    let xf = x.to_f64();
    check_unit_open(xf, "Q1''")?;
    let lnc_f = ln_c.to_f64();
    if lnc_f.is_nan() || lnc_f <= 0.0 {
        return Err(Error::Domain("Q1'' needs c > 1".into()));
    }
    let one = R::one();
    let om = one - x;
    let ell = ln_c - om.ln() * R::from_ratio(1, 2);
    let f1 = f_half_half(1.0, x)?;
    // Euler transform of the shifted-parameter values
    let f32 = f_half_half(2.0, x)? / om;
    let f52 = f_half_half(3.0, x)? / (om * om);
    let t1a = R::from_ratio(9, 32) * f52 * ell;
    let t1b = f1 / (R::from_f64(2.0) * om * om);
    let t2a = R::from_ratio(1, 4) * f32 * ell;
    let t2b = f1 / (R::from_f64(2.0) * om);
    let ell2 = ell * ell;
    let part1 = (t1a - t1b) / ell2;
    let part2 = (t2a - t2b) / (om * ell2 * ell);
    let value = R::pi() * R::from_ratio(1, 2) * (part1 - part2);
    let magnitude = R::pi()
        * ((t1a.abs() + t1b.abs()) / ell2 + (t2a.abs() + t2b.abs()) / (om * ell2 * ell));
    Ok(Valued { value, magnitude })
}

/// Analytic limit Q1''(0+) = (pi/64)(3 ln c - 4)^2 / ln^3 c; zero exactly
/// at the sharp constant, strictly positive for every other c > 1.
pub fn q1_second_zero_limit(ln_c: f64) -> Result<f64> {
    if ln_c.is_nan() || ln_c <= 0.0 {
        return Err(Error::Domain("needs c > 1".into()));
    }
    let s = 3.0 * ln_c - 4.0;
    Ok(std::f64::consts::PI / 64.0 * s * s / (ln_c * ln_c * ln_c))
}

/// Q2(r) = K(r) / ln(1 + 4/r').
pub fn q2<R: Real>(r: R) -> Result<R> {
    check_unit_open(r.to_f64(), "Q2")?;
    let rp = ((R::one() - r) * (R::one() + r)).sqrt();
    let ell = (R::one() + R::from_f64(4.0) / rp).ln();
    Ok(k_of_r(r)? / ell)
}

/// D(x) = K(sqrt x) - ln(1 + 4/sqrt(1-x)).
pub fn d_func<R: Real>(x: R) -> Result<R> {
    check_unit_open(x.to_f64(), "D")?;
    let rp = (R::one() - x).sqrt();
    Ok(k_of_sqrt_x(x)? - (R::one() + R::from_f64(4.0) / rp).ln())
}

/// D'(x) = (pi/8) F(3/2,3/2;2;x) - 2(4 - sqrt(1-x)) / ((15+x)(1-x)).
pub fn d_first<R: Real>(x: R) -> Result<Valued<R>> {
    check_unit_open(x.to_f64(), "D'")?;
    let one = R::one();
    let om = one - x;
    let f32 = f_half_half(2.0, x)? / om;
    let t1 = R::pi() * R::from_ratio(1, 8) * f32;
    let t2 = R::from_f64(2.0) * (R::from_f64(4.0) - om.sqrt())
        / ((R::from_f64(15.0) + x) * om);
    Ok(Valued {
        value: t1 - t2,
        magnitude: t1.abs() + t2.abs(),
    })
}

/// h(x) = (9 pi/64)(x+15)^2 F(1/2,1/2;3;x) + (3x+13) sqrt(1-x) - 16(x+7);
/// h(0) = 2025 pi/64 - 99 and h(1^-) = 0.
pub fn h_func<R: Real>(x: R) -> Result<Valued<R>> {
    let xf = x.to_f64();
    if !(0.0..1.0).contains(&xf) {
        return Err(Error::Domain(format!("h needs [0,1), got {xf}")));
    }
    let one = R::one();
    let xp15 = x + R::from_f64(15.0);
    let t1 = R::pi() * R::from_ratio(9, 64) * xp15 * xp15 * f_half_half(3.0, x)?;
    let t2 = (R::from_f64(3.0) * x + R::from_f64(13.0)) * (one - x).sqrt();
    let t3 = R::from_f64(16.0) * (x + R::from_f64(7.0));
    Ok(Valued {
        value: t1 + t2 - t3,
        magnitude: t1.abs() + t2.abs() + t3.abs(),
    })
}

/// D''(x) = h(x) / ((x+15)^2 (1-x)^2).
pub fn d_second<R: Real>(x: R) -> Result<Valued<R>> {
    check_unit_open(x.to_f64(), "D''")?;
    let h = h_func(x)?;
    let xp15 = x + R::from_f64(15.0);
    let om = R::one() - x;
    let den = xp15 * xp15 * om * om;
    Ok(Valued {
        value: h.value / den,
        magnitude: h.magnitude / den,
    })
}

/// The sharp constants of the corollaries.
#[derive(Debug, Clone, Copy)]
pub struct SharpConstants {
    /// c0 = 3 Gamma(1/4)^2 / (2(3 ln 2 + 8) sqrt(pi)) ~ 1.1037
    pub c0: f64,
    /// p0 = pi/8 - 2/5 (negative)
    pub p0: f64,
    /// p1 = ln 5 - pi/2
    pub p1: f64,
    /// pi / ln 25 ~ 0.976, the lower endpoint of the range of Q2
    pub q2_lower: f64,
    /// e^(4/3), the unique concavity constant for Q1
    pub c_concave: f64,
}

impl SharpConstants {
    pub fn standard() -> SharpConstants {
        let c0 = Self::c0_dd().to_f64();
        let sc = SharpConstants {
            c0,
            p0: std::f64::consts::PI / 8.0 - 0.4,
            p1: 5.0f64.ln() - std::f64::consts::FRAC_PI_2,
            q2_lower: std::f64::consts::PI / 25.0f64.ln(),
            c_concave: (4.0f64 / 3.0).exp(),
        };
        assert!(sc.c0 > 1.1036 && sc.c0 < 1.1038);
        assert!(sc.q2_lower > 0.975 && sc.q2_lower < 0.977);
        sc
    }

    /// c0 in double-double for the endpoint sweeps.
    pub fn c0_dd() -> Dd {
        let g = Dd::GAMMA_QUARTER;
        let three = Dd::from_f64(3.0);
        let num = three * g * g;
        let den = Dd::from_f64(2.0) * (three * Dd::LN2 + Dd::from_f64(8.0)) * Dd::PI.sqrt();
        num / den
    }
}

/// Which pair of sharp K-bounds to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    /// (pi/ln 25) ln(1+4/r') < K < ln(1+4/r')
    Thm2,
    /// ln(e^{4/3}/r')(1 + (3pi/8-1) r'^2) < K < ln(e^{4/3}/r')(21pi/64 + (3pi/64) r'^2)
    Mi3,
    /// ln(1+4/r') - p1 + p0 r^2 < K < ln(1+4/r') - p1 + p1 r^2
    Kgt,
    /// K < ln(1+4/r') - p1 (1-r); no finite lower bound in this family
    Avv,
}

impl BoundFamily {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "thm2" => BoundFamily::Thm2,
            "mi3" => BoundFamily::Mi3,
            "kgt" => BoundFamily::Kgt,
            "avv" => BoundFamily::Avv,
            _ => return Err(Error::Unknown(format!("bound family `{name}`"))),
        })
    }
}

/// The (lower, upper) bound pair for K(r); the avv lower bound is a
/// negative-infinity sentinel.
pub fn k_bounds<R: Real>(r: R, family: BoundFamily) -> Result<(R, R)> {
    check_unit_open(r.to_f64(), "k_bounds")?;
    let one = R::one();
    let rp2 = (one - r) * (one + r);
    let rp = rp2.sqrt();
    let ell = (one + R::from_f64(4.0) / rp).ln();
    Ok(match family {
        BoundFamily::Thm2 => (R::pi() / R::from_f64(25.0).ln() * ell, ell),
        BoundFamily::Mi3 => {
            let lsharp = ln_c_sharp::<R>() - rp.ln();
            let pi = R::pi();
            let lower = lsharp
                * (one + (R::from_ratio(3, 8) * pi - one) * rp2);
            let upper = lsharp
                * (R::from_ratio(21, 64) * pi + R::from_ratio(3, 64) * pi * rp2);
            (lower, upper)
        }
        BoundFamily::Kgt => {
            let p0 = R::pi() * R::from_ratio(1, 8) - R::from_ratio(2, 5);
            let p1 = R::from_f64(5.0).ln() - R::pi() * R::from_ratio(1, 2);
            let base = ell - p1;
            (base + p0 * r * r, base + p1 * r * r)
        }
        BoundFamily::Avv => {
            let p1 = R::from_f64(5.0).ln() - R::pi() * R::from_ratio(1, 2);
            (R::from_f64(f64::NEG_INFINITY), ell - p1 * (one - r))
        }
    })
}

/// Named margins of the product inequalities at one modulus
/// (sign convention: nonnegative means the inequality holds).
#[derive(Debug, Clone, Copy)]
pub struct ProductMargins {
    /// mu(r) <= pi c0 ln(e^{4/3}/r)/K(r) - (pi/2) ln(e^{4/3}/r)/ln(e^{4/3}/r')
    pub mi1: f64,
    /// K(r) K(r') <= c0^2 ln(e^{4/3}/r) ln(e^{4/3}/r')
    pub mi2: f64,
    /// sqrt(r r') K(r) K(r') <= (1/sqrt2) K(1/sqrt2)^2
    pub rr_kk: f64,
    /// common left side (2/pi) r r' K(r) K(r') of the two upper bounds
    pub product_lhs: f64,
    /// min(r ln(4/r), r' ln(4/r')), the piecewise upper bound
    pub kka_upper: f64,
    /// kka_upper - product_lhs, differenced before leaving double-double
    /// (the gap shrinks like r^3/4 near 0 and would drown in f64)
    pub kka_margin: f64,
    /// (2/pi) c0^2 r r' ln(e^{4/3}/r) ln(e^{4/3}/r'), the c0-based bound
    pub kky_upper: f64,
    /// gross magnitude of the contributing products, for error estimates
    pub scale: f64,
}

/// Evaluate all product-inequality margins at r (double-double internally;
/// the sharpness checks at r = 1/sqrt2 sit at the 1e-10 scale).
pub fn product_inequalities(r: f64) -> Result<ProductMargins> {
    check_unit_open(r, "product_inequalities")?;
    type D = Dd;
    let one = D::one();
    let rr = D::from_f64(r);
    let rp = ((one - rr) * (one + rr)).sqrt();
    let k = ellip_k_agm(rp)?;
    let kp = ellip_k_agm(rr)?;
    let mu = D::pi() * D::from_ratio(1, 2) * kp / k;
    let c0 = SharpConstants::c0_dd();
    let l_r = ln_c_sharp::<D>() - rr.ln();
    let l_rp = ln_c_sharp::<D>() - rp.ln();
    let pi = D::pi();

    let mi1 = pi * c0 * l_r / k - pi * D::from_ratio(1, 2) * l_r / l_rp - mu;
    let mi2 = c0 * c0 * l_r * l_rp - k * kp;
    let k_sym = ellip_k_agm(D::from_f64(std::f64::consts::FRAC_1_SQRT_2))?;
    let rr_kk = k_sym * k_sym / D::from_f64(2.0).sqrt() - (rr * rp).sqrt() * k * kp;
    let product_lhs = D::from_f64(2.0) / pi * rr * rp * k * kp;
    let four = D::from_f64(4.0);
    let kka_a = rr * (four / rr).ln();
    let kka_b = rp * (four / rp).ln();
    let kka_upper = if kka_a < kka_b { kka_a } else { kka_b };
    let kky_upper = D::from_f64(2.0) / pi * c0 * c0 * rr * rp * l_r * l_rp;
    let scale = (k * kp).to_f64().abs()
        + (c0 * c0 * l_r * l_rp).to_f64().abs()
        + mu.to_f64().abs()
        + (pi * c0 * l_r / k).to_f64().abs()
        + k_sym.to_f64() * k_sym.to_f64();

    Ok(ProductMargins {
        mi1: mi1.to_f64(),
        mi2: mi2.to_f64(),
        rr_kk: rr_kk.to_f64(),
        product_lhs: product_lhs.to_f64(),
        kka_upper: kka_upper.to_f64(),
        kka_margin: (kka_upper - product_lhs).to_f64(),
        kky_upper: kky_upper.to_f64(),
        scale,
    })
}
