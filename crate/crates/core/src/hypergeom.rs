//! Gauss hypergeometric function 2F1 on (-1, 1), its derivatives, and its
//! behavior near x = 1.
//!
//! Evaluation strategy:
//! * |x| <= 0.95: direct series with compensated summation, stopping when a
//!   term falls below 2^-60 (2^-110 extended) of the partial sum while the
//!   term ratio is already below one, capped at 10^6 terms.
//! * x > 0.95 with c < a+b: Euler transform
//!   F(a,b;c;x) = (1-x)^(c-a-b) F(c-a,c-b;c;x), which lands in a case that
//!   converges at 1.
//! * x > 0.95 with c - a - b a non-negative integer and half-integer
//!   parameters: the classical logarithmic expansion in t = 1 - x whose two
//!   leading terms are exposed as [`asymptotic_f_near_one`]. Direct series
//!   cannot reach full precision there (the tail decays like a power of n,
//!   not geometrically), so this path is what makes the endpoint sweeps
//!   possible at all.

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::gamma::{digamma, gamma, gamma_half, is_half_integer, psi_tilde_half, EULER_GAMMA};
use crate::real::Real;
use num::ToPrimitive;

const MAX_TERMS: usize = 1_000_000;
const NEAR_ONE_SWITCH: f64 = 0.95;

/// Parameters (a, b; c) of 2F1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let p = HypParams { a, b, c };
        p.validate()?;
        Ok(p)
    }

    /// c must not be zero or a negative integer (Pochhammer denominator).
    pub fn validate(&self) -> Result<()> {
        if self.c <= 0.0 && self.c == self.c.floor() {
            return Err(Error::Domain(format!(
                "c = {} is zero or a negative integer",
                self.c
            )));
        }
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(Error::Domain("non-finite hypergeometric parameter".into()));
        }
        Ok(())
    }
}

/// Two-term expansion of F near x = 1 with its remainder order.
#[derive(Debug, Clone, Copy)]
pub struct NearOneExpansion {
    pub leading: f64,
    pub correction: f64,
    /// Metadata only; the remainder constant is not part of the value.
    pub remainder_order: &'static str,
}

impl NearOneExpansion {
    pub fn value(&self) -> f64 {
        self.leading + self.correction
    }
}

/// Which of the two tabulated expansions near x = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NearOneKind {
    /// F(1/2,1/2;1;x): logarithmically divergent at 1.
    C1,
    /// F(1/2,1/2;2;x): finite limit 4/pi at 1.
    C2,
}

/// F(a,b;c;x) for -1 < x < 1.
pub fn gauss_2f1<R: Real>(p: &HypParams, x: R) -> Result<R> {
    p.validate()?;
    let xf = x.to_f64();
    if !(-1.0 < xf && xf < 1.0) {
        return Err(Error::Domain(format!("2F1 needs -1 < x < 1, got {xf}")));
    }
    // Non-positive integer a or b terminates the series; the direct sum is
    // then exact and the near-one machinery would hit a gamma pole.
    let poly = |v: f64| v <= 0.0 && v == v.floor();
    if xf <= NEAR_ONE_SWITCH || poly(p.a) || poly(p.b) {
        return series_direct(p.a, p.b, p.c, x);
    }

    let gap = p.c - p.a - p.b;
    if gap < 0.0 {
        // Euler transform: the transformed parameters have a positive gap.
        let q = HypParams {
            a: p.c - p.a,
            b: p.c - p.b,
            c: p.c,
        };
        let one_minus = R::one() - x;
        return Ok(powr(one_minus, gap) * gauss_2f1(&q, x)?);
    }

    if let Some((a2, b2, c, m)) = half_integer_shape(p) {
        return near_one_series(a2, b2, c, m, R::one() - x);
    }
    // Positive non-integer gap without the exact-psi machinery: the direct
    // series still converges on (0,1); accuracy near 1 is not guaranteed and
    // the cap turns into a loud NonConvergence instead of a silent loss.
    series_direct(p.a, p.b, p.c, x)
}

/// order-th derivative via F'(a,b;c;x) = (ab/c) F(a+1,b+1;c+1;x), iterated.
pub fn gauss_2f1_derivative<R: Real>(p: &HypParams, x: R, order: u32) -> Result<R> {
    if order == 0 {
        return Err(Error::Domain("derivative order must be >= 1".into()));
    }
    p.validate()?;
    let mut factor = R::one();
    for i in 0..order {
        let i = i as f64;
        factor = factor * R::from_f64(p.a + i) * R::from_f64(p.b + i) / R::from_f64(p.c + i);
    }
    let shifted = HypParams {
        a: p.a + order as f64,
        b: p.b + order as f64,
        c: p.c + order as f64,
    };
    Ok(factor * gauss_2f1(&shifted, x)?)
}

/// F(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)) for c > a+b.
pub fn near_one_value(p: &HypParams) -> Result<f64> {
    p.validate()?;
    if p.c - p.a - p.b <= 0.0 {
        return Err(Error::Domain(format!(
            "F(a,b;c;1) finite only for c > a+b (gap = {})",
            p.c - p.a - p.b
        )));
    }
    let args = [p.c, p.c - p.a - p.b, p.c - p.a, p.c - p.b];
    if args.iter().all(|&z| is_half_integer(z)) {
        let mut r = rat(1, 1);
        let mut pw = 0i32;
        for (i, &z) in args.iter().enumerate() {
            let (gr, gp) = gamma_half((2.0 * z).round() as i64);
            if i < 2 {
                r *= gr;
                pw += gp;
            } else {
                r /= gr;
                pw -= gp;
            }
        }
        Ok(r.to_f64().unwrap() * std::f64::consts::PI.sqrt().powi(pw))
    } else {
        Ok(gamma(p.c) * gamma(p.c - p.a - p.b) / (gamma(p.c - p.a) * gamma(p.c - p.b)))
    }
}

/// Leading term (R(a,b) - ln(1-x)) / B(a,b) of F(a,b;a+b;x) near x = 1,
/// with R(a,b) = -2 gamma - psi(a) - psi(b).
pub fn log_singular_expansion(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(0.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("needs 0 < x < 1, got {x}")));
    }
    if a <= 0.0 || b <= 0.0 {
        return Err(Error::Domain("needs a, b > 0".into()));
    }
    // The Euler constant cancels: R(a,b) = -(psi(a)+gamma) - (psi(b)+gamma).
    let r_ab = if is_half_integer(a) && is_half_integer(b) {
        let (ra, ma) = psi_tilde_half((2.0 * a).round() as i64);
        let (rb, mb) = psi_tilde_half((2.0 * b).round() as i64);
        -(ra + rb).to_f64().unwrap() - (ma + mb) as f64 * std::f64::consts::LN_2
    } else {
        -2.0 * EULER_GAMMA - digamma(a) - digamma(b)
    };
    let beta = if is_half_integer(a) && is_half_integer(b) {
        let (ga, pa) = gamma_half((2.0 * a).round() as i64);
        let (gb, pb) = gamma_half((2.0 * b).round() as i64);
        let (gc, pc) = gamma_half((2.0 * (a + b)).round() as i64);
        (ga * gb / gc).to_f64().unwrap() * std::f64::consts::PI.sqrt().powi(pa + pb - pc)
    } else {
        gamma(a) * gamma(b) / gamma(a + b)
    };
    Ok((r_ab - (1.0 - x).ln()) / beta)
}

/// The two asymptotic expansions in t = 1 - x.
pub fn asymptotic_f_near_one(kind: NearOneKind, t: f64) -> Result<NearOneExpansion> {
    if !(0.0 < t && t < 1.0) {
        return Err(Error::Domain(format!("needs 0 < t < 1, got {t}")));
    }
    let pi = std::f64::consts::PI;
    let l = (16.0 / t).ln();
    let (leading, correction) = match kind {
        NearOneKind::C1 => (l / pi, t / (4.0 * pi) * (l - 2.0)),
        NearOneKind::C2 => (4.0 / pi, -(t / pi) * (l - 3.0)),
    };
    Ok(NearOneExpansion {
        leading,
        correction,
        remainder_order: "O(t^2 ln t)",
    })
}

/// Convenience for the F(1/2,1/2;c;x) family the bounds use everywhere.
pub fn f_half_half<R: Real>(c: f64, x: R) -> Result<R> {
    gauss_2f1(&HypParams { a: 0.5, b: 0.5, c }, x)
}

/// base^e for real e with an exact integer fast path.
fn powr<R: Real>(base: R, e: f64) -> R {
    if e == e.floor() && e.abs() < 1e9 {
        base.powi(e as i32)
    } else {
        (R::from_f64(e) * base.ln()).exp()
    }
}

fn series_direct<R: Real>(a: f64, b: f64, c: f64, x: R) -> Result<R> {
    let eps = R::from_f64(R::series_eps());
    let mut term = R::one();
    let mut sum = R::one();
    let mut comp = R::zero(); // Kahan compensation
    let xf = x.to_f64();
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let ratio_f = ((a + nf) * (b + nf) * xf / ((c + nf) * (nf + 1.0))).abs();
        term = term * R::from_f64(a + nf) * R::from_f64(b + nf) * x
            / (R::from_f64(c + nf) * R::from_f64(nf + 1.0));
        if term.to_f64() == 0.0 {
            return Ok(sum + comp);
        }
        // compensated accumulation
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        comp = -comp;
        if term.abs() < eps * sum.abs() && ratio_f < 1.0 {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(format!(
        "2F1({a},{b};{c};{xf}) hit the {MAX_TERMS}-term cap"
    )))
}

/// (2a, 2b, c, m) when a, b are half-integers, c is a positive integer and
/// m = c - a - b is a non-negative integer; the psi arguments a+m, b+m must
/// be positive for the expansion to make sense.
fn half_integer_shape(p: &HypParams) -> Option<(i64, i64, i64, i64)> {
    if !(is_half_integer(p.a) && is_half_integer(p.b) && is_half_integer(p.c)) {
        return None;
    }
    let a2 = (2.0 * p.a).round() as i64;
    let b2 = (2.0 * p.b).round() as i64;
    let c2 = (2.0 * p.c).round() as i64;
    if c2 % 2 != 0 || c2 <= 0 || (a2 + b2) % 2 != 0 {
        return None;
    }
    let c = c2 / 2;
    let m = c - (a2 + b2) / 2;
    if m < 0 || a2 + 2 * m <= 0 || b2 + 2 * m <= 0 {
        return None;
    }
    Some((a2, b2, c, m))
}

fn rational_to_r<R: Real>(q: &Rational) -> R {
    match (q.numer().to_i64(), q.denom().to_i64()) {
        (Some(n), Some(d)) => R::from_ratio(n, d),
        _ => R::from_f64(q.to_f64().unwrap()),
    }
}

/// `rat * sqrt(pi)^pow` in R.
fn sqrt_pi_pow<R: Real>(r: &Rational, pow: i32) -> R {
    let base = rational_to_r::<R>(r);
    let half = pow.rem_euclid(2);
    let whole = (pow - half) / 2;
    let mut v = base * R::pi().powi(whole);
    if half == 1 {
        v = v * R::pi().sqrt();
    }
    v
}

/// psi(z) + gamma in R for half-integer z = two_z/2 > 0.
fn psi_tilde_r<R: Real>(two_z: i64) -> R {
    let (r, m) = psi_tilde_half(two_z);
    rational_to_r::<R>(&r) + R::from_i64(m) * R::ln2()
}

/// F(a,b;c;1-t) by the logarithmic expansion, for t in (0, 1), with
/// a = a2/2, b = b2/2, m = c - a - b >= 0.
fn near_one_series<R: Real>(a2: i64, b2: i64, c: i64, m: i64, t: R) -> Result<R> {
    let ln_t = t.ln();
    let a = R::from_ratio(a2, 2);
    let b = R::from_ratio(b2, 2);
    let eps = R::from_f64(R::series_eps());

    // Gamma(c) / (Gamma(a) Gamma(b)) as rational * sqrt(pi)^pow
    let (gc, pc) = gamma_half(2 * c);
    let (ga, pa) = gamma_half(a2);
    let (gb, pb) = gamma_half(b2);
    let pref2 = sqrt_pi_pow::<R>(&(gc.clone() / (&ga * &gb)), pc - pa - pb);

    if m == 0 {
        // pref2 * sum coef_n [2 psi~(n+1) - psi~(n+a) - psi~(n+b) - ln t] t^n,
        // and psi~(1) = 0 so the bracket starts at -psi~(a) - psi~(b).
        let mut bracket = -(psi_tilde_r::<R>(a2) + psi_tilde_r::<R>(b2));
        let mut coef = R::one();
        let mut tp = R::one();
        let mut sum = R::zero();
        for n in 0..MAX_TERMS {
            let nf = n as f64;
            let term = coef * (bracket - ln_t) * tp;
            sum = sum + term;
            if term.abs() < eps * sum.abs() && n > 0 {
                return Ok(pref2 * sum);
            }
            coef = coef * (a + R::from_f64(nf)) * (b + R::from_f64(nf))
                / (R::from_f64(nf + 1.0) * R::from_f64(nf + 1.0));
            tp = tp * t;
            bracket = bracket + R::from_ratio(2, n as i64 + 1)
                - (a + R::from_f64(nf)).powi(-1)
                - (b + R::from_f64(nf)).powi(-1);
        }
        return Err(Error::NonConvergence("near-one log series (m=0)".into()));
    }

    // Finite part: Gamma(m)Gamma(c)/(Gamma(a+m)Gamma(b+m)) *
    //              sum_{n<m} (a)_n (b)_n / (n! (1-m)_n) t^n
    let (gm, pm) = gamma_half(2 * m);
    let (gam, pam) = gamma_half(a2 + 2 * m);
    let (gbm, pbm) = gamma_half(b2 + 2 * m);
    let pref1 = sqrt_pi_pow::<R>(&(&gm * &gc / (&gam * &gbm)), pm + pc - pam - pbm);
    let mut finite = R::zero();
    {
        let mut coef = rat(1, 1); // (a)_n (b)_n / (n! (1-m)_n)
        let mut tp = R::one();
        for n in 0..m {
            finite = finite + rational_to_r::<R>(&coef) * tp;
            // step n -> n+1 (never applied past n = m-1 where (1-m)_n vanishes)
            if n + 1 < m {
                coef *= rat(a2 + 2 * n, 2) * rat(b2 + 2 * n, 2)
                    / (rat(n + 1, 1) * rat(1 - m + n, 1));
                tp = tp * t;
            }
        }
        finite = pref1 * finite;
    }

    // Log part: -pref2 (-t)^m sum c_n [ln t - psi~(n+1) - psi~(n+m+1)
    //                                 + psi~(a+m+n) + psi~(b+m+n)] t^n
    // with c_n = (a+m)_n (b+m)_n / (n! (n+m)!), so c_0 = 1/m!.
    let c0 = {
        let mut f = rat(1, 1);
        for k in 2..=m {
            f *= rat(k, 1);
        }
        rat(1, 1) / f
    };
    let mut coef = rational_to_r::<R>(&c0);
    let mut bracket = -psi_tilde_r::<R>(2 * (m + 1)) + psi_tilde_r::<R>(a2 + 2 * m)
        + psi_tilde_r::<R>(b2 + 2 * m); // psi~(1) = 0
    let mut tp = R::one();
    let mut logsum = R::zero();
    let mut converged = false;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let term = coef * (ln_t + bracket) * tp;
        logsum = logsum + term;
        if n > 0 && term.abs() < eps * (logsum.abs() + R::from_f64(1e-300)) {
            converged = true;
            break;
        }
        let am = a + R::from_f64(m as f64 + nf);
        let bm = b + R::from_f64(m as f64 + nf);
        coef = coef * am * bm / (R::from_f64(nf + 1.0) * R::from_f64(nf + 1.0 + m as f64));
        tp = tp * t;
        bracket = bracket - R::from_ratio(1, n as i64 + 1) - R::from_ratio(1, n as i64 + m + 1)
            + am.powi(-1)
            + bm.powi(-1);
    }
    if !converged {
        return Err(Error::NonConvergence("near-one log series (m>0)".into()));
    }
    let sign = if m % 2 == 0 { R::one() } else { -R::one() };
    let tm = t.powi(m as i32);
    Ok(finite - pref2 * sign * tm * logsum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::Dd;

    fn p(a: f64, b: f64, c: f64) -> HypParams {
        HypParams { a, b, c }
    }

    #[test]
    fn empty_sum_identity() {
        assert_eq!(gauss_2f1(&p(0.5, 0.5, 1.0), 0.0).unwrap(), 1.0);
        // a = 0 makes F identically 1
        assert_eq!(gauss_2f1(&p(0.0, 3.0, 2.0), 0.7).unwrap(), 1.0);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            gauss_2f1(&p(0.5, 0.5, 1.0), 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            gauss_2f1(&p(0.5, 0.5, 1.0), -1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            gauss_2f1(&p(0.5, 0.5, 0.0), 0.5),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            gauss_2f1(&p(0.5, 0.5, -2.0), 0.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn negative_x_converges() {
        // F(1/2,1/2;1;-0.5) from a 30-digit reference: 0.901286299360447298735939...
        let v: f64 = gauss_2f1(&p(0.5, 0.5, 1.0), -0.5).unwrap();
        assert!((v - 0.9012862993604473).abs() < 1e-14);
    }

    #[test]
    fn mid_range_reference_values() {
        // F(1/2,1/2;1;1/2) = 2 K(1/sqrt2)/pi = 1.1803405990160962...
        let v: f64 = gauss_2f1(&p(0.5, 0.5, 1.0), 0.5).unwrap();
        assert!((v - 1.1803405990160962).abs() < 2e-15);
        // F(1/2,-1/2;1;1/4) = 2 E(1/2)/pi = 0.93421545766769412...
        let e: f64 = gauss_2f1(&p(0.5, -0.5, 1.0), 0.25).unwrap();
        assert!((e - 0.9342154576676941).abs() < 2e-15);
    }

    #[test]
    fn switchover_is_seamless() {
        // direct series just below 0.95, near-one machinery just above;
        // both must describe the same analytic function.
        for c in [1.0, 2.0, 3.0] {
            let lo: f64 = gauss_2f1(&p(0.5, 0.5, c), 0.9499999).unwrap();
            let hi: f64 = gauss_2f1(&p(0.5, 0.5, c), 0.9500001).unwrap();
            assert!(
                (hi - lo).abs() < 1e-5 * lo.abs(),
                "c={c}: {lo} vs {hi}"
            );
        }
        // and a tight cross-check at a point where both paths apply
        let direct: f64 = series_direct(0.5, 0.5, 2.0, 0.97).unwrap();
        let near: f64 = near_one_series(1, 1, 2, 1, 0.03).unwrap();
        assert!((direct - near).abs() < 1e-13 * direct.abs());
    }

    #[test]
    fn near_one_log_case_matches_direct() {
        let direct: f64 = series_direct(0.5, 0.5, 1.0, 0.96).unwrap();
        let near: f64 = near_one_series(1, 1, 1, 0, 0.04).unwrap();
        assert!((direct - near).abs() < 1e-13 * direct.abs());
    }

    #[test]
    fn near_one_m2_matches_direct() {
        let direct: f64 = series_direct(0.5, 0.5, 3.0, 0.96).unwrap();
        let near: f64 = near_one_series(1, 1, 3, 2, 0.04).unwrap();
        assert!((direct - near).abs() < 1e-13 * direct.abs());
    }

    #[test]
    fn second_kind_near_one() {
        // F(1/2,-1/2;1;x) -> 2/pi as x -> 1 (this is 2E(r)/pi at r=1)
        let v: f64 = gauss_2f1(&p(0.5, -0.5, 1.0), 1.0 - 1e-12).unwrap();
        assert!((v - 2.0 / std::f64::consts::PI).abs() < 1e-10);
    }

    #[test]
    fn euler_transform_case() {
        // F(3/2,3/2;2;x) = (1-x)^-1 F(1/2,1/2;2;x)
        for x in [0.96, 0.99, 0.999999] {
            let lhs: f64 = gauss_2f1(&p(1.5, 1.5, 2.0), x).unwrap();
            let rhs: f64 = gauss_2f1(&p(0.5, 0.5, 2.0), x).unwrap() / (1.0 - x);
            assert!((lhs - rhs).abs() < 1e-13 * lhs.abs(), "x={x}");
        }
    }

    #[test]
    fn derivative_at_zero() {
        // F'(1/2,1/2;1;0) = ab/c = 1/4
        let d1: f64 = gauss_2f1_derivative(&p(0.5, 0.5, 1.0), 0.0, 1).unwrap();
        assert_eq!(d1, 0.25);
        // second derivative at 0: (1/4)(9/8) = 9/32
        let d2: f64 = gauss_2f1_derivative(&p(0.5, 0.5, 1.0), 0.0, 2).unwrap();
        assert!((d2 - 9.0 / 32.0).abs() < 1e-16);
        assert!(matches!(
            gauss_2f1_derivative(&p(0.5, 0.5, 1.0), 0.0, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn near_one_value_cases() {
        // (1/2,1/2;3): 32/(9 pi)
        let v = near_one_value(&p(0.5, 0.5, 3.0)).unwrap();
        assert!((v - 32.0 / (9.0 * std::f64::consts::PI)).abs() < 1e-15);
        // (1/2,-1/2;1): 2/pi
        let v = near_one_value(&p(0.5, -0.5, 1.0)).unwrap();
        assert!((v - 2.0 / std::f64::consts::PI).abs() < 1e-15);
        // a = 0: exactly 1
        let v = near_one_value(&p(0.0, 0.3, 1.7)).unwrap();
        assert!((v - 1.0).abs() < 1e-13);
        // domain error when c <= a + b
        assert!(near_one_value(&p(0.5, 0.5, 1.0)).is_err());
    }

    #[test]
    fn log_singular_leading_term() {
        // (1/2,1/2): (ln 16 - ln(1-x)) / pi
        let x = 0.7;
        let v = log_singular_expansion(0.5, 0.5, x).unwrap();
        let want = ((16.0f64).ln() - (1.0 - x).ln()) / std::f64::consts::PI;
        assert!((v - want).abs() < 1e-15);
        // (1,1): R = 0, B = 1 -> -ln(1-x)
        let v = log_singular_expansion(1.0, 1.0, x).unwrap();
        assert!((v + (1.0 - x).ln()).abs() < 1e-15);
        assert!(log_singular_expansion(0.5, 0.5, 1.5).is_err());
    }

    #[test]
    fn asymptotic_kinds() {
        let pi = std::f64::consts::PI;
        let e = asymptotic_f_near_one(NearOneKind::C1, 0.5).unwrap();
        assert!((e.leading - (32.0f64).ln() / pi).abs() < 1e-15);
        let e = asymptotic_f_near_one(NearOneKind::C2, 1e-9).unwrap();
        assert!((e.leading - 4.0 / pi).abs() < 1e-15);
        assert!((e.value() - 4.0 / pi).abs() < 1e-7);
        assert!(asymptotic_f_near_one(NearOneKind::C1, 0.0).is_err());
        assert_eq!(e.remainder_order, "O(t^2 ln t)");
    }

    #[test]
    fn extended_precision_agrees_with_double() {
        for x in [0.3, 0.9, 0.97, 0.9999] {
            let d: f64 = gauss_2f1(&p(0.5, 0.5, 2.0), x).unwrap();
            let q: Dd = gauss_2f1(&p(0.5, 0.5, 2.0), Dd::from_f64(x)).unwrap();
            assert!(
                (d - q.to_f64()).abs() < 1e-13 * d.abs(),
                "x={x}: {d} vs {:?}",
                q
            );
        }
    }

    #[test]
    fn deep_endpoint_extended() {
        // At t = 1e-6 the direct series is hopeless; the log expansion in
        // dd must agree with the two-term asymptotic to O(t^2 ln t).
        let t = 1e-6;
        let f: Dd = gauss_2f1(&p(0.5, 0.5, 1.0), Dd::one() - Dd::from_f64(t)).unwrap();
        let approx = asymptotic_f_near_one(NearOneKind::C1, t).unwrap().value();
        assert!((f.to_f64() - approx).abs() < 10.0 * t * t * (1.0 / t).ln());
        // far deeper in, the dd value still tracks the leading log growth
        let t = 1e-10;
        let f: Dd = gauss_2f1(&p(0.5, 0.5, 1.0), Dd::one() - Dd::from_f64(t)).unwrap();
        let lead = (16.0 / t).ln() / std::f64::consts::PI;
        assert!((f.to_f64() - lead).abs() < 1e-9);
    }
}
