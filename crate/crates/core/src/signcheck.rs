//! The two methodological tools behind every proof in the bounds module:
//! the auxiliary function H_{f,g} = (f'/g') g - f, whose sign controls the
//! monotonicity of f/g, and the sign/monotonicity classification of power
//! series whose coefficients change sign once.
//!
//! Policy: coefficient patterns are verified over a finite generated prefix
//! (default 10^4 terms) and the result says so unless the caller vouches
//! for the tail; endpoint limits like H(1^-) are supplied analytically by
//! the caller, never extrapolated from samples; every bisection bracket
//! keeps certified opposite signs at its endpoints, where "certified" means
//! the value clears 10x its evaluation-error estimate.

use crate::error::{Error, Result};
use crate::exact::{PiEnclosure, PiLinear, Rational, Sign};
use num::ToPrimitive;

/// A function and its caller-supplied analytic derivative on an open
/// interval. The derivative must be the analytic one — finite differences
/// are demoted to test oracles in this crate.
pub struct DifferentiablePair<'a> {
    pub value: &'a dyn Fn(f64) -> f64,
    pub derivative: &'a dyn Fn(f64) -> f64,
    pub domain: (f64, f64),
}

impl<'a> DifferentiablePair<'a> {
    fn contains(&self, x: f64) -> bool {
        self.domain.0 < x && x < self.domain.1
    }
}

/// H_{f,g}(x) = (f'(x)/g'(x)) g(x) - f(x).
pub fn h_aux(f: &DifferentiablePair, g: &DifferentiablePair, x: f64) -> Result<f64> {
    if !f.contains(x) || !g.contains(x) {
        return Err(Error::Domain(format!("x = {x} outside a pair's domain")));
    }
    let gp = (g.derivative)(x);
    if gp == 0.0 || !gp.is_finite() {
        return Err(Error::Domain(format!(
            "g' vanishes (or is not finite) at {x}"
        )));
    }
    Ok((f.derivative)(x) / gp * (g.value)(x) - (f.value)(x))
}

/// One generated series coefficient: float value for evaluation, certified
/// sign for the pattern checks, exact value when the stream has one.
#[derive(Debug, Clone)]
pub struct Coeff {
    pub value: f64,
    pub sign: Sign,
    pub exact: Option<Rational>,
}

impl Coeff {
    pub fn exact(r: Rational) -> Coeff {
        Coeff {
            value: r.to_f64().unwrap_or(f64::NAN),
            sign: Sign::of(&r),
            exact: Some(r),
        }
    }

    /// Float coefficient with a caller-asserted sign.
    pub fn float(value: f64, sign: Sign) -> Coeff {
        Coeff {
            value,
            sign,
            exact: None,
        }
    }

    /// Coefficient that is a linear form in pi; the sign is certified
    /// against the enclosure and indeterminacy propagates as an error.
    pub fn pi_linear(form: &PiLinear, enc: &PiEnclosure) -> Result<Coeff> {
        Ok(Coeff {
            value: form.to_f64(),
            sign: form.sign(enc)?,
            exact: None,
        })
    }
}

/// Lazily generated coefficient sequence.
pub trait CoeffStream {
    fn coeff(&mut self, index: usize) -> Result<Coeff>;
}

impl<F: FnMut(usize) -> Result<Coeff>> CoeffStream for F {
    fn coeff(&mut self, index: usize) -> Result<Coeff> {
        self(index)
    }
}

/// Value supplied for a series or ratio at the right endpoint — an analytic
/// value or a signed infinity, never an extrapolation.
#[derive(Debug, Clone, Copy)]
pub enum Endpoint {
    Value(f64),
    PosInfinity,
    NegInfinity,
}

impl Endpoint {
    fn is_strictly_positive(self) -> bool {
        match self {
            Endpoint::Value(v) => v > 0.0,
            Endpoint::PosInfinity => true,
            Endpoint::NegInfinity => false,
        }
    }

    fn is_zero(self) -> bool {
        matches!(self, Endpoint::Value(v) if v == 0.0)
    }
}

/// Bracket around a sign change with certified opposite signs at the ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NegativeThroughout,
    PositiveThroughout,
    UniqueCrossing,
}

/// Outcome of the series sign lemma.
#[derive(Debug, Clone)]
pub struct SignAnalysis {
    pub verdict: Verdict,
    pub crossing: Option<Bracket>,
    /// How far the coefficient pattern was actually checked.
    pub pattern_checked_to: usize,
}

impl SignAnalysis {
    /// The same analysis read for -S.
    pub fn negated(mut self) -> SignAnalysis {
        self.verdict = match self.verdict {
            Verdict::NegativeThroughout => Verdict::PositiveThroughout,
            Verdict::PositiveThroughout => Verdict::NegativeThroughout,
            Verdict::UniqueCrossing => Verdict::UniqueCrossing,
        };
        self
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SignCheckOptions {
    /// How many coefficients the pattern is verified over.
    pub pattern_prefix: usize,
    /// Absolute width of crossing brackets.
    pub bisect_tol: f64,
    /// Term cap for series evaluation.
    pub eval_cap: usize,
    /// Caller vouches that the coefficient pattern holds for every index,
    /// not only the generated prefix.
    pub tail_certified: bool,
}

impl Default for SignCheckOptions {
    fn default() -> Self {
        SignCheckOptions {
            pattern_prefix: 10_000,
            bisect_tol: 1e-12,
            eval_cap: 1_000_000,
            tail_certified: false,
        }
    }
}

/// Classification of a ratio of power series A/B on (0, r).
#[derive(Debug, Clone, PartialEq)]
pub enum RatioKind {
    MonotoneIncreasing,
    MonotoneDecreasing,
    IncreasingThenDecreasing(Bracket),
    DecreasingThenIncreasing(Bracket),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    /// Pattern held on the generated prefix of this many terms.
    PrefixVerified(usize),
    /// Caller supplied a symbolic certificate for the whole tail.
    TailCertified,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioClassification {
    pub kind: RatioKind,
    pub verification: Verification,
}

/// Series evaluator over cached f64 coefficients with a gross-sum error
/// estimate; extends the cache from the stream on demand.
struct SeriesEval<'s> {
    stream: &'s mut dyn CoeffStream,
    cache: Vec<f64>,
    cap: usize,
}

impl<'s> SeriesEval<'s> {
    fn coeff(&mut self, k: usize) -> Result<f64> {
        while self.cache.len() <= k {
            let c = self.stream.coeff(self.cache.len())?;
            self.cache.push(c.value);
        }
        Ok(self.cache[k])
    }

    /// (value, error estimate) of sum_k c_k t^k, compensated.
    fn eval(&mut self, t: f64, min_terms: usize) -> Result<(f64, f64)> {
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut gross = 0.0f64;
        let mut tp = 1.0f64;
        let mut quiet = 0usize;
        for k in 0..self.cap {
            let term = self.coeff(k)? * tp;
            let y = term - comp;
            let s = sum + y;
            comp = (s - sum) - y;
            sum = s;
            gross += term.abs();
            tp *= t;
            if tp == 0.0 {
                return Ok((sum, 8.0 * f64::EPSILON * gross));
            }
            if term.abs() <= 8.673617379884035e-19 * (sum.abs() + 1e-300) && k >= min_terms {
                quiet += 1;
                if quiet >= 3 {
                    return Ok((sum, 8.0 * f64::EPSILON * gross));
                }
            } else {
                quiet = 0;
            }
        }
        Err(Error::NonConvergence(format!(
            "series evaluation at t = {t} hit the term cap"
        )))
    }

    /// (value, error) of the derivative series sum_k k c_k x^(k-1).
    fn eval_derivative(&mut self, x: f64) -> Result<(f64, f64)> {
        let mut sum = 0.0f64;
        let mut gross = 0.0f64;
        let mut xp = 1.0f64;
        let mut quiet = 0usize;
        for k in 1..self.cap {
            let term = k as f64 * self.coeff(k)? * xp;
            sum += term;
            gross += term.abs();
            xp *= x;
            if term.abs() <= 8.673617379884035e-19 * (sum.abs() + 1e-300) && k > 2 {
                quiet += 1;
                if quiet >= 3 {
                    return Ok((sum, 8.0 * f64::EPSILON * gross));
                }
            } else {
                quiet = 0;
            }
        }
        Err(Error::NonConvergence(format!(
            "derivative series at x = {x} hit the term cap"
        )))
    }
}

/// Certified sign of (value, err): the value must clear 10x its error.
pub fn certified_sign(value: f64, err: f64) -> Option<Sign> {
    if value.abs() > 10.0 * err {
        Some(if value > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        })
    } else {
        None
    }
}

/// Bisection that only ever acts on certified signs. `f` returns a value
/// with an error estimate; the endpoints must certify to opposite signs.
/// When a midpoint cannot be certified, nearby split points are tried
/// before giving up loudly.
pub fn certified_bisect(
    f: &mut dyn FnMut(f64) -> Result<(f64, f64)>,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> Result<Bracket> {
    let (vlo, elo) = f(lo)?;
    let (vhi, ehi) = f(hi)?;
    let slo = certified_sign(vlo, elo)
        .ok_or_else(|| Error::Indeterminate(format!("cannot certify sign at {lo}")))?;
    let shi = certified_sign(vhi, ehi)
        .ok_or_else(|| Error::Indeterminate(format!("cannot certify sign at {hi}")))?;
    if slo == shi {
        return Err(Error::Domain("bisection endpoints have equal signs".into()));
    }
    while hi - lo > tol {
        let w = hi - lo;
        let mut advanced = false;
        for frac in [0.5, 0.375, 0.625, 0.25, 0.75] {
            let mid = lo + frac * w;
            let (v, e) = f(mid)?;
            if let Some(s) = certified_sign(v, e) {
                if s == slo {
                    lo = mid;
                } else {
                    hi = mid;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Err(Error::Indeterminate(format!(
                "no certifiable split point inside [{lo}, {hi}]"
            )));
        }
    }
    Ok(Bracket { lo, hi })
}

/// Sign classification of S(t) = -sum_{k<=m} a_k t^k + sum_{k>m} a_k t^k
/// (a_k >= 0, a_m > 0, tail not identically zero) on (0, r):
/// S(r^-) <= 0 forces S < 0 throughout; S(r^-) > 0 forces a unique
/// crossing t0, returned as a certified bracket.
pub fn series_sign_analysis(
    stream: &mut dyn CoeffStream,
    m: usize,
    r: f64,
    s_at_r: Endpoint,
    opts: &SignCheckOptions,
) -> Result<SignAnalysis> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::Domain("series radius must be positive".into()));
    }
    let mut values: Vec<f64> = Vec::with_capacity(opts.pattern_prefix + 1);
    let mut tail_has_positive = false;
    for k in 0..=opts.pattern_prefix {
        let c = stream.coeff(k)?;
        if k <= m {
            if c.sign == Sign::Positive {
                return Err(Error::PatternViolation(format!(
                    "head coefficient {k} enters positively"
                )));
            }
            if k == m && c.sign != Sign::Negative {
                return Err(Error::PatternViolation(
                    "a_m must be strictly positive (the head enters negatively)".into(),
                ));
            }
        } else {
            if c.sign == Sign::Negative {
                return Err(Error::PatternViolation(format!(
                    "tail coefficient {k} enters negatively"
                )));
            }
            if c.sign == Sign::Positive {
                tail_has_positive = true;
            }
        }
        values.push(c.value);
    }
    if !tail_has_positive {
        return Err(Error::PatternViolation(
            "tail identically zero over the generated prefix".into(),
        ));
    }

    let checked_to = opts.pattern_prefix;
    if !s_at_r.is_strictly_positive() {
        return Ok(SignAnalysis {
            verdict: Verdict::NegativeThroughout,
            crossing: None,
            pattern_checked_to: checked_to,
        });
    }

    // Unique crossing: locate it with certified signs only.
    let mut eval = SeriesEval {
        stream,
        cache: values,
        cap: opts.eval_cap,
    };
    let min_terms = m + 1;
    let mut lo = None;
    for j in 1..200 {
        let t = r * (0.5f64).powi(j);
        let (v, e) = eval.eval(t, min_terms)?;
        if certified_sign(v, e) == Some(Sign::Negative) {
            lo = Some(t);
            break;
        }
    }
    let mut hi = None;
    for j in 1..60 {
        let t = r * (1.0 - (0.5f64).powi(j));
        let (v, e) = eval.eval(t, min_terms)?;
        if certified_sign(v, e) == Some(Sign::Positive) {
            hi = Some(t);
            break;
        }
    }
    let (lo, hi) = match (lo, hi) {
        (Some(l), Some(h)) if l < h => (l, h),
        _ => {
            return Err(Error::Indeterminate(
                "could not certify a sign change despite S(r^-) > 0".into(),
            ))
        }
    };
    let bracket = certified_bisect(&mut |t| eval.eval(t, min_terms), lo, hi, opts.bisect_tol)?;
    Ok(SignAnalysis {
        verdict: Verdict::UniqueCrossing,
        crossing: Some(bracket),
        pattern_checked_to: checked_to,
    })
}

/// Monotonicity classification of A/B on (0, r) from the piecewise
/// monotonicity of {a_k/b_k} (peak or valley at m) and the sign of
/// H_{A,B}(r^-), supplied analytically. Exact coefficients are required
/// for the pattern check; the bracket is then located in f64.
pub fn ratio_monotonicity_classify(
    a: &mut dyn CoeffStream,
    b: &mut dyn CoeffStream,
    m: usize,
    r: f64,
    h_limit: Endpoint,
    opts: &SignCheckOptions,
) -> Result<RatioClassification> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::Domain("series radius must be positive".into()));
    }
    let prefix = opts.pattern_prefix.max(m + 2);
    let mut a_vals = Vec::with_capacity(prefix + 1);
    let mut b_vals = Vec::with_capacity(prefix + 1);
    let mut a_exact: Vec<Rational> = Vec::with_capacity(prefix + 1);
    let mut b_exact: Vec<Rational> = Vec::with_capacity(prefix + 1);
    for k in 0..=prefix {
        let ca = a.coeff(k)?;
        let cb = b.coeff(k)?;
        if cb.sign != Sign::Positive {
            return Err(Error::PatternViolation(format!(
                "b_{k} must be strictly positive"
            )));
        }
        match (ca.exact.clone(), cb.exact.clone()) {
            (Some(ea), Some(eb)) => {
                a_exact.push(ea);
                b_exact.push(eb);
            }
            _ => {
                return Err(Error::PatternViolation(
                    "ratio pattern check needs exact coefficients".into(),
                ))
            }
        }
        a_vals.push(ca.value);
        b_vals.push(cb.value);
    }

    // step sign at k: sign of a_{k+1} b_k - a_k b_{k+1} (b positive).
    // Pure integer cross-multiplication: BigRational arithmetic would
    // gcd-normalize every product, which is ruinous for streams whose
    // coefficients carry Wallis-ratio factors.
    let step_sign = |k: usize| -> Sign {
        let lhs = a_exact[k + 1].numer() * b_exact[k].numer()
            * (a_exact[k].denom() * b_exact[k + 1].denom());
        let rhs = a_exact[k].numer() * b_exact[k + 1].numer()
            * (a_exact[k + 1].denom() * b_exact[k].denom());
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => Sign::Positive,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Less => Sign::Negative,
        }
    };
    let mut any_strict = false;
    let (mut head_up, mut head_down) = (true, true);
    for k in 0..m {
        match step_sign(k) {
            Sign::Positive => {
                head_down = false;
                any_strict = true;
            }
            Sign::Negative => {
                head_up = false;
                any_strict = true;
            }
            Sign::Zero => {}
        }
    }
    let (mut tail_up, mut tail_down) = (true, true);
    for k in m..prefix {
        match step_sign(k) {
            Sign::Positive => {
                tail_down = false;
                any_strict = true;
            }
            Sign::Negative => {
                tail_up = false;
                any_strict = true;
            }
            Sign::Zero => {}
        }
    }
    if !any_strict {
        return Err(Error::PatternViolation(
            "the ratio sequence is constant over the generated prefix".into(),
        ));
    }
    let peak = head_up && tail_down;
    let valley = head_down && tail_up;
    if peak == valley {
        return Err(Error::PatternViolation(format!(
            "ratio sequence is not piecewise monotone around m = {m}"
        )));
    }

    let verification = if opts.tail_certified {
        Verification::TailCertified
    } else {
        Verification::PrefixVerified(prefix)
    };

    let h_pos = h_limit.is_strictly_positive();
    let monotone = if peak {
        h_pos || h_limit.is_zero() // H(r^-) >= 0 keeps A/B increasing
    } else {
        !h_pos // H(r^-) <= 0 keeps A/B decreasing
    };
    if monotone {
        return Ok(RatioClassification {
            kind: if peak {
                RatioKind::MonotoneIncreasing
            } else {
                RatioKind::MonotoneDecreasing
            },
            verification,
        });
    }

    // Unimodal case: bracket the extremum of A/B, i.e. the sign change of
    // H_{A,B}(x) = (A'(x)/B'(x)) B(x) - A(x); B' > 0 on (0, r) since the
    // b_k are positive, so the sign of (A/B)' is the sign of H.
    let cap = opts.eval_cap;
    let mut a_eval = SeriesEval {
        stream: a,
        cache: a_vals,
        cap,
    };
    let mut b_eval = SeriesEval {
        stream: b,
        cache: b_vals,
        cap,
    };
    let mut h_at = |x: f64| -> Result<(f64, f64)> {
        let (av, ae) = a_eval.eval(x, 1)?;
        let (bv, be) = b_eval.eval(x, 1)?;
        let (apv, ape) = a_eval.eval_derivative(x)?;
        let (bpv, bpe) = b_eval.eval_derivative(x)?;
        let h = apv / bpv * bv - av;
        let rel = ape / apv.abs().max(1e-300) + bpe / bpv.abs().max(1e-300);
        let err = (apv / bpv * bv).abs() * rel + (apv / bpv).abs() * be + ae;
        Ok((h, err))
    };
    let want_near_zero = if peak { Sign::Positive } else { Sign::Negative };
    let mut lo = None;
    for j in 1..60 {
        let x = r * (0.5f64).powi(j);
        let (v, e) = h_at(x)?;
        if certified_sign(v, e) == Some(want_near_zero) {
            lo = Some(x);
            break;
        }
    }
    let mut hi = None;
    for j in 1..60 {
        let x = r * (1.0 - (0.5f64).powi(j));
        let (v, e) = h_at(x)?;
        if certified_sign(v, e) == Some(want_near_zero.flip()) {
            hi = Some(x);
            break;
        }
    }
    let (lo, hi) = match (lo, hi) {
        (Some(l), Some(h)) if l < h => (l, h),
        _ => {
            return Err(Error::Indeterminate(
                "could not certify the H sign change for the unimodal case".into(),
            ))
        }
    };
    let bracket = certified_bisect(&mut h_at, lo, hi, opts.bisect_tol)?;
    Ok(RatioClassification {
        kind: if peak {
            RatioKind::IncreasingThenDecreasing(bracket)
        } else {
            RatioKind::DecreasingThenIncreasing(bracket)
        },
        verification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffseq::{f5_value, Sequences};
    use crate::exact::rat;

    #[test]
    fn h_aux_of_equal_pair_vanishes() {
        let v = |x: f64| x * x + 1.0;
        let d = |x: f64| 2.0 * x;
        let f = DifferentiablePair {
            value: &v,
            derivative: &d,
            domain: (0.0, 1.0),
        };
        let g = DifferentiablePair {
            value: &v,
            derivative: &d,
            domain: (0.0, 1.0),
        };
        for x in [0.1, 0.5, 0.9] {
            assert_eq!(h_aux(&f, &g, x).unwrap(), 0.0);
        }
        assert!(h_aux(&f, &g, 1.5).is_err());
    }

    #[test]
    fn h_aux_detects_vanishing_gprime() {
        let v = |x: f64| x * x;
        let d = |x: f64| 2.0 * x;
        let gv = |_: f64| 1.0;
        let gd = |_: f64| 0.0;
        let f = DifferentiablePair {
            value: &v,
            derivative: &d,
            domain: (-1.0, 1.0),
        };
        let g = DifferentiablePair {
            value: &gv,
            derivative: &gd,
            domain: (-1.0, 1.0),
        };
        assert!(matches!(h_aux(&f, &g, 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn quotient_rule_identity() {
        // (f/g)' = (g'/g^2) H_{f,g} with analytic pieces
        let fv = |x: f64| x * x * x + 2.0 * x;
        let fd = |x: f64| 3.0 * x * x + 2.0;
        let gv = |x: f64| (2.0 * x).exp();
        let gd = |x: f64| 2.0 * (2.0 * x).exp();
        let f = DifferentiablePair {
            value: &fv,
            derivative: &fd,
            domain: (0.0, 2.0),
        };
        let g = DifferentiablePair {
            value: &gv,
            derivative: &gd,
            domain: (0.0, 2.0),
        };
        for x in [0.2, 0.7, 1.5] {
            let lhs = (fd(x) * gv(x) - fv(x) * gd(x)) / (gv(x) * gv(x));
            let rhs = gd(x) / (gv(x) * gv(x)) * h_aux(&f, &g, x).unwrap();
            assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1e-30), "x={x}");
        }
    }

    #[test]
    fn h_derivative_identity() {
        // H' = (f'/g')' g; with f = x^3, g = x^2: H = x^3/2, H' = 1.5 x^2
        let fv = |x: f64| x * x * x;
        let fd = |x: f64| 3.0 * x * x;
        let gv = |x: f64| x * x;
        let gd = |x: f64| 2.0 * x;
        let f = DifferentiablePair {
            value: &fv,
            derivative: &fd,
            domain: (0.1, 3.0),
        };
        let g = DifferentiablePair {
            value: &gv,
            derivative: &gd,
            domain: (0.1, 3.0),
        };
        let h = 1e-5;
        for x in [0.5, 1.0, 2.0] {
            let fd_h = (h_aux(&f, &g, x + h).unwrap() - h_aux(&f, &g, x - h).unwrap()) / (2.0 * h);
            let analytic = 1.5 * x * x;
            assert!((fd_h - analytic).abs() < 1e-6 * analytic, "x={x}");
        }
    }

    #[test]
    fn synthetic_linear_crossing() {
        // S(t) = -1 + 2t on (0,1): crossing at exactly 1/2
        let mut stream = |k: usize| -> Result<Coeff> {
            Ok(match k {
                0 => Coeff::exact(rat(-1, 1)),
                1 => Coeff::exact(rat(2, 1)),
                _ => Coeff::exact(rat(0, 1)),
            })
        };
        let opts = SignCheckOptions {
            pattern_prefix: 50,
            ..Default::default()
        };
        let out = series_sign_analysis(&mut stream, 0, 1.0, Endpoint::Value(1.0), &opts).unwrap();
        assert_eq!(out.verdict, Verdict::UniqueCrossing);
        let b = out.crossing.unwrap();
        assert!(b.width() <= 1e-12);
        assert!(b.lo <= 0.5 && 0.5 <= b.hi);
    }

    #[test]
    fn f5_is_positive_throughout() {
        // S = -f5: head constant -1/10 at m = 0, positive tail, S(1^-) < 0
        let coeffs = [rat(-1, 10), rat(3, 40), rat(9, 640), rat(31, 20480)];
        let mut stream = |k: usize| -> Result<Coeff> {
            Ok(Coeff::exact(
                coeffs.get(k).cloned().unwrap_or_else(|| rat(0, 1)),
            ))
        };
        let opts = SignCheckOptions {
            pattern_prefix: 40,
            ..Default::default()
        };
        let s_at_1 = -f5_value(&rat(1, 1));
        assert_eq!(s_at_1, rat(-193, 20480));
        let out = series_sign_analysis(
            &mut stream,
            0,
            1.0,
            Endpoint::Value(s_at_1.to_f64().unwrap()),
            &opts,
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::NegativeThroughout);
        // so f5 itself is positive throughout
        assert_eq!(out.negated().verdict, Verdict::PositiveThroughout);
    }

    #[test]
    fn f3_is_positive_throughout() {
        // S = -f3: head -1/32, tail (1/16)(4n-1)/((n+2)(n+1)) W_n^2 > 0,
        // S(1^-) = 0
        let mut seqs = Sequences::new();
        let mut stream = move |k: usize| -> Result<Coeff> {
            Ok(if k == 0 {
                Coeff::exact(rat(-1, 32))
            } else {
                Coeff::exact(-seqs.f3_coeff(k))
            })
        };
        let opts = SignCheckOptions {
            pattern_prefix: 600,
            ..Default::default()
        };
        let out = series_sign_analysis(&mut stream, 0, 1.0, Endpoint::Value(0.0), &opts).unwrap();
        assert_eq!(out.verdict, Verdict::NegativeThroughout);
        assert_eq!(out.pattern_checked_to, 600);
    }

    #[test]
    fn pattern_violations_are_loud() {
        let opts = SignCheckOptions {
            pattern_prefix: 10,
            ..Default::default()
        };
        // positive coefficient inside the head
        let mut bad = |k: usize| -> Result<Coeff> {
            Ok(Coeff::exact(if k == 0 { rat(1, 2) } else { rat(1, 1) }))
        };
        assert!(matches!(
            series_sign_analysis(&mut bad, 0, 1.0, Endpoint::Value(0.0), &opts),
            Err(Error::PatternViolation(_))
        ));
        // tail identically zero
        let mut dead = |k: usize| -> Result<Coeff> {
            Ok(Coeff::exact(if k == 0 { rat(-1, 2) } else { rat(0, 1) }))
        };
        assert!(matches!(
            series_sign_analysis(&mut dead, 0, 1.0, Endpoint::Value(0.0), &opts),
            Err(Error::PatternViolation(_))
        ));
    }

    #[test]
    fn constant_ratio_rejected() {
        let mut a = |_: usize| -> Result<Coeff> { Ok(Coeff::exact(rat(1, 4))) };
        let mut b = |_: usize| -> Result<Coeff> { Ok(Coeff::exact(rat(1, 4))) };
        let opts = SignCheckOptions {
            pattern_prefix: 12,
            ..Default::default()
        };
        assert!(matches!(
            ratio_monotonicity_classify(&mut a, &mut b, 1, 1.0, Endpoint::Value(1.0), &opts),
            Err(Error::PatternViolation(_))
        ));
    }

    #[test]
    fn synthetic_monotone_increasing() {
        // a_k/b_k = min(k,2) with b_k = 4^-k; H(1^-) = 3/2 >= 0
        fn quarter_pow(k: usize) -> Rational {
            let mut r = rat(1, 1);
            for _ in 0..k {
                r *= rat(1, 4);
            }
            r
        }
        let mut a = |k: usize| -> Result<Coeff> {
            Ok(Coeff::exact(rat(k.min(2) as i64, 1) * quarter_pow(k)))
        };
        let mut b = |k: usize| -> Result<Coeff> { Ok(Coeff::exact(quarter_pow(k))) };
        let opts = SignCheckOptions {
            pattern_prefix: 64,
            ..Default::default()
        };
        let out = ratio_monotonicity_classify(&mut a, &mut b, 2, 1.0, Endpoint::Value(1.5), &opts)
            .unwrap();
        assert_eq!(out.kind, RatioKind::MonotoneIncreasing);
        assert_eq!(out.verification, Verification::PrefixVerified(64));
        // brute-force confirmation on a fine grid: A/B strictly increasing
        let eval = |x: f64| {
            let mut a_sum = 0.0;
            let mut b_sum = 0.0;
            let mut xp = 1.0;
            for k in 0..200usize {
                a_sum += (k.min(2)) as f64 * (0.25f64).powi(k as i32) * xp;
                b_sum += (0.25f64).powi(k as i32) * xp;
                xp *= x;
            }
            a_sum / b_sum
        };
        let mut prev = eval(0.001);
        for i in 1..100 {
            let x = i as f64 / 100.0;
            let cur = eval(x);
            assert!(cur > prev);
            prev = cur;
        }
    }

    #[test]
    fn theorem2_instance_classifies_with_bracket() {
        // a_n, b_n of the K-ratio proof; peak at m = 2; H(1^-) = -64/pi
        let mut sa = Sequences::new();
        let mut sb = Sequences::new();
        let mut a = move |k: usize| -> Result<Coeff> { Ok(Coeff::exact(sa.thm2_a(k))) };
        let mut b = move |k: usize| -> Result<Coeff> { Ok(Coeff::exact(sb.thm2_b(k))) };
        let opts = SignCheckOptions {
            pattern_prefix: 400,
            tail_certified: true,
            ..Default::default()
        };
        let h1 = -64.0 / std::f64::consts::PI;
        let out = ratio_monotonicity_classify(&mut a, &mut b, 2, 1.0, Endpoint::Value(h1), &opts)
            .unwrap();
        match out.kind {
            RatioKind::IncreasingThenDecreasing(b) => {
                // crossing x1 = 0.953760748122694... (50-digit bisection)
                assert!(b.width() <= 1e-12);
                assert!((b.midpoint() - 0.953760748122694).abs() < 1e-9);
            }
            other => panic!("unexpected classification {other:?}"),
        }
        assert_eq!(out.verification, Verification::TailCertified);
    }
}
