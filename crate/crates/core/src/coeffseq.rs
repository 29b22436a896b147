//! Exact arbitrary-precision-rational computation of every coefficient
//! sequence and recurrence the proofs rest on: the Wallis ratio W_n, the
//! convolution sequence beta_n with its five-factor recurrence, the partial
//! sums phi_i and their closed forms, alpha_n, the ratio sequence a_n/b_n,
//! the q_n = d_n/pi sequence with its P5 step polynomial, and the power
//! series coefficients of f3 and of h.
//!
//! Fast paths memoize the recurrence prefix (each term depends on the
//! previous); the direct summations are retained as oracles. Everything
//! here is exact — floats never decide a sign. Where a sign is a linear
//! form in pi, the decision goes through [`PiLinear`] and a certified
//! enclosure.
//!
//! For the long sweeps (indices up to 10^4) the step quotients
//! ratio_{n+1}/ratio_n and q_{n+1}/q_n are used in the form where the
//! Wallis factors cancel, so each step is a small exact rational; the
//! cancellation-free forms are pinned against the heavy direct quotients
//! over a prefix.

use crate::error::{Error, Result};
use crate::exact::{rat, rat_int, PiEnclosure, PiLinear, Rational, Sign};
use num::bigint::BigInt;
use num::{One, Signed, Zero};

fn bi(n: i64) -> BigInt {
    BigInt::from(n)
}

/// coeffs are highest-degree first; exact Horner evaluation.
fn poly_at(n: i64, coeffs: &[i64]) -> BigInt {
    let x = bi(n);
    let mut acc = BigInt::zero();
    for &c in coeffs {
        acc = acc * &x + bi(c);
    }
    acc
}

fn ratio_big(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den)
}

/// Memoized sequence generator. Confine one instance to one thread; see the
/// crate docs for the concurrency contract.
#[derive(Default)]
pub struct Sequences {
    wallis: Vec<Rational>,
    /// summand c_k = (11k-17) W_k^2 / ((k+1)(k+2)(k+3)) shared by beta/alpha
    beta_summand: Vec<Rational>,
    /// recurrence-path beta_n, index n (slot 0 unused)
    beta_fast: Vec<Rational>,
    /// memoized direct sums (still the oracle path: each entry was built by
    /// direct summation; residual sweeps hit every n twice otherwise)
    beta_direct_memo: Vec<Option<Rational>>,
}

impl Sequences {
    pub fn new() -> Self {
        Sequences::default()
    }

    /// Wallis ratio: W_0 = 1, W_{n+1} = (n + 1/2)/(n + 1) W_n.
    pub fn wallis(&mut self, n: usize) -> Rational {
        if self.wallis.is_empty() {
            self.wallis.push(rat(1, 1));
        }
        while self.wallis.len() <= n {
            let k = self.wallis.len() as i64 - 1;
            let next = &self.wallis[k as usize] * rat(2 * k + 1, 2 * k + 2);
            self.wallis.push(next);
        }
        self.wallis[n].clone()
    }

    fn wallis_sq(&mut self, n: usize) -> Rational {
        let w = self.wallis(n);
        &w * &w
    }

    /// lambda_n = (1/4)(11n-6)(2n+1)^2 / ((n+4)(11n-17)(n+1)), n >= 2.
    pub fn lambda(&self, n: usize) -> Rational {
        assert!(n >= 2, "lambda_n needs n >= 2");
        let n = n as i64;
        ratio_big(
            bi(11 * n - 6) * bi(2 * n + 1).pow(2),
            bi(4) * bi(n + 4) * bi(11 * n - 17) * bi(n + 1),
        )
    }

    fn summand(&mut self, k: usize) -> Rational {
        while self.beta_summand.len() <= k {
            let j = self.beta_summand.len() as i64;
            let w2 = self.wallis_sq(j as usize);
            let c = ratio_big(bi(11 * j - 17), bi(j + 1) * bi(j + 2) * bi(j + 3)) * w2;
            self.beta_summand.push(c);
        }
        self.beta_summand[k].clone()
    }

    /// Direct summation oracle:
    /// beta_n = sum_{k=0}^{n-1} (11k-17) W_k^2 / ((k+1)(k+2)(k+3)(n-k)).
    pub fn beta_direct(&mut self, n: usize) -> Rational {
        assert!(n >= 1, "beta_n needs n >= 1");
        if let Some(Some(v)) = self.beta_direct_memo.get(n) {
            return v.clone();
        }
        let mut acc = rat(0, 1);
        for k in 0..n {
            acc += self.summand(k) * rat(1, (n - k) as i64);
        }
        if self.beta_direct_memo.len() <= n {
            self.beta_direct_memo.resize(n + 1, None);
        }
        self.beta_direct_memo[n] = Some(acc.clone());
        acc
    }

    /// Increment of the beta recurrence (the term subtracted from
    /// lambda_n beta_n), n >= 2:
    /// (1/9)(2n+1)(880n^4+2404n^3-7319n^2-20301n-10404)
    ///   / ((11n-17)(n+1)^2(n+2)(n+3)(n+4)) * W_n^2.
    pub fn beta_step(&mut self, n: usize) -> Rational {
        assert!(n >= 2);
        let w2 = self.wallis_sq(n);
        let n = n as i64;
        let num = bi(2 * n + 1) * poly_at(n, &[880, 2404, -7319, -20301, -10404]);
        let den = bi(9) * bi(11 * n - 17) * bi(n + 1).pow(2) * bi(n + 2) * bi(n + 3) * bi(n + 4);
        ratio_big(num, den) * w2
    }

    /// Fast path: recurrence from beta_2; `beta_recurrence_residual` pins it
    /// against the direct oracle.
    pub fn beta(&mut self, n: usize) -> Rational {
        assert!(n >= 1);
        if self.beta_fast.is_empty() {
            let b1 = self.beta_direct(1);
            let b2 = self.beta_direct(2);
            self.beta_fast = vec![rat(0, 1), b1, b2];
        }
        while self.beta_fast.len() <= n {
            let m = self.beta_fast.len() - 1; // recurrence index, >= 2
            let next = self.lambda(m) * &self.beta_fast[m] - self.beta_step(m);
            self.beta_fast.push(next);
        }
        self.beta_fast[n].clone()
    }

    /// beta_{n+1} - lambda_n beta_n + step(n), both betas by direct
    /// summation; identically zero.
    pub fn beta_recurrence_residual(&mut self, n: usize) -> Rational {
        assert!(n >= 2);
        let b_next = self.beta_direct(n + 1);
        let b = self.beta_direct(n);
        b_next - self.lambda(n) * b + self.beta_step(n)
    }

    /// phi_i(n) partial sums, i in {0,1,2}:
    /// sum_{k=0}^{n-1} (k+1/2)^i W_k^2 / ((k+1)^2 (k+2)(k+3)(k+4)).
    pub fn phi_direct(&mut self, i: usize, n: usize) -> Rational {
        assert!(i <= 2 && n >= 1);
        let mut acc = rat(0, 1);
        for k in 0..n {
            let kk = k as i64;
            let w2 = self.wallis_sq(k);
            let den = bi(kk + 1).pow(2) * bi(kk + 2) * bi(kk + 3) * bi(kk + 4);
            let mut term = ratio_big(BigInt::one(), den) * w2;
            for _ in 0..i {
                term *= rat(2 * kk + 1, 2);
            }
            acc += term;
        }
        acc
    }

    /// The closed forms in W_n^2.
    pub fn phi_closed(&mut self, i: usize, n: usize) -> Rational {
        assert!(i <= 2 && n >= 1);
        let w2 = self.wallis_sq(n);
        let n = n as i64;
        let den3 = bi(n + 1) * bi(n + 2) * bi(n + 3);
        match i {
            2 => {
                let num = bi(2 * n + 1).pow(2) * poly_at(n, &[32, 168, 225]);
                ratio_big(num, bi(225) * den3) * w2 - rat(1, 6)
            }
            1 => {
                let num = bi(2) * bi(2 * n + 1) * poly_at(n, &[128, 736, 1236, 525]);
                rat(1, 3) - ratio_big(num, bi(525) * den3) * w2
            }
            0 => {
                let num = bi(4) * poly_at(n, &[2048, 12800, 25664, 18288, 3675]);
                ratio_big(num, bi(3675) * den3) * w2 - rat(2, 3)
            }
            _ => unreachable!(),
        }
    }

    /// Direct partial sum minus closed form; identically zero.
    pub fn phi_closed_form_residual(&mut self, i: usize, n: usize) -> Rational {
        self.phi_direct(i, n) - self.phi_closed(i, n)
    }

    /// alpha_n = (1/5)(5n^3+32n^2+77n+3)/((n+1)(n+2)(n+3)) W_n^2 + (9/80) beta_n.
    pub fn alpha(&mut self, n: usize) -> Rational {
        self.alpha_from_beta(n, false)
    }

    /// Oracle flavor: beta by direct summation.
    pub fn alpha_direct(&mut self, n: usize) -> Rational {
        self.alpha_from_beta(n, true)
    }

    fn alpha_from_beta(&mut self, n: usize, direct: bool) -> Rational {
        assert!(n >= 1);
        let w2 = self.wallis_sq(n);
        let beta = if direct {
            self.beta_direct(n)
        } else {
            self.beta(n)
        };
        let nn = n as i64;
        let head = ratio_big(
            poly_at(nn, &[5, 32, 77, 3]),
            bi(5) * bi(nn + 1) * bi(nn + 2) * bi(nn + 3),
        ) * w2;
        head + rat(9, 80) * beta
    }

    /// Closed form of alpha_{n+1} - lambda_n alpha_n, n >= 2:
    /// (3/80)(2n+1)(44n^3+293n^2+263n+840)
    ///   / ((11n-17)(n+1)^2(n+2)(n+3)(n+4)) W_n^2.
    pub fn alpha_step(&mut self, n: usize) -> Rational {
        assert!(n >= 2);
        let w2 = self.wallis_sq(n);
        let factor = Sequences::alpha_step_factor(n);
        factor * w2
    }

    /// alpha_step without the W_n^2 factor (whose positivity is free); lets
    /// the long positivity chain avoid building the big Wallis rationals.
    pub fn alpha_step_factor(n: usize) -> Rational {
        assert!(n >= 2);
        let n = n as i64;
        let num = bi(3) * bi(2 * n + 1) * poly_at(n, &[44, 293, 263, 840]);
        let den = bi(80) * bi(11 * n - 17) * bi(n + 1).pow(2) * bi(n + 2) * bi(n + 3) * bi(n + 4);
        ratio_big(num, den)
    }

    /// alpha_{n+1} - lambda_n alpha_n - alpha_step(n) with alphas built on
    /// the direct beta oracle; identically zero.
    pub fn alpha_recurrence_residual(&mut self, n: usize) -> Rational {
        assert!(n >= 2);
        let a_next = self.alpha_direct(n + 1);
        let a = self.alpha_direct(n);
        a_next - self.lambda(n) * a - self.alpha_step(n)
    }

    /// Certifies alpha_n < 0 for n in {1,2,3} and alpha_n > 0 for
    /// 4 <= n <= n_max. Values up to `exact_upto` are evaluated exactly;
    /// beyond that the recurrence alpha_{n+1} = lambda_n alpha_n + step_n
    /// propagates positivity because lambda_n and step_n are exact positive
    /// rationals for every checked n — the sign stays exact throughout.
    pub fn alpha_sign_pattern(&mut self, n_max: usize, exact_upto: usize) -> Result<()> {
        for n in 1..=3 {
            if !self.alpha(n).is_negative() {
                return Err(Error::PatternViolation(format!("alpha_{n} not negative")));
            }
        }
        let upto = exact_upto.min(n_max).max(4);
        for n in 4..=upto {
            if !self.alpha(n).is_positive() {
                return Err(Error::PatternViolation(format!("alpha_{n} not positive")));
            }
        }
        for n in upto..n_max {
            if !(self.lambda(n).is_positive() && Sequences::alpha_step_factor(n).is_positive()) {
                return Err(Error::PatternViolation(format!(
                    "induction step at n = {n} not positive"
                )));
            }
        }
        Ok(())
    }

    /// a_n of the Theorem-2 ratio: 15 for n = 0, else
    /// (64n^2-56n+15)/((2n-1)^2(n+1)) W_n^2.
    pub fn thm2_a(&mut self, n: usize) -> Rational {
        if n == 0 {
            return rat_int(15);
        }
        let w2 = self.wallis_sq(n);
        let n = n as i64;
        ratio_big(poly_at(n, &[64, -56, 15]), bi(2 * n - 1).pow(2) * bi(n + 1)) * w2
    }

    /// b_n of the Theorem-2 ratio: 24 for n = 0, else 8 W_n / (2n-1).
    pub fn thm2_b(&mut self, n: usize) -> Rational {
        if n == 0 {
            return rat_int(24);
        }
        let w = self.wallis(n);
        rat(8, 2 * n as i64 - 1) * w
    }

    /// a_n/b_n: 5/8 at n = 0, else (1/8)(64n^2-56n+15)/((2n-1)(n+1)) W_n.
    pub fn thm2_ratio(&mut self, n: usize) -> Rational {
        if n == 0 {
            return rat(5, 8);
        }
        let w = self.wallis(n);
        let n = n as i64;
        ratio_big(poly_at(n, &[64, -56, 15]), bi(8) * bi(2 * n - 1) * bi(n + 1)) * w
    }

    /// Displayed step quotient (a_{n+1}/b_{n+1})/(a_n/b_n) - 1
    ///   = -(1/2)(64n^2-168n+83)/((n+2)(64n^2-56n+15)), n >= 1.
    /// Negative exactly when 64n^2-168n+83 > 0, i.e. n >= 2; the n = 1 step
    /// is positive (+7/46), so the ratio peaks at n = 2.
    pub fn thm2_step_formula(n: usize) -> Rational {
        assert!(n >= 1);
        let n = n as i64;
        -ratio_big(
            poly_at(n, &[64, -168, 83]),
            bi(2) * bi(n + 2) * poly_at(n, &[64, -56, 15]),
        )
    }

    /// The same quotient from the ratio closed form with the Wallis factors
    /// cancelled: ratio_{n+1}/ratio_n = p(n+1)(2n-1)/(2(n+2)p(n)).
    pub fn thm2_step_direct(n: usize) -> Rational {
        assert!(n >= 1);
        let n = n as i64;
        ratio_big(
            poly_at(n + 1, &[64, -56, 15]) * bi(2 * n - 1),
            bi(2) * bi(n + 2) * poly_at(n, &[64, -56, 15]),
        ) - rat(1, 1)
    }

    /// thm2_step_direct - thm2_step_formula; identically zero.
    pub fn thm2_step_residual(&mut self, n: usize) -> Rational {
        Sequences::thm2_step_direct(n) - Sequences::thm2_step_formula(n)
    }

    /// Exact pattern of the ratio sequence up to n_max: strictly increasing
    /// steps at n = 0 and 1, strictly decreasing from n = 2 on. Heavy
    /// direct comparisons (Wallis factors in place) up to `exact_upto`,
    /// cancellation-based small-rational steps beyond.
    pub fn thm2_ratio_pattern(&mut self, n_max: usize, exact_upto: usize) -> Result<()> {
        if !(self.thm2_ratio(1) > self.thm2_ratio(0) && self.thm2_ratio(2) > self.thm2_ratio(1)) {
            return Err(Error::PatternViolation(
                "ratio must increase through n = 2".into(),
            ));
        }
        let upto = exact_upto.clamp(2, n_max);
        for n in 2..upto {
            if self.thm2_ratio(n + 1) >= self.thm2_ratio(n) {
                return Err(Error::PatternViolation(format!(
                    "ratio not strictly decreasing at n = {n}"
                )));
            }
        }
        for n in upto..n_max {
            if !Sequences::thm2_step_direct(n).is_negative() {
                return Err(Error::PatternViolation(format!(
                    "ratio step not negative at n = {n}"
                )));
            }
        }
        Ok(())
    }

    /// P4(n) = 4096n^4 - 14848n^3 + 17984n^2 - 8672n + 2025, the quartic in
    /// d_n and q_n.
    pub fn p4(n: usize) -> BigInt {
        poly_at(n as i64, &[4096, -14848, 17984, -8672, 2025])
    }

    /// Rewriting 16n^2(16n-29)^2 + (4528n-8672)n + 2025 whose terms are all
    /// nonnegative for n >= 2; used in the exact positivity chain.
    pub fn p4_rewritten(n: usize) -> BigInt {
        let n = n as i64;
        bi(16) * bi(n).pow(2) * bi(16 * n - 29).pow(2) + bi(4528 * n - 8672) * bi(n) + bi(2025)
    }

    /// q_n = d_n / pi = (9/32) P4(n) / ((2n-1)(2n-3)(n+1)(n+2)(32n-39)) W_n,
    /// n >= 2 (using sqrt(pi) Gamma(n+1/2)/Gamma(n+1) = pi W_n).
    pub fn thm3_q(&mut self, n: usize) -> Rational {
        assert!(n >= 2, "q_n needs n >= 2");
        let w = self.wallis(n);
        let n = n as i64;
        ratio_big(
            bi(9) * Sequences::p4(n as usize),
            bi(32) * bi(2 * n - 1) * bi(2 * n - 3) * bi(n + 1) * bi(n + 2) * bi(32 * n - 39),
        ) * w
    }

    /// q_{n+1}/q_n - 1 as an exact small rational (Wallis factors cancel):
    /// q_{n+1}/q_n = P4(n+1)(2n-3)(32n-39) / (2 P4(n)(n+3)(32n-7)).
    pub fn thm3_q_step(n: usize) -> Rational {
        assert!(n >= 2);
        let n = n as i64;
        ratio_big(
            Sequences::p4((n + 1) as usize) * bi(2 * n - 3) * bi(32 * n - 39),
            bi(2) * Sequences::p4(n as usize) * bi(n + 3) * bi(32 * n - 7),
        ) - rat(1, 1)
    }

    /// P5 in the monic power form.
    pub fn p5(n: usize) -> Rational {
        let n = n as i64;
        let pow = |k: u32| ratio_big(bi(n).pow(k), BigInt::one());
        pow(5) - rat(427, 96) * pow(4) + rat(1823, 256) * pow(3) - rat(33203, 6144) * pow(2)
            + rat(4831, 2048) * pow(1)
            - rat(51165, 131072)
    }

    /// P5 in the shifted form around n = 2; every coefficient is positive,
    /// so positivity for n >= 2 reads off the terms.
    pub fn p5_shifted(n: usize) -> Rational {
        let s = n as i64 - 2;
        let pow = |k: u32| ratio_big(bi(s).pow(k), BigInt::one());
        pow(5)
            + rat(533, 96) * pow(4)
            + rat(8861, 768) * pow(3)
            + rat(64957, 6144) * pow(2)
            + rat(23729, 6144) * pow(1)
            + rat(67235, 131072)
    }

    /// Difference of the two displayed forms of P5; identically zero.
    pub fn p5_forms_residual(n: usize) -> Rational {
        Sequences::p5(n) - Sequences::p5_shifted(n)
    }

    /// (q_{n+1}/q_n - 1) + 196608 P5(n)/((32n-7)(n+3) P4(n));
    /// identically zero for n >= 2.
    pub fn thm3_d_ratio_residual(n: usize) -> Rational {
        assert!(n >= 2);
        let nn = n as i64;
        let closed = rat(196608, 1) * Sequences::p5(n)
            / ratio_big(bi(32 * nn - 7) * bi(nn + 3) * Sequences::p4(n), BigInt::one());
        Sequences::thm3_q_step(n) + closed
    }

    /// Sign of d_n - 1 = q_n pi - 1, certified against the enclosure.
    pub fn d_minus_one_sign(&mut self, n: usize, enc: &PiEnclosure) -> Result<Sign> {
        let q = self.thm3_q(n);
        PiLinear::new(q, rat(-1, 1)).sign(enc)
    }

    /// The single crossing index n0 of the sign pattern of d_n - 1:
    /// (d_n - 1) >= 0 for 2 <= n <= n0 and < 0 for n0 < n <= n_max.
    /// q_n is checked strictly decreasing (exactly) along the way, which
    /// makes the crossing unique; q_n -> 0 makes it final.
    pub fn thm3_crossing_index(&mut self, n_max: usize, enc: &PiEnclosure) -> Result<usize> {
        let mut n0 = None;
        for n in 2..=n_max {
            if n < n_max && !Sequences::thm3_q_step(n).is_negative() {
                return Err(Error::PatternViolation(format!(
                    "q not strictly decreasing at n = {n}"
                )));
            }
            let sign = self.d_minus_one_sign(n, enc)?;
            match (sign, n0) {
                (Sign::Negative, None) => n0 = Some(n - 1),
                (Sign::Negative, Some(_)) => {}
                (_, Some(_)) => {
                    return Err(Error::PatternViolation(format!(
                        "d_n - 1 turned non-negative again at n = {n}"
                    )))
                }
                _ => {}
            }
        }
        n0.ok_or_else(|| {
            Error::PatternViolation(format!("no sign change of d_n - 1 up to n = {n_max}"))
        })
    }

    /// Power-series coefficient of f3 at order n >= 1:
    /// -(1/16)(4n-1)/((n+2)(n+1)) W_n^2; the constant term is 1/32.
    pub fn f3_coeff(&mut self, n: usize) -> Rational {
        assert!(n >= 1);
        let w2 = self.wallis_sq(n);
        let n = n as i64;
        -ratio_big(bi(4 * n - 1), bi(16) * bi(n + 2) * bi(n + 1)) * w2
    }

    /// Coefficient c_n of the series of h: c_0 and c_1 are explicit linear
    /// forms in pi; for n >= 2, c_n = (32n-39) W_n /((2n-1)(2n-3)) (d_n - 1).
    pub fn h_coeff(&mut self, n: usize) -> PiLinear {
        match n {
            0 => PiLinear::new(rat(2025, 64), rat(-99, 1)),
            1 => PiLinear::new(rat(1755, 256), rat(-39, 2)),
            _ => {
                let w = self.wallis(n);
                let q = self.thm3_q(n);
                let nn = n as i64;
                let factor = ratio_big(bi(32 * nn - 39), bi(2 * nn - 1) * bi(2 * nn - 3)) * w;
                PiLinear::new(&factor * &q, -factor)
            }
        }
    }
}

/// f5(x) = 1/10 - (3/40)x - (9/640)x^2 - (31/20480)x^3, exactly.
pub fn f5_value(x: &Rational) -> Rational {
    rat(1, 10) - rat(3, 40) * x - rat(9, 640) * x * x - rat(31, 20480) * x * x * x
}

/// Sequences the CLI can emit as exact numerator/denominator tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    Wallis,
    Beta,
    Alpha,
    Thm2Ratio,
    Q,
    P5,
    F3,
}

impl SeqKind {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "wallis" => SeqKind::Wallis,
            "beta" => SeqKind::Beta,
            "alpha" => SeqKind::Alpha,
            "thm2_ratio" => SeqKind::Thm2Ratio,
            "q" => SeqKind::Q,
            "P5" | "p5" => SeqKind::P5,
            "f3" => SeqKind::F3,
            _ => return Err(Error::Unknown(format!("sequence `{name}`"))),
        })
    }

    /// Smallest index the sequence is defined at.
    pub fn first_index(self) -> usize {
        match self {
            SeqKind::Wallis | SeqKind::Thm2Ratio | SeqKind::F3 => 0,
            SeqKind::Beta | SeqKind::Alpha => 1,
            SeqKind::Q | SeqKind::P5 => 2,
        }
    }

    pub fn value(self, seqs: &mut Sequences, n: usize) -> Rational {
        match self {
            SeqKind::Wallis => seqs.wallis(n),
            SeqKind::Beta => seqs.beta(n),
            SeqKind::Alpha => seqs.alpha(n),
            SeqKind::Thm2Ratio => seqs.thm2_ratio(n),
            SeqKind::Q => seqs.thm3_q(n),
            SeqKind::P5 => Sequences::p5(n),
            SeqKind::F3 => {
                if n == 0 {
                    rat(1, 32)
                } else {
                    seqs.f3_coeff(n)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;

    #[test]
    fn wallis_values_and_oracle() {
        let mut s = Sequences::new();
        assert_eq!(s.wallis(0), rat(1, 1));
        assert_eq!(s.wallis(2), rat(3, 8));
        assert_eq!(s.wallis(5), rat(63, 256));
        // double-factorial oracle (2n-1)!!/(2n)!!
        for n in 0..30usize {
            let mut prod = rat(1, 1);
            for j in 1..=n as i64 {
                prod *= rat(2 * j - 1, 2 * j);
            }
            assert_eq!(s.wallis(n), prod, "n={n}");
        }
    }

    #[test]
    fn beta_small_values() {
        let mut s = Sequences::new();
        assert_eq!(s.beta_direct(1), rat(-17, 6));
        assert_eq!(s.beta_direct(2), rat(-71, 48));
        assert_eq!(s.beta(1), rat(-17, 6));
    }

    #[test]
    fn beta_fast_path_matches_oracle() {
        let mut s = Sequences::new();
        for n in 1..=40 {
            assert_eq!(s.beta(n), s.beta_direct(n), "n={n}");
        }
    }

    #[test]
    fn beta_recurrence_residual_zero() {
        let mut s = Sequences::new();
        for n in [2usize, 3, 7, 50] {
            assert!(s.beta_recurrence_residual(n).is_zero(), "n={n}");
        }
    }

    #[test]
    fn phi_residuals_zero() {
        let mut s = Sequences::new();
        for i in 0..=2 {
            for n in [1usize, 2, 3, 10, 31] {
                assert!(s.phi_closed_form_residual(i, n).is_zero(), "i={i} n={n}");
            }
        }
    }

    #[test]
    fn alpha_matches_displayed_values() {
        let mut s = Sequences::new();
        assert_eq!(s.alpha(1), rat(-3, 40));
        assert_eq!(s.alpha(2), rat(-9, 640));
        assert_eq!(s.alpha(3), rat(-31, 20480));
        assert_eq!(s.alpha(4), rat(243, 163840));
        assert_eq!(s.alpha_direct(4), rat(243, 163840));
    }

    #[test]
    fn alpha_recurrence_residual_zero() {
        let mut s = Sequences::new();
        for n in [2usize, 4, 11, 100] {
            assert!(s.alpha_recurrence_residual(n).is_zero(), "n={n}");
        }
    }

    #[test]
    fn alpha_sign_pattern_holds() {
        let mut s = Sequences::new();
        s.alpha_sign_pattern(2000, 120).unwrap();
    }

    #[test]
    fn thm2_ratio_values() {
        let mut s = Sequences::new();
        assert_eq!(s.thm2_ratio(0), rat(5, 8));
        assert_eq!(s.thm2_ratio(1), rat(23, 32));
        assert_eq!(s.thm2_ratio(1) - s.thm2_ratio(0), rat(3, 32));
        // the closed form really is a_n / b_n
        for n in 0..12usize {
            let direct = s.thm2_a(n) / s.thm2_b(n);
            assert_eq!(direct, s.thm2_ratio(n), "n={n}");
        }
    }

    #[test]
    fn thm2_step_signs_and_residual() {
        let mut s = Sequences::new();
        // n = 1: 64-168+83 = -21 < 0 makes the step positive: +7/46
        assert_eq!(Sequences::thm2_step_formula(1), rat(7, 46));
        assert!(Sequences::thm2_step_formula(2).is_negative());
        assert!(Sequences::thm2_step_formula(10).is_negative());
        for n in 1..=60usize {
            assert!(s.thm2_step_residual(n).is_zero(), "n={n}");
            // the cancellation-free route agrees with the heavy quotient
            let heavy = s.thm2_ratio(n + 1) / s.thm2_ratio(n) - rat(1, 1);
            assert_eq!(Sequences::thm2_step_direct(n), heavy, "n={n}");
        }
    }

    #[test]
    fn thm2_pattern_peaks_at_two() {
        let mut s = Sequences::new();
        s.thm2_ratio_pattern(2000, 80).unwrap();
        assert!(s.thm2_ratio(2) > s.thm2_ratio(1));
        assert!(s.thm2_ratio(3) < s.thm2_ratio(2));
    }

    #[test]
    fn q_values_and_steps() {
        let mut s = Sequences::new();
        // q_2 = (9/32)(3369/900)(3/8)
        assert_eq!(s.thm3_q(2), rat(9, 32) * rat(3369, 900) * rat(3, 8));
        for n in 2..=60usize {
            let heavy = s.thm3_q(n + 1) / s.thm3_q(n) - rat(1, 1);
            assert_eq!(Sequences::thm3_q_step(n), heavy, "n={n}");
            assert!(Sequences::thm3_d_ratio_residual(n).is_zero(), "n={n}");
        }
    }

    #[test]
    fn p4_rewriting_is_an_identity() {
        // degree-4 polynomials agreeing at 6 points are identical
        for n in 0..6usize {
            assert_eq!(Sequences::p4(n), Sequences::p4_rewritten(n));
        }
        assert!(Sequences::p4(2) > bi(0));
    }

    #[test]
    fn p5_forms_and_value() {
        assert_eq!(Sequences::p5(2), rat(67235, 131072));
        assert_eq!(Sequences::p5_shifted(2), rat(67235, 131072));
        // degree-5 agreement at 7 points proves the identity; sweep more anyway
        for n in 2..200usize {
            assert!(Sequences::p5_forms_residual(n).is_zero(), "n={n}");
            assert!(Sequences::p5(n).is_positive(), "n={n}");
        }
    }

    #[test]
    fn d_sign_pattern_crosses_at_three() {
        let mut s = Sequences::new();
        let enc = PiEnclosure::standard();
        assert_eq!(s.d_minus_one_sign(2, &enc).unwrap(), Sign::Positive);
        assert_eq!(s.d_minus_one_sign(3, &enc).unwrap(), Sign::Positive);
        assert_eq!(s.d_minus_one_sign(4, &enc).unwrap(), Sign::Negative);
        assert_eq!(s.thm3_crossing_index(200, &enc).unwrap(), 3);
        // q_n -> 0 so d_n - 1 -> -1: late q values are already small
        let q = s.thm3_q(500);
        assert!(q.to_f64().unwrap() < 0.05);
    }

    #[test]
    fn f3_and_f5_values() {
        let mut s = Sequences::new();
        assert_eq!(s.f3_coeff(1), rat(-1, 128));
        assert_eq!(f5_value(&rat(1, 1)), rat(193, 20480));
        assert_eq!(f5_value(&rat(0, 1)), rat(1, 10));
    }

    #[test]
    fn h_coeffs_match_sign_story() {
        let mut s = Sequences::new();
        let enc = PiEnclosure::standard();
        for n in 0..=3 {
            assert_eq!(s.h_coeff(n).sign(&enc).unwrap(), Sign::Positive, "n={n}");
        }
        for n in 4..40 {
            assert_eq!(s.h_coeff(n).sign(&enc).unwrap(), Sign::Negative, "n={n}");
        }
        // c_0 = (2025/64) pi - 99 = 0.40195505498955169...
        assert!((s.h_coeff(0).to_f64() - 0.4019550549895517).abs() < 1e-15);
    }

    #[test]
    fn seq_kind_dispatch() {
        let mut s = Sequences::new();
        assert_eq!(
            SeqKind::parse("alpha").unwrap().value(&mut s, 4),
            rat(243, 163840)
        );
        assert_eq!(SeqKind::parse("wallis").unwrap().value(&mut s, 2), rat(3, 8));
        assert_eq!(SeqKind::parse("f3").unwrap().value(&mut s, 0), rat(1, 32));
        assert!(SeqKind::parse("nope").is_err());
        assert_eq!(SeqKind::Q.first_index(), 2);
    }
}
