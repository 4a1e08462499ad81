//! Structure function f(n) of the deformation, the defining recurrence,
//! bracket numbers and their generating-function coefficients.
//!
//! Closed forms:
//!
//! ```text
//! f(n) = q^β [ (p^{nν} − q^{nα})/(p^ν − q^α)
//!            + 2γ (p^{nν} − (−1)^n q^{nα})/(p^ν + q^α) ]      (generic)
//! f(n) = (n + 2γ (1−(−1)^n)/2) q^{(n−1)α+β}                   (degenerate)
//! ```
//!
//! both solving f(0) = 0, f(n+1) = p^ν f(n) + (1 + 2γ(−1)^n) q^{αn+β}.

use serde::{Deserialize, Serialize};

use crate::params::{DeformationParams, Regime};
use crate::{Error, Result};

/// Exponent magnitude beyond which powers are handled in log space.
const LN_OVERFLOW: f64 = 700.0;

/// Eigenvalue of the parity operator K on the context vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kappa {
    Plus,
    Minus,
}

impl Kappa {
    pub fn sign(self) -> f64 {
        match self {
            Kappa::Plus => 1.0,
            Kappa::Minus => -1.0,
        }
    }

    /// (−1)^m as a Kappa.
    pub fn from_parity(m: i64) -> Self {
        if m.rem_euclid(2) == 0 { Kappa::Plus } else { Kappa::Minus }
    }
}

/// One evaluation of the structure function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StructureValue {
    pub n: i64,
    pub value: f64,
    pub branch: Regime,
    /// ln(value), populated on request for log-scaled tables.
    pub log_scaled: Option<f64>,
}

/// One bracket number [n; α,β,ν; γκ] with K replaced by its eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BracketValue {
    pub n: i64,
    pub kappa: Kappa,
    pub value: f64,
}

/// Sign/log-magnitude pair; arithmetic that cannot overflow.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SignedLog {
    /// −1, 0 or +1.
    pub sign: f64,
    /// ln|x|; −∞ encodes zero.
    pub ln: f64,
}

impl SignedLog {
    pub fn zero() -> Self {
        SignedLog { sign: 0.0, ln: f64::NEG_INFINITY }
    }

    pub fn new(sign: f64, ln: f64) -> Self {
        if sign == 0.0 || ln == f64::NEG_INFINITY {
            Self::zero()
        } else {
            SignedLog { sign: sign.signum(), ln }
        }
    }

    pub fn add(self, other: Self) -> Self {
        if self.sign == 0.0 {
            return other;
        }
        if other.sign == 0.0 {
            return self;
        }
        let (big, small) = if self.ln >= other.ln { (self, other) } else { (other, self) };
        let r = (small.ln - big.ln).exp();
        if big.sign == small.sign {
            SignedLog::new(big.sign, big.ln + r.ln_1p())
        } else {
            let d = 1.0 - r;
            if d <= 0.0 {
                SignedLog::zero()
            } else {
                SignedLog::new(big.sign, big.ln + d.ln())
            }
        }
    }
}

/// f(n) in sign/log form; never overflows. Internal workhorse for the
/// closed form and for sign determination at large n.
pub(crate) fn f_signed_log(params: &DeformationParams, n: i64) -> SignedLog {
    if n == 0 {
        return SignedLog::zero();
    }
    let lp = params.ln_p_nu();
    let lq = params.ln_q_alpha();
    let lqb = params.beta * params.q.ln();
    let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
    match params.regime().regime {
        Regime::Degenerate => {
            let odd = if n % 2 == 0 { 0.0 } else { 1.0 };
            let coeff = n as f64 + 2.0 * params.gamma * odd;
            SignedLog::new(coeff.signum(), coeff.abs().ln() + (n - 1) as f64 * lq + lqb)
        }
        Regime::Generic => {
            let d1 = lp.exp() - lq.exp();
            let d2 = lp.exp() + lq.exp();
            let g2 = 2.0 * params.gamma;
            let nf = n as f64;
            let t1 = SignedLog::new(d1.signum(), lqb + nf * lp - d1.abs().ln());
            let t2 = SignedLog::new(-d1.signum(), lqb + nf * lq - d1.abs().ln());
            let t3 = SignedLog::new(g2.signum(), lqb + nf * lp + (g2.abs() / d2).ln());
            let t4 = SignedLog::new(-parity * g2.signum(), lqb + nf * lq + (g2.abs() / d2).ln());
            t1.add(t2).add(t3).add(t4)
        }
    }
}

/// Evaluates f(n) through the branch selected by the regime test.
pub fn f_closed(params: &DeformationParams, n: i64) -> Result<StructureValue> {
    f_closed_in(params, n, params.regime().regime)
}

/// Evaluates f(n) on an explicitly chosen branch. The automatic
/// selection in [`f_closed`] never evaluates the generic form inside the
/// degenerate tolerance band, where it is 0/0.
pub fn f_closed_in(params: &DeformationParams, n: i64, branch: Regime) -> Result<StructureValue> {
    if n < 0 {
        return Err(Error::Domain(format!("f is defined for n >= 0, got {n}")));
    }
    if n == 0 {
        return Ok(StructureValue { n, value: 0.0, branch, log_scaled: None });
    }
    let nf = n as f64;
    let lp = params.ln_p_nu();
    let lq = params.ln_q_alpha();
    let lqb = params.beta * params.q.ln();
    if (nf * lp).max(nf * lq) + lqb > LN_OVERFLOW {
        let sl = f_signed_log(params, n);
        return Err(Error::Overflow { n, sign: sl.sign as i8, ln_abs: sl.ln });
    }
    let value = match branch {
        Regime::Generic => {
            // powf keeps p^{nν} consistent with (p^ν)^n at exact inputs,
            // where exp(nν ln p) picks up a rounding the quotient keeps
            let pn = params.p.powf(params.nu);
            let qa = params.q.powf(params.alpha);
            let pnn = pn.powf(nf);
            let qan = qa.powf(nf);
            let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
            params.q.powf(params.beta)
                * ((pnn - qan) / (pn - qa) + 2.0 * params.gamma * (pnn - parity * qan) / (pn + qa))
        }
        Regime::Degenerate => {
            let odd = if n % 2 == 0 { 0.0 } else { 1.0 };
            (nf + 2.0 * params.gamma * odd)
                * params.q.powf(params.alpha * (n - 1) as f64 + params.beta)
        }
    };
    if !value.is_finite() {
        let sl = f_signed_log(params, n);
        return Err(Error::Overflow { n, sign: sl.sign as i8, ln_abs: sl.ln });
    }
    let log_scaled = if value > 0.0 { Some(value.ln()) } else { None };
    Ok(StructureValue { n, value, branch, log_scaled })
}

/// Iterates the defining recurrence f(k+1) = p^ν f(k) + (1+2γ(−1)^k) q^{αk+β}.
///
/// Independent of the closed form; serves as its oracle.
pub fn f_recurrence(params: &DeformationParams, n: i64) -> Result<f64> {
    if n < 0 {
        return Err(Error::Domain(format!("f is defined for n >= 0, got {n}")));
    }
    let pn = params.p.powf(params.nu);
    let mut f = 0.0_f64;
    for k in 0..n {
        let parity = if k % 2 == 0 { 1.0 } else { -1.0 };
        let source = (1.0 + 2.0 * params.gamma * parity)
            * (params.alpha * k as f64 * params.q.ln() + params.beta * params.q.ln()).exp();
        f = pn * f + source;
        if !f.is_finite() {
            let sl = f_signed_log(params, k + 1);
            return Err(Error::Overflow { n: k + 1, sign: sl.sign as i8, ln_abs: sl.ln });
        }
    }
    Ok(f)
}

/// Bracket number [n; α,β,ν; γκ] of the generalized commutator
/// a(a†)^n − p^{nν}(a†)^n a = [n; α,β,ν; γK] (a†)^{n−1} q^{αN+β},
/// with K diagonalized to κ = ±1.
pub fn bracket(params: &DeformationParams, n: i64, kappa: Kappa) -> Result<BracketValue> {
    if n < 1 {
        return Err(Error::Domain(format!("bracket is defined for n >= 1, got {n}")));
    }
    let k = kappa.sign();
    let nf = n as f64;
    let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
    let value = match params.regime().regime {
        Regime::Generic => {
            let pn = params.p.powf(params.nu);
            let qa = params.q.powf(params.alpha);
            let pnn = pn.powf(nf);
            let qan = qa.powf(nf);
            (pnn - qan) / (pn - qa) + 2.0 * params.gamma * k * (qan - parity * pnn) / (pn + qa)
        }
        Regime::Degenerate => {
            let qa_pow = params.q.powf(params.alpha).powf(nf - 1.0);
            let odd = (1.0 - parity) / 2.0;
            nf * qa_pow + 2.0 * params.gamma * k * qa_pow * odd
        }
    };
    if !value.is_finite() {
        return Err(Error::Overflow { n, sign: 0, ln_abs: f64::INFINITY });
    }
    Ok(BracketValue { n, kappa, value })
}

/// Power-series coefficients c_0..c_order of the bracket generating
/// function, computed by convolving geometric-series expansions:
///
/// ```text
/// z/(1 − q^α z) (1/(1 − p^ν z) + 2γκ/(1 + p^ν z))      (generic)
/// z (1/(1 − q^α z)² + 2γκ/(1 − q^{2α} z²))             (degenerate)
/// ```
///
/// c_0 = 0 and c_n = bracket(n, κ) for 1 ≤ n ≤ order.
pub fn genfunc_coeffs(params: &DeformationParams, kappa: Kappa, order: usize) -> Result<Vec<f64>> {
    if order < 1 {
        return Err(Error::Domain("order must be >= 1".to_string()));
    }
    let k = kappa.sign();
    let g2 = 2.0 * params.gamma * k;
    let qa = params.q.powf(params.alpha);
    let mut coeffs = vec![0.0; order + 1];
    match params.regime().regime {
        Regime::Generic => {
            let pn = params.p.powf(params.nu);
            // geometric series for 1/(1-q^α z), 1/(1-p^ν z), 1/(1+p^ν z)
            let geo_q: Vec<f64> = (0..order).map(|j| qa.powi(j as i32)).collect();
            let geo_p: Vec<f64> = (0..order).map(|j| pn.powi(j as i32)).collect();
            let geo_mp: Vec<f64> = (0..order).map(|j| (-pn).powi(j as i32)).collect();
            for m in 0..order {
                let mut s = 0.0;
                for j in 0..=m {
                    s += geo_q[j] * (geo_p[m - j] + g2 * geo_mp[m - j]);
                }
                coeffs[m + 1] = s;
            }
        }
        Regime::Degenerate => {
            for m in 0..order {
                // 1/(1-q^α z)² has coefficient (m+1) q^{αm};
                // 1/(1-q^{2α}z²) has q^{αm} at even m, 0 at odd m.
                let even = if m % 2 == 0 { 1.0 } else { 0.0 };
                coeffs[m + 1] = (m as f64 + 1.0) * qa.powi(m as i32) + g2 * even * qa.powi(m as i32);
            }
        }
    }
    Ok(coeffs)
}
