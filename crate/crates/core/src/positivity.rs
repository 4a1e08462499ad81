//! Admissible γ-interval for positivity of the structure function, and
//! finite scans that verify it empirically.

use serde::{Deserialize, Serialize};

use crate::params::{DeformationParams, Regime, Sign};
use crate::structure::{f_closed, f_signed_log};
use crate::{Error, Result};

/// Open interval for 2γ; `upper = None` means +∞.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaInterval {
    pub lower: f64,
    pub upper: Option<f64>,
}

impl GammaInterval {
    /// Strict membership of 2γ with a safety margin away from both ends.
    pub fn contains_two_gamma(&self, two_gamma: f64, margin: f64) -> bool {
        if two_gamma <= self.lower + margin {
            return false;
        }
        match self.upper {
            Some(u) => two_gamma < u - margin,
            None => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum Verdict {
    PositiveOnScan,
    ViolationAt(i64),
}

/// Analytic interval plus the outcome of a finite scan of f(1..n_max).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PositivityReport {
    /// Admissible open interval for 2γ.
    pub interval: GammaInterval,
    pub regime_sign: Sign,
    /// Smallest finite f(n) seen on the scan.
    pub empirical_min: f64,
    pub n_argmin: i64,
    pub verdict: Verdict,
}

/// Interval of 2γ for which f(n) > 0 for all n ≥ 1:
/// (−1, +∞) when ν ln p > α ln q or on the degenerate locus,
/// (−1, −(p^ν+q^α)/(p^ν−q^α)) when ν ln p < α ln q.
pub fn admissible_gamma(params: &DeformationParams) -> GammaInterval {
    let info = params.regime();
    match (info.regime, info.sign) {
        (Regime::Degenerate, _) | (Regime::Generic, Sign::Positive) => {
            GammaInterval { lower: -1.0, upper: None }
        }
        _ => {
            let pn = params.p.powf(params.nu);
            let qa = params.q.powf(params.alpha);
            GammaInterval { lower: -1.0, upper: Some(-(pn + qa) / (pn - qa)) }
        }
    }
}

/// Scans f(1..n_max), recording the minimum and the first index where
/// strict positivity fails. f(n) = 0 for n ≥ 1 counts as a violation: it
/// marks a finite-dimensional representation boundary. Values past the
/// f64 range are judged by their log-space sign.
pub fn check_positivity(params: &DeformationParams, n_max: i64) -> Result<PositivityReport> {
    if n_max < 1 {
        return Err(Error::Domain(format!("n_max must be >= 1, got {n_max}")));
    }
    let interval = admissible_gamma(params);
    let regime_sign = params.regime().sign;
    let mut empirical_min = f64::INFINITY;
    let mut n_argmin = 0;
    let mut verdict = Verdict::PositiveOnScan;
    for n in 1..=n_max {
        let positive = match f_closed(params, n) {
            Ok(sv) => {
                if sv.value < empirical_min {
                    empirical_min = sv.value;
                    n_argmin = n;
                }
                sv.value > 0.0
            }
            Err(Error::Overflow { .. }) => f_signed_log(params, n).sign > 0.0,
            Err(e) => return Err(e),
        };
        if !positive {
            verdict = Verdict::ViolationAt(n);
            break;
        }
    }
    Ok(PositivityReport { interval, regime_sign, empirical_min, n_argmin, verdict })
}

/// The monotone bound u_n = u(α,ν)(p^{nν}−q^{nα})/(p^{nν}+q^{nα}) with
/// u(α,ν) = (p^ν+q^α)/(p^ν−q^α); increasing in n with u_1 = 1.
#[cfg(test)]
pub(crate) fn monotone_bound(params: &DeformationParams, n: i64) -> f64 {
    let pn = params.ln_p_nu().exp();
    let qa = params.ln_q_alpha().exp();
    let u = (pn + qa) / (pn - qa);
    let pnn = (n as f64 * params.ln_p_nu()).exp();
    let qan = (n as f64 * params.ln_q_alpha()).exp();
    u * (pnn - qan) / (pnn + qan)
}
