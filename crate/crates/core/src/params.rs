//! Deformation parameters, regime detection and presets for known
//! deformations.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default relative width of the degenerate band around p^ν = q^α.
pub const TOL_REGIME: f64 = 1e-12;

/// The six real parameters of the deformed commutation relation
/// a a† − p^ν a† a = (1 + 2γK) q^{αN+β}, with p, q > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeformationParams {
    pub p: f64,
    pub q: f64,
    pub alpha: f64,
    pub beta: f64,
    pub nu: f64,
    pub gamma: f64,
}

/// Generic (p^ν ≠ q^α) vs degenerate (p^ν = q^α) parameter locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Generic,
    Degenerate,
}

/// Sign of the discriminant ν ln p − α ln q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

/// Outcome of the regime test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeInfo {
    /// ν ln p − α ln q.
    pub discriminant: f64,
    pub regime: Regime,
    pub sign: Sign,
}

/// Deformations from the literature that the unified algebra recovers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DeformationPreset {
    /// Canonical oscillator, f(n) = n.
    Undeformed,
    /// Single-parameter p = q = q0 limit; ν, α, β, γ stay free.
    Burban {
        q0: f64,
        nu: f64,
        alpha: f64,
        beta: f64,
        gamma: f64,
    },
    /// (p0,q0)-oscillator with f(n) = (p0^{−n} − q0^n)/(p0^{−1} − q0).
    ChakrabartyJagannathan { p0: f64, q0: f64 },
    /// (p0,q0)-deformed bosonic algebra with f(n) = (p0^n − q0^{−n})/(q0 − p0^{−1}).
    Quesne { p0: f64, q0: f64 },
}

impl DeformationParams {
    pub fn new(p: f64, q: f64, alpha: f64, beta: f64, nu: f64, gamma: f64) -> Result<Self> {
        let params = Self { p, q, alpha, beta, nu, gamma };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("p", self.p),
            ("q", self.q),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("nu", self.nu),
            ("gamma", self.gamma),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(Error::InvalidParameter { name, reason: format!("{v} is not finite") });
            }
        }
        if self.p <= 0.0 {
            return Err(Error::InvalidParameter { name: "p", reason: format!("{} is not positive", self.p) });
        }
        if self.q <= 0.0 {
            return Err(Error::InvalidParameter { name: "q", reason: format!("{} is not positive", self.q) });
        }
        Ok(())
    }

    /// Regime classification with the default tolerance band.
    pub fn regime(&self) -> RegimeInfo {
        classify_regime(self, TOL_REGIME)
    }

    /// ν ln p, the log of p^ν.
    pub fn ln_p_nu(&self) -> f64 {
        self.nu * self.p.ln()
    }

    /// α ln q, the log of q^α.
    pub fn ln_q_alpha(&self) -> f64 {
        self.alpha * self.q.ln()
    }
}

/// Decides between the generic and degenerate branch.
///
/// The discriminant is ν ln p − α ln q; the degenerate branch is taken
/// when it vanishes within `tol_regime` relative to
/// max(1, |ν ln p|, |α ln q|). The closed generic form suffers 0/0
/// cancellation on that locus, so the band must have nonzero width.
pub fn classify_regime(params: &DeformationParams, tol_regime: f64) -> RegimeInfo {
    let a = params.ln_p_nu();
    let b = params.ln_q_alpha();
    let discriminant = a - b;
    let scale = 1.0_f64.max(a.abs()).max(b.abs());
    let (regime, sign) = if discriminant.abs() <= tol_regime * scale {
        (Regime::Degenerate, Sign::Zero)
    } else if discriminant > 0.0 {
        (Regime::Generic, Sign::Positive)
    } else {
        (Regime::Generic, Sign::Negative)
    };
    RegimeInfo { discriminant, regime, sign }
}

/// Maps a known deformation onto the unified parameter set so that the
/// unified structure function reproduces the preset's textbook f(n).
pub fn from_preset(preset: &DeformationPreset) -> Result<DeformationParams> {
    match *preset {
        DeformationPreset::Undeformed => DeformationParams::new(1.0, 1.0, 0.0, 0.0, 0.0, 0.0),
        DeformationPreset::Burban { q0, nu, alpha, beta, gamma } => {
            if q0 <= 0.0 {
                return Err(Error::InvalidParameter { name: "q0", reason: format!("{q0} is not positive") });
            }
            DeformationParams::new(q0, q0, alpha, beta, nu, gamma)
        }
        DeformationPreset::ChakrabartyJagannathan { p0, q0 } => {
            if p0 <= 0.0 {
                return Err(Error::InvalidParameter { name: "p0", reason: format!("{p0} is not positive") });
            }
            if q0 <= 0.0 {
                return Err(Error::InvalidParameter { name: "q0", reason: format!("{q0} is not positive") });
            }
            // f(n) = (p0^{-n} - q0^n)/(p0^{-1} - q0) is the two-point
            // geometric sum with bases q0 and p0^{-1}.
            DeformationParams::new(q0, p0, -1.0, 0.0, 1.0, 0.0)
        }
        DeformationPreset::Quesne { p0, q0 } => {
            if p0 <= 0.0 {
                return Err(Error::InvalidParameter { name: "p0", reason: format!("{p0} is not positive") });
            }
            if q0 <= 0.0 {
                return Err(Error::InvalidParameter { name: "q0", reason: format!("{q0} is not positive") });
            }
            if q0 == 1.0 {
                return Err(Error::InvalidParameter {
                    name: "q0",
                    reason: "logarithm base 1 in the Quesne mapping".to_string(),
                });
            }
            // q0^{beta+1} = p0 aligns the overall q^β factor with the
            // textbook normalization 1/(q0 - p0^{-1}).
            let beta = p0.ln() / q0.ln() - 1.0;
            DeformationParams::new(p0, q0, -1.0, beta, 1.0, 0.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::f_closed;
    use proptest::prelude::*;

    fn plain(p: f64, q: f64, alpha: f64, nu: f64) -> DeformationParams {
        DeformationParams::new(p, q, alpha, 0.0, nu, 0.0).unwrap()
    }

    #[test]
    fn regime_generic_negative() {
        let info = classify_regime(&plain(2.0, 3.0, 1.0, 1.0), 1e-12);
        assert_eq!(info.regime, Regime::Generic);
        assert_eq!(info.sign, Sign::Negative);
    }

    #[test]
    fn regime_degenerate_exact() {
        // 4^1 = 2^2
        let info = classify_regime(&plain(4.0, 2.0, 2.0, 1.0), 1e-12);
        assert_eq!(info.regime, Regime::Degenerate);
        assert_eq!(info.sign, Sign::Zero);
    }

    #[test]
    fn regime_generic_positive() {
        let info = classify_regime(&plain(3.0, 2.0, 1.0, 1.0), 1e-12);
        assert_eq!(info.regime, Regime::Generic);
        assert_eq!(info.sign, Sign::Positive);
    }

    #[test]
    fn unit_bases_are_degenerate() {
        let info = plain(1.0, 1.0, 0.7, 0.3).regime();
        assert_eq!(info.regime, Regime::Degenerate);
    }

    #[test]
    fn rejects_nonpositive_p() {
        assert!(DeformationParams::new(-1.0, 2.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(DeformationParams::new(1.0, f64::NAN, 0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn undeformed_preset_is_counting() {
        let params = from_preset(&DeformationPreset::Undeformed).unwrap();
        for n in 0..=5 {
            let f = f_closed(&params, n).unwrap();
            assert!((f.value - n as f64).abs() < 1e-14, "f({n}) = {}", f.value);
        }
    }

    // Textbook structure functions, coded independently of the mapping.
    fn f_chakrabarty(p0: f64, q0: f64, n: u32) -> f64 {
        (p0.powi(-(n as i32)) - q0.powi(n as i32)) / (p0.recip() - q0)
    }

    fn f_quesne(p0: f64, q0: f64, n: u32) -> f64 {
        (p0.powi(n as i32) - q0.powi(-(n as i32))) / (q0 - p0.recip())
    }

    #[test]
    fn chakrabarty_preset_matches_textbook() {
        let params = from_preset(&DeformationPreset::ChakrabartyJagannathan { p0: 2.0, q0: 3.0 }).unwrap();
        let f2 = f_closed(&params, 2).unwrap().value;
        assert!((f2 - 3.5).abs() < 1e-12, "f(2) = {f2}");
        for n in 0..=30 {
            let want = f_chakrabarty(2.0, 3.0, n);
            let got = f_closed(&params, n as i64).unwrap().value;
            assert!((got - want).abs() / want.abs().max(1.0) < 1e-10, "n={n}: {got} vs {want}");
        }
    }

    #[test]
    fn quesne_preset_matches_textbook() {
        let params = from_preset(&DeformationPreset::Quesne { p0: 2.0, q0: 3.0 }).unwrap();
        let f2 = f_closed(&params, 2).unwrap().value;
        assert!((f2 - (4.0 - 1.0 / 9.0) / 2.5).abs() < 1e-12, "f(2) = {f2}");
        for n in 0..=30 {
            let want = f_quesne(2.0, 3.0, n);
            let got = f_closed(&params, n as i64).unwrap().value;
            assert!((got - want).abs() / want.abs().max(1.0) < 1e-10, "n={n}: {got} vs {want}");
        }
    }

    #[test]
    fn quesne_rejects_base_one() {
        assert!(from_preset(&DeformationPreset::Quesne { p0: 2.0, q0: 1.0 }).is_err());
    }

    #[test]
    fn burban_preset_passes_parameters_through() {
        let preset = DeformationPreset::Burban { q0: 1.3, nu: 0.5, alpha: 0.7, beta: 0.2, gamma: 0.1 };
        let params = from_preset(&preset).unwrap();
        assert_eq!(params.p, params.q);
        assert_eq!(params.nu, 0.5);
        assert_eq!(params.gamma, 0.1);
    }

    proptest! {
        // Scaling ν and α together leaves a nonzero sign classification alone.
        #[test]
        fn regime_sign_scale_consistent(
            p in 0.5f64..2.0,
            q in 0.5f64..2.0,
            alpha in -2.0f64..2.0,
            nu in -2.0f64..2.0,
            scale in prop::sample::select(vec![0.25f64, 0.5, 2.0, 4.0, -1.0, -3.0]),
        ) {
            let a = plain(p, q, alpha, nu);
            let b = plain(p, q, alpha * scale, nu * scale);
            let ia = a.regime();
            let ib = b.regime();
            if ia.sign != Sign::Zero && ib.sign != Sign::Zero {
                let expect = match (ia.sign, scale > 0.0) {
                    (s, true) => s,
                    (Sign::Positive, false) => Sign::Negative,
                    (Sign::Negative, false) => Sign::Positive,
                    (Sign::Zero, false) => Sign::Zero,
                };
                prop_assert_eq!(ib.sign, expect);
            }
        }
    }
}
