//! Classification of the irreducible representations, their λ-sequences
//! (eigenvalues of a†a along the ladder) and explicit matrix
//! realizations.
//!
//! A representation is seeded by a common eigenvector ψ₀ of N and K with
//! N ψ₀ = ν₀ ψ₀ and K ψ₀ = c₀ ψ₀. The combination B = 2γc₀ steers the
//! case analysis; storing c₀ instead of the paper-style B/(2γ) keeps the
//! γ → 0 limit regular.

use serde::{Deserialize, Serialize};

use crate::fock::{quadruple_from_lambdas, OperatorQuadruple};
use crate::params::{DeformationParams, Regime, Sign};
use crate::{Error, Result};

/// Relative tolerance for equality tests against case boundaries.
const TOL_BOUNDARY: f64 = 1e-10;

/// Lowest-weight data of a candidate representation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RepParams {
    /// Eigenvalue of N on ψ₀.
    pub nu0: f64,
    /// Eigenvalue of K on ψ₀; B = 2γ·c0.
    pub c0: f64,
    /// Eigenvalue of a†a on ψ₀; needed only in case B3.
    pub lambda0: Option<f64>,
}

impl RepParams {
    pub fn new(nu0: f64, c0: f64) -> Self {
        RepParams { nu0, c0, lambda0: None }
    }

    pub fn with_lambda0(nu0: f64, c0: f64, lambda0: f64) -> Self {
        RepParams { nu0, c0, lambda0: Some(lambda0) }
    }

    pub fn b(&self, params: &DeformationParams) -> f64 {
        2.0 * params.gamma * self.c0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RepClass {
    FockLowestWeight,
    OneDimensional,
    TwoDimensional,
    HighestWeight,
    TwoSidedInfinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTag {
    A,
    B1,
    B2,
    B3a,
    B3b,
    B3c,
}

/// Index set the ladder lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Support {
    /// n ≥ 0 (Fock-type, lowest weight).
    NonNegative,
    /// n ≤ 0 (highest weight).
    NonPositive,
    /// {−1, 0}.
    PairZeroMinusOne,
    /// {0, 1}.
    PairZeroOne,
    /// {0} only.
    Singleton,
    /// All of ℤ.
    AllIntegers,
}

impl Support {
    pub fn contains(&self, n: i64) -> bool {
        match self {
            Support::NonNegative => n >= 0,
            Support::NonPositive => n <= 0,
            Support::PairZeroMinusOne => n == 0 || n == -1,
            Support::PairZeroOne => n == 0 || n == 1,
            Support::Singleton => n == 0,
            Support::AllIntegers => true,
        }
    }
}

/// Outcome of the classification, self-contained for λ evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationDescriptor {
    pub class: RepClass,
    pub case_tag: CaseTag,
    pub support: Support,
    pub params: DeformationParams,
    pub rep: RepParams,
    /// B = 2γ·c0, cached.
    pub b: f64,
    /// Distance to the nearest exact-boundary class, when one was matched.
    pub boundary_distance: Option<f64>,
    pub note: Option<String>,
}

fn qab(params: &DeformationParams, nu0: f64) -> f64 {
    params.q.powf(params.alpha * nu0 + params.beta)
}

fn parity_sign(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 }
}

/// Decision tree over the regime sign, B and (in case B3) the shifted
/// invariant S = λ₀ q^{−(αν₀+β)} + 1/(p^ν−q^α) + B/(p^ν+q^α).
pub fn classify_representation(
    params: &DeformationParams,
    rep: &RepParams,
) -> Result<RepresentationDescriptor> {
    params.validate()?;
    let info = params.regime();
    let b = rep.b(params);
    let make = |class, case_tag, support, boundary_distance, note| RepresentationDescriptor {
        class,
        case_tag,
        support,
        params: *params,
        rep: *rep,
        b,
        boundary_distance,
        note,
    };

    match info.regime {
        Regime::Degenerate => {
            if b < -1.0 - TOL_BOUNDARY {
                return Err(Error::NoRepresentation(format!(
                    "degenerate case needs B >= -1 for positivity of odd-n eigenvalues; B = {b}"
                )));
            }
            let note = if b < 0.0 {
                Some("B in [-1,0) is outside the usually stated B >= 0 range".to_string())
            } else {
                None
            };
            Ok(make(RepClass::FockLowestWeight, CaseTag::A, Support::NonNegative, None, note))
        }
        Regime::Generic => {
            let pn = params.p.powf(params.nu);
            let qa = params.q.powf(params.alpha);
            match info.sign {
                Sign::Positive => {
                    if (b + 1.0).abs() <= TOL_BOUNDARY {
                        Ok(make(
                            RepClass::OneDimensional,
                            CaseTag::B1,
                            Support::Singleton,
                            Some((b + 1.0).abs()),
                            None,
                        ))
                    } else if b > -1.0 {
                        Ok(make(RepClass::FockLowestWeight, CaseTag::B1, Support::NonNegative, None, None))
                    } else {
                        Err(Error::NoRepresentation(format!(
                            "B < -1 with nu*ln p > alpha*ln q leaves no nonnegative lambda-sequence; B = {b}"
                        )))
                    }
                }
                Sign::Negative | Sign::Zero => {
                    // t = (p^ν+q^α)/(p^ν−q^α) < −1 in this regime
                    let t = (pn + qa) / (pn - qa);
                    let t_scale = t.abs().max(1.0);
                    if (b - t).abs() <= TOL_BOUNDARY * t_scale {
                        return Ok(make(
                            RepClass::TwoDimensional,
                            CaseTag::B2,
                            Support::PairZeroMinusOne,
                            Some((b - t).abs()),
                            None,
                        ));
                    }
                    let v_plus = 1.0 / (pn - qa) + b / (pn + qa);
                    let v_minus = 1.0 / (pn - qa) - b / (pn + qa);
                    if v_plus > 0.0 || v_minus > 0.0 {
                        if b < t {
                            Ok(make(RepClass::HighestWeight, CaseTag::B2, Support::NonPositive, None, None))
                        } else {
                            Err(Error::NoRepresentation(format!(
                                "B must satisfy B <= (p^nu+q^alpha)/(p^nu-q^alpha) = {t}; B = {b}"
                            )))
                        }
                    } else {
                        let lambda0 = rep.lambda0.ok_or(Error::MissingParameter(
                            "lambda0 (required when both 1/(p^nu-q^alpha) +/- B/(p^nu+q^alpha) are nonpositive)",
                        ))?;
                        if lambda0 < 0.0 {
                            return Err(Error::Domain(format!("lambda0 must be >= 0, got {lambda0}")));
                        }
                        let shifted = lambda0 / qab(params, rep.nu0);
                        let s = shifted + v_plus;
                        let s_scale = shifted.abs().max(v_plus.abs()).max(1.0);
                        if s > TOL_BOUNDARY * s_scale {
                            Ok(make(
                                RepClass::TwoSidedInfinite,
                                CaseTag::B3a,
                                Support::AllIntegers,
                                None,
                                None,
                            ))
                        } else if s.abs() <= TOL_BOUNDARY * s_scale {
                            if (b + t).abs() <= TOL_BOUNDARY * t_scale {
                                Ok(make(
                                    RepClass::TwoDimensional,
                                    CaseTag::B3b,
                                    Support::PairZeroOne,
                                    Some((b + t).abs()),
                                    None,
                                ))
                            } else if b.abs() < -t {
                                Ok(make(
                                    RepClass::TwoSidedInfinite,
                                    CaseTag::B3b,
                                    Support::AllIntegers,
                                    Some(s.abs()),
                                    None,
                                ))
                            } else {
                                Err(Error::NoRepresentation(format!(
                                    "S = 0 requires |B| <= -(p^nu+q^alpha)/(p^nu-q^alpha) = {}; B = {b}",
                                    -t
                                )))
                            }
                        } else {
                            // S < 0: lowest weight reappears after renumbering
                            if (b + 1.0).abs() <= TOL_BOUNDARY {
                                Ok(make(
                                    RepClass::OneDimensional,
                                    CaseTag::B3c,
                                    Support::Singleton,
                                    Some((b + 1.0).abs()),
                                    None,
                                ))
                            } else if b > -1.0 && b < -t {
                                Ok(make(
                                    RepClass::FockLowestWeight,
                                    CaseTag::B3c,
                                    Support::NonNegative,
                                    None,
                                    None,
                                ))
                            } else {
                                Err(Error::NoRepresentation(format!(
                                    "S < 0 requires -1 <= B < {}; B = {b}",
                                    -t
                                )))
                            }
                        }
                    }
                }
            }
        }
    }
}

impl RepresentationDescriptor {
    /// λ_n, the eigenvalue of a†a on ψ_n, from the case-specific closed
    /// form.
    pub fn lambda(&self, n: i64) -> Result<f64> {
        if !self.support.contains(n) {
            return Err(Error::Domain(format!("index {n} outside support {:?}", self.support)));
        }
        let p = &self.params;
        let b = self.b;
        let nf = n as f64;
        let qv = qab(p, self.rep.nu0);
        let value = match (self.class, self.case_tag) {
            (RepClass::OneDimensional, _) => 0.0,
            (RepClass::TwoDimensional, _) => {
                let pn = p.p.powf(p.nu);
                let qa = p.q.powf(p.alpha);
                // odd indices vanish on {0,−1}, even indices on {0,1}
                let vanishes = match self.support {
                    Support::PairZeroMinusOne => n.rem_euclid(2) == 1,
                    _ => n.rem_euclid(2) == 0,
                };
                if vanishes {
                    0.0
                } else {
                    2.0 * qv * qa.powf(nf) / (qa - pn)
                }
            }
            (RepClass::FockLowestWeight, CaseTag::A) => {
                let odd = (1.0 - parity_sign(n)) / 2.0;
                (nf + b * odd) * p.q.powf(p.alpha * (self.rep.nu0 + nf - 1.0) + p.beta)
            }
            (RepClass::FockLowestWeight, _) => {
                let pn = p.p.powf(p.nu);
                let qa = p.q.powf(p.alpha);
                let pnn = pn.powf(nf);
                let qan = qa.powf(nf);
                qv * ((pnn - qan) / (pn - qa) + b * (pnn - parity_sign(n) * qan) / (pn + qa))
            }
            (RepClass::HighestWeight, _) => {
                let pn = p.p.powf(p.nu);
                let qa = p.q.powf(p.alpha);
                let pnn = pn.powf(nf);
                let qan = qa.powf(nf);
                let pnm1 = pn.powf(nf - 1.0);
                qv * (-pnm1 * (1.0 + b)
                    + (pnn - qan) / (pn - qa)
                    + b * (pnn - parity_sign(n) * qan) / (pn + qa))
            }
            (RepClass::TwoSidedInfinite, CaseTag::B3b) => {
                let pn = p.p.powf(p.nu);
                let qa = p.q.powf(p.alpha);
                -qv * qa.powf(nf) * (1.0 / (pn - qa) + b * parity_sign(n) / (pn + qa))
            }
            (RepClass::TwoSidedInfinite, _) => {
                let pn = p.p.powf(p.nu);
                let qa = p.q.powf(p.alpha);
                let lambda0 = self.rep.lambda0.unwrap_or(0.0);
                let ratio_n = (qa / pn).powf(nf);
                pn.powf(nf)
                    * (lambda0
                        + qv * (1.0 / (pn - qa) + b / (pn + qa)
                            - ratio_n * (1.0 / (pn - qa) + b * parity_sign(n) / (pn + qa))))
            }
        };
        Ok(value)
    }
}

/// λ table over [n_lo, n_hi] ⊆ support.
pub fn lambda_sequence(
    desc: &RepresentationDescriptor,
    n_lo: i64,
    n_hi: i64,
) -> Result<Vec<(i64, f64)>> {
    if n_lo > n_hi {
        return Err(Error::Domain(format!("empty window {n_lo}..{n_hi}")));
    }
    (n_lo..=n_hi).map(|n| desc.lambda(n).map(|l| (n, l))).collect()
}

/// One step of λ_{n+1} = p^ν λ_n + q^{αν₀+β}(1 + (−1)^n B) q^{αn}: the
/// independent oracle every closed form must satisfy.
pub fn lambda_recurrence_oracle(
    params: &DeformationParams,
    rep: &RepParams,
    lambda_n: f64,
    n: i64,
) -> f64 {
    let b = rep.b(params);
    params.p.powf(params.nu) * lambda_n
        + qab(params, rep.nu0)
            * (1.0 + parity_sign(n) * b)
            * params.q.powf(params.alpha).powf(n as f64)
}

/// Matrix realization over the basis {ψ_n : n ∈ [lo, hi]} with
/// a ψ_n = √λ_n ψ_{n−1}, N ψ_n = (ν₀+n) ψ_n, K ψ_n = c0 (−1)^n ψ_n.
pub fn build_rep_matrices(
    desc: &RepresentationDescriptor,
    lo: i64,
    hi: i64,
) -> Result<OperatorQuadruple> {
    if lo > hi {
        return Err(Error::Domain(format!("empty window {lo}..{hi}")));
    }
    if !desc.support.contains(lo) || !desc.support.contains(hi) {
        return Err(Error::Domain(format!(
            "window {lo}..{hi} not contained in support {:?}",
            desc.support
        )));
    }
    if desc.class == RepClass::OneDimensional {
        let gamma = desc.params.gamma;
        if gamma == 0.0 {
            return Err(Error::SingularK);
        }
        let mut ops = quadruple_from_lambdas(&[0.0], desc.rep.nu0, -1.0 / (2.0 * gamma));
        ops.k_op[(0, 0)] = num_complex::Complex64::new(-1.0 / (2.0 * gamma), 0.0);
        return Ok(ops);
    }
    let mut lambdas = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        let mut l = desc.lambda(n)?;
        if l < -1e-12 {
            return Err(Error::Positivity { n, value: l });
        }
        if l < 0.0 {
            l = 0.0;
        }
        lambdas.push(l);
    }
    // basis index m holds ψ_{lo+m}; fold the window offset into the
    // diagonal seeds
    let k0 = desc.rep.c0 * parity_sign(lo);
    Ok(quadruple_from_lambdas(&lambdas, desc.rep.nu0 + lo as f64, k0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{build_fock, verify_relations_on};
    use crate::structure::f_closed;
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    fn params(p: f64, q: f64, alpha: f64, beta: f64, nu: f64, gamma: f64) -> DeformationParams {
        DeformationParams::new(p, q, alpha, beta, nu, gamma).unwrap()
    }

    #[test]
    fn positive_sign_generic_b_gives_fock() {
        let ps = params(3.0, 2.0, 1.0, 0.0, 1.0, 0.1);
        let desc = classify_representation(&ps, &RepParams::new(0.0, 1.0)).unwrap();
        assert_eq!(desc.class, RepClass::FockLowestWeight);
        assert_eq!(desc.case_tag, CaseTag::B1);
        assert!((desc.b - 0.2).abs() < 1e-15);
        for n in 0..=30 {
            assert!(desc.lambda(n).unwrap() >= 0.0);
        }
    }

    #[test]
    fn b_at_minus_one_is_one_dimensional() {
        // B = 2γ c0 = −1 with γ = 0.25, c0 = −2
        let ps = params(3.0, 2.0, 1.0, 0.0, 1.0, 0.25);
        let desc = classify_representation(&ps, &RepParams::new(0.7, -2.0)).unwrap();
        assert_eq!(desc.class, RepClass::OneDimensional);
        let ops = build_rep_matrices(&desc, 0, 0).unwrap();
        assert_eq!(ops.dim, 1);
        assert_eq!(ops.a[(0, 0)], Complex64::default());
        assert_eq!(ops.adag[(0, 0)], Complex64::default());
        assert!((ops.n_op[(0, 0)].re - 0.7).abs() < 1e-15);
        assert!((ops.k_op[(0, 0)].re - -2.0).abs() < 1e-15);
    }

    #[test]
    fn b_below_minus_one_rejected_in_positive_regime() {
        let ps = params(3.0, 2.0, 1.0, 0.0, 1.0, 0.25);
        let res = classify_representation(&ps, &RepParams::new(0.0, -4.0));
        assert!(matches!(res, Err(Error::NoRepresentation(_))));
    }

    #[test]
    fn boundary_b_gives_two_dimensional() {
        // (p,q,α,ν) = (2,3,1,1): (p^ν+q^α)/(p^ν−q^α) = −5
        let ps = params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1);
        let desc = classify_representation(&ps, &RepParams::new(0.0, -25.0)).unwrap();
        assert_eq!(desc.class, RepClass::TwoDimensional);
        assert_eq!(desc.case_tag, CaseTag::B2);
        assert_eq!(desc.support, Support::PairZeroMinusOne);
        // λ₀ = 2 q^{αν₀+β}/(q^α−p^ν) = 2, λ₋₁ = 0
        assert!((desc.lambda(0).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(desc.lambda(-1).unwrap(), 0.0);
        let ops = build_rep_matrices(&desc, -1, 0).unwrap();
        assert!((ops.a[(0, 1)].re - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn highest_weight_below_boundary() {
        let ps = params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1);
        // B = −6 < −5
        let desc = classify_representation(&ps, &RepParams::new(0.0, -30.0)).unwrap();
        assert_eq!(desc.class, RepClass::HighestWeight);
        assert_eq!(desc.support, Support::NonPositive);
        // λ₁ would be μ₀ = 0: oracle from λ₀ gives 0
        let l0 = desc.lambda(0).unwrap();
        let next = lambda_recurrence_oracle(&ps, &desc.rep, l0, 0);
        assert!(next.abs() < 1e-12, "mu_0 = {next}");
        for n in -30..=0 {
            assert!(desc.lambda(n).unwrap() >= -1e-12, "lambda({n})");
        }
    }

    #[test]
    fn negative_regime_branch_selection() {
        let ps = params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1);
        // B = −2 keeps both V± nonpositive → case B3, λ0 required
        let res = classify_representation(&ps, &RepParams::new(0.0, -10.0));
        assert!(matches!(res, Err(Error::MissingParameter(_))));
        // B = 6 > −t = 5 makes V+ positive with no admissible ladder
        let res = classify_representation(&ps, &RepParams::new(0.0, 30.0));
        assert!(matches!(res, Err(Error::NoRepresentation(_))));
    }

    #[test]
    fn case_a_lambda_values() {
        let ps = params(4.0, 2.0, 2.0, 0.0, 1.0, 0.25);
        let rep = RepParams::new(0.0, 1.0); // B = 0.5
        let desc = classify_representation(&ps, &rep).unwrap();
        assert_eq!(desc.case_tag, CaseTag::A);
        assert!((desc.lambda(1).unwrap() - 1.5).abs() < 1e-12);
        assert!((desc.lambda(2).unwrap() - 8.0).abs() < 1e-12);
        assert_eq!(desc.lambda(0).unwrap(), 0.0);
    }

    #[test]
    fn case_a_flags_negative_b() {
        let ps = params(4.0, 2.0, 2.0, 0.0, 1.0, -0.25);
        let desc = classify_representation(&ps, &RepParams::new(0.0, 1.0)).unwrap();
        assert!(desc.note.is_some());
        let err = classify_representation(&ps, &RepParams::new(0.0, 4.0));
        assert!(matches!(err, Err(Error::NoRepresentation(_))), "B = -2 must be rejected");
    }

    #[test]
    fn oracle_examples() {
        let ps = params(2.0, 3.0, 1.0, 0.0, 1.0, 0.0);
        let rep = RepParams::new(0.0, 1.0); // B = 0
        // one step from the lowest weight
        let l1 = lambda_recurrence_oracle(&ps, &rep, 0.0, 0);
        assert!((l1 - 1.0).abs() < 1e-12);
        assert!((lambda_recurrence_oracle(&ps, &rep, 1.0, 1) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn b3_cases_from_lambda0() {
        let ps = params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1);
        let pn = 2.0;
        let qa = 3.0;
        let v_plus = |b: f64| 1.0 / (pn - qa) + b / (pn + qa);
        // B = 1 (c0 = 5): both V nonpositive
        // S > 0: λ0 big
        let desc = classify_representation(&ps, &RepParams::with_lambda0(0.0, 5.0, 3.0)).unwrap();
        assert_eq!(desc.case_tag, CaseTag::B3a);
        assert_eq!(desc.support, Support::AllIntegers);
        // S = 0: λ0 = −V+ · q^{αν₀+β}
        let lam0 = -v_plus(1.0);
        let desc = classify_representation(&ps, &RepParams::with_lambda0(0.0, 5.0, lam0)).unwrap();
        assert_eq!(desc.case_tag, CaseTag::B3b);
        assert_eq!(desc.class, RepClass::TwoSidedInfinite);
        for n in -10..=10 {
            assert!(desc.lambda(n).unwrap() > 0.0, "lambda({n})");
        }
        // S = 0 with B = −t = 5 (c0 = 25): two-dimensional on {0,1}
        let lam0 = -v_plus(5.0);
        let desc = classify_representation(&ps, &RepParams::with_lambda0(0.0, 25.0, lam0)).unwrap();
        assert_eq!(desc.class, RepClass::TwoDimensional);
        assert_eq!(desc.support, Support::PairZeroOne);
        assert_eq!(desc.lambda(0).unwrap(), 0.0);
        assert!(desc.lambda(1).unwrap() > 0.0);
        // S < 0 with B in (−1, −t): Fock lowest weight
        let desc = classify_representation(&ps, &RepParams::with_lambda0(0.0, 1.0, 0.0)).unwrap();
        assert_eq!(desc.case_tag, CaseTag::B3c);
        assert_eq!(desc.class, RepClass::FockLowestWeight);
        // missing lambda0
        let err = classify_representation(&ps, &RepParams::new(0.0, 5.0));
        assert!(matches!(err, Err(Error::MissingParameter(_))));
    }

    #[test]
    fn closed_forms_satisfy_recurrence_oracle() {
        let cases: Vec<(DeformationParams, RepParams, i64, i64)> = vec![
            (params(3.0, 2.0, 1.0, 0.0, 1.0, 0.1), RepParams::new(0.3, 1.0), 0, 30),
            (params(4.0, 2.0, 2.0, 0.1, 1.0, 0.25), RepParams::new(-0.5, 1.0), 0, 30),
            (params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1), RepParams::new(0.0, -30.0), -30, 0),
            (params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1), RepParams::with_lambda0(0.0, 5.0, 3.0), -15, 15),
            (params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1), RepParams::with_lambda0(0.2, 5.0, {
                let v = 1.0 / (2.0 - 3.0) + 1.0 / 5.0;
                -v * (0.2_f64 * 3.0_f64.ln()).exp()
            }), -15, 15),
        ];
        for (ps, rep, lo, hi) in cases {
            let desc = classify_representation(&ps, &rep).unwrap();
            for n in lo..hi {
                let here = desc.lambda(n).unwrap();
                let next = desc.lambda(n + 1).unwrap();
                let oracle = lambda_recurrence_oracle(&ps, &rep, here, n);
                assert!(
                    (next - oracle).abs() <= 1e-10 * next.abs().max(1.0),
                    "{:?} n={n}: closed {next} vs oracle {oracle}",
                    desc.case_tag
                );
                assert!(here >= -1e-12, "lambda({n}) = {here}");
            }
        }
    }

    #[test]
    fn fock_coincidence_with_structure_function() {
        for ps in [
            params(3.0, 2.0, 1.0, 0.2, 1.0, 0.1),
            params(4.0, 2.0, 2.0, 0.0, 1.0, 0.25),
        ] {
            let desc = classify_representation(&ps, &RepParams::new(0.0, 1.0)).unwrap();
            for n in 0..=30 {
                let lam = desc.lambda(n).unwrap();
                let f = f_closed(&ps, n).unwrap().value;
                assert!((lam - f).abs() <= 1e-10 * f.abs().max(1.0), "n={n}: {lam} vs {f}");
            }
        }
    }

    #[test]
    fn fock_window_reproduces_build_fock() {
        let ps = params(3.0, 2.0, 1.0, 0.2, 1.0, 0.1);
        let desc = classify_representation(&ps, &RepParams::new(0.0, 1.0)).unwrap();
        let from_rep = build_rep_matrices(&desc, 0, 11).unwrap();
        let from_fock = build_fock(&ps, 12).unwrap();
        let diff = (&from_rep.a - &from_fock.a).norm();
        assert!(diff < 1e-12, "ladder mismatch {diff}");
        assert_eq!(from_rep.n_op, from_fock.n_op);
        assert_eq!(from_rep.k_op, from_fock.k_op);
    }

    #[test]
    fn rep_matrices_pass_relations_on_interior_columns() {
        let cases: Vec<(DeformationParams, RepParams, i64, i64, usize, usize)> = vec![
            // fock window: boundary λ0 = 0, check 0..D−1
            (params(3.0, 2.0, 1.0, 0.0, 1.0, 0.1), RepParams::new(0.4, 1.5), 0, 15, 0, 15),
            // highest-weight window ending at 0: exclude first column
            (params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1), RepParams::new(0.0, -30.0), -15, 0, 1, 16),
            // two-sided: exclude both edges
            (params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1), RepParams::with_lambda0(0.0, 5.0, 3.0), -8, 8, 1, 16),
        ];
        for (ps, rep, lo, hi, c_lo, c_hi) in cases {
            let desc = classify_representation(&ps, &rep).unwrap();
            let ops = build_rep_matrices(&desc, lo, hi).unwrap();
            let report = verify_relations_on(&ops, &ps, 1e-10, c_lo, c_hi);
            assert!(report.pass, "{:?}: {report:?}", desc.case_tag);
        }
    }

    #[test]
    fn casimir_c2_acts_as_scalar() {
        let ps = params(2.0, 3.0, 1.0, 0.0, 1.0, 0.1);
        let rep = RepParams::with_lambda0(0.25, 5.0, 3.0);
        let desc = classify_representation(&ps, &rep).unwrap();
        let ops = build_rep_matrices(&desc, -6, 6).unwrap();
        let w = Complex64::new(rep.c0, 0.0)
            * (Complex64::new(0.0, std::f64::consts::PI) * rep.nu0).exp();
        let c2 = {
            let mut m = DMatrix::from_element(ops.dim, ops.dim, Complex64::default());
            for i in 0..ops.dim {
                m[(i, i)] = ops.k_op[(i, i)]
                    * (Complex64::new(0.0, std::f64::consts::PI) * ops.n_op[(i, i)]).exp();
            }
            m
        };
        for i in 0..ops.dim {
            assert!((c2[(i, i)] - w).norm() < 1e-10, "index {i}: {} vs {w}", c2[(i, i)]);
        }
    }

    #[test]
    fn window_outside_support_rejected() {
        let ps = params(3.0, 2.0, 1.0, 0.0, 1.0, 0.1);
        let desc = classify_representation(&ps, &RepParams::new(0.0, 1.0)).unwrap();
        assert!(build_rep_matrices(&desc, -2, 5).is_err());
        assert!(desc.lambda(-1).is_err());
    }
}
