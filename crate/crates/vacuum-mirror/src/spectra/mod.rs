//! Vacuum correlation spectra of force and mass for the lorentzian mirror.
//!
//! Every spectrum here is one-sided: field excitations carry positive
//! energy with respect to vacuum, so all operations return exactly 0 for
//! ω ≤ 0. The diagonal force spectra come from the pair kernels
//!
//! ```text
//! α⁰⁰(ω,ω') = Re{1 - s s' - r r'}        (energy flux)
//! α⁰¹(ω,ω') = 0                           (no energy-momentum cross term)
//! α¹¹(ω,ω') = Re{1 - s s' + r r'}        (radiation pressure)
//! ```
//!
//! integrated against ω'(ω-ω') over the interior of [0, ω]. The mass
//! spectrum is the energy-flux spectrum divided by ω²; for this model it
//! collapses to a reflection-delay-only integral with a known closed form,
//! and both routes are exposed so they can be played against each other.
//!
//! The mean induced mass integral diverges logarithmically, so it is only
//! reachable through an explicit UV cutoff argument; there deliberately is
//! no cutoff-free entry point.

mod closed_forms;

use crate::quadrature::{self, QuadratureConfig, QuadratureError};
use crate::scattering::{AmplitudePair, MirrorModel};
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;
use thiserror::Error;

pub(crate) use closed_forms::SERIES_SWITCH;

/// Which correlation spectrum a value or sample set refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumComponent {
    /// Energy flux component C_{F⁰F⁰}.
    F0F0,
    /// Radiation pressure component C_{F¹F¹}.
    F1F1,
    /// Energy-momentum cross spectrum; identically zero, exposed so a
    /// caller can request it and receive the exact zero.
    F0F1,
    /// Mass spectrum C_mm = C_{F⁰F⁰}/ω².
    Mass,
    /// Local-field autocorrelation C_φφ.
    Field,
}

impl SpectrumComponent {
    /// Spectra that are pointwise nonnegative (all but the exact zero,
    /// which is nonnegative too).
    pub fn is_nonnegative(&self) -> bool {
        true
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::F0F0 => "f0f0",
            Self::F1F1 => "f1f1",
            Self::F0F1 => "f0f1",
            Self::Mass => "mass",
            Self::Field => "field",
        }
    }
}

impl fmt::Display for SpectrumComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evaluation route for a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumMethod {
    Quadrature,
    ClosedForm,
    Convolution,
    Asymptote,
}

impl SpectrumMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Quadrature => "quadrature",
            Self::ClosedForm => "closed-form",
            Self::Convolution => "convolution",
            Self::Asymptote => "asymptote",
        }
    }
}

impl fmt::Display for SpectrumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Route selector for [`mass_spectrum`], which has exactly two full-accuracy
/// evaluations everywhere on the positive axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassMethod {
    Quadrature,
    ClosedForm,
}

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error("{op} is not defined for component {component}")]
    InvalidComponent {
        op: &'static str,
        component: SpectrumComponent,
    },
    #[error("method {method} is not available for component {component}")]
    InvalidMethod {
        component: SpectrumComponent,
        method: SpectrumMethod,
    },
    #[error("UV cutoff must be positive and finite, got {0}")]
    InvalidCutoff(f64),
    #[error(
        "series evaluation requires |omega|/omega_c < {SERIES_SWITCH}, \
         got omega = {omega} at omega_c = {omega_c}"
    )]
    OutsideSeriesRange { omega: f64, omega_c: f64 },
    #[error("invalid spectrum samples: {0}")]
    InvalidSamples(&'static str),
}

/// Pair kernel evaluated from explicit amplitude pairs.
///
/// Symmetric under exchange of the two pairs; defined for the force
/// components only.
pub fn alpha_kernel_from_amplitudes(
    first: &AmplitudePair,
    second: &AmplitudePair,
    component: SpectrumComponent,
) -> Result<f64, SpectraError> {
    match component {
        SpectrumComponent::F0F0 => Ok(1.0 - (first.s * second.s).re - (first.r * second.r).re),
        SpectrumComponent::F1F1 => Ok(1.0 - (first.s * second.s).re + (first.r * second.r).re),
        SpectrumComponent::F0F1 => Ok(0.0),
        other => Err(SpectraError::InvalidComponent {
            op: "alpha_kernel",
            component: other,
        }),
    }
}

/// Pair kernel α(ω₁, ω₂) of the model at two frequencies.
pub fn alpha_kernel(
    model: &MirrorModel,
    component: SpectrumComponent,
    omega1: f64,
    omega2: f64,
) -> Result<f64, SpectraError> {
    alpha_kernel_from_amplitudes(
        &model.amplitudes(omega1),
        &model.amplitudes(omega2),
        component,
    )
}

/// Force correlation spectrum C_{FF}(ω) of a diagonal or cross component,
/// by quadrature of the pair kernel over the interior frequency split:
///
/// C(ω) = (ħ²/π) ∫₀^ω dω' ω'(ω-ω') α(ω', ω-ω')
pub fn force_spectrum(
    model: &MirrorModel,
    component: SpectrumComponent,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, SpectraError> {
    match component {
        SpectrumComponent::F0F0 | SpectrumComponent::F1F1 | SpectrumComponent::F0F1 => {}
        other => {
            return Err(SpectraError::InvalidComponent {
                op: "force_spectrum",
                component: other,
            })
        }
    }
    if omega <= 0.0 || component == SpectrumComponent::F0F1 {
        return Ok(0.0);
    }
    let integrand = |u: f64| {
        let kernel = alpha_kernel_from_amplitudes(
            &model.amplitudes(u),
            &model.amplitudes(omega - u),
            component,
        )
        .expect("force components always have a kernel");
        u * (omega - u) * kernel
    };
    let result = quadrature::integrate(integrand, 0.0, omega, cfg)?;
    let hbar = model.hbar();
    Ok(hbar * hbar / PI * result.value)
}

/// Mass correlation spectrum C_mm(ω).
///
/// `Quadrature` integrates the reflection-delay product
/// (ħ²/π) ∫₀^ω dω' ω'(ω-ω') τ(ω') τ(ω-ω'); `ClosedForm` evaluates the
/// exact log/arctan expression, switching to its Taylor series below
/// ω = 10⁻² Ω where the expression cancels badly.
pub fn mass_spectrum(
    model: &MirrorModel,
    omega: f64,
    method: MassMethod,
    cfg: &QuadratureConfig,
) -> Result<f64, SpectraError> {
    if omega <= 0.0 {
        return Ok(0.0);
    }
    match method {
        MassMethod::ClosedForm => Ok(closed_forms::mass_closed(model, omega)),
        MassMethod::Quadrature => {
            let integrand = |u: f64| {
                u * (omega - u) * model.reflection_delay(u) * model.reflection_delay(omega - u)
            };
            let result = quadrature::integrate(integrand, 0.0, omega, cfg)?;
            let hbar = model.hbar();
            Ok(hbar * hbar / PI * result.value)
        }
    }
}

/// Series evaluation of the mass spectrum for |ω| ≪ Ω, leading term
/// ħ²ω³/(6πΩ²) with corrections through (ω/Ω)⁶ relative.
///
/// Only valid below the switchover point; larger frequencies are rejected
/// so no caller can quietly use a truncated series where the closed form
/// is the accurate one.
pub fn mass_spectrum_small_x_series(model: &MirrorModel, omega: f64) -> Result<f64, SpectraError> {
    if omega.abs() / model.omega_c() >= SERIES_SWITCH {
        return Err(SpectraError::OutsideSeriesRange {
            omega,
            omega_c: model.omega_c(),
        });
    }
    Ok(closed_forms::mass_series(model, omega))
}

/// Leading low-frequency law of a spectrum component for this model:
/// F1F1 → ħ²ω³/(3π), F0F0 → ħ²ω⁵/(6πΩ²), Mass → ħ²ω³/(6πΩ²).
pub fn low_freq_asymptote(
    model: &MirrorModel,
    component: SpectrumComponent,
    omega: f64,
) -> Result<f64, SpectraError> {
    let hbar2 = model.hbar() * model.hbar();
    let oc2 = model.omega_c() * model.omega_c();
    if omega <= 0.0 {
        match component {
            SpectrumComponent::F0F0 | SpectrumComponent::F1F1 | SpectrumComponent::Mass => {
                return Ok(0.0)
            }
            other => {
                return Err(SpectraError::InvalidComponent {
                    op: "low_freq_asymptote",
                    component: other,
                })
            }
        }
    }
    let w3 = omega * omega * omega;
    match component {
        SpectrumComponent::F1F1 => Ok(hbar2 * w3 / (3.0 * PI)),
        SpectrumComponent::F0F0 => Ok(hbar2 * w3 * omega * omega / (6.0 * PI * oc2)),
        SpectrumComponent::Mass => Ok(hbar2 * w3 / (6.0 * PI * oc2)),
        other => Err(SpectraError::InvalidComponent {
            op: "low_freq_asymptote",
            component: other,
        }),
    }
}

/// Local-field autocorrelation spectrum C_φφ(ω) = θ(ω) ħ ω τ(ω) / Ω.
///
/// Vanishes at ω → 0⁺ and ω → ∞, with its maximum ħ/(2Ω) at ω = Ω.
pub fn field_autocorrelation(model: &MirrorModel, omega: f64) -> f64 {
    closed_forms::field_closed(model, omega)
}

/// Mass spectrum through the self-convolution of the field
/// autocorrelation: C_mm(ω) = 2Ω² ∫ (dω'/2π) C_φφ(ω') C_φφ(ω-ω').
///
/// The field spectrum is one-sided, so the convolution support collapses
/// to [0, ω]; the result must agree with [`mass_spectrum`] on the
/// quadrature route within combined tolerances.
pub fn mass_spectrum_via_convolution(
    model: &MirrorModel,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, SpectraError> {
    if omega <= 0.0 {
        return Ok(0.0);
    }
    let integrand = |u: f64| {
        closed_forms::field_closed(model, u) * closed_forms::field_closed(model, omega - u)
    };
    let result = quadrature::integrate(integrand, 0.0, omega, cfg)?;
    let oc = model.omega_c();
    Ok(oc * oc / PI * result.value)
}

/// Mean induced mass up to an explicit UV cutoff, by quadrature:
/// ⟨Δm⟩(Λ) = ∫₀^Λ (dω/2π) ħ ω τ(ω).
///
/// The integral grows logarithmically in Λ, which is why the cutoff is a
/// mandatory argument.
pub fn mean_induced_mass(
    model: &MirrorModel,
    lambda_cut: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, SpectraError> {
    if !lambda_cut.is_finite() || lambda_cut <= 0.0 {
        return Err(SpectraError::InvalidCutoff(lambda_cut));
    }
    let integrand = |w: f64| w * model.reflection_delay(w);
    let result = quadrature::integrate_to_cutoff(integrand, lambda_cut, cfg)?;
    Ok(model.hbar() / (2.0 * PI) * result.value)
}

/// Antiderivative form of [`mean_induced_mass`]:
/// ⟨Δm⟩(Λ) = (ħΩ/4π) ln(1 + Λ²/Ω²).
pub fn mean_induced_mass_analytic(
    model: &MirrorModel,
    lambda_cut: f64,
) -> Result<f64, SpectraError> {
    if !lambda_cut.is_finite() || lambda_cut <= 0.0 {
        return Err(SpectraError::InvalidCutoff(lambda_cut));
    }
    let z = lambda_cut / model.omega_c();
    let log_term = if z <= 1.0 {
        (z * z).ln_1p()
    } else {
        2.0 * z.ln() + (1.0 / (z * z)).ln_1p()
    };
    Ok(model.hbar() * model.omega_c() / (4.0 * PI) * log_term)
}

/// Both sides of the mass mean/variance relation at a common cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarianceRelation {
    /// ⟨Δm²⟩ - ⟨Δm⟩² from the spectrum integral: the cutoff field
    /// autocorrelation self-convolved, then integrated over all ω.
    pub spectrum_integral: f64,
    /// 2⟨Δm⟩² from the cutoff mean induced mass, squared.
    pub twice_mean_squared: f64,
}

impl VarianceRelation {
    pub fn ratio(&self) -> f64 {
        self.spectrum_integral / self.twice_mean_squared
    }
}

/// Checks ⟨Δm²⟩ - ⟨Δm⟩² = 2⟨Δm⟩² with cutoff-consistent quantities on
/// both sides (both diverge without one).
///
/// Side (a) is a genuine double quadrature of the truncated-spectrum
/// convolution; side (b) squares the quadrature mean. The two agree
/// identically in exact arithmetic because (a) is the zero-time value of
/// the squared-field correlation built from the same truncation.
pub fn variance_relation_check(
    model: &MirrorModel,
    lambda_cut: f64,
    cfg: &QuadratureConfig,
) -> Result<VarianceRelation, SpectraError> {
    if !lambda_cut.is_finite() || lambda_cut <= 0.0 {
        return Err(SpectraError::InvalidCutoff(lambda_cut));
    }
    let oc = model.omega_c();

    // Field autocorrelation truncated at the cutoff.
    let phi_cut = |nu: f64| {
        if nu > 0.0 && nu <= lambda_cut {
            closed_forms::field_closed(model, nu)
        } else {
            0.0
        }
    };

    // Truncated mass spectrum at one frequency; integration limits carry
    // the support so the integrand stays smooth inside the panel.
    let mass_cut = |w: f64| -> Result<f64, QuadratureError> {
        let lo = (w - lambda_cut).max(0.0);
        let hi = w.min(lambda_cut);
        if hi <= lo {
            return Ok(0.0);
        }
        let inner = quadrature::integrate(|u| phi_cut(u) * phi_cut(w - u), lo, hi, cfg)?;
        Ok(oc * oc / PI * inner.value)
    };

    // The outer integrand inherits quadrature noise of order rel_tol from
    // the inner integral, so it cannot be driven below that level.
    let outer_cfg = QuadratureConfig {
        rel_tol: (cfg.rel_tol * 1e2).min(1e-6),
        ..cfg.clone()
    };
    // An inner failure cannot cross the Fn boundary of the outer
    // integrand directly; it is parked here and rethrown afterwards.
    let inner_failure: std::cell::Cell<Option<QuadratureError>> = std::cell::Cell::new(None);
    let outer_integrand = |w: f64| match mass_cut(w) {
        Ok(v) => v,
        Err(e) => {
            inner_failure.set(Some(e));
            0.0
        }
    };
    // The support of the truncated spectrum is [0, 2Λ], with a slope break
    // at Λ where the convolution limits change regime.
    let mut spectrum_integral = 0.0;
    for (a, b) in [(0.0, lambda_cut), (lambda_cut, 2.0 * lambda_cut)] {
        let piece = quadrature::integrate(outer_integrand, a, b, &outer_cfg)?;
        if let Some(e) = inner_failure.take() {
            return Err(e.into());
        }
        spectrum_integral += piece.value;
    }
    spectrum_integral /= 2.0 * PI;

    let mean = mean_induced_mass(model, lambda_cut, cfg)?;
    Ok(VarianceRelation {
        spectrum_integral,
        twice_mean_squared: 2.0 * mean * mean,
    })
}

/// A spectrum evaluated on a frequency grid.
///
/// Construction enforces the sample invariants: strictly increasing
/// frequencies, exact zeros at ω ≤ 0, and nonnegative values.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSamples {
    frequencies: Vec<f64>,
    values: Vec<f64>,
    error_estimates: Vec<f64>,
    component: SpectrumComponent,
    method: SpectrumMethod,
    model: MirrorModel,
}

impl SpectrumSamples {
    pub fn new(
        model: MirrorModel,
        component: SpectrumComponent,
        method: SpectrumMethod,
        frequencies: Vec<f64>,
        values: Vec<f64>,
        error_estimates: Vec<f64>,
    ) -> Result<Self, SpectraError> {
        if frequencies.len() != values.len() || frequencies.len() != error_estimates.len() {
            return Err(SpectraError::InvalidSamples(
                "frequencies, values and error estimates must have equal length",
            ));
        }
        if frequencies
            .windows(2)
            .any(|w| w[0] >= w[1] || w[0].is_nan() || w[1].is_nan())
        {
            return Err(SpectraError::InvalidSamples(
                "frequencies must be strictly increasing",
            ));
        }
        if frequencies.iter().any(|f| !f.is_finite()) {
            return Err(SpectraError::InvalidSamples("frequencies must be finite"));
        }
        for (&f, &v) in frequencies.iter().zip(&values) {
            if f <= 0.0 && v != 0.0 {
                return Err(SpectraError::InvalidSamples(
                    "spectra contain positive frequencies only",
                ));
            }
            if component.is_nonnegative() && v < 0.0 {
                return Err(SpectraError::InvalidSamples("spectrum values must be >= 0"));
            }
        }
        Ok(Self {
            frequencies,
            values,
            error_estimates,
            component,
            method,
            model,
        })
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn error_estimates(&self) -> &[f64] {
        &self.error_estimates
    }

    pub fn component(&self) -> SpectrumComponent {
        self.component
    }

    pub fn method(&self) -> SpectrumMethod {
        self.method
    }

    pub fn model(&self) -> &MirrorModel {
        &self.model
    }

    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }
}

/// Evaluate one spectrum component on a frequency grid with the given
/// method. Grid points are independent, so evaluation is parallel; the
/// output order is the input order regardless of scheduling.
pub fn evaluate_grid(
    model: &MirrorModel,
    component: SpectrumComponent,
    method: SpectrumMethod,
    frequencies: &[f64],
    cfg: &QuadratureConfig,
) -> Result<SpectrumSamples, SpectraError> {
    validate_pairing(component, method)?;
    let evaluated: Result<Vec<(f64, f64)>, SpectraError> = frequencies
        .par_iter()
        .map(|&w| evaluate_point(model, component, method, w, cfg))
        .collect();
    let evaluated = evaluated?;
    let (values, errors): (Vec<f64>, Vec<f64>) = evaluated.into_iter().unzip();
    SpectrumSamples::new(
        *model,
        component,
        method,
        frequencies.to_vec(),
        values,
        errors,
    )
}

/// Method/component pairs that have an evaluation route.
pub fn validate_pairing(
    component: SpectrumComponent,
    method: SpectrumMethod,
) -> Result<(), SpectraError> {
    use SpectrumComponent as C;
    use SpectrumMethod as M;
    let ok = matches!(
        (component, method),
        (C::F0F0 | C::F1F1 | C::F0F1, M::Quadrature)
            | (C::F0F0 | C::F1F1, M::Asymptote)
            | (
                C::Mass,
                M::Quadrature | M::ClosedForm | M::Convolution | M::Asymptote
            )
            | (C::Field, M::ClosedForm)
    );
    if ok {
        Ok(())
    } else {
        Err(SpectraError::InvalidMethod { component, method })
    }
}

/// One (value, error estimate) sample. Closed forms and asymptotes carry a
/// zero error estimate; quadrature routes report the panel-sum estimate.
fn evaluate_point(
    model: &MirrorModel,
    component: SpectrumComponent,
    method: SpectrumMethod,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64), SpectraError> {
    use SpectrumComponent as C;
    use SpectrumMethod as M;
    match (component, method) {
        (C::F0F0 | C::F1F1 | C::F0F1, M::Quadrature) => {
            if omega <= 0.0 || component == C::F0F1 {
                return Ok((0.0, 0.0));
            }
            let hbar2 = model.hbar() * model.hbar();
            let integrand = |u: f64| {
                let kernel = alpha_kernel_from_amplitudes(
                    &model.amplitudes(u),
                    &model.amplitudes(omega - u),
                    component,
                )
                .expect("force components always have a kernel");
                u * (omega - u) * kernel
            };
            let r = quadrature::integrate(integrand, 0.0, omega, cfg)?;
            Ok((hbar2 / PI * r.value, hbar2 / PI * r.error_estimate))
        }
        (C::Mass, M::Quadrature) => {
            if omega <= 0.0 {
                return Ok((0.0, 0.0));
            }
            let hbar2 = model.hbar() * model.hbar();
            let integrand = |u: f64| {
                u * (omega - u) * model.reflection_delay(u) * model.reflection_delay(omega - u)
            };
            let r = quadrature::integrate(integrand, 0.0, omega, cfg)?;
            Ok((hbar2 / PI * r.value, hbar2 / PI * r.error_estimate))
        }
        (C::Mass, M::ClosedForm) => Ok((closed_forms::mass_closed(model, omega), 0.0)),
        (C::Mass, M::Convolution) => {
            if omega <= 0.0 {
                return Ok((0.0, 0.0));
            }
            let integrand = |u: f64| {
                closed_forms::field_closed(model, u) * closed_forms::field_closed(model, omega - u)
            };
            let r = quadrature::integrate(integrand, 0.0, omega, cfg)?;
            let oc2 = model.omega_c() * model.omega_c();
            Ok((oc2 / PI * r.value, oc2 / PI * r.error_estimate))
        }
        (C::F0F0 | C::F1F1 | C::Mass, M::Asymptote) => {
            Ok((low_freq_asymptote(model, component, omega)?, 0.0))
        }
        (C::Field, M::ClosedForm) => Ok((closed_forms::field_closed(model, omega), 0.0)),
        _ => Err(SpectraError::InvalidMethod { component, method }),
    }
}

/// Fast exact evaluation used by noise synthesis, where a spectrum is
/// needed at tens of thousands of FFT bins. Values agree with the
/// quadrature routes to their tolerance (enforced by tests).
pub(crate) fn spectrum_closed_fast(
    model: &MirrorModel,
    component: SpectrumComponent,
    omega: f64,
) -> f64 {
    match component {
        SpectrumComponent::F0F0 => closed_forms::force_f0f0_closed(model, omega),
        SpectrumComponent::F1F1 => closed_forms::force_f1f1_closed(model, omega),
        SpectrumComponent::F0F1 => 0.0,
        SpectrumComponent::Mass => closed_forms::mass_closed(model, omega),
        SpectrumComponent::Field => closed_forms::field_closed(model, omega),
    }
}

/// Logarithmically spaced grid of `points` frequencies over [min, max].
pub fn log_grid(min: f64, max: f64, points: usize) -> Vec<f64> {
    assert!(min > 0.0 && max > min && points >= 2, "invalid log grid");
    let lmin = min.ln();
    let step = (max.ln() - lmin) / (points - 1) as f64;
    (0..points)
        .map(|i| {
            // Pin both endpoints so grid bounds are hit exactly.
            if i == 0 {
                min
            } else if i + 1 == points {
                max
            } else {
                (lmin + step * i as f64).exp()
            }
        })
        .collect()
}

/// Default evaluation grid for this model: 400 points, log spaced over
/// [10⁻³, 10³] Ω.
pub fn default_grid(model: &MirrorModel) -> Vec<f64> {
    log_grid(1e-3 * model.omega_c(), 1e3 * model.omega_c(), 400)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use num_complex::Complex64;
    use proptest::prelude::*;

    // Hand evaluation of the closed form at omega = omega_c, hbar = 1:
    // 0.8 * (1.5 ln 2 - pi/4) / (2 pi), checked independently against
    // 40-digit quadrature of the delay-product integral.
    const MASS_SPECTRUM_AT_CUTOFF: f64 = 0.032381360091590956;

    // ln(2)/(4 pi): antiderivative of the cutoff mean-mass integrand.
    #[allow(clippy::excessive_precision)]
    const MEAN_MASS_AT_UNIT_CUTOFF: f64 = 0.055158900038162898;

    fn mirror(omega_c: f64) -> MirrorModel {
        MirrorModel::new(omega_c).unwrap()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn kernel_of_perfect_mirror_amplitudes() {
        let perfect = AmplitudePair {
            s: Complex64::new(0.0, 0.0),
            r: Complex64::new(-1.0, 0.0),
        };
        let a00 =
            alpha_kernel_from_amplitudes(&perfect, &perfect, SpectrumComponent::F0F0).unwrap();
        let a11 =
            alpha_kernel_from_amplitudes(&perfect, &perfect, SpectrumComponent::F1F1).unwrap();
        assert_eq!(a00, 0.0);
        assert_eq!(a11, 2.0);
    }

    #[test]
    fn cross_kernel_is_identically_zero() {
        let m = mirror(2.5);
        for &(w1, w2) in &[(0.3, 1.0), (-4.0, 7.0), (100.0, 0.001)] {
            assert_eq!(
                alpha_kernel(&m, SpectrumComponent::F0F1, w1, w2).unwrap(),
                0.0
            );
        }
    }

    #[test]
    fn kernel_rejects_mass_and_field() {
        let m = mirror(1.0);
        assert!(alpha_kernel(&m, SpectrumComponent::Mass, 1.0, 2.0).is_err());
        assert!(alpha_kernel(&m, SpectrumComponent::Field, 1.0, 2.0).is_err());
    }

    #[test]
    fn kernel_matches_delay_product_identity() {
        // For this model alpha00(w1, w2) = (w1+w2)^2 tau(w1) tau(w2).
        let m = mirror(1.0);
        let a = alpha_kernel(&m, SpectrumComponent::F0F0, 1.0, 2.0).unwrap();
        assert_abs_diff_eq!(a, 0.9, epsilon = 1e-15);
        let b = 9.0 * m.reflection_delay(1.0) * m.reflection_delay(2.0);
        assert_abs_diff_eq!(a, b, epsilon = 1e-15);
    }

    #[test]
    fn force_spectrum_is_one_sided() {
        let m = mirror(1.0);
        for comp in [
            SpectrumComponent::F0F0,
            SpectrumComponent::F1F1,
            SpectrumComponent::F0F1,
        ] {
            assert_eq!(force_spectrum(&m, comp, -1.0, &cfg()).unwrap(), 0.0);
            assert_eq!(force_spectrum(&m, comp, 0.0, &cfg()).unwrap(), 0.0);
        }
    }

    #[test]
    fn radiation_pressure_reaches_perfect_reflection_limit() {
        // At omega_c = 1e4 * omega the mirror is effectively perfect.
        let m = mirror(1e4);
        let w = 1.0;
        let c = force_spectrum(&m, SpectrumComponent::F1F1, w, &cfg()).unwrap();
        let perfect = w * w * w / (3.0 * PI);
        assert_relative_eq!(c / perfect, 1.0, epsilon = 1e-3);
    }

    #[test]
    fn energy_flux_spectrum_is_mass_spectrum_times_omega_squared() {
        let m = mirror(1.0);
        for &w in &[0.1, 1.0, 10.0] {
            let f00 = force_spectrum(&m, SpectrumComponent::F0F0, w, &cfg()).unwrap();
            let mass = mass_spectrum(&m, w, MassMethod::Quadrature, &cfg()).unwrap();
            assert_relative_eq!(f00, w * w * mass, max_relative = 1e-8);
        }
    }

    #[test]
    fn mass_spectrum_spot_value_at_cutoff_frequency() {
        let m = mirror(1.0);
        let closed = mass_spectrum(&m, 1.0, MassMethod::ClosedForm, &cfg()).unwrap();
        let quad = mass_spectrum(&m, 1.0, MassMethod::Quadrature, &cfg()).unwrap();
        assert_relative_eq!(closed, MASS_SPECTRUM_AT_CUTOFF, max_relative = 1e-12);
        assert_relative_eq!(quad, MASS_SPECTRUM_AT_CUTOFF, max_relative = 1e-10);
    }

    #[test]
    fn mass_spectrum_low_frequency_law() {
        let m = mirror(1.0);
        let w = 0.01;
        let c = mass_spectrum(&m, w, MassMethod::ClosedForm, &cfg()).unwrap();
        let lead = w * w * w / (6.0 * PI);
        assert_relative_eq!(c / lead, 1.0, epsilon = 5e-4);

        // Deep in the quasistatic regime the series is the leading law to
        // a part in a million.
        let w = 0.001;
        let c = mass_spectrum_small_x_series(&m, w).unwrap();
        assert_relative_eq!(c, w * w * w / (6.0 * PI), max_relative = 1e-6);
    }

    #[test]
    fn mass_series_matches_quadrature_in_overlap() {
        let m = mirror(1.0);
        for &w in &[0.002, 0.005, 0.009] {
            let series = mass_spectrum_small_x_series(&m, w).unwrap();
            let quad = mass_spectrum(&m, w, MassMethod::Quadrature, &cfg()).unwrap();
            assert_relative_eq!(series, quad, max_relative = 1e-6);
        }
    }

    #[test]
    fn mass_series_rejects_frequencies_at_or_above_switch() {
        let m = mirror(1.0);
        assert!(mass_spectrum_small_x_series(&m, 0.01).is_err());
        assert!(mass_spectrum_small_x_series(&m, 5.0).is_err());
        assert_eq!(mass_spectrum_small_x_series(&m, 0.0).unwrap(), 0.0);
        assert_eq!(mass_spectrum_small_x_series(&m, -0.005).unwrap(), 0.0);
    }

    #[test]
    fn closed_form_matches_quadrature_across_the_grid() {
        let m = mirror(1.0);
        for &w in &[1e-3, 0.009, 0.02, 0.3, 1.0, 7.0, 90.0, 1e3] {
            let closed = mass_spectrum(&m, w, MassMethod::ClosedForm, &cfg()).unwrap();
            let quad = mass_spectrum(&m, w, MassMethod::Quadrature, &cfg()).unwrap();
            assert_relative_eq!(closed, quad, max_relative = 1e-8);
        }
    }

    #[test]
    fn asymptote_values() {
        let m = mirror(1.0);
        let w = 0.1;
        assert_relative_eq!(
            low_freq_asymptote(&m, SpectrumComponent::F1F1, w).unwrap(),
            1e-3 / (3.0 * PI),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            low_freq_asymptote(&m, SpectrumComponent::F0F0, w).unwrap(),
            1e-5 / (6.0 * PI),
            max_relative = 1e-15
        );
        assert_eq!(
            low_freq_asymptote(&m, SpectrumComponent::Mass, -0.1).unwrap(),
            0.0
        );
        assert!(low_freq_asymptote(&m, SpectrumComponent::Field, 0.1).is_err());
    }

    #[test]
    fn field_autocorrelation_values_and_peak() {
        let m = mirror(1.0);
        assert_relative_eq!(field_autocorrelation(&m, 1.0), 0.5, max_relative = 1e-15);
        assert_eq!(field_autocorrelation(&m, -1.0), 0.0);

        // d(omega tau)/domega = 0 at omega = omega_c; scan a fine grid to
        // confirm the peak location and value hbar/(2 omega_c).
        let m = mirror(2.0);
        let peak = field_autocorrelation(&m, 2.0);
        assert_relative_eq!(peak, 0.25, max_relative = 1e-15);
        for &w in &[1.8, 1.9, 1.99, 2.01, 2.1, 2.2] {
            assert!(field_autocorrelation(&m, w) <= peak);
        }
    }

    #[test]
    fn convolution_route_matches_closed_form_and_quadrature() {
        let m = mirror(1.0);
        let conv = mass_spectrum_via_convolution(&m, 1.0, &cfg()).unwrap();
        assert_relative_eq!(conv, MASS_SPECTRUM_AT_CUTOFF, max_relative = 1e-10);
        assert_eq!(mass_spectrum_via_convolution(&m, 0.0, &cfg()).unwrap(), 0.0);
        assert_eq!(
            mass_spectrum_via_convolution(&m, -3.0, &cfg()).unwrap(),
            0.0
        );

        let conv5 = mass_spectrum_via_convolution(&m, 5.0, &cfg()).unwrap();
        let quad5 = mass_spectrum(&m, 5.0, MassMethod::Quadrature, &cfg()).unwrap();
        assert_relative_eq!(conv5, quad5, max_relative = 1e-8);
    }

    #[test]
    fn mean_mass_quadrature_and_antiderivative_agree() {
        let m = mirror(1.0);
        let quad = mean_induced_mass(&m, 1.0, &cfg()).unwrap();
        let exact = mean_induced_mass_analytic(&m, 1.0).unwrap();
        assert_relative_eq!(quad, MEAN_MASS_AT_UNIT_CUTOFF, max_relative = 1e-10);
        assert_relative_eq!(exact, MEAN_MASS_AT_UNIT_CUTOFF, max_relative = 1e-15);
    }

    #[test]
    fn mean_mass_vanishes_with_the_cutoff() {
        let m = mirror(1.0);
        let v = mean_induced_mass_analytic(&m, 1e-12).unwrap();
        assert!((0.0..1e-20).contains(&v));
    }

    #[test]
    fn mean_mass_grows_logarithmically() {
        let m = mirror(1.0);
        let a = mean_induced_mass_analytic(&m, 1e3).unwrap();
        let b = mean_induced_mass_analytic(&m, 1e6).unwrap();
        let expected = (1.0 / (4.0 * PI)) * (1e6f64 / 1e3).powi(2).ln();
        assert_relative_eq!(b - a, expected, max_relative = 1e-5);
    }

    #[test]
    fn mean_mass_rejects_nonpositive_cutoff() {
        let m = mirror(1.0);
        assert!(mean_induced_mass(&m, 0.0, &cfg()).is_err());
        assert!(mean_induced_mass(&m, -1.0, &cfg()).is_err());
        assert!(mean_induced_mass_analytic(&m, 0.0).is_err());
    }

    #[test]
    fn variance_relation_holds_at_two_cutoffs() {
        let m = mirror(1.0);
        for &lambda in &[10.0, 100.0] {
            let rel = variance_relation_check(&m, lambda, &cfg()).unwrap();
            assert_relative_eq!(rel.ratio(), 1.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn variance_relation_vanishes_with_the_cutoff() {
        let m = mirror(1.0);
        // Both sides scale as the fourth power of the cutoff.
        let rel = variance_relation_check(&m, 1e-6, &cfg()).unwrap();
        assert!(rel.spectrum_integral.abs() < 1e-20);
        assert!(rel.twice_mean_squared.abs() < 1e-20);
    }

    #[test]
    fn grid_evaluation_matches_pointwise_calls() {
        let m = mirror(1.0);
        let freqs = [-1.0, 0.5, 2.0];
        let samples = evaluate_grid(
            &m,
            SpectrumComponent::Mass,
            SpectrumMethod::ClosedForm,
            &freqs,
            &cfg(),
        )
        .unwrap();
        assert_eq!(samples.values()[0], 0.0);
        for (i, &w) in freqs.iter().enumerate().skip(1) {
            let direct = mass_spectrum(&m, w, MassMethod::ClosedForm, &cfg()).unwrap();
            assert_eq!(samples.values()[i], direct);
        }
    }

    #[test]
    fn grid_evaluation_rejects_invalid_pairings() {
        let m = mirror(1.0);
        assert!(evaluate_grid(
            &m,
            SpectrumComponent::F0F1,
            SpectrumMethod::ClosedForm,
            &[1.0],
            &cfg()
        )
        .is_err());
        assert!(evaluate_grid(
            &m,
            SpectrumComponent::Field,
            SpectrumMethod::Quadrature,
            &[1.0],
            &cfg()
        )
        .is_err());
    }

    #[test]
    fn samples_constructor_enforces_invariants() {
        let m = mirror(1.0);
        // Non-increasing frequencies.
        assert!(SpectrumSamples::new(
            m,
            SpectrumComponent::Mass,
            SpectrumMethod::ClosedForm,
            vec![1.0, 1.0],
            vec![0.1, 0.1],
            vec![0.0, 0.0],
        )
        .is_err());
        // Nonzero value at a nonpositive frequency.
        assert!(SpectrumSamples::new(
            m,
            SpectrumComponent::Mass,
            SpectrumMethod::ClosedForm,
            vec![-1.0, 1.0],
            vec![0.1, 0.1],
            vec![0.0, 0.0],
        )
        .is_err());
        // Negative spectrum value.
        assert!(SpectrumSamples::new(
            m,
            SpectrumComponent::Mass,
            SpectrumMethod::ClosedForm,
            vec![1.0, 2.0],
            vec![-0.1, 0.1],
            vec![0.0, 0.0],
        )
        .is_err());
    }

    #[test]
    fn one_sided_and_nonnegative_over_the_default_grid() {
        let m = mirror(1.0);
        let grid = default_grid(&m);
        assert_eq!(grid.len(), 400);
        for (component, method) in [
            (SpectrumComponent::F0F0, SpectrumMethod::Quadrature),
            (SpectrumComponent::F1F1, SpectrumMethod::Quadrature),
            (SpectrumComponent::Mass, SpectrumMethod::ClosedForm),
            (SpectrumComponent::Field, SpectrumMethod::ClosedForm),
        ] {
            let samples = evaluate_grid(&m, component, method, &grid, &cfg()).unwrap();
            assert!(samples.values().iter().all(|&v| v >= 0.0));
        }
        // Negative frequencies map to exact zeros for every component.
        for component in [
            SpectrumComponent::F0F0,
            SpectrumComponent::F1F1,
            SpectrumComponent::F0F1,
        ] {
            for &w in &[-10.0, -0.5] {
                assert_eq!(force_spectrum(&m, component, w, &cfg()).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn energy_flux_is_suppressed_in_the_perfect_reflection_limit() {
        // At fixed omega, C_F0F0 falls off as 1/omega_c^2: the product
        // with omega_c^2 converges to the finite coefficient
        // hbar^2 omega^5 / 6 pi while the spectrum itself goes to zero.
        let w = 1.0;
        let coefficient = 1.0 / (6.0 * PI);
        let mut previous = f64::INFINITY;
        for &oc in &[1e2, 1e3, 1e4] {
            let m = mirror(oc);
            let c = force_spectrum(&m, SpectrumComponent::F0F0, w, &cfg()).unwrap();
            assert!(c < previous);
            assert_relative_eq!(c * oc * oc, coefficient, max_relative = 1e-3);
            previous = c;
        }
    }

    #[test]
    fn vanishing_delay_kills_mass_fluctuations() {
        // Larger cutoff, smaller delay, smaller mass spectrum at fixed omega.
        let w = 1.0;
        let small = mass_spectrum(&mirror(1.0), w, MassMethod::ClosedForm, &cfg()).unwrap();
        let large = mass_spectrum(&mirror(1e4), w, MassMethod::ClosedForm, &cfg()).unwrap();
        assert!(large < small * 1e-6);
    }

    proptest! {
        #[test]
        fn kernel_is_symmetric(
            w1 in -50.0..50.0f64,
            w2 in -50.0..50.0f64,
            omega_c in 0.1..10.0f64,
        ) {
            let m = MirrorModel::new(omega_c).unwrap();
            for comp in [SpectrumComponent::F0F0, SpectrumComponent::F1F1] {
                let a = alpha_kernel(&m, comp, w1, w2).unwrap();
                let b = alpha_kernel(&m, comp, w2, w1).unwrap();
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn delay_product_identity_randomized(
            e1 in -3.0..3.0f64,
            e2 in -3.0..3.0f64,
            omega_c in 0.1..10.0f64,
        ) {
            let m = MirrorModel::new(omega_c).unwrap();
            let (w1, w2) = (10f64.powf(e1) * omega_c, 10f64.powf(e2) * omega_c);
            let a = alpha_kernel(&m, SpectrumComponent::F0F0, w1, w2).unwrap();
            let b = (w1 + w2) * (w1 + w2)
                * m.reflection_delay(w1)
                * m.reflection_delay(w2);
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0));
        }
    }
}
