//! Closed-form evaluations of the vacuum spectra for the lorentzian mirror.
//!
//! The mass spectrum has an exact log/arctan expression whose braced
//! combination cancels to fourth order in x = ω/Ω; below [`SERIES_SWITCH`]
//! every routine here switches to a Taylor series so no catastrophic
//! cancellation ever reaches a caller. Forms are algebraically rearranged
//! in 1/x for x > 1 so arbitrarily large frequencies stay finite.

use crate::scattering::MirrorModel;
use std::f64::consts::PI;

/// Dimensionless frequency below which the series paths take over.
pub(crate) const SERIES_SWITCH: f64 = 1e-2;

/// Mass spectrum, exact expression, valid for x = ω/Ω not small.
///
/// C_mm(ω) = (ħ²Ω/2π) · [(1 + x²/2) ln(1 + x²) - x atan x] / (x (1 + x²/4))
pub(crate) fn mass_direct(model: &MirrorModel, omega: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    let hbar = model.hbar();
    let x = omega / model.omega_c();
    let scale = hbar * hbar * model.omega_c() / (2.0 * PI);
    if x <= 1.0 {
        let brace = (1.0 + 0.5 * x * x) * (x * x).ln_1p() - x * x.atan();
        scale * brace / (x * (1.0 + 0.25 * x * x))
    } else {
        // Same expression divided through by x^3, in terms of t = 1/x.
        let t = 1.0 / x;
        let log_term = -2.0 * t.ln() + (t * t).ln_1p();
        let numer = (0.5 * t + t * t * t) * log_term - t * t * (0.5 * PI - t.atan());
        scale * numer / (0.25 + t * t)
    }
}

/// Mass spectrum Taylor series around x = 0:
/// C_mm = (ħ²Ω/2π) (x³/3 - x⁵/5 + 23x⁷/210 - 4x⁹/63 + O(x¹¹)).
///
/// At the switch point x = 10⁻² the truncation error is below 10⁻¹⁶
/// relative, so the two paths overlap far inside every comparison
/// tolerance used in this crate.
pub(crate) fn mass_series(model: &MirrorModel, omega: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    let hbar = model.hbar();
    let x = omega / model.omega_c();
    let x2 = x * x;
    let poly = x * x2 * (1.0 / 3.0 + x2 * (-1.0 / 5.0 + x2 * (23.0 / 210.0 - x2 * 4.0 / 63.0)));
    hbar * hbar * model.omega_c() / (2.0 * PI) * poly
}

/// Mass spectrum with the series/closed-form switch applied.
pub(crate) fn mass_closed(model: &MirrorModel, omega: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    if omega / model.omega_c() < SERIES_SWITCH {
        mass_series(model, omega)
    } else {
        mass_direct(model, omega)
    }
}

/// Radiation-pressure spectrum, exact expression:
/// C_F1F1(ω) = (2ħ²Ω³/π) [ (x/2) ln(1 + x²) - x + atan x ].
pub(crate) fn force_f1f1_closed(model: &MirrorModel, omega: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    let hbar = model.hbar();
    let oc = model.omega_c();
    let x = omega / oc;
    let scale = 2.0 * hbar * hbar * oc * oc * oc / PI;
    if x < SERIES_SWITCH {
        // bracket = x³/6 - x⁵/20 + x⁷/42 - x⁹/72 + O(x¹¹)
        let x2 = x * x;
        let poly = x * x2 * (1.0 / 6.0 + x2 * (-1.0 / 20.0 + x2 * (1.0 / 42.0 - x2 / 72.0)));
        scale * poly
    } else if x <= 1.0 {
        scale * (0.5 * x * (x * x).ln_1p() - x + x.atan())
    } else {
        let t = 1.0 / x;
        let log_term = -2.0 * t.ln() + (t * t).ln_1p();
        scale * (0.5 * x * log_term - x + 0.5 * PI - t.atan())
    }
}

/// Energy-flux spectrum: C_F0F0(ω) = ω² C_mm(ω) for this model.
pub(crate) fn force_f0f0_closed(model: &MirrorModel, omega: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    (omega * mass_closed(model, omega)) * omega
}

/// Local-field autocorrelation: C_φφ(ω) = θ(ω) ħ ω τ(ω) / Ω.
pub(crate) fn field_closed(model: &MirrorModel, omega: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    model.hbar() * omega * model.reflection_delay(omega) / model.omega_c()
}
