//! Adaptive quadrature over finite intervals.
//!
//! Globally adaptive bisection with an embedded Gauss(7)/Kronrod(15) rule
//! pair on each panel; the error estimate on a panel is the difference
//! between the two rules. Node placement is deterministic, so repeated runs
//! produce bit-identical results.
//!
//! Integrands must be finite on the whole interval. Infinite intervals are
//! out of scope on purpose: divergent integrals in this crate are always
//! regularized by an explicit cutoff, stated at the call site through
//! [`integrate_to_cutoff`].

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

/// Tolerances and subdivision limit for [`integrate`].
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    /// Relative tolerance on the integral value.
    pub rel_tol: f64,
    /// Absolute tolerance; dominates when the integral is close to zero.
    pub abs_tol: f64,
    /// Maximum bisection depth of any panel.
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_depth: 50,
        }
    }
}

impl QuadratureConfig {
    /// Config with a given relative tolerance and a matching absolute floor.
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<(), QuadratureError> {
        if self.rel_tol.is_nan()
            || self.rel_tol <= 0.0
            || self.abs_tol.is_nan()
            || self.abs_tol < 0.0
            || self.max_depth < 1
        {
            return Err(QuadratureError::InvalidConfig);
        }
        Ok(())
    }
}

/// Converged integral with its error estimate and evaluation count.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Error)]
pub enum QuadratureError {
    #[error("invalid quadrature config (rel_tol > 0, abs_tol >= 0, max_depth >= 1 required)")]
    InvalidConfig,
    #[error("invalid interval [{a}, {b}]: bounds must be finite with a <= b")]
    InvalidInterval { a: f64, b: f64 },
    #[error("integrand returned a non-finite value at x = {x:e}")]
    NonFiniteSample { x: f64 },
    #[error(
        "max depth exhausted before tolerance was met \
         (best value {value}, error estimate {error_estimate})"
    )]
    NonConvergence {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
    },
}

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1] (QUADPACK values).
// Odd-indexed abscissae are the embedded 7-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

const EVALS_PER_PANEL: usize = 15;

// Safety valve for integrands that defeat adaptivity everywhere at once;
// 2^17 panels is far beyond anything the smooth kernels here need.
const MAX_PANELS: usize = 1 << 17;

/// One evaluated panel. Ordered by error estimate so the global loop
/// always refines the worst panel first.
#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Apply the G7-K15 pair to one panel.
fn eval_panel<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    depth: u32,
) -> Result<Panel, QuadratureError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let sample = |x: f64| -> Result<f64, QuadratureError> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadratureError::NonFiniteSample { x })
        }
    };

    let f_center = sample(center)?;
    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = sample(center - dx)?;
        let f2 = sample(center + dx)?;
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    Ok(Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
        depth,
    })
}

/// Integrate `f` over `[a, b]` to the requested tolerance.
///
/// Returns [`QuadratureError::NonConvergence`] (carrying the best value and
/// its error estimate) when the subdivision limit is reached first, and
/// [`QuadratureError::NonFiniteSample`] if the integrand produces NaN or an
/// infinity anywhere it is sampled.
///
/// The integration itself is sequential and reentrant; callers that
/// evaluate many integrals concurrently must pass integrands that are
/// themselves safe for concurrent evaluation.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult, QuadratureError> {
    cfg.validate()?;
    if !a.is_finite() || !b.is_finite() || a > b {
        return Err(QuadratureError::InvalidInterval { a, b });
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    let mut evaluations = EVALS_PER_PANEL;
    let root = eval_panel(&f, a, b, 0)?;
    let mut total_value = root.value;
    let mut total_error = root.error;

    let mut heap = BinaryHeap::new();
    heap.push(root);

    loop {
        if total_error <= cfg.abs_tol.max(cfg.rel_tol * total_value.abs()) {
            break;
        }

        // The worst panel drives refinement.
        let worst = heap.pop().expect("heap holds at least one panel");
        if worst.depth >= cfg.max_depth || heap.len() + 2 > MAX_PANELS {
            heap.push(worst);
            return Err(QuadratureError::NonConvergence {
                value: resum(&heap),
                error_estimate: total_error,
                evaluations,
            });
        }

        let mid = 0.5 * (worst.a + worst.b);
        let left = eval_panel(&f, worst.a, mid, worst.depth + 1)?;
        let right = eval_panel(&f, mid, worst.b, worst.depth + 1)?;
        evaluations += 2 * EVALS_PER_PANEL;

        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    Ok(QuadratureResult {
        value: resum(&heap),
        error_estimate: total_error.max(0.0),
        evaluations,
    })
}

/// Final value: panel contributions summed in interval order, which is
/// deterministic and slightly kinder to rounding than heap order.
fn resum(heap: &BinaryHeap<Panel>) -> f64 {
    let mut panels: Vec<&Panel> = heap.iter().collect();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    panels.iter().map(|p| p.value).sum()
}

/// Integrate `f` over `[0, lambda_cut]`.
///
/// Named entry point for integrals that would diverge without an upper
/// cutoff: every such call site states its cutoff explicitly. A zero cutoff
/// is an empty interval; a negative cutoff is rejected.
pub fn integrate_to_cutoff<F: Fn(f64) -> f64>(
    f: F,
    lambda_cut: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult, QuadratureError> {
    if !lambda_cut.is_finite() || lambda_cut < 0.0 {
        return Err(QuadratureError::InvalidInterval {
            a: 0.0,
            b: lambda_cut,
        });
    }
    integrate(f, 0.0, lambda_cut, cfg)
}
