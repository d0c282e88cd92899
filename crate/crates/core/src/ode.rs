//! Adaptive embedded Runge–Kutta integration for complex-valued autonomous
//! systems (Dormand–Prince 5(4) pair).
//!
//! States are small fixed arrays of complex numbers; time is a real
//! parameter (complex-time paths are realized by rotating the field).

use num_complex::Complex64;

use crate::error::HolonomyError;

/// Relative/absolute tolerance pair for the step controller.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OdeTol {
    pub rtol: f64,
    pub atol: f64,
}

impl Default for OdeTol {
    fn default() -> Self {
        OdeTol {
            rtol: 1e-10,
            atol: 1e-12,
        }
    }
}

const MAX_STEPS: usize = 200_000;

// Dormand–Prince coefficients
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Integrate y' = f(y) from 0 to `t_end` (either sign). The optional guard
/// aborts the integration when a state leaves the safe domain.
pub fn integrate<const N: usize>(
    f: &dyn Fn([Complex64; N]) -> [Complex64; N],
    y0: [Complex64; N],
    t_end: f64,
    tol: OdeTol,
    guard: Option<&dyn Fn(&[Complex64; N]) -> bool>,
) -> Result<[Complex64; N], HolonomyError> {
    if t_end == 0.0 {
        return Ok(y0);
    }
    let dir = t_end.signum();
    let total = t_end.abs();
    let mut t = 0.0f64;
    let mut y = y0;
    let mut h = (total / 16.0).min(0.1).max(1e-8);
    let mut k = [[Complex64::new(0.0, 0.0); N]; 7];
    for _ in 0..MAX_STEPS {
        if t >= total {
            return Ok(y);
        }
        if t + h > total {
            h = total - t;
        }
        k[0] = f(y);
        scale_in_place(&mut k[0], dir);
        for stage in 0..6 {
            let mut ys = y;
            for (j, kj) in k.iter().enumerate().take(stage + 1) {
                let c = A[stage][j] * h;
                for n in 0..N {
                    ys[n] += kj[n] * c;
                }
            }
            k[stage + 1] = f(ys);
            scale_in_place(&mut k[stage + 1], dir);
        }
        let mut y5 = y;
        let mut y4 = y;
        for (j, kj) in k.iter().enumerate() {
            for n in 0..N {
                y5[n] += kj[n] * (B5[j] * h);
                y4[n] += kj[n] * (B4[j] * h);
            }
        }
        // error estimate against the mixed tolerance
        let mut err: f64 = 0.0;
        for n in 0..N {
            let scale = tol.atol + tol.rtol * y[n].norm().max(y5[n].norm());
            err = err.max((y5[n] - y4[n]).norm() / scale);
        }
        if err <= 1.0 {
            t += h;
            y = y5;
            if let Some(g) = guard {
                if !g(&y) {
                    return Err(HolonomyError::IntegratorFailure(
                        "trajectory left the safe domain".into(),
                    ));
                }
            }
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if h < 1e-14 {
            return Err(HolonomyError::IntegratorFailure(
                "step size underflow".into(),
            ));
        }
    }
    Err(HolonomyError::IntegratorFailure(format!(
        "exceeded {} steps",
        MAX_STEPS
    )))
}

fn scale_in_place<const N: usize>(v: &mut [Complex64; N], c: f64) {
    for x in v.iter_mut() {
        *x *= c;
    }
}
