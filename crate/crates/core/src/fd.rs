//! Fourth-order finite differences for initial data given only as a function.

/// Second derivative of `f` at `x` to fourth order in `step`.
///
/// Uses the five-point central formula when `x +- 2 step` stays inside
/// `[lo, hi]`, and the six-point one-sided formula otherwise.
pub fn second_derivative<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    x: f64,
    step: f64,
    lo: f64,
    hi: f64,
) -> f64 {
    const CENTRAL: [f64; 5] = [
        -1.0 / 12.0,
        16.0 / 12.0,
        -30.0 / 12.0,
        16.0 / 12.0,
        -1.0 / 12.0,
    ];
    const ONE_SIDED: [f64; 6] = [
        15.0 / 4.0,
        -77.0 / 6.0,
        107.0 / 6.0,
        -13.0,
        61.0 / 12.0,
        -5.0 / 6.0,
    ];
    let s2 = step * step;
    // small slack so points that sit on the boundary up to roundoff still use
    // the central formula when it fits
    let slack = 1e-9 * step;
    if x - 2.0 * step >= lo - slack && x + 2.0 * step <= hi + slack {
        CENTRAL
            .iter()
            .enumerate()
            .map(|(k, w)| w * f(x + (k as f64 - 2.0) * step))
            .sum::<f64>()
            / s2
    } else if x - 2.0 * step < lo - slack {
        ONE_SIDED
            .iter()
            .enumerate()
            .map(|(k, w)| w * f(x + k as f64 * step))
            .sum::<f64>()
            / s2
    } else {
        ONE_SIDED
            .iter()
            .enumerate()
            .map(|(k, w)| w * f(x - k as f64 * step))
            .sum::<f64>()
            / s2
    }
}

/// Central fourth-order first derivative, used only by tests and diagnostics.
pub fn first_derivative<F: Fn(f64) -> f64 + ?Sized>(f: &F, x: f64, step: f64) -> f64 {
    (f(x - 2.0 * step) - 8.0 * f(x - step) + 8.0 * f(x + step) - f(x + 2.0 * step)) / (12.0 * step)
}
