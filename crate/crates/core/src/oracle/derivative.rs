//! Central finite differences, fourth-order accurate, Richardson-extrapolated
//! over steps h and h/2 (error O(h⁶) for smooth f).

use crate::error::{NgError, Result};

// (offset, weight) pairs and the power of h in the denominator.
fn stencil(order: u32) -> (&'static [(i32, f64)], f64) {
    const D1: [(i32, f64); 4] = [(-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0)];
    const D2: [(i32, f64); 5] = [(-2, -1.0), (-1, 16.0), (0, -30.0), (1, 16.0), (2, -1.0)];
    const D3: [(i32, f64); 6] = [(-3, 1.0), (-2, -8.0), (-1, 13.0), (1, -13.0), (2, 8.0), (3, -1.0)];
    const D4: [(i32, f64); 7] = [
        (-3, -1.0),
        (-2, 12.0),
        (-1, -39.0),
        (0, 56.0),
        (1, -39.0),
        (2, 12.0),
        (3, -1.0),
    ];
    match order {
        1 => (&D1, 12.0),
        2 => (&D2, 12.0),
        3 => (&D3, 8.0),
        _ => (&D4, 6.0),
    }
}

fn central<F: Fn(f64) -> f64>(f: &F, x: f64, order: u32, h: f64) -> f64 {
    let (weights, denom) = stencil(order);
    let sum: f64 = weights.iter().map(|&(o, w)| w * f(x + o as f64 * h)).sum();
    sum / (denom * h.powi(order as i32))
}

/// d^order f / dx^order at x, order in 1..=4.
pub fn derivative<F: Fn(f64) -> f64>(f: F, x: f64, order: u32, step: f64) -> Result<f64> {
    if !(1..=4).contains(&order) {
        return Err(NgError::InvalidArgument(format!(
            "derivative order must be 1..=4, got {order}"
        )));
    }
    let floor = 1e-7 * x.abs().max(1.0);
    if !(step.is_finite() && step > floor) {
        return Err(NgError::StepUnderflow(step));
    }
    let coarse = central(&f, x, order, step);
    let fine = central(&f, x, order, 0.5 * step);
    Ok((16.0 * fine - coarse) / 15.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square() {
        let d = derivative(|x| x * x, 3.0, 1, 1e-2).unwrap();
        assert!((d - 6.0).abs() < 1e-8);
    }

    #[test]
    fn cubic_root_basis_identity() {
        // f = e^{-x/2} cos(√3 x/2) satisfies f''' = f (k = 1)
        let s = 3f64.sqrt() / 2.0;
        let f = |x: f64| (-x / 2.0).exp() * (s * x).cos();
        let d = derivative(f, 1.0, 3, 1e-2).unwrap();
        assert!((d - f(1.0)).abs() < 1e-5);
    }

    #[test]
    fn quartic_basis_identity() {
        // f = sinh(ax) cos(ax), a = k/√2: f'''' = −k⁴ f
        let k = 1.3f64;
        let a = k / 2f64.sqrt();
        let f = |x: f64| (a * x).sinh() * (a * x).cos();
        let d = derivative(f, 0.7, 4, 2e-2).unwrap();
        assert!((d + k.powi(4) * f(0.7)).abs() < 1e-5);
    }

    #[test]
    fn all_orders_on_exp() {
        for (order, h) in [(1, 1e-2), (2, 1e-2), (3, 5e-2), (4, 1e-1)] {
            let d = derivative(f64::exp, 0.5, order, h).unwrap();
            assert!((d - 0.5f64.exp()).abs() < 1e-7, "order {order}: {d}");
        }
    }

    #[test]
    fn richardson_error_shrinks_with_step() {
        // truncation-dominated range; by h = 1e-2 the error is at round-off
        let err = |h: f64| (derivative(f64::exp, 0.0, 1, h).unwrap() - 1.0).abs();
        assert!(err(0.05) < err(0.1));
        assert!(err(0.1) < err(0.2));
        assert!(err(1e-2) < 1e-13);
    }

    #[test]
    fn richardson_beats_plain_stencil() {
        let plain = (central(&f64::exp, 0.0, 1, 1e-2) - 1.0).abs();
        let rich = (derivative(f64::exp, 0.0, 1, 1e-2).unwrap() - 1.0).abs();
        assert!(rich < plain);
    }

    #[test]
    fn step_checks() {
        assert_eq!(derivative(f64::exp, 0.0, 1, 1e-12), Err(NgError::StepUnderflow(1e-12)));
        assert!(derivative(f64::exp, 0.0, 1, f64::NAN).is_err());
        assert!(derivative(f64::exp, 0.0, 5, 1e-2).is_err());
        assert!(derivative(f64::exp, 0.0, 0, 1e-2).is_err());
    }
}
