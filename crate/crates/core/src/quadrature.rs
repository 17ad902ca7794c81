//! Quadrature over the triangular Fejer weight.
//!
//! Integrals of the form `int_{-1}^{1} (1-|t|) e^{-ith} S(t) dt` are split at
//! `t = 0` (the kink of `1-|t|`) and each half is handled by a single
//! Gauss-Legendre rule (default) or composite Simpson. Node evaluations are
//! independent and run in parallel; the weighted reduction is sequential in
//! node order, so results do not depend on the thread count.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::sums::KahanComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadRule {
    GaussLegendre,
    Simpson,
}

/// Nodes and weights of the n-point Gauss-Legendre rule on `[-1, 1]`,
/// found by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, z);
            let dz = p / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, z);
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1).
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Points and weights for one rule instance on `[a, b]` with roughly
/// `nodes` evaluations.
fn rule_points(rule: QuadRule, nodes: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    match rule {
        QuadRule::GaussLegendre => {
            let (xs, ws) = gauss_legendre(nodes.max(1));
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            xs.iter()
                .zip(&ws)
                .map(|(&x, &w)| (mid + half * x, half * w))
                .collect()
        }
        QuadRule::Simpson => {
            // `nodes` subintervals, rounded up to even.
            let m = (nodes.max(2) + 1) & !1;
            let h = (b - a) / m as f64;
            (0..=m)
                .map(|i| {
                    let coeff = if i == 0 || i == m {
                        1.0
                    } else if i % 2 == 1 {
                        4.0
                    } else {
                        2.0
                    };
                    (a + h * i as f64, coeff * h / 3.0)
                })
                .collect()
        }
    }
}

/// `int_{-1}^{1} (1 - |t|) e^{-ith} S(t) dt`, split at the kink.
///
/// `nodes_per_half` is the evaluation count on each half-interval.
pub fn fejer_weighted_integral<S>(
    h: f64,
    nodes_per_half: usize,
    rule: QuadRule,
    s: S,
) -> Complex64
where
    S: Fn(f64) -> Complex64 + Sync,
{
    let mut points = rule_points(rule, nodes_per_half, -1.0, 0.0);
    points.extend(rule_points(rule, nodes_per_half, 0.0, 1.0));
    let terms: Vec<Complex64> = points
        .par_iter()
        .map(|&(t, w)| {
            let weight = 1.0 - t.abs();
            let phase = Complex64::from_polar(1.0, -t * h);
            w * weight * phase * s(t)
        })
        .collect();
    let mut acc = KahanComplex::new();
    for v in terms {
        acc.add(v);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // n-point rule is exact for degree 2n-1.
        let (xs, ws) = gauss_legendre(5);
        for k in [0u32, 2, 4, 6, 8] {
            let got: f64 = xs.iter().zip(&ws).map(|(&x, &w)| w * x.powi(k as i32)).sum();
            let exact = 2.0 / (k as f64 + 1.0);
            assert!((got - exact).abs() < 1e-13, "degree {k}: {got} vs {exact}");
        }
        let odd: f64 = xs.iter().zip(&ws).map(|(&x, &w)| w * x.powi(3)).sum();
        assert!(odd.abs() < 1e-14);
    }

    #[test]
    fn gauss_legendre_weights_sum_to_two() {
        for n in [1usize, 2, 3, 10, 64, 512] {
            let (_, ws) = gauss_legendre(n);
            let total: f64 = ws.iter().sum();
            assert!((total - 2.0).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn triangular_weight_has_unit_mass() {
        for rule in [QuadRule::GaussLegendre, QuadRule::Simpson] {
            let v = fejer_weighted_integral(0.0, 128, rule, |_| Complex64::new(1.0, 0.0));
            assert!((v.re - 1.0).abs() < 1e-10, "{rule:?}: {}", v.re);
            assert!(v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn oscillatory_phase_matches_closed_form() {
        // int (1-|t|) e^{-ith} e^{itu} dt = (sin((u-h)/2) / ((u-h)/2))^2.
        let u = 3.7f64;
        let h = 1.2;
        let arg = (u - h) / 2.0;
        let exact = (arg.sin() / arg).powi(2);
        let v = fejer_weighted_integral(h, 256, QuadRule::GaussLegendre, |t| {
            Complex64::from_polar(1.0, t * u)
        });
        assert!((v.re - exact).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn simpson_error_decays_fourth_order() {
        // Smooth integrand with a known value; halving the step should cut
        // the error by about 16.
        let u = 9.0f64;
        let exact = {
            let arg = u / 2.0;
            (arg.sin() / arg).powi(2)
        };
        let err = |n: usize| {
            let v = fejer_weighted_integral(0.0, n, QuadRule::Simpson, |t| {
                Complex64::from_polar(1.0, t * u)
            });
            (v.re - exact).abs()
        };
        let e1 = err(16);
        let e2 = err(32);
        let ratio = e1 / e2;
        assert!(
            (8.0..40.0).contains(&ratio),
            "expected ~16x decay, got {ratio} ({e1} -> {e2})"
        );
    }
}
