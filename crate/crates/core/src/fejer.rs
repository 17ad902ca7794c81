//! Fejer-kernel majorants for the window frequencies.
//!
//! The kernel `K(u) = int_{-1}^{1} (1-|t|) e^{itu} dt = (sin(u/2)/(u/2))^2`
//! is nonnegative and at least 1/3 on `[-1, 1]`, so the window indicator
//! `1_{(h, h+1]}(f) <= 3 K(f - h)` and
//!
//! `Q_h <= 3 pi(x)^{-1} sum_{p <= x} K(f(p+a) - h)`.
//!
//! Each majorant here is evaluated two ways: exactly by swapping the prime
//! sum with the kernel integral, and by quadrature in `t` with
//! `g(n) = exp(i t f(n))` under the integral. Disagreement beyond the
//! documented tolerance is an error, not a warning.
//!
//! The weighted mean values attach the factor `prod_{p|n, p>y} (p-1)/(p-2)`
//! to a unit-disc multiplicative function; they are the right sides of the
//! post-sieve estimates for `Q_h` (threshold `y = 3|a|`) and for `S_h`
//! (threshold 3, sum restricted to `(n, N) = 1`, prefactor `1/phi(N)`).

use num_complex::Complex64;
use serde::Serialize;

use crate::additive::AdditiveFunctionSpec;
use crate::concentration::{concentration_goldbach, concentration_shifted, population_values, Population};
use crate::error::Error;
use crate::quadrature::{fejer_weighted_integral, QuadRule};
use crate::sieve::FactorTable;
use crate::sums::{Kahan, KahanComplex};
use crate::unitdisc::UnitDiscFunction;
use crate::Result;

/// Relative tolerance for kernel-swap vs quadrature agreement. A few hundred
/// Gauss-Legendre nodes per half resolve the integrands here to machine
/// precision; violations indicate either a too-small node count or a bug.
pub const QUADRATURE_CONSISTENCY_TOL: f64 = 1e-7;

/// `K(u) = (sin(u/2)/(u/2))^2`, with `K(0) = 1`.
#[inline]
pub fn fejer_kernel(u: f64) -> f64 {
    let x = 0.5 * u;
    if x == 0.0 {
        1.0
    } else {
        let s = x.sin() / x;
        s * s
    }
}

/// The defining integral of the kernel evaluated by quadrature, used to
/// validate the closed form.
pub fn fejer_kernel_by_quadrature(u: f64, nodes_per_half: usize, rule: QuadRule) -> f64 {
    fejer_weighted_integral(-u, nodes_per_half, rule, |_| Complex64::new(1.0, 0.0)).re
}

/// Evaluation of the Eq.-(1)-style majorant of `Q_h` at a single `h`.
#[derive(Clone, Debug, Serialize)]
pub struct FejerEvaluation {
    pub h: f64,
    pub x: u64,
    pub a: i64,
    pub quadrature_nodes: usize,
    /// Kernel-swap value `3 pi(x)^{-1} sum_p K(f(p+a) - h)`; exact arithmetic
    /// on kernel values.
    pub majorant: f64,
    /// The same quantity by quadrature in `t`.
    pub quadrature_majorant: f64,
    /// Exact `Q_h`.
    pub q_h: f64,
    pub hits: u64,
    pub population: u64,
    pub excluded: u64,
    /// `majorant - q_h`; nonnegative since `3K >= 1` on the window.
    pub slack: f64,
    /// Imaginary residual of the quadrature value, asserted small.
    pub im_residual: f64,
}

fn check_consistency(context: &str, exact: f64, quadrature: f64, im: f64) -> Result<()> {
    let tol = QUADRATURE_CONSISTENCY_TOL * (1.0 + exact.abs());
    if (exact - quadrature).abs() > tol || im.abs() > tol {
        return Err(Error::NumericalInconsistency {
            context: format!("{context}: kernel-swap vs quadrature (im residual {im:.3e})"),
            lhs: exact,
            rhs: quadrature,
            tolerance: tol,
        });
    }
    Ok(())
}

/// Majorant of `Q_h` over primes `p <= x` with shift `a`, both routes.
pub fn fejer_majorant_q(
    spec: &AdditiveFunctionSpec,
    x: u64,
    a: i64,
    h: f64,
    table: &FactorTable,
    nodes_per_half: usize,
) -> Result<FejerEvaluation> {
    if nodes_per_half < 2 {
        return Err(Error::invalid("need at least 2 quadrature nodes per half"));
    }
    let population = Population::ShiftedPrimes { x, a };
    let (values, pi_x, excluded) = population_values(spec, &population, table)?;
    let scale = 3.0 / pi_x as f64;

    let mut kernel_sum = Kahan::new();
    for &v in &values {
        kernel_sum.add(fejer_kernel(v - h));
    }
    let majorant = scale * kernel_sum.value();

    let integral = fejer_weighted_integral(h, nodes_per_half, QuadRule::GaussLegendre, |t| {
        let mut acc = KahanComplex::new();
        for &v in &values {
            acc.add(Complex64::from_polar(1.0, t * v));
        }
        acc.value()
    });
    let quadrature_majorant = scale * integral.re;
    let im_residual = scale * integral.im;
    check_consistency("fejer_majorant_q", majorant, quadrature_majorant, im_residual)?;

    let freq = concentration_shifted(spec, x, a, h, table)?;
    let q_h = freq.value();
    Ok(FejerEvaluation {
        h,
        x,
        a,
        quadrature_nodes: nodes_per_half,
        majorant,
        quadrature_majorant,
        q_h,
        hits: freq.hits,
        population: pi_x,
        excluded,
        slack: majorant - q_h,
        im_residual,
    })
}

/// `prod_{p | n, p > y} (p-1)/(p-2)` for `n = 1..=x`; index 0 unused.
pub(crate) fn rough_prime_weights(x: u64, y: u64, table: &FactorTable) -> Result<Vec<f64>> {
    if y < 3 {
        return Err(Error::invalid(format!(
            "weight threshold y must be >= 3 so p > y keeps (p-1)/(p-2) finite, got {y}"
        )));
    }
    if x > table.limit() {
        return Err(Error::invalid(format!(
            "range end {x} exceeds table limit {}",
            table.limit()
        )));
    }
    let x = x as usize;
    let mut w = vec![1.0f64; x + 1];
    for n in 2..=x {
        let p = table.spf(n as u64);
        let mut m = n as u64;
        while m % p == 0 {
            m /= p;
        }
        let factor = if p > y {
            (p - 1) as f64 / (p - 2) as f64
        } else {
            1.0
        };
        w[n] = w[m as usize] * factor;
    }
    Ok(w)
}

/// `sum_{n <= x} g(n) prod_{p|n, p>y} (p-1)/(p-2)`, optionally restricted to
/// `(n, exclude_q) = 1`.
pub fn weighted_mean_value(
    g: &UnitDiscFunction,
    x: u64,
    y: u64,
    table: &FactorTable,
    exclude_q: Option<u64>,
) -> Result<Complex64> {
    let weights = rough_prime_weights(x, y, table)?;
    let g_vals = g.eval_on_range(x, table)?;
    let mut acc = KahanComplex::new();
    for n in 1..=x as usize {
        if let Some(q) = exclude_q {
            if n as u64 % q == 0 {
                continue;
            }
        }
        acc.add(weights[n] * g_vals[n]);
    }
    Ok(acc.value())
}

/// Weighted majorant report shared by the `Q_h` and `S_h` estimates.
#[derive(Clone, Debug, Serialize)]
pub struct WeightedMajorantReport {
    /// `x` for the shifted-prime form, `N` for the Goldbach form.
    pub argument: u64,
    pub h: f64,
    pub quadrature_nodes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exclude_q: Option<u64>,
    /// Weight threshold: products run over `p | n`, `p > y`.
    pub y: u64,
    /// Normalised real part of the quadrature integral.
    pub integral_term: f64,
    /// The same quantity with the kernel integral done exactly.
    pub kernel_swap_term: f64,
    /// The unspecified-constant error term, coefficient 1, reported apart.
    pub tail_term: f64,
    /// `integral_term + tail_term`.
    pub value: f64,
    /// The exact frequency the estimate addresses (`Q_h` or `S_h`).
    pub frequency: f64,
    pub im_residual: f64,
}

/// Right side of the weighted `Q_h` estimate:
/// `x^{-1} int (1-|t|) e^{-ith} sum_{n<=x} g(n) prod_{p|n, p>3|a|} ((p-1)/(p-2)) dt
///  + (log x)^{-1/12}`.
pub fn majorant_weighted_q(
    spec: &AdditiveFunctionSpec,
    x: u64,
    a: i64,
    h: f64,
    table: &FactorTable,
    nodes_per_half: usize,
    exclude_q: Option<u64>,
) -> Result<WeightedMajorantReport> {
    if x < 2 {
        return Err(Error::invalid("need x >= 2"));
    }
    if a == 0 {
        return Err(Error::invalid("shift a must be nonzero"));
    }
    let y = 3 * a.unsigned_abs();
    let weights = rough_prime_weights(x, y, table)?;
    let f_vals = spec.eval_on_range(x, table)?;
    let keep = |n: usize| exclude_q.is_none_or(|q| n as u64 % q != 0);

    let integral = fejer_weighted_integral(h, nodes_per_half, QuadRule::GaussLegendre, |t| {
        let mut acc = KahanComplex::new();
        for n in 1..=x as usize {
            if keep(n) {
                acc.add(weights[n] * Complex64::from_polar(1.0, t * f_vals[n]));
            }
        }
        acc.value()
    });
    let scale = 1.0 / x as f64;
    let integral_term = scale * integral.re;
    let im_residual = scale * integral.im;

    let mut swap = Kahan::new();
    for n in 1..=x as usize {
        if keep(n) {
            swap.add(weights[n] * fejer_kernel(f_vals[n] - h));
        }
    }
    let kernel_swap_term = scale * swap.value();
    check_consistency("majorant_weighted_q", kernel_swap_term, integral_term, im_residual)?;

    let tail_term = (x as f64).ln().powf(-1.0 / 12.0);
    let frequency = concentration_shifted(spec, x, a, h, table)?.value();
    Ok(WeightedMajorantReport {
        argument: x,
        h,
        quadrature_nodes: nodes_per_half,
        exclude_q,
        y,
        integral_term,
        kernel_swap_term,
        tail_term,
        value: integral_term + tail_term,
        frequency,
        im_residual,
    })
}

/// Report for the post-sieve estimate with the `(n, P) = 1` condition:
/// `x^{-1} log w int (1-|t|) e^{-ith} sum_{n<=x, (n,P)=1} g(n+a) dt
///  + (log x)^{-1} (log log x)^2`.
///
/// `w` is an explicit parameter (the source leaves its exponent over
/// `log x` open); `P` is the product of the primes in `(3|a|, w]`.
#[derive(Clone, Debug, Serialize)]
pub struct SievedMajorantReport {
    pub x: u64,
    pub a: i64,
    pub w: u64,
    pub h: f64,
    pub quadrature_nodes: usize,
    pub log_w_factor: f64,
    pub integral_term: f64,
    pub kernel_swap_term: f64,
    pub tail_term: f64,
    pub value: f64,
    pub q_h: f64,
    pub im_residual: f64,
    pub excluded: u64,
}

/// Evaluates the sieved majorant above at one `h`.
pub fn majorant_sieved_q(
    spec: &AdditiveFunctionSpec,
    x: u64,
    a: i64,
    w: u64,
    h: f64,
    table: &FactorTable,
    nodes_per_half: usize,
) -> Result<SievedMajorantReport> {
    if x < 2 {
        return Err(Error::invalid("need x >= 2"));
    }
    if a == 0 {
        return Err(Error::invalid("shift a must be nonzero"));
    }
    let abs3a = 3 * a.unsigned_abs();
    if w < abs3a {
        return Err(Error::invalid(format!("need w >= 3|a| = {abs3a}, got {w}")));
    }
    let reach = x
        .checked_add_signed(a.max(0))
        .ok_or_else(|| Error::invalid("x + a overflows"))?;
    let f_vals = spec.eval_on_range(reach, table)?;

    let p_primes = if abs3a >= w {
        Vec::new()
    } else {
        table.primes_in(abs3a + 1, w)?
    };
    let mut coprime_p = vec![true; x as usize + 1];
    for &p in &p_primes {
        let mut m = p;
        while m <= x {
            coprime_p[m as usize] = false;
            m += p;
        }
    }
    let shifted = |n: u64| n.checked_add_signed(a).filter(|&s| s >= 1);
    let mut excluded = 0u64;
    let mut values = Vec::new();
    for n in 1..=x {
        if coprime_p[n as usize] {
            match shifted(n) {
                Some(s) => values.push(f_vals[s as usize]),
                None => excluded += 1,
            }
        }
    }

    let log_w_factor = (w as f64).ln();
    let scale = log_w_factor / x as f64;
    let mut swap = Kahan::new();
    for &v in &values {
        swap.add(fejer_kernel(v - h));
    }
    let kernel_swap_term = scale * swap.value();

    let integral = fejer_weighted_integral(h, nodes_per_half, QuadRule::GaussLegendre, |t| {
        let mut acc = KahanComplex::new();
        for &v in &values {
            acc.add(Complex64::from_polar(1.0, t * v));
        }
        acc.value()
    });
    let integral_term = scale * integral.re;
    let im_residual = scale * integral.im;
    check_consistency("majorant_sieved_q", kernel_swap_term, integral_term, im_residual)?;

    let lnx = (x as f64).ln();
    let tail_term = lnx.recip() * lnx.ln().max(0.0).powi(2);
    let frequency = concentration_shifted(spec, x, a, h, table)?.value();
    Ok(SievedMajorantReport {
        x,
        a,
        w,
        h,
        quadrature_nodes: nodes_per_half,
        log_w_factor,
        integral_term,
        kernel_swap_term,
        tail_term,
        value: integral_term + tail_term,
        q_h: frequency,
        im_residual,
        excluded,
    })
}

/// Right side of the weighted `S_h` estimate:
/// `phi(N)^{-1} int (1-|t|) e^{-ith} sum_{n<=N, (n,N)=1} g(n)
///  prod_{p|n, p>3} ((p-1)/(p-2)) dt + (log N)^{-1/10}`.
pub fn majorant_goldbach(
    spec: &AdditiveFunctionSpec,
    n_param: u64,
    h: f64,
    table: &FactorTable,
    nodes_per_half: usize,
    exclude_q: Option<u64>,
) -> Result<WeightedMajorantReport> {
    if n_param < 3 {
        return Err(Error::invalid("need N >= 3"));
    }
    let y = 3u64;
    let weights = rough_prime_weights(n_param, y, table)?;
    let f_vals = spec.eval_on_range(n_param, table)?;

    // (n, N) = 1 mask by marking multiples of N's prime factors.
    let mut coprime = vec![true; n_param as usize + 1];
    for p in table.factorize(n_param)?.distinct_primes() {
        let mut m = p;
        while m <= n_param {
            coprime[m as usize] = false;
            m += p;
        }
    }
    let keep = |n: usize| coprime[n] && exclude_q.is_none_or(|q| n as u64 % q != 0);

    let integral = fejer_weighted_integral(h, nodes_per_half, QuadRule::GaussLegendre, |t| {
        let mut acc = KahanComplex::new();
        for n in 1..=n_param as usize {
            if keep(n) {
                acc.add(weights[n] * Complex64::from_polar(1.0, t * f_vals[n]));
            }
        }
        acc.value()
    });
    let scale = 1.0 / table.euler_phi(n_param)? as f64;
    let integral_term = scale * integral.re;
    let im_residual = scale * integral.im;

    let mut swap = Kahan::new();
    for n in 1..=n_param as usize {
        if keep(n) {
            swap.add(weights[n] * fejer_kernel(f_vals[n] - h));
        }
    }
    let kernel_swap_term = scale * swap.value();
    check_consistency("majorant_goldbach", kernel_swap_term, integral_term, im_residual)?;

    let tail_term = (n_param as f64).ln().powf(-1.0 / 10.0);
    let frequency = concentration_goldbach(spec, n_param, h, table)?.value();
    Ok(WeightedMajorantReport {
        argument: n_param,
        h,
        quadrature_nodes: nodes_per_half,
        exclude_q,
        y,
        integral_term,
        kernel_swap_term,
        tail_term,
        value: integral_term + tail_term,
        frequency,
        im_residual,
    })
}
