//! The dispersion functionals behind the concentration bounds.
//!
//! `W(x) = 4 + min_lambda ( lambda^2 + sum_{p <= x} (1/p) min(1, |f(p) - lambda log p|)^2 )`
//!
//! `Y(N)` is the same with the prime sum restricted to `p < N`, `(p, N) = 1`;
//! `E(x) = 4 + sum_{p <= x, f(p) != 0} 1/p` needs no minimisation.
//!
//! The minimiser search is confined to `|lambda| <= (log x)^2` (resp.
//! `(log N)^2`). The objective is continuous and piecewise smooth but not
//! convex — the `min(1, .)` clipping creates plateaus — so the global search
//! is a coarse grid of step `(log x)^2 / 10^4` followed by golden-section
//! refinement of the best bracket down to `1e-6` in `lambda`. The reported
//! value never exceeds any probed objective.

use rayon::prelude::*;
use serde::Serialize;

use crate::additive::AdditiveFunctionSpec;
use crate::concentration::{sup_concentration, Population};
use crate::error::Error;
use crate::sieve::FactorTable;
use crate::sums::Kahan;
use crate::Result;

/// Half-width of the coarse grid in units of the search bound.
const GRID_STEPS_PER_SIDE: usize = 10_000;
/// Golden-section bracket tolerance in `lambda`.
const LAMBDA_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Functional {
    W,
    Y,
    E,
}

#[derive(Clone, Debug, Serialize)]
pub struct DispersionResult {
    pub functional: Functional,
    pub argument: u64,
    /// Minimiser over `|lambda| <= (log argument)^2`; absent for `E`.
    pub lambda_star: Option<f64>,
    /// `4 +` the minimised (or summed) quantity; always `>= 4`.
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective_samples: Option<Vec<(f64, f64)>>,
}

/// Per-prime data for objective evaluation: `(1/p, f(p), log p)`.
pub struct ObjectiveData {
    inv_p: Vec<f64>,
    f_p: Vec<f64>,
    log_p: Vec<f64>,
}

impl ObjectiveData {
    fn from_primes(spec: &AdditiveFunctionSpec, primes: &[u64]) -> Result<Self> {
        let mut inv_p = Vec::with_capacity(primes.len());
        let mut f_p = Vec::with_capacity(primes.len());
        let mut log_p = Vec::with_capacity(primes.len());
        for &p in primes {
            inv_p.push(1.0 / p as f64);
            f_p.push(spec.prime_value(p)?);
            log_p.push((p as f64).ln());
        }
        Ok(Self { inv_p, f_p, log_p })
    }

    /// `lambda^2 + sum (1/p) min(1, |f(p) - lambda log p|)^2`.
    pub fn objective(&self, lambda: f64) -> f64 {
        let mut acc = Kahan::new();
        for i in 0..self.inv_p.len() {
            let d = self.f_p[i] - lambda * self.log_p[i];
            let clipped = d.abs().min(1.0);
            acc.add(self.inv_p[i] * clipped * clipped);
        }
        lambda * lambda + acc.value()
    }
}

/// The inner `W`-objective at one `lambda` (without the `+4`).
pub fn objective_w(
    spec: &AdditiveFunctionSpec,
    x: u64,
    lambda: f64,
    table: &FactorTable,
) -> Result<f64> {
    if x < 2 {
        return Err(Error::invalid("need x >= 2"));
    }
    let primes = table.primes_upto(x)?;
    Ok(ObjectiveData::from_primes(spec, &primes)?.objective(lambda))
}

struct Minimum {
    lambda: f64,
    objective: f64,
}

/// Coarse grid + golden-section global search over `[-bound, bound]`.
fn minimize(data: &ObjectiveData, bound: f64, sample_stride: Option<usize>) -> (Minimum, Option<Vec<(f64, f64)>>) {
    let n = GRID_STEPS_PER_SIDE as i64;
    let step = bound / GRID_STEPS_PER_SIDE as f64;
    // Grid centered so lambda = 0 is hit exactly.
    let values: Vec<f64> = (-n..=n)
        .into_par_iter()
        .map(|i| data.objective(i as f64 * step))
        .collect();
    let mut best_idx = 0usize;
    for (i, &v) in values.iter().enumerate() {
        if v < values[best_idx] {
            best_idx = i;
        }
    }
    let grid_lambda = (best_idx as i64 - n) as f64 * step;
    let mut best = Minimum {
        lambda: grid_lambda,
        objective: values[best_idx],
    };

    // Golden-section refinement inside the winning bracket.
    let resp = 2.0 - (1.0 + 5.0f64.sqrt()) / 2.0;
    let mut a = (grid_lambda - step).max(-bound);
    let mut b = (grid_lambda + step).min(bound);
    let mut x1 = a + resp * (b - a);
    let mut x2 = b - resp * (b - a);
    let mut f1 = data.objective(x1);
    let mut f2 = data.objective(x2);
    while b - a > LAMBDA_TOL {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + resp * (b - a);
            f1 = data.objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - resp * (b - a);
            f2 = data.objective(x2);
        }
    }
    for (lambda, objective) in [(x1, f1), (x2, f2)] {
        if objective < best.objective {
            best = Minimum { lambda, objective };
        }
    }

    let samples = sample_stride.map(|stride| {
        values
            .iter()
            .enumerate()
            .step_by(stride.max(1))
            .map(|(i, &v)| ((i as i64 - n) as f64 * step, v))
            .collect()
    });
    (best, samples)
}

fn dispersion_minimized(
    functional: Functional,
    argument: u64,
    data: &ObjectiveData,
    sample_stride: Option<usize>,
) -> DispersionResult {
    let bound = (argument as f64).ln().powi(2);
    let (best, samples) = minimize(data, bound, sample_stride);
    DispersionResult {
        functional,
        argument,
        lambda_star: Some(best.lambda),
        value: 4.0 + best.objective,
        objective_samples: samples,
    }
}

/// `W(x)`, minimising over `|lambda| <= (log x)^2`.
pub fn dispersion_w(
    spec: &AdditiveFunctionSpec,
    x: u64,
    table: &FactorTable,
) -> Result<DispersionResult> {
    dispersion_w_sampled(spec, x, table, None)
}

pub fn dispersion_w_sampled(
    spec: &AdditiveFunctionSpec,
    x: u64,
    table: &FactorTable,
    sample_stride: Option<usize>,
) -> Result<DispersionResult> {
    if x < 2 {
        return Err(Error::invalid("need x >= 2"));
    }
    let primes = table.primes_upto(x)?;
    let data = ObjectiveData::from_primes(spec, &primes)?;
    Ok(dispersion_minimized(Functional::W, x, &data, sample_stride))
}

/// `Y(N)`: primes `p < N` with `(p, N) = 1`, bound `(log N)^2`.
pub fn dispersion_y(
    spec: &AdditiveFunctionSpec,
    n_param: u64,
    table: &FactorTable,
) -> Result<DispersionResult> {
    dispersion_y_sampled(spec, n_param, table, None)
}

pub fn dispersion_y_sampled(
    spec: &AdditiveFunctionSpec,
    n_param: u64,
    table: &FactorTable,
    sample_stride: Option<usize>,
) -> Result<DispersionResult> {
    if n_param < 3 {
        return Err(Error::invalid("need N >= 3"));
    }
    let primes: Vec<u64> = table
        .primes_upto(n_param - 1)?
        .into_iter()
        .filter(|&p| n_param % p != 0)
        .collect();
    let data = ObjectiveData::from_primes(spec, &primes)?;
    Ok(dispersion_minimized(Functional::Y, n_param, &data, sample_stride))
}

/// `E(x) = 4 + sum_{p <= x, f(p) != 0} 1/p`.
pub fn dispersion_e(
    spec: &AdditiveFunctionSpec,
    x: u64,
    table: &FactorTable,
) -> Result<DispersionResult> {
    if x < 2 {
        return Err(Error::invalid("need x >= 2"));
    }
    let mut acc = Kahan::new();
    for p in table.primes_upto(x)? {
        if spec.prime_value_is_nonzero(p)? {
            acc.add(1.0 / p as f64);
        }
    }
    Ok(DispersionResult {
        functional: Functional::E,
        argument: x,
        lambda_star: None,
        value: 4.0 + acc.value(),
        objective_samples: None,
    })
}

/// Empirical Theorem-1/2 constant: `sup_h` frequency times the square root
/// of the matching dispersion functional.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremRatioReport {
    pub spec: String,
    pub population: Population,
    pub x_or_n: u64,
    /// The shift `a` is recorded with every ratio; no uniformity in `a` is
    /// assumed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<i64>,
    pub sup_concentration: f64,
    pub h_star: Option<f64>,
    pub dispersion_functional: Functional,
    pub dispersion_value: f64,
    pub lambda_star: Option<f64>,
    /// `sup * sqrt(dispersion_value)`; an observation, not an asserted bound.
    pub ratio: f64,
}

pub fn theorem_ratio(
    spec: &AdditiveFunctionSpec,
    population: &Population,
    table: &FactorTable,
) -> Result<TheoremRatioReport> {
    let conc = sup_concentration(spec, population, table)?;
    let (dispersion, shift) = match *population {
        Population::Integers { x } => (dispersion_w(spec, x, table)?, None),
        Population::ShiftedPrimes { x, a } => (dispersion_w(spec, x, table)?, Some(a)),
        Population::Goldbach { n } => (dispersion_y(spec, n, table)?, None),
    };
    Ok(TheoremRatioReport {
        spec: spec.describe(),
        population: *population,
        x_or_n: population.argument(),
        shift,
        sup_concentration: conc.sup_value,
        h_star: conc.h_star,
        dispersion_functional: dispersion.functional,
        dispersion_value: dispersion.value,
        lambda_star: dispersion.lambda_star,
        ratio: conc.sup_value * dispersion.value.sqrt(),
    })
}
