//! Window frequencies of an additive function over three populations and
//! their exact suprema.
//!
//! `C_h` is the frequency among `n <= x` with `h < f(n) <= h+1`; `Q_h` the
//! frequency among primes `p <= x` of `h < f(p+a) <= h+1`; `S_h` the
//! frequency among primes `p < N` of `h < f(N-p) <= h+1`. The window is
//! half-open `(h, h+1]` throughout.
//!
//! The supremum over `h` is computed exactly: sort the value multiset and
//! slide a two-pointer window of width 1; the supremum is attained by a
//! window `(v-1, v]` anchored at some attained value `v`.

use serde::Serialize;

use crate::additive::AdditiveFunctionSpec;
use crate::error::Error;
use crate::sieve::FactorTable;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Population {
    Integers { x: u64 },
    ShiftedPrimes { x: u64, a: i64 },
    Goldbach { n: u64 },
}

impl Population {
    pub fn argument(&self) -> u64 {
        match *self {
            Population::Integers { x } => x,
            Population::ShiftedPrimes { x, .. } => x,
            Population::Goldbach { n } => n,
        }
    }
}

/// Exact window count: `hits / population`, with members whose value is
/// undefined (shifted primes with `p + a < 1`) counted in `excluded`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct WindowFrequency {
    pub hits: u64,
    pub population: u64,
    pub excluded: u64,
}

impl WindowFrequency {
    pub fn value(&self) -> f64 {
        self.hits as f64 / self.population as f64
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConcentrationReport {
    pub population: Population,
    pub x_or_n: u64,
    pub sample_size: u64,
    /// Population members with no attached value (only shifted primes with
    /// `p + a < 1`); they stay in the denominator.
    pub excluded: u64,
    /// Left edge of a maximising window `(h_star, h_star + 1]`; absent when
    /// no member carries a value.
    pub h_star: Option<f64>,
    pub sup_value: f64,
    /// Optional per-h scan `(h, frequency)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<(f64, f64)>>,
}

/// Values of `f` over the population, with the denominator and exclusion
/// count. The denominator always counts every population member.
pub fn population_values(
    spec: &AdditiveFunctionSpec,
    population: &Population,
    table: &FactorTable,
) -> Result<(Vec<f64>, u64, u64)> {
    match *population {
        Population::Integers { x } => {
            if x < 1 {
                return Err(Error::invalid("integer population needs x >= 1"));
            }
            let vals = spec.eval_on_range(x, table)?;
            Ok((vals[1..].to_vec(), x, 0))
        }
        Population::ShiftedPrimes { x, a } => {
            if x < 2 {
                return Err(Error::invalid("shifted-prime population needs x >= 2"));
            }
            if a == 0 {
                return Err(Error::invalid("shift a must be nonzero"));
            }
            let reach = x
                .checked_add_signed(a.max(0))
                .ok_or_else(|| Error::invalid("x + a overflows"))?;
            if reach > table.limit() {
                return Err(Error::invalid(format!(
                    "need table limit >= {reach} for x={x}, a={a}"
                )));
            }
            let primes = table.primes_upto(x)?;
            let population_size = primes.len() as u64;
            if population_size == 0 {
                return Err(Error::EmptyPopulation(format!("no primes <= {x}")));
            }
            let f = spec.eval_on_range(reach, table)?;
            let mut values = Vec::with_capacity(primes.len());
            let mut excluded = 0u64;
            for &p in &primes {
                match p.checked_add_signed(a).filter(|&s| s >= 1) {
                    Some(shifted) => values.push(f[shifted as usize]),
                    None => excluded += 1,
                }
            }
            Ok((values, population_size, excluded))
        }
        Population::Goldbach { n } => {
            if n < 3 {
                return Err(Error::invalid("Goldbach population needs N >= 3"));
            }
            if n > table.limit() {
                return Err(Error::invalid(format!(
                    "need table limit >= {n} for N={n}"
                )));
            }
            let primes = table.primes_upto(n - 1)?;
            let population_size = primes.len() as u64;
            if population_size == 0 {
                return Err(Error::EmptyPopulation(format!("no primes < {n}")));
            }
            let f = spec.eval_on_range(n, table)?;
            let values: Vec<f64> = primes.iter().map(|&p| f[(n - p) as usize]).collect();
            Ok((values, population_size, 0))
        }
    }
}

fn window_count(values: &[f64], h: f64) -> u64 {
    values.iter().filter(|&&v| v > h && v <= h + 1.0).count() as u64
}

/// `C_h`: frequency among `n <= x` of `h < f(n) <= h+1`.
pub fn concentration_integers(
    spec: &AdditiveFunctionSpec,
    x: u64,
    h: f64,
    table: &FactorTable,
) -> Result<WindowFrequency> {
    let (values, population, excluded) =
        population_values(spec, &Population::Integers { x }, table)?;
    Ok(WindowFrequency {
        hits: window_count(&values, h),
        population,
        excluded,
    })
}

/// `Q_h`: frequency among primes `p <= x` of `h < f(p+a) <= h+1`.
pub fn concentration_shifted(
    spec: &AdditiveFunctionSpec,
    x: u64,
    a: i64,
    h: f64,
    table: &FactorTable,
) -> Result<WindowFrequency> {
    let (values, population, excluded) =
        population_values(spec, &Population::ShiftedPrimes { x, a }, table)?;
    Ok(WindowFrequency {
        hits: window_count(&values, h),
        population,
        excluded,
    })
}

/// `S_h`: frequency among primes `p < N` of `h < f(N-p) <= h+1`.
pub fn concentration_goldbach(
    spec: &AdditiveFunctionSpec,
    n: u64,
    h: f64,
    table: &FactorTable,
) -> Result<WindowFrequency> {
    let (values, population, excluded) =
        population_values(spec, &Population::Goldbach { n }, table)?;
    Ok(WindowFrequency {
        hits: window_count(&values, h),
        population,
        excluded,
    })
}

/// Exact supremum over all real `h` of the unit-window frequency.
pub fn sup_concentration(
    spec: &AdditiveFunctionSpec,
    population: &Population,
    table: &FactorTable,
) -> Result<ConcentrationReport> {
    let (mut values, sample_size, excluded) = population_values(spec, population, table)?;
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut best_count = 0u64;
    let mut best_anchor = None;
    let mut left = 0usize;
    for right in 0..values.len() {
        // Window (v - 1, v] anchored at v = values[right].
        while values[left] <= values[right] - 1.0 {
            left += 1;
        }
        let count = (right - left + 1) as u64;
        if count > best_count {
            best_count = count;
            best_anchor = Some(values[right]);
        }
    }

    Ok(ConcentrationReport {
        population: *population,
        x_or_n: population.argument(),
        sample_size,
        excluded,
        h_star: best_anchor.map(|v| v - 1.0),
        sup_value: best_count as f64 / sample_size as f64,
        samples: None,
    })
}

/// Per-h frequencies over an explicit list of window offsets, sharing one
/// population evaluation.
pub fn concentration_scan(
    spec: &AdditiveFunctionSpec,
    population: &Population,
    h_values: &[f64],
    table: &FactorTable,
) -> Result<Vec<(f64, f64)>> {
    let (mut values, sample_size, _) = population_values(spec, population, table)?;
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(h_values
        .iter()
        .map(|&h| {
            let below = values.partition_point(|&v| v <= h);
            let upto = values.partition_point(|&v| v <= h + 1.0);
            (h, (upto - below) as f64 / sample_size as f64)
        })
        .collect())
}
