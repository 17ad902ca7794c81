//! The three-series criterion and empirical limit distributions of `f(N-p)`.
//!
//! The frequencies `pi(N-1)^{-1} #{p < N : f(N-p) <= z}` possess a limiting
//! distribution as `N` grows exactly when the three series
//!
//! `sum_{|f(p)|>1} 1/p`, `sum_{|f(p)|<=1} f(p)/p`, `sum_{|f(p)|<=1} f(p)^2/p`
//!
//! converge. Convergence of a series is not decidable from partial sums, so
//! every verdict here is labelled evidence, with the thresholds recorded in
//! the report: the last-decade increment of each partial sum is compared
//! against fixed cut-offs. The empirical side pairs exact Kolmogorov-Smirnov
//! distances between consecutive ladder CDFs with those verdicts.

use serde::Serialize;

use crate::additive::AdditiveFunctionSpec;
use crate::concentration::{population_values, sup_concentration, Population};
use crate::error::Error;
use crate::sieve::FactorTable;
use crate::sums::Kahan;
use crate::Result;

/// Last-decade increment below this is convergent evidence.
pub const CONVERGENT_THRESHOLD: f64 = 1e-3;
/// Last-decade increment above this is divergent evidence.
pub const DIVERGENT_THRESHOLD: f64 = 1e-1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesVerdict {
    ConvergentEvidence,
    DivergentEvidence,
    Inconclusive,
}

fn verdict(tail: f64) -> SeriesVerdict {
    let t = tail.abs();
    if t < CONVERGENT_THRESHOLD {
        SeriesVerdict::ConvergentEvidence
    } else if t > DIVERGENT_THRESHOLD {
        SeriesVerdict::DivergentEvidence
    } else {
        SeriesVerdict::Inconclusive
    }
}

/// Partial sums of the three series with last-decade increments and
/// per-series verdicts.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ThreeSeriesDiagnostic {
    pub cutoff: u64,
    /// `sum_{p <= cutoff, |f(p)| > 1} 1/p`.
    pub s1: f64,
    /// `sum_{p <= cutoff, |f(p)| <= 1} f(p)/p`; the boundary `|f(p)| = 1`
    /// belongs to the small-value series.
    pub s2: f64,
    /// `sum_{p <= cutoff, |f(p)| <= 1} f(p)^2/p`.
    pub s3: f64,
    /// Contributions from primes in `(cutoff/10, cutoff]`.
    pub tail1: f64,
    pub tail2: f64,
    pub tail3: f64,
    pub verdict1: SeriesVerdict,
    pub verdict2: SeriesVerdict,
    pub verdict3: SeriesVerdict,
    pub convergent_threshold: f64,
    pub divergent_threshold: f64,
}

pub fn three_series(
    spec: &AdditiveFunctionSpec,
    cutoff: u64,
    table: &FactorTable,
) -> Result<ThreeSeriesDiagnostic> {
    if cutoff < 2 {
        return Err(Error::invalid("need cutoff >= 2"));
    }
    let decade_start = cutoff / 10;
    let mut s = [Kahan::new(); 3];
    let mut tail = [Kahan::new(); 3];
    for p in table.primes_upto(cutoff)? {
        let fp = spec.prime_value(p)?;
        let inv = 1.0 / p as f64;
        let terms = if fp.abs() > 1.0 {
            [inv, 0.0, 0.0]
        } else {
            [0.0, fp * inv, fp * fp * inv]
        };
        for i in 0..3 {
            s[i].add(terms[i]);
            if p > decade_start {
                tail[i].add(terms[i]);
            }
        }
    }
    Ok(ThreeSeriesDiagnostic {
        cutoff,
        s1: s[0].value(),
        s2: s[1].value(),
        s3: s[2].value(),
        tail1: tail[0].value(),
        tail2: tail[1].value(),
        tail3: tail[2].value(),
        verdict1: verdict(tail[0].value()),
        verdict2: verdict(tail[1].value()),
        verdict3: verdict(tail[2].value()),
        convergent_threshold: CONVERGENT_THRESHOLD,
        divergent_threshold: DIVERGENT_THRESHOLD,
    })
}

/// Sorted sample of `f(N-p)` over primes `p < N`, each of weight
/// `1/pi(N-1)`; the CDF is the right-continuous step function through it.
#[derive(Clone, Debug, Serialize)]
pub struct EmpiricalCDF {
    pub n_param: u64,
    values: Vec<f64>,
}

impl EmpiricalCDF {
    /// Wraps an explicit sample (sorted internally).
    pub fn from_values(n_param: u64, mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("empirical CDF needs a nonempty sample"));
        }
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(Self { n_param, values })
    }

    pub fn sample_size(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `F(z) = #{v <= z} / n`.
    pub fn cdf(&self, z: f64) -> f64 {
        self.values.partition_point(|&v| v <= z) as f64 / self.values.len() as f64
    }

    /// CSV export: header `value,cum_freq`, one row per distinct value,
    /// ascending.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,cum_freq\n");
        let n = self.values.len() as f64;
        let mut i = 0;
        while i < self.values.len() {
            let v = self.values[i];
            while i < self.values.len() && self.values[i] == v {
                i += 1;
            }
            out.push_str(&format!("{},{}\n", v, i as f64 / n));
        }
        out
    }
}

pub fn empirical_goldbach_cdf(
    spec: &AdditiveFunctionSpec,
    n_param: u64,
    table: &FactorTable,
) -> Result<EmpiricalCDF> {
    let (values, _, _) = population_values(spec, &Population::Goldbach { n: n_param }, table)?;
    EmpiricalCDF::from_values(n_param, values)
}

/// Exact sup-norm distance between two step CDFs over the merged jump set.
pub fn ks_distance(c1: &EmpiricalCDF, c2: &EmpiricalCDF) -> Result<f64> {
    let a = c1.values();
    let b = c2.values();
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("KS distance needs nonempty samples"));
    }
    let (n, m) = (a.len() as f64, b.len() as f64);
    let mut i = 0usize;
    let mut j = 0usize;
    let mut d = 0.0f64;
    while i < a.len() || j < b.len() {
        let v = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => x.min(y),
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => break,
        };
        while i < a.len() && a[i] <= v {
            i += 1;
        }
        while j < b.len() && b[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    Ok(d)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct LadderRung {
    pub n: u64,
    pub sample_size: u64,
    pub sup_s_h: f64,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct KsStep {
    pub n_from: u64,
    pub n_to: u64,
    pub distance: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitRegime {
    ConvergentEvidence,
    DivergentEvidence,
    Inconclusive,
}

/// Evidence report pairing the empirical ladder with the three-series
/// verdicts. No asymptotic claim is made.
#[derive(Clone, Debug, Serialize)]
pub struct LimitVerdictReport {
    pub spec: String,
    pub ladder: Vec<LadderRung>,
    pub ks_steps: Vec<KsStep>,
    pub three_series: ThreeSeriesDiagnostic,
    pub regime: LimitRegime,
    /// Whether the empirical trend matches the regime: shrinking final KS
    /// step under convergent evidence, non-increasing `sup_h S_h` under
    /// divergent evidence. Absent when no check applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistent: Option<bool>,
    pub notes: String,
}

pub fn limit_verdict(
    spec: &AdditiveFunctionSpec,
    ladder: &[u64],
    table: &FactorTable,
) -> Result<LimitVerdictReport> {
    if ladder.len() < 2 {
        return Err(Error::invalid("ladder needs at least two values of N"));
    }
    if !ladder.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::invalid("ladder must be strictly increasing"));
    }

    let mut rungs = Vec::with_capacity(ladder.len());
    let mut cdfs = Vec::with_capacity(ladder.len());
    for &n in ladder {
        let cdf = empirical_goldbach_cdf(spec, n, table)?;
        let sup = sup_concentration(spec, &Population::Goldbach { n }, table)?;
        rungs.push(LadderRung {
            n,
            sample_size: cdf.sample_size(),
            sup_s_h: sup.sup_value,
        });
        cdfs.push(cdf);
    }
    let ks_steps: Vec<KsStep> = cdfs
        .windows(2)
        .zip(ladder.windows(2))
        .map(|(pair, ns)| {
            Ok(KsStep {
                n_from: ns[0],
                n_to: ns[1],
                distance: ks_distance(&pair[0], &pair[1])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let diag = three_series(spec, *ladder.last().unwrap(), table)?;
    let verdicts = [diag.verdict1, diag.verdict2, diag.verdict3];
    let regime = if verdicts.contains(&SeriesVerdict::DivergentEvidence) {
        LimitRegime::DivergentEvidence
    } else if verdicts.iter().all(|v| *v == SeriesVerdict::ConvergentEvidence) {
        LimitRegime::ConvergentEvidence
    } else {
        LimitRegime::Inconclusive
    };

    let (consistent, notes) = match regime {
        LimitRegime::ConvergentEvidence => {
            if ks_steps.len() >= 2 {
                let last = ks_steps[ks_steps.len() - 1].distance;
                let prev = ks_steps[ks_steps.len() - 2].distance;
                (
                    Some(last <= prev),
                    format!("convergent evidence: final KS step {last} vs previous {prev}"),
                )
            } else {
                (
                    None,
                    "convergent evidence: single KS step, trend not assessable".into(),
                )
            }
        }
        LimitRegime::DivergentEvidence => {
            let monotone = rungs.windows(2).all(|w| w[1].sup_s_h <= w[0].sup_s_h);
            (
                Some(monotone),
                "divergent evidence: checking sup_h S_h is non-increasing".into(),
            )
        }
        LimitRegime::Inconclusive => (None, "series verdicts inconclusive".into()),
    };

    Ok(LimitVerdictReport {
        spec: spec.describe(),
        ladder: rungs,
        ks_steps,
        three_series: diag,
        regime,
        consistent,
        notes,
    })
}
