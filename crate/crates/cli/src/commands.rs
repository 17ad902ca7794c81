//! One command per studied object; each returns the resolved parameter set
//! and the report body, both as JSON values.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use primelab_core::concentration::{
    concentration_scan, sup_concentration, Population,
};
use primelab_core::decomposition::{
    decompose, lemma1_discrepancy, lemma2_discrepancy, lemma2_scan, lemma3_compare,
};
use primelab_core::dispersion::{
    dispersion_e, dispersion_w_sampled, dispersion_y_sampled, theorem_ratio,
};
use primelab_core::distribution::{limit_verdict, three_series};
use primelab_core::fejer::{fejer_majorant_q, majorant_goldbach, majorant_weighted_q};
use primelab_core::selberg::expanded_bound_eq2;
use primelab_core::sieve::FactorTable;

use crate::config::ExperimentConfig;
use crate::CliError;

const DEFAULT_NODES: usize = 512;

pub struct Ctx<'a> {
    pub config: &'a ExperimentConfig,
    pub cache_dir: PathBuf,
    pub limit_override: Option<u64>,
}

impl Ctx<'_> {
    /// Loads or builds the factor table covering `need`, honouring a larger
    /// explicit limit. The cache is keyed by limit; a corrupt file is
    /// rebuilt with a warning.
    fn table(&self, need: u64) -> Result<(FactorTable, u64), CliError> {
        let limit = self.limit_override.unwrap_or(0).max(need).max(2);
        std::fs::create_dir_all(&self.cache_dir).map_err(CliError::Io)?;
        let path = self.cache_dir.join(format!("spf_{limit:010}.splf"));
        if path.exists() {
            match FactorTable::load(&path) {
                Ok(t) if t.limit() == limit => return Ok((t, limit)),
                Ok(t) => eprintln!(
                    "warning: cache {} holds limit {}, expected {limit}; rebuilding",
                    path.display(),
                    t.limit()
                ),
                Err(e) => eprintln!("warning: cache {} unreadable ({e}); rebuilding", path.display()),
            }
        }
        let t = FactorTable::build(limit).map_err(CliError::Core)?;
        t.save(&path).map_err(CliError::Core)?;
        Ok((t, limit))
    }

    fn out_config(&self) -> crate::config::OutputConfig {
        self.config.output.clone().unwrap_or_default()
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(CliError::Io)?;
    }
    std::fs::write(path, text).map_err(CliError::Io)
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Config(format!("serialize: {e}")))
}

fn population_need(pop: &Population) -> u64 {
    match *pop {
        Population::Integers { x } => x,
        Population::ShiftedPrimes { x, a } => x.saturating_add_signed(a.max(0)),
        Population::Goldbach { n } => n,
    }
}

pub fn sieve(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let limit = ctx
        .limit_override
        .ok_or_else(|| CliError::Config("sieve needs --limit or [cache] limit".into()))?;
    let (table, limit) = ctx.table(limit)?;
    let prime_count = table.prime_count(limit).map_err(CliError::Core)?;
    let largest = (2..=limit).rev().find(|&n| table.is_prime(n));
    let params = json!({ "limit": limit, "cache_dir": ctx.cache_dir.display().to_string() });
    let report = json!({
        "limit": limit,
        "prime_count": prime_count,
        "largest_prime": largest,
    });
    Ok((params, report))
}

pub fn concentration(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let pop = ctx.config.resolve_population()?;
    let method = ctx.config.method();
    let (table, limit) = ctx.table(population_need(&pop))?;

    let mut report = sup_concentration(&spec, &pop, &table).map_err(CliError::Core)?;
    if let Some(h_values) = &method.h_values {
        let samples = concentration_scan(&spec, &pop, h_values, &table).map_err(CliError::Core)?;
        if let Some(path) = ctx.out_config().samples_csv {
            let mut csv = String::from("h,frequency\n");
            for &(h, freq) in &samples {
                csv.push_str(&format!("{h},{freq}\n"));
            }
            write_text(&path, &csv)?;
        }
        report.samples = Some(samples);
    }
    let single = match method.h {
        Some(h) => {
            let single = concentration_scan(&spec, &pop, &[h], &table).map_err(CliError::Core)?;
            Some(json!({ "h": h, "frequency": single[0].1 }))
        }
        None => None,
    };

    let params = json!({
        "spec": spec.describe(),
        "population": to_value(&pop)?,
        "h": method.h,
        "h_values": method.h_values,
        "cache_limit": limit,
    });
    let mut body = to_value(&report)?;
    if let Some(single) = single {
        body["at_h"] = single;
    }
    Ok((params, body))
}

pub fn dispersion(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let method = ctx.config.method();
    let pop = ctx.config.population();
    let functional = method.functional.as_deref().unwrap_or("W");
    let stride = method.sample_stride;

    let (result, limit) = match functional {
        "W" => {
            let x = pop.x.ok_or_else(|| CliError::Config("W needs population x".into()))?;
            let (table, limit) = ctx.table(x)?;
            (
                dispersion_w_sampled(&spec, x, &table, stride).map_err(CliError::Core)?,
                limit,
            )
        }
        "Y" => {
            let n = pop.n.ok_or_else(|| CliError::Config("Y needs population n".into()))?;
            let (table, limit) = ctx.table(n)?;
            (
                dispersion_y_sampled(&spec, n, &table, stride).map_err(CliError::Core)?,
                limit,
            )
        }
        "E" => {
            let x = pop.x.ok_or_else(|| CliError::Config("E needs population x".into()))?;
            let (table, limit) = ctx.table(x)?;
            (dispersion_e(&spec, x, &table).map_err(CliError::Core)?, limit)
        }
        other => return Err(CliError::Config(format!("unknown functional '{other}'"))),
    };

    let params = json!({
        "spec": spec.describe(),
        "functional": functional,
        "argument": result.argument,
        "sample_stride": stride,
        "cache_limit": limit,
    });
    Ok((params, to_value(&result)?))
}

pub fn theorem_ratio_cmd(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let pop = ctx.config.resolve_population()?;
    let (table, limit) = ctx.table(population_need(&pop))?;
    let report = theorem_ratio(&spec, &pop, &table).map_err(CliError::Core)?;
    let params = json!({
        "spec": spec.describe(),
        "population": to_value(&pop)?,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}

pub fn fejer(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let pop = ctx.config.population();
    let method = ctx.config.method();
    let x = pop.x.ok_or_else(|| CliError::Config("fejer needs population x".into()))?;
    let a = pop.a.unwrap_or(1);
    let h = method.h.ok_or_else(|| CliError::Config("fejer needs method h".into()))?;
    let nodes = method.nodes.unwrap_or(DEFAULT_NODES);
    let (table, limit) = ctx.table(x.saturating_add_signed(a.max(0)))?;
    let report = fejer_majorant_q(&spec, x, a, h, &table, nodes).map_err(CliError::Core)?;
    let params = json!({
        "spec": spec.describe(),
        "x": x, "a": a, "h": h, "nodes": nodes,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}

/// Default sieve parameters: level `z = x^{1/4}`, smooth bound
/// `w = (log x)^3` capped at `z` (at desk scale the two cross).
fn default_w_z(x: u64, a: i64, method: &crate::config::MethodConfig) -> (u64, u64) {
    let z = method
        .z
        .unwrap_or(((x as f64).powf(0.25).floor() as u64).max(3 * a.unsigned_abs()));
    let w = method
        .w
        .unwrap_or((((x as f64).ln().powi(3).floor() as u64).max(3 * a.unsigned_abs())).min(z));
    (w, z)
}

pub fn eq2(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let pop = ctx.config.population();
    let method = ctx.config.method();
    let x = pop.x.ok_or_else(|| CliError::Config("eq2 needs population x".into()))?;
    let a = pop.a.unwrap_or(1);
    let h = method.h.unwrap_or(0.0);
    let nodes = method.nodes.unwrap_or(DEFAULT_NODES);
    let (w, z) = default_w_z(x, a, &method);
    let need = x.saturating_add_signed(a.max(0)).max(z);
    let (table, limit) = ctx.table(need)?;
    let report = expanded_bound_eq2(&spec, x, a, w, z, h, &table, nodes).map_err(CliError::Core)?;
    let params = json!({
        "spec": spec.describe(),
        "x": x, "a": a, "h": h, "w": w, "z": z, "nodes": nodes,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}

pub fn eq5(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let pop = ctx.config.population();
    let method = ctx.config.method();
    let x = pop.x.ok_or_else(|| CliError::Config("eq5 needs population x".into()))?;
    let a = pop.a.unwrap_or(1);
    let h = method.h.unwrap_or(0.0);
    let nodes = method.nodes.unwrap_or(DEFAULT_NODES);
    let (table, limit) = ctx.table(x.saturating_add_signed(a.max(0)))?;
    let report =
        majorant_weighted_q(&spec, x, a, h, &table, nodes, method.q).map_err(CliError::Core)?;
    let params = json!({
        "spec": spec.describe(),
        "x": x, "a": a, "h": h, "nodes": nodes, "exclude_q": method.q,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}

pub fn goldbach_majorant(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let pop = ctx.config.population();
    let method = ctx.config.method();
    let n = pop
        .n
        .ok_or_else(|| CliError::Config("goldbach-majorant needs population n".into()))?;
    let h = method.h.unwrap_or(0.0);
    let nodes = method.nodes.unwrap_or(DEFAULT_NODES);
    let (table, limit) = ctx.table(n)?;
    let report = majorant_goldbach(&spec, n, h, &table, nodes, method.q).map_err(CliError::Core)?;
    let params = json!({
        "spec": spec.describe(),
        "n": n, "h": h, "nodes": nodes, "exclude_q": method.q,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}

pub fn decompose_cmd(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let g = ctx.config.build_unit_disc()?;
    let pop = ctx.config.population();
    let method = ctx.config.method();
    let x = pop.x.ok_or_else(|| CliError::Config("decompose needs population x".into()))?;
    let big_a = method.big_a.unwrap_or(1.0);
    let (table, limit) = ctx.table(x)?;
    let tables = decompose(&g, x, big_a, &table).map_err(CliError::Core)?;

    // Spot-check of the convolution identity over a capped prefix.
    let check_to = x.min(4000) as usize;
    let mut residual_max = 0.0f64;
    for n in 1..=check_to {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        let mut d = 1usize;
        while d * d <= n {
            if n % d == 0 {
                acc += tables.h[d] * tables.g1[n / d];
                if d != n / d {
                    acc += tables.h[n / d] * tables.g1[d];
                }
            }
            d += 1;
        }
        residual_max = residual_max.max((acc - tables.g[n]).norm());
    }

    let params = json!({
        "g": g.describe(),
        "x": x, "big_a": big_a,
        "cache_limit": limit,
    });
    let report = json!({
        "x": tables.x,
        "big_a": tables.a_cap,
        "u_bound": tables.u_bound,
        "p_bound": tables.p_bound,
        "diagnostics": to_value(&tables.diagnostics)?,
        "convolution_residual_max": residual_max,
        "convolution_checked_to": check_to,
    });
    Ok((params, report))
}

pub fn lemma1(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let g = ctx.config.build_unit_disc()?;
    let pop = ctx.config.population();
    let method = ctx.config.method();
    let x = pop.x.ok_or_else(|| CliError::Config("lemma1 needs population x".into()))?;
    let big_a = method.big_a.unwrap_or(1.0);
    let delta = method.delta.unwrap_or(0.3);
    let w = method.w.unwrap_or(((x as f64).ln().powi(2).floor() as u64).max(2));
    let (table, limit) = ctx.table(x)?;
    let tables = decompose(&g, x, big_a, &table).map_err(CliError::Core)?;
    let report = lemma1_discrepancy(&tables, delta, w, &table).map_err(CliError::Core)?;

    if let Some(path) = ctx.out_config().rows_csv {
        let mut csv = String::from("d1,d2,r_star,y_star,lhs_re,lhs_im,ref_re,ref_im,discrepancy\n");
        for row in &report.rows {
            csv.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                row.d1,
                row.d2,
                row.r_star,
                row.y_star,
                row.lhs_sum.re,
                row.lhs_sum.im,
                row.reference_sum.re,
                row.reference_sum.im,
                row.discrepancy
            ));
        }
        write_text(&path, &csv)?;
    }

    let params = json!({
        "g": g.describe(),
        "x": x, "big_a": big_a, "delta": delta, "w": w,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}

pub fn lemma2(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let g = ctx.config.build_unit_disc()?;
    let pop = ctx.config.population();
    let method = ctx.config.method();
    let x = pop.x.ok_or_else(|| CliError::Config("lemma2 needs population x".into()))?;
    let (table, limit) = ctx.table(x)?;

    let point = match method.d {
        Some(d) => {
            let r = method.r.unwrap_or(1);
            Some(lemma2_discrepancy(&g, x, d, r, &table).map_err(CliError::Core)?)
        }
        None => None,
    };
    let scan = match method.q_max {
        Some(q_max) => Some(lemma2_scan(&g, x, q_max, &table).map_err(CliError::Core)?),
        None => None,
    };
    if point.is_none() && scan.is_none() {
        return Err(CliError::Config(
            "lemma2 needs method d (single modulus) and/or q_max (scan)".into(),
        ));
    }

    if let (Some(scan), Some(path)) = (&scan, ctx.out_config().rows_csv) {
        let mut csv = String::from("d,worst_r,discrepancy\n");
        for row in &scan.rows {
            csv.push_str(&format!("{},{},{}\n", row.d, row.worst_r, row.discrepancy));
        }
        write_text(&path, &csv)?;
    }

    let params = json!({
        "g": g.describe(),
        "x": x, "d": method.d, "r": method.r, "q_max": method.q_max,
        "cache_limit": limit,
    });
    let report = json!({
        "point": point.as_ref().map(to_value).transpose()?,
        "scan": scan.as_ref().map(to_value).transpose()?,
    });
    Ok((params, report))
}

pub fn lemma3(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let g = ctx.config.build_unit_disc()?;
    let pop = ctx.config.population();
    let method = ctx.config.method();
    let x = pop.x.ok_or_else(|| CliError::Config("lemma3 needs population x".into()))?;
    let a = pop.a.unwrap_or(1);
    let y = method.y.unwrap_or(3 * a.unsigned_abs());
    let w_exponent = method.w_exponent.unwrap_or(3.0);
    let w = method
        .w
        .unwrap_or(((x as f64).ln().powf(w_exponent).floor() as u64).max(y));
    let (table, limit) = ctx.table(x.max(w))?;
    let report = lemma3_compare(&g, x, y, w, a, &table).map_err(CliError::Core)?;
    let params = json!({
        "g": g.describe(),
        "x": x, "a": a, "y": y, "w": w, "w_exponent": w_exponent,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}

pub fn three_series_cmd(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let method = ctx.config.method();
    let cutoff = method
        .cutoff
        .ok_or_else(|| CliError::Config("three-series needs method cutoff".into()))?;
    let (table, limit) = ctx.table(cutoff)?;
    let report = three_series(&spec, cutoff, &table).map_err(CliError::Core)?;
    let params = json!({
        "spec": spec.describe(),
        "cutoff": cutoff,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}

pub fn limit_verdict_cmd(ctx: &Ctx) -> Result<(Value, Value), CliError> {
    let spec = ctx.config.build_spec()?;
    let pop = ctx.config.population();
    let ladder = pop
        .ladder
        .ok_or_else(|| CliError::Config("limit-verdict needs population ladder".into()))?;
    let need = ladder.iter().copied().max().unwrap_or(0);
    let (table, limit) = ctx.table(need)?;
    let report = limit_verdict(&spec, &ladder, &table).map_err(CliError::Core)?;

    if let Some(dir) = ctx.out_config().cdf_dir {
        for &n in &ladder {
            let cdf = primelab_core::distribution::empirical_goldbach_cdf(&spec, n, &table)
                .map_err(CliError::Core)?;
            write_text(&dir.join(format!("cdf_{n}.csv")), &cdf.to_csv())?;
        }
    }

    let params = json!({
        "spec": spec.describe(),
        "ladder": ladder,
        "cache_limit": limit,
    });
    Ok((params, to_value(&report)?))
}
