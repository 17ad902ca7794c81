mod common;

use primelab_core::additive::AdditiveFunctionSpec;
use primelab_core::dispersion::{dispersion_w, dispersion_y, objective_w};
use primelab_core::sieve::FactorTable;

/// Independent objective: trial-division primes, formula written out.
fn oracle_objective(f_p: &dyn Fn(u64) -> f64, primes: &[u64], lambda: f64) -> f64 {
    let mut sum = lambda * lambda;
    for &p in primes {
        let d = (f_p(p) - lambda * (p as f64).ln()).abs().min(1.0);
        sum += d * d / p as f64;
    }
    sum
}

/// Dense-grid minimum at step 1e-4 over `[-bound, bound]`.
fn oracle_grid_min(f_p: &dyn Fn(u64) -> f64, primes: &[u64], bound: f64) -> f64 {
    let steps = (bound / 1e-4).ceil() as i64;
    let mut best = f64::INFINITY;
    for i in -steps..=steps {
        let lambda = i as f64 * 1e-4;
        let v = oracle_objective(f_p, primes, lambda);
        if v < best {
            best = v;
        }
    }
    best
}

fn rules() -> Vec<(&'static str, AdditiveFunctionSpec, Box<dyn Fn(u64) -> f64>)> {
    vec![
        ("omega", AdditiveFunctionSpec::omega(), Box::new(|_| 1.0)),
        (
            "log",
            AdditiveFunctionSpec::log_prime(),
            Box::new(|p: u64| (p as f64).ln()),
        ),
        (
            "recip",
            AdditiveFunctionSpec::reciprocal(),
            Box::new(|p: u64| 1.0 / p as f64),
        ),
        (
            "ind41",
            AdditiveFunctionSpec::residue_indicator(4, 1).unwrap(),
            Box::new(|p: u64| if p % 4 == 1 { 1.0 } else { 0.0 }),
        ),
    ]
}

#[test]
fn dispersion_w_brackets_dense_grid_oracle() {
    let table = FactorTable::build(600).unwrap();
    let x = 500u64;
    let primes = common::naive_primes_upto(x);
    let bound = (x as f64).ln().powi(2);
    for (name, spec, f_p) in rules() {
        let oracle = 4.0 + oracle_grid_min(f_p.as_ref(), &primes, bound);
        let got = dispersion_w(&spec, x, &table).unwrap().value;
        assert!(
            got <= oracle + 1e-9,
            "{name}: refined {got} should not lose to grid {oracle}"
        );
        assert!(
            oracle - got <= 1e-6,
            "{name}: refined {got} beats grid {oracle} by too much"
        );
    }
}

#[test]
fn dispersion_y_brackets_dense_grid_oracle() {
    let table = FactorTable::build(600).unwrap();
    let n = 501u64; // 3 * 167
    let primes: Vec<u64> = common::naive_primes_upto(n - 1)
        .into_iter()
        .filter(|&p| n % p != 0)
        .collect();
    let bound = (n as f64).ln().powi(2);
    for (name, spec, f_p) in rules() {
        let oracle = 4.0 + oracle_grid_min(f_p.as_ref(), &primes, bound);
        let got = dispersion_y(&spec, n, &table).unwrap().value;
        assert!(got <= oracle + 1e-9, "{name}: {got} vs {oracle}");
        assert!(oracle - got <= 1e-6, "{name}: {got} vs {oracle}");
    }
}

#[test]
fn objective_monotone_in_x_at_fixed_lambda() {
    let table = FactorTable::build(5000).unwrap();
    let omega = AdditiveFunctionSpec::omega();
    for lambda in [-1.0, 0.0, 0.4, 2.0] {
        let mut prev = 0.0;
        for x in [10u64, 100, 1000, 5000] {
            let v = objective_w(&omega, x, lambda, &table).unwrap();
            assert!(v >= prev - 1e-15, "lambda={lambda}, x={x}");
            prev = v;
        }
    }
}

#[test]
fn objective_at_least_lambda_squared() {
    let table = FactorTable::build(1000).unwrap();
    let spec = AdditiveFunctionSpec::log_prime();
    for lambda in [-5.0, -0.3, 0.0, 0.7, 4.0] {
        let v = objective_w(&spec, 1000, lambda, &table).unwrap();
        assert!(v >= lambda * lambda);
    }
}
