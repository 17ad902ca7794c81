//! Selberg square weights on the rough-prime product and the expanded
//! divisor-pair bound.
//!
//! With `R` the product of the primes in `(w, z]`, the square function
//! `(sum_{d | (n,R)} lambda_d)^2` majorises the indicator of `(n, R) = 1`
//! once `lambda_1 = 1`. The classical optimal choice is implemented:
//!
//! `lambda_d = mu(d) (prod_{p|d} p/(p-1)) G_d(z/d) / G(z)`,
//!
//! where `G_d(y)` sums `prod_{p|e} 1/(p-1)` over squarefree `e <= y`
//! composed of the sieving primes coprime to `d`. These weights satisfy
//! `lambda_1 = 1` and `|lambda_d| <= 1`.
//!
//! Expanding the square and interchanging summation turns the kernel
//! majorant into sums over divisor pairs `(d_1, d_2)` of progressions
//! `n = 0 (mod [d_1, d_2])` with `(n, P) = 1`, up to the tail `3z/pi(x)`;
//! both the pair expansion and the direct square-weight sum are computed and
//! must agree.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::additive::AdditiveFunctionSpec;
use crate::concentration::concentration_shifted;
use crate::error::Error;
use crate::fejer::fejer_kernel;
use crate::quadrature::{fejer_weighted_integral, QuadRule};
use crate::sieve::{gcd, FactorTable};
use crate::sums::{Kahan, KahanComplex};
use crate::Result;

/// Cap on enumerated divisors of `R` (weights support).
pub const DEFAULT_DIVISOR_BUDGET: usize = 1 << 20;
/// Cap on divisor pairs in the expanded bound.
pub const DEFAULT_PAIR_BUDGET: usize = 1 << 22;

/// Real weights `lambda_d` on squarefree divisors of `R`, `d <= z`,
/// `lambda_1 = 1`.
#[derive(Clone, Debug)]
pub struct SelbergWeights {
    pub w: u64,
    pub z: u64,
    pub r_primes: Vec<u64>,
    weights: BTreeMap<u64, f64>,
}

impl SelbergWeights {
    pub fn lambda(&self, d: u64) -> f64 {
        self.weights.get(&d).copied().unwrap_or(0.0)
    }

    /// Supported divisors in ascending order with their weights.
    pub fn entries(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.weights.iter().map(|(&d, &l)| (d, l))
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    /// `sum_{d | (n, R)} lambda_d`.
    pub fn divisor_sum(&self, n: u64) -> f64 {
        let dividing: Vec<u64> = self
            .r_primes
            .iter()
            .copied()
            .filter(|&p| n % p == 0)
            .collect();
        let mut total = 0.0;
        let mut products = vec![1u64];
        for &p in &dividing {
            let len = products.len();
            for i in 0..len {
                products.push(products[i] * p);
            }
        }
        for d in products {
            total += self.lambda(d);
        }
        total
    }
}

/// `sum_{e <= bound, e squarefree from primes[..], (e, d) = 1} prod 1/(p-1)`,
/// by depth-first enumeration. `skip` holds the primes dividing `d`.
fn g_sum(primes: &[u64], skip: &[u64], bound: u64) -> f64 {
    fn rec(primes: &[u64], skip: &[u64], bound: u64, idx: usize) -> f64 {
        let mut total = 1.0; // empty product e = 1
        for i in idx..primes.len() {
            let p = primes[i];
            if p > bound {
                break;
            }
            if skip.contains(&p) {
                continue;
            }
            total += 1.0 / (p - 1) as f64 * rec(primes, skip, bound / p, i + 1);
        }
        total
    }
    rec(primes, skip, bound, 0)
}

/// Squarefree products of `primes` not exceeding `z`, ascending.
fn divisors_upto(primes: &[u64], z: u64, budget: usize) -> Result<Vec<u64>> {
    let mut out = vec![1u64];
    fn rec(primes: &[u64], z: u64, idx: usize, acc: u64, out: &mut Vec<u64>, budget: usize) -> Result<()> {
        for i in idx..primes.len() {
            let p = primes[i];
            if acc > z / p {
                break;
            }
            let d = acc * p;
            if out.len() >= budget {
                return Err(Error::resource(format!(
                    "divisor enumeration exceeds budget {budget}"
                )));
            }
            out.push(d);
            rec(primes, z, i + 1, d, out, budget)?;
        }
        Ok(())
    }
    rec(primes, z, 0, 1, &mut out, budget)?;
    out.sort_unstable();
    Ok(out)
}

/// Builds the Selberg weights for the sieving primes in `(w, z]` at level `z`.
pub fn build_selberg_weights(w: u64, z: u64, table: &FactorTable) -> Result<SelbergWeights> {
    build_selberg_weights_with_budget(w, z, table, DEFAULT_DIVISOR_BUDGET)
}

pub fn build_selberg_weights_with_budget(
    w: u64,
    z: u64,
    table: &FactorTable,
    budget: usize,
) -> Result<SelbergWeights> {
    if w < 3 || w > z {
        return Err(Error::invalid(format!(
            "need 3 <= w <= z, got w={w}, z={z}"
        )));
    }
    if z > table.limit() {
        return Err(Error::invalid(format!(
            "z={z} exceeds table limit {}",
            table.limit()
        )));
    }
    let r_primes = if w == z {
        Vec::new()
    } else {
        table.primes_in(w + 1, z)?
    };
    let divisors = divisors_upto(&r_primes, z, budget)?;
    let g_total = g_sum(&r_primes, &[], z);

    let mut weights = BTreeMap::new();
    for &d in &divisors {
        if d == 1 {
            weights.insert(1, 1.0);
            continue;
        }
        let d_primes: Vec<u64> = r_primes.iter().copied().filter(|&p| d % p == 0).collect();
        let mu = if d_primes.len() % 2 == 0 { 1.0 } else { -1.0 };
        let local: f64 = d_primes.iter().map(|&p| p as f64 / (p - 1) as f64).product();
        let lambda = mu * local * g_sum(&r_primes, &d_primes, z / d) / g_total;
        weights.insert(d, lambda);
    }

    Ok(SelbergWeights {
        w,
        z,
        r_primes,
        weights,
    })
}

/// `(sum_{d | (n, R)} lambda_d)^2`: nonnegative, and exactly 1 when
/// `(n, R) = 1`.
pub fn square_majorant(n: u64, weights: &SelbergWeights) -> f64 {
    let s = weights.divisor_sum(n);
    s * s
}

/// Right side of the expanded square-weight bound on `Q_h`.
#[derive(Clone, Debug, Serialize)]
pub struct Eq2Report {
    pub x: u64,
    pub a: i64,
    pub w: u64,
    pub z: u64,
    pub h: f64,
    pub quadrature_nodes: usize,
    /// Number of supported divisors and of `(d_1, d_2)` pairs enumerated.
    pub lambda_count: usize,
    pub pair_count: usize,
    /// `3 pi(x)^{-1} sum_{d_1, d_2} lambda lambda sum_{n = 0 ([d_1,d_2]), (n,P)=1} K(f(n+a)-h)`.
    pub pair_expansion_term: f64,
    /// Same index set weighted by the square function directly.
    pub square_weight_term: f64,
    /// Pair expansion evaluated by quadrature in `t` instead of the kernel.
    pub quadrature_term: f64,
    /// `3 z / pi(x)`.
    pub z_tail: f64,
    /// `pair_expansion_term + z_tail`, the printed right side.
    pub value: f64,
    pub q_h: f64,
    pub majorization_ok: bool,
    pub im_residual: f64,
    pub excluded: u64,
}

/// Evaluates the expanded bound at one `h` by direct summation over divisor
/// pairs, with the interchange identity and the majorization checked.
#[allow(clippy::too_many_arguments)]
pub fn expanded_bound_eq2(
    spec: &AdditiveFunctionSpec,
    x: u64,
    a: i64,
    w: u64,
    z: u64,
    h: f64,
    table: &FactorTable,
    nodes_per_half: usize,
) -> Result<Eq2Report> {
    expanded_bound_eq2_with_budget(spec, x, a, w, z, h, table, nodes_per_half, DEFAULT_PAIR_BUDGET)
}

#[allow(clippy::too_many_arguments)]
pub fn expanded_bound_eq2_with_budget(
    spec: &AdditiveFunctionSpec,
    x: u64,
    a: i64,
    w: u64,
    z: u64,
    h: f64,
    table: &FactorTable,
    nodes_per_half: usize,
    pair_budget: usize,
) -> Result<Eq2Report> {
    if a == 0 {
        return Err(Error::invalid("shift a must be nonzero"));
    }
    if x < 2 {
        return Err(Error::invalid("need x >= 2"));
    }
    let abs3a = 3 * a.unsigned_abs();
    if abs3a > w {
        return Err(Error::invalid(format!("need 3|a| <= w, got 3|a|={abs3a}, w={w}")));
    }
    let reach = x
        .checked_add_signed(a.max(0))
        .ok_or_else(|| Error::invalid("x + a overflows"))?;
    if reach > table.limit() {
        return Err(Error::invalid(format!("need table limit >= {reach}")));
    }

    let weights = build_selberg_weights(w, z, table)?;
    let support: Vec<(u64, f64)> = weights.entries().collect();
    let pair_count = support.len() * support.len();
    if pair_count > pair_budget {
        return Err(Error::resource(format!(
            "{pair_count} divisor pairs exceed budget {pair_budget}"
        )));
    }

    // Coefficient of each lcm over all ordered pairs.
    let mut lcm_coeff: BTreeMap<u64, f64> = BTreeMap::new();
    for &(d1, l1) in &support {
        for &(d2, l2) in &support {
            let lcm = d1 / gcd(d1, d2) * d2;
            *lcm_coeff.entry(lcm).or_insert(0.0) += l1 * l2;
        }
    }

    // (n, P) = 1 mask for P = product of primes in (3|a|, w].
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

    let f_vals = spec.eval_on_range(reach, table)?;
    let shifted = |n: u64| n.checked_add_signed(a).filter(|&s| s >= 1);
    let mut excluded = 0u64;
    for n in 1..=x {
        if coprime_p[n as usize] && shifted(n).is_none() {
            excluded += 1;
        }
    }

    let pi_x = table.prime_count(x)? as f64;
    if pi_x == 0.0 {
        return Err(Error::EmptyPopulation(format!("no primes <= {x}")));
    }
    let scale = 3.0 / pi_x;

    // Route A: pair expansion with the kernel integral done exactly.
    let mut pair_acc = Kahan::new();
    for (&lcm, &coeff) in &lcm_coeff {
        if lcm > x {
            continue;
        }
        let mut inner = Kahan::new();
        let mut n = lcm;
        while n <= x {
            if coprime_p[n as usize] {
                if let Some(s) = shifted(n) {
                    inner.add(fejer_kernel(f_vals[s as usize] - h));
                }
            }
            n += lcm;
        }
        pair_acc.add(coeff * inner.value());
    }
    let pair_expansion_term = scale * pair_acc.value();

    // Route B: direct square weights over the same index set.
    let mut square_weight = vec![0.0f64; x as usize + 1];
    for &(d, lambda) in &support {
        let mut n = d;
        while n <= x {
            square_weight[n as usize] += lambda;
            n += d;
        }
    }
    let mut square_acc = Kahan::new();
    for n in 1..=x {
        if coprime_p[n as usize] {
            if let Some(s) = shifted(n) {
                let sq = square_weight[n as usize];
                square_acc.add(sq * sq * fejer_kernel(f_vals[s as usize] - h));
            }
        }
    }
    let square_weight_term = scale * square_acc.value();

    // Route A by quadrature in t.
    let integral = fejer_weighted_integral(h, nodes_per_half, QuadRule::GaussLegendre, |t| {
        let mut acc = KahanComplex::new();
        for (&lcm, &coeff) in &lcm_coeff {
            if lcm > x {
                continue;
            }
            let mut inner = KahanComplex::new();
            let mut n = lcm;
            while n <= x {
                if coprime_p[n as usize] {
                    if let Some(s) = shifted(n) {
                        inner.add(Complex64::from_polar(1.0, t * f_vals[s as usize]));
                    }
                }
                n += lcm;
            }
            acc.add(coeff * inner.value());
        }
        acc.value()
    });
    let quadrature_term = scale * integral.re;
    let im_residual = scale * integral.im;

    let interchange_gap = (pair_expansion_term - square_weight_term).abs();
    let interchange_tol = 1e-9 * (1.0 + pair_expansion_term.abs());
    if interchange_gap > interchange_tol {
        return Err(Error::NumericalInconsistency {
            context: "eq2 interchange of summation".into(),
            lhs: pair_expansion_term,
            rhs: square_weight_term,
            tolerance: interchange_tol,
        });
    }

    let z_tail = 3.0 * z as f64 / pi_x;
    let value = pair_expansion_term + z_tail;
    let q_h = concentration_shifted(spec, x, a, h, table)?.value();
    let majorization_ok = value >= q_h - 1e-12;
    if !majorization_ok {
        return Err(Error::NumericalInconsistency {
            context: "eq2 right side fails to majorise Q_h".into(),
            lhs: value,
            rhs: q_h,
            tolerance: 1e-12,
        });
    }

    Ok(Eq2Report {
        x,
        a,
        w,
        z,
        h,
        quadrature_nodes: nodes_per_half,
        lambda_count: support.len(),
        pair_count,
        pair_expansion_term,
        square_weight_term,
        quadrature_term,
        z_tail,
        value,
        q_h,
        majorization_ok,
        im_residual,
        excluded,
    })
}
