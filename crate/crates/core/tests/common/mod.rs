//! Independent oracle implementations used by the integration tests. They
//! deliberately avoid the library's own code paths: trial division instead
//! of the factor table, per-element loops instead of sorting, adaptive
//! Simpson instead of Gauss-Legendre.

#![allow(dead_code)]

use num_complex::Complex64;

/// Trial-division factorization.
pub fn trial_factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn trial_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

pub fn naive_primes_upto(x: u64) -> Vec<u64> {
    (2..=x).filter(|&n| trial_is_prime(n)).collect()
}

/// Evaluate an additive rule by trial division: strongly additive when
/// `complete` is false.
pub fn naive_additive(n: u64, complete: bool, f_p: impl Fn(u64) -> f64) -> f64 {
    trial_factorize(n)
        .into_iter()
        .map(|(p, k)| if complete { k as f64 * f_p(p) } else { f_p(p) })
        .sum()
}

/// Per-element window count oracle.
pub fn naive_window_count(values: &[f64], h: f64) -> u64 {
    values.iter().filter(|&&v| v > h && v <= h + 1.0).count() as u64
}

/// Adaptive Simpson quadrature for real integrands, the oracle for the
/// Fejer kernel closed form.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn rec(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            rec(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
                + rec(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    rec(f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// The Fejer kernel straight from its defining integral.
pub fn kernel_by_defining_integral(u: f64) -> f64 {
    // int_{-1}^{1} (1-|t|) e^{itu} dt = 2 int_0^1 (1-t) cos(tu) dt.
    2.0 * adaptive_simpson(&|t: f64| (1.0 - t) * (t * u).cos(), 0.0, 1.0, 1e-13)
}

/// Naive weighted mean value: trial-division weights, direct sum.
pub fn naive_weighted_mean_value(
    g: impl Fn(u64) -> Complex64,
    x: u64,
    y: u64,
    exclude_q: Option<u64>,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=x {
        if let Some(q) = exclude_q {
            if n % q == 0 {
                continue;
            }
        }
        let mut weight = 1.0;
        for (p, _) in trial_factorize(n) {
            if p > y {
                weight *= (p - 1) as f64 / (p - 2) as f64;
            }
        }
        acc += weight * g(n);
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
