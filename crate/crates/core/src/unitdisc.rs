//! Multiplicative functions with values in the complex unit disc.
//!
//! The central case is the twist `g(n) = exp(i t f(n))` of an additive
//! function, which is unimodular and multiplicative on coprime arguments.
//! The discrepancy lemmas, however, quantify over arbitrary unit-disc
//! multiplicative functions, and their sharpness witness is a nonprincipal
//! character (which vanishes on a residue class), so a periodic
//! completely-multiplicative rule is also supported.

use num_complex::Complex64;

use crate::additive::AdditiveFunctionSpec;
use crate::error::Error;
use crate::sieve::FactorTable;
use crate::Result;

#[derive(Clone, Debug)]
pub enum UnitDiscFunction {
    /// `g(n) = exp(i t f(n))`, always of modulus 1.
    ExpTwist { t: f64, base: AdditiveFunctionSpec },
    /// Completely multiplicative `g(n) = values[n mod modulus]`, each value
    /// of modulus <= 1. The caller supplies a genuinely multiplicative table
    /// (e.g. a Dirichlet character).
    Character { modulus: u64, values: Vec<Complex64> },
}

/// Builds the twist `g(n) = exp(i t f(n))`; `t = 0` gives `g = 1`.
pub fn exp_twist(base: AdditiveFunctionSpec, t: f64) -> UnitDiscFunction {
    UnitDiscFunction::ExpTwist { t, base }
}

impl UnitDiscFunction {
    /// Periodic completely multiplicative rule; values must lie in the unit
    /// disc and the table must cover every residue.
    pub fn character(modulus: u64, values: Vec<Complex64>) -> Result<Self> {
        if modulus == 0 || values.len() != modulus as usize {
            return Err(Error::invalid(format!(
                "character table must have exactly modulus={modulus} entries, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.norm() > 1.0 + 1e-12) {
            return Err(Error::invalid(format!(
                "character value {v} lies outside the unit disc"
            )));
        }
        Ok(UnitDiscFunction::Character { modulus, values })
    }

    /// The nonprincipal character mod 3: 0, 1, -1 on residues 0, 1, 2.
    pub fn nonprincipal_mod3() -> Self {
        UnitDiscFunction::Character {
            modulus: 3,
            values: vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(-1.0, 0.0),
            ],
        }
    }

    pub fn t(&self) -> Option<f64> {
        match self {
            UnitDiscFunction::ExpTwist { t, .. } => Some(*t),
            UnitDiscFunction::Character { .. } => None,
        }
    }

    pub fn base(&self) -> Option<&AdditiveFunctionSpec> {
        match self {
            UnitDiscFunction::ExpTwist { base, .. } => Some(base),
            UnitDiscFunction::Character { .. } => None,
        }
    }

    /// `g(n)`.
    pub fn eval(&self, n: u64, table: &FactorTable) -> Result<Complex64> {
        match self {
            UnitDiscFunction::ExpTwist { t, base } => {
                Ok(Complex64::from_polar(1.0, t * base.eval(n, table)?))
            }
            UnitDiscFunction::Character { modulus, values } => {
                Ok(values[(n % modulus) as usize])
            }
        }
    }

    /// `g(p^k)` without factorizing.
    pub fn eval_prime_power(&self, p: u64, k: u32) -> Result<Complex64> {
        match self {
            UnitDiscFunction::ExpTwist { t, base } => {
                Ok(Complex64::from_polar(1.0, t * base.prime_power_value(p, k)?))
            }
            UnitDiscFunction::Character { modulus, values } => {
                Ok(values[pow_mod(p % modulus, k, *modulus) as usize])
            }
        }
    }

    /// Dense values `g(1..=x)`; index 0 is unused.
    pub fn eval_on_range(&self, x: u64, table: &FactorTable) -> Result<Vec<Complex64>> {
        match self {
            UnitDiscFunction::ExpTwist { t, base } => {
                let f = base.eval_on_range(x, table)?;
                Ok(f.iter()
                    .map(|&v| Complex64::from_polar(1.0, t * v))
                    .collect())
            }
            UnitDiscFunction::Character { modulus, values } => Ok((0..=x)
                .map(|n| values[(n % modulus) as usize])
                .collect()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            UnitDiscFunction::ExpTwist { t, base } => {
                format!("exp({t}*i*f), f={}", base.describe())
            }
            UnitDiscFunction::Character { modulus, .. } => {
                format!("character(mod {modulus})")
            }
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u32, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}
