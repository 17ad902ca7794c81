//! Declarative additive functions.
//!
//! An additive function satisfies `f(rs) = f(r) + f(s)` for coprime `r, s`
//! and is determined by its values on prime powers. A spec pairs a rule for
//! `f(p)` with a kind that extends it to prime powers:
//!
//! * strongly additive: `f(p^k) = f(p)`,
//! * completely additive: `f(p^k) = k f(p)`,
//! * prime-power table: every needed `(p, k)` is listed explicitly.
//!
//! `f(1) = 0` and coprime additivity then hold by construction.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::sieve::FactorTable;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    StronglyAdditive,
    CompletelyAdditive,
    PrimePowerTable,
}

/// Rule assigning a real value to each prime.
#[derive(Clone, Debug)]
pub enum PrimeRule {
    /// `f(p) = 1`; strongly additive gives omega, completely additive Omega.
    ConstantOne,
    /// `f(p) = log p` (natural log).
    LogPrime,
    /// `f(p) = 1` when `p = residue (mod modulus)`, else 0.
    ResidueIndicator { modulus: u64, residue: u64 },
    /// `f(p) = 1/p`.
    Reciprocal,
    /// Finite table `p -> f(p)`; primes not listed get 0.
    CustomTable(BTreeMap<u64, f64>),
}

#[derive(Clone, Debug)]
pub struct AdditiveFunctionSpec {
    kind: Kind,
    prime_rule: PrimeRule,
    /// Exhaustive `(p, k) -> f(p^k)` entries, consulted only by the
    /// prime-power-table kind.
    power_table: BTreeMap<(u64, u32), f64>,
}

impl AdditiveFunctionSpec {
    pub fn new(kind: Kind, prime_rule: PrimeRule) -> Result<Self> {
        if kind == Kind::PrimePowerTable {
            return Err(Error::invalid(
                "prime-power-table kind requires explicit entries; use prime_power_table()",
            ));
        }
        if let PrimeRule::ResidueIndicator { modulus, residue } = prime_rule {
            if modulus == 0 || residue >= modulus {
                return Err(Error::invalid(format!(
                    "residue indicator needs residue < modulus, got {residue} mod {modulus}"
                )));
            }
        }
        Ok(Self {
            kind,
            prime_rule,
            power_table: BTreeMap::new(),
        })
    }

    /// omega: number of distinct prime factors.
    pub fn omega() -> Self {
        Self::new(Kind::StronglyAdditive, PrimeRule::ConstantOne).unwrap()
    }

    /// Omega: number of prime factors with multiplicity.
    pub fn big_omega() -> Self {
        Self::new(Kind::CompletelyAdditive, PrimeRule::ConstantOne).unwrap()
    }

    /// Completely additive `f(p) = log p`, so `f(n) = log n`.
    pub fn log_prime() -> Self {
        Self::new(Kind::CompletelyAdditive, PrimeRule::LogPrime).unwrap()
    }

    /// Strongly additive indicator of `p = residue (mod modulus)`.
    pub fn residue_indicator(modulus: u64, residue: u64) -> Result<Self> {
        Self::new(
            Kind::StronglyAdditive,
            PrimeRule::ResidueIndicator { modulus, residue },
        )
    }

    /// Strongly additive `f(p) = 1/p`.
    pub fn reciprocal() -> Self {
        Self::new(Kind::StronglyAdditive, PrimeRule::Reciprocal).unwrap()
    }

    /// The zero function (empty custom table).
    pub fn zero() -> Self {
        Self::new(Kind::StronglyAdditive, PrimeRule::CustomTable(BTreeMap::new())).unwrap()
    }

    pub fn custom_table(kind: Kind, table: BTreeMap<u64, f64>) -> Result<Self> {
        if kind == Kind::PrimePowerTable {
            return Err(Error::invalid("use prime_power_table() for explicit powers"));
        }
        Ok(Self {
            kind,
            prime_rule: PrimeRule::CustomTable(table),
            power_table: BTreeMap::new(),
        })
    }

    /// Spec with explicit `(p, k) -> f(p^k)` entries; evaluation fails on any
    /// prime power that is not listed.
    pub fn prime_power_table(entries: BTreeMap<(u64, u32), f64>) -> Self {
        Self {
            kind: Kind::PrimePowerTable,
            prime_rule: PrimeRule::CustomTable(BTreeMap::new()),
            power_table: entries,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn prime_rule(&self) -> &PrimeRule {
        &self.prime_rule
    }

    /// `f(p)` for prime `p`.
    pub fn prime_value(&self, p: u64) -> Result<f64> {
        if self.kind == Kind::PrimePowerTable {
            return self.prime_power_value(p, 1);
        }
        Ok(match &self.prime_rule {
            PrimeRule::ConstantOne => 1.0,
            PrimeRule::LogPrime => (p as f64).ln(),
            PrimeRule::ResidueIndicator { modulus, residue } => {
                if p % modulus == *residue {
                    1.0
                } else {
                    0.0
                }
            }
            PrimeRule::Reciprocal => 1.0 / p as f64,
            PrimeRule::CustomTable(table) => table.get(&p).copied().unwrap_or(0.0),
        })
    }

    /// `f(p^k)` per the spec kind.
    pub fn prime_power_value(&self, p: u64, k: u32) -> Result<f64> {
        match self.kind {
            Kind::StronglyAdditive => self.prime_value(p),
            Kind::CompletelyAdditive => Ok(k as f64 * self.prime_value(p)?),
            Kind::PrimePowerTable => self
                .power_table
                .get(&(p, k))
                .copied()
                .ok_or(Error::IncompleteSpec { p, k }),
        }
    }

    /// Whether `f(p) != 0` for the exact-vs-threshold split: table specs
    /// compare exactly, computed rules use a 1e-15 threshold.
    pub fn prime_value_is_nonzero(&self, p: u64) -> Result<bool> {
        let v = self.prime_value(p)?;
        let table_backed = self.kind == Kind::PrimePowerTable
            || matches!(self.prime_rule, PrimeRule::CustomTable(_));
        Ok(if table_backed { v != 0.0 } else { v.abs() > 1e-15 })
    }

    /// `f(n)` by summing over the canonical factorization; `f(1) = 0`.
    pub fn eval(&self, n: u64, table: &FactorTable) -> Result<f64> {
        let factorization = table.factorize(n)?;
        let mut sum = 0.0;
        for &(p, k) in &factorization.factors {
            sum += self.prime_power_value(p, k)?;
        }
        Ok(sum)
    }

    /// Dense values `f(1..=x)` in one sweep; index 0 is unused and holds 0.
    ///
    /// Uses the recurrence `f(n) = f(n / p^k) + f(p^k)` with `p = spf(n)`,
    /// so every `n` costs its exponent in divisions.
    pub fn eval_on_range(&self, x: u64, table: &FactorTable) -> Result<Vec<f64>> {
        if x > table.limit() {
            return Err(Error::invalid(format!(
                "range end {x} exceeds table limit {}",
                table.limit()
            )));
        }
        let x = x as usize;
        let mut vals = vec![0.0f64; x + 1];
        for n in 2..=x {
            let p = table.spf(n as u64);
            let mut m = n as u64;
            let mut k = 0u32;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            vals[n] = vals[m as usize] + self.prime_power_value(p, k)?;
        }
        Ok(vals)
    }

    /// Short label for reports.
    pub fn describe(&self) -> String {
        let rule = match &self.prime_rule {
            PrimeRule::ConstantOne => "constant-one".to_string(),
            PrimeRule::LogPrime => "log-prime".to_string(),
            PrimeRule::ResidueIndicator { modulus, residue } => {
                format!("residue-indicator({modulus},{residue})")
            }
            PrimeRule::Reciprocal => "reciprocal".to_string(),
            PrimeRule::CustomTable(t) => format!("custom-table[{}]", t.len()),
        };
        match self.kind {
            Kind::StronglyAdditive => format!("strongly-additive/{rule}"),
            Kind::CompletelyAdditive => format!("completely-additive/{rule}"),
            Kind::PrimePowerTable => format!("prime-power-table[{}]", self.power_table.len()),
        }
    }
}
