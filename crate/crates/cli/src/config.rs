//! Experiment configuration: a flat TOML file with one section per concern.
//! Unknown keys are rejected everywhere.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use primelab_core::additive::{AdditiveFunctionSpec, Kind, PrimeRule};
use primelab_core::concentration::Population;
use primelab_core::unitdisc::{exp_twist, UnitDiscFunction};

use crate::CliError;

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub function: Option<FunctionConfig>,
    pub twist: Option<TwistConfig>,
    pub character: Option<CharacterConfig>,
    pub population: Option<PopulationConfig>,
    pub method: Option<MethodConfig>,
    pub cache: Option<CacheConfig>,
    pub output: Option<OutputConfig>,
}

/// Additive-function spec: a kind, a prime rule, and optional table entries
/// as `(p, k, value)` triples.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionConfig {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<(u64, u32, f64)>>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct TwistConfig {
    pub t: f64,
}

/// Periodic completely multiplicative rule, either a builtin name or an
/// explicit residue table of `[re, im]` pairs.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<(f64, f64)>>,
}

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct PopulationConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ladder: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct MethodConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub functional: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_values: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub big_a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_exponent: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_max: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_stride: Option<usize>,
}

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct CacheConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dir: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<u64>,
}

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cdf_dir: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows_csv: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples_csv: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Config(format!("config parse error in {}: {e}", path.display())))
    }

    /// Builds the additive-function spec from `[function]`.
    pub fn build_spec(&self) -> Result<AdditiveFunctionSpec, CliError> {
        let function = self
            .function
            .as_ref()
            .ok_or_else(|| CliError::Config("this command needs a [function] section".into()))?;
        let kind = match function.kind.as_str() {
            "strongly-additive" => Kind::StronglyAdditive,
            "completely-additive" => Kind::CompletelyAdditive,
            "prime-power-table" => Kind::PrimePowerTable,
            other => {
                return Err(CliError::Config(format!("unknown function kind '{other}'")));
            }
        };
        if kind == Kind::PrimePowerTable {
            let entries = function.entries.as_ref().ok_or_else(|| {
                CliError::Config("prime-power-table kind needs entries = [[p, k, value], ...]".into())
            })?;
            let mut map = BTreeMap::new();
            for &(p, k, value) in entries {
                map.insert((p, k), value);
            }
            return Ok(AdditiveFunctionSpec::prime_power_table(map));
        }
        let rule = function
            .rule
            .as_deref()
            .ok_or_else(|| CliError::Config("function needs rule = \"...\"".into()))?;
        let spec = match rule {
            "constant-one" => AdditiveFunctionSpec::new(kind, PrimeRule::ConstantOne),
            "log-prime" => AdditiveFunctionSpec::new(kind, PrimeRule::LogPrime),
            "reciprocal" => AdditiveFunctionSpec::new(kind, PrimeRule::Reciprocal),
            "zero" => AdditiveFunctionSpec::new(kind, PrimeRule::CustomTable(BTreeMap::new())),
            "residue-indicator" => {
                let modulus = function.modulus.ok_or_else(|| {
                    CliError::Config("residue-indicator needs modulus".into())
                })?;
                let residue = function.residue.ok_or_else(|| {
                    CliError::Config("residue-indicator needs residue".into())
                })?;
                AdditiveFunctionSpec::new(kind, PrimeRule::ResidueIndicator { modulus, residue })
            }
            "custom-table" => {
                let entries = function.entries.as_ref().ok_or_else(|| {
                    CliError::Config("custom-table needs entries = [[p, k, value], ...]".into())
                })?;
                let mut map = BTreeMap::new();
                for &(p, k, value) in entries {
                    if k != 1 {
                        return Err(CliError::Config(format!(
                            "custom-table entries carry prime values only (k = 1), got k = {k} for p = {p}; \
                             use kind = \"prime-power-table\" for explicit powers"
                        )));
                    }
                    map.insert(p, value);
                }
                AdditiveFunctionSpec::new(kind, PrimeRule::CustomTable(map))
            }
            other => return Err(CliError::Config(format!("unknown prime rule '{other}'"))),
        };
        spec.map_err(CliError::Core)
    }

    /// Builds the unit-disc `g` from `[character]` (preferred when present)
    /// or `[function]` + `[twist]`.
    pub fn build_unit_disc(&self) -> Result<UnitDiscFunction, CliError> {
        if let Some(character) = &self.character {
            if let Some(name) = &character.builtin {
                return match name.as_str() {
                    "nonprincipal-mod3" => Ok(UnitDiscFunction::nonprincipal_mod3()),
                    other => Err(CliError::Config(format!("unknown builtin character '{other}'"))),
                };
            }
            let modulus = character
                .modulus
                .ok_or_else(|| CliError::Config("[character] needs modulus or builtin".into()))?;
            let values = character
                .values
                .as_ref()
                .ok_or_else(|| CliError::Config("[character] needs values = [[re, im], ...]".into()))?
                .iter()
                .map(|&(re, im)| Complex64::new(re, im))
                .collect();
            return UnitDiscFunction::character(modulus, values).map_err(CliError::Core);
        }
        let twist = self.twist.as_ref().ok_or_else(|| {
            CliError::Config("this command needs [character] or [function] + [twist]".into())
        })?;
        Ok(exp_twist(self.build_spec()?, twist.t))
    }

    pub fn method(&self) -> MethodConfig {
        self.method.clone().unwrap_or_default()
    }

    pub fn population(&self) -> PopulationConfig {
        self.population.clone().unwrap_or_default()
    }

    /// Resolves the single population for concentration-style commands.
    pub fn resolve_population(&self) -> Result<Population, CliError> {
        let p = self.population();
        match (p.x, p.n) {
            (Some(x), None) => match p.a {
                Some(a) => Ok(Population::ShiftedPrimes { x, a }),
                None => Ok(Population::Integers { x }),
            },
            (None, Some(n)) => Ok(Population::Goldbach { n }),
            (Some(_), Some(_)) => Err(CliError::Config(
                "[population] sets both x and n; pick one".into(),
            )),
            (None, None) => Err(CliError::Config(
                "[population] needs x (integers / shifted primes) or n (Goldbach)".into(),
            )),
        }
    }
}
