//! Computational kernels for the empirical study of additive arithmetic
//! functions on shifted primes.
//!
//! The crate evaluates, at desk scale, the objects that drive concentration
//! estimates for `f(p + a)` and `f(N - p)`:
//!
//! * smallest-prime-factor tables and the elementary arithmetic functions
//!   built on them ([`sieve`]),
//! * declarative additive functions `f` and their unit-disc multiplicative
//!   twists `g(n) = exp(i t f(n))` ([`additive`], [`unitdisc`]),
//! * the window frequencies `C_h`, `Q_h`, `S_h` and their exact suprema over
//!   `h` ([`concentration`]),
//! * the dispersion functionals `W(x)`, `Y(N)`, `E(x)` with the bounded
//!   one-dimensional minimisation over the centering slope ([`dispersion`]),
//! * Fejer-kernel majorants and weighted multiplicative mean values
//!   ([`fejer`], [`quadrature`]),
//! * Selberg square weights and the expanded divisor-pair bound ([`selberg`]),
//! * the convolution decomposition `g = h * g1` with its correction terms and
//!   progression discrepancy scans ([`decomposition`]),
//! * the three-series criterion and empirical limit distributions
//!   ([`distribution`]).
//!
//! All operations are deterministic: internal parallelism only ever maps
//! independent work items into position-indexed buffers that are reduced
//! sequentially, so results are byte-identical for any thread count.

pub mod additive;
pub mod concentration;
pub mod decomposition;
pub mod dispersion;
pub mod distribution;
pub mod error;
pub mod fejer;
pub mod quadrature;
pub mod selberg;
pub mod sieve;
pub mod sums;
pub mod unitdisc;

pub use additive::{AdditiveFunctionSpec, Kind, PrimeRule};
pub use concentration::{ConcentrationReport, Population};
pub use decomposition::DecompositionTables;
pub use dispersion::{DispersionResult, Functional, TheoremRatioReport};
pub use error::Error;
pub use fejer::FejerEvaluation;
pub use selberg::SelbergWeights;
pub use sieve::{FactorTable, PrimePowerFactorization};
pub use unitdisc::UnitDiscFunction;

/// Crate result alias.
pub type Result<T> = std::result::Result<T, Error>;
