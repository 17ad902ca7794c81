//! Smallest-prime-factor tables and the elementary arithmetic functions on
//! top of them.
//!
//! A [`FactorTable`] stores, for every `2 <= n <= limit`, the smallest prime
//! dividing `n` (`spf[n] = n` exactly when `n` is prime). Construction is a
//! segmented sieve: base primes up to `sqrt(limit)` mark their multiples
//! inside fixed-size segments, ascending prime order, first write wins.
//! Segments are independent, so they are sieved in parallel; the table is
//! bit-identical for any thread count.
//!
//! Entries are 32-bit cells, which makes `limit <= u32::MAX` a hard ceiling.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::error::Error;
use crate::Result;

/// Magic bytes prefixing a serialized table.
pub const CACHE_MAGIC: &[u8; 6] = b"SPLF1\0";

/// Default memory budget for table construction (4 GiB of 32-bit cells).
pub const DEFAULT_MEMORY_BUDGET: u64 = 4 << 30;

const SEGMENT: usize = 1 << 20;

/// Smallest-prime-factor table for `2..=limit`.
#[derive(Clone)]
pub struct FactorTable {
    limit: u64,
    /// Indexed by `n`; entries 0 and 1 are unused and hold 0.
    spf: Vec<u32>,
}

/// Canonical factorization: ordered `(prime, exponent)` pairs, empty for 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerFactorization {
    pub factors: Vec<(u64, u32)>,
}

impl PrimePowerFactorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, k)| p.pow(k))
            .product::<u64>()
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

impl FactorTable {
    /// Builds the table for `2..=limit` under the default memory budget.
    pub fn build(limit: u64) -> Result<Self> {
        Self::build_with_budget(limit, DEFAULT_MEMORY_BUDGET)
    }

    /// Builds the table with an explicit memory budget in bytes.
    pub fn build_with_budget(limit: u64, budget_bytes: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::invalid(format!("table limit must be >= 2, got {limit}")));
        }
        if limit > u32::MAX as u64 {
            return Err(Error::invalid(format!(
                "table limit {limit} exceeds the 32-bit cell ceiling {}",
                u32::MAX
            )));
        }
        let bytes = 4 * (limit + 1);
        if bytes > budget_bytes {
            return Err(Error::resource(format!(
                "table of limit {limit} needs {bytes} bytes, budget is {budget_bytes}"
            )));
        }

        let root = (limit as f64).sqrt() as u64 + 1;
        let base_primes = simple_primes(root.min(limit));

        let mut spf = vec![0u32; (limit + 1) as usize];
        spf.par_chunks_mut(SEGMENT).enumerate().for_each(|(ci, chunk)| {
            let lo = ci * SEGMENT;
            let hi = lo + chunk.len();
            for &p in &base_primes {
                let p = p as usize;
                if p * p >= hi {
                    break;
                }
                let mut m = p * p;
                if m < lo {
                    m = lo.div_ceil(p) * p;
                }
                while m < hi {
                    let cell = &mut chunk[m - lo];
                    if *cell == 0 {
                        *cell = p as u32;
                    }
                    m += p;
                }
            }
            // Anything unmarked has no prime factor <= sqrt(limit): prime.
            for i in 0..chunk.len() {
                let n = lo + i;
                if n >= 2 && chunk[i] == 0 {
                    chunk[i] = n as u32;
                }
            }
        });

        Ok(FactorTable { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `n`, `2 <= n <= limit`.
    #[inline]
    pub fn spf(&self, n: u64) -> u64 {
        debug_assert!((2..=self.limit).contains(&n));
        self.spf[n as usize] as u64
    }

    #[inline]
    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.spf[n as usize] as u64 == n
    }

    fn check_bound(&self, n: u64, what: &str) -> Result<()> {
        if n > self.limit {
            return Err(Error::invalid(format!(
                "{what} {n} exceeds table limit {}",
                self.limit
            )));
        }
        Ok(())
    }

    /// Primes `p` with `lo <= p <= hi`, ascending.
    pub fn primes_in(&self, lo: u64, hi: u64) -> Result<Vec<u64>> {
        if lo < 2 || lo > hi {
            return Err(Error::invalid(format!("bad prime range [{lo}, {hi}]")));
        }
        self.check_bound(hi, "range end")?;
        Ok((lo..=hi).filter(|&n| self.spf[n as usize] as u64 == n).collect())
    }

    /// Primes `p <= x`, ascending. Empty for `x < 2`.
    pub fn primes_upto(&self, x: u64) -> Result<Vec<u64>> {
        if x < 2 {
            return Ok(Vec::new());
        }
        self.primes_in(2, x)
    }

    /// Canonical prime-power factorization; `factorize(1)` is empty.
    pub fn factorize(&self, n: u64) -> Result<PrimePowerFactorization> {
        if n == 0 {
            return Err(Error::invalid("cannot factorize 0"));
        }
        self.check_bound(n, "argument")?;
        let mut factors = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut k = 0u32;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            factors.push((p, k));
        }
        Ok(PrimePowerFactorization { factors })
    }

    /// Euler totient via the factorization product formula.
    pub fn euler_phi(&self, n: u64) -> Result<u64> {
        let f = self.factorize(n)?;
        Ok(f.factors
            .iter()
            .map(|&(p, k)| p.pow(k - 1) * (p - 1))
            .product())
    }

    /// `pi(x)`: number of primes not exceeding `x`.
    pub fn prime_count(&self, x: u64) -> Result<u64> {
        self.check_bound(x, "argument")?;
        if x < 2 {
            return Ok(0);
        }
        Ok((2..=x).filter(|&n| self.spf[n as usize] as u64 == n).count() as u64)
    }

    /// Serializes the table: magic, limit as LE u64, then `spf[2..=limit]`
    /// as LE u32 cells.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = BufWriter::new(File::create(path)?);
        out.write_all(CACHE_MAGIC)?;
        out.write_all(&self.limit.to_le_bytes())?;
        for &v in &self.spf[2..] {
            out.write_all(&v.to_le_bytes())?;
        }
        out.flush()?;
        Ok(())
    }

    /// Loads a table written by [`FactorTable::save`], rejecting bad magic or
    /// a truncated payload.
    pub fn load(path: &Path) -> Result<Self> {
        let mut input = BufReader::new(File::open(path)?);
        let mut magic = [0u8; 6];
        input
            .read_exact(&mut magic)
            .map_err(|_| Error::CacheFormat("file shorter than magic".into()))?;
        if &magic != CACHE_MAGIC {
            return Err(Error::CacheFormat(format!("bad magic {magic:?}")));
        }
        let mut limit_bytes = [0u8; 8];
        input
            .read_exact(&mut limit_bytes)
            .map_err(|_| Error::CacheFormat("file shorter than header".into()))?;
        let limit = u64::from_le_bytes(limit_bytes);
        if limit < 2 || limit > u32::MAX as u64 {
            return Err(Error::CacheFormat(format!("implausible limit {limit}")));
        }
        let cells = (limit - 1) as usize;
        let mut spf = vec![0u32; (limit + 1) as usize];
        let mut buf = vec![0u8; 4 * cells.min(1 << 20)];
        let mut filled = 0usize;
        while filled < cells {
            let want = (cells - filled).min(1 << 20);
            let bytes = &mut buf[..4 * want];
            input
                .read_exact(bytes)
                .map_err(|_| Error::CacheFormat("truncated payload".into()))?;
            for i in 0..want {
                spf[2 + filled + i] =
                    u32::from_le_bytes(bytes[4 * i..4 * i + 4].try_into().unwrap());
            }
            filled += want;
        }
        let mut trailing = [0u8; 1];
        if input.read(&mut trailing)? != 0 {
            return Err(Error::CacheFormat("trailing bytes after payload".into()));
        }
        Ok(FactorTable { limit, spf })
    }
}

/// Plain sieve of Eratosthenes for the base primes.
fn simple_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for n in 2..=limit {
        if !composite[n] {
            primes.push(n as u64);
            let mut m = n * n;
            while m <= limit {
                composite[m] = true;
                m += n;
            }
        }
    }
    primes
}

/// gcd over u64, used by modules that test coprimality against small moduli.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
