//! Seeded randomized searches for ACD codes.
//!
//! # Reproducibility
//!
//! All randomness comes from SplitMix64 (state `s`; each step sets
//! `s += 0x9E3779B97F4A7C15` and outputs the usual two xor-shift-multiply
//! rounds of the new state). Trial `t` of a search with seed `S` uses a fresh
//! generator with initial state `S ^ t`, so trials are independent and can be
//! evaluated in any order.
//!
//! * [`random_search`]: a trial draws the `k × n` generator entries in
//!   row-major order, 32 entries per 64-bit output, two bits per entry from
//!   the least significant end. The two bits are the element code `a + 2b`.
//! * [`column_scaling_search`]: for `n ≤ 12` trial `t` is the `t`-th vector
//!   of `{1, ω, ω²}ⁿ` in lexicographic order (`1 < ω < ω²`, column 0 most
//!   significant). For larger `n`, trial 0 is all-ones and trial `t > 0`
//!   picks column `j`'s scale as `UNITS[x_j % 3]` where `x_j` is the `j`-th
//!   output of the trial generator.
//!
//! The accepted trial is always the one with the smallest index, whatever the
//! evaluation order.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use crate::additive_code::{AdditiveCode, Form};
use crate::error::{Error, Result};
use crate::gf4::{F4Vector, Gf4};
use crate::DEFAULT_ENUMERATION_LIMIT;

/// Column-scaling space size up to which scalings are enumerated.
pub const SCALING_ENUMERATION_MAX_N: usize = 12;

/// Generator for trial `trial` of a search seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> SplitMix64 {
    SplitMix64::from_seed((seed ^ trial).to_le_bytes())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub k: usize,
    pub d_min: usize,
    pub form: Form,
    pub seed: u64,
    pub max_trials: u64,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k > 2 * self.n {
            return Err(Error::InvalidInput(format!(
                "need 0 < k <= 2n, got n={} k={}",
                self.n, self.k
            )));
        }
        if self.d_min > self.n {
            return Err(Error::InvalidInput(format!(
                "target distance {} exceeds length {}",
                self.d_min, self.n
            )));
        }
        if self.max_trials == 0 {
            return Err(Error::InvalidInput("max_trials must be positive".into()));
        }
        if self.k > DEFAULT_ENUMERATION_LIMIT as usize {
            return Err(Error::LimitExceeded {
                what: "binary dimension k",
                value: self.k,
                limit: DEFAULT_ENUMERATION_LIMIT as usize,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub found: Option<AdditiveCode>,
    /// Index of the accepted trial plus one, or the number of trials run.
    pub trials_used: u64,
    pub seed: u64,
    /// Column scales of the accepted code (column-scaling search only).
    pub scaling: Option<Vec<Gf4>>,
}

impl PartialEq for SearchResult {
    fn eq(&self, other: &Self) -> bool {
        let same_code = match (&self.found, &other.found) {
            (None, None) => true,
            (Some(a), Some(b)) => a.generator() == b.generator(),
            _ => false,
        };
        same_code
            && self.trials_used == other.trials_used
            && self.seed == other.seed
            && self.scaling == other.scaling
    }
}

impl SearchResult {
    pub fn is_found(&self) -> bool {
        self.found.is_some()
    }
}

/// The `k × n` matrix drawn by trial `trial`, before rank rejection.
pub fn draw_generator(n: usize, k: usize, seed: u64, trial: u64) -> Vec<F4Vector> {
    let mut rng = trial_rng(seed, trial);
    let mut word = 0u64;
    let mut left = 0;
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let mut row = F4Vector::zeros(n);
        for j in 0..n {
            if left == 0 {
                word = rng.next_u64();
                left = 32;
            }
            row.set(j, Gf4::from_code((word & 3) as u8));
            word >>= 2;
            left -= 1;
        }
        rows.push(row);
    }
    rows
}

fn evaluate_trial(cfg: &SearchConfig, trial: u64) -> Option<AdditiveCode> {
    let rows = draw_generator(cfg.n, cfg.k, cfg.seed, trial);
    let code = AdditiveCode::from_generator(cfg.n, &rows).ok()?;
    if code.k() != cfg.k || !code.is_acd(cfg.form) {
        return None;
    }
    code.has_min_distance_at_least(cfg.d_min, DEFAULT_ENUMERATION_LIMIT)
        .ok()?
        .then_some(code)
}

/// Draws random generators until one has 2-rank `k`, is ACD for `cfg.form`
/// and has minimum distance at least `cfg.d_min`. Deterministic per seed.
pub fn random_search(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    for t in 0..cfg.max_trials {
        if let Some(code) = evaluate_trial(cfg, t) {
            return Ok(SearchResult {
                found: Some(code),
                trials_used: t + 1,
                seed: cfg.seed,
                scaling: None,
            });
        }
    }
    Ok(SearchResult {
        found: None,
        trials_used: cfg.max_trials,
        seed: cfg.seed,
        scaling: None,
    })
}

/// [`random_search`] with trials evaluated in parallel, `chunk` at a time.
/// Returns exactly what the sequential search returns.
pub fn random_search_parallel(cfg: &SearchConfig, chunk: u64) -> Result<SearchResult> {
    cfg.validate()?;
    let chunk = chunk.max(1);
    let mut start = 0;
    while start < cfg.max_trials {
        let end = (start + chunk).min(cfg.max_trials);
        let hit = (start..end)
            .into_par_iter()
            .filter_map(|t| evaluate_trial(cfg, t).map(|c| (t, c)))
            .min_by_key(|(t, _)| *t);
        if let Some((t, code)) = hit {
            return Ok(SearchResult {
                found: Some(code),
                trials_used: t + 1,
                seed: cfg.seed,
                scaling: None,
            });
        }
        start = end;
    }
    Ok(SearchResult {
        found: None,
        trials_used: cfg.max_trials,
        seed: cfg.seed,
        scaling: None,
    })
}

/// Column scales tried by trial `trial`; see the module docs.
pub fn scaling_for_trial(n: usize, seed: u64, trial: u64) -> Vec<Gf4> {
    if n <= SCALING_ENUMERATION_MAX_N {
        let mut digits = vec![Gf4::ONE; n];
        let mut t = trial;
        for j in (0..n).rev() {
            digits[j] = Gf4::UNITS[(t % 3) as usize];
            t /= 3;
        }
        digits
    } else if trial == 0 {
        vec![Gf4::ONE; n]
    } else {
        let mut rng = trial_rng(seed, trial);
        (0..n).map(|_| Gf4::UNITS[(rng.next_u64() % 3) as usize]).collect()
    }
}

/// Multiplies columns of `c` by units until the result is ACD for `form`.
/// The first candidate is the identity scaling. Scaling by units keeps `n`,
/// `k` and the weight distribution.
pub fn column_scaling_search(
    c: &AdditiveCode,
    form: Form,
    seed: u64,
    max_trials: u64,
) -> Result<SearchResult> {
    if max_trials == 0 {
        return Err(Error::InvalidInput("max_trials must be positive".into()));
    }
    let n = c.n();
    let trials = if n <= SCALING_ENUMERATION_MAX_N {
        max_trials.min(3u64.pow(n as u32))
    } else {
        max_trials
    };
    for t in 0..trials {
        let scales = scaling_for_trial(n, seed, t);
        let scaled = c.scale_columns(&scales)?;
        if scaled.is_acd(form) {
            return Ok(SearchResult {
                found: Some(scaled),
                trials_used: t + 1,
                seed,
                scaling: Some(scales),
            });
        }
    }
    Ok(SearchResult {
        found: None,
        trials_used: trials,
        seed,
        scaling: None,
    })
}
