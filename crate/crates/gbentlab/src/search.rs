//! Exhaustive and seeded-random sweeps over truth-table space, filtered by a
//! property predicate. Powers the `search` subcommand and the census-style
//! verification runs.
//!
//! Sweeps are deterministic: exhaustive mode scans table indices in order,
//! random mode derives each sample's generator from (seed, index), so the
//! outcome is identical for any thread budget.

use crate::gbf::{Domain, Gbf};
use crate::par;
use crate::rng::SplitMix64;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    /// The sweep would enumerate more tables than the configured budget.
    BudgetExceeded { required: u128, budget: u64 },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::BudgetExceeded { required, budget } => {
                write!(f, "sweep needs {} tables, budget allows {}", required, budget)
            }
        }
    }
}

impl std::error::Error for SearchError {}

/// Result of a sweep: how many tables were scanned, how many matched, and
/// the first `max_matches` matching tables in scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub scanned: u64,
    pub count: u64,
    pub matches: Vec<Vec<u16>>,
}

fn table_from_index(index: u64, n: u32, k: u32) -> Vec<u16> {
    let mask = (1u64 << k) - 1;
    (0..1usize << n).map(|x| ((index >> (k * x as u32)) & mask) as u16).collect()
}

/// Scans every table on `n` inputs at level `2^k` in index order.
///
/// Needs `k * 2^n < 64` and `2^(k 2^n)` within the budget; otherwise the
/// sweep is refused. The predicate must be pure.
pub fn search_exhaustive<F>(
    n: u32,
    k: u32,
    domain: &Domain,
    budget: u64,
    threads: usize,
    max_matches: usize,
    check: F,
) -> Result<SearchOutcome, SearchError>
where
    F: Fn(&Gbf) -> bool + Sync,
{
    let bits = k as u64 * (1u64 << n);
    let required: u128 = if bits >= 64 { u128::MAX } else { 1u128 << bits };
    if required > budget as u128 {
        return Err(SearchError::BudgetExceeded { required, budget });
    }
    let total = required as u64;
    let partials = par::map_ranges(threads, total, |range| {
        let mut count = 0u64;
        let mut matches = Vec::new();
        for idx in range {
            let table = table_from_index(idx, n, k);
            let f = Gbf::new(n, k, domain.clone(), table)
                .expect("enumerated tables are well-formed");
            if check(&f) {
                count += 1;
                if matches.len() < max_matches {
                    matches.push(f.table().to_vec());
                }
            }
        }
        (count, matches)
    });
    let mut outcome = SearchOutcome { scanned: total, count: 0, matches: Vec::new() };
    for (count, matches) in partials {
        outcome.count += count;
        for m in matches {
            if outcome.matches.len() < max_matches {
                outcome.matches.push(m);
            }
        }
    }
    Ok(outcome)
}

/// Draws `samples` independent tables; sample `i` comes from a generator
/// derived from `(seed, i)`, so results do not depend on the thread budget.
pub fn search_random<F>(
    n: u32,
    k: u32,
    domain: &Domain,
    samples: u64,
    seed: u64,
    threads: usize,
    max_matches: usize,
    check: F,
) -> SearchOutcome
where
    F: Fn(&Gbf) -> bool + Sync,
{
    let partials = par::map_ranges(threads, samples, |range| {
        let mut count = 0u64;
        let mut matches = Vec::new();
        for i in range {
            let f = sampled_gbf(n, k, domain, seed, i);
            if check(&f) {
                count += 1;
                if matches.len() < max_matches {
                    matches.push(f.table().to_vec());
                }
            }
        }
        (count, matches)
    });
    let mut outcome = SearchOutcome { scanned: samples, count: 0, matches: Vec::new() };
    for (count, matches) in partials {
        outcome.count += count;
        for m in matches {
            if outcome.matches.len() < max_matches {
                outcome.matches.push(m);
            }
        }
    }
    outcome
}

/// The `i`-th random table of a seeded sweep.
pub fn sampled_gbf(n: u32, k: u32, domain: &Domain, seed: u64, i: u64) -> Gbf {
    let mut rng = SplitMix64::new(seed ^ i.wrapping_mul(0x9e3779b97f4a7c15));
    crate::gbf::random_gbf(n, k, domain.clone(), &mut rng)
}
