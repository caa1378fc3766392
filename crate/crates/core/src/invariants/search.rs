//! Minimization over total orders, in parallel with lexicographic tie-breaking.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{is_minimal_resolution, l_length, obstruction, preserved_size};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::oracle::{projdim_oracle, OracleConfig};
use crate::orders::{
    all_order_words, courts_first_count, courts_first_words, factorial, possible_courts,
    OrderedIdeal, DEFAULT_MAX_EXHAUSTIVE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    #[default]
    Exhaustive,
    CourtsFirst,
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SearchMode::Exhaustive),
            "courts-first" => Ok(SearchMode::CourtsFirst),
            other => Err(Error::InvalidContext(format!(
                "unknown search mode `{other}`; use exhaustive or courts-first"
            ))),
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::CourtsFirst => "courts-first",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    /// Largest μ enumerated exhaustively without `force`.
    pub max_exhaustive: usize,
    pub force: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            mode: SearchMode::Exhaustive,
            max_exhaustive: DEFAULT_MAX_EXHAUSTIVE,
            force: false,
        }
    }
}

impl SearchConfig {
    pub fn exhaustive() -> Self {
        Self::default()
    }

    pub fn courts_first() -> Self {
        Self {
            mode: SearchMode::CourtsFirst,
            ..Self::default()
        }
    }
}

/// The minimum of an order invariant over the searched orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub value: usize,
    /// Lexicographically least minimizing order (0-based).
    pub witness: Vec<usize>,
    /// Whether the searched space covers every order; otherwise `value` is
    /// an upper bound.
    pub exact: bool,
    pub orders_searched: usize,
}

impl SearchOutcome {
    pub fn witness_word(&self) -> Vec<usize> {
        self.witness.iter().map(|g| g + 1).collect()
    }

    pub fn witness_order(&self, ideal: &Arc<MonomialIdeal>) -> OrderedIdeal {
        OrderedIdeal::new(ideal.clone(), self.witness.clone()).expect("searched permutation")
    }
}

/// The order words of the configured space, lexicographically sorted, and
/// whether they are all μ! orders.
pub fn order_space(ideal: &MonomialIdeal, config: &SearchConfig) -> Result<(Vec<Vec<usize>>, bool)> {
    let mu = ideal.mu();
    match config.mode {
        SearchMode::Exhaustive => {
            if mu > config.max_exhaustive && !config.force {
                return Err(Error::ThresholdExceeded {
                    count: mu,
                    threshold: config.max_exhaustive,
                });
            }
            Ok((all_order_words(mu).collect(), true))
        }
        SearchMode::CourtsFirst => {
            let words: Vec<Vec<usize>> = courts_first_words(ideal).collect();
            Ok((words, courts_first_count(ideal) == factorial(mu)))
        }
    }
}

/// Minimizes `f` over the order space. Ties go to the earliest word.
pub fn minimize_over_orders<F>(ideal: &Arc<MonomialIdeal>, config: &SearchConfig, f: F) -> Result<SearchOutcome>
where
    F: Fn(&OrderedIdeal) -> usize + Sync,
{
    ideal.try_table()?;
    let (words, exact) = order_space(ideal, config)?;
    let (value, index) = words
        .par_iter()
        .enumerate()
        .map(|(k, w)| {
            let o = OrderedIdeal::new(ideal.clone(), w.clone()).expect("permutation");
            (f(&o), k)
        })
        .min()
        .expect("at least one order");
    log::debug!("searched {} orders, minimum {value}", words.len());
    Ok(SearchOutcome {
        value,
        witness: words[index].clone(),
        exact,
        orders_searched: words.len(),
    })
}

/// `TObsL(I)`: the least obstruction over the searched orders.
pub fn total_obstruction(ideal: &Arc<MonomialIdeal>, config: &SearchConfig) -> Result<SearchOutcome> {
    let mut out = minimize_over_orders(ideal, config, obstruction)?;
    // the obstruction is never negative, so reaching zero is exact anywhere
    out.exact |= out.value == 0;
    Ok(out)
}

/// `L(I)`: the least Lyubeznik length over the searched orders.
pub fn min_l_length(ideal: &Arc<MonomialIdeal>, config: &SearchConfig) -> Result<SearchOutcome> {
    minimize_over_orders(ideal, config, l_length)
}

/// `ps(I)`: the least preserved size over the searched orders.
pub fn min_preserved_size(ideal: &Arc<MonomialIdeal>, config: &SearchConfig) -> Result<SearchOutcome> {
    minimize_over_orders(ideal, config, preserved_size)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyubeznikVerdict {
    pub lyubeznik: bool,
    /// `false` only when a heuristic search found no minimal order.
    pub definitive: bool,
    /// An order giving a minimal resolution, when one was found (0-based).
    pub witness: Option<Vec<usize>>,
}

pub fn is_lyubeznik(ideal: &Arc<MonomialIdeal>, config: &SearchConfig) -> Result<LyubeznikVerdict> {
    let t = total_obstruction(ideal, config)?;
    let lyubeznik = t.value == 0;
    Ok(LyubeznikVerdict {
        lyubeznik,
        definitive: t.exact,
        witness: lyubeznik.then_some(t.witness),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlmostVerdict {
    pub almost: bool,
    pub l: usize,
    pub projdim: usize,
    pub definitive: bool,
}

/// `L(I) = projdim(R/I)`. Since `projdim ≤ L(I,≺)` for every order, a
/// heuristic search that reaches `projdim` is also conclusive.
pub fn is_almost_lyubeznik(
    ideal: &Arc<MonomialIdeal>,
    config: &SearchConfig,
    oracle: &OracleConfig,
) -> Result<AlmostVerdict> {
    let projdim = projdim_oracle(ideal, oracle)?;
    let l = min_l_length(ideal, config)?;
    let almost = l.value == projdim;
    Ok(AlmostVerdict {
        almost,
        l: l.value,
        projdim,
        definitive: almost || l.exact,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TotallyVerdict {
    pub totally: bool,
    /// Lexicographically least order whose resolution is not minimal (0-based).
    pub counterexample: Option<Vec<usize>>,
}

/// Every order gives a minimal resolution. Always searches all orders.
pub fn is_totally_lyubeznik(ideal: &Arc<MonomialIdeal>, config: &SearchConfig) -> Result<TotallyVerdict> {
    let exhaustive = SearchConfig {
        mode: SearchMode::Exhaustive,
        ..*config
    };
    ideal.try_table()?;
    let (words, _) = order_space(ideal, &exhaustive)?;
    let bad = words.par_iter().position_first(|w| {
        let o = OrderedIdeal::new(ideal.clone(), w.clone()).expect("permutation");
        !is_minimal_resolution(&o)
    });
    Ok(TotallyVerdict {
        totally: bad.is_none(),
        counterexample: bad.map(|k| words[k].clone()),
    })
}

/// Empirical check that every courts-first order gives a minimal resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CourtsAudit {
    /// Possible courts (0-based).
    pub possible_courts: Vec<usize>,
    pub orders_checked: usize,
    pub all_minimal: bool,
    /// Least courts-first order whose resolution is not minimal (0-based).
    pub counterexample: Option<Vec<usize>>,
}

pub fn audit_courts_first(ideal: &Arc<MonomialIdeal>) -> Result<CourtsAudit> {
    ideal.try_table()?;
    let words: Vec<Vec<usize>> = courts_first_words(ideal).collect();
    let bad = words.par_iter().position_first(|w| {
        let o = OrderedIdeal::new(ideal.clone(), w.clone()).expect("permutation");
        !is_minimal_resolution(&o)
    });
    if let Some(k) = bad {
        log::info!("courts-first order {:?} is not minimal", words[k]);
    }
    Ok(CourtsAudit {
        possible_courts: possible_courts(ideal).to_vec(),
        orders_checked: words.len(),
        all_minimal: bad.is_none(),
        counterexample: bad.map(|k| words[k].clone()),
    })
}
