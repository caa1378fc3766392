//! Total orders on the generators and the order spaces searched over.

use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::subsets::GenSet;

/// Default bound on μ for exhaustive enumeration of all μ! orders.
pub const DEFAULT_MAX_EXHAUSTIVE: usize = 8;

/// An ideal together with a total order on its generators.
///
/// `order()[k]` is the (0-based) generator index of the k-th smallest
/// generator; `rank(g)` is the inverse.
#[derive(Debug, Clone)]
pub struct OrderedIdeal {
    ideal: Arc<MonomialIdeal>,
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl OrderedIdeal {
    /// The listing order m1 < m2 < ... < mμ.
    pub fn identity(ideal: Arc<MonomialIdeal>) -> Self {
        let order: Vec<usize> = (0..ideal.mu()).collect();
        Self {
            rank: order.clone(),
            order,
            ideal,
        }
    }

    pub fn new(ideal: Arc<MonomialIdeal>, order: Vec<usize>) -> Result<Self> {
        let mu = ideal.mu();
        if order.len() != mu {
            return Err(Error::InvalidOrder(format!(
                "expected {mu} entries, got {}",
                order.len()
            )));
        }
        let mut rank = vec![usize::MAX; mu];
        for (pos, &g) in order.iter().enumerate() {
            if g >= mu {
                return Err(Error::InvalidOrder(format!("index {} out of range", g + 1)));
            }
            if rank[g] != usize::MAX {
                return Err(Error::InvalidOrder(format!("index {} repeated", g + 1)));
            }
            rank[g] = pos;
        }
        Ok(Self { ideal, order, rank })
    }

    /// Parses a 1-based comma-separated permutation such as `3,1,2`.
    pub fn parse(ideal: Arc<MonomialIdeal>, text: &str) -> Result<Self> {
        let order = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i >= 1)
                    .map(|i| i - 1)
                    .ok_or_else(|| Error::InvalidOrder(format!("`{}` is not a 1-based index", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ideal, order)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn ideal_arc(&self) -> &Arc<MonomialIdeal> {
        &self.ideal
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 1-based permutation word, as printed in reports.
    pub fn word(&self) -> Vec<usize> {
        self.order.iter().map(|g| g + 1).collect()
    }

    pub fn rank(&self, g: usize) -> usize {
        self.rank[g]
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// The least element of `set` under the order.
    pub fn min_of(&self, set: GenSet) -> Option<usize> {
        set.iter().min_by_key(|&g| self.rank[g])
    }

    /// Elements of `set` in increasing order.
    pub fn sorted(&self, set: GenSet) -> Vec<usize> {
        let mut v = set.to_vec();
        v.sort_by_key(|&g| self.rank[g]);
        v
    }

    /// Generators strictly below `g`.
    pub fn predecessors(&self, g: usize) -> GenSet {
        self.order[..self.rank[g]].iter().copied().collect()
    }
}

/// The listing order.
pub fn identity_order(ideal: Arc<MonomialIdeal>) -> OrderedIdeal {
    OrderedIdeal::identity(ideal)
}

/// The least element of `set` under the order of `ordered`.
pub fn min_of(set: GenSet, ordered: &OrderedIdeal) -> Result<usize> {
    ordered.ideal().check_set(set)?;
    ordered
        .min_of(set)
        .ok_or_else(|| Error::Precondition("min of an empty set".into()))
}

fn check_threshold(mu: usize, max_exhaustive: usize, force: bool) -> Result<()> {
    if mu > max_exhaustive && !force {
        Err(Error::ThresholdExceeded {
            count: mu,
            threshold: max_exhaustive,
        })
    } else {
        Ok(())
    }
}

/// All μ! permutation words (0-based) in lexicographic order.
pub fn all_order_words(mu: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..mu).permutations(mu)
}

/// Every total order, in lexicographic order of the permutation word.
pub fn all_orders(
    ideal: &Arc<MonomialIdeal>,
    max_exhaustive: usize,
    force: bool,
) -> Result<impl Iterator<Item = OrderedIdeal> + '_> {
    check_threshold(ideal.mu(), max_exhaustive, force)?;
    Ok(all_order_words(ideal.mu())
        .map(move |w| OrderedIdeal::new(ideal.clone(), w).expect("permutation")))
}

/// Generators `u` admitting some `D` with `u ∉ D` and `u | lcm(D)`.
///
/// By monotonicity of lcm, `D = G(I) \ {u}` is a witness whenever any is.
pub fn possible_courts(ideal: &MonomialIdeal) -> GenSet {
    let all = ideal.all_generators();
    let table = ideal.table();
    all.iter()
        .filter(|&u| table.divides_lcm(u, all.without(u)))
        .filter(|&u| court_witness(ideal, u).is_some())
        .collect()
}

/// A smallest set `D ∌ u` with `u | lcm(D)`, ties broken canonically.
pub fn court_witness(ideal: &MonomialIdeal, u: usize) -> Option<GenSet> {
    let table = ideal.table();
    let others = ideal.all_generators().without(u);
    let mut best: Option<GenSet> = None;
    for d in others.subsets().filter(|d| !d.is_empty()) {
        if table.divides_lcm(u, d)
            && best.is_none_or(|b| d.canonical_cmp(&b) == std::cmp::Ordering::Less)
        {
            best = Some(d);
        }
    }
    best
}

/// Order words placing every possible court before every other generator,
/// lexicographic in the word.
pub fn courts_first_words(ideal: &MonomialIdeal) -> impl Iterator<Item = Vec<usize>> {
    let courts = possible_courts(ideal);
    let head: Vec<usize> = courts.to_vec();
    let tail: Vec<usize> = ideal.all_generators().difference(courts).to_vec();
    let tail_len = tail.len();
    let head_len = head.len();
    head.into_iter()
        .permutations(head_len)
        .cartesian_product(tail.into_iter().permutations(tail_len).collect::<Vec<_>>())
        .map(|(mut h, t)| {
            h.extend(t);
            h
        })
}

/// Number of orders in the courts-first space.
pub fn courts_first_count(ideal: &MonomialIdeal) -> u128 {
    let p = possible_courts(ideal).len();
    factorial(p) * factorial(ideal.mu() - p)
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// The courts-first heuristic order space.
pub fn courts_first_orders(ideal: &Arc<MonomialIdeal>) -> impl Iterator<Item = OrderedIdeal> + '_ {
    courts_first_words(ideal)
        .map(move |w| OrderedIdeal::new(ideal.clone(), w).expect("permutation"))
}
