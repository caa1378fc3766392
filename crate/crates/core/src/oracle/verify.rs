use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{homology_dims, lcm_lattice, OracleConfig};
use crate::complex::{lyubeznik_complex, LyubeznikComplex};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::orders::OrderedIdeal;
use crate::subsets::{GenSet, SubsetTable};

/// Outcome of `∂∘∂ = 0`, one entry per face size `t ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub by_size: Vec<(usize, bool)>,
}

impl ChainCheck {
    pub fn passed(&self) -> bool {
        self.by_size.iter().all(|&(_, ok)| ok)
    }
}

/// Reduced homology of the faces below each lcm-lattice multidegree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionCheck {
    pub degrees: Vec<(Monomial, Vec<usize>)>,
}

impl ResolutionCheck {
    pub fn passed(&self) -> bool {
        self.degrees
            .iter()
            .all(|(_, dims)| dims.iter().all(|&d| d == 0))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Monomial> {
        self.degrees
            .iter()
            .filter(|(_, dims)| dims.iter().any(|&d| d != 0))
            .map(|(a, _)| a)
    }
}

fn quotient(table: &SubsetTable, big: GenSet, small: GenSet) -> Vec<u32> {
    table
        .lcm_exponents(big)
        .iter()
        .zip(table.lcm_exponents(small))
        .map(|(a, b)| a - b)
        .collect()
}

/// Applies the monomial-coefficient differential twice to every face and
/// checks that all coefficients cancel.
fn boundary_squared(
    faces: &[GenSet],
    contains: impl Fn(GenSet) -> bool,
    rank: &[usize],
    table: &SubsetTable,
) -> ChainCheck {
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut ok = vec![true; top + 1];
    for &face in faces.iter().filter(|f| f.len() >= 2) {
        let mut acc: HashMap<(GenSet, Vec<u32>), i64> = HashMap::new();
        let mut outer = face.to_vec();
        outer.sort_by_key(|&g| rank[g]);
        for (j, &g) in outer.iter().enumerate() {
            let mid = face.without(g);
            if !contains(mid) {
                continue;
            }
            let c1 = quotient(table, face, mid);
            let mut inner = mid.to_vec();
            inner.sort_by_key(|&h| rank[h]);
            for (k, &h) in inner.iter().enumerate() {
                let low = mid.without(h);
                if !contains(low) {
                    continue;
                }
                let coeff: Vec<u32> = c1
                    .iter()
                    .zip(quotient(table, mid, low))
                    .map(|(a, b)| a + b)
                    .collect();
                let sign = if (j + k) % 2 == 0 { 1 } else { -1 };
                *acc.entry((low, coeff)).or_default() += sign;
            }
        }
        if acc.values().any(|&v| v != 0) {
            ok[face.len()] = false;
        }
    }
    ChainCheck {
        by_size: (2..=top).map(|t| (t, ok[t])).collect(),
    }
}

fn order_ranks(ordered: &OrderedIdeal) -> Vec<usize> {
    (0..ordered.ideal().mu()).map(|g| ordered.rank(g)).collect()
}

/// `∂∘∂ = 0` on the subcomplex of the Taylor resolution spanned by the
/// admissible symbols under the order.
pub fn verify_chain_complex(ordered: &OrderedIdeal) -> ChainCheck {
    let complex = lyubeznik_complex(ordered);
    boundary_squared(
        &complex.faces,
        |s| complex.contains(s),
        &order_ranks(ordered),
        ordered.ideal().table(),
    )
}

/// `∂∘∂ = 0` on the full Taylor resolution.
pub fn verify_taylor_chain_complex(ideal: &MonomialIdeal) -> ChainCheck {
    let table = ideal.table();
    let faces: Vec<GenSet> = table.all_sets().collect();
    let identity: Vec<usize> = (0..ideal.mu()).collect();
    boundary_squared(&faces, |_| true, &identity, table)
}

/// Exactness of the Lyubeznik resolution, multidegree by multidegree: the
/// faces whose lcm divides `a` must form an acyclic complex for every `a`
/// in the lcm lattice.
pub fn verify_resolution(ordered: &OrderedIdeal, config: &OracleConfig) -> Result<ResolutionCheck> {
    let ideal = ordered.ideal();
    config.check(ideal)?;
    let complex = lyubeznik_complex(ordered);
    Ok(check_acyclic(&complex, config))
}

pub(crate) fn check_acyclic(complex: &LyubeznikComplex, config: &OracleConfig) -> ResolutionCheck {
    let ideal = complex.order.ideal();
    let table = ideal.table();
    let rank = order_ranks(&complex.order);
    let lattice: Vec<(Monomial, GenSet)> = lcm_lattice(ideal)
        .into_iter()
        .map(|(a, sets)| (a, table.divisors(sets[0])))
        .collect();
    let degrees = lattice
        .par_iter()
        .map(|(a, below)| {
            let mut by_size: Vec<Vec<GenSet>> = vec![Vec::new(); below.len() + 1];
            for &f in complex.faces.iter().filter(|f| f.is_subset_of(*below)) {
                by_size[f.len()].push(f);
            }
            while by_size.last().is_some_and(Vec::is_empty) {
                by_size.pop();
            }
            (a.clone(), homology_dims(&by_size, &rank, config.field))
        })
        .collect();
    ResolutionCheck { degrees }
}
