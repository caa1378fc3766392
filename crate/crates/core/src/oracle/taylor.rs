use rayon::prelude::*;

use super::{homology_dims, lcm_lattice, OracleConfig};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::invariants::{BettiSubject, BettiTable};
use crate::monomial::Monomial;
use crate::subsets::GenSet;

/// Multigraded Betti numbers of `R/I` from the strands of the Taylor complex.
///
/// In multidegree `a` the strand has basis the sets with lcm exactly `a`,
/// and its differential keeps only the deletions preserving the lcm.
pub fn taylor_betti(ideal: &MonomialIdeal, config: &OracleConfig) -> Result<BettiTable> {
    config.check(ideal)?;
    let identity: Vec<usize> = (0..ideal.mu()).collect();
    let lattice: Vec<(Monomial, Vec<GenSet>)> = lcm_lattice(ideal).into_iter().collect();
    let strands: Vec<(Monomial, Vec<usize>)> = lattice
        .par_iter()
        .map(|(a, sets)| {
            let top = sets.iter().map(|s| s.len()).max().unwrap_or(0);
            let mut by_size = vec![Vec::new(); top + 1];
            for &s in sets {
                by_size[s.len()].push(s);
            }
            (a.clone(), homology_dims(&by_size, &identity, config.field))
        })
        .collect();
    let mut table = BettiTable::new(BettiSubject::Quotient, ideal.nvars());
    table.add(0, Monomial::one(ideal.nvars()), 1);
    for (a, dims) in strands {
        for (i, &d) in dims.iter().enumerate() {
            table.add(i, a.clone(), d as u64);
        }
    }
    Ok(table)
}

/// `max{i : β_i(R/I) ≠ 0}`.
pub fn projdim_oracle(ideal: &MonomialIdeal, config: &OracleConfig) -> Result<usize> {
    Ok(taylor_betti(ideal, config)?
        .projective_dimension()
        .unwrap_or(0))
}
