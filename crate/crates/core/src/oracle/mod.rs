//! Ground truth independent of the preserved-set machinery: Taylor-complex
//! Betti numbers, boundary-squared checks, and acyclicity of the Lyubeznik
//! complex in every multidegree of the lcm lattice.

pub mod linalg;
mod taylor;
mod verify;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::subsets::GenSet;
use linalg::{rank_mod_prime, rank_rational, Matrix, Scalar};

pub use taylor::{projdim_oracle, taylor_betti};
pub use verify::{
    verify_chain_complex, verify_resolution, verify_taylor_chain_complex, ChainCheck,
    ResolutionCheck,
};

/// Default bound on μ for the oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 12;

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum FieldChoice {
    #[default]
    Rational,
    Prime(u64),
}

impl FieldChoice {
    pub fn rank(self, m: &Matrix<i64>) -> usize {
        match self {
            FieldChoice::Rational => rank_rational(m),
            FieldChoice::Prime(p) => rank_mod_prime(m, p),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    /// `q` for the rationals, `p:<prime>` for a prime field.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(FieldChoice::Rational);
        }
        let digits = s
            .strip_prefix("p:")
            .ok_or_else(|| Error::InvalidContext(format!("unknown field `{s}`; use q or p:<prime>")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidContext(format!("`{digits}` is not a number")))?;
        if !linalg::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldChoice::Prime(p))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "q"),
            FieldChoice::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub field: FieldChoice,
    pub max_generators: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            field: FieldChoice::Rational,
            max_generators: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl OracleConfig {
    pub(crate) fn check(&self, ideal: &MonomialIdeal) -> Result<()> {
        if ideal.mu() > self.max_generators {
            Err(Error::TooManyGenerators {
                count: ideal.mu(),
                bound: self.max_generators,
            })
        } else {
            Ok(())
        }
    }
}

/// A boundary map between two explicit face lists.
///
/// Column `c` is the image of `cols[c]`: deleting the `j`-th smallest
/// member (counting from 1) contributes sign `(-1)^(j+1)` when the result
/// is listed in `rows`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryMatrix<T> {
    pub rows: Vec<GenSet>,
    pub cols: Vec<GenSet>,
    pub entries: Matrix<T>,
}

impl<T: Scalar> BoundaryMatrix<T> {
    /// `rank[g]` is the position of generator `g` in the order that sorts
    /// each face.
    pub fn build(rows: Vec<GenSet>, cols: Vec<GenSet>, rank: &[usize]) -> Self {
        let index: HashMap<GenSet, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut entries = Matrix::zeros(rows.len(), cols.len());
        for (c, &face) in cols.iter().enumerate() {
            let mut members = face.to_vec();
            members.sort_by_key(|&g| rank[g]);
            for (j, &g) in members.iter().enumerate() {
                if let Some(&r) = index.get(&face.without(g)) {
                    entries.set(r, c, T::from_sign(j % 2 == 0));
                }
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// `self ∘ next`, where `next` maps into the faces indexing `self`'s columns.
    pub fn compose(&self, next: &BoundaryMatrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, next.rows, "face lists do not chain");
        self.entries.mul(&next.entries)
    }
}

/// Groups every non-empty generator subset by its lcm.
pub(crate) fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeMap<Monomial, Vec<GenSet>> {
    let table = ideal.table();
    let mut groups: BTreeMap<Monomial, Vec<GenSet>> = BTreeMap::new();
    for s in table.all_sets().skip(1) {
        groups.entry(table.lcm(s)).or_default().push(s);
    }
    groups
}

/// Reduced homology dimensions of a chain complex given by faces grouped
/// by size (`by_size[k]` has the faces with `k` members).
pub(crate) fn homology_dims(by_size: &[Vec<GenSet>], rank: &[usize], field: FieldChoice) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=by_size.len())
        .map(|k| {
            if k == 0 || k >= by_size.len() || by_size[k].is_empty() || by_size[k - 1].is_empty() {
                0
            } else {
                let b = BoundaryMatrix::<i64>::build(by_size[k - 1].clone(), by_size[k].clone(), rank);
                field.rank(&b.entries)
            }
        })
        .collect();
    (0..by_size.len())
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}
