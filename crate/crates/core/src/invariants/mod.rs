//! Minimality, Betti numbers from preserved sets, lengths, obstructions,
//! and bounds on the arithmetical rank.

mod betti;
pub mod search;

use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::complex::{is_preserved, is_stable_symbol, lyubeznik_complex, LyubeznikComplex, Symbol};
use crate::covers::{all_covers, clutter_edges, e_minimal_sets, is_cover_of, is_e_minimal_cover_of};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::oracle::{projdim_oracle, taylor_betti, OracleConfig};
use crate::orders::OrderedIdeal;
use crate::subsets::GenSet;

pub use betti::{BettiSubject, BettiTable, BettiView, GradedEntry, MultigradedEntry};
pub use search::{
    audit_courts_first, is_almost_lyubeznik, is_lyubeznik, is_totally_lyubeznik, min_l_length,
    min_preserved_size, minimize_over_orders, order_space, total_obstruction, AlmostVerdict,
    CourtsAudit, LyubeznikVerdict, SearchConfig, SearchMode, SearchOutcome, TotallyVerdict,
};

/// The five equivalent conditions for the Lyubeznik resolution to be
/// minimal, each evaluated by its own definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinimalityConditions {
    /// Every facet of Δ is stable.
    pub facets_stable: bool,
    /// No cover is preserved.
    pub covers_unpreserved: bool,
    /// Every cover has a broken witness `D` with a covered `v ∉ D`.
    pub covers_witnessed: bool,
    /// No E-minimal cover is preserved.
    pub e_minimal_unpreserved: bool,
    /// Every E-minimal cover has a witness `D` with `D ∪ {v}` E-minimal.
    pub e_minimal_witnessed: bool,
}

impl MinimalityConditions {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.facets_stable,
            self.covers_unpreserved,
            self.covers_witnessed,
            self.e_minimal_unpreserved,
            self.e_minimal_witnessed,
        ]
    }

    pub fn agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

fn facets_stable(complex: &LyubeznikComplex) -> bool {
    let ideal = complex.order.ideal();
    complex
        .facets
        .iter()
        .all(|&f| is_stable_symbol(&Symbol::from_set(f, &complex.order), ideal))
}

/// `∃ D ⊆ C, v ∉ D` with `D ∪ {v}` accepted by `covers` and
/// `min(D̄ \ D) ≺ min(D)`, where `D̄` is the complete cover of `D`.
fn has_witness(
    cover: GenSet,
    ordered: &OrderedIdeal,
    covers: impl Fn(GenSet, usize) -> bool,
) -> bool {
    let ideal = ordered.ideal();
    let table = ideal.table();
    let all = ideal.all_generators();
    cover.subsets().filter(|d| !d.is_empty()).any(|d| {
        let Some(outside_min) = ordered.min_of(table.divisors(d).difference(d)) else {
            return false;
        };
        let inside_min = ordered.min_of(d).expect("non-empty");
        ordered.precedes(outside_min, inside_min)
            && all.difference(d).iter().any(|v| covers(d.with(v), v))
    })
}

/// Evaluates each of the five conditions separately.
pub fn minimality_conditions(ordered: &OrderedIdeal) -> MinimalityConditions {
    let ideal = ordered.ideal();
    let complex = lyubeznik_complex(ordered);
    let covers = all_covers(ideal);
    let e_minimal = e_minimal_sets(ideal);
    let plain = |s: GenSet, v: usize| is_cover_of(s, v, ideal).unwrap_or(false);
    let minimal = |s: GenSet, v: usize| is_e_minimal_cover_of(s, v, ideal);
    MinimalityConditions {
        facets_stable: facets_stable(&complex),
        covers_unpreserved: covers.iter().all(|c| !is_preserved(c.members, ordered)),
        covers_witnessed: covers
            .iter()
            .all(|c| has_witness(c.members, ordered, plain)),
        e_minimal_unpreserved: e_minimal.iter().all(|&c| !is_preserved(c, ordered)),
        e_minimal_witnessed: e_minimal
            .iter()
            .all(|&c| has_witness(c, ordered, minimal)),
    }
}

/// Is the Lyubeznik resolution under this order minimal?
///
/// Decided by facet stability and cross-checked against the E-minimal
/// cover criterion.
pub fn is_minimal_resolution(ordered: &OrderedIdeal) -> bool {
    let complex = lyubeznik_complex(ordered);
    let by_facets = facets_stable(&complex);
    let by_covers = e_minimal_sets(ordered.ideal())
        .iter()
        .all(|&c| !complex.contains(c));
    assert_eq!(
        by_facets, by_covers,
        "facet stability and E-minimal covers disagree for order {:?}",
        ordered.word()
    );
    by_facets
}

/// `β_{t-1,a}(I)` = number of preserved sets of size `t` with lcm `a`.
/// Only valid when the resolution is minimal.
pub fn betti_from_preserved(ordered: &OrderedIdeal) -> Result<BettiTable> {
    if !is_minimal_resolution(ordered) {
        return Err(Error::NotMinimal);
    }
    let ideal = ordered.ideal();
    let table = ideal.table();
    let complex = lyubeznik_complex(ordered);
    let mut out = BettiTable::new(BettiSubject::Ideal, ideal.nvars());
    for &face in complex.faces.iter().filter(|f| !f.is_empty()) {
        out.add(face.len() - 1, table.lcm(face), 1);
    }
    Ok(out)
}

/// `L(I,≺)`: the largest face size of Δ.
pub fn l_length(ordered: &OrderedIdeal) -> usize {
    lyubeznik_complex(ordered).max_face_size()
}

/// `ps(I,≺)`: the largest preserved set, found by testing subsets from
/// largest to smallest.
pub fn preserved_size(ordered: &OrderedIdeal) -> usize {
    let all = ordered.ideal().all_generators();
    (1..=all.len())
        .rev()
        .find(|&k| all.subsets().any(|s| s.len() == k && is_preserved(s, ordered)))
        .unwrap_or(0)
}

/// `ObsL(I,≺)`: the largest preserved edge of the E-minimal clutter, 0 if
/// there is none.
pub fn obstruction(ordered: &OrderedIdeal) -> usize {
    clutter_edges(ordered.ideal())
        .iter()
        .filter(|&&c| is_preserved(c, ordered))
        .map(|c| c.len())
        .max()
        .unwrap_or(0)
}

/// Least number of variables meeting the support of every generator.
pub fn height(ideal: &MonomialIdeal) -> usize {
    let supports: Vec<Vec<usize>> = ideal.radical().generators().iter().map(|g| g.support()).collect();
    let n = ideal.nvars();
    (0..=n)
        .find(|&k| {
            (0..n).combinations(k).any(|vars| {
                supports
                    .iter()
                    .all(|s| s.iter().any(|v| vars.contains(v)))
            })
        })
        .unwrap_or(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LowerSource {
    /// `projdim(R/I)`, which equals `cd(I)` for squarefree ideals.
    Projdim,
    Height,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UpperSource {
    /// `L(I)` from the order search.
    L,
    Mu,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AraBounds {
    pub lower: usize,
    pub upper: usize,
    pub equality: bool,
    pub lower_source: LowerSource,
    pub upper_source: UpperSource,
}

/// `lower ≤ ara(I) ≤ upper`.
///
/// The lower bound is `projdim(R/I)` for squarefree ideals and `ht(I)`
/// otherwise. The upper bound is `min(L(I), μ)`; if the order search is
/// refused, `μ` alone.
pub fn ara_bounds(
    ideal: &Arc<MonomialIdeal>,
    search: &SearchConfig,
    oracle: &OracleConfig,
) -> Result<AraBounds> {
    let (lower, lower_source) = if ideal.is_squarefree() {
        (projdim_oracle(ideal, oracle)?, LowerSource::Projdim)
    } else {
        (height(ideal), LowerSource::Height)
    };
    let mu = ideal.mu();
    let (upper, upper_source) = match min_l_length(ideal, search) {
        Ok(l) if l.value < mu => (l.value, UpperSource::L),
        Ok(_) => (mu, UpperSource::Mu),
        Err(Error::ThresholdExceeded { .. }) | Err(Error::TooManyGenerators { .. }) => {
            (mu, UpperSource::Mu)
        }
        Err(e) => return Err(e),
    };
    Ok(AraBounds {
        lower,
        upper,
        equality: lower == upper,
        lower_source,
        upper_source,
    })
}

/// Where a report's Betti table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiSource {
    Preserved,
    Oracle,
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeConfig {
    pub search: SearchConfig,
    pub oracle: OracleConfig,
}

/// Invariants of one ordered ideal.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    /// 1-based permutation word.
    pub order: Vec<usize>,
    pub minimal: bool,
    pub l_length: usize,
    pub ps: usize,
    pub obs_l: usize,
    /// `β(R/I)`: from preserved sets when minimal, otherwise from the
    /// oracle when the ideal is small enough.
    pub betti: Option<(BettiTable, BettiSource)>,
    pub ara: AraBounds,
    pub height: usize,
    pub lyubeznik: Option<bool>,
    pub almost: Option<bool>,
    pub totally: Option<bool>,
}

pub fn analyze(ordered: &OrderedIdeal, config: &AnalyzeConfig) -> Result<InvariantReport> {
    let ideal = ordered.ideal_arc();
    ideal.try_table()?;
    let minimal = is_minimal_resolution(ordered);
    let betti = if minimal {
        Some((betti_from_preserved(ordered)?.to_quotient(), BettiSource::Preserved))
    } else {
        match taylor_betti(ideal, &config.oracle) {
            Ok(t) => Some((t, BettiSource::Oracle)),
            Err(Error::TooManyGenerators { .. }) => None,
            Err(e) => return Err(e),
        }
    };
    let ara = match ara_bounds(ideal, &config.search, &config.oracle) {
        Err(Error::TooManyGenerators { .. }) => AraBounds {
            lower: height(ideal),
            upper: ideal.mu(),
            equality: height(ideal) == ideal.mu(),
            lower_source: LowerSource::Height,
            upper_source: UpperSource::Mu,
        },
        other => other?,
    };
    let l = l_length(ordered);
    let ps = preserved_size(ordered);
    assert_eq!(l, ps, "Lyubeznik length and preserved size disagree");
    Ok(InvariantReport {
        order: ordered.word(),
        minimal,
        l_length: l,
        ps,
        obs_l: obstruction(ordered),
        betti,
        ara,
        height: height(ideal),
        lyubeznik: None,
        almost: None,
        totally: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::orders::all_orders;

    fn identity(ideal: MonomialIdeal) -> OrderedIdeal {
        OrderedIdeal::identity(Arc::new(ideal))
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal_resolution(&identity(corpus::i1())));
        assert!(!is_minimal_resolution(&identity(corpus::i2())));
        assert!(is_minimal_resolution(&identity(corpus::principal())));
    }

    #[test]
    fn lengths_and_obstructions() {
        let p = identity(corpus::principal());
        assert_eq!((l_length(&p), preserved_size(&p), obstruction(&p)), (1, 1, 0));
        let i2 = identity(corpus::i2());
        assert_eq!((l_length(&i2), preserved_size(&i2), obstruction(&i2)), (3, 3, 3));
        let i3 = identity(corpus::i3());
        assert_eq!((l_length(&i3), preserved_size(&i3)), (3, 3));
        assert_eq!(obstruction(&identity(corpus::i1())), 0);
    }

    #[test]
    fn betti_examples() {
        let i1 = identity(corpus::i1());
        let t = betti_from_preserved(&i1).unwrap();
        assert_eq!(t.get(0, 3), 5);
        assert_eq!(t.total(0), 5);
        assert_eq!(t.to_quotient(), taylor_betti(i1.ideal(), &OracleConfig::default()).unwrap());

        for word in ["1,2", "2,1"] {
            let o = OrderedIdeal::parse(Arc::new(corpus::koszul_xy()), word).unwrap();
            let q = betti_from_preserved(&o).unwrap().to_quotient();
            let graded: Vec<_> = q.graded().into_iter().collect();
            assert_eq!(graded, vec![((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]);
        }
        assert_eq!(
            betti_from_preserved(&identity(corpus::i2())),
            Err(Error::NotMinimal)
        );
    }

    #[test]
    fn heights() {
        assert_eq!(height(&corpus::koszul_xy()), 2);
        assert_eq!(height(&corpus::i1()), 3);
        assert_eq!(height(&corpus::principal_xy()), 1);
        assert_eq!(height(&corpus::square()), 2);
    }

    #[test]
    fn ara_examples() {
        let s = SearchConfig::default();
        let o = OracleConfig::default();
        let xy = ara_bounds(&Arc::new(corpus::koszul_xy()), &s, &o).unwrap();
        assert_eq!((xy.lower, xy.upper, xy.equality), (2, 2, true));
        let tri = ara_bounds(&Arc::new(corpus::triangle()), &s, &o).unwrap();
        assert!(tri.equality);
        let i1 = ara_bounds(&Arc::new(corpus::i1()), &s, &o).unwrap();
        assert_eq!(i1.lower_source, LowerSource::Height);
        assert!(i1.lower <= 3 && 3 <= i1.upper);
    }

    #[test]
    fn five_conditions_agree_on_worked_examples() {
        for ideal in [corpus::i1(), corpus::i2(), corpus::remark_j()] {
            let ideal = Arc::new(ideal);
            for o in all_orders(&ideal, 8, false).unwrap() {
                let c = minimality_conditions(&o);
                assert!(c.agree(), "{:?} {:?}", o.word(), c);
                assert_eq!(c.facets_stable, is_minimal_resolution(&o));
            }
        }
    }

    #[test]
    fn analyze_report() {
        let r = analyze(&identity(corpus::i1()), &AnalyzeConfig::default()).unwrap();
        assert!(r.minimal);
        assert_eq!(r.obs_l, 0);
        assert_eq!(r.l_length, r.ps);
        assert_eq!(r.betti.as_ref().unwrap().1, BettiSource::Preserved);
        let r2 = analyze(&identity(corpus::i2()), &AnalyzeConfig::default()).unwrap();
        assert!(!r2.minimal);
        assert_eq!(r2.betti.as_ref().unwrap().1, BettiSource::Oracle);
    }
}
