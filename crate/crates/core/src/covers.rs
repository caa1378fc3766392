//! Covers of generators, their refinements, and the clutter of E-minimal covers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::orders::OrderedIdeal;
use crate::subsets::{sort_canonical, GenSet, SubsetTable};

/// A set of generators together with the members it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cover {
    pub members: GenSet,
    /// Every `u ∈ members` with `u | lcm(members \ {u})`; never empty.
    pub covered: GenSet,
}

impl Serialize for Cover {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Cover", 2)?;
        st.serialize_field("members", &one_based(self.members))?;
        st.serialize_field("covered", &one_based(self.covered))?;
        st.end()
    }
}

pub(crate) fn one_based(set: GenSet) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

/// Members of `set` that `set` covers.
pub(crate) fn covered_members(table: &SubsetTable, set: GenSet) -> GenSet {
    if set.len() < 2 {
        return GenSet::EMPTY;
    }
    set.iter()
        .filter(|&u| table.divides_lcm(u, set.without(u)))
        .collect()
}

/// Does `set` cover at least one of its members?
pub fn is_cover(ideal: &MonomialIdeal, set: GenSet) -> bool {
    !covered_members(ideal.table(), set).is_empty()
}

/// The cover record for `set`, if it covers anything.
pub fn as_cover(ideal: &MonomialIdeal, set: GenSet) -> Option<Cover> {
    let covered = covered_members(ideal.table(), set);
    (!covered.is_empty()).then_some(Cover {
        members: set,
        covered,
    })
}

/// `m_u | lcm(C \ {u})`. Requires `u ∈ C` and `|C| ≥ 2`.
pub fn is_cover_of(set: GenSet, u: usize, ideal: &MonomialIdeal) -> Result<bool> {
    ideal.check_set(set)?;
    ideal.check_index(u)?;
    if !set.contains(u) {
        return Err(Error::Precondition(format!("m{} is not in {}", u + 1, set.label())));
    }
    if set.len() < 2 {
        return Err(Error::Precondition(
            "a cover needs at least two members".into(),
        ));
    }
    Ok(ideal.table().divides_lcm(u, set.without(u)))
}

/// `{w ∈ G(I) : w | lcm(C)}`.
pub fn complete_cover(set: GenSet, ideal: &MonomialIdeal) -> Result<GenSet> {
    ideal.check_set(set)?;
    Ok(ideal.table().divisors(set))
}

/// `set` covers `u` and no proper subset of `set` containing `u` does.
/// Unlike [`is_cover_of`], returns `false` instead of failing when `u ∉ set`
/// or `|set| < 2`.
pub fn is_e_minimal_cover_of(set: GenSet, u: usize, ideal: &MonomialIdeal) -> bool {
    if !set.contains(u) || set.len() < 2 {
        return false;
    }
    let table = ideal.table();
    let rest = set.without(u);
    table.divides_lcm(u, rest)
        && rest
            .iter()
            .all(|x| !table.divides_lcm(u, rest.without(x)))
}

/// All covers of `u`, by size then lexicographically.
pub fn covers_of(u: usize, ideal: &MonomialIdeal) -> Result<Vec<Cover>> {
    ideal.check_index(u)?;
    let table = ideal.table();
    let others = ideal.all_generators().without(u);
    let mut sets: Vec<GenSet> = others
        .subsets()
        .filter(|rest| !rest.is_empty() && table.divides_lcm(u, *rest))
        .map(|rest| rest.with(u))
        .collect();
    sort_canonical(&mut sets);
    Ok(sets
        .into_iter()
        .map(|members| Cover {
            members,
            covered: covered_members(table, members),
        })
        .collect())
}

/// Covers of `u` none of whose proper subsets covers `u`.
///
/// Covering `u` is monotone in the set, so checking the subsets missing one
/// element other than `u` suffices.
pub fn e_minimal_covers_of(u: usize, ideal: &MonomialIdeal) -> Result<Vec<Cover>> {
    let table = ideal.table();
    Ok(covers_of(u, ideal)?
        .into_iter()
        .filter(|c| {
            let rest = c.members.without(u);
            rest.iter().all(|x| !table.divides_lcm(u, rest.without(x)))
        })
        .collect())
}

/// Every set covering at least one member, canonically ordered.
pub fn all_covers(ideal: &MonomialIdeal) -> Vec<Cover> {
    let table = ideal.table();
    let mut sets: Vec<GenSet> = table
        .all_sets()
        .filter(|&s| !covered_members(table, s).is_empty())
        .collect();
    sort_canonical(&mut sets);
    sets.into_iter()
        .map(|members| Cover {
            members,
            covered: covered_members(table, members),
        })
        .collect()
}

/// Sets that are an E-minimal cover of at least one member, deduplicated
/// by member set; `covered` lists every member it covers.
pub fn all_e_minimal_covers(ideal: &MonomialIdeal) -> Vec<Cover> {
    let table = ideal.table();
    let mut sets: Vec<GenSet> = Vec::new();
    for u in 0..ideal.mu() {
        for c in e_minimal_covers_of(u, ideal).expect("index in range") {
            if !sets.contains(&c.members) {
                sets.push(c.members);
            }
        }
    }
    sort_canonical(&mut sets);
    sets.into_iter()
        .map(|members| Cover {
            members,
            covered: covered_members(table, members),
        })
        .collect()
}

/// Covers C admitting no cover V whose lcm properly divides lcm(C).
pub fn m_minimal_covers(ideal: &MonomialIdeal) -> Vec<Cover> {
    let table = ideal.table();
    let covers = all_covers(ideal);
    covers
        .iter()
        .filter(|c| {
            let lc = table.lcm_exponents(c.members);
            !covers.iter().any(|v| {
                let lv = table.lcm_exponents(v.members);
                lv != lc && lv.iter().zip(lc).all(|(a, b)| a <= b)
            })
        })
        .copied()
        .collect()
}

/// An order together with pairwise inclusion-incomparable edges.
#[derive(Debug, Clone)]
pub struct OrientedClutter {
    pub order: OrderedIdeal,
    pub edges: Vec<GenSet>,
}

fn e_minimal_cache(ideal: &MonomialIdeal) -> &(Vec<GenSet>, Vec<GenSet>) {
    ideal.clutter_cache.get_or_init(|| {
        let sets: Vec<GenSet> = all_e_minimal_covers(ideal).iter().map(|c| c.members).collect();
        let edges = sets
            .iter()
            .filter(|&&a| !sets.iter().any(|&b| b != a && b.is_subset_of(a)))
            .copied()
            .collect();
        (sets, edges)
    })
}

/// Member sets of every E-minimal cover, canonically ordered and cached.
pub fn e_minimal_sets(ideal: &MonomialIdeal) -> &[GenSet] {
    &e_minimal_cache(ideal).0
}

/// The edge sets of the E-minimal cover clutter; order independent.
///
/// Sets containing another E-minimal cover are dropped so that no edge
/// contains another.
pub fn clutter_edges(ideal: &MonomialIdeal) -> &[GenSet] {
    &e_minimal_cache(ideal).1
}

/// The oriented clutter of E-minimal covers under `ordered`.
pub fn cover_clutter(ordered: &OrderedIdeal) -> OrientedClutter {
    OrientedClutter {
        order: ordered.clone(),
        edges: clutter_edges(ordered.ideal()).to_vec(),
    }
}
