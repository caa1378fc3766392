//! Broken and preserved sets, the Lyubeznik complex, and symbol classification.

use std::fmt;

use serde::Serialize;

use crate::covers::{covered_members, is_cover};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::orders::OrderedIdeal;
use crate::subsets::{sort_canonical, GenSet};

/// A sequence of generators, strictly increasing under an order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    indices: Vec<usize>,
}

impl Symbol {
    /// Checks that `indices` increase strictly under `ordered`.
    pub fn new(indices: Vec<usize>, ordered: &OrderedIdeal) -> Result<Self> {
        ordered.ideal().check_set(indices.iter().copied().collect())?;
        if indices
            .windows(2)
            .any(|w| !ordered.precedes(w[0], w[1]))
        {
            return Err(Error::Precondition(
                "symbol indices must increase strictly under the order".into(),
            ));
        }
        Ok(Self { indices })
    }

    /// The symbol of a set: its elements listed in increasing order.
    pub fn from_set(set: GenSet, ordered: &OrderedIdeal) -> Self {
        Self {
            indices: ordered.sorted(set),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn dimension(&self) -> usize {
        self.indices.len()
    }

    pub fn set(&self) -> GenSet {
        self.indices.iter().copied().collect()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| format!("m{}", i + 1)).collect();
        write!(f, "u({})", parts.join(";"))
    }
}

/// The ≺-least court of `set`: a generator preceding every member and
/// dividing `lcm(set)`.
pub fn is_broken(set: GenSet, ordered: &OrderedIdeal) -> Option<usize> {
    if set.is_empty() {
        return None;
    }
    let divisors = ordered.ideal().table().divisors(set);
    // members of `set` divide lcm(set), so the least divisor precedes or is min(set)
    let least = ordered.min_of(divisors)?;
    (!set.contains(least)).then_some(least)
}

/// No subset of `set` is broken.
///
/// Memoized over the subsets of `set`: a set is preserved iff it has no
/// court and every set obtained by dropping one member is preserved.
pub fn is_preserved(set: GenSet, ordered: &OrderedIdeal) -> bool {
    let members = set.to_vec();
    let k = members.len();
    let mut memo = vec![true; 1 << k];
    for local in 1usize..(1 << k) {
        let sub: GenSet = (0..k).filter(|b| local & (1 << b) != 0).map(|b| members[b]).collect();
        let children_ok = (0..k)
            .filter(|b| local & (1 << b) != 0)
            .all(|b| memo[local & !(1 << b)]);
        memo[local] = children_ok && is_broken(sub, ordered).is_none();
    }
    memo[(1 << k) - 1]
}

/// The preserved sets under an order, with facets.
#[derive(Debug, Clone)]
pub struct LyubeznikComplex {
    pub order: OrderedIdeal,
    /// Every preserved set, including the empty face, canonically ordered.
    pub faces: Vec<GenSet>,
    /// Inclusion-maximal faces, canonically ordered.
    pub facets: Vec<GenSet>,
    membership: Vec<bool>,
}

impl LyubeznikComplex {
    pub fn contains(&self, set: GenSet) -> bool {
        self.membership
            .get(set.bits() as usize)
            .copied()
            .unwrap_or(false)
    }

    /// Largest face size minus one; -1 for the empty complex.
    pub fn dimension(&self) -> isize {
        self.max_face_size() as isize - 1
    }

    pub fn max_face_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// Faces with exactly `size` members.
    pub fn faces_of_size(&self, size: usize) -> impl Iterator<Item = GenSet> + '_ {
        self.faces.iter().copied().filter(move |f| f.len() == size)
    }

    /// Number of faces by size: entry `k` counts faces with `k` members.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.max_face_size() + 1];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        f
    }
}

/// Builds Δ bottom-up over the subset lattice.
pub fn lyubeznik_complex(ordered: &OrderedIdeal) -> LyubeznikComplex {
    let ideal = ordered.ideal();
    let table = ideal.table();
    let size = 1usize << ideal.mu();
    let mut membership = vec![false; size];
    membership[0] = true;
    // every maximal proper subset of s is numerically smaller than s
    for bits in 1..size {
        let s = GenSet::from_bits(bits as u32);
        let children_ok = s.maximal_proper_subsets().all(|t| membership[t.bits() as usize]);
        if !children_ok {
            continue;
        }
        let least = ordered
            .min_of(table.divisors(s))
            .expect("members divide their own lcm");
        membership[bits] = s.contains(least);
    }
    let mut faces: Vec<GenSet> = (0..size)
        .filter(|&b| membership[b])
        .map(|b| GenSet::from_bits(b as u32))
        .collect();
    sort_canonical(&mut faces);
    let all = ideal.all_generators();
    let mut facets: Vec<GenSet> = faces
        .iter()
        .copied()
        .filter(|f| {
            all.difference(*f)
                .iter()
                .all(|x| !membership[f.with(x).bits() as usize])
        })
        .collect();
    sort_canonical(&mut facets);
    LyubeznikComplex {
        order: ordered.clone(),
        faces,
        facets,
        membership,
    }
}

/// Admissibility read off the symbol directly: for every `h < t` and every
/// `q` preceding `i_h`, `m_q` does not divide `lcm(m_{i_h}, ..., m_{i_t})`.
pub fn is_admissible_symbol(symbol: &Symbol, ordered: &OrderedIdeal) -> bool {
    let ideal = ordered.ideal();
    let idx = symbol.indices();
    let t = idx.len();
    for h in 0..t.saturating_sub(1) {
        let tail = crate::monomial::lcm_of(idx[h..].iter().map(|&i| ideal.generator(i)))
            .expect("non-empty tail");
        for &q in &ordered.order()[..ordered.rank(idx[h])] {
            if ideal.generator(q).divides_unchecked(&tail) {
                return false;
            }
        }
    }
    true
}

/// Removing any member changes the lcm.
pub fn is_stable_symbol(symbol: &Symbol, ideal: &MonomialIdeal) -> bool {
    let idx = symbol.indices();
    let full = crate::monomial::lcm_of(idx.iter().map(|&i| ideal.generator(i)));
    let Ok(full) = full else { return true };
    (0..idx.len()).all(|q| {
        let rest = idx
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != q)
            .map(|(_, &i)| ideal.generator(i));
        match crate::monomial::lcm_of(rest) {
            Ok(l) => l != full,
            // removing the only member: lcm(∅) = 1 ≠ m_i
            Err(_) => true,
        }
    })
}

/// The four classes a non-empty subset falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SubsetClass {
    /// Admissible, not stable.
    PreservedCover,
    /// Inadmissible, not stable.
    UnpreservedCover,
    /// Admissible, stable.
    PreservedNonCover,
    /// Inadmissible, stable.
    UnpreservedNonCover,
}

impl SubsetClass {
    pub const ALL: [SubsetClass; 4] = [
        SubsetClass::PreservedCover,
        SubsetClass::UnpreservedCover,
        SubsetClass::PreservedNonCover,
        SubsetClass::UnpreservedNonCover,
    ];

    pub fn is_preserved(self) -> bool {
        matches!(self, SubsetClass::PreservedCover | SubsetClass::PreservedNonCover)
    }

    pub fn is_cover(self) -> bool {
        matches!(self, SubsetClass::PreservedCover | SubsetClass::UnpreservedCover)
    }

    /// Symbol side: (admissible, stable).
    pub fn symbol_class(self) -> (bool, bool) {
        (self.is_preserved(), !self.is_cover())
    }

    pub fn name(self) -> &'static str {
        match self {
            SubsetClass::PreservedCover => "preserved-cover",
            SubsetClass::UnpreservedCover => "unpreserved-cover",
            SubsetClass::PreservedNonCover => "preserved-non-cover",
            SubsetClass::UnpreservedNonCover => "unpreserved-non-cover",
        }
    }
}

pub fn classify_subset(set: GenSet, ordered: &OrderedIdeal) -> Result<SubsetClass> {
    ordered.ideal().check_set(set)?;
    if set.is_empty() {
        return Err(Error::Precondition("cannot classify the empty set".into()));
    }
    let preserved = is_preserved(set, ordered);
    let cover = is_cover(ordered.ideal(), set);
    Ok(match (preserved, cover) {
        (true, true) => SubsetClass::PreservedCover,
        (false, true) => SubsetClass::UnpreservedCover,
        (true, false) => SubsetClass::PreservedNonCover,
        (false, false) => SubsetClass::UnpreservedNonCover,
    })
}

/// Class counts for every subset size 1..=μ, read off a built complex.
pub fn class_census(complex: &LyubeznikComplex) -> Vec<[usize; 4]> {
    let ideal = complex.order.ideal();
    let table = ideal.table();
    let mut census = vec![[0usize; 4]; ideal.mu() + 1];
    for s in table.all_sets().skip(1) {
        let cover = !covered_members(table, s).is_empty();
        let class = match (complex.contains(s), cover) {
            (true, true) => 0,
            (false, true) => 1,
            (true, false) => 2,
            (false, false) => 3,
        };
        census[s.len()][class] += 1;
    }
    census
}

/// Admissible and inadmissible symbols of a given dimension, listed by
/// set in canonical order.
pub fn symbols_of_dimension(ordered: &OrderedIdeal, dim: usize) -> (Vec<GenSet>, Vec<GenSet>) {
    let mut sets: Vec<GenSet> = ordered
        .ideal()
        .all_generators()
        .subsets()
        .filter(|s| s.len() == dim)
        .collect();
    sort_canonical(&mut sets);
    sets.into_iter()
        .partition(|&s| is_admissible_symbol(&Symbol::from_set(s, ordered), ordered))
}
