//! Bitmask sets of generator indices and the lcm table over the subset lattice.

use std::cmp::Ordering;
use std::fmt;

use crate::monomial::Monomial;

/// Upper bound on the number of generators for anything that walks the
/// subset lattice.
pub const MAX_GENERATORS: usize = 20;

/// A set of generator indices (0-based), stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GenSet(u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_bits(bits: u32) -> Self {
        GenSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        GenSet(1 << i)
    }

    /// The first `n` indices.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            GenSet(u32::MAX)
        } else {
            GenSet((1u32 << n) - 1)
        }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        indices.into_iter().fold(GenSet::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        GenSet(self.0 | (1 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        GenSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    /// Smallest index (not order-aware).
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in increasing numeric order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                Some(i as usize)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let set = self.0;
        let mut sub = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let current = sub;
            sub = sub.wrapping_sub(set) & set;
            done = sub == 0;
            Some(GenSet(current))
        })
    }

    /// The sets obtained by removing one element.
    pub fn maximal_proper_subsets(self) -> impl Iterator<Item = GenSet> {
        self.iter().map(move |i| self.without(i))
    }

    /// Size first, then lexicographic on the sorted index lists.
    pub fn canonical_cmp(&self, other: &GenSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }

    /// 1-based labels such as `{m1,m3}`.
    pub fn label(self) -> String {
        let inner: Vec<String> = self.iter().map(|i| format!("m{}", i + 1)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        GenSet::from_indices(iter)
    }
}

/// Sort sets by size, then lexicographically.
pub fn sort_canonical(sets: &mut [GenSet]) {
    sets.sort_by(GenSet::canonical_cmp);
}

/// lcm and divisor set for every subset of the generators.
///
/// Entry `s` (a bitmask) holds `lcm(s)` and the set of generators dividing
/// it. Index 0 holds the monomial 1 and the empty divisor set.
#[derive(Debug, Clone)]
pub struct SubsetTable {
    count: usize,
    nvars: usize,
    lcms: Vec<u32>,
    divisors: Vec<GenSet>,
}

impl SubsetTable {
    pub(crate) fn build(gens: &[Monomial], nvars: usize) -> Self {
        let count = gens.len();
        assert!(count <= MAX_GENERATORS, "subset table limited to {MAX_GENERATORS} generators");
        let size = 1usize << count;
        let mut lcms = vec![0u32; size * nvars];
        for s in 1..size {
            let low = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let g = gens[low].exponents();
            for v in 0..nvars {
                lcms[s * nvars + v] = lcms[rest * nvars + v].max(g[v]);
            }
        }
        let mut divisors = vec![GenSet::EMPTY; size];
        for (s, slot) in divisors.iter_mut().enumerate().skip(1) {
            let l = &lcms[s * nvars..(s + 1) * nvars];
            *slot = gens
                .iter()
                .enumerate()
                .filter(|(_, g)| g.exponents().iter().zip(l).all(|(a, b)| a <= b))
                .map(|(i, _)| i)
                .collect();
        }
        Self {
            count,
            nvars,
            lcms,
            divisors,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.count
    }

    pub fn lcm_exponents(&self, s: GenSet) -> &[u32] {
        let s = s.bits() as usize;
        &self.lcms[s * self.nvars..(s + 1) * self.nvars]
    }

    pub fn lcm(&self, s: GenSet) -> Monomial {
        Monomial::new(self.lcm_exponents(s).to_vec())
    }

    pub fn lcm_degree(&self, s: GenSet) -> u64 {
        self.lcm_exponents(s).iter().map(|&e| u64::from(e)).sum()
    }

    /// Generators dividing `lcm(s)`; the complete cover of `s`.
    pub fn divisors(&self, s: GenSet) -> GenSet {
        self.divisors[s.bits() as usize]
    }

    /// Does generator `u` divide `lcm(s)`?
    pub fn divides_lcm(&self, u: usize, s: GenSet) -> bool {
        self.divisors(s).contains(u)
    }

    /// Every subset of the generators, in increasing bitmask order.
    pub fn all_sets(&self) -> impl Iterator<Item = GenSet> {
        (0..(1u32 << self.count)).map(GenSet::from_bits)
    }
}
