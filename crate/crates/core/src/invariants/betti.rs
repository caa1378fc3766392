use std::collections::BTreeMap;

use serde::Serialize;

use crate::monomial::{Monomial, VariableContext};

/// Whether a table holds `β_{i,j}(I)` or `β_{i,j}(R/I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiSubject {
    Ideal,
    Quotient,
}

/// Multigraded Betti numbers; the graded table is derived from them, with
/// `j` the total degree of the multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    subject: BettiSubject,
    nvars: usize,
    multigraded: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn new(subject: BettiSubject, nvars: usize) -> Self {
        Self {
            subject,
            nvars,
            multigraded: BTreeMap::new(),
        }
    }

    pub fn subject(&self) -> BettiSubject {
        self.subject
    }

    /// Adds `count` to `β_{i,a}`; zero counts are not stored.
    pub fn add(&mut self, i: usize, a: Monomial, count: u64) {
        if count > 0 {
            *self.multigraded.entry((i, a)).or_default() += count;
        }
    }

    pub fn multigraded(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.multigraded
    }

    pub fn graded(&self) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, a), c) in &self.multigraded {
            *out.entry((*i, a.total_degree())).or_default() += c;
        }
        out
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.graded().get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn get_multigraded(&self, i: usize, a: &Monomial) -> u64 {
        self.multigraded.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.multigraded
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, c)| c)
            .sum()
    }

    /// Largest homological index with a non-zero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.multigraded.keys().map(|(i, _)| *i).max()
    }

    /// `β_{i+1,a}(R/I) = β_{i,a}(I)`, plus `β_{0,1}(R/I) = 1`.
    pub fn to_quotient(&self) -> BettiTable {
        match self.subject {
            BettiSubject::Quotient => self.clone(),
            BettiSubject::Ideal => {
                let mut out = BettiTable::new(BettiSubject::Quotient, self.nvars);
                out.add(0, Monomial::one(self.nvars), 1);
                for ((i, a), &c) in &self.multigraded {
                    out.add(i + 1, a.clone(), c);
                }
                out
            }
        }
    }

    /// Inverse of [`BettiTable::to_quotient`]; drops index 0 of the quotient.
    pub fn to_ideal(&self) -> BettiTable {
        match self.subject {
            BettiSubject::Ideal => self.clone(),
            BettiSubject::Quotient => {
                let mut out = BettiTable::new(BettiSubject::Ideal, self.nvars);
                for ((i, a), &c) in &self.multigraded {
                    if *i > 0 {
                        out.add(i - 1, a.clone(), c);
                    }
                }
                out
            }
        }
    }

    /// Graded table as text, one row per homological index:
    /// `i: j^count j^count ...`.
    pub fn render_graded(&self) -> String {
        let graded = self.graded();
        let mut out = String::new();
        let top = self.projective_dimension().unwrap_or(0);
        for i in 0..=top {
            let row: Vec<String> = graded
                .iter()
                .filter(|((k, _), _)| *k == i)
                .map(|((_, j), c)| format!("{j}^{c}"))
                .collect();
            out.push_str(&format!("{i}: {}\n", row.join(" ")));
        }
        out
    }

    /// Multigraded entries as `i <monomial> count` lines.
    pub fn render_multigraded(&self, ctx: &VariableContext) -> String {
        self.multigraded
            .iter()
            .map(|((i, a), c)| format!("{i} {} {c}\n", a.display(ctx)))
            .collect()
    }

    /// Serializable view with monomials rendered through `ctx`.
    pub fn view(&self, ctx: &VariableContext) -> BettiView {
        BettiView {
            subject: self.subject,
            graded: self
                .graded()
                .into_iter()
                .map(|((i, j), count)| GradedEntry { i, j, count })
                .collect(),
            multigraded: self
                .multigraded
                .iter()
                .map(|((i, a), &count)| MultigradedEntry {
                    i: *i,
                    multidegree: a.display(ctx).to_string(),
                    exponents: a.exponents().to_vec(),
                    count,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedEntry {
    pub i: usize,
    pub j: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultigradedEntry {
    pub i: usize,
    pub multidegree: String,
    pub exponents: Vec<u32>,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiView {
    pub subject: BettiSubject,
    pub graded: Vec<GradedEntry>,
    pub multigraded: Vec<MultigradedEntry>,
}
