//! Polynomials generating an ideal up to radical, read off the Lyubeznik complex.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::lyubeznik_complex;
use crate::error::Result;
use crate::invariants::is_minimal_resolution;
use crate::monomial::{Monomial, VariableContext};
use crate::orders::OrderedIdeal;

/// A sum of distinct monomials, each with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FormalPolynomial {
    terms: Vec<Monomial>,
}

impl FormalPolynomial {
    pub fn new(terms: impl IntoIterator<Item = Monomial>) -> Self {
        let set: BTreeSet<Monomial> = terms.into_iter().collect();
        Self {
            terms: set.into_iter().collect(),
        }
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.binary_search(m).is_ok()
    }

    /// Terms in ideal-file syntax joined by ` + `.
    pub fn display(&self, ctx: &VariableContext) -> String {
        self.terms
            .iter()
            .map(|t| t.display(ctx).to_string())
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalGenerators {
    /// `g_1, ..., g_λ` with `λ = L(I,≺)`.
    pub polynomials: Vec<FormalPolynomial>,
    /// Whether the order gives a minimal resolution; the construction is
    /// only claimed to work in that case.
    pub minimal: bool,
}

/// `g_1 = m_1`, and for `2 ≤ s ≤ λ`
/// `g_s = m_s + Σ m_{i_1}···m_{i_{λ-s+1}}` over faces of size `λ-s+1`
/// whose least member is at position `s+1` or later, positions counted
/// in the order from 1. Terms are products, not lcms.
pub fn radical_generators(ordered: &OrderedIdeal) -> Result<RadicalGenerators> {
    let ideal = ordered.ideal();
    let complex = lyubeznik_complex(ordered);
    let lambda = complex.max_face_size();
    let minimal = is_minimal_resolution(ordered);
    if !minimal {
        log::warn!(
            "order {:?} does not give a minimal resolution; generators are not guaranteed",
            ordered.word()
        );
    }
    let mth = |s: usize| ideal.generator(ordered.order()[s - 1]).clone();
    let mut polynomials = vec![FormalPolynomial::new([mth(1)])];
    for s in 2..=lambda {
        let size = lambda - s + 1;
        let mut terms = vec![mth(s)];
        for face in complex.faces_of_size(size) {
            let least = ordered.min_of(face).expect("non-empty face");
            if ordered.rank(least) < s {
                continue;
            }
            let mut product = Monomial::one(ideal.nvars());
            for g in face.iter() {
                product = product.checked_mul(ideal.generator(g))?;
            }
            terms.push(product);
        }
        polynomials.push(FormalPolynomial::new(terms));
    }
    Ok(RadicalGenerators {
        polynomials,
        minimal,
    })
}
