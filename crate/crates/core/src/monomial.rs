//! Monomials over a named set of variables.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Ordered list of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VariableContext {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The monomial `x_i^e`.
    pub fn variable(&self, index: usize, exponent: u32) -> Monomial {
        let mut exps = vec![0; self.len()];
        exps[index] = exponent;
        Monomial::new(exps)
    }
}

/// Exponent vector of a monomial; the zero vector is the monomial 1.
///
/// Monomials do not carry their context; fallible operations check that
/// the exponent vectors have equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.nvars(),
                right: other.nvars(),
            })
        }
    }

    /// `self | other`, exponent-wise comparison.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_context(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        Self {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub(crate) fn lcm_assign(&mut self, other: &Self) {
        for (a, &b) in self.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(b);
        }
    }

    /// Formal product (exponent-wise sum); overflow is an error.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Self { exps })
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// All positive exponents set to 1.
    pub fn squarefree_part(&self) -> Self {
        Self {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, ctx }
    }
}

/// lcm of a non-empty collection of monomials in one context.
pub fn lcm_of<'a>(monomials: impl IntoIterator<Item = &'a Monomial>) -> Result<Monomial> {
    let mut iter = monomials.into_iter();
    let mut acc = iter.next().ok_or(Error::EmptyLcm)?.clone();
    for m in iter {
        acc.check_context(m)?;
        acc.lcm_assign(m);
    }
    Ok(acc)
}

/// Renders a monomial in ideal-file syntax, e.g. `x^2*y`.
pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.ctx.names.get(i) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "x{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_of([&m(&[2, 1, 0])]).unwrap(), m(&[2, 1, 0]));
        assert_eq!(lcm_of([&m(&[2, 1, 0]), &m(&[0, 2, 1])]).unwrap(), m(&[2, 2, 1]));
        // y^2 z and x^3 from the five-generator example
        let l = lcm_of([&m(&[0, 2, 1]), &m(&[3, 0, 0])]).unwrap();
        assert_eq!(l, m(&[3, 2, 1]));
        for g in [m(&[0, 2, 1]), m(&[3, 0, 0])] {
            assert!(g.divides(&l).unwrap());
        }
    }

    #[test]
    fn lcm_errors() {
        assert_eq!(lcm_of(std::iter::empty()), Err(Error::EmptyLcm));
        assert!(matches!(
            lcm_of([&m(&[1]), &m(&[1, 0])]),
            Err(Error::ContextMismatch { .. })
        ));
        assert!(m(&[1]).divides(&m(&[1, 1])).is_err());
    }

    #[test]
    fn divisibility_examples() {
        assert!(m(&[1, 0, 0]).divides(&m(&[2, 1, 0])).unwrap());
        assert!(m(&[2, 1, 0]).divides(&m(&[3, 2, 1])).unwrap());
        assert!(!m(&[0, 0, 3]).divides(&m(&[3, 2, 1])).unwrap());
    }

    #[test]
    fn degree_and_support() {
        assert_eq!(m(&[2, 1, 0]).total_degree(), 3);
        assert_eq!(Monomial::one(3).total_degree(), 0);
        assert_eq!(m(&[2, 2, 1]).total_degree(), 5);
        assert_eq!(m(&[2, 1, 0]).support(), vec![0, 1]);
        assert!(Monomial::one(3).support().is_empty());
        assert_eq!(m(&[0, 0, 3]).support(), vec![2]);
    }

    #[test]
    fn product_overflow_is_an_error() {
        assert_eq!(m(&[u32::MAX]).checked_mul(&m(&[1])), Err(Error::ExponentOverflow));
        assert_eq!(m(&[1, 2]).checked_mul(&m(&[3, 0])).unwrap(), m(&[4, 2]));
    }

    #[test]
    fn context_validation() {
        assert!(VariableContext::new(["x", "y"]).is_ok());
        assert!(VariableContext::new(["x", "x"]).is_err());
        assert!(VariableContext::new(["1x"]).is_err());
        assert!(VariableContext::new(["x_1", "Y2"]).is_ok());
    }

    #[test]
    fn display() {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        assert_eq!(m(&[2, 1, 0]).display(&ctx).to_string(), "x^2*y");
        assert_eq!(Monomial::one(3).display(&ctx).to_string(), "1");
    }

    fn exps() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0u32..4, 3)
    }

    proptest! {
        #[test]
        fn divides_is_a_partial_order(a in exps(), b in exps(), c in exps()) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            prop_assert!(a.divides(&a).unwrap());
            if a.divides(&b).unwrap() && b.divides(&a).unwrap() {
                prop_assert_eq!(&a, &b);
            }
            if a.divides(&b).unwrap() && b.divides(&c).unwrap() {
                prop_assert!(a.divides(&c).unwrap());
            }
        }

        #[test]
        fn lcm_is_monotone(set in prop::collection::vec(exps(), 1..5), extra in prop::collection::vec(exps(), 0..3)) {
            let small: Vec<Monomial> = set.iter().map(|e| m(e)).collect();
            let mut big = small.clone();
            big.extend(extra.iter().map(|e| m(e)));
            let l_small = lcm_of(&small).unwrap();
            let l_big = lcm_of(&big).unwrap();
            prop_assert!(l_small.divides(&l_big).unwrap());
        }
    }
}
