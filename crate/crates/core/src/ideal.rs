//! Monomial ideals given by their minimal generators, and the ideal file format.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VariableContext};
use crate::subsets::{GenSet, SubsetTable, MAX_GENERATORS};

/// Why a generator was dropped during minimization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum MinimizeWarning {
    /// Input position `index` (0-based) repeats position `first`.
    Duplicate { index: usize, first: usize },
    /// Input position `index` is divisible by input position `by`.
    Redundant { index: usize, by: usize },
}

impl fmt::Display for MinimizeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinimizeWarning::Duplicate { index, first } => write!(
                f,
                "generator #{} duplicates generator #{} and was removed",
                index + 1,
                first + 1
            ),
            MinimizeWarning::Redundant { index, by } => write!(
                f,
                "generator #{} is divisible by generator #{} and was removed",
                index + 1,
                by + 1
            ),
        }
    }
}

/// Removes duplicates and monomials divisible by another entry, keeping
/// first-occurrence order.
pub fn minimize_generators(gens: &[Monomial]) -> (Vec<Monomial>, Vec<MinimizeWarning>) {
    let mut warnings = Vec::new();
    let mut keep = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if let Some(first) = gens[..i].iter().position(|h| h == g) {
            warnings.push(MinimizeWarning::Duplicate { index: i, first });
            continue;
        }
        let by = gens
            .iter()
            .enumerate()
            .find(|&(j, h)| j != i && h != g && h.divides_unchecked(g))
            .map(|(j, _)| j);
        match by {
            Some(by) => warnings.push(MinimizeWarning::Redundant { index: i, by }),
            None => keep.push(g.clone()),
        }
    }
    (keep, warnings)
}

/// A monomial ideal with its minimal generators in listing order.
#[derive(Debug)]
pub struct MonomialIdeal {
    context: VariableContext,
    gens: Vec<Monomial>,
    table: OnceLock<SubsetTable>,
    pub(crate) clutter_cache: OnceLock<(Vec<GenSet>, Vec<GenSet>)>,
}

impl Clone for MonomialIdeal {
    fn clone(&self) -> Self {
        Self::from_minimal(self.context.clone(), self.gens.clone())
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.context == other.context && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl MonomialIdeal {
    fn from_minimal(context: VariableContext, gens: Vec<Monomial>) -> Self {
        Self {
            context,
            gens,
            table: OnceLock::new(),
            clutter_cache: OnceLock::new(),
        }
    }

    /// Builds an ideal, minimizing the generators. Warnings describe what
    /// was removed.
    pub fn new(
        context: VariableContext,
        gens: Vec<Monomial>,
    ) -> Result<(Self, Vec<MinimizeWarning>)> {
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            if g.nvars() != context.len() {
                return Err(Error::ContextMismatch {
                    left: context.len(),
                    right: g.nvars(),
                });
            }
            if g.is_one() {
                return Err(Error::Precondition("generator equals 1".into()));
            }
        }
        let (gens, warnings) = minimize_generators(&gens);
        for w in &warnings {
            log::warn!("{w}");
        }
        if gens.len() > 32 {
            return Err(Error::TooManyGenerators {
                count: gens.len(),
                bound: 32,
            });
        }
        Ok((Self::from_minimal(context, gens), warnings))
    }

    /// Convenience constructor from exponent vectors; panics on invalid input.
    pub fn from_exponents(names: &[&str], gens: &[&[u32]]) -> Self {
        let ctx = VariableContext::new(names.iter().copied()).expect("valid variable names");
        let gens = gens.iter().map(|e| Monomial::new(e.to_vec())).collect();
        Self::new(ctx, gens).expect("valid generators").0
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn generator(&self, index: usize) -> &Monomial {
        &self.gens[index]
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn nvars(&self) -> usize {
        self.context.len()
    }

    pub fn all_generators(&self) -> GenSet {
        GenSet::full(self.mu())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.mu() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                count: self.mu(),
            })
        }
    }

    pub(crate) fn check_set(&self, set: GenSet) -> Result<()> {
        if set.is_subset_of(self.all_generators()) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: set.iter().last().unwrap_or(0),
                count: self.mu(),
            })
        }
    }

    /// lcm and divisor sets of all generator subsets, built on first use.
    ///
    /// Panics if the ideal has more than [`MAX_GENERATORS`] generators; use
    /// [`MonomialIdeal::try_table`] to get an error instead.
    pub fn table(&self) -> &SubsetTable {
        self.try_table().expect("too many generators for subset enumeration")
    }

    pub fn try_table(&self) -> Result<&SubsetTable> {
        if self.mu() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators {
                count: self.mu(),
                bound: MAX_GENERATORS,
            });
        }
        Ok(self
            .table
            .get_or_init(|| SubsetTable::build(&self.gens, self.nvars())))
    }

    /// lcm of a non-empty generator subset.
    pub fn lcm(&self, set: GenSet) -> Result<Monomial> {
        self.check_set(set)?;
        crate::monomial::lcm_of(set.iter().map(|i| &self.gens[i]))
    }

    /// Squarefree parts of the generators, re-minimized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens: Vec<Monomial> = self.gens.iter().map(Monomial::squarefree_part).collect();
        let (gens, _) = minimize_generators(&gens);
        Self::from_minimal(self.context.clone(), gens)
    }

    /// Ideal file rendering; parses back to an equal ideal.
    pub fn to_ideal_file(&self) -> String {
        let mut out = format!("vars {}\n", self.context.names().join(" "));
        for g in &self.gens {
            out.push_str(&format!("gen {}\n", g.display(&self.context)));
        }
        out
    }

    /// 1-based label `m<i>` with the monomial, e.g. `m1=x^2*y`.
    pub fn generator_label(&self, index: usize) -> String {
        format!("m{}={}", index + 1, self.gens[index].display(&self.context))
    }
}

/// Squarefree parts of the generators, re-minimized.
pub fn radical_ideal(ideal: &MonomialIdeal) -> MonomialIdeal {
    ideal.radical()
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.display(&self.context).to_string())
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Result of parsing an ideal file.
#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub warnings: Vec<MinimizeWarning>,
}

/// Parses the ideal file format:
///
/// ```text
/// # comment
/// vars x y z
/// gen x^2*y
/// gen y^2z
/// ```
///
/// Terms are `name(^exp)?` joined by optional `*`. Without `*`, names are
/// matched greedily against the declared variables (longest match first).
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let mut context: Option<VariableContext> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        let rest_column = raw.find(rest).map_or(1, |c| c + 1);
        match keyword {
            "vars" => {
                if context.is_some() {
                    return Err(syntax(line_no, 1, "duplicate `vars` line"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(syntax(line_no, 1, "`vars` needs at least one name"));
                }
                context = Some(VariableContext::new(names).map_err(|e| match e {
                    Error::InvalidContext(msg) => syntax(line_no, rest_column, &msg),
                    other => other,
                })?);
            }
            "gen" => {
                let ctx = context
                    .as_ref()
                    .ok_or_else(|| syntax(line_no, 1, "`gen` before `vars`"))?;
                let mono = parse_monomial(rest, ctx, line_no, rest_column)?;
                if mono.is_one() {
                    return Err(Error::UnitGenerator { line: line_no });
                }
                gens.push(mono);
            }
            other => {
                return Err(syntax(line_no, 1, &format!("unknown keyword `{other}`")));
            }
        }
    }
    let context = context.ok_or_else(|| syntax(1, 1, "missing `vars` line"))?;
    let (ideal, warnings) = MonomialIdeal::new(context, gens)?;
    Ok(ParsedIdeal { ideal, warnings })
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

/// Parses one monomial such as `x^2*y` or `x^2y` against `ctx`.
pub fn parse_monomial(
    text: &str,
    ctx: &VariableContext,
    line: usize,
    column: usize,
) -> Result<Monomial> {
    let bytes = text.as_bytes();
    let mut exps = vec![0u32; ctx.len()];
    let mut pos = 0;
    let mut expect_term = true;
    if text.trim().is_empty() {
        return Err(syntax(line, column, "empty monomial"));
    }
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_whitespace() {
            pos += 1;
            continue;
        }
        if c == '*' {
            if expect_term {
                return Err(syntax(line, column + pos, "unexpected `*`"));
            }
            expect_term = true;
            pos += 1;
            continue;
        }
        if c == '1' && expect_term && text.trim() == "1" {
            return Ok(Monomial::new(exps));
        }
        if !c.is_ascii_alphabetic() {
            return Err(syntax(line, column + pos, &format!("unexpected `{c}`")));
        }
        let rest = &text[pos..];
        let var = ctx
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        let (index, name_len) = match var {
            Some((i, n)) => (i, n.len()),
            None => {
                let ident: String = rest
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                    .collect();
                return Err(Error::UnknownVariable { line, name: ident });
            }
        };
        pos += name_len;
        if bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            let ident: String = rest
                .chars()
                .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                .collect();
            return Err(Error::UnknownVariable { line, name: ident });
        }
        let mut exponent = 1u32;
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            if bytes.get(pos) == Some(&b'-') {
                return Err(Error::NegativeExponent { line });
            }
            let digits: String = text[pos..].chars().take_while(char::is_ascii_digit).collect();
            if digits.is_empty() {
                return Err(syntax(line, column + pos, "expected exponent after `^`"));
            }
            exponent = digits
                .parse()
                .map_err(|_| syntax(line, column + pos, "exponent too large"))?;
            pos += digits.len();
        }
        exps[index] = exps[index]
            .checked_add(exponent)
            .ok_or(Error::ExponentOverflow)?;
        expect_term = false;
    }
    if expect_term {
        return Err(syntax(line, column + pos, "dangling `*`"));
    }
    Ok(Monomial::new(exps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const I1: &str = "vars x y z\ngen x^2*y\ngen y^2*z\ngen x^3\ngen y^3\ngen z^3";

    #[test]
    fn parse_five_generator_example() {
        let p = parse_ideal(I1).unwrap();
        assert_eq!(p.ideal.mu(), 5);
        assert!(p.warnings.is_empty());
        assert_eq!(p.ideal.generator(0), &Monomial::new(vec![2, 1, 0]));
        assert_eq!(p.ideal.generator(4), &Monomial::new(vec![0, 0, 3]));
    }

    #[test]
    fn parse_principal_and_unit() {
        let p = parse_ideal("vars x\ngen x").unwrap();
        assert_eq!(p.ideal.mu(), 1);
        assert_eq!(
            parse_ideal("vars x y\ngen x^0").unwrap_err(),
            Error::UnitGenerator { line: 2 }
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_ideal("vars x\ngen q").unwrap_err(),
            Error::UnknownVariable { line: 2, .. }
        ));
        assert_eq!(
            parse_ideal("vars x\ngen x^-1").unwrap_err(),
            Error::NegativeExponent { line: 2 }
        );
        assert!(matches!(
            parse_ideal("gen x").unwrap_err(),
            Error::Syntax { line: 1, .. }
        ));
        assert!(matches!(
            parse_ideal("vars x\ngen x**x").unwrap_err(),
            Error::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            parse_ideal("vars x\nfoo x").unwrap_err(),
            Error::Syntax { line: 2, column: 1, .. }
        ));
    }

    #[test]
    fn juxtaposed_terms_and_comments() {
        let p = parse_ideal("# comment\nvars x y x1\ngen x^2y\ngen x1*y^3\ngen xy2").err();
        // `y2` is not a variable
        assert!(matches!(p, Some(Error::UnknownVariable { .. })));
        let p = parse_ideal("vars x y x1\ngen x^2y\ngen x1 y^3").unwrap();
        assert_eq!(p.ideal.generator(0), &Monomial::new(vec![2, 1, 0]));
        assert_eq!(p.ideal.generator(1), &Monomial::new(vec![0, 3, 1]));
    }

    #[test]
    fn minimize_examples() {
        let x = Monomial::new(vec![1]);
        let x2 = Monomial::new(vec![2]);
        let (g, w) = minimize_generators(&[x.clone(), x2]);
        assert_eq!(g, vec![x]);
        assert_eq!(w, vec![MinimizeWarning::Redundant { index: 1, by: 0 }]);

        let xy = Monomial::new(vec![1, 1]);
        let (g, w) = minimize_generators(&[xy.clone(), xy.clone()]);
        assert_eq!(g, vec![xy]);
        assert_eq!(w.len(), 1);

        let i1 = parse_ideal(I1).unwrap().ideal;
        let (g, w) = minimize_generators(i1.generators());
        assert_eq!(g, i1.generators());
        assert!(w.is_empty());
    }

    #[test]
    fn radical_examples() {
        let i1 = parse_ideal(I1).unwrap().ideal;
        let r = i1.radical();
        assert_eq!(r.to_ideal_file(), "vars x y z\ngen x\ngen y\ngen z\n");
        let p = parse_ideal("vars x\ngen x^3").unwrap().ideal;
        assert_eq!(p.radical().generators(), &[Monomial::new(vec![1])]);
        let sq = parse_ideal("vars a b c\ngen a*b\ngen b*c").unwrap().ideal;
        assert_eq!(sq.radical(), sq);
    }

    #[test]
    fn ideal_file_round_trip() {
        let i1 = parse_ideal(I1).unwrap().ideal;
        let again = parse_ideal(&i1.to_ideal_file()).unwrap().ideal;
        assert_eq!(i1, again);
    }

    fn gens() -> impl Strategy<Value = Vec<Vec<u32>>> {
        prop::collection::vec(prop::collection::vec(0u32..3, 3), 1..7)
    }

    proptest! {
        #[test]
        fn minimize_is_idempotent(raw in gens()) {
            let monos: Vec<Monomial> = raw.into_iter().map(Monomial::new).collect();
            let (once, _) = minimize_generators(&monos);
            let (twice, w) = minimize_generators(&once);
            prop_assert_eq!(&once, &twice);
            prop_assert!(w.is_empty());
        }

        #[test]
        fn radical_is_idempotent_and_squarefree(raw in gens()) {
            let monos: Vec<Monomial> = raw
                .into_iter()
                .map(Monomial::new)
                .filter(|m| !m.is_one())
                .collect();
            prop_assume!(!monos.is_empty());
            let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
            let (ideal, _) = MonomialIdeal::new(ctx, monos).unwrap();
            let r = ideal.radical();
            prop_assert!(r.is_squarefree());
            prop_assert_eq!(r.radical(), r);
        }
    }
}
