//! Combinatorial Lyubeznik resolutions of monomial ideals.
//!
//! Given a monomial ideal and a total order on its minimal generators, this
//! crate builds the Lyubeznik complex of preserved sets, decides whether the
//! resulting resolution is minimal, reads Betti numbers off it, and searches
//! over orders for the Lyubeznik length, the preserved size and the
//! obstruction. An independent Taylor-complex oracle supplies ground truth.
//!
//! ```
//! use std::sync::Arc;
//! use lyubeznik::{corpus, invariants, OrderedIdeal};
//!
//! let ideal = Arc::new(corpus::koszul_xy());
//! let order = OrderedIdeal::identity(ideal);
//! assert!(invariants::is_minimal_resolution(&order));
//! assert_eq!(invariants::l_length(&order), 2);
//! ```

pub mod complex;
pub mod corpus;
pub mod covers;
pub mod error;
pub mod generators;
pub mod graphs;
pub mod ideal;
pub mod invariants;
pub mod monomial;
pub mod oracle;
pub mod orders;
pub mod subsets;

/// Exact rationals used for boundary matrices.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers for fraction-free elimination.
pub type Int = num_bigint::BigInt;

pub use complex::{lyubeznik_complex, LyubeznikComplex, SubsetClass, Symbol};
pub use covers::Cover;
pub use error::{Error, Result};
pub use ideal::{parse_ideal, MonomialIdeal, ParsedIdeal};
pub use invariants::{BettiTable, SearchConfig, SearchMode};
pub use monomial::{Monomial, VariableContext};
pub use oracle::{FieldChoice, OracleConfig};
pub use orders::OrderedIdeal;
pub use subsets::GenSet;
