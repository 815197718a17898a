//! Small equivalent subgraphs of directed graphs.
//!
//! The acyclic part of a graph is solved exactly by transitive reduction and
//! every strong component is handed to one of the SCSS approximation
//! algorithms in [`approx`]. Exact oracles and lower bounds live in
//! [`oracle`]; adversarial families and hardness reductions in [`instances`].

pub mod approx;
pub mod error;
pub mod graph;
pub mod instances;
pub mod meg;
pub mod oracle;

pub use error::{Error, ParseErrorKind, Result};
pub use graph::{DiGraph, EdgeId};

/// Exact rational used for ratios and bounds.
pub type Rational = num_rational::Ratio<i128>;
