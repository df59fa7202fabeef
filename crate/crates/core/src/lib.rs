//! Primitivity preservation of binary codes and the word equations behind it.
//!
//! * [`words`]: word algebra (primitive roots, conjugacy, periodicity, lcp,
//!   submonoid membership);
//! * [`interpretations`]: interpretations of a word by a set of words,
//!   disjointness and extendability, interpretations of a square;
//! * [`ls_equation`]: the equation `x^j y^k = z^l` and its parametric families;
//! * [`primpres`]: the decision procedure for binary codes, witnesses, gluing
//!   and the root morphism;
//! * [`oracle`]: brute-force reference implementations;
//! * [`verify`]: exhaustive suites that check the fast paths against them.

pub mod error;
pub mod interpretations;
pub mod ls_equation;
pub mod oracle;
pub mod primpres;
pub mod verify;
pub mod words;

pub use error::{Error, InterpretationClause, Result};
pub use interpretations::Interpretation;
pub use ls_equation::{LsFamily, LsSolution};
pub use primpres::{BinaryCode, Tally, WitnessReport};
pub use words::{Word, WordList};
