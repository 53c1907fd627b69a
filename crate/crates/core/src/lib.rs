//! Lexsegment ideals: classification, linear quotients, explicit minimal
//! free resolutions, and brute-force oracles to check them against.

pub mod classify;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod quotients;
pub mod report;
pub mod resolution;
pub mod segment;
pub mod sweep;

pub use classify::{classify, normalize, Classification, LinearCase, NormalForm};
pub use error::{Error, Result};
pub use expr::{parse_monomial, parse_monomial_list};
pub use monomial::{AmbientContext, Monomial};
pub use oracle::BettiTable;
pub use poly::IntPoly;
pub use quotients::{quotient_order, OrderKind, OrderedGenerators, QuotientOrder};
pub use resolution::{build_resolution, resolution_from_order, verify_resolution, GradedResolution};
pub use segment::Lexsegment;
