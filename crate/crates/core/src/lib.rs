//! Finite skew braces as explicit integer tables.
//!
//! Groups are stored as full Cayley tables over `0..n`, braces as a pair of
//! such tables sharing an identity. On top of that sit the bicrossed
//! construction on `B × C`, two explicit families of bicrossed braces, and a
//! harness that checks identities and theorems by exhaustive scan.

pub mod bicrossed;
pub mod brace;
pub mod cli;
pub mod elemset;
pub mod error;
pub mod families;
pub mod group;
pub mod harness;
pub mod hom;
pub mod io;
pub mod matrix;

pub use bicrossed::{BicrossedData, BicrossedSpec, FactorPrediction, IdealProfile};
pub use brace::{AnalysisReport, DerivedSeries, Factorization, SkewBrace, SubsetStatus};
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use group::GroupTable;
pub use hom::GroupHom;
pub use matrix::MatrixModM;
