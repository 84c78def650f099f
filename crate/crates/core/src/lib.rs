//! Exact combinatorics of finite root systems, Dynkin quivers and their
//! AR-quivers, the inverse of the quantized Cartan matrix, and the degree
//! invariants of pairs of positive roots.

pub mod arquiver;
pub mod cartan;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod linalg;
pub mod order;
pub mod quiver;
pub mod roots;
pub mod weyl;

/// Exact rational scalar.
pub type Q = num_rational::Ratio<i64>;

pub use arquiver::{gamma_quiver, ARQuiver, LabelMethod, Upsilon};
pub use cartan::{AutomorphismKind, CartanDatum, CartanType, DiagramAutomorphism};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, TildeTable};
pub use order::{ConvexOrder, ExponentVector};
pub use quiver::{DynkinQuiver, SubFolding};
pub use roots::{EpsilonLabel, Root, RootSystem};
pub use weyl::Word;
