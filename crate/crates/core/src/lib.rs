//! Exact invariants of p-blocks of finite groups.
//!
//! The crate computes, over small permutation groups: ordinary character
//! tables (Dixon–Schneider), the p-block partition with defects and defect
//! groups, Brauer pairs and block fusion systems, normal chains of
//! p-subgroups with their pairing involution, and from these the
//! Alperin–McKay count, the chain-alternating-sum identity, and several
//! related counting identities, each with exact arithmetic end to end.

pub mod arith;
pub mod bounds;
pub mod chartab;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod perm;

pub use bounds::Bounds;
pub use error::{Error, Result};
