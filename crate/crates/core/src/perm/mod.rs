//! Finite permutation group arithmetic: stabilizer chains, conjugacy
//! classes, centralizers, normalizers, Sylow subgroups, p-core, quotients,
//! subgroup enumeration inside p-groups, and transporter search.

mod group;
mod json;
mod permutation;
mod quotient;
mod stabchain;
mod subgroup;

pub use group::{ClassData, Classes, Elements, Group};
pub use json::{group_from_json, group_to_json, GroupJson};
pub use permutation::Perm;
pub use quotient::Quotient;
pub use subgroup::Subgroup;
