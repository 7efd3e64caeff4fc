//! Configurable resource bounds.
//!
//! Expensive operations take a [`Bounds`] and fail with an explicit
//! resource error instead of truncating silently.

/// Resource limits for the expensive enumerative operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest group order for which elements/classes are enumerated.
    pub max_group_order: u128,
    /// Largest number of conjugacy classes for character table computation.
    pub max_classes: usize,
    /// Largest p-group order for full subgroup enumeration.
    pub max_p_subgroup: u128,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_group_order: 1_000_000,
            max_classes: 120,
            max_p_subgroup: 1 << 10,
        }
    }
}

impl Bounds {
    /// Unlimited bounds, for tests that deliberately stress the defaults.
    pub fn unlimited() -> Self {
        Bounds {
            max_group_order: u128::MAX,
            max_classes: usize::MAX,
            max_p_subgroup: u128::MAX,
        }
    }
}
