//! Elements of the group algebra k[G] over GF(p^k), stored sparsely by
//! ambient element id. Used for block idempotents of subgroups, the Brauer
//! truncation, and idempotent conjugation.

use crate::bounds::Bounds;
use crate::cyclotomic::{Gf, GfElt};
use crate::error::{Error, Result};
use crate::perm::{Elements, Group};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A group-algebra element with support inside the ambient group.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: BTreeMap<usize, GfElt>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(ambient: &Group, field: &Gf, bounds: &Bounds) -> Result<AlgebraElement> {
        let elems = ambient.elements(bounds)?;
        let id = elems
            .id_of(&ambient.identity())
            .expect("identity is a member");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(id, field.one());
        Ok(AlgebraElement { coeffs })
    }

    pub fn from_coeffs(coeffs: BTreeMap<usize, GfElt>, field: &Gf) -> AlgebraElement {
        let coeffs = coeffs
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        AlgebraElement { coeffs }
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &GfElt)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn coefficient(&self, elem_id: usize, field: &Gf) -> GfElt {
        self.coeffs
            .get(&elem_id)
            .cloned()
            .unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement, field: &Gf) -> AlgebraElement {
        let mut coeffs = self.coeffs.clone();
        for (&i, c) in &other.coeffs {
            let cur = coeffs.entry(i).or_insert_with(|| field.zero());
            *cur = field.add(cur, c);
        }
        AlgebraElement::from_coeffs(coeffs, field)
    }

    /// Convolution product in k[G].
    pub fn mul(
        &self,
        other: &AlgebraElement,
        elems: &Arc<Elements>,
        field: &Gf,
    ) -> AlgebraElement {
        let mut coeffs: BTreeMap<usize, GfElt> = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            let pi = elems.perm(i);
            for (&j, b) in &other.coeffs {
                let prod = pi.mul(elems.perm(j));
                let pid = elems.id_of(&prod).expect("product stays in the group");
                let term = field.mul(a, b);
                let cur = coeffs.entry(pid).or_insert_with(|| field.zero());
                *cur = field.add(cur, &term);
            }
        }
        AlgebraElement::from_coeffs(coeffs, field)
    }

    /// Conjugate g^-1 (·) g, mapping each supporting element x to x^g.
    pub fn conjugate_by(
        &self,
        g: &crate::perm::Perm,
        elems: &Arc<Elements>,
        field: &Gf,
    ) -> Result<AlgebraElement> {
        let mut coeffs = BTreeMap::new();
        for (&i, c) in &self.coeffs {
            let img = elems.perm(i).conjugate_by(g);
            let id = elems
                .id_of(&img)
                .ok_or_else(|| Error::domain("conjugate leaves the ambient group"))?;
            coeffs.insert(id, c.clone());
        }
        Ok(AlgebraElement { coeffs })
    }

    /// Brauer truncation: keep only coefficients on the given element ids.
    pub fn truncate_to(&self, keep: &[usize]) -> AlgebraElement {
        AlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(i, _)| keep.binary_search(i).is_ok())
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        }
    }

    /// True when the support lies inside the given sorted id set.
    pub fn supported_in(&self, ids: &[usize]) -> bool {
        self.coeffs.keys().all(|i| ids.binary_search(i).is_ok())
    }
}

impl std::fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AlgebraElement(support={})", self.coeffs.len())
    }
}
