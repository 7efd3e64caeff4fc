//! Quotient groups realized as faithful permutation groups on cosets.

use super::group::Group;
use super::permutation::Perm;
use super::subgroup::Subgroup;
use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// The quotient `G/N` for `N` normal in `G`, acting on the right cosets
/// `Ng`. The action has kernel exactly `N`, so the image is a faithful
/// permutation copy of the quotient.
pub struct Quotient {
    parent: Group,
    group: Group,
    /// parent element id -> coset point
    coset_of: Vec<u32>,
    /// coset point -> least parent element id in that coset
    rep_ids: Vec<usize>,
}

impl Quotient {
    pub fn build(parent: &Group, normal: &Subgroup, bounds: &Bounds) -> Result<Quotient> {
        if !normal.is_normal_in_parent() {
            return Err(Error::precondition("subgroup is not normal in the parent"));
        }
        let elems = parent.elements(bounds)?;
        let n = elems.len();
        let mut coset_of = vec![u32::MAX; n];
        let mut rep_ids: Vec<usize> = Vec::new();
        for id in 0..n {
            if coset_of[id] != u32::MAX {
                continue;
            }
            let point = rep_ids.len() as u32;
            rep_ids.push(id);
            let g = elems.perm(id);
            for &nid in normal.elem_ids() {
                let prod = elems.perm(nid).mul(g);
                let pid = elems.id_of(&prod).expect("product stays in group");
                coset_of[pid] = point;
            }
        }
        let degree = rep_ids.len() as u32;
        let mut images = Vec::with_capacity(parent.generators().len());
        for g in parent.generators() {
            let img: Vec<u32> = rep_ids
                .iter()
                .map(|&rid| {
                    let moved = elems.perm(rid).mul(g);
                    coset_of[elems.id_of(&moved).expect("in group")] as u32
                })
                .collect();
            images.push(Perm::from_images(img)?);
        }
        let group = Group::from_generators(degree, images)?;
        if group.order() * normal.order() != parent.order() {
            return Err(Error::invariant(
                "coset action image order does not equal |G|/|N|",
            ));
        }
        Ok(Quotient {
            parent: parent.clone(),
            group,
            coset_of,
            rep_ids,
        })
    }

    /// The quotient as a permutation group in its own right.
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    /// Image of a parent element in the quotient group.
    pub fn image_of(&self, p: &Perm, bounds: &Bounds) -> Result<Perm> {
        let elems = self.parent.elements(bounds)?;
        if elems.id_of(p).is_none() {
            return Err(Error::domain("element is not in the parent group"));
        }
        let img: Vec<u32> = self
            .rep_ids
            .iter()
            .map(|&rid| self.coset_of[elems.id_of(&elems.perm(rid).mul(p)).expect("in group")])
            .collect();
        Perm::from_images(img)
    }

    /// Maps each parent conjugacy class to the class of its image.
    pub fn class_projection(&self, bounds: &Bounds) -> Result<Vec<usize>> {
        let parent_classes = self.parent.conjugacy_classes(bounds)?;
        let mut out = Vec::with_capacity(parent_classes.len());
        let parent_elems = self.parent.elements(bounds)?;
        for c in parent_classes.all() {
            let image = self.image_of(parent_elems.perm(c.rep_id), bounds)?;
            out.push(self.group.class_of(&image, bounds)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_mod_klein_four_is_s3() {
        let b = Bounds::default();
        let g = Group::from_generators(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        let v4 = g.p_core(2, &b).unwrap();
        let q = Quotient::build(&g, &v4, &b).unwrap();
        assert_eq!(q.group().order(), 6);
        assert!(!q.group().is_abelian());
    }

    #[test]
    fn quotient_by_trivial_is_isomorphic_copy() {
        let b = Bounds::default();
        let g = Group::from_generators(
            3,
            vec![
                Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
                Perm::from_cycles(3, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        let triv = g.trivial_subgroup(&b).unwrap();
        let q = Quotient::build(&g, &triv, &b).unwrap();
        assert_eq!(q.group().order(), 6);
    }

    #[test]
    fn image_of_is_homomorphism() {
        let b = Bounds::default();
        let g = Group::from_generators(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        let v4 = g.p_core(2, &b).unwrap();
        let q = Quotient::build(&g, &v4, &b).unwrap();
        for x in g.random_elements(7, 10) {
            for y in g.random_elements(11, 10) {
                let lhs = q.image_of(&x.mul(&y), &b).unwrap();
                let rhs = q.image_of(&x, &b).unwrap().mul(&q.image_of(&y, &b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
