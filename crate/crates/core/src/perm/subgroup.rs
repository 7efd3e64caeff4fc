//! Subgroup handles and the subgroup-producing operations: center,
//! centralizers, normalizers, Sylow subgroups, p-core, normal closures,
//! full subgroup enumeration of p-groups, and transporter search.

use super::group::Group;
use super::permutation::Perm;
use crate::arith;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A subgroup of a fixed parent group.
///
/// Carries its own group structure plus the sorted list of parent element
/// ids, which makes set comparisons and intersections cheap.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    group: Group,
    elem_ids: Arc<Vec<usize>>,
}

impl Subgroup {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Sorted ids into the parent element list.
    pub fn elem_ids(&self) -> &[usize] {
        &self.elem_ids
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.group.contains(p)
    }

    pub fn set_eq(&self, other: &Subgroup) -> bool {
        self.elem_ids == other.elem_ids
    }

    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        if self.order() > other.order() {
            return false;
        }
        let mut it = other.elem_ids.iter().peekable();
        'outer: for &id in self.elem_ids.iter() {
            while let Some(&&o) = it.peek() {
                if o < id {
                    it.next();
                } else if o == id {
                    continue 'outer;
                } else {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// Member permutations, sorted.
    pub fn perms(&self, bounds: &Bounds) -> Result<Vec<Perm>> {
        let elems = self.parent.elements(bounds)?;
        Ok(self.elem_ids.iter().map(|&i| elems.perm(i).clone()).collect())
    }

    pub fn intersection(&self, other: &Subgroup, bounds: &Bounds) -> Result<Subgroup> {
        let ids: Vec<usize> = self
            .elem_ids
            .iter()
            .copied()
            .filter(|id| other.elem_ids.binary_search(id).is_ok())
            .collect();
        self.parent.subgroup_from_ids(ids, bounds)
    }

    /// The conjugate subgroup `self^g`.
    pub fn conjugate(&self, g: &Perm, bounds: &Bounds) -> Result<Subgroup> {
        let elems = self.parent.elements(bounds)?;
        let mut ids: Vec<usize> = self
            .elem_ids
            .iter()
            .map(|&i| {
                elems
                    .id_of(&elems.perm(i).conjugate_by(g))
                    .ok_or_else(|| Error::domain("conjugating element is not in the parent group"))
            })
            .collect::<Result<_>>()?;
        ids.sort_unstable();
        let gens: Vec<Perm> = self
            .group
            .generators()
            .iter()
            .map(|s| s.conjugate_by(g))
            .collect();
        let group = Group::from_generators(self.parent.degree(), gens)?;
        Ok(Subgroup {
            parent: self.parent.clone(),
            group,
            elem_ids: Arc::new(ids),
        })
    }

    pub fn is_normal_in_parent(&self) -> bool {
        self.parent
            .generators()
            .iter()
            .all(|g| self.group.generators().iter().all(|s| self.contains(&s.conjugate_by(g))))
    }

    /// True when `other` normalizes `self` (both subgroups of one parent).
    pub fn normalized_by(&self, other: &Subgroup) -> bool {
        other
            .group
            .generators()
            .iter()
            .all(|g| self.group.generators().iter().all(|s| self.contains(&s.conjugate_by(g))))
    }

    /// Re-roots the handle at another parent group (the members must all lie
    /// in `new_parent`).
    pub fn as_subgroup_of(&self, new_parent: &Group, bounds: &Bounds) -> Result<Subgroup> {
        new_parent.subgroup(self.group.generators().to_vec(), bounds)
    }

    /// Derived subgroup `[H, H]` as a subgroup of the same parent.
    pub fn derived(&self, bounds: &Bounds) -> Result<Subgroup> {
        let gens = self.group.derived_subgroup_gens()?;
        self.parent.subgroup(gens, bounds)
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order={} of order={})", self.order(), self.parent.order())
    }
}

impl Group {
    /// Wraps generator permutations as a subgroup handle of `self`.
    pub fn subgroup(&self, gens: Vec<Perm>, bounds: &Bounds) -> Result<Subgroup> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::invalid("subgroup generator lies outside the parent group"));
            }
        }
        let group = Group::from_generators(self.degree(), gens)?;
        let elems = self.elements(bounds)?;
        let sub_elems = group.elements(bounds)?;
        let mut ids = Vec::with_capacity(sub_elems.len());
        for p in sub_elems.perms() {
            ids.push(elems.id_of(p).expect("member of subgroup is member of parent"));
        }
        ids.sort_unstable();
        Ok(Subgroup {
            parent: self.clone(),
            group,
            elem_ids: Arc::new(ids),
        })
    }

    /// Builds the subgroup handle for a set of parent element ids that is
    /// closed under the group operations, deriving a small generating set.
    pub fn subgroup_from_ids(&self, mut ids: Vec<usize>, bounds: &Bounds) -> Result<Subgroup> {
        ids.sort_unstable();
        ids.dedup();
        let elems = self.elements(bounds)?;
        let identity_id = elems.id_of(&self.identity()).expect("identity in group");
        if ids.binary_search(&identity_id).is_err() {
            return Err(Error::invalid("element set does not contain the identity"));
        }
        // greedy generator selection: repeatedly adjoin the least id not yet
        // generated, tracking the generated set by naive closure
        let mut gens: Vec<Perm> = Vec::new();
        let mut generated: BTreeSet<usize> = BTreeSet::new();
        generated.insert(identity_id);
        loop {
            let missing = ids.iter().copied().find(|id| !generated.contains(id));
            let Some(next) = missing else { break };
            gens.push(elems.perm(next).clone());
            // closure of `generated ∪ {next}` under products
            let mut frontier: Vec<usize> = vec![next];
            generated.insert(next);
            while let Some(cur) = frontier.pop() {
                let cur_perm = elems.perm(cur).clone();
                let snapshot: Vec<usize> = generated.iter().copied().collect();
                for other in snapshot {
                    for prod in [
                        cur_perm.mul(elems.perm(other)),
                        elems.perm(other).mul(&cur_perm),
                    ] {
                        let pid = elems
                            .id_of(&prod)
                            .ok_or_else(|| Error::invalid("element set is not closed in the group"))?;
                        if generated.insert(pid) {
                            frontier.push(pid);
                        }
                    }
                }
            }
        }
        if generated.len() != ids.len() || !ids.iter().all(|id| generated.contains(id)) {
            return Err(Error::invalid("element id set is not closed under products"));
        }
        let group = Group::from_generators(self.degree(), gens)?;
        debug_assert_eq!(group.order() as usize, ids.len());
        Ok(Subgroup {
            parent: self.clone(),
            group,
            elem_ids: Arc::new(ids),
        })
    }

    pub fn trivial_subgroup(&self, bounds: &Bounds) -> Result<Subgroup> {
        self.subgroup(vec![], bounds)
    }

    pub fn full_subgroup(&self, bounds: &Bounds) -> Result<Subgroup> {
        self.subgroup(self.generators().to_vec(), bounds)
    }

    /// Elements commuting with every member of `targets`.
    pub fn centralizer_of_gens(&self, targets: &[Perm], bounds: &Bounds) -> Result<Subgroup> {
        let elems = self.elements(bounds)?;
        let ids: Vec<usize> = (0..elems.len())
            .filter(|&i| {
                let e = elems.perm(i);
                targets.iter().all(|t| e.mul(t) == t.mul(e))
            })
            .collect();
        self.subgroup_from_ids(ids, bounds)
    }

    pub fn centralizer(&self, sub: &Subgroup, bounds: &Bounds) -> Result<Subgroup> {
        self.centralizer_of_gens(sub.group().generators(), bounds)
    }

    pub fn centralizer_of_element(&self, p: &Perm, bounds: &Bounds) -> Result<Subgroup> {
        self.centralizer_of_gens(std::slice::from_ref(p), bounds)
    }

    pub fn center(&self, bounds: &Bounds) -> Result<Subgroup> {
        self.centralizer_of_gens(self.generators(), bounds)
    }

    /// Elements `g` with `sub^g = sub`.
    pub fn normalizer(&self, sub: &Subgroup, bounds: &Bounds) -> Result<Subgroup> {
        let elems = self.elements(bounds)?;
        let sub_gens = sub.group().generators().to_vec();
        let ids: Vec<usize> = (0..elems.len())
            .filter(|&i| {
                let g = elems.perm(i);
                sub_gens.iter().all(|s| sub.contains(&s.conjugate_by(g)))
            })
            .collect();
        self.subgroup_from_ids(ids, bounds)
    }

    /// A Sylow p-subgroup, grown by repeated normalizer extension.
    pub fn sylow(&self, p: u64, bounds: &Bounds) -> Result<Subgroup> {
        if !arith::is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        let target = arith::p_part(self.order(), p);
        let mut current = self.trivial_subgroup(bounds)?;
        while current.order() < target {
            let norm = if current.is_trivial() {
                self.full_subgroup(bounds)?
            } else {
                self.normalizer(&current, bounds)?
            };
            let elems = self.elements(bounds)?;
            let mut extension: Option<Perm> = None;
            for &id in norm.elem_ids() {
                let g = elems.perm(id);
                let m = g.order();
                let p_val = arith::p_valuation(m as u128, p);
                if p_val == 0 {
                    continue;
                }
                let p_prime = m / (p as u64).pow(p_val);
                let x = g.pow(p_prime as i64);
                if !current.contains(&x) {
                    extension = Some(x);
                    break;
                }
            }
            let x = extension.ok_or_else(|| {
                Error::invariant("Sylow growth stalled: no p-element outside current subgroup")
            })?;
            let mut gens = current.group().generators().to_vec();
            gens.push(x);
            current = self.subgroup(gens, bounds)?;
        }
        Ok(current)
    }

    /// Largest normal p-subgroup: the intersection of all Sylow p-subgroups.
    pub fn p_core(&self, p: u64, bounds: &Bounds) -> Result<Subgroup> {
        let syl = self.sylow(p, bounds)?;
        let elems = self.elements(bounds)?;
        let conj_ids = |ids: &[usize], g: &Perm| -> Vec<usize> {
            let mut out: Vec<usize> = ids
                .iter()
                .map(|&i| elems.id_of(&elems.perm(i).conjugate_by(g)).expect("in group"))
                .collect();
            out.sort_unstable();
            out
        };
        let start: Vec<usize> = syl.elem_ids().to_vec();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(start.clone());
        let mut queue = vec![start.clone()];
        let mut intersection: Vec<usize> = start;
        while let Some(s) = queue.pop() {
            for g in self.generators() {
                let t = conj_ids(&s, g);
                if seen.insert(t.clone()) {
                    intersection.retain(|id| t.binary_search(id).is_ok());
                    queue.push(t);
                }
            }
        }
        self.subgroup_from_ids(intersection, bounds)
    }

    /// Searches for `g` with `a^g = b`; `None` means no such element exists
    /// (the scan over the parent is exhaustive).
    pub fn transporter(&self, a: &Subgroup, b: &Subgroup, bounds: &Bounds) -> Result<Option<Perm>> {
        if a.order() != b.order() {
            return Ok(None);
        }
        let elems = self.elements(bounds)?;
        let a_gens = a.group().generators().to_vec();
        for i in 0..elems.len() {
            let g = elems.perm(i);
            if a_gens.iter().all(|s| b.contains(&s.conjugate_by(g))) {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    /// Generators of the normal closure of `seed` in `self`
    /// (membership-based; no element enumeration).
    pub fn normal_closure_gens(&self, seed: &[Perm]) -> Result<Vec<Perm>> {
        let mut gens: Vec<Perm> = seed
            .iter()
            .filter(|p| !p.is_identity())
            .cloned()
            .collect();
        let mut closure = Group::from_generators(self.degree(), gens.clone())?;
        loop {
            let mut added = false;
            for g in self.generators() {
                for s in gens.clone() {
                    let c = s.conjugate_by(g);
                    if !closure.contains(&c) {
                        gens.push(c);
                        closure = Group::from_generators(self.degree(), gens.clone())?;
                        added = true;
                    }
                }
            }
            if !added {
                return Ok(gens);
            }
        }
    }

    /// Generators of the derived subgroup `[G, G]`.
    pub fn derived_subgroup_gens(&self) -> Result<Vec<Perm>> {
        let gens = self.generators();
        let mut comms = Vec::new();
        for a in gens {
            for b in gens {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_gens(&comms)
    }

    /// Every subgroup of a p-group, by cyclic extension layer by layer.
    pub fn subgroups_of_p_group(&self, p: u64, bounds: &Bounds) -> Result<Vec<Subgroup>> {
        if !self.is_p_group(p) {
            return Err(Error::precondition(format!(
                "group of order {} is not a {p}-group",
                self.order()
            )));
        }
        if self.order() > bounds.max_p_subgroup {
            return Err(Error::resource(format!(
                "p-group order {} exceeds subgroup enumeration bound {}",
                self.order(),
                bounds.max_p_subgroup
            )));
        }
        let elems = self.elements(bounds)?;
        let trivial = self.trivial_subgroup(bounds)?;
        let mut by_ids: BTreeSet<Vec<usize>> = BTreeSet::new();
        by_ids.insert(trivial.elem_ids().to_vec());
        let mut all: Vec<Subgroup> = vec![trivial.clone()];
        let mut layer: Vec<Subgroup> = vec![trivial];
        while !layer.is_empty() {
            let mut next: Vec<Subgroup> = Vec::new();
            for h in &layer {
                let norm = self.normalizer(h, bounds)?;
                for &id in norm.elem_ids() {
                    let x = elems.perm(id);
                    if h.contains(x) || !h.contains(&x.pow(p as i64)) {
                        continue;
                    }
                    let mut gens = h.group().generators().to_vec();
                    gens.push(x.clone());
                    let s = self.subgroup(gens, bounds)?;
                    debug_assert_eq!(s.order(), h.order() * p as u128);
                    if by_ids.insert(s.elem_ids().to_vec()) {
                        next.push(s);
                    }
                }
            }
            next.sort_by(|a, b| a.elem_ids().cmp(b.elem_ids()));
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elem_ids().cmp(b.elem_ids()))
        });
        Ok(all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> Group {
        Group::from_generators(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn a5() -> Group {
        Group::from_generators(
            5,
            vec![
                Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
                Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sylow_of_s4() {
        let b = Bounds::default();
        let g = s4();
        let syl2 = g.sylow(2, &b).unwrap();
        assert_eq!(syl2.order(), 8);
        let syl3 = g.sylow(3, &b).unwrap();
        assert_eq!(syl3.order(), 3);
        // p not dividing order
        assert_eq!(g.sylow(5, &b).unwrap().order(), 1);
    }

    #[test]
    fn p_core_examples() {
        let b = Bounds::default();
        // O_2(S4) is the Klein four group
        let core = s4().p_core(2, &b).unwrap();
        assert_eq!(core.order(), 4);
        assert!(core.is_normal_in_parent());
        // A5 is simple
        assert_eq!(a5().p_core(2, &b).unwrap().order(), 1);
    }

    #[test]
    fn center_and_centralizer() {
        let b = Bounds::default();
        let g = s4();
        assert_eq!(g.center(&b).unwrap().order(), 1);
        let t = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let c = g.centralizer_of_element(&t, &b).unwrap();
        // centralizer of a double transposition in S4 is D8
        assert_eq!(c.order(), 8);
    }

    #[test]
    fn transporter_sylow_conjugacy_and_refusal() {
        let b = Bounds::default();
        let g = s4();
        let p1 = g.sylow(2, &b).unwrap();
        let three_cycle = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        let p2 = p1.conjugate(&three_cycle, &b).unwrap();
        let t = g.transporter(&p1, &p2, &b).unwrap();
        assert!(t.is_some());

        // a transposition and a double transposition are not conjugate
        let a = g
            .subgroup(vec![Perm::from_cycles(4, &[vec![0, 1]]).unwrap()], &b)
            .unwrap();
        let c = g
            .subgroup(vec![Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()], &b)
            .unwrap();
        assert!(g.transporter(&a, &c, &b).unwrap().is_none());
        // identity transporter for equal subgroups
        let same = g.transporter(&a, &a, &b).unwrap().unwrap();
        assert!(a.conjugate(&same, &b).unwrap().set_eq(&a));
    }

    #[test]
    fn subgroups_of_q8_and_d8() {
        let b = Bounds::default();
        // Q8 by its left regular representation
        let i = Perm::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 6, 5, 7]]).unwrap();
        let j = Perm::from_cycles(8, &[vec![0, 4, 2, 5], vec![1, 7, 3, 6]]).unwrap();
        let q8 = Group::from_generators(8, vec![i, j]).unwrap();
        assert_eq!(q8.order(), 8);
        let subs = q8.subgroups_of_p_group(2, &b).unwrap();
        assert_eq!(subs.len(), 6);

        let r = Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let s = Perm::from_cycles(4, &[vec![0, 2]]).unwrap();
        let d8 = Group::from_generators(4, vec![r, s]).unwrap();
        assert_eq!(d8.order(), 8);
        let subs = d8.subgroups_of_p_group(2, &b).unwrap();
        assert_eq!(subs.len(), 10);

        // count of order-p subgroups is 1 mod p
        let order_p = subs.iter().filter(|s| s.order() == 2).count();
        assert_eq!(order_p % 2, 1);
    }

    #[test]
    fn derived_subgroup_of_s4_is_a4() {
        let b = Bounds::default();
        let g = s4();
        let d = g.full_subgroup(&b).unwrap().derived(&b).unwrap();
        assert_eq!(d.order(), 12);
        assert!(d.is_normal_in_parent());
    }

    #[test]
    fn orbit_stabilizer_property() {
        let b = Bounds::default();
        let g = a5();
        for pt in 0..5 {
            let orbit = g.orbit(pt);
            let elems = g.elements(&b).unwrap();
            let stab_ids: Vec<usize> = (0..elems.len())
                .filter(|&i| elems.perm(i).apply(pt) == pt)
                .collect();
            assert_eq!(orbit.len() * stab_ids.len(), 60);
        }
    }
}
