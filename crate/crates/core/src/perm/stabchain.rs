//! Deterministic Schreier–Sims stabilizer chain.
//!
//! Base points are the smallest moved points, transversals are grown in
//! breadth-first point order with generators in input order, so repeated
//! runs produce identical chains.

use super::permutation::Perm;
use crate::error::{Error, Result};

/// One level of the chain: the pointwise stabilizer of the previous base
/// points, with an orbit transversal for its own base point.
#[derive(Debug, Clone)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    /// `transversal[p]` maps `base` to `p`; `None` outside the orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(degree: u32, base: u32) -> Level {
        Level {
            base,
            gens: Vec::new(),
            transversal: vec![None; degree as usize],
            orbit: Vec::new(),
        }
    }

    fn recompute_orbit(&mut self, degree: u32) {
        self.transversal = vec![None; degree as usize];
        self.orbit.clear();
        self.transversal[self.base as usize] = Some(Perm::identity(degree));
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let pt = self.orbit[i];
            let rep = self.transversal[pt as usize].clone().unwrap();
            for g in &self.gens {
                let img = g.apply(pt);
                if self.transversal[img as usize].is_none() {
                    self.transversal[img as usize] = Some(rep.mul(g));
                    self.orbit.push(img);
                }
            }
            i += 1;
        }
    }
}

#[derive(Debug, Clone)]
pub struct StabChain {
    degree: u32,
    levels: Vec<Level>,
    order: u128,
}

impl StabChain {
    /// Builds the chain for the group generated by `gens`.
    pub fn build(degree: u32, gens: &[Perm]) -> Result<StabChain> {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
            order: 1,
        };
        for g in gens {
            if g.degree() != degree {
                return Err(Error::invalid("generator degree mismatch"));
            }
            chain.extend(g.clone())?;
        }
        chain.order = chain.compute_order()?;
        Ok(chain)
    }

    fn compute_order(&self) -> Result<u128> {
        let mut order: u128 = 1;
        for level in &self.levels {
            order = order
                .checked_mul(level.orbit.len() as u128)
                .ok_or_else(|| Error::resource("group order exceeds u128"))?;
        }
        Ok(order)
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// Sifts `p` through the chain; returns the residue, which is the
    /// identity exactly when `p` is a member.
    pub fn sift(&self, p: &Perm) -> Perm {
        let mut rest = p.clone();
        for level in &self.levels {
            let img = rest.apply(level.base);
            match &level.transversal[img as usize] {
                Some(rep) => rest = rest.mul(&rep.inverse()),
                None => return rest,
            }
        }
        rest
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.sift(p).is_identity()
    }

    /// Incremental extension by one new generator.
    fn extend(&mut self, g: Perm) -> Result<()> {
        if self.contains(&g) {
            return Ok(());
        }
        self.add_generator(0, g)?;
        self.order = self.compute_order()?;
        Ok(())
    }

    fn add_generator(&mut self, level: usize, g: Perm) -> Result<()> {
        if g.is_identity() {
            return Ok(());
        }
        if level == self.levels.len() {
            let base = (0..self.degree)
                .find(|&pt| g.apply(pt) != pt)
                .expect("non-identity permutation moves a point");
            self.levels.push(Level::new(self.degree, base));
        }
        self.levels[level].gens.push(g);
        self.levels[level].recompute_orbit(self.degree);

        // Schreier generators of the stabilizer; recurse on the ones that
        // fail membership below this level.
        loop {
            let mut missing: Option<Perm> = None;
            {
                let lvl = &self.levels[level];
                'outer: for &pt in &lvl.orbit {
                    let rep = lvl.transversal[pt as usize].clone().unwrap();
                    for g in &lvl.gens {
                        let img = g.apply(pt);
                        let rep_img = lvl.transversal[img as usize].clone().unwrap();
                        let schreier = rep.mul(g).mul(&rep_img.inverse());
                        if !self.sub_chain_contains(level + 1, &schreier) {
                            missing = Some(schreier);
                            break 'outer;
                        }
                    }
                }
            }
            match missing {
                Some(s) => self.add_generator(level + 1, s)?,
                None => break,
            }
        }
        Ok(())
    }

    fn sub_chain_contains(&self, level: usize, p: &Perm) -> bool {
        let mut rest = p.clone();
        for lvl in &self.levels[level..] {
            let img = rest.apply(lvl.base);
            match &lvl.transversal[img as usize] {
                Some(rep) => rest = rest.mul(&rep.inverse()),
                None => return false,
            }
        }
        rest.is_identity()
    }

    /// Enumerates all group elements as products of transversal
    /// representatives, deepest level first.
    #[cfg(test)]
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &pt in &level.orbit {
                let rep = level.transversal[pt as usize].clone().unwrap();
                for e in &out {
                    next.push(e.mul(&rep));
                }
            }
            out = next;
        }
        out
    }

}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4_gens() -> Vec<Perm> {
        vec![
            Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
        ]
    }

    #[test]
    fn order_of_s4() {
        let chain = StabChain::build(4, &s4_gens()).unwrap();
        assert_eq!(chain.order(), 24);
    }

    #[test]
    fn membership() {
        let chain = StabChain::build(4, &s4_gens()).unwrap();
        assert!(chain.contains(&Perm::from_cycles(4, &[vec![1, 3]]).unwrap()));
        let odd_degree = Perm::from_cycles(5, &[vec![0, 4]]).unwrap();
        assert!(!chain.contains(&odd_degree));
    }

    #[test]
    fn elements_enumeration_matches_order() {
        let chain = StabChain::build(4, &s4_gens()).unwrap();
        let mut elems = chain.elements();
        elems.sort();
        elems.dedup();
        assert_eq!(elems.len(), 24);
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::build(3, &[]).unwrap();
        assert_eq!(chain.order(), 1);
        assert_eq!(chain.elements(), vec![Perm::identity(3)]);
    }
}
