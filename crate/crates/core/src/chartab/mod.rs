//! Ordinary character tables with exact cyclotomic values.

mod dixon;
mod io;

pub use io::{table_from_json, table_to_json, TableJson};

use crate::bounds::Bounds;
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::perm::{Classes, Elements, Group, Perm, Subgroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::sync::{Arc, OnceLock};

/// Class-algebra structure constants: `get(i, j, k)` counts pairs
/// (x, y) ∈ C_i × C_j with xy equal to a fixed element of C_k.
pub struct StructureConstants {
    r: usize,
    counts: Vec<u64>,
}

impl StructureConstants {
    pub fn compute(group: &Group, bounds: &Bounds) -> Result<StructureConstants> {
        let classes = group.conjugacy_classes(bounds)?;
        let elements = group.elements(bounds)?;
        let r = classes.len();
        let mut counts = vec![0u64; r * r * r];
        for k in 0..r {
            let z = elements.perm(classes.class(k).rep_id).clone();
            for i in 0..r {
                for &xid in &classes.class(i).members {
                    let y = elements.perm(xid).inverse().mul(&z);
                    let j = classes.class_of_id(elements.id_of(&y).expect("product in group"));
                    counts[(i * r + j) * r + k] += 1;
                }
            }
        }
        Ok(StructureConstants { r, counts })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.counts[(i * self.r + j) * self.r + k]
    }
}

/// The ordinary character table of a finite group.
///
/// Rows are the irreducible characters in canonical order (degree, then
/// lexicographic value order); columns follow the group's canonical class
/// order. All values live in Q(ζ_e), e the group exponent, and both
/// orthogonality relations are verified exactly at construction.
pub struct CharTable {
    group: Group,
    classes: Arc<Classes>,
    elements: Arc<Elements>,
    exponent: u64,
    values: Vec<Vec<CycNum>>,
    degrees: Vec<u64>,
    inverse_class: Vec<usize>,
    constants: OnceLock<Arc<StructureConstants>>,
}

impl CharTable {
    /// Computes the table by the Dixon–Schneider method.
    pub fn compute(group: &Group, bounds: &Bounds) -> Result<CharTable> {
        dixon::compute(group, bounds)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        group: Group,
        classes: Arc<Classes>,
        elements: Arc<Elements>,
        exponent: u64,
        values: Vec<Vec<CycNum>>,
        degrees: Vec<u64>,
        inverse_class: Vec<usize>,
        constants: Option<Arc<StructureConstants>>,
    ) -> CharTable {
        let table = CharTable {
            group,
            classes,
            elements,
            exponent,
            values,
            degrees,
            inverse_class,
            constants: OnceLock::new(),
        };
        if let Some(c) = constants {
            let _ = table.constants.set(c);
        }
        table
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &Arc<Classes> {
        &self.classes
    }

    pub fn elements(&self) -> &Arc<Elements> {
        &self.elements
    }

    /// Number of classes = number of irreducible characters.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.group.order() as u64
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.degrees[row]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn value(&self, row: usize, class: usize) -> &CycNum {
        &self.values[row][class]
    }

    pub fn row(&self, row: usize) -> &[CycNum] {
        &self.values[row]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    /// Class of rep^k.
    pub fn class_power(&self, class: usize, k: u64) -> usize {
        let rep = self.elements.perm(self.classes.class(class).rep_id);
        let p = rep.pow(k as i64);
        self.classes
            .class_of_id(self.elements.id_of(&p).expect("power stays in group"))
    }

    pub fn class_size(&self, class: usize) -> u64 {
        self.classes.class(class).size
    }

    pub fn class_rep(&self, class: usize) -> &Perm {
        self.elements.perm(self.classes.class(class).rep_id)
    }

    pub fn structure_constants(&self, bounds: &Bounds) -> Result<Arc<StructureConstants>> {
        if let Some(c) = self.constants.get() {
            return Ok(c.clone());
        }
        let computed = Arc::new(StructureConstants::compute(&self.group, bounds)?);
        Ok(self.constants.get_or_init(|| computed).clone())
    }

    /// Central character value |K| χ(x_K) / χ(1) (an algebraic integer).
    pub fn central_character_value(&self, row: usize, class: usize) -> CycNum {
        let size = BigRational::from(BigInt::from(self.class_size(class)));
        let deg = BigRational::from(BigInt::from(self.degrees[row]));
        self.values[row][class].scale(&(size / deg))
    }

    /// Exact verification of both orthogonality relations and Σ deg² = |G|.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let r = self.len();
        let n = self.order();
        let deg_sum: u64 = self.degrees.iter().map(|d| d * d).sum();
        if deg_sum != n {
            return Err(Error::invariant("degree squares do not sum to the group order"));
        }
        let n_cyc = CycNum::from_int(n as i64);
        for a in 0..r {
            for b in a..r {
                let mut acc = CycNum::zero(1);
                for j in 0..r {
                    let term = self.values[a][j].mul(&self.values[b][self.inverse_class[j]]);
                    acc = acc.add(&term.scale(&BigRational::from(BigInt::from(self.class_size(j)))));
                }
                let expected = if a == b { n_cyc.clone() } else { CycNum::zero(1) };
                if acc != expected {
                    return Err(Error::invariant(format!(
                        "row orthogonality fails for rows {a}, {b}"
                    )));
                }
            }
        }
        for i in 0..r {
            for j in i..r {
                let mut acc = CycNum::zero(1);
                for chi in 0..r {
                    acc = acc.add(&self.values[chi][i].mul(&self.values[chi][self.inverse_class[j]]));
                }
                let expected = if i == j {
                    CycNum::from_int((n / self.class_size(i)) as i64)
                } else {
                    CycNum::zero(1)
                };
                if acc != expected {
                    return Err(Error::invariant(format!(
                        "column orthogonality fails for classes {i}, {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Row index of a class function given by its values, if it is a row.
    pub fn find_row(&self, values: &[CycNum]) -> Option<usize> {
        (0..self.len()).find(|&row| {
            self.values[row]
                .iter()
                .zip(values.iter())
                .all(|(a, b)| a == b)
        })
    }

    /// Restriction of row `row` to a central subgroup: χ|_Z = χ(1)·η with η
    /// linear; returns η.
    pub fn restrict_to_central(
        &self,
        row: usize,
        z: &Subgroup,
        bounds: &Bounds,
    ) -> Result<LinearChar> {
        let center = self.group.center(bounds)?;
        if !z.is_contained_in(&center) {
            return Err(Error::precondition("subgroup is not central"));
        }
        let z_elems = z.group().elements(bounds)?;
        let deg = BigRational::from(BigInt::from(self.degrees[row]));
        let mut values = Vec::with_capacity(z_elems.len());
        for p in z_elems.perms() {
            let class = self.group.class_of(p, bounds)?;
            let v = self.values[row][class].scale(&(BigRational::from(BigInt::from(1)) / deg.clone()));
            values.push(v);
        }
        LinearChar::new(z.group().clone(), values, bounds)
    }

    /// True when χ covers η, i.e. χ|_Z = χ(1)·η.
    pub fn covers(&self, row: usize, eta: &LinearChar, bounds: &Bounds) -> Result<bool> {
        let z_elems = eta.group().elements(bounds)?;
        let deg = BigRational::from(BigInt::from(self.degrees[row]));
        for (id, p) in z_elems.perms().iter().enumerate() {
            let class = self.group.class_of(p, bounds)?;
            let expected = eta.value_by_id(id).scale(&deg);
            if self.values[row][class] != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A linear (degree-1) character of a group, stored by element.
#[derive(Clone)]
pub struct LinearChar {
    group: Group,
    /// Value per element id (sorted element order of `group`).
    values: Vec<CycNum>,
}

impl LinearChar {
    /// Wraps per-element values, verifying multiplicativity on generators.
    pub fn new(group: Group, values: Vec<CycNum>, bounds: &Bounds) -> Result<LinearChar> {
        let elems = group.elements(bounds)?;
        if values.len() != elems.len() {
            return Err(Error::invalid("one value per element required"));
        }
        let chr = LinearChar { group, values };
        // spot-verify the homomorphism property on generator products
        let elems = chr.group.elements(bounds)?;
        for g in chr.group.generators() {
            for (id, p) in elems.perms().iter().enumerate() {
                let prod = p.mul(g);
                let pid = elems.id_of(&prod).expect("closed");
                let gid = elems.id_of(g).expect("generator in group");
                let lhs = chr.values[pid].clone();
                let rhs = chr.values[id].mul(&chr.values[gid]);
                if lhs != rhs {
                    return Err(Error::invalid("values are not multiplicative"));
                }
            }
        }
        Ok(chr)
    }

    pub fn trivial(group: Group, bounds: &Bounds) -> Result<LinearChar> {
        let n = group.elements(bounds)?.len();
        Ok(LinearChar {
            group,
            values: vec![CycNum::one(1); n],
        })
    }

    /// Extracts a linear character from a degree-1 table row.
    pub fn from_table_row(table: &CharTable, row: usize, bounds: &Bounds) -> Result<LinearChar> {
        if table.degree(row) != 1 {
            return Err(Error::precondition("row is not a linear character"));
        }
        let elems = table.group().elements(bounds)?;
        let mut values = Vec::with_capacity(elems.len());
        for p in elems.perms() {
            let class = table.group().class_of(p, bounds)?;
            values.push(table.value(row, class).clone());
        }
        Ok(LinearChar {
            group: table.group().clone(),
            values,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn value_by_id(&self, id: usize) -> &CycNum {
        &self.values[id]
    }

    pub fn value_of(&self, p: &Perm, bounds: &Bounds) -> Result<CycNum> {
        let id = self.group.elem_id(p, bounds)?;
        Ok(self.values[id].clone())
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v == &CycNum::one(1))
    }

    /// True when the subgroup generated by `gens` lies in the kernel.
    pub fn kills(&self, gens: &[Perm], bounds: &Bounds) -> Result<bool> {
        for g in gens {
            if &self.value_of(g, bounds)? != &CycNum::one(1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pointwise product (both characters on the same group).
    pub fn product(&self, other: &LinearChar) -> LinearChar {
        LinearChar {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    /// Restriction to a subgroup of the carrier.
    pub fn restrict(&self, sub: &Group, bounds: &Bounds) -> Result<LinearChar> {
        let sub_elems = sub.elements(bounds)?;
        let mut values = Vec::with_capacity(sub_elems.len());
        for p in sub_elems.perms() {
            values.push(self.value_of(p, bounds)?);
        }
        Ok(LinearChar {
            group: sub.clone(),
            values,
        })
    }

    /// Equality as characters of the same abstract subgroup (same carrier).
    pub fn same_values(&self, other: &LinearChar) -> bool {
        self.values == other.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn s3() -> Group {
        Group::from_generators(
            3,
            vec![
                Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
                Perm::from_cycles(3, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn s3_table() {
        let b = Bounds::default();
        let t = CharTable::compute(&s3(), &b).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn c4_table_has_four_linear_rows() {
        let b = Bounds::default();
        let c4 = Group::from_generators(4, vec![Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()])
            .unwrap();
        let t = CharTable::compute(&c4, &b).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1]);
        // some value is a primitive fourth root of unity
        let i = CycNum::root_of_unity(4, 1);
        let found = (0..4).any(|row| (0..4).any(|cl| t.value(row, cl) == &i));
        assert!(found);
    }

    #[test]
    fn s4_degrees() {
        let b = Bounds::default();
        let s4 = Group::from_generators(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        let t = CharTable::compute(&s4, &b).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2, 3, 3]);
    }

    #[test]
    fn trivial_character_restricts_trivially() {
        let b = Bounds::default();
        let g = s3();
        let t = CharTable::compute(&g, &b).unwrap();
        let z = g.trivial_subgroup(&b).unwrap();
        let eta = t.restrict_to_central(0, &z, &b).unwrap();
        assert!(eta.is_trivial());
        // with Z = 1 every character covers the trivial character
        for row in 0..t.len() {
            assert!(t.covers(row, &eta, &b).unwrap());
        }
    }
}
