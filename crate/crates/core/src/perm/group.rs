//! Finite permutation groups with cached stabilizer chain, element list,
//! and conjugacy class data.

use super::permutation::Perm;
use super::stabchain::StabChain;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

/// A finite permutation group on `0..degree`.
///
/// Cheap to clone (shared immutable state). Caches are filled on first use
/// and shared across clones; all derived data is deterministic.
#[derive(Clone)]
pub struct Group {
    inner: Arc<Inner>,
}

struct Inner {
    degree: u32,
    gens: Vec<Perm>,
    chain: StabChain,
    name: Option<String>,
    elements: OnceLock<Arc<Elements>>,
    classes: OnceLock<Arc<Classes>>,
}

/// Sorted element list with a word in the generators for each element.
pub struct Elements {
    perms: Vec<Perm>,
    words: Vec<Vec<u32>>,
}

impl Elements {
    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perm(&self, id: usize) -> &Perm {
        &self.perms[id]
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    /// Word in the group generators evaluating to element `id`
    /// (indices applied left to right; empty word is the identity).
    pub fn word(&self, id: usize) -> &[u32] {
        &self.words[id]
    }

    pub fn id_of(&self, p: &Perm) -> Option<usize> {
        self.perms.binary_search(p).ok()
    }
}

/// One conjugacy class.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub rep_id: usize,
    pub size: u64,
    /// Order of the elements in the class.
    pub order: u64,
    pub members: Vec<usize>,
}

/// Conjugacy class partition. Classes are sorted by
/// (element order, class size, least member id), so the identity is class 0.
pub struct Classes {
    classes: Vec<ClassData>,
    class_of: Vec<usize>,
    exponent: u64,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, idx: usize) -> &ClassData {
        &self.classes[idx]
    }

    pub fn all(&self) -> &[ClassData] {
        &self.classes
    }

    pub fn class_of_id(&self, elem_id: usize) -> usize {
        self.class_of[elem_id]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }
}

impl Group {
    /// Builds a group from generator permutations, computing its order via a
    /// stabilizer chain.
    pub fn from_generators(degree: u32, gens: Vec<Perm>) -> Result<Group> {
        let mut kept: Vec<Perm> = Vec::new();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::invalid(format!(
                    "generator degree {} does not match group degree {}",
                    g.degree(),
                    degree
                )));
            }
            if !g.is_identity() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        let chain = StabChain::build(degree, &kept)?;
        Ok(Group {
            inner: Arc::new(Inner {
                degree,
                gens: kept,
                chain,
                name: None,
                elements: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: u32) -> Group {
        Group::from_generators(degree, vec![]).expect("trivial group")
    }

    pub fn with_name(self, name: impl Into<String>) -> Group {
        let mut inner = match Arc::try_unwrap(self.inner) {
            Ok(inner) => inner,
            Err(arc) => Inner {
                degree: arc.degree,
                gens: arc.gens.clone(),
                chain: arc.chain.clone(),
                name: arc.name.clone(),
                elements: OnceLock::new(),
                classes: OnceLock::new(),
            },
        };
        inner.name = Some(name.into());
        Group { inner: Arc::new(inner) }
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.gens
    }

    pub fn order(&self) -> u128 {
        self.inner.chain.order()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.inner.degree)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.inner.chain.contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order();
        let p = p as u128;
        while n % p == 0 {
            n /= p;
        }
        n == 1
    }

    /// Evaluates a word in the generators (left to right).
    pub fn evaluate_word(&self, word: &[u32]) -> Result<Perm> {
        let mut acc = self.identity();
        for &i in word {
            let g = self
                .inner
                .gens
                .get(i as usize)
                .ok_or_else(|| Error::invalid(format!("word refers to missing generator {i}")))?;
            acc = acc.mul(g);
        }
        Ok(acc)
    }

    /// Full element list (sorted), guarded by `bounds.max_group_order`.
    pub fn elements(&self, bounds: &Bounds) -> Result<Arc<Elements>> {
        if let Some(e) = self.inner.elements.get() {
            return Ok(e.clone());
        }
        if self.order() > bounds.max_group_order {
            return Err(Error::resource(format!(
                "group order {} exceeds element enumeration bound {}",
                self.order(),
                bounds.max_group_order
            )));
        }
        let computed = Arc::new(self.enumerate_elements());
        Ok(self.inner.elements.get_or_init(|| computed).clone())
    }

    fn enumerate_elements(&self) -> Elements {
        // breadth-first over right multiplication so each element gets a word
        let id = self.identity();
        let mut word_of: HashMap<Perm, Vec<u32>> = HashMap::new();
        word_of.insert(id.clone(), vec![]);
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head].clone();
            head += 1;
            let base = word_of[&e].clone();
            for (i, g) in self.inner.gens.iter().enumerate() {
                let f = e.mul(g);
                if !word_of.contains_key(&f) {
                    let mut w = base.clone();
                    w.push(i as u32);
                    word_of.insert(f.clone(), w);
                    queue.push(f);
                }
            }
        }
        let mut perms: Vec<Perm> = word_of.keys().cloned().collect();
        perms.sort();
        let words = perms.iter().map(|p| word_of.remove(p).unwrap()).collect();
        debug_assert_eq!(perms.len() as u128, self.order());
        Elements { perms, words }
    }

    pub fn elem_id(&self, p: &Perm, bounds: &Bounds) -> Result<usize> {
        self.elements(bounds)?
            .id_of(p)
            .ok_or_else(|| Error::domain("permutation is not a group member"))
    }

    /// Conjugacy classes with representatives, sizes and members,
    /// guarded by `bounds.max_group_order`.
    pub fn conjugacy_classes(&self, bounds: &Bounds) -> Result<Arc<Classes>> {
        if let Some(c) = self.inner.classes.get() {
            return Ok(c.clone());
        }
        let elements = self.elements(bounds)?;
        let n = elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<ClassData> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let idx = raw.len();
            let mut members = vec![start];
            class_of[start] = idx;
            let mut head = 0;
            while head < members.len() {
                let e = elements.perm(members[head]).clone();
                head += 1;
                for g in &self.inner.gens {
                    let c = e.conjugate_by(g);
                    let cid = elements.id_of(&c).expect("conjugate stays in group");
                    if class_of[cid] == usize::MAX {
                        class_of[cid] = idx;
                        members.push(cid);
                    }
                }
            }
            members.sort_unstable();
            raw.push(ClassData {
                rep_id: members[0],
                size: members.len() as u64,
                order: elements.perm(members[0]).order(),
                members,
            });
        }
        // canonical class order
        let mut order_idx: Vec<usize> = (0..raw.len()).collect();
        order_idx.sort_by_key(|&i| (raw[i].order, raw[i].size, raw[i].rep_id));
        let mut classes = Vec::with_capacity(raw.len());
        let mut remap = vec![0usize; raw.len()];
        for (new_idx, &old_idx) in order_idx.iter().enumerate() {
            remap[old_idx] = new_idx;
            classes.push(raw[old_idx].clone());
        }
        for c in class_of.iter_mut() {
            *c = remap[*c];
        }
        let exponent = classes
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.order));
        let computed = Arc::new(Classes {
            classes,
            class_of,
            exponent,
        });
        Ok(self.inner.classes.get_or_init(|| computed).clone())
    }

    /// Class index of `p`.
    pub fn class_of(&self, p: &Perm, bounds: &Bounds) -> Result<usize> {
        let classes = self.conjugacy_classes(bounds)?;
        Ok(classes.class_of_id(self.elem_id(p, bounds)?))
    }

    /// Group exponent (lcm of element orders).
    pub fn exponent(&self, bounds: &Bounds) -> Result<u64> {
        Ok(self.conjugacy_classes(bounds)?.exponent())
    }

    /// Orbit of a point under the group action.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.inner.degree as usize];
        let mut orbit = vec![point];
        seen[point as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let pt = orbit[head];
            head += 1;
            for g in &self.inner.gens {
                let img = g.apply(pt);
                if !seen[img as usize] {
                    seen[img as usize] = true;
                    orbit.push(img);
                }
            }
        }
        orbit
    }

    /// Deterministic pseudo-random elements (for property tests and spot
    /// checks); empty generator set yields identities.
    pub fn random_elements(&self, seed: u64, count: usize) -> Vec<Perm> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut e = self.identity();
            if !self.inner.gens.is_empty() {
                for _ in 0..24 {
                    let i = rng.gen_range(0..self.inner.gens.len());
                    e = e.mul(&self.inner.gens[i]);
                }
            }
            out.push(e);
        }
        out
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Group(degree={}, order={}{})",
            self.degree(),
            self.order(),
            match self.name() {
                Some(n) => format!(", name={n}"),
                None => String::new(),
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: u32, cycles: &[&[Vec<u32>]]) -> Group {
        let gens = cycles
            .iter()
            .map(|c| Perm::from_cycles(degree, c).unwrap())
            .collect();
        Group::from_generators(degree, gens).unwrap()
    }

    #[test]
    fn s3_order_and_classes() {
        let g = group(3, &[&[vec![0, 1, 2]], &[vec![0, 1]]]);
        assert_eq!(g.order(), 6);
        let classes = g.conjugacy_classes(&Bounds::default()).unwrap();
        let sizes: Vec<u64> = classes.all().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(classes.exponent(), 6);
    }

    #[test]
    fn trivial_group_order_one() {
        let g = Group::trivial(1);
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes(&Bounds::default()).unwrap().len(), 1);
    }

    #[test]
    fn a5_brute_force_oracle() {
        // independent oracle: naive closure enumeration
        let gens = vec![
            Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
            Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap(),
        ];
        let mut set: std::collections::BTreeSet<Perm> = gens.iter().cloned().collect();
        set.insert(Perm::identity(5));
        loop {
            let mut new = Vec::new();
            for a in &set {
                for g in &gens {
                    let prod = a.mul(g);
                    if !set.contains(&prod) {
                        new.push(prod);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            set.extend(new);
        }
        assert_eq!(set.len(), 60);

        let g = Group::from_generators(5, gens).unwrap();
        assert_eq!(g.order(), 60);
        let classes = g.conjugacy_classes(&Bounds::default()).unwrap();
        let mut sizes: Vec<u64> = classes.all().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn class_sizes_sum_to_order() {
        let g = group(4, &[&[vec![0, 1, 2, 3]], &[vec![0, 1]]]);
        let classes = g.conjugacy_classes(&Bounds::default()).unwrap();
        let total: u64 = classes.all().iter().map(|c| c.size).sum();
        assert_eq!(total as u128, g.order());
    }

    #[test]
    fn element_words_evaluate_back() {
        let g = group(4, &[&[vec![0, 1, 2, 3]], &[vec![0, 1]]]);
        let elems = g.elements(&Bounds::default()).unwrap();
        for id in 0..elems.len() {
            let p = g.evaluate_word(elems.word(id)).unwrap();
            assert_eq!(&p, elems.perm(id));
        }
    }

    #[test]
    fn resource_bound_respected() {
        let g = group(4, &[&[vec![0, 1, 2, 3]], &[vec![0, 1]]]);
        let tight = Bounds {
            max_group_order: 10,
            ..Bounds::default()
        };
        assert!(matches!(
            g.elements(&tight),
            Err(Error::ResourceLimit(_))
        ));
    }
}
