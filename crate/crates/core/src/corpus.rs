//! Built-in corpus of small verification groups.

use crate::error::Result;
use crate::perm::{Group, Perm};

/// Symmetric group on n points.
pub fn symmetric(n: u32) -> Result<Group> {
    let gens = if n < 2 {
        vec![]
    } else {
        vec![
            Perm::from_cycles(n, &[(0..n).collect()])?,
            Perm::from_cycles(n, &[vec![0, 1]])?,
        ]
    };
    Ok(Group::from_generators(n.max(1), gens)?.with_name(format!("S{n}")))
}

/// Alternating group on n points.
pub fn alternating(n: u32) -> Result<Group> {
    let gens = if n < 3 {
        vec![]
    } else if n % 2 == 1 {
        vec![
            Perm::from_cycles(n, &[(0..n).collect()])?,
            Perm::from_cycles(n, &[vec![0, 1, 2]])?,
        ]
    } else {
        vec![
            Perm::from_cycles(n, &[(1..n).collect()])?,
            Perm::from_cycles(n, &[vec![0, 1, 2]])?,
        ]
    };
    Ok(Group::from_generators(n.max(1), gens)?.with_name(format!("A{n}")))
}

/// Cyclic group of order n, as an n-cycle.
pub fn cyclic(n: u32) -> Result<Group> {
    let gens = if n < 2 {
        vec![]
    } else {
        vec![Perm::from_cycles(n, &[(0..n).collect()])?]
    };
    Ok(Group::from_generators(n.max(1), gens)?.with_name(format!("C{n}")))
}

/// Dihedral group of order 2n acting on n points.
pub fn dihedral(order: u32) -> Result<Group> {
    assert!(order >= 4 && order % 2 == 0, "dihedral order must be even and >= 4");
    let n = order / 2;
    let rot = Perm::from_cycles(n, &[(0..n).collect()])?;
    let refl = Perm::from_images((0..n).map(|i| (n - i) % n).collect())?;
    Ok(Group::from_generators(n, vec![rot, refl])?.with_name(format!("D{order}")))
}

/// The quaternion group of order 8, by its left regular representation.
pub fn quaternion8() -> Result<Group> {
    // points: 1, i, -1, -i, j, -j, k, -k
    let i = Perm::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 6, 5, 7]])?;
    let j = Perm::from_cycles(8, &[vec![0, 4, 2, 5], vec![1, 7, 3, 6]])?;
    Ok(Group::from_generators(8, vec![i, j])?.with_name("Q8"))
}

/// Direct product C3 × C3 on 6 points.
pub fn c3_times_c3() -> Result<Group> {
    let a = Perm::from_cycles(6, &[vec![0, 1, 2]])?;
    let b = Perm::from_cycles(6, &[vec![3, 4, 5]])?;
    Ok(Group::from_generators(6, vec![a, b])?.with_name("C3xC3"))
}

fn mat_perm(m: [[u64; 2]; 2]) -> Result<Perm> {
    // action on the 8 nonzero vectors of F_3^2; vector (a, b) has index 3a+b-1
    let mut images = vec![0u32; 8];
    for a in 0..3u64 {
        for b in 0..3u64 {
            if a == 0 && b == 0 {
                continue;
            }
            let idx = (3 * a + b - 1) as usize;
            let a2 = (m[0][0] * a + m[0][1] * b) % 3;
            let b2 = (m[1][0] * a + m[1][1] * b) % 3;
            images[idx] = (3 * a2 + b2 - 1) as u32;
        }
    }
    Perm::from_images(images)
}

/// SL(2,3) acting on the nonzero vectors of F_3².
pub fn sl23() -> Result<Group> {
    let s = mat_perm([[0, 2], [1, 0]])?;
    let t = mat_perm([[1, 1], [0, 1]])?;
    Ok(Group::from_generators(8, vec![s, t])?.with_name("SL(2,3)"))
}

/// GL(2,3) acting on the nonzero vectors of F_3².
pub fn gl23() -> Result<Group> {
    let s = mat_perm([[0, 2], [1, 0]])?;
    let t = mat_perm([[1, 1], [0, 1]])?;
    let d = mat_perm([[2, 0], [0, 1]])?;
    Ok(Group::from_generators(8, vec![s, t, d])?.with_name("GL(2,3)"))
}

/// The standard verification corpus: every member has order ≤ 200.
pub fn standard_corpus() -> Result<Vec<Group>> {
    Ok(vec![
        symmetric(3)?,
        symmetric(4)?,
        symmetric(5)?,
        alternating(4)?,
        alternating(5)?,
        dihedral(8)?,
        quaternion8()?,
        dihedral(12)?,
        sl23()?,
        gl23()?,
        cyclic(9)?,
        c3_times_c3()?,
    ])
}

/// Look up a corpus group by name (as reported by `Group::name`).
pub fn by_name(name: &str) -> Result<Option<Group>> {
    for g in standard_corpus()? {
        if g.name() == Some(name) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
