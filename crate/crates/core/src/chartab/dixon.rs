//! Dixon–Schneider computation of ordinary character tables.
//!
//! Works over GF(q) for the least prime q ≡ 1 (mod e) with q² > 4|G|:
//! common eigenvectors of the class-sum matrices give the central
//! characters mod q, degrees come from the second orthogonality relation,
//! and exact values are recovered by the discrete Fourier lift along the
//! power map. Splitting walks the class matrices in fixed class order, so
//! the run is deterministic.

use super::{CharTable, StructureConstants};
use crate::arith;
use crate::bounds::Bounds;
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::perm::Group;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::sync::Arc;

pub(super) fn compute(group: &Group, bounds: &Bounds) -> Result<CharTable> {
    let classes = group.conjugacy_classes(bounds)?;
    let elements = group.elements(bounds)?;
    let r = classes.len();
    if r > bounds.max_classes {
        return Err(Error::resource(format!(
            "{r} conjugacy classes exceed the table bound {}",
            bounds.max_classes
        )));
    }
    let n = classes.all().iter().map(|c| c.size).sum::<u64>();
    let e = classes.exponent();

    let constants = Arc::new(StructureConstants::compute(group, bounds)?);

    let q = least_splitting_prime(e, n);
    let modq = Fq { q };

    // class matrices are sliced out of the structure constants on demand
    let class_matrix = |i: usize| -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; r]; r];
        for (j, row) in m.iter_mut().enumerate() {
            for (k, entry) in row.iter_mut().enumerate() {
                *entry = constants.get(i, j, k) % q;
            }
        }
        m
    };

    // split GF(q)^r into common eigenspaces
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity_basis(r)];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(i);
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            for part in split_invariant_subspace(&modq, &m, &basis)? {
                next.push(part);
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::invariant(
            "class matrices failed to split the class algebra into lines",
        ));
    }

    // an eigenvector normalized at the identity class lists the central
    // character values h_i chi(g_i) / chi(1) mod q
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(r);
    for basis in &spaces {
        let v = &basis[0];
        if v[0] == 0 {
            return Err(Error::invariant("central character vanishes at the identity"));
        }
        let inv = modq.inv(v[0]);
        omegas.push(v.iter().map(|&x| modq.mul(x, inv)).collect());
    }

    let inverse_class: Vec<usize> = (0..r)
        .map(|j| {
            let rep = elements.perm(classes.class(j).rep_id);
            classes.class_of_id(elements.id_of(&rep.inverse()).expect("inverse in group"))
        })
        .collect();

    // degrees from n / sum_i omega_i conj(omega_i) / h_i
    let nq = n % q;
    let mut degrees: Vec<u64> = Vec::with_capacity(r);
    for omega in &omegas {
        let mut s = 0u64;
        for i in 0..r {
            let hi_inv = modq.inv(classes.class(i).size % q);
            let term = modq.mul(modq.mul(omega[i], omega[inverse_class[i]]), hi_inv);
            s = modq.add(s, term);
        }
        let deg_sq = modq.mul(nq, modq.inv(s));
        degrees.push(sqrt_mod(&modq, deg_sq).ok_or_else(|| {
            Error::invariant("degree squared has no square root mod q")
        })?);
    }
    let degree_check: u64 = degrees.iter().map(|d| d * d).sum();
    if degree_check != n {
        return Err(Error::invariant(format!(
            "sum of squared degrees {degree_check} differs from group order {n}"
        )));
    }

    // exact values via the Fourier lift: z has order e in GF(q)
    let z = element_of_order(&modq, e);
    let power_class: Vec<Vec<usize>> = (0..r)
        .map(|j| {
            let d = classes.class(j).order;
            let rep = elements.perm(classes.class(j).rep_id).clone();
            (0..d)
                .map(|l| {
                    let p = rep.pow(l as i64);
                    classes.class_of_id(elements.id_of(&p).expect("power in group"))
                })
                .collect()
        })
        .collect();

    let mut values: Vec<Vec<CycNum>> = Vec::with_capacity(r);
    for (chi, omega) in omegas.iter().enumerate() {
        let deg = degrees[chi];
        let char_mod_q = |class: usize| -> u64 {
            let hi_inv = modq.inv(classes.class(class).size % q);
            modq.mul(modq.mul(deg % q, omega[class]), hi_inv)
        };
        let mut row: Vec<CycNum> = Vec::with_capacity(r);
        for j in 0..r {
            let d = classes.class(j).order;
            let zd = modq.pow(z, e / d);
            let zd_inv = modq.inv(zd);
            let d_inv = modq.inv(d % q);
            let mut terms: Vec<(u64, BigRational)> = Vec::new();
            let mut total = 0u64;
            for k in 0..d {
                let mut mu = 0u64;
                for l in 0..d {
                    let c = char_mod_q(power_class[j][l as usize]);
                    let w = modq.pow(zd_inv, k * l % d);
                    mu = modq.add(mu, modq.mul(c, w));
                }
                mu = modq.mul(mu, d_inv);
                // multiplicities are genuine integers below q
                if mu > 0 {
                    terms.push(((e / d) * k, BigRational::from(BigInt::from(mu))));
                    total += mu;
                }
            }
            if total != deg {
                return Err(Error::invariant(
                    "root-of-unity multiplicities do not sum to the degree",
                ));
            }
            row.push(CycNum::from_power_coeffs(e, &terms));
        }
        values.push(row);
    }

    // canonical row order: degree, then value sequence
    let mut order_idx: Vec<usize> = (0..r).collect();
    order_idx.sort_by(|&a, &b| {
        degrees[a].cmp(&degrees[b]).then_with(|| {
            for j in 0..r {
                match values[a][j].cmp_canonical(&values[b][j]) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    let values: Vec<Vec<CycNum>> = order_idx.iter().map(|&i| values[i].clone()).collect();
    let degrees: Vec<u64> = order_idx.iter().map(|&i| degrees[i]).collect();

    let table = CharTable::assemble(
        group.clone(),
        classes,
        elements,
        e,
        values,
        degrees,
        inverse_class,
        Some(constants),
    );
    table.verify_orthogonality()?;
    Ok(table)
}

/// Least prime q ≡ 1 (mod e) with q² > 4n.
fn least_splitting_prime(e: u64, n: u64) -> u64 {
    let mut q = e + 1;
    loop {
        if (q as u128) * (q as u128) > 4 * n as u128 && arith::is_prime(q) {
            return q;
        }
        q += e;
    }
}

struct Fq {
    q: u64,
}

impl Fq {
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b % self.q) % self.q
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.q as u128) as u64
    }
    fn inv(&self, a: u64) -> u64 {
        arith::inv_mod(a, self.q)
    }
    fn pow(&self, a: u64, e: u64) -> u64 {
        arith::pow_mod(a, e, self.q)
    }
}

fn identity_basis(r: usize) -> Vec<Vec<u64>> {
    (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()
}

/// An element of exact multiplicative order e in GF(q), from the least
/// primitive root.
fn element_of_order(f: &Fq, e: u64) -> u64 {
    let q1 = f.q - 1;
    debug_assert_eq!(q1 % e, 0);
    let primitive = (2..f.q)
        .find(|&g| {
            arith::prime_divisors(q1 as u128)
                .iter()
                .all(|&r| f.pow(g, q1 / r) != 1)
        })
        .expect("prime field has a primitive root");
    f.pow(primitive, q1 / e)
}

fn sqrt_mod(f: &Fq, a: u64) -> Option<u64> {
    // degrees are < q/2, so scan the small half
    (1..=(f.q - 1) / 2).find(|&s| f.mul(s, s) == a)
}

/// Splits an invariant subspace into the eigenspaces of `m` restricted to it.
fn split_invariant_subspace(
    f: &Fq,
    m: &[Vec<u64>],
    basis: &[Vec<u64>],
) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let r = basis[0].len();
    // pivot columns of the echelonized basis
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).expect("nonzero basis vector"))
        .collect();

    // coordinates of m·b_t in the basis
    let mut rest = vec![vec![0u64; d]; d];
    for (t, b) in basis.iter().enumerate() {
        let mut image = vec![0u64; r];
        for (jj, row) in m.iter().enumerate() {
            let mut acc = 0u64;
            for (k, &mk) in row.iter().enumerate() {
                acc = f.add(acc, f.mul(mk, b[k]));
            }
            image[jj] = acc;
        }
        let coords: Vec<u64> = pivots
            .iter()
            .enumerate()
            .map(|(s, &p)| f.mul(image[p], f.inv(basis[s][p])))
            .collect();
        // invariance check
        let mut recon = vec![0u64; r];
        for (s, &c) in coords.iter().enumerate() {
            for (k, &bk) in basis[s].iter().enumerate() {
                recon[k] = f.add(recon[k], f.mul(c, bk));
            }
        }
        if recon != image {
            return Err(Error::invariant("subspace is not invariant under class matrix"));
        }
        for (s, &c) in coords.iter().enumerate() {
            rest[s][t] = c;
        }
    }

    let poly = char_poly(f, &rest);
    let mut out = Vec::new();
    let mut found_dim = 0;
    for lambda in 0..f.q {
        if eval_poly(f, &poly, lambda) != 0 {
            continue;
        }
        // nullspace of rest - lambda I
        let mut mm = rest.clone();
        for (i, row) in mm.iter_mut().enumerate() {
            row[i] = f.sub(row[i], lambda);
        }
        let null = nullspace(f, &mm);
        if null.is_empty() {
            continue;
        }
        found_dim += null.len();
        // lift back to ambient coordinates and echelonize
        let mut vectors: Vec<Vec<u64>> = Vec::with_capacity(null.len());
        for w in &null {
            let mut v = vec![0u64; r];
            for (s, &c) in w.iter().enumerate() {
                if c != 0 {
                    for (k, &bk) in basis[s].iter().enumerate() {
                        v[k] = f.add(v[k], f.mul(c, bk));
                    }
                }
            }
            vectors.push(v);
        }
        out.push(echelonize(f, vectors));
        if found_dim == d {
            break;
        }
    }
    if found_dim != d {
        return Err(Error::invariant(
            "class matrix restriction is not diagonalizable over GF(q)",
        ));
    }
    Ok(out)
}

/// Characteristic polynomial det(M - x I) up to sign, by interpolation.
fn char_poly(f: &Fq, m: &[Vec<u64>]) -> Vec<u64> {
    let d = m.len();
    let points: Vec<u64> = (0..=d as u64).collect();
    let evals: Vec<u64> = points
        .iter()
        .map(|&x| {
            let mut mm = m.to_vec();
            for (i, row) in mm.iter_mut().enumerate() {
                row[i] = f.sub(row[i], x);
            }
            determinant(f, mm)
        })
        .collect();
    lagrange(f, &points, &evals)
}

fn determinant(f: &Fq, mut m: Vec<Vec<u64>>) -> u64 {
    let d = m.len();
    let mut det = 1u64;
    for col in 0..d {
        let pivot = (col..d).find(|&r| m[r][col] != 0);
        let Some(p) = pivot else { return 0 };
        if p != col {
            m.swap(p, col);
            det = f.sub(0, det);
        }
        let inv = f.inv(m[col][col]);
        det = f.mul(det, m[col][col]);
        for row in col + 1..d {
            if m[row][col] == 0 {
                continue;
            }
            let factor = f.mul(m[row][col], inv);
            for k in col..d {
                let s = f.mul(factor, m[col][k]);
                m[row][k] = f.sub(m[row][k], s);
            }
        }
    }
    det
}

fn lagrange(f: &Fq, xs: &[u64], ys: &[u64]) -> Vec<u64> {
    let n = xs.len();
    let mut coeffs = vec![0u64; n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut num = vec![0u64; n];
        num[0] = 1;
        let mut deg = 0;
        let mut denom = 1u64;
        for j in 0..n {
            if i == j {
                continue;
            }
            // multiply num by (x - x_j)
            for k in (0..=deg).rev() {
                let c = num[k];
                num[k + 1] = f.add(num[k + 1], c);
                num[k] = f.mul(c, f.sub(0, xs[j]));
            }
            deg += 1;
            denom = f.mul(denom, f.sub(xs[i], xs[j]));
        }
        let scale = f.mul(ys[i], f.inv(denom));
        for k in 0..n {
            coeffs[k] = f.add(coeffs[k], f.mul(scale, num[k]));
        }
    }
    coeffs
}

fn eval_poly(f: &Fq, poly: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// Basis of the right nullspace, echelonized.
fn nullspace(f: &Fq, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let pr = (row..rows).find(|&rr| a[rr][col] != 0);
        let Some(pr) = pr else { continue };
        a.swap(row, pr);
        let inv = f.inv(a[row][col]);
        for k in 0..cols {
            a[row][k] = f.mul(a[row][k], inv);
        }
        for rr in 0..rows {
            if rr != row && a[rr][col] != 0 {
                let factor = a[rr][col];
                for k in 0..cols {
                    let s = f.mul(factor, a[row][k]);
                    a[rr][k] = f.sub(a[rr][k], s);
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut v = vec![0u64; cols];
        v[fc] = 1;
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = f.sub(0, a[ri][fc]);
        }
        basis.push(v);
    }
    basis
}

fn echelonize(f: &Fq, mut vs: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let cols = vs[0].len();
    let mut row = 0;
    for col in 0..cols {
        let pr = (row..vs.len()).find(|&rr| vs[rr][col] != 0);
        let Some(pr) = pr else { continue };
        vs.swap(row, pr);
        let inv = f.inv(vs[row][col]);
        for k in 0..cols {
            vs[row][k] = f.mul(vs[row][k], inv);
        }
        for rr in 0..vs.len() {
            if rr != row && vs[rr][col] != 0 {
                let factor = vs[rr][col];
                for k in 0..cols {
                    let s = f.mul(factor, vs[row][k]);
                    vs[rr][k] = f.sub(vs[rr][k], s);
                }
            }
        }
        row += 1;
        if row == vs.len() {
            break;
        }
    }
    vs
}
