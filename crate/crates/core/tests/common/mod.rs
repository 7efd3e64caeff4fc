//! Shared test support: classical reference character tables and the
//! up-to-relabeling table comparison.

use blockcheck_core::chartab::CharTable;
use blockcheck_core::cyclotomic::CycNum;

pub fn int(n: i64) -> CycNum {
    CycNum::from_int(n)
}

pub fn zeta(e: u64, k: i64) -> CycNum {
    CycNum::root_of_unity(e, k)
}

/// (1+√5)/2 = -ζ5² - ζ5³
pub fn golden() -> CycNum {
    zeta(5, 2).neg().sub(&zeta(5, 3))
}

/// (1-√5)/2 = -ζ5 - ζ5⁴
pub fn golden_conj() -> CycNum {
    zeta(5, 1).neg().sub(&zeta(5, 4))
}

pub struct RefTable {
    pub name: &'static str,
    /// (element order, class size) per column.
    pub classes: Vec<(u64, u64)>,
    pub rows: Vec<Vec<CycNum>>,
}

/// Exact equality with a reference table, up to any relabeling of classes
/// that preserves element order and class size, and up to row order.
pub fn tables_match(table: &CharTable, reference: &RefTable) -> bool {
    let r = table.len();
    if reference.classes.len() != r || reference.rows.len() != r {
        return false;
    }
    let comp_sig: Vec<(u64, u64)> = (0..r)
        .map(|j| {
            let c = table.classes().class(j);
            (c.order, c.size)
        })
        .collect();
    // candidate computed columns per reference column
    let candidates: Vec<Vec<usize>> = reference
        .classes
        .iter()
        .map(|sig| {
            (0..r)
                .filter(|&j| comp_sig[j] == *sig)
                .collect::<Vec<_>>()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return false;
    }
    let mut assignment = vec![usize::MAX; r];
    let mut used = vec![false; r];
    fn search(
        t: usize,
        candidates: &[Vec<usize>],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        table: &CharTable,
        reference: &RefTable,
    ) -> bool {
        if t == candidates.len() {
            return rows_match(table, reference, assignment);
        }
        for &j in &candidates[t] {
            if used[j] {
                continue;
            }
            used[j] = true;
            assignment[t] = j;
            if search(t + 1, candidates, assignment, used, table, reference) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    search(0, &candidates, &mut assignment, &mut used, table, reference)
}

fn rows_match(table: &CharTable, reference: &RefTable, assignment: &[usize]) -> bool {
    let r = table.len();
    // lexicographic comparison is only conductor-stable at a fixed
    // conductor, so promote every value to one common conductor first
    let mut e = table.exponent();
    for row in &reference.rows {
        for v in row {
            e = num_integer::lcm(e, v.conductor());
        }
    }
    let mut ref_rows: Vec<Vec<CycNum>> = reference
        .rows
        .iter()
        .map(|row| {
            let mut out = vec![CycNum::zero(1).promoted(e); r];
            for (t, v) in row.iter().enumerate() {
                out[assignment[t]] = v.promoted(e);
            }
            out
        })
        .collect();
    let mut comp_rows: Vec<Vec<CycNum>> = (0..r)
        .map(|i| table.row(i).iter().map(|v| v.promoted(e)).collect())
        .collect();
    let cmp = |a: &Vec<CycNum>, b: &Vec<CycNum>| {
        for (x, y) in a.iter().zip(b.iter()) {
            match x.cmp_canonical(y) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    };
    ref_rows.sort_by(&cmp);
    comp_rows.sort_by(&cmp);
    ref_rows == comp_rows
}

fn row(vals: Vec<CycNum>) -> Vec<CycNum> {
    vals
}

pub fn reference_s3() -> RefTable {
    RefTable {
        name: "S3",
        classes: vec![(1, 1), (2, 3), (3, 2)],
        rows: vec![
            row(vec![int(1), int(1), int(1)]),
            row(vec![int(1), int(-1), int(1)]),
            row(vec![int(2), int(0), int(-1)]),
        ],
    }
}

pub fn reference_s4() -> RefTable {
    RefTable {
        name: "S4",
        classes: vec![(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)],
        rows: vec![
            row(vec![int(1), int(1), int(1), int(1), int(1)]),
            row(vec![int(1), int(1), int(-1), int(1), int(-1)]),
            row(vec![int(2), int(2), int(0), int(-1), int(0)]),
            row(vec![int(3), int(-1), int(1), int(0), int(-1)]),
            row(vec![int(3), int(-1), int(-1), int(0), int(1)]),
        ],
    }
}

pub fn reference_a4() -> RefTable {
    let w = zeta(3, 1);
    let w2 = zeta(3, 2);
    RefTable {
        name: "A4",
        classes: vec![(1, 1), (2, 3), (3, 4), (3, 4)],
        rows: vec![
            row(vec![int(1), int(1), int(1), int(1)]),
            row(vec![int(1), int(1), w.clone(), w2.clone()]),
            row(vec![int(1), int(1), w2, w]),
            row(vec![int(3), int(-1), int(0), int(0)]),
        ],
    }
}

pub fn reference_a5() -> RefTable {
    let phi = golden();
    let phj = golden_conj();
    RefTable {
        name: "A5",
        classes: vec![(1, 1), (2, 15), (3, 20), (5, 12), (5, 12)],
        rows: vec![
            row(vec![int(1), int(1), int(1), int(1), int(1)]),
            row(vec![int(3), int(-1), int(0), phi.clone(), phj.clone()]),
            row(vec![int(3), int(-1), int(0), phj, phi]),
            row(vec![int(4), int(0), int(1), int(-1), int(-1)]),
            row(vec![int(5), int(1), int(-1), int(0), int(0)]),
        ],
    }
}

pub fn reference_d8() -> RefTable {
    RefTable {
        name: "D8",
        classes: vec![(1, 1), (2, 1), (2, 2), (2, 2), (4, 2)],
        rows: vec![
            row(vec![int(1), int(1), int(1), int(1), int(1)]),
            row(vec![int(1), int(1), int(1), int(-1), int(-1)]),
            row(vec![int(1), int(1), int(-1), int(1), int(-1)]),
            row(vec![int(1), int(1), int(-1), int(-1), int(1)]),
            row(vec![int(2), int(-2), int(0), int(0), int(0)]),
        ],
    }
}

pub fn reference_q8() -> RefTable {
    RefTable {
        name: "Q8",
        classes: vec![(1, 1), (2, 1), (4, 2), (4, 2), (4, 2)],
        rows: vec![
            row(vec![int(1), int(1), int(1), int(1), int(1)]),
            row(vec![int(1), int(1), int(1), int(-1), int(-1)]),
            row(vec![int(1), int(1), int(-1), int(1), int(-1)]),
            row(vec![int(1), int(1), int(-1), int(-1), int(1)]),
            row(vec![int(2), int(-2), int(0), int(0), int(0)]),
        ],
    }
}

pub fn reference_sl23() -> RefTable {
    let w = zeta(3, 1);
    let w2 = zeta(3, 2);
    RefTable {
        name: "SL(2,3)",
        classes: vec![(1, 1), (2, 1), (3, 4), (3, 4), (4, 6), (6, 4), (6, 4)],
        rows: vec![
            row(vec![int(1), int(1), int(1), int(1), int(1), int(1), int(1)]),
            row(vec![int(1), int(1), w.clone(), w2.clone(), int(1), w.clone(), w2.clone()]),
            row(vec![int(1), int(1), w2.clone(), w.clone(), int(1), w2.clone(), w.clone()]),
            row(vec![int(2), int(-2), int(-1), int(-1), int(0), int(1), int(1)]),
            row(vec![
                int(2),
                int(-2),
                w.neg(),
                w2.neg(),
                int(0),
                w.clone(),
                w2.clone(),
            ]),
            row(vec![int(2), int(-2), w2.neg(), w.neg(), int(0), w2, w]),
            row(vec![int(3), int(3), int(0), int(0), int(-1), int(0), int(0)]),
        ],
    }
}

/// All seven reference tables paired with their corpus names.
pub fn all_references() -> Vec<RefTable> {
    vec![
        reference_s3(),
        reference_s4(),
        reference_a4(),
        reference_a5(),
        reference_d8(),
        reference_q8(),
        reference_sl23(),
    ]
}
