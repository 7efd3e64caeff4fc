//! Computed character tables against the classical reference tables.

mod common;

use blockcheck_core::bounds::Bounds;
use blockcheck_core::chartab::CharTable;
use blockcheck_core::corpus;
use common::{all_references, tables_match};

#[test]
fn seven_reference_tables_match_exactly() {
    let b = Bounds::default();
    for reference in all_references() {
        let g = corpus::by_name(reference.name)
            .unwrap()
            .unwrap_or_else(|| panic!("{} missing from corpus", reference.name));
        let t = CharTable::compute(&g, &b).unwrap();
        assert!(
            tables_match(&t, &reference),
            "computed table for {} differs from the classical table",
            reference.name
        );
    }
}

#[test]
fn reference_tables_are_internally_consistent() {
    // sanity on the transcriptions themselves: sum of squared degrees
    for reference in all_references() {
        let order: u64 = reference.classes.iter().map(|&(_, s)| s).sum();
        let deg_sq: i64 = reference
            .rows
            .iter()
            .map(|r| {
                let d = r[0].as_integer().unwrap();
                let d: i64 = d.try_into().unwrap();
                d * d
            })
            .sum();
        assert_eq!(deg_sq as u64, order, "degree check for {}", reference.name);
    }
}

#[test]
fn s5_degrees() {
    let b = Bounds::default();
    let g = corpus::symmetric(5).unwrap();
    let t = CharTable::compute(&g, &b).unwrap();
    assert_eq!(t.degrees(), &[1, 1, 4, 4, 5, 5, 6]);
}

#[test]
fn gl23_degrees() {
    let b = Bounds::default();
    let g = corpus::gl23().unwrap();
    let t = CharTable::compute(&g, &b).unwrap();
    assert_eq!(t.degrees(), &[1, 1, 2, 2, 2, 3, 3, 4]);
}
