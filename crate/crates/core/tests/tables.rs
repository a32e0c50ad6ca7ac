//! Enumerated tables against the bundled reference and the realizing graphs.

use grover_lab::report::{check_existence_entry, ExistenceOutcome};
use grover_lab::search::{
    closed_walk_filter, compare_with_golden, enumerate_tables, existence_catalog, golden_table, FeasibleRow,
    WalkFilterVerdict,
};
use grover_lab::Bounds;

#[test]
fn reference_table_is_reproduced() {
    let rows = enumerate_tables(20).unwrap();
    assert_eq!(rows.len(), 58);
    assert_eq!(rows.len(), golden_table().len());
    assert!(compare_with_golden(&rows, 20).is_empty());
    for (row, golden) in rows.iter().zip(golden_table()) {
        assert_eq!((row.k, row.n, row.spectrum()), (golden.k, golden.n, golden.spectrum));
    }
}

#[test]
fn tampered_rows_are_reported() {
    let mut rows = enumerate_tables(20).unwrap();
    rows.remove(3);
    rows[0].alpha += 1;
    let diffs = compare_with_golden(&rows, 20);
    assert_eq!(diffs.len(), 3, "{diffs:?}");
}

#[test]
fn closed_walk_filter_keeps_every_row() {
    for row in enumerate_tables(20).unwrap() {
        assert_eq!(closed_walk_filter(&row, 20), WalkFilterVerdict::Kept, "{row:?}");
    }
}

#[test]
fn brute_force_search_matches() {
    // Every n in [1, 3k³] checked without the divisibility shortcut.
    for k in (4..=20u64).step_by(2) {
        let brute: Vec<FeasibleRow> = (1..=3 * k * k * k).filter_map(|n| FeasibleRow::evaluate(k, n)).collect();
        let fast: Vec<FeasibleRow> = enumerate_tables(20).unwrap().into_iter().filter(|r| r.k == k).collect();
        assert_eq!(brute, fast, "k = {k}");
    }
}

#[test]
fn existence_graphs_verify() {
    let bounds = Bounds::default();
    let mut checked = 0;
    for entry in existence_catalog() {
        let outcome = check_existence_entry(&entry, &bounds).unwrap();
        assert!(outcome.passes(), "{outcome:?}");
        if let ExistenceOutcome::Checked { period, .. } = outcome {
            assert_eq!(period, Some(12));
            checked += 1;
        }
    }
    assert_eq!(checked, 13);
}
