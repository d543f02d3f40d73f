use mzv::db::{Document, FORMAT};
use mzv::{DbError, Options, RelationDb, Runner, Suite};
use mzv_core::coeff::{format_rational, parse_rational};
use mzv_core::{Spaces, SubspaceLabel};

fn verdicts(spaces: Spaces, suite: Suite) -> Vec<(String, &'static str)> {
    let mut runner = Runner::with_spaces(spaces, Options::default().with_max_weight(6));
    runner.run(suite).cases.into_iter().map(|c| (c.id, c.verdict.name())).collect()
}

#[test]
fn round_trip_preserves_verdicts() {
    let db = RelationDb::build(6);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rel.json");
    db.save(&path).unwrap();
    let loaded = RelationDb::load(&path).unwrap();
    assert_eq!(loaded.to_json(), db.to_json());

    let mut installed = Spaces::new();
    loaded.install(&mut installed);
    for suite in [Suite::Table1, Suite::Weight6] {
        assert_eq!(verdicts(installed.clone(), suite), verdicts(Spaces::new(), suite), "{suite}");
    }
}

#[test]
fn stored_dimensions_match_fresh_spaces() {
    let db = RelationDb::build(7);
    let mut spaces = Spaces::new();
    for (l, label, dim) in db.summary() {
        let label: SubspaceLabel = label.parse().unwrap();
        assert_eq!(spaces.basis(l, &label).unwrap().dim(), dim, "weight {l} {label}");
    }
}

fn document() -> Document {
    serde_json::from_str(&RelationDb::build(5).to_json()).unwrap()
}

#[test]
fn rejects_other_versions() {
    let mut doc = document();
    doc.format = "mzvrel/2".into();
    assert!(matches!(RelationDb::from_document(&doc), Err(DbError::Version { .. })));
    doc.format = FORMAT.into();
    assert!(RelationDb::from_document(&doc).is_ok());
}

#[test]
fn rejects_reordered_coordinates() {
    let mut doc = document();
    let order = &mut doc.weights.last_mut().unwrap().basis_order;
    order.swap(0, 1);
    assert!(matches!(RelationDb::from_document(&doc), Err(DbError::Invalid { .. })));
}

#[test]
fn rejects_rows_not_in_echelon_form() {
    let base = document();
    let (wi, si) = base
        .weights
        .iter()
        .enumerate()
        .flat_map(|(wi, w)| w.subspaces.iter().enumerate().map(move |(si, s)| (wi, si, s.rows.len())))
        .find(|&(_, _, n)| n >= 2)
        .map(|(wi, si, _)| (wi, si))
        .expect("a subspace with two rows");

    let mut swapped = base.clone();
    swapped.weights[wi].subspaces[si].rows.swap(0, 1);
    assert!(RelationDb::from_document(&swapped).is_err());

    let mut scaled = base.clone();
    for x in scaled.weights[wi].subspaces[si].rows[0].iter_mut() {
        let v = parse_rational(x).unwrap();
        *x = format_rational(&(&v + &v));
    }
    assert!(RelationDb::from_document(&scaled).is_err());

    let mut doubled = base;
    let row = doubled.weights[wi].subspaces[si].rows[0].clone();
    doubled.weights[wi].subspaces[si].rows.push(row);
    assert!(RelationDb::from_document(&doubled).is_err());
}

#[test]
fn rejects_malformed_json() {
    assert!(matches!(RelationDb::from_json("{\"format\": 3}"), Err(DbError::Json(_))));
}
