//! Deliberately broken tables and stages must be caught.

mod common;

use std::fs;

use dirac_core::algebra::{mul_schoolbook, MultTable, SignedBasis};
use dirac_core::fastmult::{
    verify_pipeline, verify_pipeline_against, write_builtin_assets, AssetSource, FastMultError, Level, Pipeline,
    StageKind, VerifiedPipeline,
};
use dirac_core::linalg::SignedPermutation;

fn builtin(level: Level) -> Pipeline {
    Pipeline::assemble_from(level, &AssetSource::Builtin).unwrap()
}

#[test]
fn flipped_table_sign_breaks_associativity_and_verification() {
    let mut t = MultTable::from_generators();
    let e = t.get(3, 7);
    t.set(3, 7, e.negated());
    assert!(!t.associativity_failures().is_empty());
    let r = verify_pipeline_against(&builtin(Level::Three), &t);
    assert!(!r.is_ok());
    assert!(r.mismatches.iter().any(|m| m.col == 3 || m.row == 7));
}

#[test]
fn swapped_table_entry_is_not_well_formed() {
    let mut t = MultTable::from_generators();
    t.set(2, 2, SignedBasis::new(1, 5).unwrap());
    assert!(t.check_well_formed().is_err());
}

#[test]
fn permuted_stage_is_rejected() {
    let mut p = builtin(Level::Three);
    let StageKind::SignedPerm(s) = &mut p.stage_mut("P30").unwrap().kind else {
        panic!("P30 is a signed permutation");
    };
    let mut order = s.order().to_vec();
    order.swap(0, 1);
    *s = SignedPermutation::new(order, s.signs().to_vec()).unwrap();
    assert!(!verify_pipeline(&p).is_ok());
    assert!(matches!(VerifiedPipeline::new(p.clone()), Err(FastMultError::Verification { level: 3, .. })));
    let t = MultTable::from_generators();
    let bad = common::pairs(5, 20)
        .iter()
        .filter(|(a, b)| p.run(a, b) != mul_schoolbook(a, b, &t))
        .count();
    assert!(bad > 0);
}

#[test]
fn corrupted_asset_dir_names_the_stage() {
    let dir = tempfile::tempdir().unwrap();
    write_builtin_assets(dir.path()).unwrap();
    let path = dir.path().join("D30_4.stage");
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, text.replacen("row +0 +5 +10 +15,", "row +0 -5 +10 +15,", 1)).unwrap();
    let src = AssetSource::Dir(dir.path().to_path_buf());
    assert_eq!(src.stages_differing_from_builtin(), vec!["D30_4".to_string()]);
    let p = Pipeline::assemble_from(Level::Three, &src).unwrap();
    assert!(!verify_pipeline(&p).is_ok());
    assert!(verify_pipeline(&Pipeline::assemble_from(Level::Two, &src).unwrap()).is_ok());
}

#[test]
fn malformed_asset_reports_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("P30.stage"), "signed-perm\nversion 1\nsize 30\nblock 3 order 1 2\n").unwrap();
    let err = Pipeline::assemble_from(Level::Three, &AssetSource::Dir(dir.path().to_path_buf())).unwrap_err();
    assert!(err.to_string().starts_with("P30.stage:4:"), "{err}");
}

#[test]
fn missing_files_fall_back_to_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let src = AssetSource::Dir(dir.path().to_path_buf());
    assert!(src.stages_differing_from_builtin().is_empty());
    assert!(verify_pipeline(&Pipeline::assemble_from(Level::Three, &src).unwrap()).is_ok());
}
