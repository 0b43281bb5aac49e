use edgereg_core::oracle::verify_lemma_suite;
use edgereg_core::FieldSpec;

#[test]
fn suite_is_clean_over_both_fields() {
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
        let report = verify_lemma_suite(7, 60, 8, field).unwrap();
        assert!(report.passed(), "{report}");
        println!("{report}");
    }
}
