mod common;

use edgereg_core::algebra::regularity_quotient;
use edgereg_core::complex::reduced_homology_ranks;
use edgereg_core::edge_ideal::{edge_ideal, regularity_with_witness};
use edgereg_core::{FieldSpec, SimplicialComplex};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn recursion_matches_subset_scan(g in common::clean_graph(2, 9)) {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
            let (reg, w) = regularity_with_witness(&g, field);
            let scan = regularity_quotient(&edge_ideal(&g).unwrap(), field).unwrap();
            prop_assert_eq!(reg, scan, "{:?} over {}", g, field);
            // the witness carries homology in the top degree
            let (sub, _) = g.induced_subgraph(w).unwrap();
            let ranks = reduced_homology_ranks(
                &SimplicialComplex::independence_complex(&sub).unwrap(),
                field,
            )
            .unwrap();
            prop_assert!(ranks.get(reg).copied().unwrap_or(0) > 0, "witness {} for {:?}", w, g);
        }
    }
}
