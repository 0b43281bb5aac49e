use edgereg_core::constructor::{build, decrease_deg_step, increase_deg_step};
use edgereg_core::edge_ideal::{hilbert_series, is_gap_free};
use edgereg_core::oracle::{hilbert_by_monomial_count, im_bruteforce};
use edgereg_core::{BaseGraphProvider, Error, FieldSpec};
use num_bigint::BigInt;

const Q: FieldSpec = FieldSpec::Rationals;

#[test]
fn grid_builds_hit_their_targets() {
    let mut provider = BaseGraphProvider::new(Q);
    for (a, r) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4)] {
        for s in 1..=4 {
            let cert = build(a, r, s, &mut provider, Q).unwrap();
            let rep = &cert.report;
            assert_eq!((rep.im, rep.reg, rep.s, rep.connected), (a, r, s, true));
            if a == 1 {
                assert!(is_gap_free(&cert.result).unwrap());
            }
            cert.verify().unwrap();
            assert_eq!(cert.replay().unwrap(), cert.result);
            if let Ok(im) = im_bruteforce(&cert.result) {
                assert_eq!(im, a);
            }
            if let Ok(counts) = hilbert_by_monomial_count(&cert.result, 6) {
                let counts: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
                assert_eq!(hilbert_series(&cert.result).expansion(6), counts);
            }
        }
    }
}

#[test]
fn builds_are_deterministic() {
    let a = build(3, 4, 1, &mut BaseGraphProvider::new(Q), Q).unwrap();
    let b = build(3, 4, 1, &mut BaseGraphProvider::new(Q), Q).unwrap();
    assert_eq!(a, b);
}

#[test]
fn unreachable_and_invalid_targets() {
    let mut p = BaseGraphProvider::new(Q);
    assert_eq!(
        build(1, 3, 1, &mut p, Q).unwrap_err(),
        Error::BaseUnavailable(3)
    );
    assert_eq!(
        build(2, 1, 1, &mut p, Q).unwrap_err(),
        Error::InvalidTriple(2, 1, 1)
    );
    assert_eq!(
        build(1, 1, 0, &mut p, Q).unwrap_err(),
        Error::InvalidTriple(1, 1, 0)
    );
}

#[test]
fn single_steps_move_the_degree() {
    let mut p = BaseGraphProvider::new(Q);
    let g = build(2, 3, 2, &mut p, Q).unwrap().result;
    let up = increase_deg_step(&g, Q).unwrap();
    assert_eq!(hilbert_series(&up).degree(), 3);
    let down = decrease_deg_step(&g, Q).unwrap();
    assert_eq!(hilbert_series(&down).degree(), 1);
    assert_eq!(hilbert_series(&down).dpow(), hilbert_series(&g).dpow());
}
