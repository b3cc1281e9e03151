use proptest::prelude::*;

use zetalab::parameters::{
    build_bj_matrix, presets, rank_check, relation_search, CoefficientMatrix, ExactReal, LogSet,
};
use zetalab::primes::lcm;

fn matrix() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..6, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i32..=3, c), r))
        .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().map(f64::from).collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn rank_invariant_under_permutation_and_scaling(rows in matrix(), shift in 0usize..6, scale in 0.1f64..50.0) {
        let base = rank_check(&CoefficientMatrix::from_real_rows(&rows).unwrap(), None);
        let mut permuted = rows.clone();
        let len = permuted.len();
        permuted.rotate_left(shift % len);
        prop_assert_eq!(rank_check(&CoefficientMatrix::from_real_rows(&permuted).unwrap(), None), base);
        let scaled: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|x| x * scale).collect()).collect();
        prop_assert_eq!(rank_check(&CoefficientMatrix::from_real_rows(&scaled).unwrap(), None), base);
        let mut doubled = rows.clone();
        doubled.extend(rows.iter().cloned());
        prop_assert_eq!(rank_check(&CoefficientMatrix::from_real_rows(&doubled).unwrap(), None), base);
    }
}

#[test]
fn bj_rows_span_the_common_period() {
    for c in presets() {
        for j in 0..c.r() {
            let m = build_bj_matrix(&c, j).unwrap();
            let seqs = &c.families()[j].sequences;
            let period = seqs.iter().fold(1, |acc, s| lcm(acc as u64, s.period() as u64)) as usize;
            assert_eq!(m.rows(), period, "{:?} family {j}", c.label());
            assert_eq!(m.cols(), seqs.len());
            for row in 0..m.rows() {
                for (l, s) in seqs.iter().enumerate() {
                    assert_eq!(m.get(row, l), s.at(row));
                }
            }
        }
    }
}

fn log_set(exprs: &[&str]) -> LogSet {
    LogSet::from_exprs(exprs.iter().map(|e| ExactReal::parse(e).unwrap()).collect()).unwrap()
}

#[test]
fn planted_logarithmic_relations() {
    // 2 log 2 + log 3 - log 12 = 0
    let r = relation_search(&log_set(&["log(2)", "log(3)", "log(12)"]), 3, 50, 100).unwrap();
    assert!(r.found);
    assert_eq!(r.coefficients, vec![2, 1, -1]);
    // 3 log 5 - log 125 = 0 hides among independent logs
    let r = relation_search(&log_set(&["log(2)", "log(5)", "log(7)", "log(125)"]), 3, 50, 100).unwrap();
    assert!(r.found);
    assert!(r.coefficients.iter().filter(|&&c| c != 0).count() >= 2);
    let r = relation_search(&log_set(&["log(2)", "log(3)", "log(5)", "log(7)"]), 4, 50, 10_000).unwrap();
    assert!(!r.found);
}

#[test]
fn relations_are_scale_invariant() {
    let base = ["log(2)", "log(3)", "log(12)"];
    let plain = relation_search(&log_set(&base), 3, 50, 100).unwrap();
    for factor in ["3/7", "pi", "sqrt(2)"] {
        let f = ExactReal::parse(factor).unwrap();
        let scaled: Vec<ExactReal> =
            base.iter().map(|e| ExactReal::mul(f.clone(), ExactReal::parse(e).unwrap())).collect();
        let r = relation_search(&LogSet::from_exprs(scaled).unwrap(), 3, 50, 100).unwrap();
        assert!(r.found, "factor {factor}");
        assert_eq!(r.coefficients, plain.coefficients, "factor {factor}");
    }
}
