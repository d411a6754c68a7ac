use std::collections::BTreeSet;

use pgcodes::algebra::Field;
use pgcodes::constructions::{code_even, code_prop32, SubspaceCode};
use pgcodes::geometry::{enumerate_subspaces, Subspace, DEFAULT_SUBSPACE_BUDGET};
use pgcodes::verify::{
    cardinality_check, covering_check, exact_cover_check, min_distance, Mode, Witness, DEFAULT_INCIDENCE_BUDGET,
    DEFAULT_PAIR_BUDGET,
};
use proptest::prelude::*;

fn entries(code: &SubspaceCode) -> Vec<(Subspace, String)> {
    (0..code.len()).map(|i| (code.codeword(i).clone(), code.tag(i).to_string())).collect()
}

fn rebuild(code: &SubspaceCode, mut list: Vec<(Subspace, String)>) -> SubspaceCode {
    list.sort_by(|a, b| a.0.cmp(&b.0));
    SubspaceCode::from_sorted(
        code.field_order(),
        code.n(),
        code.construction(),
        code.modulus().to_vec(),
        code.claimed_distance(),
        list,
    )
    .unwrap()
}

#[test]
fn a_missing_codeword_is_reported_by_the_census() {
    let code = code_even(4, 2).unwrap();
    assert!(cardinality_check(&code).unwrap().passed());
    let mut list = entries(&code);
    list.remove(17);
    let short = rebuild(&code, list);
    let report = cardinality_check(&short).unwrap();
    assert!(!report.passed());
    let text = report.to_text();
    assert!(text.contains("delta -1"), "{text}");
}

#[test]
fn a_repeated_codeword_fails_cardinality() {
    let code = code_even(4, 2).unwrap();
    let mut list = entries(&code);
    list.push(list[5].clone());
    list.remove(6);
    let dup = rebuild(&code, list);
    assert_eq!(dup.len(), code.len());
    assert_eq!(dup.duplicate_count(), 1);
    let report = cardinality_check(&dup).unwrap();
    assert!(!report.passed());
    assert!(report.checks[0].witnesses.iter().any(|w| matches!(w, Witness::Pair { meet: 4, .. })));
}

#[test]
fn a_close_pair_is_found_exhaustively() {
    let f = Field::of_order(2).unwrap();
    let code = code_even(4, 2).unwrap();
    let report = min_distance(&code, &Mode::Exhaustive, DEFAULT_PAIR_BUDGET).unwrap();
    assert!(report.passed());
    assert_eq!(report.d_measured, Some(4));
    assert_eq!(report.pairs, (code.len() as u128) * (code.len() as u128 - 1) / 2);

    // replace one basis vector of a codeword: the new solid meets it in a plane
    let w = code.codeword(0);
    let mut rows: Vec<Vec<u32>> = (0..4).map(|i| w.row_vec(i)).collect();
    let extra = (0..8)
        .map(|j| {
            let mut e = vec![0u32; 8];
            e[j] = 1;
            e
        })
        .find(|e| !w.contains_vector(e, &f).unwrap())
        .unwrap();
    rows[3] = extra;
    let near = Subspace::span(&rows, 8, &f).unwrap();
    assert_eq!(near.meet_dim(w, &f).unwrap(), 3);
    let mut list: Vec<(Subspace, String)> = entries(&code).into_iter().filter(|(s, _)| *s != near).collect();
    list.push((near, "extra".into()));
    let bad = rebuild(&code, list);
    let report = min_distance(&bad, &Mode::Exhaustive, DEFAULT_PAIR_BUDGET).unwrap();
    assert!(!report.passed());
    assert_eq!(report.d_measured, Some(2));
    assert!(report.checks[0].witnesses.iter().any(|w| matches!(w, Witness::Pair { meet: 3, .. })));
    assert!(!covering_check(&bad, 3, DEFAULT_INCIDENCE_BUDGET).unwrap().passed());
}

#[test]
fn sampling_is_reproducible() {
    let code = code_even(4, 2).unwrap();
    let mode = Mode::Sampled { seed: 7, samples: 20_000 };
    let a = min_distance(&code, &mode, DEFAULT_PAIR_BUDGET).unwrap();
    let b = min_distance(&code, &mode, DEFAULT_PAIR_BUDGET).unwrap();
    assert_eq!(a, b);
    assert!(a.passed());
    assert_eq!(a.pairs, 20_000);
}

#[test]
fn structured_mode_agrees_on_even_codes() {
    let code = code_even(4, 2).unwrap();
    let mode = Mode::Structured { seed: 1, samples: 10_000 };
    let report = min_distance(&code, &mode, DEFAULT_PAIR_BUDGET).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    assert_eq!(report.d_measured, Some(4));
}

#[test]
fn left_lifts_partition_the_planes_off_the_special_solid() {
    let f = Field::of_order(2).unwrap();
    let code = code_prop32(4, 2).unwrap();
    let s = Subspace::coordinate(2, 8, 4..8);
    let universe: Vec<Subspace> = enumerate_subspaces(8, 2, 3, DEFAULT_SUBSPACE_BUDGET)
        .unwrap()
        .into_iter()
        .filter(|p| p.meet_dim(&s, &f).unwrap() == 0)
        .collect();
    assert_eq!(universe.len(), 61440);
    let report = exact_cover_check(&code, Some("L1"), 3, &universe, DEFAULT_INCIDENCE_BUDGET).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    assert!(report.checks[0].detail[0].ends_with("incidences outside the universe 0"));
    // the other families only add planes that meet the special solid
    let all = exact_cover_check(&code, None, 3, &universe, DEFAULT_INCIDENCE_BUDGET).unwrap();
    assert!(all.passed());
    let outside = 525 * 15;
    assert!(all.checks[0].detail[0].ends_with(&format!("incidences outside the universe {outside}")), "{}", all.to_text());
}

#[test]
fn report_key_values_are_stable() {
    let code = code_even(4, 2).unwrap();
    let mut report = min_distance(&code, &Mode::Exhaustive, DEFAULT_PAIR_BUDGET).unwrap();
    report.merge(cardinality_check(&code).unwrap());
    let keys: Vec<String> = report.key_values().into_iter().map(|(k, _)| k).collect();
    assert_eq!(keys, ["code", "M", "d_measured", "mode", "pairs", "checks", "result"]);
    let kv: std::collections::HashMap<String, String> = report.key_values().into_iter().collect();
    assert_eq!(kv["code"], "even(q=2,n=4)");
    assert_eq!(kv["M"], "4737");
    assert_eq!(kv["checks"], "distance,cardinality");
    assert_eq!(kv["result"], "pass");
    assert!(report.to_text().ends_with("result=pass\n"));
}

#[test]
fn cover_dimension_out_of_range() {
    let code = code_even(4, 2).unwrap();
    assert!(covering_check(&code, 0, DEFAULT_INCIDENCE_BUDGET).is_err());
    assert!(covering_check(&code, 5, DEFAULT_INCIDENCE_BUDGET).is_err());
}

#[test]
fn budgets_are_enforced() {
    let code = code_even(4, 2).unwrap();
    assert!(min_distance(&code, &Mode::Exhaustive, 1000).is_err());
    assert!(covering_check(&code, 3, 1000).is_err());
}

fn small_code(n: usize, q: u32) -> impl Strategy<Value = SubspaceCode> {
    let all = enumerate_subspaces(2 * n, q, n, DEFAULT_SUBSPACE_BUDGET).unwrap();
    let len = all.len();
    prop::collection::btree_set(0..len, 2..24).prop_map(move |picked: BTreeSet<usize>| {
        let mut words: Vec<Subspace> = picked.iter().map(|&i| all[i].clone()).collect();
        words.sort();
        let f = Field::of_order(q).unwrap();
        let list = words.into_iter().map(|w| (w, "x".to_string())).collect();
        SubspaceCode::from_sorted(q, n, "random", f.modulus().to_vec(), 4, list).unwrap()
    })
}

/// All-pairs minimum distance through the generic subspace routines.
fn naive_distance(code: &SubspaceCode) -> usize {
    let f = Field::of_order(code.field_order()).unwrap();
    let w = code.codewords();
    let mut best = usize::MAX;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            best = best.min(w[i].distance(&w[j], &f).unwrap());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distance_and_cover_agree_over_gf2(code in small_code(3, 2)) {
        let d = min_distance(&code, &Mode::Exhaustive, DEFAULT_PAIR_BUDGET).unwrap();
        let c = covering_check(&code, 2, DEFAULT_INCIDENCE_BUDGET).unwrap();
        prop_assert_eq!(d.d_measured, Some(naive_distance(&code)));
        prop_assert_eq!(d.passed(), c.passed());
    }

    #[test]
    fn distance_and_cover_agree_over_gf3(code in small_code(2, 3)) {
        let d = min_distance(&code, &Mode::Exhaustive, DEFAULT_PAIR_BUDGET).unwrap();
        let c = covering_check(&code, 1, DEFAULT_INCIDENCE_BUDGET).unwrap();
        prop_assert_eq!(d.d_measured, Some(naive_distance(&code)));
        prop_assert_eq!(d.passed(), c.passed());
    }
}
