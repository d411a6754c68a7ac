use pgcodes::algebra::{Field, Matrix, SingerFrame};
use pgcodes::geometry::census;
use pgcodes::geometry::Subspace;
use pgcodes::rankcodes::{
    construct_y, construct_y_with, crc_extract, fixed_space_coordinates, gamma_spaces, lift_left, lift_right,
    matrix_of_left_lift, matrix_of_right_lift, mrd_code, scan_ranks, transpose_space, Reading, DEFAULT_MEMBER_BUDGET,
};
use pgcodes::verify::mrd_linear_check;
use proptest::prelude::*;

/// Rank of an n x n GF(2) matrix given as row bitmasks, by elimination on copies.
fn rank2(mut rows: Vec<u32>) -> usize {
    let mut r = 0;
    for bit in (0..32).rev() {
        if let Some(p) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
            rows.swap(r, p);
            let pivot = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && *row >> bit & 1 == 1 {
                    *row ^= pivot;
                }
            }
            r += 1;
        }
    }
    r
}

/// Every member of a GF(2) matrix space, as row bitmasks, by Gray-code walk over the basis.
fn members2(y: &Subspace, n: usize) -> Vec<Vec<u32>> {
    let basis: Vec<Vec<u32>> = (0..y.dim())
        .map(|i| {
            let v = y.row_vec(i);
            (0..n).map(|r| (0..n).fold(0u32, |acc, c| acc << 1 | v[r * n + c])).collect()
        })
        .collect();
    let mut cur = vec![0u32; n];
    let mut out = vec![cur.clone()];
    for g in 1u64..(1u64 << y.dim()) {
        let flip = g.trailing_zeros() as usize;
        for (c, b) in cur.iter_mut().zip(&basis[flip]) {
            *c ^= b;
        }
        out.push(cur.clone());
    }
    out
}

fn is_alternating2(rows: &[u32], n: usize) -> bool {
    (0..n).all(|i| (0..n).all(|j| (rows[i] >> (n - 1 - j) & 1) == (rows[j] >> (n - 1 - i) & 1) && (i != j || rows[i] >> (n - 1 - i) & 1 == 0)))
}

#[test]
fn y_has_rank_distance_two_by_brute_force() {
    for n in [4usize, 5] {
        let y = construct_y(n, 2).unwrap();
        assert_eq!(y.dim(), n * n - n);
        let members = members2(&y, n);
        assert_eq!(members.len(), 1 << (n * n - n));
        let mut by_rank = vec![0u64; n + 1];
        let mut alternating = 0u64;
        for m in &members {
            by_rank[rank2(m.clone())] += 1;
            if is_alternating2(m, n) {
                alternating += 1;
            }
        }
        assert_eq!(by_rank[0], 1);
        assert_eq!(by_rank[1], 0, "Y contains a rank-one matrix for n={n}");
        assert_eq!(alternating, 1 << (n * (n - 1) / 2), "alternating members for n={n}");
        for r in 2..=n - 2 {
            assert_eq!(
                num_bigint::BigUint::from(by_rank[r]),
                census::crc_cardinality(n as u64, r as u64, 2).unwrap(),
                "rank-{r} members of Y for n={n}"
            );
        }
    }
}

#[test]
fn y_over_gf3_at_n4() {
    let f = Field::of_order(3).unwrap();
    let y = construct_y(4, 3).unwrap();
    let scan = scan_ranks(&y, 4, &f, DEFAULT_MEMBER_BUDGET).unwrap();
    assert_eq!(scan.min_nonzero, Some(2));
    assert_eq!(scan.counts[1], 0);
    assert_eq!(
        num_bigint::BigUint::from(scan.counts[2]),
        census::crc_cardinality(4, 2, 3).unwrap()
    );
    let (_, alt) = gamma_spaces(4, &f).unwrap();
    assert!(y.contains(&alt, &f).unwrap());
}

#[test]
fn mrd_linear_check_accepts_y_and_rejects_the_symmetric_space() {
    let f = Field::of_order(2).unwrap();
    for n in [4usize, 5] {
        let y = construct_y(n, 2).unwrap();
        let report = mrd_linear_check(&y, n, &f, DEFAULT_MEMBER_BUDGET).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.d_measured, Some(2));
        assert_eq!(report.pairs, (1u128 << (n * n - n)) - 1);
    }
    let (gamma, alt) = gamma_spaces(4, &f).unwrap();
    assert_eq!(gamma.dim(), 10);
    assert_eq!(alt.dim(), 6);
    let report = mrd_linear_check(&gamma, 4, &f, DEFAULT_MEMBER_BUDGET).unwrap();
    assert!(!report.passed());
    assert_eq!(report.d_measured, Some(1));
    assert!(!report.checks[0].witnesses.is_empty());
}

#[test]
fn y_is_stable_under_transposition_of_its_alternating_part() {
    let f = Field::of_order(2).unwrap();
    let y = construct_y(4, 2).unwrap();
    let yt = transpose_space(&y, 4, &f).unwrap();
    assert_eq!(yt.dim(), y.dim());
    let (_, alt) = gamma_spaces(4, &f).unwrap();
    assert!(yt.contains(&alt, &f).unwrap());
}

#[test]
fn fixed_space_index_sets() {
    // n = 4, k = 2: U_{a1(...)} for a1 = 2..4 and a2 = 1
    assert_eq!(fixed_space_coordinates(4, 2, Reading::Literal).unwrap(), vec![1, 6, 11, 12]);
    assert_eq!(fixed_space_coordinates(4, 4, Reading::Literal).unwrap().len(), 1 + 3);
    assert!(fixed_space_coordinates(4, 3, Reading::Extended).is_err());
    assert!(fixed_space_coordinates(4, 4, Reading::Extended).is_err());
    assert!(fixed_space_coordinates(4, 1, Reading::Literal).is_err());
    assert!(fixed_space_coordinates(4, 5, Reading::Literal).is_err());
}

#[test]
fn literal_reading_is_the_one_used() {
    let f = Field::of_order(2).unwrap();
    let frame = SingerFrame::new(4, &f).unwrap();
    let y = construct_y_with(&frame, Reading::Literal, DEFAULT_MEMBER_BUDGET).unwrap();
    assert_eq!(y, construct_y(4, 2).unwrap());
}

#[test]
fn constant_rank_subcodes() {
    let f = Field::of_order(2).unwrap();
    let y = construct_y(5, 2).unwrap();
    let code = mrd_code(&y, 5, &f, DEFAULT_MEMBER_BUDGET).unwrap();
    assert_eq!(code.len(), 1 << 20);
    assert!(code.is_linear());
    assert_eq!(code.min_rank_distance(), 2);
    let c2 = crc_extract(&code, 2, &f).unwrap();
    let c3 = crc_extract(&code, 3, &f).unwrap();
    assert_eq!(c2.len(), 4805);
    assert_eq!(c3.len(), 124930);
    for m in c3.iter().take(500) {
        assert_eq!(m.rank(&f).unwrap(), 3);
    }
    assert!(crc_extract(&code, 4, &f).is_err());
}

fn square(q: u32, n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..q, n * n).prop_map(move |d| Matrix::from_vec(q, n, n, d).unwrap())
}

fn q_and_pair() -> impl Strategy<Value = (u32, Matrix, Matrix)> {
    (prop::sample::select(vec![2u32, 3, 4, 5]), 2..=5usize).prop_flat_map(|(q, n)| (Just(q), square(q, n), square(q, n)))
}

proptest! {
    #[test]
    fn lifting_doubles_rank_distance((q, a, b) in q_and_pair()) {
        let f = Field::of_order(q).unwrap();
        let diff = a.sub(&b, &f).unwrap();
        let r = diff.rank(&f).unwrap();
        let (la, lb) = (lift_left(&a).unwrap(), lift_left(&b).unwrap());
        prop_assert_eq!(la.distance(&lb, &f).unwrap(), 2 * r);
        let (ra, rb) = (lift_right(&a, &f).unwrap(), lift_right(&b, &f).unwrap());
        prop_assert_eq!(ra.distance(&rb, &f).unwrap(), 2 * r);
        prop_assert_eq!(matrix_of_left_lift(&la), Some(a.clone()));
        prop_assert_eq!(matrix_of_right_lift(&ra, &f), Some(a.clone()));
    }

    #[test]
    fn left_lifts_avoid_the_second_half((q, a, _b) in q_and_pair()) {
        let f = Field::of_order(q).unwrap();
        let n = a.rows();
        let s = Subspace::coordinate(q, 2 * n, n..2 * n);
        let s_prime = Subspace::coordinate(q, 2 * n, 0..n);
        prop_assert_eq!(lift_left(&a).unwrap().meet_dim(&s, &f).unwrap(), 0);
        prop_assert_eq!(lift_right(&a, &f).unwrap().meet_dim(&s_prime, &f).unwrap(), 0);
        // L'(A) meets S in the kernel of A
        let k = n - a.rank(&f).unwrap();
        prop_assert_eq!(lift_right(&a, &f).unwrap().meet_dim(&s, &f).unwrap(), k);
    }
}
