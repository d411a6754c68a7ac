use std::collections::{BTreeSet, HashSet};

use pgcodes::algebra::{Field, Matrix};
use pgcodes::constructions::{
    closure_order, code_even, code_pg7_with_report, code_prop32, construct, expected_stabilizer_order, family_d_prime,
    generator_families, is_alternating, klein_map, klein_quadric, odd_generator_families, spread_pairs,
    spread_stabilizer, CodeBuilder, Pg7Route, SubspaceCode, CONSTRUCTIONS,
};
use pgcodes::geometry::{enumerate_subspaces, hermitian_pencil, quadric_pencil, Subspace, DEFAULT_SUBSPACE_BUDGET};
use pgcodes::Error;

/// Rows of a GF(2) subspace of GF(2)^8 as bytes.
fn rows8(w: &Subspace) -> Vec<u8> {
    (0..w.dim())
        .map(|i| w.row(i).iter().fold(0u8, |acc, &b| acc << 1 | b))
        .collect()
}

fn rank8(rows: &[u8]) -> usize {
    let mut basis = [0u8; 8];
    let mut r = 0;
    for &row in rows {
        let mut v = row;
        for bit in (0..8).rev() {
            if v >> bit & 1 == 0 {
                continue;
            }
            if basis[bit] == 0 {
                basis[bit] = v;
                r += 1;
                break;
            }
            v ^= basis[bit];
        }
    }
    r
}

/// Minimum subspace distance of a code of 4-spaces in GF(2)^8, all pairs.
fn min_distance_oracle(code: &SubspaceCode) -> usize {
    let words: Vec<Vec<u8>> = code.codewords().iter().map(rows8).collect();
    let mut best = usize::MAX;
    let mut buf = [0u8; 8];
    for i in 0..words.len() {
        buf[..4].copy_from_slice(&words[i]);
        for w in &words[i + 1..] {
            buf[4..].copy_from_slice(w);
            let d = 2 * (rank8(&buf) - 4);
            best = best.min(d);
        }
    }
    best
}

fn pencil(q: u32) -> pgcodes::geometry::QuadricPencil {
    quadric_pencil(&hermitian_pencil(4, q).unwrap()).unwrap()
}

fn restrict_to_s(w: &Subspace, f: &Field) -> Subspace {
    let rows: Vec<Vec<u32>> = (0..w.dim()).map(|i| w.row_vec(i)[4..].to_vec()).collect();
    Subspace::span(&rows, 4, f).unwrap()
}

#[test]
fn klein_map_detects_meeting_lines() {
    for q in [2u32, 3] {
        let f = Field::of_order(q).unwrap();
        let klein = klein_quadric(&f).unwrap();
        let lines = enumerate_subspaces(4, q, 2, DEFAULT_SUBSPACE_BUDGET).unwrap();
        let images: Vec<Vec<u32>> = lines.iter().map(|l| klein_map(l, &f).unwrap()).collect();
        let distinct: BTreeSet<&Vec<u32>> = images.iter().collect();
        assert_eq!(distinct.len(), lines.len(), "Klein map is injective");
        assert_eq!(klein.points(&f).unwrap().len(), lines.len(), "lines of PG(3,{q}) fill the Klein quadric");
        for (i, a) in lines.iter().enumerate() {
            assert_eq!(klein.value(&images[i], &f), 0);
            for (j, b) in lines.iter().enumerate() {
                let meet = a.meet_dim(b, &f).unwrap() > 0;
                assert_eq!(meet, klein.polar_value(&images[i], &images[j], &f) == 0, "lines {i} and {j}");
            }
        }
    }
}

#[test]
fn klein_images_of_the_spread_form_an_elliptic_quadric() {
    let fp = pencil(2);
    let f = Field::of_order(2).unwrap();
    let gf = generator_families(&fp).unwrap();
    let klein = klein_quadric(&f).unwrap();
    assert_eq!(gf.spread_s.len(), 5);
    let images: Vec<Vec<u32>> = gf
        .spread_s
        .iter()
        .map(|l| klein_map(&restrict_to_s(l, &f), &f).unwrap())
        .collect();
    let span = Subspace::span(&images, 6, &f).unwrap();
    assert_eq!(span.dim(), 4, "the images span a solid");
    let singular: BTreeSet<Vec<u32>> = span
        .points(&f)
        .unwrap()
        .into_iter()
        .filter(|p| klein.value(p, &f) == 0)
        .collect();
    // q^2 + 1 singular points in a solid: an elliptic quadric, and no others
    let expected: BTreeSet<Vec<u32>> = images.into_iter().collect();
    assert_eq!(singular, expected);
}

#[test]
fn generator_families_at_four_two() {
    let fp = pencil(2);
    let f = Field::of_order(2).unwrap();
    let gf = generator_families(&fp).unwrap();
    assert_eq!(gf.members.len(), 3);
    for m in &gf.members {
        assert_eq!(m.system.len(), 135);
        assert_eq!(m.disjoint_s.len(), 64);
        assert_eq!(m.disjoint_s_prime.len(), 64 - 28);
        assert_eq!(m.meeting_both.len(), 35);
        for g in &gf.common {
            assert!(m.meeting_both.contains(g));
        }
    }
    assert_eq!(gf.common.len(), 5);
    assert_eq!(gf.spread.len(), gf.spread_s.len());
    for (g, l) in gf.spread.iter().zip(&gf.spread_s) {
        assert_eq!(g.meet(fp.s(), &f).unwrap(), *l);
        assert_eq!(l.dim(), 2);
    }
    let d_prime = family_d_prime(&gf).unwrap();
    assert_eq!(d_prime.len(), 20);
    for (i, a) in d_prime.iter().enumerate() {
        assert_eq!(a.dim(), 4);
        for b in &d_prime[i + 1..] {
            assert!(a.meet_dim(b, &f).unwrap() <= 2);
        }
    }
}

#[test]
fn even_code_at_four_two() {
    let code = code_even(4, 2).unwrap();
    assert_eq!(code.len(), 4737);
    let counts: Vec<(String, usize)> = code.tag_counts();
    let get = |t: &str| counts.iter().find(|(k, _)| k == t).map_or(0, |c| c.1);
    assert_eq!(get("L1"), 4096);
    assert_eq!(get("L2"), 525);
    assert_eq!(get("G"), 5);
    assert_eq!(get("II"), 30);
    assert_eq!(get("pencil1") + get("pencil2"), 60);
    assert_eq!(get("Dprime"), 20);
    assert_eq!(get("S"), 1);
    assert_eq!(code.duplicate_count(), 0);
    assert_eq!(min_distance_oracle(&code), 4);
}

#[test]
fn even_code_at_four_two_admits_no_further_solid() {
    let code = code_even(4, 2).unwrap();
    let f = Field::of_order(2).unwrap();
    let planes = enumerate_subspaces(4, 2, 3, DEFAULT_SUBSPACE_BUDGET).unwrap();
    let mut covered: HashSet<Vec<u8>> = HashSet::new();
    let keys = |w: &Subspace| -> Vec<Vec<u8>> {
        let b = w.basis();
        planes
            .iter()
            .map(|c| {
                let sub = c.basis().mul(&b, &f).unwrap();
                rows8(&Subspace::from_rows(&sub, &f).unwrap())
            })
            .collect()
    };
    for w in code.codewords() {
        for k in keys(w) {
            assert!(covered.insert(k), "a plane lies in two codewords");
        }
    }
    let mut addable = 0;
    for w in enumerate_subspaces(8, 2, 4, DEFAULT_SUBSPACE_BUDGET).unwrap() {
        if keys(&w).iter().all(|k| !covered.contains(k)) {
            addable += 1;
        }
    }
    assert_eq!(addable, 0);
}

#[test]
fn prop32_code_at_four_two() {
    let code = code_prop32(4, 2).unwrap();
    assert_eq!(code.len(), 4621);
    assert_eq!(code.count_of("L1"), 4096);
    assert_eq!(code.count_of("L2"), 525);
    assert_eq!(min_distance_oracle(&code), 4);
    let f = Field::of_order(2).unwrap();
    let s = Subspace::coordinate(2, 8, 4..8);
    for w in code.family("L1") {
        assert_eq!(w.meet_dim(&s, &f).unwrap(), 0);
    }
}

#[test]
fn stabilizer_at_q2_is_gl_2_4() {
    let fp = pencil(2);
    let f = Field::of_order(2).unwrap();
    let gens = spread_stabilizer(&fp).unwrap();
    assert_eq!(closure_order(&gens, &f, 10_000).unwrap(), Some(180));
    assert_eq!(expected_stabilizer_order(4, 2), num_bigint::BigUint::from(180u32));
    let spread: BTreeSet<Subspace> = fp.spread_s().unwrap().members().iter().cloned().collect();
    for g in &gens {
        assert_eq!(g.rows(), 8);
        assert_eq!(fp.s().transform(g, &f).unwrap(), *fp.s());
        assert_eq!(fp.s_prime().transform(g, &f).unwrap(), *fp.s_prime());
        let image: BTreeSet<Subspace> = spread.iter().map(|l| l.transform(g, &f).unwrap()).collect();
        assert_eq!(image, spread);
    }
}

#[test]
fn pg7_at_q2_uses_the_exchange() {
    let (code, report) = code_pg7_with_report(2).unwrap();
    assert_eq!(code.len(), 4797);
    assert_eq!(report.route, Pg7Route::Exchange);
    assert_eq!(report.group_order, Some(180));
    assert!(!report.orbit_sizes.contains(&60));
    assert_eq!(code.count_of("YH"), 90);
    assert_eq!(code.count_of("II"), 0);
    assert_eq!(min_distance_oracle(&code), 4);
}

#[test]
fn pg7_at_q3_uses_an_orbit() {
    let (code, report) = code_pg7_with_report(3).unwrap();
    assert_eq!(code.len(), 543142);
    assert_eq!(report.route, Pg7Route::Orbit);
    assert_eq!(report.group_order, Some(5760));
    assert_eq!(code.count_of("YH"), 720);
    assert_eq!(code.count_of("II"), code.count_of("pencil1"));
    // the orbit against every non-lifted codeword
    let f = Field::of_order(3).unwrap();
    let yh = code.family("YH");
    let others: Vec<&Subspace> = ["G", "II", "pencil1", "pencil2", "pencil3", "Dprime", "S"]
        .iter()
        .flat_map(|t| code.family(t))
        .collect();
    for (i, a) in yh.iter().enumerate() {
        for b in &yh[i + 1..] {
            assert!(a.meet_dim(b, &f).unwrap() <= 2);
        }
        for b in &others {
            assert!(a.meet_dim(b, &f).unwrap() <= 2);
        }
    }
}

#[test]
fn odd_families_at_five_two() {
    let gf = odd_generator_families(5, 2).unwrap();
    let f = Field::of_order(2).unwrap();
    assert_eq!(gf.members.len(), 1);
    let m = &gf.members[0];
    assert_eq!(m.system.len(), 2295);
    assert!(m.disjoint_s.is_empty());
    assert_eq!(m.disjoint_s_prime.len(), 1024);
    assert_eq!(m.meeting_both.len(), 1271);
    assert_eq!(gf.skew.len(), 868);
    assert_eq!(gf.spread_s.len(), 9);
    let s = Subspace::coordinate(2, 10, 5..10);
    for w in &gf.skew {
        assert_eq!(w.meet_dim(&s, &f).unwrap(), 1);
    }
    let pairs = spread_pairs(&gf).unwrap();
    assert_eq!(pairs.len(), 72);
    for (i, a) in pairs.iter().enumerate() {
        assert_eq!(a.dim(), 5);
        for b in &pairs[i + 1..] {
            assert!(a.meet_dim(b, &f).unwrap() <= 3);
        }
    }
}

#[test]
fn parameter_guards() {
    assert!(matches!(construct("even", 5, 2), Err(Error::Parameter(_))));
    assert!(matches!(construct("odd", 4, 2), Err(Error::Parameter(_))));
    assert!(matches!(construct("pg7", 6, 2), Err(Error::Parameter(_))));
    assert!(matches!(construct("nope", 4, 2), Err(Error::Parameter(_))));
    assert_eq!(CONSTRUCTIONS, ["prop32", "even", "odd", "pg7"]);
}

#[test]
fn constructions_are_deterministic() {
    assert_eq!(code_even(4, 2).unwrap(), code_even(4, 2).unwrap());
    assert_eq!(construct("pg7", 4, 2).unwrap(), construct("pg7", 4, 2).unwrap());
}

#[test]
fn builder_sorts_and_merges() {
    let f = Field::of_order(2).unwrap();
    let a = Subspace::coordinate(2, 4, 0..2);
    let b = Subspace::coordinate(2, 4, 2..4);
    let mut builder = CodeBuilder::new();
    builder.add("x", b.clone()).unwrap();
    builder.add("x", a.clone()).unwrap();
    builder.add("x", b.clone()).unwrap();
    let code = builder.finish(2, 2, "test", f.modulus().to_vec(), 4).unwrap();
    assert_eq!(code.len(), 2);
    assert!(code.codewords()[0] < code.codewords()[1]);

    let mut clash = CodeBuilder::new();
    clash.add("x", a.clone()).unwrap();
    clash.add("y", a.clone()).unwrap();
    assert!(matches!(clash.finish(2, 2, "test", f.modulus().to_vec(), 4), Err(Error::Verification(_))));
    assert!(CodeBuilder::new().add("has space", a.clone()).is_err());

    let (lo, hi) = if a < b { (a.clone(), b) } else { (b, a.clone()) };
    let unsorted = vec![(hi, "x".to_string()), (lo, "x".to_string())];
    assert!(SubspaceCode::from_sorted(2, 2, "test", vec![1, 1], 4, unsorted).is_err());
    let repeated = vec![(a.clone(), "x".to_string()), (a, "x".to_string())];
    assert_eq!(SubspaceCode::from_sorted(2, 2, "test", vec![1, 1], 4, repeated).unwrap().duplicate_count(), 1);
}

#[test]
fn alternating_test_matches_definition() {
    let f = Field::of_order(3).unwrap();
    let a = Matrix::from_rows(3, &[vec![0, 1], vec![2, 0]]).unwrap();
    let b = Matrix::from_rows(3, &[vec![0, 1], vec![1, 0]]).unwrap();
    assert!(is_alternating(&a, &f));
    assert!(!is_alternating(&b, &f));
}
