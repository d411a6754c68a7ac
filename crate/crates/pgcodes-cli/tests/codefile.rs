use pgcodes::algebra::Field;
use pgcodes::constructions::{code_even, construct, SubspaceCode};
use pgcodes::geometry::{enumerate_subspaces, DEFAULT_SUBSPACE_BUDGET};
use pgcodes_cli::{read_code, write_code, FormatError, MAGIC, TOOL_VERSION};
use proptest::prelude::*;

/// Header (two lines) and the blocks of a file, split on blank lines.
fn split(text: &str) -> (String, Vec<String>) {
    let body = text.strip_suffix('\n').unwrap();
    let mut parts = body.split("\n\n");
    let first = parts.next().unwrap();
    let (magic, rest) = first.split_once('\n').unwrap();
    let (header, block0) = rest.split_once('\n').unwrap();
    let mut blocks = vec![block0.to_string()];
    blocks.extend(parts.map(str::to_string));
    (format!("{magic}\n{header}"), blocks)
}

fn join(header: &str, blocks: &[String]) -> String {
    format!("{header}\n{}\n", blocks.join("\n\n"))
}

/// Every line of PG(3,4) that meets a fixed line trivially, as a small GF(4) code.
fn gf4_code() -> SubspaceCode {
    let f = Field::of_order(4).unwrap();
    let fixed = pgcodes::geometry::Subspace::coordinate(4, 4, 2..4);
    let mut words: Vec<_> = enumerate_subspaces(4, 4, 2, DEFAULT_SUBSPACE_BUDGET)
        .unwrap()
        .into_iter()
        .filter(|w| w.meet_dim(&fixed, &f).unwrap() == 0)
        .collect();
    words.sort();
    let list = words.into_iter().map(|w| (w, "L1".to_string())).collect();
    SubspaceCode::from_sorted(4, 2, "lifts", f.modulus().to_vec(), 2, list).unwrap()
}

fn small() -> String {
    write_code(&code_even(4, 2).unwrap(), TOOL_VERSION)
}

#[test]
fn header_layout() {
    let text = small();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(MAGIC));
    assert_eq!(
        lines.next(),
        Some(format!("q=2 n=4 N=8 M=4737 d=4 construction=even modulus=1,1 tool={TOOL_VERSION}").as_str())
    );
    assert_eq!(lines.next(), Some("# 0 S"));
    assert!(text.ends_with("1\n") || text.ends_with("0\n"));
    assert!(!text.ends_with("\n\n"));
}

#[test]
fn pg7_round_trip_is_byte_identical() {
    let code = construct("pg7", 4, 2).unwrap();
    let text = write_code(&code, TOOL_VERSION);
    let back = read_code(&text).unwrap();
    assert_eq!(back.tool, TOOL_VERSION);
    assert_eq!(back.code, code);
    assert_eq!(write_code(&back.code, &back.tool), text);
}

#[test]
fn gf4_round_trip_uses_digits_above_one() {
    let code = gf4_code();
    let text = write_code(&code, TOOL_VERSION);
    assert!(text.contains("modulus=1,1,1"));
    assert!(text.lines().skip(2).any(|l| l.contains('3')));
    assert_eq!(write_code(&read_code(&text).unwrap().code, TOOL_VERSION), text);
}

#[test]
fn non_rref_block_is_rejected() {
    let (header, mut blocks) = split(&small());
    let mut lines: Vec<&str> = blocks[3].lines().collect();
    lines.swap(1, 2);
    blocks[3] = lines.join("\n");
    let err = read_code(&join(&header, &blocks)).unwrap_err();
    assert!(matches!(err, FormatError::Block { block: 3, .. } | FormatError::Code(_)), "{err}");
}

#[test]
fn count_mismatch_is_rejected() {
    let (header, mut blocks) = split(&small());
    blocks.pop();
    let err = read_code(&join(&header, &blocks)).unwrap_err();
    assert_eq!(err, FormatError::Count { declared: 4737, found: 4736 });
    let bumped = header.replace("M=4737", "M=4738");
    let err = read_code(&join(&bumped, &split(&small()).1)).unwrap_err();
    assert!(matches!(err, FormatError::Count { declared: 4738, found: 4737 }));
}

#[test]
fn out_of_order_blocks_are_rejected() {
    let (header, mut blocks) = split(&small());
    let (ta, a) = blocks[1].split_once('\n').map(|(t, r)| (t.to_string(), r.to_string())).unwrap();
    let (tb, b) = blocks[2].split_once('\n').map(|(t, r)| (t.to_string(), r.to_string())).unwrap();
    blocks[1] = format!("{ta}\n{b}");
    blocks[2] = format!("{tb}\n{a}");
    assert!(read_code(&join(&header, &blocks)).is_err());
}

#[test]
fn malformed_headers_are_rejected() {
    let text = small();
    let cases = [
        text.replacen("SCODE v1", "SCODE v2", 1),
        text.replacen("q=2 n=4", "n=4 q=2", 1),
        text.replacen("N=8", "N=9", 1),
        text.replacen("modulus=1,1", "modulus=1,0,1", 1),
        text.replacen("q=2", "q=02", 1),
        text.replacen("construction=even", "construction=ev-en", 1),
        text.replacen("# 0 S", "# 1 S", 1),
        text.replacen("\n", "\r\n", 1),
        text.strip_suffix('\n').unwrap().to_string(),
        format!("{text}\n"),
    ];
    for (i, bad) in cases.iter().enumerate() {
        assert!(read_code(bad).is_err(), "case {i} was accepted");
    }
}

#[test]
fn bad_digits_are_rejected() {
    let code = gf4_code();
    let text = write_code(&code, TOOL_VERSION);
    // 4 is not an element of GF(4)
    let (header, mut blocks) = split(&text);
    let pos = blocks[0].rfind('\n').unwrap() + 4;
    blocks[0].replace_range(pos..pos + 1, "4");
    assert!(read_code(&join(&header, &blocks)).is_err());
    let (header, mut blocks) = split(&text);
    blocks[0].push('0');
    assert!(read_code(&join(&header, &blocks)).is_err());
}

fn random_code() -> impl Strategy<Value = SubspaceCode> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7]).prop_flat_map(|q| {
        let all = enumerate_subspaces(4, q, 2, DEFAULT_SUBSPACE_BUDGET).unwrap();
        let len = all.len();
        let tags = prop::collection::vec(prop::sample::select(vec!["x", "L1", "pencil2"]), 12);
        (prop::collection::btree_set(0..len, 1..12), tags).prop_map(move |(picked, tags)| {
            let mut words: Vec<_> = picked.iter().map(|&i| all[i].clone()).collect();
            words.sort();
            let list = words.into_iter().zip(tags.iter().map(|t| t.to_string())).collect();
            let f = Field::of_order(q).unwrap();
            SubspaceCode::from_sorted(q, 2, "random", f.modulus().to_vec(), 2, list).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn round_trip(code in random_code()) {
        let text = write_code(&code, "1.2.3");
        let back = read_code(&text).unwrap();
        prop_assert_eq!(&back.tool, "1.2.3");
        prop_assert_eq!(&back.code, &code);
        prop_assert_eq!(write_code(&back.code, &back.tool), text);
    }
}
