//! Parser and serializer coverage: the fixtures round-trip, whitespace and
//! comments are immaterial, and every malformed input is rejected with the
//! offending line number.

use orthokit::format::{parse, serialize, serialize_groupoid, serialize_system, Document};
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn fixtures_parse_and_round_trip() {
    for name in ["b2.ok", "b2xb2.ok", "og6.ok", "zc6.ok", "induced-ors4.ok"] {
        let doc = parse(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        let g = match &doc {
            Document::Groupoid(g) => g,
            Document::System(_) => panic!("{name} should hold a groupoid"),
        };
        let again = parse(&serialize_groupoid(g)).unwrap();
        assert_eq!(doc, again, "{name} lost information in a round trip");
    }
    for name in ["ors4.ok", "ors8.ok"] {
        let doc = parse(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        let s = match &doc {
            Document::System(s) => s,
            Document::Groupoid(_) => panic!("{name} should hold a system"),
        };
        let again = parse(&serialize_system(s)).unwrap();
        assert_eq!(doc, again, "{name} lost information in a round trip");
    }
}

#[test]
fn comments_and_spacing_are_immaterial() {
    let canonical = parse(&fixture("b2xb2.ok")).unwrap();
    let noisy = "\n# leading comment\n  %orthokit v1   # trailing\n\nkind groupoid\n\
                 elements   0  p   q 1\ninvolution 1 q p 0 # images\ntable # rows follow\n\
                 0 p q 1\np p 1 1\nq 1 q 1 # a row\n1 1 1 1\n# done\n";
    assert_eq!(parse(noisy).unwrap(), canonical);
}

#[test]
fn directives_may_come_in_any_order() {
    let doc = "%orthokit v1\nelements 0 1\ninvolution 1 0\nkind groupoid\ntable\n0 1\n1 1\n";
    assert!(matches!(parse(doc).unwrap(), Document::Groupoid(_)));
}

#[test]
fn element_names_may_collide_with_directive_words() {
    let doc = "%orthokit v1\nkind relsys\nelements pairs table 1\ninvolution 1 table pairs\n\
               pairs\npairs 1\ntable 1\n1 1\npairs pairs\n";
    let s = match parse(doc).unwrap() {
        Document::System(s) => s,
        _ => unreachable!(),
    };
    assert_eq!(s.size(), 3);
    assert!(s.related(0, 0));
}

#[test]
fn malformed_inputs_name_the_offending_line() {
    let cases: &[(&str, usize, &str)] = &[
        ("", 1, "empty input"),
        ("kind groupoid\n", 1, "expected header"),
        ("%orthokit v2\n", 1, "expected header"),
        ("%orthokit v1\nkind ring\n", 2, "groupoid, relsys"),
        ("%orthokit v1\nkind groupoid\nkind relsys\n", 3, "duplicate `kind`"),
        ("%orthokit v1\nkind groupoid\nelements\n", 3, "at least one name"),
        ("%orthokit v1\nkind groupoid\nshape 0 1\n", 3, "unknown directive"),
        ("%orthokit v1\nkind relsys\nelements 0 1\ninvolution 1 0\ntable\n", 5, "kind groupoid"),
        ("%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1 0\npairs\n", 5, "kind relsys"),
        ("%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1 0\n", 4, "missing `table`"),
        ("%orthokit v1\nelements 0 1\ninvolution 1 0\n", 3, "missing `kind`"),
        ("%orthokit v1\nkind groupoid\ninvolution 1 0\n", 3, "missing `elements`"),
        ("%orthokit v1\nkind groupoid\nelements 0 2\ninvolution 2 0\ntable\n0 2\n2 2\n", 3, "no element named"),
        ("%orthokit v1\nkind groupoid\nelements 0 1 1\ninvolution 1 0 1\ntable\n", 3, "duplicate element name"),
        ("%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1\ntable\n0 1\n1 1\n", 4, "1 images for 2"),
        ("%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1 x\ntable\n0 1\n1 1\n", 4, "unknown element `x`"),
        ("%orthokit v1\nkind relsys\nelements z 1 0\ninvolution 1 z 0\npairs\n", 5, "\"0\""),
        ("%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1 0\ntable\n0 1\n", 6, "1 rows"),
        ("%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1 0\ntable\n0 1 1\n1 1\n", 6, "3 entries"),
        ("%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1 0\ntable\n0 1\n1 1\n0 1\n", 8, "3 rows"),
        ("%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1 0\ntable\n0 1\n1 x\n", 7, "unknown element `x`"),
        ("%orthokit v1\nkind relsys\nelements 0 1\ninvolution 1 0\npairs\n0 1 1\n", 6, "expected `x y`"),
        ("%orthokit v1\nkind relsys\nelements 0 1\ninvolution 1 0\npairs\n0 x\n", 6, "unknown element `x`"),
    ];
    for (text, line, needle) in cases {
        let err = parse(text).expect_err(&format!("should reject: {text:?}"));
        assert_eq!(err.line, *line, "wrong line for {text:?}: {err}");
        assert!(
            err.to_string().contains(needle),
            "message {:?} misses {needle:?} for {text:?}",
            err.to_string()
        );
    }
}

/// Names that survive tokenization: no whitespace, no `#`.
fn name_strategy() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_']{0,3}"
}

prop_compose! {
    fn arbitrary_groupoid_doc()(n in 1usize..6)(
        names in proptest::collection::btree_set(name_strategy(), n.saturating_sub(1)),
        pairing in proptest::collection::vec(any::<u32>(), n),
        cells in proptest::collection::vec(0..n, n * n),
        n in Just(n),
    ) -> String {
        // Assemble a structurally valid groupoid by hand: unique names with
        // the top named "1", a random self-inverse pairing that sends the
        // top to index 0 (the parser's zero-name rule does not apply since
        // no element is named "0"), and arbitrary cell values.
        let mut names: Vec<String> = names.into_iter().collect();
        names.resize_with(n.saturating_sub(1), || "x".into());
        let mut unique = Vec::new();
        for (i, base) in names.iter().enumerate() {
            let mut name = base.clone();
            while unique.contains(&name) || name == "1" {
                name.push_str(&i.to_string());
            }
            unique.push(name);
        }
        let top = if n == 1 { 0 } else { 1 };
        unique.insert(top.min(unique.len()), "1".to_string());

        let mut inv: Vec<Option<usize>> = vec![None; n];
        if n > 1 {
            inv[top] = Some(0);
            inv[0] = Some(top);
        }
        let mut loose: Vec<usize> = (0..n).filter(|&i| inv[i].is_none()).collect();
        let mut draws = pairing.iter();
        while let Some(x) = loose.pop() {
            let d = *draws.next().unwrap() as usize;
            let partner = if loose.is_empty() { x } else { loose[d % loose.len()] };
            if partner != x {
                loose.retain(|&y| y != partner);
            }
            inv[x] = Some(partner);
            inv[partner] = Some(x);
        }

        let mut out = format!("%orthokit v1\nkind groupoid\nelements {}\n", unique.join(" "));
        let images: Vec<&str> =
            (0..n).map(|i| unique[inv[i].unwrap()].as_str()).collect();
        out.push_str(&format!("involution {}\ntable\n", images.join(" ")));
        for row in cells.chunks(n) {
            let row: Vec<&str> = row.iter().map(|&v| unique[v].as_str()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

proptest! {
    #[test]
    fn serialization_round_trips(text in arbitrary_groupoid_doc()) {
        let doc = parse(&text).unwrap();
        let again = parse(&serialize(&doc)).unwrap();
        prop_assert_eq!(doc, again);
    }
}
