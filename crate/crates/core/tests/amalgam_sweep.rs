//! Amalgamation sweep: assemble every V-formation whose three algebras are
//! enumerated orthogroupoids of size at most four, with the base embedded
//! into both sides in every possible way, and check that each one
//! amalgamates strongly.

use orthokit_core::amalgam::{amalgamate, embeddings, validate_vformation, verify_strong, VFormation};
use orthokit_core::axioms::{check_orthogroupoid, is_zero_commutative};
use orthokit_core::enumerate::{canonical_form, enumerate_orthogroupoids, CanonicalForm, SearchSpec};
use orthokit_core::Groupoid;
use std::collections::BTreeSet;

fn models(size: usize) -> Vec<Groupoid> {
    enumerate_orthogroupoids(&SearchSpec::new(size))
}

fn formations() -> Vec<VFormation> {
    let pool: Vec<Groupoid> = (1..=4).flat_map(models).collect();
    let mut out = Vec::new();
    for a in &pool {
        for b1 in &pool {
            for b2 in &pool {
                for i in embeddings(a, b1) {
                    for j in embeddings(a, b2) {
                        out.push(VFormation {
                            a: a.clone(),
                            b1: b1.clone(),
                            b2: b2.clone(),
                            i: i.clone(),
                            j,
                        });
                    }
                }
            }
        }
    }
    out
}

#[test]
fn every_small_formation_amalgamates_strongly() {
    let all = formations();
    // One base per size that has models at all (1, 2, 4), embeddings pinned
    // by the subalgebra structure: the four-element model has exactly two
    // automorphisms and a unique two-element subalgebra.
    assert_eq!(all.len(), 9);
    for vf in &all {
        assert!(validate_vformation(vf).passed());
        let am = amalgamate(vf).unwrap();
        assert!(check_orthogroupoid(&am.d).passes());
        let report = verify_strong(vf, &am);
        assert!(report.passed(), "weak amalgam over |A|={}:\n{report:?}", vf.a.size());
        assert_eq!(am.d.size(), vf.b1.size() + vf.b2.size() - vf.a.size());
    }
}

#[test]
fn glueing_the_four_element_models_over_the_chain_gives_a_known_six_model() {
    // B1 = B2 = the four-element model, glued over its {0, 1} subalgebra.
    // The result has six elements and commutes with zero, so it must appear
    // in the size-six census.
    let census: BTreeSet<CanonicalForm> = {
        let mut spec = SearchSpec::new(6);
        spec.zero_commutative = true;
        let labelled = enumerate_orthogroupoids(&spec);
        assert_eq!(labelled.len(), 57);
        labelled.iter().map(canonical_form).collect()
    };
    assert_eq!(census.len(), 5, "57 labelled models collapse to 5 classes");

    let mut found = 0;
    for vf in formations() {
        if vf.a.size() != 2 || vf.b1.size() != 4 || vf.b2.size() != 4 {
            continue;
        }
        found += 1;
        let am = amalgamate(&vf).unwrap();
        assert!(is_zero_commutative(&am.d).passed);
        assert!(
            census.contains(&canonical_form(&am.d)),
            "amalgam missing from the zero-commutative size-6 census"
        );
    }
    assert_eq!(found, 1);
}

#[test]
fn sums_across_the_two_sides_hit_the_top() {
    for vf in formations() {
        let am = amalgamate(&vf).unwrap();
        let top = am.d.top();
        let shared: BTreeSet<usize> = vf.i.iter().map(|&x| am.h[x]).collect();
        let left: Vec<usize> =
            am.h.iter().copied().filter(|x| !shared.contains(x)).collect();
        let right: Vec<usize> =
            am.k.iter().copied().filter(|x| !shared.contains(x)).collect();
        for &x in &left {
            for &y in &right {
                assert_eq!(am.d.plus(x, y), top);
                assert_eq!(am.d.plus(y, x), top);
            }
        }
    }
}

#[test]
fn both_sides_embed_their_tables_unchanged() {
    for vf in formations() {
        let am = amalgamate(&vf).unwrap();
        for (side, map) in [(&vf.b1, &am.h), (&vf.b2, &am.k)] {
            for x in 0..side.size() {
                assert_eq!(am.d.prime(map[x]), map[side.prime(x)]);
                for y in 0..side.size() {
                    assert_eq!(am.d.plus(map[x], map[y]), map[side.plus(x, y)]);
                }
            }
        }
    }
}
