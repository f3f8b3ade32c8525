//! Direct decomposition of 0-commutative orthogroupoids along central
//! elements.
//!
//! A central element e splits the algebra into the interval below e and
//! the interval below e', via b ↦ (e∧b, e'∧b). Splitting at every atom of
//! the center at once gives the finest direct decomposition; an algebra
//! whose center is just {0, 1} is directly indecomposable and comes back
//! as its own single factor. Every decomposition built here is re-checked
//! as an isomorphism before it is returned.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::axioms::check_orthogroupoid;
use crate::church::{CenterError, ChurchGroupoid};
use crate::model::{Carrier, Groupoid, Involution, MAX_ELEMENTS};
use crate::report::{CheckOutcome, CheckReport, Witness};

#[derive(Debug, Clone)]
pub enum DecompError {
    NotCentral { element: usize },
    Center(CenterError),
    VerificationFailed { check: &'static str },
    TooLarge { size: usize },
}

impl fmt::Display for DecompError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompError::NotCentral { element } => {
                write!(f, "element #{element} is not central")
            }
            DecompError::Center(e) => write!(f, "center is not Boolean: {e}"),
            DecompError::VerificationFailed { check } => {
                write!(f, "decomposition failed verification: {check}")
            }
            DecompError::TooLarge { size } => {
                write!(f, "product would have {size} elements, limit is {MAX_ELEMENTS}")
            }
        }
    }
}

impl core::error::Error for DecompError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            DecompError::Center(e) => Some(e),
            _ => None,
        }
    }
}

/// Factors of a direct decomposition, one per element of `at`, together
/// with the isomorphism: `map[b][k]` is the index in `factors[k]` that
/// the k-th projection sends carrier element b to.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub at: Vec<usize>,
    pub factors: Vec<Groupoid>,
    pub map: Vec<Vec<usize>>,
}

fn interval_members(g: &Groupoid, e: usize) -> Vec<usize> {
    (0..g.size())
        .filter(|&x| g.plus(x, e) == e && g.plus(e, x) == e)
        .collect()
}

fn position(members: &[usize], x: usize) -> Option<usize> {
    members.binary_search(&x).ok()
}

fn build_factor(
    g: &Groupoid,
    members: &[usize],
    top: usize,
    plus: impl Fn(usize, usize) -> usize,
    prime: impl Fn(usize) -> usize,
) -> Result<Groupoid, DecompError> {
    let k = members.len();
    let names: Vec<String> = members.iter().map(|&x| String::from(g.name(x))).collect();
    let top_pos = position(members, top)
        .ok_or(DecompError::VerificationFailed { check: "top_in_carrier" })?;
    let carrier = Carrier::with_top(names, top_pos)
        .map_err(|_| DecompError::VerificationFailed { check: "carrier" })?;
    let mut image = vec![0usize; k];
    let mut table = vec![0u8; k * k];
    for (i, &x) in members.iter().enumerate() {
        image[i] = position(members, prime(x))
            .ok_or(DecompError::VerificationFailed { check: "closure_prime" })?;
        for (j, &y) in members.iter().enumerate() {
            table[i * k + j] = position(members, plus(x, y))
                .ok_or(DecompError::VerificationFailed { check: "closure_plus" })?
                as u8;
        }
    }
    let factor = Groupoid::new(carrier, Involution::new(image).unwrap(), table)
        .map_err(|_| DecompError::VerificationFailed { check: "carrier" })?;
    if !factor.validate().passed() || !check_orthogroupoid(&factor).passes() {
        return Err(DecompError::VerificationFailed { check: "factor_orthogroupoid" });
    }
    Ok(factor)
}

/// The algebra on {x : x+e = e = e+x} with the original sum, complement
/// x ↦ e·x', and top e.
pub fn interval_algebra(ch: &ChurchGroupoid, e: usize) -> Result<Groupoid, DecompError> {
    if !ch.is_central_equational(e).central {
        return Err(DecompError::NotCentral { element: e });
    }
    let g = ch.groupoid();
    let members = interval_members(g, e);
    build_factor(
        g,
        &members,
        e,
        |x, y| g.plus(x, y),
        |x| ch.dot(e, g.prime(x)),
    )
}

/// The algebra on the image of b ↦ e∧b, every operation applied and then
/// cut back down by e. Coincides with [`interval_algebra`] at central e.
pub fn relative_algebra(ch: &ChurchGroupoid, e: usize) -> Result<Groupoid, DecompError> {
    if !ch.is_central_equational(e).central {
        return Err(DecompError::NotCentral { element: e });
    }
    let g = ch.groupoid();
    let mut members: Vec<usize> = (0..g.size()).map(|b| ch.meet(e, b)).collect();
    members.sort_unstable();
    members.dedup();
    build_factor(
        g,
        &members,
        ch.meet(e, g.top()),
        |x, y| ch.meet(e, g.plus(x, y)),
        |x| ch.meet(e, g.prime(x)),
    )
}

fn decompose_along(ch: &ChurchGroupoid, at: Vec<usize>) -> Result<Decomposition, DecompError> {
    let g = ch.groupoid();
    let mut factors = Vec::with_capacity(at.len());
    let mut member_lists = Vec::with_capacity(at.len());
    for &e in &at {
        factors.push(interval_algebra(ch, e)?);
        member_lists.push(interval_members(g, e));
    }
    let mut map = Vec::with_capacity(g.size());
    for b in 0..g.size() {
        let mut components = Vec::with_capacity(at.len());
        for (k, &e) in at.iter().enumerate() {
            let c = ch.meet(e, b);
            components.push(
                position(&member_lists[k], c)
                    .ok_or(DecompError::VerificationFailed { check: "projection_in_interval" })?,
            );
        }
        map.push(components);
    }
    let d = Decomposition { at, factors, map };
    if !verify_decomposition(g, &d).passed() {
        return Err(DecompError::VerificationFailed { check: "isomorphism" });
    }
    Ok(d)
}

/// Splits at a central element and its complement.
pub fn binary_decompose(ch: &ChurchGroupoid, e: usize) -> Result<Decomposition, DecompError> {
    if !ch.is_central_equational(e).central {
        return Err(DecompError::NotCentral { element: e });
    }
    let ep = ch.groupoid().prime(e);
    decompose_along(ch, vec![e, ep])
}

/// Splits at every atom of the center: the finest direct decomposition.
/// A trivial algebra has no atoms and no factors; a directly
/// indecomposable one comes back as the single factor at the top.
pub fn full_decompose(ch: &ChurchGroupoid) -> Result<Decomposition, DecompError> {
    let center = ch.center().map_err(DecompError::Center)?;
    decompose_along(ch, center.atoms())
}

/// Confirms that `d.map` is an isomorphism from `g` onto the direct
/// product of `d.factors`.
pub fn verify_decomposition(g: &Groupoid, d: &Decomposition) -> CheckReport {
    let n = g.size();
    let mut report = CheckReport::new();

    let mut factors_ok = CheckOutcome::pass();
    for (k, factor) in d.factors.iter().enumerate() {
        if !factor.validate().passed() || !check_orthogroupoid(factor).passes() {
            factors_ok = CheckOutcome::fail(Witness::new(&[("e", d.at[k])]));
            break;
        }
    }
    report.push(factors_ok.named("factors_are_orthogroupoids"));

    let mut bijective = CheckOutcome::pass();
    let product_size: usize = d.factors.iter().map(|f| f.size()).product();
    if product_size != n || d.map.len() != n {
        bijective = CheckOutcome::fail(Witness::new(&[("x", g.top())]));
    } else {
        'outer: for x in 0..n {
            for y in x + 1..n {
                if d.map[x] == d.map[y] {
                    bijective = CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)]));
                    break 'outer;
                }
            }
        }
    }
    report.push(bijective.named("map_bijective"));

    let mut plus_ok = CheckOutcome::pass();
    'plus: for x in 0..n {
        for y in 0..n {
            let s = g.plus(x, y);
            for (k, factor) in d.factors.iter().enumerate() {
                if d.map[s][k] != factor.plus(d.map[x][k], d.map[y][k]) {
                    plus_ok = CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)]));
                    break 'plus;
                }
            }
        }
    }
    report.push(plus_ok.named("map_preserves_plus"));

    let mut prime_ok = CheckOutcome::pass();
    'prime: for x in 0..n {
        let p = g.prime(x);
        for (k, factor) in d.factors.iter().enumerate() {
            if d.map[p][k] != factor.prime(d.map[x][k]) {
                prime_ok = CheckOutcome::fail(Witness::new(&[("x", x)]));
                break 'prime;
            }
        }
    }
    report.push(prime_ok.named("map_preserves_prime"));

    let top_ok = d
        .factors
        .iter()
        .enumerate()
        .all(|(k, factor)| d.map[g.top()][k] == factor.top());
    report.push(
        if top_ok { CheckOutcome::pass() } else { CheckOutcome::fail(Witness::new(&[("x", g.top())])) }
            .named("map_preserves_top"),
    );

    report
}

fn tuple_name(factors: &[Groupoid], components: &[usize]) -> String {
    let mut s = String::from("(");
    for (k, &c) in components.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(factors[k].name(c));
    }
    s.push(')');
    s
}

/// Componentwise product. Elements are named by their tuples, except the
/// top, which is renamed "1". An empty product is the trivial algebra.
pub fn direct_product(factors: &[Groupoid]) -> Result<Groupoid, DecompError> {
    let total: usize = factors.iter().map(|f| f.size()).product();
    if total > MAX_ELEMENTS {
        return Err(DecompError::TooLarge { size: total });
    }
    if factors.is_empty() {
        let carrier = Carrier::from_names(&["1"]).unwrap();
        return Ok(Groupoid::new(carrier, Involution::new(vec![0]).unwrap(), vec![0]).unwrap());
    }
    let k = factors.len();
    let decode = |mut idx: usize| {
        let mut components = vec![0usize; k];
        for i in (0..k).rev() {
            components[i] = idx % factors[i].size();
            idx /= factors[i].size();
        }
        components
    };
    let encode = |components: &[usize]| {
        components
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &c)| acc * factors[i].size() + c)
    };
    let mut names = Vec::with_capacity(total);
    let mut image = vec![0usize; total];
    let mut table = vec![0u8; total * total];
    let mut top = 0;
    for idx in 0..total {
        let components = decode(idx);
        names.push(tuple_name(factors, &components));
        if components.iter().enumerate().all(|(i, &c)| c == factors[i].top()) {
            top = idx;
        }
        let primed: Vec<usize> =
            components.iter().enumerate().map(|(i, &c)| factors[i].prime(c)).collect();
        image[idx] = encode(&primed);
        for jdx in 0..total {
            let other = decode(jdx);
            let sum: Vec<usize> = components
                .iter()
                .zip(&other)
                .enumerate()
                .map(|(i, (&a, &b))| factors[i].plus(a, b))
                .collect();
            table[idx * total + jdx] = encode(&sum) as u8;
        }
    }
    let carrier = Carrier::with_top(names, top)
        .map_err(|_| DecompError::VerificationFailed { check: "carrier" })?;
    let product = Groupoid::new(carrier, Involution::new(image).unwrap(), table)
        .map_err(|_| DecompError::VerificationFailed { check: "carrier" })?;
    if !product.validate().passed() || !check_orthogroupoid(&product).passes() {
        return Err(DecompError::VerificationFailed { check: "product_orthogroupoid" });
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::canonical_form;
    use crate::testutil::{b2, b2xb2};

    #[test]
    fn interval_below_an_atom_is_the_two_element_algebra() {
        let g = b2xb2();
        let ch = ChurchGroupoid::new(&g).unwrap();
        let interval = interval_algebra(&ch, 1).unwrap();
        assert_eq!(interval, b2());
    }

    #[test]
    fn relative_and_interval_constructions_coincide() {
        let g = b2xb2();
        let ch = ChurchGroupoid::new(&g).unwrap();
        for e in 0..g.size() {
            assert_eq!(relative_algebra(&ch, e).unwrap(), interval_algebra(&ch, e).unwrap());
        }
    }

    #[test]
    fn binary_split_of_the_direct_square() {
        let g = b2xb2();
        let ch = ChurchGroupoid::new(&g).unwrap();
        let d = binary_decompose(&ch, 1).unwrap();
        assert_eq!(d.at, vec![1, 2]);
        assert_eq!(d.map, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(verify_decomposition(&g, &d).passed());
    }

    #[test]
    fn full_decomposition_by_atoms() {
        let g = b2xb2();
        let ch = ChurchGroupoid::new(&g).unwrap();
        let d = full_decompose(&ch).unwrap();
        assert_eq!(d.at, vec![1, 2]);
        assert_eq!(d.factors.len(), 2);
        for f in &d.factors {
            assert_eq!(canonical_form(f), canonical_form(&b2()));
        }
    }

    #[test]
    fn indecomposable_algebra_is_its_own_factor() {
        let g = b2();
        let ch = ChurchGroupoid::new(&g).unwrap();
        let d = full_decompose(&ch).unwrap();
        assert_eq!(d.at, vec![1]);
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0], g);
        assert_eq!(d.map, vec![vec![0], vec![1]]);
    }

    #[test]
    fn trivial_algebra_has_no_factors() {
        let trivial = direct_product(&[]).unwrap();
        assert_eq!(trivial.size(), 1);
        assert_eq!(trivial.name(0), "1");
        let ch = ChurchGroupoid::new(&trivial).unwrap();
        let d = full_decompose(&ch).unwrap();
        assert!(d.factors.is_empty());
        assert_eq!(d.map, vec![Vec::<usize>::new()]);
        assert!(verify_decomposition(&trivial, &d).passed());
    }

    #[test]
    fn product_of_two_pairs_matches_the_square() {
        let p = direct_product(&[b2(), b2()]).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.name(0), "(0,0)");
        assert_eq!(p.name(p.top()), "1");
        assert_eq!(canonical_form(&p), canonical_form(&b2xb2()));
    }

    #[test]
    fn decompose_then_multiply_recovers_the_original() {
        let g = b2xb2();
        let ch = ChurchGroupoid::new(&g).unwrap();
        let d = full_decompose(&ch).unwrap();
        let rebuilt = direct_product(&d.factors).unwrap();
        assert_eq!(canonical_form(&rebuilt), canonical_form(&g));
    }

    #[test]
    fn oversized_products_are_rejected() {
        let factors = vec![b2(); 7];
        assert!(matches!(direct_product(&factors), Err(DecompError::TooLarge { size: 128 })));
    }

    #[test]
    fn cube_of_pairs_is_an_orthogroupoid() {
        let p = direct_product(&[b2(), b2(), b2()]).unwrap();
        assert_eq!(p.size(), 8);
        assert!(check_orthogroupoid(&p).passes());
        let ch = ChurchGroupoid::new(&p).unwrap();
        let d = full_decompose(&ch).unwrap();
        assert_eq!(d.factors.len(), 3);
    }
}
