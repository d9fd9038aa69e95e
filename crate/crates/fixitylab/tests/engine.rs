//! Engine checks against independent brute-force oracles.

mod common;

use fixitylab::fixity::{fixity_profile, is_frobenius_action, ActionInstance};
use fixitylab::group::{Group, Subgroup};
use fixitylab::perm::Perm;
use fixitylab::structure::NamedGroupTag;

fn perm(text: &str, degree: u32) -> Perm {
    Perm::parse_cycles(text, degree).unwrap()
}

fn group(gens: &[&str], degree: u32) -> Group {
    Group::new(gens.iter().map(|s| perm(s, degree)).collect(), degree).unwrap()
}

fn witness() -> Group {
    group(&["(1,2,3)", "(2,5,3,6)(1,4)"], 6)
}

#[test]
fn chain_order_matches_closure_on_fixtures() {
    let fixtures: Vec<(&[&str], u32)> = vec![
        (&["(1,2,3)", "(2,5,3,6)(1,4)"], 6),
        (&["(1,2,3,4)", "(1,3)"], 4),
        (&["(1,2,3,4)", "(1,2)"], 4),
        (&["(1,2,3,4,5)", "(1,2,3)"], 5),
        (&["(1,2,3)", "(4,5,6)"], 6),
        (&["(1,2)(3,4)", "(1,3)(2,4)"], 4),
        (&["(1,2,3,4,5,6)"], 6),
    ];
    for (gens, degree) in fixtures {
        let g = group(gens, degree);
        let elems = common::closure(g.generators(), degree);
        assert_eq!(g.order(), elems.len() as u128, "order of {gens:?}");
        let mut lib_elems = g.elements().unwrap().to_vec();
        lib_elems.sort();
        assert_eq!(lib_elems, elems, "element sets of {gens:?}");
        for e in &elems {
            assert!(g.contains(e));
        }
    }
}

#[test]
fn witness_order_is_thirty_six_by_closure() {
    assert_eq!(common::closure(witness().generators(), 6).len(), 36);
}

#[test]
fn orbits_match_brute_sweep() {
    let n = group(&["(1,2,3)", "(4,5,6)"], 6);
    let elems = common::closure(n.generators(), 6);
    assert_eq!(elems.len(), 9);
    assert_eq!(n.orbits(), common::brute_orbits(&elems, 6));
}

#[test]
fn profile_matches_brute_profile_on_witness() {
    let w = witness();
    let elems = common::closure(w.generators(), 6);
    let domain: Vec<u32> = (1..=6).collect();
    let (fixity, counts) = common::brute_profile(&elems, &domain);
    let profile = fixity_profile(&ActionInstance::natural(w)).unwrap();
    assert_eq!(profile.fixity, fixity);
    assert_eq!(profile.counts, counts);
    assert_eq!(fixity, 3);
}

#[test]
fn normal_lattice_matches_brute_scan() {
    // brute scan is the oracle for groups of order <= 2000
    let fixtures: Vec<(&[&str], u32)> = vec![
        (&["(1,2,3)", "(2,5,3,6)(1,4)"], 6),
        (&["(1,2,3,4)", "(1,2)"], 4),
        (&["(1,2,3,4)", "(1,3)"], 4),
        (&["(1,2,3)", "(1,2)"], 3),
        (&["(1,2,3,4,5)", "(1,2,3)"], 5),
    ];
    for (gens, degree) in fixtures {
        let g = group(gens, degree);
        let elems = common::closure(g.generators(), degree);
        let brute = common::brute_normal_subgroups(&elems, degree);
        let lib = g.normal_subgroups().unwrap();
        assert_eq!(lib.len(), brute.len(), "normal subgroup count of {gens:?}");
        for n in &lib {
            let mut lib_elems = n.group().elements().unwrap().to_vec();
            lib_elems.sort();
            assert!(
                brute.contains(&lib_elems),
                "library normal subgroup missing from brute scan for {gens:?}"
            );
        }
    }
}

#[test]
fn derived_series_terms_are_normal_and_descending() {
    for (gens, degree) in [
        (vec!["(1,2,3,4)", "(1,2)"], 4u32),
        (vec!["(1,2,3)", "(2,5,3,6)(1,4)"], 6),
        (vec!["(1,2,3,4,5)", "(1,2,3)"], 5),
    ] {
        let g = group(&gens, degree);
        let series = g.derived_series();
        for window in series.windows(2) {
            let term = Subgroup::new(&g, window[1].generators().to_vec()).unwrap();
            assert!(term.is_normal(), "derived term not normal in the group");
            let prev = &window[0];
            assert!(
                term.generators().iter().all(|x| prev.contains(x)),
                "derived term escapes the previous term"
            );
            assert!(window[1].order() <= window[0].order());
        }
    }
}

#[test]
fn sym4_minimal_normal_is_the_klein_group() {
    let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
    let minimal = s4.minimal_normal_subgroups().unwrap();
    assert_eq!(minimal.len(), 1);
    assert_eq!(minimal[0].order(), 4);
    let klein =
        Subgroup::new(&s4, vec![perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)]).unwrap();
    assert!(minimal[0].subgroup_eq(&klein));
}

#[test]
fn frobenius_agrees_with_brute_definition() {
    let cases: Vec<(&[&str], u32, Vec<u32>)> = vec![
        (&["(1,2,3)", "(1,2)"], 3, vec![1, 2, 3]),
        (&["(1,2,3,4)"], 4, vec![1, 2, 3, 4]),
        (&["(1,2,3,4,5)", "(2,3,5,4)"], 5, vec![1, 2, 3, 4, 5]),
        (&["(1,2,3)", "(4,5,6)"], 6, vec![1, 2, 3]),
        (&["(1,2,3)(4,5,6)", "(2,3)(5,6)"], 6, vec![1, 2, 3]),
    ];
    for (gens, degree, domain) in cases {
        let g = group(gens, degree);
        let elems = common::closure(g.generators(), degree);
        let a = ActionInstance::new(g, domain.clone()).unwrap();
        assert_eq!(
            is_frobenius_action(&a),
            common::brute_is_frobenius(&elems, &domain),
            "frobenius disagreement on {gens:?} over {domain:?}"
        );
    }
}

#[test]
fn f20_is_frobenius_on_five_points() {
    // the affine group of the 5-element line: sharply 2-transitive
    let f20 = group(&["(1,2,3,4,5)", "(2,3,5,4)"], 5);
    assert_eq!(f20.order(), 20);
    assert!(is_frobenius_action(&ActionInstance::natural(f20)));
}

#[test]
fn quotient_kernel_sizes_multiply() {
    let w = witness();
    let n = Subgroup::new(&w, vec![perm("(1,2,3)", 6), perm("(4,5,6)", 6)]).unwrap();
    let q = w.quotient_action(&n).unwrap();
    assert_eq!(q.image().order() * q.kernel().order(), w.order());
    // the kernel of the two-block action is the index-2 subgroup
    assert_eq!(q.kernel().order(), 18);
}

#[test]
fn fingerprints_separate_census_groups_at_shared_orders() {
    // regular S3 on 6 points is abstractly SYM3; C6 is not
    let s3_regular = {
        let s3 = group(&["(1,2,3)", "(1,2)"], 3);
        let triv = Subgroup::new(&s3, vec![]).unwrap();
        s3.coset_action(&triv).unwrap()
    };
    assert!(s3_regular.matches_named_group(NamedGroupTag::Sym3).unwrap());
    let c6 = group(&["(1,2,3,4,5,6)"], 6);
    assert!(!c6.matches_named_group(NamedGroupTag::Sym3).unwrap());
    // order-12 groups: only ALT4 matches the ALT4 fingerprint
    let a4 = group(&["(1,2,3)", "(2,3,4)"], 4);
    assert!(a4.matches_named_group(NamedGroupTag::Alt4).unwrap());
    let d12 = group(&["(1,2,3,4,5,6)", "(2,6)(3,5)"], 6);
    assert_eq!(d12.order(), 12);
    assert!(!d12.matches_named_group(NamedGroupTag::Alt4).unwrap());
    let c12 = group(&["(1,2,3,4)(5,6,7)"], 7);
    assert_eq!(c12.order(), 12);
    assert!(!c12.matches_named_group(NamedGroupTag::Alt4).unwrap());
}

#[test]
fn transposition_images_in_s4_on_six_fix_one_or_three_klein_blocks() {
    use fixitylab::fixity::fixed_blocks;
    let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
    let c4 = Subgroup::new(&s4, vec![perm("(1,2,3,4)", 4)]).unwrap();
    let on6 = s4.coset_action(&c4).unwrap();
    let klein = on6.minimal_normal_subgroups().unwrap().remove(0);
    assert_eq!(klein.order(), 4);
    let q = on6.quotient_action(&klein).unwrap();
    assert_eq!(q.block_count(), 3);
    let a = ActionInstance::natural(on6.clone());
    let mut profile = std::collections::BTreeMap::new();
    for e in on6.elements().unwrap() {
        if e.is_identity() || a.count_fixed(e) != 2 {
            continue;
        }
        let fixed = fixed_blocks(&q, e).unwrap().len();
        assert!(fixed == 1 || fixed == 3, "element fixes {fixed} blocks");
        *profile.entry(fixed).or_insert(0u32) += 1;
    }
    assert!(!profile.is_empty());
}

#[test]
fn stabilizer_chain_membership_agrees_with_closure_membership() {
    let g = group(&["(1,2,3,4,5)", "(2,3,5,4)"], 5);
    let elems = common::closure(g.generators(), 5);
    let all = common::closure(&[perm("(1,2)", 5), perm("(1,2,3,4,5)", 5)], 5);
    for e in &all {
        assert_eq!(g.contains(e), elems.contains(e));
    }
}
