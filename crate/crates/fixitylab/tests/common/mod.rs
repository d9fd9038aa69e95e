//! Independent oracles: brute-force implementations that share no code with
//! the library paths they check.
#![allow(dead_code)] // each test binary uses its own subset

use std::collections::{BTreeMap, HashSet};

use fixitylab::perm::{Perm, Point};

/// Brute-force closure of a generator set: repeated multiplication until no
/// new elements appear. Independent of the stabilizer chain.
pub fn closure(gens: &[Perm], degree: u32) -> Vec<Perm> {
    let mut set: HashSet<Perm> = HashSet::new();
    set.insert(Perm::identity(degree));
    let mut frontier: Vec<Perm> = vec![Perm::identity(degree)];
    while let Some(e) = frontier.pop() {
        for g in gens {
            let next = e.compose(g);
            if set.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Perm> = set.into_iter().collect();
    out.sort();
    out
}

/// Fixed-point profile by sweeping every nonidentity element.
pub fn brute_profile(elements: &[Perm], domain: &[Point]) -> (u32, BTreeMap<u32, u64>) {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    let mut fixity = 0;
    for e in elements {
        if e.is_identity() {
            continue;
        }
        let fixed = domain.iter().filter(|&&p| e.apply(p) == p).count() as u32;
        *counts.entry(fixed).or_insert(0) += 1;
        fixity = fixity.max(fixed);
    }
    (fixity, counts)
}

/// Orbit partition by element sweep rather than generator BFS.
pub fn brute_orbits(elements: &[Perm], degree: u32) -> Vec<Vec<Point>> {
    let mut assigned = vec![false; degree as usize];
    let mut orbits = Vec::new();
    for p in 1..=degree {
        if assigned[(p - 1) as usize] {
            continue;
        }
        let mut orbit: Vec<Point> = elements.iter().map(|e| e.apply(p)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &q in &orbit {
            assigned[(q - 1) as usize] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

/// All normal subgroups as element sets, by closing the normal closures of
/// single elements under pairwise join. Pure element arithmetic.
pub fn brute_normal_subgroups(elements: &[Perm], degree: u32) -> Vec<Vec<Perm>> {
    let element_set: HashSet<&Perm> = elements.iter().collect();
    let mut found: Vec<Vec<Perm>> = Vec::new();
    let push_unique = |candidate: Vec<Perm>, found: &mut Vec<Vec<Perm>>| {
        if !found.iter().any(|f| f == &candidate) {
            found.push(candidate);
        }
    };
    for seed in elements {
        // conjugation closure of the cyclic subgroup, then group closure
        let mut gens: Vec<Perm> = vec![seed.clone()];
        for e in elements {
            let c = seed.conjugate_by(e);
            if !gens.contains(&c) {
                gens.push(c);
            }
        }
        let sub = closure(&gens, degree);
        debug_assert!(sub.iter().all(|x| element_set.contains(x)));
        push_unique(sub, &mut found);
    }
    loop {
        let mut added = false;
        let len = found.len();
        for i in 0..len {
            for j in (i + 1)..len {
                let mut gens = found[i].clone();
                gens.extend(found[j].iter().cloned());
                let join = closure(&gens, degree);
                if !found.iter().any(|f| f == &join) {
                    found.push(join);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    found.sort_by_key(|f| (f.len(), f.first().cloned()));
    found
}

/// Frobenius recognition by the definition, evaluated on the induced image:
/// the distinct restrictions to the domain form a transitive group with
/// nontrivial point stabilizers in which no nonidentity element fixes two
/// points.
pub fn brute_is_frobenius(elements: &[Perm], domain: &[Point]) -> bool {
    let orbit_of_first: HashSet<Point> = elements.iter().map(|e| e.apply(domain[0])).collect();
    if orbit_of_first.len() != domain.len() {
        return false;
    }
    // image on the domain: distinct restrictions of the elements
    let restrictions: HashSet<Vec<Point>> = elements
        .iter()
        .map(|e| domain.iter().map(|&p| e.apply(p)).collect())
        .collect();
    let id_restriction: Vec<Point> = domain.to_vec();
    let fixed_of = |r: &Vec<Point>| -> usize {
        domain
            .iter()
            .enumerate()
            .filter(|&(i, &p)| r[i] == p)
            .count()
    };
    let stabilizer_nontrivial = restrictions
        .iter()
        .filter(|r| **r != id_restriction)
        .any(|r| fixed_of(r) >= 1);
    stabilizer_nontrivial
        && restrictions
            .iter()
            .filter(|r| **r != id_restriction)
            .all(|r| fixed_of(r) <= 1)
}
