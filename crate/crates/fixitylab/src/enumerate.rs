//! Exhaustive enumeration of the subgroup classes of small symmetric groups
//! by the cyclic extension method.
//!
//! Starting from the trivial group, the prime-order cyclic subgroups (one per
//! cycle type) and the perfect subgroups, every subgroup class is reached by
//! repeatedly adjoining a normalizer element whose coset has prime order:
//! any subgroup refines to its perfect residual through a chain of normal
//! subgroups of prime index, so closing the seed set under prime cyclic
//! extension visits every class. Deduplication is up to conjugacy in the
//! full symmetric group, so transitive classes match the usual census
//! convention (actions up to relabeling of the domain).
//!
//! Everything is deterministic: elements are swept in lexicographic order and
//! classes are processed in discovery order.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::datagen::perfect_seed_groups;
use crate::group::Group;
use crate::perm::{Perm, Point};

/// Packs a permutation of degree <= 16 into 4-bit lanes of a u64.
fn pack(p: &Perm) -> u64 {
    let mut out = 0u64;
    for (i, &v) in p.images().iter().enumerate() {
        out |= u64::from(v - 1) << (4 * i);
    }
    out
}

/// Packs the conjugate `s^-1 g s` without allocating.
fn conj_pack(g: &Perm, s: &Perm) -> u64 {
    let gi = g.images();
    let si = s.images();
    let mut out = 0u64;
    for (i, &gv) in gi.iter().enumerate() {
        let from = u64::from(si[i] - 1);
        let to = u64::from(si[(gv - 1) as usize] - 1);
        out |= to << (4 * from);
    }
    out
}

/// Packs the product `e * s` (apply `e`, then `s`) of a packed element and a
/// permutation.
fn compose_pack(e: u64, s: &Perm, degree: u32) -> u64 {
    let si = s.images();
    let mut out = 0u64;
    for i in 0..degree as usize {
        let img = ((e >> (4 * i)) & 0xF) as usize;
        out |= u64::from(si[img] - 1) << (4 * i);
    }
    out
}

/// Cycle type of a packed permutation: sorted lengths of nontrivial cycles.
fn cycle_type_packed(e: u64, degree: u32) -> Vec<u16> {
    let mut seen = 0u32;
    let mut lengths = Vec::new();
    for start in 0..degree {
        if seen & (1 << start) != 0 {
            continue;
        }
        seen |= 1 << start;
        let mut len = 1u16;
        let mut p = ((e >> (4 * start)) & 0xF) as u32;
        while p != start {
            seen |= 1 << p;
            len += 1;
            p = ((e >> (4 * p)) & 0xF) as u32;
        }
        if len > 1 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    lengths
}

/// All elements of `Sym(degree)` in lexicographic image order.
fn symmetric_elements(degree: u32) -> Vec<Perm> {
    let mut images: Vec<Point> = (1..=degree).collect();
    let mut out = vec![Perm::from_images(images.clone()).unwrap()];
    // lexicographic next-permutation sweep
    loop {
        let n = images.len();
        let Some(i) = (0..n - 1).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
        out.push(Perm::from_images(images.clone()).unwrap());
    }
    out
}

/// Cheap conjugation invariant of a subgroup: order, sorted orbit sizes, and
/// the histogram of element cycle types.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ClassKey {
    order: u64,
    orbit_sizes: Vec<u32>,
    cycle_types: Vec<(Vec<u16>, u32)>,
}

struct ClassRec {
    group: Group,
}

struct Lattice {
    degree: u32,
    sym: Vec<Perm>,
    classes: Vec<ClassRec>,
    by_key: HashMap<ClassKey, Vec<usize>>,
    queue: VecDeque<usize>,
}

impl Lattice {
    fn class_key(&self, group: &Group, elements: &[u64]) -> ClassKey {
        let mut hist: HashMap<Vec<u16>, u32> = HashMap::new();
        for &e in elements {
            *hist.entry(cycle_type_packed(e, self.degree)).or_insert(0) += 1;
        }
        let mut cycle_types: Vec<(Vec<u16>, u32)> = hist.into_iter().collect();
        cycle_types.sort();
        let mut orbit_sizes: Vec<u32> = group.orbits().iter().map(|o| o.len() as u32).collect();
        orbit_sizes.sort_unstable();
        ClassKey {
            order: group.order() as u64,
            orbit_sizes,
            cycle_types,
        }
    }

    fn packed_elements(&self, group: &Group) -> Vec<u64> {
        let mut v: Vec<u64> = group.chain_elements().iter().map(pack).collect();
        v.sort_unstable();
        v
    }

    /// Adds a subgroup if its class is new; returns true when new.
    fn try_add(&mut self, group: Group) -> bool {
        let elements = self.packed_elements(&group);
        let key = self.class_key(&group, &elements);
        if let Some(bucket) = self.by_key.get(&key) {
            for &idx in bucket {
                if self.conjugate_to_class(&group, idx) {
                    return false;
                }
            }
        }
        let idx = self.classes.len();
        self.classes.push(ClassRec { group });
        self.by_key.entry(key).or_default().push(idx);
        self.queue.push_back(idx);
        true
    }

    /// Whether `group` is conjugate in the symmetric group to class `idx`.
    /// Sweeps conjugators in lexicographic order; membership goes through the
    /// class representative's stabilizer chain.
    fn conjugate_to_class(&self, group: &Group, idx: usize) -> bool {
        let known = &self.classes[idx].group;
        if known.order() != group.order() {
            return false;
        }
        let gens = group.generators();
        'outer: for s in &self.sym {
            for g in gens {
                let conj = g.conjugate_by(s);
                if !known.contains(&conj) {
                    continue 'outer;
                }
            }
            return true;
        }
        false
    }

    fn process(&mut self, idx: usize) {
        let group = self.classes[idx].group.clone();
        let order = group.order();
        if order == 1 || order == factorial(self.degree) {
            // extensions of the trivial group are the seeded prime cyclics;
            // the full symmetric group has nothing to extend into
            return;
        }
        let elements = self.packed_elements(&group);
        let member = |e: u64| elements.binary_search(&e).is_ok();

        // normalizer sweep in lexicographic order
        let mut normalizer: Vec<&Perm> = Vec::new();
        'sweep: for s in &self.sym {
            for g in group.generators() {
                if !member(conj_pack(g, s)) {
                    continue 'sweep;
                }
            }
            normalizer.push(s);
        }

        // one extension candidate per coset of the subgroup in its normalizer
        let mut covered: HashSet<u64> = elements.iter().copied().collect();
        let mut extensions: Vec<Group> = Vec::new();
        for s in normalizer {
            let ps = pack(s);
            if covered.contains(&ps) {
                continue;
            }
            for &e in &elements {
                covered.insert(compose_pack(e, s, self.degree));
            }
            // order of the coset in N(H)/H
            let mut power = ps;
            let mut coset_order = 1u32;
            while !member(power) {
                power = compose_pack(power, s, self.degree);
                coset_order += 1;
            }
            if !is_prime(coset_order) {
                continue;
            }
            let mut gens = group.generators().to_vec();
            gens.push(s.clone());
            let extended = Group::new(gens, self.degree).expect("same degree");
            debug_assert_eq!(extended.order(), order * u128::from(coset_order));
            extensions.push(extended);
        }
        for extended in extensions {
            self.try_add(extended);
        }
    }
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// One representative per conjugacy class of prime-order cyclic subgroups:
/// classes correspond exactly to cycle types `(p^c, 1^(n-pc))`.
fn prime_cyclic_seeds(degree: u32) -> Vec<Group> {
    let mut seeds = Vec::new();
    for p in [2u32, 3, 5, 7, 11, 13] {
        if p > degree {
            break;
        }
        for c in 1..=(degree / p) {
            let mut images: Vec<Point> = (1..=degree).collect();
            for cy in 0..c {
                for k in 0..p {
                    images[(cy * p + k) as usize] = cy * p + (k + 1) % p + 1;
                }
            }
            let perm = Perm::from_images(images).unwrap();
            seeds.push(Group::new(vec![perm], degree).expect("cyclic seed"));
        }
    }
    seeds
}

/// All conjugacy classes of subgroups of `Sym(degree)`, as deterministic
/// representatives. Practical for `degree <= 10`.
pub fn subgroup_classes(degree: u32) -> Vec<Group> {
    assert!(
        (2..=10).contains(&degree),
        "lattice enumeration supports degrees 2..=10"
    );
    let mut lattice = Lattice {
        degree,
        sym: symmetric_elements(degree),
        classes: Vec::new(),
        by_key: HashMap::new(),
        queue: VecDeque::new(),
    };
    lattice.try_add(Group::trivial(degree));
    for seed in prime_cyclic_seeds(degree) {
        lattice.try_add(seed);
    }
    if degree >= 5 {
        for seed in perfect_seed_groups(degree) {
            lattice.try_add(seed);
        }
    }
    while let Some(idx) = lattice.queue.pop_front() {
        lattice.process(idx);
    }
    lattice.classes.into_iter().map(|c| c.group).collect()
}

/// The transitive subgroup classes of `Sym(degree)`, sorted by (order,
/// element list) so record identifiers are reproducible.
pub fn transitive_classes(degree: u32) -> Vec<Group> {
    let mut transitive: Vec<Group> = subgroup_classes(degree)
        .into_iter()
        .filter(|g| g.is_transitive())
        .collect();
    let mut keyed: Vec<(u128, Vec<u64>, Group)> = transitive
        .drain(..)
        .map(|g| {
            let mut elems: Vec<u64> = g.chain_elements().iter().map(pack).collect();
            elems.sort_unstable();
            (g.order(), elems, g)
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.into_iter().map(|(_, _, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_roundtrip_properties() {
        let p = Perm::parse_cycles("(1,5,3)(2,8)", 8).unwrap();
        let q = Perm::parse_cycles("(1,2,3,4,5,6,7,8)", 8).unwrap();
        assert_eq!(conj_pack(&p, &q), pack(&p.conjugate_by(&q)));
        assert_eq!(compose_pack(pack(&p), &q, 8), pack(&p.compose(&q)));
        assert_eq!(cycle_type_packed(pack(&p), 8), vec![2, 3]);
    }

    #[test]
    fn symmetric_elements_are_lexicographic_and_complete() {
        let s4 = symmetric_elements(4);
        assert_eq!(s4.len(), 24);
        assert!(s4.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn transitive_counts_at_tiny_degrees() {
        assert_eq!(transitive_classes(2).len(), 1);
        assert_eq!(transitive_classes(3).len(), 2);
        assert_eq!(transitive_classes(4).len(), 5);
        assert_eq!(transitive_classes(5).len(), 5);
    }

    #[test]
    fn subgroup_class_counts_at_tiny_degrees() {
        // classical values for the full subgroup lattices
        assert_eq!(subgroup_classes(2).len(), 2);
        assert_eq!(subgroup_classes(3).len(), 4);
        assert_eq!(subgroup_classes(4).len(), 11);
        assert_eq!(subgroup_classes(5).len(), 19);
    }
}
