//! Element-level structure: conjugacy classes, the normal subgroup lattice,
//! centers, centralizers, normalizers, and small-group fingerprints.
//!
//! Everything here enumerates elements and is gated by
//! [`ENUMERATION_BOUND`](crate::group::ENUMERATION_BOUND); the census lives
//! far below the bound.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::str::FromStr;
use std::sync::LazyLock;

use serde::Serialize;

use crate::group::{span_gens, Group, GroupError, Subgroup, ENUMERATION_BOUND};
use crate::perm::Perm;

/// Conjugacy classes of a group: pairwise non-conjugate representatives with
/// class sizes. Representatives are the lexicographically least members.
#[derive(Clone, Debug)]
pub struct ConjugacyClassTable {
    representatives: Vec<Perm>,
    sizes: Vec<u64>,
}

impl ConjugacyClassTable {
    pub fn representatives(&self) -> &[Perm] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Perm, u64)> {
        self.representatives.iter().zip(self.sizes.iter().copied())
    }
}

impl Group {
    /// Exact conjugacy class table; deterministic ordering by least member.
    pub fn conjugacy_classes(&self) -> Result<&ConjugacyClassTable, GroupError> {
        self.elements()?;
        if let Some(t) = self.classes_cache().get() {
            return Ok(t);
        }
        let table = compute_classes(self);
        Ok(self.classes_cache().get_or_init(|| table))
    }

    /// The subgroup of elements commuting with every group element.
    pub fn center(&self) -> Result<Subgroup, GroupError> {
        let elems = self.elements()?;
        let members: Vec<Perm> = elems
            .iter()
            .filter(|z| self.generators().iter().all(|g| commutes(z, g)))
            .cloned()
            .collect();
        Ok(Subgroup::attach(
            self.clone(),
            span_gens(self.degree(), &sorted(members)),
        ))
    }

    /// The centralizer of a member element.
    pub fn centralizer(&self, x: &Perm) -> Result<Subgroup, GroupError> {
        if !self.contains(x) {
            return Err(GroupError::NotAMember);
        }
        let elems = self.elements()?;
        let members: Vec<Perm> = elems.iter().filter(|g| commutes(g, x)).cloned().collect();
        Ok(Subgroup::attach(
            self.clone(),
            span_gens(self.degree(), &sorted(members)),
        ))
    }

    /// The normalizer of a subgroup whose generators lie in this group.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup, GroupError> {
        for g in h.generators() {
            if !self.contains(g) {
                return Err(GroupError::NotAMember);
            }
        }
        let elems = self.elements()?;
        let members: Vec<Perm> = elems
            .iter()
            .filter(|g| {
                h.generators()
                    .iter()
                    .all(|x| h.contains(&x.conjugate_by(g)))
            })
            .cloned()
            .collect();
        Ok(Subgroup::attach(
            self.clone(),
            span_gens(self.degree(), &sorted(members)),
        ))
    }

    /// All normal subgroups: normal closures of single classes, closed under
    /// pairwise join. Sorted by (order, generator strings).
    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        let classes = self.conjugacy_classes()?.clone();
        let mut found: Vec<Subgroup> = Vec::new();
        let push_new = |cand: Subgroup, found: &mut Vec<Subgroup>| -> bool {
            if found.iter().any(|k| k.subgroup_eq(&cand)) {
                false
            } else {
                found.push(cand);
                true
            }
        };
        // trivial subgroup is always normal
        push_new(Subgroup::attach(self.clone(), Vec::new()), &mut found);
        for rep in classes.representatives() {
            let ncl = self.normal_closure(std::slice::from_ref(rep))?;
            push_new(ncl, &mut found);
        }
        // close under pairwise join; the join of normal subgroups is normal
        loop {
            let mut added = false;
            let len = found.len();
            for i in 0..len {
                for j in (i + 1)..len {
                    let mut gens = found[i].generators().to_vec();
                    gens.extend_from_slice(found[j].generators());
                    let join = Subgroup::attach(self.clone(), gens);
                    if found.iter().all(|k| !k.subgroup_eq(&join)) {
                        found.push(join);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        debug_assert!(found.iter().all(|n| n.is_normal()));
        found.sort_by(|a, b| {
            (a.order(), a.canonical_generator_strings())
                .cmp(&(b.order(), b.canonical_generator_strings()))
        });
        Ok(found)
    }

    /// Minimal nontrivial elements of the normal subgroup lattice.
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        let all = self.normal_subgroups()?;
        let nontrivial: Vec<&Subgroup> = all.iter().filter(|n| n.order() > 1).collect();
        let mut minimal = Vec::new();
        for n in &nontrivial {
            let has_smaller = nontrivial
                .iter()
                .any(|m| m.order() < n.order() && m.is_contained_in(n));
            if !has_smaller {
                minimal.push((*n).clone());
            }
        }
        Ok(minimal)
    }

    /// Isomorphism-invariant fingerprint used for named-group recognition.
    pub fn fingerprint(&self) -> Result<Fingerprint, GroupError> {
        let elems = self.elements()?;
        let order = self.order();
        if order > ENUMERATION_BOUND {
            return Err(GroupError::TooLarge { order });
        }
        let mut element_orders: BTreeMap<u64, u64> = BTreeMap::new();
        for e in elems {
            *element_orders.entry(e.order()).or_insert(0) += 1;
        }
        let series = self.derived_series();
        let derived_orders: Vec<u64> = series.iter().map(|g| g.order() as u64).collect();
        // Element orders of G/G', counted via coset orders: every coset is hit
        // |G'| times, so divide. A histogram of orders determines a finite
        // abelian group up to isomorphism.
        let derived = &series[1.min(series.len() - 1)];
        let mut ab_counts: BTreeMap<u64, u64> = BTreeMap::new();
        for e in elems {
            let mut power = e.clone();
            let mut m = 1u64;
            while !derived.contains(&power) {
                power = power.compose(e);
                m += 1;
            }
            *ab_counts.entry(m).or_insert(0) += 1;
        }
        let dsize = derived.order() as u64;
        let abelianization: Vec<(u64, u64)> = ab_counts
            .into_iter()
            .map(|(k, v)| {
                debug_assert_eq!(v % dsize, 0);
                (k, v / dsize)
            })
            .collect();
        Ok(Fingerprint {
            order: order as u64,
            element_orders: element_orders.into_iter().collect(),
            derived_orders,
            abelianization,
        })
    }

    /// Fingerprint-based recognition of the named small groups.
    pub fn matches_named_group(&self, tag: NamedGroupTag) -> Result<bool, GroupError> {
        if self.order() != tag.order() {
            return Ok(false);
        }
        Ok(self.fingerprint()? == *tag.canonical_fingerprint())
    }

    /// The action of this group on the right cosets of a subgroup, as a group
    /// on `{1..index}`. Coset points are numbered by first appearance over the
    /// lexicographically sorted element list. The action is faithful iff the
    /// subgroup is core-free.
    pub fn coset_action(&self, u: &Subgroup) -> Result<Group, GroupError> {
        let elems = sorted(self.elements()?.to_vec());
        let mut coset_of: HashMap<Perm, u32> = HashMap::new();
        let mut reps: Vec<Perm> = Vec::new();
        for e in &elems {
            if coset_of.contains_key(e) {
                continue;
            }
            let id = reps.len() as u32 + 1;
            reps.push(e.clone());
            // mark the whole right coset U*e
            for h in u.group().elements()? {
                coset_of.insert(h.compose(e), id);
            }
        }
        let index = reps.len() as u32;
        let mut images = Vec::new();
        for g in self.generators() {
            let mut img = Vec::with_capacity(index as usize);
            for r in &reps {
                img.push(coset_of[&r.compose(g)]);
            }
            images.push(Perm::from_images(img).expect("coset action is a permutation"));
        }
        Group::new(images, index)
    }
}

fn sorted(mut v: Vec<Perm>) -> Vec<Perm> {
    v.sort();
    v
}

fn commutes(a: &Perm, b: &Perm) -> bool {
    a.compose(b) == b.compose(a)
}

fn compute_classes(group: &Group) -> ConjugacyClassTable {
    let elems = sorted(group.elements().expect("bound checked").to_vec());
    let mut seen: HashSet<Perm> = HashSet::with_capacity(elems.len());
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for e in &elems {
        if seen.contains(e) {
            continue;
        }
        // BFS closure of the class under conjugation by the generators.
        let mut class = vec![e.clone()];
        seen.insert(e.clone());
        let mut head = 0;
        while head < class.len() {
            let x = class[head].clone();
            head += 1;
            for g in group.generators() {
                let y = x.conjugate_by(g);
                if seen.insert(y.clone()) {
                    class.push(y);
                }
            }
        }
        representatives.push(e.clone());
        sizes.push(class.len() as u64);
    }
    debug_assert_eq!(sizes.iter().sum::<u64>() as u128, group.order());
    ConjugacyClassTable {
        representatives,
        sizes,
    }
}

/// Order, element-order histogram, derived-series order sequence, and
/// abelianization order histogram. Equal fingerprints are the recognition
/// criterion for the named tags; this is not general isomorphism testing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: u64,
    pub element_orders: Vec<(u64, u64)>,
    pub derived_orders: Vec<u64>,
    pub abelianization: Vec<(u64, u64)>,
}

/// The five named groups the classifiers must recognize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroupTag {
    Alt4,
    Sym4,
    D8,
    C3xC3ColonC4,
    Sym3,
}

impl NamedGroupTag {
    pub const ALL: [NamedGroupTag; 5] = [
        NamedGroupTag::Alt4,
        NamedGroupTag::Sym4,
        NamedGroupTag::D8,
        NamedGroupTag::C3xC3ColonC4,
        NamedGroupTag::Sym3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGroupTag::Alt4 => "ALT4",
            NamedGroupTag::Sym4 => "SYM4",
            NamedGroupTag::D8 => "D8",
            NamedGroupTag::C3xC3ColonC4 => "C3xC3_colon_C4",
            NamedGroupTag::Sym3 => "SYM3",
        }
    }

    pub fn order(self) -> u128 {
        match self {
            NamedGroupTag::Alt4 => 12,
            NamedGroupTag::Sym4 => 24,
            NamedGroupTag::D8 => 8,
            NamedGroupTag::C3xC3ColonC4 => 36,
            NamedGroupTag::Sym3 => 6,
        }
    }

    /// A standard copy of the named group on its natural degree.
    pub fn standard_copy(self) -> Group {
        let build = |gens: &[&str], degree: u32| -> Group {
            Group::new(
                gens.iter()
                    .map(|s| Perm::parse_cycles(s, degree).unwrap())
                    .collect(),
                degree,
            )
            .unwrap()
        };
        match self {
            NamedGroupTag::Alt4 => build(&["(1,2,3)", "(2,3,4)"], 4),
            NamedGroupTag::Sym4 => build(&["(1,2,3,4)", "(1,2)"], 4),
            NamedGroupTag::D8 => build(&["(1,2,3,4)", "(1,3)"], 4),
            NamedGroupTag::C3xC3ColonC4 => build(&["(1,2,3)", "(2,5,3,6)(1,4)"], 6),
            NamedGroupTag::Sym3 => build(&["(1,2,3)", "(1,2)"], 3),
        }
    }

    pub fn canonical_fingerprint(self) -> &'static Fingerprint {
        static FINGERPRINTS: LazyLock<HashMap<NamedGroupTag, Fingerprint>> = LazyLock::new(|| {
            NamedGroupTag::ALL
                .iter()
                .map(|&t| (t, t.standard_copy().fingerprint().unwrap()))
                .collect()
        });
        &FINGERPRINTS[&self]
    }
}

impl FromStr for NamedGroupTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedGroupTag::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown group tag {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn classes_of_small_groups() {
        let trivial = Group::trivial(3);
        let t = trivial.conjugacy_classes().unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.sizes(), &[1]);

        let s3 = group(&["(1,2,3)", "(1,2)"], 3);
        let t = s3.conjugacy_classes().unwrap();
        let mut sizes = t.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let w = witness();
        let t = w.conjugacy_classes().unwrap();
        assert_eq!(t.sizes().iter().sum::<u64>(), 36);
        let mut sizes = t.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 4, 4, 9, 9, 9]);
    }

    #[test]
    fn center_examples() {
        let w = witness();
        assert_eq!(w.center().unwrap().order(), 1);
        let d8 = group(&["(1,2,3,4)", "(1,3)"], 4);
        assert_eq!(d8.center().unwrap().order(), 2);
        assert_eq!(
            d8.centralizer(&Perm::identity(4)).unwrap().order(),
            d8.order()
        );
        assert!(d8.centralizer(&perm("(1,2)", 4)).is_err());
    }

    #[test]
    fn normalizer_of_c4_in_s4_is_d8() {
        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        let c4 = Subgroup::new(&s4, vec![perm("(1,2,3,4)", 4)]).unwrap();
        let n = s4.normalizer(&c4).unwrap();
        assert_eq!(n.order(), 8);
    }

    #[test]
    fn normal_subgroups_examples() {
        let w = witness();
        let normals = w.normal_subgroups().unwrap();
        let orders: Vec<u128> = normals.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 9, 18, 36]);
        let minimal = w.minimal_normal_subgroups().unwrap();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].order(), 9);
        // the two visible 3-cycles generate the unique minimal normal subgroup
        let n = Subgroup::new(&w, vec![perm("(1,2,3)", 6), perm("(4,5,6)", 6)]).unwrap();
        assert!(minimal[0].subgroup_eq(&n));

        let c2 = group(&["(1,2)"], 2);
        let normals = c2.normal_subgroups().unwrap();
        assert_eq!(normals.len(), 2);

        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        let minimal = s4.minimal_normal_subgroups().unwrap();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].order(), 4);
    }

    #[test]
    fn fingerprint_recognizes_named_groups() {
        let w = witness();
        assert!(w.matches_named_group(NamedGroupTag::C3xC3ColonC4).unwrap());
        assert!(!Group::trivial(4).matches_named_group(NamedGroupTag::Alt4).unwrap());
        let d8 = group(&["(1,2,3,4)", "(1,3)"], 4);
        assert!(d8.matches_named_group(NamedGroupTag::D8).unwrap());
        // order-8 non-D8 groups do not match
        let c4xc2 = group(&["(1,2,3,4)", "(5,6)"], 6);
        assert_eq!(c4xc2.order(), 8);
        assert!(!c4xc2.matches_named_group(NamedGroupTag::D8).unwrap());
        let c8 = group(&["(1,2,3,4,5,6,7,8)"], 8);
        assert!(!c8.matches_named_group(NamedGroupTag::D8).unwrap());
    }

    #[test]
    fn named_fingerprints_are_pairwise_distinct() {
        for a in NamedGroupTag::ALL {
            for b in NamedGroupTag::ALL {
                if a != b {
                    assert_ne!(a.canonical_fingerprint(), b.canonical_fingerprint());
                }
            }
        }
    }

    #[test]
    fn witness_element_order_histogram() {
        let fp = witness().fingerprint().unwrap();
        assert_eq!(
            fp.element_orders,
            vec![(1, 1), (2, 9), (3, 8), (4, 18)]
        );
        assert_eq!(fp.derived_orders, vec![36, 9, 1]);
        assert_eq!(fp.abelianization, vec![(1, 1), (2, 1), (4, 2)]);
    }

    #[test]
    fn coset_action_gives_transitive_degree_six_s4() {
        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        let c4 = Subgroup::new(&s4, vec![perm("(1,2,3,4)", 4)]).unwrap();
        let on6 = s4.coset_action(&c4).unwrap();
        assert_eq!(on6.degree(), 6);
        assert_eq!(on6.order(), 24);
        assert!(on6.is_transitive());
        assert!(on6.matches_named_group(NamedGroupTag::Sym4).unwrap());
    }
}
