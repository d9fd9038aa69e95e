//! Fixed-point analysis of group actions: fixity, fixed-point profiles,
//! semiregularity, regularity, Frobenius recognition, and fixed blocks.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::group::{Group, GroupError, Subgroup};
use crate::perm::{Perm, Point};
use crate::quotient::QuotientAction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("domain point {point} out of range 1..={degree}")]
    PointOutOfRange { point: Point, degree: u32 },
    #[error("domain is not a union of orbits: point {point} leaves the domain")]
    NotInvariant { point: Point },
    #[error("domain is empty")]
    EmptyDomain,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A group together with an invariant subset of its natural domain.
#[derive(Clone, Debug)]
pub struct ActionInstance {
    group: Group,
    domain: Vec<Point>,
}

impl ActionInstance {
    /// The action of the group on its full natural domain `{1..degree}`.
    pub fn natural(group: Group) -> ActionInstance {
        let domain = (1..=group.degree()).collect();
        ActionInstance { group, domain }
    }

    /// An action restricted to `domain`, which must be a union of orbits.
    pub fn new(group: Group, mut domain: Vec<Point>) -> Result<ActionInstance, ActionError> {
        domain.sort_unstable();
        domain.dedup();
        if domain.is_empty() {
            return Err(ActionError::EmptyDomain);
        }
        for &p in &domain {
            if p == 0 || p > group.degree() {
                return Err(ActionError::PointOutOfRange {
                    point: p,
                    degree: group.degree(),
                });
            }
        }
        let in_domain = |p: Point| domain.binary_search(&p).is_ok();
        for &p in &domain {
            for g in group.generators() {
                if !in_domain(g.apply(p)) {
                    return Err(ActionError::NotInvariant { point: p });
                }
            }
        }
        Ok(ActionInstance { group, domain })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Sorted domain points.
    pub fn domain(&self) -> &[Point] {
        &self.domain
    }

    pub fn domain_size(&self) -> u32 {
        self.domain.len() as u32
    }

    pub fn is_natural(&self) -> bool {
        self.domain.len() as u32 == self.group.degree()
    }

    pub fn count_fixed(&self, g: &Perm) -> u32 {
        self.domain.iter().filter(|&&p| g.apply(p) == p).count() as u32
    }

    pub fn fixed_points(&self, g: &Perm) -> Vec<Point> {
        self.domain
            .iter()
            .copied()
            .filter(|&p| g.apply(p) == p)
            .collect()
    }

    /// Orbits of the group restricted to the domain, sorted by least point.
    pub fn orbits(&self) -> Vec<Vec<Point>> {
        self.group
            .orbits()
            .into_iter()
            .filter(|o| self.domain.binary_search(&o[0]).is_ok())
            .collect()
    }

    pub fn is_transitive_on_domain(&self) -> bool {
        self.orbits().len() == 1
    }

    /// The permutation image of the group on the domain, with domain points
    /// renumbered `1..=m` in sorted order. The image may be a proper quotient.
    pub fn restriction_image(&self) -> Group {
        let index_of =
            |p: Point| -> u32 { self.domain.binary_search(&p).expect("domain point") as u32 + 1 };
        let gens: Vec<Perm> = self
            .group
            .generators()
            .iter()
            .map(|g| {
                Perm::from_images(self.domain.iter().map(|&p| index_of(g.apply(p))).collect())
                    .expect("restriction of invariant domain")
            })
            .collect();
        Group::new(gens, self.domain.len() as u32).expect("nonempty domain")
    }
}

/// Fixity and the distribution of fixed-point counts over the nonidentity
/// elements. `counts[c]` is the number of nonidentity elements fixing exactly
/// `c` domain points; the counts sum to `|G| - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixityProfile {
    pub fixity: u32,
    pub counts: BTreeMap<u32, u64>,
}

impl FixityProfile {
    /// Records that `class_size` nonidentity elements fix exactly `c` points.
    fn add(&mut self, c: u32, class_size: u64) {
        *self.counts.entry(c).or_insert(0) += class_size;
        self.fixity = self.fixity.max(c);
    }
}

/// Exact fixity profile, computed over conjugacy class representatives
/// weighted by class size (the fixed-point count is a class function).
pub fn fixity_profile(a: &ActionInstance) -> Result<FixityProfile, GroupError> {
    let classes = a.group().conjugacy_classes()?;
    let mut profile = FixityProfile {
        fixity: 0,
        counts: BTreeMap::new(),
    };
    for (rep, size) in classes.iter() {
        if rep.is_identity() {
            continue;
        }
        profile.add(a.count_fixed(rep), size);
    }
    Ok(profile)
}

/// The fixity of the action: the maximum number of fixed points of a
/// nonidentity element, 0 for the trivial group.
pub fn fixity(a: &ActionInstance) -> Result<u32, GroupError> {
    Ok(fixity_profile(a)?.fixity)
}

/// Every point stabilizer is trivial; equivalently every orbit on the domain
/// has full group length.
pub fn is_semiregular(a: &ActionInstance) -> bool {
    let order = a.group().order();
    a.orbits().iter().all(|o| o.len() as u128 == order)
}

/// Semiregular and transitive on the domain.
pub fn is_regular(a: &ActionInstance) -> bool {
    is_semiregular(a) && a.is_transitive_on_domain()
}

/// Whether the image of the group on the domain is a Frobenius permutation
/// group: transitive, nontrivial point stabilizers, and no nonidentity
/// element fixing two points. Evaluated on the induced image, via the
/// pairwise-trivial two-point stabilizer formulation.
pub fn is_frobenius_action(a: &ActionInstance) -> bool {
    let image = a.restriction_image();
    let m = image.degree();
    if !image.is_transitive() {
        return false;
    }
    if image.order() == m as u128 {
        // regular image: trivial stabilizers
        return false;
    }
    // transitive, so checking pairs (1, beta) suffices up to conjugacy
    (2..=m).all(|beta| image.pointwise_stabilizer(&[1, beta]).order() == 1)
}

/// `(k,l)`-group predicate: every nonidentity element fixes exactly `k` or
/// exactly `l` points, with both counts realized unless the action is
/// semiregular.
pub fn is_kl_group(a: &ActionInstance, k: u32, l: u32) -> Result<bool, GroupError> {
    let profile = fixity_profile(a)?;
    let support: Vec<u32> = profile
        .counts
        .iter()
        .filter(|&(_, &v)| v > 0)
        .map(|(&c, _)| c)
        .collect();
    if !support.iter().all(|&c| c == k || c == l) {
        return Ok(false);
    }
    if is_semiregular(a) {
        return Ok(true);
    }
    Ok(support.contains(&k) && support.contains(&l))
}

/// The blocks of a quotient action stabilized setwise by a member `g`,
/// as 1-based block indices.
pub fn fixed_blocks(q: &QuotientAction, g: &Perm) -> Result<Vec<u32>, GroupError> {
    let image = q.block_image(g)?;
    Ok(image.fixed_points())
}

/// Whether a subgroup acts semiregularly on the instance's domain.
pub fn semiregular_on(a: &ActionInstance, n: &Subgroup) -> bool {
    let sub_action = ActionInstance::new(n.group().clone(), a.domain().to_vec())
        .expect("domain invariant under subgroup");
    is_semiregular(&sub_action)
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
    fn witness_profile_has_fixity_three() {
        let a = ActionInstance::natural(witness());
        let p = fixity_profile(&a).unwrap();
        assert_eq!(p.fixity, 3);
        let counts: Vec<(u32, u64)> = p.counts.into_iter().collect();
        assert_eq!(counts, vec![(0, 22), (2, 9), (3, 4)]);
    }

    #[test]
    fn regular_actions_have_fixity_zero() {
        let c4 = ActionInstance::natural(group(&["(1,2,3,4)"], 4));
        let p = fixity_profile(&c4).unwrap();
        assert_eq!(p.fixity, 0);
        assert_eq!(p.counts.get(&0), Some(&3));
        assert!(is_regular(&c4));
        assert!(!is_frobenius_action(&c4));
    }

    #[test]
    fn s4_on_six_has_fixity_two() {
        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        let c4 = Subgroup::new(&s4, vec![perm("(1,2,3,4)", 4)]).unwrap();
        let on6 = ActionInstance::natural(s4.coset_action(&c4).unwrap());
        assert_eq!(fixity(&on6).unwrap(), 2);
    }

    #[test]
    fn order_nine_group_is_not_semiregular_on_six() {
        // (4,5,6) fixes the points 1, 2, 3.
        let n = ActionInstance::natural(group(&["(1,2,3)", "(4,5,6)"], 6));
        assert!(!is_semiregular(&n));
        assert!(!is_regular(&n));
        assert_eq!(n.orbits().len(), 2);
        // The order-3 group generated by the product is semiregular with the
        // same two orbits.
        let c3 = ActionInstance::natural(group(&["(1,2,3)(4,5,6)"], 6));
        assert!(is_semiregular(&c3));
        assert!(!is_regular(&c3));
        assert_eq!(c3.orbits().len(), 2);
    }

    #[test]
    fn sym3_on_three_is_frobenius() {
        let s3 = ActionInstance::natural(group(&["(1,2,3)", "(1,2)"], 3));
        assert!(is_frobenius_action(&s3));
    }

    #[test]
    fn fixed_blocks_examples() {
        let w = witness();
        let n = Subgroup::new(&w, vec![perm("(1,2,3)", 6), perm("(4,5,6)", 6)]).unwrap();
        let q = w.quotient_action(&n).unwrap();
        assert_eq!(fixed_blocks(&q, &Perm::identity(6)).unwrap(), vec![1, 2]);
        assert_eq!(
            fixed_blocks(&q, &perm("(2,5,3,6)(1,4)", 6)).unwrap(),
            Vec::<u32>::new()
        );
    }

    #[test]
    fn restricted_domains() {
        let n = group(&["(1,2,3)", "(4,5,6)"], 6);
        let a = ActionInstance::new(n.clone(), vec![1, 2, 3]).unwrap();
        assert!(a.is_transitive_on_domain());
        let image = a.restriction_image();
        assert_eq!(image.degree(), 3);
        assert_eq!(image.order(), 3);
        assert!(matches!(
            ActionInstance::new(n.clone(), vec![1, 2]),
            Err(ActionError::NotInvariant { .. })
        ));
        assert!(matches!(
            ActionInstance::new(n, vec![7]),
            Err(ActionError::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn kl_group_predicate() {
        let s3 = ActionInstance::natural(group(&["(1,2,3)", "(1,2)"], 3));
        assert!(is_kl_group(&s3, 0, 1).unwrap());
        let w = ActionInstance::natural(witness());
        assert!(!is_kl_group(&w, 0, 3).unwrap());
        let c4 = ActionInstance::natural(group(&["(1,2,3,4)"], 4));
        assert!(is_kl_group(&c4, 0, 2).unwrap());
    }
}
