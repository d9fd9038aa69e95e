//! Finite permutation groups backed by deterministic stabilizer chains.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::chain::Chain;
use crate::perm::{Perm, Point};
use crate::structure::ConjugacyClassTable;

/// Structural operations that must enumerate all elements are restricted to
/// groups of order at most this bound and return [`GroupError::TooLarge`]
/// above it.
pub const ENUMERATION_BOUND: u128 = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator degree {found} does not match group degree {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: Point, degree: u32 },
    #[error("group order {order} exceeds the element-enumeration bound {ENUMERATION_BOUND}")]
    TooLarge { order: u128 },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("permutation is not a member of the group")]
    NotAMember,
    #[error("degree must be positive")]
    ZeroDegree,
}

struct GroupInner {
    degree: u32,
    gens: Vec<Perm>,
    chain: Chain,
    elements: OnceLock<Vec<Perm>>,
    classes: OnceLock<ConjugacyClassTable>,
}

/// A finite permutation group of `{1..degree}`, immutable after construction.
/// Cloning is cheap (shared internals).
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupInner>,
}

impl Group {
    /// Builds a group from generators; the chain is constructed eagerly.
    pub fn new(generators: Vec<Perm>, degree: u32) -> Result<Group, GroupError> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut gens: Vec<Perm> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let chain = Chain::build(&gens, degree, &[]);
        debug_assert!(gens.iter().all(|g| chain.contains(g)));
        Ok(Group {
            inner: Arc::new(GroupInner {
                degree,
                gens,
                chain,
                elements: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: u32) -> Group {
        Group::new(Vec::new(), degree).expect("positive degree")
    }

    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.gens
    }

    pub fn order(&self) -> u128 {
        self.inner.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.inner.chain.contains(g)
    }

    /// Unbounded element enumeration straight off the chain; internal callers
    /// (the lattice enumeration) manage their own scale.
    pub(crate) fn chain_elements(&self) -> Vec<Perm> {
        self.inner.chain.elements()
    }

    /// The orbit of `point`, sorted ascending.
    pub fn orbit_of(&self, point: Point) -> Result<Vec<Point>, GroupError> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree() as usize];
        let mut orbit = vec![point];
        seen[(point - 1) as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in self.generators() {
                let q = g.apply(p);
                if !seen[(q - 1) as usize] {
                    seen[(q - 1) as usize] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// The orbit partition of `{1..degree}`, blocks sorted by least point.
    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let mut assigned = vec![false; self.degree() as usize];
        let mut out = Vec::new();
        for p in 1..=self.degree() {
            if assigned[(p - 1) as usize] {
                continue;
            }
            let orbit = self.orbit_of(p).expect("point in range");
            for &q in &orbit {
                assigned[(q - 1) as usize] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_of(1).expect("degree >= 1").len() as u32 == self.degree()
    }

    fn check_point(&self, point: Point) -> Result<(), GroupError> {
        if point == 0 || point > self.degree() {
            return Err(GroupError::PointOutOfRange {
                point,
                degree: self.degree(),
            });
        }
        Ok(())
    }

    /// The stabilizer of a point, via a chain with forced leading base point.
    pub fn point_stabilizer(&self, alpha: Point) -> Result<Subgroup, GroupError> {
        self.check_point(alpha)?;
        Ok(self.pointwise_stabilizer(&[alpha]))
    }

    /// The pointwise stabilizer of a set of points.
    pub fn pointwise_stabilizer(&self, points: &[Point]) -> Subgroup {
        let chain = Chain::build(self.generators(), self.degree(), points);
        let gens = chain.stabilizer_gens(points.len());
        Subgroup::attach(self.clone(), gens)
    }

    /// All elements, in deterministic order. Errors above the enumeration bound.
    pub fn elements(&self) -> Result<&[Perm], GroupError> {
        let order = self.order();
        if order > ENUMERATION_BOUND {
            return Err(GroupError::TooLarge { order });
        }
        Ok(self
            .inner
            .elements
            .get_or_init(|| self.inner.chain.elements()))
    }

    pub(crate) fn classes_cache(&self) -> &OnceLock<ConjugacyClassTable> {
        &self.inner.classes
    }

    /// The smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> Result<Subgroup, GroupError> {
        for s in seeds {
            if !self.contains(s) {
                return Err(GroupError::NotAMember);
            }
        }
        let mut gens: Vec<Perm> = Vec::new();
        for s in seeds {
            if !s.is_identity() && !gens.contains(s) {
                gens.push(s.clone());
            }
        }
        let mut chain = Chain::build(&gens, self.degree(), &[]);
        loop {
            let mut added = false;
            let snapshot = gens.clone();
            for h in &snapshot {
                for g in self.generators() {
                    let c = h.conjugate_by(g);
                    if !chain.contains(&c) {
                        gens.push(c);
                        chain = Chain::build(&gens, self.degree(), &[]);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        Ok(Subgroup::attach(self.clone(), gens))
    }

    /// Commutators of the generators, normally closed: the derived subgroup.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut seeds = Vec::new();
        for a in self.generators() {
            for b in self.generators() {
                let c = a
                    .inverse()
                    .compose(&b.inverse())
                    .compose(a)
                    .compose(b);
                if !c.is_identity() && !seeds.contains(&c) {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds).expect("commutators are members")
    }

    /// The derived series `G >= G' >= G'' >= ...`, ending at the trivial group
    /// or at the first repeated (perfect) term.
    pub fn derived_series(&self) -> Vec<Group> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup().into_group();
            if next.order() == last.order() || next.order() == 1 {
                if next.order() == 1 && last.order() != 1 {
                    series.push(next);
                }
                return series;
            }
            series.push(next);
        }
    }

    /// True iff the derived series reaches the trivial group.
    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(degree={}, order={}, gens=[", self.degree(), self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

/// A subgroup with a reference to its parent group. The subgroup carries its
/// own chain; equality of subgroups is mutual membership of generators.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    group: Group,
}

impl Subgroup {
    /// Wraps `gens` as a subgroup of `parent`. Panics if a generator is not a
    /// member of the parent; construction sites guarantee membership.
    pub(crate) fn attach(parent: Group, gens: Vec<Perm>) -> Subgroup {
        assert!(
            gens.iter().all(|g| parent.contains(g)),
            "subgroup generator outside parent"
        );
        let group = Group::new(gens, parent.degree()).expect("same degree as parent");
        Subgroup { parent, group }
    }

    /// Builds a subgroup of `parent` from member permutations.
    pub fn new(parent: &Group, gens: Vec<Perm>) -> Result<Subgroup, GroupError> {
        for g in &gens {
            if !parent.contains(g) {
                return Err(GroupError::NotAMember);
            }
        }
        Ok(Subgroup::attach(parent.clone(), gens))
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn into_group(self) -> Group {
        self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn index(&self) -> u128 {
        let o = self.order();
        debug_assert_eq!(self.parent.order() % o, 0);
        self.parent.order() / o
    }

    pub fn generators(&self) -> &[Perm] {
        self.group.generators()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.group.contains(g)
    }

    /// Fixed setwise under conjugation by every generator of the parent.
    pub fn is_normal(&self) -> bool {
        self.group
            .generators()
            .iter()
            .all(|h| {
                self.parent
                    .generators()
                    .iter()
                    .all(|g| self.group.contains(&h.conjugate_by(g)))
            })
    }

    /// Mutual membership of generators.
    pub fn subgroup_eq(&self, other: &Subgroup) -> bool {
        self.order() == other.order()
            && self
                .generators()
                .iter()
                .all(|g| other.group.contains(g))
    }

    /// True iff `self` is contained in `other`.
    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        self.generators().iter().all(|g| other.group.contains(g))
    }

    pub fn canonical_generator_strings(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .generators()
            .iter()
            .map(|g| g.to_cycle_string())
            .collect();
        v.sort();
        v
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order={} of order={})",
            self.order(),
            self.parent.order()
        )
    }
}

/// Reduces a member list to a short generating sequence by greedy sifting.
pub(crate) fn span_gens(degree: u32, members: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut chain = Chain::build(&gens, degree, &[]);
    for m in members {
        if !m.is_identity() && !chain.contains(m) {
            gens.push(m.clone());
            chain = Chain::build(&gens, degree, &[]);
        }
    }
    gens
}
