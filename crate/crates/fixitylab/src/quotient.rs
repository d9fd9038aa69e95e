//! Induced actions on the orbit blocks of a normal subgroup.

use crate::chain::Chain;
use crate::group::{span_gens, Group, GroupError, Subgroup};
use crate::perm::{Perm, Point};

/// The faithful image of a group on the orbits of a normal subgroup, together
/// with the kernel of the block action.
#[derive(Clone)]
pub struct QuotientAction {
    parent: Group,
    blocks: Vec<Vec<Point>>,
    block_of: Vec<u32>,
    image: Group,
    kernel: Subgroup,
    kernel_exceeds_n: bool,
}

impl Group {
    /// The action induced on the orbits of a normal subgroup `n`.
    ///
    /// Blocks are the `n`-orbits sorted by least point and numbered from 1.
    /// The image acts faithfully on the blocks; the kernel of the block action
    /// contains `n` and `kernel_exceeds_n` records whether it is strictly
    /// larger.
    pub fn quotient_action(&self, n: &Subgroup) -> Result<QuotientAction, GroupError> {
        // guard against a subgroup attached to a different parent
        for g in n.generators() {
            if !self.contains(g) {
                return Err(GroupError::NotAMember);
            }
        }
        let normal_in_self = n.generators().iter().all(|h| {
            self.generators()
                .iter()
                .all(|g| n.contains(&h.conjugate_by(g)))
        });
        if !normal_in_self {
            return Err(GroupError::NotNormal);
        }
        let blocks = n.group().orbits();
        let m = blocks.len() as u32;
        let mut block_of = vec![0u32; self.degree() as usize];
        for (i, block) in blocks.iter().enumerate() {
            for &p in block {
                block_of[(p - 1) as usize] = i as u32 + 1;
            }
        }

        let image_gens: Vec<Perm> = self
            .generators()
            .iter()
            .map(|g| block_image_of(g, &blocks, &block_of, m))
            .collect();
        let image = Group::new(image_gens.clone(), m)?;

        // Kernel of the block action: act on {1..degree} + one point per
        // block, then take the pointwise stabilizer of the block points.
        let ext_degree = self.degree() + m;
        let ext_gens: Vec<Perm> = self
            .generators()
            .iter()
            .zip(&image_gens)
            .map(|(g, b)| {
                let mut images: Vec<Point> = g.images().to_vec();
                images.extend(b.images().iter().map(|&x| x + self.degree()));
                Perm::from_images(images).expect("extended permutation")
            })
            .collect();
        let forced: Vec<Point> = (self.degree() + 1..=ext_degree).collect();
        let ext_chain = Chain::build(&ext_gens, ext_degree, &forced);
        let kernel_members: Vec<Perm> = ext_chain
            .stabilizer_gens(forced.len())
            .iter()
            .map(|g| {
                Perm::from_images(g.images()[..self.degree() as usize].to_vec())
                    .expect("restriction of a block-fixing permutation")
            })
            .collect();
        let kernel = Subgroup::attach(self.clone(), span_gens(self.degree(), &kernel_members));
        debug_assert_eq!(image.order() * kernel.order(), self.order());
        debug_assert!(n.generators().iter().all(|g| kernel.contains(g)));
        let kernel_exceeds_n = kernel.order() > n.order();
        Ok(QuotientAction {
            parent: self.clone(),
            blocks,
            block_of,
            image,
            kernel,
            kernel_exceeds_n,
        })
    }
}

impl QuotientAction {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn blocks(&self) -> &[Vec<Point>] {
        &self.blocks
    }

    pub fn block_count(&self) -> u32 {
        self.blocks.len() as u32
    }

    /// 1-based index of the block containing `point`.
    pub fn block_of(&self, point: Point) -> u32 {
        self.block_of[(point - 1) as usize]
    }

    /// The faithful image on the blocks, a group of degree `block_count`.
    pub fn image(&self) -> &Group {
        &self.image
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn kernel_exceeds_n(&self) -> bool {
        self.kernel_exceeds_n
    }

    /// The permutation a member of the parent induces on the blocks.
    pub fn block_image(&self, g: &Perm) -> Result<Perm, GroupError> {
        if !self.parent.contains(g) {
            return Err(GroupError::NotAMember);
        }
        Ok(block_image_of(
            g,
            &self.blocks,
            &self.block_of,
            self.block_count(),
        ))
    }
}

fn block_image_of(g: &Perm, blocks: &[Vec<Point>], block_of: &[u32], m: u32) -> Perm {
    let images: Vec<Point> = blocks
        .iter()
        .map(|block| block_of[(g.apply(block[0]) - 1) as usize])
        .collect();
    debug_assert_eq!(images.len(), m as usize);
    Perm::from_images(images).expect("blocks are permuted")
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

    #[test]
    fn witness_quotient_has_two_blocks() {
        let w = group(&["(1,2,3)", "(2,5,3,6)(1,4)"], 6);
        let n = Subgroup::new(&w, vec![perm("(1,2,3)", 6), perm("(4,5,6)", 6)]).unwrap();
        let q = w.quotient_action(&n).unwrap();
        assert_eq!(q.blocks(), &[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(q.image().degree(), 2);
        assert_eq!(q.image().order(), 2);
        assert_eq!(q.kernel().order(), 18);
        assert!(q.kernel_exceeds_n());
    }

    #[test]
    fn trivial_normal_subgroup_gives_isomorphic_image() {
        let w = group(&["(1,2,3)", "(2,5,3,6)(1,4)"], 6);
        let triv = Subgroup::new(&w, vec![]).unwrap();
        let q = w.quotient_action(&triv).unwrap();
        assert_eq!(q.block_count(), 6);
        assert_eq!(q.image().order(), w.order());
        assert_eq!(q.kernel().order(), 1);
        assert!(!q.kernel_exceeds_n());
    }

    #[test]
    fn s4_on_six_modulo_klein() {
        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        let c4 = Subgroup::new(&s4, vec![perm("(1,2,3,4)", 4)]).unwrap();
        let on6 = s4.coset_action(&c4).unwrap();
        assert!(on6.is_transitive());
        let minimal = on6.minimal_normal_subgroups().unwrap();
        assert_eq!(minimal.len(), 1);
        let klein = &minimal[0];
        assert_eq!(klein.order(), 4);
        let q = on6.quotient_action(klein).unwrap();
        assert_eq!(q.block_count(), 3);
        assert!(q.blocks().iter().all(|b| b.len() == 2));
        assert_eq!(q.image().order(), 6);
        assert!(!q.kernel_exceeds_n());
        assert_eq!(q.kernel().order(), 4);
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        let c4 = Subgroup::new(&s4, vec![perm("(1,2,3,4)", 4)]).unwrap();
        assert!(matches!(
            s4.quotient_action(&c4),
            Err(GroupError::NotNormal)
        ));
    }

    #[test]
    fn block_image_and_membership() {
        let w = group(&["(1,2,3)", "(2,5,3,6)(1,4)"], 6);
        let n = Subgroup::new(&w, vec![perm("(1,2,3)", 6), perm("(4,5,6)", 6)]).unwrap();
        let q = w.quotient_action(&n).unwrap();
        let g = perm("(2,5,3,6)(1,4)", 6);
        assert_eq!(q.block_image(&g).unwrap(), perm("(1,2)", 2));
        assert!(q.block_image(&perm("(1,2)", 6)).is_err());
    }
}
