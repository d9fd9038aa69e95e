//! Deterministic stabilizer chains (base and strong generating set).
//!
//! The construction is the classic deterministic Schreier-Sims procedure: no
//! randomization, base points chosen as least moved points (after an optional
//! forced prefix), so builds are reproducible bit for bit.

use crate::perm::{Perm, Point};

#[derive(Clone)]
pub(crate) struct Chain {
    degree: u32,
    base: Vec<Point>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

#[derive(Clone)]
struct Level {
    base_point: Point,
    /// Indices into `strong` of the generators fixing all earlier base points.
    gen_idx: Vec<usize>,
    /// Basic orbit of `base_point`, in BFS discovery order.
    orbit: Vec<Point>,
    /// Coset representative per point: `base_point^u = point`.
    transversal: Vec<Option<Perm>>,
}

impl Chain {
    /// Builds a chain for `gens` on `{1..degree}`. Points in `forced_base`
    /// become the leading base points, in order, whether or not they are
    /// moved; this makes pointwise stabilizers of a prescribed set directly
    /// readable off the chain.
    pub fn build(gens: &[Perm], degree: u32, forced_base: &[Point]) -> Chain {
        let mut chain = Chain {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for &p in forced_base {
            assert!(p >= 1 && p <= degree, "forced base point out of range");
            chain.push_level(p);
        }
        for g in gens {
            if !g.is_identity() && !chain.strong.contains(g) {
                chain.strong.push(g.clone());
            }
        }
        chain.cover_strong_gens();
        chain.refresh_levels();
        chain.verify_repair();
        chain
    }

    fn push_level(&mut self, point: Point) {
        self.base.push(point);
        self.levels.push(Level {
            base_point: point,
            gen_idx: Vec::new(),
            orbit: vec![point],
            transversal: Vec::new(),
        });
    }

    /// Appends base points until no strong generator fixes the whole base.
    fn cover_strong_gens(&mut self) {
        loop {
            let uncovered = self
                .strong
                .iter()
                .find(|g| self.base.iter().all(|&b| g.apply(b) == b));
            match uncovered {
                None => return,
                Some(g) => {
                    let p = least_moved_point(g).expect("identity cannot be a strong generator");
                    self.push_level(p);
                }
            }
        }
    }

    fn level_gen_indices(&self, level: usize) -> Vec<usize> {
        self.strong
            .iter()
            .enumerate()
            .filter(|(_, g)| self.base[..level].iter().all(|&b| g.apply(b) == b))
            .map(|(i, _)| i)
            .collect()
    }

    fn refresh_levels(&mut self) {
        for l in 0..self.levels.len() {
            self.rebuild_level(l);
        }
    }

    fn rebuild_level(&mut self, level: usize) {
        let gen_idx = self.level_gen_indices(level);
        let base_point = self.levels[level].base_point;
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree as usize];
        transversal[(base_point - 1) as usize] = Some(Perm::identity(self.degree));
        let mut orbit = vec![base_point];
        let mut head = 0;
        while head < orbit.len() {
            let delta = orbit[head];
            head += 1;
            for &gi in &gen_idx {
                let image = self.strong[gi].apply(delta);
                if transversal[(image - 1) as usize].is_none() {
                    let rep = transversal[(delta - 1) as usize]
                        .as_ref()
                        .unwrap()
                        .compose(&self.strong[gi]);
                    transversal[(image - 1) as usize] = Some(rep);
                    orbit.push(image);
                }
            }
        }
        let lvl = &mut self.levels[level];
        lvl.gen_idx = gen_idx;
        lvl.orbit = orbit;
        lvl.transversal = transversal;
    }

    /// Verifies the Schreier condition at every level, adding residues of
    /// failed Schreier generators as new strong generators until the chain is
    /// a genuine BSGS.
    fn verify_repair(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut l = self.levels.len() - 1;
        loop {
            self.rebuild_level(l);
            match self.first_violation(l) {
                Some((residue, stuck)) => {
                    let fixes_all_base = self.base.iter().all(|&b| residue.apply(b) == b);
                    self.strong.push(residue);
                    if fixes_all_base {
                        let p =
                            least_moved_point(self.strong.last().unwrap()).expect("nonidentity");
                        self.push_level(p);
                        self.rebuild_level(self.levels.len() - 1);
                    }
                    l = stuck.min(self.levels.len() - 1);
                }
                None => {
                    if l == 0 {
                        return;
                    }
                    l -= 1;
                }
            }
        }
    }

    /// First Schreier generator at `level` whose residue does not sift to the
    /// identity through the deeper levels; returns the residue and the level
    /// where sifting got stuck.
    fn first_violation(&self, level: usize) -> Option<(Perm, usize)> {
        let lvl = &self.levels[level];
        for &delta in &lvl.orbit {
            let u = lvl.transversal[(delta - 1) as usize].as_ref().unwrap();
            for &gi in &lvl.gen_idx {
                let s = &self.strong[gi];
                let image = s.apply(delta);
                let u2 = lvl.transversal[(image - 1) as usize].as_ref().unwrap();
                let schreier = u.compose(s).compose(&u2.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (residue, stuck) = self.sift_from(level + 1, schreier);
                if !residue.is_identity() {
                    return Some((residue, stuck));
                }
            }
        }
        None
    }

    /// Strips `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (== number of levels fully passed).
    fn sift_from(&self, start: usize, mut g: Perm) -> (Perm, usize) {
        for i in start..self.levels.len() {
            if g.is_identity() {
                return (g, i);
            }
            let lvl = &self.levels[i];
            let image = g.apply(lvl.base_point);
            match lvl.transversal[(image - 1) as usize].as_ref() {
                None => return (g, i),
                Some(u) => g = g.compose(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift_from(0, g.clone());
        residue.is_identity()
    }

    /// Generators of the pointwise stabilizer of `base[..prefix_len]`.
    ///
    /// Valid whenever the chain was built with those points as forced base
    /// prefix (or they are genuine leading base points).
    pub fn stabilizer_gens(&self, prefix_len: usize) -> Vec<Perm> {
        assert!(prefix_len <= self.levels.len());
        self.level_gen_indices(prefix_len)
            .into_iter()
            .map(|i| self.strong[i].clone())
            .collect()
    }

    /// All group elements, as products of transversal representatives in a
    /// fixed odometer order. Deterministic.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        // Build from the deepest level outward: elements(i) = elements(i+1) * transversal(i).
        for lvl in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lvl.orbit.len());
            for h in &out {
                for &delta in &lvl.orbit {
                    let u = lvl.transversal[(delta - 1) as usize].as_ref().unwrap();
                    next.push(h.compose(u));
                }
            }
            out = next;
        }
        out
    }
}

fn least_moved_point(g: &Perm) -> Option<Point> {
    (1..=g.degree()).find(|&p| g.apply(p) != p)
}
