//! Constructions of specific permutation groups: alternating and symmetric
//! groups, projective and affine linear groups over tiny fields, the sharply
//! 4-transitive group of degree 11, induced actions, and the perfect seed
//! groups the subgroup-lattice enumeration starts from.
//!
//! Every construction asserts the expected order (and transitivity where it
//! applies), so a wrong generator set fails loudly at build time.

use crate::group::{Group, Subgroup};
use crate::perm::{Perm, Point};

fn build(gens: Vec<Perm>, degree: u32) -> Group {
    Group::new(gens, degree).expect("valid generators")
}

fn cycle(text: &str, degree: u32) -> Perm {
    Perm::parse_cycles(text, degree).expect("valid cycle string")
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// `Alt(n)` on `{1..n}`, for `n >= 3`.
pub fn alternating_group(n: u32) -> Group {
    assert!(n >= 3);
    let three_cycle = cycle("(1,2,3)", n);
    let long = if n % 2 == 1 {
        // odd n: the n-cycle is even
        Perm::from_images((1..=n).map(|i| i % n + 1).collect()).unwrap()
    } else {
        // even n: rotate 2..n, an (n-1)-cycle
        Perm::from_images(
            std::iter::once(1)
                .chain((2..=n).map(|i| if i == n { 2 } else { i + 1 }))
                .collect(),
        )
        .unwrap()
    };
    let g = build(vec![three_cycle, long], n);
    assert_eq!(g.order(), factorial(n) / 2, "Alt({n}) order");
    g
}

/// `Sym(n)` on `{1..n}`, for `n >= 2`.
pub fn symmetric_group(n: u32) -> Group {
    assert!(n >= 2);
    let transposition = cycle("(1,2)", n);
    let long = Perm::from_images((1..=n).map(|i| i % n + 1).collect()).unwrap();
    let g = build(vec![transposition, long], n);
    assert_eq!(g.order(), factorial(n), "Sym({n}) order");
    g
}

/// Arithmetic tables for a finite field of order `q` (prime, or 8 via the
/// polynomial t^3 + t + 1 over GF(2)).
struct SmallField {
    add: Vec<Vec<u32>>,
    neg: Vec<u32>,
    inv: Vec<u32>, // inv[0] unused
}

impl SmallField {
    fn new(q: u32) -> SmallField {
        let (add, mul): (Vec<Vec<u32>>, Vec<Vec<u32>>) = if q == 8 {
            // GF(8) as GF(2)[t]/(t^3 + t + 1); elements are bit patterns 0..7
            let add = (0..8).map(|a| (0..8).map(|b| a ^ b).collect()).collect();
            let poly_mul = |a: u32, b: u32| -> u32 {
                let mut acc = 0u32;
                for bit in 0..3 {
                    if b & (1 << bit) != 0 {
                        acc ^= a << bit;
                    }
                }
                // reduce modulo t^3 + t + 1
                for bit in (3..6).rev() {
                    if acc & (1 << bit) != 0 {
                        acc ^= (1 << bit) | (0b011 << (bit - 3));
                    }
                }
                acc
            };
            let mul = (0..8).map(|a| (0..8).map(|b| poly_mul(a, b)).collect()).collect();
            (add, mul)
        } else {
            assert!(is_prime(q), "field order must be prime or 8");
            let add = (0..q).map(|a| (0..q).map(|b| (a + b) % q).collect()).collect();
            let mul = (0..q).map(|a| (0..q).map(|b| (a * b) % q).collect()).collect();
            (add, mul)
        };
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a as usize][b as usize] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (0..q).find(|&b| mul[a as usize][b as usize] == 1).unwrap()
                }
            })
            .collect();
        SmallField { add, neg, inv }
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize][b as usize]
    }

    fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `PSL(2,q)` acting on the projective line: points `1..=q` are the field
/// elements `0..q-1`, point `q+1` is infinity. Supported `q`: primes and 8.
pub fn psl2(q: u32) -> Group {
    let f = SmallField::new(q);
    let degree = q + 1;
    let infinity = degree;
    let pt = |x: u32| x + 1;
    // translations x -> x + b for b spanning the field over its prime field
    let basis: Vec<u32> = if q == 8 { vec![1, 2, 4] } else { vec![1] };
    let mut gens: Vec<Perm> = basis
        .iter()
        .map(|&b| {
            let mut images: Vec<Point> = (0..q).map(|x| pt(f.add(x, b))).collect();
            images.push(infinity);
            Perm::from_images(images).unwrap()
        })
        .collect();
    // inversion x -> -1/x, swapping 0 and infinity
    let mut inv_images: Vec<Point> = (0..q)
        .map(|x| if x == 0 { infinity } else { pt(f.neg(f.inv(x))) })
        .collect();
    inv_images.push(pt(0));
    gens.push(Perm::from_images(inv_images).unwrap());
    let g = build(gens, degree);
    let expected = u128::from(q) * (u128::from(q) * u128::from(q) - 1) / if q % 2 == 1 { 2 } else { 1 };
    assert_eq!(g.order(), expected, "PSL(2,{q}) order");
    assert!(g.is_transitive());
    g
}

/// `PSL(3,2) = GL(3,2)` acting on the 7 nonzero vectors of `GF(2)^3`; the
/// point index is the binary encoding of the vector.
pub fn psl32_on_7() -> Group {
    // x -> Mx for the companion matrix of t^3 + t + 1, and a transvection
    let companion = |v: u32| -> u32 {
        // (v1,v2,v3) -> (v3, v1 + v3, v2), companion acting on bits 1,2,4
        let b1 = v & 1;
        let b2 = (v >> 1) & 1;
        let b3 = (v >> 2) & 1;
        b3 | ((b1 ^ b3) << 1) | (b2 << 2)
    };
    let transvection = |v: u32| -> u32 {
        // add the first coordinate to the second
        let b1 = v & 1;
        v ^ (b1 << 1)
    };
    let perm_of = |m: &dyn Fn(u32) -> u32| -> Perm {
        Perm::from_images((1..=7).map(m).collect()).unwrap()
    };
    let g = build(vec![perm_of(&companion), perm_of(&transvection)], 7);
    assert_eq!(g.order(), 168, "PSL(3,2) order");
    assert!(g.is_transitive());
    g
}

/// `AGL(3,2)` acting on the 8 vectors of `GF(2)^3`; vector `v` is the point
/// `v + 1`.
pub fn agl32_on_8() -> Group {
    let linear = psl32_on_7();
    let extend = |g: &Perm| -> Perm {
        // fix the zero vector, act on nonzero vectors as before
        let mut images = vec![1u32];
        images.extend((1..=7).map(|v| g.apply(v) + 1));
        Perm::from_images(images).unwrap()
    };
    let mut gens: Vec<Perm> = linear.generators().iter().map(extend).collect();
    for b in [1u32, 2, 4] {
        gens.push(Perm::from_images((0..8).map(|v| (v ^ b) + 1).collect()).unwrap());
    }
    let g = build(gens, 8);
    assert_eq!(g.order(), 1344, "AGL(3,2) order");
    assert!(g.is_transitive());
    g
}

/// The sharply 4-transitive group of order 7920 on 11 points.
pub fn m11_on_11() -> Group {
    let c11 = cycle("(1,2,3,4,5,6,7,8,9,10,11)", 11);
    let extra = cycle("(3,7,11,8)(4,10,5,6)", 11);
    let g = build(vec![c11, extra], 11);
    assert_eq!(g.order(), 7920, "M11 order");
    assert!(g.is_transitive());
    g
}

/// `PSL(2,11)` in its exceptional transitive action on 11 points, realized as
/// the coset action on an order-60 subgroup.
pub fn psl2_11_on_11() -> Group {
    let g12 = psl2(11);
    let elems = g12.elements().expect("order 660");
    let mut sorted: Vec<&Perm> = elems.iter().collect();
    sorted.sort();
    let involutions: Vec<&&Perm> = sorted.iter().filter(|p| p.order() == 2).collect();
    let threes: Vec<&&Perm> = sorted.iter().filter(|p| p.order() == 3).collect();
    for x in &involutions {
        for y in &threes {
            let candidate = build(vec![(***x).clone(), (***y).clone()], 12);
            if candidate.order() == 60 {
                let u = Subgroup::new(&g12, candidate.generators().to_vec()).unwrap();
                let on11 = g12.coset_action(&u).expect("index 11");
                assert_eq!(on11.degree(), 11);
                assert_eq!(on11.order(), 660, "PSL(2,11) acts faithfully on 11 points");
                assert!(on11.is_transitive());
                return on11;
            }
        }
    }
    unreachable!("PSL(2,11) contains order-60 subgroups");
}

/// The induced action of a group on the 2-subsets of its domain.
pub fn action_on_pairs(g: &Group) -> Group {
    let n = g.degree();
    let mut pairs: Vec<(Point, Point)> = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            pairs.push((i, j));
        }
    }
    let index_of = |a: Point, b: Point| -> u32 {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).unwrap() as u32 + 1
    };
    let gens: Vec<Perm> = g
        .generators()
        .iter()
        .map(|p| {
            Perm::from_images(
                pairs
                    .iter()
                    .map(|&(a, b)| index_of(p.apply(a), p.apply(b)))
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    build(gens, pairs.len() as u32)
}

/// `Alt(5)` acting transitively on the 10 unordered pairs from `{1..5}`.
pub fn a5_on_10_pairs() -> Group {
    let g = action_on_pairs(&alternating_group(5));
    assert_eq!(g.order(), 60);
    assert!(g.is_transitive());
    g
}

/// `Alt(6)` acting transitively on the 10 partitions of `{1..6}` into two
/// 3-sets.
pub fn a6_on_10_partitions() -> Group {
    let a6 = alternating_group(6);
    // the 3-subsets containing the point 1 represent the partitions
    let mut reps: Vec<[Point; 3]> = Vec::new();
    for i in 2..=6u32 {
        for j in (i + 1)..=6 {
            reps.push([1, i, j]);
        }
    }
    let rep_index = |set: [Point; 3]| -> u32 {
        let mut s = set;
        s.sort_unstable();
        if !s.contains(&1) {
            let mut c: Vec<Point> = (1..=6).filter(|p| !s.contains(p)).collect();
            c.sort_unstable();
            s = [c[0], c[1], c[2]];
        }
        reps.iter().position(|r| *r == s).unwrap() as u32 + 1
    };
    let gens: Vec<Perm> = a6
        .generators()
        .iter()
        .map(|p| {
            Perm::from_images(
                reps.iter()
                    .map(|r| rep_index([p.apply(r[0]), p.apply(r[1]), p.apply(r[2])]))
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    let g = build(gens, 10);
    assert_eq!(g.order(), 360);
    assert!(g.is_transitive());
    g
}

/// `Alt(5)` acting diagonally on two pentads.
pub fn a5_diagonal_on_10() -> Group {
    let a5 = alternating_group(5);
    let gens: Vec<Perm> = a5
        .generators()
        .iter()
        .map(|p| {
            let mut images: Vec<Point> = (1..=5).map(|i| p.apply(i)).collect();
            images.extend((1..=5).map(|i| p.apply(i) + 5));
            Perm::from_images(images).unwrap()
        })
        .collect();
    let g = build(gens, 10);
    assert_eq!(g.order(), 60);
    g
}

/// The even-weight block-flip group extended by `Alt(5)` permuting five
/// blocks of two: a perfect group of order 960 acting transitively on 10
/// points. The flip subgroup is the even-weight subspace of the full flip
/// module, an irreducible nontrivial module, so the extension is perfect.
pub fn even_flips_colon_a5_on_10() -> Group {
    let a5 = alternating_group(5);
    // blocks {1,2},{3,4},...,{9,10}; Alt(5) permutes the blocks
    let mut gens: Vec<Perm> = a5
        .generators()
        .iter()
        .map(|p| {
            let mut images = vec![0u32; 10];
            for i in 1..=5u32 {
                let j = p.apply(i);
                images[(2 * i - 2) as usize] = 2 * j - 1;
                images[(2 * i - 1) as usize] = 2 * j;
            }
            Perm::from_images(images).unwrap()
        })
        .collect();
    // flips of two adjacent blocks span the even-weight flips
    for k in 1..=4u32 {
        let mut images: Vec<Point> = (1..=10).collect();
        for b in [k, k + 1] {
            images[(2 * b - 2) as usize] = 2 * b;
            images[(2 * b - 1) as usize] = 2 * b - 1;
        }
        gens.push(Perm::from_images(images).unwrap());
    }
    let g = build(gens, 10);
    assert_eq!(g.order(), 960);
    assert!(g.is_transitive());
    g
}

/// `Alt(5) x Alt(5)` with one factor on each pentad.
pub fn a5_times_a5_on_10() -> Group {
    let a5 = alternating_group(5);
    let mut gens: Vec<Perm> = Vec::new();
    for p in a5.generators() {
        let mut images: Vec<Point> = (1..=5).map(|i| p.apply(i)).collect();
        images.extend(6..=10);
        gens.push(Perm::from_images(images).unwrap());
        let mut images: Vec<Point> = (1..=5).collect();
        images.extend((1..=5).map(|i| p.apply(i) + 5));
        gens.push(Perm::from_images(images).unwrap());
    }
    let g = build(gens, 10);
    assert_eq!(g.order(), 3600);
    g
}

/// Embeds a group into a larger symmetric group by appending fixed points.
pub fn pad(g: &Group, degree: u32) -> Group {
    assert!(degree >= g.degree());
    if degree == g.degree() {
        return g.clone();
    }
    let gens: Vec<Perm> = g
        .generators()
        .iter()
        .map(|p| {
            let mut images: Vec<Point> = p.images().to_vec();
            images.extend(g.degree() + 1..=degree);
            Perm::from_images(images).unwrap()
        })
        .collect();
    build(gens, degree)
}

/// Conjugacy class representatives of the perfect subgroups of `Sym(n)`,
/// the seeds from which cyclic extension reaches every subgroup class.
///
/// A perfect subgroup acts as a perfect transitive group on each nontrivial
/// orbit. For n <= 10 the perfect transitive groups of degree d are: d = 5
/// Alt(5); d = 6 PSL(2,5), Alt(6); d = 7 PSL(3,2), Alt(7); d = 8 PSL(2,7),
/// AGL(3,2), Alt(8); d = 9 PSL(2,8), Alt(9); d = 10 Alt(5) on pairs, Alt(6)
/// on partitions, the order-960 even-flip extension of Alt(5) over five
/// blocks of two, and Alt(10). The only multi-orbit shape that fits in
/// n <= 10 is two pentads, contributing the diagonal Alt(5) and
/// Alt(5) x Alt(5).
pub fn perfect_seed_groups(n: u32) -> Vec<Group> {
    assert!(n <= 10, "perfect seed list is curated for degree <= 10");
    let mut seeds = Vec::new();
    if n >= 5 {
        seeds.push(pad(&alternating_group(5), n));
    }
    if n >= 6 {
        seeds.push(pad(&psl2(5), n));
        seeds.push(pad(&alternating_group(6), n));
    }
    if n >= 7 {
        seeds.push(pad(&psl32_on_7(), n));
        seeds.push(pad(&alternating_group(7), n));
    }
    if n >= 8 {
        seeds.push(pad(&psl2(7), n));
        seeds.push(pad(&agl32_on_8(), n));
        seeds.push(pad(&alternating_group(8), n));
    }
    if n >= 9 {
        seeds.push(pad(&psl2(8), n));
        seeds.push(pad(&alternating_group(9), n));
    }
    if n >= 10 {
        seeds.push(pad(&a5_on_10_pairs(), n));
        seeds.push(pad(&a6_on_10_partitions(), n));
        seeds.push(pad(&even_flips_colon_a5_on_10(), n));
        seeds.push(pad(&a5_diagonal_on_10(), n));
        seeds.push(pad(&a5_times_a5_on_10(), n));
        seeds.push(pad(&alternating_group(10), n));
    }
    seeds
}

/// The eight transitive groups of degree 11, from the classical
/// classification of transitive groups of prime degree: the four soluble
/// Frobenius-type groups inside `AGL(1,11)`, plus `PSL(2,11)`, the sharply
/// 4-transitive group of order 7920, `Alt(11)` and `Sym(11)`. Every entry is
/// machine-verified (order and transitivity) at construction.
pub fn classical_degree_11() -> Vec<Group> {
    let translation = cycle("(1,2,3,4,5,6,7,8,9,10,11)", 11);
    // multiplication by a modulo 11 on residues 0..10 (point r+1)
    let mult = |a: u32| -> Perm {
        Perm::from_images((0..11).map(|r| (r * a) % 11 + 1).collect()).unwrap()
    };
    let affine = |a: u32, expected: u128| -> Group {
        let g = build(vec![translation.clone(), mult(a)], 11);
        assert_eq!(g.order(), expected);
        assert!(g.is_transitive());
        g
    };
    let c11 = build(vec![translation.clone()], 11);
    assert_eq!(c11.order(), 11);
    let groups = vec![
        c11,
        affine(10, 22),  // order-2 multiplier
        affine(3, 55),   // order-5 multiplier
        affine(2, 110),  // primitive root
        psl2_11_on_11(),
        m11_on_11(),
        alternating_group(11),
        symmetric_group(11),
    ];
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_have_expected_orders() {
        assert_eq!(alternating_group(6).order(), 360);
        assert_eq!(symmetric_group(6).order(), 720);
        assert_eq!(psl2(5).order(), 60);
        assert_eq!(psl2(7).order(), 168);
        assert_eq!(psl2(8).order(), 504);
        assert_eq!(psl32_on_7().order(), 168);
        assert_eq!(agl32_on_8().order(), 1344);
    }

    #[test]
    fn degree_eleven_list_is_verified() {
        let groups = classical_degree_11();
        let orders: Vec<u128> = groups.iter().map(|g| g.order()).collect();
        assert_eq!(
            orders,
            vec![11, 22, 55, 110, 660, 7920, 19_958_400, 39_916_800]
        );
        assert!(groups.iter().all(|g| g.is_transitive()));
    }

    #[test]
    fn degree_ten_seeds_are_transitive_or_padded() {
        let seeds = perfect_seed_groups(10);
        assert_eq!(seeds.len(), 16);
        for s in &seeds {
            assert_eq!(s.degree(), 10);
            assert_eq!(s.derived_series().len(), 1, "seed must be perfect");
        }
        assert_eq!(even_flips_colon_a5_on_10().order(), 960);
    }

    #[test]
    fn psl2_seven_on_eight_is_two_transitive() {
        let g = psl2(7);
        assert_eq!(g.degree(), 8);
        let stab = g.point_stabilizer(8).unwrap();
        assert_eq!(stab.order(), 21);
    }
}
