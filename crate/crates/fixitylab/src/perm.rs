//! Permutations of `{1..n}` with exact arithmetic and cycle-notation I/O.
//!
//! Points are 1-based everywhere in the public API. The composition
//! convention is the right action: `compose(p, q)` is "apply `p`, then `q`",
//! so that `a^(pq) = (a^p)^q`.

use std::fmt;

use thiserror::Error;

/// A point of the permutation domain, 1-based.
pub type Point = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("point {point} out of range 1..={degree}")]
    OutOfRange { point: u64, degree: u32 },
    #[error("point {point} appears more than once")]
    RepeatedPoint { point: Point },
    #[error("image list of length {len} is not a bijection of 1..={degree}")]
    NotABijection { len: usize, degree: u32 },
    #[error("degree must be positive")]
    ZeroDegree,
}

/// A bijection of `{1..n}`. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // images[i] is the image of point i+1, as a 1-based value.
    images: Vec<Point>,
}

impl Perm {
    pub fn identity(degree: u32) -> Perm {
        assert!(degree >= 1, "degree must be positive");
        Perm {
            images: (1..=degree).collect(),
        }
    }

    /// Builds a permutation from the list of images of `1..=n` (1-based values).
    pub fn from_images(images: Vec<Point>) -> Result<Perm, PermError> {
        if images.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let degree = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v > degree {
                return Err(PermError::NotABijection {
                    len: images.len(),
                    degree,
                });
            }
            if seen[(v - 1) as usize] {
                return Err(PermError::NotABijection {
                    len: images.len(),
                    degree,
                });
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of a point under this permutation.
    #[inline]
    pub fn apply(&self, point: Point) -> Point {
        debug_assert!(point >= 1 && point <= self.degree());
        self.images[(point - 1) as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    /// Right-action composition: apply `self`, then `other`.
    ///
    /// Panics on degree mismatch; mixed-degree inputs are rejected with a
    /// typed error at the group construction boundary.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Perm {
            images: self.images.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Perm { images }
    }

    /// Conjugate `self^other = other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        // (other^-1 self other)(x) = other(self(other^-1(x))); build directly
        // by relabeling: point other(i) maps to other(self(i)).
        assert_eq!(self.degree(), other.degree(), "degree mismatch in conjugate");
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(other.apply(i as u32 + 1) - 1) as usize] = other.apply(v);
        }
        Perm { images }
    }

    /// Least `m >= 1` with `self^m = identity`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut ord: u64 = 1;
        for cycle in self.cycles() {
            ord = lcm(ord, cycle.len() as u64);
        }
        ord
    }

    /// Points fixed by this permutation, sorted ascending.
    pub fn fixed_points(&self) -> Vec<Point> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i as u32 + 1)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    pub fn count_fixed_points(&self) -> u32 {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i as u32 + 1)
            .count() as u32
    }

    /// Nontrivial cycles, each starting at its least point, sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut cycle = vec![start as u32 + 1];
            let mut p = self.images[start];
            while p != start as u32 + 1 {
                seen[(p - 1) as usize] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Canonical cycle notation: cycles sorted by least moved point, each cycle
    /// starting at its least point; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_owned();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&p.to_string());
            }
            out.push(')');
        }
        out
    }

    /// Parses the cycle grammar `perm := "()" | cycle+` with
    /// `cycle := "(" int ("," int)* ")"`. Whitespace is allowed between
    /// tokens, never inside integers. Cycles must be disjoint.
    pub fn parse_cycles(text: &str, degree: u32) -> Result<Perm, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let tokens = tokenize(text)?;
        let cycles = parse_cycle_list(&tokens, text.len())?;

        let mut images: Vec<Point> = (1..=degree).collect();
        let mut used = vec![false; degree as usize];
        for cycle in &cycles {
            for &(point, pos) in cycle {
                if point == 0 || point > degree as u64 {
                    return Err(PermError::OutOfRange { point, degree });
                }
                let p = point as u32;
                if used[(p - 1) as usize] {
                    let _ = pos;
                    return Err(PermError::RepeatedPoint { point: p });
                }
                used[(p - 1) as usize] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i].0 as u32;
                let to = cycle[(i + 1) % cycle.len()].0 as u32;
                images[(from - 1) as usize] = to;
            }
        }
        Ok(Perm { images })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Open(usize),
    Close(usize),
    Comma(usize),
    Int(u64, usize),
}

fn tokenize(text: &str) -> Result<Vec<Token>, PermError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'(' => {
                tokens.push(Token::Open(i));
                i += 1;
            }
            b')' => {
                tokens.push(Token::Close(i));
                i += 1;
            }
            b',' => {
                tokens.push(Token::Comma(i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                let mut value: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    value = value
                        .saturating_mul(10)
                        .saturating_add((bytes[i] - b'0') as u64);
                    i += 1;
                }
                tokens.push(Token::Int(value, start));
            }
            _ => {
                return Err(PermError::Syntax {
                    pos: i,
                    msg: format!("unexpected character {:?}", b as char),
                })
            }
        }
    }
    Ok(tokens)
}

type SpannedPoint = (u64, usize);

fn parse_cycle_list(tokens: &[Token], end: usize) -> Result<Vec<Vec<SpannedPoint>>, PermError> {
    let mut cycles: Vec<Vec<SpannedPoint>> = Vec::new();
    let mut iter = tokens.iter().peekable();
    if tokens.is_empty() {
        return Err(PermError::Syntax {
            pos: 0,
            msg: "empty input".to_owned(),
        });
    }
    while let Some(tok) = iter.next() {
        let open_pos = match tok {
            Token::Open(p) => *p,
            Token::Close(p) | Token::Comma(p) | Token::Int(_, p) => {
                return Err(PermError::Syntax {
                    pos: *p,
                    msg: "expected '('".to_owned(),
                })
            }
        };
        let mut cycle: Vec<SpannedPoint> = Vec::new();
        loop {
            match iter.next() {
                Some(Token::Close(_)) if cycle.is_empty() => break,
                Some(Token::Int(v, p)) => {
                    cycle.push((*v, *p));
                    match iter.next() {
                        Some(Token::Comma(_)) => continue,
                        Some(Token::Close(_)) => break,
                        Some(Token::Open(p)) | Some(Token::Int(_, p)) => {
                            return Err(PermError::Syntax {
                                pos: *p,
                                msg: "expected ',' or ')'".to_owned(),
                            })
                        }
                        None => {
                            return Err(PermError::Syntax {
                                pos: end,
                                msg: "unterminated cycle".to_owned(),
                            })
                        }
                    }
                }
                Some(Token::Open(p)) | Some(Token::Comma(p)) | Some(Token::Close(p)) => {
                    return Err(PermError::Syntax {
                        pos: *p,
                        msg: "expected a point".to_owned(),
                    })
                }
                None => {
                    return Err(PermError::Syntax {
                        pos: end,
                        msg: "unterminated cycle".to_owned(),
                    })
                }
            }
        }
        if cycle.is_empty() {
            // "()" denotes the identity and must stand alone.
            if !cycles.is_empty() || iter.peek().is_some() {
                return Err(PermError::Syntax {
                    pos: open_pos,
                    msg: "empty cycle is only valid as the whole identity token \"()\"".to_owned(),
                });
            }
            return Ok(Vec::new());
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: u32) -> Perm {
        Perm::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1,2,3)(4,5,6)", 6).images(), &[2, 3, 1, 5, 6, 4]);
        assert_eq!(p("()", 5), Perm::identity(5));
        assert_eq!(p("(2,5,3,6)(1,4)", 6).images(), &[4, 5, 6, 1, 3, 2]);
    }

    #[test]
    fn parse_is_whitespace_tolerant() {
        assert_eq!(p(" ( 1 , 2 )\t(3,4) ", 4).images(), &[2, 1, 4, 3]);
        assert_eq!(p("( )", 3), Perm::identity(3));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Perm::parse_cycles("(1,2)(2,3)", 3),
            Err(PermError::RepeatedPoint { point: 2 })
        ));
        assert!(matches!(
            Perm::parse_cycles("(1,1)", 3),
            Err(PermError::RepeatedPoint { point: 1 })
        ));
        assert!(matches!(
            Perm::parse_cycles("(1,2,10)", 9),
            Err(PermError::OutOfRange { point: 10, degree: 9 })
        ));
        assert!(matches!(
            Perm::parse_cycles("(0,1)", 4),
            Err(PermError::OutOfRange { point: 0, .. })
        ));
        assert!(matches!(
            Perm::parse_cycles("", 4),
            Err(PermError::Syntax { .. })
        ));
        assert!(matches!(
            Perm::parse_cycles("(1,2", 4),
            Err(PermError::Syntax { .. })
        ));
        assert!(matches!(
            Perm::parse_cycles("(1 2)", 4),
            Err(PermError::Syntax { .. })
        ));
        assert!(matches!(
            Perm::parse_cycles("()(1,2)", 4),
            Err(PermError::Syntax { .. })
        ));
        assert!(matches!(
            Perm::parse_cycles("garbled", 4),
            Err(PermError::Syntax { .. })
        ));
    }

    #[test]
    fn compose_follows_right_action() {
        let t = p("(1,2)", 3);
        assert!(t.compose(&t).is_identity());
        let c = p("(1,2,3)", 3);
        assert_eq!(c.compose(&Perm::identity(3)), c);
        assert_eq!(c.compose(&c), p("(1,3,2)", 3));
        // a^(pq) = (a^p)^q
        let q = p("(2,3)", 3);
        for a in 1..=3 {
            assert_eq!(c.compose(&q).apply(a), q.apply(c.apply(a)));
        }
    }

    #[test]
    fn inverse_order_fixed_points() {
        let g = p("(2,5,3,6)(1,4)", 6);
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(g.order(), 4);
        assert_eq!(Perm::identity(7).order(), 1);
        assert_eq!(Perm::identity(7).fixed_points().len(), 7);
        let c = p("(1,2,3)", 6);
        assert_eq!(c.fixed_points(), vec![4, 5, 6]);
    }

    #[test]
    fn cycle_string_is_canonical() {
        let g = p("(5,6)(2,1)", 6);
        assert_eq!(g.to_cycle_string(), "(1,2)(5,6)");
        assert_eq!(Perm::identity(4).to_cycle_string(), "()");
        let h = p("(3,1,2)", 3);
        assert_eq!(h.to_cycle_string(), "(1,2,3)");
    }

    #[test]
    fn identity_degree_is_explicit() {
        assert_ne!(Perm::identity(6), Perm::identity(5));
    }

    #[test]
    fn conjugate_relabels_cycles() {
        let g = p("(1,2,3)", 6);
        let h = p("(2,5,3,6)(1,4)", 6);
        // (1,2,3)^h = (h(1),h(2),h(3)) = (4,5,6)
        assert_eq!(g.conjugate_by(&h), p("(4,5,6)", 6));
        assert_eq!(
            g.conjugate_by(&h),
            h.inverse().compose(&g).compose(&h)
        );
    }
}
