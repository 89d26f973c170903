//! Exact arithmetic on finite permutations of `[d] = {0, …, d-1}`.
//!
//! A [`Permutation`] is stored as a dense image array: position `i` holds the
//! image of `i`. The whole crate uses the *right-action* exponent convention
//! `i^(pq) = (i^p)^q`, so `compose(p, q)` is "first `p`, then `q`":
//! `compose(p, q).image(i) == q.image(p.image(i))`.
//!
//! Degrees are immutable: operations on permutations of different degrees are
//! errors, never implicit embeddings.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

/// Errors produced by permutation construction and arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    /// Two permutations of different degrees were combined.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    /// The provided image array is not a bijection of `[d]`.
    #[error("images are not a bijection of [{0}]")]
    NotBijective(usize),
    /// A point outside `[d]` was referenced.
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    /// Cycle-notation text could not be parsed.
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
}

/// A permutation of `[d]`, stored as a dense image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of degree `d`.
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d).collect(),
        }
    }

    /// Builds a permutation from an explicit image array, validating that it
    /// is a bijection of `[d]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(PermError::NotBijective(d));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `d` from disjoint cycles given as point
    /// lists. Points absent from every cycle are fixed.
    pub fn from_cycles(d: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..d).collect();
        for cycle in cycles {
            for (idx, &pt) in cycle.iter().enumerate() {
                if pt >= d {
                    return Err(PermError::PointOutOfRange {
                        point: pt,
                        degree: d,
                    });
                }
                let next = cycle[(idx + 1) % cycle.len()];
                images[pt] = next;
            }
        }
        // Re-validate: overlapping "cycles" could have produced a non-bijection.
        Permutation::from_images(images)
    }

    /// The degree `d`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image of a point: `i^p`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Read-only view of the dense image array.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// True if this is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Right-action composition: `i^(pq) = (i^p)^q`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| q.images[x]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Conjugate `self^g = g⁻¹ · self · g` (right-action convention).
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation, PermError> {
        g.inverse().compose(self)?.compose(g)
    }

    /// `p^m` for any integer exponent `m` (negative means inverse powers).
    pub fn power(&self, m: i64) -> Permutation {
        let mut base = if m < 0 { self.inverse() } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same degree");
            }
            base = base.compose(&base).expect("same degree");
            e >>= 1;
        }
        acc
    }

    /// The disjoint cycles of length ≥ 2, each rotated to start at its
    /// smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// The multiset of cycle lengths (fixed points contribute 1s), as a
    /// sorted map length → multiplicity.
    pub fn cycle_type(&self) -> BTreeMap<usize, usize> {
        let mut ct = BTreeMap::new();
        let mut moved = 0;
        for c in self.cycles() {
            *ct.entry(c.len()).or_insert(0) += 1;
            moved += c.len();
        }
        let fixed = self.degree() - moved;
        if fixed > 0 {
            *ct.entry(1).or_insert(0) += fixed;
        }
        ct
    }

    /// The sign, computed as (−1)^(d − number of cycles).
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The set of moved points, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i != x)
            .map(|(i, _)| i)
            .collect()
    }

    /// The order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Parses disjoint-cycle notation with 0-based points, e.g. `"(1 3 4 2)"`.
    /// `"()"` denotes the identity. Points not mentioned are fixed.
    pub fn parse_cycles(d: usize, text: &str) -> Result<Self, PermError> {
        let text = text.trim();
        if text.is_empty() || text == "()" {
            return Ok(Permutation::identity(d));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let rest2 = rest.trim_start();
            if rest2.is_empty() {
                break;
            }
            if !rest2.starts_with('(') {
                return Err(PermError::Parse(format!("expected '(' in {text:?}")));
            }
            let close = rest2
                .find(')')
                .ok_or_else(|| PermError::Parse(format!("unbalanced '(' in {text:?}")))?;
            let inner = &rest2[1..close];
            let points: Result<Vec<usize>, _> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad point {s:?}")))
                })
                .collect();
            cycles.push(points?);
            rest = &rest2[close + 1..];
        }
        Permutation::from_cycles(d, &cycles)
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation with 0-based points, fixed points suppressed;
    /// the identity renders as `"()"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, pt) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[d={}]{}", self.degree(), self)
    }
}
