//! Permutations of `{1..n}` stored in one-line image form.
//!
//! Points are 1-based in every textual form and 0-based internally. The
//! composition convention is "apply the right factor first": `(p * q)(i) =
//! p(q(i))`, which makes `x * g * x.inverse()` the adjoint action `x ⊳ g`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num::integer::lcm;
use smallvec::SmallVec;
use thiserror::Error;

/// Largest supported degree; points are stored as bytes.
pub const MAX_DEGREE: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {0} exceeds the supported maximum of {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("malformed permutation {text:?}: {reason}")]
    Malformed { text: String, reason: String },
}

type Images = SmallVec<[u8; 16]>;

/// A bijection of `{1..n}`; `images[i]` is the (0-based) image of point `i`.
///
/// The derived ordering is lexicographic on the one-line image array, which
/// is the canonical element order used for every "minimal representative".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} too large");
        Permutation {
            images: (0..degree).map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let degree = images.len();
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut seen = vec![false; degree];
        for &x in images {
            if x >= degree {
                return Err(PermError::PointOutOfRange {
                    point: x + 1,
                    degree,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::RepeatedPoint(x + 1));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles given with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle.iter() {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(PermError::RepeatedPoint(p));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Permutation::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 0-based one-line images.
    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    fn check_degree(&self, other: &Self) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self ∘ q`: apply `q` first, then `self`.
    pub fn compose(&self, q: &Self) -> Result<Self, PermError> {
        self.check_degree(q)?;
        Ok(self.compose_unchecked(q))
    }

    #[inline]
    fn compose_unchecked(&self, q: &Self) -> Self {
        Permutation {
            images: q.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images: Images = SmallVec::from_elem(0, self.degree());
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// The adjoint action `self ⊳ g = self · g · self⁻¹`.
    pub fn conjugate(&self, g: &Self) -> Result<Self, PermError> {
        self.check_degree(g)?;
        Ok(self.conjugate_unchecked(g))
    }

    #[inline]
    pub(crate) fn conjugate_unchecked(&self, g: &Self) -> Self {
        let mut images: Images = SmallVec::from_elem(0, self.degree());
        for (i, &gi) in g.images.iter().enumerate() {
            images[self.images[i] as usize] = self.images[gi as usize];
        }
        Permutation { images }
    }

    /// `m`-th power; negative exponents go through the inverse.
    pub fn pow(&self, m: i64) -> Self {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let e = m.unsigned_abs();
        // Walk each cycle once instead of repeated squaring.
        let n = self.degree();
        let mut images: Images = SmallVec::from_elem(0, n);
        let mut done = vec![false; n];
        let mut cycle = Vec::with_capacity(n);
        for start in 0..n {
            if done[start] {
                continue;
            }
            cycle.clear();
            let mut j = start;
            while !done[j] {
                done[j] = true;
                cycle.push(j);
                j = base.apply(j);
            }
            let len = cycle.len() as u64;
            let shift = (e % len) as usize;
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + shift) % cycle.len()] as u8;
            }
        }
        Permutation { images }
    }

    /// Disjoint cycles (0-based), each rotated to start at its least point,
    /// ordered by least point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] || self.apply(start) == start {
                done[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !done[j] {
                done[j] = true;
                cycle.push(j);
                j = self.apply(j);
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted multiset of cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat(1).take(self.degree() - moved));
        lens.sort_unstable();
        lens
    }

    /// Least `m ≥ 1` with `self^m = ()`.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Embeds into a larger degree, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Result<Self, PermError> {
        if degree < self.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: degree,
            });
        }
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut images = self.images.clone();
        images.extend((self.degree()..degree).map(|i| i as u8));
        Ok(Permutation { images })
    }

    /// Relabels point `i` as `i + offset` inside a permutation of `degree`
    /// points; used for block (direct product) embeddings.
    pub fn shifted(&self, offset: usize, degree: usize) -> Result<Self, PermError> {
        if offset + self.degree() > degree {
            return Err(PermError::DegreeMismatch {
                left: offset + self.degree(),
                right: degree,
            });
        }
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut images: Images = (0..degree).map(|i| i as u8).collect();
        for (i, x) in self.images().enumerate() {
            images[i + offset] = (x + offset) as u8;
        }
        Ok(Permutation { images })
    }

    /// The action on the block `offset+1 ..= offset+len`, relabelled to
    /// `1..=len`; the block must be invariant.
    pub fn block(&self, offset: usize, len: usize) -> Result<Self, PermError> {
        if offset + len > self.degree() {
            return Err(PermError::DegreeMismatch {
                left: offset + len,
                right: self.degree(),
            });
        }
        let mut images = Images::with_capacity(len);
        for i in offset..offset + len {
            let x = self.images[i] as usize;
            if x < offset || x >= offset + len {
                return Err(PermError::Malformed {
                    text: self.to_string(),
                    reason: format!("does not preserve the block {}..={}", offset + 1, offset + len),
                });
            }
            images.push((x - offset) as u8);
        }
        Ok(Permutation { images })
    }

    /// Canonical cycle notation, e.g. `(1 2)(3 4 5)`, identity as `()`.
    pub fn format_cycles(&self) -> String {
        self.to_string()
    }

    /// Parses cycle notation (`"(1 2)(3 4 5)"`, `"()"`, commas allowed) or
    /// one-line notation (`"[2,1,3]"`) for the given degree.
    ///
    /// A cycle written without separators, such as `(12354)`, is read digit by
    /// digit when `degree ≤ 9`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        let malformed = |reason: &str| PermError::Malformed {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| malformed("missing ']'"))?;
            let points = parse_points(inner, degree).map_err(|r| malformed(&r))?;
            if points.len() != degree {
                return Err(malformed(&format!(
                    "one-line notation has {} entries, expected {degree}",
                    points.len()
                )));
            }
            let images: Vec<usize> = points.iter().map(|p| p - 1).collect();
            return Permutation::from_images(&images);
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| malformed("expected '('"))?;
            let close = body.find(')').ok_or_else(|| malformed("unclosed cycle"))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(malformed("nested '('"));
            }
            let points = parse_points(inner, degree).map_err(|r| malformed(&r))?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        if t.is_empty() {
            return Err(malformed("empty input"));
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(degree, &refs)
    }
}

fn parse_points(inner: &str, degree: usize) -> Result<Vec<usize>, String> {
    let tokens: Vec<&str> = inner
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    let compact = tokens.len() == 1 && tokens[0].len() > 1 && degree <= 9;
    let mut points = Vec::new();
    if compact {
        for c in tokens[0].chars() {
            let p = c.to_digit(10).ok_or_else(|| format!("bad point {c:?}"))?;
            points.push(p as usize);
        }
    } else {
        for tok in tokens {
            let p: usize = tok.parse().map_err(|_| format!("bad point {tok:?}"))?;
            points.push(p);
        }
    }
    Ok(points)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parses with the degree inferred from the largest point mentioned. Prefer
/// [`Permutation::parse_cycles`] whenever the ambient degree is known.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.starts_with('[') {
            let n = t.matches(|c: char| c == ',').count() + 1;
            return Permutation::parse_cycles(t, n);
        }
        let max = t
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|tok| tok.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Permutation::parse_cycles(t, max)
    }
}

/// Composition; panics on a degree mismatch (use [`Permutation::compose`]
/// for a fallible version).
impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;

    #[inline]
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}
