//! Permutations of `{0, .., degree-1}` acting on the right.
//!
//! Points are 0-based internally. The text forms (cycle notation and the
//! one-line image table) are 1-based, so `(1 2)` swaps points 0 and 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table, checking bijectivity.
    pub fn from_images<I>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image table {:?} is not a bijection of 0..{}",
                    images, degree
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.iter().map(|&x| x as usize)).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based disjoint or overlapping cycles,
    /// applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut perm = Permutation::identity(degree);
        for cycle in cycles {
            let mut seen = std::collections::HashSet::new();
            for &x in cycle {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside degree {}",
                        x + 1,
                        degree
                    )));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated within a cycle",
                        x + 1
                    )));
                }
            }
            let mut step = Permutation::identity(degree);
            for (i, &x) in cycle.iter().enumerate() {
                step.images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
            perm = perm.then(&step);
        }
        Ok(perm)
    }

    /// A transposition of two 0-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(degree, &[vec![a, b]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `x^self`.
    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`: `x^(self*other) = (x^self)^other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Same as [`compose`](Self::compose) but panics on a degree mismatch.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point. 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Parses disjoint-cycle notation such as `(1 2)(3 4 5)` or `()` with an
    /// explicit degree.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        if let Some(&max) = cycles.iter().flatten().max() {
            if max > degree {
                return Err(Error::InvalidPermutation(format!(
                    "point {} outside degree {}",
                    max, degree
                )));
            }
        }
        let zero_based: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|c| c.into_iter().map(|x| x - 1).collect())
            .collect();
        Self::from_cycles(degree, &zero_based)
    }

    /// Parses a 1-based one-line image table such as `3 1 2`.
    pub fn parse_images(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&x| x >= 1)
                    .map(|x| x - 1)
                    .ok_or_else(|| Error::Parse(format!("bad image entry {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }

    /// One-line 1-based image table.
    pub fn to_image_string(&self) -> String {
        self.images
            .iter()
            .map(|x| (x + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {:?}", s)))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {:?}", s)))?;
        let body = &open[..close];
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&x| x >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad point {:?} in {:?}", t, s)))
            })
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Cycle notation if the string contains `(`, otherwise an image table. In
/// cycle notation the degree is the largest point mentioned.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains('(') {
            let degree = parse_cycle_list(s)?
                .iter()
                .flatten()
                .copied()
                .max()
                .unwrap_or(0);
            Self::parse_cycles(s, degree)
        } else {
            Self::parse_images(s)
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of the given degree in lexicographic order of image table.
pub fn all_permutations(degree: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..degree as u32).collect();
    loop {
        out.push(Permutation::from_images_unchecked(current.clone()));
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

/// Advances to the lexicographically next arrangement; false after the last.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(s, degree).unwrap()
    }

    #[test]
    fn compose_identity() {
        assert_eq!(
            Permutation::identity(3).compose(&p("(1 2 3)", 3)).unwrap(),
            p("(1 2 3)", 3)
        );
    }

    #[test]
    fn compose_involution() {
        let t = p("(1 2)", 2);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_chains_left_to_right() {
        // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
        let r = p("(1 2)", 3).compose(&p("(2 3)", 3)).unwrap();
        assert_eq!(r.to_image_string(), "3 1 2");
        assert_eq!(r.to_string(), "(1 3 2)");
    }

    #[test]
    fn compose_degree_mismatch() {
        assert_eq!(
            p("(1 2)", 2).compose(&p("(1 2)", 3)),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn parse_and_print() {
        let q: Permutation = "(1 2)(3 4 5)".parse().unwrap();
        assert_eq!(q.degree(), 5);
        assert_eq!(q.to_string(), "(1 2)(3 4 5)");
        assert_eq!("()".parse::<Permutation>().unwrap().degree(), 0);
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let r: Permutation = "3 1 2".parse().unwrap();
        assert_eq!(r.to_string(), "(1 3 2)");
        assert_eq!(p("(5 3 4)", 5).to_string(), "(3 4 5)");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("(1 2".parse::<Permutation>().is_err());
        assert!("(1 1)".parse::<Permutation>().is_err());
        assert!("1 1 2".parse::<Permutation>().is_err());
        assert!("(0 1)".parse::<Permutation>().is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
    }

    #[test]
    fn all_permutations_sorted() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all[0].is_identity());
        assert_eq!(all_permutations(0).len(), 1);
    }

    #[test]
    fn parity() {
        assert!(p("(1 2 3)", 3).is_even());
        assert!(!p("(1 2)", 3).is_even());
        assert!(p("(1 2)(3 4)", 4).is_even());
    }

    fn arb_perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_degree)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_cancels(q in arb_perm(9)) {
            prop_assert!(q.compose(&q.inverse()).unwrap().is_identity());
            prop_assert!(q.inverse().compose(&q).unwrap().is_identity());
        }

        #[test]
        fn text_forms_round_trip(q in arb_perm(9)) {
            prop_assert_eq!(Permutation::parse_cycles(&q.to_string(), q.degree()).unwrap(), q.clone());
            prop_assert_eq!(Permutation::parse_images(&q.to_image_string()).unwrap(), q);
        }
    }
}
