//! Finite permutation groups stored as a fully enumerated, sorted element list.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};

/// Default element cap for [`FiniteGroup::closure`].
pub const DEFAULT_MAX_ELEMENTS: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Sorted by image table; the identity is always first.
    elements: Vec<Permutation>,
}

impl FiniteGroup {
    /// Breadth-first closure of `generators` with the default element cap.
    pub fn generated_by(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::closure(degree, generators, DEFAULT_MAX_ELEMENTS)
    }

    pub fn closure(
        degree: usize,
        generators: Vec<Permutation>,
        max_elements: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= max_elements {
                        return Err(Error::ElementCapExceeded { cap: max_elements });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(FiniteGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Assembles a group from an element list already known to be closed.
    pub(crate) fn from_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(elements.first().is_some_and(|e| e.is_identity()));
        FiniteGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_elements(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    /// `S_n`, enumerated directly and generated by `(1 2)` and `(1 2 .. n)`.
    pub fn symmetric(n: usize) -> Self {
        let mut generators = Vec::new();
        if n >= 2 {
            generators.push(Permutation::transposition(n, 0, 1).unwrap());
        }
        if n >= 3 {
            generators.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        Self::from_elements(n, generators, all_permutations(n))
    }

    /// `A_n`, enumerated directly and generated by the 3-cycles `(1 2 i)`.
    pub fn alternating(n: usize) -> Self {
        let generators = (2..n)
            .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]]).unwrap())
            .collect();
        let elements = all_permutations(n)
            .into_iter()
            .filter(|p| p.is_even())
            .collect();
        Self::from_elements(n, generators, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    /// All elements except the identity, in canonical order.
    pub fn non_identity(&self) -> &[Permutation] {
        &self.elements[1..]
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }
}
