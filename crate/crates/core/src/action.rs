//! Group actions on finite point sets.
//!
//! Every action materializes its group as permutations of the point indices
//! `0..degree`, so the coloring engine can treat all variants alike. The
//! structured element types ([`GroupElement::Product`] and [`WreathElement`])
//! exist so that the product rules can be applied and checked directly.
//!
//! Product points are pairs enumerated in row-major order: the grid point
//! `(row, col)` has index `row * cols + col`, and the wreath point `(x, y)`
//! has index `x * |Y| + y`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_MAX_ELEMENTS};
use crate::perm::{all_permutations, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// `S_n` on `[n]`.
    Symmetric(usize),
    /// `A_n` on `[n]`.
    Alternating(usize),
    /// `S_rows x S_cols` on the `rows x cols` grid.
    Grid { rows: usize, cols: usize },
    /// `G wr_Y H` on `X x Y`.
    Wreath {
        inner: Box<GroupAction>,
        outer: Box<GroupAction>,
    },
    /// Any permutation group given by generators.
    Generated,
}

/// A point of an action, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Single(usize),
    Pair(usize, usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Single(x) => write!(f, "{}", x + 1),
            Point::Pair(x, y) => write!(f, "({},{})", x + 1, y + 1),
        }
    }
}

/// An element of `G^Y x| H`: one inner element per outer point plus an outer
/// element. `f[y]` is a permutation of the inner points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub f: Vec<Permutation>,
    pub h: Permutation,
}

impl WreathElement {
    /// `(1, 1)`: the constant-identity map with the identity of `H`.
    pub fn identity(inner_degree: usize, outer_degree: usize) -> Self {
        WreathElement {
            f: vec![Permutation::identity(inner_degree); outer_degree],
            h: Permutation::identity(outer_degree),
        }
    }

    /// `(f1, h1)(f2, h2) = (f1 * f2^(h1^-1), h1 h2)` where `(f^h)(y) = f(y^(h^-1))`,
    /// so the new map sends `y` to `f1(y) f2(y^h1)`.
    pub fn compose(&self, other: &WreathElement) -> Result<WreathElement> {
        if self.f.len() != other.f.len() {
            return Err(Error::DegreeMismatch {
                left: self.f.len(),
                right: other.f.len(),
            });
        }
        let f = (0..self.f.len())
            .map(|y| self.f[y].compose(&other.f[self.h.image(y)]))
            .collect::<Result<Vec<_>>>()?;
        Ok(WreathElement {
            f,
            h: self.h.compose(&other.h)?,
        })
    }

    /// `(x, y)^(f, h) = (x^f(y), y^h)`.
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.f[y].image(x), self.h.image(y))
    }

    /// The induced permutation of `X x Y` in row-major point order.
    pub fn to_permutation(&self) -> Permutation {
        let ny = self.h.degree();
        let nx = self.f.first().map_or(0, Permutation::degree);
        let mut images = vec![0u32; nx * ny];
        for x in 0..nx {
            for y in 0..ny {
                let (x2, y2) = self.apply(x, y);
                images[x * ny + y] = (x2 * ny + y2) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupElement {
    Perm(Permutation),
    /// A row permutation followed by a column permutation.
    Product {
        rows: Permutation,
        cols: Permutation,
    },
    Wreath(WreathElement),
}

impl GroupElement {
    /// `self` then `other`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => Ok(GroupElement::Perm(a.compose(b)?)),
            (
                GroupElement::Product { rows: r1, cols: c1 },
                GroupElement::Product { rows: r2, cols: c2 },
            ) => Ok(GroupElement::Product {
                rows: r1.compose(r2)?,
                cols: c1.compose(c2)?,
            }),
            (GroupElement::Wreath(a), GroupElement::Wreath(b)) => {
                Ok(GroupElement::Wreath(a.compose(b)?))
            }
            _ => Err(Error::InvalidArgument(
                "cannot compose elements of different kinds".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    kind: ActionKind,
    group: FiniteGroup,
}

impl GroupAction {
    pub fn symmetric(n: usize) -> Self {
        GroupAction {
            kind: ActionKind::Symmetric(n),
            group: FiniteGroup::symmetric(n),
        }
    }

    pub fn alternating(n: usize) -> Self {
        GroupAction {
            kind: ActionKind::Alternating(n),
            group: FiniteGroup::alternating(n),
        }
    }

    /// The trivial group on `n` points.
    pub fn trivial(n: usize) -> Self {
        GroupAction {
            kind: ActionKind::Generated,
            group: FiniteGroup::trivial(n),
        }
    }

    /// The permutation group generated by `generators` acting on its points.
    pub fn generated(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generated_capped(degree, generators, DEFAULT_MAX_ELEMENTS)
    }

    pub fn generated_capped(
        degree: usize,
        generators: Vec<Permutation>,
        max_elements: usize,
    ) -> Result<Self> {
        Ok(GroupAction {
            kind: ActionKind::Generated,
            group: FiniteGroup::closure(degree, generators, max_elements)?,
        })
    }

    /// Wraps an existing group.
    pub fn from_group(group: FiniteGroup) -> Self {
        GroupAction {
            kind: ActionKind::Generated,
            group,
        }
    }

    /// `S_rows x S_cols` on the grid, all `rows! * cols!` elements materialized.
    pub fn grid(rows: usize, cols: usize) -> Result<Self> {
        Self::grid_capped(rows, cols, DEFAULT_MAX_ELEMENTS)
    }

    pub fn grid_capped(rows: usize, cols: usize, max_elements: usize) -> Result<Self> {
        let order = factorial_big(rows) * factorial_big(cols);
        if order > BigUint::from(max_elements) {
            return Err(Error::ElementCapExceeded { cap: max_elements });
        }
        let row_perms = all_permutations(rows);
        let col_perms = all_permutations(cols);
        let mut elements = Vec::with_capacity(row_perms.len() * col_perms.len());
        for sigma in &row_perms {
            for tau in &col_perms {
                elements.push(product_permutation(sigma, tau));
            }
        }
        let mut generators = Vec::new();
        for g in FiniteGroup::symmetric(rows).generators() {
            generators.push(product_permutation(g, &Permutation::identity(cols)));
        }
        for g in FiniteGroup::symmetric(cols).generators() {
            generators.push(product_permutation(&Permutation::identity(rows), g));
        }
        Ok(GroupAction {
            kind: ActionKind::Grid { rows, cols },
            group: FiniteGroup::from_elements(rows * cols, generators, elements),
        })
    }

    /// `G wr_Y H` acting on `X x Y` with all `|G|^|Y| |H|` elements materialized.
    pub fn wreath(inner: &GroupAction, outer: &GroupAction) -> Result<Self> {
        Self::wreath_capped(inner, outer, DEFAULT_MAX_ELEMENTS)
    }

    pub fn wreath_capped(
        inner: &GroupAction,
        outer: &GroupAction,
        max_elements: usize,
    ) -> Result<Self> {
        let nx = inner.degree();
        let ny = outer.degree();
        let order = wreath_order(inner.order(), ny, outer.order());
        if order > BigUint::from(max_elements) {
            return Err(Error::ElementCapExceeded { cap: max_elements });
        }
        let order = order.to_usize().expect("order below cap");
        let inner_elems = inner.group.elements();
        let mut elements = Vec::with_capacity(order);
        // odometer over the |G|^|Y| choices of f
        let mut digits = vec![0usize; ny];
        for h in outer.group.elements() {
            digits.iter_mut().for_each(|d| *d = 0);
            loop {
                let element = WreathElement {
                    f: digits.iter().map(|&d| inner_elems[d].clone()).collect(),
                    h: h.clone(),
                };
                elements.push(element.to_permutation());
                let mut pos = 0;
                while pos < ny {
                    digits[pos] += 1;
                    if digits[pos] < inner_elems.len() {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == ny {
                    break;
                }
            }
        }

        let mut generators = Vec::new();
        for y in 0..ny {
            for g in inner.group.generators() {
                let mut e = WreathElement::identity(nx, ny);
                e.f[y] = g.clone();
                generators.push(e.to_permutation());
            }
        }
        for h in outer.group.generators() {
            let mut e = WreathElement::identity(nx, ny);
            e.h = h.clone();
            generators.push(e.to_permutation());
        }

        Ok(GroupAction {
            kind: ActionKind::Wreath {
                inner: Box::new(inner.clone()),
                outer: Box::new(outer.clone()),
            },
            group: FiniteGroup::from_elements(nx * ny, generators, elements),
        })
    }

    pub fn kind(&self) -> &ActionKind {
        &self.kind
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn point_index(&self, point: &Point) -> Result<usize> {
        let out_of_range = || Error::PointNotInAction(point.to_string());
        let idx = match (&self.kind, *point) {
            (ActionKind::Grid { rows, cols }, Point::Pair(r, c)) if r < *rows && c < *cols => {
                r * cols + c
            }
            (ActionKind::Wreath { inner, outer }, Point::Pair(x, y))
                if x < inner.degree() && y < outer.degree() =>
            {
                x * outer.degree() + y
            }
            (ActionKind::Grid { .. } | ActionKind::Wreath { .. }, _) => return Err(out_of_range()),
            (_, Point::Single(x)) if x < self.degree() => x,
            _ => return Err(out_of_range()),
        };
        Ok(idx)
    }

    pub fn point_at(&self, index: usize) -> Point {
        match &self.kind {
            ActionKind::Grid { cols, .. } => Point::Pair(index / cols, index % cols),
            ActionKind::Wreath { outer, .. } => {
                Point::Pair(index / outer.degree(), index % outer.degree())
            }
            _ => Point::Single(index),
        }
    }

    /// The permutation of point indices induced by a structured element,
    /// checked for group membership.
    pub fn element_permutation(&self, element: &GroupElement) -> Result<Permutation> {
        let perm = match (&self.kind, element) {
            (
                ActionKind::Grid { rows, cols },
                GroupElement::Product {
                    rows: sigma,
                    cols: tau,
                },
            ) => {
                if sigma.degree() != *rows || tau.degree() != *cols {
                    return Err(Error::ElementNotInGroup);
                }
                product_permutation(sigma, tau)
            }
            (ActionKind::Wreath { inner, outer }, GroupElement::Wreath(w)) => {
                if w.h.degree() != outer.degree()
                    || w.f.len() != outer.degree()
                    || w.f.iter().any(|g| !inner.group.contains(g))
                    || !outer.group.contains(&w.h)
                {
                    return Err(Error::ElementNotInGroup);
                }
                w.to_permutation()
            }
            (_, GroupElement::Perm(p)) => p.clone(),
            _ => return Err(Error::ElementNotInGroup),
        };
        if !self.group.contains(&perm) {
            return Err(Error::ElementNotInGroup);
        }
        Ok(perm)
    }

    /// `point^element` under the right action.
    pub fn apply(&self, point: &Point, element: &GroupElement) -> Result<Point> {
        let idx = self.point_index(point)?;
        match (&self.kind, point, element) {
            (ActionKind::Grid { .. }, Point::Pair(r, c), GroupElement::Product { rows, cols }) => {
                self.element_permutation(element)?;
                Ok(Point::Pair(rows.image(*r), cols.image(*c)))
            }
            (ActionKind::Wreath { .. }, Point::Pair(x, y), GroupElement::Wreath(w)) => {
                self.element_permutation(element)?;
                let (x2, y2) = w.apply(*x, *y);
                Ok(Point::Pair(x2, y2))
            }
            _ => {
                let perm = self.element_permutation(element)?;
                Ok(self.point_at(perm.image(idx)))
            }
        }
    }

    /// True iff only the identity fixes every point.
    pub fn is_faithful(&self) -> bool {
        self.group.non_identity().iter().all(|g| !g.is_identity())
    }
}

/// `(i, j) -> (i^sigma, j^tau)` on the row-major grid.
fn product_permutation(sigma: &Permutation, tau: &Permutation) -> Permutation {
    let cols = tau.degree();
    let mut images = vec![0u32; sigma.degree() * cols];
    for i in 0..sigma.degree() {
        for j in 0..cols {
            images[i * cols + j] = (sigma.image(i) * cols + tau.image(j)) as u32;
        }
    }
    Permutation::from_images_unchecked(images)
}

pub(crate) fn factorial_big(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// `|G|^|Y| * |H|`.
pub fn wreath_order(inner_order: usize, outer_degree: usize, outer_order: usize) -> BigUint {
    BigUint::from(inner_order).pow(outer_degree as u32) * outer_order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn grid_acts_coordinatewise() {
        let a = GroupAction::grid(2, 2).unwrap();
        let e = GroupElement::Product {
            rows: p("(1 2)", 2),
            cols: Permutation::identity(2),
        };
        assert_eq!(a.apply(&Point::Pair(0, 0), &e).unwrap(), Point::Pair(1, 0));
        assert_eq!(a.order(), 4);
    }

    #[test]
    fn wreath_apply_uses_f_of_y() {
        let s2 = GroupAction::symmetric(2);
        let w = GroupAction::wreath(&s2, &s2).unwrap();
        let e = GroupElement::Wreath(WreathElement {
            f: vec![p("(1 2)", 2), Permutation::identity(2)],
            h: Permutation::identity(2),
        });
        assert_eq!(w.apply(&Point::Pair(0, 0), &e).unwrap(), Point::Pair(1, 0));
        assert_eq!(w.apply(&Point::Pair(0, 1), &e).unwrap(), Point::Pair(0, 1));
    }

    #[test]
    fn identity_fixes_points() {
        let a = GroupAction::alternating(4);
        let id = GroupElement::Perm(Permutation::identity(4));
        for x in 0..4 {
            assert_eq!(a.apply(&Point::Single(x), &id).unwrap(), Point::Single(x));
        }
        let w =
            GroupAction::wreath(&GroupAction::symmetric(3), &GroupAction::symmetric(2)).unwrap();
        let id = GroupElement::Wreath(WreathElement::identity(3, 2));
        for x in 0..3 {
            for y in 0..2 {
                assert_eq!(w.apply(&Point::Pair(x, y), &id).unwrap(), Point::Pair(x, y));
            }
        }
    }

    #[test]
    fn membership_errors() {
        let a = GroupAction::alternating(3);
        let t = GroupElement::Perm(p("(1 2)", 3));
        assert_eq!(
            a.apply(&Point::Single(0), &t),
            Err(Error::ElementNotInGroup)
        );
        let id = GroupElement::Perm(Permutation::identity(3));
        assert!(matches!(
            a.apply(&Point::Single(3), &id),
            Err(Error::PointNotInAction(_))
        ));
        let g = GroupAction::grid(2, 3).unwrap();
        assert!(g.apply(&Point::Single(0), &id).is_err());
        assert!(g.apply(&Point::Pair(2, 0), &id).is_err());
    }

    #[test]
    fn wreath_orders() {
        let s2 = GroupAction::symmetric(2);
        let s3 = GroupAction::symmetric(3);
        let w = GroupAction::wreath(&s2, &s2).unwrap();
        assert_eq!((w.order(), w.degree()), (8, 4));
        let w = GroupAction::wreath(&s3, &s2).unwrap();
        assert_eq!((w.order(), w.degree()), (72, 6));
        let w = GroupAction::wreath(&GroupAction::trivial(1), &s2).unwrap();
        assert_eq!((w.order(), w.degree()), (2, 2));
    }

    #[test]
    fn wreath_closure_agrees() {
        for (inner, outer) in [
            (GroupAction::symmetric(2), GroupAction::symmetric(2)),
            (GroupAction::symmetric(2), GroupAction::symmetric(3)),
            (GroupAction::alternating(3), GroupAction::symmetric(3)),
        ] {
            let w = GroupAction::wreath(&inner, &outer).unwrap();
            let closed =
                FiniteGroup::generated_by(w.degree(), w.group().generators().to_vec()).unwrap();
            assert_eq!(closed.elements(), w.group().elements());
            assert!(w.is_faithful());
        }
    }

    #[test]
    fn wreath_respects_cap() {
        let s3 = GroupAction::symmetric(3);
        assert_eq!(
            GroupAction::wreath_capped(&s3, &s3, 1000),
            Err(Error::ElementCapExceeded { cap: 1000 })
        );
    }

    #[test]
    fn grid_respects_cap() {
        assert!(GroupAction::grid_capped(4, 4, 500).is_err());
        assert_eq!(GroupAction::grid_capped(4, 4, 576).unwrap().order(), 576);
    }
}
