//! Distinguishing numbers of finite permutation-group actions.
//!
//! A coloring of the points of a group action is *distinguishing* when the
//! identity is the only group element that preserves it, and the
//! distinguishing number is the fewest colors for which one exists. This
//! crate provides:
//!
//! - permutations, generator closure and the natural, grid and wreath
//!   actions ([`perm`], [`group`], [`action`]);
//! - brute-force distinguishing tests, counts and orbit representatives
//!   ([`distinguishing`]);
//! - the exact formulas for wreath products and for `S_m x S_n` on the grid
//!   ([`formulas`]);
//! - an explicit constructor and two independent checkers for distinguishing
//!   grid colorings ([`grid`]).

pub mod action;
pub mod distinguishing;
pub mod error;
pub mod formulas;
pub mod grid;
pub mod group;
pub mod perm;

pub use action::{ActionKind, GroupAction, GroupElement, Point, WreathElement};
pub use distinguishing::{
    count_distinguishing_colorings, distinguishing_number, is_color_preserving, is_distinguishing,
    orbit_representatives, wreath_coloring, Coloring, ColoringOrbitSet,
};
pub use error::{Error, Result};
pub use formulas::{
    an_wreath_number, binomial, direct_product_distinguishing_number, f, grid_feasible,
    nr_alternating, nr_symmetric, sn_wreath_number, wreath_distinguishing_number, FkMemo,
};
pub use grid::{
    complement, construct, extend, feasible_oracle, square_coloring, verify, GridColoring,
};
pub use group::FiniteGroup;
pub use perm::Permutation;
