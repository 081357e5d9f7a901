//! Recursive construction of a distinguishing `k`-coloring of the `m x n`
//! grid for every feasible `(m, n, k)`.
//!
//! Two colors: explicit small matrices, the square coloring, the even-height
//! family of [`even_height_family`] and its odd-height variant, each widened by
//! [`extend`] and mirrored past `2^(m-1)` columns by [`complement`]. Narrow
//! grids are built transposed. More colors: reuse the `k - 1` grid, widen it
//! with columns that use color `k`, or fall back to a transposed or
//! complemented `k`-color grid.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{complement, extend, square_coloring, GridColoring};
use crate::error::{Error, Result};
use crate::formulas::{column_count, f, grid_feasible};

const TWO_BY_ONE: &[&[u32]] = &[&[1], &[2]];
const TWO_BY_TWO: &[&[u32]] = &[&[1, 1], &[1, 2]];
const TWO_BY_THREE: &[&[u32]] = &[&[1, 1, 2], &[1, 2, 2]];

const THREE_BY_FOUR: &[&[u32]] = &[&[1, 1, 1, 2], &[1, 1, 2, 2], &[1, 2, 2, 2]];

const FOUR_BY_FOUR: &[&[u32]] = &[&[1, 1, 1, 2], &[1, 2, 2, 1], &[2, 1, 2, 2], &[2, 2, 2, 2]];

const FIVE_BY_FOUR: &[&[u32]] = &[
    &[1, 1, 1, 1],
    &[1, 1, 1, 2],
    &[1, 2, 2, 1],
    &[2, 1, 2, 2],
    &[2, 2, 2, 2],
];

fn literal(rows: &[&[u32]]) -> GridColoring {
    GridColoring::from_rows(rows.iter().map(|r| r.to_vec()).collect(), 2).expect("valid literal")
}

/// A distinguishing `k`-coloring of the `m x n` grid.
pub fn construct(m: usize, n: usize, k: usize) -> Result<GridColoring> {
    if !grid_feasible(m as u64, n as u64, k as u64)? {
        return Err(infeasible(m, n, k));
    }
    build(m, n, k)
}

fn infeasible(m: usize, n: usize, k: usize) -> Error {
    let reason = if m == 1 || n == 1 {
        format!(
            "a single line of {} cells needs {} colors",
            m.max(n),
            m.max(n)
        )
    } else {
        let fk = f(k as u64, m as u64).expect("k, m >= 2");
        let total = column_count(k as u64, m as u64);
        if (n as u64) < fk {
            format!("n = {} is below f_{}({}) = {}", n, k, m, fk)
        } else {
            format!("n = {} exceeds k^m - f_k(m) = {} - {}", n, total, fk)
        }
    };
    Error::Infeasible { m, n, k, reason }
}

fn build(m: usize, n: usize, k: usize) -> Result<GridColoring> {
    debug_assert!(grid_feasible(m as u64, n as u64, k as u64).unwrap());
    if m == 1 {
        return GridColoring::from_rows(vec![(1..=n as u32).collect()], k);
    }
    if k == 2 {
        return build_two_colors(m, n);
    }
    if m <= k {
        return build_short(m, n, k);
    }
    build_more_colors(m, n, k)
}

/// `k^m - n`, which fits in `usize` whenever `n` is close enough to `k^m`
/// for the caller to need it.
fn remaining(k: usize, m: usize, n: usize) -> usize {
    (column_count(k as u64, m as u64) - BigUint::from(n))
        .to_usize()
        .expect("complement width fits")
}

/// `2 * n <= k^m`.
fn in_lower_half(k: usize, m: usize, n: usize) -> bool {
    BigUint::from(n) * 2u32 <= column_count(k as u64, m as u64)
}

fn build_two_colors(m: usize, n: usize) -> Result<GridColoring> {
    if m == 2 {
        return Ok(literal(match n {
            1 => TWO_BY_ONE,
            2 => TWO_BY_TWO,
            _ => TWO_BY_THREE,
        }));
    }
    if n < m {
        return Ok(build(n, m, 2)?.transpose());
    }
    if !in_lower_half(2, m, n) {
        return complement(&build(m, remaining(2, m, n), 2)?);
    }
    match m {
        3 if n == 3 => Ok(square_coloring(3)),
        3 => Ok(literal(THREE_BY_FOUR)),
        4 => extend(&literal(FOUR_BY_FOUR), n),
        5 => extend(&literal(FIVE_BY_FOUR), n),
        _ if m.is_multiple_of(2) && n == m => Ok(square_coloring(m)),
        _ if m.is_multiple_of(2) => extend(&even_height_family(m)?, n),
        _ => extend(&odd_height_family(m)?, n),
    }
}

/// `2 <= m <= k`, `k >= 3`: seed with the column `1, 2, .., m`, widen, and
/// complement past `k^m / 2`.
fn build_short(m: usize, n: usize, k: usize) -> Result<GridColoring> {
    if !in_lower_half(k, m, n) {
        return complement(&build(m, remaining(k, m, n), k)?);
    }
    let seed = GridColoring::from_columns(m, vec![(1..=m as u32).collect()], k)?;
    extend(&seed, n)
}

/// `m > k >= 3`.
fn build_more_colors(m: usize, n: usize, k: usize) -> Result<GridColoring> {
    let f_prev = f(k as u64 - 1, m as u64)?;
    let prev_total = column_count(k as u64 - 1, m as u64);
    let n_big = BigUint::from(n);

    if (n as u64) < f_prev {
        return Ok(build(n, m, k)?.transpose());
    }
    let prev_top = &prev_total - f_prev;
    if n_big <= prev_top {
        return build(m, n, k - 1)?.with_palette(k);
    }
    if n_big + f_prev <= column_count(k as u64, m as u64) {
        let width = prev_top.to_usize().expect("below n");
        let base = build(m, width, k - 1)?.with_palette(k)?;
        return extend(&base, n);
    }
    complement(&build(m, remaining(k, m, n), k)?)
}

/// The `m x (m + 1)` two-coloring for even `m >= 6` in which row `i` has
/// `m + 1 - i` cells of color 1 and every column has `m / 2`.
pub fn even_height_family(m: usize) -> Result<GridColoring> {
    if m < 6 || !m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "the (m+1)-column family needs even m >= 6, got {}",
            m
        )));
    }
    let half = m / 2;
    let cell = |i: usize, j: usize| -> u32 {
        // 1-based i, j
        let two = match j {
            1 => i == 2 || i >= half + 2,
            2 => (3..=half + 1).contains(&i) || i == m,
            _ if j <= half + 1 => (j <= i && i <= half) || i + j >= m + 2,
            _ => i + j == m + 2 || (i > half && i + j != 3 * half + 2),
        };
        if two {
            2
        } else {
            1
        }
    };
    let rows = (1..=m)
        .map(|i| (1..=m + 1).map(|j| cell(i, j)).collect())
        .collect();
    GridColoring::from_rows(rows, 2)
}

/// The `m x m` two-coloring for odd `m >= 7`: a row of color 1 on top of
/// [`even_height_family`] for `m - 1`.
pub fn odd_height_family(m: usize) -> Result<GridColoring> {
    if m < 7 || m % 2 != 1 {
        return Err(Error::InvalidArgument(format!(
            "the square odd family needs odd m >= 7, got {}",
            m
        )));
    }
    let below = even_height_family(m - 1)?;
    let mut rows = vec![vec![1; m]];
    rows.extend(below.rows());
    GridColoring::from_rows(rows, 2)
}
