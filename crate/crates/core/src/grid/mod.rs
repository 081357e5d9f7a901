//! Colorings of the `m x n` grid under `S_m x S_n` (rows permuted, then
//! columns), and the column-set operations used to build them.
//!
//! A grid coloring is distinguishing iff its columns are pairwise distinct
//! and no nontrivial row permutation maps the set of columns onto itself.

mod construct;
mod oracle;

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::{binomial, column_count};

pub use construct::{construct, even_height_family, odd_height_family};
pub use oracle::{feasible_oracle, feasible_oracle_within, DEFAULT_ORACLE_BUDGET};

/// Default cap on `k^m` for [`complement`].
pub const DEFAULT_MAX_COLUMNS: usize = 1_000_000;

/// Default cap on the row count accepted by [`verify`].
pub const DEFAULT_VERIFY_MAX_ROWS: usize = 11;

/// One column, top to bottom, colors in `1..=k`.
pub type ColumnColoring = Vec<u32>;

/// Color multiplicities of a column; `counts[c - 1]` is the number of cells
/// of color `c`. Two columns differ by a row permutation iff their multisets
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnMultiset {
    pub counts: Vec<u32>,
}

impl ColumnMultiset {
    pub fn of(column: &[u32], k: usize) -> Self {
        let mut counts = vec![0; k];
        for &c in column {
            counts[c as usize - 1] += 1;
        }
        ColumnMultiset { counts }
    }

    /// Number of columns with this multiset: `m! / prod(counts!)`.
    pub fn class_size(&self) -> BigUint {
        let mut remaining: u64 = self.counts.iter().map(|&c| c as u64).sum();
        let mut size = BigUint::from(1u32);
        for &c in &self.counts {
            size *= binomial(remaining, c as u64);
            remaining -= c as u64;
        }
        size
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridColoring {
    m: usize,
    k: usize,
    columns: Vec<ColumnColoring>,
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    cells: Vec<Vec<u32>>,
    k: usize,
    m: usize,
    n: usize,
}

impl GridColoring {
    pub fn from_columns(m: usize, columns: Vec<ColumnColoring>, k: usize) -> Result<Self> {
        if m == 0 || columns.is_empty() {
            return Err(Error::InvalidColoring(
                "grid must have at least one row and column".into(),
            ));
        }
        for col in &columns {
            if col.len() != m {
                return Err(Error::InvalidColoring(format!(
                    "column of height {} in a grid with {} rows",
                    col.len(),
                    m
                )));
            }
            if let Some(&bad) = col.iter().find(|&&c| c == 0 || c as usize > k) {
                return Err(Error::InvalidColoring(format!(
                    "color {} outside 1..={}",
                    bad, k
                )));
            }
        }
        Ok(GridColoring { m, k, columns })
    }

    /// Row-major construction.
    pub fn from_rows(rows: Vec<Vec<u32>>, k: usize) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidColoring("rows have unequal lengths".into()));
        }
        let columns = (0..n)
            .map(|j| rows.iter().map(|r| r[j]).collect())
            .collect();
        Self::from_columns(m, columns, k)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// 0-based cell access.
    pub fn cell(&self, i: usize, j: usize) -> u32 {
        self.columns[j][i]
    }

    pub fn columns(&self) -> &[ColumnColoring] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.m)
            .map(|i| self.columns.iter().map(|c| c[i]).collect())
            .collect()
    }

    /// Cells in row-major order, the point order of the grid action.
    pub fn row_major(&self) -> Vec<u32> {
        self.rows().into_iter().flatten().collect()
    }

    /// Same cells, declared over a larger palette.
    pub fn with_palette(mut self, k: usize) -> Result<Self> {
        if k < self.k {
            return Err(Error::InvalidArgument(format!(
                "cannot shrink palette from {} to {}",
                self.k, k
            )));
        }
        self.k = k;
        Ok(self)
    }

    pub fn transpose(&self) -> GridColoring {
        GridColoring {
            m: self.n(),
            k: self.k,
            columns: self.rows(),
        }
    }

    pub fn has_distinct_columns(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.n());
        self.columns.iter().all(|c| seen.insert(c))
    }

    /// Canonical JSON: keys sorted, no whitespace.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GridJson {
            cells: self.rows(),
            k: self.k,
            m: self.m,
            n: self.n(),
        })
        .expect("grid serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: GridJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("grid JSON: {}", e)))?;
        if raw.cells.len() != raw.m || raw.cells.iter().any(|r| r.len() != raw.n) {
            return Err(Error::Parse(
                "grid JSON: cells disagree with m and n".into(),
            ));
        }
        Self::from_rows(raw.cells, raw.k)
    }

    /// Rows of space-separated colors, one per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Without an explicit palette
    /// the largest color present is used (at least 2).
    pub fn from_text(s: &str, k: Option<usize>) -> Result<Self> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad grid entry {:?}", t)))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let k =
            k.unwrap_or_else(|| rows.iter().flatten().copied().max().unwrap_or(2).max(2) as usize);
        Self::from_rows(rows, k)
    }

    /// JSON if the input starts with `{`, text otherwise.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Self::from_json(s)
        } else {
            Self::from_text(s, None)
        }
    }
}

impl fmt::Display for GridColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// All `k^m` columns in lexicographic order, top row most significant.
pub(crate) struct Columns {
    k: u32,
    next: Option<Vec<u32>>,
}

impl Columns {
    pub(crate) fn new(m: usize, k: usize) -> Self {
        Columns {
            k: k as u32,
            next: if k == 0 { None } else { Some(vec![1; m]) },
        }
    }
}

impl Iterator for Columns {
    type Item = ColumnColoring;

    fn next(&mut self) -> Option<ColumnColoring> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        while pos > 0 {
            pos -= 1;
            if succ[pos] < self.k {
                succ[pos] += 1;
                self.next = Some(succ);
                return Some(current);
            }
            succ[pos] = 1;
        }
        Some(current)
    }
}

/// `cells(i, j) = 1` if `i < j`, else `2`. Row `i` (1-based) has `m - i`
/// cells of color 1.
pub fn square_coloring(m: usize) -> GridColoring {
    let columns = (0..m)
        .map(|j| (0..m).map(|i| if i < j { 1 } else { 2 }).collect())
        .collect();
    GridColoring { m, k: 2, columns }
}

pub fn complement(c: &GridColoring) -> Result<GridColoring> {
    complement_capped(c, DEFAULT_MAX_COLUMNS)
}

/// The grid whose columns are exactly the column colorings missing from `c`,
/// in lexicographic order.
pub fn complement_capped(c: &GridColoring, max_columns: usize) -> Result<GridColoring> {
    let total = column_count(c.k as u64, c.m as u64);
    let total_small = total
        .to_usize()
        .filter(|&t| t <= max_columns)
        .ok_or_else(|| Error::ColumnCapExceeded {
            count: total.to_string(),
            cap: max_columns,
        })?;
    if !c.has_distinct_columns() {
        return Err(Error::InvalidArgument(
            "complement needs pairwise distinct columns".into(),
        ));
    }
    if c.n() >= total_small {
        return Err(Error::InvalidArgument(format!(
            "grid already uses {} of the {} column colorings",
            c.n(),
            total_small
        )));
    }
    let present: HashSet<&ColumnColoring> = c.columns.iter().collect();
    let columns = Columns::new(c.m, c.k)
        .filter(|col| !present.contains(col))
        .collect();
    Ok(GridColoring {
        m: c.m,
        k: c.k,
        columns,
    })
}

/// Number of column colorings whose multiset occurs in no column of `c`.
pub fn fresh_column_count(c: &GridColoring) -> BigUint {
    let classes: HashSet<ColumnMultiset> = c
        .columns
        .iter()
        .map(|col| ColumnMultiset::of(col, c.k))
        .collect();
    let used: BigUint = classes.iter().map(ColumnMultiset::class_size).sum();
    column_count(c.k as u64, c.m as u64) - used
}

/// Appends the lexicographically smallest `l - n` columns whose multisets do
/// not occur in `c`.
pub fn extend(c: &GridColoring, l: usize) -> Result<GridColoring> {
    let available = fresh_column_count(c);
    let max = available.clone() + c.n();
    if l < c.n() || BigUint::from(l) > max {
        return Err(Error::ExtendOutOfRange {
            requested: l,
            min: c.n(),
            max: max.to_string(),
            available: available.to_string(),
        });
    }
    let classes: HashSet<ColumnMultiset> = c
        .columns
        .iter()
        .map(|col| ColumnMultiset::of(col, c.k))
        .collect();
    let mut columns = c.columns.clone();
    columns.extend(
        Columns::new(c.m, c.k)
            .filter(|col| !classes.contains(&ColumnMultiset::of(col, c.k)))
            .take(l - c.n()),
    );
    Ok(GridColoring {
        m: c.m,
        k: c.k,
        columns,
    })
}

pub fn verify(c: &GridColoring) -> Result<bool> {
    verify_capped(c, DEFAULT_VERIFY_MAX_ROWS)
}

/// Whether `c` is distinguishing, deciding it through the column set.
///
/// Columns must be pairwise distinct; then a search over row permutations
/// `sigma` looks for one other than the identity under which the column set
/// is invariant. Rows are assigned one at a time and a partial assignment is
/// abandoned as soon as the multiset of column prefixes on the assigned rows
/// differs from that on their images. Worst case is still `m!` leaves.
pub fn verify_capped(c: &GridColoring, max_rows: usize) -> Result<bool> {
    if c.m > max_rows {
        return Err(Error::VerifyCapExceeded {
            m: c.m,
            cap: max_rows,
        });
    }
    if !c.has_distinct_columns() {
        return Ok(false);
    }
    if c.m == 1 {
        return Ok(true);
    }
    let base = c.k as u128;
    if column_count(c.k as u64, c.m as u64) > BigUint::from(u128::MAX) {
        return Err(Error::InvalidArgument(format!(
            "palette {} too large for the fast verifier at {} rows",
            c.k, c.m
        )));
    }

    let rows = c.rows();
    // rows with different color counts can never be swapped
    let signature: Vec<ColumnMultiset> = rows.iter().map(|r| ColumnMultiset::of(r, c.k)).collect();
    let mut by_signature: HashMap<&ColumnMultiset, Vec<usize>> = HashMap::new();
    for (i, s) in signature.iter().enumerate() {
        by_signature.entry(s).or_default().push(i);
    }
    if by_signature.values().all(|rows| rows.len() == 1) {
        return Ok(true);
    }
    let candidates: Vec<Vec<usize>> = signature.iter().map(|s| by_signature[s].clone()).collect();

    // sorted prefix codes of the unpermuted grid, one list per depth
    let mut codes = vec![0u128; c.n()];
    let mut target = Vec::with_capacity(c.m);
    for row in &rows {
        for (code, &cell) in codes.iter_mut().zip(row) {
            *code = *code * base + (cell as u128 - 1);
        }
        let mut sorted = codes.clone();
        sorted.sort_unstable();
        target.push(sorted);
    }

    let mut search = RowSearch {
        rows: &rows,
        base,
        candidates: &candidates,
        target: &target,
        image: Vec::with_capacity(c.m),
        used: vec![false; c.m],
    };
    let zero = vec![0u128; c.n()];
    Ok(!search.find_nontrivial(&zero))
}

struct RowSearch<'a> {
    rows: &'a [Vec<u32>],
    base: u128,
    candidates: &'a [Vec<usize>],
    target: &'a [Vec<u128>],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl RowSearch<'_> {
    /// Extends the partial row map `image`; true once a complete map other
    /// than the identity keeps the column set invariant.
    fn find_nontrivial(&mut self, codes: &[u128]) -> bool {
        let depth = self.image.len();
        if depth == self.rows.len() {
            return self.image.iter().enumerate().any(|(i, &s)| i != s);
        }
        for &s in &self.candidates[depth] {
            if self.used[s] {
                continue;
            }
            let next: Vec<u128> = codes
                .iter()
                .zip(&self.rows[s])
                .map(|(&code, &cell)| code * self.base + (cell as u128 - 1))
                .collect();
            let mut sorted = next.clone();
            sorted.sort_unstable();
            if sorted != self.target[depth] {
                continue;
            }
            self.used[s] = true;
            self.image.push(s);
            let found = self.find_nontrivial(&next);
            self.image.pop();
            self.used[s] = false;
            if found {
                return true;
            }
        }
        false
    }
}
