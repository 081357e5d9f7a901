//! Colorings and brute-force distinguishing tests.
//!
//! Every search here charges its work against a budget counted in
//! element-coloring checks and fails with [`Error::BudgetExceeded`] rather
//! than returning a truncated answer.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default budget in element-coloring checks.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A map from points `0..len` to colors `1..=palette`. Not every color needs
/// to be used.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<u32>,
    palette: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, palette: u32) -> Result<Self> {
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > palette) {
            return Err(Error::InvalidColoring(format!(
                "color {} outside 1..={}",
                bad, palette
            )));
        }
        Ok(Coloring { colors, palette })
    }

    /// Uses the largest color present as the palette size.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let palette = colors.iter().copied().max().unwrap_or(1).max(1);
        Self::new(colors, palette)
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, point: usize) -> u32 {
        self.colors[point]
    }

    /// The same coloring over a larger palette.
    pub fn with_palette(&self, palette: u32) -> Result<Self> {
        Self::new(self.colors.clone(), palette)
    }

    /// `a^g` with `(a^g)(x) = a(x^(g^-1))`.
    pub fn act(&self, g: &Permutation) -> Coloring {
        Coloring {
            colors: act_on_colors(&self.colors, g),
            palette: self.palette,
        }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn act_on_colors(colors: &[u32], g: &Permutation) -> Vec<u32> {
    let mut out = vec![0; colors.len()];
    for (x, &c) in colors.iter().enumerate() {
        out[g.image(x)] = c;
    }
    out
}

/// Distinguishing colorings from pairwise distinct orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringOrbitSet {
    pub representatives: Vec<Coloring>,
    /// Length of each orbit, which is `|G|` for a distinguishing coloring.
    pub orbit_size: usize,
}

#[inline]
fn preserves(colors: &[u32], g: &Permutation) -> bool {
    colors
        .iter()
        .enumerate()
        .all(|(x, &c)| colors[g.image(x)] == c)
}

struct Meter {
    used: u64,
    limit: u64,
}

impl Meter {
    fn new(limit: u64) -> Self {
        Meter { used: 0, limit }
    }

    fn charge(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Whether every non-identity element moves some color; reports how many
/// elements were examined.
fn distinguishing_scan(action: &GroupAction, colors: &[u32]) -> (bool, u64) {
    let mut examined = 0u64;
    for g in action.group().non_identity() {
        examined += 1;
        if preserves(colors, g) {
            return (false, examined);
        }
    }
    (true, examined)
}

fn check_len(action: &GroupAction, c: &Coloring) -> Result<()> {
    if c.len() != action.degree() {
        return Err(Error::InvalidColoring(format!(
            "coloring has {} points, action has {}",
            c.len(),
            action.degree()
        )));
    }
    Ok(())
}

/// `c(x^g) = c(x)` for every point `x`.
pub fn is_color_preserving(action: &GroupAction, c: &Coloring, g: &Permutation) -> Result<bool> {
    check_len(action, c)?;
    if !action.group().contains(g) {
        return Err(Error::ElementNotInGroup);
    }
    Ok(preserves(c.colors(), g))
}

/// No non-identity element preserves `c`.
pub fn is_distinguishing(action: &GroupAction, c: &Coloring) -> Result<bool> {
    check_len(action, c)?;
    Ok(distinguishing_scan(action, c.colors()).0)
}

pub fn distinguishing_number(action: &GroupAction) -> Result<usize> {
    distinguishing_number_within(action, DEFAULT_BUDGET)
}

/// Least `r` admitting a distinguishing `r`-coloring.
///
/// Colorings are enumerated up to relabeling of the palette (first
/// occurrences of colors appear in increasing order), and for each `r` only
/// colorings using exactly `r` colors are tried, since those with fewer were
/// rejected at a smaller `r`.
pub fn distinguishing_number_within(action: &GroupAction, budget: u64) -> Result<usize> {
    let n = action.degree();
    if action.order() == 1 {
        return Ok(1);
    }
    let mut meter = Meter::new(budget);
    for r in 1..=n {
        let mut found = false;
        let mut colors = vec![0u32; n];
        for_each_partition_labeling(&mut colors, 0, 0, r as u32, &mut |colors| {
            let (ok, examined) = distinguishing_scan(action, colors);
            meter.charge(examined)?;
            found = ok;
            Ok(ok)
        })?;
        if found {
            return Ok(r);
        }
    }
    // the all-distinct coloring distinguishes every faithful action
    Err(Error::InvalidArgument(
        "action is not faithful: no finite distinguishing coloring".into(),
    ))
}

/// Visits every coloring whose colors first appear in the order 1, 2, ..
/// and which uses exactly `blocks` colors. The visitor returns `true` to stop.
fn for_each_partition_labeling(
    colors: &mut [u32],
    pos: usize,
    used: u32,
    blocks: u32,
    visit: &mut dyn FnMut(&[u32]) -> Result<bool>,
) -> Result<bool> {
    let n = colors.len();
    if pos == n {
        return if used == blocks {
            visit(colors)
        } else {
            Ok(false)
        };
    }
    if ((n - pos) as u32) < blocks - used {
        return Ok(false);
    }
    let top = (used + 1).min(blocks);
    for c in 1..=top {
        colors[pos] = c;
        let used = used.max(c);
        if for_each_partition_labeling(colors, pos + 1, used, blocks, visit)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Visits all `r^n` colorings in lexicographic order. The visitor returns
/// `true` to stop.
fn for_each_coloring(
    n: usize,
    r: u32,
    mut visit: impl FnMut(&[u32]) -> Result<bool>,
) -> Result<()> {
    if r == 0 {
        return if n == 0 {
            visit(&[]).map(|_| ())
        } else {
            Ok(())
        };
    }
    let mut colors = vec![1u32; n];
    loop {
        if visit(&colors)? {
            return Ok(());
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            if colors[pos] < r {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
        }
    }
}

pub fn count_distinguishing_colorings(action: &GroupAction, r: u32) -> Result<BigUint> {
    count_distinguishing_colorings_within(action, r, DEFAULT_BUDGET)
}

/// `n_r`: the number of labeled distinguishing `r`-colorings, by direct
/// enumeration of all `r^|X|` colorings.
pub fn count_distinguishing_colorings_within(
    action: &GroupAction,
    r: u32,
    budget: u64,
) -> Result<BigUint> {
    let mut meter = Meter::new(budget);
    let mut count: u64 = 0;
    for_each_coloring(action.degree(), r, |colors| {
        let (ok, examined) = distinguishing_scan(action, colors);
        meter.charge(examined.max(1))?;
        count += ok as u64;
        Ok(false)
    })?;
    Ok(BigUint::from(count))
}

pub fn orbit_representatives(
    action: &GroupAction,
    r: u32,
    count: usize,
) -> Result<ColoringOrbitSet> {
    orbit_representatives_within(action, r, count, DEFAULT_BUDGET)
}

/// The first `count` distinguishing `r`-colorings in lexicographic order that
/// lie in pairwise distinct orbits.
pub fn orbit_representatives_within(
    action: &GroupAction,
    r: u32,
    count: usize,
    budget: u64,
) -> Result<ColoringOrbitSet> {
    let mut meter = Meter::new(budget);
    let mut covered: HashSet<Vec<u32>> = HashSet::new();
    let mut reps = Vec::new();
    if count > 0 {
        for_each_coloring(action.degree(), r, |colors| {
            if covered.contains(colors) {
                return Ok(false);
            }
            let (ok, examined) = distinguishing_scan(action, colors);
            meter.charge(examined.max(1))?;
            if ok {
                meter.charge(action.order() as u64)?;
                for g in action.group().elements() {
                    covered.insert(act_on_colors(colors, g));
                }
                reps.push(Coloring {
                    colors: colors.to_vec(),
                    palette: r,
                });
            }
            Ok(reps.len() == count)
        })?;
    }
    if reps.len() < count {
        return Err(Error::InsufficientOrbits {
            requested: count,
            available: reps.len(),
        });
    }
    Ok(ColoringOrbitSet {
        representatives: reps,
        orbit_size: action.order(),
    })
}

/// The product coloring `(x, y) -> a_{b(y)}(x)` on `X x Y`, indexed
/// `x * |Y| + y`.
pub fn wreath_coloring(inner_reps: &ColoringOrbitSet, outer: &Coloring) -> Result<Coloring> {
    let reps = &inner_reps.representatives;
    let first = reps
        .first()
        .ok_or_else(|| Error::InvalidColoring("no inner representatives".into()))?;
    if let Some(&bad) = outer.colors().iter().find(|&&c| c as usize > reps.len()) {
        return Err(Error::InvalidColoring(format!(
            "outer color {} exceeds the {} available representatives",
            bad,
            reps.len()
        )));
    }
    let nx = first.len();
    if reps
        .iter()
        .any(|a| a.len() != nx || a.palette() != first.palette())
    {
        return Err(Error::InvalidColoring(
            "representatives disagree on size or palette".into(),
        ));
    }
    let ny = outer.len();
    let mut colors = vec![0; nx * ny];
    for x in 0..nx {
        for (y, &b) in outer.colors().iter().enumerate() {
            colors[x * ny + y] = reps[b as usize - 1].color(x);
        }
    }
    Coloring::new(colors, first.palette())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[u32], r: u32) -> Coloring {
        Coloring::new(v.to_vec(), r).unwrap()
    }

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn coloring_rejects_out_of_palette() {
        assert!(Coloring::new(vec![1, 3], 2).is_err());
        assert!(Coloring::new(vec![0], 2).is_err());
    }

    #[test]
    fn preserving_examples() {
        let s2 = GroupAction::symmetric(2);
        assert!(is_color_preserving(&s2, &col(&[1, 2], 2), &Permutation::identity(2)).unwrap());
        assert!(!is_color_preserving(&s2, &col(&[1, 2], 2), &p("(1 2)", 2)).unwrap());
        let s3 = GroupAction::symmetric(3);
        assert!(is_color_preserving(&s3, &col(&[1, 1, 2], 2), &p("(1 2)", 3)).unwrap());
        let a3 = GroupAction::alternating(3);
        assert_eq!(
            is_color_preserving(&a3, &col(&[1, 1, 2], 2), &p("(1 2)", 3)),
            Err(Error::ElementNotInGroup)
        );
        assert!(is_color_preserving(&s3, &col(&[1, 1], 2), &p("(1 2)", 3)).is_err());
    }

    #[test]
    fn distinguishing_examples() {
        let s4 = GroupAction::symmetric(4);
        assert!(is_distinguishing(&s4, &col(&[1, 2, 3, 4], 4)).unwrap());
        assert!(!is_distinguishing(&s4, &col(&[1, 1, 1, 1], 1)).unwrap());
        // A_3 is {id, (1 2 3), (1 3 2)}; neither 3-cycle fixes the pattern 1 1 2.
        let a3 = GroupAction::alternating(3);
        assert!(is_distinguishing(&a3, &col(&[1, 1, 2], 2)).unwrap());
        assert!(!is_distinguishing(&a3, &col(&[1, 1, 1], 2)).unwrap());
    }

    #[test]
    fn distinguishing_numbers_of_natural_actions() {
        for n in 1..=5 {
            assert_eq!(
                distinguishing_number(&GroupAction::symmetric(n)).unwrap(),
                n
            );
        }
        for n in 3..=5 {
            assert_eq!(
                distinguishing_number(&GroupAction::alternating(n)).unwrap(),
                n - 1
            );
        }
        assert_eq!(distinguishing_number(&GroupAction::trivial(5)).unwrap(), 1);
        assert_eq!(distinguishing_number(&GroupAction::trivial(0)).unwrap(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let s5 = GroupAction::symmetric(5);
        assert_eq!(
            distinguishing_number_within(&s5, 50),
            Err(Error::BudgetExceeded { budget: 50 })
        );
        assert!(count_distinguishing_colorings_within(&s5, 5, 1000).is_err());
    }

    #[test]
    fn counts() {
        let s2 = GroupAction::symmetric(2);
        assert_eq!(
            count_distinguishing_colorings(&s2, 3).unwrap(),
            BigUint::from(6u32)
        );
        for n in 2..=4 {
            let s = GroupAction::symmetric(n);
            for r in 1..n as u32 {
                assert_eq!(
                    count_distinguishing_colorings(&s, r).unwrap(),
                    BigUint::from(0u32)
                );
            }
        }
        let a3 = GroupAction::alternating(3);
        assert_eq!(
            count_distinguishing_colorings(&a3, 2).unwrap(),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn partition_labelings_are_counted_by_stirling_numbers() {
        // S(5, k) for k = 1..5
        let expected = [1, 15, 25, 10, 1];
        for (k, &want) in expected.iter().enumerate() {
            let mut seen = 0;
            let mut colors = vec![0; 5];
            for_each_partition_labeling(&mut colors, 0, 0, k as u32 + 1, &mut |_| {
                seen += 1;
                Ok(false)
            })
            .unwrap();
            assert_eq!(seen, want);
        }
    }

    #[test]
    fn orbit_representatives_s2() {
        let s2 = GroupAction::symmetric(2);
        let set = orbit_representatives(&s2, 3, 3).unwrap();
        assert_eq!(set.orbit_size, 2);
        assert_eq!(
            set.representatives,
            vec![col(&[1, 2], 3), col(&[1, 3], 3), col(&[2, 3], 3)]
        );
        assert_eq!(
            orbit_representatives(&s2, 3, 4),
            Err(Error::InsufficientOrbits {
                requested: 4,
                available: 3
            })
        );
    }

    #[test]
    fn orbit_representatives_s3() {
        let s3 = GroupAction::symmetric(3);
        let set = orbit_representatives(&s3, 4, 4).unwrap();
        assert_eq!(set.representatives.len(), 4);
        for (i, a) in set.representatives.iter().enumerate() {
            assert!(is_distinguishing(&s3, a).unwrap());
            for b in &set.representatives[i + 1..] {
                assert!(s3.group().elements().iter().all(|g| &a.act(g) != b));
            }
        }
        let single = orbit_representatives(&s3, 3, 1).unwrap();
        assert!(is_distinguishing(&s3, &single.representatives[0]).unwrap());
    }

    #[test]
    fn wreath_coloring_s2_by_s2() {
        let s2 = GroupAction::symmetric(2);
        let reps = orbit_representatives(&s2, 3, 2).unwrap();
        let c = wreath_coloring(&reps, &col(&[1, 2], 2)).unwrap();
        let w = GroupAction::wreath(&s2, &s2).unwrap();
        assert_eq!(w.order(), 8);
        assert!(is_distinguishing(&w, &c).unwrap());
    }

    #[test]
    fn wreath_coloring_single_outer_point() {
        let s3 = GroupAction::symmetric(3);
        let reps = orbit_representatives(&s3, 3, 1).unwrap();
        let c = wreath_coloring(&reps, &col(&[1], 1)).unwrap();
        assert_eq!(c, reps.representatives[0]);
    }

    #[test]
    fn wreath_coloring_s2_by_s3() {
        let s2 = GroupAction::symmetric(2);
        let s3 = GroupAction::symmetric(3);
        let reps = orbit_representatives(&s2, 3, 3).unwrap();
        let c = wreath_coloring(&reps, &col(&[1, 2, 3], 3)).unwrap();
        let w = GroupAction::wreath(&s2, &s3).unwrap();
        assert_eq!(w.order(), 48);
        assert!(is_distinguishing(&w, &c).unwrap());
    }

    #[test]
    fn wreath_coloring_palette_mismatch() {
        let s2 = GroupAction::symmetric(2);
        let reps = orbit_representatives(&s2, 3, 2).unwrap();
        assert!(wreath_coloring(&reps, &col(&[1, 3], 3)).is_err());
    }
}
