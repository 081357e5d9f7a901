//! Exhaustive feasibility check for grid colorings, independent of the
//! threshold formula and of the constructor.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::formulas::{binomial, column_count, factorial};
use crate::perm::all_permutations;

/// Default budget in `(subset, row permutation)` pairs.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000_000;

pub fn feasible_oracle(m: usize, n: usize, k: usize) -> Result<bool> {
    feasible_oracle_within(m, n, k, DEFAULT_ORACLE_BUDGET)
}

/// Whether some `n`-subset of the `k^m` column colorings is mapped onto
/// itself by no nontrivial row permutation; that is exactly the existence of
/// a distinguishing `k`-coloring of the `m x n` grid.
pub fn feasible_oracle_within(m: usize, n: usize, k: usize, budget: u64) -> Result<bool> {
    if m == 0 || n == 0 || k == 0 {
        return Err(Error::InvalidArgument("m, n and k must be positive".into()));
    }
    let total_big = column_count(k as u64, m as u64);
    if BigUint::from(n) > total_big {
        return Ok(false);
    }
    let cost = binomial(total_big.to_u64().unwrap_or(u64::MAX), n as u64) * factorial(m as u64);
    if cost > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { budget });
    }
    let total = total_big.to_usize().expect("bounded by the budget");

    // column codes: base-k digits, top row most significant
    let digits = |mut code: usize| -> Vec<usize> {
        let mut d = vec![0; m];
        for slot in d.iter_mut().rev() {
            *slot = code % k;
            code /= k;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * k + x);
    let row_maps: Vec<Vec<usize>> = all_permutations(m)
        .into_iter()
        .skip(1)
        .map(|sigma| {
            (0..total)
                .map(|code| {
                    let u = digits(code);
                    let mut v = vec![0; m];
                    for (i, &x) in u.iter().enumerate() {
                        v[sigma.image(i)] = x;
                    }
                    encode(&v)
                })
                .collect()
        })
        .collect();

    let mut chosen: Vec<usize> = (0..n).collect();
    let mut member = vec![false; total];
    loop {
        chosen.iter().for_each(|&c| member[c] = true);
        let fixed_by_some = row_maps
            .iter()
            .any(|map| chosen.iter().all(|&c| member[map[c]]));
        chosen.iter().for_each(|&c| member[c] = false);
        if !fixed_by_some {
            return Ok(true);
        }
        if !next_combination(&mut chosen, total) {
            return Ok(false);
        }
    }
}

fn next_combination(chosen: &mut [usize], total: usize) -> bool {
    let n = chosen.len();
    let mut i = n;
    while i > 0 {
        i -= 1;
        if chosen[i] < total - n + i {
            chosen[i] += 1;
            for j in i + 1..n {
                chosen[j] = chosen[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
