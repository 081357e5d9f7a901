//! Exact closed forms: the `f_k` threshold recursion, the grid distinguishing
//! number of `S_m x S_n`, the wreath product bound and the `S_n` / `A_n`
//! specializations. All counts are unbounded integers.

use std::cell::RefCell;
use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_bigint::BigUint;

use crate::action::factorial_big;
use crate::error::{Error, Result};

/// Default cap on `r` for [`wreath_distinguishing_number`].
pub const DEFAULT_MAX_R: u64 = 1_000_000;

pub fn binomial(a: u64, b: u64) -> BigUint {
    num_integer::binomial(BigUint::from(a), BigUint::from(b))
}

pub fn factorial(n: u64) -> BigUint {
    factorial_big(n as usize)
}

pub(crate) fn pow(k: u64, e: u64) -> BigUint {
    BigUint::from(k).pow(e as u32)
}

/// Memo table for `f_k`, filled bottom-up from `m = 2`.
///
/// `f_k(m) = 1` for `m <= k`; otherwise it is the least `t` with `1 < t < m`
/// and `m <= k^t - f_k(t)`.
#[derive(Clone, Debug)]
pub struct FkMemo {
    k: u64,
    /// `table[i]` holds `f_k(i + 2)`.
    table: Vec<u64>,
}

impl FkMemo {
    pub fn new(k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!(
                "f_k needs k >= 2, got {}",
                k
            )));
        }
        Ok(FkMemo {
            k,
            table: Vec::new(),
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn get(&mut self, m: u64) -> Result<u64> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!(
                "f_k needs m >= 2, got {}",
                m
            )));
        }
        while (self.table.len() as u64) + 2 <= m {
            let next = self.table.len() as u64 + 2;
            let value = self.compute(next);
            self.table.push(value);
        }
        Ok(self.table[(m - 2) as usize])
    }

    fn known(&self, t: u64) -> u64 {
        self.table[(t - 2) as usize]
    }

    fn compute(&self, m: u64) -> u64 {
        if m <= self.k {
            return 1;
        }
        // m - 1 always qualifies, so the scan ends
        (2..m)
            .find(|&t| BigUint::from(m + self.known(t)) <= pow(self.k, t))
            .expect("m - 1 satisfies the defining inequality")
    }
}

thread_local! {
    static FK_CACHE: RefCell<HashMap<u64, FkMemo>> = RefCell::new(HashMap::new());
}

/// `f_k(m)` through a per-thread memo.
pub fn f(k: u64, m: u64) -> Result<u64> {
    FK_CACHE.with(|cache| match cache.borrow_mut().entry(k) {
        Entry::Occupied(e) => e.into_mut().get(m),
        Entry::Vacant(e) => e.insert(FkMemo::new(k)?).get(m),
    })
}

/// Whether the `m x n` grid has a distinguishing `k`-coloring under
/// `S_m x S_n`: `f_k(m) <= n <= k^m - f_k(m)`, with `n <= k` when `m = 1`.
pub fn grid_feasible(m: u64, n: u64, k: u64) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "grid dimensions must be positive".into(),
        ));
    }
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "palette size must be >= 2, got {}",
            k
        )));
    }
    if m == 1 {
        return Ok(n <= k);
    }
    if n == 1 {
        return Ok(m <= k);
    }
    let fk = f(k, m)?;
    Ok(fk <= n && BigUint::from(n) + fk <= pow(k, m))
}

/// `D_{S_m x S_n}([m] x [n])`.
pub fn direct_product_distinguishing_number(m: u64, n: u64) -> Result<u64> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "grid dimensions must be positive".into(),
        ));
    }
    if m == 1 {
        return Ok(n);
    }
    if n == 1 {
        return Ok(m);
    }
    // k = max(m, n) always works: f_k(m) = 1 <= n <= k^m - 1
    for k in 2..=m.max(n) {
        if grid_feasible(m, n, k)? {
            return Ok(k);
        }
    }
    unreachable!("k = max(m, n) is always feasible")
}

/// The `max x max` table of [`direct_product_distinguishing_number`].
pub fn direct_product_table(max: u64) -> Result<Vec<Vec<u64>>> {
    (1..=max)
        .map(|m| {
            (1..=max)
                .map(|n| direct_product_distinguishing_number(m, n))
                .collect()
        })
        .collect()
}

/// `min { r >= 1 : n_r >= d |G| }` for the wreath product `G wr_Y H` with
/// `D_H(Y) = d`, given the distinguishing-coloring counts `n_r` of `G`.
pub fn wreath_distinguishing_number<F>(nr: F, d: u64, inner_order: &BigUint) -> Result<u64>
where
    F: FnMut(u64) -> Result<BigUint>,
{
    wreath_distinguishing_number_capped(nr, d, inner_order, DEFAULT_MAX_R)
}

pub fn wreath_distinguishing_number_capped<F>(
    mut nr: F,
    d: u64,
    inner_order: &BigUint,
    max_r: u64,
) -> Result<u64>
where
    F: FnMut(u64) -> Result<BigUint>,
{
    let target = inner_order * d;
    for r in 1..=max_r {
        if nr(r)? >= target {
            return Ok(r);
        }
    }
    Err(Error::IterationCapExceeded { cap: max_r })
}

/// `n_r` for `S_n` on `[n]`: `C(r, n) n!`.
pub fn nr_symmetric(n: u64, r: u64) -> BigUint {
    binomial(r, n) * factorial(n)
}

/// `n_r` for `A_n` on `[n]`, `n >= 3`: colorings with `n - 1` distinct colors
/// (one pair shared) plus colorings with `n` distinct colors.
pub fn nr_alternating(n: u64, r: u64) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "A_n needs n >= 3, got {}",
            n
        )));
    }
    Ok(binomial(r, n - 1) * binomial(n, 2) * factorial(n - 1) + binomial(r, n) * factorial(n))
}

fn least_r(mut holds: impl FnMut(u64) -> bool) -> u64 {
    (1..).find(|&r| holds(r)).expect("unbounded search")
}

/// `min { r : C(r, n) >= d }`.
pub fn sn_wreath_number(n: u64, d: u64) -> Result<u64> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be positive".into()));
    }
    let d = BigUint::from(d);
    Ok(least_r(|r| binomial(r, n) >= d))
}

/// `min { r : (n-1) C(r, n-1) + 2 C(r, n) >= d }`, `n >= 3`.
pub fn an_wreath_number(n: u64, d: u64) -> Result<u64> {
    if n < 3 || d == 0 {
        return Err(Error::InvalidArgument("need n >= 3 and d >= 1".into()));
    }
    let d = BigUint::from(d);
    Ok(least_r(|r| {
        binomial(r, n - 1) * (n - 1) + binomial(r, n) * 2u32 >= d
    }))
}

/// `k^m` as an exact integer.
pub fn column_count(k: u64, m: u64) -> BigUint {
    pow(k, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn f_small_values() {
        assert_eq!(f(2, 2).unwrap(), 1);
        assert_eq!(f(2, 4).unwrap(), 3);
        assert_eq!(f(2, 7).unwrap(), 4);
        assert_eq!(f(3, 3).unwrap(), 1);
        assert!(f(1, 5).is_err());
        assert!(f(2, 1).is_err());
    }

    #[test]
    fn memo_matches_fresh_fill() {
        let mut a = FkMemo::new(3).unwrap();
        let late = a.get(50).unwrap();
        let mut b = FkMemo::new(3).unwrap();
        for m in 2..50 {
            b.get(m).unwrap();
        }
        assert_eq!(b.get(50).unwrap(), late);
    }

    #[test]
    fn feasibility_examples() {
        assert!(grid_feasible(4, 3, 2).unwrap());
        assert!(!grid_feasible(2, 9, 3).unwrap());
        for k in 2..=4u64 {
            // n >= k^m is hopeless once a nontrivial row permutation exists
            for m in 2..=6 {
                let km = k.pow(m as u32);
                assert!(!grid_feasible(m, km, k).unwrap(), "m={} k={}", m, k);
            }
        }
        assert!(grid_feasible(1, 3, 3).unwrap());
        assert!(grid_feasible(3, 1, 3).unwrap());
        assert!(!grid_feasible(1, 4, 3).unwrap());
        assert!(grid_feasible(0, 1, 2).is_err());
        assert!(grid_feasible(2, 2, 1).is_err());
    }

    #[test]
    fn direct_product_examples() {
        assert_eq!(direct_product_distinguishing_number(1, 7).unwrap(), 7);
        assert_eq!(direct_product_distinguishing_number(2, 9).unwrap(), 4);
        assert_eq!(direct_product_distinguishing_number(10, 4).unwrap(), 2);
        assert_eq!(direct_product_distinguishing_number(1, 1).unwrap(), 1);
    }

    #[test]
    fn wreath_number_examples() {
        let r = wreath_distinguishing_number(|r| Ok(big(r * r.saturating_sub(1))), 2, &big(2));
        assert_eq!(r.unwrap(), 3);
        let r = wreath_distinguishing_number(|_| Ok(big(1)), 1, &big(1));
        assert_eq!(r.unwrap(), 1);
        let r = wreath_distinguishing_number(|r| Ok(binomial(r, 3) * 6u32), 2, &big(6));
        assert_eq!(r.unwrap(), 4);
        let r = wreath_distinguishing_number_capped(|_| Ok(big(0)), 1, &big(1), 100);
        assert_eq!(r, Err(Error::IterationCapExceeded { cap: 100 }));
    }

    #[test]
    fn sn_wreath_examples() {
        assert_eq!(sn_wreath_number(2, 2).unwrap(), 3);
        for d in 1..20 {
            assert_eq!(sn_wreath_number(1, d).unwrap(), d);
        }
        assert_eq!(sn_wreath_number(3, 1).unwrap(), 3);
    }

    #[test]
    fn an_wreath_examples() {
        assert_eq!(an_wreath_number(3, 1).unwrap(), 2);
        // r = 2 gives 2, r = 3 gives 2*3 + 2*1 = 8
        assert_eq!(an_wreath_number(3, 3).unwrap(), 3);
        // r = 6 gives 3*20 + 2*15 = 90, r = 7 gives 3*35 + 2*35 = 175
        assert_eq!(an_wreath_number(4, 100).unwrap(), 7);
        assert!(an_wreath_number(2, 1).is_err());
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(nr_symmetric(2, 3), big(6));
        assert_eq!(nr_symmetric(4, 3), big(0));
        assert_eq!(nr_symmetric(3, 3), big(6));
        assert_eq!(nr_alternating(3, 2).unwrap(), big(6));
        assert_eq!(nr_alternating(5, 3).unwrap(), big(0));
        assert_eq!(nr_alternating(4, 4).unwrap(), big(168));
        assert!(nr_alternating(2, 4).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(10, 5), big(252));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }
}
