use distinguish::formulas::{direct_product_table, wreath_distinguishing_number_capped};
use distinguish::{
    an_wreath_number, binomial, direct_product_distinguishing_number, f, grid_feasible,
    nr_alternating, nr_symmetric, sn_wreath_number, wreath_distinguishing_number, FkMemo,
};
use num_bigint::BigUint;

const TABLE: [[u64; 10]; 10] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    [2, 2, 2, 3, 3, 3, 3, 3, 4, 4],
    [3, 2, 2, 2, 2, 2, 3, 3, 3, 3],
    [4, 3, 2, 2, 2, 2, 2, 2, 2, 2],
    [5, 3, 2, 2, 2, 2, 2, 2, 2, 2],
    [6, 3, 2, 2, 2, 2, 2, 2, 2, 2],
    [7, 3, 3, 2, 2, 2, 2, 2, 2, 2],
    [8, 3, 3, 2, 2, 2, 2, 2, 2, 2],
    [9, 4, 3, 2, 2, 2, 2, 2, 2, 2],
    [10, 4, 3, 2, 2, 2, 2, 2, 2, 2],
];

fn kpow(k: u64, e: u64) -> BigUint {
    BigUint::from(k).pow(e as u32)
}

#[test]
fn grid_table() {
    let table = direct_product_table(10).unwrap();
    for (m, row) in TABLE.iter().enumerate() {
        assert_eq!(table[m], row.to_vec(), "row m = {}", m + 1);
    }
}

#[test]
fn f2_fixture() {
    let got: Vec<u64> = (2..=10).map(|m| f(2, m).unwrap()).collect();
    assert_eq!(got, vec![1, 2, 3, 3, 3, 4, 4, 4, 4]);
}

#[test]
fn f_steps_by_zero_or_one() {
    for k in 2..=6 {
        for m in 2..200 {
            let step = f(k, m + 1).unwrap() - f(k, m).unwrap();
            assert!(step <= 1, "k={} m={}", k, m);
        }
    }
}

#[test]
fn f_satisfies_its_definition() {
    for k in 2..=6u64 {
        for m in 2..=200u64 {
            let value = f(k, m).unwrap();
            if m <= k {
                assert_eq!(value, 1);
                continue;
            }
            assert!(1 < value && value < m);
            assert!(BigUint::from(m + f(k, value).unwrap()) <= kpow(k, value));
            for t in 2..value {
                assert!(
                    BigUint::from(m + f(k, t).unwrap()) > kpow(k, t),
                    "k={} m={} t={}",
                    k,
                    m,
                    t
                );
            }
        }
    }
}

#[test]
fn memo_is_independent_of_fill_order() {
    let mut memo = FkMemo::new(4).unwrap();
    for m in (2..=300).rev() {
        assert_eq!(memo.get(m).unwrap(), f(4, m).unwrap());
    }
    // k^m overflows machine words long before m = 300
    assert!(f(10, 300).unwrap() >= 2);
}

#[test]
fn direct_number_is_symmetric() {
    for m in 1..=50 {
        for n in m..=50 {
            assert_eq!(
                direct_product_distinguishing_number(m, n).unwrap(),
                direct_product_distinguishing_number(n, m).unwrap(),
                "m={} n={}",
                m,
                n
            );
        }
    }
}

#[test]
fn window_is_closed_under_complement() {
    for k in 2..=4u64 {
        for m in 1..=6u64 {
            let total = k.pow(m as u32);
            for n in 1..total {
                assert_eq!(
                    grid_feasible(m, n, k).unwrap(),
                    grid_feasible(m, total - n, k).unwrap(),
                    "m={} n={} k={}",
                    m,
                    n,
                    k
                );
            }
        }
    }
}

#[test]
fn closed_forms_match_the_general_bound() {
    for n in 1..=6u64 {
        let order = distinguish::formulas::factorial(n);
        for d in 1..=50 {
            let general = wreath_distinguishing_number(|r| Ok(nr_symmetric(n, r)), d, &order);
            assert_eq!(
                general.unwrap(),
                sn_wreath_number(n, d).unwrap(),
                "S_{} d={}",
                n,
                d
            );
        }
    }
    for n in 3..=6u64 {
        let order = distinguish::formulas::factorial(n) / 2u32;
        for d in 1..=50 {
            let general = wreath_distinguishing_number(|r| nr_alternating(n, r), d, &order);
            assert_eq!(
                general.unwrap(),
                an_wreath_number(n, d).unwrap(),
                "A_{} d={}",
                n,
                d
            );
        }
    }
}

#[test]
fn bound_search_is_capped() {
    let never = wreath_distinguishing_number_capped(
        |_| Ok(BigUint::from(0u32)),
        2,
        &BigUint::from(2u32),
        5,
    );
    assert!(never.is_err());
}

#[test]
fn binomial_row_sums() {
    for a in 0..=60u64 {
        let sum: BigUint = (0..=a).map(|b| binomial(a, b)).sum();
        assert_eq!(sum, kpow(2, a));
    }
}
