//! Exact Stirling numbers of the first (signed) and second kinds, built once
//! by recurrence with arbitrary-precision integers and memoized.
//!
//! The signed cancellation in the polynomial coefficients D_n rules out
//! floating-point construction, so the tables hold `BigInt` entries.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Result, WrightError};

/// Largest index held by the memoized tables.
pub const STIRLING_MAX_INDEX: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Signed Stirling numbers of the first kind s(n, m).
    FirstSigned,
    /// Stirling numbers of the second kind S(n, m).
    Second,
}

/// Triangular table of Stirling numbers, indexed (n, m) with 0 <= m <= n.
#[derive(Debug)]
pub struct BigIntStirlingTable {
    pub kind: StirlingKind,
    pub max_index: usize,
    rows: Vec<Vec<BigInt>>,
}

impl BigIntStirlingTable {
    pub fn build(kind: StirlingKind, max_index: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_index + 1);
        rows.push(vec![BigInt::from(1)]);
        for n in 0..max_index {
            let prev = &rows[n];
            let mut row = vec![BigInt::from(0); n + 2];
            for m in 0..=n + 1 {
                let carried = if m >= 1 { prev.get(m - 1).cloned().unwrap_or_default() } else { BigInt::from(0) };
                let scaled = match kind {
                    // s(n+1, m) = s(n, m-1) - n * s(n, m)
                    StirlingKind::FirstSigned => {
                        prev.get(m).map(|v| v * BigInt::from(n)).unwrap_or_default()
                    }
                    // S(n+1, m) = S(n, m-1) + m * S(n, m)
                    StirlingKind::Second => {
                        prev.get(m).map(|v| v * BigInt::from(m)).unwrap_or_default()
                    }
                };
                row[m] = match kind {
                    StirlingKind::FirstSigned => carried - scaled,
                    StirlingKind::Second => carried + scaled,
                };
            }
            rows.push(row);
        }
        BigIntStirlingTable { kind, max_index, rows }
    }

    pub fn get(&self, n: usize, m: usize) -> Result<&BigInt> {
        if m > n || n > self.max_index {
            return Err(WrightError::Range(format!(
                "stirling: indices (n={n}, m={m}) outside 0 <= m <= n <= {}",
                self.max_index
            )));
        }
        Ok(&self.rows[n][m])
    }
}

fn first_table() -> &'static BigIntStirlingTable {
    static T: OnceLock<BigIntStirlingTable> = OnceLock::new();
    T.get_or_init(|| BigIntStirlingTable::build(StirlingKind::FirstSigned, STIRLING_MAX_INDEX))
}

fn second_table() -> &'static BigIntStirlingTable {
    static T: OnceLock<BigIntStirlingTable> = OnceLock::new();
    T.get_or_init(|| BigIntStirlingTable::build(StirlingKind::Second, STIRLING_MAX_INDEX))
}

/// Exact Stirling number from the memoized tables (n <= 64).
pub fn stirling(kind: StirlingKind, n: usize, m: usize) -> Result<BigInt> {
    let table = match kind {
        StirlingKind::FirstSigned => first_table(),
        StirlingKind::Second => second_table(),
    };
    table.get(n, m).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn binom(n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        let mut r = BigInt::one();
        for i in 0..k {
            r = r * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        r
    }

    #[test]
    fn small_values() {
        assert_eq!(stirling(StirlingKind::FirstSigned, 4, 3).unwrap(), BigInt::from(-6));
        assert_eq!(stirling(StirlingKind::Second, 4, 3).unwrap(), BigInt::from(6));
        assert_eq!(stirling(StirlingKind::FirstSigned, 4, 2).unwrap(), BigInt::from(11));
        assert_eq!(stirling(StirlingKind::Second, 4, 2).unwrap(), BigInt::from(7));
        assert_eq!(stirling(StirlingKind::FirstSigned, 0, 0).unwrap(), BigInt::one());
        assert_eq!(stirling(StirlingKind::Second, 5, 0).unwrap(), BigInt::zero());
    }

    #[test]
    fn diagonal_and_edge() {
        for n in 0..=20 {
            assert_eq!(stirling(StirlingKind::FirstSigned, n, n).unwrap(), BigInt::one());
            assert_eq!(stirling(StirlingKind::Second, n, n).unwrap(), BigInt::one());
            if n >= 1 {
                assert!(stirling(StirlingKind::FirstSigned, n, 0).unwrap().is_zero());
                assert!(stirling(StirlingKind::Second, n, 0).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn near_diagonal_closed_forms() {
        // s(n, n-1) = -C(n,2), S(n, n-1) = C(n,2)
        // s(n, n-2) = (3n-1) C(n,3) / 4, S(n, n-2) = (3n-5) C(n,3) / 4
        for n in 2..=20u64 {
            let c2 = binom(n, 2);
            assert_eq!(stirling(StirlingKind::FirstSigned, n as usize, n as usize - 1).unwrap(), -c2.clone());
            assert_eq!(stirling(StirlingKind::Second, n as usize, n as usize - 1).unwrap(), c2);
            if n >= 2 {
                let c3 = binom(n, 3);
                let s_exp = BigInt::from(3 * n - 1) * c3.clone() / BigInt::from(4);
                let cap_s_exp = BigInt::from(3 * n - 5) * c3 / BigInt::from(4);
                assert_eq!(stirling(StirlingKind::FirstSigned, n as usize, n as usize - 2).unwrap(), s_exp);
                assert_eq!(stirling(StirlingKind::Second, n as usize, n as usize - 2).unwrap(), cap_s_exp);
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(stirling(StirlingKind::Second, 65, 3).is_err());
        assert!(stirling(StirlingKind::FirstSigned, 3, 4).is_err());
    }

    #[test]
    fn row_sums() {
        // sum_m |s(n,m)| = n!, sum_m S(n,m) = Bell number; check first kind for n=6: 720
        let mut total = BigInt::zero();
        for m in 0..=6 {
            let v = stirling(StirlingKind::FirstSigned, 6, m).unwrap();
            total += if v < BigInt::zero() { -v } else { v };
        }
        assert_eq!(total, BigInt::from(720));
    }
}
