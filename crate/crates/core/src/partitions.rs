//! Integer partition numbers.

use crate::error::{Error, Result};

/// `p(0), p(1), ..., p(m)` by Euler's pentagonal-number recurrence.
pub fn partition_counts(m: usize) -> Result<Vec<u128>> {
    let mut p: Vec<u128> = vec![1];
    for n in 1..=m {
        let mut total: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let mut term = p[n - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                term = term.checked_add(p[n - g2] as i128).ok_or(Error::Overflow)?;
            }
            total = total.checked_add(sign * term).ok_or(Error::Overflow)?;
        }
        p.push(u128::try_from(total).map_err(|_| Error::Overflow)?);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    // independent count: partitions of n into parts of size at most k
    fn brute(n: usize, k: usize) -> u128 {
        if n == 0 {
            return 1;
        }
        (1..=k.min(n)).map(|part| brute(n - part, part)).sum()
    }

    #[test]
    fn matches_enumeration() {
        let p = partition_counts(30).unwrap();
        for (n, &pn) in p.iter().enumerate() {
            assert_eq!(pn, brute(n, n), "p({n})");
        }
        assert_eq!(&p[..8], &[1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn large_values() {
        let p = partition_counts(100).unwrap();
        assert_eq!(p[100], 190_569_292);
    }
}
