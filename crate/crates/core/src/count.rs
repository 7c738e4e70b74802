//! Checked exact arithmetic for counting formulas. Overflow is an error,
//! never a wraparound.

use crate::error::{Error, Result};

pub(crate) fn pow(base: u128, exp: usize, what: &'static str) -> Result<u128> {
    crate::block_space::checked_pow(base, exp).ok_or(Error::Overflow(what))
}

pub(crate) fn mul(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn add(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// Smallest `e` with `m^e >= x`, i.e. `⌈log_m x⌉` for `x >= 1`.
pub fn ceil_log(m: u32, x: u128) -> u32 {
    let mut e = 0;
    let mut p: u128 = 1;
    while p < x {
        p = p.saturating_mul(u128::from(m));
        e += 1;
    }
    e
}

/// `Some(e)` if `x == m^e`.
pub fn exact_log(m: u32, x: u128) -> Option<u32> {
    let e = ceil_log(m, x);
    (crate::block_space::checked_pow(u128::from(m), e as usize) == Some(x)).then_some(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logs() {
        assert_eq!(ceil_log(5, 1), 0);
        assert_eq!(ceil_log(5, 5), 1);
        assert_eq!(ceil_log(5, 6), 2);
        assert_eq!(ceil_log(9, 3), 1);
        assert_eq!(exact_log(4, 16), Some(2));
        assert_eq!(exact_log(9, 3), None);
        assert_eq!(exact_log(7, 1), Some(0));
    }

    #[test]
    fn overflow_is_an_error() {
        assert!(pow(10, 40, "x").is_err());
        assert!(mul(u128::MAX, 2, "x").is_err());
        assert!(add(u128::MAX, 1, "x").is_err());
        assert_eq!(pow(7, 3, "x").unwrap(), 343);
    }
}
