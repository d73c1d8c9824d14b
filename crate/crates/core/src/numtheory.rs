//! Integer primitives shared by every other module.
//!
//! Values are [`Natural`]s (unsigned 128-bit). Every operation that can
//! grow a value uses checked arithmetic and reports [`Error::Overflow`]
//! instead of wrapping.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::{BitLen, Natural, MAX_BITS};

/// `1 + floor(log2 x)` for `x >= 1`, and `0` for `x = 0`.
#[inline]
pub fn binary_length(x: Natural) -> BitLen {
    Natural::BITS - x.leading_zeros()
}

/// 2-adic valuation of `x`.
///
/// Zero has no finite valuation. Inside a fixed frame of `L` bits the
/// all-zeros word is treated as having `L` trailing zeros, so
/// `trailing_zeros(0, Some(L)) == L`.
pub fn trailing_zeros(x: Natural, frame: Option<BitLen>) -> Result<BitLen> {
    match (x, frame) {
        (0, Some(len)) => Ok(len),
        (0, None) => Err(Error::UndefinedAtZero("trailing_zeros")),
        (x, Some(len)) => {
            check_frame(x, len)?;
            Ok(x.trailing_zeros())
        }
        (x, None) => Ok(x.trailing_zeros()),
    }
}

/// Trailing zeros with the frame convention for zero. Callers guarantee `x < 2^len`.
#[inline]
pub(crate) fn tz_in_frame(x: Natural, len: BitLen) -> BitLen {
    if x == 0 {
        len
    } else {
        x.trailing_zeros()
    }
}

/// Largest odd divisor of `x`.
pub fn odd_part(x: Natural) -> Result<Natural> {
    if x == 0 {
        return Err(Error::UndefinedAtZero("odd_part"));
    }
    Ok(x >> x.trailing_zeros())
}

/// Bitwise NOT inside an `L`-bit frame, `2^L - 1 - x`.
pub fn complement(x: Natural, len: BitLen) -> Result<Natural> {
    check_frame(x, len)?;
    Ok(mersenne(len) - x)
}

/// Number of one bits.
#[inline]
pub fn digit_sum(x: Natural) -> BitLen {
    x.count_ones()
}

/// Counts of each trailing-zeros value over `x` in `[1, 2^L - 1]`.
///
/// Value `v` occurs exactly `2^(L - v - 1)` times for `0 <= v < L`.
pub fn tzs_value_histogram(len: BitLen) -> Result<BTreeMap<BitLen, Natural>> {
    check_len(len, 1, crate::MAX_SCAN_BITS)?;
    let mut hist = BTreeMap::new();
    for x in 1..=mersenne(len) {
        *hist.entry(x.trailing_zeros()).or_insert(0) += 1;
    }
    Ok(hist)
}

/// `2^L`, or an overflow error when `L >= 128`.
pub fn pow2(len: BitLen) -> Result<Natural> {
    Natural::checked_shl(1, len)
        .filter(|_| len < Natural::BITS)
        .ok_or(Error::Overflow("pow2"))
}

/// The Mersenne number `2^L - 1`, the top of the interval `s(L)`.
#[inline]
pub fn mersenne(len: BitLen) -> Natural {
    if len >= Natural::BITS {
        Natural::MAX
    } else {
        (1 << len) - 1
    }
}

/// Whether `x` is a positive power of two (including `2^0 = 1`).
#[inline]
pub fn is_power_of_two(x: Natural) -> bool {
    x.is_power_of_two()
}

pub(crate) fn check_frame(x: Natural, len: BitLen) -> Result<()> {
    if len > MAX_BITS {
        return Err(Error::LengthTooLarge { len, max: MAX_BITS });
    }
    if x > mersenne(len) {
        return Err(Error::OutOfFrame { value: x, len });
    }
    Ok(())
}

pub(crate) fn check_len(len: BitLen, min: BitLen, max: BitLen) -> Result<()> {
    if len < min {
        return Err(Error::LengthTooSmall { len, min });
    }
    if len > max {
        return Err(Error::LengthTooLarge { len, max });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_length_examples() {
        assert_eq!(binary_length(0), 0);
        assert_eq!(binary_length(1), 1);
        assert_eq!(binary_length(8), 4);
        assert_eq!(binary_length(Natural::MAX), 128);
    }

    #[test]
    fn trailing_zeros_examples() {
        assert_eq!(trailing_zeros(12, None), Ok(2));
        let tzs: Vec<_> = (2..=15).map(|n| trailing_zeros(n, None).unwrap()).collect();
        assert_eq!(tzs, [1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0]);
        assert_eq!(trailing_zeros(0, Some(5)), Ok(5));
        assert_eq!(
            trailing_zeros(0, None),
            Err(Error::UndefinedAtZero("trailing_zeros"))
        );
        assert!(matches!(
            trailing_zeros(8, Some(3)),
            Err(Error::OutOfFrame { .. })
        ));
    }

    #[test]
    fn trailing_zeros_matches_indicator_sum() {
        // t(x) = number of i >= 1 with 2^i | x
        for x in 1u128..5000 {
            let indicator = (1..=binary_length(x))
                .filter(|&i| x % (1 << i) == 0)
                .count();
            assert_eq!(trailing_zeros(x, None).unwrap() as usize, indicator);
        }
    }

    #[test]
    fn odd_part_examples() {
        assert_eq!(odd_part(12), Ok(3));
        assert_eq!(odd_part(7), Ok(7));
        assert_eq!(odd_part(64), Ok(1));
        assert!(odd_part(0).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(0, 3), Ok(7));
        assert_eq!(complement(5, 3), Ok(2));
        assert!(matches!(complement(8, 3), Err(Error::OutOfFrame { .. })));
        for len in 1..=10 {
            for x in 0..(1u128 << len) {
                let c = complement(x, len).unwrap();
                assert_ne!(c, x);
                assert_eq!(complement(c, len), Ok(x));
            }
        }
        assert_eq!(complement(0, 128), Ok(Natural::MAX));
    }

    #[test]
    fn digit_sum_examples() {
        let ds: Vec<_> = (0..8).map(digit_sum).collect();
        assert_eq!(ds, [0, 1, 1, 2, 1, 2, 2, 3]);
        for k in 0..128 {
            assert_eq!(digit_sum(1 << k), 1);
        }
        assert_eq!(digit_sum(255), 8);
    }

    #[test]
    fn histogram_small_cases() {
        assert_eq!(
            tzs_value_histogram(3).unwrap(),
            BTreeMap::from([(0, 4), (1, 2), (2, 1)])
        );
        assert_eq!(tzs_value_histogram(1).unwrap(), BTreeMap::from([(0, 1)]));
        assert!(tzs_value_histogram(0).is_err());
    }

    #[test]
    fn histogram_scaling_law() {
        for len in 1..=16 {
            let hist = tzs_value_histogram(len).unwrap();
            assert_eq!(hist.values().sum::<Natural>(), mersenne(len));
            assert_eq!(hist.len() as BitLen, len);
            for (&v, &count) in &hist {
                assert_eq!(count, 1 << (len - v - 1), "L={len} v={v}");
            }
        }
    }

    #[test]
    fn pow2_bounds() {
        assert_eq!(pow2(0), Ok(1));
        assert_eq!(pow2(127), Ok(1 << 127));
        assert!(pow2(128).is_err());
    }
}
