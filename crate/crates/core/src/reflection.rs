//! The fixed-length reflector, even-order palindromes and their
//! difference identities.
//!
//! `reflect(x, L)` reverses the `L`-bit expansion of `x`, leading zeros
//! included, so it permutes `s(L)`. An even palindrome of order `2k` is
//! `reflect(w, k) + w 2^k`; sorted by `w`, consecutive palindromes differ
//! by `3 * 2^(k - t(w) - 1)`, the same factor `3 / 2^t` that drives the
//! accelerated Collatz map.
//!
//! Two of the cumulative-sum forms are easy to get wrong:
//!
//! * Summing reflector differences gives
//!   `reflect(i, k) = sum_{j=1..i} (3 * 2^(k - t(j) - 1) - 2^k)`; the
//!   `2^k` is subtracted once per summand, not once overall.
//!   [`reflect_partial_sum`] implements this form.
//! * Rewriting the summands through `t(j) = k - l2(reflect(j, k))` gives
//!   summands `3 * 2^(l2(reflect(j, k)) - 1)` with a positive exponent.
//!   See [`palindrome_partial_sum_by_mirror_length`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{binary_length, check_frame, check_len, mersenne, tz_in_frame};
use crate::report::CheckReport;
use crate::{BitLen, Natural, MAX_BITS, MAX_SCAN_BITS, MAX_TABLE_BITS};

/// Value of the bit-reversed `L`-bit word.
pub fn reflect(x: Natural, len: BitLen) -> Result<Natural> {
    check_frame(x, len)?;
    Ok(reflect_unchecked(x, len))
}

#[inline]
pub(crate) fn reflect_unchecked(x: Natural, len: BitLen) -> Natural {
    if len == 0 {
        0
    } else {
        x.reverse_bits() >> (Natural::BITS - len)
    }
}

/// Reflection permutation of `s(L)` as a lookup table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionTable {
    len: BitLen,
    table: Vec<Natural>,
}

impl ReflectionTable {
    /// Pointwise construction.
    pub fn new(len: BitLen) -> Result<Self> {
        check_len(len, 0, MAX_TABLE_BITS)?;
        let table = (0..=mersenne(len))
            .map(|x| reflect_unchecked(x, len))
            .collect();
        Ok(ReflectionTable { len, table })
    }

    pub fn len(&self) -> BitLen {
        self.len
    }

    pub fn as_slice(&self) -> &[Natural] {
        &self.table
    }

    pub fn into_vec(self) -> Vec<Natural> {
        self.table
    }

    pub fn get(&self, x: Natural) -> Option<Natural> {
        usize::try_from(x)
            .ok()
            .and_then(|i| self.table.get(i))
            .copied()
    }

    pub fn is_involution(&self) -> bool {
        self.table
            .iter()
            .enumerate()
            .all(|(x, &r)| self.table[r as usize] == x as Natural)
    }
}

/// Builds the reflection table by `r(s(L+1)) = [g0 r(s(L)), g1 r(s(L))]`
/// with `g_i(x) = 2x + i`, starting from `r(s(0)) = [0]`.
pub fn reflect_sequence_scaling(len: BitLen) -> Result<ReflectionTable> {
    check_len(len, 1, MAX_TABLE_BITS)?;
    let mut table: Vec<Natural> = vec![0];
    for _ in 0..len {
        let mut next = Vec::with_capacity(table.len() * 2);
        next.extend(table.iter().map(|&x| 2 * x));
        next.extend(table.iter().map(|&x| 2 * x + 1));
        table = next;
    }
    Ok(ReflectionTable { len, table })
}

/// Reflects the concatenation `x ++ y` (value `x + y 2^L`) at length `2L` and
/// checks it against `reflect(y, L) + reflect(x, L) 2^L`.
pub fn concat_reflect(x: Natural, y: Natural, len: BitLen) -> Result<Natural> {
    check_frame(x, len)?;
    check_frame(y, len)?;
    if 2 * len > MAX_BITS {
        return Err(Error::LengthTooLarge {
            len: 2 * len,
            max: MAX_BITS,
        });
    }
    let joined = reflect_unchecked(x | (y << len), 2 * len);
    let split = reflect_unchecked(y, len) | (reflect_unchecked(x, len) << len);
    if joined != split {
        return Err(Error::Consistency(format!(
            "reflect({x} ++ {y}) = {joined}, expected {split}"
        )));
    }
    Ok(joined)
}

/// `(l2(x) + t(reflect(x)), l2(reflect(x)) + t(x))`; both equal `L`.
pub fn mirror_length_identity(x: Natural, len: BitLen) -> Result<(BitLen, BitLen)> {
    let r = reflect(x, len)?;
    Ok((
        binary_length(x) + tz_in_frame(r, len),
        binary_length(r) + tz_in_frame(x, len),
    ))
}

/// Checks that `n -> t(reflect(n, L))` over `s(L)` is the descending sort of
/// `n -> t(n)`, with `t(0) = L`.
pub fn sorted_tzs_property(len: BitLen) -> Result<CheckReport> {
    check_len(len, 1, MAX_TABLE_BITS)?;
    let composed: Vec<BitLen> = (0..=mersenne(len))
        .map(|n| tz_in_frame(reflect_unchecked(n, len), len))
        .collect();
    let mut sorted: Vec<BitLen> = (0..=mersenne(len)).map(|n| tz_in_frame(n, len)).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let name = format!("sorted TZS under reflection, L={len}");
    match composed.iter().zip(&sorted).position(|(a, b)| a != b) {
        None => Ok(CheckReport::pass(name, composed.len() as u64)),
        Some(n) => Ok(CheckReport::fail(
            name,
            n as u64 + 1,
            format!(
                "n={n}: t(reflect(n))={} but sorted t={}",
                composed[n], sorted[n]
            ),
        )),
    }
}

/// Even palindrome of order `2k` generated by `w`: `reflect(w, k) + w 2^k`.
pub fn palindrome(w: Natural, k: BitLen) -> Result<Natural> {
    check_frame(w, k)?;
    if 2 * k > MAX_BITS {
        return Err(Error::LengthTooLarge {
            len: 2 * k,
            max: MAX_BITS,
        });
    }
    Ok(reflect_unchecked(w, k) | (w << k))
}

/// All `2^k` palindromes of order `2k` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PalindromeSequence {
    k: BitLen,
    values: Vec<Natural>,
}

impl PalindromeSequence {
    pub fn new(k: BitLen) -> Result<Self> {
        check_len(k, 0, MAX_TABLE_BITS)?;
        let values = (0..=mersenne(k))
            .map(|w| palindrome(w, k))
            .collect::<Result<_>>()?;
        Ok(PalindromeSequence { k, values })
    }

    pub fn half_length(&self) -> BitLen {
        self.k
    }

    pub fn as_slice(&self) -> &[Natural] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<Natural> {
        self.values
    }
}

/// Number of fixed points of `reflect(., L)` on `s(L)`, by direct scan.
pub fn palindrome_count(len: BitLen) -> Result<Natural> {
    if len % 2 == 1 {
        return Err(Error::OddLength(len));
    }
    check_len(len, 0, MAX_SCAN_BITS)?;
    Ok((0..=mersenne(len))
        .filter(|&x| reflect_unchecked(x, len) == x)
        .count() as Natural)
}

/// `P(w) - P(w - 1)` evaluated directly from the palindrome values.
pub fn palindrome_diff(w: Natural, k: BitLen) -> Result<Natural> {
    if w == 0 {
        return Err(Error::NoPredecessor("palindrome_diff"));
    }
    Ok(palindrome(w, k)? - palindrome(w - 1, k)?)
}

/// Closed form `3 * 2^(k - t(w) - 1)` of [`palindrome_diff`].
pub fn palindrome_diff_closed_form(w: Natural, k: BitLen) -> Result<Natural> {
    if w == 0 {
        return Err(Error::NoPredecessor("palindrome_diff_closed_form"));
    }
    check_frame(w, k)?;
    Ok(3 << (k - w.trailing_zeros() - 1))
}

/// `reflect(w, k) - reflect(w - 1, k)`, signed.
pub fn reflect_diff(w: Natural, k: BitLen) -> Result<i128> {
    if w == 0 {
        return Err(Error::NoPredecessor("reflect_diff"));
    }
    if k >= MAX_BITS {
        return Err(Error::LengthTooLarge {
            len: k,
            max: MAX_BITS - 1,
        });
    }
    let cur = reflect(w, k)? as i128;
    let prev = reflect(w - 1, k)? as i128;
    Ok(cur - prev)
}

/// Closed form `3 * 2^(k - t(w) - 1) - 2^k` of [`reflect_diff`].
pub fn reflect_diff_closed_form(w: Natural, k: BitLen) -> Result<i128> {
    if k >= MAX_BITS - 1 {
        return Err(Error::LengthTooLarge {
            len: k,
            max: MAX_BITS - 2,
        });
    }
    Ok(palindrome_diff_closed_form(w, k)? as i128 - (1i128 << k))
}

/// `P(i)` as the partial sum `sum_{j=1..i} 3 * 2^(k - t(j) - 1)`.
pub fn palindrome_partial_sum(i: Natural, k: BitLen) -> Result<Natural> {
    check_frame(i, k)?;
    check_len(k, 0, MAX_BITS / 2)?;
    Ok((1..=i).map(|j| 3 << (k - j.trailing_zeros() - 1)).sum())
}

/// `reflect(i, k)` as the partial sum `sum_{j=1..i} (3 * 2^(k - t(j) - 1) - 2^k)`.
pub fn reflect_partial_sum(i: Natural, k: BitLen) -> Result<Natural> {
    check_frame(i, k)?;
    check_len(k, 0, MAX_BITS / 2)?;
    let total: i128 = (1..=i)
        .map(|j| (3i128 << (k - j.trailing_zeros() - 1)) - (1i128 << k))
        .sum();
    Natural::try_from(total)
        .map_err(|_| Error::Consistency(format!("negative reflector sum {total}")))
}

/// `P(i)` with summands `3 * 2^(l2(reflect(j, k)) - 1)`.
pub fn palindrome_partial_sum_by_mirror_length(i: Natural, k: BitLen) -> Result<Natural> {
    check_frame(i, k)?;
    check_len(k, 0, MAX_BITS / 2)?;
    Ok((1..=i)
        .map(|j| 3 << (binary_length(reflect_unchecked(j, k)) - 1))
        .sum())
}

/// `reflect(i, k)` with summands `3 * 2^(l2(reflect(j, k)) - 1) - 2^k`.
pub fn reflect_partial_sum_by_mirror_length(i: Natural, k: BitLen) -> Result<Natural> {
    check_frame(i, k)?;
    check_len(k, 0, MAX_BITS / 2)?;
    let total: i128 = (1..=i)
        .map(|j| (3i128 << (binary_length(reflect_unchecked(j, k)) - 1)) - (1i128 << k))
        .sum();
    Natural::try_from(total)
        .map_err(|_| Error::Consistency(format!("negative reflector sum {total}")))
}
