//! Fixed-length binary expansions and the hierarchy of Mersenne intervals.
//!
//! A word `[a_0, ..., a_{L-1}]` encodes to `sum a_i 2^i`; `a_0` is always the
//! least significant bit. The interval `s(L) = [0, 2^L - 1]` doubles under
//! [`extend_interval`], and any word transformer can be projected onto a
//! sequence over `s(L)` with [`project_automaton`].

use crate::error::{Error, Result};
use crate::numtheory::{check_frame, check_len, mersenne};
use crate::report::CheckReport;
use crate::{BitLen, Natural, MAX_BITS, MAX_TABLE_BITS};

/// A natural number together with an explicit expansion length.
/// Leading zeros up to `len` are significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    value: Natural,
    len: BitLen,
}

impl BitWord {
    pub fn new(value: Natural, len: BitLen) -> Result<Self> {
        check_frame(value, len)?;
        Ok(BitWord { value, len })
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        Ok(BitWord {
            value: encode(bits)?,
            len: bits.len() as BitLen,
        })
    }

    pub fn value(&self) -> Natural {
        self.value
    }

    pub fn len(&self) -> BitLen {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coefficient `a_i`.
    pub fn bit(&self, i: BitLen) -> bool {
        i < self.len && (self.value >> i) & 1 == 1
    }

    /// `[a_0, ..., a_{L-1}]`.
    pub fn bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.bit(i)).collect()
    }
}

/// The interval `s(L) = [0, M(L)]` with `M(L) = 2^L - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MersenneInterval {
    len: BitLen,
}

impl MersenneInterval {
    pub fn new(len: BitLen) -> Result<Self> {
        check_len(len, 0, MAX_BITS)?;
        Ok(MersenneInterval { len })
    }

    pub fn len(&self) -> BitLen {
        self.len
    }

    pub fn upper(&self) -> Natural {
        mersenne(self.len)
    }

    pub fn contains(&self, x: Natural) -> bool {
        x <= self.upper()
    }

    /// Materializes `[0, 1, ..., 2^L - 1]`.
    pub fn to_vec(&self) -> Result<Vec<Natural>> {
        check_len(self.len, 0, MAX_TABLE_BITS)?;
        Ok((0..=self.upper()).collect())
    }
}

/// `p(w) = sum a_i 2^i`.
pub fn encode(bits: &[bool]) -> Result<Natural> {
    if bits.len() > MAX_BITS as usize {
        return Err(Error::LengthTooLarge {
            len: bits.len() as BitLen,
            max: MAX_BITS,
        });
    }
    Ok(bits
        .iter()
        .rev()
        .fold(0, |acc, &b| (acc << 1) | Natural::from(b)))
}

/// Inverse of [`encode`] at a fixed length, leading zeros included.
pub fn decode(x: Natural, len: BitLen) -> Result<Vec<bool>> {
    Ok(BitWord::new(x, len)?.bits())
}

/// Entry `(i, j)` of the lexicographic bit matrix `S_L`: bit `i` of `j`.
pub fn matrix_entry(row: BitLen, col: Natural, len: BitLen) -> Result<bool> {
    check_len(len, 0, MAX_BITS)?;
    if row >= len || col > mersenne(len) {
        return Err(Error::IndexOutOfBounds {
            row: row as u64,
            col: col.min(u64::MAX as Natural) as u64,
            rows: len as u64,
            cols: if len >= 64 { u64::MAX } else { 1 << len },
        });
    }
    Ok((col >> row) & 1 == 1)
}

/// Row `i` of `S_L`, materialized.
pub fn matrix_row(row: BitLen, len: BitLen) -> Result<Vec<bool>> {
    check_len(len, 0, MAX_TABLE_BITS)?;
    (0..=mersenne(len))
        .map(|j| matrix_entry(row, j, len))
        .collect()
}

/// `s(L) -> s(L+1) = [s(L), s(L) + 2^L]`.
pub fn extend_interval(seq: &[Natural], len: BitLen) -> Result<Vec<Natural>> {
    check_len(len, 0, MAX_TABLE_BITS - 1)?;
    let expected = 1usize << len;
    if seq.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: seq.len(),
        });
    }
    let shift: Natural = 1 << len;
    let mut out = Vec::with_capacity(2 * expected);
    out.extend_from_slice(seq);
    for &x in seq {
        out.push(
            x.checked_add(shift)
                .ok_or(Error::Overflow("extend_interval"))?,
        );
    }
    Ok(out)
}

/// Projects a word transformer onto `s(L)`: `x -> p(f(p^-1(x)))`.
///
/// Indicators are transformers that return a single bit.
pub fn project_automaton<F>(f: F, len: BitLen) -> Result<Vec<Natural>>
where
    F: Fn(&[bool]) -> Result<Vec<bool>>,
{
    check_len(len, 0, MAX_TABLE_BITS)?;
    (0..=mersenne(len))
        .map(|x| encode(&f(&decode(x, len)?)?))
        .collect()
}

/// Word transformer reversing symbol order.
pub fn reverse_word(bits: &[bool]) -> Result<Vec<bool>> {
    Ok(bits.iter().rev().copied().collect())
}

/// Indicator of palindromic words.
pub fn palindrome_indicator(bits: &[bool]) -> Result<Vec<bool>> {
    Ok(vec![bits.iter().eq(bits.iter().rev())])
}

fn invert_permutation(perm: &[usize]) -> Result<Vec<usize>> {
    let mut inv = vec![usize::MAX; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        if p >= perm.len() || inv[p] != usize::MAX {
            return Err(Error::NotBijective(perm.len()));
        }
        inv[p] = i;
    }
    Ok(inv)
}

/// Checks `sum a_{pi(i)} 2^i == sum a_i 2^{pi^-1(i)}` for every word in `s(L)`,
/// where `L = perm.len()`.
pub fn permutation_transfer_check(perm: &[usize]) -> Result<CheckReport> {
    let len = perm.len() as BitLen;
    check_len(len, 1, MAX_TABLE_BITS)?;
    let inv = invert_permutation(perm)?;
    let name = format!("transfer principle, L={len}");
    for x in 0..=mersenne(len) {
        let bit = |i: usize| (x >> i) & 1;
        let symbols: Natural = (0..perm.len()).map(|i| bit(perm[i]) << i).sum();
        let exponents: Natural = (0..perm.len()).map(|i| bit(i) << inv[i]).sum();
        if symbols != exponents {
            return Ok(CheckReport::fail(
                name,
                x as u64 + 1,
                format!("x={x}: permuted symbols {symbols} != permuted exponents {exponents}"),
            ));
        }
    }
    Ok(CheckReport::pass(name, 1 << len))
}

/// Bit-reversal table of `s(L)` built by `r(i+1) = [r(i), r(i) + 2^(L-i-1)]`, `r(0) = [0]`.
pub fn mirror_sequence_recursion(len: BitLen) -> Result<Vec<Natural>> {
    check_len(len, 1, MAX_TABLE_BITS)?;
    let mut seq: Vec<Natural> = vec![0];
    seq.reserve(1 << len);
    for i in 0..len {
        let shift: Natural = 1 << (len - i - 1);
        let n = seq.len();
        for j in 0..n {
            seq.push(seq[j] + shift);
        }
    }
    Ok(seq)
}
