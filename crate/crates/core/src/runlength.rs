//! Signed run-length codes of fixed-length words and the block-count
//! measure (RLD) derived from them.
//!
//! A word is read from `a_0` upwards and split into maximal blocks of equal
//! bits. Each block contributes its length, negated for a block of zeros.
//! The first coefficient therefore carries the trailing zeros of an even
//! word and the last one the leading zeros inside the frame.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{binary_length, check_frame, check_len, digit_sum, mersenne};
use crate::reflection::reflect_unchecked;
use crate::report::CheckReport;
use crate::{BitLen, Natural, MAX_BITS, MAX_TABLE_BITS};

/// Alternating signed block lengths of a word in a fixed frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RunLengthCode {
    coeffs: Vec<i32>,
    frame: BitLen,
}

impl RunLengthCode {
    /// Validates the coefficient list against the frame.
    pub fn new(coeffs: Vec<i32>, frame: BitLen) -> Result<Self> {
        check_len(frame, 1, MAX_BITS)?;
        if coeffs.is_empty() {
            return Err(Error::InvalidCode("empty coefficient list".into()));
        }
        if let Some(i) = coeffs.iter().position(|&c| c == 0) {
            return Err(Error::InvalidCode(format!("coefficient {i} is zero")));
        }
        if let Some(i) = coeffs.windows(2).position(|w| (w[0] > 0) == (w[1] > 0)) {
            return Err(Error::InvalidCode(format!(
                "coefficients {i} and {} have the same sign",
                i + 1
            )));
        }
        let total: i64 = coeffs.iter().map(|&c| i64::from(c).abs()).sum();
        if total != i64::from(frame) {
            return Err(Error::InvalidCode(format!(
                "block lengths sum to {total}, frame is {frame}"
            )));
        }
        Ok(RunLengthCode { coeffs, frame })
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn frame(&self) -> BitLen {
        self.frame
    }

    /// Number of blocks.
    pub fn dimension(&self) -> usize {
        self.coeffs.len()
    }

    /// Block lengths sorted in decreasing order: an integer partition of the frame.
    pub fn partition(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self.coeffs.iter().map(|c| c.unsigned_abs()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

/// Run-length code of `x` in an `L`-bit frame.
pub fn rl_encode(x: Natural, len: BitLen) -> Result<RunLengthCode> {
    check_len(len, 1, MAX_BITS)?;
    check_frame(x, len)?;
    let mut coeffs = Vec::new();
    let mut run = 0i32;
    let mut current = x & 1 == 1;
    for i in 0..len {
        let bit = (x >> i) & 1 == 1;
        if bit != current {
            coeffs.push(if current { run } else { -run });
            current = bit;
            run = 0;
        }
        run += 1;
    }
    coeffs.push(if current { run } else { -run });
    Ok(RunLengthCode { coeffs, frame: len })
}

/// Inverse of [`rl_encode`].
pub fn rl_decode(code: &RunLengthCode) -> Result<Natural> {
    let code = RunLengthCode::new(code.coeffs.clone(), code.frame)?;
    let mut x: Natural = 0;
    let mut pos: BitLen = 0;
    for &c in &code.coeffs {
        let run = c.unsigned_abs();
        if c > 0 {
            x |= mersenne(run) << pos;
        }
        pos += run;
    }
    Ok(x)
}

/// Number of run-length blocks of `x` in an `L`-bit frame.
pub fn rld(x: Natural, len: BitLen) -> Result<BitLen> {
    check_len(len, 1, MAX_BITS)?;
    check_frame(x, len)?;
    Ok(rld_unchecked(x, len))
}

#[inline]
pub(crate) fn rld_unchecked(x: Natural, len: BitLen) -> BitLen {
    // one block plus one per change between neighbouring bits
    1 + ((x ^ (x >> 1)) & mersenne(len - 1)).count_ones()
}

/// Which frame a value's run-length code is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FrameMode {
    /// `L = l2(x)`: no leading-zeros block.
    Minimal,
    /// A common frame for a whole interval study.
    Fixed,
}

impl std::fmt::Display for FrameMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FrameMode::Minimal => "minimal",
            FrameMode::Fixed => "fixed",
        })
    }
}

/// RLD of a positive `x` in its minimal frame `l2(x)`.
pub fn rld_minimal(x: Natural) -> Result<BitLen> {
    if x == 0 {
        return Err(Error::UndefinedAtZero("rld_minimal"));
    }
    Ok(rld_unchecked(x, binary_length(x)))
}

/// Block counts over all of `s(L)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RldSequence {
    len: BitLen,
    values: Vec<BitLen>,
}

impl RldSequence {
    /// Pointwise construction.
    pub fn new(len: BitLen) -> Result<Self> {
        check_len(len, 1, MAX_TABLE_BITS)?;
        let values = (0..=mersenne(len)).map(|x| rld_unchecked(x, len)).collect();
        Ok(RldSequence { len, values })
    }

    pub fn len(&self) -> BitLen {
        self.len
    }

    pub fn as_slice(&self) -> &[BitLen] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<BitLen> {
        self.values
    }
}

/// Builds the RLD sequence of `s(L)` by list concatenation.
///
/// Going from `L` to `L + 1` bits, the words `2^L + m` put a one above `m`,
/// which opens a new block exactly when the top bit of `m` is zero, i.e. for
/// the lower half of `s(L)`. The words below `2^L` are the complements of
/// those above, in reverse order, and complement keeps the block count. So
///
/// ```text
/// upper = rld_L + sigma,  sigma_j = 1 for j < 2^(L-1), else 0
/// rld_{L+1} = [reverse(upper), upper]
/// ```
///
/// starting from the single-entry list `[1]`.
pub fn rld_sequence_recursion(len: BitLen) -> Result<RldSequence> {
    check_len(len, 1, MAX_TABLE_BITS)?;
    let mut values: Vec<BitLen> = vec![1];
    for _ in 0..len {
        let half = values.len() / 2;
        let upper: Vec<BitLen> = values
            .iter()
            .enumerate()
            .map(|(j, &v)| v + BitLen::from(j < half))
            .collect();
        let mut next = Vec::with_capacity(upper.len() * 2);
        next.extend(upper.iter().rev());
        next.extend_from_slice(&upper);
        values = next;
    }
    Ok(RldSequence { len, values })
}

/// Checks `rld(reflect(n, L)) == rld(n)` over `s(L)`.
pub fn rld_reflection_invariance(len: BitLen) -> Result<CheckReport> {
    check_len(len, 1, MAX_TABLE_BITS)?;
    let name = format!("rld reflection invariance, L={len}");
    for n in 0..=mersenne(len) {
        let a = rld_unchecked(n, len);
        let b = rld_unchecked(reflect_unchecked(n, len), len);
        if a != b {
            return Ok(CheckReport::fail(
                name,
                n as u64 + 1,
                format!("n={n}: rld={a}, rld of reflection={b}"),
            ));
        }
    }
    Ok(CheckReport::pass(name, 1 << len))
}

/// Integer partitions of `n`, each in non-increasing order.
pub fn integer_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Checks that every integer partition of `L` shows up as the multiset of
/// block lengths of some word in `s(L)`.
pub fn partition_coverage(len: BitLen) -> Result<CheckReport> {
    check_len(len, 1, MAX_TABLE_BITS)?;
    let seen: BTreeSet<Vec<u32>> = (0..=mersenne(len))
        .map(|x| rl_encode(x, len).map(|c| c.partition()))
        .collect::<Result<_>>()?;
    let partitions = integer_partitions(len);
    let name = format!("partition coverage, L={len}");
    match partitions.iter().position(|p| !seen.contains(p)) {
        None => Ok(CheckReport::pass(name, partitions.len() as u64)),
        Some(i) => Ok(CheckReport::fail(
            name,
            i as u64 + 1,
            format!("partition {:?} has no word", partitions[i]),
        )),
    }
}

/// RLD histogram over `s(L)` next to the digit-sum histogram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RldDistribution {
    pub len: BitLen,
    pub rld: BTreeMap<BitLen, Natural>,
    pub digit_sum: BTreeMap<BitLen, Natural>,
}

pub fn rld_distribution(len: BitLen) -> Result<RldDistribution> {
    check_len(len, 1, crate::MAX_SCAN_BITS)?;
    let mut rld = BTreeMap::new();
    let mut ds = BTreeMap::new();
    for x in 0..=mersenne(len) {
        *rld.entry(rld_unchecked(x, len)).or_insert(0) += 1;
        *ds.entry(digit_sum(x)).or_insert(0) += 1;
    }
    Ok(RldDistribution {
        len,
        rld,
        digit_sum: ds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{complement, trailing_zeros};

    fn code(c: &[i32], frame: BitLen) -> RunLengthCode {
        RunLengthCode::new(c.to_vec(), frame).unwrap()
    }

    /// Counts blocks on the formatted bit string.
    fn rld_oracle(x: Natural, len: BitLen) -> BitLen {
        let s = format!("{:0w$b}", x, w = len as usize);
        let b = s.as_bytes();
        1 + b.windows(2).filter(|w| w[0] != w[1]).count() as BitLen
    }

    #[test]
    fn encode_examples() {
        assert_eq!(rl_encode(4, 3).unwrap().coeffs(), &[-2, 1]);
        assert_eq!(rl_encode(0, 3).unwrap().coeffs(), &[-3]);
        assert_eq!(rl_encode(5, 4).unwrap().coeffs(), &[1, -1, 1, -1]);
        assert!(rl_encode(8, 3).is_err());
        assert!(rl_encode(0, 0).is_err());
    }

    #[test]
    fn decode_examples() {
        assert_eq!(rl_decode(&code(&[-2, 1], 3)), Ok(4));
        for len in 1..=10 {
            assert_eq!(rl_decode(&code(&[-(len as i32)], len)), Ok(0));
        }
    }

    #[test]
    fn invalid_codes_rejected() {
        assert!(RunLengthCode::new(vec![], 3).is_err());
        assert!(RunLengthCode::new(vec![-1, 0, 2], 3).is_err());
        assert!(RunLengthCode::new(vec![-1, -2], 3).is_err());
        assert!(RunLengthCode::new(vec![-1, 1], 3).is_err());
        let bad = RunLengthCode {
            coeffs: vec![2, 2],
            frame: 4,
        };
        assert!(matches!(rl_decode(&bad), Err(Error::InvalidCode(_))));
    }

    #[test]
    fn codec_invariants() {
        for len in 1..=14 {
            for x in 0..=mersenne(len) {
                let c = rl_encode(x, len).unwrap();
                let total: u32 = c.coeffs().iter().map(|c| c.unsigned_abs()).sum();
                assert_eq!(total, len);
                assert_eq!(rl_decode(&c), Ok(x));
                assert_eq!(c.dimension() as BitLen, rld(x, len).unwrap());
                assert_eq!(rld(x, len).unwrap(), rld_oracle(x, len));
                let first = c.coeffs()[0];
                if x != 0 && x % 2 == 0 {
                    assert_eq!(first, -(trailing_zeros(x, None).unwrap() as i32));
                } else if x % 2 == 1 {
                    assert!(first > 0);
                }
                let last = *c.coeffs().last().unwrap();
                if binary_length(x) < len {
                    assert_eq!(last, -((len - binary_length(x)) as i32));
                } else {
                    assert!(last > 0);
                }
                assert_eq!(
                    rld(complement(x, len).unwrap(), len),
                    rld(x, len),
                    "complement x={x} L={len}"
                );
            }
        }
    }

    #[test]
    fn rld_examples() {
        assert_eq!(rld(0, 7), Ok(1));
        assert_eq!(rld(5, 4), Ok(4));
        assert_eq!(
            RldSequence::new(3).unwrap().as_slice(),
            &[1, 2, 3, 2, 2, 3, 2, 1]
        );
        assert_eq!(rld_minimal(16), Ok(2));
        assert_eq!(rld_minimal(3), Ok(1));
        assert!(rld_minimal(0).is_err());
    }

    #[test]
    fn recursion_matches_pointwise() {
        assert_eq!(rld_sequence_recursion(2).unwrap().as_slice(), &[1, 2, 2, 1]);
        assert_eq!(
            rld_sequence_recursion(3).unwrap().as_slice(),
            &[1, 2, 3, 2, 2, 3, 2, 1]
        );
        for len in 1..=14 {
            assert_eq!(rld_sequence_recursion(len), RldSequence::new(len));
        }
    }

    #[test]
    fn invariance_and_partitions() {
        for len in 1..=12 {
            assert!(rld_reflection_invariance(len).unwrap().passed);
            assert!(partition_coverage(len).unwrap().passed);
        }
        assert_eq!(
            integer_partitions(3),
            vec![vec![3], vec![2, 1], vec![1, 1, 1]]
        );
        // p(n) for n = 1..=12
        let counts: Vec<usize> = (1..=12).map(|n| integer_partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn distributions() {
        let d = rld_distribution(2).unwrap();
        assert_eq!(d.rld, BTreeMap::from([(1, 2), (2, 2)]));
        let d = rld_distribution(3).unwrap();
        assert_eq!(d.rld, BTreeMap::from([(1, 2), (2, 4), (3, 2)]));
        let d = rld_distribution(4).unwrap();
        assert_eq!(
            d.digit_sum,
            BTreeMap::from([(0, 1), (1, 4), (2, 6), (3, 4), (4, 1)])
        );
        for len in 1..=12 {
            let d = rld_distribution(len).unwrap();
            assert_eq!(d.rld.values().sum::<Natural>(), 1 << len);
            assert!(d.rld.keys().all(|&v| (1..=len).contains(&v)));
        }
    }
}
