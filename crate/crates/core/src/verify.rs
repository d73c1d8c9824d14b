//! Named verification suites. Each one sweeps a closed form against its
//! direct evaluation over a whole range and reports the first mismatch.

use std::fmt;
use std::str::FromStr;

use crate::collatz::{find_fixed_points, verify_equivalence, verify_subsequence};
use crate::error::{Error, Result};
use crate::numtheory::mersenne;
use crate::reflection::{
    concat_reflect, mirror_length_identity, palindrome, palindrome_diff,
    palindrome_diff_closed_form, palindrome_partial_sum, palindrome_partial_sum_by_mirror_length,
    reflect, reflect_partial_sum, reflect_partial_sum_by_mirror_length, sorted_tzs_property,
};
use crate::report::CheckReport;
use crate::runlength::{
    partition_coverage, rl_decode, rl_encode, rld_reflection_invariance, rld_sequence_recursion,
    RldSequence,
};
use crate::{BitLen, Natural};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Prop1,
    Prop2,
    Eq7,
    Corollary,
    Equivalence,
    RldRecursion,
    Partition,
    Antihom,
    FixedPoints,
    Subsequence,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Prop1,
        Suite::Prop2,
        Suite::Eq7,
        Suite::Corollary,
        Suite::Equivalence,
        Suite::RldRecursion,
        Suite::Partition,
        Suite::Antihom,
        Suite::FixedPoints,
        Suite::Subsequence,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Prop2 => "prop2",
            Suite::Eq7 => "eq7",
            Suite::Corollary => "corollary",
            Suite::Equivalence => "equivalence",
            Suite::RldRecursion => "rld-recursion",
            Suite::Partition => "partition",
            Suite::Antihom => "antihom",
            Suite::FixedPoints => "fixed-points",
            Suite::Subsequence => "subsequence",
        }
    }

    pub fn run(&self, params: &SuiteParams) -> Result<CheckReport> {
        match self {
            Suite::Prop1 => sorted_tzs_up_to(params.len.unwrap_or(16)),
            Suite::Prop2 => palindrome_diffs_up_to(params.k.unwrap_or(12)),
            Suite::Eq7 => mirror_lengths_up_to(params.len.unwrap_or(16)),
            Suite::Corollary => partial_sums_up_to(params.k.unwrap_or(12)),
            Suite::Equivalence => verify_equivalence(params.max.unwrap_or(1 << 16)),
            Suite::RldRecursion => rld_recursion_up_to(params.len.unwrap_or(14)),
            Suite::Partition => codec_up_to(params.len.unwrap_or(12)),
            Suite::Antihom => antihomomorphism_up_to(params.len.unwrap_or(6)),
            Suite::FixedPoints => unique_fixed_point(params.max.unwrap_or(1 << 20)),
            Suite::Subsequence => subsequences_up_to(params.max.unwrap_or(100_000)),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Range parameters; `None` picks the suite's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub len: Option<BitLen>,
    pub k: Option<BitLen>,
    pub max: Option<Natural>,
}

/// Runs `check` for `L = 1..=max_len` and stops at the first failure.
fn sweep(
    name: String,
    max_len: BitLen,
    mut check: impl FnMut(BitLen) -> Result<std::result::Result<u64, String>>,
) -> Result<CheckReport> {
    let mut checked = 0;
    for len in 1..=max_len {
        match check(len)? {
            Ok(n) => checked += n,
            Err(msg) => return Ok(CheckReport::fail(name, checked, msg)),
        }
    }
    Ok(CheckReport::pass(name, checked))
}

fn from_report(r: CheckReport) -> std::result::Result<u64, String> {
    if r.passed {
        Ok(r.checked)
    } else {
        Err(r.to_string())
    }
}

pub fn sorted_tzs_up_to(max_len: BitLen) -> Result<CheckReport> {
    sweep(
        format!("prop1 sorted TZS, L <= {max_len}"),
        max_len,
        |len| Ok(from_report(sorted_tzs_property(len)?)),
    )
}

pub fn mirror_lengths_up_to(max_len: BitLen) -> Result<CheckReport> {
    sweep(
        format!("eq7 mirror lengths, L <= {max_len}"),
        max_len,
        |len| {
            for x in 0..=mersenne(len) {
                let pair = mirror_length_identity(x, len)?;
                if pair != (len, len) {
                    return Ok(Err(format!("L={len} x={x}: sums {pair:?}")));
                }
            }
            Ok(Ok(1 << len))
        },
    )
}

pub fn palindrome_diffs_up_to(max_k: BitLen) -> Result<CheckReport> {
    sweep(
        format!("prop2 palindrome differences, k <= {max_k}"),
        max_k,
        |k| {
            for w in 1..=mersenne(k) {
                let direct = palindrome_diff(w, k)?;
                let closed = palindrome_diff_closed_form(w, k)?;
                if direct != closed {
                    return Ok(Err(format!("k={k} w={w}: {direct} != {closed}")));
                }
            }
            Ok(Ok(mersenne(k) as u64))
        },
    )
}

pub fn partial_sums_up_to(max_k: BitLen) -> Result<CheckReport> {
    sweep(
        format!("corollary partial sums, k <= {max_k}"),
        max_k,
        |k| {
            for i in 0..=mersenne(k) {
                let p = palindrome(i, k)?;
                let r = reflect(i, k)?;
                let sums = [
                    (palindrome_partial_sum(i, k)?, p, "palindrome"),
                    (reflect_partial_sum(i, k)?, r, "reflector"),
                    (
                        palindrome_partial_sum_by_mirror_length(i, k)?,
                        p,
                        "palindrome via l2",
                    ),
                    (
                        reflect_partial_sum_by_mirror_length(i, k)?,
                        r,
                        "reflector via l2",
                    ),
                ];
                for (sum, value, what) in sums {
                    if sum != value {
                        return Ok(Err(format!("k={k} i={i}: {what} sum {sum} != {value}")));
                    }
                }
            }
            Ok(Ok(1 << k))
        },
    )
}

pub fn rld_recursion_up_to(max_len: BitLen) -> Result<CheckReport> {
    sweep(
        format!("rld recursion and invariance, L <= {max_len}"),
        max_len,
        |len| {
            let built = rld_sequence_recursion(len)?;
            let pointwise = RldSequence::new(len)?;
            if let Some(n) = built
                .as_slice()
                .iter()
                .zip(pointwise.as_slice())
                .position(|(a, b)| a != b)
            {
                return Ok(Err(format!(
                    "L={len} n={n}: recursion {} != pointwise {}",
                    built.as_slice()[n],
                    pointwise.as_slice()[n]
                )));
            }
            Ok(from_report(rld_reflection_invariance(len)?))
        },
    )
}

/// Run-length codec round trip, block sums, and partition coverage.
pub fn codec_up_to(max_len: BitLen) -> Result<CheckReport> {
    sweep(
        format!("rl codec and partitions, L <= {max_len}"),
        max_len,
        |len| {
            for x in 0..=mersenne(len) {
                let code = rl_encode(x, len)?;
                let total: u32 = code.coeffs().iter().map(|c| c.unsigned_abs()).sum();
                if total != len || rl_decode(&code)? != x {
                    return Ok(Err(format!("L={len} x={x}: code {:?}", code.coeffs())));
                }
            }
            Ok(from_report(partition_coverage(len)?))
        },
    )
}

pub fn antihomomorphism_up_to(max_len: BitLen) -> Result<CheckReport> {
    sweep(
        format!("antihomomorphism, L <= {max_len}"),
        max_len,
        |len| {
            for x in 0..=mersenne(len) {
                for y in 0..=mersenne(len) {
                    if let Err(e) = concat_reflect(x, y, len) {
                        return Ok(Err(format!("L={len} x={x} y={y}: {e}")));
                    }
                }
            }
            Ok(Ok(1 << (2 * len)))
        },
    )
}

pub fn unique_fixed_point(max: Natural) -> Result<CheckReport> {
    let fixed = find_fixed_points(max)?;
    let name = format!("fixed points in [1, {max}] = {fixed:?}");
    if fixed == [4] || (max < 4 && fixed.is_empty()) {
        Ok(CheckReport::pass(name, max as u64))
    } else {
        Ok(CheckReport::fail(name, max as u64, "expected exactly [4]"))
    }
}

pub fn subsequences_up_to(max: Natural) -> Result<CheckReport> {
    let name = format!("subsequence, x0 <= {max}");
    for x0 in 1..=max {
        let r = verify_subsequence(x0, 100_000)?;
        if !r.passed {
            return Ok(CheckReport::fail(name, x0 as u64, r.to_string()));
        }
    }
    Ok(CheckReport::pass(name, max as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("prop3".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let params = SuiteParams {
            len: Some(6),
            k: Some(5),
            max: Some(500),
        };
        for s in Suite::ALL {
            let r = s.run(&params).unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn fixed_points_below_four() {
        assert!(unique_fixed_point(3).unwrap().passed);
    }
}
