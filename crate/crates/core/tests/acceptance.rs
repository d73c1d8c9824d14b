//! Acceptance criteria. Runs as a plain binary and prints one PASS/FAIL
//! line per criterion; exits nonzero if any criterion fails.

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use hailstone_core::collatz::{
    equivalence_mismatch, find_fixed_points, verify_equivalence, verify_subsequence,
};
use hailstone_core::dataset::Cell;
use hailstone_core::experiments::{
    figure1_dataset, figure2_dataset, figure3_dataset, figure4_dataset, figure5_dataset,
};
use hailstone_core::numtheory::{binary_length, mersenne};
use hailstone_core::reflection::{
    mirror_length_identity, palindrome, palindrome_diff, palindrome_partial_sum, reflect,
    reflect_partial_sum, sorted_tzs_property,
};
use hailstone_core::runlength::{
    partition_coverage, rl_decode, rl_encode, rld, rld_reflection_invariance,
    rld_sequence_recursion, FrameMode, RldSequence,
};
use hailstone_core::Natural;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn fixed_point_claim() -> Outcome {
    let fixed = find_fixed_points(1 << 20).unwrap();
    outcome(
        fixed == [4],
        format!("fixed points on [1, 2^20]: {fixed:?}"),
    )
}

fn four_way_equivalence() -> Outcome {
    let exhaustive = verify_equivalence(1 << 16).unwrap();
    if !exhaustive.passed {
        return outcome(false, exhaustive.to_string());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x3_1415);
    for _ in 0..10_000 {
        let x: u64 = rng.gen_range(1..=1u64 << 60);
        if let Some(msg) = equivalence_mismatch(x as Natural).unwrap() {
            return outcome(false, msg);
        }
    }
    outcome(
        true,
        "x <= 2^16 exhaustive and 10^4 seeded random x <= 2^60",
    )
}

fn subsequence_property() -> Outcome {
    for x0 in 1..=100_000 {
        let r = verify_subsequence(x0, 100_000).unwrap();
        if !r.passed {
            return outcome(false, r.to_string());
        }
    }
    outcome(true, "x0 <= 10^5")
}

fn palindrome_differences() -> Outcome {
    for k in 1..=12 {
        for w in 1..=mersenne(k) {
            let direct = palindrome_diff(w, k).unwrap();
            let closed = 3 * (1 << (k - w.trailing_zeros() - 1));
            if direct != closed {
                return outcome(false, format!("k={k} w={w}: {direct} != {closed}"));
            }
        }
    }
    outcome(true, "1 <= w < 2^k, k <= 12")
}

fn sorted_tzs_and_mirror_lengths() -> Outcome {
    for len in 1..=16 {
        let r = sorted_tzs_property(len).unwrap();
        if !r.passed {
            return outcome(false, r.to_string());
        }
        for x in 0..=mersenne(len) {
            let pair = mirror_length_identity(x, len).unwrap();
            if pair != (len, len) {
                return outcome(false, format!("L={len} x={x}: {pair:?}"));
            }
        }
    }
    outcome(true, "L <= 16")
}

/// Uncorrected reflector sum `2^k (3 sum_{j<=i} 2^(-t(j)-1) - 1)`; wrong for i > 1.
fn uncorrected_reflector_sum(i: Natural, k: u32) -> Ratio<i128> {
    let sum: Ratio<i128> = (1..=i)
        .map(|j| Ratio::new(1, 1i128 << (j.trailing_zeros() + 1)))
        .sum();
    Ratio::from_integer(1i128 << k) * (Ratio::from_integer(3) * sum - 1)
}

fn corollary() -> Outcome {
    for k in 1..=12 {
        for i in 0..=mersenne(k) {
            if palindrome_partial_sum(i, k).unwrap() != palindrome(i, k).unwrap() {
                return outcome(false, format!("palindrome sum fails at k={k} i={i}"));
            }
            if reflect_partial_sum(i, k).unwrap() != reflect(i, k).unwrap() {
                return outcome(false, format!("reflector sum fails at k={k} i={i}"));
            }
        }
    }
    let naive = uncorrected_reflector_sum(2, 2);
    let truth = reflect(2, 2).unwrap();
    if naive != Ratio::from_integer(5) || truth != 1 {
        return outcome(
            false,
            format!("uncorrected sum at (k=2, i=2) gave {naive}, expected the known wrong value 5"),
        );
    }
    outcome(
        true,
        format!("palindrome and corrected reflector sums for k <= 12; uncorrected sum gives {naive} at (2,2), true value {truth}"),
    )
}

/// Partitions of `n` in non-increasing order, by the successor rule
/// (rebalance after the rightmost part larger than one).
fn partitions_by_successor(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut p = vec![n];
    loop {
        out.push(p.clone());
        let Some(pos) = p.iter().rposition(|&v| v > 1) else {
            break;
        };
        let ones = (p.len() - pos - 1) as u32;
        let part = p[pos] - 1;
        p.truncate(pos);
        let mut rest = ones + 1 + part;
        while rest > 0 {
            let take = rest.min(part);
            p.push(take);
            rest -= take;
        }
    }
    out
}

fn run_length_codec() -> Outcome {
    for len in 1..=12u32 {
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..=mersenne(len) {
            let code = rl_encode(x, len).unwrap();
            let c = code.coeffs();
            if rl_decode(&code).unwrap() != x {
                return outcome(false, format!("round trip fails at L={len} x={x}"));
            }
            if c.iter().map(|v| v.unsigned_abs()).sum::<u32>() != len {
                return outcome(false, format!("block sum != L at L={len} x={x}"));
            }
            if x != 0 && x % 2 == 0 && c[0] != -(x.trailing_zeros() as i32) {
                return outcome(false, format!("TZS embedding fails at L={len} x={x}"));
            }
            if x % 2 == 1 && c[0] <= 0 {
                return outcome(false, format!("odd word with zero block first at x={x}"));
            }
            let lz = len - binary_length(x);
            if lz > 0 && *c.last().unwrap() != -(lz as i32) {
                return outcome(false, format!("LZS embedding fails at L={len} x={x}"));
            }
            seen.insert(code.partition());
        }
        for p in partitions_by_successor(len) {
            if !seen.contains(&p) {
                return outcome(false, format!("partition {p:?} of {len} missing"));
            }
        }
        if !partition_coverage(len).unwrap().passed {
            return outcome(
                false,
                format!("library partition coverage fails at L={len}"),
            );
        }
    }
    outcome(true, "L <= 12, partitions from an independent enumerator")
}

fn rld_recursion() -> Outcome {
    for len in 1..=14 {
        if rld_sequence_recursion(len).unwrap() != RldSequence::new(len).unwrap() {
            return outcome(false, format!("recursion differs at L={len}"));
        }
        for n in 0..=mersenne(len) {
            let s = format!("{:0w$b}", n, w = len as usize);
            let blocks = 1 + s.as_bytes().windows(2).filter(|w| w[0] != w[1]).count() as u32;
            if rld(n, len).unwrap() != blocks {
                return outcome(false, format!("pointwise rld differs at L={len} n={n}"));
            }
        }
        if !rld_reflection_invariance(len).unwrap().passed {
            return outcome(false, format!("reflection invariance fails at L={len}"));
        }
    }
    outcome(true, "L <= 14")
}

fn golden_datasets() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let [fig4a, fig4b] = figure4_dataset(10).unwrap();
    let sets = [
        figure1_dataset(10).unwrap(),
        figure2_dataset(10).unwrap(),
        figure3_dataset(10).unwrap(),
        fig4a,
        fig4b,
    ];
    for ds in &sets {
        let name = format!("{}.csv", ds.file_stem());
        let golden = match fs::read_to_string(dir.join(&name)) {
            Ok(s) => s,
            Err(e) => return outcome(false, format!("{name}: {e}")),
        };
        if golden != ds.to_csv() {
            return outcome(false, format!("{name} differs from golden"));
        }
    }
    outcome(
        true,
        "fig1, fig2, fig3, fig4a, fig4b at L=10 byte-identical",
    )
}

fn real_column(ds: &hailstone_core::dataset::FigureDataset, name: &str) -> Vec<f64> {
    ds.column(name)
        .unwrap()
        .values
        .iter()
        .map(|c| match c {
            Cell::Real(v) => *v,
            Cell::Int(v) => *v as f64,
            Cell::Missing => f64::NAN,
        })
        .collect()
}

fn figure5_trend() -> Outcome {
    let ds = figure5_dataset(4, 20, FrameMode::Minimal).unwrap();
    let p = real_column(&ds, "p_ratio");
    let q = real_column(&ds, "q_summary");
    // index i holds L = i + 4
    let drops: Vec<usize> = (9..=20).filter(|&l| p[l - 4] < p[l - 5]).collect();
    let tail = &q[12 - 4..];
    let (lo, hi) = tail
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let q_spread = (hi - lo) / lo;
    let p_ok = drops.len() <= 1;
    let q_ok = q_spread < 0.05;
    let fixed = figure5_dataset(4, 20, FrameMode::Fixed).unwrap();
    let fp = real_column(&fixed, "p_ratio");
    let fixed_drops: Vec<usize> = (9..=20).filter(|&l| fp[l - 4] < fp[l - 5]).collect();
    outcome(
        p_ok && q_ok,
        format!(
            "p-ratio decreases at L={drops:?} (allowed 1), p(8)={:.4} p(20)={:.4}; \
             q-summary spread for L>=12 = {:.4}% (limit 5%); fixed frame p-ratio decreases at L={fixed_drops:?}",
            p[4],
            p[16],
            100.0 * q_spread
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "fixed point 4 is unique on [1, 2^20]",
            fixed_point_claim,
            Duration::from_secs(5),
        ),
        (
            "four-way step equivalence",
            four_way_equivalence,
            Duration::from_secs(10),
        ),
        (
            "accelerated orbit is the 3x+1 subsequence",
            subsequence_property,
            Duration::from_secs(30),
        ),
        (
            "palindrome differences",
            palindrome_differences,
            Duration::from_secs(5),
        ),
        (
            "sorted TZS and mirror lengths",
            sorted_tzs_and_mirror_lengths,
            Duration::from_secs(10),
        ),
        (
            "palindrome and reflector partial sums",
            corollary,
            Duration::from_secs(30),
        ),
        (
            "run-length codec and partitions",
            run_length_codec,
            Duration::from_secs(30),
        ),
        (
            "RLD recursion and reflection invariance",
            rld_recursion,
            Duration::from_secs(30),
        ),
        (
            "figure 1-4 golden datasets",
            golden_datasets,
            Duration::from_secs(30),
        ),
        ("figure 5 trends", figure5_trend, Duration::from_secs(600)),
    ];
    let mut failures = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let passed = out.passed && in_time;
        if !passed {
            failures += 1;
        }
        println!(
            "{} {name}: {} [{:.2?} of {:.0?}{}]",
            if passed { "PASS" } else { "FAIL" },
            out.detail,
            elapsed,
            budget,
            if in_time { "" } else { ", over budget" }
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
