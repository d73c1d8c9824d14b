//! Interval statistics over odd inputs of the `3x + 1` map and the data
//! behind figures 1 to 5.
//!
//! For every odd `x` in `s(L)` two signs are recorded:
//!
//! * `sign(rld(3x + 1) - rld(x))`, the change in block count (the p-counts);
//! * `sign(l2(y) - l2(reflect(y)))` with `y = 3x + 1`, the mirror length gap
//!   (the q-counts).
//!
//! In the minimal frame `l2(y)` the gap equals `t(y) >= 1`, so every q-sign is
//! positive and the gap histogram is the informative part. In the fixed
//! frame of `L + 2` bits (the smallest frame holding every `3x + 1`) the gap
//! becomes `l2(y) + t(y) - (L + 2)` and takes both signs.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use crate::dataset::{Column, FigureDataset, FigureId};
use crate::error::{Error, Result};
use crate::numtheory::{binary_length, check_len, mersenne, tz_in_frame};
use crate::reflection::{reflect_diff_closed_form, reflect_unchecked};
use crate::runlength::{rld_distribution, rld_unchecked, FrameMode};
use crate::{BitLen, Natural};

/// Largest interval length accepted by the streaming statistics.
pub const MAX_STREAM_BITS: BitLen = 40;
/// Largest interval length accepted by the per-element figure datasets.
pub const MAX_FIGURE_BITS: BitLen = 20;
/// Figure 5 spans at most `s(4)` to `s(24)`.
pub const FIG5_MIN_BITS: BitLen = 4;
pub const FIG5_MAX_BITS: BitLen = 24;

/// Width of the common frame used in [`FrameMode::Fixed`] for `s(L)`.
pub fn fixed_frame_len(len: BitLen) -> BitLen {
    len + 2
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SignCounts {
    pub less: u64,
    pub greater: u64,
    pub equal: u64,
}

impl SignCounts {
    fn record(&mut self, diff: i64) {
        match diff.signum() {
            -1 => self.less += 1,
            1 => self.greater += 1,
            _ => self.equal += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.less + self.greater + self.equal
    }

    /// `less / greater`, undefined when nothing increased.
    pub fn ratio(&self) -> Option<Ratio<u64>> {
        (self.greater > 0).then(|| Ratio::new(self.less, self.greater))
    }

    pub fn ratio_f64(&self) -> Option<f64> {
        (self.greater > 0).then(|| self.less as f64 / self.greater as f64)
    }
}

/// Mirror length gap statistics over the odd inputs of an interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub signs: SignCounts,
    pub histogram: BTreeMap<i64, u64>,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MassRatioReport {
    pub len: BitLen,
    pub frame_mode: FrameMode,
    pub p: SignCounts,
    pub q: GapReport,
}

impl MassRatioReport {
    pub fn p_ratio(&self) -> Option<f64> {
        self.p.ratio_f64()
    }

    pub fn q_ratio(&self) -> Option<f64> {
        self.q.signs.ratio_f64()
    }

    /// The per-interval q statistic plotted in figure 5: the gap mean in the
    /// minimal frame (where every q-sign is positive), the q-ratio otherwise.
    pub fn q_summary(&self) -> Option<f64> {
        match self.frame_mode {
            FrameMode::Minimal => Some(self.q.mean),
            FrameMode::Fixed => self.q_ratio(),
        }
    }
}

fn check_interval(len: BitLen) -> Result<()> {
    check_len(len, 3, MAX_STREAM_BITS)
}

fn odd_inputs(len: BitLen) -> impl Iterator<Item = Natural> {
    (1..=mersenne(len)).step_by(2)
}

fn rld_change(x: Natural, len: BitLen, mode: FrameMode) -> i64 {
    let y = 3 * x + 1;
    let (fx, fy) = match mode {
        FrameMode::Minimal => (binary_length(x), binary_length(y)),
        FrameMode::Fixed => (fixed_frame_len(len), fixed_frame_len(len)),
    };
    i64::from(rld_unchecked(y, fy)) - i64::from(rld_unchecked(x, fx))
}

/// Sign classes of `rld(3x + 1) - rld(x)` over odd `x` in `s(L)`.
pub fn mass_ratio_p(len: BitLen, mode: FrameMode) -> Result<SignCounts> {
    check_interval(len)?;
    let mut counts = SignCounts::default();
    for x in odd_inputs(len) {
        counts.record(rld_change(x, len, mode));
    }
    Ok(counts)
}

/// `l2(3x + 1) - l2(reflect(3x + 1))` with the reflection taken in the
/// minimal frame of `3x + 1`.
pub fn mirror_length_gap(x: Natural) -> Result<i64> {
    if x.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "mirror length gap needs an odd input, got {x}"
        )));
    }
    let y = x
        .checked_mul(3)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("mirror_length_gap"))?;
    Ok(gap_in_frame(y, binary_length(y)))
}

/// Same gap with the reflection taken in a caller-chosen frame.
pub fn mirror_length_gap_in_frame(x: Natural, frame: BitLen) -> Result<i64> {
    if x.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "mirror length gap needs an odd input, got {x}"
        )));
    }
    let y = x
        .checked_mul(3)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("mirror_length_gap_in_frame"))?;
    crate::numtheory::check_frame(y, frame)?;
    Ok(gap_in_frame(y, frame))
}

#[inline]
fn gap_in_frame(y: Natural, frame: BitLen) -> i64 {
    i64::from(binary_length(y)) - i64::from(binary_length(reflect_unchecked(y, frame)))
}

/// Sign classes and histogram of the mirror length gap over odd `x` in `s(L)`.
pub fn mass_ratio_q(len: BitLen, mode: FrameMode) -> Result<GapReport> {
    check_interval(len)?;
    let mut signs = SignCounts::default();
    let mut histogram = BTreeMap::new();
    let mut sum: i128 = 0;
    for x in odd_inputs(len) {
        let y = 3 * x + 1;
        let frame = match mode {
            FrameMode::Minimal => binary_length(y),
            FrameMode::Fixed => fixed_frame_len(len),
        };
        let gap = gap_in_frame(y, frame);
        signs.record(gap);
        *histogram.entry(gap).or_insert(0) += 1;
        sum += i128::from(gap);
    }
    let mean = sum as f64 / signs.total() as f64;
    Ok(GapReport {
        signs,
        histogram,
        mean,
    })
}

pub fn mass_ratio_report(len: BitLen, mode: FrameMode) -> Result<MassRatioReport> {
    Ok(MassRatioReport {
        len,
        frame_mode: mode,
        p: mass_ratio_p(len, mode)?,
        q: mass_ratio_q(len, mode)?,
    })
}

fn metadata(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| ((*k).to_owned(), v.clone()))
        .collect()
}

fn check_figure_len(len: BitLen) -> Result<()> {
    check_len(len, 1, MAX_FIGURE_BITS)
}

/// `(x, 2^t(x))` for `x` in `[1, 2^L]`.
pub fn figure1_dataset(len: BitLen) -> Result<FigureDataset> {
    check_figure_len(len)?;
    let xs: Vec<Natural> = (1..=(1 << len)).collect();
    let factors: Vec<Natural> = xs.iter().map(|&x| 1 << x.trailing_zeros()).collect();
    FigureDataset::new(
        FigureId::Fig1,
        len.to_string(),
        vec![Column::new("x", xs), Column::new("two_pow_t", factors)],
        metadata(&[("L", len.to_string())]),
    )
}

/// `(n, t(reflect(n, L)))` over `s(L)` next to the descending sort of `t(n)`.
pub fn figure2_dataset(len: BitLen) -> Result<FigureDataset> {
    check_figure_len(len)?;
    let ns: Vec<Natural> = (0..=mersenne(len)).collect();
    let composed: Vec<BitLen> = ns
        .iter()
        .map(|&n| tz_in_frame(reflect_unchecked(n, len), len))
        .collect();
    let mut sorted: Vec<BitLen> = ns.iter().map(|&n| tz_in_frame(n, len)).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    FigureDataset::new(
        FigureId::Fig2,
        len.to_string(),
        vec![
            Column::new("n", ns),
            Column::new("t_reflect", composed),
            Column::new("t_sorted_desc", sorted),
        ],
        metadata(&[("L", len.to_string()), ("t_zero", len.to_string())]),
    )
}

/// Pairs `(reflect(x - 1, L), reflect(x, L))` for `x` in `[1, 2^L - 1]`.
pub fn figure3_dataset(len: BitLen) -> Result<FigureDataset> {
    check_figure_len(len)?;
    let xs: Vec<Natural> = (1..=mersenne(len)).collect();
    let prev: Vec<Natural> = xs.iter().map(|&x| reflect_unchecked(x - 1, len)).collect();
    let cur: Vec<Natural> = xs.iter().map(|&x| reflect_unchecked(x, len)).collect();
    let diff: Vec<i128> = prev
        .iter()
        .zip(&cur)
        .map(|(&p, &c)| c as i128 - p as i128)
        .collect();
    for (&x, &d) in xs.iter().zip(&diff) {
        let closed = reflect_diff_closed_form(x, len)?;
        if d != closed {
            return Err(Error::Consistency(format!(
                "reflector difference {d} at x={x}, closed form {closed}"
            )));
        }
    }
    FigureDataset::new(
        FigureId::Fig3,
        len.to_string(),
        vec![
            Column::new("x", xs),
            Column::new("reflect_prev", prev),
            Column::new("reflect", cur),
            Column::new("diff", diff),
        ],
        metadata(&[("L", len.to_string())]),
    )
}

/// Panel (a): `(n, rld(n, L))`. Panel (b): RLD and digit-sum histograms over `0..=L`.
pub fn figure4_dataset(len: BitLen) -> Result<[FigureDataset; 2]> {
    check_figure_len(len)?;
    let ns: Vec<Natural> = (0..=mersenne(len)).collect();
    let rlds: Vec<BitLen> = ns.iter().map(|&n| rld_unchecked(n, len)).collect();
    let seq = FigureDataset::new(
        FigureId::Fig4a,
        len.to_string(),
        vec![Column::new("n", ns), Column::new("rld", rlds)],
        metadata(&[("L", len.to_string())]),
    )?;
    let dist = rld_distribution(len)?;
    let values: Vec<BitLen> = (0..=len).collect();
    let count = |h: &BTreeMap<BitLen, Natural>, v: &BitLen| h.get(v).copied().unwrap_or(0);
    let hist = FigureDataset::new(
        FigureId::Fig4b,
        len.to_string(),
        vec![
            Column::new("value", values.iter().copied()),
            Column::new("rld_count", values.iter().map(|v| count(&dist.rld, v))),
            Column::new(
                "digit_sum_count",
                values.iter().map(|v| count(&dist.digit_sum, v)),
            ),
        ],
        metadata(&[("L", len.to_string())]),
    )?;
    Ok([seq, hist])
}

/// One row per `L` in `[l_min, l_max]` with both mass-ratio reports.
pub fn figure5_dataset(l_min: BitLen, l_max: BitLen, mode: FrameMode) -> Result<FigureDataset> {
    if l_min < FIG5_MIN_BITS || l_max > FIG5_MAX_BITS || l_min > l_max {
        return Err(Error::InvalidParameter(format!(
            "figure 5 needs {FIG5_MIN_BITS} <= Lmin <= Lmax <= {FIG5_MAX_BITS}, got {l_min}..{l_max}"
        )));
    }
    let reports = (l_min..=l_max)
        .map(|len| mass_ratio_report(len, mode))
        .collect::<Result<Vec<_>>>()?;
    let col = |name: &str, f: &dyn Fn(&MassRatioReport) -> crate::dataset::Cell| {
        Column::new(name, reports.iter().map(f))
    };
    let columns = vec![
        col("L", &|r| r.len.into()),
        col("p_less", &|r| r.p.less.into()),
        col("p_greater", &|r| r.p.greater.into()),
        col("p_equal", &|r| r.p.equal.into()),
        col("p_ratio", &|r| r.p_ratio().into()),
        col("q_less", &|r| r.q.signs.less.into()),
        col("q_greater", &|r| r.q.signs.greater.into()),
        col("q_equal", &|r| r.q.signs.equal.into()),
        col("q_ratio", &|r| r.q_ratio().into()),
        col("gap_mean", &|r| r.q.mean.into()),
        col("q_summary", &|r| r.q_summary().into()),
    ];
    let summary = match mode {
        FrameMode::Minimal => "gap_mean",
        FrameMode::Fixed => "q_ratio",
    };
    let mut meta = vec![
        ("Lmin", l_min.to_string()),
        ("Lmax", l_max.to_string()),
        ("frame_mode", mode.to_string()),
        ("q_summary", summary.to_owned()),
    ];
    if mode == FrameMode::Fixed {
        meta.push(("frame_bits", "L+2".to_owned()));
    }
    FigureDataset::new(
        FigureId::Fig5,
        format!("{l_min}-{l_max}"),
        columns,
        metadata(&meta),
    )
}
