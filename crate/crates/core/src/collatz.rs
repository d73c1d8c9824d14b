//! The Collatz map in four equivalent forms.
//!
//! * branched: `x/2` for even `x`, `3x + 1` for odd `x`;
//! * accelerated: `(3 / 2^t(x)) x + 1`, which strips every factor of two in
//!   one step and has the single fixed point 4;
//! * mirror-palindrome: the coefficient `3 / 2^t(x)` read off as a palindrome
//!   difference divided by `2^(l - 1)`, `l = l2(x)`;
//! * mirror-reflection: `2^(l2(reflect(x, l)) - l) 3x + 1`.
//!
//! In the reflection form the exponent `l2(reflect(x, l)) - l` equals `-t(x)`.
//! Writing it the other way round, `l - l2(reflect(x, l))`, gives `+t(x)` and
//! multiplies instead of dividing, so that spelling is not used.
//! A related parity-reflection exponent built from `l2(2^l - x - 1)` is only
//! exposed as [`parity_exponent_diagnostic`]; it disagrees with the
//! accelerated map already at `x = 4`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{binary_length, complement, is_power_of_two, odd_part};
use crate::reflection::{palindrome_diff, reflect};
use crate::report::CheckReport;
use crate::Natural;

/// Which step function drives a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formulation {
    Branched,
    Accelerated,
    MirrorPalindrome,
    MirrorReflection,
}

impl Formulation {
    pub const ALL: [Formulation; 4] = [
        Formulation::Branched,
        Formulation::Accelerated,
        Formulation::MirrorPalindrome,
        Formulation::MirrorReflection,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Formulation::Branched => "branched",
            Formulation::Accelerated => "accelerated",
            Formulation::MirrorPalindrome => "mirror-palindrome",
            Formulation::MirrorReflection => "mirror-reflection",
        }
    }

    pub fn step(&self, x: Natural) -> Result<Natural> {
        match self {
            Formulation::Branched => step_branched(x),
            Formulation::Accelerated => step_accelerated(x),
            Formulation::MirrorPalindrome => step_mirror_palindrome(x),
            Formulation::MirrorReflection => step_mirror_reflection(x),
        }
    }
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formulation::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown formulation {s:?}")))
    }
}

fn require_positive(x: Natural, what: &'static str) -> Result<()> {
    if x == 0 {
        Err(Error::UndefinedAtZero(what))
    } else {
        Ok(())
    }
}

fn three_x_plus_one(x: Natural, what: &'static str) -> Result<Natural> {
    x.checked_mul(3)
        .and_then(|y| y.checked_add(1))
        .ok_or(Error::Overflow(what))
}

pub fn step_branched(x: Natural) -> Result<Natural> {
    require_positive(x, "step_branched")?;
    if x.is_multiple_of(2) {
        Ok(x / 2)
    } else {
        three_x_plus_one(x, "step_branched")
    }
}

/// `3 * odd_part(x) + 1`.
pub fn step_accelerated(x: Natural) -> Result<Natural> {
    require_positive(x, "step_accelerated")?;
    three_x_plus_one(odd_part(x)?, "step_accelerated")
}

/// The multiplier `Delta P_{2l}(x) / 2^(l - 1)` with `l = l2(x)`, as an exact
/// ratio. It reduces to `3 / 2^t(x)`.
pub fn palindrome_coefficient(x: Natural) -> Result<Ratio<Natural>> {
    require_positive(x, "palindrome_coefficient")?;
    let l = binary_length(x);
    let diff = palindrome_diff(x, l)?;
    Ok(Ratio::new(diff, 1 << (l - 1)))
}

/// Accelerated step with the coefficient taken from palindrome differences.
///
/// Defined for `x < 2^64`: the palindromes involved have `2 l2(x)` bits.
pub fn step_mirror_palindrome(x: Natural) -> Result<Natural> {
    let coeff = palindrome_coefficient(x)?;
    let expected = Ratio::new(3, 1 << x.trailing_zeros());
    if coeff != expected {
        return Err(Error::Consistency(format!(
            "palindrome coefficient {coeff} at x={x}, expected {expected}"
        )));
    }
    let denom = *coeff.denom();
    if !x.is_multiple_of(denom) {
        return Err(Error::Consistency(format!(
            "coefficient {coeff} does not give an integer at x={x}"
        )));
    }
    (x / denom)
        .checked_mul(*coeff.numer())
        .and_then(|y| y.checked_add(1))
        .ok_or(Error::Overflow("step_mirror_palindrome"))
}

/// `2^(l2(reflect(x, l)) - l) 3x + 1` with `l = l2(x)`.
pub fn step_mirror_reflection(x: Natural) -> Result<Natural> {
    require_positive(x, "step_mirror_reflection")?;
    let l = binary_length(x);
    let shift = l - binary_length(reflect(x, l)?);
    if x.trailing_zeros() < shift {
        return Err(Error::Consistency(format!(
            "2^{shift} does not divide x={x}"
        )));
    }
    three_x_plus_one(x >> shift, "step_mirror_reflection")
}

/// Result of evaluating the parity-reflection exponent form at one input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityExponentDiagnostic {
    pub x: Natural,
    /// `l2(2^l - x - 1) - l`.
    pub exponent: i64,
    /// `2^exponent 3x + 1` when that is an integer.
    pub candidate: Option<Natural>,
    pub accelerated: Natural,
    pub agrees: bool,
}

/// Evaluates `2^(l2(2^l - x - 1) - l) 3x + 1` and compares it with the
/// accelerated step.
pub fn parity_exponent_diagnostic(x: Natural) -> Result<ParityExponentDiagnostic> {
    let accelerated = step_accelerated(x)?;
    let l = binary_length(x);
    let parity_len = binary_length(complement(x, l)?);
    let exponent = i64::from(parity_len) - i64::from(l);
    let shift = exponent.unsigned_abs() as u32;
    let tripled = x
        .checked_mul(3)
        .ok_or(Error::Overflow("parity_exponent_diagnostic"))?;
    let scaled = if exponent >= 0 {
        tripled.checked_shl(shift).filter(|v| v >> shift == tripled)
    } else if tripled.trailing_zeros() >= shift {
        Some(tripled >> shift)
    } else {
        None
    };
    let candidate = scaled.and_then(|v| v.checked_add(1));
    Ok(ParityExponentDiagnostic {
        x,
        exponent,
        candidate,
        accelerated,
        agrees: candidate == Some(accelerated),
    })
}

/// `x_{n+1} = A x_n + B` with `A = 3 / 2^t(x)` and `B = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepCoefficients {
    pub a: Ratio<Natural>,
    pub b: Natural,
}

/// `A = 3 / 2^t(x)` and `B = 1 + (x mod 2)(2^-t(x) - 1)`, which is 1 for every `x`.
pub fn step_coefficients(x: Natural) -> Result<StepCoefficients> {
    require_positive(x, "step_coefficients")?;
    let t = x.trailing_zeros();
    let parity = Ratio::from_integer((x % 2) as i128);
    // 2^-t - 1; only x = 2^127 has t = 127 and it is even
    let shortfall = if t < 127 {
        Ratio::new(1, 1i128 << t) - 1
    } else {
        Ratio::from_integer(-1)
    };
    let b = Ratio::from_integer(1i128) + parity * shortfall;
    if b != Ratio::from_integer(1) {
        return Err(Error::Consistency(format!("B({x}) = {b}, expected 1")));
    }
    Ok(StepCoefficients {
        a: Ratio::new(3, 1 << t),
        b: 1,
    })
}

/// Why a trajectory stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    /// Started on the fixed point 4 of an accelerated-family map.
    FixedPoint,
    /// Reached a power of two; the final row is the fixed point 4.
    PowerOfTwo,
    /// Branched map returned to 1 (the 4, 2, 1 cycle).
    Cycle,
    StepLimit,
    Overflow,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Termination::FixedPoint => "fixed-point",
            Termination::PowerOfTwo => "power-of-two",
            Termination::Cycle => "cycle",
            Termination::StepLimit => "step-limit",
            Termination::Overflow => "overflow",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrajectoryStep {
    pub value: Natural,
    pub t_value: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trajectory {
    pub start: Natural,
    pub formulation: Formulation,
    pub steps: Vec<TrajectoryStep>,
    pub terminated: Termination,
}

impl Trajectory {
    pub fn values(&self) -> Vec<Natural> {
        self.steps.iter().map(|s| s.value).collect()
    }
}

/// Iterates `formulation` from `x0` for at most `max_steps` applications.
///
/// Accelerated-family orbits stop on the fixed point 4: a start at 4 yields
/// a single row; otherwise the first power of two is stepped once more onto
/// 4. Branched orbits stop on returning to 1.
pub fn trajectory(x0: Natural, formulation: Formulation, max_steps: usize) -> Result<Trajectory> {
    require_positive(x0, "trajectory")?;
    let row = |v: Natural| TrajectoryStep {
        value: v,
        t_value: v.trailing_zeros(),
    };
    let mut steps = vec![row(x0)];
    let mut current = x0;
    let branched = formulation == Formulation::Branched;

    if !branched && x0 == 4 {
        return Ok(Trajectory {
            start: x0,
            formulation,
            steps,
            terminated: Termination::FixedPoint,
        });
    }

    let terminated = loop {
        if steps.len() > max_steps {
            break Termination::StepLimit;
        }
        let next = match formulation.step(current) {
            Ok(v) => v,
            Err(Error::Overflow(_)) => break Termination::Overflow,
            Err(e) => return Err(e),
        };
        steps.push(row(next));
        if branched {
            if next == 1 {
                break Termination::Cycle;
            }
        } else if is_power_of_two(current) {
            break Termination::PowerOfTwo;
        }
        current = next;
    };
    Ok(Trajectory {
        start: x0,
        formulation,
        steps,
        terminated,
    })
}

/// Accelerated orbit from `x0` up to and including the first return to 4,
/// at most `horizon` steps.
fn accelerated_orbit(x0: Natural, horizon: usize) -> Result<Vec<Natural>> {
    let mut orbit = vec![x0];
    let mut x = x0;
    while orbit.len() <= horizon {
        x = step_accelerated(x)?;
        orbit.push(x);
        if x == 4 {
            break;
        }
    }
    Ok(orbit)
}

/// `x0` followed by the outputs of every `3x + 1` application of the branched
/// orbit, up to the first such output equal to 4, at most `horizon` of them.
fn branched_events(x0: Natural, horizon: usize) -> Result<Vec<Natural>> {
    let mut events = vec![x0];
    let mut x = x0;
    while events.len() <= horizon {
        let odd = x % 2 == 1;
        x = step_branched(x)?;
        if odd {
            events.push(x);
            if x == 4 {
                break;
            }
        }
    }
    Ok(events)
}

/// Checks that the accelerated orbit of `x0` is the subsequence of the
/// branched orbit made of `x0` and every value produced by `3x + 1`.
pub fn verify_subsequence(x0: Natural, horizon: usize) -> Result<CheckReport> {
    require_positive(x0, "verify_subsequence")?;
    let name = format!("subsequence, x0={x0}");
    let acc = accelerated_orbit(x0, horizon)?;
    let events = branched_events(x0, horizon)?;
    if acc == events {
        return Ok(CheckReport::pass(name, acc.len() as u64));
    }
    let i = acc
        .iter()
        .zip(&events)
        .position(|(a, b)| a != b)
        .unwrap_or(acc.len().min(events.len()));
    Ok(CheckReport::fail(
        name,
        i as u64,
        format!(
            "position {i}: accelerated {:?}, branched event {:?}",
            acc.get(i),
            events.get(i)
        ),
    ))
}

/// All `x` in `[1, range_end]` with `step_accelerated(x) == x`.
pub fn find_fixed_points(range_end: Natural) -> Result<Vec<Natural>> {
    let mut fixed = Vec::new();
    for x in 1..=range_end {
        if step_accelerated(x)? == x {
            fixed.push(x);
        }
    }
    Ok(fixed)
}

/// Checks accelerated, mirror-palindrome and mirror-reflection steps agree on `[1, max]`.
pub fn verify_equivalence(max: Natural) -> Result<CheckReport> {
    let name = format!("step equivalence, x <= {max}");
    for x in 1..=max {
        if let Some(msg) = equivalence_mismatch(x)? {
            return Ok(CheckReport::fail(name, x as u64, msg));
        }
    }
    Ok(CheckReport::pass(name, max as u64))
}

/// `None` if all three accelerated-family steps agree at `x`.
pub fn equivalence_mismatch(x: Natural) -> Result<Option<String>> {
    let acc = step_accelerated(x)?;
    let pal = step_mirror_palindrome(x);
    let refl = step_mirror_reflection(x);
    if pal.as_ref() == Ok(&acc) && refl.as_ref() == Ok(&acc) {
        Ok(None)
    } else {
        Ok(Some(format!(
            "x={x}: accelerated={acc}, mirror-palindrome={pal:?}, mirror-reflection={refl:?}"
        )))
    }
}
