//! C interface to `hailstone-core`.
//!
//! Every fallible function returns an [`HsStatus`] and writes its result
//! through an out-pointer. Values cross the boundary as `uint64_t`; a result
//! that does not fit is reported as `HS_STATUS_OVERFLOW`. Trajectories,
//! sequences and run-length codes are opaque handles released with their
//! matching `*_free` function.

use std::ffi::c_char;
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use hailstone_core::collatz::{self, Formulation, Termination, Trajectory};
use hailstone_core::numtheory::{self, mersenne};
use hailstone_core::reflection::{self, PalindromeSequence, ReflectionTable};
use hailstone_core::runlength::{self, RldSequence, RunLengthCode};
use hailstone_core::{Error, MAX_TABLE_BITS};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    UndefinedAtZero,
    OutOfFrame,
    LengthTooLarge,
    LengthTooSmall,
    Overflow,
    InvalidArgument,
    IndexOutOfBounds,
    Consistency,
    NullPointer,
    Panic,
}

impl From<Error> for HsStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::UndefinedAtZero(_) => HsStatus::UndefinedAtZero,
            Error::OutOfFrame { .. } => HsStatus::OutOfFrame,
            Error::LengthTooLarge { .. } => HsStatus::LengthTooLarge,
            Error::LengthTooSmall { .. } => HsStatus::LengthTooSmall,
            Error::Overflow(_) => HsStatus::Overflow,
            Error::IndexOutOfBounds { .. } => HsStatus::IndexOutOfBounds,
            Error::Consistency(_) => HsStatus::Consistency,
            Error::LengthMismatch { .. }
            | Error::NotBijective(_)
            | Error::NoPredecessor(_)
            | Error::OddLength(_)
            | Error::InvalidCode(_)
            | Error::InvalidParameter(_) => HsStatus::InvalidArgument,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsFormulation {
    Branched = 0,
    Accelerated,
    MirrorPalindrome,
    MirrorReflection,
}

impl From<HsFormulation> for Formulation {
    fn from(f: HsFormulation) -> Self {
        match f {
            HsFormulation::Branched => Formulation::Branched,
            HsFormulation::Accelerated => Formulation::Accelerated,
            HsFormulation::MirrorPalindrome => Formulation::MirrorPalindrome,
            HsFormulation::MirrorReflection => Formulation::MirrorReflection,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsTermination {
    FixedPoint = 0,
    PowerOfTwo,
    Cycle,
    StepLimit,
    Overflow,
}

impl From<Termination> for HsTermination {
    fn from(t: Termination) -> Self {
        match t {
            Termination::FixedPoint => HsTermination::FixedPoint,
            Termination::PowerOfTwo => HsTermination::PowerOfTwo,
            Termination::Cycle => HsTermination::Cycle,
            Termination::StepLimit => HsTermination::StepLimit,
            Termination::Overflow => HsTermination::Overflow,
        }
    }
}

/// Integer sequences over `[0, 2^L - 1]` (odd part: `[1, 2^L]`).
/// For `PALINDROMES` the length argument is the half length `k`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsSequenceKind {
    Tzs = 0,
    OddPart,
    Reflect,
    Palindromes,
    Rld,
    DigitSum,
    SortedTzs,
}

pub struct HsTrajectory(Trajectory);

pub struct HsSequence(Vec<u64>);

pub struct HsRunLengthCode(RunLengthCode);

type Status = Result<(), HsStatus>;
type Checked<T> = Result<T, HsStatus>;

fn guard(f: impl FnOnce() -> Status) -> HsStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HsStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => HsStatus::Panic,
    }
}

unsafe fn put<T>(out: *mut T, value: T) -> Status {
    if out.is_null() {
        return Err(HsStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T) -> Checked<&'a T> {
    p.as_ref().ok_or(HsStatus::NullPointer)
}

fn narrow(v: u128) -> Checked<u64> {
    u64::try_from(v).map_err(|_| HsStatus::Overflow)
}

unsafe fn copy_out<T: Copy>(src: &[T], buf: *mut T, cap: usize, written: *mut usize) -> Status {
    let n = src.len().min(cap);
    if n > 0 {
        if buf.is_null() {
            return Err(HsStatus::NullPointer);
        }
        ptr::copy_nonoverlapping(src.as_ptr(), buf, n);
    }
    if !written.is_null() {
        written.write(n);
    }
    Ok(())
}

/// Static, NUL-terminated description of `status`.
#[no_mangle]
pub extern "C" fn hs_status_str(status: HsStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        HsStatus::Ok => b"ok\0",
        HsStatus::UndefinedAtZero => b"undefined at zero\0",
        HsStatus::OutOfFrame => b"value does not fit the frame\0",
        HsStatus::LengthTooLarge => b"length too large\0",
        HsStatus::LengthTooSmall => b"length too small\0",
        HsStatus::Overflow => b"arithmetic overflow\0",
        HsStatus::InvalidArgument => b"invalid argument\0",
        HsStatus::IndexOutOfBounds => b"index out of bounds\0",
        HsStatus::Consistency => b"internal consistency check failed\0",
        HsStatus::NullPointer => b"null pointer\0",
        HsStatus::Panic => b"internal panic\0",
    };
    s.as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn hs_binary_length(x: u64) -> u32 {
    numtheory::binary_length(x.into())
}

#[no_mangle]
pub extern "C" fn hs_digit_sum(x: u64) -> u32 {
    numtheory::digit_sum(x.into())
}

/// Trailing zeros of `x`. A nonzero `frame` makes `t(0) = frame`; with
/// `frame == 0` the value at zero is undefined.
///
/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_trailing_zeros(x: u64, frame: u32, out: *mut u32) -> HsStatus {
    guard(|| {
        let frame = (frame != 0).then_some(frame);
        put(out, numtheory::trailing_zeros(x.into(), frame)?)
    })
}

/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_odd_part(x: u64, out: *mut u64) -> HsStatus {
    guard(|| put(out, narrow(numtheory::odd_part(x.into())?)?))
}

/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_complement(x: u64, len: u32, out: *mut u64) -> HsStatus {
    guard(|| put(out, narrow(numtheory::complement(x.into(), len)?)?))
}

/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_reflect(x: u64, len: u32, out: *mut u64) -> HsStatus {
    guard(|| put(out, narrow(reflection::reflect(x.into(), len)?)?))
}

/// Palindrome of length `2k` whose upper half is `w`.
///
/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_palindrome(w: u64, k: u32, out: *mut u64) -> HsStatus {
    guard(|| put(out, narrow(reflection::palindrome(w.into(), k)?)?))
}

/// `P(w, k) - P(w - 1, k)` for `w >= 1`.
///
/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_palindrome_diff(w: u64, k: u32, out: *mut u64) -> HsStatus {
    guard(|| put(out, narrow(reflection::palindrome_diff(w.into(), k)?)?))
}

/// Number of runs of `x` read as an `len`-bit word.
///
/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_rld(x: u64, len: u32, out: *mut u32) -> HsStatus {
    guard(|| put(out, runlength::rld(x.into(), len)?))
}

/// One step of the chosen formulation.
///
/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_step(formulation: HsFormulation, x: u64, out: *mut u64) -> HsStatus {
    guard(|| put(out, narrow(Formulation::from(formulation).step(x.into())?)?))
}

/// Iterates from `x0` for at most `max_steps` steps. Intermediate values are
/// tracked in 128 bits; reading one above `UINT64_MAX` reports overflow.
///
/// # Safety
/// `out` must be null or valid for a write. The handle written there must be
/// released with [`hs_trajectory_free`].
#[no_mangle]
pub unsafe extern "C" fn hs_trajectory_new(
    x0: u64,
    formulation: HsFormulation,
    max_steps: usize,
    out: *mut *mut HsTrajectory,
) -> HsStatus {
    guard(|| {
        if out.is_null() {
            return Err(HsStatus::NullPointer);
        }
        let t = collatz::trajectory(x0.into(), formulation.into(), max_steps)?;
        put(out, Box::into_raw(Box::new(HsTrajectory(t))))
    })
}

/// Number of recorded values, the start included. Zero for a null handle.
///
/// # Safety
/// `traj` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_trajectory_len(traj: *const HsTrajectory) -> usize {
    traj.as_ref().map_or(0, |t| t.0.steps.len())
}

/// # Safety
/// `traj` must be null or a live handle; `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_trajectory_value(
    traj: *const HsTrajectory,
    index: usize,
    out: *mut u64,
) -> HsStatus {
    guard(|| {
        let t = deref(traj)?;
        let step = t.0.steps.get(index).ok_or(HsStatus::IndexOutOfBounds)?;
        put(out, narrow(step.value)?)
    })
}

/// # Safety
/// `traj` must be null or a live handle; `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_trajectory_t_value(
    traj: *const HsTrajectory,
    index: usize,
    out: *mut u32,
) -> HsStatus {
    guard(|| {
        let t = deref(traj)?;
        let step = t.0.steps.get(index).ok_or(HsStatus::IndexOutOfBounds)?;
        put(out, step.t_value)
    })
}

/// # Safety
/// `traj` must be null or a live handle; `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_trajectory_termination(
    traj: *const HsTrajectory,
    out: *mut HsTermination,
) -> HsStatus {
    guard(|| put(out, deref(traj)?.0.terminated.into()))
}

/// # Safety
/// `traj` must be null or a handle from [`hs_trajectory_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_trajectory_free(traj: *mut HsTrajectory) {
    if !traj.is_null() {
        drop(Box::from_raw(traj));
    }
}

fn build_sequence(kind: HsSequenceKind, len: u32) -> Checked<Vec<u64>> {
    if len > MAX_TABLE_BITS {
        return Err(HsStatus::LengthTooLarge);
    }
    if len == 0 {
        return Err(HsStatus::LengthTooSmall);
    }
    let widen = |v: u32| u64::from(v);
    let interval = 0..=mersenne(len);
    let values = match kind {
        HsSequenceKind::Tzs => interval
            .map(|n| numtheory::trailing_zeros(n, Some(len)).map(widen))
            .collect::<Result<_, _>>()?,
        HsSequenceKind::OddPart => (1..=mersenne(len) + 1)
            .map(|n| numtheory::odd_part(n).map(|v| v as u64))
            .collect::<Result<_, _>>()?,
        HsSequenceKind::Reflect => ReflectionTable::new(len)?
            .as_slice()
            .iter()
            .map(|&v| v as u64)
            .collect(),
        HsSequenceKind::Palindromes => PalindromeSequence::new(len)?
            .as_slice()
            .iter()
            .map(|&v| narrow(v))
            .collect::<Checked<_>>()?,
        HsSequenceKind::Rld => RldSequence::new(len)?
            .as_slice()
            .iter()
            .map(|&v| widen(v))
            .collect(),
        HsSequenceKind::DigitSum => interval.map(|n| widen(numtheory::digit_sum(n))).collect(),
        HsSequenceKind::SortedTzs => ReflectionTable::new(len)?
            .as_slice()
            .iter()
            .map(|&r| numtheory::trailing_zeros(r, Some(len)).map(widen))
            .collect::<Result<_, _>>()?,
    };
    Ok(values)
}

/// Materializes a sequence; `len` is at most 24.
///
/// # Safety
/// `out` must be null or valid for a write. The handle written there must be
/// released with [`hs_sequence_free`].
#[no_mangle]
pub unsafe extern "C" fn hs_sequence_new(
    kind: HsSequenceKind,
    len: u32,
    out: *mut *mut HsSequence,
) -> HsStatus {
    guard(|| {
        if out.is_null() {
            return Err(HsStatus::NullPointer);
        }
        let values = build_sequence(kind, len)?;
        put(out, Box::into_raw(Box::new(HsSequence(values))))
    })
}

/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_sequence_len(seq: *const HsSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.0.len())
}

/// # Safety
/// `seq` must be null or a live handle; `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_sequence_get(
    seq: *const HsSequence,
    index: usize,
    out: *mut u64,
) -> HsStatus {
    guard(|| {
        let s = deref(seq)?;
        put(out, *s.0.get(index).ok_or(HsStatus::IndexOutOfBounds)?)
    })
}

/// Copies up to `cap` values into `buf` and stores the count in `written`
/// (if non-null).
///
/// # Safety
/// `seq` must be null or a live handle; `buf` must be valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn hs_sequence_copy(
    seq: *const HsSequence,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> HsStatus {
    guard(|| copy_out(&deref(seq)?.0, buf, cap, written))
}

/// # Safety
/// `seq` must be null or a handle from [`hs_sequence_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_sequence_free(seq: *mut HsSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Signed run-length code of `x` as a `len`-bit word, least significant
/// run first: positive for runs of ones, negative for zeros.
///
/// # Safety
/// `out` must be null or valid for a write. The handle written there must be
/// released with [`hs_rl_code_free`].
#[no_mangle]
pub unsafe extern "C" fn hs_rl_encode(
    x: u64,
    len: u32,
    out: *mut *mut HsRunLengthCode,
) -> HsStatus {
    guard(|| {
        if out.is_null() {
            return Err(HsStatus::NullPointer);
        }
        let code = runlength::rl_encode(x.into(), len)?;
        put(out, Box::into_raw(Box::new(HsRunLengthCode(code))))
    })
}

/// Validates `coeffs` as a code for a `len`-bit word and decodes it.
///
/// # Safety
/// `coeffs` must be valid for `count` reads; `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hs_rl_decode(
    coeffs: *const i32,
    count: usize,
    len: u32,
    out: *mut u64,
) -> HsStatus {
    guard(|| {
        if coeffs.is_null() {
            return Err(HsStatus::NullPointer);
        }
        let c = std::slice::from_raw_parts(coeffs, count).to_vec();
        let code = RunLengthCode::new(c, len)?;
        put(out, narrow(runlength::rl_decode(&code)?)?)
    })
}

/// Number of runs. Zero for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_rl_code_len(code: *const HsRunLengthCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.dimension())
}

/// # Safety
/// `code` must be null or a live handle; `buf` must be valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn hs_rl_code_coeffs(
    code: *const HsRunLengthCode,
    buf: *mut i32,
    cap: usize,
    written: *mut usize,
) -> HsStatus {
    guard(|| copy_out(deref(code)?.0.coeffs(), buf, cap, written))
}

/// # Safety
/// `code` must be null or a handle from [`hs_rl_encode`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_rl_code_free(code: *mut HsRunLengthCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}
