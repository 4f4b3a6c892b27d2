//! Integer combinatorics of Hilbert functions: binomial expansions, the
//! Macaulay and Green growth operators, O-sequence validation, and shape
//! analysis of h-vectors.
//!
//! All arithmetic is exact big-integer arithmetic; binomial coefficients are
//! computed by the multiplicative formula with exact division at every step.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Exact binomial coefficient `C(n, k)`, with `C(n, k) = 0` whenever `n < k`.
pub fn binomial(n: &BigUint, k: u32) -> BigUint {
    let kb = BigUint::from(k);
    if *n < kb {
        return BigUint::zero();
    }
    let base = n - &kb;
    let mut result = BigUint::one();
    for t in 1..=k {
        result *= &base + BigUint::from(t);
        result /= BigUint::from(t); // exact: product of t consecutive integers
    }
    result
}

/// `C(n, k)` for machine-sized values, as `u64`.
///
/// Panics if the coefficient does not fit; callers use this only for counts
/// of materialized objects, which fit comfortably.
pub(crate) fn binomial_u64(n: u64, k: u64) -> u64 {
    if n < k {
        return 0;
    }
    let mut result: u128 = 1;
    for t in 1..=k as u128 {
        result = result
            .checked_mul((n - k) as u128 + t)
            .expect("binomial coefficient overflow");
        result /= t;
    }
    u64::try_from(result).expect("binomial coefficient overflow")
}

/// The unique greedy `i`-binomial expansion of a positive integer:
/// `h = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j)` with
/// `m_i > m_{i-1} > ... > m_j >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialExpansion {
    index: u32,
    terms: Vec<(BigUint, u32)>,
}

impl BinomialExpansion {
    /// The expansion index `i`.
    pub fn index(&self) -> u32 {
        self.index
    }

    /// Terms `(m, position)` in descending position order, starting at `i`.
    pub fn terms(&self) -> &[(BigUint, u32)] {
        &self.terms
    }

    /// Re-sums the expansion.
    pub fn value(&self) -> BigUint {
        self.terms.iter().map(|(m, j)| binomial(m, *j)).sum()
    }
}

/// Largest `m >= idx` with `C(m, idx) <= rem`, for `rem >= 1`.
fn greedy_top(rem: &BigUint, idx: u32) -> BigUint {
    if idx == 1 {
        return rem.clone();
    }
    // Gallop upward, then binary search.
    let mut lo = BigUint::from(idx);
    let mut width = BigUint::one();
    while binomial(&(&lo + &width), idx) <= *rem {
        lo += &width;
        width *= 2u32;
    }
    let mut hi = &lo + &width;
    let one = BigUint::one();
    while &lo + &one < hi {
        let mid = (&lo + &hi) / 2u32;
        if binomial(&mid, idx) <= *rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The `i`-binomial expansion of `h`.
///
/// Requires `h >= 1` and `i >= 1`; total on that domain.
pub fn macaulay_expansion(h: &BigUint, i: u32) -> BinomialExpansion {
    assert!(!h.is_zero(), "macaulay_expansion requires h >= 1");
    assert!(i >= 1, "macaulay_expansion requires i >= 1");
    let mut terms = Vec::new();
    let mut rem = h.clone();
    let mut idx = i;
    while !rem.is_zero() {
        let m = greedy_top(&rem, idx);
        rem -= binomial(&m, idx);
        terms.push((m, idx));
        if idx == 1 {
            break;
        }
        idx -= 1;
    }
    debug_assert!(rem.is_zero());
    BinomialExpansion { index: i, terms }
}

/// Macaulay's upper growth operator `h^<i>`: replace each `C(m, j)` of the
/// `i`-binomial expansion by `C(m+1, j+1)`. `0^<i> = 0`.
pub fn upper_shift(h: &BigUint, i: u32) -> BigUint {
    if h.is_zero() {
        return BigUint::zero();
    }
    macaulay_expansion(h, i)
        .terms()
        .iter()
        .map(|(m, j)| binomial(&(m + 1u32), j + 1))
        .sum()
}

/// Green's restriction operator `h^-`: replace each `C(m, j)` of the
/// `i`-binomial expansion by `C(m-1, j)`, reading `C(a, b) = 0` for `a < b`.
/// `0^- = 0`.
pub fn lower_shift(h: &BigUint, i: u32) -> BigUint {
    if h.is_zero() {
        return BigUint::zero();
    }
    macaulay_expansion(h, i)
        .terms()
        .iter()
        .map(|(m, j)| binomial(&(m - 1u32), *j))
        .sum()
}

/// Errors raised when building an [`OSequence`] from raw entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OSequenceError {
    /// No nonzero entries.
    EmptySequence,
    /// `h_0 != 1`.
    LeadingEntryNotOne,
    /// A nonzero entry follows a zero entry.
    NotArtinianShape { degree: usize },
    /// A token could not be parsed as a nonnegative integer.
    Unparseable { token: String },
}

impl fmt::Display for OSequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OSequenceError::EmptySequence => write!(f, "sequence has no nonzero entries"),
            OSequenceError::LeadingEntryNotOne => write!(f, "leading entry h_0 must be 1"),
            OSequenceError::NotArtinianShape { degree } => {
                write!(f, "nonzero entry in degree {degree} follows a zero entry")
            }
            OSequenceError::Unparseable { token } => {
                write!(f, "cannot parse {token:?} as a nonnegative integer")
            }
        }
    }
}

impl core::error::Error for OSequenceError {}

/// Report of the first failure of Macaulay's growth bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayViolation {
    /// The degree `d` at which `h_{d+1} > h_d^<d>` first fails.
    pub degree: usize,
    /// The offending entry `h_{d+1}`.
    pub found: BigUint,
    /// The allowed bound `h_d^<d>`.
    pub bound: BigUint,
}

impl fmt::Display for MacaulayViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Macaulay bound fails at degree {}: h_{} = {} exceeds h_{}^<{}> = {}",
            self.degree,
            self.degree + 1,
            self.found,
            self.degree,
            self.degree,
            self.bound
        )
    }
}

impl core::error::Error for MacaulayViolation {}

/// A finite candidate h-vector `(h_0, ..., h_s)` with `h_0 = 1`, `h_s` the
/// last nonzero entry, and no internal zeros.
///
/// Construction enforces the shape invariants; [`OSequence::validate`] checks
/// Macaulay's growth bound on top of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OSequence {
    entries: Vec<BigUint>,
}

impl OSequence {
    /// Builds a sequence from raw entries, stripping trailing zeros.
    pub fn from_entries(mut entries: Vec<BigUint>) -> Result<Self, OSequenceError> {
        while entries.last().is_some_and(Zero::is_zero) {
            entries.pop();
        }
        if entries.is_empty() {
            return Err(OSequenceError::EmptySequence);
        }
        if !entries[0].is_one() {
            return Err(OSequenceError::LeadingEntryNotOne);
        }
        if let Some(pos) = entries.iter().position(Zero::is_zero) {
            // A zero can only be followed by zeros, all of which were stripped.
            return Err(OSequenceError::NotArtinianShape { degree: pos });
        }
        Ok(OSequence { entries })
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64(entries: &[u64]) -> Result<Self, OSequenceError> {
        Self::from_entries(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    /// The entries `h_0..h_s`.
    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// The socle degree `s` (index of the last nonzero entry).
    pub fn socle_degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// The codimension `h_1` (zero for the singleton sequence `(1)`).
    pub fn codim(&self) -> BigUint {
        self.entry(1)
    }

    /// `h_d`, extended by zeros beyond the socle degree.
    pub fn entry(&self, d: usize) -> BigUint {
        self.entries.get(d).cloned().unwrap_or_else(BigUint::zero)
    }

    /// `h_d` as `u64` when it fits.
    pub fn entry_u64(&self, d: usize) -> Option<u64> {
        u64::try_from(&self.entry(d)).ok()
    }

    /// Checks Macaulay's growth bound `h_{d+1} <= h_d^<d>` for `1 <= d < s`,
    /// reporting the first failing degree.
    pub fn validate(&self) -> Result<(), MacaulayViolation> {
        let s = self.socle_degree();
        for d in 1..s {
            let bound = upper_shift(&self.entries[d], d as u32);
            if self.entries[d + 1] > bound {
                return Err(MacaulayViolation {
                    degree: d,
                    found: self.entries[d + 1].clone(),
                    bound,
                });
            }
        }
        Ok(())
    }

    /// True iff the sequence is an O-sequence.
    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// First difference `ΔH = (h_0, h_1 - h_0, ..., h_s - h_{s-1})`.
    pub fn first_difference(&self) -> Vec<BigInt> {
        let mut delta = Vec::with_capacity(self.entries.len());
        delta.push(BigInt::from(self.entries[0].clone()));
        for w in self.entries.windows(2) {
            delta.push(BigInt::from(w[1].clone()) - BigInt::from(w[0].clone()));
        }
        delta
    }

    /// Shape analysis: first strict drop, first plateau, strict unimodality,
    /// maximal plateaus, and the first difference.
    pub fn shape(&self) -> ShapeReport {
        let s = self.socle_degree();
        let h = |d: usize| self.entry(d);

        let theta = (0..=s).find(|&t| h(t) > h(t + 1)).unwrap_or(s);
        let alpha = (0..s).find(|&t| h(t) == h(t + 1));

        let mut plateaus = Vec::new();
        let mut run_start = 0usize;
        for t in 1..=s {
            if self.entries[t] != self.entries[t - 1] {
                if t - 1 > run_start {
                    plateaus.push((run_start, t - 1));
                }
                run_start = t;
            }
        }
        if s > run_start {
            plateaus.push((run_start, s));
        }

        ShapeReport {
            theta,
            alpha,
            strictly_unimodal: self.is_strictly_unimodal(),
            plateaus,
            delta: self.first_difference(),
        }
    }

    /// True iff `h_0 < ... < h_a = ... = h_t > ... > h_s` for some `a <= t`.
    fn is_strictly_unimodal(&self) -> bool {
        let s = self.socle_degree();
        let mut t = 0;
        while t < s && self.entries[t] < self.entries[t + 1] {
            t += 1;
        }
        while t < s && self.entries[t] == self.entries[t + 1] {
            t += 1;
        }
        while t < s && self.entries[t] > self.entries[t + 1] {
            t += 1;
        }
        t == s
    }
}

impl fmt::Display for OSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for OSequence {
    type Err = OSequenceError;

    /// Parses comma-separated decimal integers, e.g. `"1,3,6,10,8,7"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut entries = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let value = token
                .parse::<BigUint>()
                .map_err(|_| OSequenceError::Unparseable {
                    token: String::from(token),
                })?;
            entries.push(value);
        }
        Self::from_entries(entries)
    }
}

/// Shape metadata of an h-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    /// Least `t` with `h_t > h_{t+1}` (reading `h_{s+1} = 0`); equals `s`
    /// when the sequence never decreases before the socle degree.
    pub theta: usize,
    /// Least `t` with `h_t = h_{t+1}`, if any.
    pub alpha: Option<usize>,
    /// True iff the sequence strictly increases, holds a single plateau,
    /// then strictly decreases.
    pub strictly_unimodal: bool,
    /// Maximal runs `(start, end)` of equal adjacent values, `end > start`.
    pub plateaus: Vec<(usize, usize)>,
    /// The first difference `ΔH`.
    pub delta: Vec<BigInt>,
}
