//! Lex-segment ideals built from Hilbert functions, and the degreewise
//! combinatorics of strongly stable monomial ideals: minimal generators,
//! truncations, quotient Hilbert functions, and colon dimensions.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::monomial::{
    all_monomials, degree_span, is_strongly_stable, monomial_count, Monomial, MonomialSet,
    MAX_VARS,
};
use crate::osequence::{MacaulayViolation, OSequence};

/// Errors from building or querying stable ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LexIdealError {
    /// The input Hilbert function violates Macaulay's bound.
    MacaulayViolation(MacaulayViolation),
    /// `h_1` exceeds the number of ambient variables.
    CodimExceedsVars { codim: BigUint, vars: usize },
    /// Variable count outside `1..=MAX_VARS`.
    UnsupportedVars { vars: usize },
    /// A slice outside the materialized range was requested.
    DegreeNotMaterialized { degree: usize, max_degree: usize },
    /// Closed-form index outside its admissible range.
    IndexOutOfRange { detail: &'static str },
    /// Slices do not form an ideal (a span escapes the next slice), or a
    /// slice fails strong stability.
    NotIdealShaped { degree: usize },
    NotStable { degree: usize },
}

impl fmt::Display for LexIdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexIdealError::MacaulayViolation(v) => write!(f, "{v}"),
            LexIdealError::CodimExceedsVars { codim, vars } => {
                write!(f, "codimension {codim} exceeds {vars} ambient variables")
            }
            LexIdealError::UnsupportedVars { vars } => {
                write!(f, "{vars} variables unsupported (1..={MAX_VARS})")
            }
            LexIdealError::DegreeNotMaterialized { degree, max_degree } => {
                write!(f, "degree {degree} not materialized (have 0..={max_degree})")
            }
            LexIdealError::IndexOutOfRange { detail } => write!(f, "index out of range: {detail}"),
            LexIdealError::NotIdealShaped { degree } => {
                write!(f, "slice in degree {degree} is not closed under multiplication")
            }
            LexIdealError::NotStable { degree } => {
                write!(f, "slice in degree {degree} is not strongly stable")
            }
        }
    }
}

impl core::error::Error for LexIdealError {}

impl From<MacaulayViolation> for LexIdealError {
    fn from(v: MacaulayViolation) -> Self {
        LexIdealError::MacaulayViolation(v)
    }
}

/// A monomial ideal materialized degree by degree, with every slice strongly
/// stable and `R_1 * slice(d)` contained in `slice(d+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableIdeal {
    n: usize,
    slices: Vec<MonomialSet>,
}

impl StableIdeal {
    /// Builds an ideal from contiguous degree slices starting at degree 0,
    /// checking strong stability and ideal nesting.
    pub fn from_slices(n: usize, slices: Vec<MonomialSet>) -> Result<Self, LexIdealError> {
        let ideal = Self::from_slices_unchecked(n, slices);
        for d in 0..=ideal.max_degree() {
            if !is_strongly_stable(&ideal.slices[d]) {
                return Err(LexIdealError::NotStable { degree: d });
            }
        }
        ideal.check_nesting()?;
        Ok(ideal)
    }

    pub(crate) fn from_slices_unchecked(n: usize, slices: Vec<MonomialSet>) -> Self {
        assert!(!slices.is_empty());
        debug_assert!(slices.iter().enumerate().all(|(d, s)| {
            s.n() == n && s.degree() == d as u32
        }));
        StableIdeal { n, slices }
    }

    pub(crate) fn check_nesting(&self) -> Result<(), LexIdealError> {
        for d in 0..self.max_degree() {
            let span = degree_span(self.slices[d].members(), d as u32 + 1, self.n);
            if !span.iter().all(|m| self.slices[d + 1].contains(m)) {
                return Err(LexIdealError::NotIdealShaped { degree: d + 1 });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest materialized degree.
    pub fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    /// The degree-`d` slice.
    pub fn slice(&self, d: usize) -> Result<&MonomialSet, LexIdealError> {
        self.slices.get(d).ok_or(LexIdealError::DegreeNotMaterialized {
            degree: d,
            max_degree: self.max_degree(),
        })
    }

    /// Minimal monomial generators in degree `d`: the slice minus the span
    /// of the previous slice.
    pub fn minimal_generators(&self, d: usize) -> Result<MonomialSet, LexIdealError> {
        let slice = self.slice(d)?;
        if d == 0 {
            return Ok(slice.clone());
        }
        let span = degree_span(self.slice(d - 1)?.members(), d as u32, self.n);
        let members: Vec<Monomial> = slice
            .iter()
            .filter(|m| !span.contains(m))
            .cloned()
            .collect();
        Ok(MonomialSet::new(self.n, d as u32, members).expect("degree preserved"))
    }

    /// The ideal generated by the slices of degree at most `d`, materialized
    /// through the same maximal degree as `self`.
    pub fn truncated_ideal(&self, d: usize) -> Result<StableIdeal, LexIdealError> {
        self.slice(d.min(self.max_degree()))?;
        let mut slices: Vec<MonomialSet> = self.slices[..=d.min(self.max_degree())].to_vec();
        for t in slices.len()..=self.max_degree() {
            let span = degree_span(slices[t - 1].members(), t as u32, self.n);
            slices.push(span);
        }
        Ok(StableIdeal::from_slices_unchecked(self.n, slices))
    }

    /// Hilbert function of the quotient on the inclusive degree range:
    /// `C(t + n - 1, n - 1) - |slice(t)|` per degree.
    pub fn quotient_hilbert(
        &self,
        from: usize,
        to: usize,
    ) -> Result<Vec<BigUint>, LexIdealError> {
        let mut out = Vec::with_capacity(to.saturating_sub(from) + 1);
        for t in from..=to {
            let slice = self.slice(t)?;
            let total = monomial_count(self.n, t as u32);
            out.push(BigUint::from(total - slice.len()));
        }
        Ok(out)
    }

    /// Full quotient Hilbert function over the materialized range.
    pub fn quotient_hilbert_all(&self) -> Vec<BigUint> {
        self.quotient_hilbert(0, self.max_degree())
            .expect("materialized range")
    }

    /// `dim (R/(J + (x_var)))_t`: degree-`t` monomials free of `x_var` and
    /// outside the slice.
    pub fn quotient_dim_modulo_var(&self, var: usize, t: usize) -> Result<usize, LexIdealError> {
        let slice = self.slice(t)?;
        Ok(all_monomials(self.n, t as u32)
            .into_iter()
            .filter(|m| !m.divisible_by_var(var) && !slice.contains(m))
            .count())
    }

    /// `dim ((J : x_var)/J)_t`: degree-`t` monomials outside the slice whose
    /// product with `x_var` lands in the next slice.
    pub fn colon_var_quotient_dim(&self, var: usize, t: usize) -> Result<usize, LexIdealError> {
        let slice = self.slice(t)?;
        let next = self.slice(t + 1)?;
        Ok(all_monomials(self.n, t as u32)
            .into_iter()
            .filter(|m| !slice.contains(m) && next.contains(&m.times_var(var)))
            .count())
    }
}

/// The lex-segment ideal of a Hilbert function: per degree, the span of the
/// lex-largest `C(d + n - 1, n - 1) - h_d` monomials. Materializes slices
/// through `max(s + 2, ...)` by default; see [`lex_segment_ideal_to`].
pub fn lex_segment_ideal(h: &OSequence, n: usize) -> Result<StableIdeal, LexIdealError> {
    lex_segment_ideal_to(h, n, h.socle_degree() + 2)
}

/// The lex-segment ideal materialized through `max_degree`.
pub fn lex_segment_ideal_to(
    h: &OSequence,
    n: usize,
    max_degree: usize,
) -> Result<StableIdeal, LexIdealError> {
    if !(1..=MAX_VARS).contains(&n) {
        return Err(LexIdealError::UnsupportedVars { vars: n });
    }
    if h.codim() > BigUint::from(n) {
        return Err(LexIdealError::CodimExceedsVars { codim: h.codim(), vars: n });
    }
    h.validate()?;
    let max_degree = max_degree.max(h.socle_degree() + 2);
    let mut slices = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let total = monomial_count(n, d as u32);
        let quotient = usize::try_from(&h.entry(d)).expect("validated entries fit a slice");
        debug_assert!(quotient <= total, "Macaulay bound keeps h_d within the slice");
        slices.push(MonomialSet::lex_segment(n, d as u32, total - quotient));
    }
    Ok(StableIdeal::from_slices_unchecked(n, slices))
}

/// Run decomposition of `1..=(d^2+d)/2` used by the closed form for last
/// monomials of lex ideals in three variables: returns `(k, lo, hi)` with
/// `lo <= i <= hi`, where `lo = (k-1)d - (k-1)(k-2)/2 + 1` and
/// `hi = kd - k(k-1)/2`.
pub(crate) fn lex_run(d: u64, i: u64) -> Option<(u64, u64, u64)> {
    if d == 0 || i == 0 || i > d * (d + 1) / 2 {
        return None;
    }
    for k in 1..=d {
        let lo = if k == 1 { 1 } else { (k - 1) * d - (k - 1) * (k - 2) / 2 + 1 };
        let hi = k * d - k * (k - 1) / 2;
        if (lo..=hi).contains(&i) {
            return Some((k, lo, hi));
        }
    }
    None
}

/// Closed form for the lex-smallest monomial of the degree-`d` slice of the
/// lex ideal in three variables whose quotient has `h_d = d + i`, for
/// `1 <= i <= (d^2 + d)/2`: `x1^k * x2^(i - lo) * x3^(hi - i)` on the run
/// containing `i`.
pub fn last_monomial_lex(d: u32, i: u64) -> Result<Monomial, LexIdealError> {
    let (k, lo, hi) = lex_run(d as u64, i).ok_or(LexIdealError::IndexOutOfRange {
        detail: "last_monomial_lex requires 1 <= i <= (d^2+d)/2",
    })?;
    Monomial::from_exponents(&[k as u32, (i - lo) as u32, (hi - i) as u32])
        .map_err(|_| LexIdealError::IndexOutOfRange { detail: "degree too large" })
}
