//! Decision procedures on O-sequences: certify candidates as "not level",
//! check necessary conditions for the Weak Lefschetz Property, bound the
//! reduction number from Hilbert data, and construct level sequences with
//! prescribed plateaus.
//!
//! Every certificate is recomputable from the sequence alone, and every
//! reduction-number argument uses only the Hilbert-function upper bound on
//! `r_1`, so a firing certificate is sound for *every* algebra with the
//! given Hilbert function. The checker never claims levelness: absence of
//! certificates yields `Unknown`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::betti::{ek_betti, BettiDiagram};
use crate::lexideal::lex_segment_ideal;
use crate::osequence::{binomial, upper_shift, MacaulayViolation, OSequence, OSequenceError};

/// Errors from construction operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelError {
    /// The base sequence is not a valid O-sequence.
    BaseNotValid(MacaulayViolation),
    /// The base sequence could not be assembled at all.
    BaseMalformed(OSequenceError),
    /// Construction parameters outside their admissible range.
    ParameterOutOfRange { detail: String },
}

impl fmt::Display for LevelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelError::BaseNotValid(v) => write!(f, "base sequence invalid: {v}"),
            LevelError::BaseMalformed(e) => write!(f, "base sequence malformed: {e}"),
            LevelError::ParameterOutOfRange { detail } => {
                write!(f, "parameter out of range: {detail}")
            }
        }
    }
}

impl core::error::Error for LevelError {}

/// The reduction-number bound readable from the Hilbert function alone:
/// `r_1(A) <= min{ k : h_{k+1} <= k+1 }` for every algebra `A` with this
/// Hilbert function.
pub fn r1_upper_bound(h: &OSequence) -> usize {
    (0..=h.socle_degree())
        .find(|&k| h.entry(k + 1) <= BigUint::from(k as u64 + 1))
        .expect("h_{s+1} = 0 always satisfies the bound")
}

/// The non-levelness tests, each anchored to the theorem it implements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CertificateKind {
    /// Macaulay's growth bound fails; the sequence is no Hilbert function.
    MacaulayInvalid,
    /// Plateau `h_{d-1} > h_d = h_{d+1}` with `h_d <= d+1` (any codimension).
    GhmsSmallPlateau,
    /// Plateau at `d` past the reduction bound: the colon by a general
    /// linear form vanishes in degree `d` but not in `d-1`, forcing a socle
    /// element in degree `d-1 < s`.
    PlateauPastReduction,
    /// Codimension 3 plateau with `h_d <= 2d+3`.
    SmallPlateau2dPlus3,
    /// Codimension 3 plateau with `β_{1,d+2} = β_{2,d+2}` for the lex ideal.
    LexBettiEqual,
    /// Codimension 3 plateau with `β_{2,d+2} > β_{1,d+2}` for the lex ideal:
    /// the excess survives cancellation, so every algebra with this Hilbert
    /// function has a socle element in degree `d-1`.
    LexBettiExcess,
    /// Codimension 3 with `h_{d-1} - h_d = 2(h_d - h_{d+1}) > 0` strictly
    /// between the reduction bound and the socle degree: the generic initial
    /// ideal has equal Betti numbers `β_{1,d+2} = β_{2,d+2} > 0`.
    GinBettiEqual,
    /// Codimension 3 non-unimodal shape: `h_{d-1} > h_d <= 2d+3` followed by
    /// `h_{d+1} >= h_d`.
    NonUnimodalSmallDrop,
    /// `h_{t-1} - h_t > (n-1)(h_t - h_{t+1})` at some `t` past a drop that
    /// lies beyond the reduction bound.
    DecayTooSteep,
    /// Failure of strict decrease after a drop past the reduction bound.
    NonStrictDecreaseAfterDrop,
}

impl CertificateKind {
    /// All kinds that can certify a valid sequence as not level.
    pub const ALL: [CertificateKind; 9] = [
        CertificateKind::GhmsSmallPlateau,
        CertificateKind::PlateauPastReduction,
        CertificateKind::SmallPlateau2dPlus3,
        CertificateKind::LexBettiEqual,
        CertificateKind::LexBettiExcess,
        CertificateKind::GinBettiEqual,
        CertificateKind::NonUnimodalSmallDrop,
        CertificateKind::DecayTooSteep,
        CertificateKind::NonStrictDecreaseAfterDrop,
    ];

    /// Stable identifier used in output formats.
    pub fn name(&self) -> &'static str {
        match self {
            CertificateKind::MacaulayInvalid => "MacaulayInvalid",
            CertificateKind::GhmsSmallPlateau => "GHMSSmallPlateau",
            CertificateKind::PlateauPastReduction => "PlateauPastReduction",
            CertificateKind::SmallPlateau2dPlus3 => "SmallPlateau2dPlus3",
            CertificateKind::LexBettiEqual => "LexBettiEqual",
            CertificateKind::LexBettiExcess => "LexBettiExcess",
            CertificateKind::GinBettiEqual => "GinBettiEqual",
            CertificateKind::NonUnimodalSmallDrop => "NonUnimodalSmallDrop",
            CertificateKind::DecayTooSteep => "DecayTooSteep",
            CertificateKind::NonStrictDecreaseAfterDrop => "NonStrictDecreaseAfterDrop",
        }
    }

    /// The theorem the certificate implements, cited by content.
    pub fn citation(&self) -> &'static str {
        match self {
            CertificateKind::MacaulayInvalid => "Macaulay growth bound",
            CertificateKind::GhmsSmallPlateau => {
                "plateau with h_d <= d+1 forces a socle element below the top degree"
            }
            CertificateKind::PlateauPastReduction => {
                "colon by a general linear form vanishes past the reduction number"
            }
            CertificateKind::SmallPlateau2dPlus3 => "codimension-3 plateau bound h_d <= 2d+3",
            CertificateKind::LexBettiEqual => "equal lex-ideal Betti numbers in a plateau degree",
            CertificateKind::LexBettiExcess => {
                "lex-ideal Betti excess beta_2 > beta_1 survives cancellation"
            }
            CertificateKind::GinBettiEqual => {
                "maximal colon growth forces equal gin Betti numbers"
            }
            CertificateKind::NonUnimodalSmallDrop => {
                "non-unimodal drop bounded by 2d+3 in codimension 3"
            }
            CertificateKind::DecayTooSteep => {
                "level decay bound h_{t-1}-h_t <= (n-1)(h_t-h_{t+1})"
            }
            CertificateKind::NonStrictDecreaseAfterDrop => {
                "level sequences decrease strictly after a drop past the reduction number"
            }
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A machine-checkable witness that a sequence is not level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// Witness degree.
    pub degree: usize,
    /// The numeric comparison that fired.
    pub detail: String,
    /// The theorem behind the test, cited by content.
    pub citation: &'static str,
}

impl Certificate {
    fn new(kind: CertificateKind, degree: usize, detail: String) -> Self {
        Certificate { kind, degree, detail, citation: kind.citation() }
    }
}

/// Classification outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    NotLevel,
    Unknown,
    Invalid,
}

impl VerdictStatus {
    pub fn name(&self) -> &'static str {
        match self {
            VerdictStatus::NotLevel => "not_level",
            VerdictStatus::Unknown => "unknown",
            VerdictStatus::Invalid => "invalid",
        }
    }
}

/// Verdict of [`check_level`]: `NotLevel` iff at least one certificate
/// fired; `Invalid` carries a single `MacaulayInvalid` certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelVerdict {
    pub status: VerdictStatus,
    pub certificates: Vec<Certificate>,
}

/// Runs every certificate test and collects all that fire.
pub fn check_level(h: &OSequence) -> LevelVerdict {
    check_level_with(h, &CertificateKind::ALL)
}

/// Runs only the enabled certificate kinds. Disabling kinds can only shrink
/// the certificate list, never flip `Unknown` to `NotLevel`.
pub fn check_level_with(h: &OSequence, enabled: &[CertificateKind]) -> LevelVerdict {
    if let Err(violation) = h.validate() {
        let detail = format!("{violation}");
        return LevelVerdict {
            status: VerdictStatus::Invalid,
            certificates: alloc::vec![Certificate::new(
                CertificateKind::MacaulayInvalid,
                violation.degree,
                detail,
            )],
        };
    }

    let on = |kind: CertificateKind| enabled.contains(&kind);
    let s = h.socle_degree();
    let rho = r1_upper_bound(h);
    let codim3 = h.codim() == BigUint::from(3u32);
    let mut certificates = Vec::new();

    // Plateau degrees: h_{d-1} > h_d = h_{d+1}; the plateau itself forces
    // d < s.
    let plateau_degrees: Vec<usize> = (1..s)
        .filter(|&d| h.entry(d - 1) > h.entry(d) && h.entry(d) == h.entry(d + 1))
        .collect();

    let lex_betti: Option<BettiDiagram> = if codim3
        && !plateau_degrees.is_empty()
        && (on(CertificateKind::LexBettiEqual) || on(CertificateKind::LexBettiExcess))
    {
        lex_segment_ideal(h, 3)
            .ok()
            .map(|ideal| ek_betti(&ideal).expect("lex slices are strongly stable"))
    } else {
        None
    };

    for &d in &plateau_degrees {
        let hd = h.entry(d);
        if on(CertificateKind::GhmsSmallPlateau) && hd <= BigUint::from(d as u64 + 1) {
            certificates.push(Certificate::new(
                CertificateKind::GhmsSmallPlateau,
                d,
                format!(
                    "h_{} = {} <= {}+1 with h_{} = {} > h_{}",
                    d,
                    hd,
                    d,
                    d - 1,
                    h.entry(d - 1),
                    d
                ),
            ));
        }
        if on(CertificateKind::PlateauPastReduction) && d >= rho {
            certificates.push(Certificate::new(
                CertificateKind::PlateauPastReduction,
                d,
                format!(
                    "plateau h_{} = h_{} = {} at d = {} >= r1 bound {}, below socle degree {}",
                    d,
                    d + 1,
                    hd,
                    d,
                    rho,
                    s
                ),
            ));
        }
        if codim3 {
            if on(CertificateKind::SmallPlateau2dPlus3) && hd <= BigUint::from(2 * d as u64 + 3) {
                certificates.push(Certificate::new(
                    CertificateKind::SmallPlateau2dPlus3,
                    d,
                    format!("h_{} = {} <= 2*{}+3 = {}", d, hd, d, 2 * d + 3),
                ));
            }
            if let Some(diagram) = &lex_betti {
                let b1 = diagram.get(1, d as u32 + 2).expect("within computed range");
                let b2 = diagram.get(2, d as u32 + 2).expect("within computed range");
                if on(CertificateKind::LexBettiEqual) && b1 == b2 && b1 > 0 {
                    certificates.push(Certificate::new(
                        CertificateKind::LexBettiEqual,
                        d,
                        format!(
                            "beta_1,{} = beta_2,{} = {} on the lex ideal",
                            d + 2,
                            d + 2,
                            b1
                        ),
                    ));
                }
                if on(CertificateKind::LexBettiExcess) && b2 > b1 {
                    certificates.push(Certificate::new(
                        CertificateKind::LexBettiExcess,
                        d,
                        format!(
                            "beta_2,{} = {} > beta_1,{} = {} on the lex ideal",
                            d + 2,
                            b2,
                            d + 2,
                            b1
                        ),
                    ));
                }
            }
        }
    }

    if codim3 {
        if on(CertificateKind::GinBettiEqual) {
            for d in rho.max(1) + 1..s {
                if h.entry(d - 1) < h.entry(d) || h.entry(d) < h.entry(d + 1) {
                    continue;
                }
                let left = h.entry(d - 1) - h.entry(d);
                let drop = h.entry(d) - h.entry(d + 1);
                if !drop.is_zero() && left == BigUint::from(2u32) * &drop {
                    certificates.push(Certificate::new(
                        CertificateKind::GinBettiEqual,
                        d,
                        format!(
                            "h_{} - h_{} = {} = 2*(h_{} - h_{}) with r1 bound {} < {} < s = {}",
                            d - 1,
                            d,
                            left,
                            d,
                            d + 1,
                            rho,
                            d,
                            s
                        ),
                    ));
                }
            }
        }
        if on(CertificateKind::NonUnimodalSmallDrop) {
            for d in 1..s {
                if h.entry(d - 1) > h.entry(d)
                    && h.entry(d) <= BigUint::from(2 * d as u64 + 3)
                    && h.entry(d + 1) >= h.entry(d)
                {
                    certificates.push(Certificate::new(
                        CertificateKind::NonUnimodalSmallDrop,
                        d,
                        format!(
                            "h_{} = {} > h_{} = {} <= 2*{}+3 and h_{} = {} >= h_{}",
                            d - 1,
                            h.entry(d - 1),
                            d,
                            h.entry(d),
                            d,
                            d + 1,
                            h.entry(d + 1),
                            d
                        ),
                    ));
                }
            }
        }
    }

    // A drop at or past the reduction bound pins down the tail of any level
    // sequence: strict decrease to the socle degree, with bounded decay.
    if let Some(d0) = (rho.max(1)..=s).find(|&d| h.entry(d - 1) > h.entry(d)) {
        let codim = h.codim();
        if on(CertificateKind::NonStrictDecreaseAfterDrop) {
            for t in d0..s {
                if h.entry(t) <= h.entry(t + 1) {
                    certificates.push(Certificate::new(
                        CertificateKind::NonStrictDecreaseAfterDrop,
                        t,
                        format!(
                            "h_{} = {} does not exceed h_{} = {} after the drop at degree {}",
                            t,
                            h.entry(t),
                            t + 1,
                            h.entry(t + 1),
                            d0
                        ),
                    ));
                }
            }
        }
        if on(CertificateKind::DecayTooSteep) && !codim.is_zero() {
            let factor = &codim - BigUint::one();
            for t in d0..=s {
                if h.entry(t - 1) < h.entry(t) {
                    continue;
                }
                let fall = h.entry(t - 1) - h.entry(t);
                let next_fall = if h.entry(t) >= h.entry(t + 1) {
                    h.entry(t) - h.entry(t + 1)
                } else {
                    BigUint::zero()
                };
                let bound = &factor * &next_fall;
                if fall > bound {
                    certificates.push(Certificate::new(
                        CertificateKind::DecayTooSteep,
                        t,
                        format!(
                            "h_{} - h_{} = {} > {} * (h_{} - h_{}) = {}",
                            t - 1,
                            t,
                            fall,
                            factor,
                            t,
                            t + 1,
                            bound
                        ),
                    ));
                }
            }
        }
    }

    let status = if certificates.is_empty() {
        VerdictStatus::Unknown
    } else {
        VerdictStatus::NotLevel
    };
    LevelVerdict { status, certificates }
}

/// Clause of the Weak Lefschetz necessary-condition check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WlpClause {
    /// The sequence is not strictly unimodal.
    NotStrictlyUnimodal,
    /// The positive part of the first difference fails Macaulay's bound.
    PositiveDifferenceNotOSequence,
    /// `h_{d-1} - h_d <= (n-1)(h_d - h_{d+1})` fails past the peak.
    GrowthFactorExceeded,
    /// The strict codimension-3 refinement fails before the socle degree.
    StrictGrowthFactorExceeded,
    /// `h_{s-1} <= 3 h_s` fails (codimension 3).
    SocleRatioExceeded,
}

impl WlpClause {
    pub fn name(&self) -> &'static str {
        match self {
            WlpClause::NotStrictlyUnimodal => "NotStrictlyUnimodal",
            WlpClause::PositiveDifferenceNotOSequence => "PositiveDifferenceNotOSequence",
            WlpClause::GrowthFactorExceeded => "GrowthFactorExceeded",
            WlpClause::StrictGrowthFactorExceeded => "StrictGrowthFactorExceeded",
            WlpClause::SocleRatioExceeded => "SocleRatioExceeded",
        }
    }
}

/// Outcome of [`check_wlp_necessary`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WlpCheck {
    Pass,
    Fail {
        clause: WlpClause,
        degree: usize,
        detail: String,
    },
}

impl WlpCheck {
    pub fn passed(&self) -> bool {
        matches!(self, WlpCheck::Pass)
    }
}

/// Necessary conditions for a level algebra with the Weak Lefschetz
/// Property in `n` variables: strict unimodality, the positive part of the
/// first difference an O-sequence, and the decay bounds
/// `h_{d-1} - h_d <= (n-1)(h_d - h_{d+1})` past the peak (strict before the
/// socle degree when `n = 3`, with `h_{s-1} <= 3 h_s` at the end).
///
/// Reports the first violated clause.
pub fn check_wlp_necessary(h: &OSequence, n: usize) -> Result<WlpCheck, LevelError> {
    h.validate().map_err(LevelError::BaseNotValid)?;
    if n < 1 || BigUint::from(n as u64) < h.codim() {
        return Err(LevelError::ParameterOutOfRange {
            detail: format!("n = {} is below the codimension {}", n, h.codim()),
        });
    }
    let s = h.socle_degree();
    let shape = h.shape();

    if !shape.strictly_unimodal {
        return Ok(WlpCheck::Fail {
            clause: WlpClause::NotStrictlyUnimodal,
            degree: shape.theta,
            detail: String::from(
                "shape is not strictly-increasing / plateau / strictly-decreasing",
            ),
        });
    }

    let delta = h.first_difference();
    let positive: Vec<BigUint> = delta
        .iter()
        .take_while(|d| d.sign() == num_bigint::Sign::Plus)
        .map(|d| d.magnitude().clone())
        .collect();
    if let Ok(delta_seq) = OSequence::from_entries(positive) {
        if let Err(violation) = delta_seq.validate() {
            return Ok(WlpCheck::Fail {
                clause: WlpClause::PositiveDifferenceNotOSequence,
                degree: violation.degree,
                detail: format!("{violation}"),
            });
        }
    }

    let theta = shape.theta;
    let factor = BigUint::from(n as u64 - 1);
    for d in theta + 1..=s {
        let fall = h.entry(d - 1) - h.entry(d);
        let next_fall = h.entry(d) - h.entry(d + 1);
        let bound = &factor * &next_fall;
        if n == 3 {
            // strict before the socle degree; d = s is the socle-ratio
            // clause below
            if d < s && fall >= bound {
                return Ok(WlpCheck::Fail {
                    clause: WlpClause::StrictGrowthFactorExceeded,
                    degree: d,
                    detail: format!(
                        "h_{} - h_{} = {} is not < 2*(h_{} - h_{}) = {}",
                        d - 1,
                        d,
                        fall,
                        d,
                        d + 1,
                        bound
                    ),
                });
            }
        } else if fall > bound {
            return Ok(WlpCheck::Fail {
                clause: WlpClause::GrowthFactorExceeded,
                degree: d,
                detail: format!(
                    "h_{} - h_{} = {} > {}*(h_{} - h_{}) = {}",
                    d - 1,
                    d,
                    fall,
                    n - 1,
                    d,
                    d + 1,
                    bound
                ),
            });
        }
    }
    if n == 3 && s >= 1 {
        let triple = BigUint::from(3u32) * h.entry(s);
        if h.entry(s - 1) > triple {
            return Ok(WlpCheck::Fail {
                clause: WlpClause::SocleRatioExceeded,
                degree: s,
                detail: format!("h_{} = {} > 3*h_{} = {}", s - 1, h.entry(s - 1), s, triple),
            });
        }
    }
    Ok(WlpCheck::Pass)
}

/// Extends a level sequence by a generic form of the socle degree:
/// `H_i = min(h_i + C(r-1+e-i, e-i), C(r-1+i, i))` for `i = 0..e`.
pub fn iarrobino_extend(base: &OSequence, r: u32) -> Result<OSequence, LevelError> {
    if r < 2 {
        return Err(LevelError::ParameterOutOfRange {
            detail: format!("codimension r = {r} must be at least 2"),
        });
    }
    base.validate().map_err(LevelError::BaseNotValid)?;
    let e = base.socle_degree();
    let mut entries = Vec::with_capacity(e + 1);
    for i in 0..=e {
        let added = base.entry(i)
            + binomial(&BigUint::from(r as u64 - 1 + (e - i) as u64), (e - i) as u32);
        let ambient = binomial(&BigUint::from(r as u64 - 1 + i as u64), i as u32);
        entries.push(added.min(ambient));
    }
    OSequence::from_entries(entries).map_err(LevelError::BaseMalformed)
}

/// Largest `k >= 5` admissible for [`plateau_level_family`] at a given `d`:
/// `(d^2 - 3d - 2)/2`, the range on which the extension keeps
/// `H_{d-1} = 2d+k+1` under the ambient bound `C(d+1, 2)`.
pub fn plateau_family_max_k(d: usize) -> u64 {
    ((d * d).saturating_sub(3 * d + 2) / 2) as u64
}

/// A level sequence of codimension 3 with tail
/// `H_{d-1} = 2d+k+1 > H_d = H_{d+1} = 2d+k`, built by extending the base
/// `h_i = min(C(i+2, 2), 2i + k - 3)` with a generic form of degree `d+1`.
///
/// Admissible parameters: `d >= 5` with `k = 4`, or `5 <= k <= (d^2-3d-2)/2`.
pub fn plateau_level_family(d: usize, k: u64) -> Result<OSequence, LevelError> {
    if d < 5 {
        return Err(LevelError::ParameterOutOfRange {
            detail: format!("d = {d} must be at least 5"),
        });
    }
    if k < 4 || (k > 4 && k > plateau_family_max_k(d)) {
        return Err(LevelError::ParameterOutOfRange {
            detail: format!(
                "k = {k} outside the admissible range: 4, or 5..={}",
                plateau_family_max_k(d)
            ),
        });
    }
    let base = plateau_family_base(d, k)?;
    iarrobino_extend(&base, 3)
}

/// The base sequence `h_i = min(C(i+2, 2), 2i + k - 3)` for `i = 0..=d+1`.
fn plateau_family_base(d: usize, k: u64) -> Result<OSequence, LevelError> {
    let entries: Vec<BigUint> = (0..=d as u64 + 1)
        .map(|i| {
            let ambient = binomial(&BigUint::from(i + 2), 2);
            let linear = BigUint::from(2 * i + k - 3);
            ambient.min(linear)
        })
        .collect();
    OSequence::from_entries(entries).map_err(LevelError::BaseMalformed)
}

/// Visits every valid O-sequence with `h_1 = codim` and the exact socle
/// degree, in lexicographic order of entries.
pub fn for_each_valid_osequence<F: FnMut(&OSequence)>(
    codim: u64,
    socle_degree: usize,
    mut visit: F,
) {
    if socle_degree == 0 {
        visit(&OSequence::from_u64(&[1]).expect("valid"));
        return;
    }
    if codim == 0 {
        return;
    }
    let mut entries: Vec<u64> = alloc::vec![1, codim];
    recurse(&mut entries, socle_degree, &mut visit);
}

fn recurse<F: FnMut(&OSequence)>(entries: &mut Vec<u64>, socle_degree: usize, visit: &mut F) {
    if entries.len() == socle_degree + 1 {
        let h = OSequence::from_u64(entries).expect("positive entries");
        debug_assert!(h.is_valid());
        visit(&h);
        return;
    }
    let d = entries.len() - 1;
    let last = *entries.last().expect("nonempty");
    let bound = upper_shift(&BigUint::from(last), d as u32);
    let bound = u64::try_from(&bound).expect("enumeration bounds fit u64");
    for next in 1..=bound {
        entries.push(next);
        recurse(entries, socle_degree, visit);
        entries.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn seq(entries: &[u64]) -> OSequence {
        OSequence::from_u64(entries).unwrap()
    }

    fn kinds(verdict: &LevelVerdict) -> Vec<CertificateKind> {
        verdict.certificates.iter().map(|c| c.kind).collect()
    }

    #[test]
    fn r1_bound_fixtures() {
        assert_eq!(r1_upper_bound(&seq(&[1, 3, 6, 3, 1])), 2);
        assert_eq!(r1_upper_bound(&seq(&[1, 3, 6, 10, 8, 7])), 5);
        assert_eq!(r1_upper_bound(&seq(&[1])), 0);
    }

    #[test]
    fn plateau_at_2d_plus_3_is_not_level() {
        let verdict = check_level(&seq(&[1, 3, 6, 10, 15, 21, 18, 17, 17]));
        assert_eq!(verdict.status, VerdictStatus::NotLevel);
        let cert = verdict
            .certificates
            .iter()
            .find(|c| c.kind == CertificateKind::SmallPlateau2dPlus3)
            .expect("plateau bound certificate");
        assert_eq!(cert.degree, 7);
    }

    #[test]
    fn iarrobino_example_stays_unknown() {
        let verdict = check_level(&seq(&[1, 3, 6, 10, 15, 14, 14]));
        assert_eq!(verdict.status, VerdictStatus::Unknown);
        assert!(verdict.certificates.is_empty());
    }

    #[test]
    fn non_unimodal_small_drop_fires() {
        for h8 in [18u64, 19] {
            let verdict = check_level(&seq(&[1, 3, 6, 10, 15, 20, 18, 17, h8]));
            assert_eq!(verdict.status, VerdictStatus::NotLevel);
            let cert = verdict
                .certificates
                .iter()
                .find(|c| c.kind == CertificateKind::NonUnimodalSmallDrop)
                .unwrap();
            assert_eq!(cert.degree, 7);
        }
    }

    #[test]
    fn gorenstein_socle_boundary_stays_unknown() {
        // The gin Betti equality holds only in the socle degree, which the
        // certificate excludes.
        let verdict = check_level(&seq(&[1, 3, 6, 3, 1]));
        assert_eq!(verdict.status, VerdictStatus::Unknown);
    }

    #[test]
    fn ghms_level_sequence_stays_unknown() {
        let verdict = check_level(&seq(&[1, 3, 6, 10, 8, 7]));
        assert_eq!(verdict.status, VerdictStatus::Unknown);
    }

    #[test]
    fn invalid_sequences_are_flagged() {
        let verdict = check_level(&seq(&[1, 3, 7]));
        assert_eq!(verdict.status, VerdictStatus::Invalid);
        assert_eq!(verdict.certificates.len(), 1);
        assert_eq!(verdict.certificates[0].kind, CertificateKind::MacaulayInvalid);
    }

    #[test]
    fn small_plateau_fires_for_any_codim() {
        // plateau value 4 <= d+1 = 4 at d = 3, codimension 4
        let verdict = check_level(&seq(&[1, 4, 10, 4, 4]));
        assert!(kinds(&verdict).contains(&CertificateKind::GhmsSmallPlateau));
    }

    #[test]
    fn gin_betti_equal_fires_between_bound_and_socle() {
        // a + 3k, a + k, a with a = 2, k = 2 at degrees 3..5, then a tail so
        // that d = 4 < s; r1 bound is 3 here.
        let h = seq(&[1, 3, 6, 8, 4, 2, 1]);
        assert_eq!(r1_upper_bound(&h), 3);
        let verdict = check_level(&h);
        let cert = verdict
            .certificates
            .iter()
            .find(|c| c.kind == CertificateKind::GinBettiEqual)
            .expect("maximal colon growth certificate");
        assert_eq!(cert.degree, 4);
    }

    #[test]
    fn wlp_fixtures() {
        let check = check_wlp_necessary(&seq(&[1, 3, 6, 10, 8, 7]), 3).unwrap();
        match check {
            WlpCheck::Fail { clause, degree, .. } => {
                assert_eq!(clause, WlpClause::StrictGrowthFactorExceeded);
                assert_eq!(degree, 4);
            }
            WlpCheck::Pass => panic!("expected failure at d = 4"),
        }

        assert!(check_wlp_necessary(&seq(&[1, 3, 6, 3, 1]), 3).unwrap().passed());

        let check = check_wlp_necessary(&seq(&[1, 3, 6, 10, 15, 14, 14]), 3).unwrap();
        match check {
            WlpCheck::Fail { clause, .. } => assert_eq!(clause, WlpClause::NotStrictlyUnimodal),
            WlpCheck::Pass => panic!("plateau after a drop must fail"),
        }
    }

    #[test]
    fn wlp_socle_ratio_clause() {
        // (1,3,4,1): strictly unimodal, but h_2 = 4 > 3*h_3
        let check = check_wlp_necessary(&seq(&[1, 3, 4, 1]), 3).unwrap();
        match check {
            WlpCheck::Fail { clause, degree, .. } => {
                assert_eq!(clause, WlpClause::SocleRatioExceeded);
                assert_eq!(degree, 3);
            }
            WlpCheck::Pass => panic!("socle ratio must fail"),
        }
        // boundary case passes
        assert!(check_wlp_necessary(&seq(&[1, 3, 3, 1]), 3).unwrap().passed());
    }

    #[test]
    fn iarrobino_fixtures() {
        let base = seq(&[1, 3, 5, 7, 9, 11, 13]);
        let extended = iarrobino_extend(&base, 3).unwrap();
        assert_eq!(extended, seq(&[1, 3, 6, 10, 15, 14, 14]));

        assert_eq!(iarrobino_extend(&seq(&[1]), 3).unwrap(), seq(&[1]));

        let base = seq(&[1, 3, 5, 7, 9, 11, 13, 15]);
        let extended = iarrobino_extend(&base, 3).unwrap();
        assert_eq!(extended, seq(&[1, 3, 6, 10, 15, 17, 16, 16]));
    }

    #[test]
    fn plateau_family_fixtures() {
        assert_eq!(
            plateau_level_family(5, 4).unwrap(),
            seq(&[1, 3, 6, 10, 15, 14, 14])
        );

        let h = plateau_level_family(6, 4).unwrap();
        let tail: Vec<u64> = (5..=7).map(|i| h.entry_u64(i).unwrap()).collect();
        assert_eq!(tail, vec![17, 16, 16]);

        let h = plateau_level_family(7, 5).unwrap();
        let tail: Vec<u64> = (6..=8).map(|i| h.entry_u64(i).unwrap()).collect();
        assert_eq!(tail, vec![20, 19, 19]);

        assert!(plateau_level_family(4, 4).is_err());
        assert!(plateau_level_family(5, 3).is_err());
        assert!(plateau_level_family(5, 5).is_err());
    }

    #[test]
    fn enumeration_is_exact_on_small_cases() {
        let mut count = 0usize;
        for_each_valid_osequence(2, 2, |h| {
            assert!(h.is_valid());
            assert_eq!(h.socle_degree(), 2);
            count += 1;
        });
        // h_1 = 2, h_2 in 1..=3
        assert_eq!(count, 3);
    }
}
