//! Graded Betti numbers of stable monomial ideals via the Eliahou-Kervaire
//! formula, closed-form Betti numbers in plateau degrees (for lex ideals and
//! for generic initial ideals past the reduction bound), and Betti-diagram
//! rendering.
//!
//! Diagram convention: entries are Betti numbers of the *ideal*, so column
//! `q` runs over `0..n-1` and row `t` holds `β_{q, t+q+1}`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigUint;

use crate::level::r1_upper_bound;
use crate::lexideal::{lex_run, LexIdealError, StableIdeal};
use crate::monomial::is_strongly_stable;
use crate::osequence::{binomial_u64, MacaulayViolation, OSequence};

/// Errors from Betti-number computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BettiError {
    /// A slice of the input ideal fails strong stability.
    NotStable { degree: usize },
    /// Entry outside the range the diagram was computed over.
    MissingEntry { q: usize, j: u32 },
    /// The closed formula is not certified by the Hilbert function alone.
    ReductionBoundNotMet { d: usize, bound: usize },
    /// Closed-form parameters outside their admissible range.
    IndexOutOfRange { detail: &'static str },
    /// The input Hilbert function is not an O-sequence.
    MacaulayViolation(MacaulayViolation),
    /// Column index outside `0..n-1`.
    ColumnOutOfRange { q: usize, n: usize },
}

impl fmt::Display for BettiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BettiError::NotStable { degree } => {
                write!(f, "slice in degree {degree} is not strongly stable")
            }
            BettiError::MissingEntry { q, j } => {
                write!(f, "entry ({q}, {j}) lies outside the computed range")
            }
            BettiError::ReductionBoundNotMet { d, bound } => write!(
                f,
                "degree {d} does not meet the reduction-number bound {bound}; \
                 the formula is not certified by the Hilbert function alone"
            ),
            BettiError::IndexOutOfRange { detail } => write!(f, "index out of range: {detail}"),
            BettiError::MacaulayViolation(v) => write!(f, "{v}"),
            BettiError::ColumnOutOfRange { q, n } => {
                write!(f, "column {q} out of range for {n} variables")
            }
        }
    }
}

impl core::error::Error for BettiError {}

impl From<MacaulayViolation> for BettiError {
    fn from(v: MacaulayViolation) -> Self {
        BettiError::MacaulayViolation(v)
    }
}

impl From<LexIdealError> for BettiError {
    fn from(e: LexIdealError) -> Self {
        match e {
            LexIdealError::MacaulayViolation(v) => BettiError::MacaulayViolation(v),
            LexIdealError::NotStable { degree } => BettiError::NotStable { degree },
            _ => BettiError::IndexOutOfRange { detail: "ideal slice unavailable" },
        }
    }
}

/// A table of graded Betti numbers `β_{q,j}` of an ideal, `q = 0..n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiDiagram {
    n: usize,
    /// Largest generator degree the table accounts for: entries with
    /// `j - q <= complete_through` are reliable, beyond that they are
    /// unknown rather than zero.
    complete_through: u32,
    table: BTreeMap<(usize, u32), u64>,
}

impl BettiDiagram {
    pub(crate) fn new(n: usize, complete_through: u32) -> Self {
        BettiDiagram { n, complete_through, table: BTreeMap::new() }
    }

    pub(crate) fn add(&mut self, q: usize, j: u32, value: u64) {
        if value > 0 {
            *self.table.entry((q, j)).or_insert(0) += value;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest generator degree covered by the table.
    pub fn complete_through(&self) -> u32 {
        self.complete_through
    }

    /// `β_{q,j}`, or an error when the entry lies outside the computed range.
    pub fn get(&self, q: usize, j: u32) -> Result<u64, BettiError> {
        if q >= self.n {
            return Err(BettiError::ColumnOutOfRange { q, n: self.n });
        }
        if j < q as u32 || j - q as u32 > self.complete_through {
            return Err(BettiError::MissingEntry { q, j });
        }
        Ok(self.table.get(&(q, j)).copied().unwrap_or(0))
    }

    /// Nonzero entries in `(q, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.table.iter().map(|(&(q, j), &v)| (q, j, v))
    }

    /// Column sum over all computed degrees.
    pub fn total(&self, q: usize) -> u64 {
        self.table
            .iter()
            .filter(|(&(tq, _), _)| tq == q)
            .map(|(_, &v)| v)
            .sum()
    }

    /// The row `t` of the diagram: `β_{q, t+q+1}` for `q = 0..n-1`.
    pub fn row(&self, t: u32) -> Vec<u64> {
        (0..self.n)
            .map(|q| self.table.get(&(q, t + q as u32 + 1)).copied().unwrap_or(0))
            .collect()
    }

    /// Renders the diagram: a `total:` header, then one row per `t` with
    /// entries `β_{q, t+q+1}` and `-` for zeros.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut line = String::from("total:");
        for q in 0..self.n {
            let total = self.total(q);
            if total == 0 {
                line.push_str(" -");
            } else {
                let _ = write!(line, " {total}");
            }
        }
        out.push_str(&line);
        out.push('\n');
        for _ in 0..line.len() {
            out.push('-');
        }
        out.push('\n');
        let last_row = self
            .table
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(&(q, j), _)| j - q as u32 - 1)
            .max();
        if let Some(last) = last_row {
            for t in 0..=last {
                let _ = write!(out, "{t}:");
                for value in self.row(t) {
                    if value == 0 {
                        out.push_str(" -");
                    } else {
                        let _ = write!(out, " {value}");
                    }
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Graded Betti numbers of a stable ideal by the Eliahou-Kervaire formula:
/// `β_{q,j} = Σ_{T ∈ G(J)_{j-q}} C(m(T) - 1, q)`, summed over the minimal
/// generators materialized in the ideal.
pub fn ek_betti(ideal: &StableIdeal) -> Result<BettiDiagram, BettiError> {
    let n = ideal.n();
    for d in 0..=ideal.max_degree() {
        let slice = ideal.slice(d).expect("materialized");
        if !is_strongly_stable(slice) {
            return Err(BettiError::NotStable { degree: d });
        }
    }
    let mut diagram = BettiDiagram::new(n, ideal.max_degree() as u32);
    for d in 1..=ideal.max_degree() {
        let gens = ideal.minimal_generators(d)?;
        for t in gens.iter() {
            let m = t.max_index().expect("generators have positive degree");
            for q in 0..n.min(m) {
                diagram.add(q, d as u32 + q as u32, binomial_u64(m as u64 - 1, q as u64));
            }
        }
    }
    Ok(diagram)
}

/// Socle dimension in degree `t` read from the last diagram column:
/// `dim soc(R/J)_t = β_{n-1, t+n}(J)`.
pub fn socle_from_betti(diagram: &BettiDiagram, t: u32) -> Result<u64, BettiError> {
    diagram.get(diagram.n() - 1, t + diagram.n() as u32)
}

/// The Betti row `β_{i, i+d+1}(Gin(I)) = (h_d - h_{d+1}) * C(n-1, i)` for
/// `i = 0..n-1`, valid past the reduction number: requires `d` to exceed
/// the Hilbert-function bound on `r_1`.
pub fn gin_betti_plateau(h: &OSequence, n: usize, d: usize) -> Result<Vec<BigUint>, BettiError> {
    h.validate()?;
    gin_betti_plateau_with_reduction_number(h, n, d, r1_upper_bound(h))
}

/// Same formula with a caller-supplied reduction number, for use when a
/// sharper `r_1` is known from the algebra itself.
pub fn gin_betti_plateau_with_reduction_number(
    h: &OSequence,
    n: usize,
    d: usize,
    r1: usize,
) -> Result<Vec<BigUint>, BettiError> {
    if d <= r1 {
        return Err(BettiError::ReductionBoundNotMet { d, bound: r1 });
    }
    let drop = h.entry(d) - h.entry(d + 1);
    Ok((0..n)
        .map(|i| &drop * binomial_u64(n as u64 - 1, i as u64))
        .collect())
}

/// `β_{2, d+2}(Gin(I)) = h_{d-1} - h_d` in three variables, counting the
/// `x_3`-divisible degree-`d` generators; requires `d - 1` to reach the
/// Hilbert-function bound on `r_1`.
pub fn gin_top_betti(h: &OSequence, d: usize) -> Result<BigUint, BettiError> {
    h.validate()?;
    gin_top_betti_with_reduction_number(h, d, r1_upper_bound(h))
}

/// Same count with a caller-supplied reduction number.
pub fn gin_top_betti_with_reduction_number(
    h: &OSequence,
    d: usize,
    r1: usize,
) -> Result<BigUint, BettiError> {
    if d == 0 || d - 1 < r1 {
        return Err(BettiError::ReductionBoundNotMet { d, bound: r1 + 1 });
    }
    Ok(h.entry(d - 1) - h.entry(d))
}

/// Closed-form `(β_{1,d+2}, β_{2,d+2})` of the lex ideal in three variables
/// for a Hilbert function with `h_d = h_{d+1} = d + i` and
/// `j = h_{d-1} - h_d >= 1`.
///
/// With `i` lying in the run `lo..=hi` of index `k` (see
/// [`crate::lexideal::last_monomial_lex`]): `β_1` is `2k-1` on the first `k`
/// values of the run and `2k` on the rest; `β_2 = j + k`.
pub fn lex_plateau_betti(d: u32, i: u64, j: u64) -> Result<(u64, u64), BettiError> {
    let dd = d as u64;
    if j < 1 {
        return Err(BettiError::IndexOutOfRange { detail: "requires j >= 1" });
    }
    if i + j > dd * (dd.saturating_sub(1)) / 2 {
        return Err(BettiError::IndexOutOfRange {
            detail: "requires i + j <= (d^2 - d)/2 so h_{d-1} fits in degree d-1",
        });
    }
    let (k, lo, _hi) = lex_run(dd, i).ok_or(BettiError::IndexOutOfRange {
        detail: "requires 1 <= i <= (d^2 + d)/2",
    })?;
    let beta1 = if i - lo < k { 2 * k - 1 } else { 2 * k };
    Ok((beta1, j + k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexideal::lex_segment_ideal;
    use alloc::vec;

    fn seq(entries: &[u64]) -> OSequence {
        OSequence::from_u64(entries).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn ek_rows_of_ghms_sequence() {
        let ideal = lex_segment_ideal(&seq(&[1, 3, 6, 10, 8, 7]), 3).unwrap();
        let diagram = ek_betti(&ideal).unwrap();
        assert_eq!(diagram.row(3), vec![7, 9, 3]);
        assert_eq!(diagram.row(4), vec![2, 4, 2]);
    }

    #[test]
    fn ek_of_maximal_ideal_is_koszul() {
        let ideal = lex_segment_ideal(&seq(&[1]), 3).unwrap();
        let diagram = ek_betti(&ideal).unwrap();
        assert_eq!(diagram.get(0, 1).unwrap(), 3);
        assert_eq!(diagram.get(1, 2).unwrap(), 3);
        assert_eq!(diagram.get(2, 3).unwrap(), 1);
    }

    #[test]
    fn no_generators_in_degree_means_zero_diagonal() {
        // h = (1,3,6,10,8,7): no generators in degrees 1..3
        let ideal = lex_segment_ideal(&seq(&[1, 3, 6, 10, 8, 7]), 3).unwrap();
        let diagram = ek_betti(&ideal).unwrap();
        for d in 1..=3u32 {
            for q in 0..3usize {
                assert_eq!(diagram.get(q, d + q as u32).unwrap(), 0);
            }
        }
    }

    #[test]
    fn socle_readings() {
        let ideal = lex_segment_ideal(&seq(&[1, 3, 6, 10, 8, 7]), 3).unwrap();
        let diagram = ek_betti(&ideal).unwrap();
        assert_eq!(socle_from_betti(&diagram, 3).unwrap(), 3);
        assert_eq!(socle_from_betti(&diagram, 4).unwrap(), 2);

        let maximal = lex_segment_ideal(&seq(&[1]), 3).unwrap();
        let diagram = ek_betti(&maximal).unwrap();
        assert_eq!(socle_from_betti(&diagram, 0).unwrap(), 1);
    }

    #[test]
    fn gin_row_for_gorenstein_sequence() {
        let h = seq(&[1, 3, 6, 3, 1]);
        let row = gin_betti_plateau(&h, 3, 4).unwrap();
        assert_eq!(row, vec![big(1), big(2), big(1)]);
    }

    #[test]
    fn gin_row_respects_reduction_bound() {
        let h = seq(&[1, 3, 6, 10, 8, 7]);
        // The Hilbert-function bound is 5, so d = 4 is not certified.
        assert!(matches!(
            gin_betti_plateau(&h, 3, 4),
            Err(BettiError::ReductionBoundNotMet { d: 4, bound: 5 })
        ));
        // With the sharper reduction number 3 the row is computable.
        let row = gin_betti_plateau_with_reduction_number(&h, 3, 4, 3).unwrap();
        assert_eq!(row[1], big(2));
    }

    #[test]
    fn gin_row_vanishes_on_plateau() {
        let h = seq(&[1, 3, 6, 10, 15, 14, 14]);
        let row = gin_betti_plateau_with_reduction_number(&h, 3, 5, 4).unwrap();
        assert_eq!(row, vec![big(0), big(0), big(0)]);
    }

    #[test]
    fn gin_top_betti_fixtures() {
        let h = seq(&[1, 3, 6, 3, 1]);
        assert_eq!(gin_top_betti(&h, 4).unwrap(), big(2));

        let h = seq(&[1, 3, 6, 10, 8, 7]);
        assert!(gin_top_betti(&h, 4).is_err());
        assert_eq!(gin_top_betti_with_reduction_number(&h, 4, 3).unwrap(), big(2));

        // plateau h_{d-1} = h_d gives zero
        let h = seq(&[1, 3, 6, 10, 15, 14, 14]);
        assert_eq!(gin_top_betti_with_reduction_number(&h, 6, 4).unwrap(), big(0));
    }

    #[test]
    fn lex_plateau_closed_form_fixtures() {
        for d in 4..=10u32 {
            for i in 2..=d as u64 {
                assert_eq!(lex_plateau_betti(d, i, 1).unwrap(), (2, 2));
            }
        }
        // the larger-i fixtures need room for h_{d-1} in degree d-1
        for d in 5..=10u32 {
            assert_eq!(lex_plateau_betti(d, d as u64 + 3, 1).unwrap(), (4, 3));
            assert_eq!(lex_plateau_betti(d, d as u64 + 1, 2).unwrap(), (3, 4));
        }
        assert!(lex_plateau_betti(5, 0, 1).is_err());
        assert!(lex_plateau_betti(5, 1, 0).is_err());
        // i + j must leave room for h_{d-1} in degree d-1
        assert!(lex_plateau_betti(5, 9, 2).is_err());
    }

    #[test]
    fn render_contains_diagram_rows() {
        let ideal = lex_segment_ideal(&seq(&[1, 3, 6, 10, 8, 7]), 3).unwrap();
        let rendered = ek_betti(&ideal).unwrap().render();
        assert!(rendered.contains("3: 7 9 3"));
        assert!(rendered.contains("4: 2 4 2"));
        assert!(rendered.starts_with("total:"));
    }

    #[test]
    fn render_of_top_plateau_sequence() {
        // h_7 = h_8 = 17 = 2*7+3 after a drop of one: the row at the
        // plateau degree reads (2, 4, 2)
        let ideal = lex_segment_ideal(&seq(&[1, 3, 6, 10, 15, 21, 18, 17, 17]), 3).unwrap();
        let diagram = ek_betti(&ideal).unwrap();
        assert_eq!(diagram.row(7), vec![2, 4, 2]);
        assert!(diagram.render().contains("7: 2 4 2"));
    }

    #[test]
    fn render_empty_diagram_is_header_only() {
        let diagram = BettiDiagram::new(3, 0);
        let rendered = diagram.render();
        assert_eq!(rendered.lines().count(), 2);
        assert!(rendered.starts_with("total: - - -"));
    }

    #[test]
    fn missing_entries_are_flagged() {
        let ideal = lex_segment_ideal(&seq(&[1, 3, 3, 1]), 3).unwrap();
        let diagram = ek_betti(&ideal).unwrap();
        assert!(matches!(diagram.get(2, 40), Err(BettiError::MissingEntry { .. })));
        assert!(matches!(diagram.get(3, 4), Err(BettiError::ColumnOutOfRange { .. })));
    }
}
