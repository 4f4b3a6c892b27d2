//! Monomials in up to [`MAX_VARS`] variables, the lex and degrevlex term
//! orders, Borel exchange moves, and stability predicates for graded
//! monomial sets.
//!
//! Order conventions, with `x1 > x2 > ... > xn`:
//!
//! * lex: the first differing exponent decides; a larger exponent on the
//!   earlier variable wins. Within a fixed degree this is the usual
//!   lexicographic order, e.g. for `n = 3`, `d = 2`:
//!   `x1^2 > x1*x2 > x1*x3 > x2^2 > x2*x3 > x3^2`.
//! * degrevlex: higher total degree wins; on equal degree, compare exponent
//!   vectors from the last variable backwards and the monomial with the
//!   *smaller* exponent at the first difference is the larger one. Worked
//!   degree-2 order for `n = 3`:
//!   `x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use arrayvec::ArrayVec;

use crate::osequence::binomial_u64;

/// Maximum number of variables supported by the dense exponent vectors.
pub const MAX_VARS: usize = 8;

/// Errors from monomial and monomial-set operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialError {
    /// More variables than [`MAX_VARS`].
    TooManyVariables { requested: usize },
    /// Operands live in polynomial rings with different variable counts.
    DimensionMismatch { left: usize, right: usize },
    /// The unit monomial has no maximal variable index.
    UnitMonomial,
    /// A set member has the wrong degree or variable count.
    InconsistentSet,
    /// Variable index outside `1..=n`.
    VariableOutOfRange { index: usize, vars: usize },
    /// Text that does not match the `x1^a*x2^b` grammar.
    Unparseable { input: String },
}

impl fmt::Display for MonomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialError::TooManyVariables { requested } => {
                write!(f, "{requested} variables requested, at most {MAX_VARS} supported")
            }
            MonomialError::DimensionMismatch { left, right } => {
                write!(f, "variable counts differ: {left} vs {right}")
            }
            MonomialError::UnitMonomial => write!(f, "the unit monomial has no variable support"),
            MonomialError::InconsistentSet => {
                write!(f, "set members must share a degree and variable count")
            }
            MonomialError::VariableOutOfRange { index, vars } => {
                write!(f, "variable x{index} out of range for {vars} variables")
            }
            MonomialError::Unparseable { input } => write!(f, "cannot parse monomial {input:?}"),
        }
    }
}

impl core::error::Error for MonomialError {}

/// A monomial as a dense exponent vector `(e_1, ..., e_n)`.
///
/// The derived `Ord` is the lex order for monomials with equal variable
/// counts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: ArrayVec<u32, MAX_VARS>,
}

impl Monomial {
    /// The unit monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_VARS);
        let mut exps = ArrayVec::new();
        for _ in 0..n {
            exps.push(0);
        }
        Monomial { exps }
    }

    /// The variable `x_index` (1-based) in `n` variables.
    pub fn variable(n: usize, index: usize) -> Self {
        let mut m = Self::one(n);
        assert!(index >= 1 && index <= n);
        m.exps[index - 1] = 1;
        m
    }

    /// Builds a monomial from an exponent slice.
    pub fn from_exponents(exps: &[u32]) -> Result<Self, MonomialError> {
        if exps.is_empty() || exps.len() > MAX_VARS {
            return Err(MonomialError::TooManyVariables { requested: exps.len() });
        }
        let mut v = ArrayVec::new();
        v.try_extend_from_slice(exps).expect("length checked");
        Ok(Monomial { exps: v })
    }

    /// Number of variables of the ambient ring.
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    /// The exponent vector.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// The exponent of `x_var` (1-based).
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `m(u)`: the largest index `j` with `e_j > 0` (1-based).
    pub fn max_index(&self) -> Result<usize, MonomialError> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|p| p + 1)
            .ok_or(MonomialError::UnitMonomial)
    }

    /// Multiplies by `x_var`.
    pub fn times_var(&self, var: usize) -> Self {
        let mut m = self.clone();
        m.exps[var - 1] += 1;
        m
    }

    /// Divides by `x_var` when possible.
    pub fn div_var(&self, var: usize) -> Option<Self> {
        if self.exps[var - 1] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[var - 1] -= 1;
        Some(m)
    }

    /// The Borel exchange `(x_i * u) / x_j` for `i < j`, defined when `e_j > 0`.
    pub fn borel_move(&self, i: usize, j: usize) -> Option<Self> {
        debug_assert!(i < j);
        self.div_var(j).map(|m| m.times_var(i))
    }

    /// True iff `x_var` divides the monomial.
    pub fn divisible_by_var(&self, var: usize) -> bool {
        self.exps[var - 1] > 0
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        let mut m = self.clone();
        for (e, o) in m.exps.iter_mut().zip(other.exps.iter()) {
            *e += o;
        }
        m
    }

    /// True iff `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Parses the `x1^a*x2^b` grammar (exponent 1 may be omitted; the unit
    /// monomial is `"1"`).
    pub fn parse(input: &str, n: usize) -> Result<Self, MonomialError> {
        let fail = || MonomialError::Unparseable { input: String::from(input) };
        let trimmed = input.trim();
        if trimmed == "1" {
            return Ok(Self::one(n));
        }
        let mut m = Self::one(n);
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let rest = factor.strip_prefix('x').ok_or_else(fail)?;
            let (var_txt, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| fail())?),
                None => (rest, 1),
            };
            let var: usize = var_txt.parse().map_err(|_| fail())?;
            if var < 1 || var > n {
                return Err(MonomialError::VariableOutOfRange { index: var, vars: n });
            }
            if exp == 0 {
                return Err(fail());
            }
            m.exps[var - 1] += exp;
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Unchecked lex comparison; operands must share a variable count.
pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.num_vars(), b.num_vars());
    a.exps.cmp(&b.exps)
}

/// Unchecked degrevlex comparison; operands must share a variable count.
pub fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.num_vars(), b.num_vars());
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (ea, eb) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            // Smaller trailing exponent means larger monomial.
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// `u < v` in lex order.
pub fn lex_less(u: &Monomial, v: &Monomial) -> Result<bool, MonomialError> {
    check_same_vars(u, v)?;
    Ok(cmp_lex(u, v) == Ordering::Less)
}

/// `u < v` in degrevlex order.
pub fn degrevlex_less(u: &Monomial, v: &Monomial) -> Result<bool, MonomialError> {
    check_same_vars(u, v)?;
    Ok(cmp_degrevlex(u, v) == Ordering::Less)
}

fn check_same_vars(u: &Monomial, v: &Monomial) -> Result<(), MonomialError> {
    if u.num_vars() != v.num_vars() {
        return Err(MonomialError::DimensionMismatch {
            left: u.num_vars(),
            right: v.num_vars(),
        });
    }
    Ok(())
}

/// A term order on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
}

impl MonomialOrder {
    /// Compares two monomials with the same variable count.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}

/// Number of degree-`d` monomials in `n` variables: `C(d + n - 1, n - 1)`.
pub fn monomial_count(n: usize, degree: u32) -> usize {
    usize::try_from(binomial_u64(degree as u64 + n as u64 - 1, n as u64 - 1))
        .expect("monomial count overflows usize")
}

/// All degree-`d` monomials in `n` variables, in descending lex order.
pub fn all_monomials(n: usize, degree: u32) -> Vec<Monomial> {
    assert!((1..=MAX_VARS).contains(&n));
    let mut out = Vec::with_capacity(monomial_count(n, degree));
    let mut exps = [0u32; MAX_VARS];
    fill(n, 0, degree, &mut exps, &mut out);
    out
}

fn fill(n: usize, pos: usize, remaining: u32, exps: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
    if pos == n - 1 {
        exps[pos] = remaining;
        out.push(Monomial::from_exponents(&exps[..n]).expect("within MAX_VARS"));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill(n, pos + 1, remaining - e, exps, out);
    }
}

/// A finite set of monomials of a common degree, stored in descending lex
/// order without duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    n: usize,
    degree: u32,
    members: Vec<Monomial>,
}

impl MonomialSet {
    /// The empty set in degree `degree`.
    pub fn empty(n: usize, degree: u32) -> Self {
        MonomialSet { n, degree, members: Vec::new() }
    }

    /// Builds a set, sorting and deduplicating the members.
    pub fn new(n: usize, degree: u32, mut members: Vec<Monomial>) -> Result<Self, MonomialError> {
        if members
            .iter()
            .any(|m| m.num_vars() != n || m.degree() != degree)
        {
            return Err(MonomialError::InconsistentSet);
        }
        members.sort_by(|a, b| cmp_lex(b, a));
        members.dedup();
        Ok(MonomialSet { n, degree, members })
    }

    /// All degree-`degree` monomials.
    pub fn full(n: usize, degree: u32) -> Self {
        MonomialSet { n, degree, members: all_monomials(n, degree) }
    }

    /// The top `k` monomials of the degree in lex order.
    pub fn lex_segment(n: usize, degree: u32, k: usize) -> Self {
        let mut members = all_monomials(n, degree);
        members.truncate(k);
        MonomialSet { n, degree, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in descending lex order.
    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Monomial> {
        self.members.iter()
    }

    /// The lex-smallest member.
    pub fn last(&self) -> Option<&Monomial> {
        self.members.last()
    }

    /// Membership test by binary search.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.members
            .binary_search_by(|probe| cmp_lex(probe, m).reverse())
            .is_ok()
    }
}

/// True iff the set is closed under all Borel exchanges
/// `u -> (x_i * u) / x_j` for `i < j` with `e_j(u) > 0`.
pub fn is_strongly_stable(set: &MonomialSet) -> bool {
    for u in set.iter() {
        for j in 2..=set.n() {
            if !u.divisible_by_var(j) {
                continue;
            }
            for i in 1..j {
                let moved = u.borel_move(i, j).expect("e_j > 0 checked");
                if !set.contains(&moved) {
                    return false;
                }
            }
        }
    }
    true
}

/// The degree-`t` slice of the ideal generated by `generators`: all
/// degree-`t` multiples of generators of degree at most `t`.
pub fn degree_span(generators: &[Monomial], t: u32, n: usize) -> MonomialSet {
    let mut members = Vec::new();
    for g in generators {
        debug_assert_eq!(g.num_vars(), n);
        let d = g.degree();
        if d > t {
            continue;
        }
        for cofactor in all_monomials(n, t - d) {
            members.push(g.mul(&cofactor));
        }
    }
    MonomialSet::new(n, t, members).expect("spans are homogeneous")
}
