//! Exact rational linear algebra over graded pieces of polynomial
//! quotients: Hilbert functions of explicit ideals, degreewise initial
//! ideals, sampled generic initial ideals, socle and colon dimensions,
//! reduction numbers, and Koszul-homology Betti numbers.
//!
//! This module is the brute-force verifier for the closed formulas in
//! [`crate::betti`] and [`crate::level`]. Everything is computed from
//! row-reduced coefficient matrices of the graded pieces `I_t`, using
//! fraction-free elimination over the integers.
//!
//! Genericity of sampled objects (generic initial ideals, general linear
//! forms) is certified operationally: every randomized routine draws twice
//! from independently derived seeds and insists the results agree,
//! resampling a bounded number of times before reporting low genericity.
//! Runs are deterministic for a fixed seed.

mod matrix;
mod poly;

pub use poly::{poly_from_int_terms, Polynomial};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::betti::{ek_betti, BettiDiagram};
use crate::lexideal::{lex_segment_ideal, LexIdealError, StableIdeal};
use crate::monomial::{all_monomials, cmp_degrevlex, cmp_lex, Monomial, MonomialOrder, MonomialSet, MAX_VARS};
use crate::osequence::OSequence;

/// Errors from oracle computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// A generator is not homogeneous.
    NonHomogeneousGenerator { index: usize },
    /// A generator is a nonzero constant.
    ConstantGenerator { index: usize },
    /// Variable count outside `1..=MAX_VARS`.
    UnsupportedVars { vars: usize },
    /// The quotient does not vanish by the degree cap.
    NotArtinianByTmax { tmax: usize },
    /// Independently seeded runs kept disagreeing.
    LowGenericity { attempts: usize },
    /// The linear form cannot eliminate the last variable.
    DegenerateLinearForm,
    /// Sampled initial slices failed a structural check.
    MalformedSlices(LexIdealError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NonHomogeneousGenerator { index } => {
                write!(f, "generator {index} is not homogeneous")
            }
            OracleError::ConstantGenerator { index } => {
                write!(f, "generator {index} is a nonzero constant")
            }
            OracleError::UnsupportedVars { vars } => {
                write!(f, "{vars} variables unsupported (1..={MAX_VARS})")
            }
            OracleError::NotArtinianByTmax { tmax } => {
                write!(f, "quotient does not vanish by degree {tmax}")
            }
            OracleError::LowGenericity { attempts } => {
                write!(f, "independently seeded runs disagreed {attempts} times; low genericity")
            }
            OracleError::DegenerateLinearForm => {
                write!(f, "linear form has no component in the last variable")
            }
            OracleError::MalformedSlices(e) => write!(f, "sampled slices malformed: {e}"),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<LexIdealError> for OracleError {
    fn from(e: LexIdealError) -> Self {
        OracleError::MalformedSlices(e)
    }
}

/// Splitmix-style seed derivation, so that one user seed fans out into
/// independent stream seeds deterministically.
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub(crate) fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Degree slice of the ambient ring in descending degrevlex order.
fn degrevlex_descending(n: usize, t: u32) -> Vec<Monomial> {
    let mut monomials = all_monomials(n, t);
    monomials.sort_by(|a, b| cmp_degrevlex(b, a));
    monomials
}

type MultMatrix = Rc<Vec<Vec<BigRational>>>;

/// Row-reduced data for one graded piece `I_t`.
#[derive(Debug)]
struct DegreeData {
    /// Column monomials, in descending degrevlex order.
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    echelon: matrix::Echelon,
    /// Non-pivot columns: the standard-monomial basis of `(R/I)_t`.
    standard: Vec<usize>,
}

/// A homogeneous ideal with cached row-reduced graded pieces.
///
/// The lazy caches are single-threaded (`RefCell`); distinct ideals can be
/// used concurrently, one worker per ideal.
#[derive(Debug)]
pub struct GradedIdeal {
    n: usize,
    gens: Vec<Polynomial>,
    int_gens: Vec<(u32, BTreeMap<Monomial, BigInt>)>,
    cache: RefCell<BTreeMap<usize, Rc<DegreeData>>>,
    mult_cache: RefCell<BTreeMap<(usize, usize), MultMatrix>>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        GradedIdeal {
            n: self.n,
            gens: self.gens.clone(),
            int_gens: self.int_gens.clone(),
            cache: RefCell::new(self.cache.borrow().clone()),
            mult_cache: RefCell::new(self.mult_cache.borrow().clone()),
        }
    }
}

impl GradedIdeal {
    /// Builds an ideal from homogeneous generators of positive degree;
    /// zero generators are dropped.
    pub fn new(n: usize, gens: Vec<Polynomial>) -> Result<Self, OracleError> {
        if !(1..=MAX_VARS).contains(&n) {
            return Err(OracleError::UnsupportedVars { vars: n });
        }
        let mut kept = Vec::new();
        for (index, g) in gens.into_iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            match g.homogeneous_degree() {
                None => return Err(OracleError::NonHomogeneousGenerator { index }),
                Some(0) => return Err(OracleError::ConstantGenerator { index }),
                Some(_) => kept.push(g),
            }
        }
        let int_gens = kept
            .iter()
            .map(|g| {
                (
                    g.homogeneous_degree().expect("checked homogeneous"),
                    g.primitive_integer_terms(),
                )
            })
            .collect();
        Ok(GradedIdeal {
            n,
            gens: kept,
            int_gens,
            cache: RefCell::new(BTreeMap::new()),
            mult_cache: RefCell::new(BTreeMap::new()),
        })
    }

    /// An ideal generated by monomials.
    pub fn from_monomials<I>(n: usize, monomials: I) -> Result<Self, OracleError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens = monomials
            .into_iter()
            .map(|m| Polynomial::from_terms(n, [(m, BigRational::one())]))
            .collect();
        Self::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    fn degree_data(&self, t: usize) -> Rc<DegreeData> {
        if let Some(data) = self.cache.borrow().get(&t) {
            return Rc::clone(data);
        }
        let monomials = degrevlex_descending(self.n, t as u32);
        let index: BTreeMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let rows = self.slice_rows(t, &index, monomials.len());
        let echelon = matrix::echelon(rows, monomials.len());
        let standard = echelon.free_columns();
        let data = Rc::new(DegreeData { monomials, index, echelon, standard });
        self.cache.borrow_mut().insert(t, Rc::clone(&data));
        data
    }

    /// Coefficient rows spanning `I_t` over the given column order.
    fn slice_rows(
        &self,
        t: usize,
        index: &BTreeMap<Monomial, usize>,
        cols: usize,
    ) -> Vec<Vec<BigInt>> {
        let mut rows = Vec::new();
        for (gd, terms) in &self.int_gens {
            if *gd as usize > t || terms.is_empty() {
                continue;
            }
            for cofactor in all_monomials(self.n, t as u32 - gd) {
                let mut row = vec![BigInt::zero(); cols];
                for (m, c) in terms {
                    row[index[&m.mul(&cofactor)]] += c;
                }
                rows.push(row);
            }
        }
        rows
    }

    /// `dim_k I_t`.
    pub fn ideal_dim(&self, t: usize) -> usize {
        self.degree_data(t).echelon.rank()
    }

    /// `dim_k (R/I)_t`.
    pub fn quotient_dim(&self, t: usize) -> usize {
        self.degree_data(t).standard.len()
    }

    /// The reduced row-echelon basis of `I_t` over the descending degrevlex
    /// monomial basis of `R_t`.
    pub fn degree_basis(&self, t: usize) -> Vec<Vec<BigRational>> {
        self.degree_data(t).echelon.reduced_rows()
    }

    /// Column monomials used by [`GradedIdeal::degree_basis`].
    pub fn basis_monomials(&self, t: usize) -> Vec<Monomial> {
        self.degree_data(t).monomials.clone()
    }

    /// Hilbert function of the quotient on an inclusive degree range.
    pub fn hilbert_quotient(&self, from: usize, to: usize) -> Vec<u64> {
        (from..=to).map(|t| self.quotient_dim(t) as u64).collect()
    }

    /// Socle degree of the quotient: largest `t` with `(R/I)_t != 0`.
    /// Errors when the quotient has not vanished by `tmax`.
    pub fn socle_degree(&self, tmax: usize) -> Result<usize, OracleError> {
        for t in 0..=tmax {
            if self.quotient_dim(t) == 0 {
                debug_assert!(t > 0, "proper ideals have h_0 = 1");
                return Ok(t - 1);
            }
        }
        Err(OracleError::NotArtinianByTmax { tmax })
    }

    /// The quotient Hilbert function as an O-sequence.
    pub fn hilbert_osequence(&self, tmax: usize) -> Result<OSequence, OracleError> {
        let s = self.socle_degree(tmax)?;
        let entries = (0..=s).map(|t| BigUint::from(self.quotient_dim(t) as u64)).collect();
        Ok(OSequence::from_entries(entries).expect("h_0 = 1 and no internal zeros"))
    }

    /// Coordinates of a monomial's class in the standard basis of the
    /// quotient piece of its degree.
    fn normal_form_coords(&self, u: &Monomial) -> Vec<BigRational> {
        let data = self.degree_data(u.degree() as usize);
        let mut v = vec![BigRational::zero(); data.monomials.len()];
        v[data.index[u]] = BigRational::one();
        let reduced = data.echelon.reduce(v);
        data.standard.iter().map(|&c| reduced[c].clone()).collect()
    }

    /// Matrix of multiplication by `x_var` from `(R/I)_t` to `(R/I)_{t+1}`,
    /// one row per standard monomial of degree `t`.
    fn mult_matrix(&self, var: usize, t: usize) -> MultMatrix {
        if let Some(m) = self.mult_cache.borrow().get(&(var, t)) {
            return Rc::clone(m);
        }
        let data = self.degree_data(t);
        let rows: Vec<Vec<BigRational>> = data
            .standard
            .iter()
            .map(|&c| self.normal_form_coords(&data.monomials[c].times_var(var)))
            .collect();
        let rows = Rc::new(rows);
        self.mult_cache.borrow_mut().insert((var, t), Rc::clone(&rows));
        rows
    }

    /// Matrix of multiplication by a linear form on `(R/I)_t`.
    fn linear_mult_matrix(&self, coeffs: &[BigRational], t: usize) -> Vec<Vec<BigRational>> {
        let domain = self.quotient_dim(t);
        let codomain = self.quotient_dim(t + 1);
        let mut rows = vec![vec![BigRational::zero(); codomain]; domain];
        for (var0, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = self.mult_matrix(var0 + 1, t);
            for (row, mrow) in rows.iter_mut().zip(m.iter()) {
                for (entry, v) in row.iter_mut().zip(mrow.iter()) {
                    if !v.is_zero() {
                        *entry += c * v;
                    }
                }
            }
        }
        rows
    }

    /// Leading monomials of `I_t` with respect to the order.
    pub fn initial_slice(&self, t: usize, order: MonomialOrder) -> MonomialSet {
        match order {
            MonomialOrder::DegRevLex => {
                let data = self.degree_data(t);
                let members: Vec<Monomial> = data
                    .echelon
                    .pivots
                    .iter()
                    .map(|&c| data.monomials[c].clone())
                    .collect();
                MonomialSet::new(self.n, t as u32, members).expect("pivot monomials share degree")
            }
            MonomialOrder::Lex => {
                let monomials = {
                    let mut m = all_monomials(self.n, t as u32);
                    m.sort_by(|a, b| cmp_lex(b, a));
                    m
                };
                let index: BTreeMap<Monomial, usize> = monomials
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (m.clone(), i))
                    .collect();
                let rows = self.slice_rows(t, &index, monomials.len());
                let ech = matrix::echelon(rows, monomials.len());
                let members: Vec<Monomial> =
                    ech.pivots.iter().map(|&c| monomials[c].clone()).collect();
                MonomialSet::new(self.n, t as u32, members).expect("pivot monomials share degree")
            }
        }
    }

    /// Degreewise initial ideal through one past the socle degree.
    /// The slices need not form a stable ideal for a non-generic order or
    /// coordinate frame.
    pub fn initial_ideal_degreewise(
        &self,
        order: MonomialOrder,
        tmax: usize,
    ) -> Result<MonomialSlices, OracleError> {
        let s = self.socle_degree(tmax)?;
        let slices = (0..=s + 1).map(|t| self.initial_slice(t, order)).collect();
        Ok(MonomialSlices { n: self.n, slices })
    }

    /// The ideal after the substitution `x_i -> Σ_j matrix[i][j] x_j`.
    pub fn apply_change(&self, change: &LinearChange) -> GradedIdeal {
        let matrix: Vec<Vec<BigRational>> = change
            .matrix
            .iter()
            .map(|row| row.iter().map(|e| BigRational::from(e.clone())).collect())
            .collect();
        let gens = self.gens.iter().map(|g| g.substitute_linear(&matrix)).collect();
        GradedIdeal::new(self.n, gens).expect("linear change preserves homogeneity")
    }
}

/// Degreewise monomial slices, as produced by initial-ideal computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSlices {
    pub n: usize,
    pub slices: Vec<MonomialSet>,
}

impl MonomialSlices {
    pub fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    /// Validates strong stability and nesting, yielding a [`StableIdeal`].
    pub fn try_into_stable(self) -> Result<StableIdeal, OracleError> {
        StableIdeal::from_slices(self.n, self.slices).map_err(OracleError::MalformedSlices)
    }

    /// Sets `x_n = 0`: keeps the monomials free of the last variable,
    /// reinterpreted in `n - 1` variables.
    pub fn quotient_by_last_var(&self) -> MonomialSlices {
        let m = self.n - 1;
        let slices = self
            .slices
            .iter()
            .map(|s| {
                let members: Vec<Monomial> = s
                    .iter()
                    .filter(|mono| !mono.divisible_by_var(self.n))
                    .map(|mono| {
                        Monomial::from_exponents(&mono.exponents()[..m])
                            .expect("fewer variables")
                    })
                    .collect();
                MonomialSet::new(m, s.degree(), members).expect("degrees preserved")
            })
            .collect();
        MonomialSlices { n: m, slices }
    }
}

/// An invertible change of coordinates with the seed that drew it.
#[derive(Clone, Debug)]
pub struct LinearChange {
    pub matrix: Vec<Vec<BigInt>>,
    pub seed: u64,
}

impl LinearChange {
    /// Draws entries uniformly from `[-1000, 1000]`, redrawing until the
    /// matrix is invertible.
    pub fn random(n: usize, seed: u64) -> LinearChange {
        let mut rng = rng_from(seed);
        loop {
            let matrix: Vec<Vec<BigInt>> = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-1000i64..=1000))).collect())
                .collect();
            if matrix::echelon(matrix.clone(), n).rank() == n {
                return LinearChange { matrix, seed };
            }
        }
    }
}

/// Coefficients of a random linear form, entries in `[-1000, 1000]`, not
/// all zero; `require_last` forces a unit in the last variable so the form
/// can eliminate it.
pub fn random_linear_form(n: usize, seed: u64, require_last: bool) -> Polynomial {
    let mut rng = rng_from(seed);
    loop {
        let coeffs: Vec<BigInt> = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-1000i64..=1000)))
            .collect();
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        if require_last && coeffs[n - 1].is_zero() {
            continue;
        }
        return Polynomial::linear_form(n, &coeffs);
    }
}

const GENERICITY_RETRIES: usize = 3;

/// Samples the generic initial ideal with respect to degrevlex: applies a
/// seeded random coordinate change and takes the degreewise initial ideal.
/// Two independently derived draws must produce identical slices.
pub fn gin_sample(
    ideal: &GradedIdeal,
    seed: u64,
    tmax: usize,
) -> Result<MonomialSlices, OracleError> {
    for attempt in 0..GENERICITY_RETRIES as u64 {
        let a = transformed_initial(ideal, derive_seed(seed, 2 * attempt), tmax)?;
        let b = transformed_initial(ideal, derive_seed(seed, 2 * attempt + 1), tmax)?;
        if a == b {
            return Ok(a);
        }
    }
    Err(OracleError::LowGenericity { attempts: GENERICITY_RETRIES })
}

fn transformed_initial(
    ideal: &GradedIdeal,
    sub_seed: u64,
    tmax: usize,
) -> Result<MonomialSlices, OracleError> {
    let change = LinearChange::random(ideal.n(), sub_seed);
    ideal
        .apply_change(&change)
        .initial_ideal_degreewise(MonomialOrder::DegRevLex, tmax)
}

/// Socle dimensions `dim soc(R/I)_t = dim ∩_k ker(x_k : A_t -> A_{t+1})`
/// for `t = 0..=to`.
pub fn socle_dims(ideal: &GradedIdeal, to: usize) -> Vec<usize> {
    let n = ideal.n();
    (0..=to)
        .map(|t| {
            let domain = ideal.quotient_dim(t);
            if domain == 0 {
                return 0;
            }
            let codomain = ideal.quotient_dim(t + 1);
            let cols = n * codomain;
            if cols == 0 {
                return domain;
            }
            let mats: Vec<MultMatrix> =
                (1..=n).map(|var| ideal.mult_matrix(var, t)).collect();
            let rows: Vec<Vec<BigRational>> = (0..domain)
                .map(|b| {
                    let mut row = Vec::with_capacity(cols);
                    for m in &mats {
                        row.extend(m[b].iter().cloned());
                    }
                    row
                })
                .collect();
            domain - matrix::rank_rational(rows, cols)
        })
        .collect()
}

/// `dim (0 : L)_t = dim ker(L : A_t -> A_{t+1})` for `t = 0..=to`.
pub fn colon_dims(ideal: &GradedIdeal, l: &Polynomial, to: usize) -> Vec<usize> {
    let coeffs = linear_coefficients(ideal.n(), l);
    (0..=to)
        .map(|t| {
            let domain = ideal.quotient_dim(t);
            if domain == 0 {
                return 0;
            }
            let codomain = ideal.quotient_dim(t + 1);
            if codomain == 0 {
                return domain;
            }
            let rows = ideal.linear_mult_matrix(&coeffs, t);
            domain - matrix::rank_rational(rows, codomain)
        })
        .collect()
}

fn linear_coefficients(n: usize, l: &Polynomial) -> Vec<BigRational> {
    debug_assert_eq!(l.homogeneous_degree(), Some(1));
    let mut coeffs = vec![BigRational::zero(); n];
    for (m, c) in l.terms() {
        let var = m.max_index().expect("linear form");
        coeffs[var - 1] = c.clone();
    }
    coeffs
}

/// The reduction number `r_1`: the least `ℓ` such that the Hilbert function
/// of `R/(I + (L))` vanishes in degree `ℓ + 1`, for a general linear form
/// `L`. Two independently drawn forms must agree.
pub fn r1_general(ideal: &GradedIdeal, seed: u64, tmax: usize) -> Result<usize, OracleError> {
    for attempt in 0..GENERICITY_RETRIES as u64 {
        let a = r1_with_form(ideal, derive_seed(seed, 0x100 + 2 * attempt), tmax)?;
        let b = r1_with_form(ideal, derive_seed(seed, 0x101 + 2 * attempt), tmax)?;
        if a == b {
            return Ok(a);
        }
    }
    Err(OracleError::LowGenericity { attempts: GENERICITY_RETRIES })
}

fn r1_with_form(ideal: &GradedIdeal, sub_seed: u64, tmax: usize) -> Result<usize, OracleError> {
    let l = random_linear_form(ideal.n(), sub_seed, false);
    let mut gens = ideal.generators().to_vec();
    gens.push(l);
    let extended = GradedIdeal::new(ideal.n(), gens)?;
    extended.socle_degree(tmax)
}

/// The image of the ideal in `k[x_1..x_{n-1}] = R/(L)`, eliminating the
/// last variable through the linear form.
pub fn quotient_by_linear_form(
    ideal: &GradedIdeal,
    l: &Polynomial,
) -> Result<GradedIdeal, OracleError> {
    let n = ideal.n();
    let coeffs = linear_coefficients(n, l);
    if coeffs[n - 1].is_zero() {
        return Err(OracleError::DegenerateLinearForm);
    }
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .filter_map(|g| g.eliminate_last_var(&coeffs))
        .collect();
    GradedIdeal::new(n - 1, gens)
}

/// Sorted subsets of `0..n` grouped by size.
fn subsets_by_size(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
        by_size[subset.len()].push(subset);
    }
    by_size
}

/// Graded Betti numbers of the ideal via Koszul homology of the quotient:
/// `β_{q,j}(I) = dim H_{q+1}(K_•(x_1..x_n) ⊗ R/I)_j`, computed by exact
/// rank computations on the graded pieces. Requires the quotient to be
/// Artinian by `tmax`.
pub fn koszul_betti(ideal: &GradedIdeal, tmax: usize) -> Result<BettiDiagram, OracleError> {
    let n = ideal.n();
    let s = ideal.socle_degree(tmax)?;
    let subsets = subsets_by_size(n);
    let mut ranks: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in 1..=n {
        for j in p..=s + p {
            ranks.insert((p, j), koszul_rank(ideal, &subsets, p, j));
        }
    }
    let mut diagram = BettiDiagram::new(n, s as u32 + 1);
    for q in 0..n {
        let p = q + 1;
        for j in p..=s + p {
            let dim = subsets[p].len() * ideal.quotient_dim(j - p);
            let r_here = ranks.get(&(p, j)).copied().unwrap_or(0);
            let r_above = ranks.get(&(p + 1, j)).copied().unwrap_or(0);
            let homology = dim - r_here - r_above;
            diagram.add(q, j as u32, homology as u64);
        }
    }
    Ok(diagram)
}

/// Rank of the Koszul differential `(K_p ⊗ A)_j -> (K_{p-1} ⊗ A)_j`.
fn koszul_rank(
    ideal: &GradedIdeal,
    subsets: &[Vec<Vec<usize>>],
    p: usize,
    j: usize,
) -> usize {
    if j < p {
        return 0;
    }
    let domain_block = ideal.quotient_dim(j - p);
    if domain_block == 0 {
        return 0;
    }
    let codomain_block = ideal.quotient_dim(j - p + 1);
    let cols = subsets[p - 1].len() * codomain_block;
    if cols == 0 {
        return 0;
    }
    let positions: BTreeMap<&[usize], usize> = subsets[p - 1]
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut rows = Vec::with_capacity(subsets[p].len() * domain_block);
    for subset in &subsets[p] {
        let mults: Vec<MultMatrix> = subset
            .iter()
            .map(|&var0| ideal.mult_matrix(var0 + 1, j - p))
            .collect();
        for b in 0..domain_block {
            let mut row = vec![BigRational::zero(); cols];
            for (t_idx, &_var0) in subset.iter().enumerate() {
                let mut remaining: Vec<usize> = subset.clone();
                remaining.remove(t_idx);
                let block = positions[remaining.as_slice()];
                let image = &mults[t_idx][b];
                let positive = t_idx % 2 == 0;
                for (k, value) in image.iter().enumerate() {
                    if value.is_zero() {
                        continue;
                    }
                    let idx = block * codomain_block + k;
                    if positive {
                        row[idx] += value;
                    } else {
                        row[idx] -= value;
                    }
                }
            }
            rows.push(row);
        }
    }
    matrix::rank_rational(rows, cols)
}

/// Outcome of the cancellation cross-check: the three Betti diagrams and
/// whether the entrywise chain and (in three variables) the alternating
/// identity hold.
#[derive(Clone, Debug)]
pub struct CancellationReport {
    pub betti_ideal: BettiDiagram,
    pub betti_gin: BettiDiagram,
    pub betti_lex: BettiDiagram,
    pub chain_holds: bool,
    /// `Some` only in three variables.
    pub alternating_identity_holds: Option<bool>,
    pub failures: Vec<String>,
}

impl CancellationReport {
    pub fn ok(&self) -> bool {
        self.chain_holds && self.alternating_identity_holds.unwrap_or(true)
    }
}

/// Computes Betti diagrams of the ideal (Koszul homology), of a sampled
/// generic initial ideal (Koszul homology of its generators), and of the
/// lex ideal of the common Hilbert function (Eliahou-Kervaire), then checks
/// the entrywise chain `β(I) <= β(Gin) <= β(lex)` and, in three variables,
/// the alternating identity per internal degree.
pub fn verify_cancellation(
    ideal: &GradedIdeal,
    seed: u64,
    tmax: usize,
) -> Result<CancellationReport, OracleError> {
    let n = ideal.n();
    let s = ideal.socle_degree(tmax)?;
    let betti_ideal = koszul_betti(ideal, tmax)?;

    let gin = gin_sample(ideal, seed, tmax)?.try_into_stable()?;
    let mut gin_gens: Vec<Monomial> = Vec::new();
    for d in 1..=gin.max_degree() {
        gin_gens.extend(gin.minimal_generators(d).expect("materialized").iter().cloned());
    }
    let gin_ideal = GradedIdeal::from_monomials(n, gin_gens)?;
    let betti_gin = koszul_betti(&gin_ideal, tmax)?;

    let h = ideal.hilbert_osequence(tmax)?;
    let lex = lex_segment_ideal(&h, n).expect("true Hilbert functions are O-sequences");
    let betti_lex = ek_betti(&lex).expect("lex slices are strongly stable");

    let mut failures = Vec::new();
    let mut chain_holds = true;
    for q in 0..n {
        for j in q as u32..=(s + 1 + q) as u32 {
            let bi = betti_ideal.get(q, j).unwrap_or(0);
            let bg = betti_gin.get(q, j).unwrap_or(0);
            let bl = betti_lex.get(q, j).unwrap_or(0);
            if !(bi <= bg && bg <= bl) {
                chain_holds = false;
                failures.push(format!(
                    "chain fails at (q={q}, j={j}): ideal {bi}, gin {bg}, lex {bl}"
                ));
            }
        }
    }

    let alternating_identity_holds = (n == 3).then(|| {
        let mut ok = true;
        for j in 1..=(s + n) as u32 {
            for (label, other) in [("lex", &betti_lex), ("gin", &betti_gin)] {
                let d0 = other.get(0, j).unwrap_or(0) as i64
                    - betti_ideal.get(0, j).unwrap_or(0) as i64;
                let d1 = other.get(1, j).unwrap_or(0) as i64
                    - betti_ideal.get(1, j).unwrap_or(0) as i64;
                let d2 = other.get(2, j).unwrap_or(0) as i64
                    - betti_ideal.get(2, j).unwrap_or(0) as i64;
                if d1 != d0 + d2 {
                    ok = false;
                    failures.push(format!(
                        "alternating identity fails vs {label} at j={j}: {d1} != {d0} + {d2}"
                    ));
                }
            }
        }
        ok
    });

    Ok(CancellationReport {
        betti_ideal,
        betti_gin,
        betti_lex,
        chain_holds,
        alternating_identity_holds,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::is_strongly_stable;

    fn squares_ideal() -> GradedIdeal {
        GradedIdeal::new(
            3,
            vec![
                poly_from_int_terms(3, &[(1, &[2, 0, 0])]),
                poly_from_int_terms(3, &[(1, &[0, 2, 0])]),
                poly_from_int_terms(3, &[(1, &[0, 0, 2])]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn hilbert_of_complete_intersection() {
        let ideal = squares_ideal();
        assert_eq!(ideal.hilbert_quotient(0, 4), vec![1, 3, 3, 1, 0]);
        assert_eq!(ideal.socle_degree(10).unwrap(), 3);
    }

    #[test]
    fn hilbert_of_zero_ideal_counts_monomials() {
        let ideal = GradedIdeal::new(3, vec![]).unwrap();
        assert_eq!(ideal.hilbert_quotient(0, 3), vec![1, 3, 6, 10]);
        assert!(matches!(
            ideal.socle_degree(5),
            Err(OracleError::NotArtinianByTmax { tmax: 5 })
        ));
    }

    #[test]
    fn nonhomogeneous_generators_are_rejected() {
        let g = poly_from_int_terms(2, &[(1, &[1, 0]), (1, &[2, 0])]);
        assert!(matches!(
            GradedIdeal::new(2, vec![g]),
            Err(OracleError::NonHomogeneousGenerator { index: 0 })
        ));
    }

    #[test]
    fn initial_ideal_of_monomial_ideal_is_itself() {
        let ideal = squares_ideal();
        let slices = ideal
            .initial_ideal_degreewise(MonomialOrder::DegRevLex, 10)
            .unwrap();
        for (t, slice) in slices.slices.iter().enumerate() {
            assert_eq!(slice.len(), ideal.ideal_dim(t));
            for m in slice.iter() {
                // every leading monomial is divisible by some x_i^2
                assert!((1..=3).any(|v| m.exponent(v) >= 2));
            }
        }
    }

    #[test]
    fn initial_slice_of_linear_form() {
        // in(x1 + x2) in two variables: leading monomial x1
        let ideal = GradedIdeal::new(
            2,
            vec![poly_from_int_terms(2, &[(1, &[1, 0]), (1, &[0, 1])])],
        )
        .unwrap();
        let slice = ideal.initial_slice(1, MonomialOrder::DegRevLex);
        assert_eq!(slice.len(), 1);
        assert_eq!(slice.members()[0].exponents(), &[1, 0]);
    }

    #[test]
    fn initial_ideal_preserves_hilbert_function() {
        let ideal = GradedIdeal::new(
            3,
            vec![
                poly_from_int_terms(3, &[(1, &[2, 0, 0]), (3, &[0, 1, 1]), (-2, &[0, 0, 2])]),
                poly_from_int_terms(3, &[(2, &[0, 2, 0]), (1, &[1, 0, 1])]),
                poly_from_int_terms(3, &[(1, &[0, 0, 3]), (5, &[1, 1, 1]), (1, &[3, 0, 0])]),
            ],
        )
        .unwrap();
        let s = ideal.socle_degree(15).unwrap();
        let slices = ideal
            .initial_ideal_degreewise(MonomialOrder::DegRevLex, 15)
            .unwrap();
        for t in 0..=s + 1 {
            let count = crate::monomial::monomial_count(3, t as u32);
            assert_eq!(count - slices.slices[t].len(), ideal.quotient_dim(t));
        }
    }

    #[test]
    fn koszul_of_maximal_ideal() {
        let ideal = GradedIdeal::from_monomials(
            3,
            (1..=3).map(|v| Monomial::variable(3, v)),
        )
        .unwrap();
        let diagram = koszul_betti(&ideal, 5).unwrap();
        assert_eq!(diagram.get(0, 1).unwrap(), 3);
        assert_eq!(diagram.get(1, 2).unwrap(), 3);
        assert_eq!(diagram.get(2, 3).unwrap(), 1);
    }

    #[test]
    fn koszul_of_square_complete_intersection() {
        let diagram = koszul_betti(&squares_ideal(), 10).unwrap();
        assert_eq!(diagram.get(0, 2).unwrap(), 3);
        assert_eq!(diagram.get(1, 4).unwrap(), 3);
        assert_eq!(diagram.get(2, 6).unwrap(), 1);
        // nothing off the Koszul shifts
        assert_eq!(diagram.get(1, 3).unwrap(), 0);
        assert_eq!(diagram.get(2, 5).unwrap(), 0);
    }

    #[test]
    fn socle_of_square_complete_intersection() {
        let dims = socle_dims(&squares_ideal(), 3);
        assert_eq!(dims, vec![0, 0, 0, 1]);
    }

    #[test]
    fn gin_of_borel_fixed_ideal_is_itself() {
        // lex ideal of (1,3,3,1) is Borel fixed; its gin is itself
        let h = OSequence::from_u64(&[1, 3, 3, 1]).unwrap();
        let lex = lex_segment_ideal(&h, 3).unwrap();
        let mut gens: Vec<Monomial> = Vec::new();
        for d in 1..=lex.max_degree() {
            gens.extend(lex.minimal_generators(d).unwrap().iter().cloned());
        }
        let ideal = GradedIdeal::from_monomials(3, gens).unwrap();
        let gin = gin_sample(&ideal, 7, 10).unwrap();
        for (t, slice) in gin.slices.iter().enumerate() {
            assert_eq!(slice, lex.slice(t).unwrap());
        }
    }

    #[test]
    fn gin_slices_are_strongly_stable() {
        let ideal = GradedIdeal::new(
            3,
            vec![
                poly_from_int_terms(3, &[(1, &[2, 0, 0]), (1, &[0, 1, 1])]),
                poly_from_int_terms(3, &[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]),
                poly_from_int_terms(3, &[(1, &[0, 0, 3])]),
            ],
        )
        .unwrap();
        let gin = gin_sample(&ideal, 42, 15).unwrap();
        for slice in &gin.slices {
            assert!(is_strongly_stable(slice));
        }
        gin.try_into_stable().unwrap();
    }

    #[test]
    fn gin_determinism() {
        let ideal = squares_ideal();
        let a = gin_sample(&ideal, 5, 10).unwrap();
        let b = gin_sample(&ideal, 5, 10).unwrap();
        assert_eq!(a, b);
        let c = gin_sample(&ideal, 6, 10).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn r1_of_square_complete_intersection() {
        // modulo a general linear form: k[x,y]/(three general quadrics in
        // the image) vanishes in degree 2, so r_1 = 1... computed exactly:
        let r1 = r1_general(&squares_ideal(), 11, 10).unwrap();
        // cross-check: smallest ℓ with x_2^{ℓ+1} in the gin
        let gin = gin_sample(&squares_ideal(), 11, 10).unwrap();
        let from_gin = (0..=gin.max_degree() as u32)
            .find(|&t| {
                t >= 1
                    && gin.slices[t as usize]
                        .contains(&power_of(2, t, 3))
            })
            .map(|t| t as usize - 1)
            .unwrap();
        assert_eq!(r1, from_gin);
    }

    fn power_of(var: usize, e: u32, n: usize) -> Monomial {
        let mut exps = [0u32; 3];
        exps[var - 1] = e;
        Monomial::from_exponents(&exps[..n]).unwrap()
    }

    #[test]
    fn cancellation_chain_on_complete_intersection() {
        let report = verify_cancellation(&squares_ideal(), 3, 10).unwrap();
        assert!(report.ok(), "failures: {:?}", report.failures);
        // for a Borel-fixed-after-gin monomial CI the ideal diagram matches
        // its own Koszul numbers
        assert_eq!(report.betti_ideal.get(0, 2).unwrap(), 3);
    }

    #[test]
    fn hyperplane_quotient_shapes() {
        let l = random_linear_form(3, 99, true);
        let section = quotient_by_linear_form(&squares_ideal(), &l).unwrap();
        assert_eq!(section.n(), 2);
        // three general quadrics in two variables: (1, 2, 0, ...)
        assert_eq!(section.hilbert_quotient(0, 2), vec![1, 2, 0]);
    }
}
