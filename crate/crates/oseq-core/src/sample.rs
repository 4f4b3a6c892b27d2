//! Seeded random generators for test data: valid O-sequences, strongly
//! stable monomial ideals, and Artinian polynomial ideals.
//!
//! Everything here is deterministic for a fixed seed.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::lexideal::StableIdeal;
use crate::monomial::{degree_span, Monomial, MonomialSet};
use crate::oracle::{GradedIdeal, OracleError, Polynomial};
use crate::osequence::{upper_shift, OSequence};

pub use crate::oracle::derive_seed;

/// A deterministic RNG for the given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    crate::oracle::rng_from(seed)
}

/// A random valid O-sequence with the given codimension and socle degree at
/// most `max_socle`: each entry is drawn uniformly below the Macaulay bound
/// of its predecessor, stopping early when the draw hits zero.
pub fn random_valid_osequence(codim: u64, max_socle: usize, rng: &mut ChaCha8Rng) -> OSequence {
    let mut entries: Vec<u64> = alloc::vec![1];
    if max_socle == 0 || codim == 0 {
        return OSequence::from_u64(&entries).expect("valid");
    }
    entries.push(codim);
    for d in 1..max_socle {
        let bound = upper_shift(&BigUint::from(entries[d]), d as u32);
        let bound = u64::try_from(&bound).expect("desk-scale bounds fit u64");
        let next = rng.gen_range(0..=bound);
        if next == 0 {
            break;
        }
        entries.push(next);
    }
    OSequence::from_u64(&entries).expect("positive entries")
}

/// A random strongly stable monomial ideal in `n` variables, materialized
/// through `max_degree`: the Borel closure of a few random monomials,
/// propagated upward by degree spans.
pub fn random_stable_ideal(n: usize, max_degree: usize, rng: &mut ChaCha8Rng) -> StableIdeal {
    assert!(max_degree >= 2);
    let seeds = rng.gen_range(1..=3usize);
    let mut per_degree: Vec<BTreeSet<Monomial>> = alloc::vec![BTreeSet::new(); max_degree + 1];
    for _ in 0..seeds {
        let degree = rng.gen_range(2..=max_degree as u32);
        let m = random_monomial(n, degree, rng);
        for moved in borel_closure(m) {
            per_degree[degree as usize].insert(moved);
        }
    }
    let mut slices: Vec<MonomialSet> = Vec::with_capacity(max_degree + 1);
    slices.push(MonomialSet::empty(n, 0));
    for d in 1..=max_degree {
        let mut members: Vec<Monomial> = per_degree[d].iter().cloned().collect();
        members.extend(degree_span(slices[d - 1].members(), d as u32, n).iter().cloned());
        slices.push(MonomialSet::new(n, d as u32, members).expect("degree preserved"));
    }
    StableIdeal::from_slices(n, slices).expect("Borel closures and spans are stable")
}

/// A uniform random exponent composition of the given degree.
fn random_monomial(n: usize, degree: u32, rng: &mut ChaCha8Rng) -> Monomial {
    let mut exps = alloc::vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(&exps).expect("n checked by caller")
}

/// The closure of a monomial under all Borel exchanges.
fn borel_closure(seed: Monomial) -> Vec<Monomial> {
    let n = seed.num_vars();
    let mut closed: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier = alloc::vec![seed];
    while let Some(m) = frontier.pop() {
        if !closed.insert(m.clone()) {
            continue;
        }
        for j in 2..=n {
            if !m.divisible_by_var(j) {
                continue;
            }
            for i in 1..j {
                let moved = m.borel_move(i, j).expect("e_j > 0");
                if !closed.contains(&moved) {
                    frontier.push(moved);
                }
            }
        }
    }
    closed.into_iter().collect()
}

/// A random Artinian ideal in three variables with socle degree at most 6:
/// a dense regular sequence of small forms, occasionally with an extra
/// generator. Coefficients are drawn from `[-9, 9]`.
pub fn random_artinian_ideal(rng: &mut ChaCha8Rng) -> Result<GradedIdeal, OracleError> {
    const DEGREE_PATTERNS: [&[u32]; 5] = [
        &[2, 2, 3],
        &[2, 3, 3],
        &[3, 3, 3],
        &[2, 2, 2],
        &[2, 2, 3, 3],
    ];
    for _ in 0..32 {
        let pattern = DEGREE_PATTERNS[rng.gen_range(0..DEGREE_PATTERNS.len())];
        let gens: Vec<Polynomial> = pattern
            .iter()
            .map(|&d| random_dense_form(3, d, rng))
            .collect();
        let ideal = GradedIdeal::new(3, gens)?;
        if ideal.socle_degree(8).is_ok() {
            return Ok(ideal);
        }
    }
    Err(OracleError::LowGenericity { attempts: 32 })
}

/// A dense homogeneous form with coefficients in `[-9, 9]` (nonzero
/// leading behavior enforced by redraw on the zero polynomial).
pub fn random_dense_form(n: usize, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    loop {
        let poly = Polynomial::from_terms(
            n,
            crate::monomial::all_monomials(n, degree).into_iter().map(|m| {
                (m, BigRational::from(BigInt::from(rng.gen_range(-9i64..=9))))
            }),
        );
        if !poly.is_zero() {
            return poly;
        }
    }
}
