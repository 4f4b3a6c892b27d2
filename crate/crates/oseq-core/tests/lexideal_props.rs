//! Property suites for lex-segment ideals and strongly stable ideals:
//! Hilbert round trips, the Green restriction equality, colon identities,
//! and the closed form for last monomials.

use num_bigint::BigUint;
use oseq_core::lexideal::{last_monomial_lex, lex_segment_ideal, StableIdeal};
use oseq_core::monomial::{is_strongly_stable, monomial_count};
use oseq_core::osequence::lower_shift;
use oseq_core::sample::{random_stable_ideal, random_valid_osequence, rng};

#[test]
fn lex_round_trip_on_random_sequences() {
    let mut r = rng(101);
    for _ in 0..200 {
        let h = random_valid_osequence(3, 8, &mut r);
        let ideal = lex_segment_ideal(&h, 3).unwrap();
        let hilbert = ideal.quotient_hilbert(0, ideal.max_degree()).unwrap();
        for (t, value) in hilbert.iter().enumerate() {
            assert_eq!(*value, h.entry(t), "degree {t} of {h}");
        }
        for d in 0..=ideal.max_degree() {
            assert!(is_strongly_stable(ideal.slice(d).unwrap()));
        }
    }
}

/// Quotient Hilbert value of a stable ideal in one degree.
fn quotient_value(ideal: &StableIdeal, t: usize) -> u64 {
    (monomial_count(ideal.n(), t as u32) - ideal.slice(t).unwrap().len()) as u64
}

#[test]
fn green_equality_for_lex_ideals() {
    // dim (R/(J + (x_n)))_t = (h_t)^- for lex-segment ideals; general
    // strongly stable ideals only satisfy the <= direction. The ideal
    // (x1^2, x1*x2, x2^2) has h_2 = 3 with empty x3-free quotient in degree
    // 2, while 3^- at index 2 is 1.
    let mut r = rng(202);
    for sample in 0..100 {
        let h = random_valid_osequence(3, 7, &mut r);
        let ideal = lex_segment_ideal(&h, 3).unwrap();
        for t in 1..ideal.max_degree() {
            let restricted = ideal.quotient_dim_modulo_var(3, t).unwrap() as u64;
            let expected = lower_shift(&BigUint::from(quotient_value(&ideal, t)), t as u32);
            assert_eq!(
                BigUint::from(restricted),
                expected,
                "sample {sample}, degree {t}"
            );
        }
    }
}

#[test]
fn green_inequality_for_stable_ideals() {
    let mut r = rng(505);
    for sample in 0..60 {
        let ideal = random_stable_ideal(3, 8, &mut r);
        for t in 1..ideal.max_degree() {
            let restricted = ideal.quotient_dim_modulo_var(3, t).unwrap() as u64;
            let bound = lower_shift(&BigUint::from(quotient_value(&ideal, t)), t as u32);
            assert!(
                BigUint::from(restricted) <= bound,
                "sample {sample}, degree {t}"
            );
        }
    }
}

#[test]
fn colon_identity_for_lex_ideals() {
    // dim ((J : x_3)/J)_i = h_i - h_{i+1} + (h_{i+1})^-
    let mut r = rng(303);
    for sample in 0..200 {
        let h = random_valid_osequence(3, 8, &mut r);
        let ideal = lex_segment_ideal(&h, 3).unwrap();
        for i in 0..ideal.max_degree() {
            let colon = ideal.colon_var_quotient_dim(3, i).unwrap() as i64;
            let here = quotient_value(&ideal, i) as i64;
            let next = quotient_value(&ideal, i + 1) as i64;
            let green = i64::try_from(&lower_shift(
                &BigUint::from(next as u64),
                (i + 1) as u32,
            ))
            .unwrap();
            assert_eq!(colon, here - next + green, "sample {sample}, degree {i}");
        }
    }
}

#[test]
fn colon_exact_sequence_for_stable_ideals() {
    // for any monomial ideal, multiplication by x_3 gives
    // dim ((J : x_3)/J)_i = h_i - h_{i+1} + dim (R/(J + (x_3)))_{i+1}
    let mut r = rng(606);
    for sample in 0..60 {
        let ideal = random_stable_ideal(3, 9, &mut r);
        for i in 0..ideal.max_degree() {
            let colon = ideal.colon_var_quotient_dim(3, i).unwrap() as i64;
            let here = quotient_value(&ideal, i) as i64;
            let next = quotient_value(&ideal, i + 1) as i64;
            let restricted = ideal.quotient_dim_modulo_var(3, i + 1).unwrap() as i64;
            assert_eq!(colon, here - next + restricted, "sample {sample}, degree {i}");
        }
    }
}

#[test]
fn last_var_divisible_generators_count_the_colon() {
    // |{T in G(J)_d : x_n | T}| = dim ((J : x_n)/J)_{d-1}
    let mut r = rng(404);
    for _ in 0..60 {
        let ideal = random_stable_ideal(3, 10, &mut r);
        for d in 1..=ideal.max_degree().min(10) {
            let gens = ideal.minimal_generators(d).unwrap();
            let divisible = gens.iter().filter(|m| m.divisible_by_var(3)).count();
            let colon = ideal.colon_var_quotient_dim(3, d - 1).unwrap();
            assert_eq!(divisible, colon, "degree {d}");
        }
    }
}

#[test]
fn last_monomial_closed_form_matches_enumeration() {
    // the closed form is the fast path; enumeration is the oracle
    for d in 1u32..=10 {
        let top = (d as u64 * d as u64 + d as u64) / 2;
        for i in 1..=top {
            let closed = last_monomial_lex(d, i).unwrap();
            // h_d = d + i, so the slice keeps the top C(d+2,2) - (d+i)
            // monomials; its last member is the closed form's target
            let slice_len = monomial_count(3, d) - (d as u64 + i) as usize;
            let segment = oseq_core::monomial::MonomialSet::lex_segment(3, d, slice_len);
            assert_eq!(segment.last(), Some(&closed), "d = {d}, i = {i}");
        }
    }
}
