//! Combinatorics of Hilbert functions of graded Artinian algebras.
//!
//! The crate is organized around the numerical side of the theory: binomial
//! expansions and the Macaulay/Green growth operators ([`osequence`]),
//! monomials and Borel stability ([`monomial`]), lex-segment ideals built
//! from Hilbert functions ([`lexideal`]), graded Betti numbers of stable
//! ideals via the Eliahou-Kervaire formula together with closed forms for
//! generic initial ideals ([`betti`]), and decision procedures that certify
//! O-sequences as "not level" or check necessary conditions for the Weak
//! Lefschetz Property ([`level`]).
//!
//! Everything above is exact integer combinatorics. The [`oracle`] module is
//! the independent verifier: exact rational linear algebra on graded pieces
//! of explicit polynomial quotients (Hilbert functions, degreewise initial
//! ideals, sampled generic initial ideals, socle and colon dimensions, and
//! Koszul-homology Betti numbers), used to cross-check every closed formula.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live
//! in the companion `oseq` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod betti;
pub mod level;
pub mod lexideal;
pub mod monomial;
pub mod oracle;
pub mod osequence;
pub mod sample;

pub use betti::BettiDiagram;
pub use level::{Certificate, CertificateKind, LevelVerdict, VerdictStatus};
pub use lexideal::StableIdeal;
pub use monomial::{Monomial, MonomialOrder, MonomialSet};
pub use oracle::{GradedIdeal, Polynomial};
pub use osequence::{BinomialExpansion, OSequence, ShapeReport};
