//! Sparse polynomials with exact rational coefficients, keyed by monomial.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;

/// A polynomial in `n` variables over the rationals. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// repeats and dropping zeros.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// A single variable as a polynomial.
    pub fn variable(n: usize, index: usize) -> Self {
        Polynomial::from_terms(
            n,
            [(Monomial::variable(n, index), BigRational::one())],
        )
    }

    /// A linear form with the given coefficients.
    pub fn linear_form(n: usize, coeffs: &[BigInt]) -> Self {
        debug_assert_eq!(coeffs.len(), n);
        Polynomial::from_terms(
            n,
            coeffs.iter().enumerate().map(|(k, c)| {
                (Monomial::variable(n, k + 1), BigRational::from(c.clone()))
            }),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.num_vars(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of the largest term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree when every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = Polynomial::zero(self.n);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Applies the linear substitution `x_i -> Σ_j matrix[i][j] x_j`.
    pub fn substitute_linear(&self, matrix: &[Vec<BigRational>]) -> Self {
        debug_assert_eq!(matrix.len(), self.n);
        let images: Vec<Polynomial> = matrix
            .iter()
            .map(|row| {
                Polynomial::from_terms(
                    self.n,
                    row.iter().enumerate().map(|(j, c)| {
                        (Monomial::variable(self.n, j + 1), c.clone())
                    }),
                )
            })
            .collect();
        let mut out = Polynomial::zero(self.n);
        for (m, c) in self.terms() {
            let mut product = Polynomial::from_terms(
                self.n,
                [(Monomial::one(self.n), c.clone())],
            );
            for (k, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    product = product.mul(&images[k]);
                }
            }
            out = out.add(&product);
        }
        out
    }

    /// Eliminates the last variable via
    /// `x_n -> -(c_1 x_1 + ... + c_{n-1} x_{n-1}) / c_n`, producing a
    /// polynomial in `n - 1` variables. Requires `c_n != 0`.
    pub fn eliminate_last_var(&self, coeffs: &[BigRational]) -> Option<Polynomial> {
        debug_assert_eq!(coeffs.len(), self.n);
        if self.n < 2 || coeffs[self.n - 1].is_zero() {
            return None;
        }
        let m = self.n - 1;
        let scale = -BigRational::one() / &coeffs[self.n - 1];
        // image of x_n in the smaller ring
        let image = Polynomial::from_terms(
            m,
            (0..m).map(|j| (Monomial::variable(m, j + 1), &coeffs[j] * &scale)),
        );
        let mut out = Polynomial::zero(m);
        for (mono, c) in self.terms() {
            let exps = mono.exponents();
            let reduced = Monomial::from_exponents(&exps[..m]).expect("fewer variables");
            let mut product =
                Polynomial::from_terms(m, [(reduced, c.clone())]);
            for _ in 0..exps[m] {
                product = product.mul(&image);
            }
            out = out.add(&product);
        }
        Some(out)
    }

    /// Scales to a primitive integer polynomial (clears denominators and
    /// divides by the content). The zero polynomial maps to an empty map.
    pub(crate) fn primitive_integer_terms(&self) -> BTreeMap<Monomial, BigInt> {
        use num_integer::Integer;
        let mut lcm = BigInt::one();
        for (_, c) in self.terms() {
            lcm = lcm.lcm(c.denom());
        }
        let mut scaled: BTreeMap<Monomial, BigInt> = self
            .terms()
            .map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom())))
            .collect();
        let mut content = BigInt::zero();
        for v in scaled.values() {
            content = content.gcd(v);
        }
        if !content.is_zero() && !content.is_one() {
            for v in scaled.values_mut() {
                *v = &*v / &content;
            }
        }
        scaled
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest monomial first
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if abs.is_one() && m.degree() > 0 {
                write!(f, "{m}")?;
            } else if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Convenience constructor from integer-coefficient term triples.
pub fn poly_from_int_terms(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_terms(
        n,
        terms.iter().map(|(c, exps)| {
            (
                Monomial::from_exponents(exps).expect("valid exponents"),
                BigRational::from(BigInt::from(*c)),
            )
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn arithmetic_and_homogeneity() {
        let p = poly_from_int_terms(3, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        assert!(p.is_homogeneous());
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = p.add(&p.scale(&BigRational::from(BigInt::from(-1))));
        assert!(q.is_zero());

        let mixed = poly_from_int_terms(3, &[(1, &[1, 0, 0]), (1, &[2, 0, 0])]);
        assert!(!mixed.is_homogeneous());
    }

    #[test]
    fn multiplication() {
        let x1 = Polynomial::variable(2, 1);
        let x2 = Polynomial::variable(2, 2);
        let sum = x1.add(&x2);
        let square = sum.mul(&sum);
        // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
        assert_eq!(square.num_terms(), 3);
        let middle = Monomial::from_exponents(&[1, 1]).unwrap();
        let coef = square.terms().find(|(m, _)| **m == middle).unwrap().1;
        assert_eq!(*coef, BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn linear_substitution_preserves_degree() {
        let p = poly_from_int_terms(2, &[(1, &[2, 0])]);
        // x1 -> x1 + x2, x2 -> x2
        let matrix = vec![
            vec![BigRational::one(), BigRational::one()],
            vec![BigRational::zero(), BigRational::one()],
        ];
        let q = p.substitute_linear(&matrix);
        assert_eq!(q.homogeneous_degree(), Some(2));
        assert_eq!(q.num_terms(), 3);
    }

    #[test]
    fn eliminate_last_variable() {
        // x3 -> -(x1 + x2) under the form x1 + x2 + x3
        let coeffs: Vec<BigRational> = (0..3).map(|_| BigRational::one()).collect();
        let p = poly_from_int_terms(3, &[(1, &[0, 0, 2])]);
        let q = p.eliminate_last_var(&coeffs).unwrap();
        // (x1 + x2)^2
        assert_eq!(q.n(), 2);
        assert_eq!(q.num_terms(), 3);
    }

    #[test]
    fn display_reads_naturally() {
        let p = poly_from_int_terms(3, &[(2, &[1, 0, 0]), (-1, &[0, 0, 1])]);
        assert_eq!(alloc::format!("{p}"), "2*x1 - x3");
    }
}
