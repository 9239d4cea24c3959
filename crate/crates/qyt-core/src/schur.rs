//! Desk-scale verification that quasi-Yamanouchi tableaux index exactly the
//! nonzero terms of the fundamental quasisymmetric expansion of a Schur
//! polynomial.
//!
//! Schur polynomials in m variables are computed two ways: as a sum of
//! monomial weights over semistandard fillings, and as a sum of fundamental
//! quasisymmetric polynomials over standard fillings. Both land in
//! [`SparsePolynomial`] and are compared exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::partition::Partition;
use crate::tableau::{enumerate_ssyt, enumerate_syt, DescentSet};

/// A polynomial in a fixed number of variables, stored as a map from dense
/// exponent vectors to nonzero arbitrary-precision coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigUint>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Add `coeff * x^exponents`. Zero coefficients are never stored.
    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigUint) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(BigUint::zero);
        *entry += coeff;
    }

    pub fn add_assign(&mut self, other: &SparsePolynomial) {
        assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigUint {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of the exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigUint)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Sum of all coefficients (the evaluation at x1 = .. = xm = 1).
    pub fn coefficient_sum(&self) -> BigUint {
        self.terms.values().sum()
    }
}

impl fmt::Display for SparsePolynomial {
    /// Monomials sorted by exponent vector, highest first, so that powers of
    /// x1 lead: `x1^2*x2 + x1*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = BigUint::from(1u32);
        for (i, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            for (v, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(&format!("x{}", v + 1));
                if e > 1 {
                    vars.push_str(&format!("^{e}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else if *coeff == one {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{coeff}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// The Schur polynomial in m variables as the sum over semistandard fillings
/// of the monomial recording each filling's entry multiplicities.
pub fn schur_via_ssyt(shape: &Partition, m: usize) -> SparsePolynomial {
    let mut poly = SparsePolynomial::zero(m);
    for t in enumerate_ssyt(shape, m as u32) {
        let mut weight = vec![0u32; m];
        for &v in t.rows().iter().flatten() {
            weight[(v - 1) as usize] += 1;
        }
        poly.add_term(weight, BigUint::from(1u32));
    }
    poly
}

/// The fundamental quasisymmetric polynomial F_{n,d} in m variables: the sum
/// of x_{w1}..x_{wn} over weakly increasing words w in {1..m} that increase
/// strictly at every position in `d`. The zero polynomial whenever |d| >= m.
pub fn fundamental_qsym(n: usize, descents: &DescentSet, m: usize) -> SparsePolynomial {
    let mut poly = SparsePolynomial::zero(m);
    let mut word = vec![0u32; n];
    fn rec(
        pos: usize,
        n: usize,
        m: usize,
        descents: &DescentSet,
        word: &mut Vec<u32>,
        poly: &mut SparsePolynomial,
    ) {
        if pos == n {
            let mut weight = vec![0u32; m];
            for &w in word.iter() {
                weight[(w - 1) as usize] += 1;
            }
            poly.add_term(weight, BigUint::from(1u32));
            return;
        }
        let lo = if pos == 0 {
            1
        } else if descents.contains(pos) {
            word[pos - 1] + 1
        } else {
            word[pos - 1]
        };
        for w in lo..=(m as u32) {
            word[pos] = w;
            rec(pos + 1, n, m, descents, word, poly);
        }
    }
    rec(0, n, m, descents, &mut word, &mut poly);
    poly
}

/// The Schur polynomial in m variables as the sum of fundamental
/// quasisymmetric polynomials indexed by the standard fillings and their
/// descent sets.
pub fn schur_via_fundamental(shape: &Partition, m: usize) -> SparsePolynomial {
    let n = shape.size();
    let mut poly = SparsePolynomial::zero(m);
    for t in enumerate_syt(shape) {
        let d = t.descent_set().unwrap();
        poly.add_assign(&fundamental_qsym(n, &d, m));
    }
    poly
}

/// Count how many standard fillings contribute a nonzero fundamental
/// quasisymmetric polynomial in m variables. Returns (nonzero, total); the
/// nonzero count equals the number of quasi-Yamanouchi fillings with entries
/// at most m.
pub fn nonzero_term_census(shape: &Partition, m: usize) -> (BigUint, BigUint) {
    let n = shape.size();
    let mut total = BigUint::zero();
    let mut nonzero = BigUint::zero();
    for t in enumerate_syt(shape) {
        total += 1u32;
        let d = t.descent_set().unwrap();
        if !fundamental_qsym(n, &d, m).is_zero() {
            nonzero += 1u32;
        }
    }
    (nonzero, total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{hook_length_count, qyt_count};
    use crate::partition::partitions_of;
    use crate::tableau::CountMode;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn d(elems: &[usize]) -> DescentSet {
        DescentSet::new(elems.to_vec()).unwrap()
    }

    #[test]
    fn schur_via_ssyt_examples() {
        let s = schur_via_ssyt(&p("2,2"), 3);
        assert_eq!(s.num_terms(), 6);
        assert_eq!(s.coefficient(&[1, 2, 1]), BigUint::from(1u32));
        assert_eq!(s.coefficient_sum(), BigUint::from(6u32));

        let single = schur_via_ssyt(&p("1"), 4);
        assert_eq!(single.to_string(), "x1 + x2 + x3 + x4");

        assert!(schur_via_ssyt(&p("2,2"), 1).is_zero());
    }

    #[test]
    fn fundamental_qsym_examples() {
        let f = fundamental_qsym(2, &d(&[]), 2);
        assert_eq!(f.to_string(), "x1^2 + x1*x2 + x2^2");
        let f = fundamental_qsym(2, &d(&[1]), 2);
        assert_eq!(f.to_string(), "x1*x2");
        assert!(fundamental_qsym(3, &d(&[1, 2]), 2).is_zero());
    }

    #[test]
    fn fundamental_qsym_vanishes_iff_too_many_descents() {
        for n in 1..=5 {
            for m in 1..=4usize {
                // All descent sets of {1..n-1}.
                for mask in 0..(1u32 << (n - 1)) {
                    let elems: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let ds = d(&elems);
                    let f = fundamental_qsym(n, &ds, m);
                    assert_eq!(f.is_zero(), ds.len() >= m, "n={n} m={m} d={elems:?}");
                }
            }
        }
    }

    #[test]
    fn schur_expansions_agree() {
        for (shape, m) in [("2,2", 3), ("3,2", 2), ("3,1", 3), ("2,2,1", 3)] {
            let shape = p(shape);
            assert_eq!(
                schur_via_ssyt(&shape, m),
                schur_via_fundamental(&shape, m),
                "{shape} m={m}"
            );
        }
        assert!(schur_via_fundamental(&p("1,1,1"), 2).is_zero());
    }

    #[test]
    fn census_examples() {
        let (nonzero, total) = nonzero_term_census(&p("2,2"), 2);
        assert_eq!((nonzero, total), (BigUint::from(1u32), BigUint::from(2u32)));
        let (nonzero, total) = nonzero_term_census(&p("2,2,1"), 3);
        assert_eq!((nonzero, total), (BigUint::from(3u32), BigUint::from(5u32)));
        // Beyond the feasible maximum every term survives.
        let shape = p("3,2");
        let (nonzero, total) = nonzero_term_census(&shape, 5);
        assert_eq!(nonzero, total);
        assert_eq!(total, hook_length_count(&shape));
    }

    #[test]
    fn census_matches_qyt_counts() {
        for n in 1..=5 {
            for shape in partitions_of(n) {
                for m in 1..=4usize {
                    let (nonzero, total) = nonzero_term_census(&shape, m);
                    assert_eq!(
                        nonzero,
                        qyt_count(&shape, CountMode::Le(m as u32)),
                        "{shape} m={m}"
                    );
                    assert_eq!(total, hook_length_count(&shape));
                }
            }
        }
    }

    #[test]
    fn coefficient_mass_counts_fillings() {
        use crate::formula::hook_content_count;
        for (shape, m) in [("3,2", 3), ("2,2,1", 4)] {
            let shape = p(shape);
            assert_eq!(
                schur_via_ssyt(&shape, m).coefficient_sum(),
                hook_content_count(&shape, m as u32)
            );
        }
    }

    #[test]
    fn display_of_constants_and_zero() {
        assert_eq!(SparsePolynomial::zero(3).to_string(), "0");
        let mut c = SparsePolynomial::zero(2);
        c.add_term(vec![0, 0], BigUint::from(5u32));
        assert_eq!(c.to_string(), "5");
        let mut q = SparsePolynomial::zero(2);
        q.add_term(vec![2, 0], BigUint::from(3u32));
        assert_eq!(q.to_string(), "3*x1^2");
    }
}
