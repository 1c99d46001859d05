//! Exact polynomials in `q` and `t` with arbitrary-precision coefficients.
//!
//! [`BivariatePolynomial`] stores a dense coefficient grid indexed by
//! `(q-exponent, t-exponent)`. The grid is trimmed on construction, so two
//! polynomials are equal exactly when their grids are structurally equal.

mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::Result;
use crate::genspace::all_permutations;

pub use text::ParsePolynomialError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
        }
    }
}

/// A coefficient grid in `q` and `t`. `coeffs[a * cols + b]` is the
/// coefficient of `q^a t^b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    rows: usize,
    cols: usize,
    coeffs: Vec<BigInt>,
}

/// A coefficient where two polynomials disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialDifference {
    pub q_exp: usize,
    pub t_exp: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial {
            rows: 0,
            cols: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c q^a t^b`.
    pub fn monomial(c: impl Into<BigInt>, q_exp: usize, t_exp: usize) -> Self {
        Self::from_terms([(q_exp, t_exp, c.into())])
    }

    /// Sums `c q^a t^b` over `(a, b, c)`; repeated exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let rows = terms.iter().map(|t| t.0 + 1).max().unwrap_or(0);
        let cols = terms.iter().map(|t| t.1 + 1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); rows * cols];
        for (a, b, c) in terms {
            coeffs[a * cols + b] += c;
        }
        Self::from_grid(rows, cols, coeffs)
    }

    /// Builds from a row-major `rows x cols` grid, trimming zero borders.
    pub fn from_grid(rows: usize, cols: usize, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), rows * cols, "grid size mismatch");
        let mut p = BivariatePolynomial { rows, cols, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        let live_rows = (0..self.rows)
            .rev()
            .find(|&a| self.row(a).iter().any(|c| !c.is_zero()))
            .map_or(0, |a| a + 1);
        let live_cols = (0..self.cols)
            .rev()
            .find(|&b| (0..live_rows).any(|a| !self.coeffs[a * self.cols + b].is_zero()))
            .map_or(0, |b| b + 1);
        if live_rows == self.rows && live_cols == self.cols {
            return;
        }
        let mut coeffs = Vec::with_capacity(live_rows * live_cols);
        for a in 0..live_rows {
            coeffs.extend_from_slice(&self.row(a)[..live_cols]);
        }
        self.rows = live_rows;
        self.cols = live_cols;
        self.coeffs = coeffs;
    }

    fn row(&self, a: usize) -> &[BigInt] {
        &self.coeffs[a * self.cols..(a + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `q` exponent with a nonzero coefficient.
    pub fn q_degree(&self) -> Option<usize> {
        self.rows.checked_sub(1)
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.cols.checked_sub(1)
    }

    pub fn coeff(&self, q_exp: usize, t_exp: usize) -> BigInt {
        if q_exp < self.rows && t_exp < self.cols {
            self.coeffs[q_exp * self.cols + t_exp].clone()
        } else {
            BigInt::zero()
        }
    }

    /// Nonzero terms `(q_exp, t_exp, coeff)` in increasing `(q, t)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        let cols = self.cols;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i / cols, i % cols, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial {
            rows: self.rows,
            cols: self.cols,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Substitutes `q = value`, leaving a polynomial in `t`.
    pub fn specialize_q(&self, value: impl Into<BigInt>) -> UnivariatePolynomial {
        let value = value.into();
        let mut out = vec![BigInt::zero(); self.cols];
        for a in (0..self.rows).rev() {
            for (b, acc) in out.iter_mut().enumerate() {
                *acc *= &value;
                *acc += &self.coeffs[a * self.cols + b];
            }
        }
        UnivariatePolynomial::new(Var::T, out)
    }

    /// Substitutes `t = value`, leaving a polynomial in `q`.
    pub fn specialize_t(&self, value: impl Into<BigInt>) -> UnivariatePolynomial {
        let value = value.into();
        let out = (0..self.rows)
            .map(|a| {
                self.row(a)
                    .iter()
                    .rev()
                    .fold(BigInt::zero(), |acc, c| acc * &value + c)
            })
            .collect();
        UnivariatePolynomial::new(Var::Q, out)
    }

    /// The lexicographically smallest `(q_exp, t_exp)` where the two differ.
    pub fn first_difference(&self, other: &Self) -> Option<MonomialDifference> {
        let rows = self.rows.max(other.rows);
        let cols = self.cols.max(other.cols);
        for a in 0..rows {
            for b in 0..cols {
                let lhs = self.coeff(a, b);
                let rhs = other.coeff(a, b);
                if lhs != rhs {
                    return Some(MonomialDifference {
                        q_exp: a,
                        t_exp: b,
                        lhs,
                        rhs,
                    });
                }
            }
        }
        None
    }
}

impl Default for BivariatePolynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &'a BivariatePolynomial) -> BivariatePolynomial {
        let rows = self.rows.max(rhs.rows);
        let cols = self.cols.max(rhs.cols);
        let mut coeffs = vec![BigInt::zero(); rows * cols];
        for p in [self, rhs] {
            for a in 0..p.rows {
                for b in 0..p.cols {
                    coeffs[a * cols + b] += &p.coeffs[a * p.cols + b];
                }
            }
        }
        BivariatePolynomial::from_grid(rows, cols, coeffs)
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self + &rhs
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            rows: self.rows,
            cols: self.cols,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &'a BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &'a BivariatePolynomial) -> BivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BivariatePolynomial::zero();
        }
        let rows = self.rows + rhs.rows - 1;
        let cols = self.cols + rhs.cols - 1;
        let mut coeffs = vec![BigInt::zero(); rows * cols];
        for (a1, b1, c1) in self.terms() {
            for (a2, b2, c2) in rhs.terms() {
                coeffs[(a1 + a2) * cols + b1 + b2] += c1 * c2;
            }
        }
        BivariatePolynomial::from_grid(rows, cols, coeffs)
    }
}

impl Mul for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self * &rhs
    }
}

/// A polynomial in a single variable, with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    var: Var,
    coeffs: Vec<BigInt>,
}

impl UnivariatePolynomial {
    pub fn new(var: Var, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePolynomial { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Coefficients from the constant term upward.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, value: impl Into<BigInt>) -> BigInt {
        let value = value.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &value + c)
    }

    /// The same polynomial viewed in both variables.
    pub fn to_bivariate(&self) -> BivariatePolynomial {
        let terms = self.coeffs.iter().enumerate().map(|(e, c)| match self.var {
            Var::Q => (e, 0, c.clone()),
            Var::T => (0, e, c.clone()),
        });
        BivariatePolynomial::from_terms(terms)
    }
}

impl<'a> Mul<&'a UnivariatePolynomial> for &'a UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: &'a UnivariatePolynomial) -> UnivariatePolynomial {
        assert_eq!(self.var, rhs.var, "mixing variables");
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::new(self.var, Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePolynomial::new(self.var, out)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_bivariate().fmt(f)
    }
}

/// `[k]_q = 1 + q + ... + q^(k-1)`; zero for `k = 0`.
pub fn q_number(k: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_terms((0..k).map(|a| (a, 0, BigInt::one())))
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: usize) -> BivariatePolynomial {
    (1..=n).fold(BivariatePolynomial::one(), |acc, k| &acc * &q_number(k))
}

/// `A_n(t) = Σ t^des(σ)` over `S_n`, tallied over every permutation.
pub fn eulerian_polynomial(n: usize, budget: &Budget) -> Result<UnivariatePolynomial> {
    let mut counts = vec![0u64; n.max(1)];
    let mut perms = all_permutations(n, budget)?;
    while let Some(word) = perms.next_word() {
        counts[crate::combinat::descents(word)] += 1;
    }
    Ok(UnivariatePolynomial::new(
        Var::T,
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BivariatePolynomial {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn ring_examples() {
        let one = BivariatePolynomial::one();
        assert_eq!(&p("q + t + 1") * &one, p("q + t + 1"));
        assert_eq!(&p("1 + q") * &p("1 + t"), p("1 + q + t + qt"));
        assert_eq!(&q_number(2) * &q_number(2), p("1 + 2q + q^2"));
        assert_eq!(p("q").scale(&BigInt::from(3)), p("3q"));
        assert!(p("q + t").scale(&BigInt::zero()).is_zero());
        assert!((&p("q - t") + &p("t - q")).is_zero());
    }

    #[test]
    fn trimming_is_canonical() {
        let padded = BivariatePolynomial::from_grid(3, 2, ints(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(padded, BivariatePolynomial::one());
        assert_eq!(padded.q_degree(), Some(0));
        assert_eq!(BivariatePolynomial::zero().q_degree(), None);
    }

    #[test]
    fn q_numbers_and_factorials() {
        assert_eq!(q_number(1), BivariatePolynomial::one());
        assert!(q_number(0).is_zero());
        assert_eq!(q_number(3), p("1 + q + q^2"));
        assert_eq!(q_factorial(0), BivariatePolynomial::one());
        assert_eq!(q_factorial(2), p("1 + q"));
        assert_eq!(q_factorial(3), p("q^3 + 2q^2 + 2q + 1"));
    }

    #[test]
    fn eulerian_examples() {
        let b = Budget::default();
        let t = |v: &[i64]| UnivariatePolynomial::new(Var::T, ints(v));
        assert_eq!(eulerian_polynomial(1, &b).unwrap(), t(&[1]));
        assert_eq!(eulerian_polynomial(3, &b).unwrap(), t(&[1, 4, 1]));
        assert_eq!(eulerian_polynomial(4, &b).unwrap(), t(&[1, 11, 11, 1]));
        assert_eq!(eulerian_polynomial(0, &b).unwrap(), t(&[1]));
    }

    #[test]
    fn specialization_examples() {
        let i4 = p("q^6 + q^5t + 3q^5 + 5q^4t + q^3t^2 + 5q^4 + 13q^3t + 5q^2t^2 + 6q^3 \
                    + 20q^2t + 11qt^2 + t^3 + 5q^2 + 22qt + 11t^2 + 3q + 11t + 1");
        assert_eq!(i4.specialize_q(-1), UnivariatePolynomial::new(Var::T, ints(&[0, 0, 4, 1])));
        assert_eq!(i4.specialize_q(1), UnivariatePolynomial::new(Var::T, ints(&[24, 72, 28, 1])));
        let row_sums = i4.specialize_t(1);
        for a in 0..=6 {
            let direct: BigInt = (0..=3).map(|b| i4.coeff(a, b)).sum();
            assert_eq!(row_sums.coeff(a), direct);
        }
    }

    #[test]
    fn first_difference_is_lexicographic() {
        let d = p("3 + qt + q^2").first_difference(&p("3 + 2qt + 5q^2")).unwrap();
        assert_eq!((d.q_exp, d.t_exp), (1, 1));
        assert_eq!((d.lhs, d.rhs), (BigInt::from(1), BigInt::from(2)));
        assert!(p("q").first_difference(&p("q")).is_none());
        let d = p("q").first_difference(&BivariatePolynomial::zero()).unwrap();
        assert_eq!((d.q_exp, d.t_exp), (1, 0));
    }

    #[test]
    fn factorial_and_eulerian_at_one() {
        let b = Budget::default();
        let mut fact = BigInt::one();
        for n in 1..=7usize {
            fact *= n;
            assert_eq!(q_factorial(n).specialize_t(0).eval(1), fact);
            assert_eq!(eulerian_polynomial(n, &b).unwrap().eval(1), fact);
        }
    }

    fn small_poly() -> impl Strategy<Value = BivariatePolynomial> {
        prop::collection::vec((0usize..4, 0usize..4, -20i64..20), 0..6).prop_map(|terms| {
            BivariatePolynomial::from_terms(
                terms.into_iter().map(|(a, b, c)| (a, b, BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn specialization_is_a_ring_map(a in small_poly(), b in small_poly(), v in -3i64..4) {
            let prod = &a * &b;
            prop_assert_eq!(prod.specialize_q(v), &a.specialize_q(v) * &b.specialize_q(v));
            prop_assert_eq!(prod.specialize_t(v), &a.specialize_t(v) * &b.specialize_t(v));
        }

        #[test]
        fn text_round_trip(a in small_poly()) {
            let back: BivariatePolynomial = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
