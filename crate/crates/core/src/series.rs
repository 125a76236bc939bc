//! Truncated formal power series in auxiliary variables.
//!
//! Coefficients live in any [`Coefficient`] ring (rationals, integers or
//! polynomials in `X_i`). Terms beyond the truncation are discarded on every
//! operation, so products are exact below it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{binom_var, multichoose_var, Polynomial};
use crate::rational::Rational;

/// Default per-variable degree bound.
pub const DEFAULT_DEGREE: u32 = 8;

pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, if this is a unit.
    fn inverse(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.abs().is_one().then(|| self.clone())
    }
}

impl Coefficient for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    /// Only nonzero constants are units.
    fn inverse(&self) -> Option<Self> {
        match self.graded_degree() {
            Ok(0) => {
                let c = self.coeff(&crate::poly::Monomial::one());
                Some(Polynomial::constant(c.recip()))
            }
            _ => None,
        }
    }
}

/// Which exponent vectors a series keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// Maximum exponent of each auxiliary variable.
    pub per_var: Vec<u32>,
    /// Optional bound on the sum of all exponents.
    pub total: Option<u32>,
}

impl Truncation {
    pub fn uniform(nvars: usize, degree: u32) -> Self {
        Truncation { per_var: vec![degree; nvars], total: None }
    }

    pub fn fits(&self, exps: &[u32]) -> bool {
        exps.len() == self.per_var.len()
            && exps.iter().zip(&self.per_var).all(|(e, b)| e <= b)
            && self.total.is_none_or(|t| exps.iter().sum::<u32>() <= t)
    }
}

#[derive(Clone, PartialEq)]
pub struct Series<C: Coefficient> {
    vars: Vec<String>,
    trunc: Truncation,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coefficient> Series<C> {
    pub fn zero(vars: &[&str], trunc: Truncation) -> Self {
        assert_eq!(vars.len(), trunc.per_var.len(), "one bound per variable");
        Series {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// Zero series with every variable truncated at [`DEFAULT_DEGREE`].
    pub fn zero_default(vars: &[&str]) -> Self {
        Series::zero(vars, Truncation::uniform(vars.len(), DEFAULT_DEGREE))
    }

    pub fn one(vars: &[&str], trunc: Truncation) -> Self {
        let mut s = Series::zero(vars, trunc);
        let n = s.vars.len();
        s.add_term(vec![0; n], C::one());
        s
    }

    /// A zero series with the same variables and truncation.
    pub fn empty_like(&self) -> Self {
        Series { vars: self.vars.clone(), trunc: self.trunc.clone(), terms: BTreeMap::new() }
    }

    pub fn one_like(&self) -> Self {
        let mut s = self.empty_like();
        s.add_term(vec![0; self.vars.len()], C::one());
        s
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    /// Adds `c * t^exps`; ignored beyond the truncation.
    pub fn add_term(&mut self, exps: Vec<u32>, c: C) {
        if c.is_zero() || !self.trunc.fits(&exps) {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars || self.trunc != other.trunc {
            return Err(Error::ShapeMismatch(format!(
                "series over {:?} {:?} and {:?} {:?}",
                self.vars, self.trunc, other.vars, other.trunc
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Series {
            vars: self.vars.clone(),
            trunc: self.trunc.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(k));
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.empty_like();
        let n = self.vars.len();
        let mut exps = vec![0u32; n];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for i in 0..n {
                    exps[i] = ea[i] + eb[i];
                }
                if self.trunc.fits(&exps) {
                    out.add_term(exps.clone(), ca.mul(cb));
                }
            }
        }
        Ok(out)
    }

    /// Truncated multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let zero_exps = vec![0; self.vars.len()];
        let c0 = self.coeff(&zero_exps);
        let c0_inv = c0.inverse().ok_or(Error::NonUnit)?;
        // self = c0 (1 - x) with x having no constant term
        let x = self.one_like().sub(&self.scale(&c0_inv))?;
        let mut total = self.one_like();
        let mut power = self.one_like();
        loop {
            power = power.mul(&x)?;
            if power.is_empty() {
                break;
            }
            total = total.add(&power)?;
        }
        Ok(total.scale(&c0_inv))
    }

    /// `1 / (1 - ratio * t^exps)`, truncated.
    pub fn geometric_like(&self, exps: &[u32], ratio: &C) -> Self {
        let mut out = self.one_like();
        if exps.iter().all(|&e| e == 0) {
            panic!("geometric series in a constant does not converge");
        }
        let mut k = 1u32;
        let mut coeff = ratio.clone();
        loop {
            let e: Vec<u32> = exps.iter().map(|&x| x * k).collect();
            if !self.trunc.fits(&e) {
                break;
            }
            out.add_term(e, coeff.clone());
            coeff = coeff.mul(ratio);
            k += 1;
        }
        out
    }

    /// `1 + c * t^exps`, truncated.
    pub fn binomial_like(&self, exps: &[u32], c: &C) -> Self {
        let mut out = self.one_like();
        out.add_term(exps.to_vec(), c.clone());
        out
    }
}

impl<C: Coefficient> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter())
            .finish()
    }
}

/// `(1 - t^i)^{-X_i} = sum_j binom(X_i + j - 1, j) t^{ij}` in auxiliary variable `aux`.
pub fn expand_power_neg(
    vars: &[&str],
    trunc: &Truncation,
    aux: usize,
    i: u32,
) -> Series<Polynomial> {
    expand_in(vars, trunc, aux, i, |j| multichoose_var(i, j))
}

/// `(1 + (-t)^i)^{X_i} = sum_j (-1)^{ij} binom(X_i, j) t^{ij}`.
pub fn expand_power_pos(
    vars: &[&str],
    trunc: &Truncation,
    aux: usize,
    i: u32,
) -> Series<Polynomial> {
    expand_in(vars, trunc, aux, i, |j| {
        let b = binom_var(i, j);
        if (i * j) % 2 == 1 {
            -b
        } else {
            b
        }
    })
}

/// `(1 - (-t)^i)^{X_i} = sum_j (-1)^{(i+1)j} binom(X_i, j) t^{ij}`, the factor
/// generating exterior powers.
pub fn expand_alternating(
    vars: &[&str],
    trunc: &Truncation,
    aux: usize,
    i: u32,
) -> Series<Polynomial> {
    expand_in(vars, trunc, aux, i, |j| {
        let b = binom_var(i, j);
        if ((i + 1) * j) % 2 == 1 {
            -b
        } else {
            b
        }
    })
}

fn expand_in(
    vars: &[&str],
    trunc: &Truncation,
    aux: usize,
    i: u32,
    coeff: impl Fn(u32) -> Polynomial,
) -> Series<Polynomial> {
    assert!(i >= 1 && aux < vars.len());
    let mut out = Series::zero(vars, trunc.clone());
    let mut j = 0;
    loop {
        let mut e = vec![0; vars.len()];
        e[aux] = i * j;
        if !trunc.fits(&e) {
            break;
        }
        out.add_term(e, coeff(j));
        j += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn power_neg_first_terms() {
        let tr = Truncation::uniform(1, 2);
        let s = expand_power_neg(&["t"], &tr, 0, 1);
        assert_eq!(s.coeff(&[0]), Polynomial::one());
        assert_eq!(s.coeff(&[1]), poly("X1"));
        assert_eq!(s.coeff(&[2]), poly("1/2*X1^2 + 1/2*X1"));
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn power_pos_even_index() {
        let tr = Truncation::uniform(1, 4);
        let s = expand_power_pos(&["t"], &tr, 0, 2);
        assert_eq!(s.coeff(&[2]), poly("X2"));
        assert_eq!(s.coeff(&[1]), Polynomial::zero());
        let odd = expand_power_pos(&["t"], &tr, 0, 1);
        assert_eq!(odd.coeff(&[1]), poly("-X1"));
    }

    #[test]
    fn product_gives_h2() {
        let tr = Truncation::uniform(1, 2);
        let a = expand_power_neg(&["t"], &tr, 0, 1);
        let b = expand_power_neg(&["t"], &tr, 0, 2);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.coeff(&[2]), poly("1/2*X1^2 + 1/2*X1 + X2"));
    }

    #[test]
    fn exterior_factor_gives_e2() {
        let tr = Truncation::uniform(1, 2);
        let a = expand_alternating(&["t"], &tr, 0, 1);
        let b = expand_alternating(&["t"], &tr, 0, 2);
        assert_eq!(a.mul(&b).unwrap().coeff(&[2]), poly("1/2*X1^2 - 1/2*X1 - X2"));
    }

    #[test]
    fn inverse_and_non_units() {
        let tr = Truncation::uniform(2, 4);
        let mut a: Series<Rational> = Series::one(&["t", "u"], tr.clone());
        a.add_term(vec![1, 0], rat(-1, 2));
        a.add_term(vec![1, 1], int(3));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Series::one(&["t", "u"], tr.clone()));

        let mut b: Series<Rational> = Series::zero(&["t", "u"], tr.clone());
        b.add_term(vec![1, 0], int(1));
        assert!(matches!(b.inverse(), Err(Error::NonUnit)));

        let mut p: Series<Polynomial> = Series::zero(&["t"], Truncation::uniform(1, 3));
        p.add_term(vec![0], poly("X1"));
        assert!(matches!(p.inverse(), Err(Error::NonUnit)));
    }

    #[test]
    fn truncation_is_respected() {
        let tr = Truncation { per_var: vec![3, 3], total: Some(4) };
        let s: Series<BigInt> = Series::one(&["t", "u"], tr);
        let g = s.geometric_like(&[1, 1], &BigInt::from(2));
        assert_eq!(g.len(), 3);
        assert_eq!(g.coeff(&[2, 2]), BigInt::from(4));
        assert!(Zero::is_zero(&g.coeff(&[3, 3])));
        let other: Series<BigInt> = Series::one(&["t", "u"], Truncation::uniform(2, 3));
        assert!(g.mul(&other).is_err());
    }

    #[test]
    fn negative_power_series_consistency() {
        // (1 - t^i)^{-X_i} * (1 - t^i)^{X_i} = 1, the second factor via binomials
        for i in 1..=3u32 {
            let tr = Truncation::uniform(1, 8);
            let s = expand_power_neg(&["t"], &tr, 0, i);
            let mut pos: Series<Polynomial> = Series::zero(&["t"], tr.clone());
            for j in 0..=8 / i {
                let b = binom_var(i, j);
                pos.add_term(vec![i * j], if j % 2 == 1 { -b } else { b });
            }
            assert_eq!(s.mul(&pos).unwrap(), Series::one(&["t"], tr), "i = {i}");
        }
    }
}
