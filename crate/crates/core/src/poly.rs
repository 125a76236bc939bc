//! Sparse polynomials in `X_1, X_2, ...` with `deg X_i = i`, and the
//! binomial basis `binom(X, alpha) = prod_i binom(X_i, a_i)`.
//!
//! Variables are realized lazily: a monomial stores exponents only up to its
//! last nonzero one, so no fixed variable bound is needed.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{ExponentialForm, Partition};
use crate::rational::{factorial, format_rational, parse_rational, Rational};

/// `X_1^{e_1} X_2^{e_2} ...`; `exps[i]` is the exponent of `X_{i+1}`.
///
/// The `Ord` impl is the canonical output order, ascending: total degree
/// first, ties broken reverse-lexicographically from the last variable
/// (a smaller exponent in the last differing variable ranks higher).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn from_exps(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    /// `X_var^exp`, `var >= 1`.
    pub fn var_pow(var: u32, exp: u32) -> Self {
        assert!(var >= 1, "variables are indexed from 1");
        let mut exps = vec![0; var as usize];
        exps[var as usize - 1] = exp;
        Monomial::from_exps(exps)
    }

    /// The monomial `X^alpha = prod X_i^{a_i}` sharing its index with `binom(X, alpha)`.
    pub fn from_partition(alpha: &Partition) -> Self {
        Monomial::from_exps(alpha.exponential().multiplicities)
    }

    pub fn to_partition(&self) -> Partition {
        ExponentialForm { multiplicities: self.exps.clone() }.to_partition()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.exps.get(var as usize - 1).copied().unwrap_or(0)
    }

    /// Nonzero `(var, exp)` pairs in increasing variable order.
    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i as u32 + 1, e))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `sum_i i * e_i`.
    pub fn graded_degree(&self) -> u32 {
        self.exps.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
    }

    /// `sum_i e_i`.
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for i in (0..n).rev() {
                let a = self.exps.get(i).copied().unwrap_or(0);
                let b = other.exps.get(i).copied().unwrap_or(0);
                if a != b {
                    return b.cmp(&a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "X{v}")?;
            } else {
                write!(f, "X{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of `Q[X_1, X_2, ...]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// The variable `X_i`.
    pub fn var(i: u32) -> Self {
        Polynomial::term(Monomial::var_pow(i, 1), Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Max over terms of `sum_i i * e_i`; the zero polynomial has none.
    pub fn graded_degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(Monomial::graded_degree)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Value at `X_i = values(i)`.
    pub fn evaluate(&self, values: impl Fn(u32) -> Rational) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                t *= num_traits::pow(values(v), e as usize);
            }
            total += t;
        }
        total
    }

    /// Ring substitution `X_i -> image(i)`.
    pub fn substitute(&self, image: impl Fn(u32) -> Polynomial) -> Polynomial {
        let mut cache: HashMap<u32, Polynomial> = HashMap::new();
        let mut total = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (v, e) in m.factors() {
                let base = cache.entry(v).or_insert_with(|| image(v));
                t = &t * &base.pow(e);
            }
            total += &t;
        }
        total
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_terms(&self, f: impl Fn(&Monomial, &Rational) -> Rational) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(m, c))))
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_impl(rhs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        self.mul_impl(&rhs)
    }
}

/// Terms in descending canonical order, e.g. `1/3*X1^3 - 1/3*X1 - X3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the text form written by `Display` (whitespace-insensitive).
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Polynomial::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^')
            {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        for piece in pieces {
            let (negative, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (m, mut c) = parse_term(body)?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
        }
        Ok(out)
    }
}

fn parse_term(body: &str) -> Result<(Monomial, Rational)> {
    if body.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = Rational::one();
    let mut mono = Monomial::one();
    for factor in body.split('*') {
        if let Some(rest) = factor.strip_prefix('X') {
            let (v, e) = match rest.split_once('^') {
                Some((v, e)) => (v, e),
                None => (rest, "1"),
            };
            let bad = || Error::Parse(format!("malformed factor {factor:?}"));
            let v: u32 = v.parse().map_err(|_| bad())?;
            let e: u32 = e.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            mono = mono.mul(&Monomial::var_pow(v, e));
        } else {
            coeff *= parse_rational(factor)?;
        }
    }
    Ok((mono, coeff))
}

/// `x(x-1)...(x-j+1)` (`rising = false`) or `x(x+1)...(x+j-1)` as integer
/// coefficient vectors, lowest degree first.
fn factorial_power_coeffs(j: u32, rising: bool) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for k in 0..j {
        let shift = if rising { BigInt::from(k) } else { -BigInt::from(k) };
        let mut next = vec![BigInt::zero(); c.len() + 1];
        for (d, a) in c.iter().enumerate() {
            next[d + 1] += a;
            next[d] += a * &shift;
        }
        c = next;
    }
    c
}

fn univariate(var: u32, coeffs: &[BigInt], denom: &BigInt) -> Polynomial {
    Polynomial::from_terms(coeffs.iter().enumerate().map(|(d, a)| {
        (
            Monomial::var_pow(var, d as u32),
            Rational::new(a.clone(), denom.clone()),
        )
    }))
}

/// `binom(X_var, j)`.
pub fn binom_var(var: u32, j: u32) -> Polynomial {
    univariate(var, &factorial_power_coeffs(j, false), &factorial(j))
}

/// `binom(X_var + j - 1, j)`, the number of size-`j` multisets.
pub fn multichoose_var(var: u32, j: u32) -> Polynomial {
    univariate(var, &factorial_power_coeffs(j, true), &factorial(j))
}

/// `binom(X, alpha) = prod_i binom(X_i, a_i)`; `binom(X, ()) = 1`.
pub fn binom_elem(alpha: &Partition) -> Polynomial {
    binom_from_key(&Monomial::from_partition(alpha))
}

fn binom_from_key(key: &Monomial) -> Polynomial {
    key.factors()
        .fold(Polynomial::one(), |acc, (v, a)| &acc * &binom_var(v, a))
}

static STIRLING2: LazyLock<RwLock<Vec<Vec<BigInt>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![BigInt::one()]]));

/// Row `m` of the Stirling numbers of the second kind, `S(m, 0..=m)`.
pub fn stirling2_row(m: u32) -> Vec<BigInt> {
    let m = m as usize;
    if let Some(row) = STIRLING2.read().unwrap().get(m) {
        return row.clone();
    }
    let mut table = STIRLING2.write().unwrap();
    while table.len() <= m {
        let prev = table.last().unwrap().clone();
        let n = prev.len();
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let stay = if k < n { &prev[k] * k } else { BigInt::zero() };
            row[k] = stay + &prev[k - 1];
        }
        table.push(row);
    }
    table[m].clone()
}

/// Expansion `sum_alpha c_alpha binom(X, alpha)` in the binomial basis.
///
/// Keys are monomials read as multiplicity vectors: the key `X^alpha` stands
/// for `binom(X, alpha)`, so a key's graded degree is `|alpha|`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BinomialExpansion {
    terms: BTreeMap<Monomial, Rational>,
}

impl BinomialExpansion {
    pub fn zero() -> Self {
        BinomialExpansion::default()
    }

    pub fn from_partitions(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = BinomialExpansion::zero();
        for (p, c) in terms {
            out.add_term(Monomial::from_partition(&p), c);
        }
        out
    }

    fn add_term(&mut self, key: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, alpha: &Partition) -> Rational {
        self.terms
            .get(&Monomial::from_partition(alpha))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `(alpha, c_alpha)` pairs, `alpha` in enumeration order.
    pub fn to_partition_map(&self) -> BTreeMap<Partition, Rational> {
        self.terms
            .iter()
            .map(|(k, c)| (k.to_partition(), c.clone()))
            .collect()
    }

    /// `(key, c)` pairs where `key` is the multiplicity vector of `alpha`.
    pub fn raw_terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keeps only `alpha` with `|alpha| <= max_weight`.
    pub fn truncate(&self, max_weight: u32) -> BinomialExpansion {
        BinomialExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.graded_degree() <= max_weight)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product in the binomial basis, dropping `alpha` with `|alpha| > max_weight`.
    ///
    /// Uses `binom(x,a) binom(x,b) = sum_k (a+b-k)! / (k! (a-k)! (b-k)!) binom(x, a+b-k)`
    /// per variable. Every index in the product of `binom(X,alpha)` and
    /// `binom(X,beta)` dominates both factors, so truncating the inputs first
    /// loses nothing.
    pub fn mul_truncated(&self, other: &BinomialExpansion, max_weight: Option<u32>) -> Self {
        let keep = |k: &Monomial| max_weight.is_none_or(|w| k.graded_degree() <= w);
        let a_terms: Vec<_> = self.terms.iter().filter(|(k, _)| keep(k)).collect();
        let b_terms: Vec<_> = other.terms.iter().filter(|(k, _)| keep(k)).collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ka, ca) in &a_terms {
            for (kb, cb) in &b_terms {
                let c = *ca * *cb;
                for (key, mult) in binomial_product(ka, kb) {
                    if keep(&key) {
                        *acc.entry(key).or_insert_with(Rational::zero) +=
                            &c * Rational::from_integer(mult);
                    }
                }
            }
        }
        BinomialExpansion {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Expands `binom(X, a) binom(X, b)` into the binomial basis.
fn binomial_product(a: &Monomial, b: &Monomial) -> Vec<(Monomial, BigInt)> {
    let n = a.exps.len().max(b.exps.len());
    let mut out: Vec<(Vec<u32>, BigInt)> = vec![(Vec::with_capacity(n), BigInt::one())];
    for i in 0..n {
        let x = a.exps.get(i).copied().unwrap_or(0);
        let y = b.exps.get(i).copied().unwrap_or(0);
        let options: Vec<(u32, BigInt)> = (0..=x.min(y))
            .map(|k| {
                let m = factorial(x + y - k) / (factorial(k) * factorial(x - k) * factorial(y - k));
                (x + y - k, m)
            })
            .collect();
        if options.len() == 1 {
            for (v, _) in out.iter_mut() {
                v.push(options[0].0);
            }
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * options.len());
        for (v, c) in &out {
            for (e, m) in &options {
                let mut v2 = v.clone();
                v2.push(*e);
                next.push((v2, c * m));
            }
        }
        out = next;
    }
    out.into_iter().map(|(v, c)| (Monomial::from_exps(v), c)).collect()
}

/// Unique expansion of `p` in the binomial basis, through
/// `x^m = sum_j S(m, j) j! binom(x, j)` in each variable.
pub fn to_binomial_basis(p: &Polynomial) -> BinomialExpansion {
    let mut acc: HashMap<Monomial, Rational> = HashMap::new();
    for (m, c) in p.terms() {
        let mut partial: Vec<(Vec<u32>, BigInt)> = vec![(Vec::new(), BigInt::one())];
        for &e in m.exps() {
            let row = stirling2_row(e);
            let mut next = Vec::with_capacity(partial.len() * row.len());
            for (v, w) in &partial {
                for (j, s) in row.iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    let mut v2 = v.clone();
                    v2.push(j as u32);
                    next.push((v2, w * s * factorial(j as u32)));
                }
            }
            partial = next;
        }
        for (v, w) in partial {
            *acc.entry(Monomial::from_exps(v)).or_insert_with(Rational::zero) +=
                c * Rational::from_integer(w);
        }
    }
    BinomialExpansion {
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

/// `sum_alpha c_alpha binom(X, alpha)` as a polynomial.
pub fn from_binomial_basis(e: &BinomialExpansion) -> Polynomial {
    let mut out = Polynomial::zero();
    for (k, c) in &e.terms {
        out += &binom_from_key(k).scale(c);
    }
    out
}

// JSON forms.

struct ExpsMap<'a>(&'a Monomial);

impl Serialize for ExpsMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (v, e) in self.0.factors() {
            map.serialize_entry(&v.to_string(), &e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct MonomialTermOut<'a> {
    exps: ExpsMap<'a>,
    coeff: String,
}

#[derive(Serialize)]
struct BinomialTermOut {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize)]
struct PolyOut<T> {
    basis: &'static str,
    terms: Vec<T>,
}

#[derive(Deserialize)]
struct PolyIn {
    basis: String,
    terms: Vec<TermIn>,
}

#[derive(Deserialize)]
struct TermIn {
    #[serde(default)]
    exps: Option<BTreeMap<String, u32>>,
    #[serde(default)]
    partition: Option<Partition>,
    coeff: String,
}

impl Polynomial {
    /// `{"basis":"monomial","terms":[{"exps":{"1":2},"coeff":"1/2"}, ...]}`,
    /// terms in descending canonical order.
    pub fn to_json(&self) -> String {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| MonomialTermOut { exps: ExpsMap(m), coeff: format_rational(c) })
            .collect();
        serde_json::to_string(&PolyOut { basis: "monomial", terms }).expect("serializable")
    }

    /// Accepts either the monomial or the binomial JSON form.
    pub fn from_json(text: &str) -> Result<Polynomial> {
        let parsed: PolyIn = serde_json::from_str(text)?;
        match parsed.basis.as_str() {
            "monomial" => {
                let mut p = Polynomial::zero();
                for t in parsed.terms {
                    let exps = t
                        .exps
                        .ok_or_else(|| Error::Parse("monomial term without \"exps\"".into()))?;
                    let mut m = Monomial::one();
                    for (v, e) in exps {
                        let v: u32 = v
                            .parse()
                            .ok()
                            .filter(|&v| v >= 1)
                            .ok_or_else(|| Error::Parse(format!("bad variable index {v:?}")))?;
                        m = m.mul(&Monomial::var_pow(v, e));
                    }
                    p.add_term(m, parse_rational(&t.coeff)?);
                }
                Ok(p)
            }
            "binomial" => {
                let mut e = BinomialExpansion::zero();
                for t in parsed.terms {
                    let alpha = t.partition.ok_or_else(|| {
                        Error::Parse("binomial term without \"partition\"".into())
                    })?;
                    e.add_term(Monomial::from_partition(&alpha), parse_rational(&t.coeff)?);
                }
                Ok(from_binomial_basis(&e))
            }
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

impl BinomialExpansion {
    /// `{"basis":"binomial","terms":[{"partition":[1,1],"coeff":"2"}, ...]}`,
    /// terms ordered by the canonical order of their multiplicity monomials, descending.
    pub fn to_json(&self) -> String {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| BinomialTermOut { partition: k.to_partition(), coeff: format_rational(c) })
            .collect();
        serde_json::to_string(&PolyOut { basis: "binomial", terms }).expect("serializable")
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (key, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let label = format!("B{}", key.to_partition());
            if a.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{}*{label}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
