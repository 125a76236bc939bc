//! Character polynomials: symmetric and exterior powers (`H_d`, `E_d`), Weyl
//! modules (`S_lambda`), Specht modules (`q_mu`), the duality involution, and
//! the map `Phi` from symmetric functions in the power-sum basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{mn_character, partitions_of, Partition};
use crate::poly::{binom_var, from_binomial_basis, multichoose_var, BinomialExpansion, Monomial, Polynomial};
use crate::rational::{divisors, mobius, Rational};
use crate::series::{expand_power_neg, Series, Truncation};

/// Longest partition accepted by [`weyl_poly_via_genfun`].
pub const GENFUN_MAX_LENGTH: usize = 4;

/// Number of `i`-cycles of a permutation, for each `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCounts {
    counts: Vec<u64>,
}

impl CycleCounts {
    /// `counts[i - 1]` is the number of `i`-cycles.
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        CycleCounts { counts }
    }

    pub fn of_cycle_type(alpha: &Partition) -> Self {
        CycleCounts::new(
            alpha.exponential().multiplicities.iter().map(|&a| a as u64).collect(),
        )
    }

    /// The identity of `S_n`.
    pub fn identity(n: u64) -> Self {
        CycleCounts::new(vec![n])
    }

    pub fn get(&self, i: u32) -> u64 {
        self.counts.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// `sum_i i * X_i(w)`, the degree of the symmetric group.
    pub fn n(&self) -> u64 {
        self.counts.iter().enumerate().map(|(i, &c)| (i as u64 + 1) * c).sum()
    }
}

pub fn eval_at(p: &Polynomial, counts: &CycleCounts) -> Rational {
    p.evaluate(|i| Rational::from_integer(counts.get(i).into()))
}

static H_MEMO: LazyLock<RwLock<HashMap<u32, Polynomial>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));
static E_MEMO: LazyLock<RwLock<HashMap<u32, Polynomial>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn memoized(
    memo: &RwLock<HashMap<u32, Polynomial>>,
    d: u32,
    build: impl FnOnce() -> Polynomial,
) -> Polynomial {
    if let Some(p) = memo.read().unwrap().get(&d) {
        return p.clone();
    }
    let p = build();
    memo.write().unwrap().insert(d, p.clone());
    p
}

/// Character polynomial of `Sym^d`: `sum_{alpha |- d} prod_i mch(X_i, a_i)`.
/// Zero for `d < 0`.
pub fn h_poly(d: i64) -> Polynomial {
    if d < 0 {
        return Polynomial::zero();
    }
    let d = d as u32;
    memoized(&H_MEMO, d, || {
        let mut total = Polynomial::zero();
        for alpha in partitions_of(d) {
            let term = alpha
                .exponential()
                .multiplicities
                .iter()
                .enumerate()
                .fold(Polynomial::one(), |acc, (i, &a)| &acc * &multichoose_var(i as u32 + 1, a));
            total += &term;
        }
        total
    })
}

/// Character polynomial of `/\^d`:
/// `sum_{alpha |- d} (-1)^{a_2 + a_4 + ...} prod_i binom(X_i, a_i)`. Zero for `d < 0`.
pub fn e_poly(d: i64) -> Polynomial {
    if d < 0 {
        return Polynomial::zero();
    }
    let d = d as u32;
    memoized(&E_MEMO, d, || {
        let mut total = Polynomial::zero();
        for alpha in partitions_of(d) {
            let mult = alpha.exponential().multiplicities;
            let even_parts: u32 = mult.iter().skip(1).step_by(2).sum();
            let term = mult
                .iter()
                .enumerate()
                .fold(Polynomial::one(), |acc, (i, &a)| &acc * &binom_var(i as u32 + 1, a));
            if even_parts % 2 == 1 {
                total += &(-term);
            } else {
                total += &term;
            }
        }
        total
    })
}

/// `H_{c_1} H_{c_2} ...` for a composition `c`.
pub fn h_product(parts: &[u32]) -> Polynomial {
    parts.iter().fold(Polynomial::one(), |acc, &c| &acc * &h_poly(c as i64))
}

/// `E_{c_1} E_{c_2} ...` for a composition `c`.
pub fn e_product(parts: &[u32]) -> Polynomial {
    parts.iter().fold(Polynomial::one(), |acc, &c| &acc * &e_poly(c as i64))
}

/// Leibniz expansion, skipping zero entries.
fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    fn go(
        m: &[Vec<Polynomial>],
        row: usize,
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        partial: &Polynomial,
        total: &mut Polynomial,
    ) {
        let n = m.len();
        if row == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            if inversions % 2 == 1 {
                *total += &(-partial);
            } else {
                *total += partial;
            }
            return;
        }
        for col in 0..n {
            if used[col] || m[row][col].is_zero() {
                continue;
            }
            used[col] = true;
            perm.push(col);
            let next = partial * &m[row][col];
            go(m, row + 1, used, perm, &next, total);
            perm.pop();
            used[col] = false;
        }
    }
    let mut total = Polynomial::zero();
    go(m, 0, &mut vec![false; m.len()], &mut Vec::new(), &Polynomial::one(), &mut total);
    total
}

fn jacobi_trudi(parts: &[u32], entry: fn(i64) -> Polynomial) -> Polynomial {
    let l = parts.len();
    let m: Vec<Vec<Polynomial>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| entry(parts[i] as i64 + j as i64 - i as i64))
                .collect()
        })
        .collect();
    determinant(&m)
}

/// `det(H_{lambda_i + j - i})`.
pub fn weyl_poly_jt_h(lambda: &Partition) -> Polynomial {
    jacobi_trudi(lambda.parts(), h_poly)
}

/// `det(E_{lambda'_i + j - i})`.
pub fn weyl_poly_jt_e(lambda: &Partition) -> Polynomial {
    jacobi_trudi(lambda.conjugate().parts(), e_poly)
}

/// Character polynomial `S_lambda` of the Weyl module `W_lambda`, from the
/// smaller of the two Jacobi–Trudi determinants.
pub fn weyl_poly(lambda: &Partition) -> Polynomial {
    if lambda.len() <= lambda.first() as usize {
        weyl_poly_jt_h(lambda)
    } else {
        weyl_poly_jt_e(lambda)
    }
}

/// `S_lambda` as the coefficient of `t^lambda` in
/// `prod_{i<j} (1 - t_j/t_i) prod_r prod_i (1 - t_r^i)^{-X_i}`.
///
/// Multiplying through by `prod_r t_r^{l-r}` turns the prefactor into the
/// Vandermonde product `prod_{i<j} (t_i - t_j)`; the coefficient is then read
/// at `t_r^{lambda_r + l - r}`.
pub fn weyl_poly_via_genfun(lambda: &Partition) -> Result<Polynomial> {
    let l = lambda.len();
    if l > GENFUN_MAX_LENGTH {
        return Err(Error::LengthBound { len: l, max: GENFUN_MAX_LENGTH });
    }
    if l == 0 {
        return Ok(Polynomial::one());
    }
    let target: Vec<u32> = (0..l).map(|r| lambda.part(r) + (l - 1 - r) as u32).collect();
    let names: Vec<String> = (1..=l).map(|r| format!("t{r}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let trunc = Truncation { per_var: target.clone(), total: None };

    let mut acc: Series<Polynomial> = Series::one(&names, trunc.clone());
    for i in 0..l {
        for j in i + 1..l {
            let mut diff = acc.empty_like();
            let mut ei = vec![0; l];
            ei[i] = 1;
            let mut ej = vec![0; l];
            ej[j] = 1;
            diff.add_term(ei, Polynomial::one());
            diff.add_term(ej, -Polynomial::one());
            acc = acc.mul(&diff)?;
        }
    }
    for (r, &bound) in target.iter().enumerate() {
        for i in 1..=bound {
            acc = acc.mul(&expand_power_neg(&names, &trunc, r, i))?;
        }
    }
    Ok(acc.coeff(&target))
}

/// Character polynomial `q_mu` of the Specht modules `V_{mu[n]}`:
/// `sum_{mu - nu vertical strip} (-1)^{|mu|-|nu|} sum_{alpha |- |nu|} chi_nu(alpha) binom(X, alpha)`.
pub fn specht_poly(mu: &Partition) -> Polynomial {
    from_binomial_basis(&specht_binomial(mu))
}

/// `q_mu` in the binomial basis.
pub fn specht_binomial(mu: &Partition) -> BinomialExpansion {
    let mut terms = Vec::new();
    for nu in mu.vertical_strip_subpartitions() {
        let negative = (mu.size() - nu.size()) % 2 == 1;
        for alpha in partitions_of(nu.size()) {
            let chi = mn_character(&nu, &alpha).expect("sizes agree");
            let c = Rational::from_integer(if negative { -chi } else { chi });
            terms.push((alpha, c));
        }
    }
    BinomialExpansion::from_partitions(terms)
}

/// The involution `X^mu -> (-1)^{d - (mu_1 + ... + mu_m)} X^mu`, where the
/// sign uses the total exponent of the monomial, not its graded degree.
pub fn tau(d: u32, p: &Polynomial) -> Polynomial {
    p.map_terms(|m, c| {
        if (d as i64 - m.total_degree() as i64).rem_euclid(2) == 1 {
            -c
        } else {
            c.clone()
        }
    })
}

/// A symmetric function in the power-sum basis. Variable `k` of the wrapped
/// polynomial is `p_k`, so graded degree matches `deg p_k = k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc(pub Polynomial);

impl SymFunc {
    pub fn p(k: u32) -> SymFunc {
        SymFunc(Polynomial::var(k))
    }

    /// `p_alpha = p_{alpha_1} p_{alpha_2} ...`.
    pub fn p_alpha(alpha: &Partition) -> SymFunc {
        SymFunc(Polynomial::term(Monomial::from_partition(alpha), Rational::one()))
    }

    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        SymFunc(&self.0 * &other.0)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_string().replace('X', "p"))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Image of `p_k`: `sum_{d | k} d X_d`.
pub fn phi_gen(k: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for d in divisors(k) {
        out += &Polynomial::var(d).scale(&Rational::from_integer(d.into()));
    }
    out
}

/// The ring map `p_k -> sum_{d | k} d X_d`.
pub fn phi(f: &SymFunc) -> Polynomial {
    f.0.substitute(phi_gen)
}

/// Preimage of `X_k`: `(1/k) sum_{d | k} mu(k/d) p_d`.
pub fn phi_inverse_gen(k: u32) -> SymFunc {
    assert!(k >= 1);
    let mut out = Polynomial::zero();
    for d in divisors(k) {
        let m = mobius(k / d);
        if m != 0 {
            out += &Polynomial::var(d).scale(&Rational::new(m.into(), k.into()));
        }
    }
    SymFunc(out)
}

pub fn phi_inverse(p: &Polynomial) -> SymFunc {
    SymFunc(p.substitute(|k| phi_inverse_gen(k).0))
}

/// `s_lambda = sum_{alpha |- |lambda|} chi_lambda(alpha) / z_alpha * p_alpha`.
pub fn schur_in_powersums(lambda: &Partition) -> SymFunc {
    let mut out = Polynomial::zero();
    for alpha in partitions_of(lambda.size()) {
        let chi = mn_character(lambda, &alpha).expect("sizes agree");
        if chi.is_zero() {
            continue;
        }
        out.add_term(Monomial::from_partition(&alpha), Rational::new(chi, alpha.z()));
    }
    SymFunc(out)
}

/// Dimension of `W_lambda(K^n)`, from `S_lambda` at the identity.
pub fn weyl_dimension(lambda: &Partition, n: u64) -> Rational {
    eval_at(&weyl_poly(lambda), &CycleCounts::identity(n))
}
