//! Moments of character polynomials, stable restriction and Kronecker
//! coefficients, vector partitions, and the generating functions for mixed
//! moments of symmetric and exterior powers.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::charpoly::{e_poly, eval_at, h_poly, specht_binomial, weyl_poly, CycleCounts};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::poly::{binom_elem, to_binomial_basis, BinomialExpansion, Polynomial};
use crate::rational::{as_nonneg_integer, binomial, factorial, Rational};
use crate::series::{Series, Truncation};

/// Largest number of coefficients a generating-function check may expand.
pub const SERIES_BUDGET: u64 = 1_000_000;

fn binomial_moment(e: &BinomialExpansion, n: u32) -> Rational {
    let mut total = Rational::zero();
    for (key, c) in e.raw_terms() {
        if key.graded_degree() <= n {
            total += c / Rational::from_integer(key.to_partition().z());
        }
    }
    total
}

/// `<p>_n`: the average of `p` over `S_n`. Each `binom(X, alpha)` contributes
/// `1/z_alpha` when `|alpha| <= n` and nothing otherwise.
pub fn moment_n(p: &Polynomial, n: u32) -> Rational {
    binomial_moment(&to_binomial_basis(p), n)
}

/// `<f_1 f_2 ... >_n` without expanding the full product: only binomial
/// indices of weight at most `n` can contribute.
pub fn moment_of_product(factors: &[&BinomialExpansion], n: u32) -> Rational {
    let mut acc = BinomialExpansion::from_partitions([(Partition::empty(), Rational::one())]);
    for f in factors {
        acc = acc.mul_truncated(f, Some(n));
    }
    binomial_moment(&acc, n)
}

/// The moment at `n = graded degree`, past which `<p>_n` no longer changes.
pub fn stable_moment(p: &Polynomial) -> Rational {
    match p.graded_degree() {
        Ok(d) => moment_n(p, d),
        Err(_) => Rational::zero(),
    }
}

/// Conjugacy classes of `S_n` with integer weights `n!/z_beta`.
struct ClassData {
    factorial: BigInt,
    classes: Vec<(BigInt, CycleCounts)>,
}

static CLASS_DATA: LazyLock<RwLock<HashMap<u32, Arc<ClassData>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn class_data(n: u32) -> Arc<ClassData> {
    if let Some(d) = CLASS_DATA.read().unwrap().get(&n) {
        return d.clone();
    }
    let f = factorial(n);
    let classes = partitions_of(n)
        .into_iter()
        .map(|beta| (&f / beta.z(), CycleCounts::of_cycle_type(&beta)))
        .collect();
    let d = Arc::new(ClassData { factorial: f, classes });
    CLASS_DATA.write().unwrap().insert(n, d.clone());
    d
}

/// `(1/n!) sum_{w in S_n} p(w)`, summed class by class.
pub fn moment_by_class_average(p: &Polynomial, n: u32) -> Rational {
    let data = class_data(n);
    let mut total = Rational::zero();
    for (weight, counts) in &data.classes {
        total += eval_at(p, counts) * Rational::from_integer(weight.clone());
    }
    total / Rational::from_integer(data.factorial.clone())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum PowerKind {
    Sym,
    Alt,
}

type ValueKey = (PowerKind, u32, u32);

static POWER_VALUES: LazyLock<RwLock<HashMap<ValueKey, Arc<Vec<BigInt>>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Values of `H_d` or `E_d` on every class of `S_n`, in `partitions_of(n)` order.
fn power_values(kind: PowerKind, d: u32, n: u32) -> Arc<Vec<BigInt>> {
    let key = (kind, d, n);
    if let Some(v) = POWER_VALUES.read().unwrap().get(&key) {
        return v.clone();
    }
    let p = match kind {
        PowerKind::Sym => h_poly(d as i64),
        PowerKind::Alt => e_poly(d as i64),
    };
    let values: Vec<BigInt> = class_data(n)
        .classes
        .iter()
        .map(|(_, counts)| {
            let v = eval_at(&p, counts);
            assert!(v.is_integer(), "character values are integers");
            v.to_integer()
        })
        .collect();
    let values = Arc::new(values);
    POWER_VALUES.write().unwrap().insert(key, values.clone());
    values
}

/// `<H_lambda E_mu>_n` for compositions `lambda` and `mu` (zero parts allowed),
/// averaged over the conjugacy classes of `S_n` with exact integer weights.
pub fn mixed_moment(lambda: &[u32], mu: &[u32], n: u32) -> Rational {
    let data = class_data(n);
    let factors: Vec<Arc<Vec<BigInt>>> = lambda
        .iter()
        .filter(|&&a| a > 0)
        .map(|&a| power_values(PowerKind::Sym, a, n))
        .chain(mu.iter().filter(|&&b| b > 0).map(|&b| power_values(PowerKind::Alt, b, n)))
        .collect();
    let mut total = BigInt::zero();
    for (k, (weight, _)) in data.classes.iter().enumerate() {
        let mut term = weight.clone();
        for f in &factors {
            if f[k].is_zero() {
                term = BigInt::zero();
                break;
            }
            term *= &f[k];
        }
        total += term;
    }
    Rational::new(total, data.factorial.clone())
}

/// `<H_lambda E_mu>` at `n = sum(lambda) + sum(mu)`.
pub fn stable_mixed_moment(lambda: &[u32], mu: &[u32]) -> Rational {
    let n = lambda.iter().sum::<u32>() + mu.iter().sum::<u32>();
    mixed_moment(lambda, mu, n)
}

fn nonneg_integer(value: Rational, what: impl FnOnce() -> String) -> Result<u64> {
    as_nonneg_integer(&value)
        .ok_or_else(|| Error::Internal(format!("{} = {} is not a nonnegative integer", what(), value)))
}

fn graded_or_zero(e: &BinomialExpansion) -> u32 {
    e.raw_terms().map(|(k, _)| k.graded_degree()).max().unwrap_or(0)
}

/// Stable multiplicity `r_{lambda mu}` of `V_{mu[n]}` in `W_lambda(K^n)`.
pub fn restriction_coeff_stable(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let s = to_binomial_basis(&weyl_poly(lambda));
    let q = specht_binomial(mu);
    stable_restriction_from(lambda, mu, &s, &q)
}

fn stable_restriction_from(
    lambda: &Partition,
    mu: &Partition,
    s: &BinomialExpansion,
    q: &BinomialExpansion,
) -> Result<u64> {
    let n = graded_or_zero(s) + graded_or_zero(q);
    nonneg_integer(moment_of_product(&[s, q], n), || format!("r[{lambda}, {mu}]"))
}

/// `r_{lambda mu}(n)`, defined once `mu[n]` is a partition.
pub fn restriction_coeff_at(lambda: &Partition, mu: &Partition, n: u32) -> Result<u64> {
    mu.pad(n)?;
    let s = to_binomial_basis(&weyl_poly(lambda));
    let q = specht_binomial(mu);
    nonneg_integer(moment_of_product(&[&s, &q], n), || format!("r[{lambda}, {mu}]({n})"))
}

/// Stable Kronecker coefficient `<q_lambda q_mu q_nu>`.
pub fn kronecker_stable(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() || mu.size() != nu.size() {
        return Err(Error::SizeMismatch(format!(
            "{lambda}, {mu}, {nu} are not partitions of one integer"
        )));
    }
    let qs = [specht_binomial(lambda), specht_binomial(mu), specht_binomial(nu)];
    let n = qs.iter().map(graded_or_zero).sum();
    nonneg_integer(moment_of_product(&[&qs[0], &qs[1], &qs[2]], n), || {
        format!("g[{lambda}, {mu}, {nu}]")
    })
}

/// `dim W_lambda(K^n)^{S_n}`.
pub fn invariant_dim(lambda: &Partition, n: u32) -> Result<u64> {
    nonneg_integer(moment_n(&weyl_poly(lambda), n), || format!("<S{lambda}>_{n}"))
}

/// Whether `invariant_dim(lambda, n)` is weakly increasing for `1 <= n <= n_max`.
pub fn monotonicity_check(lambda: &Partition, n_max: u32) -> Result<bool> {
    let s = to_binomial_basis(&weyl_poly(lambda));
    let mut prev = 0;
    for n in 1..=n_max {
        let dim = nonneg_integer(binomial_moment(&s, n), || format!("<S{lambda}>_{n}"))?;
        if dim < prev {
            return Ok(false);
        }
        prev = dim;
    }
    Ok(true)
}

/// Whether a count is for exactly `n` parts or at most `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartsMode {
    Exact,
    AtMost,
}

/// Vector-partition counts `p_k(v)` for every `v` in a box and every `k` up to
/// a bound.
///
/// Nonzero vectors in the box are taken as parts one at a time in colex
/// order, and each is used any number of times. A multiset is then counted
/// once, by the order in which its parts were admitted.
pub struct VectorPartitionTable {
    bound: Vec<u32>,
    max_parts: u32,
    counts: Vec<Vec<u128>>,
}

impl VectorPartitionTable {
    pub fn new(bound: &[u32], max_parts: u32) -> Self {
        let size: usize = bound.iter().map(|&b| b as usize + 1).product();
        let mut counts = vec![vec![0u128; max_parts as usize + 1]; size];
        counts[0][0] = 1;
        let table = VectorPartitionTable { bound: bound.to_vec(), max_parts, counts: Vec::new() };
        // index() is colex: the first coordinate varies fastest
        for part in 1..size {
            let pv = table.unindex(part);
            for target in 0..size {
                let tv = table.unindex(target);
                if tv.iter().zip(&pv).any(|(t, p)| t < p) {
                    continue;
                }
                let rest: Vec<u32> = tv.iter().zip(&pv).map(|(t, p)| t - p).collect();
                let r = table.index(&rest);
                for k in 1..=max_parts as usize {
                    let add = counts[r][k - 1];
                    counts[target][k] += add;
                }
            }
        }
        VectorPartitionTable { counts, ..table }
    }

    fn index(&self, v: &[u32]) -> usize {
        let mut idx = 0;
        for (i, &x) in v.iter().enumerate().rev() {
            idx = idx * (self.bound[i] as usize + 1) + x as usize;
        }
        idx
    }

    fn unindex(&self, mut idx: usize) -> Vec<u32> {
        self.bound
            .iter()
            .map(|&b| {
                let x = idx % (b as usize + 1);
                idx /= b as usize + 1;
                x as u32
            })
            .collect()
    }

    /// `p_n(v)` or `p_{<=n}(v)`. Vectors outside the box, or counts needing
    /// more parts than the table holds, panic; a negative coordinate gives 0.
    pub fn count(&self, v: &[i64], n: u32, mode: PartsMode) -> u128 {
        if v.iter().any(|&x| x < 0) {
            return 0;
        }
        let v: Vec<u32> = v.iter().map(|&x| x as u32).collect();
        assert!(
            v.len() == self.bound.len() && v.iter().zip(&self.bound).all(|(x, b)| x <= b),
            "vector {v:?} outside table bound {:?}",
            self.bound
        );
        // a vector with total t has at most t nonzero parts
        let useful = n.min(v.iter().sum());
        assert!(useful <= self.max_parts, "table holds at most {} parts", self.max_parts);
        let row = &self.counts[self.index(&v)];
        match mode {
            PartsMode::Exact if n > useful => 0,
            PartsMode::Exact => row[n as usize],
            PartsMode::AtMost => row[..=useful as usize].iter().sum(),
        }
    }
}

/// `p_n(v)` (exact) or `p_{<=n}(v)` (at most).
pub fn vector_partitions(v: &[u32], n: u32, mode: PartsMode) -> u128 {
    let total: u32 = v.iter().sum();
    let table = VectorPartitionTable::new(v, total);
    let v: Vec<i64> = v.iter().map(|&x| x as i64).collect();
    table.count(&v, n, mode)
}

/// `dim W_lambda(K^n)^{S_n} = sum_{w in S_l} sgn(w) p_{<=n}(lambda_i - i + w(i))`.
pub fn invariant_dim_via_vp(lambda: &Partition, n: u32) -> Result<u64> {
    let l = lambda.len();
    if l == 0 {
        return Ok(1);
    }
    let bound: Vec<u32> = (0..l).map(|i| lambda.part(i) + (l - 1 - i) as u32).collect();
    let table = VectorPartitionTable::new(&bound, lambda.size());
    let mut total: i128 = 0;
    for w in (0..l).permutations(l) {
        let v: Vec<i64> = (0..l).map(|i| lambda.part(i) as i64 - i as i64 + w[i] as i64).collect();
        let c = table.count(&v, n, PartsMode::AtMost) as i128;
        if permutation_is_odd(&w) {
            total -= c;
        } else {
            total += c;
        }
    }
    u64::try_from(total)
        .map_err(|_| Error::Internal(format!("alternating sum for {lambda} at n = {n} is {total}")))
}

fn permutation_is_odd(w: &[usize]) -> bool {
    let inversions = (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count();
    inversions % 2 == 1
}

/// Closed form for `p_2(k, l)`.
pub fn p2_closed(k: u64, l: u64) -> u64 {
    if k.is_multiple_of(2) && l.is_multiple_of(2) {
        ((k + 1) * (l + 1) - 1) / 2
    } else {
        (k + 1) * (l + 1) / 2 - 1
    }
}

/// Closed form for `p_3(k, l)` by counting fixed ordered triples (Burnside).
pub fn p3_closed(k: u64, l: u64) -> u64 {
    let (k, l) = (k as i128, l as i128);
    let a = (k + 2) * (k + 1) / 2 * ((l + 2) * (l + 1) / 2) - 3 * (k + 1) * (l + 1) + 3;
    let b = match (k % 2, l % 2) {
        (0, 0) => (k / 2 + 1) * (l / 2 + 1) - 2,
        (1, 0) => (k + 1) * (l + 2) / 4 - 1,
        (0, 1) => (k + 2) * (l + 1) / 4 - 1,
        _ => (k + 1) * (l + 1) / 4 - 1,
    };
    let c = if k % 3 == 0 && l % 3 == 0 { 1 } else { 0 };
    let total = a + 3 * b + 2 * c;
    debug_assert_eq!(total % 6, 0);
    (total / 6) as u64
}

/// Predicted positivity of the stable moment of `S_lambda` for a partition
/// with at most two rows: positive unless `lambda = (1,1)`.
pub fn criterion_two_row(lambda: &Partition) -> Result<bool> {
    if lambda.len() > 2 {
        return Err(Error::ShapeMismatch(format!("{lambda} has more than two rows")));
    }
    Ok(lambda.parts() != [1, 1])
}

/// Predicted stable moment of `S_lambda` for a nonempty partition with at
/// most two columns: 2 if the columns are equal, 1 if they differ by one,
/// 0 otherwise.
pub fn criterion_two_column(lambda: &Partition) -> Result<u64> {
    if lambda.is_empty() || lambda.first() > 2 {
        return Err(Error::ShapeMismatch(format!("{lambda} is not a nonempty two-column shape")));
    }
    let cols = lambda.conjugate();
    let (c1, c2) = (cols.part(0), cols.part(1));
    Ok(match c1 - c2 {
        0 => 2,
        1 => 1,
        _ => 0,
    })
}

/// Predicted positivity for the hook `(a+1, 1^b)`: `a >= binom(b+1, 2)`.
pub fn criterion_hook(a: u32, b: u32) -> bool {
    BigInt::from(a) >= binomial(b as u64 + 1, 2)
}

/// The hook `(a+1, 1^b)`.
pub fn hook(a: u32, b: u32) -> Partition {
    let mut parts = vec![a + 1];
    parts.extend(std::iter::repeat_n(1, b as usize));
    Partition::new(parts).expect("hook shapes are partitions")
}

/// `(a, b)` with `lambda = (a+1, 1^b)`, if `lambda` is a nonempty hook.
pub fn as_hook(lambda: &Partition) -> Option<(u32, u32)> {
    if lambda.is_empty() || lambda.parts()[1..].iter().any(|&p| p != 1) {
        return None;
    }
    Some((lambda.first() - 1, lambda.len() as u32 - 1))
}

/// A table of multiplicities indexed by partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffTable {
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<u64>>,
}

/// Column-header spelling of a partition in CSV output: `3+1`, with `0` for
/// the empty partition.
pub fn partition_label(p: &Partition) -> String {
    if p.is_empty() {
        "0".to_string()
    } else {
        p.parts().iter().map(u32::to_string).join("+")
    }
}

impl CoeffTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    /// One line per row, entries separated by single spaces.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|row| row.iter().map(u64::to_string).join(" ") + "\n")
            .collect()
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<String> =
            std::iter::once(String::new()).chain(self.cols.iter().map(partition_label)).collect();
        w.write_record(&header).map_err(|e| Error::Internal(e.to_string()))?;
        for (p, row) in self.rows.iter().zip(&self.entries) {
            let record: Vec<String> = std::iter::once(partition_label(p))
                .chain(row.iter().map(u64::to_string))
                .collect();
            w.write_record(&record).map_err(|e| Error::Internal(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }
}

/// Stable restriction coefficients `r_{lambda mu}` for all `|lambda|, |mu| <= max`,
/// rows and columns ordered by size and then reverse-lexicographically. Cells
/// run on `jobs` threads (all cores if `None`); the result does not depend on it.
pub fn restriction_table(max: u32, jobs: Option<usize>) -> Result<CoeffTable> {
    let shapes = partitions_up_to(max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| {
        let weyl: Vec<BinomialExpansion> =
            shapes.par_iter().map(|l| to_binomial_basis(&weyl_poly(l))).collect();
        let specht: Vec<BinomialExpansion> = shapes.par_iter().map(specht_binomial).collect();
        let m = shapes.len();
        let cells: Vec<u64> = (0..m * m)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / m, idx % m);
                stable_restriction_from(&shapes[i], &shapes[j], &weyl[i], &specht[j])
            })
            .collect::<Result<_>>()?;
        Ok(CoeffTable {
            rows: shapes.clone(),
            cols: shapes.clone(),
            entries: cells.chunks(m).map(<[u64]>::to_vec).collect(),
        })
    })
}

/// The generating-function identities that [`verify_genfun`] can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenfunIdentity {
    /// `sum_n <binom(X, alpha)>_n v^n = v^{|alpha|} / (z_alpha (1 - v))`.
    BinomialMoments,
    /// `sum <H_lambda>_n t^lambda v^n = prod_R (1 - t^R v)^{-1}`.
    Hmomgen,
    /// `sum <H_i E_j> t^i u^j = prod_{k>=0} (1 + t^k u) / prod_{k>=1} (1 - t^k)`.
    He,
    /// Stable mixed moments `<H_lambda E_mu>`.
    Hlamu,
    /// Mixed moments `<H_lambda E_mu>_n` with `v` marking `n`.
    Hlaemu,
}

impl GenfunIdentity {
    pub const ALL: [GenfunIdentity; 5] = [
        GenfunIdentity::BinomialMoments,
        GenfunIdentity::Hmomgen,
        GenfunIdentity::He,
        GenfunIdentity::Hlamu,
        GenfunIdentity::Hlaemu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenfunIdentity::BinomialMoments => "binomial-moments",
            GenfunIdentity::Hmomgen => "hmomgen",
            GenfunIdentity::He => "he",
            GenfunIdentity::Hlamu => "hlamu",
            GenfunIdentity::Hlaemu => "hlaemu",
        }
    }
}

impl fmt::Display for GenfunIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sizes for [`verify_genfun`]: up to `l` variables `t`, `m` variables `u`,
/// and every exponent (including that of `v`) at most `max_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenfunBounds {
    pub l: usize,
    pub m: usize,
    pub max_exp: u32,
}

impl Default for GenfunBounds {
    fn default() -> Self {
        GenfunBounds { l: 2, m: 2, max_exp: 6 }
    }
}

/// A coefficient where the product and the moment disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenfunMismatch {
    /// Which case was expanded, e.g. `l=2 m=1`.
    pub case: String,
    pub vars: Vec<String>,
    pub exps: Vec<u32>,
    pub series: Rational,
    pub moment: Rational,
}

impl fmt::Display for GenfunMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = self
            .vars
            .iter()
            .zip(&self.exps)
            .filter(|(_, &e)| e > 0)
            .map(|(v, e)| format!("{v}^{e}"))
            .join("*");
        let mono = if mono.is_empty() { "1".to_string() } else { mono };
        write!(f, "[{}] coefficient of {}: product {}, moment {}", self.case, mono, self.series, self.moment)
    }
}

#[derive(Clone, Debug)]
pub struct GenfunReport {
    pub identity: GenfunIdentity,
    pub checked: usize,
    pub mismatches: Vec<GenfunMismatch>,
}

impl GenfunReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check_budget(nvars: usize, max_exp: u32) -> Result<()> {
    let size = (max_exp as u64 + 1).checked_pow(nvars as u32).unwrap_or(u64::MAX);
    if size > SERIES_BUDGET {
        return Err(Error::Infeasible(format!(
            "{nvars} variables truncated at degree {max_exp} need {size} coefficients (limit {SERIES_BUDGET})"
        )));
    }
    Ok(())
}

/// All exponent vectors of length `len` with entries in `0..=max`.
fn exponent_box(len: usize, max: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..len).map(|_| 0..=max).multi_cartesian_product_or_unit()
}

trait MultiCartesianOrUnit: Iterator + Sized {
    fn multi_cartesian_product_or_unit(self) -> Box<dyn Iterator<Item = Vec<u32>>>;
}

impl<I> MultiCartesianOrUnit for I
where
    I: Iterator<Item = std::ops::RangeInclusive<u32>> + Sized,
{
    fn multi_cartesian_product_or_unit(self) -> Box<dyn Iterator<Item = Vec<u32>>> {
        let ranges: Vec<_> = self.collect();
        if ranges.is_empty() {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(ranges.into_iter().multi_cartesian_product())
        }
    }
}

/// `prod_{R, S} (1 - (-1)^{|S|} u^S t^R [v])^{(-1)^{|S|+1}}` truncated, over
/// multisets `R` of `[l]` and subsets `S` of `[m]`. With `with_v` the factor
/// `R = S = {}` is `1/(1 - v)`; without it that factor is left out.
fn hlaemu_product(l: usize, m: usize, max_exp: u32, with_v: bool) -> Result<Series<Rational>> {
    let nvars = l + m + usize::from(with_v);
    check_budget(nvars, max_exp)?;
    let mut names: Vec<String> = (1..=l).map(|i| format!("t{i}")).collect();
    names.extend((1..=m).map(|j| format!("u{j}")));
    if with_v {
        names.push("v".into());
    }
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut acc: Series<Rational> = Series::one(&names, Truncation::uniform(nvars, max_exp));
    for r in exponent_box(l, max_exp) {
        for s in exponent_box(m, 1) {
            let mut exps = r.clone();
            exps.extend(&s);
            if with_v {
                exps.push(1);
            } else if exps.iter().all(|&e| e == 0) {
                continue;
            }
            if !acc.truncation().fits(&exps) {
                continue;
            }
            let odd = s.iter().sum::<u32>() % 2 == 1;
            let factor = if odd {
                acc.binomial_like(&exps, &Rational::one())
            } else {
                acc.geometric_like(&exps, &Rational::one())
            };
            acc = acc.mul(&factor)?;
        }
    }
    Ok(acc)
}

/// Expands the product side of `identity` as a truncated series and compares
/// every coefficient against the moment it should equal.
pub fn verify_genfun(identity: GenfunIdentity, bounds: GenfunBounds) -> Result<GenfunReport> {
    let max = bounds.max_exp;
    let widest = match identity {
        GenfunIdentity::BinomialMoments => 1,
        GenfunIdentity::Hmomgen => bounds.l + 1,
        GenfunIdentity::He => 2,
        GenfunIdentity::Hlamu => bounds.l + bounds.m,
        GenfunIdentity::Hlaemu => bounds.l + bounds.m + 1,
    };
    check_budget(widest, max)?;
    let mut report = GenfunReport { identity, checked: 0, mismatches: Vec::new() };
    let compare =
        |report: &mut GenfunReport, case: String, series: &Series<Rational>, exps: Vec<u32>, moment: Rational| {
            report.checked += 1;
            let got = series.coeff(&exps);
            if got != moment {
                report.mismatches.push(GenfunMismatch {
                    case,
                    vars: series.vars().to_vec(),
                    exps,
                    series: got,
                    moment,
                });
            }
        };
    match identity {
        GenfunIdentity::BinomialMoments => {
            for d in 0..=max {
                for alpha in partitions_of(d) {
                    let mut s: Series<Rational> = Series::zero(&["v"], Truncation::uniform(1, max));
                    s.add_term(vec![d], Rational::new(One::one(), alpha.z()));
                    let s = s.mul(&s.geometric_like(&[1], &Rational::one()))?;
                    let b = binom_elem(&alpha);
                    for n in 0..=max {
                        compare(&mut report, format!("alpha={alpha}"), &s, vec![n], moment_n(&b, n));
                    }
                }
            }
        }
        GenfunIdentity::Hmomgen => {
            for l in 1..=bounds.l {
                let s = hlaemu_product(l, 0, max, true)?;
                for e in exponent_box(l + 1, max) {
                    let moment = mixed_moment(&e[..l], &[], e[l]);
                    compare(&mut report, format!("l={l}"), &s, e, moment);
                }
            }
        }
        GenfunIdentity::He => {
            check_budget(2, max)?;
            let mut s: Series<Rational> = Series::one(&["t", "u"], Truncation::uniform(2, max));
            for k in 0..=max {
                s = s.mul(&s.binomial_like(&[k, 1], &Rational::one()))?;
            }
            for k in 1..=max {
                s = s.mul(&s.geometric_like(&[k, 0], &Rational::one()))?;
            }
            for e in exponent_box(2, max) {
                let moment = stable_mixed_moment(&e[..1], &e[1..]);
                compare(&mut report, "l=1 m=1".into(), &s, e, moment);
            }
        }
        GenfunIdentity::Hlamu | GenfunIdentity::Hlaemu => {
            let with_v = identity == GenfunIdentity::Hlaemu;
            for l in 0..=bounds.l {
                for m in 0..=bounds.m {
                    let s = hlaemu_product(l, m, max, with_v)?;
                    let width = l + m + usize::from(with_v);
                    let cells: Vec<(Vec<u32>, Rational)> = exponent_box(width, max)
                        .collect::<Vec<_>>()
                        .into_par_iter()
                        .map(|e| {
                            let moment = if with_v {
                                mixed_moment(&e[..l], &e[l..l + m], e[l + m])
                            } else {
                                stable_mixed_moment(&e[..l], &e[l..])
                            };
                            (e, moment)
                        })
                        .collect();
                    for (e, moment) in cells {
                        compare(&mut report, format!("l={l} m={m}"), &s, e, moment);
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `<S_lambda>` as an integer.
pub fn stable_weyl_moment(lambda: &Partition) -> Result<u64> {
    nonneg_integer(stable_moment(&weyl_poly(lambda)), || format!("<S{lambda}>"))
}
