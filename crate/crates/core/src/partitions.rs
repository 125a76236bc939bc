//! Integer partitions and symmetric-group character values.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial};

/// A weakly decreasing list of positive integers.
///
/// The `Ord` impl is the global enumeration order: by size first, then
/// reverse-lexicographic within a size, so `(4) < (3,1) < (2,2) < (2,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing and positive"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn exponential(&self) -> ExponentialForm {
        let mut mult = vec![0u32; self.first() as usize];
        for &p in &self.parts {
            mult[p as usize - 1] += 1;
        }
        ExponentialForm { multiplicities: mult }
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The padded partition `(n - |mu|, mu_1, mu_2, ...)`.
    pub fn pad(&self, n: u32) -> Result<Partition> {
        let size = self.size();
        let first = self.first();
        if n < size + first {
            return Err(Error::PadTooSmall { size, first, n });
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(n - size);
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// All `mu` inside `self` such that `self - mu` is a vertical strip,
    /// `self` itself first.
    pub fn vertical_strip_subpartitions(&self) -> Vec<Partition> {
        let l = self.len();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << l) {
            // row 0 is the most significant choice
            let parts: Vec<u32> = (0..l)
                .map(|i| self.parts[i] - ((mask >> (l - 1 - i)) & 1) as u32)
                .collect();
            if let Ok(p) = Partition::new(parts) {
                out.push(p);
            }
        }
        out
    }

    /// Centralizer order of a permutation of this cycle type.
    pub fn z(&self) -> BigInt {
        self.exponential()
            .multiplicities
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, &a)| {
                acc * BigInt::from(i as u32 + 1).pow(a) * factorial(a)
            })
    }

    /// Whether `self` contains `other` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Command-line syntax: `3,1`; the empty partition is `0`, `empty` or ``.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s.eq_ignore_ascii_case("empty") {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("malformed shape {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {s:?}")));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<&[u32]> for Partition {
    type Error = Error;

    fn try_from(parts: &[u32]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// `1^{a_1} 2^{a_2} ...`; `multiplicities[i - 1]` is the number of parts equal to `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentialForm {
    pub multiplicities: Vec<u32>,
}

impl ExponentialForm {
    /// Trailing zero multiplicities are ignored.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &a) in self.multiplicities.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i as u32 + 1, a as usize));
        }
        Partition { parts }
    }

    pub fn size(&self) -> u32 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u32 + 1) * a)
            .sum()
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size `0..=max`, blocks in increasing size.
pub fn partitions_up_to(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

type CharKey = (Partition, Partition);

static MN_MEMO: LazyLock<RwLock<HashMap<CharKey, BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Irreducible character `chi_lambda` of `S_|lambda|` at cycle type `alpha`
/// (Murnaghan–Nakayama rule).
pub fn mn_character(lambda: &Partition, alpha: &Partition) -> Result<BigInt> {
    if lambda.size() != alpha.size() {
        return Err(Error::SizeMismatch(format!(
            "character of {lambda} evaluated at cycle type {alpha}"
        )));
    }
    Ok(mn_rec(lambda, alpha))
}

fn mn_rec(lambda: &Partition, alpha: &Partition) -> BigInt {
    if alpha.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), alpha.clone());
    if let Some(v) = MN_MEMO.read().unwrap().get(&key) {
        return v.clone();
    }
    let k = alpha.parts[0];
    let rest = Partition { parts: alpha.parts[1..].to_vec() };
    let mut total = BigInt::zero();
    for (sign_negative, smaller) in remove_rim_hooks(lambda, k) {
        let v = mn_rec(&smaller, &rest);
        if sign_negative {
            total -= v;
        } else {
            total += v;
        }
    }
    MN_MEMO.write().unwrap().insert(key, total.clone());
    total
}

/// Every way of removing a border strip of length `k`, with whether its
/// height (rows minus one) is odd.
fn remove_rim_hooks(lambda: &Partition, k: u32) -> Vec<(bool, Partition)> {
    let l = lambda.len() as u32;
    let beta: Vec<u32> = lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&g| g > target && g < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &g)| g - (l - 1 - i as u32))
            .collect::<Vec<_>>();
        out.push((crossed % 2 == 1, Partition::from_unsorted(parts)));
    }
    out
}

/// Every character value of `S_d` as `(lambda, alpha, chi_lambda(alpha))`,
/// both indices in enumeration order.
pub fn character_table(d: u32) -> Vec<(Partition, Partition, BigInt)> {
    let ps = partitions_of(d);
    let mut out = Vec::with_capacity(ps.len() * ps.len());
    for lambda in &ps {
        for alpha in &ps {
            out.push((lambda.clone(), alpha.clone(), mn_rec(lambda, alpha)));
        }
    }
    out
}

/// Seeds the character memo with externally stored values.
pub fn seed_character_values(values: impl IntoIterator<Item = (Partition, Partition, BigInt)>) {
    let mut memo = MN_MEMO.write().unwrap();
    for (l, a, v) in values {
        memo.entry((l, a)).or_insert(v);
    }
}

/// Character of the permutation action of `S_d` on ordered set partitions
/// with block sizes `lambda`, at cycle type `alpha`.
///
/// Sums, over arrays `b[i][j]` with row sums `sum_j j*b[i][j] = lambda_i` and
/// column sums `sum_i b[i][j] = a_j`, the product over `j` of multinomials
/// `a_j! / prod_i b[i][j]!`.
pub fn sigma_character(lambda: &Partition, alpha: &Partition) -> Result<BigInt> {
    if lambda.size() != alpha.size() {
        return Err(Error::SizeMismatch(format!(
            "sigma character of {lambda} evaluated at cycle type {alpha}"
        )));
    }
    let mut avail = alpha.exponential().multiplicities;
    Ok(sigma_rows(&lambda.parts, &mut avail))
}

fn sigma_rows(rows: &[u32], avail: &mut [u32]) -> BigInt {
    match rows.split_first() {
        None => {
            if avail.iter().all(|&a| a == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        Some((&row, rest)) => {
            let mut total = BigInt::zero();
            fill_row(row, avail.len(), avail, BigInt::one(), rest, &mut total);
            total
        }
    }
}

/// Chooses `b[j]` for cycle lengths `j = len, len-1, ..., 1` in the current row.
fn fill_row(
    remaining: u32,
    len: usize,
    avail: &mut [u32],
    weight: BigInt,
    rest: &[u32],
    total: &mut BigInt,
) {
    if len == 0 {
        if remaining == 0 {
            *total += weight * sigma_rows(rest, avail);
        }
        return;
    }
    let j = len as u32;
    let max_b = (remaining / j).min(avail[len - 1]);
    for b in 0..=max_b {
        let a = avail[len - 1];
        let w = &weight * binomial(a as u64, b as u64);
        avail[len - 1] -= b;
        fill_row(remaining - b * j, len - 1, avail, w, rest, total);
        avail[len - 1] += b;
    }
}
