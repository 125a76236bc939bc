//! Brute-force characters of symmetric and exterior powers, computed by
//! enumerating multisets and subsets, and restriction multiplicities obtained
//! from them by inner products over `S_n`. Nothing here goes through
//! character polynomials.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{mn_character, partitions_of, Partition};
use crate::rational::{as_nonneg_integer, binomial, Rational};

/// Largest number of multisets or subsets a single trace may enumerate.
pub const FEASIBILITY_LIMIT: u64 = 1_000_000;

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationWitness {
    images: Vec<u32>,
}

impl PermutationWitness {
    /// Validates a one-line image array (1-based).
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i == 0 || i > n || seen[i as usize - 1] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[i as usize - 1] = true;
        }
        Ok(PermutationWitness { images })
    }

    /// Cycles of `beta` written left to right: `(1 2 .. b_1)(b_1+1 ..)...`,
    /// then fixed points up to `n`.
    pub fn of_cycle_type(beta: &Partition, n: u32) -> Result<Self> {
        if beta.size() > n {
            return Err(Error::SizeMismatch(format!("{beta} does not fit in S_{n}")));
        }
        let mut images = Vec::with_capacity(n as usize);
        let mut start = 1;
        for &len in beta.parts() {
            images.extend(start + 1..start + len);
            images.push(start);
            start += len;
        }
        images.extend(start..=n);
        Ok(PermutationWitness { images })
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.images[i] as usize - 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }
}

impl fmt::Display for PermutationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(" "))
    }
}

fn feasible(count: BigInt, what: &str) -> Result<()> {
    if count > BigInt::from(FEASIBILITY_LIMIT) {
        return Err(Error::Infeasible(format!(
            "{what} needs {count} enumeration steps (limit {FEASIBILITY_LIMIT})"
        )));
    }
    Ok(())
}

/// Trace of `w` on `Sym^d(K^n)`: the number of size-`d` multisets over
/// `{1..n}` that `w` maps to themselves.
pub fn trace_sym(w: &PermutationWitness, d: u32) -> Result<BigInt> {
    let n = w.n();
    if n == 0 {
        return Ok(BigInt::from(u8::from(d == 0)));
    }
    feasible(binomial((n + d - 1) as u64, d as u64), "symmetric power trace")?;
    let mut count = 0u64;
    for multiset in (1..=n).combinations_with_replacement(d as usize) {
        let mut image: Vec<u32> = multiset.iter().map(|&i| w.apply(i)).collect();
        image.sort_unstable();
        if image == multiset {
            count += 1;
        }
    }
    Ok(count.into())
}

/// Trace of `w` on `/\^d(K^n)`: over `d`-subsets fixed by `w`, the sign of the
/// permutation `w` induces on the sorted subset.
pub fn trace_alt(w: &PermutationWitness, d: u32) -> Result<BigInt> {
    let n = w.n();
    feasible(binomial(n as u64, d as u64), "exterior power trace")?;
    let mut total = 0i64;
    for subset in (1..=n).combinations(d as usize) {
        let positions: Option<Vec<usize>> =
            subset.iter().map(|&i| subset.binary_search(&w.apply(i)).ok()).collect();
        let Some(positions) = positions else { continue };
        let inversions = (0..positions.len())
            .flat_map(|i| (i + 1..positions.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| positions[i] > positions[j])
            .count();
        total += if inversions % 2 == 0 { 1 } else { -1 };
    }
    Ok(total.into())
}

/// A function on the conjugacy classes of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: u32,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    /// Builds a class function from its value on each cycle type.
    pub fn from_fn(n: u32, mut f: impl FnMut(&Partition) -> Result<Rational>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for beta in partitions_of(n) {
            let v = f(&beta)?;
            values.insert(beta, v);
        }
        Ok(ClassFunction { n, values })
    }

    pub fn trivial(n: u32) -> Self {
        ClassFunction::from_fn(n, |_| Ok(Rational::from_integer(1.into()))).expect("infallible")
    }

    /// The irreducible character `chi_nu`.
    pub fn irreducible(nu: &Partition) -> Self {
        ClassFunction::from_fn(nu.size(), |beta| Ok(Rational::from_integer(mn_character(nu, beta)?)))
            .expect("sizes agree")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, beta: &Partition) -> Rational {
        self.values.get(beta).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rational> {
        &self.values
    }

    /// `sum_beta f(beta) g(beta) / z_beta`.
    pub fn inner(&self, other: &ClassFunction) -> Result<Rational> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "class functions on S_{} and S_{}",
                self.n, other.n
            )));
        }
        let mut total = Rational::zero();
        for (beta, v) in &self.values {
            total += v * other.value(beta) / Rational::from_integer(beta.z());
        }
        Ok(total)
    }
}

/// Multiplicity of every irreducible character in `f`, as exact rationals.
pub fn decompose(f: &ClassFunction) -> BTreeMap<Partition, Rational> {
    partitions_of(f.n())
        .into_iter()
        .map(|nu| {
            let m = f.inner(&ClassFunction::irreducible(&nu)).expect("same n");
            (nu, m)
        })
        .collect()
}

fn integer_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut total = BigInt::zero();
    for perm in (0..n).permutations(n) {
        let mut term = BigInt::from(1);
        for (row, &col) in perm.iter().enumerate() {
            if m[row][col].is_zero() {
                term = BigInt::zero();
                break;
            }
            term *= &m[row][col];
        }
        if term.is_zero() {
            continue;
        }
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        if inversions % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

/// The character of `W_lambda(K^n)` restricted to `S_n`, from the determinant
/// of symmetric-power traces `det(tr(w | Sym^{lambda_i + j - i}))`.
pub fn weyl_class_function(lambda: &Partition, n: u32) -> Result<ClassFunction> {
    let l = lambda.len();
    ClassFunction::from_fn(n, |beta| {
        let w = PermutationWitness::of_cycle_type(beta, n)?;
        let mut traces: BTreeMap<i64, BigInt> = BTreeMap::new();
        let mut m = vec![vec![BigInt::zero(); l]; l];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let d = lambda.part(i) as i64 + j as i64 - i as i64;
                if d < 0 {
                    continue;
                }
                if let std::collections::btree_map::Entry::Vacant(e) = traces.entry(d) {
                    e.insert(trace_sym(&w, d as u32)?);
                }
                *cell = traces[&d].clone();
            }
        }
        Ok(Rational::from_integer(integer_det(&m)))
    })
}

/// Multiplicity of `V_{mu[n]}` in `W_lambda(K^n)`, by brute force.
pub fn oracle_restriction(lambda: &Partition, mu: &Partition, n: u32) -> Result<u64> {
    let padded = mu.pad(n)?;
    let f = weyl_class_function(lambda, n)?;
    let m = f.inner(&ClassFunction::irreducible(&padded))?;
    as_nonneg_integer(&m).ok_or_else(|| {
        Error::Internal(format!("multiplicity of {padded} in W{lambda}(K^{n}) is {m}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn witness(beta: &[u32], n: u32) -> PermutationWitness {
        PermutationWitness::of_cycle_type(&p(beta), n).unwrap()
    }

    #[test]
    fn witnesses() {
        let w = witness(&[3, 2], 6);
        assert_eq!(w.images(), [2, 3, 1, 5, 4, 6]);
        assert_eq!(w.cycle_type(), p(&[3, 2, 1]));
        assert_eq!(w.to_string(), "[2 3 1 5 4 6]");
        assert!(PermutationWitness::from_images(vec![1, 1]).is_err());
        assert!(PermutationWitness::of_cycle_type(&p(&[3]), 2).is_err());
        for beta in partitions_of(6) {
            assert_eq!(PermutationWitness::of_cycle_type(&beta, 6).unwrap().cycle_type(), beta);
        }
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace_sym(&witness(&[2], 2), 2).unwrap(), 1.into());
        assert_eq!(trace_sym(&witness(&[], 3), 2).unwrap(), 6.into());
        assert_eq!(trace_sym(&witness(&[3], 3), 2).unwrap(), 0.into());
        assert_eq!(trace_alt(&witness(&[], 3), 2).unwrap(), 3.into());
        assert_eq!(trace_alt(&witness(&[2], 2), 2).unwrap(), (-1).into());
        assert_eq!(trace_alt(&witness(&[2], 3), 1).unwrap(), 1.into());
        assert!(matches!(trace_sym(&witness(&[], 30), 8), Err(Error::Infeasible(_))));
    }

    #[test]
    fn weyl_class_function_examples() {
        let f = weyl_class_function(&p(&[2]), 3).unwrap();
        assert_eq!(f.value(&p(&[1, 1, 1])), int(6));
        assert_eq!(f.value(&p(&[2, 1])), int(2));
        assert_eq!(f.value(&p(&[3])), int(0));
        let g = weyl_class_function(&p(&[1]), 4).unwrap();
        for (beta, v) in g.values() {
            let fixed = beta.parts().iter().filter(|&&x| x == 1).count() as i64;
            assert_eq!(*v, int(fixed));
        }
        let h = weyl_class_function(&p(&[1, 1]), 2).unwrap();
        assert_eq!(h.value(&p(&[1, 1])), int(1));
        assert_eq!(h.value(&p(&[2])), int(-1));
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose(&weyl_class_function(&p(&[2]), 3).unwrap());
        assert_eq!(d[&p(&[3])], int(2));
        assert_eq!(d[&p(&[2, 1])], int(2));
        assert_eq!(d[&p(&[1, 1, 1])], int(0));
        let t = decompose(&ClassFunction::trivial(4));
        for (nu, m) in t {
            assert_eq!(m, int(i64::from(nu == p(&[4]))));
        }
        let s = decompose(&weyl_class_function(&p(&[1, 1]), 2).unwrap());
        assert_eq!(s[&p(&[1, 1])], int(1));
        assert_eq!(s[&p(&[2])], int(0));
    }

    #[test]
    fn irreducibles_decompose_to_indicators() {
        for n in 0..=6 {
            for nu in partitions_of(n) {
                for (kappa, m) in decompose(&ClassFunction::irreducible(&nu)) {
                    assert_eq!(m, int(i64::from(kappa == nu)));
                }
            }
        }
    }

    #[test]
    fn oracle_restriction_examples() {
        let e = Partition::empty();
        assert_eq!(oracle_restriction(&p(&[2]), &e, 3).unwrap(), 2);
        assert_eq!(oracle_restriction(&p(&[2]), &p(&[1]), 3).unwrap(), 2);
        assert_eq!(oracle_restriction(&p(&[2, 1]), &e, 4).unwrap(), 1);
        assert!(oracle_restriction(&p(&[2]), &p(&[2]), 3).is_err());
    }
}
