//! The permutation-sum expansion of `F_λ l_λ` split into three parts after
//! one application of the modified Laguerre three-term recurrence.
//!
//! Permutations are one-line vectors `σ` with `σ[i-1] = σ(i) ∈ 1..=r`, and
//! row indices `j` are 1-based throughout.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::RecurrenceError;
use crate::partitions::Partition;
use crate::polyalg::{factorial, BigRational, MPoly};
use crate::sequences::modified_laguerre_upto;

/// Default bound on the partition length; `r!` permutations are enumerated.
pub const DEFAULT_LENGTH_BOUND: usize = 6;

/// `F_λ l_λ = a + sign_prefactor · b + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofDecomposition {
    pub a: MPoly,
    pub b: MPoly,
    pub c: MPoly,
    /// `(-1)^{r(r-1)/2} (|λ|-1)!`
    pub sign_prefactor: BigRational,
}

impl ProofDecomposition {
    pub fn total(&self) -> MPoly {
        let mut t = &self.a + &self.c;
        t.add_scaled(&self.b, &self.sign_prefactor);
        t
    }
}

fn perm_sign(sigma: &[usize]) -> i64 {
    let inversions = (0..sigma.len())
        .flat_map(|i| (i + 1..sigma.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| sigma[i] > sigma[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `σ(v)_i = v_i - σ(i) + 1`, possibly negative.
fn shifted(v: &[i64], sigma: &[usize]) -> Vec<i64> {
    v.iter().zip(sigma).map(|(&n, &s)| n - s as i64 + 1).collect()
}

/// `1 / Π_i k_i!`, zero as soon as some `k_i` is negative.
fn inverse_factorials(ks: &[i64]) -> BigRational {
    if ks.iter().any(|&k| k < 0) {
        return BigRational::zero();
    }
    let denom = ks.iter().fold(BigInt::one(), |acc, &k| acc * factorial(k as u64));
    BigRational::new(BigInt::one(), denom)
}

struct Context {
    n: Vec<i64>,
    family: Vec<MPoly>,
}

impl Context {
    fn new(lambda: &Partition) -> Self {
        let n: Vec<i64> = lambda.degree_vector().entries().iter().map(|&d| d as i64).collect();
        let top = n.first().copied().unwrap_or(0) as usize;
        Context {
            n,
            family: modified_laguerre_upto(top),
        }
    }

    fn r(&self) -> usize {
        self.n.len()
    }

    fn lowered(&self, j: usize) -> Vec<i64> {
        let mut v = self.n.clone();
        v[j - 1] -= 1;
        v
    }

    /// `Π_{i≠j} l_{σ(n)_i} · l_{σ(n)_j - drop} / Π_i σ(n[j])_i!`
    fn fraction(&self, j: usize, sigma: &[usize], drop: i64) -> MPoly {
        let weight = inverse_factorials(&shifted(&self.lowered(j), sigma));
        if weight.is_zero() {
            return MPoly::zero();
        }
        let idx = shifted(&self.n, sigma);
        let mut prod = MPoly::constant(weight);
        for (i, &k) in idx.iter().enumerate() {
            let k = if i + 1 == j { k - drop } else { k };
            if k < 0 {
                return MPoly::zero();
            }
            prod = &prod * &self.family[k as usize];
        }
        prod
    }
}

/// Computes `A`, `B` and `C` literally from their permutation sums.
pub fn proof_decomposition(lambda: &Partition) -> Result<ProofDecomposition, RecurrenceError> {
    proof_decomposition_bounded(lambda, DEFAULT_LENGTH_BOUND)
}

pub fn proof_decomposition_bounded(lambda: &Partition, bound: usize) -> Result<ProofDecomposition, RecurrenceError> {
    if lambda.is_empty() {
        return Err(RecurrenceError::EmptyPartition);
    }
    let r = lambda.len();
    if r > bound {
        return Err(RecurrenceError::LengthBoundExceeded { length: r, bound });
    }
    let ctx = Context::new(lambda);
    let size = lambda.size() as u64;
    let mut prefactor = BigRational::from_integer(factorial(size - 1));
    if (r * (r - 1) / 2) % 2 == 1 {
        prefactor = -prefactor;
    }
    let x = MPoly::x();
    let x_plus_a = &x + &MPoly::alpha();

    let mut a = MPoly::zero();
    let mut b = MPoly::zero();
    let mut c = MPoly::zero();
    for j in 1..=r {
        let lam_j = lambda.part(j - 1) as i64;
        let mut a_inner = MPoly::zero();
        let mut c_inner = MPoly::zero();
        for sigma in (1..=r).permutations(r) {
            let sgn = perm_sign(&sigma);
            let first = ctx.fraction(j, &sigma, 1);
            if !first.is_zero() {
                a_inner.add_scaled(&first, &BigRational::from_integer(sgn.into()));
                let shift = sigma[j - 1] as i64 - r as i64;
                b.add_scaled(&first, &BigRational::from_integer((sgn * shift).into()));
            }
            let second = ctx.fraction(j, &sigma, 2);
            if !second.is_zero() {
                let m = ctx.n[j - 1] - sigma[j - 1] as i64 + 1;
                c_inner.add_scaled(&second, &BigRational::from_integer((sgn * (m - 1)).into()));
            }
        }
        let factor = &x_plus_a + &MPoly::from_int(j as i64 - lam_j);
        a += &(&factor * &a_inner);
        c += &c_inner;
    }
    Ok(ProofDecomposition {
        a: a.scale(&prefactor),
        b,
        c: (&x * &c).scale(&prefactor),
        sign_prefactor: prefactor,
    })
}

/// The domain `X = {(j, σ) : σ(j) ≠ r}` in lexicographic order.
pub fn t_map_domain(r: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for sigma in (1..=r).permutations(r) {
        for j in 1..=r {
            if sigma[j - 1] != r {
                out.push((j, sigma.clone()));
            }
        }
    }
    out
}

/// `T(j, σ) = (k, σ·(j k))` with `k = σ⁻¹(σ(j) + 1)`; `None` outside `X`.
pub fn t_map(j: usize, sigma: &[usize]) -> Option<(usize, Vec<usize>)> {
    let r = sigma.len();
    let target = sigma.get(j.checked_sub(1)?)? + 1;
    if target > r {
        return None;
    }
    let k = sigma.iter().position(|&s| s == target)? + 1;
    let mut tau = sigma.to_vec();
    tau.swap(j - 1, k - 1);
    Some((k, tau))
}

/// The summand `b_{j,σ}` of `B`.
pub fn b_term(lambda: &Partition, j: usize, sigma: &[usize]) -> MPoly {
    let ctx = Context::new(lambda);
    let r = ctx.r();
    let shift = sigma[j - 1] as i64 - r as i64;
    let coeff = perm_sign(sigma) * shift;
    if coeff == 0 {
        return MPoly::zero();
    }
    ctx.fraction(j, sigma, 1).scale_int(coeff)
}

/// `σ(n[j])` for the degree vector of `lambda`.
pub fn shifted_lowered(lambda: &Partition, j: usize, sigma: &[usize]) -> Vec<i64> {
    let ctx = Context::new(lambda);
    shifted(&ctx.lowered(j), sigma)
}

pub fn sign(sigma: &[usize]) -> i64 {
    perm_sign(sigma)
}
