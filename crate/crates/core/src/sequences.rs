//! Single-index polynomial families: classical and modified Laguerre,
//! Hermite, modified Jacobi at fixed parameters, and Appell sequences
//! generated from their cumulant coefficients `c_k`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyalg::{rat, BigRational, MPoly, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("singular parameter: α+β-{step}+1 vanishes at step {step}")]
    SingularParameter { step: usize },
    #[error("need {needed} Appell coefficients, only {available} given")]
    InsufficientCoefficients { needed: usize, available: usize },
    #[error("z_0 must be 1")]
    BadNormalization,
}

/// How the parameter `α` enters a computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum Alpha {
    #[default]
    Symbolic,
    Value(BigRational),
}

impl Alpha {
    /// Specializes a symbolic result.
    pub fn apply(&self, p: &MPoly) -> MPoly {
        match self {
            Alpha::Symbolic => p.clone(),
            Alpha::Value(v) => p.eval(Var::Alpha, v),
        }
    }
}

/// Coefficients `c_1, c_2, ...` of `log f_A(t) = Σ c_n tⁿ/n!` for an Appell
/// sequence with generating function `e^{xt} f_A(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AppellSpec {
    /// `coeffs[k - 1] = c_k`.
    pub coeffs: Vec<MPoly>,
}

impl AppellSpec {
    pub fn new(coeffs: Vec<MPoly>) -> Self {
        AppellSpec { coeffs }
    }

    /// `c_2 = -1`, everything else zero.
    pub fn hermite(n: usize) -> Self {
        AppellSpec::new(
            (1..=n)
                .map(|k| if k == 2 { MPoly::from_int(-1) } else { MPoly::zero() })
                .collect(),
        )
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `L_0, ..., L_n` with symbolic `α`, from
/// `n L_n = (2n - 1 + α - x) L_{n-1} - (n - 1 + α) L_{n-2}`.
pub fn classical_laguerre_upto(n: usize) -> Vec<MPoly> {
    let x = MPoly::x();
    let a = MPoly::alpha();
    let mut out = vec![MPoly::one()];
    if n >= 1 {
        out.push(&(&-&x + &a) + &MPoly::one());
    }
    for k in 2..=n {
        let kk = k as i64;
        let c1 = &(&a - &x) + &MPoly::from_int(2 * kk - 1);
        let c2 = &a + &MPoly::from_int(kk - 1);
        let next = &(&c1 * &out[k - 1]) - &(&c2 * &out[k - 2]);
        out.push(next.scale(&BigRational::new(1.into(), kk.into())));
    }
    out
}

pub fn classical_laguerre(n: usize) -> MPoly {
    classical_laguerre_upto(n).pop().expect("non-empty")
}

/// `l_0, ..., l_n` from `l_n = (x + α - n + 1) l_{n-1} + x (n - 1) l_{n-2}`.
pub fn modified_laguerre_upto(n: usize) -> Vec<MPoly> {
    let x = MPoly::x();
    let a = MPoly::alpha();
    let mut out = vec![MPoly::one()];
    if n >= 1 {
        out.push(&x + &a);
    }
    for k in 2..=n {
        let kk = k as i64;
        let shift = &(&x + &a) + &MPoly::from_int(1 - kk);
        let next = &(&shift * &out[k - 1]) + &(&x * &out[k - 2]).scale_int(kk - 1);
        out.push(next);
    }
    out
}

pub fn modified_laguerre(n: usize) -> MPoly {
    modified_laguerre_upto(n).pop().expect("non-empty")
}

/// `He_0, ..., He_n` from `He_n = x He_{n-1} - (n - 1) He_{n-2}`.
pub fn hermite_upto(n: usize) -> Vec<MPoly> {
    let x = MPoly::x();
    let mut out = vec![MPoly::one()];
    if n >= 1 {
        out.push(x.clone());
    }
    for k in 2..=n {
        let next = &(&x * &out[k - 1]) - &out[k - 2].scale_int(k as i64 - 1);
        out.push(next);
    }
    out
}

pub fn hermite(n: usize) -> MPoly {
    hermite_upto(n).pop().expect("non-empty")
}

/// Modified Jacobi polynomials `A_0, ..., A_n` at fixed `(α, β)`, from
/// `(α+β-k+1) A_k = ((α+β-2k+2) x + α - β) A_{k-1} + (x² - 1)(k - 1) A_{k-2}`.
/// The `k = 1` step gives `A_1 = x + (α-β)/(α+β)`.
pub fn modified_jacobi_upto(
    n: usize,
    alpha: &BigRational,
    beta: &BigRational,
) -> Result<Vec<MPoly>, SequenceError> {
    let s = alpha + beta;
    let x = MPoly::x();
    let x2m1 = &x.pow(2) - &MPoly::one();
    let mut out = vec![MPoly::one()];
    for k in 1..=n {
        let kk = k as i64;
        let lead = &s - rat(kk - 1);
        if lead.is_zero() {
            return Err(SequenceError::SingularParameter { step: k });
        }
        let lin = &x.scale(&(&s - rat(2 * kk - 2))) + &MPoly::constant(alpha - beta);
        let mut rhs = &lin * &out[k - 1];
        if k >= 2 {
            rhs += &(&x2m1 * &out[k - 2]).scale_int(kk - 1);
        }
        out.push(rhs.scale(&lead.recip()));
    }
    Ok(out)
}

pub fn modified_jacobi(n: usize, alpha: &BigRational, beta: &BigRational) -> Result<MPoly, SequenceError> {
    Ok(modified_jacobi_upto(n, alpha, beta)?.pop().expect("non-empty"))
}

/// `A_0, ..., A_n` from `A_n = x A_{n-1} + Σ_{k=1}^n C(n-1, k-1) c_k A_{n-k}`.
pub fn appell_upto(spec: &AppellSpec, n: usize) -> Result<Vec<MPoly>, SequenceError> {
    if spec.coeffs.len() < n {
        return Err(SequenceError::InsufficientCoefficients {
            needed: n,
            available: spec.coeffs.len(),
        });
    }
    let x = MPoly::x();
    let mut out = vec![MPoly::one()];
    for m in 1..=n {
        let mut next = &x * &out[m - 1];
        for k in 1..=m {
            let c = &spec.coeffs[k - 1];
            if c.is_zero() {
                continue;
            }
            let term = c * &out[m - k];
            next.add_scaled(&term, &BigRational::from_integer(binomial(m - 1, k - 1)));
        }
        out.push(next);
    }
    Ok(out)
}

pub fn appell_from_coeffs(spec: &AppellSpec, n: usize) -> Result<MPoly, SequenceError> {
    Ok(appell_upto(spec, n)?.pop().expect("non-empty"))
}

/// Inverts `z_n = c_n + Σ_{i=1}^{n-1} C(n-1, i) c_{n-i} z_i` for
/// `c_1, ..., c_N` given `z_0 = 1, z_1, ..., z_N`.
pub fn c_from_z(z: &[MPoly]) -> Result<Vec<MPoly>, SequenceError> {
    if z.first().is_none_or(|z0| !z0.is_one()) {
        return Err(SequenceError::BadNormalization);
    }
    let mut c: Vec<MPoly> = Vec::with_capacity(z.len().saturating_sub(1));
    for n in 1..z.len() {
        let mut cn = z[n].clone();
        for i in 1..n {
            let term = &c[n - i - 1] * &z[i];
            cn.add_scaled(&term, &-BigRational::from_integer(binomial(n - 1, i)));
        }
        c.push(cn);
    }
    Ok(c)
}

/// Values at `x = 0` of a family prefix.
pub fn constant_terms(members: &[MPoly]) -> Vec<MPoly> {
    members.iter().map(|p| p.eval(Var::X, &BigRational::zero())).collect()
}

/// A family of polynomials indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    ModifiedLaguerre,
    Hermite,
    ClassicalLaguerre,
    ModifiedJacobi { alpha: BigRational, beta: BigRational },
    Custom(AppellSpec),
}

impl Family {
    /// Whether `d/dx P_n = n P_{n-1}` holds.
    pub fn is_appell(&self) -> bool {
        !matches!(self, Family::ClassicalLaguerre)
    }

    fn compute(&self, upto: usize) -> Result<Vec<MPoly>, SequenceError> {
        match self {
            Family::ModifiedLaguerre => Ok(modified_laguerre_upto(upto)),
            Family::Hermite => Ok(hermite_upto(upto)),
            Family::ClassicalLaguerre => Ok(classical_laguerre_upto(upto)),
            Family::ModifiedJacobi { alpha, beta } => modified_jacobi_upto(upto, alpha, beta),
            Family::Custom(spec) => appell_upto(spec, upto),
        }
    }

    /// `P_0, ..., P_upto`, served from a shared cache.
    pub fn members(&self, upto: usize) -> Result<Vec<MPoly>, SequenceError> {
        cache().prefix(self, upto)
    }

    pub fn member(&self, n: usize) -> Result<MPoly, SequenceError> {
        Ok(self.members(n)?.swap_remove(n))
    }
}

/// Memoized prefixes keyed by family. Entries are only ever replaced by
/// longer, fully built prefixes.
#[derive(Default)]
struct SequenceCache {
    tables: RwLock<HashMap<Family, Vec<MPoly>>>,
}

impl SequenceCache {
    fn prefix(&self, family: &Family, upto: usize) -> Result<Vec<MPoly>, SequenceError> {
        {
            let tables = self.tables.read().expect("sequence cache poisoned");
            if let Some(v) = tables.get(family) {
                if v.len() > upto {
                    return Ok(v[..=upto].to_vec());
                }
            }
        }
        let built = family.compute(upto)?;
        let mut tables = self.tables.write().expect("sequence cache poisoned");
        let entry = tables.entry(family.clone()).or_default();
        if entry.len() < built.len() {
            *entry = built.clone();
        }
        Ok(built)
    }
}

fn cache() -> &'static SequenceCache {
    static CACHE: OnceLock<SequenceCache> = OnceLock::new();
    CACHE.get_or_init(SequenceCache::default)
}
