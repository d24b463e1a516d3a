//! Wronskian polynomials computed straight from their determinant
//! definition. This is the reference every recurrence is checked against.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::partitions::Partition;
use crate::polyalg::{BigRational, MPoly, PolyError, PolyMatrix, Var};
use crate::sequences::{Alpha, Family, SequenceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WronskianError {
    #[error("Wronskian for {0} is not monic")]
    NonMonicResult(Partition),
    #[error("division by the Vandermonde product is not exact for {0}")]
    InexactDivision(Partition),
    #[error("leading coefficient of the classical Wronskian for {0} vanishes")]
    DegenerateLeadingCoefficient(Partition),
    #[error("classical Laguerre polynomials are not an Appell family; use the monic classical Wronskian")]
    NotAppell,
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WronskianRequest {
    pub family: Family,
    pub partition: Partition,
}

impl WronskianRequest {
    pub fn new(family: Family, partition: Partition) -> Self {
        WronskianRequest { family, partition }
    }
}

/// Entry `(i, j)` is the `i`-th `x`-derivative of `P_{n_j}`, where `n` is
/// the degree vector. Each row is obtained by differentiating the previous
/// one, so non-Appell families work unchanged.
pub fn wronskian_matrix(req: &WronskianRequest) -> Result<PolyMatrix, WronskianError> {
    let degrees = req.partition.degree_vector();
    let r = degrees.len();
    if r == 0 {
        return Ok(PolyMatrix::empty());
    }
    let members = req.family.members(degrees.entries()[0])?;
    let mut rows: Vec<Vec<MPoly>> = Vec::with_capacity(r);
    rows.push(degrees.entries().iter().map(|&n| members[n].clone()).collect());
    for i in 1..r {
        let next = rows[i - 1].iter().map(MPoly::derivative_x).collect();
        rows.push(next);
    }
    Ok(PolyMatrix::from_rows(rows)?)
}

/// `Π_{i<j} (n_j - n_i)` over the degree vector.
pub fn vandermonde_denominator(partition: &Partition) -> BigInt {
    let n = partition.degree_vector();
    let e = n.entries();
    let mut acc = BigInt::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            acc *= BigInt::from(e[j] as i64 - e[i] as i64);
        }
    }
    acc
}

/// The normalized Wronskian `Wr[P_{n_1}, ..., P_{n_r}] / Π_{i<j}(n_j - n_i)`
/// for an Appell family. The result is monic of degree `|λ|`.
pub fn wronskian_poly(req: &WronskianRequest) -> Result<MPoly, WronskianError> {
    if !req.family.is_appell() {
        return Err(WronskianError::NotAppell);
    }
    let det = wronskian_matrix(req)?.determinant()?;
    let denom = BigRational::from_integer(vandermonde_denominator(&req.partition));
    let poly = det.div_scalar(&denom)?;
    if det.is_integral() && !poly.is_integral() {
        return Err(WronskianError::InexactDivision(req.partition.clone()));
    }
    let expected_degree = req.partition.size() as u32;
    if !poly.is_monic_x() || poly.degree_x() != Some(expected_degree) {
        return Err(WronskianError::NonMonicResult(req.partition.clone()));
    }
    Ok(poly)
}

/// Wronskian of classical Laguerre polynomials rescaled to be monic. The
/// constant is read off the leading coefficient, which must be a nonzero
/// rational.
pub fn wronskian_classical_monic(partition: &Partition, alpha: &Alpha) -> Result<MPoly, WronskianError> {
    let req = WronskianRequest::new(Family::ClassicalLaguerre, partition.clone());
    let matrix = wronskian_matrix(&req)?;
    let matrix = match alpha {
        Alpha::Symbolic => matrix,
        Alpha::Value(v) => matrix.map(|p| p.eval(Var::Alpha, v)),
    };
    let det = matrix.determinant()?;
    let degenerate = || WronskianError::DegenerateLeadingCoefficient(partition.clone());
    let lead = det.leading_coeff_x().as_constant().ok_or_else(degenerate)?;
    if det.degree_x() != Some(partition.size() as u32) {
        return Err(degenerate());
    }
    Ok(det.div_scalar(&lead).map_err(|_| degenerate())?)
}

/// Memoizes [`wronskian_poly`] per `(family, partition)`.
#[derive(Default)]
pub struct WronskianEngine {
    cache: RwLock<HashMap<WronskianRequest, MPoly>>,
}

impl WronskianEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn poly(&self, family: &Family, partition: &Partition) -> Result<MPoly, WronskianError> {
        let req = WronskianRequest::new(family.clone(), partition.clone());
        if let Some(p) = self.cache.read().expect("wronskian cache poisoned").get(&req) {
            return Ok(p.clone());
        }
        let p = wronskian_poly(&req)?;
        self.cache
            .write()
            .expect("wronskian cache poisoned")
            .insert(req, p.clone());
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.cache.read().expect("wronskian cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
