use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{BigRational, PolyError};

/// Certificate that `A·x = b` has no solution: a row combination `y` with
/// `yᵀA = 0` and `yᵀb = constant ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibilityCertificate {
    #[serde(with = "rational_vec")]
    pub row_combination: Vec<BigRational>,
    #[serde(with = "rational_str")]
    pub constant: BigRational,
}

impl InfeasibilityCertificate {
    /// Re-checks the certificate against the original system.
    pub fn verify(&self, a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
        if self.row_combination.len() != a.len() || a.len() != b.len() || self.constant.is_zero() {
            return false;
        }
        let cols = a.first().map_or(0, Vec::len);
        let lhs_zero = (0..cols).all(|j| {
            self.row_combination
                .iter()
                .zip(a)
                .map(|(y, row)| y * &row[j])
                .fold(BigRational::zero(), |acc, t| acc + t)
                .is_zero()
        });
        let rhs: BigRational = self
            .row_combination
            .iter()
            .zip(b)
            .map(|(y, v)| y * v)
            .fold(BigRational::zero(), |acc, t| acc + t);
        lhs_zero && rhs == self.constant
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<BigRational>),
    /// A particular solution (free variables set to zero) and the free
    /// column indices.
    Underdetermined {
        particular: Vec<BigRational>,
        free: Vec<usize>,
    },
    Infeasible(InfeasibilityCertificate),
}

impl LinearSolution {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LinearSolution::Infeasible(_))
    }

    pub fn solution(&self) -> Option<&[BigRational]> {
        match self {
            LinearSolution::Unique(v) => Some(v),
            LinearSolution::Underdetermined { particular, .. } => Some(particular),
            LinearSolution::Infeasible(_) => None,
        }
    }
}

/// Gauss-Jordan elimination over the rationals. Every row operation is
/// mirrored on an identity block so inconsistent rows come with the
/// combination of original rows that produced them.
pub fn solve_linear(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<LinearSolution, PolyError> {
    let m = a.len();
    if b.len() != m {
        return Err(PolyError::DimensionMismatch(format!(
            "{m} rows but right-hand side has {} entries",
            b.len()
        )));
    }
    let n = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != n) {
        return Err(PolyError::DimensionMismatch("ragged coefficient matrix".into()));
    }

    // [A | b | I]
    let width = n + 1 + m;
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, rhs))| {
            let mut r = Vec::with_capacity(width);
            r.extend(row.iter().cloned());
            r.push(rhs.clone());
            r.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(found) = (pivot_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for v in rows[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }

    if let Some(bad) = rows[pivot_row..].iter().find(|row| !row[n].is_zero()) {
        return Ok(LinearSolution::Infeasible(InfeasibilityCertificate {
            row_combination: bad[n + 1..].to_vec(),
            constant: bad[n].clone(),
        }));
    }

    let mut solution = vec![BigRational::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        solution[col] = rows[r][n].clone();
    }
    if pivots.len() == n {
        Ok(LinearSolution::Unique(solution))
    } else {
        let free = (0..n).filter(|c| !pivots.contains(c)).collect();
        Ok(LinearSolution::Underdetermined {
            particular: solution,
            free,
        })
    }
}

pub(crate) mod rational_str {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use super::BigRational;

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn parse(text: &str) -> Option<BigRational> {
        match text.split_once('/') {
            Some((n, d)) => {
                let d: BigInt = d.trim().parse().ok()?;
                if d == BigInt::from(0) {
                    return None;
                }
                Some(BigRational::new(n.trim().parse().ok()?, d))
            }
            None => Some(BigRational::from_integer(text.trim().parse().ok()?)),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).ok_or_else(|| D::Error::custom(format!("bad rational {text:?}")))
    }
}

pub(crate) mod rational_vec {
    use serde::{ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    use super::{rational_str, BigRational};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        items
            .iter()
            .map(|t| {
                rational_str::parse(t)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational {t:?}")))
            })
            .collect()
    }
}
