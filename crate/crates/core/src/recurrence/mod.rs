//! Recurrences over the Young lattice that generate Wronskian polynomials
//! from smaller ones, plus the permutation-sum decomposition behind the
//! Laguerre recurrence.
//!
//! Tables store `F_λ · P_λ` rather than `P_λ`, so every step is a plain
//! integer-coefficient combination and the final division by `F_λ` doubles
//! as a consistency check.

mod decomposition;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::partitions::{down_set, Partition};
use crate::polyalg::{factorial, BigRational, MPoly};

pub use decomposition::{
    b_term, proof_decomposition, proof_decomposition_bounded, shifted_lowered, sign, t_map, t_map_domain,
    ProofDecomposition, DEFAULT_LENGTH_BOUND,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("F_λ·P_λ is not divisible by F_λ for {0}")]
    InexactDivision(Partition),
    #[error("recurrence result for {0} is not monic of degree |λ|")]
    NonMonic(Partition),
    #[error("partition length {length} exceeds the bound {bound}")]
    LengthBoundExceeded { length: usize, bound: usize },
    #[error("the empty partition has no decomposition")]
    EmptyPartition,
}

/// Which recurrence a table runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecurrenceKind {
    /// `F_λ l_λ = Σ_{μ⋖λ} (x+α-c(λ/μ)) F_μ l_μ + x(|λ|-1) Σ_{ρ∈R₂⁻(λ)} (-1)^{ht} F_ρ l_ρ`
    Laguerre,
    /// `F_λ l_λ = (x+α) Σ_{μ⋖λ} F_μ l_μ
    ///   + α Σ_{k≥2} (-1)^{k-1} (|λ|-1)!/(|λ|-k)! Σ_{ν∈R_k⁻(λ)} (-1)^{ht} F_ν l_ν`
    LaguerreAlt,
    /// `F_λ He_λ = x Σ_{μ⋖λ} F_μ He_μ - (|λ|-1) Σ_{ρ∈R₂⁻(λ)} (-1)^{ht} F_ρ He_ρ`
    Hermite,
}

/// Memo of `F_λ · P_λ`, grown one Young-lattice level at a time. A level is
/// computed in parallel and published under a single write lock, so readers
/// only ever see complete entries.
pub struct RecurrenceTable {
    kind: RecurrenceKind,
    memo: RwLock<HashMap<Partition, MPoly>>,
}

impl RecurrenceTable {
    pub fn new(kind: RecurrenceKind) -> Self {
        let mut memo = HashMap::new();
        memo.insert(Partition::empty(), MPoly::one());
        RecurrenceTable {
            kind,
            memo: RwLock::new(memo),
        }
    }

    pub fn kind(&self) -> RecurrenceKind {
        self.kind
    }

    /// Shared table for `kind`.
    pub fn shared(kind: RecurrenceKind) -> &'static RecurrenceTable {
        static LAGUERRE: OnceLock<RecurrenceTable> = OnceLock::new();
        static ALT: OnceLock<RecurrenceTable> = OnceLock::new();
        static HERMITE: OnceLock<RecurrenceTable> = OnceLock::new();
        let cell = match kind {
            RecurrenceKind::Laguerre => &LAGUERRE,
            RecurrenceKind::LaguerreAlt => &ALT,
            RecurrenceKind::Hermite => &HERMITE,
        };
        cell.get_or_init(|| RecurrenceTable::new(kind))
    }

    /// Materializes every partition below `lambda`.
    pub fn ensure(&self, lambda: &Partition) {
        for level in down_set(lambda).into_iter().skip(1) {
            let missing: Vec<Partition> = {
                let memo = self.memo.read().expect("recurrence table poisoned");
                level.into_iter().filter(|p| !memo.contains_key(p)).collect()
            };
            if missing.is_empty() {
                continue;
            }
            let computed: Vec<(Partition, MPoly)> = {
                let memo = self.memo.read().expect("recurrence table poisoned");
                missing
                    .into_par_iter()
                    .map(|p| {
                        let v = step(self.kind, &p, &memo);
                        (p, v)
                    })
                    .collect()
            };
            let mut memo = self.memo.write().expect("recurrence table poisoned");
            memo.extend(computed);
        }
    }

    /// `F_λ · P_λ` as stored.
    pub fn weighted(&self, lambda: &Partition) -> MPoly {
        self.ensure(lambda);
        self.memo.read().expect("recurrence table poisoned")[lambda].clone()
    }

    /// `P_λ`, after checking the division by `F_λ` is exact and the result
    /// is monic of degree `|λ|`.
    pub fn get(&self, lambda: &Partition) -> Result<MPoly, RecurrenceError> {
        let weighted = self.weighted(lambda);
        let f = BigRational::from_integer(BigInt::from(lambda.f_count()));
        let poly = weighted.scale(&f.recip());
        if !poly.is_integral() {
            return Err(RecurrenceError::InexactDivision(lambda.clone()));
        }
        if !poly.is_monic_x() || poly.degree_x() != Some(lambda.size() as u32) {
            return Err(RecurrenceError::NonMonic(lambda.clone()));
        }
        Ok(poly)
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("recurrence table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Right-hand side of the recurrence for `lambda`; every partition it reads
/// is strictly smaller and already present in `memo`.
fn step(kind: RecurrenceKind, lambda: &Partition, memo: &HashMap<Partition, MPoly>) -> MPoly {
    let x = MPoly::x();
    let a = MPoly::alpha();
    let size = lambda.size() as i64;
    let covers = lambda.covers_down().expect("step is never called on ∅");
    let dominoes = || {
        let mut acc = MPoly::zero();
        for strip in lambda.border_strips_down(2) {
            acc.add_scaled(&memo[&strip.smaller], &BigRational::from_integer(strip.sign().into()));
        }
        acc
    };
    match kind {
        RecurrenceKind::Laguerre => {
            let mut acc = MPoly::zero();
            for c in &covers {
                let factor = &(&x + &a) - &MPoly::from_int(c.content);
                acc += &(&factor * &memo[&c.smaller]);
            }
            let d = dominoes();
            if !d.is_zero() {
                acc += &(&x * &d).scale_int(size - 1);
            }
            acc
        }
        RecurrenceKind::Hermite => {
            let mut sum = MPoly::zero();
            for c in &covers {
                sum += &memo[&c.smaller];
            }
            let mut acc = &x * &sum;
            acc -= &dominoes().scale_int(size - 1);
            acc
        }
        RecurrenceKind::LaguerreAlt => {
            let mut sum = MPoly::zero();
            for c in &covers {
                sum += &memo[&c.smaller];
            }
            let mut acc = &(&x + &a) * &sum;
            let n = lambda.size();
            let mut tail = MPoly::zero();
            for k in 2..=n {
                let strips = lambda.border_strips_down(k);
                if strips.is_empty() {
                    continue;
                }
                // (-1)^{k-1} (n-1)!/(n-k)!
                let falling = factorial(n as u64 - 1) / factorial((n - k) as u64);
                let weight = if k % 2 == 0 { -falling } else { falling };
                let mut inner = MPoly::zero();
                for s in strips {
                    inner.add_scaled(&memo[&s.smaller], &BigRational::from_integer(s.sign().into()));
                }
                tail.add_scaled(&inner, &BigRational::from_integer(weight));
            }
            if !tail.is_zero() {
                acc += &(&a * &tail);
            }
            acc
        }
    }
}

/// Wronskian Laguerre polynomial `l_λ` via the content/domino recurrence.
pub fn wlp_thm1(lambda: &Partition) -> Result<MPoly, RecurrenceError> {
    RecurrenceTable::shared(RecurrenceKind::Laguerre).get(lambda)
}

/// Wronskian Laguerre polynomial `l_λ` via the border-strip recurrence
/// with strips of every size.
pub fn wlp_alt(lambda: &Partition) -> Result<MPoly, RecurrenceError> {
    RecurrenceTable::shared(RecurrenceKind::LaguerreAlt).get(lambda)
}

/// Wronskian Hermite polynomial `He_λ`.
pub fn whp_recurrence(lambda: &Partition) -> Result<MPoly, RecurrenceError> {
    RecurrenceTable::shared(RecurrenceKind::Hermite).get(lambda)
}
