//! Batch verification of the identities satisfied by Wronskian Laguerre
//! and Hermite polynomials and by the Young lattice underneath them.

mod checks;
mod jacobi;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{partitions_up_to, DegreeVector, Partition};
use crate::polyalg::{BigRational, InfeasibilityCertificate, MPoly};
use crate::recurrence::DEFAULT_LENGTH_BOUND;
use crate::sequences::SequenceError;

pub use checks::{
    check_alt, check_appell, check_average, check_content_transfer, check_decomposition, check_degree_vector_identity,
    check_hermite, check_t_map, check_thm1, check_weighted_content_sum, degree_vector_sides, plancherel_normalization,
    rectangle_duality,
};
pub use jacobi::{default_jacobi_samples, jacobi_form_search, jacobi_system, JacobiOutcome, JacobiSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("zero denominator in the degree-vector identity")]
    ZeroDenominator,
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Infeasible,
}

/// What a report was computed over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepRange {
    Size(usize),
    Partition(Partition),
    DegreeVector(DegreeVector),
    Rectangle { n: usize, m: usize },
    Length(usize),
}

impl fmt::Display for SweepRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepRange::Size(n) => write!(f, "n={n}"),
            SweepRange::Partition(p) => write!(f, "{p}"),
            SweepRange::DegreeVector(v) => write!(f, "n={v}"),
            SweepRange::Rectangle { n, m } => write!(f, "{n}x{m}"),
            SweepRange::Length(r) => write!(f, "r={r}"),
        }
    }
}

/// Infeasibility certificate for one `(α, β)` sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleCertificate {
    #[serde(with = "crate::polyalg::rational_str")]
    pub alpha: BigRational,
    #[serde(with = "crate::polyalg::rational_str")]
    pub beta: BigRational,
    pub certificate: InfeasibilityCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<MPoly>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<SampleCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub range: SweepRange,
    pub status: Status,
    pub witness: Option<Witness>,
    pub ms: u64,
}

impl VerificationReport {
    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Runs `f` and wraps its verdict in a timed report.
pub(crate) fn timed(
    identity: Identity,
    range: SweepRange,
    f: impl FnOnce() -> (Status, Option<Witness>),
) -> VerificationReport {
    let start = Instant::now();
    let (status, witness) = f();
    VerificationReport {
        identity: identity.name().to_string(),
        range,
        status,
        witness,
        ms: start.elapsed().as_millis() as u64,
    }
}

/// Pass when `residual` is zero, otherwise a failure carrying it.
pub(crate) fn residual_verdict(partition: Option<&Partition>, residual: MPoly) -> (Status, Option<Witness>) {
    if residual.is_zero() {
        (Status::Pass, None)
    } else {
        (
            Status::Fail,
            Some(Witness {
                partition: partition.cloned(),
                residual: Some(residual),
                ..Witness::default()
            }),
        )
    }
}

pub(crate) fn error_verdict(partition: Option<&Partition>, err: impl fmt::Display) -> (Status, Option<Witness>) {
    (
        Status::Fail,
        Some(Witness {
            partition: partition.cloned(),
            detail: Some(err.to_string()),
            ..Witness::default()
        }),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Thm1,
    Alt,
    Hermite,
    Average,
    Content,
    WeightedContent,
    DegreeVector,
    Rectangle,
    Jacobi,
    Plancherel,
    Appell,
    Decomposition,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Thm1,
        Identity::Alt,
        Identity::Hermite,
        Identity::Average,
        Identity::Content,
        Identity::WeightedContent,
        Identity::DegreeVector,
        Identity::Rectangle,
        Identity::Jacobi,
        Identity::Plancherel,
        Identity::Appell,
        Identity::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Thm1 => "thm1",
            Identity::Alt => "alt",
            Identity::Hermite => "hermite",
            Identity::Average => "average",
            Identity::Content => "content",
            Identity::WeightedContent => "weighted-content",
            Identity::DegreeVector => "degree-vector",
            Identity::Rectangle => "rectangle",
            Identity::Jacobi => "jacobi",
            Identity::Plancherel => "plancherel",
            Identity::Appell => "appell",
            Identity::Decomposition => "decomposition",
        }
    }

    /// Every report for this identity up to `max_size`, in canonical order:
    /// partitions by size then reverse lexicographic, sizes ascending,
    /// rectangles by `(n, m)`.
    pub fn sweep(self, max_size: usize) -> Vec<VerificationReport> {
        let partitions = || partitions_up_to(max_size);
        let sizes = || (0..=max_size).collect::<Vec<_>>();
        match self {
            Identity::Thm1 => par_map(partitions(), |p| check_thm1(&p)),
            Identity::Alt => par_map(partitions(), |p| check_alt(&p)),
            Identity::Hermite => par_map(partitions(), |p| check_hermite(&p)),
            Identity::Content => par_map(partitions(), |p| check_content_transfer(&p)),
            Identity::WeightedContent => par_map(partitions(), |p| check_weighted_content_sum(&p)),
            Identity::DegreeVector => par_map(partitions(), |p| {
                let v = p.degree_vector();
                check_degree_vector_identity(&v).unwrap_or_else(|e| {
                    timed(Identity::DegreeVector, SweepRange::DegreeVector(v), || error_verdict(Some(&p), e))
                })
            }),
            Identity::Average => par_map(sizes(), check_average),
            Identity::Plancherel => par_map(sizes(), plancherel_normalization),
            Identity::Appell => par_map(sizes(), check_appell),
            Identity::Rectangle => {
                let dims: Vec<(usize, usize)> = (1..=max_size)
                    .flat_map(|n| (1..=max_size).map(move |m| (n, m)))
                    .collect();
                par_map(dims, |(n, m)| rectangle_duality(n, m))
            }
            Identity::Jacobi => {
                let samples = default_jacobi_samples();
                par_map(partitions(), |p| {
                    jacobi_form_search(&p, &samples).unwrap_or_else(|e| {
                        timed(Identity::Jacobi, SweepRange::Partition(p.clone()), || error_verdict(Some(&p), e))
                    })
                })
            }
            Identity::Decomposition => {
                let eligible: Vec<Partition> = partitions()
                    .into_iter()
                    .filter(|p| !p.is_empty() && p.len() <= DEFAULT_LENGTH_BOUND)
                    .collect();
                let mut out = par_map(eligible, |p| check_decomposition(&p));
                let lengths: Vec<usize> = (1..=max_size.min(5)).collect();
                out.extend(par_map(lengths, check_t_map));
                out
            }
        }
    }
}

fn par_map<T: Send, F>(items: Vec<T>, f: F) -> Vec<VerificationReport>
where
    F: Fn(T) -> VerificationReport + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown identity {0:?}")]
pub struct UnknownIdentity(pub String);

impl FromStr for Identity {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}
