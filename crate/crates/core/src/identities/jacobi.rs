//! Coefficient matching for a Jacobi analogue of the Laguerre recurrence:
//!
//! `F_λ A_λ = Σ_{μ⋖λ} (a x + b) F_μ A_μ + Σ_{ρ∈R₂⁻(λ)} (c x² + d x + e) F_ρ A_ρ`
//!
//! with one set of real unknowns per partition, solved at fixed rational
//! `(α, β)`.

use num_bigint::BigInt;

use super::{timed, Identity, IdentityError, SampleCertificate, Status, SweepRange, VerificationReport, Witness};
use crate::partitions::Partition;
use crate::polyalg::{ratio, solve_linear, BigRational, InfeasibilityCertificate, LinearSolution, MPoly};
use crate::sequences::{modified_jacobi_upto, Family};
use crate::wronskian::{wronskian_poly, WronskianError, WronskianRequest};

/// Parameter samples whose sums `α+β` are not integers, so no step of the
/// modified Jacobi recurrence is singular.
pub fn default_jacobi_samples() -> Vec<(BigRational, BigRational)> {
    vec![
        (ratio(1, 2), ratio(1, 3)),
        (ratio(7, 3), ratio(-2, 5)),
        (ratio(5, 4), ratio(11, 7)),
    ]
}

/// Row `k` matches the coefficient of `x^k`; columns follow `unknowns`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiSystem {
    pub unknowns: Vec<String>,
    pub matrix: Vec<Vec<BigRational>>,
    pub rhs: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobiOutcome {
    Solvable(Vec<BigRational>),
    Infeasible(InfeasibilityCertificate),
}

fn weighted_jacobi(family: &Family, p: &Partition) -> Result<MPoly, WronskianError> {
    let poly = wronskian_poly(&WronskianRequest::new(family.clone(), p.clone()))?;
    Ok(poly.scale(&BigRational::from_integer(BigInt::from(p.f_count()))))
}

pub fn jacobi_system(lambda: &Partition, alpha: &BigRational, beta: &BigRational) -> Result<JacobiSystem, IdentityError> {
    modified_jacobi_upto(lambda.degree_vector().entries().first().copied().unwrap_or(0), alpha, beta)?;
    let family = Family::ModifiedJacobi {
        alpha: alpha.clone(),
        beta: beta.clone(),
    };
    let get = |p: &Partition| {
        weighted_jacobi(&family, p).map_err(|e| match e {
            WronskianError::Sequence(s) => IdentityError::Sequence(s),
            other => panic!("Jacobi Wronskian for {p} failed: {other}"),
        })
    };
    let x = MPoly::x();
    let mut unknowns = Vec::new();
    let mut columns: Vec<MPoly> = Vec::new();
    for cover in lambda.covers_down().unwrap_or_default() {
        let w = get(&cover.smaller)?;
        unknowns.push(format!("a{}", cover.smaller));
        columns.push(&x * &w);
        unknowns.push(format!("b{}", cover.smaller));
        columns.push(w);
    }
    for strip in lambda.border_strips_down(2) {
        let w = get(&strip.smaller)?;
        unknowns.push(format!("c{}", strip.smaller));
        columns.push(&x.pow(2) * &w);
        unknowns.push(format!("d{}", strip.smaller));
        columns.push(&x * &w);
        unknowns.push(format!("e{}", strip.smaller));
        columns.push(w);
    }
    let target = get(lambda)?;
    let rows = lambda.size() as u32 + 1;
    let matrix = (0..rows).map(|k| columns.iter().map(|c| c.x_coeff(k)).collect()).collect();
    let rhs = (0..rows).map(|k| target.x_coeff(k)).collect();
    Ok(JacobiSystem { unknowns, matrix, rhs })
}

impl JacobiSystem {
    pub fn solve(&self) -> JacobiOutcome {
        match solve_linear(&self.matrix, &self.rhs).expect("system is rectangular by construction") {
            LinearSolution::Infeasible(cert) => JacobiOutcome::Infeasible(cert),
            sol => JacobiOutcome::Solvable(sol.solution().expect("feasible").to_vec()),
        }
    }
}

/// Pass when the form is solvable at every sample, infeasible when it is
/// infeasible at every sample, and fail when the samples disagree. The
/// empty partition is the initial condition and always passes.
pub fn jacobi_form_search(
    lambda: &Partition,
    samples: &[(BigRational, BigRational)],
) -> Result<VerificationReport, IdentityError> {
    let mut outcomes = Vec::with_capacity(samples.len());
    let start = std::time::Instant::now();
    if !lambda.is_empty() {
        for (a, b) in samples {
            outcomes.push((a, b, jacobi_system(lambda, a, b)?.solve()));
        }
    }
    let elapsed = start.elapsed().as_millis() as u64;
    let mut report = timed(Identity::Jacobi, SweepRange::Partition(lambda.clone()), || {
        let certificates: Vec<SampleCertificate> = outcomes
            .iter()
            .filter_map(|(a, b, o)| match o {
                JacobiOutcome::Infeasible(cert) => Some(SampleCertificate {
                    alpha: (*a).clone(),
                    beta: (*b).clone(),
                    certificate: cert.clone(),
                }),
                JacobiOutcome::Solvable(_) => None,
            })
            .collect();
        if certificates.is_empty() {
            return (Status::Pass, None);
        }
        let status = if certificates.len() == outcomes.len() {
            Status::Infeasible
        } else {
            Status::Fail
        };
        let detail = (status == Status::Fail).then(|| {
            format!("infeasible at {} of {} samples", certificates.len(), outcomes.len())
        });
        (
            status,
            Some(Witness {
                partition: Some(lambda.clone()),
                certificates,
                detail,
                ..Witness::default()
            }),
        )
    });
    report.ms += elapsed;
    Ok(report)
}
