use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{error_verdict, residual_verdict, timed, Identity, IdentityError, Status, SweepRange, VerificationReport, Witness};
use crate::partitions::{factorial as factorial_u, partitions_of, DegreeVector, Partition};
use crate::polyalg::{factorial, ratio, BigRational, MPoly, Var};
use crate::recurrence::{
    b_term, proof_decomposition, shifted_lowered, sign, t_map, t_map_domain, wlp_alt, wlp_thm1, whp_recurrence,
};
use crate::sequences::{
    appell_from_coeffs, c_from_z, constant_terms, hermite_upto, modified_jacobi_upto, modified_laguerre_upto, Alpha,
    AppellSpec, Family,
};
use crate::wronskian::{wronskian_classical_monic, wronskian_poly, WronskianError, WronskianRequest};

fn laguerre_oracle(p: &Partition) -> Result<MPoly, WronskianError> {
    wronskian_poly(&WronskianRequest::new(Family::ModifiedLaguerre, p.clone()))
}

fn hermite_oracle(p: &Partition) -> Result<MPoly, WronskianError> {
    wronskian_poly(&WronskianRequest::new(Family::Hermite, p.clone()))
}

fn f_rational(p: &Partition) -> BigRational {
    BigRational::from_integer(BigInt::from(p.f_count()))
}

fn against_oracle<E1: std::fmt::Display, E2: std::fmt::Display>(
    lambda: &Partition,
    computed: Result<MPoly, E1>,
    oracle: Result<MPoly, E2>,
) -> (Status, Option<Witness>) {
    match (computed, oracle) {
        (Ok(c), Ok(o)) => residual_verdict(Some(lambda), &c - &o),
        (Err(e), _) => error_verdict(Some(lambda), e),
        (_, Err(e)) => error_verdict(Some(lambda), e),
    }
}

/// The content/domino recurrence against the determinant definition.
pub fn check_thm1(lambda: &Partition) -> VerificationReport {
    timed(Identity::Thm1, SweepRange::Partition(lambda.clone()), || {
        against_oracle(lambda, wlp_thm1(lambda), laguerre_oracle(lambda))
    })
}

/// The all-strip recurrence against the determinant definition.
pub fn check_alt(lambda: &Partition) -> VerificationReport {
    timed(Identity::Alt, SweepRange::Partition(lambda.clone()), || {
        against_oracle(lambda, wlp_alt(lambda), laguerre_oracle(lambda))
    })
}

pub fn check_hermite(lambda: &Partition) -> VerificationReport {
    timed(Identity::Hermite, SweepRange::Partition(lambda.clone()), || {
        against_oracle(lambda, whp_recurrence(lambda), hermite_oracle(lambda))
    })
}

/// `Σ_{λ⊢n} F_λ² l_λ = n! (x+α)^n`.
pub fn check_average(n: usize) -> VerificationReport {
    timed(Identity::Average, SweepRange::Size(n), || {
        let mut lhs = MPoly::zero();
        for lam in partitions_of(n) {
            let l = match laguerre_oracle(&lam) {
                Ok(l) => l,
                Err(e) => return error_verdict(Some(&lam), e),
            };
            let f = f_rational(&lam);
            lhs.add_scaled(&l, &(&f * &f));
        }
        let rhs = (&MPoly::x() + &MPoly::alpha())
            .pow(n as u32)
            .scale(&BigRational::from_integer(factorial(n as u64)));
        residual_verdict(None, &lhs - &rhs)
    })
}

/// `Σ_{λ⋗μ} c(λ/μ) = Σ_{ρ⋖μ} c(μ/ρ)`.
pub fn check_content_transfer(mu: &Partition) -> VerificationReport {
    timed(Identity::Content, SweepRange::Partition(mu.clone()), || {
        let up: i64 = mu.covers_up().iter().map(|c| c.content).sum();
        let down: i64 = mu.covers_down().unwrap_or_default().iter().map(|c| c.content).sum();
        residual_verdict(Some(mu), MPoly::from_int(up - down))
    })
}

/// `Σ_{λ⋗μ} F_λ c(λ/μ) = 0`.
pub fn check_weighted_content_sum(mu: &Partition) -> VerificationReport {
    timed(Identity::WeightedContent, SweepRange::Partition(mu.clone()), || {
        let total: BigInt = mu
            .covers_up()
            .iter()
            .map(|c| BigInt::from(c.larger.f_count()) * c.content)
            .sum();
        residual_verdict(Some(mu), MPoly::constant(BigRational::from_integer(total)))
    })
}

/// Both sides of
/// `Σ_k (n_k+1-r)/(n_k+1) Π_{j≠k} (n_k+1-n_j)/(n_k-n_j) = r Π_k n_k/(n_k+1)`.
pub fn degree_vector_sides(n: &[i64]) -> Result<(BigRational, BigRational), IdentityError> {
    let r = n.len() as i64;
    let frac = |num: i64, den: i64| {
        if den == 0 {
            Err(IdentityError::ZeroDenominator)
        } else {
            Ok(ratio(num, den))
        }
    };
    let mut lhs = BigRational::zero();
    for (k, &nk) in n.iter().enumerate() {
        let mut term = frac(nk + 1 - r, nk + 1)?;
        for (j, &nj) in n.iter().enumerate() {
            if j != k {
                term *= frac(nk + 1 - nj, nk - nj)?;
            }
        }
        lhs += term;
    }
    let mut rhs = BigRational::from_integer(r.into());
    for &nk in n {
        rhs *= frac(nk, nk + 1)?;
    }
    Ok((lhs, rhs))
}

pub fn check_degree_vector_identity(n: &DegreeVector) -> Result<VerificationReport, IdentityError> {
    let entries: Vec<i64> = n.entries().iter().map(|&v| v as i64).collect();
    let (lhs, rhs) = degree_vector_sides(&entries)?;
    Ok(timed(Identity::DegreeVector, SweepRange::DegreeVector(n.clone()), || {
        residual_verdict(Some(&n.to_partition()), MPoly::constant(lhs - rhs))
    }))
}

/// Monic classical Wronskian of the `m × n` rectangle `(n^m)` against the
/// modified Wronskian of its conjugate at `α → -α-n`.
pub fn rectangle_duality(n: usize, m: usize) -> VerificationReport {
    timed(Identity::Rectangle, SweepRange::Rectangle { n, m }, || {
        let rect = Partition::rectangle(n, m);
        let lhs = match wronskian_classical_monic(&rect, &Alpha::Symbolic) {
            Ok(p) => p,
            Err(e) => return error_verdict(Some(&rect), e),
        };
        let rhs = match wlp_thm1(&rect.conjugate()) {
            Ok(p) => p,
            Err(e) => return error_verdict(Some(&rect), e),
        };
        let reparam = &(-MPoly::alpha()) - &MPoly::from_int(n as i64);
        residual_verdict(Some(&rect), &lhs - &rhs.substitute(Var::Alpha, &reparam))
    })
}

/// `Σ_{λ⊢n} F_λ² = n!`.
pub fn plancherel_normalization(n: usize) -> VerificationReport {
    timed(Identity::Plancherel, SweepRange::Size(n), || {
        let total: BigUint = partitions_of(n).iter().map(|p| p.f_count().pow(2)).sum();
        let diff = BigInt::from(total) - BigInt::from(factorial_u(n));
        residual_verdict(None, MPoly::constant(BigRational::from_integer(diff)))
    })
}

/// Regenerates modified Laguerre and Hermite of degree `n` from the
/// cumulants of their constant terms, and checks `A_n' = n A_{n-1}` for
/// both and for modified Jacobi at `(α, β) = (1/2, 1/3)`.
pub fn check_appell(n: usize) -> VerificationReport {
    timed(Identity::Appell, SweepRange::Size(n), || {
        let jacobi = match modified_jacobi_upto(n, &ratio(1, 2), &ratio(1, 3)) {
            Ok(j) => j,
            Err(e) => return error_verdict(None, e),
        };
        let families = [("laguerre", modified_laguerre_upto(n)), ("hermite", hermite_upto(n)), ("jacobi", jacobi)];
        for (name, members) in &families {
            if *name != "jacobi" {
                let rebuilt = c_from_z(&constant_terms(members))
                    .and_then(|c| appell_from_coeffs(&AppellSpec::new(c), n));
                match rebuilt {
                    Ok(p) if p == members[n] => {}
                    Ok(p) => return labelled(&format!("{name} regeneration"), &p - &members[n]),
                    Err(e) => return error_verdict(None, e),
                }
            }
            if n >= 1 {
                let residual = &members[n].derivative_x() - &members[n - 1].scale_int(n as i64);
                if !residual.is_zero() {
                    return labelled(&format!("{name} derivative"), residual);
                }
            }
        }
        (Status::Pass, None)
    })
}

fn labelled(detail: &str, residual: MPoly) -> (Status, Option<Witness>) {
    (
        Status::Fail,
        Some(Witness {
            residual: Some(residual),
            detail: Some(detail.to_string()),
            ..Witness::default()
        }),
    )
}

/// `B = 0`, the closed forms of `A` and `C`, and
/// `A + prefactor·B + C = F_λ l_λ` against the determinant definition.
pub fn check_decomposition(lambda: &Partition) -> VerificationReport {
    timed(Identity::Decomposition, SweepRange::Partition(lambda.clone()), || {
        let d = match proof_decomposition(lambda) {
            Ok(d) => d,
            Err(e) => return error_verdict(Some(lambda), e),
        };
        let oracle = |p: &Partition| laguerre_oracle(p).map(|l| l.scale(&f_rational(p)));
        let fail = |part: &str, residual: MPoly| {
            (
                Status::Fail,
                Some(Witness {
                    partition: Some(lambda.clone()),
                    residual: Some(residual),
                    detail: Some(part.to_string()),
                    ..Witness::default()
                }),
            )
        };
        let x = MPoly::x();
        let x_plus_a = &x + &MPoly::alpha();

        let mut a = MPoly::zero();
        for cover in lambda.covers_down().unwrap_or_default() {
            let w = match oracle(&cover.smaller) {
                Ok(w) => w,
                Err(e) => return error_verdict(Some(&cover.smaller), e),
            };
            a += &(&(&x_plus_a - &MPoly::from_int(cover.content)) * &w);
        }
        let mut dominoes = MPoly::zero();
        for strip in lambda.border_strips_down(2) {
            let w = match oracle(&strip.smaller) {
                Ok(w) => w,
                Err(e) => return error_verdict(Some(&strip.smaller), e),
            };
            dominoes.add_scaled(&w, &BigRational::from_integer(strip.sign().into()));
        }
        let c = (&x * &dominoes).scale_int(lambda.size() as i64 - 1);
        let total = match oracle(lambda) {
            Ok(w) => w,
            Err(e) => return error_verdict(Some(lambda), e),
        };

        if !d.b.is_zero() {
            return fail("B", d.b.clone());
        }
        if d.a != a {
            return fail("A", &d.a - &a);
        }
        if d.c != c {
            return fail("C", &d.c - &c);
        }
        let residual = &d.total() - &total;
        if !residual.is_zero() {
            return fail("A + prefactor*B + C", residual);
        }
        (Status::Pass, None)
    })
}

/// Partitions of length `r` used to exercise the index identities of `T`.
fn t_map_representatives(r: usize) -> Vec<Partition> {
    let ones = Partition::new(vec![1; r]).expect("valid");
    let mut hook = vec![1; r];
    hook[0] = 3;
    let staircase = Partition::new((1..=r).rev().collect()).expect("valid");
    vec![ones, Partition::new(hook).expect("valid"), staircase]
}

/// On `X = {(j, σ) : σ(j) ≠ r}`: `T` lands in `X`, `T∘T = id`, signs
/// flip, `σ(j) = τ(k)`, `σ(n[j]) = τ(n[k])` and `b_{j,σ} = -b_{T(j,σ)}`.
pub fn check_t_map(r: usize) -> VerificationReport {
    timed(Identity::Decomposition, SweepRange::Length(r), || {
        let domain = t_map_domain(r);
        let reps = t_map_representatives(r);
        let bad = |detail: String, partition: Option<&Partition>, residual: Option<MPoly>| {
            (
                Status::Fail,
                Some(Witness {
                    partition: partition.cloned(),
                    residual,
                    detail: Some(detail),
                    ..Witness::default()
                }),
            )
        };
        for (j, sigma) in &domain {
            let Some((k, tau)) = t_map(*j, sigma) else {
                return bad(format!("T undefined at j={j}, σ={sigma:?}"), None, None);
            };
            if tau[k - 1] == r {
                return bad(format!("T(j={j}, σ={sigma:?}) leaves X"), None, None);
            }
            if t_map(k, &tau) != Some((*j, sigma.clone())) {
                return bad(format!("T∘T ≠ id at j={j}, σ={sigma:?}"), None, None);
            }
            if sign(sigma) != -sign(&tau) || sigma[j - 1] != tau[k - 1] {
                return bad(format!("sign or value not preserved at j={j}, σ={sigma:?}"), None, None);
            }
            for lam in &reps {
                if shifted_lowered(lam, *j, sigma) != shifted_lowered(lam, k, &tau) {
                    return bad(format!("σ(n[j]) ≠ τ(n[k]) at j={j}, σ={sigma:?}"), Some(lam), None);
                }
                let sum = &b_term(lam, *j, sigma) + &b_term(lam, k, &tau);
                if !sum.is_zero() {
                    return bad(format!("b not antisymmetric at j={j}, σ={sigma:?}"), Some(lam), Some(sum));
                }
            }
        }
        let expected = r * (1..=r).product::<usize>() - (1..=r).product::<usize>();
        if domain.len() != expected {
            return bad(format!("|X| = {} but expected {expected}", domain.len()), None, None);
        }
        (Status::Pass, None)
    })
}
