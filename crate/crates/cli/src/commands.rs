use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use wlpoly::identities::{Identity, Status};
use wlpoly::partitions::{partitions_of, partitions_up_to, Partition};
use wlpoly::polyalg::{BigRational, MPoly};
use wlpoly::recurrence::{wlp_alt, wlp_thm1, whp_recurrence, RecurrenceKind, RecurrenceTable};
use wlpoly::sequences::{Alpha, Family};
use wlpoly::wronskian::{wronskian_classical_monic, wronskian_poly, WronskianError, WronskianRequest};

use crate::args::{BenchArgs, ComputeArgs, FamilyArg, Format, MethodArg, PolySelect, TableArgs, VerifyArgs};
use crate::output::{self, Row};
use crate::CliError;

/// A validated family/method/parameter combination.
struct Resolved {
    family: FamilyArg,
    method: MethodArg,
    alpha: Alpha,
    beta: Option<BigRational>,
}

fn resolve(sel: &PolySelect) -> Result<Resolved, CliError> {
    use FamilyArg::*;
    use MethodArg::*;
    let usage = |m: &str| Err(CliError::Usage(m.to_string()));
    let method = match (sel.family, sel.method) {
        (Laguerre | Hermite, None) => Recurrence,
        (ClassicalLaguerre | Jacobi, None) => Wronskian,
        (Hermite, Some(RecurrenceAlt)) => return usage("--method recurrence-alt is only available for --family laguerre"),
        (ClassicalLaguerre | Jacobi, Some(Recurrence | RecurrenceAlt)) => {
            return usage("classical-laguerre and jacobi are only available with --method wronskian")
        }
        (_, Some(m)) => m,
    };
    if sel.family == Hermite && sel.alpha.is_some() {
        return usage("--alpha does not apply to --family hermite");
    }
    if sel.family != Jacobi && sel.beta.is_some() {
        return usage("--beta only applies to --family jacobi");
    }
    if sel.family == Jacobi && (sel.alpha.is_none() || sel.beta.is_none()) {
        return usage("--family jacobi needs rational --alpha and --beta");
    }
    Ok(Resolved {
        family: sel.family,
        method,
        alpha: sel.alpha.clone().map_or(Alpha::Symbolic, Alpha::Value),
        beta: sel.beta.clone(),
    })
}

fn wronskian_failure(e: WronskianError) -> CliError {
    match e {
        WronskianError::Sequence(_) | WronskianError::DegenerateLeadingCoefficient(_) => CliError::Usage(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn evaluate(res: &Resolved, lambda: &Partition) -> Result<MPoly, CliError> {
    let internal = |e: wlpoly::recurrence::RecurrenceError| CliError::Internal(e.to_string());
    let oracle = |family: Family| {
        wronskian_poly(&WronskianRequest::new(family, lambda.clone())).map_err(wronskian_failure)
    };
    let poly = match (res.family, res.method) {
        (FamilyArg::Laguerre, MethodArg::Recurrence) => wlp_thm1(lambda).map_err(internal)?,
        (FamilyArg::Laguerre, MethodArg::RecurrenceAlt) => wlp_alt(lambda).map_err(internal)?,
        (FamilyArg::Laguerre, MethodArg::Wronskian) => oracle(Family::ModifiedLaguerre)?,
        (FamilyArg::Hermite, MethodArg::Wronskian) => oracle(Family::Hermite)?,
        (FamilyArg::Hermite, _) => whp_recurrence(lambda).map_err(internal)?,
        (FamilyArg::ClassicalLaguerre, _) => {
            return wronskian_classical_monic(lambda, &res.alpha).map_err(wronskian_failure)
        }
        (FamilyArg::Jacobi, _) => {
            let Alpha::Value(alpha) = res.alpha.clone() else {
                unreachable!("resolve requires a value for jacobi")
            };
            let beta = res.beta.clone().expect("resolve requires beta for jacobi");
            return oracle(Family::ModifiedJacobi { alpha, beta });
        }
    };
    Ok(res.alpha.apply(&poly))
}

fn rows_for(res: &Resolved, partitions: Vec<Partition>) -> Result<Vec<Row>, CliError> {
    partitions
        .into_par_iter()
        .map(|p| evaluate(res, &p).map(|poly| Row::new(p, poly)))
        .collect()
}

fn render(rows: &[Row], format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Human => output::human(rows),
        Format::Json => output::json(rows),
        Format::Csv => output::csv(rows)?,
        Format::Latex => output::latex(rows),
    })
}

pub fn compute(args: &ComputeArgs) -> Result<(), CliError> {
    let res = resolve(&args.select)?;
    let poly = evaluate(&res, &args.partition)?;
    let text = match args.format {
        Format::Human => format!("{poly}\n"),
        Format::Latex => format!("{}\n", poly.to_latex()),
        Format::Json => {
            serde_json::to_string(&Row::new(args.partition.clone(), poly)).expect("rows always serialize") + "\n"
        }
        Format::Csv => output::csv(&[Row::new(args.partition.clone(), poly)])?,
    };
    print!("{text}");
    Ok(())
}

pub fn table(args: &TableArgs) -> Result<(), CliError> {
    let res = resolve(&args.select)?;
    let rows = rows_for(&res, partitions_up_to(args.max_size))?;
    print!("{}", render(&rows, args.format)?);
    Ok(())
}

/// Polynomial identities default to size 8 and purely combinatorial ones
/// to 10; the rest are sized so a default run takes seconds.
fn default_max_size(identity: Identity) -> usize {
    match identity {
        Identity::Content | Identity::WeightedContent | Identity::DegreeVector | Identity::Plancherel => 10,
        Identity::Rectangle | Identity::Jacobi => 4,
        Identity::Decomposition => 7,
        Identity::Appell => 12,
        Identity::Thm1 | Identity::Alt | Identity::Hermite | Identity::Average => 8,
    }
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let max = args.max_size.unwrap_or_else(|| default_max_size(args.identity));
    let reports = args.identity.sweep(max);
    for r in &reports {
        println!("{}", r.to_json());
    }
    // An infeasible Jacobi form is a finding, not a failure.
    match reports.iter().find(|r| r.status == Status::Fail) {
        Some(r) => Err(CliError::VerifyFailed(r.to_json())),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct BenchRow {
    size: usize,
    partitions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    recurrence_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    recurrence_alt_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wronskian_ms: Option<f64>,
}

#[derive(Serialize)]
struct BenchReport {
    family: &'static str,
    max_size: usize,
    threads: usize,
    rows: Vec<BenchRow>,
    /// SHA-256 of every polynomial's JSON, one per line, in canonical order.
    digest: String,
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

pub fn bench(args: &BenchArgs) -> Result<(), CliError> {
    let (family_name, kind, oracle_family) = match args.family {
        FamilyArg::Laguerre => ("laguerre", RecurrenceKind::Laguerre, Family::ModifiedLaguerre),
        FamilyArg::Hermite => ("hermite", RecurrenceKind::Hermite, Family::Hermite),
        _ => return Err(CliError::Usage("bench supports --family laguerre or hermite".into())),
    };
    let methods: Vec<MethodArg> = match args.method {
        None => vec![MethodArg::Recurrence, MethodArg::Wronskian],
        Some(MethodArg::RecurrenceAlt) if args.family != FamilyArg::Laguerre => {
            return Err(CliError::Usage("--method recurrence-alt is only available for --family laguerre".into()))
        }
        Some(m) => vec![m],
    };

    let mut outputs: Vec<Vec<MPoly>> = vec![Vec::new(); methods.len()];
    let mut rows = Vec::new();
    let tables: Vec<Option<RecurrenceTable>> = methods
        .iter()
        .map(|m| match m {
            MethodArg::Recurrence => Some(RecurrenceTable::new(kind)),
            MethodArg::RecurrenceAlt => Some(RecurrenceTable::new(RecurrenceKind::LaguerreAlt)),
            MethodArg::Wronskian => None,
        })
        .collect();
    for size in 0..=args.max_size {
        let level = partitions_of(size);
        let mut row = BenchRow {
            size,
            partitions: level.len(),
            recurrence_ms: None,
            recurrence_alt_ms: None,
            wronskian_ms: None,
        };
        for (i, method) in methods.iter().enumerate() {
            let start = Instant::now();
            let polys: Result<Vec<MPoly>, CliError> = match &tables[i] {
                Some(table) => level
                    .par_iter()
                    .map(|p| table.get(p).map_err(|e| CliError::Internal(e.to_string())))
                    .collect(),
                None => level
                    .par_iter()
                    .map(|p| {
                        wronskian_poly(&WronskianRequest::new(oracle_family.clone(), p.clone()))
                            .map_err(wronskian_failure)
                    })
                    .collect(),
            };
            let ms = Some(millis(start));
            match method {
                MethodArg::Recurrence => row.recurrence_ms = ms,
                MethodArg::RecurrenceAlt => row.recurrence_alt_ms = ms,
                MethodArg::Wronskian => row.wronskian_ms = ms,
            }
            outputs[i].extend(polys?);
        }
        rows.push(row);
    }
    if let Some(pos) = outputs.iter().position(|o| o != &outputs[0]) {
        return Err(CliError::Internal(format!(
            "{:?} and {:?} disagree",
            methods[0], methods[pos]
        )));
    }
    let mut hasher = Sha256::new();
    for p in &outputs[0] {
        hasher.update(p.to_json().as_bytes());
        hasher.update(b"\n");
    }
    let report = BenchReport {
        family: family_name,
        max_size: args.max_size,
        threads: rayon::current_num_threads(),
        rows,
        digest: format!("{:x}", hasher.finalize()),
    };
    println!("{}", serde_json::to_string(&report).expect("bench report serializes"));
    Ok(())
}
