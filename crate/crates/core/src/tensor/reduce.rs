//! Degree reduction to the ground vectors `1 ⊗ ⋯ ⊗ 1 ⊗ w` and bounded
//! cyclic-generation closure.

use std::collections::VecDeque;

use num_traits::Zero;
use serde::Serialize;

use super::{components, deg, ground_vector, TensorBasis, TensorError, TensorModule, TensorVector};
use crate::algebra::Generator;
use crate::analysis::{vandermonde_extract, AnalysisError, ExpSumSpec};
use crate::arith::SpanBasis;
use crate::modules::{ind_depth, IndVector, ModuleOracle, PbwMonomial};
use crate::report::{Check, Report};

/// One call of [`reduce_degree`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub from_degree: Vec<u32>,
    /// Zero-based slot whose exponent is removed.
    pub slot: usize,
    /// `"I"` or `"L"`.
    pub family: String,
    pub first_k: i64,
    pub samples: usize,
    /// Power `j` in the extracted coefficient of `λ_slot^k k^j`.
    pub power: u32,
    pub to_degree: Vec<u32>,
}

/// Produces a nonzero vector of strictly smaller degree in the submodule
/// generated by `u`.
pub fn reduce_degree(
    module: &TensorModule,
    u: &TensorVector,
) -> Result<(TensorVector, ReductionStep), TensorError> {
    let top = deg(u)?;
    let Some(slot) = top.iter().position(|&p| p > 0) else {
        return Err(TensorError::DegreeZero);
    };
    let factors = module.params.factors();
    let depth = components(u)
        .values()
        .map(|w| ind_depth(w).expect("components are nonzero"))
        .max()
        .expect("u is nonzero") as i64;
    let max_exp = u
        .keys()
        .flat_map(|b| b.exps.iter().copied())
        .max()
        .unwrap_or(0);
    let count = module.slots() * (max_exp as usize + 3);

    let use_i = !factors[slot].beta.is_zero();
    let make = |k: i64| {
        if use_i {
            Generator::I(k)
        } else {
            Generator::L(k)
        }
    };
    let samples: Vec<(i64, TensorVector)> = (depth..depth + count as i64)
        .map(|k| (k, module.act(make(k), u)))
        .collect();

    let spec = ExpSumSpec::new(
        factors
            .iter()
            .map(|f| (f.lambda().clone(), max_exp + 1))
            .collect(),
    )
    .map_err(|e| match e {
        AnalysisError::DegenerateSpec(msg) => TensorError::DegenerateParams(msg),
        other => TensorError::Analysis(other),
    })?;
    let parts = vandermonde_extract(&samples, &spec).map_err(|e| match e {
        AnalysisError::SingularSystem => {
            TensorError::DegenerateParams("extraction system is singular".into())
        }
        other => TensorError::Analysis(other),
    })?;
    let power = top[slot] + u32::from(!use_i);
    let out = parts
        .get(&(slot, power))
        .cloned()
        .unwrap_or_else(TensorVector::zero);
    if out.is_zero() {
        return Err(TensorError::ReductionFailed(format!(
            "extracted coefficient of slot {slot}, power {power} vanishes"
        )));
    }
    let to = deg(&out)?;
    if to >= top {
        return Err(TensorError::ReductionFailed(format!(
            "degree {to:?} is not below {top:?}"
        )));
    }
    Ok((
        out,
        ReductionStep {
            from_degree: top,
            slot,
            family: if use_i { "I" } else { "L" }.to_string(),
            first_k: depth,
            samples: count,
            power,
            to_degree: to,
        },
    ))
}

/// Repeats [`reduce_degree`] until the degree is zero.
pub fn descend_to_ground(
    module: &TensorModule,
    u: &TensorVector,
) -> Result<(TensorVector, Vec<ReductionStep>), TensorError> {
    let mut v = u.clone();
    let mut trace = Vec::new();
    while deg(&v)?.iter().any(|&p| p > 0) {
        let (next, step) = reduce_degree(module, &v)?;
        v = next;
        trace.push(step);
    }
    Ok((v, trace))
}

/// Bounds for [`cyclic_generation_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicOptions {
    pub exponent_cutoff: u32,
    pub depth_cutoff: u32,
    /// Extra room above the cutoffs in which intermediate vectors are kept.
    pub slack: u32,
    /// Generators `L_k, I_k` with `|k| <= window` are applied.
    pub window: i64,
}

impl CyclicOptions {
    pub fn new(exponent_cutoff: u32, depth_cutoff: u32) -> Self {
        CyclicOptions {
            exponent_cutoff,
            depth_cutoff,
            slack: 2,
            window: 3,
        }
    }
}

fn pbw_monomials(max_depth: u32) -> Vec<PbwMonomial> {
    // Partitions into L-parts and I-parts with total depth <= max_depth.
    fn parts(budget: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(acc.clone());
        for p in (1..=max_part.min(budget)).rev() {
            acc.push(p);
            parts(budget - p, p, acc, out);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    parts(max_depth, max_depth, &mut Vec::new(), &mut all);
    let mut out = Vec::new();
    for l in &all {
        let used: u32 = l.iter().sum();
        let mut rest = Vec::new();
        parts(
            max_depth - used,
            max_depth - used,
            &mut Vec::new(),
            &mut rest,
        );
        for i in rest {
            out.push(PbwMonomial::sorted(l.clone(), i));
        }
    }
    out.sort();
    out
}

fn exponent_vectors(slots: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..slots {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Closes `span{1 ⊗ ⋯ ⊗ 1 ⊗ w}` under `L_k, I_k` (`|k| <= window`), keeping only
/// vectors supported in the box enlarged by `slack`, and reports whether every
/// basis vector `∂^p ⊗ u` with `p_i <= exponent_cutoff`, `depth(u) <= depth_cutoff`
/// was reached. Reaching all of them proves they lie in the generated
/// submodule; missing some proves nothing.
pub fn cyclic_generation_check(
    module: &TensorModule,
    w: &IndVector,
    opts: CyclicOptions,
) -> Report {
    let mut report = Report::new();
    let inputs = format!(
        "{}; w = {w:?}; cutoffs (exponent {}, depth {}), slack {}, |k| <= {}",
        module.label(),
        opts.exponent_cutoff,
        opts.depth_cutoff,
        opts.slack,
        opts.window
    );
    if w.is_zero() {
        report.push(Check::new(
            "cyclic-generation",
            inputs,
            "nonzero w",
            "w = 0",
            false,
        ));
        return report;
    }
    let w_depth = w.keys().map(PbwMonomial::depth).max().unwrap_or(0) as u32;
    let exp_box = opts.exponent_cutoff + opts.slack;
    let depth_box = opts.depth_cutoff.max(w_depth) + opts.slack;
    let in_box = |v: &TensorVector| {
        v.keys()
            .all(|b| b.exps.iter().all(|&e| e <= exp_box) && b.mono.depth() <= depth_box as u64)
    };

    let targets: Vec<TensorBasis> = exponent_vectors(module.slots(), opts.exponent_cutoff)
        .into_iter()
        .flat_map(|exps| {
            pbw_monomials(opts.depth_cutoff)
                .into_iter()
                .map(move |mono| TensorBasis {
                    exps: exps.clone(),
                    mono,
                })
        })
        .collect();

    let gens: Vec<Generator> = (-opts.window..=opts.window)
        .flat_map(|k| [Generator::L(k), Generator::I(k)])
        .collect();
    let mut span = SpanBasis::new();
    let mut queue = VecDeque::new();
    if let Some(row) = span.insert(&ground_vector(module.slots(), w)) {
        queue.push_back(row);
    }
    let covered = |span: &SpanBasis<TensorBasis>| {
        targets
            .iter()
            .filter(|t| span.contains(&TensorVector::basis((*t).clone())))
            .count()
    };
    let mut last_check = 0usize;
    while let Some(v) = queue.pop_front() {
        for &g in &gens {
            let x = module.act(g, &v);
            if x.is_zero() || !in_box(&x) {
                continue;
            }
            if let Some(row) = span.insert(&x) {
                queue.push_back(row);
            }
        }
        if span.dim() >= targets.len() && span.dim() >= last_check + targets.len() / 4 + 1 {
            last_check = span.dim();
            if covered(&span) == targets.len() {
                break;
            }
        }
    }
    let hit = covered(&span);
    let missing: Vec<String> = targets
        .iter()
        .filter(|t| !span.contains(&TensorVector::basis((*t).clone())))
        .take(5)
        .map(|t| t.to_string())
        .collect();
    let full = hit == targets.len();
    report.push(
        Check::new(
            "cyclic-generation",
            inputs,
            format!("FULL: all {} target basis vectors", targets.len()),
            if full {
                format!(
                    "FULL: {hit} of {} covered (span dimension {})",
                    targets.len(),
                    span.dim()
                )
            } else {
                format!(
                    "PARTIAL: {hit} of {} covered; missing e.g. {}",
                    targets.len(),
                    missing.join(", ")
                )
            },
            full,
        )
        .tentative(),
    );
    report
}

/// Descends from `u` to a ground vector, then runs the cyclic-generation closure
/// from its `Ind` component.
pub fn irreducibility_witness(
    module: &TensorModule,
    u: &TensorVector,
    opts: CyclicOptions,
) -> Report {
    let mut report = Report::new();
    let inputs = format!("{}; u = {u:?}", module.label());
    let (ground, trace) = match descend_to_ground(module, u) {
        Ok(r) => r,
        Err(e) => {
            report.counterexample(format!("u = {u:?}: {e}"));
            report.push(Check::new(
                "descend-to-ground",
                inputs,
                "nonzero ground vector",
                e.to_string(),
                false,
            ));
            return report;
        }
    };
    for (i, step) in trace.iter().enumerate() {
        report.push(Check::new(
            format!("reduction-step-{}", i + 1),
            format!(
                "degree {:?}; {}_k for k = {}..{}; slot {}",
                step.from_degree,
                step.family,
                step.first_k,
                step.first_k + step.samples as i64 - 1,
                step.slot + 1
            ),
            "nonzero vector of smaller degree",
            format!(
                "coefficient of lambda_{}^k k^{} has degree {:?}",
                step.slot + 1,
                step.power,
                step.to_degree
            ),
            step.to_degree < step.from_degree,
        ));
    }
    let w = components(&ground)
        .remove(&vec![0; module.slots()])
        .unwrap_or_default();
    report.push(Check::new(
        "descend-to-ground",
        inputs,
        "nonzero ground vector",
        format!("{} reductions; ground vector {ground:?}", trace.len()),
        !w.is_zero(),
    ));
    report.merge(cyclic_generation_check(module, &w, opts));
    report
}
