//! `T`-operators, nilpotency probes, the module-axiom checker and the
//! separating tests between module classes.

use rand::{Rng, RngCore};
use serde::Serialize;

use crate::algebra::{bracket_basis, Generator};
use crate::arith::{binomial, Scalar, SparseVec};
use crate::modules::{MVModule, ModuleOracle};
use crate::report::{Check, Report};

/// `T^{(s)}_{l,m} = Σ_{i=0}^s (-1)^{s-i} C(s,i) I_{l-m-i} I_{m+i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TOperatorSpec {
    pub l: i64,
    pub m: i64,
    pub s: u32,
}

impl TOperatorSpec {
    /// Indices with every `I`-mode negative: `m = -(s+3)`, `l = 2m - s - 2`.
    pub fn negative_modes(s: u32) -> Self {
        let m = -(s as i64 + 3);
        TOperatorSpec {
            l: 2 * m - s as i64 - 2,
            m,
            s,
        }
    }
}

pub fn t_operator_apply<M: ModuleOracle>(
    spec: TOperatorSpec,
    module: &M,
    v: &SparseVec<M::Basis>,
) -> SparseVec<M::Basis> {
    let mut out = SparseVec::zero();
    for i in 0..=spec.s {
        let mut c = Scalar::from(binomial(spec.s as u64, i as u64));
        if (spec.s - i) % 2 == 1 {
            c = -c;
        }
        let inner = module.act(Generator::I(spec.m + i as i64), v);
        let outer = module.act(Generator::I(spec.l - spec.m - i as i64), &inner);
        out.add_scaled(&c, &outer);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Nilpotency {
    NilpotentAfter(usize),
    NotNilpotentWithin(usize),
}

impl Nilpotency {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self, Nilpotency::NilpotentAfter(_))
    }
}

/// Applies `g` until the vector vanishes, at most `max_iter` times.
pub fn local_nilpotency_probe<M: ModuleOracle>(
    module: &M,
    g: Generator,
    v: &SparseVec<M::Basis>,
    max_iter: usize,
) -> Nilpotency {
    let mut w = v.clone();
    for n in 0..=max_iter {
        if w.is_zero() {
            return Nilpotency::NilpotentAfter(n);
        }
        if n < max_iter {
            w = module.act(g, &w);
        }
    }
    Nilpotency::NotNilpotentWithin(max_iter)
}

fn random_basis_generator(rng: &mut dyn RngCore, window: i64) -> Generator {
    let m = rng.gen_range(-window..=window);
    if rng.gen_bool(0.5) {
        Generator::L(m)
    } else {
        Generator::I(m)
    }
}

/// Checks `x(y v) - y(x v) = [x,y] v` on `trials` random triples with
/// `|mode| <= window`, and the declared central scalars on sampled vectors.
pub fn module_axiom_check<M: ModuleOracle>(
    module: &M,
    window: i64,
    trials: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let mut report = Report::new();
    let mut failures = 0usize;
    for _ in 0..trials {
        let x = random_basis_generator(rng, window);
        let y = random_basis_generator(rng, window);
        let v = module.random_vector(rng);
        let lhs = module
            .act(x, &module.act(y, &v))
            .sub(&module.act(y, &module.act(x, &v)));
        let rhs = module.act_element(&bracket_basis(x, y), &v);
        if lhs != rhs {
            failures += 1;
            report.counterexample(format!(
                "{}: x = {x}, y = {y}, v = {v:?}: x(yv) - y(xv) = {lhs:?}, [x,y]v = {rhs:?}",
                module.label()
            ));
        }
    }
    report.push(Check::new(
        "module-axiom",
        format!(
            "{}; {trials} random (x, y, v), |mode| <= {window}",
            module.label()
        ),
        "0 failures",
        format!("{failures} failures"),
        failures == 0,
    ));

    let cc = module.central_character();
    let mut central_failures = 0usize;
    let samples = trials.clamp(1, 20);
    for _ in 0..samples {
        let v = module.random_vector(rng);
        let mut pairs: Vec<(Generator, Scalar)> = (1..=3)
            .map(|j| (Generator::C(j), cc.c[j as usize - 1].clone()))
            .collect();
        if let Some(i0) = &cc.i0 {
            pairs.push((Generator::I(0), i0.clone()));
        }
        for (g, c) in pairs {
            let got = module.act(g, &v);
            if got != v.scaled(&c) {
                central_failures += 1;
                report.counterexample(format!(
                    "{}: {g} v = {got:?}, expected {c} v for v = {v:?}",
                    module.label()
                ));
            }
        }
    }
    report.push(Check::new(
        "central-character",
        format!("{}; {samples} random vectors", module.label()),
        "C_j and I_0 act by the declared scalars",
        format!("{central_failures} failures"),
        central_failures == 0,
    ));
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModuleClass {
    TensorProduct,
    Ind,
    MV,
    AFamily,
}

/// Isomorphism-invariant probes a module can answer on its sample vectors.
pub trait Separable {
    fn class(&self) -> ModuleClass;
    fn label(&self) -> String;
    /// `2(r' + d)` for `ℳ(V, Ω)`: `T^{(s)}` vanishes for larger `s`.
    fn t_bound(&self) -> Option<u32>;
    /// Whether every sample is killed by a power of `g`, with a description.
    fn nilpotent_on_samples(&self, g: Generator, max_iter: usize) -> (bool, String);
    /// Whether `T` kills every sample, with a description.
    fn t_vanishes_on_samples(&self, spec: TOperatorSpec) -> (bool, String);
}

/// A module with a class tag and a fixed list of sample vectors.
pub struct Probe<'a, M: ModuleOracle> {
    module: &'a M,
    class: ModuleClass,
    samples: Vec<SparseVec<M::Basis>>,
    t_bound: Option<u32>,
}

impl<'a, M: ModuleOracle> Probe<'a, M> {
    pub fn new(module: &'a M, class: ModuleClass, samples: Vec<SparseVec<M::Basis>>) -> Self {
        assert!(!samples.is_empty(), "at least one sample vector");
        Probe {
            module,
            class,
            samples,
            t_bound: None,
        }
    }

    /// Draws `count` random samples after the given fixed ones.
    pub fn sampled(
        module: &'a M,
        class: ModuleClass,
        mut fixed: Vec<SparseVec<M::Basis>>,
        count: usize,
        rng: &mut dyn RngCore,
    ) -> Self {
        for _ in 0..count {
            fixed.push(module.random_vector(rng));
        }
        Self::new(module, class, fixed)
    }
}

impl<'a> Probe<'a, MVModule> {
    pub fn mv(
        module: &'a MVModule,
        samples: Vec<SparseVec<<MVModule as ModuleOracle>::Basis>>,
    ) -> Self {
        let mut p = Probe::new(module, ModuleClass::MV, samples);
        p.t_bound = Some(2 * (module.v.r_prime().unwrap_or(0) + module.v.d));
        p
    }
}

impl<M: ModuleOracle> Separable for Probe<'_, M> {
    fn class(&self) -> ModuleClass {
        self.class
    }

    fn label(&self) -> String {
        self.module.label()
    }

    fn t_bound(&self) -> Option<u32> {
        self.t_bound
    }

    fn nilpotent_on_samples(&self, g: Generator, max_iter: usize) -> (bool, String) {
        let results: Vec<Nilpotency> = self
            .samples
            .iter()
            .map(|v| local_nilpotency_probe(self.module, g, v, max_iter))
            .collect();
        let all = results.iter().all(Nilpotency::is_nilpotent);
        (all, format!("{g}: {results:?}"))
    }

    fn t_vanishes_on_samples(&self, spec: TOperatorSpec) -> (bool, String) {
        let nonzero = self
            .samples
            .iter()
            .filter(|v| !t_operator_apply(spec, self.module, v).is_zero())
            .count();
        (
            nonzero == 0,
            format!("nonzero on {nonzero} of {} samples", self.samples.len()),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistinguishOptions {
    /// Mode of the generators used by the nilpotency probe.
    pub probe_mode: i64,
    pub max_iter: usize,
    /// Indices of the first-order `T`-operator test.
    pub t1: (i64, i64),
}

impl Default for DistinguishOptions {
    fn default() -> Self {
        DistinguishOptions {
            probe_mode: 8,
            max_iter: 20,
            t1: (-12, -5),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Distinguished(String),
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distinction {
    pub verdict: Verdict,
    pub report: Report,
}

/// Runs the separating tests in order and reports the first property on
/// which the two modules differ. Never asserts isomorphism.
pub fn distinguish(a: &dyn Separable, b: &dyn Separable, opts: DistinguishOptions) -> Distinction {
    let mut report = Report::new();
    let mut verdict = Verdict::Inconclusive;
    let pair = format!(
        "A = {} [{:?}], B = {} [{:?}]",
        a.label(),
        a.class(),
        b.label(),
        b.class()
    );

    let mut record =
        |name: &str, property: &str, (pa, ea): (bool, String), (pb, eb): (bool, String)| {
            report.push(Check::new(
                name,
                pair.clone(),
                property.to_string(),
                format!("A: {pa} ({ea}); B: {pb} ({eb})"),
                true,
            ));
            if pa != pb && verdict == Verdict::Inconclusive {
                verdict = Verdict::Distinguished(format!(
                    "{name}: {property} is {pa} for A and {pb} for B"
                ));
            }
        };

    let k = opts.probe_mode;
    let nil = |p: &dyn Separable| {
        let (l, el) = p.nilpotent_on_samples(Generator::L(k), opts.max_iter);
        let (i, ei) = p.nilpotent_on_samples(Generator::I(k), opts.max_iter);
        (l && i, format!("{el}; {ei}"))
    };
    record(
        "local-nilpotency",
        &format!(
            "L[{k}] and I[{k}] nilpotent on every sample within {} steps",
            opts.max_iter
        ),
        nil(a),
        nil(b),
    );

    let t1 = TOperatorSpec {
        l: opts.t1.0,
        m: opts.t1.1,
        s: 1,
    };
    record(
        "t-operator-first-order",
        &format!("T(1)[{},{}] vanishes on every sample", t1.l, t1.m),
        a.t_vanishes_on_samples(t1),
        b.t_vanishes_on_samples(t1),
    );

    if let Some(bound) = a.t_bound().max(b.t_bound()) {
        let spec = TOperatorSpec::negative_modes(bound + 1);
        record(
            "t-operator-high-order",
            &format!(
                "T({})[{},{}] vanishes on every sample",
                spec.s, spec.l, spec.m
            ),
            a.t_vanishes_on_samples(spec),
            b.t_vanishes_on_samples(spec),
        );
    }

    let distinguished = matches!(verdict, Verdict::Distinguished(_));
    report.push(
        Check::new(
            "separation",
            pair,
            "some isomorphism invariant differs",
            match &verdict {
                Verdict::Distinguished(e) => e.clone(),
                Verdict::Inconclusive => "no tested invariant differs".to_string(),
            },
            distinguished,
        )
        .tentative(),
    );
    Distinction { verdict, report }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{
        AModule, HighestWeightData, IndModule, IndVector, IntermediateK, OmegaModule, OmegaParams,
        PbwMonomial,
    };
    use crate::tensor::{TensorModule, TensorParams};

    #[test]
    fn nilpotency_examples() {
        let ind = IndModule::new(HighestWeightData::ints(1, 1, 0, 0).unwrap());
        let v = IndVector::basis(PbwMonomial::sorted(vec![2], vec![]));
        assert_eq!(
            local_nilpotency_probe(&ind, Generator::I(3), &v, 20),
            Nilpotency::NilpotentAfter(1)
        );
        let omega = OmegaModule::new(OmegaParams::ints(3, 1, 1).unwrap());
        assert_eq!(
            local_nilpotency_probe(&omega, Generator::L(2), &SparseVec::basis(0), 20),
            Nilpotency::NotNilpotentWithin(20)
        );
        assert_eq!(
            local_nilpotency_probe(&omega, Generator::L(2), &SparseVec::zero(), 20),
            Nilpotency::NilpotentAfter(0)
        );
    }

    #[test]
    fn t_operator_on_intermediate_series() {
        let a = AModule::new(
            IntermediateK {
                gamma: Scalar::frac(1, 3),
            },
            2.into(),
            5.into(),
        );
        for n in -3..=3 {
            let v = SparseVec::basis(n);
            for s in 1..=3 {
                let spec = TOperatorSpec { l: 4, m: -2, s };
                assert!(t_operator_apply(spec, &a, &v).is_zero());
            }
        }
    }

    #[test]
    fn tensor_versus_a_family() {
        let hw = HighestWeightData::ints(1, 1, 0, 0).unwrap();
        let tp = TensorParams::new(
            vec![
                OmegaParams::ints(1, 3, 0).unwrap(),
                OmegaParams::ints(2, 0, 5).unwrap(),
            ],
            hw,
        )
        .unwrap();
        let t = TensorModule::new(tp);
        let a = AModule::new(
            IntermediateK {
                gamma: Scalar::frac(1, 3),
            },
            2.into(),
            5.into(),
        );
        let pt = Probe::new(&t, ModuleClass::TensorProduct, vec![t.ground()]);
        let pa = Probe::new(
            &a,
            ModuleClass::AFamily,
            vec![SparseVec::basis(0), SparseVec::basis(3)],
        );
        let d = distinguish(&pt, &pa, DistinguishOptions::default());
        assert!(
            matches!(d.verdict, Verdict::Distinguished(ref e) if e.starts_with("t-operator-first-order"))
        );
        let same = distinguish(&pa, &pa, DistinguishOptions::default());
        assert_eq!(same.verdict, Verdict::Inconclusive);
    }
}
