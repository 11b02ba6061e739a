use hv_core::algebra::bracket_basis;
use hv_core::analysis::module_axiom_check;
use hv_core::arith::Matrix;
use hv_core::modules::{
    a_act, a_irreducible, a_iso_check, hbar_validate, ind_depth, kmod_del, kmod_t_pow,
    omega_act, AModule, Degree2Basis, Degree2K, DegreeNBasis, DegreeNK, HBarModuleData,
    HighestWeightData, IndModule, IndVector, IntermediateK, IrreducibilityFlags,
    IrreducibilityVerdict, LaurentVector, MVBasis, MVModule, ModuleError, ModuleOracle, OmegaK,
    OmegaModule, OmegaParams, OmegaVector, PbwMonomial,
};
use hv_core::{Generator, Scalar, SparseVec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn poly(terms: &[(u32, Scalar)]) -> OmegaVector {
    let mut v = SparseVec::zero();
    for (e, c) in terms {
        v.add_term(*e, c.clone());
    }
    v
}

fn laurent(terms: &[(i64, Scalar)]) -> LaurentVector {
    let mut v = SparseVec::zero();
    for (e, c) in terms {
        v.add_term(*e, c.clone());
    }
    v
}

#[test]
fn k_module_examples() {
    // Ω(2): t · ∂² = 2(∂ - 1)²
    let omega = OmegaK::new(s(2)).unwrap();
    let v = kmod_t_pow(&omega, 1, &poly(&[(2, s(1))]));
    assert_eq!(v, poly(&[(2, s(2)), (1, s(-4)), (0, s(2))]));
    assert_eq!(kmod_del(&omega, &poly(&[(3, s(1))])), poly(&[(4, s(1))]));

    let inter = IntermediateK {
        gamma: Scalar::frac(1, 2),
    };
    assert_eq!(kmod_t_pow(&inter, -1, &laurent(&[(3, s(1))])), laurent(&[(2, s(1))]));
    assert_eq!(
        kmod_del(&inter, &laurent(&[(2, s(1))])),
        laurent(&[(2, Scalar::frac(5, 2))])
    );

    let deg2 = Degree2K {
        f: laurent(&[(1, s(1))]),
    };
    let t_del = SparseVec::basis(Degree2Basis::TDel(1));
    assert_eq!(
        kmod_t_pow(&deg2, 2, &t_del),
        SparseVec::basis(Degree2Basis::TDel(3))
    );
    assert_eq!(
        kmod_del(&deg2, &SparseVec::basis(Degree2Basis::TDel(0))),
        SparseVec::basis(Degree2Basis::T(1))
    );
}

#[test]
fn intermediate_closed_form() {
    let gamma = Scalar::frac(2, 7);
    let (alpha, beta) = (Scalar::frac(-3, 5), Scalar::frac(4, 3));
    let k = IntermediateK {
        gamma: gamma.clone(),
    };
    for m in -6..=6 {
        for n in -6..=6 {
            let v = laurent(&[(n, s(1))]);
            let l = a_act(Generator::L(m), &alpha, &beta, &k, &v);
            let expected = &(&gamma + &s(n)) + &(&s(m) * &alpha);
            assert_eq!(l, laurent(&[(m + n, expected)]), "L_{m} t^{n}");
            let i = a_act(Generator::I(m), &alpha, &beta, &k, &v);
            assert_eq!(i, laurent(&[(m + n, beta.clone())]));
        }
    }
    let half = IntermediateK {
        gamma: Scalar::frac(1, 2),
    };
    let l1 = a_act(Generator::L(1), &s(1), &s(7), &half, &laurent(&[(0, s(1))]));
    assert_eq!(l1, laurent(&[(1, Scalar::frac(3, 2))]));
    let i = a_act(Generator::I(-1), &s(1), &s(2), &half, &laurent(&[(3, s(1))]));
    assert_eq!(i, laurent(&[(2, s(2))]));
}

#[test]
fn degree2_derived_action() {
    // L_1 ∂ = (t∂ + αt)∂ = t f(t) + α t∂ with f(t) = t.
    let k = Degree2K {
        f: laurent(&[(1, s(1))]),
    };
    let alpha = Scalar::frac(3, 4);
    let out = a_act(
        Generator::L(1),
        &alpha,
        &s(0),
        &k,
        &SparseVec::basis(Degree2Basis::TDel(0)),
    );
    let mut expected = SparseVec::basis(Degree2Basis::T(2));
    expected.add_term(Degree2Basis::TDel(1), alpha);
    assert_eq!(out, expected);
}

#[test]
fn degree_n_relation() {
    // ∂ = t d/dt, and (d/dt)^n = t.
    let k = DegreeNK::new(2).unwrap();
    let top = SparseVec::basis(DegreeNBasis { power: 0, deriv: 1 });
    let mut expected = SparseVec::zero();
    expected.add_term(DegreeNBasis { power: 2, deriv: 0 }, s(1));
    assert_eq!(kmod_del(&k, &top), expected);
    assert_eq!(DegreeNK::new(0).unwrap_err(), ModuleError::InvalidDegree);
}

#[test]
fn omega_examples() {
    let p = OmegaParams::ints(2, 3, 0).unwrap();
    assert_eq!(
        omega_act(Generator::L(1), &p, &poly(&[(0, s(1))])),
        poly(&[(1, s(2)), (0, s(6))])
    );
    for n in 0..5 {
        assert_eq!(
            omega_act(Generator::L(0), &p, &poly(&[(n, s(1))])),
            poly(&[(n + 1, s(1))])
        );
    }
    let p = OmegaParams::ints(1, 0, 5).unwrap();
    assert_eq!(
        omega_act(Generator::I(2), &p, &poly(&[(1, s(1))])),
        poly(&[(1, s(5)), (0, s(-10))])
    );
    assert_eq!(OmegaParams::ints(0, 1, 1).unwrap_err(), ModuleError::ZeroLambda);
}

#[test]
fn omega_is_the_lift_of_its_k_module() {
    // Ω(λ, α, β) = A_{α+1, β}(Ω(λ)) under the canonical lift.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (lambda, alpha, beta) in [(2, 3, 0), (-1, 0, 4), (3, -2, 1)] {
        let p = OmegaParams::ints(lambda, alpha, beta).unwrap();
        let k = OmegaK::new(s(lambda)).unwrap();
        let m = OmegaModule::new(p.clone());
        for _ in 0..20 {
            let v = m.random_vector(&mut rng);
            for g in Generator::window(4) {
                assert_eq!(
                    omega_act(g, &p, &v),
                    a_act(g, &s(alpha + 1), &s(beta), &k, &v),
                    "{g}"
                );
            }
        }
    }
}

#[test]
fn axioms_hold_for_every_family() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let alpha = Scalar::frac(2, 3);
    let beta = Scalar::frac(-1, 2);
    let reports = vec![
        module_axiom_check(
            &OmegaModule::new(OmegaParams::new(s(3), alpha.clone(), beta.clone()).unwrap()),
            5,
            60,
            &mut rng,
        ),
        module_axiom_check(
            &AModule::new(
                IntermediateK {
                    gamma: Scalar::frac(1, 3),
                },
                alpha.clone(),
                beta.clone(),
            ),
            5,
            60,
            &mut rng,
        ),
        module_axiom_check(
            &AModule::new(
                Degree2K {
                    f: laurent(&[(2, s(1)), (-1, Scalar::frac(1, 2))]),
                },
                alpha.clone(),
                beta.clone(),
            ),
            5,
            60,
            &mut rng,
        ),
        module_axiom_check(
            &AModule::new(DegreeNK::new(3).unwrap(), alpha.clone(), beta.clone()),
            5,
            60,
            &mut rng,
        ),
        module_axiom_check(
            &IndModule::new(
                HighestWeightData::new(s(2), Scalar::frac(5, 3), s(1), s(-2), s(0)).unwrap(),
            ),
            5,
            60,
            &mut rng,
        ),
    ];
    for r in reports {
        assert!(r.passed(), "{r:#?}");
    }
}

#[test]
fn ind_examples() {
    let hw = HighestWeightData::new(s(3), s(5), s(7), s(11), s(0)).unwrap();
    let m = IndModule::new(hw);
    let v = m.generator();
    let lm1 = m.word_vector(&[Generator::L(-1)]);
    let im1 = m.word_vector(&[Generator::I(-1)]);
    assert!(m.act(Generator::L(2), &v).is_zero());
    assert_eq!(m.act(Generator::L(1), &lm1), v.scaled(&s(-6)));
    assert_eq!(m.act(Generator::I(1), &lm1), v.scaled(&s(-5)));
    assert_eq!(m.act(Generator::L(1), &im1), v.scaled(&s(-5 + 22)));

    // [L_3, I_{-3}] = -3 I_0 + 12 C_2
    let im3 = m.word_vector(&[Generator::I(-3)]);
    assert_eq!(m.act(Generator::L(3), &im3), v.scaled(&s(-15 + 132)));

    // One more than the PBW depth; L_3 above shows the depth itself is too small.
    assert_eq!(ind_depth(&v).unwrap(), 1);
    let w = m.word_vector(&[Generator::L(-2), Generator::L(-1)]);
    assert_eq!(ind_depth(&w).unwrap(), 4);
    assert!(m.act(Generator::I(4), &w).is_zero());
    assert_eq!(ind_depth(&im3).unwrap(), 4);
    assert_eq!(ind_depth(&IndVector::zero()), Err(ModuleError::ZeroVector));

    assert_eq!(
        HighestWeightData::new(s(1), s(0), s(0), s(0), s(0)).unwrap_err(),
        ModuleError::InadmissibleHighestWeight
    );
    assert_eq!(
        HighestWeightData::new(s(1), s(1), s(0), s(0), s(2)).unwrap_err(),
        ModuleError::NonzeroC3
    );
}

#[test]
fn ind_bracket_consistency() {
    let hw = HighestWeightData::new(Scalar::frac(1, 2), s(2), s(3), s(3), s(0)).unwrap();
    let m = IndModule::new(hw);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..30 {
        let v = m.random_vector(&mut rng);
        for x in [Generator::L(2), Generator::I(-1), Generator::L(-3)] {
            for y in [Generator::I(3), Generator::L(1), Generator::I(-2)] {
                let lhs = m.act(x, &m.act(y, &v)).sub(&m.act(y, &m.act(x, &v)));
                assert_eq!(lhs, m.act_element(&bracket_basis(x, y), &v));
            }
        }
    }
}

fn e12() -> Matrix {
    Matrix::from_fn(2, 2, |r, c| s((r == 0 && c == 1) as i64))
}

fn diag(a: i64, b: i64) -> Matrix {
    Matrix::from_fn(2, 2, |r, c| if r != c { s(0) } else if r == 0 { s(a) } else { s(b) })
}

#[test]
fn hbar_examples() {
    assert!(hbar_validate(&HBarModuleData::scalar(Scalar::frac(2, 3), s(5))).passed());
    let valid = HBarModuleData {
        r: 1,
        d: 0,
        dim: 2,
        l_mats: vec![diag(1, 0), e12()],
        i_mats: vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2)],
    };
    assert!(hbar_validate(&valid).passed());
    let invalid = HBarModuleData {
        l_mats: vec![diag(0, 1), e12()],
        ..valid.clone()
    };
    let r = hbar_validate(&invalid);
    assert!(!r.passed());
    assert!(r.counterexample.is_some());
    assert!(matches!(
        MVModule::new(invalid, OmegaParams::ints(1, 0, 0).unwrap()),
        Err(ModuleError::InvalidHBarModule(_))
    ));
}

#[test]
fn mv_examples() {
    let (sigma, tau) = (Scalar::frac(3, 2), s(4));
    let p = OmegaParams::new(s(1), Scalar::frac(1, 3), s(5)).unwrap();
    let m = MVModule::new(HBarModuleData::scalar(sigma.clone(), tau.clone()), p.clone()).unwrap();
    let one = SparseVec::basis(MVBasis { index: 0, power: 0 });
    let mut expected = SparseVec::zero();
    expected.add_term(MVBasis { index: 0, power: 1 }, s(1));
    expected.add_term(MVBasis { index: 0, power: 0 }, &sigma - &p.alpha);
    assert_eq!(m.act(Generator::L(1), &one), expected);

    let f = {
        let mut f = SparseVec::zero();
        f.add_term(MVBasis { index: 0, power: 2 }, s(1));
        f.add_term(MVBasis { index: 0, power: 0 }, s(-3));
        f
    };
    assert_eq!(m.act(Generator::I(0), &f), f.scaled(&(&tau * &p.beta)));
    for j in 1..=3 {
        assert!(m.act(Generator::c(j), &f).is_zero());
    }
}

#[test]
fn mv_axioms_on_random_modules() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (r, d, dim) in [(0, 0, 1), (1, 1, 2), (2, 0, 3), (2, 1, 3)] {
        let v = HBarModuleData::random(&mut rng, r, d, dim);
        assert!(hbar_validate(&v).passed());
        let m = MVModule::new(v, OmegaParams::new(s(2), Scalar::frac(1, 2), s(3)).unwrap()).unwrap();
        let report = module_axiom_check(&m, 5, 40, &mut rng);
        assert!(report.passed(), "{report:#?}");
    }
}

#[test]
fn irreducibility_criteria() {
    let k = IntermediateK {
        gamma: Scalar::frac(1, 2),
    };
    let none = IrreducibilityFlags::default();
    assert_eq!(
        a_irreducible(&k, &s(2), &s(0), none),
        IrreducibilityVerdict::Irreducible
    );
    let surjective = IrreducibilityFlags {
        del_surjective: Some(true),
        is_natural_module: None,
    };
    assert_eq!(
        a_irreducible(&k, &s(1), &s(0), surjective),
        IrreducibilityVerdict::Irreducible
    );
    let natural = IrreducibilityFlags {
        del_surjective: None,
        is_natural_module: Some(true),
    };
    let z = IntermediateK { gamma: s(0) };
    assert_eq!(
        a_irreducible(&z, &s(0), &s(0), natural),
        IrreducibilityVerdict::Reducible
    );

    let (a, b) = (Scalar::frac(1, 3), s(2));
    assert!(a_iso_check((&a, &b), (&a, &b), true, None, None));
    assert!(a_iso_check((&s(1), &s(0)), (&s(0), &s(0)), true, Some(true), Some(true)));
    assert!(!a_iso_check((&a, &s(1)), (&a, &s(2)), true, None, None));
}

#[test]
fn pbw_display() {
    let m = PbwMonomial::sorted(vec![1, 2], vec![3]);
    assert_eq!(m.to_string(), "[L(-2) L(-1) I(-3) | v]");
    assert_eq!(PbwMonomial::one().to_string(), "[v]");
}
