use hv_core::algebra::{bracket_basis, jacobi_check, random_element};
use hv_core::{bracket, Generator, LieElement, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use Generator::*;

fn reference(x: Generator, y: Generator) -> LieElement {
    let mut out = LieElement::zero();
    let d = |m: i64, n: i64| m + n == 0;
    match (x, y) {
        (L(m), L(n)) => {
            out.add_term(L(m + n), Scalar::from_int(n - m));
            if d(m, n) {
                out.add_term(C(1), Scalar::frac(m * m * m - m, 12));
            }
        }
        (L(m), I(n)) => {
            out.add_term(I(m + n), Scalar::from_int(n));
            if d(m, n) {
                out.add_term(C(2), Scalar::from_int(m * m + m));
            }
        }
        (I(m), L(n)) => return reference(L(n), I(m)).scaled(&Scalar::from_int(-1)),
        (I(m), I(n)) => {
            if d(m, n) {
                out.add_term(C(3), Scalar::from_int(n));
            }
        }
        _ => {}
    }
    out
}

#[test]
fn bracket_matches_closed_form() {
    let basis = Generator::window(5);
    for &x in &basis {
        for &y in &basis {
            assert_eq!(bracket_basis(x, y), reference(x, y), "[{x}, {y}]");
        }
    }
}

#[test]
fn bracket_examples() {
    let one = |g: Generator, c: i64| LieElement::from_iter([(g, Scalar::from_int(c))]);
    assert_eq!(bracket_basis(L(2), L(3)), one(L(5), 1));
    assert_eq!(bracket_basis(L(3), L(-3)), one(L(0), -6).add(&one(C(1), 2)));
    assert_eq!(bracket_basis(L(2), I(-2)), one(I(0), -2).add(&one(C(2), 6)));
    assert_eq!(bracket_basis(I(4), I(-4)), one(C(3), -4));
    assert!(bracket_basis(C(1), L(4)).is_zero());
    assert!(bracket_basis(I(0), L(-7)).is_zero());
}

#[test]
fn antisymmetry_and_jacobi_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let x = random_element(&mut rng, 6);
        let y = random_element(&mut rng, 6);
        let z = random_element(&mut rng, 6);
        assert!(bracket(&x, &y).add(&bracket(&y, &x)).is_zero());
        let mut j = bracket(&bracket(&x, &y), &z);
        j.add_assign(&bracket(&bracket(&y, &z), &x));
        j.add_assign(&bracket(&bracket(&z, &x), &y));
        assert!(j.is_zero());
    }
}

#[test]
fn jacobi_report_passes() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let r = jacobi_check(6, 50, &mut rng);
    assert!(r.passed() && !r.checks.is_empty());
}
