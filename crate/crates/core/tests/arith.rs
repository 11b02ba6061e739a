use hv_core::arith::{
    binomial, linear_solve, rational_roots, ArithError, Matrix, RationalPoly,
};
use hv_core::{Rational, Scalar};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
        .prop_map(|(a, b, c, d)| Scalar::new(q(a, b), q(c, d)))
}

proptest! {
    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &Scalar::zero(), x.clone());
        prop_assert_eq!(&x * &Scalar::one(), x.clone());
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
            prop_assert_eq!(y.checked_div(&x).unwrap() * x.clone(), y.clone());
        }
    }

    #[test]
    fn solve_round_trip(
        n in 1usize..=8,
        entries in prop::collection::vec(scalar(), 64),
        unknowns in prop::collection::vec(scalar(), 16),
    ) {
        let a = Matrix::from_fn(n, n, |r, c| entries[r * 8 + c].clone());
        let x: Vec<Vec<Scalar>> = (0..n)
            .map(|i| vec![unknowns[2 * i].clone(), unknowns[2 * i + 1].clone()])
            .collect();
        let b: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                (0..2)
                    .map(|j| (0..n).fold(Scalar::zero(), |acc, c| acc + &a[(r, c)] * &x[c][j]))
                    .collect()
            })
            .collect();
        match linear_solve(&a, &b) {
            Ok(sol) => prop_assert_eq!(sol, x),
            Err(e) => {
                prop_assert_eq!(e, ArithError::SingularMatrix);
                prop_assert!(a.rank() < n);
            }
        }
    }

    #[test]
    fn planted_roots_are_found(roots in prop::collection::vec((-12i64..=12, 1i64..=4), 1..=4)) {
        let roots: Vec<Rational> = roots.into_iter().map(|(a, b)| q(a, b)).collect();
        let split = rational_roots(&RationalPoly::from_roots(&roots), true).unwrap();
        let mut sorted = roots.clone();
        sorted.sort();
        prop_assert_eq!(split.roots, sorted);
    }
}

#[test]
fn scalar_examples() {
    let z = Scalar::new(q(1, 2), q(1, 1));
    assert_eq!(&z * &z.conj(), Scalar::frac(5, 4));
    assert_eq!(Scalar::frac(2, 3) + Scalar::frac(1, 3), Scalar::one());
    assert_eq!(Scalar::zero().inv(), Err(ArithError::DivisionByZero));
}

#[test]
fn binomial_examples() {
    assert_eq!(binomial(4, 2), q(6, 1));
    assert_eq!(binomial(3, 5), q(0, 1));
    assert_eq!(binomial(0, 0), q(1, 1));
}

#[test]
fn solve_examples() {
    let i = Scalar::from_int;
    let a = Matrix::from_rows(vec![vec![i(1), i(2)], vec![i(1), i(4)]]);
    let sol = linear_solve(&a, &[vec![i(1), i(2)], vec![i(1), i(4)]]).unwrap();
    assert_eq!(sol, vec![vec![i(1), i(0)], vec![i(0), i(1)]]);

    let b = vec![vec![Scalar::frac(3, 7)], vec![Scalar::i()], vec![i(-2)]];
    assert_eq!(linear_solve(&Matrix::identity(3), &b).unwrap(), b);

    let singular = Matrix::from_rows(vec![vec![i(1), i(1)], vec![i(2), i(2)]]);
    assert_eq!(
        linear_solve(&singular, &[vec![i(1)], vec![i(2)]]),
        Err(ArithError::SingularMatrix)
    );
}

#[test]
fn root_examples() {
    let split = rational_roots(&RationalPoly::from_ints(&[2, -3, 1]), true).unwrap();
    assert_eq!(split.roots, vec![q(1, 1), q(2, 1)]);
    assert_eq!(
        rational_roots(&RationalPoly::from_ints(&[-1, -1, 1]), true),
        Err(ArithError::NonRationalRootsRemain)
    );
    let half = RationalPoly::new(vec![q(-5, 2), q(1, 1)]);
    assert_eq!(rational_roots(&half, true).unwrap().roots, vec![q(5, 2)]);
    // (x - 1)(x - 2)(x^2 + 1): the quadratic is left over.
    let mixed = RationalPoly::from_ints(&[2, -3, 3, -3, 1]);
    let split = rational_roots(&mixed, false).unwrap();
    assert_eq!(split.roots, vec![q(1, 1), q(2, 1)]);
    assert_eq!(split.residual, RationalPoly::from_ints(&[1, 0, 1]));
    assert!(rational_roots(&mixed, true).is_err());
}
