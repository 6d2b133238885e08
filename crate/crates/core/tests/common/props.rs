//! Polynomial ring properties shared by the property tests and the
//! acceptance suite.

use kfib_core::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const CASES: u32 = 10_000;

/// Degree at most 12, coefficients in `[-9, 9]`.
pub fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 0..=13).prop_map(|c| IntPoly::from_coeffs(&c))
}

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-60i64..=60, 1i64..=24).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

pub fn canonical(p: &IntPoly) -> bool {
    p.terms().all(|(_, c)| !c.is_zero())
}

pub fn ring_axioms(a: &IntPoly, b: &IntPoly, c: &IntPoly) -> Result<(), TestCaseError> {
    for p in [&(a + b), &(a * b), &(a - b), &-a] {
        prop_assert!(canonical(p), "stored zero coefficient in {p}");
    }
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &IntPoly::zero(), a.clone());
    prop_assert_eq!(a * &IntPoly::one(), a.clone());
    prop_assert!((a + &-a).is_zero());
    Ok(())
}

pub fn divide_round_trip(a: &IntPoly, b: &IntPoly) -> Result<(), TestCaseError> {
    if b.is_zero() {
        prop_assert!(a.divide_exact(b).is_err());
        return Ok(());
    }
    let q = (a * b).divide_exact(b);
    prop_assert_eq!(q.as_ref(), Ok(a));
    Ok(())
}

pub fn eval_homomorphism(a: &IntPoly, b: &IntPoly, t: &BigRational) -> Result<(), TestCaseError> {
    prop_assert_eq!((a * b).eval_rational(t), a.eval_rational(t) * b.eval_rational(t));
    prop_assert_eq!((a + b).eval_rational(t), a.eval_rational(t) + b.eval_rational(t));
    Ok(())
}

/// Runs the three properties with `cases` inputs each; the error names the
/// failing property and the minimal input.
pub fn run_all(cases: u32) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let triple = (small_poly(), small_poly(), small_poly());
    TestRunner::new(config.clone())
        .run(&triple, |(a, b, c)| ring_axioms(&a, &b, &c))
        .map_err(|e| format!("ring axioms: {e}"))?;
    TestRunner::new(config.clone())
        .run(&(small_poly(), small_poly()), |(a, b)| divide_round_trip(&a, &b))
        .map_err(|e| format!("divide_exact: {e}"))?;
    TestRunner::new(config)
        .run(&(small_poly(), small_poly(), rational()), |(a, b, t)| eval_homomorphism(&a, &b, &t))
        .map_err(|e| format!("evaluation: {e}"))?;
    Ok(())
}
