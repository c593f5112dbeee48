//! Unitary Weingarten values for second and fourth moments.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub(crate) fn big(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// `Wg(sigma, N)` for `sigma` in `S_4` of the given cycle type (parts in any order).
///
/// Common denominator `N^2 (N^2 - 1)(N^2 - 4)(N^2 - 9)`, so `N` must be at least 4.
/// The 3-cycle numerator is `2N^2 - 3`; with it the values satisfy
/// `sum_sigma Wg(sigma) = 1 / (N (N+1)(N+2)(N+3))`.
pub fn weingarten4(cycle_type: &[usize], n: u64) -> Result<Rational> {
    let mut parts = cycle_type.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if parts.iter().sum::<usize>() != 4 || parts.contains(&0) {
        return Err(Error::InvalidArgument(format!("{cycle_type:?} is not a partition of 4")));
    }
    if n < 4 {
        return Err(Error::Singular(format!("fourth-moment Weingarten values need N >= 4, got {n}")));
    }
    let nn = big(&BigInt::from(n));
    let n2 = &nn * &nn;
    let numerator = match parts.as_slice() {
        [1, 1, 1, 1] => &n2 * &n2 - int(8) * &n2 + int(6),
        [2, 1, 1] => -(&n2 * &nn) + int(4) * &nn,
        [2, 2] => &n2 + int(6),
        [3, 1] => int(2) * &n2 - int(3),
        [4] => int(-5) * &nn,
        _ => unreachable!("all partitions of 4 are covered"),
    };
    let denominator = &n2 * (&n2 - int(1)) * (&n2 - int(4)) * (&n2 - int(9));
    Ok(numerator / denominator)
}

/// First moment: `Wg(e, N) = 1/N`.
pub fn weingarten1(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Singular("N = 0".into()));
    }
    Ok(Rational::one() / int(n as i64))
}

/// Second moment: `Wg((1,1), N) = 1/(N^2 - 1)`, `Wg((2), N) = -1/(N (N^2 - 1))`.
pub fn weingarten2(cycle_type: &[usize], n: u64) -> Result<Rational> {
    if n < 2 {
        return Err(Error::Singular(format!("second-moment Weingarten values need N >= 2, got {n}")));
    }
    let nn = int(n as i64);
    let base = Rational::one() / (&nn * &nn - int(1));
    let mut parts = cycle_type.to_vec();
    parts.sort_unstable();
    match parts.as_slice() {
        [1, 1] => Ok(base),
        [2] => Ok(-base / nn),
        _ => Err(Error::InvalidArgument(format!("{cycle_type:?} is not a partition of 2"))),
    }
}

/// Exact value as a float at the boundary.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if r.is_zero() {
        return 0.0;
    }
    r.to_f64().unwrap_or(f64::NAN)
}
