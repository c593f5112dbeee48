//! Exact Haar averages of `Y_lin` after local unitaries on normal-form stabilizer states.

use num_traits::One;

use super::scenario::{Scenario, ScenarioDims};
use super::weingarten::{big, int, Rational};
use crate::error::{Error, Result};

/// Smallest Haar-acted dimension with a finite fourth-moment Weingarten function.
const MIN_DIM_QUBITS: u32 = 2;

/// Exact `E[Y_lin]` as a rational number.
pub fn exact_average_y(dims: &ScenarioDims) -> Result<Rational> {
    dims.validate()?;
    let singular = |who: &str, n: u32| {
        if n < MIN_DIM_QUBITS {
            Err(Error::Singular(format!(
                "exact average needs D_{who} >= 4, got |{who}| = {n}"
            )))
        } else {
            Ok(())
        }
    };
    match dims.scenario {
        Scenario::BipartiteHaar => {
            singular("A", dims.n_a)?;
            Ok(bipartite_haar(dims))
        }
        Scenario::BipartiteProduct => {
            singular("A", dims.n_a)?;
            singular("B", dims.n_b)?;
            Ok(bipartite_product(dims))
        }
        Scenario::TripartitePair => {
            singular("A", dims.n_a)?;
            singular("B", dims.n_b)?;
            Ok(tripartite_pair(dims))
        }
        Scenario::TripartiteTriple => Err(Error::NoExactFormula(dims.scenario.to_string())),
    }
}

fn bipartite_haar(dims: &ScenarioDims) -> Rational {
    let a = big(&dims.d_a());
    let e = big(&dims.d_e());
    let a2 = &a * &a;
    let e2 = &e * &e;
    let num = int(4) * (&a2 * &e2 - int(3) * &a * &e - int(6) * &e2 + int(6));
    let den = &a * (&a2 - int(9)) * &e2 * &e;
    Rational::one() - num / den
}

fn bipartite_product(dims: &ScenarioDims) -> Rational {
    let a = big(&dims.d_a());
    let b = big(&dims.d_b());
    let e = big(&dims.d_e());
    let (a2, b2, e2) = (&a * &a, &b * &b, &e * &e);
    let ab = &a * &b;
    let poly = &a2 * &b2 * &e * (&e2 + int(3)) - int(6) * &ab * (&a + &b) * (&e2 + int(1))
        - int(6) * (&a2 + &b2 - int(9)) * &e * (&e2 - int(1))
        + int(3) * &ab * &e * (&e2 + int(11));
    let den = &ab * (&a2 - int(9)) * (&b2 - int(9)) * &e2 * &e;
    Rational::one() - int(4) * poly / den
}

fn tripartite_pair(dims: &ScenarioDims) -> Rational {
    let a = big(&dims.d_a());
    let b = big(&dims.d_b());
    let p = big(&dims.d_ab());
    let q = big(&dims.d_ac());
    let r = big(&dims.d_bc());
    let g = big(&dims.d_g());
    // monomial coefficient * A^i B^j AB^k AC^l BC^m g^n
    const TERMS: [(i64, [u32; 6]); 29] = [
        (1, [2, 2, 3, 2, 2, 2]),
        (3, [2, 2, 1, 2, 2, 1]),
        (-6, [2, 0, 3, 2, 2, 2]),
        (-6, [2, 1, 2, 2, 1, 1]),
        (-18, [2, 0, 1, 2, 2, 1]),
        (24, [2, 0, 1, 2, 0, 0]),
        (-6, [2, 1, 0, 2, 1, 0]),
        (3, [1, 1, 3, 1, 1, 1]),
        (-6, [1, 2, 2, 1, 2, 1]),
        (36, [1, 0, 2, 1, 2, 1]),
        (-36, [1, 0, 2, 1, 0, 0]),
        (3, [1, 1, 1, 1, 1, 1]),
        (30, [1, 1, 1, 1, 1, 0]),
        (-6, [1, 2, 0, 1, 2, 0]),
        (36, [1, 0, 0, 1, 2, 0]),
        (-36, [1, 0, 0, 1, 0, 0]),
        (-6, [0, 2, 3, 2, 2, 2]),
        (36, [0, 0, 3, 2, 2, 2]),
        (18, [0, 0, 3, 0, 0, 0]),
        (36, [0, 1, 2, 2, 1, 1]),
        (-36, [0, 1, 2, 0, 1, 0]),
        (-18, [0, 2, 1, 2, 2, 1]),
        (108, [0, 0, 1, 2, 2, 1]),
        (-144, [0, 0, 1, 2, 0, 0]),
        (24, [0, 2, 1, 0, 2, 0]),
        (-144, [0, 0, 1, 0, 2, 0]),
        (126, [0, 0, 1, 0, 0, 0]),
        (36, [0, 1, 0, 2, 1, 0]),
        (-36, [0, 1, 0, 0, 1, 0]),
    ];
    let bases = [&a, &b, &p, &q, &r, &g];
    let mut poly = int(0);
    for (coef, exps) in TERMS {
        let mut term = int(coef);
        for (base, &k) in bases.iter().zip(exps.iter()) {
            for _ in 0..k {
                term *= *base;
            }
        }
        poly += term;
    }
    let cube = |x: &Rational| x * x * x;
    let den = &a * &b * (&a * &a - int(9)) * (&b * &b - int(9)) * cube(&p) * cube(&q) * cube(&r) * cube(&g);
    Rational::one() - int(4) * poly / den
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn frac(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn bipartite_haar_eight_dims() {
        let d = ScenarioDims::bipartite(Scenario::BipartiteHaar, 3, 0, 2);
        assert_eq!(exact_average_y(&d).unwrap(), frac(7, 11));
    }

    #[test]
    fn triple_and_small_dims_rejected() {
        let t = ScenarioDims::tripartite(Scenario::TripartiteTriple, 1, 0, 0, 0, 1, 1, 1);
        assert!(matches!(exact_average_y(&t), Err(Error::NoExactFormula(_))));
        let d = ScenarioDims::bipartite(Scenario::BipartiteHaar, 1, 0, 2);
        assert!(matches!(exact_average_y(&d), Err(Error::Singular(_))));
        let d = ScenarioDims::bipartite(Scenario::BipartiteProduct, 3, 1, 1);
        assert!(matches!(exact_average_y(&d), Err(Error::Singular(_))));
        let d = ScenarioDims::bipartite(Scenario::BipartiteHaar, 3, 4, 5);
        assert!(matches!(exact_average_y(&d), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn product_is_symmetric() {
        for (na, nb, e) in [(2, 3, 1), (3, 5, 2), (4, 2, 0), (6, 7, 3)] {
            let x = exact_average_y(&ScenarioDims::bipartite(Scenario::BipartiteProduct, na, e, nb)).unwrap();
            let y = exact_average_y(&ScenarioDims::bipartite(Scenario::BipartiteProduct, nb, e, na)).unwrap();
            assert_eq!(x, y);
        }
    }

    #[test]
    fn pair_reduces_to_product() {
        for na in 2..=6 {
            for nb in 2..=6 {
                for b in 0..=na.min(nb) {
                    let tri = ScenarioDims::tripartite(Scenario::TripartitePair, 0, b, 0, 0, na - b, nb - b, 1);
                    let bi = ScenarioDims::bipartite(Scenario::BipartiteProduct, na, b, nb);
                    assert_eq!(exact_average_y(&tri).unwrap(), exact_average_y(&bi).unwrap(), "{na} {nb} {b}");
                }
            }
        }
    }

    #[test]
    fn pair_does_not_depend_on_c_fillers() {
        let x = ScenarioDims::tripartite(Scenario::TripartitePair, 1, 1, 1, 0, 0, 1, 0);
        let y = ScenarioDims::tripartite(Scenario::TripartitePair, 1, 1, 1, 0, 0, 1, 4);
        assert_eq!(exact_average_y(&x).unwrap(), exact_average_y(&y).unwrap());
    }
}
