//! Leading-order averages for large subsystems.

use serde::{Deserialize, Serialize};

use super::scenario::{Scenario, ScenarioDims};
use crate::measures::m_from_y;

/// Above this the bracketed correction is too large for the leading term to be trusted.
pub const UNRELIABLE_CORRECTION: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LeadingValue {
    pub y: f64,
    /// `-log2(1 - y)`.
    pub m2: f64,
    /// Bracket minus one, e.g. `3 * 2^{-2E}` for the product scenario.
    pub correction: f64,
    pub unreliable: bool,
}

fn p2(k: f64) -> f64 {
    2f64.powf(k)
}

/// Leading-order `E[Y_lin]` for the scenario:
///
/// - bipartite Haar: `1 - 4 * 2^{-|A|-E}`
/// - bipartite product: `1 - 4 * 2^{-N} (1 + 3 * 2^{-2E})`
/// - tripartite pair: `1 - 4 * 2^{-|A|-|B|-g-b_AC-b_BC} (1 + 3 * 2^{-2 b_AB - g})`
/// - tripartite triple: `1 - 4 * 2^{-N} [1 + 3 (x_AB,AC + x_AB,BC + x_AC,BC) + 3/2 x_all + 9/2 x_all 2^{-g}]`,
///   `x_XY = 2^{-2 b_X - 2 b_Y - 2g}`, `x_all = 2^{-2(b_AB + b_AC + b_BC + g)}`.
pub fn leading_average_y(dims: &ScenarioDims) -> LeadingValue {
    let f = |v: u32| v as f64;
    let (prefactor_exp, correction) = match dims.scenario {
        Scenario::BipartiteHaar => (-f(dims.n_a) - f(dims.e), 0.0),
        Scenario::BipartiteProduct => (-f(dims.n_a + dims.n_b), 3.0 * p2(-2.0 * f(dims.e))),
        Scenario::TripartitePair => (
            -f(dims.n_a + dims.n_b + dims.g + dims.b_ac + dims.b_bc),
            3.0 * p2(-2.0 * f(dims.b_ab) - f(dims.g)),
        ),
        Scenario::TripartiteTriple => {
            let (ab, ac, bc, g) = (f(dims.b_ab), f(dims.b_ac), f(dims.b_bc), f(dims.g));
            let all = p2(-2.0 * (ab + ac + bc + g));
            let corr = 3.0 * (p2(-2.0 * (ab + ac + g)) + p2(-2.0 * (ab + bc + g)) + p2(-2.0 * (ac + bc + g)))
                + 1.5 * all
                + 4.5 * all * p2(-g);
            (-f(dims.n_a + dims.n_b + dims.n_c), corr)
        }
    };
    let y = 1.0 - 4.0 * p2(prefactor_exp) * (1.0 + correction);
    LeadingValue {
        y,
        m2: m_from_y(y),
        correction,
        unreliable: correction > UNRELIABLE_CORRECTION,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::{exact_average_y, to_f64};

    #[test]
    fn substitutions() {
        let v = leading_average_y(&ScenarioDims::bipartite(Scenario::BipartiteHaar, 3, 1, 1));
        assert_eq!(v.y, 0.75);
        assert_eq!(v.m2, 2.0);
        assert!(!v.unreliable);
        let v = leading_average_y(&ScenarioDims::bipartite(Scenario::BipartiteProduct, 3, 30, 3));
        assert!((v.y - 0.9375).abs() < 1e-15);
        let v = leading_average_y(&ScenarioDims::tripartite(Scenario::TripartiteTriple, 0, 0, 0, 0, 2, 2, 2));
        assert_eq!(v.y, 0.0);
        assert!(v.unreliable);
    }

    #[test]
    fn exact_bipartite_approaches_leading() {
        for na in 1..=8u32 {
            for e in 0..=na {
                // (3,1) and (4,0) sit at 0.86 and 0.84; the band holds from |A| + E = 5 on.
                if na < 2 || na + e < 5 {
                    continue;
                }
                let d = ScenarioDims::bipartite(Scenario::BipartiteHaar, na, e, e + 1);
                let exact = to_f64(&exact_average_y(&d).unwrap());
                let ratio = (1.0 - exact) * 2f64.powi((na + e) as i32) / 4.0;
                assert!((0.9..=1.1).contains(&ratio), "|A|={na} E={e}: ratio {ratio}");
            }
        }
    }

    #[test]
    fn exact_product_approaches_leading() {
        for na in 3..=10u32 {
            for nb in 3..=10u32 {
                for e in 0..=na.min(nb) {
                    let d = ScenarioDims::bipartite(Scenario::BipartiteProduct, na, e, nb);
                    let exact = to_f64(&exact_average_y(&d).unwrap());
                    let lead = 1.0 - leading_average_y(&d).y;
                    let ratio = (1.0 - exact) / lead;
                    let scale = 2f64.powi(-(na as i32)) + 2f64.powi(-(nb as i32));
                    // corrections are O(2^{-|A|}, 2^{-|B|})
                    assert!((ratio - 1.0).abs() <= 3.0 * scale, "{na} {nb} {e}: {ratio}");
                }
            }
        }
    }
}
