use crate::domination::domination_number;
use crate::error::{Error, Result};
use crate::graph::{FamilyParams, Graph, UnicyclicLayout};

/// `gamma(U(n, k, g))` for `k = 1..=n-g`.
pub fn gamma_profile(n: usize, g: usize) -> Result<Vec<usize>> {
    FamilyParams::with_pendants(n, 1, g)?;
    (1..=n - g)
        .map(|k| Ok(domination_number(&UnicyclicLayout::new(n, k, g)?.graph()).gamma))
        .collect()
}

/// Least star size `k` with `gamma(U(n, k, g)) = gamma`.
pub fn v_star_size(n: usize, gamma: usize, g: usize) -> Result<usize> {
    FamilyParams::with_domination(n, gamma, g)?;
    let profile = gamma_profile(n, g)?;
    profile
        .iter()
        .position(|&x| x == gamma)
        .map(|i| i + 1)
        .ok_or(Error::UnrealizedGamma {
            n,
            g,
            gamma,
            profile,
        })
}

/// Layout of `V(n, gamma, g)`, the `U(n, k, g)` of least `k` with domination number `gamma`.
pub fn v_layout(n: usize, gamma: usize, g: usize) -> Result<UnicyclicLayout> {
    UnicyclicLayout::new(n, v_star_size(n, gamma, g)?, g)
}

pub fn build_v(n: usize, gamma: usize, g: usize) -> Result<Graph> {
    Ok(v_layout(n, gamma, g)?.graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_u;

    #[test]
    fn closed_forms_for_triangle() {
        assert_eq!(build_v(10, 3, 3).unwrap(), build_u(10, 1, 3).unwrap());
        for gamma in 2..=6 {
            assert_eq!(v_star_size(3 * gamma, gamma, 3).unwrap(), 1);
            assert_eq!(v_star_size(3 * gamma - 1, gamma, 3).unwrap(), 1);
        }
        for n in 5..=20 {
            for gamma in 1..=(n - 1) / 3 {
                assert_eq!(v_star_size(n, gamma, 3).unwrap(), n - 3 * gamma, "n={n} gamma={gamma}");
            }
        }
    }

    #[test]
    fn v_12_2_3() {
        assert_eq!(build_v(12, 2, 3).unwrap(), build_u(12, 6, 3).unwrap());
        let profile = gamma_profile(12, 3).unwrap();
        assert_eq!(profile[5], 2);
        assert!(profile[..5].iter().all(|&x| x > 2));
    }

    #[test]
    fn every_gamma_in_range_is_realized() {
        for n in 4..=22 {
            for g in (3..n).step_by(2) {
                let hi = crate::domination::gamma_g_formula(n, g).unwrap();
                for gamma in g.div_ceil(3)..=hi {
                    let v = build_v(n, gamma, g).unwrap();
                    assert_eq!(domination_number(&v).gamma, gamma);
                }
            }
        }
    }

    #[test]
    fn out_of_range_gamma() {
        assert!(build_v(10, 4, 3).is_err());
        assert!(build_v(10, 1, 5).is_err());
    }
}
