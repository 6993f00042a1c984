//! Monotonicity of the least Q-eigenvalue along the extremal families.

use crate::domination::{domination_number, gamma_g_formula};
use crate::error::{Error, Result};
use crate::graph::{build_u, FamilyParams, Graph};
use crate::spectral::q_min;
use crate::tol;

use super::family::{build_v, v_star_size};
use super::report::{fmt_sig12, VerificationReport, Witness};

/// Direction in which the swept values must move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Trend {
    Increasing,
    Decreasing,
}

fn sweep_csv(param: &str, rows: &[(usize, f64)], margins: &[Option<f64>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([param, "qmin", "margin"]).expect("in-memory write");
    for (&(p, q), m) in rows.iter().zip(margins) {
        w.write_record([
            p.to_string(),
            fmt_sig12(q),
            m.map(fmt_sig12).unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
}

fn strict_sweep(
    report: &mut VerificationReport,
    param: &str,
    rows: &[(usize, f64)],
    graphs: &[Graph],
    trend: Trend,
) {
    let mut margins = vec![None];
    for (i, w) in rows.windows(2).enumerate() {
        let step = match trend {
            Trend::Increasing => w[1].1 - w[0].1,
            Trend::Decreasing => w[0].1 - w[1].1,
        };
        margins.push(Some(step));
        report.observe(step, || {
            Witness::new(format!("{param}={} -> {}", w[0].0, w[1].0), &graphs[i + 1], vec![w[0].1, w[1].1])
        });
    }
    report.csv = Some(sweep_csv(param, rows, &margins));
}

struct KProfile {
    rows: Vec<(usize, f64)>,
    gammas: Vec<usize>,
    graphs: Vec<Graph>,
}

fn k_profile(n: usize, g: usize) -> Result<KProfile> {
    FamilyParams::with_pendants(n, 1, g)?;
    let mut p = KProfile {
        rows: Vec::new(),
        gammas: Vec::new(),
        graphs: Vec::new(),
    };
    for k in 1..=n - g {
        let u = build_u(n, k, g)?;
        p.rows.push((k, q_min(&u)?.qmin));
        p.gammas.push(domination_number(&u).gamma);
        p.graphs.push(u);
    }
    Ok(p)
}

fn uv_into(report: &mut VerificationReport, n: usize, g: usize, p: &KProfile) -> Result<()> {
    for (i, &(k, q)) in p.rows.iter().enumerate() {
        let gamma = p.gammas[i];
        let kv = v_star_size(n, gamma, g)?;
        if kv == k {
            continue;
        }
        let qv = p.rows[kv - 1].1;
        report.observe(q - qv, || {
            Witness::new(format!("U k={k} vs V k={kv}"), &p.graphs[i], vec![q, qv])
        });
    }
    Ok(())
}

/// `q_min(U(n, k, g))` strictly increases in `k`; also checks that every
/// `U(n, k, g)` other than `V(n, gamma, g)` lies strictly above it.
pub fn sweep_k(n: usize, g: usize) -> Result<VerificationReport> {
    let p = k_profile(n, g)?;
    let mut r = VerificationReport::new("lemma-minpen-k", tol::STRICT_STEP)
        .param("n", n)
        .param("g", g);
    strict_sweep(&mut r, "k", &p.rows, &p.graphs, Trend::Increasing);
    let mut uv = VerificationReport::new("cor-uv", tol::STRICT_STEP);
    uv_into(&mut uv, n, g, &p)?;
    r.absorb(uv);
    Ok(r)
}

/// `q_min(U(n, k, g)) > q_min(V(n, gamma(U), g))` whenever `U != V`.
pub fn check_uv(n: usize, g: usize) -> Result<VerificationReport> {
    let p = k_profile(n, g)?;
    let mut r = VerificationReport::new("cor-uv", tol::STRICT_STEP)
        .param("n", n)
        .param("g", g);
    uv_into(&mut r, n, g, &p)?;
    Ok(r)
}

/// `q_min(V(n, gamma, g))` strictly decreases over `gamma = ceil(g/3)..=gamma_g`.
pub fn sweep_gamma(n: usize, g: usize) -> Result<VerificationReport> {
    FamilyParams::with_pendants(n, 1, g)?;
    let mut rows = Vec::new();
    let mut graphs = Vec::new();
    for gamma in g.div_ceil(3)..=gamma_g_formula(n, g)? {
        let v = build_v(n, gamma, g)?;
        rows.push((gamma, q_min(&v)?.qmin));
        graphs.push(v);
    }
    let mut r = VerificationReport::new("cor-decr-gamma", tol::STRICT_STEP)
        .param("n", n)
        .param("g", g);
    strict_sweep(&mut r, "gamma", &rows, &graphs, Trend::Decreasing);
    Ok(r)
}

/// Odd girths admissible for `V(n, gamma, g)`.
pub fn feasible_girths(n: usize, gamma: usize) -> Vec<usize> {
    (3..n)
        .step_by(2)
        .filter(|&g| FamilyParams::with_domination(n, gamma, g).is_ok())
        .collect()
}

/// `q_min(V(n, gamma, g))` strictly increases over the feasible odd `g`.
pub fn sweep_girth(n: usize, gamma: usize) -> Result<VerificationReport> {
    let girths = feasible_girths(n, gamma);
    if girths.is_empty() {
        return Err(Error::InvalidParams(format!(
            "no odd girth g < {n} admits gamma = {gamma}"
        )));
    }
    let mut rows = Vec::new();
    let mut graphs = Vec::new();
    for g in girths {
        let v = build_v(n, gamma, g)?;
        rows.push((g, q_min(&v)?.qmin));
        graphs.push(v);
    }
    let mut r = VerificationReport::new("cor-decr-girth", tol::STRICT_STEP)
        .param("n", n)
        .param("gamma", gamma);
    strict_sweep(&mut r, "g", &rows, &graphs, Trend::Increasing);
    Ok(r)
}

/// The odd cycle `C_n` lies strictly above `U(n, 1, n-2)`.
pub fn check_cycle_exclusion(n: usize) -> Result<VerificationReport> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("odd n >= 5 required, got {n}")));
    }
    let c = Graph::cycle(n)?;
    let u = build_u(n, 1, n - 2)?;
    let (qc, qu) = (q_min(&c)?.qmin, q_min(&u)?.qmin);
    let mut r = VerificationReport::new("cor-final-cycle", tol::STRICT_STEP).param("n", n);
    r.observe(qc - qu, || Witness::new("U(n,1,n-2)", &u, vec![qc, qu]));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_k_20_3() {
        let r = sweep_k(20, 3).unwrap();
        assert!(r.passed(), "{r:?}");
        let csv = r.csv.unwrap();
        assert_eq!(csv.lines().count(), 1 + 17);
        assert!(csv.starts_with("k,qmin,margin\n1,"));
    }

    #[test]
    fn sweep_gamma_20_3() {
        let r = sweep_gamma(20, 3).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.csv.unwrap().lines().count(), 1 + 7);
    }

    #[test]
    fn sweep_girth_21_3() {
        assert_eq!(feasible_girths(21, 3), vec![3, 5, 7, 9]);
        let r = sweep_girth(21, 3).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn cycle_exclusion() {
        for n in (7..=15).step_by(2) {
            assert!(check_cycle_exclusion(n).unwrap().passed());
        }
        assert!(check_cycle_exclusion(6).is_err());
    }

    #[test]
    fn invalid_ranges() {
        assert!(sweep_k(5, 5).is_err());
        assert!(sweep_gamma(10, 4).is_err());
        assert!(sweep_girth(10, 9).is_err());
    }
}
