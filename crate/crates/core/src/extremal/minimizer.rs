use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{FamilyParams, Graph};
use crate::spectral::q_min;
use crate::tol;

use super::canon::canonical_form;
use super::enumerate::{enumerate_graphs, EnumOptions, GraphFilter};
use super::family::build_v;
use super::report::{VerificationReport, Witness};

/// Graph class scanned by [`find_minimizer_in`]. All classes are connected,
/// non-bipartite, of fixed order and domination number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimizerClass {
    /// Every such graph.
    All,
    /// Shortest odd cycle of the given length.
    OddGirth(usize),
    /// Unicyclic with an odd cycle of the given length.
    Unicyclic(usize),
}

impl MinimizerClass {
    fn girth(self) -> Option<usize> {
        match self {
            MinimizerClass::All => None,
            MinimizerClass::OddGirth(g) | MinimizerClass::Unicyclic(g) => Some(g),
        }
    }

    fn check_id(self) -> &'static str {
        match self {
            MinimizerClass::All => "cor-final",
            MinimizerClass::OddGirth(_) => "thm-main-g",
            MinimizerClass::Unicyclic(_) => "thm-minuni",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimizerResult {
    pub n: usize,
    pub gamma: usize,
    pub class: MinimizerClass,
    pub class_size: usize,
    /// Canonical representatives within `1e-9` of the minimum.
    pub argmin: Vec<Graph>,
    pub min_value: f64,
    /// Least excess over the minimum among the other graphs; `None` when
    /// every graph is tied.
    pub runner_up_gap: Option<f64>,
    /// `V(n, gamma, g)` with `g = 3` for the unrestricted class.
    pub expected: Graph,
    /// Singleton argmin isomorphic to `expected`.
    pub matches_expected: bool,
}

impl MinimizerResult {
    /// Pass iff the minimizer is unique, equals the expected graph and is
    /// separated from the runner-up by more than the tie tolerance.
    pub fn to_report(&self) -> VerificationReport {
        let mut r = VerificationReport::new(self.class.check_id(), tol::TIE)
            .param("n", self.n)
            .param("gamma", self.gamma)
            .param("class_size", self.class_size)
            .param("min_value", crate::extremal::report::round_sig12(self.min_value))
            .param("expected", self.expected.to_string());
        if let Some(g) = self.class.girth() {
            r = r.param("g", g);
        }
        if !self.matches_expected {
            for g in &self.argmin {
                r.fail(Witness::new("argmin", g, vec![self.min_value]));
            }
            r.fail(Witness::new("expected", &self.expected, vec![]));
        }
        let gap = self.runner_up_gap.unwrap_or(f64::INFINITY);
        r.observe(gap, || Witness::new("runner-up gap", &self.argmin[0], vec![gap]));
        r.params.insert(
            "runner_up_gap".into(),
            self.runner_up_gap
                .and_then(crate::extremal::report::round_sig12)
                .map_or(Value::Null, Value::from),
        );
        r
    }
}

/// Least q_min over connected non-bipartite graphs of order `n` and
/// domination number `gamma` (optionally with odd girth `g`).
pub fn find_minimizer(n: usize, gamma: usize, odd_girth: Option<usize>, opts: EnumOptions) -> Result<MinimizerResult> {
    let class = odd_girth.map_or(MinimizerClass::All, MinimizerClass::OddGirth);
    find_minimizer_in(n, gamma, class, opts)
}

pub fn find_minimizer_in(
    n: usize,
    gamma: usize,
    class: MinimizerClass,
    opts: EnumOptions,
) -> Result<MinimizerResult> {
    match class.girth() {
        None => {
            if gamma == 0 || 3 * gamma > n + 1 {
                return Err(Error::InvalidParams(format!(
                    "need 1 <= gamma <= (n+1)/3, got gamma={gamma}, n={n}"
                )));
            }
        }
        Some(g) => {
            FamilyParams::with_domination(n, gamma, g)?;
        }
    }
    let filter = GraphFilter {
        gamma: Some(gamma),
        odd_girth: class.girth(),
        unicyclic: matches!(class, MinimizerClass::Unicyclic(_)),
        ..GraphFilter::connected_non_bipartite()
    };
    let graphs = enumerate_graphs(n, &filter, opts)?;
    if graphs.is_empty() {
        return Err(Error::EmptyClass(format!("n={n} gamma={gamma} {class:?}")));
    }
    let values: Vec<f64> = graphs
        .par_iter()
        .map(|g| q_min(g).map(|r| r.qmin))
        .collect::<Result<_>>()?;
    let min_value = values.iter().copied().fold(f64::INFINITY, f64::min);
    let mut argmin = Vec::new();
    let mut runner_up_gap: Option<f64> = None;
    for (g, &q) in graphs.iter().zip(&values) {
        if q - min_value <= tol::TIE {
            argmin.push(g.clone());
        } else {
            let d = q - min_value;
            runner_up_gap = Some(runner_up_gap.map_or(d, |r| r.min(d)));
        }
    }
    let expected = build_v(n, gamma, class.girth().unwrap_or(3))?;
    let matches_expected =
        argmin.len() == 1 && canonical_form(&argmin[0])? == canonical_form(&expected)?;
    Ok(MinimizerResult {
        n,
        gamma,
        class,
        class_size: graphs.len(),
        argmin,
        min_value,
        runner_up_gap,
        expected,
        matches_expected,
    })
}
