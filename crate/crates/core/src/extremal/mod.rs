//! Extremal families, structural checks on first eigenvectors, exhaustive
//! minimizer search and monotonicity sweeps.

pub mod canon;
pub mod enumerate;
pub mod family;
pub mod minimizer;
pub mod relocation;
pub mod report;
pub mod structure;
pub mod sweep;
pub mod unispan;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use enumerate::{enumerate_graphs, EnumOptions, GraphFilter};
pub use family::{build_v, gamma_profile, v_layout, v_star_size};
pub use minimizer::{find_minimizer, find_minimizer_in, MinimizerClass, MinimizerResult};
pub use relocation::{relocate_branch, verify_relocation};
pub use report::{Verdict, VerificationReport, Witness};
pub use structure::{
    check_sign_structure, check_sign_structure_labeled, check_tree_branch_monotone, tree_branches,
    two_core, TreeBranch,
};
pub use sweep::{
    check_cycle_exclusion, check_uv, feasible_girths, sweep_gamma, sweep_girth, sweep_k,
};
pub use unispan::{check_unispan, extract_spanning_unicyclic, extract_with_trace, Extraction, ExtractionCase};
