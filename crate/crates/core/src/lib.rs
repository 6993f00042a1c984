//! Least signless-Laplacian eigenvalues, exact domination numbers and the
//! extremal unicyclic families `U(n, k, g)` / `V(n, gamma, g)` of small graphs,
//! together with numerical checks of their extremal properties.

pub mod domination;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod spectral;
pub mod tol;

pub use domination::{domination_number, DominationCertificate};
pub use error::{Error, Result};
pub use graph::{build_u, coalesce, graph6_decode, graph6_encode, Graph};
pub use spectral::{q_min, SpectralResult};
