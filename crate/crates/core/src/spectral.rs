//! Signless Laplacian `Q = D + A`, a dense cyclic Jacobi eigensolver and the
//! least-eigenvalue machinery built on it.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tol;

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Builds from row-major entries; rejects asymmetric or non-finite input.
    pub fn from_rows(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                actual: data.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let a = data[i * n + j];
                if !a.is_finite() || a != data[j * n + i] {
                    return Err(Error::InvalidParams(format!(
                        "matrix not symmetric/finite at ({i},{j})"
                    )));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_frobenius(&self) -> f64 {
        self.data.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

/// Full eigensystem, eigenvalues ascending, `vectors[i]` paired with `values[i]`.
#[derive(Clone, Debug)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `1e-13 (1 + ||M||_F)`.
pub fn eig_sym(m: &SymMatrix) -> Result<Eigensystem> {
    let n = m.order();
    let mut a = m.clone();
    let mut v = SymMatrix::identity(n).data;
    let threshold = tol::JACOBI_REL_TOL * (1.0 + m.norm_frobenius());

    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off <= threshold {
            break;
        }
        if sweeps == tol::JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = a.get(p, p) - t * apq;
                let aqq = a.get(q, q) + t * apq;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a.get(r, p);
                    let arq = a.get(r, q);
                    a.set(r, p, arp - s * (arq + tau * arp));
                    a.set(r, q, arq + s * (arp - tau * arq));
                }
                a.set(p, p, app);
                a.set(q, q, aqq);
                a.set(p, q, 0.0);
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = vrp - s * (vrq + tau * vrp);
                    v[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)));
    Ok(Eigensystem {
        values: order.iter().map(|&i| a.get(i, i)).collect(),
        vectors: order
            .iter()
            .map(|&col| (0..n).map(|r| v[r * n + col]).collect())
            .collect(),
    })
}

/// `Q(G) = D(G) + A(G)`.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    let mut q = SymMatrix::zeros(g.order());
    for v in 0..g.order() {
        q.set(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        q.set(u, v, 1.0);
    }
    q
}

/// Least Q-eigenvalue with a first Q-eigenvector.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult {
    pub qmin: f64,
    /// Unit vector; its largest-magnitude entry (lowest index on ties) is positive.
    pub vector: Vec<f64>,
    /// `max_v |(Q x - qmin x)_v|`.
    pub residual: f64,
    /// Second least minus least eigenvalue; infinite for a single vertex.
    pub gap: f64,
}

impl SpectralResult {
    /// Whether the first eigenvector is unique up to sign at the guard tolerance.
    pub fn is_simple(&self) -> bool {
        self.gap >= tol::GAP_GUARD
    }

    pub fn abs_vector(&self) -> Vec<f64> {
        self.vector.iter().map(|x| x.abs()).collect()
    }
}

/// Flips `x` so its largest-magnitude entry is positive. Entries within
/// `1e-12` of the maximum count as ties and the lowest index wins.
pub fn normalize_sign(x: &mut [f64]) {
    let max = x.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    if let Some(lead) = x.iter().position(|a| a.abs() >= max - 1e-12) {
        if x[lead] < 0.0 {
            x.iter_mut().for_each(|a| *a = -*a);
        }
    }
}

pub fn q_min(g: &Graph) -> Result<SpectralResult> {
    let q = signless_laplacian(g);
    let sys = eig_sym(&q)?;
    let qmin = sys.values[0];
    let mut vector = sys.vectors.into_iter().next().unwrap();
    normalize_sign(&mut vector);
    let residual = q
        .mul_vec(&vector)
        .iter()
        .zip(&vector)
        .map(|(qx, x)| (qx - qmin * x).abs())
        .fold(0.0, f64::max);
    let gap = sys.values.get(1).map_or(f64::INFINITY, |q2| q2 - qmin);
    Ok(SpectralResult {
        qmin,
        vector,
        residual,
        gap,
    })
}

fn check_dim(g: &Graph, x: &[f64]) -> Result<()> {
    if x.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            actual: x.len(),
        });
    }
    Ok(())
}

/// `sum over edges uv of (x(u) + x(v))^2`, i.e. `x^T Q x`.
pub fn quadratic_form(g: &Graph, x: &[f64]) -> Result<f64> {
    check_dim(g, x)?;
    Ok(g.edges().iter().map(|&(u, v)| (x[u] + x[v]).powi(2)).sum())
}

/// `max_v |(lambda - d(v)) x(v) - sum_{u ~ v} x(u)|`.
pub fn eigen_residual(g: &Graph, x: &[f64], lambda: f64) -> Result<f64> {
    check_dim(g, x)?;
    Ok((0..g.order())
        .map(|v| {
            let s: f64 = g.neighbors(v).map(|u| x[u]).sum();
            ((lambda - g.degree(v) as f64) * x[v] - s).abs()
        })
        .fold(0.0, f64::max))
}

/// Rayleigh quotient of a unit vector; always at least `q_min(g)` up to `1e-9`.
pub fn rayleigh_check(g: &Graph, x: &[f64]) -> Result<f64> {
    check_dim(g, x)?;
    let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > tol::UNIT_INPUT {
        return Err(Error::NotUnit { norm });
    }
    quadratic_form(g, x)
}

/// Closed form `2 - 2 cos(pi / n)` for the least Q-eigenvalue of an odd cycle.
pub fn odd_cycle_qmin_oracle(n: usize) -> Result<f64> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("odd n >= 3 required, got {n}")));
    }
    Ok(2.0 - 2.0 * (std::f64::consts::PI / n as f64).cos())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, eps: f64) -> bool {
        (a - b).abs() <= eps
    }

    #[test]
    fn laplacian_examples() {
        let q = signless_laplacian(&Graph::complete(3).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q.get(i, j), if i == j { 2.0 } else { 1.0 });
            }
        }
        let z = signless_laplacian(&Graph::empty(4).unwrap());
        assert_eq!(z, SymMatrix::zeros(4));
        let s = signless_laplacian(&Graph::star(3).unwrap());
        assert_eq!((0..4).map(|i| s.get(i, i)).collect::<Vec<_>>(), vec![3.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn eig_identity_and_k3() {
        let sys = eig_sym(&SymMatrix::identity(5)).unwrap();
        assert!(sys.values.iter().all(|&l| l == 1.0));

        // A(C_3) has spectrum {2, -1, -1}; Q = 2I + A.
        let sys = eig_sym(&signless_laplacian(&Graph::complete(3).unwrap())).unwrap();
        assert!(close(sys.values[0], 1.0, 1e-12));
        assert!(close(sys.values[1], 1.0, 1e-12));
        assert!(close(sys.values[2], 4.0, 1e-12));
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(SymMatrix::from_rows(2, vec![1.0, 2.0, 3.0, 1.0]).is_err());
        assert!(SymMatrix::from_rows(2, vec![1.0, 2.0, 2.0]).is_err());
        assert!(SymMatrix::from_rows(1, vec![f64::NAN]).is_err());
    }

    #[test]
    fn qmin_examples() {
        let p6 = q_min(&Graph::path(6).unwrap()).unwrap();
        assert!(p6.qmin.abs() <= 1e-9);
        let c5 = q_min(&Graph::cycle(5).unwrap()).unwrap();
        assert!(close(c5.qmin, 0.381_966_011_250_105_1, 1e-9));
        let k3 = q_min(&Graph::complete(3).unwrap()).unwrap();
        assert!(close(k3.qmin, 1.0, 1e-9));
        assert!(k3.gap <= 1e-9, "K_3 has a double least eigenvalue");
        let single = q_min(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(single.qmin, 0.0);
        assert!(single.gap.is_infinite());
    }

    #[test]
    fn sign_normalization() {
        let mut x = vec![0.1, -0.7, 0.7];
        normalize_sign(&mut x);
        assert_eq!(x, vec![-0.1, 0.7, -0.7]);
        let mut y = vec![0.2, -0.9];
        normalize_sign(&mut y);
        assert_eq!(y, vec![-0.2, 0.9]);
    }

    #[test]
    fn quadratic_form_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(quadratic_form(&k3, &[1.0, 1.0, 1.0]).unwrap(), 12.0);
        assert_eq!(quadratic_form(&k3, &[0.0; 3]).unwrap(), 0.0);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(quadratic_form(&p3, &[1.0, -1.0, 1.0]).unwrap(), 0.0);
        assert!(quadratic_form(&p3, &[1.0]).is_err());
    }

    #[test]
    fn residual_examples() {
        let k3 = Graph::complete(3).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!(eigen_residual(&k3, &[s, s, s], 4.0).unwrap() <= 1e-12);
        assert!(eigen_residual(&k3, &[1.0, 0.0, 0.0], 1.0).unwrap() > 0.5);
        assert!(eigen_residual(&k3, &[1.0], 1.0).is_err());
    }

    #[test]
    fn rayleigh_examples() {
        let k3 = Graph::complete(3).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!(close(rayleigh_check(&k3, &[s, s, s]).unwrap(), 4.0, 1e-12));
        assert!(matches!(
            rayleigh_check(&k3, &[1.0, 1.0, 0.0]),
            Err(Error::NotUnit { .. })
        ));
        let c5 = Graph::cycle(5).unwrap();
        let r = q_min(&c5).unwrap();
        assert!(close(rayleigh_check(&c5, &r.vector).unwrap(), r.qmin, 1e-9));
    }

    #[test]
    fn oracle_values() {
        assert!(close(odd_cycle_qmin_oracle(3).unwrap(), 1.0, 1e-15));
        assert!(close(odd_cycle_qmin_oracle(5).unwrap(), 0.381_966_011_3, 1e-10));
        let seq: Vec<f64> = (3..60).step_by(2).map(|n| odd_cycle_qmin_oracle(n).unwrap()).collect();
        assert!(seq.windows(2).all(|w| w[1] < w[0]));
        assert!(*seq.last().unwrap() < 0.01);
        assert!(odd_cycle_qmin_oracle(4).is_err());
        assert!(odd_cycle_qmin_oracle(1).is_err());
    }
}
