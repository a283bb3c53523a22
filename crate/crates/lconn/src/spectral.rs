//! Dense spectra for graphs and Perron roots for digraphs.
//!
//! Adjacency and Laplacian spectra come from a cyclic Jacobi sweep over
//! the dense symmetric matrix. Matrices are at most 64x64, so the O(n^3)
//! sweeps are immaterial and Jacobi's unconditional convergence on
//! symmetric input keeps the solver simple. Digraph spectral radii come
//! from power iteration on the (irreducible, nonnegative) adjacency
//! matrix shifted by the identity, with Collatz-Wielandt bounds as the
//! stopping rule.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tie tolerance for "equal spectral radius" comparisons, everywhere.
/// The dense solver is accurate to about 1e-10 on these orders, so a 1e-9
/// absolute tie window is ample.
pub const RHO_TOL: f64 = 1e-9;

const JACOBI_MAX_SWEEPS: usize = 100;
const POWER_REL_TOL: f64 = 1e-12;
const POWER_MAX_ITERS: usize = 1_000_000;

/// Full spectral data of an undirected graph.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SpectralSummary {
    /// Spectral radius: the largest adjacency eigenvalue.
    pub rho: f64,
    /// Adjacency eigenvalues, descending.
    pub eigs: Vec<f64>,
    /// Laplacian eigenvalues, ascending.
    pub lap: Vec<f64>,
    /// Second largest absolute adjacency eigenvalue; absent for order 1.
    pub lambda_abs: Option<f64>,
    /// Unit positive eigenvector at `rho`; present iff the graph is
    /// connected.
    pub perron: Option<Vec<f64>>,
}

/// Cyclic Jacobi on a symmetric matrix. Returns unsorted eigenvalues and
/// the orthogonal eigenvector matrix (column k pairs with eigenvalue k).
pub fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = a.len();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let mut d: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    for sweep in 1..=JACOBI_MAX_SWEEPS {
        let mut sm = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                sm += a[p][q].abs();
            }
        }
        if sm == 0.0 {
            return Ok((d, v));
        }
        let tresh = if sweep < 4 { 0.2 * sm / (n * n) as f64 } else { 0.0 };
        for p in 0..n {
            for q in p + 1..n {
                let g = 100.0 * a[p][q].abs();
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p][q] = 0.0;
                } else if a[p][q].abs() > tresh {
                    let mut h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        a[p][q] / h
                    } else {
                        let theta = 0.5 * h / a[p][q];
                        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            -t
                        } else {
                            t
                        }
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    h = t * a[p][q];
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[p][q] = 0.0;
                    let rotate = |x: f64, y: f64| (x - s * (y + tau * x), y + s * (x - tau * y));
                    for j in 0..p {
                        let (x, y) = rotate(a[j][p], a[j][q]);
                        a[j][p] = x;
                        a[j][q] = y;
                    }
                    for j in p + 1..q {
                        let (x, y) = rotate(a[p][j], a[j][q]);
                        a[p][j] = x;
                        a[j][q] = y;
                    }
                    for j in q + 1..n {
                        let (x, y) = rotate(a[p][j], a[q][j]);
                        a[p][j] = x;
                        a[q][j] = y;
                    }
                    for row in v.iter_mut() {
                        let (x, y) = rotate(row[p], row[q]);
                        row[p] = x;
                        row[q] = y;
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    Err(Error::NoConvergence(format!("Jacobi after {JACOBI_MAX_SWEEPS} sweeps")))
}

fn adjacency_dense(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| f64::from(g.has_edge(u, v))).collect())
        .collect()
}

/// Adjacency eigenvalues (descending) with matching eigenvectors.
pub fn adjacency_eigenpairs(g: &Graph) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = g.order();
    let (d, v) = jacobi_eigen(adjacency_dense(g))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[j].partial_cmp(&d[i]).expect("finite eigenvalues"));
    let eigs: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vecs: Vec<Vec<f64>> = order.iter().map(|&k| (0..n).map(|i| v[i][k]).collect()).collect();
    Ok((eigs, vecs))
}

/// Full spectral summary of a graph.
pub fn spectrum(g: &Graph) -> Result<SpectralSummary> {
    let n = g.order();
    let (eigs, vecs) = adjacency_eigenpairs(g)?;

    let lap_matrix: Vec<Vec<f64>> = {
        let mut m = adjacency_dense(g);
        for i in 0..n {
            for j in 0..n {
                m[i][j] = -m[i][j];
            }
            m[i][i] = g.degree(i) as f64;
        }
        m
    };
    let (mut lap, _) = jacobi_eigen(lap_matrix)?;
    lap.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));

    let lambda_abs = if n >= 2 { Some(eigs[1].abs().max(eigs[n - 1].abs())) } else { None };
    let perron = if g.is_connected() {
        let mut x = vecs[0].clone();
        if x.iter().sum::<f64>() < 0.0 {
            for e in &mut x {
                *e = -*e;
            }
        }
        Some(x)
    } else {
        None
    };

    Ok(SpectralSummary { rho: eigs[0], eigs, lap, lambda_abs, perron })
}

/// Largest adjacency eigenvalue.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(adjacency_eigenpairs(g)?.0[0])
}

/// Laplacian eigenvalues of `D(G) - A(G)`, ascending.
pub fn laplacian_spectrum(g: &Graph) -> Result<Vec<f64>> {
    Ok(spectrum(g)?.lap)
}

/// `max(|lambda_2|, |lambda_n|)`, the second largest absolute eigenvalue.
pub fn second_largest_abs(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::Undefined("second eigenvalue of a one-vertex graph".into()));
    }
    let (eigs, _) = adjacency_eigenpairs(g)?;
    Ok(eigs[1].abs().max(eigs[eigs.len() - 1].abs()))
}

/// Edge-count bound on the spectral radius: `sqrt(2m - n + 1)`.
pub fn hong_bound(n: usize, m: usize) -> Result<f64> {
    let radicand = 2 * m as i64 - n as i64 + 1;
    if radicand < 0 {
        return Err(Error::Undefined(format!("negative radicand 2*{m} - {n} + 1")));
    }
    Ok((radicand as f64).sqrt())
}

/// Perron root of a strongly connected digraph.
///
/// Power iteration on `A + I` (primitive for irreducible `A`) from the
/// all-ones vector, so runs are deterministic; the Collatz-Wielandt
/// ratio bounds give a rigorous bracket and the stopping rule.
pub fn digraph_spectral_radius(d: &Digraph) -> Result<f64> {
    if !d.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let n = d.order();
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    for _ in 0..POWER_MAX_ITERS {
        for u in 0..n {
            let mut acc = x[u];
            for v in d.out_neighbors(u).iter() {
                acc += x[v];
            }
            y[u] = acc;
        }
        let mut rmin = f64::INFINITY;
        let mut rmax = 0.0f64;
        for i in 0..n {
            let r = y[i] / x[i];
            rmin = rmin.min(r);
            rmax = rmax.max(r);
        }
        if rmax - rmin <= POWER_REL_TOL * rmax {
            return Ok(0.5 * (rmin + rmax) - 1.0);
        }
        let scale = 1.0 / y.iter().cloned().fold(0.0f64, f64::max);
        for i in 0..n {
            x[i] = y[i] * scale;
        }
    }
    Err(Error::NoConvergence(format!("power iteration after {POWER_MAX_ITERS} iterations")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn small_fixed_spectra() {
        let k3 = spectrum(&Graph::complete(3).unwrap()).unwrap();
        assert!(close(k3.eigs[0], 2.0, 1e-10));
        assert!(close(k3.eigs[1], -1.0, 1e-10));
        assert!(close(k3.eigs[2], -1.0, 1e-10));

        let p3 = spectrum(&Graph::path(3).unwrap()).unwrap();
        let r2 = 2f64.sqrt();
        assert!(close(p3.eigs[0], r2, 1e-10));
        assert!(close(p3.eigs[1], 0.0, 1e-10));
        assert!(close(p3.eigs[2], -r2, 1e-10));
        assert_eq!(p3.lap.len(), 3);
        assert!(close(p3.lap[0], 0.0, 1e-10));
        assert!(close(p3.lap[1], 1.0, 1e-10));
        assert!(close(p3.lap[2], 3.0, 1e-10));
    }

    #[test]
    fn closed_form_radii() {
        for n in 2..=10 {
            assert!(close(spectral_radius(&Graph::complete(n).unwrap()).unwrap(), (n - 1) as f64, 1e-10));
        }
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert!(close(spectral_radius(&k23).unwrap(), 6f64.sqrt(), 1e-10));
    }

    #[test]
    fn second_largest_abs_cases() {
        assert!(close(second_largest_abs(&Graph::complete(4).unwrap()).unwrap(), 1.0, 1e-10));
        // C6 spectrum from 2cos(2 pi k/6): {2, 1, 1, -1, -1, -2}.
        assert!(close(second_largest_abs(&Graph::cycle(6).unwrap()).unwrap(), 2.0, 1e-10));
        assert!(second_largest_abs(&Graph::complete(1).unwrap()).is_err());
    }

    #[test]
    fn perron_vector_positive_and_accurate() {
        let g = Graph::petersen();
        let s = spectrum(&g).unwrap();
        let x = s.perron.as_ref().unwrap();
        assert!(x.iter().all(|&e| e >= 1e-12));
        // Residual of the returned dominant pair.
        for u in 0..g.order() {
            let mut acc = 0.0;
            for v in g.neighbors(u).iter() {
                acc += x[v];
            }
            assert!(close(acc, s.rho * x[u], 1e-8));
        }
        assert!(spectrum(&Graph::empty(4).unwrap()).unwrap().perron.is_none());
    }

    #[test]
    fn hong_bound_arithmetic() {
        assert!(close(hong_bound(6, 7).unwrap(), 3.0, 1e-12));
        for n in 2..=9 {
            let m = n * (n - 1) / 2;
            assert!(close(hong_bound(n, m).unwrap(), (n - 1) as f64, 1e-12));
        }
        assert!(hong_bound(4, 0).is_err());
    }

    #[test]
    fn digraph_radii() {
        for n in 1..=8 {
            let rho = digraph_spectral_radius(&Digraph::complete(n).unwrap()).unwrap();
            assert!(close(rho, (n - 1) as f64, 1e-10));
        }
        for n in 2..=8 {
            let rho = digraph_spectral_radius(&Digraph::directed_cycle(n).unwrap()).unwrap();
            assert!(close(rho, 1.0, 1e-10));
        }
        let not_strong = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert!(digraph_spectral_radius(&not_strong).is_err());
    }

    use crate::digraph::Digraph;
}
