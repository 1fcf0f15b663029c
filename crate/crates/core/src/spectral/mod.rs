//! Eigenvalues, expander-mixing verification and the weighted matrices of
//! the doubled-graph analysis.

pub mod eigen;
pub mod families;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, Graph, SidedGraph};
use crate::rng::SplitMix64;

pub use families::{generate_triangle_free_expander, ExpanderInstance, Family};

/// Default dense-eigensolve vertex cap.
pub const DENSE_EIGEN_CAP: usize = 4096;

/// Eigenvalues of a graph's adjacency matrix, descending, with the largest
/// nontrivial absolute value broken out.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// `max_{i>1} |lambda_i|` (0 for graphs on fewer than 2 vertices).
    pub lambda_max_nontrivial: f64,
    /// Present when the graph is regular.
    pub degree: Option<usize>,
}

impl Spectrum {
    fn from_eigenvalues(eigenvalues: Vec<f64>, degree: Option<usize>) -> Self {
        let lambda = eigenvalues
            .iter()
            .skip(1)
            .map(|x| x.abs())
            .fold(0.0f64, f64::max);
        Spectrum {
            eigenvalues,
            lambda_max_nontrivial: lambda,
            degree,
        }
    }

    /// CSV export: `index,eigenvalue` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,eigenvalue\n");
        for (i, ev) in self.eigenvalues.iter().enumerate() {
            out.push_str(&format!("{i},{ev}\n"));
        }
        out
    }
}

/// Full symmetric eigensolve of the adjacency matrix (dense, in-crate).
pub fn eigen_spectrum(g: &Graph) -> Result<Spectrum> {
    eigen_spectrum_with_cap(g, DENSE_EIGEN_CAP)
}

pub fn eigen_spectrum_with_cap(g: &Graph, cap: usize) -> Result<Spectrum> {
    if g.n() > cap {
        return Err(Error::SizeCap {
            what: "dense eigensolve vertices",
            got: g.n(),
            cap,
        });
    }
    let n = g.n();
    let mut mat = vec![0.0f64; n * n];
    for u in 0..n as u32 {
        for w in g.neighbors(u) {
            mat[u as usize * n + w as usize] = 1.0;
        }
    }
    let evs = eigen::symmetric_eigenvalues(&mat, n)?;
    Ok(Spectrum::from_eigenvalues(evs, g.regular_degree()))
}

/// One random disjoint-pair trial outcome inside [`check_mixing`].
#[derive(Clone, Copy, Debug)]
pub struct MixingMargins {
    /// `lambda*sqrt(ab) - | |cut(A,B)| - abd/t |`; negative means violation.
    pub cut_margin: f64,
    /// `lambda*a/2 - | |H[A]| - a^2 d/(2t) |`; negative means violation.
    pub induced_margin: f64,
}

#[derive(Clone, Debug)]
pub struct MixingReport {
    pub trials: usize,
    pub violations: usize,
    pub min_cut_margin: f64,
    pub min_induced_margin: f64,
}

/// Tolerance absorbing eigensolver rounding in the mixing inequalities.
const MIXING_SLACK: f64 = 1e-8;

/// Verify both expander-mixing inequalities on `trials` random disjoint
/// pairs `A, B`. The input must be regular; a reported violation on a
/// correct spectrum indicates an implementation bug, since the inequalities
/// are theorems.
pub fn check_mixing(
    h: &Graph,
    spectrum: &Spectrum,
    trials: usize,
    seed: u64,
) -> Result<MixingReport> {
    let d = h
        .regular_degree()
        .ok_or_else(|| first_degree_mismatch(h))?;
    let t = h.n();
    let lambda = spectrum.lambda_max_nontrivial;
    let mut rng = SplitMix64::new(seed);
    let mut report = MixingReport {
        trials,
        violations: 0,
        min_cut_margin: f64::INFINITY,
        min_induced_margin: f64::INFINITY,
    };
    for _ in 0..trials {
        let a = rng.gen_range(t + 1);
        let b = rng.gen_range(t - a + 1);
        let ids = rng.sample_distinct(t, a + b);
        let mut mask_a = BitVec::zeros(t);
        let mut mask_b = BitVec::zeros(t);
        for &v in &ids[..a] {
            mask_a.set(v);
        }
        for &v in &ids[a..] {
            mask_b.set(v);
        }
        let margins = mixing_margins(h, d, t, lambda, &mask_a, &mask_b);
        if margins.cut_margin < -MIXING_SLACK || margins.induced_margin < -MIXING_SLACK {
            report.violations += 1;
        }
        report.min_cut_margin = report.min_cut_margin.min(margins.cut_margin);
        report.min_induced_margin = report.min_induced_margin.min(margins.induced_margin);
    }
    Ok(report)
}

/// Margins for one explicit pair; exposed for edge-case tests.
pub fn mixing_margins(
    h: &Graph,
    d: usize,
    t: usize,
    lambda: f64,
    mask_a: &BitVec,
    mask_b: &BitVec,
) -> MixingMargins {
    let a = mask_a.count_ones() as f64;
    let b = mask_b.count_ones() as f64;
    let cut = h.edges_between(mask_a, mask_b) as f64;
    let inside = h.edges_within(mask_a) as f64;
    let (d, t) = (d as f64, t as f64);
    MixingMargins {
        cut_margin: lambda * (a * b).sqrt() - (cut - a * b * d / t).abs(),
        induced_margin: lambda * a / 2.0 - (inside - a * a * d / (2.0 * t)).abs(),
    }
}

fn first_degree_mismatch(h: &Graph) -> Error {
    let d0 = h.degree(0);
    for v in 1..h.n() as u32 {
        if h.degree(v) != d0 {
            return Error::NotRegular(d0, h.degree(v));
        }
    }
    Error::NotRegular(d0, d0)
}

/// Weighted adjacency matrix of a double `K`: internal edges weigh
/// `p = (1-c)/(2td)`, external pairs weigh `q = (1-c)/(2t^2)`.
#[derive(Clone, Debug)]
pub struct WeightedKMatrix {
    pub t: usize,
    pub d: usize,
    pub c: f64,
    pub p: f64,
    pub q: f64,
    base: SidedGraph,
}

impl WeightedKMatrix {
    /// `base` must be a double (both sides inducing the same d-regular H).
    pub fn new(base: &SidedGraph, c: f64) -> Result<Self> {
        if base.is_blowup() {
            return Err(Error::InvalidArgument(
                "weighted K matrix expects a double, not a blowup".into(),
            ));
        }
        if !(0.0..=1.0).contains(&c) {
            return Err(Error::InvalidArgument(format!("c = {c} out of [0,1]")));
        }
        let t = base.t_side();
        if t == 0 || base.n() != 2 * t {
            return Err(Error::InvalidArgument(
                "sides of the double must have equal positive size".into(),
            ));
        }
        let mut d = None;
        for v in 0..base.n() as u32 {
            let same_side = base
                .graph()
                .neighbors(v)
                .filter(|&w| base.side(w) == base.side(v))
                .count();
            match d {
                None => d = Some(same_side),
                Some(dd) if dd != same_side => {
                    return Err(Error::NotRegular(dd, same_side));
                }
                _ => {}
            }
        }
        let d = d.unwrap();
        let (tf, df) = (t as f64, d as f64);
        Ok(WeightedKMatrix {
            t,
            d,
            c,
            p: (1.0 - c) / (2.0 * tf * df),
            q: (1.0 - c) / (2.0 * tf * tf),
            base: base.clone(),
        })
    }

    /// Closed-form spectrum of `N`: `{pd+qt, pd-qt}` plus `p*lambda_i` with
    /// multiplicity 2 for every nontrivial eigenvalue of `H`. When `p` and
    /// `q` follow their defining formulas the leading two values are
    /// `(1-c)/t` and `0`.
    pub fn n_matrix_spectrum_closed_form(&self, h_spectrum: &Spectrum) -> Spectrum {
        let (p, q) = (self.p, self.q);
        let (d, t) = (self.d as f64, self.t as f64);
        let mut evs = vec![p * d + q * t, p * d - q * t];
        for &lam in h_spectrum.eigenvalues.iter().skip(1) {
            evs.push(p * lam);
            evs.push(p * lam);
        }
        evs.sort_by(|x, y| y.partial_cmp(x).unwrap());
        Spectrum::from_eigenvalues(evs, None)
    }

    /// Dense assembly of `N` (row-major, `2t x 2t`) for cross-checks.
    pub fn assemble_dense(&self) -> Vec<f64> {
        let n = self.base.n();
        let mut mat = vec![0.0f64; n * n];
        for u in 0..n as u32 {
            for v in 0..n as u32 {
                if u == v {
                    continue;
                }
                let w = if self.base.side(u) != self.base.side(v) {
                    self.q
                } else if self.base.graph().has_edge(u, v) {
                    self.p
                } else {
                    0.0
                };
                mat[u as usize * n + v as usize] = w;
            }
        }
        mat
    }

    /// Eigenvalues of the assembled dense `N`, descending.
    pub fn dense_spectrum(&self) -> Result<Spectrum> {
        let n = self.base.n();
        let evs = eigen::symmetric_eigenvalues(&self.assemble_dense(), n)?;
        Ok(Spectrum::from_eigenvalues(evs, None))
    }

    /// Minimum eigenvalue of `N + shift*I`.
    pub fn min_eigenvalue_shifted(&self, shift: f64) -> Result<f64> {
        let n = self.base.n();
        let mut mat = self.assemble_dense();
        for i in 0..n {
            mat[i * n + i] += shift;
        }
        let evs = eigen::symmetric_eigenvalues(&mat, n)?;
        Ok(*evs.last().unwrap())
    }
}

/// Maximum degree of a set of external edges `Z`; bounds every eigenvalue of
/// the 0/1 matrix of `Z` through its row sums.
pub fn t_matrix_row_bound(k: &SidedGraph, z_edges: &[(u32, u32)]) -> Result<usize> {
    let mut deg = vec![0usize; k.n()];
    for &(u, v) in z_edges {
        if !k.graph().has_edge(u, v) {
            return Err(Error::InvalidArgument(format!(
                "({u},{v}) is not an edge of K"
            )));
        }
        if k.edge_kind(u, v) != EdgeKind::External {
            return Err(Error::InvalidArgument(format!(
                "({u},{v}) is not an external edge"
            )));
        }
        deg[u as usize] += 1;
        deg[v as usize] += 1;
    }
    Ok(deg.into_iter().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{double, petersen, Graph};

    #[test]
    fn complete_graph_spectrum() {
        let s = eigen_spectrum(&Graph::complete(4)).unwrap();
        let expect = [3.0, -1.0, -1.0, -1.0];
        for (a, b) in s.eigenvalues.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9);
        }
        assert_eq!(s.degree, Some(3));
        assert!((s.lambda_max_nontrivial - 1.0).abs() < 1e-9);
    }

    #[test]
    fn c5_matches_circulant_formula() {
        let s = eigen_spectrum(&Graph::cycle(5)).unwrap();
        let mut expect: Vec<f64> = (0..5)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 5.0).cos())
            .collect();
        expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (a, b) in s.eigenvalues.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn petersen_spectrum() {
        let s = eigen_spectrum(&petersen()).unwrap();
        let expect = [3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0];
        for (a, b) in s.eigenvalues.iter().zip(expect) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
        assert!((s.lambda_max_nontrivial - 2.0).abs() < 1e-8);
    }

    #[test]
    fn mixing_on_petersen_has_no_violations() {
        let p = petersen();
        let s = eigen_spectrum(&p).unwrap();
        let report = check_mixing(&p, &s, 1000, 7).unwrap();
        assert_eq!(report.violations, 0);
        assert!(report.min_cut_margin >= -MIXING_SLACK);
        assert!(report.min_induced_margin >= -MIXING_SLACK);
    }

    #[test]
    fn mixing_empty_sets_hold_with_equality() {
        let p = petersen();
        let s = eigen_spectrum(&p).unwrap();
        let empty = BitVec::zeros(10);
        let m = mixing_margins(&p, 3, 10, s.lambda_max_nontrivial, &empty, &empty);
        assert_eq!(m.cut_margin, 0.0);
        assert_eq!(m.induced_margin, 0.0);
    }

    #[test]
    fn mixing_vacuous_when_lambda_equals_d() {
        // K_{5,5}: lambda = d = 5.
        let h = {
            let mut edges = Vec::new();
            for u in 0..5u32 {
                for v in 5..10u32 {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(10, &edges).unwrap()
        };
        let s = eigen_spectrum(&h).unwrap();
        assert!((s.lambda_max_nontrivial - 5.0).abs() < 1e-8);
        let report = check_mixing(&h, &s, 500, 3).unwrap();
        assert_eq!(report.violations, 0);
    }

    #[test]
    fn mixing_rejects_irregular_input() {
        let g = Graph::path(4);
        let s = eigen_spectrum(&g).unwrap();
        assert!(matches!(
            check_mixing(&g, &s, 10, 0),
            Err(Error::NotRegular(_, _))
        ));
    }

    #[test]
    fn weighted_k_identities() {
        let k = double(&petersen()).unwrap();
        for c in [0.1, 0.2, 0.5, 0.9] {
            let wk = WeightedKMatrix::new(&k, c).unwrap();
            let (t, d) = (wk.t as f64, wk.d as f64);
            assert!((wk.p * d + wk.q * t - (1.0 - c) / t).abs() < 1e-15);
            assert!((wk.p * d - wk.q * t).abs() < 1e-15);
        }
    }

    #[test]
    fn closed_form_matches_dense_eigensolve() {
        let h = petersen();
        let k = double(&h).unwrap();
        let hs = eigen_spectrum(&h).unwrap();
        let wk = WeightedKMatrix::new(&k, 0.2).unwrap();
        let closed = wk.n_matrix_spectrum_closed_form(&hs);
        let dense = wk.dense_spectrum().unwrap();
        assert_eq!(closed.eigenvalues.len(), dense.eigenvalues.len());
        for (a, b) in closed.eigenvalues.iter().zip(&dense.eigenvalues) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
        // Leading eigenvalues are (1-c)/t and 0 by the p,q identities.
        assert!((closed.eigenvalues[0] - 0.8 / 10.0).abs() < 1e-12);
        let zero_count = closed
            .eigenvalues
            .iter()
            .filter(|x| x.abs() < 1e-12)
            .count();
        assert!(zero_count >= 1);
    }

    #[test]
    fn c_equals_one_kills_the_matrix() {
        let k = double(&petersen()).unwrap();
        let hs = eigen_spectrum(&petersen()).unwrap();
        let wk = WeightedKMatrix::new(&k, 1.0).unwrap();
        let closed = wk.n_matrix_spectrum_closed_form(&hs);
        assert!(closed.eigenvalues.iter().all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn t_matrix_row_bound_cases() {
        let k = double(&petersen()).unwrap();
        assert_eq!(t_matrix_row_bound(&k, &[]).unwrap(), 0);

        // A perfect X-Y matching has max degree 1.
        let matching: Vec<(u32, u32)> = (0..10).map(|v| (v, v + 10)).collect();
        assert_eq!(t_matrix_row_bound(&k, &matching).unwrap(), 1);

        // Internal edge rejected.
        let (u, v) = k
            .graph()
            .edges()
            .into_iter()
            .find(|&(u, v)| k.side(u) == k.side(v))
            .unwrap();
        assert!(t_matrix_row_bound(&k, &[(u, v)]).is_err());
    }

    #[test]
    fn t_matrix_row_bound_matches_degree_scan() {
        // Random external subsets against a brute-force degree count.
        let k = double(&petersen()).unwrap();
        let mut rng = SplitMix64::new(11);
        let ext: Vec<(u32, u32)> = k
            .graph()
            .edges()
            .into_iter()
            .filter(|&(u, v)| k.side(u) != k.side(v))
            .collect();
        for _ in 0..10 {
            let z: Vec<(u32, u32)> = ext
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.3))
                .collect();
            let mut deg = std::collections::HashMap::new();
            for &(u, v) in &z {
                *deg.entry(u).or_insert(0usize) += 1;
                *deg.entry(v).or_insert(0usize) += 1;
            }
            let expect = deg.values().copied().max().unwrap_or(0);
            assert_eq!(t_matrix_row_bound(&k, &z).unwrap(), expect);
        }
    }

    #[test]
    fn positive_definiteness_kicks_in_when_premise_holds() {
        let h = petersen();
        let k = double(&h).unwrap();
        let hs = eigen_spectrum(&h).unwrap();
        let lambda = hs.lambda_max_nontrivial;
        for c in [0.3, 0.6, 0.9] {
            let wk = WeightedKMatrix::new(&k, c).unwrap();
            let premise =
                (1.0 - c) * lambda / (2.0 * 10.0 * 3.0) < 0.33 * c / 10.0;
            if premise {
                let min = wk.min_eigenvalue_shifted(0.33 * c / 10.0).unwrap();
                assert!(min > 0.0, "c={c}: min shifted eigenvalue {min}");
            }
        }
    }
}
