//! Dense symmetric eigensolver: Householder tridiagonalization followed by
//! implicit-shift QL, eigenvalues only. Deterministic, no external
//! dependencies; adequate for every matrix this crate meets (n <= 4096).

use crate::error::{Error, Result};

const MAX_QL_SWEEPS: usize = 64;

/// Eigenvalues of a symmetric matrix (row-major, `n x n`), descending.
/// Symmetry is the caller's responsibility; only the lower triangle is read.
pub fn symmetric_eigenvalues(mat: &[f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(mat.len(), n * n);
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a: Vec<f64> = mat.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut a, n, &mut d, &mut e);
    ql_implicit(&mut d, &mut e)?;
    d.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(d)
}

/// Householder reduction; on return `d` holds the diagonal and `e[1..]` the
/// subdiagonal of the tridiagonal form.
fn tridiagonalize(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[i * n + k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j * n + k] * a[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g / h;
                    f_acc += e[j] * a[i * n + j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = a[i * n + i];
    }
}

/// Implicit-shift QL on a tridiagonal `(d, e)`; `e[0]` unused on entry.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_SWEEPS {
                return Err(Error::EigenNoConvergence(l));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                f = (d[i] - g) * s + 2.0 * c * b;
                p = s * f;
                d[i + 1] = g + p;
                g = c * f - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn moments_check(mat: &[f64], n: usize, evs: &[f64]) {
        // Trace identities are an oracle independent of the QL path.
        let trace: f64 = (0..n).map(|i| mat[i * n + i]).sum();
        let frob2: f64 = mat.iter().map(|x| x * x).sum();
        let mut tr3 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += mat[i * n + k] * mat[k * n + j];
                }
                tr3 += acc * mat[j * n + i];
            }
        }
        let s1: f64 = evs.iter().sum();
        let s2: f64 = evs.iter().map(|x| x * x).sum();
        let s3: f64 = evs.iter().map(|x| x * x * x).sum();
        let scale = 1.0 + frob2;
        assert!((s1 - trace).abs() < 1e-8 * scale, "{s1} vs {trace}");
        assert!((s2 - frob2).abs() < 1e-8 * scale);
        assert!((s3 - tr3).abs() < 1e-7 * scale.powf(1.5));
    }

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let n = 5;
        let mut mat = vec![0.0; n * n];
        for (i, v) in [4.0, -1.0, 3.5, 0.0, 2.0].into_iter().enumerate() {
            mat[i * n + i] = v;
        }
        let evs = symmetric_eigenvalues(&mat, n).unwrap();
        assert_eq!(evs, vec![4.0, 3.5, 2.0, 0.0, -1.0]);
    }

    #[test]
    fn random_symmetric_moment_identities() {
        let mut rng = SplitMix64::new(12);
        for n in [2usize, 3, 8, 17, 33] {
            let mut mat = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..=i {
                    let v = rng.next_f64() * 2.0 - 1.0;
                    mat[i * n + j] = v;
                    mat[j * n + i] = v;
                }
            }
            let evs = symmetric_eigenvalues(&mat, n).unwrap();
            moments_check(&mat, n, &evs);
        }
    }

    #[test]
    fn reproducible_to_the_bit() {
        let mut rng = SplitMix64::new(5);
        let n = 24;
        let mut mat = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = rng.next_f64();
                mat[i * n + j] = v;
                mat[j * n + i] = v;
            }
        }
        let a = symmetric_eigenvalues(&mat, n).unwrap();
        let b = symmetric_eigenvalues(&mat, n).unwrap();
        assert_eq!(a, b);
    }
}
