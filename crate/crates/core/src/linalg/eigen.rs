//! Dense real eigensolver: Householder reduction to Hessenberg form, Francis
//! double-shift QR for the eigenvalues, complex inverse iteration for the
//! eigenvectors.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// An eigenpair with a unit-length eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: Complex64,
    pub vector: Vec<Complex64>,
}

/// Relative residual accepted for `‖Mv − λv‖ / (‖M‖‖v‖)`.
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-8;

/// All eigenpairs of a square matrix, repeated according to algebraic
/// multiplicity.
///
/// Pairs are ordered by decreasing real part, then decreasing imaginary part.
pub fn eigen(m: &Matrix) -> Result<Vec<EigenPair>> {
    let mut values = eigenvalues(m)?;
    values.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));

    let scale = m.frobenius_norm();
    let mut pairs: Vec<EigenPair> = Vec::with_capacity(values.len());
    for value in values {
        let close: Vec<&[Complex64]> = pairs
            .iter()
            .filter(|p| (p.value - value).norm() <= 1e-6 * scale.max(1.0))
            .map(|p| p.vector.as_slice())
            .collect();
        let mut best = inverse_iteration(m, value, &close);
        if !close.is_empty() {
            // defective eigenvalues have fewer independent vectors than copies
            let plain = inverse_iteration(m, value, &[]);
            if residual(m, value, &plain) < residual(m, value, &best) {
                best = plain;
            }
        }
        let res = residual(m, value, &best);
        if res > EIGEN_RESIDUAL_TOL * scale.max(f64::MIN_POSITIVE) && res > 1e-12 {
            return Err(Error::Convergence {
                what: "eigenvector inverse iteration",
                iterations: INVERSE_ITERATIONS,
            });
        }
        pairs.push(EigenPair {
            value,
            vector: best,
        });
    }
    Ok(pairs)
}

/// Eigenvalues only, in the order the QR iteration deflates them.
pub fn eigenvalues(m: &Matrix) -> Result<Vec<Complex64>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let h = hessenberg(m);
    // 1-indexed working copy
    let mut a = vec![vec![0.0; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            a[i + 1][j + 1] = h[i][j];
        }
    }
    let (wr, wi) = hqr(&mut a, n)?;
    Ok((1..=n).map(|i| Complex64::new(wr[i], wi[i])).collect())
}

fn hessenberg(m: &Matrix) -> Vec<Vec<f64>> {
    let n = m.rows();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n).map(|i| a[i][k] * a[i][k]).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if a[k + 1][k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k + 1..n).map(|i| a[i][k]).collect();
        v[0] -= alpha;
        let vv: f64 = v.iter().map(|x| x * x).sum();
        if vv == 0.0 {
            continue;
        }
        // A ← H A
        for j in 0..n {
            let dot: f64 = (k + 1..n).map(|i| v[i - k - 1] * a[i][j]).sum();
            let f = 2.0 * dot / vv;
            for i in k + 1..n {
                a[i][j] -= f * v[i - k - 1];
            }
        }
        // A ← A H
        for row in a.iter_mut() {
            let dot: f64 = (k + 1..n).map(|j| v[j - k - 1] * row[j]).sum();
            let f = 2.0 * dot / vv;
            for j in k + 1..n {
                row[j] -= f * v[j - k - 1];
            }
        }
        for row in a.iter_mut().skip(k + 2) {
            row[k] = 0.0;
        }
    }
    a
}

fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix stored 1-indexed.
fn hqr(a: &mut [Vec<f64>], n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut wr = vec![0.0; n + 1];
    let mut wi = vec![0.0; n + 1];
    let cap = 100 * n * n;
    let mut total = 0usize;

    let mut anorm = 0.0;
    for i in 1..=n {
        for j in i.saturating_sub(1).max(1)..=n {
            anorm += a[i][j].abs();
        }
    }

    let mut nn = n;
    let mut t = 0.0;
    while nn >= 1 {
        let mut its = 0;
        loop {
            let mut l = nn;
            while l >= 2 {
                let mut s = a[l - 1][l - 1].abs() + a[l][l].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[l][l - 1].abs() + s == s {
                    a[l][l - 1] = 0.0;
                    break;
                }
                l -= 1;
            }
            let mut x = a[nn][nn];
            if l == nn {
                wr[nn] = x + t;
                wi[nn] = 0.0;
                nn -= 1;
            } else {
                let mut y = a[nn - 1][nn - 1];
                let mut w = a[nn][nn - 1] * a[nn - 1][nn];
                if l == nn - 1 {
                    let p = 0.5 * (y - x);
                    let q = p * p + w;
                    let mut z = q.abs().sqrt();
                    x += t;
                    if q >= 0.0 {
                        z = p + sign(z, p);
                        wr[nn - 1] = x + z;
                        wr[nn] = x + z;
                        if z != 0.0 {
                            wr[nn] = x - w / z;
                        }
                        wi[nn - 1] = 0.0;
                        wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = x + p;
                        wr[nn] = x + p;
                        wi[nn - 1] = -z;
                        wi[nn] = z;
                    }
                    nn -= 2;
                } else {
                    if total >= cap {
                        return Err(Error::Convergence {
                            what: "Hessenberg QR iteration",
                            iterations: total,
                        });
                    }
                    if its > 0 && its % 10 == 0 {
                        // exceptional shift
                        t += x;
                        for i in 1..=nn {
                            a[i][i] -= x;
                        }
                        let s = a[nn][nn - 1].abs() + a[nn - 1][nn - 2].abs();
                        x = 0.75 * s;
                        y = x;
                        w = -0.4375 * s * s;
                    }
                    its += 1;
                    total += 1;

                    let (mut p, mut q, mut r);
                    let mut m = nn - 2;
                    loop {
                        let z = a[m][m];
                        let rr = x - z;
                        let ss = y - z;
                        p = (rr * ss - w) / a[m + 1][m] + a[m][m + 1];
                        q = a[m + 1][m + 1] - z - rr - ss;
                        r = a[m + 2][m + 1];
                        let s = p.abs() + q.abs() + r.abs();
                        p /= s;
                        q /= s;
                        r /= s;
                        if m == l {
                            break;
                        }
                        let u = a[m][m - 1].abs() * (q.abs() + r.abs());
                        let v = p.abs() * (a[m - 1][m - 1].abs() + z.abs() + a[m + 1][m + 1].abs());
                        if u + v == v {
                            break;
                        }
                        m -= 1;
                    }
                    for i in m + 2..=nn {
                        a[i][i - 2] = 0.0;
                        if i != m + 2 {
                            a[i][i - 3] = 0.0;
                        }
                    }
                    let mut k = m;
                    while k < nn {
                        if k != m {
                            p = a[k][k - 1];
                            q = a[k + 1][k - 1];
                            r = 0.0;
                            if k != nn - 1 {
                                r = a[k + 2][k - 1];
                            }
                            x = p.abs() + q.abs() + r.abs();
                            if x != 0.0 {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        let s = sign((p * p + q * q + r * r).sqrt(), p);
                        if s != 0.0 {
                            if k == m {
                                if l != m {
                                    a[k][k - 1] = -a[k][k - 1];
                                }
                            } else {
                                a[k][k - 1] = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            let z = r / s;
                            q /= p;
                            r /= p;
                            for j in k..=nn {
                                p = a[k][j] + q * a[k + 1][j];
                                if k != nn - 1 {
                                    p += r * a[k + 2][j];
                                    a[k + 2][j] -= p * z;
                                }
                                a[k + 1][j] -= p * y;
                                a[k][j] -= p * x;
                            }
                            let mmin = nn.min(k + 3);
                            for row in a.iter_mut().take(mmin + 1).skip(l) {
                                p = x * row[k] + y * row[k + 1];
                                if k != nn - 1 {
                                    p += z * row[k + 2];
                                    row[k + 2] -= p * r;
                                }
                                row[k + 1] -= p * q;
                                row[k] -= p;
                            }
                        }
                        k += 1;
                    }
                }
            }
            if nn < 2 || l + 1 >= nn {
                break;
            }
        }
    }
    Ok((wr, wi))
}

const INVERSE_ITERATIONS: usize = 6;

fn residual(m: &Matrix, lambda: Complex64, v: &[Complex64]) -> f64 {
    let n = m.rows();
    (0..n)
        .map(|i| {
            let mv: Complex64 = m
                .row(i)
                .iter()
                .zip(v)
                .map(|(&a, &x)| x * a)
                .sum();
            (mv - lambda * v[i]).norm_sqr()
        })
        .sum::<f64>()
        .sqrt()
}

fn normalize(v: &mut [Complex64]) {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|z| *z /= norm);
    }
}

fn project_out(v: &mut [Complex64], basis: &[&[Complex64]]) {
    for b in basis {
        let dot: Complex64 = b.iter().zip(v.iter()).map(|(bi, vi)| bi.conj() * vi).sum();
        for (vi, bi) in v.iter_mut().zip(b.iter()) {
            *vi -= dot * bi;
        }
    }
}

fn inverse_iteration(m: &Matrix, lambda: Complex64, against: &[&[Complex64]]) -> Vec<Complex64> {
    let n = m.rows();
    let tiny = f64::EPSILON * m.frobenius_norm().max(f64::MIN_POSITIVE);

    // LU of (M − λI) with partial pivoting; tiny pivots are replaced so the
    // solve amplifies the eigen-direction instead of failing.
    let mut a: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = if i == j { lambda } else { Complex64::new(0.0, 0.0) };
                    Complex64::new(m[(i, j)], 0.0) - d
                })
                .collect()
        })
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm()))
            .unwrap_or(k);
        a.swap(k, p);
        perm.swap(k, p);
        if a[k][k].norm() < tiny {
            a[k][k] = Complex64::new(tiny, 0.0);
        }
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            a[i][k] = f;
            for j in k + 1..n {
                let akj = a[k][j];
                a[i][j] -= f * akj;
            }
        }
    }

    let mut v: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(1.0 + 0.1 * i as f64, 0.05 * (i % 3) as f64))
        .collect();
    project_out(&mut v, against);
    normalize(&mut v);
    for _ in 0..INVERSE_ITERATIONS {
        let mut y: Vec<Complex64> = perm.iter().map(|&p| v[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let yj = y[j];
                y[i] -= a[i][j] * yj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let yj = y[j];
                y[i] -= a[i][j] * yj;
            }
            y[i] /= a[i][i];
        }
        project_out(&mut y, against);
        normalize(&mut y);
        if y.iter().all(|z| z.is_finite()) {
            v = y;
        } else {
            break;
        }
    }

    // fix the phase: largest component real and positive
    if let Some(big) = v.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())) {
        if big.norm() > 0.0 {
            let phase = big.conj() / big.norm();
            v.iter_mut().for_each(|z| *z *= phase);
        }
    }
    // a real eigenvalue leaves only round-off in the imaginary parts
    if lambda.im == 0.0 && v.iter().all(|z| z.im.abs() <= 1e-12) {
        v.iter_mut().for_each(|z| z.im = 0.0);
        normalize(&mut v);
    }
    v
}
