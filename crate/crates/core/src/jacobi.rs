//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Eigenvalues of the symmetric `n × n` row-major matrix `a`, which is
/// overwritten. Sweeps rotate every off-diagonal pair in cyclic order until
/// the off-diagonal Frobenius norm drops below `tol`.
pub fn symmetric_eigenvalues(a: &mut [f64], n: usize, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    for sweep in 0..=max_sweeps {
        let off = off_diagonal_norm(a, n);
        if off < tol {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        if sweep == max_sweeps {
            return Err(Error::Numeric(format!("Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {off:e})")));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(a, n, p, q);
            }
        }
    }
    unreachable!()
}

pub fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    libm::sqrt(2.0 * s)
}

/// Zero `a[p][q]` with a plane rotation applied on both sides.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = {
        let t = 1.0 / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let mut a = vec![2.0, 1.0, 1.0, 2.0];
        let mut ev = symmetric_eigenvalues(&mut a, 2, 1e-12, 100).unwrap();
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let n = 7;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = ((i * 31 + j * 17) % 11) as f64 - 5.0;
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let frob: f64 = a.iter().map(|x| x * x).sum();
        let ev = symmetric_eigenvalues(&mut a, n, 1e-12, 100).unwrap();
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-9);
        assert!((ev.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-8);
    }

    #[test]
    fn sweep_limit_reports_numeric_error() {
        let mut a = vec![0.0, 1.0, 1.0, 0.0];
        assert!(matches!(symmetric_eigenvalues(&mut a, 2, 1e-12, 0), Err(Error::Numeric(_))));
    }
}
