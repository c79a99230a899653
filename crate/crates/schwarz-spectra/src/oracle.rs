//! Numerical ground truth: polynomial roots by a simultaneous-iteration
//! solver with Newton polishing, matrix eigenvalues by a dense eigensolver
//! (an independent second witness), and half-plane bookkeeping.
//!
//! Everything here is deterministic: initial root guesses come from a fixed
//! configuration, not from a random source, so test runs are repeatable.

use nalgebra::DMatrix;
use num::complex::Complex;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::schwarz::SchwarzMatrix;
use crate::spectrum::Spectrum;

pub type C64 = Complex<f64>;

/// Roots of a polynomial with their residuals `|p(root)|`.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub roots: Vec<C64>,
    pub residuals: Vec<f64>,
}

impl RootSet {
    pub fn spectrum(&self) -> Spectrum<f64> {
        Spectrum::new(self.roots.clone())
    }
}

const ABERTH_MAX_ITERS: usize = 200;
const NEWTON_MAX_STEPS: usize = 200;

fn eval_and_derivative(coeffs: &[C64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of `p`, residual-bounded and polished. Deterministic:
/// the iteration starts from a fixed ring of points.
pub fn roots<T: Scalar>(p: &Poly<T>) -> Result<RootSet> {
    let p = p.require_monic()?;
    if p.degree() == 0 {
        return Err(Error::InvalidInput("roots need degree ≥ 1".into()));
    }
    let mut coeffs: Vec<C64> = p
        .coeffs()
        .iter()
        .map(|c| C64::new(c.approx(), 0.0))
        .collect();

    // peel off exact zero roots so the iteration never stalls at the origin
    let mut zero_roots = 0usize;
    while coeffs.len() > 1 && coeffs.last().unwrap().norm() == 0.0 {
        coeffs.pop();
        zero_roots += 1;
    }

    let n = coeffs.len() - 1;
    let mut found: Vec<C64> = Vec::with_capacity(n + zero_roots);
    if n > 0 {
        // initial guesses on a circle of the Cauchy radius, rotated off the
        // real axis so symmetric configurations do not lock the iteration
        let radius = 1.0
            + coeffs
                .iter()
                .skip(1)
                .map(|c| c.norm())
                .fold(0.0f64, f64::max);
        let mut z: Vec<C64> = (0..n)
            .map(|j| {
                let angle = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64) + 0.4;
                C64::new(radius * angle.cos(), radius * angle.sin())
            })
            .collect();

        for _ in 0..ABERTH_MAX_ITERS {
            let mut max_step = 0.0f64;
            for j in 0..n {
                let (pv, dv) = eval_and_derivative(&coeffs, z[j]);
                if pv.norm() == 0.0 {
                    continue;
                }
                let w = if dv.norm() == 0.0 {
                    C64::new(1e-12, 1e-12)
                } else {
                    pv / dv
                };
                let mut repulsion = C64::new(0.0, 0.0);
                for k in 0..n {
                    if k != j {
                        let diff = z[j] - z[k];
                        if diff.norm() > 0.0 {
                            repulsion += C64::new(1.0, 0.0) / diff;
                        }
                    }
                }
                let denom = C64::new(1.0, 0.0) - w * repulsion;
                let step = if denom.norm() == 0.0 { w } else { w / denom };
                z[j] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[j].norm()));
            }
            if max_step < 1e-14 {
                break;
            }
        }
        // even if the budget ran out, polishing may rescue the roots;
        // the residual gate below decides

        // Newton polishing, a few steps per root
        for zj in z.iter_mut() {
            for _ in 0..NEWTON_MAX_STEPS {
                let (pv, dv) = eval_and_derivative(&coeffs, *zj);
                if dv.norm() == 0.0 || pv.norm() == 0.0 {
                    break;
                }
                let step = pv / dv;
                *zj -= step;
                if step.norm() <= 1e-16 * (1.0 + zj.norm()) {
                    break;
                }
            }
        }
        found.extend(z);
    }
    found.extend(std::iter::repeat(C64::new(0.0, 0.0)).take(zero_roots));

    let full_coeffs: Vec<C64> = p
        .coeffs()
        .iter()
        .map(|c| C64::new(c.approx(), 0.0))
        .collect();
    let norm_inf = full_coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let residuals: Vec<f64> = found
        .iter()
        .map(|z| eval_and_derivative(&full_coeffs, *z).0.norm())
        .collect();
    let deg = p.degree() as i32;
    for (z, r) in found.iter().zip(&residuals) {
        let bound = 1e-8 * (1.0 + norm_inf * (1.0 + z.norm()).powi(deg));
        if *r > bound {
            return Err(Error::ConvergenceFailure);
        }
    }

    // Vieta sanity: Σ roots = -a1, Π roots = (-1)^n an
    let sum: C64 = found.iter().sum();
    let prod: C64 = found.iter().product();
    let a1 = p.a(1).approx();
    let an = p.a(p.degree()).approx();
    let scale = 1.0 + a1.abs().max(an.abs());
    let prod_expect = if p.degree() % 2 == 0 { an } else { -an };
    if (sum.re + a1).abs() > 1e-8 * scale || (prod.re - prod_expect).abs() > 1e-8 * scale {
        return Err(Error::ConvergenceFailure);
    }

    Ok(RootSet {
        roots: found,
        residuals,
    })
}

/// Eigenvalues of the Schwarz matrix by a dense eigensolver on the explicit
/// tridiagonal-with-corner matrix. Independent of the charpoly route, so the
/// two can witness each other.
pub fn eigenvalues<T: Scalar>(j: &SchwarzMatrix<T>) -> Result<RootSet> {
    let dense = j.dense_approx();
    let n = j.n();
    let m = DMatrix::from_fn(n, n, |r, c| dense[r][c]);
    let eigs = m.complex_eigenvalues();
    let roots: Vec<C64> = eigs.iter().map(|e| C64::new(e.re, e.im)).collect();
    let coeffs: Vec<C64> = crate::schwarz::charpoly(j)
        .coeffs()
        .iter()
        .map(|c| C64::new(c.approx(), 0.0))
        .collect();
    let residuals = roots
        .iter()
        .map(|z| eval_and_derivative(&coeffs, *z).0.norm())
        .collect();
    Ok(RootSet { roots, residuals })
}

/// Partition of a root set by the sign of the real part; roots with
/// `|Re| ≤ eps` land in `boundary` and callers treat a nonzero boundary
/// count as a resample signal.
pub fn half_plane_counts(r: &RootSet, eps: f64) -> (usize, usize, usize) {
    let mut lhp = 0;
    let mut rhp = 0;
    let mut boundary = 0;
    for z in &r.roots {
        if z.re.abs() <= eps {
            boundary += 1;
        } else if z.re < 0.0 {
            lhp += 1;
        } else {
            rhp += 1;
        }
    }
    (lhp, rhp, boundary)
}

/// Greedy nearest-neighbour matching between two root multisets; returns the
/// largest pairwise distance of the matching, or `None` when sizes differ.
pub fn match_distance(a: &[C64], b: &[C64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut remaining: Vec<C64> = b.to_vec();
    let mut worst = 0.0f64;
    for z in a {
        let (idx, dist) = remaining
            .iter()
            .enumerate()
            .map(|(i, w)| (i, (z - w).norm()))
            .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())?;
        worst = worst.max(dist);
        remaining.swap_remove(idx);
    }
    Some(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(coeffs)
    }

    fn sorted_reals(r: &RootSet) -> Vec<f64> {
        let mut v: Vec<f64> = r.roots.iter().map(|z| z.re).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn worked_cubic_roots() {
        let r = roots(&p(&[1, 6, 11, 6])).unwrap();
        let v = sorted_reals(&r);
        for (got, want) in v.iter().zip([-3.0, -2.0, -1.0]) {
            assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        }
        assert!(r.roots.iter().all(|z| z.im.abs() < 1e-9));
    }

    #[test]
    fn imaginary_pair() {
        let r = roots(&p(&[1, 0, 1])).unwrap();
        let dist = match_distance(&r.roots, &[C64::new(0.0, 1.0), C64::new(0.0, -1.0)]).unwrap();
        assert!(dist < 1e-9);
    }

    #[test]
    fn mixed_cubic_matches_vieta() {
        // z^3 - z^2 + 1: one real near -0.754878, pair near 0.877439 ± 0.744862i
        let r = roots(&p(&[1, -1, 0, 1])).unwrap();
        let real = r
            .roots
            .iter()
            .find(|z| z.im.abs() < 1e-9)
            .expect("one real root");
        assert!((real.re + 0.754878).abs() < 1e-5);
        let pair: Vec<&C64> = r.roots.iter().filter(|z| z.im.abs() >= 1e-9).collect();
        assert_eq!(pair.len(), 2);
        assert!((pair[0].re - 0.877439).abs() < 1e-5);
        assert!((pair[0].im.abs() - 0.744862).abs() < 1e-5);
    }

    #[test]
    fn zero_roots_are_peeled() {
        // z^3 + 3z^2 + 2z = z(z+1)(z+2)
        let r = roots(&p(&[1, 3, 2, 0])).unwrap();
        let v = sorted_reals(&r);
        for (got, want) in v.iter().zip([-2.0, -1.0, 0.0]) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn eigenvalues_worked_examples() {
        let j = SchwarzMatrix::<Rat>::from_ints(&[-2, -2, -3]).unwrap();
        let e = eigenvalues(&j).unwrap();
        let want = [C64::new(1.0, 0.0), C64::new(-2.0, 0.0), C64::new(3.0, 0.0)];
        assert!(match_distance(&e.roots, &want).unwrap() < 1e-9);

        let j = SchwarzMatrix::<Rat>::from_ints(&[5]).unwrap();
        let e = eigenvalues(&j).unwrap();
        assert!((e.roots[0].re + 5.0).abs() < 1e-12);

        let j = SchwarzMatrix::<Rat>::from_ints(&[2, 2]).unwrap();
        let e = eigenvalues(&j).unwrap();
        let want = [C64::new(-1.0, 1.0), C64::new(-1.0, -1.0)];
        assert!(match_distance(&e.roots, &want).unwrap() < 1e-9);
    }

    #[test]
    fn dual_witness_agreement() {
        let j = SchwarzMatrix::<Rat>::from_ints(&[3, -1, 4, -2, 6]).unwrap();
        let from_matrix = eigenvalues(&j).unwrap();
        let from_poly = roots(&crate::schwarz::charpoly(&j)).unwrap();
        assert!(match_distance(&from_matrix.roots, &from_poly.roots).unwrap() < 1e-6);
    }

    #[test]
    fn half_plane_partition() {
        let r = RootSet {
            roots: vec![C64::new(1.0, 0.0), C64::new(-2.0, 0.0), C64::new(3.0, 0.0)],
            residuals: vec![0.0; 3],
        };
        assert_eq!(half_plane_counts(&r, 1e-9), (1, 2, 0));
        let r = RootSet {
            roots: vec![C64::new(0.0, 1.0), C64::new(0.0, -1.0)],
            residuals: vec![0.0; 2],
        };
        assert_eq!(half_plane_counts(&r, 1e-9), (0, 0, 2));
    }
}
