use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::{to_f64, Point, QPoly};
use crate::rootdata::{bilinear_i64, simple_root, Weight};

use super::PolyPair;

/// Residuals below this count as solving the Bethe equations.
pub const BAE_TOLERANCE: f64 = 1e-9;

/// Roots closer than this are treated as colliding.
pub const ROOT_COLLISION_GUARD: f64 = 1e-6;

/// Complex roots of a rational polynomial: companion-matrix eigenvalues refined by Newton steps.
pub fn poly_roots(p: &QPoly) -> Vec<Complex64> {
    let Some(n) = p.degree() else { return Vec::new() };
    if n == 0 {
        return Vec::new();
    }
    let lead = to_f64(&p.lead());
    let c: Vec<f64> = p.coeffs().iter().map(|q| to_f64(q) / lead).collect();
    let mut comp = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        comp[(i, n - 1)] = -c[i];
    }
    let eig = comp.complex_eigenvalues();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &a in c.iter().rev() {
            d = d * z + v;
            v = v * z + a;
        }
        (v, d)
    };
    eig.iter()
        .map(|&z0| {
            let mut z = z0;
            for _ in 0..50 {
                let (v, d) = eval(z);
                if d.norm() == 0.0 {
                    break;
                }
                let step = v / d;
                z -= step;
                if step.norm() <= 1e-17 * z.norm().max(1.0) {
                    break;
                }
            }
            z
        })
        .collect()
}

/// Largest absolute value of the Bethe equations at the numerically computed roots.
pub fn bae_residual(y: &PolyPair, weights: &[Weight], points: &[Point]) -> Result<f64> {
    if weights.len() != points.len() {
        return Err(Error::InvalidInput("weights and points differ in length".into()));
    }
    let roots = [poly_roots(&y.y1), poly_roots(&y.y2)];
    let all: Vec<(usize, Complex64)> =
        roots.iter().enumerate().flat_map(|(j, rs)| rs.iter().map(move |&t| (j + 1, t))).collect();
    for (a, &(_, s)) in all.iter().enumerate() {
        for &(_, t) in &all[a + 1..] {
            if (s - t).norm() < ROOT_COLLISION_GUARD {
                return Err(Error::Numeric(format!("roots {s} and {t} collide")));
            }
        }
        for p in points {
            if let Point::Finite(z) = p {
                if (s - to_f64(z)).norm() < ROOT_COLLISION_GUARD {
                    return Err(Error::Numeric(format!("root {s} meets the marked point {z}")));
                }
            }
        }
    }
    let mut worst: f64 = 0.0;
    for (a, &(j, t)) in all.iter().enumerate() {
        let aj = simple_root(j);
        let mut lhs = Complex64::new(0.0, 0.0);
        for (w, p) in weights.iter().zip(points) {
            if let Point::Finite(z) = p {
                lhs -= bilinear_i64(*w, aj) as f64 / (t - to_f64(z));
            }
        }
        for (b, &(k, s)) in all.iter().enumerate() {
            if a != b {
                lhs += bilinear_i64(simple_root(k), aj) as f64 / (t - s);
            }
        }
        worst = worst.max(lhs.norm());
    }
    Ok(worst)
}
