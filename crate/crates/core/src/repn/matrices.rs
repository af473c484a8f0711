use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{frac, Field, Matrix, QSqrt2, Rational};
use crate::rootdata::{casimir_value, Weight};

use super::characters::tensor_decompose;

pub type Mat7 = Matrix<QSqrt2>;

/// Matrix unit `E_ij` of size 7, indices from 1.
pub fn unit(i: usize, j: usize) -> Mat7 {
    Matrix::unit(7, i - 1, j - 1)
}

fn s2() -> QSqrt2 {
    QSqrt2::sqrt2()
}

fn sum(terms: &[(QSqrt2, Mat7)]) -> Mat7 {
    terms.iter().fold(Matrix::zeros(7, 7), |acc, (c, m)| &acc + &m.scale(c))
}

fn one() -> QSqrt2 {
    QSqrt2::one()
}

/// Chevalley generators `(e1, e2, f1, f2, h1, h2)` of the seven-dimensional representation.
#[derive(Clone, Debug)]
pub struct Chevalley {
    pub e: [Mat7; 2],
    pub f: [Mat7; 2],
    pub h: [Mat7; 2],
}

pub fn chevalley() -> Chevalley {
    let e1 = &unit(2, 3) + &unit(5, 6);
    let f1 = &unit(3, 2) + &unit(6, 5);
    let e2 = sum(&[(one(), unit(1, 2)), (s2(), unit(3, 4)), (s2(), unit(4, 5)), (one(), unit(6, 7))]);
    let f2 = sum(&[(one(), unit(2, 1)), (s2(), unit(4, 3)), (s2(), unit(5, 4)), (one(), unit(7, 6))]);
    let h1 = e1.bracket(&f1);
    let h2 = e2.bracket(&f2);
    Chevalley { e: [e1, e2], f: [f1, f2], h: [h1, h2] }
}

/// Weights of the standard basis vectors `v1..v7`.
pub const STANDARD_WEIGHTS: [Weight; 7] =
    [Weight(0, 1), Weight(1, -1), Weight(-1, 2), Weight(0, 0), Weight(1, -2), Weight(-1, 1), Weight(0, -1)];

/// Checks the Chevalley-Serre relations for the Cartan matrix of G2.
pub fn check_serre_relations(c: &Chevalley) -> Result<()> {
    let cartan = crate::rootdata::CARTAN;
    let fail = |what: String| Err(Error::Consistency(what));
    for i in 0..2 {
        for j in 0..2 {
            if !c.h[i].bracket(&c.h[j]).is_zero() {
                return fail(format!("[h{},h{}] != 0", i + 1, j + 1));
            }
            let want_ef = if i == j { c.h[i].clone() } else { Matrix::zeros(7, 7) };
            if c.e[i].bracket(&c.f[j]) != want_ef {
                return fail(format!("[e{},f{}] wrong", i + 1, j + 1));
            }
            // [h_i, e_j] = a_ij e_j with a_ij = <alpha_j, coroot_i>
            let a = QSqrt2::from_i64(cartan[i][j]);
            if c.h[i].bracket(&c.e[j]) != c.e[j].scale(&a) {
                return fail(format!("[h{},e{}] wrong", i + 1, j + 1));
            }
            if c.h[i].bracket(&c.f[j]) != c.f[j].scale(&-a) {
                return fail(format!("[h{},f{}] wrong", i + 1, j + 1));
            }
            if i != j {
                let n = (1 - cartan[i][j]) as usize;
                let mut xe = c.e[j].clone();
                let mut xf = c.f[j].clone();
                for _ in 0..n {
                    xe = c.e[i].bracket(&xe);
                    xf = c.f[i].bracket(&xf);
                }
                if !xe.is_zero() || !xf.is_zero() {
                    return fail(format!("Serre relation for ({},{}) fails", i + 1, j + 1));
                }
            }
        }
    }
    Ok(())
}

/// A basis of the image of the Lie algebra, obtained by closing the generators under brackets.
pub fn lie_algebra_basis(c: &Chevalley) -> Vec<Mat7> {
    let mut basis: Vec<Mat7> = Vec::new();
    let add = |m: Mat7, basis: &mut Vec<Mat7>| -> bool {
        if m.is_zero() {
            return false;
        }
        let mut rows: Vec<Vec<QSqrt2>> = basis.iter().map(|b| b.to_vec()).collect();
        rows.push(m.to_vec());
        if Matrix::from_rows(rows).rank() > basis.len() {
            basis.push(m);
            true
        } else {
            false
        }
    };
    for g in c.e.iter().chain(&c.f) {
        add(g.clone(), &mut basis);
    }
    loop {
        let n = basis.len();
        let mut grew = false;
        for i in 0..n {
            for j in i + 1..n {
                let br = basis[i].bracket(&basis[j]);
                grew |= add(br, &mut basis);
            }
        }
        if !grew {
            break;
        }
    }
    basis
}

/// Normalized trace form `(x, y) = tr(x y) / 6`.
pub fn trace_form(x: &Mat7, y: &Mat7) -> QSqrt2 {
    (x * y).trace() * &QSqrt2::from(frac(1, 6))
}

/// The 7x7 table of matrices `G_ij`, indices from 1.
#[derive(Clone, Debug, PartialEq)]
pub struct GTable {
    entries: Vec<Mat7>,
}

impl GTable {
    pub fn get(&self, i: usize, j: usize) -> &Mat7 {
        &self.entries[(i - 1) * 7 + (j - 1)]
    }

    fn set(&mut self, i: usize, j: usize, m: Mat7) {
        self.entries[(i - 1) * 7 + (j - 1)] = m;
    }
}

fn sign(i: usize, j: usize) -> i64 {
    if (i + j) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `F_ij = E_ij - (-1)^(i+j) E_{8-j,8-i}`.
pub fn f_matrix(i: usize, j: usize) -> Mat7 {
    &unit(i, j) - &unit(8 - j, 8 - i).scale(&QSqrt2::from_i64(sign(i, j)))
}

/// Table built from its closed-form description: explicit entries on the
/// `{2,3,4,7}` block, six proportionality rules and the antisymmetry
/// `G_ij + (-1)^(i+j) G_{8-j,8-i} = 0`.
pub fn g_table_closed_form() -> GTable {
    let f = f_matrix;
    let q = QSqrt2::from_i64;
    let r2 = s2();
    let lin = |terms: &[(QSqrt2, Mat7)]| sum(terms);
    let mut g = GTable { entries: vec![Matrix::zeros(7, 7); 49] };
    for &i in &[2, 3, 7] {
        for &j in &[2, 3, 7] {
            if i != j {
                g.set(i, j, f(i, j).scale(&q(3)));
            }
        }
    }
    g.set(2, 2, lin(&[(q(2), f(2, 2)), (q(-1), f(3, 3)), (q(-1), f(7, 7))]));
    g.set(3, 3, lin(&[(q(2), f(3, 3)), (q(-1), f(2, 2)), (q(-1), f(7, 7))]));
    g.set(7, 7, lin(&[(q(2), f(7, 7)), (q(-1), f(2, 2)), (q(-1), f(3, 3))]));
    g.set(2, 4, lin(&[(q(2), f(2, 4)), (-r2.clone(), f(1, 3))]));
    g.set(3, 4, lin(&[(q(2), f(3, 4)), (r2.clone(), f(6, 7))]));
    g.set(7, 4, lin(&[(q(2), f(7, 4)), (-r2.clone(), f(5, 2))]));
    g.set(4, 2, lin(&[(q(2), f(4, 2)), (-r2.clone(), f(3, 1))]));
    g.set(4, 3, lin(&[(q(2), f(4, 3)), (r2.clone(), f(7, 6))]));
    g.set(4, 7, lin(&[(q(2), f(4, 7)), (-r2.clone(), f(2, 5))]));
    // Proportionality: G24 = -r2 G13, G34 = r2 G67, G74 = -r2 G52,
    //                  G42 = -r2 G31, G43 = r2 G76, G47 = -r2 G25.
    let inv = QSqrt2::one() / &r2;
    for &((a, b), (c, d), s) in &[
        ((2, 4), (1, 3), -1),
        ((3, 4), (6, 7), 1),
        ((7, 4), (5, 2), -1),
        ((4, 2), (3, 1), -1),
        ((4, 3), (7, 6), 1),
        ((4, 7), (2, 5), -1),
    ] {
        let m = g.get(a, b).scale(&(inv.clone() * &q(s)));
        g.set(c, d, m);
    }
    let known: Vec<(usize, usize)> =
        (1..=7).flat_map(|i| (1..=7).map(move |j| (i, j))).filter(|&(i, j)| !g.get(i, j).is_zero()).collect();
    for (i, j) in known {
        let (pi, pj) = (8 - j, 8 - i);
        if g.get(pi, pj).is_zero() {
            let m = g.get(i, j).scale(&q(-sign(i, j)));
            g.set(pi, pj, m);
        }
    }
    g
}

/// Table from the definition `G_ij = sum_k pi(b_k)_{ji} pi(b^k)`, with `b^k`
/// the dual basis for the normalized trace form.
pub fn g_table_from_definition() -> Result<GTable> {
    let c = chevalley();
    let basis = lie_algebra_basis(&c);
    if basis.len() != 14 {
        return Err(Error::Dimension { expected: 14, found: basis.len() });
    }
    let n = basis.len();
    let mut gram = Matrix::<QSqrt2>::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            gram[(a, b)] = trace_form(&basis[a], &basis[b]);
        }
    }
    let ginv = gram.inverse().ok_or_else(|| Error::Consistency("trace form is degenerate".into()))?;
    let dual: Vec<Mat7> = (0..n)
        .map(|k| (0..n).fold(Matrix::zeros(7, 7), |acc, l| &acc + &basis[l].scale(&ginv[(k, l)])))
        .collect();
    let mut g = GTable { entries: vec![Matrix::zeros(7, 7); 49] };
    for i in 1..=7 {
        for j in 1..=7 {
            let m = (0..n).fold(Matrix::zeros(7, 7), |acc, k| {
                let coef = &basis[k][(j - 1, i - 1)];
                if coef.is_zero() {
                    acc
                } else {
                    &acc + &dual[k].scale(coef)
                }
            });
            g.set(i, j, m);
        }
    }
    Ok(g)
}

/// Closed-form table, validated against the definition and the structural relations.
pub fn build_g() -> Result<GTable> {
    let g = g_table_closed_form();
    check_g_relations(&g)?;
    let reference = g_table_from_definition()?;
    if g != reference {
        let bad: Vec<String> = (1..=7)
            .flat_map(|i| (1..=7).map(move |j| (i, j)))
            .filter(|&(i, j)| g.get(i, j) != reference.get(i, j))
            .map(|(i, j)| format!("G{i}{j}"))
            .collect();
        return Err(Error::Consistency(format!("closed-form G differs from definition at {}", bad.join(", "))));
    }
    Ok(g)
}

/// Antisymmetry, vanishing antidiagonal and the six proportionality relations.
pub fn check_g_relations(g: &GTable) -> Result<()> {
    let q = QSqrt2::from_i64;
    for i in 1..=7 {
        for j in 1..=7 {
            let s = g.get(i, j) + &g.get(8 - j, 8 - i).scale(&q(sign(i, j)));
            if !s.is_zero() {
                return Err(Error::Consistency(format!("antisymmetry fails for G{i}{j}")));
            }
            if i + j == 8 && !g.get(i, j).is_zero() {
                return Err(Error::Consistency(format!("G{i}{j} should vanish")));
            }
        }
    }
    let r2 = s2();
    for &((a, b), (c, d), s) in &[
        ((2, 4), (1, 3), -1),
        ((3, 4), (6, 7), 1),
        ((7, 4), (5, 2), -1),
        ((4, 2), (3, 1), -1),
        ((4, 3), (7, 6), 1),
        ((4, 7), (2, 5), -1),
    ] {
        if *g.get(a, b) != g.get(c, d).scale(&(r2.clone() * &q(s))) {
            return Err(Error::Consistency(format!("proportionality G{a}{b} ~ G{c}{d} fails")));
        }
    }
    Ok(())
}

/// `Omega = (1/6) sum_ij G_ji (x) G_ij` acting on `V (x) V`.
pub fn casimir_on_pair(g: &GTable) -> Matrix<QSqrt2> {
    let sixth = QSqrt2::from(frac(1, 6));
    let mut omega = Matrix::zeros(49, 49);
    for i in 1..=7 {
        for j in 1..=7 {
            let (a, b) = (g.get(j, i), g.get(i, j));
            if a.is_zero() || b.is_zero() {
                continue;
            }
            omega = &omega + &a.kron(b);
        }
    }
    omega.scale(&sixth)
}

/// Dimension of the eigenspace of `m` for the rational eigenvalue `mu`.
pub fn eigenspace_dim(m: &Matrix<QSqrt2>, mu: &Rational) -> usize {
    let shifted = m - &Matrix::identity(m.rows()).scale(&QSqrt2::from(mu.clone()));
    m.rows() - shifted.rank()
}

/// Eigenvalue of `Omega` on the summand `V_mu` of `V_w2 (x) V_w2`.
pub fn predicted_pair_eigenvalue(mu: Weight) -> Rational {
    frac(casimir_value(mu) - 2 * casimir_value(Weight::OMEGA2), 2)
}

/// Exact eigen-decomposition of `Omega` on `V_w2 (x) V_w2`: summand, predicted eigenvalue
/// and eigenspace dimension. Fails unless the dimensions fill all 49 dimensions.
pub fn casimir_spectrum(g: &GTable) -> Result<BTreeMap<Weight, (Rational, usize)>> {
    let omega = casimir_on_pair(g);
    let summands = tensor_decompose(Weight::OMEGA2, Weight::OMEGA2)?;
    let mut out = BTreeMap::new();
    let mut total = 0;
    for &mu in summands.keys() {
        let ev = predicted_pair_eigenvalue(mu);
        let d = eigenspace_dim(&omega, &ev);
        total += d;
        out.insert(mu, (ev, d));
    }
    if total != 49 {
        return Err(Error::Dimension { expected: 49, found: total });
    }
    if omega.trace() != QSqrt2::zero() {
        return Err(Error::Consistency("Omega is not traceless".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_satisfy_relations() {
        let c = chevalley();
        check_serre_relations(&c).unwrap();
        // h matrices are diagonal with the expected weights
        for (k, w) in STANDARD_WEIGHTS.iter().enumerate() {
            assert_eq!(c.h[0][(k, k)], QSqrt2::from_i64(w.0));
            assert_eq!(c.h[1][(k, k)], QSqrt2::from_i64(w.1));
        }
    }

    #[test]
    fn algebra_has_dimension_fourteen() {
        assert_eq!(lie_algebra_basis(&chevalley()).len(), 14);
    }

    #[test]
    fn g_entries_lie_in_algebra() {
        let basis = lie_algebra_basis(&chevalley());
        let g = g_table_closed_form();
        let rows: Vec<Vec<QSqrt2>> = basis.iter().map(|b| b.to_vec()).collect();
        for i in 1..=7 {
            for j in 1..=7 {
                let mut r = rows.clone();
                r.push(g.get(i, j).to_vec());
                assert_eq!(Matrix::from_rows(r).rank(), 14, "G{i}{j} outside the algebra");
            }
        }
    }

    #[test]
    fn closed_form_matches_definition() {
        build_g().unwrap();
    }

    #[test]
    fn casimir_on_pair_spectrum() {
        let g = build_g().unwrap();
        let spec = casimir_spectrum(&g).unwrap();
        let got: Vec<(Weight, i64, usize)> =
            spec.iter().map(|(w, (ev, d))| (*w, crate::exact::to_i64(ev).unwrap(), *d)).collect();
        assert_eq!(
            got,
            vec![(Weight(0, 0), -12, 1), (Weight(0, 1), -6, 7), (Weight(0, 2), 2, 27), (Weight(1, 0), 0, 14)]
        );
    }
}
