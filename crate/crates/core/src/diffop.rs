//! Monic linear differential operators with rational-function coefficients:
//! the seventh-order operator attached to a Bethe solution, conjugation,
//! polynomial kernels and local exponents.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bethe::{appendix_solution, build_calt, BetheData, PolyPair};
use crate::error::{Error, Result};
use crate::exact::{binomial, frac, rat, to_f64, Matrix, Point, QPoly, RatFunc, Rational};
use crate::rootdata::{casimir_value, Weight};

pub type QRatFunc = RatFunc<Rational>;

/// Monic operator `d^n + sum_{k<n} a_k d^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiffOp {
    /// `coeffs[k]` multiplies `d^k`.
    coeffs: Vec<QRatFunc>,
}

impl DiffOp {
    /// `d^order`.
    pub fn derivative_power(order: usize) -> Self {
        DiffOp { coeffs: vec![QRatFunc::zero(); order] }
    }

    /// From lower coefficients, `coeffs[k]` multiplying `d^k`.
    pub fn from_coeffs(coeffs: Vec<QRatFunc>) -> Self {
        DiffOp { coeffs }
    }

    /// `d - g`.
    pub fn first_order(g: QRatFunc) -> Self {
        DiffOp { coeffs: vec![-g] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `d^k` (one for `k == order`, zero above).
    pub fn coeff(&self, k: usize) -> QRatFunc {
        match k.cmp(&self.order()) {
            std::cmp::Ordering::Less => self.coeffs[k].clone(),
            std::cmp::Ordering::Equal => QRatFunc::one(),
            std::cmp::Ordering::Greater => QRatFunc::zero(),
        }
    }

    /// Coefficients from `d^{order-1}` down to `d^0`.
    pub fn coefficients_descending(&self) -> Vec<QRatFunc> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// `(d - g) * self`.
    pub fn left_mul_first_order(&self, g: &QRatFunc) -> Self {
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                let a_k = self.coeff(k);
                let below = if k == 0 { QRatFunc::zero() } else { self.coeff(k - 1) };
                &(&below + &a_k.derivative()) - &(g * &a_k)
            })
            .collect();
        DiffOp { coeffs }
    }

    /// Apply to a rational function.
    pub fn apply(&self, u: &QRatFunc) -> QRatFunc {
        let mut acc = QRatFunc::zero();
        let mut d = u.clone();
        for k in 0..=self.order() {
            acc = &acc + &(&self.coeff(k) * &d);
            d = d.derivative();
        }
        acc
    }

    pub fn is_derivative_power(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{}", self.order())?;
        for k in (0..self.order()).rev() {
            if !self.coeffs[k].is_zero() {
                write!(f, " + [{}] d^{}", self.coeffs[k], k)?;
            }
        }
        Ok(())
    }
}

fn lnd(g: &QRatFunc) -> QRatFunc {
    g.log_derivative()
}

/// The seven functions whose logarithmic derivatives define the factors of `D_y`,
/// leftmost factor first.
pub fn dy_factor_functions(y: &PolyPair, t1: &QPoly, t2: &QPoly) -> [QRatFunc; 7] {
    let r = |p: &QPoly| QRatFunc::from_poly(p.clone());
    let (y1, y2, t1, t2) = (r(&y.y1), r(&y.y2), r(t1), r(t2));
    let m = |parts: &[(&QRatFunc, i32)]| parts.iter().fold(QRatFunc::one(), |acc, (g, e)| &acc * &g.pow(*e));
    [
        m(&[(&t1, 4), (&t2, 2), (&y1, -1)]),
        m(&[(&t1, 3), (&t2, 2), (&y1, 1), (&y2, -1)]),
        m(&[(&t1, 3), (&t2, 1), (&y2, 1), (&y1, -2)]),
        m(&[(&t1, 2), (&t2, 1)]),
        m(&[(&t1, 1), (&t2, 1), (&y1, 2), (&y2, -1)]),
        m(&[(&t1, 1), (&y2, 1), (&y1, -1)]),
        m(&[(&y1, 1)]),
    ]
}

/// `D_y = (d - ln'(g_1)) ... (d - ln'(g_7))` for the factor functions above.
pub fn build_dy(y: &PolyPair, t1: &QPoly, t2: &QPoly) -> Result<DiffOp> {
    if y.y1.is_zero() || y.y2.is_zero() || t1.is_zero() || t2.is_zero() {
        return Err(Error::InvalidInput("build_dy needs nonzero polynomials".into()));
    }
    let gs = dy_factor_functions(y, t1, t2);
    let mut op = DiffOp::first_order(lnd(&gs[6]));
    for g in gs[..6].iter().rev() {
        op = op.left_mul_first_order(&lnd(g));
    }
    Ok(op)
}

/// `f^{-1} D f`.
pub fn conjugate(d: &DiffOp, f: &QRatFunc) -> Result<DiffOp> {
    if f.is_zero() {
        return Err(Error::InvalidInput("conjugation by zero".into()));
    }
    let n = d.order();
    let lf = f.log_derivative();
    // ratios[m] = f^{(m)} / f
    let mut ratios = vec![QRatFunc::one()];
    for m in 0..n {
        let next = &ratios[m].derivative() + &(&ratios[m] * &lf);
        ratios.push(next);
    }
    let mut coeffs = vec![QRatFunc::zero(); n];
    for k in 0..=n {
        let a_k = d.coeff(k);
        if a_k.is_zero() {
            continue;
        }
        for (j, c) in coeffs.iter_mut().enumerate().take(k.min(n - 1) + 1) {
            if j == n {
                continue;
            }
            let b = binomial(k, j);
            let term = (&a_k * &ratios[k - j]).scale(&b);
            *c = &*c + &term;
        }
    }
    Ok(DiffOp { coeffs })
}

/// Multiply through by a common denominator: returns polynomials `p_0..p_n` with
/// `q * D = sum p_k d^k`.
fn cleared(d: &DiffOp) -> Vec<QPoly> {
    let mut den = QPoly::one();
    for c in &d.coeffs {
        let g = den.gcd(c.den());
        den = &den * &c.den().exact_div(&g).unwrap();
    }
    (0..=d.order())
        .map(|k| {
            let c = d.coeff(k);
            &c.num().clone() * &den.exact_div(c.den()).unwrap()
        })
        .collect()
}

/// Polynomials of degree `< bound` annihilated by `d`, as a basis with strictly
/// increasing degrees (reduced echelon form from the top).
pub fn polynomial_kernel(d: &DiffOp, bound: usize) -> Vec<QPoly> {
    let ps = cleared(d);
    let max_rows = ps.iter().map(|p| p.deg().max(0) as usize).max().unwrap_or(0) + bound + 1;
    let mut m = Matrix::<Rational>::zeros(max_rows, bound);
    for col in 0..bound {
        // D(x^col) = sum_k p_k * [col]_k x^{col-k}
        let mut fall = Rational::one();
        for (k, p) in ps.iter().enumerate() {
            if k > col {
                break;
            }
            if k > 0 {
                fall *= &rat((col - k + 1) as i64);
            }
            if p.is_zero() {
                continue;
            }
            let img = p.scale(&fall).shift_up(col - k);
            for (r, c) in img.coeffs().iter().enumerate() {
                m[(r, col)] += c;
            }
        }
    }
    let ns = m.nullspace();
    degree_echelon(ns.into_iter().map(QPoly::new).collect())
}

/// Reduce a basis so that degrees are strictly increasing and each element is monic
/// with zero coefficients at the leading degrees of the others.
pub fn degree_echelon(basis: Vec<QPoly>) -> Vec<QPoly> {
    let n = basis.iter().map(|p| p.deg().max(0) as usize + 1).max().unwrap_or(0);
    // Rows are coefficient vectors read from the top degree down.
    let rows: Vec<Vec<Rational>> =
        basis.iter().map(|p| (0..n).rev().map(|i| p.coeff(i)).collect()).collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_rows(rows);
    let pivots = m.rref();
    let mut out: Vec<QPoly> = (0..pivots.len())
        .map(|r| QPoly::new((0..n).map(|i| m[(r, n - 1 - i)].clone()).collect()))
        .collect();
    out.sort_by_key(|p| p.deg());
    out
}

/// Local exponents at a point, sorted ascending.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExponentList {
    pub point: Point,
    pub exponents: Vec<i64>,
}

/// Leading Laurent coefficient of `a` at `p` in degree `-order` (zero if the pole is smaller).
fn leading_at(a: &QRatFunc, p: &Point, order: i64) -> Result<Rational> {
    let Some((v, cs)) = (match p {
        Point::Finite(z) => a.laurent_at(z, 1),
        Point::Infinity => a.laurent_at_infinity(1),
    }) else {
        return Ok(Rational::zero());
    };
    // finite: a = c (x-p)^v + ...; infinite: a = c x^{-v} + ...
    if v < -order {
        return Err(Error::NotFuchsian(p.to_string()));
    }
    Ok(if v == -order { cs[0].clone() } else { Rational::zero() })
}

/// Indicial polynomial at `p` in the variable `r`, for local solutions `(x-p)^r`
/// (or `x^r` at infinity).
pub fn indicial_polynomial(d: &DiffOp, p: &Point) -> Result<QPoly> {
    let n = d.order() as i64;
    let mut poly = QPoly::zero();
    for k in 0..=d.order() {
        let a = d.coeff(k);
        // finite: pole order <= n - k; infinity: a_k = O(x^{k-n})
        let c = match p {
            Point::Finite(_) => leading_at(&a, p, n - k as i64)?,
            Point::Infinity => leading_at(&a, p, k as i64 - n)?,
        };
        if c.is_zero() {
            continue;
        }
        let mut fall = QPoly::one();
        for i in 0..k {
            fall = &fall * &QPoly::new(vec![rat(-(i as i64)), Rational::one()]);
        }
        poly = &poly + &fall.scale(&c);
    }
    Ok(poly)
}

/// Integer roots with multiplicity of a rational polynomial that splits over the integers.
fn integer_roots(p: &QPoly) -> Option<Vec<i64>> {
    let mut p = p.monic();
    let mut roots = Vec::new();
    loop {
        let n = p.degree()?;
        if n == 0 {
            break;
        }
        // Fujiwara bound on root moduli.
        let c: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
        let mut bound: f64 = 0.0;
        for i in 1..=n {
            let mut t = c[n - i].abs();
            if i == n {
                t /= 2.0;
            }
            bound = bound.max(t.powf(1.0 / i as f64));
        }
        let b = (2.0 * bound * 1.001).ceil() as i64 + 1;
        let lin = (-b..=b).find(|&r| p.eval(&rat(r)).is_zero())?;
        roots.push(lin);
        p = p.exact_div(&QPoly::linear_root(&rat(lin))).unwrap();
    }
    roots.sort_unstable();
    Some(roots)
}

/// Exponents of `d` at `p`: roots of the indicial polynomial at finite points,
/// and `-r` for local solutions `x^r` at infinity.
pub fn exponents_at(d: &DiffOp, p: &Point) -> Result<ExponentList> {
    let ind = indicial_polynomial(d, p)?;
    let mut roots = integer_roots(&ind).ok_or_else(|| Error::NonIntegerExponents(p.to_string()))?;
    if p.is_infinite() {
        roots = roots.into_iter().map(|r| -r).collect();
        roots.sort_unstable();
    }
    Ok(ExponentList { point: p.clone(), exponents: roots })
}

/// Exponents of the conjugated operator at a marked point carrying `lambda`.
pub fn expected_exponents_finite(lambda: Weight) -> Vec<i64> {
    let (a, b) = (lambda.0, lambda.1);
    let mut v = vec![-2 * a - b, -a - b + 1, -a + 2, 3, a + 4, a + b + 5, 2 * a + b + 6];
    v.sort_unstable();
    v
}

/// Exponents of the conjugated operator at infinity for total weight `mu`.
pub fn expected_exponents_infinity(mu: Weight) -> Vec<i64> {
    let (a, b) = (mu.0, mu.1);
    let mut v = vec![-2 * a - b - 6, -a - b - 5, -a - 4, -3, a - 2, a + b - 1, 2 * a + b];
    v.sort_unstable();
    v
}

/// Sum over all singular points of (sum of exponents) minus `(#finite singular points - 1) n(n-1)/2`,
/// using the exponent lists supplied for some points and residues of the `d^{n-1}`
/// coefficient for the remaining finite singular points. Zero for a Fuchsian operator.
pub fn fuchs_defect(d: &DiffOp, known: &[ExponentList]) -> Result<Rational> {
    let n = d.order() as i64;
    let top = d.coeff(d.order() - 1);
    let binom = rat(n * (n - 1) / 2);
    // Distinct finite singular points: roots of the squarefree part of the lcm of denominators.
    let mut den = QPoly::one();
    for k in 0..d.order() {
        let c = d.coeff(k);
        let g = den.gcd(c.den());
        den = &den * &c.den().exact_div(&g).unwrap();
    }
    let sq = if den.is_constant() { den.clone() } else { den.exact_div(&den.gcd(&den.derivative())).unwrap() };
    let mut finite_count = sq.deg();
    let mut total = Rational::zero();
    let mut residue_rest = total_finite_residue(&top);
    let mut saw_infinity = false;
    for e in known {
        let s: i64 = e.exponents.iter().sum();
        total += &rat(s);
        match &e.point {
            Point::Infinity => saw_infinity = true,
            Point::Finite(z) => {
                residue_rest -= &top.residue_at(z);
                if sq.eval(z).is_zero() {
                    finite_count -= 1;
                } else {
                    // a regular point listed explicitly: its exponents sum to n(n-1)/2
                    total -= &binom;
                }
            }
        }
    }
    if !saw_infinity {
        return Err(Error::InvalidInput("exponents at infinity are required".into()));
    }
    // Each remaining singular point contributes n(n-1)/2 - residue of a_{n-1}.
    total += &(rat(finite_count) * &binom);
    total -= &residue_rest;
    let singular = sq.deg();
    Ok(total - rat(singular - 1) * &binom)
}

/// Sum of residues of a rational function over all finite points.
fn total_finite_residue(f: &QRatFunc) -> Rational {
    match f.laurent_at_infinity(1) {
        Some((v, _)) if v <= 1 => {
            // coefficient of x^{-1} in the expansion at infinity
            let k = (1 - v) as usize;
            f.laurent_at_infinity(k + 1).unwrap().1[k].clone()
        }
        _ => Rational::zero(),
    }
}

/// Everything attached to the closed-form solution for `(lambda, case)` at `z = (0, 1)`.
#[derive(Clone, Debug)]
pub struct DyInstance {
    pub lambda: Weight,
    pub case: usize,
    pub data: BetheData,
    pub y: PolyPair,
    pub t1: QPoly,
    pub t2: QPoly,
    pub dy: DiffOp,
}

impl DyInstance {
    pub fn new(lambda: Weight, case: usize) -> Result<Self> {
        let y = appendix_solution(lambda, case)?;
        let data = BetheData::two_point(lambda, case);
        let (t1, t2) = build_calt(&data.weights, &data.points)?;
        let dy = build_dy(&y, &t1, &t2)?;
        Ok(DyInstance { lambda, case, data, y, t1, t2, dy })
    }

    /// `T_1^2 T_2`.
    pub fn twist(&self) -> QPoly {
        &self.t1.pow(2) * &self.t2
    }

    pub fn conjugated(&self) -> Result<DiffOp> {
        conjugate(&self.dy, &QRatFunc::from_poly(self.twist()))
    }

    /// Total weight `lambda + w2 - alpha(l)`.
    pub fn total_weight(&self) -> Weight {
        self.data.total_weight()
    }

    /// One more than the largest kernel degree predicted by the exponents at infinity.
    pub fn default_degree_bound(&self) -> usize {
        let mu = self.total_weight();
        (self.twist().deg() + 2 * mu.0 + mu.1 + 6 + 1) as usize
    }

    /// Polynomial kernel of `D_y`; must be seven-dimensional.
    pub fn kernel(&self) -> Result<Vec<QPoly>> {
        let mut bound = self.default_degree_bound();
        for _ in 0..2 {
            let k = polynomial_kernel(&self.dy, bound);
            if k.len() == 7 {
                return Ok(k);
            }
            bound *= 2;
        }
        let found = polynomial_kernel(&self.dy, bound).len();
        Err(Error::Dimension { expected: 7, found })
    }
}

/// The factor between `-Res_{z_1} h_2` and the Gaudin eigenvalue, fixed by one calibration case.
pub const H2_RESIDUE_SCALE: i64 = 2;

/// Measure the scale `(-Res_0 h_2) / H_1` on the calibration case `lambda = (1,0)`, `l = l_0`.
pub fn calibrate_h2_scale() -> Result<Rational> {
    let r = h2_residue(Weight(1, 0), 0)?;
    Ok(-r / gaudin_eigenvalue(Weight(1, 0), 0))
}

/// `Res_{x=0}` of the `d^5` coefficient of the conjugated operator.
pub fn h2_residue(lambda: Weight, case: usize) -> Result<Rational> {
    let inst = DyInstance::new(lambda, case)?;
    let dv = inst.conjugated()?;
    Ok(dv.coeff(5).residue_at(&Rational::zero()))
}

/// Eigenvalue of `Omega/(z_1 - z_2)` on the summand `V_mu`, `mu = lambda + w2 - alpha(l_i)`, `z = (0,1)`.
pub fn gaudin_eigenvalue(lambda: Weight, case: usize) -> Rational {
    let mu = BetheData::two_point(lambda, case).total_weight();
    frac(casimir_value(mu) - casimir_value(lambda) - casimir_value(Weight::OMEGA2), 2) / rat(-1)
}

#[derive(Clone, Debug, Serialize)]
pub struct H2Report {
    pub lambda: Weight,
    pub case: usize,
    #[serde(serialize_with = "crate::json::ser_rational")]
    pub residue_side: Rational,
    #[serde(serialize_with = "crate::json::ser_rational")]
    pub eigenvalue_side: Rational,
    pub ok: bool,
}

/// Compare `-Res_0 h_2 / H2_RESIDUE_SCALE` with the Gaudin eigenvalue.
pub fn h2_casimir_check(lambda: Weight, case: usize) -> Result<H2Report> {
    let residue_side = -h2_residue(lambda, case)? / rat(H2_RESIDUE_SCALE);
    let eigenvalue_side = gaudin_eigenvalue(lambda, case);
    Ok(H2Report { lambda, case, ok: residue_side == eigenvalue_side, residue_side, eigenvalue_side })
}

/// Largest absolute value, used in diagnostics.
pub fn max_abs(xs: &[Rational]) -> Rational {
    xs.iter().map(|x| x.abs()).fold(Rational::zero(), |a, b| if b > a { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn trivial_data_gives_seventh_derivative() {
        let d = build_dy(&PolyPair::trivial(), &p(&[1]), &p(&[1])).unwrap();
        assert_eq!(d.order(), 7);
        assert!(d.is_derivative_power());
        let k = polynomial_kernel(&d, 7);
        assert_eq!(k, (0..7).map(|i| QPoly::monomial(Rational::one(), i)).collect::<Vec<_>>());
    }

    #[test]
    fn rightmost_factor_kills_y1() {
        let y = appendix_solution(Weight(1, 0), 2).unwrap();
        let d = build_dy(&y, &p(&[0, 1]), &p(&[0, -1, 1])).unwrap();
        assert!(d.apply(&QRatFunc::from_poly(y.y1.clone())).is_zero());
    }

    #[test]
    fn conjugation_first_order_and_inverse() {
        let f = QRatFunc::new(p(&[1, 0, 1]), p(&[-1, 1]));
        let c = conjugate(&DiffOp::derivative_power(1), &f).unwrap();
        assert_eq!(c.coeff(0), f.log_derivative());
        let d = DyInstance::new(Weight(0, 1), 1).unwrap().dy;
        let back = conjugate(&conjugate(&d, &f).unwrap(), &f.recip().unwrap()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn conjugation_composes() {
        let f = QRatFunc::from_poly(p(&[0, 1]));
        let g = QRatFunc::new(p(&[1]), p(&[-2, 1]));
        let d = DyInstance::new(Weight(1, 0), 2).unwrap().dy;
        let lhs = conjugate(&d, &(&f * &g)).unwrap();
        let rhs = conjugate(&conjugate(&d, &f).unwrap(), &g).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_power_exponents() {
        let d = DiffOp::derivative_power(7);
        assert_eq!(exponents_at(&d, &Point::Finite(frac(3, 2))).unwrap().exponents, vec![0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(exponents_at(&d, &Point::Infinity).unwrap().exponents, vec![-6, -5, -4, -3, -2, -1, 0]);
    }

    #[test]
    fn printed_exponent_lists() {
        assert_eq!(expected_exponents_finite(Weight(0, 1)), vec![-1, 0, 2, 3, 4, 6, 7]);
        assert_eq!(expected_exponents_infinity(Weight(1, 0)), vec![-8, -6, -5, -3, -1, 0, 2]);
    }

    #[test]
    fn conjugated_exponents_match_formulas() {
        let inst = DyInstance::new(Weight(1, 1), 2).unwrap();
        let dv = inst.conjugated().unwrap();
        assert!(dv.coeff(6).is_zero());
        let at0 = exponents_at(&dv, &Point::Finite(rat(0))).unwrap();
        let at1 = exponents_at(&dv, &Point::Finite(rat(1))).unwrap();
        let inf = exponents_at(&dv, &Point::Infinity).unwrap();
        assert_eq!(at0.exponents, expected_exponents_finite(Weight(1, 1)));
        assert_eq!(at1.exponents, expected_exponents_finite(Weight(0, 1)));
        assert_eq!(inf.exponents, expected_exponents_infinity(inst.total_weight()));
        assert_eq!(fuchs_defect(&dv, &[at0, at1, inf]).unwrap(), rat(0));
    }

    #[test]
    fn kernel_is_seven_dimensional() {
        let inst = DyInstance::new(Weight(0, 1), 1).unwrap();
        let k = inst.kernel().unwrap();
        assert_eq!(k.len(), 7);
        for u in &k {
            assert!(inst.dy.apply(&QRatFunc::from_poly(u.clone())).is_zero());
        }
    }

    #[test]
    fn h2_scale_calibration() {
        assert_eq!(calibrate_h2_scale().unwrap(), rat(H2_RESIDUE_SCALE));
        for (lambda, case, res) in [(Weight(0, 1), 0, 4), (Weight(0, 1), 3, -12), (Weight(0, 1), 6, -24)] {
            assert_eq!(h2_residue(lambda, case).unwrap(), rat(res));
            assert!(h2_casimir_check(lambda, case).unwrap().ok);
        }
        let r = h2_casimir_check(Weight(0, 0), 0).unwrap();
        assert!(r.ok && r.eigenvalue_side.is_zero());
    }
}
