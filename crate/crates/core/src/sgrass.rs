//! Seven-dimensional spaces of polynomials: Wronskians, Schubert data, divided
//! Wronskians, dual spaces, the invariant bilinear form and self-self-duality.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bethe::proportional;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, rat, wronskian, Matrix, Point, QPoly, Rational};
use crate::rootdata::{partition_from_weight, Weight};

/// Dimension of the spaces handled here.
pub const DIM: usize = 7;

/// A seven-dimensional space of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySpace {
    basis: Vec<QPoly>,
    flag: Vec<QPoly>,
}

fn coefficient_matrix(ps: &[QPoly], width: usize) -> Matrix<Rational> {
    Matrix::from_rows(ps.iter().map(|p| (0..width).map(|i| p.coeff(i)).collect()).collect())
}

fn width(ps: &[QPoly]) -> usize {
    ps.iter().map(|p| (p.deg() + 1).max(0) as usize).max().unwrap_or(0)
}

/// Rank of a family of polynomials.
pub fn poly_rank(ps: &[QPoly]) -> usize {
    if ps.is_empty() {
        return 0;
    }
    coefficient_matrix(ps, width(ps).max(1)).rank()
}

impl PolySpace {
    pub fn new(basis: Vec<QPoly>) -> Result<Self> {
        if basis.len() != DIM {
            return Err(Error::InvalidInput(format!("{} polynomials; a space needs {DIM}", basis.len())));
        }
        let r = poly_rank(&basis);
        if r != DIM {
            return Err(Error::Dimension { expected: DIM, found: r });
        }
        let flag = crate::diffop::degree_echelon(basis.clone());
        Ok(PolySpace { basis, flag })
    }

    /// `span{1, x, ..., x^6}`.
    pub fn standard() -> Self {
        Self::new((0..DIM).map(|i| QPoly::monomial(Rational::one(), i)).collect()).unwrap()
    }

    pub fn basis(&self) -> &[QPoly] {
        &self.basis
    }

    /// Basis with strictly increasing degrees, monic, reduced.
    pub fn flag_basis(&self) -> &[QPoly] {
        &self.flag
    }

    /// Degrees of the flag-adapted basis at infinity.
    pub fn degrees(&self) -> Vec<i64> {
        self.flag.iter().map(|p| p.deg()).collect()
    }

    /// Orders of vanishing at `z` realised by elements of the space, ascending.
    pub fn valuation_profile(&self, z: &Rational) -> Vec<usize> {
        let shifted: Vec<QPoly> = self.basis.iter().map(|p| p.translate(z)).collect();
        let mut m = coefficient_matrix(&shifted, width(&shifted));
        m.rref()
    }

    /// Coordinates of `p` in the flag basis, if `p` lies in the space.
    pub fn coordinates(&self, p: &QPoly) -> Option<Vec<Rational>> {
        let w = width(&self.flag).max((p.deg() + 1).max(0) as usize);
        let m = coefficient_matrix(&self.flag, w).transpose();
        let rhs: Vec<Rational> = (0..w).map(|i| p.coeff(i)).collect();
        m.solve(&rhs)
    }

    pub fn contains(&self, p: &QPoly) -> bool {
        self.coordinates(p).is_some()
    }

    pub fn same_span(&self, other: &PolySpace) -> bool {
        self.flag == other.flag
    }

    /// Multiply every basis element by `g`.
    pub fn multiply(&self, g: &QPoly) -> Result<PolySpace> {
        PolySpace::new(self.basis.iter().map(|p| p * g).collect())
    }

    /// Divide every basis element by `g`; fails unless `g` divides the whole space.
    pub fn divide(&self, g: &QPoly) -> Result<PolySpace> {
        let b = self
            .basis
            .iter()
            .map(|p| p.exact_div(g).ok_or_else(|| Error::Consistency(format!("{g} does not divide the space"))))
            .collect::<Result<Vec<_>>>()?;
        PolySpace::new(b)
    }
}

/// Marked points with partitions, and the associated polynomials `T_1..T_7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationData {
    pub points: Vec<Point>,
    pub partitions: Vec<[i64; DIM]>,
    t: [QPoly; DIM],
}

impl RamificationData {
    pub fn new(points: Vec<Point>, partitions: Vec<[i64; DIM]>) -> Result<Self> {
        if points.len() != partitions.len() {
            return Err(Error::InvalidInput(format!(
                "{} points but {} partitions",
                points.len(),
                partitions.len()
            )));
        }
        for p in &partitions {
            if p.windows(2).any(|w| w[0] < w[1]) || p[DIM - 1] < 0 {
                return Err(Error::InvalidInput(format!("{p:?} is not a partition")));
            }
        }
        let mut t: [QPoly; DIM] = std::array::from_fn(|_| QPoly::one());
        for (z, lam) in points.iter().zip(&partitions) {
            let Point::Finite(z) = z else { continue };
            let lin = QPoly::linear_root(z);
            for (i, ti) in t.iter_mut().enumerate() {
                let e = lam[i] - if i + 1 < DIM { lam[i + 1] } else { 0 };
                *ti = &*ti * &lin.pow(e as u32);
            }
        }
        Ok(RamificationData { points, partitions, t })
    }

    /// No marked points: all `T_i = 1`.
    pub fn trivial() -> Self {
        Self::new(Vec::new(), Vec::new()).unwrap()
    }

    /// Points carrying weights `lambda^(s)` shifted by `k_s`.
    pub fn from_weights(points: Vec<Point>, weights: &[Weight], ks: &[i64]) -> Result<Self> {
        if weights.len() != points.len() || ks.len() != points.len() {
            return Err(Error::InvalidInput("points, weights and shifts differ in length".into()));
        }
        for w in weights {
            w.require_dominant()?;
        }
        Self::new(points, weights.iter().zip(ks).map(|(w, &k)| partition_from_weight(*w, k)).collect())
    }

    /// `T_i` for `i = 1..=7`.
    pub fn t(&self, i: usize) -> &QPoly {
        &self.t[i - 1]
    }

    pub fn ts(&self) -> &[QPoly; DIM] {
        &self.t
    }

    /// `T_i = T_{7-i}` for `i = 1..6`.
    pub fn t_symmetric(&self) -> bool {
        (1..DIM).all(|i| self.t(i) == self.t(DIM - i))
    }

    /// `T_1 = T_3 = T_4 = T_6` and `T_2 = T_5`.
    pub fn g2_pattern(&self) -> bool {
        self.t(1) == self.t(3) && self.t(1) == self.t(4) && self.t(1) == self.t(6) && self.t(2) == self.t(5)
    }

    /// Same points with every partition lowered by its last part (removes base points).
    pub fn without_base_points(&self) -> Self {
        let parts = self.partitions.iter().map(|p| p.map(|v| v - p[DIM - 1])).collect();
        Self::new(self.points.clone(), parts).unwrap()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RamificationJson = serde_json::from_str(s)?;
        let points = raw.points.iter().map(|p| json_point(p)).collect::<Result<Vec<_>>>()?;
        let parts = raw
            .partitions
            .iter()
            .map(|p| match p.len() {
                DIM => Ok(std::array::from_fn(|i| p[i])),
                2 => Weight(p[0], p[1]).require_dominant().map(|w| partition_from_weight(w, 0)),
                n => Err(Error::InvalidInput(format!("partition of length {n}; expected 7 parts or a weight"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(points, parts)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "points": self.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "partitions": self.partitions,
        })
    }
}

#[derive(Deserialize)]
struct RamificationJson {
    points: Vec<Value>,
    partitions: Vec<Vec<i64>>,
}

fn json_point(v: &Value) -> Result<Point> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => Ok(Point::Finite(parse_rational(&n.to_string())?)),
        _ => Err(Error::Parse(format!("bad point {v}"))),
    }
}

fn json_scalar(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => Err(Error::Parse(format!("bad coefficient {v}"))),
    }
}

/// Polynomials from a JSON array of ascending coefficient arrays (numbers or rational strings).
pub fn polys_from_json(s: &str) -> Result<Vec<QPoly>> {
    let raw: Vec<Vec<Value>> = serde_json::from_str(s)?;
    raw.iter()
        .map(|cs| Ok(QPoly::new(cs.iter().map(json_scalar).collect::<Result<Vec<_>>>()?)))
        .collect()
}

pub fn polys_to_json(ps: &[QPoly]) -> Value {
    Value::from(ps.iter().map(crate::json::poly_to_strings).collect::<Vec<_>>())
}

/// Monic Wronskian of the space.
pub fn space_wronskian(x: &PolySpace) -> QPoly {
    wronskian(x.basis()).monic()
}

/// `Wr(g_1..g_i) / prod_{j=1..i} T_{8-j}^{i+1-j}`.
pub fn divided_wronskian(gs: &[QPoly], r: &RamificationData) -> Result<QPoly> {
    let i = gs.len();
    if i > DIM {
        return Err(Error::InvalidInput(format!("{i} polynomials; at most {DIM}")));
    }
    let mut den = QPoly::one();
    for j in 1..=i {
        den = &den * &r.t(DIM + 1 - j).pow((i + 1 - j) as u32);
    }
    wronskian(gs).exact_div(&den).ok_or_else(|| {
        Error::Consistency("divided Wronskian is not a polynomial; the space is not in the Schubert intersection".into())
    })
}

fn without(basis: &[QPoly], k: usize) -> Vec<QPoly> {
    basis.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect()
}

/// Divided Wronskians of the six-element subsets of the flag basis, in order of the omitted index.
fn cofactor_wronskians(x: &PolySpace, r: &RamificationData) -> Result<Vec<QPoly>> {
    (0..DIM).map(|k| divided_wronskian(&without(x.flag_basis(), k), r)).collect()
}

/// The dual space `X^dagger`.
pub fn dual_space(x: &PolySpace, r: &RamificationData) -> Result<PolySpace> {
    PolySpace::new(cofactor_wronskians(x, r)?)
}

/// Exact monic `n`-th root of a polynomial whose leading coefficient is ignored.
pub fn poly_nth_root(p: &QPoly, n: u32) -> Option<QPoly> {
    let d = p.degree()?;
    if d % n as usize != 0 {
        return None;
    }
    let m = d / n as usize;
    let p = p.monic();
    // reversed series q(t) = t^d p(1/t) = 1 + ..., and its 1/n-th power
    let q: Vec<Rational> = p.coeffs().iter().rev().cloned().collect();
    let alpha = Rational::new(1.into(), (n as i64).into());
    let mut b = vec![Rational::one()];
    for k in 1..=m {
        let mut s = Rational::zero();
        for j in 1..=k.min(d) {
            s += (&alpha + Rational::one()) * rat(j as i64) * &q[j] * &b[k - j] - rat(k as i64) * &q[j] * &b[k - j];
        }
        b.push(s / rat(k as i64));
    }
    let root = QPoly::new(b.into_iter().rev().collect());
    (root.pow(n) == p).then_some(root)
}

/// `Some(g)` with `X = g X^dagger` if `X` is self-dual, `None` otherwise.
pub fn self_dual_factor(x: &PolySpace, r: &RamificationData) -> Result<Option<QPoly>> {
    if !r.t_symmetric() {
        return Ok(None);
    }
    let dual = match dual_space(x, r) {
        Ok(d) => d,
        Err(Error::Consistency(_)) | Err(Error::Dimension { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let ratio = match space_wronskian(x).exact_div(&space_wronskian(&dual)) {
        Some(q) => q,
        None => return Ok(None),
    };
    let Some(g) = poly_nth_root(&ratio, DIM as u32) else { return Ok(None) };
    let scaled = dual.multiply(&g)?;
    Ok(scaled.same_span(x).then_some(g))
}

pub fn is_self_dual(x: &PolySpace, r: &RamificationData) -> bool {
    matches!(self_dual_factor(x, r), Ok(Some(_)))
}

/// Gram matrix of the invariant form on the flag basis of a pure self-dual space.
pub fn kappa_form(x: &PolySpace, r: &RamificationData) -> Result<Matrix<Rational>> {
    let g = self_dual_factor(x, r)?.ok_or_else(|| Error::InvalidInput("space is not self-dual".into()))?;
    if g != QPoly::one() {
        return Err(Error::InvalidInput(format!("space is not pure (base-point factor {g})")));
    }
    let e = x.flag_basis();
    let w = cofactor_wronskians(x, r)?;
    let top = divided_wronskian(e, r)?;
    if top.deg() != 0 {
        return Err(Error::Consistency(format!("full divided Wronskian {top} is not constant")));
    }
    // coordinates of each e_b in the cofactor basis w_0..w_6
    let wm = coefficient_matrix(&w, width(&w).max(width(e))).transpose();
    let mut gram = Matrix::zeros(DIM, DIM);
    for (b, eb) in e.iter().enumerate() {
        let rhs: Vec<Rational> = (0..wm.rows()).map(|i| eb.coeff(i)).collect();
        let m = wm.solve(&rhs).ok_or_else(|| Error::Consistency("basis element outside the dual space".into()))?;
        for (a, mba) in m.iter().enumerate() {
            let sign = if a % 2 == 0 { rat(1) } else { rat(-1) };
            gram[(a, b)] = sign * top.coeff(0) * mba;
        }
    }
    if gram.det().is_zero() {
        return Err(Error::Consistency("the invariant form is degenerate".into()));
    }
    Ok(gram)
}

/// `kappa(u, v)` for elements of a pure self-dual space.
pub fn kappa(x: &PolySpace, r: &RamificationData, u: &QPoly, v: &QPoly) -> Result<Rational> {
    let g = kappa_form(x, r)?;
    kappa_with(x, &g, u, v)
}

fn kappa_with(x: &PolySpace, gram: &Matrix<Rational>, u: &QPoly, v: &QPoly) -> Result<Rational> {
    let outside = || Error::InvalidInput("polynomial is not in the space".into());
    let cu = x.coordinates(u).ok_or_else(outside)?;
    let cv = x.coordinates(v).ok_or_else(outside)?;
    let gv = gram.mul_vec(&cv);
    Ok(cu.iter().zip(&gv).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
}

/// `(y_1, ..., y_6)` with `y_{7-i} = Wr^dagger(u_1..u_i)`.
pub fn y_sequence(gamma: &[QPoly], r: &RamificationData) -> Result<[QPoly; 6]> {
    if gamma.len() < 6 {
        return Err(Error::InvalidInput("need at least six basis elements".into()));
    }
    let mut y: [QPoly; 6] = std::array::from_fn(|_| QPoly::zero());
    for i in 1..=6 {
        y[6 - i] = divided_wronskian(&gamma[..i], r)?;
    }
    Ok(y)
}

/// The self-self-dual pattern `y_1^2 ~ y_6^2 ~ y_3 ~ y_4`, `y_2 ~ y_5` (up to scalars).
pub fn ssd_pattern(y: &[QPoly; 6]) -> bool {
    let sq1 = y[0].pow(2);
    proportional(&sq1, &y[5].pow(2)) && proportional(&sq1, &y[2]) && proportional(&sq1, &y[3]) && proportional(&y[1], &y[4])
}

/// Check that the ordered basis `gamma` of `X` witnesses self-self-duality.
pub fn ssd_witness_check(x: &PolySpace, r: &RamificationData, gamma: &[QPoly]) -> bool {
    if !r.g2_pattern() {
        return false;
    }
    let Ok(gs) = PolySpace::new(gamma.to_vec()) else { return false };
    if !gs.same_span(x) {
        return false;
    }
    match y_sequence(gamma, r) {
        Ok(y) => ssd_pattern(&y),
        Err(_) => false,
    }
}

/// Solve `v0 + sum c_i v_i = mu * target` for `(c, mu)`; returns `c`.
fn solve_proportional(v0: &QPoly, vs: &[QPoly], target: &QPoly) -> Option<Vec<Rational>> {
    let mut cols: Vec<QPoly> = vs.to_vec();
    cols.push(-target);
    let w = width(&cols).max(width(std::slice::from_ref(v0))).max(1);
    let m = coefficient_matrix(&cols, w).transpose();
    let rhs: Vec<Rational> = (0..w).map(|i| -v0.coeff(i)).collect();
    let sol = m.solve(&rhs)?;
    // mu = 0 would make the adjusted element vanish
    (!sol[vs.len()].is_zero()).then(|| sol[..vs.len()].to_vec())
}

/// Search for a witness basis among unipotent changes
/// `u1 + c1 u2, u2 + c2 u3, u3 + c3 u4 + c4 u5, u4, ...` of the flag basis.
pub fn find_ssd_witness(x: &PolySpace, r: &RamificationData) -> Result<Option<Vec<QPoly>>> {
    if !r.g2_pattern() {
        return Ok(None);
    }
    let u = x.flag_basis().to_vec();
    if ssd_witness_check(x, r, &u) {
        return Ok(Some(u));
    }
    let dw = |gs: &[QPoly]| divided_wronskian(gs, r);
    let y1 = dw(&u[..6])?;
    let y2 = dw(&u[..5])?;
    let sq = y1.pow(2);
    let t7 = r.t(7);

    // y6 = Wr(u1~)/T7 proportional to y1
    let Some(c) = solve_proportional(&u[0], &[u[1].clone()], &(&y1 * t7)) else { return Ok(None) };
    let u1 = &u[0] + &u[1].scale(&c[0]);

    // y5 = Wr^dagger(u1~, u2 + c2 u3) proportional to y2
    let (a0, a1) = (dw(&[u1.clone(), u[1].clone()])?, dw(&[u1.clone(), u[2].clone()])?);
    let Some(c) = solve_proportional(&a0, &[a1], &y2) else { return Ok(None) };
    let u2 = &u[1] + &u[2].scale(&c[0]);

    // y4 and y3 proportional to y1^2, jointly in (c3, c4)
    let base = [u1.clone(), u2.clone()];
    let with = |extra: &[QPoly]| -> Result<QPoly> {
        let mut v = base.to_vec();
        v.extend_from_slice(extra);
        dw(&v)
    };
    let (p0, p3, p4) = (with(&[u[2].clone()])?, with(&[u[3].clone()])?, with(&[u[4].clone()])?);
    let (q0, q4) = (with(&[u[2].clone(), u[3].clone()])?, with(&[u[4].clone(), u[3].clone()])?);
    // unknowns (c3, c4, rho, sigma) stacked over the two coefficient blocks
    let wd = width(&[p0.clone(), p3.clone(), p4.clone(), q0.clone(), q4.clone(), sq.clone()]).max(1);
    let mut m = Matrix::<Rational>::zeros(2 * wd, 4);
    let mut rhs = vec![Rational::zero(); 2 * wd];
    for i in 0..wd {
        m[(i, 0)] = p3.coeff(i);
        m[(i, 1)] = p4.coeff(i);
        m[(i, 2)] = -sq.coeff(i);
        rhs[i] = -p0.coeff(i);
        m[(wd + i, 1)] = q4.coeff(i);
        m[(wd + i, 3)] = -sq.coeff(i);
        rhs[wd + i] = -q0.coeff(i);
    }
    let Some(sol) = m.solve(&rhs) else { return Ok(None) };
    let u3 = &(&u[2] + &u[3].scale(&sol[0])) + &u[4].scale(&sol[1]);
    let gamma = vec![u1, u2, u3, u[3].clone(), u[4].clone(), u[5].clone(), u[6].clone()];
    Ok(ssd_witness_check(x, r, &gamma).then_some(gamma))
}

/// Self-dual and a witness is found by [`find_ssd_witness`] after removing base points.
pub fn is_self_self_dual(x: &PolySpace, r: &RamificationData) -> Result<bool> {
    let Some(g) = self_dual_factor(x, r)? else { return Ok(false) };
    let (x, r) = if g == QPoly::one() { (x.clone(), r.clone()) } else { (x.divide(&g)?, r.without_base_points()) };
    Ok(find_ssd_witness(&x, &r)?.is_some())
}

/// `f` orthogonal to `U`, `U` isotropic, and `Wr(U)` proportional to `T_1^2 T_2 f^2`.
pub fn isotropic_definition_check(x: &PolySpace, r: &RamificationData, f: &QPoly, u: &[QPoly]) -> Result<bool> {
    if u.len() != 3 || poly_rank(u) != 3 || !u.iter().all(|p| x.contains(p)) || !x.contains(f) {
        return Err(Error::InvalidInput("U must be a three-dimensional subspace of X containing no foreign elements".into()));
    }
    let gram = kappa_form(x, r)?;
    for a in u {
        if !kappa_with(x, &gram, f, a)?.is_zero() {
            return Ok(false);
        }
        for b in u {
            if !kappa_with(x, &gram, a, b)?.is_zero() {
                return Ok(false);
            }
        }
    }
    let target = &(&r.t(1).pow(2) * r.t(2)) * &f.pow(2);
    Ok(wronskian(u).monic() == target.monic())
}

/// Monic seventh root of the Wronskian.
pub fn reduced_wronski(x: &PolySpace) -> Result<QPoly> {
    let w = space_wronskian(x);
    poly_nth_root(&w, DIM as u32).ok_or_else(|| Error::Consistency(format!("Wronskian {w} is not a seventh power")))
}

/// Multiply the space by `prod (x - z_s)^{k_s}`; negative `k_s` divide.
pub fn shift_space(x: &PolySpace, z: &[Rational], k: &[i64]) -> Result<PolySpace> {
    if z.len() != k.len() {
        return Err(Error::InvalidInput("points and shifts differ in length".into()));
    }
    let (mut up, mut down) = (QPoly::one(), QPoly::one());
    for (zs, &ks) in z.iter().zip(k) {
        let lin = QPoly::linear_root(zs).pow(ks.unsigned_abs() as u32);
        if ks >= 0 {
            up = &up * &lin;
        } else {
            down = &down * &lin;
        }
    }
    x.multiply(&up)?.divide(&down)
}

/// Summary of the self-duality checks on one space.
#[derive(Clone, Debug, Serialize)]
pub struct SsdReport {
    pub self_dual: bool,
    pub g2_pattern: bool,
    pub witness_given: Option<bool>,
    pub witness_found: bool,
    pub kappa_symmetric: Option<bool>,
    pub wronskian: Vec<String>,
}

pub fn ssd_report(x: &PolySpace, r: &RamificationData, witness: Option<&[QPoly]>) -> Result<SsdReport> {
    let self_dual = is_self_dual(x, r);
    let kappa_symmetric = match kappa_form(x, r) {
        Ok(g) => Some(g == g.transpose()),
        Err(_) => None,
    };
    Ok(SsdReport {
        self_dual,
        g2_pattern: r.g2_pattern(),
        witness_given: witness.map(|g| ssd_witness_check(x, r, g)),
        witness_found: self_dual && is_self_self_dual(x, r)?,
        kappa_symmetric,
        wronskian: crate::json::poly_to_strings(&space_wronskian(x)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop::DyInstance;
    use crate::exact::frac;

    fn mono(exps: &[usize]) -> PolySpace {
        PolySpace::new(exps.iter().map(|&e| QPoly::monomial(rat(1), e)).collect()).unwrap()
    }

    fn ram_for(inst: &DyInstance) -> RamificationData {
        RamificationData::from_weights(
            vec![Point::Finite(rat(0)), Point::Finite(rat(1))],
            &inst.data.weights,
            &[0, 0],
        )
        .unwrap()
    }

    #[test]
    fn wronskians_of_monomial_spaces() {
        assert_eq!(space_wronskian(&PolySpace::standard()), QPoly::one());
        let w = space_wronskian(&mono(&[0, 1, 2, 3, 4, 5, 7]));
        assert_eq!(w, QPoly::x());
        assert!(PolySpace::new(vec![QPoly::one(); 7]).is_err());
    }

    #[test]
    fn divided_wronskian_trivial_cases() {
        let r = RamificationData::trivial();
        let gs = vec![QPoly::from_i64s(&[1, 2]), QPoly::from_i64s(&[0, 0, 3])];
        assert_eq!(divided_wronskian(&gs, &r).unwrap(), wronskian(&gs));
        assert_eq!(divided_wronskian(&gs[..1], &r).unwrap(), gs[0]);
    }

    #[test]
    fn standard_space_is_self_dual() {
        let r = RamificationData::trivial();
        let x = PolySpace::standard();
        assert!(dual_space(&x, &r).unwrap().same_span(&x));
        assert_eq!(self_dual_factor(&x, &r).unwrap(), Some(QPoly::one()));
        assert!(!is_self_dual(&mono(&[0, 1, 2, 3, 4, 5, 7]), &r));
    }

    #[test]
    fn kappa_on_standard_space() {
        let g = kappa_form(&PolySpace::standard(), &RamificationData::trivial()).unwrap();
        let anti = [720, -120, 48, -36, 48, -120, 720];
        for i in 0..7 {
            for j in 0..7 {
                let want = if i + j == 6 { rat(anti[i]) } else { rat(0) };
                assert_eq!(g[(i, j)], want, "entry {i},{j}");
            }
        }
    }

    #[test]
    fn witness_checks_on_standard_space() {
        let x = PolySpace::standard();
        let r = RamificationData::trivial();
        assert!(ssd_witness_check(&x, &r, x.flag_basis()));
        let bad: Vec<QPoly> = [1, 0, 2, 3, 4, 6, 5].iter().map(|&e| QPoly::monomial(rat(1), e)).collect();
        assert!(!ssd_witness_check(&x, &r, &bad));
        assert!(is_self_self_dual(&x, &r).unwrap());
    }

    #[test]
    fn self_dual_but_not_g2() {
        // exponents {0,1,2,4,6,7,8} at 0: T = (1, 1, x, x, 1, 1, 1)
        let x = mono(&[0, 1, 2, 4, 6, 7, 8]);
        let r = RamificationData::new(vec![Point::Finite(rat(0))], vec![[2, 2, 2, 1, 0, 0, 0]]).unwrap();
        assert!(is_self_dual(&x, &r));
        assert!(!r.g2_pattern());
        // the y's are constants here; only the ramification pattern rules it out
        let y = y_sequence(x.flag_basis(), &r).unwrap();
        assert!(ssd_pattern(&y));
        assert!(!ssd_witness_check(&x, &r, x.flag_basis()));
        assert!(!is_self_self_dual(&x, &r).unwrap());
    }

    #[test]
    fn isotropic_witness_for_cubic() {
        let x = PolySpace::standard();
        let r = RamificationData::trivial();
        let c = frac(3, 2);
        let f = QPoly::new(vec![c.clone(), rat(0), rat(0), rat(1)]);
        let u = vec![
            QPoly::one(),
            QPoly::new(vec![rat(0), rat(1), rat(0), rat(0), -(rat(1) / (rat(2) * &c))]),
            QPoly::new(vec![rat(0), rat(0), rat(1), rat(0), rat(0), -(rat(1) / (rat(5) * &c))]),
        ];
        assert!(isotropic_definition_check(&x, &r, &f, &u).unwrap());
        // not isotropic
        let mut v = u.clone();
        v[2] = QPoly::monomial(rat(1), 4);
        assert!(!isotropic_definition_check(&x, &r, &f, &v).unwrap());
        // isotropic at c = 0 but the Wronskian differs from f^2 for f = x^3 + 3/2
        let w = vec![QPoly::one(), QPoly::monomial(rat(1), 4), QPoly::monomial(rat(1), 5)];
        assert!(!isotropic_definition_check(&x, &r, &f, &w).unwrap());
    }

    #[test]
    fn roots_and_shifts() {
        assert_eq!(poly_nth_root(&QPoly::monomial(rat(3), 14), 7).unwrap(), QPoly::from_i64s(&[0, 0, 1]));
        let p = QPoly::from_i64s(&[0, -1, 1]);
        assert_eq!(poly_nth_root(&p.pow(7), 7).unwrap(), p);
        assert!(poly_nth_root(&QPoly::from_i64s(&[1, 0, 0, 0, 0, 0, 0, 1]), 7).is_none());
        let x = PolySpace::standard();
        let s = shift_space(&x, &[rat(0), rat(1)], &[2, 1]).unwrap();
        assert!(shift_space(&s, &[rat(0), rat(1)], &[-2, -1]).unwrap().same_span(&x));
        assert!(shift_space(&x, &[rat(0)], &[0]).unwrap().same_span(&x));
        assert!(reduced_wronski(&mono(&[0, 1, 2, 3, 4, 5, 7])).is_err());
    }

    #[test]
    fn bethe_kernel_is_self_self_dual() {
        let inst = DyInstance::new(Weight(0, 1), 1).unwrap();
        let x = PolySpace::new(inst.kernel().unwrap()).unwrap();
        let r = ram_for(&inst);
        assert!(r.g2_pattern());
        assert!(is_self_dual(&x, &r));
        let g = kappa_form(&x, &r).unwrap();
        assert_eq!(g, g.transpose());
        let y = y_sequence(x.flag_basis(), &r).unwrap();
        assert!(proportional(&y[0], &inst.y.y1) && proportional(&y[1], &inst.y.y2));
        assert!(ssd_witness_check(&x, &r, x.flag_basis()));
        let mut swapped = x.flag_basis().to_vec();
        swapped.swap(2, 3);
        let ys = y_sequence(&swapped, &r).unwrap();
        assert!(!ssd_pattern(&ys));
        assert!(!ssd_witness_check(&x, &r, &swapped));
        // profile at 0 is lambda_i + 7 - i for lambda = (0,1)
        let mut want: Vec<usize> = partition_from_weight(Weight(0, 1), 0)
            .iter()
            .enumerate()
            .map(|(i, l)| (*l + 6 - i as i64) as usize)
            .collect();
        want.sort_unstable();
        assert_eq!(x.valuation_profile(&rat(0)), want);
        let shifted = shift_space(&x, &[rat(0), rat(1)], &[1, 2]).unwrap();
        let rs = RamificationData::from_weights(r.points.clone(), &inst.data.weights, &[1, 2]).unwrap();
        assert!(is_self_self_dual(&shifted, &rs).unwrap());
        assert_eq!(reduced_wronski(&x).unwrap(), QPoly::from_i64s(&[0, -1, 1]));
    }

    #[test]
    fn json_forms() {
        let r = RamificationData::from_json(r#"{"points": ["0", 1, "inf"], "partitions": [[0,1], [2,2,1,1,1,0,0], [0,0,0,0,0,0,0]]}"#).unwrap();
        assert_eq!(r.points[2], Point::Infinity);
        assert_eq!(r.partitions[0], r.partitions[1]);
        assert!(r.g2_pattern());
        let again = RamificationData::from_json(&r.to_json().to_string()).unwrap();
        assert_eq!(again, r);
        let ps = polys_from_json(r#"[[1, "1/2"], [0, 0, 3]]"#).unwrap();
        assert_eq!(ps[0], QPoly::new(vec![rat(1), frac(1, 2)]));
        assert_eq!(polys_from_json(&polys_to_json(&ps).to_string()).unwrap(), ps);
        assert!(RamificationData::from_json(r#"{"points": ["0"], "partitions": []}"#).is_err());
    }
}
