//! Bethe ansatz equations for G2, the two-point closed-form solutions,
//! the Wronskian criterion and the reproduction procedure.

mod appendix;
mod numeric;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use appendix::appendix_solution;
pub use numeric::{bae_residual, poly_roots, BAE_TOLERANCE, ROOT_COLLISION_GUARD};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Point, QPoly, RatFunc, Rational};
use crate::repn::tensor_decompose;
use crate::rootdata::{root_combination, shifted_reflection, simple_reflection, Weight};

/// The seven values `l_0..l_6` of `(deg y1, deg y2)` for two points `(lambda, w2)`.
pub const CASES: [(i64, i64); 7] = [(0, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3), (2, 4)];

/// Weights at marked points and the degrees of the unknown polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BetheData {
    pub weights: Vec<Weight>,
    pub points: Vec<Point>,
    pub l: (i64, i64),
}

impl BetheData {
    pub fn new(weights: Vec<Weight>, points: Vec<Point>, l: (i64, i64)) -> Result<Self> {
        if weights.len() != points.len() {
            return Err(Error::InvalidInput("weights and points differ in length".into()));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::InvalidInput(format!("repeated point {}", points[i])));
                }
            }
        }
        if l.0 < 0 || l.1 < 0 {
            return Err(Error::InvalidInput("l must be nonnegative".into()));
        }
        Ok(BetheData { weights, points, l })
    }

    /// `Lambda = (lambda, w2)` at `z = (0, 1)` with `l = l_case`.
    pub fn two_point(lambda: Weight, case: usize) -> Self {
        BetheData {
            weights: vec![lambda, Weight::OMEGA2],
            points: vec![Point::Finite(Rational::zero()), Point::Finite(Rational::one())],
            l: CASES[case],
        }
    }

    /// `sum_s lambda^(s) - alpha(l)`.
    pub fn total_weight(&self) -> Weight {
        self.weights.iter().fold(Weight::ZERO, |a, &w| a + w) - root_combination(self.l.0, self.l.1)
    }
}

/// A pair `(y1, y2)`, compared up to nonzero scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyPair {
    pub y1: QPoly,
    pub y2: QPoly,
}

impl PolyPair {
    pub fn new(y1: QPoly, y2: QPoly) -> Self {
        PolyPair { y1, y2 }
    }

    pub fn trivial() -> Self {
        PolyPair { y1: QPoly::one(), y2: QPoly::one() }
    }

    pub fn get(&self, j: usize) -> &QPoly {
        if j == 1 {
            &self.y1
        } else {
            &self.y2
        }
    }

    pub fn monic(&self) -> Self {
        PolyPair { y1: self.y1.monic(), y2: self.y2.monic() }
    }

    /// Equality up to independent nonzero scalars on each component.
    pub fn projectively_eq(&self, o: &Self) -> bool {
        proportional(&self.y1, &o.y1) && proportional(&self.y2, &o.y2)
    }

    pub fn degrees(&self) -> (i64, i64) {
        (self.y1.deg(), self.y2.deg())
    }
}

/// `a` and `b` nonzero and `a * lead(b) == b * lead(a)`.
pub fn proportional(a: &QPoly, b: &QPoly) -> bool {
    !a.is_zero() && !b.is_zero() && a.scale(&b.lead()) == b.scale(&a.lead())
}

/// Exponent of `x - z_s` in `T_j` for each marked point.
fn exponents(weights: &[Weight], j: usize) -> impl Iterator<Item = i64> + '_ {
    weights.iter().map(move |w| w.coroot_pairing(j))
}

/// `T_j = prod_s (x - z_s)^{<lambda^(s), coroot_j>}` as rational functions (infinite points contribute 1).
pub fn build_calt_rational(weights: &[Weight], points: &[Point]) -> (RatFunc<Rational>, RatFunc<Rational>) {
    let mk = |j: usize| {
        let mut t = RatFunc::one();
        for (e, p) in exponents(weights, j).zip(points) {
            if let Point::Finite(z) = p {
                t = &t * &RatFunc::from_poly(QPoly::linear_root(z)).pow(e as i32);
            }
        }
        t
    };
    (mk(1), mk(2))
}

/// `T_1, T_2` as polynomials; every finite point must carry a dominant weight.
pub fn build_calt(weights: &[Weight], points: &[Point]) -> Result<(QPoly, QPoly)> {
    if weights.len() != points.len() {
        return Err(Error::InvalidInput("weights and points differ in length".into()));
    }
    for (w, p) in weights.iter().zip(points) {
        if !p.is_infinite() && !w.is_dominant() {
            return Err(Error::NotDominant(w.0, w.1));
        }
    }
    let (t1, t2) = build_calt_rational(weights, points);
    Ok((t1.as_poly().unwrap(), t2.as_poly().unwrap()))
}

/// Indices `i` such that `V_{lambda + w2 - alpha(l_i)}` occurs in `V_lambda (x) V_w2`.
pub fn admissible_ls(lambda: Weight) -> Result<Vec<usize>> {
    let dec = tensor_decompose(lambda, Weight::OMEGA2)?;
    Ok((0..7)
        .filter(|&i| {
            let (a, b) = CASES[i];
            dec.contains_key(&(lambda + Weight::OMEGA2 - root_combination(a, b)))
        })
        .collect())
}

/// Product of `x - z_s` over finite points where `T_j` has a zero or a pole.
fn singular_support(weights: &[Weight], points: &[Point], j: usize) -> QPoly {
    let mut s = QPoly::one();
    for (e, p) in exponents(weights, j).zip(points) {
        if let (true, Point::Finite(z)) = (e != 0, p) {
            s = &s * &QPoly::linear_root(z);
        }
    }
    s
}

/// Genericity: squarefree components, no roots at zeros or poles of `T_j`, coprime components.
pub fn is_generic(y: &PolyPair, weights: &[Weight], points: &[Point]) -> bool {
    if y.y1.is_zero() || y.y2.is_zero() {
        return false;
    }
    for j in 1..=2 {
        let yj = y.get(j);
        if !yj.is_squarefree() || !yj.is_coprime(&singular_support(weights, points, j)) {
            return false;
        }
    }
    y.y1.is_coprime(&y.y2)
}

/// Solve `x (y u' - y' u) + a y u = r` for a polynomial `u`. When `x^{-a} y` is a
/// polynomial it spans the kernel; the solution is then normalized to have zero
/// coefficient at `x^{deg y - a}`.
pub fn solve_twisted(y: &QPoly, r: &QPoly, a: i64) -> Option<QPoly> {
    let m = y.deg();
    assert!(m >= 0, "solve_twisted needs a nonzero polynomial");
    if r.is_zero() {
        return Some(QPoly::zero());
    }
    let top = r.deg() - m;
    if top < 0 {
        return None;
    }
    let n = top as usize + 1;
    let rows = r.deg() as usize + 1;
    let base = &(&y.scale(&Rational::from_integer(a.into())) - &(&y.derivative() * &QPoly::x()));
    let mut mat = Matrix::<Rational>::zeros(rows, n);
    for k in 0..n {
        // L_a(x^k) = (k y - x y' + a y) x^k
        let img = (base + &y.scale(&Rational::from_integer((k as i64).into()))).shift_up(k);
        for (d, c) in img.coeffs().iter().enumerate() {
            mat[(d, k)] = c.clone();
        }
    }
    let rhs: Vec<Rational> = (0..rows).map(|d| r.coeff(d)).collect();
    let mut sol = mat.solve(&rhs)?;
    let kernel = m - a;
    if (0..n as i64).contains(&kernel) {
        let ns = mat.nullspace();
        if let Some(v) = ns.first() {
            let k = kernel as usize;
            if !v[k].is_zero() {
                let t = sol[k].clone() / &v[k];
                for (s, vi) in sol.iter_mut().zip(v) {
                    *s -= &(t.clone() * vi);
                }
            }
        }
    }
    Some(QPoly::new(sol))
}

/// A polynomial `u` with `Wr(y, x^a u) = rhs`, canonical modulo the kernel, or `None`.
pub fn fertility_solve(y: &QPoly, rhs: &QPoly, a: u32) -> Option<QPoly> {
    if y.is_zero() {
        return None;
    }
    // Wr(y, x^a u) = x^{a-1} L_a(u)
    let r = if a == 0 {
        rhs.shift_up(1)
    } else {
        let xs = QPoly::monomial(Rational::one(), (a - 1) as usize);
        rhs.exact_div(&xs)?
    };
    solve_twisted(y, &r, a as i64)
}

/// Right-hand side of the fertility equation in direction `j` with the power of `x`
/// at the first point removed: `T_j' * y2` or `T_j' * y1^3`.
fn fertility_rhs(y: &PolyPair, j: usize, weights: &[Weight], points: &[Point]) -> QPoly {
    let (t1, t2) = build_calt_rational(&weights[1..], &points[1..]);
    let t = if j == 1 { t1 } else { t2 };
    let t = t.as_poly().expect("weights away from the first point are dominant");
    if j == 1 {
        &t * &y.y2
    } else {
        &t * &y.y1.pow(3)
    }
}

/// Move the first point to the origin: `x -> x + z1`. Returns shifted data and `z1`.
fn recentre(data: &BetheData, y: &PolyPair) -> Result<(BetheData, PolyPair, Rational)> {
    let z1 = match data.points.first() {
        Some(Point::Finite(z)) => z.clone(),
        _ => return Err(Error::InvalidInput("the first point must be finite".into())),
    };
    if z1.is_zero() {
        return Ok((data.clone(), y.clone(), z1));
    }
    let shifted = BetheData {
        weights: data.weights.clone(),
        points: data
            .points
            .iter()
            .map(|p| match p {
                Point::Finite(z) => Point::Finite(z - &z1),
                Point::Infinity => Point::Infinity,
            })
            .collect(),
        l: data.l,
    };
    Ok((shifted, PolyPair::new(y.y1.translate(&z1), y.y2.translate(&z1)), z1))
}

/// Whether the Wronskian equation in direction `j` has a polynomial solution.
pub fn fertile_in_direction(y: &PolyPair, j: usize, data: &BetheData) -> Result<bool> {
    let (d, yy, _) = recentre(data, y)?;
    let a = d.weights[0].coroot_pairing(j) + 1;
    let r = fertility_rhs(&yy, j, &d.weights, &d.points);
    Ok(solve_twisted(yy.get(j), &r, a).is_some())
}

/// Both fertility equations hold.
pub fn fertility_criterion(y: &PolyPair, data: &BetheData) -> Result<bool> {
    Ok(fertile_in_direction(y, 1, data)? && fertile_in_direction(y, 2, data)?)
}

/// Reproduction in direction `j`. Returns the new pair and data, or `None` if the new pair is not generic.
pub fn reproduce(y: &PolyPair, j: usize, data: &BetheData) -> Result<Option<(PolyPair, BetheData)>> {
    if j != 1 && j != 2 {
        return Err(Error::InvalidInput(format!("direction must be 1 or 2, got {j}")));
    }
    let (d, yy, z1) = recentre(data, y)?;
    let first = d.weights[0];
    let a = first.coroot_pairing(j) + 1;
    let r = fertility_rhs(&yy, j, &d.weights, &d.points);
    let u = solve_twisted(yy.get(j), &r, a)
        .ok_or_else(|| Error::NoSolution(format!("no polynomial solution of the Wronskian equation in direction {j}")))?;
    let new_yj = u;
    if new_yj.is_zero() {
        return Ok(None);
    }
    let rest = d.weights[1..].iter().fold(Weight::ZERO, |acc, &w| acc + w);
    let moved = simple_reflection(j, rest - root_combination(d.l.0, d.l.1));
    let (l1, l2) = (rest - moved).root_coords();
    if l1 < 0 || l2 < 0 {
        return Ok(None);
    }
    let mut weights = d.weights.clone();
    weights[0] = shifted_reflection(j, first);
    let mut pair = if j == 1 { PolyPair::new(new_yj, yy.y2.clone()) } else { PolyPair::new(yy.y1.clone(), new_yj) };
    pair = pair.monic();
    if pair.degrees() != (l1, l2) {
        return Err(Error::Consistency(format!(
            "reproduced degrees {:?} disagree with the weight update ({l1},{l2})",
            pair.degrees()
        )));
    }
    let new_data = BetheData { weights, points: d.points.clone(), l: (l1, l2) };
    if !is_generic(&pair, &new_data.weights, &new_data.points) {
        return Ok(None);
    }
    // Undo the recentring.
    let minus = -z1.clone();
    let pair = PolyPair::new(pair.y1.translate(&minus), pair.y2.translate(&minus));
    let new_data = BetheData { points: data.points.clone(), ..new_data };
    Ok(Some((pair, new_data)))
}

/// Reflection word whose chain of reproductions leads from `(1,1)` to case `i`
/// (case 3 is not reached this way).
pub fn chain_word(case: usize) -> Option<&'static [usize]> {
    match case {
        0 => Some(&[]),
        1 => Some(&[2]),
        2 => Some(&[2, 1]),
        4 => Some(&[2, 1, 2]),
        5 => Some(&[2, 1, 2, 1]),
        6 => Some(&[2, 1, 2, 1, 2]),
        _ => None,
    }
}

/// One step of a reproduction chain.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub direction: usize,
    pub pair: PolyPair,
    pub data: BetheData,
}

/// Start from `(1,1)` at `theta = s_{w_k} ... s_{w_1} . lambda` for the word `w` of the case
/// and reproduce along `w`, ending at weight `lambda`.
pub fn reproduction_chain(lambda: Weight, word: &[usize]) -> Result<Vec<ChainStep>> {
    let theta = word.iter().rev().fold(lambda, |w, &j| shifted_reflection(j, w));
    let mut data = BetheData::two_point(theta, 0);
    let mut y = PolyPair::trivial();
    let mut out = Vec::new();
    for &j in word {
        match reproduce(&y, j, &data)? {
            Some((ny, nd)) => {
                y = ny;
                data = nd;
                out.push(ChainStep { direction: j, pair: y.clone(), data: data.clone() });
            }
            None => return Err(Error::NoSolution(format!("reproduction in direction {j} is not generic"))),
        }
    }
    Ok(out)
}

/// Affine change of coordinates taking `0, 1` to `z1, z2`: `y(x) -> y((x - z1)/(z2 - z1))`, made monic.
pub fn translate_solution(y: &PolyPair, z1: &Rational, z2: &Rational) -> Result<PolyPair> {
    let span = z2 - z1;
    if span.is_zero() {
        return Err(Error::InvalidInput("points must be distinct".into()));
    }
    let inv = Rational::one() / &span;
    let sub = QPoly::new(vec![-(z1 * &inv), inv]);
    Ok(PolyPair::new(y.y1.compose(&sub).monic(), y.y2.compose(&sub).monic()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    fn pts(z: &[i64]) -> Vec<Point> {
        z.iter().map(|&v| Point::Finite(rat(v))).collect()
    }

    #[test]
    fn calt_examples() {
        let (t1, t2) = build_calt(&[Weight(0, 1)], &pts(&[0])).unwrap();
        assert_eq!((t1, t2), (p(&[1]), p(&[0, 1])));
        let (t1, t2) = build_calt(&[Weight(1, 1), Weight(0, 1)], &pts(&[0, 1])).unwrap();
        assert_eq!((t1, t2), (p(&[0, 1]), p(&[0, -1, 1])));
        let (t1, t2) = build_calt(&[Weight(2, 0)], &[Point::Infinity]).unwrap();
        assert_eq!((t1, t2), (p(&[1]), p(&[1])));
        assert!(build_calt(&[Weight(-1, 0)], &pts(&[0])).is_err());
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(admissible_ls(Weight(0, 0)).unwrap(), vec![0]);
        assert_eq!(admissible_ls(Weight(0, 1)).unwrap(), vec![0, 1, 3, 6]);
        assert_eq!(admissible_ls(Weight(2, 2)).unwrap(), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn genericity_examples() {
        let y = PolyPair::new(p(&[1]), QPoly::new(vec![frac(-1, 2), rat(1)]));
        assert!(is_generic(&y, &[Weight(1, 1), Weight(0, 1)], &pts(&[0, 1])));
        assert!(!is_generic(&PolyPair::new(p(&[0, 1]), p(&[0, 1])), &[], &[]));
        assert!(!is_generic(&PolyPair::new(p(&[9, -6, 1]), p(&[1])), &[], &[]));
        // root at a zero of T_2
        assert!(!is_generic(&PolyPair::new(p(&[1]), p(&[-1, 1])), &[Weight(0, 0), Weight(0, 1)], &pts(&[0, 1])));
    }

    #[test]
    fn fertility_examples() {
        assert_eq!(fertility_solve(&p(&[1]), &p(&[0, 2]), 0), Some(p(&[0, 0, 1])));
        assert_eq!(fertility_solve(&p(&[0, 1]), &p(&[0, 0, 1]), 0), Some(p(&[0, 0, 1])));
        // Wr(x, -1) = 1
        assert_eq!(fertility_solve(&p(&[0, 1]), &p(&[1]), 0), Some(p(&[-1])));
        // Wr(x^2, u) = 1 has no polynomial solution
        assert_eq!(fertility_solve(&p(&[0, 0, 1]), &p(&[1]), 0), None);
        // Wr(1, x^2 u) = 3x^2 -> u = x
        assert_eq!(fertility_solve(&p(&[1]), &p(&[0, 0, 3]), 2), Some(p(&[0, 1])));
    }

    #[test]
    fn reproduce_from_trivial() {
        let theta = Weight(2, 1);
        let data = BetheData::two_point(theta, 0);
        let (y, d) = reproduce(&PolyPair::trivial(), 2, &data).unwrap().unwrap();
        assert!(y.y1.is_constant());
        assert_eq!(y.y2.deg(), 1);
        assert!(y.y2.is_monic());
        assert_eq!(d.weights[0], shifted_reflection(2, theta));
        assert_eq!(d.l, (0, 1));
    }

    #[test]
    fn translation_roundtrip() {
        let y = appendix_solution(Weight(1, 1), 2).unwrap();
        let moved = translate_solution(&y, &rat(2), &rat(5)).unwrap();
        let back = translate_solution(&moved, &frac(-2, 3), &frac(-1, 3)).unwrap();
        assert!(back.projectively_eq(&y));
    }

    #[test]
    fn chain_reaches_closed_forms() {
        for a in 0..3 {
            for b in 0..3 {
                let lambda = Weight(a, b);
                for case in admissible_ls(lambda).unwrap() {
                    let Some(word) = chain_word(case) else { continue };
                    let want = appendix_solution(lambda, case).unwrap();
                    if word.is_empty() {
                        continue;
                    }
                    let steps = reproduction_chain(lambda, word).unwrap();
                    let last = steps.last().unwrap();
                    assert_eq!(last.data.weights[0], lambda);
                    assert_eq!(last.data.l, CASES[case]);
                    assert!(last.pair.projectively_eq(&want), "lambda={lambda} case {case}: {:?}", last.pair);
                }
            }
        }
    }

    #[test]
    fn closed_forms_are_fertile_and_solve_equations() {
        for a in 0..3 {
            for b in 0..3 {
                let lambda = Weight(a, b);
                for case in admissible_ls(lambda).unwrap() {
                    let y = appendix_solution(lambda, case).unwrap();
                    let data = BetheData::two_point(lambda, case);
                    assert!(is_generic(&y, &data.weights, &data.points));
                    assert!(fertility_criterion(&y, &data).unwrap(), "lambda={lambda} case {case}");
                    assert!(bae_residual(&y, &data.weights, &data.points).unwrap() < BAE_TOLERANCE);
                }
            }
        }
    }
}
