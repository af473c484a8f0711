//! Closed-form solutions for two points `(lambda, w2)` at `z = (0, 1)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rat, QPoly, Rational};
use crate::rootdata::Weight;

use super::{admissible_ls, PolyPair};

struct Ctx {
    l1: Rational,
    l2: Rational,
    lambda: Weight,
    case: usize,
}

impl Ctx {
    /// `a*l1 + b*l2 + c`
    fn lin(&self, a: i64, b: i64, c: i64) -> Rational {
        rat(a) * &self.l1 + rat(b) * &self.l2 + rat(c)
    }

    fn div(&self, n: Rational, d: Rational) -> Result<Rational> {
        if d.is_zero() {
            return Err(Error::VanishingDenominator(format!(
                "closed-form solution for lambda = {}, case {}",
                self.lambda, self.case
            )));
        }
        Ok(n / d)
    }
}

fn pw(q: &Rational, n: i32) -> Rational {
    num_traits::pow(q.clone(), n as usize)
}

/// Monic polynomial from coefficients listed from `x^(n-1)` down to the constant term.
fn monic(desc: &[Rational]) -> QPoly {
    let mut c: Vec<Rational> = desc.iter().rev().cloned().collect();
    c.push(rat(1));
    QPoly::new(c)
}

/// Solution `y^{l_i}` for `Lambda = (lambda, w2)`, `z = (0, 1)`.
pub fn appendix_solution(lambda: Weight, case: usize) -> Result<PolyPair> {
    lambda.require_dominant()?;
    if case > 6 {
        return Err(Error::InvalidInput(format!("case index {case} out of range 0..=6")));
    }
    if !admissible_ls(lambda)?.contains(&case) {
        return Err(Error::NotAdmissible { l1: lambda.0, l2: lambda.1, case });
    }
    let c = Ctx { l1: rat(lambda.0), l2: rat(lambda.1), lambda, case };
    let (l1, l2) = (c.l1.clone(), c.l2.clone());
    let one = QPoly::one();
    let pair = match case {
        0 => PolyPair::new(one.clone(), one),
        1 => {
            let r = c.div(l2.clone(), c.lin(0, 1, 1))?;
            PolyPair::new(one, monic(&[-r]))
        }
        2 => {
            let a = c.lin(3, 1, 3);
            let b = c.lin(3, 1, 4);
            let r1 = c.div(&l1 * &a, c.lin(1, 0, 1) * &b)?;
            let r2 = c.div(a, b)?;
            PolyPair::new(monic(&[-r1]), monic(&[-r2]))
        }
        3 => {
            let (p, q, r, s, t) = (c.lin(3, 1, 3), c.lin(3, 2, 4), c.lin(3, 1, 5), c.lin(3, 2, 6), c.lin(0, 1, 2));
            let y1 = monic(&[-c.div(&p * &q, &r * &s)?]);
            let inner = c.lin(3, 5, 6) + rat(3) * &l1 * &l2 + &l2 * &l2;
            let b1 = c.div(rat(-2) * &q * &inner, &t * &r * &s)?;
            let b0 = c.div(&l2 * &p * pw(&q, 2), &t * &r * pw(&s, 2))?;
            PolyPair::new(y1, monic(&[b1, b0]))
        }
        4 => {
            let (a, b, d) = (c.lin(1, 1, 1), c.lin(3, 2, 4), c.lin(1, 1, 2));
            let e = c.lin(3, 2, 5);
            let y1 = monic(&[-c.div(&a * &b, &d * &e)?]);
            let u = rat(3) * &l1 * &l2 + rat(2) * &l2 * &l2 - rat(2) * &l1 + rat(3) * &l2 - rat(2);
            let v = rat(3) * &l1 * &l2 + rat(2) * &l2 * &l2 + rat(2) * &l1 + rat(6) * &l2 + rat(4);
            let l2m = c.lin(0, 1, -1);
            let l2p = c.lin(0, 1, 1);
            let c2 = c.div(rat(-3) * &a * &u, &l2 * &d * &e)?;
            let c1 = c.div(rat(3) * &l2m * pw(&a, 2) * &b * &v, &l2 * &l2p * pw(&d, 2) * pw(&e, 2))?;
            let c0 = c.div(-(&l2m * pw(&a, 3) * pw(&b, 2)), &l2p * pw(&d, 3) * pw(&e, 2))?;
            PolyPair::new(y1, monic(&[c2, c1, c0]))
        }
        5 => {
            let (a, b, d, e) = (c.lin(2, 1, 2), c.lin(3, 1, 2), c.lin(2, 1, 3), c.lin(3, 1, 3));
            let (f, g, h, k) = (c.lin(3, 2, 5), c.lin(3, 2, 4), c.lin(3, 1, 4), c.lin(1, 0, 1));
            let q1 = rat(3) * &l1 * &l1 + rat(2) * &l1 * &l2 + rat(6) * &l1 + &l2 + rat(3);
            let a1 = c.div(rat(-2) * &a * &b * &q1, &k * &d * &e * &f)?;
            let a0 = c.div(&l1 * pw(&a, 2) * &b * &g, &k * pw(&d, 2) * &h * &f)?;
            let q2 = rat(9) * &l1 * &l1 + rat(9) * &l1 * &l2 + rat(2) * &l2 * &l2 + rat(20) * &l1 + rat(9) * &l2 + rat(11);
            let q3 = rat(9) * &l1 * &l1 + rat(9) * &l1 * &l2 + rat(2) * &l2 * &l2 + rat(25) * &l1 + rat(12) * &l2 + rat(18);
            let b2 = c.div(rat(-3) * &a * &q2, &d * &e * &f)?;
            let b1 = c.div(rat(3) * &b * pw(&a, 2) * &g * &q3, pw(&d, 2) * &e * &h * pw(&f, 2))?;
            let b0 = c.div(-(pw(&a, 3) * &b * pw(&g, 2)), pw(&d, 3) * &h * pw(&f, 2))?;
            PolyPair::new(monic(&[a1, a0]), monic(&[b2, b1, b0]))
        }
        6 => case_six(&c)?,
        _ => unreachable!(),
    };
    Ok(pair)
}

fn case_six(c: &Ctx) -> Result<PolyPair> {
    let (l1, l2) = (&c.l1, &c.l2);
    let p = |e: &Rational, n: i32| pw(e, n);
    let (s, a, d, e, g) = (c.lin(1, 1, 2), c.lin(2, 1, 2), c.lin(2, 1, 3), c.lin(3, 1, 4), c.lin(3, 2, 4));
    let (h, m, t, u, v) = (c.lin(3, 2, 3), c.lin(1, 1, 1), c.lin(3, 1, 3), c.lin(3, 2, 5), c.lin(0, 1, 1));
    let w = c.lin(0, 1, 2);

    let q1 = rat(3) * l1 * l1 + rat(4) * l1 * l2 + l2 * l2 + rat(8) * l1 + rat(5) * l2 + rat(6);
    let a1 = c.div(rat(-2) * &a * &h * &q1, &s * &d * &e * &g)?;
    let a0 = c.div(&m * p(&a, 2) * &t * &h, &s * p(&d, 2) * &e * &u)?;

    let poly = |cs: &[i64]| -> Rational {
        cs.iter().enumerate().fold(Rational::zero(), |acc, (k, &x)| acc + rat(x) * p(l2, k as i32))
    };
    // Coefficients as polynomials in l1 whose coefficients are polynomials in l2.
    let in_l1 = |rows: &[Rational]| -> Rational {
        rows.iter().enumerate().fold(Rational::zero(), |acc, (k, r)| acc + r * p(l1, k as i32))
    };

    let c3_num = in_l1(&[
        rat(2) * p(&w, 2) * poly(&[9, 18, 11, 2]),
        poly(&[228, 578, 528, 208, 30]),
        poly(&[270, 562, 372, 80]),
        rat(3) * poly(&[47, 78, 30]),
        rat(9) * poly(&[3, 4]),
    ]);
    let c3 = c.div(rat(2) * c3_num, &v * &s * &d * &e * &g)?;

    let c2_num = in_l1(&[
        rat(2) * p(&w, 2) * poly(&[27, 60, 47, 16, 2]),
        rat(2) * poly(&[366, 1049, 1165, 634, 170, 18]),
        poly(&[978, 2498, 2263, 880, 125]),
        rat(3) * poly(&[215, 493, 333, 70]),
        rat(3) * poly(&[70, 147, 57]),
        rat(27) * poly(&[1, 2]),
    ]);
    let c2 = c.div(
        rat(6) * c2_num * &m * &a * &h,
        &v * p(&s, 2) * p(&d, 2) * &e * p(&g, 2) * &u,
    )?;

    let c1_num = in_l1(&[
        rat(2) * p(&w, 2) * poly(&[3, 4, 1]),
        rat(2) * poly(&[18, 47, 31, 6]),
        rat(2) * poly(&[9, 28, 11]),
        rat(3) * poly(&[1, 4]),
    ]);
    let c1 = c.div(
        rat(2) * c1_num * p(&m, 2) * p(&a, 2) * p(&h, 2),
        &v * p(&s, 3) * p(&d, 3) * &e * &g * &u,
    )?;

    let c0 = c.div(
        l2 * p(&m, 3) * p(&a, 3) * &t * p(&h, 2),
        &v * p(&s, 3) * p(&d, 3) * &e * p(&u, 2),
    )?;

    Ok(PolyPair::new(monic(&[a1, a0]), monic(&[-c3, c2, -c1, c0])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn small_cases() {
        let y = appendix_solution(Weight(1, 1), 1).unwrap();
        assert_eq!(y.y1, QPoly::one());
        assert_eq!(y.y2, QPoly::new(vec![frac(-1, 2), rat(1)]));
        let y = appendix_solution(Weight(1, 0), 2).unwrap();
        assert_eq!(y.y1, QPoly::new(vec![frac(-3, 7), rat(1)]));
        assert_eq!(y.y2, QPoly::new(vec![frac(-6, 7), rat(1)]));
        let y = appendix_solution(Weight(3, 2), 0).unwrap();
        assert!(y.y1.is_constant() && y.y2.is_constant());
    }

    #[test]
    fn inadmissible_rejected() {
        assert!(matches!(appendix_solution(Weight(0, 1), 2), Err(Error::NotAdmissible { .. })));
        assert!(matches!(appendix_solution(Weight(1, 1), 4), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn degrees_match_l() {
        for a in 0..4 {
            for b in 0..4 {
                for case in admissible_ls(Weight(a, b)).unwrap() {
                    let y = appendix_solution(Weight(a, b), case).unwrap();
                    let (d1, d2) = super::super::CASES[case];
                    assert_eq!((y.y1.deg(), y.y2.deg()), (d1, d2), "lambda=({a},{b}) case {case}");
                }
            }
        }
    }
}
