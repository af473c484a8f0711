use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};


use super::{Field, Poly};

/// Reduced fraction of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    /// Build `num / den`, reducing to lowest terms. Panics on a zero denominator.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let l = d.lead();
        if !l.is_one() {
            let inv = F::one() / &l;
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<Poly<F>> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    /// `f'/f`. Panics on zero.
    pub fn log_derivative(&self) -> Self {
        assert!(!self.is_zero(), "log derivative of zero");
        // (n/d)'/(n/d) = n'/n - d'/d
        let a = Self::new(self.num.derivative(), self.num.clone());
        let b = Self::new(self.den.derivative(), self.den.clone());
        &a - &b
    }

    pub fn pow(&self, e: i32) -> Self {
        if e >= 0 {
            RatFunc { num: self.num.pow(e as u32), den: self.den.pow(e as u32) }
        } else {
            self.recip().expect("negative power of zero").pow(-e)
        }
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / &d)
        }
    }

    /// Degree of the numerator minus degree of the denominator (`None` for zero).
    pub fn degree_at_infinity(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.num.deg() - self.den.deg())
    }

    /// Laurent expansion at `p`: returns the order `v` and coefficients
    /// `c_0..c_{n-1}` with `f = sum c_i (x-p)^(v+i)`. `None` for zero.
    pub fn laurent_at(&self, p: &F, n: usize) -> Option<(i64, Vec<F>)> {
        if self.is_zero() {
            return None;
        }
        let a = self.num.translate(p);
        let b = self.den.translate(p);
        let va = a.valuation().unwrap();
        let vb = b.valuation().unwrap();
        let a: Vec<F> = a.coeffs()[va..].to_vec();
        let b: Vec<F> = b.coeffs()[vb..].to_vec();
        Some((va as i64 - vb as i64, power_series_div(&a, &b, n)))
    }

    /// Laurent expansion at infinity in the local parameter `1/x`: `f = sum c_i x^(-(v+i))`.
    pub fn laurent_at_infinity(&self, n: usize) -> Option<(i64, Vec<F>)> {
        if self.is_zero() {
            return None;
        }
        let a: Vec<F> = self.num.coeffs().iter().rev().cloned().collect();
        let b: Vec<F> = self.den.coeffs().iter().rev().cloned().collect();
        Some((self.den.deg() - self.num.deg(), power_series_div(&a, &b, n)))
    }

    /// Coefficient of `(x-p)^(-1)`.
    pub fn residue_at(&self, p: &F) -> F {
        match self.laurent_at(p, 1) {
            None => F::zero(),
            Some((v, _)) if v >= 0 => F::zero(),
            Some((v, _)) => {
                let k = (-1 - v) as usize;
                self.laurent_at(p, k + 1).unwrap().1[k].clone()
            }
        }
    }

    /// Pole order at `p` (0 when regular).
    pub fn pole_order_at(&self, p: &F) -> usize {
        if self.is_zero() {
            return 0;
        }
        let b = self.den.translate(p);
        b.valuation().unwrap()
    }
}

/// First `n` coefficients of a/b as power series; `b[0]` must be nonzero.
fn power_series_div<F: Field>(a: &[F], b: &[F], n: usize) -> Vec<F> {
    let inv = F::one() / &b[0];
    let mut out: Vec<F> = Vec::with_capacity(n);
    for k in 0..n {
        let mut s = a.get(k).cloned().unwrap_or_else(F::zero);
        for j in 1..=k.min(b.len().saturating_sub(1)) {
            let t = b[j].clone() * &out[k - j];
            s -= &t;
        }
        out.push(s * &inv);
    }
    out
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Field> Poly<F> {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.lead().is_one()
    }
}

impl<F: Field> From<Poly<F>> for RatFunc<F> {
    fn from(p: Poly<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<'a, F: Field> Add<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, o: &RatFunc<F>) -> RatFunc<F> {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let sd = self.den.exact_div(&g).unwrap();
        let od = o.den.exact_div(&g).unwrap();
        let n = &(&self.num * &od) + &(&o.num * &sd);
        RatFunc::new(n, &sd * &o.den)
    }
}

impl<'a, F: Field> Sub<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, o: &RatFunc<F>) -> RatFunc<F> {
        self + &(-o)
    }
}

impl<'a, F: Field> Mul<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, o: &RatFunc<F>) -> RatFunc<F> {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel before multiplying to keep degrees small.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = o.den.exact_div(&g1).unwrap();
        let n2 = o.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFunc::new(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a, F: Field> Div<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, o: &RatFunc<F>) -> RatFunc<F> {
        self * &o.recip().expect("rational function division by zero")
    }
}

impl<'a, F: Field> Neg for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_rf_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<RatFunc<F>> for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, o: RatFunc<F>) -> RatFunc<F> { $tr::$m(&self, &o) }
        }
    )*};
}
owned_rf_ops!(Add add, Sub sub, Mul mul, Div div);

impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        -&self
    }
}

impl<F: Field> Default for RatFunc<F> {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat, QPoly, Rational};
    use proptest::prelude::*;

    type Q = RatFunc<Rational>;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn reduces() {
        let f = Q::new(p(&[-2, 2]), p(&[-3, 0, 3]));
        assert_eq!(f.num(), &QPoly::constant(frac(2, 3)));
        assert_eq!(f.den(), &p(&[1, 1]));
    }

    #[test]
    fn residues() {
        // 3/(x-1) + 1/x^2
        let f = &Q::new(p(&[3]), p(&[-1, 1])) + &Q::new(p(&[1]), p(&[0, 0, 1]));
        assert_eq!(f.residue_at(&rat(1)), rat(3));
        assert_eq!(f.residue_at(&rat(0)), rat(0));
        assert_eq!(f.pole_order_at(&rat(0)), 2);
        // log derivative of x^2 (x-1)^5 has residue 2 at 0 and 5 at 1
        let g = Q::from_poly(&p(&[0, 0, 1]) * &p(&[-1, 1]).pow(5));
        let lg = g.log_derivative();
        assert_eq!(lg.residue_at(&rat(0)), rat(2));
        assert_eq!(lg.residue_at(&rat(1)), rat(5));
    }

    #[test]
    fn laurent_infinity() {
        // (x^2 + 1)/(x) = x + 1/x
        let f = Q::new(p(&[1, 0, 1]), p(&[0, 1]));
        let (v, c) = f.laurent_at_infinity(3).unwrap();
        assert_eq!(v, -1);
        assert_eq!(c, vec![rat(1), rat(0), rat(1)]);
    }

    fn arb_rf() -> impl Strategy<Value = Q> {
        (prop::collection::vec(-5i64..5, 0..4), prop::collection::vec(-5i64..5, 1..4))
            .prop_filter_map("nonzero den", |(n, d)| {
                let d = QPoly::from_i64s(&d);
                (!d.is_zero()).then(|| Q::new(QPoly::from_i64s(&n), d))
            })
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn derivative_product(a in arb_rf(), b in arb_rf()) {
            prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
            if !a.is_zero() {
                prop_assert_eq!(a.log_derivative(), &a.derivative() / &a);
            }
        }
    }
}
