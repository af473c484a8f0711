use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, Rational};

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The coefficient vector never carries trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: F, n: usize) -> Self {
        let mut v = vec![F::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: &F) -> Self {
        Self::new(vec![-r.clone(), F::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn lead(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(l) => self.scale(&(F::one() / l)),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect() }
    }

    /// Multiply by `x^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero(); n];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Order of vanishing at zero; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(x + a)`.
    pub fn translate(&self, a: &F) -> Self {
        self.compose(&Self::new(vec![a.clone(), F::one()]))
    }

    /// Euclidean division over the field. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv_lead = F::one() / &d.lead();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() * &inv_lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = c.clone() * dc;
                    r[i + j] -= &t;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        F::poly_gcd(self, other)
    }

    pub fn is_squarefree(&self) -> bool {
        self.is_zero() || self.gcd(&self.derivative()).is_constant()
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_constant()
    }

    /// Human-readable rendering in the variable `var`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let compound = s.contains(' ');
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = if compound { format!("({body})") } else { body };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{body}*{mono}"));
            }
        }
        out
    }
}

impl Poly<Rational> {
    /// Positive integer content times sign of the leading coefficient.
    pub fn primitive_part(&self) -> (Rational, Poly<BigInt>) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return (Rational::zero(), Poly { coeffs: Vec::new() });
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (Rational::new(g, den), Poly { coeffs: prim })
    }

    pub fn from_integer_poly(p: &Poly<BigInt>) -> Self {
        Poly::new(p.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Evaluate in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let cs: Vec<f64> = self.coeffs.iter().map(super::to_f64).collect();
        cs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: &Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() { (self, o) } else { (o, self) };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::new(v)
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = self.coeffs.clone();
        v.resize(n, F::zero());
        for (a, b) in v.iter_mut().zip(&o.coeffs) {
            *a -= b;
        }
        Poly::new(v)
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: &Poly<F>) -> Poly<F> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let t = a.clone() * b;
                v[i + j] += &t;
            }
        }
        Poly::new(v)
    }
}

impl<'a, F: Field> Neg for &'a Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! owned_poly_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, o: Poly<F>) -> Poly<F> { $tr::$m(&self, &o) }
        }
        impl<'a, F: Field> $tr<&'a Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, o: &Poly<F>) -> Poly<F> { $tr::$m(&self, o) }
        }
    )*};
}
owned_poly_ops!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

pub(super) fn euclid_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = r.monic();
    }
    a.monic()
}

fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // Pseudo-remainder of a by b (both nonzero, deg a >= deg b).
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let lr = r[k].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k - db + j] -= &lr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn int_primitive(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let mut g = BigInt::zero();
    for c in v.iter() {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
}

/// Primitive remainder sequence over Z, result made monic over Q.
pub(super) fn primitive_gcd(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (_, pa) = a.primitive_part();
    let (_, pb) = b.primitive_part();
    let (mut u, mut v) = if pa.coeffs.len() >= pb.coeffs.len() { (pa.coeffs, pb.coeffs) } else { (pb.coeffs, pa.coeffs) };
    while !v.is_empty() {
        let mut r = int_prem(&u, &v);
        int_primitive(&mut r);
        u = v;
        v = r;
    }
    let g = Poly::new(u.into_iter().map(Rational::from_integer).collect());
    g.monic()
}

/// Wronskian determinant of a list of polynomials, computed by fraction-free
/// elimination over the polynomial ring.
pub fn wronskian<F: Field>(fs: &[Poly<F>]) -> Poly<F> {
    let n = fs.len();
    if n == 0 {
        return Poly::one();
    }
    let mut m: Vec<Vec<Poly<F>>> = (0..n).map(|i| fs.iter().map(|f| f.nth_derivative(i)).collect()).collect();
    bareiss_det(&mut m)
}

/// Determinant of a square matrix of polynomials (destroys the input).
pub(crate) fn bareiss_det<F: Field>(m: &mut [Vec<Poly<F>>]) -> Poly<F> {
    let n = m.len();
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat, QPoly};
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(QPoly::zero().deg(), -1);
    }

    #[test]
    fn division() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        assert!(b.divides(&a));
        assert!(!p(&[1, 1]).divides(&a));
    }

    #[test]
    fn gcd_monic() {
        let a = &p(&[-1, 1]) * &p(&[2, 3]);
        let b = &p(&[-1, 1]) * &p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&QPoly::zero()), QPoly::new(vec![frac(1, 2), rat(1)]));
    }

    #[test]
    fn render_forms() {
        assert_eq!(QPoly::new(vec![frac(-1, 2), rat(1)]).to_string(), "x - 1/2");
        assert_eq!(p(&[3, 0, -1]).to_string(), "-x^2 + 3");
        assert_eq!(QPoly::new(vec![rat(0), frac(3, 2)]).to_string(), "3/2*x");
    }

    #[test]
    fn wronskian_monomials() {
        // Wr(1, x, x^2) = 2
        assert_eq!(wronskian(&[p(&[1]), p(&[0, 1]), p(&[0, 0, 1])]), p(&[2]));
        // Wr(x, x^3) = 2x^3
        assert_eq!(wronskian(&[p(&[0, 1]), p(&[0, 0, 0, 1])]), p(&[0, 0, 0, 2]));
        // dependent
        assert!(wronskian(&[p(&[1, 1]), p(&[2, 2])]).is_zero());
    }

    #[test]
    fn translate_and_compose() {
        let f = p(&[0, 0, 1]);
        assert_eq!(f.translate(&rat(1)), p(&[1, 2, 1]));
        assert_eq!(f.compose(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-6i64..6, 0..6).prop_map(|v| QPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn div_rem_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.deg() < b.deg());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let ac = &a * &c;
            let bc = &b * &c;
            let g = ac.gcd(&bc);
            prop_assert!(g.divides(&ac));
            prop_assert!(g.divides(&bc));
            if !c.is_zero() {
                prop_assert!(g.divides(&c) || c.divides(&g));
                prop_assert!(c.monic().divides(&g));
            }
            let ge = euclid_gcd(&ac, &bc);
            prop_assert_eq!(g, ge);
        }

        #[test]
        fn leibniz(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
        }

        #[test]
        fn wronskian_two(a in arb_poly(), b in arb_poly()) {
            let w = wronskian(&[a.clone(), b.clone()]);
            prop_assert_eq!(w, &(&a * &b.derivative()) - &(&a.derivative() * &b));
        }
    }
}
