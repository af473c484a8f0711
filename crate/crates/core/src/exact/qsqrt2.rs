use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{Field, Rational};

/// Element `a + b*sqrt(2)` of Q(sqrt 2).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QSqrt2 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn sqrt2() -> Self {
        QSqrt2 { a: Rational::zero(), b: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        QSqrt2 { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a^2 - 2 b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl From<Rational> for QSqrt2 {
    fn from(a: Rational) -> Self {
        QSqrt2 { a, b: Rational::zero() }
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}*sqrt2", self.a, sign, self.b.abs())
            }
        }
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        QSqrt2 { a: Rational::zero(), b: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        QSqrt2 { a: Rational::one(), b: Rational::zero() }
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 { a: -self.a, b: -self.b }
    }
}

impl<'a> Add<&'a QSqrt2> for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2 { a: self.a + &o.a, b: self.b + &o.b }
    }
}

impl<'a> Sub<&'a QSqrt2> for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2 { a: self.a - &o.a, b: self.b - &o.b }
    }
}

impl<'a> Mul<&'a QSqrt2> for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: &QSqrt2) -> QSqrt2 {
        let two = Rational::from_integer(2.into());
        QSqrt2 {
            a: &self.a * &o.a + two * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl<'a> Div<&'a QSqrt2> for QSqrt2 {
    type Output = QSqrt2;
    fn div(self, o: &QSqrt2) -> QSqrt2 {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt2)");
        let p = self * &o.conj();
        QSqrt2 { a: p.a / &n, b: p.b / &n }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, o: QSqrt2) -> QSqrt2 { $tr::$m(self, &o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl<'a> AddAssign<&'a QSqrt2> for QSqrt2 {
    fn add_assign(&mut self, o: &QSqrt2) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl<'a> SubAssign<&'a QSqrt2> for QSqrt2 {
    fn sub_assign(&mut self, o: &QSqrt2) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl<'a> MulAssign<&'a QSqrt2> for QSqrt2 {
    fn mul_assign(&mut self, o: &QSqrt2) {
        *self = std::mem::take(self) * o;
    }
}

impl Field for QSqrt2 {
    fn from_i64(n: i64) -> Self {
        QSqrt2::from(Rational::from_integer(n.into()))
    }
    fn from_rational(q: &Rational) -> Self {
        QSqrt2::from(q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> QSqrt2 {
        QSqrt2::new(rat(a), rat(b))
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = QSqrt2::sqrt2();
        assert_eq!(s.clone() * &s, q(2, 0));
    }

    #[test]
    fn inverse() {
        let x = q(1, 1);
        let y = x.inv().unwrap();
        assert_eq!(y, q(-1, 1));
        assert_eq!(x * &y, QSqrt2::one());
        assert!(QSqrt2::zero().inv().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(q(3, 0).to_string(), "3");
        assert_eq!(q(0, -2).to_string(), "-2*sqrt2");
        assert_eq!(QSqrt2::new(frac(1, 2), rat(-1)).to_string(), "1/2 - 1*sqrt2");
    }

    proptest! {
        #[test]
        fn field_axioms(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20, e in -9i64..9, f in -9i64..9) {
            let x = q(a, b);
            let y = q(c, d);
            let z = q(e, f);
            prop_assert_eq!((x.clone() + &y) * &z, x.clone() * &z + y.clone() * &z);
            prop_assert_eq!(x.clone() * &y, y.clone() * &x);
            if !y.is_zero() {
                prop_assert_eq!((x.clone() / &y) * &y, x.clone());
            }
            prop_assert_eq!((x.clone() * &y).norm(), x.norm() * y.norm());
        }
    }
}
