//! Root datum of G2 in fundamental-weight coordinates.
//!
//! Index 1 is the long simple root, index 2 the short one. Weights are pairs
//! `(a, b)` meaning `a*w1 + b*w2`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};

/// Integral weight in the basis of fundamental weights.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Weight(pub i64, pub i64);

impl Weight {
    pub const ZERO: Weight = Weight(0, 0);
    pub const OMEGA1: Weight = Weight(1, 0);
    pub const OMEGA2: Weight = Weight(0, 1);
    pub const RHO: Weight = Weight(1, 1);

    pub fn is_dominant(self) -> bool {
        self.0 >= 0 && self.1 >= 0
    }

    pub fn require_dominant(self) -> Result<Self> {
        if self.is_dominant() {
            Ok(self)
        } else {
            Err(Error::NotDominant(self.0, self.1))
        }
    }

    /// Pairing with the simple coroot `j` (1 or 2).
    pub fn coroot_pairing(self, j: usize) -> i64 {
        match j {
            1 => self.0,
            2 => self.1,
            _ => panic!("simple index must be 1 or 2"),
        }
    }

    /// The level `2a + b`; one seventh of the size of the attached partition.
    pub fn level(self) -> i64 {
        2 * self.0 + self.1
    }

    /// Coordinates `(c1, c2)` with `self = c1*alpha1 + c2*alpha2`.
    pub fn root_coords(self) -> (i64, i64) {
        (2 * self.0 + self.1, 3 * self.0 + 2 * self.1)
    }

    pub fn from_root_coords(c1: i64, c2: i64) -> Weight {
        // alpha1 = (2,-3), alpha2 = (-1,2)
        Weight(2 * c1 - c2, -3 * c1 + 2 * c2)
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight(self.0 + o.0, self.1 + o.1)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight(self.0 - o.0, self.1 - o.1)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0, -self.1)
    }
}

impl std::ops::Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight(self * w.0, self * w.1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Weight> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected a weight 'a,b', got {s:?}")));
        }
        let a = parts[0].parse().map_err(|_| Error::Parse(format!("bad weight {s:?}")))?;
        let b = parts[1].parse().map_err(|_| Error::Parse(format!("bad weight {s:?}")))?;
        Ok(Weight(a, b))
    }
}

/// Cartan matrix with `a_ij = <alpha_j, coroot_i>`.
pub const CARTAN: [[i64; 2]; 2] = [[2, -1], [-3, 2]];

/// Symmetrizing diagonal: `diag(3,1) * CARTAN` is symmetric.
pub const SYMMETRIZER: [i64; 2] = [3, 1];

pub fn simple_root(j: usize) -> Weight {
    match j {
        1 => Weight(2, -3),
        2 => Weight(-1, 2),
        _ => panic!("simple index must be 1 or 2"),
    }
}

/// The six positive roots, simple ones first.
pub fn positive_roots() -> [Weight; 6] {
    let r = |c1: i64, c2: i64| c1 * simple_root(1) + c2 * simple_root(2);
    [r(1, 0), r(0, 1), r(1, 1), r(1, 2), r(1, 3), r(2, 3)]
}

/// `sum l1*alpha1 + l2*alpha2`.
pub fn root_combination(l1: i64, l2: i64) -> Weight {
    l1 * simple_root(1) + l2 * simple_root(2)
}

/// Invariant form normalized so that `(alpha2, alpha2) = 2`.
pub fn bilinear(x: Weight, y: Weight) -> Rational {
    rat(bilinear_i64(x, y))
}

pub fn bilinear_i64(x: Weight, y: Weight) -> i64 {
    // (w1,w1)=6, (w1,w2)=3, (w2,w2)=2
    6 * x.0 * y.0 + 3 * (x.0 * y.1 + x.1 * y.0) + 2 * x.1 * y.1
}

/// Eigenvalue `(mu, mu + 2 rho)` of the quadratic Casimir on the irreducible module of highest weight `mu`.
pub fn casimir_value(mu: Weight) -> i64 {
    bilinear_i64(mu, mu + 2 * Weight::RHO)
}

pub fn simple_reflection(j: usize, w: Weight) -> Weight {
    w - w.coroot_pairing(j) * simple_root(j)
}

/// Shifted action `s(w + rho) - rho`.
pub fn shifted_reflection(j: usize, w: Weight) -> Weight {
    simple_reflection(j, w + Weight::RHO) - Weight::RHO
}

/// Weyl group element stored as a 2x2 integer matrix acting on weight coordinates,
/// with a reduced word for display.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    mat: [[i64; 2]; 2],
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { mat: [[1, 0], [0, 1]], word: Vec::new() }
    }

    pub fn simple(j: usize) -> Self {
        Self::identity().then_reflect(j)
    }

    /// Product `s_{w[0]} s_{w[1]} ...`; the rightmost reflection acts first.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let mut e = Self::identity();
        for &j in word.iter() {
            if j != 1 && j != 2 {
                return Err(Error::InvalidInput(format!("bad simple index {j}")));
            }
            e = e.compose(&Self::simple(j));
        }
        Ok(e.reduce())
    }

    /// `s_j * self`.
    fn then_reflect(&self, j: usize) -> Self {
        let s = match j {
            1 => [[-1, 0], [3, 1]],
            _ => [[1, 1], [0, -1]],
        };
        let mut word = vec![j as u8];
        word.extend(&self.word);
        WeylElement { mat: mat_mul(s, self.mat), word }
    }

    pub fn compose(&self, o: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend(&o.word);
        WeylElement { mat: mat_mul(self.mat, o.mat), word }
    }

    pub fn act(&self, w: Weight) -> Weight {
        Weight(self.mat[0][0] * w.0 + self.mat[0][1] * w.1, self.mat[1][0] * w.0 + self.mat[1][1] * w.1)
    }

    pub fn act_shifted(&self, w: Weight) -> Weight {
        self.act(w + Weight::RHO) - Weight::RHO
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&j| j as usize).collect()
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.mat
    }

    pub fn sign(&self) -> i64 {
        let m = self.mat;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    fn reduce(self) -> Self {
        weyl_group().into_iter().find(|e| e.mat == self.mat).expect("matrix lies in the Weyl group")
    }
}

fn mat_mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// All twelve Weyl group elements with reduced words, in order of length.
pub fn weyl_group() -> Vec<WeylElement> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([WeylElement::identity()]);
    seen.insert(WeylElement::identity().mat);
    while let Some(e) = queue.pop_front() {
        for j in [1, 2] {
            let n = e.then_reflect(j);
            if seen.insert(n.mat) {
                queue.push_back(n);
            }
        }
        out.push(e);
    }
    out
}

/// Partition attached to the weight `lambda` with shift `k`: seven parts, last part `k`,
/// consecutive differences `l1, l2, l1, l1, l2, l1` read from the top.
pub fn partition_from_weight(lambda: Weight, k: i64) -> [i64; 7] {
    let (a, b) = (lambda.0, lambda.1);
    [4 * a + 2 * b + k, 3 * a + 2 * b + k, 3 * a + b + k, 2 * a + b + k, a + b + k, a + k, k]
}

/// Inverse of [`partition_from_weight`] when the partition has the right shape.
pub fn weight_from_partition(p: &[i64; 7]) -> Option<(Weight, i64)> {
    let k = p[6];
    let a = p[5] - k;
    let b = p[4] - p[5];
    let w = Weight(a, b);
    (partition_from_weight(w, k) == *p).then_some((w, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_symmetrizable() {
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(SYMMETRIZER[i] * CARTAN[i][j], SYMMETRIZER[j] * CARTAN[j][i]);
            }
        }
    }

    #[test]
    fn form_matches_cartan() {
        // (alpha_i, alpha_j) = d_i a_ij
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(bilinear_i64(simple_root(i), simple_root(j)), SYMMETRIZER[i - 1] * CARTAN[i - 1][j - 1]);
            }
        }
        // <w, coroot_j> = 2 (w, alpha_j)/(alpha_j, alpha_j)
        let w = Weight(3, -5);
        for j in 1..=2 {
            let a = simple_root(j);
            assert_eq!(2 * bilinear_i64(w, a), w.coroot_pairing(j) * bilinear_i64(a, a));
        }
    }

    #[test]
    fn rho_and_roots() {
        let roots = positive_roots();
        let sum = roots.iter().fold(Weight::ZERO, |acc, &r| acc + r);
        assert_eq!(sum, 2 * Weight::RHO);
        assert_eq!(Weight::RHO.root_coords(), (3, 5));
        assert_eq!(Weight::from_root_coords(2, 3), Weight::OMEGA1);
        assert_eq!(Weight::from_root_coords(1, 2), Weight::OMEGA2);
    }

    #[test]
    fn weyl_group_order_and_longest() {
        let w = weyl_group();
        assert_eq!(w.len(), 12);
        let longest = w.last().unwrap();
        assert_eq!(longest.length(), 6);
        assert_eq!(longest.act(Weight(3, 7)), Weight(-3, -7));
        let orbit: BTreeSet<Weight> = w.iter().map(|e| e.act(Weight::RHO)).collect();
        assert_eq!(orbit.len(), 12);
    }

    #[test]
    fn shifted_action_examples() {
        assert_eq!(shifted_reflection(2, Weight(0, 0)), Weight(1, -2));
        assert_eq!(shifted_reflection(1, Weight(0, 0)), Weight(-2, 3));
        let e = WeylElement::from_word(&[2, 1]).unwrap();
        assert_eq!(e.act_shifted(Weight(1, 1)), shifted_reflection(2, shifted_reflection(1, Weight(1, 1))));
    }

    #[test]
    fn casimir_values() {
        assert_eq!(casimir_value(Weight(0, 0)), 0);
        assert_eq!(casimir_value(Weight(0, 1)), 12);
        assert_eq!(casimir_value(Weight(1, 0)), 24);
        assert_eq!(casimir_value(Weight(0, 2)), 28);
    }

    #[test]
    fn partitions() {
        assert_eq!(partition_from_weight(Weight(0, 1), 0), [2, 2, 1, 1, 1, 0, 0]);
        assert_eq!(partition_from_weight(Weight(1, 0), 0), [4, 3, 3, 2, 1, 1, 0]);
        for a in 0..4 {
            for b in 0..4 {
                for k in 0..3 {
                    let p = partition_from_weight(Weight(a, b), k);
                    assert_eq!(p.iter().sum::<i64>(), 7 * (2 * a + b + k));
                    assert_eq!(weight_from_partition(&p), Some((Weight(a, b), k)));
                }
            }
        }
        assert_eq!(weight_from_partition(&[3, 2, 2, 1, 1, 0, 0]), None);
    }
}
