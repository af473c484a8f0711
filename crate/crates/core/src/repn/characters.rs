use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rootdata::{bilinear_i64, positive_roots, simple_reflection, Weight};

/// Multiset of highest weights.
pub type Decomposition = BTreeMap<Weight, u64>;

/// Dimension of the irreducible module with highest weight `lambda` (Weyl's formula).
pub fn weyl_dim(lambda: Weight) -> Result<u64> {
    lambda.require_dominant()?;
    Ok(weyl_dim_unchecked(lambda))
}

fn weyl_dim_unchecked(lambda: Weight) -> u64 {
    let shifted = lambda + Weight::RHO;
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for b in positive_roots() {
        num *= bilinear_i64(shifted, b) as i128;
        den *= bilinear_i64(Weight::RHO, b) as i128;
    }
    (num / den) as u64
}

/// Dominant conjugate of `w` and the number of reflections used (its parity gives the sign).
pub fn dominant_conjugate(mut w: Weight) -> (Weight, usize) {
    let mut steps = 0;
    loop {
        if w.0 < 0 {
            w = simple_reflection(1, w);
        } else if w.1 < 0 {
            w = simple_reflection(2, w);
        } else {
            return (w, steps);
        }
        steps += 1;
    }
}

/// True when `lambda - mu` is a nonnegative integer combination of simple roots.
pub fn precedes(mu: Weight, lambda: Weight) -> bool {
    let (a, b) = (lambda - mu).root_coords();
    a >= 0 && b >= 0
}

fn multiplicity_cache() -> &'static Mutex<HashMap<Weight, Arc<BTreeMap<Weight, u64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<Weight, Arc<BTreeMap<Weight, u64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Multiplicities of all dominant weights of `V_lambda` (Freudenthal's recursion).
pub fn dominant_multiplicities(lambda: Weight) -> Result<Arc<BTreeMap<Weight, u64>>> {
    lambda.require_dominant()?;
    if let Some(m) = multiplicity_cache().lock().unwrap().get(&lambda) {
        return Ok(m.clone());
    }
    let (c1, c2) = lambda.root_coords();
    let mut doms: Vec<Weight> = Vec::new();
    for a in 0..=c1 {
        for b in 0..=c2 {
            let mu = Weight::from_root_coords(c1 - a, c2 - b);
            if mu.is_dominant() {
                doms.push(mu);
            }
        }
    }
    // Highest first.
    doms.sort_by_key(|mu| {
        let (x, y) = mu.root_coords();
        std::cmp::Reverse(x + y)
    });
    let lr = lambda + Weight::RHO;
    let norm_l = bilinear_i64(lr, lr);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    let lookup = |mult: &BTreeMap<Weight, u64>, w: Weight| -> u64 {
        let (d, _) = dominant_conjugate(w);
        if precedes(d, lambda) {
            *mult.get(&d).unwrap_or(&0)
        } else {
            0
        }
    };
    for mu in doms {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut s: i64 = 0;
        for alpha in positive_roots() {
            let mut k = 1;
            loop {
                let w = mu + k * alpha;
                let m = lookup(&mult, w);
                if m == 0 {
                    break;
                }
                s += m as i64 * bilinear_i64(w, alpha);
                k += 1;
            }
        }
        let mr = mu + Weight::RHO;
        let den = norm_l - bilinear_i64(mr, mr);
        let m = 2 * s / den;
        debug_assert_eq!(2 * s % den, 0);
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    let arc = Arc::new(mult);
    multiplicity_cache().lock().unwrap().insert(lambda, arc.clone());
    Ok(arc)
}

/// Multiplicity of the weight `mu` in `V_lambda`.
pub fn weight_multiplicity(lambda: Weight, mu: Weight) -> Result<u64> {
    let doms = dominant_multiplicities(lambda)?;
    let (d, _) = dominant_conjugate(mu);
    Ok(*doms.get(&d).unwrap_or(&0))
}

/// All weights of `V_lambda` with multiplicities.
pub fn character(lambda: Weight) -> Result<BTreeMap<Weight, u64>> {
    let doms = dominant_multiplicities(lambda)?;
    let group = crate::rootdata::weyl_group();
    let mut out = BTreeMap::new();
    for (&mu, &m) in doms.iter() {
        for e in &group {
            out.insert(e.act(mu), m);
        }
    }
    Ok(out)
}

fn tensor_cache() -> &'static Mutex<HashMap<(Weight, Weight), Arc<Decomposition>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Weight, Weight), Arc<Decomposition>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Decomposition of `V_lambda (x) V_nu` into irreducibles (Brauer-Klimyk).
pub fn tensor_decompose(lambda: Weight, nu: Weight) -> Result<Decomposition> {
    Ok((*tensor_decompose_shared(lambda, nu)?).clone())
}

pub(crate) fn tensor_decompose_shared(lambda: Weight, nu: Weight) -> Result<Arc<Decomposition>> {
    lambda.require_dominant()?;
    nu.require_dominant()?;
    // Iterate over the weights of the smaller factor.
    let (big, small) = if weyl_dim_unchecked(lambda) >= weyl_dim_unchecked(nu) { (lambda, nu) } else { (nu, lambda) };
    if let Some(d) = tensor_cache().lock().unwrap().get(&(big, small)) {
        return Ok(d.clone());
    }
    let mut signed: BTreeMap<Weight, i64> = BTreeMap::new();
    for (kappa, m) in character(small)? {
        let eta = big + kappa + Weight::RHO;
        let (d, steps) = dominant_conjugate(eta);
        if d.0 == 0 || d.1 == 0 {
            continue;
        }
        let sign = if steps % 2 == 0 { 1 } else { -1 };
        *signed.entry(d - Weight::RHO).or_default() += sign * m as i64;
    }
    let mut out = Decomposition::new();
    for (w, c) in signed {
        if c < 0 {
            return Err(Error::Consistency(format!("negative multiplicity {c} at {w} in {lambda} x {nu}")));
        }
        if c > 0 {
            out.insert(w, c as u64);
        }
    }
    let arc = Arc::new(out);
    tensor_cache().lock().unwrap().insert((big, small), arc.clone());
    Ok(arc)
}

/// Decomposition of a tensor product of several irreducibles (empty list gives the trivial module).
pub fn tensor_decompose_many(weights: &[Weight]) -> Result<Decomposition> {
    let mut cur = Decomposition::from([(Weight::ZERO, 1)]);
    for &w in weights {
        w.require_dominant()?;
        if w == Weight::ZERO {
            continue;
        }
        let mut next = Decomposition::new();
        for (&mu, &m) in &cur {
            for (&nu, &n) in tensor_decompose_shared(mu, w)?.iter() {
                *next.entry(nu).or_default() += m * n;
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// `dim Hom(V_xi, V_w1 (x) ... (x) V_wn)`.
pub fn hom_dim(xi: Weight, weights: &[Weight]) -> Result<u64> {
    xi.require_dominant()?;
    Ok(*tensor_decompose_many(weights)?.get(&xi).unwrap_or(&0))
}

/// Dimension of the invariant subspace of `V_w1 (x) ... (x) V_wn`.
pub fn invariant_dim(weights: &[Weight]) -> Result<u64> {
    hom_dim(Weight::ZERO, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_dimensions() {
        assert_eq!(weyl_dim(Weight(0, 0)).unwrap(), 1);
        assert_eq!(weyl_dim(Weight(0, 1)).unwrap(), 7);
        assert_eq!(weyl_dim(Weight(1, 0)).unwrap(), 14);
        assert_eq!(weyl_dim(Weight(0, 2)).unwrap(), 27);
        assert_eq!(weyl_dim(Weight(1, 1)).unwrap(), 64);
        assert_eq!(weyl_dim(Weight(2, 0)).unwrap(), 77);
        assert_eq!(weyl_dim(Weight(0, 3)).unwrap(), 77);
        assert!(weyl_dim(Weight(-1, 0)).is_err());
    }

    #[test]
    fn seven_dim_weights() {
        let ch = character(Weight(0, 1)).unwrap();
        assert_eq!(ch.values().sum::<u64>(), 7);
        assert_eq!(ch.get(&Weight(0, 0)), Some(&1));
        let adj = character(Weight(1, 0)).unwrap();
        assert_eq!(adj.get(&Weight(0, 0)), Some(&2));
    }

    #[test]
    fn square_of_seven() {
        let d = tensor_decompose(Weight(0, 1), Weight(0, 1)).unwrap();
        let want: Decomposition = [(Weight(0, 2), 1), (Weight(1, 0), 1), (Weight(0, 1), 1), (Weight(0, 0), 1)].into();
        assert_eq!(d, want);
    }

    #[test]
    fn invariants() {
        let s = Weight(0, 1);
        assert_eq!(invariant_dim(&[s, s, s]).unwrap(), 1);
        assert_eq!(invariant_dim(&[s, s, s, s]).unwrap(), 4);
        assert_eq!(invariant_dim(&[s]).unwrap(), 0);
        assert_eq!(invariant_dim(&[]).unwrap(), 1);
        assert_eq!(invariant_dim(&[Weight(1, 0), Weight(1, 0)]).unwrap(), 1);
    }
}
