use std::sync::OnceLock;

use proptest::prelude::*;

use g2_gaudin::diffop::{conjugate, DyInstance, QRatFunc};
use g2_gaudin::exact::{rat, QPoly};
use g2_gaudin::repn::{invariant_dim, tensor_decompose, weyl_dim};
use g2_gaudin::rootdata::{casimir_value, shifted_reflection, Weight};
use g2_gaudin::sgrass::{is_self_self_dual, kappa, space_wronskian, PolySpace, RamificationData};
use g2_gaudin::strat::{enumerate_nontrivial, StratumLabel};

fn weight() -> impl Strategy<Value = Weight> {
    (0i64..4, 0i64..4).prop_map(|(a, b)| Weight(a, b))
}

proptest! {
    #[test]
    fn tensor_dimensions_add_up(l in weight(), m in weight()) {
        let dec = tensor_decompose(l, m).unwrap();
        let total: u64 = dec.iter().map(|(w, k)| k * weyl_dim(*w).unwrap()).sum();
        prop_assert_eq!(total, weyl_dim(l).unwrap() * weyl_dim(m).unwrap());
        prop_assert_eq!(dec, tensor_decompose(m, l).unwrap());
    }

    #[test]
    fn modules_are_self_dual(l in weight(), m in weight()) {
        prop_assert_eq!(invariant_dim(&[l, m]).unwrap(), (l == m) as u64);
    }

    #[test]
    fn shifted_reflections_are_involutions(a in -6i64..6, b in -6i64..6, j in 1usize..=2) {
        let w = Weight(a, b);
        let s = shifted_reflection(j, w);
        prop_assert_eq!(shifted_reflection(j, s), w);
        prop_assert_eq!(casimir_value(s), casimir_value(w));
    }

    #[test]
    fn stratum_labels_round_trip(d in 7i64..12) {
        for label in enumerate_nontrivial(d).unwrap() {
            let back: StratumLabel = label.to_string().parse().unwrap();
            prop_assert_eq!(back.d(), d);
            prop_assert_eq!(back, label);
        }
    }
}

struct Fixture {
    space: PolySpace,
    ram: RamificationData,
    dy: g2_gaudin::diffop::DiffOp,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        [(Weight(0, 1), 0), (Weight(1, 1), 1), (Weight(2, 1), 3)]
            .into_iter()
            .map(|(lambda, case)| {
                let inst = DyInstance::new(lambda, case).unwrap();
                let space = PolySpace::new(inst.kernel().unwrap()).unwrap();
                let ram = RamificationData::from_weights(inst.data.points.clone(), &inst.data.weights, &[0, 0]).unwrap();
                Fixture { space, ram, dy: inst.dy }
            })
            .collect()
    })
}

/// Basis change by a product of unit lower and unit upper triangular integer matrices.
fn rebase(basis: &[QPoly], lower: &[i64], upper: &[i64]) -> Vec<QPoly> {
    let n = basis.len();
    let step = |b: &[QPoly], m: &[i64], low: bool| -> Vec<QPoly> {
        (0..n)
            .map(|i| {
                let mut p = b[i].clone();
                for j in 0..n {
                    let take = if low { j < i } else { j > i };
                    if take {
                        p = &p + &b[j].scale(&rat(m[i * n + j]));
                    }
                }
                p
            })
            .collect()
    };
    step(&step(basis, lower, true), upper, false)
}

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-3i64..4, 1..3).prop_map(|cs| {
        let p = QPoly::from_i64s(&cs);
        if p.is_zero() { QPoly::one() } else { p }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn space_invariants_ignore_the_basis(
        which in 0usize..3,
        lower in prop::collection::vec(-2i64..3, 49),
        upper in prop::collection::vec(-2i64..3, 49),
    ) {
        let f = &fixtures()[which];
        let y = PolySpace::new(rebase(f.space.basis(), &lower, &upper)).unwrap();
        prop_assert!(y.same_span(&f.space));
        prop_assert_eq!(space_wronskian(&y), space_wronskian(&f.space));
        prop_assert!(is_self_self_dual(&y, &f.ram).unwrap());
    }

    #[test]
    fn invariant_form_is_symmetric(
        which in 0usize..3,
        cu in prop::collection::vec(-3i64..4, 7),
        cv in prop::collection::vec(-3i64..4, 7),
    ) {
        let f = &fixtures()[which];
        let combo = |c: &[i64]| {
            f.space.basis().iter().zip(c).fold(QPoly::zero(), |acc, (p, &k)| &acc + &p.scale(&rat(k)))
        };
        let (u, v) = (combo(&cu), combo(&cv));
        prop_assert_eq!(kappa(&f.space, &f.ram, &u, &v).unwrap(), kappa(&f.space, &f.ram, &v, &u).unwrap());
    }

    #[test]
    fn conjugation_composes(which in 0usize..3, p in small_poly(), q in small_poly()) {
        let d = &fixtures()[which].dy;
        let (fp, fq) = (QRatFunc::from_poly(p.clone()), QRatFunc::from_poly(q.clone()));
        let twice = conjugate(&conjugate(d, &fp).unwrap(), &fq).unwrap();
        let once = conjugate(d, &QRatFunc::from_poly(&p * &q)).unwrap();
        prop_assert_eq!(twice.clone(), once);
        prop_assert_eq!(conjugate(&twice, &QRatFunc::from_poly(QPoly::one())).unwrap(), twice);
    }
}
