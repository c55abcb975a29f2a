use gwh::group::{automorphism_from_matrix, make_abelian_group, Action};
use gwh::harness::{Config, HSpec, Normalization};
use gwh::heisenberg::{GwhElement, GwhGroup};
use gwh::repr::{fourier_k, fourier_quasi, inverse_fourier_k, inverse_fourier_quasi, rep_monomial, Monomial, Rep, Space, StateVector};
use gwh::wavelet::{orthogonality_sum, wavelet_constant};
use num_complex::Complex64;
use proptest::prelude::*;

fn orders() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=6, 1..=2)
}

/// `Z_p` with the units generated by `u`, or a trivial action on random orders.
fn group_strategy() -> impl Strategy<Value = GwhGroup> {
    prop_oneof![
        (orders(), 1usize..=2).prop_map(|(o, mult)| {
            let k = make_abelian_group(&o).unwrap();
            let m = k.exponent() * mult;
            GwhGroup::normalized(Action::trivial(k), m).unwrap()
        }),
        (prop::sample::select(vec![3i64, 5, 7]), 2i64..7).prop_map(|(p, u)| {
            let k = make_abelian_group(&[p]).unwrap();
            let u = if u % p == 0 { 1 } else { u };
            let t = automorphism_from_matrix(&k, &[vec![u]]).unwrap();
            GwhGroup::normalized(Action::generated(k, &[t], 64).unwrap(), p as usize).unwrap()
        }),
    ]
}

fn state(group: &GwhGroup, space: Space, seed: &[(f64, f64)]) -> StateVector {
    let dim = space.dim(group);
    let values = (0..dim).map(|i| seed[i % seed.len()]).map(|(a, b)| Complex64::new(a, b)).collect::<Vec<_>>();
    let mut v = StateVector::new(group, space, values).unwrap();
    if v.norm() == 0.0 {
        v = StateVector::delta(group, space, 0).unwrap();
    }
    v
}

fn seeds() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..40)
}

fn element(group: &GwhGroup, i: usize) -> GwhElement {
    group.element(i % group.size())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative_with_inverses(g in group_strategy(), i in any::<usize>(), j in any::<usize>(), l in any::<usize>()) {
        let (a, b, c) = (element(&g, i), element(&g, j.wrapping_mul(31)), element(&g, l.wrapping_mul(17)));
        prop_assert_eq!(g.gwh_mul(&g.gwh_mul(&a, &b), &c), g.gwh_mul(&a, &g.gwh_mul(&b, &c)));
        prop_assert_eq!(g.gwh_mul(&a, &g.gwh_inv(&a)), g.identity());
        prop_assert_eq!(g.index_of(&a), i % g.size());
    }

    #[test]
    fn representations_are_homomorphisms(g in group_strategy(), i in any::<usize>(), j in any::<usize>()) {
        let (a, b) = (element(&g, i), element(&g, j));
        for rep in Rep::ALL {
            let lhs = rep_monomial(&g, rep, &a).compose(&rep_monomial(&g, rep, &b));
            prop_assert!(lhs.deviation(&rep_monomial(&g, rep, &g.gwh_mul(&a, &b))) < 1e-12);
            let m = rep_monomial(&g, rep, &a);
            prop_assert!(m.compose(&m.adjoint()).deviation(&Monomial::identity(m.dim())) < 1e-12);
        }
    }

    #[test]
    fn fourier_transforms_are_unitary(g in group_strategy(), s in seeds()) {
        let f = state(&g, Space::Group, &s);
        let fh = fourier_k(&g, &f).unwrap();
        prop_assert!((fh.norm_sqr() - f.norm_sqr()).abs() <= 1e-12 * f.norm_sqr());
        prop_assert!(inverse_fourier_k(&g, &fh).unwrap().distance(&f) <= 1e-12 * f.norm());
        let q = state(&g, Space::Quasi, &s);
        let qh = fourier_quasi(&g, &q).unwrap();
        prop_assert!((qh.norm_sqr() - q.norm_sqr()).abs() <= 1e-12 * q.norm_sqr());
        prop_assert!(inverse_fourier_quasi(&g, &qh).unwrap().distance(&q) <= 1e-12 * q.norm());
    }

    #[test]
    fn orthogonality_relation_holds(g in group_strategy(), s in seeds(), t in seeds(), mass in 0.25f64..8.0) {
        let phi = state(&g, Space::Dual, &s);
        let psi = state(&g, Space::Dual, &t);
        let norms = phi.norm_sqr() * psi.norm_sqr();
        let sum = orthogonality_sum(&g, &phi, &psi).unwrap();
        prop_assert!((sum - norms).abs() <= 1e-9 * norms);
        let scaled = g.clone().with_weights(g.weights().with_h_mass(g.h_order(), mass));
        let sum = orthogonality_sum(&scaled, &phi, &psi).unwrap();
        prop_assert!((sum - norms * mass).abs() <= 1e-9 * norms * mass);
    }

    #[test]
    fn wavelet_constant_scales_quartically(g in group_strategy(), s in seeds(), c in 0.1f64..3.0) {
        let psi = state(&g, Space::Dual, &s);
        let c1 = wavelet_constant(&g, Rep::Pi, &psi).unwrap();
        let c2 = wavelet_constant(&g, Rep::Pi, &psi.scaled(Complex64::new(0.0, c))).unwrap();
        prop_assert!((c2 - c.powi(4) * c1).abs() <= 1e-9 * c2);
    }

    #[test]
    fn characters_are_multiplicative(o in orders(), a in any::<usize>(), k1 in any::<usize>(), k2 in any::<usize>()) {
        let k = make_abelian_group(&o).unwrap();
        let (a, k1, k2) = (a % k.size(), k1 % k.size(), k2 % k.size());
        let lhs = k.char_value(a, k.add(k1, k2));
        prop_assert!((lhs - k.char_value(a, k1) * k.char_value(a, k2)).norm() < 1e-12);
        prop_assert!((k.char_value(a, k1) - k.char_value(k1, a)).norm() < 1e-12);
    }

    #[test]
    fn config_round_trips(o in orders(), seed in any::<u64>(), mass in 0.5f64..4.0) {
        let cfg = Config {
            name: None,
            orders: o,
            h_spec: HSpec::Trivial,
            torus_order: None,
            normalization: Normalization { mu_h_total: mass },
            tolerance: 1e-9,
            seed,
        };
        let back = Config::from_json(&cfg.to_json().unwrap()).unwrap();
        prop_assert_eq!(back.hash(), cfg.hash());
        prop_assert_eq!(back, cfg);
    }
}
