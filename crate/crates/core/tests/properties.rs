use std::sync::Arc;

use proptest::prelude::*;
use swcorr::berezin::{berezin_symbol, BerezinOptions};
use swcorr::compact::{su2_rotation, CompactIrrep, CompactSwc, KDual, Su2Spin};
use swcorr::fock::{FockBasis, FockOperator};
use swcorr::heisenberg::{g0_multiply, omega, HeisenbergElement};
use swcorr::motion::{adjoint, coadjoint, MotionAlgebraElement, MotionDual, MotionElement};
use swcorr::weyl::{quantizer0, weyl_symbol};
use swcorr::{CMatrix, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn vec2() -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.5..1.5f64, -1.5..1.5f64).prop_map(|(a, b)| c(a, b)), 2)
}

fn heisenberg() -> impl Strategy<Value = HeisenbergElement> {
    (vec2(), -2.0..2.0f64).prop_map(|(z, c0)| HeisenbergElement::new(z, c0))
}

fn unit_axis() -> impl Strategy<Value = [f64; 3]> {
    (0.0..std::f64::consts::PI, 0.0..2.0 * std::f64::consts::PI)
        .prop_map(|(t, p)| [t.sin() * p.cos(), t.sin() * p.sin(), t.cos()])
}

fn su2() -> impl Strategy<Value = CMatrix> {
    (unit_axis(), -3.0..3.0f64).prop_map(|(axis, theta)| su2_rotation(axis, theta))
}

fn motion() -> impl Strategy<Value = MotionElement> {
    (vec2(), -2.0..2.0f64, su2()).prop_map(|(z, c0, k)| MotionElement::new(z, c0, k).unwrap())
}

fn su2_algebra() -> impl Strategy<Value = CMatrix> {
    prop::array::uniform3(-1.0..1.0f64).prop_map(|x| {
        let spin = Su2Spin::new(0.5).unwrap();
        spin.algebra_element(&x)
    })
}

fn motion_algebra() -> impl Strategy<Value = MotionAlgebraElement> {
    (vec2(), -1.0..1.0f64, su2_algebra()).prop_map(|(v, c0, a)| MotionAlgebraElement::new(v, c0, a).unwrap())
}

fn dual() -> impl Strategy<Value = MotionDual> {
    (vec2(), -1.0..1.0f64, prop::collection::vec(-1.0..1.0f64, 3)).prop_map(|(u, d, phi)| MotionDual {
        u,
        d,
        phi: KDual { coords: phi },
    })
}

/// Random operator supported on degrees `< 4` of a one-variable basis.
fn small_operator() -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b)| c(a, b)), 16)
}

fn embed(entries: &[C64], basis: &FockBasis) -> FockOperator {
    let m = CMatrix::from_fn(basis.dim(), basis.dim(), |i, j| {
        if i < 4 && j < 4 {
            entries[4 * i + j]
        } else {
            c(0.0, 0.0)
        }
    });
    FockOperator::new(basis, m).unwrap()
}

fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn omega_is_antisymmetric_and_real_bilinear(z in vec2(), w in vec2(), u in vec2(), s in -2.0..2.0f64) {
        let a = omega(&z, &w).unwrap();
        prop_assert!((a + omega(&w, &z).unwrap()).abs() < 1e-12);
        prop_assert!(omega(&z, &z).unwrap().abs() < 1e-12);
        let sum: Vec<C64> = z.iter().zip(&u).map(|(x, y)| x * s + y).collect();
        let lin = s * a + omega(&u, &w).unwrap();
        prop_assert!((omega(&sum, &w).unwrap() - lin).abs() < 1e-10);
    }

    #[test]
    fn heisenberg_group_laws(g in heisenberg(), h in heisenberg(), k in heisenberg()) {
        let gh_k = g0_multiply(&g0_multiply(&g, &h).unwrap(), &k).unwrap();
        let g_hk = g0_multiply(&g, &g0_multiply(&h, &k).unwrap()).unwrap();
        prop_assert!(close(&gh_k.z0, &g_hk.z0, 1e-12));
        prop_assert!((gh_k.c0 - g_hk.c0).abs() < 1e-12);
        let e = g0_multiply(&g, &g.inverse()).unwrap();
        prop_assert!(e.z0.iter().all(|z| z.norm() < 1e-12) && e.c0.abs() < 1e-12);
    }

    #[test]
    fn heisenberg_action_composes(g in heisenberg(), h in heisenberg(), z in vec2(), lambda in 0.3..3.0f64) {
        let gh = g0_multiply(&g, &h).unwrap();
        let lhs = gh.act(&z, lambda);
        let rhs = g.act(&h.act(&z, lambda), lambda);
        prop_assert!(close(&lhs, &rhs, 1e-11));
    }

    #[test]
    fn motion_group_laws(g in motion(), h in motion(), k in motion()) {
        let gh_k = g.multiply(&h).unwrap().multiply(&k).unwrap();
        let g_hk = g.multiply(&h.multiply(&k).unwrap()).unwrap();
        prop_assert!(gh_k.distance(&g_hk) < 1e-11);
        let e = g.multiply(&g.inverse()).unwrap();
        prop_assert!(e.distance(&MotionElement::identity(2)) < 1e-12);
    }

    #[test]
    fn adjoint_is_a_lie_homomorphism(g in motion(), x in motion_algebra(), y in motion_algebra()) {
        let lhs = adjoint(&g, &x.bracket(&y).unwrap()).unwrap();
        let rhs = adjoint(&g, &x).unwrap().bracket(&adjoint(&g, &y).unwrap()).unwrap();
        prop_assert!(lhs.distance(&rhs) < 1e-10);
    }

    #[test]
    fn coadjoint_preserves_pairing(g in motion(), x in motion_algebra(), xi in dual()) {
        let irrep = Su2Spin::new(0.5).unwrap();
        let before = xi.pair(&x, &irrep).unwrap();
        let after = coadjoint(&g, &xi, &irrep).unwrap().pair(&adjoint(&g, &x).unwrap(), &irrep).unwrap();
        prop_assert!((before - after).abs() < 1e-10);
    }

    #[test]
    fn adjoint_and_coadjoint_are_actions(g in motion(), h in motion(), x in motion_algebra(), xi in dual()) {
        let irrep = Su2Spin::new(0.5).unwrap();
        let gh = g.multiply(&h).unwrap();
        let ad = adjoint(&gh, &x).unwrap();
        prop_assert!(ad.distance(&adjoint(&g, &adjoint(&h, &x).unwrap()).unwrap()) < 1e-10);
        let co = coadjoint(&gh, &xi, &irrep).unwrap();
        let co2 = coadjoint(&g, &coadjoint(&h, &xi, &irrep).unwrap(), &irrep).unwrap();
        prop_assert!(co.distance(&co2) < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symbols_of_adjoints_are_conjugate(entries in small_operator(), x in -1.0..1.0f64, y in -1.0..1.0f64) {
        let basis = FockBasis::new(1, 1.0, 30).unwrap();
        let a = embed(&entries, &basis);
        let z = [c(x, y)];
        let w = weyl_symbol(&a, &z).unwrap();
        let wa = weyl_symbol(&a.adjoint(), &z).unwrap();
        prop_assert!((wa - w.conj()).norm() < 1e-10 * (1.0 + w.norm()));
        let s = berezin_symbol(&a, &z, BerezinOptions::default()).unwrap().value;
        let sa = berezin_symbol(&a.adjoint(), &z, BerezinOptions::default()).unwrap().value;
        prop_assert!((sa - s.conj()).norm() < 1e-10 * (1.0 + s.norm()));
    }

    #[test]
    fn quantizer_is_self_adjoint(z in vec2(), lambda in 0.5..2.0f64) {
        let basis = FockBasis::new(2, lambda, 8).unwrap();
        let q = quantizer0(&z, &basis).unwrap().into_matrix();
        let scale = 1.0 + q.iter().map(|e| e.norm()).fold(0.0, f64::max);
        let defect = (&q - q.adjoint()).iter().map(|e| e.norm()).fold(0.0, f64::max);
        prop_assert!(defect < 1e-12 * scale);
    }

    #[test]
    fn compact_symbol_is_real_on_hermitian(entries in prop::collection::vec(-1.0..1.0f64, 8), axis in unit_axis()) {
        let irrep: Arc<dyn CompactIrrep> = Arc::new(Su2Spin::new(0.5).unwrap());
        let swc = CompactSwc::build(irrep.clone(), irrep.min_grid_order()).unwrap();
        let a = CMatrix::from_fn(2, 2, |i, j| c(entries[2 * i + j], entries[4 + 2 * i + j]));
        let r = irrep.orbit_radius();
        let phi = swcorr::compact::OrbitPoint::new(axis.iter().map(|x| x * r).collect());
        let w = swc.w1(&a, &phi).unwrap();
        let wa = swc.w1(&a.adjoint(), &phi).unwrap();
        prop_assert!((wa - w.conj()).norm() < 1e-12);
        let h = &a + a.adjoint();
        prop_assert!(swc.w1(&h, &phi).unwrap().im.abs() < 1e-12);
    }
}
