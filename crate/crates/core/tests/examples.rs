//! Worked values through the public API, each against a hand computation.

use std::sync::Arc;

use swcorr::berezin::{berezin_symbol, BerezinOptions};
use swcorr::compact::{CompactIrrep, CompactSwc, IrrepParams, IrrepRegistry, OrbitPoint, Su2Spin, U1Character};
use swcorr::diffop::{weyl_symbol_diffop, DiffOperator};
use swcorr::fock::{
    coherent_state, evaluate, gaussian_moment, inner_product, monomial_norm_sq, FockBasis, FockOperator, FockVector,
    MultiIndex,
};
use swcorr::heisenberg::{
    dpi0_matrix, g0_multiply, omega, parity_matrix, phi_lambda, pi0_matrix, unitarity_defect, HeisenbergAlgebraElement,
    HeisenbergElement,
};
use swcorr::linalg::max_abs;
use swcorr::motion::{MotionElement, MotionGroup};
use swcorr::quadrature::sphere_grid;
use swcorr::weyl::{quantizer0, weyl_symbol, weyl_symbol_regularized};
use swcorr::{CMatrix, Error, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn mi(v: &[usize]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

#[test]
fn monomial_norms_and_moments() {
    assert!((monomial_norm_sq(&mi(&[1]), 1.0) - 2.0).abs() < 1e-15);
    assert!((monomial_norm_sq(&mi(&[2, 1]), 0.5) - 2.0).abs() < 1e-15);
    assert!((gaussian_moment(&mi(&[1]), &mi(&[1]), 1.0).unwrap() - 0.5).abs() < 1e-15);
    assert_eq!(gaussian_moment(&mi(&[1]), &mi(&[2]), 1.0).unwrap(), 0.0);
    assert!((gaussian_moment(&mi(&[0, 0]), &mi(&[0, 0]), 2.0).unwrap() - 0.25).abs() < 1e-15);
}

#[test]
fn coherent_state_coefficients() {
    let b = FockBasis::new(1, 1.0, 30).unwrap();
    let e = coherent_state(&[c(2.0, 0.0)], &b).unwrap();
    assert!((e.coeffs()[1] - c(2f64.sqrt(), 0.0)).norm() < 1e-14);
    // |z|² = 2λ ln 4 gives ⟨e_z, e_z⟩ = 4
    let big = FockBasis::new(1, 1.0, 60).unwrap();
    let r = (2.0 * 4f64.ln()).sqrt();
    let e = coherent_state(&[c(r, 0.0)], &big).unwrap();
    assert!((inner_product(&e, &e).unwrap() - 4.0).norm() < 1e-12);
    let mut unit = vec![c(0.0, 0.0); b.dim()];
    unit[1] = c(1.0, 0.0);
    let f = FockVector::new(&b, unit).unwrap();
    assert!((evaluate(&f, &[c(2.0, 0.0)]).unwrap() - 2f64.sqrt()).norm() < 1e-14);
}

#[test]
fn symplectic_form_and_group_law() {
    assert!((omega(&[c(1.0, 0.0)], &[c(0.0, 1.0)]).unwrap() - 1.0).abs() < 1e-15);
    let g = HeisenbergElement::new(vec![c(1.0, 0.0)], 0.0);
    let h = HeisenbergElement::new(vec![c(0.0, 1.0)], 0.0);
    let gh = g0_multiply(&g, &h).unwrap();
    assert!((gh.z0[0] - c(1.0, 1.0)).norm() < 1e-15);
    assert!((gh.c0 - 0.5).abs() < 1e-15);
    assert!(matches!(
        omega(&[c(1.0, 0.0)], &[c(1.0, 0.0), c(0.0, 0.0)]),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn generator_matrices() {
    let b = FockBasis::new(1, 1.0, 6).unwrap();
    let z = dpi0_matrix(&HeisenbergAlgebraElement::z(1), &b).unwrap();
    assert!(max_abs(&(z.matrix() - CMatrix::identity(7, 7) * c(0.0, 1.0))) < 1e-15);
    let x = dpi0_matrix(&HeisenbergAlgebraElement::x(1, 0), &b).unwrap();
    assert!((x.matrix()[(1, 0)] - c(0.0, 0.5 * 2f64.sqrt())).norm() < 1e-15);
    let r = parity_matrix(&FockBasis::new(2, 1.0, 4).unwrap());
    let sq = r.matrix() * r.matrix();
    assert!(max_abs(&(sq - CMatrix::identity(15, 15) * c(16.0, 0.0))) < 1e-15);
}

#[test]
fn orbit_map_and_defect() {
    let z = [c(0.7, -0.3)];
    let phi = phi_lambda(&[c(0.0, 0.0)], 1.5);
    assert!((phi.gamma - 1.5).abs() < 1e-15);
    let at = phi_lambda(&z, 1.0);
    assert!((at.pair(&HeisenbergAlgebraElement::x(1, 0)).unwrap() - 0.7).abs() < 1e-15);
    let g = HeisenbergElement::new(vec![c(0.3, 0.0)], 0.0);
    let defects: Vec<f64> = [8, 12, 16]
        .iter()
        .map(|&n| unitarity_defect(&g, &FockBasis::new(1, 1.0, n).unwrap(), 4).unwrap())
        .collect();
    assert!(defects[0] > defects[1] && defects[1] > defects[2]);
}

#[test]
fn vacuum_column_of_displacement() {
    let lambda = 1.0;
    let b = FockBasis::new(1, lambda, 40).unwrap();
    let z0 = c(0.3, -0.2);
    let c0 = 0.4;
    let m = pi0_matrix(&HeisenbergElement::new(vec![z0], c0), &b).unwrap();
    let scalar = (c(0.0, lambda * c0) - lambda / 4.0 * z0.norm_sqr()).exp();
    // exp(½i z̄₀ w) is the coherent state at −iλz₀
    let e = coherent_state(&[c(0.0, -lambda) * z0], &b).unwrap();
    for i in 0..10 {
        assert!((m.matrix()[(i, 0)] - scalar * e.coeffs()[i]).norm() < 1e-12);
    }
}

#[test]
fn berezin_values() {
    let b = FockBasis::new(1, 1.0, 40).unwrap();
    let opts = BerezinOptions::default();
    let z = [c(0.6, 0.8)];
    let id = berezin_symbol(&FockOperator::identity(&b), &z, opts).unwrap().value;
    assert!((id - 1.0).norm() < 1e-15);
    let number = DiffOperator::monomial(mi(&[1]), mi(&[1]), 1.0).unwrap().matrix(&b).unwrap();
    assert!((berezin_symbol(&number, &z, opts).unwrap().value - 0.5).norm() < 1e-10);
}

#[test]
fn weyl_values() {
    let b = FockBasis::new(1, 1.0, 4).unwrap();
    let vac = FockOperator::matrix_unit(&b, &mi(&[0]), &mi(&[0])).unwrap();
    assert!((weyl_symbol(&vac, &[c(0.0, 0.0)]).unwrap() - 2.0).norm() < 1e-15);
    let big = FockBasis::new(1, 1.0, 30).unwrap();
    let number = DiffOperator::monomial(mi(&[1]), mi(&[1]), 1.0).unwrap().matrix(&big).unwrap();
    assert!((weyl_symbol_regularized(&number, &[c(0.0, 0.0)], 4).unwrap() + 0.5).norm() < 1e-12);
    let z = [c(0.4, -1.1)];
    let w = weyl_symbol_diffop(&mi(&[1]), &mi(&[0]), 0.8).eval(&z);
    assert!((w - z[0]).norm() < 1e-15);
    // the normalized coherent projector at z has symbol 2ⁿ at z
    let e = coherent_state(&[c(0.3, 0.2)], &big).unwrap();
    let norm = inner_product(&e, &e).unwrap().re;
    let proj = FockOperator::outer(&e, &e).unwrap().scale(c(1.0 / norm, 0.0));
    assert!((weyl_symbol(&proj, &[c(0.3, 0.2)]).unwrap() - 2.0).norm() < 1e-9);
    let q = quantizer0(&[c(0.2, 0.5)], &b).unwrap();
    assert!(max_abs(&(q.matrix() - q.matrix().adjoint())) < 1e-12);
}

#[test]
fn sphere_integral_of_cos_squared() {
    let g = sphere_grid(4, 2.0).unwrap();
    let v: f64 = g.nodes().iter().zip(g.weights()).map(|(x, w)| w * x[2] * x[2]).sum();
    assert!((v - 2.0 / 3.0).abs() < 1e-14);
}

#[test]
fn spin_half_symbols() {
    let k: Arc<dyn CompactIrrep> = Arc::new(Su2Spin::new(0.5).unwrap());
    let jz = Su2Spin::new(0.5).unwrap().spin_matrices()[2].clone();
    let north = k.base_point();
    assert!((k.berezin_symbol_k(&jz, &north).unwrap() - 0.5).norm() < 1e-15);
    let theta: f64 = 1.1;
    let phi = OrbitPoint::new(vec![0.5 * theta.sin(), 0.0, 0.5 * theta.cos()]);
    assert!((k.berezin_symbol_k(&jz, &phi).unwrap() - 0.5 * theta.cos()).norm() < 1e-14);
    let swc = CompactSwc::build(k.clone(), k.min_grid_order()).unwrap();
    let id = CMatrix::identity(2, 2);
    assert!((swc.w1(&id, &phi).unwrap() - 1.0).norm() < 1e-10);
    let q = swc.quantizer1(&north).unwrap();
    let expected = CMatrix::identity(2, 2) * c(0.5, 0.0) + jz * c(3f64.sqrt(), 0.0);
    assert!(max_abs(&(q - expected)) < 1e-8);
    let south = OrbitPoint::new(vec![0.0, 0.0, -0.5]);
    assert!(k.section(&south).is_err());
    let s = k.section(&phi).unwrap();
    assert!(k.coadjoint(&s, &north).distance(&phi) < 1e-12);
}

#[test]
fn u1_cross_term() {
    let k = U1Character::new(1);
    let z = [c(0.6, -0.9)];
    let iz: Vec<C64> = z.iter().map(|w| w * c(0.0, 1.0)).collect();
    let cross = k.cross(&z, &z).unwrap();
    let a = CMatrix::from_element(1, 1, c(0.0, 1.0));
    // ⟨z×z, i⟩ = ω(z, iz) = |z|²
    assert!((k.pair(&cross, &a) - omega(&z, &iz).unwrap()).abs() < 1e-15);
    assert!((k.pair(&cross, &a) - z[0].norm_sqr()).abs() < 1e-14);
}

#[test]
fn registry_builds_by_name() {
    let reg = IrrepRegistry::standard();
    let mut names = reg.names();
    names.sort();
    assert_eq!(names, vec!["su2", "u1"]);
    let params = IrrepParams { j: 1.0, charge: 3 };
    assert_eq!(reg.build("su2", &params).unwrap().dim_v(), 3);
    assert_eq!(reg.build("u1", &params).unwrap().dim_v(), 1);
    assert!(matches!(reg.build("so3", &params), Err(Error::UnknownName { .. })));
}

#[test]
fn motion_base_point() {
    let k: Arc<dyn CompactIrrep> = Arc::new(Su2Spin::new(0.5).unwrap());
    let g = MotionGroup::new(k, 1.3, 4).unwrap();
    let xi = g.psi(&[c(0.0, 0.0), c(0.0, 0.0)], &g.irrep().base_point()).unwrap();
    assert!(xi.distance(&g.xi0()) < 1e-15);
    let e = MotionElement::identity(2);
    let (z, phi) = g.act(&e, &[c(0.1, 0.2), c(0.3, 0.4)], &g.irrep().base_point()).unwrap();
    assert!((z[1] - c(0.3, 0.4)).norm() < 1e-15);
    assert!(phi.distance(&g.irrep().base_point()) < 1e-15);
}
