//! Arithmetic in `G = H_n ⋊ K`, its Lie algebra and its dual.

use crate::compact::{CompactIrrep, KDual, OrbitPoint};
use crate::error::{Error, Result};
use crate::heisenberg::{omega, HeisenbergElement};
use crate::linalg::{mat_vec, CMatrix, C64, I};

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::DimensionMismatch { expected, actual });
    }
    Ok(())
}

fn check_square(m: &CMatrix, n: usize) -> Result<()> {
    check_len(n, m.nrows())?;
    check_len(n, m.ncols())
}

/// `(z₀, c₀, k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MotionElement {
    pub z0: Vec<C64>,
    pub c0: f64,
    pub k: CMatrix,
}

impl MotionElement {
    pub fn new(z0: Vec<C64>, c0: f64, k: CMatrix) -> Result<Self> {
        check_square(&k, z0.len())?;
        Ok(MotionElement { z0, c0, k })
    }

    pub fn identity(n: usize) -> Self {
        MotionElement {
            z0: vec![C64::new(0.0, 0.0); n],
            c0: 0.0,
            k: CMatrix::identity(n, n),
        }
    }

    pub fn from_heisenberg(g: &HeisenbergElement) -> Self {
        let n = g.n();
        MotionElement {
            z0: g.z0.clone(),
            c0: g.c0,
            k: CMatrix::identity(n, n),
        }
    }

    pub fn from_k(k: CMatrix) -> Self {
        MotionElement {
            z0: vec![C64::new(0.0, 0.0); k.nrows()],
            c0: 0.0,
            k,
        }
    }

    pub fn n(&self) -> usize {
        self.z0.len()
    }

    pub fn heisenberg_part(&self) -> HeisenbergElement {
        HeisenbergElement::new(self.z0.clone(), self.c0)
    }

    /// `(z,c,k)(z',c',k') = (z + kz', c + c' + ½ω(z,kz'), kk')`.
    pub fn multiply(&self, h: &MotionElement) -> Result<MotionElement> {
        check_len(self.n(), h.n())?;
        let kz = mat_vec(&self.k, &h.z0);
        Ok(MotionElement {
            z0: self.z0.iter().zip(&kz).map(|(a, b)| a + b).collect(),
            c0: self.c0 + h.c0 + 0.5 * omega(&self.z0, &kz)?,
            k: &self.k * &h.k,
        })
    }

    /// `(z,c,k)⁻¹ = (−k⁻¹z, −c, k⁻¹)`.
    pub fn inverse(&self) -> MotionElement {
        let kinv = self.k.adjoint();
        MotionElement {
            z0: mat_vec(&kinv, &self.z0).into_iter().map(|z| -z).collect(),
            c0: -self.c0,
            k: kinv,
        }
    }

    /// `g·(z,φ) = (kz − iλz₀, Ad*(k)φ)`.
    pub fn act(&self, z: &[C64], phi: &OrbitPoint, lambda: f64, irrep: &dyn CompactIrrep) -> Result<(Vec<C64>, OrbitPoint)> {
        check_len(self.n(), z.len())?;
        let kz = mat_vec(&self.k, z);
        let moved = kz.iter().zip(&self.z0).map(|(a, b)| a - I * lambda * b).collect();
        Ok((moved, irrep.coadjoint(&self.k, phi)))
    }

    pub fn distance(&self, other: &MotionElement) -> f64 {
        let dz: f64 = self.z0.iter().zip(&other.z0).map(|(a, b)| (a - b).norm_sqr()).sum();
        let dk = crate::linalg::max_abs(&(&self.k - &other.k));
        dz.sqrt().max((self.c0 - other.c0).abs()).max(dk)
    }
}

/// `(v, c, A)` with `A ∈ 𝔨` anti-Hermitian.
#[derive(Clone, Debug, PartialEq)]
pub struct MotionAlgebraElement {
    pub v: Vec<C64>,
    pub c: f64,
    pub a: CMatrix,
}

impl MotionAlgebraElement {
    pub fn new(v: Vec<C64>, c: f64, a: CMatrix) -> Result<Self> {
        check_square(&a, v.len())?;
        Ok(MotionAlgebraElement { v, c, a })
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn heisenberg_part(&self) -> crate::heisenberg::HeisenbergAlgebraElement {
        crate::heisenberg::HeisenbergAlgebraElement::new(self.v.clone(), self.c)
    }

    /// `[(v,c,A),(v',c',A')] = (Av' − A'v, ω(v,v'), [A,A'])`.
    pub fn bracket(&self, other: &MotionAlgebraElement) -> Result<MotionAlgebraElement> {
        check_len(self.n(), other.n())?;
        let av = mat_vec(&self.a, &other.v);
        let bv = mat_vec(&other.a, &self.v);
        Ok(MotionAlgebraElement {
            v: av.iter().zip(&bv).map(|(x, y)| x - y).collect(),
            c: omega(&self.v, &other.v)?,
            a: &self.a * &other.a - &other.a * &self.a,
        })
    }

    pub fn distance(&self, other: &MotionAlgebraElement) -> f64 {
        let dv: f64 = self.v.iter().zip(&other.v).map(|(a, b)| (a - b).norm_sqr()).sum();
        dv.sqrt()
            .max((self.c - other.c).abs())
            .max(crate::linalg::max_abs(&(&self.a - &other.a)))
    }
}

/// `(u, d, φ)_*` with `⟨ξ,(v,c,A)⟩ = ω(u,v) + dc + ⟨φ,A⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct MotionDual {
    pub u: Vec<C64>,
    pub d: f64,
    pub phi: KDual,
}

impl MotionDual {
    pub fn pair(&self, x: &MotionAlgebraElement, irrep: &dyn CompactIrrep) -> Result<f64> {
        Ok(omega(&self.u, &x.v)? + self.d * x.c + irrep.pair(&self.phi, &x.a))
    }

    pub fn distance(&self, other: &MotionDual) -> f64 {
        let du: f64 = self.u.iter().zip(&other.u).map(|(a, b)| (a - b).norm_sqr()).sum();
        du.sqrt().max((self.d - other.d).abs()).max(self.phi.distance(&other.phi))
    }
}

/// `Ad(g)X = (k v − (Ad(k)A)z₀, c + ω(z₀,kv) − ½ω(z₀,(Ad(k)A)z₀), Ad(k)A)`.
pub fn adjoint(g: &MotionElement, x: &MotionAlgebraElement) -> Result<MotionAlgebraElement> {
    check_len(g.n(), x.n())?;
    let ad_a = &g.k * &x.a * g.k.adjoint();
    let kv = mat_vec(&g.k, &x.v);
    let az = mat_vec(&ad_a, &g.z0);
    Ok(MotionAlgebraElement {
        v: kv.iter().zip(&az).map(|(a, b)| a - b).collect(),
        c: x.c + omega(&g.z0, &kv)? - 0.5 * omega(&g.z0, &az)?,
        a: ad_a,
    })
}

/// `Ad*(g)ξ = (k u − d z₀, d, Ad*(k)φ + z₀ × (k u − ½ d z₀))_*`.
pub fn coadjoint(g: &MotionElement, xi: &MotionDual, irrep: &dyn CompactIrrep) -> Result<MotionDual> {
    check_len(g.n(), xi.u.len())?;
    let ku = mat_vec(&g.k, &xi.u);
    let u: Vec<C64> = ku.iter().zip(&g.z0).map(|(a, z)| a - xi.d * z).collect();
    let half: Vec<C64> = ku.iter().zip(&g.z0).map(|(a, z)| a - 0.5 * xi.d * z).collect();
    let phi = irrep.coadjoint_dual(&g.k, &xi.phi).plus(&irrep.cross(&g.z0, &half)?);
    Ok(MotionDual { u, d: xi.d, phi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compact::Su2Spin;
    use crate::linalg::c;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
        (0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
    }

    fn random_element(rng: &mut ChaCha8Rng, irrep: &dyn CompactIrrep) -> MotionElement {
        let z0 = random_vec(rng, 2);
        let c0 = rng.gen_range(-1.0..1.0);
        MotionElement::new(z0, c0, irrep.random_element(rng)).unwrap()
    }

    fn random_algebra(rng: &mut ChaCha8Rng, irrep: &dyn CompactIrrep) -> MotionAlgebraElement {
        let coords: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
        MotionAlgebraElement::new(random_vec(rng, 2), rng.gen_range(-1.0..1.0), irrep.algebra_element(&coords)).unwrap()
    }

    #[test]
    fn inverse_and_associativity() {
        let s = Su2Spin::new(0.5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let g = random_element(&mut rng, &s);
            let h = random_element(&mut rng, &s);
            let k = random_element(&mut rng, &s);
            let e = g.multiply(&g.inverse()).unwrap();
            assert!(e.distance(&MotionElement::identity(2)) < 1e-14);
            let lhs = g.multiply(&h).unwrap().multiply(&k).unwrap();
            let rhs = g.multiply(&h.multiply(&k).unwrap()).unwrap();
            assert!(lhs.distance(&rhs) < 1e-12);
        }
    }

    #[test]
    fn adjoint_preserves_brackets() {
        let s = Su2Spin::new(0.5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let g = random_element(&mut rng, &s);
            let x = random_algebra(&mut rng, &s);
            let y = random_algebra(&mut rng, &s);
            let lhs = adjoint(&g, &x.bracket(&y).unwrap()).unwrap();
            let rhs = adjoint(&g, &x).unwrap().bracket(&adjoint(&g, &y).unwrap()).unwrap();
            assert!(lhs.distance(&rhs) < 1e-12);
        }
    }

    #[test]
    fn coadjoint_is_dual_to_adjoint() {
        let s = Su2Spin::new(1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let g = random_element(&mut rng, &s);
            let x = random_algebra(&mut rng, &s);
            let xi = MotionDual {
                u: random_vec(&mut rng, 2),
                d: rng.gen_range(0.5..2.0),
                phi: KDual {
                    coords: (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect(),
                },
            };
            let lhs = coadjoint(&g, &xi, &s).unwrap().pair(&x, &s).unwrap();
            let rhs = xi.pair(&adjoint(&g.inverse(), &x).unwrap(), &s).unwrap();
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn generic_orbit_contains_zero_u_point() {
        let s = Su2Spin::new(0.5).unwrap();
        let xi = MotionDual {
            u: vec![c(0.3, -0.2), c(0.1, 0.4)],
            d: 1.5,
            phi: s.base_point().as_dual(),
        };
        // k = I, z₀ = u/d kills the u-component
        let z0: Vec<C64> = xi.u.iter().map(|u| u / xi.d).collect();
        let g = MotionElement::new(z0, 0.0, CMatrix::identity(2, 2)).unwrap();
        let moved = coadjoint(&g, &xi, &s).unwrap();
        assert!(moved.u.iter().all(|u| u.norm() < 1e-15));
        assert_eq!(moved.d, 1.5);
    }

    #[test]
    fn central_elements_are_fixed() {
        let s = Su2Spin::new(0.5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let g = random_element(&mut rng, &s);
        let z = MotionAlgebraElement::new(vec![c(0.0, 0.0); 2], 1.0, CMatrix::zeros(2, 2)).unwrap();
        assert!(adjoint(&g, &z).unwrap().distance(&z) < 1e-15);
    }
}
