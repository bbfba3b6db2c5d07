//! The quantizer `Ω₀(z)` and the Weyl calculus `W₀(A)(z) = Tr(A Ω₀(z))`.
//!
//! Four evaluation routes are provided:
//!
//! * [`weyl_symbol`]: the trace pairing against the exact corner of `Ω₀(z)`,
//!   valid for any finite-rank operator given as a truncated matrix;
//! * [`weyl_symbol_integral`]: quadrature of the kernel integral, driven by
//!   a [`Kernel`] implementation;
//! * [`weyl_symbol_diffop`](crate::diffop::weyl_symbol_diffop): closed forms
//!   for polynomial-coefficient differential operators;
//! * [`weyl_symbol_regularized`]: a displaced, Euler-summed parity trace for
//!   unbounded operators whose conjugated diagonal is polynomial.

use crate::error::{Error, Result};
use crate::fock::{binomial, FockBasis, FockOperator, MultiIndex};
use crate::heisenberg::{phi_lambda, pi0_matrix, HeisenbergAlgebraElement, HeisenbergElement};
use crate::linalg::{pairwise_sum, CMatrix, C64, I};
use crate::quadrature::{plane_grid, plane_grid_centered, PhaseSpaceGrid};
use crate::symbol::{Provenance, SymbolFunction, SymbolProfile};

fn check_point(z: &[C64], n: usize) -> Result<()> {
    if z.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: z.len(),
        });
    }
    Ok(())
}

/// Precomputed per-point data for entries of `Ω₀(z)`.
struct QuantizerEntries<'a> {
    basis: &'a FockBasis,
    prefactor: f64,
    zbar_over_lambda: Vec<C64>,
    two_z: Vec<C64>,
}

impl<'a> QuantizerEntries<'a> {
    fn new(z: &[C64], basis: &'a FockBasis) -> Self {
        let lambda = basis.lambda();
        let z_sq: f64 = z.iter().map(|a| a.norm_sqr()).sum();
        QuantizerEntries {
            basis,
            prefactor: 2f64.powi(basis.n() as i32) * (-z_sq / lambda).exp(),
            zbar_over_lambda: z.iter().map(|a| a.conj() / lambda).collect(),
            two_z: z.iter().map(|a| 2.0 * a).collect(),
        }
    }

    /// `⟨Ω₀(z) ê_q, ê_p⟩` for basis positions `i ↔ p`, `j ↔ q`:
    /// `2ⁿ e^{-|z|²/λ} (‖w^p‖/‖w^q‖) Σ_{r≤p,q} (−1)^{|r|} C(q,r) (2z)^{q−r} (z̄/λ)^{p−r}/(p−r)!`.
    fn entry(&self, i: usize, j: usize) -> C64 {
        let p = self.basis.index(i);
        let q = self.basis.index(j);
        let bound = MultiIndex::new(p.entries().iter().zip(q.entries()).map(|(a, b)| *a.min(b)).collect());
        let terms: Vec<C64> = bound
            .below()
            .into_iter()
            .map(|r| {
                let pr = p.checked_sub(&r).unwrap();
                let qr = q.checked_sub(&r).unwrap();
                let sign = if r.degree() % 2 == 0 { 1.0 } else { -1.0 };
                let binom: f64 = q
                    .entries()
                    .iter()
                    .zip(r.entries())
                    .map(|(&a, &b)| binomial(a, b))
                    .product();
                qr.monomial(&self.two_z) * pr.monomial(&self.zbar_over_lambda) * (sign * binom / pr.factorial())
            })
            .collect();
        let ratio = (self.basis.ln_norm(i) - self.basis.ln_norm(j)).exp();
        pairwise_sum(&terms) * (self.prefactor * ratio)
    }
}

/// The exact top-left block of `Ω₀(z)`,
/// `(Ω₀(z)f)(w) = 2ⁿ e^{(w z̄ − |z|²)/λ} f(2z − w)`.
pub fn quantizer0(z: &[C64], basis: &FockBasis) -> Result<FockOperator> {
    check_point(z, basis.n())?;
    let q = QuantizerEntries::new(z, basis);
    let dim = basis.dim();
    let m = CMatrix::from_fn(dim, dim, |i, j| q.entry(i, j));
    FockOperator::new(basis, m)
}

/// `W₀(A)(z) = Tr(A Ω₀(z))`.
///
/// Exact for the finite-rank operator represented by the truncated matrix:
/// only the corner of `Ω₀(z)` up to the cutoff enters the trace.
pub fn weyl_symbol(a: &FockOperator, z: &[C64]) -> Result<C64> {
    let basis = a.basis();
    check_point(z, basis.n())?;
    let q = QuantizerEntries::new(z, basis);
    let m = a.matrix();
    let mut terms = Vec::new();
    for j in 0..basis.dim() {
        for i in 0..basis.dim() {
            let aij = m[(i, j)];
            if aij != C64::new(0.0, 0.0) {
                terms.push(aij * q.entry(j, i));
            }
        }
    }
    Ok(pairwise_sum(&terms))
}

/// `W₀(A)` as a function, by the trace pairing.
pub fn weyl_symbol_function(a: &FockOperator) -> SymbolFunction {
    let op = a.clone();
    let degree = 2 * a.support_degree();
    SymbolFunction::new(
        move |z| weyl_symbol(&op, z).expect("point dimension checked by caller"),
        Provenance::TracePairing,
        SymbolProfile { degree, gaussian: true },
    )
}

/// `W₀(dπ₀(X))(z) = i⟨Φ_λ(z), X⟩`.
pub fn weyl_symbol_dpi0(x: &HeisenbergAlgebraElement, z: &[C64], lambda: f64) -> Result<C64> {
    Ok(I * phi_lambda(z, lambda).pair(x)?)
}

/// How the kernel `k_A(z,w) = ⟨A e_w, e_z⟩` depends on its arguments; this
/// decides which quadrature integrates the Weyl integrand exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelShape {
    /// A polynomial in `(z, w̄)` of the given total degree. `full_support`
    /// marks operators filling the whole truncated space, such as the
    /// truncated identity, whose kernel integral is not meaningful.
    Polynomial { degree: usize, full_support: bool },
    /// `P(z, w̄) e^{z w̄/2λ}` with `P` of the given total degree.
    CoherentPolynomial { degree: usize },
}

/// Access to the reproducing kernel of an operator.
pub trait Kernel {
    fn n(&self) -> usize;
    fn lambda(&self) -> f64;
    fn shape(&self) -> KernelShape;
    /// `k_A(z, w)`.
    fn kernel(&self, z: &[C64], w: &[C64]) -> C64;
}

impl Kernel for FockOperator {
    fn n(&self) -> usize {
        self.basis().n()
    }

    fn lambda(&self) -> f64 {
        self.basis().lambda()
    }

    fn shape(&self) -> KernelShape {
        let degree = self.support_degree();
        let full_support = degree == self.basis().cutoff() && self.basis().cutoff() > 0;
        KernelShape::Polynomial {
            degree: 2 * degree,
            full_support,
        }
    }

    /// `Σ A_{pq} z^p w̄^q / (‖w^p‖ ‖w^q‖)`.
    fn kernel(&self, z: &[C64], w: &[C64]) -> C64 {
        let b = self.basis();
        let zs: Vec<C64> = (0..b.dim()).map(|i| b.eval_basis(i, z)).collect();
        let ws: Vec<C64> = (0..b.dim()).map(|i| b.eval_basis(i, w).conj()).collect();
        let m = self.matrix();
        let mut terms = Vec::with_capacity(b.dim() * b.dim());
        for j in 0..b.dim() {
            for i in 0..b.dim() {
                terms.push(m[(i, j)] * zs[i] * ws[j]);
            }
        }
        pairwise_sum(&terms)
    }
}

impl Kernel for crate::diffop::DiffOperator {
    fn n(&self) -> usize {
        crate::diffop::DiffOperator::n(self)
    }

    fn lambda(&self) -> f64 {
        crate::diffop::DiffOperator::lambda(self)
    }

    fn shape(&self) -> KernelShape {
        KernelShape::CoherentPolynomial { degree: self.degree() }
    }

    fn kernel(&self, z: &[C64], w: &[C64]) -> C64 {
        self.kernel_value(z, w)
    }
}

/// Wrapper that lets a full-support truncated matrix through the kernel
/// integral. The result is the integral of the truncated kernel, which
/// generally differs from the trace pairing far from the origin.
pub struct ForceFullSupport<'a>(pub &'a FockOperator);

impl Kernel for ForceFullSupport<'_> {
    fn n(&self) -> usize {
        self.0.basis().n()
    }

    fn lambda(&self) -> f64 {
        self.0.basis().lambda()
    }

    fn shape(&self) -> KernelShape {
        match self.0.shape() {
            KernelShape::Polynomial { degree, .. } => KernelShape::Polynomial {
                degree,
                full_support: false,
            },
            other => other,
        }
    }

    fn kernel(&self, z: &[C64], w: &[C64]) -> C64 {
        self.0.kernel(z, w)
    }
}

/// The grid on which [`weyl_symbol_integral`] is exact (polynomial kernels
/// up to the unimodular phase) for the given kernel and point.
pub fn integral_grid(kernel: &dyn Kernel, z: &[C64]) -> Result<PhaseSpaceGrid> {
    shape_grid(kernel.shape(), z, kernel.lambda())
}

fn required_order(degree: usize) -> usize {
    degree + 2
}

fn same_point(a: &[C64], b: &[C64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= 1e-14 * (1.0 + x.norm()))
}

/// `W₀(A)(z) = 2ⁿ ∫ k_A(w, 2z−w) e^{(−|z|² + z w̄ − ½|w|²)/λ} dμ_λ(w)`.
///
/// The grid must be centred at `z`. For kernels of shape
/// `P(z,w̄)e^{zw̄/2λ}` the integrand is a polynomial times `e^{-|w−z|²/λ}`
/// and the scale must be `λ`. For polynomial kernels the integrand is a
/// polynomial times `e^{-|w−z|²/2λ}` times a unimodular phase, the scale
/// must be `2λ` and the order at least `degree + 2`.
pub fn weyl_symbol_integral(kernel: &dyn Kernel, z: &[C64], grid: &PhaseSpaceGrid) -> Result<C64> {
    kernel_integral(kernel.n(), kernel.lambda(), kernel.shape(), z, grid, |w, reflected| {
        kernel.kernel(w, reflected)
    })
}

/// Quadrature of `2ⁿ ∫ f(w, 2z−w) e^{(−|z|² + z w̄ − ½|w|²)/λ} dμ_λ(w)`
/// after checking the grid against the kernel shape.
pub(crate) fn kernel_integral<F>(
    n: usize,
    lambda: f64,
    shape: KernelShape,
    z: &[C64],
    grid: &PhaseSpaceGrid,
    mut f: F,
) -> Result<C64>
where
    F: FnMut(&[C64], &[C64]) -> C64,
{
    check_point(z, n)?;
    if grid.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: grid.n(),
        });
    }
    if (grid.lambda() - lambda).abs() > 1e-15 * lambda {
        return Err(Error::GridFrameMismatch(format!(
            "grid lambda {} differs from operator lambda {lambda}",
            grid.lambda()
        )));
    }
    if !same_point(grid.center(), z) {
        return Err(Error::GridFrameMismatch("grid must be centred at the evaluation point".into()));
    }
    let (scale, required) = match shape {
        KernelShape::Polynomial { degree, full_support } => {
            if full_support {
                return Err(Error::SupportExceedsCutoff {
                    support: degree / 2,
                    cutoff: degree / 2,
                });
            }
            (2.0 * lambda, required_order(degree))
        }
        KernelShape::CoherentPolynomial { degree } => (lambda, degree / 2 + 1),
    };
    if (grid.scale() - scale).abs() > 1e-14 * scale {
        return Err(Error::GridFrameMismatch(format!(
            "kernel needs grid scale {scale}, got {}",
            grid.scale()
        )));
    }
    if grid.order() < required {
        return Err(Error::InsufficientGridOrder {
            required,
            actual: grid.order(),
        });
    }
    let z_sq: f64 = z.iter().map(|a| a.norm_sqr()).sum();
    let two_n = 2f64.powi(n as i32);
    let value = grid.integrate(|w| {
        let reflected: Vec<C64> = z.iter().zip(w).map(|(a, b)| 2.0 * a - b).collect();
        let zw: C64 = z.iter().zip(w).map(|(a, b)| a * b.conj()).sum();
        let w_sq: f64 = w.iter().map(|a| a.norm_sqr()).sum();
        let expo = (zw - z_sq - 0.5 * w_sq) / lambda;
        f(w, &reflected) * expo.exp()
    });
    Ok(value * two_n)
}

/// The grid on which [`kernel_integral`] is exact for a kernel shape.
pub(crate) fn shape_grid(shape: KernelShape, z: &[C64], lambda: f64) -> Result<PhaseSpaceGrid> {
    match shape {
        KernelShape::Polynomial { degree, .. } => plane_grid_centered(z, required_order(degree) + 16, lambda, 2.0 * lambda),
        KernelShape::CoherentPolynomial { degree } => plane_grid_centered(z, degree / 2 + 1, lambda, lambda),
    }
}

/// `W₀(A)(z)` for a possibly unbounded `A`, as the displaced parity trace
/// `2ⁿ Σ_q (−1)^{|q|} (π₀(g_z)^{-1} A π₀(g_z))_{qq}`, with the alternating
/// series summed by the tensor Euler transform truncated at total
/// difference order `terms`.
///
/// Exact when the conjugated diagonal is a polynomial in `q` of degree
/// `≤ terms`, as it is for `dπ₀(X)`, `dτ(A)` and other polynomial
/// differential operators of low order. The cutoff of `A`'s basis must leave
/// room above `terms` for the displacement to converge.
pub fn weyl_symbol_regularized(a: &FockOperator, z: &[C64], terms: usize) -> Result<C64> {
    let basis = a.basis();
    let n = basis.n();
    check_point(z, n)?;
    if terms > basis.cutoff() {
        return Err(Error::InvalidParameter(format!(
            "Euler order {terms} exceeds cutoff {}",
            basis.cutoff()
        )));
    }
    let g = HeisenbergElement::section(z, basis.lambda());
    let d = pi0_matrix(&g, basis)?;
    let d_inv = pi0_matrix(&g.inverse(), basis)?;
    let k = basis.block_dim(terms);
    let right = a.matrix() * d.matrix().columns(0, k);
    let diag: Vec<C64> = (0..k).map(|q| (d_inv.matrix().row(q) * right.column(q))[(0, 0)]).collect();

    let mut sum = Vec::new();
    for dm in 0..=terms {
        for m in MultiIndex::of_degree(n, dm) {
            // Δ^m a(0) = Σ_{j≤m} Π (−1)^{mᵢ−jᵢ} C(mᵢ,jᵢ) a(j)
            let mut diff = C64::new(0.0, 0.0);
            for j in m.below() {
                let pos = basis.position(&j).expect("below m lies within the block");
                let sign = if (dm - j.degree()) % 2 == 0 { 1.0 } else { -1.0 };
                diff += diag[pos] * (sign * MultiIndex::binomial(&m, &j));
            }
            let sign = if dm % 2 == 0 { 1.0 } else { -1.0 };
            sum.push(diff * (sign / 2f64.powi((dm + n) as i32)));
        }
    }
    Ok(pairwise_sum(&sum) * 2f64.powi(n as i32))
}

/// `W₀⁻¹(F) = ∫ Ω₀(z) F(z) dμ_λ(z)` by quadrature.
///
/// The grid must be centred at the origin, with scale `λ/2` when `F` carries
/// a factor `e^{-|z|²/λ}` and `λ` otherwise, and must integrate polynomials
/// of per-coordinate degree `deg F + 2N` exactly.
pub fn dequantize(f: &SymbolFunction, grid: &PhaseSpaceGrid, basis: &FockBasis) -> Result<FockOperator> {
    let n = basis.n();
    let lambda = basis.lambda();
    if grid.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: grid.n(),
        });
    }
    if (grid.lambda() - lambda).abs() > 1e-15 * lambda {
        return Err(Error::GridFrameMismatch(format!(
            "grid lambda {} differs from basis lambda {lambda}",
            grid.lambda()
        )));
    }
    if grid.center().iter().any(|c| c.norm() > 0.0) {
        return Err(Error::GridFrameMismatch("dequantization grid must be centred at the origin".into()));
    }
    let scale = if f.profile.gaussian { 0.5 * lambda } else { lambda };
    if (grid.scale() - scale).abs() > 1e-14 * scale {
        return Err(Error::GridFrameMismatch(format!(
            "symbol needs grid scale {scale}, got {}",
            grid.scale()
        )));
    }
    let degree = f.profile.degree + 2 * basis.cutoff();
    if grid.exactness_degree() < degree {
        return Err(Error::InsufficientGridOrder {
            required: degree / 2 + 1,
            actual: grid.order(),
        });
    }
    let dim = basis.dim();
    let mut acc = CMatrix::zeros(dim, dim);
    for (node, &wt) in grid.nodes().iter().zip(grid.weights()) {
        let weight = f.eval(node) * (wt / grid.density(node));
        let q = QuantizerEntries::new(node, basis);
        for j in 0..dim {
            for i in 0..dim {
                acc[(i, j)] += q.entry(i, j) * weight;
            }
        }
    }
    FockOperator::new(basis, acc)
}

/// The grid on which [`dequantize`] is exact for `f` at the given basis.
pub fn dequantize_grid(f: &SymbolFunction, basis: &FockBasis) -> Result<PhaseSpaceGrid> {
    let lambda = basis.lambda();
    let scale = if f.profile.gaussian { 0.5 * lambda } else { lambda };
    let order = (f.profile.degree + 2 * basis.cutoff()) / 2 + 1;
    plane_grid(basis.n(), order, lambda, scale)
}

/// The grid on which `∫ W₀(A) conj(W₀(B)) dμ_λ` is exact when both
/// operators are supported in degrees `≤ support`.
pub fn pairing_grid(n: usize, lambda: f64, support: usize) -> Result<PhaseSpaceGrid> {
    plane_grid(n, 2 * support + 1, lambda, 0.5 * lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop::{weyl_symbol_diffop, DiffOperator};
    use crate::fock::{coherent_state, FockVector};
    use crate::heisenberg::parity_matrix;
    use crate::linalg::{adjoint, c, max_abs, re};

    #[test]
    fn quantizer_at_origin_is_parity() {
        for n in [1, 2] {
            let b = FockBasis::new(n, 0.7, 6).unwrap();
            let q = quantizer0(&vec![re(0.0); n], &b).unwrap();
            assert_eq!(q.matrix(), parity_matrix(&b).matrix());
        }
    }

    #[test]
    fn quantizer_is_self_adjoint() {
        let b = FockBasis::new(2, 1.3, 7).unwrap();
        let q = quantizer0(&[c(0.3, -0.4), c(0.6, 0.1)], &b).unwrap();
        assert!(max_abs(&(q.matrix() - adjoint(q.matrix()))) < 1e-12);
    }

    #[test]
    fn quantizer_matches_conjugated_parity() {
        let lambda = 1.0;
        let z = [c(0.4, -0.3)];
        let small = FockBasis::new(1, lambda, 8).unwrap();
        let big = FockBasis::new(1, lambda, 60).unwrap();
        let g = HeisenbergElement::section(&z, lambda);
        let d = pi0_matrix(&g, &big).unwrap();
        let dinv = pi0_matrix(&g.inverse(), &big).unwrap();
        let conj = d.matrix() * parity_matrix(&big).matrix() * dinv.matrix();
        let q = quantizer0(&z, &small).unwrap();
        let k = small.dim();
        assert!(max_abs(&(conj.view((0, 0), (k, k)) - q.matrix())) < 1e-8);
    }

    #[test]
    fn coherent_eigenvector() {
        let b = FockBasis::new(1, 1.0, 30).unwrap();
        let z = [c(0.5, 0.6)];
        let e = coherent_state(&z, &b).unwrap();
        let qe = quantizer0(&z, &b).unwrap().apply(&e).unwrap();
        let diff: Vec<C64> = qe.coeffs().iter().zip(e.coeffs()).map(|(a, b)| a - 2.0 * b).collect();
        let diff = FockVector::new(&b, diff).unwrap();
        assert!(diff.norm() / e.norm() < 1e-6);
    }

    #[test]
    fn vacuum_projector() {
        let b = FockBasis::new(1, 1.0, 4).unwrap();
        let zero = MultiIndex::zero(1);
        let a = FockOperator::matrix_unit(&b, &zero, &zero).unwrap();
        assert!((weyl_symbol(&a, &[re(0.0)]).unwrap() - re(2.0)).norm() < 1e-15);
        let grid = integral_grid(&a, &[re(0.0)]).unwrap();
        let v = weyl_symbol_integral(&a, &[re(0.0)], &grid).unwrap();
        assert!((v - re(2.0)).norm() < 1e-12);
    }

    #[test]
    fn integral_agrees_with_trace_for_finite_rank() {
        let b = FockBasis::new(1, 0.8, 3).unwrap();
        let m = CMatrix::from_fn(b.dim(), b.dim(), |i, j| c(0.1 * i as f64 - 0.2, 0.3 * j as f64));
        let mut m = m;
        for j in 0..b.dim() {
            m[(b.dim() - 1, j)] = re(0.0);
            m[(j, b.dim() - 1)] = re(0.0);
        }
        let a = FockOperator::new(&b, m).unwrap();
        for z in [[c(0.2, 0.1)], [c(-0.7, 0.9)]] {
            let grid = integral_grid(&a, &z).unwrap();
            let lhs = weyl_symbol_integral(&a, &z, &grid).unwrap();
            let rhs = weyl_symbol(&a, &z).unwrap();
            assert!((lhs - rhs).norm() < 1e-9, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn full_support_rejected_unless_forced() {
        let b = FockBasis::new(1, 1.0, 3).unwrap();
        let id = FockOperator::identity(&b);
        let z = [c(1.0, 0.0)];
        let grid = integral_grid(&ForceFullSupport(&id), &z).unwrap();
        assert!(matches!(
            weyl_symbol_integral(&id, &z, &grid),
            Err(Error::SupportExceedsCutoff { .. })
        ));
        assert!(weyl_symbol_integral(&ForceFullSupport(&id), &z, &grid).is_ok());
    }

    #[test]
    fn grid_checks() {
        let d = DiffOperator::monomial(MultiIndex::new(vec![2]), MultiIndex::new(vec![2]), 1.0).unwrap();
        let z = [c(0.3, 0.0)];
        let coarse = plane_grid_centered(&z, 1, 1.0, 1.0).unwrap();
        assert!(matches!(
            weyl_symbol_integral(&d, &z, &coarse),
            Err(Error::InsufficientGridOrder { .. })
        ));
        let off = plane_grid(1, 8, 1.0, 1.0).unwrap();
        assert!(matches!(weyl_symbol_integral(&d, &z, &off), Err(Error::GridFrameMismatch(_))));
    }

    #[test]
    fn number_operator_integral() {
        let d = DiffOperator::monomial(MultiIndex::new(vec![1]), MultiIndex::new(vec![1]), 1.0).unwrap();
        let z = [re(0.0)];
        let v = weyl_symbol_integral(&d, &z, &integral_grid(&d, &z).unwrap()).unwrap();
        assert!((v - re(-0.5)).norm() < 1e-13);
    }

    #[test]
    fn diffop_integral_matches_closed_form() {
        let lambda = 0.6;
        let p = MultiIndex::new(vec![2, 1]);
        let q = MultiIndex::new(vec![1, 1]);
        let d = DiffOperator::monomial(p.clone(), q.clone(), lambda).unwrap();
        let closed = weyl_symbol_diffop(&p, &q, lambda);
        let z = [c(0.4, -0.2), c(-0.3, 0.5)];
        let v = weyl_symbol_integral(&d, &z, &integral_grid(&d, &z).unwrap()).unwrap();
        assert!((v - closed.eval(&z)).norm() < 1e-11);
    }

    #[test]
    fn regularized_trace_examples() {
        let lambda = 1.0;
        let b = FockBasis::new(1, lambda, 30).unwrap();
        let num = DiffOperator::monomial(MultiIndex::new(vec![1]), MultiIndex::new(vec![1]), lambda)
            .unwrap()
            .matrix(&b)
            .unwrap();
        let v = weyl_symbol_regularized(&num, &[re(0.0)], 4).unwrap();
        assert!((v - re(-0.5)).norm() < 1e-12);
        let z = [c(0.5, -0.4)];
        let v = weyl_symbol_regularized(&num, &z, 4).unwrap();
        assert!((v - re(0.5 * z[0].norm_sqr() - 0.5)).norm() < 1e-9);
        let id = FockOperator::identity(&b);
        assert!((weyl_symbol_regularized(&id, &z, 4).unwrap() - re(1.0)).norm() < 1e-9);
    }

    #[test]
    fn dpi0_examples() {
        let z = [c(0.7, -0.2)];
        let lambda = 1.5;
        let zx = weyl_symbol_dpi0(&HeisenbergAlgebraElement::z(1), &z, lambda).unwrap();
        assert!((zx - I * lambda).norm() < 1e-15);
        let xx = weyl_symbol_dpi0(&HeisenbergAlgebraElement::x(1, 0), &z, lambda).unwrap();
        assert!((xx - I * 0.7).norm() < 1e-15);
        let yx = weyl_symbol_dpi0(&HeisenbergAlgebraElement::y(1, 0), &z, lambda).unwrap();
        assert!((yx - I * -0.2).norm() < 1e-15);
    }

    #[test]
    fn dequantize_constant_gives_identity() {
        let b = FockBasis::new(1, 1.0, 8).unwrap();
        let one = SymbolFunction::new(|_| re(1.0), Provenance::ClosedForm, SymbolProfile { degree: 0, gaussian: false });
        let grid = dequantize_grid(&one, &b).unwrap();
        let a = dequantize(&one, &grid, &b).unwrap();
        assert!(max_abs(&(a.matrix() - CMatrix::identity(b.dim(), b.dim()))) < 1e-9);
    }

    #[test]
    fn dequantize_round_trip() {
        let b = FockBasis::new(1, 0.9, 6).unwrap();
        let m = CMatrix::from_fn(b.dim(), b.dim(), |i, j| {
            if i.max(j) <= 4 {
                c((i * 3 + j) as f64 * 0.1, (i as f64 - j as f64) * 0.2)
            } else {
                re(0.0)
            }
        });
        let a = FockOperator::new(&b, m).unwrap();
        let f = weyl_symbol_function(&a);
        let back = dequantize(&f, &dequantize_grid(&f, &b).unwrap(), &b).unwrap();
        assert!(max_abs(&(back.matrix() - a.matrix())) < 1e-9);
    }

    #[test]
    fn dequantize_rejects_coarse_grid() {
        let b = FockBasis::new(1, 1.0, 6).unwrap();
        let one = SymbolFunction::new(|_| re(1.0), Provenance::ClosedForm, SymbolProfile { degree: 0, gaussian: false });
        let grid = plane_grid(1, 3, 1.0, 1.0).unwrap();
        assert!(matches!(dequantize(&one, &grid, &b), Err(Error::InsufficientGridOrder { .. })));
    }
}
