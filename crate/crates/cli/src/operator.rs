//! The operator specification mini-language.
//!
//! ```text
//! identity                     the identity
//! E p q                        matrix unit |ê_p⟩⟨ê_q|
//! A p q                        z^p (∂/∂z)^q
//! dpi0 X1,Y2,Z                 dπ₀ of a sum of Heisenberg generators
//! dpi v=<vec> c=<real> A=<mat> dπ of a motion algebra element
//! tensor(<fock-spec>, <mat>)   elementary tensor on H₀ ⊗ V
//! ```
//!
//! Multi-indices are comma separated (`1,0`). Complex numbers are `re` or
//! `re:im`. Vectors are comma separated complex numbers; matrices are
//! `[a,b;c,d]` with rows separated by `;`.

use swcorr::diffop::DiffOperator;
use swcorr::fock::{FockBasis, FockOperator, MultiIndex};
use swcorr::heisenberg::HeisenbergAlgebraElement;
use swcorr::{CMatrix, C64};

use crate::error::CliError;

/// An operator on the Fock factor.
#[derive(Clone, Debug, PartialEq)]
pub enum FockSpec {
    Identity,
    Unit(MultiIndex, MultiIndex),
    Monomial(MultiIndex, MultiIndex),
    Dpi0(HeisenbergAlgebraElement),
}

#[derive(Clone, Debug, PartialEq)]
pub enum OperatorSpec {
    Fock(FockSpec),
    Dpi { v: Vec<C64>, c: f64, a: CMatrix },
    Tensor(FockSpec, CMatrix),
}

fn err<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Operator(msg.into()))
}

pub fn parse_complex(s: &str) -> Result<C64, CliError> {
    let s = s.trim();
    let (re, im) = match s.split_once(':') {
        Some((a, b)) => (a, b),
        None => (s, "0"),
    };
    let p = |t: &str| t.trim().parse::<f64>().map_err(|_| CliError::Operator(format!("bad number '{t}' in '{s}'")));
    Ok(C64::new(p(re)?, p(im)?))
}

pub fn parse_multi_index(s: &str) -> Result<MultiIndex, CliError> {
    let entries = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Operator(format!("bad multi-index '{s}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MultiIndex::new(entries))
}

pub fn parse_vector(s: &str) -> Result<Vec<C64>, CliError> {
    s.split(',').map(parse_complex).collect()
}

pub fn parse_matrix(s: &str) -> Result<CMatrix, CliError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| CliError::Operator(format!("matrix literal must be bracketed: '{s}'")))?;
    let rows = inner.split(';').map(parse_vector).collect::<Result<Vec<_>, _>>()?;
    let nrows = rows.len();
    let ncols = rows[0].len();
    if nrows != ncols || rows.iter().any(|r| r.len() != ncols) {
        return err(format!("matrix literal must be square: '{s}'"));
    }
    Ok(CMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
}

fn parse_generators(s: &str, n: usize) -> Result<HeisenbergAlgebraElement, CliError> {
    let mut x = HeisenbergAlgebraElement::new(vec![C64::new(0.0, 0.0); n], 0.0);
    for g in s.split(',') {
        let g = g.trim();
        let term = if g == "Z" {
            HeisenbergAlgebraElement::z(n)
        } else {
            let (kind, k) = g.split_at(1);
            let k: usize = k.parse().map_err(|_| CliError::Operator(format!("bad generator '{g}'")))?;
            if k == 0 || k > n {
                return err(format!("generator index {k} out of range 1..={n}"));
            }
            match kind {
                "X" => HeisenbergAlgebraElement::x(n, k - 1),
                "Y" => HeisenbergAlgebraElement::y(n, k - 1),
                _ => return err(format!("unknown generator '{g}'")),
            }
        };
        for (a, b) in x.v.iter_mut().zip(&term.v) {
            *a += b;
        }
        x.c += term.c;
    }
    Ok(x)
}

fn parse_fock(s: &str, n: usize) -> Result<FockSpec, CliError> {
    let s = s.trim();
    let mut words = s.split_whitespace();
    let head = words.next().ok_or_else(|| CliError::Operator("empty operator spec".into()))?;
    let rest: Vec<&str> = words.collect();
    let pair = |rest: &[&str]| -> Result<(MultiIndex, MultiIndex), CliError> {
        if rest.len() != 2 {
            return err(format!("'{s}' needs two multi-indices"));
        }
        let p = parse_multi_index(rest[0])?;
        let q = parse_multi_index(rest[1])?;
        if p.len() != n || q.len() != n {
            return err(format!("multi-indices in '{s}' must have {n} entries"));
        }
        Ok((p, q))
    };
    match head {
        "identity" if rest.is_empty() => Ok(FockSpec::Identity),
        "E" => pair(&rest).map(|(p, q)| FockSpec::Unit(p, q)),
        "A" => pair(&rest).map(|(p, q)| FockSpec::Monomial(p, q)),
        "dpi0" if rest.len() == 1 => Ok(FockSpec::Dpi0(parse_generators(rest[0], n)?)),
        _ => err(format!("unrecognized operator '{s}'")),
    }
}

/// Parse a specification for an `n`-dimensional Fock factor.
pub fn parse(s: &str, n: usize) -> Result<OperatorSpec, CliError> {
    let s = s.trim();
    if let Some(body) = s.strip_prefix("tensor(").and_then(|t| t.strip_suffix(')')) {
        let split = body
            .find('[')
            .and_then(|i| body[..i].rfind(',').map(|c| (c, i)))
            .ok_or_else(|| CliError::Operator(format!("tensor needs '(<fock-spec>, <matrix>)': '{s}'")))?;
        let fock = parse_fock(&body[..split.0], n)?;
        let m = parse_matrix(&body[split.1..])?;
        return Ok(OperatorSpec::Tensor(fock, m));
    }
    if let Some(body) = s.strip_prefix("dpi ") {
        let mut v = None;
        let mut c = 0.0;
        let mut a = None;
        for part in body.split_whitespace() {
            match part.split_once('=') {
                Some(("v", t)) => v = Some(parse_vector(t)?),
                Some(("c", t)) => c = t.parse().map_err(|_| CliError::Operator(format!("bad real '{t}'")))?,
                Some(("A", t)) => a = Some(parse_matrix(t)?),
                _ => return err(format!("unrecognized dpi field '{part}'")),
            }
        }
        let v = v.unwrap_or_else(|| vec![C64::new(0.0, 0.0); n]);
        let a = a.unwrap_or_else(|| CMatrix::zeros(n, n));
        if v.len() != n || a.nrows() != n {
            return err(format!("dpi fields must have dimension {n}"));
        }
        return Ok(OperatorSpec::Dpi { v, c, a });
    }
    parse_fock(s, n).map(OperatorSpec::Fock)
}

impl FockSpec {
    /// The operator as a polynomial-coefficient differential operator,
    /// when it is one.
    pub fn diff_operator(&self, n: usize, lambda: f64) -> Option<DiffOperator> {
        match self {
            FockSpec::Identity => Some(DiffOperator::identity(n, lambda)),
            FockSpec::Monomial(p, q) => DiffOperator::monomial(p.clone(), q.clone(), lambda).ok(),
            FockSpec::Dpi0(x) => Some(DiffOperator::dpi0(x, lambda)),
            FockSpec::Unit(..) => None,
        }
    }

    /// The truncated matrix on `basis`.
    pub fn matrix(&self, basis: &FockBasis) -> Result<FockOperator, CliError> {
        match self {
            FockSpec::Unit(p, q) => Ok(FockOperator::matrix_unit(basis, p, q)?),
            other => Ok(other
                .diff_operator(basis.n(), basis.lambda())
                .expect("non-unit specs are differential operators")
                .matrix(basis)?),
        }
    }
}
