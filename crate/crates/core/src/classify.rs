//! Normal forms of functionals on the mirabolic Lie algebra.
//!
//! Every P_n-orbit in the dual contains exactly one element of the form
//! `pr'(diag(A, J_j))` up to conjugating `A`. The reduction below peels off the
//! nilpotent tail one step at a time: the last row of the active block is moved
//! to a unit vector by a Levi element, and the column it pollutes is cleaned up
//! by a cascade of unipotent conjugations.

use crate::error::{Error, Result};
use crate::linalg::{jordan_structure, rational_eigenvalues, ExactMatrix, Field, Scalar};
use crate::orbit::{project_to_p_star, MirabolicOrbitDatum, OrbitDatum};

/// Result of [`classify`] with its certificate: `p` lies in P_n and
/// `pr'(p x p^{-1})` equals `normal_form`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub datum: MirabolicOrbitDatum,
    pub conjugator: ExactMatrix,
    pub normal_form: ExactMatrix,
}

/// Output of [`reduce`]: `pr'(conjugator x conjugator^{-1})` equals
/// `normal_form = pr'(diag(a_block, J_depth(0)))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub depth: usize,
    pub a_block: ExactMatrix,
    pub conjugator: ExactMatrix,
    pub normal_form: ExactMatrix,
}

pub fn classify(x: &ExactMatrix, field: Field, hints: &[Scalar]) -> Result<MirabolicOrbitDatum> {
    classify_with_certificate(x, field, hints).map(|c| c.datum)
}

pub fn classify_with_certificate(
    x: &ExactMatrix,
    field: Field,
    hints: &[Scalar],
) -> Result<Classification> {
    identify(reduce(x, field)?, field, hints)
}

/// Classification without eigenvalue hints. The candidates are the rational
/// eigenvalues of the reduced block when it is real, and its diagonal
/// entries otherwise; anything else surfaces as `SpectrumMismatch`.
pub fn classify_auto(x: &ExactMatrix, field: Field) -> Result<Classification> {
    let r = reduce(x, field)?;
    let hints = default_hints(&r.a_block);
    identify(r, field, &hints)
}

pub fn default_hints(a: &ExactMatrix) -> Vec<Scalar> {
    match rational_eigenvalues(a) {
        Some(roots) => roots.into_iter().map(Scalar::real).collect(),
        None => (0..a.rows()).map(|i| a.get(i, i).clone()).collect(),
    }
}

fn identify(r: Reduction, field: Field, hints: &[Scalar]) -> Result<Classification> {
    let a_part = OrbitDatum::from_jordan_data(field, &jordan_structure(&r.a_block, hints)?)?;
    let datum = MirabolicOrbitDatum::new(r.depth, a_part)?;
    Ok(Classification {
        datum,
        conjugator: r.conjugator,
        normal_form: r.normal_form,
    })
}

/// Brings `x` to block normal form by P_n-conjugation and checks the result.
pub fn reduce(x: &ExactMatrix, field: Field) -> Result<Reduction> {
    check_representative(x, field)?;
    let n = x.rows();
    let mut cur = x.clone();
    let mut conj = ExactMatrix::identity(n);
    // rows m..n-1 (0-based) already form the nilpotent tail
    let mut m = n;
    while m > 1 {
        let beta: Vec<Scalar> = cur.row(m - 1)[..m - 1].to_vec();
        let Some(p) = beta.iter().rposition(|b| !b.is_zero()) else {
            break;
        };
        let (g, h) = levi_step(&beta, p, n);
        cur = &(&g * &cur) * &h;
        conj = &g * &conj;
        for c in (m - 2)..(n - 1) {
            let mut u = ExactMatrix::identity(n);
            let mut u_inv = ExactMatrix::identity(n);
            for i in 0..=c {
                let a = cur.get(i, c);
                if !a.is_zero() {
                    u.set(i, c + 1, -a);
                    u_inv.set(i, c + 1, a.clone());
                }
            }
            cur = project_to_p_star(&(&(&u * &cur) * &u_inv));
            conj = &u * &conj;
        }
        m -= 1;
    }
    let depth = n - m + 1;
    let a = cur.submatrix(0, 0, m - 1, m - 1);

    let tail = ExactMatrix::jordan_block(depth, &Scalar::zero());
    let expected = project_to_p_star(&ExactMatrix::block_diag(&[a.clone(), tail]));
    if cur != expected {
        return Err(Error::Certificate(
            "reduction did not reach block normal form".into(),
        ));
    }
    let inv = conj
        .inverse()
        .ok_or_else(|| Error::Certificate("conjugator is singular".into()))?;
    if project_to_p_star(&(&(&conj * x) * &inv)) != cur {
        return Err(Error::Certificate(
            "conjugator does not reproduce the normal form".into(),
        ));
    }
    Ok(Reduction {
        depth,
        a_block: a,
        conjugator: conj,
        normal_form: cur,
    })
}

fn check_representative(x: &ExactMatrix, field: Field) -> Result<()> {
    if !x.is_square() || x.rows() == 0 {
        return Err(Error::MalformedRepresentative(format!(
            "expected a nonempty square matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let n = x.rows();
    if (0..n).any(|i| !x.get(i, n - 1).is_zero()) {
        return Err(Error::MalformedRepresentative(
            "last column must be zero".into(),
        ));
    }
    if field == Field::Real && !x.is_real() {
        return Err(Error::MalformedRepresentative(
            "non-real entry in a real functional".into(),
        ));
    }
    Ok(())
}

/// `diag(g, I)` and its inverse with `beta g^{-1} = e_{m-1}` for the row vector
/// `beta` of length `m-1`; `p` is the last nonzero coordinate of `beta`.
fn levi_step(beta: &[Scalar], p: usize, n: usize) -> (ExactMatrix, ExactMatrix) {
    let last = beta.len() - 1;
    let mut h = ExactMatrix::identity(n);
    let bp_inv = beta[p].inv().expect("pivot is nonzero");
    for c in 0..=last {
        if c == last {
            continue;
        }
        if c == p {
            h.set(p, p, Scalar::zero());
            h.set(last, p, Scalar::one());
        } else if !beta[c].is_zero() {
            h.set(p, c, -(&beta[c] * &bp_inv));
        }
    }
    if p != last {
        h.set(last, last, Scalar::zero());
    }
    h.set(p, last, bp_inv);
    let g = h.inverse().expect("Levi step is invertible");
    (g, h)
}

/// Dimension of `{Y in p_n : pr'([Y, x]) = 0}`, the Lie algebra of the
/// coadjoint stabilizer of the functional represented by `x`.
pub fn stabilizer_dim(x: &ExactMatrix) -> usize {
    commutant_dim(x, false)
}

/// Dimension of `{Y in p_n : [Y, xi] = 0}` for a point `xi` of gl_n^*.
pub fn point_stabilizer_dim(xi: &ExactMatrix) -> usize {
    commutant_dim(xi, true)
}

/// Dimension of the centralizer of `a` in gl_m.
pub fn centralizer_dim(a: &ExactMatrix) -> usize {
    let m = a.rows();
    let mut sys = ExactMatrix::zeros(m * m, m * m);
    for r in 0..m {
        for c in 0..m {
            let eq = r * m + c;
            // [a, Y]_{rc} = sum_k a_{rk} Y_{kc} - Y_{rk} a_{kc}
            for k in 0..m {
                add_to(&mut sys, eq, k * m + c, a.get(r, k));
                add_to(&mut sys, eq, r * m + k, &-a.get(k, c));
            }
        }
    }
    sys.nullity()
}

fn commutant_dim(x: &ExactMatrix, all_columns: bool) -> usize {
    let n = x.rows();
    if n == 0 {
        return 0;
    }
    // unknowns Y_{ij} with i < n-1 (last row of Y is zero), index i*n + j
    let unknowns = (n - 1) * n;
    let eq_cols = if all_columns { n } else { n - 1 };
    let mut sys = ExactMatrix::zeros(n * eq_cols, unknowns);
    for r in 0..n {
        for c in 0..eq_cols {
            let eq = r * eq_cols + c;
            // [x, Y]_{rc} = sum_k x_{rk} Y_{kc} - Y_{rk} x_{kc}
            for k in 0..n - 1 {
                add_to(&mut sys, eq, k * n + c, x.get(r, k));
            }
            if r < n - 1 {
                for k in 0..n {
                    add_to(&mut sys, eq, r * n + k, &-x.get(k, c));
                }
            }
        }
    }
    sys.nullity()
}

fn add_to(m: &mut ExactMatrix, i: usize, j: usize, v: &Scalar) {
    if !v.is_zero() {
        let s = m.get(i, j) + v;
        m.set(i, j, s);
    }
}
