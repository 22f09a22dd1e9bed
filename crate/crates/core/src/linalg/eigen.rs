use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::linalg::matrix::ExactMatrix;
use crate::linalg::scalar::Scalar;

/// Largest constant or leading coefficient whose divisors we are willing to
/// enumerate.
const DIVISOR_LIMIT: u64 = 1 << 40;

/// Coefficients of `det(t - m)`, constant term first. Faddeev-LeVerrier.
pub fn characteristic_polynomial(m: &ExactMatrix) -> Vec<Scalar> {
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut acc = ExactMatrix::zeros(n, n);
    for k in 1..=n {
        acc = (&(m * &acc)).shift(&-coeffs[n - k + 1].clone());
        let trace = (0..n).fold(Scalar::zero(), |s, i| s + (m * &acc).get(i, i));
        coeffs[n - k] = -(trace / Scalar::from_int(k as i64));
    }
    coeffs
}

/// Distinct rational eigenvalues of a real matrix, ascending, via the
/// rational root test on its characteristic polynomial. `None` when the
/// matrix is not real or the coefficients are too large to factor.
pub fn rational_eigenvalues(m: &ExactMatrix) -> Option<Vec<BigRational>> {
    if !m.is_real() {
        return None;
    }
    let rat: Vec<BigRational> = characteristic_polynomial(m)
        .iter()
        .map(|c| c.re().clone())
        .collect();
    let denom = rat.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut poly: Vec<BigInt> = rat
        .iter()
        .map(|c| (c * BigRational::from_integer(denom.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    if poly.first().is_some_and(Zero::is_zero) && poly.len() > 1 {
        roots.push(BigRational::zero());
        while poly.len() > 1 && poly[0].is_zero() {
            poly.remove(0);
        }
    }
    if poly.len() > 1 {
        let ps = divisors(&poly[0])?;
        let qs = divisors(poly.last().expect("nonempty"))?;
        for p in &ps {
            for q in &qs {
                for sign in [1, -1] {
                    let r = BigRational::new(BigInt::from(sign) * p, q.clone());
                    if !roots.contains(&r) && horner(&poly, &r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn horner(poly: &[BigInt], x: &BigRational) -> BigRational {
    poly.iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    })
}

fn divisors(v: &BigInt) -> Option<Vec<BigInt>> {
    let v = v.abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rational;

    #[test]
    fn characteristic_polynomial_of_a_jordan_block() {
        let j = ExactMatrix::jordan_block(2, &Scalar::from_int(3));
        let c = characteristic_polynomial(&j);
        assert_eq!(
            c,
            vec![Scalar::from_int(9), Scalar::from_int(-6), Scalar::one()]
        );
    }

    #[test]
    fn finds_rational_roots_only() {
        // eigenvalues 0, -1/2 and the irrational pair of t^2 - 2
        let m = ExactMatrix::block_diag(&[
            ExactMatrix::diagonal(&[Scalar::zero(), Scalar::from_ratio(-1, 2)]),
            ExactMatrix::from_ints(&[&[0, 2], &[1, 0]]),
        ]);
        assert_eq!(
            rational_eigenvalues(&m).unwrap(),
            vec![rational(-1, 2), rational(0, 1)]
        );
        assert_eq!(
            rational_eigenvalues(&ExactMatrix::zeros(0, 0)).unwrap(),
            vec![]
        );
        assert!(rational_eigenvalues(&ExactMatrix::diagonal(&[Scalar::i()])).is_none());
    }
}
