use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::matrix::ExactMatrix;
use crate::linalg::scalar::Scalar;
use crate::partition::Partition;

/// Jordan block sizes of `m` at each supplied eigenvalue, read off from the
/// rank filtration: the number of blocks of size at least `k` at `λ` is
/// `rank((M-λ)^(k-1)) - rank((M-λ)^k)`.
///
/// Candidates that are not eigenvalues are dropped from the result. Fails
/// with `SpectrumMismatch` when the candidates do not exhaust the dimension.
pub fn jordan_structure(
    m: &ExactMatrix,
    eigenvalues: &[Scalar],
) -> Result<BTreeMap<Scalar, Partition>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(
            "Jordan structure of a non-square matrix".into(),
        ));
    }
    let n = m.rows();
    let mut out = BTreeMap::new();
    let mut found = 0;
    for lambda in eigenvalues {
        if out.contains_key(lambda) {
            continue;
        }
        let parts = blocks_at(m, lambda);
        if parts.is_empty() {
            continue;
        }
        found += parts.iter().sum::<usize>();
        out.insert(lambda.clone(), Partition::from_unsorted(parts));
    }
    if found != n {
        return Err(Error::SpectrumMismatch { found, expected: n });
    }
    Ok(out)
}

fn blocks_at(m: &ExactMatrix, lambda: &Scalar) -> Vec<usize> {
    let n = m.rows();
    let shifted = m.shift(lambda);
    // ranks[k] = rank((M - λ)^k)
    let mut ranks = vec![n];
    let mut power = ExactMatrix::identity(n);
    loop {
        power = &power * &shifted;
        let r = power.rank();
        let prev = *ranks.last().expect("nonempty");
        ranks.push(r);
        if r == prev {
            break;
        }
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (k, &c) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat(k + 1).take(c - next));
    }
    parts
}
