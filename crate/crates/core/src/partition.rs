//! Integer partitions, stored with parts in weakly decreasing order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with no zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and discards zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// Transpose of the Young diagram: part `i` counts the parts of `self`
    /// that are larger than `i`.
    pub fn dual(&self) -> Partition {
        let width = self.largest().unwrap_or(0);
        let parts = (0..width)
            .map(|i| self.parts.iter().take_while(|&&p| p > i).count())
            .collect();
        Partition { parts }
    }

    pub fn remove_largest_part(&self) -> Result<Partition> {
        match self.parts.split_first() {
            Some((_, rest)) => Ok(Partition {
                parts: rest.to_vec(),
            }),
            None => Err(Error::EmptyPartition),
        }
    }

    /// Distinct part sizes in increasing order, each with its multiplicity.
    pub fn ascending_blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((k, l)) if *k == p => *l += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Exponent notation `{k1^l1 k2^l2 ...}` with `k1 > k2 > ...`.
    pub fn exponent_notation(&self) -> String {
        let terms: Vec<String> = self
            .ascending_blocks()
            .iter()
            .rev()
            .map(|&(k, l)| {
                if l == 1 {
                    k.to_string()
                } else {
                    format!("{k}^{l}")
                }
            })
            .collect();
        format!("{{{}}}", terms.join(" "))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p(&[4]).dual(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 2]).dual(), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).dual(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().dual(), Partition::empty());
    }

    #[test]
    fn remove_largest_examples() {
        assert_eq!(p(&[2, 1]).remove_largest_part().unwrap(), p(&[1]));
        assert_eq!(p(&[1]).remove_largest_part().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 3, 2]).remove_largest_part().unwrap(), p(&[3, 2]));
        assert_eq!(
            Partition::empty().remove_largest_part(),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3, 1]), p(&[3, 1, 1]));
    }

    #[test]
    fn ascending_view_and_notation() {
        let q = p(&[3, 3, 2, 1, 1, 1]);
        assert_eq!(q.ascending_blocks(), vec![(1, 3), (2, 1), (3, 2)]);
        assert_eq!(q.exponent_notation(), "{3^2 2 1^3}");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn json_is_a_descending_array() {
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
