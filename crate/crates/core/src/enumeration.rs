//! Index selections: representatives of the orbits of the centralizer of
//! `xi` on nonzero row vectors, and the matrices `g_I` moving `e_n` to them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Scalar};
use crate::orbit::OrbitDatum;

/// For each selected class, the selected blocks (indices into the class's
/// ascending block list) and the chosen `x` with `1 <= x <= k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSelection(pub BTreeMap<usize, BTreeMap<usize, usize>>);

impl IndexSelection {
    /// Sorted `(class, block, x)` triples.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        self.0
            .iter()
            .flat_map(|(&c, blocks)| blocks.iter().map(move |(&b, &x)| (c, b, x)))
            .collect()
    }

    pub fn from_triples(triples: &[(usize, usize, usize)]) -> Self {
        let mut map: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
        for &(c, b, x) in triples {
            map.entry(c).or_default().insert(b, x);
        }
        IndexSelection(map)
    }

    /// Checks both ordering conditions against the orbit's block data.
    pub fn validate(&self, o: &OrbitDatum) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::InvalidSelection("no class selected".into()));
        }
        for (&j, blocks) in &self.0 {
            let class = o
                .classes()
                .get(j)
                .ok_or_else(|| Error::InvalidSelection(format!("class {j} does not exist")))?;
            if blocks.is_empty() {
                return Err(Error::InvalidSelection(format!(
                    "class {j} has no selected block"
                )));
            }
            let asc = class.partition.ascending_blocks();
            let mut prev: Option<(usize, usize)> = None;
            for (&i, &x) in blocks {
                let &(k, _) = asc.get(i).ok_or_else(|| {
                    Error::InvalidSelection(format!("class {j} has no block {i}"))
                })?;
                if x == 0 || x > k {
                    return Err(Error::InvalidSelection(format!(
                        "x = {x} out of range 1..={k}"
                    )));
                }
                if let Some((pk, px)) = prev {
                    if px >= x || pk - px >= k - x {
                        return Err(Error::InvalidSelection(format!(
                            "class {j}: blocks violate the ordering conditions at block {i}"
                        )));
                    }
                }
                prev = Some((k, x));
            }
        }
        Ok(())
    }

    /// 1-based coordinates of the ones of `v_I` inside `realize_xi(o)`.
    pub fn positions(&self, o: &OrbitDatum) -> Vec<usize> {
        let offsets = o.class_offsets();
        let mut out = Vec::new();
        for (&j, blocks) in &self.0 {
            let class = &o.classes()[j];
            let asc = class.partition.ascending_blocks();
            let w = class.eigenvalue.multiplicity();
            for (&i, &x) in blocks {
                let before: usize = asc[..i].iter().map(|&(k, l)| w * k * l).sum();
                let (k, l) = asc[i];
                out.push(offsets[j] + before + k * (w * l - 1) + x);
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for IndexSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .triples()
            .iter()
            .map(|(c, b, x)| format!("{c}.{b}:{x}"))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// Every valid selection, ordered by the sorted `(class, block, x)` triples.
pub fn enumerate_selections(o: &OrbitDatum) -> Vec<IndexSelection> {
    let per_class: Vec<Vec<BTreeMap<usize, usize>>> = o
        .classes()
        .iter()
        .map(|c| class_choices(&c.partition.ascending_blocks()))
        .collect();
    let mut out = Vec::new();
    let m = per_class.len();
    for mask in 1u64..(1u64 << m) {
        let chosen: Vec<usize> = (0..m).filter(|j| mask & (1 << j) != 0).collect();
        let mut acc = vec![BTreeMap::new()];
        for &j in &chosen {
            let mut next = Vec::with_capacity(acc.len() * per_class[j].len());
            for partial in &acc {
                for choice in &per_class[j] {
                    let mut sel: BTreeMap<usize, BTreeMap<usize, usize>> = partial.clone();
                    sel.insert(j, choice.clone());
                    next.push(sel);
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(IndexSelection));
    }
    out.sort_by_key(IndexSelection::triples);
    out
}

/// Nonempty block choices for one class with ascending blocks `(k, l)`.
fn class_choices(asc: &[(usize, usize)]) -> Vec<BTreeMap<usize, usize>> {
    fn go(
        asc: &[(usize, usize)],
        start: usize,
        prev: Option<(usize, usize)>,
        cur: &mut BTreeMap<usize, usize>,
        out: &mut Vec<BTreeMap<usize, usize>>,
    ) {
        for i in start..asc.len() {
            let k = asc[i].0;
            for x in 1..=k {
                if let Some((pk, px)) = prev {
                    if px >= x || pk - px >= k - x {
                        continue;
                    }
                }
                cur.insert(i, x);
                out.push(cur.clone());
                go(asc, i + 1, Some((k, x)), cur, out);
                cur.remove(&i);
            }
        }
    }
    let mut out = Vec::new();
    go(asc, 0, None, &mut BTreeMap::new(), &mut out);
    out
}

/// The selection of the dense orbit: every class, its largest block, `x = k`.
pub fn dense_selection(o: &OrbitDatum) -> IndexSelection {
    let map = o
        .classes()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let asc = c.partition.ascending_blocks();
            let last = asc.len() - 1;
            (j, BTreeMap::from([(last, asc[last].0)]))
        })
        .collect();
    IndexSelection(map)
}

/// 0/1 row vector with ones at [`IndexSelection::positions`].
pub fn build_v_i(o: &OrbitDatum, sel: &IndexSelection) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); o.size()];
    for p in sel.positions(o) {
        v[p - 1] = Scalar::one();
    }
    v
}

/// Invertible `g_I` whose last row is `v_I`, so that `e_n g_I = v_I`.
pub fn build_g_i(o: &OrbitDatum, sel: &IndexSelection) -> ExactMatrix {
    let n = o.size();
    let positions = sel.positions(o);
    let k = *positions.last().expect("selection is nonempty");
    let mut g = ExactMatrix::zeros(n, n);
    // rows 1..k-1 keep e_1..e_{k-1}, rows k..n-1 carry e_{k+1}..e_n
    for r in 0..k - 1 {
        g.set(r, r, Scalar::one());
    }
    for r in k - 1..n - 1 {
        g.set(r, r + 1, Scalar::one());
    }
    for &p in &positions {
        g.set(n - 1, p - 1, Scalar::one());
    }
    g
}
