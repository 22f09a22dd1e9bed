//! Coadjoint orbit data for GL_n and the mirabolic group P_n.
//!
//! Functionals on the mirabolic Lie algebra are carried as matrices whose last
//! column is zero: the trace pairing against matrices with zero last row
//! identifies that space with the dual.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, ExactMatrix, Field, Scalar};
use crate::partition::Partition;

/// Eigenvalue data of one class: a single eigenvalue `a`, or over the reals a
/// conjugate pair `re ± i*im` with `im > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Eigenvalue {
    Single(Scalar),
    Pair { re: BigRational, im: BigRational },
}

impl Eigenvalue {
    pub fn real(a: BigRational) -> Self {
        Eigenvalue::Single(Scalar::real(a))
    }

    pub fn pair(re: BigRational, im: BigRational) -> Self {
        Eigenvalue::Pair { re, im }
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, Eigenvalue::Pair { .. })
    }

    /// Number of complex eigenvalues the class carries (1 or 2).
    pub fn multiplicity(&self) -> usize {
        if self.is_pair() {
            2
        } else {
            1
        }
    }

    /// The eigenvalues as elements of Q(i).
    pub fn values(&self) -> Vec<Scalar> {
        match self {
            Eigenvalue::Single(a) => vec![a.clone()],
            Eigenvalue::Pair { re, im } => {
                vec![
                    Scalar::new(re.clone(), im.clone()),
                    Scalar::new(re.clone(), -im.clone()),
                ]
            }
        }
    }

    /// Real part, used as the representation twist.
    pub fn re(&self) -> BigRational {
        match self {
            Eigenvalue::Single(a) => a.re().clone(),
            Eigenvalue::Pair { re, .. } => re.clone(),
        }
    }
}

impl Ord for Eigenvalue {
    /// Singles first, largest first; then pairs by real part and imaginary
    /// part, largest first.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Eigenvalue::Single(a), Eigenvalue::Single(b)) => b.cmp(a),
            (Eigenvalue::Single(_), Eigenvalue::Pair { .. }) => Ordering::Less,
            (Eigenvalue::Pair { .. }, Eigenvalue::Single(_)) => Ordering::Greater,
            (Eigenvalue::Pair { re: r1, im: i1 }, Eigenvalue::Pair { re: r2, im: i2 }) => {
                r2.cmp(r1).then_with(|| i2.cmp(i1))
            }
        }
    }
}

impl PartialOrd for Eigenvalue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Single(a) => write!(f, "{a}"),
            Eigenvalue::Pair { re, im } => {
                write!(f, "{}±{}i", format_rational(re), format_rational(im))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenvalueClass {
    pub eigenvalue: Eigenvalue,
    pub partition: Partition,
}

impl EigenvalueClass {
    pub fn new(eigenvalue: Eigenvalue, partition: Partition) -> Self {
        EigenvalueClass {
            eigenvalue,
            partition,
        }
    }

    /// Contribution to the matrix size.
    pub fn size(&self) -> usize {
        self.eigenvalue.multiplicity() * self.partition.weight()
    }

    /// Matrix size of one block of size `k` in this class.
    pub fn block_width(&self, k: usize) -> usize {
        self.eigenvalue.multiplicity() * k
    }

    /// Dimension of the centralizer of the class's Jordan matrix, over the
    /// field of definition of the orbit.
    pub fn centralizer_dim(&self) -> usize {
        let p = self.partition.parts();
        let sum: usize = p
            .iter()
            .map(|&s| p.iter().map(|&t| s.min(t)).sum::<usize>())
            .sum();
        self.eigenvalue.multiplicity() * sum
    }
}

/// A GL_n coadjoint orbit, described by its Jordan data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "OrbitSpec", into = "OrbitSpec")]
pub struct OrbitDatum {
    field: Field,
    classes: Vec<EigenvalueClass>,
}

impl OrbitDatum {
    /// Validates and sorts the classes into canonical order.
    pub fn new(field: Field, mut classes: Vec<EigenvalueClass>) -> Result<Self> {
        for c in &classes {
            if c.partition.is_empty() {
                return Err(Error::InvalidOrbit(format!(
                    "class {} has an empty partition",
                    c.eigenvalue
                )));
            }
            match (&c.eigenvalue, field) {
                (Eigenvalue::Single(a), Field::Real) if !a.is_real() => {
                    return Err(Error::InvalidOrbit(format!(
                        "eigenvalue {a} is not real; over R use a conjugate pair with positive imaginary part"
                    )))
                }
                (Eigenvalue::Pair { .. }, Field::Complex) => {
                    return Err(Error::InvalidOrbit("conjugate-pair classes only exist over R".into()))
                }
                (Eigenvalue::Pair { im, .. }, _) if !im.is_positive() => {
                    return Err(Error::InvalidOrbit(format!(
                        "pair class needs a positive imaginary part, got {}",
                        format_rational(im)
                    )))
                }
                _ => {}
            }
        }
        classes.sort();
        if let Some(w) = classes
            .windows(2)
            .find(|w| w[0].eigenvalue == w[1].eigenvalue)
        {
            return Err(Error::InvalidOrbit(format!(
                "eigenvalue {} appears in two classes",
                w[0].eigenvalue
            )));
        }
        Ok(OrbitDatum { field, classes })
    }

    pub fn empty(field: Field) -> Self {
        OrbitDatum {
            field,
            classes: Vec::new(),
        }
    }

    /// Over C: classes `(a, P)` with real or Gaussian-rational `a`.
    pub fn complex(classes: Vec<(Scalar, Partition)>) -> Result<Self> {
        let classes = classes
            .into_iter()
            .map(|(a, p)| EigenvalueClass::new(Eigenvalue::Single(a), p))
            .collect();
        OrbitDatum::new(Field::Complex, classes)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn classes(&self) -> &[EigenvalueClass] {
        &self.classes
    }

    pub fn size(&self) -> usize {
        self.classes.iter().map(EigenvalueClass::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// All eigenvalues in Q(i), suitable as hints for Jordan identification.
    pub fn eigenvalue_hints(&self) -> Vec<Scalar> {
        self.classes
            .iter()
            .flat_map(|c| c.eigenvalue.values())
            .collect()
    }

    /// Position of the first row of each class inside `realize_xi`.
    pub fn class_offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.classes
            .iter()
            .map(|c| {
                let o = acc;
                acc += c.size();
                o
            })
            .collect()
    }

    /// Block-diagonal representative: classes in canonical order, and inside
    /// each class the blocks in increasing size. Pair classes use the real
    /// blocks `[[J_k(a), b I], [-b I, J_k(a)]]`.
    pub fn realize_xi(&self) -> ExactMatrix {
        let mut blocks = Vec::new();
        for c in &self.classes {
            for (k, l) in c.partition.ascending_blocks() {
                for _ in 0..l {
                    blocks.push(match &c.eigenvalue {
                        Eigenvalue::Single(a) => ExactMatrix::jordan_block(k, a),
                        Eigenvalue::Pair { re, im } => pair_block(k, re, im),
                    });
                }
            }
        }
        ExactMatrix::block_diag(&blocks)
    }

    /// Centralizer dimension of `realize_xi` computed from the partitions.
    pub fn centralizer_dim(&self) -> usize {
        self.classes
            .iter()
            .map(EigenvalueClass::centralizer_dim)
            .sum()
    }

    pub fn jordan_decompose(&self) -> JordanDecomposition {
        let mut hyperbolic: BTreeMap<BigRational, usize> = BTreeMap::new();
        let mut elliptic: BTreeMap<BigRational, usize> = BTreeMap::new();
        for c in &self.classes {
            let w = c.partition.weight();
            for v in c.eigenvalue.values() {
                *hyperbolic.entry(v.re().clone()).or_default() += w;
                if !v.im().is_zero() {
                    *elliptic.entry(v.im().clone()).or_default() += w;
                }
            }
        }
        JordanDecomposition {
            hyperbolic: hyperbolic.into_iter().rev().collect(),
            elliptic: elliptic.into_iter().rev().collect(),
            nilpotent: self
                .classes
                .iter()
                .map(|c| (c.eigenvalue.clone(), c.partition.clone()))
                .collect(),
        }
    }

    /// Rebuilds an orbit datum from Jordan data over Q(i). Over R, conjugate
    /// eigenvalues are merged into pair classes and must carry equal data.
    pub fn from_jordan_data(field: Field, data: &BTreeMap<Scalar, Partition>) -> Result<Self> {
        let mut classes = Vec::new();
        for (v, p) in data {
            if field == Field::Complex || v.is_real() {
                classes.push(EigenvalueClass::new(
                    Eigenvalue::Single(v.clone()),
                    p.clone(),
                ));
                continue;
            }
            if !v.im().is_positive() {
                if !data.contains_key(&v.conj()) {
                    return Err(Error::ConjugatePairMismatch(format!(
                        "{v} has no conjugate partner"
                    )));
                }
                continue;
            }
            match data.get(&v.conj()) {
                Some(q) if q == p => classes.push(EigenvalueClass::new(
                    Eigenvalue::pair(v.re().clone(), v.im().clone()),
                    p.clone(),
                )),
                _ => {
                    return Err(Error::ConjugatePairMismatch(format!(
                        "{v} and {}",
                        v.conj()
                    )))
                }
            }
        }
        OrbitDatum::new(field, classes)
    }
}

impl fmt::Display for OrbitDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self
            .classes
            .iter()
            .map(|c| format!("{}:{}", c.eigenvalue, c.partition))
            .collect();
        write!(f, "{}[{}]", self.field, classes.join(", "))
    }
}

/// `[[J_k(a), b I], [-b I, J_k(a)]]`.
pub fn pair_block(k: usize, re: &BigRational, im: &BigRational) -> ExactMatrix {
    let j = ExactMatrix::jordan_block(k, &Scalar::real(re.clone()));
    let b = ExactMatrix::identity(k).scale(&Scalar::real(im.clone()));
    let mut m = ExactMatrix::zeros(2 * k, 2 * k);
    m.set_block(0, 0, &j);
    m.set_block(k, k, &j);
    m.set_block(0, k, &b);
    m.set_block(k, 0, &b.scale(&-Scalar::one()));
    m
}

/// Hyperbolic, elliptic and nilpotent parts of an orbit. The semisimple parts
/// list each distinct real (resp. nonzero imaginary) part with its total
/// multiplicity, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanDecomposition {
    pub hyperbolic: Vec<(BigRational, usize)>,
    pub elliptic: Vec<(BigRational, usize)>,
    pub nilpotent: Vec<(Eigenvalue, Partition)>,
}

/// Zeroes the last column: the canonical representative of the restriction
/// of `x` to the mirabolic Lie algebra.
pub fn project_to_p_star(x: &ExactMatrix) -> ExactMatrix {
    assert!(x.is_square(), "projection needs a square matrix");
    let n = x.rows();
    let mut out = x.clone();
    if n > 0 {
        for i in 0..n {
            out.set(i, n - 1, Scalar::zero());
        }
    }
    out
}

/// A P_n coadjoint orbit: the orbit of `pr'(diag(A, J_depth))` with `A` in the
/// GL_{n-depth} orbit `a_part`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MirabolicOrbitDatum {
    depth: usize,
    a_part: OrbitDatum,
}

impl MirabolicOrbitDatum {
    pub fn new(depth: usize, a_part: OrbitDatum) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidOrbit("depth must be at least 1".into()));
        }
        Ok(MirabolicOrbitDatum { depth, a_part })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn a_part(&self) -> &OrbitDatum {
        &self.a_part
    }

    pub fn field(&self) -> Field {
        self.a_part.field()
    }

    pub fn size(&self) -> usize {
        self.depth + self.a_part.size()
    }

    /// Normal form `pr'(diag(realize_xi(A), J_depth(0)))`.
    pub fn realize(&self) -> ExactMatrix {
        let a = self.a_part.realize_xi();
        let j = ExactMatrix::jordan_block(self.depth, &Scalar::zero());
        project_to_p_star(&ExactMatrix::block_diag(&[a, j]))
    }

    /// Dimension of the coadjoint stabilizer predicted by the normal form:
    /// centralizer of `A` plus `n - depth`.
    pub fn predicted_stabilizer_dim(&self) -> usize {
        self.a_part.centralizer_dim() + self.a_part.size()
    }
}

impl fmt::Display for MirabolicOrbitDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "depth {} over {}", self.depth, self.a_part)
    }
}

/// JSON form of one class: rational strings, `im` only when nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSpec {
    pub re: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<String>,
    pub partition: Vec<usize>,
}

/// JSON form of an [`OrbitDatum`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitSpec {
    pub field: Field,
    pub classes: Vec<ClassSpec>,
}

impl ClassSpec {
    fn from_class(c: &EigenvalueClass) -> Self {
        let (re, im) = match &c.eigenvalue {
            Eigenvalue::Single(a) => (a.re().clone(), a.im().clone()),
            Eigenvalue::Pair { re, im } => (re.clone(), im.clone()),
        };
        ClassSpec {
            re: format_rational(&re),
            im: (!im.is_zero()).then(|| format_rational(&im)),
            partition: c.partition.parts().to_vec(),
        }
    }

    fn to_class(&self, field: Field) -> Result<EigenvalueClass> {
        let re = parse_rational(&self.re)?;
        let im = match &self.im {
            Some(s) => parse_rational(s)?,
            None => BigRational::zero(),
        };
        let eigenvalue = if im.is_zero() {
            Eigenvalue::real(re)
        } else {
            match field {
                Field::Complex => Eigenvalue::Single(Scalar::new(re, im)),
                Field::Real => Eigenvalue::pair(re, im),
            }
        };
        Ok(EigenvalueClass::new(
            eigenvalue,
            Partition::new(self.partition.clone())?,
        ))
    }
}

impl From<OrbitDatum> for OrbitSpec {
    fn from(o: OrbitDatum) -> Self {
        OrbitSpec {
            field: o.field,
            classes: o.classes.iter().map(ClassSpec::from_class).collect(),
        }
    }
}

impl TryFrom<OrbitSpec> for OrbitDatum {
    type Error = Error;

    fn try_from(spec: OrbitSpec) -> Result<Self> {
        let classes = spec
            .classes
            .iter()
            .map(|c| c.to_class(spec.field))
            .collect::<Result<Vec<_>>>()?;
        OrbitDatum::new(spec.field, classes)
    }
}

/// JSON form of a [`MirabolicOrbitDatum`]; the field is optional on input and
/// defaults to C.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MirabolicSpec {
    #[serde(default = "default_field")]
    pub field: Field,
    pub depth: usize,
    pub a_part: Vec<ClassSpec>,
}

fn default_field() -> Field {
    Field::Complex
}

impl From<&MirabolicOrbitDatum> for MirabolicSpec {
    fn from(m: &MirabolicOrbitDatum) -> Self {
        MirabolicSpec {
            field: m.field(),
            depth: m.depth,
            a_part: m.a_part.classes.iter().map(ClassSpec::from_class).collect(),
        }
    }
}

impl TryFrom<MirabolicSpec> for MirabolicOrbitDatum {
    type Error = Error;

    fn try_from(spec: MirabolicSpec) -> Result<Self> {
        let a_part = OrbitDatum::try_from(OrbitSpec {
            field: spec.field,
            classes: spec.a_part,
        })?;
        MirabolicOrbitDatum::new(spec.depth, a_part)
    }
}

impl Serialize for MirabolicOrbitDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MirabolicSpec::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MirabolicOrbitDatum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = MirabolicSpec::deserialize(d)?;
        MirabolicOrbitDatum::try_from(spec).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{jordan_structure, rational};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn real_class(a: i64, p: &[usize]) -> EigenvalueClass {
        EigenvalueClass::new(Eigenvalue::real(rational(a, 1)), part(p))
    }

    #[test]
    fn realize_nilpotent_block() {
        let o = OrbitDatum::new(Field::Complex, vec![real_class(0, &[2])]).unwrap();
        assert_eq!(o.realize_xi(), ExactMatrix::from_ints(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn realize_pair_block() {
        let c = EigenvalueClass::new(Eigenvalue::pair(rational(0, 1), rational(1, 1)), part(&[1]));
        let o = OrbitDatum::new(Field::Real, vec![c]).unwrap();
        assert_eq!(o.realize_xi(), ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn realize_canonical_order() {
        let o = OrbitDatum::new(
            Field::Complex,
            vec![real_class(1, &[1]), real_class(2, &[1])],
        )
        .unwrap();
        assert_eq!(
            o.realize_xi(),
            ExactMatrix::diagonal(&[Scalar::from_int(2), Scalar::from_int(1)])
        );
        let o = OrbitDatum::new(
            Field::Complex,
            vec![real_class(2, &[1]), real_class(1, &[1])],
        )
        .unwrap();
        assert_eq!(o.classes()[1].eigenvalue, Eigenvalue::real(rational(1, 1)));
    }

    #[test]
    fn duplicate_eigenvalues_are_rejected() {
        let r = OrbitDatum::new(
            Field::Complex,
            vec![real_class(1, &[1]), real_class(1, &[2])],
        );
        assert!(matches!(r, Err(Error::InvalidOrbit(_))));
    }

    #[test]
    fn projection_examples() {
        let x = ExactMatrix::from_ints(&[&[1, 5], &[3, 7]]);
        assert_eq!(
            project_to_p_star(&x),
            ExactMatrix::from_ints(&[&[1, 0], &[3, 0]])
        );
        let j = ExactMatrix::jordan_block(2, &Scalar::zero());
        assert_eq!(project_to_p_star(&j), j);
    }

    #[test]
    fn jordan_decomposition_examples() {
        let o = OrbitDatum::new(Field::Complex, vec![real_class(3, &[2, 1])]).unwrap();
        let d = o.jordan_decompose();
        assert_eq!(d.hyperbolic, vec![(rational(3, 1), 3)]);
        assert!(d.elliptic.is_empty());
        assert_eq!(d.nilpotent[0].1, part(&[2, 1]));

        let c = EigenvalueClass::new(
            Eigenvalue::pair(rational(0, 1), rational(2, 1)),
            part(&[1, 1]),
        );
        let d = OrbitDatum::new(Field::Real, vec![c])
            .unwrap()
            .jordan_decompose();
        assert_eq!(d.hyperbolic, vec![(rational(0, 1), 4)]);
        assert_eq!(d.elliptic, vec![(rational(2, 1), 2), (rational(-2, 1), 2)]);
    }

    #[test]
    fn realize_then_identify_round_trips() {
        let pair = EigenvalueClass::new(
            Eigenvalue::pair(rational(1, 2), rational(3, 2)),
            part(&[2, 1]),
        );
        let o = OrbitDatum::new(Field::Real, vec![real_class(-1, &[2, 2]), pair]).unwrap();
        let js = jordan_structure(&o.realize_xi(), &o.eigenvalue_hints()).unwrap();
        assert_eq!(OrbitDatum::from_jordan_data(Field::Real, &js).unwrap(), o);
    }

    #[test]
    fn json_round_trip() {
        let json = r#"{"field":"R","classes":[{"re":"0","im":"3/2","partition":[1]},{"re":"2","partition":[2,1]}]}"#;
        let o: OrbitDatum = serde_json::from_str(json).unwrap();
        assert_eq!(o.size(), 5);
        let back = serde_json::to_string(&o).unwrap();
        assert_eq!(
            back,
            r#"{"field":"R","classes":[{"re":"2","partition":[2,1]},{"re":"0","im":"3/2","partition":[1]}]}"#
        );
        assert!(serde_json::from_str::<OrbitDatum>(
            r#"{"field":"R","classes":[{"re":"0","im":"-1","partition":[1]}]}"#
        )
        .is_err());
    }

    #[test]
    fn mirabolic_json() {
        let m: MirabolicOrbitDatum = serde_json::from_str(r#"{"depth":3,"a_part":[]}"#).unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"field":"C","depth":3,"a_part":[]}"#
        );
    }
}
