//! Symbolic unitary representation labels of GL_n and P_n, the orbit
//! attachment rules, and adduction (restriction to the mirabolic group).

use std::cmp::Ordering;
use std::fmt;

use num::{BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::enumeration::dense_selection;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, rational, Field};
use crate::moment::symbolic_image;
use crate::orbit::{Eigenvalue, MirabolicOrbitDatum, OrbitDatum};

/// One ×-factor. `twist` is the `a` of `|det|^{ia}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `|det|^{ia}` on GL_t(C).
    CharC { t: usize, twist: BigRational },
    /// `|det|^{ia} sgn(det)^w` on GL_t(R).
    CharR { t: usize, twist: BigRational, w: u8 },
    /// Speh representation `delta(t, m)` of GL_2t(R).
    Speh {
        t: usize,
        m: usize,
        twist: BigRational,
    },
    /// Stein complementary series `sigma(t, s)` of GL_2t, `0 < s < 1/2`.
    Stein {
        t: usize,
        s: BigRational,
        twist: BigRational,
    },
    /// Speh complementary series `Delta(t, m, s)` of GL_4t(R).
    SpehCs {
        t: usize,
        m: usize,
        s: BigRational,
        twist: BigRational,
    },
}

impl Factor {
    pub fn t(&self) -> usize {
        match self {
            Factor::CharC { t, .. }
            | Factor::CharR { t, .. }
            | Factor::Speh { t, .. }
            | Factor::Stein { t, .. }
            | Factor::SpehCs { t, .. } => *t,
        }
    }

    pub fn twist(&self) -> &BigRational {
        match self {
            Factor::CharC { twist, .. }
            | Factor::CharR { twist, .. }
            | Factor::Speh { twist, .. }
            | Factor::Stein { twist, .. }
            | Factor::SpehCs { twist, .. } => twist,
        }
    }

    /// GL rank the factor lives on, divided by `t`.
    fn width(&self) -> usize {
        match self {
            Factor::CharC { .. } | Factor::CharR { .. } => 1,
            Factor::Speh { .. } | Factor::Stein { .. } => 2,
            Factor::SpehCs { .. } => 4,
        }
    }

    pub fn size(&self) -> usize {
        self.width() * self.t()
    }

    /// Depth contributed by the factor under adduction.
    pub fn depth(&self) -> usize {
        self.width()
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Factor::CharC { .. } | Factor::CharR { .. } => "char",
            Factor::Speh { .. } => "speh",
            Factor::Stein { .. } => "stein",
            Factor::SpehCs { .. } => "spehcs",
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            Factor::CharC { .. } => 0,
            Factor::CharR { .. } => 1,
            Factor::Speh { .. } => 2,
            Factor::Stein { .. } => 3,
            Factor::SpehCs { .. } => 4,
        }
    }

    /// Same factor with `t` replaced.
    pub fn with_t(&self, t: usize) -> Factor {
        let mut f = self.clone();
        match &mut f {
            Factor::CharC { t: x, .. }
            | Factor::CharR { t: x, .. }
            | Factor::Speh { t: x, .. }
            | Factor::Stein { t: x, .. }
            | Factor::SpehCs { t: x, .. } => *x = t,
        }
        f
    }

    /// The adduced factor, `None` when it lives on GL_0.
    pub fn adduce(&self) -> Option<Factor> {
        (self.t() > 1).then(|| self.with_t(self.t() - 1))
    }

    fn validate(&self, field: Field) -> Result<()> {
        if self.t() == 0 {
            return Err(Error::InvalidLabel("factor of size zero".into()));
        }
        let allowed = match field {
            Field::Complex => matches!(self, Factor::CharC { .. } | Factor::Stein { .. }),
            Field::Real => !matches!(self, Factor::CharC { .. }),
        };
        if !allowed {
            return Err(Error::InvalidLabel(format!(
                "{} factor is not defined over {field}",
                self.kind()
            )));
        }
        match self {
            Factor::CharR { w, .. } if *w > 1 => Err(Error::InvalidLabel(format!(
                "sign exponent {w} is not 0 or 1"
            ))),
            Factor::Speh { m, .. } | Factor::SpehCs { m, .. } if *m == 0 => Err(
                Error::InvalidLabel("Speh parameter m must be positive".into()),
            ),
            Factor::Stein { s, .. } | Factor::SpehCs { s, .. }
                if !s.is_positive() || *s >= rational(1, 2) =>
            {
                Err(Error::InvalidLabel(format!(
                    "parameter s = {} not in (0, 1/2)",
                    format_rational(s)
                )))
            }
            _ => Ok(()),
        }
    }
}

impl Ord for Factor {
    /// Twist descending, then kind, then the remaining parameters.
    fn cmp(&self, other: &Self) -> Ordering {
        fn params(f: &Factor) -> (usize, usize, BigRational, u8) {
            match f {
                Factor::CharC { t, .. } => (*t, 0, BigRational::zero(), 0),
                Factor::CharR { t, w, .. } => (*t, 0, BigRational::zero(), *w),
                Factor::Speh { t, m, .. } => (*t, *m, BigRational::zero(), 0),
                Factor::Stein { t, s, .. } => (*t, 0, s.clone(), 0),
                Factor::SpehCs { t, m, s, .. } => (*t, *m, s.clone(), 0),
            }
        }
        other
            .twist()
            .cmp(self.twist())
            .then_with(|| self.kind_rank().cmp(&other.kind_rank()))
            .then_with(|| params(other).0.cmp(&params(self).0))
            .then_with(|| params(self).cmp(&params(other)))
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tw = |a: &BigRational| {
            if a.is_zero() {
                String::new()
            } else {
                format!("|det|^{{i{}}}", format_rational(a))
            }
        };
        match self {
            Factor::CharC { t, twist } => write!(f, "{}1|GL{t}(C)", tw(twist)),
            Factor::CharR { t, twist, w } => write!(f, "{}sgn^{w}|GL{t}(R)", tw(twist)),
            Factor::Speh { t, m, twist } => write!(f, "{}delta({t},{m})", tw(twist)),
            Factor::Stein { t, s, twist } => {
                write!(f, "{}sigma({t},{})", tw(twist), format_rational(s))
            }
            Factor::SpehCs { t, m, s, twist } => {
                write!(f, "{}Delta({t},{m},{})", tw(twist), format_rational(s))
            }
        }
    }
}

/// A ×-product of factors, kept sorted. The empty product is the trivial
/// representation of GL_0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LabelSpec", into = "LabelSpec")]
pub struct RepLabel {
    field: Field,
    factors: Vec<Factor>,
}

impl RepLabel {
    pub fn new(field: Field, mut factors: Vec<Factor>) -> Result<Self> {
        for f in &factors {
            f.validate(field)?;
        }
        factors.sort();
        Ok(RepLabel { field, factors })
    }

    pub fn empty(field: Field) -> Self {
        RepLabel {
            field,
            factors: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn size(&self) -> usize {
        self.factors.iter().map(Factor::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The ×-product.
    pub fn times(&self, other: &RepLabel) -> Result<RepLabel> {
        if self.field != other.field {
            return Err(Error::InvalidLabel(
                "product of labels over different fields".into(),
            ));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        factors.sort();
        Ok(RepLabel {
            field: self.field,
            factors,
        })
    }

    /// Depth and adduced label: depths add over factors and each factor
    /// drops to `t - 1`.
    pub fn adduce(&self) -> (usize, RepLabel) {
        let depth = self.factors.iter().map(Factor::depth).sum();
        let mut factors: Vec<Factor> = self.factors.iter().filter_map(Factor::adduce).collect();
        factors.sort();
        (
            depth,
            RepLabel {
                field: self.field,
                factors,
            },
        )
    }

    /// Restriction to P_n, written `I^{j-1} E (A)`.
    pub fn restrict_to_p(&self) -> Result<PRepLabel> {
        let (depth, adduced) = self.adduce();
        PRepLabel::new(depth, adduced)
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1|GL0");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `I^{depth-1} E (adduced)`, an irreducible unitary representation of P_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PRepLabel {
    depth: usize,
    adduced: RepLabel,
}

impl PRepLabel {
    pub fn new(depth: usize, adduced: RepLabel) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidLabel("P-labels need depth at least 1".into()));
        }
        Ok(PRepLabel { depth, adduced })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn adduced(&self) -> &RepLabel {
        &self.adduced
    }

    pub fn size(&self) -> usize {
        self.depth + self.adduced.size()
    }
}

impl fmt::Display for PRepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.depth {
            1 => write!(f, "E({})", self.adduced),
            d => write!(f, "I^{}E({})", d - 1, self.adduced),
        }
    }
}

/// Sign exponents, one list per real single-eigenvalue class in canonical
/// order, with one entry per part of the dual partition.
pub type Signs = Vec<Vec<u8>>;

fn real_single_duals(o: &OrbitDatum) -> Vec<Vec<usize>> {
    if o.field() != Field::Real {
        return Vec::new();
    }
    o.classes()
        .iter()
        .filter(|c| !c.eigenvalue.is_pair())
        .map(|c| c.partition.dual().parts().to_vec())
        .collect()
}

/// Representation attached to a GL_n orbit: for each class, one factor per
/// part of the dual partition.
pub fn attach_rep_gl(o: &OrbitDatum, signs: Option<&Signs>) -> Result<RepLabel> {
    let duals = real_single_duals(o);
    let empty = Signs::new();
    let signs = signs.unwrap_or(&empty);
    if signs.len() != duals.len() || signs.iter().zip(&duals).any(|(s, d)| s.len() != d.len()) {
        let expected: Vec<usize> = duals.iter().map(Vec::len).collect();
        let got: Vec<usize> = signs.iter().map(Vec::len).collect();
        return Err(Error::SignMismatch(format!(
            "expected sign lists of lengths {expected:?}, got {got:?}"
        )));
    }
    if let Some(w) = signs.iter().flatten().find(|&&w| w > 1) {
        return Err(Error::SignMismatch(format!(
            "sign exponent {w} is not 0 or 1"
        )));
    }
    let mut factors = Vec::new();
    let mut real_idx = 0;
    for c in o.classes() {
        let dual = c.partition.dual();
        match (&c.eigenvalue, o.field()) {
            (Eigenvalue::Single(a), Field::Complex) => {
                if !a.is_real() {
                    return Err(Error::UnsupportedOrbitShape(format!(
                        "no attachment rule for the non-real eigenvalue {a}"
                    )));
                }
                factors.extend(dual.parts().iter().map(|&t| Factor::CharC {
                    t,
                    twist: a.re().clone(),
                }));
            }
            (Eigenvalue::Single(a), Field::Real) => {
                let w = &signs[real_idx];
                real_idx += 1;
                factors.extend(dual.parts().iter().zip(w).map(|(&t, &w)| Factor::CharR {
                    t,
                    twist: a.re().clone(),
                    w,
                }));
            }
            (Eigenvalue::Pair { re, im }, _) => {
                let m2 = im * BigRational::from_integer(2.into());
                if !m2.is_integer() {
                    return Err(Error::UnsupportedOrbitShape(format!(
                        "imaginary part {} is not a half-integer",
                        format_rational(im)
                    )));
                }
                let m: usize = m2
                    .to_integer()
                    .try_into()
                    .map_err(|_| Error::UnsupportedOrbitShape("Speh parameter too large".into()))?;
                factors.extend(dual.parts().iter().map(|&t| Factor::Speh {
                    t,
                    m,
                    twist: re.clone(),
                }));
            }
        }
    }
    RepLabel::new(o.field(), factors)
}

pub fn attach_rep_p(m: &MirabolicOrbitDatum, signs: Option<&Signs>) -> Result<PRepLabel> {
    PRepLabel::new(m.depth(), attach_rep_gl(m.a_part(), signs)?)
}

/// Signs for the dense image: each class loses one from every dual part,
/// so the entries of parts equal to 1 disappear, and so do emptied classes.
pub fn induced_signs(o: &OrbitDatum, signs: &Signs) -> Signs {
    real_single_duals(o)
        .iter()
        .zip(signs)
        .map(|(dual, w)| {
            dual.iter()
                .zip(w)
                .filter(|(&t, _)| t > 1)
                .map(|(_, &w)| w)
                .collect::<Vec<u8>>()
        })
        .filter(|w| !w.is_empty())
        .collect()
}

/// Every admissible sign assignment for `o` (a single empty one when there
/// are no real single classes).
pub fn all_sign_vectors(o: &OrbitDatum) -> Vec<Signs> {
    let mut out: Vec<Signs> = vec![Vec::new()];
    for dual in real_single_duals(o) {
        let len = dual.len();
        let mut next = Vec::new();
        for prefix in &out {
            for bits in 0u32..(1 << len) {
                let mut s = prefix.clone();
                s.push((0..len).map(|i| ((bits >> i) & 1) as u8).collect());
                next.push(s);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DufloReport {
    pub orbit: OrbitDatum,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub signs: Signs,
    pub representation: RepLabel,
    pub restriction: PRepLabel,
    pub dense_image: MirabolicOrbitDatum,
    pub attached: PRepLabel,
    pub agree: bool,
}

/// Compares the restriction of the attached representation with the
/// representation attached to the dense P-orbit of the moment image.
pub fn verify_duflo(o: &OrbitDatum, signs: Option<&Signs>) -> Result<DufloReport> {
    if o.is_empty() {
        return Err(Error::InvalidOrbit(
            "nothing to verify on the zero-dimensional orbit".into(),
        ));
    }
    let signs = signs.cloned().unwrap_or_default();
    let representation = attach_rep_gl(o, Some(&signs))?;
    let restriction = representation.restrict_to_p()?;
    let dense_image = symbolic_image(o, &dense_selection(o))?;
    let attached = attach_rep_p(&dense_image, Some(&induced_signs(o, &signs)))?;
    let agree = restriction == attached;
    Ok(DufloReport {
        orbit: o.clone(),
        signs,
        representation,
        restriction,
        dense_image,
        attached,
        agree,
    })
}

/// [`verify_duflo`] for every sign assignment.
pub fn verify_duflo_all_signs(o: &OrbitDatum) -> Result<Vec<DufloReport>> {
    all_sign_vectors(o)
        .iter()
        .map(|s| verify_duflo(o, Some(s)))
        .collect()
}

/// JSON form of one factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub kind: String,
    pub t: usize,
    pub twist: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
}

/// JSON form of a [`RepLabel`] (no depth) or a [`PRepLabel`] (with depth).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelSpec {
    pub field: Field,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    pub factors: Vec<FactorSpec>,
}

impl From<&Factor> for FactorSpec {
    fn from(f: &Factor) -> Self {
        let mut spec = FactorSpec {
            kind: f.kind().into(),
            t: f.t(),
            twist: format_rational(f.twist()),
            w: None,
            m: None,
            s: None,
        };
        match f {
            Factor::CharC { .. } => {}
            Factor::CharR { w, .. } => spec.w = Some(*w),
            Factor::Speh { m, .. } => spec.m = Some(*m),
            Factor::Stein { s, .. } => spec.s = Some(format_rational(s)),
            Factor::SpehCs { m, s, .. } => {
                spec.m = Some(*m);
                spec.s = Some(format_rational(s));
            }
        }
        spec
    }
}

impl FactorSpec {
    fn to_factor(&self, field: Field) -> Result<Factor> {
        let twist = parse_rational(&self.twist)?;
        let need_m = || {
            self.m
                .ok_or_else(|| Error::InvalidLabel(format!("{} factor needs m", self.kind)))
        };
        let need_s = || -> Result<BigRational> {
            parse_rational(
                self.s
                    .as_deref()
                    .ok_or_else(|| Error::InvalidLabel(format!("{} factor needs s", self.kind)))?,
            )
        };
        let t = self.t;
        Ok(match (self.kind.as_str(), field) {
            ("char", Field::Complex) => Factor::CharC { t, twist },
            ("char", Field::Real) => Factor::CharR {
                t,
                twist,
                w: self.w.unwrap_or(0),
            },
            ("speh", _) => Factor::Speh {
                t,
                m: need_m()?,
                twist,
            },
            ("stein", _) => Factor::Stein {
                t,
                s: need_s()?,
                twist,
            },
            ("spehcs", _) => Factor::SpehCs {
                t,
                m: need_m()?,
                s: need_s()?,
                twist,
            },
            (other, _) => {
                return Err(Error::InvalidLabel(format!(
                    "unknown factor kind {other:?}"
                )))
            }
        })
    }
}

impl From<RepLabel> for LabelSpec {
    fn from(l: RepLabel) -> Self {
        LabelSpec {
            field: l.field,
            depth: None,
            factors: l.factors.iter().map(FactorSpec::from).collect(),
        }
    }
}

impl TryFrom<LabelSpec> for RepLabel {
    type Error = Error;

    fn try_from(spec: LabelSpec) -> Result<Self> {
        if spec.depth.is_some() {
            return Err(Error::InvalidLabel("a GL label has no depth".into()));
        }
        let factors = spec
            .factors
            .iter()
            .map(|f| f.to_factor(spec.field))
            .collect::<Result<Vec<_>>>()?;
        RepLabel::new(spec.field, factors)
    }
}

impl Serialize for PRepLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut spec = LabelSpec::from(self.adduced.clone());
        spec.depth = Some(self.depth);
        spec.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PRepLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut spec = LabelSpec::deserialize(d)?;
        let depth = spec
            .depth
            .take()
            .ok_or_else(|| serde::de::Error::custom("P-label needs a depth"))?;
        let adduced = RepLabel::try_from(spec).map_err(serde::de::Error::custom)?;
        PRepLabel::new(depth, adduced).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Scalar;
    use crate::orbit::EigenvalueClass;
    use crate::partition::Partition;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn char_c(t: usize, a: i64) -> Factor {
        Factor::CharC {
            t,
            twist: rational(a, 1),
        }
    }

    fn speh_orbit(im: BigRational, p: &[usize]) -> OrbitDatum {
        OrbitDatum::new(
            Field::Real,
            vec![EigenvalueClass::new(
                Eigenvalue::pair(rational(0, 1), im),
                part(p),
            )],
        )
        .unwrap()
    }

    #[test]
    fn unipotent_hook_attaches_dual_characters() {
        let o = OrbitDatum::complex(vec![(Scalar::zero(), part(&[2, 1]))]).unwrap();
        let l = attach_rep_gl(&o, None).unwrap();
        assert_eq!(
            l,
            RepLabel::new(Field::Complex, vec![char_c(2, 0), char_c(1, 0)]).unwrap()
        );
    }

    #[test]
    fn semisimple_twists() {
        let o = OrbitDatum::complex(vec![
            (Scalar::from_int(1), part(&[1, 1])),
            (Scalar::from_int(-1), part(&[1])),
        ])
        .unwrap();
        let l = attach_rep_gl(&o, None).unwrap();
        assert_eq!(
            l,
            RepLabel::new(Field::Complex, vec![char_c(2, 1), char_c(1, -1)]).unwrap()
        );
        let (j, a) = l.adduce();
        assert_eq!(j, 2);
        assert_eq!(
            a,
            RepLabel::new(Field::Complex, vec![char_c(1, 1)]).unwrap()
        );
    }

    #[test]
    fn speh_attachment_and_adduction() {
        let o = speh_orbit(rational(3, 2), &[1]);
        let l = attach_rep_gl(&o, None).unwrap();
        assert_eq!(
            l.factors(),
            &[Factor::Speh {
                t: 1,
                m: 3,
                twist: rational(0, 1)
            }]
        );
        let r = l.restrict_to_p().unwrap();
        assert_eq!((r.depth(), r.adduced().is_empty()), (2, true));

        let big = RepLabel::new(
            Field::Real,
            vec![Factor::Speh {
                t: 3,
                m: 2,
                twist: rational(0, 1),
            }],
        )
        .unwrap();
        let (j, a) = big.adduce();
        assert_eq!(
            (j, a.factors()),
            (
                2,
                &[Factor::Speh {
                    t: 2,
                    m: 2,
                    twist: rational(0, 1)
                }][..]
            )
        );
    }

    #[test]
    fn non_half_integer_pair_is_unsupported() {
        let o = speh_orbit(rational(1, 3), &[1]);
        assert!(matches!(
            attach_rep_gl(&o, None),
            Err(Error::UnsupportedOrbitShape(_))
        ));
        assert!(matches!(
            verify_duflo(&o, None),
            Err(Error::UnsupportedOrbitShape(_))
        ));
    }

    #[test]
    fn trivial_gl1_adduces_to_gl0() {
        let l = RepLabel::new(Field::Complex, vec![char_c(1, 0)]).unwrap();
        let r = l.restrict_to_p().unwrap();
        assert_eq!(r.depth(), 1);
        assert!(r.adduced().is_empty());
        assert_eq!(r.to_string(), "E(1|GL0)");
    }

    #[test]
    fn real_signs_are_required() {
        let o = OrbitDatum::new(
            Field::Real,
            vec![EigenvalueClass::new(
                Eigenvalue::real(rational(0, 1)),
                part(&[2, 1]),
            )],
        )
        .unwrap();
        assert!(matches!(
            attach_rep_gl(&o, None),
            Err(Error::SignMismatch(_))
        ));
        let reports = verify_duflo_all_signs(&o).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.agree));
        assert_eq!(induced_signs(&o, &vec![vec![1, 0]]), vec![vec![1]]);
    }

    #[test]
    fn duflo_on_small_examples() {
        let o = OrbitDatum::complex(vec![(Scalar::zero(), part(&[2, 1]))]).unwrap();
        let r = verify_duflo(&o, None).unwrap();
        assert!(r.agree);
        assert_eq!(r.restriction.to_string(), "I^1E(1|GL1(C))");
        assert!(
            verify_duflo(&speh_orbit(rational(3, 2), &[1]), None)
                .unwrap()
                .agree
        );
    }

    #[test]
    fn stein_parameter_is_checked() {
        let bad = Factor::Stein {
            t: 1,
            s: rational(1, 2),
            twist: rational(0, 1),
        };
        assert!(RepLabel::new(Field::Complex, vec![bad]).is_err());
        let ok = Factor::Stein {
            t: 1,
            s: rational(1, 4),
            twist: rational(0, 1),
        };
        assert_eq!(RepLabel::new(Field::Complex, vec![ok]).unwrap().size(), 2);
    }

    #[test]
    fn label_json_round_trip() {
        let l = RepLabel::new(
            Field::Real,
            vec![
                Factor::CharR {
                    t: 2,
                    twist: rational(1, 2),
                    w: 1,
                },
                Factor::SpehCs {
                    t: 1,
                    m: 2,
                    s: rational(1, 3),
                    twist: rational(0, 1),
                },
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&l).unwrap();
        assert_eq!(
            json,
            r#"{"field":"R","factors":[{"kind":"char","t":2,"twist":"1/2","w":1},{"kind":"spehcs","t":1,"twist":"0","m":2,"s":"1/3"}]}"#
        );
        assert_eq!(serde_json::from_str::<RepLabel>(&json).unwrap(), l);
        let p = l.restrict_to_p().unwrap();
        let pj = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<PRepLabel>(&pj).unwrap(), p);
    }
}
