//! Images of GL_n coadjoint orbits under restriction to the mirabolic
//! subalgebra, computed in closed form and by explicit conjugation.

use serde::Serialize;

use crate::classify::{classify, point_stabilizer_dim, stabilizer_dim};
use crate::enumeration::{build_g_i, dense_selection, enumerate_selections, IndexSelection};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::orbit::{project_to_p_star, EigenvalueClass, MirabolicOrbitDatum, OrbitDatum};
use crate::partition::Partition;

/// Closed-form P-orbit of `pr'(g_I xi g_I^{-1})`.
///
/// In a selected class with blocks `c_1 < ... < c_q` and values `x_1 < ... < x_q`,
/// one block of size `k_h` becomes a block of size `k_h - x_h + x_{h-1}`
/// (with `x_0 = 0`; size zero means the block disappears), and the class adds
/// `x_q` to the depth, doubled for a conjugate-pair class.
pub fn symbolic_image(o: &OrbitDatum, sel: &IndexSelection) -> Result<MirabolicOrbitDatum> {
    sel.validate(o)?;
    let mut depth = 0;
    let mut classes = Vec::new();
    for (j, class) in o.classes().iter().enumerate() {
        let Some(blocks) = sel.0.get(&j) else {
            classes.push(class.clone());
            continue;
        };
        let asc = class.partition.ascending_blocks();
        let mut parts = class.partition.parts().to_vec();
        let mut prev_x = 0;
        for (&i, &x) in blocks {
            let k = asc[i].0;
            let pos = parts
                .iter()
                .position(|&p| p == k)
                .expect("block size present");
            parts[pos] = k - x + prev_x;
            prev_x = x;
        }
        depth += class.eigenvalue.multiplicity() * prev_x;
        let partition = Partition::from_unsorted(parts);
        if !partition.is_empty() {
            classes.push(EigenvalueClass::new(class.eigenvalue.clone(), partition));
        }
    }
    MirabolicOrbitDatum::new(depth, OrbitDatum::new(o.field(), classes)?)
}

/// `pr'(g_I xi g_I^{-1})` as an explicit matrix.
pub fn image_representative(o: &OrbitDatum, sel: &IndexSelection) -> Result<ExactMatrix> {
    sel.validate(o)?;
    Ok(project_to_p_star(&moved_point(o, sel)))
}

/// `g_I xi g_I^{-1}` in gl_n^*.
pub fn moved_point(o: &OrbitDatum, sel: &IndexSelection) -> ExactMatrix {
    let g = build_g_i(o, sel);
    o.realize_xi().conjugate_by(&g).expect("g_I is invertible")
}

/// Classifies the explicit image; independent of [`symbolic_image`].
pub fn oracle_image(o: &OrbitDatum, sel: &IndexSelection) -> Result<MirabolicOrbitDatum> {
    let x = image_representative(o, sel)?;
    classify(&x, o.field(), &o.eigenvalue_hints())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelectionRecord {
    pub selection: IndexSelection,
    pub symbolic: MirabolicOrbitDatum,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<MirabolicOrbitDatum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    pub stab_dims: StabDims,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabDims {
    /// Stabilizer of the image functional in p_n.
    pub image: usize,
    /// Stabilizer of the point `g_I xi g_I^{-1}` in p_n; dense selection only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<usize>,
}

pub fn selection_record(
    o: &OrbitDatum,
    sel: &IndexSelection,
    with_oracle: bool,
) -> Result<SelectionRecord> {
    let symbolic = symbolic_image(o, sel)?;
    let xi = moved_point(o, sel);
    let x = project_to_p_star(&xi);
    let oracle = if with_oracle {
        Some(classify(&x, o.field(), &o.eigenvalue_hints())?)
    } else {
        None
    };
    let agree = oracle.as_ref().map(|m| *m == symbolic);
    let point = (*sel == dense_selection(o)).then(|| point_stabilizer_dim(&xi));
    Ok(SelectionRecord {
        selection: sel.clone(),
        symbolic,
        oracle,
        agree,
        stab_dims: StabDims {
            image: stabilizer_dim(&x),
            point,
        },
    })
}

/// Outcome of the geometric checks over all selections of one orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometryReport {
    pub orbit: OrbitDatum,
    pub records: Vec<SelectionRecord>,
    /// Symbolic and oracle images coincide for every selection.
    pub agree: bool,
    /// The images are pairwise distinct.
    pub distinct: bool,
    /// The dense selection has the strictly smallest image stabilizer.
    pub dense_minimal: bool,
    /// At the dense selection, image and point stabilizers have equal dimension.
    pub singleton_fiber: bool,
    pub witnesses: Vec<String>,
}

impl GeometryReport {
    pub fn passed(&self) -> bool {
        self.agree && self.distinct && self.dense_minimal && self.singleton_fiber
    }
}

pub fn check_geometry(o: &OrbitDatum) -> Result<GeometryReport> {
    if o.is_empty() {
        return Err(Error::InvalidOrbit(
            "the zero-dimensional orbit has no selections".into(),
        ));
    }
    let dense = dense_selection(o);
    let records = enumerate_selections(o)
        .iter()
        .map(|s| selection_record(o, s, true))
        .collect::<Result<Vec<_>>>()?;
    let mut witnesses = Vec::new();

    let agree = records.iter().all(|r| r.agree == Some(true));
    for r in records.iter().filter(|r| r.agree != Some(true)) {
        witnesses.push(format!(
            "selection {}: symbolic {} but oracle {:?}",
            r.selection, r.symbolic, r.oracle
        ));
    }

    let mut images: Vec<&MirabolicOrbitDatum> = records.iter().map(|r| &r.symbolic).collect();
    images.sort();
    let distinct = images.windows(2).all(|w| w[0] != w[1]);
    if let Some(w) = images.windows(2).find(|w| w[0] == w[1]) {
        witnesses.push(format!("image {} occurs twice", w[0]));
    }

    let dense_rec = records
        .iter()
        .find(|r| r.selection == dense)
        .expect("dense selection is enumerated");
    let dense_minimal = records
        .iter()
        .all(|r| r.selection == dense || r.stab_dims.image > dense_rec.stab_dims.image);
    if !dense_minimal {
        witnesses.push(format!(
            "dense image stabilizer {} is not strictly minimal",
            dense_rec.stab_dims.image
        ));
    }
    let singleton_fiber = dense_rec.stab_dims.point == Some(dense_rec.stab_dims.image);
    if !singleton_fiber {
        witnesses.push(format!(
            "dense image stabilizer {} differs from point stabilizer {:?}",
            dense_rec.stab_dims.image, dense_rec.stab_dims.point
        ));
    }
    Ok(GeometryReport {
        orbit: o.clone(),
        records,
        agree,
        distinct,
        dense_minimal,
        singleton_fiber,
        witnesses,
    })
}
