//! JSON documents for presentations, reconstructed coends and reports.
//!
//! Scalars are integers over GF(p) and `"num/den"` strings over Q (integers
//! are accepted on input for both). Matrices are arrays of rows. Every
//! matrix is checked against the shape its role requires, which also fixes
//! the width of matrices with no rows.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::antipode::{Antipode, OppositeAntipode};
use crate::bialgebroid::Bialgebroid;
use crate::coalgebroid::Coalgebroid;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Mat;
use crate::module::{Action, Bimodule, DoubleBimodule};
use crate::report::Report;
use crate::tannaka::{DualEntry, Presentation, Reconstructed};
use crate::tensor::TensorSpace;

pub type RawMat = Vec<Vec<Value>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub unit: Vec<Value>,
    /// `mul[i][j][l]` is the coefficient of `e_l` in `e_i e_j`.
    pub mul: Vec<Vec<Vec<Value>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_left: Option<Vec<RawMat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_right: Option<Vec<RawMat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_left: Option<Vec<RawMat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_right: Option<Vec<RawMat>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectSpec {
    pub name: String,
    pub module: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismSpec {
    pub name: String,
    pub src: String,
    pub dst: String,
    pub matrix: RawMat,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorSpec {
    pub left: String,
    pub right: String,
    pub result: String,
    /// On the `k`-tensor product, `dim F(result) x (dim F(left) * dim F(right))`.
    pub theta: RawMat,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualSpec {
    pub object: String,
    pub dual: String,
    pub ev: String,
    pub db: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundtripSpec {
    pub rank: usize,
    pub objects: usize,
    pub morphisms: usize,
    pub dim_rebuilt: usize,
    pub dim_original: usize,
    pub injective: bool,
    pub surjective: bool,
}

/// A coalgebroid with optional product, unit and antipodes, all in ambient form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoendSpec {
    #[serde(rename = "dim_L")]
    pub dim_l: usize,
    /// Required unless `R = k`, where every action is the identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub class_maps: BTreeMap<String, RawMat>,
    /// Morphisms added by whiskering, by name.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub derived_morphisms: Vec<String>,
    /// `L (x)_k L <- L`, `dim L^2 x dim L`.
    pub coproduct: RawMat,
    /// `dim R x dim L`.
    pub counit: RawMat,
    /// `L <- L (x)_k L`, `dim L x dim L^2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<RawMat>,
    /// `L <- R (x)_k R`, `dim L x dim R^2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<RawMat>,
    /// `L (x)_k L <- L` representatives, `dim L^2 x dim L`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<RawMat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opposite_antipode: Option<RawMat>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<ObjectSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<MorphismSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tensor: Vec<TensorSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub duals: Vec<DualSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub right_duals: Vec<DualSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_object: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_iso: Option<RawMat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coend: Option<CoendSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roundtrip: Option<RoundtripSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
}

pub fn parse_document(text: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn field_spec(f: Field) -> FieldSpec {
    match f {
        Field::Prime(p) => FieldSpec {
            kind: "gf".into(),
            p: Some(p),
        },
        Field::Rationals => FieldSpec {
            kind: "q".into(),
            p: None,
        },
    }
}

fn scalar_json(f: Field, x: &Scalar) -> Value {
    match x {
        Scalar::Fp(v) => Value::from(*v),
        Scalar::Q(_) => Value::from(f.format(x)),
    }
}

fn scalar_of(f: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Schema(format!("scalar {n} is not an integer")))?;
            Ok(f.from_i64(i))
        }
        Value::String(s) => f.parse_scalar(s),
        other => Err(Error::Schema(format!("scalar expected, found {other}"))),
    }
}

pub fn mat_json(m: &Mat) -> RawMat {
    let f = m.field();
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| scalar_json(f, x)).collect())
        .collect()
}

fn vec_json(f: Field, v: &[Scalar]) -> Vec<Value> {
    v.iter().map(|x| scalar_json(f, x)).collect()
}

/// Parse a matrix of the given shape; `what` names it in errors.
pub fn mat_of(f: Field, raw: &RawMat, rows: usize, cols: usize, what: &str) -> Result<Mat> {
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        let got_cols = raw.first().map_or(0, Vec::len);
        return Err(Error::Schema(format!(
            "{what} must be {rows}x{cols}, found {}x{got_cols}",
            raw.len()
        )));
    }
    let mut m = Mat::zeros(f, rows, cols);
    for (i, row) in raw.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(i, j, scalar_of(f, v)?);
        }
    }
    Ok(m)
}

fn mats_of(f: Field, raw: &[RawMat], n: usize, d: usize, what: &str) -> Result<Vec<Mat>> {
    if raw.len() != n {
        return Err(Error::Schema(format!(
            "{what} needs {n} matrices, found {}",
            raw.len()
        )));
    }
    raw.iter()
        .enumerate()
        .map(|(r, m)| mat_of(f, m, d, d, &format!("{what}[{r}]")))
        .collect()
}

impl Document {
    /// The field of the document, reconciled with an override from the command line.
    pub fn field(&self, flag: Option<Field>) -> Result<Field> {
        let given = match &self.field {
            None => None,
            Some(FieldSpec { kind, p }) => Some(match (kind.as_str(), p) {
                ("q", None) => Field::Rationals,
                ("gf", Some(p)) => Field::prime(*p)?,
                _ => return Err(Error::Schema(format!("unknown field kind `{kind}`"))),
            }),
        };
        match (given, flag) {
            (Some(a), Some(b)) if a != b => Err(Error::Schema(format!(
                "file is over {a} but --field says {b}"
            ))),
            (Some(a), _) | (None, Some(a)) => Ok(a),
            (None, None) => Err(Error::Schema("no field given".into())),
        }
    }

    pub fn algebra(&self, f: Field) -> Result<Arc<Algebra>> {
        let a = self
            .algebra
            .as_ref()
            .ok_or_else(|| Error::Schema("no algebra given".into()))?;
        if a.unit.len() != a.dim {
            return Err(Error::Schema(format!("unit must have {} entries", a.dim)));
        }
        let unit = a
            .unit
            .iter()
            .map(|v| scalar_of(f, v))
            .collect::<Result<Vec<_>>>()?;
        let mul = a
            .mul
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.iter().map(|v| scalar_of(f, v)).collect())
                    .collect()
            })
            .collect::<Result<Vec<Vec<Vec<Scalar>>>>>()?;
        Ok(Arc::new(Algebra::new(f, mul, unit)?))
    }

    fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o.name == name)
            .ok_or_else(|| Error::Schema(format!("unknown object `{name}`")))
    }

    fn morphism_index(&self, name: &str) -> Result<usize> {
        self.morphisms
            .iter()
            .position(|m| m.name == name)
            .ok_or_else(|| Error::Schema(format!("unknown morphism `{name}`")))
    }

    /// The presentation: object modules use `tau_left` and `tau_right`.
    pub fn presentation(&self, flag: Option<Field>) -> Result<Presentation> {
        let f = self.field(flag)?;
        let alg = self.algebra(f)?;
        let n = alg.dim();
        let mut p = Presentation::new(alg.clone());
        for o in &self.objects {
            if self.objects.iter().filter(|x| x.name == o.name).count() > 1 {
                return Err(Error::Schema(format!(
                    "object `{}` is listed twice",
                    o.name
                )));
            }
            let spec = self
                .modules
                .get(&o.module)
                .ok_or_else(|| Error::Schema(format!("unknown module `{}`", o.module)))?;
            if spec.sigma_left.is_some() || spec.sigma_right.is_some() {
                return Err(Error::Schema(format!(
                    "module `{}` of an object carries sigma actions",
                    o.module
                )));
            }
            let act = |m: &Option<Vec<RawMat>>, side: &str| -> Result<Vec<Mat>> {
                let raw = m
                    .as_ref()
                    .ok_or_else(|| Error::Schema(format!("module `{}` lacks {side}", o.module)))?;
                mats_of(f, raw, n, spec.dim, &format!("{}.{side}", o.module))
            };
            let module = Bimodule::new(
                alg.clone(),
                spec.dim,
                Some(act(&spec.tau_left, "tau_left")?),
                Some(act(&spec.tau_right, "tau_right")?),
            )?;
            p.add_object(&o.name, module);
        }
        for m in &self.morphisms {
            let (s, d) = (self.object_index(&m.src)?, self.object_index(&m.dst)?);
            let mat = mat_of(f, &m.matrix, p.dim(d), p.dim(s), &m.name)?;
            p.add_morphism(&m.name, s, d, mat);
        }
        for t in &self.tensor {
            let (x, y, z) = (
                self.object_index(&t.left)?,
                self.object_index(&t.right)?,
                self.object_index(&t.result)?,
            );
            let what = format!("theta of {} (x) {}", t.left, t.right);
            p.add_tensor(
                x,
                y,
                z,
                mat_of(f, &t.theta, p.dim(z), p.dim(x) * p.dim(y), &what)?,
            );
        }
        let duals = |table: &[DualSpec]| -> Result<Vec<DualEntry>> {
            table
                .iter()
                .map(|d| {
                    Ok(DualEntry {
                        object: self.object_index(&d.object)?,
                        dual: self.object_index(&d.dual)?,
                        ev: self.morphism_index(&d.ev)?,
                        db: self.morphism_index(&d.db)?,
                    })
                })
                .collect()
        };
        p.duals = duals(&self.duals)?;
        p.right_duals = duals(&self.right_duals)?;
        if let Some(u) = &self.unit_object {
            let i = self.object_index(u)?;
            p.unit_object = Some(i);
            let raw = self
                .unit_iso
                .as_ref()
                .ok_or_else(|| Error::Schema("unit_object without unit_iso".into()))?;
            p.unit_iso = Some(mat_of(f, raw, n, p.dim(i), "unit_iso")?);
        } else if self.unit_iso.is_some() {
            return Err(Error::Schema("unit_iso without unit_object".into()));
        }
        Ok(p)
    }

    /// The document of a presentation; each object gets a module of its own name.
    pub fn from_presentation(p: &Presentation) -> Document {
        let f = p.field();
        let alg = &p.algebra;
        let n = alg.dim();
        let name = |x: usize| p.objects[x].name.clone();
        let mname = |m: usize| p.morphisms[m].name.clone();
        let algebra = AlgebraSpec {
            dim: n,
            unit: vec_json(f, alg.unit()),
            mul: (0..n)
                .map(|i| (0..n).map(|j| vec_json(f, alg.structure(i, j))).collect())
                .collect(),
        };
        let modules = p
            .objects
            .iter()
            .map(|o| {
                let acts = |m: &[Mat]| m.iter().map(mat_json).collect::<Vec<_>>();
                let spec = ModuleSpec {
                    dim: o.module.dim(),
                    tau_left: o.module.left().ok().map(acts),
                    tau_right: o.module.right().ok().map(acts),
                    ..Default::default()
                };
                (o.name.clone(), spec)
            })
            .collect();
        let duals = |t: &[DualEntry]| {
            t.iter()
                .map(|d| DualSpec {
                    object: name(d.object),
                    dual: name(d.dual),
                    ev: mname(d.ev),
                    db: mname(d.db),
                })
                .collect()
        };
        Document {
            field: Some(field_spec(f)),
            algebra: Some(algebra),
            modules,
            objects: p
                .objects
                .iter()
                .map(|o| ObjectSpec {
                    name: o.name.clone(),
                    module: o.name.clone(),
                })
                .collect(),
            morphisms: p
                .morphisms
                .iter()
                .filter(|m| !m.derived)
                .map(|m| MorphismSpec {
                    name: m.name.clone(),
                    src: name(m.src),
                    dst: name(m.dst),
                    matrix: mat_json(&m.matrix),
                })
                .collect(),
            tensor: p
                .tensor
                .iter()
                .map(|t| TensorSpec {
                    left: name(t.left),
                    right: name(t.right),
                    result: name(t.result),
                    theta: mat_json(&t.theta),
                })
                .collect(),
            duals: duals(&p.duals),
            right_duals: duals(&p.right_duals),
            unit_object: p.unit_object.map(name),
            unit_iso: p.unit_iso.as_ref().map(mat_json),
            ..Default::default()
        }
    }

    /// The coalgebroid of the `coend` block.
    pub fn coalgebroid(&self, flag: Option<Field>) -> Result<Arc<Coalgebroid>> {
        let f = self.field(flag)?;
        let alg = self.algebra(f)?;
        let c = self
            .coend
            .as_ref()
            .ok_or_else(|| Error::Schema("no coend block".into()))?;
        let (n, l) = (alg.dim(), c.dim_l);
        let acts: [Option<Vec<Mat>>; 4] = match &c.actions {
            Some(a) => {
                if a.dim != l {
                    return Err(Error::Schema(format!(
                        "actions are on dimension {}, not {l}",
                        a.dim
                    )));
                }
                let mut out: [Option<Vec<Mat>>; 4] = Default::default();
                for (act, raw) in [
                    (Action::SigmaLeft, &a.sigma_left),
                    (Action::SigmaRight, &a.sigma_right),
                    (Action::TauLeft, &a.tau_left),
                    (Action::TauRight, &a.tau_right),
                ] {
                    let raw = raw
                        .as_ref()
                        .ok_or_else(|| Error::Schema(format!("coend lacks {act}")))?;
                    out[act.index()] = Some(mats_of(f, raw, n, l, act.name())?);
                }
                out
            }
            None if n == 1 => std::array::from_fn(|_| Some(vec![Mat::identity(f, l)])),
            None => {
                return Err(Error::Schema(
                    "coend actions are required unless the algebra is the field".into(),
                ))
            }
        };
        let carrier = DoubleBimodule::new(alg, l, acts)?;
        let delta = mat_of(f, &c.coproduct, l * l, l, "coproduct")?;
        let counit = mat_of(f, &c.counit, n, l, "counit")?;
        Ok(Arc::new(Coalgebroid::from_ambient(
            carrier, &delta, counit,
        )?))
    }

    /// The bialgebroid of the `coend` block, if it has a product.
    pub fn bialgebroid(&self, coalg: &Arc<Coalgebroid>) -> Result<Option<Arc<Bialgebroid>>> {
        let c = self
            .coend
            .as_ref()
            .ok_or_else(|| Error::Schema("no coend block".into()))?;
        let (f, n, l) = (coalg.field(), coalg.algebra().dim(), coalg.dim());
        match (&c.product, &c.unit) {
            (None, None) => Ok(None),
            (Some(m), Some(u)) => {
                let mult = mat_of(f, m, l, l * l, "product")?;
                let unit = mat_of(f, u, l, n * n, "unit")?;
                Ok(Some(Arc::new(Bialgebroid::new(coalg.clone(), mult, unit)?)))
            }
            _ => Err(Error::Schema(
                "product and unit must be given together".into(),
            )),
        }
    }

    pub fn antipode(&self, b: &Arc<Bialgebroid>) -> Result<Option<Antipode>> {
        let c = self
            .coend
            .as_ref()
            .ok_or_else(|| Error::Schema("no coend block".into()))?;
        let Some(raw) = &c.antipode else {
            return Ok(None);
        };
        let carrier = b.coalgebroid().carrier();
        let l = carrier.dim();
        let amb = mat_of(b.field(), raw, l * l, l, "antipode")?;
        let ss = TensorSpace::sigma_sigma(carrier, carrier)?;
        Ok(Some(Antipode::new(b.clone(), ss.proj_mat(&amb))?))
    }

    pub fn opposite_antipode(&self, b: &Arc<Bialgebroid>) -> Result<Option<OppositeAntipode>> {
        let c = self
            .coend
            .as_ref()
            .ok_or_else(|| Error::Schema("no coend block".into()))?;
        let Some(raw) = &c.opposite_antipode else {
            return Ok(None);
        };
        let carrier = b.coalgebroid().carrier();
        let l = carrier.dim();
        let amb = mat_of(b.field(), raw, l * l, l, "opposite_antipode")?;
        let tt = TensorSpace::tau_tau(carrier, carrier)?;
        Ok(Some(OppositeAntipode::new(b.clone(), tt.proj_mat(&amb))?))
    }
}

fn actions_spec(c: &DoubleBimodule) -> ModuleSpec {
    let acts = |a: Action| c.mats(a).ok().map(|m| m.iter().map(mat_json).collect());
    ModuleSpec {
        dim: c.dim(),
        sigma_left: acts(Action::SigmaLeft),
        sigma_right: acts(Action::SigmaRight),
        tau_left: acts(Action::TauLeft),
        tau_right: acts(Action::TauRight),
    }
}

/// The `coend` block of a reconstruction.
pub fn coend_spec(r: &Reconstructed) -> CoendSpec {
    let coalg = &r.coalgebroid;
    let p = &r.presentation;
    CoendSpec {
        dim_l: coalg.dim(),
        actions: Some(actions_spec(coalg.carrier())),
        class_maps: p
            .objects
            .iter()
            .enumerate()
            .map(|(x, o)| (o.name.clone(), mat_json(r.coend.class_map(x))))
            .collect(),
        derived_morphisms: p
            .morphisms
            .iter()
            .filter(|m| m.derived)
            .map(|m| m.name.clone())
            .collect(),
        coproduct: mat_json(coalg.delta_ambient()),
        counit: mat_json(coalg.counit()),
        product: r.bialgebroid.as_ref().map(|b| mat_json(b.mult_ambient())),
        unit: r.bialgebroid.as_ref().map(|b| mat_json(b.unit_map())),
        antipode: r.antipode.as_ref().map(|a| mat_json(a.nabla_ambient())),
        opposite_antipode: r
            .opposite_antipode
            .as_ref()
            .map(|a| mat_json(a.nabla_ambient())),
    }
}

/// The input presentation with the reconstruction and its report attached.
pub fn output_document(input: &Presentation, r: &Reconstructed) -> Document {
    let mut doc = Document::from_presentation(input);
    doc.coend = Some(coend_spec(r));
    doc.roundtrip = r.roundtrip.as_ref().map(|t| RoundtripSpec {
        rank: t.rank,
        objects: t.objects,
        morphisms: t.morphisms,
        dim_rebuilt: t.dim_rebuilt,
        dim_original: t.dim_original,
        injective: t.injective,
        surjective: t.surjective,
    });
    doc.report = Some(r.report.clone());
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tannaka::{reconstruct, ReconstructOptions};

    #[test]
    fn presentation_survives_a_round_trip() {
        let f = Field::Prime(7);
        for p in [
            fixtures::c2(f),
            fixtures::swap(f).unwrap(),
            fixtures::trivial(&Arc::new(Algebra::truncated_poly(f, 2))),
        ] {
            let doc = Document::from_presentation(&p);
            let text = to_json(&doc);
            let back = parse_document(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.presentation(None).unwrap(), p);
        }
    }

    #[test]
    fn rationals_are_strings() {
        let q = Field::Rationals;
        let m = Mat::from_fn(q, 1, 2, |_, j| q.from_ratio(1, j as i64 + 1).unwrap());
        let raw = mat_json(&m);
        assert_eq!(serde_json::to_string(&raw).unwrap(), r#"[["1","1/2"]]"#);
        assert_eq!(mat_of(q, &raw, 1, 2, "m").unwrap(), m);
        assert!(matches!(mat_of(q, &raw, 2, 1, "m"), Err(Error::Schema(_))));
    }

    #[test]
    fn output_reloads_and_verifies() {
        let p = fixtures::c2(Field::Prime(7));
        let r = reconstruct(&p, &ReconstructOptions::default()).unwrap();
        let doc = parse_document(&to_json(&output_document(&p, &r))).unwrap();
        let coalg = doc.coalgebroid(None).unwrap();
        assert!(coalg.check().unwrap().ok());
        let b = doc.bialgebroid(&coalg).unwrap().unwrap();
        assert!(b.check_algebra().unwrap().ok());
        let a = doc.antipode(&b).unwrap().unwrap();
        assert!(a.check().unwrap().ok());
        assert!(doc
            .opposite_antipode(&b)
            .unwrap()
            .unwrap()
            .check()
            .unwrap()
            .ok());
    }

    #[test]
    fn field_flag_must_agree() {
        let doc = Document::from_presentation(&fixtures::c2(Field::Prime(7)));
        assert!(doc.field(Some(Field::Prime(7))).is_ok());
        assert!(matches!(
            doc.field(Some(Field::Rationals)),
            Err(Error::Schema(_))
        ));
        assert!(matches!(parse_document("{"), Err(Error::Parse(_))));
    }
}
