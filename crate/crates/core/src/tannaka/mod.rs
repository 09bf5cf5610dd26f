//! Reconstruction from a finite monoidal presentation: objects with their
//! images `F(X)` in `R`-bimodules, morphism matrices, a tensor table with
//! structure maps `theta: F(X) (x)_R F(Y) -> F(X (x) Y)`, a unit object with
//! `F(I) ~ R`, and optional left and right duals.
//!
//! All `theta` maps are given on `F(X) (x)_k F(Y)`, so a presentation never
//! depends on a choice of basis for the balanced tensor product.

mod coend;
mod hopf;
mod roundtrip;

pub use coend::{build_coend, coactions, induce_coring, Coend};
pub use hopf::{
    induce_antipode, induce_opposite_antipode, induce_product, reconstruct, ReconstructOptions,
    Reconstructed,
};
pub use roundtrip::{roundtrip_check, Roundtrip};

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::dual::DualData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{Action, Bimodule, Pair};
use crate::report::Report;
use crate::tensor::{Link, TensorSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Object {
    pub name: String,
    pub module: Bimodule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub dst: usize,
    /// `dim F(dst) x dim F(src)`.
    pub matrix: Mat,
    /// Added by [`augment_morphisms`] rather than given.
    pub derived: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorEntry {
    pub left: usize,
    pub right: usize,
    pub result: usize,
    /// `dim F(result) x (dim F(left) * dim F(right))`, on the `k`-tensor product.
    pub theta: Mat,
}

/// A dual of `object`. For left duals `ev: X* (x) X -> I` and
/// `db: I -> X (x) X*`; for right duals `ev: X (x) *X -> I` and `db: I -> *X (x) X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualEntry {
    pub object: usize,
    pub dual: usize,
    pub ev: usize,
    pub db: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub algebra: Arc<Algebra>,
    pub objects: Vec<Object>,
    pub morphisms: Vec<Morphism>,
    pub tensor: Vec<TensorEntry>,
    pub duals: Vec<DualEntry>,
    pub right_duals: Vec<DualEntry>,
    pub unit_object: Option<usize>,
    /// `eta: F(I) -> R`, `n x dim F(I)`.
    pub unit_iso: Option<Mat>,
}

impl Presentation {
    /// A presentation with objects only.
    pub fn new(algebra: Arc<Algebra>) -> Self {
        Presentation {
            algebra,
            objects: Vec::new(),
            morphisms: Vec::new(),
            tensor: Vec::new(),
            duals: Vec::new(),
            right_duals: Vec::new(),
            unit_object: None,
            unit_iso: None,
        }
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn add_object(&mut self, name: &str, module: Bimodule) -> usize {
        self.objects.push(Object {
            name: name.to_string(),
            module,
        });
        self.objects.len() - 1
    }

    pub fn add_morphism(&mut self, name: &str, src: usize, dst: usize, matrix: Mat) -> usize {
        self.morphisms.push(Morphism {
            name: name.to_string(),
            src,
            dst,
            matrix,
            derived: false,
        });
        self.morphisms.len() - 1
    }

    pub fn add_tensor(&mut self, left: usize, right: usize, result: usize, theta: Mat) {
        self.tensor.push(TensorEntry {
            left,
            right,
            result,
            theta,
        });
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.name == name)
    }

    pub fn morphism(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn dim(&self, x: usize) -> usize {
        self.objects[x].module.dim()
    }

    pub fn module(&self, x: usize) -> &Bimodule {
        &self.objects[x].module
    }

    /// The table entry for `x (x) y`.
    pub fn tensor_of(&self, x: usize, y: usize) -> Option<&TensorEntry> {
        self.tensor.iter().find(|t| t.left == x && t.right == y)
    }

    fn entry(&self, x: usize, y: usize) -> Result<&TensorEntry> {
        self.tensor_of(x, y).ok_or_else(|| {
            Error::Schema(format!(
                "no tensor entry for {} (x) {}",
                self.objects[x].name, self.objects[y].name
            ))
        })
    }

    /// Object of an iterated tensor product, bracketed to the left.
    pub fn fold(&self, chain: &[usize]) -> Result<usize> {
        let mut w = chain[0];
        for &x in &chain[1..] {
            w = self.entry(w, x)?.result;
        }
        Ok(w)
    }

    /// `F(x1) (x)_R ... (x)_R F(xk)` as a tensor space.
    pub fn chain_space(&self, chain: &[usize]) -> Result<TensorSpace> {
        let factors = chain
            .iter()
            .map(|&x| self.module(x).as_double(Pair::Tau))
            .collect();
        let links = (1..chain.len())
            .map(|i| Link::new((i - 1, Action::TauRight), (i, Action::TauLeft)))
            .collect();
        TensorSpace::new(factors, links, [None, None, None, None])
    }

    /// The composite structure map `F(x1) (x)_k ... (x)_k F(xk) -> F(x1 (x) ... (x) xk)`.
    pub fn chain_theta(&self, chain: &[usize]) -> Result<Mat> {
        let f = self.field();
        let mut w = chain[0];
        let mut acc = Mat::identity(f, self.dim(w));
        for &x in &chain[1..] {
            let e = self.entry(w, x)?;
            acc = e.theta.mul(&acc.kron(&Mat::identity(f, self.dim(x))));
            w = e.result;
        }
        Ok(acc)
    }

    /// Ambient representatives of the inverse of the composite structure map,
    /// `(dim F(x1) ... dim F(xk)) x dim F(x1 (x) ... (x) xk)`.
    pub fn chain_theta_inverse(&self, chain: &[usize]) -> Result<Mat> {
        if chain.len() == 1 {
            return Ok(Mat::identity(self.field(), self.dim(chain[0])));
        }
        let space = self.chain_space(chain)?;
        let amb = self.chain_theta(chain)?;
        if !space.kills_relations(&amb) {
            return Err(Error::IllDefined("structure map is not balanced".into()));
        }
        let q = space.lift_through(&amb);
        let inv = q
            .invert()
            .map_err(|_| Error::IllDefined("structure map is not an isomorphism".into()))?;
        Ok(space.sect_mat(&inv))
    }

    fn unit(&self) -> Result<(usize, &Mat)> {
        match (self.unit_object, &self.unit_iso) {
            (Some(i), Some(eta)) => Ok((i, eta)),
            _ => Err(Error::Schema("presentation has no unit object".into())),
        }
    }

    /// `ev` of a left dual as a map `F(X*) (x)_k F(X) -> R`.
    pub fn left_pairing(&self, d: &DualEntry) -> Result<Mat> {
        let (_, eta) = self.unit()?;
        let ev = &self.morphisms[d.ev].matrix;
        Ok(eta.mul(ev).mul(&self.chain_theta(&[d.dual, d.object])?))
    }

    /// `db(1)` of a left dual as a vector in `F(X) (x)_k F(X*)`.
    pub fn left_copairing(&self, d: &DualEntry) -> Result<Mat> {
        self.copairing(d.db, &[d.object, d.dual])
    }

    /// `ev` of a right dual as a map `F(X) (x)_k F(*X) -> R`.
    pub fn right_pairing(&self, d: &DualEntry) -> Result<Mat> {
        let (_, eta) = self.unit()?;
        let ev = &self.morphisms[d.ev].matrix;
        Ok(eta.mul(ev).mul(&self.chain_theta(&[d.object, d.dual])?))
    }

    /// `db(1)` of a right dual as a vector in `F(*X) (x)_k F(X)`.
    pub fn right_copairing(&self, d: &DualEntry) -> Result<Mat> {
        self.copairing(d.db, &[d.dual, d.object])
    }

    fn copairing(&self, db: usize, chain: &[usize]) -> Result<Mat> {
        let (_, eta) = self.unit()?;
        let f = self.field();
        let one = Mat::column_vector(f, self.algebra.unit());
        let pre = eta
            .solve_matrix(&one)?
            .ok_or_else(|| Error::IllDefined("unit isomorphism is not onto".into()))?;
        Ok(self
            .chain_theta_inverse(chain)?
            .mul(&self.morphisms[db].matrix)
            .mul(&pre))
    }
}

fn name_of(p: &Presentation, x: usize) -> &str {
    &p.objects[x].name
}

/// Typing, tensor closure, coherence, unit law, zigzags and projectivity.
pub fn validate_presentation(p: &Presentation) -> Report {
    let mut rep = Report::new();
    let f = p.field();
    let alg = &p.algebra;
    let n = alg.dim();
    let k = p.objects.len();

    for (i, o) in p.objects.iter().enumerate() {
        let sub = o.module.check();
        rep.check(
            "Presentation/modules",
            sub.ok() && o.module.has_left() && o.module.has_right(),
            || crate::report::Counterexample {
                indices: vec![i],
                lhs: vec![o.name.clone()],
                rhs: vec!["bimodule".into()],
            },
        );
        match DualData::left(&o.module) {
            Ok(_) => rep.pass("Presentation/projective"),
            Err(e) => rep.fail_note("Presentation/projective", format!("{}: {e}", o.name)),
        }
    }

    for (i, m) in p.morphisms.iter().enumerate() {
        let typed = m.src < k
            && m.dst < k
            && m.matrix.shape() == (p.dim(m.dst), p.dim(m.src))
            && p.module(m.src).intertwines(p.module(m.dst), &m.matrix);
        if typed {
            rep.pass("Presentation/typing");
        } else {
            rep.fail_note(
                "Presentation/typing",
                format!("morphism {} (#{i}) is not a bimodule map", m.name),
            );
        }
    }

    for x in 0..k {
        for y in 0..k {
            let hits = p
                .tensor
                .iter()
                .filter(|t| t.left == x && t.right == y)
                .count();
            if hits == 1 {
                rep.pass("Presentation/closure");
            } else {
                rep.fail_note(
                    "Presentation/closure",
                    format!(
                        "{} entries for {} (x) {}",
                        hits,
                        name_of(p, x),
                        name_of(p, y)
                    ),
                );
            }
        }
    }
    if !rep.passed("Presentation/closure") {
        return rep;
    }

    for t in &p.tensor {
        let (x, y, z) = (t.left, t.right, t.result);
        let ok = t.theta.shape() == (p.dim(z), p.dim(x) * p.dim(y))
            && p.chain_space(&[x, y]).is_ok_and(|s| {
                s.kills_relations(&t.theta)
                    && s.lift_through(&t.theta).invert().is_ok()
                    && (0..n).all(|r| {
                        let lx = &p.module(x).left().expect("checked")[r];
                        let ry = &p.module(y).right().expect("checked")[r];
                        t.theta.mul(&lx.kron(&Mat::identity(f, p.dim(y))))
                            == p.module(z).left().expect("checked")[r].mul(&t.theta)
                            && t.theta.mul(&Mat::identity(f, p.dim(x)).kron(ry))
                                == p.module(z).right().expect("checked")[r].mul(&t.theta)
                    })
            });
        if ok {
            rep.pass("Presentation/theta");
        } else {
            rep.fail_note(
                "Presentation/theta",
                format!(
                    "theta for {} (x) {} is not a balanced bimodule isomorphism",
                    name_of(p, x),
                    name_of(p, y)
                ),
            );
        }
    }
    if !rep.passed("Presentation/theta") {
        return rep;
    }

    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let (Ok(w1), Ok(w2)) = (
                    p.fold(&[x, y, z]),
                    p.entry(y, z).and_then(|e| Ok(p.entry(x, e.result)?.result)),
                ) else {
                    continue;
                };
                if w1 != w2 {
                    rep.fail_note(
                        "Presentation/strict",
                        format!("({x} (x) {y}) (x) {z} and {x} (x) ({y} (x) {z}) differ"),
                    );
                    continue;
                }
                rep.pass("Presentation/strict");
                let lhs = p.chain_theta(&[x, y, z]).expect("closed");
                let yz = p.entry(y, z).expect("closed");
                let rhs = p
                    .entry(x, yz.result)
                    .expect("closed")
                    .theta
                    .mul(&Mat::identity(f, p.dim(x)).kron(&yz.theta));
                rep.mat_eq("Eq.rt9", &[x, y, z], &lhs, &rhs);
            }
        }
    }

    match (p.unit_object, &p.unit_iso) {
        (Some(i), Some(eta)) if i < k => {
            let reg = Bimodule::regular(alg);
            let iso = eta.shape() == (n, p.dim(i))
                && p.module(i).intertwines(&reg, eta)
                && eta.invert().is_ok();
            if iso {
                rep.pass("Presentation/unit-iso");
                for x in 0..k {
                    let m = p.module(x);
                    let mut left = Mat::zeros(f, p.dim(x), p.dim(i) * p.dim(x));
                    let mut right = Mat::zeros(f, p.dim(x), p.dim(x) * p.dim(i));
                    for r in 0..n {
                        let e = eta.select_rows(&[r]);
                        left = left.add(&e.kron(&m.left().expect("checked")[r]));
                        right = right.add(&m.right().expect("checked")[r].kron(&e));
                    }
                    let li = p.entry(i, x).expect("closed");
                    let ri = p.entry(x, i).expect("closed");
                    rep.check("Eq.rt10", li.result == x && ri.result == x, || {
                        crate::report::Counterexample {
                            indices: vec![x],
                            lhs: vec![name_of(p, li.result).into(), name_of(p, ri.result).into()],
                            rhs: vec![name_of(p, x).into()],
                        }
                    });
                    if li.result == x && ri.result == x {
                        rep.mat_eq("Eq.rt10", &[0, x], &li.theta, &left);
                        rep.mat_eq("Eq.rt10", &[1, x], &ri.theta, &right);
                    }
                }
            } else {
                rep.fail_note(
                    "Presentation/unit-iso",
                    "unit_iso is not a bimodule isomorphism onto R",
                );
            }
        }
        (None, None) => {}
        _ => rep.fail_note(
            "Presentation/unit-iso",
            "unit object and unit_iso must be given together",
        ),
    }
    if !rep.passed("Presentation/unit-iso") {
        return rep;
    }

    for (side, table) in [("left", &p.duals), ("right", &p.right_duals)] {
        let tag = if side == "left" {
            "Presentation/zigzag"
        } else {
            "Presentation/zigzag-right"
        };
        for d in table.iter() {
            match check_dual_entry(p, d, side == "left", tag) {
                Ok(sub) => rep.merge(sub),
                Err(e) => rep.fail_note(tag, format!("{}: {e}", name_of(p, d.object.min(k - 1)))),
            }
        }
    }
    rep
}

/// Both zigzag identities of one dual entry.
fn check_dual_entry(p: &Presentation, d: &DualEntry, left: bool, tag: &str) -> Result<Report> {
    let k = p.objects.len();
    let (i, _) = p.unit()?;
    if d.object >= k || d.dual >= k || d.ev >= p.morphisms.len() || d.db >= p.morphisms.len() {
        return Err(Error::Schema(
            "dual entry refers to unknown objects or morphisms".into(),
        ));
    }
    let (ev_src, db_dst) = if left {
        (p.fold(&[d.dual, d.object])?, p.fold(&[d.object, d.dual])?)
    } else {
        (p.fold(&[d.object, d.dual])?, p.fold(&[d.dual, d.object])?)
    };
    let (ev, db) = (&p.morphisms[d.ev], &p.morphisms[d.db]);
    if ev.src != ev_src || ev.dst != i || db.src != i || db.dst != db_dst {
        return Err(Error::Schema(
            "ev or db has the wrong source or target".into(),
        ));
    }
    let f = p.field();
    let n = p.algebra.dim();
    let (x, u) = (d.object, d.dual);
    let (dx, du) = (p.dim(x), p.dim(u));
    let mx = p.module(x);
    let mu = p.module(u);
    let mut rep = Report::new();
    let mut z1 = Mat::zeros(f, dx, dx);
    let mut z2 = Mat::zeros(f, du, du);
    if left {
        // m |-> sum x_a p(u_a (x) m),  u |-> sum p(u (x) x_a) u_a
        let pair = p.left_pairing(d)?;
        let co = p.left_copairing(d)?;
        for a in 0..dx {
            for b in 0..du {
                let c = co.get(a * du + b, 0);
                if f.is_zero(&c) {
                    continue;
                }
                for r in 0..n {
                    let m_row = Mat::from_fn(f, 1, dx, |_, j| pair.get(r, b * dx + j));
                    let xa = mx.right()?[r].select_cols(&[a]);
                    z1 = z1.add(&xa.mul(&m_row).scale(&c));
                    let u_row = Mat::from_fn(f, 1, du, |_, j| pair.get(r, j * dx + a));
                    let ub = mu.left()?[r].select_cols(&[b]);
                    z2 = z2.add(&ub.mul(&u_row).scale(&c));
                }
            }
        }
    } else {
        // m |-> sum q(m (x) v_a) n_a,  v |-> sum v_a q(n_a (x) v)
        let pair = p.right_pairing(d)?;
        let co = p.right_copairing(d)?;
        for a in 0..du {
            for b in 0..dx {
                let c = co.get(a * dx + b, 0);
                if f.is_zero(&c) {
                    continue;
                }
                for r in 0..n {
                    let m_row = Mat::from_fn(f, 1, dx, |_, j| pair.get(r, j * du + a));
                    let nb = mx.left()?[r].select_cols(&[b]);
                    z1 = z1.add(&nb.mul(&m_row).scale(&c));
                    let v_row = Mat::from_fn(f, 1, du, |_, j| pair.get(r, b * du + j));
                    let va = mu.right()?[r].select_cols(&[a]);
                    z2 = z2.add(&va.mul(&v_row).scale(&c));
                }
            }
        }
    }
    rep.mat_eq(tag, &[x, 0], &z1, &Mat::identity(f, dx));
    rep.mat_eq(tag, &[x, 1], &z2, &Mat::identity(f, du));
    Ok(rep)
}

/// Add `id_V (x) f (x) id_Z` for every given morphism `f` and all objects
/// `V`, `Z` (either side may be absent). Recomputed from the given
/// morphisms only, so applying it twice changes nothing.
pub fn augment_morphisms(p: &Presentation) -> Result<Presentation> {
    let f = p.field();
    let mut out = p.clone();
    out.morphisms.retain(|m| !m.derived);
    let gens = out.morphisms.clone();
    let k = p.objects.len();
    let sides: Vec<Option<usize>> = std::iter::once(None).chain((0..k).map(Some)).collect();
    for g in &gens {
        for &v in &sides {
            for &z in &sides {
                if v.is_none() && z.is_none() {
                    continue;
                }
                let chain =
                    |x: usize| -> Vec<usize> { v.into_iter().chain([x]).chain(z).collect() };
                let (cs, cd) = (chain(g.src), chain(g.dst));
                let src = p.fold(&cs)?;
                let dst = p.fold(&cd)?;
                let id = |o: Option<usize>| Mat::identity(f, o.map_or(1, |o| p.dim(o)));
                let mid = id(v).kron(&g.matrix).kron(&id(z));
                let mat = p
                    .chain_theta(&cd)?
                    .mul(&mid)
                    .mul(&p.chain_theta_inverse(&cs)?);
                let trivial = src == dst && mat.is_identity();
                let known = out
                    .morphisms
                    .iter()
                    .any(|m| m.src == src && m.dst == dst && m.matrix == mat);
                if trivial || known {
                    continue;
                }
                let name = [
                    v.map(|o| format!("id_{}", name_of(p, o))),
                    Some(g.name.clone()),
                    z.map(|o| format!("id_{}", name_of(p, o))),
                ]
                .into_iter()
                .flatten()
                .collect::<Vec<_>>()
                .join(" (x) ");
                out.morphisms.push(Morphism {
                    name,
                    src,
                    dst,
                    matrix: mat,
                    derived: true,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::fixtures;

    fn run(p: &Presentation) -> Reconstructed {
        let r = reconstruct(p, &ReconstructOptions::default()).unwrap();
        assert!(r.report.ok(), "{}", r.report);
        r
    }

    #[test]
    fn trivial_over_ground_field_and_product() {
        let f = Field::Prime(7);
        for alg in [Algebra::ground(f), Algebra::product(f, 2)] {
            let n = alg.dim();
            let r = run(&fixtures::trivial(&Arc::new(alg)));
            assert_eq!(r.dim(), n * n);
            assert!(r.roundtrip.as_ref().unwrap().is_iso());
        }
    }

    #[test]
    fn c2_has_two_grouplikes() {
        let r = run(&fixtures::c2(Field::Prime(7)));
        assert_eq!(r.dim(), 2);
        assert!(r.antipode.is_some() && r.opposite_antipode.is_some());
    }

    #[test]
    fn swap_has_eight_dimensional_coend() {
        let r = run(&fixtures::swap(Field::Prime(7)).unwrap());
        assert_eq!(r.dim(), 8);
    }
}
