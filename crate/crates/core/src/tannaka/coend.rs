//! The coend `L = (sum_X F(X)* (x)_k F(X)) / relations`, its coalgebroid
//! structure and the coactions on every `F(X)`.

use std::ops::Range;
use std::sync::Arc;

use rand::Rng;

use super::Presentation;
use crate::coalgebroid::Coalgebroid;
use crate::comodule::{check_right_map, RightComodule};
use crate::dual::{DualData, Side};
use crate::error::{Error, Result};
use crate::linalg::{quotient, Mat, QuotientPresentation};
use crate::module::{Action, DoubleBimodule};
use crate::par::{map_indexed, ExecMode};
use crate::report::Report;
use crate::tensor::Tensor;

#[derive(Clone, Debug)]
pub struct Coend {
    pres: Arc<Presentation>,
    duals: Vec<DualData>,
    endos: Vec<Coalgebroid>,
    offsets: Vec<usize>,
    /// Columns span the relations inside `L0`.
    relations: Mat,
    quot: QuotientPresentation,
    carrier: DoubleBimodule,
    class_maps: Vec<Mat>,
}

/// `F(f)^*: F(Y)* -> F(X)*` in dual coordinates.
fn pullback(dx: &DualData, dy: &DualData, a: &Mat) -> Result<Mat> {
    let f = dx.field();
    let n = dx.algebra().dim();
    let flat = Mat::identity(f, n).kron(&a.transpose()).mul(dy.embedding());
    dx.coords(&flat)
        .ok_or_else(|| Error::IllDefined("pullback of a functional is not R-linear".into()))
}

fn block_diag(f: crate::field::Field, blocks: &[&Mat]) -> Mat {
    let total: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut out = Mat::zeros(f, total, total);
    let mut o = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                if !b.is_entry_zero(i, j) {
                    out.set(o + i, o + j, b.get(i, j));
                }
            }
        }
        o += b.rows();
    }
    out
}

/// `L0` and the relation span of every morphism, then the quotient with its
/// four descended actions.
pub fn build_coend(p: &Presentation, mode: ExecMode) -> Result<Coend> {
    let f = p.field();
    let duals = p
        .objects
        .iter()
        .map(|o| {
            DualData::left(&o.module).map_err(|e| match e {
                Error::NotProjective(m) => Error::NotProjective(format!("{}: {m}", o.name)),
                e => e,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let endos = duals
        .iter()
        .map(Coalgebroid::endo)
        .collect::<Result<Vec<_>>>()?;
    let mut offsets = vec![0];
    for c in &endos {
        offsets.push(offsets.last().unwrap() + c.dim());
    }
    let l0 = *offsets.last().unwrap();

    let blocks = map_indexed(mode, p.morphisms.len(), |i| -> Result<Mat> {
        let m = &p.morphisms[i];
        let (x, y) = (m.src, m.dst);
        let dxm = p.dim(x);
        let ey = duals[y].dual().dim();
        let pb = pullback(&duals[x], &duals[y], &m.matrix)?;
        // (F(f)^* psi) (x) m  -  psi (x) F(f) m
        let at_x = pb.kron(&Mat::identity(f, dxm));
        let at_y = Mat::identity(f, ey).kron(&m.matrix).scale(&f.neg(&f.one()));
        let mut w = Mat::zeros(f, l0, ey * dxm);
        for (blk, part) in [(x, &at_x), (y, &at_y)] {
            for r in 0..part.rows() {
                for c in 0..part.cols() {
                    if !part.is_entry_zero(r, c) {
                        let cur = w.get(offsets[blk] + r, c);
                        w.set(offsets[blk] + r, c, f.add(&cur, &part.get(r, c)));
                    }
                }
            }
        }
        Ok(w)
    });
    let blocks = blocks.into_iter().collect::<Result<Vec<_>>>()?;
    let relations = blocks
        .iter()
        .fold(Mat::zeros(f, l0, 0), |acc, b| acc.hcat(b));
    let quot = quotient(f, l0, &relations.transpose());

    let mut acts: [Option<Vec<Mat>>; 4] = Default::default();
    for a in Action::ALL {
        let n = p.algebra.dim();
        let mut mats = Vec::with_capacity(n);
        for r in 0..n {
            let parts: Vec<&Mat> = endos
                .iter()
                .map(|c| &c.carrier().mats(a).expect("endo carries all actions")[r])
                .collect();
            let full = block_diag(f, &parts);
            if !quot.proj.mul(&full.mul(&relations)).is_zero() {
                return Err(Error::IllDefined(format!(
                    "{a} does not descend to the coend"
                )));
            }
            mats.push(quot.proj.mul(&full).mul(&quot.sect));
        }
        acts[a.index()] = Some(mats);
    }
    let carrier = DoubleBimodule::new(p.algebra.clone(), quot.dim(), acts)?;
    let class_maps = (0..p.objects.len())
        .map(|x| {
            quot.proj
                .select_cols(&(offsets[x]..offsets[x + 1]).collect::<Vec<_>>())
        })
        .collect();
    Ok(Coend {
        pres: Arc::new(p.clone()),
        duals,
        endos,
        offsets,
        relations,
        quot,
        carrier,
        class_maps,
    })
}

impl Coend {
    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn dim(&self) -> usize {
        self.quot.dim()
    }

    /// `dim L0`.
    pub fn ambient_dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn carrier(&self) -> &DoubleBimodule {
        &self.carrier
    }

    pub fn duals(&self) -> &[DualData] {
        &self.duals
    }

    pub fn quotient(&self) -> &QuotientPresentation {
        &self.quot
    }

    /// Columns spanning the relations in `L0`.
    pub fn relations(&self) -> &Mat {
        &self.relations
    }

    /// `iota_X: F(X)* (x)_k F(X) -> L`.
    pub fn class_map(&self, x: usize) -> &Mat {
        &self.class_maps[x]
    }

    pub fn class_maps(&self) -> &[Mat] {
        &self.class_maps
    }

    pub(crate) fn block(&self, x: usize) -> Range<usize> {
        self.offsets[x]..self.offsets[x + 1]
    }

    /// Rows of the section belonging to block `x`.
    pub(crate) fn sect_rows(&self, x: usize) -> Mat {
        self.quot
            .sect
            .select_rows(&self.block(x).collect::<Vec<_>>())
    }

    /// Rows of the relation span belonging to block `x`.
    pub(crate) fn relation_rows(&self, x: usize) -> Mat {
        self.relations
            .select_rows(&self.block(x).collect::<Vec<_>>())
    }

    /// `Delta` on `L0` pushed to `L (x)_k L`, from the given per-object coproducts.
    fn coproduct_l0(&self, deltas: &[Mat]) -> Mat {
        let f = self.carrier.field();
        let l = self.dim();
        let cols: Vec<Mat> = deltas
            .iter()
            .enumerate()
            .map(|(x, d)| {
                let a = self.endos[x].dim();
                let i = &self.class_maps[x];
                Tensor::new(vec![a, a], d.clone())
                    .apply(0, 1, i, &[l])
                    .apply(1, 1, i, &[l])
                    .into_mat()
            })
            .collect();
        cols.iter()
            .fold(Mat::zeros(f, l * l, 0), |acc, c| acc.hcat(c))
    }
}

/// `Delta [phi (x) m] = sum [phi (x) m_i] (x) [phi^i (x) m]` and `eps [phi (x) m] = phi(m)`,
/// both checked to descend and to be independent of the dual bases.
pub fn induce_coring<G: Rng + ?Sized>(
    c: &Coend,
    rng: &mut G,
) -> Result<(Arc<Coalgebroid>, Report)> {
    let f = c.carrier.field();
    let n = c.pres.algebra.dim();
    let mut rep = Report::new();
    let deltas: Vec<Mat> = c.endos.iter().map(|e| e.delta_ambient().clone()).collect();
    let d0 = c.coproduct_l0(&deltas);
    let l_pair = crate::tensor::TensorSpace::tau_sigma(&c.carrier, &c.carrier)?;
    let pd0 = l_pair.proj_mat(&d0);
    if !pd0.mul(&c.relations).is_zero() {
        return Err(Error::IllDefined(
            "coproduct does not descend to the coend".into(),
        ));
    }
    rep.pass("Coend/coproduct-descends");
    let eps0 = c
        .duals
        .iter()
        .fold(Mat::zeros(f, n, 0), |acc, d| acc.hcat(d.pairing()));
    if !eps0.mul(&c.relations).is_zero() {
        return Err(Error::IllDefined(
            "counit does not descend to the coend".into(),
        ));
    }
    rep.pass("Coend/counit-descends");

    // the same coproduct from randomly chosen dual bases
    let other: Vec<Mat> = c
        .pres
        .objects
        .iter()
        .map(|o| -> Result<Mat> {
            let d = DualData::with_random_basis(&o.module, Side::Left, rng)?;
            let e = d.dual().dim();
            let dm = o.module.dim();
            Ok(Mat::identity(f, e)
                .kron(&d.db_ambient())
                .kron(&Mat::identity(f, dm)))
        })
        .collect::<Result<_>>()?;
    let pd1 = l_pair.proj_mat(&c.coproduct_l0(&other));
    rep.mat_eq("Coend/basis-independent", &[], &pd1, &pd0);

    let delta_amb = d0.mul(&c.quot.sect);
    let coalg = Coalgebroid::from_ambient(c.carrier.clone(), &delta_amb, eps0.mul(&c.quot.sect))?;
    Ok((Arc::new(coalg), rep))
}

/// `delta_X(m) = sum m_i (x) [phi^i (x) m]` for every object, with checks that
/// each is a comodule and every morphism is colinear.
pub fn coactions(c: &Coend, coalg: &Arc<Coalgebroid>) -> Result<(Vec<RightComodule>, Report)> {
    let f = c.carrier.field();
    let l = c.dim();
    let mut rep = Report::new();
    let mut out = Vec::with_capacity(c.pres.objects.len());
    for (x, o) in c.pres.objects.iter().enumerate() {
        let d = o.module.dim();
        let e = c.duals[x].dual().dim();
        let lifted = c.duals[x].db_ambient().kron(&Mat::identity(f, d));
        let amb = Tensor::new(vec![d, e * d], lifted)
            .apply(1, 1, &c.class_maps[x], &[l])
            .into_mat();
        let m = RightComodule::from_ambient(coalg.clone(), &o.module, &amb)?;
        rep.merge(m.check()?);
        out.push(m);
    }
    for m in &c.pres.morphisms {
        rep.merge(check_right_map(
            &out[m.src],
            &out[m.dst],
            &m.matrix,
            "Coend/colinear",
        ));
    }
    Ok((out, rep))
}
