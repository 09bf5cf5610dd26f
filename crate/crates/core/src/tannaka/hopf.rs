//! Product, unit, antipode and opposite antipode on the coend, each induced
//! object by object and checked to descend.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::coend::{build_coend, coactions, induce_coring, Coend};
use super::roundtrip::{roundtrip_check, Roundtrip};
use super::{augment_morphisms, validate_presentation, DualEntry, Presentation};
use crate::antipode::{compute_antipode, compute_opposite_antipode, Antipode, OppositeAntipode};
use crate::bialgebroid::Bialgebroid;
use crate::coalgebroid::Coalgebroid;
use crate::comodule::RightComodule;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::par::ExecMode;
use crate::report::Report;
use crate::tensor::{Tensor, TensorSpace};

/// Flatten an `n x d` functional row-major into a column.
fn flat(m: &Mat) -> Mat {
    let len = m.rows() * m.cols();
    m.clone().reshape(len, 1)
}

fn unit_vec(f: crate::field::Field, n: usize, i: usize) -> Mat {
    Mat::from_fn(f, n, 1, |r, _| if r == i { f.one() } else { f.zero() })
}

/// `[phi (x) m]_X o [psi (x) n]_Y = [chi theta^-1 (x) theta(m (x) n)]_{X (x) Y}`
/// with `chi(m' (x) n') = psi(phi(m') n')`, on the two blocks of `L0`.
fn block_product(c: &Coend, x: usize, y: usize) -> Result<(usize, Mat)> {
    let p = c.presentation();
    let f = p.field();
    let n = p.algebra.dim();
    let entry = p
        .tensor_of(x, y)
        .ok_or_else(|| Error::Schema("tensor table is not closed".into()))?;
    let z = entry.result;
    let (dx, dy) = (p.dim(x), p.dim(y));
    let duals = c.duals();
    let (ex, ey, ez) = (
        duals[x].dual().dim(),
        duals[y].dual().dim(),
        duals[z].dual().dim(),
    );
    let inv = p.chain_theta_inverse(&[x, y])?;
    let lam = p.module(y).left()?;
    let (px, py) = (duals[x].pairing(), duals[y].pairing());
    let mut coeff = Mat::zeros(f, ez, ex * ey);
    for s in 0..ey {
        let psi = Mat::from_fn(f, n, dy, |r, l| py.get(r, s * dy + l));
        let g: Vec<Mat> = (0..n).map(|r| psi.mul(&lam[r])).collect();
        for t in 0..ex {
            let mut chi = Mat::zeros(f, n, dx * dy);
            for (r, gr) in g.iter().enumerate() {
                let phi_r = Mat::from_fn(f, 1, dx, |_, j| px.get(r, t * dx + j));
                chi = chi.add(&phi_r.kron(gr));
            }
            let v = duals[z]
                .coords(&flat(&chi.mul(&inv)))
                .ok_or_else(|| Error::IllDefined("product functional is not R-linear".into()))?;
            for i in 0..ez {
                coeff.set(i, t * ey + s, v.get(i, 0));
            }
        }
    }
    // columns (t, s, j, l) -> (t, j, s, l)
    let k = coeff.kron(&entry.theta);
    let t = Tensor::new(vec![ex, ey, dx, dy], k.transpose()).permute(&[0, 2, 1, 3]);
    Ok((z, t.into_mat().transpose()))
}

/// The product induced through the tensor table and the unit through `F(I) ~ R`.
pub fn induce_product(c: &Coend, coalg: &Arc<Coalgebroid>) -> Result<(Bialgebroid, Report)> {
    let p = c.presentation();
    let f = p.field();
    let n = p.algebra.dim();
    let l = c.dim();
    let k = p.objects.len();
    let mut rep = Report::new();
    let mut mult = Mat::zeros(f, l * l, l);
    let mut left_rel: Vec<Mat> = (0..k)
        .map(|y| Mat::zeros(f, c.relations().cols() * c.block(y).len(), l))
        .collect();
    let mut right_rel: Vec<Mat> = (0..k)
        .map(|x| Mat::zeros(f, c.block(x).len() * c.relations().cols(), l))
        .collect();
    let w = c.relations().cols();
    for x in 0..k {
        for y in 0..k {
            let (z, blk) = block_product(c, x, y)?;
            let m0 = c.class_map(z).mul(&blk);
            let (ax, ay) = (c.block(x).len(), c.block(y).len());
            let t = Tensor::new(vec![ax, ay], m0.transpose());
            mult = mult.add(
                t.apply(0, 1, &c.sect_rows(x).transpose(), &[l])
                    .apply(1, 1, &c.sect_rows(y).transpose(), &[l])
                    .data(),
            );
            if w > 0 {
                left_rel[y] =
                    left_rel[y].add(t.apply(0, 1, &c.relation_rows(x).transpose(), &[w]).data());
                right_rel[x] =
                    right_rel[x].add(t.apply(1, 1, &c.relation_rows(y).transpose(), &[w]).data());
            }
        }
    }
    if left_rel.iter().chain(&right_rel).any(|m| !m.is_zero()) {
        return Err(Error::IllDefined(
            "product does not descend to the coend".into(),
        ));
    }
    rep.pass("Coend/product-descends");

    let (Some(i), Some(eta)) = (p.unit_object, &p.unit_iso) else {
        return Err(Error::Schema("presentation has no unit object".into()));
    };
    let eta_inv = eta
        .invert()
        .map_err(|_| Error::IllDefined("unit isomorphism is singular".into()))?;
    let alg = &p.algebra;
    let di = c.duals();
    let mut unit = Mat::zeros(f, l, n * n);
    for a in 0..n {
        // phi_a(x) = a eta(x)
        let phi = di[i]
            .coords(&flat(&alg.lmul(a).mul(eta)))
            .ok_or_else(|| Error::IllDefined("unit functional is not R-linear".into()))?;
        for b in 0..n {
            let v = c
                .class_map(i)
                .mul(&phi.kron(&eta_inv.mul(&unit_vec(f, n, b))));
            for r in 0..l {
                unit.set(r, a * n + b, v.get(r, 0));
            }
        }
    }
    let b = Bialgebroid::new(coalg.clone(), mult.transpose(), unit)?;
    Ok((b, rep))
}

fn dual_for(table: &[DualEntry], x: usize) -> Option<&DualEntry> {
    table.iter().find(|d| d.object == x)
}

/// `nabla [phi (x) m]_X = sum_j [eta^j (x) phi]_{X*} (x) [phi_j (x) m]_X`, with
/// `F(X*)` identified with `F(X)*` through `ev`. Checked against `beta^-1`.
pub fn induce_antipode(c: &Coend, b: &Arc<Bialgebroid>) -> Result<(Antipode, Report)> {
    let p = c.presentation();
    let f = p.field();
    let l = c.dim();
    let duals = c.duals();
    let mut rep = Report::new();
    let mut cols = Mat::zeros(f, l * l, 0);
    let mut pieces = Vec::new();
    for x in 0..p.objects.len() {
        let d = dual_for(&p.duals, x)
            .ok_or_else(|| Error::NoAntipode(format!("{} has no left dual", p.objects[x].name)))?;
        let u = d.dual;
        let (dx, du) = (p.dim(x), p.dim(u));
        let ex = duals[x].dual().dim();
        let pair = p.left_pairing(d)?;
        let kappa_flat = Mat::from_cols(
            f,
            pair.rows() * dx,
            &(0..du)
                .map(|k| {
                    flat(&Mat::from_fn(f, pair.rows(), dx, |r, j| {
                        pair.get(r, k * dx + j)
                    }))
                    .col(0)
                })
                .collect::<Vec<_>>(),
        );
        let kappa = duals[x]
            .coords(&kappa_flat)
            .ok_or_else(|| Error::IllDefined("evaluation is not R-linear".into()))?;
        let kappa_inv = kappa.invert().map_err(|_| {
            Error::IllDefined(format!(
                "ev does not identify the dual of {}",
                p.objects[x].name
            ))
        })?;
        let ups = duals[u].dual_basis();
        let mut block = Mat::zeros(f, l * l, ex * dx);
        for j in 0..du {
            let a = c
                .class_map(u)
                .mul(&Mat::column_vector(f, &ups.col(j)).kron(&kappa_inv));
            let bb = c
                .class_map(x)
                .mul(&kappa.select_cols(&[j]).kron(&Mat::identity(f, dx)));
            block = block.add(&a.kron(&bb));
        }
        cols = cols.hcat(&block);
        pieces.push((x, u, kappa_inv, block));
    }
    let ss = TensorSpace::sigma_sigma(c.carrier(), c.carrier())?;
    let proj = ss.proj_mat(&cols);
    if !proj.mul(c.relations()).is_zero() {
        return Err(Error::IllDefined(
            "antipode does not descend to the coend".into(),
        ));
    }
    rep.pass("Coend/antipode-descends");
    let nabla = proj.mul(&c.quotient().sect);
    let a = Antipode::new(b.clone(), nabla)?;

    let (s, t) = (b.source(), b.target());
    for (x, u, kappa_inv, block) in &pieces {
        let (x, u) = (*x, *u);
        let dx = p.dim(x);
        let (ex, eu) = (duals[x].dual().dim(), duals[u].dual().dim());
        // sum_j [eta^j (x) phi] o [phi_j (x) m] = t(phi(m))
        rep.mat_eq(
            "Eq.rt13",
            &[x],
            &b.mult_ambient().mul(block),
            &t.mul(duals[x].pairing()),
        );
        // sum_i [phi (x) m_i] o [eta (x) phi^i] = s(eta(phi))
        let mut lhs = Mat::zeros(f, l * l, ex * eu);
        let phis = duals[x].dual_basis();
        for i in 0..dx {
            let ci = c
                .class_map(x)
                .mul(&Mat::identity(f, ex).kron(&unit_vec(f, dx, i)));
            let di = c.class_map(u).mul(
                &Mat::identity(f, eu).kron(&kappa_inv.mul(&Mat::column_vector(f, &phis.col(i)))),
            );
            lhs = lhs.add(&ci.kron(&di));
        }
        let mut rhs = Mat::zeros(f, l, ex * eu);
        for tt in 0..ex {
            for ss_ in 0..eu {
                let v = duals[u]
                    .pairing()
                    .mul(&unit_vec(f, eu, ss_).kron(&kappa_inv.select_cols(&[tt])));
                let col = s.mul(&v);
                for r in 0..l {
                    rhs.set(r, tt * eu + ss_, col.get(r, 0));
                }
            }
        }
        rep.mat_eq("Eq.rt14", &[x], &b.mult_ambient().mul(&lhs), &rhs);
    }
    match compute_antipode(b) {
        Ok(direct) => rep.mat_eq("Antipode/unique", &[], a.nabla(), direct.nabla()),
        Err(e) => rep.fail_note("Antipode/unique", e.to_string()),
    }
    rep.merge(a.check()?);
    Ok((a, rep))
}

/// `nabla_op [phi (x) m]_X = sum_j [ev(m (x) -) (x) v_j]_{*X} (x) [phi (x) n_j]_X`
/// with `db(1) = sum_j v_j (x) n_j`. Checked against `gamma^-1`.
pub fn induce_opposite_antipode(
    c: &Coend,
    b: &Arc<Bialgebroid>,
) -> Result<(OppositeAntipode, Report)> {
    let p = c.presentation();
    let f = p.field();
    let l = c.dim();
    let duals = c.duals();
    let mut rep = Report::new();
    let mut cols = Mat::zeros(f, l * l, 0);
    for x in 0..p.objects.len() {
        let d = dual_for(&p.right_duals, x).ok_or_else(|| {
            Error::NoOppositeAntipode(format!("{} has no right dual", p.objects[x].name))
        })?;
        let v = d.dual;
        let (dx, dv) = (p.dim(x), p.dim(v));
        let ex = duals[x].dual().dim();
        let pair = p.right_pairing(d)?;
        let co = p.right_copairing(d)?;
        let xi_flat = Mat::from_cols(
            f,
            pair.rows() * dv,
            &(0..dx)
                .map(|m| {
                    flat(&Mat::from_fn(f, pair.rows(), dv, |r, k| {
                        pair.get(r, m * dv + k)
                    }))
                    .col(0)
                })
                .collect::<Vec<_>>(),
        );
        let xi = duals[v]
            .coords(&xi_flat)
            .ok_or_else(|| Error::IllDefined("right evaluation is not R-linear".into()))?;
        // columns of kron(A_k, B_j) come as (l, t); reorder to (t, l)
        let order: Vec<usize> = (0..ex * dx).map(|i| (i % dx) * ex + i / dx).collect();
        let mut block = Mat::zeros(f, l * l, ex * dx);
        for k in 0..dv {
            for j in 0..dx {
                let coef = co.get(k * dx + j, 0);
                if f.is_zero(&coef) {
                    continue;
                }
                let a = c.class_map(v).mul(&xi.kron(&unit_vec(f, dv, k)));
                let bb = c
                    .class_map(x)
                    .mul(&Mat::identity(f, ex).kron(&unit_vec(f, dx, j)));
                block = block.add(&a.kron(&bb).select_cols(&order).scale(&coef));
            }
        }
        cols = cols.hcat(&block);
    }
    let tt = TensorSpace::tau_tau(c.carrier(), c.carrier())?;
    let proj = tt.proj_mat(&cols);
    if !proj.mul(c.relations()).is_zero() {
        return Err(Error::IllDefined(
            "opposite antipode does not descend to the coend".into(),
        ));
    }
    rep.pass("Coend/opposite-antipode-descends");
    let o = OppositeAntipode::new(b.clone(), proj.mul(&c.quotient().sect))?;
    match compute_opposite_antipode(b) {
        Ok(direct) => rep.mat_eq("OpAntipode/unique", &[], o.nabla(), direct.nabla()),
        Err(e) => rep.fail_note("OpAntipode/unique", e.to_string()),
    }
    rep.merge(o.check()?);
    Ok((o, rep))
}

#[derive(Clone, Debug)]
pub struct ReconstructOptions {
    pub seed: u64,
    pub roundtrip_rank: usize,
    pub skip_roundtrip: bool,
    pub mode: ExecMode,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        ReconstructOptions {
            seed: 0,
            roundtrip_rank: 2,
            skip_roundtrip: false,
            mode: ExecMode::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Reconstructed {
    /// The presentation after augmentation.
    pub presentation: Arc<Presentation>,
    pub coend: Coend,
    pub coalgebroid: Arc<Coalgebroid>,
    pub bialgebroid: Option<Arc<Bialgebroid>>,
    pub antipode: Option<Antipode>,
    pub opposite_antipode: Option<OppositeAntipode>,
    pub coactions: Vec<RightComodule>,
    pub roundtrip: Option<Roundtrip>,
    pub report: Report,
}

impl Reconstructed {
    pub fn dim(&self) -> usize {
        self.coend.dim()
    }
}

/// Validate, augment, build the coend and induce every structure the
/// presentation supports, collecting all checks in one report.
pub fn reconstruct(p: &Presentation, opts: &ReconstructOptions) -> Result<Reconstructed> {
    let mut report = validate_presentation(p);
    if !report.ok() {
        if !report.passed("Presentation/projective") {
            let note = report
                .get("Presentation/projective")
                .and_then(|e| e.note.clone())
                .unwrap_or_default();
            return Err(Error::NotProjective(note));
        }
        return Err(Error::Schema(format!(
            "presentation is invalid: {}",
            report.failed_tags().join(", ")
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let aug = augment_morphisms(p)?;
    let coend = build_coend(&aug, opts.mode)?;
    let (coalg, rep) = induce_coring(&coend, &mut rng)?;
    report.merge(rep);
    report.merge(coalg.check()?);

    let monoidal = p.unit_object.is_some() && !p.tensor.is_empty();
    let mut bialgebroid = None;
    let mut antipode = None;
    let mut opposite = None;
    if monoidal {
        let (b, rep) = induce_product(&coend, &coalg)?;
        report.merge(rep);
        report.merge(b.check_algebra()?);
        let b = Arc::new(b);
        if !p.duals.is_empty() {
            let (a, rep) = induce_antipode(&coend, &b)?;
            report.merge(rep);
            antipode = Some(a);
        }
        if !p.right_duals.is_empty() {
            let (o, rep) = induce_opposite_antipode(&coend, &b)?;
            report.merge(rep);
            opposite = Some(o);
        }
        bialgebroid = Some(b);
    }

    let (comods, rep) = coactions(&coend, &coalg)?;
    report.merge(rep);
    if let Some(b) = &bialgebroid {
        for t in &aug.tensor {
            let (space, prod) = b.tensor(&comods[t.left], &comods[t.right])?;
            let theta = space.lift_through(&t.theta);
            report.merge(crate::comodule::check_right_map(
                &prod,
                &comods[t.result],
                &theta,
                "Coend/monoidal",
            ));
        }
    }

    let roundtrip = if opts.skip_roundtrip {
        None
    } else {
        let names: Vec<String> = aug.objects.iter().map(|o| o.name.clone()).collect();
        let r = roundtrip_check(&coalg, &comods, &names, opts.roundtrip_rank, opts.mode)?;
        report.merge(r.report.clone());
        Some(r)
    };
    Ok(Reconstructed {
        presentation: Arc::new(aug),
        coend,
        coalgebroid: coalg,
        bialgebroid,
        antipode,
        opposite_antipode: opposite,
        coactions: comods,
        roundtrip,
        report,
    })
}
