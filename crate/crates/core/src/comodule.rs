//! Right and left comodules over a coalgebroid, and passage to duals.
//!
//! A right comodule is a right `R`-module `M` (carried as `tau_right`) with
//! `delta: M -> M _tau(x)^sigma L`; its left action `tau_left` is induced by
//! the coaction. A left comodule is a left module (carried as `sigma_left`)
//! with `delta: M -> L _tau(x)^sigma M` and induced `sigma_right`.

use std::sync::Arc;

use crate::coalgebroid::Coalgebroid;
use crate::dual::DualData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{Action, Bimodule, DoubleBimodule, Pair};
use crate::report::Report;
use crate::tensor::{Link, Tensor, TensorSpace};

use Action::*;

fn coaction_space(l: &Coalgebroid, m: &DoubleBimodule, right: bool) -> Result<TensorSpace> {
    let lc = l.carrier().clone();
    if right {
        TensorSpace::new(
            vec![m.clone(), lc],
            vec![Link::new((0, TauRight), (1, SigmaLeft))],
            [None, None, Some((1, TauLeft)), Some((1, TauRight))],
        )
    } else {
        TensorSpace::new(
            vec![lc, m.clone()],
            vec![Link::new((0, TauRight), (1, SigmaLeft))],
            [Some((0, SigmaLeft)), Some((0, SigmaRight)), None, None],
        )
    }
}

fn one_atom(
    alg: &Arc<crate::algebra::Algebra>,
    dim: usize,
    acts: [Option<Vec<Mat>>; 4],
) -> Result<DoubleBimodule> {
    DoubleBimodule::new(alg.clone(), dim, acts)
}

#[derive(Clone, Debug)]
pub struct RightComodule {
    coalg: Arc<Coalgebroid>,
    module: DoubleBimodule,
    space: TensorSpace,
    delta: Mat,
    delta_amb: Mat,
    given_left: Option<Vec<Mat>>,
}

impl RightComodule {
    /// `module` needs a right action; a left action, if present, is checked
    /// against the one induced by the coaction.
    pub fn new(coalg: Arc<Coalgebroid>, module: &Bimodule, delta: Mat) -> Result<Self> {
        let alg = coalg.algebra().clone();
        let d = module.dim();
        let right = module.right()?.to_vec();
        let bare = one_atom(&alg, d, [None, None, None, Some(right.clone())])?;
        let space = coaction_space(&coalg, &bare, true)?;
        if delta.shape() != (space.dim(), d) {
            return Err(Error::DimensionMismatch(format!(
                "coaction has shape {:?}, expected {}x{d}",
                delta.shape(),
                space.dim()
            )));
        }
        let delta_amb = space.sect_mat(&delta);
        let induced = Self::induced(&coalg, &right, &delta_amb);
        let full = one_atom(&alg, d, [None, None, Some(induced), Some(right)])?;
        let space = coaction_space(&coalg, &full, true)?;
        let given_left = module.left().ok().map(<[Mat]>::to_vec);
        Ok(RightComodule {
            coalg,
            module: full,
            space,
            delta,
            delta_amb,
            given_left,
        })
    }

    pub fn from_ambient(
        coalg: Arc<Coalgebroid>,
        module: &Bimodule,
        delta_amb: &Mat,
    ) -> Result<Self> {
        let right = module.right()?.to_vec();
        let bare = one_atom(
            coalg.algebra(),
            module.dim(),
            [None, None, None, Some(right)],
        )?;
        let delta = coaction_space(&coalg, &bare, true)?.proj_mat(delta_amb);
        RightComodule::new(coalg, module, delta)
    }

    /// `tau(a) m = sum m0 tau(eps(tau(a) m1))`.
    fn induced(coalg: &Coalgebroid, right: &[Mat], delta_amb: &Mat) -> Vec<Mat> {
        let n = coalg.algebra().dim();
        let f = coalg.field();
        let d = right[0].rows();
        let tl = coalg.carrier().mats(TauLeft).expect("coalgebroid carrier");
        (0..n)
            .map(|a| {
                let mut acc = Mat::zeros(f, d, d * coalg.dim());
                for r in 0..n {
                    acc = acc.add(&right[r].kron(&coalg.counit().select_rows(&[r]).mul(&tl[a])));
                }
                acc.mul(delta_amb)
            })
            .collect()
    }

    pub fn coalgebroid(&self) -> &Arc<Coalgebroid> {
        &self.coalg
    }

    /// The module with `tau_right` and the induced `tau_left`.
    pub fn module(&self) -> &DoubleBimodule {
        &self.module
    }

    pub fn bimodule(&self) -> Bimodule {
        self.module.pair(Pair::Tau)
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    pub fn delta_ambient(&self) -> &Mat {
        &self.delta_amb
    }

    pub fn check(&self) -> Result<Report> {
        let alg = self.coalg.algebra().clone();
        let n = alg.dim();
        let d = self.dim();
        let l = &self.coalg;
        let sp = &self.space;
        let mut rep = Report::new();
        let right = self.module.mats(TauRight)?;
        let left = self.module.mats(TauLeft)?;
        for r in 0..n {
            let e = alg.basis(r);
            rep.mat_eq(
                "Comodule/linear",
                &[r],
                &self.delta.mul(&right[r]),
                &sp.act(1, TauRight, &e, &self.delta)?,
            );
            rep.mat_eq(
                "Lemma1.3.2",
                &[r],
                &self.delta.mul(&left[r]),
                &sp.act(1, TauLeft, &e, &self.delta)?,
            );
            rep.mat_eq(
                "Eq.19",
                &[r],
                &sp.act(0, TauLeft, &e, &self.delta)?,
                &sp.act(1, SigmaRight, &e, &self.delta)?,
            );
            if let Some(g) = &self.given_left {
                rep.mat_eq("Eq.18", &[r], &g[r], &left[r]);
            }
        }
        let f = self.field();
        let mut counit = Mat::zeros(f, d, d * l.dim());
        for r in 0..n {
            counit = counit.add(&right[r].kron(&l.counit().select_rows(&[r])));
        }
        rep.mat_eq(
            "Comodule/counit",
            &[],
            &counit.mul(&self.delta_amb),
            &Mat::identity(f, d),
        );

        let triple = TensorSpace::new(
            vec![
                self.module.clone(),
                l.carrier().clone(),
                l.carrier().clone(),
            ],
            vec![
                Link::new((0, TauRight), (1, SigmaLeft)),
                Link::new((1, TauRight), (2, SigmaLeft)),
            ],
            [None, None, None, None],
        )?;
        let la = l.carrier().atoms().to_vec();
        let mut dims = vec![d];
        dims.extend(&la);
        let t = Tensor::new(dims.clone(), self.delta_amb.clone());
        let mut dd = vec![d];
        dd.extend(&la);
        let lhs = t.apply(0, 1, &self.delta_amb, &dd);
        let ll: Vec<usize> = la.iter().chain(&la).copied().collect();
        let rhs = t.apply(1, la.len(), l.delta_ambient(), &ll);
        rep.mat_eq(
            "Comodule/coassoc",
            &[],
            &triple.proj(&lhs),
            &triple.proj(&rhs),
        );
        Ok(rep)
    }

    /// The left comodule structure on the left dual `M*`:
    /// `delta(phi) = sum_i sigma(phi(m_i0)) m_i1 (x) phi^i`.
    pub fn dual(&self) -> Result<(DualData, LeftComodule)> {
        let dual = DualData::left(&self.bimodule())?;
        let l = &self.coalg;
        let f = self.field();
        let n = l.algebra().dim();
        let d = self.dim();
        let e = dual.dual().dim();
        let sl = l.carrier().mats(SigmaLeft)?;
        let pairing = dual.pairing();
        let basis = dual.dual_basis();
        let cols: Vec<Vec<_>> = (0..e)
            .map(|t| {
                let phi_t =
                    Mat::column_vector(f, &Mat::identity(f, e).col(t)).kron(&Mat::identity(f, d));
                let mut p = Mat::zeros(f, l.dim(), d * l.dim());
                for r in 0..n {
                    p = p.add(&pairing.select_rows(&[r]).mul(&phi_t).kron(&sl[r]));
                }
                let img = p.mul(&self.delta_amb);
                let mut acc = Mat::zeros(f, l.dim() * e, 1);
                for i in 0..d {
                    let a = Mat::column_vector(f, &img.col(i));
                    acc = acc.add(&a.kron(&Mat::column_vector(f, &basis.col(i))));
                }
                acc.col(0)
            })
            .collect();
        let amb = Mat::from_cols(f, l.dim() * e, &cols);
        let left = LeftComodule::from_ambient(self.coalg.clone(), dual.dual(), &amb)?;
        Ok((dual, left))
    }
}

#[derive(Clone, Debug)]
pub struct LeftComodule {
    coalg: Arc<Coalgebroid>,
    module: DoubleBimodule,
    space: TensorSpace,
    delta: Mat,
    delta_amb: Mat,
    given_right: Option<Vec<Mat>>,
}

impl LeftComodule {
    /// `module` needs a left action; a right action, if present, is checked
    /// against the one induced by the coaction.
    pub fn new(coalg: Arc<Coalgebroid>, module: &Bimodule, delta: Mat) -> Result<Self> {
        let alg = coalg.algebra().clone();
        let d = module.dim();
        let left = module.left()?.to_vec();
        let bare = one_atom(&alg, d, [Some(left.clone()), None, None, None])?;
        let space = coaction_space(&coalg, &bare, false)?;
        if delta.shape() != (space.dim(), d) {
            return Err(Error::DimensionMismatch(format!(
                "coaction has shape {:?}, expected {}x{d}",
                delta.shape(),
                space.dim()
            )));
        }
        let delta_amb = space.sect_mat(&delta);
        let induced = Self::induced(&coalg, &left, &delta_amb);
        let full = one_atom(&alg, d, [Some(left), Some(induced), None, None])?;
        let space = coaction_space(&coalg, &full, false)?;
        let given_right = module.right().ok().map(<[Mat]>::to_vec);
        Ok(LeftComodule {
            coalg,
            module: full,
            space,
            delta,
            delta_amb,
            given_right,
        })
    }

    pub fn from_ambient(
        coalg: Arc<Coalgebroid>,
        module: &Bimodule,
        delta_amb: &Mat,
    ) -> Result<Self> {
        let left = module.left()?.to_vec();
        let bare = one_atom(
            coalg.algebra(),
            module.dim(),
            [Some(left), None, None, None],
        )?;
        let delta = coaction_space(&coalg, &bare, false)?.proj_mat(delta_amb);
        LeftComodule::new(coalg, module, delta)
    }

    /// `m sigma(a) = sum sigma(eps(m_-1 sigma(a))) m0`.
    fn induced(coalg: &Coalgebroid, left: &[Mat], delta_amb: &Mat) -> Vec<Mat> {
        let n = coalg.algebra().dim();
        let f = coalg.field();
        let d = left[0].rows();
        let sr = coalg
            .carrier()
            .mats(SigmaRight)
            .expect("coalgebroid carrier");
        (0..n)
            .map(|a| {
                let mut acc = Mat::zeros(f, d, coalg.dim() * d);
                for r in 0..n {
                    acc = acc.add(&coalg.counit().select_rows(&[r]).mul(&sr[a]).kron(&left[r]));
                }
                acc.mul(delta_amb)
            })
            .collect()
    }

    pub fn coalgebroid(&self) -> &Arc<Coalgebroid> {
        &self.coalg
    }

    /// The module with `sigma_left` and the induced `sigma_right`.
    pub fn module(&self) -> &DoubleBimodule {
        &self.module
    }

    pub fn bimodule(&self) -> Bimodule {
        self.module.pair(Pair::Sigma)
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    pub fn delta_ambient(&self) -> &Mat {
        &self.delta_amb
    }

    pub fn check(&self) -> Result<Report> {
        let alg = self.coalg.algebra().clone();
        let n = alg.dim();
        let d = self.dim();
        let l = &self.coalg;
        let sp = &self.space;
        let mut rep = Report::new();
        let left = self.module.mats(SigmaLeft)?;
        let right = self.module.mats(SigmaRight)?;
        for r in 0..n {
            let e = alg.basis(r);
            rep.mat_eq(
                "Comodule/linear",
                &[r],
                &self.delta.mul(&left[r]),
                &sp.act(0, SigmaLeft, &e, &self.delta)?,
            );
            rep.mat_eq(
                "Lemma1.3.2/left",
                &[r],
                &self.delta.mul(&right[r]),
                &sp.act(0, SigmaRight, &e, &self.delta)?,
            );
            rep.mat_eq(
                "Eq.17",
                &[r],
                &sp.act(0, TauLeft, &e, &self.delta)?,
                &sp.act(1, SigmaRight, &e, &self.delta)?,
            );
            if let Some(g) = &self.given_right {
                rep.mat_eq("Eq.17/induced", &[r], &g[r], &right[r]);
            }
        }
        let f = self.field();
        let mut counit = Mat::zeros(f, d, l.dim() * d);
        for r in 0..n {
            counit = counit.add(&l.counit().select_rows(&[r]).kron(&left[r]));
        }
        rep.mat_eq(
            "Comodule/counit",
            &[],
            &counit.mul(&self.delta_amb),
            &Mat::identity(f, d),
        );

        let triple = TensorSpace::new(
            vec![
                l.carrier().clone(),
                l.carrier().clone(),
                self.module.clone(),
            ],
            vec![
                Link::new((0, TauRight), (1, SigmaLeft)),
                Link::new((1, TauRight), (2, SigmaLeft)),
            ],
            [None, None, None, None],
        )?;
        let la = l.carrier().atoms().to_vec();
        let k = la.len();
        let mut dims = la.clone();
        dims.push(d);
        let t = Tensor::new(dims, self.delta_amb.clone());
        let ll: Vec<usize> = la.iter().chain(&la).copied().collect();
        let lhs = t.apply(0, k, l.delta_ambient(), &ll);
        let mut ld = la.clone();
        ld.push(d);
        let rhs = t.apply(k, 1, &self.delta_amb, &ld);
        rep.mat_eq(
            "Comodule/coassoc",
            &[],
            &triple.proj(&lhs),
            &triple.proj(&rhs),
        );
        Ok(rep)
    }

    /// The right comodule structure on the right dual `rM*`:
    /// `delta(eta) = sum_j eta^j (x) (n_j)_-1 tau(eta((n_j)_0))`.
    pub fn dual(&self) -> Result<(DualData, RightComodule)> {
        let dual = DualData::right(&self.bimodule())?;
        let l = &self.coalg;
        let f = self.field();
        let n = l.algebra().dim();
        let d = self.dim();
        let e = dual.dual().dim();
        let tr = l.carrier().mats(TauRight)?;
        let pairing = dual.pairing();
        let basis = dual.dual_basis();
        let cols: Vec<Vec<_>> = (0..e)
            .map(|t| {
                let eta_t =
                    Mat::identity(f, d).kron(&Mat::column_vector(f, &Mat::identity(f, e).col(t)));
                let mut q = Mat::zeros(f, l.dim(), l.dim() * d);
                for r in 0..n {
                    q = q.add(&tr[r].kron(&pairing.select_rows(&[r]).mul(&eta_t)));
                }
                let img = q.mul(&self.delta_amb);
                let mut acc = Mat::zeros(f, e * l.dim(), 1);
                for j in 0..d {
                    let b = Mat::column_vector(f, &basis.col(j));
                    acc = acc.add(&b.kron(&Mat::column_vector(f, &img.col(j))));
                }
                acc.col(0)
            })
            .collect();
        let amb = Mat::from_cols(f, e * l.dim(), &cols);
        let right = RightComodule::from_ambient(self.coalg.clone(), dual.dual(), &amb)?;
        Ok((dual, right))
    }
}

/// Whether `mat: src -> dst` commutes with the coactions.
pub fn check_right_map(src: &RightComodule, dst: &RightComodule, mat: &Mat, tag: &str) -> Report {
    let mut rep = Report::new();
    let ld = src.coalg.dim();
    let f = src.field();
    let pushed = dst
        .space
        .proj_mat(&mat.kron(&Mat::identity(f, ld)).mul(&src.delta_amb));
    rep.mat_eq(tag, &[0], &dst.delta.mul(mat), &pushed);
    for r in 0..src.coalg.algebra().dim() {
        let s = &src.module.mats(TauRight).expect("right action")[r];
        let t = &dst.module.mats(TauRight).expect("right action")[r];
        rep.mat_eq(tag, &[1, r], &mat.mul(s), &t.mul(mat));
    }
    rep
}
