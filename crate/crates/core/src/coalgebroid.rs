//! Coalgebroids: double bimodules `L` with a coproduct `L -> L _tau(x)^sigma L`
//! and a counit `L -> R`.
//!
//! Maps are stored in quotient coordinates. Identities are checked as
//! matrix equalities after lifting `Delta` to ambient representatives and
//! projecting back, so each check covers every basis vector at once.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::dual::DualData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{Action, DoubleBimodule};
use crate::report::Report;
use crate::tensor::{Link, Tensor, TensorSpace};

use Action::*;

#[derive(Clone, Debug)]
pub struct Coalgebroid {
    carrier: DoubleBimodule,
    pair: Arc<TensorSpace>,
    delta: Mat,
    counit: Mat,
    delta_amb: Mat,
}

impl Coalgebroid {
    /// `delta` is `dim(L tau-sigma L) x dim L`, `counit` is `dim R x dim L`.
    pub fn new(carrier: DoubleBimodule, delta: Mat, counit: Mat) -> Result<Self> {
        for a in Action::ALL {
            if !carrier.has(a) {
                return Err(Error::Schema(format!("coalgebroid carrier lacks {a}")));
            }
        }
        let pair = TensorSpace::tau_sigma(&carrier, &carrier)?;
        let l = carrier.dim();
        let n = carrier.algebra().dim();
        if delta.shape() != (pair.dim(), l) {
            return Err(Error::DimensionMismatch(format!(
                "coproduct has shape {:?}, expected {}x{l}",
                delta.shape(),
                pair.dim()
            )));
        }
        if counit.shape() != (n, l) {
            return Err(Error::DimensionMismatch(format!(
                "counit has shape {:?}, expected {n}x{l}",
                counit.shape()
            )));
        }
        let delta_amb = pair.sect_mat(&delta);
        Ok(Coalgebroid {
            carrier,
            pair: Arc::new(pair),
            delta,
            counit,
            delta_amb,
        })
    }

    /// Build from an ambient-level coproduct (`dim L^2 x dim L`).
    pub fn from_ambient(carrier: DoubleBimodule, delta_amb: &Mat, counit: Mat) -> Result<Self> {
        let pair = TensorSpace::tau_sigma(&carrier, &carrier)?;
        let delta = pair.proj_mat(delta_amb);
        Coalgebroid::new(carrier, delta, counit)
    }

    /// The coalgebroid `M* (x)_k M` of a finitely generated projective right module.
    pub fn endo(dual: &DualData) -> Result<Self> {
        let base = dual.base();
        let ds = dual.dual();
        let alg = dual.algebra().clone();
        let f = alg.field();
        let (d, e) = (base.dim(), ds.dim());
        let carrier = DoubleBimodule::split(
            alg,
            vec![e, d],
            [
                Some((0, ds.left()?.to_vec())),
                ds.right().ok().map(|m| (0, m.to_vec())),
                base.left().ok().map(|m| (1, m.to_vec())),
                Some((1, base.right()?.to_vec())),
            ],
        )?;
        let carrier = require_all(carrier)?;
        // Delta(phi (x) m) = sum_i (phi (x) m_i) (x) (phi^i (x) m)
        let amb = Mat::identity(f, e)
            .kron(&dual.db_ambient())
            .kron(&Mat::identity(f, d));
        Coalgebroid::from_ambient(carrier, &amb, dual.pairing().clone())
    }

    /// The unit coalgebroid `R (x)_k R` with `Delta(a (x) b) = (a (x) 1) (x) (1 (x) b)`
    /// and `eps(a (x) b) = ab`.
    pub fn unit(alg: &Arc<Algebra>) -> Result<Self> {
        let f = alg.field();
        let n = alg.dim();
        let lm: Vec<Mat> = (0..n).map(|i| alg.lmul(i).clone()).collect();
        let rm: Vec<Mat> = (0..n).map(|i| alg.rmul(i).clone()).collect();
        let carrier = DoubleBimodule::split(
            alg.clone(),
            vec![n, n],
            [
                Some((0, lm.clone())),
                Some((0, rm.clone())),
                Some((1, lm)),
                Some((1, rm)),
            ],
        )?;
        let u = Mat::column_vector(f, alg.unit());
        let amb = Mat::identity(f, n)
            .kron(&u)
            .kron(&u)
            .kron(&Mat::identity(f, n));
        Coalgebroid::from_ambient(carrier, &amb, alg.mult_matrix().clone())
    }

    pub fn carrier(&self) -> &DoubleBimodule {
        &self.carrier
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.carrier.algebra()
    }

    pub fn field(&self) -> Field {
        self.carrier.field()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `L _tau(x)^sigma L`.
    pub fn pair_space(&self) -> &Arc<TensorSpace> {
        &self.pair
    }

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    /// Ambient representatives of `Delta`, `dim L^2 x dim L`.
    pub fn delta_ambient(&self) -> &Mat {
        &self.delta_amb
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    fn mats(&self, a: Action) -> &[Mat] {
        self.carrier.mats(a).expect("carrier has every action")
    }

    fn eps_row(&self, r: usize) -> Mat {
        self.counit.select_rows(&[r])
    }

    /// `h (x) k |-> sigma(eps(h)) k` on ambient vectors.
    pub fn eps_left_contract(&self) -> Mat {
        self.contract(|r| (self.eps_row(r), self.mats(SigmaLeft)[r].clone()))
    }

    /// `h (x) k |-> h tau(eps(k))` on ambient vectors.
    pub fn eps_right_contract(&self) -> Mat {
        self.contract(|r| (self.mats(TauRight)[r].clone(), self.eps_row(r)))
    }

    fn contract(&self, term: impl Fn(usize) -> (Mat, Mat)) -> Mat {
        let l = self.dim();
        let mut acc = Mat::zeros(self.field(), l, l * l);
        for r in 0..self.algebra().dim() {
            let (a, b) = term(r);
            acc = acc.add(&a.kron(&b));
        }
        acc
    }

    /// `eta(h)(a) = eps(tau(a) h)` as a `n^2 x dim L` matrix; row `i*n + j`
    /// is coordinate `i` of `eta(h)(e_j)`.
    pub fn anchor(&self) -> Mat {
        let n = self.algebra().dim();
        let l = self.dim();
        let rows: Vec<Mat> = (0..n)
            .map(|j| self.counit.mul(&self.mats(TauLeft)[j]))
            .collect();
        Mat::from_fn(self.field(), n * n, l, |row, h| {
            rows[row % n].get(row / n, h)
        })
    }

    /// Coassociativity in `L _tau(x)^sigma L _tau(x)^sigma L`.
    fn coassoc(&self, rep: &mut Report) -> Result<()> {
        let c = &self.carrier;
        let triple = TensorSpace::new(
            vec![c.clone(), c.clone(), c.clone()],
            vec![
                Link::new((0, TauRight), (1, SigmaLeft)),
                Link::new((1, TauRight), (2, SigmaLeft)),
            ],
            [
                Some((0, SigmaLeft)),
                Some((0, SigmaRight)),
                Some((2, TauLeft)),
                Some((2, TauRight)),
            ],
        )?;
        let atoms = c.atoms();
        let k = atoms.len();
        let two: Vec<usize> = atoms.iter().chain(atoms).copied().collect();
        let t = Tensor::new(two.clone(), self.delta_amb.clone());
        let lhs = triple.proj(&t.apply(0, k, &self.delta_amb, &two));
        let rhs = triple.proj(&t.apply(k, k, &self.delta_amb, &two));
        rep.mat_eq("Coalgebroid/coassoc", &[], &lhs, &rhs);
        Ok(())
    }

    /// Every coalgebroid identity, tagged by equation.
    pub fn check(&self) -> Result<Report> {
        let f = self.field();
        let alg = self.algebra().clone();
        let n = alg.dim();
        let pair = &self.pair;
        let mut rep = self.carrier.check();

        // Delta is a morphism of double bimodules
        for a in Action::ALL {
            let (fi, fa) = pair.exported(a)?;
            for r in 0..n {
                let lhs = self.delta.mul(&self.mats(a)[r]);
                let rhs = pair.act(fi, fa, &alg.basis(r), &self.delta)?;
                rep.mat_eq("Eq.9", &[a.index(), r], &lhs, &rhs);
            }
        }

        let id = Mat::identity(f, self.dim());
        rep.mat_eq(
            "Eq.10",
            &[0],
            &self.eps_left_contract().mul(&self.delta_amb),
            &id,
        );
        rep.mat_eq(
            "Eq.10",
            &[1],
            &self.eps_right_contract().mul(&self.delta_amb),
            &id,
        );

        for r in 0..n {
            // eps(sigma(a) h tau(b)) = a eps(h) b
            rep.mat_eq(
                "Coalgebroid/eps-linear",
                &[0, r],
                &self.counit.mul(&self.mats(SigmaLeft)[r]),
                &alg.lmul(r).mul(&self.counit),
            );
            rep.mat_eq(
                "Coalgebroid/eps-linear",
                &[1, r],
                &self.counit.mul(&self.mats(TauRight)[r]),
                &alg.rmul(r).mul(&self.counit),
            );
            // eps(tau(a) h) = eps(h sigma(a))
            rep.mat_eq(
                "Coalgebroid/iii",
                &[r],
                &self.counit.mul(&self.mats(TauLeft)[r]),
                &self.counit.mul(&self.mats(SigmaRight)[r]),
            );
        }

        for r in 0..n {
            // h sigma(a) = sum sigma(eps(h1 sigma(a))) h2
            let rhs = self
                .contract(|s| {
                    (
                        self.eps_row(s).mul(&self.mats(SigmaRight)[r]),
                        self.mats(SigmaLeft)[s].clone(),
                    )
                })
                .mul(&self.delta_amb);
            rep.mat_eq("Eq.11", &[0, r], &self.mats(SigmaRight)[r], &rhs);
            // tau(a) h = sum h1 tau(eps(tau(a) h2))
            let rhs = self
                .contract(|s| {
                    (
                        self.mats(TauRight)[s].clone(),
                        self.eps_row(s).mul(&self.mats(TauLeft)[r]),
                    )
                })
                .mul(&self.delta_amb);
            rep.mat_eq("Eq.11", &[1, r], &self.mats(TauLeft)[r], &rhs);
        }

        for a in 0..n {
            for b in 0..n {
                // eps(tau(a) h sigma(b)) = sum eps(h1 sigma(b)) eps(tau(a) h2)
                let lhs = self
                    .counit
                    .mul(&self.mats(TauLeft)[a])
                    .mul(&self.mats(SigmaRight)[b]);
                let pieces = self
                    .counit
                    .mul(&self.mats(SigmaRight)[b])
                    .kron(&self.counit.mul(&self.mats(TauLeft)[a]));
                let rhs = alg.mult_matrix().mul(&pieces).mul(&self.delta_amb);
                rep.mat_eq("Eq.12", &[a, b], &lhs, &rhs);
            }
        }

        for r in 0..n {
            let lhs = pair.act(0, TauLeft, &alg.basis(r), &self.delta)?;
            let rhs = pair.act(1, SigmaRight, &alg.basis(r), &self.delta)?;
            rep.mat_eq("Eq.13", &[r], &lhs, &rhs);
        }

        self.coassoc(&mut rep)?;
        rep.merge(self.check_anchor());
        Ok(rep)
    }

    /// The anchor intertwines the actions of `L` with those of `End_k(R)`.
    pub fn check_anchor(&self) -> Report {
        let alg = self.algebra();
        let f = self.field();
        let n = alg.dim();
        let eta = self.anchor();
        let i = Mat::identity(f, n);
        let mut rep = Report::new();
        for r in 0..n {
            let end = [
                alg.lmul(r).kron(&i),
                i.kron(&alg.lmul(r).transpose()),
                i.kron(&alg.rmul(r).transpose()),
                alg.rmul(r).kron(&i),
            ];
            for a in Action::ALL {
                rep.mat_eq(
                    "Anchor/morphism",
                    &[a.index(), r],
                    &eta.mul(&self.mats(a)[r]),
                    &end[a.index()].mul(&eta),
                );
            }
        }
        rep
    }
}

fn require_all(c: DoubleBimodule) -> Result<DoubleBimodule> {
    match Action::ALL.into_iter().find(|&a| !c.has(a)) {
        Some(a) => Err(Error::Schema(format!(
            "module lacks {a}, needed for a coalgebroid"
        ))),
        None => Ok(c),
    }
}

/// Whether `mat: src -> dst` is a morphism of coalgebroids.
pub fn check_morphism(src: &Coalgebroid, dst: &Coalgebroid, mat: &Mat) -> Result<Report> {
    let mut rep = Report::new();
    let alg = src.algebra();
    for a in Action::ALL {
        for r in 0..alg.dim() {
            rep.mat_eq(
                "Morphism/actions",
                &[a.index(), r],
                &mat.mul(&src.mats(a)[r]),
                &dst.mats(a)[r].mul(mat),
            );
        }
    }
    rep.mat_eq("Morphism/counit", &[], &dst.counit.mul(mat), &src.counit);
    let pushed = dst.pair.proj_mat(&mat.kron(mat).mul(&src.delta_amb));
    rep.mat_eq("Morphism/coproduct", &[], &dst.delta.mul(mat), &pushed);
    Ok(rep)
}

/// `L [x] K` with its coalgebroid structure, and the tensor space presenting it.
#[derive(Clone, Debug)]
pub struct BoxProduct {
    pub space: TensorSpace,
    pub coalgebroid: Coalgebroid,
}

/// `Delta(h [x] k) = (h1 [x] k1) (x) (h2 [x] k2)`, `eps(h [x] k) = eps(k sigma(eps(h)))`.
pub fn boxtimes(l: &Coalgebroid, k: &Coalgebroid) -> Result<BoxProduct> {
    let space = TensorSpace::boxtimes(&l.carrier, &k.carrier)?;
    let carrier = space.to_module()?;
    let pres = space.presentation();
    let (dl, dk) = (l.dim(), k.dim());
    let f = l.field();

    // ambient L (x) K -> L (x) L (x) K (x) K -> L (x) K (x) L (x) K -> q (x) q
    let t = Tensor::new(vec![dl, dk], Mat::identity(f, dl * dk));
    let t = t
        .apply(0, 1, &l.delta_amb, &[dl, dl])
        .apply(2, 1, &k.delta_amb, &[dk, dk]);
    let t = t.permute(&[0, 2, 1, 3]);
    let q = pres.dim();
    let t = t
        .apply(0, 2, &pres.proj, &[q])
        .apply(1, 2, &pres.proj, &[q]);
    let pair = TensorSpace::tau_sigma(&carrier, &carrier)?;
    let d_out = pair.proj(&Tensor::new(pair.atom_dims().to_vec(), t.into_mat()));
    if !space.kills_relations(&d_out) {
        return Err(Error::IllDefined("coproduct of the box product".into()));
    }
    let delta = space.lift_through(&d_out);

    let mut e_out = Mat::zeros(f, l.algebra().dim(), dl * dk);
    for r in 0..l.algebra().dim() {
        e_out = e_out.add(&l.eps_row(r).kron(&k.counit.mul(&k.mats(SigmaRight)[r])));
    }
    if !space.kills_relations(&e_out) {
        return Err(Error::IllDefined("counit of the box product".into()));
    }
    let counit = space.lift_through(&e_out);
    let coalgebroid = Coalgebroid::new(carrier, delta, counit)?;
    Ok(BoxProduct { space, coalgebroid })
}

/// `L [x] (R (x) R) -> L`, `h [x] (a (x) b) |-> sigma(a) h tau(b)`.
pub fn right_unitor(l: &Coalgebroid) -> Result<(BoxProduct, Mat)> {
    let u = Coalgebroid::unit(l.algebra())?;
    let bp = boxtimes(l, &u)?;
    let n = l.algebra().dim();
    let f = l.field();
    let cols: Vec<Vec<_>> = (0..l.dim() * n * n)
        .map(|c| {
            let (h, a, b) = (c / (n * n), (c / n) % n, c % n);
            l.mats(SigmaLeft)[a].mul(&l.mats(TauRight)[b]).col(h)
        })
        .collect();
    let amb = Mat::from_cols(f, l.dim(), &cols);
    let map = descend_out(&bp.space, &amb)?;
    Ok((bp, map))
}

/// `(R (x) R) [x] L -> L`, `(a (x) b) [x] h |-> tau(b) h sigma(a)`.
pub fn left_unitor(l: &Coalgebroid) -> Result<(BoxProduct, Mat)> {
    let u = Coalgebroid::unit(l.algebra())?;
    let bp = boxtimes(&u, l)?;
    let n = l.algebra().dim();
    let ld = l.dim();
    let f = l.field();
    let cols: Vec<Vec<_>> = (0..n * n * ld)
        .map(|c| {
            let (a, b, h) = (c / (n * ld), (c / ld) % n, c % ld);
            l.mats(TauLeft)[b].mul(&l.mats(SigmaRight)[a]).col(h)
        })
        .collect();
    let amb = Mat::from_cols(f, ld, &cols);
    let map = descend_out(&bp.space, &amb)?;
    Ok((bp, map))
}

fn descend_out(space: &TensorSpace, out: &Mat) -> Result<Mat> {
    if !space.kills_relations(out) {
        return Err(Error::IllDefined("map out of a box product".into()));
    }
    Ok(space.lift_through(out))
}

/// The canonical map `(L [x] K) [x] J -> L [x] (K [x] J)` with both sides.
pub fn associator(
    l: &Coalgebroid,
    k: &Coalgebroid,
    j: &Coalgebroid,
) -> Result<(BoxProduct, BoxProduct, Mat)> {
    let lk = boxtimes(l, k)?;
    let lk_j = boxtimes(&lk.coalgebroid, j)?;
    let kj = boxtimes(k, j)?;
    let l_kj = boxtimes(l, &kj.coalgebroid)?;
    let f = l.field();
    let (dl, dk, dj) = (l.dim(), k.dim(), j.dim());
    let q_lk = lk.space.dim();
    let q_kj = kj.space.dim();
    let p_lk = lk.space.presentation();
    let p_kj = kj.space.presentation();
    // ambient (L [x] K) (x) J -> L (x) K (x) J -> L (x) (K [x] J)
    let t = Tensor::new(vec![q_lk, dj], Mat::identity(f, q_lk * dj));
    let t = t
        .apply(0, 1, &p_lk.sect, &[dl, dk])
        .apply(1, 2, &p_kj.proj, &[q_kj]);
    let out = l_kj.space.proj_mat(t.data());
    let map = descend_out(&lk_j.space, &out)?;
    Ok((lk_j, l_kj, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Bimodule;

    fn kk(f: Field) -> Arc<Algebra> {
        Arc::new(Algebra::product(f, 2))
    }

    #[test]
    fn unit_coalgebroid_passes() {
        let alg = kk(Field::Prime(7));
        let u = Coalgebroid::unit(&alg).unwrap();
        assert_eq!(u.dim(), 4);
        let rep = u.check().unwrap();
        assert!(rep.ok(), "{rep}");
        assert!(rep.passed("Eq.12") && rep.passed("Coalgebroid/coassoc"));
    }

    #[test]
    fn unit_coalgebroid_noncommutative() {
        let alg = Arc::new(Algebra::matrix(Field::Prime(3), 2));
        let rep = Coalgebroid::unit(&alg).unwrap().check().unwrap();
        assert!(rep.ok(), "{rep}");
    }

    #[test]
    fn endo_of_free_module() {
        let f = Field::Rationals;
        let alg = kk(f);
        let m = Bimodule::free(&alg, 1);
        let dual = DualData::left(&m).unwrap();
        let c = Coalgebroid::endo(&dual).unwrap();
        assert_eq!(c.dim(), 4);
        let rep = c.check().unwrap();
        assert!(rep.ok(), "{rep}");
    }

    #[test]
    fn doubled_coproduct_breaks_counity() {
        let alg = kk(Field::Prime(7));
        let u = Coalgebroid::unit(&alg).unwrap();
        let two = Field::Prime(7).from_i64(2);
        let bad = Coalgebroid::new(
            u.carrier().clone(),
            u.delta().scale(&two),
            u.counit().clone(),
        )
        .unwrap();
        let rep = bad.check().unwrap();
        assert!(!rep.passed("Eq.10"));
        assert!(rep.passed("Eq.9"));
    }

    #[test]
    fn anchor_of_unit_is_two_sided_multiplication() {
        // eta(a (x) b)(c) = eps(tau(c)(a (x) b)) = a c b
        let alg = Arc::new(Algebra::truncated_poly(Field::Prime(5), 2));
        let u = Coalgebroid::unit(&alg).unwrap();
        let eta = u.anchor();
        let n = 2;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let acb =
                        alg.mul_vec(&alg.mul_vec(&alg.basis(a), &alg.basis(c)), &alg.basis(b));
                    let got: Vec<_> = (0..n).map(|i| eta.get(i * n + c, a * n + b)).collect();
                    assert_eq!(got, acb);
                }
            }
        }
        assert!(u.check_anchor().ok());
    }

    #[test]
    fn unitors_and_associator_are_isomorphisms() {
        let alg = kk(Field::Prime(7));
        let u = Coalgebroid::unit(&alg).unwrap();
        let (bp, map) = right_unitor(&u).unwrap();
        assert!(bp.coalgebroid.check().unwrap().ok());
        map.invert().unwrap();
        assert!(check_morphism(&bp.coalgebroid, &u, &map).unwrap().ok());
        let (bp, map) = left_unitor(&u).unwrap();
        map.invert().unwrap();
        assert!(check_morphism(&bp.coalgebroid, &u, &map).unwrap().ok());
        let (a, b, map) = associator(&u, &u, &u).unwrap();
        assert_eq!(a.coalgebroid.dim(), 4);
        map.invert().unwrap();
        assert!(check_morphism(&a.coalgebroid, &b.coalgebroid, &map)
            .unwrap()
            .ok());
    }
}
