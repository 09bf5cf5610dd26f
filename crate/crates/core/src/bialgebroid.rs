//! Bialgebroids: coalgebroids `H` with a product `H [x] H -> H` and a unit
//! `R (x)_k R -> H`, and the monoidal structure on their right comodules.
//!
//! The product is kept in ambient form, `dim H x dim H^2`, since that does
//! not depend on a basis of the box product.

use std::sync::Arc;

use crate::coalgebroid::{boxtimes, BoxProduct, Coalgebroid};
use crate::comodule::RightComodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{Action, Bimodule};
use crate::report::Report;
use crate::tensor::{Link, Tensor, TensorSpace};

use Action::*;

#[derive(Clone, Debug)]
pub struct Bialgebroid {
    coalg: Arc<Coalgebroid>,
    boxp: BoxProduct,
    mult_amb: Mat,
    mult: Mat,
    unit_map: Mat,
}

impl Bialgebroid {
    /// `mult_amb` is `dim H x dim H^2` on `H (x)_k H`; `unit_map` is `dim H x n^2`.
    pub fn new(coalg: Arc<Coalgebroid>, mult_amb: Mat, unit_map: Mat) -> Result<Self> {
        let h = coalg.dim();
        let n = coalg.algebra().dim();
        if mult_amb.shape() != (h, h * h) {
            return Err(Error::DimensionMismatch(format!(
                "product has shape {:?}, expected {h}x{}",
                mult_amb.shape(),
                h * h
            )));
        }
        if unit_map.shape() != (h, n * n) {
            return Err(Error::DimensionMismatch(format!(
                "unit has shape {:?}, expected {h}x{}",
                unit_map.shape(),
                n * n
            )));
        }
        let boxp = boxtimes(&coalg, &coalg)?;
        let mult = boxp.space.lift_through(&mult_amb);
        Ok(Bialgebroid {
            coalg,
            boxp,
            mult_amb,
            mult,
            unit_map,
        })
    }

    /// `R (x)_k R` with `(a (x) b)(c (x) d) = ca (x) bd` and identity unit.
    pub fn unit(alg: &Arc<crate::algebra::Algebra>) -> Result<Self> {
        let f = alg.field();
        let n = alg.dim();
        let coalg = Arc::new(Coalgebroid::unit(alg)?);
        let h = n * n;
        let mut mm = Mat::zeros(f, h, h * h);
        for col in 0..h * h {
            let (x, y) = (col / h, col % h);
            let (a, b, c, d) = (x / n, x % n, y / n, y % n);
            let ca = alg.structure(c, a);
            let bd = alg.structure(b, d);
            for i in 0..n {
                for j in 0..n {
                    let v = f.mul(&ca[i], &bd[j]);
                    if !f.is_zero(&v) {
                        mm.set(i * n + j, col, v);
                    }
                }
            }
        }
        Bialgebroid::new(coalg, mm, Mat::identity(f, h))
    }

    /// A bialgebra over the ground field, all four actions trivial.
    /// `mult` is `d x d^2`, `delta` is `d^2 x d`, `counit` is `1 x d`.
    pub fn from_bialgebra(
        field: Field,
        mult: Mat,
        one: &[crate::field::Scalar],
        delta: Mat,
        counit: Mat,
    ) -> Result<Self> {
        let alg = Arc::new(crate::algebra::Algebra::ground(field));
        let d = one.len();
        let id = vec![Mat::identity(field, d)];
        let carrier = crate::module::DoubleBimodule::new(
            alg,
            d,
            [
                Some(id.clone()),
                Some(id.clone()),
                Some(id.clone()),
                Some(id),
            ],
        )?;
        let coalg = Arc::new(Coalgebroid::from_ambient(carrier, &delta, counit)?);
        Bialgebroid::new(coalg, mult, Mat::column_vector(field, one))
    }

    pub fn coalgebroid(&self) -> &Arc<Coalgebroid> {
        &self.coalg
    }

    pub fn field(&self) -> Field {
        self.coalg.field()
    }

    pub fn dim(&self) -> usize {
        self.coalg.dim()
    }

    /// `H [x] H` with its coalgebroid structure.
    pub fn box_square(&self) -> &BoxProduct {
        &self.boxp
    }

    /// Product on `H (x)_k H`.
    pub fn mult_ambient(&self) -> &Mat {
        &self.mult_amb
    }

    /// Product on the quotient `H [x] H`.
    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit_map(&self) -> &Mat {
        &self.unit_map
    }

    fn mats(&self, a: Action) -> &[Mat] {
        self.coalg
            .carrier()
            .mats(a)
            .expect("carrier has every action")
    }

    /// `h o k` for coordinate vectors.
    pub fn product(&self, h: &Mat, k: &Mat) -> Mat {
        self.mult_amb.mul(&h.kron(k))
    }

    /// `u(a (x) b)` for algebra coordinate vectors.
    pub fn unit_of(&self, a: &Mat, b: &Mat) -> Mat {
        self.unit_map.mul(&a.kron(b))
    }

    pub fn one(&self) -> Mat {
        let u = Mat::column_vector(self.field(), self.coalg.algebra().unit());
        self.unit_of(&u, &u)
    }

    /// `s(a) = u(a (x) 1)` as a `dim H x n` matrix.
    pub fn source(&self) -> Mat {
        let f = self.field();
        let u = Mat::column_vector(f, self.coalg.algebra().unit());
        self.unit_map
            .mul(&Mat::identity(f, self.coalg.algebra().dim()).kron(&u))
    }

    /// `t(a) = u(1 (x) a)`.
    pub fn target(&self) -> Mat {
        let f = self.field();
        let u = Mat::column_vector(f, self.coalg.algebra().unit());
        self.unit_map
            .mul(&u.kron(&Mat::identity(f, self.coalg.algebra().dim())))
    }

    /// Left multiplication `k |-> h o k` as a matrix.
    pub fn left_mul(&self, h: &Mat) -> Mat {
        self.mult_amb
            .mul(&h.kron(&Mat::identity(self.field(), self.dim())))
    }

    /// Right multiplication `k |-> k o h`.
    pub fn right_mul(&self, h: &Mat) -> Mat {
        self.mult_amb
            .mul(&Mat::identity(self.field(), self.dim()).kron(h))
    }

    pub fn check(&self) -> Result<Report> {
        let mut rep = self.coalg.check()?;
        rep.merge(self.check_algebra()?);
        Ok(rep)
    }

    /// The bialgebroid identities, assuming the coalgebroid ones.
    pub fn check_algebra(&self) -> Result<Report> {
        let f = self.field();
        let alg = self.coalg.algebra().clone();
        let n = alg.dim();
        let h = self.dim();
        let c = &self.coalg;
        let bx = &self.boxp;
        let mut rep = Report::new();

        if self.boxp.space.kills_relations(&self.mult_amb) {
            rep.pass("Bialgebroid/product-descends");
        } else {
            rep.fail_note(
                "Bialgebroid/product-descends",
                "product does not respect the box relations",
            );
        }

        let pair = c.pair_space();
        let mm_pair = pair.proj_mat(&self.mult.kron(&self.mult));
        let lhs = c.delta().mul(&self.mult);
        let rhs = mm_pair.mul(bx.coalgebroid.delta_ambient());
        rep.mat_eq("Eq.24", &[0], &lhs, &rhs);
        rep.mat_eq(
            "Eq.24",
            &[1],
            &c.counit().mul(&self.mult),
            bx.coalgebroid.counit(),
        );

        let unit_c = Coalgebroid::unit(&alg)?;
        let lhs = c.delta().mul(&self.unit_map);
        let rhs = pair.proj_mat(
            &self
                .unit_map
                .kron(&self.unit_map)
                .mul(unit_c.delta_ambient()),
        );
        rep.mat_eq("Eq.25", &[0], &lhs, &rhs);
        rep.mat_eq(
            "Eq.25",
            &[1],
            &c.counit().mul(&self.unit_map),
            alg.mult_matrix(),
        );

        // associativity through the triple box product
        let carrier = c.carrier();
        let triple = TensorSpace::new(
            vec![carrier.clone(), carrier.clone(), carrier.clone()],
            vec![
                Link::new((0, SigmaLeft), (1, SigmaRight)),
                Link::new((0, TauRight), (1, TauLeft)),
                Link::new((1, SigmaLeft), (2, SigmaRight)),
                Link::new((1, TauRight), (2, TauLeft)),
            ],
            [None, None, None, None],
        )?;
        let k = carrier.atoms().len();
        let basis = triple.sect(&Mat::identity(f, triple.dim()));
        let right_first =
            basis
                .apply(k, 2 * k, &self.mult_amb, &[h])
                .apply(0, k + 1, &self.mult_amb, &[h]);
        let left_first =
            basis
                .apply(0, 2 * k, &self.mult_amb, &[h])
                .apply(0, 1 + k, &self.mult_amb, &[h]);
        rep.mat_eq("Eq.26", &[], left_first.data(), right_first.data());

        let idh = Mat::identity(f, h);
        for a in 0..n {
            for b in 0..n {
                let uab = self.unit_of(&basis_col(f, n, a), &basis_col(f, n, b));
                let lhs = self.mult_amb.mul(&idh.kron(&uab));
                rep.mat_eq(
                    "Eq.27",
                    &[0, a, b],
                    &lhs,
                    &self.mats(SigmaLeft)[a].mul(&self.mats(TauRight)[b]),
                );
                let lhs = self.mult_amb.mul(&uab.kron(&idh));
                rep.mat_eq(
                    "Eq.27",
                    &[1, a, b],
                    &lhs,
                    &self.mats(TauLeft)[b].mul(&self.mats(SigmaRight)[a]),
                );
            }
        }

        let one = self.one();
        rep.mat_eq(
            "Eq.29",
            &[],
            &c.delta().mul(&one),
            &pair.proj_mat(&one.kron(&one)),
        );

        for a in Action::ALL {
            let (fi, fa) = bx.space.exported(a)?;
            for r in 0..n {
                let lhs = self.mult.mul(&bx.space.act_matrix(fi, fa, &alg.basis(r))?);
                rep.mat_eq(
                    "Eq.30",
                    &[a.index(), r],
                    &lhs,
                    &self.mats(a)[r].mul(&self.mult),
                );
            }
        }

        let s = self.source();
        let t = self.target();
        for a in 0..n {
            let sa = s.select_cols(&[a]);
            let ta = t.select_cols(&[a]);
            rep.mat_eq(
                "Eq.31",
                &[0, a],
                &self.left_mul(&sa),
                &self.mats(SigmaRight)[a],
            );
            rep.mat_eq(
                "Eq.31",
                &[1, a],
                &self.right_mul(&sa),
                &self.mats(SigmaLeft)[a],
            );
            rep.mat_eq(
                "Eq.31",
                &[2, a],
                &self.right_mul(&ta),
                &self.mats(TauRight)[a],
            );
            rep.mat_eq(
                "Eq.31",
                &[3, a],
                &self.left_mul(&ta),
                &self.mats(TauLeft)[a],
            );
            for b in 0..n {
                let ab = Mat::column_vector(f, alg.structure(a, b));
                let sb = s.select_cols(&[b]);
                let tb = t.select_cols(&[b]);
                rep.mat_eq(
                    "Bialgebroid/source",
                    &[a, b],
                    &s.mul(&ab),
                    &self.product(&sb, &sa),
                );
                rep.mat_eq(
                    "Bialgebroid/target",
                    &[a, b],
                    &t.mul(&ab),
                    &self.product(&ta, &tb),
                );
            }
        }
        Ok(rep)
    }

    /// `R` with `delta(a) = 1 (x) t(a)`.
    pub fn unit_comodule(&self) -> Result<RightComodule> {
        let alg = self.coalg.algebra();
        let u = Mat::column_vector(self.field(), alg.unit());
        let amb = u.kron(&self.target());
        RightComodule::from_ambient(self.coalg.clone(), &Bimodule::regular(alg), &amb)
    }

    /// `M (x)_R N` with `delta(m (x) n) = m0 (x) n0 (x) m1 o n1`, and the space
    /// presenting the tensor product.
    pub fn tensor(
        &self,
        m: &RightComodule,
        n: &RightComodule,
    ) -> Result<(TensorSpace, RightComodule)> {
        let f = self.field();
        let h = self.dim();
        let (dm, dn) = (m.dim(), n.dim());
        let mn = TensorSpace::new(
            vec![m.module().clone(), n.module().clone()],
            vec![Link::new((0, TauRight), (1, TauLeft))],
            [None, None, Some((0, TauLeft)), Some((1, TauRight))],
        )?;
        let t = Tensor::new(vec![dm, dn], Mat::identity(f, dm * dn));
        let t = t
            .apply(0, 1, m.delta_ambient(), &[dm, h])
            .apply(2, 1, n.delta_ambient(), &[dn, h]);
        let t = t.permute(&[0, 2, 1, 3]).apply(2, 2, &self.mult_amb, &[h]);
        let q = mn.dim();
        let t = t.apply(0, 2, &mn.presentation().proj, &[q]);
        if !mn.kills_relations(t.data()) {
            return Err(Error::IllDefined("coaction on the tensor product".into()));
        }
        let amb = mn.lift_through(t.data());
        let module = mn.to_module()?.pair(crate::module::Pair::Tau);
        let c = RightComodule::from_ambient(self.coalg.clone(), &module, &amb)?;
        Ok((mn, c))
    }
}

fn basis_col(f: Field, n: usize, i: usize) -> Mat {
    Mat::from_fn(f, n, 1, |r, _| if r == i { f.one() } else { f.zero() })
}
