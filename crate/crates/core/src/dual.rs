//! Duals of one-sided projective modules, dual bases and evaluation maps.
//!
//! For a right module `M` (action `rho`) the left dual `M* = Hom_R(M, R)` is
//! the solution space of `phi(m r) = phi(m) r`; a functional is stored as an
//! `n x d` matrix flattened row-major (`r * d + j`). For a left module the
//! right dual uses `psi(r m) = r psi(m)`. Dual bases take `m_i = e_i` and
//! solve `sum_i m_i phi^i(m) = m` linearly; an inconsistent system means `M`
//! is not finitely generated projective.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::Bimodule;
use crate::report::Report;
use crate::tensor::{Tensor, TensorSpace};

/// Which dual: `Left` is `M*` of a right module, `Right` is `rM*` of a left module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct DualData {
    side: Side,
    base: Bimodule,
    dual: Bimodule,
    /// dual coordinates -> flattened functionals (`n*d x e`)
    embed: Mat,
    /// left: `M* (x)_k M -> R`; right: `M (x)_k rM* -> R`
    pairing: Mat,
    /// `phi^i` as columns (`e x d`); the `m_i` are the standard basis of `M`
    dual_basis: Mat,
}

/// Solutions `Phi` (as `n x d`) of `Phi A_g = B_g Phi` for all generators.
fn hom_space(alg: &Algebra, d: usize, acts: &[Mat], target: impl Fn(usize) -> Mat) -> Mat {
    let f = alg.field();
    let n = alg.dim();
    let blocks: Vec<Mat> = alg
        .generators()
        .into_iter()
        .map(|g| {
            // vec(Phi A) = (I (x) A^T) vec(Phi), vec(B Phi) = (B (x) I) vec(Phi)
            Mat::identity(f, n)
                .kron(&acts[g].transpose())
                .sub(&target(g).kron(&Mat::identity(f, d)))
        })
        .collect();
    let c = Mat::vstack(f, n * d, &blocks);
    c.kernel_basis().transpose()
}

impl DualData {
    /// Left dual of a module with a right action.
    pub fn left(m: &Bimodule) -> Result<Self> {
        Self::build(m, Side::Left, None::<&mut rand::rngs::ThreadRng>)
    }

    /// Right dual of a module with a left action.
    pub fn right(m: &Bimodule) -> Result<Self> {
        Self::build(m, Side::Right, None::<&mut rand::rngs::ThreadRng>)
    }

    /// Same dual with a randomly chosen alternative dual basis.
    pub fn with_random_basis<G: Rng + ?Sized>(
        m: &Bimodule,
        side: Side,
        rng: &mut G,
    ) -> Result<Self> {
        Self::build(m, side, Some(rng))
    }

    fn build<G: Rng + ?Sized>(m: &Bimodule, side: Side, rng: Option<&mut G>) -> Result<Self> {
        let alg = m.algebra().clone();
        let f = alg.field();
        let n = alg.dim();
        let d = m.dim();
        let (own, other) = match side {
            Side::Left => (m.right()?, m.left().ok()),
            Side::Right => (m.left()?, m.right().ok()),
        };
        let embed = match side {
            Side::Left => hom_space(&alg, d, own, |g| alg.rmul(g).clone()),
            Side::Right => hom_space(&alg, d, own, |g| alg.lmul(g).clone()),
        };
        let e = embed.cols();
        let linv = embed
            .left_inverse()
            .unwrap_or_else(|| Mat::zeros(f, 0, n * d));
        let restrict = |op: Mat| linv.mul(&op).mul(&embed);
        // native action of the dual comes from R acting on values
        let native: Vec<Mat> = (0..n)
            .map(|r| {
                let on_values = match side {
                    Side::Left => alg.lmul(r).clone(),
                    Side::Right => alg.rmul(r).clone(),
                };
                restrict(on_values.kron(&Mat::identity(f, d)))
            })
            .collect();
        // the other action of M induces one on the dual by precomposition
        let induced: Option<Vec<Mat>> = other.map(|acts| {
            (0..n)
                .map(|r| restrict(Mat::identity(f, n).kron(&acts[r].transpose())))
                .collect()
        });
        let dual = match side {
            Side::Left => Bimodule::new(alg.clone(), e, Some(native), induced)?,
            Side::Right => Bimodule::new(alg.clone(), e, induced, Some(native))?,
        };

        // sum_i act(phi^i(e_j)) e_i = e_j, unknowns c[i*e + t]
        let mut sys = Mat::zeros(f, d * d, d * e);
        for j in 0..d {
            for l in 0..d {
                for i in 0..d {
                    for t in 0..e {
                        let mut acc = f.zero();
                        for r in 0..n {
                            let c = embed.get(r * d + j, t);
                            if !f.is_zero(&c) {
                                acc = f.add(&acc, &f.mul(&c, &own[r].get(l, i)));
                            }
                        }
                        sys.set(j * d + l, i * e + t, acc);
                    }
                }
            }
        }
        let mut rhs = vec![f.zero(); d * d];
        for j in 0..d {
            rhs[j * d + j] = f.one();
        }
        let mut sol = sys.solve(&rhs)?.ok_or_else(|| {
            Error::NotProjective(format!(
                "dual-basis system has no solution for a {d}-dimensional module"
            ))
        })?;
        if let Some(rng) = rng {
            let ker = sys.kernel_basis();
            for k in 0..ker.rows() {
                let c = f.random(rng);
                for (x, y) in sol.iter_mut().zip(ker.row(k)) {
                    *x = f.add(x, &f.mul(&c, &y));
                }
            }
        }
        let dual_basis = Mat::from_fn(f, e, d, |t, i| sol[i * e + t].clone());
        // ev(phi_t, e_j) = column j of Phi_t
        let pairing = match side {
            Side::Left => Mat::from_fn(f, n, e * d, |r, c| embed.get(r * d + c % d, c / d)),
            Side::Right => Mat::from_fn(f, n, d * e, |r, c| embed.get(r * d + c / e, c % e)),
        };
        Ok(DualData {
            side,
            base: m.clone(),
            dual,
            embed,
            pairing,
            dual_basis,
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn base(&self) -> &Bimodule {
        &self.base
    }

    pub fn dual(&self) -> &Bimodule {
        &self.dual
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.base.algebra()
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// `ev_{k,M}` as an `n x (e*d)` (left) or `n x (d*e)` (right) matrix.
    pub fn pairing(&self) -> &Mat {
        &self.pairing
    }

    /// `phi^i` as columns.
    pub fn dual_basis(&self) -> &Mat {
        &self.dual_basis
    }

    /// Flattened functionals of the dual basis of the dual space.
    pub fn embedding(&self) -> &Mat {
        &self.embed
    }

    /// Dual coordinates of flattened functionals (columns, `n*d` rows), or
    /// `None` if some column is not `R`-linear.
    pub fn coords(&self, flat: &Mat) -> Option<Mat> {
        self.embed.solve_matrix(flat).ok().flatten()
    }

    /// The value `phi(m)` in `R` for dual coordinates `phi`.
    pub fn eval(
        &self,
        phi: &[crate::field::Scalar],
        m: &[crate::field::Scalar],
    ) -> Vec<crate::field::Scalar> {
        let (d, e) = (self.base.dim(), self.dual.dim());
        let f = self.field();
        let pm = match self.side {
            Side::Left => Mat::column_vector(f, phi).kron(&Mat::column_vector(f, m)),
            Side::Right => Mat::column_vector(f, m).kron(&Mat::column_vector(f, phi)),
        };
        debug_assert_eq!(pm.rows(), d * e);
        self.pairing.mul(&pm).col(0)
    }

    /// `M (x)_R M*` (left) or `rM* (x)_R M` (right): the home of `db`.
    pub fn db_space(&self) -> Result<TensorSpace> {
        match self.side {
            Side::Left => TensorSpace::bimodules(&self.base, &self.dual),
            Side::Right => TensorSpace::bimodules(&self.dual, &self.base),
        }
    }

    /// `db(1) = sum_i m_i (x) phi^i` as an ambient vector.
    pub fn db_ambient(&self) -> Mat {
        let f = self.field();
        let (d, e) = (self.base.dim(), self.dual.dim());
        let mut acc = Mat::zeros(f, d * e, 1);
        for i in 0..d {
            let mi = Mat::column_vector(f, &Mat::identity(f, d).col(i));
            let phi = Mat::column_vector(f, &self.dual_basis.col(i));
            let term = match self.side {
                Side::Left => mi.kron(&phi),
                Side::Right => phi.kron(&mi),
            };
            acc = acc.add(&term);
        }
        acc
    }

    /// Verify the dual-basis identities, zigzags and (for bimodules) the
    /// balanced versions of `ev` and `db`.
    pub fn check(&self) -> Result<Report> {
        let sfx = match self.side {
            Side::Left => "",
            Side::Right => "r",
        };
        let tag = |t: &str| format!("Eq.{t}{sfx}");
        let f = self.field();
        let alg = self.algebra().clone();
        let n = alg.dim();
        let (d, e) = (self.base.dim(), self.dual.dim());
        let mut rep = Report::new();
        let own = match self.side {
            Side::Left => self.base.right()?,
            Side::Right => self.base.left()?,
        };
        // m = sum_i m_i phi^i(m)
        for j in 0..d {
            let m = Mat::identity(f, d).col(j);
            let mut acc = vec![f.zero(); d];
            for i in 0..d {
                let v = self.eval(&self.dual_basis.col(i), &m);
                let mi = crate::linalg::combine(f, &v, own).col(i);
                acc = acc.iter().zip(&mi).map(|(a, b)| f.add(a, b)).collect();
            }
            rep.vec_eq(&tag("1.6"), &[j], &acc, &m, f);
        }
        // zigzags computed through the tensor quotients
        rep.merge(self.zigzags(&tag("1.9"), false)?);
        if self.base.has_left() && self.base.has_right() {
            // sum r m_i (x) phi^i = sum m_i (x) phi^i r in the db space
            let space = self.db_space()?;
            let db = self.db_ambient();
            let (lm, rm) = match self.side {
                Side::Left => (self.base.left()?, self.dual.right()?),
                Side::Right => (self.dual.left()?, self.base.right()?),
            };
            for r in 0..n {
                let (lhs, rhs) = match self.side {
                    Side::Left => (
                        lm[r].kron(&Mat::identity(f, e)).mul(&db),
                        Mat::identity(f, d).kron(&rm[r]).mul(&db),
                    ),
                    Side::Right => (
                        lm[r].kron(&Mat::identity(f, d)).mul(&db),
                        Mat::identity(f, e).kron(&rm[r]).mul(&db),
                    ),
                };
                rep.mat_eq(
                    &tag("1.10"),
                    &[r],
                    &space.proj_mat(&lhs),
                    &space.proj_mat(&rhs),
                );
            }
            rep.merge(self.zigzags(&tag("1.11"), true)?);
        }
        Ok(rep)
    }

    /// Both zigzag composites; `balanced` uses `(x)_R` on both sides.
    fn zigzags(&self, tag: &str, balanced: bool) -> Result<Report> {
        use crate::module::Action::{SigmaLeft as L, SigmaRight as R};
        use crate::module::Pair;
        use crate::tensor::Link;
        let f = self.field();
        let n = self.algebra().dim();
        let (d, e) = (self.base.dim(), self.dual.dim());
        let m = self.base.as_double(Pair::Sigma);
        let ms = self.dual.as_double(Pair::Sigma);
        let db = self.db_ambient();
        let ev_row = |r: usize| self.pairing.select_rows(&[r]);
        // factors x0 (x) x1 (x) x2 with the db link on `db_at` and, when
        // balanced, the evaluation link on the other pair
        let space = |fs: [&crate::module::DoubleBimodule; 3], db_at: usize| {
            let mut links = vec![Link::new((db_at, R), (db_at + 1, L))];
            if balanced {
                links.push(Link::new((1 - db_at, R), (2 - db_at, L)));
            }
            links.sort_by_key(|l| l.left.0);
            TensorSpace::new(fs.into_iter().cloned().collect(), links, Default::default())
        };
        let contract = |rows: usize, cols: usize, term: &dyn Fn(usize) -> Mat| {
            (0..n).fold(Mat::zeros(f, rows, cols), |acc, r| acc.add(&term(r)))
        };
        let mut rep = Report::new();
        let (dual_tag, base_tag) = (format!("{tag}/dual"), format!("{tag}/base"));
        match self.side {
            Side::Left => {
                let dl = self.dual.left()?;
                let br = self.base.right()?;
                // M* -> M* (x) M (x)_R M* -> M*
                let t = space([&ms, &m, &ms], 1)?;
                let into = Mat::identity(f, e).kron(&db);
                let out = contract(e, e * d * e, &|r| ev_row(r).kron(&dl[r]));
                rep.merge(self.zigzag_one(&dual_tag, &t, &into, &out, e));
                // M -> M (x)_R M* (x) M -> M
                let t = space([&m, &ms, &m], 0)?;
                let into = db.kron(&Mat::identity(f, d));
                let out = contract(d, d * e * d, &|r| br[r].kron(&ev_row(r)));
                rep.merge(self.zigzag_one(&base_tag, &t, &into, &out, d));
            }
            Side::Right => {
                let dr = self.dual.right()?;
                let bl = self.base.left()?;
                // rM* -> rM* (x)_R M (x) rM* -> rM*
                let t = space([&ms, &m, &ms], 0)?;
                let into = db.kron(&Mat::identity(f, e));
                let out = contract(e, e * d * e, &|r| dr[r].kron(&ev_row(r)));
                rep.merge(self.zigzag_one(&dual_tag, &t, &into, &out, e));
                // M -> M (x) rM* (x)_R M -> M
                let t = space([&m, &ms, &m], 1)?;
                let into = Mat::identity(f, d).kron(&db);
                let out = contract(d, d * e * d, &|r| ev_row(r).kron(&bl[r]));
                rep.merge(self.zigzag_one(&base_tag, &t, &into, &out, d));
            }
        }
        Ok(rep)
    }

    /// Check that `out` descends from the triple quotient and that
    /// `out . into` is the identity after passing through the quotient.
    fn zigzag_one(&self, tag: &str, t: &TensorSpace, into: &Mat, out: &Mat, dim: usize) -> Report {
        let mut rep = Report::new();
        if !t.kills_relations(out) {
            rep.fail_note(tag, "contraction does not descend to the tensor product");
            return rep;
        }
        let q = t.proj(&Tensor::new(t.atom_dims().to_vec(), into.clone()));
        let lhs = out.mul(&t.sect_mat(&q));
        rep.mat_eq(tag, &[], &lhs, &Mat::identity(self.field(), dim));
        rep
    }

    /// The canonical map `M -> r(M*)`, `m |-> (phi |-> phi(m))`, for a left
    /// dual `self` and the right dual `rr` of `self.dual()`.
    pub fn canonical_to_double_dual(&self, rr: &DualData) -> Result<Mat> {
        if self.side != Side::Left || rr.side != Side::Right || rr.base != self.dual {
            return Err(Error::DimensionMismatch(
                "expected M* and the right dual of M*".into(),
            ));
        }
        let f = self.field();
        let n = self.algebra().dim();
        let (d, e) = (self.base.dim(), self.dual.dim());
        let linv = rr.embed.left_inverse().ok_or(Error::Singular)?;
        // functional on M*: Psi[r][t] = phi_t(m)_r
        let flat = Mat::from_fn(f, n * e, d, |row, j| {
            self.embed.get((row / e) * d + j, row % e)
        });
        Ok(linv.mul(&flat))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn free_module_over_ground_field() {
        let f = Field::Prime(7);
        let k = Arc::new(Algebra::ground(f));
        let m = Bimodule::free(&k, 2);
        let dd = DualData::left(&m).unwrap();
        assert_eq!(dd.dual().dim(), 2);
        // ev(phi^i (x) m_j) = delta_ij
        for i in 0..2 {
            for j in 0..2 {
                let v = dd.eval(&dd.dual_basis().col(i), &Mat::identity(f, 2).col(j));
                assert_eq!(v, vec![if i == j { f.one() } else { f.zero() }]);
            }
        }
        assert!(dd.check().unwrap().ok());
    }

    #[test]
    fn idempotent_summand_has_one_pair() {
        let f = Field::Prime(7);
        let r = Arc::new(Algebra::product(f, 2));
        let m = Bimodule::regular(&r)
            .submodule(&Mat::from_i64(f, 2, 1, &[1, 0]))
            .unwrap();
        let dd = DualData::left(&m).unwrap();
        assert_eq!(dd.dual().dim(), 1);
        assert_eq!(dd.dual_basis().cols(), 1);
        assert!(dd.check().unwrap().ok());
    }

    #[test]
    fn simple_module_over_dual_numbers_is_not_projective() {
        let f = Field::Prime(5);
        let r = Arc::new(Algebra::truncated_poly(f, 2));
        let (q, _) = Bimodule::regular(&r)
            .quotient_module(&Mat::from_i64(f, 1, 2, &[0, 1]))
            .unwrap();
        assert!(matches!(DualData::left(&q), Err(Error::NotProjective(_))));
        assert!(matches!(DualData::right(&q), Err(Error::NotProjective(_))));
    }

    #[test]
    fn regular_and_twisted_pass_everything() {
        let f = Field::Prime(7);
        let r = Arc::new(Algebra::product(f, 2));
        let swap = Mat::from_i64(f, 2, 2, &[0, 1, 1, 0]);
        for m in [
            Bimodule::regular(&r),
            Bimodule::twisted(&r, &Mat::identity(f, 2), &swap).unwrap(),
        ] {
            for side in [Side::Left, Side::Right] {
                let dd = DualData::build(&m, side, None::<&mut rand::rngs::ThreadRng>).unwrap();
                let rep = dd.check().unwrap();
                assert!(rep.ok(), "{side:?}\n{rep}");
                assert!(rep
                    .get(&format!(
                        "Eq.1.11{}/base",
                        if side == Side::Left { "" } else { "r" }
                    ))
                    .is_some());
            }
        }
    }

    #[test]
    fn matrix_algebra_regular_and_random_basis() {
        let f = Field::Prime(3);
        let r = Arc::new(Algebra::matrix(f, 2));
        let m = Bimodule::regular(&r);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let dd = DualData::with_random_basis(&m, Side::Left, &mut rng).unwrap();
        assert_eq!(dd.dual().dim(), 4);
        assert!(dd.check().unwrap().ok());
    }

    #[test]
    fn double_dual_is_canonically_isomorphic() {
        let f = Field::Prime(7);
        let r = Arc::new(Algebra::product(f, 2));
        let m = Bimodule::free(&r, 2);
        let ld = DualData::left(&m).unwrap();
        let rr = DualData::right(ld.dual()).unwrap();
        let iso = ld.canonical_to_double_dual(&rr).unwrap();
        assert!(iso.invert().is_ok());
        assert!(m.intertwines(rr.dual(), &iso));
    }
}
