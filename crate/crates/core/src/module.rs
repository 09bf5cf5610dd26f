//! Bimodules and double bimodules presented by action matrices.
//!
//! A left action is a unital homomorphism `R -> End(M)`; a right action is a
//! unital anti-homomorphism, so `act(ab) = act(b) act(a)`. A double bimodule
//! carries two commuting bimodule structures named sigma and tau.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{combine, quotient, Mat};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    SigmaLeft,
    SigmaRight,
    TauLeft,
    TauRight,
}

impl Action {
    pub const ALL: [Action; 4] = [
        Action::SigmaLeft,
        Action::SigmaRight,
        Action::TauLeft,
        Action::TauRight,
    ];

    pub fn is_left(self) -> bool {
        matches!(self, Action::SigmaLeft | Action::TauLeft)
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Action::SigmaLeft => "sigma_left",
            Action::SigmaRight => "sigma_right",
            Action::TauLeft => "tau_left",
            Action::TauRight => "tau_right",
        }
    }

    pub fn parse(s: &str) -> Result<Action> {
        Action::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown action `{s}`")))
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which pair of a double bimodule a plain bimodule is placed into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pair {
    Sigma,
    Tau,
}

impl Pair {
    pub fn left(self) -> Action {
        match self {
            Pair::Sigma => Action::SigmaLeft,
            Pair::Tau => Action::TauLeft,
        }
    }

    pub fn right(self) -> Action {
        match self {
            Pair::Sigma => Action::SigmaRight,
            Pair::Tau => Action::TauRight,
        }
    }
}

fn check_shapes(alg: &Algebra, dim: usize, name: &str, mats: &[Mat]) -> Result<()> {
    if mats.len() != alg.dim() {
        return Err(Error::Schema(format!(
            "{name}: expected {} action matrices, got {}",
            alg.dim(),
            mats.len()
        )));
    }
    if let Some(m) = mats.iter().find(|m| m.shape() != (dim, dim)) {
        return Err(Error::Schema(format!(
            "{name}: action matrix has shape {:?}, expected {dim}x{dim}",
            m.shape()
        )));
    }
    Ok(())
}

/// Homomorphism, unitality and commutation checks for a family of actions.
fn check_actions(alg: &Algebra, dim: usize, acts: &[(&str, bool, &[Mat])]) -> Report {
    let f = alg.field();
    let n = alg.dim();
    let mut rep = Report::new();
    for &(a, is_left, mats) in acts {
        let of = |v: &[Scalar]| combine(f, v, mats);
        let tag_hom = format!("Bimodule/{a}/hom");
        for i in 0..n {
            for j in 0..n {
                let lhs = of(alg.structure(i, j));
                let rhs = if is_left {
                    mats[i].mul(&mats[j])
                } else {
                    mats[j].mul(&mats[i])
                };
                rep.mat_eq(&tag_hom, &[i, j], &lhs, &rhs);
            }
        }
        rep.mat_eq(
            &format!("Bimodule/{a}/unit"),
            &[],
            &of(alg.unit()),
            &Mat::identity(f, dim),
        );
    }
    for (x, &(a, _, ma)) in acts.iter().enumerate() {
        for &(b, _, mb) in &acts[x + 1..] {
            let tag = format!("Bimodule/commute/{a}/{b}");
            for i in 0..n {
                for j in 0..n {
                    rep.mat_eq(&tag, &[i, j], &ma[i].mul(&mb[j]), &mb[j].mul(&ma[i]));
                }
            }
        }
    }
    rep
}

/// A module with four (optional) action families.
///
/// The underlying space may be presented as a tensor product over `k` of
/// smaller atoms with every action living on a single atom (as for
/// `M* (x)_k M`). Tensor spaces use this split to keep quotients local.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleBimodule {
    alg: Arc<Algebra>,
    dim: usize,
    acts: [Option<Vec<Mat>>; 4],
    atoms: Vec<usize>,
    homes: [usize; 4],
    local: [Option<Vec<Mat>>; 4],
}

impl DoubleBimodule {
    pub fn new(alg: Arc<Algebra>, dim: usize, acts: [Option<Vec<Mat>>; 4]) -> Result<Self> {
        for a in Action::ALL {
            if let Some(m) = &acts[a.index()] {
                check_shapes(&alg, dim, a.name(), m)?;
            }
        }
        Ok(DoubleBimodule {
            alg,
            dim,
            local: acts.clone(),
            acts,
            atoms: vec![dim],
            homes: [0; 4],
        })
    }

    /// A module on `atoms[0] (x) ... (x) atoms[k-1]` where each action is
    /// given on one atom and extended by identities.
    pub fn split(
        alg: Arc<Algebra>,
        atoms: Vec<usize>,
        local: [Option<(usize, Vec<Mat>)>; 4],
    ) -> Result<Self> {
        let f = alg.field();
        let dim = atoms.iter().product();
        let mut acts: [Option<Vec<Mat>>; 4] = Default::default();
        let mut homes = [0; 4];
        let mut loc: [Option<Vec<Mat>>; 4] = Default::default();
        for a in Action::ALL {
            let Some((h, mats)) = &local[a.index()] else {
                continue;
            };
            let h = *h;
            if h >= atoms.len() {
                return Err(Error::Schema(format!("{a}: atom {h} out of range")));
            }
            check_shapes(&alg, atoms[h], a.name(), mats)?;
            let pre = Mat::identity(f, atoms[..h].iter().product());
            let post = Mat::identity(f, atoms[h + 1..].iter().product());
            acts[a.index()] = Some(mats.iter().map(|m| pre.kron(m).kron(&post)).collect());
            homes[a.index()] = h;
            loc[a.index()] = Some(mats.clone());
        }
        Ok(DoubleBimodule {
            alg,
            dim,
            acts,
            atoms,
            homes,
            local: loc,
        })
    }

    /// Forget the atom split.
    pub fn unsplit(&self) -> DoubleBimodule {
        DoubleBimodule {
            alg: self.alg.clone(),
            dim: self.dim,
            acts: self.acts.clone(),
            atoms: vec![self.dim],
            homes: [0; 4],
            local: self.acts.clone(),
        }
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    /// The atom carrying action `a`.
    pub fn home(&self, a: Action) -> usize {
        self.homes[a.index()]
    }

    /// Matrices of action `a` on its home atom.
    pub fn local(&self, a: Action) -> Result<&[Mat]> {
        self.local[a.index()]
            .as_deref()
            .ok_or_else(|| Error::InvalidSelector(a.name().to_string()))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has(&self, a: Action) -> bool {
        self.acts[a.index()].is_some()
    }

    pub fn carried(&self) -> Vec<Action> {
        Action::ALL.into_iter().filter(|&a| self.has(a)).collect()
    }

    /// The matrices of action `a` on the basis of `R`.
    pub fn mats(&self, a: Action) -> Result<&[Mat]> {
        self.acts[a.index()]
            .as_deref()
            .ok_or_else(|| Error::InvalidSelector(a.name().to_string()))
    }

    pub fn act(&self, a: Action, i: usize) -> Result<&Mat> {
        Ok(&self.mats(a)?[i])
    }

    pub fn act_of(&self, a: Action, r: &[Scalar]) -> Result<Mat> {
        Ok(combine(self.field(), r, self.mats(a)?))
    }

    pub fn with_action(self, a: Action, mats: Option<Vec<Mat>>) -> Result<Self> {
        if let Some(m) = &mats {
            check_shapes(&self.alg, self.dim, a.name(), m)?;
        }
        let mut out = self.unsplit();
        out.acts[a.index()] = mats.clone();
        out.local[a.index()] = mats;
        Ok(out)
    }

    /// Restrict to one bimodule structure.
    pub fn pair(&self, p: Pair) -> Bimodule {
        Bimodule {
            alg: self.alg.clone(),
            dim: self.dim,
            left: self.acts[p.left().index()].clone(),
            right: self.acts[p.right().index()].clone(),
        }
    }

    pub fn check(&self) -> Report {
        let acts: Vec<(&str, bool, &[Mat])> = Action::ALL
            .into_iter()
            .filter_map(|a| {
                self.acts[a.index()]
                    .as_deref()
                    .map(|m| (a.name(), a.is_left(), m))
            })
            .collect();
        check_actions(&self.alg, self.dim, &acts)
    }

    /// Whether `mat: self -> dst` intertwines every action both modules carry.
    pub fn intertwines(&self, dst: &DoubleBimodule, mat: &Mat) -> bool {
        Action::ALL
            .into_iter()
            .all(|a| match (self.mats(a), dst.mats(a)) {
                (Ok(s), Ok(d)) => s.iter().zip(d).all(|(s, d)| mat.mul(s) == d.mul(mat)),
                _ => true,
            })
    }

    /// Conjugate every action through an isomorphism: `mat` maps `self` to the new basis.
    pub fn transport(&self, mat: &Mat) -> Result<DoubleBimodule> {
        let inv = mat.invert()?;
        let mut acts: [Option<Vec<Mat>>; 4] = Default::default();
        for a in Action::ALL {
            if let Some(ms) = &self.acts[a.index()] {
                acts[a.index()] = Some(ms.iter().map(|m| mat.mul(m).mul(&inv)).collect());
            }
        }
        DoubleBimodule::new(self.alg.clone(), mat.rows(), acts)
    }
}

/// An R-bimodule (either side optional, for one-sided modules).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    alg: Arc<Algebra>,
    dim: usize,
    left: Option<Vec<Mat>>,
    right: Option<Vec<Mat>>,
}

impl Bimodule {
    pub fn new(
        alg: Arc<Algebra>,
        dim: usize,
        left: Option<Vec<Mat>>,
        right: Option<Vec<Mat>>,
    ) -> Result<Self> {
        if let Some(m) = &left {
            check_shapes(&alg, dim, "left action", m)?;
        }
        if let Some(m) = &right {
            check_shapes(&alg, dim, "right action", m)?;
        }
        Ok(Bimodule {
            alg,
            dim,
            left,
            right,
        })
    }

    /// `R` acting on itself by multiplication.
    pub fn regular(alg: &Arc<Algebra>) -> Self {
        let n = alg.dim();
        let left = (0..n).map(|i| alg.lmul(i).clone()).collect();
        let right = (0..n).map(|i| alg.rmul(i).clone()).collect();
        Bimodule {
            alg: alg.clone(),
            dim: n,
            left: Some(left),
            right: Some(right),
        }
    }

    /// `R` with actions twisted by algebra endomorphisms: `r.m.s = alpha(r) m beta(s)`.
    pub fn twisted(alg: &Arc<Algebra>, alpha: &Mat, beta: &Mat) -> Result<Self> {
        if !alg.is_endomorphism(alpha) || !alg.is_endomorphism(beta) {
            return Err(Error::Schema("twist is not an algebra endomorphism".into()));
        }
        let n = alg.dim();
        let left = (0..n).map(|i| alg.lmul_of(&alpha.col(i))).collect();
        let right = (0..n).map(|i| alg.rmul_of(&beta.col(i))).collect();
        Bimodule::new(alg.clone(), n, Some(left), Some(right))
    }

    /// `R^d` with diagonal actions.
    pub fn free(alg: &Arc<Algebra>, d: usize) -> Self {
        let r = Bimodule::regular(alg);
        (1..d).fold(r.clone(), |acc, _| {
            acc.direct_sum(&r).expect("same algebra")
        })
    }

    /// The zero module.
    pub fn zero(alg: &Arc<Algebra>) -> Self {
        let f = alg.field();
        let z: Vec<Mat> = (0..alg.dim()).map(|_| Mat::zeros(f, 0, 0)).collect();
        Bimodule {
            alg: alg.clone(),
            dim: 0,
            left: Some(z.clone()),
            right: Some(z),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> Result<&[Mat]> {
        self.left
            .as_deref()
            .ok_or_else(|| Error::InvalidSelector("left".into()))
    }

    pub fn right(&self) -> Result<&[Mat]> {
        self.right
            .as_deref()
            .ok_or_else(|| Error::InvalidSelector("right".into()))
    }

    pub fn has_left(&self) -> bool {
        self.left.is_some()
    }

    pub fn has_right(&self) -> bool {
        self.right.is_some()
    }

    pub fn left_of(&self, r: &[Scalar]) -> Result<Mat> {
        Ok(combine(self.field(), r, self.left()?))
    }

    pub fn right_of(&self, r: &[Scalar]) -> Result<Mat> {
        Ok(combine(self.field(), r, self.right()?))
    }

    pub fn with_left(mut self, left: Option<Vec<Mat>>) -> Result<Self> {
        if let Some(m) = &left {
            check_shapes(&self.alg, self.dim, "left action", m)?;
        }
        self.left = left;
        Ok(self)
    }

    pub fn with_right(mut self, right: Option<Vec<Mat>>) -> Result<Self> {
        if let Some(m) = &right {
            check_shapes(&self.alg, self.dim, "right action", m)?;
        }
        self.right = right;
        Ok(self)
    }

    /// Embed as one pair of a double bimodule; the other pair is absent.
    pub fn as_double(&self, p: Pair) -> DoubleBimodule {
        let mut acts: [Option<Vec<Mat>>; 4] = Default::default();
        acts[p.left().index()] = self.left.clone();
        acts[p.right().index()] = self.right.clone();
        DoubleBimodule {
            alg: self.alg.clone(),
            dim: self.dim,
            local: acts.clone(),
            acts,
            atoms: vec![self.dim],
            homes: [0; 4],
        }
    }

    pub fn check(&self) -> Report {
        let mut acts: Vec<(&str, bool, &[Mat])> = Vec::new();
        if let Some(l) = &self.left {
            acts.push(("left", true, l));
        }
        if let Some(r) = &self.right {
            acts.push(("right", false, r));
        }
        check_actions(&self.alg, self.dim, &acts)
    }

    pub fn direct_sum(&self, other: &Bimodule) -> Result<Bimodule> {
        if self.alg != other.alg {
            return Err(Error::DimensionMismatch(
                "direct sum over different algebras".into(),
            ));
        }
        let f = self.field();
        let (d1, d2) = (self.dim, other.dim);
        let block = |a: &Mat, b: &Mat| {
            Mat::from_fn(f, d1 + d2, d1 + d2, |i, j| match (i < d1, j < d1) {
                (true, true) => a.get(i, j),
                (false, false) => b.get(i - d1, j - d1),
                _ => f.zero(),
            })
        };
        let sum = |x: &Option<Vec<Mat>>, y: &Option<Vec<Mat>>| match (x, y) {
            (Some(x), Some(y)) => Some(x.iter().zip(y).map(|(a, b)| block(a, b)).collect()),
            _ => None,
        };
        Bimodule::new(
            self.alg.clone(),
            d1 + d2,
            sum(&self.left, &other.left),
            sum(&self.right, &other.right),
        )
    }

    /// Submodule spanned by the columns of `basis` (assumed independent and invariant).
    pub fn submodule(&self, basis: &Mat) -> Result<Bimodule> {
        let linv = basis
            .left_inverse()
            .ok_or_else(|| Error::DimensionMismatch("submodule basis is not independent".into()))?;
        let restrict = |ms: &Option<Vec<Mat>>| -> Result<Option<Vec<Mat>>> {
            let Some(ms) = ms else { return Ok(None) };
            ms.iter()
                .map(|m| {
                    let img = m.mul(basis);
                    let c = linv.mul(&img);
                    if basis.mul(&c) != img {
                        return Err(Error::IllDefined("subspace is not invariant".into()));
                    }
                    Ok(c)
                })
                .collect::<Result<Vec<_>>>()
                .map(Some)
        };
        Bimodule::new(
            self.alg.clone(),
            basis.cols(),
            restrict(&self.left)?,
            restrict(&self.right)?,
        )
    }

    /// Quotient by the row span of `relations` (assumed invariant).
    pub fn quotient_module(&self, relations: &Mat) -> Result<(Bimodule, Mat)> {
        let q = quotient(self.field(), self.dim, relations);
        let w = q.relation_cols();
        let descend = |ms: &Option<Vec<Mat>>| -> Result<Option<Vec<Mat>>> {
            let Some(ms) = ms else { return Ok(None) };
            ms.iter()
                .map(|m| {
                    if !q.proj.mul(&m.mul(&w)).is_zero() {
                        return Err(Error::IllDefined("relations are not invariant".into()));
                    }
                    Ok(q.proj.mul(m).mul(&q.sect))
                })
                .collect::<Result<Vec<_>>>()
                .map(Some)
        };
        let m = Bimodule::new(
            self.alg.clone(),
            q.dim(),
            descend(&self.left)?,
            descend(&self.right)?,
        )?;
        Ok((m, q.proj))
    }

    /// Whether `mat: self -> dst` intertwines both actions (where present on both).
    pub fn intertwines(&self, dst: &Bimodule, mat: &Mat) -> bool {
        let ok = |s: &Option<Vec<Mat>>, d: &Option<Vec<Mat>>| match (s, d) {
            (Some(s), Some(d)) => s.iter().zip(d).all(|(s, d)| mat.mul(s) == d.mul(mat)),
            _ => true,
        };
        ok(&self.left, &dst.left) && ok(&self.right, &dst.right)
    }

    /// Conjugate both actions along an isomorphism onto a new basis.
    pub fn transport(&self, mat: &Mat) -> Result<Bimodule> {
        let d = self.as_double(Pair::Tau).transport(mat)?;
        Ok(d.pair(Pair::Tau))
    }
}

/// A linear map between modules, checked against every shared action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMap {
    pub src: DoubleBimodule,
    pub dst: DoubleBimodule,
    pub mat: Mat,
}

impl BimoduleMap {
    pub fn new(src: DoubleBimodule, dst: DoubleBimodule, mat: Mat) -> Result<Self> {
        if mat.shape() != (dst.dim(), src.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "map of shape {:?} between modules of dims {} and {}",
                mat.shape(),
                src.dim(),
                dst.dim()
            )));
        }
        if !src.intertwines(&dst, &mat) {
            return Err(Error::IllDefined(
                "map does not intertwine the declared actions".into(),
            ));
        }
        Ok(BimoduleMap { src, dst, mat })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kk() -> Arc<Algebra> {
        Arc::new(Algebra::product(Field::Prime(7), 2))
    }

    #[test]
    fn regular_module_passes() {
        let r = kk();
        assert!(Bimodule::regular(&r).check().ok());
        let m2 = Arc::new(Algebra::matrix(Field::Rationals, 2));
        assert!(Bimodule::regular(&m2).check().ok());
        assert!(Bimodule::regular(&m2).as_double(Pair::Tau).check().ok());
    }

    #[test]
    fn zero_left_action_fails_unitality() {
        let r = kk();
        let f = r.field();
        let m = Bimodule::regular(&r)
            .with_left(Some(vec![Mat::zeros(f, 2, 2); 2]))
            .unwrap();
        let rep = m.check();
        assert!(!rep.passed("Bimodule/left/unit"));
    }

    #[test]
    fn swap_twisted_module_passes() {
        let r = kk();
        let f = r.field();
        let swap = Mat::from_i64(f, 2, 2, &[0, 1, 1, 0]);
        let m = Bimodule::twisted(&r, &Mat::identity(f, 2), &swap).unwrap();
        assert!(m.check().ok());
        // left and right actions differ
        assert_ne!(m.left().unwrap()[0], m.right().unwrap()[0]);
    }

    #[test]
    fn missing_action_is_an_invalid_selector() {
        let r = kk();
        let d = Bimodule::regular(&r).as_double(Pair::Tau);
        assert!(matches!(
            d.mats(Action::SigmaLeft),
            Err(Error::InvalidSelector(_))
        ));
        assert!(d.mats(Action::TauRight).is_ok());
    }

    #[test]
    fn sub_and_quotient_of_regular() {
        let r = Arc::new(Algebra::truncated_poly(Field::Prime(5), 2));
        let f = r.field();
        let reg = Bimodule::regular(&r);
        // x R is spanned by e_1
        let sub = reg.submodule(&Mat::from_i64(f, 2, 1, &[0, 1])).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.check().ok());
        let (q, proj) = reg
            .quotient_module(&Mat::from_i64(f, 1, 2, &[0, 1]))
            .unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(proj.shape(), (1, 2));
        // x acts as zero on R / xR
        assert!(q.right().unwrap()[1].is_zero());
    }
}
