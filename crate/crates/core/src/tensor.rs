//! Tensor products over `R` realised as quotients of tensor products over `k`.
//!
//! A [`TensorSpace`] is built from factors (double bimodules) and links; a
//! link `(i, A) ~ (j, B)` imposes `A(r)x (x) y = x (x) B(r)y` on factors `i`
//! and `j` for every `r` in `R`. Factors may be split into atoms (see
//! [`DoubleBimodule::split`]); the link graph on atoms falls into connected
//! components, the quotient is the tensor product over `k` of one quotient per
//! component, and each component quotient is built one atom at a time. This
//! keeps triple products of coalgebroids of the form `M* (x)_k M` small.
//!
//! Quotient coordinates are ordered component by component (components
//! sorted by their first atom); ambient coordinates follow the atoms in
//! factor order, first factor major.

use std::ops::Range;
use std::sync::{Arc, OnceLock};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{combine, quotient, Mat, QuotientPresentation};
use crate::module::{Action, Bimodule, DoubleBimodule, Pair};

/// Column vectors of a tensor product of spaces of dimensions `dims`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dims: Vec<usize>,
    data: Mat,
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

impl Tensor {
    pub fn new(dims: Vec<usize>, data: Mat) -> Self {
        assert_eq!(
            dims.iter().product::<usize>(),
            data.rows(),
            "tensor dims do not match rows"
        );
        Tensor { dims, data }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn data(&self) -> &Mat {
        &self.data
    }

    pub fn into_mat(self) -> Mat {
        self.data
    }

    /// Replace modes `start..start + count` by the output of `map`, split as `out_dims`.
    pub fn apply(&self, start: usize, count: usize, map: &Mat, out_dims: &[usize]) -> Tensor {
        let pre: usize = self.dims[..start].iter().product();
        let post: usize = self.dims[start + count..].iter().product();
        assert_eq!(
            out_dims.iter().product::<usize>(),
            map.rows(),
            "map output dims"
        );
        let data = map.mode_apply(&self.data, pre, post);
        let mut dims = self.dims[..start].to_vec();
        dims.extend_from_slice(out_dims);
        dims.extend_from_slice(&self.dims[start + count..]);
        Tensor { dims, data }
    }

    /// Reorder modes: new mode `k` is old mode `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len());
        if perm.iter().enumerate().all(|(k, &p)| k == p) {
            return self.clone();
        }
        let old = strides(&self.dims);
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let total = self.data.rows();
        let mut idx = Vec::with_capacity(total);
        let mut digits = vec![0usize; dims.len()];
        for _ in 0..total {
            idx.push(digits.iter().zip(perm).map(|(&d, &p)| d * old[p]).sum());
            for k in (0..dims.len()).rev() {
                digits[k] += 1;
                if digits[k] < dims[k] {
                    break;
                }
                digits[k] = 0;
            }
        }
        Tensor {
            dims,
            data: self.data.select_rows(&idx),
        }
    }
}

/// `A(r)` on factor `left.0` is identified with `B(r)` on factor `right.0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Link {
    pub left: (usize, Action),
    pub right: (usize, Action),
}

impl Link {
    pub fn new(left: (usize, Action), right: (usize, Action)) -> Self {
        Link { left, right }
    }
}

/// Where each action of the quotient comes from: `(factor, action)`.
pub type Export = [Option<(usize, Action)>; 4];

#[derive(Clone, Debug)]
struct Component {
    atoms: Vec<usize>,
    proj: Mat,
    sect: Mat,
    /// rows span the relations in the component's own ambient space
    relations: Mat,
}

impl Component {
    fn dim(&self) -> usize {
        self.proj.rows()
    }
}

/// Per action: the component carrying it and its matrices there.
type Residual = [Option<(usize, Vec<Mat>)>; 4];

/// A quotient of `F_0 (x)_k ... (x)_k F_{m-1}` by link relations, with the
/// induced actions of every factor that descend.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    alg: Arc<Algebra>,
    factors: Vec<DoubleBimodule>,
    links: Vec<Link>,
    export: Export,
    atom_dims: Vec<usize>,
    factor_start: Vec<usize>,
    comps: Vec<Component>,
    atom_comp: Vec<usize>,
    /// per factor and action: the component and the induced matrices
    residual: Vec<Residual>,
    presentation: OnceLock<QuotientPresentation>,
}

/// An operator of one atom step: `I_pre (x) m (x) I_post` for each `m`.
#[derive(Clone)]
struct Ext {
    mats: Vec<Mat>,
    pre: usize,
    post: usize,
}

impl Ext {
    fn apply(&self, m: &Mat, x: &Mat) -> Mat {
        m.mode_apply(x, self.pre, self.post)
    }

    fn dense(&self, field: Field, r: &[Scalar]) -> Mat {
        let m = combine(field, r, &self.mats);
        Mat::identity(field, self.pre)
            .kron(&m)
            .kron(&Mat::identity(field, self.post))
    }
}

/// Algebra elements used to generate link relations.
fn relation_elements(alg: &Algebra) -> Vec<Vec<Scalar>> {
    alg.generators().into_iter().map(|g| alg.basis(g)).collect()
}

/// Drop export entries whose source action is not carried.
fn available(factors: [&DoubleBimodule; 2], export: Export) -> Export {
    export.map(|e| e.filter(|&(fi, a)| factors[fi].has(a)))
}

impl TensorSpace {
    pub fn new(factors: Vec<DoubleBimodule>, links: Vec<Link>, export: Export) -> Result<Self> {
        let alg = factors
            .first()
            .ok_or_else(|| Error::DimensionMismatch("tensor space needs a factor".into()))?
            .algebra()
            .clone();
        if factors.iter().any(|f| **f.algebra() != *alg) {
            return Err(Error::DimensionMismatch(
                "factors over different algebras".into(),
            ));
        }
        let field = alg.field();
        let nf = factors.len();
        let mut atom_dims = Vec::new();
        let mut factor_start = Vec::new();
        for f in &factors {
            factor_start.push(atom_dims.len());
            atom_dims.extend_from_slice(f.atoms());
        }
        let home = |(fi, a): (usize, Action)| -> Result<usize> {
            let f = factors
                .get(fi)
                .ok_or_else(|| Error::InvalidSelector(format!("factor {fi} out of range")))?;
            f.local(a)?;
            Ok(factor_start[fi] + f.home(a))
        };
        for l in &links {
            home(l.left)?;
            home(l.right)?;
        }
        for (a, src) in export.iter().enumerate() {
            if let Some(s) = src {
                home(*s).map_err(|_| {
                    Error::InvalidSelector(format!(
                        "exported {} from missing {}",
                        Action::ALL[a],
                        s.1
                    ))
                })?;
            }
        }

        // connected components of the atom graph, numbered by first atom
        let na = atom_dims.len();
        let mut parent: Vec<usize> = (0..na).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for l in &links {
            let (a, b) = (
                find(&mut parent, home(l.left)?),
                find(&mut parent, home(l.right)?),
            );
            parent[a.max(b)] = a.min(b);
        }
        let mut atom_comp = vec![usize::MAX; na];
        let mut comp_atoms: Vec<Vec<usize>> = Vec::new();
        for x in 0..na {
            let r = find(&mut parent, x);
            if atom_comp[r] == usize::MAX {
                atom_comp[r] = comp_atoms.len();
                comp_atoms.push(Vec::new());
            }
            atom_comp[x] = atom_comp[r];
            comp_atoms[atom_comp[x]].push(x);
        }

        let elems = relation_elements(&alg);
        let mut comps = Vec::new();
        let mut residual: Vec<Residual> = (0..nf).map(|_| Default::default()).collect();
        for (ci, atoms) in comp_atoms.iter().enumerate() {
            // (factor, action) pairs living in this component
            let members: Vec<(usize, Action)> = (0..nf)
                .flat_map(|fi| Action::ALL.into_iter().map(move |a| (fi, a)))
                .filter(|&(fi, a)| {
                    factors[fi].local(a).is_ok() && atom_comp[home((fi, a)).unwrap()] == ci
                })
                .collect();
            // ops act on the current partial quotient of dimension q
            let mut ops: Vec<Option<Vec<Mat>>> = vec![None; members.len()];
            let mut live = vec![false; members.len()];
            let mut proj = Mat::identity(field, 1);
            let mut sect = Mat::identity(field, 1);
            let mut q = 1;
            for &atom in atoms {
                let d = atom_dims[atom];
                // extend existing ops by `(x) I_d`, start new ones as `I_q (x) local`
                let mut ext: Vec<Option<Ext>> = vec![None; members.len()];
                for (k, &(fi, a)) in members.iter().enumerate() {
                    if live[k] {
                        ext[k] = ops[k].take().map(|ms| Ext {
                            mats: ms,
                            pre: 1,
                            post: d,
                        });
                    } else if home((fi, a))? == atom {
                        ext[k] = Some(Ext {
                            mats: factors[fi].local(a)?.to_vec(),
                            pre: q,
                            post: 1,
                        });
                        live[k] = true;
                    }
                }
                let amb = q * d;
                let mut rel_blocks = Vec::new();
                for l in &links {
                    let (ha, hb) = (home(l.left)?, home(l.right)?);
                    // a link applies once both of its atoms are present
                    if atom_comp[ha] != ci || ha.max(hb) != atom {
                        continue;
                    }
                    let lookup = |end: (usize, Action)| -> Result<&Ext> {
                        let k = members.iter().position(|&m| m == end).unwrap();
                        ext[k].as_ref().ok_or_else(|| {
                            Error::IllDefined(format!(
                                "action {} of factor {} does not descend",
                                end.1, end.0
                            ))
                        })
                    };
                    let (xa, xb) = (lookup(l.left)?, lookup(l.right)?);
                    for r in &elems {
                        let diff = xa.dense(field, r).sub(&xb.dense(field, r));
                        rel_blocks.push(diff.transpose());
                    }
                }
                let rel = Mat::vstack(field, amb, &rel_blocks);
                let qp = quotient(field, amb, &rel);
                let w = qp.relation_cols();
                // descend every live op through this step
                for k in 0..members.len() {
                    if let Some(e) = ext[k].take() {
                        let ok = e
                            .mats
                            .iter()
                            .all(|m| qp.proj.mul(&e.apply(m, &w)).is_zero());
                        ops[k] = ok.then(|| {
                            e.mats
                                .iter()
                                .map(|m| qp.proj.mul(&e.apply(m, &qp.sect)))
                                .collect()
                        });
                    }
                }
                // proj <- qp.proj (proj (x) I_d), sect <- (sect (x) I_d) qp.sect
                proj = proj
                    .transpose()
                    .mode_apply(&qp.proj.transpose(), 1, d)
                    .transpose();
                sect = sect.mode_apply(&qp.sect, 1, d);
                q = qp.dim();
            }
            for (k, &(fi, a)) in members.iter().enumerate() {
                if let Some(ms) = ops[k].take() {
                    residual[fi][a.index()] = Some((ci, ms));
                }
            }
            let relations = proj.kernel_basis();
            comps.push(Component {
                atoms: atoms.clone(),
                proj,
                sect,
                relations,
            });
        }
        for (a, src) in export.iter().enumerate() {
            if let Some((fi, sa)) = src {
                if residual[*fi][sa.index()].is_none() {
                    return Err(Error::IllDefined(format!(
                        "induced {} from factor {fi} does not preserve the relations",
                        Action::ALL[a]
                    )));
                }
            }
        }
        Ok(TensorSpace {
            alg,
            factors,
            links,
            export,
            atom_dims,
            factor_start,
            comps,
            atom_comp,
            residual,
            presentation: OnceLock::new(),
        })
    }

    /// `M _tau(x)^sigma N`: `m tau(r) (x) n = m (x) sigma(r) n`.
    pub fn tau_sigma(m: &DoubleBimodule, n: &DoubleBimodule) -> Result<Self> {
        use Action::*;
        TensorSpace::new(
            vec![m.clone(), n.clone()],
            vec![Link::new((0, TauRight), (1, SigmaLeft))],
            available(
                [m, n],
                [
                    Some((0, SigmaLeft)),
                    Some((0, SigmaRight)),
                    Some((1, TauLeft)),
                    Some((1, TauRight)),
                ],
            ),
        )
    }

    /// `L [x] K`: `sigma(a) h tau(b) [x] k = h [x] tau(b) k sigma(a)`.
    pub fn boxtimes(l: &DoubleBimodule, k: &DoubleBimodule) -> Result<Self> {
        use Action::*;
        TensorSpace::new(
            vec![l.clone(), k.clone()],
            vec![
                Link::new((0, SigmaLeft), (1, SigmaRight)),
                Link::new((0, TauRight), (1, TauLeft)),
            ],
            available(
                [l, k],
                [
                    Some((1, SigmaLeft)),
                    Some((0, SigmaRight)),
                    Some((0, TauLeft)),
                    Some((1, TauRight)),
                ],
            ),
        )
    }

    /// `H ^sigma(x)_sigma K`: `sigma(r) h (x) k = h (x) k sigma(r)`.
    pub fn sigma_sigma(h: &DoubleBimodule, k: &DoubleBimodule) -> Result<Self> {
        use Action::*;
        TensorSpace::new(
            vec![h.clone(), k.clone()],
            vec![Link::new((0, SigmaLeft), (1, SigmaRight))],
            available(
                [h, k],
                [
                    Some((1, SigmaLeft)),
                    Some((0, SigmaRight)),
                    Some((0, TauLeft)),
                    Some((1, TauRight)),
                ],
            ),
        )
    }

    /// `H _tau(x)^tau K`: `h tau(r) (x) k = h (x) tau(r) k`.
    pub fn tau_tau(h: &DoubleBimodule, k: &DoubleBimodule) -> Result<Self> {
        use Action::*;
        TensorSpace::new(
            vec![h.clone(), k.clone()],
            vec![Link::new((0, TauRight), (1, TauLeft))],
            available(
                [h, k],
                [
                    Some((0, SigmaLeft)),
                    Some((1, SigmaRight)),
                    Some((0, TauLeft)),
                    Some((1, TauRight)),
                ],
            ),
        )
    }

    /// Tensor product along arbitrary selectors. The induced actions follow
    /// the fixed tables for the named products; otherwise a family touched
    /// on one side only comes from the other factor, a family touched on
    /// both sides comes action by action from the untouched side, and an
    /// untouched family takes its left action from the first factor and its
    /// right action from the second.
    pub fn over_r(
        m: &DoubleBimodule,
        sel_m: Action,
        n: &DoubleBimodule,
        sel_n: Action,
    ) -> Result<Self> {
        m.local(sel_m)?;
        n.local(sel_n)?;
        let used = [sel_m, sel_n];
        let family = |a: Action| matches!(a, Action::SigmaLeft | Action::SigmaRight);
        let mut export: Export = Default::default();
        for a in Action::ALL {
            let touched: Vec<usize> = (0..2).filter(|&i| family(used[i]) == family(a)).collect();
            let src = match touched.as_slice() {
                [] => Some(if a.is_left() { 0 } else { 1 }),
                [i] => Some(1 - i),
                _ => (0..2).find(|&i| used[i] != a),
            };
            export[a.index()] = src.filter(|&i| [m, n][i].local(a).is_ok()).map(|i| (i, a));
        }
        TensorSpace::new(
            vec![m.clone(), n.clone()],
            vec![Link::new((0, sel_m), (1, sel_n))],
            export,
        )
    }

    /// `M (x)_R N` of plain bimodules (right action of `M`, left action of `N`).
    pub fn bimodules(m: &Bimodule, n: &Bimodule) -> Result<Self> {
        TensorSpace::over_r(
            &m.as_double(Pair::Sigma),
            Action::SigmaRight,
            &n.as_double(Pair::Sigma),
            Action::SigmaLeft,
        )
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn factors(&self) -> &[DoubleBimodule] {
        &self.factors
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.comps.iter().map(Component::dim).product()
    }

    pub fn ambient_dim(&self) -> usize {
        self.atom_dims.iter().product()
    }

    pub fn atom_dims(&self) -> &[usize] {
        &self.atom_dims
    }

    /// Atoms (ambient modes) belonging to factor `i`.
    pub fn factor_atoms(&self, i: usize) -> Range<usize> {
        let s = self.factor_start[i];
        s..s + self.factors[i].atoms().len()
    }

    /// Dimensions of the component quotients, in coordinate order.
    pub fn comp_dims(&self) -> Vec<usize> {
        self.comps.iter().map(Component::dim).collect()
    }

    fn grouped_order(&self) -> Vec<usize> {
        self.comps
            .iter()
            .flat_map(|c| c.atoms.iter().copied())
            .collect()
    }

    /// Project ambient vectors (modes = atoms) to quotient coordinates.
    pub fn proj(&self, t: &Tensor) -> Mat {
        assert_eq!(
            t.dims(),
            &self.atom_dims[..],
            "ambient tensor has the wrong modes"
        );
        let mut cur = t.permute(&self.grouped_order());
        for (k, c) in self.comps.iter().enumerate() {
            cur = cur.apply(k, c.atoms.len(), &c.proj, &[c.dim()]);
        }
        cur.into_mat()
    }

    /// `proj` for a matrix whose rows are ambient coordinates.
    pub fn proj_mat(&self, m: &Mat) -> Mat {
        self.proj(&Tensor::new(self.atom_dims.clone(), m.clone()))
    }

    /// Lift quotient coordinates to ambient representatives.
    pub fn sect(&self, x: &Mat) -> Tensor {
        assert_eq!(x.rows(), self.dim(), "quotient vector has the wrong length");
        let mut cur = Tensor::new(self.comp_dims(), x.clone());
        let mut pos = 0;
        for c in &self.comps {
            let dims: Vec<usize> = c.atoms.iter().map(|&a| self.atom_dims[a]).collect();
            cur = cur.apply(pos, 1, &c.sect, &dims);
            pos += dims.len();
        }
        let order = self.grouped_order();
        let mut inv = vec![0; order.len()];
        for (k, &a) in order.iter().enumerate() {
            inv[a] = k;
        }
        cur.permute(&inv)
    }

    pub fn sect_mat(&self, x: &Mat) -> Mat {
        self.sect(x).into_mat()
    }

    /// Explicit presentation (ambient projection, section and relation basis).
    /// Only sensible for small ambient spaces.
    pub fn presentation(&self) -> &QuotientPresentation {
        self.presentation.get_or_init(|| {
            let f = self.field();
            let proj = self.proj_mat(&Mat::identity(f, self.ambient_dim()));
            let sect = self.sect_mat(&Mat::identity(f, self.dim()));
            let relation_basis = proj.kernel_basis();
            QuotientPresentation {
                ambient_dim: self.ambient_dim(),
                relation_basis,
                proj,
                sect,
            }
        })
    }

    /// Induced matrices of action `a` of factor `i` on its component, if it descends.
    pub fn residual(&self, i: usize, a: Action) -> Option<(usize, &[Mat])> {
        self.residual.get(i)?[a.index()]
            .as_ref()
            .map(|(c, m)| (*c, m.as_slice()))
    }

    /// Apply action `a(r)` of factor `i` to quotient vectors.
    pub fn act(&self, i: usize, a: Action, r: &[Scalar], x: &Mat) -> Result<Mat> {
        let (c, mats) = self.residual(i, a).ok_or_else(|| {
            Error::InvalidSelector(format!(
                "action {a} of factor {i} is not defined on the quotient"
            ))
        })?;
        let op = combine(self.field(), r, mats);
        let t = Tensor::new(self.comp_dims(), x.clone());
        Ok(t.apply(c, 1, &op, &[op.rows()]).into_mat())
    }

    /// Full matrix of a residual action on the quotient.
    pub fn act_matrix(&self, i: usize, a: Action, r: &[Scalar]) -> Result<Mat> {
        self.act(i, a, r, &Mat::identity(self.field(), self.dim()))
    }

    /// The quotient as a module, with actions chosen by the export table.
    pub fn to_module(&self) -> Result<DoubleBimodule> {
        let mut local: [Option<(usize, Vec<Mat>)>; 4] = Default::default();
        for a in Action::ALL {
            if let Some((fi, sa)) = self.export[a.index()] {
                let (c, mats) = self.residual(fi, sa).expect("checked at construction");
                local[a.index()] = Some((c, mats.to_vec()));
            }
        }
        DoubleBimodule::split(self.alg.clone(), self.comp_dims(), local)
    }

    /// Matrix of the quotient action named `a` in the export table.
    pub fn exported(&self, a: Action) -> Result<(usize, Action)> {
        self.export[a.index()].ok_or_else(|| {
            Error::InvalidSelector(format!("{a} is not induced on this tensor product"))
        })
    }

    /// Descend an ambient-level map `src.ambient -> self.ambient` to the
    /// quotients, verifying that it maps relations into relations.
    pub fn descend(&self, src: &TensorSpace, amb: &Mat) -> Result<Mat> {
        let out = self.proj_mat(amb);
        if !src.kills_relations(&out) {
            return Err(Error::IllDefined(
                "map does not preserve the tensor relations".into(),
            ));
        }
        Ok(src.lift_through(&out))
    }

    /// `out . sect` for an ambient-level map `out` that kills the relations.
    pub fn lift_through(&self, out: &Mat) -> Mat {
        let t = Tensor::new(self.atom_dims.clone(), out.transpose());
        let back = self.proj_transpose(&t);
        back.transpose()
    }

    /// Applies `sect^T` mode by mode: rows of the result are quotient coordinates.
    fn proj_transpose(&self, t: &Tensor) -> Mat {
        let mut cur = t.permute(&self.grouped_order());
        for (k, c) in self.comps.iter().enumerate() {
            cur = cur.apply(k, c.atoms.len(), &c.sect.transpose(), &[c.dim()]);
        }
        cur.into_mat()
    }

    /// Whether an ambient-level map out of this space kills every relation.
    /// The relation space is the sum over components of the component
    /// relations tensored with everything else, so each is tested separately.
    pub fn kills_relations(&self, out: &Mat) -> bool {
        assert_eq!(
            out.cols(),
            self.ambient_dim(),
            "map does not start at the ambient space"
        );
        let t = Tensor::new(self.atom_dims.clone(), out.transpose()).permute(&self.grouped_order());
        let mut pos = 0;
        for c in &self.comps {
            let k = c.atoms.len();
            if c.relations.rows() > 0
                && !t
                    .apply(pos, k, &c.relations, &[c.relations.rows()])
                    .data()
                    .is_zero()
            {
                return false;
            }
            pos += k;
        }
        true
    }

    /// Which component each atom belongs to.
    pub fn atom_component(&self, atom: usize) -> usize {
        self.atom_comp[atom]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kk(f: Field) -> Arc<Algebra> {
        Arc::new(Algebra::product(f, 2))
    }

    #[test]
    fn permute_and_apply_agree_with_kron() {
        let f = Field::Prime(11);
        let a = Mat::from_i64(f, 2, 2, &[1, 2, 3, 4]);
        let b = Mat::from_i64(f, 3, 3, &[1, 0, 2, 0, 1, 0, 5, 0, 1]);
        let t = Tensor::new(vec![2, 3], Mat::identity(f, 6));
        let viaa = t.apply(0, 1, &a, &[2]).apply(1, 1, &b, &[3]);
        assert_eq!(viaa.data(), &a.kron(&b));
        // swapping modes twice is the identity
        let s = t.permute(&[1, 0]);
        assert_eq!(s.dims(), &[3, 2]);
        assert_eq!(s.permute(&[1, 0]).data(), t.data());
        // swap of 2x2 basis is the permutation (0)(1 2)(3)
        let sw = Tensor::new(vec![2, 2], Mat::identity(f, 4)).permute(&[1, 0]);
        assert_eq!(
            sw.data(),
            &Mat::from_i64(f, 4, 4, &[1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn over_ground_field_has_no_relations() {
        let f = Field::Rationals;
        let k = Arc::new(Algebra::ground(f));
        let m = Bimodule::free(&k, 2);
        let n = Bimodule::free(&k, 3);
        let t = TensorSpace::bimodules(&m, &n).unwrap();
        assert_eq!(t.dim(), 6);
        let all = |d: usize| {
            let id = Some(vec![Mat::identity(f, d)]);
            DoubleBimodule::new(k.clone(), d, [id.clone(), id.clone(), id.clone(), id]).unwrap()
        };
        assert_eq!(TensorSpace::boxtimes(&all(2), &all(3)).unwrap().dim(), 6);
        assert_eq!(TensorSpace::sigma_sigma(&all(2), &all(3)).unwrap().dim(), 6);
    }

    #[test]
    fn regular_tau_sigma_regular_over_kk() {
        let r = kk(Field::Prime(7));
        let reg = Bimodule::regular(&r);
        let m = reg.as_double(Pair::Tau);
        let n = reg.as_double(Pair::Sigma);
        let t = TensorSpace::over_r(&m, Action::TauRight, &n, Action::SigmaLeft).unwrap();
        assert_eq!(t.dim(), 2);
    }

    #[test]
    fn orthogonal_idempotents_give_zero() {
        let f = Field::Prime(7);
        let r = kk(f);
        let reg = Bimodule::regular(&r);
        let m = reg.submodule(&Mat::from_i64(f, 2, 1, &[1, 0])).unwrap();
        let n = reg.submodule(&Mat::from_i64(f, 2, 1, &[0, 1])).unwrap();
        let t = TensorSpace::bimodules(&m, &n).unwrap();
        assert_eq!(t.dim(), 0);
        let same = TensorSpace::bimodules(&m, &m).unwrap();
        assert_eq!(same.dim(), 1);
    }

    #[test]
    fn proj_sect_is_identity_and_kills_relations() {
        let f = Field::Prime(5);
        let r = Arc::new(Algebra::truncated_poly(f, 2));
        let reg = Bimodule::regular(&r);
        let t = TensorSpace::bimodules(&reg, &reg).unwrap();
        assert_eq!(t.dim(), 2);
        let p = t.presentation();
        assert!(p.proj.mul(&p.sect).is_identity());
        assert!(p.proj.mul(&p.relation_cols()).is_zero());
        assert_eq!(p.relation_basis.rows(), 2);
        // the induced actions make R (x)_R R a bimodule isomorphic to R
        assert!(t.to_module().unwrap().check().ok());
    }

    #[test]
    fn missing_selector_is_rejected() {
        let r = kk(Field::Prime(7));
        let d = Bimodule::regular(&r).as_double(Pair::Tau);
        let err = TensorSpace::over_r(&d, Action::SigmaRight, &d, Action::TauLeft).unwrap_err();
        assert!(matches!(err, Error::InvalidSelector(_)));
    }
}
