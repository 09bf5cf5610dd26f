//! Reference points. Small bialgebras over the ground field (group algebras,
//! function algebras on cyclic groups, and a monoid algebra whose
//! non-invertible grouplike rules out an antipode), and small rigid
//! presentations to reconstruct from.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bialgebroid::Bialgebroid;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::Bimodule;
use crate::tannaka::{DualEntry, Presentation};

/// Monoid algebra of `{0..d}` under `op`, every basis element grouplike.
fn monoid_algebra(
    field: Field,
    d: usize,
    op: impl Fn(usize, usize) -> usize,
    identity: usize,
) -> Result<Bialgebroid> {
    let mut mult = Mat::zeros(field, d, d * d);
    let mut delta = Mat::zeros(field, d * d, d);
    for i in 0..d {
        for j in 0..d {
            mult.set(op(i, j), i * d + j, field.one());
        }
        delta.set(i * d + i, i, field.one());
    }
    let counit = Mat::from_fn(field, 1, d, |_, _| field.one());
    let mut one = vec![field.zero(); d];
    one[identity] = field.one();
    Bialgebroid::from_bialgebra(field, mult, &one, delta, counit)
}

/// `k[C_n]` with `Delta g = g (x) g` and `S(g) = g^-1`.
pub fn group_algebra(field: Field, n: usize) -> Result<Bialgebroid> {
    monoid_algebra(field, n, |i, j| (i + j) % n, 0)
}

/// Functions on `C_n`: pointwise product, `Delta delta_g = sum_{xy=g} delta_x (x) delta_y`.
pub fn function_algebra(field: Field, n: usize) -> Result<Bialgebroid> {
    let mut mult = Mat::zeros(field, n, n * n);
    let mut delta = Mat::zeros(field, n * n, n);
    for x in 0..n {
        mult.set(x, x * n + x, field.one());
        for y in 0..n {
            delta.set(x * n + y, (x + y) % n, field.one());
        }
    }
    let counit = Mat::from_fn(
        field,
        1,
        n,
        |_, j| if j == 0 { field.one() } else { field.zero() },
    );
    Bialgebroid::from_bialgebra(field, mult, &vec![field.one(); n], delta, counit)
}

/// `k{1, x}` with `x^2 = x`, both grouplike: a bialgebra whose `beta` is singular.
pub fn idempotent_monoid(field: Field) -> Result<Bialgebroid> {
    monoid_algebra(field, 2, |i, j| i.max(j), 0)
}

fn self_dual(p: &mut Presentation, x: usize, ev: usize, db: usize) {
    p.duals.push(DualEntry {
        object: x,
        dual: x,
        ev,
        db,
    });
    p.right_duals.push(DualEntry {
        object: x,
        dual: x,
        ev,
        db,
    });
}

/// One object `I` with `F(I) = R`, `I (x) I = I` through multiplication and
/// `I` dual to itself through the identity.
pub fn trivial(alg: &Arc<Algebra>) -> Presentation {
    let f = alg.field();
    let n = alg.dim();
    let mut p = Presentation::new(alg.clone());
    let i = p.add_object("I", Bimodule::regular(alg));
    let id = p.add_morphism("id_I", i, i, Mat::identity(f, n));
    p.add_tensor(i, i, i, alg.mult_matrix().clone());
    p.unit_object = Some(i);
    p.unit_iso = Some(Mat::identity(f, n));
    self_dual(&mut p, i, id, id);
    p
}

/// Graded vector spaces over `C_2`: objects `1` and `g` on `k`, `g (x) g = 1`,
/// both self-dual.
pub fn c2(field: Field) -> Presentation {
    let k = Arc::new(Algebra::ground(field));
    let one = Mat::identity(field, 1);
    let mut p = Presentation::new(k.clone());
    let e = p.add_object("1", Bimodule::regular(&k));
    let g = p.add_object("g", Bimodule::regular(&k));
    let id = p.add_morphism("id_1", e, e, one.clone());
    for (x, y, z) in [(e, e, e), (e, g, g), (g, e, g), (g, g, e)] {
        p.add_tensor(x, y, z, one.clone());
    }
    p.unit_object = Some(e);
    p.unit_iso = Some(one);
    self_dual(&mut p, e, id, id);
    self_dual(&mut p, g, id, id);
    p
}

/// `R = k x k` with `I` on `R` and `M` on `R` with right action twisted by
/// the swap. `theta(m (x) n) = m swap(n)` makes `M (x) M = I`, so `M` is
/// self-dual with every evaluation and coevaluation the identity of `R`.
pub fn swap(field: Field) -> Result<Presentation> {
    let r = Arc::new(Algebra::product(field, 2));
    let n = 2;
    let sw = Mat::from_i64(field, 2, 2, &[0, 1, 1, 0]);
    let mult = r.mult_matrix().clone();
    let twisted = mult.mul(&Mat::identity(field, n).kron(&sw));
    let mut p = Presentation::new(r.clone());
    let i = p.add_object("I", Bimodule::regular(&r));
    let m = p.add_object("M", Bimodule::twisted(&r, &Mat::identity(field, n), &sw)?);
    let id = p.add_morphism("id_I", i, i, Mat::identity(field, n));
    p.add_tensor(i, i, i, mult.clone());
    p.add_tensor(i, m, m, mult);
    p.add_tensor(m, i, m, twisted.clone());
    p.add_tensor(m, m, i, twisted);
    p.unit_object = Some(i);
    p.unit_iso = Some(Mat::identity(field, n));
    self_dual(&mut p, i, id, id);
    self_dual(&mut p, m, id, id);
    Ok(p)
}
