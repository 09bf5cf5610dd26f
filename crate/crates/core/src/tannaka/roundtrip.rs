//! Rebuild a coalgebroid from a family of its comodules: take direct sums up
//! to a given rank, all colinear bimodule maps between them, form the coend
//! of that presentation and compare it with the original through the
//! canonical map `[phi (x) m] -> phi(m0) m1`.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::coend::{build_coend, induce_coring};
use super::Presentation;
use crate::coalgebroid::{check_morphism, Coalgebroid};
use crate::comodule::RightComodule;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{Action, Bimodule};
use crate::par::{map_indexed, ExecMode};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct Roundtrip {
    pub rank: usize,
    /// Objects and hom-space generators of the rebuilt presentation.
    pub objects: usize,
    pub morphisms: usize,
    pub dim_rebuilt: usize,
    pub dim_original: usize,
    /// The canonical map `L' -> L`, `dim L x dim L'`.
    pub canonical: Mat,
    pub injective: bool,
    pub surjective: bool,
    pub report: Report,
}

impl Roundtrip {
    pub fn is_iso(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Nondecreasing sequences of length `1..=rank` over `0..k`.
fn multisets(k: usize, rank: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
    for _ in 0..rank {
        out.extend(layer.iter().cloned());
        layer = layer
            .iter()
            .flat_map(|s| (*s.last().unwrap()..k).map(move |i| [s.clone(), vec![i]].concat()))
            .collect();
    }
    out
}

struct SumObject {
    name: String,
    module: Bimodule,
    /// `(dim * l) x dim` on `M (x)_k L`.
    delta_amb: Mat,
}

fn sum_object(comods: &[RightComodule], names: &[String], parts: &[usize]) -> Result<SumObject> {
    let f = comods[0].field();
    let l = comods[0].coalgebroid().dim();
    let mut module = comods[parts[0]].bimodule();
    for &p in &parts[1..] {
        module = module.direct_sum(&comods[p].bimodule())?;
    }
    let d = module.dim();
    let mut delta_amb = Mat::zeros(f, d * l, d);
    let mut o = 0;
    for &p in parts {
        let a = comods[p].delta_ambient();
        let dp = comods[p].dim();
        for r in 0..dp * l {
            for c in 0..dp {
                if !a.is_entry_zero(r, c) {
                    delta_amb.set(o * l + r, o + c, a.get(r, c));
                }
            }
        }
        o += dp;
    }
    let name = parts
        .iter()
        .map(|&p| names[p].as_str())
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(SumObject {
        name,
        module,
        delta_amb,
    })
}

/// Basis of the colinear bimodule maps `a -> b`, each `dim b x dim a`.
fn colinear_maps(
    coalg: &Coalgebroid,
    a: &SumObject,
    b: &SumObject,
    space_b: &crate::tensor::TensorSpace,
) -> Vec<Mat> {
    let f = coalg.field();
    let l = coalg.dim();
    let (da, db) = (a.module.dim(), b.module.dim());
    let n = coalg.algebra().dim();
    let eye_l = Mat::identity(f, l);
    let mut cols = Vec::with_capacity(da * db);
    for i in 0..db {
        for j in 0..da {
            let e = Mat::from_fn(
                f,
                db,
                da,
                |r, c| if r == i && c == j { f.one() } else { f.zero() },
            );
            let mut eqs = Vec::new();
            for r in 0..n {
                for (x, y) in [
                    (a.module.left().ok(), b.module.left().ok()),
                    (a.module.right().ok(), b.module.right().ok()),
                ] {
                    if let (Some(x), Some(y)) = (x, y) {
                        eqs.push(e.mul(&x[r]).sub(&y[r].mul(&e)).reshape(db * da, 1));
                    }
                }
            }
            let co = e.kron(&eye_l).mul(&a.delta_amb).sub(&b.delta_amb.mul(&e));
            eqs.push(space_b.proj_mat(&co).reshape(space_b.dim() * da, 1));
            let col = eqs.iter().fold(Mat::zeros(f, 0, 1), |acc, m| acc.vcat(m));
            cols.push(col.col(0));
        }
    }
    let rows = cols.first().map_or(0, Vec::len);
    let sys = Mat::from_cols(f, rows, &cols);
    let ker = sys.kernel_basis();
    (0..ker.rows())
        .map(|c| Mat::from_fn(f, db, da, |r, s| ker.get(c, r * da + s)))
        .collect()
}

/// Rebuild from `comods` and compare with their coalgebroid. `names` label the
/// comodules in the rebuilt presentation.
pub fn roundtrip_check(
    coalg: &Arc<Coalgebroid>,
    comods: &[RightComodule],
    names: &[String],
    rank: usize,
    mode: ExecMode,
) -> Result<Roundtrip> {
    if comods.is_empty() {
        return Err(Error::Schema(
            "roundtrip needs at least one comodule".into(),
        ));
    }
    let f = coalg.field();
    let l = coalg.dim();
    let alg = coalg.algebra().clone();
    let mut rep = Report::new();

    let objs = multisets(comods.len(), rank.max(1))
        .iter()
        .map(|s| sum_object(comods, names, s))
        .collect::<Result<Vec<_>>>()?;
    let spaces = objs
        .iter()
        .map(|o| {
            RightComodule::from_ambient(coalg.clone(), &o.module, &o.delta_amb)
                .map(|c| c.space().clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let k = objs.len();
    let homs = map_indexed(mode, k * k, |ix| {
        colinear_maps(coalg, &objs[ix / k], &objs[ix % k], &spaces[ix % k])
    });

    let mut p = Presentation::new(alg.clone());
    for o in &objs {
        p.add_object(&o.name, o.module.clone());
    }
    for (ix, basis) in homs.into_iter().enumerate() {
        let (a, b) = (ix / k, ix % k);
        for (t, m) in basis.into_iter().enumerate() {
            p.add_morphism(
                &format!("{} -> {} #{t}", objs[a].name, objs[b].name),
                a,
                b,
                m,
            );
        }
    }
    let morphisms = p.morphisms.len();
    let coend = build_coend(&p, mode)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let (rebuilt, sub) = induce_coring(&coend, &mut rng)?;
    rep.merge(sub.scoped("Roundtrip/"));

    // [phi (x) m] -> sum_r phi(m0)_r sigma_L(r) m1
    let sl = coalg.carrier().mats(Action::SigmaLeft)?;
    let n = alg.dim();
    let mut k0 = Mat::zeros(f, l, 0);
    for (x, o) in objs.iter().enumerate() {
        let d = o.module.dim();
        let phis = coend.duals()[x].pairing();
        let e = coend.duals()[x].dual().dim();
        for t in 0..e {
            let mut ct = Mat::zeros(f, l, d * l);
            for r in 0..n {
                let row = Mat::from_fn(f, 1, d, |_, j| phis.get(r, t * d + j));
                ct = ct.add(&row.kron(&sl[r]));
            }
            k0 = k0.hcat(&ct.mul(&o.delta_amb));
        }
    }
    if k0.mul(coend.relations()).is_zero() {
        rep.pass("Roundtrip/descends");
    } else {
        rep.fail_note(
            "Roundtrip/descends",
            "canonical map does not kill the relations",
        );
    }
    let canonical = k0.mul(&coend.quotient().sect);
    rep.merge(check_morphism(&rebuilt, coalg, &canonical)?.scoped("Roundtrip/"));
    let rank_k = canonical.rank();
    let (injective, surjective) = (rank_k == rebuilt.dim(), rank_k == l);
    if injective && surjective {
        rep.pass("Roundtrip/iso");
    } else {
        rep.fail_note(
            "Roundtrip/iso",
            format!(
                "canonical map of rank {rank_k} from dimension {} to {l} ({}, {})",
                rebuilt.dim(),
                if injective {
                    "injective"
                } else {
                    "not injective"
                },
                if surjective {
                    "surjective"
                } else {
                    "not surjective"
                },
            ),
        );
    }
    Ok(Roundtrip {
        rank,
        objects: k,
        morphisms,
        dim_rebuilt: rebuilt.dim(),
        dim_original: l,
        canonical,
        injective,
        surjective,
        report: rep,
    })
}
