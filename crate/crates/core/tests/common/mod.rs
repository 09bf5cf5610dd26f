//! Random algebras and modules for the integration tests, with answers
//! computed by brute force rather than through the library's own solvers.

#![allow(dead_code)]

use std::sync::Arc;

use algebroid::algebra::Algebra;
use algebroid::field::{Field, Scalar};
use algebroid::linalg::Mat;
use algebroid::module::Bimodule;
use rand::Rng;

/// Every element of `R` over a prime field, in lexicographic order.
pub fn elements(alg: &Algebra) -> Vec<Vec<Scalar>> {
    let f = alg.field();
    let p = f.characteristic() as i64;
    let n = alg.dim();
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % p as usize) as i64;
                    k /= p as usize;
                    f.from_i64(d)
                })
                .collect()
        })
        .collect()
}

pub fn idempotents(alg: &Algebra) -> Vec<Vec<Scalar>> {
    elements(alg)
        .into_iter()
        .filter(|e| alg.mul_vec(e, e) == *e)
        .collect()
}

pub fn is_central(alg: &Algebra, e: &[Scalar]) -> bool {
    (0..alg.dim()).all(|i| alg.mul_vec(e, &alg.basis(i)) == alg.mul_vec(&alg.basis(i), e))
}

/// Whether the column spans of `a` and `b` coincide.
pub fn same_span(a: &Mat, b: &Mat) -> bool {
    let r = a.rank();
    r == b.rank() && a.hcat(b).rank() == r
}

/// Block matrix from a square grid of equally sized blocks.
pub fn blocks(f: Field, grid: &[Vec<Mat>]) -> Mat {
    let k = grid.len();
    let (br, bc) = grid[0][0].shape();
    Mat::from_fn(f, k * br, k * bc, |r, c| {
        grid[r / br][c / bc].get(r % br, c % bc)
    })
}

pub fn block_diag(f: Field, diag: &[Mat]) -> Mat {
    let k = diag.len();
    let (br, bc) = diag[0].shape();
    let grid: Vec<Vec<Mat>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        diag[i].clone()
                    } else {
                        Mat::zeros(f, br, bc)
                    }
                })
                .collect()
        })
        .collect();
    blocks(f, &grid)
}

pub fn random_invertible<G: Rng>(f: Field, n: usize, rng: &mut G) -> Mat {
    loop {
        let entries: Vec<_> = (0..n * n).map(|_| f.random(rng)).collect();
        let m = Mat::from_fn(f, n, n, |r, c| entries[r * n + c].clone());
        if m.rank() == n {
            return m;
        }
    }
}

/// One of a fixed menu of small algebras, presented in a random basis.
pub fn random_algebra<G: Rng>(f: Field, rng: &mut G) -> (String, Arc<Algebra>) {
    let menu: Vec<(String, Algebra)> = vec![
        ("k".into(), Algebra::ground(f)),
        ("k^2".into(), Algebra::product(f, 2)),
        ("k^3".into(), Algebra::product(f, 3)),
        ("k^4".into(), Algebra::product(f, 4)),
        ("k[x]/x^2".into(), Algebra::truncated_poly(f, 2)),
        ("k[x]/x^3".into(), Algebra::truncated_poly(f, 3)),
        ("k[x]/x^4".into(), Algebra::truncated_poly(f, 4)),
        ("M2(k)".into(), Algebra::matrix(f, 2)),
        ("T2(k)".into(), Algebra::upper_triangular(f)),
        ("kC2".into(), Algebra::cyclic_group(f, 2)),
        ("kC3".into(), Algebra::cyclic_group(f, 3)),
    ];
    let (name, alg) = menu[rng.gen_range(0..menu.len())].clone();
    let p = random_invertible(f, alg.dim(), rng);
    (name, Arc::new(alg.rebase(&p).expect("invertible")))
}

pub fn random_unit<G: Rng>(alg: &Algebra, rng: &mut G) -> Vec<Scalar> {
    loop {
        let u = alg.random_element(rng);
        if alg.lmul_of(&u).rank() == alg.dim() {
            return u;
        }
    }
}

/// `R^3` as a right module, or as a bimodule with left action `l`.
fn cube(alg: &Arc<Algebra>, left: Option<Vec<Mat>>) -> Bimodule {
    let f = alg.field();
    let right = (0..alg.dim())
        .map(|r| block_diag(f, &vec![alg.rmul(r).clone(); 3]))
        .collect();
    Bimodule::new(alg.clone(), 3 * alg.dim(), left, Some(right)).expect("shapes")
}

/// A random direct summand `E R^3` of the free module of rank three, with
/// `E = P diag(e_1, e_2, e_3) P^-1` for a random `P` in `GL_3(R)`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub label: String,
    pub alg: Arc<Algebra>,
    pub module: Bimodule,
    /// `dim Hom_R(M, R)`, from the rank of `r |-> r E` on row vectors.
    pub left_dual_dim: usize,
    /// Set when every `e_i` is central: `M` is then a bimodule with left
    /// action `P diag(u r u^-1) P^-1`, and its right dual has this dimension.
    pub right_dual_dim: Option<usize>,
}

pub fn random_summand<G: Rng>(f: Field, max_dim: usize, rng: &mut G) -> Summand {
    loop {
        let (name, alg) = random_algebra(f, rng);
        let n = alg.dim();
        let idem = idempotents(&alg);
        let central: Vec<&Vec<Scalar>> = idem.iter().filter(|e| is_central(&alg, e)).collect();
        let want_bimodule = rng.gen_bool(0.5);
        let es: Vec<Vec<Scalar>> = (0..3)
            .map(|_| {
                if want_bimodule {
                    central[rng.gen_range(0..central.len())].clone()
                } else {
                    idem[rng.gen_range(0..idem.len())].clone()
                }
            })
            .collect();
        let bimodule = es.iter().all(|e| is_central(&alg, e));
        let sizes: usize = es.iter().map(|e| alg.lmul_of(e).rank()).sum();
        if sizes == 0 || sizes > max_dim {
            continue;
        }
        let kp = loop {
            let entries: Vec<Mat> = (0..9)
                .map(|_| alg.lmul_of(&alg.random_element(rng)))
                .collect();
            let grid: Vec<Vec<Mat>> = (0..3).map(|i| entries[3 * i..3 * i + 3].to_vec()).collect();
            let m = blocks(f, &grid);
            if m.rank() == 3 * n {
                break m;
            }
        };
        let kq = kp.invert().expect("full rank");
        let d = block_diag(f, &es.iter().map(|e| alg.lmul_of(e)).collect::<Vec<_>>());
        let e = kp.mul(&d).mul(&kq);
        // entries of E over R: block (i, j) applied to 1
        let unit = alg.unit().to_vec();
        let x = |i: usize, j: usize| -> Vec<Scalar> {
            let block = Mat::from_fn(f, n, n, |r, c| e.get(i * n + r, j * n + c));
            block.apply(&unit)
        };
        let row_map: Vec<Vec<Mat>> = (0..3)
            .map(|i| (0..3).map(|j| alg.rmul_of(&x(j, i))).collect())
            .collect();
        let left_dual_dim = blocks(f, &row_map).rank();

        let left = bimodule.then(|| {
            let u = random_unit(&alg, rng);
            let uinv = alg.lmul_of(&u).invert().expect("unit").apply(&unit);
            (0..n)
                .map(|r| {
                    let a = alg.mul_vec(&alg.mul_vec(&u, &alg.basis(r)), &uinv);
                    kp.mul(&block_diag(f, &vec![alg.lmul_of(&a); 3])).mul(&kq)
                })
                .collect()
        });
        let basis = e.transpose().row_basis().transpose();
        let module = cube(&alg, left)
            .submodule(&basis)
            .expect("image of an idempotent is invariant");
        return Summand {
            label: format!("{name} over {f}, dim M = {}", module.dim()),
            alg,
            module,
            left_dual_dim,
            right_dual_dim: bimodule.then_some(sizes),
        };
    }
}

/// `R / aR` (right module) or `R / Ra` (left module) for a random non-unit
/// `a`, and whether some idempotent generates the same one-sided ideal.
#[derive(Clone, Debug)]
pub struct Cyclic {
    pub label: String,
    pub module: Bimodule,
    pub right_module: bool,
    pub projective: bool,
}

pub fn random_cyclic<G: Rng>(f: Field, rng: &mut G) -> Cyclic {
    loop {
        let (name, alg) = random_algebra(f, rng);
        let n = alg.dim();
        if n == 1 {
            continue;
        }
        let a = alg.random_element(rng);
        let right_module = rng.gen_bool(0.5);
        // columns span the ideal
        let ideal = |x: &[Scalar]| {
            if right_module {
                alg.lmul_of(x)
            } else {
                alg.rmul_of(x)
            }
        };
        let span = ideal(&a);
        if span.rank() == n {
            continue;
        }
        let projective = idempotents(&alg)
            .iter()
            .any(|e| same_span(&ideal(e), &span));
        let regular = if right_module {
            Bimodule::new(
                alg.clone(),
                n,
                None,
                Some((0..n).map(|r| alg.rmul(r).clone()).collect()),
            )
        } else {
            Bimodule::new(
                alg.clone(),
                n,
                Some((0..n).map(|r| alg.lmul(r).clone()).collect()),
                None,
            )
        }
        .expect("shapes");
        let relations = span.transpose().row_basis();
        let (module, _) = regular
            .quotient_module(&relations)
            .expect("ideal is invariant");
        let side = if right_module { "aR" } else { "Ra" };
        return Cyclic {
            label: format!("{name}/{side} over {f}"),
            module,
            right_module,
            projective,
        };
    }
}
