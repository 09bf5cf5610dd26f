//! Finite-dimensional associative unital algebras given by structure constants.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Mat;
use crate::report::{Counterexample, Report};

/// `e_i * e_j = sum_l mul[i][j][l] e_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mul: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    lmul: Vec<Mat>,
    rmul: Vec<Mat>,
    mult: Mat,
}

impl Algebra {
    pub fn new(field: Field, mul: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<Self> {
        let n = unit.len();
        if n == 0 {
            return Err(Error::Schema("algebra must have positive dimension".into()));
        }
        if mul.len() != n
            || mul
                .iter()
                .any(|r| r.len() != n || r.iter().any(|c| c.len() != n))
        {
            return Err(Error::Schema(format!(
                "structure constants must be {n}x{n}x{n}"
            )));
        }
        // left_mul(i) has column j = e_i e_j; right_mul(i) has column j = e_j e_i
        let lmul = (0..n)
            .map(|i| Mat::from_fn(field, n, n, |l, j| mul[i][j][l].clone()))
            .collect();
        let rmul = (0..n)
            .map(|i| Mat::from_fn(field, n, n, |l, j| mul[j][i][l].clone()))
            .collect();
        let mult = Mat::from_fn(field, n, n * n, |l, c| mul[c / n][c % n][l].clone());
        Ok(Algebra {
            field,
            dim: n,
            mul,
            unit,
            lmul,
            rmul,
            mult,
        })
    }

    /// Build from a product table on basis indices.
    pub fn from_table(
        field: Field,
        n: usize,
        unit: Vec<Scalar>,
        table: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let mul = (0..n)
            .map(|i| (0..n).map(|j| table(i, j)).collect())
            .collect();
        Algebra::new(field, mul, unit)
    }

    /// The ground field itself.
    pub fn ground(field: Field) -> Self {
        Algebra::product(field, 1)
    }

    /// `k^n` with componentwise product.
    pub fn product(field: Field, n: usize) -> Self {
        let unit = vec![field.one(); n];
        Algebra::from_table(field, n, unit, |i, j| {
            let mut v = vec![field.zero(); n];
            if i == j {
                v[i] = field.one();
            }
            v
        })
        .expect("well-formed table")
    }

    /// `k[x]/(x^n)` on the monomial basis.
    pub fn truncated_poly(field: Field, n: usize) -> Self {
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Algebra::from_table(field, n, unit, |i, j| {
            let mut v = vec![field.zero(); n];
            if i + j < n {
                v[i + j] = field.one();
            }
            v
        })
        .expect("well-formed table")
    }

    /// Full matrix algebra `M_n(k)` on matrix units `E_ab`, index `a * n + b`.
    pub fn matrix(field: Field, n: usize) -> Self {
        let d = n * n;
        let mut unit = vec![field.zero(); d];
        for a in 0..n {
            unit[a * n + a] = field.one();
        }
        Algebra::from_table(field, d, unit, |i, j| {
            let (a, b) = (i / n, i % n);
            let (c, e) = (j / n, j % n);
            let mut v = vec![field.zero(); d];
            if b == c {
                v[a * n + e] = field.one();
            }
            v
        })
        .expect("well-formed table")
    }

    /// Upper triangular 2x2 matrices on `E_00, E_01, E_11`.
    pub fn upper_triangular(field: Field) -> Self {
        let units = [(0, 0), (0, 1), (1, 1)];
        let unit = vec![field.one(), field.zero(), field.one()];
        Algebra::from_table(field, 3, unit, |i, j| {
            let (a, b) = units[i];
            let (c, e) = units[j];
            let mut v = vec![field.zero(); 3];
            if b == c {
                let k = units.iter().position(|&u| u == (a, e)).unwrap();
                v[k] = field.one();
            }
            v
        })
        .expect("well-formed table")
    }

    /// Group algebra of the cyclic group of order `n`.
    pub fn cyclic_group(field: Field, n: usize) -> Self {
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Algebra::from_table(field, n, unit, |i, j| {
            let mut v = vec![field.zero(); n];
            v[(i + j) % n] = field.one();
            v
        })
        .expect("well-formed table")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mul[i][j]
    }

    pub fn structure_constants(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.mul
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    /// Left multiplication by `e_i`.
    pub fn lmul(&self, i: usize) -> &Mat {
        &self.lmul[i]
    }

    /// Right multiplication by `e_i`.
    pub fn rmul(&self, i: usize) -> &Mat {
        &self.rmul[i]
    }

    pub fn lmul_of(&self, a: &[Scalar]) -> Mat {
        crate::linalg::combine(self.field, a, &self.lmul)
    }

    pub fn rmul_of(&self, a: &[Scalar]) -> Mat {
        crate::linalg::combine(self.field, a, &self.rmul)
    }

    /// The multiplication map `R (x) R -> R`, an `n x n^2` matrix.
    pub fn mult_matrix(&self) -> &Mat {
        &self.mult
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.lmul_of(a).apply(b)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul[i][j] == self.mul[j][i]))
    }

    /// The opposite algebra.
    pub fn opposite(&self) -> Algebra {
        Algebra::from_table(self.field, self.dim, self.unit.clone(), |i, j| {
            self.mul[j][i].clone()
        })
        .expect("well-formed table")
    }

    /// Same algebra in a new basis: column `j` of `p` is the new `f_j` in old coordinates.
    pub fn rebase(&self, p: &Mat) -> Result<Algebra> {
        let pinv = p.invert()?;
        let f = self.field;
        let n = self.dim;
        let unit = pinv.apply(&self.unit);
        Algebra::from_table(f, n, unit, |a, b| {
            let prod = self.mul_vec(&p.col(a), &p.col(b));
            pinv.apply(&prod)
        })
    }

    /// Whether the linear map `alpha` (columns = images of basis vectors) is a unital algebra map.
    pub fn is_endomorphism(&self, alpha: &Mat) -> bool {
        if alpha.shape() != (self.dim, self.dim) || alpha.apply(&self.unit) != self.unit {
            return false;
        }
        (0..self.dim).all(|i| {
            (0..self.dim)
                .all(|j| alpha.apply(&self.mul[i][j]) == self.mul_vec(&alpha.col(i), &alpha.col(j)))
        })
    }

    /// A small set of basis elements generating `R` as a unital algebra,
    /// chosen greedily in basis order.
    pub fn generators(&self) -> Vec<usize> {
        let f = self.field;
        let n = self.dim;
        let span_of = |vs: &[Vec<Scalar>]| Mat::from_rows(f, n, vs).row_basis();
        let mut gens: Vec<usize> = Vec::new();
        let mut sub = span_of(std::slice::from_ref(&self.unit));
        for i in 0..n {
            if sub.rows() == n {
                break;
            }
            if sub.transpose().col_space_contains(&self.basis(i)) {
                continue;
            }
            gens.push(i);
            // close the span under right multiplication by generators
            loop {
                let mut vs: Vec<Vec<Scalar>> = (0..sub.rows()).map(|r| sub.row(r)).collect();
                for r in 0..sub.rows() {
                    for &g in &gens {
                        vs.push(self.mul_vec(&sub.row(r), &self.basis(g)));
                    }
                }
                let next = span_of(&vs);
                if next.rows() == sub.rows() {
                    break;
                }
                sub = next;
            }
        }
        gens
    }

    pub fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Vec<Scalar> {
        (0..self.dim).map(|_| self.field.random(rng)).collect()
    }

    /// Associativity and two-sided unit on all basis triples.
    pub fn check(&self) -> Report {
        let f = self.field;
        let n = self.dim;
        let mut rep = Report::new();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mul[i][j];
                for l in 0..n {
                    let lhs = self.mul_vec(ij, &self.basis(l));
                    let rhs = self.mul_vec(&self.basis(i), &self.mul[j][l]);
                    rep.vec_eq("Algebra/assoc", &[i, j, l], &lhs, &rhs, f);
                }
            }
        }
        for i in 0..n {
            let e = self.basis(i);
            let l = self.mul_vec(&self.unit, &e);
            let r = self.mul_vec(&e, &self.unit);
            rep.check("Algebra/unit", l == e && r == e, || Counterexample {
                indices: vec![i],
                lhs: l.iter().chain(&r).map(|x| f.format(x)).collect(),
                rhs: e.iter().chain(&e).map(|x| f.format(x)).collect(),
            });
        }
        rep
    }
}
