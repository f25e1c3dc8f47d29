use crate::linalg::Matrix;
use crate::scalars::{Field, GaussRat, QField};

use super::VectorRep;

/// Position of the single nonzero entry of `e_a ⊗ e_b` for matrix units `a`, `b`.
fn unit2(dim: usize, a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
    (a.0 * dim + b.0, a.1 * dim + b.1)
}

/// The image of the universal R-matrix in `C^{2n} ⊗ C^{2n}`, up to a scalar:
/// `Σ q^{δ_ij - δ_ij'} e_ii⊗e_jj + (q-q^{-1}) Σ_{i>j} (e_ij⊗e_ji - q^{ρ_i-ρ_j} ε_i ε_j e_ij⊗e_i'j')`.
pub fn explicit_r<F: QField>(v: &VectorRep<F>) -> Matrix<F> {
    let d = v.dim;
    let mut r = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let e = (i == j) as i64 - (j == v.prime(i)) as i64;
            let (row, col) = unit2(d, (i, i), (j, j));
            r.add_at(row, col, &F::q_pow(e));
        }
    }
    let qq = F::q().sub(&F::q_pow(-1));
    for i in 0..d {
        for j in 0..i {
            let (row, col) = unit2(d, (i, j), (j, i));
            r.add_at(row, col, &qq);
            let c = F::q_pow(v.rho(i) - v.rho(j)).mul(&F::from_int(v.sign(i) * v.sign(j)));
            let (row, col) = unit2(d, (i, j), (v.prime(i), v.prime(j)));
            r.add_at(row, col, &qq.mul(&c).neg());
        }
    }
    r
}

/// The classical r-matrix
/// `Σ (e_ii⊗e_ii - e_ii⊗e_i'i') + 2 Σ_{i>j} (e_ij⊗e_ji - ε_i ε_j e_ij⊗e_i'j')`.
pub fn classical_r<F: QField>(v: &VectorRep<F>) -> Matrix<GaussRat> {
    let d = v.dim;
    let mut r = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        let (row, col) = unit2(d, (i, i), (i, i));
        r.add_at(row, col, &GaussRat::one());
        let (row, col) = unit2(d, (i, i), (v.prime(i), v.prime(i)));
        r.add_at(row, col, &GaussRat::from_int(-1));
    }
    for i in 0..d {
        for j in 0..i {
            let (row, col) = unit2(d, (i, j), (j, i));
            r.add_at(row, col, &GaussRat::from_int(2));
            let (row, col) = unit2(d, (i, j), (v.prime(i), v.prime(j)));
            r.add_at(row, col, &GaussRat::from_int(-2 * v.sign(i) * v.sign(j)));
        }
    }
    r
}

/// The flip `P` on `C^d ⊗ C^d`.
pub fn flip<F: Field>(d: usize) -> Matrix<F> {
    let mut p = Matrix::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            p.set(b * d + a, a * d + b, F::one());
        }
    }
    p
}

/// `Σ q^{ρ_i-ρ_j} ε_i ε_j e_{i'j} ⊗ e_{ij'}`.
pub fn kappa_sum<F: QField>(v: &VectorRep<F>) -> Matrix<F> {
    let d = v.dim;
    let mut k = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let c = F::q_pow(v.rho(i) - v.rho(j)).mul(&F::from_int(v.sign(i) * v.sign(j)));
            let (row, col) = unit2(d, (v.prime(i), j), (i, v.prime(j)));
            k.add_at(row, col, &c);
        }
    }
    k
}

/// The idempotent proportional to [`kappa_sum`].
pub fn kappa<F: QField>(v: &VectorRep<F>) -> Matrix<F> {
    let k = kappa_sum(v);
    let t = k.trace();
    k.scale(&t.inv().unwrap())
}

/// `X_{12}`, `X_{13}` or `X_{23}` on `(C^d)^{⊗3}` for `X` on `C^d ⊗ C^d`.
pub fn embed3<F: Field>(x: &Matrix<F>, d: usize, legs: (usize, usize)) -> Matrix<F> {
    let id = Matrix::<F>::identity(d);
    match legs {
        (0, 1) => x.kron(&id),
        (1, 2) => id.kron(x),
        (0, 2) => {
            let p23 = id.kron(&flip::<F>(d));
            p23.mul(&x.kron(&id)).mul(&p23)
        }
        _ => panic!("unsupported legs {legs:?}"),
    }
}

/// `R_{12} R_{13} R_{23} = R_{23} R_{13} R_{12}`.
pub fn yang_baxter_holds<F: Field>(r: &Matrix<F>, d: usize) -> bool {
    let r12 = embed3(r, d, (0, 1));
    let r13 = embed3(r, d, (0, 2));
    let r23 = embed3(r, d, (1, 2));
    r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12)
}

/// Candidate eigenvalues `±q^k`, `|k| ≤ bound`, at which `x - c` is singular.
pub fn monomial_eigenvalues<F: QField>(x: &Matrix<F>, bound: i64) -> Vec<F> {
    let mut out = Vec::new();
    for k in -bound..=bound {
        for s in [1, -1] {
            let c = F::q_pow(k).mul(&F::from_int(s));
            let m = x.sub(&Matrix::identity(x.rows).scale(&c));
            if m.rank() < x.rows {
                out.push(c);
            }
        }
    }
    out
}

/// `Π (x - c_j)`.
pub fn product_of_shifts<F: Field>(x: &Matrix<F>, roots: &[F]) -> Matrix<F> {
    let mut m = Matrix::identity(x.rows);
    for c in roots {
        m = m.mul(&x.sub(&Matrix::identity(x.rows).scale(c)));
    }
    m
}
