use std::collections::HashMap;

use crate::linalg::Matrix;
use crate::rootdata::RootSystem;
use crate::scalars::QField;
use crate::wordalgebra::{Algebra, Derivation, Sign, Tower};

use super::{RMatrixError, VectorRep};

/// The quasi-R-matrix `Θ = Σ_β Θ_β`, `Θ_β ∈ U_q(g_-)_β ⊗ U_q(g_+)_β`, with
/// `R = q^{t_0} Θ` for the coproduct `Δ(e) = e⊗1 + K⊗e`, `Δ(f) = f⊗K^{-1} + 1⊗f`.
///
/// `Θ_β` is stored as the coefficient matrix `C_β` with rows indexed by the
/// basis words of `U_q(g_-)_β` and columns by those of `U_q(g_+)_β`.
#[derive(Debug, Clone)]
pub struct QuasiR<F> {
    pub minus: Tower<F>,
    pub plus: Tower<F>,
    pub theta: HashMap<Vec<i64>, Matrix<F>>,
    pub depth: usize,
}

impl<F: QField> QuasiR<F> {
    /// Solves `Θ Δ(x) = Δ̄(x) Θ` degree by degree up to height `depth`, using the
    /// skew derivations `r_i` (`[e_i, y] = (K_i r_i(y) - r'_i(y) K_i^{-1})/(q_i - q_i^{-1})`)
    /// and right multiplication by `e_i`; the `r'_i` equation is checked as well.
    pub fn new(rs: RootSystem, depth: usize) -> Result<Self, RMatrixError> {
        let alg = Algebra::new(rs.clone(), F::q());
        let minus = Tower::new(alg.clone(), Sign::F, depth, vec![]);
        let plus = Tower::new(alg, Sign::E, depth, vec![]);
        let n = rs.n;
        let (r, r_prime) = skew_derivations(&minus);
        let mut theta: HashMap<Vec<i64>, Matrix<F>> = HashMap::new();
        theta.insert(vec![0; n], Matrix::identity(1));
        for beta in minus.weights().to_vec() {
            if beta.iter().all(|&c| c == 0) {
                continue;
            }
            let d = minus.dim(&beta)?;
            let dp = plus.dim(&beta)?;
            let mut a = Matrix::zeros(0, d);
            let mut b = Matrix::zeros(0, dp);
            let mut a2 = Matrix::zeros(0, d);
            let mut b2 = Matrix::zeros(0, dp);
            for i in 0..n {
                if beta[i] == 0 {
                    continue;
                }
                let mut lower = beta.clone();
                lower[i] -= 1;
                let c_lower = &theta[&lower];
                let scale = lift_factor::<F>(&rs, i, &lower);
                let ri = r[i].at(&beta).unwrap();
                a = a.vcat(ri);
                b = b.vcat(&c_lower.mul(&plus.right_mul(i, &lower)?.transpose()).scale(&scale));
                a2 = a2.vcat(r_prime[i].at(&beta).unwrap());
                let left = plus.fmat(i, &beta).cloned().unwrap_or_else(|| Matrix::zeros(dp, c_lower.cols));
                b2 = b2.vcat(&c_lower.mul(&left.transpose()).scale(&scale));
            }
            if a.rank() != d {
                return Err(RMatrixError::Singular(beta));
            }
            let c = a.solve(&b).ok_or_else(|| RMatrixError::Inconsistent(beta.clone()))?;
            if a2.mul(&c) != b2 {
                return Err(RMatrixError::Inconsistent(beta));
            }
            theta.insert(beta, c);
        }
        Ok(QuasiR { minus, plus, theta, depth })
    }

    pub fn theta(&self, beta: &[i64]) -> Option<&Matrix<F>> {
        self.theta.get(beta)
    }

    /// `(π⊗π)(q^{t_0} Θ)` on `C^{2n} ⊗ C^{2n}`.
    pub fn on_vector_pair(&self, v: &VectorRep<F>) -> Matrix<F> {
        let d = v.dim;
        let mut total = Matrix::zeros(d * d, d * d);
        for (beta, c) in &self.theta {
            let minus_words = &self.minus.slice(beta).unwrap().words;
            let plus_words = &self.plus.slice(beta).unwrap().words;
            let fs: Vec<Matrix<F>> = minus_words.iter().map(|w| v.f_word(w)).collect();
            let es: Vec<Matrix<F>> = plus_words.iter().map(|w| v.e_word(w)).collect();
            for (u, fu) in fs.iter().enumerate() {
                if fu.is_zero() {
                    continue;
                }
                for (w, ev) in es.iter().enumerate() {
                    let coef = c.get(u, w);
                    if coef.is_zero() || ev.is_zero() {
                        continue;
                    }
                    total = total.add(&fu.kron(ev).scale(coef));
                }
            }
        }
        q_t0(v).mul(&total)
    }
}

/// `(q_i - q_i^{-1}) q^{(α_i, β')}`.
fn lift_factor<F: QField>(rs: &RootSystem, i: usize, lower: &[i64]) -> F {
    let d = rs.d(i);
    let b = rs.from_simple_coords(lower);
    F::q_pow(d)
        .sub(&F::q_pow(-d))
        .mul(&F::q_pow(rs.ip(&rs.simple[i], &b)))
}

/// The skew derivations `r_i` and `r'_i` of `U_q(g_-)`:
/// `r_i(f_j y) = q^{(α_i,α_j)} f_j r_i(y) + δ_ij y`,
/// `r'_i(f_j y) = f_j r'_i(y) + δ_ij q^{(α_i, wt y)} y`.
pub fn skew_derivations<F: QField>(minus: &Tower<F>) -> (Vec<Derivation<F>>, Vec<Derivation<F>>) {
    let rs = &minus.alg.rs;
    let n = rs.n;
    let r = (0..n)
        .map(|i| minus.derivation(i, |j, _| F::q_pow(rs.simple_ip(i, j)), |_| F::one()))
        .collect();
    let r_prime = (0..n)
        .map(|i| {
            minus.derivation(
                i,
                |_, _| F::one(),
                |bm| F::q_pow(rs.ip(&rs.simple[i], &rs.from_simple_coords(bm))),
            )
        })
        .collect();
    (r, r_prime)
}

/// `q^{t_0}` on `C^{2n} ⊗ C^{2n}`: `w_a ⊗ w_b ↦ q^{(wt_a, wt_b)} w_a ⊗ w_b`.
pub fn q_t0<F: QField>(v: &VectorRep<F>) -> Matrix<F> {
    let d = v.dim;
    let mut diag = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            diag.push(F::q_pow(v.rs.ip(&v.weights[a], &v.weights[b])));
        }
    }
    Matrix::diag(diag)
}

/// The scalar `c` with `x = c·y`, if one exists.
pub fn proportionality<F: QField>(x: &Matrix<F>, y: &Matrix<F>) -> Option<F> {
    let k = y.entries().iter().position(|e| !e.is_zero())?;
    let c = x.entries()[k].div(&y.entries()[k]);
    (*x == y.scale(&c)).then_some(c)
}
