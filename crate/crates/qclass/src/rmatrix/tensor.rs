use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::linalg::Matrix;
use crate::scalars::QField;
use crate::verma::Module;

use super::{QuasiR, RMatrixError, VectorRep};

/// One block `w_{idx} ⊗ M_β` of a tensor weight slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub idx: Vec<usize>,
    pub beta: Vec<i64>,
    pub offset: usize,
    pub len: usize,
}

/// The weight slice `λ + L·ε_1 - γ` of `(C^{2n})^{⊗L} ⊗ M`.
#[derive(Debug, Clone)]
pub struct TensorSlice {
    pub gamma: Vec<i64>,
    pub comps: Vec<Component>,
    pub dim: usize,
    index: HashMap<(Vec<usize>, Vec<i64>), usize>,
}

impl TensorSlice {
    pub fn find(&self, idx: &[usize], beta: &[i64]) -> Option<&Component> {
        self.index.get(&(idx.to_vec(), beta.to_vec())).map(|&k| &self.comps[k])
    }
}

/// A block of an operator: from one component to the component `(idx, beta)`.
pub type BlockImage<F> = Vec<(Vec<usize>, Vec<i64>, Matrix<F>)>;

type QBlocks<F> = Arc<Vec<(usize, Vec<i64>, Matrix<F>)>>;

/// Pieces of `(π⊗id)(Θ)`: a matrix on `C^{2n}` paired with a word acting on `M`.
#[derive(Debug, Clone)]
struct ThetaPiece<F> {
    beta: Vec<i64>,
    vec_part: Matrix<F>,
    word: Vec<usize>,
}

/// `(C^{2n})^{⊗L} ⊗ M` with the coproduct action and the operator
/// `Q = (π⊗id)(R_{21} R)` on the last vector leg and `M`.
pub struct TensorModel<'a, F> {
    pub module: &'a Module<F>,
    pub vrep: &'a VectorRep<F>,
    /// Pieces of `Σ C[u,v] π(f_u) ⊗ e_v`.
    r_pieces: Vec<ThetaPiece<F>>,
    /// Pieces of `Σ C[u,v] π(e_v) ⊗ f_u`.
    r21_pieces: Vec<ThetaPiece<F>>,
    eta: Vec<Vec<i64>>,
    q_cache: Mutex<HashMap<(usize, Vec<i64>), QBlocks<F>>>,
}

impl<'a, F: QField> TensorModel<'a, F> {
    pub fn new(module: &'a Module<F>, vrep: &'a VectorRep<F>, theta: &QuasiR<F>) -> Self {
        let rs = module.rs();
        let mut r_pieces = Vec::new();
        let mut r21_pieces = Vec::new();
        let mut betas: Vec<&Vec<i64>> = theta.theta.keys().filter(|b| b.iter().any(|&c| c != 0)).collect();
        betas.sort();
        for beta in betas {
            let c = &theta.theta[beta];
            let mw = &theta.minus.slice(beta).unwrap().words;
            let pw = &theta.plus.slice(beta).unwrap().words;
            let fs: Vec<Matrix<F>> = mw.iter().map(|w| vrep.f_word(w)).collect();
            let es: Vec<Matrix<F>> = pw.iter().map(|w| vrep.e_word(w)).collect();
            for (v, word) in pw.iter().enumerate() {
                let mut m = Matrix::zeros(vrep.dim, vrep.dim);
                for (u, fu) in fs.iter().enumerate() {
                    if !c.get(u, v).is_zero() && !fu.is_zero() {
                        m = m.add(&fu.scale(c.get(u, v)));
                    }
                }
                if !m.is_zero() {
                    r_pieces.push(ThetaPiece { beta: beta.clone(), vec_part: m, word: word.clone() });
                }
            }
            for (u, word) in mw.iter().enumerate() {
                let mut m = Matrix::zeros(vrep.dim, vrep.dim);
                for (v, ev) in es.iter().enumerate() {
                    if !c.get(u, v).is_zero() && !ev.is_zero() {
                        m = m.add(&ev.scale(c.get(u, v)));
                    }
                }
                if !m.is_zero() {
                    r21_pieces.push(ThetaPiece { beta: beta.clone(), vec_part: m, word: word.clone() });
                }
            }
        }
        let e1 = rs.eps(0);
        let eta = vrep
            .weights
            .iter()
            .map(|w| rs.simple_coords(&crate::rootdata::sub(&e1, w)).unwrap())
            .collect();
        TensorModel { module, vrep, r_pieces, r21_pieces, eta, q_cache: Mutex::new(HashMap::new()) }
    }

    /// `ε_1 - wt(w_a)` in simple coordinates.
    pub fn eta(&self, a: usize) -> &[i64] {
        &self.eta[a]
    }

    pub fn slice(&self, legs: usize, gamma: &[i64]) -> Result<TensorSlice, RMatrixError> {
        let d = self.vrep.dim;
        let mut comps = Vec::new();
        let mut index = HashMap::new();
        let mut offset = 0;
        let total = d.pow(legs as u32);
        for code in 0..total {
            let mut idx = Vec::with_capacity(legs);
            let mut c = code;
            for _ in 0..legs {
                idx.push(c % d);
                c /= d;
            }
            idx.reverse();
            let mut beta = gamma.to_vec();
            for &a in &idx {
                for (b, e) in beta.iter_mut().zip(&self.eta[a]) {
                    *b -= e;
                }
            }
            if beta.iter().any(|&x| x < 0) {
                continue;
            }
            let len = self.module.dim(&beta)?;
            if len == 0 {
                continue;
            }
            index.insert((idx.clone(), beta.clone()), comps.len());
            comps.push(Component { idx, beta, offset, len });
            offset += len;
        }
        Ok(TensorSlice { gamma: gamma.to_vec(), comps, dim: offset, index })
    }

    /// Assembles `src → dst` from per-component block images.
    pub fn assemble<G>(&self, src: &TensorSlice, dst: &TensorSlice, image: G) -> Result<Matrix<F>, RMatrixError>
    where
        G: Fn(&Component) -> Result<BlockImage<F>, RMatrixError> + Sync,
    {
        let parts: Vec<(usize, BlockImage<F>)> = src
            .comps
            .par_iter()
            .map(|c| image(c).map(|b| (c.offset, b)))
            .collect::<Result<_, _>>()?;
        let mut m = Matrix::zeros(dst.dim, src.dim);
        for (col, blocks) in parts {
            for (idx, beta, b) in blocks {
                let Some(t) = dst.find(&idx, &beta) else {
                    if b.is_zero() {
                        continue;
                    }
                    return Err(RMatrixError::Escaped);
                };
                for r in 0..b.rows {
                    for c in 0..b.cols {
                        let v = b.get(r, c);
                        if !v.is_zero() {
                            m.add_at(t.offset + r, col + c, v);
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// `q^{t_0}` scalar on `w_a ⊗ M_β`.
    fn t0(&self, a: usize, beta: &[i64]) -> F {
        self.module.q_weight(&self.vrep.weights[a], beta)
    }

    /// `Q` restricted to `w_a ⊗ M_β`, as blocks into `w_b ⊗ M_{β''}`.
    pub fn q_blocks(&self, a: usize, beta: &[i64]) -> Result<QBlocks<F>, RMatrixError> {
        if let Some(b) = self.q_cache.lock().unwrap().get(&(a, beta.to_vec())) {
            return Ok(b.clone());
        }
        let mid = self.r_blocks(a, beta)?;
        let mut acc: HashMap<(usize, Vec<i64>), Matrix<F>> = HashMap::new();
        for (a1, b1, m1) in mid {
            for (a2, b2, m2) in self.r21_blocks(a1, &b1)? {
                let p = m2.mul(&m1);
                match acc.get_mut(&(a2, b2.clone())) {
                    Some(x) => *x = x.add(&p),
                    None => {
                        acc.insert((a2, b2), p);
                    }
                }
            }
        }
        let mut out: Vec<(usize, Vec<i64>, Matrix<F>)> =
            acc.into_iter().filter(|(_, m)| !m.is_zero()).map(|((a, b), m)| (a, b, m)).collect();
        out.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
        let out = Arc::new(out);
        self.q_cache.lock().unwrap().insert((a, beta.to_vec()), out.clone());
        Ok(out)
    }

    /// `(π⊗id)(R)` on `w_a ⊗ M_β`.
    fn r_blocks(&self, a: usize, beta: &[i64]) -> Result<Vec<(usize, Vec<i64>, Matrix<F>)>, RMatrixError> {
        let d = self.module.dim(beta)?;
        let mut out = vec![(a, beta.to_vec(), Matrix::identity(d).scale(&self.t0(a, beta)))];
        for p in &self.r_pieces {
            let target: Vec<i64> = beta.iter().zip(&p.beta).map(|(x, y)| x - y).collect();
            if target.iter().any(|&x| x < 0) {
                continue;
            }
            let mut op: Option<Matrix<F>> = None;
            for a1 in 0..self.vrep.dim {
                let c = p.vec_part.get(a1, a);
                if c.is_zero() {
                    continue;
                }
                let m = match &op {
                    Some(m) => m,
                    None => {
                        op = Some(self.module.e_word(&p.word, beta)?.1);
                        op.as_ref().unwrap()
                    }
                };
                out.push((a1, target.clone(), m.scale(&c.mul(&self.t0(a1, &target)))));
            }
        }
        Ok(out)
    }

    /// `(π⊗id)(R_{21})` on `w_a ⊗ M_β`.
    fn r21_blocks(&self, a: usize, beta: &[i64]) -> Result<Vec<(usize, Vec<i64>, Matrix<F>)>, RMatrixError> {
        let d = self.module.dim(beta)?;
        let mut out = vec![(a, beta.to_vec(), Matrix::identity(d).scale(&self.t0(a, beta)))];
        for p in &self.r21_pieces {
            let target: Vec<i64> = beta.iter().zip(&p.beta).map(|(x, y)| x + y).collect();
            let mut op: Option<Matrix<F>> = None;
            for a1 in 0..self.vrep.dim {
                let c = p.vec_part.get(a1, a);
                if c.is_zero() {
                    continue;
                }
                let m = match &op {
                    Some(m) => m,
                    None => {
                        op = Some(self.module.f_word(&p.word, beta)?.1);
                        op.as_ref().unwrap()
                    }
                };
                out.push((a1, target.clone(), m.scale(&c.mul(&self.t0(a1, &target)))));
            }
        }
        Ok(out)
    }

    /// `Q` acting on the last vector leg and `M` of a tensor slice.
    pub fn q_on_slice(&self, s: &TensorSlice) -> Result<Matrix<F>, RMatrixError> {
        self.assemble(s, s, |c| {
            let last = *c.idx.last().unwrap();
            let head = &c.idx[..c.idx.len() - 1];
            Ok(self
                .q_blocks(last, &c.beta)?
                .iter()
                .map(|(b, beta, m)| {
                    let mut idx = head.to_vec();
                    idx.push(*b);
                    (idx, beta.clone(), m.clone())
                })
                .collect())
        })
    }

    /// An operator on `C^{2n} ⊗ C^{2n}` applied to the first two legs.
    pub fn on_first_two_legs(&self, s: &TensorSlice, x: &Matrix<F>) -> Result<Matrix<F>, RMatrixError> {
        let d = self.vrep.dim;
        self.assemble(s, s, |c| {
            let col = c.idx[0] * d + c.idx[1];
            let mut out = Vec::new();
            for row in 0..d * d {
                let v = x.get(row, col);
                if v.is_zero() {
                    continue;
                }
                let mut idx = c.idx.clone();
                idx[0] = row / d;
                idx[1] = row % d;
                out.push((idx, c.beta.clone(), Matrix::identity(c.len).scale(v)));
            }
            Ok(out)
        })
    }

    /// `Δ(e_i)` from slice `γ` to slice `γ - α_i`.
    pub fn delta_e(&self, i: usize, src: &TensorSlice, dst: &TensorSlice) -> Result<Matrix<F>, RMatrixError> {
        let rs = self.module.rs();
        self.assemble(src, dst, |c| {
            let mut out = Vec::new();
            let mut k_before = F::one();
            for (leg, &a) in c.idx.iter().enumerate() {
                for a1 in 0..self.vrep.dim {
                    let v = self.vrep.e[i].get(a1, a);
                    if !v.is_zero() {
                        let mut idx = c.idx.clone();
                        idx[leg] = a1;
                        out.push((idx, c.beta.clone(), Matrix::identity(c.len).scale(&v.mul(&k_before))));
                    }
                }
                k_before = k_before.mul(&F::q_pow(rs.ip(&rs.simple[i], &self.vrep.weights[a])));
            }
            if c.beta[i] > 0 {
                let mut b = c.beta.clone();
                b[i] -= 1;
                out.push((c.idx.clone(), b, self.module.e(i, &c.beta)?.scale(&k_before)));
            }
            Ok(out)
        })
    }

    /// `Δ(f_i)` from slice `γ` to slice `γ + α_i`.
    pub fn delta_f(&self, i: usize, src: &TensorSlice, dst: &TensorSlice) -> Result<Matrix<F>, RMatrixError> {
        let rs = self.module.rs();
        self.assemble(src, dst, |c| {
            let mut out = Vec::new();
            let mut b = c.beta.clone();
            b[i] += 1;
            out.push((c.idx.clone(), b, self.module.f(i, &c.beta)?));
            // K_i^{-1} on everything to the right of the acting leg.
            let mut k_after = self.module.k_scalar(i, &c.beta).inv().unwrap();
            for leg in (0..c.idx.len()).rev() {
                let a = c.idx[leg];
                for a1 in 0..self.vrep.dim {
                    let v = self.vrep.f[i].get(a1, a);
                    if !v.is_zero() {
                        let mut idx = c.idx.clone();
                        idx[leg] = a1;
                        out.push((idx, c.beta.clone(), Matrix::identity(c.len).scale(&v.mul(&k_after))));
                    }
                }
                k_after = k_after.mul(&F::q_pow(-rs.ip(&rs.simple[i], &self.vrep.weights[a])));
            }
            Ok(out)
        })
    }
}
