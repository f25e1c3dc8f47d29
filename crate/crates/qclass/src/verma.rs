//! Truncated exact models of the parabolic Verma module `M̂_λ`, its quotient
//! `M_λ` by the submodule generated by `f_δ v`, and the full Verma module.

use std::collections::HashMap;

use crate::linalg::Matrix;
use crate::rootdata::{kostant_count, BlockStructure, RootSystem, WeightAssignment};
use crate::scalars::QField;
use crate::wordalgebra::{
    phi_words, Algebra, Derivation, Element, Relation, Sign, Tower, WordError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VermaError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("the quotient by f_delta v needs the kappa-type weight")]
    NotKappa,
    #[error("e_{index} does not preserve the relations at {weights:?}")]
    Unstable { index: usize, weights: Vec<Vec<i64>> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `M̂_λ`: `f_μ v = 0` for the Levi simple roots.
    HatM,
    /// `M_λ = M̂_λ / U_q(g) f_δ v`.
    M,
}

#[derive(Debug, Clone)]
pub struct ModuleSpec<F> {
    pub blocks: BlockStructure,
    pub weights: WeightAssignment<F>,
    pub variant: Variant,
    pub depth: usize,
}

/// A highest-weight module truncated at a height bound, with the actions
/// of all Chevalley generators on every slice `λ - β`.
#[derive(Debug, Clone)]
pub struct Module<F> {
    pub tower: Tower<F>,
    /// `q^{(λ,ε_j)}`.
    pub values: Vec<F>,
    e: Vec<Derivation<F>>,
}

impl<F: QField> Module<F> {
    pub fn new(spec: &ModuleSpec<F>) -> Result<Self, VermaError> {
        let rs = spec.blocks.roots.clone();
        let alg = Algebra::new(rs.clone(), F::q());
        let mut extra: Vec<Relation<F>> = spec
            .blocks
            .levi_simple()
            .into_iter()
            .map(|i| {
                let mut w = vec![0; rs.n];
                w[i] = 1;
                Relation { weight: w, element: alg.letter(Sign::F, i) }
            })
            .collect();
        if spec.variant == Variant::M {
            if !spec.weights.is_kappa() {
                return Err(VermaError::NotKappa);
            }
            let fd = alg.delta_vectors(&spec.blocks).f_delta;
            let w = rs.simple_coords(&spec.blocks.delta()).unwrap();
            extra.push(Relation { weight: w, element: fd });
        }
        Self::build(alg, spec.weights.values.clone(), spec.depth, extra)
    }

    /// The Verma module with no parabolic relations and arbitrary
    /// values `q^{(λ,ε_j)}`.
    pub fn free(rs: RootSystem, values: Vec<F>, depth: usize) -> Result<Self, VermaError> {
        Self::build(Algebra::new(rs, F::q()), values, depth, vec![])
    }

    fn build(alg: Algebra<F>, values: Vec<F>, depth: usize, extra: Vec<Relation<F>>) -> Result<Self, VermaError> {
        let tower = Tower::new(alg, Sign::F, depth, extra);
        let mut m = Module { tower, values, e: vec![] };
        let n = m.n();
        let e: Vec<Derivation<F>> = (0..n)
            .map(|i| m.tower.derivation(i, |_, _| F::one(), |bm| m.k_bracket(i, bm)))
            .collect();
        for d in &e {
            if !d.unstable.is_empty() {
                return Err(VermaError::Unstable { index: d.index, weights: d.unstable.clone() });
            }
        }
        m.e = e;
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.tower.n()
    }

    pub fn rs(&self) -> &RootSystem {
        &self.tower.alg.rs
    }

    pub fn alg(&self) -> &Algebra<F> {
        &self.tower.alg
    }

    pub fn depth(&self) -> usize {
        self.tower.depth
    }

    pub fn zero_beta(&self) -> Vec<i64> {
        vec![0; self.n()]
    }

    pub fn dim(&self, beta: &[i64]) -> Result<usize, VermaError> {
        Ok(self.tower.dim(beta)?)
    }

    /// `q^{(λ,μ)}` for an ε-vector `μ`.
    pub fn q_lambda(&self, mu: &[i64]) -> F {
        let mut r = F::one();
        for (v, &e) in self.values.iter().zip(mu) {
            if e != 0 {
                r = r.mul(&v.pow(e));
            }
        }
        r
    }

    /// `q^{(μ, λ-β)}` for an ε-vector `μ` and a weight offset `β` in simple coordinates.
    pub fn q_weight(&self, mu: &[i64], beta: &[i64]) -> F {
        let be = self.rs().from_simple_coords(beta);
        self.q_lambda(mu).mul(&F::q_pow(-self.rs().ip(mu, &be)))
    }

    /// Scalar of `K_i = q^{h_{α_i}}` on the slice `λ - β`.
    pub fn k_scalar(&self, i: usize, beta: &[i64]) -> F {
        self.q_weight(&self.rs().simple[i].clone(), beta)
    }

    /// `(K_i - K_i^{-1})/(q_i - q_i^{-1})` on the slice `λ - β`.
    pub fn k_bracket(&self, i: usize, beta: &[i64]) -> F {
        let k = self.k_scalar(i, beta);
        let d = self.rs().d(i);
        k.sub(&k.inv().unwrap()).div(&F::q_pow(d).sub(&F::q_pow(-d)))
    }

    /// `e_i : M_β → M_{β-α_i}`.
    pub fn e(&self, i: usize, beta: &[i64]) -> Result<Matrix<F>, VermaError> {
        self.tower.check_depth(beta)?;
        Ok(self.e[i].at(beta).cloned().unwrap_or_else(|| Matrix::zeros(0, self.tower.dim(beta).unwrap_or(0))))
    }

    /// `f_i : M_β → M_{β+α_i}`.
    pub fn f(&self, i: usize, beta: &[i64]) -> Result<Matrix<F>, VermaError> {
        let mut t = beta.to_vec();
        t[i] += 1;
        self.tower.check_depth(&t)?;
        let rows = self.tower.dim(&t)?;
        let cols = self.tower.dim(beta)?;
        Ok(self.tower.fmat(i, &t).cloned().unwrap_or_else(|| Matrix::zeros(rows, cols)))
    }

    /// Matrix of a word in `e`'s (rightmost letter first) from `M_β`.
    pub fn e_word(&self, word: &[usize], beta: &[i64]) -> Result<(Vec<i64>, Matrix<F>), VermaError> {
        let mut b = beta.to_vec();
        let mut m = Matrix::identity(self.tower.dim(beta)?);
        for &l in word.iter().rev() {
            let e = self.e(l, &b)?;
            b[l] -= 1;
            if b[l] < 0 {
                return Ok((b, Matrix::zeros(0, m.cols)));
            }
            m = e.mul(&m);
        }
        Ok((b, m))
    }

    /// Matrix of a decorated element of either sign from `M_β`; Cartan
    /// factors act first.
    pub fn operator(&self, x: &Element<F>, beta: &[i64]) -> Result<(Vec<i64>, Matrix<F>), VermaError> {
        let n = self.n();
        let wt = self.alg().weight(x).unwrap_or_else(|| vec![0; n]);
        let target: Vec<i64> = match x.sign {
            Sign::F => beta.iter().zip(&wt).map(|(a, b)| a + b).collect(),
            Sign::E => beta.iter().zip(&wt).map(|(a, b)| a - b).collect(),
        };
        let cols = self.tower.dim(beta)?;
        if target.iter().any(|&c| c < 0) {
            return Ok((target, Matrix::zeros(0, cols)));
        }
        self.tower.check_depth(&target)?;
        let rows = self.tower.dim(&target)?;
        let mut out = Matrix::zeros(rows, cols);
        for (t, c) in &x.terms {
            let mut mu = vec![0i64; n];
            for (i, &k) in t.cartan.iter().enumerate() {
                for (x, a) in mu.iter_mut().zip(&self.rs().simple[i]) {
                    *x += k * a;
                }
            }
            let scalar = c.mul(&self.q_weight(&mu, beta));
            let m = match x.sign {
                Sign::F => self.f_word(&t.word, beta)?.1,
                Sign::E => self.e_word(&t.word, beta)?.1,
            };
            out = out.add(&m.scale(&scalar));
        }
        Ok((target, out))
    }

    /// Matrix of a word in `f`'s (rightmost letter first) from `M_β`.
    pub fn f_word(&self, word: &[usize], beta: &[i64]) -> Result<(Vec<i64>, Matrix<F>), VermaError> {
        let mut b = beta.to_vec();
        let mut m = Matrix::identity(self.tower.dim(beta)?);
        for &l in word.iter().rev() {
            let f = self.f(l, &b)?;
            b[l] += 1;
            m = f.mul(&m);
        }
        Ok((b, m))
    }

    /// `x·v` for a pure element `x`.
    pub fn vector_of(&self, x: &Element<F>) -> Result<(Vec<i64>, Vec<F>), VermaError> {
        Ok(self.tower.vector_of(x)?)
    }

    pub fn word_vector(&self, word: &[usize]) -> Result<(Vec<i64>, Vec<F>), VermaError> {
        Ok(self.tower.apply_word(word, &self.zero_beta(), &[F::one()])?)
    }

    /// Joint kernel of all `e_i` on `M_β`.
    pub fn singular_vectors(&self, beta: &[i64]) -> Result<Vec<Vec<F>>, VermaError> {
        let d = self.tower.dim(beta)?;
        let mut stacked = Matrix::zeros(0, d);
        for i in 0..self.n() {
            stacked = stacked.vcat(&self.e(i, beta)?);
        }
        Ok(stacked.kernel())
    }

    /// `[e_i, f_j] - δ_{ij}(K_i - K_i^{-1})/(q_i - q_i^{-1})` vanishes on `M_β`.
    pub fn check_commutator(&self, i: usize, j: usize, beta: &[i64]) -> Result<bool, VermaError> {
        let mut up = beta.to_vec();
        up[j] += 1;
        let lhs1 = self.e(i, &up)?.mul(&self.f(j, beta)?);
        let mut down = beta.to_vec();
        down[i] -= 1;
        let d = self.tower.dim(beta)?;
        let lhs2 = if down[i] < 0 {
            Matrix::zeros(lhs1.rows, d)
        } else {
            self.f(j, &down)?.mul(&self.e(i, beta)?)
        };
        let mut diff = lhs1.sub(&lhs2);
        if i == j {
            diff = diff.sub(&Matrix::identity(d).scale(&self.k_bracket(i, beta)));
        }
        Ok(diff.is_zero())
    }

    /// The Serre elements of sign `sign` act by zero on `M_β`.
    pub fn check_serre(&self, sign: Sign, beta: &[i64]) -> Result<bool, VermaError> {
        for s in self.alg().serre_elements(sign) {
            let (target, m) = self.operator(&s.element, beta)?;
            if target.iter().any(|&c| c < 0) {
                continue;
            }
            if !m.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Slice dimension against the free-basis oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionMismatch {
    pub beta: Vec<i64>,
    pub computed: usize,
    pub expected: u64,
}

/// Compares every slice within depth with the number of multisets of the
/// generating roots: `R⁺∖R⁺_l` for `M̂_λ`, `R⁺∖R⁺_k` for `M_λ`.
pub fn verify_dimensions<F: QField>(
    m: &Module<F>,
    blocks: &BlockStructure,
    variant: Variant,
) -> Vec<DimensionMismatch> {
    let gens = match variant {
        Variant::HatM => blocks.complement(&blocks.levi_roots()),
        Variant::M => blocks.complement(&blocks.stabilizer_roots()),
    };
    let rs = m.rs();
    let mut out = Vec::new();
    for beta in m.tower.weights() {
        let computed = m.tower.dim(beta).unwrap();
        let expected = kostant_count(rs, &rs.from_simple_coords(beta), &gens);
        if computed as u64 != expected {
            out.push(DimensionMismatch { beta: beta.clone(), computed, expected });
        }
    }
    out
}

/// Result of expanding `f_δ v` over the vectors `φ_i v`.
#[derive(Debug, Clone)]
pub struct PhiExpansion<F> {
    pub coefficients: Vec<F>,
    /// Rank of `{φ_i v}` in the slice `δ`.
    pub rank: usize,
}

/// Solves `f_δ v = Σ c_i φ_i v` in the slice `λ - δ` using the monomials
/// with the given indices (1-based, as in `φ_1,…,φ_{p+1}`).
pub fn expand_in_phis<F: QField>(
    m: &Module<F>,
    blocks: &BlockStructure,
    which: &[usize],
) -> Result<Option<PhiExpansion<F>>, VermaError> {
    let fd = m.alg().delta_vectors(blocks).f_delta;
    let (beta, target) = m.vector_of(&fd)?;
    let words = phi_words(blocks);
    let cols: Vec<Vec<F>> = which
        .iter()
        .map(|&i| m.word_vector(&words[i - 1]).map(|(_, v)| v))
        .collect::<Result<_, _>>()?;
    let d = m.dim(&beta)?;
    let mut a = Matrix::zeros(d, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            a.set(i, j, v.clone());
        }
    }
    let rank = a.rank();
    let b = Matrix::from_rows(target.iter().map(|x| vec![x.clone()]).collect(), 1);
    Ok(a.solve(&b).map(|x| PhiExpansion { coefficients: x.column(0), rank }))
}

/// Cache of modules keyed by variant, shared by the suites of one case.
pub type ModuleCache<F> = HashMap<Variant, Module<F>>;
