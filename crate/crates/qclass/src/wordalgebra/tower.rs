use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::element::{Algebra, Element, Sign};
use super::serre::{SerreElement, WordError};
use crate::linalg::Matrix;
use crate::scalars::Field;

/// An extra defining relation `x·v = 0` for a pure element `x`.
#[derive(Debug, Clone)]
pub struct Relation<F> {
    pub weight: Vec<i64>,
    pub element: Element<F>,
}

/// Coordinates `f_l · M_{β-α_l}` inside the free cover of a slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub letter: usize,
    pub offset: usize,
    pub len: usize,
}

/// One weight component `M_β`, presented as the quotient of
/// `A_β = ⊕_l f_l·M_{β-α_l}` by the relations born at `β`.
#[derive(Debug, Clone)]
pub struct Slice<F> {
    pub beta: Vec<i64>,
    pub blocks: Vec<Block>,
    pub adim: usize,
    /// Row-reduced relation subspace of `A_β`.
    pub rels: Matrix<F>,
    pub pivots: Vec<usize>,
    /// Non-pivot coordinates of `A_β`; they index the basis of `M_β`.
    pub basis: Vec<usize>,
    /// `f_l : M_{β-α_l} → M_β`.
    pub fmat: BTreeMap<usize, Matrix<F>>,
    pub words: Vec<Vec<usize>>,
}

impl<F: Field> Slice<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn block(&self, letter: usize) -> Option<&Block> {
        self.blocks.iter().find(|b| b.letter == letter)
    }

    /// Normal form of a vector of `A_β`.
    pub fn reduce(&self, a: &[F]) -> Vec<F> {
        if self.beta.iter().all(|&c| c == 0) {
            return a.to_vec();
        }
        let mut out: Vec<F> = self.basis.iter().map(|&c| a[c].clone()).collect();
        for (r, &p) in self.pivots.iter().enumerate() {
            if a[p].is_zero() {
                continue;
            }
            let row = self.rels.row(r);
            for (t, &c) in self.basis.iter().enumerate() {
                if !row[c].is_zero() {
                    out[t] = out[t].sub(&a[p].mul(&row[c]));
                }
            }
        }
        out
    }
}

/// A cyclic module over `U_q(g_±)` truncated at a height bound:
/// the free algebra on the generators modulo the Serre ideal and the
/// left ideal generated by the extra relations. With no extra relations
/// this is `U_q(g_±)` itself.
#[derive(Debug, Clone)]
pub struct Tower<F> {
    pub alg: Algebra<F>,
    pub sign: Sign,
    pub depth: usize,
    pub extra: Vec<Relation<F>>,
    slices: HashMap<Vec<i64>, Slice<F>>,
    order: Vec<Vec<i64>>,
}

impl<F: Field> Tower<F> {
    pub fn new(alg: Algebra<F>, sign: Sign, depth: usize, extra: Vec<Relation<F>>) -> Self {
        let serre = alg.serre_elements(sign);
        let order = alg.rs.cone_up_to(depth);
        let mut t = Tower { alg, sign, depth, extra, slices: HashMap::new(), order: order.clone() };
        for h in 0..=depth as i64 {
            let layer: Vec<&Vec<i64>> = order.iter().filter(|b| b.iter().sum::<i64>() == h).collect();
            let built: Vec<Slice<F>> = layer.par_iter().map(|b| t.build_slice(b, &serre)).collect();
            for s in built {
                t.slices.insert(s.beta.clone(), s);
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    /// Weights of all slices, ordered by height.
    pub fn weights(&self) -> &[Vec<i64>] {
        &self.order
    }

    pub fn slice(&self, beta: &[i64]) -> Option<&Slice<F>> {
        self.slices.get(beta)
    }

    pub fn check_depth(&self, beta: &[i64]) -> Result<(), WordError> {
        if beta.iter().any(|&c| c < 0) {
            return Err(WordError::NotInCone(beta.to_vec()));
        }
        let h: i64 = beta.iter().sum();
        if h > self.depth as i64 {
            return Err(WordError::HeightBound { beta: beta.to_vec(), height: h, bound: self.depth as i64 });
        }
        Ok(())
    }

    /// Dimension of `M_β`; zero outside the cone.
    pub fn dim(&self, beta: &[i64]) -> Result<usize, WordError> {
        if beta.iter().any(|&c| c < 0) {
            return Ok(0);
        }
        self.check_depth(beta)?;
        Ok(self.slices[beta].dim())
    }

    fn zero_beta(&self) -> Vec<i64> {
        vec![0; self.n()]
    }

    fn shifted(beta: &[i64], l: usize, k: i64) -> Vec<i64> {
        let mut b = beta.to_vec();
        b[l] += k;
        b
    }

    fn build_slice(&self, beta: &[i64], serre: &[SerreElement<F>]) -> Slice<F> {
        let n = self.n();
        if beta.iter().all(|&c| c == 0) {
            return Slice {
                beta: beta.to_vec(),
                blocks: vec![],
                adim: 1,
                rels: Matrix::zeros(0, 1),
                pivots: vec![],
                basis: vec![0],
                fmat: BTreeMap::new(),
                words: vec![vec![]],
            };
        }
        let mut blocks = Vec::new();
        let mut adim = 0;
        for l in 0..n {
            if beta[l] == 0 {
                continue;
            }
            let lower = &self.slices[&Self::shifted(beta, l, -1)];
            if lower.dim() > 0 {
                blocks.push(Block { letter: l, offset: adim, len: lower.dim() });
                adim += lower.dim();
            }
        }
        let mut rows: Vec<Vec<F>> = Vec::new();
        for s in serre {
            let rest: Vec<i64> = beta.iter().zip(&s.weight).map(|(a, b)| a - b).collect();
            if rest.iter().any(|&c| c < 0) {
                continue;
            }
            let d = self.slices[&rest].dim();
            for k in 0..d {
                let mut unit = vec![F::zero(); d];
                unit[k] = F::one();
                let row = self.lift_to_cover(&s.element, &rest, &unit, beta, &blocks, adim);
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        for r in &self.extra {
            if r.weight == beta {
                let row = self.lift_to_cover(&r.element, &self.zero_beta(), &[F::one()], beta, &blocks, adim);
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let mut rels = Matrix::from_rows(rows, adim);
        let pivots = rels.rref();
        let basis: Vec<usize> = (0..adim).filter(|c| !pivots.contains(c)).collect();
        let mut slice = Slice {
            beta: beta.to_vec(),
            blocks: blocks.clone(),
            adim,
            rels,
            pivots,
            basis,
            fmat: BTreeMap::new(),
            words: vec![],
        };
        let dim = slice.dim();
        for b in &blocks {
            let mut m = Matrix::zeros(dim, b.len);
            for k in 0..b.len {
                let mut a = vec![F::zero(); adim];
                a[b.offset + k] = F::one();
                let col = slice.reduce(&a);
                for (t, v) in col.into_iter().enumerate() {
                    m.set(t, k, v);
                }
            }
            slice.fmat.insert(b.letter, m);
        }
        slice.words = slice
            .basis
            .iter()
            .map(|&c| {
                let b = blocks.iter().find(|b| c >= b.offset && c < b.offset + b.len).unwrap();
                let lower = &self.slices[&Self::shifted(beta, b.letter, -1)];
                let mut w = vec![b.letter];
                w.extend_from_slice(&lower.words[c - b.offset]);
                w
            })
            .collect();
        slice
    }

    /// `x·m` in the free cover `A_β`, for `m ∈ M_from`.
    fn lift_to_cover(
        &self,
        x: &Element<F>,
        from: &[i64],
        m: &[F],
        beta: &[i64],
        blocks: &[Block],
        adim: usize,
    ) -> Vec<F> {
        let mut out = vec![F::zero(); adim];
        for (w, c) in x.words() {
            let (first, rest) = w.split_first().expect("relation of positive degree");
            let Some(b) = blocks.iter().find(|b| b.letter == *first) else {
                continue;
            };
            let (lb, v) = self.apply_word_unchecked(rest, from, m);
            debug_assert_eq!(Self::shifted(&lb, *first, 1), beta);
            for (k, val) in v.iter().enumerate() {
                if !val.is_zero() {
                    out[b.offset + k] = out[b.offset + k].add(&c.mul(val));
                }
            }
        }
        out
    }

    fn apply_word_unchecked(&self, word: &[usize], from: &[i64], m: &[F]) -> (Vec<i64>, Vec<F>) {
        let mut beta = from.to_vec();
        let mut v = m.to_vec();
        for &l in word.iter().rev() {
            beta[l] += 1;
            let s = &self.slices[&beta];
            v = match s.fmat.get(&l) {
                Some(f) if v.iter().any(|x| !x.is_zero()) => f.mul_vec(&v),
                _ => vec![F::zero(); s.dim()],
            };
        }
        (beta, v)
    }

    /// The letter matrix `M_{β-α_l} → M_β` (`None` when either side is zero).
    pub fn fmat(&self, l: usize, beta: &[i64]) -> Option<&Matrix<F>> {
        self.slices.get(beta)?.fmat.get(&l)
    }

    /// Applies a word to `m ∈ M_from`; returns the target weight and vector.
    pub fn apply_word(&self, word: &[usize], from: &[i64], m: &[F]) -> Result<(Vec<i64>, Vec<F>), WordError> {
        let mut target = from.to_vec();
        for &l in word {
            target[l] += 1;
        }
        self.check_depth(&target)?;
        Ok(self.apply_word_unchecked(word, from, m))
    }

    /// Applies a pure homogeneous element to `m ∈ M_from`.
    pub fn apply(&self, x: &Element<F>, from: &[i64], m: &[F]) -> Result<(Vec<i64>, Vec<F>), WordError> {
        let w = self.alg.weight(x).unwrap_or_else(|| self.zero_beta());
        let target: Vec<i64> = from.iter().zip(&w).map(|(a, b)| a + b).collect();
        self.check_depth(&target)?;
        let mut out = vec![F::zero(); self.slices[&target].dim()];
        for (word, c) in x.words() {
            let (_, v) = self.apply_word_unchecked(&word, from, m);
            for (o, val) in out.iter_mut().zip(v) {
                if !val.is_zero() {
                    *o = o.add(&c.mul(&val));
                }
            }
        }
        Ok((target, out))
    }

    /// `x·v` for the generating vector `v`.
    pub fn vector_of(&self, x: &Element<F>) -> Result<(Vec<i64>, Vec<F>), WordError> {
        self.apply(x, &self.zero_beta(), &[F::one()])
    }

    /// Matrix of right multiplication `y ↦ y·g_l` from `M_β` to `M_{β+α_l}`
    /// (meaningful when there are no extra relations).
    pub fn right_mul(&self, l: usize, beta: &[i64]) -> Result<Matrix<F>, WordError> {
        let target = Self::shifted(beta, l, 1);
        self.check_depth(&target)?;
        let s = &self.slices[beta];
        let mut m = Matrix::zeros(self.slices[&target].dim(), s.dim());
        for (k, w) in s.words.iter().enumerate() {
            let mut word = w.clone();
            word.push(l);
            let (_, v) = self.apply_word_unchecked(&word, &self.zero_beta(), &[F::one()]);
            for (t, val) in v.into_iter().enumerate() {
                m.set(t, k, val);
            }
        }
        Ok(m)
    }

    /// Builds the operator `D: M_β → M_{β-α_i}` determined by
    /// `D(v) = 0` and `D(g_j m) = c(j, β_m)·g_j D(m) + δ_{ij}·b(β_m)·m`,
    /// where `β_m` is the weight of `m`. Returns the matrices together with
    /// the weights where `D` fails to vanish on the relations (an empty list
    /// means `D` is well defined on the quotient).
    pub fn derivation<C, B>(&self, i: usize, coeff: C, base: B) -> Derivation<F>
    where
        C: Fn(usize, &[i64]) -> F + Sync,
        B: Fn(&[i64]) -> F + Sync,
    {
        let mut mats: HashMap<Vec<i64>, Matrix<F>> = HashMap::new();
        let mut unstable = Vec::new();
        for h in 0..=self.depth as i64 {
            let layer: Vec<&Vec<i64>> = self.order.iter().filter(|b| b.iter().sum::<i64>() == h).collect();
            let built: Vec<(Vec<i64>, Matrix<F>, bool)> = layer
                .par_iter()
                .map(|beta| {
                    let (m, ok) = self.derivation_slice(i, beta, &coeff, &base, &mats);
                    ((*beta).clone(), m, ok)
                })
                .collect();
            for (b, m, ok) in built {
                if !ok {
                    unstable.push(b.clone());
                }
                mats.insert(b, m);
            }
        }
        Derivation { index: i, mats, unstable }
    }

    fn derivation_slice<C, B>(
        &self,
        i: usize,
        beta: &[i64],
        coeff: &C,
        base: &B,
        done: &HashMap<Vec<i64>, Matrix<F>>,
    ) -> (Matrix<F>, bool)
    where
        C: Fn(usize, &[i64]) -> F,
        B: Fn(&[i64]) -> F,
    {
        let s = &self.slices[beta];
        let target = Self::shifted(beta, i, -1);
        let tdim = if target[i] < 0 { 0 } else { self.slices[&target].dim() };
        if tdim == 0 || beta.iter().all(|&c| c == 0) {
            return (Matrix::zeros(tdim, s.dim()), true);
        }
        let mut da = Matrix::zeros(tdim, s.adim);
        for b in &s.blocks {
            let j = b.letter;
            let bm = Self::shifted(beta, j, -1);
            let c = coeff(j, &bm);
            let lower = &done[&bm];
            if !c.is_zero() && lower.rows > 0 {
                if let Some(fj) = self.slices[&target].fmat.get(&j) {
                    let prod = fj.mul(lower).scale(&c);
                    for k in 0..b.len {
                        for t in 0..tdim {
                            da.set(t, b.offset + k, prod.get(t, k).clone());
                        }
                    }
                }
            }
            if j == i {
                let bv = base(&bm);
                for k in 0..b.len {
                    da.add_at(k, b.offset + k, &bv);
                }
            }
        }
        let ok = s.rels.rows == 0 || da.mul(&s.rels.transpose()).is_zero();
        let mut d = Matrix::zeros(tdim, s.dim());
        for (t, &c) in s.basis.iter().enumerate() {
            for r in 0..tdim {
                d.set(r, t, da.get(r, c).clone());
            }
        }
        (d, ok)
    }
}

/// Per-slice matrices of an operator lowering the weight offset by `α_i`.
#[derive(Debug, Clone)]
pub struct Derivation<F> {
    pub index: usize,
    pub mats: HashMap<Vec<i64>, Matrix<F>>,
    pub unstable: Vec<Vec<i64>>,
}

impl<F: Field> Derivation<F> {
    pub fn at(&self, beta: &[i64]) -> Option<&Matrix<F>> {
        self.mats.get(beta)
    }
}
