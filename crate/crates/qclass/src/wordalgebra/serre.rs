use std::collections::HashMap;

use super::element::{Algebra, Element, Sign};
use crate::linalg::Matrix;
use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("weight {beta:?} has height {height}, above the bound {bound}")]
    HeightBound { beta: Vec<i64>, height: i64, bound: i64 },
    #[error("weight {0:?} is not a nonnegative combination of simple roots")]
    NotInCone(Vec<i64>),
}

/// A Serre element together with its weight in simple coordinates.
#[derive(Debug, Clone)]
pub struct SerreElement<F> {
    pub weight: Vec<i64>,
    pub element: Element<F>,
}

impl<F: Field> Algebra<F> {
    /// The defining relations of `U_q(g_±)`: commutation of non-adjacent
    /// generators, the short-root relation with `q+q^{-1}`, and the two
    /// long-root relations with `q²+q^{-2}` and `q²+1+q^{-2}`.
    pub fn serre_elements(&self, sign: Sign) -> Vec<SerreElement<F>> {
        let n = self.n();
        let long = n - 1;
        let mut out = Vec::new();
        let mut push = |terms: Vec<(Vec<usize>, F)>| {
            let mut e = self.zero(sign);
            for (w, c) in terms {
                e = self.add(&e, &self.scale(&self.word(sign, &w), &c));
            }
            let weight = self.weight(&e).expect("Serre element is homogeneous");
            out.push(SerreElement { weight, element: e });
        };
        let one = F::one();
        let m1 = one.neg();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let ip = self.rs.simple_ip(i, j);
                if ip == 0 {
                    if i < j {
                        push(vec![(vec![i, j], one.clone()), (vec![j, i], m1.clone())]);
                    }
                } else if i != long && j != long {
                    let c = self.qp(1).add(&self.qp(-1)).neg();
                    push(vec![(vec![i, i, j], one.clone()), (vec![i, j, i], c), (vec![j, i, i], one.clone())]);
                } else if i == long {
                    let c = self.qp(2).add(&self.qp(-2)).neg();
                    push(vec![(vec![i, i, j], one.clone()), (vec![i, j, i], c), (vec![j, i, i], one.clone())]);
                } else {
                    let c = self.qp(2).add(&one).add(&self.qp(-2));
                    push(vec![
                        (vec![i, i, i, j], one.clone()),
                        (vec![i, i, j, i], c.neg()),
                        (vec![i, j, i, i], c),
                        (vec![j, i, i, i], m1.clone()),
                    ]);
                }
            }
        }
        out
    }
}

/// All words with the given letter multiplicities, in lexicographic order.
pub fn words_of_weight(beta: &[i64]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total: i64 = beta.iter().sum();
    let mut counts = beta.to_vec();
    let mut cur = Vec::with_capacity(total as usize);
    fn rec(counts: &mut Vec<i64>, cur: &mut Vec<usize>, left: i64, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(i);
                rec(counts, cur, left - 1, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    rec(&mut counts, &mut cur, total, &mut out);
    out
}

/// A weight component of `U_q(g_±)` computed directly in the free word
/// space: the span of all `x·s·y` with `s` a Serre element.
#[derive(Debug, Clone)]
pub struct QuotientSlice<F> {
    pub beta: Vec<i64>,
    pub sign: Sign,
    pub words: Vec<Vec<usize>>,
    /// Row-reduced basis of the Serre subspace.
    pub ideal: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> QuotientSlice<F> {
    pub fn word_dim(&self) -> usize {
        self.words.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.words.len() - self.pivots.len()
    }

    /// Coefficient vector over the words of a pure element of this weight.
    pub fn word_vector(&self, x: &Element<F>) -> Vec<F> {
        let index: HashMap<&Vec<usize>, usize> =
            self.words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut v = vec![F::zero(); self.words.len()];
        for (w, c) in x.words() {
            let k = index[&w];
            v[k] = v[k].add(&c);
        }
        v
    }

    /// Normal form modulo the Serre subspace, as coordinates on the
    /// non-pivot words.
    pub fn project(&self, x: &Element<F>) -> Vec<F> {
        let mut v = self.word_vector(x);
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, a) in self.ideal.row(r).iter().enumerate() {
                if !a.is_zero() {
                    v[j] = v[j].sub(&f.mul(a));
                }
            }
        }
        (0..self.words.len()).filter(|j| !self.pivots.contains(j)).map(|j| v[j].clone()).collect()
    }

    /// Whether a pure element of this weight lies in the Serre ideal.
    pub fn is_zero(&self, x: &Element<F>) -> bool {
        self.project(x).iter().all(|c| c.is_zero())
    }
}

impl<F: Field> Algebra<F> {
    pub fn serre_slice(
        &self,
        sign: Sign,
        beta: &[i64],
        max_height: i64,
    ) -> Result<QuotientSlice<F>, WordError> {
        if beta.iter().any(|&c| c < 0) {
            return Err(WordError::NotInCone(beta.to_vec()));
        }
        let height: i64 = beta.iter().sum();
        if height > max_height {
            return Err(WordError::HeightBound { beta: beta.to_vec(), height, bound: max_height });
        }
        let words = words_of_weight(beta);
        let index: HashMap<Vec<usize>, usize> =
            words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut rows: Vec<Vec<F>> = Vec::new();
        for s in self.serre_elements(sign) {
            let rest: Vec<i64> = beta.iter().zip(&s.weight).map(|(a, b)| a - b).collect();
            if rest.iter().any(|&c| c < 0) {
                continue;
            }
            let sw = s.element.words();
            for left in sub_weights(&rest) {
                let right: Vec<i64> = rest.iter().zip(&left).map(|(a, b)| a - b).collect();
                let lws = words_of_weight(&left);
                let rws = words_of_weight(&right);
                for x in &lws {
                    for y in &rws {
                        let mut row = vec![F::zero(); words.len()];
                        for (w, c) in &sw {
                            let mut full = x.clone();
                            full.extend_from_slice(w);
                            full.extend_from_slice(y);
                            let k = index[&full];
                            row[k] = row[k].add(c);
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let mut ideal = Matrix::from_rows(rows, words.len());
        let pivots = ideal.rref();
        Ok(QuotientSlice { beta: beta.to_vec(), sign, words, ideal, pivots })
    }
}

/// All `γ` with `0 ≤ γ ≤ β` coordinatewise.
pub fn sub_weights(beta: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &b in beta {
        let mut next = Vec::new();
        for prefix in &out {
            for c in 0..=b {
                let mut p = prefix.clone();
                p.push(c);
                next.push(p);
            }
        }
        out = next;
    }
    out
}
