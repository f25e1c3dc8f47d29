use std::collections::BTreeMap;

use crate::rootdata::RootSystem;
use crate::scalars::Field;

/// Raising (`e`) or lowering (`f`) Chevalley generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    E,
    F,
}

/// A word in the Chevalley generators of one sign followed by a Cartan
/// factor `q^{Σ k_i h_{α_i}}`. Letters are simple-root indices; the
/// rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub word: Vec<usize>,
    pub cartan: Vec<i64>,
}

/// Linear combination of decorated words with Cartan factors kept on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element<F> {
    pub sign: Sign,
    pub terms: BTreeMap<Term, F>,
}

/// Generators and structure constants shared by all word computations:
/// the root system and the value of `q` (a variable, or `1` classically).
#[derive(Debug, Clone)]
pub struct Algebra<F> {
    pub rs: RootSystem,
    pub q: F,
}

impl<F: Field> Algebra<F> {
    pub fn new(rs: RootSystem, q: F) -> Self {
        Algebra { rs, q }
    }

    pub fn n(&self) -> usize {
        self.rs.n
    }

    pub fn qp(&self, k: i64) -> F {
        self.q.pow(k)
    }

    /// `q_i = q^{d_i}`.
    pub fn qi(&self, i: usize) -> F {
        self.qp(self.rs.d(i))
    }

    pub fn zero(&self, sign: Sign) -> Element<F> {
        Element { sign, terms: BTreeMap::new() }
    }

    pub fn scalar(&self, sign: Sign, c: F) -> Element<F> {
        self.term(sign, vec![], vec![0; self.n()], c)
    }

    pub fn one(&self, sign: Sign) -> Element<F> {
        self.scalar(sign, F::one())
    }

    pub fn term(&self, sign: Sign, word: Vec<usize>, cartan: Vec<i64>, c: F) -> Element<F> {
        let mut e = self.zero(sign);
        if !c.is_zero() {
            e.terms.insert(Term { word, cartan }, c);
        }
        e
    }

    pub fn word(&self, sign: Sign, word: &[usize]) -> Element<F> {
        self.term(sign, word.to_vec(), vec![0; self.n()], F::one())
    }

    pub fn letter(&self, sign: Sign, i: usize) -> Element<F> {
        self.word(sign, &[i])
    }

    /// `q^{Σ k_i h_{α_i}}`.
    pub fn cartan(&self, sign: Sign, k: Vec<i64>) -> Element<F> {
        self.term(sign, vec![], k, F::one())
    }

    pub fn add(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        assert_eq!(x.sign, y.sign);
        let mut out = x.clone();
        for (t, c) in &y.terms {
            add_term(&mut out.terms, t.clone(), c);
        }
        out
    }

    pub fn scale(&self, x: &Element<F>, c: &F) -> Element<F> {
        let mut out = self.zero(x.sign);
        if c.is_zero() {
            return out;
        }
        for (t, v) in &x.terms {
            out.terms.insert(t.clone(), v.mul(c));
        }
        out
    }

    pub fn sub(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        self.add(x, &self.scale(y, &F::one().neg()))
    }

    fn word_weight(&self, w: &[usize]) -> Vec<i64> {
        let mut c = vec![0; self.n()];
        for &l in w {
            c[l] += 1;
        }
        c
    }

    /// Exponent `e` with `q^{Σk_i h_{α_i}} x = q^e x q^{Σk_i h_{α_i}}` for a word `x`.
    fn straighten_exponent(&self, sign: Sign, k: &[i64], word: &[usize]) -> i64 {
        let w = self.word_weight(word);
        let mut e = 0;
        for (i, &ki) in k.iter().enumerate() {
            if ki == 0 {
                continue;
            }
            for (j, &wj) in w.iter().enumerate() {
                if wj != 0 {
                    e += ki * wj * self.rs.simple_ip(i, j);
                }
            }
        }
        match sign {
            Sign::E => e,
            Sign::F => -e,
        }
    }

    pub fn mul(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        assert_eq!(x.sign, y.sign);
        let mut out = self.zero(x.sign);
        for (tx, cx) in &x.terms {
            for (ty, cy) in &y.terms {
                let e = self.straighten_exponent(x.sign, &tx.cartan, &ty.word);
                let mut word = tx.word.clone();
                word.extend_from_slice(&ty.word);
                let cartan = tx.cartan.iter().zip(&ty.cartan).map(|(a, b)| a + b).collect();
                let c = cx.mul(cy).mul(&self.qp(e));
                add_term(&mut out.terms, Term { word, cartan }, &c);
            }
        }
        out
    }

    /// `[x, y]_a = xy - a·yx`.
    pub fn q_commutator(&self, x: &Element<F>, y: &Element<F>, a: &F) -> Element<F> {
        self.sub(&self.mul(x, y), &self.scale(&self.mul(y, x), a))
    }

    /// Simple-root coordinates of the weight if all terms share one.
    pub fn weight(&self, x: &Element<F>) -> Option<Vec<i64>> {
        let mut it = x.terms.keys().map(|t| self.word_weight(&t.word));
        let first = it.next()?;
        if it.all(|w| w == first) {
            Some(first)
        } else {
            None
        }
    }

    /// `f_μ = [f_{α_i}, … [f_{α_{j-1}}, f_{α_j}]_a … ]_a` for `μ = α_i+…+α_j`
    /// (0-based `i ≤ j`), with `a = q` or `a = q^{-1}` for the tilde version.
    pub fn nested(&self, sign: Sign, i: usize, j: usize, a: &F) -> Element<F> {
        let mut x = self.letter(sign, j);
        for k in (i..j).rev() {
            x = self.q_commutator(&self.letter(sign, k), &x, a);
        }
        x
    }

    pub fn f_mu(&self, i: usize, j: usize) -> Element<F> {
        self.nested(Sign::F, i, j, &self.q)
    }

    pub fn f_mu_tilde(&self, i: usize, j: usize) -> Element<F> {
        self.nested(Sign::F, i, j, &self.qp(-1))
    }
}

fn add_term<F: Field>(terms: &mut BTreeMap<Term, F>, t: Term, c: &F) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&t) {
        Some(v) => {
            let s = v.add(c);
            if s.is_zero() {
                terms.remove(&t);
            } else {
                *v = s;
            }
        }
        None => {
            terms.insert(t, c.clone());
        }
    }
}

impl<F: Field> Element<F> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no term carries a Cartan factor.
    pub fn is_pure(&self) -> bool {
        self.terms.keys().all(|t| t.cartan.iter().all(|&k| k == 0))
    }

    /// Words and coefficients of a pure element.
    pub fn words(&self) -> Vec<(Vec<usize>, F)> {
        assert!(self.is_pure(), "element carries Cartan factors");
        self.terms.iter().map(|(t, c)| (t.word.clone(), c.clone())).collect()
    }
}
