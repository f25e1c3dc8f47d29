use crate::linalg::Matrix;
use crate::rootdata::{RootSystem, Weight};
use crate::scalars::QField;
use crate::wordalgebra::{Element, Sign};

/// The natural representation `π` on `C^{2n}` with basis `w_1,…,w_{2n}` of
/// weights `ε_1,…,ε_n,-ε_n,…,-ε_1` (0-based here).
#[derive(Debug, Clone)]
pub struct VectorRep<F> {
    pub rs: RootSystem,
    pub dim: usize,
    pub e: Vec<Matrix<F>>,
    pub f: Vec<Matrix<F>>,
    pub weights: Vec<Weight>,
}

impl<F: QField> VectorRep<F> {
    pub fn new(n: usize) -> Self {
        let rs = RootSystem::new(n);
        let dim = 2 * n;
        let weights = (0..dim)
            .map(|a| if a < n { rs.eps(a) } else { rootdata_neg(&rs.eps(dim - 1 - a)) })
            .collect();
        let unit = |r: usize, c: usize, s: i64| {
            let mut m = Matrix::zeros(dim, dim);
            m.set(r, c, F::from_int(s));
            m
        };
        let e: Vec<Matrix<F>> = (0..n)
            .map(|i| {
                if i + 1 < n {
                    unit(i, i + 1, 1).add(&unit(dim - 2 - i, dim - 1 - i, -1))
                } else {
                    unit(n - 1, n, 1)
                }
            })
            .collect();
        let f = e.iter().map(|m| m.transpose()).collect();
        VectorRep { rs, dim, e, f, weights }
    }

    pub fn n(&self) -> usize {
        self.rs.n
    }

    /// `i ↦ i'`.
    pub fn prime(&self, a: usize) -> usize {
        self.dim - 1 - a
    }

    /// `ε_a = ±1`: the sign in the invariant form `C_{ab} = ε_a δ_{ab'}`.
    pub fn sign(&self, a: usize) -> i64 {
        if a < self.n() { 1 } else { -1 }
    }

    /// `ρ_a = (ρ, wt w_a)`.
    pub fn rho(&self, a: usize) -> i64 {
        self.rs.ip(&self.rs.rho, &self.weights[a])
    }

    /// `q^{h_μ}` as a diagonal matrix, `μ` an ε-vector.
    pub fn q_h(&self, mu: &[i64]) -> Matrix<F> {
        Matrix::diag(self.weights.iter().map(|w| F::q_pow(self.rs.ip(mu, w))).collect())
    }

    pub fn k(&self, i: usize) -> Matrix<F> {
        self.q_h(&self.rs.simple[i].clone())
    }

    /// `π(q^{2h_ρ})`.
    pub fn q_two_rho(&self) -> Matrix<F> {
        Matrix::diag((0..self.dim).map(|a| F::q_pow(2 * self.rho(a))).collect())
    }

    /// `π(x)` for a decorated element; Cartan factors act first.
    pub fn eval(&self, x: &Element<F>) -> Matrix<F> {
        let gens = match x.sign {
            Sign::E => &self.e,
            Sign::F => &self.f,
        };
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (t, c) in &x.terms {
            let mut m = self.word(gens, &t.word);
            let mut mu = vec![0i64; self.n()];
            for (i, &k) in t.cartan.iter().enumerate() {
                for (x, a) in mu.iter_mut().zip(&self.rs.simple[i]) {
                    *x += k * a;
                }
            }
            m = m.mul(&self.q_h(&mu));
            out = out.add(&m.scale(c));
        }
        out
    }

    fn word(&self, gens: &[Matrix<F>], word: &[usize]) -> Matrix<F> {
        let mut m = Matrix::identity(self.dim);
        for &l in word {
            m = m.mul(&gens[l]);
        }
        m
    }

    pub fn e_word(&self, word: &[usize]) -> Matrix<F> {
        self.word(&self.e, word)
    }

    pub fn f_word(&self, word: &[usize]) -> Matrix<F> {
        self.word(&self.f, word)
    }

    /// Names of the defining relations that fail (empty when all hold).
    pub fn failed_relations(&self) -> Vec<String> {
        let n = self.n();
        let mut bad = Vec::new();
        for i in 0..n {
            let d = self.rs.d(i);
            let k = self.k(i);
            let kinv = k.inverse().unwrap();
            let denom = F::q_pow(d).sub(&F::q_pow(-d));
            for j in 0..n {
                let kj = self.k(j);
                let kj_inv = kj.inverse().unwrap();
                let a = F::q_pow(self.rs.simple_ip(j, i));
                if kj.mul(&self.e[i]).mul(&kj_inv) != self.e[i].scale(&a) {
                    bad.push(format!("K_{j} e_{i} K_{j}^-1"));
                }
                if kj.mul(&self.f[i]).mul(&kj_inv) != self.f[i].scale(&a.inv().unwrap()) {
                    bad.push(format!("K_{j} f_{i} K_{j}^-1"));
                }
                let comm = self.e[i].mul(&self.f[j]).sub(&self.f[j].mul(&self.e[i]));
                let expected = if i == j {
                    k.sub(&kinv).scale(&denom.inv().unwrap())
                } else {
                    Matrix::zeros(self.dim, self.dim)
                };
                if comm != expected {
                    bad.push(format!("[e_{i}, f_{j}]"));
                }
            }
        }
        let alg = crate::wordalgebra::Algebra::new(self.rs.clone(), F::q());
        for sign in [Sign::E, Sign::F] {
            for s in alg.serre_elements(sign) {
                if !self.eval(&s.element).is_zero() {
                    bad.push(format!("Serre {:?} {:?}", sign, s.weight));
                }
            }
        }
        bad
    }
}

fn rootdata_neg(w: &[i64]) -> Weight {
    w.iter().map(|x| -x).collect()
}
