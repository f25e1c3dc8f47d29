//! Root system of `sp(2n)` in the ε basis, block structures
//! `(n_1,…,n_l; m, p)` and the scalar assignments `q^{(λ,·)}`.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::scalars::{GaussRat, QField};

/// An integer vector in the ε basis.
pub type Weight = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootDataError {
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("mu parameters need the kappa-type assignment, got a generic one")]
    GenericAssignment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub n: usize,
    /// `α_1,…,α_{n-1}, β` as ε-vectors; index `n-1` is the long root `β`.
    pub simple: Vec<Weight>,
    pub rho: Weight,
}

impl RootSystem {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        let mut simple = Vec::with_capacity(n);
        for i in 0..n - 1 {
            let mut a = vec![0; n];
            a[i] = 1;
            a[i + 1] = -1;
            simple.push(a);
        }
        let mut b = vec![0; n];
        b[n - 1] = 2;
        simple.push(b);
        let rho = (0..n).map(|i| (n - i) as i64).collect();
        RootSystem { n, simple, rho }
    }

    pub fn ip(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    /// `d_i = (α_i,α_i)/2`, so that `q_i = q^{d_i}`.
    pub fn d(&self, i: usize) -> i64 {
        if i + 1 == self.n {
            2
        } else {
            1
        }
    }

    pub fn simple_ip(&self, i: usize, j: usize) -> i64 {
        self.ip(&self.simple[i], &self.simple[j])
    }

    pub fn zero(&self) -> Weight {
        vec![0; self.n]
    }

    pub fn eps(&self, j: usize) -> Weight {
        let mut e = vec![0; self.n];
        e[j] = 1;
        e
    }

    /// Coordinates with respect to the simple roots, if `w` lies in the root lattice.
    pub fn simple_coords(&self, w: &[i64]) -> Option<Vec<i64>> {
        let n = self.n;
        let mut c = vec![0; n];
        let mut acc = 0;
        for j in 0..n - 1 {
            acc += w[j];
            c[j] = acc;
        }
        let total: i64 = w.iter().sum();
        if total % 2 != 0 {
            return None;
        }
        c[n - 1] = total / 2;
        Some(c)
    }

    pub fn from_simple_coords(&self, c: &[i64]) -> Weight {
        let mut w = self.zero();
        for (i, &ci) in c.iter().enumerate() {
            for (x, a) in w.iter_mut().zip(&self.simple[i]) {
                *x += ci * a;
            }
        }
        w
    }

    pub fn height(&self, w: &[i64]) -> Option<i64> {
        self.simple_coords(w).map(|c| c.iter().sum())
    }

    /// Positive roots `ε_i-ε_j`, `ε_i+ε_j` (i<j) and `2ε_i`, ordered by height.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut a = self.zero();
                a[i] = 1;
                a[j] = -1;
                out.push(a);
                let mut b = self.zero();
                b[i] = 1;
                b[j] = 1;
                out.push(b);
            }
            let mut c = self.zero();
            c[i] = 2;
            out.push(c);
        }
        out.sort_by_key(|r| (self.height(r).unwrap(), r.clone()));
        out
    }

    /// All nonnegative combinations of simple roots of height at most `depth`,
    /// as simple coordinates, ordered by height.
    pub fn cone_up_to(&self, depth: usize) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.n]];
        let mut layer = out.clone();
        for _ in 0..depth {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for c in &layer {
                for i in 0..self.n {
                    let mut d = c.clone();
                    d[i] += 1;
                    if !next.contains(&d) {
                        next.push(d);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

pub fn add(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Weight {
    a.iter().map(|x| k * x).collect()
}

/// Which block an ε coordinate belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    Gl(usize),
    M,
    P,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    pub n: usize,
    pub gl: Vec<usize>,
    pub m: usize,
    pub p: usize,
    pub roots: RootSystem,
}

impl BlockStructure {
    pub fn new(n: usize, gl: Vec<usize>, m: usize, p: usize) -> Result<Self, RootDataError> {
        if m == 0 || p == 0 || gl.iter().any(|&x| x == 0) {
            return Err(RootDataError::BadPartition("all parts must be positive".into()));
        }
        let total: usize = gl.iter().sum::<usize>() + m + p;
        if total != n {
            return Err(RootDataError::BadPartition(format!("parts sum to {total}, rank is {n}")));
        }
        Ok(BlockStructure { n, gl, m, p, roots: RootSystem::new(n) })
    }

    /// Parses `"n1,…,nl;m,p"`, e.g. `"1;1,1"` or `";1,2"`.
    pub fn parse(n: usize, s: &str) -> Result<Self, RootDataError> {
        let bad = || RootDataError::BadPartition(format!("cannot parse {s:?}"));
        let (head, tail) = s.split_once(';').ok_or_else(bad)?;
        let mut gl = Vec::new();
        if !head.trim().is_empty() {
            for part in head.split(',') {
                gl.push(part.trim().parse::<usize>().map_err(|_| bad())?);
            }
        }
        let (m, p) = tail.split_once(',').ok_or_else(bad)?;
        let m = m.trim().parse::<usize>().map_err(|_| bad())?;
        let p = p.trim().parse::<usize>().map_err(|_| bad())?;
        Self::new(n, gl, m, p)
    }

    pub fn ell(&self) -> usize {
        self.gl.len()
    }

    /// Sum of the GL block sizes.
    pub fn gl_total(&self) -> usize {
        self.gl.iter().sum()
    }

    /// First ε index (0-based) of each block: GL blocks, then m, then p.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut starts = Vec::new();
        let mut acc = 0;
        for &s in &self.gl {
            starts.push(acc);
            acc += s;
        }
        starts.push(acc);
        starts.push(acc + self.m);
        starts
    }

    pub fn block_of(&self, j: usize) -> Block {
        let mut acc = 0;
        for (i, &s) in self.gl.iter().enumerate() {
            if j < acc + s {
                return Block::Gl(i);
            }
            acc += s;
        }
        if j < acc + self.m {
            Block::M
        } else {
            Block::P
        }
    }

    /// Index of the distinguished simple root `α = α_{n-p}`.
    pub fn alpha_index(&self) -> usize {
        self.n - self.p - 1
    }

    /// Simple root indices excluded from the Levi: the connecting roots.
    pub fn connecting(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0;
        for &s in &self.gl {
            acc += s;
            out.push(acc - 1);
        }
        out.push(self.alpha_index());
        out
    }

    pub fn levi_simple(&self) -> Vec<usize> {
        let c = self.connecting();
        (0..self.n).filter(|i| !c.contains(i)).collect()
    }

    pub fn is_levi_simple(&self, i: usize) -> bool {
        !self.connecting().contains(&i)
    }

    pub fn alpha(&self) -> Weight {
        self.roots.simple[self.alpha_index()].clone()
    }

    /// `γ = α_{n-p} + … + α_{n-1}` (short roots only).
    pub fn gamma(&self) -> Weight {
        let mut g = self.roots.zero();
        for i in self.alpha_index()..self.n - 1 {
            g = add(&g, &self.roots.simple[i]);
        }
        g
    }

    /// `δ = 2γ + β = 2ε_{n-p}`.
    pub fn delta(&self) -> Weight {
        add(&scale(&self.gamma(), 2), &self.roots.simple[self.n - 1])
    }

    /// Positive roots of the Levi subalgebra.
    pub fn levi_roots(&self) -> Vec<Weight> {
        let c = self.connecting();
        self.roots
            .positive_roots()
            .into_iter()
            .filter(|r| {
                let sc = self.roots.simple_coords(r).unwrap();
                c.iter().all(|&i| sc[i] == 0)
            })
            .collect()
    }

    /// Positive roots of the stabilizer `gl(n_1)⊕…⊕gl(n_l)⊕sp(2m)⊕sp(2p)`.
    pub fn stabilizer_roots(&self) -> Vec<Weight> {
        self.roots
            .positive_roots()
            .into_iter()
            .filter(|r| {
                let support: Vec<usize> = (0..self.n).filter(|&j| r[j] != 0).collect();
                let blocks: Vec<Block> = support.iter().map(|&j| self.block_of(j)).collect();
                if blocks.windows(2).any(|w| w[0] != w[1]) {
                    return false;
                }
                match blocks[0] {
                    Block::Gl(_) => r.iter().sum::<i64>() == 0,
                    Block::M | Block::P => true,
                }
            })
            .collect()
    }

    /// Positive roots outside a given subset.
    pub fn complement(&self, sub: &[Weight]) -> Vec<Weight> {
        self.roots.positive_roots().into_iter().filter(|r| !sub.contains(r)).collect()
    }
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gl: Vec<String> = self.gl.iter().map(|x| x.to_string()).collect();
        write!(f, "{};{},{}", gl.join(","), self.m, self.p)
    }
}

/// How the value of `q^{(λ,ε_j)}` on the m-block is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MBlock<F> {
    /// `i·q^{-p}`, so that `q^{2(λ,α)} = -q^{-2p}`.
    Kappa,
    /// A free unit `t` in place of `i·q^{-p}`.
    Generic(F),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment<F> {
    pub z: Vec<F>,
    pub mode: MBlock<F>,
    /// `q^{(λ,ε_j)}` for every coordinate.
    pub values: Vec<F>,
}

impl<F: QField> WeightAssignment<F> {
    pub fn new(b: &BlockStructure, z: Vec<F>, mode: MBlock<F>) -> Self {
        assert_eq!(z.len(), b.ell());
        let m_value = match &mode {
            MBlock::Kappa => F::imag().mul(&F::q_pow(-(b.p as i64))),
            MBlock::Generic(t) => t.clone(),
        };
        let values = (0..b.n)
            .map(|j| match b.block_of(j) {
                Block::Gl(i) => z[i].clone(),
                Block::M => m_value.clone(),
                Block::P => F::one(),
            })
            .collect();
        WeightAssignment { z, mode, values }
    }

    /// `z_i` taken as adjoined variables `1..=l` (and `t` as the next one
    /// when `generic`); `q` is variable 0.
    pub fn symbolic(b: &BlockStructure, generic: bool) -> Self {
        let z: Vec<F> = (0..b.ell()).map(|i| F::var(i + 1)).collect();
        let mode = if generic { MBlock::Generic(F::var(b.ell() + 1)) } else { MBlock::Kappa };
        Self::new(b, z, mode)
    }

    /// `z_i` specialized to random nonzero Gaussian rationals.
    pub fn specialized(b: &BlockStructure, rng: &mut ChaCha8Rng, generic_t: Option<F>) -> Self {
        let z = (0..b.ell()).map(|_| F::from_gauss(&random_unit(rng))).collect();
        let mode = generic_t.map_or(MBlock::Kappa, MBlock::Generic);
        Self::new(b, z, mode)
    }

    pub fn is_kappa(&self) -> bool {
        matches!(self.mode, MBlock::Kappa)
    }

    /// `q^{(λ,μ)}`.
    pub fn q_pow(&self, mu: &[i64]) -> F {
        let mut r = F::one();
        for (v, &e) in self.values.iter().zip(mu) {
            if e != 0 {
                r = r.mul(&v.pow(e));
            }
        }
        r
    }

    /// `q^{(λ,α_i)}`.
    pub fn q_pow_simple(&self, roots: &RootSystem, i: usize) -> F {
        self.q_pow(&roots.simple[i])
    }
}

/// A random Gaussian rational with small numerator and denominator, never zero.
pub fn random_unit(rng: &mut ChaCha8Rng) -> GaussRat {
    loop {
        let a = rng.gen_range(-9i64..=9);
        let b = rng.gen_range(1i64..=7);
        let c = rng.gen_range(-5i64..=5);
        let d = rng.gen_range(1i64..=7);
        let g = GaussRat::from_frac(a, b).add(&GaussRat::i().mul(&GaussRat::from_frac(c, d)));
        if !g.is_zero() && g != GaussRat::one() && g != GaussRat::one().neg() {
            return g;
        }
    }
}

/// `μ_i = z_i² q^{-2(n_1+…+n_{i-1})}`, `μ_{l+1} = -q^{-2(Σn_i+p)}`, `μ_{l+2} = q^{-2(Σn_i+m)}`.
pub fn mu_parameters<F: QField>(
    b: &BlockStructure,
    w: &WeightAssignment<F>,
) -> Result<Vec<F>, RootDataError> {
    if !w.is_kappa() {
        return Err(RootDataError::GenericAssignment);
    }
    let mut out = Vec::with_capacity(b.ell() + 2);
    let mut acc = 0i64;
    for (i, &s) in b.gl.iter().enumerate() {
        out.push(w.z[i].mul(&w.z[i]).mul(&F::q_pow(-2 * acc)));
        acc += s as i64;
    }
    out.push(F::q_pow(-2 * (acc + b.p as i64)).neg());
    out.push(F::q_pow(-2 * (acc + b.m as i64)));
    Ok(out)
}

/// Number of multisets of `generators` (positive roots) summing to `target`,
/// by direct enumeration.
pub fn kostant_count(roots: &RootSystem, target: &[i64], generators: &[Weight]) -> u64 {
    let Some(t) = roots.simple_coords(target) else {
        return 0;
    };
    let gens: Vec<Vec<i64>> = generators.iter().map(|g| roots.simple_coords(g).unwrap()).collect();
    let mut memo = HashMap::new();
    count_rec(&t, &gens, 0, &mut memo)
}

fn count_rec(
    t: &[i64],
    gens: &[Vec<i64>],
    idx: usize,
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> u64 {
    if t.iter().all(|&x| x == 0) {
        return 1;
    }
    if idx == gens.len() || t.iter().any(|&x| x < 0) {
        return 0;
    }
    let key = (t.to_vec(), idx);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut rest = t.to_vec();
    loop {
        total += count_rec(&rest, gens, idx + 1, memo);
        rest = sub(&rest, &gens[idx]);
        if rest.iter().any(|&x| x < 0) {
            break;
        }
    }
    memo.insert(key, total);
    total
}
