//! Classical conjugacy classes: Jacobian-rank certificates for the defining
//! ideals of semisimple classes in `GL(N)` and `SP(2n)`, and trace values at
//! the diagonal initial point.

use crate::linalg::Matrix;
use crate::report::Check;
use crate::rootdata::BlockStructure;
use crate::scalars::GaussRat;

pub mod anchors {
    pub const GL_IDEAL: &str = "generates the defining ideal";
    pub const SP_IDEAL: &str = "generate the defining ideal of the class";
    pub const TRACES: &str = "determined by the set of polynomial equations";
    pub const BRIDGE: &str = "μ⁰ = lim_{q→1}μ";
    pub const COLLAPSE: &str = "acquires a non-simple factor (x+1)²";
    pub const RADICAL: &str = "coincides with the defining ideal";
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassError {
    #[error("eigenvalues must be pairwise distinct")]
    RepeatedEigenvalue,
    #[error("eigenvalue list is not closed under inversion with the required pattern")]
    NotSymplectic,
    #[error("malformed class description: {0}")]
    Parse(String),
}

pub type Q = GaussRat;

/// A semisimple class given by its distinct eigenvalues and multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    Gl { eigen: Vec<(Q, usize)> },
    /// `μ_1,…,μ_l` of multiplicities `n_i`, then `-1` (mult `2m`) and `1` (mult `2p`).
    Sp { blocks: BlockStructure, mu: Vec<Q> },
}

impl ClassSpec {
    pub fn gl(eigen: Vec<(Q, usize)>) -> Result<Self, ClassError> {
        for (i, a) in eigen.iter().enumerate() {
            if eigen[..i].iter().any(|b| b.0 == a.0) {
                return Err(ClassError::RepeatedEigenvalue);
            }
        }
        Ok(ClassSpec::Gl { eigen })
    }

    pub fn sp(blocks: BlockStructure, mu: Vec<Q>) -> Result<Self, ClassError> {
        if mu.len() != blocks.ell() {
            return Err(ClassError::NotSymplectic);
        }
        let mut all: Vec<Q> = vec![Q::one(), Q::one().neg()];
        for x in &mu {
            let inv = x.inv().ok_or(ClassError::NotSymplectic)?;
            for y in [x.clone(), inv] {
                if all.contains(&y) {
                    return Err(ClassError::RepeatedEigenvalue);
                }
                all.push(y);
            }
        }
        Ok(ClassSpec::Sp { blocks, mu })
    }

    /// Parses a group name (`gl` or `sp`) and `eigenvalue:multiplicity` pairs,
    /// e.g. `("gl", "2:1,3:2")` or `("sp", "4:1,-1:2,1:2,1/4:1")`. For `sp`
    /// the pairs give every eigenvalue of `o`: `-1` with multiplicity `2m`,
    /// `1` with `2p`, and each `μ_i` together with `μ_i^{-1}`.
    pub fn parse(group: &str, pairs: &str) -> Result<Self, ClassError> {
        let bad = || ClassError::Parse(format!("{group} {pairs}"));
        let num = |t: &str| -> Result<Q, ClassError> {
            let t = t.trim();
            match t.split_once('/') {
                Some((a, b)) => {
                    let (a, b): (i64, i64) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
                    if b == 0 {
                        return Err(bad());
                    }
                    Ok(Q::from_frac(a, b))
                }
                None => Ok(Q::from_int(t.parse().map_err(|_| bad())?)),
            }
        };
        let eigen = pairs
            .split(',')
            .map(|p| {
                let (v, k) = p.rsplit_once(':').ok_or_else(bad)?;
                let k: usize = k.trim().parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                Ok((num(v)?, k))
            })
            .collect::<Result<Vec<_>, ClassError>>()?;
        match group.trim().to_ascii_lowercase().as_str() {
            "gl" => Self::gl(eigen),
            "sp" => {
                let mult = |x: &Q| eigen.iter().find(|(y, _)| y == x).map(|e| e.1);
                let (m2, p2) = (mult(&Q::one().neg()).ok_or_else(bad)?, mult(&Q::one()).ok_or_else(bad)?);
                if m2 % 2 != 0 || p2 % 2 != 0 {
                    return Err(ClassError::NotSymplectic);
                }
                let mut mu: Vec<Q> = Vec::new();
                let mut gl = Vec::new();
                for (x, k) in &eigen {
                    if x.is_one() || *x == Q::one().neg() {
                        continue;
                    }
                    let inv = x.inv().ok_or(ClassError::NotSymplectic)?;
                    if mu.contains(&inv) {
                        continue;
                    }
                    if mult(&inv) != Some(*k) {
                        return Err(ClassError::NotSymplectic);
                    }
                    mu.push(x.clone());
                    gl.push(*k);
                }
                let n = gl.iter().sum::<usize>() + (m2 + p2) / 2;
                let blocks = BlockStructure::new(n, gl, m2 / 2, p2 / 2).map_err(|_| bad())?;
                Self::sp(blocks, mu)
            }
            _ => Err(bad()),
        }
    }

    /// Eigenvalues with multiplicities in the order of the diagonal of `o`.
    pub fn diagonal(&self) -> Vec<Q> {
        match self {
            ClassSpec::Gl { eigen } => eigen.iter().flat_map(|(x, k)| std::iter::repeat_n(x.clone(), *k)).collect(),
            ClassSpec::Sp { blocks, mu } => {
                let mut d = Vec::new();
                for (x, &k) in mu.iter().zip(&blocks.gl) {
                    d.extend(std::iter::repeat_n(x.clone(), k));
                }
                d.extend(std::iter::repeat_n(Q::one().neg(), blocks.m));
                d.extend(std::iter::repeat_n(Q::one(), 2 * blocks.p));
                d.extend(std::iter::repeat_n(Q::one().neg(), blocks.m));
                for (x, &k) in mu.iter().zip(&blocks.gl).rev() {
                    d.extend(std::iter::repeat_n(x.inv().unwrap(), k));
                }
                d
            }
        }
    }

    /// Distinct eigenvalues: the roots of the minimal polynomial.
    pub fn distinct(&self) -> Vec<Q> {
        let mut out: Vec<Q> = Vec::new();
        for x in self.diagonal() {
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.diagonal().len()
    }

    pub fn initial_point(&self) -> Matrix<Q> {
        Matrix::diag(self.diagonal())
    }

    /// `dim O`: `N² - Σ n_i²` for `GL`, `n(2n+1) - dim K` for `SP`.
    pub fn orbit_dim(&self) -> usize {
        match self {
            ClassSpec::Gl { eigen } => {
                let n = self.size();
                n * n - eigen.iter().map(|(_, k)| k * k).sum::<usize>()
            }
            ClassSpec::Sp { blocks, .. } => {
                let n = blocks.n;
                n * (2 * n + 1) - stabilizer_dim(blocks)
            }
        }
    }
}

/// `Σ n_i² + m(2m+1) + p(2p+1)`.
pub fn stabilizer_dim(b: &BlockStructure) -> usize {
    b.gl.iter().map(|k| k * k).sum::<usize>() + b.m * (2 * b.m + 1) + b.p * (2 * b.p + 1)
}

/// The form `C_{ij} = ε_i δ_{ij'}`.
pub fn symplectic_form(n: usize) -> Matrix<Q> {
    let d = 2 * n;
    let mut c = Matrix::zeros(d, d);
    for i in 0..d {
        c.set(i, d - 1 - i, Q::from_int(if i < n { 1 } else { -1 }));
    }
    c
}

fn unit(d: usize, a: usize, b: usize) -> Matrix<Q> {
    let mut m = Matrix::zeros(d, d);
    m.set(a, b, Q::one());
    m
}

/// Matrix of a linear map `gl(d) → V` given on the matrix units `E_ab`.
fn linear_map(d: usize, f: impl Fn(&Matrix<Q>) -> Vec<Q>) -> Matrix<Q> {
    let cols: Vec<Vec<Q>> = (0..d * d).map(|k| f(&unit(d, k / d, k % d))).collect();
    let rows = cols[0].len();
    let mut m = Matrix::zeros(rows, d * d);
    for (j, c) in cols.iter().enumerate() {
        for (i, x) in c.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    m
}

/// `ξ ↦ d/dt Π (o + tξ - μ_i)` at `t = 0`.
pub fn d_min_poly(o: &Matrix<Q>, roots: &[Q], xi: &Matrix<Q>) -> Matrix<Q> {
    let d = o.rows;
    let factors: Vec<Matrix<Q>> = roots.iter().map(|r| o.sub(&Matrix::identity(d).scale(r))).collect();
    let mut total = Matrix::zeros(d, d);
    for k in 0..factors.len() {
        let mut p = Matrix::identity(d);
        for (i, f) in factors.iter().enumerate() {
            p = p.mul(if i == k { xi } else { f });
        }
        total = total.add(&p);
    }
    total
}

/// `ξ ↦ ξ C oᵗ C + o C ξᵗ C`, the differential of `H(A) = A C Aᵗ C + 1`.
pub fn d_symplectic(o: &Matrix<Q>, c: &Matrix<Q>, xi: &Matrix<Q>) -> Matrix<Q> {
    xi.mul(c).mul(&o.transpose()).mul(c).add(&o.mul(c).mul(&xi.transpose()).mul(c))
}

fn product(o: &Matrix<Q>, roots: &[Q]) -> Matrix<Q> {
    let d = o.rows;
    roots.iter().fold(Matrix::identity(d), |p, r| p.mul(&o.sub(&Matrix::identity(d).scale(r))))
}

/// Dimension of `ker dF_o` (and of `ker dH_o ∩ ker dF_o` for `SP`) at `g o g^{-1}`.
pub fn jacobian_kernel_dim(spec: &ClassSpec, g: Option<&Matrix<Q>>) -> usize {
    kernel_dim_for_roots(spec, &spec.distinct(), g)
}

/// As [`jacobian_kernel_dim`] with `F = Π (A - r)` over the given roots,
/// repetitions allowed.
pub fn kernel_dim_for_roots(spec: &ClassSpec, roots: &[Q], g: Option<&Matrix<Q>>) -> usize {
    let mut o = spec.initial_point();
    if let Some(g) = g {
        o = g.mul(&o).mul(&g.inverse().unwrap());
    }
    let d = o.rows;
    let df = linear_map(d, |xi| d_min_poly(&o, roots, xi).entries().to_vec());
    let full = match spec {
        ClassSpec::Gl { .. } => df,
        ClassSpec::Sp { blocks, .. } => {
            let c = symplectic_form(blocks.n);
            df.vcat(&linear_map(d, |xi| d_symplectic(&o, &c, xi).entries().to_vec()))
        }
    };
    d * d - full.rank()
}

/// `Tr(o^k)`.
pub fn trace_power(o: &Matrix<Q>, k: u32) -> Q {
    let mut p = Matrix::identity(o.rows);
    for _ in 0..k {
        p = p.mul(o);
    }
    p.trace()
}

/// A symplectic matrix `Π (1 + t_k X_k)` over nilpotent root elements.
pub fn random_symplectic(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Matrix<Q> {
    let d = 2 * n;
    let mut gens = Vec::new();
    for i in 0..n {
        let x = if i + 1 < n {
            unit(d, i, i + 1).sub(&unit(d, d - 2 - i, d - 1 - i))
        } else {
            unit(d, n - 1, n)
        };
        gens.push(x.transpose());
        gens.push(x);
    }
    let mut g = Matrix::identity(d);
    for _ in 0..3 {
        for x in &gens {
            let t = crate::rootdata::random_unit(rng).re;
            let t = Q::new(t, num_rational::BigRational::from_integer(0.into()));
            g = g.mul(&Matrix::identity(d).add(&x.scale(&t)));
        }
    }
    g
}

/// All checks for one class.
pub fn verify_class(spec: &ClassSpec, rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Check> {
    let mut checks = Vec::new();
    let o = spec.initial_point();
    let roots = spec.distinct();
    let d = o.rows;
    let expected = spec.orbit_dim();
    let kd = jacobian_kernel_dim(spec, None);
    let (anchor, label) = match spec {
        ClassSpec::Gl { .. } => (anchors::GL_IDEAL, "dim ker dF_o = dim O"),
        ClassSpec::Sp { .. } => (anchors::SP_IDEAL, "dim ker (dH_o ⊕ dF_o) = dim O"),
    };
    checks.push(Check::new(anchor, label, kd == expected, Some(format!("kernel {kd}, expected {expected}"))));
    checks.push(Check::new(anchors::RADICAL, "F(o) = 0", product(&o, &roots).is_zero(), None));
    match spec {
        ClassSpec::Gl { .. } => {
            // dF vanishes off the eigen-blocks and is injective on them.
            let diag = spec.diagonal();
            let mut off_ok = true;
            let mut block_ok = true;
            for a in 0..d {
                for b in 0..d {
                    let img = d_min_poly(&o, &roots, &unit(d, a, b));
                    if diag[a] != diag[b] {
                        off_ok &= img.is_zero();
                    } else {
                        block_ok &= !img.is_zero();
                    }
                }
            }
            checks.push(Check::new(anchors::GL_IDEAL, "dF_o vanishes on off-block directions", off_ok, None));
            checks.push(Check::new(anchors::GL_IDEAL, "dF_o is injective on block-diagonal directions", block_ok, None));
            let df = linear_map(d, |xi| d_min_poly(&o, &roots, xi).entries().to_vec());
            let mut redundant = true;
            for k in 1..=d as u32 {
                let mut ok = Matrix::identity(d);
                for _ in 1..k {
                    ok = ok.mul(&o);
                }
                let dt = linear_map(d, |xi| vec![ok.mul(xi).trace().mul(&Q::from_int(k as i64))]);
                redundant &= df.vcat(&dt).rank() == df.rank();
            }
            checks.push(Check::new(anchors::GL_IDEAL, "ker dF_o ⊆ ker dϑ_k", redundant, None));
        }
        ClassSpec::Sp { blocks, .. } => {
            let c = symplectic_form(blocks.n);
            let h = o.mul(&c).mul(&o.transpose()).mul(&c).add(&Matrix::identity(d));
            checks.push(Check::new(anchors::SP_IDEAL, "H(o) = 0", h.is_zero(), None));
            // dim K from the commutant of o in sp(2n).
            let comm = linear_map(d, |xi| {
                let mut v = xi.transpose().mul(&c).add(&c.mul(xi)).entries().to_vec();
                v.extend(xi.mul(&o).sub(&o.mul(xi)).entries().iter().cloned());
                v
            });
            let kdim = d * d - comm.rank();
            checks.push(Check::new(
                anchors::SP_IDEAL,
                "dim K from the block structure equals the commutant dimension",
                kdim == stabilizer_dim(blocks),
                Some(kdim.to_string()),
            ));
            let g = random_symplectic(blocks.n, rng);
            let sym = g.transpose().mul(&c).mul(&g) == c;
            let kd2 = jacobian_kernel_dim(spec, Some(&g));
            checks.push(Check::new(anchors::SP_IDEAL, "kernel dimension is stable under symplectic conjugation", sym && kd2 == expected, Some(kd2.to_string())));
            let mut traces_ok = true;
            let mut witness = None;
            let mu0: Vec<Q> = match spec {
                ClassSpec::Sp { mu, .. } => mu.clone(),
                _ => unreachable!(),
            };
            for k in 1..=2 * blocks.n as u32 {
                let t = trace_power(&o, k);
                let e = crate::quantization::classical_trace(blocks, &mu0, k as i64);
                if t != e {
                    traces_ok = false;
                    witness = Some(format!("k={k}"));
                }
            }
            checks.push(Check::new(anchors::TRACES, "Tr(o^k) = Σ n_i(μ_i^k+μ_i^{-k}) + 2m(-1)^k + 2p, k ≤ 2n", traces_ok, witness));
        }
    }
    checks
}

/// Classical limits of the quantum data against the class of `o`:
/// `μ⁰ = lim μ`, the roots on `M_λ` tend to the eigenvalues of `o`, the extra
/// root on `M̂_λ` tends to `-1`, and `χ^λ(τ_k)` tends to `Tr(o^k)`.
pub fn verify_bridge(
    b: &BlockStructure,
    w: &crate::rootdata::WeightAssignment<crate::scalars::Qq>,
) -> Result<Vec<Check>, crate::quantization::QuantError> {
    use crate::quantization::{character_value, eigenvalues_hatm, eigenvalues_m};
    use crate::scalars::{Field, QField};
    let lim = |x: &crate::scalars::Qq| x.classical_limit().map_err(|_| crate::quantization::QuantError::Degenerate);
    let mut checks = Vec::new();
    let mu = crate::rootdata::mu_parameters(b, w)?;
    let mu0: Vec<Q> = mu.iter().map(lim).collect::<Result<_, _>>()?;
    let z2: Vec<Q> = w.z.iter().map(|z| lim(&z.mul(z))).collect::<Result<_, _>>()?;
    let mut expect = z2.clone();
    expect.push(Q::one().neg());
    expect.push(Q::one());
    checks.push(Check::new(anchors::BRIDGE, "lim μ = (z_1²,…,z_l², -1, 1)", mu0 == expect, None));

    let spec = ClassSpec::sp(b.clone(), z2.clone()).map_err(|_| crate::quantization::QuantError::Degenerate)?;
    let mut classes = spec.distinct();
    let mut roots: Vec<Q> = eigenvalues_m(b, w)?.iter().map(lim).collect::<Result<_, _>>()?;
    let key = |x: &Q| format!("{x:?}");
    classes.sort_by_key(key);
    roots.sort_by_key(key);
    checks.push(Check::new(
        anchors::BRIDGE,
        "roots on M_λ tend to the distinct eigenvalues of o",
        roots == classes,
        None,
    ));
    let hat = eigenvalues_hatm(b, w)?;
    let extra = lim(&hat[2 * b.ell() + 1])?;
    checks.push(Check::new(
        anchors::COLLAPSE,
        "the extra root on M̂_λ tends to -1",
        extra == Q::one().neg(),
        Some(format!("{extra:?}")),
    ));
    let mut hat0: Vec<Q> = hat.iter().map(lim).collect::<Result<_, _>>()?;
    hat0.sort_by_key(key);
    let kd = kernel_dim_for_roots(&spec, &hat0, None);
    checks.push(Check::new(
        anchors::COLLAPSE,
        "the limit of the polynomial on M̂_λ does not cut out the class",
        kd > spec.orbit_dim(),
        Some(format!("kernel {kd}, dim O {}", spec.orbit_dim())),
    ));
    let o = spec.initial_point();
    let mut ok = true;
    for k in 1..=2 * b.n as u32 {
        ok &= lim(&character_value(b, w, k as i64)?)? == trace_power(&o, k);
    }
    checks.push(Check::new(anchors::TRACES, "lim χ^λ(τ_k) = Tr(o^k), k ≤ 2n", ok, None));
    Ok(checks)
}
