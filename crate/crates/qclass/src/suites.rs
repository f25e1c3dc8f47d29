//! Named groups of checks over one case, and the anchor registry used for
//! coverage summaries.

use std::cell::OnceCell;
use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::{self, ClassSpec};
use crate::linalg::Matrix;
use crate::quantization::{self as qz, Workspace};
use crate::report::{CaseInfo, Check, Report};
use crate::rmatrix::*;
use crate::rootdata::{self, random_unit, BlockStructure, MBlock, RootDataError, RootSystem, WeightAssignment};
use crate::scalars::{format_scalar, parse_scalar, q_integer, Field, GaussRat, QField, Qq, Qq1, Qq2};
use crate::verma::{expand_in_phis, verify_dimensions, Module, ModuleSpec, Variant, VermaError};
use crate::wordalgebra::{phi_words, psi_words, Algebra, Element, Sign, Tower, WordError};

pub mod anchors {
    pub const Q_EXP: &str = "q_μ = q = e^ħ";
    pub const KAPPA_COND: &str = "characterized by the condition";
    pub const LIMIT: &str = "classical limit μ⁰ = lim_{q→1} μ";
    pub const CARTAN: &str = "(α_i,α_i)=2, (α_{i−1},α_i)=−1";
    pub const RHO: &str = "ρ_i = −ρ_{i'}";
    pub const DELTA: &str = "δ = 2α_{n−p}+…+2α_{n−1}+β";
    pub const STABILIZER: &str = "K = GL(n₁)×…×SP(2p)";
    pub const MU: &str = "Define μ ∈ C^{ℓ+2}[q,q^{−1}]";
    pub const FREE: &str = "is free over";
    pub const BASIS: &str = "form a basis";
    pub const SERRE: &str = "satisfy the Serre relations";
    pub const Q_COMMUTATOR: &str = "[x,y]_a designates the combination xy−ayx";
    pub const JACOBI: &str = "which holds true in any associative algebra";
    pub const F_DELTA: &str = "introduce the vector";
    pub const PRESENTABLE: &str = "is presentable in the form";
    pub const ENTER: &str = "enter g or none";
    pub const PHI: &str = "Introduce monomials φ_i";
    pub const PSI: &str = "Introduce the monomials ψ_i";
    pub const DEGREE: &str = "of degree 2p+1";
    pub const CHEVALLEY: &str = "Chevalley generators commute to";
    pub const NIL: &str = "assigns nil to the Chevalley generators";
    pub const SINGULAR: &str = "is a singular vector in";
    pub const IFF: &str = "turns zero if and only if";
    pub const CHAINS: &str = "For all i=1,…,p";
    pub const SPANNED: &str = "is spanned by the vector";
    pub const LINEAR_COMBINATION: &str = "is a linear combination of the monomials";
    pub const AUX: &str = "some commutation relations involving these root vectors";
    pub const QUOTIENT: &str = "we denote by M_λ the quotient module";
    pub const PI: &str = "denote by π the homomorphism";
    pub const Q_INDEPENDENT: &str = "are independent of q";
    pub const EXPLICIT_R: &str = "equal, up to a scalar factor, to";
    pub const STANDARD: &str = "the so called standard solution";
    pub const KAPPA: &str = "projector κ onto the trivial";
    pub const IDEMPOTENTS: &str = "generates three invariant idempotents";
}

/// Suites in dependency order.
pub const SUITES: [&str; 10] =
    ["scalars", "rootdata", "wordalgebra", "verma", "rmatrix", "minpoly", "qtrace", "reflection", "filtration", "classical"];

/// Anchors each suite can report on.
pub fn registry(suite: &str) -> &'static [&'static str] {
    use anchors::*;
    use classical::anchors as ca;
    use qz::anchors as qa;
    match suite {
        "scalars" => &[Q_EXP, KAPPA_COND, LIMIT],
        "rootdata" => &[CARTAN, RHO, DELTA, STABILIZER, MU, KAPPA_COND, FREE],
        "wordalgebra" => &[BASIS, SERRE, Q_COMMUTATOR, JACOBI, F_DELTA, PRESENTABLE, ENTER, PHI, PSI, DEGREE],
        "verma" => {
            &[FREE, CHEVALLEY, SERRE, NIL, KAPPA_COND, SINGULAR, IFF, CHAINS, SPANNED, LINEAR_COMBINATION, AUX, QUOTIENT]
        }
        "rmatrix" => &[PI, Q_INDEPENDENT, SERRE, EXPLICIT_R, STANDARD, KAPPA, IDEMPOTENTS, qa::INVARIANT_Q],
        "minpoly" => &[qa::EIGEN_NU, qa::EIGEN_HATM, qa::MINPOLY_M, qa::QUANTIZATION, qa::INVARIANT_Q, QUOTIENT, IFF],
        "qtrace" => &[qa::QTRACE, qa::CHAR, qa::CENTRAL, ca::TRACES],
        "reflection" => &[qa::RE, qa::KAPPA_CONST, qa::EMBEDDING],
        "filtration" => &[
            qa::FILTRATION,
            qa::FILTRATION_GAP,
            qa::DIRECT_SUM,
            qa::COINCIDES,
            qa::SINGULAR_U,
            qa::MODULO_M1,
            qa::DIAGRAMS,
        ],
        "classical" => &[ca::GL_IDEAL, ca::SP_IDEAL, ca::RADICAL, ca::TRACES, ca::BRIDGE, ca::COLLAPSE],
        _ => &[],
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Quant(#[from] qz::QuantError),
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    RMatrix(#[from] RMatrixError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// One case: the group, block structure, truncation depth, seed and scalar mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub n: usize,
    pub blocks: String,
    pub depth: usize,
    pub seed: u64,
    /// `z_i` kept as free variables instead of seeded specializations.
    pub symbolic_z: bool,
    /// The m-block weight `t` free instead of `i·q^{-p}`.
    pub generic_lambda: bool,
}

impl Case {
    pub fn new(n: usize, blocks: &str, depth: usize, seed: u64) -> Self {
        Case { n, blocks: blocks.to_string(), depth, seed, symbolic_z: false, generic_lambda: false }
    }

    pub fn mode(&self) -> String {
        match (self.symbolic_z, self.generic_lambda) {
            (false, false) => "kappa".into(),
            (true, false) => "kappa,symbolic-z".into(),
            (false, true) => "generic-lambda".into(),
            (true, true) => "generic-lambda,symbolic-z".into(),
        }
    }

    pub fn info(&self) -> CaseInfo {
        CaseInfo { n: self.n, blocks: self.blocks.clone(), depth: self.depth, mode: self.mode(), seed: self.seed }
    }

    pub fn block_structure(&self) -> Result<BlockStructure, SuiteError> {
        Ok(BlockStructure::parse(self.n, &self.blocks)?)
    }

    /// Checks the configuration against the suites to be run.
    pub fn validate(&self, suites: &[&str]) -> Result<(), SuiteError> {
        if !(2..=3).contains(&self.n) {
            return Err(SuiteError::Config(format!("n = {} (supported: 2, 3)", self.n)));
        }
        let b = self.block_structure()?;
        for s in suites {
            if !SUITES.contains(s) {
                return Err(SuiteError::UnknownSuite(s.to_string()));
            }
        }
        let touches_q = suites.iter().any(|s| ["minpoly", "qtrace", "reflection", "filtration"].contains(s));
        if touches_q && self.depth < 2 * self.n - 1 {
            return Err(SuiteError::Config(format!("depth {} < 2n-1 = {}", self.depth, 2 * self.n - 1)));
        }
        if self.depth < 2 * b.p + 2 {
            return Err(SuiteError::Config(format!("depth {} < 2p+2 = {}", self.depth, 2 * b.p + 2)));
        }
        if self.extra_vars(&b) > 2 {
            return Err(SuiteError::Config("more than two free parameters".into()));
        }
        Ok(())
    }

    fn extra_vars(&self, b: &BlockStructure) -> usize {
        (if self.symbolic_z { b.ell() } else { 0 }) + self.generic_lambda as usize
    }
}

/// Runs the named suites on one case, sharing the module models between them.
pub fn run(suites: &[&str], case: &Case) -> Result<Vec<Report>, SuiteError> {
    case.validate(suites)?;
    let b = case.block_structure()?;
    match case.extra_vars(&b) {
        0 => run_in::<Qq>(suites, case, b),
        1 => run_in::<Qq1>(suites, case, b),
        _ => run_in::<Qq2>(suites, case, b),
    }
}

fn weights<F: QField>(case: &Case, b: &BlockStructure, rng: &mut ChaCha8Rng) -> WeightAssignment<F> {
    let z: Vec<F> = if case.symbolic_z {
        (0..b.ell()).map(|i| F::var(i + 1)).collect()
    } else {
        (0..b.ell()).map(|_| F::from_gauss(&random_unit(rng))).collect()
    };
    let next = if case.symbolic_z { b.ell() + 1 } else { 1 };
    let mode = if case.generic_lambda { MBlock::Generic(F::var(next)) } else { MBlock::Kappa };
    WeightAssignment::new(b, z, mode)
}

/// Shared state of one run: weights, lazily built modules and tensor workspaces.
struct Ctx<F> {
    case: Case,
    b: BlockStructure,
    w: WeightAssignment<F>,
    hat: OnceCell<Result<Module<F>, VermaError>>,
    m: OnceCell<Result<Module<F>, VermaError>>,
    v: VectorRep<F>,
    theta: OnceCell<Result<QuasiR<F>, RMatrixError>>,
}

impl<F: QField> Ctx<F> {
    fn module(&self, variant: Variant) -> Result<&Module<F>, SuiteError> {
        let cell = if variant == Variant::HatM { &self.hat } else { &self.m };
        let spec = || ModuleSpec { blocks: self.b.clone(), weights: self.w.clone(), variant, depth: self.case.depth };
        cell.get_or_init(|| Module::new(&spec())).as_ref().map_err(|e| SuiteError::Verma(e.clone()))
    }

    fn theta(&self) -> Result<&QuasiR<F>, SuiteError> {
        self.theta
            .get_or_init(|| QuasiR::new(self.b.roots.clone(), 2 * self.b.n - 1))
            .as_ref()
            .map_err(|e| SuiteError::RMatrix(e.clone()))
    }

    fn kappa(&self) -> bool {
        self.w.is_kappa()
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.case.seed.wrapping_mul(0x9e37_79b9).wrapping_add(salt))
    }

    /// Top slice height for the tensor-product suites. With free parameters
    /// the entries of `Q` grow too fast above height 5.
    fn h_q(&self) -> usize {
        if self.case.extra_vars(&self.b) == 0 {
            self.case.depth
        } else {
            self.case.depth.min(FREE_PARAMETER_HEIGHT)
        }
    }

    fn h_trace(&self) -> usize {
        self.h_q() + 1 - 2 * self.b.n
    }

    fn h_reflection(&self) -> usize {
        self.h_q() - self.b.n
    }
}

const FREE_PARAMETER_HEIGHT: usize = 5;

type Ws<'a, F> = OnceCell<Workspace<'a, F>>;

fn workspace<'a, F: QField>(cell: &'a Ws<'a, F>, ctx: &'a Ctx<F>, variant: Variant) -> Result<&'a Workspace<'a, F>, SuiteError> {
    if let Some(ws) = cell.get() {
        return Ok(ws);
    }
    let module = ctx.module(variant)?;
    let theta = ctx.theta()?;
    Ok(cell.get_or_init(|| Workspace::new(TensorModel::new(module, &ctx.v, theta))))
}

fn run_in<F: QField>(suites: &[&str], case: &Case, b: BlockStructure) -> Result<Vec<Report>, SuiteError> {
    let mut rng = ChaCha8Rng::seed_from_u64(case.seed);
    let w = weights::<F>(case, &b, &mut rng);
    let ctx = Ctx {
        case: case.clone(),
        v: VectorRep::new(b.n),
        b,
        w,
        hat: OnceCell::new(),
        m: OnceCell::new(),
        theta: OnceCell::new(),
    };
    let ws_h: Ws<F> = OnceCell::new();
    let ws_m: Ws<F> = OnceCell::new();
    let mut reports = Vec::new();
    for &suite in SUITES.iter().filter(|s| suites.contains(s)) {
        let checks = match suite {
            "scalars" => scalars::<F>(&ctx),
            "rootdata" => rootdata_suite(&ctx),
            "wordalgebra" => wordalgebra(&ctx)?,
            "verma" => verma(&ctx)?,
            "rmatrix" => rmatrix(&ctx)?,
            "minpoly" => minpoly(&ctx, &ws_h, &ws_m)?,
            "qtrace" => qtrace(&ctx, &ws_h, &ws_m)?,
            "reflection" => reflection(&ctx, &ws_h, &ws_m)?,
            "filtration" => filtration(&ctx, &ws_h, &ws_m)?,
            "classical" => classical_suite(&ctx)?,
            _ => unreachable!(),
        };
        debug_assert!(
            checks.iter().all(|c| registry(suite).contains(&c.anchor.as_str())),
            "{suite} emitted an unregistered anchor"
        );
        reports.push(Report { suite: suite.to_string(), case: case.info(), checks });
    }
    Ok(reports)
}

fn names<F: Field>() -> Vec<&'static str> {
    ["q", "x1", "x2", "x3"][..=F::NVARS.min(3)].to_vec()
}

fn show<F: Field>(x: &F) -> String {
    format_scalar(x, &names::<F>())
}

fn random_scalar<F: QField>(rng: &mut ChaCha8Rng) -> F {
    let mut num = F::zero();
    for k in -2..=2 {
        num = num.add(&F::from_gauss(&random_unit(rng)).mul(&F::q_pow(k)));
    }
    for v in 1..F::NVARS {
        num = num.add(&F::var(v).mul(&F::from_gauss(&random_unit(rng))));
    }
    let den = F::q().add(&F::from_gauss(&random_unit(rng)));
    num.div(&den)
}

fn scalars<F: QField>(ctx: &Ctx<F>) -> Vec<Check> {
    use anchors::*;
    let mut rng = ctx.rng(1);
    let xs: Vec<F> = (0..6).map(|_| random_scalar(&mut rng)).collect();
    let mut axioms = true;
    for t in xs.windows(3) {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        axioms &= a.add(b).mul(c) == a.mul(c).add(&b.mul(c));
        axioms &= a.mul(b).mul(c) == a.mul(&b.mul(c));
        axioms &= a.inv().map(|i| i.mul(a).is_one()).unwrap_or(false);
        axioms &= a.sub(a).is_zero();
    }
    let mut roundtrip = true;
    for x in &xs {
        let text = show(x);
        roundtrip &= parse_scalar::<F>(&text, &names::<F>()).map(|y| &y == x).unwrap_or(false);
    }
    let mut limits = true;
    for k in 1..=6i64 {
        let base = <F::Base as Field>::from_int(k);
        limits &= q_integer::<F>(k).classical_limit().ok() == Some(base.clone());
        limits &= F::q_pow(k).h_derivative().ok() == Some(base);
    }
    let i = F::imag();
    vec![
        Check::new(Q_EXP, "field axioms on seeded random elements", axioms, None),
        Check::new(Q_EXP, "text form parses back to the same element", roundtrip, None),
        Check::new(LIMIT, "lim_{q→1} [k]_q = k and d/dħ e^{kħ}|_0 = k, k ≤ 6", limits, None),
        Check::new(KAPPA_COND, "i² = -1 in the scalar field", i.mul(&i) == F::one().neg(), None),
    ]
}

/// Number of multisets of `gens` summing to `target` (simple coordinates),
/// by dynamic programming over a box.
fn partition_count(gens: &[Vec<i64>], target: &[i64]) -> u64 {
    let n = target.len();
    let dims: Vec<usize> = target.iter().map(|&t| t as usize + 1).collect();
    let size: usize = dims.iter().product();
    let index = |v: &[i64]| v.iter().zip(&dims).fold(0usize, |acc, (&x, &d)| acc * d + x as usize);
    let mut dp = vec![0u64; size];
    dp[0] = 1;
    let points: Vec<Vec<i64>> = (0..size)
        .map(|mut k| {
            let mut v = vec![0i64; n];
            for j in (0..n).rev() {
                v[j] = (k % dims[j]) as i64;
                k /= dims[j];
            }
            v
        })
        .collect();
    for g in gens {
        for p in &points {
            let prev: Vec<i64> = p.iter().zip(g).map(|(a, b)| a - b).collect();
            if prev.iter().all(|&x| x >= 0) {
                dp[index(p)] += dp[index(&prev)];
            }
        }
    }
    dp[index(target)]
}

fn rootdata_suite<F: QField>(ctx: &Ctx<F>) -> Vec<Check> {
    use anchors::*;
    let b = &ctx.b;
    let rs = &b.roots;
    let n = rs.n;
    let mut cartan = true;
    for i in 0..n {
        for j in 0..n {
            let expected = match i.abs_diff(j) {
                0 if i == n - 1 => 4,
                0 => 2,
                1 if i.max(j) == n - 1 => -2,
                1 => -1,
                _ => 0,
            };
            cartan &= rs.simple_ip(i, j) == expected;
        }
    }
    let pos = rs.positive_roots();
    let two_rho = pos.iter().fold(rs.zero(), |a, r| rootdata::add(&a, r));
    let rho_ok = two_rho == rootdata::scale(&rs.rho, 2) && (0..n).all(|i| rs.rho[i] == (n - i) as i64);
    let v = &ctx.v;
    let prime_ok = (0..v.dim).all(|a| v.rho(a) == -v.rho(v.prime(a)));
    let mut delta = vec![0i64; n];
    for c in delta.iter_mut().take(n - 1).skip(b.alpha_index()) {
        *c = 2;
    }
    delta[n - 1] = 1;
    let delta_ok = rs.simple_coords(&b.delta()).as_ref() == Some(&delta) && rs.height(&b.delta()) == Some(2 * b.p as i64 + 1);
    let tri = |k: usize| k * k.saturating_sub(1) / 2;
    let gl_roots: usize = b.gl.iter().map(|&k| tri(k)).sum();
    let stab_ok = b.stabilizer_roots().len() == gl_roots + b.m * b.m + b.p * b.p
        && b.levi_roots().len() == gl_roots + tri(b.m) + b.p * b.p;

    let mut kostant_bad = None;
    let levi = b.levi_roots();
    let hat_gens = b.complement(&levi);
    let stab = b.stabilizer_roots();
    let m_gens = b.complement(&stab);
    for beta in rs.cone_up_to(ctx.case.depth) {
        let w = rs.from_simple_coords(&beta);
        for gens in [&pos, &hat_gens, &m_gens] {
            let sc: Vec<Vec<i64>> = gens.iter().map(|g| rs.simple_coords(g).unwrap()).collect();
            if rootdata::kostant_count(rs, &w, gens) != partition_count(&sc, &beta) && kostant_bad.is_none() {
                kostant_bad = Some(format!("{beta:?}"));
            }
        }
    }
    let mut checks = vec![
        Check::new(CARTAN, "(α_i,α_i) = 2 on short roots, (β,β) = 4, adjacent pairs as in the Dynkin diagram", cartan, None),
        Check::new(RHO, "2ρ = Σ_{α>0} α with ρ_i = n-i+1, and ρ_a = -ρ_{a'} on the weights of C^{2n}", rho_ok && prime_ok, None),
        Check::new(DELTA, "δ in simple coordinates, height 2p+1", delta_ok, Some(format!("{delta:?}"))),
        Check::new(STABILIZER, "|R⁺_k| = Σ n_i(n_i-1)/2 + m² + p² and |R⁺_l| = Σ n_i(n_i-1)/2 + m(m-1)/2 + p²", stab_ok, None),
        Check::new(
            FREE,
            format!("Kostant counts agree with an independent partition count to height {}", ctx.case.depth),
            kostant_bad.is_none(),
            kostant_bad,
        ),
    ];
    let qa2 = ctx.w.q_pow(&b.alpha()).pow(2);
    let target = F::q_pow(-2 * b.p as i64).neg();
    match rootdata::mu_parameters(b, &ctx.w) {
        Ok(mu) => {
            checks.push(Check::new(KAPPA_COND, "q^{2(λ,α)} = -q^{-2p}", qa2 == target, None));
            let starts = b.block_starts();
            let from_nu: Vec<F> = starts.iter().map(|&s| qz::root_for_nu(rs, &ctx.w, &rs.eps(s))).collect();
            checks.push(Check::new(
                MU,
                "μ has ℓ+2 entries, each equal to q^{2(λ+ρ,ε_s)-2(ρ,ε_1)} at the first index s of its block",
                mu.len() == b.ell() + 2 && mu == from_nu,
                Some(mu.iter().map(show).collect::<Vec<_>>().join(", ")),
            ));
        }
        Err(_) => {
            checks.push(Check::new(KAPPA_COND, "generic λ: q^{2(λ,α)} ≠ -q^{-2p}, so μ is not defined", qa2 != target, None));
        }
    }
    checks
}

fn wordalgebra<F: QField>(ctx: &Ctx<F>) -> Result<Vec<Check>, SuiteError> {
    use anchors::*;
    let b = &ctx.b;
    let n = b.n;
    let d = ctx.case.depth;
    let alg = Algebra::new(b.roots.clone(), F::q());
    let all = alg.rs.positive_roots();
    let mut checks = Vec::new();
    let towers: Vec<Tower<F>> = [Sign::F, Sign::E].iter().map(|&s| Tower::new(alg.clone(), s, d, vec![])).collect();
    let mut bad = None;
    for t in &towers {
        for beta in t.weights() {
            let w = alg.rs.from_simple_coords(beta);
            if t.dim(beta)? as u64 != rootdata::kostant_count(&alg.rs, &w, &all) && bad.is_none() {
                bad = Some(format!("{beta:?}"));
            }
        }
    }
    checks.push(Check::new(BASIS, format!("dim U_q(g_±)_β equals the Kostant count for height ≤ {d}"), bad.is_none(), bad));

    let h_words = d.min(7 - n);
    let mut bad = None;
    for beta in alg.rs.cone_up_to(h_words) {
        let s = alg.serre_slice(Sign::F, &beta, h_words as i64)?;
        if s.quotient_dim() != towers[0].dim(&beta)? && bad.is_none() {
            bad = Some(format!("{beta:?}"));
        }
    }
    checks.push(Check::new(
        SERRE,
        format!("word space modulo the two-sided Serre span has the tower dimension, height ≤ {h_words}"),
        bad.is_none(),
        bad,
    ));

    let f = &towers[0];
    let dv = alg.delta_vectors(b);
    let delta_beta = alg.rs.simple_coords(&b.delta()).unwrap();
    let weight_ok = alg.weight(&dv.f_delta) == Some(delta_beta.clone()) && dv.f_delta.is_pure();
    checks.push(Check::new(F_DELTA, "f_δ is a pure word combination of weight δ", weight_ok, None));
    if n == 2 {
        let fa = |w: &[usize]| alg.word(Sign::F, w);
        let c = alg.qp(2).add(&alg.qp(-2));
        let expected = alg.add(&alg.sub(&fa(&[0, 0, 1]), &alg.scale(&fa(&[0, 1, 0]), &c)), &fa(&[1, 0, 0]));
        checks.push(Check::new(F_DELTA, "sp(4): f_δ = f_α²f_β - (q²+q^{-2})f_αf_βf_α + f_βf_α²", dv.f_delta == expected, None));
        let fg = alg.q_commutator(&fa(&[0]), &fa(&[1]), &alg.qp(2));
        checks.push(Check::new(Q_COMMUTATOR, "[f_α, f_β]_{q²} has weight γ = α+β", alg.weight(&fg) == Some(vec![1, 1]), None));
    }
    let same = |x: &Element<F>, y: &Element<F>| -> Result<bool, WordError> { Ok(f.vector_of(x)?.1 == f.vector_of(y)?.1) };
    let chain = alg.f_delta_chain(b);
    let mirrored = alg.f_delta_mirrored(b);
    checks.push(Check::new(
        PRESENTABLE,
        "f_δ equals its mirrored form and the single-letter chain modulo the Serre relations",
        same(&dv.f_delta, &chain)? && same(&dv.f_delta, &mirrored)?,
        None,
    ));
    let x = alg.word(Sign::F, &[0, 1]);
    checks.push(Check::new(Q_COMMUTATOR, "[x, x]_1 = 0", alg.q_commutator(&x, &x, &F::one()).is_zero(), None));

    let mut rng = ctx.rng(3);
    let mut jacobi = true;
    for _ in 0..4 {
        let mut el = || {
            let len = rng.gen_range(1..=2);
            let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let c = F::from_gauss(&random_unit(&mut rng));
            alg.scale(&alg.word(Sign::F, &w), &c)
        };
        let (x, y, z) = (el(), el(), el());
        let mut sc = || F::from_gauss(&random_unit(&mut rng)).mul(&F::q_pow(rng.gen_range(-2..=2)));
        let (a, bb, c) = (sc(), sc(), sc());
        let lhs = alg.q_commutator(&x, &alg.q_commutator(&y, &z, &a), &bb);
        let r1 = alg.q_commutator(&alg.q_commutator(&x, &y, &c), &z, &a.mul(&bb).div(&c));
        let r2 = alg.scale(&alg.q_commutator(&y, &alg.q_commutator(&x, &z, &bb.div(&c)), &a.div(&c)), &c);
        jacobi &= lhs == alg.add(&r1, &r2);
    }
    checks.push(Check::new(JACOBI, "[x,[y,z]_a]_b = [[x,y]_c,z]_{ab/c} + c[y,[x,z]_{b/c}]_{a/c} on seeded random words", jacobi, None));

    checks.push(lemma_enter::<F>()?);

    match psi_words(b) {
        Ok(psi) => {
            let phi = phi_words(b);
            let deg_ok = phi.len() == b.p + 1
                && phi.iter().all(|w| w.len() == 2 * b.p + 1 && alg.weight(&alg.word(Sign::F, w)) == Some(delta_beta.clone()));
            checks.push(Check::new(DEGREE, "p+1 monomials φ_i, each of degree 2p+1 and weight δ", deg_ok, None));
            checks.push(Check::pass(PHI, "letters of φ_i").with_witness(format!("{phi:?}")));
            let psi_ok = psi.len() == b.m && psi[b.m - 1] == vec![b.m - 1] && psi.iter().enumerate().all(|(i, w)| w.len() == b.m - i);
            checks.push(Check::new(PSI, "ψ_i = f_{α_i}…f_{α_m}, ψ_m = f_{α_m}", psi_ok, Some(format!("{psi:?}"))));
        }
        Err(_) => checks.push(Check::pass(PSI, "ψ_i are defined only without GL blocks (refused for ℓ > 0)")),
    }
    Ok(checks)
}

/// `[f̃_μ, f_μ] = 0`, `[f̃_{μ'}, f_μ]_q = 0`, `[f̃_{μ''}, f_μ]_{q^{-1}} = 0` for
/// all roots `μ` of height ≥ 2 of `gl(4)`, modulo the Serre relations.
fn lemma_enter<F: QField>() -> Result<Check, SuiteError> {
    let alg = Algebra::new(RootSystem::new(4), F::q());
    let mut bad = None;
    for i in 0..3 {
        for j in i + 1..3 {
            let f = alg.f_mu(i, j);
            let tilde = |a: usize, b: usize| if a == b { alg.letter(Sign::F, a) } else { alg.f_mu_tilde(a, b) };
            let items = [
                (alg.q_commutator(&tilde(i, j), &f, &F::one()), "[f̃_μ, f_μ]"),
                (alg.q_commutator(&tilde(i + 1, j), &f, &F::q()), "[f̃_μ', f_μ]_q"),
                (alg.q_commutator(&tilde(i, j - 1), &f, &F::q_pow(-1)), "[f̃_μ'', f_μ]_{q^{-1}}"),
            ];
            for (x, label) in items {
                let beta = alg.weight(&x).unwrap_or_default();
                if x.is_zero() {
                    continue;
                }
                let slice = alg.serre_slice(Sign::F, &beta, 6)?;
                if !slice.is_zero(&x) && bad.is_none() {
                    bad = Some(format!("{label} for μ = α_{}+…+α_{}", i + 1, j + 1));
                }
            }
        }
    }
    Ok(Check::new(anchors::ENTER, "Lemma identities for all μ of height ≥ 2 in gl(4), in the Serre quotient", bad.is_none(), bad))
}

fn verma<F: QField>(ctx: &Ctx<F>) -> Result<Vec<Check>, SuiteError> {
    use anchors::*;
    let b = &ctx.b;
    let n = b.n;
    let d = ctx.case.depth;
    let mut checks = Vec::new();
    let hat = ctx.module(Variant::HatM)?;
    let mut variants = vec![(Variant::HatM, hat)];
    if ctx.kappa() {
        variants.push((Variant::M, ctx.module(Variant::M)?));
    } else {
        let refused = matches!(ctx.module(Variant::M), Err(SuiteError::Verma(VermaError::NotKappa)));
        checks.push(Check::new(QUOTIENT, "generic λ: the quotient by f_δ is refused (not e-stable)", refused, None));
    }
    for (variant, m) in &variants {
        let bad = verify_dimensions(m, b, *variant);
        checks.push(Check::new(
            FREE,
            format!("{variant:?} slice dimensions equal the free-basis counts, height ≤ {d}"),
            bad.is_empty(),
            bad.first().map(|x| format!("{x:?}")),
        ));
        let mut chev = None;
        let mut serre = None;
        for beta in m.tower.weights().to_vec() {
            let h: usize = beta.iter().sum::<i64>() as usize;
            if h < d {
                for i in 0..n {
                    for j in 0..n {
                        if chev.is_none() && !m.check_commutator(i, j, &beta)? {
                            chev = Some(format!("[e_{i}, f_{j}] at {beta:?}"));
                        }
                    }
                }
            }
            let f_ok = h + 4 > d || m.check_serre(Sign::F, &beta)?;
            if serre.is_none() && (!f_ok || !m.check_serre(Sign::E, &beta)?) {
                serre = Some(format!("{beta:?}"));
            }
        }
        checks.push(Check::new(CHEVALLEY, format!("[e_i, f_j] = δ_ij [K_i] on {variant:?}, height < {d}"), chev.is_none(), chev));
        checks.push(Check::new(SERRE, format!("both Serre families act by zero on {variant:?}"), serre.is_none(), serre));
    }

    let mut nil = b.levi_simple().iter().all(|&i| hat.word_vector(&[i]).map(|(_, v)| v.iter().all(|x| x.is_zero())).unwrap_or(false));
    nil &= hat.word_vector(&[b.alpha_index()])?.1.iter().any(|x| !x.is_zero());
    checks.push(Check::new(NIL, "f_i v = 0 exactly for the Levi simple roots", nil, None));

    let alg = hat.alg();
    let fd = alg.delta_vectors(b).f_delta;
    let (beta, v) = hat.vector_of(&fd)?;
    let a = b.alpha_index();
    let mut others_zero = true;
    for i in (0..n).filter(|&i| i != a) {
        others_zero &= hat.e(i, &beta)?.mul_vec(&v).iter().all(|x| x.is_zero());
    }
    let ea = hat.e(a, &beta)?.mul_vec(&v);
    if ctx.kappa() {
        let sing = hat.singular_vectors(&beta)?;
        checks.push(Check::new(
            SINGULAR,
            "f_δ v ≠ 0 is annihilated by every e_i, and spans the singular vectors of weight λ-δ",
            v.iter().any(|x| !x.is_zero()) && others_zero && ea.iter().all(|x| x.is_zero()) && sing.len() == 1,
            Some(format!("{} singular vector(s)", sing.len())),
        ));
        let k = hat.k_scalar(a, &vec![0; n]);
        checks.push(Check::new(KAPPA_COND, "K_α v = i·q^{-p} v", k == F::imag().mul(&F::q_pow(-(b.p as i64))), None));
        checks.extend(kappa_quotient(ctx)?);
    } else {
        let t = match &ctx.w.mode {
            MBlock::Generic(t) => t.clone(),
            MBlock::Kappa => unreachable!(),
        };
        let p = b.p as i64;
        let factor = t.inv().unwrap().mul(&F::q_pow(-p)).add(&t.mul(&F::q_pow(p)));
        let x: Vec<F> = ea.iter().map(|c| c.div(&factor)).collect();
        let t_var = F::NVARS - 1;
        let t_free = x.iter().all(|c| !involves_var(c, t_var));
        checks.push(Check::new(
            IFF,
            "generic λ: e_α f_δ v = (t^{-1}q^{-p} + t q^p)·X with X ≠ 0 free of t, all other e_i f_δ v = 0",
            others_zero && x.iter().any(|c| !c.is_zero()) && t_free,
            None,
        ));
    }

    let p = b.p;
    let mut chain_bad = None;
    for i in 1..=p {
        for k in 2..=p + 1 {
            let mut word = vec![a + k - 1];
            word.extend((a..a + i).rev());
            let (_, v) = hat.word_vector(&word)?;
            let zero = v.iter().all(|x| x.is_zero());
            if zero == (k == i + 1) && chain_bad.is_none() {
                chain_bad = Some(format!("i={i}, k={k}"));
            }
        }
    }
    checks.push(Check::new(
        CHAINS,
        "f_{α_k} f_{α_i}…f_{α_1} v vanishes exactly for k ≠ i+1 (α_1 = α)",
        chain_bad.is_none(),
        chain_bad,
    ));

    let mut word: Vec<usize> = (a + 1..n - 1).collect();
    word.push(n - 1);
    word.extend((a + 1..n - 1).rev());
    word.push(a);
    let (beta2, v2) = hat.word_vector(&word)?;
    let target = b.roots.simple_coords(&rootdata::sub(&b.delta(), &b.alpha())).unwrap();
    checks.push(Check::new(
        SPANNED,
        "the slice λ-(δ-α) of M̂_λ is one-dimensional, spanned by f_{α_2}…f_β…f_{α_2}f_α v",
        beta2 == target && hat.dim(&beta2)? == 1 && v2.iter().any(|x| !x.is_zero()),
        None,
    ));

    if b.ell() == 0 {
        let all: Vec<usize> = (1..=p + 1).collect();
        let exp = expand_in_phis(hat, b, &all)?;
        let witness = exp.as_ref().map(|e| e.coefficients.iter().map(show).collect::<Vec<_>>().join(", "));
        let ok = exp.as_ref().is_some_and(|e| e.rank == p + 1 && !e.coefficients[0].is_zero());
        checks.push(Check::new(LINEAR_COMBINATION, "f_δ v = Σ_{i=1}^{p+1} c_i φ_i v with independent φ_i v and c_1 ≠ 0", ok, witness));
        let rest: Vec<usize> = (2..=p + 1).collect();
        checks.push(Check::new(
            LINEAR_COMBINATION,
            "f_δ v is not a combination of φ_2 v, …, φ_{p+1} v alone",
            expand_in_phis(hat, b, &rest)?.is_none(),
            None,
        ));
    }
    checks.push(lemma_aux::<F>(&mut ctx.rng(4))?);
    Ok(checks)
}

/// At a `κ`-type weight: the obstruction factor of `e_α f_δ v` vanishes,
/// and `M_λ` loses exactly the line of `f_δ v` at weight `λ-δ`.
fn kappa_quotient<F: QField>(ctx: &Ctx<F>) -> Result<Vec<Check>, SuiteError> {
    let b = &ctx.b;
    let hat = ctx.module(Variant::HatM)?;
    let m = ctx.module(Variant::M)?;
    let fd = hat.alg().delta_vectors(b).f_delta;
    let (beta, v) = hat.vector_of(&fd)?;
    let ea = hat.e(b.alpha_index(), &beta)?.mul_vec(&v);
    let qa = ctx.w.q_pow(&b.alpha());
    let p = b.p as i64;
    let factor = qa.inv().unwrap().mul(&F::q_pow(-p)).add(&qa.mul(&F::q_pow(p)));
    Ok(vec![
        Check::new(
            anchors::IFF,
            "κ-type weight: q^{-(α,λ)-p} + q^{(α,λ)+p} = 0 and e_α f_δ v = 0",
            factor.is_zero() && ea.iter().all(|x| x.is_zero()),
            None,
        ),
        Check::new(
            anchors::QUOTIENT,
            "dim M̂_λ[λ-δ] - dim M_λ[λ-δ] = 1",
            hat.dim(&beta)? == m.dim(&beta)? + 1,
            Some(format!("{} vs {}", hat.dim(&beta)?, m.dim(&beta)?)),
        ),
    ])
}

fn involves_var<F: Field>(x: &F, k: usize) -> bool {
    let (num, den) = x.to_flat();
    let found = num.terms().chain(den.terms()).any(|(e, _)| e.get(k).is_some_and(|&v| v != 0));
    found
}

/// Commutators of `e_k` with `f_μ`, `f̃_μ` for the roots `μ` of `gl(4)` of
/// height ≥ 2, as operators on a full Verma module with random weight.
fn lemma_aux<F: QField>(rng: &mut ChaCha8Rng) -> Result<Check, SuiteError> {
    let rs = RootSystem::new(4);
    let values: Vec<F> = (0..4).map(|_| F::from_gauss(&random_unit(rng))).collect();
    let m = Module::free(rs, values, 4)?;
    let alg = m.alg().clone();
    let mut bad = None;
    let cartan = |i: usize, k: i64| {
        let mut c = vec![0i64; 4];
        c[i] = k;
        c
    };
    for beta in m.tower.weights().iter().filter(|b| b.iter().sum::<i64>() <= 1).cloned().collect::<Vec<_>>() {
        for i in 0..3 {
            for j in i + 1..3 {
                for tilde in [false, true] {
                    let mu = |a: usize, b: usize| match (tilde, a == b) {
                        (_, true) => alg.letter(Sign::F, a),
                        (false, false) => alg.f_mu(a, b),
                        (true, false) => alg.f_mu_tilde(a, b),
                    };
                    let f = mu(i, j);
                    let (up, fm) = m.operator(&f, &beta)?;
                    for k in i..=j {
                        let mut down = up.clone();
                        down[k] -= 1;
                        let lhs1 = m.e(k, &up)?.mul(&fm);
                        let lhs2 = if beta[k] > 0 {
                            let mut bk = beta.clone();
                            bk[k] -= 1;
                            m.operator(&f, &bk)?.1.mul(&m.e(k, &beta)?)
                        } else {
                            Matrix::zeros(lhs1.rows, lhs1.cols)
                        };
                        let lhs = lhs1.sub(&lhs2);
                        let (s, sign) = if tilde { (-1i64, -1i64) } else { (1, 1) };
                        let rhs = if k == i {
                            let x = mu(i + 1, j);
                            let t = alg.mul(&x, &alg.cartan(Sign::F, cartan(i, -s)));
                            m.operator(&t, &beta)?.1
                        } else if k == j {
                            let x = mu(i, j - 1);
                            let t = alg.mul(&x, &alg.cartan(Sign::F, cartan(j, s)));
                            m.operator(&t, &beta)?.1.scale(&F::q_pow(sign).neg())
                        } else {
                            Matrix::zeros(lhs.rows, lhs.cols)
                        };
                        if lhs != rhs && bad.is_none() {
                            bad = Some(format!("k={k}, μ=α_{}+…+α_{}, tilde={tilde}, at {beta:?}", i + 1, j + 1));
                        }
                    }
                }
            }
        }
    }
    Ok(Check::new(
        anchors::AUX,
        "[e_k, f_μ] = 0 inside μ, [e_i, f_μ] = f_μ' q^{-h_i}, [e_j, f_μ] = -q f_μ'' q^{h_j}, and the q ↦ q^{-1} forms for f̃_μ",
        bad.is_none(),
        bad,
    ))
}

fn delta_pair(v: &VectorRep<Qq>) -> Vec<Matrix<Qq>> {
    let id = Matrix::identity(v.dim);
    let mut out = Vec::new();
    for i in 0..v.n() {
        let k = v.k(i);
        let kinv = k.inverse().unwrap();
        out.push(v.e[i].kron(&id).add(&k.kron(&v.e[i])));
        out.push(v.f[i].kron(&kinv).add(&id.kron(&v.f[i])));
        out.push(k.kron(&k));
    }
    out
}

/// R-matrix checks are independent of λ and always run over `Q(i)(q)`.
fn rmatrix<F: QField>(ctx: &Ctx<F>) -> Result<Vec<Check>, SuiteError> {
    use anchors::*;
    let n = ctx.b.n;
    let v = VectorRep::<Qq>::new(n);
    let failed = v.failed_relations();
    let mut checks = vec![
        Check::new(PI, "the defining relations hold for π", failed.is_empty(), failed.first().cloned()),
        Check::new(SERRE, "both long-root Serre relations hold for π", !failed.iter().any(|f| f.contains("Serre")), None),
        Check::new(
            Q_INDEPENDENT,
            "π(e_i), π(f_i) have entries independent of q",
            v.e.iter().chain(&v.f).all(|m| m.entries().iter().all(|x| x.is_constant())),
            None,
        ),
    ];
    let r = explicit_r(&v);
    let d = v.dim;
    let mut diag = true;
    for i in 0..d {
        for j in 0..d {
            let e = (i == j) as i64 - (j == v.prime(i)) as i64;
            diag &= *r.get(i * d + j, i * d + j) == Qq::q_pow(e);
        }
    }
    checks.push(Check::new(EXPLICIT_R, "diagonal of R is q^{δ_ij - δ_ij'}", diag, None));
    checks.push(Check::new(EXPLICIT_R, "R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂ on (C^{2n})^{⊗3}", yang_baxter_holds(&r, d), None));
    let limit_ok = r.entries().iter().map(|x| x.classical_limit().ok()).collect::<Option<Vec<_>>>().map(|l| {
        Matrix::from_rows(l.chunks(r.cols).map(|c| c.to_vec()).collect(), r.cols).is_identity()
    }) == Some(true);
    let deriv: Option<Vec<GaussRat>> = r.entries().iter().map(|x| x.h_derivative().ok()).collect();
    checks.push(Check::new(
        STANDARD,
        "R → 1 as q → 1 and dR/dħ at ħ = 0 equals the standard classical r-matrix",
        limit_ok && deriv.as_deref() == Some(classical_r(&v).entries()),
        None,
    ));
    let s = flip::<Qq>(d).mul(&r);
    let pairs = delta_pair(&v);
    let s_inv = pairs.iter().all(|x| s.mul(x) == x.mul(&s));
    let eig = monomial_eigenvalues(&s, 2 * n as i64 + 2);
    checks.push(Check::new(
        IDEMPOTENTS,
        "S = PR commutes with Δ(U_q(g)) and has exactly three eigenvalues",
        s_inv && eig.len() == 3 && product_of_shifts(&s, &eig).is_zero(),
        Some(eig.iter().map(show).collect::<Vec<_>>().join(", ")),
    ));
    let k = kappa(&v);
    let c = proportionality(&s.mul(&k), &k);
    let expected = Qq::q_pow(-(2 * n as i64) - 1).neg();
    checks.push(Check::new(
        KAPPA,
        "κ is a rank-one invariant idempotent with Sκ = κS = -q^{-2n-1}κ",
        k.rank() == 1 && k.mul(&k) == k && pairs.iter().all(|x| x.mul(&k) == k.mul(x)) && c == Some(expected.clone())
            && proportionality(&k.mul(&s), &k) == Some(expected),
        c.as_ref().map(show),
    ));
    let theta = QuasiR::<Qq>::new(RootSystem::new(n), 2 * n - 1)?;
    let rhat = theta.on_vector_pair(&v);
    let c = proportionality(&rhat, &r);
    let p = flip::<Qq>(d);
    let r21r = p.mul(&rhat).mul(&p).mul(&rhat) == p.mul(&r).mul(&p).mul(&r);
    checks.push(Check::new(
        qz::anchors::INVARIANT_Q,
        format!("(π⊗π)(q^{{t₀}}Θ) = c·R with c = 1, Θ to height {}", 2 * n - 1),
        c == Some(Qq::one()) && r21r,
        c.as_ref().map(show),
    ));
    Ok(checks)
}

fn minpoly<'a, F: QField>(ctx: &'a Ctx<F>, ws_h: &'a Ws<'a, F>, ws_m: &'a Ws<'a, F>) -> Result<Vec<Check>, SuiteError> {
    use qz::anchors as qa;
    let b = &ctx.b;
    let h = ctx.h_q();
    let hat = workspace(ws_h, ctx, Variant::HatM)?;
    let mut checks = Vec::new();
    let nu_roots: Vec<F> = qz::nu_list(b).iter().map(|nu| qz::root_for_nu(&b.roots, &ctx.w, nu)).collect();
    if ctx.kappa() {
        let rh = qz::eigenvalues_hatm(b, &ctx.w)?;
        let rm = qz::eigenvalues_m(b, &ctx.w)?;
        let key = |x: &F| format!("{x:?}");
        let mut a: Vec<String> = nu_roots.iter().map(key).collect();
        let mut c: Vec<String> = rh.iter().map(key).collect();
        a.sort();
        c.sort();
        checks.push(Check::new(qa::EIGEN_NU, "the listed roots on M̂_λ are q^{2(λ+ρ,ν)-2(ρ,ε_1)} over the ν", a == c, None));
        let mu = rootdata::mu_parameters(b, &ctx.w)?;
        let extra = mu[b.ell()].inv().unwrap().mul(&F::q_pow(-4 * b.n as i64 + 2 * (b.m as i64 - 1)));
        let dropped: Vec<&F> = rh.iter().filter(|x| !rm.contains(x)).collect();
        checks.push(Check::new(
            qa::MINPOLY_M,
            "roots on M̂_λ minus roots on M_λ = {μ_{ℓ+1}^{-1} q^{-4n+2(m-1)}}",
            dropped == vec![&extra] && rm.len() == 2 * b.ell() + 2,
            Some(show(&extra)),
        ));
        checks.extend(qz::verify_min_poly(hat, &rh, h, qa::EIGEN_HATM, "M̂_λ")?);
        let m = workspace(ws_m, ctx, Variant::M)?;
        checks.extend(qz::verify_min_poly(m, &rm, h, qa::MINPOLY_M, "M_λ")?);
        checks.push(qz::verify_not_annihilated(hat, &rm, h, qa::QUANTIZATION, "the roots on M_λ do not annihilate C^{2n}⊗M̂_λ")?);
        checks.push(qz::verify_invariance(m, h)?);
        checks.extend(kappa_quotient(ctx)?);
    } else {
        let refused = matches!(ctx.module(Variant::M), Err(SuiteError::Verma(VermaError::NotKappa)));
        let fd = hat.tm.module.alg().delta_vectors(b).f_delta;
        let (beta, v) = hat.tm.module.vector_of(&fd)?;
        let ea = hat.tm.module.e(b.alpha_index(), &beta)?.mul_vec(&v);
        checks.push(Check::new(
            anchors::IFF,
            "generic λ: f_δ v is not singular (expected failure of the singular-vector conclusion)",
            ea.iter().any(|x| !x.is_zero()),
            None,
        ));
        checks.push(Check::new(anchors::QUOTIENT, "generic λ: M_λ is not formed", refused, None));
        checks.extend(qz::verify_min_poly(hat, &nu_roots, h, qa::EIGEN_HATM, "M̂_λ (generic λ)")?);
    }
    checks.push(qz::verify_invariance(hat, h)?);
    checks.push(qz::verify_spectral_consistency(hat, &ctx.w, h)?);
    Ok(checks)
}

fn q_workspace<'a, F: QField>(ctx: &'a Ctx<F>, ws_h: &'a Ws<'a, F>, ws_m: &'a Ws<'a, F>) -> Result<&'a Workspace<'a, F>, SuiteError> {
    if ctx.kappa() {
        workspace(ws_m, ctx, Variant::M)
    } else {
        workspace(ws_h, ctx, Variant::HatM)
    }
}

fn qtrace<'a, F: QField>(ctx: &'a Ctx<F>, ws_h: &'a Ws<'a, F>, ws_m: &'a Ws<'a, F>) -> Result<Vec<Check>, SuiteError> {
    let b = &ctx.b;
    let ws = q_workspace(ctx, ws_h, ws_m)?;
    let h = ctx.h_trace();
    let mut checks = qz::verify_qtrace(ws, b, &ctx.w, 2 * b.n as u32, h)?;
    checks.push(Check::pass(
        qz::anchors::CENTRAL,
        format!("Tr_q(Q^k) acts by one scalar on every slice to height {h}, hence commutes with U_q(g) there"),
    ));
    if let Ok(mu) = rootdata::mu_parameters(b, &ctx.w) {
        let mut ok = true;
        let mut witness = None;
        let mu0: Result<Vec<F::Base>, _> = mu.iter().map(|x| x.classical_limit()).collect();
        match mu0 {
            Ok(mu0) => {
                for k in 1..=2 * b.n as i64 {
                    let chi = qz::character_value(b, &ctx.w, k)?.classical_limit();
                    if chi.as_ref().ok() != Some(&qz::classical_trace(b, &mu0, k)) {
                        ok = false;
                        witness = Some(format!("k={k}"));
                    }
                }
            }
            Err(_) => ok = false,
        }
        checks.push(Check::new(
            classical::anchors::TRACES,
            "lim_{q→1} χ^λ(τ_k) = Σ n_i(μ_i^k+μ_i^{-k}) + 2m(-1)^k + 2p at μ⁰ = lim μ, k ≤ 2n",
            ok,
            witness,
        ));
    }
    Ok(checks)
}

fn reflection<'a, F: QField>(ctx: &'a Ctx<F>, ws_h: &'a Ws<'a, F>, ws_m: &'a Ws<'a, F>) -> Result<Vec<Check>, SuiteError> {
    let ws = q_workspace(ctx, ws_h, ws_m)?;
    let mut checks = qz::verify_reflection(ws, ctx.h_reflection())?;
    let all_pass = checks.iter().all(|c| c.status == crate::report::Status::Pass);
    checks.push(Check::new(
        qz::anchors::EMBEDDING,
        "A ↦ (π⊗id)(R₂₁R) respects both reflection-equation relations",
        all_pass,
        None,
    ));
    Ok(checks)
}

fn filtration<'a, F: QField>(ctx: &'a Ctx<F>, ws_h: &'a Ws<'a, F>, ws_m: &'a Ws<'a, F>) -> Result<Vec<Check>, SuiteError> {
    let b = &ctx.b;
    let h = ctx.h_q();
    if !ctx.kappa() {
        let ws = workspace(ws_h, ctx, Variant::HatM)?;
        return Ok(qz::verify_filtration_hatm(ws, b, h)?);
    }
    let ws = workspace(ws_m, ctx, Variant::M)?;
    let mut checks = qz::verify_filtration(ws, b, &ctx.w, h)?;
    if b.ell() == 0 {
        let phi = phi_words(b);
        let hat = ctx.module(Variant::HatM)?;
        let all: Vec<usize> = (1..=b.p + 1).collect();
        let exp = expand_in_phis(hat, b, &all)?;
        let mut ok = exp.is_some();
        if (b.n, b.m, b.p) == (3, 1, 2) {
            ok &= phi == [vec![0, 1, 2, 1, 0], vec![1, 2, 0, 1, 0], vec![2, 1, 0, 1, 0]];
        }
        let letters: Vec<String> = phi
            .iter()
            .map(|w| w.iter().map(|&l| if l == b.n - 1 { "f_β".to_string() } else { format!("f_{}", l - b.alpha_index() + 1) }).collect::<Vec<_>>().join(""))
            .collect();
        checks.push(Check::new(
            qz::anchors::DIAGRAMS,
            "monomials φ_i read off the diagrams (f_k = f_{α_k}, α_1 = α), spanning the expansion of f_δ",
            ok,
            Some(letters.join(", ")),
        ));
    }
    Ok(checks)
}

/// Jacobian checks on the `GL` examples and the `SP` class of the case, and
/// the classical limits of the quantum data. The limit statements are about
/// `κ`-type weights, so this suite specializes `z` from the seed and uses
/// `i·q^{-p}` on the m-block whatever the mode.
fn classical_suite<F: QField>(ctx: &Ctx<F>) -> Result<Vec<Check>, SuiteError> {
    let b = &ctx.b;
    let mut rng = ctx.rng(5);
    let mut checks = Vec::new();
    let int = GaussRat::from_int;
    let gl_cases = [
        vec![(int(2), 1), (int(3), 1)],
        vec![(int(2), 2), (int(3), 1)],
        vec![(int(7), 3)],
        vec![(int(2), 2), (GaussRat::from_frac(-1, 3), 1), (int(4), 1)],
    ];
    for eigen in gl_cases {
        let spec = ClassSpec::gl(eigen).expect("distinct eigenvalues");
        for mut c in classical::verify_class(&spec, &mut rng) {
            c.check = format!("GL({}) {:?}: {}", spec.size(), spec.distinct().iter().map(show).collect::<Vec<_>>(), c.check);
            checks.push(c);
        }
    }
    let w = WeightAssignment::<Qq>::specialized(b, &mut ctx.rng(6), None);
    let z2: Vec<GaussRat> = w.z.iter().map(|z| z.mul(z).classical_limit().expect("constant")).collect();
    let spec = ClassSpec::sp(b.clone(), z2).map_err(|e| SuiteError::Config(e.to_string()))?;
    checks.extend(classical::verify_class(&spec, &mut rng));
    checks.extend(classical::verify_bridge(b, &w)?);
    Ok(checks)
}

/// Worst status per anchor over the given reports.
pub fn coverage(reports: &[Report], suites: &[&str]) -> Vec<(String, String, String)> {
    let mut seen: HashMap<(String, String), crate::report::Status> = HashMap::new();
    for r in reports {
        for c in &r.checks {
            let key = (r.suite.clone(), c.anchor.clone());
            let s = seen.entry(key).or_insert(c.status);
            *s = s.combine(c.status);
        }
    }
    let mut out = Vec::new();
    for suite in SUITES {
        for a in registry(suite) {
            let status = if !suites.contains(&suite) {
                "not-run".to_string()
            } else {
                match seen.get(&(suite.to_string(), a.to_string())) {
                    Some(s) => format!("{s:?}").to_lowercase(),
                    None => "not-run".to_string(),
                }
            };
            out.push((suite.to_string(), a.to_string(), status));
        }
    }
    out
}
