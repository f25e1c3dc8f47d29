//! Exact coefficient fields: Gaussian rationals and towers of univariate
//! rational functions over them. The outermost variable of a tower is `q`.

mod gauss;
mod poly;
mod ratfunc;
mod text;

pub use gauss::GaussRat;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use text::{format_scalar, parse_scalar, MPoly};

use std::fmt;
use std::hash::Hash;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("malformed scalar: {0}")]
    Malformed(String),
    #[error("limit undefined: pole at q = 1")]
    PoleAtOne,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A commutative field with exact arithmetic and canonical representatives,
/// so that `==` is equality of field elements.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    /// Number of transcendental variables adjoined to the Gaussian rationals.
    const NVARS: usize;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_gauss(g: &GaussRat) -> Self;
    /// The `k`-th adjoined variable, `k = 0` being the outermost one.
    fn var(k: usize) -> Self;
    /// Numerator and denominator as flat multivariate Laurent polynomials.
    fn to_flat(&self) -> (MPoly, MPoly);
    /// True when the element involves none of the adjoined variables.
    fn is_constant(&self) -> bool;

    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv().expect("division by zero in exact field"))
    }

    fn from_int(v: i64) -> Self {
        Self::from_gauss(&GaussRat::from_int(v))
    }

    fn imag() -> Self {
        Self::from_gauss(&GaussRat::i())
    }

    fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

impl Field for GaussRat {
    const NVARS: usize = 0;

    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        GaussRat::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        GaussRat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        GaussRat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        GaussRat::mul(self, o)
    }
    fn neg(&self) -> Self {
        GaussRat::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        GaussRat::inv(self)
    }
    fn from_gauss(g: &GaussRat) -> Self {
        g.clone()
    }
    fn var(k: usize) -> Self {
        panic!("Gaussian rationals have no variable {k}")
    }
    fn to_flat(&self) -> (MPoly, MPoly) {
        (MPoly::constant(self.clone(), 0), MPoly::constant(GaussRat::one(), 0))
    }
    fn is_constant(&self) -> bool {
        true
    }
}

/// A field whose outermost variable is `q`, with the evaluations at `q = 1`
/// used for classical and semiclassical limits.
pub trait QField: Field {
    type Base: Field;

    fn q() -> Self {
        Self::var(0)
    }
    /// `q^k` for any integer `k`.
    fn q_pow(k: i64) -> Self;
    fn from_base(b: &Self::Base) -> Self;
    /// Substitution `q := 1`.
    fn classical_limit(&self) -> Result<Self::Base, ScalarError>;
    /// `d/dh s(e^h)` at `h = 0`, i.e. `s'(1)`.
    fn h_derivative(&self) -> Result<Self::Base, ScalarError>;
    /// True when no adjoined variable other than `q` occurs.
    fn depends_on_q_only(&self) -> bool;
}

/// `[k]_q = (q^k - q^-k)/(q - q^-1)`.
pub fn q_integer<F: QField>(k: i64) -> F {
    if k == 0 {
        return F::zero();
    }
    let num = F::q_pow(k).sub(&F::q_pow(-k));
    let den = F::q().sub(&F::q_pow(-1));
    num.div(&den)
}

/// `Q(i)(q)`: the default scalar field (free parameters specialized).
pub type Qq = RatFunc<GaussRat>;
/// `Q(i)(x)(q)`: one free parameter adjoined below `q`.
pub type Qq1 = RatFunc<RatFunc<GaussRat>>;
/// `Q(i)(y)(x)(q)`: two free parameters adjoined below `q`.
pub type Qq2 = RatFunc<RatFunc<RatFunc<GaussRat>>>;
