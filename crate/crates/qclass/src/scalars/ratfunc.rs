use super::{Field, GaussRat, MPoly, Poly, QField, ScalarError};

/// Rational function `x^shift * num(x) / den(x)` in one variable over `K`.
///
/// Canonical form: `num(0) != 0`, `den(0) != 0`, `den` monic, and
/// `gcd(num, den) = 1`. Zero is the empty numerator with `shift = 0`, `den = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<K> {
    shift: i64,
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> RatFunc<K> {
    pub fn constant(k: K) -> Self {
        if k.is_zero() {
            return Self::zero_value();
        }
        RatFunc { shift: 0, num: Poly::constant(k), den: Poly::one() }
    }

    fn zero_value() -> Self {
        RatFunc { shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    /// `k * x^e`.
    pub fn monomial(k: K, e: i64) -> Self {
        if k.is_zero() {
            return Self::zero_value();
        }
        RatFunc { shift: e, num: Poly::constant(k), den: Poly::one() }
    }

    /// Laurent polynomial `x^shift * p(x)`.
    pub fn laurent(p: Poly<K>, shift: i64) -> Self {
        Self::from_parts(p, Poly::one(), shift).expect("unit denominator")
    }

    /// Canonicalizes `x^shift * num / den`.
    pub fn from_parts(num: Poly<K>, den: Poly<K>, shift: i64) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::Malformed("zero denominator".into()));
        }
        Ok(Self::normalize_parts(num, den, shift, true))
    }

    fn normalize_parts(num: Poly<K>, den: Poly<K>, shift: i64, need_gcd: bool) -> Self {
        if num.is_zero() {
            return Self::zero_value();
        }
        let vn = num.valuation();
        let vd = den.valuation();
        let mut num = if vn > 0 { num.shift_down(vn) } else { num };
        let mut den = if vd > 0 { den.shift_down(vd) } else { den };
        let shift = shift + vn as i64 - vd as i64;
        if need_gcd && den.degree() != Some(0) {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        let lc = den.lead().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let li = lc.inv().expect("nonzero lead");
            num = num.scale(&li);
            den = den.scale(&li);
        }
        RatFunc { shift, num, den }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &Poly<K> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<K> {
        &self.den
    }

    /// True when the denominator is 1, i.e. a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Coefficient form when the value is a constant of `K`.
    pub fn as_constant(&self) -> Option<K> {
        if self.num.is_zero() {
            return Some(K::zero());
        }
        if self.shift == 0 && self.den.is_one() && self.num.degree() == Some(0) {
            return Some(self.num.c[0].clone());
        }
        None
    }

    fn add_impl(&self, o: &Self, negate: bool) -> Self {
        if o.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return if negate { o.neg_impl() } else { o.clone() };
        }
        let s = self.shift.min(o.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = o.num.shift_up((o.shift - s) as usize);
        let b = if negate { b.neg() } else { b };
        if self.den == o.den {
            let num = a.add(&b);
            let need = !self.den.is_one();
            return Self::normalize_parts(num, self.den.clone(), s, need);
        }
        let g = self.den.gcd(&o.den);
        let (d1g, d2g) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (self.den.exact_div(&g), o.den.exact_div(&g))
        };
        let num = a.mul(&d2g).add(&b.mul(&d1g));
        let den = self.den.mul(&d2g);
        Self::normalize_parts(num, den, s, true)
    }

    fn neg_impl(&self) -> Self {
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    /// Evaluation at `x = 1`; fails on a pole.
    pub fn eval_one(&self) -> Result<K, ScalarError> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(ScalarError::PoleAtOne);
        }
        Ok(self.num.eval_one().div(&d))
    }

    /// Replaces the variable by a value of the same field.
    pub fn eval_at(&self, x: &Self) -> Option<Self> {
        let lift = |p: &Poly<K>| {
            let mut acc = Self::zero_value();
            for c in p.c.iter().rev() {
                acc = acc.mul_impl(x).add_impl(&Self::constant(c.clone()), false);
            }
            acc
        };
        let d = lift(&self.den);
        let dinv = d.inv_impl()?;
        let mut v = lift(&self.num).mul_impl(&dinv);
        if self.shift != 0 {
            let xi = if self.shift < 0 { x.inv_impl()? } else { x.clone() };
            for _ in 0..self.shift.unsigned_abs() {
                v = v.mul_impl(&xi);
            }
        }
        Some(v)
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero_value();
        }
        let shift = self.shift + o.shift;
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { shift, num: self.num.mul(&o.num), den: Poly::one() };
        }
        let (mut n1, mut d2) = (self.num.clone(), o.den.clone());
        if !d2.is_one() {
            let g = n1.gcd(&d2);
            if !g.is_one() {
                n1 = n1.exact_div(&g);
                d2 = d2.exact_div(&g);
            }
        }
        let (mut n2, mut d1) = (o.num.clone(), self.den.clone());
        if !d1.is_one() {
            let g = n2.gcd(&d1);
            if !g.is_one() {
                n2 = n2.exact_div(&g);
                d1 = d1.exact_div(&g);
            }
        }
        Self::normalize_parts(n1.mul(&n2), d1.mul(&d2), shift, false)
    }

    fn inv_impl(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::normalize_parts(self.den.clone(), self.num.clone(), -self.shift, false))
    }
}

impl<K: Field> Field for RatFunc<K> {
    const NVARS: usize = 1 + K::NVARS;

    fn zero() -> Self {
        Self::zero_value()
    }
    fn one() -> Self {
        Self::constant(K::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.shift == 0 && self.den.is_one() && self.num.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        self.add_impl(o, false)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add_impl(o, true)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_impl(o)
    }
    fn neg(&self) -> Self {
        self.neg_impl()
    }
    fn inv(&self) -> Option<Self> {
        self.inv_impl()
    }
    fn from_gauss(g: &GaussRat) -> Self {
        Self::constant(K::from_gauss(g))
    }
    fn var(k: usize) -> Self {
        if k == 0 {
            Self::monomial(K::one(), 1)
        } else {
            Self::constant(K::var(k - 1))
        }
    }
    fn to_flat(&self) -> (MPoly, MPoly) {
        let nv = Self::NVARS;
        let num_parts: Vec<(MPoly, MPoly)> = self.num.c.iter().map(|c| c.to_flat()).collect();
        let den_parts: Vec<(MPoly, MPoly)> = self.den.c.iter().map(|c| c.to_flat()).collect();
        let mut dens: Vec<MPoly> = Vec::new();
        for (_, d) in num_parts.iter().chain(den_parts.iter()) {
            if !d.is_one() && !dens.contains(d) {
                dens.push(d.clone());
            }
        }
        let build = |parts: &[(MPoly, MPoly)], offset: i64| {
            let mut acc = MPoly::zero(nv);
            for (k, (a, b)) in parts.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut term = a.lift_outer(k as i64 + offset);
                for d in &dens {
                    if d != b {
                        term = term.mul(&d.lift_outer(0));
                    }
                }
                acc = acc.add(&term);
            }
            acc
        };
        if self.num.is_zero() {
            return (MPoly::zero(nv), MPoly::constant(GaussRat::one(), nv));
        }
        (build(&num_parts, self.shift), build(&den_parts, 0))
    }
    fn is_constant(&self) -> bool {
        match self.as_constant() {
            Some(k) => k.is_constant(),
            None => false,
        }
    }
}

impl<K: Field> QField for RatFunc<K> {
    type Base = K;

    fn q_pow(k: i64) -> Self {
        Self::monomial(K::one(), k)
    }
    fn from_base(b: &K) -> Self {
        Self::constant(b.clone())
    }
    fn classical_limit(&self) -> Result<K, ScalarError> {
        self.eval_one()
    }
    fn h_derivative(&self) -> Result<K, ScalarError> {
        let d1 = self.den.eval_one();
        if d1.is_zero() {
            return Err(ScalarError::PoleAtOne);
        }
        let n1 = self.num.eval_one();
        let dn1 = self.num.derivative().eval_one();
        let dd1 = self.den.derivative().eval_one();
        // (x^s N/D)' at 1 = s N/D + (N' D - N D')/D^2
        let base = n1.div(&d1);
        let quot = dn1.mul(&d1).sub(&n1.mul(&dd1)).div(&d1.mul(&d1));
        Ok(base.mul(&K::from_int(self.shift)).add(&quot))
    }
    fn depends_on_q_only(&self) -> bool {
        self.num.c.iter().chain(self.den.c.iter()).all(|c| c.is_constant())
    }
}
