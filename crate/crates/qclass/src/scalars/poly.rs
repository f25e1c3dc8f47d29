use super::Field;

/// Dense univariate polynomial, coefficients from degree 0 upward, no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<K> {
    pub(crate) c: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![K::one()] }
    }

    pub fn constant(k: K) -> Self {
        let mut p = Poly { c: vec![k] };
        p.trim();
        p
    }

    pub fn from_coeffs(c: Vec<K>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    pub fn monomial(k: K, deg: usize) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let mut c = vec![K::zero(); deg + 1];
        c[deg] = k;
        Poly { c }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&K> {
        self.c.last()
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    /// Number of leading zero coefficients from degree 0 (the `q`-adic valuation).
    pub fn valuation(&self) -> usize {
        self.c.iter().take_while(|x| x.is_zero()).count()
    }

    pub fn shift_down(&self, k: usize) -> Self {
        Poly { c: self.c[k.min(self.c.len())..].to_vec() }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![K::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (i, x) in short.c.iter().enumerate() {
            c[i] = c[i].add(x);
        }
        Self::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|x| x.neg()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            };
            c.push(v);
        }
        Self::from_coeffs(c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        let mut c = vec![K::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        Poly { c: self.c.iter().map(|x| x.mul(k)).collect() }
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lead().expect("polynomial division by zero");
        let dinv = dl.inv().expect("nonzero lead");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let mut qc = vec![K::zero(); self.c.len() - dd];
        for k in (0..qc.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let coef = top.mul(&dinv);
            for (j, dj) in d.c.iter().enumerate() {
                if dj.is_zero() {
                    continue;
                }
                r[k + j] = r[k + j].sub(&coef.mul(dj));
            }
            qc[k] = coef;
        }
        r.truncate(dd);
        (Self::from_coeffs(qc), Self::from_coeffs(r))
    }

    /// Exact quotient; debug-asserts a zero remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        if d.is_one() {
            return self.clone();
        }
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        let mut a = self.monic();
        let mut b = o.monic();
        loop {
            if b.degree() == Some(0) {
                return Self::one();
            }
            let (_, r) = a.divrem(&b);
            if r.is_zero() {
                return b;
            }
            a = b;
            b = r.monic();
        }
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn eval_one(&self) -> K {
        let mut acc = K::zero();
        for c in &self.c {
            acc = acc.add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero();
        }
        let c = self.c[1..]
            .iter()
            .enumerate()
            .map(|(i, x)| x.mul(&K::from_int(i as i64 + 1)))
            .collect();
        Self::from_coeffs(c)
    }
}
