use super::{Field, GaussRat, ScalarError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Multivariate Laurent polynomial over the Gaussian rationals, used only as
/// the interchange form for scalar text.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, GaussRat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: GaussRat, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &GaussRat)> {
        self.terms.iter()
    }

    /// Prepends an outer variable raised to `e`.
    pub fn lift_outer(&self, e: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut nk = Vec::with_capacity(k.len() + 1);
                nk.push(e);
                nk.extend_from_slice(k);
                (nk, c.clone())
            })
            .collect();
        MPoly { nvars: self.nvars + 1, terms }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &o.terms {
            let v = match terms.get(k) {
                Some(a) => a.add(c),
                None => c.clone(),
            };
            if v.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(k.clone(), v);
            }
        }
        MPoly { nvars: self.nvars.max(o.nvars), terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc = MPoly::zero(self.nvars.max(o.nvars));
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let k: Vec<i64> = k1.iter().zip(k2.iter()).map(|(a, b)| a + b).collect();
                let single = MPoly { nvars: acc.nvars, terms: BTreeMap::from([(k, c1.mul(c2))]) };
                acc = acc.add(&single);
            }
        }
        acc
    }

    fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut s = c.to_string();
            for (k, &x) in e.iter().enumerate() {
                if x != 0 {
                    s.push_str(&format!("*{}^{}", names[k], x));
                }
            }
            parts.push(s);
        }
        parts.join("+")
    }
}

/// Canonical text `((a+bi)*q^k*z1^m+...)/(...)`; `names[k]` labels variable `k`.
pub fn format_scalar<F: Field>(s: &F, names: &[&str]) -> String {
    assert!(names.len() >= F::NVARS, "missing variable names");
    let (n, d) = s.to_flat();
    format!("({})/({})", n.render(names), d.render(names))
}

/// Inverse of [`format_scalar`].
pub fn parse_scalar<F: Field>(text: &str, names: &[&str]) -> Result<F, ScalarError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, names };
    p.expect(b'(')?;
    let num: F = p.poly()?;
    p.expect(b')')?;
    p.expect(b'/')?;
    p.expect(b'(')?;
    let den: F = p.poly()?;
    p.expect(b')')?;
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    let inv = den.inv().ok_or_else(|| ScalarError::Malformed("zero denominator".into()))?;
    Ok(num.mul(&inv))
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ScalarError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn poly<F: Field>(&mut self) -> Result<F, ScalarError> {
        if self.peek() == Some(b'0') {
            self.pos += 1;
            return Ok(F::zero());
        }
        let mut acc = self.term::<F>()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            acc = acc.add(&self.term::<F>()?);
        }
        Ok(acc)
    }

    fn term<F: Field>(&mut self) -> Result<F, ScalarError> {
        self.expect(b'(')?;
        let re = self.rational()?;
        let neg = match self.peek() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => return Err(self.err("expected sign of imaginary part")),
        };
        self.pos += 1;
        let mut im = self.rational()?;
        if neg {
            im = -im;
        }
        self.expect(b'i')?;
        self.expect(b')')?;
        let mut acc = F::from_gauss(&GaussRat::new(re, im));
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
            let k = self
                .names
                .iter()
                .position(|n| *n == name)
                .filter(|&k| k < F::NVARS)
                .ok_or_else(|| self.err(&format!("unknown variable '{name}'")))?;
            self.expect(b'^')?;
            let e = self.integer()?;
            let e = i64::try_from(e).map_err(|_| self.err("exponent out of range"))?;
            acc = acc.mul(&F::var(k).pow(e));
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let dstart = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == dstart {
            return Err(self.err("expected digits"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        txt.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn rational(&mut self) -> Result<BigRational, ScalarError> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.integer()?;
            if d.is_zero() {
                return Err(self.err("zero denominator in coefficient"));
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }
}
