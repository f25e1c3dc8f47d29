use super::element::{Algebra, Element, Sign};
use crate::rootdata::BlockStructure;
use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecialError {
    #[error("the monomials psi_i are defined only without GL blocks")]
    NeedsSymmetricCase,
}

/// The root vectors attached to a block structure.
#[derive(Debug, Clone)]
pub struct DeltaVectors<F> {
    pub f_gamma: Element<F>,
    pub f_gamma_tilde: Element<F>,
    pub f_delta: Element<F>,
}

impl<F: Field> Algebra<F> {
    fn gamma_range(&self, b: &BlockStructure) -> (usize, usize) {
        (b.alpha_index(), self.n() - 2)
    }

    /// `f_γ`, `f̃_γ` and `f_δ = [f_γ, [f̃_γ, f_β]_{q^{-2}}]_{q²}`.
    pub fn delta_vectors(&self, b: &BlockStructure) -> DeltaVectors<F> {
        let (i, j) = self.gamma_range(b);
        let f_gamma = self.f_mu(i, j);
        let f_gamma_tilde = self.f_mu_tilde(i, j);
        let fb = self.letter(Sign::F, self.n() - 1);
        let inner = self.q_commutator(&f_gamma_tilde, &fb, &self.qp(-2));
        let f_delta = self.q_commutator(&f_gamma, &inner, &self.qp(2));
        DeltaVectors { f_gamma, f_gamma_tilde, f_delta }
    }

    /// `[f̃_γ, [f_γ, f_β]_{q²}]_{q^{-2}}`, the mirrored form of `f_δ`.
    pub fn f_delta_mirrored(&self, b: &BlockStructure) -> Element<F> {
        let d = self.delta_vectors(b);
        let fb = self.letter(Sign::F, self.n() - 1);
        let inner = self.q_commutator(&d.f_gamma, &fb, &self.qp(2));
        self.q_commutator(&d.f_gamma_tilde, &inner, &self.qp(-2))
    }

    /// `f_δ` written as one chain of single-letter commutators:
    /// `[f_{α_1},[f_{α_2},…[f_{α_p},[f_{α_1},…[f_{α_{p-1}},[f_{α_p},f_β]_{q²}]_q…]_q]_{q^{-1}}…]_{q^{-1}}]_{q^{-2}}`
    /// with `α_1 = α_{n-p}`.
    pub fn f_delta_chain(&self, b: &BlockStructure) -> Element<F> {
        let a = b.alpha_index();
        let p = b.p;
        let f = |k: usize| self.letter(Sign::F, a + k - 1);
        let mut z = self.letter(Sign::F, self.n() - 1);
        z = self.q_commutator(&f(p), &z, &self.qp(2));
        for k in (1..p).rev() {
            z = self.q_commutator(&f(k), &z, &self.q);
        }
        for k in (2..=p).rev() {
            z = self.q_commutator(&f(k), &z, &self.qp(-1));
        }
        self.q_commutator(&f(1), &z, &self.qp(-2))
    }
}

/// Letters of `φ_i`, `i = 1..=p+1`, leftmost first:
/// `(f_{α_{m+i-1}}…f_{α_{n-1}} f_β f_{α_{m+i-2}}…f_{α_m})(f_{α_{n-1}}…f_{α_m})`
/// with `α_m = α_{n-p}`.
pub fn phi_words(b: &BlockStructure) -> Vec<Vec<usize>> {
    let n = b.n;
    let a = b.alpha_index();
    (1..=b.p + 1)
        .map(|i| {
            let mut w: Vec<usize> = (a + i - 1..n - 1).collect();
            w.push(n - 1);
            w.extend((a..a + i - 1).rev());
            w.extend((a..n - 1).rev());
            w
        })
        .collect()
}

/// Letters of `ψ_i = f_{α_i}…f_{α_m}`, `i = 1..=m`.
pub fn psi_words(b: &BlockStructure) -> Result<Vec<Vec<usize>>, SpecialError> {
    if b.ell() > 0 {
        return Err(SpecialError::NeedsSymmetricCase);
    }
    Ok((1..=b.m).map(|i| (i - 1..b.m).collect()).collect())
}
