//! The quotient `Ĝ²(n)/A₂(n)` and related predicates.

use super::{GHat2, JetGroup, G2};

/// A coset `(a, f)·A₂`, stored by its unique symmetric representative `(a, f_s)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotClassHat {
    rep: G2,
}

impl QuotClassHat {
    /// The class of `x`.
    pub fn of(x: &GHat2) -> Self {
        let (rep, _) = x.decompose();
        QuotClassHat { rep }
    }

    pub fn representative(&self) -> &G2 {
        &self.rep
    }

    pub fn contains(&self, x: &GHat2) -> bool {
        coset_equal(&self.rep.to_hat(), x)
    }

    /// Coset product via representatives, re-canonicalized.
    pub fn mul(&self, rhs: &QuotClassHat) -> QuotClassHat {
        QuotClassHat::of(&self.rep.to_hat().mul(&rhs.rep.to_hat()))
    }

    pub fn inv(&self) -> QuotClassHat {
        QuotClassHat::of(&self.rep.to_hat().inv())
    }

    pub fn identity(n: usize) -> Self {
        QuotClassHat { rep: G2::identity(n) }
    }
}

/// `μ((a, f)A₂) = (a, f_s)`.
pub fn mu(c: &QuotClassHat) -> G2 {
    c.rep.clone()
}

pub fn mu_inv(g: &G2) -> QuotClassHat {
    QuotClassHat { rep: g.clone() }
}

/// Whether `x` and `y` lie in the same `A₂`-coset: `a = a′` and `f_s = f′_s`.
pub fn coset_equal(x: &GHat2, y: &GHat2) -> bool {
    x.a == y.a && x.f.sym_part() == y.f.sym_part()
}

pub fn in_g2(x: &GHat2) -> bool {
    x.f.is_symmetric()
}

/// Membership in the subgroup `G¹ × A₂` of `Ĝ²`: `h^{ij}_k = -h^{ik}_j`.
pub fn in_g1xa2(x: &GHat2) -> bool {
    x.f.is_skew()
}
