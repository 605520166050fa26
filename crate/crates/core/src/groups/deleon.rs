//! Two further group structures on `G¹(n) × L₂(n)` found in the literature,
//! with explicit isomorphisms onto [`GHat2`].

use rand::Rng;

use super::laws::check_dims;
use super::{GHat2, JetGroup};
use crate::bilinear::Bilinear;
use crate::error::Result;
use crate::matrix::GlMatrix;
use crate::random;

/// `(a, f)(a′, f′) = (aa′, a′⁻¹∘f(a′, a′) + f′)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeLeon1 {
    pub a: GlMatrix,
    pub f: Bilinear,
}

/// `(a, f)(a′, f′) = (aa′, f + a∘f′(a⁻¹, a⁻¹))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeLeon2 {
    pub a: GlMatrix,
    pub f: Bilinear,
}

impl DeLeon1 {
    pub fn new(a: GlMatrix, f: Bilinear) -> Result<Self> {
        check_dims(a.n(), &[f.n()])?;
        Ok(DeLeon1 { a, f })
    }

    /// `(a, f) ↦ (a, a∘f)`.
    pub fn to_hat2(&self) -> GHat2 {
        GHat2 {
            a: self.a.clone(),
            f: Bilinear::post_compose(self.a.matrix(), &self.f),
        }
    }

    pub fn from_hat2(x: &GHat2) -> Self {
        DeLeon1 {
            a: x.a.clone(),
            f: Bilinear::post_compose(x.a.inverse_matrix(), &x.f),
        }
    }
}

impl DeLeon2 {
    pub fn new(a: GlMatrix, f: Bilinear) -> Result<Self> {
        check_dims(a.n(), &[f.n()])?;
        Ok(DeLeon2 { a, f })
    }

    /// `(a, f) ↦ (a, f(a, a))`.
    pub fn to_hat2(&self) -> GHat2 {
        GHat2 {
            a: self.a.clone(),
            f: Bilinear::pre_compose(&self.f, self.a.matrix(), self.a.matrix()),
        }
    }

    pub fn from_hat2(x: &GHat2) -> Self {
        let ai = x.a.inverse_matrix();
        DeLeon2 {
            a: x.a.clone(),
            f: Bilinear::pre_compose(&x.f, ai, ai),
        }
    }
}

impl JetGroup for DeLeon1 {
    const TAG: &'static str = "deleon1";

    fn n(&self) -> usize {
        self.a.n()
    }

    fn identity(n: usize) -> Self {
        DeLeon1 {
            a: GlMatrix::identity(n),
            f: Bilinear::zero(n),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let ap = rhs.a.matrix();
        let moved = Bilinear::post_compose(
            rhs.a.inverse_matrix(),
            &Bilinear::pre_compose(&self.f, ap, ap),
        );
        DeLeon1 {
            a: self.a.mul(&rhs.a),
            f: moved.add(&rhs.f),
        }
    }

    /// `(a⁻¹, -a∘f(a⁻¹, a⁻¹))`
    fn inv(&self) -> Self {
        let ai = self.a.inverse_matrix();
        DeLeon1 {
            a: self.a.inv(),
            f: Bilinear::post_compose(self.a.matrix(), &Bilinear::pre_compose(&self.f, ai, ai)).neg(),
        }
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        DeLeon1 {
            a: random::gl(n, rng),
            f: random::bilinear(n, rng),
        }
    }
}

impl JetGroup for DeLeon2 {
    const TAG: &'static str = "deleon2";

    fn n(&self) -> usize {
        self.a.n()
    }

    fn identity(n: usize) -> Self {
        DeLeon2 {
            a: GlMatrix::identity(n),
            f: Bilinear::zero(n),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let ai = self.a.inverse_matrix();
        let moved = Bilinear::post_compose(self.a.matrix(), &Bilinear::pre_compose(&rhs.f, ai, ai));
        DeLeon2 {
            a: self.a.mul(&rhs.a),
            f: self.f.add(&moved),
        }
    }

    /// `(a⁻¹, -a⁻¹∘f(a, a))`
    fn inv(&self) -> Self {
        let a = self.a.matrix();
        DeLeon2 {
            a: self.a.inv(),
            f: Bilinear::post_compose(self.a.inverse_matrix(), &Bilinear::pre_compose(&self.f, a, a))
                .neg(),
        }
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        DeLeon2 {
            a: random::gl(n, rng),
            f: random::bilinear(n, rng),
        }
    }
}
