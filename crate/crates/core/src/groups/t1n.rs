//! `(T¹ₙL¹ₙ, ∗)` and the isomorphism `τ` onto `Ĝ²(n)`.

use rand::Rng;

use super::laws::check_dims;
use super::{GHat2, JetGroup};
use crate::bilinear::Bilinear;
use crate::error::Result;
use crate::matrix::{GlMatrix, SquareMatrix};
use crate::random;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct T1nL1n {
    pub a: GlMatrix,
    pub f: Bilinear,
}

impl T1nL1n {
    pub fn new(a: GlMatrix, f: Bilinear) -> Result<Self> {
        check_dims(a.n(), &[f.n()])?;
        Ok(T1nL1n { a, f })
    }
}

impl JetGroup for T1nL1n {
    const TAG: &'static str = "t1n";

    fn n(&self) -> usize {
        self.a.n()
    }

    fn identity(n: usize) -> Self {
        T1nL1n {
            a: GlMatrix::identity(n),
            f: Bilinear::zero(n),
        }
    }

    /// `(aa′, f(a′, I) + a∘f′(I, a⁻¹))`
    fn mul(&self, rhs: &Self) -> Self {
        let id = SquareMatrix::identity(self.n());
        let left = Bilinear::pre_compose(&self.f, rhs.a.matrix(), &id);
        let right = Bilinear::post_compose(
            self.a.matrix(),
            &Bilinear::pre_compose(&rhs.f, &id, self.a.inverse_matrix()),
        );
        T1nL1n {
            a: self.a.mul(&rhs.a),
            f: left.add(&right),
        }
    }

    fn inv(&self) -> Self {
        tau_inv(&tau(self).inv())
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        T1nL1n {
            a: random::gl(n, rng),
            f: random::bilinear(n, rng),
        }
    }
}

/// The law in coordinates,
/// `(a^i_m c^m_j, a^{il}_k c^l_j + a^i_l c^{lj}_m b^m_k)` with `b = a⁻¹`,
/// written with its own index loops.
pub fn mul_t1n_coordinates(x: &T1nL1n, y: &T1nL1n) -> T1nL1n {
    let n = x.n();
    let a = x.a.matrix();
    let b = x.a.inverse_matrix();
    let c = y.a.matrix();
    let f = &x.f;
    let g = &y.f;
    let coeffs = Bilinear::from_fn(n, |i, j, k| {
        let mut acc = Rational::zero();
        for l in 0..n {
            acc += f.get(i, l, k) * c.get(l, j);
        }
        for l in 0..n {
            let ail = a.get(i, l);
            if ail.is_zero() {
                continue;
            }
            for m in 0..n {
                acc += ail * g.get(l, j, m) * b.get(m, k);
            }
        }
        acc
    });
    T1nL1n {
        a: x.a.mul(&y.a),
        f: coeffs,
    }
}

/// `τ(a, f) = (a, f(I, a))`.
pub fn tau(x: &T1nL1n) -> GHat2 {
    let id = SquareMatrix::identity(x.n());
    GHat2 {
        a: x.a.clone(),
        f: Bilinear::pre_compose(&x.f, &id, x.a.matrix()),
    }
}

/// `τ⁻¹(a, f) = (a, f(I, a⁻¹))`.
pub fn tau_inv(y: &GHat2) -> T1nL1n {
    let id = SquareMatrix::identity(y.n());
    T1nL1n {
        a: y.a.clone(),
        f: Bilinear::pre_compose(&y.f, &id, y.a.inverse_matrix()),
    }
}
