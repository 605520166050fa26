//! The extension `F²M ×_{G²} Ĝ²(n)` and the trivialization of `π̂²₂`.

use super::{HolFrame, SemiHolFrame};
use crate::bilinear::Bilinear;
use crate::groups::{GHat2, JetGroup, G2};

/// A class `[(p, k)]` under `(p, k) ~ (pα, α⁻¹k)`, `α ∈ G²(n)`.
///
/// Stored canonically with `k = (I, h)`, `h` skew: the `G²` factor of `k` is
/// absorbed into `p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtClass {
    p: HolFrame,
    k: GHat2,
}

impl ExtClass {
    pub fn new(p: HolFrame, k: GHat2) -> Self {
        let (alpha, h) = k.decompose();
        ExtClass {
            p: p.act(&alpha),
            k: GHat2::translation(h),
        }
    }

    pub fn p(&self) -> &HolFrame {
        &self.p
    }

    pub fn k(&self) -> &GHat2 {
        &self.k
    }

    /// The class of `(p, k·k′)`.
    pub fn act(&self, k2: &GHat2) -> ExtClass {
        ExtClass::new(self.p.clone(), self.k.mul(k2))
    }
}

/// `ϑ([(p, k)]) = p·k`.
pub fn theta(c: &ExtClass) -> SemiHolFrame {
    c.p.to_semihol().act(&c.k)
}

/// `ϑ⁻¹(x, A, F) = [((x, A, F_s), (I, A⁻¹∘F_a))]`.
pub fn theta_inv(q: &SemiHolFrame) -> ExtClass {
    let (g, h) = q.group_part().decompose();
    ExtClass {
        p: HolFrame::at(q.x.clone(), g).expect("symmetric part"),
        k: GHat2::translation(h),
    }
}

/// Chart trivialization of the holonomic frame bundle.
pub fn xi(q: &HolFrame) -> G2 {
    q.group_part()
}

/// Chart trivialization of the semi-holonomic frame bundle; agrees with [`xi`]
/// on holonomic frames.
pub fn xi_hat(p: &SemiHolFrame) -> GHat2 {
    p.group_part()
}

/// Fiber coordinate `h` of `Σ(p) = (π̂²₂(p), (I, h))`: `h = A⁻¹∘F_a`.
pub fn sigma(p: &SemiHolFrame) -> Bilinear {
    Bilinear::post_compose(p.a.inverse_matrix(), &p.f.skew_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::proj_hat22;
    use crate::matrix::GlMatrix;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(51)
    }

    #[test]
    fn trivial_class() {
        let mut r = rng();
        let p = HolFrame::at(random::point(2, &mut r), G2::random(2, &mut r)).unwrap();
        let c = ExtClass::new(p.clone(), GHat2::identity(2));
        assert_eq!(theta(&c), p.to_semihol());
        let back = theta_inv(&p.to_semihol());
        assert!(back.k().is_identity());
        assert_eq!(back, c);
    }

    #[test]
    fn class_is_representative_independent() {
        let mut r = rng();
        for _ in 0..10 {
            let p = HolFrame::at(random::point(3, &mut r), G2::random(3, &mut r)).unwrap();
            let k = GHat2::random(3, &mut r);
            let alpha = G2::random(3, &mut r);
            let c = ExtClass::new(p.clone(), k.clone());
            let c2 = ExtClass::new(p.act(&alpha), alpha.inv().to_hat().mul(&k));
            assert_eq!(c, c2);
            assert_eq!(theta(&c), p.to_semihol().act(&k));
            assert_eq!(theta_inv(&theta(&c)), c);
            assert!(c.k().a.is_identity() && c.k().f.is_skew());
        }
    }

    #[test]
    fn sigma_cases() {
        let mut r = rng();
        let p = HolFrame::at(random::point(3, &mut r), G2::random(3, &mut r)).unwrap();
        assert!(sigma(&p.to_semihol()).is_zero());
        let h = random::skew(3, &mut r);
        let q = SemiHolFrame::new(random::point(3, &mut r), GlMatrix::identity(3), h.clone()).unwrap();
        assert_eq!(sigma(&q), h);
    }

    #[test]
    fn sigma_is_the_group_quotient() {
        let mut r = rng();
        for _ in 0..10 {
            let p = SemiHolFrame::at(random::point(3, &mut r), GHat2::random(3, &mut r)).unwrap();
            let quotient = xi(&proj_hat22(&p)).to_hat().inv().mul(&xi_hat(&p));
            assert_eq!(quotient, GHat2::translation(sigma(&p)));
        }
    }
}
