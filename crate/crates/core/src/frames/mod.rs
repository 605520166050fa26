//! Second-order frames over the global chart `ℝⁿ`.
//!
//! A non-holonomic frame `j¹₀φ̃` has coordinates `(x^i, x^i_j, y^i_j, x^{kl}_j)`,
//! stored as `(x, a, b, f)` with `f.get(k, l, j) = x^{kl}_j`. Each fiber is a
//! torsor of its structure group, so a frame is a base point plus a group part
//! and the right action is the group law on that part.
//!
//! - semi-holonomic: `b = a`, stored as `(x, a, f)`
//! - holonomic: semi-holonomic with `f` symmetric in its two arguments

mod doc;
mod extension;
mod projection;

use serde::{Deserialize, Serialize};

use crate::bilinear::Bilinear;
use crate::error::{Error, Result};
use crate::groups::{GHat2, GTilde2, GTilde22, G2};
use crate::matrix::GlMatrix;
use crate::rational::Rational;

pub use doc::FrameDoc;
pub use extension::{sigma, theta, theta_inv, xi, xi_hat, ExtClass};
pub use projection::{
    fiber_hat22_contains, omega, proj_hat22, proj_pi, proj_tilde22, tilde22_preimage, A2Orbit,
};

pub type Point = Vec<Rational>;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrameClass {
    Nonholonomic,
    Semiholonomic,
    Holonomic,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NonHolFrame {
    pub x: Point,
    pub a: GlMatrix,
    pub b: GlMatrix,
    pub f: Bilinear,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemiHolFrame {
    pub x: Point,
    pub a: GlMatrix,
    pub f: Bilinear,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HolFrame {
    x: Point,
    a: GlMatrix,
    f: Bilinear,
}

/// A linear frame `(x, a)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinFrame {
    pub x: Point,
    pub a: GlMatrix,
}

fn check_point(x: &Point, n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.len() });
    }
    Ok(())
}

impl NonHolFrame {
    pub fn new(x: Point, a: GlMatrix, b: GlMatrix, f: Bilinear) -> Result<Self> {
        let n = a.n();
        check_point(&x, n)?;
        for m in [b.n(), f.n()] {
            if m != n {
                return Err(Error::DimensionMismatch { expected: n, got: m });
            }
        }
        Ok(NonHolFrame { x, a, b, f })
    }

    /// The frame over `x` whose group part is `g`.
    pub fn at(x: Point, g: GTilde2) -> Result<Self> {
        NonHolFrame::new(x, g.a, g.b, g.f)
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn group_part(&self) -> GTilde2 {
        GTilde2 {
            a: self.a.clone(),
            b: self.b.clone(),
            f: self.f.clone(),
        }
    }

    /// Right action of `G̃²(n)`.
    pub fn act(&self, g: &GTilde2) -> NonHolFrame {
        use crate::groups::JetGroup;
        let p = self.group_part().mul(g);
        NonHolFrame {
            x: self.x.clone(),
            a: p.a,
            b: p.b,
            f: p.f,
        }
    }

    /// Right action of `G̃²₂(n)`: `(x,a,b,f)(I,l,h) = (x, a, bl, a∘h + f(I,l))`.
    pub fn act_tilde22(&self, g: &GTilde22) -> NonHolFrame {
        let id = crate::matrix::SquareMatrix::identity(self.n());
        let f = Bilinear::post_compose(self.a.matrix(), g.h())
            .add(&Bilinear::pre_compose(&self.f, &id, g.l().matrix()));
        NonHolFrame {
            x: self.x.clone(),
            a: self.a.clone(),
            b: self.b.mul(g.l()),
            f,
        }
    }

    /// Strongest class: holonomic, then semi-holonomic, else non-holonomic.
    pub fn classify(&self) -> FrameClass {
        if self.a != self.b {
            FrameClass::Nonholonomic
        } else if self.f.is_symmetric() {
            FrameClass::Holonomic
        } else {
            FrameClass::Semiholonomic
        }
    }

    pub fn to_semihol(&self) -> Result<SemiHolFrame> {
        if self.a != self.b {
            return Err(Error::KindMismatch {
                expected: "semihol".into(),
                got: "nonhol".into(),
            });
        }
        Ok(SemiHolFrame {
            x: self.x.clone(),
            a: self.a.clone(),
            f: self.f.clone(),
        })
    }
}

impl SemiHolFrame {
    pub fn new(x: Point, a: GlMatrix, f: Bilinear) -> Result<Self> {
        check_point(&x, a.n())?;
        if f.n() != a.n() {
            return Err(Error::DimensionMismatch { expected: a.n(), got: f.n() });
        }
        Ok(SemiHolFrame { x, a, f })
    }

    pub fn at(x: Point, g: GHat2) -> Result<Self> {
        SemiHolFrame::new(x, g.a, g.f)
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn group_part(&self) -> GHat2 {
        GHat2 {
            a: self.a.clone(),
            f: self.f.clone(),
        }
    }

    /// Right action of `Ĝ²(n)`.
    pub fn act(&self, g: &GHat2) -> SemiHolFrame {
        use crate::groups::JetGroup;
        let p = self.group_part().mul(g);
        SemiHolFrame {
            x: self.x.clone(),
            a: p.a,
            f: p.f,
        }
    }

    /// Right action of `h ∈ A₂(n)` through `(I, h)`. `h` is not checked.
    pub fn act_a2(&self, h: &Bilinear) -> SemiHolFrame {
        self.act(&GHat2::translation(h.clone()))
    }

    /// Embedding with `b := a`.
    pub fn to_nonhol(&self) -> NonHolFrame {
        NonHolFrame {
            x: self.x.clone(),
            a: self.a.clone(),
            b: self.a.clone(),
            f: self.f.clone(),
        }
    }

    pub fn to_hol(&self) -> Result<HolFrame> {
        HolFrame::new(self.x.clone(), self.a.clone(), self.f.clone())
    }
}

impl HolFrame {
    pub fn new(x: Point, a: GlMatrix, f: Bilinear) -> Result<Self> {
        check_point(&x, a.n())?;
        if f.n() != a.n() {
            return Err(Error::DimensionMismatch { expected: a.n(), got: f.n() });
        }
        if !f.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(HolFrame { x, a, f })
    }

    pub fn at(x: Point, g: G2) -> Result<Self> {
        HolFrame::new(x, g.a().clone(), g.f().clone())
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn x(&self) -> &Point {
        &self.x
    }

    pub fn a(&self) -> &GlMatrix {
        &self.a
    }

    pub fn f(&self) -> &Bilinear {
        &self.f
    }

    pub fn group_part(&self) -> G2 {
        G2::new(self.a.clone(), self.f.clone()).expect("holonomic frame has symmetric part")
    }

    /// Right action of `G²(n)`.
    pub fn act(&self, g: &G2) -> HolFrame {
        use crate::groups::JetGroup;
        let p = self.group_part().mul(g);
        HolFrame {
            x: self.x.clone(),
            a: p.a().clone(),
            f: p.f().clone(),
        }
    }

    pub fn to_semihol(&self) -> SemiHolFrame {
        SemiHolFrame {
            x: self.x.clone(),
            a: self.a.clone(),
            f: self.f.clone(),
        }
    }

    pub fn to_nonhol(&self) -> NonHolFrame {
        self.to_semihol().to_nonhol()
    }
}

impl LinFrame {
    /// `π¹₀(x, a) = x`.
    pub fn proj_10(&self) -> Point {
        self.x.clone()
    }
}

/// Projections every second-order frame has onto `FM` and `M`.
pub trait SecondOrderFrame {
    /// `(x, a)`: the value `φ̃(0)` of the underlying frame field.
    fn proj_21(&self) -> LinFrame;

    fn proj_20(&self) -> Point {
        self.proj_21().x
    }
}

impl SecondOrderFrame for NonHolFrame {
    fn proj_21(&self) -> LinFrame {
        LinFrame {
            x: self.x.clone(),
            a: self.a.clone(),
        }
    }
}

impl SecondOrderFrame for SemiHolFrame {
    fn proj_21(&self) -> LinFrame {
        LinFrame {
            x: self.x.clone(),
            a: self.a.clone(),
        }
    }
}

impl SecondOrderFrame for HolFrame {
    fn proj_21(&self) -> LinFrame {
        LinFrame {
            x: self.x.clone(),
            a: self.a.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::JetGroup;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(31)
    }

    fn nonhol(n: usize, r: &mut ChaCha8Rng) -> NonHolFrame {
        NonHolFrame::at(random::point(n, r), GTilde2::random(n, r)).unwrap()
    }

    #[test]
    fn identity_action_is_trivial() {
        let mut r = rng();
        let q = nonhol(2, &mut r);
        assert_eq!(q.act(&GTilde2::identity(2)), q);
        let s = SemiHolFrame::at(random::point(2, &mut r), GHat2::random(2, &mut r)).unwrap();
        assert_eq!(s.act(&GHat2::identity(2)), s);
    }

    #[test]
    fn origin_frame_takes_the_group_part() {
        let mut r = rng();
        let x = random::point(2, &mut r);
        let origin = NonHolFrame::at(x.clone(), GTilde2::identity(2)).unwrap();
        let g = GTilde2::random(2, &mut r);
        assert_eq!(origin.act(&g), NonHolFrame::at(x.clone(), g).unwrap());
        let h = GHat2::random(2, &mut r);
        let origin = SemiHolFrame::at(x.clone(), GHat2::identity(2)).unwrap();
        assert_eq!(origin.act(&h), SemiHolFrame::at(x, h).unwrap());
    }

    #[test]
    fn action_is_a_right_action() {
        let mut r = rng();
        let q = nonhol(2, &mut r);
        let g = GTilde2::random(2, &mut r);
        let h = GTilde2::random(2, &mut r);
        assert_eq!(q.act(&g.mul(&h)), q.act(&g).act(&h));
    }

    #[test]
    fn hol_action_stays_holonomic() {
        let mut r = rng();
        let q = HolFrame::at(random::point(3, &mut r), G2::random(3, &mut r)).unwrap();
        let g = G2::random(3, &mut r);
        let p = q.act(&g);
        assert!(p.f().is_symmetric());
        assert_eq!(p.to_semihol(), q.to_semihol().act(&g.to_hat()));
    }

    #[test]
    fn classification() {
        let mut r = rng();
        let x = random::point(2, &mut r);
        let a = random::gl(2, &mut r);
        let sym = random::symmetric(2, &mut r);
        let hol = NonHolFrame::new(x.clone(), a.clone(), a.clone(), sym).unwrap();
        assert_eq!(hol.classify(), FrameClass::Holonomic);
        let mut f = Bilinear::zero(2);
        f.set(0, 0, 1, Rational::one());
        let semi = NonHolFrame::new(x.clone(), a.clone(), a.clone(), f.clone()).unwrap();
        assert_eq!(semi.classify(), FrameClass::Semiholonomic);
        let mut b = random::gl(2, &mut r);
        while b == a {
            b = random::gl(2, &mut r);
        }
        let non = NonHolFrame::new(x, a, b, f).unwrap();
        assert_eq!(non.classify(), FrameClass::Nonholonomic);
    }

    #[test]
    fn tilde22_action_cases() {
        let mut r = rng();
        let q = nonhol(2, &mut r);
        assert_eq!(q.act_tilde22(&GTilde22::identity(2)), q);
        let l = random::gl(2, &mut r);
        let q0 = NonHolFrame::new(q.x.clone(), q.a.clone(), q.b.clone(), Bilinear::zero(2)).unwrap();
        let g = GTilde22::new(l.clone(), Bilinear::zero(2)).unwrap();
        let expected = NonHolFrame::new(q.x.clone(), q.a.clone(), q.b.mul(&l), Bilinear::zero(2)).unwrap();
        assert_eq!(q0.act_tilde22(&g), expected);
    }

    #[test]
    fn tilde22_action_is_tilde2_restriction() {
        let mut r = rng();
        for _ in 0..10 {
            let q = nonhol(3, &mut r);
            let g = GTilde22::random(3, &mut r);
            assert_eq!(q.act_tilde22(&g), q.act(&g.to_tilde2()));
        }
    }

    #[test]
    fn projections_to_fm_and_m() {
        let mut r = rng();
        let q = nonhol(2, &mut r);
        let lin = q.proj_21();
        assert_eq!(lin.x, q.x);
        assert_eq!(lin.a, q.a);
        assert_eq!(q.proj_20(), lin.proj_10());
    }
}
