use rand::Rng;

use super::JetGroup;
use crate::bilinear::Bilinear;
use crate::error::{Error, Result};
use crate::matrix::GlMatrix;
use crate::random;

/// Structure group of non-holonomic second-order frames, `G¹ × G¹ × L₂`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTilde2 {
    pub a: GlMatrix,
    pub b: GlMatrix,
    pub f: Bilinear,
}

impl GTilde2 {
    pub fn new(a: GlMatrix, b: GlMatrix, f: Bilinear) -> Result<Self> {
        check_dims(a.n(), &[b.n(), f.n()])?;
        Ok(GTilde2 { a, b, f })
    }
}

impl JetGroup for GTilde2 {
    const TAG: &'static str = "tilde2";

    fn n(&self) -> usize {
        self.a.n()
    }

    fn identity(n: usize) -> Self {
        GTilde2 {
            a: GlMatrix::identity(n),
            b: GlMatrix::identity(n),
            f: Bilinear::zero(n),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let f = Bilinear::post_compose(self.a.matrix(), &rhs.f).add(&Bilinear::pre_compose(
            &self.f,
            rhs.a.matrix(),
            rhs.b.matrix(),
        ));
        GTilde2 {
            a: self.a.mul(&rhs.a),
            b: self.b.mul(&rhs.b),
            f,
        }
    }

    /// `(a⁻¹, b⁻¹, -a⁻¹∘f(a⁻¹, b⁻¹))`
    fn inv(&self) -> Self {
        let ai = self.a.inv();
        let bi = self.b.inv();
        let f = Bilinear::post_compose(
            ai.matrix(),
            &Bilinear::pre_compose(&self.f, ai.matrix(), bi.matrix()),
        )
        .neg();
        GTilde2 { a: ai, b: bi, f }
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        GTilde2 {
            a: random::gl(n, rng),
            b: random::gl(n, rng),
            f: random::bilinear(n, rng),
        }
    }
}

/// Structure group of semi-holonomic second-order frames, `G¹ × L₂`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GHat2 {
    pub a: GlMatrix,
    pub f: Bilinear,
}

impl GHat2 {
    pub fn new(a: GlMatrix, f: Bilinear) -> Result<Self> {
        check_dims(a.n(), &[f.n()])?;
        Ok(GHat2 { a, f })
    }

    /// The element `(I, h)`.
    pub fn translation(h: Bilinear) -> Self {
        GHat2 {
            a: GlMatrix::identity(h.n()),
            f: h,
        }
    }

    /// `self · inner · self⁻¹` by the closed form
    /// `(aba⁻¹, -a∘b∘a⁻¹∘f(a⁻¹,a⁻¹) + a∘g(a⁻¹,a⁻¹) + f(ba⁻¹,ba⁻¹))`.
    pub fn conj(&self, inner: &GHat2) -> GHat2 {
        let a = self.a.matrix();
        let ai = self.a.inverse_matrix();
        let b = inner.a.matrix();
        let aba = a.mul(b).mul(ai);
        let bai = b.mul(ai);
        let f_ai = Bilinear::pre_compose(&self.f, ai, ai);
        let t1 = Bilinear::post_compose(&aba, &f_ai).neg();
        let t2 = Bilinear::post_compose(a, &Bilinear::pre_compose(&inner.f, ai, ai));
        let t3 = Bilinear::pre_compose(&self.f, &bai, &bai);
        GHat2 {
            a: self.a.mul(&inner.a).mul(&self.a.inv()),
            f: t1.add(&t2).add(&t3),
        }
    }

    /// `(a, f_s)` and the skew `h = a⁻¹∘f_a` with `self = (a, f_s)·(I, h)`.
    pub fn decompose(&self) -> (G2, Bilinear) {
        let g = G2 {
            a: self.a.clone(),
            f: self.f.sym_part(),
        };
        let h = Bilinear::post_compose(self.a.inverse_matrix(), &self.f.skew_part());
        (g, h)
    }

    pub fn to_g2(&self) -> Result<G2> {
        G2::new(self.a.clone(), self.f.clone())
    }
}

impl JetGroup for GHat2 {
    const TAG: &'static str = "hat2";

    fn n(&self) -> usize {
        self.a.n()
    }

    fn identity(n: usize) -> Self {
        GHat2 {
            a: GlMatrix::identity(n),
            f: Bilinear::zero(n),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        GHat2 {
            a: self.a.mul(&rhs.a),
            f: hat_law(&self.a, &self.f, &rhs.a, &rhs.f),
        }
    }

    /// `(a⁻¹, -a⁻¹∘f(a⁻¹, a⁻¹))`
    fn inv(&self) -> Self {
        let ai = self.a.inv();
        let f = Bilinear::post_compose(
            ai.matrix(),
            &Bilinear::pre_compose(&self.f, ai.matrix(), ai.matrix()),
        )
        .neg();
        GHat2 { a: ai, f }
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        GHat2 {
            a: random::gl(n, rng),
            f: random::bilinear(n, rng),
        }
    }
}

fn hat_law(a: &GlMatrix, f: &Bilinear, a2: &GlMatrix, f2: &Bilinear) -> Bilinear {
    Bilinear::post_compose(a.matrix(), f2).add(&Bilinear::pre_compose(f, a2.matrix(), a2.matrix()))
}

/// Structure group of holonomic second-order frames, `G¹ × S₂`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct G2 {
    a: GlMatrix,
    f: Bilinear,
}

impl G2 {
    pub fn new(a: GlMatrix, f: Bilinear) -> Result<Self> {
        check_dims(a.n(), &[f.n()])?;
        if !f.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(G2 { a, f })
    }

    pub fn a(&self) -> &GlMatrix {
        &self.a
    }

    pub fn f(&self) -> &Bilinear {
        &self.f
    }

    pub fn to_hat(&self) -> GHat2 {
        GHat2 {
            a: self.a.clone(),
            f: self.f.clone(),
        }
    }
}

impl JetGroup for G2 {
    const TAG: &'static str = "g2";

    fn n(&self) -> usize {
        self.a.n()
    }

    fn identity(n: usize) -> Self {
        G2 {
            a: GlMatrix::identity(n),
            f: Bilinear::zero(n),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        G2 {
            a: self.a.mul(&rhs.a),
            f: hat_law(&self.a, &self.f, &rhs.a, &rhs.f),
        }
    }

    fn inv(&self) -> Self {
        let h = self.to_hat().inv();
        G2 { a: h.a, f: h.f }
    }

    fn in_carrier(&self) -> bool {
        self.f.is_symmetric()
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        G2 {
            a: random::gl(n, rng),
            f: random::symmetric(n, rng),
        }
    }
}

/// Structure group of non-holonomic frames over linear frames, `G¹ × L₂`
/// with `(a, f)(a′, f′) = (aa′, f′ + f(I, a′))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTilde21 {
    pub a: GlMatrix,
    pub f: Bilinear,
}

impl GTilde21 {
    pub fn new(a: GlMatrix, f: Bilinear) -> Result<Self> {
        check_dims(a.n(), &[f.n()])?;
        Ok(GTilde21 { a, f })
    }
}

fn tilde21_law(f: &Bilinear, a2: &GlMatrix, f2: &Bilinear) -> Bilinear {
    let id = crate::matrix::SquareMatrix::identity(f.n());
    f2.add(&Bilinear::pre_compose(f, &id, a2.matrix()))
}

fn tilde21_inv(a: &GlMatrix, f: &Bilinear) -> (GlMatrix, Bilinear) {
    let ai = a.inv();
    let id = crate::matrix::SquareMatrix::identity(f.n());
    let g = Bilinear::pre_compose(f, &id, ai.matrix()).neg();
    (ai, g)
}

impl JetGroup for GTilde21 {
    const TAG: &'static str = "tilde21";

    fn n(&self) -> usize {
        self.a.n()
    }

    fn identity(n: usize) -> Self {
        GTilde21 {
            a: GlMatrix::identity(n),
            f: Bilinear::zero(n),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        GTilde21 {
            a: self.a.mul(&rhs.a),
            f: tilde21_law(&self.f, &rhs.a, &rhs.f),
        }
    }

    /// `(a⁻¹, -f(I, a⁻¹))`
    fn inv(&self) -> Self {
        let (a, f) = tilde21_inv(&self.a, &self.f);
        GTilde21 { a, f }
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        GTilde21 {
            a: random::gl(n, rng),
            f: random::bilinear(n, rng),
        }
    }
}

/// Elements `(I, l, h)` of [`GTilde2`] with `h` skew, under the law
/// `(I,l,h)(I,l′,h′) = (I, ll′, h′ + h(I,l′))`.
///
/// For `n ≥ 2` the law does not keep `h` skew: `h(I, l′)` is skew only when
/// `l′` is a multiple of the identity. [`GTilde22::new`] validates skewness of
/// user-supplied data; products and inverses are computed by the law as given
/// and [`JetGroup::in_carrier`] reports whether the skew condition survived.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTilde22 {
    l: GlMatrix,
    h: Bilinear,
}

impl GTilde22 {
    pub fn new(l: GlMatrix, h: Bilinear) -> Result<Self> {
        check_dims(l.n(), &[h.n()])?;
        if !h.is_skew() {
            return Err(Error::NotSkew);
        }
        Ok(GTilde22 { l, h })
    }

    /// Builds without the skew check; used for values produced by the law.
    pub fn from_law(l: GlMatrix, h: Bilinear) -> Self {
        assert_eq!(l.n(), h.n(), "dimension mismatch");
        GTilde22 { l, h }
    }

    pub fn l(&self) -> &GlMatrix {
        &self.l
    }

    pub fn h(&self) -> &Bilinear {
        &self.h
    }

    /// The element `(I, l, h)` of [`GTilde2`].
    pub fn to_tilde2(&self) -> GTilde2 {
        GTilde2 {
            a: GlMatrix::identity(self.n()),
            b: self.l.clone(),
            f: self.h.clone(),
        }
    }

    /// The same data read as a [`GTilde21`] element.
    pub fn to_tilde21(&self) -> GTilde21 {
        GTilde21 {
            a: self.l.clone(),
            f: self.h.clone(),
        }
    }
}

impl JetGroup for GTilde22 {
    const TAG: &'static str = "tilde22";

    fn n(&self) -> usize {
        self.l.n()
    }

    fn identity(n: usize) -> Self {
        GTilde22 {
            l: GlMatrix::identity(n),
            h: Bilinear::zero(n),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        GTilde22 {
            l: self.l.mul(&rhs.l),
            h: tilde21_law(&self.h, &rhs.l, &rhs.h),
        }
    }

    /// `(l⁻¹, -h(I, l⁻¹))`
    fn inv(&self) -> Self {
        let (l, h) = tilde21_inv(&self.l, &self.h);
        GTilde22 { l, h }
    }

    fn in_carrier(&self) -> bool {
        self.h.is_skew()
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        GTilde22 {
            l: random::gl(n, rng),
            h: random::skew(n, rng),
        }
    }
}

pub(super) fn check_dims(n: usize, others: &[usize]) -> Result<()> {
    for &m in others {
        if m != n {
            return Err(Error::DimensionMismatch { expected: n, got: m });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::SquareMatrix;
    use crate::rational::Rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    /// Tilde2 law by explicit index loops, independent of pre/post compose.
    fn tilde2_law_loops(x: &GTilde2, y: &GTilde2) -> Bilinear {
        let n = x.n();
        let (a, f) = (x.a.matrix(), &x.f);
        let (a2, b2, f2) = (y.a.matrix(), y.b.matrix(), &y.f);
        Bilinear::from_fn(n, |k, i, j| {
            let mut acc = Rational::zero();
            for m in 0..n {
                acc += a.get(k, m) * f2.get(m, i, j);
            }
            for p in 0..n {
                for q in 0..n {
                    acc += f.get(k, p, q) * a2.get(p, i) * b2.get(q, j);
                }
            }
            acc
        })
    }

    #[test]
    fn tilde2_translations_add() {
        let mut r = rng();
        let f = random::bilinear(3, &mut r);
        let g = random::bilinear(3, &mut r);
        let i = GlMatrix::identity(3);
        let x = GTilde2::new(i.clone(), i.clone(), f.clone()).unwrap();
        let y = GTilde2::new(i.clone(), i.clone(), g.clone()).unwrap();
        assert_eq!(x.mul(&y).f, f.add(&g));
    }

    #[test]
    fn tilde2_linear_parts_multiply() {
        let mut r = rng();
        let (a, b, a2, b2) = (
            random::gl(2, &mut r),
            random::gl(2, &mut r),
            random::gl(2, &mut r),
            random::gl(2, &mut r),
        );
        let x = GTilde2::new(a.clone(), b.clone(), Bilinear::zero(2)).unwrap();
        let y = GTilde2::new(a2.clone(), b2.clone(), Bilinear::zero(2)).unwrap();
        let p = x.mul(&y);
        assert_eq!(p, GTilde2::new(a.mul(&a2), b.mul(&b2), Bilinear::zero(2)).unwrap());
    }

    #[test]
    fn tilde2_law_matches_loops() {
        let mut r = rng();
        for _ in 0..20 {
            let x = GTilde2::random(2, &mut r);
            let y = GTilde2::random(2, &mut r);
            assert_eq!(x.mul(&y).f, tilde2_law_loops(&x, &y));
        }
    }

    #[test]
    fn hat2_inverse_closed_forms() {
        let mut r = rng();
        let f = random::bilinear(2, &mut r);
        let x = GHat2::translation(f.clone());
        assert_eq!(x.inv(), GHat2::translation(f.neg()));
        let a = random::gl(2, &mut r);
        let y = GHat2::new(a.clone(), Bilinear::zero(2)).unwrap();
        assert_eq!(y.inv(), GHat2::new(a.inv(), Bilinear::zero(2)).unwrap());
        for _ in 0..20 {
            let x = GHat2::random(2, &mut r);
            assert!(x.mul(&x.inv()).is_identity());
            assert!(x.inv().mul(&x).is_identity());
        }
    }

    #[test]
    fn g2_rejects_non_symmetric() {
        let mut f = Bilinear::zero(2);
        f.set(0, 0, 1, Rational::one());
        assert_eq!(G2::new(GlMatrix::identity(2), f).unwrap_err(), Error::NotSymmetric);
    }

    #[test]
    fn tilde22_rejects_non_skew() {
        let mut h = Bilinear::zero(2);
        h.set(0, 0, 1, Rational::one());
        assert_eq!(GTilde22::new(GlMatrix::identity(2), h).unwrap_err(), Error::NotSkew);
    }

    #[test]
    fn identity_inverts_to_itself() {
        assert!(GTilde2::identity(3).inv().is_identity());
        assert!(GHat2::identity(3).inv().is_identity());
        assert!(G2::identity(3).inv().is_identity());
        assert!(GTilde21::identity(3).inv().is_identity());
        assert!(GTilde22::identity(3).inv().is_identity());
    }

    #[test]
    fn tilde21_translation_inverse() {
        let mut r = rng();
        let f = random::bilinear(3, &mut r);
        let x = GTilde21::new(GlMatrix::identity(3), f.clone()).unwrap();
        assert_eq!(x.inv(), GTilde21::new(GlMatrix::identity(3), f.neg()).unwrap());
    }

    #[test]
    fn tilde22_scalar_l_keeps_skew() {
        let mut r = rng();
        let two = GlMatrix::new(SquareMatrix::identity(3).scale(&Rational::from_int(2))).unwrap();
        let x = GTilde22::new(random::gl(3, &mut r), random::skew(3, &mut r)).unwrap();
        let y = GTilde22::new(two, random::skew(3, &mut r)).unwrap();
        assert!(x.mul(&y).in_carrier());
    }

    #[test]
    fn tilde22_general_l_breaks_skew() {
        // h(E1,E2) = E1, l′ = diag(2, 1): h(I,l′)(E1,E2) = E1 but h(I,l′)(E2,E1) = -2E1.
        let mut h = Bilinear::zero(2);
        h.set(0, 0, 1, Rational::one());
        h.set(0, 1, 0, -Rational::one());
        let x = GTilde22::new(GlMatrix::identity(2), h).unwrap();
        let l = GlMatrix::new(SquareMatrix::from_ints(&[&[2, 0], &[0, 1]])).unwrap();
        let y = GTilde22::new(l, Bilinear::zero(2)).unwrap();
        let p = x.mul(&y);
        assert_eq!(p.h().get(0, 0, 1), &Rational::from_int(1));
        assert_eq!(p.h().get(0, 1, 0), &Rational::from_int(-2));
        assert!(!p.in_carrier());
    }
}
