//! Truncated second-order Taylor calculus for maps `ℝⁿ → ℝⁿ`.
//!
//! This module is the ground truth the group laws are checked against, so it
//! carries its own contraction loops and does not call
//! [`Bilinear::pre_compose`] or [`Bilinear::post_compose`].
//!
//! A [`Map2Jet`] at `base` stands for `F(base + r) ≈ value + jac·r + ½·hess(r, r)`
//! with `hess[k][i][j] = ∂²F^k/∂r^i∂r^j`. A holonomic group element `(a, f)` is
//! the jet at the origin with `value = 0`, `jac = a` and `hess = f`; the ½ lives
//! in the evaluator, not in the stored tensor.

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bilinear::Bilinear;
use crate::error::{Error, Result};
use crate::frames::{NonHolFrame, Point};
use crate::groups::G2;
use crate::matrix::{GlMatrix, SquareMatrix};
use crate::random;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Map2Jet {
    base: Point,
    value: Point,
    jac: SquareMatrix,
    hess: Bilinear,
}

impl Map2Jet {
    pub fn new(base: Point, value: Point, jac: SquareMatrix, hess: Bilinear) -> Result<Self> {
        let n = jac.n();
        for m in [base.len(), value.len(), hess.n()] {
            if m != n {
                return Err(Error::DimensionMismatch { expected: n, got: m });
            }
        }
        if !hess.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Map2Jet { base, value, jac, hess })
    }

    pub fn identity(base: Point) -> Self {
        let n = base.len();
        Map2Jet {
            value: base.clone(),
            base,
            jac: SquareMatrix::identity(n),
            hess: Bilinear::zero(n),
        }
    }

    /// A random jet at `base` with invertible Jacobian and symmetric Hessian.
    pub fn random<R: Rng + ?Sized>(base: Point, rng: &mut R) -> Self {
        let n = base.len();
        Map2Jet {
            base,
            value: random::point(n, rng),
            jac: random::gl(n, rng).matrix().clone(),
            hess: random::symmetric(n, rng),
        }
    }

    pub fn n(&self) -> usize {
        self.jac.n()
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn value(&self) -> &Point {
        &self.value
    }

    pub fn jac(&self) -> &SquareMatrix {
        &self.jac
    }

    pub fn hess(&self) -> &Bilinear {
        &self.hess
    }

    /// Evaluates the quadratic Taylor polynomial at `base + r`.
    pub fn eval_offset(&self, r: &[Rational]) -> Point {
        let n = self.n();
        (0..n)
            .map(|k| {
                let mut acc = self.value[k].clone();
                for i in 0..n {
                    acc += self.jac.get(k, i) * &r[i];
                }
                let mut quad = Rational::zero();
                for i in 0..n {
                    for j in 0..n {
                        quad += self.hess.get(k, i, j) * &r[i] * &r[j];
                    }
                }
                acc + quad.half()
            })
            .collect()
    }
}

fn mat_mul(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    let n = a.n();
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut acc = Rational::zero();
            for m in 0..n {
                acc += a.get(r, m) * b.get(m, c);
            }
            entries.push(acc);
        }
    }
    SquareMatrix::from_vec(n, entries).expect("n*n entries")
}

/// Second-order chain rule for `g ∘ f`:
/// `hess[k][i][j] = Σ_m Jg[k][m] Hf[m][i][j] + Σ_{p,q} Hg[k][p][q] Jf[p][i] Jf[q][j]`.
pub fn compose_2jets(g: &Map2Jet, f: &Map2Jet) -> Result<Map2Jet> {
    if g.n() != f.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: f.n() });
    }
    if g.base != f.value {
        return Err(Error::CompositionDomain);
    }
    let n = g.n();
    let hess = Bilinear::from_fn(n, |k, i, j| {
        let mut acc = Rational::zero();
        for m in 0..n {
            acc += g.jac.get(k, m) * f.hess.get(m, i, j);
        }
        for p in 0..n {
            let fpi = f.jac.get(p, i);
            if fpi.is_zero() {
                continue;
            }
            for q in 0..n {
                acc += g.hess.get(k, p, q) * fpi * f.jac.get(q, j);
            }
        }
        acc
    });
    Ok(Map2Jet {
        base: f.base.clone(),
        value: g.value.clone(),
        jac: mat_mul(&g.jac, &f.jac),
        hess,
    })
}

fn encode_g2(p: &G2) -> Map2Jet {
    let n = p.a().n();
    Map2Jet {
        base: vec![Rational::zero(); n],
        value: vec![Rational::zero(); n],
        jac: p.a().matrix().clone(),
        hess: p.f().clone(),
    }
}

/// The `G²(n)` product computed as composition of 2-jets at the origin.
pub fn g2_law_via_jets(p: &G2, q: &G2) -> G2 {
    let c = compose_2jets(&encode_g2(p), &encode_g2(q)).expect("jets at the origin compose");
    let a = GlMatrix::new(c.jac).expect("product of invertible Jacobians");
    G2::new(a, c.hess).expect("composite Hessian is symmetric")
}

/// First-order data at the origin of a frame-field map `φ̃ = (φ^i, φ^i_j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FMJetData {
    /// `φ(0)`
    pub phi0: Point,
    /// `φ^i_j(0)`
    pub phi_lin: SquareMatrix,
    /// `∂φ^i/∂r^j(0)`
    pub dphi: SquareMatrix,
    /// `∂φ^k_l/∂r^j(0)` at `(k, l, j)`
    pub dphi_lin: Bilinear,
}

/// `(φ(0), φ^i_j(0), ∂φ^i/∂r^j(0), ∂φ^k_l/∂r^j(0))`.
pub fn frame_from_fm_map(d: &FMJetData) -> Result<NonHolFrame> {
    let a = GlMatrix::new(d.phi_lin.clone())
        .map_err(|_| Error::NotAFrame("frame value φ^i_j(0) is singular".into()))?;
    let b = GlMatrix::new(d.dphi.clone())
        .map_err(|_| Error::NotAFrame("∂φ/∂r(0) is singular".into()))?;
    NonHolFrame::new(d.phi0.clone(), a, b, d.dphi_lin.clone())
}

/// Pushes a non-holonomic frame forward by the prolongation of a local
/// diffeomorphism with 2-jet `jet` at `q.x`:
/// `f′[k][l][j] = Σ_m J[k][m] f[m][l][j] + Σ_{m,p} H[k][m][p] a[m][l] b[p][j]`.
pub fn left_act_diffeo(jet: &Map2Jet, q: &NonHolFrame) -> Result<NonHolFrame> {
    if jet.n() != q.n() {
        return Err(Error::DimensionMismatch { expected: jet.n(), got: q.n() });
    }
    if jet.base != q.x {
        return Err(Error::CompositionDomain);
    }
    let n = q.n();
    let (a, b) = (q.a.matrix(), q.b.matrix());
    let f = Bilinear::from_fn(n, |k, l, j| {
        let mut acc = Rational::zero();
        for m in 0..n {
            acc += jet.jac.get(k, m) * q.f.get(m, l, j);
        }
        for m in 0..n {
            let aml = a.get(m, l);
            if aml.is_zero() {
                continue;
            }
            for p in 0..n {
                acc += jet.hess.get(k, m, p) * aml * b.get(p, j);
            }
        }
        acc
    });
    let a2 = GlMatrix::new(mat_mul(&jet.jac, a))
        .map_err(|_| Error::NotAFrame("Jacobian is singular".into()))?;
    let b2 = GlMatrix::new(mat_mul(&jet.jac, b))
        .map_err(|_| Error::NotAFrame("Jacobian is singular".into()))?;
    NonHolFrame::new(jet.value.clone(), a2, b2, f)
}

#[derive(Serialize, Deserialize)]
struct RawJet {
    base: Vec<Rational>,
    value: Vec<Rational>,
    jac: SquareMatrix,
    hess: Vec<Vec<Vec<Rational>>>,
}

impl Serialize for Map2Jet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawJet {
            base: self.base.clone(),
            value: self.value.clone(),
            jac: self.jac.clone(),
            hess: self.hess.to_nested(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Map2Jet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawJet::deserialize(deserializer)?;
        let hess = Bilinear::from_nested(raw.hess).map_err(serde::de::Error::custom)?;
        Map2Jet::new(raw.base, raw.value, raw.jac, hess).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RawFmJet {
    phi0: Vec<Rational>,
    phi_lin: SquareMatrix,
    dphi: SquareMatrix,
    dphi_lin: Vec<Vec<Vec<Rational>>>,
}

impl Serialize for FMJetData {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawFmJet {
            phi0: self.phi0.clone(),
            phi_lin: self.phi_lin.clone(),
            dphi: self.dphi.clone(),
            dphi_lin: self.dphi_lin.to_nested(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FMJetData {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFmJet::deserialize(deserializer)?;
        let dphi_lin = Bilinear::from_nested(raw.dphi_lin).map_err(serde::de::Error::custom)?;
        let n = raw.phi0.len();
        for m in [raw.phi_lin.n(), raw.dphi.n(), dphi_lin.n()] {
            if m != n {
                return Err(serde::de::Error::custom(Error::DimensionMismatch { expected: n, got: m }));
            }
        }
        Ok(FMJetData {
            phi0: raw.phi0,
            phi_lin: raw.phi_lin,
            dphi: raw.dphi,
            dphi_lin,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::FrameClass;
    use crate::groups::{GHat2, JetGroup};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(71)
    }

    #[test]
    fn identity_jet_is_neutral() {
        let mut r = rng();
        let f = Map2Jet::random(random::point(3, &mut r), &mut r);
        let left = Map2Jet::identity(f.value().clone());
        let right = Map2Jet::identity(f.base().clone());
        assert_eq!(compose_2jets(&left, &f).unwrap(), f);
        assert_eq!(compose_2jets(&f, &right).unwrap(), f);
    }

    #[test]
    fn pure_quadratic_hessians_add() {
        let mut r = rng();
        let zero = vec![Rational::zero(); 2];
        let h1 = random::symmetric(2, &mut r);
        let h2 = random::symmetric(2, &mut r);
        let g = Map2Jet::new(zero.clone(), zero.clone(), SquareMatrix::identity(2), h1.clone()).unwrap();
        let f = Map2Jet::new(zero.clone(), zero, SquareMatrix::identity(2), h2.clone()).unwrap();
        assert_eq!(compose_2jets(&g, &f).unwrap().hess(), &h1.add(&h2));
    }

    #[test]
    fn domain_mismatch() {
        let mut r = rng();
        let f = Map2Jet::random(random::point(2, &mut r), &mut r);
        let mut other = random::point(2, &mut r);
        while &other == f.value() {
            other = random::point(2, &mut r);
        }
        let g = Map2Jet::identity(other);
        assert_eq!(compose_2jets(&g, &f).unwrap_err(), Error::CompositionDomain);
    }

    #[test]
    fn g2_law_small_cases() {
        let mut r = rng();
        assert!(g2_law_via_jets(&G2::identity(2), &G2::identity(2)).is_identity());
        let a = random::gl(2, &mut r);
        let b = random::gl(2, &mut r);
        let p = G2::new(a.clone(), Bilinear::zero(2)).unwrap();
        let q = G2::new(b.clone(), Bilinear::zero(2)).unwrap();
        assert_eq!(g2_law_via_jets(&p, &q), G2::new(a.mul(&b), Bilinear::zero(2)).unwrap());
        for _ in 0..10 {
            let p = G2::random(3, &mut r);
            let q = G2::random(3, &mut r);
            assert_eq!(g2_law_via_jets(&p, &q).to_hat(), p.to_hat().mul(&q.to_hat()));
        }
    }

    #[test]
    fn frame_from_identity_section() {
        // η₁ = id × I: φ(r) = r, φ_lin(r) = I, so all first derivatives of φ_lin vanish.
        let d = FMJetData {
            phi0: vec![Rational::zero(); 2],
            phi_lin: SquareMatrix::identity(2),
            dphi: SquareMatrix::identity(2),
            dphi_lin: Bilinear::zero(2),
        };
        assert_eq!(frame_from_fm_map(&d).unwrap().classify(), FrameClass::Holonomic);
        let d2 = FMJetData {
            dphi: SquareMatrix::from_ints(&[&[1, 1], &[0, 1]]),
            ..d.clone()
        };
        assert_eq!(frame_from_fm_map(&d2).unwrap().classify(), FrameClass::Nonholonomic);
        let d3 = FMJetData {
            dphi: SquareMatrix::zeros(2),
            ..d
        };
        assert!(matches!(frame_from_fm_map(&d3), Err(Error::NotAFrame(_))));
    }

    #[test]
    fn diffeo_action_cases() {
        let mut r = rng();
        let q = NonHolFrame::at(random::point(2, &mut r), crate::groups::GTilde2::random(2, &mut r)).unwrap();
        assert_eq!(left_act_diffeo(&Map2Jet::identity(q.x.clone()), &q).unwrap(), q);
        let jac = random::gl(2, &mut r).matrix().clone();
        let lin = Map2Jet::new(q.x.clone(), random::point(2, &mut r), jac.clone(), Bilinear::zero(2)).unwrap();
        let moved = left_act_diffeo(&lin, &q).unwrap();
        assert_eq!(moved.a.matrix(), &jac.mul(q.a.matrix()));
        assert_eq!(moved.b.matrix(), &jac.mul(q.b.matrix()));
        assert_eq!(moved.f, Bilinear::post_compose(&jac, &q.f));
    }

    #[test]
    fn diffeo_action_preserves_semiholonomic_frames() {
        let mut r = rng();
        for _ in 0..10 {
            let q = crate::frames::SemiHolFrame::at(random::point(2, &mut r), GHat2::random(2, &mut r))
                .unwrap()
                .to_nonhol();
            let jet = Map2Jet::random(q.x.clone(), &mut r);
            assert_eq!(left_act_diffeo(&jet, &q).unwrap().classify(), q.classify());
        }
    }

    #[test]
    fn json_round_trip() {
        let mut r = rng();
        let f = Map2Jet::random(random::point(2, &mut r), &mut r);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<Map2Jet>(&s).unwrap(), f);
        let bad = r#"{"base":["0"],"value":["0"],"jac":[["1"]],"hess":[[["1","2"]]]}"#;
        assert!(serde_json::from_str::<Map2Jet>(bad).is_err());
    }
}
