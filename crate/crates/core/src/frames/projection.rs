use super::{HolFrame, NonHolFrame, SemiHolFrame};
use crate::bilinear::Bilinear;
use crate::matrix::SquareMatrix;

/// `π(x, a, b, f) = (x, a, f(I, a))`, i.e. `x^{kl}_r x^r_j`.
///
/// The contraction uses the `a` block, not `b`, so this map is not invariant
/// under `(x,a,b,f)(I,l,0) = (x,a,bl,f(I,l))` unless `l = I`, and it does not
/// fix embedded semi-holonomic frames unless `a = I`.
pub fn proj_pi(q: &NonHolFrame) -> SemiHolFrame {
    let id = SquareMatrix::identity(q.n());
    SemiHolFrame {
        x: q.x.clone(),
        a: q.a.clone(),
        f: Bilinear::pre_compose(&q.f, &id, q.a.matrix()),
    }
}

/// `π̂²₂(x, A, F) = (x, A, F_s)`.
///
/// Writing `q = (x, A, F_s)·(I, A⁻¹∘F_a)` as a holonomic frame times an
/// element of `Ĝ²`, this is `p·(a, f_s)` for the factorization `q = p·(a, f)`.
pub fn proj_hat22(q: &SemiHolFrame) -> HolFrame {
    HolFrame {
        x: q.x.clone(),
        a: q.a.clone(),
        f: q.f.sym_part(),
    }
}

/// `π̃²₂ = π̂²₂ ∘ π`.
pub fn proj_tilde22(q: &NonHolFrame) -> HolFrame {
    proj_hat22(&proj_pi(q))
}

/// A point of `(π̃²₂)⁻¹(q)`: `(x, a, a, F(I, a⁻¹))`.
pub fn tilde22_preimage(q: &HolFrame) -> NonHolFrame {
    let id = SquareMatrix::identity(q.n());
    NonHolFrame {
        x: q.x.clone(),
        a: q.a.clone(),
        b: q.a.clone(),
        f: Bilinear::pre_compose(&q.f, &id, q.a.inverse_matrix()),
    }
}

/// Whether `p ∈ q·A₂(n)`: same base point and linear part, and
/// `p.f = q.f + a∘h` with `h` skew.
pub fn fiber_hat22_contains(q: &HolFrame, p: &SemiHolFrame) -> bool {
    if p.x != q.x || p.a != q.a {
        return false;
    }
    let h = Bilinear::post_compose(q.a.inverse_matrix(), &p.f.sub(&q.f));
    h.is_skew()
}

/// An orbit `p·A₂(n)` in the semi-holonomic frame bundle, held by any member.
#[derive(Clone, Debug)]
pub struct A2Orbit {
    rep: SemiHolFrame,
}

impl A2Orbit {
    pub fn of(p: SemiHolFrame) -> Self {
        A2Orbit { rep: p }
    }

    pub fn representative(&self) -> &SemiHolFrame {
        &self.rep
    }

    pub fn contains(&self, p: &SemiHolFrame) -> bool {
        p.x == self.rep.x
            && p.a == self.rep.a
            && Bilinear::post_compose(p.a.inverse_matrix(), &p.f.sub(&self.rep.f)).is_skew()
    }
}

impl PartialEq for A2Orbit {
    fn eq(&self, other: &Self) -> bool {
        self.contains(&other.rep)
    }
}

/// `Ω(p·A₂) = π̂²₂(p)`.
pub fn omega(orbit: &A2Orbit) -> HolFrame {
    proj_hat22(&orbit.rep)
}
