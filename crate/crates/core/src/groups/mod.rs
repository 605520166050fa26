//! The jet groups acting on second-order frames.
//!
//! Each group law is its own type; nothing converts between them implicitly.
//! Embeddings such as `h ↦ (I, h)` are explicit constructors.
//!
//! | type | set | law |
//! |------|-----|-----|
//! | [`GTilde2`] | `G¹ × G¹ × L₂` | `(aa′, bb′, a∘f′ + f(a′,b′))` |
//! | [`GHat2`] | `G¹ × L₂` | `(aa′, a∘f′ + f(a′,a′))` |
//! | [`G2`] | `G¹ × S₂` | as `GHat2` |
//! | [`GTilde21`] | `G¹ × L₂` | `(aa′, f′ + f(I,a′))` |
//! | [`GTilde22`] | `(I, l, h)`, `h ∈ A₂` | `(ll′, h′ + h(I,l′))` |
//! | [`T1nL1n`] | `G¹ × L₂` | `(aa′, f(a′,I) + a∘f′(I,a⁻¹))` |
//! | [`DeLeon1`] | `G¹ × L₂` | `(aa′, a′⁻¹∘f(a′,a′) + f′)` |
//! | [`DeLeon2`] | `G¹ × L₂` | `(aa′, f + a∘f′(a⁻¹,a⁻¹))` |

mod deleon;
mod element;
mod hat;
mod laws;
mod t1n;

use std::fmt;

use rand::Rng;

pub use deleon::{DeLeon1, DeLeon2};
pub use element::Element;
pub use hat::{coset_equal, in_g1xa2, in_g2, mu, mu_inv, QuotClassHat};
pub use laws::{GHat2, GTilde2, GTilde21, GTilde22, G2};
pub use t1n::{mul_t1n_coordinates, tau, tau_inv, T1nL1n};

pub trait JetGroup: Clone + PartialEq + fmt::Debug + Sized {
    /// Tag used in JSON element documents.
    const TAG: &'static str;

    fn n(&self) -> usize;

    fn identity(n: usize) -> Self;

    fn mul(&self, rhs: &Self) -> Self;

    fn inv(&self) -> Self;

    /// Whether the value lies in the group's underlying set (e.g. the
    /// bilinear part of a [`G2`] element is symmetric).
    fn in_carrier(&self) -> bool {
        true
    }

    fn is_identity(&self) -> bool {
        *self == Self::identity(self.n())
    }

    fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self;
}
