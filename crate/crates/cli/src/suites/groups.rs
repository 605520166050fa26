use jetframe::groups::{
    coset_equal, in_g1xa2, in_g2, mu, mu_inv, mul_t1n_coordinates, tau, tau_inv, DeLeon1, DeLeon2,
    Element, GHat2, GTilde2, GTilde21, GTilde22, JetGroup, QuotClassHat, T1nL1n, G2,
};
use jetframe::{random, Bilinear};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{bil, el, ensure, Ctx, Outcome, Property, Suite};

macro_rules! axioms {
    ($($ty:ty => $tag:literal),* $(,)?) => {
        &[$(
            Property { name: concat!($tag, ".associative"), check: associative::<$ty> },
            Property { name: concat!($tag, ".identity"), check: identity::<$ty> },
            Property { name: concat!($tag, ".inverse"), check: inverse::<$ty> },
            Property { name: concat!($tag, ".closed"), check: closed::<$ty> },
        )*]
    };
}

pub const AXIOMS: Suite = Suite {
    name: "axioms",
    about: "group axioms for every law, including closure of the carrier",
    properties: axioms! {
        GTilde2 => "tilde2",
        GHat2 => "hat2",
        G2 => "g2",
        GTilde21 => "tilde21",
        GTilde22 => "tilde22",
        T1nL1n => "t1n",
        DeLeon1 => "deleon1",
        DeLeon2 => "deleon2",
    },
};

fn associative<G: JetGroup + Into<Element>>(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y, z) = (G::random(cx.n, r), G::random(cx.n, r), G::random(cx.n, r));
    ensure(x.mul(&y).mul(&z) == x.mul(&y.mul(&z)), || {
        json!({"x": el(&x), "y": el(&y), "z": el(&z)})
    })
}

fn identity<G: JetGroup + Into<Element>>(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = G::random(cx.n, r);
    let e = G::identity(cx.n);
    ensure(e.mul(&x) == x && x.mul(&e) == x && e.in_carrier() && e.inv() == e, || {
        json!({"x": el(&x)})
    })
}

fn inverse<G: JetGroup + Into<Element>>(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = G::random(cx.n, r);
    let xi = x.inv();
    ensure(x.mul(&xi).is_identity() && xi.mul(&x).is_identity() && xi.inv() == x, || {
        json!({"x": el(&x)})
    })
}

/// Products and inverses of carrier elements stay in the carrier.
fn closed<G: JetGroup + Into<Element>>(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (G::random(cx.n, r), G::random(cx.n, r));
    let xy = x.mul(&y);
    let xi = x.inv();
    ensure(xy.in_carrier() && xi.in_carrier(), || {
        json!({"x": el(&x), "y": el(&y), "xy": el(&xy), "x_inv": el(&xi)})
    })
}

fn hat(cx: &Ctx, r: &mut ChaCha8Rng) -> GHat2 {
    GHat2::random(cx.n, r)
}

fn translation(h: &Bilinear) -> GHat2 {
    GHat2::translation(h.clone())
}

pub const GROL1: Suite = Suite {
    name: "grol1",
    about: "conjugation of translations and the G² × A₂ decomposition of Ĝ²",
    properties: &[
        Property { name: "conj_symmetric_stays_symmetric", check: conj_symmetric_stays_symmetric },
        Property { name: "conj_skew_stays_skew", check: conj_skew_stays_skew },
        Property { name: "conj_closed_form", check: conj_closed_form },
        Property { name: "decompose_recomposes", check: decompose_recomposes },
        Property { name: "decompose_unique", check: decompose_unique },
        Property { name: "subgroup_predicates", check: subgroup_predicates },
    ],
};

fn conj_symmetric_stays_symmetric(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let h = random::symmetric(cx.n, r);
    let c = x.conj(&translation(&h));
    ensure(c.a.is_identity() && c.f.is_symmetric(), || json!({"x": el(&x), "h": bil(&h)}))
}

fn conj_skew_stays_skew(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let h = random::skew(cx.n, r);
    let c = x.conj(&translation(&h));
    ensure(c.a.is_identity() && c.f.is_skew(), || json!({"x": el(&x), "h": bil(&h)}))
}

fn conj_closed_form(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (hat(cx, r), hat(cx, r));
    ensure(x.conj(&y) == x.mul(&y).mul(&x.inv()), || json!({"outer": el(&x), "inner": el(&y)}))
}

fn decompose_recomposes(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let (g, h) = x.decompose();
    ensure(
        h.is_skew() && g.f().is_symmetric() && g.to_hat().mul(&translation(&h)) == x,
        || json!({"x": el(&x)}),
    )
}

/// Perturbs the decomposition by a symmetric `s` and a skew `k` (each zero
/// half of the time); the perturbed pair may recompose only if unchanged.
fn decompose_unique(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let (g, h) = x.decompose();
    let s = if r.gen_bool(0.5) { random::symmetric(cx.n, r) } else { Bilinear::zero(cx.n) };
    let k = if r.gen_bool(0.5) { random::skew(cx.n, r) } else { Bilinear::zero(cx.n) };
    let g2 = G2::new(g.a().clone(), g.f().add(&s)).expect("symmetric");
    let h2 = h.add(&k);
    let recomposes = g2.to_hat().mul(&translation(&h2)) == x;
    ensure(!recomposes || (g2 == g && h2 == h), || {
        json!({"x": el(&x), "s": bil(&s), "k": bil(&k)})
    })
}

fn subgroup_predicates(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let a = random::gl(cx.n, r);
    let s = random::symmetric(cx.n, r);
    let k = random::skew(cx.n, r);
    let mk = |f: Bilinear| GHat2::new(a.clone(), f).expect("dimensions match");
    let zero = mk(Bilinear::zero(cx.n));
    let mixed = mk(s.add(&k));
    ensure(
        in_g2(&zero)
            && in_g1xa2(&zero)
            && in_g2(&mk(s.clone()))
            && in_g1xa2(&mk(k.clone()))
            && in_g2(&mixed) == k.is_zero()
            && in_g1xa2(&mixed) == s.is_zero(),
        || json!({"a": super::to_value(&a), "s": bil(&s), "k": bil(&k)}),
    )
}

pub const GROL3: Suite = Suite {
    name: "grol3",
    about: "normality of {I}×S₂ and {I}×A₂ in Ĝ² and f-independence of conjugation",
    properties: &[
        Property { name: "s2_normal", check: s2_normal },
        Property { name: "a2_normal", check: a2_normal },
        Property { name: "conj_independent_of_f", check: conj_independent_of_f },
        Property { name: "conj_closed_form", check: conj_closed_form },
    ],
};

fn s2_normal(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let s = random::symmetric(cx.n, r);
    let y = x.mul(&translation(&s)).mul(&x.inv());
    ensure(y.a.is_identity() && y.f.is_symmetric(), || json!({"x": el(&x), "s": bil(&s)}))
}

fn a2_normal(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let h = random::skew(cx.n, r);
    let y = x.mul(&translation(&h)).mul(&x.inv());
    ensure(y.a.is_identity() && y.f.is_skew(), || json!({"x": el(&x), "h": bil(&h)}))
}

fn conj_independent_of_f(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let g = random::bilinear(cx.n, r);
    let inner = translation(&g);
    let stripped = GHat2::new(x.a.clone(), Bilinear::zero(cx.n)).expect("dimensions match");
    let ai = x.a.inverse_matrix();
    let expected = translation(&Bilinear::post_compose(x.a.matrix(), &Bilinear::pre_compose(&g, ai, ai)));
    let c = x.conj(&inner);
    ensure(c == stripped.conj(&inner) && c == expected, || json!({"x": el(&x), "g": bil(&g)}))
}

pub const GROP1: Suite = Suite {
    name: "grop1",
    about: "μ: Ĝ²/A₂ → G² is a group isomorphism",
    properties: &[
        Property { name: "mu_homomorphism", check: mu_homomorphism },
        Property { name: "mu_injective", check: mu_injective },
        Property { name: "mu_surjective", check: mu_surjective },
        Property { name: "mu_inv_mu_identity", check: mu_inv_mu_identity },
        Property { name: "canonical_representative", check: canonical_representative },
    ],
};

fn mu_homomorphism(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (hat(cx, r), hat(cx, r));
    let (c, d) = (QuotClassHat::of(&x), QuotClassHat::of(&y));
    let of_product = mu(&QuotClassHat::of(&x.mul(&y)));
    let product_of = mu(&c).mul(&mu(&d));
    ensure(of_product == product_of && mu(&c.mul(&d)) == product_of, || {
        json!({"x": el(&x), "y": el(&y)})
    })
}

/// Pairs are either in one coset (`y = x·(I,h)`), share `a` only, or are
/// unrelated; `μ` separates exactly the distinct cosets.
fn mu_injective(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let y = match r.gen_range(0..3) {
        0 => x.mul(&translation(&random::skew(cx.n, r))),
        1 => GHat2::new(x.a.clone(), random::bilinear(cx.n, r)).expect("dimensions match"),
        _ => hat(cx, r),
    };
    let same_coset = coset_equal(&x, &y);
    let q = x.inv().mul(&y);
    let by_definition = q.a.is_identity() && q.f.is_skew();
    let same_image = mu(&QuotClassHat::of(&x)) == mu(&QuotClassHat::of(&y));
    ensure(same_coset == by_definition && same_image == same_coset, || {
        json!({"x": el(&x), "y": el(&y)})
    })
}

fn mu_surjective(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let g = G2::random(cx.n, r);
    let h = random::skew(cx.n, r);
    let preimage = QuotClassHat::of(&g.to_hat().mul(&translation(&h)));
    ensure(mu(&preimage) == g && mu(&mu_inv(&g)) == g, || json!({"g": el(&g), "h": bil(&h)}))
}

fn mu_inv_mu_identity(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let c = QuotClassHat::of(&x);
    ensure(mu_inv(&mu(&c)) == c, || json!({"x": el(&x)}))
}

fn canonical_representative(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = hat(cx, r);
    let h = random::skew(cx.n, r);
    let c = QuotClassHat::of(&x);
    ensure(
        c.representative().f().is_symmetric()
            && c.contains(&x)
            && QuotClassHat::of(&x.mul(&translation(&h))) == c,
        || json!({"x": el(&x), "h": bil(&h)}),
    )
}

pub const GROL4: Suite = Suite {
    name: "grol4",
    about: "T¹ₙL¹ₙ law in structural and coordinate form, and τ: T¹ₙL¹ₙ ≅ Ĝ²",
    properties: &[
        Property { name: "structural_equals_coordinates", check: structural_equals_coordinates },
        Property { name: "tau_homomorphism", check: tau_homomorphism },
        Property { name: "tau_round_trip", check: tau_round_trip },
        Property { name: "law_recovered_through_tau", check: law_recovered_through_tau },
    ],
};

fn structural_equals_coordinates(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (T1nL1n::random(cx.n, r), T1nL1n::random(cx.n, r));
    ensure(x.mul(&y) == mul_t1n_coordinates(&x, &y), || json!({"x": el(&x), "y": el(&y)}))
}

fn tau_homomorphism(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (T1nL1n::random(cx.n, r), T1nL1n::random(cx.n, r));
    ensure(tau(&x.mul(&y)) == tau(&x).mul(&tau(&y)), || json!({"x": el(&x), "y": el(&y)}))
}

fn tau_round_trip(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = T1nL1n::random(cx.n, r);
    let z = hat(cx, r);
    ensure(tau_inv(&tau(&x)) == x && tau(&tau_inv(&z)) == z, || json!({"x": el(&x), "z": el(&z)}))
}

fn law_recovered_through_tau(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (T1nL1n::random(cx.n, r), T1nL1n::random(cx.n, r));
    ensure(tau_inv(&tau(&x).mul(&tau(&y))) == mul_t1n_coordinates(&x, &y), || {
        json!({"x": el(&x), "y": el(&y)})
    })
}

pub const DELEON: Suite = Suite {
    name: "deleon",
    about: "the two alternative laws on G¹ × L₂ are groups isomorphic to Ĝ²",
    properties: &[
        Property { name: "deleon1.associative", check: associative::<DeLeon1> },
        Property { name: "deleon1.identity", check: identity::<DeLeon1> },
        Property { name: "deleon1.inverse", check: inverse::<DeLeon1> },
        Property { name: "deleon1.iso_homomorphism", check: deleon1_homomorphism },
        Property { name: "deleon1.iso_bijective", check: deleon1_bijective },
        Property { name: "deleon2.associative", check: associative::<DeLeon2> },
        Property { name: "deleon2.identity", check: identity::<DeLeon2> },
        Property { name: "deleon2.inverse", check: inverse::<DeLeon2> },
        Property { name: "deleon2.iso_homomorphism", check: deleon2_homomorphism },
        Property { name: "deleon2.iso_bijective", check: deleon2_bijective },
    ],
};

fn deleon1_homomorphism(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (DeLeon1::random(cx.n, r), DeLeon1::random(cx.n, r));
    ensure(x.mul(&y).to_hat2() == x.to_hat2().mul(&y.to_hat2()), || {
        json!({"x": el(&x), "y": el(&y)})
    })
}

fn deleon1_bijective(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = DeLeon1::random(cx.n, r);
    let z = hat(cx, r);
    ensure(DeLeon1::from_hat2(&x.to_hat2()) == x && DeLeon1::from_hat2(&z).to_hat2() == z, || {
        json!({"x": el(&x), "z": el(&z)})
    })
}

fn deleon2_homomorphism(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (DeLeon2::random(cx.n, r), DeLeon2::random(cx.n, r));
    ensure(x.mul(&y).to_hat2() == x.to_hat2().mul(&y.to_hat2()), || {
        json!({"x": el(&x), "y": el(&y)})
    })
}

fn deleon2_bijective(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let x = DeLeon2::random(cx.n, r);
    let z = hat(cx, r);
    ensure(DeLeon2::from_hat2(&x.to_hat2()) == x && DeLeon2::from_hat2(&z).to_hat2() == z, || {
        json!({"x": el(&x), "z": el(&z)})
    })
}
