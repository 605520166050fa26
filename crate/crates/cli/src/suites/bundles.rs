use jetframe::frames::{
    fiber_hat22_contains, omega, proj_hat22, proj_pi, proj_tilde22, sigma, theta, theta_inv,
    tilde22_preimage, xi, xi_hat, A2Orbit, ExtClass, FrameClass, HolFrame, NonHolFrame,
    SecondOrderFrame, SemiHolFrame,
};
use jetframe::groups::{GHat2, GTilde2, GTilde22, JetGroup, G2};
use jetframe::{random, Bilinear, GlMatrix, SquareMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{bil, el, ensure, fr, Ctx, Mutant, Outcome, Property, Suite};

fn nonhol(cx: &Ctx, r: &mut ChaCha8Rng) -> NonHolFrame {
    NonHolFrame::at(random::point(cx.n, r), GTilde2::random(cx.n, r)).expect("dimensions match")
}

fn semihol(cx: &Ctx, r: &mut ChaCha8Rng) -> SemiHolFrame {
    SemiHolFrame::at(random::point(cx.n, r), GHat2::random(cx.n, r)).expect("dimensions match")
}

fn hol(cx: &Ctx, r: &mut ChaCha8Rng) -> HolFrame {
    HolFrame::at(random::point(cx.n, r), G2::random(cx.n, r)).expect("dimensions match")
}

/// `(k.a, sym_part(k.f))`.
fn sym_factor(k: &GHat2) -> G2 {
    G2::new(k.a.clone(), k.f.sym_part()).expect("symmetric part")
}

pub const RBSP1: Suite = Suite {
    name: "rbsp1",
    about: "symmetrizing the right factor commutes with Ĝ² products by G², at group and frame level",
    properties: &[
        Property { name: "group_level", check: rbsp1_group_level },
        Property { name: "frame_level", check: rbsp1_frame_level },
        Property { name: "hat22_well_defined", check: hat22_well_defined },
        Property { name: "g2_closed_in_hat2", check: g2_closed_in_hat2 },
    ],
};

fn rbsp1_group_level(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let bg = G2::random(cx.n, r).to_hat();
    let af = GHat2::random(cx.n, r);
    let ch = bg.mul(&af);
    let expected = GHat2::new(ch.a.clone(), ch.f.sym_part()).expect("dimensions match");
    ensure(bg.mul(&sym_factor(&af).to_hat()) == expected, || json!({"bg": el(&bg), "af": el(&af)}))
}

fn rbsp1_frame_level(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = hol(cx, r);
    let k = GHat2::random(cx.n, r);
    ensure(proj_hat22(&p.to_semihol().act(&k)) == p.act(&sym_factor(&k)), || {
        json!({"p": fr(&p), "k": el(&k)})
    })
}

/// `q = p·k = (pα)·(α⁻¹k)`; projecting through either factorization as
/// `p·(k.a, k.f_s)` gives the same holonomic frame, which is `π̂²₂(q)`.
fn hat22_well_defined(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = hol(cx, r);
    let k = GHat2::random(cx.n, r);
    let alpha = G2::random(cx.n, r);
    let q = p.to_semihol().act(&k);
    let via_pk = p.act(&sym_factor(&k));
    let p2 = p.act(&alpha);
    let k2 = alpha.inv().to_hat().mul(&k);
    let via_p2k2 = p2.act(&sym_factor(&k2));
    ensure(
        p2.to_semihol().act(&k2) == q && via_pk == via_p2k2 && proj_hat22(&q) == via_pk,
        || json!({"p": fr(&p), "k": el(&k), "alpha": el(&alpha)}),
    )
}

fn g2_closed_in_hat2(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (G2::random(cx.n, r), G2::random(cx.n, r));
    let z = x.to_hat().mul(&y.to_hat());
    ensure(z.f.is_symmetric() && z == x.mul(&y).to_hat(), || json!({"x": el(&x), "y": el(&y)}))
}

pub const RBSL1: Suite = Suite {
    name: "rbsl1",
    about: "π̂²₀ = π²₀ ∘ π̂²₂",
    properties: &[Property { name: "base_point_preserved", check: rbsl1_base_point }],
};

fn rbsl1_base_point(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = semihol(cx, r);
    ensure(q.proj_20() == proj_hat22(&q).proj_20(), || json!({"q": fr(&q)}))
}

pub const RBSL3: Suite = Suite {
    name: "rbsl3",
    about: "π̂²₁ = π²₁ ∘ π̂²₂",
    properties: &[Property { name: "linear_frame_preserved", check: rbsl3_linear_frame }],
};

fn rbsl3_linear_frame(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = semihol(cx, r);
    ensure(q.proj_21() == proj_hat22(&q).proj_21(), || json!({"q": fr(&q)}))
}

pub const RBSL2: Suite = Suite {
    name: "rbsl2",
    about: "the fiber of π̂²₂ over q is q·A₂",
    properties: &[
        Property { name: "fiber_is_preimage", check: fiber_is_preimage },
        Property { name: "translates_are_members", check: translates_are_members },
    ],
};

fn fiber_contains(cx: &Ctx, q: &HolFrame, p: &SemiHolFrame) -> bool {
    match cx.mutant {
        Some(Mutant::SkewCheckOff) => p.x == *q.x() && p.a == *q.a(),
        None => fiber_hat22_contains(q, p),
    }
}

/// Candidates are `q·(I,h)` with `h` skew, `q·(I,h)` with `h` arbitrary, a
/// frame sharing only `(x, a)` with `q`, or an unrelated frame.
fn fiber_is_preimage(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = hol(cx, r);
    let p = match r.gen_range(0..4) {
        0 => q.to_semihol().act_a2(&random::skew(cx.n, r)),
        1 => q.to_semihol().act_a2(&random::bilinear(cx.n, r)),
        2 => SemiHolFrame::new(q.x().clone(), q.a().clone(), random::bilinear(cx.n, r))
            .expect("dimensions match"),
        _ => semihol(cx, r),
    };
    ensure(fiber_contains(cx, &q, &p) == (proj_hat22(&p) == q), || {
        json!({"q": fr(&q), "p": fr(&p)})
    })
}

fn translates_are_members(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = hol(cx, r);
    let h = random::skew(cx.n, r);
    let p = q.to_semihol().act_a2(&h);
    ensure(fiber_contains(cx, &q, &p) && proj_hat22(&p) == q, || {
        json!({"q": fr(&q), "h": bil(&h)})
    })
}

pub const RBST1: Suite = Suite {
    name: "rbst1",
    about: "π̂²₂ is a principal A₂ bundle: free action, Ω, σ and the extension isomorphism ϑ",
    properties: &[
        Property { name: "a2_action_free", check: a2_action_free },
        Property { name: "orbits_are_fibers", check: orbits_are_fibers },
        Property { name: "omega_representative_independent", check: omega_representative_independent },
        Property { name: "omega_injective", check: omega_injective },
        Property { name: "omega_surjective", check: omega_surjective },
        Property { name: "sigma_defining_equation", check: sigma_defining_equation },
        Property { name: "sigma_equivariant", check: sigma_equivariant },
        Property { name: "theta_round_trip", check: theta_round_trip },
        Property { name: "theta_equivariant", check: theta_equivariant },
        Property { name: "ext_class_well_defined", check: ext_class_well_defined },
        Property { name: "hat22_idempotent", check: hat22_idempotent },
    ],
};

fn a2_action_free(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = semihol(cx, r);
    let h = if r.gen_bool(0.25) { Bilinear::zero(cx.n) } else { random::skew(cx.n, r) };
    ensure((q.act_a2(&h) == q) == h.is_zero(), || json!({"q": fr(&q), "h": bil(&h)}))
}

/// A second frame in the same orbit, in the same `(x, a)` fiber of `FM`, or
/// arbitrary.
fn companion(cx: &Ctx, p: &SemiHolFrame, r: &mut ChaCha8Rng) -> SemiHolFrame {
    match r.gen_range(0..3) {
        0 => p.act_a2(&random::skew(cx.n, r)),
        1 => p.act_a2(&random::bilinear(cx.n, r)),
        _ => semihol(cx, r),
    }
}

fn orbits_are_fibers(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = semihol(cx, r);
    let p2 = companion(cx, &p, r);
    let same_orbit = A2Orbit::of(p.clone()) == A2Orbit::of(p2.clone());
    ensure(same_orbit == (proj_hat22(&p) == proj_hat22(&p2)), || {
        json!({"p": fr(&p), "p2": fr(&p2)})
    })
}

fn omega_representative_independent(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = semihol(cx, r);
    let h = random::skew(cx.n, r);
    let w = omega(&A2Orbit::of(p.clone()));
    ensure(w == omega(&A2Orbit::of(p.act_a2(&h))) && w == proj_hat22(&p), || {
        json!({"p": fr(&p), "h": bil(&h)})
    })
}

fn omega_injective(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = semihol(cx, r);
    let p2 = companion(cx, &p, r);
    let (o1, o2) = (A2Orbit::of(p.clone()), A2Orbit::of(p2.clone()));
    ensure(omega(&o1) != omega(&o2) || o1 == o2, || json!({"p": fr(&p), "p2": fr(&p2)}))
}

fn omega_surjective(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = hol(cx, r);
    ensure(omega(&A2Orbit::of(q.to_semihol())) == q, || json!({"q": fr(&q)}))
}

fn sigma_defining_equation(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = semihol(cx, r);
    let s = sigma(&p);
    ensure(
        s.is_skew() && xi_hat(&p) == xi(&proj_hat22(&p)).to_hat().mul(&GHat2::translation(s.clone())),
        || json!({"p": fr(&p)}),
    )
}

fn sigma_equivariant(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = semihol(cx, r);
    let h = random::skew(cx.n, r);
    ensure(sigma(&p.act_a2(&h)) == sigma(&p).add(&h), || json!({"p": fr(&p), "h": bil(&h)}))
}

fn theta_round_trip(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = hol(cx, r);
    let k = GHat2::random(cx.n, r);
    let q = semihol(cx, r);
    let c = ExtClass::new(p.clone(), k.clone());
    ensure(theta_inv(&theta(&c)) == c && theta(&theta_inv(&q)) == q, || {
        json!({"p": fr(&p), "k": el(&k), "q": fr(&q)})
    })
}

fn theta_equivariant(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = hol(cx, r);
    let k = GHat2::random(cx.n, r);
    let k2 = GHat2::random(cx.n, r);
    let c = ExtClass::new(p.clone(), k.clone());
    ensure(theta(&c).act(&k2) == theta(&c.act(&k2)), || {
        json!({"p": fr(&p), "k": el(&k), "k2": el(&k2)})
    })
}

fn ext_class_well_defined(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let p = hol(cx, r);
    let k = GHat2::random(cx.n, r);
    let alpha = G2::random(cx.n, r);
    let c = ExtClass::new(p.clone(), k.clone());
    let c2 = ExtClass::new(p.act(&alpha), alpha.inv().to_hat().mul(&k));
    ensure(c == c2 && c.k().a.is_identity() && c.k().f.is_skew(), || {
        json!({"p": fr(&p), "k": el(&k), "alpha": el(&alpha)})
    })
}

fn hat22_idempotent(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = hol(cx, r);
    let p = semihol(cx, r);
    let once = proj_hat22(&p);
    ensure(proj_hat22(&q.to_semihol()) == q && proj_hat22(&once.to_semihol()) == once, || {
        json!({"q": fr(&q), "p": fr(&p)})
    })
}

pub const RBST2: Suite = Suite {
    name: "rbst2",
    about: "π̃²₂ = π̂²₂ ∘ π as a principal G̃²₂ bundle",
    properties: &[
        Property { name: "tilde22_action_free", check: tilde22_action_free },
        Property { name: "tilde22_is_composite", check: tilde22_is_composite },
        Property { name: "tilde22_invariant", check: tilde22_invariant },
        Property { name: "staged_action", check: staged_action },
        Property { name: "tilde22_surjective", check: tilde22_surjective },
        Property { name: "law_matches_tilde21", check: law_matches_tilde21 },
        Property { name: "law_embeds_in_tilde2", check: law_embeds_in_tilde2 },
    ],
};

fn tilde22_action_free(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = nonhol(cx, r);
    let g = if r.gen_bool(0.25) { GTilde22::identity(cx.n) } else { GTilde22::random(cx.n, r) };
    ensure((q.act_tilde22(&g) == q) == g.is_identity(), || json!({"q": fr(&q), "g": el(&g)}))
}

fn tilde22_is_composite(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = nonhol(cx, r);
    ensure(proj_tilde22(&q) == proj_hat22(&proj_pi(&q)), || json!({"q": fr(&q)}))
}

fn tilde22_invariant(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = nonhol(cx, r);
    let g = GTilde22::random(cx.n, r);
    let moved = q.act_tilde22(&g);
    ensure(proj_tilde22(&moved) == proj_tilde22(&q), || {
        json!({
            "q": fr(&q),
            "g": el(&g),
            "proj_q": fr(&proj_tilde22(&q)),
            "proj_qg": fr(&proj_tilde22(&moved)),
        })
    })
}

/// `q·(I, l, h) = ((q)(I, l, 0))(I, I, h)` with both stages taken in `G̃²`.
fn staged_action(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = nonhol(cx, r);
    let g = GTilde22::random(cx.n, r);
    let id = GlMatrix::identity(cx.n);
    let stage1 = GTilde2::new(id.clone(), g.l().clone(), Bilinear::zero(cx.n)).expect("dimensions match");
    let stage2 = GTilde2::new(id.clone(), id, g.h().clone()).expect("dimensions match");
    ensure(q.act_tilde22(&g) == q.act(&stage1).act(&stage2), || json!({"q": fr(&q), "g": el(&g)}))
}

fn tilde22_surjective(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = hol(cx, r);
    let pre = tilde22_preimage(&q);
    ensure(proj_tilde22(&pre) == q && pre.a == pre.b, || json!({"q": fr(&q)}))
}

fn law_matches_tilde21(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (GTilde22::random(cx.n, r), GTilde22::random(cx.n, r));
    ensure(x.mul(&y).to_tilde21() == x.to_tilde21().mul(&y.to_tilde21()), || {
        json!({"x": el(&x), "y": el(&y)})
    })
}

fn law_embeds_in_tilde2(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (GTilde22::random(cx.n, r), GTilde22::random(cx.n, r));
    ensure(x.mul(&y).to_tilde2() == x.to_tilde2().mul(&y.to_tilde2()), || {
        json!({"x": el(&x), "y": el(&y)})
    })
}

pub const DIAGRAM: Suite = Suite {
    name: "diagram",
    about: "every composable pair of projections between F̃²M, F̂²M, F²M, FM and M commutes",
    properties: &[
        Property { name: "nonhol.base_through_linear", check: nonhol_base_through_linear },
        Property { name: "nonhol.pi_over_linear", check: nonhol_pi_over_linear },
        Property { name: "nonhol.tilde22_over_linear", check: nonhol_tilde22_over_linear },
        Property { name: "nonhol.tilde22_factors", check: nonhol_tilde22_factors },
        Property { name: "semihol.base_through_linear", check: semihol_base_through_linear },
        Property { name: "semihol.hat22_over_linear", check: semihol_hat22_over_linear },
        Property { name: "semihol.embedding", check: semihol_embedding },
        Property { name: "semihol.orbit_triangle", check: semihol_orbit_triangle },
        Property { name: "hol.base_through_linear", check: hol_base_through_linear },
        Property { name: "hol.embeddings", check: hol_embeddings },
        Property { name: "hol.tilde22_of_embedding", check: hol_tilde22_of_embedding },
    ],
};

fn nonhol_base_through_linear(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = nonhol(cx, r);
    ensure(q.proj_20() == q.proj_21().proj_10(), || json!({"q": fr(&q)}))
}

fn nonhol_pi_over_linear(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = nonhol(cx, r);
    let p = proj_pi(&q);
    ensure(p.proj_21() == q.proj_21() && p.proj_20() == q.proj_20(), || json!({"q": fr(&q)}))
}

fn nonhol_tilde22_over_linear(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = nonhol(cx, r);
    let p = proj_tilde22(&q);
    ensure(
        p.proj_21() == q.proj_21()
            && p.proj_20() == q.proj_20()
            && p.proj_21() == proj_pi(&q).proj_21(),
        || json!({"q": fr(&q)}),
    )
}

fn nonhol_tilde22_factors(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = nonhol(cx, r);
    ensure(proj_tilde22(&q) == proj_hat22(&proj_pi(&q)), || json!({"q": fr(&q)}))
}

fn semihol_base_through_linear(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = semihol(cx, r);
    ensure(q.proj_20() == q.proj_21().proj_10(), || json!({"q": fr(&q)}))
}

fn semihol_hat22_over_linear(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = semihol(cx, r);
    let p = proj_hat22(&q);
    ensure(p.proj_21() == q.proj_21() && p.proj_20() == q.proj_20(), || json!({"q": fr(&q)}))
}

fn semihol_embedding(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = semihol(cx, r);
    let e = q.to_nonhol();
    ensure(
        e.proj_21() == q.proj_21()
            && e.classify() != FrameClass::Nonholonomic
            && e.to_semihol().as_ref() == Ok(&q),
        || json!({"q": fr(&q)}),
    )
}

fn semihol_orbit_triangle(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = semihol(cx, r);
    let c = theta_inv(&q);
    ensure(
        omega(&A2Orbit::of(q.clone())) == proj_hat22(&q)
            && proj_hat22(&theta(&c)) == *c.p()
            && fiber_hat22_contains(c.p(), &q),
        || json!({"q": fr(&q)}),
    )
}

fn hol_base_through_linear(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = hol(cx, r);
    ensure(q.proj_20() == q.proj_21().proj_10(), || json!({"q": fr(&q)}))
}

fn hol_embeddings(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = hol(cx, r);
    let s = q.to_semihol();
    let e = q.to_nonhol();
    ensure(
        proj_hat22(&s) == q
            && e.classify() == FrameClass::Holonomic
            && e.to_semihol().as_ref() == Ok(&s)
            && s.proj_21() == q.proj_21()
            && e.proj_21() == q.proj_21(),
        || json!({"q": fr(&q)}),
    )
}

fn hol_tilde22_of_embedding(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = hol(cx, r);
    let id = SquareMatrix::identity(cx.n);
    let expected = Bilinear::pre_compose(q.f(), &id, q.a().matrix()).sym_part();
    let p = proj_tilde22(&q.to_nonhol());
    ensure(p.x() == q.x() && p.a() == q.a() && *p.f() == expected, || json!({"q": fr(&q)}))
}
