use jetframe::frames::{proj_hat22, FrameClass, LinFrame, NonHolFrame, SecondOrderFrame};
use jetframe::groups::{GHat2, GTilde2, JetGroup, G2};
use jetframe::jets::{compose_2jets, frame_from_fm_map, g2_law_via_jets, left_act_diffeo, FMJetData, Map2Jet};
use jetframe::{random, GlMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{el, ensure, fr, to_value, Ctx, Outcome, Property, Suite};

pub const ORACLE: Suite = Suite {
    name: "oracle",
    about: "truncated jet composition against the group laws and the frame actions",
    properties: &[
        Property { name: "g2_law_matches_hat2", check: g2_law_matches_hat2 },
        Property { name: "compose_associative", check: compose_associative },
        Property { name: "compose_identity", check: compose_identity },
        Property { name: "diffeo_functorial", check: diffeo_functorial },
        Property { name: "diffeo_preserves_class", check: diffeo_preserves_class },
        Property { name: "diffeo_prolongs_linear_frame", check: diffeo_prolongs_linear_frame },
        Property { name: "diffeo_commutes_with_hat22", check: diffeo_commutes_with_hat22 },
        Property { name: "diffeo_identity", check: diffeo_identity },
        Property { name: "frame_class_from_fm_data", check: frame_class_from_fm_data },
    ],
};

fn jet_at(base: &[jetframe::Rational], r: &mut ChaCha8Rng) -> Map2Jet {
    Map2Jet::random(base.to_vec(), r)
}

/// A frame of each class with equal probability, embedded as non-holonomic.
fn any_frame(cx: &Ctx, r: &mut ChaCha8Rng) -> NonHolFrame {
    let x = random::point(cx.n, r);
    match r.gen_range(0..3) {
        0 => NonHolFrame::at(x, GTilde2::random(cx.n, r)),
        1 => jetframe::frames::SemiHolFrame::at(x, GHat2::random(cx.n, r)).map(|q| q.to_nonhol()),
        _ => jetframe::frames::HolFrame::at(x, G2::random(cx.n, r)).map(|q| q.to_nonhol()),
    }
    .expect("dimensions match")
}

fn g2_law_matches_hat2(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let (p, q) = (G2::random(cx.n, r), G2::random(cx.n, r));
    let via_jets = g2_law_via_jets(&p, &q);
    ensure(via_jets.to_hat() == p.to_hat().mul(&q.to_hat()) && via_jets == p.mul(&q), || {
        json!({"p": el(&p), "q": el(&q)})
    })
}

fn compose_associative(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let f = jet_at(&random::point(cx.n, r), r);
    let g = jet_at(f.value(), r);
    let h = jet_at(g.value(), r);
    let left = compose_2jets(&compose_2jets(&h, &g).expect("chained"), &f).expect("chained");
    let right = compose_2jets(&h, &compose_2jets(&g, &f).expect("chained")).expect("chained");
    ensure(left == right && left.hess().is_symmetric(), || {
        json!({"f": to_value(&f), "g": to_value(&g), "h": to_value(&h)})
    })
}

fn compose_identity(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let f = jet_at(&random::point(cx.n, r), r);
    let before = Map2Jet::identity(f.base().clone());
    let after = Map2Jet::identity(f.value().clone());
    ensure(
        compose_2jets(&f, &before).as_ref() == Ok(&f) && compose_2jets(&after, &f).as_ref() == Ok(&f),
        || json!({"f": to_value(&f)}),
    )
}

fn diffeo_functorial(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = any_frame(cx, r);
    let g = jet_at(&q.x, r);
    let f = jet_at(g.value(), r);
    let fg = compose_2jets(&f, &g).expect("chained");
    let one_shot = left_act_diffeo(&fg, &q).expect("domain matches");
    let staged = left_act_diffeo(&f, &left_act_diffeo(&g, &q).expect("domain matches"))
        .expect("domain matches");
    ensure(one_shot == staged, || json!({"q": fr(&q), "g": to_value(&g), "f": to_value(&f)}))
}

fn diffeo_preserves_class(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = any_frame(cx, r);
    let f = jet_at(&q.x, r);
    let moved = left_act_diffeo(&f, &q).expect("domain matches");
    ensure(moved.classify() == q.classify(), || json!({"q": fr(&q), "f": to_value(&f)}))
}

fn diffeo_prolongs_linear_frame(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = any_frame(cx, r);
    let f = jet_at(&q.x, r);
    let moved = left_act_diffeo(&f, &q).expect("domain matches");
    let jac = GlMatrix::new(f.jac().clone()).expect("invertible Jacobian");
    let expected = LinFrame { x: f.value().clone(), a: jac.mul(&q.a) };
    ensure(moved.proj_21() == expected && moved.proj_20() == *f.value(), || {
        json!({"q": fr(&q), "f": to_value(&f)})
    })
}

fn diffeo_commutes_with_hat22(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = jetframe::frames::SemiHolFrame::at(random::point(cx.n, r), GHat2::random(cx.n, r))
        .expect("dimensions match");
    let f = jet_at(&q.x, r);
    let push = |p: &NonHolFrame| left_act_diffeo(&f, p).expect("domain matches");
    let then_project = proj_hat22(&push(&q.to_nonhol()).to_semihol().expect("semi-holonomic"));
    let project_then = push(&proj_hat22(&q).to_nonhol()).to_semihol().expect("semi-holonomic");
    ensure(project_then.to_hol().as_ref() == Ok(&then_project), || {
        json!({"q": fr(&q), "f": to_value(&f)})
    })
}

fn diffeo_identity(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let q = any_frame(cx, r);
    let id = Map2Jet::identity(q.x.clone());
    ensure(left_act_diffeo(&id, &q).as_ref() == Ok(&q), || json!({"q": fr(&q)}))
}

/// `φ^i_j(0) = ∂φ^i/∂r^j(0)` half of the time; the frame is semi-holonomic
/// exactly then, and holonomic when in addition `∂φ^k_l/∂r^j` is symmetric.
fn frame_class_from_fm_data(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let dphi = random::gl(cx.n, r).matrix().clone();
    let phi_lin = if r.gen_bool(0.5) { dphi.clone() } else { random::gl(cx.n, r).matrix().clone() };
    let dphi_lin = if r.gen_bool(0.5) { random::symmetric(cx.n, r) } else { random::bilinear(cx.n, r) };
    let d = FMJetData { phi0: random::point(cx.n, r), phi_lin, dphi, dphi_lin };
    let q = frame_from_fm_map(&d).expect("invertible data");
    let expected = match (d.phi_lin == d.dphi, d.dphi_lin.is_symmetric()) {
        (false, _) => FrameClass::Nonholonomic,
        (true, false) => FrameClass::Semiholonomic,
        (true, true) => FrameClass::Holonomic,
    };
    ensure(
        q.classify() == expected && q.x == d.phi0 && *q.a.matrix() == d.phi_lin && *q.b.matrix() == d.dphi,
        || json!({"data": to_value(&d)}),
    )
}
