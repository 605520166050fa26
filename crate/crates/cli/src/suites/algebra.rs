use jetframe::{random, Bilinear};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{bil, ensure, to_value, Ctx, Outcome, Property, Suite};

pub const PREL1: Suite = Suite {
    name: "prel1",
    about: "transpose, symmetrization and antisymmetrization against composition",
    properties: &[
        Property { name: "post_compose_commutes", check: post_compose_commutes },
        Property { name: "diagonal_pre_compose_commutes", check: diagonal_pre_compose_commutes },
        Property { name: "sym_skew_split", check: sym_skew_split },
        Property { name: "actions_associate", check: actions_associate },
    ],
};

fn post_compose_commutes(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let a = random::gl(cx.n, r);
    let f = random::bilinear(cx.n, r);
    let post = |g: &Bilinear| Bilinear::post_compose(a.matrix(), g);
    let af = post(&f);
    ensure(
        af.transpose() == post(&f.transpose())
            && af.sym_part() == post(&f.sym_part())
            && af.skew_part() == post(&f.skew_part()),
        || json!({"a": to_value(&a), "f": bil(&f)}),
    )
}

fn diagonal_pre_compose_commutes(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let a = random::matrix(cx.n, r);
    let f = random::bilinear(cx.n, r);
    let pre = |g: &Bilinear| Bilinear::pre_compose(g, &a, &a);
    let fa = pre(&f);
    ensure(
        fa.transpose() == pre(&f.transpose())
            && fa.sym_part() == pre(&f.sym_part())
            && fa.skew_part() == pre(&f.skew_part()),
        || json!({"a": to_value(&a), "f": bil(&f)}),
    )
}

fn sym_skew_split(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let f = random::bilinear(cx.n, r);
    let (s, k) = (f.sym_part(), f.skew_part());
    ensure(
        s.add(&k) == f
            && s.is_symmetric()
            && k.is_skew()
            && s.sym_part() == s
            && k.skew_part() == k
            && s.skew_part().is_zero()
            && k.sym_part().is_zero(),
        || json!({"f": bil(&f)}),
    )
}

fn actions_associate(cx: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let a = random::matrix(cx.n, r);
    let b = random::matrix(cx.n, r);
    let c = random::matrix(cx.n, r);
    let f = random::bilinear(cx.n, r);
    let left = Bilinear::pre_compose(&Bilinear::post_compose(&a, &f), &b, &c);
    let right = Bilinear::post_compose(&a, &Bilinear::pre_compose(&f, &b, &c));
    ensure(left == right, || {
        json!({"a": to_value(&a), "b": to_value(&b), "c": to_value(&c), "f": bil(&f)})
    })
}
