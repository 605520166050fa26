use jetframe::frames::{proj_hat22, FrameDoc, NonHolFrame, SemiHolFrame};
use jetframe::groups::{in_g1xa2, in_g2, mu, mu_inv, DeLeon1, DeLeon2, Element, GHat2, GTilde2, JetGroup, QuotClassHat, T1nL1n, G2};
use jetframe::{Bilinear, GlMatrix, Rational, SquareMatrix};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=2).prop_map(|(p, q)| Rational::new(p, q))
}

fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

fn gl(n: usize) -> impl Strategy<Value = GlMatrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_filter_map("singular", move |v| {
        let m = SquareMatrix::from_vec(n, v.into_iter().map(Rational::from_int).collect()).ok()?;
        GlMatrix::new(m).ok()
    })
}

fn bilinear(n: usize) -> impl Strategy<Value = Bilinear> {
    prop::collection::vec(rational(), n * n * n).prop_map(move |c| Bilinear::from_vec(n, c).unwrap())
}

fn dim() -> impl Strategy<Value = usize> {
    1usize..=3
}

fn hat(n: usize) -> impl Strategy<Value = GHat2> {
    (gl(n), bilinear(n)).prop_map(|(a, f)| GHat2::new(a, f).unwrap())
}

fn g2(n: usize) -> impl Strategy<Value = G2> {
    (gl(n), bilinear(n)).prop_map(|(a, f)| G2::new(a, f.sym_part()).unwrap())
}

fn tilde2(n: usize) -> impl Strategy<Value = GTilde2> {
    (gl(n), gl(n), bilinear(n)).prop_map(|(a, b, f)| GTilde2::new(a, b, f).unwrap())
}

fn assoc<G: JetGroup>(x: &G, y: &G, z: &G) -> bool {
    x.mul(y).mul(z) == x.mul(&y.mul(z))
}

fn inverse<G: JetGroup>(x: &G) -> bool {
    x.mul(&x.inv()).is_identity() && x.inv().mul(x).is_identity()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sym_skew_split(f in dim().prop_flat_map(bilinear)) {
        let s = f.sym_part();
        let k = f.skew_part();
        prop_assert_eq!(s.add(&k), f.clone());
        prop_assert!(s.is_symmetric() && k.is_skew());
        prop_assert_eq!(s.sym_part(), s.clone());
        prop_assert_eq!(k.skew_part(), k.clone());
        prop_assert!(s.skew_part().is_zero() && k.sym_part().is_zero());
        prop_assert_eq!(f.transpose().transpose(), f);
    }

    #[test]
    fn pre_compose_is_pointwise(
        (f, a, b, u, v) in dim().prop_flat_map(|n| (bilinear(n), gl(n), gl(n), point(n), point(n)))
    ) {
        let g = Bilinear::pre_compose(&f, a.matrix(), b.matrix());
        prop_assert_eq!(g.eval(&u, &v), f.eval(&a.matrix().apply(&u), &b.matrix().apply(&v)));
        let h = Bilinear::post_compose(a.matrix(), &f);
        prop_assert_eq!(h.eval(&u, &v), a.matrix().apply(&f.eval(&u, &v)));
    }

    #[test]
    fn composition_respects_symmetry(
        (f, a, b) in dim().prop_flat_map(|n| (bilinear(n), gl(n), gl(n)))
    ) {
        let s = f.sym_part();
        let k = f.skew_part();
        prop_assert!(Bilinear::pre_compose(&s, a.matrix(), a.matrix()).is_symmetric());
        prop_assert!(Bilinear::pre_compose(&k, a.matrix(), a.matrix()).is_skew());
        prop_assert!(Bilinear::post_compose(b.matrix(), &s).is_symmetric());
        prop_assert!(Bilinear::post_compose(b.matrix(), &k).is_skew());
        let mixed = Bilinear::pre_compose(&f, a.matrix(), b.matrix());
        let swapped = Bilinear::pre_compose(&f.transpose(), b.matrix(), a.matrix());
        prop_assert_eq!(mixed.transpose(), swapped);
    }

    #[test]
    fn inverse_is_two_sided(a in dim().prop_flat_map(gl)) {
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert!(a.matrix().mul(a.inverse_matrix()).is_identity());
        prop_assert!(a.inverse_matrix().mul(a.matrix()).is_identity());
        prop_assert_eq!(a.matrix().det() * a.inverse_matrix().det(), Rational::one());
    }

    #[test]
    fn hat_group_axioms((x, y, z) in dim().prop_flat_map(|n| (hat(n), hat(n), hat(n)))) {
        prop_assert!(assoc(&x, &y, &z));
        prop_assert!(inverse(&x));
        prop_assert_eq!(x.mul(&GHat2::identity(x.n())), x.clone());
    }

    #[test]
    fn tilde2_group_axioms((x, y, z) in dim().prop_flat_map(|n| (tilde2(n), tilde2(n), tilde2(n)))) {
        prop_assert!(assoc(&x, &y, &z));
        prop_assert!(inverse(&x));
    }

    #[test]
    fn derived_laws_agree_with_hat(
        (x, y) in dim().prop_flat_map(|n| (hat(n), hat(n)))
    ) {
        let content = x.mul(&y);
        let d1 = DeLeon1::from_hat2(&x).mul(&DeLeon1::from_hat2(&y));
        prop_assert_eq!(d1.to_hat2(), content.clone());
        let d2 = DeLeon2::from_hat2(&x).mul(&DeLeon2::from_hat2(&y));
        prop_assert_eq!(d2.to_hat2(), content.clone());
        let t = jetframe::groups::tau_inv(&x).mul(&jetframe::groups::tau_inv(&y));
        prop_assert_eq!(jetframe::groups::tau(&t), content);
        prop_assert!(inverse(&T1nL1n::new(x.a.clone(), x.f.clone()).unwrap()));
    }

    #[test]
    fn hat_decomposition((x, y) in dim().prop_flat_map(|n| (hat(n), g2(n)))) {
        let (g, h) = x.decompose();
        prop_assert!(h.is_skew());
        prop_assert_eq!(g.to_hat().mul(&GHat2::translation(h.clone())), x.clone());
        prop_assert!(in_g2(&g.to_hat()));
        prop_assert!(in_g1xa2(&GHat2::translation(h)));
        let c = QuotClassHat::of(&x);
        prop_assert_eq!(mu_inv(&mu(&c)), c.clone());
        prop_assert_eq!(mu(&mu_inv(&y)), y.clone());
        prop_assert_eq!(mu(&c.mul(&mu_inv(&y))), mu(&c).mul(&y));
    }

    #[test]
    fn right_actions_compose(
        (x, g, h) in dim().prop_flat_map(|n| (point(n), tilde2(n), tilde2(n)))
    ) {
        let q = NonHolFrame::at(x, GTilde2::identity(g.n())).unwrap().act(&g);
        prop_assert_eq!(q.act(&h), q.act(&g.inv()).act(&g).act(&h));
        prop_assert_eq!(q.act(&g).act(&h), q.act(&g.mul(&h)));
    }

    #[test]
    fn semihol_action_and_projection(
        (x, p, k, g) in dim().prop_flat_map(|n| (point(n), hat(n), hat(n), g2(n)))
    ) {
        let q = SemiHolFrame::at(x, p).unwrap();
        prop_assert_eq!(q.act(&k).act(&k.inv()), q.clone());
        let moved = proj_hat22(&q.act(&g.to_hat()));
        prop_assert_eq!(moved, proj_hat22(&q).act(&g));
    }

    #[test]
    fn json_round_trips(
        (x, g, y) in dim().prop_flat_map(|n| (point(n), tilde2(n), hat(n)))
    ) {
        let e = Element::Tilde2(g.clone());
        prop_assert_eq!(Element::from_json(&e.to_json()).unwrap(), e);
        let e = Element::Hat2(y.clone());
        prop_assert_eq!(Element::from_json(&e.to_json()).unwrap(), e);
        let d = FrameDoc::NonHol(NonHolFrame::at(x.clone(), g).unwrap());
        prop_assert_eq!(FrameDoc::from_json(&d.to_json()).unwrap(), d);
        let d = FrameDoc::SemiHol(SemiHolFrame::at(x, y).unwrap());
        prop_assert_eq!(FrameDoc::from_json(&d.to_json()).unwrap(), d);
    }
}
