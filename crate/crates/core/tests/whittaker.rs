use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superwhit_core::whittaker::window_basis;
use superwhit_core::{
    sl_super, BasisIndex, Certificate, Error, FieldElement, LieSuperalgebra, ModuleVector, ParamSet, Parity,
    RootDatum, WhittakerModule,
};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn f(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn e(k: u8, l: u8, m: u32) -> ModuleVector {
    ModuleVector::basis(BasisIndex::new(k, l, m))
}

fn sym() -> WhittakerModule {
    WhittakerModule::symbolic().unwrap()
}

/// Random rationals with `a != 0` and `b != c (c - 2)`.
fn generic_specializations(n: usize, seed: u64) -> Vec<(BigRational, BigRational, BigRational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let mut r = || BigRational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=6).into());
        let (a, b, c) = (r(), r(), r());
        if a == q(0) || b == &c * (&c - q(2)) {
            continue;
        }
        out.push((a, b, c));
    }
    out
}

#[test]
fn cyclic_vector_action_examples() {
    let m = sym();
    let w = ModuleVector::cyclic();
    assert_eq!(m.act_label("z", &w).unwrap(), w.scale(m.c()));
    let half = FieldElement::ratio(1, 2);
    assert_eq!(
        m.act_label("x2", &e(1, 0, 0)).unwrap(),
        w.scale(&(&half * m.c())).add(&e(0, 0, 1).scale(&half))
    );
    let w4 = e(0, 1, 0).scale(&(&f(2) * m.a())).add(&e(1, 0, 1));
    assert_eq!(m.act_label("x3", &w4).unwrap(), w.scale(&(m.a() * &(m.c() - &f(2)))));
}

#[test]
fn six_of_eight_stated_identities_hold() {
    let ids = sym().action_identities();
    let failing: Vec<&str> = ids.iter().filter(|i| !i.holds()).map(|i| i.name.as_str()).collect();
    assert_eq!(ids.len(), 8);
    assert_eq!(failing, ["x2 w3", "x2 w4"]);
}

#[test]
fn x2_on_w3_expanded() {
    let m = sym();
    let (a, b, c) = (m.a(), m.b(), m.c());
    let inv_a = a.inv().unwrap();
    let r = |n, d| FieldElement::ratio(n, d);
    let expected = e(0, 1, 0)
        .scale(&(&(&r(1, 2) * c) - &f(1)))
        .add(&e(0, 1, 1).scale(&r(1, 2)))
        .add(&e(1, 0, 0).scale(&-&(&(&r(1, 4) * b) * &inv_a)))
        .add(&e(1, 0, 1).scale(&(&r(1, 2) * &inv_a)))
        .add(&e(1, 0, 2).scale(&(&r(1, 4) * &inv_a)));
    let [_, _, w3, _] = m.even_whittaker_generators();
    assert_eq!(m.act_label("x2", &w3).unwrap(), expected);
}

#[test]
fn x2_on_w4_expanded() {
    let m = sym();
    let half = FieldElement::ratio(1, 2);
    let expected = e(0, 0, 0).scale(&(&half * m.b())).add(&e(0, 0, 1).scale(&(&half * &(m.c() - &f(2)))));
    let [_, _, _, w4] = m.even_whittaker_generators();
    assert_eq!(m.act_label("x2", &w4).unwrap(), expected);
}

#[test]
fn even_whittaker_space_is_four_dimensional() {
    let m = sym();
    for window in 2..=4 {
        let s = m.whittaker_space_even(window).unwrap();
        assert_eq!(s.dim(), 4, "window {window}");
        for v in m.even_whittaker_generators() {
            assert!(s.contains(&v));
        }
    }
    assert!(!m.whittaker_space_even(3).unwrap().contains(&e(0, 0, 1)));
}

#[test]
fn weight_zero_slice_is_spanned_by_w() {
    let m = sym();
    let s = m.whittaker_space_even(4).unwrap();
    let slice: Vec<&ModuleVector> = s.basis.iter().filter(|v| v.terms().all(|(i, _)| i.mu() == 0)).collect();
    assert_eq!(slice, [&ModuleVector::cyclic()]);
}

#[test]
fn whittaker_space_is_the_cyclic_line() {
    let s = sym().whittaker_space_full(4).unwrap();
    assert_eq!(s.basis, [ModuleVector::cyclic()]);
}

#[test]
fn c_equal_two_off_the_atypical_point() {
    for b in [1, -3, 7] {
        let m = WhittakerModule::specialized(q(1), q(b), q(2)).unwrap();
        assert_eq!(m.whittaker_space_full(6).unwrap().dim(), 1, "b = {b}");
        assert!(matches!(m.simplicity_certificate(6).unwrap(), Certificate::Simple { .. }));
    }
}

#[test]
fn atypical_parameters_have_a_second_whittaker_vector() {
    // b = c (c - 2): the combination (2 - c) w2 + w4 is Whittaker.
    for (a, c) in [(1, 2), (3, 0), (-2, 5), (1, 3)] {
        let (a, c) = (q(a), q(c));
        let b = &c * (&c - q(2));
        let m = WhittakerModule::specialized(a, b, c.clone()).unwrap();
        let s = m.whittaker_space_full(6).unwrap();
        assert_eq!(s.dim(), 2);
        let [_, w2, _, w4] = m.even_whittaker_generators();
        let extra = w2.scale(&FieldElement::from_rational(q(2) - &c)).add(&w4);
        assert!(s.contains(&extra));
        match m.simplicity_certificate(6).unwrap() {
            Certificate::NotSimple { mu, vector } => {
                assert_eq!(mu, 1);
                assert!(m.act_label("x2", &vector).unwrap().is_zero());
                assert!(m.act_label("x3", &vector).unwrap().is_zero());
            }
            other => panic!("expected NotSimple, got {other:?}"),
        }
    }
}

#[test]
fn wrong_character_has_no_whittaker_vectors() {
    let m = sym();
    for other in [m.a() + &f(1), m.a() * &f(2)] {
        assert_eq!(m.whittaker_space_full_with(4, &other).unwrap().dim(), 0);
    }
}

#[test]
fn no_maximal_vectors_generically() {
    let m = sym();
    for mu in 1..=2 {
        assert_eq!(m.maximal_vectors(mu, 4).unwrap().dim(), 0);
    }
    assert_eq!(m.maximal_vectors(3, 4).unwrap().dim(), 0);
    assert!(m.maximal_vectors(0, 4).is_err());
}

#[test]
fn symbolic_certificate_is_simple() {
    match sym().simplicity_certificate(4).unwrap() {
        Certificate::Simple { witness, window } => {
            assert_eq!(witness, ModuleVector::cyclic());
            assert_eq!(window, 4);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn dropping_x3_produces_maximal_vectors() {
    let m = sym().with_zero_action(&["x3"]).unwrap();
    let found = m.maximal_vectors(1, 4).unwrap();
    assert!(found.dim() > 0);
    for v in &found.basis {
        assert!(m.act_label("x2", v).unwrap().is_zero());
        assert!(m.act_label("x3", v).unwrap().is_zero());
    }
    assert!(matches!(m.simplicity_certificate(4).unwrap(), Certificate::NotSimple { mu: 1, .. }));
}

#[test]
fn too_small_window_is_reported() {
    let m = sym();
    assert_eq!(
        m.whittaker_space_even(1),
        Err(Error::WindowTooSmall { window: 1, previous: 3, current: 4 })
    );
    assert_eq!(m.simplicity_certificate(1).unwrap(), Certificate::Inconclusive { window: 1 });
}

#[test]
fn z_weight_slices() {
    let m = sym();
    let spaces = m.z_weight_spaces(3);
    assert_eq!(spaces[&0], (0..=3).map(|k| BasisIndex::new(0, 0, k)).collect::<Vec<_>>());
    assert_eq!(spaces[&2], (0..=3).map(|k| BasisIndex::new(1, 1, k)).collect::<Vec<_>>());
    assert!(!spaces.contains_key(&3));
    for (mu, slice) in &spaces {
        for &i in slice {
            let v = ModuleVector::basis(i);
            let expected = v.scale(&(m.c() - &FieldElement::from_int(*mu as i64)));
            assert_eq!(m.act_label("z", &v).unwrap(), expected);
        }
    }
}

#[test]
fn filtration_length_matches_even_whittaker_dimension() {
    let m = sym();
    let (len, weights) = m.filtration_length().unwrap();
    assert_eq!(len, 4);
    let rd = RootDatum::sl12(&sl_super(1, 2).unwrap()).unwrap();
    assert_eq!(weights, rd.exterior_weights());
    assert_eq!(m.whittaker_space_even(3).unwrap().dim(), len);
}

#[test]
fn even_algebra_has_filtration_length_one() {
    let one = |l: &str| vec![(FieldElement::one(), l.to_string())];
    let two = |c: i64, l: &str| vec![(FieldElement::from_int(c), l.to_string())];
    let sl2 = LieSuperalgebra::from_structure_constants(
        vec!["y".into(), "h".into(), "x".into()],
        vec![Parity::Even; 3],
        ParamSet::empty(),
        &[
            ("x".into(), "y".into(), one("h")),
            ("y".into(), "x".into(), two(-1, "h")),
            ("h".into(), "x".into(), two(2, "x")),
            ("x".into(), "h".into(), two(-2, "x")),
            ("h".into(), "y".into(), two(-2, "y")),
            ("y".into(), "h".into(), two(2, "y")),
        ],
    )
    .unwrap();
    let rd = RootDatum::root_decomposition(&sl2, &["h"]).unwrap();
    assert_eq!(rd.exterior_weights().len(), 1);
}

#[test]
fn casimir_acts_by_b_on_weight_zero() {
    let m = sym();
    let cas = m.algebra().casimir_sl2().unwrap();
    for k in 0..=6 {
        let v = e(0, 0, k);
        assert_eq!(m.act_enveloping(&cas, &v), v.scale(m.b()), "h^{k} w");
    }
}

#[test]
fn x1_minus_a_is_locally_nilpotent() {
    let m = sym();
    let x1 = m.algebra().index("x1").unwrap();
    let nilpotent_after = |v: &ModuleVector, n: u32| {
        let mut u = v.clone();
        for _ in 0..n {
            u = m.act(x1, &u).sub(&u.scale(m.a()));
        }
        u.is_zero()
    };
    for i in window_basis(4) {
        let v = ModuleVector::basis(i);
        // y3 h^m w picks up a y2 h^m w term, which costs one extra step
        let steps = i.m + 1 + u32::from(i.k == 0 && i.l == 1);
        assert!(nilpotent_after(&v, steps), "{:?}", i);
        assert!(!nilpotent_after(&v, steps - 1), "{:?}", i);
    }
}

#[test]
fn scaling_the_character_keeps_dimensions_and_verdict() {
    for (a, b, c) in generic_specializations(4, 11) {
        let base = WhittakerModule::specialized(a.clone(), b.clone(), c.clone()).unwrap();
        for t in [q(2), BigRational::new((-1).into(), 3.into())] {
            let scaled = WhittakerModule::specialized(&a * &t, b.clone(), c.clone()).unwrap();
            assert_eq!(
                base.whittaker_space_full(3).unwrap().dim(),
                scaled.whittaker_space_full(3).unwrap().dim()
            );
            assert_eq!(
                base.simplicity_certificate(3).unwrap().name(),
                scaled.simplicity_certificate(3).unwrap().name()
            );
        }
    }
}

#[test]
fn specializations_agree_with_the_symbolic_solution() {
    let m = sym();
    let even = m.whittaker_space_even(3).unwrap();
    let full = m.whittaker_space_full(3).unwrap();
    for (a, b, c) in generic_specializations(10, 5) {
        let values = [Some(a.clone()), Some(b.clone()), Some(c.clone())];
        let s = WhittakerModule::specialized(a, b, c).unwrap();
        let s_even = s.whittaker_space_even(3).unwrap();
        let s_full = s.whittaker_space_full(3).unwrap();
        assert_eq!(s_even.dim(), even.dim());
        assert_eq!(s_full.dim(), full.dim());
        for v in &even.basis {
            if let Some(sv) = v.specialize(&values) {
                assert!(s_even.contains(&sv));
            }
        }
        for v in &full.basis {
            assert!(s_full.contains(&v.specialize(&values).unwrap()));
        }
    }
}

#[test]
fn representation_property_on_small_window() {
    let m = WhittakerModule::specialized(q(3), q(-5), BigRational::new(7.into(), 2.into())).unwrap();
    let g = m.algebra().clone();
    for x in 0..8 {
        for y in 0..8 {
            let sign = FieldElement::from_int(g.parity(x).sign(g.parity(y)));
            for i in window_basis(3) {
                let v = ModuleVector::basis(i);
                let lhs = m.act(x, &m.act(y, &v)).sub(&m.act(y, &m.act(x, &v)).scale(&sign));
                let br = g.bracket_basis(x, y);
                let rhs = br
                    .terms()
                    .fold(ModuleVector::zero(), |acc, (k, c)| acc.add(&m.act(k, &v).scale(c)));
                assert_eq!(lhs, rhs, "[{}, {}] on {:?}", g.label(x), g.label(y), i);
            }
        }
    }
}

#[test]
fn straightening_paths_agree() {
    let m = sym();
    for x in 0..8 {
        for i in window_basis(4) {
            assert_eq!(m.act_basis(x, i), m.act_basis_by_normal_form(x, i));
        }
    }
}

#[test]
fn pole_in_a_is_rejected() {
    assert_eq!(
        WhittakerModule::specialized(q(0), q(1), q(2)).unwrap_err(),
        Error::ParameterNotInvertible("a".into())
    );
    let params = ParamSet::new(["a"]);
    let zero = FieldElement::zero();
    assert!(WhittakerModule::new(params, zero.clone(), zero.clone(), zero).is_err());
}
