use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superwhit_core::{sl_super, EnvelopingElement, FieldElement, LieSuperalgebra, Parity};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn g() -> LieSuperalgebra {
    sl_super(1, 2).unwrap()
}

/// Z-degree: -1 on y2, y3, +1 on x2, x3, 0 on the even part.
fn z_degree(g: &LieSuperalgebra, u: &EnvelopingElement) -> Option<i64> {
    let deg = |label: &str| match label {
        "y2" | "y3" => -1,
        "x2" | "x3" => 1,
        _ => 0,
    };
    let mut degs = u.terms().map(|(m, _)| {
        m.exponents()
            .iter()
            .enumerate()
            .map(|(i, &e)| deg(g.label(i)) * e as i64)
            .sum::<i64>()
    });
    let first = degs.next().unwrap_or(0);
    degs.all(|d| d == first).then_some(first)
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 0..=6)
}

fn short_word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 0..=3)
}

fn coeff() -> impl Strategy<Value = FieldElement> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| FieldElement::ratio(n, d))
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn straightening_is_confluent(w in word(), seed in any::<u64>(), c in coeff()) {
        let g = g();
        let reference = g.normal_form(&w, c.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random = g.normal_form_by_rewriting(&w, c.clone(), |choices| rng.gen_range(0..choices.len()));
        let leftmost = g.normal_form_by_rewriting(&w, c.clone(), |_| 0);
        let rightmost = g.normal_form_by_rewriting(&w, c, |choices| choices.len() - 1);
        prop_assert_eq!(&reference, &random);
        prop_assert_eq!(&reference, &leftmost);
        prop_assert_eq!(&reference, &rightmost);
    }

    #[test]
    fn odd_exponents_stay_below_two(w in word()) {
        let g = g();
        let u = g.normal_form(&w, FieldElement::one());
        for (m, _) in u.terms() {
            for i in g.odd_indices() {
                prop_assert!(m.exp(i) <= 1);
            }
        }
    }

    #[test]
    fn multiplication_is_associative(a in short_word(), b in short_word(), c in short_word(), s in coeff()) {
        let g = g();
        let u = g.normal_form(&a, s);
        let v = g.normal_form(&b, FieldElement::one());
        let w = g.normal_form(&c, FieldElement::one());
        let left = g.multiply(&g.multiply(&u, &v).unwrap(), &w).unwrap();
        let right = g.multiply(&u, &g.multiply(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplying_words_is_concatenation(a in short_word(), b in short_word()) {
        let g = g();
        let u = g.normal_form(&a, FieldElement::one());
        let v = g.normal_form(&b, FieldElement::one());
        let joined: Vec<usize> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(g.multiply(&u, &v).unwrap(), g.normal_form(&joined, FieldElement::one()));
    }

    #[test]
    fn adjoint_is_a_super_derivation(x in 0usize..8, a in short_word(), b in short_word()) {
        let g = g();
        let u = g.normal_form(&a, FieldElement::one());
        let v = g.normal_form(&b, FieldElement::one());
        let du = match u.parity(&g) { Some(p) => p, None => return Ok(()) };
        let lhs = g.adjoint(x, &g.multiply(&u, &v).unwrap()).unwrap();
        let sign = FieldElement::from_int(g.parity(x).sign(du));
        let rhs = g
            .multiply(&g.adjoint(x, &u).unwrap(), &v)
            .unwrap()
            .add(&g.multiply(&u, &g.adjoint(x, &v).unwrap()).unwrap().scale(&sign))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_preserves_both_gradings(a in short_word(), b in short_word()) {
        let g = g();
        let u = g.normal_form(&a, FieldElement::one());
        let v = g.normal_form(&b, FieldElement::one());
        let uv = g.multiply(&u, &v).unwrap();
        if uv.is_zero() || u.is_zero() || v.is_zero() {
            return Ok(());
        }
        let (pu, pv) = (u.parity(&g).unwrap(), v.parity(&g).unwrap());
        prop_assert_eq!(uv.parity(&g), Some(pu.plus(pv)));
        let (zu, zv) = (z_degree(&g, &u).unwrap(), z_degree(&g, &v).unwrap());
        prop_assert_eq!(z_degree(&g, &uv), Some(zu + zv));
    }
}

#[test]
fn supercommutator_matches_bracket_on_all_pairs() {
    let g = g();
    for x in 0..8 {
        for y in 0..8 {
            let gx = EnvelopingElement::generator(&g, x);
            let gy = EnvelopingElement::generator(&g, y);
            let sign = FieldElement::from_int(g.parity(x).sign(g.parity(y)));
            let lhs = g
                .multiply(&gx, &gy)
                .unwrap()
                .sub(&g.multiply(&gy, &gx).unwrap().scale(&sign))
                .unwrap();
            assert_eq!(lhs, g.bracket(&gx, &gy).unwrap(), "[{}, {}]", g.label(x), g.label(y));
        }
    }
}

#[test]
fn unit_is_two_sided() {
    let g = g();
    let one = EnvelopingElement::one(&g);
    let u = g.normal_form_labels(&["x3", "h", "y2", "y1"], FieldElement::ratio(3, 7)).unwrap();
    assert_eq!(g.multiply(&one, &u).unwrap(), u);
    assert_eq!(g.multiply(&u, &one).unwrap(), u);
}

#[test]
fn homogeneous_parts_split_by_parity() {
    let g = g();
    let u = g
        .normal_form_labels(&["y2"], FieldElement::one())
        .unwrap()
        .add(&g.normal_form_labels(&["h"], FieldElement::one()).unwrap())
        .unwrap();
    assert_eq!(u.parity(&g), None);
    let (even, odd) = u.homogeneous_parts(&g);
    assert_eq!(even.parity(&g), Some(Parity::Even));
    assert_eq!(odd.parity(&g), Some(Parity::Odd));
}
