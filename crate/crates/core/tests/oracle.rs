//! h-vectors checked against an independent computation over the rationals.

mod common;

use std::collections::BTreeMap;

use apolarity_lab::{
    check_within, FieldElem, Form, HVector, LevelPresentation, Monomial, PrimeField, SeededRng,
};
use common::{exponents, lift, oracle_hvector, rank_over_q};
use num_bigint::BigInt;
use proptest::prelude::*;

type SmallForm = BTreeMap<Vec<u32>, i64>;

fn big(g: &SmallForm) -> common::IntForm {
    g.iter().map(|(a, &c)| (a.clone(), BigInt::from(c))).collect()
}

fn oracle(r: usize, e: u32, gens: &[SmallForm]) -> Vec<usize> {
    oracle_hvector(r, e, &gens.iter().map(big).collect::<Vec<_>>())
}

fn to_form(field: PrimeField, r: usize, e: u32, g: &SmallForm) -> Form {
    let terms = g.iter().map(|(a, &c)| (Monomial::new(a.clone()), field.from_i64(c)));
    Form::from_terms(field, r, e, terms).unwrap()
}

fn library_hvector(r: usize, e: u32, gens: &[SmallForm]) -> Option<Vec<usize>> {
    let field = PrimeField::default();
    let forms: Vec<Form> = gens.iter().map(|g| to_form(field, r, e, g)).collect();
    LevelPresentation::new(forms)
        .ok()
        .map(|p| p.hvector().unwrap().entries().to_vec())
}

fn int_form(r: usize, e: u32, terms: &[(&[u32], i64)]) -> SmallForm {
    let f: SmallForm = terms.iter().map(|(a, c)| (a.to_vec(), *c)).collect();
    assert!(f.keys().all(|a| a.len() == r && a.iter().sum::<u32>() == e));
    f
}

#[test]
fn hand_enumerated_hvectors() {
    let cases: Vec<(usize, u32, Vec<SmallForm>, Vec<usize>)> = vec![
        (1, 3, vec![int_form(1, 3, &[(&[3], 1)])], vec![1, 1, 1, 1]),
        (2, 2, vec![int_form(2, 2, &[(&[1, 1], 1)])], vec![1, 2, 1]),
        (2, 2, vec![int_form(2, 2, &[(&[2, 0], 1), (&[0, 2], 1)])], vec![1, 2, 1]),
        (2, 3, vec![int_form(2, 3, &[(&[2, 1], 1)])], vec![1, 2, 2, 1]),
        (3, 3, vec![int_form(3, 3, &[(&[1, 1, 1], 1)])], vec![1, 3, 3, 1]),
        (2, 4, vec![int_form(2, 4, &[(&[4, 0], 1), (&[0, 4], 1)])], vec![1, 2, 2, 2, 1]),
        (
            3,
            2,
            vec![int_form(3, 2, &[(&[2, 0, 0], 1)]), int_form(3, 2, &[(&[0, 1, 1], 1)])],
            vec![1, 3, 2],
        ),
        (
            2,
            3,
            vec![int_form(2, 3, &[(&[3, 0], 1)]), int_form(2, 3, &[(&[0, 3], 1)])],
            vec![1, 2, 2, 2],
        ),
    ];
    for (r, e, gens, expected) in cases {
        assert_eq!(oracle(r, e, &gens), expected, "oracle on {gens:?}");
        assert_eq!(library_hvector(r, e, &gens).unwrap(), expected, "library on {gens:?}");
    }
}

fn random_int_forms(seed: u64, r: usize, e: u32, t: usize, density: f64) -> Vec<SmallForm> {
    use rand::Rng;
    let mut rng = SeededRng::new(seed);
    (0..t)
        .map(|_| {
            let mut f = SmallForm::new();
            for a in exponents(r, e) {
                if rng.gen_bool(density) {
                    let c = rng.gen_range(-3i64..=3);
                    if c != 0 {
                        f.insert(a, c);
                    }
                }
            }
            f
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_rational_oracle(seed in any::<u64>(), r in 1usize..=3, e in 1u32..=5, t in 1usize..=2, sparse in any::<bool>()) {
        let density = if sparse { 0.3 } else { 0.9 };
        let gens = random_int_forms(seed, r, e, t, density);
        let expected = oracle(r, e, &gens);
        match library_hvector(r, e, &gens) {
            Some(h) => prop_assert_eq!(h, expected),
            // Rejected presentations are exactly the dependent ones.
            None => prop_assert!(expected[e as usize] < t),
        }
    }
}

#[test]
fn direct_and_iterated_derivatives_agree() {
    let field = PrimeField::default();
    for seed in 0..10 {
        let mut rng = SeededRng::new(seed);
        let r = 2 + (seed as usize % 3);
        let p = apolarity_lab::constructions::generic_presentation(field, r, 5, 2, &mut rng).unwrap();
        let h = p.hvector().unwrap();
        for i in 0..=5 {
            assert_eq!(p.derivative_space(i).unwrap().rank(), h[i as usize]);
        }
    }
}

#[test]
fn gorenstein_hvectors_are_palindromic() {
    let field = PrimeField::default();
    for seed in 0..50u64 {
        let mut rng = SeededRng::new(seed);
        let r = 1 + (seed as usize % 4);
        let e = 1 + (seed as u32 / 4 % 6);
        let f = apolarity_lab::constructions::dense_random_form(field, r, e, &mut rng);
        let h = LevelPresentation::new(vec![f]).unwrap().hvector().unwrap();
        assert!(h.is_symmetric(), "r={r} e={e}: {h}");
    }
}

#[test]
fn power_sums_have_expected_ranks() {
    // s generic quartic powers in 3 variables: h_i = min(s, dim R_i, dim R_{4-i}).
    let field = PrimeField::default();
    let mut rng = SeededRng::new(5);
    for s in 1..=4 {
        let spec = apolarity_lab::PowerSumSpec::generic(3, 4, &[s]);
        let p = apolarity_lab::power_sum_presentation(field, &spec, &mut rng).unwrap();
        let h = p.hvector().unwrap();
        let expected: Vec<usize> = (0..=4u32)
            .map(|i| s.min(apolarity_lab::monomial_count(3, i)).min(apolarity_lab::monomial_count(3, 4 - i)))
            .collect();
        assert_eq!(h.entries(), &expected[..], "s = {s}");
    }
}

#[test]
fn truncation_keeps_the_low_degrees() {
    let field = PrimeField::default();
    let mut rng = SeededRng::new(11);
    let p = apolarity_lab::constructions::generic_presentation(field, 3, 6, 2, &mut rng).unwrap();
    let h = p.hvector().unwrap();
    for d in 1..=6u32 {
        let tr = p.truncation(d).unwrap();
        assert_eq!(tr.socle_degree(), d);
        assert_eq!(tr.type_count(), h[d as usize]);
        assert_eq!(tr.hvector().unwrap(), h.truncate(d as usize).unwrap());
    }
}

#[test]
fn quotients_shrink_with_the_type() {
    let field = PrimeField::default();
    let mut rng = SeededRng::new(17);
    let p = apolarity_lab::constructions::generic_presentation(field, 3, 5, 3, &mut rng).unwrap();
    let h = p.hvector().unwrap();
    for d in 1..=5u32 {
        let top = h[d as usize];
        let mut previous: Option<HVector> = None;
        for c in 1..=top {
            let q = p.generic_quotient(d, c, &mut rng).unwrap().hvector().unwrap();
            assert_eq!(q.last(), c);
            assert!(q.dominated_by(&h.truncate(d as usize).unwrap()));
            assert!(check_within(&q, &h, d as usize, c).unwrap().pass);
            if let Some(prev) = previous {
                assert!(prev.dominated_by(&q), "d={d} c={c}: {prev} vs {q}");
            }
            previous = Some(q);
        }
    }
}

#[test]
fn generic_quotients_agree_across_seeds() {
    let field = PrimeField::default();
    let instances: Vec<LevelPresentation> = vec![
        apolarity_lab::BlockFamily::new(2, 2, 4).unwrap().presentation(field).unwrap(),
        apolarity_lab::constructions::generic_presentation(field, 3, 5, 2, &mut SeededRng::new(0)).unwrap(),
        apolarity_lab::septic_pair(field, &mut SeededRng::new(0)).unwrap().ambient,
    ];
    for p in &instances {
        let e = p.socle_degree();
        let h = p.hvector().unwrap();
        for d in 1..=e {
            for c in 1..=h[d as usize] {
                let hs: Vec<HVector> = (0..5)
                    .map(|s| p.generic_quotient(d, c, &mut SeededRng::new(100 + s)).unwrap().hvector().unwrap())
                    .collect();
                assert!(hs.windows(2).all(|w| w[0] == w[1]), "d={d} c={c}: {hs:?}");
            }
        }
    }
}

#[test]
fn generic_subspace_spans_a_subspace() {
    let field = PrimeField::default();
    let p = apolarity_lab::BlockFamily::new(3, 2, 4).unwrap().presentation(field).unwrap();
    let space = p.derivative_space(4).unwrap();
    let q = space.generic_subspace(field, 2, &mut SeededRng::new(1)).unwrap();
    for g in q.generators() {
        let row = g.to_coord_row();
        assert!(space.basis().contains(&row));
        assert!(row.iter().any(|x| *x != FieldElem::ZERO));
    }
}

#[test]
fn bareiss_rank_small_cases() {
    let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    };
    assert_eq!(rank_over_q(m(&[&[1, 2], &[2, 4]])), 1);
    assert_eq!(rank_over_q(m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
    assert_eq!(rank_over_q(m(&[&[2, 3], &[4, 5], &[6, 7]])), 2);
    assert_eq!(rank_over_q(m(&[&[0, 0], &[0, 0]])), 0);
}

#[test]
fn lifted_random_forms_match_the_oracle() {
    let field = PrimeField::default();
    for seed in 0..20u64 {
        let mut rng = SeededRng::new(seed);
        let r = 1 + seed as usize % 3;
        let e = 1 + (seed as u32 / 3) % 5;
        let t = 1 + seed as usize % 2;
        if t > apolarity_lab::monomial_count(r, e) {
            continue;
        }
        let p = apolarity_lab::constructions::generic_presentation(field, r, e, t, &mut rng).unwrap();
        let lifted: Vec<_> = p.generators().iter().map(lift).collect();
        assert_eq!(p.hvector().unwrap().entries(), &oracle_hvector(r, e, &lifted)[..]);
    }
}
