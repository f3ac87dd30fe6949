use std::collections::BTreeMap;

use num_integer::Integer;
use pin2_core::borel::manolescu;
use pin2_core::roots::{delta_tilde, reduce, symmetrize};
use pin2_core::seifert::{
    alpha_count, brieskorn_delta, creature_decompose, local_class, seifert_invariants,
    semigroup_genus, semigroup_sieve, DTable, ProjectiveFamily,
};
use pin2_core::Error;
use proptest::prelude::*;

/// Semigroup membership by trying every multiple of the first generators.
fn brute_members(gens: &[u64], bound: u64) -> Vec<u64> {
    let mut reach = vec![false; bound as usize + 1];
    fn go(gens: &[u64], acc: u64, bound: u64, reach: &mut [bool]) {
        match gens.split_first() {
            None => reach[acc as usize] = true,
            Some((&g, rest)) => {
                let mut x = acc;
                while x <= bound {
                    go(rest, x, bound, reach);
                    x += g;
                }
            }
        }
    }
    go(gens, 0, bound, &mut reach);
    (0..=bound).filter(|&i| reach[i as usize]).collect()
}

fn delta_tilde_of(p: u64, q: u64, r: u64) -> i64 {
    delta_tilde(&reduce(&brieskorn_delta(p, q, r).unwrap().sequence()))
        .unwrap()
        .delta_tilde
}

proptest! {
    #[test]
    fn sieve_matches_brute_force(gens in prop::collection::vec(1u64..40, 1..4), bound in 0u64..300) {
        let fast: Vec<u64> = semigroup_sieve(&gens, bound).ones().map(|x| x as u64).collect();
        prop_assert_eq!(fast, brute_members(&gens, bound));
    }

    #[test]
    fn brieskorn_sequences_are_antisymmetric(p in 2u64..8, q in 2u64..12, r in 2u64..30) {
        prop_assume!(p.gcd(&q) == 1 && p.gcd(&r) == 1 && q.gcd(&r) == 1);
        let d = brieskorn_delta(p, q, r).unwrap();
        let n = (p * q * r) as i64 - (p * q + p * r + q * r) as i64;
        let map: BTreeMap<i64, i64> = d.entries.iter().copied().collect();
        for (&x, &v) in &map {
            prop_assert_eq!(map.get(&(n - x)).copied(), Some(-v));
        }
        let red = reduce(&d.sequence());
        if let Some(h) = red.half() {
            prop_assert_eq!(symmetrize(&h), red);
        }
    }
}

#[test]
fn gap_counts_against_enumeration() {
    for p in 2..7u64 {
        for q in 2..15u64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let g = semigroup_genus(p, q);
            let members = brute_members(&[p, q], 2 * g + 2);
            let gaps: Vec<u64> = (0..=2 * g + 2).filter(|x| !members.contains(x)).collect();
            assert_eq!(gaps.len() as u64, g);
            for i in -1..=(2 * g as i64) {
                let expected = gaps.iter().filter(|&&s| s as i64 > i).count() as u64;
                assert_eq!(
                    alpha_count(p, q, i).unwrap(),
                    expected,
                    "⟨{p},{q}⟩ above {i}"
                );
            }
        }
    }
}

#[test]
fn projective_family_delta_tilde() {
    for p in (3..=13).step_by(2) {
        assert_eq!(
            delta_tilde_of(p, 2 * p - 1, 2 * p + 1),
            (p as i64 - 1) / 2,
            "p = {p}"
        );
    }
}

#[test]
fn two_q_family_matches_gap_count() {
    for q in (3..=21u64).step_by(2) {
        let g = semigroup_genus(2, q) as i64;
        let expected = ((q + 1) / 4) as i64;
        assert_eq!(delta_tilde_of(2, q, 2 * q + 1), expected, "q = {q}");
        assert_eq!(alpha_count(2, q, g - 1).unwrap() as i64, expected);
    }
}

#[test]
fn family_invariants_with_tabulated_d() {
    for p in (3..=13u64).step_by(2) {
        let s = seifert_invariants(p, 2 * p - 1, 2 * p + 1, None).unwrap();
        assert_eq!(s.d, p as i64 - 1);
        assert!(s.projective);
        assert_eq!(s.mu_bar, 0.into());
        assert_eq!(s.manolescu.unwrap().beta, 0.into());
    }
}

#[test]
fn creature_decompositions() {
    for p in (3..=11u64).step_by(2) {
        let dec = creature_decompose(p).unwrap();
        let r = &dec.report;
        assert!(r.sinking && r.creature_matches && r.symmetrization_matches && r.support_matches);
    }
    assert_eq!(ProjectiveFamily::new(5).unwrap().k, 100);
}

#[test]
fn local_classes_agree_with_the_closed_forms() {
    let spaces = [
        (2, 3, 5),
        (2, 3, 7),
        (2, 3, 11),
        (2, 3, 13),
        (2, 3, 17),
        (2, 3, 23),
        (3, 5, 7),
        (5, 9, 11),
        (7, 13, 15),
        (2, 5, 11),
        (3, 4, 13),
    ];
    for (p, q, r) in spaces {
        let s = seifert_invariants(p, q, r, None).unwrap();
        let m = manolescu(&local_class(&s).unwrap()).unwrap();
        assert_eq!(Some(m), s.manolescu, "Σ({p},{q},{r})");
        assert!(m.is_ordered() && m.delta_in_range());
    }
}

#[test]
fn user_table_feeds_the_pipeline() {
    let t = DTable::from_json(r#"[{"p":2,"q":5,"r":7,"d":0}]"#).unwrap();
    let s = pin2_core::seifert::seifert_invariants_with(2, 5, 7, None, &t).unwrap();
    assert_eq!(s.d_source, "user table");
    assert!(matches!(
        seifert_invariants(2, 5, 7, None),
        Err(Error::UnknownD { .. })
    ));
    assert!(matches!(
        seifert_invariants(2, 4, 7, Some(0)),
        Err(Error::InvalidInput(_))
    ));
}
