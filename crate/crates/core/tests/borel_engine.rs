use num_rational::Rational64;
use pin2_core::borel::{abc, abcd, abcd_explicit, d_invariant_chain, manolescu, AbcdValues};
use pin2_core::gcomplex::{
    make_fixed_complex, make_t, suspend_h, suspend_rtilde, tensor, tensor_all, validate,
    SwfComplex, Triple,
};
use pin2_core::sums::{check_sum_inequalities, ManolescuSet};

fn v(a: i64, b: i64, c: i64, d: i64) -> AbcdValues {
    AbcdValues { a, b, c, d }
}

fn t_family() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for d in 0..=3 {
        for t in 0..=2 {
            out.push((d, t));
        }
    }
    out
}

#[test]
fn fixed_complexes_have_nothing_to_kill() {
    for t in 0..4 {
        let z = make_fixed_complex(t);
        let t = t as i64;
        assert_eq!(abc(&z).unwrap(), (t, t, t));
        assert_eq!(d_invariant_chain(&z).unwrap(), t);
    }
}

#[test]
fn small_examples() {
    assert_eq!(abc(&make_t(1, 0)).unwrap(), (4, 0, 0));
    assert_eq!(
        abc(&tensor(&make_t(1, 0), &make_t(1, 0))).unwrap(),
        (4, 4, 0)
    );
    for d in 1..=3 {
        assert_eq!(d_invariant_chain(&make_t(d, 0)).unwrap(), 2 * d as i64);
    }
    assert_eq!(
        d_invariant_chain(&tensor(&make_t(1, 0), &make_t(2, 0))).unwrap(),
        6
    );
}

#[test]
fn triple_examples() {
    let m = manolescu(&Triple::new(make_t(1, 0), 0, Rational64::new(1, 2))).unwrap();
    assert_eq!(m, ManolescuSet::from_integers(1, -1, -1, 0));
    let m = manolescu(&Triple::new(make_fixed_complex(0), 0, Rational64::from(0))).unwrap();
    assert_eq!(m, ManolescuSet::from_integers(0, 0, 0, 0));
    let m = manolescu(&Triple::new(make_t(2, 0), 0, Rational64::from(0))).unwrap();
    assert_eq!(m, ManolescuSet::from_integers(2, 0, 0, 2));
}

#[test]
fn products_and_suspensions_against_the_explicit_route() {
    let t1 = make_t(1, 0);
    let cases: Vec<(SwfComplex, AbcdValues)> = vec![
        (tensor(&t1, &t1), v(4, 4, 0, 4)),
        (tensor(&t1, &make_t(2, 0)), v(8, 4, 0, 6)),
        (tensor(&make_t(2, 1), &t1), v(9, 5, 1, 7)),
        (suspend_h(&t1), v(8, 4, 4, 6)),
        (suspend_rtilde(&t1), v(5, 1, 1, 3)),
    ];
    for (z, expected) in cases {
        assert!(validate(&z).passed(), "{:?}", validate(&z).failures());
        assert_eq!(abcd(&z).unwrap(), expected);
        assert_eq!(abcd_explicit(&z, z.max_degree() + 8).unwrap(), expected);
    }
}

#[test]
fn ordering_and_congruences() {
    let mut zs: Vec<SwfComplex> = t_family().into_iter().map(|(d, t)| make_t(d, t)).collect();
    zs.push(tensor(&make_t(1, 1), &make_t(2, 0)));
    zs.push(suspend_h(&make_t(2, 1)));
    for z in &zs {
        let x = abcd(z).unwrap();
        let t = z.level() as i64;
        assert!(
            x.a >= x.b && x.b >= x.c && x.a >= x.d && x.d >= x.c,
            "{x:?}"
        );
        assert_eq!(
            [(x.a - t) % 4, (x.b - t) % 4, (x.c - t) % 4, (x.d - t) % 2],
            [0; 4]
        );
    }
}

#[test]
fn t_complexes_have_level_beta_and_d() {
    for (d, t) in t_family() {
        let x = abcd(&make_t(d, t)).unwrap();
        assert_eq!(
            (x.b, x.c, x.d),
            (t as i64, t as i64, (2 * d + t) as i64),
            "T_{d}({t})"
        );
    }
}

#[test]
fn rtilde_suspensions_shift_the_level() {
    for (d, t) in [(1, 0), (2, 0), (1, 1), (3, 0)] {
        let mut z = make_t(d, 0);
        for _ in 0..t {
            z = suspend_rtilde(&z);
        }
        assert_eq!(abcd(&z).unwrap(), abcd(&make_t(d, t)).unwrap());
    }
}

#[test]
fn suspensions_are_invisible_to_triples() {
    for (d, t) in [(1, 0), (2, 1), (0, 2)] {
        let z = make_t(d, t);
        let base = manolescu(&Triple::new(z.clone(), 1, Rational64::new(1, 2))).unwrap();
        let r = manolescu(&Triple::new(suspend_rtilde(&z), 2, Rational64::new(1, 2))).unwrap();
        let h = manolescu(&Triple::new(suspend_h(&z), 1, Rational64::new(3, 2))).unwrap();
        assert_eq!(base, r);
        assert_eq!(base, h);
    }
}

#[test]
fn tensor_is_associative_on_invariants() {
    let (a, b, c) = (make_t(1, 0), make_t(2, 1), make_t(1, 1));
    let left = tensor(&tensor(&a, &b), &c);
    let right = tensor(&a, &tensor(&b, &c));
    assert_eq!(abcd(&left).unwrap(), abcd(&right).unwrap());
    assert_eq!(abcd(&left).unwrap(), abcd(&tensor_all(&[c, b, a])).unwrap());
}

#[test]
fn truncation_margin_is_enough() {
    let zs = [
        make_t(1, 0),
        make_t(2, 1),
        make_t(3, 0),
        suspend_h(&make_t(1, 0)),
        tensor(&make_t(1, 0), &make_t(1, 1)),
    ];
    for z in &zs {
        let e8 = abcd_explicit(z, z.max_degree() + 8).unwrap();
        let e12 = abcd_explicit(z, z.max_degree() + 12).unwrap();
        assert_eq!(e8, e12);
        assert_eq!(abcd(z).unwrap(), e8);
    }
}

#[test]
fn sub_and_superadditivity_on_t_pairs() {
    let fam: Vec<(usize, usize)> = vec![(0, 0), (1, 0), (2, 0), (1, 1), (2, 1), (3, 0), (1, 2)];
    let triple = |z: SwfComplex| manolescu(&Triple::new(z, 0, Rational64::from(0))).unwrap();
    for &(d1, t1) in &fam {
        for &(d2, t2) in &fam {
            let (z1, z2) = (make_t(d1, t1), make_t(d2, t2));
            let m12 = triple(tensor(&z1, &z2));
            let (m1, m2) = (triple(z1), triple(z2));
            let report = check_sum_inequalities(&m1, &m2, &m12);
            assert!(
                report.all_hold(),
                "T_{d1}({t1}) ⊗ T_{d2}({t2}): {:?}",
                report.failures()
            );
            assert_eq!(m12.delta, m1.delta + m2.delta);
        }
    }
}

#[test]
fn quaternion_suspension_of_a_point_is_a_four_sphere() {
    use pin2_core::borel::reduced::ZRetraction;
    let z = suspend_h(&make_fixed_complex(0));
    assert_eq!(ZRetraction::new(&z).betti_numbers(), [0, 0, 0, 0, 1]);
    let z = suspend_rtilde(&make_fixed_complex(0));
    assert_eq!(ZRetraction::new(&z).betti_numbers(), [0, 1]);
}
