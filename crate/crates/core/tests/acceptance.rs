//! Acceptance criteria, one line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use pin2_core::borel::{abcd, abcd_explicit, manolescu, AbcdValues};
use pin2_core::gcomplex::{make_t, tensor_all, Triple};
use pin2_core::roots::{
    build_root, delta_tilde, is_sinking, reduce, refine, symmetrize, tau, DeltaSequence,
};
use pin2_core::seifert::{
    alpha_count, brieskorn_delta, creature_decompose, seifert_invariants, semigroup_genus,
    SeifertInvariants,
};
use pin2_core::sums::{
    asymptotic_table, check_sum_inequalities, connected_sum_chain, connected_sum_invariants,
    ManolescuSet,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn err(e: pin2_core::Error) -> String {
    e.to_string()
}

fn odd(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).step_by(2)
}

fn c1_family_delta_tilde() -> Outcome {
    let start = Instant::now();
    for p in odd(3, 13) {
        let d = brieskorn_delta(p, 2 * p - 1, 2 * p + 1).map_err(err)?;
        let got = delta_tilde(&reduce(&d.sequence()))
            .map_err(err)?
            .delta_tilde;
        ensure(got == (p as i64 - 1) / 2, || format!("p = {p}: δ̃ = {got}"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("p = 3..13 in {:?}", start.elapsed()))
}

fn c2_family_beta() -> Outcome {
    for p in odd(3, 13) {
        let s = seifert_invariants(p, 2 * p - 1, 2 * p + 1, None).map_err(err)?;
        ensure(s.d == p as i64 - 1, || {
            format!("p = {p}: table gives d = {}", s.d)
        })?;
        let beta = s.manolescu.map(|m| m.beta);
        ensure(
            s.projective && s.mu_bar == 0.into() && beta == Some(0.into()),
            || format!("p = {p}: {s:?}"),
        )?;
    }
    Ok("μ̄ = β = 0, projective, p = 3..13".into())
}

fn c3_creature() -> Outcome {
    let start = Instant::now();
    for p in odd(3, 11) {
        let r = creature_decompose(p).map_err(err)?.report;
        ensure(
            r.sinking && r.creature_matches && r.symmetrization_matches,
            || format!("p = {p}: {r:?}"),
        )?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("p = 3..11 in {:?}", start.elapsed()))
}

fn c4_gap_count() -> Outcome {
    for q in odd(3, 21) {
        let g = semigroup_genus(2, q) as i64;
        let got = alpha_count(2, q, g - 1).map_err(err)?;
        ensure(got == (q + 1) / 4, || format!("q = {q}: {got}"))?;
    }
    Ok("q = 3..21".into())
}

fn c5_multiples_of_2_3_7() -> Outcome {
    let y = seifert_invariants(2, 3, 7, None).map_err(err)?;
    ensure(
        y.manolescu == Some(ManolescuSet::from_integers(1, -1, -1, 0)),
        || format!("{y:?}"),
    )?;
    for k in 1..=10usize {
        let expected = if k % 2 == 0 {
            ManolescuSet::from_integers(0, 0, -2, 0)
        } else {
            ManolescuSet::from_integers(1, -1, -1, 0)
        };
        let parts = vec![y.clone(); k];
        let f = connected_sum_invariants(&parts).map_err(err)?;
        ensure(f == expected, || format!("formula, k = {k}: {f}"))?;
        if k <= 4 {
            let c = connected_sum_chain(&parts).map_err(err)?;
            ensure(c == expected, || format!("chain, k = {k}: {c}"))?;
        }
    }
    Ok("k ≤ 10 by formula, k ≤ 4 by chain".into())
}

/// Multisets of positive integers with sum ≤ `total`, each ascending.
fn multisets(total: usize) -> Vec<Vec<usize>> {
    fn go(min: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for x in min..=left {
            cur.push(x);
            go(x, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, total, &mut Vec::new(), &mut out);
    out
}

fn e(x: i64) -> i64 {
    2 * (x + 1).div_euclid(2)
}

fn c6_tensor_closed_forms() -> Outcome {
    let start = Instant::now();
    let sets = multisets(5);
    for ds in &sets {
        let n = ds.len();
        let s = |k: usize| ds[..k].iter().sum::<usize>() as i64;
        let expected = AbcdValues {
            a: 2 * e(s(n)),
            b: 2 * e(s(n - 1)),
            c: 2 * e(s(n.saturating_sub(2))),
            d: 2 * s(n),
        };
        let z = tensor_all(&ds.iter().map(|&d| make_t(d, 0)).collect::<Vec<_>>());
        let got = abcd(&z).map_err(err)?;
        ensure(got == expected, || {
            format!("{ds:?}: {got:?}, expected {expected:?}")
        })?;
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{} multisets with Σ ≤ 5 in {:?}",
        sets.len(),
        start.elapsed()
    ))
}

fn c7_properties() -> Outcome {
    let start = Instant::now();
    let corpus: Vec<SeifertInvariants> = [
        (3, 5, 7),
        (5, 9, 11),
        (7, 13, 15),
        (2, 3, 7),
        (2, 3, 5),
        (2, 3, 11),
    ]
    .into_iter()
    .map(|(p, q, r)| seifert_invariants(p, q, r, None))
    .collect::<Result<_, _>>()
    .map_err(err)?;
    for a in &corpus {
        for b in &corpus {
            let m12 = connected_sum_invariants(&[a.clone(), b.clone()]).map_err(err)?;
            let r = check_sum_inequalities(&a.manolescu.unwrap(), &b.manolescu.unwrap(), &m12);
            ensure(r.all_hold(), || {
                format!("{:?} # {:?}: {:?}", a.triple, b.triple, r.failures())
            })?;
        }
        asymptotic_table(a, 100).map_err(err)?;
    }
    for d in 1..=3 {
        for t in 0..=2 {
            let z = make_t(d, t);
            let m = manolescu(&Triple::new(z.clone(), 0, 0.into())).map_err(err)?;
            let half_t = Rational64::new(t as i64, 2);
            ensure(m.beta == half_t && m.gamma == half_t, || {
                format!("T_{d}({t}): {m}")
            })?;
            let v = abcd(&z).map_err(err)?;
            ensure(v.d == (2 * d + t) as i64, || {
                format!("d(T_{d}({t})) = {}", v.d)
            })?;
            let e8 = abcd_explicit(&z, z.max_degree() + 8).map_err(err)?;
            let e12 = abcd_explicit(&z, z.max_degree() + 12).map_err(err)?;
            ensure(v == e8 && e8 == e12, || {
                format!("T_{d}({t}): {v:?} / {e8:?} / {e12:?}")
            })?;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "inequalities, boundedness n ≤ 100, T_D(t), truncation in {:?}",
        start.elapsed()
    ))
}

fn random_sequence(rng: &mut StdRng) -> DeltaSequence {
    let len = rng.gen_range(1..=12);
    let mut v = vec![rng.gen_range(1..=5i64)];
    for _ in 1..len {
        let x = rng.gen_range(1..=5i64);
        v.push(if rng.gen_bool(0.5) { x } else { -x });
    }
    DeltaSequence::new(v).expect("nonzero entries, positive start")
}

fn c8_roots() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let d = random_sequence(&mut rng);
        let root = build_root(&d);
        ensure(build_root(&reduce(&d)) == root, || {
            format!("merge changes the root of {d}")
        })?;
        let i = rng.gen_range(0..d.len());
        let v = d.values()[i];
        if v.abs() >= 2 {
            let a = v.signum() * rng.gen_range(1..v.abs());
            let r = refine(&d, i, &[a, v - a]).map_err(err)?;
            ensure(build_root(&r) == root, || {
                format!("refining {d} at {i} changes the root")
            })?;
        }
        let s = symmetrize(&d);
        let t = tau(&s).values;
        let l = d.len();
        ensure((0..=2 * l).all(|k| t[k] == t[2 * l - k]), || {
            format!("τ of {s} is not symmetric")
        })?;
    }
    let spheres = [
        (2, 3, 5),
        (2, 3, 7),
        (2, 3, 11),
        (2, 5, 7),
        (3, 4, 5),
        (3, 5, 7),
        (2, 7, 15),
        (5, 9, 11),
        (7, 13, 15),
        (9, 17, 19),
        (11, 21, 23),
        (13, 25, 27),
    ];
    for (p, q, r) in spheres {
        let d = brieskorn_delta(p, q, r).map_err(err)?;
        let n = (p * q * r) as i64 - (p * q + p * r + q * r) as i64;
        let map: BTreeMap<i64, i64> = d.entries.iter().copied().collect();
        ensure(
            map.iter().all(|(&x, &v)| map.get(&(n - x)) == Some(&-v)),
            || format!("Σ({p},{q},{r}) is not antisymmetric"),
        )?;
    }
    let mut sinking = 0;
    for p in odd(3, 11) {
        let z = creature_decompose(p).map_err(err)?.z_part;
        ensure(is_sinking(&z), || {
            format!("front of p = {p} is not sinking")
        })?;
        let t = tau(&z).values;
        let last = *t.last().unwrap();
        ensure(t[..t.len() - 1].iter().all(|&x| x > last), || {
            format!("front of p = {p} does not bottom out at its end")
        })?;
        sinking += 1;
    }
    Ok(format!(
        "200 random sequences, {} spheres, {sinking} sinking fronts",
        spheres.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        (
            "1 δ̃ of Σ(p,2p−1,2p+1) equals (p−1)/2",
            c1_family_delta_tilde,
        ),
        ("2 d = p−1 gives μ̄ = 0 and β = 0", c2_family_beta),
        ("3 creature decomposition", c3_creature),
        ("4 gap count of ⟨2,q⟩ is ⌊(q+1)/4⌋", c4_gap_count),
        (
            "5 multiples of Σ(2,3,7), both pipelines",
            c5_multiples_of_2_3_7,
        ),
        (
            "6 tensor products of T_D(0) vs closed forms",
            c6_tensor_closed_forms,
        ),
        ("7 property suites", c7_properties),
        ("8 root-engine invariants", c8_roots),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail})");
            }
        }
    }
    println!("acceptance: {} of 8 criteria pass", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
