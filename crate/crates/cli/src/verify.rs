//! Self-checks run by `pin2 verify`.

use num_rational::Rational64;
use pin2_core::borel::{abcd, abcd_explicit, AbcdValues, BorelEngine};
use pin2_core::gcomplex::{make_t, tensor_all};
use pin2_core::roots::{build_root, delta_tilde, is_sinking, reduce, refine, tau, DeltaSequence};
use pin2_core::seifert::{
    alpha_count, brieskorn_delta, creature_decompose, seifert_invariants, seifert_invariants_with,
    semigroup_genus, DTable, SeifertInvariants,
};
use pin2_core::sums::{
    asymptotic_table, check_sum_inequalities, connected_sum_chain, connected_sum_invariants,
    round_up_even, ManolescuSet,
};
use pin2_core::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Quick,
    Full,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<(bool, String)>;

fn odd_p(top: u64) -> impl Iterator<Item = u64> {
    (3..=top).step_by(2)
}

fn family_delta_tilde(suite: Suite) -> Outcome {
    let top = if suite == Suite::Quick { 9 } else { 13 };
    let mut bad = Vec::new();
    for p in odd_p(top) {
        let d = brieskorn_delta(p, 2 * p - 1, 2 * p + 1)?;
        let got = delta_tilde(&reduce(&d.sequence()))?.delta_tilde;
        if got != (p as i64 - 1) / 2 {
            bad.push(format!("p={p}: δ̃={got}"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("p = 3..{top}")
        } else {
            bad.join(", ")
        },
    ))
}

fn family_beta(suite: Suite, table: &DTable) -> Outcome {
    let top = if suite == Suite::Quick { 9 } else { 13 };
    let mut bad = Vec::new();
    for p in odd_p(top) {
        let s = seifert_invariants_with(p, 2 * p - 1, 2 * p + 1, None, table)?;
        let beta = s.manolescu.map(|m| m.beta);
        if !(s.projective && s.mu_bar == Rational64::from(0) && beta == Some(Rational64::from(0))) {
            bad.push(format!(
                "p={p}: d={}, μ̄={}, projective={}",
                s.d, s.mu_bar, s.projective
            ));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("p = 3..{top}")
        } else {
            bad.join(", ")
        },
    ))
}

fn creature(suite: Suite) -> Outcome {
    let top = if suite == Suite::Quick { 7 } else { 11 };
    let mut bad = Vec::new();
    for p in odd_p(top) {
        let z = creature_decompose(p)?.z_part;
        if !sinking_minimum_at_end(&z) {
            bad.push(format!("p={p}: front part does not bottom out at its end"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("p = 3..{top}")
        } else {
            bad.join(", ")
        },
    ))
}

fn sinking_minimum_at_end(d: &DeltaSequence) -> bool {
    let t = tau(d).values;
    let last = *t.last().expect("tau starts at 0");
    t[..t.len() - 1].iter().all(|&x| x > last)
}

fn gap_count() -> Outcome {
    let mut bad = Vec::new();
    for q in (3..=21).step_by(2) {
        let g = semigroup_genus(2, q) as i64;
        let got = alpha_count(2, q, g - 1)?;
        if got != (q + 1) / 4 {
            bad.push(format!("q={q}: {got}"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "q = 3..21".into()
        } else {
            bad.join(", ")
        },
    ))
}

fn multiples_of_2_3_7(suite: Suite) -> Outcome {
    let y = seifert_invariants(2, 3, 7, Some(0))?;
    let chain_top = if suite == Suite::Quick { 3 } else { 4 };
    let mut bad = Vec::new();
    for k in 1..=10usize {
        let expected = if k % 2 == 0 {
            ManolescuSet::from_integers(0, 0, -2, 0)
        } else {
            ManolescuSet::from_integers(1, -1, -1, 0)
        };
        let parts = vec![y.clone(); k];
        if connected_sum_invariants(&parts)? != expected {
            bad.push(format!("formula k={k}"));
        }
        if k <= chain_top && connected_sum_chain(&parts)? != expected {
            bad.push(format!("chain k={k}"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("k ≤ 10, chain k ≤ {chain_top}")
        } else {
            bad.join(", ")
        },
    ))
}

/// Multisets of positive integers with sum at most `total`, ascending.
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

fn closed_form(ds: &[usize]) -> AbcdValues {
    let n = ds.len();
    let s = |k: usize| ds[..k].iter().sum::<usize>() as i64;
    AbcdValues {
        a: 2 * round_up_even(s(n)),
        b: 2 * round_up_even(s(n - 1)),
        c: 2 * round_up_even(s(n.saturating_sub(2))),
        d: 2 * s(n),
    }
}

fn tensor_closed_forms(suite: Suite) -> Outcome {
    let top = if suite == Suite::Quick { 4 } else { 5 };
    let mut bad = Vec::new();
    let sets = multisets(top);
    for ds in &sets {
        let z = tensor_all(&ds.iter().map(|&d| make_t(d, 0)).collect::<Vec<_>>());
        let got = abcd(&z)?;
        if got != closed_form(ds) {
            bad.push(format!("{ds:?}: {got:?}"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} multisets, Σ ≤ {top}", sets.len())
        } else {
            bad.join(", ")
        },
    ))
}

fn corpus() -> Result<Vec<SeifertInvariants>> {
    [
        (3, 5, 7),
        (5, 9, 11),
        (7, 13, 15),
        (2, 3, 7),
        (2, 3, 5),
        (2, 3, 11),
    ]
    .into_iter()
    .map(|(p, q, r)| seifert_invariants(p, q, r, None))
    .collect()
}

fn corpus_inequalities() -> Outcome {
    let c = corpus()?;
    let mut bad = Vec::new();
    for a in &c {
        for b in &c {
            let m12 = connected_sum_invariants(&[a.clone(), b.clone()])?;
            let (m1, m2) = (
                a.manolescu.expect("projective"),
                b.manolescu.expect("projective"),
            );
            let r = check_sum_inequalities(&m1, &m2, &m12);
            if !r.all_hold() {
                bad.push(format!(
                    "{:?} # {:?}: {:?}",
                    a.triple,
                    b.triple,
                    r.failures()
                ));
            }
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} pairs", c.len() * c.len())
        } else {
            bad.join("; ")
        },
    ))
}

fn boundedness(suite: Suite) -> Outcome {
    let n = if suite == Suite::Quick { 30 } else { 100 };
    for s in corpus()? {
        asymptotic_table(&s, n)?;
    }
    Ok((true, format!("n ≤ {n}")))
}

fn t_complexes() -> Outcome {
    let mut bad = Vec::new();
    for d in 1..=3 {
        for t in 0..=2 {
            let v = abcd(&make_t(d, t))?;
            if v.b != t as i64 || v.c != t as i64 || v.d != (2 * d + t) as i64 {
                bad.push(format!("T_{d}({t}): {v:?}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "D ≤ 3, t ≤ 2".into()
        } else {
            bad.join(", ")
        },
    ))
}

fn truncation_stability(suite: Suite) -> Outcome {
    let mut cases: Vec<(usize, usize)> = vec![(1, 0), (1, 1), (2, 0), (2, 1)];
    if suite == Suite::Full {
        cases.extend([(3, 0), (2, 2), (3, 1)]);
    }
    let mut bad = Vec::new();
    for (d, t) in cases {
        let z = make_t(d, t);
        let fast = BorelEngine::new(&z).abcd()?;
        let e8 = abcd_explicit(&z, z.max_degree() + 8)?;
        let e12 = abcd_explicit(&z, z.max_degree() + 12)?;
        if fast != e8 || e8 != e12 {
            bad.push(format!("T_{d}({t})"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "margins 8 and 12 agree".into()
        } else {
            bad.join(", ")
        },
    ))
}

/// All sequences with entries in ±1..=±3 of length ≤ `len`, starting positive.
fn small_sequences(len: usize) -> Vec<DeltaSequence> {
    let vals: Vec<i64> = vec![1, 2, 3, -1, -2, -3];
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &frontier {
            for &v in &vals {
                if s.is_empty() && v < 0 {
                    continue;
                }
                let mut t: Vec<i64> = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter()
        .filter_map(|v| DeltaSequence::new(v).ok())
        .collect()
}

fn root_invariance(suite: Suite) -> Outcome {
    let len = if suite == Suite::Quick { 3 } else { 4 };
    let seqs = small_sequences(len);
    let mut bad = Vec::new();
    for d in &seqs {
        let root = build_root(d);
        for (i, &v) in d.values().iter().enumerate() {
            if v.abs() < 2 {
                continue;
            }
            let parts = [v.signum(), v - v.signum()];
            let refined = refine(d, i, &parts)?;
            if build_root(&refined) != root {
                bad.push(format!("{d} at {i}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} sequences", seqs.len())
        } else {
            bad.join(", ")
        },
    ))
}

fn brieskorn_symmetry() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (p, q, r) in [
        (2, 3, 7),
        (2, 3, 11),
        (2, 5, 7),
        (3, 5, 7),
        (2, 7, 15),
        (3, 4, 5),
        (5, 9, 11),
        (7, 13, 15),
    ] {
        let d = brieskorn_delta(p, q, r)?;
        let n: i64 = (p * q * r - p * q - p * r - q * r) as i64;
        let map: std::collections::BTreeMap<i64, i64> = d.entries.iter().copied().collect();
        for (&x, &v) in &map {
            if map.get(&(n - x)) != Some(&-v) {
                bad.push(format!("Σ({p},{q},{r}) at {x}"));
            }
        }
        let red = reduce(&d.sequence());
        let t = tau(&red).values;
        if t.iter().zip(t.iter().rev()).any(|(a, b)| a != b) {
            bad.push(format!("τ of Σ({p},{q},{r}) is not symmetric"));
        }
        if let Some(h) = red.half() {
            if is_sinking(&h) && !sinking_minimum_at_end(&h) {
                bad.push(format!(
                    "half of Σ({p},{q},{r}) is sinking without a strict end minimum"
                ));
            }
        }
        count += 1;
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("{count} spheres")
        } else {
            bad.join(", ")
        },
    ))
}

pub fn run(suite: Suite, table: &DTable) -> Vec<CheckResult> {
    let checks: Vec<(&'static str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (
            "delta-tilde of Σ(p,2p−1,2p+1) is (p−1)/2",
            Box::new(move || family_delta_tilde(suite)),
        ),
        (
            "Σ(p,2p−1,2p+1) with tabulated d has μ̄ = β = 0",
            Box::new(move || family_beta(suite, table)),
        ),
        (
            "creature decomposition of Σ(p,2p−1,2p+1)",
            Box::new(move || creature(suite)),
        ),
        (
            "gap count of ⟨2,q⟩ above g−1 is ⌊(q+1)/4⌋",
            Box::new(gap_count),
        ),
        (
            "k-fold sums of Σ(2,3,7), formula and chain",
            Box::new(move || multiples_of_2_3_7(suite)),
        ),
        (
            "tensor products of T_D(0) match the closed forms",
            Box::new(move || tensor_closed_forms(suite)),
        ),
        (
            "sum inequalities on corpus pairs",
            Box::new(corpus_inequalities),
        ),
        (
            "(α,β,γ) − nδ of multiples stay bounded",
            Box::new(move || boundedness(suite)),
        ),
        (
            "β = γ = t/2 and d = 2D + t for T_D(t)",
            Box::new(t_complexes),
        ),
        (
            "Borel results stable under deeper truncation",
            Box::new(move || truncation_stability(suite)),
        ),
        (
            "graded roots invariant under refinement",
            Box::new(move || root_invariance(suite)),
        ),
        (
            "Brieskorn sequences antisymmetric, τ symmetric",
            Box::new(brieskorn_symmetry),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, f)| match f() {
            Ok((passed, detail)) => CheckResult {
                name,
                passed,
                detail,
            },
            Err(e) => CheckResult {
                name,
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_enumeration() {
        assert_eq!(
            multisets(3),
            vec![
                vec![1],
                vec![1, 1],
                vec![1, 1, 1],
                vec![1, 2],
                vec![2],
                vec![3]
            ]
        );
    }

    #[test]
    fn closed_form_of_two_copies() {
        assert_eq!(
            closed_form(&[1, 1]),
            AbcdValues {
                a: 4,
                b: 4,
                c: 0,
                d: 4
            }
        );
    }
}
