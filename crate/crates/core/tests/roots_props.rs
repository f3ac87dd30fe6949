use std::collections::BTreeMap;

use pin2_core::roots::{
    build_root, delta_tilde, is_sinking, reduce, refine, symmetrize, tau, u_module, DeltaSequence,
};
use proptest::prelude::*;

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![1i64..=4, -4i64..=-1]
}

fn sequence() -> impl Strategy<Value = DeltaSequence> {
    (1i64..=4, prop::collection::vec(nonzero(), 0..12)).prop_map(|(first, rest)| {
        let mut v = vec![first];
        v.extend(rest);
        DeltaSequence::new(v).unwrap()
    })
}

/// Sinking sequences built directly from the definition: pairs (a, −b) with
/// a ≤ b, the last one strict.
fn sinking() -> impl Strategy<Value = DeltaSequence> {
    prop::collection::vec((1i64..=4, 0i64..=3), 1..6).prop_map(|pairs| {
        let n = pairs.len();
        let mut v = Vec::new();
        for (k, (a, extra)) in pairs.into_iter().enumerate() {
            let b = a + extra + i64::from(k + 1 == n && extra == 0);
            v.extend([a, -b]);
        }
        DeltaSequence::new(v).unwrap()
    })
}

/// Vertices per χ counted straight from τ: the components of {τ ≤ h}
/// restricted to level h, for every h between min τ and max τ.
fn vertex_counts_oracle(t: &[i64]) -> BTreeMap<i64, usize> {
    let (lo, hi) = (*t.iter().min().unwrap(), *t.iter().max().unwrap());
    let mut out = BTreeMap::new();
    for h in lo..=hi {
        let mut count = 0;
        let mut inside = false;
        for &x in t {
            if x <= h && !inside {
                count += 1;
            }
            inside = x <= h;
        }
        out.insert(h, count);
    }
    out
}

proptest! {
    #[test]
    fn refinement_leaves_the_root_unchanged(d in sequence(), pick in 0usize..64, cut in 1i64..4) {
        let i = pick % d.len();
        let v = d.values()[i];
        prop_assume!(v.abs() >= 2);
        let first = v.signum() * cut.min(v.abs() - 1);
        let refined = refine(&d, i, &[first, v - first]).unwrap();
        prop_assert_eq!(build_root(&refined), build_root(&d));
    }

    #[test]
    fn reduction_leaves_the_root_unchanged(d in sequence()) {
        prop_assert_eq!(build_root(&reduce(&d)), build_root(&d));
        prop_assert!(reduce(&d).is_reduced());
    }

    #[test]
    fn symmetrized_tau_is_a_palindrome(d in sequence()) {
        let s = symmetrize(&d);
        let t = tau(&s).values;
        let l = d.len();
        for k in 0..=2 * l {
            prop_assert_eq!(t[k], t[2 * l - k]);
        }
        let dt = delta_tilde(&s).unwrap();
        prop_assert!(dt.delta_tilde >= 0);
    }

    #[test]
    fn sinking_sequences_bottom_out_at_the_end(d in sinking()) {
        prop_assert!(is_sinking(&d));
        let t = tau(&d).values;
        let last = *t.last().unwrap();
        prop_assert!(t[..t.len() - 1].iter().all(|&x| x > last));
    }

    #[test]
    fn module_rank_matches_vertex_counts(d in sequence()) {
        let root = build_root(&d);
        let counts = vertex_counts_oracle(&tau(&d).values);
        prop_assert_eq!(&root.vertex_counts(), &counts);
        let top = *counts.keys().last().unwrap();
        let ranks = u_module(&root).rank_by_grading(2 * top);
        for (chi, n) in counts {
            prop_assert_eq!(ranks.get(&(2 * chi)).copied().unwrap_or(0), n);
        }
    }
}
