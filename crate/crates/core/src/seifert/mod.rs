//! Brieskorn spheres Σ(p,q,r): semigroup delta sequences, the d-invariant
//! table, and the Manolescu invariants of negative Seifert spaces.

mod brieskorn;
mod creature;
mod dtable;

pub use brieskorn::{
    alpha_count, brieskorn_delta, semigroup_genus, semigroup_sieve, BrieskornData, MAX_SIEVE_BITS,
};
pub use creature::{
    creature_decompose, creature_delta, CreatureDecomposition, CreatureReport, ProjectiveFamily,
};
pub use dtable::{builtin_d, sorted_triple, DEntry, DLookup, DTable};

use num_rational::Rational64;

use crate::error::{internal, invalid, Error, Result};
use crate::gcomplex::{make_t, Triple};
use crate::roots::{delta_tilde, reduce};
use crate::sums::{round_up_even, ManolescuSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertInvariants {
    pub triple: (u64, u64, u64),
    pub d: i64,
    pub d_source: String,
    pub delta_tilde: i64,
    /// δ̃ − d/2
    pub mu_bar: Rational64,
    /// Present only for projective-type spaces.
    pub manolescu: Option<ManolescuSet>,
    pub projective: bool,
}

/// Invariants of Σ(p,q,r) with d taken from `d` or else the built-in table.
pub fn seifert_invariants(p: u64, q: u64, r: u64, d: Option<i64>) -> Result<SeifertInvariants> {
    seifert_invariants_with(p, q, r, d, &DTable::builtin())
}

pub fn seifert_invariants_with(
    p: u64,
    q: u64,
    r: u64,
    d: Option<i64>,
    table: &DTable,
) -> Result<SeifertInvariants> {
    let delta = brieskorn_delta(p, q, r)?;
    let (d, d_source) = match d {
        Some(d) => (d, "supplied".to_string()),
        None => {
            let hit = table.lookup(p, q, r).ok_or(Error::UnknownD { p, q, r })?;
            (hit.d, hit.source)
        }
    };
    if d % 2 != 0 {
        return invalid(format!(
            "d = {d} is odd; d-invariants of integral homology spheres are even"
        ));
    }
    let dt = delta_tilde(&reduce(&delta.sequence()))?;
    if dt.delta_tilde < 0 {
        return internal(format!("Σ({p},{q},{r}): negative δ̃ = {}", dt.delta_tilde));
    }
    let mu_bar = Rational64::from(dt.delta_tilde) - Rational64::new(d, 2);
    let manolescu = dt.projective.then(|| {
        let beta = -mu_bar;
        ManolescuSet {
            alpha: Rational64::from(round_up_even(dt.delta_tilde)) - mu_bar,
            beta,
            gamma: beta,
            delta: Rational64::new(d, 2),
        }
    });
    Ok(SeifertInvariants {
        triple: (p, q, r),
        d,
        d_source,
        delta_tilde: dt.delta_tilde,
        mu_bar,
        manolescu,
        projective: dt.projective,
    })
}

/// Chain local class (T_δ̃(0), 0, μ̄/2) of a projective-type space.
pub fn local_class(s: &SeifertInvariants) -> Result<Triple> {
    if !s.projective {
        let (p, q, r) = s.triple;
        return Err(Error::Unsupported(format!(
            "Σ({p},{q},{r}) is not of projective type"
        )));
    }
    Ok(Triple::new(
        make_t(s.delta_tilde as usize, 0),
        0,
        s.mu_bar / 2,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::manolescu;

    fn half(n: i64) -> Rational64 {
        Rational64::new(n, 2)
    }

    #[test]
    fn examples() {
        let s = seifert_invariants(2, 3, 7, Some(0)).unwrap();
        assert_eq!((s.delta_tilde, s.mu_bar), (1, half(2)));
        let m = s.manolescu.unwrap();
        assert_eq!(
            (m.alpha, m.beta, m.gamma, m.delta),
            (half(2), half(-2), half(-2), half(0))
        );

        let s = seifert_invariants(5, 9, 11, Some(4)).unwrap();
        assert_eq!((s.delta_tilde, s.mu_bar), (2, half(0)));
        assert_eq!(s.manolescu.unwrap().beta, half(0));

        let s = seifert_invariants(2, 3, 5, Some(2)).unwrap();
        assert_eq!((s.delta_tilde, s.mu_bar), (0, half(-2)));
        let m = s.manolescu.unwrap();
        assert_eq!([m.alpha, m.beta, m.gamma, m.delta], [half(2); 4]);
    }

    #[test]
    fn missing_d_is_reported() {
        assert_eq!(
            seifert_invariants(2, 5, 7, None),
            Err(Error::UnknownD { p: 2, q: 5, r: 7 })
        );
        assert!(matches!(
            seifert_invariants(2, 3, 7, Some(1)),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(seifert_invariants(2, 3, 7, None).unwrap().d, 0);
    }

    #[test]
    fn local_class_matches_the_chain_engine() {
        for (p, q, r) in [
            (2, 3, 7),
            (2, 3, 5),
            (2, 3, 11),
            (3, 5, 7),
            (5, 9, 11),
            (2, 7, 15),
        ] {
            let s = seifert_invariants(p, q, r, None).unwrap();
            let tr = local_class(&s).unwrap();
            assert_eq!(Some(manolescu(&tr).unwrap()), s.manolescu, "Σ({p},{q},{r})");
        }
        let tr = local_class(&seifert_invariants(2, 3, 7, Some(0)).unwrap()).unwrap();
        assert_eq!((tr.m, tr.n), (0, half(1)));
    }
}
