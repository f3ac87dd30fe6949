//! The family Y_p = Σ(p, 2p−1, 2p+1) and the creature splitting of its
//! reduced delta sequence.

use super::brieskorn::{brieskorn_delta, semigroup_sieve};
use crate::error::{internal, invalid, Result};
use crate::roots::{is_sinking, join, symmetrize, DeltaSequence, PositionedDelta};

/// Numerical data of Y_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveFamily {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub n: i64,
    /// p(2p − 1)
    pub r_minus: i64,
    /// p(2p + 1)
    pub r_plus: i64,
    /// (2p − 1)(2p + 1)
    pub w: i64,
    pub xi: i64,
    /// (ξ − 1)(r₋ + r₊), where the creature begins.
    pub k: i64,
}

impl ProjectiveFamily {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return invalid(format!("p = {p} must be odd and at least 3"));
        }
        let pi = p as i64;
        let (q, r) = (2 * pi - 1, 2 * pi + 1);
        let n = pi * q * r - pi * q - pi * r - q * r;
        let xi = (pi - 1) / 2;
        let (r_minus, r_plus) = (pi * q, pi * r);
        Ok(ProjectiveFamily {
            p,
            q: q as u64,
            r: r as u64,
            n,
            r_minus,
            r_plus,
            w: q * r,
            xi,
            k: (xi - 1) * (r_minus + r_plus),
        })
    }
}

/// ⟨ξ,−ξ,…,2,−2,1,−2,1,−2,2,…,−ξ,ξ⟩ for ξ = (p − 1)/2.
pub fn creature_delta(p: u64) -> Result<DeltaSequence> {
    let xi = ProjectiveFamily::new(p)?.xi;
    let mut v = Vec::new();
    for i in (2..=xi).rev() {
        v.extend([i, -i]);
    }
    v.extend([1, -2, 1]);
    for i in 2..=xi {
        v.extend([-i, i]);
    }
    DeltaSequence::new(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreatureReport {
    pub family: ProjectiveFamily,
    /// Reduced sequence of Y_p with positions.
    pub reduced: PositionedDelta,
    pub sinking: bool,
    pub creature_matches: bool,
    pub symmetrization_matches: bool,
    pub support_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreatureDecomposition {
    pub z_part: DeltaSequence,
    pub c_part: DeltaSequence,
    pub report: CreatureReport,
}

/// Splits the first half of the reduced delta sequence of Y_p at K and checks
/// that the front is sinking, the back is the creature, and the two rebuild
/// the whole sequence.
pub fn creature_decompose(p: u64) -> Result<CreatureDecomposition> {
    let fam = ProjectiveFamily::new(p)?;
    let reduced = brieskorn_delta(fam.p, fam.q, fam.r)?.reduce();
    let half = fam.n / 2;
    let z_part = reduced.restrict(0, fam.k - 1).sequence();
    let c_part = reduced.restrict(fam.k, half).sequence();

    let sinking = is_sinking(&z_part);
    let creature_matches = c_part == creature_delta(p)?;
    let symmetrization_matches = symmetrize(&join(&z_part, &c_part)) == reduced.sequence();

    // positive support below 2r₋ + (p − 3)r₊ is the semigroup ⟨r₋, r₊⟩ there,
    // except for (p − 2)r₊
    let top = 2 * fam.r_minus + (fam.p as i64 - 3) * fam.r_plus;
    let sieve = semigroup_sieve(&[fam.r_minus as u64, fam.r_plus as u64], top as u64);
    let skip = (fam.p as i64 - 2) * fam.r_plus;
    let expected: Vec<i64> = sieve
        .ones()
        .map(|x| x as i64)
        .filter(|&x| x != skip)
        .collect();
    let support_matches = reduced.restrict(0, top).positive_support() == expected;

    let report = CreatureReport {
        family: fam,
        reduced,
        sinking,
        creature_matches,
        symmetrization_matches,
        support_matches,
    };
    let failed: Vec<&str> = [
        (sinking, "front part is not sinking"),
        (creature_matches, "back part is not the creature"),
        (
            symmetrization_matches,
            "symmetrized join differs from the reduced sequence",
        ),
        (
            support_matches,
            "positive support differs from the semigroup ⟨r₋, r₊⟩",
        ),
    ]
    .into_iter()
    .filter(|(ok, _)| !ok)
    .map(|(_, msg)| msg)
    .collect();
    if !failed.is_empty() {
        return internal(format!("Y_{p}: {}", failed.join("; ")));
    }
    Ok(CreatureDecomposition {
        z_part,
        c_part,
        report,
    })
}
