use num_integer::Integer;

use crate::error::{internal, invalid, Error, Result};
use crate::f2linalg::BitVec;
use crate::roots::PositionedDelta;

/// Largest sieve handled, in bits (32 MiB).
pub const MAX_SIEVE_BITS: u64 = 1 << 28;

/// Membership of 0..=bound in the additive semigroup on `generators`.
pub fn semigroup_sieve(generators: &[u64], bound: u64) -> BitVec {
    let n = bound as usize + 1;
    let mut bits = BitVec::zeros(n);
    bits.set(0, true);
    let gens: Vec<usize> = generators
        .iter()
        .map(|&g| g as usize)
        .filter(|&g| g > 0)
        .collect();
    for i in 1..n {
        if gens.iter().any(|&g| g <= i && bits.get(i - g)) {
            bits.set(i, true);
        }
    }
    bits
}

/// A Brieskorn sphere Σ(p,q,r) with its semigroup data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BrieskornData {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    /// N = pqr − pq − pr − qr.
    pub n: i64,
}

impl BrieskornData {
    pub fn new(p: u64, q: u64, r: u64) -> Result<Self> {
        if p < 2 || q < 2 || r < 2 {
            return invalid(format!("Σ({p},{q},{r}): exponents must be at least 2"));
        }
        if p.gcd(&q) != 1 || p.gcd(&r) != 1 || q.gcd(&r) != 1 {
            return invalid(format!(
                "Σ({p},{q},{r}): exponents must be pairwise coprime"
            ));
        }
        let (pp, qq, rr) = (p as i128, q as i128, r as i128);
        let n = pp * qq * rr - pp * qq - pp * rr - qq * rr;
        if n + 1 > MAX_SIEVE_BITS as i128 {
            return Err(Error::Resource(format!(
                "Σ({p},{q},{r}) needs a sieve of {} bits, above the limit of {MAX_SIEVE_BITS}",
                n + 1
            )));
        }
        Ok(BrieskornData {
            p,
            q,
            r,
            n: n as i64,
        })
    }

    pub fn generators(&self) -> [u64; 3] {
        [self.p * self.q, self.p * self.r, self.q * self.r]
    }
}

/// Expanded delta sequence of Σ(p,q,r): +1 on the semigroup points s ≤ N,
/// −1 on their reflections N − s. Empty when N < 0.
pub fn brieskorn_delta(p: u64, q: u64, r: u64) -> Result<PositionedDelta> {
    let data = BrieskornData::new(p, q, r)?;
    if data.n < 0 {
        return Ok(PositionedDelta::default());
    }
    let n = data.n as u64;
    let sieve = semigroup_sieve(&data.generators(), n);
    let mut entries = Vec::new();
    for x in 0..=n {
        let s = sieve.get(x as usize);
        let q = sieve.get((n - x) as usize);
        match (s, q) {
            (true, true) => return internal(format!("Σ({p},{q},{r}): {x} lies in both S and Q")),
            (true, false) => entries.push((x as i64, 1)),
            (false, true) => entries.push((x as i64, -1)),
            (false, false) => {}
        }
    }
    Ok(PositionedDelta { entries })
}

/// g = (p − 1)(q − 1)/2, the number of gaps of the semigroup ⟨p, q⟩.
pub fn semigroup_genus(p: u64, q: u64) -> u64 {
    (p - 1) * (q - 1) / 2
}

/// αᵢ: the number of gaps of ⟨p, q⟩ larger than i.
pub fn alpha_count(p: u64, q: u64, i: i64) -> Result<u64> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return invalid(format!("⟨{p},{q}⟩ needs coprime positive generators"));
    }
    if i < -1 {
        return invalid(format!("index {i} is below −1"));
    }
    // every integer ≥ 2g lies in the semigroup
    let bound = 2 * semigroup_genus(p, q);
    let sieve = semigroup_sieve(&[p, q], bound);
    Ok((0..=bound)
        .filter(|&s| s as i64 > i && !sieve.get(s as usize))
        .count() as u64)
}
