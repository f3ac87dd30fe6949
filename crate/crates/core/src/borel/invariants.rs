use num_rational::Rational64;

use super::eg::{reduce_term, BorelCell, Chain, Flavor};
use super::explicit::{g_borel_complex, s1_borel_complex, BorelChainComplex};
use super::reduced::{ReducedBorel, ZRetraction};
use crate::error::{internal, Result};
use crate::gcomplex::{GAlgebraElement, SwfComplex, Triple};
use crate::sums::ManolescuSet;

/// Minimal degrees of nontorsion Borel classes in the residues t, t+1, t+2
/// (mod 4) and of U-nontorsion S¹-Borel classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AbcdValues {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

/// Boundary membership in a Borel complex of fixed flavor.
pub trait BoundaryOracle {
    fn is_boundary(&mut self, deg: usize, x: &Chain) -> Result<bool>;
}

impl BoundaryOracle for ReducedBorel<'_> {
    fn is_boundary(&mut self, deg: usize, x: &Chain) -> Result<bool> {
        ReducedBorel::is_boundary(self, deg, x)
    }
}

impl BoundaryOracle for BorelChainComplex {
    fn is_boundary(&mut self, deg: usize, x: &Chain) -> Result<bool> {
        BorelChainComplex::is_boundary(self, deg, x)
    }
}

fn cell_times_f(z: &SwfComplex, index: usize) -> Chain {
    [(BorelCell::e(index), z.fundamental().clone())]
        .into_iter()
        .collect()
}

/// k-th generator of H(BS¹) tensored with f: e_{4i} ⊗ f for k = 2i and
/// j((1+j)e_{4i+2} + s e_{4i+1}) ⊗ f for k = 2i + 1.
fn s1_class(z: &SwfComplex, k: usize) -> Chain {
    let i = k / 2;
    if k.is_multiple_of(2) {
        return cell_times_f(z, 4 * i);
    }
    let j = GAlgebraElement::j();
    let f = z.fundamental();
    let mut out = Chain::new();
    reduce_term(
        z,
        Flavor::S1,
        j * (GAlgebraElement::ONE + j),
        4 * i + 2,
        f,
        &mut out,
    );
    reduce_term(
        z,
        Flavor::S1,
        j * GAlgebraElement::s(),
        4 * i + 1,
        f,
        &mut out,
    );
    out
}

fn search_limit(z: &SwfComplex) -> usize {
    z.max_degree() + 8
}

/// First k ≥ 0 whose test class is not a boundary.
fn first_failure(
    z: &SwfComplex,
    oracle: &mut dyn BoundaryOracle,
    class: impl Fn(usize) -> (usize, Chain),
    what: &str,
) -> Result<usize> {
    let limit = search_limit(z);
    for k in 0.. {
        let (deg, chain) = class(k);
        if deg + 1 > limit {
            return internal(format!("search for {what} ran past the truncation {limit}"));
        }
        if chain.is_empty() || !oracle.is_boundary(deg, &chain)? {
            return Ok(k);
        }
    }
    unreachable!()
}

/// a, b, c by first-failure searches on e₄ₖ⊗f, e₄ₖ₊₁⊗f, e₄ₖ₊₂⊗f in the
/// 𝒢-Borel complex.
pub fn abc_with(z: &SwfComplex, oracle: &mut dyn BoundaryOracle) -> Result<(i64, i64, i64)> {
    let t = z.level();
    let mut out = [0i64; 3];
    for (r, slot) in out.iter_mut().enumerate() {
        let k = first_failure(
            z,
            oracle,
            |k| (4 * k + r + t, cell_times_f(z, 4 * k + r)),
            ["a", "b", "c"][r],
        )?;
        *slot = (4 * k + t) as i64;
    }
    Ok((out[0], out[1], out[2]))
}

/// d by a first-failure search along the generators of H(BS¹) ⊗ f in the
/// S¹-Borel complex.
pub fn d_with(z: &SwfComplex, oracle: &mut dyn BoundaryOracle) -> Result<i64> {
    let t = z.level();
    let k = first_failure(z, oracle, |k| (2 * k + t, s1_class(z, k)), "d")?;
    Ok((2 * k + t) as i64)
}

/// Precomputed retraction of a complex, reusable across all four searches.
pub struct BorelEngine<'a> {
    z: &'a SwfComplex,
    ret: ZRetraction,
}

impl<'a> BorelEngine<'a> {
    pub fn new(z: &'a SwfComplex) -> Self {
        BorelEngine {
            z,
            ret: ZRetraction::new(z),
        }
    }

    pub fn retraction(&self) -> &ZRetraction {
        &self.ret
    }

    pub fn abc(&self) -> Result<(i64, i64, i64)> {
        abc_with(self.z, &mut ReducedBorel::new(self.z, &self.ret, Flavor::G))
    }

    pub fn d(&self) -> Result<i64> {
        d_with(
            self.z,
            &mut ReducedBorel::new(self.z, &self.ret, Flavor::S1),
        )
    }

    pub fn abcd(&self) -> Result<AbcdValues> {
        let (a, b, c) = self.abc()?;
        let d = self.d()?;
        let v = AbcdValues { a, b, c, d };
        check_abcd(self.z, v)?;
        Ok(v)
    }
}

fn check_abcd(z: &SwfComplex, v: AbcdValues) -> Result<()> {
    let t = z.level() as i64;
    let ok = (v.a - t) % 4 == 0
        && (v.b - t) % 4 == 0
        && (v.c - t) % 4 == 0
        && (v.d - t) % 2 == 0
        && v.a >= v.b
        && v.b >= v.c
        && v.a >= v.d
        && v.d >= v.c;
    if ok {
        Ok(())
    } else {
        internal(format!("inconsistent invariants {v:?} at level {t}"))
    }
}

pub fn abc(z: &SwfComplex) -> Result<(i64, i64, i64)> {
    BorelEngine::new(z).abc()
}

pub fn d_invariant_chain(z: &SwfComplex) -> Result<i64> {
    BorelEngine::new(z).d()
}

pub fn abcd(z: &SwfComplex) -> Result<AbcdValues> {
    BorelEngine::new(z).abcd()
}

/// a, b, c, d computed on fully materialized Borel complexes truncated at
/// `trunc`. Slow; intended for small complexes.
pub fn abcd_explicit(z: &SwfComplex, trunc: usize) -> Result<AbcdValues> {
    let (a, b, c) = abc_with(z, &mut g_borel_complex(z, trunc)?)?;
    let d = d_with(z, &mut s1_borel_complex(z, trunc)?)?;
    let v = AbcdValues { a, b, c, d };
    check_abcd(z, v)?;
    Ok(v)
}

/// (α, β, γ, δ) = (a, b, c, d)/2 − m/2 − 2n.
pub fn from_abcd(v: AbcdValues, m: i64, n: Rational64) -> ManolescuSet {
    let shift = Rational64::new(m, 2) + n * 2;
    let half = |x: i64| Rational64::new(x, 2) - shift;
    ManolescuSet {
        alpha: half(v.a),
        beta: half(v.b),
        gamma: half(v.c),
        delta: half(v.d),
    }
}

pub fn manolescu(tr: &Triple) -> Result<ManolescuSet> {
    Ok(from_abcd(abcd(&tr.complex)?, tr.m, tr.n))
}
