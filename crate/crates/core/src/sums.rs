//! Closed forms for connected sums of negative Seifert spaces of projective
//! type, together with the inequality, splitting and boundedness checks that
//! are evaluated on them.

use num_rational::Rational64;

use crate::borel::manolescu;
use crate::error::{internal, invalid, Error, Result};
use crate::gcomplex::Triple;
use crate::seifert::{local_class, SeifertInvariants};

/// (α, β, γ, δ), exact half-integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ManolescuSet {
    pub alpha: Rational64,
    pub beta: Rational64,
    pub gamma: Rational64,
    pub delta: Rational64,
}

impl ManolescuSet {
    pub fn from_halves(a: i64, b: i64, c: i64, d: i64) -> Self {
        let h = |x| Rational64::new(x, 2);
        ManolescuSet {
            alpha: h(a),
            beta: h(b),
            gamma: h(c),
            delta: h(d),
        }
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Self {
        ManolescuSet {
            alpha: a.into(),
            beta: b.into(),
            gamma: c.into(),
            delta: d.into(),
        }
    }

    pub fn as_array(&self) -> [Rational64; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    /// α ≥ β ≥ γ
    pub fn is_ordered(&self) -> bool {
        self.alpha >= self.beta && self.beta >= self.gamma
    }

    /// γ ≤ δ ≤ α
    pub fn delta_in_range(&self) -> bool {
        self.gamma <= self.delta && self.delta <= self.alpha
    }
}

impl std::fmt::Display for ManolescuSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(α, β, γ, δ) = ({}, {}, {}, {})",
            self.alpha, self.beta, self.gamma, self.delta
        )
    }
}

/// E(x) = 2⌊(x + 1)/2⌋.
pub fn round_up_even(x: i64) -> i64 {
    2 * (x + 1).div_euclid(2)
}

fn require_projective(parts: &[SeifertInvariants]) -> Result<()> {
    if parts.is_empty() {
        return invalid("a connected sum needs at least one summand");
    }
    for s in parts {
        if !s.projective {
            let (p, q, r) = s.triple;
            return Err(Error::Unsupported(format!(
                "Σ({p},{q},{r}) is not of projective type"
            )));
        }
    }
    Ok(())
}

/// Closed form for Y₁ # … # Yₙ. With δ̃ sorted ascending and Sₖ the sum of
/// the first k of them: α = E(Sₙ) − Σμ̄, β = E(Sₙ₋₁) − Σμ̄, γ = E(Sₙ₋₂) − Σμ̄,
/// δ = Σd/2.
pub fn connected_sum_invariants(parts: &[SeifertInvariants]) -> Result<ManolescuSet> {
    require_projective(parts)?;
    let mut dt: Vec<i64> = parts.iter().map(|s| s.delta_tilde).collect();
    dt.sort_unstable();
    let n = dt.len();
    let prefix = |k: usize| -> i64 { dt[..k].iter().sum() };
    let mu: Rational64 = parts.iter().map(|s| s.mu_bar).sum();
    let e = |k: usize| Rational64::from(round_up_even(prefix(k))) - mu;
    Ok(ManolescuSet {
        alpha: e(n),
        beta: e(n.saturating_sub(1)),
        gamma: e(n.saturating_sub(2)),
        delta: Rational64::new(parts.iter().map(|s| s.d).sum(), 2),
    })
}

/// Total δ̃ allowed by [`connected_sum_chain`].
pub const DEFAULT_CHAIN_COST: i64 = 6;

/// Invariants of the sum computed by tensoring the local classes and running
/// the Borel engine.
pub fn connected_sum_chain(parts: &[SeifertInvariants]) -> Result<ManolescuSet> {
    connected_sum_chain_with_limit(parts, DEFAULT_CHAIN_COST)
}

pub fn connected_sum_chain_with_limit(
    parts: &[SeifertInvariants],
    limit: i64,
) -> Result<ManolescuSet> {
    require_projective(parts)?;
    let cost: i64 = parts.iter().map(|s| s.delta_tilde).sum();
    if cost > limit {
        return Err(Error::Resource(format!(
            "total δ̃ = {cost} exceeds the chain-engine limit {limit}"
        )));
    }
    let mut acc: Option<Triple> = None;
    for s in parts {
        let t = local_class(s)?;
        acc = Some(match acc {
            None => t,
            Some(a) => a.tensor(&t),
        });
    }
    manolescu(&acc.expect("nonempty"))
}

/// Invariants of the orientation reversal: (−γ, −β, −α, −δ).
pub fn dualize(m: &ManolescuSet) -> ManolescuSet {
    ManolescuSet {
        alpha: -m.gamma,
        beta: -m.beta,
        gamma: -m.alpha,
        delta: -m.delta,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub lhs: Rational64,
    pub rhs: Rational64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub checks: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name)
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&InequalityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Sub- and superadditivity of α, β, γ for Y₁, Y₂ and Y₁ # Y₂, and the
/// ordering α ≥ β ≥ γ, γ ≤ δ ≤ α on each of the three sets.
pub fn check_sum_inequalities(
    m1: &ManolescuSet,
    m2: &ManolescuSet,
    m12: &ManolescuSet,
) -> InequalityReport {
    let mut checks = Vec::new();
    let mut le = |name: &'static str, lhs: Rational64, rhs: Rational64| {
        checks.push(InequalityCheck {
            name,
            lhs,
            rhs,
            holds: lhs <= rhs,
        });
    };
    le("alpha1 + gamma2 <= alpha12", m1.alpha + m2.gamma, m12.alpha);
    le("alpha12 <= alpha1 + alpha2", m12.alpha, m1.alpha + m2.alpha);
    le("gamma1 + gamma2 <= gamma12", m1.gamma + m2.gamma, m12.gamma);
    le("gamma12 <= alpha1 + gamma2", m12.gamma, m1.alpha + m2.gamma);
    le("gamma1 + beta2 <= beta12", m1.gamma + m2.beta, m12.beta);
    le("beta12 <= alpha1 + beta2", m12.beta, m1.alpha + m2.beta);
    le("gamma12 <= beta1 + beta2", m12.gamma, m1.beta + m2.beta);
    le("beta1 + beta2 <= alpha12", m1.beta + m2.beta, m12.alpha);
    for (m, tag) in [
        (
            m1,
            [
                "beta1 <= alpha1",
                "gamma1 <= beta1",
                "gamma1 <= delta1",
                "delta1 <= alpha1",
            ],
        ),
        (
            m2,
            [
                "beta2 <= alpha2",
                "gamma2 <= beta2",
                "gamma2 <= delta2",
                "delta2 <= alpha2",
            ],
        ),
        (
            m12,
            [
                "beta12 <= alpha12",
                "gamma12 <= beta12",
                "gamma12 <= delta12",
                "delta12 <= alpha12",
            ],
        ),
    ] {
        le(tag[0], m.beta, m.alpha);
        le(tag[1], m.gamma, m.beta);
        le(tag[2], m.gamma, m.delta);
        le(tag[3], m.delta, m.alpha);
    }
    InequalityReport { checks }
}

/// α = β = γ
pub fn h_split(m: &ManolescuSet) -> bool {
    m.alpha == m.beta && m.beta == m.gamma
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonSeifertReport {
    /// At least two summands with δ̃ ≥ 2.
    pub count_rule: bool,
    /// β − γ ≥ 2 for the sum.
    pub beta_gap: bool,
    /// α − β ≥ 2 for the sum.
    pub alpha_gap: bool,
}

pub fn non_seifert_report(parts: &[SeifertInvariants]) -> Result<NonSeifertReport> {
    let m = connected_sum_invariants(parts)?;
    let two = Rational64::from(2);
    Ok(NonSeifertReport {
        count_rule: parts.iter().filter(|s| s.delta_tilde >= 2).count() >= 2,
        beta_gap: m.beta - m.gamma >= two,
        alpha_gap: m.alpha - m.beta >= two,
    })
}

/// Whether the sum is certified not homology cobordant to any Seifert
/// fibered space, by the δ̃-count rule.
pub fn non_seifert_witness(parts: &[SeifertInvariants]) -> Result<bool> {
    Ok(non_seifert_report(parts)?.count_rule)
}

/// The positive δ̃ values, sorted.
pub fn psi_coordinates(parts: &[SeifertInvariants]) -> Result<Vec<i64>> {
    require_projective(parts)?;
    let mut out: Vec<i64> = parts
        .iter()
        .map(|s| s.delta_tilde)
        .filter(|&d| d > 0)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Largest δ̃ among the summands of Y, read off from the invariants of Y and
/// of Y # Σ(2,3,11).
pub fn recover_max_delta_tilde(m_y: &ManolescuSet, m_y_plus: &ManolescuSet) -> Result<i64> {
    if h_split(m_y) {
        return Ok(0);
    }
    let total = (m_y.alpha - m_y.beta) + (m_y_plus.alpha - m_y_plus.beta);
    let half = total / 2;
    if !half.is_integer() {
        return invalid(format!(
            "invariant differences sum to {total}, which is not even"
        ));
    }
    Ok(half.to_integer())
}

fn abs(x: Rational64) -> Rational64 {
    if x < Rational64::from(0) {
        -x
    } else {
        x
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsymptoticRow {
    pub n: usize,
    pub alpha: Rational64,
    pub beta: Rational64,
    pub gamma: Rational64,
}

/// Rows (α, β, γ)(nY) − n·δ(Y) for n = 1..=n_max.
pub fn asymptotic_table(part: &SeifertInvariants, n_max: usize) -> Result<Vec<AsymptoticRow>> {
    require_projective(std::slice::from_ref(part))?;
    let bound = Rational64::from(2 * part.delta_tilde + 2) + abs(part.mu_bar) * 2;
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let m = connected_sum_invariants(&vec![part.clone(); n])?;
        let shift = m.delta;
        let row = AsymptoticRow {
            n,
            alpha: m.alpha - shift,
            beta: m.beta - shift,
            gamma: m.gamma - shift,
        };
        if [row.alpha, row.beta, row.gamma]
            .iter()
            .any(|&x| abs(x) > bound)
        {
            return internal(format!("row {n} leaves the bound {bound}: {row:?}"));
        }
        rows.push(row);
    }
    Ok(rows)
}
