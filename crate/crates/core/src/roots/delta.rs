use crate::error::{invalid, Result};

/// A finite sequence of nonzero integers, positive on its first entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DeltaSequence {
    values: Vec<i64>,
}

impl DeltaSequence {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.contains(&0) {
            return invalid("delta sequences take nonzero values");
        }
        if values.first().is_some_and(|&v| v < 0) {
            return invalid("a delta sequence must start with a positive value");
        }
        Ok(DeltaSequence { values })
    }

    pub fn empty() -> Self {
        DeltaSequence::default()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// No two consecutive entries of the same sign.
    pub fn is_reduced(&self) -> bool {
        self.values.windows(2).all(|w| (w[0] > 0) != (w[1] > 0))
    }

    /// Whether the sequence is ⟨k₁..kₙ, −kₙ..−k₁⟩ for some k.
    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        n.is_multiple_of(2) && (0..n / 2).all(|k| self.values[k] == -self.values[n - 1 - k])
    }

    /// First half of a symmetric sequence.
    pub fn half(&self) -> Option<DeltaSequence> {
        self.is_symmetric().then(|| DeltaSequence {
            values: self.values[..self.values.len() / 2].to_vec(),
        })
    }
}

impl std::fmt::Display for DeltaSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.values.iter().map(i64::to_string).collect();
        write!(f, "⟨{}⟩", parts.join(","))
    }
}

/// Partial sums τ(0) = 0, τ(k+1) = τ(k) + Δ(k), for k = 0..=len.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TauFunction {
    pub values: Vec<i64>,
}

impl TauFunction {
    pub fn min(&self) -> i64 {
        *self
            .values
            .iter()
            .min()
            .expect("tau has at least one value")
    }

    pub fn max(&self) -> i64 {
        *self
            .values
            .iter()
            .max()
            .expect("tau has at least one value")
    }
}

pub fn tau(d: &DeltaSequence) -> TauFunction {
    let mut values = Vec::with_capacity(d.len() + 1);
    let mut acc = 0i64;
    values.push(0);
    for &v in &d.values {
        acc += v;
        values.push(acc);
    }
    TauFunction { values }
}

/// Merges every maximal run of same-sign entries into its sum.
pub fn reduce(d: &DeltaSequence) -> DeltaSequence {
    let mut out: Vec<i64> = Vec::with_capacity(d.len());
    for &v in &d.values {
        match out.last_mut() {
            Some(last) if (*last > 0) == (v > 0) => *last += v,
            _ => out.push(v),
        }
    }
    DeltaSequence { values: out }
}

/// Replaces entry `index` by `parts`, which must share its sign and sum to it.
pub fn refine(d: &DeltaSequence, index: usize, parts: &[i64]) -> Result<DeltaSequence> {
    let Some(&v) = d.values.get(index) else {
        return invalid(format!(
            "index {index} is outside a sequence of length {}",
            d.len()
        ));
    };
    if parts.is_empty() {
        return invalid("refinement needs at least one part");
    }
    if parts.iter().any(|&x| x == 0 || (x > 0) != (v > 0)) {
        return invalid(format!("parts {parts:?} do not all share the sign of {v}"));
    }
    if parts.iter().sum::<i64>() != v {
        return invalid(format!("parts {parts:?} do not sum to {v}"));
    }
    let mut values = d.values[..index].to_vec();
    values.extend_from_slice(parts);
    values.extend_from_slice(&d.values[index + 1..]);
    Ok(DeltaSequence { values })
}

/// ⟨k₁..kₙ⟩ ↦ ⟨k₁..kₙ, −kₙ..−k₁⟩.
pub fn symmetrize(d: &DeltaSequence) -> DeltaSequence {
    let mut values = d.values.clone();
    values.extend(d.values.iter().rev().map(|&v| -v));
    DeltaSequence { values }
}

/// Concatenation.
pub fn join(d1: &DeltaSequence, d2: &DeltaSequence) -> DeltaSequence {
    let mut values = d1.values.clone();
    values.extend_from_slice(&d2.values);
    DeltaSequence { values }
}

/// Sinking test on the reduced form: it ends negative, each positive entry is
/// at most the size of the following negative one, and strictly less for the
/// last positive entry. The empty sequence counts as sinking.
pub fn is_sinking(d: &DeltaSequence) -> bool {
    let r = reduce(d);
    let v = &r.values;
    let Some(&last) = v.last() else { return true };
    if last > 0 {
        return false;
    }
    // reduced and starting positive: pairs (+, −) alternate from index 0
    let pairs_ok = v.chunks(2).all(|c| c.len() == 2 && c[0] <= -c[1]);
    let n = v.len();
    pairs_ok && v[n - 2] < -v[n - 1]
}

/// A delta sequence whose entries sit at integer positions, as for the
/// semigroup model of a Brieskorn sphere.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PositionedDelta {
    /// (position, value), strictly increasing in position.
    pub entries: Vec<(i64, i64)>,
}

impl PositionedDelta {
    pub fn sequence(&self) -> DeltaSequence {
        DeltaSequence {
            values: self.entries.iter().map(|&(_, v)| v).collect(),
        }
    }

    pub fn positions(&self) -> Vec<i64> {
        self.entries.iter().map(|&(x, _)| x).collect()
    }

    /// Reduced form keeping representative positions: a positive run sits at
    /// its last element (π₊), a negative run at its first element (η₋).
    pub fn reduce(&self) -> PositionedDelta {
        let mut out: Vec<(i64, i64)> = Vec::new();
        for &(x, v) in &self.entries {
            match out.last_mut() {
                Some(last) if (last.1 > 0) == (v > 0) => {
                    last.1 += v;
                    if v > 0 {
                        last.0 = x;
                    }
                }
                _ => out.push((x, v)),
            }
        }
        PositionedDelta { entries: out }
    }

    /// Entries with lo ≤ position ≤ hi.
    pub fn restrict(&self, lo: i64, hi: i64) -> PositionedDelta {
        PositionedDelta {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|&(x, _)| lo <= x && x <= hi)
                .collect(),
        }
    }

    /// Positions carrying positive values.
    pub fn positive_support(&self) -> Vec<i64> {
        self.entries
            .iter()
            .filter(|&&(_, v)| v > 0)
            .map(|&(x, _)| x)
            .collect()
    }
}
