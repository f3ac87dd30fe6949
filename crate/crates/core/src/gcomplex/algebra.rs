//! The chain algebra 𝒢 = F₂[s,j]/(sj = j³s, s² = 0, j⁴ = 1).

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

/// A monomial jᵃsᵇ with a ∈ 0..4 and b ∈ 0..2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub j: u8,
    pub s: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { j: 0, s: 0 };

    pub fn new(j: u8, s: u8) -> Self {
        debug_assert!(s < 2);
        Monomial { j: j % 4, s }
    }

    fn bit(self) -> u8 {
        1 << (self.j + 4 * self.s)
    }

    pub fn degree(self) -> usize {
        self.s as usize
    }

    /// Product of monomials; `None` when it vanishes (s² = 0).
    pub fn mul(self, other: Monomial) -> Option<Monomial> {
        if self.s == 1 && other.s == 1 {
            return None;
        }
        // s·jᶜ = j³ᶜ·s
        let shift = if self.s == 1 { 3 * other.j } else { other.j };
        Some(Monomial::new(self.j + shift, self.s + other.s))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.j, self.s) {
            (0, 0) => write!(f, "1"),
            (0, 1) => write!(f, "s"),
            (1, 0) => write!(f, "j"),
            (1, 1) => write!(f, "js"),
            (a, 0) => write!(f, "j^{a}"),
            (a, _) => write!(f, "j^{a}s"),
        }
    }
}

/// An element of 𝒢, one coefficient bit per monomial.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct GAlgebraElement(u8);

impl GAlgebraElement {
    pub const ZERO: GAlgebraElement = GAlgebraElement(0);
    pub const ONE: GAlgebraElement = GAlgebraElement(1);

    pub fn j() -> Self {
        Self::monomial(1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(j: u8, s: u8) -> Self {
        GAlgebraElement(Monomial::new(j, s).bit())
    }

    pub fn from_monomials(ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut out = GAlgebraElement::ZERO;
        for m in ms {
            out.0 ^= m.bit();
        }
        out
    }

    pub fn from_bits(bits: u8) -> Self {
        GAlgebraElement(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// jᵏ
    pub fn j_pow(k: u8) -> Self {
        Self::monomial(k % 4, 0)
    }

    /// 1 + j + j² + j³
    pub fn norm() -> Self {
        GAlgebraElement(0b1111)
    }

    pub fn monomials(self) -> impl Iterator<Item = Monomial> {
        (0..8u8)
            .filter(move |i| self.0 >> i & 1 == 1)
            .map(|i| Monomial::new(i % 4, i / 4))
    }

    /// The derivation with ∂s = 1 + j², ∂j = 0.
    pub fn boundary(self) -> Self {
        let mut out = GAlgebraElement::ZERO;
        for m in self.monomials() {
            if m.s == 1 {
                // ∂(jᵃs) = jᵃ(1 + j²)
                out =
                    out + GAlgebraElement::monomial(m.j, 0) + GAlgebraElement::monomial(m.j + 2, 0);
            }
        }
        out
    }
}

pub fn galg_mul(a: GAlgebraElement, b: GAlgebraElement) -> GAlgebraElement {
    a * b
}

pub fn galg_boundary(a: GAlgebraElement) -> GAlgebraElement {
    a.boundary()
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Add for GAlgebraElement {
    type Output = GAlgebraElement;
    fn add(self, rhs: Self) -> Self {
        GAlgebraElement(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl AddAssign for GAlgebraElement {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Mul for GAlgebraElement {
    type Output = GAlgebraElement;
    fn mul(self, rhs: Self) -> Self {
        let mut out = GAlgebraElement::ZERO;
        for a in self.monomials() {
            for b in rhs.monomials() {
                if let Some(m) = a.mul(b) {
                    out.0 ^= m.bit();
                }
            }
        }
        out
    }
}

impl fmt::Display for GAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.monomials().map(|m| m.to_string()).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for GAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({self})")
    }
}
