//! Cells of EG for G = Pin(2) and the normal forms of ⊗_𝒢 and ⊗_{C(S¹)}.

use std::collections::BTreeMap;

use crate::f2linalg::sparse::{xor, SparseVec};
use crate::f2linalg::{homology_dim, F2Matrix};
use crate::gcomplex::{GAlgebraElement, Monomial, SwfComplex};

/// EG has one free 𝒢-cell eᵢ in each degree i ≢ 3 (mod 4).
pub fn is_cell(i: usize) -> bool {
    i % 4 != 3
}

/// ∂eᵢ as a list of (coefficient, cell index).
pub fn eg_boundary(i: usize) -> Vec<(GAlgebraElement, usize)> {
    assert!(is_cell(i), "e{i} is not a cell of EG");
    let one_plus_j = GAlgebraElement::ONE + GAlgebraElement::j();
    match i % 4 {
        0 if i == 0 => Vec::new(),
        // s(1 + j + j² + j³)
        0 => vec![(GAlgebraElement::s() * GAlgebraElement::norm(), i - 2)],
        1 => vec![(one_plus_j, i - 1)],
        _ => vec![(one_plus_j, i - 1), (GAlgebraElement::s(), i - 2)],
    }
}

/// Truncation of C(EG) at a maximal cell degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EgTruncation {
    pub max_cell_degree: usize,
}

impl EgTruncation {
    pub fn cells(&self) -> impl Iterator<Item = usize> {
        (0..=self.max_cell_degree).filter(|&i| is_cell(i))
    }

    /// C(EG) as an F₂-complex on the basis jᵃsᵇeᵢ, with boundary matrices
    /// per degree; entry k maps degree k to degree k − 1.
    pub fn free_complex(&self) -> Vec<F2Matrix> {
        let top = self.max_cell_degree + 1;
        let mut basis: Vec<Vec<(Monomial, usize)>> = vec![Vec::new(); top + 1];
        for i in self.cells() {
            for s in 0..2u8 {
                for a in 0..4u8 {
                    basis[i + s as usize].push((Monomial::new(a, s), i));
                }
            }
        }
        let index = |deg: usize, m: Monomial, i: usize| -> usize {
            basis[deg]
                .iter()
                .position(|&(mm, ii)| mm == m && ii == i)
                .expect("basis element")
        };
        let mut mats = Vec::with_capacity(top + 1);
        for deg in 0..=top {
            let rows = if deg == 0 { 0 } else { basis[deg - 1].len() };
            let mut cols = Vec::new();
            for &(m, i) in &basis[deg] {
                let g = GAlgebraElement::from_monomials([m]);
                // ∂(g·eᵢ) = g·∂eᵢ + (∂g)·eᵢ
                let mut terms: Vec<(Monomial, usize)> = Vec::new();
                for (c, k) in eg_boundary(i) {
                    terms.extend((g * c).monomials().map(|mm| (mm, k)));
                }
                terms.extend(g.boundary().monomials().map(|mm| (mm, i)));
                let mut col: Vec<usize> = terms
                    .into_iter()
                    .map(|(mm, k)| index(deg - 1, mm, k))
                    .collect();
                col.sort_unstable();
                let mut dedup: Vec<usize> = Vec::new();
                for x in col {
                    if dedup.last() == Some(&x) {
                        dedup.pop();
                    } else {
                        dedup.push(x);
                    }
                }
                cols.push(dedup);
            }
            mats.push(F2Matrix::from_sparse_columns(rows, &cols));
        }
        mats
    }

    /// Homology of the free complex in degrees 0..=max_cell_degree − 2.
    pub fn homology(&self) -> Vec<usize> {
        let mats = self.free_complex();
        (0..self.max_cell_degree.saturating_sub(1))
            .map(|k| homology_dim(&mats[k + 1], &mats[k]).expect("EG boundary squares to zero"))
            .collect()
    }
}

/// Which quotient of C(EG) ⊗ Z to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// C(EG) ⊗_𝒢 Z
    G,
    /// C(EG) ⊗_{C(S¹)} Z
    S1,
}

impl Flavor {
    pub fn cells_at(self, i: usize) -> Vec<BorelCell> {
        if !is_cell(i) {
            return Vec::new();
        }
        match self {
            Flavor::G => vec![BorelCell {
                index: i,
                twisted: false,
            }],
            Flavor::S1 => vec![
                BorelCell {
                    index: i,
                    twisted: false,
                },
                BorelCell {
                    index: i,
                    twisted: true,
                },
            ],
        }
    }
}

/// A cell eᵢ, or jeᵢ (twisted) in the S¹ quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorelCell {
    pub index: usize,
    pub twisted: bool,
}

impl BorelCell {
    pub fn e(index: usize) -> Self {
        BorelCell {
            index,
            twisted: false,
        }
    }
}

impl std::fmt::Display for BorelCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.twisted {
            write!(f, "je{}", self.index)
        } else {
            write!(f, "e{}", self.index)
        }
    }
}

/// Normal form of (m·eᵢ) ⊗ z: returns (cell, p, b) with (m·eᵢ) ⊗ z equal to
/// cell ⊗ jᵖsᵇz in the quotient.
pub fn normal_form(flavor: Flavor, m: Monomial, index: usize) -> (BorelCell, u8, bool) {
    let a = m.j % 4;
    let s = m.s == 1;
    match flavor {
        Flavor::G => {
            if s {
                (BorelCell::e(index), (2 + a) % 4, true)
            } else {
                (BorelCell::e(index), (4 - a) % 4, false)
            }
        }
        Flavor::S1 => {
            let twisted = BorelCell {
                index,
                twisted: true,
            };
            match (a % 2 == 1, s) {
                (false, false) => (BorelCell::e(index), (4 - a) % 4, false),
                (true, false) => (twisted, (5 - a) % 4, false),
                (false, true) => (BorelCell::e(index), (2 + a) % 4, true),
                (true, true) => (twisted, (3 + a) % 4, true),
            }
        }
    }
}

/// A chain of the Borel complex: for each cell, a vector in Z.
pub type Chain = BTreeMap<BorelCell, SparseVec>;

pub fn chain_add(chain: &mut Chain, cell: BorelCell, v: &[u32]) {
    if v.is_empty() {
        return;
    }
    let entry = chain.entry(cell).or_default();
    *entry = xor(entry, v);
    if entry.is_empty() {
        chain.remove(&cell);
    }
}

/// (g·eᵢ) ⊗ v reduced to normal form.
pub fn reduce_term(
    z: &SwfComplex,
    flavor: Flavor,
    g: GAlgebraElement,
    index: usize,
    v: &[u32],
    out: &mut Chain,
) {
    for m in g.monomials() {
        let (cell, p, s) = normal_form(flavor, m, index);
        let w = if s { z.apply_s(v) } else { v.to_vec() };
        chain_add(out, cell, &z.apply_j(&w, p));
    }
}

/// The part of the Borel differential coming from ∂ on EG.
pub fn eg_part(z: &SwfComplex, flavor: Flavor, chain: &Chain) -> Chain {
    let mut out = Chain::new();
    for (cell, v) in chain {
        for (g, k) in eg_boundary(cell.index) {
            let g = if cell.twisted {
                GAlgebraElement::j() * g
            } else {
                g
            };
            reduce_term(z, flavor, g, k, v, &mut out);
        }
    }
    out
}

/// The full Borel differential.
pub fn borel_boundary(z: &SwfComplex, flavor: Flavor, chain: &Chain) -> Chain {
    let mut out = eg_part(z, flavor, chain);
    for (cell, v) in chain {
        chain_add(&mut out, *cell, &z.apply_d(v));
    }
    out
}

/// Total degree of a homogeneous chain, if nonzero.
pub fn chain_degree(z: &SwfComplex, chain: &Chain) -> Option<usize> {
    let (cell, v) = chain.iter().next()?;
    Some(cell.index + z.degree(v[0] as usize))
}
