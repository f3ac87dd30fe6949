//! Fully materialized truncated Borel complexes with dense boundary matrices.
//! Practical for complexes of a few hundred cells; used as the reference
//! route against which the reduced engine is checked.

use std::collections::HashMap;

use super::eg::{borel_boundary, BorelCell, Chain, Flavor};
use crate::error::{invalid, Result};
use crate::f2linalg::{homology_dim, BitVec, F2Matrix, F2Span};
use crate::gcomplex::SwfComplex;

#[derive(Clone, Debug)]
pub struct BorelChainComplex {
    pub flavor: Flavor,
    pub trunc: usize,
    /// Basis of each total degree 0..=trunc as (cell, basis index of Z).
    pub basis: Vec<Vec<(BorelCell, u32)>>,
    /// `boundary[k]` maps degree k to degree k − 1.
    pub boundary: Vec<F2Matrix>,
    index: Vec<HashMap<(BorelCell, u32), usize>>,
    spans: Vec<Option<F2Span>>,
}

fn build(z: &SwfComplex, trunc: usize, flavor: Flavor) -> Result<BorelChainComplex> {
    if trunc < z.max_degree() + 8 {
        return invalid(format!(
            "truncation {trunc} is below max degree {} + 8",
            z.max_degree()
        ));
    }
    let by_deg = z.basis_by_degree();
    let mut basis: Vec<Vec<(BorelCell, u32)>> = vec![Vec::new(); trunc + 1];
    for (deg, cells) in basis.iter_mut().enumerate() {
        for i in 0..=deg {
            let Some(zs) = by_deg.get(deg - i) else {
                continue;
            };
            for cell in flavor.cells_at(i) {
                cells.extend(zs.iter().map(|&k| (cell, k)));
            }
        }
    }
    let index: Vec<HashMap<(BorelCell, u32), usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(p, &key)| (key, p)).collect())
        .collect();
    let mut boundary = Vec::with_capacity(trunc + 1);
    for deg in 0..=trunc {
        let rows = if deg == 0 { 0 } else { basis[deg - 1].len() };
        let mut cols = Vec::with_capacity(basis[deg].len());
        for &(cell, k) in &basis[deg] {
            let chain: Chain = [(cell, vec![k])].into_iter().collect();
            let bd = borel_boundary(z, flavor, &chain);
            let mut col = Vec::new();
            for (c, v) in &bd {
                for &x in v {
                    col.push(index[deg - 1][&(*c, x)]);
                }
            }
            cols.push(col);
        }
        boundary.push(F2Matrix::from_sparse_columns(rows, &cols));
    }
    let spans = vec![None; trunc + 1];
    Ok(BorelChainComplex {
        flavor,
        trunc,
        basis,
        boundary,
        index,
        spans,
    })
}

/// C(EG) ⊗_𝒢 Z truncated at cells of degree ≤ trunc.
pub fn g_borel_complex(z: &SwfComplex, trunc: usize) -> Result<BorelChainComplex> {
    build(z, trunc, Flavor::G)
}

/// C(EG) ⊗_{C(S¹)} Z truncated at cells of degree ≤ trunc.
pub fn s1_borel_complex(z: &SwfComplex, trunc: usize) -> Result<BorelChainComplex> {
    build(z, trunc, Flavor::S1)
}

impl BorelChainComplex {
    pub fn dim(&self, deg: usize) -> usize {
        self.basis.get(deg).map_or(0, Vec::len)
    }

    /// Homology in degree `deg`; meaningful for deg < trunc.
    pub fn homology(&self, deg: usize) -> usize {
        let empty_above = F2Matrix::zeros(self.dim(deg), 0);
        let above = self.boundary.get(deg + 1).unwrap_or(&empty_above);
        homology_dim(above, &self.boundary[deg]).expect("Borel boundary squares to zero")
    }

    /// Whether ∂∂ vanishes on every degree.
    pub fn squares_to_zero(&self) -> bool {
        (1..self.boundary.len()).all(|k| {
            self.boundary[k - 1].cols() == self.boundary[k].rows()
                && (k == 1
                    || self.boundary[k - 1]
                        .mul(&self.boundary[k])
                        .map(|m| m.is_zero())
                        .unwrap_or(false))
        })
    }

    pub fn to_vector(&self, deg: usize, chain: &Chain) -> BitVec {
        let mut v = BitVec::zeros(self.dim(deg));
        for (cell, xs) in chain {
            for &x in xs {
                v.flip(self.index[deg][&(*cell, x)]);
            }
        }
        v
    }

    /// Whether a chain of degree `deg` is a boundary; requires deg < trunc.
    pub fn is_boundary(&mut self, deg: usize, chain: &Chain) -> Result<bool> {
        if deg + 1 > self.trunc {
            return invalid(format!(
                "degree {deg} is beyond the truncation {}",
                self.trunc
            ));
        }
        let v = self.to_vector(deg, chain);
        let span = self.spans[deg].get_or_insert_with(|| {
            let m = &self.boundary[deg + 1];
            let mut span = F2Span::new(m.rows());
            for c in 0..m.cols() {
                span.insert(m.column(c));
            }
            span
        });
        Ok(span.contains(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomplex::{make_fixed_complex, make_t};

    #[test]
    fn fixed_point_poincare_series() {
        let b = g_borel_complex(&make_fixed_complex(0), 16).unwrap();
        for d in 0..16 {
            assert_eq!(b.dim(d), usize::from(d % 4 != 3));
            assert_eq!(b.homology(d), usize::from(d % 4 != 3));
        }
        let s = s1_borel_complex(&make_fixed_complex(0), 16).unwrap();
        for d in 0..15 {
            assert_eq!(s.homology(d), usize::from(d % 2 == 0), "degree {d}");
        }
    }

    #[test]
    fn squares_to_zero_and_doubles() {
        let z = make_t(2, 1);
        let g = g_borel_complex(&z, z.max_degree() + 8).unwrap();
        assert!(g.squares_to_zero());
        let s = s1_borel_complex(&make_t(2, 0), 14).unwrap();
        assert!(s.squares_to_zero());
        let s = s1_borel_complex(&z, z.max_degree() + 8).unwrap();
        for d in 0..=g.trunc {
            assert_eq!(s.dim(d), 2 * g.dim(d));
        }
    }

    #[test]
    fn truncation_must_leave_margin() {
        assert!(g_borel_complex(&make_t(1, 0), 9).is_err());
    }

    #[test]
    fn localization_above_the_top_cell() {
        let z = make_t(1, 0);
        let trunc = z.max_degree() + 8;
        let b = g_borel_complex(&z, trunc).unwrap();
        for d in z.max_degree() + 1..trunc - 1 {
            assert_eq!(
                b.homology(d),
                usize::from((d - z.level()) % 4 != 3),
                "degree {d}"
            );
        }
    }
}
