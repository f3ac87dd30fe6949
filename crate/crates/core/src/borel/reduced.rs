//! Borel homology through a deformation retraction of Z onto its homology.
//!
//! Write the Borel differential as 1⊗∂_Z + δ, where δ comes from ∂ on EG and
//! strictly lowers the cell index. Given a strong deformation retraction
//! (i, p, h) of Z onto H(Z), the perturbation lemma yields a small complex on
//! ⊕ cells ⊗ H(Z) with differential P·A·I, A = Σₙ (δH)ⁿδ, and a quasi-
//! isomorphism P' = P + P·A·H from the big complex. Since δH lowers the cell
//! index, every series is finite.

use std::collections::{BTreeMap, HashMap};

use super::eg::{borel_boundary, eg_part, BorelCell, Chain, Flavor};
use crate::error::{internal, Result};
use crate::f2linalg::sparse::{GradedSdr, SparseVec};
use crate::f2linalg::{BitVec, F2Span};
use crate::gcomplex::SwfComplex;

/// A basis element of the small complex: cell ⊗ (homology class `class` in
/// degree `zdeg` of Z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallCell {
    pub cell: BorelCell,
    pub zdeg: usize,
    pub class: u32,
}

/// Retraction data of Z, shared by both Borel flavors.
#[derive(Clone, Debug)]
pub struct ZRetraction {
    sdr: GradedSdr,
    local: Vec<u32>,
    by_degree: Vec<Vec<u32>>,
}

impl ZRetraction {
    pub fn new(z: &SwfComplex) -> Self {
        let by_degree = z.basis_by_degree();
        let mut local = vec![0u32; z.dim()];
        for idx in &by_degree {
            for (k, &g) in idx.iter().enumerate() {
                local[g as usize] = k as u32;
            }
        }
        let boundaries: Vec<Vec<SparseVec>> = by_degree
            .iter()
            .map(|idx| {
                idx.iter()
                    .map(|&g| {
                        let mut col: Vec<u32> = z
                            .boundary_of(g as usize)
                            .iter()
                            .map(|&x| local[x as usize])
                            .collect();
                        col.sort_unstable();
                        col
                    })
                    .collect()
            })
            .collect();
        ZRetraction {
            sdr: GradedSdr::new(&boundaries),
            local,
            by_degree,
        }
    }

    pub fn betti(&self, n: usize) -> usize {
        self.sdr.betti(n)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..self.by_degree.len()).map(|n| self.betti(n)).collect()
    }

    fn to_local(&self, v: &[u32]) -> SparseVec {
        let mut out: Vec<u32> = v.iter().map(|&g| self.local[g as usize]).collect();
        out.sort_unstable();
        out
    }

    fn to_global(&self, n: usize, v: &[u32]) -> SparseVec {
        let mut out: Vec<u32> = v.iter().map(|&k| self.by_degree[n][k as usize]).collect();
        out.sort_unstable();
        out
    }

    fn representative(&self, n: usize, class: usize) -> SparseVec {
        self.to_global(n, self.sdr.representative(n, class))
    }
}

/// Small complex for one flavor, built lazily degree by degree.
pub struct ReducedBorel<'a> {
    z: &'a SwfComplex,
    ret: &'a ZRetraction,
    flavor: Flavor,
    basis: HashMap<usize, Vec<SmallCell>>,
    spans: HashMap<usize, F2Span>,
}

type SmallVec = BTreeMap<SmallCell, ()>;

fn small_toggle(v: &mut SmallVec, c: SmallCell) {
    if v.remove(&c).is_none() {
        v.insert(c, ());
    }
}

impl<'a> ReducedBorel<'a> {
    pub fn new(z: &'a SwfComplex, ret: &'a ZRetraction, flavor: Flavor) -> Self {
        ReducedBorel {
            z,
            ret,
            flavor,
            basis: HashMap::new(),
            spans: HashMap::new(),
        }
    }

    fn zdeg_of(&self, v: &[u32]) -> usize {
        self.z.degree(v[0] as usize)
    }

    /// Applies p and h cellwise.
    fn split(&self, chain: &Chain) -> (SmallVec, Chain) {
        let mut p = SmallVec::new();
        let mut h = Chain::new();
        for (cell, v) in chain {
            let n = self.zdeg_of(v);
            let dec = self.ret.sdr.decompose(n, &self.ret.to_local(v));
            for c in dec.p {
                small_toggle(
                    &mut p,
                    SmallCell {
                        cell: *cell,
                        zdeg: n,
                        class: c,
                    },
                );
            }
            if !dec.h.is_empty() {
                h.insert(*cell, self.ret.to_global(n + 1, &dec.h));
            }
        }
        (p, h)
    }

    /// P·Σₙ(δH)ⁿ applied to a chain already of the form δ(·).
    fn transfer_series(&self, mut v: Chain) -> SmallVec {
        let mut acc = SmallVec::new();
        while !v.is_empty() {
            let (p, h) = self.split(&v);
            for c in p.into_keys() {
                small_toggle(&mut acc, c);
            }
            v = eg_part(self.z, self.flavor, &h);
        }
        acc
    }

    /// Image of a cycle of the big complex in the small one (P').
    pub fn transfer(&self, x: &Chain) -> SmallVec {
        let (mut p, h) = self.split(x);
        for c in self
            .transfer_series(eg_part(self.z, self.flavor, &h))
            .into_keys()
        {
            small_toggle(&mut p, c);
        }
        p
    }

    /// Differential of the small complex on one basis element.
    pub fn small_boundary(&self, c: SmallCell) -> SmallVec {
        let rep = self.ret.representative(c.zdeg, c.class as usize);
        let chain: Chain = [(c.cell, rep)].into_iter().collect();
        self.transfer_series(eg_part(self.z, self.flavor, &chain))
    }

    pub fn small_basis(&mut self, deg: usize) -> &[SmallCell] {
        let (ret, flavor) = (self.ret, self.flavor);
        self.basis.entry(deg).or_insert_with(|| {
            let mut out = Vec::new();
            for i in 0..=deg {
                let n = deg - i;
                for cell in flavor.cells_at(i) {
                    for class in 0..ret.betti(n) {
                        out.push(SmallCell {
                            cell,
                            zdeg: n,
                            class: class as u32,
                        });
                    }
                }
            }
            out
        })
    }

    fn to_bits(&mut self, deg: usize, v: &SmallVec) -> Result<BitVec> {
        let basis = self.small_basis(deg).to_vec();
        let mut out = BitVec::zeros(basis.len());
        for c in v.keys() {
            match basis.binary_search_by(|b| {
                (b.cell.index, b.cell.twisted, b.zdeg, b.class).cmp(&(
                    c.cell.index,
                    c.cell.twisted,
                    c.zdeg,
                    c.class,
                ))
            }) {
                Ok(k) => out.flip(k),
                Err(_) => return internal(format!("small chain has a cell outside degree {deg}")),
            }
        }
        Ok(out)
    }

    /// Whether a cycle of the big complex of degree `deg` is a boundary.
    pub fn is_boundary(&mut self, deg: usize, x: &Chain) -> Result<bool> {
        if !borel_boundary(self.z, self.flavor, x).is_empty() {
            return internal("test chain is not a cycle");
        }
        let target = self.transfer(x);
        let bits = self.to_bits(deg, &target)?;
        if !self.spans.contains_key(&deg) {
            let above = self.small_basis(deg + 1).to_vec();
            let mut span = F2Span::new(self.small_basis(deg).len());
            for c in above {
                let img = self.small_boundary(c);
                span.insert(self.to_bits(deg, &img)?);
            }
            self.spans.insert(deg, span);
        }
        Ok(self.spans[&deg].contains(&bits))
    }
}
