//! Sparse column reduction over F₂ and the strong deformation retraction of a
//! graded chain complex onto its homology.
//!
//! Vectors are sorted lists of basis indices.

use super::BitVec;

pub type SparseVec = Vec<u32>;

/// Symmetric difference of two sorted index lists.
pub fn xor(a: &[u32], b: &[u32]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

pub fn xor_into(a: &mut SparseVec, b: &[u32]) {
    if b.is_empty() {
        return;
    }
    *a = xor(a, b);
}

/// Sorts and cancels repeated indices in pairs.
pub fn normalize(mut v: Vec<u32>) -> SparseVec {
    v.sort_unstable();
    let mut out: Vec<u32> = Vec::with_capacity(v.len());
    for x in v {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Result of reducing the columns of a matrix so that nonzero columns have
/// distinct lowest entries (here: largest row index, "low").
#[derive(Clone, Debug)]
pub struct ColumnReduction {
    pub r: Vec<SparseVec>,
    /// `v[k]` records which original columns were summed into `r[k]`.
    pub v: Vec<SparseVec>,
    /// For each row index, the column whose reduced form has it as low.
    pub pivot_of_row: Vec<Option<u32>>,
}

/// Standard left-to-right column reduction. Columns flagged in `skip` are
/// known cycles and are left as zero columns with trivial `v`.
pub fn reduce_columns(
    rows: usize,
    columns: &[SparseVec],
    skip: &[bool],
    track_v: bool,
) -> ColumnReduction {
    let mut r: Vec<SparseVec> = Vec::with_capacity(columns.len());
    let mut v: Vec<SparseVec> = Vec::with_capacity(columns.len());
    let mut pivot_of_row = vec![None; rows];
    for (k, col) in columns.iter().enumerate() {
        let mut rk = if skip.get(k).copied().unwrap_or(false) {
            Vec::new()
        } else {
            col.clone()
        };
        let mut vk = if track_v { vec![k as u32] } else { Vec::new() };
        while let Some(&low) = rk.last() {
            match pivot_of_row[low as usize] {
                Some(other) => {
                    let other = other as usize;
                    rk = xor(&rk, &r[other]);
                    if track_v {
                        vk = xor(&vk, &v[other]);
                    }
                }
                None => {
                    pivot_of_row[low as usize] = Some(k as u32);
                    break;
                }
            }
        }
        r.push(rk);
        v.push(vk);
    }
    ColumnReduction { r, v, pivot_of_row }
}

/// Rank of the matrix with the given sparse columns.
pub fn sparse_rank(rows: usize, columns: &[SparseVec]) -> usize {
    let red = reduce_columns(rows, columns, &[], false);
    red.pivot_of_row.iter().filter(|p| p.is_some()).count()
}

#[derive(Clone, Debug)]
enum Pivot {
    /// A reduced boundary column `r` of the next differential, with its
    /// chain-level preimage `v` one degree up.
    Boundary { r: SparseVec, v: SparseVec },
    /// A cycle representing a homology class.
    Cycle { class: u32, v: SparseVec },
    /// A chain whose boundary is nonzero.
    Chain { v: SparseVec },
}

#[derive(Clone, Debug)]
struct DegreeData {
    dim: usize,
    pivots: Vec<Pivot>,
    classes: Vec<u32>,
}

/// Strong deformation retraction (i, p, h) of a finite graded F₂ complex onto
/// its homology.
///
/// In each degree the chain space splits into boundaries B, homology
/// representatives H and complements C with ∂: C ≅ B. Every basis vector of
/// this splitting has a distinct largest index, so decomposing a chain is a
/// triangular solve. Then p projects to H, h sends a reduced boundary back to
/// its preimage in C and kills H and C, and i includes H.
#[derive(Clone, Debug)]
pub struct GradedSdr {
    degrees: Vec<DegreeData>,
}

/// Output of [`GradedSdr::decompose`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    /// Homology coordinates p(x), as sorted class indices.
    pub p: SparseVec,
    /// h(x), a chain one degree up (local indices).
    pub h: SparseVec,
}

impl GradedSdr {
    /// `boundaries[n][k]` is ∂ of basis vector k in degree n, in the local
    /// indices of degree n − 1. `boundaries[0]` must consist of empty columns.
    pub fn new(boundaries: &[Vec<SparseVec>]) -> Self {
        let top = boundaries.len();
        let dims: Vec<usize> = boundaries.iter().map(Vec::len).collect();
        let mut reductions: Vec<Option<ColumnReduction>> = vec![None; top];
        for n in (0..top).rev() {
            let rows = if n == 0 { 0 } else { dims[n - 1] };
            let skip: Vec<bool> = match reductions.get(n + 1).and_then(Option::as_ref) {
                Some(up) => up.pivot_of_row.iter().map(Option::is_some).collect(),
                None => vec![false; dims[n]],
            };
            reductions[n] = Some(reduce_columns(rows, &boundaries[n], &skip, true));
        }
        let mut degrees = Vec::with_capacity(top);
        for n in 0..top {
            let own = reductions[n].as_ref().expect("reduced");
            let up = reductions.get(n + 1).and_then(Option::as_ref);
            let mut pivots = Vec::with_capacity(dims[n]);
            let mut classes = Vec::new();
            for m in 0..dims[n] {
                let paired = up.and_then(|u| u.pivot_of_row[m]);
                let pivot = match paired {
                    Some(j) => {
                        let u = up.expect("paired implies next degree");
                        Pivot::Boundary {
                            r: u.r[j as usize].clone(),
                            v: u.v[j as usize].clone(),
                        }
                    }
                    None if own.r[m].is_empty() => {
                        classes.push(m as u32);
                        Pivot::Cycle {
                            class: (classes.len() - 1) as u32,
                            v: own.v[m].clone(),
                        }
                    }
                    None => Pivot::Chain {
                        v: own.v[m].clone(),
                    },
                };
                pivots.push(pivot);
            }
            degrees.push(DegreeData {
                dim: dims[n],
                pivots,
                classes,
            });
        }
        GradedSdr { degrees }
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.degrees.get(n).map_or(0, |d| d.dim)
    }

    /// Betti number in degree n.
    pub fn betti(&self, n: usize) -> usize {
        self.degrees.get(n).map_or(0, |d| d.classes.len())
    }

    /// i(class): the cycle representing homology class `class` in degree n.
    pub fn representative(&self, n: usize, class: usize) -> &SparseVec {
        let m = self.degrees[n].classes[class] as usize;
        match &self.degrees[n].pivots[m] {
            Pivot::Cycle { v, .. } => v,
            _ => unreachable!("class index points at a cycle pivot"),
        }
    }

    /// Computes p(x) and h(x) for a chain x of degree n.
    pub fn decompose(&self, n: usize, x: &[u32]) -> Decomposition {
        let Some(deg) = self.degrees.get(n) else {
            return Decomposition::default();
        };
        if x.is_empty() {
            return Decomposition::default();
        }
        let mut work = BitVec::from_indices(deg.dim, x.iter().map(|&i| i as usize));
        let mut p = Vec::new();
        let up_dim = self.dim(n + 1);
        let mut h = BitVec::zeros(up_dim);
        let mut h_touched = false;
        let mut word = (deg.dim.saturating_sub(1)) / 64;
        loop {
            while word > 0 && work.words[word] == 0 {
                word -= 1;
            }
            let w = work.words[word];
            if w == 0 {
                break;
            }
            let m = word * 64 + 63 - w.leading_zeros() as usize;
            match &deg.pivots[m] {
                Pivot::Boundary { r, v } => {
                    for &i in r {
                        work.flip(i as usize);
                    }
                    for &i in v {
                        h.flip(i as usize);
                    }
                    h_touched = true;
                }
                Pivot::Cycle { class, v } => {
                    for &i in v {
                        work.flip(i as usize);
                    }
                    p.push(*class);
                }
                Pivot::Chain { v } => {
                    for &i in v {
                        work.flip(i as usize);
                    }
                }
            }
        }
        p.sort_unstable();
        let h = if h_touched {
            h.ones().map(|i| i as u32).collect()
        } else {
            Vec::new()
        };
        Decomposition { p, h }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_cancels() {
        assert_eq!(xor(&[1, 3, 5], &[3, 4]), vec![1, 4, 5]);
        assert_eq!(normalize(vec![5, 1, 5, 2, 1, 1]), vec![1, 2]);
    }

    #[test]
    fn rank_of_sparse_columns() {
        assert_eq!(sparse_rank(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]), 2);
    }

    fn circle() -> Vec<Vec<SparseVec>> {
        // two vertices, two edges both joining them
        vec![vec![vec![], vec![]], vec![vec![0, 1], vec![0, 1]]]
    }

    #[test]
    fn sdr_of_circle() {
        let sdr = GradedSdr::new(&circle());
        assert_eq!(sdr.betti(0), 1);
        assert_eq!(sdr.betti(1), 1);
        // vertex 0 is homologous to vertex 1: difference is ∂(edge)
        let d = sdr.decompose(0, &[0, 1]);
        assert!(d.p.is_empty());
        assert_eq!(d.h.len(), 1);
        let d0 = sdr.decompose(0, &[0]);
        let d1 = sdr.decompose(0, &[1]);
        assert_eq!(d0.p, d1.p);
        assert_eq!(d0.p.len(), 1);
    }

    #[test]
    fn sdr_homotopy_identity() {
        // check x − i p x = ∂h x + h ∂x on every basis vector of a small complex
        let bd = circle();
        let sdr = GradedSdr::new(&bd);
        for n in 0..2 {
            for k in 0..bd[n].len() {
                let x = vec![k as u32];
                let dec = sdr.decompose(n, &x);
                let mut lhs = x.clone();
                for &c in &dec.p {
                    lhs = xor(&lhs, sdr.representative(n, c as usize));
                }
                let mut rhs = Vec::new();
                for &i in &dec.h {
                    rhs = xor(&rhs, &bd[n + 1][i as usize]);
                }
                if n > 0 {
                    let hd = sdr.decompose(n - 1, &bd[n][k]).h;
                    rhs = xor(&rhs, &hd);
                }
                assert_eq!(lhs, rhs, "degree {n} basis {k}");
            }
        }
    }
}
