use std::collections::{BTreeMap, HashMap};

use super::delta::{tau, DeltaSequence, TauFunction};
use crate::error::{invalid, Result};

/// A vertex of a graded root: the class of all (n, χ) with n in the maximal
/// interval [lo, hi] of indices on which τ ≤ χ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub chi: i64,
    pub lo: usize,
    pub hi: usize,
}

/// Finite part of a graded root: every vertex of grading at most the stem
/// mark. Above the mark the root is a single infinite ray.
#[derive(Clone, Debug)]
pub struct GradedRoot {
    tau: TauFunction,
    vertices: Vec<Vertex>,
    /// (lower, upper) pairs of adjacent vertices.
    edges: Vec<(usize, usize)>,
    children: Vec<Vec<usize>>,
    stem: usize,
    involution: Option<Vec<usize>>,
}

fn sublevel_intervals(tau: &[i64], lo: usize, hi: usize, h: i64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for k in lo..=hi {
        match (tau[k] <= h, start) {
            (true, None) => start = Some(k),
            (false, Some(s)) => {
                out.push((s, k - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, hi));
    }
    out
}

/// Glues the rays [τ(n), ∞) along common heights.
pub fn build_root(d: &DeltaSequence) -> GradedRoot {
    let tau = tau(d);
    let t = &tau.values;
    let top = tau.max();
    let n = t.len() - 1;
    let mut vertices = vec![Vertex {
        chi: top,
        lo: 0,
        hi: n,
    }];
    let mut edges = Vec::new();
    let mut children = vec![Vec::new()];
    let mut frontier = vec![0usize];
    let mut h = top;
    while h > tau.min() {
        h -= 1;
        let mut next = Vec::new();
        for &parent in &frontier {
            let pv = vertices[parent];
            for (lo, hi) in sublevel_intervals(t, pv.lo, pv.hi, h) {
                let id = vertices.len();
                vertices.push(Vertex { chi: h, lo, hi });
                children.push(Vec::new());
                children[parent].push(id);
                edges.push((id, parent));
                next.push(id);
            }
        }
        frontier = next;
    }
    let involution = d.is_symmetric().then(|| {
        let index: HashMap<(i64, usize, usize), usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| ((v.chi, v.lo, v.hi), i))
            .collect();
        vertices
            .iter()
            .map(|v| index[&(v.chi, n - v.hi, n - v.lo)])
            .collect()
    });
    GradedRoot {
        tau,
        vertices,
        edges,
        children,
        stem: 0,
        involution,
    }
}

impl GradedRoot {
    pub fn tau(&self) -> &TauFunction {
        &self.tau
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Grading above which the root is a single ray.
    pub fn stem_mark(&self) -> i64 {
        self.vertices[self.stem].chi
    }

    pub fn min_chi(&self) -> i64 {
        self.tau.min()
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    /// Number of vertices in each grading from the minimum to the stem mark.
    pub fn vertex_counts(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for v in &self.vertices {
            *out.entry(v.chi).or_insert(0) += 1;
        }
        out
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.children[v].is_empty())
            .collect()
    }

    /// Isomorphism invariant: the grading of the topmost branching vertex
    /// (or the bottom of a bare ray) followed by the unordered tree below it.
    pub fn canonical_form(&self) -> String {
        let mut v = self.stem;
        while self.children[v].len() == 1 {
            v = self.children[v][0];
        }
        format!("{}:{}", self.vertices[v].chi, self.encode(v))
    }

    fn encode(&self, v: usize) -> String {
        let mut parts: Vec<String> = self.children[v].iter().map(|&c| self.encode(c)).collect();
        parts.sort();
        format!("({})", parts.concat())
    }
}

impl PartialEq for GradedRoot {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

/// How the gradings of a [`UModule`] are anchored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradingConvention {
    Relative,
    /// Shifted so the infinite tower starts at −d.
    Absolute {
        d: i64,
    },
}

/// F[U]/Uᵐ with bottom grading `bottom`, repeated `multiplicity` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteTower {
    pub bottom: i64,
    pub length: i64,
    pub multiplicity: usize,
}

/// H(Γ, χ) as one infinite tower plus finite towers, vertex v in grading 2χ(v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UModule {
    pub infinite_bottom: i64,
    pub finite: Vec<FiniteTower>,
    pub convention: GradingConvention,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }
}

/// Decomposes H(Γ, χ) by following leaves upward: when two branches meet,
/// the one born later ends and contributes a finite tower.
pub fn u_module(r: &GradedRoot) -> UModule {
    let t = &r.tau.values;
    let mut order: Vec<usize> = (0..t.len()).collect();
    order.sort_by_key(|&k| (t[k], k));
    let mut uf = UnionFind {
        parent: (0..t.len()).collect(),
    };
    // birth (χ, index) of the oldest leaf in each component, keyed by root
    let birth: Vec<(i64, usize)> = (0..t.len()).map(|k| (t[k], k)).collect();
    let mut active = vec![false; t.len()];
    let mut towers: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for &k in &order {
        active[k] = true;
        for nb in [k.wrapping_sub(1), k + 1] {
            if nb >= t.len() || !active[nb] {
                continue;
            }
            let (a, b) = (uf.find(k), uf.find(nb));
            if a == b {
                continue;
            }
            let (old, young) = if birth[a] <= birth[b] { (a, b) } else { (b, a) };
            let length = t[k] - birth[young].0;
            if length > 0 {
                *towers.entry((2 * birth[young].0, length)).or_insert(0) += 1;
            }
            uf.parent[young] = old;
        }
    }
    let finite = towers
        .into_iter()
        .map(|((bottom, length), multiplicity)| FiniteTower {
            bottom,
            length,
            multiplicity,
        })
        .collect();
    UModule {
        infinite_bottom: 2 * r.min_chi(),
        finite,
        convention: GradingConvention::Relative,
    }
}

impl UModule {
    /// Shifts a relatively graded module so its infinite tower starts at −d.
    pub fn anchored(&self, d: i64) -> UModule {
        let base = match self.convention {
            GradingConvention::Relative => self.clone(),
            GradingConvention::Absolute { d: old } => self.shifted(old),
        };
        base.shifted(-d - base.infinite_bottom)
            .with_convention(GradingConvention::Absolute { d })
    }

    fn shifted(&self, by: i64) -> UModule {
        UModule {
            infinite_bottom: self.infinite_bottom + by,
            finite: self
                .finite
                .iter()
                .map(|f| FiniteTower {
                    bottom: f.bottom + by,
                    ..*f
                })
                .collect(),
            convention: self.convention,
        }
    }

    fn with_convention(mut self, convention: GradingConvention) -> UModule {
        self.convention = convention;
        self
    }

    /// Total F₂-rank in each even grading up to `top`.
    pub fn rank_by_grading(&self, top: i64) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        let mut g = self.infinite_bottom;
        while g <= top {
            out.insert(g, 1);
            g += 2;
        }
        for f in &self.finite {
            for k in 0..f.length {
                *out.entry(f.bottom + 2 * k).or_insert(0) += f.multiplicity;
            }
        }
        out
    }
}

/// Data of the minimal ι-invariant vertex v of a symmetric root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeltaTilde {
    pub chi_v: i64,
    pub chi_min: i64,
    pub delta_tilde: i64,
    /// Whether a grading-decreasing path leads from v to a global minimum.
    pub projective: bool,
}

/// For a symmetric sequence of length 2L: χ(v) = τ(L), δ̃ = χ(v) − min τ, and
/// v reaches a global minimum by a descending path iff the maximal interval
/// around L on which τ ≤ τ(L) contains a global minimum of τ.
pub fn delta_tilde(d: &DeltaSequence) -> Result<DeltaTilde> {
    if !d.is_symmetric() {
        return invalid(format!("{d} is not symmetric"));
    }
    let tf = tau(d);
    let t = &tf.values;
    let l = d.len() / 2;
    let chi_v = t[l];
    let chi_min = tf.min();
    let mut lo = l;
    while lo > 0 && t[lo - 1] <= chi_v {
        lo -= 1;
    }
    let mut hi = l;
    while hi + 1 < t.len() && t[hi + 1] <= chi_v {
        hi += 1;
    }
    let local_min = *t[lo..=hi].iter().min().expect("nonempty interval");
    Ok(DeltaTilde {
        chi_v,
        chi_min,
        delta_tilde: chi_v - chi_min,
        projective: local_min == chi_min,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[i64]) -> DeltaSequence {
        DeltaSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn empty_sequence_is_a_ray() {
        let r = build_root(&DeltaSequence::empty());
        assert_eq!(r.vertices().len(), 1);
        assert_eq!(r.stem_mark(), 0);
        let m = u_module(&r);
        assert_eq!(m.infinite_bottom, 0);
        assert!(m.finite.is_empty());
    }

    #[test]
    fn two_leaves_merge_at_one() {
        let r = build_root(&ds(&[1, -1]));
        assert_eq!(r.vertex_counts(), BTreeMap::from([(0, 2), (1, 1)]));
        assert_eq!(r.leaves().len(), 2);
        let inv = r.involution().unwrap();
        assert_eq!(r.vertices()[inv[1]].lo, 2);
        let m = u_module(&r);
        assert_eq!(m.infinite_bottom, 0);
        assert_eq!(
            m.finite,
            vec![FiniteTower {
                bottom: 0,
                length: 1,
                multiplicity: 1
            }]
        );
    }

    #[test]
    fn root_of_the_3_5_7_sequence() {
        let r = build_root(&ds(&[1, -2, 1, -1, 2, -1]));
        assert_eq!(r.min_chi(), -1);
        assert_eq!(r.vertex_counts(), BTreeMap::from([(-1, 2), (0, 3), (1, 1)]));
        let m = u_module(&r);
        assert_eq!(
            m.rank_by_grading(2),
            BTreeMap::from([(-2, 2), (0, 3), (2, 1)])
        );
    }

    #[test]
    fn anchoring_moves_the_infinite_tower() {
        let m = u_module(&build_root(&ds(&[1, -2, 1, -1, 2, -1]))).anchored(2);
        assert_eq!(m.infinite_bottom, -2);
        assert_eq!(m.convention, GradingConvention::Absolute { d: 2 });
        assert_eq!(m.anchored(0).infinite_bottom, 0);
    }

    #[test]
    fn delta_tilde_examples() {
        let x = delta_tilde(&ds(&[1, -1])).unwrap();
        assert_eq!(
            x,
            DeltaTilde {
                chi_v: 1,
                chi_min: 0,
                delta_tilde: 1,
                projective: true
            }
        );
        let x = delta_tilde(&ds(&[1, -2, 1, -1, 2, -1])).unwrap();
        assert_eq!((x.delta_tilde, x.projective), (1, true));
        let x = delta_tilde(&DeltaSequence::empty()).unwrap();
        assert_eq!(
            x,
            DeltaTilde {
                chi_v: 0,
                chi_min: 0,
                delta_tilde: 0,
                projective: true
            }
        );
        assert!(delta_tilde(&ds(&[1, -2])).is_err());
    }

    #[test]
    fn non_projective_root() {
        // τ = 0,3,0,2,1,2,0,3,0: v = (4, 1) sits in a valley above the minimum
        let d = ds(&[3, -3, 2, -1, 1, -2, 3, -3]);
        let x = delta_tilde(&d).unwrap();
        assert_eq!((x.chi_v, x.chi_min, x.projective), (1, 0, false));
    }
}
