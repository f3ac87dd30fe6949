use std::collections::HashMap;

use num_rational::Rational64;

use super::algebra::GAlgebraElement;
use crate::f2linalg::sparse::{normalize, xor, SparseVec};

/// Generator of a free 𝒢-orbit, given as a vector in the F₂-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGenerator {
    pub name: String,
    pub degree: usize,
    pub vector: SparseVec,
}

/// A finite 𝒢-chain complex with a distinguished fixed part at level t.
///
/// The complex is stored over an F₂-basis on which j acts by a permutation;
/// s and ∂ are sparse maps. Fixed basis elements span the S¹-fixed
/// subcomplex, the rest span the free part.
#[derive(Clone, Debug)]
pub struct SwfComplex {
    level: usize,
    degree: Vec<u32>,
    label: Vec<String>,
    fixed: Vec<bool>,
    j: Vec<u32>,
    s: Vec<SparseVec>,
    d: Vec<SparseVec>,
    fundamental: SparseVec,
    generators: Vec<FreeGenerator>,
}

/// Unchecked raw data for a complex; see [`SwfComplex::from_raw`].
#[derive(Clone, Debug, Default)]
pub struct RawComplex {
    pub level: usize,
    pub degree: Vec<u32>,
    pub label: Vec<String>,
    pub fixed: Vec<bool>,
    pub j: Vec<u32>,
    pub s: Vec<SparseVec>,
    pub d: Vec<SparseVec>,
    pub fundamental: SparseVec,
    pub generators: Vec<FreeGenerator>,
}

impl SwfComplex {
    /// Assembles a complex without any checks; run [`super::validate`] on it.
    pub fn from_raw(raw: RawComplex) -> Self {
        SwfComplex {
            level: raw.level,
            degree: raw.degree,
            label: raw.label,
            fixed: raw.fixed,
            j: raw.j,
            s: raw.s.into_iter().map(normalize).collect(),
            d: raw.d.into_iter().map(normalize).collect(),
            fundamental: normalize(raw.fundamental),
            generators: raw.generators,
        }
    }

    pub fn into_raw(self) -> RawComplex {
        RawComplex {
            level: self.level,
            degree: self.degree,
            label: self.label,
            fixed: self.fixed,
            j: self.j,
            s: self.s,
            d: self.d,
            fundamental: self.fundamental,
            generators: self.generators,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.degree.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i] as usize
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn label(&self, i: usize) -> &str {
        &self.label[i]
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.fixed[i]
    }

    pub fn fundamental(&self) -> &SparseVec {
        &self.fundamental
    }

    pub fn free_generators(&self) -> &[FreeGenerator] {
        &self.generators
    }

    pub fn fixed_dim(&self) -> usize {
        self.fixed.iter().filter(|&&f| f).count()
    }

    pub fn boundary_of(&self, i: usize) -> &SparseVec {
        &self.d[i]
    }

    pub fn s_of(&self, i: usize) -> &SparseVec {
        &self.s[i]
    }

    pub fn j_of(&self, i: usize) -> usize {
        self.j[i] as usize
    }

    /// Dimension of the chain space in each degree 0..=max_degree.
    pub fn dims_by_degree(&self) -> Vec<usize> {
        let mut dims = vec![0; self.max_degree() + 1];
        for &d in &self.degree {
            dims[d as usize] += 1;
        }
        dims
    }

    /// Basis indices grouped by degree.
    pub fn basis_by_degree(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.max_degree() + 1];
        for (i, &d) in self.degree.iter().enumerate() {
            out[d as usize].push(i as u32);
        }
        out
    }

    pub fn apply_j(&self, v: &[u32], power: u8) -> SparseVec {
        let mut out: Vec<u32> = v.to_vec();
        for _ in 0..power % 4 {
            for x in out.iter_mut() {
                *x = self.j[*x as usize];
            }
        }
        out.sort_unstable();
        out
    }

    pub fn apply_s(&self, v: &[u32]) -> SparseVec {
        let mut acc = Vec::new();
        for &x in v {
            acc.extend_from_slice(&self.s[x as usize]);
        }
        normalize(acc)
    }

    pub fn apply_d(&self, v: &[u32]) -> SparseVec {
        let mut acc = Vec::new();
        for &x in v {
            acc.extend_from_slice(&self.d[x as usize]);
        }
        normalize(acc)
    }

    /// g·v for g ∈ 𝒢.
    pub fn act(&self, g: GAlgebraElement, v: &[u32]) -> SparseVec {
        let mut acc = Vec::new();
        for m in g.monomials() {
            let w = if m.s == 1 {
                self.apply_s(v)
            } else {
                v.to_vec()
            };
            acc = xor(&acc, &self.apply_j(&w, m.j));
        }
        acc
    }

    pub fn describe(&self, v: &[u32]) -> String {
        if v.is_empty() {
            return "0".to_string();
        }
        v.iter()
            .map(|&i| self.label[i as usize].as_str())
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Incremental construction of a complex: a fixed part followed by free
/// orbits added one generator at a time.
#[derive(Clone, Debug)]
pub struct ComplexBuilder {
    raw: RawComplex,
}

impl ComplexBuilder {
    /// Starts from the cells of (R̃ᵗ)⁺: c₀, then cᵢ and jcᵢ for 1 ≤ i ≤ t.
    pub fn fixed(t: usize) -> Self {
        let mut raw = RawComplex {
            level: t,
            ..Default::default()
        };
        raw.degree.push(0);
        raw.label.push("c0".into());
        raw.fixed.push(true);
        raw.j.push(0);
        raw.s.push(Vec::new());
        raw.d.push(Vec::new());
        for i in 1..=t {
            let base = raw.degree.len() as u32;
            let below: SparseVec = if i == 1 {
                vec![0]
            } else {
                vec![base - 2, base - 1]
            };
            for k in 0..2u32 {
                raw.degree.push(i as u32);
                raw.label.push(if k == 0 {
                    format!("c{i}")
                } else {
                    format!("jc{i}")
                });
                raw.fixed.push(true);
                raw.j.push(base + 1 - k);
                raw.s.push(Vec::new());
                // ∂(j·cᵢ) = j(1+j)cᵢ₋₁ = (1+j)cᵢ₋₁ since j² acts trivially
                raw.d.push(below.clone());
            }
        }
        raw.fundamental = if t == 0 {
            vec![0]
        } else {
            vec![2 * t as u32 - 1, 2 * t as u32]
        };
        ComplexBuilder { raw }
    }

    pub fn dim(&self) -> usize {
        self.raw.degree.len()
    }

    /// Index of the basis element jᵃsᵇ·(generator `g`), for a generator added
    /// by [`ComplexBuilder::add_free`] at basis offset `g`.
    pub fn orbit_element(base: u32, j: u8, s: u8) -> u32 {
        base + 4 * s as u32 + (j % 4) as u32
    }

    /// Adds a free generator x of the given degree with ∂x = `boundary`;
    /// returns the basis index of x. The orbit occupies eight consecutive
    /// indices: jᵃx then jᵃsx.
    pub fn add_free(&mut self, name: &str, degree: usize, boundary: SparseVec) -> u32 {
        let boundary = normalize(boundary);
        let base = self.raw.degree.len() as u32;
        let view = self.view();
        let s_boundary = view.apply_s(&boundary);
        for s in 0..2u8 {
            for a in 0..4u8 {
                let prefix = match (a, s) {
                    (0, 0) => String::new(),
                    (0, 1) => "s".into(),
                    (1, 0) => "j".into(),
                    (1, 1) => "js".into(),
                    (a, 0) => format!("j{a}"),
                    (a, _) => format!("j{a}s"),
                };
                self.raw.degree.push((degree + s as usize) as u32);
                self.raw.label.push(format!("{prefix}{name}"));
                self.raw.fixed.push(false);
                self.raw.j.push(Self::orbit_element(base, a + 1, s));
                if s == 0 {
                    // s·jᵃ = j³ᵃ·s
                    self.raw.s.push(vec![Self::orbit_element(base, 3 * a, 1)]);
                    self.raw.d.push(view.apply_j(&boundary, a));
                } else {
                    self.raw.s.push(Vec::new());
                    // ∂(jᵃsx) = jᵃ(s∂x + x + j²x)
                    let mut d = view.apply_j(&s_boundary, a);
                    d = xor(
                        &d,
                        &normalize(vec![
                            Self::orbit_element(base, a, 0),
                            Self::orbit_element(base, a + 2, 0),
                        ]),
                    );
                    self.raw.d.push(d);
                }
            }
        }
        self.raw.generators.push(FreeGenerator {
            name: name.to_string(),
            degree,
            vector: vec![base],
        });
        base
    }

    fn view(&self) -> SwfComplex {
        SwfComplex::from_raw(self.raw.clone())
    }

    pub fn set_fundamental(&mut self, f: SparseVec) {
        self.raw.fundamental = f;
    }

    pub fn fundamental(&self) -> SparseVec {
        self.raw.fundamental.clone()
    }

    pub fn build(self) -> SwfComplex {
        SwfComplex::from_raw(self.raw)
    }
}

/// The cellular chains of (R̃ᵗ)⁺ relative to the base point.
pub fn make_fixed_complex(t: usize) -> SwfComplex {
    ComplexBuilder::fixed(t).build()
}

/// T_D(t): the fixed complex at level t plus free generators
/// x_{t+1}, x_{t+3}, …, x_{t+2D−1} with ∂x_{t+1} = f and
/// ∂xᵢ = s(1+j²)xᵢ₋₂.
pub fn make_t(d: usize, t: usize) -> SwfComplex {
    let mut b = ComplexBuilder::fixed(t);
    let mut prev: Option<u32> = None;
    for i in 1..=d {
        let deg = t + 2 * i - 1;
        let boundary = match prev {
            None => b.fundamental(),
            Some(x) => {
                // s(1 + j²)x = sx + j²sx
                vec![
                    ComplexBuilder::orbit_element(x, 0, 1),
                    ComplexBuilder::orbit_element(x, 2, 1),
                ]
            }
        };
        prev = Some(b.add_free(&format!("x{deg}"), deg, boundary));
    }
    b.build()
}

/// Cells of ℍ⁺: a fixed r₀ and free y₁, y₂, y₃ with ∂y₁ = r₀,
/// ∂y₂ = (1+j)y₁, ∂y₃ = sy₁ + (1+j)y₂.
pub fn quaternion_sphere() -> SwfComplex {
    let mut b = ComplexBuilder::fixed(0);
    b.raw.label[0] = "r0".into();
    let y1 = b.add_free("y1", 1, vec![0]);
    let y2 = b.add_free("y2", 2, vec![y1, ComplexBuilder::orbit_element(y1, 1, 0)]);
    b.add_free(
        "y3",
        3,
        vec![
            ComplexBuilder::orbit_element(y1, 0, 1),
            y2,
            ComplexBuilder::orbit_element(y2, 1, 0),
        ],
    );
    b.build()
}

/// Σ^R̃ Z = C((R̃)⁺) ⊗ Z; raises the level by one.
pub fn suspend_rtilde(z: &SwfComplex) -> SwfComplex {
    tensor(&make_fixed_complex(1), z)
}

/// Σ^ℍ Z = C(ℍ⁺) ⊗ Z; the level is unchanged.
pub fn suspend_h(z: &SwfComplex) -> SwfComplex {
    tensor(&quaternion_sphere(), z)
}

/// Position of a free basis element in its orbit: (generator, j-power, s).
fn orbit_positions(z: &SwfComplex) -> Vec<Option<(usize, u8, u8)>> {
    let mut out = vec![None; z.dim()];
    for (g, gen) in z.generators.iter().enumerate() {
        let base = gen.vector[0];
        for s in 0..2u8 {
            for a in 0..4u8 {
                out[ComplexBuilder::orbit_element(base, a, s) as usize] = Some((g, a, s));
            }
        }
    }
    out
}

struct TensorLayout<'a> {
    z1: &'a SwfComplex,
    z2: &'a SwfComplex,
    pos1: Vec<Option<(usize, u8, u8)>>,
    pos2: Vec<Option<(usize, u8, u8)>>,
    fixed_index: HashMap<(u32, u32), u32>,
    /// Orbit base of x⊗q for a generator x of z1 and a basis element q of z2.
    left: HashMap<(usize, u32), u32>,
    /// Orbit base of c⊗y for a fixed cell c of z1 and a generator y of z2.
    right: HashMap<(u32, usize), u32>,
}

impl TensorLayout<'_> {
    /// The product cell p × q written in the orbit basis of the tensor.
    ///
    /// The cell jᵃsx × q is swept by the arc s acting diagonally only after
    /// a cellular approximation; it becomes jᵃ(s(x⊗q') + j²(x⊗j²sq')) with
    /// q' = j⁻ᵃq.
    fn cell(&self, p: u32, q: u32, out: &mut Vec<u32>) {
        let (z1, z2) = (self.z1, self.z2);
        match self.pos1[p as usize] {
            None => match self.pos2[q as usize] {
                None => out.push(self.fixed_index[&(p, q)]),
                Some((y, b, e)) => {
                    let c = z1.apply_j(&[p], 4 - b)[0];
                    out.push(ComplexBuilder::orbit_element(self.right[&(c, y)], b, e));
                }
            },
            Some((x, a, e)) => {
                let q1 = z2.apply_j(&[q], 4 - a)[0];
                let base = self.left[&(x, q1)];
                out.push(ComplexBuilder::orbit_element(base, a, e));
                if e == 1 {
                    for r in z2.apply_j(z2.s_of(q1 as usize), 2) {
                        out.push(ComplexBuilder::orbit_element(self.left[&(x, r)], a + 2, 0));
                    }
                }
            }
        }
    }

    /// ∂(p⊗q) = ∂p⊗q + p⊗∂q in the orbit basis.
    fn boundary(&self, p: u32, q: u32) -> SparseVec {
        let mut out = Vec::new();
        for &pp in self.z1.boundary_of(p as usize) {
            self.cell(pp, q, &mut out);
        }
        for &qq in self.z2.boundary_of(q as usize) {
            self.cell(p, qq, &mut out);
        }
        normalize(out)
    }
}

/// Equivariant tensor product over F₂ with j(a⊗b) = ja⊗jb and
/// ∂(a⊗b) = ∂a⊗b + a⊗∂b.
///
/// The free part is laid out as free 𝒢-orbits on the cells x⊗q (x a free
/// generator of z1, q any basis element of z2) and c⊗y (c a fixed cell of
/// z1, y a free generator of z2). On x⊗q the action of s is the formal one;
/// as chains of the product it agrees with s(a⊗b) = sa⊗b + j²a⊗sb.
pub fn tensor(z1: &SwfComplex, z2: &SwfComplex) -> SwfComplex {
    let (n1, n2) = (z1.dim() as u32, z2.dim() as u32);
    let fixed1: Vec<u32> = (0..n1).filter(|&a| z1.fixed[a as usize]).collect();
    let fixed2: Vec<u32> = (0..n2).filter(|&b| z2.fixed[b as usize]).collect();
    let mut raw = RawComplex {
        level: z1.level + z2.level,
        ..Default::default()
    };
    let mut fixed_index = HashMap::new();
    for &a in &fixed1 {
        for &b in &fixed2 {
            fixed_index.insert((a, b), raw.degree.len() as u32);
            raw.degree
                .push(z1.degree[a as usize] + z2.degree[b as usize]);
            raw.label
                .push(format!("{}⊗{}", z1.label[a as usize], z2.label[b as usize]));
            raw.fixed.push(true);
            raw.s.push(Vec::new());
        }
    }
    for &a in &fixed1 {
        for &b in &fixed2 {
            raw.j
                .push(fixed_index[&(z1.j[a as usize], z2.j[b as usize])]);
        }
    }
    let mut left = HashMap::new();
    let mut right = HashMap::new();
    let mut orbits: Vec<(u32, u32, u32)> = Vec::new();
    let mut push_orbit =
        |raw: &mut RawComplex, name: String, degree: usize, p: u32, q: u32| -> u32 {
            let base = raw.degree.len() as u32;
            for s in 0..2u8 {
                for a in 0..4u8 {
                    let prefix = match (a, s) {
                        (0, 0) => String::new(),
                        (0, _) => "s".into(),
                        (1, 0) => "j".into(),
                        (1, _) => "js".into(),
                        (a, 0) => format!("j{a}"),
                        (a, _) => format!("j{a}s"),
                    };
                    raw.degree.push((degree + s as usize) as u32);
                    raw.label.push(if prefix.is_empty() {
                        name.clone()
                    } else {
                        format!("{prefix}({name})")
                    });
                    raw.fixed.push(false);
                    raw.j.push(ComplexBuilder::orbit_element(base, a + 1, s));
                    raw.s.push(if s == 0 {
                        vec![ComplexBuilder::orbit_element(base, 3 * a, 1)]
                    } else {
                        Vec::new()
                    });
                }
            }
            raw.generators.push(FreeGenerator {
                name,
                degree,
                vector: vec![base],
            });
            orbits.push((base, p, q));
            base
        };
    for (x, gen) in z1.generators.iter().enumerate() {
        let p = gen.vector[0];
        for q in 0..n2 {
            let name = format!("{}⊗{}", gen.name, z2.label[q as usize]);
            let base = push_orbit(
                &mut raw,
                name,
                gen.degree + z2.degree[q as usize] as usize,
                p,
                q,
            );
            left.insert((x, q), base);
        }
    }
    for &c in &fixed1 {
        for (y, gen) in z2.generators.iter().enumerate() {
            let name = format!("{}⊗{}", z1.label[c as usize], gen.name);
            let base = push_orbit(
                &mut raw,
                name,
                z1.degree[c as usize] as usize + gen.degree,
                c,
                gen.vector[0],
            );
            right.insert((c, y), base);
        }
    }
    let layout = TensorLayout {
        z1,
        z2,
        pos1: orbit_positions(z1),
        pos2: orbit_positions(z2),
        fixed_index,
        left,
        right,
    };
    raw.d = vec![Vec::new(); raw.degree.len()];
    for &a in &fixed1 {
        for &b in &fixed2 {
            raw.d[layout.fixed_index[&(a, b)] as usize] = layout.boundary(a, b);
        }
    }
    let mut f = Vec::new();
    for &a in &z1.fundamental {
        for &b in &z2.fundamental {
            layout.cell(a, b, &mut f);
        }
    }
    raw.fundamental = f;
    let generator_boundaries: Vec<SparseVec> = orbits
        .iter()
        .map(|&(_, p, q)| layout.boundary(p, q))
        .collect();
    let view = SwfComplex::from_raw(raw.clone());
    for (&(base, _, _), bd) in orbits.iter().zip(&generator_boundaries) {
        let s_bd = view.apply_s(bd);
        for a in 0..4u8 {
            raw.d[ComplexBuilder::orbit_element(base, a, 0) as usize] = view.apply_j(bd, a);
            // ∂(jᵃsx) = jᵃ(s∂x + x + j²x)
            let loop_terms = vec![
                ComplexBuilder::orbit_element(base, a, 0),
                ComplexBuilder::orbit_element(base, a + 2, 0),
            ];
            raw.d[ComplexBuilder::orbit_element(base, a, 1) as usize] =
                xor(&view.apply_j(&s_bd, a), &normalize(loop_terms));
        }
    }
    SwfComplex::from_raw(raw)
}

/// Tensor product of a list of complexes, folded from the left; the empty
/// product is the unit C(S⁰).
pub fn tensor_all(parts: &[SwfComplex]) -> SwfComplex {
    let mut iter = parts.iter();
    let Some(first) = iter.next() else {
        return make_fixed_complex(0);
    };
    iter.fold(first.clone(), |acc, z| tensor(&acc, z))
}

/// Formal desuspension (Z, m, n).
#[derive(Clone, Debug)]
pub struct Triple {
    pub complex: SwfComplex,
    pub m: i64,
    pub n: Rational64,
}

impl Triple {
    pub fn new(complex: SwfComplex, m: i64, n: Rational64) -> Self {
        Triple { complex, m, n }
    }

    /// Tensor product of triples: complexes tensor, m and n add.
    pub fn tensor(&self, other: &Triple) -> Triple {
        Triple {
            complex: tensor(&self.complex, &other.complex),
            m: self.m + other.m,
            n: self.n + other.n,
        }
    }
}
