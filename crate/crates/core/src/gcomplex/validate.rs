use super::complex::SwfComplex;
use crate::f2linalg::sparse::{normalize, sparse_rank, xor, SparseVec};
use crate::f2linalg::{homology_dim, in_image, BitVec, F2Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Structured result of [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub checks: Vec<Check>,
}

impl Diagnostics {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, name: &'static str, problems: Vec<String>) {
        let passed = problems.is_empty();
        let detail = if passed {
            "ok".to_string()
        } else {
            let mut s = problems
                .iter()
                .take(5)
                .cloned()
                .collect::<Vec<_>>()
                .join("; ");
            if problems.len() > 5 {
                s.push_str(&format!("; … {} more", problems.len() - 5));
            }
            s
        };
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }
}

fn vec_degree(z: &SwfComplex, v: &[u32]) -> Option<usize> {
    let first = z.degree(*v.first()? as usize);
    v.iter()
        .all(|&i| z.degree(i as usize) == first)
        .then_some(first)
}

/// Checks the axioms of a suspensionlike complex: ∂² = 0, the algebra
/// relations and Leibniz rule for the 𝒢-action, grading, freeness of the
/// free part, and that the fixed part has the homology of a sphere in degree
/// t generated by a j-invariant fundamental cycle.
pub fn validate(z: &SwfComplex) -> Diagnostics {
    let n = z.dim();
    let mut out = Collector { checks: Vec::new() };

    let mut grading = Vec::new();
    for i in 0..n {
        let deg = z.degree(i);
        if z.degree(z.j_of(i)) != deg {
            grading.push(format!("j·{} changes degree", z.label(i)));
        }
        if z.boundary_of(i)
            .iter()
            .any(|&k| z.degree(k as usize) + 1 != deg)
        {
            grading.push(format!(
                "∂{} = {} is not of degree {}",
                z.label(i),
                z.describe(z.boundary_of(i)),
                deg as i64 - 1
            ));
        }
        if z.s_of(i).iter().any(|&k| z.degree(k as usize) != deg + 1) {
            grading.push(format!("s·{} is not of degree {}", z.label(i), deg + 1));
        }
    }
    match vec_degree(z, z.fundamental()) {
        Some(d) if d == z.level() => {}
        _ => grading.push(format!(
            "fundamental class is not homogeneous of degree {}",
            z.level()
        )),
    }
    for g in z.free_generators() {
        if vec_degree(z, &g.vector) != Some(g.degree) {
            grading.push(format!(
                "generator {} is not of degree {}",
                g.name, g.degree
            ));
        }
    }
    out.push("grading", grading);

    let mut dd = Vec::new();
    for i in 0..n {
        let v = z.apply_d(z.boundary_of(i));
        if !v.is_empty() {
            dd.push(format!("∂∂{} = {}", z.label(i), z.describe(&v)));
        }
    }
    out.push("d_squared", dd);

    let mut alg = Vec::new();
    let mut seen = vec![false; n];
    for i in 0..n {
        let ji = z.j_of(i);
        if ji >= n || seen[ji] {
            alg.push("j is not a permutation of the basis".to_string());
            break;
        }
        seen[ji] = true;
    }
    if alg.is_empty() {
        for i in 0..n {
            let e = [i as u32];
            if z.apply_j(&e, 4) != e {
                alg.push(format!("j⁴ ≠ 1 on {}", z.label(i)));
            }
            if !z.apply_s(z.s_of(i)).is_empty() {
                alg.push(format!("s² ≠ 0 on {}", z.label(i)));
            }
            // s(j x) = j³(s x)
            if z.apply_s(&z.apply_j(&e, 1)) != z.apply_j(z.s_of(i), 3) {
                alg.push(format!("sj ≠ j³s on {}", z.label(i)));
            }
        }
    }
    out.push("algebra_relations", alg.clone());

    let mut leibniz = Vec::new();
    if alg.is_empty() {
        for i in 0..n {
            let e = [i as u32];
            if z.apply_d(&z.apply_j(&e, 1)) != z.apply_j(z.boundary_of(i), 1) {
                leibniz.push(format!("∂j ≠ j∂ on {}", z.label(i)));
            }
            // ∂(sx) + s(∂x) = x + j²x
            let lhs = xor(&z.apply_d(z.s_of(i)), &z.apply_s(z.boundary_of(i)));
            let rhs = normalize(vec![i as u32, z.j_of(z.j_of(i)) as u32]);
            if lhs != rhs {
                leibniz.push(format!("∂s + s∂ ≠ 1 + j² on {}", z.label(i)));
            }
        }
    } else {
        leibniz.push("skipped: algebra relations fail".into());
    }
    out.push("leibniz", leibniz);

    let mut sub = Vec::new();
    for i in 0..n {
        if z.is_fixed(i) {
            if !z.is_fixed(z.j_of(i)) {
                sub.push(format!("j·{} leaves the fixed part", z.label(i)));
            }
            if !z.s_of(i).is_empty() {
                sub.push(format!("s·{} ≠ 0 on a fixed cell", z.label(i)));
            }
            if z.boundary_of(i).iter().any(|&k| !z.is_fixed(k as usize)) {
                sub.push(format!("∂{} leaves the fixed part", z.label(i)));
            }
        } else if z.is_fixed(z.j_of(i)) {
            sub.push(format!("j·{} enters the fixed part", z.label(i)));
        }
    }
    out.push("fixed_subcomplex", sub);

    out.push("free_part", freeness_problems(z));
    out.push("fixed_homology", fixed_homology_problems(z));

    let mut inv = Vec::new();
    let f = z.fundamental();
    if z.apply_j(f, 1) != *f {
        inv.push("j·f ≠ f".into());
    }
    if z.apply_j(f, 2) != *f {
        inv.push("j²·f ≠ f".into());
    }
    out.push("fundamental_invariant", inv);

    Diagnostics { checks: out.checks }
}

fn freeness_problems(z: &SwfComplex) -> Vec<String> {
    let n = z.dim();
    let free: Vec<usize> = (0..n).filter(|&i| !z.is_fixed(i)).collect();
    let mut local = vec![u32::MAX; n];
    for (k, &i) in free.iter().enumerate() {
        local[i] = k as u32;
    }
    let mut problems = Vec::new();
    let mut columns: Vec<SparseVec> = Vec::new();
    for g in z.free_generators() {
        let sg = z.apply_s(&g.vector);
        for a in 0..4u8 {
            for v in [z.apply_j(&g.vector, a), z.apply_j(&sg, a)] {
                if v.iter().any(|&i| z.is_fixed(i as usize)) {
                    problems.push(format!("orbit of {} meets the fixed part", g.name));
                }
                let mut col: Vec<u32> = v
                    .iter()
                    .map(|&i| local[i as usize])
                    .filter(|&k| k != u32::MAX)
                    .collect();
                col.sort_unstable();
                columns.push(col);
            }
        }
    }
    if columns.len() != free.len() {
        problems.push(format!(
            "{} orbit elements for a free part of dimension {}",
            columns.len(),
            free.len()
        ));
    } else if problems.is_empty() {
        let r = sparse_rank(free.len(), &columns);
        if r != free.len() {
            problems.push(format!(
                "orbit elements span only {r} of {} dimensions",
                free.len()
            ));
        }
    }
    problems
}

fn fixed_homology_problems(z: &SwfComplex) -> Vec<String> {
    let n = z.dim();
    let t = z.level();
    let fixed: Vec<usize> = (0..n).filter(|&i| z.is_fixed(i)).collect();
    let top = fixed.iter().map(|&i| z.degree(i)).max().unwrap_or(0);
    let mut by_deg: Vec<Vec<usize>> = vec![Vec::new(); top + 2];
    let mut local = vec![usize::MAX; n];
    for &i in &fixed {
        let d = z.degree(i);
        local[i] = by_deg[d].len();
        by_deg[d].push(i);
    }
    // boundary matrix from degree k to k − 1 within the fixed part
    let matrix = |k: usize| -> F2Matrix {
        let rows = if k == 0 { 0 } else { by_deg[k - 1].len() };
        let cols: Vec<Vec<usize>> = by_deg[k]
            .iter()
            .map(|&i| {
                z.boundary_of(i)
                    .iter()
                    .filter(|&&x| k > 0 && z.is_fixed(x as usize) && z.degree(x as usize) + 1 == k)
                    .map(|&x| local[x as usize])
                    .collect()
            })
            .collect();
        F2Matrix::from_sparse_columns(rows, &cols)
    };
    let mut problems = Vec::new();
    for k in 0..=top {
        match homology_dim(&matrix(k + 1), &matrix(k)) {
            Ok(h) => {
                let expected = usize::from(k == t);
                if h != expected {
                    problems.push(format!("fixed homology has dimension {h} in degree {k}"));
                }
            }
            Err(e) => problems.push(format!("degree {k}: {e}")),
        }
    }
    if t > top {
        problems.push(format!("fixed part has no cells in degree {t}"));
        return problems;
    }
    let f = z.fundamental();
    if f.iter()
        .any(|&i| !z.is_fixed(i as usize) || z.degree(i as usize) != t)
    {
        problems.push("fundamental class is not a fixed chain of degree t".into());
    } else if f.is_empty() {
        problems.push("fundamental class is zero".into());
    } else {
        if !z.apply_d(f).is_empty() {
            problems.push("fundamental class is not a cycle".into());
        }
        let v = BitVec::from_indices(by_deg[t].len(), f.iter().map(|&i| local[i as usize]));
        if in_image(&matrix(t + 1), &v).unwrap_or(true) {
            problems.push("fundamental class is a boundary".into());
        }
    }
    problems
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomplex::complex::{make_fixed_complex, make_t, quaternion_sphere, ComplexBuilder};

    #[test]
    fn model_complexes_validate() {
        for z in [
            make_fixed_complex(5),
            make_t(3, 2),
            make_t(1, 0),
            quaternion_sphere(),
        ] {
            let diag = validate(&z);
            assert!(diag.passed(), "{:?}", diag.failures());
        }
    }

    #[test]
    fn wrong_degree_boundary_is_a_grading_failure() {
        let mut b = ComplexBuilder::fixed(1);
        b.add_free("x1", 1, vec![0, 1]);
        let diag = validate(&b.build());
        assert!(!diag.check("grading").unwrap().passed);
    }

    #[test]
    fn broken_fundamental_class_is_caught() {
        let mut raw = make_fixed_complex(2).into_raw();
        raw.fundamental = vec![3];
        let diag = validate(&crate::gcomplex::SwfComplex::from_raw(raw));
        assert!(!diag.check("fundamental_invariant").unwrap().passed);
        assert!(!diag.check("fixed_homology").unwrap().passed);
    }
}
