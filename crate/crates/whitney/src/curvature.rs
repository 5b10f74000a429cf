//! Gauss-Bonnet curvatures and Poincaré-Hopf indices.
//!
//! For a linear valuation X with coefficients ψ the curvature at a vertex
//! is K(v) = Σ_k ψ(k)·V_{k-1}(v)/(k+1), where V_k(v) counts the
//! k-simplices of the unit sphere and V_{-1} = 1; the curvatures sum to
//! X(G) exactly. Multi-linear valuations get a curvature by giving every
//! simplex its total interaction weight and distributing that weight
//! equally to the simplex's vertices; the result depends only on the ball
//! of radius two. Poincaré-Hopf indices use the sublevel sets of an
//! injective vertex function; the quadratic Wu index is the four-term
//! intersection-number combination of sublevel balls and spheres of a
//! vertex pair, pushed to vertices by row sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::complex::{whitney, Scratch};
use crate::graph::{Graph, VertexFunction};
use crate::rng::SplitMix64;
use crate::valuation::{wu_intersection, Valuation};
use crate::{Error, Limits, Result};

/// What a vertex field carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Curvature,
    Index,
    Expectation,
}

/// One exact rational per vertex; sums are exact.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexField {
    kind: FieldKind,
    values: Vec<BigRational>,
}

impl VertexField {
    pub fn new(kind: FieldKind, values: Vec<BigRational>) -> Self {
        VertexField { kind, values }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, v: u32) -> &BigRational {
        &self.values[v as usize]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> BigRational {
        self.values.iter().sum()
    }

    /// Rows of `{"vertex": v, "value": "p/q"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.values
                .iter()
                .enumerate()
                .map(|(v, x)| {
                    serde_json::json!({ "vertex": v, "value": rational_str(x) })
                })
                .collect(),
        )
    }
}

/// "p/q" for true fractions, plain decimal string for integers.
pub fn rational_str(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn big(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// Gauss-Bonnet curvature of a linear valuation:
/// K(v) = Σ_k ψ(k) V_{k-1}(v)/(k+1). Σ_v K(v) = X(G) exactly.
pub fn curvature_linear(g: &Graph, x: &Valuation) -> Result<VertexField> {
    let limits = Limits::default();
    let cx = whitney(g, None, &limits)?;
    if cx.clique_number() > x.len() {
        return Err(Error::ValuationTooShort {
            len: x.len(),
            clique: cx.clique_number(),
        });
    }
    let psi = x.coefficients();
    let mut values = Vec::with_capacity(g.n());
    for v in 0..g.n() as u32 {
        let sphere = g.unit_sphere(v)?;
        let sphere_f = whitney(&sphere, None, &limits)?.f_vector();
        // k = 0 term: ψ(0)·V_{-1}/1 = ψ(0)
        let mut k_v = BigRational::from(psi[0].clone());
        for (k, coeff) in psi.iter().enumerate().skip(1) {
            let count = sphere_f.get(k - 1).copied().unwrap_or(0);
            if count != 0 && !coeff.is_zero() {
                k_v += BigRational::new(coeff * BigInt::from(count), BigInt::from(k as i64 + 1));
            }
        }
        values.push(k_v);
    }
    Ok(VertexField::new(FieldKind::Curvature, values))
}

/// Tail sum over (len)-tuples with a running common intersection seeded by
/// `inter`: Σ over tuples of the product of their signatures.
fn interaction_tail(
    cx: &crate::complex::WhitneyComplex,
    inter: &[u32],
    len: usize,
    scratches: &mut [Scratch],
    tuples: &mut u64,
) -> i64 {
    let (scratch, rest) = scratches.split_first_mut().unwrap();
    scratch.collect_meeting(cx, inter);
    if len == 1 {
        *tuples += scratch.buf.len() as u64;
        return scratch.buf.iter().map(|&y| cx.sign_of(y as usize)).sum();
    }
    let candidates = std::mem::take(&mut scratch.buf);
    let mut total = 0i64;
    let mut next = Vec::new();
    for &y in &candidates {
        crate::complex::intersect_sorted(inter, cx.verts_of(y as usize), &mut next);
        total += cx.sign_of(y as usize) * interaction_tail(cx, &next, len - 1, rest, tuples);
    }
    scratch.buf = candidates;
    total
}

/// Wu curvature of order k: each simplex x receives the sum of signature
/// products over (k-1)-tuples meeting x in a common vertex, and the weight
/// is split equally among the vertices of x. Sums to ω_k(G) exactly and
/// depends only on the radius-2 ball of the vertex.
pub fn curvature_wu(g: &Graph, k: usize, limits: &Limits) -> Result<VertexField> {
    if k < 2 {
        return Err(Error::InvalidParam("wu curvature starts at order 2".into()));
    }
    let cx = whitney(g, None, limits)?;
    let m = cx.len();
    let ids: Vec<usize> = (0..m).collect();
    let kappa: Result<Vec<Vec<(usize, i64)>>> = ids
        .par_chunks(256)
        .map(|chunk| {
            let mut scratches: Vec<Scratch> = (0..k - 1).map(|_| Scratch::new(m)).collect();
            let mut out = Vec::with_capacity(chunk.len());
            let mut tuples = 0u64;
            for &x in chunk {
                let total =
                    interaction_tail(&cx, cx.verts_of(x), k - 1, &mut scratches, &mut tuples);
                if tuples > limits.max_tuples {
                    return Err(Error::CapExceeded {
                        what: "ordered tuple count",
                        limit: limits.max_tuples,
                    });
                }
                out.push((x, cx.sign_of(x) * total));
            }
            Ok(out)
        })
        .collect();

    let mut values = vec![BigRational::zero(); g.n()];
    for part in kappa? {
        for (x, w) in part {
            if w == 0 {
                continue;
            }
            let share = BigRational::new(BigInt::from(w), BigInt::from(cx.dim_of(x) as i64 + 1));
            for &v in cx.verts_of(x) {
                values[v as usize] += &share;
            }
        }
    }
    Ok(VertexField::new(FieldKind::Curvature, values))
}

/// Closed-form quadratic Wu curvature for triangle-free graphs:
/// K(v) = 1 - 5d/2 + d²/2 + Σ_i d_i/2 with d the degree of v and d_i the
/// degrees of its neighbors. Agrees with [`curvature_wu`] vertexwise.
pub fn trianglefree_wu_curvature(g: &Graph) -> Result<VertexField> {
    if let Some(v) = g.has_triangle() {
        return Err(Error::TriangleFound { v });
    }
    let mut values = Vec::with_capacity(g.n());
    for v in 0..g.n() as u32 {
        let d = g.degree(v) as i64;
        let nbr_sum: i64 = g.neighbors(v).iter().map(|&w| g.degree(w) as i64).sum();
        let k = big(2) - big(5 * d) + big(d * d) + big(nbr_sum);
        values.push(k / big(2));
    }
    Ok(VertexField::new(FieldKind::Curvature, values))
}

/// The sublevel vertex sets of `f` at `v`: strict sphere part
/// {w ∈ S(v) | f(w) < f(v)} and the ball part with `v` included.
fn sublevel(g: &Graph, f: &VertexFunction, v: u32) -> (Vec<u32>, Vec<u32>) {
    let mut sphere: Vec<u32> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| f.value(w) < f.value(v))
        .collect();
    sphere.sort_unstable();
    let mut ball = sphere.clone();
    ball.push(v);
    ball.sort_unstable();
    (sphere, ball)
}

fn eval_on_subset(g: &Graph, set: &[u32], x: &Valuation) -> Result<BigInt> {
    let (sub, _) = g.induced(set)?;
    let cx = whitney(&sub, None, &Limits::default())?;
    x.apply(&cx.f_vector())
}

/// Poincaré-Hopf index of a linear valuation:
/// i(v) = X(B⁻(v)) − X(S⁻(v)). Σ_v i(v) = X(G).
pub fn index_linear(g: &Graph, x: &Valuation, f: &VertexFunction) -> Result<VertexField> {
    if f.len() != g.n() {
        return Err(Error::InvalidParam(format!(
            "vertex function has length {}, graph has {} vertices",
            f.len(),
            g.n()
        )));
    }
    f.check_injective()?;
    let mut values = Vec::with_capacity(g.n());
    for v in 0..g.n() as u32 {
        let (sphere, ball) = sublevel(g, f, v);
        let i = eval_on_subset(g, &ball, x)? - eval_on_subset(g, &sphere, x)?;
        values.push(BigRational::from(i));
    }
    Ok(VertexField::new(FieldKind::Index, values))
}

/// The quadratic Wu index matrix
/// i_f(v,w) = ω(B⁻v,B⁻w) − ω(B⁻v,S⁻w) − ω(S⁻v,B⁻w) + ω(S⁻v,S⁻w),
/// including the diagonal. Symmetric, zero beyond graph distance two, and
/// the grand total is ω(G).
pub fn wu_index_matrix(g: &Graph, f: &VertexFunction, limits: &Limits) -> Result<Vec<Vec<i64>>> {
    if f.len() != g.n() {
        return Err(Error::InvalidParam(format!(
            "vertex function has length {}, graph has {} vertices",
            f.len(),
            g.n()
        )));
    }
    f.check_injective()?;
    let n = g.n();
    let subs: Vec<(Vec<u32>, Vec<u32>)> = (0..n as u32).map(|v| sublevel(g, f, v)).collect();
    let rows: Result<Vec<Vec<i64>>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let dist = g.distances(v as u32)?;
            let (sv, bv) = &subs[v];
            let mut row = vec![0i64; n];
            for w in 0..n {
                if dist[w] > 2 {
                    continue;
                }
                let (sw, bw) = &subs[w];
                row[w] = wu_intersection(g, bv, bw, limits)?
                    - wu_intersection(g, bv, sw, limits)?
                    - wu_intersection(g, sv, bw, limits)?
                    + wu_intersection(g, sv, sw, limits)?;
            }
            Ok(row)
        })
        .collect();
    rows
}

/// Scalar Wu indices: the row sums of the index matrix. Σ_v = ω(G).
pub fn wu_index(g: &Graph, f: &VertexFunction, limits: &Limits) -> Result<VertexField> {
    let m = wu_index_matrix(g, f, limits)?;
    Ok(VertexField::new(
        FieldKind::Index,
        m.iter()
            .map(|row| BigRational::from(BigInt::from(row.iter().sum::<i64>())))
            .collect(),
    ))
}

/// Exact index expectation: the average of [`index_linear`] over all n!
/// vertex orderings (indices depend only on relative order, so rankings
/// exhaust the probability space). For the Euler valuation this equals the
/// Euler curvature vertexwise.
pub fn index_expectation_exact(g: &Graph, x: &Valuation) -> Result<VertexField> {
    let n = g.n();
    if n > 9 {
        return Err(Error::InvalidParam(format!(
            "exhaustive expectation enumerates n! orderings; n = {n} > 9. \
             Use index_expectation_mc instead"
        )));
    }
    if n == 0 {
        return Ok(VertexField::new(FieldKind::Expectation, Vec::new()));
    }
    let mut sums = vec![BigInt::zero(); n];
    let mut count = BigInt::zero();
    let accumulate = |perm: &[u32], sums: &mut [BigInt], count: &mut BigInt| -> Result<()> {
        let mut ranks = vec![0u32; n];
        for (i, &p) in perm.iter().enumerate() {
            ranks[p as usize] = i as u32;
        }
        let f = VertexFunction::from_ranks(&ranks);
        let idx = index_linear(g, x, &f)?;
        for (s, v) in sums.iter_mut().zip(idx.values()) {
            *s += v.numer();
        }
        *count += 1;
        Ok(())
    };
    // Heap's algorithm over vertex permutations
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut c = vec![0usize; n];
    accumulate(&perm, &mut sums, &mut count)?;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            accumulate(&perm, &mut sums, &mut count)?;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(VertexField::new(
        FieldKind::Expectation,
        sums.into_iter()
            .map(|s| BigRational::new(s, count.clone()))
            .collect(),
    ))
}

/// What to average in a Monte Carlo expectation run.
#[derive(Debug, Clone)]
pub enum McTarget {
    Linear(Valuation),
    WuOrder(usize),
}

/// A float-valued sampling report. Means come with standard errors; no
/// exact identity is asserted for multi-linear targets.
#[derive(Debug, Clone)]
pub struct McReport {
    pub means: Vec<f64>,
    pub stderr: Vec<f64>,
    pub samples: u64,
    pub seed: u64,
}

impl McReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "samples": self.samples,
            "seed": self.seed,
            "rows": self.means.iter().zip(&self.stderr).enumerate().map(|(v, (m, e))| {
                serde_json::json!({ "vertex": v, "mean": m, "stderr": e })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Monte Carlo index expectation over uniformly random vertex orderings.
/// Sample i draws its ordering from the i-th substream of the master seed,
/// so the report does not depend on threading or chunking.
pub fn index_expectation_mc(
    g: &Graph,
    target: &McTarget,
    samples: u64,
    seed: u64,
    limits: &Limits,
) -> Result<McReport> {
    if samples == 0 {
        return Err(Error::InvalidParam("need at least one sample".into()));
    }
    let n = g.n();
    // exact integer accumulation; floats only in the report
    let mut sum = vec![0i128; n];
    let mut sum_sq = vec![0i128; n];
    for i in 0..samples {
        let mut rng = SplitMix64::substream(seed, i);
        let f = VertexFunction::random_order(n, &mut rng);
        let field = match target {
            McTarget::Linear(x) => index_linear(g, x, &f)?,
            McTarget::WuOrder(2) => wu_index(g, &f, limits)?,
            McTarget::WuOrder(k) => {
                return Err(Error::InvalidParam(format!(
                    "monte carlo wu index supports order 2, got {k}"
                )))
            }
        };
        for (v, x) in field.values().iter().enumerate() {
            let xi = x
                .to_integer()
                .to_i128()
                .ok_or_else(|| Error::InvalidParam("index overflow".into()))?;
            sum[v] += xi;
            sum_sq[v] += xi * xi;
        }
    }
    let s = samples as f64;
    let means: Vec<f64> = sum.iter().map(|&x| x as f64 / s).collect();
    let stderr: Vec<f64> = sum
        .iter()
        .zip(&sum_sq)
        .map(|(&a, &b)| {
            if samples < 2 {
                return f64::NAN;
            }
            let mean = a as f64 / s;
            let var = (b as f64 - s * mean * mean) / (s - 1.0);
            (var.max(0.0) / s).sqrt()
        })
        .collect();
    Ok(McReport {
        means,
        stderr,
        samples,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete, complete_bipartite, cross_polytope, cycle, generate, hypercube, path, wheel,
        Family,
    };
    use crate::valuation::{wu, wu_of_graph};

    fn lim() -> Limits {
        Limits::default()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn icosahedron_curvatures() {
        let g = generate(&Family::Icosahedron).unwrap();
        let k = curvature_linear(&g, &Valuation::euler(3)).unwrap();
        assert!(k.values().iter().all(|x| *x == rat(1, 6)));
        let vol = curvature_linear(&g, &Valuation::volume(3)).unwrap();
        assert!(vol.values().iter().all(|x| *x == rat(5, 3)));
        assert_eq!(vol.total(), rat(20, 1));
    }

    #[test]
    fn cycle_euler_curvature_vanishes() {
        let g = cycle(7).unwrap();
        let k = curvature_linear(&g, &Valuation::euler(2)).unwrap();
        assert!(k.values().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn gauss_bonnet_linear_on_random_graphs() {
        for seed in 0..20 {
            let g = crate::graph::erdos_renyi(9, 0.45, seed).unwrap();
            let cx = whitney(&g, None, &lim()).unwrap();
            let c = cx.clique_number().max(1);
            for i in 0..c {
                let x = Valuation::vk(i, c).unwrap();
                let k = curvature_linear(&g, &x).unwrap();
                assert_eq!(
                    k.total(),
                    BigRational::from(x.apply(&cx.f_vector()).unwrap())
                );
            }
        }
    }

    #[test]
    fn wu_curvature_of_cube_and_tesseract() {
        let cube = hypercube(3).unwrap();
        let k = curvature_wu(&cube, 2, &lim()).unwrap();
        assert!(k.values().iter().all(|x| *x == rat(5, 2)));
        assert_eq!(k.total(), rat(20, 1));

        let tess = hypercube(4).unwrap();
        let k = curvature_wu(&tess, 2, &lim()).unwrap();
        assert!(k.values().iter().all(|x| *x == rat(7, 1)));
        assert_eq!(k.total(), rat(112, 1));
    }

    #[test]
    fn wheel_wu_curvature_sits_at_the_hub() {
        let g = wheel(6).unwrap(); // hub is vertex 6
        let k = curvature_wu(&g, 2, &lim()).unwrap();
        for v in 0..6 {
            assert!(k.value(v).is_zero(), "rim vertex {v}");
        }
        assert_eq!(*k.value(6), rat(1, 1));
    }

    #[test]
    fn gauss_bonnet_wu_orders_two_and_three() {
        for seed in 0..10 {
            let g = crate::graph::erdos_renyi(8, 0.4, seed).unwrap();
            for k in [2usize, 3] {
                let field = curvature_wu(&g, k, &lim()).unwrap();
                let total = wu_of_graph(&g, k, &lim()).unwrap();
                assert_eq!(field.total(), rat(total, 1), "seed {seed} order {k}");
            }
        }
    }

    #[test]
    fn gauss_bonnet_extends_to_order_four() {
        for g in [
            generate(&Family::Figure8).unwrap(),
            generate(&Family::Kite).unwrap(),
            crate::graph::erdos_renyi(7, 0.45, 2).unwrap(),
        ] {
            let field = curvature_wu(&g, 4, &lim()).unwrap();
            let total = wu_of_graph(&g, 4, &lim()).unwrap();
            assert_eq!(field.total(), rat(total, 1), "{g:?}");
        }
    }

    #[test]
    fn trianglefree_closed_form_matches() {
        for g in [
            hypercube(3).unwrap(),
            complete_bipartite(3, 3).unwrap(),
            generate(&Family::Figure8).unwrap(),
            path(5).unwrap(),
            generate(&Family::Dodecahedron).unwrap(),
        ] {
            let closed = trianglefree_wu_curvature(&g).unwrap();
            let general = curvature_wu(&g, 2, &lim()).unwrap();
            assert_eq!(closed.values(), general.values());
        }
        assert_eq!(
            trianglefree_wu_curvature(&complete_bipartite(3, 3).unwrap())
                .unwrap()
                .total(),
            rat(15, 1)
        );
        assert!(matches!(
            trianglefree_wu_curvature(&complete(3).unwrap()),
            Err(Error::TriangleFound { .. })
        ));
    }

    #[test]
    fn path_wu_curvature_totals_minus_one() {
        for n in 2..=6 {
            let g = path(n).unwrap();
            let k = trianglefree_wu_curvature(&g).unwrap();
            assert_eq!(k.total(), rat(-1, 1), "path P_{n}");
            if n >= 4 {
                // endpoint and next-to-endpoint differ
                assert_ne!(k.value(0), k.value(1));
            }
        }
    }

    #[test]
    fn index_on_a_path() {
        let g = path(3).unwrap();
        let f = VertexFunction::from_ranks(&[0, 1, 2]);
        let idx = index_linear(&g, &Valuation::euler(2), &f).unwrap();
        assert_eq!(idx.values(), &[rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(idx.total(), rat(1, 1));

        let one = complete(1).unwrap();
        let idx = index_linear(&one, &Valuation::euler(1), &VertexFunction::identity(1)).unwrap();
        assert_eq!(idx.values(), &[rat(1, 1)]);
    }

    #[test]
    fn poincare_hopf_on_random_graphs() {
        let mut rng = SplitMix64::new(99);
        for seed in 0..15 {
            let g = crate::graph::erdos_renyi(9, 0.4, seed).unwrap();
            let cx = whitney(&g, None, &lim()).unwrap();
            let f = VertexFunction::random_order(g.n(), &mut rng);
            let x = Valuation::euler(cx.clique_number().max(1));
            let idx = index_linear(&g, &x, &f).unwrap();
            assert_eq!(idx.total(), rat(cx.euler_characteristic(), 1));
        }
    }

    #[test]
    fn non_injective_functions_are_rejected() {
        let g = path(3).unwrap();
        let f = VertexFunction::from_ranks(&[0, 0, 1]);
        assert!(matches!(
            index_linear(&g, &Valuation::euler(2), &f),
            Err(Error::NonInjective { .. })
        ));
        assert!(wu_index_matrix(&g, &f, &lim()).is_err());
    }

    #[test]
    fn single_vertex_wu_index_matrix() {
        let g = complete(1).unwrap();
        let f = VertexFunction::identity(1);
        assert_eq!(wu_index_matrix(&g, &f, &lim()).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn house_wu_index_matrix() {
        let g = generate(&Family::House).unwrap();
        let f = VertexFunction::identity(5);
        let m = wu_index_matrix(&g, &f, &lim()).unwrap();
        assert_eq!(
            m,
            vec![
                vec![1, -1, 0, -1, 0],
                vec![-1, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1],
                vec![-1, 1, 0, 1, 0],
                vec![0, 0, 1, 0, 0],
            ]
        );
        let idx = wu_index(&g, &f, &lim()).unwrap();
        let want: Vec<BigRational> = [-1, 0, 1, 1, 1].iter().map(|&x| rat(x, 1)).collect();
        assert_eq!(idx.values(), &want[..]);
        assert_eq!(idx.total(), rat(2, 1));
    }

    #[test]
    fn icosahedron_wu_indices() {
        let g = generate(&Family::Icosahedron).unwrap();
        let f = VertexFunction::identity(12);
        let idx = wu_index(&g, &f, &lim()).unwrap();
        let want: Vec<BigRational> = [1, 0, 0, 0, 0, 0, 1, -1, -1, 0, 1, 1]
            .iter()
            .map(|&x| rat(x, 1))
            .collect();
        assert_eq!(idx.values(), &want[..]);
        assert_eq!(idx.total(), rat(2, 1));
    }

    #[test]
    fn k2_wu_index_total() {
        let g = complete(2).unwrap();
        let f = VertexFunction::from_ranks(&[0, 1]);
        let idx = wu_index(&g, &f, &lim()).unwrap();
        assert_eq!(idx.total(), rat(-1, 1));
    }

    #[test]
    fn index_matrix_is_symmetric_and_local() {
        let g = crate::graph::erdos_renyi(8, 0.35, 3).unwrap();
        let f = VertexFunction::identity(8);
        let m = wu_index_matrix(&g, &f, &lim()).unwrap();
        let cx = whitney(&g, None, &lim()).unwrap();
        let total: i64 = m.iter().flatten().sum();
        assert_eq!(total, wu(&cx, 2, &lim()).unwrap());
        for v in 0..8u32 {
            let dist = g.distances(v).unwrap();
            for w in 0..8usize {
                assert_eq!(m[v as usize][w], m[w][v as usize]);
                if dist[w] > 2 {
                    assert_eq!(m[v as usize][w], 0);
                }
            }
        }
    }

    #[test]
    fn expectation_equals_curvature_for_euler() {
        // C_4: both vanish
        let g = cycle(4).unwrap();
        let e = index_expectation_exact(&g, &Valuation::euler(2)).unwrap();
        assert!(e.values().iter().all(|x| x.is_zero()));

        // K_3: constant 1/3
        let g = complete(3).unwrap();
        let e = index_expectation_exact(&g, &Valuation::euler(3)).unwrap();
        assert!(e.values().iter().all(|x| *x == rat(1, 3)));

        // house: (0, -1/6, -1/6, 0, 1/3)
        let g = generate(&Family::House).unwrap();
        let e = index_expectation_exact(&g, &Valuation::euler(3)).unwrap();
        let want = [rat(0, 1), rat(-1, 6), rat(-1, 6), rat(0, 1), rat(1, 3)];
        assert_eq!(e.values(), &want[..]);
        let k = curvature_linear(&g, &Valuation::euler(3)).unwrap();
        assert_eq!(e.values(), k.values());
    }

    #[test]
    fn expectation_rejects_large_graphs() {
        let g = cycle(12).unwrap();
        assert!(index_expectation_exact(&g, &Valuation::euler(2)).is_err());
    }

    #[test]
    fn mc_expectation_is_deterministic_and_sane() {
        let g = cycle(6).unwrap();
        let t = McTarget::Linear(Valuation::euler(2));
        let a = index_expectation_mc(&g, &t, 2000, 7, &lim()).unwrap();
        let b = index_expectation_mc(&g, &t, 2000, 7, &lim()).unwrap();
        assert_eq!(a.means, b.means);
        // true mean is 0 at every vertex
        for (m, e) in a.means.iter().zip(&a.stderr) {
            assert!(m.abs() <= 4.0 * e.max(1e-9), "mean {m} stderr {e}");
        }
    }

    #[test]
    fn mc_expectation_tracks_curvature_on_the_icosahedron() {
        let g = generate(&Family::Icosahedron).unwrap();
        let t = McTarget::Linear(Valuation::euler(3));
        let r = index_expectation_mc(&g, &t, 3000, 11, &lim()).unwrap();
        for (m, e) in r.means.iter().zip(&r.stderr) {
            assert!((m - 1.0 / 6.0).abs() <= 4.0 * e.max(1e-9));
        }
    }

    #[test]
    fn d_graph_wu_curvature_is_euler_curvature() {
        for g in [
            cross_polytope(2).unwrap(),
            generate(&Family::Icosahedron).unwrap(),
            cross_polytope(3).unwrap(),
        ] {
            let cx = whitney(&g, None, &lim()).unwrap();
            let e = curvature_linear(&g, &Valuation::euler(cx.clique_number())).unwrap();
            let w = curvature_wu(&g, 2, &lim()).unwrap();
            assert_eq!(e.values(), w.values());
        }
    }
}
