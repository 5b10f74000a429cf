//! Linear valuations, Wu characteristics and intersection numbers.
//!
//! A linear valuation is a coefficient vector ψ against the f-vector:
//! X(G) = ψ · v(G). The Wu characteristic of order k sums the product of
//! simplex signatures over all ordered k-tuples of simplices with a
//! nonempty common intersection; order 1 is the Euler characteristic.
//! Everything here is exact integer or rational arithmetic.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::{
    cliques_within, intersects_sorted, pair_scan, tuple_scan, whitney, WhitneyComplex,
};
use crate::graph::Graph;
use crate::{Error, Limits, Result};

/// A linear valuation: exact integer coefficients indexed by dimension,
/// with a display name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    name: String,
    coeffs: Vec<BigInt>,
}

impl Valuation {
    pub fn new(name: impl Into<String>, coeffs: Vec<BigInt>) -> Self {
        Valuation {
            name: name.into(),
            coeffs,
        }
    }

    pub fn from_i64(name: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(name, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Euler vector (1, -1, 1, ..., ±1) of length c.
    pub fn euler(c: usize) -> Self {
        Self::new(
            "euler",
            (0..c)
                .map(|k| if k % 2 == 0 { BigInt::one() } else { -BigInt::one() })
                .collect(),
        )
    }

    /// Volume (0, ..., 0, 1): counts the top-dimensional simplices.
    pub fn volume(c: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); c];
        if c > 0 {
            coeffs[c - 1] = BigInt::one();
        }
        Self::new("volume", coeffs)
    }

    /// The basis functional v_i, padded to length c.
    pub fn vk(i: usize, c: usize) -> Result<Self> {
        if i >= c {
            return Err(Error::InvalidParam(format!(
                "vk index {i} out of range for clique number {c}"
            )));
        }
        let mut coeffs = vec![BigInt::zero(); c];
        coeffs[i] = BigInt::one();
        Ok(Self::new(format!("v{i}"), coeffs))
    }

    pub fn custom(coeffs: Vec<BigInt>) -> Self {
        Self::new("custom", coeffs)
    }

    /// Barycentric eigenvector χ_k at clique number c (1-based k),
    /// normalized so the first nonzero entry is positive.
    pub fn bary(k: usize, c: usize) -> Result<Self> {
        let basis = crate::barycentric::bary_eigenvectors(c)?;
        if k == 0 || k > c {
            return Err(Error::InvalidParam(format!(
                "bary index {k} out of range for clique number {c}"
            )));
        }
        Ok(Self::new(format!("bary:{k}@{c}"), basis[k - 1].clone()))
    }

    /// Dehn-Sommerville vector d_k at clique number c (k = -1 gives the
    /// Euler vector up to normalization).
    pub fn ds(k: i64, c: usize) -> Result<Self> {
        let v = crate::barycentric::ds_vector(k, c)?;
        Ok(Self::new(format!("ds:{k}@{c}"), v.coefficients().to_vec()))
    }

    /// Parse the CLI mini-language:
    /// `euler | volume | vk:i | bary:k | ds:k | custom:1,-1,1`,
    /// instantiated at clique number `c`.
    pub fn parse_spec(spec: &str, c: usize) -> Result<Self> {
        let bad = |m: String| Error::InvalidParam(m);
        match spec {
            "euler" => return Ok(Self::euler(c)),
            "volume" => return Ok(Self::volume(c)),
            _ => {}
        }
        if let Some(rest) = spec.strip_prefix("vk:") {
            let i: usize = rest
                .parse()
                .map_err(|_| bad(format!("bad vk index {rest:?}")))?;
            return Self::vk(i, c);
        }
        if let Some(rest) = spec.strip_prefix("bary:") {
            let k: usize = rest
                .parse()
                .map_err(|_| bad(format!("bad bary index {rest:?}")))?;
            return Self::bary(k, c);
        }
        if let Some(rest) = spec.strip_prefix("ds:") {
            let k: i64 = rest
                .parse()
                .map_err(|_| bad(format!("bad ds index {rest:?}")))?;
            return Self::ds(k, c);
        }
        if let Some(rest) = spec.strip_prefix("custom:") {
            let coeffs: Result<Vec<BigInt>> = rest
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<BigInt>()
                        .map_err(|_| bad(format!("bad coefficient {s:?}")))
                })
                .collect();
            return Ok(Self::custom(coeffs?));
        }
        Err(bad(format!("unknown valuation spec {spec:?}")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// ψ · v for an f-vector. The f-vector may be shorter than ψ (it is
    /// zero-extended); a graph with larger clique number than ψ covers is
    /// rejected.
    pub fn apply(&self, f_vector: &[i64]) -> Result<BigInt> {
        if f_vector.len() > self.coeffs.len() {
            return Err(Error::ValuationTooShort {
                len: self.coeffs.len(),
                clique: f_vector.len(),
            });
        }
        Ok(f_vector
            .iter()
            .zip(&self.coeffs)
            .map(|(&v, c)| c * BigInt::from(v))
            .sum())
    }
}

/// Evaluate a valuation on a graph's Whitney complex.
pub fn evaluate(cx: &WhitneyComplex, x: &Valuation) -> Result<BigInt> {
    x.apply(&cx.f_vector())
}

/// Euler characteristic alias: wu(G, 1).
pub fn euler_characteristic(cx: &WhitneyComplex) -> i64 {
    cx.euler_characteristic()
}

/// The Wu characteristic of order k:
/// ω_k(G) = Σ σ(x_1)...σ(x_k) over ordered k-tuples with
/// x_1 ∩ ... ∩ x_k ≠ ∅. ω_1 is the Euler characteristic; the sum over an
/// empty complex is 0.
///
/// On cycles, ω(C_n) = 0 for n ≥ 4; the triangle C_3 is the simplex K_3
/// with ω = 1, like every odd-dimensional complete graph's ±1.
pub fn wu(cx: &WhitneyComplex, k: usize, limits: &Limits) -> Result<i64> {
    if k == 0 {
        return Err(Error::InvalidParam("wu order must be at least 1".into()));
    }
    if k == 1 {
        return Ok(cx.euler_characteristic());
    }
    if cx.is_empty() {
        return Ok(0);
    }
    if k == 2 {
        let (total, _) = pair_scan(
            cx,
            limits,
            || 0i64,
            |acc, x, y| *acc += cx.sign_of(x) * cx.sign_of(y),
            |a, b| a + b,
            0i64,
        )?;
        return Ok(total);
    }
    // tuple_scan threads the product of all signatures, first included
    let (sum, _) = tuple_scan(
        cx,
        k,
        limits,
        || 0i64,
        |acc, _first, _dims, sign| *acc += sign,
        |a, b| a + b,
        0i64,
    )?;
    Ok(sum)
}

/// The first K Wu characteristics (ω_1, ..., ω_K).
pub fn wu_function(cx: &WhitneyComplex, kmax: usize, limits: &Limits) -> Result<Vec<i64>> {
    (1..=kmax).map(|k| wu(cx, k, limits)).collect()
}

/// The intersection number ω(A, B): the Wu pairing of the simplices of
/// the subgraph generated by A against those generated by B, intersections
/// taken inside the ambient graph.
pub fn wu_intersection(g: &Graph, a: &[u32], b: &[u32], limits: &Limits) -> Result<i64> {
    let sa = cliques_within(g, a, limits)?;
    let sb = cliques_within(g, b, limits)?;
    // star index over B-cliques, so only meeting pairs are visited
    let mut star: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for (j, s) in sb.iter().enumerate() {
        for &v in s.vertices() {
            star[v as usize].push(j as u32);
        }
    }
    let mut stamp = vec![usize::MAX; sb.len()];
    let mut pairs = 0u64;
    let mut total = 0i64;
    for (i, x) in sa.iter().enumerate() {
        let mut s = 0i64;
        for &v in x.vertices() {
            for &j in &star[v as usize] {
                if stamp[j as usize] != i {
                    stamp[j as usize] = i;
                    pairs += 1;
                    s += sb[j as usize].signature();
                }
            }
        }
        if pairs > limits.max_tuples {
            return Err(Error::CapExceeded {
                what: "ordered pair count",
                limit: limits.max_tuples,
            });
        }
        total += x.signature() * s;
    }
    Ok(total)
}

/// The Stanley-Reisner route to the quadratic Wu characteristic:
/// ω(G) = f_G(-1)² − (f_G²)(-1), evaluated by enumerating ordered
/// *disjoint* pairs of simplices. An independent code path from [`wu`],
/// kept quadratic on purpose so the two sides of the identity do not
/// share their enumeration.
pub fn wu_algebraic(cx: &WhitneyComplex, limits: &Limits) -> Result<i64> {
    let m = cx.len();
    let total_pairs = (m as u64) * (m as u64);
    if total_pairs > limits.max_tuples {
        return Err(Error::CapExceeded {
            what: "ordered pair count",
            limit: limits.max_tuples,
        });
    }
    let chi = cx.euler_characteristic();
    let mut disjoint = 0i64;
    for x in 0..m {
        let vx = cx.verts_of(x);
        for y in 0..m {
            if !intersects_sorted(vx, cx.verts_of(y)) {
                disjoint += cx.sign_of(x) * cx.sign_of(y);
            }
        }
    }
    Ok(chi * chi - disjoint)
}

/// Exact expectation of the Euler characteristic on the Erdős–Rényi space
/// G(n, p): Σ_{k=1..n} (-1)^{k+1} C(n, k) p^{C(k, 2)}.
pub fn expected_euler(n: usize, p: &BigRational) -> Result<BigRational> {
    if p < &BigRational::zero() || p > &BigRational::one() {
        return Err(Error::InvalidParam(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut sum = BigRational::zero();
    for k in 1..=n {
        let c: BigInt = binomial(BigInt::from(n), BigInt::from(k));
        let e = k * (k - 1) / 2;
        let mut term = BigRational::from(c);
        // p^C(k,2) by repeated squaring is overkill at these sizes
        let mut pw = BigRational::one();
        for _ in 0..e {
            pw *= p;
        }
        term *= pw;
        if k % 2 == 0 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    Ok(sum)
}

/// Convenience: build the complex and return ω_k(G).
pub fn wu_of_graph(g: &Graph, k: usize, limits: &Limits) -> Result<i64> {
    let cx = whitney(g, None, limits)?;
    wu(&cx, k, limits)
}
