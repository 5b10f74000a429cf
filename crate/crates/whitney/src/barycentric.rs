//! Barycentric refinement and its linear algebra.
//!
//! Refinement puts a vertex on every simplex and joins strict containments.
//! On f-vectors it acts by the upper triangular operator A_ij = i!·S(j,i)
//! with Stirling numbers of the second kind; the eigenvectors of Aᵀ (to the
//! eigenvalues k!) form a basis of the space of linear valuations, with the
//! Euler vector at eigenvalue 1 and the volume at the top. Eigenvectors to
//! alternating eigenvalues span the Dehn-Sommerville space: valuations that
//! vanish on every closed d-graph.
//!
//! Sign conventions: the same eigenvectors circulate with both signs.
//! [`bary_eigenvectors`] normalizes the first nonzero entry positive
//! (content one). The quadratic and cubic characteristic tables
//! ([`ds_quadratic`], [`ds_cubic`], [`gruenbaum_gap`]) instead use the
//! variant with the *last* entry positive, the convention the published
//! tables were computed in; with it the identity χ₁ᵀ·V(G) = v(G) holds on
//! d-graphs of every parity.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{f_matrix, f_tensor, whitney, WhitneyComplex};
use crate::graph::Graph;
use crate::valuation::Valuation;
use crate::{Error, Limits, Result};

/// Stirling number of the second kind S(j, i) by the standard recurrence.
pub fn stirling2(j: usize, i: usize) -> BigInt {
    if i > j {
        return BigInt::zero();
    }
    if j == 0 && i == 0 {
        return BigInt::one();
    }
    if i == 0 {
        return BigInt::zero();
    }
    // S(j, i) = i S(j-1, i) + S(j-1, i-1)
    let mut row = vec![BigInt::zero(); j + 1];
    row[0] = BigInt::one();
    for jj in 1..=j {
        for ii in (1..=jj).rev() {
            let keep = &row[ii] * BigInt::from(ii);
            row[ii] = keep + &row[ii - 1];
        }
        row[0] = BigInt::zero();
    }
    row[i].clone()
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// The c×c Barycentric refinement operator, A_ij = i!·S(j, i) with
/// 1-based indices: it maps the f-vector of G to the f-vector of its
/// refinement.
pub fn bary_operator(c: usize) -> Vec<Vec<BigInt>> {
    (1..=c)
        .map(|i| {
            (1..=c)
                .map(|j| factorial(i) * stirling2(j, i))
                .collect()
        })
        .collect()
}

/// Divide out the content and make the first nonzero entry positive.
fn normalize_first_positive(v: &mut [BigRational]) -> Vec<BigInt> {
    // common denominator
    let mut lcm = BigInt::one();
    for x in v.iter() {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if !gcd.is_zero() {
        for x in &mut ints {
            *x /= &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -x.clone();
            }
        }
    }
    ints
}

/// The eigenvectors χ_1..χ_c of Aᵀ, exact solutions of the triangular
/// system to the eigenvalues 1!, 2!, ..., c!, normalized with integer
/// entries, no common prime factor, first nonzero entry positive.
pub fn bary_eigenvectors(c: usize) -> Result<Vec<Vec<BigInt>>> {
    if c == 0 {
        return Err(Error::InvalidParam("clique number must be at least 1".into()));
    }
    let a = bary_operator(c);
    let mut basis = Vec::with_capacity(c);
    for k in 1..=c {
        let lambda = BigRational::from(factorial(k));
        // solve Aᵀ x = λ x by forward substitution: row i of Aᵀ is
        // Σ_{j<=i} A[j][i] x_j = λ x_i; entries below the pivot k vanish.
        let mut x = vec![BigRational::zero(); c];
        x[k - 1] = BigRational::one();
        for i in k + 1..=c {
            let mut s = BigRational::zero();
            for j in k..i {
                if !x[j - 1].is_zero() {
                    s += BigRational::from(a[j - 1][i - 1].clone()) * &x[j - 1];
                }
            }
            let diag = BigRational::from(factorial(i));
            x[i - 1] = s / (&lambda - diag);
        }
        basis.push(normalize_first_positive(&mut x));
    }
    Ok(basis)
}

/// The eigenbasis in the sign convention of the published characteristic
/// tables: each vector's last entry positive.
pub(crate) fn table_eigenvectors(c: usize) -> Result<Vec<Vec<BigInt>>> {
    let mut basis = bary_eigenvectors(c)?;
    for v in &mut basis {
        if v.last().map(|x| x.is_negative()).unwrap_or(false) {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Ok(basis)
}

/// The refinement operator together with its eigenbasis at a fixed clique
/// number.
#[derive(Debug, Clone)]
pub struct BaryBasis {
    c: usize,
    operator: Vec<Vec<BigInt>>,
    eigenvectors: Vec<Vec<BigInt>>,
}

impl BaryBasis {
    pub fn new(c: usize) -> Result<Self> {
        Ok(BaryBasis {
            c,
            operator: bary_operator(c),
            eigenvectors: bary_eigenvectors(c)?,
        })
    }

    pub fn clique_number(&self) -> usize {
        self.c
    }

    pub fn operator(&self) -> &[Vec<BigInt>] {
        &self.operator
    }

    /// χ_k, 1-based.
    pub fn eigenvector(&self, k: usize) -> &[BigInt] {
        &self.eigenvectors[k - 1]
    }

    pub fn eigenvectors(&self) -> &[Vec<BigInt>] {
        &self.eigenvectors
    }

    /// k!, the eigenvalue of χ_k.
    pub fn eigenvalue(&self, k: usize) -> BigInt {
        factorial(k)
    }
}

/// A Dehn-Sommerville vector: vanishes on every closed d-graph of the
/// parity-matching dimension. k = -1 is the Euler vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSVector {
    k: i64,
    c: usize,
    coeffs: Vec<BigInt>,
}

impl DSVector {
    pub fn index(&self) -> i64 {
        self.k
    }

    pub fn clique_number(&self) -> usize {
        self.c
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// The classical Dehn-Sommerville vector d_k at clique number c:
/// coefficients (-1)^j C(j+1, k+1) for k ≤ j ≤ c-1 plus (-1)^c added at
/// position k, then sign-normalized so the first nonzero entry is
/// positive. No content reduction: d_2 at c = 5 is (0,0,0,4,-10).
pub fn ds_vector(k: i64, c: usize) -> Result<DSVector> {
    if c == 0 {
        return Err(Error::InvalidParam("clique number must be at least 1".into()));
    }
    if k < -1 || k >= c as i64 {
        return Err(Error::InvalidParam(format!(
            "ds index {k} out of range -1..{}",
            c as i64 - 1
        )));
    }
    let mut coeffs = vec![BigInt::zero(); c];
    let start = k.max(0) as usize;
    for j in start..c {
        let b: BigInt = binomial(BigInt::from(j + 1), BigInt::from(k + 1));
        coeffs[j] = if j % 2 == 0 { b } else { -b };
    }
    if k >= 0 {
        let extra = if c % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        coeffs[k as usize] += extra;
    }
    if let Some(first) = coeffs.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut coeffs {
                *x = -x.clone();
            }
        }
    }
    Ok(DSVector { k, c, coeffs })
}

/// Barycentric refinement: one vertex per simplex of G in canonical
/// simplex order, edges exactly at strict containments.
pub fn refine(g: &Graph, limits: &Limits) -> Result<Graph> {
    let cx = whitney(g, None, limits)?;
    let m = cx.len();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    // enumerate the proper nonempty subsets of every simplex; subsets are
    // simplices by downward closure, and each containment pair is seen once
    for i in 0..m {
        let verts = cx.verts_of(i);
        let size = verts.len();
        if size == 1 {
            continue;
        }
        let mut subset = Vec::with_capacity(size);
        for mask in 1u64..(1u64 << size) - 1 {
            subset.clear();
            for (b, &v) in verts.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    subset.push(v);
                }
            }
            let j = cx
                .id_of(&subset)
                .expect("every face of a simplex is a simplex");
            edges.push((j as u32, i as u32));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_canonical(m, edges))
}

/// The Barycentric characteristic numbers (χ_k · v(G), k = 1..c), in the
/// first-nonzero-positive eigenbasis.
pub fn bary_numbers(cx: &WhitneyComplex) -> Result<Vec<BigInt>> {
    let c = cx.clique_number();
    if c == 0 {
        return Ok(Vec::new());
    }
    let basis = bary_eigenvectors(c)?;
    let v = cx.f_vector();
    Ok(basis
        .iter()
        .map(|chi| {
            chi.iter()
                .zip(&v)
                .map(|(a, &b)| a * BigInt::from(b))
                .sum()
        })
        .collect())
}

fn contract2(v: &[Vec<i64>], a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut s = BigInt::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let mut row = BigInt::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                row += bj * BigInt::from(v[i][j]);
            }
        }
        s += ai * row;
    }
    s
}

/// The quadratic characteristic table Ω with Ω_kl = χ_kᵀ · V(G) · χ_l,
/// in the table sign convention. Ω_11 is the quadratic Wu characteristic.
pub fn ds_quadratic(cx: &WhitneyComplex, limits: &Limits) -> Result<Vec<Vec<BigInt>>> {
    let c = cx.clique_number();
    if c == 0 {
        return Ok(Vec::new());
    }
    let basis = table_eigenvectors(c)?;
    let v = f_matrix(cx, limits)?.to_matrix();
    Ok((0..c)
        .map(|k| (0..c).map(|l| contract2(&v, &basis[k], &basis[l])).collect())
        .collect())
}

/// The cubic characteristic table: contractions of the order-3
/// intersection tensor with three eigenvectors, table sign convention.
/// Entry (1,1,1) is the cubic Wu characteristic.
pub fn ds_cubic(cx: &WhitneyComplex, limits: &Limits) -> Result<Vec<Vec<Vec<BigInt>>>> {
    let c = cx.clique_number();
    if c == 0 {
        return Ok(Vec::new());
    }
    let basis = table_eigenvectors(c)?;
    let t = f_tensor(cx, 3, limits)?;
    let get = |i: usize, j: usize, k: usize| t.get(&[i, j, k]);
    let mut out = vec![vec![vec![BigInt::zero(); c]; c]; c];
    for (a, ca) in basis.iter().enumerate() {
        for (b, cb) in basis.iter().enumerate() {
            for (d, cd) in basis.iter().enumerate() {
                let mut s = BigInt::zero();
                for (i, ai) in ca.iter().enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    for (j, bj) in cb.iter().enumerate() {
                        if bj.is_zero() {
                            continue;
                        }
                        let mut inner = BigInt::zero();
                        for (k, dk) in cd.iter().enumerate() {
                            if !dk.is_zero() {
                                inner += dk * BigInt::from(get(i, j, k));
                            }
                        }
                        s += ai * bj * inner;
                    }
                }
                out[a][b][d] = s;
            }
        }
    }
    Ok(out)
}

/// χ_1ᵀ·V(G)·ψ − v(G)·ψ, with χ_1 in the table convention; zero on every
/// closed d-graph for every linear valuation ψ.
pub fn gruenbaum_gap(cx: &WhitneyComplex, psi: &Valuation, limits: &Limits) -> Result<BigInt> {
    let c = cx.clique_number();
    if c == 0 {
        return Ok(BigInt::zero());
    }
    if psi.len() < c {
        return Err(Error::ValuationTooShort {
            len: psi.len(),
            clique: c,
        });
    }
    let chi1 = table_eigenvectors(c)?.remove(0);
    let v = f_matrix(cx, limits)?.to_matrix();
    let psi_c = &psi.coefficients()[..c.min(psi.len())];
    let quad = contract2(&v, &chi1, psi_c);
    let lin: BigInt = cx
        .f_vector()
        .iter()
        .zip(psi_c)
        .map(|(&a, b)| b * BigInt::from(a))
        .sum();
    Ok(quad - lin)
}

/// The constant 3×3 rational matrix that maps the f-matrix triple
/// (V_00, V_01, V_11) of a triangle-free graph to the triple of its
/// Barycentric refinement.
pub fn fmatrix_refinement_map_trianglefree() -> [[BigRational; 3]; 3] {
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    [
        [r(1, 1), r(1, 2), r(0, 1)],
        [r(0, 1), r(2, 1), r(0, 1)],
        [r(0, 1), r(3, 2), r(1, 1)],
    ]
}

/// The (V_00, V_01, V_11) triple of a triangle-free graph.
pub fn fmatrix_triple(cx: &WhitneyComplex, limits: &Limits) -> Result<[i64; 3]> {
    let m = f_matrix(cx, limits)?;
    if m.dims() > 2 {
        return Err(Error::InvalidParam(
            "f-matrix triple is defined for triangle-free graphs".into(),
        ));
    }
    if m.dims() == 0 {
        return Ok([0, 0, 0]);
    }
    if m.dims() == 1 {
        return Ok([m.get(&[0, 0]), 0, 0]);
    }
    Ok([m.get(&[0, 0]), m.get(&[0, 1]), m.get(&[1, 1])])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cross_polytope, cycle, generate, isomorphic, Family};

    fn lim() -> Limits {
        Limits::default()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::one());
        for n in 1..8 {
            assert_eq!(stirling2(n, 1), BigInt::one());
            assert_eq!(stirling2(n, n), BigInt::one());
        }
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(3, 5), BigInt::zero());
    }

    #[test]
    fn operator_tables() {
        assert_eq!(
            bary_operator(2),
            vec![big(&[1, 1]), big(&[0, 2])]
        );
        assert_eq!(
            bary_operator(3),
            vec![big(&[1, 1, 1]), big(&[0, 2, 6]), big(&[0, 0, 6])]
        );
        assert_eq!(
            bary_operator(5),
            vec![
                big(&[1, 1, 1, 1, 1]),
                big(&[0, 2, 6, 14, 30]),
                big(&[0, 0, 6, 36, 150]),
                big(&[0, 0, 0, 24, 240]),
                big(&[0, 0, 0, 0, 120]),
            ]
        );
    }

    #[test]
    fn eigenvector_tables() {
        let b5 = bary_eigenvectors(5).unwrap();
        assert_eq!(b5[0], big(&[1, -1, 1, -1, 1]));
        assert_eq!(b5[1], big(&[0, 22, -33, 40, -45]));
        assert_eq!(b5[2], big(&[0, 0, 19, -38, 55]));
        assert_eq!(b5[3], big(&[0, 0, 0, 2, -5]));
        assert_eq!(b5[4], big(&[0, 0, 0, 0, 1]));

        let b3 = bary_eigenvectors(3).unwrap();
        assert_eq!(b3[1], big(&[0, 2, -3]));
        assert_eq!(b3[2], big(&[0, 0, 1]));

        assert_eq!(bary_eigenvectors(1).unwrap()[0], big(&[1]));
    }

    #[test]
    fn eigen_identity_exact_up_to_c12() {
        for c in 1..=12 {
            let a = bary_operator(c);
            let basis = bary_eigenvectors(c).unwrap();
            for (k, chi) in basis.iter().enumerate() {
                let lambda = factorial(k + 1);
                // (Aᵀ χ)_i = Σ_j A[j][i] χ_j
                for i in 0..c {
                    let lhs: BigInt = (0..c).map(|j| &a[j][i] * &chi[j]).sum();
                    assert_eq!(lhs, &lambda * &chi[i], "c={c} k={} i={i}", k + 1);
                }
            }
        }
    }

    #[test]
    fn ds_vector_tables() {
        assert_eq!(ds_vector(0, 5).unwrap().coefficients(), &big(&[0, 2, -3, 4, -5])[..]);
        assert_eq!(ds_vector(3, 5).unwrap().coefficients(), &big(&[0, 0, 0, 2, -5])[..]);
        assert_eq!(ds_vector(2, 5).unwrap().coefficients(), &big(&[0, 0, 0, 4, -10])[..]);
        // k = -1 is the Euler vector
        assert_eq!(ds_vector(-1, 5).unwrap().coefficients(), &big(&[1, -1, 1, -1, 1])[..]);
        assert!(ds_vector(5, 5).is_err());
        assert!(ds_vector(-2, 5).is_err());
    }

    #[test]
    fn ds_zero_on_octahedron() {
        // (0, 2, -3) · (6, 12, 8) = 0, i.e. 2e = 3f
        let d0 = ds_vector(0, 3).unwrap();
        let v = [6i64, 12, 8];
        let s: BigInt = d0
            .coefficients()
            .iter()
            .zip(v.iter())
            .map(|(a, &b)| a * BigInt::from(b))
            .sum();
        assert!(s.is_zero());
    }

    #[test]
    fn ds_span_matches_alternating_eigenvectors() {
        // span{ds(0,5), ds(3,5)} = span{χ_2, χ_4}: check χ_2 + 2 χ_4 ∝ ds(0,5)
        let b5 = bary_eigenvectors(5).unwrap();
        let combo: Vec<BigInt> = b5[1]
            .iter()
            .zip(&b5[3])
            .map(|(a, b)| a + BigInt::from(2) * b)
            .collect();
        let d0 = ds_vector(0, 5).unwrap();
        let scaled: Vec<BigInt> = d0
            .coefficients()
            .iter()
            .map(|x| x * BigInt::from(11))
            .collect();
        assert_eq!(combo, scaled);
        // and ds(3,5) is parallel to χ_4
        assert_eq!(ds_vector(3, 5).unwrap().coefficients(), &b5[3][..]);
    }

    #[test]
    fn refine_c4_is_c8() {
        let r = refine(&cycle(4).unwrap(), &lim()).unwrap();
        assert!(isomorphic(&r, &cycle(8).unwrap()));
    }

    #[test]
    fn refine_k3_is_the_wheel_on_c6() {
        let r = refine(&complete(3).unwrap(), &lim()).unwrap();
        let cx = whitney(&r, None, &lim()).unwrap();
        assert_eq!(cx.f_vector(), vec![7, 12, 6]);
        assert!(isomorphic(&r, &crate::graph::wheel(6).unwrap()));
    }

    #[test]
    fn refine_f_vector_is_operator_action() {
        for g in [
            generate(&Family::Kite).unwrap(),
            cross_polytope(2).unwrap(),
            complete(4).unwrap(),
        ] {
            let cx = whitney(&g, None, &lim()).unwrap();
            let v = cx.f_vector();
            let c = v.len();
            let a = bary_operator(c);
            let want: Vec<BigInt> = (0..c)
                .map(|i| (0..c).map(|j| &a[i][j] * BigInt::from(v[j])).sum())
                .collect();
            let rcx = whitney(&refine(&g, &lim()).unwrap(), None, &lim()).unwrap();
            let got: Vec<BigInt> = rcx.f_vector().iter().map(|&x| BigInt::from(x)).collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn bary_numbers_on_cross_polytopes() {
        let cx = whitney(&cross_polytope(4).unwrap(), None, &lim()).unwrap();
        assert_eq!(bary_numbers(&cx).unwrap(), big(&[2, 0, 240, 0, 32]));
        let cx = whitney(&cross_polytope(3).unwrap(), None, &lim()).unwrap();
        assert_eq!(bary_numbers(&cx).unwrap(), big(&[0, 112, 0, 16]));
        let cx = whitney(&cross_polytope(2).unwrap(), None, &lim()).unwrap();
        assert_eq!(bary_numbers(&cx).unwrap(), big(&[2, 0, 8]));
    }

    #[test]
    fn quadratic_table_of_the_octahedron() {
        let cx = whitney(&cross_polytope(2).unwrap(), None, &lim()).unwrap();
        let omega = ds_quadratic(&cx, &lim()).unwrap();
        let want: Vec<Vec<BigInt>> = [[2, 0, 8], [0, -24, 24], [8, 24, 56]]
            .iter()
            .map(|r| big(&r[..]))
            .collect();
        assert_eq!(omega, want);
    }

    #[test]
    fn quadratic_table_of_the_16_cell() {
        let cx = whitney(&cross_polytope(3).unwrap(), None, &lim()).unwrap();
        let omega = ds_quadratic(&cx, &lim()).unwrap();
        let want: Vec<Vec<BigInt>> = [
            [0, 112, 0, 16],
            [112, 10176, 224, 1152],
            [0, 224, -32, 32],
            [16, 1152, 32, 240],
        ]
        .iter()
        .map(|r| big(&r[..]))
        .collect();
        assert_eq!(omega, want);
    }

    #[test]
    fn cubic_table_of_the_octahedron() {
        let cx = whitney(&cross_polytope(2).unwrap(), None, &lim()).unwrap();
        let t = ds_cubic(&cx, &lim()).unwrap();
        // entry (1,1,1) is the cubic Wu characteristic
        assert_eq!(t[0][0][0], BigInt::from(2));
        let want: [[[i64; 3]; 3]; 3] = [
            [[2, 0, 8], [0, -24, 24], [8, 24, 56]],
            [[0, -24, 24], [-24, -168, 72], [24, 72, 216]],
            [[8, 24, 56], [24, 72, 216], [56, 216, 296]],
        ];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(t[i][j][k], BigInt::from(want[i][j][k]), "entry ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn gruenbaum_gap_vanishes_on_d_graphs() {
        let cx = whitney(&cross_polytope(3).unwrap(), None, &lim()).unwrap();
        let psi = Valuation::bary(2, 4).unwrap();
        assert!(gruenbaum_gap(&cx, &psi, &lim()).unwrap().is_zero());
        let cx = whitney(&cross_polytope(2).unwrap(), None, &lim()).unwrap();
        let psi = Valuation::bary(3, 3).unwrap();
        assert!(gruenbaum_gap(&cx, &psi, &lim()).unwrap().is_zero());
    }

    #[test]
    fn gruenbaum_gap_on_the_kite() {
        // not a d-graph; the gap values are regression constants
        let cx = whitney(&generate(&Family::Kite).unwrap(), None, &lim()).unwrap();
        let e = Valuation::euler(3);
        assert_eq!(gruenbaum_gap(&cx, &e, &lim()).unwrap(), BigInt::zero());
        let chi2 = Valuation::bary(2, 3).unwrap();
        assert_eq!(gruenbaum_gap(&cx, &chi2, &lim()).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn trianglefree_triples_refine_linearly() {
        let m = fmatrix_refinement_map_trianglefree();
        let apply = |t: [i64; 3]| -> [BigRational; 3] {
            let tv: Vec<BigRational> = t.iter().map(|&x| BigRational::from(BigInt::from(x))).collect();
            [0, 1, 2].map(|i| {
                m[i].iter()
                    .zip(&tv)
                    .map(|(a, b)| a * b)
                    .sum::<BigRational>()
            })
        };
        let as_rat = |t: [i64; 3]| t.map(|x| BigRational::from(BigInt::from(x)));

        for g in [
            cycle(4).unwrap(),
            complete(2).unwrap(),
            generate(&Family::Figure8).unwrap(),
        ] {
            let cx = whitney(&g, None, &lim()).unwrap();
            let before = fmatrix_triple(&cx, &lim()).unwrap();
            let rcx = whitney(&refine(&g, &lim()).unwrap(), None, &lim()).unwrap();
            let after = fmatrix_triple(&rcx, &lim()).unwrap();
            assert_eq!(apply(before), as_rat(after), "triple map failed");
        }
        // the pinned examples
        let cx = whitney(&cycle(4).unwrap(), None, &lim()).unwrap();
        assert_eq!(fmatrix_triple(&cx, &lim()).unwrap(), [4, 8, 12]);
        let cx = whitney(&complete(2).unwrap(), None, &lim()).unwrap();
        assert_eq!(fmatrix_triple(&cx, &lim()).unwrap(), [2, 2, 1]);
        let cx = whitney(&generate(&Family::Figure8).unwrap(), None, &lim()).unwrap();
        assert_eq!(fmatrix_triple(&cx, &lim()).unwrap(), [7, 16, 32]);
    }
}
