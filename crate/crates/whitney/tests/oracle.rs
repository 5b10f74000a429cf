//! Independent brute-force oracles for the optimized enumeration paths.
//!
//! The naive code in `common` shares nothing with the library's scan
//! machinery: simplices come from a powerset sweep, intersection tests are
//! literal set scans, and tuple sums are full nested loops. Equality
//! against these oracles on exhaustive and per-edge-count random samples
//! is what pins the optimized implementations.

mod common;

use common::*;
use whitney::complex::{f_matrix, f_tensor, whitney};
use whitney::graph::{erdos_renyi, Graph};
use whitney::valuation::{expected_euler, wu, wu_algebraic};
use whitney::Limits;

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn whitney_matches_the_powerset_sweep() {
    for g in edge_count_samples(6, 11) {
        let cx = whitney(&g, None, &lim()).unwrap();
        let naive = naive_simplices(&g);
        assert_eq!(cx.len(), naive.len());
        for (i, s) in naive.iter().enumerate() {
            assert_eq!(cx.verts_of(i), &s[..], "canonical order diverges at {i}");
        }
    }
}

#[test]
fn f_matrix_matches_the_double_loop() {
    // exhaustive over all graphs on 4 vertices, then random larger ones
    for mask in 0u32..64 {
        let all = [(0u32, 1u32), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let edges = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(4, edges).unwrap();
        let cx = whitney(&g, None, &lim()).unwrap();
        let simp = naive_simplices(&g);
        let c = cx.clique_number();
        assert_eq!(
            f_matrix(&cx, &lim()).unwrap().to_matrix(),
            naive_f_matrix(&simp, c)
        );
    }
    for seed in 0..8 {
        let g = erdos_renyi(7, 0.5, seed).unwrap();
        let cx = whitney(&g, None, &lim()).unwrap();
        let simp = naive_simplices(&g);
        assert_eq!(
            f_matrix(&cx, &lim()).unwrap().to_matrix(),
            naive_f_matrix(&simp, cx.clique_number())
        );
    }
}

#[test]
fn wu_and_tensors_match_nested_loops_per_edge_count() {
    for g in edge_count_samples(6, 23) {
        let cx = whitney(&g, None, &lim()).unwrap();
        let simp = naive_simplices(&g);
        let c = cx.clique_number();
        assert_eq!(wu(&cx, 2, &lim()).unwrap(), naive_wu2(&simp), "{g:?}");
        assert_eq!(wu(&cx, 3, &lim()).unwrap(), naive_wu3(&simp), "{g:?}");
        assert_eq!(
            f_matrix(&cx, &lim()).unwrap().to_matrix(),
            naive_f_matrix(&simp, c),
            "{g:?}"
        );
        if c > 0 {
            assert_eq!(
                f_tensor(&cx, 3, &lim()).unwrap().data(),
                &naive_f3(&simp, c)[..]
            );
        }
        // the two algebraic routes to the quadratic characteristic agree
        assert_eq!(wu_algebraic(&cx, &lim()).unwrap(), naive_wu2(&simp), "{g:?}");
    }
}

#[test]
fn octahedron_cubic_tensor_matches_the_nested_loop() {
    let g = whitney::graph::cross_polytope(2).unwrap();
    let cx = whitney(&g, None, &lim()).unwrap();
    let simp = naive_simplices(&g);
    assert_eq!(
        f_tensor(&cx, 3, &lim()).unwrap().data(),
        &naive_f3(&simp, 3)[..]
    );
    assert_eq!(wu(&cx, 3, &lim()).unwrap(), naive_wu3(&simp));
}

/// graph6 writer written independently: successive edge bits are pushed
/// into a bit queue, no shared helpers with the library codec.
fn independent_graph6(g: &Graph) -> String {
    assert!(g.n() <= 62);
    let mut bits: Vec<bool> = Vec::new();
    for v in 1..g.n() as u32 {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((g.n() as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                val |= (b as u8) << (5 - i);
            }
        }
        s.push((val + 63) as char);
    }
    s
}

#[test]
fn graph6_round_trips_against_an_independent_encoder() {
    let line = "D?{";
    let g = Graph::from_graph6(line).unwrap();
    assert_eq!(independent_graph6(&g), line);
    assert_eq!(g.to_graph6(), line);

    for seed in 0..20 {
        let g = erdos_renyi(1 + (seed as usize * 7) % 30, 0.4, seed).unwrap();
        let enc = independent_graph6(&g);
        assert_eq!(g.to_graph6(), enc);
        assert_eq!(Graph::from_graph6(&enc).unwrap(), g);
    }
}

#[test]
fn expected_euler_matches_sampling() {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::ToPrimitive;

    let p = BigRational::new(BigInt::from(1), BigInt::from(2));
    let exact = expected_euler(3, &p).unwrap().to_f64().unwrap();
    let samples = 4000u64;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for i in 0..samples {
        let g = erdos_renyi(3, 0.5, 1000 + i).unwrap();
        let chi = whitney(&g, None, &lim()).unwrap().euler_characteristic() as f64;
        sum += chi;
        sum_sq += chi * chi;
    }
    let mean = sum / samples as f64;
    let var = (sum_sq - samples as f64 * mean * mean) / (samples as f64 - 1.0);
    let stderr = (var / samples as f64).sqrt();
    assert!(
        (mean - exact).abs() <= 3.0 * stderr,
        "mean {mean}, exact {exact}, stderr {stderr}"
    );
}
