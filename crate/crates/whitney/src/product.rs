//! The Stanley-Reisner Cartesian product of graphs.
//!
//! Vertices of G × H are pairs (x, y) of simplices of the factors; two
//! pairs are joined when one is contained in the other componentwise. This
//! is the incidence graph of the product of the Stanley-Reisner
//! polynomials, so Euler characteristic and every Wu characteristic are
//! multiplicative over it, and G × K_1 is the Barycentric refinement.
//! Applied at the graph level the construction is not associative — the
//! one-point factor refines — so products of three or more factors only
//! commute when taken in the ring; see the tests.

use rayon::prelude::*;

use crate::complex::{whitney, Simplex};
use crate::graph::Graph;
use crate::{Error, Limits, Result};

/// A product graph together with the (simplex, simplex) labels of its
/// vertices, in canonical (simplex-order × simplex-order) lexicographic
/// order.
#[derive(Debug, Clone)]
pub struct Product {
    pub graph: Graph,
    pub labels: Vec<(Simplex, Simplex)>,
}

impl Product {
    /// Vertex labels as `{"g": [...], "h": [...]}` rows.
    pub fn labels_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.labels
                .iter()
                .map(|(x, y)| {
                    serde_json::json!({ "g": x.vertices(), "h": y.vertices() })
                })
                .collect(),
        )
    }
}

fn subset(a: &[u32], b: &[u32]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// The Cartesian product G × H. The product of anything with the empty
/// graph is empty. Vertex count is the simplex count of G times that of H.
pub fn cartesian(g: &Graph, h: &Graph, limits: &Limits) -> Result<Product> {
    let cg = whitney(g, None, limits)?;
    let ch = whitney(h, None, limits)?;
    let (sg, sh) = (cg.len(), ch.len());
    let n = sg
        .checked_mul(sh)
        .filter(|&n| n <= limits.max_simplices)
        .ok_or(Error::CapExceeded {
            what: "product vertex count",
            limit: limits.max_simplices as u64,
        })?;

    // pairs are streamed row by row; an edge joins (x1, y1) and (x2, y2)
    // exactly when the containments point the same way in both factors
    let edges: Vec<(u32, u32)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|p| {
            let (i1, j1) = (p / sh, p % sh);
            let vx1 = cg.verts_of(i1);
            let vy1 = ch.verts_of(j1);
            let mut out = Vec::new();
            for q in p + 1..n {
                let (i2, j2) = (q / sh, q % sh);
                let vx2 = cg.verts_of(i2);
                let vy2 = ch.verts_of(j2);
                let forward = subset(vx1, vx2) && subset(vy1, vy2);
                let backward = subset(vx2, vx1) && subset(vy2, vy1);
                if forward || backward {
                    out.push((p as u32, q as u32));
                }
            }
            out
        })
        .collect();
    let mut edges = edges;
    edges.sort_unstable();

    let labels = (0..n)
        .map(|p| (cg.simplex(p / sh), ch.simplex(p % sh)))
        .collect();
    Ok(Product {
        graph: Graph::from_canonical(n, edges),
        labels,
    })
}
