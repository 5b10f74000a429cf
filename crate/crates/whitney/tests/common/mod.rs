//! Naive reference implementations shared by the oracle and acceptance
//! suites. Deliberately independent of the library's enumeration
//! machinery: powerset sweeps and full nested loops only.

use whitney::graph::Graph;
use whitney::SplitMix64;

pub fn naive_simplices(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let verts: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
        let is_clique = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if is_clique {
            out.push(verts);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

pub fn meets(a: &[u32], b: &[u32]) -> bool {
    a.iter().any(|x| b.contains(x))
}

pub fn meets3(a: &[u32], b: &[u32], c: &[u32]) -> bool {
    a.iter().any(|x| b.contains(x) && c.contains(x))
}

pub fn sign(s: &[u32]) -> i64 {
    if (s.len() - 1) % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn naive_f_matrix(simp: &[Vec<u32>], c: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; c]; c];
    for x in simp {
        for y in simp {
            if meets(x, y) {
                m[x.len() - 1][y.len() - 1] += 1;
            }
        }
    }
    m
}

pub fn naive_wu2(simp: &[Vec<u32>]) -> i64 {
    let mut w = 0;
    for x in simp {
        for y in simp {
            if meets(x, y) {
                w += sign(x) * sign(y);
            }
        }
    }
    w
}

pub fn naive_wu3(simp: &[Vec<u32>]) -> i64 {
    let mut w = 0;
    for x in simp {
        for y in simp {
            for z in simp {
                if meets3(x, y, z) {
                    w += sign(x) * sign(y) * sign(z);
                }
            }
        }
    }
    w
}

pub fn naive_f3(simp: &[Vec<u32>], c: usize) -> Vec<i64> {
    let mut t = vec![0i64; c * c * c];
    for x in simp {
        for y in simp {
            for z in simp {
                if meets3(x, y, z) {
                    t[((x.len() - 1) * c + (y.len() - 1)) * c + (z.len() - 1)] += 1;
                }
            }
        }
    }
    t
}

/// One random graph for every (n, edge count) pair with n <= nmax.
pub fn edge_count_samples(nmax: usize, seed: u64) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::new();
    for n in 1..=nmax {
        let all: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        for m in 0..=all.len() {
            let mut pool = all.clone();
            rng.shuffle(&mut pool);
            out.push(Graph::new(n, pool.into_iter().take(m)).unwrap());
        }
    }
    out
}
