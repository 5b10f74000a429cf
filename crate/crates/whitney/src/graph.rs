//! Finite simple graphs: construction, neighborhoods, generators and I/O.
//!
//! Vertices are dense integers `0..n-1`. The edge set is kept in canonical
//! sorted order (`u < v`, lexicographic), and adjacency is stored both as
//! sorted neighbor lists and, for graphs with at most 4096 vertices, as
//! bitset rows so that clique enumeration can intersect neighborhoods a
//! word at a time. Graphs are immutable after construction; every operation
//! here is pure and thread-safe on a shared graph.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::rng::SplitMix64;
use crate::{Error, Result};

const BITROW_MAX_N: usize = 4096;

/// A finite simple graph. No loops, no multi-edges, no direction.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    rows: Option<Vec<Vec<u64>>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Graph {}

impl Graph {
    /// Build a graph from an edge list. Endpoints are normalized to
    /// `u < v`; out-of-range endpoints, loops and duplicate edges are
    /// rejected.
    pub fn new<I>(n: usize, edge_iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut edges = Vec::new();
        for (a, b) in edge_iter {
            if a as usize >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b as usize >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::InvalidParam(format!("self-loop at vertex {a}")));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParam(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_canonical(n, edges))
    }

    /// `edges` must already be sorted, deduplicated, in-range and loop-free.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let rows = if n <= BITROW_MAX_N {
            let words = n.div_ceil(64);
            let mut rows = vec![vec![0u64; words]; n];
            for &(u, v) in &edges {
                rows[u as usize][v as usize / 64] |= 1 << (v % 64);
                rows[v as usize][u as usize / 64] |= 1 << (u % 64);
            }
            Some(rows)
        } else {
            None
        };
        Graph { n, edges, adj, rows }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order, `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            return false;
        }
        match &self.rows {
            Some(rows) => rows[u as usize][v as usize / 64] >> (v % 64) & 1 == 1,
            None => self.adj[u as usize].binary_search(&v).is_ok(),
        }
    }

    /// Bitset adjacency row for `v`, present when `n <= 4096`.
    pub(crate) fn bit_row(&self, v: u32) -> Option<&[u64]> {
        self.rows.as_ref().map(|r| r[v as usize].as_slice())
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    /// Induced subgraph on a vertex set. Vertices are relabeled `0..|S|-1`
    /// in increasing order of their old labels; the returned map sends each
    /// new label to the old one.
    pub fn induced(&self, set: &[u32]) -> Result<(Graph, Vec<u32>)> {
        let mut verts: Vec<u32> = set.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&v) = verts.last() {
            self.check_vertex(v)?;
        }
        let mut new_label = vec![u32::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            new_label[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        for &v in &verts {
            for &w in self.neighbors(v) {
                if w > v && new_label[w as usize] != u32::MAX {
                    edges.push((new_label[v as usize], new_label[w as usize]));
                }
            }
        }
        edges.sort_unstable();
        Ok((Graph::from_canonical(verts.len(), edges), verts))
    }

    /// The unit sphere S(v): induced subgraph on the neighbors of `v`.
    pub fn unit_sphere(&self, v: u32) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.neighbors(v))?.0)
    }

    /// The unit ball B(v): induced subgraph on `{v} ∪ S(v)`.
    pub fn unit_ball(&self, v: u32) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut s = self.adj[v as usize].clone();
        s.push(v);
        Ok(self.induced(&s)?.0)
    }

    /// Vertices at graph distance at most `r` from `v`, by breadth-first
    /// search. Returned sorted.
    pub fn ball_vertices(&self, v: u32, r: usize) -> Result<Vec<u32>> {
        self.check_vertex(v)?;
        let mut dist = vec![usize::MAX; self.n];
        dist[v as usize] = 0;
        let mut frontier = vec![v];
        let mut out = vec![v];
        for step in 1..=r {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in self.neighbors(u) {
                    if dist[w as usize] == usize::MAX {
                        dist[w as usize] = step;
                        next.push(w);
                        out.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Induced subgraph on the ball of radius `r` around `v`.
    pub fn ball(&self, v: u32, r: usize) -> Result<Graph> {
        Ok(self.induced(&self.ball_vertices(v, r)?)?.0)
    }

    /// Graph distances from `v` (usize::MAX for unreachable vertices).
    pub fn distances(&self, v: u32) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut dist = vec![usize::MAX; self.n];
        dist[v as usize] = 0;
        let mut frontier = vec![v];
        let mut step = 0;
        while !frontier.is_empty() {
            step += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in self.neighbors(u) {
                    if dist[w as usize] == usize::MAX {
                        dist[w as usize] = step;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.distances(0)
            .map(|d| d.iter().all(|&x| x != usize::MAX))
            .unwrap_or(false)
    }

    pub fn has_triangle(&self) -> Option<u32> {
        for &(u, v) in &self.edges {
            let (a, b) = (self.neighbors(u), self.neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return Some(u),
                }
            }
        }
        None
    }

    /// Suspension: two new vertices, each joined to every old vertex and
    /// not to each other. The suspension of the empty graph is two
    /// isolated vertices.
    pub fn suspension(&self) -> Graph {
        let n = self.n;
        let mut edges = self.edges.clone();
        for v in 0..n as u32 {
            edges.push((v, n as u32));
            edges.push((v, n as u32 + 1));
        }
        edges.sort_unstable();
        Graph::from_canonical(n + 2, edges)
    }

    /// Disjoint union; the vertices of `other` are relabeled after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n as u32;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_canonical(self.n + other.n, edges)
    }

    /// Parse the graph6 format (McKay encoding, no header).
    pub fn from_graph6(text: &str) -> Result<Graph> {
        crate::graph6::parse(text)
    }

    /// Canonical graph6 encoding; inverse of [`Graph::from_graph6`].
    pub fn to_graph6(&self) -> String {
        crate::graph6::write(self)
    }

    /// Parse the JSON form `{"n": int, "edges": [[u, v], ...]}`.
    pub fn from_json(text: &str) -> Result<Graph> {
        #[derive(serde::Deserialize)]
        struct J {
            n: usize,
            edges: Vec<(u32, u32)>,
        }
        let j: J = serde_json::from_str(text).map_err(|e| Error::JsonGraph(e.to_string()))?;
        Graph::new(j.n, j.edges).map_err(|e| Error::JsonGraph(e.to_string()))
    }

    /// JSON form with the edge list in canonical sorted order.
    pub fn to_json(&self) -> String {
        let edges: Vec<[u32; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        serde_json::json!({ "n": self.n, "edges": edges }).to_string()
    }
}

/// An exact rational value per vertex, used as the scalar function of
/// Poincaré-Hopf indices.
#[derive(Debug, Clone)]
pub struct VertexFunction {
    values: Vec<BigRational>,
}

impl VertexFunction {
    pub fn new(values: Vec<BigRational>) -> Self {
        VertexFunction { values }
    }

    /// The identity ordering f(v) = v.
    pub fn identity(n: usize) -> Self {
        VertexFunction {
            values: (0..n).map(|v| BigRational::from(BigInt::from(v))).collect(),
        }
    }

    /// A function from integer ranks, one per vertex.
    pub fn from_ranks(ranks: &[u32]) -> Self {
        VertexFunction {
            values: ranks
                .iter()
                .map(|&r| BigRational::from(BigInt::from(r)))
                .collect(),
        }
    }

    /// A uniformly random vertex ordering drawn from the fixed generator.
    pub fn random_order(n: usize, rng: &mut SplitMix64) -> Self {
        let mut ranks: Vec<u32> = (0..n as u32).collect();
        rng.shuffle(&mut ranks);
        Self::from_ranks(&ranks)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: u32) -> &BigRational {
        &self.values[v as usize]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Global injectivity check; the toolkit demands it for every index
    /// computation so that sublevel sets are unambiguous.
    pub fn check_injective(&self) -> Result<()> {
        let mut idx: Vec<u32> = (0..self.values.len() as u32).collect();
        idx.sort_by(|&a, &b| self.values[a as usize].cmp(&self.values[b as usize]));
        for w in idx.windows(2) {
            if self.values[w[0] as usize] == self.values[w[1] as usize] {
                return Err(Error::NonInjective {
                    a: w[0].min(w[1]),
                    b: w[0].max(w[1]),
                });
            }
        }
        Ok(())
    }
}

/// Graph families with parameters, plus the small named graphs that are
/// shipped as literal edge lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Star(usize),
    Wheel(usize),
    CompleteBipartite(usize, usize),
    Bouquet { circles: usize, girth: usize },
    CrossPolytope(usize),
    Hypercube(usize),
    Kite,
    House,
    Figure8,
    Cube,
    Dodecahedron,
    Icosahedron,
    Tesseract,
    Utility,
}

/// Icosahedron on the labeling whose adjacency matrix is printed with the
/// Wu index example; the identity ordering of these labels reproduces the
/// published index vector.
const ICOSAHEDRON_EDGES: [(u32, u32); 30] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 4), (1, 5), (1, 8), (1, 9),
    (2, 3), (2, 4), (2, 7), (2, 10),
    (3, 5), (3, 7), (3, 11),
    (4, 8), (4, 10),
    (5, 9), (5, 11),
    (6, 7), (6, 8), (6, 9), (6, 10), (6, 11),
    (7, 10), (7, 11),
    (8, 9), (8, 10),
    (9, 11),
];

/// Dodecahedron from its LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2:
/// the Hamiltonian cycle 0..19 plus ten chords.
const DODECAHEDRON_EDGES: [(u32, u32); 30] = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10),
    (10, 11), (11, 12), (12, 13), (13, 14), (14, 15), (15, 16), (16, 17), (17, 18),
    (18, 19), (0, 19),
    (0, 10), (1, 8), (2, 6), (3, 19), (4, 17), (5, 15), (7, 14), (9, 13), (11, 18), (12, 16),
];

/// Two triangles glued along an edge: vertices a,b,c,d = 0,1,2,3 with
/// triangles {a,b,c} and {a,c,d}.
const KITE_EDGES: [(u32, u32); 5] = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)];

/// Square with a triangle roof, on the labeling of the published Wu index
/// example.
const HOUSE_EDGES: [(u32, u32); 6] = [(0, 1), (0, 3), (1, 2), (1, 4), (2, 3), (2, 4)];

pub fn generate(family: &Family) -> Result<Graph> {
    use Family::*;
    match *family {
        Cycle(n) => cycle(n),
        Path(n) => path(n),
        Complete(n) => complete(n),
        Star(rays) => star(rays),
        Wheel(rim) => wheel(rim),
        CompleteBipartite(a, b) => complete_bipartite(a, b),
        Bouquet { circles, girth } => bouquet(circles, girth),
        CrossPolytope(d) => cross_polytope(d),
        Hypercube(d) => hypercube(d),
        Kite => Graph::new(4, KITE_EDGES),
        House => Graph::new(5, HOUSE_EDGES),
        Figure8 => bouquet(2, 4),
        Cube => hypercube(3),
        Dodecahedron => Graph::new(20, DODECAHEDRON_EDGES),
        Icosahedron => Graph::new(12, ICOSAHEDRON_EDGES),
        Tesseract => hypercube(4),
        Utility => complete_bipartite(3, 3),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParam(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(
        n,
        (0..n as u32).map(|i| (i, (i + 1) % n as u32)),
    )
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParam("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n as u32).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParam("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Star with `rays` spikes: vertex 0 is the center.
pub fn star(rays: usize) -> Result<Graph> {
    Graph::new(rays + 1, (1..=rays as u32).map(|i| (0, i)))
}

/// Wheel: rim cycle `C_rim` on vertices 0..rim, hub vertex `rim` joined to
/// every rim vertex. Rim length at least 4 keeps the hub spheres circular.
pub fn wheel(rim: usize) -> Result<Graph> {
    if rim < 4 {
        return Err(Error::InvalidParam(format!("wheel needs rim >= 4, got {rim}")));
    }
    let hub = rim as u32;
    let mut edges: Vec<(u32, u32)> = (0..rim as u32).map(|i| (i, (i + 1) % rim as u32)).collect();
    edges.extend((0..rim as u32).map(|i| (i, hub)));
    Graph::new(rim + 1, edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParam("complete bipartite needs both sides nonempty".into()));
    }
    let mut edges = Vec::new();
    for u in 0..a as u32 {
        for v in 0..b as u32 {
            edges.push((u, a as u32 + v));
        }
    }
    Graph::new(a + b, edges)
}

/// `circles` cycles of length `girth`, glued at one common vertex 0.
/// Girth at least 4 keeps the bouquet triangle-free.
pub fn bouquet(circles: usize, girth: usize) -> Result<Graph> {
    if circles < 1 {
        return Err(Error::InvalidParam("bouquet needs at least one circle".into()));
    }
    if girth < 4 {
        return Err(Error::InvalidParam(format!("bouquet girth must be >= 4, got {girth}")));
    }
    let per = girth - 1;
    let n = 1 + circles * per;
    let mut edges = Vec::new();
    for c in 0..circles {
        let base = (1 + c * per) as u32;
        edges.push((0, base));
        for i in 0..per as u32 - 1 {
            edges.push((base + i, base + i + 1));
        }
        edges.push((0, base + per as u32 - 1));
    }
    Graph::new(n, edges)
}

/// The d-dimensional cross polytope as a graph: C_4 for d = 1, then
/// iterated suspension. A d-sphere on 2d + 2 vertices.
pub fn cross_polytope(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParam("cross polytope needs d >= 1".into()));
    }
    let mut g = cycle(4)?;
    for _ in 1..d {
        g = g.suspension();
    }
    Ok(g)
}

/// The d-cube graph on 2^d vertices; edges join words at Hamming distance 1.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParam("hypercube needs d >= 1".into()));
    }
    if d > 20 {
        return Err(Error::InvalidParam(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n as u32 {
        for b in 0..d {
            let w = v ^ (1 << b);
            if w > v {
                edges.push((v, w));
            }
        }
    }
    Graph::new(n, edges)
}

/// Erdős–Rényi graph G(n, p): each of the C(n,2) edges is present
/// independently with probability `p`. Pairs are drawn in lexicographic
/// order from the crate's SplitMix64 stream, so a (n, p, seed) triple
/// determines the edge set exactly.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParam(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Graph isomorphism by backtracking over degree-compatible assignments.
/// Meant for the small graphs that show up in tests and recognizers.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n != h.n || g.edges.len() != h.edges.len() {
        return false;
    }
    let n = g.n;
    if n == 0 {
        return true;
    }
    // invariant: (degree, sorted neighbor degrees)
    let sig = |gr: &Graph| -> Vec<(usize, Vec<usize>)> {
        (0..n as u32)
            .map(|v| {
                let mut ds: Vec<usize> = gr.neighbors(v).iter().map(|&w| gr.degree(w)).collect();
                ds.sort_unstable();
                (gr.degree(v), ds)
            })
            .collect()
    };
    let sg = sig(g);
    let sh = sig(h);
    {
        let mut a = sg.clone();
        let mut b = sh.clone();
        a.sort();
        b.sort();
        if a != b {
            return false;
        }
    }
    // map g-vertices in order of rarest signature first
    let mut order: Vec<u32> = (0..n as u32).collect();
    let mut freq = std::collections::HashMap::new();
    for s in &sg {
        *freq.entry(s.clone()).or_insert(0usize) += 1;
    }
    order.sort_by_key(|&v| (freq[&sg[v as usize]], std::cmp::Reverse(g.degree(v))));

    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        g: &Graph,
        h: &Graph,
        order: &[u32],
        pos: usize,
        sg: &[(usize, Vec<usize>)],
        sh: &[(usize, Vec<usize>)],
        map: &mut [u32],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        'cand: for w in 0..h.n() as u32 {
            if used[w as usize] || sg[v as usize] != sh[w as usize] {
                continue;
            }
            for &u in g.neighbors(v) {
                let mu = map[u as usize];
                if mu != u32::MAX && !h.has_edge(mu, w) {
                    continue 'cand;
                }
            }
            // non-edges must map to non-edges: check mapped non-neighbors
            for p in 0..pos {
                let u = order[p];
                if !g.has_edge(u, v) && h.has_edge(map[u as usize], w) {
                    continue 'cand;
                }
            }
            map[v as usize] = w;
            used[w as usize] = true;
            if extend(g, h, order, pos + 1, sg, sh, map, used) {
                return true;
            }
            map[v as usize] = u32::MAX;
            used[w as usize] = false;
        }
        false
    }

    extend(g, h, &order, 0, &sg, &sh, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_edge_order() {
        let g = Graph::new(4, [(3, 1), (0, 2), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2), (1, 3)]);
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4).unwrap();
        let (g, map) = k4.induced(&[0, 1, 2]).unwrap();
        assert_eq!(g, complete(3).unwrap());
        assert_eq!(map, vec![0, 1, 2]);

        let c5 = cycle(5).unwrap();
        let (p, _) = c5.induced(&[0, 1, 2]).unwrap();
        assert_eq!(p, path(3).unwrap());

        let (e, _) = c5.induced(&[]).unwrap();
        assert_eq!(e.n(), 0);

        // idempotent
        let (g1, _) = c5.induced(&[1, 2, 4]).unwrap();
        let all: Vec<u32> = (0..g1.n() as u32).collect();
        let (g2, _) = g1.induced(&all).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn spheres_and_balls() {
        let oct = cross_polytope(2).unwrap();
        for v in 0..6 {
            assert!(isomorphic(&oct.unit_sphere(v).unwrap(), &cycle(4).unwrap()));
        }
        let k5 = complete(5).unwrap();
        assert_eq!(k5.unit_sphere(0).unwrap(), complete(4).unwrap());

        let c4 = cycle(4).unwrap();
        assert!(isomorphic(&c4.unit_ball(0).unwrap(), &path(3).unwrap()));

        let p5 = path(5).unwrap();
        assert_eq!(p5.ball(2, 2).unwrap(), p5);
        assert_eq!(p5.ball(2, 0).unwrap().n(), 1);
        assert_eq!(p5.ball(2, 1).unwrap(), p5.unit_ball(2).unwrap());
    }

    #[test]
    fn suspension_tower() {
        let oct = cycle(4).unwrap().suspension();
        assert_eq!(oct.n(), 6);
        assert_eq!(oct.edge_count(), 12);
        let cell16 = oct.suspension();
        assert_eq!(cell16.n(), 8);
        assert_eq!(cell16.edge_count(), 24);
        assert_eq!(generate(&Family::CrossPolytope(3)).unwrap(), cell16);

        let two_points = Graph::empty(0).suspension();
        assert_eq!(two_points.n(), 2);
        assert_eq!(two_points.edge_count(), 0);
    }

    #[test]
    fn generators() {
        assert_eq!(generate(&Family::Utility).unwrap(), complete_bipartite(3, 3).unwrap());
        assert_eq!(generate(&Family::Figure8).unwrap().n(), 7);
        let ico = generate(&Family::Icosahedron).unwrap();
        assert_eq!((ico.n(), ico.edge_count()), (12, 30));
        for v in 0..12 {
            assert!(isomorphic(&ico.unit_sphere(v).unwrap(), &cycle(5).unwrap()));
        }
        let dod = generate(&Family::Dodecahedron).unwrap();
        assert_eq!((dod.n(), dod.edge_count()), (20, 30));
        assert!(dod.has_triangle().is_none());
        assert!((0..20).all(|v| dod.degree(v) == 3));
        assert!(cycle(2).is_err());
        assert!(wheel(3).is_err());
        assert!(bouquet(2, 3).is_err());
    }

    #[test]
    fn erdos_renyi_determinism_and_extremes() {
        let a = erdos_renyi(10, 0.5, 1).unwrap();
        let b = erdos_renyi(10, 0.5, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(erdos_renyi(7, 0.0, 9).unwrap().edge_count(), 0);
        assert_eq!(erdos_renyi(7, 1.0, 9).unwrap(), complete(7).unwrap());
    }

    #[test]
    fn isomorphism_basics() {
        assert!(isomorphic(&cycle(5).unwrap(), &cycle(5).unwrap()));
        assert!(!isomorphic(&cycle(6).unwrap(), &path(6).unwrap()));
        // same degree sequence, different graphs: C_6 vs two triangles
        let two_tri = complete(3).unwrap().disjoint_union(&complete(3).unwrap());
        assert!(!isomorphic(&cycle(6).unwrap(), &two_tri));
        // relabeled octahedron
        let oct = cross_polytope(2).unwrap();
        let perm = [3u32, 0, 5, 1, 4, 2];
        let relabeled = Graph::new(
            6,
            oct.edges().iter().map(|&(u, v)| (perm[u as usize], perm[v as usize])),
        )
        .unwrap();
        assert!(isomorphic(&oct, &relabeled));
    }

    #[test]
    fn injectivity_check() {
        let f = VertexFunction::from_ranks(&[0, 1, 2]);
        assert!(f.check_injective().is_ok());
        let g = VertexFunction::from_ranks(&[0, 1, 1]);
        assert!(matches!(g.check_injective(), Err(Error::NonInjective { a: 1, b: 2 })));
    }

    #[test]
    fn json_round_trip() {
        let g = generate(&Family::Kite).unwrap();
        let h = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(g, h);
        assert!(Graph::from_json("{\"n\":2,\"edges\":[[0,0]]}").is_err());
    }
}
