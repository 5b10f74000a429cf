//! Recognizers for discrete topology: contractibility, Evako spheres,
//! d-graphs with and without boundary, boundary extraction, inductive
//! dimension, and the Puiseux-type local test for vanishing valuations.
//!
//! The definitions are the recursive ones. A graph is contractible when
//! some vertex has a contractible unit sphere and a contractible residue;
//! K_1 is contractible. The empty graph is the (-1)-sphere; a d-sphere is
//! a graph whose unit spheres are (d-1)-spheres and which loses
//! contractibility-obstruction when punctured. A d-graph with boundary has
//! every unit sphere a (d-1)-sphere or (d-1)-ball, where a ball is a
//! contractible d-graph whose boundary is a (d-1)-sphere; the boundary
//! vertex set must induce a closed (d-1)-graph.
//!
//! All recognizers run inside a node budget. A blown budget surfaces as a
//! distinct indeterminate result, never as `false`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::whitney;
use crate::curvature::{FieldKind, VertexField};
use crate::graph::Graph;
use crate::valuation::Valuation;
use crate::{Error, Limits, Result};

/// Three-valued verdict: budget exhaustion is its own state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriBool {
    True,
    False,
    Indeterminate,
}

impl TriBool {
    pub fn is_true(self) -> bool {
        self == TriBool::True
    }
}

/// A known value or an out-of-budget marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri<T> {
    Known(T),
    Indeterminate,
}

impl<T> Tri<T> {
    pub fn known(self) -> Option<T> {
        match self {
            Tri::Known(t) => Some(t),
            Tri::Indeterminate => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contractibility {
    pub verdict: TriBool,
    /// Vertices in removal order, present when contractible: at each step
    /// the removed vertex had a contractible unit sphere in what remained.
    pub collapse: Option<Vec<u32>>,
}

/// d-graph classification: dimension and the boundary vertex set
/// (ambient labels, sorted; empty for closed d-graphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGraphClass {
    pub d: i32,
    pub boundary: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopoKind {
    Empty,
    Contractible,
    Sphere(i32),
    DGraph { d: i32, has_boundary: bool },
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoClassification {
    pub kind: TopoKind,
    pub boundary_vertices: Vec<u32>,
    /// Collapse order when the graph was recognized contractible.
    pub collapse: Option<Vec<u32>>,
    /// A vertex whose unit sphere fit no case, when classification is Other.
    pub failing_vertex: Option<u32>,
}

impl TopoClassification {
    pub fn to_json(&self) -> serde_json::Value {
        let (kind, dim) = match &self.kind {
            TopoKind::Empty => ("empty", None),
            TopoKind::Contractible => ("contractible", None),
            TopoKind::Sphere(d) => ("sphere", Some(*d)),
            TopoKind::DGraph { d, has_boundary } => {
                if *has_boundary {
                    ("dgraph-with-boundary", Some(*d))
                } else {
                    ("dgraph", Some(*d))
                }
            }
            TopoKind::Other => ("other", None),
        };
        serde_json::json!({
            "kind": kind,
            "dimension": dim,
            "boundary_vertices": self.boundary_vertices,
        })
    }
}

// ---------------------------------------------------------------------
// subset machinery

type Key = Box<[u64]>;

struct Budget {
    used: u64,
    limit: u64,
}

struct Exhausted;

type TopoResult<T> = std::result::Result<T, Exhausted>;

impl Budget {
    fn tick(&mut self) -> TopoResult<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }
}

/// Per-ambient-graph memo tables. All recursive questions are functions of
/// the vertex subset alone, so subsets of the ambient graph are the keys;
/// different removal orders reaching the same subset share one entry.
struct Memos {
    contractible: HashMap<Key, bool>,
    collapse_choice: HashMap<Key, u32>,
    sphere: HashMap<Key, Option<i32>>,
    ball: HashMap<Key, Option<i32>>,
}

impl Memos {
    fn new() -> Self {
        Memos {
            contractible: HashMap::new(),
            collapse_choice: HashMap::new(),
            sphere: HashMap::new(),
            ball: HashMap::new(),
        }
    }
}

struct Scope<'g> {
    g: &'g Graph,
    words: usize,
}

impl<'g> Scope<'g> {
    fn new(g: &'g Graph) -> Self {
        Scope {
            g,
            words: g.n().div_ceil(64),
        }
    }

    fn full(&self) -> Vec<u64> {
        let n = self.g.n();
        let mut bits = vec![!0u64; self.words];
        if n % 64 != 0 && self.words > 0 {
            bits[self.words - 1] = (1u64 << (n % 64)) - 1;
        }
        bits
    }

    fn members(&self, bits: &[u64]) -> Vec<u32> {
        let mut out = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let b = x.trailing_zeros();
                out.push(w as u32 * 64 + b);
                x &= x - 1;
            }
        }
        out
    }

    fn count(&self, bits: &[u64]) -> usize {
        bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains(&self, bits: &[u64], v: u32) -> bool {
        bits[v as usize / 64] >> (v % 64) & 1 == 1
    }

    fn without(&self, bits: &[u64], v: u32) -> Vec<u64> {
        let mut out = bits.to_vec();
        out[v as usize / 64] &= !(1u64 << (v % 64));
        out
    }

    /// Unit sphere of v inside the subset: neighbors of v, intersected.
    fn sphere(&self, bits: &[u64], v: u32) -> Vec<u64> {
        match self.g.bit_row(v) {
            Some(row) => bits.iter().zip(row).map(|(a, b)| a & b).collect(),
            None => {
                let mut out = vec![0u64; self.words];
                for &w in self.g.neighbors(v) {
                    if self.contains(bits, w) {
                        out[w as usize / 64] |= 1 << (w % 64);
                    }
                }
                out
            }
        }
    }

    fn degree_in(&self, bits: &[u64], v: u32) -> usize {
        self.count(&self.sphere(bits, v))
    }

    fn connected(&self, bits: &[u64]) -> bool {
        let members = self.members(bits);
        if members.len() <= 1 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        let mut stack = vec![members[0]];
        seen[members[0] as usize / 64] |= 1 << (members[0] % 64);
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in self.g.neighbors(v) {
                if self.contains(bits, w) && seen[w as usize / 64] >> (w % 64) & 1 == 0 {
                    seen[w as usize / 64] |= 1 << (w % 64);
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == members.len()
    }

    fn key(&self, bits: &[u64]) -> Key {
        bits.to_vec().into_boxed_slice()
    }
}

fn contractible_bits(
    sc: &Scope,
    memos: &mut Memos,
    budget: &mut Budget,
    bits: &[u64],
) -> TopoResult<bool> {
    let n = sc.count(bits);
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let key = sc.key(bits);
    if let Some(&r) = memos.contractible.get(&key) {
        return Ok(r);
    }
    budget.tick()?;
    // contractible graphs are connected
    if !sc.connected(bits) {
        memos.contractible.insert(key, false);
        return Ok(false);
    }
    // explore低-degree vertices first: their spheres are small
    let mut order = sc.members(bits);
    order.sort_by_key(|&v| sc.degree_in(bits, v));
    for &v in &order {
        let sphere = sc.sphere(bits, v);
        if contractible_bits(sc, memos, budget, &sphere)? {
            let rest = sc.without(bits, v);
            if contractible_bits(sc, memos, budget, &rest)? {
                memos.contractible.insert(key.clone(), true);
                memos.collapse_choice.insert(key, v);
                return Ok(true);
            }
        }
    }
    memos.contractible.insert(key, false);
    Ok(false)
}

fn sphere_bits(
    sc: &Scope,
    memos: &mut Memos,
    budget: &mut Budget,
    bits: &[u64],
) -> TopoResult<Option<i32>> {
    let n = sc.count(bits);
    if n == 0 {
        return Ok(Some(-1));
    }
    let key = sc.key(bits);
    if let Some(r) = memos.sphere.get(&key) {
        return Ok(*r);
    }
    budget.tick()?;
    let members = sc.members(bits);
    // all unit spheres must be (d-1)-spheres of one common dimension
    let mut link_dim: Option<i32> = None;
    let mut ok = true;
    for &v in &members {
        let s = sc.sphere(bits, v);
        match sphere_bits(sc, memos, budget, &s)? {
            Some(e) => match link_dim {
                None => link_dim = Some(e),
                Some(d) if d == e => {}
                _ => {
                    ok = false;
                    break;
                }
            },
            None => {
                ok = false;
                break;
            }
        }
    }
    let result = if !ok {
        None
    } else {
        let d = link_dim.expect("nonempty graph has vertices") + 1;
        // puncturing some vertex must leave a contractible graph
        let mut punctured_ok = false;
        for &v in &members {
            let rest = sc.without(bits, v);
            if contractible_bits(sc, memos, budget, &rest)? {
                punctured_ok = true;
                break;
            }
        }
        if punctured_ok {
            Some(d)
        } else {
            None
        }
    };
    memos.sphere.insert(key, result);
    Ok(result)
}

/// Classification of the subset as a d-graph (possibly with boundary):
/// dimension plus boundary members, or None. Does not yet validate the
/// boundary; see [`dgraph_graph`].
fn dgraph_bits_raw(
    sc: &Scope,
    memos: &mut Memos,
    budget: &mut Budget,
    bits: &[u64],
) -> TopoResult<Option<(i32, Vec<u32>, Option<u32>)>> {
    let members = sc.members(bits);
    if members.is_empty() {
        return Ok(Some((-1, Vec::new(), None)));
    }
    let mut dim: Option<i32> = None;
    let mut boundary = Vec::new();
    for &v in &members {
        let s = sc.sphere(bits, v);
        let link_dim = if let Some(e) = sphere_bits(sc, memos, budget, &s)? {
            Some((e, false))
        } else {
            ball_bits(sc, memos, budget, &s)?.map(|e| (e, true))
        };
        match link_dim {
            Some((e, is_boundary)) => {
                match dim {
                    None => dim = Some(e + 1),
                    Some(d) if d == e + 1 => {}
                    _ => return Ok(None),
                }
                if is_boundary {
                    boundary.push(v);
                }
            }
            None => return Ok(Some((i32::MIN, Vec::new(), Some(v)))),
        }
    }
    Ok(Some((dim.unwrap(), boundary, None)))
}

/// Ball test for a subset: a contractible d-graph whose boundary is a
/// (d-1)-sphere. Returns the ball's dimension.
fn ball_bits(
    sc: &Scope,
    memos: &mut Memos,
    budget: &mut Budget,
    bits: &[u64],
) -> TopoResult<Option<i32>> {
    if sc.count(bits) == 0 {
        return Ok(None);
    }
    let key = sc.key(bits);
    if let Some(r) = memos.ball.get(&key) {
        return Ok(*r);
    }
    budget.tick()?;
    let result = (|| -> TopoResult<Option<i32>> {
        let raw = match dgraph_bits_raw(sc, memos, budget, bits)? {
            Some((d, boundary, None)) if d >= 0 => (d, boundary),
            _ => return Ok(None),
        };
        let (d, boundary) = raw;
        if !contractible_bits(sc, memos, budget, bits)? {
            return Ok(None);
        }
        // the boundary must be a (d-1)-sphere
        let (members, _) = boundary_realization(sc.g, &sc.members(bits), &boundary, d);
        match classify_boundary_graph(&members, budget)? {
            Some(BoundaryShape::Sphere(e)) if e == d - 1 => Ok(Some(d)),
            _ => {
                // the (-1)-sphere case: a 0-ball is one vertex with empty
                // boundary, handled by the realization being empty
                Ok(None)
            }
        }
    })()?;
    memos.ball.insert(key, result);
    Ok(result)
}

/// The boundary of a d-graph realized as a graph of its own. Boundary
/// vertices keep the edges lying in boundary faces; for d = 1 the facets
/// are the edges themselves, so the boundary is the bare endpoint pair.
fn boundary_realization(
    g: &Graph,
    _universe: &[u32],
    boundary: &[u32],
    d: i32,
) -> (Graph, Vec<u32>) {
    let mut verts: Vec<u32> = boundary.to_vec();
    verts.sort_unstable();
    if d <= 1 {
        return (Graph::empty(verts.len()), verts);
    }
    let (graph, map) = g.induced(&verts).expect("boundary vertices are in range");
    (graph, map)
}

enum BoundaryShape {
    Sphere(i32),
    Closed(i32),
    Invalid,
}

/// Classify a realized boundary graph from scratch (fresh ambient scope,
/// shared budget). Terminates because the dimension strictly drops.
fn classify_boundary_graph(graph: &Graph, budget: &mut Budget) -> TopoResult<Option<BoundaryShape>> {
    let sc = Scope::new(graph);
    let mut memos = Memos::new();
    let full = sc.full();
    if let Some(d) = sphere_bits(&sc, &mut memos, budget, &full)? {
        return Ok(Some(BoundaryShape::Sphere(d)));
    }
    match dgraph_bits_raw(&sc, &mut memos, budget, &full)? {
        Some((d, boundary, None)) if boundary.is_empty() && d >= 0 => {
            Ok(Some(BoundaryShape::Closed(d)))
        }
        _ => Ok(Some(BoundaryShape::Invalid)),
    }
}

/// Full d-graph recognition on a graph: raw sphere-or-ball classification
/// of every link, then validation that the boundary set induces a closed
/// (d-1)-graph (or is empty).
fn dgraph_graph(g: &Graph, budget: &mut Budget) -> TopoResult<Option<DGraphClass>> {
    let sc = Scope::new(g);
    let mut memos = Memos::new();
    let full = sc.full();
    let (d, boundary) = match dgraph_bits_raw(&sc, &mut memos, budget, &full)? {
        Some((d, b, None)) if d >= 0 => (d, b),
        _ => return Ok(None),
    };
    if boundary.is_empty() {
        return Ok(Some(DGraphClass { d, boundary }));
    }
    let (bgraph, _) = boundary_realization(g, &[], &boundary, d);
    // dimension check cuts the recursion: the boundary must be exactly
    // (d-1)-dimensional
    let bcx = match whitney(&bgraph, None, &Limits::default()) {
        Ok(cx) => cx,
        Err(_) => return Ok(None),
    };
    if bcx.clique_number() as i32 != d {
        return Ok(None);
    }
    match classify_boundary_graph(&bgraph, budget)? {
        Some(BoundaryShape::Sphere(e)) | Some(BoundaryShape::Closed(e)) if e == d - 1 => {
            Ok(Some(DGraphClass { d, boundary }))
        }
        _ => Ok(None),
    }
}

// ---------------------------------------------------------------------
// public recognizers

/// Is the graph contractible in the recursive sense? Comes with a
/// replayable collapse order on success.
pub fn is_contractible(g: &Graph, limits: &Limits) -> Contractibility {
    let sc = Scope::new(g);
    let mut memos = Memos::new();
    let mut budget = Budget {
        used: 0,
        limit: limits.topo_budget,
    };
    let full = sc.full();
    match contractible_bits(&sc, &mut memos, &mut budget, &full) {
        Err(Exhausted) => Contractibility {
            verdict: TriBool::Indeterminate,
            collapse: None,
        },
        Ok(false) => Contractibility {
            verdict: TriBool::False,
            collapse: None,
        },
        Ok(true) => {
            // walk the recorded choices
            let mut collapse = Vec::with_capacity(g.n().saturating_sub(1));
            let mut bits = full;
            while sc.count(&bits) > 1 {
                let v = *memos
                    .collapse_choice
                    .get(&sc.key(&bits))
                    .expect("every contractible step recorded its vertex");
                collapse.push(v);
                bits = sc.without(&bits, v);
            }
            Contractibility {
                verdict: TriBool::True,
                collapse: Some(collapse),
            }
        }
    }
}

/// Evako sphere recognition; `Some(d)` for a d-sphere (the empty graph is
/// the (-1)-sphere).
pub fn is_sphere(g: &Graph, limits: &Limits) -> Tri<Option<i32>> {
    let sc = Scope::new(g);
    let mut memos = Memos::new();
    let mut budget = Budget {
        used: 0,
        limit: limits.topo_budget,
    };
    let full = sc.full();
    match sphere_bits(&sc, &mut memos, &mut budget, &full) {
        Err(Exhausted) => Tri::Indeterminate,
        Ok(r) => Tri::Known(r),
    }
}

/// d-graph recognition with the interior/boundary partition.
pub fn is_dgraph(g: &Graph, limits: &Limits) -> Tri<Option<DGraphClass>> {
    if g.n() == 0 {
        return Tri::Known(None);
    }
    let mut budget = Budget {
        used: 0,
        limit: limits.topo_budget,
    };
    match dgraph_graph(g, &mut budget) {
        Err(Exhausted) => Tri::Indeterminate,
        Ok(r) => Tri::Known(r),
    }
}

/// The boundary δG of a d-graph with boundary, as a graph plus the map
/// from its vertices to ambient labels. Errors when the graph is not a
/// d-graph with nonempty boundary.
pub fn boundary(g: &Graph, limits: &Limits) -> Result<(Graph, Vec<u32>)> {
    match is_dgraph(g, limits) {
        Tri::Indeterminate => Err(Error::Indeterminate),
        Tri::Known(None) => Err(Error::NotBoundary),
        Tri::Known(Some(class)) => {
            if class.boundary.is_empty() {
                return Err(Error::NotBoundary);
            }
            Ok(boundary_realization(g, &[], &class.boundary, class.d))
        }
    }
}

/// One classification pass: empty / sphere / d-graph / contractible /
/// other, with witness data.
pub fn classify(g: &Graph, limits: &Limits) -> Result<TopoClassification> {
    if g.n() == 0 {
        return Ok(TopoClassification {
            kind: TopoKind::Empty,
            boundary_vertices: Vec::new(),
            collapse: None,
            failing_vertex: None,
        });
    }
    match is_sphere(g, limits) {
        Tri::Indeterminate => return Err(Error::Indeterminate),
        Tri::Known(Some(d)) => {
            return Ok(TopoClassification {
                kind: TopoKind::Sphere(d),
                boundary_vertices: Vec::new(),
                collapse: None,
                failing_vertex: None,
            })
        }
        Tri::Known(None) => {}
    }
    match is_dgraph(g, limits) {
        Tri::Indeterminate => return Err(Error::Indeterminate),
        Tri::Known(Some(class)) => {
            return Ok(TopoClassification {
                kind: TopoKind::DGraph {
                    d: class.d,
                    has_boundary: !class.boundary.is_empty(),
                },
                boundary_vertices: class.boundary,
                collapse: None,
                failing_vertex: None,
            })
        }
        Tri::Known(None) => {}
    }
    let contract = is_contractible(g, limits);
    match contract.verdict {
        TriBool::Indeterminate => Err(Error::Indeterminate),
        TriBool::True => Ok(TopoClassification {
            kind: TopoKind::Contractible,
            boundary_vertices: Vec::new(),
            collapse: contract.collapse,
            failing_vertex: None,
        }),
        TriBool::False => {
            // report a vertex whose link is neither a sphere nor a ball,
            // when there is one
            let sc = Scope::new(g);
            let mut memos = Memos::new();
            let mut budget = Budget {
                used: 0,
                limit: limits.topo_budget,
            };
            let full = sc.full();
            let failing = match dgraph_bits_raw(&sc, &mut memos, &mut budget, &full) {
                Ok(Some((_, _, fail))) => fail,
                _ => None,
            };
            Ok(TopoClassification {
                kind: TopoKind::Other,
                boundary_vertices: Vec::new(),
                collapse: None,
                failing_vertex: failing,
            })
        }
    }
}

/// Inductive dimension: -1 for the empty graph, otherwise one plus the
/// average dimension of the unit spheres. An isolated vertex has
/// dimension 0 even inside a graph with edges (a convention some older
/// code disagrees with, scoring such vertices -1).
pub fn inductive_dimension(g: &Graph) -> BigRational {
    fn dim_of(
        sc: &Scope,
        memo: &mut HashMap<Key, BigRational>,
        bits: &[u64],
    ) -> BigRational {
        let n = sc.count(bits);
        if n == 0 {
            return -BigRational::one();
        }
        let key = sc.key(bits);
        if let Some(d) = memo.get(&key) {
            return d.clone();
        }
        let mut sum = BigRational::zero();
        for v in sc.members(bits) {
            let s = sc.sphere(bits, v);
            sum += dim_of(sc, memo, &s);
        }
        let d = BigRational::one() + sum / BigRational::from(BigInt::from(n));
        memo.insert(key, d.clone());
        d
    }
    let sc = Scope::new(g);
    let mut memo = HashMap::new();
    let full = sc.full();
    dim_of(&sc, &mut memo, &full)
}

/// The Puiseux gap field 2·X(B(v)) − X(S(v)); identically zero is the
/// local sufficient condition for X(G) = 0.
pub fn puiseux_gap(g: &Graph, x: &Valuation) -> Result<VertexField> {
    let limits = Limits::default();
    let mut values = Vec::with_capacity(g.n());
    for v in 0..g.n() as u32 {
        let ball = g.unit_ball(v)?;
        let sphere = g.unit_sphere(v)?;
        let xb = x.apply(&whitney(&ball, None, &limits)?.f_vector())?;
        let xs = x.apply(&whitney(&sphere, None, &limits)?.f_vector())?;
        values.push(BigRational::from(BigInt::from(2) * xb - xs));
    }
    Ok(VertexField::new(FieldKind::Curvature, values))
}
