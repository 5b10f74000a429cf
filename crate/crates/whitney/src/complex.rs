//! The Whitney complex of a graph and its intersection tensors.
//!
//! The Whitney complex is the set of all complete subgraphs. Simplices are
//! kept in one canonical global order — dimension ascending, then
//! lexicographic on vertex lists — which downstream enumeration functions
//! rely on. Intersection counting uses a per-vertex star index: the
//! simplices meeting a given simplex are exactly the union of the stars of
//! its vertices, so pair and tuple scans touch only genuine interactions.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::{Error, Limits, Result};

/// A complete subgraph, stored as its strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    verts: Vec<u32>,
}

impl Simplex {
    pub fn new(mut verts: Vec<u32>) -> Result<Self> {
        verts.sort_unstable();
        if verts.is_empty() {
            return Err(Error::InvalidParam("a simplex needs at least one vertex".into()));
        }
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParam("repeated vertex in simplex".into()));
        }
        Ok(Simplex { verts })
    }

    pub fn vertices(&self) -> &[u32] {
        &self.verts
    }

    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    /// σ(x) = (-1)^dim(x).
    pub fn signature(&self) -> i64 {
        if self.dim() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All complete subgraphs of a graph, in canonical order, with a star
/// index mapping each vertex to the simplices containing it.
#[derive(Debug)]
pub struct WhitneyComplex {
    n: usize,
    /// Flattened vertex lists, canonical order.
    verts: Vec<u32>,
    /// Simplex i occupies verts[offsets[i] .. offsets[i + 1]].
    offsets: Vec<usize>,
    /// First simplex id of each dimension, with a final sentinel.
    dim_start: Vec<usize>,
    star_off: Vec<usize>,
    star_dat: Vec<u32>,
}

impl WhitneyComplex {
    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Clique number c = d + 1 (zero for the empty graph).
    pub fn clique_number(&self) -> usize {
        self.dim_start.len() - 1
    }

    pub fn verts_of(&self, id: usize) -> &[u32] {
        &self.verts[self.offsets[id]..self.offsets[id + 1]]
    }

    pub fn dim_of(&self, id: usize) -> usize {
        self.offsets[id + 1] - self.offsets[id] - 1
    }

    pub fn sign_of(&self, id: usize) -> i64 {
        if self.dim_of(id) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn simplex(&self, id: usize) -> Simplex {
        Simplex {
            verts: self.verts_of(id).to_vec(),
        }
    }

    /// Ids of all simplices of dimension k, a contiguous canonical range.
    pub fn ids_of_dim(&self, k: usize) -> std::ops::Range<usize> {
        if k + 1 < self.dim_start.len() {
            self.dim_start[k]..self.dim_start[k + 1]
        } else {
            0..0
        }
    }

    /// Ids of the simplices containing vertex v, ascending.
    pub fn star(&self, v: u32) -> &[u32] {
        &self.star_dat[self.star_off[v as usize]..self.star_off[v as usize + 1]]
    }

    /// v_k = number of k-simplices, for k = 0..d.
    pub fn f_vector(&self) -> Vec<i64> {
        (0..self.clique_number())
            .map(|k| self.ids_of_dim(k).len() as i64)
            .collect()
    }

    /// Euler characteristic, the alternating sum of the f-vector.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &v)| if k % 2 == 0 { v } else { -v })
            .sum()
    }

    /// Look up the id of a simplex by vertex list (must be sorted).
    /// Binary search within the lexicographic dimension bucket.
    pub fn id_of(&self, verts: &[u32]) -> Option<usize> {
        let k = verts.len().checked_sub(1)?;
        let range = self.ids_of_dim(k);
        if range.is_empty() {
            return None;
        }
        let width = verts.len();
        let base = self.offsets[range.start];
        let bucket = &self.verts[base..self.offsets[range.end]];
        let (mut lo, mut hi) = (0usize, bucket.len() / width);
        while lo < hi {
            let mid = (lo + hi) / 2;
            let probe = &bucket[mid * width..(mid + 1) * width];
            match probe.iter().cmp(verts.iter()) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(range.start + mid),
            }
        }
        None
    }
}

/// Enumerate every complete subgraph of `g` with dimension at most
/// `max_dim` (no cap when `None`). Simplices come out grouped by dimension
/// and lexicographically ordered within each dimension.
pub fn whitney(g: &Graph, max_dim: Option<usize>, limits: &Limits) -> Result<WhitneyComplex> {
    let n = g.n();
    let cap = limits.max_simplices;
    let depth_cap = max_dim.map(|d| d + 1).unwrap_or(usize::MAX);

    // per-dimension buckets of flattened vertex lists
    let mut buckets: Vec<Vec<u32>> = Vec::new();
    let mut count = 0usize;

    let mut stack: Vec<u32> = Vec::new();
    // candidate vertex lists per depth, all > last element and adjacent to
    // every stack element
    let mut cand_stack: Vec<Vec<u32>> = Vec::new();

    fn emit(
        stack: &[u32],
        buckets: &mut Vec<Vec<u32>>,
        count: &mut usize,
        cap: usize,
    ) -> Result<()> {
        *count += 1;
        if *count > cap {
            return Err(Error::CapExceeded {
                what: "simplex count",
                limit: cap as u64,
            });
        }
        let k = stack.len() - 1;
        if buckets.len() <= k {
            buckets.resize_with(k + 1, Vec::new);
        }
        buckets[k].extend_from_slice(stack);
        Ok(())
    }

    // depth-first extension in vertex order gives lexicographic output
    fn extend(
        g: &Graph,
        stack: &mut Vec<u32>,
        cand_stack: &mut Vec<Vec<u32>>,
        depth_cap: usize,
        buckets: &mut Vec<Vec<u32>>,
        count: &mut usize,
        cap: usize,
    ) -> Result<()> {
        emit(stack, buckets, count, cap)?;
        if stack.len() >= depth_cap {
            return Ok(());
        }
        let depth = stack.len();
        if cand_stack.len() <= depth {
            cand_stack.push(Vec::new());
        }
        let here = std::mem::take(&mut cand_stack[depth - 1]);
        for (i, &v) in here.iter().enumerate() {
            // next candidates: later entries of `here` adjacent to v
            let mut next = std::mem::take(&mut cand_stack[depth]);
            next.clear();
            match g.bit_row(v) {
                Some(row) => {
                    for &w in &here[i + 1..] {
                        if row[w as usize / 64] >> (w % 64) & 1 == 1 {
                            next.push(w);
                        }
                    }
                }
                None => {
                    for &w in &here[i + 1..] {
                        if g.has_edge(v, w) {
                            next.push(w);
                        }
                    }
                }
            }
            cand_stack[depth] = next;
            stack.push(v);
            extend(g, stack, cand_stack, depth_cap, buckets, count, cap)?;
            stack.pop();
        }
        cand_stack[depth - 1] = here;
        Ok(())
    }

    if depth_cap > 0 {
        for v in 0..n as u32 {
            stack.push(v);
            let cands: Vec<u32> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
            if cand_stack.is_empty() {
                cand_stack.push(Vec::new());
            }
            cand_stack[0] = cands;
            extend(g, &mut stack, &mut cand_stack, depth_cap, &mut buckets, &mut count, cap)?;
            stack.pop();
        }
    }

    // assemble canonical storage: dimension-major, lexicographic inside
    let mut verts = Vec::with_capacity(buckets.iter().map(|b| b.len()).sum());
    let mut offsets = Vec::with_capacity(count + 1);
    let mut dim_start = Vec::with_capacity(buckets.len() + 1);
    offsets.push(0);
    let mut id = 0usize;
    for (k, bucket) in buckets.iter().enumerate() {
        dim_start.push(id);
        for chunk in bucket.chunks_exact(k + 1) {
            verts.extend_from_slice(chunk);
            offsets.push(verts.len());
            id += 1;
        }
    }
    dim_start.push(id);
    if count == 0 {
        dim_start = vec![0];
    }

    // star index
    let mut star_count = vec![0usize; n];
    for i in 0..count {
        for &v in &verts[offsets[i]..offsets[i + 1]] {
            star_count[v as usize] += 1;
        }
    }
    let mut star_off = Vec::with_capacity(n + 1);
    star_off.push(0);
    for v in 0..n {
        star_off.push(star_off[v] + star_count[v]);
    }
    let mut star_dat = vec![0u32; star_off[n]];
    let mut fill = star_off.clone();
    for i in 0..count {
        for &v in &verts[offsets[i]..offsets[i + 1]] {
            star_dat[fill[v as usize]] = i as u32;
            fill[v as usize] += 1;
        }
    }

    Ok(WhitneyComplex {
        n,
        verts,
        offsets,
        dim_start,
        star_off,
        star_dat,
    })
}

/// All cliques of `g` whose vertices lie inside `set`, in the labels of
/// `g`, canonical order. These are exactly the simplices of the subgraph
/// generated by `set`.
pub fn cliques_within(g: &Graph, set: &[u32], limits: &Limits) -> Result<Vec<Simplex>> {
    let mut verts: Vec<u32> = set.to_vec();
    verts.sort_unstable();
    verts.dedup();
    if let Some(&v) = verts.last() {
        if v as usize >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
    }
    let (sub, map) = g.induced(&verts)?;
    let cx = whitney(&sub, None, limits)?;
    Ok((0..cx.len())
        .map(|i| Simplex {
            verts: cx.verts_of(i).iter().map(|&v| map[v as usize]).collect(),
        })
        .collect())
}

/// An order-k intersection tensor: entry (d_1, ..., d_k) counts ordered
/// k-tuples of simplices of those dimensions with a common vertex.
/// Order 1 is the f-vector, order 2 the f-matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FTensor {
    order: usize,
    dims: usize,
    data: Vec<i64>,
}

impl FTensor {
    pub fn zeros(order: usize, dims: usize) -> Self {
        FTensor {
            order,
            dims,
            data: vec![0; dims.pow(order as u32)],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Side length: the clique number of the underlying graph.
    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn get(&self, idx: &[usize]) -> i64 {
        assert_eq!(idx.len(), self.order);
        self.data[self.flat(idx)]
    }

    fn flat(&self, idx: &[usize]) -> usize {
        let mut f = 0;
        for &i in idx {
            debug_assert!(i < self.dims);
            f = f * self.dims + i;
        }
        f
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    /// Order-2 tensor as a nested Vec.
    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        assert_eq!(self.order, 2);
        (0..self.dims)
            .map(|i| self.data[i * self.dims..(i + 1) * self.dims].to_vec())
            .collect()
    }

    pub fn from_matrix(m: &[Vec<i64>]) -> Self {
        let dims = m.len();
        let mut data = Vec::with_capacity(dims * dims);
        for row in m {
            assert_eq!(row.len(), dims);
            data.extend_from_slice(row);
        }
        FTensor { order: 2, dims, data }
    }

    /// JSON value: nested arrays plus the order.
    pub fn to_json(&self) -> serde_json::Value {
        fn nest(data: &[i64], order: usize, dims: usize) -> serde_json::Value {
            if order == 0 {
                return serde_json::json!(data.first().copied().unwrap_or(0));
            }
            if order == 1 {
                return serde_json::json!(data);
            }
            let stride = data.len() / dims;
            serde_json::Value::Array(
                (0..dims)
                    .map(|i| nest(&data[i * stride..(i + 1) * stride], order - 1, dims))
                    .collect(),
            )
        }
        serde_json::json!({
            "order": self.order,
            "dims": self.dims,
            "data": nest(&self.data, self.order, self.dims),
        })
    }
}

/// Scratch space for star-union scans: an epoch-stamped membership mark
/// per simplex id, reused across calls without clearing.
pub(crate) struct Scratch {
    stamp: Vec<u32>,
    epoch: u32,
    pub buf: Vec<u32>,
}

impl Scratch {
    pub fn new(n_simplices: usize) -> Self {
        Scratch {
            stamp: vec![0; n_simplices],
            epoch: 0,
            buf: Vec::new(),
        }
    }

    /// Collect into `buf` the distinct simplex ids whose vertex lists meet
    /// `verts`: the union of the stars of the vertices.
    pub fn collect_meeting(&mut self, cx: &WhitneyComplex, verts: &[u32]) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        self.buf.clear();
        for &v in verts {
            for &id in cx.star(v) {
                if self.stamp[id as usize] != self.epoch {
                    self.stamp[id as usize] = self.epoch;
                    self.buf.push(id);
                }
            }
        }
    }
}

/// Sorted-list intersection into `out`.
pub(crate) fn intersect_sorted(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

pub(crate) fn intersects_sorted(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Visit every (first simplex, interaction summary) pair in parallel.
/// For each simplex x this calls `per_pair(state, x, y)` for every y
/// meeting x, with a fresh `state` from `init` per worker chunk, and folds
/// the states with `merge`. Returns the folded state and the number of
/// ordered pairs, or a cap error.
pub(crate) fn pair_scan<S, FI, FP, FM>(
    cx: &WhitneyComplex,
    limits: &Limits,
    init: FI,
    per_pair: FP,
    merge: FM,
    zero: S,
) -> Result<(S, u64)>
where
    S: Send,
    FI: Fn() -> S + Sync,
    FP: Fn(&mut S, usize, usize) + Sync,
    FM: Fn(S, S) -> S + Sync,
{
    let ids: Vec<usize> = (0..cx.len()).collect();
    let results: Result<Vec<(S, u64)>> = ids
        .par_chunks(256)
        .map(|chunk| {
            let mut scratch = Scratch::new(cx.len());
            let mut state = init();
            let mut pairs = 0u64;
            for &x in chunk {
                scratch.collect_meeting(cx, cx.verts_of(x));
                pairs += scratch.buf.len() as u64;
                if pairs > limits.max_tuples {
                    return Err(Error::CapExceeded {
                        what: "ordered pair count",
                        limit: limits.max_tuples,
                    });
                }
                for &y in &scratch.buf {
                    per_pair(&mut state, x, y as usize);
                }
            }
            Ok((state, pairs))
        })
        .collect();
    let mut total = zero;
    let mut pairs = 0u64;
    for (s, p) in results? {
        total = merge(total, s);
        pairs += p;
        if pairs > limits.max_tuples {
            return Err(Error::CapExceeded {
                what: "ordered pair count",
                limit: limits.max_tuples,
            });
        }
    }
    Ok((total, pairs))
}

/// The f-matrix: V_ij counts ordered pairs of an i-simplex and a
/// j-simplex with nonempty intersection. Symmetric; V_00 = v_0.
pub fn f_matrix(cx: &WhitneyComplex, limits: &Limits) -> Result<FTensor> {
    let c = cx.clique_number();
    let (data, _) = pair_scan(
        cx,
        limits,
        || vec![0i64; c * c],
        |acc, x, y| {
            acc[cx.dim_of(x) * c + cx.dim_of(y)] += 1;
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
        vec![0i64; c * c],
    )?;
    Ok(FTensor {
        order: 2,
        dims: c,
        data,
    })
}

/// Recursive ordered-tuple scan used by the order-k tensor and the Wu
/// characteristics: the running intersection of the tuple prunes the
/// candidate set, so only tuples with a common vertex are ever visited.
pub(crate) fn tuple_scan<S, FI, FT, FM>(
    cx: &WhitneyComplex,
    k: usize,
    limits: &Limits,
    init: FI,
    per_tuple: FT,
    merge: FM,
    zero: S,
) -> Result<(S, u64)>
where
    S: Send,
    FI: Fn() -> S + Sync,
    // called with (state, first simplex id, dims of the remaining tuple, product of their signs)
    FT: Fn(&mut S, usize, &[usize], i64) + Sync,
    FM: Fn(S, S) -> S + Sync,
{
    assert!(k >= 2);
    struct Rec<'a> {
        cx: &'a WhitneyComplex,
        k: usize,
        cap: u64,
    }
    impl Rec<'_> {
        #[allow(clippy::too_many_arguments)]
        fn go<S>(
            &self,
            depth: usize,
            inter: &[u32],
            dims: &mut Vec<usize>,
            sign: i64,
            scratches: &mut [Scratch],
            inters: &mut [Vec<u32>],
            state: &mut S,
            tuples: &mut u64,
            per_tuple: &impl Fn(&mut S, usize, &[usize], i64),
            first: usize,
        ) -> Result<()> {
            let (scratch, rest) = scratches.split_first_mut().unwrap();
            let (inter_buf, rest_inters) = inters.split_first_mut().unwrap();
            scratch.collect_meeting(self.cx, inter);
            if depth + 1 == self.k {
                *tuples += scratch.buf.len() as u64;
                if *tuples > self.cap {
                    return Err(Error::CapExceeded {
                        what: "ordered tuple count",
                        limit: self.cap,
                    });
                }
                for &y in &scratch.buf {
                    let y = y as usize;
                    dims.push(self.cx.dim_of(y));
                    per_tuple(state, first, dims, sign * self.cx.sign_of(y));
                    dims.pop();
                }
                return Ok(());
            }
            // the candidate list survives the recursion because deeper
            // levels use their own scratch
            let candidates = std::mem::take(&mut scratch.buf);
            for &y in &candidates {
                let y = y as usize;
                intersect_sorted(inter, self.cx.verts_of(y), inter_buf);
                debug_assert!(!inter_buf.is_empty());
                dims.push(self.cx.dim_of(y));
                let inter_next = std::mem::take(inter_buf);
                self.go(
                    depth + 1,
                    &inter_next,
                    dims,
                    sign * self.cx.sign_of(y),
                    rest,
                    rest_inters,
                    state,
                    tuples,
                    per_tuple,
                    first,
                )?;
                *inter_buf = inter_next;
                dims.pop();
            }
            scratch.buf = candidates;
            Ok(())
        }
    }

    let rec = Rec {
        cx,
        k,
        cap: limits.max_tuples,
    };
    let ids: Vec<usize> = (0..cx.len()).collect();
    let results: Result<Vec<(S, u64)>> = ids
        .par_chunks(128)
        .map(|chunk| {
            let mut scratches: Vec<Scratch> =
                (0..k - 1).map(|_| Scratch::new(cx.len())).collect();
            let mut inters: Vec<Vec<u32>> = vec![Vec::new(); k - 1];
            let mut state = init();
            let mut tuples = 0u64;
            let mut dims = Vec::with_capacity(k);
            for &x in chunk {
                rec.go(
                    1,
                    cx.verts_of(x),
                    &mut dims,
                    cx.sign_of(x),
                    &mut scratches,
                    &mut inters,
                    &mut state,
                    &mut tuples,
                    &per_tuple,
                    x,
                )?;
            }
            Ok((state, tuples))
        })
        .collect();
    let mut total = zero;
    let mut tuples = 0u64;
    for (s, t) in results? {
        total = merge(total, s);
        tuples += t;
        if tuples > limits.max_tuples {
            return Err(Error::CapExceeded {
                what: "ordered tuple count",
                limit: limits.max_tuples,
            });
        }
    }
    Ok((total, tuples))
}

/// The order-k intersection tensor. k = 1 reduces to the f-vector and
/// k = 2 to the f-matrix.
pub fn f_tensor(cx: &WhitneyComplex, k: usize, limits: &Limits) -> Result<FTensor> {
    if k == 0 {
        return Err(Error::InvalidParam("tensor order must be at least 1".into()));
    }
    let c = cx.clique_number();
    if k == 1 {
        let data = cx.f_vector();
        return Ok(FTensor {
            order: 1,
            dims: c,
            data,
        });
    }
    if k == 2 {
        return f_matrix(cx, limits);
    }
    let len = c.pow(k as u32);
    let (data, _) = tuple_scan(
        cx,
        k,
        limits,
        || vec![0i64; len],
        |acc, first, rest_dims, _| {
            let mut f = cx.dim_of(first);
            for &d in rest_dims {
                f = f * c + d;
            }
            acc[f] += 1;
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
        vec![0i64; len],
    )?;
    Ok(FTensor {
        order: k,
        dims: c,
        data,
    })
}

/// The intersection form V(A, B): entry (i, j) counts ordered pairs of an
/// i-simplex inside A and a j-simplex inside B meeting in at least one
/// vertex. Possibly asymmetric; sized by the clique numbers of the two
/// generated subgraphs.
pub fn intersection_form(
    g: &Graph,
    a: &[u32],
    b: &[u32],
    limits: &Limits,
) -> Result<FTensor> {
    let sa = cliques_within(g, a, limits)?;
    let sb = cliques_within(g, b, limits)?;
    let ca = sa.iter().map(|s| s.dim() + 1).max().unwrap_or(0);
    let cb = sb.iter().map(|s| s.dim() + 1).max().unwrap_or(0);
    let c = ca.max(cb);
    let mut data = vec![0i64; c * c];
    // star index over the B-side cliques
    let mut star: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for (j, s) in sb.iter().enumerate() {
        for &v in s.vertices() {
            star[v as usize].push(j as u32);
        }
    }
    let mut stamp = vec![usize::MAX; sb.len()];
    let mut pairs = 0u64;
    for (i, x) in sa.iter().enumerate() {
        for &v in x.vertices() {
            for &j in &star[v as usize] {
                if stamp[j as usize] != i {
                    stamp[j as usize] = i;
                    pairs += 1;
                    if pairs > limits.max_tuples {
                        return Err(Error::CapExceeded {
                            what: "ordered pair count",
                            limit: limits.max_tuples,
                        });
                    }
                    data[x.dim() * c + sb[j as usize].dim()] += 1;
                }
            }
        }
    }
    Ok(FTensor {
        order: 2,
        dims: c,
        data,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cross_polytope, cycle, generate, star, Family};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn complete_graph_f_vector_is_binomial() {
        let cx = whitney(&complete(4).unwrap(), None, &lim()).unwrap();
        assert_eq!(cx.f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(cx.euler_characteristic(), 1);
    }

    #[test]
    fn octahedron_f_vector() {
        let cx = whitney(&cross_polytope(2).unwrap(), None, &lim()).unwrap();
        assert_eq!(cx.f_vector(), vec![6, 12, 8]);
    }

    #[test]
    fn cross_polytope_towers() {
        let cx = whitney(&cross_polytope(3).unwrap(), None, &lim()).unwrap();
        assert_eq!(cx.f_vector(), vec![8, 24, 32, 16]);
        let cx = whitney(&cross_polytope(4).unwrap(), None, &lim()).unwrap();
        assert_eq!(cx.f_vector(), vec![10, 40, 80, 80, 32]);
    }

    #[test]
    fn kite_has_eleven_simplices() {
        let cx = whitney(&generate(&Family::Kite).unwrap(), None, &lim()).unwrap();
        assert_eq!(cx.len(), 11);
        assert_eq!(cx.f_vector(), vec![4, 5, 2]);
    }

    #[test]
    fn empty_graph_has_empty_f_vector() {
        let cx = whitney(&crate::graph::Graph::empty(0), None, &lim()).unwrap();
        assert!(cx.f_vector().is_empty());
        assert_eq!(cx.clique_number(), 0);
        assert_eq!(cx.euler_characteristic(), 0);
    }

    #[test]
    fn canonical_order_is_dim_then_lex() {
        let cx = whitney(&generate(&Family::Kite).unwrap(), None, &lim()).unwrap();
        let mut last_key: Option<(usize, Vec<u32>)> = None;
        for i in 0..cx.len() {
            let key = (cx.dim_of(i), cx.verts_of(i).to_vec());
            if let Some(prev) = &last_key {
                assert!(*prev < key, "order violated at id {i}");
            }
            last_key = Some(key);
        }
    }

    #[test]
    fn max_dim_cap_truncates() {
        let cx = whitney(&complete(5).unwrap(), Some(1), &lim()).unwrap();
        assert_eq!(cx.f_vector(), vec![5, 10]);
    }

    #[test]
    fn simplex_cap_errors() {
        let limits = Limits::default().with_max_simplices(10);
        let err = whitney(&complete(5).unwrap(), None, &limits).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { what: "simplex count", .. }));
    }

    #[test]
    fn star_index_is_consistent() {
        let cx = whitney(&cross_polytope(2).unwrap(), None, &lim()).unwrap();
        for v in 0..6u32 {
            for &id in cx.star(v) {
                assert!(cx.verts_of(id as usize).contains(&v));
            }
        }
        let total: usize = (0..6u32).map(|v| cx.star(v).len()).sum();
        let expect: usize = (0..cx.len()).map(|i| cx.dim_of(i) + 1).sum();
        assert_eq!(total, expect);
    }

    #[test]
    fn star3_f_matrix() {
        let cx = whitney(&star(3).unwrap(), None, &lim()).unwrap();
        let v = f_matrix(&cx, &lim()).unwrap();
        assert_eq!(v.to_matrix(), vec![vec![4, 6], vec![6, 9]]);
    }

    #[test]
    fn octahedron_f_matrix() {
        let cx = whitney(&cross_polytope(2).unwrap(), None, &lim()).unwrap();
        let v = f_matrix(&cx, &lim()).unwrap();
        assert_eq!(
            v.to_matrix(),
            vec![vec![6, 24, 24], vec![24, 84, 72], vec![24, 72, 56]]
        );
    }

    #[test]
    fn sixteen_cell_f_matrix() {
        let cx = whitney(&cross_polytope(3).unwrap(), None, &lim()).unwrap();
        let v = f_matrix(&cx, &lim()).unwrap();
        assert_eq!(
            v.to_matrix(),
            vec![
                vec![8, 48, 96, 64],
                vec![48, 264, 480, 288],
                vec![96, 480, 800, 448],
                vec![64, 288, 448, 240],
            ]
        );
    }

    #[test]
    fn tensor_low_orders_agree() {
        let g = generate(&Family::Kite).unwrap();
        let cx = whitney(&g, None, &lim()).unwrap();
        let t1 = f_tensor(&cx, 1, &lim()).unwrap();
        assert_eq!(t1.data(), cx.f_vector().as_slice());
        let t2 = f_tensor(&cx, 2, &lim()).unwrap();
        assert_eq!(t2, f_matrix(&cx, &lim()).unwrap());
    }

    #[test]
    fn intersection_form_on_the_three_star() {
        // the two length-two paths of the 3-star sharing the center and
        // one ray: two vertex-vertex matches, three vertex-edge matches
        // each way, four edge-edge matches
        let g = star(3).unwrap();
        let a = [0u32, 1, 2];
        let b = [0u32, 2, 3];
        let v = intersection_form(&g, &a, &b, &lim()).unwrap();
        assert_eq!(v.to_matrix(), vec![vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn intersection_form_edges() {
        let g = cycle(5).unwrap();
        let all: Vec<u32> = (0..5).collect();
        let full = intersection_form(&g, &all, &all, &lim()).unwrap();
        let cx = whitney(&g, None, &lim()).unwrap();
        assert_eq!(full, f_matrix(&cx, &lim()).unwrap());

        let zero = intersection_form(&g, &[0, 1], &[3], &lim()).unwrap();
        assert!(zero.data().iter().all(|&x| x == 0));
    }

    #[test]
    fn tuple_cap_errors() {
        let limits = Limits::default().with_max_tuples(5);
        let cx = whitney(&complete(4).unwrap(), None, &Limits::default()).unwrap();
        assert!(matches!(
            f_matrix(&cx, &limits),
            Err(Error::CapExceeded { what: "ordered pair count", .. })
        ));
    }

    #[test]
    fn id_lookup() {
        let cx = whitney(&generate(&Family::Kite).unwrap(), None, &lim()).unwrap();
        for i in 0..cx.len() {
            assert_eq!(cx.id_of(cx.verts_of(i)), Some(i));
        }
        assert_eq!(cx.id_of(&[1, 3]), None);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        let cx = whitney(&complete(3).unwrap(), None, &lim()).unwrap();
        assert!(f_tensor(&cx, 0, &lim()).is_err());
        assert!(matches!(
            intersection_form(&cycle(4).unwrap(), &[0, 9], &[1], &lim()),
            Err(Error::VertexOutOfRange { v: 9, .. })
        ));
        assert!(Simplex::new(vec![]).is_err());
        assert!(Simplex::new(vec![2, 2]).is_err());
        assert_eq!(Simplex::new(vec![3, 1]).unwrap().vertices(), &[1, 3]);
    }
}
