//! Edge-space linear algebra over GF(2).
//!
//! Vectors are indexed by the host graph's lexicographic edge ids. Bases are
//! kept in reduced row-echelon form with pivots on the lowest set bit, so
//! every basis is deterministic and regression-friendly.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, SidedGraph, TriangleSystem};

/// Default vertex cap for induced-cycle enumeration.
pub const INDUCED_CYCLE_VERTEX_CAP: usize = 16;
/// Cap on the number of enumerated cycles.
pub const CYCLE_COUNT_CAP: usize = 1_000_000;

/// A vector in the edge space of a fixed host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeVector {
    bits: BitVec,
}

impl EdgeVector {
    pub fn zeros(edge_count: usize) -> Self {
        EdgeVector {
            bits: BitVec::zeros(edge_count),
        }
    }

    pub fn from_edge_ids(edge_count: usize, ids: &[usize]) -> Self {
        let mut v = EdgeVector::zeros(edge_count);
        for &i in ids {
            v.bits.set(i);
        }
        v
    }

    /// Indicator of a vertex cycle `v0 v1 ... vk v0`.
    pub fn from_cycle(edges: &EdgeList, cycle: &[u32]) -> Self {
        let mut v = EdgeVector::zeros(edges.len());
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            v.bits
                .set(edges.id(a, b).expect("cycle edge missing from host"));
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.len() == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.bits.set(i)
    }

    #[inline]
    pub fn unset(&mut self, i: usize) {
        self.bits.clear(i)
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn xor_assign(&mut self, other: &EdgeVector) {
        self.bits.xor_assign(&other.bits);
    }

    pub fn dot(&self, other: &EdgeVector) -> bool {
        self.bits.dot_f2(&other.bits)
    }

    pub fn support(&self) -> Vec<usize> {
        self.bits.to_indices()
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    /// Hex export: nibble `j` carries edges `4j..4j+3`, lowest edge in the
    /// lowest bit. String length is `ceil(m/4)`.
    pub fn to_hex(&self) -> String {
        let m = self.bits.len();
        let mut out = String::with_capacity(m.div_ceil(4));
        for j in 0..m.div_ceil(4) {
            let mut nib = 0u8;
            for k in 0..4 {
                let i = 4 * j + k;
                if i < m && self.bits.get(i) {
                    nib |= 1 << k;
                }
            }
            out.push(char::from_digit(nib as u32, 16).unwrap());
        }
        out
    }

    pub fn from_hex(edge_count: usize, hex: &str) -> Result<Self> {
        if hex.len() != edge_count.div_ceil(4) {
            return Err(Error::Parse(format!(
                "hex length {} does not match {} edges",
                hex.len(),
                edge_count
            )));
        }
        let mut v = EdgeVector::zeros(edge_count);
        for (j, ch) in hex.chars().enumerate() {
            let nib = ch
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("bad hex digit {ch:?}")))?
                as u8;
            for k in 0..4 {
                if nib & (1 << k) != 0 {
                    let i = 4 * j + k;
                    if i >= edge_count {
                        return Err(Error::Parse("hex sets bits past edge count".into()));
                    }
                    v.bits.set(i);
                }
            }
        }
        Ok(v)
    }
}

/// Row-reduced basis of a subspace of the edge space.
#[derive(Clone, Debug, Default)]
pub struct F2Basis {
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl F2Basis {
    pub fn new() -> Self {
        F2Basis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = EdgeVector> + '_ {
        self.rows.iter().map(|b| EdgeVector { bits: b.clone() })
    }

    /// Reduce `v` against the basis in place.
    pub fn reduce(&self, v: &mut EdgeVector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.bits.get(p) {
                v.bits.xor_assign(row);
            }
        }
    }

    /// Insert a vector; returns whether the rank grew. Keeps reduced
    /// row-echelon form with rows ordered by pivot (lowest edge id first).
    pub fn insert(&mut self, v: &EdgeVector) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v);
        let Some(p) = v.bits.first_one() else {
            return false;
        };
        // Back-substitute so existing rows stay reduced against the new one.
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&v.bits);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v.bits);
        true
    }

    pub fn contains(&self, v: &EdgeVector) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v);
        v.is_zero()
    }

    /// Do the two bases span the same subspace?
    pub fn same_span(&self, other: &F2Basis) -> bool {
        self.rank() == other.rank()
            && other
                .rows
                .iter()
                .all(|r| self.contains(&EdgeVector { bits: r.clone() }))
    }
}

/// `v . b = 0` over GF(2) for every generator `b`.
pub fn is_orthogonal(v: &EdgeVector, basis: &F2Basis) -> bool {
    basis.rows.iter().all(|row| !v.bits.dot_f2(row))
}

/// Basis of the cycle space from fundamental cycles of a BFS spanning
/// forest. Dimension is `|E| - |V| + #components`.
pub fn cycle_space_basis(g: &Graph) -> F2Basis {
    let edges = EdgeList::from_graph(g);
    let mut parent = vec![u32::MAX; g.n()];
    let mut depth = vec![0usize; g.n()];
    let mut seen = vec![false; g.n()];
    let mut basis = F2Basis::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut frontier = vec![root as u32];
        while let Some(u) = frontier.pop() {
            for w in g.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = u;
                    depth[w as usize] = depth[u as usize] + 1;
                    frontier.push(w);
                }
            }
        }
    }
    for (eid, &(u, v)) in edges.pairs().iter().enumerate() {
        if parent[v as usize] == u || parent[u as usize] == v {
            continue; // tree edge
        }
        let mut vec = EdgeVector::zeros(edges.len());
        vec.bits.set(eid);
        let (mut a, mut b) = (u, v);
        while depth[a as usize] > depth[b as usize] {
            let pa = parent[a as usize];
            vec.bits.set(edges.id(a, pa).unwrap());
            a = pa;
        }
        while depth[b as usize] > depth[a as usize] {
            let pb = parent[b as usize];
            vec.bits.set(edges.id(b, pb).unwrap());
            b = pb;
        }
        while a != b {
            let (pa, pb) = (parent[a as usize], parent[b as usize]);
            vec.bits.set(edges.id(a, pa).unwrap());
            vec.bits.set(edges.id(b, pb).unwrap());
            a = pa;
            b = pb;
        }
        basis.insert(&vec);
    }
    basis
}

/// Basis of the cut space from star cuts; dimension `|V| - #components`.
pub fn cut_space_basis(g: &Graph) -> F2Basis {
    let edges = EdgeList::from_graph(g);
    let mut basis = F2Basis::new();
    for v in 0..g.n() as u32 {
        let mut vec = EdgeVector::zeros(edges.len());
        for w in g.neighbors(v) {
            vec.bits.set(edges.id(v, w).unwrap());
        }
        basis.insert(&vec);
    }
    basis
}

/// Enumerate the chordless (induced) cycles of `g`, optionally capped by
/// length. Each cycle is reported once, as a vertex list starting at its
/// smallest vertex.
pub fn induced_cycles(g: &Graph, length_cap: Option<usize>) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut path: Vec<u32> = Vec::new();
    for s in 0..g.n() as u32 {
        for u in g.neighbors(s) {
            if u <= s {
                continue;
            }
            path.clear();
            path.push(s);
            path.push(u);
            extend_chordless(g, &mut path, length_cap, &mut out)?;
        }
    }
    Ok(out)
}

fn extend_chordless(
    g: &Graph,
    path: &mut Vec<u32>,
    length_cap: Option<usize>,
    out: &mut Vec<Vec<u32>>,
) -> Result<()> {
    let s = path[0];
    let last = *path.last().unwrap();
    for w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        // A chord to any internal path vertex disqualifies w entirely.
        if path[1..path.len() - 1].iter().any(|&x| g.has_edge(w, x)) {
            continue;
        }
        if g.has_edge(w, s) {
            // Closing edge; canonical orientation keeps each cycle once.
            if path[1] < w {
                if out.len() >= CYCLE_COUNT_CAP {
                    return Err(Error::SizeCap {
                        what: "induced cycle count",
                        got: out.len() + 1,
                        cap: CYCLE_COUNT_CAP,
                    });
                }
                let mut cyc = path.clone();
                cyc.push(w);
                out.push(cyc);
            }
            // Extending past w would leave the chord w..s in place.
            continue;
        }
        if let Some(cap) = length_cap {
            if path.len() + 1 >= cap {
                continue;
            }
        }
        path.push(w);
        extend_chordless(g, path, length_cap, out)?;
        path.pop();
    }
    Ok(())
}

#[derive(Debug)]
pub struct InducedCyclesReport {
    pub generates: bool,
    pub cycle_space_dim: usize,
    /// All induced cycles found.
    pub cycles: Vec<Vec<u32>>,
    /// Indices into `cycles` forming a spanning subset of the cycle space
    /// (a basis when `generates` holds).
    pub spanning_subset: Vec<usize>,
}

/// Check that the induced cycles generate the cycle space (vertex cap
/// defaults to [`INDUCED_CYCLE_VERTEX_CAP`]).
pub fn induced_cycles_generate(g: &Graph) -> Result<InducedCyclesReport> {
    induced_cycles_generate_with_cap(g, INDUCED_CYCLE_VERTEX_CAP)
}

pub fn induced_cycles_generate_with_cap(g: &Graph, cap: usize) -> Result<InducedCyclesReport> {
    if g.n() > cap {
        return Err(Error::SizeCap {
            what: "induced cycle enumeration vertices",
            got: g.n(),
            cap,
        });
    }
    let edges = EdgeList::from_graph(g);
    let full = cycle_space_basis(g);
    let cycles = induced_cycles(g, None)?;
    let mut basis = F2Basis::new();
    let mut spanning = Vec::new();
    for (i, cyc) in cycles.iter().enumerate() {
        if basis.insert(&EdgeVector::from_cycle(&edges, cyc)) {
            spanning.push(i);
        }
    }
    Ok(InducedCyclesReport {
        generates: basis.same_span(&full),
        cycle_space_dim: full.rank(),
        cycles,
        spanning_subset: spanning,
    })
}

/// True iff the cycles of length at most `length_cap` span the cycle space.
/// Chordless cycles suffice: a short cycle with a chord is the sum of two
/// shorter ones.
pub fn short_cycles_generate(g: &Graph, length_cap: usize) -> Result<bool> {
    if length_cap < 3 {
        return Err(Error::InvalidArgument(
            "cycle length cap must be at least 3".into(),
        ));
    }
    let edges = EdgeList::from_graph(g);
    let full = cycle_space_basis(g);
    let mut basis = F2Basis::new();
    for cyc in induced_cycles(g, Some(length_cap))? {
        basis.insert(&EdgeVector::from_cycle(&edges, cyc.as_slice()));
    }
    Ok(basis.same_span(&full))
}

/// Basis of the span of the external triangles of `k` whose three edges all
/// lie in `g_edges` (an edge-id mask over `E(k)`).
pub fn external_triangle_space(k: &SidedGraph, g_edges: &BitVec) -> F2Basis {
    let ts = crate::graph::enumerate_triangles(k.graph());
    external_triangle_space_from(k, &ts, g_edges)
}

/// Same, reusing an already enumerated triangle system of `k.graph()`.
pub fn external_triangle_space_from(
    k: &SidedGraph,
    ts: &TriangleSystem,
    g_edges: &BitVec,
) -> F2Basis {
    let m = ts.edges().len();
    debug_assert_eq!(g_edges.len(), m);
    let mut basis = F2Basis::new();
    for i in 0..ts.len() {
        let ids = ts.edge_ids_of_triangle(i);
        if !ids.iter().all(|&e| g_edges.get(e)) {
            continue;
        }
        let [a, b, c] = ts.triangle(i);
        let external = [(a, b), (a, c), (b, c)]
            .iter()
            .any(|&(x, y)| k.side(x) != k.side(y));
        if external {
            basis.insert(&EdgeVector::from_edge_ids(m, &ids));
        }
    }
    basis
}

/// Outcome of [`decompose_gamma`].
#[derive(Debug)]
pub enum DecomposeOutcome {
    Found {
        a: Vec<u32>,
        b: Vec<u32>,
        z: EdgeVector,
        z_max_degree: usize,
    },
    /// At exact sizes: no side-consistent bipartition of all of `V(K)`
    /// exists. At heuristic sizes this is not a proof of nonexistence.
    NotFound,
}

/// When one side has at most this many parity components the flip choice is
/// exhaustive, hence exact.
pub const DECOMPOSE_EXACT_COMPONENT_CAP: usize = 16;

/// Search for a bipartition `A ⊔ B` of `V(K)` such that
/// `Z := gamma xor cut_G(A,B)` contains only external edges, where `G` is
/// the subgraph of `k` given by the `g_edges` mask.
///
/// Internal edges constrain the bipartition exactly (a parity 2-coloring per
/// side component of `G`); the leftover freedom, one flip per component, is
/// spent minimizing `|Z|` — exhaustively below
/// [`DECOMPOSE_EXACT_COMPONENT_CAP`] components per side, greedily above.
pub fn decompose_gamma(
    k: &SidedGraph,
    gamma: &EdgeVector,
    g_edges: &BitVec,
) -> Result<DecomposeOutcome> {
    let edges = EdgeList::from_graph(k.graph());
    let m = edges.len();
    if gamma.len() != m || g_edges.len() != m {
        return Err(Error::InvalidArgument(
            "gamma / g_edges length does not match host edge count".into(),
        ));
    }
    for i in gamma.bits.iter_ones() {
        if !g_edges.get(i) {
            return Err(Error::InvalidArgument(format!(
                "gamma edge {i} lies outside g_edges"
            )));
        }
    }

    let n = k.n();
    // Parity BFS over internal G-edges: gamma edges force opposite colors,
    // the rest force equal colors.
    let mut color = vec![false; n];
    let mut comp = vec![u32::MAX; n];
    let mut comp_side_x: Vec<bool> = Vec::new();
    let mut internal_adj: Vec<Vec<(u32, bool)>> = vec![Vec::new(); n];
    for (eid, &(u, v)) in edges.pairs().iter().enumerate() {
        if !g_edges.get(eid) {
            continue;
        }
        if k.side(u) == k.side(v) {
            let flip = gamma.get(eid);
            internal_adj[u as usize].push((v, flip));
            internal_adj[v as usize].push((u, flip));
        }
    }
    for root in 0..n {
        if comp[root] != u32::MAX {
            continue;
        }
        let cid = comp_side_x.len() as u32;
        comp_side_x.push(k.side(root as u32) == crate::graph::Side::X);
        comp[root] = cid;
        color[root] = false;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for idx in 0..internal_adj[u].len() {
                let (w, flip) = internal_adj[u][idx];
                let want = color[u] ^ flip;
                let w = w as usize;
                if comp[w] == u32::MAX {
                    comp[w] = cid;
                    color[w] = want;
                    stack.push(w);
                } else if color[w] != want {
                    return Ok(DecomposeOutcome::NotFound);
                }
            }
        }
    }

    // Component-flip optimization over the external part of Z.
    let n_comp = comp_side_x.len();
    let x_comps: Vec<usize> = (0..n_comp).filter(|&c| comp_side_x[c]).collect();
    let y_comps: Vec<usize> = (0..n_comp).filter(|&c| !comp_side_x[c]).collect();
    let mut x_index = vec![usize::MAX; n_comp];
    let mut y_index = vec![usize::MAX; n_comp];
    for (i, &c) in x_comps.iter().enumerate() {
        x_index[c] = i;
    }
    for (j, &c) in y_comps.iter().enumerate() {
        y_index[c] = j;
    }
    // cnt[i][j][b]: external G-edges between X comp i and Y comp j whose
    // base bit (gamma xor base colors) equals b.
    let mut cnt = vec![vec![[0usize; 2]; y_comps.len()]; x_comps.len()];
    for (eid, &(u, v)) in edges.pairs().iter().enumerate() {
        if !g_edges.get(eid) || k.side(u) == k.side(v) {
            continue;
        }
        let (xu, yv) = if k.side(u) == crate::graph::Side::X {
            (u, v)
        } else {
            (v, u)
        };
        let i = x_index[comp[xu as usize] as usize];
        let j = y_index[comp[yv as usize] as usize];
        let base = gamma.get(eid) ^ color[xu as usize] ^ color[yv as usize];
        cnt[i][j][base as usize] += 1;
    }

    let (fx, fy) = optimize_flips(&cnt);

    let mut flip_of_comp = vec![false; n_comp];
    for (i, &c) in x_comps.iter().enumerate() {
        flip_of_comp[c] = fx[i];
    }
    for (j, &c) in y_comps.iter().enumerate() {
        flip_of_comp[c] = fy[j];
    }
    let final_color = |v: usize| -> bool { color[v] ^ flip_of_comp[comp[v] as usize] };
    let mut z = EdgeVector::zeros(m);
    let mut z_deg = vec![0usize; n];
    for (eid, &(u, v)) in edges.pairs().iter().enumerate() {
        if !g_edges.get(eid) {
            continue;
        }
        let crossing = final_color(u as usize) != final_color(v as usize);
        if gamma.get(eid) ^ crossing {
            debug_assert!(k.side(u) != k.side(v), "internal edge leaked into Z");
            z.bits.set(eid);
            z_deg[u as usize] += 1;
            z_deg[v as usize] += 1;
        }
    }
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for v in 0..n {
        if final_color(v) {
            b.push(v as u32);
        } else {
            a.push(v as u32);
        }
    }
    Ok(DecomposeOutcome::Found {
        a,
        b,
        z,
        z_max_degree: z_deg.into_iter().max().unwrap_or(0),
    })
}

/// Minimize `sum cnt[i][j][1 ^ fx_i ^ fy_j]` over flip vectors. Y flips are
/// separable given X flips, so exactness only needs `2^(X components)`
/// sweeps.
fn optimize_flips(cnt: &[Vec<[usize; 2]>]) -> (Vec<bool>, Vec<bool>) {
    let cx = cnt.len();
    let cy = cnt.first().map_or(0, |r| r.len());
    let best_y_given = |fx: &[bool]| -> (usize, Vec<bool>) {
        let mut total = 0;
        let mut fy = vec![false; cy];
        for j in 0..cy {
            let mut cost = [0usize; 2];
            for (i, row) in cnt.iter().enumerate() {
                for (yj, c) in cost.iter_mut().enumerate() {
                    let bit = 1 ^ (fx[i] as usize) ^ yj;
                    *c += row[j][bit];
                }
            }
            if cost[1] < cost[0] {
                fy[j] = true;
                total += cost[1];
            } else {
                total += cost[0];
            }
        }
        (total, fy)
    };

    if cx <= DECOMPOSE_EXACT_COMPONENT_CAP {
        let mut best = (usize::MAX, vec![false; cx], vec![false; cy]);
        for mask in 0u64..(1u64 << cx) {
            let fx: Vec<bool> = (0..cx).map(|i| mask >> i & 1 == 1).collect();
            let (total, fy) = best_y_given(&fx);
            if total < best.0 {
                best = (total, fx, fy);
            }
        }
        (best.1, best.2)
    } else {
        // Greedy single-flip improvement from the all-false start.
        let mut fx = vec![false; cx];
        let (mut total, mut fy) = best_y_given(&fx);
        loop {
            let mut improved = false;
            for i in 0..cx {
                fx[i] = !fx[i];
                let (t, y) = best_y_given(&fx);
                if t < total {
                    total = t;
                    fy = y;
                    improved = true;
                } else {
                    fx[i] = !fx[i];
                }
            }
            if !improved {
                return (fx, fy);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{double, petersen, Graph};

    /// Naive rank oracle over Vec<Vec<u8>>; independent of BitVec packing.
    fn naive_rank(mut rows: Vec<Vec<u8>>) -> usize {
        let mut rank = 0;
        let width = rows.first().map_or(0, |r| r.len());
        for col in 0..width {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            for r in 0..rows.len() {
                if r != rank && rows[r][col] == 1 {
                    for c in 0..width {
                        rows[r][c] ^= rows[rank][c];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn cycle_space_dimensions() {
        assert_eq!(cycle_space_basis(&Graph::path(6)).rank(), 0);
        assert_eq!(cycle_space_basis(&Graph::cycle(5)).rank(), 1);
        assert_eq!(cycle_space_basis(&petersen()).rank(), 6);
    }

    #[test]
    fn cycle_and_cut_spaces_are_orthogonal_complements() {
        for seed in 0..10 {
            let g = Graph::gnp(10, 0.4, seed);
            let cyc = cycle_space_basis(&g);
            let cut = cut_space_basis(&g);
            let comps = g.component_count();
            assert_eq!(cyc.rank(), g.m() + comps - g.n());
            assert_eq!(cut.rank(), g.n() - comps);
            assert_eq!(cyc.rank() + cut.rank(), g.m());
            for c in cyc.rows() {
                assert!(is_orthogonal(&c, &cut));
            }
        }
    }

    #[test]
    fn induced_cycles_of_k4() {
        let g = Graph::complete(4);
        let report = induced_cycles_generate(&g).unwrap();
        // Every 4-cycle of K4 carries a chord, so the chordless cycles are
        // exactly the 4 triangles, and they span the 3-dim cycle space.
        assert_eq!(report.cycles.len(), 4);
        assert!(report.cycles.iter().all(|c| c.len() == 3));
        assert!(report.generates);
        assert_eq!(report.cycle_space_dim, 3);
        assert_eq!(report.spanning_subset.len(), 3);
    }

    #[test]
    fn triangles_span_in_chordal_graphs() {
        assert!(short_cycles_generate(&Graph::complete(4), 3).unwrap());
        assert!(short_cycles_generate(&Graph::complete(5), 3).unwrap());
    }

    #[test]
    fn c6_and_c7() {
        let report = induced_cycles_generate(&Graph::cycle(6)).unwrap();
        assert_eq!(report.cycles.len(), 1);
        assert!(report.generates);
        assert!(!short_cycles_generate(&Graph::cycle(7), 3).unwrap());
        assert!(short_cycles_generate(&Graph::cycle(7), 7).unwrap());
    }

    #[test]
    fn short_cycles_within_twice_diameter_plus_one() {
        // Petersen: diameter 2, so cycles of length <= 5 must span.
        assert!(short_cycles_generate(&petersen(), 5).unwrap());
        for seed in 0..10 {
            let g = Graph::gnp(9, 0.5, seed);
            if let Some(d) = g.diameter() {
                assert!(
                    short_cycles_generate(&g, 2 * d + 1).unwrap(),
                    "failed at seed {seed}"
                );
            }
        }
    }

    #[test]
    fn induced_cycles_generate_on_random_small_graphs() {
        for seed in 0..60 {
            let n = 4 + (seed as usize % 9); // up to 12
            let g = Graph::gnp(n, 0.45, seed);
            assert!(
                induced_cycles_generate(&g).unwrap().generates,
                "induced cycles failed to generate at seed {seed}"
            );
        }
    }

    fn full_mask(m: usize) -> BitVec {
        let mut mask = BitVec::zeros(m);
        for i in 0..m {
            mask.set(i);
        }
        mask
    }

    #[test]
    fn external_triangle_space_of_double_k2() {
        let k = double(&Graph::complete(2)).unwrap();
        let m = k.m();
        let all = full_mask(m);
        let basis = external_triangle_space(&k, &all);

        // Independent rank oracle on the 4 triangle indicators.
        let ts = crate::graph::enumerate_triangles(k.graph());
        assert_eq!(ts.len(), 4);
        let rows: Vec<Vec<u8>> = (0..ts.len())
            .map(|i| {
                let ids = ts.edge_ids_of_triangle(i);
                let mut row = vec![0u8; m];
                for e in ids {
                    row[e] = 1;
                }
                row
            })
            .collect();
        assert_eq!(basis.rank(), naive_rank(rows));
        assert_eq!(basis.rank(), 3);

        // Removing one vertex's external edges can only shrink the basis.
        let edges = EdgeList::from_graph(k.graph());
        let mut mask = all.clone();
        for (eid, &(u, v)) in edges.pairs().iter().enumerate() {
            if (u == 0 || v == 0) && k.side(u) != k.side(v) {
                mask.clear(eid);
            }
        }
        let smaller = external_triangle_space(&k, &mask);
        assert!(smaller.rank() <= basis.rank());
        for row in smaller.rows() {
            assert!(basis.contains(&row));
        }
    }

    #[test]
    fn bipartite_like_double_has_no_external_triangles() {
        let k = double(&Graph::empty(3)).unwrap();
        let all = full_mask(k.m());
        assert_eq!(external_triangle_space(&k, &all).rank(), 0);
    }

    #[test]
    fn orthogonality_basics() {
        let k = double(&Graph::complete(2)).unwrap();
        let m = k.m();
        let all = full_mask(m);
        let basis = external_triangle_space(&k, &all);
        assert!(is_orthogonal(&EdgeVector::zeros(m), &basis));

        let ts = crate::graph::enumerate_triangles(k.graph());
        let tri = EdgeVector::from_edge_ids(m, &ts.edge_ids_of_triangle(0));
        // A triangle has odd intersection with itself.
        assert!(!is_orthogonal(&tri, &basis));
    }

    #[test]
    fn hex_round_trip() {
        for seed in 0..20u64 {
            let m = 1 + (seed as usize * 7) % 40;
            let mut v = EdgeVector::zeros(m);
            let mut rng = crate::rng::SplitMix64::new(seed);
            for i in 0..m {
                if rng.gen_bool(0.5) {
                    v.set(i);
                }
            }
            let hex = v.to_hex();
            assert_eq!(EdgeVector::from_hex(m, &hex).unwrap(), v);
        }
        assert!(EdgeVector::from_hex(5, "zz").is_err());
        assert!(EdgeVector::from_hex(9, "f").is_err());
    }

    /// Exhaustive bipartition oracle for tiny K: minimum external |Z| over
    /// all 2^n bipartitions, or None when every bipartition leaks an
    /// internal edge into Z.
    fn brute_force_decompose(
        k: &crate::graph::SidedGraph,
        gamma: &EdgeVector,
        g_edges: &BitVec,
    ) -> Option<usize> {
        let edges = EdgeList::from_graph(k.graph());
        let n = k.n();
        let mut best: Option<usize> = None;
        for mask in 0u64..(1 << n) {
            let mut ok = true;
            let mut z_count = 0;
            for (eid, &(u, v)) in edges.pairs().iter().enumerate() {
                if !g_edges.get(eid) {
                    continue;
                }
                let crossing = (mask >> u & 1) != (mask >> v & 1);
                if gamma.get(eid) ^ crossing {
                    if k.side(u) == k.side(v) {
                        ok = false;
                        break;
                    }
                    z_count += 1;
                }
            }
            if ok {
                best = Some(best.map_or(z_count, |b: usize| b.min(z_count)));
            }
        }
        best
    }

    #[test]
    fn decompose_recovers_planted_cut() {
        let k = double(&petersen()).unwrap();
        let edges = EdgeList::from_graph(k.graph());
        let m = edges.len();
        let mask = full_mask(m);

        let mut rng = crate::rng::SplitMix64::new(17);
        let planted: Vec<bool> = (0..k.n()).map(|_| rng.gen_bool(0.5)).collect();
        let mut gamma = EdgeVector::zeros(m);
        for (eid, &(u, v)) in edges.pairs().iter().enumerate() {
            if planted[u as usize] != planted[v as usize] {
                gamma.set(eid);
            }
        }
        match decompose_gamma(&k, &gamma, &mask).unwrap() {
            DecomposeOutcome::Found {
                z, z_max_degree, ..
            } => {
                assert!(z.is_zero());
                assert_eq!(z_max_degree, 0);
            }
            DecomposeOutcome::NotFound => panic!("planted cut not recovered"),
        }

        // Flip one external edge: Z must be exactly that edge.
        let ext_eid = edges
            .pairs()
            .iter()
            .position(|&(u, v)| k.side(u) != k.side(v))
            .unwrap();
        let mut flipped = gamma.clone();
        if flipped.get(ext_eid) {
            flipped.unset(ext_eid);
        } else {
            flipped.set(ext_eid);
        }
        match decompose_gamma(&k, &flipped, &mask).unwrap() {
            DecomposeOutcome::Found {
                z, z_max_degree, ..
            } => {
                assert_eq!(z.support(), vec![ext_eid]);
                assert_eq!(z_max_degree, 1);
            }
            DecomposeOutcome::NotFound => panic!("perturbed cut not recovered"),
        }
    }

    #[test]
    fn decompose_failure_detected_exactly() {
        // H = K3: a single internal edge of a side triangle is not a side
        // cut. Cross-checked against the exhaustive bipartition oracle.
        let k = double(&Graph::complete(3)).unwrap();
        let edges = EdgeList::from_graph(k.graph());
        let m = edges.len();
        let mask = full_mask(m);
        let internal_eid = edges
            .pairs()
            .iter()
            .position(|&(u, v)| k.side(u) == k.side(v))
            .unwrap();
        let gamma = EdgeVector::from_edge_ids(m, &[internal_eid]);
        assert!(matches!(
            decompose_gamma(&k, &gamma, &mask).unwrap(),
            DecomposeOutcome::NotFound
        ));
        assert_eq!(brute_force_decompose(&k, &gamma, &mask), None);
    }

    #[test]
    fn decompose_matches_exhaustive_min_z() {
        let mut rng = crate::rng::SplitMix64::new(4);
        let mut found = 0;
        for seed in 0..40u64 {
            let h = Graph::gnp(3, 0.6, seed);
            let k = double(&h).unwrap();
            let m = k.m();
            let mask = full_mask(m);
            let mut gamma = EdgeVector::zeros(m);
            for i in 0..m {
                if rng.gen_bool(0.4) {
                    gamma.set(i);
                }
            }
            let oracle = brute_force_decompose(&k, &gamma, &mask);
            match decompose_gamma(&k, &gamma, &mask).unwrap() {
                DecomposeOutcome::Found { z, .. } => {
                    assert_eq!(Some(z.weight()), oracle, "seed {seed}");
                    found += 1;
                }
                DecomposeOutcome::NotFound => assert_eq!(oracle, None, "seed {seed}"),
            }
        }
        assert!(found > 0, "no feasible instances sampled");
    }

    #[test]
    fn gamma_outside_g_edges_is_rejected() {
        let k = double(&Graph::complete(2)).unwrap();
        let m = k.m();
        let gamma = EdgeVector::from_edge_ids(m, &[0]);
        let empty = BitVec::zeros(m);
        assert!(decompose_gamma(&k, &gamma, &empty).is_err());
    }
}
