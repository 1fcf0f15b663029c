//! Graph carrier and the constructions everything else consumes.
//!
//! Graphs are simple and undirected with dense adjacency-bitset rows; all the
//! instances we care about are dense enough that bitset rows win on triangle
//! enumeration throughput. Vertex ids are `0..n-1` and edge ids are
//! lexicographic over `(min endpoint, max endpoint)`, which keeps ids stable
//! for triangle systems and GF(2) edge vectors.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::rng::{edge_uniform, SplitMix64};

/// Simple undirected graph; immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<BitVec>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: (0..n).map(|_| BitVec::zeros(n)).collect(),
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Used by constructors in this module; keeps the symmetric/no-loop
    /// invariant. Double insertion is idempotent.
    fn insert_edge(&mut self, u: u32, v: u32) -> Result<()> {
        let (u, v) = (u as usize, v as usize);
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if !self.rows[u].get(v) {
            self.rows[u].set(v);
            self.rows[v].set(u);
            self.m += 1;
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                g.insert_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for u in 0..n as u32 {
            g.insert_edge(u, (u + 1) % n as u32).unwrap();
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n as u32 {
            g.insert_edge(u - 1, u).unwrap();
        }
        g
    }

    /// Erdős–Rényi `G(n, p)`; each pair kept via the `(seed, pair key)`
    /// stream, so the result is independent of iteration order.
    pub fn gnp(n: usize, p: f64, seed: u64) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                let key = u as u64 * n as u64 + v as u64;
                if edge_uniform(seed, key) < p {
                    g.insert_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.rows[u as usize].get(v as usize)
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.rows[v as usize].count_ones()
    }

    #[inline]
    pub fn row(&self, v: u32) -> &BitVec {
        &self.rows[v as usize]
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.rows[v as usize].iter_ones().map(|w| w as u32)
    }

    /// Lexicographically sorted edge list.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for w in self.rows[u].iter_ones() {
                if w > u {
                    out.push((u as u32, w as u32));
                }
            }
        }
        out
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        for v in 1..self.n as u32 {
            if self.degree(v) != d {
                return None;
            }
        }
        Some(d)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        self.component_ids().1
    }

    /// Per-vertex component id plus the component count.
    pub fn component_ids(&self) -> (Vec<u32>, usize) {
        let mut comp = vec![u32::MAX; self.n];
        let mut count = 0;
        let mut queue = Vec::new();
        for s in 0..self.n {
            if comp[s] != u32::MAX {
                continue;
            }
            comp[s] = count;
            queue.push(s);
            while let Some(u) = queue.pop() {
                for w in self.rows[u].iter_ones() {
                    if comp[w] == u32::MAX {
                        comp[w] = count;
                        queue.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count as usize)
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, s: u32) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s as usize] = 0;
        let mut frontier = vec![s as usize];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for w in self.rows[u].iter_ones() {
                    if dist[w] == usize::MAX {
                        dist[w] = d;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// Maximum finite distance; `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for s in 0..self.n as u32 {
            for d in self.bfs_distances(s) {
                if d == usize::MAX {
                    return None;
                }
                diam = diam.max(d);
            }
        }
        Some(diam)
    }

    /// Edges inside the vertex set given as a mask.
    pub fn edges_within(&self, mask: &BitVec) -> usize {
        let mut total = 0;
        for u in mask.iter_ones() {
            total += self.rows[u].and_count(mask);
        }
        total / 2
    }

    /// Edges with one endpoint in `a` and one in `b` (disjoint masks).
    pub fn edges_between(&self, a: &BitVec, b: &BitVec) -> usize {
        debug_assert!(!a.intersects(b));
        let mut total = 0;
        for u in a.iter_ones() {
            total += self.rows[u].and_count(b);
        }
        total
    }
}

/// Lexicographic product `g1 · g2`: vertex `(u1, u2)` gets id
/// `u1 * |V(g2)| + u2`; `(u1,u2) ~ (v1,v2)` iff `u1 v1` is an edge of `g1`,
/// or `u1 = v1` and `u2 v2` is an edge of `g2`.
pub fn lex_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(Error::InvalidArgument(
            "lexicographic product of an empty graph".into(),
        ));
    }
    let n = g1
        .n()
        .checked_mul(g2.n())
        .filter(|&n| n <= u32::MAX as usize)
        .ok_or(Error::SizeCap {
            what: "lex product vertex count",
            got: usize::MAX,
            cap: u32::MAX as usize,
        })?;
    let n2 = g2.n();
    let mut rows: Vec<BitVec> = (0..n).map(|_| BitVec::zeros(n)).collect();
    let mut m = 0usize;
    for u1 in 0..g1.n() {
        for u2 in 0..n2 {
            let id = u1 * n2 + u2;
            // u1 = v1 case: edges of g2 inside the fiber.
            for v2 in g2.rows[u2].iter_ones() {
                rows[id].set(u1 * n2 + v2);
            }
            // u1 v1 in g1: complete join between fibers.
            for v1 in g1.rows[u1].iter_ones() {
                for v2 in 0..n2 {
                    rows[id].set(v1 * n2 + v2);
                }
            }
        }
    }
    for row in &rows {
        m += row.count_ones();
    }
    debug_assert_eq!(m % 2, 0);
    Ok(Graph { n, rows, m: m / 2 })
}

/// Which side of a doubled graph a vertex lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// Edge classification in a doubled graph or its blowup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum EdgeKind {
    /// Both endpoints on the same side (and in different blocks).
    Internal,
    /// Endpoints on different sides.
    External,
    /// Both endpoints in the same blowup block.
    Vertex,
}

/// Provenance record for generated sided graphs.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Origin {
    pub h_name: String,
    pub t: usize,
    pub d: Option<usize>,
    pub a: usize,
    pub p: f64,
    pub q: f64,
    pub seed: Option<u64>,
}

/// A doubled graph `K` (two copies of `H` joined completely), possibly blown
/// up into cliques. Ids `< t_side` form side `X`; in a blowup, vertex
/// `v * a + j` belongs to block `v`, so side and block lookups are
/// arithmetic.
#[derive(Clone, Debug)]
pub struct SidedGraph {
    graph: Graph,
    t_side: usize,
    /// Block size when this is a blowup `K · K_a`.
    block_size: Option<usize>,
    pub origin: Option<Origin>,
}

impl SidedGraph {
    pub fn new(graph: Graph, t_side: usize) -> Self {
        assert!(t_side <= graph.n());
        SidedGraph {
            graph,
            t_side,
            block_size: None,
            origin: None,
        }
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Number of vertices on side `X`.
    #[inline]
    pub fn t_side(&self) -> usize {
        self.t_side
    }

    #[inline]
    pub fn side(&self, v: u32) -> Side {
        if (v as usize) < self.t_side {
            Side::X
        } else {
            Side::Y
        }
    }

    #[inline]
    pub fn block_size(&self) -> Option<usize> {
        self.block_size
    }

    #[inline]
    pub fn is_blowup(&self) -> bool {
        self.block_size.is_some()
    }

    /// Block id of a vertex (identity when there is no block structure).
    #[inline]
    pub fn block_of(&self, v: u32) -> u32 {
        match self.block_size {
            Some(a) => v / a as u32,
            None => v,
        }
    }

    #[inline]
    pub fn edge_kind(&self, u: u32, v: u32) -> EdgeKind {
        debug_assert!(self.graph.has_edge(u, v));
        if self.block_of(u) == self.block_of(v) {
            EdgeKind::Vertex
        } else if self.side(u) == self.side(v) {
            EdgeKind::Internal
        } else {
            EdgeKind::External
        }
    }

    /// Counts of (internal, external, vertex) edges.
    pub fn edge_census(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for (u, v) in self.graph.edges() {
            match self.edge_kind(u, v) {
                EdgeKind::Internal => counts.0 += 1,
                EdgeKind::External => counts.1 += 1,
                EdgeKind::Vertex => counts.2 += 1,
            }
        }
        counts
    }
}

/// Double of `H`: two copies of `H` (sides `X` = `0..t`, `Y` = `t..2t`)
/// joined by a complete bipartite graph.
pub fn double(h: &Graph) -> Result<SidedGraph> {
    let k2 = Graph::complete(2);
    // K2 · H puts the first copy of H on ids 0..t.
    let g = lex_product(&k2, h)?;
    Ok(SidedGraph::new(g, h.n()))
}

/// Blowup `K · K_a`: every vertex becomes a clique ("block") of size `a`.
/// Edges are typed internal/external/vertex according to whether they come
/// from an internal edge, an external edge, or a vertex of `K`.
pub fn blowup(k: &SidedGraph, a: usize) -> Result<SidedGraph> {
    if a == 0 {
        return Err(Error::InvalidArgument("blowup size a must be >= 1".into()));
    }
    let g = lex_product(&k.graph, &Graph::complete(a))?;
    Ok(SidedGraph {
        graph: g,
        t_side: k.t_side * a,
        block_size: Some(a),
        origin: None,
    })
}

/// Random subgraph of a blowup: keeps each internal edge with probability
/// `p`, each external edge with probability `q`, and every vertex edge.
/// Deterministic given `seed`; each edge draws from its own
/// `(seed, edge key)` stream.
pub fn random_subgraph(k_blow: &SidedGraph, p: f64, q: f64, seed: u64) -> Result<SidedGraph> {
    if k_blow.block_size.is_none() {
        return Err(Error::NotBlowup);
    }
    if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidArgument(format!(
            "keep probabilities out of range: p={p}, q={q}"
        )));
    }
    let n = k_blow.n();
    let mut g = Graph::empty(n);
    for u in 0..n as u32 {
        for w in k_blow.graph.rows[u as usize].iter_ones() {
            let w = w as u32;
            if w <= u {
                continue;
            }
            let keep = match k_blow.edge_kind(u, w) {
                EdgeKind::Vertex => true,
                EdgeKind::Internal => edge_uniform(seed, u as u64 * n as u64 + w as u64) < p,
                EdgeKind::External => edge_uniform(seed, u as u64 * n as u64 + w as u64) < q,
            };
            if keep {
                g.insert_edge(u, w)?;
            }
        }
    }
    Ok(SidedGraph {
        graph: g,
        t_side: k_blow.t_side,
        block_size: k_blow.block_size,
        origin: k_blow.origin.clone(),
    })
}

/// Sorted edge list with id lookup; edge ids are positions in lexicographic
/// order.
#[derive(Clone, Debug)]
pub struct EdgeList {
    pairs: Vec<(u32, u32)>,
    row_start: Vec<usize>,
}

impl EdgeList {
    pub fn from_graph(g: &Graph) -> Self {
        let pairs = g.edges();
        let mut row_start = vec![0usize; g.n() + 1];
        for &(u, _) in &pairs {
            row_start[u as usize + 1] += 1;
        }
        for i in 0..g.n() {
            row_start[i + 1] += row_start[i];
        }
        EdgeList { pairs, row_start }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    #[inline]
    pub fn pair(&self, id: usize) -> (u32, u32) {
        self.pairs[id]
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Edge id of `{u, v}`, if present.
    pub fn id(&self, u: u32, v: u32) -> Option<usize> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let lo = self.row_start[a as usize];
        let hi = self.row_start[a as usize + 1];
        self.pairs[lo..hi]
            .binary_search_by_key(&b, |&(_, w)| w)
            .ok()
            .map(|off| lo + off)
    }
}

/// Enumerated triangle list with an edge-incidence index.
#[derive(Clone, Debug)]
pub struct TriangleSystem {
    triangles: Vec<[u32; 3]>,
    edges: EdgeList,
    edge_to_triangles: Vec<Vec<u32>>,
}

impl TriangleSystem {
    fn build(g: &Graph, triangles: Vec<[u32; 3]>) -> Self {
        let edges = EdgeList::from_graph(g);
        let mut edge_to_triangles = vec![Vec::new(); edges.len()];
        for (ti, tri) in triangles.iter().enumerate() {
            let [a, b, c] = *tri;
            for (u, v) in [(a, b), (a, c), (b, c)] {
                let eid = edges.id(u, v).expect("triangle edge must exist");
                edge_to_triangles[eid].push(ti as u32);
            }
        }
        TriangleSystem {
            triangles,
            edges,
            edge_to_triangles,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    pub fn triangle(&self, i: usize) -> [u32; 3] {
        self.triangles[i]
    }

    pub fn edges(&self) -> &EdgeList {
        &self.edges
    }

    pub fn triangles_of_edge(&self, eid: usize) -> &[u32] {
        &self.edge_to_triangles[eid]
    }

    /// Edge ids of triangle `i` (ascending).
    pub fn edge_ids_of_triangle(&self, i: usize) -> [usize; 3] {
        let [a, b, c] = self.triangles[i];
        [
            self.edges.id(a, b).unwrap(),
            self.edges.id(a, c).unwrap(),
            self.edges.id(b, c).unwrap(),
        ]
    }
}

/// Complete, duplicate-free triangle list via row-bitset intersection;
/// triples are ascending and listed in lexicographic order.
pub fn enumerate_triangles(g: &Graph) -> TriangleSystem {
    let mut triangles = Vec::new();
    for u in 0..g.n() as u32 {
        for v in g.rows[u as usize].iter_ones() {
            let v = v as u32;
            if v <= u {
                continue;
            }
            // w > v keeps each triple once, in sorted order.
            let ru = &g.rows[u as usize];
            let rv = &g.rows[v as usize];
            for w in common_above(ru, rv, v as usize) {
                triangles.push([u, v, w as u32]);
            }
        }
    }
    TriangleSystem::build(g, triangles)
}

fn common_above<'a>(
    a: &'a BitVec,
    b: &'a BitVec,
    above: usize,
) -> impl Iterator<Item = usize> + 'a {
    a.iter_ones()
        .filter(move |&w| w > above && b.get(w))
}

/// Triangles of a sided graph meeting both sides; equivalently (for a double)
/// the triangles containing an external edge.
pub fn crossing_triangles(k: &SidedGraph) -> TriangleSystem {
    let full = enumerate_triangles(k.graph());
    let triangles = full
        .triangles
        .iter()
        .copied()
        .filter(|&[a, b, c]| {
            let sa = k.side(a);
            k.side(b) != sa || k.side(c) != sa
        })
        .collect();
    TriangleSystem::build(k.graph(), triangles)
}

// ---------------------------------------------------------------------------
// Plain-text exchange format.
//
//   n m
//   sides: t        (only for sided graphs; ids < t are X)
//   u v [k]         (m lines, 0-based, u < v; k in {i,e,x} is optional)
// ---------------------------------------------------------------------------

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn sided_to_text(k: &SidedGraph) -> String {
    let mut out = format!("{} {}\n", k.n(), k.m());
    out.push_str(&format!("sides: {}\n", k.t_side()));
    for (u, v) in k.graph().edges() {
        let kind = match k.edge_kind(u, v) {
            EdgeKind::Internal => 'i',
            EdgeKind::External => 'e',
            EdgeKind::Vertex => 'x',
        };
        out.push_str(&format!("{u} {v} {kind}\n"));
    }
    out
}

/// Parse the text format. Returns the graph plus the `sides:` value when the
/// header is present. Edge-kind tokens are accepted and ignored (they are
/// derivable from sides and blocks).
pub fn graph_from_text(text: &str) -> Result<(Graph, Option<usize>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph text".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = parse_tok(it.next(), "n")?;
    let m: usize = parse_tok(it.next(), "m")?;
    let mut rest = lines.peekable();
    let mut sides = None;
    if let Some(line) = rest.peek() {
        if let Some(v) = line.trim().strip_prefix("sides:") {
            sides = Some(
                v.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad sides header: {e}")))?,
            );
            rest.next();
        }
    }
    let mut edges = Vec::with_capacity(m);
    for line in rest {
        let mut it = line.split_whitespace();
        let u: u32 = parse_tok(it.next(), "u")?;
        let v: u32 = parse_tok(it.next(), "v")?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header promised {m} edges, found {}",
            edges.len()
        )));
    }
    Ok((Graph::from_edges(n, &edges)?, sides))
}

fn parse_tok<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    tok.ok_or_else(|| Error::Parse(format!("missing token {what}")))?
        .parse::<T>()
        .map_err(|e| Error::Parse(format!("bad token {what}: {e}")))
}

/// Petersen graph via the Kneser construction: vertices are the 2-subsets of
/// a 5-set, adjacent when disjoint.
pub fn petersen() -> Graph {
    let subsets: Vec<(u32, u32)> = (0..5u32)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut g = Graph::empty(10);
    for i in 0..10 {
        for j in (i + 1)..10 {
            let (a, b) = subsets[i];
            let (c, d) = subsets[j];
            if a != c && a != d && b != c && b != d {
                g.insert_edge(i as u32, j as u32).unwrap();
            }
        }
    }
    g
}
