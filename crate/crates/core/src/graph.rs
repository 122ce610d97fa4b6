//! Immutable simple undirected graphs and the structural queries used by the
//! game engine, the solver and the evasion strategy.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex ids are dense integers `0..n`.
pub type Vertex = usize;

/// Default ceiling on the vertex count accepted by [`GraphLimits`].
pub const DEFAULT_MAX_VERTICES: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("start vertex {0} is blocked")]
    BlockedStart(Vertex),
    #[error("cannot pad a graph on {have} vertices down to {target}")]
    PadTarget { have: usize, target: usize },
    #[error("Moore bound needs degree >= 2 and girth >= 3, got degree {degree}, girth {girth}")]
    MooreQuery { degree: u64, girth: u64 },
}

/// Size limits applied while building graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphLimits {
    pub max_vertices: usize,
}

impl Default for GraphLimits {
    fn default() -> Self {
        GraphLimits {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

/// A simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.edge_count)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Self::from_edges_limited(n, edges, GraphLimits::default())
    }

    pub fn from_edges_limited(
        n: usize,
        edges: &[(Vertex, Vertex)],
        limits: GraphLimits,
    ) -> Result<Self, GraphError> {
        if n > limits.max_vertices {
            return Err(GraphError::TooLarge {
                n,
                limit: limits.max_vertices,
            });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            check_edge(n, u, v)?;
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count: edges.len(),
        })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Returns the common degree if the graph is regular.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|list| list.len() == first)
            .then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.distances_from(0, &BTreeSet::new())
            .map(|d| d.len() == self.n())
            .unwrap_or(false)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for root in self.vertices() {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// Runs a BFS from every vertex; a non-tree edge `(u, w)` met during the
    /// search from `root` closes a closed walk of length
    /// `dist[u] + dist[w] + 1` through `root`, and the minimum over all roots
    /// is exactly the girth.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in self.vertices() {
            let mut touched = vec![root];
            dist[root] = 0;
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // cycles found from here on are at least 2*dist[u]+1 long
                    if 2 * dist[u] + 1 >= b {
                        break 'bfs;
                    }
                }
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
            queue.clear();
            for v in touched {
                dist[v] = usize::MAX;
                parent[v] = usize::MAX;
            }
        }
        best
    }

    /// BFS distances from `v` in the graph with `blocked` deleted.
    /// Unreachable vertices are absent from the map.
    pub fn distances_from(
        &self,
        v: Vertex,
        blocked: &BTreeSet<Vertex>,
    ) -> Result<BTreeMap<Vertex, usize>, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        if blocked.contains(&v) {
            return Err(GraphError::BlockedStart(v));
        }
        let mut dist = BTreeMap::from([(v, 0)]);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            for &w in self.neighbors(u) {
                if !blocked.contains(&w) && !dist.contains_key(&w) {
                    dist.insert(w, du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Unblocked BFS distances as a dense vector (`usize::MAX` if unreachable).
    pub fn bfs_distances(&self, v: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All simple paths with exactly `length` edges starting at `start` whose
    /// second vertex avoids `forbidden_second`, in lexicographic order.
    pub fn paths_of_length(
        &self,
        start: Vertex,
        length: usize,
        forbidden_second: &BTreeSet<Vertex>,
    ) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![start];
        let mut on_path = vec![false; self.n()];
        on_path[start] = true;
        self.extend_paths(length, forbidden_second, &mut stack, &mut on_path, &mut out);
        out
    }

    fn extend_paths(
        &self,
        length: usize,
        forbidden_second: &BTreeSet<Vertex>,
        stack: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Path>,
    ) {
        if stack.len() == length + 1 {
            out.push(Path(stack.clone()));
            return;
        }
        let last = *stack.last().unwrap();
        for &w in self.neighbors(last) {
            if on_path[w] || (stack.len() == 1 && forbidden_second.contains(&w)) {
                continue;
            }
            on_path[w] = true;
            stack.push(w);
            self.extend_paths(length, forbidden_second, stack, on_path, out);
            stack.pop();
            on_path[w] = false;
        }
    }

    /// Appends a path on `n_target - n` fresh vertices, one endpoint joined to
    /// vertex 0. Returns an identical graph when nothing needs adding.
    pub fn pad_with_path(&self, n_target: usize) -> Result<Graph, GraphError> {
        let n = self.n();
        if n_target < n {
            return Err(GraphError::PadTarget {
                have: n,
                target: n_target,
            });
        }
        if n_target == n {
            return Ok(self.clone());
        }
        let mut edges: Vec<_> = self.edges().collect();
        if n > 0 {
            edges.push((0, n));
        }
        edges.extend((n + 1..n_target).map(|v| (v - 1, v)));
        Graph::from_edges_limited(
            n_target,
            &edges,
            GraphLimits {
                max_vertices: usize::MAX,
            },
        )
    }

    /// Parses the edge-list format: a header `n m` followed by `m` lines
    /// `u v`. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        Self::parse_edge_list_limited(text, GraphLimits::default())
    }

    pub fn parse_edge_list_limited(text: &str, limits: GraphLimits) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;
        if n > limits.max_vertices {
            return Err(GraphError::TooLarge {
                n,
                limit: limits.max_vertices,
            });
        }
        let mut edges = Vec::with_capacity(m);
        let mut seen = BTreeSet::new();
        for (line, body) in lines {
            if edges.len() == m {
                return Err(GraphError::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let (u, v) = parse_pair(line, body)?;
            let located = |e: GraphError| GraphError::Parse {
                line,
                message: e.to_string(),
            };
            check_edge(n, u, v).map_err(located)?;
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(located(GraphError::DuplicateEdge(u.min(v), u.max(v))));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: text.lines().count().max(1),
                message: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges_limited(n, &edges, limits)
    }

    /// Canonical edge-list text: header, then each edge once with `u < v`,
    /// sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn check_edge(n: usize, u: Vertex, v: Vertex) -> Result<(), GraphError> {
    for x in [u, v] {
        if x >= n {
            return Err(GraphError::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    Ok(())
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize), GraphError> {
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("invalid integer `{tok}`"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(GraphError::Parse {
            line,
            message: format!("unexpected trailing token `{extra}`"),
        });
    }
    Ok((a, b))
}

/// An ordered sequence of distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.0[0]
    }

    pub fn end(&self) -> Vertex {
        *self.0.last().expect("path has at least one vertex")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// True if the path is simple and every step is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct: BTreeSet<_> = self.0.iter().collect();
        distinct.len() == self.0.len() && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Degree and girth for a Moore-bound lookup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MooreBoundQuery {
    degree: u64,
    girth: u64,
}

impl MooreBoundQuery {
    pub fn new(degree: u64, girth: u64) -> Result<Self, GraphError> {
        if degree < 2 || girth < 3 {
            return Err(GraphError::MooreQuery { degree, girth });
        }
        Ok(MooreBoundQuery { degree, girth })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn girth(&self) -> u64 {
        self.girth
    }
}

/// Minimum vertex count of a `degree`-regular graph with girth `girth`.
pub fn moore_bound(q: MooreBoundQuery) -> u128 {
    let d = q.degree as u128;
    let r = q.girth / 2;
    let mut sum: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..r {
        sum = sum.saturating_add(power);
        power = power.saturating_mul(d - 1);
    }
    if q.girth % 2 == 1 {
        1u128.saturating_add(d.saturating_mul(sum))
    } else {
        2u128.saturating_mul(sum)
    }
}
