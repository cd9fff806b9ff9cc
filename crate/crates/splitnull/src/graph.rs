//! Simple undirected graphs with dense vertex ids, plus the graph6 and
//! edge-list interchange formats.
//!
//! Graphs are immutable once built. Vertices are always `0..n-1`; the
//! adjacency relation is symmetric with an empty diagonal.

use crate::linalg::{QMatrix, Rational};
use num_traits::One;
use std::collections::BTreeSet;
use std::fmt;

/// A set of vertex ids, always iterated in sorted order.
pub type VertexSet = BTreeSet<usize>;

/// Convenience constructor for a vertex set literal.
pub fn vset(members: &[usize]) -> VertexSet {
    members.iter().copied().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop(usize),
    VertexOutOfRange { vertex: usize, n: usize },
    NotAPermutation,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::NotAPermutation => write!(f, "order is not a permutation of the vertices"),
        }
    }
}

impl std::error::Error for GraphError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    InvalidChar { byte: u8, position: usize },
    TooLarge,
    Truncated { expected: usize, got: usize },
    TrailingData { expected: usize, got: usize },
    TrailingBits,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 input"),
            Graph6Error::InvalidChar { byte, position } => {
                write!(f, "byte {byte} at position {position} outside graph6 range 63..=126")
            }
            Graph6Error::TooLarge => write!(f, "graph6 order too large for this implementation"),
            Graph6Error::Truncated { expected, got } => {
                write!(f, "graph6 body too short: expected {expected} bytes, got {got}")
            }
            Graph6Error::TrailingData { expected, got } => {
                write!(f, "graph6 body too long: expected {expected} bytes, got {got}")
            }
            Graph6Error::TrailingBits => write!(f, "nonzero padding bits in graph6 body"),
        }
    }
}

impl std::error::Error for Graph6Error {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    MissingVertexCount,
    BadToken(String),
    MissingEndpoint(String),
    SelfLoop(usize),
    VertexOutOfRange { vertex: usize, n: usize },
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::MissingVertexCount => write!(f, "missing vertex-count header line"),
            EdgeListError::BadToken(t) => write!(f, "not an integer: {t:?}"),
            EdgeListError::MissingEndpoint(line) => {
                write!(f, "edge line needs two endpoints: {line:?}")
            }
            EdgeListError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            EdgeListError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
        }
    }
}

impl std::error::Error for EdgeListError {}

/// Simple undirected graph on vertices `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.adj[u * n + v] = true;
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.neighbors(v).collect()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices().any(|v| self.degree(v) == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Whether `keep` induces a complete subgraph.
    pub fn is_clique(&self, keep: &VertexSet) -> bool {
        keep.iter()
            .all(|&u| keep.iter().all(|&v| u == v || self.has_edge(u, v)))
    }

    /// Whether `keep` induces an edgeless subgraph.
    pub fn is_independent_set(&self, keep: &VertexSet) -> bool {
        keep.iter()
            .all(|&u| keep.iter().all(|&v| u == v || !self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.has_edge(u, v) {
                    g.adj[u * self.n + v] = true;
                }
            }
        }
        g
    }

    /// Induced subgraph on `keep`, relabeled to `0..|keep|-1` following the
    /// sorted order of `keep`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        for &v in keep {
            assert!(v < self.n, "induced subgraph vertex out of range");
        }
        let order: Vec<usize> = keep.iter().copied().collect();
        let mut g = Self::empty(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if i < j && self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` deleted, remaining vertices relabeled in order.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: VertexSet = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Twins: `N(u) \ {v} = N(v) \ {u}`.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        (0..self.n)
            .filter(|&w| w != u && w != v)
            .all(|w| self.has_edge(u, w) == self.has_edge(v, w))
    }

    /// Equivalence classes of the twin relation, sorted by least member.
    ///
    /// Each class induces a clique or an independent set.
    pub fn twin_classes(&self) -> Vec<VertexSet> {
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();
        for v in 0..self.n {
            if assigned[v] {
                continue;
            }
            let class: VertexSet = (v..self.n)
                .filter(|&u| !assigned[u] && self.are_twins(v, u))
                .collect();
            for &u in &class {
                assigned[u] = true;
            }
            debug_assert!(self.is_clique(&class) || self.is_independent_set(&class));
            classes.push(class);
        }
        classes
    }

    /// Adjacency matrix under the given vertex ordering: entry `(i, j)` is
    /// one iff `order[i]` and `order[j]` are adjacent.
    pub fn adjacency_matrix(&self, order: &[usize]) -> Result<QMatrix, GraphError> {
        if order.len() != self.n {
            return Err(GraphError::NotAPermutation);
        }
        let mut seen = vec![false; self.n];
        for &v in order {
            if v >= self.n || seen[v] {
                return Err(GraphError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(QMatrix::from_fn(self.n, self.n, |i, j| {
            if self.has_edge(order[i], order[j]) {
                Rational::one()
            } else {
                Rational::from_integer(0.into())
            }
        }))
    }

    /// Adjacency matrix in the natural vertex order.
    pub fn adjacency_natural(&self) -> QMatrix {
        let order: Vec<usize> = self.vertices().collect();
        self.adjacency_matrix(&order).expect("natural order is a permutation")
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

// Upper-triangle bit order shared by the parser and writer: column-major,
// x(0,1), x(0,2), x(1,2), x(0,3), ...
fn triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

/// Parses one graph6 line (optionally newline-terminated).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidChar { byte, position });
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // The 8-byte header for n > 258047 is out of scope here.
            return Err(Graph6Error::TooLarge);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            expected,
            got: body.len(),
        });
    }
    let mut g = Graph::empty(n);
    for (k, (i, j)) in triangle_pairs(n).enumerate() {
        let byte = (body[k / 6] - 63) as usize;
        if byte >> (5 - k % 6) & 1 == 1 {
            g.set_edge(i, j);
        }
    }
    // Padding bits beyond the triangle must all be zero.
    for k in bit_count..expected * 6 {
        let byte = (body[k / 6] - 63) as usize;
        if byte >> (5 - k % 6) & 1 == 1 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    Ok(g)
}

/// Writes the canonical graph6 encoding. Supports the short header for
/// `n <= 62` and the 4-byte header up to `n = 258047`.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 258_047, "graph too large for the supported graph6 headers");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut current = 0u8;
    let mut used = 0;
    for (i, j) in triangle_pairs(n) {
        current <<= 1;
        if g.has_edge(i, j) {
            current |= 1;
        }
        used += 1;
        if used == 6 {
            out.push(63 + current);
            current = 0;
            used = 0;
        }
    }
    if used > 0 {
        out.push(63 + (current << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

// ---------------------------------------------------------------------------
// edge lists
// ---------------------------------------------------------------------------

/// Parses the line-oriented edge-list format: first non-comment line is the
/// vertex count, each following line is `u v`. A `#` starts a comment.
/// Duplicate edges are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().filter_map(|line| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some(line)
        }
    });
    let header = lines.next().ok_or(EdgeListError::MissingVertexCount)?;
    let n: usize = header
        .parse()
        .map_err(|_| EdgeListError::BadToken(header.to_string()))?;
    let mut g = Graph::empty(n);
    for line in lines {
        let mut tokens = line.split_whitespace();
        let u_tok = tokens.next().expect("non-empty line has a token");
        let v_tok = tokens
            .next()
            .ok_or_else(|| EdgeListError::MissingEndpoint(line.to_string()))?;
        if tokens.next().is_some() {
            return Err(EdgeListError::MissingEndpoint(line.to_string()));
        }
        let u: usize = u_tok
            .parse()
            .map_err(|_| EdgeListError::BadToken(u_tok.to_string()))?;
        let v: usize = v_tok
            .parse()
            .map_err(|_| EdgeListError::BadToken(v_tok.to_string()))?;
        if u >= n {
            return Err(EdgeListError::VertexOutOfRange { vertex: u, n });
        }
        if v >= n {
            return Err(EdgeListError::VertexOutOfRange { vertex: v, n });
        }
        if u == v {
            return Err(EdgeListError::SelfLoop(u));
        }
        g.set_edge(u, v);
    }
    Ok(g)
}

/// Writes the edge-list format accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// The path on `n` vertices, edges `i ~ i+1`.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

/// The cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("cycle edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_parse_k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn graph6_parse_empty_triangle() {
        let g = parse_graph6("B?").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn graph6_parse_k3() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn graph6_write_small() {
        assert_eq!(write_graph6(&Graph::complete(2)), "A_");
        assert_eq!(write_graph6(&Graph::empty(3)), "B?");
        assert_eq!(write_graph6(&Graph::complete(3)), "Bw");
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(
            parse_graph6("A!"),
            Err(Graph6Error::InvalidChar { .. })
        ));
        assert!(matches!(parse_graph6("B"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(
            parse_graph6("A_?"),
            Err(Graph6Error::TrailingData { .. })
        ));
        // K2 body with a stray padding bit set.
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::TrailingBits));
    }

    #[test]
    fn graph6_long_header_roundtrip() {
        let g = path_graph(70);
        let text = write_graph6(&g);
        assert_eq!(text.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn graph6_roundtrip_random() {
        // Deterministic xorshift sweep over assorted sizes.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..1000 {
            let n = (round % 21) as usize;
            let mut g = Graph::empty(n);
            for j in 1..n {
                for i in 0..j {
                    if next() & 1 == 1 {
                        g.set_edge(i, j);
                    }
                }
            }
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_parses_paths() {
        let p3 = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(p3, path_graph(3));
        let p4 = parse_edge_list("4\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(p4, path_graph(4));
    }

    #[test]
    fn edge_list_comments_and_duplicates() {
        let g = parse_edge_list("# a path\n3 # vertex count\n0 1\n0 1\n1 2\n").unwrap();
        assert_eq!(g, path_graph(3));
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert_eq!(parse_edge_list("2\n0 0"), Err(EdgeListError::SelfLoop(0)));
        assert!(matches!(
            parse_edge_list("2\n0 5"),
            Err(EdgeListError::VertexOutOfRange { vertex: 5, n: 2 })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 x"),
            Err(EdgeListError::BadToken(_))
        ));
        assert!(matches!(
            parse_edge_list("2\n0"),
            Err(EdgeListError::MissingEndpoint(_))
        ));
        assert_eq!(parse_edge_list(""), Err(EdgeListError::MissingVertexCount));
    }

    #[test]
    fn adjacency_matrix_of_k3() {
        let a = Graph::complete(3).adjacency_natural();
        let j_minus_i = QMatrix::ones(3, 3).sub(&QMatrix::identity(3));
        assert_eq!(a, j_minus_i);
    }

    #[test]
    fn adjacency_matrix_of_path() {
        let a = path_graph(3).adjacency_natural();
        assert_eq!(
            a,
            QMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])
        );
    }

    #[test]
    fn adjacency_matrix_rejects_non_permutation() {
        let g = path_graph(3);
        assert!(g.adjacency_matrix(&[0, 1]).is_err());
        assert!(g.adjacency_matrix(&[0, 1, 1]).is_err());
        assert!(g.adjacency_matrix(&[0, 1, 5]).is_err());
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
    }

    #[test]
    fn complement_involution() {
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p4 = path_graph(4);
        assert_eq!(p4.induced_subgraph(&vset(&[1, 2])), Graph::complete(2));
        assert_eq!(p4.induced_subgraph(&vset(&[])), Graph::empty(0));
        assert_eq!(p4.without_vertex(0), path_graph(3));
    }

    #[test]
    fn twin_classes_examples() {
        assert_eq!(Graph::complete(4).twin_classes(), vec![vset(&[0, 1, 2, 3])]);
        // Path a-b-c: the endpoints are twins.
        assert_eq!(
            path_graph(3).twin_classes(),
            vec![vset(&[0, 2]), vset(&[1])]
        );
        let p4_classes = path_graph(4).twin_classes();
        assert_eq!(p4_classes.len(), 4);
    }

    #[test]
    fn degrees_and_connectivity() {
        let g = path_graph(4);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
        assert!(g.is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!g.has_isolated_vertex());
        assert!(Graph::empty(1).has_isolated_vertex());
    }
}
