//! Split graphs: recognition, s-partitions, swing vertices, maximum cliques
//! and independent sets, and threshold-graph construction.
//!
//! A split graph carries one concrete s-partition `(K, S)` plus the derived
//! biadjacency matrix `R` (rows follow sorted `K`, columns sorted `S`).
//! Partitions with an empty side are allowed; single vertices are cliques,
//! and the empty set is both a clique and an independent set.

use crate::graph::{Graph, VertexSet};
use crate::linalg::{QMatrix, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitError {
    PartitionNotDisjoint,
    PartitionNotCovering,
    CliqueSideNotComplete,
    IndependentSideHasEdge,
    VertexOutOfRange { vertex: usize, n: usize },
    EmptyThresholdSequence,
    ThresholdMustStartWithZero,
    BadThresholdSymbol(char),
}

impl fmt::Display for SplitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitError::PartitionNotDisjoint => write!(f, "partition sides are not disjoint"),
            SplitError::PartitionNotCovering => write!(f, "partition sides do not cover the vertex set"),
            SplitError::CliqueSideNotComplete => write!(f, "clique side is not a clique"),
            SplitError::IndependentSideHasEdge => write!(f, "independent side contains an edge"),
            SplitError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            SplitError::EmptyThresholdSequence => write!(f, "threshold sequence is empty"),
            SplitError::ThresholdMustStartWithZero => {
                write!(f, "threshold sequence must start with 0")
            }
            SplitError::BadThresholdSymbol(c) => {
                write!(f, "threshold sequence may only contain 0 and 1, found {c:?}")
            }
        }
    }
}

impl std::error::Error for SplitError {}

/// An s-partition: a clique side and an independent side covering `V`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SPartition {
    pub fn new(clique: VertexSet, independent: VertexSet) -> Self {
        SPartition { clique, independent }
    }

    /// Checks all partition invariants against a concrete graph.
    pub fn validate(&self, g: &Graph) -> Result<(), SplitError> {
        for &v in self.clique.iter().chain(self.independent.iter()) {
            if v >= g.n() {
                return Err(SplitError::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        if !self.clique.is_disjoint(&self.independent) {
            return Err(SplitError::PartitionNotDisjoint);
        }
        if self.clique.len() + self.independent.len() != g.n() {
            return Err(SplitError::PartitionNotCovering);
        }
        if !g.is_clique(&self.clique) {
            return Err(SplitError::CliqueSideNotComplete);
        }
        if !g.is_independent_set(&self.independent) {
            return Err(SplitError::IndependentSideHasEdge);
        }
        Ok(())
    }
}

/// Biadjacency matrix of a partitioned graph: `|K| x |S|`, rows following
/// sorted clique order, columns sorted independent order.
pub fn biadjacency(g: &Graph, p: &SPartition) -> QMatrix {
    let k: Vec<usize> = p.clique.iter().copied().collect();
    let s: Vec<usize> = p.independent.iter().copied().collect();
    QMatrix::from_fn(k.len(), s.len(), |i, j| {
        if g.has_edge(k[i], s[j]) {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// A graph together with a validated s-partition and its biadjacency matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitGraph {
    graph: Graph,
    partition: SPartition,
    clique_order: Vec<usize>,
    independent_order: Vec<usize>,
    biadjacency: QMatrix,
}

impl SplitGraph {
    pub fn new(graph: Graph, partition: SPartition) -> Result<Self, SplitError> {
        partition.validate(&graph)?;
        let biadjacency = biadjacency(&graph, &partition);
        let clique_order = partition.clique.iter().copied().collect();
        let independent_order = partition.independent.iter().copied().collect();
        Ok(SplitGraph {
            graph,
            partition,
            clique_order,
            independent_order,
            biadjacency,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn partition(&self) -> &SPartition {
        &self.partition
    }

    pub fn biadjacency(&self) -> &QMatrix {
        &self.biadjacency
    }

    /// Clique vertices in sorted order (the row order of `R`).
    pub fn clique_vertices(&self) -> &[usize] {
        &self.clique_order
    }

    /// Independent vertices in sorted order (the column order of `R`).
    pub fn independent_vertices(&self) -> &[usize] {
        &self.independent_order
    }

    pub fn k_len(&self) -> usize {
        self.clique_order.len()
    }

    pub fn s_len(&self) -> usize {
        self.independent_order.len()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The vertex ordering `(K, S)` used by block-form matrices and kernel
    /// vectors: sorted clique vertices first, then sorted independent ones.
    pub fn vertex_order(&self) -> Vec<usize> {
        self.clique_order
            .iter()
            .chain(self.independent_order.iter())
            .copied()
            .collect()
    }

    /// Adjacency matrix in the `(K, S)` ordering; has the block form with
    /// `J - I` on the clique, `R` off-diagonal and a zero independent block.
    pub fn adjacency_block(&self) -> QMatrix {
        self.graph
            .adjacency_matrix(&self.vertex_order())
            .expect("vertex_order is a permutation")
    }
}

/// Recognizes split graphs by the degree-sequence splittance criterion.
///
/// With degrees sorted descending and `m = max{i : d_i >= i-1}`, the graph is
/// split iff `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`; in that case any `m`
/// vertices of highest degree form a clique and the rest an independent set
/// (the tie between equal degrees never matters: the degree-sum identity
/// forces the chosen side to be complete and its complement edgeless).
pub fn recognize_split(g: &Graph) -> Option<SplitGraph> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut by_degree: Vec<usize> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| degrees[i - 1] >= i - 1).max().unwrap_or(0);
    let top: usize = degrees[..m].iter().sum();
    let rest: usize = degrees[m..].iter().sum();
    if top != m * (m - 1) + rest {
        return None;
    }
    let clique: VertexSet = by_degree[..m].iter().copied().collect();
    let independent: VertexSet = by_degree[m..].iter().copied().collect();
    Some(
        SplitGraph::new(g.clone(), SPartition::new(clique, independent))
            .expect("splittance equality forces a valid partition"),
    )
}

/// All s-partitions of the graph, discovered by moving vertices between the
/// sides starting from the carried partition: a clique vertex with no
/// independent neighbors may move out, and an independent vertex adjacent to
/// the whole clique may move in. Output is sorted by descending clique size,
/// then lexicographically.
pub fn all_s_partitions(sp: &SplitGraph) -> Vec<SPartition> {
    let g = sp.graph();
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue = vec![sp.partition().clique.clone()];
    seen.insert(sp.partition().clique.clone());
    while let Some(clique) = queue.pop() {
        let independent: VertexSet = g.vertices().filter(|v| !clique.contains(v)).collect();
        for &w in &clique {
            if g.neighbors(w).all(|u| !independent.contains(&u)) {
                let mut smaller = clique.clone();
                smaller.remove(&w);
                if seen.insert(smaller.clone()) {
                    queue.push(smaller);
                }
            }
        }
        for &v in &independent {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                let mut larger = clique.clone();
                larger.insert(v);
                if seen.insert(larger.clone()) {
                    queue.push(larger);
                }
            }
        }
    }
    let mut partitions: Vec<SPartition> = seen
        .into_iter()
        .map(|clique| {
            let independent = g.vertices().filter(|v| !clique.contains(v)).collect();
            SPartition::new(clique, independent)
        })
        .collect();
    partitions.sort_by(|a, b| {
        b.clique
            .len()
            .cmp(&a.clique.len())
            .then_with(|| a.clique.cmp(&b.clique))
    });
    debug_assert!(partitions.iter().all(|p| p.validate(g).is_ok()));
    partitions
}

/// Clique number, read off the partition: `|K| + 1` exactly when some
/// independent vertex sees the whole clique.
pub fn clique_number(sp: &SplitGraph) -> usize {
    let g = sp.graph();
    let extendable = sp
        .independent_vertices()
        .iter()
        .any(|&v| sp.clique_vertices().iter().all(|&u| g.has_edge(u, v)));
    sp.k_len() + usize::from(extendable)
}

/// Independence number: `|S| + 1` exactly when some clique vertex has no
/// independent neighbors.
pub fn independence_number(sp: &SplitGraph) -> usize {
    let g = sp.graph();
    let extendable = sp
        .clique_vertices()
        .iter()
        .any(|&u| sp.independent_vertices().iter().all(|&v| !g.has_edge(u, v)));
    sp.s_len() + usize::from(extendable)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Balance {
    Balanced,
    Unbalanced,
}

/// Balanced means `omega + alpha = n` (equivalently, the s-partition is
/// unique); unbalanced means `omega + alpha = n + 1`.
pub fn balance_class(sp: &SplitGraph) -> Balance {
    let total = clique_number(sp) + independence_number(sp);
    let n = sp.n();
    assert!(
        total == n || total == n + 1,
        "omega + alpha must be n or n + 1, got {total} for n = {n}"
    );
    if total == n {
        Balance::Balanced
    } else {
        Balance::Unbalanced
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SwingClass {
    Empty,
    Singleton,
    Clique,
    IndependentSet,
}

/// Swing-vertex structure of a split graph.
///
/// `swing` holds the vertices that are on the clique side of one s-partition
/// and the independent side of another; `always_clique` and
/// `always_independent` are the intersections over all partitions. The three
/// sets tripartition the vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SwingReport {
    pub swing: VertexSet,
    pub always_clique: VertexSet,
    pub always_independent: VertexSet,
    pub classification: SwingClass,
    pub partitions: Vec<SPartition>,
}

pub fn swing_report(sp: &SplitGraph) -> SwingReport {
    let partitions = all_s_partitions(sp);
    let mut always_clique: VertexSet = sp.graph().vertices().collect();
    let mut always_independent: VertexSet = sp.graph().vertices().collect();
    for p in &partitions {
        always_clique = always_clique.intersection(&p.clique).copied().collect();
        always_independent = always_independent
            .intersection(&p.independent)
            .copied()
            .collect();
    }
    let swing: VertexSet = sp
        .graph()
        .vertices()
        .filter(|v| !always_clique.contains(v) && !always_independent.contains(v))
        .collect();
    let classification = match swing.len() {
        0 => SwingClass::Empty,
        1 => SwingClass::Singleton,
        _ if sp.graph().is_clique(&swing) => SwingClass::Clique,
        _ => {
            debug_assert!(sp.graph().is_independent_set(&swing));
            SwingClass::IndependentSet
        }
    };
    SwingReport {
        swing,
        always_clique,
        always_independent,
        classification,
        partitions,
    }
}

/// All maximum cliques. In a split graph every clique meets `S` in at most
/// one vertex, so the candidates are `K` itself and `N(v) + v` for `v` in
/// `S`; the maximum-size candidates are exactly the maximum cliques.
pub fn maximum_cliques(sp: &SplitGraph) -> Vec<VertexSet> {
    let g = sp.graph();
    let mut candidates: Vec<VertexSet> = vec![sp.partition().clique.clone()];
    for &v in sp.independent_vertices() {
        let mut c = g.neighbor_set(v);
        c.insert(v);
        debug_assert!(g.is_clique(&c), "independent neighborhoods are cliques");
        candidates.push(c);
    }
    let best = candidates.iter().map(|c| c.len()).max().unwrap_or(0);
    candidates.retain(|c| c.len() == best);
    candidates.sort();
    candidates.dedup();
    candidates
}

/// All maximum independent sets, via maximum cliques of the complement
/// (which is split with the sides exchanged).
pub fn maximum_independent_sets(sp: &SplitGraph) -> Vec<VertexSet> {
    let complement = sp.graph().complement();
    let swapped = SPartition::new(
        sp.partition().independent.clone(),
        sp.partition().clique.clone(),
    );
    let co = SplitGraph::new(complement, swapped)
        .expect("complement swaps the partition sides");
    maximum_cliques(&co)
}

/// Builds the threshold graph of a binary creation sequence: `0` appends an
/// isolated vertex, `1` appends a universal vertex. The first symbol is the
/// initial vertex and must be `0`. The partition puts the universal-added
/// vertices in the clique.
pub fn threshold_graph(bits: &str) -> Result<SplitGraph, SplitError> {
    if bits.is_empty() {
        return Err(SplitError::EmptyThresholdSequence);
    }
    let mut edges = Vec::new();
    let mut clique = VertexSet::new();
    let mut independent = VertexSet::new();
    for (i, c) in bits.chars().enumerate() {
        match c {
            '0' => {
                independent.insert(i);
            }
            '1' => {
                if i == 0 {
                    return Err(SplitError::ThresholdMustStartWithZero);
                }
                for j in 0..i {
                    edges.push((j, i));
                }
                clique.insert(i);
            }
            other => return Err(SplitError::BadThresholdSymbol(other)),
        }
    }
    let n = bits.len();
    let graph = Graph::from_edges(n, &edges).expect("threshold edges are valid");
    SplitGraph::new(graph, SPartition::new(clique, independent))
}

/// Threshold test by peeling: repeatedly delete an isolated or universal
/// vertex; threshold graphs are exactly the graphs that peel to nothing.
pub fn is_threshold(g: &Graph) -> bool {
    let mut remaining: VertexSet = g.vertices().collect();
    while !remaining.is_empty() {
        let pick = remaining.iter().copied().find(|&v| {
            let inside = remaining
                .iter()
                .filter(|&&u| u != v && g.has_edge(u, v))
                .count();
            inside == 0 || inside == remaining.len() - 1
        });
        match pick {
            Some(v) => {
                remaining.remove(&v);
            }
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph, vset};

    fn p3_split() -> SplitGraph {
        // a-b-c with K = {a, b}, S = {c}.
        SplitGraph::new(
            path_graph(3),
            SPartition::new(vset(&[0, 1]), vset(&[2])),
        )
        .unwrap()
    }

    #[test]
    fn recognize_rejects_c4() {
        assert!(recognize_split(&cycle_graph(4)).is_none());
        assert!(recognize_split(&cycle_graph(5)).is_none());
    }

    #[test]
    fn recognize_p4_middle_clique() {
        let sp = recognize_split(&path_graph(4)).unwrap();
        assert_eq!(sp.partition().clique, vset(&[1, 2]));
        assert_eq!(sp.partition().independent, vset(&[0, 3]));
    }

    #[test]
    fn recognize_first_figure_graph() {
        // Complete graph on {0..5} with pendant independent structure; the
        // clique side of any s-partition has 5 or 6 vertices.
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        edges.extend([(6, 2), (6, 3), (6, 4), (8, 0), (8, 1), (9, 0)]);
        let g = Graph::from_edges(10, &edges).unwrap();
        let sp = recognize_split(&g).unwrap();
        assert!(sp.k_len() == 5 || sp.k_len() == 6);
        let report = swing_report(&sp);
        assert_eq!(report.swing, vset(&[5]));
        assert_eq!(report.classification, SwingClass::Singleton);
        assert_eq!(report.partitions.len(), 2);
    }

    #[test]
    fn partitions_of_p3() {
        let sp = p3_split();
        let parts = all_s_partitions(&sp);
        assert_eq!(parts.len(), 3);
        assert!(parts.contains(&SPartition::new(vset(&[0, 1]), vset(&[2]))));
        assert!(parts.contains(&SPartition::new(vset(&[1]), vset(&[0, 2]))));
        assert!(parts.contains(&SPartition::new(vset(&[1, 2]), vset(&[0]))));
    }

    #[test]
    fn partitions_of_p4_unique() {
        let sp = recognize_split(&path_graph(4)).unwrap();
        assert_eq!(all_s_partitions(&sp).len(), 1);
        assert_eq!(balance_class(&sp), Balance::Balanced);
    }

    #[test]
    fn partitions_of_k3() {
        let sp = recognize_split(&Graph::complete(3)).unwrap();
        let parts = all_s_partitions(&sp);
        assert_eq!(parts.len(), 4);
        assert!(parts.contains(&SPartition::new(vset(&[0, 1, 2]), vset(&[]))));
        for v in 0..3 {
            let clique: VertexSet = (0..3).filter(|&u| u != v).collect();
            assert!(parts.contains(&SPartition::new(clique, vset(&[v]))));
        }
        let report = swing_report(&sp);
        assert_eq!(report.swing, vset(&[0, 1, 2]));
        assert_eq!(report.classification, SwingClass::Clique);
    }

    #[test]
    fn balance_examples() {
        assert_eq!(balance_class(&p3_split()), Balance::Unbalanced);
        let threshold = threshold_graph("0101").unwrap();
        assert_eq!(balance_class(&threshold), Balance::Unbalanced);
    }

    #[test]
    fn swing_of_p3_is_independent_pair() {
        let report = swing_report(&p3_split());
        assert_eq!(report.swing, vset(&[0, 2]));
        assert_eq!(report.always_clique, vset(&[1]));
        assert_eq!(report.always_independent, vset(&[]));
        assert_eq!(report.classification, SwingClass::IndependentSet);
    }

    #[test]
    fn maximum_cliques_of_p4() {
        let sp = recognize_split(&path_graph(4)).unwrap();
        let cliques = maximum_cliques(&sp);
        assert_eq!(cliques.len(), 3);
        assert!(cliques.iter().all(|c| c.len() == 2));
        assert!(cliques.contains(&vset(&[1, 2])));
    }

    #[test]
    fn maximum_independent_sets_examples() {
        let sets = maximum_independent_sets(&p3_split());
        assert_eq!(sets, vec![vset(&[0, 2])]);
        let k3 = recognize_split(&Graph::complete(3)).unwrap();
        let sets = maximum_independent_sets(&k3);
        assert_eq!(sets.len(), 3);
        assert!(sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn threshold_small_sequences() {
        let single = threshold_graph("0").unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.partition().independent, vset(&[0]));

        let k2 = threshold_graph("01").unwrap();
        assert_eq!(k2.graph(), &Graph::complete(2));
        assert_eq!(k2.partition().clique, vset(&[1]));

        let t = threshold_graph("0101").unwrap();
        assert_eq!(
            t.graph().edges(),
            vec![(0, 1), (0, 3), (1, 3), (2, 3)]
        );
        assert_eq!(t.partition().clique, vset(&[1, 3]));
    }

    #[test]
    fn threshold_rejects_bad_sequences() {
        assert_eq!(threshold_graph(""), Err(SplitError::EmptyThresholdSequence));
        assert_eq!(
            threshold_graph("10"),
            Err(SplitError::ThresholdMustStartWithZero)
        );
        assert_eq!(threshold_graph("0x"), Err(SplitError::BadThresholdSymbol('x')));
    }

    #[test]
    fn threshold_detection() {
        assert!(is_threshold(threshold_graph("010110").unwrap().graph()));
        assert!(is_threshold(&Graph::complete(4)));
        assert!(is_threshold(&Graph::empty(3)));
        assert!(!is_threshold(&path_graph(4)));
        assert!(!is_threshold(&cycle_graph(4)));
    }

    #[test]
    fn biadjacency_of_p3() {
        let sp = p3_split();
        assert_eq!(sp.biadjacency(), &QMatrix::from_int_rows(&[&[0], &[1]]));
    }

    #[test]
    fn biadjacency_of_counterexample_figure() {
        // Clique {0..3}, independent {4..8}; rows list each clique vertex's
        // independent neighbors.
        let edges = [
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
            (4, 3), (5, 1), (5, 2), (6, 1), (6, 2), (6, 3),
            (7, 0), (7, 2), (8, 0), (8, 2), (8, 3),
        ];
        let g = Graph::from_edges(9, &edges).unwrap();
        let sp = recognize_split(&g).unwrap();
        assert_eq!(sp.partition().clique, vset(&[0, 1, 2, 3]));
        assert_eq!(
            sp.biadjacency(),
            &QMatrix::from_int_rows(&[
                &[0, 0, 0, 1, 1],
                &[0, 1, 1, 0, 0],
                &[0, 1, 1, 1, 1],
                &[1, 0, 1, 0, 1],
            ])
        );
    }

    #[test]
    fn biadjacency_complete_split_is_all_ones() {
        let mut edges = vec![(0, 1)];
        edges.extend([(0, 2), (1, 2), (0, 3), (1, 3)]);
        let g = Graph::from_edges(4, &edges).unwrap();
        let sp = SplitGraph::new(g, SPartition::new(vset(&[0, 1]), vset(&[2, 3]))).unwrap();
        assert_eq!(sp.biadjacency(), &QMatrix::ones(2, 2));
    }

    #[test]
    fn block_adjacency_shape() {
        let sp = p3_split();
        let a = sp.adjacency_block();
        // [[J-I, R], [R^t, 0]] for K = {0, 1}, S = {2}.
        assert_eq!(
            a,
            QMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])
        );
    }

    #[test]
    fn partition_validation_errors() {
        let g = path_graph(3);
        let bad = SPartition::new(vset(&[0, 2]), vset(&[1]));
        assert_eq!(bad.validate(&g), Err(SplitError::CliqueSideNotComplete));
        let bad = SPartition::new(vset(&[1]), vset(&[0, 1, 2]));
        assert_eq!(bad.validate(&g), Err(SplitError::PartitionNotDisjoint));
        let bad = SPartition::new(vset(&[1]), vset(&[0]));
        assert_eq!(bad.validate(&g), Err(SplitError::PartitionNotCovering));
    }
}
