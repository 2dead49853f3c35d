//! Immutable simple graphs, bipartitions, degree sequences and girth.
//!
//! Nodes are dense `0..node_count` indices. Every generator in this crate
//! documents its labeling, and the labelings are part of the public contract:
//! tests and serialized files depend on them staying put.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{node_count}")]
    EndpointOutOfRange {
        u: usize,
        v: usize,
        node_count: usize,
    },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph has an odd closed walk {walk:?}")]
    OddCycle { walk: Vec<usize> },
    #[error("{0}")]
    Parameter(String),
    #[error("bipartition covers {labels} nodes but graph has {nodes}")]
    SizeMismatch { labels: usize, nodes: usize },
}

/// A simple undirected graph on nodes `0..node_count`.
///
/// Edges are stored once, as `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated
    /// edges (in either orientation).
    pub fn new(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut canonical = Vec::new();
        for (u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(GraphError::EndpointOutOfRange { u, v, node_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(node_count, canonical))
    }

    pub(crate) fn from_sorted_unchecked(node_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            node_count,
            edges,
            adjacency,
        }
    }

    /// The graph with `node_count` nodes and no edges.
    pub fn empty(node_count: usize) -> Self {
        Self::from_sorted_unchecked(node_count, Vec::new())
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Places `other` after `self`, shifting its indices by `self.node_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.node_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        // Shifted edges all compare greater than the originals.
        Graph::from_sorted_unchecked(offset + other.node_count, edges)
    }

    /// Relabels node `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.node_count {
            return Err(GraphError::Parameter(format!(
                "permutation has length {} for {} nodes",
                perm.len(),
                self.node_count
            )));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::Parameter("not a permutation".into()));
            }
        }
        Graph::new(
            self.node_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    /// Connected components, each sorted, ordered by their minimum node.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.node_count];
        let mut components = Vec::new();
        for start in 0..self.node_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        component.push(y);
                        queue.push_back(y);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Two-colors the graph. The lowest node of every component (and every
    /// isolated node) lands on side U.
    pub fn bipartition(&self) -> Result<Bipartition, GraphError> {
        let mut side: Vec<Option<Side>> = vec![None; self.node_count];
        let mut parent = vec![usize::MAX; self.node_count];
        for root in 0..self.node_count {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::U);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].expect("queued nodes are colored");
                for &y in &self.adjacency[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(sx.other());
                            parent[y] = x;
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => {
                            return Err(GraphError::OddCycle {
                                walk: odd_walk(&parent, root, x, y),
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(Bipartition {
            sides: side.into_iter().map(|s| s.expect("all colored")).collect(),
        })
    }

    /// Exact girth by a breadth-first search from every node.
    pub fn girth(&self) -> Girth {
        let n = self.node_count;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for &y in &self.adjacency[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }
}

fn odd_walk(parent: &[usize], root: usize, x: usize, y: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut path = vec![v];
        while v != root {
            v = parent[v];
            path.push(v);
        }
        path
    };
    // root .. x, y .. root
    let mut walk = path_to_root(x);
    walk.reverse();
    walk.extend(path_to_root(y));
    walk
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("node_count", &self.node_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Length of a shortest cycle; `Infinite` sorts after every finite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    U,
    W,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::U => Side::W,
            Side::W => Side::U,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Side::U => 'U',
            Side::W => 'W',
        }
    }
}

/// A side label for every node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    /// Wraps labels and checks that every edge of `g` crosses sides.
    pub fn new(g: &Graph, sides: Vec<Side>) -> Result<Self, GraphError> {
        let b = Bipartition { sides };
        b.check(g)?;
        Ok(b)
    }

    /// Labels without a graph to check against; see [`Bipartition::check`].
    pub fn from_sides(sides: Vec<Side>) -> Self {
        Bipartition { sides }
    }

    /// Fails with the first monochromatic edge, reported as a two-node walk.
    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        if self.sides.len() != g.node_count() {
            return Err(GraphError::SizeMismatch {
                labels: self.sides.len(),
                nodes: g.node_count(),
            });
        }
        match g
            .edges()
            .iter()
            .find(|&&(u, v)| self.sides[u] == self.sides[v])
        {
            Some(&(u, v)) => Err(GraphError::OddCycle { walk: vec![u, v] }),
            None => Ok(()),
        }
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn nodes_on(&self, side: Side) -> impl Iterator<Item = usize> + '_ {
        self.sides
            .iter()
            .enumerate()
            .filter(move |(_, &s)| s == side)
            .map(|(v, _)| v)
    }

    pub fn count(&self, side: Side) -> usize {
        self.sides.iter().filter(|&&s| s == side).count()
    }

    /// Labels for `self` followed by `other`, matching [`Graph::disjoint_union`].
    pub fn concat(&self, other: &Bipartition) -> Bipartition {
        let mut sides = self.sides.clone();
        sides.extend_from_slice(&other.sides);
        Bipartition { sides }
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            sides: self.sides.iter().map(|s| s.other()).collect(),
        }
    }
}

/// Non-increasing degree lists of the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequences {
    pub u_side: Vec<usize>,
    pub w_side: Vec<usize>,
}

impl DegreeSequences {
    pub fn of(g: &Graph, b: &Bipartition) -> Self {
        let mut u_side = Vec::new();
        let mut w_side = Vec::new();
        for v in 0..g.node_count() {
            match b.side(v) {
                Side::U => u_side.push(g.degree(v)),
                Side::W => w_side.push(g.degree(v)),
            }
        }
        u_side.sort_unstable_by(|a, b| b.cmp(a));
        w_side.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequences { u_side, w_side }
    }

    pub fn side(&self, side: Side) -> &[usize] {
        match side {
            Side::U => &self.u_side,
            Side::W => &self.w_side,
        }
    }

    pub fn classify(&self) -> RegularityClass {
        fn constant(seq: &[usize]) -> Option<usize> {
            let first = *seq.first()?;
            seq.iter().all(|&d| d == first).then_some(first)
        }
        match (constant(&self.u_side), constant(&self.w_side)) {
            (Some(d_u), Some(d_w)) => RegularityClass::BiRegular { d_u, d_w },
            (Some(d), None) => RegularityClass::HalfRegular {
                side: Side::U,
                degree: d,
            },
            (None, Some(d)) => RegularityClass::HalfRegular {
                side: Side::W,
                degree: d,
            },
            (None, None) => RegularityClass::Irregular,
        }
    }
}

pub fn degree_sequences(g: &Graph, b: &Bipartition) -> DegreeSequences {
    DegreeSequences::of(g, b)
}

pub fn classify_regularity(ds: &DegreeSequences) -> RegularityClass {
    ds.classify()
}

/// An empty side counts as constant, so `K_1` is bi-regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegularityClass {
    BiRegular { d_u: usize, d_w: usize },
    HalfRegular { side: Side, degree: usize },
    Irregular,
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularityClass::BiRegular { d_u, d_w } => write!(f, "bi-regular({d_u},{d_w})"),
            RegularityClass::HalfRegular { side, degree } => {
                write!(f, "half-regular({},{degree})", side.as_char())
            }
            RegularityClass::Irregular => f.write_str("irregular"),
        }
    }
}

/// `P_n`: nodes `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::Parameter("path needs at least one node".into()));
    }
    Ok(Graph::from_sorted_unchecked(
        n,
        (1..n).map(|v| (v - 1, v)).collect(),
    ))
}

/// `C_n`: the ring `0 - 1 - ... - (n-1) - 0`.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Parameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{a,b}`: side U is `0..a`, side W is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a < 1 || b < 1 {
        return Err(GraphError::Parameter(format!(
            "complete bipartite graph needs a, b >= 1, got ({a}, {b})"
        )));
    }
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |w| (u, w))))
}

/// The Heawood graph as the point-line incidence graph of the Fano plane.
///
/// Nodes `0..7` are the points, node `7 + j` is the line
/// `{j, j + 1, j + 3} (mod 7)`. Points are side U, lines side W.
pub fn heawood() -> Graph {
    let edges = (0..7).flat_map(|j| [0, 1, 3].map(|s| ((j + s) % 7, 7 + j)));
    Graph::new(14, edges).expect("Fano incidences are distinct")
}

/// Points on U, lines on W, matching [`heawood`].
pub fn heawood_bipartition() -> Bipartition {
    let mut sides = vec![Side::U; 7];
    sides.extend([Side::W; 7]);
    Bipartition::from_sides(sides)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 1)]).unwrap().edge_count(), 1);
        assert_eq!(Graph::new(1, []).unwrap().node_count(), 1);
        assert_eq!(Graph::new(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::EndpointOutOfRange { .. })
        ));
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn union_offsets_second_operand() {
        let c6 = cycle_graph(6).unwrap();
        let u = c6.disjoint_union(&c6);
        assert_eq!((u.node_count(), u.edge_count()), (12, 12));
        assert!(u.has_edge(6, 7) && u.has_edge(6, 11));
        assert_eq!(c6.disjoint_union(&Graph::empty(0)), c6);

        let p6 = path_graph(6).unwrap();
        let g1 = u.disjoint_union(&p6).disjoint_union(&p6);
        let mut multiset = g1.degrees();
        multiset.sort_unstable();
        assert_eq!(multiset.iter().filter(|&&d| d == 2).count(), 20);
        assert_eq!(multiset.iter().filter(|&&d| d == 1).count(), 4);
    }

    #[test]
    fn bipartition_of_cycles() {
        let b = cycle_graph(6).unwrap().bipartition().unwrap();
        assert_eq!(
            b.sides(),
            &[Side::U, Side::W, Side::U, Side::W, Side::U, Side::W]
        );
        match cycle_graph(5).unwrap().bipartition() {
            Err(GraphError::OddCycle { walk }) => {
                assert_eq!(walk.first(), walk.last());
                assert_eq!((walk.len() - 1) % 2, 1);
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
        let h = heawood().bipartition().unwrap();
        assert_eq!((h.count(Side::U), h.count(Side::W)), (7, 7));
        assert_eq!(h, heawood_bipartition());
    }

    #[test]
    fn isolated_nodes_go_to_u() {
        let b = Graph::empty(3).bipartition().unwrap();
        assert_eq!(b.sides(), &[Side::U; 3]);
        let ds = degree_sequences(&Graph::empty(3), &b);
        assert_eq!(ds.u_side, vec![0, 0, 0]);
        assert!(ds.w_side.is_empty());
    }

    #[test]
    fn degree_sequences_of_k43() {
        let g = complete_bipartite(4, 3).unwrap();
        let ds = degree_sequences(&g, &g.bipartition().unwrap());
        assert_eq!(ds.u_side, vec![3, 3, 3, 3]);
        assert_eq!(ds.w_side, vec![4, 4, 4]);
        assert_eq!(ds.classify(), RegularityClass::BiRegular { d_u: 3, d_w: 4 });
    }

    #[test]
    fn regularity_classes() {
        let ds = |u: &[usize], w: &[usize]| DegreeSequences {
            u_side: u.to_vec(),
            w_side: w.to_vec(),
        };
        assert_eq!(
            ds(&[3, 3], &[2, 2, 2]).classify(),
            RegularityClass::BiRegular { d_u: 3, d_w: 2 }
        );
        assert_eq!(ds(&[3, 2], &[3, 2]).classify(), RegularityClass::Irregular);
        assert_eq!(
            ds(&[4, 4], &[8, 3]).classify(),
            RegularityClass::HalfRegular {
                side: Side::U,
                degree: 4
            }
        );
        let h = heawood();
        assert_eq!(
            degree_sequences(&h, &heawood_bipartition()).classify(),
            RegularityClass::BiRegular { d_u: 3, d_w: 3 }
        );
    }

    #[test]
    fn girth_examples() {
        assert_eq!(heawood().girth(), Girth::Finite(6));
        assert_eq!(cycle_graph(6).unwrap().girth(), Girth::Finite(6));
        assert_eq!(cycle_graph(5).unwrap().girth(), Girth::Finite(5));
        assert_eq!(path_graph(7).unwrap().girth(), Girth::Infinite);
        assert_eq!(complete_bipartite(1, 4).unwrap().girth(), Girth::Infinite);
        assert_eq!(complete_bipartite(2, 2).unwrap().girth(), Girth::Finite(4));
        assert_eq!(Graph::empty(0).girth(), Girth::Infinite);
    }

    #[test]
    fn components() {
        let g = cycle_graph(6)
            .unwrap()
            .disjoint_union(&cycle_graph(14).unwrap());
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1][0], 6);
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn generators() {
        let c = cycle_graph(6).unwrap();
        assert_eq!((c.node_count(), c.edge_count()), (6, 6));
        let h = heawood();
        assert_eq!((h.node_count(), h.edge_count()), (14, 21));
        assert!(h.degrees().iter().all(|&d| d == 3));
        let star = complete_bipartite(1, 4).unwrap();
        let ds = degree_sequences(&star, &star.bipartition().unwrap());
        assert_eq!((ds.u_side, ds.w_side), (vec![4], vec![1, 1, 1, 1]));
        assert!(path_graph(0).is_err());
        assert!(cycle_graph(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert_eq!(path_graph(1).unwrap().edge_count(), 0);
    }

    #[test]
    fn relabel_checks_permutation() {
        let p = path_graph(3).unwrap();
        assert_eq!(p.relabel(&[2, 1, 0]).unwrap(), p);
        assert!(p.relabel(&[0, 0, 1]).is_err());
    }
}
