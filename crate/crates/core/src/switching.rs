//! Godsil-McKay switching.
//!
//! A switching partition splits the nodes into cells `X_1..X_l` and a rest
//! `Y`. It is valid when every node of `Y` sees none, exactly half, or all of
//! each cell, and when the cells are equitable: all nodes of `X_i` have the
//! same number of neighbors in `X_j`. Switching complements the adjacency of
//! each half-connected `(y, X_i)` pair and preserves the spectrum.
//!
//! For bipartite inputs the module also types the cells by how they meet the
//! two sides, checks the structural properties that hold for bi-regular
//! graphs, and derives the bipartition of the switched graph.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Bipartition, DegreeSequences, Graph, RegularityClass, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchingError {
    #[error("malformed partition: {0}")]
    Malformed(String),
    #[error("partition is not a Godsil-McKay switching partition ({} violations)", .0.violations.len())]
    InvalidPartition(Box<ValidationReport>),
    #[error("graph is {0} under the given bipartition, not bi-regular")]
    NotBiRegular(RegularityClass),
    #[error("bipartition does not fit the graph: {0}")]
    Bipartition(String),
}

/// Cells `X_1..X_l`; every node outside them belongs to `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchingPartition {
    node_count: usize,
    cells: Vec<Vec<usize>>,
    /// `cell_of[v]` is the cell index, `None` for `Y`.
    cell_of: Vec<Option<usize>>,
}

impl SwitchingPartition {
    /// Cells are sorted internally; they must be non-empty, disjoint and in
    /// range, and there must be at least one.
    pub fn new(node_count: usize, cells: Vec<Vec<usize>>) -> Result<Self, SwitchingError> {
        if cells.is_empty() {
            return Err(SwitchingError::Malformed("no cells".into()));
        }
        let mut cell_of = vec![None; node_count];
        let mut sorted_cells = Vec::with_capacity(cells.len());
        for (i, mut cell) in cells.into_iter().enumerate() {
            if cell.is_empty() {
                return Err(SwitchingError::Malformed(format!(
                    "cell {} is empty",
                    i + 1
                )));
            }
            cell.sort_unstable();
            for &v in &cell {
                if v >= node_count {
                    return Err(SwitchingError::Malformed(format!(
                        "node {v} out of range 0..{node_count}"
                    )));
                }
                if let Some(j) = cell_of[v].replace(i) {
                    return Err(SwitchingError::Malformed(format!(
                        "node {v} is in cells {} and {}",
                        j + 1,
                        i + 1
                    )));
                }
            }
            sorted_cells.push(cell);
        }
        Ok(SwitchingPartition {
            node_count,
            cells: sorted_cells,
            cell_of,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_of(&self, v: usize) -> Option<usize> {
        self.cell_of[v]
    }

    /// Nodes of `Y`, ascending.
    pub fn rest(&self) -> Vec<usize> {
        (0..self.node_count)
            .filter(|&v| self.cell_of[v].is_none())
            .collect()
    }

    /// Re-indexes for a graph placed at `offset` inside a larger one.
    pub fn shifted(&self, offset: usize, node_count: usize) -> Result<Self, SwitchingError> {
        SwitchingPartition::new(
            node_count,
            self.cells
                .iter()
                .map(|c| c.iter().map(|&v| v + offset).collect())
                .collect(),
        )
    }
}

/// How a `Y` node meets one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YAdjacency {
    Zero,
    Half,
    Full,
    /// Any other count; reported as a violation.
    Other(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    /// The partition was built for a different node count.
    NodeCountMismatch { partition: usize, graph: usize },
    /// `y` has `count` neighbors in a cell of size `cell_size` (cells 1-based).
    RestNeighborCount {
        y: usize,
        cell: usize,
        count: usize,
        cell_size: usize,
    },
    /// Two nodes of `from_cell` see different numbers of nodes in `to_cell`.
    NotEquitable {
        from_cell: usize,
        to_cell: usize,
        first: (usize, usize),
        second: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NodeCountMismatch { partition, graph } => {
                write!(f, "partition covers {partition} nodes, graph has {graph}")
            }
            Violation::RestNeighborCount {
                y,
                cell,
                count,
                cell_size,
            } => write!(
                f,
                "node {y} has {count} neighbors in X{cell} (size {cell_size}); needs 0, half or all"
            ),
            Violation::NotEquitable {
                from_cell,
                to_cell,
                first,
                second,
            } => write!(
                f,
                "X{from_cell} not equitable towards X{to_cell}: node {} sees {}, node {} sees {}",
                first.0, first.1, second.0, second.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub valid: bool,
    /// Entry `(i, j)`: neighbors a node of `X_i` has in `X_j`. Present only
    /// when the cells are equitable.
    pub cell_degree_matrix: Option<Vec<Vec<usize>>>,
    /// One row per `Y` node: `(y, per-cell adjacency)`.
    pub y_profile: Vec<(usize, Vec<YAdjacency>)>,
    pub violations: Vec<Violation>,
    /// `Y` is empty; the conditions reduce to equitability.
    pub empty_rest: bool,
}

fn neighbors_in_cells(g: &Graph, p: &SwitchingPartition, v: usize) -> Vec<usize> {
    let mut counts = vec![0; p.cell_count()];
    for &x in g.neighbors(v) {
        if let Some(c) = p.cell_of(x) {
            counts[c] += 1;
        }
    }
    counts
}

pub fn validate_partition(g: &Graph, p: &SwitchingPartition) -> ValidationReport {
    if p.node_count() != g.node_count() {
        return ValidationReport {
            valid: false,
            cell_degree_matrix: None,
            y_profile: Vec::new(),
            violations: vec![Violation::NodeCountMismatch {
                partition: p.node_count(),
                graph: g.node_count(),
            }],
            empty_rest: false,
        };
    }
    let mut violations = Vec::new();
    let rest = p.rest();
    let mut y_profile = Vec::with_capacity(rest.len());
    for &y in &rest {
        let counts = neighbors_in_cells(g, p, y);
        let row = counts
            .iter()
            .zip(p.cells())
            .enumerate()
            .map(|(i, (&count, cell))| {
                let size = cell.len();
                let kind = match count {
                    0 => YAdjacency::Zero,
                    c if c == size => YAdjacency::Full,
                    c if 2 * c == size => YAdjacency::Half,
                    c => YAdjacency::Other(c),
                };
                if let YAdjacency::Other(_) = kind {
                    violations.push(Violation::RestNeighborCount {
                        y,
                        cell: i + 1,
                        count,
                        cell_size: size,
                    });
                }
                kind
            })
            .collect();
        y_profile.push((y, row));
    }

    let ell = p.cell_count();
    let mut matrix = vec![vec![0; ell]; ell];
    let mut equitable = true;
    for (i, cell) in p.cells().iter().enumerate() {
        let reference = neighbors_in_cells(g, p, cell[0]);
        matrix[i].clone_from(&reference);
        for &v in &cell[1..] {
            let counts = neighbors_in_cells(g, p, v);
            for j in 0..ell {
                if counts[j] != reference[j] {
                    equitable = false;
                    violations.push(Violation::NotEquitable {
                        from_cell: i + 1,
                        to_cell: j + 1,
                        first: (cell[0], reference[j]),
                        second: (v, counts[j]),
                    });
                }
            }
        }
    }
    ValidationReport {
        valid: violations.is_empty(),
        cell_degree_matrix: equitable.then_some(matrix),
        y_profile,
        violations,
        empty_rest: rest.is_empty(),
    }
}

/// Complements the neighborhood of every half-connected `Y` node inside its
/// cell. Refuses partitions that fail validation.
pub fn apply_switching(g: &Graph, p: &SwitchingPartition) -> Result<Graph, SwitchingError> {
    let report = validate_partition(g, p);
    if !report.valid {
        return Err(SwitchingError::InvalidPartition(Box::new(report)));
    }
    let mut remove = BTreeSet::new();
    let mut add = Vec::new();
    for (y, row) in &report.y_profile {
        for (cell, kind) in p.cells().iter().zip(row) {
            if *kind != YAdjacency::Half {
                continue;
            }
            for &x in cell {
                let edge = ((*y).min(x), (*y).max(x));
                if g.has_edge(*y, x) {
                    remove.insert(edge);
                } else {
                    add.push(edge);
                }
            }
        }
    }
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !remove.contains(e))
        .chain(add);
    Ok(Graph::new(g.node_count(), edges).expect("switching keeps the graph simple"))
}

/// Switching twice must give back the original edge set.
pub fn switching_is_involution(g: &Graph, p: &SwitchingPartition) -> Result<bool, SwitchingError> {
    let once = apply_switching(g, p)?;
    Ok(apply_switching(&once, p)? == *g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellType {
    /// Entirely on side U.
    Type1,
    /// Entirely on side W.
    Type2,
    /// Mixed with equal halves.
    Type31 { u: usize, w: usize },
    /// Mixed with unequal halves.
    Type32 { u: usize, w: usize },
}

impl CellType {
    pub fn is_mixed(self) -> bool {
        matches!(self, CellType::Type31 { .. } | CellType::Type32 { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellTyping {
    pub types: Vec<CellType>,
}

pub fn classify_cells(b: &Bipartition, p: &SwitchingPartition) -> CellTyping {
    let types = p
        .cells()
        .iter()
        .map(|cell| {
            let u = cell.iter().filter(|&&v| b.side(v) == Side::U).count();
            let w = cell.len() - u;
            match (u, w) {
                (_, 0) => CellType::Type1,
                (0, _) => CellType::Type2,
                (u, w) if u == w => CellType::Type31 { u, w },
                (u, w) => CellType::Type32 { u, w },
            }
        })
        .collect();
    CellTyping { types }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    P1,
    P2,
    P3,
    P4,
    P5,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::P1,
        Property::P2,
        Property::P3,
        Property::P4,
        Property::P5,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            Property::P1 => "no edge between a mixed cell and a one-sided cell",
            Property::P2 => "no edge between a balanced and an unbalanced mixed cell",
            Property::P3 => "adjacent unbalanced mixed cells lean to opposite sides",
            Property::P4 => {
                "a Y node touching a mixed cell sees exactly half of it, all on one side"
            }
            Property::P5 => "all nodes of a cell have the same number of neighbors in the cells",
        }
    }
}

/// A node pair (edge, or `Y` node and cell member) that breaks a property.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub nodes: (usize, usize),
    pub cells: (Option<usize>, Option<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PropertyCheck {
    pub property: Property,
    pub witnesses: Vec<Witness>,
}

impl PropertyCheck {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructuralReport {
    pub typing: CellTyping,
    pub checks: Vec<PropertyCheck>,
}

impl StructuralReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(PropertyCheck::holds)
    }
}

/// Checks P1-P5 on a valid partition of a bi-regular bipartite graph.
pub fn check_structural_properties(
    g: &Graph,
    b: &Bipartition,
    p: &SwitchingPartition,
) -> Result<StructuralReport, SwitchingError> {
    b.check(g)
        .map_err(|e| SwitchingError::Bipartition(e.to_string()))?;
    let class = DegreeSequences::of(g, b).classify();
    if !matches!(class, RegularityClass::BiRegular { .. }) {
        return Err(SwitchingError::NotBiRegular(class));
    }
    let report = validate_partition(g, p);
    if !report.valid {
        return Err(SwitchingError::InvalidPartition(Box::new(report)));
    }
    let typing = classify_cells(b, p);
    let types = &typing.types;
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    let mut p3 = Vec::new();
    for &(u, v) in g.edges() {
        let (Some(i), Some(j)) = (p.cell_of(u), p.cell_of(v)) else {
            continue;
        };
        let witness = Witness {
            nodes: (u, v),
            cells: (Some(i + 1), Some(j + 1)),
        };
        let (ti, tj) = (types[i], types[j]);
        if ti.is_mixed() != tj.is_mixed() {
            p1.push(witness);
            continue;
        }
        match (ti, tj) {
            (CellType::Type31 { .. }, CellType::Type32 { .. })
            | (CellType::Type32 { .. }, CellType::Type31 { .. }) => p2.push(witness),
            (CellType::Type32 { u: ui, w: wi }, CellType::Type32 { u: uj, w: wj })
                if ui.cmp(&wi) == uj.cmp(&wj) =>
            {
                p3.push(witness);
            }
            _ => {}
        }
    }

    let mut p4 = Vec::new();
    for y in p.rest() {
        for (i, cell) in p.cells().iter().enumerate() {
            if !types[i].is_mixed() {
                continue;
            }
            let seen: Vec<usize> = cell.iter().copied().filter(|&x| g.has_edge(y, x)).collect();
            if seen.is_empty() {
                continue;
            }
            let one_side = seen.iter().all(|&x| b.side(x) == b.side(seen[0]));
            if 2 * seen.len() != cell.len() || !one_side {
                p4.push(Witness {
                    nodes: (y, seen[0]),
                    cells: (None, Some(i + 1)),
                });
            }
        }
    }

    let mut p5 = Vec::new();
    for (i, cell) in p.cells().iter().enumerate() {
        let inside = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&x| p.cell_of(x).is_some())
                .count()
        };
        let reference = inside(cell[0]);
        for &v in &cell[1..] {
            if inside(v) != reference {
                p5.push(Witness {
                    nodes: (cell[0], v),
                    cells: (Some(i + 1), Some(i + 1)),
                });
            }
        }
    }

    let checks = Property::ALL
        .into_iter()
        .zip([p1, p2, p3, p4, p5])
        .map(|(property, witnesses)| PropertyCheck {
            property,
            witnesses,
        })
        .collect();
    Ok(StructuralReport { typing, checks })
}

/// Bipartition for the switched graph: nodes of mixed cells change side,
/// everything else keeps its side.
pub fn induced_bipartition(
    b: &Bipartition,
    p: &SwitchingPartition,
    typing: &CellTyping,
) -> Bipartition {
    let sides = (0..b.len())
        .map(|v| match p.cell_of(v) {
            Some(c) if typing.types[c].is_mixed() => b.side(v).other(),
            _ => b.side(v),
        })
        .collect();
    Bipartition::from_sides(sides)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreePreservation {
    /// Per-side degree sequences agree and both labelings are proper.
    pub equal: bool,
    pub before: DegreeSequences,
    pub after: DegreeSequences,
    pub after_is_bipartition: bool,
}

/// Compares per-side degree sequences of `g` under `b` and of `h` under
/// `h_sides`.
pub fn verify_degree_preservation(
    g: &Graph,
    b: &Bipartition,
    h: &Graph,
    h_sides: &Bipartition,
) -> DegreePreservation {
    let before = DegreeSequences::of(g, b);
    let after = DegreeSequences::of(h, h_sides);
    let after_is_bipartition = h_sides.is_valid_for(h);
    DegreePreservation {
        equal: before == after && after_is_bipartition && b.is_valid_for(g),
        before,
        after,
        after_is_bipartition,
    }
}

/// Switches and checks the degree sequences under [`induced_bipartition`].
pub fn switch_and_verify(
    g: &Graph,
    b: &Bipartition,
    p: &SwitchingPartition,
) -> Result<(Graph, Bipartition, DegreePreservation), SwitchingError> {
    let switched = apply_switching(g, p)?;
    let sides = induced_bipartition(b, p, &classify_cells(b, p));
    let verdict = verify_degree_preservation(g, b, &switched, &sides);
    Ok((switched, sides, verdict))
}
