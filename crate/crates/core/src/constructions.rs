//! Generators for the cospectral counterexample families.
//!
//! Every builder returns the graph together with its bipartition and, for
//! families obtained by switching, the switching partition. Labelings are
//! fixed and documented per builder. Each switched ("prime") graph is also
//! built directly from its recipe; tests assert that both routes agree.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{heawood, heawood_bipartition, Bipartition, Graph, GraphError, Side};
use crate::switching::{classify_cells, induced_bipartition, SwitchingPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters for {family}: {reason}")]
    Parameter {
        family: &'static str,
        reason: String,
    },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("malformed family spec {spec:?}: {reason}")]
    Syntax { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(family: &'static str, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::Parameter {
        family,
        reason: reason.into(),
    }
}

/// A graph with a proper two-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeled {
    pub graph: Graph,
    pub bipartition: Bipartition,
}

impl Labeled {
    fn union(&self, other: &Labeled) -> Labeled {
        Labeled {
            graph: self.graph.disjoint_union(&other.graph),
            bipartition: self.bipartition.concat(&other.bipartition),
        }
    }
}

/// A graph, its bipartition and a valid switching partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Switchable {
    pub graph: Graph,
    pub bipartition: Bipartition,
    pub partition: SwitchingPartition,
}

impl Switchable {
    pub fn labeled(&self) -> Labeled {
        Labeled {
            graph: self.graph.clone(),
            bipartition: self.bipartition.clone(),
        }
    }

    fn union(&self, other: &Switchable) -> Switchable {
        let graph = self.graph.disjoint_union(&other.graph);
        let n = graph.node_count();
        let offset = self.graph.node_count();
        let mut cells: Vec<Vec<usize>> = self.partition.cells().to_vec();
        cells.extend(
            other
                .partition
                .cells()
                .iter()
                .map(|c| c.iter().map(|&v| v + offset).collect()),
        );
        Switchable {
            graph,
            bipartition: self.bipartition.concat(&other.bipartition),
            partition: SwitchingPartition::new(n, cells).expect("shifted cells stay disjoint"),
        }
    }
}

/// Both members of a cospectral pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    pub first: Labeled,
    pub second: Labeled,
}

/// Accumulates nodes with sides and edges.
struct Builder {
    sides: Vec<Side>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            sides: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn node(&mut self, side: Side) -> usize {
        self.sides.push(side);
        self.sides.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn path(&mut self, nodes: &[usize]) {
        for w in nodes.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    fn finish(self) -> Labeled {
        let graph =
            Graph::new(self.sides.len(), self.edges).expect("construction edges are simple");
        let bipartition =
            Bipartition::new(&graph, self.sides).expect("construction sides are proper");
        Labeled { graph, bipartition }
    }
}

/// `P_n` colored so that node 0 (and every even node) is on W; odd-order
/// paths then have both endpoints on W.
pub fn labeled_path(n: usize) -> Result<Labeled, ConstructionError> {
    let graph = crate::graph::path_graph(n)?;
    let sides = (0..n)
        .map(|v| if v % 2 == 0 { Side::W } else { Side::U })
        .collect();
    Ok(Labeled {
        bipartition: Bipartition::new(&graph, sides)?,
        graph,
    })
}

/// Even cycle `C_n` with node 0 on U.
pub fn labeled_cycle(n: usize) -> Result<Labeled, ConstructionError> {
    if n % 2 == 1 {
        return Err(bad("cycle", format!("odd cycle C_{n} is not bipartite")));
    }
    let graph = crate::graph::cycle_graph(n)?;
    let bipartition = graph.bipartition()?;
    Ok(Labeled { graph, bipartition })
}

fn union_all(parts: impl IntoIterator<Item = Labeled>) -> Labeled {
    parts
        .into_iter()
        .reduce(|a, b| a.union(&b))
        .unwrap_or(Labeled {
            graph: Graph::empty(0),
            bipartition: Bipartition::from_sides(Vec::new()),
        })
}

// ---------------------------------------------------------------------------
// The 54-node 3-regular pair.
// ---------------------------------------------------------------------------

/// Index of `d_i`, `1 <= i <= 6`, in the 54-node graph. The full labeling:
///
/// | nodes        | indices |
/// |--------------|---------|
/// | `d_1..d_6`   | 0..6    |
/// | `a_1..a_6`   | 6..12   |
/// | `b_1..b_6`   | 12..18  |
/// | `c_1..c_6`   | 18..24  |
/// | `v_1..v_6`   | 24..30  |
/// | `u_1..u_6`   | 30..36  |
/// | `v', v'', u', u''` | 36, 37, 38, 39 |
/// | Heawood copy | 40..54 (points 40..47, lines 47..54) |
///
/// The 18-cycle runs `a_1 .. a_6, b_1 .. b_6, c_1 .. c_6` and back to `a_1`.
/// The Heawood edge removed is point 0 (`z`, node 40) to line 0 (`z'`,
/// node 47); the Heawood graph is edge-transitive so the choice does not
/// matter up to isomorphism.
pub mod sec3 {
    pub fn d(i: usize) -> usize {
        i - 1
    }
    pub fn a(i: usize) -> usize {
        5 + i
    }
    pub fn b(i: usize) -> usize {
        11 + i
    }
    pub fn c(i: usize) -> usize {
        17 + i
    }
    pub fn v(i: usize) -> usize {
        23 + i
    }
    pub fn u(i: usize) -> usize {
        29 + i
    }
    pub const V1: usize = 36;
    pub const V2: usize = 37;
    pub const U1: usize = 38;
    pub const U2: usize = 39;
    pub const HEAWOOD_OFFSET: usize = 40;
    pub const Z: usize = 40;
    pub const Z_PRIME: usize = 47;
    pub const NODES: usize = 54;
}

fn sec3_graph(switched: bool) -> Graph {
    use sec3::*;
    let mut edges = Vec::new();
    for i in 1..=6 {
        edges.push((d(i), d(i % 6 + 1)));
    }
    let ring: Vec<usize> = (1..=6)
        .map(a)
        .chain((1..=6).map(b))
        .chain((1..=6).map(c))
        .collect();
    for k in 0..18 {
        edges.push((ring[k], ring[(k + 1) % 18]));
    }
    for i in 1..=6 {
        if switched {
            edges.extend([(v(i), b(i)), (v(i), c(i)), (u(i), a(i)), (u(i), d(i))]);
        } else {
            edges.extend([(v(i), d(i)), (v(i), a(i)), (u(i), b(i)), (u(i), c(i))]);
        }
    }
    edges.extend([
        (V1, v(1)),
        (V1, v(3)),
        (V1, v(5)),
        (V2, v(2)),
        (V2, v(4)),
        (V2, v(6)),
        (U1, u(3)),
        (U1, u(5)),
        (U2, u(4)),
        (U2, u(6)),
        (U1, U2),
    ]);
    let h = heawood();
    let removed = (Z - HEAWOOD_OFFSET, Z_PRIME - HEAWOOD_OFFSET);
    edges.extend(
        h.edges()
            .iter()
            .filter(|&&e| e != removed)
            .map(|&(x, y)| (x + HEAWOOD_OFFSET, y + HEAWOOD_OFFSET)),
    );
    edges.extend([(u(1), Z), (u(2), Z_PRIME)]);
    Graph::new(NODES, edges).expect("54-node recipe is simple")
}

/// The 54-node 3-regular bipartite graph with partition
/// `X_i = {a_i, b_i, c_i, d_i}`. Node 0 (`d_1`) is on side U.
pub fn build_g_sec3() -> Switchable {
    let graph = sec3_graph(false);
    let bipartition = graph.bipartition().expect("recipe is bipartite");
    let cells = (1..=6)
        .map(|i| vec![sec3::a(i), sec3::b(i), sec3::c(i), sec3::d(i)])
        .collect();
    Switchable {
        partition: SwitchingPartition::new(sec3::NODES, cells).expect("cells are disjoint"),
        graph,
        bipartition,
    }
}

/// The switched 54-node graph built directly: `v_i` joins `b_i, c_i` and
/// `u_i` joins `a_i, d_i`. Each cell lies on one side, so every node keeps
/// its side.
pub fn build_g_sec3_prime() -> Labeled {
    let graph = sec3_graph(true);
    let base = build_g_sec3();
    let typing = classify_cells(&base.bipartition, &base.partition);
    let sides = induced_bipartition(&base.bipartition, &base.partition, &typing)
        .sides()
        .to_vec();
    Labeled {
        bipartition: Bipartition::new(&graph, sides).expect("switched sides are proper"),
        graph,
    }
}

// ---------------------------------------------------------------------------
// The 21-node half-regular pair of girth 4.
// ---------------------------------------------------------------------------

/// Labeling: `v_1..v_4` are 0..4, `u_1..u_12` are 4..16, then `w = 16`,
/// `w' = 17`, `w'' = 18`, `x = 19`, `y = 20`.
pub mod cal_g {
    pub fn v(i: usize) -> usize {
        i - 1
    }
    pub fn u(i: usize) -> usize {
        3 + i
    }
    pub const W: usize = 16;
    pub const W1: usize = 17;
    pub const W2: usize = 18;
    pub const X: usize = 19;
    pub const Y: usize = 20;
    pub const NODES: usize = 21;
}

fn cal_g_graph(switched: bool) -> Labeled {
    use cal_g::*;
    let mut b = Builder::new();
    // Odd-subscript cycle nodes, x and y are on W.
    for i in 1..=4 {
        b.node(if i % 2 == 1 { Side::W } else { Side::U });
    }
    for i in 1..=12 {
        b.node(if i % 2 == 1 { Side::W } else { Side::U });
    }
    for _ in [W, W1, W2] {
        b.node(Side::U);
    }
    for _ in [X, Y] {
        b.node(Side::W);
    }
    for i in 1..=4 {
        b.edge(v(i), v(i % 4 + 1));
    }
    for i in 1..=12 {
        b.edge(u(i), u(i % 12 + 1));
    }
    let near = [v(1), v(3), u(1), u(3)];
    let far = [u(5), u(7), u(9), u(11)];
    let (for_w, for_w2) = if switched { (far, near) } else { (near, far) };
    for t in for_w {
        b.edge(W, t);
        b.edge(W1, t);
    }
    for t in for_w2 {
        b.edge(W2, t);
    }
    let evens = [v(2), v(4)].into_iter().chain((1..=6).map(|k| u(2 * k)));
    for t in evens {
        b.edge(X, t);
        b.edge(Y, t);
    }
    b.finish()
}

/// The 21-node graph with `X_1` the odd-subscript and `X_2` the
/// even-subscript cycle nodes; `Y = {w, w', w'', x, y}`.
pub fn build_cal_g() -> Switchable {
    use cal_g::*;
    let Labeled { graph, bipartition } = cal_g_graph(false);
    let odd: Vec<usize> = [v(1), v(3)]
        .into_iter()
        .chain((0..6).map(|k| u(2 * k + 1)))
        .collect();
    let even: Vec<usize> = [v(2), v(4)]
        .into_iter()
        .chain((1..=6).map(|k| u(2 * k)))
        .collect();
    Switchable {
        partition: SwitchingPartition::new(NODES, vec![odd, even]).expect("cells are disjoint"),
        graph,
        bipartition,
    }
}

/// Direct recipe: `w, w'` join `u_5, u_7, u_9, u_11`; `w''` joins
/// `v_1, v_3, u_1, u_3`.
pub fn build_cal_g_prime() -> Labeled {
    cal_g_graph(true)
}

// ---------------------------------------------------------------------------
// G_t, G_{t,k} and the pendant-augmented variants.
// ---------------------------------------------------------------------------

/// Labeling shared by `G_t`, `G_{t,k}` and their pendant variants, for
/// path length `t`:
///
/// * `a_i, b_i, c_i, d_i` (`1 <= i <= t+1`) at `(t+1)*r + i - 1` for
///   `r = 0, 1, 2, 3`;
/// * `v_1 = 4t+4`, `v_2 = 4t+5`, `u = 4t+6`;
/// * `f_1..f_{k+1}` from `4t+7`;
/// * pendants after that: `a_i', b_i', c_i', d_i'` for even `i` ascending,
///   then `f_i'` for even `i`, then `v_1'`.
///
/// Side U holds the even-subscript path nodes, `v_1`, `v_2`, and `u` when
/// `t` is even.
#[derive(Debug, Clone, Copy)]
pub struct PathFamilyLayout {
    pub t: usize,
    pub k: Option<usize>,
    pub pendants: bool,
}

impl PathFamilyLayout {
    fn row(&self, r: usize, i: usize) -> usize {
        (self.t + 1) * r + i - 1
    }
    pub fn a(&self, i: usize) -> usize {
        self.row(0, i)
    }
    pub fn b(&self, i: usize) -> usize {
        self.row(1, i)
    }
    pub fn c(&self, i: usize) -> usize {
        self.row(2, i)
    }
    pub fn d(&self, i: usize) -> usize {
        self.row(3, i)
    }
    pub fn v1(&self) -> usize {
        4 * self.t + 4
    }
    pub fn v2(&self) -> usize {
        4 * self.t + 5
    }
    pub fn u(&self) -> usize {
        4 * self.t + 6
    }
    pub fn f(&self, i: usize) -> usize {
        4 * self.t + 6 + i
    }
    fn f_len(&self) -> usize {
        self.k.map_or(0, |k| k + 1)
    }
    fn pendant_start(&self) -> usize {
        4 * self.t + 7 + self.f_len()
    }
    /// Pendant on `a_i` (`r = 0`) .. `d_i` (`r = 3`), `i` even.
    pub fn path_pendant(&self, r: usize, i: usize) -> usize {
        self.pendant_start() + 4 * (i / 2 - 1) + r
    }
    pub fn f_pendant(&self, i: usize) -> usize {
        self.pendant_start() + 4 * (self.t / 2) + (i / 2 - 1)
    }
    pub fn v1_pendant(&self) -> usize {
        self.pendant_start() + 4 * (self.t / 2) + self.f_len() / 2
    }
    pub fn node_count(&self) -> usize {
        let base = 4 * self.t + 7 + self.f_len();
        if self.pendants {
            base + 4 * (self.t / 2) + self.f_len() / 2 + 1
        } else {
            base
        }
    }
}

fn path_family(layout: PathFamilyLayout, switched: bool) -> Switchable {
    let t = layout.t;
    let l = layout;
    let mut b = Builder::new();
    let parity_side = |i: usize| {
        if i.is_multiple_of(2) {
            Side::U
        } else {
            Side::W
        }
    };
    for _ in 0..4 {
        for i in 1..=t + 1 {
            b.node(parity_side(i));
        }
    }
    b.node(Side::U);
    b.node(Side::U);
    b.node(if t.is_multiple_of(2) {
        Side::U
    } else {
        Side::W
    });
    let f_len = l.f_len();
    for i in 1..=f_len {
        // f_{k+1} sits next to v_2, which is on U.
        b.node(if (f_len - i).is_multiple_of(2) {
            Side::W
        } else {
            Side::U
        });
    }
    for r in 0..4 {
        let rows: [fn(&PathFamilyLayout, usize) -> usize; 4] = [
            PathFamilyLayout::a,
            PathFamilyLayout::b,
            PathFamilyLayout::c,
            PathFamilyLayout::d,
        ];
        let nodes: Vec<usize> = (1..=t + 1).map(|i| rows[r](&l, i)).collect();
        b.path(&nodes);
    }
    if switched {
        b.edge(l.v1(), l.c(1));
        b.edge(l.v1(), l.d(1));
        b.edge(l.v2(), l.b(1));
        b.edge(l.v2(), l.c(1));
        b.edge(l.u(), l.a(t + 1));
        b.edge(l.u(), l.c(t + 1));
    } else {
        b.edge(l.v1(), l.a(1));
        b.edge(l.v1(), l.b(1));
        b.edge(l.v2(), l.a(1));
        b.edge(l.v2(), l.d(1));
        b.edge(l.u(), l.d(t + 1));
        b.edge(l.u(), l.b(t + 1));
    }
    if f_len > 0 {
        let f: Vec<usize> = (1..=f_len).map(|i| l.f(i)).collect();
        b.path(&f);
        b.edge(l.u(), l.f(1));
        b.edge(l.v2(), l.f(f_len));
    }
    let mut cells: Vec<Vec<usize>> = (1..=t + 1)
        .map(|i| vec![l.a(i), l.b(i), l.c(i), l.d(i)])
        .collect();
    if l.pendants {
        let hosts: Vec<(usize, usize)> = (1..=t / 2)
            .flat_map(|m| {
                let i = 2 * m;
                [l.a(i), l.b(i), l.c(i), l.d(i)]
                    .into_iter()
                    .enumerate()
                    .map(move |(r, host)| (host, l.path_pendant(r, i)))
            })
            .chain((1..=f_len / 2).map(|m| (l.f(2 * m), l.f_pendant(2 * m))))
            .chain([(l.v1(), l.v1_pendant())])
            .collect();
        for (host, pendant) in hosts {
            let side = b.sides[host].other();
            let id = b.node(side);
            debug_assert_eq!(id, pendant);
            b.edge(host, pendant);
        }
        for m in 1..=t / 2 {
            cells.push((0..4).map(|r| l.path_pendant(r, 2 * m)).collect());
        }
    }
    debug_assert_eq!(b.sides.len(), l.node_count());
    let Labeled { graph, bipartition } = b.finish();
    Switchable {
        partition: SwitchingPartition::new(graph.node_count(), cells).expect("cells are disjoint"),
        graph,
        bipartition,
    }
}

fn check_t(t: usize) -> Result<(), ConstructionError> {
    if t < 1 {
        return Err(bad("Gt", format!("need t >= 1, got t = {t}")));
    }
    Ok(())
}

fn check_tk(t: usize, k: usize) -> Result<(), ConstructionError> {
    if t <= k || (t + k) % 2 == 1 {
        return Err(bad(
            "Gtk",
            format!("need t > k >= 0 with t + k even, got t = {t}, k = {k}"),
        ));
    }
    Ok(())
}

fn check_cal_tk(t: usize, k: usize) -> Result<(), ConstructionError> {
    if t % 2 == 1 || k % 2 == 1 || t < k || t == 0 {
        return Err(bad(
            "calGtk",
            format!("need even t >= k >= 0 with t > 0, got t = {t}, k = {k}"),
        ));
    }
    Ok(())
}

/// `G_t`: four paths with `t + 1` nodes, plus `v_1, v_2, u`; partition
/// cells `X_i = {a_i, b_i, c_i, d_i}`. See [`PathFamilyLayout`].
pub fn build_gt(t: usize) -> Result<Switchable, ConstructionError> {
    check_t(t)?;
    Ok(path_family(
        PathFamilyLayout {
            t,
            k: None,
            pendants: false,
        },
        false,
    ))
}

/// `G_t'` from its direct recipe: `v_1 ~ c_1, d_1`, `v_2 ~ b_1, c_1`,
/// `u ~ a_{t+1}, c_{t+1}`.
pub fn build_gt_prime(t: usize) -> Result<Labeled, ConstructionError> {
    check_t(t)?;
    let s = path_family(
        PathFamilyLayout {
            t,
            k: None,
            pendants: false,
        },
        true,
    );
    Ok(s.labeled())
}

/// `G_{t,k}`: `G_t` plus the path `f_1..f_{k+1}` joined to `u` and `v_2`.
/// The `f` nodes belong to `Y`.
pub fn build_gtk(t: usize, k: usize) -> Result<Switchable, ConstructionError> {
    check_tk(t, k)?;
    Ok(path_family(
        PathFamilyLayout {
            t,
            k: Some(k),
            pendants: false,
        },
        false,
    ))
}

pub fn build_gtk_prime(t: usize, k: usize) -> Result<Labeled, ConstructionError> {
    check_tk(t, k)?;
    Ok(path_family(
        PathFamilyLayout {
            t,
            k: Some(k),
            pendants: false,
        },
        true,
    )
    .labeled())
}

/// `G_{t,k}` with a pendant on each even-subscript `a, b, c, d, f` node and
/// on `v_1`. Side U is then 3-regular. Extra cells hold the pendants of
/// `a_j, b_j, c_j, d_j` for even `j`, giving `3t/2 + 1` cells.
pub fn build_cal_gtk(t: usize, k: usize) -> Result<Switchable, ConstructionError> {
    check_cal_tk(t, k)?;
    Ok(path_family(
        PathFamilyLayout {
            t,
            k: Some(k),
            pendants: true,
        },
        false,
    ))
}

pub fn build_cal_gtk_prime(t: usize, k: usize) -> Result<Labeled, ConstructionError> {
    check_cal_tk(t, k)?;
    Ok(path_family(
        PathFamilyLayout {
            t,
            k: Some(k),
            pendants: true,
        },
        true,
    )
    .labeled())
}

fn union_switchable(parts: Vec<Switchable>) -> Switchable {
    parts
        .into_iter()
        .reduce(|a, b| a.union(&b))
        .expect("at least one part")
}

/// `D_i`: `G_{2,0} + G_{3,1} + ... + G_{i+2,i}`, components in that order.
/// The partitions of the components are carried along.
pub fn build_di(i: usize) -> Switchable {
    union_switchable(
        (0..=i)
            .map(|j| build_gtk(j + 2, j).expect("j + 2 > j, same parity"))
            .collect(),
    )
}

pub fn build_di_prime(i: usize) -> Labeled {
    union_all((0..=i).map(|j| build_gtk_prime(j + 2, j).expect("valid parameters")))
}

fn check_fjk(j: usize, k: usize) -> Result<(), ConstructionError> {
    if k < 1 || j < k {
        return Err(bad(
            "Fjk",
            format!("need j >= k >= 1, got j = {j}, k = {k}"),
        ));
    }
    Ok(())
}

/// `F_{j,k}`: the pendant graphs with parameters `(2m, 2m - 2)` for
/// `m = k..=j`, in that order. Both members already share girth `4k + 2`,
/// so no extra cycle is added.
pub fn build_fjk(j: usize, k: usize) -> Result<Switchable, ConstructionError> {
    check_fjk(j, k)?;
    Ok(union_switchable(
        (k..=j)
            .map(|m| build_cal_gtk(2 * m, 2 * m - 2).expect("valid parameters"))
            .collect(),
    ))
}

pub fn build_fjk_prime(j: usize, k: usize) -> Result<Labeled, ConstructionError> {
    check_fjk(j, k)?;
    Ok(union_all((k..=j).map(|m| {
        build_cal_gtk_prime(2 * m, 2 * m - 2).expect("valid parameters")
    })))
}

// ---------------------------------------------------------------------------
// Unions of cycles and paths.
// ---------------------------------------------------------------------------

/// `2C_6 + 2P_6` against `C_6 + C_14 + 2P_2`.
pub fn build_pair_6cycle() -> Pair {
    let c = |n| labeled_cycle(n).expect("even cycle");
    let p = |n| labeled_path(n).expect("n >= 1");
    Pair {
        first: union_all([c(6), c(6), p(6), p(6)]),
        second: union_all([c(6), c(14), p(2), p(2)]),
    }
}

/// For odd `t`: two `(6+2t)`-cycles and two paths of length `5 + t`,
/// against a `(6+2t)`-cycle, a `(14+2t)`-cycle and two paths of length
/// `t + 1`. All path endpoints sit on W, so U is 2-regular.
pub fn build_halfreg_gcycle_pair(t: usize) -> Result<Pair, ConstructionError> {
    if t < 1 || t.is_multiple_of(2) {
        return Err(bad(
            "halfreg",
            format!("need odd t >= 1, got t = {t}; even t breaks half-regularity"),
        ));
    }
    let c = |n| labeled_cycle(n).expect("even cycle");
    let p = |n| labeled_path(n).expect("n >= 1");
    Ok(Pair {
        first: union_all([c(6 + 2 * t), c(6 + 2 * t), p(6 + t), p(6 + t)]),
        second: union_all([c(6 + 2 * t), c(14 + 2 * t), p(t + 2), p(t + 2)]),
    })
}

/// `C_{4(k+1)} + 2P_{k'}` against `C_{2(k'+1)} + 2P_{2k+1}`; with
/// `extra_cycle` a further `C_{4(k+1)}` is appended to both so the girths
/// agree.
pub fn build_g4k_pair(
    k: usize,
    k_prime: usize,
    extra_cycle: bool,
) -> Result<Pair, ConstructionError> {
    if k < 1 || k_prime.is_multiple_of(2) || k_prime <= 2 * k + 1 {
        return Err(bad(
            "g4k",
            format!("need k >= 1 and odd k' > 2k + 1, got k = {k}, k' = {k_prime}"),
        ));
    }
    let c = |n| labeled_cycle(n).expect("even cycle");
    let p = |n| labeled_path(n).expect("n >= 1");
    let mut first = vec![c(4 * (k + 1)), p(k_prime), p(k_prime)];
    let mut second = vec![c(2 * (k_prime + 1)), p(2 * k + 1), p(2 * k + 1)];
    if extra_cycle {
        first.push(c(4 * (k + 1)));
        second.push(c(4 * (k + 1)));
    }
    Ok(Pair {
        first: union_all(first),
        second: union_all(second),
    })
}

// ---------------------------------------------------------------------------
// Family specs: `name` or `name:key=value,...`.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Heawood,
    GSec3,
    GSec3Prime,
    CalG,
    CalGPrime,
    Gt {
        t: usize,
    },
    GtPrime {
        t: usize,
    },
    Gtk {
        t: usize,
        k: usize,
    },
    GtkPrime {
        t: usize,
        k: usize,
    },
    Di {
        i: usize,
    },
    DiPrime {
        i: usize,
    },
    CalGtk {
        t: usize,
        k: usize,
    },
    CalGtkPrime {
        t: usize,
        k: usize,
    },
    Fjk {
        j: usize,
        k: usize,
    },
    FjkPrime {
        j: usize,
        k: usize,
    },
    /// `which` is 1 or 2.
    Pair6 {
        which: u8,
    },
    HalfReg {
        t: usize,
        which: u8,
    },
    G4k {
        k: usize,
        k_prime: usize,
        which: u8,
        extra: bool,
    },
}

/// Output of [`Family::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Built {
    pub graph: Graph,
    pub bipartition: Bipartition,
    pub partition: Option<SwitchingPartition>,
}

impl From<Switchable> for Built {
    fn from(s: Switchable) -> Self {
        Built {
            graph: s.graph,
            bipartition: s.bipartition,
            partition: Some(s.partition),
        }
    }
}

impl From<Labeled> for Built {
    fn from(l: Labeled) -> Self {
        Built {
            graph: l.graph,
            bipartition: l.bipartition,
            partition: None,
        }
    }
}

fn pick(pair: Pair, which: u8) -> Labeled {
    if which == 1 {
        pair.first
    } else {
        pair.second
    }
}

impl Family {
    pub fn build(&self) -> Result<Built, ConstructionError> {
        Ok(match *self {
            Family::Path { n } => labeled_path(n)?.into(),
            Family::Cycle { n } => {
                let graph = crate::graph::cycle_graph(n)?;
                let bipartition = graph.bipartition()?;
                Labeled { graph, bipartition }.into()
            }
            Family::CompleteBipartite { a, b } => {
                let graph = crate::graph::complete_bipartite(a, b)?;
                let bipartition = graph.bipartition()?;
                Labeled { graph, bipartition }.into()
            }
            Family::Heawood => Labeled {
                graph: heawood(),
                bipartition: heawood_bipartition(),
            }
            .into(),
            Family::GSec3 => build_g_sec3().into(),
            Family::GSec3Prime => build_g_sec3_prime().into(),
            Family::CalG => build_cal_g().into(),
            Family::CalGPrime => build_cal_g_prime().into(),
            Family::Gt { t } => build_gt(t)?.into(),
            Family::GtPrime { t } => build_gt_prime(t)?.into(),
            Family::Gtk { t, k } => build_gtk(t, k)?.into(),
            Family::GtkPrime { t, k } => build_gtk_prime(t, k)?.into(),
            Family::Di { i } => build_di(i).into(),
            Family::DiPrime { i } => build_di_prime(i).into(),
            Family::CalGtk { t, k } => build_cal_gtk(t, k)?.into(),
            Family::CalGtkPrime { t, k } => build_cal_gtk_prime(t, k)?.into(),
            Family::Fjk { j, k } => build_fjk(j, k)?.into(),
            Family::FjkPrime { j, k } => build_fjk_prime(j, k)?.into(),
            Family::Pair6 { which } => pick(build_pair_6cycle(), which).into(),
            Family::HalfReg { t, which } => pick(build_halfreg_gcycle_pair(t)?, which).into(),
            Family::G4k {
                k,
                k_prime,
                which,
                extra,
            } => pick(build_g4k_pair(k, k_prime, extra)?, which).into(),
        })
    }

    /// The family produced by switching this one, if it has a partition.
    pub fn switched(&self) -> Option<Family> {
        Some(match *self {
            Family::GSec3 => Family::GSec3Prime,
            Family::CalG => Family::CalGPrime,
            Family::Gt { t } => Family::GtPrime { t },
            Family::Gtk { t, k } => Family::GtkPrime { t, k },
            Family::Di { i } => Family::DiPrime { i },
            Family::CalGtk { t, k } => Family::CalGtkPrime { t, k },
            Family::Fjk { j, k } => Family::FjkPrime { j, k },
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "path:n={n}"),
            Family::Cycle { n } => write!(f, "cycle:n={n}"),
            Family::CompleteBipartite { a, b } => write!(f, "Kab:a={a},b={b}"),
            Family::Heawood => f.write_str("heawood"),
            Family::GSec3 => f.write_str("Gsec3"),
            Family::GSec3Prime => f.write_str("Gsec3prime"),
            Family::CalG => f.write_str("calG"),
            Family::CalGPrime => f.write_str("calGprime"),
            Family::Gt { t } => write!(f, "Gt:t={t}"),
            Family::GtPrime { t } => write!(f, "Gtprime:t={t}"),
            Family::Gtk { t, k } => write!(f, "Gtk:t={t},k={k}"),
            Family::GtkPrime { t, k } => write!(f, "Gtkprime:t={t},k={k}"),
            Family::Di { i } => write!(f, "Di:i={i}"),
            Family::DiPrime { i } => write!(f, "Diprime:i={i}"),
            Family::CalGtk { t, k } => write!(f, "calGtk:t={t},k={k}"),
            Family::CalGtkPrime { t, k } => write!(f, "calGtkprime:t={t},k={k}"),
            Family::Fjk { j, k } => write!(f, "Fjk:j={j},k={k}"),
            Family::FjkPrime { j, k } => write!(f, "Fjkprime:j={j},k={k}"),
            Family::Pair6 { which } => write!(f, "pair6:which={which}"),
            Family::HalfReg { t, which } => write!(f, "halfreg:t={t},which={which}"),
            Family::G4k {
                k,
                k_prime,
                which,
                extra,
            } => write!(
                f,
                "g4k:k={k},kp={k_prime},which={which},extra={}",
                u8::from(extra)
            ),
        }
    }
}

impl FromStr for Family {
    type Err = ConstructionError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let syntax = |reason: String| ConstructionError::Syntax {
            spec: spec.to_string(),
            reason,
        };
        let (name, params) = match spec.split_once(':') {
            Some((name, rest)) => (name, rest),
            None => (spec, ""),
        };
        let mut values: Vec<(&str, usize)> = Vec::new();
        for item in params.split(',').filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected key=value, got {item:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| syntax(format!("{key} must be a non-negative integer")))?;
            if values.iter().any(|(k, _)| *k == key) {
                return Err(syntax(format!("{key} given twice")));
            }
            values.push((key, value));
        }
        let mut take = |key: &str| -> Result<usize, ConstructionError> {
            let pos = values
                .iter()
                .position(|(k, _)| *k == key)
                .ok_or_else(|| syntax(format!("missing parameter {key}")))?;
            Ok(values.remove(pos).1)
        };
        let which = |v: usize| -> Result<u8, ConstructionError> {
            match v {
                1 | 2 => Ok(v as u8),
                _ => Err(ConstructionError::Syntax {
                    spec: spec.to_string(),
                    reason: "which must be 1 or 2".into(),
                }),
            }
        };
        let family = match name {
            "path" => Family::Path { n: take("n")? },
            "cycle" => Family::Cycle { n: take("n")? },
            "Kab" => Family::CompleteBipartite {
                a: take("a")?,
                b: take("b")?,
            },
            "heawood" => Family::Heawood,
            "Gsec3" => Family::GSec3,
            "Gsec3prime" => Family::GSec3Prime,
            "calG" => Family::CalG,
            "calGprime" => Family::CalGPrime,
            "Gt" => Family::Gt { t: take("t")? },
            "Gtprime" => Family::GtPrime { t: take("t")? },
            "Gtk" => Family::Gtk {
                t: take("t")?,
                k: take("k")?,
            },
            "Gtkprime" => Family::GtkPrime {
                t: take("t")?,
                k: take("k")?,
            },
            "Di" => Family::Di { i: take("i")? },
            "Diprime" => Family::DiPrime { i: take("i")? },
            "calGtk" => Family::CalGtk {
                t: take("t")?,
                k: take("k")?,
            },
            "calGtkprime" => Family::CalGtkPrime {
                t: take("t")?,
                k: take("k")?,
            },
            "Fjk" => Family::Fjk {
                j: take("j")?,
                k: take("k")?,
            },
            "Fjkprime" => Family::FjkPrime {
                j: take("j")?,
                k: take("k")?,
            },
            "pair6" => Family::Pair6 {
                which: which(take("which")?)?,
            },
            "halfreg" => Family::HalfReg {
                t: take("t")?,
                which: which(take("which")?)?,
            },
            "g4k" => {
                let k = take("k")?;
                let k_prime = take("kp")?;
                let w = which(take("which")?)?;
                let extra = match values.iter().position(|(k, _)| *k == "extra") {
                    Some(pos) => match values.remove(pos).1 {
                        0 => false,
                        1 => true,
                        _ => return Err(syntax("extra must be 0 or 1".into())),
                    },
                    None => false,
                };
                Family::G4k {
                    k,
                    k_prime,
                    which: w,
                    extra,
                }
            }
            other => return Err(ConstructionError::UnknownFamily(other.to_string())),
        };
        if let Some((key, _)) = values.first() {
            return Err(syntax(format!("unexpected parameter {key}")));
        }
        Ok(family)
    }
}
