//! Exhaustive sweep over every switching partition of small bi-regular
//! bipartite graphs: valid partitions satisfy the structural properties, and
//! switching keeps the per-side degree sequences.

mod common;

use cospec_core::graph::{complete_bipartite, cycle_graph};
use cospec_core::switching::CellType;
use cospec_core::{
    check_structural_properties, classify_cells, switch_and_verify, validate_partition, Graph,
    RegularityClass, SwitchingPartition,
};

/// Calls `visit` with every partition of `0..n` into a rest set (label 0)
/// and unordered non-empty cells (labels in first-use order).
fn for_each_partition(n: usize, visit: &mut impl FnMut(&[Vec<usize>])) {
    fn go(
        v: usize,
        labels: &mut Vec<usize>,
        used: usize,
        n: usize,
        visit: &mut impl FnMut(&[Vec<usize>]),
    ) {
        if v == n {
            if used == 0 {
                return;
            }
            let mut cells = vec![Vec::new(); used];
            for (node, &l) in labels.iter().enumerate() {
                if l > 0 {
                    cells[l - 1].push(node);
                }
            }
            visit(&cells);
            return;
        }
        for l in 0..=used + 1 {
            labels.push(l);
            go(v + 1, labels, used.max(l), n, visit);
            labels.pop();
        }
    }
    go(0, &mut Vec::new(), 0, n, visit);
}

struct Sweep {
    valid: usize,
    switching: usize,
    mixed: usize,
    unbalanced: usize,
}

fn sweep(name: &str, g: &Graph) -> Sweep {
    let b = g.bipartition().unwrap();
    let class = cospec_core::DegreeSequences::of(g, &b).classify();
    let RegularityClass::BiRegular { d_u, d_w } = class else {
        panic!("{name} is not bi-regular: {class}");
    };
    let mut stats = Sweep {
        valid: 0,
        switching: 0,
        mixed: 0,
        unbalanced: 0,
    };
    for_each_partition(g.node_count(), &mut |cells| {
        let p = SwitchingPartition::new(g.node_count(), cells.to_vec()).unwrap();
        if !validate_partition(g, &p).valid {
            return;
        }
        stats.valid += 1;
        let report = check_structural_properties(g, &b, &p).unwrap();
        assert!(report.all_hold(), "{name} {cells:?}: {:?}", report.checks);
        let (h, sides, preservation) = switch_and_verify(g, &b, &p).unwrap();
        assert!(preservation.after_is_bipartition, "{name} {cells:?}");
        assert!(preservation.equal, "{name} {cells:?}: {preservation:?}");
        assert!(sides.is_valid_for(&h));
        if h != *g {
            stats.switching += 1;
        }
        let typing = classify_cells(&b, &p);
        if typing.types.iter().any(|t| t.is_mixed()) {
            stats.mixed += 1;
        }
        if typing
            .types
            .iter()
            .any(|t| matches!(t, CellType::Type32 { .. }))
        {
            stats.unbalanced += 1;
            assert_eq!(
                d_u, d_w,
                "{name} {cells:?}: unbalanced mixed cell with d_u != d_w"
            );
        }
    });
    stats
}

fn k44_minus_matching() -> Graph {
    let edges = (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, 4 + j)));
    Graph::new(8, edges).unwrap()
}

#[test]
fn regular_graphs() {
    let two_c4 = cycle_graph(4)
        .unwrap()
        .disjoint_union(&cycle_graph(4).unwrap());
    for (name, g) in [
        ("C4", cycle_graph(4).unwrap()),
        ("C6", cycle_graph(6).unwrap()),
        ("C8", cycle_graph(8).unwrap()),
        ("2C4", two_c4),
        ("K3,3", complete_bipartite(3, 3).unwrap()),
        ("cube", common::cube()),
        ("K4,4-M", k44_minus_matching()),
    ] {
        let s = sweep(name, &g);
        assert!(
            s.valid > 0 && s.switching > 0 && s.mixed > 0,
            "{name}: sweep too thin"
        );
    }
}

#[test]
fn unequal_side_degrees() {
    for (name, g) in [
        ("K1,3", complete_bipartite(1, 3).unwrap()),
        ("K2,3", complete_bipartite(2, 3).unwrap()),
        ("K2,4", complete_bipartite(2, 4).unwrap()),
        ("K2,5", complete_bipartite(2, 5).unwrap()),
        ("K3,4", complete_bipartite(3, 4).unwrap()),
    ] {
        let s = sweep(name, &g);
        assert_eq!(s.unbalanced, 0);
        assert!(s.valid > 0, "{name}");
    }
}
