//! Shared corpus and brute-force oracles for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cospec_core::constructions::{
    build_cal_g, build_cal_gtk, build_di, build_fjk, build_g_sec3, build_gt, build_gtk, Switchable,
};
use cospec_core::graph::{complete_bipartite, cycle_graph, heawood, path_graph};
use cospec_core::{Graph, SwitchingPartition};

/// Simple cycles by length, counted as Hamiltonian cycles of induced
/// vertex subsets. For each start `s` the table `paths[mask][v]` counts
/// paths from `s` to `v` through exactly `mask`, restricted to nodes `>= s`;
/// a closing edge back to `s` finishes a cycle, and each cycle is met once
/// per direction.
pub fn subset_cycle_oracle(g: &Graph) -> BTreeMap<usize, u64> {
    let n = g.node_count();
    assert!(n <= 16, "oracle is exponential in the node count");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut twice = vec![0u64; n + 1];
    for s in 0..n {
        let width = n - s;
        let mut paths = vec![vec![0u64; width]; 1 << width];
        paths[1][0] = 1;
        for mask in 1usize..(1 << width) {
            if mask & 1 == 0 {
                continue;
            }
            for last in 0..width {
                let count = paths[mask][last];
                if count == 0 {
                    continue;
                }
                let v = s + last;
                let len = mask.count_ones() as usize;
                if len >= 3 && adj[v] & (1 << s) != 0 {
                    twice[len] += count;
                }
                for next in 1..width {
                    if mask & (1 << next) == 0 && adj[v] & (1 << (s + next)) != 0 {
                        paths[mask | (1 << next)][next] += count;
                    }
                }
            }
        }
    }
    (3..=n)
        .map(|len| {
            assert_eq!(twice[len] % 2, 0);
            (len, twice[len] / 2)
        })
        .collect()
}

/// Deterministic pseudo-random graph with edge probability `num / den`.
pub fn random_graph(n: usize, num: u64, den: u64, seed: u64) -> Graph {
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            if (state >> 33) % den < num {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).unwrap()
}

pub fn cube() -> Graph {
    let edges = (0..8usize)
        .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
        .filter(|&(u, v)| u < v);
    Graph::new(8, edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// Named small graphs (at most 12 nodes).
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=12 {
        out.push((format!("P{n}"), path_graph(n).unwrap()));
    }
    for n in 3..=12 {
        out.push((format!("C{n}"), cycle_graph(n).unwrap()));
    }
    for (a, b) in [
        (1, 4),
        (2, 3),
        (3, 3),
        (3, 4),
        (4, 4),
        (3, 5),
        (4, 6),
        (5, 6),
    ] {
        out.push((format!("K{a},{b}"), complete_bipartite(a, b).unwrap()));
    }
    for n in [4, 5, 6, 7] {
        out.push((format!("K{n}"), complete(n)));
    }
    out.push(("petersen".into(), petersen()));
    out.push(("cube".into(), cube()));
    out.push(("G1".into(), build_gt(1).unwrap().graph));
    out.push((
        "C4+C6".into(),
        cycle_graph(4)
            .unwrap()
            .disjoint_union(&cycle_graph(6).unwrap()),
    ));
    for seed in 0..24u64 {
        let n = 6 + (seed as usize % 7);
        let (num, den) = [(1, 3), (1, 2), (2, 3)][seed as usize % 3];
        out.push((format!("random{seed}"), random_graph(n, num, den, seed)));
    }
    out
}

/// Graphs of every size used by the suites, including the constructions.
pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut out = small_corpus();
    out.push(("heawood".into(), heawood()));
    for (name, s) in switchable_corpus() {
        let h = cospec_core::apply_switching(&s.graph, &s.partition).unwrap();
        out.push((name.clone(), s.graph));
        out.push((format!("{name}'"), h));
    }
    out
}

/// Graph and partition pairs, constructions first.
pub fn switchable_corpus() -> Vec<(String, Switchable)> {
    let mut out = vec![
        ("Gsec3".to_string(), build_g_sec3()),
        ("calG".to_string(), build_cal_g()),
    ];
    for t in 1..=6 {
        out.push((format!("Gt(t={t})"), build_gt(t).unwrap()));
    }
    for (t, k) in [(2, 0), (3, 1), (4, 2), (4, 0), (5, 3), (6, 4)] {
        out.push((format!("Gtk(t={t},k={k})"), build_gtk(t, k).unwrap()));
    }
    for i in 0..=4 {
        out.push((format!("Di(i={i})"), build_di(i)));
    }
    for (t, k) in [(2, 0), (4, 2), (2, 2), (4, 4), (6, 4)] {
        out.push((format!("calGtk(t={t},k={k})"), build_cal_gtk(t, k).unwrap()));
    }
    for (j, k) in [(1, 1), (2, 1), (3, 2)] {
        out.push((format!("Fjk(j={j},k={k})"), build_fjk(j, k).unwrap()));
    }
    let c6 = cycle_graph(6).unwrap();
    out.push((
        "C6{0,3}".to_string(),
        Switchable {
            bipartition: c6.bipartition().unwrap(),
            partition: SwitchingPartition::new(6, vec![vec![0, 3]]).unwrap(),
            graph: c6,
        },
    ));
    let star = complete_bipartite(1, 4).unwrap();
    out.push((
        "star{0,1}".to_string(),
        Switchable {
            bipartition: star.bipartition().unwrap(),
            partition: SwitchingPartition::new(5, vec![vec![0, 1]]).unwrap(),
            graph: star,
        },
    ));
    out
}
