//! Text formats: edge lists, switching partitions, bipartition sidecars and
//! LDPC alist files.
//!
//! Edge list (bit-exact):
//!
//! ```text
//! n <node_count> <edge_count>
//! <u> <v>        one per edge, 0-based, u < v, lexicographically sorted
//! ```
//!
//! Every line, including the last, ends in a single LF.

use thiserror::Error;

use crate::graph::{Bipartition, Graph, GraphError, Side};
use crate::switching::{SwitchingError, SwitchingPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partition(#[from] SwitchingError),
}

fn syntax(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        reason: reason.into(),
    }
}

/// Splits into lines, requiring LF endings and rejecting CR.
fn strict_lines(text: &str) -> Result<Vec<&str>, FormatError> {
    if text.is_empty() {
        return Err(syntax(1, "empty input"));
    }
    if !text.ends_with('\n') {
        return Err(syntax(text.lines().count(), "missing final newline"));
    }
    let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();
    if let Some(i) = lines.iter().position(|l| l.contains('\r')) {
        return Err(syntax(i + 1, "carriage return"));
    }
    Ok(lines)
}

fn parse_usize(line: usize, token: &str) -> Result<usize, FormatError> {
    // `usize::from_str` accepts a leading '+'; the formats do not.
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(
            line,
            format!("expected a non-negative integer, got {token:?}"),
        ));
    }
    token
        .parse()
        .map_err(|_| syntax(line, format!("integer out of range: {token}")))
}

/// Parses a line of exactly `count` single-space-separated integers.
fn exact_fields(line: usize, text: &str, count: usize) -> Result<Vec<usize>, FormatError> {
    let fields: Vec<&str> = text.split(' ').collect();
    if fields.len() != count {
        return Err(syntax(
            line,
            format!("expected {count} space-separated fields, got {:?}", text),
        ));
    }
    fields.iter().map(|f| parse_usize(line, f)).collect()
}

fn header<'a>(line: usize, text: &'a str, keyword: &str) -> Result<&'a str, FormatError> {
    text.strip_prefix(keyword)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| syntax(line, format!("expected header starting with {keyword:?}")))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {} {}\n", g.node_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let lines = strict_lines(text)?;
    let head = exact_fields(1, header(1, lines[0], "n")?, 2)?;
    let (n, m) = (head[0], head[1]);
    if lines.len() - 1 != m {
        return Err(syntax(
            lines.len(),
            format!("header declares {m} edges, found {}", lines.len() - 1),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for (i, text) in lines[1..].iter().enumerate() {
        let line = i + 2;
        let f = exact_fields(line, text, 2)?;
        let (u, v) = (f[0], f[1]);
        if u >= v {
            return Err(syntax(line, format!("edge {u} {v} must have u < v")));
        }
        if v >= n {
            return Err(syntax(line, format!("node {v} out of range for {n} nodes")));
        }
        if let Some(&prev) = edges.last() {
            if (u, v) == prev {
                return Err(syntax(line, format!("duplicate edge {u} {v}")));
            }
            if (u, v) < prev {
                return Err(syntax(line, "edges not sorted lexicographically"));
            }
        }
        edges.push((u, v));
    }
    Ok(Graph::new(n, edges)?)
}

/// `cells <l>`, then one line of space-separated node indices per cell.
pub fn write_partition(p: &SwitchingPartition) -> String {
    let mut out = format!("cells {}\n", p.cell_count());
    for cell in p.cells() {
        let items: Vec<String> = cell.iter().map(|v| v.to_string()).collect();
        out.push_str(&items.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_partition(text: &str, node_count: usize) -> Result<SwitchingPartition, FormatError> {
    let lines = strict_lines(text)?;
    let l = exact_fields(1, header(1, lines[0], "cells")?, 1)?[0];
    if lines.len() - 1 != l {
        return Err(syntax(
            lines.len(),
            format!("header declares {l} cells, found {}", lines.len() - 1),
        ));
    }
    let mut cells = Vec::with_capacity(l);
    for (i, text) in lines[1..].iter().enumerate() {
        let line = i + 2;
        let count = text.split(' ').count();
        cells.push(exact_fields(line, text, count)?);
    }
    Ok(SwitchingPartition::new(node_count, cells)?)
}

/// `sides <n>`, then a single string of `U`/`W` characters.
pub fn write_bipartition(b: &Bipartition) -> String {
    let sides: String = b.sides().iter().map(|s| s.as_char()).collect();
    format!("sides {}\n{sides}\n", b.len())
}

pub fn read_bipartition(text: &str, g: &Graph) -> Result<Bipartition, FormatError> {
    let lines = strict_lines(text)?;
    let n = exact_fields(1, header(1, lines[0], "sides")?, 1)?[0];
    if lines.len() != 2 {
        return Err(syntax(lines.len(), "expected exactly one line of sides"));
    }
    let sides = lines[1]
        .chars()
        .map(|c| match c {
            'U' => Ok(Side::U),
            'W' => Ok(Side::W),
            other => Err(syntax(2, format!("unexpected side {other:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if sides.len() != n {
        return Err(syntax(
            2,
            format!("header declares {n} sides, found {}", sides.len()),
        ));
    }
    Ok(Bipartition::new(g, sides)?)
}

/// Reads an alist parity-check description. Variable nodes become
/// `0..n` on side U and check nodes `n..n+m` on side W. Column and row
/// lists must describe the same edges; zero entries are padding.
pub fn read_alist(text: &str) -> Result<(Graph, Bipartition), FormatError> {
    // Tolerant of blank lines and runs of whitespace, as alist files in the
    // wild are.
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, f)| !f.is_empty())
        .collect();
    let mut cursor = lines.iter();
    let mut next = |what: &str| {
        cursor.next().ok_or_else(|| {
            syntax(
                text.lines().count() + 1,
                format!("unexpected end of input: {what}"),
            )
        })
    };
    let ints = |line: usize, fields: &[&str]| -> Result<Vec<usize>, FormatError> {
        fields.iter().map(|f| parse_usize(line, f)).collect()
    };
    let (line, f) = next("dimensions")?;
    let dims = ints(*line, f)?;
    let [n, m] = dims[..] else {
        return Err(syntax(*line, "expected `n m`"));
    };
    let (line, f) = next("maximum degrees")?;
    let max = ints(*line, f)?;
    let [max_col, max_row] = max[..] else {
        return Err(syntax(*line, "expected maximum column and row degrees"));
    };
    let (line, f) = next("column degrees")?;
    let col_deg = ints(*line, f)?;
    if col_deg.len() != n {
        return Err(syntax(*line, format!("expected {n} column degrees")));
    }
    let (line, f) = next("row degrees")?;
    let row_deg = ints(*line, f)?;
    if row_deg.len() != m {
        return Err(syntax(*line, format!("expected {m} row degrees")));
    }
    if col_deg.iter().any(|&d| d > max_col) || row_deg.iter().any(|&d| d > max_row) {
        return Err(syntax(*line, "degree exceeds declared maximum"));
    }
    let mut read_lists = |count: usize, other: usize, degrees: &[usize], what: &str| {
        let mut lists = Vec::with_capacity(count);
        for (idx, &deg) in degrees.iter().enumerate() {
            let (line, f) = next(what)?;
            let mut list: Vec<usize> = Vec::new();
            for &x in ints(*line, f)?.iter().filter(|&&x| x != 0) {
                if x > other {
                    return Err(syntax(
                        *line,
                        format!("{what} {}: index {x} out of range 1..={other}", idx + 1),
                    ));
                }
                if list.contains(&(x - 1)) {
                    return Err(syntax(
                        *line,
                        format!("{what} {}: repeated index {x}", idx + 1),
                    ));
                }
                list.push(x - 1);
            }
            if list.len() != deg {
                return Err(syntax(
                    *line,
                    format!(
                        "{what} {} lists {} entries, degree says {deg}",
                        idx + 1,
                        list.len()
                    ),
                ));
            }
            lists.push(list);
        }
        Ok::<_, FormatError>(lists)
    };
    let cols = read_lists(n, m, &col_deg, "column")?;
    let rows = read_lists(m, n, &row_deg, "row")?;
    let mut from_cols: Vec<(usize, usize)> = cols
        .iter()
        .enumerate()
        .flat_map(|(v, list)| list.iter().map(move |&c| (v, c)))
        .collect();
    let mut from_rows: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(c, list)| list.iter().map(move |&v| (v, c)))
        .collect();
    from_cols.sort_unstable();
    from_rows.sort_unstable();
    if from_cols != from_rows {
        let (v, c) = from_cols
            .iter()
            .find(|e| from_rows.binary_search(e).is_err())
            .or_else(|| {
                from_rows
                    .iter()
                    .find(|e| from_cols.binary_search(e).is_err())
            })
            .copied()
            .expect("sets differ");
        return Err(syntax(
            0,
            format!(
                "column {} and row {} disagree about their incidence",
                v + 1,
                c + 1
            ),
        ));
    }
    let edges: Vec<(usize, usize)> = from_cols.into_iter().map(|(v, c)| (v, n + c)).collect();
    let graph = Graph::new(n + m, edges)?;
    let sides = (0..n + m)
        .map(|x| if x < n { Side::U } else { Side::W })
        .collect();
    let bipartition = Bipartition::new(&graph, sides)?;
    Ok((graph, bipartition))
}

/// Writes an alist for a biadjacency matrix given as rows (checks) of
/// columns (variables).
pub fn write_alist(biadjacency: &[Vec<u8>]) -> String {
    let m = biadjacency.len();
    let n = biadjacency.first().map_or(0, |r| r.len());
    let cols: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..m)
                .filter(|&c| biadjacency[c][v] != 0)
                .map(|c| c + 1)
                .collect()
        })
        .collect();
    let rows: Vec<Vec<usize>> = biadjacency
        .iter()
        .map(|r| (0..n).filter(|&v| r[v] != 0).map(|v| v + 1).collect())
        .collect();
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = rows.iter().map(Vec::len).max().unwrap_or(0);
    let join = |xs: &[usize]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let padded = |list: &[usize], width: usize| {
        let mut l = list.to_vec();
        l.resize(width, 0);
        join(&l)
    };
    let mut out = format!("{n} {m}\n{max_col} {max_row}\n");
    out.push_str(&join(&cols.iter().map(Vec::len).collect::<Vec<_>>()));
    out.push('\n');
    out.push_str(&join(&rows.iter().map(Vec::len).collect::<Vec<_>>()));
    out.push('\n');
    for c in &cols {
        out.push_str(&padded(c, max_col));
        out.push('\n');
    }
    for r in &rows {
        out.push_str(&padded(r, max_row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, heawood, DegreeSequences};

    #[test]
    fn edge_list_round_trip() {
        let g = heawood();
        let text = write_edge_list(&g);
        assert!(text.starts_with("n 14 21\n0 7\n"));
        assert_eq!(read_edge_list(&text).unwrap(), g);
        assert_eq!(write_edge_list(&Graph::empty(3)), "n 3 0\n");
        assert_eq!(read_edge_list("n 3 0\n").unwrap(), Graph::empty(3));
    }

    #[test]
    fn edge_list_rejections() {
        for bad in [
            "",
            "n 3 1\n0 1",
            "n 3 1\r\n0 1\r\n",
            "n 3 2\n0 1\n",
            "n 3 1\n1 0\n",
            "n 3 1\n0 3\n",
            "n 3 2\n1 2\n0 1\n",
            "n 3 2\n0 1\n0 1\n",
            "n 3 1\n0  1\n",
            "n 3 1\n0 +1\n",
            "m 3 0\n",
            "n 3\n",
            "n 3 1\n1 1\n",
        ] {
            assert!(read_edge_list(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn partition_round_trip() {
        let p = SwitchingPartition::new(6, vec![vec![0, 3], vec![1, 4]]).unwrap();
        let text = write_partition(&p);
        assert_eq!(text, "cells 2\n0 3\n1 4\n");
        assert_eq!(read_partition(&text, 6).unwrap(), p);
        assert!(read_partition("cells 0\n", 6).is_err());
        assert!(read_partition("cells 1\n0 9\n", 6).is_err());
        assert!(read_partition("cells 2\n0 1\n1 2\n", 6).is_err());
        assert!(read_partition("cells 2\n0 1\n", 6).is_err());
        assert!(read_partition("cells 1\n\n", 6).is_err());
    }

    #[test]
    fn bipartition_round_trip() {
        let g = cycle_graph(4).unwrap();
        let b = g.bipartition().unwrap();
        let text = write_bipartition(&b);
        assert_eq!(text, "sides 4\nUWUW\n");
        assert_eq!(read_bipartition(&text, &g).unwrap(), b);
        assert!(read_bipartition("sides 4\nUUWW\n", &g).is_err());
        assert!(read_bipartition("sides 4\nUWU\n", &g).is_err());
    }

    #[test]
    fn alist_complete_bipartite() {
        let text = write_alist(&vec![vec![1u8; 4]; 3]);
        let (g, b) = read_alist(&text).unwrap();
        let ds = DegreeSequences::of(&g, &b);
        assert_eq!(ds.u_side, vec![3, 3, 3, 3]);
        assert_eq!(ds.w_side, vec![4, 4, 4]);
        assert_eq!(g, complete_bipartite(4, 3).unwrap());
    }

    #[test]
    fn alist_four_cycle() {
        let (g, _) = read_alist("2 2\n2 2\n2 2\n2 2\n1 2\n1 2\n1 2\n1 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(g.girth(), crate::graph::Girth::Finite(4));
    }

    #[test]
    fn alist_zero_padding_and_cross_validation() {
        let padded = "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n";
        let (g, _) = read_alist(padded).unwrap();
        assert_eq!(g.edge_count(), 4);
        // column 2 lists row 2, row 2 does not list column 2
        let broken = "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n1 3\n";
        assert!(read_alist(broken).is_err());
        let out_of_range = "1 1\n1 1\n1\n1\n5\n1\n";
        assert!(read_alist(out_of_range).is_err());
        assert!(read_alist("1 1\n1 1\n1\n").is_err());
    }
}
