//! Expected values of the published tables, and their recomputation.

use std::fmt;
use std::str::FromStr;

use crate::census::{count_cycles_with, CensusError, CensusOptions, CycleCensus};
use crate::constructions::{
    build_cal_g, build_cal_g_prime, build_di, build_di_prime, build_g_sec3, build_g_sec3_prime,
};
use crate::graph::Graph;
use crate::switching::validate_partition;

/// Cell-degree matrix of the 54-node graph: entry `(i, j)` is the number of
/// neighbors in `X_j` of any node in `X_i`.
pub const TABLE_I: [[usize; 6]; 6] = [
    [0, 1, 0, 0, 0, 1],
    [1, 0, 1, 0, 0, 0],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 1, 0],
];

/// Cycle counts of lengths 6, 8, .., 22 in the 54-node pair.
pub const TABLE_II_LENGTHS: [usize; 9] = [6, 8, 10, 12, 14, 16, 18, 20, 22];
pub const TABLE_II_G: [u64; 9] = [51, 54, 186, 212, 460, 659, 1609, 4038, 11132];
pub const TABLE_II_G_PRIME: [u64; 9] = [51, 54, 186, 213, 458, 669, 1576, 4090, 10977];

/// Cycle counts of lengths 4, 6, .., 18 in the 21-node pair.
pub const TABLE_III_LENGTHS: [usize; 8] = [4, 6, 8, 10, 12, 14, 16, 18];
pub const TABLE_III_CAL_G: [u64; 8] = [60, 248, 1300, 4056, 11992, 29780, 43040, 32640];
pub const TABLE_III_CAL_G_PRIME: [u64; 8] = [60, 250, 1294, 4026, 11706, 28440, 41656, 32096];

/// Cycle counts of lengths 6, 8, .., 16 in `D_3` and its switched copy.
pub const TABLE_V_LENGTHS: [usize; 6] = [6, 8, 10, 12, 14, 16];
pub const TABLE_V_D3: [u64; 6] = [1, 2, 3, 3, 2, 1];
pub const TABLE_V_D3_PRIME: [u64; 6] = [1, 1, 1, 1, 0, 0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    I,
    II,
    III,
    V,
}

impl TableId {
    pub const ALL: [TableId; 4] = [TableId::I, TableId::II, TableId::III, TableId::V];
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::I => "I",
            TableId::II => "II",
            TableId::III => "III",
            TableId::V => "V",
        })
    }
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(TableId::I),
            "II" => Ok(TableId::II),
            "III" => Ok(TableId::III),
            "V" => Ok(TableId::V),
            other => Err(format!("unknown table {other:?}; expected I, II, III or V")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub row: String,
    pub column: String,
    pub expected: u64,
    pub actual: u64,
}

impl CellCheck {
    pub fn matches(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub table: TableId,
    pub cells: Vec<CellCheck>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        !self.cells.is_empty() && self.cells.iter().all(CellCheck::matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CellCheck> {
        self.cells.iter().filter(|c| !c.matches())
    }
}

fn census_row(
    cells: &mut Vec<CellCheck>,
    name: &str,
    g: &Graph,
    lengths: &[usize],
    expected: &[u64],
    opts: &CensusOptions,
) -> Result<CycleCensus, CensusError> {
    let cap = *lengths.last().expect("non-empty row");
    let census = count_cycles_with(
        g,
        &CensusOptions {
            max_len: cap,
            ..*opts
        },
    )?;
    for (&len, &want) in lengths.iter().zip(expected) {
        cells.push(CellCheck {
            row: name.to_string(),
            column: format!("{len}-cycles"),
            expected: want,
            actual: census.count(len),
        });
    }
    Ok(census)
}

/// Rebuilds the graphs behind `table` and compares every cell. Only
/// `budget` and `threads` are taken from `opts`; the cap comes from the
/// table.
pub fn verify_table(table: TableId, opts: &CensusOptions) -> Result<TableReport, CensusError> {
    let mut cells = Vec::new();
    match table {
        TableId::I => {
            let s = build_g_sec3();
            let report = validate_partition(&s.graph, &s.partition);
            let matrix = report.cell_degree_matrix.unwrap_or_default();
            for (i, row) in TABLE_I.iter().enumerate() {
                for (j, &want) in row.iter().enumerate() {
                    let actual = matrix
                        .get(i)
                        .and_then(|r| r.get(j))
                        .copied()
                        .unwrap_or(usize::MAX);
                    cells.push(CellCheck {
                        row: format!("X{}", i + 1),
                        column: format!("X{}", j + 1),
                        expected: want as u64,
                        actual: actual as u64,
                    });
                }
            }
        }
        TableId::II => {
            let g = build_g_sec3().graph;
            let h = build_g_sec3_prime().graph;
            census_row(&mut cells, "G", &g, &TABLE_II_LENGTHS, &TABLE_II_G, opts)?;
            census_row(
                &mut cells,
                "G'",
                &h,
                &TABLE_II_LENGTHS,
                &TABLE_II_G_PRIME,
                opts,
            )?;
        }
        TableId::III => {
            let g = build_cal_g().graph;
            let h = build_cal_g_prime().graph;
            census_row(
                &mut cells,
                "calG",
                &g,
                &TABLE_III_LENGTHS,
                &TABLE_III_CAL_G,
                opts,
            )?;
            census_row(
                &mut cells,
                "calG'",
                &h,
                &TABLE_III_LENGTHS,
                &TABLE_III_CAL_G_PRIME,
                opts,
            )?;
        }
        TableId::V => {
            let g = build_di(3).graph;
            let h = build_di_prime(3).graph;
            census_row(&mut cells, "D3", &g, &TABLE_V_LENGTHS, &TABLE_V_D3, opts)?;
            census_row(
                &mut cells,
                "D3'",
                &h,
                &TABLE_V_LENGTHS,
                &TABLE_V_D3_PRIME,
                opts,
            )?;
        }
    }
    Ok(TableReport { table, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_one() {
        let r = verify_table(TableId::I, &CensusOptions::new(0)).unwrap();
        assert_eq!(r.cells.len(), 36);
        assert!(r.passed(), "{:?}", r.mismatches().collect::<Vec<_>>());
    }

    #[test]
    fn table_five() {
        let r = verify_table(TableId::V, &CensusOptions::new(0)).unwrap();
        assert_eq!(r.cells.len(), 12);
        assert!(r.passed(), "{:?}", r.mismatches().collect::<Vec<_>>());
    }

    #[test]
    fn tiny_budget_is_an_error() {
        let opts = CensusOptions {
            budget: Some(10),
            ..CensusOptions::new(0)
        };
        assert!(matches!(
            verify_table(TableId::V, &opts),
            Err(CensusError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn ids_parse() {
        for id in TableId::ALL {
            assert_eq!(id.to_string().parse::<TableId>().unwrap(), id);
        }
        assert!("IV".parse::<TableId>().is_err());
    }
}
