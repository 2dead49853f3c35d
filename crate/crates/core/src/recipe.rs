//! Expected facts attached to each construction, and a runner that checks
//! them and reports one verdict per fact.

use std::fmt;

use crate::census::count_cycles;
use crate::constructions::{Built, ConstructionError, Family};
use crate::graph::{DegreeSequences, Girth, RegularityClass, Side};
use crate::spectral::{char_poly, CharPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fact {
    Nodes(usize),
    Edges(usize),
    Girth(Girth),
    /// Exactly `count` cycles of length `len`.
    Cycles {
        len: usize,
        count: u64,
    },
    /// All cycles up to the node count, i.e. the complete inventory.
    TotalCycles(u64),
    Regularity(RegularityClass),
    /// Exact characteristic-polynomial equality with another family.
    CospectralWith(Family),
    /// Equal per-side degree sequences with another family.
    SameDegreesAs(Family),
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Nodes(n) => write!(f, "nodes = {n}"),
            Fact::Edges(m) => write!(f, "edges = {m}"),
            Fact::Girth(g) => write!(f, "girth = {g}"),
            Fact::Cycles { len, count } => write!(f, "{len}-cycles = {count}"),
            Fact::TotalCycles(c) => write!(f, "total cycles = {c}"),
            Fact::Regularity(r) => write!(f, "regularity = {r}"),
            Fact::CospectralWith(other) => write!(f, "cospectral with {other}"),
            Fact::SameDegreesAs(other) => write!(f, "same degree sequences as {other}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub family: Family,
    pub facts: Vec<Fact>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub fact: Fact,
    pub pass: bool,
    /// What was observed when the fact fails.
    pub witness: Option<String>,
}

fn cycle_facts(pairs: &[(usize, u64)]) -> impl Iterator<Item = Fact> + '_ {
    pairs
        .iter()
        .map(|&(len, count)| Fact::Cycles { len, count })
}

/// Cycle inventory of `G_{t,k}` and its pendant variant for `t > k`, or
/// `t = k` (where the two longer cycles coincide in length).
fn tk_cycles(t: usize, k: usize) -> Vec<(usize, u64)> {
    if t == k {
        vec![(2 * t + 4, 1), (2 * t + 6, 2)]
    } else {
        vec![(t + k + 4, 1), (t + k + 6, 1), (6 + 2 * t, 1)]
    }
}

fn accumulate(into: &mut Vec<(usize, u64)>, more: Vec<(usize, u64)>) {
    for (len, c) in more {
        match into.iter_mut().find(|(l, _)| *l == len) {
            Some(slot) => slot.1 += c,
            None => into.push((len, c)),
        }
    }
    into.sort_unstable();
}

impl ConstructionRecipe {
    /// The published facts for `family`. Families without a switched partner
    /// only carry size facts.
    pub fn for_family(family: Family) -> Self {
        let mut facts = Vec::new();
        let regular = |d| RegularityClass::BiRegular { d_u: d, d_w: d };
        let u_regular = |d| RegularityClass::HalfRegular {
            side: Side::U,
            degree: d,
        };
        match family {
            Family::GSec3 | Family::GSec3Prime => {
                facts.extend([
                    Fact::Nodes(54),
                    Fact::Edges(81),
                    Fact::Girth(Girth::Finite(6)),
                ]);
                facts.push(Fact::Regularity(regular(3)));
                let row = if family == Family::GSec3 {
                    crate::tables::TABLE_II_G
                } else {
                    crate::tables::TABLE_II_G_PRIME
                };
                facts.extend(
                    crate::tables::TABLE_II_LENGTHS
                        .iter()
                        .zip(row)
                        .map(|(&len, count)| Fact::Cycles { len, count }),
                );
            }
            Family::CalG | Family::CalGPrime => {
                facts.push(Fact::Nodes(21));
                facts.push(Fact::Girth(Girth::Finite(4)));
                facts.push(Fact::Regularity(u_regular(4)));
                let row = if family == Family::CalG {
                    crate::tables::TABLE_III_CAL_G
                } else {
                    crate::tables::TABLE_III_CAL_G_PRIME
                };
                facts.extend(
                    crate::tables::TABLE_III_LENGTHS
                        .iter()
                        .zip(row)
                        .map(|(&len, count)| Fact::Cycles { len, count }),
                );
            }
            Family::Gt { t } => {
                facts.push(Fact::Nodes(4 * t + 7));
                facts.push(Fact::Girth(Girth::Finite(6 + 2 * t)));
                facts.push(Fact::Cycles {
                    len: 6 + 2 * t,
                    count: 1,
                });
                facts.push(Fact::TotalCycles(1));
            }
            Family::GtPrime { t } => {
                facts.push(Fact::Nodes(4 * t + 7));
                facts.push(Fact::Girth(Girth::Infinite));
                facts.push(Fact::TotalCycles(0));
            }
            Family::Gtk { t, k } => {
                facts.push(Fact::Nodes(4 * t + k + 8));
                facts.extend(cycle_facts(&tk_cycles(t, k)));
                facts.push(Fact::TotalCycles(3));
            }
            Family::GtkPrime { t, k } | Family::CalGtkPrime { t, k } => {
                facts.push(Fact::Girth(Girth::Finite(t + k + 4)));
                facts.push(Fact::Cycles {
                    len: t + k + 4,
                    count: 1,
                });
                facts.push(Fact::TotalCycles(1));
                if matches!(family, Family::CalGtkPrime { .. }) {
                    facts.push(Fact::Regularity(u_regular(3)));
                }
            }
            Family::CalGtk { t, k } => {
                facts.extend(cycle_facts(&tk_cycles(t, k)));
                facts.push(Fact::TotalCycles(3));
                facts.push(Fact::Regularity(u_regular(3)));
            }
            Family::Di { i } => {
                let mut all = Vec::new();
                for j in 0..=i {
                    accumulate(&mut all, tk_cycles(j + 2, j));
                }
                facts.extend(cycle_facts(&all));
                facts.push(Fact::TotalCycles(3 * (i as u64 + 1)));
            }
            Family::DiPrime { i } => {
                facts.extend((0..=i).map(|j| Fact::Cycles {
                    len: 2 * j + 6,
                    count: 1,
                }));
                facts.push(Fact::TotalCycles(i as u64 + 1));
            }
            Family::Fjk { j, k } | Family::FjkPrime { j, k } => {
                facts.push(Fact::Girth(Girth::Finite(4 * k + 2)));
                let switched = matches!(family, Family::FjkPrime { .. });
                let mut all = Vec::new();
                for m in k..=j {
                    let (t, kk) = (2 * m, 2 * m - 2);
                    if switched {
                        accumulate(&mut all, vec![(t + kk + 4, 1)]);
                    } else {
                        accumulate(&mut all, tk_cycles(t, kk));
                    }
                }
                facts.extend(cycle_facts(&all));
                facts.push(Fact::Regularity(u_regular(3)));
            }
            Family::Pair6 { which } => {
                facts.push(Fact::Nodes(24));
                facts.push(Fact::Girth(Girth::Finite(6)));
                facts.push(Fact::Cycles {
                    len: 6,
                    count: if which == 1 { 2 } else { 1 },
                });
            }
            Family::HalfReg { t, which } => {
                facts.push(Fact::Girth(Girth::Finite(6 + 2 * t)));
                facts.push(Fact::Cycles {
                    len: 6 + 2 * t,
                    count: if which == 1 { 2 } else { 1 },
                });
                facts.push(Fact::Regularity(u_regular(2)));
            }
            Family::G4k {
                k,
                k_prime,
                which,
                extra,
            } => {
                facts.push(Fact::Nodes(
                    4 * k + 4 + 2 * k_prime + if extra { 4 * k + 4 } else { 0 },
                ));
                let mut all = vec![(
                    if which == 1 {
                        4 * (k + 1)
                    } else {
                        2 * (k_prime + 1)
                    },
                    1,
                )];
                if extra {
                    accumulate(&mut all, vec![(4 * (k + 1), 1)]);
                }
                facts.extend(cycle_facts(&all));
            }
            Family::Heawood => {
                facts.extend([
                    Fact::Nodes(14),
                    Fact::Edges(21),
                    Fact::Girth(Girth::Finite(6)),
                ]);
                facts.push(Fact::Regularity(regular(3)));
            }
            Family::Path { n } => {
                facts.push(Fact::Nodes(n));
                facts.push(Fact::Girth(Girth::Infinite));
            }
            Family::Cycle { n } => {
                facts.push(Fact::Nodes(n));
                facts.push(Fact::Girth(Girth::Finite(n)));
            }
            Family::CompleteBipartite { a, b } => {
                facts.push(Fact::Nodes(a + b));
                facts.push(Fact::Edges(a * b));
            }
        }
        let partner = match family {
            Family::Pair6 { which } => Some(Family::Pair6 { which: 3 - which }),
            Family::HalfReg { t, which } => Some(Family::HalfReg {
                t,
                which: 3 - which,
            }),
            Family::G4k {
                k,
                k_prime,
                which,
                extra,
            } => Some(Family::G4k {
                k,
                k_prime,
                which: 3 - which,
                extra,
            }),
            other => other.switched(),
        };
        if let Some(p) = partner {
            facts.push(Fact::CospectralWith(p));
            facts.push(Fact::SameDegreesAs(p));
        }
        ConstructionRecipe { family, facts }
    }
}

/// Builds the recipe's graph and checks each fact. A family that fails to
/// build yields a construction error rather than verdicts.
pub fn recipe_assertions(recipe: &ConstructionRecipe) -> Result<Vec<Verdict>, ConstructionError> {
    let built = recipe.family.build()?;
    let g = &built.graph;
    let census_cap = recipe
        .facts
        .iter()
        .map(|f| match f {
            Fact::Cycles { len, .. } => *len,
            Fact::TotalCycles(_) => g.node_count(),
            _ => 0,
        })
        .max()
        .unwrap_or(0);
    let census = (census_cap >= 3).then(|| count_cycles(g, census_cap));
    let mut poly: Option<CharPoly> = None;
    let mut verdicts = Vec::with_capacity(recipe.facts.len());
    for fact in &recipe.facts {
        let observed: Result<(), String> = match fact {
            Fact::Nodes(n) => check(g.node_count() == *n, || format!("{} nodes", g.node_count())),
            Fact::Edges(m) => check(g.edge_count() == *m, || format!("{} edges", g.edge_count())),
            Fact::Girth(want) => {
                let got = g.girth();
                check(got == *want, || format!("girth {got}"))
            }
            Fact::Cycles { len, count } => {
                let got = census.as_ref().map_or(0, |c| c.count(*len));
                check(got == *count, || format!("{got} cycles of length {len}"))
            }
            Fact::TotalCycles(count) => {
                let got = census.as_ref().map_or(0, |c| c.total());
                check(got == *count, || format!("{got} cycles in total"))
            }
            Fact::Regularity(want) => {
                let got = DegreeSequences::of(g, &built.bipartition).classify();
                check(got == *want, || format!("{got}"))
            }
            Fact::CospectralWith(other) => match other.build() {
                Ok(o) => {
                    let mine = poly.get_or_insert_with(|| char_poly(g));
                    let theirs = char_poly(&o.graph);
                    check(*mine == theirs, || {
                        format!("char polys differ: {mine} vs {theirs}")
                    })
                }
                Err(e) => Err(format!("partner failed to build: {e}")),
            },
            Fact::SameDegreesAs(other) => match other.build() {
                Ok(o) => same_degrees(&built, &o),
                Err(e) => Err(format!("partner failed to build: {e}")),
            },
        };
        verdicts.push(Verdict {
            fact: fact.clone(),
            pass: observed.is_ok(),
            witness: observed.err(),
        });
    }
    Ok(verdicts)
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

/// Per-side degree-sequence equality, allowing the partner's sides to be
/// named the other way round.
fn same_degrees(a: &Built, b: &Built) -> Result<(), String> {
    let da = DegreeSequences::of(&a.graph, &a.bipartition);
    let db = DegreeSequences::of(&b.graph, &b.bipartition);
    let swapped = (da.u_side == db.w_side) && (da.w_side == db.u_side);
    check(da == db || swapped, || {
        format!(
            "U {:?} / W {:?} vs U {:?} / W {:?}",
            da.u_side, da.w_side, db.u_side, db.w_side
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(family: Family) {
        let verdicts = recipe_assertions(&ConstructionRecipe::for_family(family)).unwrap();
        let failed: Vec<_> = verdicts.iter().filter(|v| !v.pass).collect();
        assert!(failed.is_empty(), "{family}: {failed:?}");
    }

    #[test]
    fn small_families_pass() {
        for spec in [
            "Gt:t=4",
            "Gtprime:t=3",
            "Gtk:t=4,k=2",
            "Gtkprime:t=5,k=1",
            "Di:i=2",
            "Diprime:i=2",
            "calGtk:t=4,k=2",
            "calGtk:t=2,k=2",
            "calGtkprime:t=4,k=4",
            "Fjk:j=2,k=1",
            "Fjkprime:j=2,k=1",
            "pair6:which=1",
            "pair6:which=2",
            "halfreg:t=1,which=1",
            "halfreg:t=3,which=2",
            "g4k:k=1,kp=5,which=1",
            "g4k:k=1,kp=5,which=2,extra=1",
            "heawood",
        ] {
            all_pass(spec.parse().unwrap());
        }
    }

    #[test]
    fn corrupted_recipe_fails_with_witness() {
        let mut recipe = ConstructionRecipe::for_family(Family::Gt { t: 2 });
        recipe.facts.push(Fact::Girth(Girth::Finite(8)));
        let verdicts = recipe_assertions(&recipe).unwrap();
        let last = verdicts.last().unwrap();
        assert!(!last.pass);
        assert_eq!(last.witness.as_deref(), Some("girth 10"));
        assert!(verdicts[..verdicts.len() - 1].iter().all(|v| v.pass));
    }
}
