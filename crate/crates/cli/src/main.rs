//! `cospec`: build graph families, switch them, count their cycles and
//! check the published tables.

mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cospec_core::io::{
    read_alist, read_bipartition, read_edge_list, read_partition, write_bipartition,
    write_edge_list, write_partition,
};
use cospec_core::{
    char_poly, classify_cells, count_cycles_with, float_spectrum, induced_bipartition,
    validate_partition, verify_table, CensusError, CensusOptions, Family, Graph, TableId,
};

use report::{Report, Status};

#[derive(Parser, Debug)]
#[command(name = "cospec", version, about)]
struct Cli {
    /// Abort a census after this many search steps (exit code 3).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads for the census.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family (e.g. `Gt:t=4`) and write it as an edge list, with
    /// `.bip` and `.part` sidecars.
    Construct { family: String, out: PathBuf },
    /// Count simple cycles up to a length cap.
    Census {
        input: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Decide cospectrality by exact characteristic polynomials.
    Cospectral { first: PathBuf, second: PathBuf },
    /// Validate a switching partition and write the switched graph.
    Switch {
        graph: PathBuf,
        partition: PathBuf,
        out: PathBuf,
    },
    /// Recompute the published tables: I, II, III, V or all.
    VerifyTables {
        #[arg(default_value = "all")]
        which: String,
    },
    /// Convert an alist parity-check file to an edge list plus `.bip`.
    ImportAlist { input: PathBuf, out: PathBuf },
    /// Print floating-point adjacency eigenvalues.
    Spectrum { input: PathBuf },
}

/// Usage or input problems; reported on stderr with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<Report, UsageError>;

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn read_text(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), UsageError> {
    fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, UsageError> {
    read_edge_list(&read_text(path)?).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn census_options(cli: &Cli, max_len: usize) -> CensusOptions {
    CensusOptions {
        max_len,
        budget: cli.budget,
        threads: cli.threads,
    }
}

fn construct(report: &mut Report, spec: &str, out: &Path) -> Result<(), UsageError> {
    let family: Family = spec.parse()?;
    let built = family.build()?;
    write_text(out, &write_edge_list(&built.graph))?;
    write_text(
        &sidecar(out, ".bip"),
        &write_bipartition(&built.bipartition),
    )?;
    report.push("family", family);
    report.push("written", out.display());
    if let Some(p) = &built.partition {
        write_text(&sidecar(out, ".part"), &write_partition(p))?;
        report.push("partition-cells", p.cell_count());
    }
    report.input(&out.display().to_string(), &built.graph);
    Ok(())
}

fn census(cli: &Cli, report: &mut Report, input: &Path, max_len: usize) -> Result<(), UsageError> {
    let g = load_graph(input)?;
    report.input(&input.display().to_string(), &g);
    let (census, key) = match count_cycles_with(&g, &census_options(cli, max_len)) {
        Ok(c) => (c, "cycles"),
        Err(CensusError::BudgetExceeded { partial, budget }) => {
            report.push("budget-exceeded", budget);
            report.fail(Status::BudgetExceeded);
            (partial, "partial")
        }
        Err(e) => return Err(e.into()),
    };
    report.push("max-len", max_len);
    for line in census.to_lines().lines() {
        report.push(key, line);
    }
    report.push("total", census.total());
    Ok(())
}

fn cospectral(report: &mut Report, first: &Path, second: &Path) -> Result<(), UsageError> {
    let (a, b) = (load_graph(first)?, load_graph(second)?);
    report.input(&first.display().to_string(), &a);
    report.input(&second.display().to_string(), &b);
    let (pa, pb) = (char_poly(&a), char_poly(&b));
    report.push("charpoly-1", pa.to_line());
    report.push("charpoly-2", pb.to_line());
    report.push("cospectral", pa == pb);
    if pa != pb {
        report.fail(Status::Mismatch);
    }
    Ok(())
}

fn switch(
    report: &mut Report,
    graph: &Path,
    partition: &Path,
    out: &Path,
) -> Result<(), UsageError> {
    let g = load_graph(graph)?;
    report.input(&graph.display().to_string(), &g);
    let p = read_partition(&read_text(partition)?, g.node_count())
        .map_err(|e| UsageError(format!("{}: {e}", partition.display())))?;
    let validation = validate_partition(&g, &p);
    report.push("valid", validation.valid);
    if validation.empty_rest {
        report.push("note", "rest set Y is empty");
    }
    for v in &validation.violations {
        report.push("violation", v);
    }
    if !validation.valid {
        report.fail(Status::Mismatch);
        return Ok(());
    }
    if let Some(m) = &validation.cell_degree_matrix {
        for row in m {
            let items: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            report.push("cell-degrees", items.join(" "));
        }
    }
    let h = cospec_core::apply_switching(&g, &p)?;
    write_text(out, &write_edge_list(&h))?;
    report.push("written", out.display());
    report.push("changed", h != g);
    // Carry a bipartition across when the input has one and the side rules
    // give a proper coloring of the result.
    let bip = sidecar(graph, ".bip");
    if bip.exists() {
        let b = read_bipartition(&read_text(&bip)?, &g)
            .map_err(|e| UsageError(format!("{}: {e}", bip.display())))?;
        let sides = induced_bipartition(&b, &p, &classify_cells(&b, &p));
        if sides.is_valid_for(&h) {
            write_text(&sidecar(out, ".bip"), &write_bipartition(&sides))?;
            report.push("bipartition", "written");
        } else {
            report.push("bipartition", "side rules do not give a proper coloring");
        }
    }
    report.input(&out.display().to_string(), &h);
    Ok(())
}

fn verify_tables(cli: &Cli, report: &mut Report, which: &str) -> Result<(), UsageError> {
    let tables: Vec<TableId> = if which == "all" {
        TableId::ALL.to_vec()
    } else {
        vec![which.parse::<TableId>().map_err(UsageError)?]
    };
    for id in tables {
        match verify_table(id, &census_options(cli, 0)) {
            Ok(r) => {
                let matched = r.cells.iter().filter(|c| c.matches()).count();
                for c in r.mismatches() {
                    report.push(
                        "mismatch",
                        format!(
                            "table {id} {} {}: expected {}, got {}",
                            c.row, c.column, c.expected, c.actual
                        ),
                    );
                }
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                report.push(
                    "table",
                    format!("{id} {verdict} {matched}/{} cells checked", r.cells.len()),
                );
                if !r.passed() {
                    report.fail(Status::Mismatch);
                }
            }
            Err(CensusError::BudgetExceeded { budget, .. }) => {
                report.push("table", format!("{id} budget of {budget} steps exceeded"));
                report.fail(Status::BudgetExceeded);
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn import_alist(report: &mut Report, input: &Path, out: &Path) -> Result<(), UsageError> {
    let (g, b) = read_alist(&read_text(input)?)
        .map_err(|e| UsageError(format!("{}: {e}", input.display())))?;
    write_text(out, &write_edge_list(&g))?;
    write_text(&sidecar(out, ".bip"), &write_bipartition(&b))?;
    let ds = cospec_core::DegreeSequences::of(&g, &b);
    report.push("variables", ds.u_side.len());
    report.push("checks", ds.w_side.len());
    report.push("regularity", ds.classify());
    report.push("written", out.display());
    report.input(&out.display().to_string(), &g);
    Ok(())
}

fn spectrum(report: &mut Report, input: &Path) -> Result<(), UsageError> {
    let g = load_graph(input)?;
    report.input(&input.display().to_string(), &g);
    for x in float_spectrum(&g)? {
        // Negative zero reads badly next to its positive twin.
        let x = if x.abs() < 1e-12 { 0.0 } else { x };
        report.push("eigenvalue", format!("{x:.12}"));
    }
    Ok(())
}

fn run(cli: &Cli, argv: Vec<String>) -> Outcome {
    let mut report = Report::new(argv);
    match &cli.command {
        Command::Construct { family, out } => construct(&mut report, family, out)?,
        Command::Census { input, max_len } => census(cli, &mut report, input, *max_len)?,
        Command::Cospectral { first, second } => cospectral(&mut report, first, second)?,
        Command::Switch {
            graph,
            partition,
            out,
        } => switch(&mut report, graph, partition, out)?,
        Command::VerifyTables { which } => verify_tables(cli, &mut report, which)?,
        Command::ImportAlist { input, out } => import_alist(&mut report, input, out)?,
        Command::Spectrum { input } => spectrum(&mut report, input)?,
    }
    Ok(report)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match run(&cli, argv) {
        Ok(report) => {
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Structured => report.to_json() + "\n",
            };
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(report.status.exit_code())
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
