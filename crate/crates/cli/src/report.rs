//! Command reports: line-oriented `key: value` text, or JSON.

use std::time::{SystemTime, UNIX_EPOCH};

use cospec_core::{char_poly, Graph};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Mismatch,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Mismatch => 1,
            Status::BudgetExceeded => 3,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Mismatch => "mismatch",
            Status::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Fingerprint {
    pub path: String,
    pub nodes: usize,
    pub edges: usize,
    /// SHA-256 of the comma-separated characteristic polynomial.
    pub charpoly_sha256: String,
}

impl Fingerprint {
    pub fn of(path: &str, g: &Graph) -> Self {
        let digest = Sha256::digest(char_poly(g).to_line().as_bytes());
        Fingerprint {
            path: path.to_string(),
            nodes: g.node_count(),
            edges: g.edge_count(),
            charpoly_sha256: hex::encode(digest),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub version: &'static str,
    pub timestamp: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<Fingerprint>,
    pub results: Vec<Entry>,
    pub status: Status,
    pub provenance: Provenance,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        Report {
            command,
            inputs: Vec::new(),
            results: Vec::new(),
            status: Status::Pass,
            provenance: Provenance {
                version: env!("CARGO_PKG_VERSION"),
                timestamp,
            },
        }
    }

    pub fn input(&mut self, path: &str, g: &Graph) {
        self.inputs.push(Fingerprint::of(path, g));
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.results.push(Entry {
            key: key.to_string(),
            value: value.to_string(),
        });
    }

    /// Status only ever gets worse.
    pub fn fail(&mut self, status: Status) {
        if self.status.exit_code() < status.exit_code() {
            self.status = status;
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command.join(" "));
        for f in &self.inputs {
            out.push_str(&format!(
                "input: {} nodes={} edges={} charpoly-sha256={}\n",
                f.path, f.nodes, f.edges, f.charpoly_sha256
            ));
        }
        for e in &self.results {
            out.push_str(&format!("{}: {}\n", e.key, e.value));
        }
        out.push_str(&format!("status: {}\n", self.status.as_str()));
        out.push_str(&format!("version: {}\n", self.provenance.version));
        out.push_str(&format!("timestamp: {}\n", self.provenance.timestamp));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cospec_core::graph::cycle_graph;

    #[test]
    fn text_layout() {
        let mut r = Report::new(vec!["cospec".into(), "census".into()]);
        r.input("c4.el", &cycle_graph(4).unwrap());
        r.push("cycles", "4 1");
        let text = r.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "command: cospec census");
        assert!(lines[1].starts_with("input: c4.el nodes=4 edges=4 charpoly-sha256="));
        assert_eq!(lines[2], "cycles: 4 1");
        assert_eq!(lines[3], "status: pass");
    }

    #[test]
    fn fingerprint_hashes_the_polynomial_line() {
        let g = cycle_graph(4).unwrap();
        // x^4 - 4x^2
        let expected = hex::encode(Sha256::digest(b"0,0,-4,0,1"));
        assert_eq!(Fingerprint::of("g", &g).charpoly_sha256, expected);
    }

    #[test]
    fn status_only_worsens() {
        let mut r = Report::new(vec![]);
        r.fail(Status::BudgetExceeded);
        r.fail(Status::Mismatch);
        assert_eq!(r.status, Status::BudgetExceeded);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["status"], "budget-exceeded");
    }
}
