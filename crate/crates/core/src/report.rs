use crate::vertex_set::VertexSet;
use std::fmt::Write as _;
use std::time::Duration;

/// Outcome of a solver run: value, certificate and search statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub value: usize,
    pub witness: Option<VertexSet>,
    /// Set for decision runs.
    pub decision: Option<bool>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Algorithm-specific counters, printed after the standard fields.
    pub extra: Vec<(String, String)>,
}

impl SolveReport {
    pub fn new(value: usize, witness: Option<VertexSet>) -> Self {
        SolveReport {
            value,
            witness,
            decision: None,
            nodes_explored: 0,
            elapsed: Duration::ZERO,
            extra: Vec::new(),
        }
    }

    pub fn with_extra(mut self, key: &str, value: impl ToString) -> Self {
        self.extra.push((key.to_string(), value.to_string()));
        self
    }

    /// Line-oriented `key value` record.
    pub fn to_record(&self) -> String {
        let mut s = String::new();
        writeln!(s, "value {}", self.value).unwrap();
        if let Some(d) = self.decision {
            writeln!(s, "decision {}", if d { "yes" } else { "no" }).unwrap();
        }
        if let Some(w) = &self.witness {
            let items: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            writeln!(s, "witness {}", items.join(" ")).unwrap();
        }
        writeln!(s, "nodes {}", self.nodes_explored).unwrap();
        writeln!(s, "time_ms {:.3}", self.elapsed.as_secs_f64() * 1e3).unwrap();
        for (k, v) in &self.extra {
            writeln!(s, "{k} {v}").unwrap();
        }
        s
    }
}
