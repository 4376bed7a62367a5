//! The single-algebra invariants report printed by `nakayama invariants`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{is_selfinjective, opposite, relations_from_kupisch, Algebra};
use crate::filtration::{delta_blocks, epsilon, Epsilon};
use crate::invariants::dimension_report;
use crate::Dim;

/// JSON keys are part of the command line interface and must not change.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsReport {
    pub kupisch: Vec<usize>,
    pub rank: usize,
    pub selfinjective: bool,
    /// `[start, arrows]` per relation.
    pub relations: Vec<(usize, usize)>,
    pub gldim: Dim,
    pub findim: usize,
    pub phi_dim: usize,
    pub del: Dim,
    pub del_per_simple: Vec<Dim>,
    pub op_kupisch: Vec<usize>,
    pub findim_op: usize,
    pub del_op: Dim,
    /// `[top, len]` per block of `B(Λ)`.
    pub delta_blocks: Vec<(usize, usize)>,
    pub epsilon_kupisch: Option<Vec<usize>>,
}

impl InvariantsReport {
    pub fn compute(a: &Algebra) -> Self {
        let direct = dimension_report(a);
        let op = opposite(a);
        let op_report = dimension_report(&op);
        InvariantsReport {
            kupisch: a.lengths().to_vec(),
            rank: a.rank(),
            selfinjective: is_selfinjective(a),
            relations: relations_from_kupisch(a)
                .relations()
                .iter()
                .map(|r| (r.start, r.arrows))
                .collect(),
            gldim: direct.gldim,
            findim: direct.findim,
            phi_dim: direct.phi_dim,
            del: direct.del,
            del_per_simple: direct.del_per_simple.unwrap_or_default(),
            op_kupisch: op.lengths().to_vec(),
            findim_op: op_report.findim,
            del_op: op_report.del,
            delta_blocks: delta_blocks(a).iter().map(|b| (b.top, b.len)).collect(),
            epsilon_kupisch: epsilon(a).ok().map(|e| e.algebra.into_lengths()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let list = |xs: &[usize]| {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<16} {v}");
        };
        line("kupisch", list(&self.kupisch));
        line("rank", self.rank.to_string());
        line("selfinjective", self.selfinjective.to_string());
        line(
            "relations",
            self.relations
                .iter()
                .map(|(s, a)| format!("{s}:{a}"))
                .collect::<Vec<_>>()
                .join(","),
        );
        line("gldim", self.gldim.to_string());
        line("findim", self.findim.to_string());
        line("phi_dim", self.phi_dim.to_string());
        line("del", self.del.to_string());
        line(
            "del_per_simple",
            self.del_per_simple
                .iter()
                .enumerate()
                .map(|(i, d)| format!("S{}={d}", i + 1))
                .collect::<Vec<_>>()
                .join(" "),
        );
        line("op_kupisch", list(&self.op_kupisch));
        line("findim_op", self.findim_op.to_string());
        line("del_op", self.del_op.to_string());
        line(
            "delta_blocks",
            self.delta_blocks
                .iter()
                .map(|(t, l)| format!("(top={t},len={l})"))
                .collect::<Vec<_>>()
                .join(" "),
        );
        line(
            "epsilon_kupisch",
            self.epsilon_kupisch
                .as_deref()
                .map(list)
                .unwrap_or_else(|| "-".into()),
        );
        out
    }
}

/// `new_vertex j <-> [top..socle]` lines for an `ε` computation.
pub fn block_table(a: &Algebra, e: &Epsilon) -> String {
    let mut out = String::new();
    for (j, b) in e.blocks.iter().enumerate() {
        let vertices = b
            .vertices(a)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(
            out,
            "new_vertex {} <-> [{}..{}] ({vertices})",
            j + 1,
            b.top,
            b.socle(a)
        );
    }
    out
}
