//! Exhaustive verification of the homological identities over enumerated
//! algebras.
//!
//! Every check is a function of one algebra. A check whose hypothesis does not
//! hold is reported as skipped with the reason; a failing check carries a full
//! summary of the algebra's invariants so the counterexample can be studied
//! without recomputation.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::algebra::{
    canonicalize, enumerate_kupisch, is_selfinjective, kupisch_from_relations, opposite,
    relations_from_kupisch, Algebra, EnumerationSpec, RelationSystem,
};
use crate::error::EpsilonError;
use crate::filtration::{
    b_filtration_in, delta_blocks, epsilon, epsilon_series, findim_one_conditions,
    invariants_via_tower, is_nakayama_series, Epsilon,
};
use crate::invariants::{dimension_report, phi_dim_over_subsets, DimensionReport};
use crate::uniserial::{indecomposables, is_injective, projective, syzygy_power, Syzygy};
use crate::Dim;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckId {
    ThmMain,
    Prop1Reduction,
    Prop2Dichotomy,
    Findim1Equiv,
    PhiEven,
    PhiFindimGap,
    DelLePhi,
    BFiltrationSyz2,
    OpInvolution,
    ProjInjId,
    EpsSelfinjAtPhi2,
    EpsIsNakayama,
    TowerConsistent,
    PhiSubsetOracle,
    RoundtripRelations,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::ThmMain,
        CheckId::Prop1Reduction,
        CheckId::Prop2Dichotomy,
        CheckId::Findim1Equiv,
        CheckId::PhiEven,
        CheckId::PhiFindimGap,
        CheckId::DelLePhi,
        CheckId::BFiltrationSyz2,
        CheckId::OpInvolution,
        CheckId::ProjInjId,
        CheckId::EpsSelfinjAtPhi2,
        CheckId::EpsIsNakayama,
        CheckId::TowerConsistent,
        CheckId::PhiSubsetOracle,
        CheckId::RoundtripRelations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::ThmMain => "THM_MAIN",
            CheckId::Prop1Reduction => "PROP1_REDUCTION",
            CheckId::Prop2Dichotomy => "PROP2_DICHOTOMY",
            CheckId::Findim1Equiv => "FINDIM1_EQUIV",
            CheckId::PhiEven => "PHI_EVEN",
            CheckId::PhiFindimGap => "PHI_FINDIM_GAP",
            CheckId::DelLePhi => "DEL_LE_PHI",
            CheckId::BFiltrationSyz2 => "B_FILTRATION_SYZ2",
            CheckId::OpInvolution => "OP_INVOLUTION",
            CheckId::ProjInjId => "PROJ_INJ_ID",
            CheckId::EpsSelfinjAtPhi2 => "EPS_SELFINJ_AT_PHI2",
            CheckId::EpsIsNakayama => "EPS_IS_NAKAYAMA",
            CheckId::TowerConsistent => "TOWER_CONSISTENT",
            CheckId::PhiSubsetOracle => "PHI_SUBSET_ORACLE",
            CheckId::RoundtripRelations => "ROUNDTRIP_RELATIONS",
        }
    }

    /// The statement the check verifies.
    pub fn description(self) -> &'static str {
        match self {
            CheckId::ThmMain => {
                "findim A = del A = findim A^op = del A^op"
            }
            CheckId::Prop1Reduction => {
                "infinite gldim and phidim >= 3: phidim, findim and del of eps(A) are those of A minus 2"
            }
            CheckId::Prop2Dichotomy => {
                "phidim = 2: findim = 1 iff del = 1, and findim = 2 iff del = 2"
            }
            CheckId::Findim1Equiv => {
                "infinite gldim, not selfinjective: findim = 1 iff relation starts = projective socles iff B = nabla"
            }
            CheckId::PhiEven => "infinite gldim: phidim is even",
            CheckId::PhiFindimGap => {
                "findim <= phidim <= findim + 1, and findim in {1,2} forces phidim = 2"
            }
            CheckId::DelLePhi => "del <= phidim",
            CheckId::BFiltrationSyz2 => {
                "every nonzero second syzygy has a B-filtration that glues back to it"
            }
            CheckId::OpInvolution => {
                "(A^op)^op is A up to rotation; A^op has the same rank and number of relations"
            }
            CheckId::ProjInjId => {
                "for every relation start k, P_{k+1} is injective with the socle of the next relation"
            }
            CheckId::EpsSelfinjAtPhi2 => "infinite gldim and phidim = 2: eps(A) is selfinjective",
            CheckId::EpsIsNakayama => {
                "not selfinjective: eps(A) is a Nakayama algebra, cyclic when gldim is infinite"
            }
            CheckId::TowerConsistent => {
                "gldim, findim, phidim and del from the eps-tower match the direct computation"
            }
            CheckId::PhiSubsetOracle => {
                "max of phi over all subsets of indecomposables equals phi of their direct sum"
            }
            CheckId::RoundtripRelations => {
                "Kupisch series -> relations -> Kupisch series is the identity"
            }
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_uppercase();
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Parses `"all"` or a comma separated list of check names.
pub fn parse_check_list(s: &str) -> Result<Vec<CheckId>, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut checks = s
        .split(',')
        .map(str::parse)
        .collect::<Result<Vec<CheckId>, _>>()?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail { detail: String },
    Skipped { reason: String },
}

impl CheckOutcome {
    fn from_failures(failures: Vec<String>) -> Self {
        if failures.is_empty() {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                detail: failures.join("; "),
            }
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        CheckOutcome::Skipped {
            reason: reason.into(),
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }
}

/// Everything computed about one algebra; attached to failing reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub kupisch: Algebra,
    pub relations: String,
    pub gldim: Dim,
    pub findim: usize,
    pub phi_dim: usize,
    pub del: Dim,
    pub del_per_simple: Vec<Dim>,
    pub op_kupisch: Algebra,
    pub findim_op: usize,
    pub del_op: Dim,
    pub eps_kupisch: Option<Algebra>,
    /// Raw block counts behind `eps_kupisch`, also when they are not cyclic.
    pub eps_series: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    /// Canonical (least rotation) Kupisch series.
    pub algebra: Algebra,
    pub outcomes: BTreeMap<CheckId, CheckOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<AlgebraSummary>,
}

impl CheckReport {
    pub fn failed(&self) -> Vec<CheckId> {
        self.outcomes
            .iter()
            .filter(|(_, o)| o.is_fail())
            .map(|(id, _)| *id)
            .collect()
    }
}

/// Lazily computed invariants of one algebra, shared between checks.
struct Profile<'a> {
    a: &'a Algebra,
    direct: OnceCell<DimensionReport>,
    op: OnceCell<(Algebra, DimensionReport)>,
    eps: OnceCell<Result<Epsilon, EpsilonError>>,
    eps_report: OnceCell<Option<DimensionReport>>,
}

impl<'a> Profile<'a> {
    fn new(a: &'a Algebra) -> Self {
        Profile {
            a,
            direct: OnceCell::new(),
            op: OnceCell::new(),
            eps: OnceCell::new(),
            eps_report: OnceCell::new(),
        }
    }

    fn direct(&self) -> &DimensionReport {
        self.direct.get_or_init(|| dimension_report(self.a))
    }

    fn op(&self) -> &(Algebra, DimensionReport) {
        self.op.get_or_init(|| {
            let op = opposite(self.a);
            let report = dimension_report(&op);
            (op, report)
        })
    }

    fn eps(&self) -> &Result<Epsilon, EpsilonError> {
        self.eps.get_or_init(|| epsilon(self.a))
    }

    fn eps_report(&self) -> Option<&DimensionReport> {
        self.eps_report
            .get_or_init(|| {
                self.eps()
                    .as_ref()
                    .ok()
                    .map(|e| dimension_report(&e.algebra))
            })
            .as_ref()
    }

    fn infinite_gldim(&self) -> bool {
        !self.direct().gldim.is_finite()
    }

    fn summary(&self) -> AlgebraSummary {
        let d = self.direct();
        let (op, op_report) = self.op();
        AlgebraSummary {
            kupisch: self.a.clone(),
            relations: relations_from_kupisch(self.a).to_string(),
            gldim: d.gldim,
            findim: d.findim,
            phi_dim: d.phi_dim,
            del: d.del,
            del_per_simple: d.del_per_simple.clone().unwrap_or_default(),
            op_kupisch: op.clone(),
            findim_op: op_report.findim,
            del_op: op_report.del,
            eps_kupisch: self.eps().as_ref().ok().map(|e| e.algebra.clone()),
            eps_series: epsilon_series(self.a).ok().map(|(s, _)| s),
        }
    }

    fn check(&self, id: CheckId) -> CheckOutcome {
        match id {
            CheckId::ThmMain => self.thm_main(),
            CheckId::Prop1Reduction => self.prop1_reduction(),
            CheckId::Prop2Dichotomy => self.prop2_dichotomy(),
            CheckId::Findim1Equiv => self.findim1_equiv(),
            CheckId::PhiEven => self.phi_even(),
            CheckId::PhiFindimGap => self.phi_findim_gap(),
            CheckId::DelLePhi => self.del_le_phi(),
            CheckId::BFiltrationSyz2 => self.b_filtration_syz2(),
            CheckId::OpInvolution => self.op_involution(),
            CheckId::ProjInjId => self.proj_inj_id(),
            CheckId::EpsSelfinjAtPhi2 => self.eps_selfinj_at_phi2(),
            CheckId::EpsIsNakayama => self.eps_is_nakayama(),
            CheckId::TowerConsistent => self.tower_consistent(),
            CheckId::PhiSubsetOracle => self.phi_subset_oracle(),
            CheckId::RoundtripRelations => self.roundtrip_relations(),
        }
    }

    fn thm_main(&self) -> CheckOutcome {
        let d = self.direct();
        let (_, op) = self.op();
        let values = [Dim::Finite(d.findim), d.del, Dim::Finite(op.findim), op.del];
        if values.iter().all(|v| *v == values[0]) {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                detail: format!(
                    "findim = {}, del = {}, findim_op = {}, del_op = {}",
                    values[0], values[1], values[2], values[3]
                ),
            }
        }
    }

    fn prop1_reduction(&self) -> CheckOutcome {
        if is_selfinjective(self.a) {
            return CheckOutcome::skip("selfinjective");
        }
        let d = self.direct();
        if !self.infinite_gldim() {
            return CheckOutcome::skip(format!("finite gldim {}", d.gldim));
        }
        if d.phi_dim < 3 {
            return CheckOutcome::skip(format!("phidim = {} < 3", d.phi_dim));
        }
        let Some(e) = self.eps_report() else {
            return CheckOutcome::Fail {
                detail: format!("eps undefined: {:?}", self.eps().as_ref().err()),
            };
        };
        let mut failures = Vec::new();
        if e.phi_dim + 2 != d.phi_dim {
            failures.push(format!("phidim {} vs eps {}", d.phi_dim, e.phi_dim));
        }
        if e.findim + 2 != d.findim {
            failures.push(format!("findim {} vs eps {}", d.findim, e.findim));
        }
        let lifted = match e.del {
            Dim::Finite(x) => Dim::Finite(x + 2),
            Dim::Infinite => Dim::Infinite,
        };
        if lifted != d.del {
            failures.push(format!("del {} vs eps {}", d.del, e.del));
        }
        CheckOutcome::from_failures(failures)
    }

    fn prop2_dichotomy(&self) -> CheckOutcome {
        let d = self.direct();
        if d.phi_dim != 2 {
            return CheckOutcome::skip(format!("phidim = {} != 2", d.phi_dim));
        }
        let mut failures = Vec::new();
        for k in [1, 2] {
            if (d.findim == k) != (d.del == Dim::Finite(k)) {
                failures.push(format!("findim = {}, del = {}", d.findim, d.del));
            }
        }
        failures.dedup();
        CheckOutcome::from_failures(failures)
    }

    fn findim1_equiv(&self) -> CheckOutcome {
        if is_selfinjective(self.a) {
            return CheckOutcome::skip("selfinjective");
        }
        if !self.infinite_gldim() {
            return CheckOutcome::skip("finite gldim");
        }
        let findim_one = self.direct().findim == 1;
        let (sets, blocks) = findim_one_conditions(self.a);
        if findim_one == sets && sets == blocks {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                detail: format!(
                    "findim = 1: {findim_one}, starts = socles: {sets}, B = nabla: {blocks}"
                ),
            }
        }
    }

    fn phi_even(&self) -> CheckOutcome {
        if !self.infinite_gldim() {
            return CheckOutcome::skip("finite gldim");
        }
        let phi = self.direct().phi_dim;
        if phi.is_multiple_of(2) {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                detail: format!("phidim = {phi} is odd"),
            }
        }
    }

    fn phi_findim_gap(&self) -> CheckOutcome {
        let d = self.direct();
        let mut failures = Vec::new();
        if d.findim > d.phi_dim || d.phi_dim > d.findim + 1 {
            failures.push(format!("findim = {}, phidim = {}", d.findim, d.phi_dim));
        }
        if (d.findim == 1 || d.findim == 2) && d.phi_dim != 2 {
            failures.push(format!("findim = {} but phidim = {}", d.findim, d.phi_dim));
        }
        CheckOutcome::from_failures(failures)
    }

    fn del_le_phi(&self) -> CheckOutcome {
        let d = self.direct();
        if d.del <= Dim::Finite(d.phi_dim) {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                detail: format!("del = {} > phidim = {}", d.del, d.phi_dim),
            }
        }
    }

    fn b_filtration_syz2(&self) -> CheckOutcome {
        let a = self.a;
        let blocks = delta_blocks(a);
        let mut failures = Vec::new();
        for m in indecomposables(a) {
            let Syzygy::Module(s2) = syzygy_power(a, &m, 2) else {
                continue;
            };
            match b_filtration_in(a, &blocks, &s2) {
                Ok(f) if !f.is_empty() && f.concat(&blocks) == Some((s2.top, s2.len)) => {}
                Ok(f) => failures.push(format!(
                    "{m}: filtration {:?} does not glue to {s2}",
                    f.blocks
                )),
                Err(e) => failures.push(format!("{m}: {e}")),
            }
        }
        CheckOutcome::from_failures(failures)
    }

    fn op_involution(&self) -> CheckOutcome {
        let (op, _) = self.op();
        let back = opposite(op);
        let mut failures = Vec::new();
        if canonicalize(&back) != canonicalize(self.a) {
            failures.push(format!("(A^op)^op = {back}"));
        }
        if op.rank() != self.a.rank() {
            failures.push(format!("rank of A^op is {}", op.rank()));
        }
        let (r, r_op) = (
            relations_from_kupisch(self.a).len(),
            relations_from_kupisch(op).len(),
        );
        if r != r_op {
            failures.push(format!("{r} relations but A^op has {r_op}"));
        }
        CheckOutcome::from_failures(failures)
    }

    fn proj_inj_id(&self) -> CheckOutcome {
        let a = self.a;
        let rels = relations_from_kupisch(a);
        let socles = rels.socles();
        let mut failures = Vec::new();
        for (j, rel) in rels.relations().iter().enumerate() {
            let p = projective(a, rel.start + 1);
            if !is_injective(a, &p) {
                failures.push(format!("P_{} is not injective", p.top));
            }
            let expected = socles[(j + 1) % socles.len()];
            if p.socle(a) != expected {
                failures.push(format!(
                    "P_{} has socle {} instead of {expected}",
                    p.top,
                    p.socle(a)
                ));
            }
        }
        CheckOutcome::from_failures(failures)
    }

    fn eps_selfinj_at_phi2(&self) -> CheckOutcome {
        if !self.infinite_gldim() {
            return CheckOutcome::skip("finite gldim");
        }
        if self.direct().phi_dim != 2 {
            return CheckOutcome::skip(format!("phidim = {} != 2", self.direct().phi_dim));
        }
        match self.eps() {
            Ok(e) if is_selfinjective(&e.algebra) => CheckOutcome::Pass,
            Ok(e) => CheckOutcome::Fail {
                detail: format!("eps = {} is not selfinjective", e.algebra),
            },
            Err(err) => CheckOutcome::Fail {
                detail: err.to_string(),
            },
        }
    }

    fn eps_is_nakayama(&self) -> CheckOutcome {
        if is_selfinjective(self.a) {
            return CheckOutcome::skip("selfinjective");
        }
        let series = match epsilon_series(self.a) {
            Ok((s, _)) => s,
            Err(e) => {
                return CheckOutcome::Fail {
                    detail: e.to_string(),
                }
            }
        };
        if !is_nakayama_series(&series) {
            return CheckOutcome::Fail {
                detail: format!("block counts {series:?} are not a Kupisch series"),
            };
        }
        if self.infinite_gldim() && self.eps().is_err() {
            return CheckOutcome::Fail {
                detail: format!("infinite gldim but eps block counts {series:?} are not cyclic"),
            };
        }
        CheckOutcome::Pass
    }

    fn tower_consistent(&self) -> CheckOutcome {
        let d = self.direct();
        match invariants_via_tower(self.a) {
            Ok(t) => {
                let lhs = (t.gldim, t.findim, t.phi_dim, t.del);
                let rhs = (d.gldim, d.findim, d.phi_dim, d.del);
                if lhs == rhs {
                    CheckOutcome::Pass
                } else {
                    CheckOutcome::Fail {
                        detail: format!(
                            "tower (gldim, findim, phidim, del) = {lhs:?}, direct = {rhs:?}"
                        ),
                    }
                }
            }
            Err(e) => CheckOutcome::Fail {
                detail: e.to_string(),
            },
        }
    }

    fn phi_subset_oracle(&self) -> CheckOutcome {
        let a = self.a;
        let k = a.total_length() - a.rank();
        if a.rank() > 3 || a.max_len() > 4 || k >= 12 {
            return CheckOutcome::skip(format!(
                "subset search limited to rank <= 3, lengths <= 4 (rank {}, max length {})",
                a.rank(),
                a.max_len()
            ));
        }
        let brute = phi_dim_over_subsets(a);
        let phi = self.direct().phi_dim;
        if brute == phi {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                detail: format!("max over subsets = {brute}, phidim = {phi}"),
            }
        }
    }

    fn roundtrip_relations(&self) -> CheckOutcome {
        let rels = relations_from_kupisch(self.a);
        let mut failures = Vec::new();
        match kupisch_from_relations(&rels) {
            Ok(back) if &back == self.a => {}
            Ok(back) => failures.push(format!("{rels} rebuilds {back}")),
            Err(e) => failures.push(e.to_string()),
        }
        match rels.to_string().parse::<RelationSystem>() {
            Ok(parsed) if parsed == rels => {}
            _ => failures.push(format!("text form {rels} does not parse back")),
        }
        CheckOutcome::from_failures(failures)
    }
}

/// Evaluates `checks` on `a`, returning the report and the full summary.
fn evaluate(a: &Algebra, checks: &[CheckId]) -> (CheckReport, AlgebraSummary) {
    let profile = Profile::new(a);
    let outcomes: BTreeMap<CheckId, CheckOutcome> =
        checks.iter().map(|&id| (id, profile.check(id))).collect();
    let summary = profile.summary();
    let failed = outcomes.values().any(CheckOutcome::is_fail);
    let report = CheckReport {
        algebra: canonicalize(a),
        outcomes,
        payload: failed.then(|| summary.clone()),
    };
    (report, summary)
}

pub fn run_checks(a: &Algebra, checks: &[CheckId]) -> CheckReport {
    evaluate(a, checks).0
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTotals {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histograms {
    pub findim: BTreeMap<usize, usize>,
    pub del: BTreeMap<Dim, usize>,
    pub phi_dim: BTreeMap<usize, usize>,
}

/// One CSV row per algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub canonical_kupisch: String,
    pub rank: usize,
    pub gldim: Dim,
    pub findim: usize,
    pub del: Dim,
    pub phi: usize,
    pub findim_op: usize,
    pub del_op: Dim,
    /// Empty when `ε` is undefined (selfinjective or non-cyclic).
    pub eps_kupisch: String,
    /// Semicolon separated names of failed checks.
    pub failed_checks: String,
}

impl SweepRow {
    fn new(report: &CheckReport, s: &AlgebraSummary) -> Self {
        SweepRow {
            canonical_kupisch: report.algebra.to_string(),
            rank: s.kupisch.rank(),
            gldim: s.gldim,
            findim: s.findim,
            del: s.del,
            phi: s.phi_dim,
            findim_op: s.findim_op,
            del_op: s.del_op,
            eps_kupisch: s
                .eps_kupisch
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default(),
            failed_checks: report
                .failed()
                .iter()
                .map(|c| c.name())
                .collect::<Vec<_>>()
                .join(";"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub spec: EnumerationSpec,
    pub checks: Vec<CheckId>,
    pub algebras: usize,
    pub totals: BTreeMap<CheckId, CheckTotals>,
    pub failures: Vec<CheckReport>,
    pub histograms: Histograms,
    pub rows: Vec<SweepRow>,
    /// Not serialized, so that reports are reproducible byte for byte.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn failure_count(&self) -> usize {
        self.totals.values().map(|t| t.fail).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row)?;
        }
        if self.rows.is_empty() {
            w.write_record([
                "canonical_kupisch",
                "rank",
                "gldim",
                "findim",
                "del",
                "phi",
                "findim_op",
                "del_op",
                "eps_kupisch",
                "failed_checks",
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Writes CSV for a `.csv` path and JSON otherwise.
    pub fn write_to(&self, path: &Path) -> std::io::Result<()> {
        let body = match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => self
                .to_csv()
                .map_err(|e| std::io::Error::other(e.to_string()))?,
            _ => self.to_json(),
        };
        std::fs::write(path, body)
    }
}

/// Runs `checks` on every algebra of `spec` using `workers` threads.
///
/// The result does not depend on `workers`: algebras are evaluated
/// independently and collected in enumeration order.
pub fn sweep(spec: &EnumerationSpec, checks: &[CheckId], workers: usize) -> SweepReport {
    use rayon::prelude::*;

    let started = Instant::now();
    let algebras: Vec<Algebra> = enumerate_kupisch(spec).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let evaluated: Vec<(CheckReport, AlgebraSummary)> =
        pool.install(|| algebras.par_iter().map(|a| evaluate(a, checks)).collect());

    let mut totals: BTreeMap<CheckId, CheckTotals> = checks
        .iter()
        .map(|&c| (c, CheckTotals::default()))
        .collect();
    let mut histograms = Histograms::default();
    let mut failures = Vec::new();
    let mut rows = Vec::with_capacity(evaluated.len());
    for (report, summary) in evaluated {
        for (id, outcome) in &report.outcomes {
            let t = totals.entry(*id).or_default();
            match outcome {
                CheckOutcome::Pass => t.pass += 1,
                CheckOutcome::Fail { .. } => t.fail += 1,
                CheckOutcome::Skipped { .. } => t.skip += 1,
            }
        }
        *histograms.findim.entry(summary.findim).or_default() += 1;
        *histograms.del.entry(summary.del).or_default() += 1;
        *histograms.phi_dim.entry(summary.phi_dim).or_default() += 1;
        rows.push(SweepRow::new(&report, &summary));
        if report.outcomes.values().any(CheckOutcome::is_fail) {
            failures.push(report);
        }
    }
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    SweepReport {
        spec: *spec,
        checks,
        algebras: algebras.len(),
        totals,
        failures,
        histograms,
        rows,
        wall_time: started.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(c: &[usize]) -> Algebra {
        Algebra::new(c.to_vec()).unwrap()
    }

    #[test]
    fn check_names_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
            assert_eq!(
                serde_json::to_string(&id).unwrap(),
                format!("\"{}\"", id.name())
            );
            assert!(!id.description().is_empty());
        }
        assert!("NOPE".parse::<CheckId>().is_err());
        assert_eq!(parse_check_list("all").unwrap().len(), 15);
        assert_eq!(
            parse_check_list("thm_main,DEL_LE_PHI,THM_MAIN").unwrap(),
            vec![CheckId::ThmMain, CheckId::DelLePhi]
        );
    }

    #[test]
    fn single_algebra_checks() {
        let r = run_checks(&alg(&[3, 4, 3, 3, 2]), &[CheckId::ThmMain]);
        assert_eq!(r.outcomes[&CheckId::ThmMain], CheckOutcome::Pass);
        assert!(r.payload.is_none());

        let r = run_checks(&alg(&[2, 2]), &[CheckId::Prop1Reduction]);
        assert!(matches!(
            r.outcomes[&CheckId::Prop1Reduction],
            CheckOutcome::Skipped { .. }
        ));

        let r = run_checks(&alg(&[3, 3, 2]), &[CheckId::EpsSelfinjAtPhi2]);
        assert_eq!(r.outcomes[&CheckId::EpsSelfinjAtPhi2], CheckOutcome::Pass);

        let r = run_checks(&alg(&[3, 4, 3, 3, 2]), &CheckId::ALL);
        assert!(r.failed().is_empty(), "{r:?}");
        assert_eq!(r.algebra, alg(&[2, 3, 4, 3, 3]));
    }

    #[test]
    fn small_sweeps() {
        let spec = EnumerationSpec::new(2, 2, 3, true).unwrap();
        let report = sweep(&spec, &CheckId::ALL, 1);
        assert_eq!(report.algebras, 3);
        assert_eq!(report.failure_count(), 0);
        for t in report.totals.values() {
            assert_eq!(t.pass + t.fail + t.skip, 3);
        }

        let spec = EnumerationSpec::new(1, 1, 4, true).unwrap();
        let report = sweep(&spec, &CheckId::ALL, 2);
        assert_eq!(report.algebras, 3);
        assert!(report
            .rows
            .iter()
            .all(|r| r.findim == 0 && r.del == Dim::Finite(0)));
        assert_eq!(
            report
                .rows
                .iter()
                .map(|r| r.canonical_kupisch.as_str())
                .collect::<Vec<_>>(),
            vec!["2", "3", "4"]
        );
    }

    #[test]
    fn report_serialization() {
        let spec = EnumerationSpec::new(1, 3, 3, true).unwrap();
        let report = sweep(&spec, &CheckId::ALL, 2);
        let json = report.to_json();
        let back = SweepReport::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        let csv = report.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "canonical_kupisch,rank,gldim,findim,del,phi,findim_op,del_op,eps_kupisch,failed_checks"
        );
        assert_eq!(lines.count(), report.algebras);
    }
}
