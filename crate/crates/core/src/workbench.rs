//! Commands, seeded mutation self-tests, report rendering and exit codes.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::bialgebroid::{check_bialgebroid, Bialgebroid};
use crate::field::Field;
use crate::hopf::{check_translation_map, finiteness, is_anti_hopf, is_hopf, HopfVerdict};
use crate::mat::Mat;
use crate::pipelines::{
    dual_space, reconstruct_dual_algebra, verify_thm1, verify_thm2, verify_thm3, Reconstruction, DEFAULT_GRID,
};
use crate::report::{CheckReport, Verdict};

pub const REPORT_FORMAT: &str = "algebroid-report/1";
pub const MUTATIONS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckAxioms,
    CheckHopf,
    CheckAntiHopf,
    Finiteness,
    Dual,
    VerifyThm1,
    VerifyThm2,
    VerifyThm3,
    VerifyAll,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::CheckAxioms,
        Command::CheckHopf,
        Command::CheckAntiHopf,
        Command::Finiteness,
        Command::Dual,
        Command::VerifyThm1,
        Command::VerifyThm2,
        Command::VerifyThm3,
        Command::VerifyAll,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::CheckAxioms => "check-axioms",
            Command::CheckHopf => "check-hopf",
            Command::CheckAntiHopf => "check-anti-hopf",
            Command::Finiteness => "finiteness",
            Command::Dual => "dual",
            Command::VerifyThm1 => "verify-thm1",
            Command::VerifyThm2 => "verify-thm2",
            Command::VerifyThm3 => "verify-thm3",
            Command::VerifyAll => "verify-all",
        }
    }

    pub fn parse(s: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub grid: usize,
    pub seed: u64,
    pub reconstruct_dual: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { grid: DEFAULT_GRID, seed: 0, reconstruct_dual: false }
    }
}

// ---- mutations --------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationTarget {
    Coproduct,
    Counit,
    Constants,
    Source,
    Target,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mutation {
    pub target: MutationTarget,
    pub row: usize,
    pub col: usize,
    /// Added to the existing entry; nonzero.
    pub delta: i64,
}

impl Mutation {
    pub fn describe(&self) -> String {
        let t = match self.target {
            MutationTarget::Coproduct => "coproduct",
            MutationTarget::Counit => "counit",
            MutationTarget::Constants => "structure-constants",
            MutationTarget::Source => "source",
            MutationTarget::Target => "target",
        };
        format!("{t}[{},{}]+={}", self.row, self.col, self.delta)
    }

    pub fn apply(&self, b: &Bialgebroid) -> Bialgebroid {
        let f = b.field();
        let bump = |m: &Mat| {
            let mut m = m.clone();
            let v = f.add(&m.get(self.row, self.col), &f.int(self.delta));
            m.set(self.row, self.col, v);
            m
        };
        let mut out = b.clone();
        out.name = format!("{}+{}", b.name, self.describe());
        match self.target {
            MutationTarget::Coproduct => out.coproduct = bump(&b.coproduct),
            MutationTarget::Counit => out.counit = bump(&b.counit),
            MutationTarget::Source => out.source = bump(&b.source),
            MutationTarget::Target => out.target = bump(&b.target),
            MutationTarget::Constants => {
                let mul = bump(b.total.mul_matrix());
                out.total = Arc::new(Algebra::from_matrices(f, b.total.unit().clone(), mul).expect("same shape"));
            }
        }
        out
    }
}

/// Whether a coproduct mutation only moves `Δ` within the relations of
/// `H ⊗_R H`, i.e. leaves the bialgebroid unchanged.
fn is_noop(b: &Bialgebroid, m: &Mutation) -> bool {
    if m.target != MutationTarget::Coproduct {
        return false;
    }
    let q = b.codomain_quotient();
    let moved = m.apply(b);
    q.projection.mul(&moved.coproduct.sub(&b.coproduct)).is_zero()
}

/// `n` seeded single-entry mutations of `Δ`, `ε`, the structure constants
/// of `H`, or `s`/`t`, skipping those that leave the bialgebroid unchanged.
/// Over `F_2` there are few single-entry mutations, so `s` and `t` are
/// part of the pool.
pub fn seeded_mutations(b: &Bialgebroid, seed: u64, n: usize) -> Vec<Mutation> {
    let mut rng = StdRng::seed_from_u64(seed);
    let f = b.field();
    let delta_range = match f {
        Field::Rationals => 3,
        Field::Prime { p } => (p - 1).min(3) as i64,
    };
    let mut out: Vec<Mutation> = Vec::new();
    let mut attempts = 0;
    while out.len() < n && attempts < 100 * n {
        attempts += 1;
        let target = match rng.gen_range(0..8) {
            0..=2 => MutationTarget::Coproduct,
            3 => MutationTarget::Counit,
            4..=5 => MutationTarget::Constants,
            6 => MutationTarget::Source,
            _ => MutationTarget::Target,
        };
        let (rows, cols) = match target {
            MutationTarget::Coproduct => b.coproduct.shape(),
            MutationTarget::Counit => b.counit.shape(),
            MutationTarget::Constants => b.total.mul_matrix().shape(),
            MutationTarget::Source => b.source.shape(),
            MutationTarget::Target => b.target.shape(),
        };
        let mut delta = rng.gen_range(1..=delta_range);
        if f == Field::Rationals && rng.gen_bool(0.5) {
            delta = -delta;
        }
        let m = Mutation { target, row: rng.gen_range(0..rows), col: rng.gen_range(0..cols), delta };
        if out.contains(&m) || is_noop(b, &m) {
            continue;
        }
        out.push(m);
    }
    out
}

/// Each mutation must be caught by at least one failing axiom.
pub fn mutation_self_test(b: &Bialgebroid, seed: u64, n: usize) -> CheckReport {
    let muts = seeded_mutations(b, seed, n);
    let rows: Vec<CheckReport> = muts
        .par_iter()
        .map(|m| {
            let r = check_bialgebroid(&m.apply(b));
            let failing: Vec<String> = r.leaves().iter().filter(|l| l.failed()).map(|l| l.id.clone()).collect();
            let id = format!("mutation[{}]", m.describe());
            if failing.is_empty() {
                CheckReport::fail(id, json!({ "undetected": true }))
            } else {
                let first = r.leaves().into_iter().find(|l| l.failed()).and_then(|l| l.witness.clone());
                CheckReport::pass(id).with_witness(json!({ "failing": failing, "witness": first }))
            }
        })
        .collect();
    CheckReport::group("mutation-self-test", rows)
}

// ---- commands -----------------------------------------------------------------------

fn hopf_report(b: &Bialgebroid, id: &str, anti: bool) -> CheckReport {
    let verdict = if anti { is_anti_hopf(b) } else { is_hopf(b) };
    match verdict {
        Ok(v) => {
            let mut r = v.report("galois-bijective");
            if let HopfVerdict::Hopf(tm) = &v {
                let owner = if anti { b.coopposite() } else { b.clone() };
                let mut t = check_translation_map(&owner, tm);
                t.id = "translation-map".into();
                r = CheckReport::group(id, vec![r, t]);
            } else {
                r = CheckReport::group(id, vec![r]);
            }
            r
        }
        Err(e) => CheckReport::fail(id, json!({ "error": e.to_string() })),
    }
}

fn dual_report(b: &Arc<Bialgebroid>, opts: &Options) -> CheckReport {
    let mut rows = Vec::new();
    match dual_space(b) {
        Ok(dc) => {
            let mut m = dc.module.check_bimodule(&b.base);
            m.id = "carrier-bimodule".into();
            rows.push(m.with_witness(json!({ "dim": dc.dim(), "generators": dc.dual_basis.generators })));
        }
        Err(e) => rows.push(CheckReport::inapplicable("carrier-bimodule", e.to_string())),
    }
    if opts.reconstruct_dual {
        rows.push(match reconstruct_dual_algebra(b, opts.grid) {
            Reconstruction::Validated { convention, bialgebroid, diagnostics } => {
                let anti = is_anti_hopf(&bialgebroid).map(|v| v.is_hopf()).unwrap_or(false);
                let mut g = CheckReport::group("reconstruction", diagnostics);
                g.push(CheckReport::check("candidate-anti-hopf", anti, || json!(null)));
                g.witness = Some(json!({ "convention": convention.name(), "dim": bialgebroid.dim() }));
                g
            }
            Reconstruction::Unresolved { diagnostics } => {
                // near misses are informative, not failures of the input
                let mut g = CheckReport::group("reconstruction", Vec::new());
                g.verdict = Verdict::Inapplicable;
                g.witness = Some(json!({ "unresolved": true }));
                g.children = diagnostics;
                g
            }
        });
    }
    CheckReport::group("dual", rows)
}

pub fn run_command(cmd: Command, b: &Arc<Bialgebroid>, opts: &Options) -> CheckReport {
    match cmd {
        Command::CheckAxioms => {
            let base = check_bialgebroid(b);
            let mut rows = vec![base.clone()];
            if base.passed() {
                rows.push(mutation_self_test(b, opts.seed, MUTATIONS));
            }
            CheckReport::group("check-axioms", rows)
        }
        Command::CheckHopf => hopf_report(b, "check-hopf", false),
        Command::CheckAntiHopf => hopf_report(b, "check-anti-hopf", true),
        Command::Finiteness => {
            let mut r = finiteness(b).report();
            r.id = "finiteness".into();
            r
        }
        Command::Dual => dual_report(b, opts),
        Command::VerifyThm1 => verify_thm1(b, opts.grid),
        Command::VerifyThm2 => verify_thm2(b, opts.grid),
        Command::VerifyThm3 => verify_thm3(b, opts.grid),
        Command::VerifyAll => {
            let parts: Vec<CheckReport> =
                Command::ALL[..8].par_iter().map(|c| run_command(*c, b, opts)).collect();
            CheckReport::group("verify-all", parts)
        }
    }
}

// ---- exit codes and rendering -----------------------------------------------------------

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INAPPLICABLE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

pub fn exit_code(r: &CheckReport) -> i32 {
    match r.verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inapplicable => EXIT_INAPPLICABLE,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Report envelope; timings are never included, so output is reproducible.
pub fn envelope(cmd: &str, subject: &str, opts: &Options, report: Option<&CheckReport>) -> Value {
    let mut r = report.cloned();
    if let Some(r) = r.as_mut() {
        r.strip_timings();
    }
    json!({
        "format": REPORT_FORMAT,
        "command": cmd,
        "subject": subject,
        "seed": opts.seed,
        "grid": opts.grid,
        "report": r,
    })
}

fn tag(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Inapplicable => "N/A ",
    }
}

/// Text lines: the tree is expanded to depth 2; deeper nodes only under
/// groups that did not pass. Witnesses are printed for failing leaves.
pub fn render_text(cmd: &str, subject: &str, report: Option<&CheckReport>) -> String {
    let mut out = format!("# {cmd} {subject}\n");
    fn walk(r: &CheckReport, depth: usize, out: &mut String) {
        out.push_str(&format!("{}{} {}", "  ".repeat(depth), tag(r.verdict), r.id));
        if r.children.is_empty() && r.verdict != Verdict::Pass {
            if let Some(w) = &r.witness {
                out.push_str(&format!("  {}", serde_json::to_string(w).expect("json")));
            }
        }
        out.push('\n');
        if depth < 2 || r.verdict != Verdict::Pass {
            for c in &r.children {
                walk(c, depth + 1, out);
            }
        }
    }
    if let Some(r) = report {
        walk(r, 0, &mut out);
    }
    out
}

pub fn render(fmt: OutputFormat, cmd: &str, subject: &str, opts: &Options, report: Option<&CheckReport>) -> String {
    match fmt {
        OutputFormat::Text => render_text(cmd, subject, report),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&envelope(cmd, subject, opts, report)).expect("json");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_renders_header_only() {
        assert_eq!(render_text("check-hopf", "X", None), "# check-hopf X\n");
    }

    #[test]
    fn exit_codes_follow_verdicts() {
        assert_eq!(exit_code(&CheckReport::pass("a")), EXIT_PASS);
        assert_eq!(exit_code(&CheckReport::fail("a", json!(1))), EXIT_FAIL);
        assert_eq!(exit_code(&CheckReport::inapplicable("a", "why")), EXIT_INAPPLICABLE);
        let mixed = CheckReport::group("g", vec![CheckReport::pass("a"), CheckReport::inapplicable("b", "")]);
        assert_eq!(exit_code(&mixed), EXIT_PASS);
    }

    #[test]
    fn mutations_are_deterministic_and_distinct() {
        let b = crate::fixtures::fixture("RE2").unwrap().bialgebroid;
        let a = seeded_mutations(&b, 7, MUTATIONS);
        assert_eq!(a, seeded_mutations(&b, 7, MUTATIONS));
        assert_eq!(a.len(), MUTATIONS);
        assert!(a.iter().all(|m| m.delta != 0));
    }
}
