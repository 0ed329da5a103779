//! Whittaker-space reports and the sl(1,2) verification suite.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use superwhit_core::{Certificate, Error, WhittakerModule};

/// Size of the even Whittaker space and of the filtration it must match.
pub const EXPECTED_DIM_WH0: usize = 4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquationCheck {
    pub name: String,
    pub holds: bool,
    pub computed: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WhittakerReport {
    pub algebra: String,
    pub params: BTreeMap<String, String>,
    pub window: u32,
    pub dim_wh0: usize,
    pub wh0_basis: Vec<String>,
    pub dim_wh: usize,
    pub wh_basis: Vec<String>,
    pub verdict: String,
    pub equations_checked: Vec<EquationCheck>,
    /// Wall-clock time; excluded from golden comparisons.
    pub runtime_ms: u64,
}

impl WhittakerReport {
    pub fn build(m: &WhittakerModule, window: u32) -> Result<(WhittakerReport, Certificate), Error> {
        let ps = m.params();
        let text = |v: &superwhit_core::ModuleVector| v.to_text(ps);
        let wh0 = m.whittaker_space_even(window)?;
        let wh = m.whittaker_space_full(window)?;
        let cert = m.simplicity_certificate(window)?;
        let params = [("a", m.a()), ("b", m.b()), ("c", m.c())]
            .into_iter()
            .map(|(n, v)| (n.to_string(), v.to_string_with(ps)))
            .collect();
        let equations_checked = m
            .action_identities()
            .into_iter()
            .map(|id| EquationCheck {
                holds: id.holds(),
                computed: text(&id.computed),
                expected: text(&id.expected),
                name: id.name,
            })
            .collect();
        let report = WhittakerReport {
            algebra: "sl12".into(),
            params,
            window,
            dim_wh0: wh0.dim(),
            wh0_basis: wh0.basis.iter().map(text).collect(),
            dim_wh: wh.dim(),
            wh_basis: wh.basis.iter().map(text).collect(),
            verdict: cert.name().into(),
            equations_checked,
            runtime_ms: 0,
        };
        Ok((report, cert))
    }

    pub fn equations_matched(&self) -> usize {
        self.equations_checked.iter().filter(|e| e.holds).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        writeln!(out, "algebra: {}", self.algebra).unwrap();
        writeln!(out, "params: {}", params.join(", ")).unwrap();
        writeln!(out, "window: {}", self.window).unwrap();
        writeln!(out, "dim Wh0: {}", self.dim_wh0).unwrap();
        for v in &self.wh0_basis {
            writeln!(out, "  {v}").unwrap();
        }
        writeln!(out, "dim Wh: {}", self.dim_wh).unwrap();
        for v in &self.wh_basis {
            writeln!(out, "  {v}").unwrap();
        }
        writeln!(out, "verdict: {}", self.verdict).unwrap();
        writeln!(out, "equations: {}/{} hold", self.equations_matched(), self.equations_checked.len()).unwrap();
        for e in &self.equations_checked {
            if e.holds {
                writeln!(out, "  {}: ok", e.name).unwrap();
            } else {
                writeln!(out, "  {}: differs\n    computed: {}\n    stated:   {}", e.name, e.computed, e.expected)
                    .unwrap();
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub equations_matched: String,
    pub passed: usize,
    pub total: usize,
    pub report: WhittakerReport,
}

fn check(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Check {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    Check { name: name.into(), ok: expected == actual, expected, actual }
}

impl VerifyReport {
    /// The eight action identities, dim Wh0 = 4 with its four generators,
    /// dim Wh = 1 and a Simple verdict.
    pub fn build(m: &WhittakerModule, window: u32) -> Result<(VerifyReport, Certificate), Error> {
        let (report, cert) = WhittakerReport::build(m, window)?;
        let mut checks: Vec<Check> = report
            .equations_checked
            .iter()
            .map(|e| Check {
                name: format!("equation {}", e.name),
                expected: e.expected.clone(),
                actual: e.computed.clone(),
                ok: e.holds,
            })
            .collect();
        checks.push(check("dim Wh0", EXPECTED_DIM_WH0, report.dim_wh0));
        let (length, _) = m.filtration_length()?;
        checks.push(check("dim Wh0 equals filtration length", length, report.dim_wh0));
        let wh0 = m.whittaker_space_even(window)?;
        for (i, v) in m.even_whittaker_generators().iter().enumerate() {
            let name = format!("w{} in Wh0 ({})", i + 1, v.to_text(m.params()));
            checks.push(check(name, true, wh0.contains(v)));
        }
        checks.push(check("dim Wh", 1, report.dim_wh));
        checks.push(check("verdict", "Simple", &report.verdict));
        let passed = checks.iter().filter(|c| c.ok).count();
        let verify = VerifyReport {
            equations_matched: format!("{}/{}", report.equations_matched(), report.equations_checked.len()),
            passed,
            total: checks.len(),
            checks,
            report,
        };
        Ok((verify, cert))
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.ok {
                writeln!(out, "ok        {}", c.name).unwrap();
            } else {
                writeln!(out, "MISMATCH  {}\n          expected: {}\n          actual:   {}", c.name, c.expected, c.actual)
                    .unwrap();
            }
        }
        writeln!(out, "equations matched: {}", self.equations_matched).unwrap();
        writeln!(out, "checks passed: {}/{}", self.passed, self.total).unwrap();
        out
    }
}
