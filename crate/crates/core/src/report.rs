//! Verification records and tolerance configuration.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ClosedForm, NumericContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub identity_id: String,
    /// Short description of where the identity comes from.
    pub location: String,
    pub symbolic: Option<ClosedForm>,
    pub oracle_value: f64,
    pub closed_value: f64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

/// Tolerance scale plus per-identity overrides, read from `key = value` lines.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub tol_scale: f64,
    pub overrides: BTreeMap<String, f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tol_scale: 1.0,
            overrides: BTreeMap::new(),
        }
    }
}

impl VerifyConfig {
    /// `tol_scale = 10` sets the scale, any other key overrides that identity's tolerance.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(src: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (no, line) in src.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", no + 1)))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("config line {}: bad number {:?}", no + 1, v.trim())))?;
            if !(v > 0.0) {
                return Err(Error::Parse(format!(
                    "config line {}: tolerance must be positive",
                    no + 1
                )));
            }
            match k.trim() {
                "tol_scale" => cfg.tol_scale = v,
                key => {
                    cfg.overrides.insert(key.to_string(), v);
                }
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let src =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&src)
    }

    pub fn tolerance(&self, id: &str, default: f64) -> f64 {
        self.overrides.get(id).copied().unwrap_or(default) * self.tol_scale
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
    pub summary: Summary,
    #[serde(skip)]
    config: VerifyConfig,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::with_config(VerifyConfig::default())
    }

    pub fn with_config(config: VerifyConfig) -> Self {
        Self {
            entries: Vec::new(),
            summary: Summary::default(),
            config,
        }
    }

    fn push(&mut self, mut entry: ReportEntry) {
        entry.status = if entry.abs_error <= entry.tolerance {
            Status::Pass
        } else {
            Status::Fail
        };
        match entry.status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
        }
        self.entries.push(entry);
    }

    /// Compares a closed or computed value against an independent oracle.
    pub fn value(
        &mut self,
        id: &str,
        location: &str,
        symbolic: Option<&ClosedForm>,
        closed_value: f64,
        oracle_value: f64,
        default_tol: f64,
    ) {
        let abs_error = (closed_value - oracle_value).abs();
        self.push(ReportEntry {
            identity_id: id.to_string(),
            location: location.to_string(),
            symbolic: symbolic.cloned(),
            oracle_value,
            closed_value,
            abs_error: if abs_error.is_nan() { f64::INFINITY } else { abs_error },
            tolerance: self.config.tolerance(id, default_tol),
            status: Status::Fail,
            note: None,
        });
    }

    /// A closed form evaluated in `ctx` against an oracle; evaluation errors count as failures.
    pub fn closed(
        &mut self,
        id: &str,
        location: &str,
        closed: &ClosedForm,
        oracle: f64,
        ctx: &NumericContext,
        tol: f64,
    ) {
        match ctx.eval(closed) {
            Ok(v) => self.value(id, location, Some(closed), v, oracle, tol),
            Err(e) => self.failure(id, location, &e.to_string()),
        }
    }

    /// An exact identity: passes iff `residual` is the zero form.
    pub fn exact(&mut self, id: &str, location: &str, residual: &ClosedForm) {
        let abs_error = if residual.is_zero() {
            0.0
        } else {
            NumericContext::shared()
                .eval(residual)
                .map(|v| v.abs().max(f64::MIN_POSITIVE))
                .unwrap_or(f64::INFINITY)
        };
        self.push(ReportEntry {
            identity_id: id.to_string(),
            location: location.to_string(),
            symbolic: Some(residual.clone()),
            oracle_value: 0.0,
            closed_value: abs_error,
            abs_error,
            tolerance: 0.0,
            status: Status::Fail,
            note: (!residual.is_zero()).then(|| format!("nonzero residual {residual}")),
        });
    }

    /// Records a check that could not be carried out.
    pub fn failure(&mut self, id: &str, location: &str, message: &str) {
        self.push(ReportEntry {
            identity_id: id.to_string(),
            location: location.to_string(),
            symbolic: None,
            oracle_value: f64::NAN,
            closed_value: f64::NAN,
            abs_error: f64::INFINITY,
            tolerance: self.config.tolerance(id, 0.0),
            status: Status::Fail,
            note: Some(message.to_string()),
        });
    }

    /// Attaches a note to the most recent entry.
    pub fn note(&mut self, text: impl Into<String>) {
        if let Some(e) = self.entries.last_mut() {
            e.note = Some(text.into());
        }
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for e in other.entries {
            self.push(e);
        }
    }

    pub fn sort(&mut self) {
        self.entries.sort_by(|a, b| a.identity_id.cmp(&b.identity_id));
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!(
                "{status} {} err={:.3e} tol={:.1e}",
                e.identity_id, e.abs_error, e.tolerance
            ));
            if let Some(n) = &e.note {
                out.push_str(&format!("  ({n})"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed\n",
            self.summary.passed, self.summary.failed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_tolerance() {
        let mut r = VerificationReport::new();
        r.value("a", "x", None, 1.0, 1.0 + 1e-12, 1e-10);
        r.value("b", "x", None, 1.0, 1.1, 1e-10);
        r.exact("c", "x", &ClosedForm::zero());
        r.exact("d", "x", &ClosedForm::pi());
        assert_eq!(r.summary.passed, 2);
        assert_eq!(r.summary.failed, 2);
        assert_eq!(r.entries[3].status, Status::Fail);
    }

    #[test]
    fn config_parsing() {
        let cfg = VerifyConfig::parse("# comment\ntol_scale = 10\nsums.splus.2 = 1e-8\n").unwrap();
        assert_eq!(cfg.tolerance("sums.splus.2", 1e-10), 1e-7);
        assert_eq!(cfg.tolerance("other", 1e-10), 1e-9);
        assert!(VerifyConfig::parse("x 1").is_err());
        assert!(VerifyConfig::parse("x = -1").is_err());
    }
}
