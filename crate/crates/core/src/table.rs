//! Coefficient tables: one row per quantity, one column per monomial.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{ClosedForm, ConstantMonomial};
use crate::ipq::{ipq_final, Family};
use crate::lognm::{h_closed, i_closed, LOGNM_MAX_WEIGHT};
use crate::special::SigmaRegistry;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Inm,
    Hnm,
    Sigma,
    Ipq,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Inm => "inm",
            TableKind::Hnm => "hnm",
            TableKind::Sigma => "sigma",
            TableKind::Ipq => "ipq",
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "inm" => TableKind::Inm,
            "hnm" => TableKind::Hnm,
            "sigma" => TableKind::Sigma,
            "ipq" => TableKind::Ipq,
            _ => return Err(Error::Parse(format!("unknown table kind {s:?}"))),
        })
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub kind: TableKind,
    pub max_weight: u32,
    pub rows: Vec<(String, ClosedForm)>,
}

fn cap(max_weight: u32, limit: u32) -> Result<()> {
    if max_weight > limit {
        return Err(Error::Capacity {
            weight: max_weight as usize,
            max: limit as usize,
        });
    }
    Ok(())
}

impl Table {
    pub fn build(kind: TableKind, max_weight: u32) -> Result<Self> {
        let mut rows = Vec::new();
        match kind {
            TableKind::Inm | TableKind::Hnm => {
                cap(max_weight, LOGNM_MAX_WEIGHT)?;
                for w in 2..=max_weight {
                    for n in 1..w {
                        let m = w - n;
                        // i is symmetric, so only n ≤ m is listed
                        if kind == TableKind::Inm && n > m {
                            continue;
                        }
                        let (name, cf) = match kind {
                            TableKind::Inm => (format!("i_{n}_{m}"), i_closed(n, m)?),
                            _ => (format!("h_{n}_{m}"), h_closed(n, m)?),
                        };
                        rows.push((name, cf));
                    }
                }
            }
            TableKind::Sigma => {
                for ((n, p), cf, _) in SigmaRegistry::shared().entries() {
                    if n + p <= max_weight {
                        rows.push((format!("sigma_{n}_{p}"), cf.clone()));
                    }
                }
            }
            TableKind::Ipq => {
                cap(max_weight, LOGNM_MAX_WEIGHT)?;
                for f in Family::ALL {
                    for w in 2..=max_weight {
                        for p in 1..w {
                            let q = w - p;
                            if f.is_symmetric() && p > q {
                                continue;
                            }
                            rows.push((format!("ipq_{}_{p}_{q}", f.name()), ipq_final(f, p, q)?));
                        }
                    }
                }
            }
        }
        Ok(Self { kind, max_weight, rows })
    }

    /// Every monomial that occurs, in canonical order.
    pub fn columns(&self) -> Vec<ConstantMonomial> {
        let set: BTreeSet<ConstantMonomial> = self
            .rows
            .iter()
            .flat_map(|(_, cf)| cf.terms().map(|(m, _)| m.clone()))
            .collect();
        set.into_iter().collect()
    }

    /// Header `entry,<monomials>`; absent coefficients are written as 0.
    pub fn to_csv(&self) -> String {
        let cols = self.columns();
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once("entry".to_string()).chain(cols.iter().map(|m| m.to_string()));
        w.write_record(header).expect("in-memory write");
        for (name, cf) in &self.rows {
            let cells = std::iter::once(name.clone()).chain(cols.iter().map(|m| cf.coefficient(m).to_string()));
            w.write_record(cells).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<_> = self
            .rows
            .iter()
            .map(|(name, cf)| json!({ "entry": name, "text": cf.to_string(), "closed": cf }))
            .collect();
        let v = json!({ "kind": self.kind.name(), "max_weight": self.max_weight, "rows": rows });
        serde_json::to_string_pretty(&v).expect("json") + "\n"
    }

    /// Writes `<kind>_w<max_weight>.csv` and `.json` into `dir`, returning both paths.
    pub fn write(&self, dir: &Path) -> std::io::Result<(PathBuf, PathBuf)> {
        std::fs::create_dir_all(dir)?;
        let stem = format!("{}_w{}", self.kind.name(), self.max_weight);
        let csv = dir.join(format!("{stem}.csv"));
        let json = dir.join(format!("{stem}.json"));
        std::fs::write(&csv, self.to_csv())?;
        std::fs::write(&json, self.to_json())?;
        Ok((csv, json))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inm_layout() {
        let t = Table::build(TableKind::Inm, 6).unwrap();
        assert_eq!(t.rows.len(), 9);
        assert_eq!(t.rows[0].0, "i_1_1");
        let csv = t.to_csv();
        let header = csv.lines().next().unwrap();
        assert!(header.starts_with("entry,1,pi^2,"), "{header}");
        assert!(csv.contains("i_3_3,720,-36,"));
    }

    #[test]
    fn capacity_and_determinism() {
        assert!(matches!(Table::build(TableKind::Inm, 7), Err(Error::Capacity { .. })));
        let a = Table::build(TableKind::Sigma, 5).unwrap();
        let b = Table::build(TableKind::Sigma, 5).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.rows.iter().all(|(n, _)| n.starts_with("sigma_")));
    }
}
