//! JSON brace files and verification reports.

use serde::{Deserialize, Serialize};

use crate::bicrossed::BicrossedData;
use crate::brace::SkewBrace;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::families::{Family1Params, Family2Params};
use crate::group::GroupTable;
use crate::harness::{TheoremReport, Witness};

pub const FORMAT_VERSION: u32 = 1;
pub const SCHEMA_VERSION: u32 = 1;

/// Family parameters a brace was generated from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilyParams {
    Family1 {
        p: u64,
        m: u32,
        n: u32,
        k: u32,
        l: u32,
    },
    Family2 {
        p: u64,
        m: usize,
        n: usize,
        /// Binary rows of `P`, e.g. `"01;11"`.
        matrix: String,
        eps: Vec<i8>,
    },
}

impl From<&Family1Params> for FamilyParams {
    fn from(p: &Family1Params) -> Self {
        FamilyParams::Family1 {
            p: p.p,
            m: p.m,
            n: p.n,
            k: p.k,
            l: p.l,
        }
    }
}

impl From<&Family2Params> for FamilyParams {
    fn from(p: &Family2Params) -> Self {
        FamilyParams::Family2 {
            p: p.p,
            m: p.m(),
            n: p.n,
            matrix: p.matrix.row_strings().join(";"),
            eps: p.eps.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSubset {
    pub name: String,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub params: FamilyParams,
    pub subsets: Vec<NamedSubset>,
}

impl Provenance {
    /// `B×1` and `1×C` of a bicrossed brace.
    pub fn bicrossed(params: FamilyParams, data: &BicrossedData) -> Self {
        Provenance {
            params,
            subsets: vec![
                NamedSubset {
                    name: "B×1".into(),
                    elements: data.b_factor().to_vec(),
                },
                NamedSubset {
                    name: "1×C".into(),
                    elements: data.c_factor().to_vec(),
                },
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceFile {
    pub format_version: u32,
    pub label: String,
    pub order: usize,
    pub dot_table: Vec<u32>,
    pub circle_table: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl BraceFile {
    pub fn from_brace(br: &SkewBrace, provenance: Option<Provenance>) -> Self {
        BraceFile {
            format_version: FORMAT_VERSION,
            label: br.label().to_string(),
            order: br.order(),
            dot_table: br.dot().table().to_vec(),
            circle_table: br.circle().table().to_vec(),
            provenance,
        }
    }

    /// Compact JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("brace files always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: BraceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {}; expected {FORMAT_VERSION}",
                file.format_version
            )));
        }
        let n = file.order;
        for (name, table) in [("dot_table", &file.dot_table), ("circle_table", &file.circle_table)] {
            if n.checked_mul(n) != Some(table.len()) {
                return Err(Error::Parse(format!(
                    "{name} has {} entries; order {n} needs {}",
                    table.len(),
                    n.saturating_mul(n)
                )));
            }
        }
        if let Some(prov) = &file.provenance {
            for s in &prov.subsets {
                if let Some(&x) = s.elements.iter().find(|&&x| x >= n) {
                    return Err(Error::Parse(format!("subset {} contains {x} ≥ order {n}", s.name)));
                }
            }
        }
        Ok(file)
    }

    /// Full group and brace validation.
    pub fn to_brace(&self) -> Result<SkewBrace> {
        let dot = GroupTable::from_table(self.order, self.dot_table.clone(), format!("{}.dot", self.label))?;
        let circle = GroupTable::from_table(self.order, self.circle_table.clone(), format!("{}.circle", self.label))?;
        Ok(SkewBrace::new(dot, circle)?.with_label(self.label.clone()))
    }

    pub fn subsets(&self) -> Vec<(String, ElemSet)> {
        self.provenance
            .iter()
            .flat_map(|p| &p.subsets)
            .map(|s| (s.name.clone(), ElemSet::from_elems(self.order, s.elements.iter().copied())))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
    RedAlert,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failed_hypotheses: Vec<String>,
    pub conclusion_holds: bool,
}

impl CheckRecord {
    pub fn from_report(scope: &str, rep: &TheoremReport) -> Self {
        let status = match (rep.applicable, rep.conclusion.holds) {
            (true, true) => CheckStatus::Pass,
            (true, false) => CheckStatus::RedAlert,
            (false, _) => CheckStatus::NotApplicable,
        };
        let witness = rep.conclusion.witness.clone().or_else(|| {
            rep.hypotheses.iter().find(|h| !h.holds).and_then(|h| h.witness.clone())
        });
        CheckRecord {
            id: if scope.is_empty() {
                rep.id.clone()
            } else {
                format!("{scope}: {}", rep.id)
            },
            status,
            witness,
            failed_hypotheses: rep.failed_hypotheses().into_iter().map(String::from).collect(),
            conclusion_holds: rep.conclusion.holds,
        }
    }

    /// A plain pass/fail fact with no hypotheses.
    pub fn fact(id: impl Into<String>, witness: Option<Witness>) -> Self {
        CheckRecord {
            id: id.into(),
            status: if witness.is_none() { CheckStatus::Pass } else { CheckStatus::Fail },
            conclusion_holds: witness.is_none(),
            witness,
            failed_hypotheses: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub checks: Vec<CheckRecord>,
    pub elapsed_ms: u64,
}

impl ReportFile {
    pub fn new(command: Vec<String>, checks: Vec<CheckRecord>, elapsed_ms: u64) -> Self {
        ReportFile {
            schema_version: SCHEMA_VERSION,
            command,
            checks,
            elapsed_ms,
        }
    }

    pub fn red_alerts(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == CheckStatus::RedAlert)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::RedAlert | CheckStatus::Fail))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family1_data, Family1Params};

    #[test]
    fn round_trip_is_byte_identical() {
        let params = Family1Params::new(3, 2, 2, 1, 1).unwrap();
        let data = family1_data(&params).unwrap();
        let br = data.build().unwrap();
        let file = BraceFile::from_brace(&br, Some(Provenance::bicrossed((&params).into(), &data)));
        let text = file.to_json();
        let back = BraceFile::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        let rebuilt = back.to_brace().unwrap();
        assert_eq!(rebuilt.dot().table(), br.dot().table());
        assert_eq!(rebuilt.circle().table(), br.circle().table());
        assert_eq!(back.subsets().len(), 2);
    }

    #[test]
    fn truncated_and_malformed_files() {
        let br = SkewBrace::trivial(&GroupTable::cyclic(3).unwrap());
        let text = BraceFile::from_brace(&br, None).to_json();
        assert!(matches!(BraceFile::from_json(&text[..text.len() / 2]), Err(Error::Parse(_))));
        let short = text.replace("\"order\":3", "\"order\":4");
        assert!(matches!(BraceFile::from_json(&short), Err(Error::Parse(_))));
        let version = text.replace("\"format_version\":1", "\"format_version\":9");
        assert!(matches!(BraceFile::from_json(&version), Err(Error::Parse(_))));
    }

    #[test]
    fn corrupted_entry_fails_validation() {
        let br = SkewBrace::trivial(&GroupTable::cyclic(4).unwrap());
        let mut file = BraceFile::from_brace(&br, None);
        file.circle_table[5] = 3;
        assert!(file.to_brace().is_err());
    }
}
