//! Runs every encoded claim through the engine (cross-checked by the
//! oracle) and reports which ones the computation confirms.

mod catalog;
mod laws;

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use catalog::{catalog, Check, Identity};

use crate::error::{Error, Result};
use crate::expr::{evaluate_checked, parse_expression};
use crate::star::{BracketPair, StarConfig};
use crate::{QPoly, ENGINE_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Match,
    Mismatch,
    NotComparable,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::NotComparable => "NOT_COMPARABLE",
        }
    }

    fn rank(self) -> u8 {
        match self {
            Status::Mismatch => 0,
            Status::Match => 1,
            Status::NotComparable => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub id: String,
    pub paper_location: String,
    pub claim_text: String,
    pub engine_value: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    pub not_comparable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub engine_version: String,
    pub summary: Summary,
    pub records: Vec<IdentityRecord>,
}

impl DiscrepancyReport {
    pub fn new(mut records: Vec<IdentityRecord>) -> Self {
        records.sort_by(|a, b| compare_ids(&a.id, &b.id));
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Match => summary.matched += 1,
                Status::Mismatch => summary.mismatch += 1,
                Status::NotComparable => summary.not_comparable += 1,
            }
        }
        Self {
            engine_version: ENGINE_VERSION.to_string(),
            summary,
            records,
        }
    }

    pub fn record(&self, id: &str) -> Option<&IdentityRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Orders ids like `V2.x < V10.y` and `V7.ab.2 < V7.ab.10`.
pub fn compare_ids(a: &str, b: &str) -> Ordering {
    fn key(s: &str) -> Vec<(u64, String)> {
        s.trim_start_matches('V')
            .split('.')
            .map(|part| match part.parse::<u64>() {
                Ok(n) => (n, String::new()),
                Err(_) => (u64::MAX, part.to_string()),
            })
            .collect()
    }
    key(a).cmp(&key(b))
}

pub fn identity_ids() -> Vec<String> {
    let mut ids: Vec<String> = catalog().into_iter().map(|i| i.id).collect();
    ids.sort_by(|a, b| compare_ids(a, b));
    ids
}

fn eval_text(src: &str) -> Result<QPoly> {
    evaluate_checked(&parse_expression(src)?, &StarConfig::formal())
}

fn instantiate(template: &str, operands: &[&str], pair: Option<BracketPair>) -> String {
    let mut s = template.to_string();
    if let Some(p) = pair {
        s = s.replace("{p}", p.name());
    }
    for (n, op) in operands.iter().enumerate() {
        s = s.replace(&format!("{{{n}}}"), op);
    }
    s
}

fn tuples(operands: &[&'static str], arity: usize) -> Vec<Vec<&'static str>> {
    let mut out: Vec<Vec<&str>> = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                operands.iter().map(move |op| {
                    let mut v = prefix.clone();
                    v.push(op);
                    v
                })
            })
            .collect();
    }
    out
}

fn evaluate_identity(identity: &Identity) -> Result<IdentityRecord> {
    let mut record = IdentityRecord {
        id: identity.id.clone(),
        paper_location: identity.location.to_string(),
        claim_text: identity.claim.clone(),
        engine_value: String::new(),
        status: Status::NotComparable,
        witness: None,
    };
    match &identity.check {
        Check::Equal { lhs, rhs } => {
            let (l, r) = (eval_text(lhs)?, eval_text(rhs)?);
            record.engine_value = l.to_string();
            if l == r {
                record.status = Status::Match;
            } else {
                record.status = Status::Mismatch;
                record.witness = Some(format!("lhs - rhs = {}", &l - &r));
            }
        }
        Check::NotEqual { lhs, rhs } => {
            let (l, r) = (eval_text(lhs)?, eval_text(rhs)?);
            record.engine_value = l.to_string();
            if l != r {
                record.status = Status::Match;
                record.witness = Some(format!("lhs - rhs = {}", &l - &r));
            } else {
                record.status = Status::Mismatch;
                record.witness = Some("both sides are identical".into());
            }
        }
        Check::Exists {
            lhs,
            rhs,
            arity,
            operands,
            over_pairs,
        } => {
            let pairs: Vec<Option<BracketPair>> = if *over_pairs {
                BracketPair::ALL.into_iter().map(Some).collect()
            } else {
                vec![None]
            };
            let mut tried = 0usize;
            for ops in tuples(operands, *arity) {
                for &pair in &pairs {
                    tried += 1;
                    let l_src = instantiate(lhs, &ops, pair);
                    let r_src = instantiate(rhs, &ops, pair);
                    let (l, r) = (eval_text(&l_src)?, eval_text(&r_src)?);
                    if l != r {
                        record.status = Status::Match;
                        record.engine_value = format!("{l_src} = {l}");
                        record.witness = Some(format!("{l_src} - ({r_src}) = {}", &l - &r));
                        return Ok(record);
                    }
                }
            }
            record.status = Status::Mismatch;
            record.engine_value = format!(
                "equality holds on all {tried} instances over {{{}}}",
                operands.join(", ")
            );
        }
        Check::Law(law) => {
            let outcome = laws::check(law)?;
            record.status = if outcome.holds {
                Status::Match
            } else {
                Status::Mismatch
            };
            record.engine_value = outcome.engine_value;
            record.witness = outcome.witness;
        }
        Check::Opaque => {
            record.engine_value = "no encodable value".into();
        }
    }
    Ok(record)
}

pub fn run_identity(id: &str) -> Result<IdentityRecord> {
    let identity =
        catalog()
            .into_iter()
            .find(|i| i.id == id)
            .ok_or_else(|| Error::UnknownIdentity {
                id: id.to_string(),
                valid: identity_ids(),
            })?;
    evaluate_identity(&identity)
}

/// Runs every identity; identities are spread over worker threads and the
/// report is reassembled in id order.
pub fn run_all() -> Result<DiscrepancyReport> {
    let identities = catalog();
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(identities.len())
        .max(1);
    let results: Vec<Result<IdentityRecord>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let ids = &identities;
                scope.spawn(move || {
                    ids.iter()
                        .enumerate()
                        .filter(|(n, _)| n % workers == w)
                        .map(|(n, i)| (n, evaluate_identity(i)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut all: Vec<(usize, Result<IdentityRecord>)> = handles
            .into_iter()
            .flat_map(|h| h.join().expect("verifier worker panicked"))
            .collect();
        all.sort_by_key(|(n, _)| *n);
        all.into_iter().map(|(_, r)| r).collect()
    });
    Ok(DiscrepancyReport::new(
        results.into_iter().collect::<Result<Vec<_>>>()?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn group_of(id: &str) -> &str {
    id.split('.').next().unwrap_or(id)
}

pub fn render_report(report: &DiscrepancyReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn render_text(report: &DiscrepancyReport) -> String {
    let mut out = String::new();
    let s = &report.summary;
    let _ = writeln!(out, "{}", report.engine_version);
    let _ = writeln!(
        out,
        "MATCH {}  MISMATCH {}  NOT_COMPARABLE {}",
        s.matched, s.mismatch, s.not_comparable
    );
    let mut groups: Vec<&str> = Vec::new();
    for r in &report.records {
        let g = group_of(&r.id);
        if groups.last() != Some(&g) {
            groups.push(g);
        }
    }
    for g in groups {
        let mut records: Vec<&IdentityRecord> = report
            .records
            .iter()
            .filter(|r| group_of(&r.id) == g)
            .collect();
        records.sort_by(|a, b| {
            a.status
                .rank()
                .cmp(&b.status.rank())
                .then_with(|| compare_ids(&a.id, &b.id))
        });
        let _ = writeln!(out, "\n[{g}] {}", records[0].paper_location);
        for r in records {
            let _ = writeln!(out, "  {:<14} {}", r.status.label(), r.id);
            let _ = writeln!(out, "      claim:   {}", r.claim_text);
            let _ = writeln!(out, "      engine:  {}", r.engine_value);
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
        }
    }
    out
}
