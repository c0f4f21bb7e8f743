//! Verification harness: exact inequality reports, the symbolic constants
//! ledger, anchored counting experiments, and the property suites the
//! acceptance gate runs.
//!
//! Every check compares fully evaluated integers. A report never rounds:
//! both sides of each inequality are carried as big integers and serialized
//! as decimal strings.

pub mod constants;
pub mod procedures;
pub mod suites;
pub mod verify;

pub use constants::{theorem_constants, ConstantsLedger};
pub use procedures::{
    dichotomy_experiment, pick_anchor, weaker_procedure, AnchorChoice, DichotomyBranch,
    DichotomyOutcome, WeakerOutcome, WeakerRound, WeakerRun,
};
pub use verify::{verify_degenerate_bound, verify_sum_bound, verify_triangle_bound};

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::pointset::PointSet;

/// Comparison direction of one exact check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    fn eval(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

fn decimal<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// One comparison with both sides fully evaluated.
#[derive(Clone, Debug, Serialize)]
pub struct IneqCheck {
    pub label: String,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    pub relation: Relation,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
    pub holds: bool,
}

impl IneqCheck {
    pub fn new(label: impl Into<String>, lhs: BigInt, relation: Relation, rhs: BigInt) -> Self {
        let holds = relation.eval(&lhs, &rhs);
        IneqCheck {
            label: label.into(),
            lhs,
            relation,
            rhs,
            holds,
        }
    }
}

impl fmt::Display for IneqCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.label,
            self.lhs,
            self.relation,
            self.rhs,
            if self.holds { "ok" } else { "VIOLATED" }
        )
    }
}

/// Outcome of one verification: the statement checked, the instance it ran
/// on, and the exact value of every recorded comparison. `checked` counts
/// all comparisons performed, which can exceed `checks.len()` when only
/// worst cases and violations are recorded individually.
#[derive(Clone, Debug, Serialize)]
pub struct VerifierReport {
    pub statement: String,
    pub instance: String,
    pub checks: Vec<IneqCheck>,
    pub checked: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

impl VerifierReport {
    pub fn new(statement: impl Into<String>, instance: impl Into<String>) -> Self {
        VerifierReport {
            statement: statement.into(),
            instance: instance.into(),
            checks: Vec::new(),
            checked: 0,
            pass: true,
            runtime_ms: None,
        }
    }

    /// Records a check and counts it.
    pub fn push(&mut self, check: IneqCheck) {
        self.pass &= check.holds;
        self.checked += 1;
        self.checks.push(check);
    }

    /// Records a check already counted through `tally`.
    pub fn record(&mut self, check: IneqCheck) {
        self.pass &= check.holds;
        self.checks.push(check);
    }

    /// Counts comparisons whose individual values are not worth keeping.
    pub fn tally(&mut self, comparisons: u64, all_hold: bool) {
        self.checked += comparisons;
        self.pass &= all_hold;
    }

    /// Folds another report into this one, keeping its rows.
    pub fn absorb(&mut self, other: VerifierReport) {
        self.checked += other.checked;
        self.pass &= other.pass;
        self.checks.extend(other.checks);
    }

    pub fn strip_runtime(&mut self) {
        self.runtime_ms = None;
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization is infallible")
    }
}

/// Writes the instance behind a counterexample to the system temp
/// directory: the point set as `.gf2set` and the context as JSON, named by
/// a content hash so identical instances collide rather than accumulate.
/// Returns a one-line description for embedding in the error; dump failures
/// degrade to an inline summary instead of masking the counterexample.
pub(crate) fn dump_instance(tag: &str, x: &PointSet, context: &serde_json::Value) -> String {
    let body = x.to_gf2set_string();
    let hash = fnv1a(body.as_bytes());
    let dir = std::env::temp_dir();
    let set_path = dir.join(format!("{tag}-{hash:016x}.gf2set"));
    let json_path = dir.join(format!("{tag}-{hash:016x}.json"));
    let json_body = serde_json::to_string_pretty(context).unwrap_or_else(|e| e.to_string());
    match std::fs::write(&set_path, &body).and_then(|()| std::fs::write(&json_path, &json_body)) {
        Ok(()) => format!(
            "instance dumped to {} and {}",
            set_path.display(),
            json_path.display()
        ),
        Err(e) => format!(
            "instance dump failed ({e}); inline: n = {}, |X| = {}, context = {json_body}",
            x.ambient_dim(),
            x.len()
        ),
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn relations_evaluate() {
        let one = BigInt::one();
        let zero = BigInt::zero();
        assert!(IneqCheck::new("ge", one.clone(), Relation::Ge, zero.clone()).holds);
        assert!(!IneqCheck::new("le", one.clone(), Relation::Le, zero.clone()).holds);
        assert!(IneqCheck::new("eq", zero.clone(), Relation::Eq, zero.clone()).holds);
    }

    #[test]
    fn report_tracks_pass_and_count() {
        let mut report = VerifierReport::new("s", "i");
        report.push(IneqCheck::new("a", BigInt::one(), Relation::Ge, BigInt::zero()));
        assert!(report.pass);
        report.tally(10, true);
        assert_eq!(report.checked, 11);
        report.push(IneqCheck::new("b", BigInt::zero(), Relation::Ge, BigInt::one()));
        assert!(!report.pass);
        assert_eq!(report.checked, 12);
    }

    #[test]
    fn json_uses_decimal_strings_and_skips_missing_runtime() {
        let mut report = VerifierReport::new("statement", "instance");
        report.push(IneqCheck::new(
            "big",
            BigInt::one() << 100,
            Relation::Ge,
            BigInt::zero(),
        ));
        let json = report.to_json();
        assert_eq!(
            json["checks"][0]["lhs"],
            serde_json::json!("1267650600228229401496703205376")
        );
        assert_eq!(json["checks"][0]["relation"], serde_json::json!(">="));
        assert!(json.get("runtime_ms").is_none());
        assert_eq!(json["pass"], serde_json::json!(true));
    }

    #[test]
    fn dump_writes_both_files() {
        let x = crate::pointset::projective(3).unwrap();
        let note = dump_instance("harness-test", &x, &serde_json::json!({"k": 5}));
        assert!(note.contains("harness-test"));
        assert!(note.contains(".gf2set"));
    }
}
