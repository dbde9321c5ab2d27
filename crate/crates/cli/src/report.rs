//! The JSON/CSV report emitted by `verify` and `scan`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use franel_core::verdict::sort_verdicts;
use franel_core::{CheckKind, Verdict};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Machine-readable corrections applied to the source formulas.
pub mod errata {
    pub const MULTINOMIAL_FIRST_POWER: &str = "M_{m,n}^(1) is listed as m^r in the source; it equals m^n \
        (the number of words of length n over m letters), which is what the alternating identity \
        sum_{k<n} (-1)^k ((m+1)k+m) M_{m,k}^(1) = (-1)^(n-1) m^n n requires. Implemented as m^n.";
    pub const DECOMPOSITION_UPPER_LIMIT: &str = "The mod p^3 reduction of the p^5 theorem writes its sums \
        with upper limit n where p is meant; checked with upper limit p.";
    pub const JARVIS_VERRILL_ODD_PRIME: &str = "f_n = (-8)^n f_{p-1-n} (mod p) is stated for every prime p, \
        but fails at p = 2 (f_0 = 1, f_1 = 2); checked for odd primes only.";
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub check_name: String,
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub modulus: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs_balanced: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs_balanced: Option<String>,
    pub holds: bool,
    pub vacuous: bool,
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        let balanced = v.balanced();
        Self {
            check_name: v.check_name.clone(),
            kind: v.kind.as_str().to_string(),
            params: v.params.iter().map(|(k, x)| (k.clone(), x.to_string())).collect(),
            lhs: v.lhs.to_string(),
            rhs: v.rhs.to_string(),
            modulus: v.modulus.as_ref().map(ToString::to_string),
            lhs_balanced: balanced.as_ref().map(|b| b.0.to_string()),
            rhs_balanced: balanced.as_ref().map(|b| b.1.to_string()),
            holds: v.holds,
            vacuous: v.vacuous,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: u64,
    pub failed: u64,
    pub vacuous: u64,
    /// Failures among identities, theorems and lemmas. Nonzero means a bug.
    pub failed_proved: u64,
    pub failed_conjectures: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub suite: String,
    pub tool_version: String,
    /// Unix seconds; omitted in stable mode so reports compare byte for byte.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generated_at: Option<u64>,
    pub parameter_grid: BTreeMap<String, String>,
    pub results: Vec<VerdictRecord>,
    pub counterexamples: Vec<VerdictRecord>,
    pub summary: Summary,
    pub errata_notes: Vec<String>,
    /// Named integer series produced along the way (e.g. partial sums), as decimal strings.
    pub data: BTreeMap<String, Vec<String>>,
}

impl ScanReport {
    pub fn new(suite: &str, parameter_grid: BTreeMap<String, String>, mut verdicts: Vec<Verdict>) -> Self {
        sort_verdicts(&mut verdicts);
        let mut summary = Summary {
            total: verdicts.len() as u64,
            ..Summary::default()
        };
        for v in &verdicts {
            if v.vacuous {
                summary.vacuous += 1;
            }
            if !v.holds {
                summary.failed += 1;
                if v.kind == CheckKind::Conjecture {
                    summary.failed_conjectures += 1;
                } else {
                    summary.failed_proved += 1;
                }
            }
        }
        let results: Vec<VerdictRecord> = verdicts.iter().map(VerdictRecord::from).collect();
        let counterexamples = results.iter().filter(|r| !r.holds).cloned().collect();
        Self {
            suite: suite.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            generated_at: None,
            parameter_grid,
            results,
            counterexamples,
            summary,
            errata_notes: Vec::new(),
            data: BTreeMap::new(),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `check_name,kind,params,modulus,lhs_residue,rhs_residue,holds`, params as `k=v;k=v`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check_name,kind,params,modulus,lhs_residue,rhs_residue,holds\n");
        for r in &self.results {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.check_name,
                r.kind,
                params.join(";"),
                r.modulus.as_deref().unwrap_or(""),
                r.lhs,
                r.rhs,
                r.holds
            );
        }
        out
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{}: {} checks, {} failed ({} proved-result failures, {} conjecture counterexamples), {} vacuous",
            self.suite, s.total, s.failed, s.failed_proved, s.failed_conjectures, s.vacuous
        );
        for c in &self.counterexamples {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "FAIL {} [{}] ({}): {} vs {} mod {}",
                c.check_name,
                c.kind,
                params.join(", "),
                c.lhs,
                c.rhs,
                c.modulus.as_deref().unwrap_or("-")
            );
        }
        for note in &self.errata_notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use franel_core::{IntModulus, Integer};

    fn sample() -> Vec<Verdict> {
        let m = IntModulus::new(Integer::from(8)).unwrap();
        vec![
            Verdict::congruence("b", CheckKind::Conjecture, &[("n", 10)], &Integer::from(3), &Integer::from(0), &m),
            Verdict::exact("a", CheckKind::Identity, &[("n", 2)], Integer::from(5), Integer::from(5)),
            Verdict::congruence("b", CheckKind::Conjecture, &[("n", 9)], &Integer::from(16), &Integer::from(0), &m),
        ]
    }

    #[test]
    fn summary_and_order() {
        let r = ScanReport::new("t", BTreeMap::new(), sample());
        assert_eq!(r.summary.total, 3);
        assert_eq!(r.summary.failed, 1);
        assert_eq!(r.summary.failed_conjectures, 1);
        assert_eq!(r.summary.failed_proved, 0);
        let order: Vec<_> = r.results.iter().map(|x| (x.check_name.as_str(), x.params["n"].as_str())).collect();
        assert_eq!(order, vec![("a", "2"), ("b", "9"), ("b", "10")]);
        assert_eq!(r.counterexamples.len(), 1);
        assert_eq!(r.counterexamples[0].lhs_balanced.as_deref(), Some("3"));
    }

    #[test]
    fn json_round_trips_and_csv_shape() {
        let r = ScanReport::new("t", BTreeMap::new(), sample());
        let back: ScanReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let csv = r.to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "a,identity,n=2,,5,5,true");
        assert_eq!(lines[3], "b,conjecture,n=10,8,3,0,false");
        assert!(r.to_plain().contains("FAIL b [conjecture] (n=10)"));
    }

    #[test]
    fn stable_mode_omits_timestamp() {
        let mut r = ScanReport::new("t", BTreeMap::new(), vec![]);
        assert!(!r.to_json().contains("generated_at"));
        r.generated_at = Some(1);
        assert!(r.to_json().contains("\"generated_at\": 1"));
    }
}
