use std::collections::BTreeMap;
use std::fmt;

use crate::arith::Modulus;
use crate::Integer;

/// Whether a check is a proved result or a conjecture instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Identity,
    Theorem,
    Lemma,
    Conjecture,
}

impl CheckKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Identity => "identity",
            Self::Theorem => "theorem",
            Self::Lemma => "lemma",
            Self::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one identity or congruence instance.
///
/// For congruences `lhs` and `rhs` are canonical residues in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub check_name: String,
    pub kind: CheckKind,
    pub params: BTreeMap<String, Integer>,
    pub lhs: Integer,
    pub rhs: Integer,
    pub modulus: Option<Integer>,
    pub holds: bool,
    /// Set when the quantified set of moduli was empty.
    pub vacuous: bool,
}

pub(crate) type Params<'a> = &'a [(&'a str, i64)];

fn param_map(params: Params<'_>) -> BTreeMap<String, Integer> {
    params
        .iter()
        .map(|(k, v)| (k.to_string(), Integer::from(*v)))
        .collect()
}

impl Verdict {
    /// Exact equality `lhs = rhs`.
    pub fn exact(
        name: &str,
        kind: CheckKind,
        params: Params<'_>,
        lhs: Integer,
        rhs: Integer,
    ) -> Self {
        Self {
            check_name: name.to_string(),
            kind,
            params: param_map(params),
            holds: lhs == rhs,
            lhs,
            rhs,
            modulus: None,
            vacuous: false,
        }
    }

    /// `lhs ≡ rhs (mod modulus)`; both sides are stored reduced.
    pub fn congruence(
        name: &str,
        kind: CheckKind,
        params: Params<'_>,
        lhs: &Integer,
        rhs: &Integer,
        modulus: &Modulus<Integer>,
    ) -> Self {
        let (lhs, rhs) = (modulus.reduce(lhs), modulus.reduce(rhs));
        Self {
            check_name: name.to_string(),
            kind,
            params: param_map(params),
            holds: lhs == rhs,
            lhs,
            rhs,
            modulus: Some(modulus.value().clone()),
            vacuous: false,
        }
    }

    pub fn param(&self, name: &str) -> Option<&Integer> {
        self.params.get(name)
    }

    /// Balanced representatives `(lhs, rhs)` in `(-M/2, M/2]`, for congruences.
    pub fn balanced(&self) -> Option<(Integer, Integer)> {
        let m = Modulus::new(self.modulus.clone()?).ok()?;
        Some((m.balanced(&self.lhs), m.balanced(&self.rhs)))
    }

    /// Ordering used for reports: check name, then params in key order.
    pub fn sort_key(&self) -> (&str, Vec<(&str, &Integer)>) {
        (
            &self.check_name,
            self.params.iter().map(|(k, v)| (k.as_str(), v)).collect(),
        )
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = if self.holds { "holds" } else { "FAILS" };
        write!(f, "{} [{}] ({}): {} ", self.check_name, self.kind, params.join(", "), status)?;
        match &self.modulus {
            Some(m) => write!(f, "{} ≡ {} (mod {m})", self.lhs, self.rhs)?,
            None => write!(f, "{} = {}", self.lhs, self.rhs)?,
        }
        if self.vacuous {
            write!(f, " [vacuous]")?;
        }
        Ok(())
    }
}

/// Sorts verdicts into report order.
pub fn sort_verdicts(verdicts: &mut [Verdict]) {
    verdicts.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}
