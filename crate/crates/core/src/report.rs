use serde::Serialize;

/// Schema tag embedded in every JSON document the crate emits.
pub const SCHEMA_VERSION: &str = "bettilab/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `computed <= bound`
    AtMost,
    /// `computed >= bound`
    AtLeast,
    /// `computed == bound`
    Equal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    HoldsWithEquality,
    Violated,
}

/// One bound-versus-value check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub label: String,
    pub relation: Relation,
    pub bound: i64,
    pub computed: i64,
    pub verdict: Verdict,
}

impl Comparison {
    pub fn new(label: impl Into<String>, relation: Relation, bound: i64, computed: i64) -> Self {
        let verdict = match relation {
            _ if computed == bound => Verdict::HoldsWithEquality,
            Relation::AtMost if computed < bound => Verdict::Holds,
            Relation::AtLeast if computed > bound => Verdict::Holds,
            _ => Verdict::Violated,
        };
        Comparison {
            label: label.into(),
            relation,
            bound,
            computed,
            verdict,
        }
    }

    pub fn is_strict(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Outcome of verifying a bound, a consistency check, or a search claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: String,
    pub theorem: String,
    /// Set for open conjectures: a pass is evidence, not a proof.
    pub evidence_only: bool,
    pub comparisons: Vec<Comparison>,
    pub notes: Vec<String>,
    pub witnesses: Vec<serde_json::Value>,
}

impl Report {
    pub fn new(theorem: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION.to_string(),
            theorem: theorem.into(),
            evidence_only: false,
            comparisons: Vec::new(),
            notes: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Comparison) {
        self.comparisons.push(c);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Violated if any comparison is; equality if all are equalities; else holds.
    /// A report without comparisons holds vacuously.
    pub fn verdict(&self) -> Verdict {
        if self.comparisons.iter().any(|c| c.verdict == Verdict::Violated) {
            Verdict::Violated
        } else if !self.comparisons.is_empty()
            && self
                .comparisons
                .iter()
                .all(|c| c.verdict == Verdict::HoldsWithEquality)
        {
            Verdict::HoldsWithEquality
        } else {
            Verdict::Holds
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() != Verdict::Violated
    }

    pub fn violations(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons
            .iter()
            .filter(|c| c.verdict == Verdict::Violated)
    }

    /// Plain-text rendering, one line per comparison.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let label = if self.evidence_only { " (evidence)" } else { "" };
        out.push_str(&format!(
            "{}{}: {}\n",
            self.theorem,
            label,
            verdict_word(self.verdict())
        ));
        for c in &self.comparisons {
            let rel = match c.relation {
                Relation::AtMost => "<=",
                Relation::AtLeast => ">=",
                Relation::Equal => "==",
            };
            out.push_str(&format!(
                "  {}: {} {} {} [{}]\n",
                c.label,
                c.computed,
                rel,
                c.bound,
                verdict_word(c.verdict)
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::HoldsWithEquality => "holds with equality",
        Verdict::Violated => "VIOLATED",
    }
}
