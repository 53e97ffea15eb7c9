//! Structured verification reports shared by the pipelines and the CLI.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Postcondition {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Postcondition {
    /// Passes iff there is no witness.
    pub fn check(name: impl Into<String>, witness: Option<String>) -> Self {
        Postcondition {
            name: name.into(),
            pass: witness.is_none(),
            witness,
        }
    }

    pub fn holds(name: impl Into<String>) -> Self {
        Self::check(name, None)
    }

    /// Passing postcondition that still records its evidence.
    pub fn holds_with(name: impl Into<String>, evidence: impl Into<String>) -> Self {
        Postcondition {
            name: name.into(),
            pass: true,
            witness: Some(evidence.into()),
        }
    }

    pub fn fails(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::check(name, Some(witness.into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageReport {
    pub stage: String,
    pub postconditions: Vec<Postcondition>,
}

impl StageReport {
    pub fn new(stage: impl Into<String>) -> Self {
        StageReport {
            stage: stage.into(),
            postconditions: Vec::new(),
        }
    }

    pub fn push(&mut self, p: Postcondition) {
        self.postconditions.push(p);
    }

    pub fn check(&mut self, name: impl Into<String>, witness: Option<String>) -> bool {
        let p = Postcondition::check(name, witness);
        let pass = p.pass;
        self.push(p);
        pass
    }

    pub fn pass(&self) -> bool {
        self.postconditions.iter().all(|p| p.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Postcondition> {
        self.postconditions.iter().find(|p| p.name == name)
    }

    pub fn first_failure(&self) -> Option<&Postcondition> {
        self.postconditions.iter().find(|p| !p.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionCheck {
    pub space: String,
    pub algebra: String,
    pub dimension_expected: usize,
    pub dimension_computed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub seed: u64,
    pub degree: u32,
    pub stages: Vec<StageReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dimensions: Vec<DimensionCheck>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, instance: Option<String>, seed: u64, degree: u32) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            instance,
            seed,
            degree,
            stages: Vec::new(),
            dimensions: Vec::new(),
            pass: true,
        }
    }

    pub fn push_stage(&mut self, stage: StageReport) {
        self.pass &= stage.pass();
        self.stages.push(stage);
    }

    pub fn push_dimension(&mut self, check: DimensionCheck) {
        self.pass &= check.pass;
        self.dimensions.push(check);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_postcondition_fails_the_report() {
        let mut stage = StageReport::new("s");
        assert!(stage.check("ok", None));
        assert!(!stage.check("bad", Some("x = 1".into())));
        assert_eq!(stage.first_failure().unwrap().name, "bad");
        let mut report = Report::new("axioms", None, 0, 2);
        report.push_stage(stage);
        assert!(!report.pass);
    }

    #[test]
    fn json_omits_empty_fields() {
        let mut report = Report::new("prolong", None, 3, 2);
        report.push_stage(StageReport::new("empty"));
        let json = report.to_json();
        assert!(json.ends_with("}\n"));
        assert!(!json.contains("witness"));
        assert!(!json.contains("dimensions"));
        assert!(!json.contains("instance"));
        assert!(json.contains("\"schema_version\": 1"));
    }

    #[test]
    fn dimension_mismatch_fails() {
        let mut report = Report::new("prolong", None, 0, 2);
        report.push_dimension(DimensionCheck {
            space: "V".into(),
            algebra: "h".into(),
            dimension_expected: 4,
            dimension_computed: 3,
            pass: false,
        });
        assert!(!report.pass);
    }
}
