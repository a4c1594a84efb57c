use serde::{Deserialize, Serialize};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitStatus {
    Ok,
    SelftestFailed,
    InputError,
    Unsolvable,
    InfeasibleCertificate,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        match self {
            ExitStatus::Ok => 0,
            ExitStatus::SelftestFailed => 1,
            ExitStatus::InputError => 2,
            ExitStatus::Unsolvable => 3,
            ExitStatus::InfeasibleCertificate => 4,
        }
    }
}

/// The invocation, with the effective value of every tunable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub command: String,
    pub input: Option<String>,
    /// Absent when every result carries its own default.
    pub tol: Option<f64>,
    pub band: f64,
    /// Only for commands with a grid.
    pub grid: Option<usize>,
    pub seed: u64,
}

/// One number, with how it was obtained and how far to trust it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericResult {
    pub name: String,
    pub value: f64,
    pub method: String,
    pub tolerance: f64,
}

impl NumericResult {
    pub fn new(name: &str, value: f64, method: impl ToString, tolerance: f64) -> Self {
        Self { name: name.to_string(), value, method: method.to_string(), tolerance }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: CommandEcho,
    pub results: Vec<NumericResult>,
    /// Command-specific structure: traces, certificates, samples.
    pub details: serde_json::Value,
    pub diagnostics: Vec<String>,
    pub exit_status: ExitStatus,
}

impl Report {
    pub fn new(command: CommandEcho) -> Self {
        Self {
            command,
            results: Vec::new(),
            details: serde_json::Value::Null,
            diagnostics: Vec::new(),
            exit_status: ExitStatus::Ok,
        }
    }

    pub fn push(&mut self, r: NumericResult) {
        if !r.value.is_finite() {
            self.diagnostics.push(format!("{} is not finite ({})", r.name, r.value));
            return;
        }
        self.results.push(r);
    }

    pub fn result(&self, name: &str) -> Option<&NumericResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports hold finite numbers only")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = Report::new(CommandEcho {
            command: "mu".into(),
            input: Some("a.json".into()),
            tol: Some(1e-12),
            band: 1e-8,
            grid: Some(12),
            seed: 7,
        });
        r.push(NumericResult::new("mu", 0.1 + 0.2, "bisection", 1e-12));
        r.push(NumericResult::new("bad", f64::NAN, "bisection", 1e-12));
        r.details = serde_json::json!({"trace": ["const (0.1+0.2i)"], "t": 1.0 / 3.0});
        r.exit_status = ExitStatus::Unsolvable;
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.results.len(), 1);
        assert_eq!(back.diagnostics.len(), 1);
    }

    #[test]
    fn codes() {
        let all = [
            ExitStatus::Ok,
            ExitStatus::SelftestFailed,
            ExitStatus::InputError,
            ExitStatus::Unsolvable,
            ExitStatus::InfeasibleCertificate,
        ];
        assert_eq!(all.map(ExitStatus::code), [0, 1, 2, 3, 4]);
    }
}
