use serde::{Deserialize, Serialize};

/// Outcome of one verification check over `NC(W, c)` for one Coxeter element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    #[serde(rename = "type")]
    pub ctype: String,
    pub c_word: Vec<i32>,
    pub nc_count: usize,
    /// Number of individual assertions evaluated.
    pub checked: usize,
    pub violations: Vec<Violation>,
    /// Extra context, such as the pinned Hecke normalization.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub header: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// ShortLex word (labels) of the offending element.
    pub x: Vec<i32>,
    pub detail: String,
}

impl Report {
    pub fn new(check: &str, ctype: String, c_word: Vec<i32>) -> Self {
        Self {
            check: check.to_string(),
            ctype,
            c_word,
            ..Self::default()
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, x: Vec<i32>, detail: impl Into<String>) {
        self.violations.push(Violation {
            x,
            detail: detail.into(),
        });
    }
}
