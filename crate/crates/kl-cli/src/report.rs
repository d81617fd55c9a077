//! Machine-readable verification reports. The human-readable table is a
//! rendering of the same structure, not a separate code path.

use serde::Serialize;
use serde_json::Value;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub desc: String,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl Claim {
    pub fn check<E: Serialize, G: Serialize + PartialEq<E>>(desc: &str, expected: E, got: G) -> Self {
        let pass = got == expected;
        Claim {
            desc: desc.to_string(),
            expected: serde_json::to_value(&expected).unwrap(),
            got: serde_json::to_value(&got).unwrap(),
            pass,
            skipped: None,
        }
    }

    pub fn bool(desc: &str, got: bool) -> Self {
        Self::check(desc, true, got)
    }

    pub fn skipped(desc: &str, expected: impl Serialize, reason: &str) -> Self {
        Claim {
            desc: desc.to_string(),
            expected: serde_json::to_value(&expected).unwrap(),
            got: Value::String(format!("skipped: {}", reason)),
            pass: true,
            skipped: Some(reason.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CacheInfo {
    pub entries: usize,
    pub computes: u64,
    pub hits: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: u32,
    pub scenario: String,
    pub n: usize,
    pub pass: bool,
    pub claims: Vec<Claim>,
    pub elapsed_ms: u128,
    pub cache: CacheInfo,
}

impl Report {
    pub fn new(scenario: &str, n: usize, claims: Vec<Claim>, elapsed_ms: u128, cache: CacheInfo) -> Self {
        let pass = claims.iter().all(|c| c.pass);
        Report {
            version: REPORT_VERSION,
            scenario: scenario.to_string(),
            n,
            pass,
            claims,
            elapsed_ms,
            cache,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }

    /// Plain-text table, one line per claim.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("scenario {} (n = {})\n", self.scenario, self.n));
        for c in &self.claims {
            let status = if c.skipped.is_some() {
                "SKIP"
            } else if c.pass {
                "pass"
            } else {
                "FAIL"
            };
            out.push_str(&format!(
                "  [{}] {} | expected {} got {}\n",
                status, c.desc, c.expected, c.got
            ));
        }
        out.push_str(&format!(
            "overall: {} ({} claims, {} ms, table entries {}, computes {}, hits {})\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.claims.len(),
            self.elapsed_ms,
            self.cache.entries,
            self.cache.computes,
            self.cache.hits,
        ));
        out
    }
}
