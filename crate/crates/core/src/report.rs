//! Verification reports and their stable JSON form.
//!
//! Schema: `{"id": str, "params": obj, "checked_upto": int, "status":
//! "pass"|"fail", "first_discrepancy": null | {"at": int, "lhs": str,
//! "rhs": str}}`. Exact rationals render as `p` or `p/q` strings; the only
//! floating output anywhere is the numeric modular residual, rendered with
//! 15 significant digits. Params are kept in a sorted map so identical runs
//! serialize byte-identically.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Discrepancy {
    /// q-order, u-order, or integer argument where the sides first differ.
    pub at: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub checked_upto: i64,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerifyReport {
    pub fn pass(id: &str, params: BTreeMap<String, serde_json::Value>, upto: i64) -> Self {
        VerifyReport {
            id: id.to_string(),
            params,
            checked_upto: upto,
            status: Status::Pass,
            first_discrepancy: None,
        }
    }

    pub fn fail(
        id: &str,
        params: BTreeMap<String, serde_json::Value>,
        upto: i64,
        disc: Discrepancy,
    ) -> Self {
        VerifyReport {
            id: id.to_string(),
            params,
            checked_upto: upto,
            status: Status::Fail,
            first_discrepancy: Some(disc),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Helper for building the params map tersely.
pub fn params_of(pairs: &[(&str, serde_json::Value)]) -> BTreeMap<String, serde_json::Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_schema_shape() {
        let r = VerifyReport::pass("l4", params_of(&[("order", json!(60))]), 60);
        assert_eq!(
            r.to_json(),
            r#"{"id":"l4","params":{"order":60},"checked_upto":60,"status":"pass","first_discrepancy":null}"#
        );
        let f = VerifyReport::fail(
            "x",
            params_of(&[]),
            10,
            Discrepancy {
                at: 3,
                lhs: "1/2".into(),
                rhs: "3/2".into(),
            },
        );
        let v: serde_json::Value = serde_json::from_str(&f.to_json()).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["first_discrepancy"]["at"], 3);
        assert_eq!(v["first_discrepancy"]["lhs"], "1/2");
    }
}
