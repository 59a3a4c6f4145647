//! Machine-readable report records.
//!
//! Degrees in this crate routinely have thousands of digits, and intervals
//! are only meaningful together with their outward-rounding guarantee, so
//! serialization follows two hard rules:
//!
//! * exact integers are serialized **losslessly** as full decimal strings
//!   (with a truncated scientific rendering alongside purely for human
//!   convenience);
//! * interval endpoints are serialized as decimal strings rounded
//!   *outward*, so the printed interval still contains the true value, and
//!   they carry the binary precision they were computed at.
//!
//! Everything here emits plain data structures; the CLI decides between
//! pretty text, line-delimited JSON, and CSV. Output is deterministic:
//! records serialize with a fixed field order and no timestamps (timings
//! are opt-in and excluded from determinism guarantees).

use rug::Integer;
use serde::Serialize;

use crate::bounds::{BoundValue, ChainReport, CheckResult, NamedBound};
use crate::numerics::{RealInterval, Verdict};
use crate::search::SearchRow;
use crate::tower::{FanoInvariants, Stage, TowerSpec};

/// Number of decimal digits used when rendering interval endpoints.
pub const INTERVAL_DIGITS: usize = 30;

/// Lossless rendering of an exact integer.
#[derive(Clone, Debug, Serialize)]
pub struct ExactValue {
    /// Full decimal expansion; parse this to recover the integer exactly.
    pub decimal: String,
    /// Truncated scientific rendering (toward zero), for human eyes only.
    pub scientific: String,
    /// Number of decimal digits (of the absolute value).
    pub digits: usize,
}

impl ExactValue {
    pub fn new(v: &Integer) -> Self {
        let decimal = v.to_string();
        let magnitude = decimal.strip_prefix('-').unwrap_or(&decimal);
        let digits = magnitude.len();
        let scientific = if digits <= 6 {
            decimal.clone()
        } else {
            let (head, tail) = magnitude.split_at(1);
            let sign = if decimal.starts_with('-') { "-" } else { "" };
            format!("{sign}{head}.{}e{}", &tail[..5], digits - 1)
        };
        ExactValue {
            decimal,
            scientific,
            digits,
        }
    }
}

/// An interval's endpoints as outward-rounded decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct IntervalValue {
    pub lo: String,
    pub hi: String,
    /// Binary working precision the enclosure was computed at.
    pub precision_bits: u32,
}

impl IntervalValue {
    pub fn new(iv: &RealInterval) -> Self {
        Self::with_digits(iv, INTERVAL_DIGITS)
    }

    pub fn with_digits(iv: &RealInterval, digits: usize) -> Self {
        let (lo, hi) = iv.to_decimal_strings(digits);
        IntervalValue {
            lo,
            hi,
            precision_bits: iv.lo().prec(),
        }
    }
}

/// A comparison outcome in serializable form.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictValue {
    /// `"holds"`, `"fails"`, or `"undecided"`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision_reached: Option<u32>,
}

impl VerdictValue {
    pub fn new(v: Verdict) -> Self {
        match v {
            Verdict::True => VerdictValue {
                status: "holds",
                precision_reached: None,
            },
            Verdict::False => VerdictValue {
                status: "fails",
                precision_reached: None,
            },
            Verdict::Undecided { precision_reached } => VerdictValue {
                status: "undecided",
                precision_reached: Some(precision_reached),
            },
        }
    }
}

/// One emitted record: a check result, an invariants readout, a search row.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    /// Record kind, e.g. `"check.high-degree"`, `"invariants"`,
    /// `"search.ratio"`.
    pub kind: String,
    /// Input parameters, as a flat JSON object.
    pub params: serde_json::Value,
    /// The tower involved, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<TowerSpec>,
    /// Named exact values (degrees, indexes, thresholds …).
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub exact: serde_json::Map<String, serde_json::Value>,
    /// Named interval values (δ, ratios, bound enclosures …).
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub intervals: serde_json::Map<String, serde_json::Value>,
    /// Named verdicts.
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub verdicts: serde_json::Map<String, serde_json::Value>,
    /// Free-form notes (clamp events, skipped constructions …).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Milliseconds, present only when timing was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ReportRecord {
    pub fn new(kind: &str, params: serde_json::Value) -> Self {
        ReportRecord {
            kind: kind.to_owned(),
            params,
            spec: None,
            exact: serde_json::Map::new(),
            intervals: serde_json::Map::new(),
            verdicts: serde_json::Map::new(),
            notes: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn with_spec(mut self, spec: &TowerSpec) -> Self {
        self.spec = Some(spec.clone());
        self
    }

    pub fn with_exact(mut self, name: &str, value: &Integer) -> Self {
        self.exact.insert(
            name.to_owned(),
            serde_json::to_value(ExactValue::new(value)).expect("plain struct"),
        );
        self
    }

    pub fn with_interval(mut self, name: &str, iv: &RealInterval) -> Self {
        self.intervals.insert(
            name.to_owned(),
            serde_json::to_value(IntervalValue::new(iv)).expect("plain struct"),
        );
        self
    }

    pub fn with_verdict(mut self, name: &str, v: Verdict) -> Self {
        self.verdicts.insert(
            name.to_owned(),
            serde_json::to_value(VerdictValue::new(v)).expect("plain struct"),
        );
        self
    }

    pub fn with_notes(mut self, notes: &[String]) -> Self {
        self.notes.extend_from_slice(notes);
        self
    }

    pub fn with_timing(mut self, ms: Option<u128>) -> Self {
        self.timing_ms = ms;
        self
    }

    /// One line of JSON, for line-delimited batch output.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report records always serialize")
    }
}

/// Record for a [`CheckResult`].
pub fn check_record(kind: &str, res: &CheckResult, timing_ms: Option<u128>) -> ReportRecord {
    let mut params = serde_json::Map::new();
    params.insert("n".to_owned(), res.n.into());
    if let Some(k) = res.k {
        params.insert("k".to_owned(), k.into());
    }
    if let Some(mode) = res.mode {
        params.insert("mode".to_owned(), format!("{mode:?}").to_lowercase().into());
    }
    if res.clamped {
        params.insert("clamped".to_owned(), true.into());
    }
    params.insert("bound".to_owned(), res.bound_text.clone().into());
    ReportRecord::new(kind, serde_json::Value::Object(params))
        .with_spec(&res.spec)
        .with_exact("degree", &res.degree)
        .with_verdict("bound", res.verdict)
        .with_notes(&res.notes)
        .with_timing(timing_ms)
}

/// Record for a full invariants readout, δ included.
pub fn invariants_record(
    spec: &TowerSpec,
    inv: &FanoInvariants,
    delta: &RealInterval,
) -> ReportRecord {
    let params = serde_json::json!({
        "dim": inv.dim,
        "picard": inv.picard,
        "index": inv.index,
    });
    ReportRecord::new("invariants", params)
        .with_spec(spec)
        .with_exact("degree", &inv.degree)
        .with_exact("gen_degree", &inv.gen_degree)
        .with_interval("delta", delta)
}

/// Records for each stage of a tower profile.
pub fn profile_records(spec: &TowerSpec, stages: &[Stage]) -> Vec<ReportRecord> {
    stages
        .iter()
        .map(|st| {
            let params = serde_json::json!({
                "stage": st.stage,
                "dim": st.dim,
                "picard": st.picard,
                "index": st.index,
            });
            ReportRecord::new("profile.stage", params)
                .with_spec(spec)
                .with_exact("degree", &st.degree)
                .with_exact("gen_degree", &st.gen_degree)
        })
        .collect()
}

/// Records for a [`ChainReport`]: one per level, rows inlined.
pub fn chain_records(report: &ChainReport) -> Vec<ReportRecord> {
    report
        .levels
        .iter()
        .map(|lv| {
            let params = serde_json::json!({
                "n": report.n,
                "k": report.k,
                "picard_target": lv.picard_target,
                "dim": lv.dim,
                "r": lv.r,
                "s": lv.s,
                "iota_y": lv.iota_y,
                "twist": lv.twist,
                "branch": match lv.branch {
                    crate::bounds::CaseBranch::Large => "large",
                    crate::bounds::CaseBranch::Small => "small",
                    crate::bounds::CaseBranch::Undecided => "undecided",
                },
            });
            let mut rec = ReportRecord::new("chain.level", params).with_spec(&report.tower);
            for row in &lv.rows {
                rec.verdicts.insert(
                    row.name.to_owned(),
                    serde_json::to_value(VerdictValue::new(row.verdict)).expect("plain struct"),
                );
                rec.notes.push(format!(
                    "{}: {} [{}]",
                    row.name,
                    row.statement,
                    if row.exact { "exact" } else { "interval" }
                ));
            }
            rec
        })
        .collect()
}

/// Record for one search row.
pub fn search_record(row: &SearchRow) -> ReportRecord {
    let params = serde_json::json!({
        "n": row.n,
        "r_star": row.r_star,
        "a_star": row.a_star,
    });
    ReportRecord::new("search.ratio", params)
        .with_exact("degree", &row.degree)
        .with_interval("delta", &row.delta)
        .with_interval("ratio", &row.ratio)
        .with_interval("r_offset", &row.r_offset)
        .with_verdict("ratio_ge_3_10", row.ratio_certified)
}

/// Record for one named upper bound.
pub fn bound_record(n: u32, iota: u64, bound: &NamedBound) -> ReportRecord {
    let params = serde_json::json!({
        "n": n,
        "iota": iota,
        "bound": bound.name,
        "description": bound.description,
    });
    let rec = ReportRecord::new("upper-bound", params);
    match &bound.value {
        BoundValue::Exact(v) => rec.with_exact("value", v),
        BoundValue::Enclosure(iv) => rec.with_interval("value", iv),
        BoundValue::Log10(iv) => rec.with_interval("log10_value", iv),
    }
}

/// Fixed header of the ratio-table CSV.
pub const RATIO_CSV_HEADER: &str =
    "n,r_star,a_star,degree_digits,delta_lo,delta_hi,ratio_lo,ratio_hi";

/// One CSV line for a search row (no trailing newline).
pub fn ratio_csv_row(row: &SearchRow) -> String {
    let digits = ExactValue::new(&row.degree).digits;
    let (delta_lo, delta_hi) = row.delta.to_decimal_strings(12);
    let (ratio_lo, ratio_hi) = row.ratio.to_decimal_strings(12);
    format!(
        "{},{},{},{},{},{},{},{}",
        row.n, row.r_star, row.a_star, digits, delta_lo, delta_hi, ratio_lo, ratio_hi
    )
}

/// The complete CSV document for a set of rows.
pub fn ratio_csv(rows: &[SearchRow]) -> String {
    let mut out = String::from(RATIO_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&ratio_csv_row(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values_round_trip_and_truncate() {
        let v = Integer::from(625);
        let e = ExactValue::new(&v);
        assert_eq!(e.decimal, "625");
        assert_eq!(e.scientific, "625");
        assert_eq!(e.digits, 3);

        let v: Integer = "141369071684668991078400".parse().unwrap();
        let e = ExactValue::new(&v);
        assert_eq!(e.decimal.parse::<Integer>().unwrap(), v, "lossless");
        assert_eq!(e.scientific, "1.41369e23");
        assert_eq!(e.digits, 24);

        let v = Integer::from(-1234567);
        let e = ExactValue::new(&v);
        assert_eq!(e.scientific, "-1.23456e6");
    }

    #[test]
    fn records_serialize_deterministically() {
        let spec = TowerSpec::batyrev(3).unwrap();
        let inv = spec.invariants().unwrap();
        let delta = inv.delta(128).unwrap();
        let a = invariants_record(&spec, &inv, &delta).to_json_line();
        let b = invariants_record(&spec, &inv, &delta).to_json_line();
        assert_eq!(a, b);
        assert!(a.contains("\"decimal\":\"62\""));
        assert!(!a.contains("timing_ms"), "timings are opt-in");
    }

    #[test]
    fn csv_has_the_fixed_column_set() {
        let rows = crate::search::ratio_table(&[3], 128, 1 << 16).unwrap();
        let doc = ratio_csv(&rows);
        let mut lines = doc.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,r_star,a_star,degree_digits,delta_lo,delta_hi,ratio_lo,ratio_hi"
        );
        let row = lines.next().unwrap();
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 8);
        assert_eq!(fields[0], "3");
        assert_eq!(fields[1], "0");
        assert_eq!(fields[2], "3");
        assert_eq!(fields[3], "2", "64 has two digits");
        // outward rounding straddles δ = 4
        let lo: f64 = fields[4].parse().unwrap();
        let hi: f64 = fields[5].parse().unwrap();
        assert!(lo <= 4.0 && 4.0 <= hi);
    }
}
