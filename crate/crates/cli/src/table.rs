//! Flat CSV rows for measure reports.

use pahs_core::registry::StateFamily;
use pahs_core::wigner::WLN_LOG_BASE;
use pahs_core::{MeasureReport, MeasureValue};

/// Column layout shared by `measures --format csv` and `sweep`: family,
/// parameters alphabetically, measures alphabetically, log-negativity
/// metadata, then status columns.
pub struct Table {
    params: Vec<String>,
    measures: Vec<String>,
}

const WLN_METADATA: [&str; 4] = ["wln_delta", "wln_log_base", "wln_nodes", "wln_radius"];

impl Table {
    pub fn new(family: &dyn StateFamily, extra_param: Option<&str>, measures: &[&str]) -> Self {
        let mut params: Vec<String> = family.param_names().iter().map(|s| s.to_string()).collect();
        if let Some(extra) = extra_param {
            if !params.iter().any(|p| p == extra) {
                params.push(extra.to_string());
            }
        }
        params.sort();
        let mut measures: Vec<String> = measures.iter().map(|s| s.to_string()).collect();
        measures.sort();
        measures.dedup();
        Self { params, measures }
    }

    fn has_wln(&self) -> bool {
        self.measures.iter().any(|m| m == "wln")
    }

    pub fn header(&self) -> Vec<String> {
        let mut row = vec!["family".to_string()];
        row.extend(self.params.iter().cloned());
        row.extend(self.measures.iter().cloned());
        if self.has_wln() {
            row.extend(WLN_METADATA.iter().map(|s| s.to_string()));
        }
        row.push("converged".into());
        row.push("error".into());
        row
    }

    /// Row for a computed report; `swept` fills the extra parameter column.
    pub fn row(&self, report: &MeasureReport, swept: Option<(&str, f64)>) -> Vec<String> {
        let mut row = vec![report.family.clone()];
        for p in &self.params {
            let cell = match report.params.get(p) {
                Some(v) => v.to_string(),
                None => swept
                    .filter(|(name, _)| name == p)
                    .map(|(name, v)| format_param(name, v))
                    .unwrap_or_default(),
            };
            row.push(cell);
        }
        let mut wln = None;
        for m in &self.measures {
            let value = &report.measures[m];
            if let MeasureValue::Wln(est) = value {
                wln = Some(*est);
            }
            row.push(match value {
                MeasureValue::Quality(q) => q.to_string(),
                other => format_real(other.as_f64()),
            });
        }
        if self.has_wln() {
            match wln {
                Some(est) => row.extend([
                    format_real(est.delta),
                    WLN_LOG_BASE.to_string(),
                    est.nodes.to_string(),
                    format_real(est.radius),
                ]),
                None => row.extend(std::iter::repeat_n(String::new(), WLN_METADATA.len())),
            }
        }
        row.push(report.is_converged().to_string());
        row.push(String::new());
        row
    }

    /// Row for a parameter tuple that could not be evaluated.
    pub fn error_row(&self, family: &str, swept: Option<(&str, f64)>, error: &str) -> Vec<String> {
        let mut row = vec![family.to_string()];
        for p in &self.params {
            row.push(
                swept
                    .filter(|(name, _)| name == p)
                    .map(|(name, v)| format_param(name, v))
                    .unwrap_or_default(),
            );
        }
        let blanks = self.measures.len()
            + if self.has_wln() {
                WLN_METADATA.len()
            } else {
                0
            };
        row.extend(std::iter::repeat_n(String::new(), blanks));
        row.push("false".into());
        row.push(error.to_string());
        row
    }
}

/// Integer-valued parameters print without an exponent.
pub fn format_param(name: &str, v: f64) -> String {
    match name {
        "M" | "k" | "n" | "dim" if v.fract() == 0.0 && v >= 0.0 => format!("{}", v as u64),
        _ => format_real(v),
    }
}

/// 17 significant digits.
pub fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}
