use std::fmt::Write as _;

use super::{case, LocusRow};

/// Markdown table with the columns of the classification table: case, G, Γ, δ formula,
/// δ, constraint, signature.
pub fn markdown_table(rows: &[LocusRow]) -> String {
    let mut s = String::from("| # | G | order | reduced | delta formula | delta | condition | signature |\n");
    s.push_str("|---|---|---|---|---|---|---|---|\n");
    for row in rows {
        let (formula, condition) = match case(row.case) {
            Some(spec) => (spec.delta.render(), spec.constraint.describe().to_string()),
            None => ("2g-1".to_string(), String::new()),
        };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            row.case,
            row.group_display(),
            row.order,
            row.reduced_display(),
            formula,
            row.delta,
            condition,
            row.signature
        );
    }
    s
}
