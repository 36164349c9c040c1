//! Recomputes the dimension 5 and 6 case tables and prints both reports.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example dimension_tables
//! ```

use hilbert_kunz::tables::{verify_dimension_5, verify_dimension_6};

fn main() {
    for report in [verify_dimension_5(6), verify_dimension_6(6)] {
        println!("== {} ==", report.command);
        for row in &report.rows {
            let target = row.target.as_ref().map(|t| t.to_decimal(3)).unwrap_or_default();
            println!(
                "{:<22} {:>10} vs {:>8}  {}",
                row.label,
                row.decimal,
                target,
                if row.pass { "ok" } else { "FAIL" }
            );
            for note in &row.notes {
                println!("{:24}{note}", "");
            }
        }
        println!("overall: {}\n", report.overall_pass);
    }
}
