//! Full structure report, as text and as JSON.

use bolalg::catalog;
use bolalg::report::{build_report, ReportOptions};

fn main() -> bolalg::Result<()> {
    let v = catalog::get_plain("type-i")?.algebra;
    let report = build_report(&v, ReportOptions::all())?;
    print!("{report}");
    let json = build_report(&v, ReportOptions { radical: true, ..Default::default() })?.to_json();
    println!("\n{} bytes of JSON", json.len());
    Ok(())
}
