//! The built-in entries and their published structure values.

use bolalg::catalog;

fn main() -> bolalg::Result<()> {
    for s in catalog::list() {
        println!("{s}");
    }
    let params = catalog::parse_params(&["x=1/2", "p=3"])?;
    let iv = catalog::get("type-iv", &params)?;
    println!("\n{} ({})", iv.algebra.label(), iv.provenance);
    if let Some(claims) = &iv.claims {
        for q in &claims.quoted {
            println!("  {q}");
        }
        for n in &claims.notes {
            println!("  note: {n}");
        }
    }
    Ok(())
}
