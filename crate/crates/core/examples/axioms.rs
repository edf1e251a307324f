//! Checking the Bol identities on every catalog entry.

use bolalg::{catalog, check_axioms};

fn main() -> bolalg::Result<()> {
    for id in catalog::ids() {
        let params = catalog::sample_params(id)?;
        let entry = catalog::get(id, &params)?;
        let report = check_axioms(&entry.algebra);
        println!("{id}: {}", report.summary());
        if !report.all_pass() {
            print!("{report}");
        }
    }
    Ok(())
}
