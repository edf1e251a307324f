//! Ideal enumeration: complete up to dimension 3, heuristic above.

use bolalg::structure::enumerate_ideals;
use bolalg::{catalog, BolAlgebra};

fn main() -> bolalg::Result<()> {
    let cases = [
        ("type I", catalog::type_i()),
        ("sl2", catalog::sl2_bol()),
        ("zero, dim 2", BolAlgebra::zero(2)),
        ("sl2 ⊕ type I", catalog::sl2_bol().direct_sum(&catalog::type_i())),
    ];
    for (name, v) in cases {
        let lattice = enumerate_ideals(&v)?;
        println!("{name} (complete: {})", lattice.complete);
        for i in &lattice.ideals {
            println!("  {i}");
        }
        for note in &lattice.notes {
            println!("  note: {note}");
        }
    }
    Ok(())
}
