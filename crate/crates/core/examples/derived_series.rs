//! Weak derived series I^(1) = (V,I,I), I^(k) = (V, I^(k-1), I^(k-1)).

use bolalg::catalog;
use bolalg::linalg::Subspace;

fn main() -> bolalg::Result<()> {
    for (name, v) in [("type I", catalog::type_i()), ("sl2", catalog::sl2_bol())] {
        let series = v.weak_derived_series(&Subspace::full(v.dim()))?;
        println!("{name}: dimensions {:?}", series.dimensions());
        match series.solvable_at() {
            Some(k) => println!("  weakly solvable, V^({k}) = 0"),
            None => println!("  stabilizes at {}", series.terminal()),
        }
    }
    Ok(())
}
