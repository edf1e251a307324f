//! Quotients by ideals and ideal closures.

use bolalg::linalg::Subspace;
use bolalg::{catalog, check_axioms};

fn main() -> bolalg::Result<()> {
    let v = catalog::sl2_bol().direct_sum(&catalog::type_i());
    let block = Subspace::coordinate(&[3, 4, 5], 6)?;
    let (q, projection) = v.quotient(&block)?;
    println!("V/I has dim {} and {}", q.dim(), check_axioms(&q).summary());
    println!("projection is {}x{}", projection.target_dim(), projection.source_dim());

    let t = catalog::type_i();
    let line = Subspace::coordinate(&[0], 3)?;
    println!("ideal generated by e1 in type I: {}", t.ideal_closure(&line)?);
    Ok(())
}
