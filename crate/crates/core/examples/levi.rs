//! Complements of the radical and the four splitting checks.

use bolalg::catalog;
use bolalg::linalg::scalar::int;
use bolalg::linalg::Subspace;
use bolalg::structure::{levi_complement, verify_levi};

fn main() -> bolalg::Result<()> {
    let t = catalog::type_i();
    let full = Subspace::full(3);
    let vv = t.subspace_product(&full, &full)?;
    let s = Subspace::coordinate(&[2], 3)?;
    let split = verify_levi(&t, &s, &vv)?;
    println!("type I, S = {s}, R = {vv}: {:?}", split.checks);

    let v = catalog::sl2_bol().direct_sum(&catalog::type_i());
    let result = levi_complement(&v)?;
    let (n, r, k) = result.dimension_identity();
    println!("sl2 ⊕ type I: S = {} via {}", result.complement, result.method);
    println!("  dim V = dim RV + dim S: {n} = {r} + {k}");

    let iv = catalog::type_iv(&int(0), &int(0));
    match levi_complement(&iv) {
        Err(e) => println!("type IV: {e}"),
        Ok(r) => println!("type IV: found = {}", r.found),
    }
    Ok(())
}
