//! The weak radical with its certificate.

use bolalg::catalog;
use bolalg::structure::weak_radical;

fn main() -> bolalg::Result<()> {
    let cases = [
        ("type I", catalog::type_i()),
        ("sl2", catalog::sl2_bol()),
        ("sl2 ⊕ type I", catalog::sl2_bol().direct_sum(&catalog::type_i())),
    ];
    for (name, v) in cases {
        let cert = weak_radical(&v)?;
        println!("{name}: RV = {} (dim {})", cert.radical, cert.radical.dim());
        println!("  series dims {:?}", cert.series.dimensions());
        println!(
            "  V/RV dim {}, semisimple quotient: {}, exhaustive: {}",
            cert.quotient_dim, cert.quotient_semisimple, cert.exhaustive
        );
    }
    Ok(())
}
