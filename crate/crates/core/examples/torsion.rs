//! Algebras from torsion data: A^i_jkl = ∇_l T^i_jk + T^s_jk T^i_sl.

use bolalg::catalog;
use bolalg::geometry::{from_torsion, torsion_of, TorsionData};
use bolalg::linalg::scalar::{format_vector, unit_vector};
use bolalg::tensor::Tensor4;

fn main() -> bolalg::Result<()> {
    let t = catalog::type_i().binary().clone();
    let (v, report) = from_torsion(&TorsionData::new(t, Tensor4::zeros(3))?);
    let e1 = unit_vector(3, 0);
    let e3 = unit_vector(3, 2);
    println!("(e1,e3,e3) = {}", format_vector(&v.trilinear_product(&e1, &e3, &e3)?));
    println!("axioms: {}", report.summary());

    for id in ["type-i", "sl2-bol", "sl2-plus-type-i"] {
        let a = catalog::get_plain(id)?.algebra;
        let (back, _) = from_torsion(&torsion_of(&a));
        println!("{id}: round trip exact = {}", back.same_structure(&a));
    }
    Ok(())
}
