//! Lie algebras give Bol algebras via a·b = [a,b], (a,b,c) = [[a,b],c].

use bolalg::catalog::{heisenberg_brackets, sl2_brackets};
use bolalg::lie::from_lie_algebra;
use bolalg::linalg::scalar::{format_vector, int, unit_vector};
use bolalg::tensor::Tensor3;
use bolalg::{check_axioms, Error};

fn main() -> bolalg::Result<()> {
    let sl2 = from_lie_algebra(&sl2_brackets())?;
    let (e, f, h) = (unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2));
    println!("sl2: (h,e,f) = {}", format_vector(&sl2.trilinear_product(&h, &e, &f)?));
    println!("sl2: {}", check_axioms(&sl2).summary());
    println!("heisenberg: {}", check_axioms(&from_lie_algebra(&heisenberg_brackets())?).summary());

    // [e1,e2] = e3, [e1,e3] = e1 is not a Lie bracket.
    let mut c = Tensor3::zeros(3);
    for (i, j, k) in [(2, 0, 1), (0, 0, 2)] {
        c.set(i, j, k, int(1));
        c.set(i, k, j, int(-1));
    }
    match from_lie_algebra(&c) {
        Err(Error::InvalidFixture { witness }) => println!("Jacobi fails at {witness:?}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
