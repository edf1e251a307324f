//! Exact subspace calculus and rational eigenlines.

use bolalg::linalg::scalar::{frac, int};
use bolalg::linalg::{rational_eigenlines, Matrix, Subspace};

fn main() -> bolalg::Result<()> {
    let vv = Subspace::canonicalize(&[vec![int(1), int(1), int(0)], vec![int(0), int(1), int(0)]], 3)?;
    let e3 = Subspace::coordinate(&[2], 3)?;
    println!("V·V of type I     = {vv}");
    println!("V·V + <e3>        = {}", vv.sum(&e3)?);
    println!("V·V ∩ <e3>        = {}", vv.intersect(&e3)?);
    println!("e1 + e2 in V·V    : {}", vv.contains(&[int(1), int(1), int(0)])?);

    let m = Matrix::from_rows(
        vec![
            vec![int(1), int(0), int(0)],
            vec![int(0), int(2), frac(1, 2)],
            vec![int(0), int(0), int(2)],
        ],
        3,
    )?;
    let spectrum = rational_eigenlines(&m)?;
    for (lambda, space) in &spectrum.lines {
        println!("eigenvalue {lambda}: {space}");
    }

    let companion = Matrix::from_rows(vec![vec![int(0), int(2)], vec![int(1), int(0)]], 2)?;
    let s = rational_eigenlines(&companion)?;
    println!("t^2 - 2: {} rational, {} irrational", s.lines.len(), s.irrational_count);
    Ok(())
}
