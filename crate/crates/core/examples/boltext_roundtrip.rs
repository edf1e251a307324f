//! Reading and writing the boltext format.

use bolalg::boltext;

const TEXT: &str = "\
boltext 1
dim 3
# e2·e3 written the other way round
bin 3 2 -> 2:-1
bin 1 3 -> 1:1, 2:1
meta label type I by hand
";

fn main() -> bolalg::Result<()> {
    let v = boltext::parse(TEXT)?;
    let canonical = boltext::serialize(&v);
    print!("{canonical}");
    assert!(boltext::parse(&canonical)?.same_structure(&v));

    if let Err(e) = boltext::parse("boltext 1\ndim 2\nbin 1 1 -> 1:1\n") {
        println!("rejected: {e}");
    }
    Ok(())
}
