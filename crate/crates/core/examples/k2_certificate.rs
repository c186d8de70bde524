//! A certified failure of the K₂ property next to bounded evidence for it.

use k2ws::cobar::k2_test;
use k2ws::{GradedAlgebra, K2Verdict, MonomialAlgebra, Presentation, PrimeField};

fn describe(name: &str, v: &K2Verdict) {
    match v {
        K2Verdict::CertifiedNotK2 { witness, .. } => println!(
            "{name}: not K2; Ext^({},{}) has dimension {} but products of low classes give {}",
            witness.n, witness.degree, witness.ext_dim, witness.generated_dim
        ),
        K2Verdict::EvidenceK2UpTo { nmax, bound } => {
            println!("{name}: generated in degrees 1 and 2 for n <= {nmax}, j <= {bound}")
        }
    }
}

fn main() -> k2ws::Result<()> {
    let f = PrimeField::default();
    let vars = ["x", "y", "z"];
    let b = GradedAlgebra::monomial(f, MonomialAlgebra::from_strs(&vars, &["x^2*y", "y*z^2", "x^3*z"], 6)?);
    describe("monomial", &k2_test(&b, 4, 6)?);
    let p = Presentation::from_strs(f, &vars, &["x^2*y - x^3", "y*z^2 - y*x^2", "x^3*z - x^4"], Some(6))?;
    describe("deformed", &k2_test(&GradedAlgebra::from_presentation(&p), 4, 6)?);
    Ok(())
}
