//! Lifts classes of the associated monomial algebra of an inhomogeneous
//! presentation to cochains on the algebra itself.

use k2ws::cobar::lambda_surjectivity_evidence;
use k2ws::{Presentation, PrimeField};

fn main() -> k2ws::Result<()> {
    let p = Presentation::from_strs(PrimeField::default(), &["x", "y"], &["y*x - x*y", "x^3 - y^2"], Some(8))?;
    for n in [1, 2] {
        let r = lambda_surjectivity_evidence(&p, n, 8)?;
        for c in &r.classes {
            println!("n = {n}  word {}  lifted: {}", c.word.display(p.vars()), c.lifted);
        }
        for note in &r.caveats {
            println!("  note: {note}");
        }
    }
    Ok(())
}
