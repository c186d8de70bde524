//! Associated monomial algebra and its Hilbert coefficients.

use k2ws::grassoc::{associated_graded, hilbert_coeffs};
use k2ws::groebner::complete;
use k2ws::{Presentation, PrimeField};

fn main() -> k2ws::Result<()> {
    let p = Presentation::from_strs(PrimeField::default(), &["x", "y"], &["x*y - x^2", "y*x", "y^3"], Some(8))?;
    let gr = associated_graded(&complete(&p));
    let gens: Vec<String> = gr.mingens().iter().map(|w| w.display(p.vars()).to_string()).collect();
    println!("monomial generators: {}", gens.join(", "));
    println!("hilbert coefficients: {:?}", hilbert_coeffs(&gr));
    Ok(())
}
