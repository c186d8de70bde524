//! Bigraded Ext dimensions of a monomial algebra and a deformation of it,
//! plus a cup product of degree-one classes.

use k2ws::cobar::{cup_product, ext_dims};
use k2ws::{Cobar, GradedAlgebra, Grading, MonomialAlgebra, Presentation, PrimeField};

fn main() -> k2ws::Result<()> {
    let f = PrimeField::default();
    let vars = ["x", "y", "z"];
    let b = GradedAlgebra::monomial(f, MonomialAlgebra::from_strs(&vars, &["x^2*y", "y*z^2", "x^3*z"], 6)?);
    let a = GradedAlgebra::from_presentation(&Presentation::from_strs(
        f,
        &vars,
        &["x^2*y - x^3", "y*z^2 - y*x^2", "x^3*z - x^4"],
        Some(6),
    )?);
    for (name, alg) in [("monomial", &b), ("deformed", &a)] {
        let t = ext_dims(alg, 4, 6)?;
        println!("{name}: {:?}", t.nonzero());
    }

    let free_pair = GradedAlgebra::monomial(f, MonomialAlgebra::from_strs(&["x", "y"], &["y*x"], 4)?);
    let cobar = Cobar::new(&free_pair, Grading::ByWord, 2, 4)?;
    let e1 = cobar.classes(1, 1);
    for (i, j) in [(0, 1), (1, 0)] {
        let prod = cup_product(&cobar, &e1[i], &e1[j])?;
        println!("class {i} ∪ class {j} in Ext^2: {:?}", cobar.class_coordinates(&prod)?);
    }
    Ok(())
}
