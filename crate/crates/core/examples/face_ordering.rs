//! Vertex orderings for anticommutative face rings: a complex with no good
//! ordering, and the boundary of a simplex, which has one.

use k2ws::cobar::k2_test;
use k2ws::facecomplex::{face_algebra_presentation, find_good_ordering, DEFAULT_SEARCH_CAP};
use k2ws::grassoc::associated_graded;
use k2ws::groebner::{complete, essential_groebner_test};
use k2ws::{GradedAlgebra, PrimeField, SimplicialComplex};

fn names(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

fn main() -> k2ws::Result<()> {
    let facets = ["u x y", "u y z", "u x z", "t u x", "t x z", "u w z", "w x z"].map(names);
    let six = SimplicialComplex::from_facets(names("t u w x y z"), &facets)?;
    let missing: Vec<String> = six.minimally_missing_faces().iter().map(|m| six.display_face(&m.0)).collect();
    println!("minimally missing faces: {}", missing.join(" "));
    let s = find_good_ordering(&six, DEFAULT_SEARCH_CAP)?;
    println!("good ordering: {:?} after {} checks", s.ordering, s.checks);

    let f = PrimeField::default();
    let sphere = SimplicialComplex::simplex_boundary(4)?;
    let ord = find_good_ordering(&sphere, DEFAULT_SEARCH_CAP)?.ordering.expect("boundary has an ordering");
    let p = face_algebra_presentation(f, &sphere, &ord, Some(8))?;
    println!("essential test: {:?}", essential_groebner_test(&p)?.verdict);
    let gr = GradedAlgebra::monomial(f, associated_graded(&complete(&p)));
    println!("k2 on gr: {:?}", k2_test(&gr, 4, 8)?);
    Ok(())
}
