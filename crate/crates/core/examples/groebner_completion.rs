//! Truncated two-sided completion of a presentation whose relations fail
//! the leading monomial property.

use k2ws::groebner::{complete, leading_monomial_property};
use k2ws::{Presentation, PrimeField};

fn main() -> k2ws::Result<()> {
    let f = PrimeField::default();
    let p = Presentation::from_strs(f, &["x", "y"], &["y^2", "x^3 - y^2*x"], Some(8))?;
    let vars = p.vars();

    if let (false, Some(w)) = leading_monomial_property(p.relations()) {
        println!(
            "leading word {} sits inside {}",
            w.inner_word.display(vars),
            w.outer_word.display(vars)
        );
    }

    let g = complete(&p);
    println!("basis complete through degree {}:", g.complete_below());
    for el in g.elements() {
        println!("  {}", el.display(&f, vars));
    }

    let sample = k2ws::parse::parse_polynomial(&f, vars, "x^3*y + 2*y^2*x*y - x*y", 1)?;
    println!("NF({}) = {}", sample.display(&f, vars), g.normal_form(&sample).display(&f, vars));
    Ok(())
}
