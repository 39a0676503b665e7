//! Engine-level tour: Gröbner bases, normal forms, Schreyer syzygies, ideal
//! quotient, saturation, and the Hilbert function, on small hand-checkable
//! ideals.

use ziegler::groebner::{
    hilbert_function, ideal_groebner_basis, ideal_quotient, normal_form_poly, saturate_irrelevant,
    schreyer_syzygies,
};
use ziegler::scalars::FieldKind;
use ziegler::textio::parse_poly;

fn p(src: &str) -> ziegler::polyring::Poly {
    parse_poly(src, FieldKind::Rational).unwrap()
}

fn main() {
    // Buchberger on a classic: (x^2, x*y + z^2)
    let gb = ideal_groebner_basis(vec![p("x^2"), p("x*y + z^2")]);
    println!("reduced GB of (x^2, x*y + z^2):");
    for g in gb.ideal_generators() {
        println!("  {g}");
    }

    println!("\nnormal forms:");
    for probe in ["x^2*y^3", "x^2 + y*z", "z^4 + y^4"] {
        println!("  NF({probe}) = {}", normal_form_poly(&p(probe), &gb));
    }

    // Koszul syzygies of a regular sequence
    let koszul = ideal_groebner_basis(vec![p("x^2"), p("y^2"), p("z^2")]);
    let syz = schreyer_syzygies(&koszul);
    println!("\nsyzygies of (x^2, y^2, z^2):");
    for s in &syz.generators {
        println!("  {s}");
    }

    // colon ideal and saturation
    let q = ideal_quotient(&gb, &p("z"));
    let rendered: Vec<String> = q.ideal_generators().iter().map(|g| g.to_string()).collect();
    println!("\n(x^2, x*y + z^2) : z = ({})", rendered.join(", "));

    let j = ideal_groebner_basis(vec![p("x^2"), p("x*y"), p("x*z")]);
    let sat = saturate_irrelevant(&j).unwrap();
    let rendered: Vec<String> = sat
        .ideal_generators()
        .iter()
        .map(|g| g.to_string())
        .collect();
    println!("saturation of (x^2, x*y, x*z) = ({})", rendered.join(", "));

    // Hilbert function of the quotient by the irrelevant ideal's square
    let m2 = ideal_groebner_basis(vec![
        p("x^2"),
        p("x*y"),
        p("x*z"),
        p("y^2"),
        p("y*z"),
        p("z^2"),
    ]);
    let values: Vec<i64> = (0..5).map(|t| hilbert_function(&m2, t)).collect();
    println!("Hilbert function of S/m^2: {values:?}");
}
