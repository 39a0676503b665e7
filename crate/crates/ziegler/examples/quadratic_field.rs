//! Exact arithmetic in Q(sqrt(2)) and a full resolution over it: the Cmb123
//! arrangements need the coefficient sqrt(2), written `r` in the expression
//! grammar.

use ziegler::curvelab::{resolution_analysis, Options};
use ziegler::scalars::{rat, FieldElement, QuadExt};
use ziegler::textio::parse_poly;
use ziegler::FieldKind;

fn main() {
    // (3 + 2 sqrt2)(3 - 2 sqrt2) = 1, so the inverse is the conjugate
    let u = QuadExt::new(rat(3, 1), rat(2, 1), 2).unwrap();
    let v = u.conjugate();
    println!("u = {u}");
    println!("u * conj(u) = {}", u.mul(&v).unwrap());
    println!("u^-1 = {}", u.inv().unwrap());

    let s = FieldElement::sqrt_d(2).unwrap();
    println!("r * r = {}", &s * &s);
    println!(
        "(1 + r)^-1 = {}",
        (&FieldElement::one() + &s).inv().unwrap()
    );

    // parsing with `r` as sqrt(2)
    let field = FieldKind::Quadratic(2);
    let m1 = parse_poly("2*r*x + y + 2*z", field).unwrap();
    println!("\nparsed line over {field}: {m1}");

    // the two Cmb123 arrangements differ only in which sqrt(2)-line they use,
    // and the Betti tables still tell them apart
    for key in ["deg7-B1,1", "deg7-B1,2"] {
        let e = ziegler::catalog::entry(key).unwrap();
        let a = resolution_analysis(&e.curve, &Options::default());
        println!("{key}: {}", a.resolution.display_chain());
    }
}
