//! Curve files and machine reports: build a curve in code, round-trip it
//! through the JSON curve-file format, and emit a format_version-1 report.

use ziegler::curvelab::{resolution_analysis, Component, ComponentKind, Curve, Options};
use ziegler::resolution::regularity;
use ziegler::textio::{
    curve_json, parse_curve_json, parse_poly, write_report, CurveReport, Report, ReportFormat,
};
use ziegler::FieldKind;

fn main() {
    let field = FieldKind::Rational;
    let curve = Curve::new(
        "three-lines-and-a-conic",
        field,
        vec![
            Component {
                label: "C".into(),
                kind: ComponentKind::Conic,
                poly: parse_poly("x^2 + y^2 - z^2", field).unwrap(),
            },
            Component {
                label: "L1".into(),
                kind: ComponentKind::Line,
                poly: parse_poly("x", field).unwrap(),
            },
            Component {
                label: "L2".into(),
                kind: ComponentKind::Line,
                poly: parse_poly("y", field).unwrap(),
            },
            Component {
                label: "L3".into(),
                kind: ComponentKind::Line,
                poly: parse_poly("x + y - 2*z", field).unwrap(),
            },
        ],
    )
    .unwrap();

    let json = curve_json(&curve);
    println!("curve file:\n{json}");
    let reloaded = parse_curve_json(&json).unwrap();
    assert_eq!(reloaded, curve);

    let a = resolution_analysis(&curve, &Options::default());
    let mut report = Report::new("resolve");
    report.curves.push(CurveReport {
        name: curve.name.clone(),
        degree: curve.degree(),
        field: curve.field.to_string(),
        betti: a.betti.triples(),
        resolution: a.resolution.display_chain(),
        regularity: regularity(&a.betti),
        tjurina: a.tjurina,
        reduced: a.reduced_ok,
        hilbert_profile: Some(a.hilbert_profile.clone()),
        saturated_dims: None,
        ar_generator_degrees: None,
    });
    let bytes = write_report(&report, ReportFormat::Machine);
    println!("machine report:\n{}", String::from_utf8(bytes).unwrap());
}
