//! The curve-facing layer: reduced plane curves with named components,
//! Jacobian ideals, minimal resolutions of the Milnor algebra `S/J`,
//! singular-scheme analytics, and the strong-Ziegler comparison of pairs with
//! asserted-equal combinatorics.

use crate::groebner::{
    self, hilbert_function, ideal_groebner_basis, saturate_irrelevant, GroebnerBasis,
};
use crate::polyring::{Poly, Var};
use crate::resolution::{
    betti_table, check_complex, free_resolution, hilbert_from_betti, minimize, regularity,
    BettiTable, FreeResolution,
};
use crate::scalars::FieldKind;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("curve has no components")]
    Empty,
    #[error("component '{0}' is the zero polynomial")]
    ZeroComponent(String),
    #[error("component '{0}' is not homogeneous")]
    NotHomogeneous(String),
    #[error(
        "component '{label}' has degree {actual}, but kind '{kind}' requires degree {expected}"
    )]
    DegreeMismatch {
        label: String,
        kind: String,
        expected: i64,
        actual: i64,
    },
    #[error("component '{label}' has coefficients outside the declared field {declared}")]
    FieldMismatch { label: String, declared: FieldKind },
    #[error("curve is not reduced: the Hilbert function of S/J keeps growing")]
    NonReduced { profile: Vec<(i64, i64)> },
    #[error("unknown singularity kind '{0}'")]
    UnknownSingularity(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentKind {
    Line,
    Conic,
    SexticIrreducible,
}

impl ComponentKind {
    pub fn degree(self) -> i64 {
        match self {
            ComponentKind::Line => 1,
            ComponentKind::Conic => 2,
            ComponentKind::SexticIrreducible => 6,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ComponentKind::Line => "line",
            ComponentKind::Conic => "conic",
            ComponentKind::SexticIrreducible => "sextic-irreducible",
        }
    }

    pub fn parse(s: &str) -> Option<ComponentKind> {
        match s {
            "line" => Some(ComponentKind::Line),
            "conic" => Some(ComponentKind::Conic),
            "sextic-irreducible" => Some(ComponentKind::SexticIrreducible),
            _ => None,
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub label: String,
    pub kind: ComponentKind,
    pub poly: Poly,
}

/// A reduced plane curve presented as a sum of labelled components over a
/// declared coefficient field; the defining polynomial is the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub name: String,
    pub field: FieldKind,
    pub components: Vec<Component>,
}

impl Curve {
    pub fn new(
        name: impl Into<String>,
        field: FieldKind,
        components: Vec<Component>,
    ) -> Result<Curve, CurveError> {
        if components.is_empty() {
            return Err(CurveError::Empty);
        }
        for c in &components {
            if c.poly.is_zero() {
                return Err(CurveError::ZeroComponent(c.label.clone()));
            }
            let d = c
                .poly
                .homogeneous_degree()
                .map_err(|_| CurveError::NotHomogeneous(c.label.clone()))?;
            if d != c.kind.degree() {
                return Err(CurveError::DegreeMismatch {
                    label: c.label.clone(),
                    kind: c.kind.as_str().to_string(),
                    expected: c.kind.degree(),
                    actual: d,
                });
            }
            if !field.admits(c.poly.field()) {
                return Err(CurveError::FieldMismatch {
                    label: c.label.clone(),
                    declared: field,
                });
            }
        }
        Ok(Curve {
            name: name.into(),
            field,
            components,
        })
    }

    pub fn degree(&self) -> i64 {
        self.components.iter().map(|c| c.kind.degree()).sum()
    }
}

/// Defining polynomial `f_B`: the product of the component polynomials.
pub fn curve_polynomial(c: &Curve) -> Poly {
    let mut f = Poly::one();
    for comp in &c.components {
        f = f.mul(&comp.poly);
    }
    f
}

/// Reduced Gröbner basis of the Jacobian ideal `⟨∂x f, ∂y f, ∂z f⟩`.
pub fn jacobian_ideal(f: &Poly) -> GroebnerBasis {
    jacobian_ideal_with(f, None)
}

pub fn jacobian_ideal_with(f: &Poly, cache: Option<&groebner::GbCache>) -> GroebnerBasis {
    let d = f
        .homogeneous_degree()
        .expect("defining polynomial must be homogeneous");
    assert!(d >= 2, "Jacobian ideal needs degree >= 2");
    let partials: Vec<Poly> = Var::ALL.iter().map(|&v| f.partial(v)).collect();
    assert!(
        partials.iter().any(|p| !p.is_zero()),
        "partials of a nonconstant polynomial cannot all vanish in characteristic 0"
    );
    match cache {
        Some(cache) => cache.ideal_gb(partials),
        None => ideal_groebner_basis(partials),
    }
}

/// Knobs shared by the analysis entry points. `check` turns on the expensive
/// internal verifications (S-pair closure, d∘d = 0, the Hilbert cross-check);
/// `max_degree` overrides the Hilbert-profile guard band (default
/// regularity + 3).
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub check: bool,
    pub max_degree: Option<i64>,
    pub cache: Option<Arc<groebner::GbCache>>,
}

/// Singular-scheme analytics for one curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularReport {
    /// Stabilized value of the Hilbert function of `S/J` (the global Tjurina
    /// number for a reduced curve).
    pub tjurina: i64,
    /// `(t, dim (S/J)_t)` for `t = 0 .. max_degree`.
    pub hilbert_profile: Vec<(i64, i64)>,
    /// `k → dim (J^sat)_k` for `k = 1..3`; detects low-degree curves through
    /// the singular scheme.
    pub saturated_piece_dims: BTreeMap<i64, i64>,
    /// Whether the profile tail is constant (reduced curve ⇔ 0-dimensional
    /// singular scheme ⇔ eventually constant Hilbert function).
    pub reduced_ok: bool,
}

/// Resolution-side results for one curve (no saturation data).
#[derive(Debug, Clone)]
pub struct ResolutionAnalysis {
    pub name: String,
    pub degree: i64,
    pub jacobian: GroebnerBasis,
    /// Minimal graded free resolution of `M(B) = S/J_B`.
    pub resolution: FreeResolution,
    pub betti: BettiTable,
    pub hilbert_profile: Vec<(i64, i64)>,
    pub reduced_ok: bool,
    /// Stabilized Hilbert value; the global Tjurina number when reduced.
    pub tjurina: i64,
}

/// Everything the analysis pipeline produces for one curve, computed once.
#[derive(Debug, Clone)]
pub struct CurveAnalysis {
    pub name: String,
    pub degree: i64,
    pub jacobian: GroebnerBasis,
    /// Minimal graded free resolution of `M(B) = S/J_B`.
    pub resolution: FreeResolution,
    pub betti: BettiTable,
    pub report: SingularReport,
}

pub fn resolution_analysis(c: &Curve, opts: &Options) -> ResolutionAnalysis {
    let f = curve_polynomial(c);
    let jacobian = jacobian_ideal_with(&f, opts.cache.as_deref());
    if opts.check {
        assert!(
            groebner::verify_basis(&jacobian),
            "S-pair closure failed for the Jacobian basis"
        );
        assert!(
            jacobian.contains_poly(&f),
            "Euler identity violated: f is not in its own Jacobian ideal"
        );
    }
    let raw = free_resolution(&jacobian);
    if opts.check {
        check_complex(&raw).expect("raw resolution is a complex");
    }
    let res = minimize(&raw);
    if opts.check {
        check_complex(&res).expect("minimal resolution is a complex");
    }
    let betti = betti_table(&res).expect("minimized resolution");
    let reg = regularity(&betti);
    let max_degree = opts.max_degree.unwrap_or(reg + 3).max(reg + 1);
    let hilbert_profile: Vec<(i64, i64)> = (0..=max_degree)
        .map(|t| (t, hilbert_function(&jacobian, t)))
        .collect();
    if opts.check {
        for &(t, dim) in &hilbert_profile {
            assert_eq!(
                dim,
                hilbert_from_betti(&betti, t),
                "Hilbert function and Betti twists disagree in degree {t}"
            );
        }
    }
    let tail: Vec<i64> = hilbert_profile
        .iter()
        .filter(|&&(t, _)| t > reg)
        .map(|&(_, dim)| dim)
        .collect();
    let reduced_ok = !tail.is_empty() && tail.iter().all(|&v| v == tail[0]);
    let tjurina = *tail.first().expect("profile extends past the regularity");
    ResolutionAnalysis {
        name: c.name.clone(),
        degree: c.degree(),
        jacobian,
        resolution: res,
        betti,
        hilbert_profile,
        reduced_ok,
        tjurina,
    }
}

pub fn analyze(c: &Curve) -> CurveAnalysis {
    analyze_with(c, &Options::default())
}

pub fn analyze_with(c: &Curve, opts: &Options) -> CurveAnalysis {
    let base = resolution_analysis(c, opts);
    let saturated = saturate_irrelevant(&base.jacobian).expect("saturation stabilizes");
    let saturated_piece_dims = (1..=3)
        .map(|k| (k, groebner::ideal_piece_dim(&saturated, k)))
        .collect();
    CurveAnalysis {
        name: base.name,
        degree: base.degree,
        jacobian: base.jacobian,
        resolution: base.resolution,
        betti: base.betti,
        report: SingularReport {
            tjurina: base.tjurina,
            hilbert_profile: base.hilbert_profile,
            saturated_piece_dims,
            reduced_ok: base.reduced_ok,
        },
    }
}

/// Minimal graded free resolution of the Milnor algebra of a reduced curve,
/// with its Betti table. Non-reduced curves are rejected with the offending
/// Hilbert profile.
pub fn milnor_resolution(c: &Curve) -> Result<(FreeResolution, BettiTable), CurveError> {
    milnor_resolution_with(c, &Options::default())
}

pub fn milnor_resolution_with(
    c: &Curve,
    opts: &Options,
) -> Result<(FreeResolution, BettiTable), CurveError> {
    let analysis = resolution_analysis(c, opts);
    if !analysis.reduced_ok {
        return Err(CurveError::NonReduced {
            profile: analysis.hilbert_profile,
        });
    }
    Ok((analysis.resolution, analysis.betti))
}

pub fn singular_report(c: &Curve) -> SingularReport {
    analyze(c).report
}

/// Degrees of a minimal generating set of the Jacobian syzygy module
/// `AR(B) ⊂ S^3`, read off the second homological step: each `β_{2,j}`
/// contributes `j - (d-1)` with multiplicity.
pub fn ar_generator_degrees(b: &BettiTable, curve_degree: i64) -> Vec<i64> {
    b.twists_at(2)
        .into_iter()
        .map(|j| j - (curve_degree - 1))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BettiComparison {
    Equal,
    /// First differing entry in (i, j)-lexicographic order, with both values.
    Distinct {
        at: (i64, i64),
        left: i64,
        right: i64,
    },
}

pub fn compare_betti(a: &BettiTable, b: &BettiTable) -> BettiComparison {
    let mut keys: Vec<(i64, i64)> = a.entries.keys().chain(b.entries.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    for key in keys {
        let left = a.get(key.0, key.1);
        let right = b.get(key.0, key.1);
        if left != right {
            return BettiComparison::Distinct {
                at: key,
                left,
                right,
            };
        }
    }
    BettiComparison::Equal
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Equal combinatorics asserted and the Betti tables differ: the graded
    /// syzygy modules cannot be isomorphic.
    StrongZiegler,
    /// Equal combinatorics asserted but the tables agree; module isomorphism
    /// is left open, so no claim either way.
    Inconclusive,
    /// No combinatorics assertion was supplied.
    NotComparable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::StrongZiegler => "strong-ziegler",
            Verdict::Inconclusive => "inconclusive",
            Verdict::NotComparable => "not-comparable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZieglerVerdict {
    pub combinatorics_asserted: bool,
    pub betti_equal: bool,
    pub verdict: Verdict,
    pub comparison: BettiComparison,
}

/// Decide the strong-Ziegler question for a pair of reduced curves with
/// combinatorial equivalence supplied as an assertion.
pub fn ziegler_verdict(
    a: &Curve,
    b: &Curve,
    combinatorics_asserted: bool,
) -> Result<ZieglerVerdict, CurveError> {
    let (_, ba) = milnor_resolution(a)?;
    let (_, bb) = milnor_resolution(b)?;
    Ok(verdict_from_tables(&ba, &bb, combinatorics_asserted))
}

pub fn verdict_from_tables(
    a: &BettiTable,
    b: &BettiTable,
    combinatorics_asserted: bool,
) -> ZieglerVerdict {
    let comparison = compare_betti(a, b);
    let betti_equal = comparison == BettiComparison::Equal;
    let verdict = match (combinatorics_asserted, betti_equal) {
        (false, _) => Verdict::NotComparable,
        (true, false) => Verdict::StrongZiegler,
        (true, true) => Verdict::Inconclusive,
    };
    ZieglerVerdict {
        combinatorics_asserted,
        betti_equal,
        verdict,
        comparison,
    }
}

/// Local singularity types occurring in the catalog, with their Tjurina
/// numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SingularityKind {
    /// A1
    Node,
    /// A2
    Cusp,
    /// A3
    Tacnode,
    /// D4
    OrdinaryTriple,
}

impl SingularityKind {
    pub fn tjurina(self) -> i64 {
        match self {
            SingularityKind::Node => 1,
            SingularityKind::Cusp => 2,
            SingularityKind::Tacnode => 3,
            SingularityKind::OrdinaryTriple => 4,
        }
    }

    pub fn parse(s: &str) -> Result<SingularityKind, CurveError> {
        match s {
            "node" => Ok(SingularityKind::Node),
            "cusp" => Ok(SingularityKind::Cusp),
            "tacnode" => Ok(SingularityKind::Tacnode),
            "triple" | "ordinary-triple" => Ok(SingularityKind::OrdinaryTriple),
            other => Err(CurveError::UnknownSingularity(other.to_string())),
        }
    }
}

/// Total Tjurina number predicted by a singularity census.
pub fn expected_tjurina(counts: &BTreeMap<SingularityKind, i64>) -> i64 {
    assert!(
        counts.values().all(|&n| n >= 0),
        "counts must be non-negative"
    );
    counts.iter().map(|(kind, &n)| kind.tjurina() * n).sum()
}

/// Same, from `(name, count)` pairs as they arrive from user input.
pub fn expected_tjurina_named(counts: &[(&str, i64)]) -> Result<i64, CurveError> {
    let mut map = BTreeMap::new();
    for &(name, n) in counts {
        *map.entry(SingularityKind::parse(name)?).or_insert(0) += n;
    }
    Ok(expected_tjurina(&map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::{betti_display_chain, betti_numerator};
    use crate::textio::parse_poly;

    fn q(src: &str) -> Poly {
        parse_poly(src, FieldKind::Rational).unwrap()
    }

    fn line(label: &str, src: &str) -> Component {
        Component {
            label: label.into(),
            kind: ComponentKind::Line,
            poly: q(src),
        }
    }

    fn conic(label: &str, src: &str) -> Component {
        Component {
            label: label.into(),
            kind: ComponentKind::Conic,
            poly: q(src),
        }
    }

    #[test]
    fn curve_validation() {
        assert!(matches!(
            Curve::new("empty", FieldKind::Rational, vec![]),
            Err(CurveError::Empty)
        ));
        assert!(matches!(
            Curve::new("bad", FieldKind::Rational, vec![line("L", "x^2 + y^2")]),
            Err(CurveError::DegreeMismatch { .. })
        ));
        assert!(matches!(
            Curve::new("bad", FieldKind::Rational, vec![line("L", "x + 1")]),
            Err(CurveError::NotHomogeneous(_))
        ));
        let c = Curve::new(
            "triangle",
            FieldKind::Rational,
            vec![line("X", "x"), line("Y", "y"), line("Z", "z")],
        )
        .unwrap();
        assert_eq!(c.degree(), 3);
        assert_eq!(curve_polynomial(&c), q("x*y*z"));
    }

    #[test]
    fn quadratic_components_need_a_quadratic_field() {
        let p2 = parse_poly("2*r*x + y + 2*z", FieldKind::Quadratic(2)).unwrap();
        let comp = Component {
            label: "M1".into(),
            kind: ComponentKind::Line,
            poly: p2.clone(),
        };
        assert!(matches!(
            Curve::new("bad", FieldKind::Rational, vec![comp.clone()]),
            Err(CurveError::FieldMismatch { .. })
        ));
        assert!(Curve::new("ok", FieldKind::Quadratic(2), vec![comp]).is_ok());
    }

    #[test]
    fn jacobian_of_fermat_cubic() {
        let g = jacobian_ideal(&q("x^3 + y^3 + z^3"));
        let gens: Vec<String> = g.ideal_generators().iter().map(|p| p.to_string()).collect();
        assert_eq!(gens, vec!["x^2", "y^2", "z^2"]);
    }

    #[test]
    fn jacobian_of_triangle_is_monomial() {
        let g = jacobian_ideal(&q("x*y*z"));
        let gens: Vec<String> = g.ideal_generators().iter().map(|p| p.to_string()).collect();
        assert_eq!(gens, vec!["x*y", "x*z", "y*z"]);
    }

    #[test]
    fn smooth_fermat_quintic_ar_degrees_are_koszul() {
        let c = Curve::new(
            "fermat5",
            FieldKind::Rational,
            vec![Component {
                label: "F".into(),
                kind: ComponentKind::SexticIrreducible,
                poly: q("x^6 + y^6 + z^6"),
            }],
        )
        .unwrap();
        let (_, b) = milnor_resolution(&c).unwrap();
        // Koszul: AR is generated by three syzygies in degree d-1 = 5
        assert_eq!(ar_generator_degrees(&b, 6), vec![5, 5, 5]);
    }

    #[test]
    fn non_reduced_curve_is_rejected_with_profile() {
        // f = x^2 * y * z has a non-reduced component
        let c = Curve::new(
            "dbl",
            FieldKind::Rational,
            vec![conic("C", "x^2"), line("Y", "y"), line("Z", "z")],
        )
        .unwrap();
        match milnor_resolution(&c) {
            Err(CurveError::NonReduced { profile }) => {
                let tail: Vec<i64> = profile.iter().rev().take(3).map(|&(_, d)| d).collect();
                assert!(
                    tail.windows(2).all(|w| w[0] > w[1]),
                    "profile must keep growing"
                );
            }
            other => panic!("expected NonReduced, got {other:?}"),
        }
        let rep = singular_report(&c);
        assert!(!rep.reduced_ok);
    }

    #[test]
    fn compare_betti_reports_first_difference() {
        let a = BettiTable::from_triples(&[(0, 0, 1), (1, 5, 3), (2, 8, 1), (2, 10, 3)]);
        let b = BettiTable::from_triples(&[(0, 0, 1), (1, 5, 3), (2, 9, 2), (2, 10, 3)]);
        assert_eq!(compare_betti(&a, &a), BettiComparison::Equal);
        assert_eq!(
            compare_betti(&a, &b),
            BettiComparison::Distinct {
                at: (2, 8),
                left: 1,
                right: 0
            }
        );
        assert_eq!(
            compare_betti(&b, &a),
            BettiComparison::Distinct {
                at: (2, 8),
                left: 0,
                right: 1
            }
        );
    }

    #[test]
    fn verdict_logic() {
        let a = BettiTable::from_triples(&[(0, 0, 1), (1, 1, 1)]);
        let b = BettiTable::from_triples(&[(0, 0, 1), (1, 2, 1)]);
        assert_eq!(
            verdict_from_tables(&a, &b, true).verdict,
            Verdict::StrongZiegler
        );
        assert_eq!(
            verdict_from_tables(&a, &a, true).verdict,
            Verdict::Inconclusive
        );
        assert_eq!(
            verdict_from_tables(&a, &b, false).verdict,
            Verdict::NotComparable
        );
        assert_eq!(
            verdict_from_tables(&a, &a, false).verdict,
            Verdict::NotComparable
        );
    }

    #[test]
    fn census_weights() {
        let mut counts = BTreeMap::new();
        counts.insert(SingularityKind::Node, 7);
        counts.insert(SingularityKind::Tacnode, 6);
        counts.insert(SingularityKind::OrdinaryTriple, 2);
        assert_eq!(expected_tjurina(&counts), 33);
        assert_eq!(expected_tjurina_named(&[("cusp", 6)]).unwrap(), 12);
        assert_eq!(expected_tjurina_named(&[]).unwrap(), 0);
        assert!(matches!(
            expected_tjurina_named(&[("worm", 1)]),
            Err(CurveError::UnknownSingularity(_))
        ));
    }

    #[test]
    fn triangle_milnor_resolution() {
        let c = Curve::new(
            "triangle",
            FieldKind::Rational,
            vec![line("X", "x"), line("Y", "y"), line("Z", "z")],
        )
        .unwrap();
        let (res, b) = milnor_resolution(&c).unwrap();
        // three nodes: tau = 3
        assert_eq!(betti_numerator(&b).stats().half_second_derivative_at_one, 3);
        assert_eq!(singular_report(&c).tjurina, 3);
        assert!(res.minimal);
        assert_eq!(
            betti_display_chain(&b),
            res.display_chain(),
            "betti chain matches the resolution chain"
        );
    }
}
