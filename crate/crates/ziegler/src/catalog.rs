//! Built-in registry of the bundled curves: two six-cusp sextics, twelve
//! degree-7 conic-line arrangements in five combinatorial classes, and three
//! degree-8 arrangements sharing one combinatorial class. Each entry carries
//! its expected minimal Betti table, so the whole catalog doubles as a
//! regression corpus (`verify_all`).
//!
//! Coefficients are stored as expression strings and parsed at load; the
//! strings are the single source of truth for both the library and the
//! exported curve files.

use crate::curvelab::{
    resolution_analysis, Component, ComponentKind, Curve, Options, ResolutionAnalysis,
};
use crate::resolution::BettiTable;
use crate::scalars::FieldKind;
use crate::textio::parse_poly;

type ComponentDef = (&'static str, ComponentKind, &'static str);

struct EntryDef {
    key: &'static str,
    combinatorics_label: &'static str,
    group: &'static str,
    field: FieldKind,
    components: &'static [ComponentDef],
    expected: &'static [(i64, i64, i64)],
}

use ComponentKind::{Conic, Line, SexticIrreducible};

// shared degree-7 components
const C_STD: ComponentDef = ("C", Conic, "-x^2 + y*z");
const L1: ComponentDef = ("L1", Line, "3*x + y + 2*z");
const L2: ComponentDef = ("L2", Line, "-3*x + y + 2*z");

// combinatorics Cmb123, over Q(sqrt(2))
const D_123: ComponentDef = (
    "D",
    Conic,
    "(12*r - 18)*x^2 + (-36*r + 51)*x*z + y*z + (24*r - 34)*z^2",
);
const M1_123: ComponentDef = ("M1", Line, "2*r*x + y + 2*z");
const M2_123: ComponentDef = ("M2", Line, "-2*r*x + y + 2*z");

// combinatorics Cmb124
const D_124: ComponentDef = ("D", Conic, "-9/8*x^2 + y*z");
const M1_124: ComponentDef = ("M1", Line, "-x + y - 2*z");
const M2_124: ComponentDef = ("M2", Line, "y - z");

// combinatorics Cmb212
const C1_212: ComponentDef = ("C1", Conic, "x^2 + x*y + y^2 - 27/4*z^2");
const C2_212: ComponentDef = ("C2", Conic, "676*x^2 + 764*x*y + 676*y^2 - 4563*z^2");
const M0_212: ComponentDef = ("M0", Line, "y");
const M1_212: ComponentDef = ("M1", Line, "15*x + 8*y - 39*z");
const M2_212: ComponentDef = ("M2", Line, "15*x + 8*y + 39*z");
const M3_212: ComponentDef = ("M3", Line, "8*x + 15*y - 39*z");

// combinatorics Cmb223; the degree-8 arrangements reuse these components
const C1_223: ComponentDef = ("C1", Conic, "-x^2 + y*z");
const C2_223: ComponentDef = ("C2", Conic, "-10*x*y + y^2 + 25*y*z - 36*z^2");
const D_223: ComponentDef = ("D", Conic, "-5/4*x^2 + 2*x*z + y*z - 3*z^2");
const M1_223: ComponentDef = ("M1", Line, "-32/5*x + y + 256/25*z");
const M2_223: ComponentDef = ("M2", Line, "y");
const M3_223: ComponentDef = ("M3", Line, "-10*x + y + 25*z");
const M4_223: ComponentDef = ("M4", Line, "-18/5*x + y + 81/25*z");

// combinatorics Cmb224
const C1_224: ComponentDef = ("C1", Conic, "-x^2 + y*z + 2*z^2");
const C2_224: ComponentDef = ("C2", Conic, "x^2 + y^2 - 2*y*z - 4*z^2");
const D_224: ComponentDef = ("D", Conic, "-1/2*x^2 + y*z + 2*z^2");
const M1_224: ComponentDef = ("M1", Line, "-x + y");
const M2_224: ComponentDef = ("M2", Line, "-3*x + y + 4*z");

const DEG7_FIRST_SHAPE: &[(i64, i64, i64)] = &[
    (0, 0, 1),
    (1, 6, 3),
    (2, 9, 1),
    (2, 10, 1),
    (2, 11, 1),
    (3, 12, 1),
];
const DEG7_SECOND_SHAPE: &[(i64, i64, i64)] = &[(0, 0, 1), (1, 6, 3), (2, 10, 4), (3, 11, 2)];
const DEG7_B4_SHAPE: &[(i64, i64, i64)] = &[(0, 0, 1), (1, 6, 3), (2, 10, 3), (3, 12, 1)];
const DEG8_SECOND_SHAPE: &[(i64, i64, i64)] = &[(0, 0, 1), (1, 7, 3), (2, 12, 5), (3, 13, 3)];

const ENTRIES: &[EntryDef] = &[
    EntryDef {
        key: "sextic-B1",
        combinatorics_label: "sextic-6-cusps",
        group: "sextic-pair",
        field: FieldKind::Rational,
        components: &[(
            "B1",
            SexticIrreducible,
            "(x^2 + y^2 + z^2)^3 + (x^3 + y^3 + z^3)^2",
        )],
        expected: &[
            (0, 0, 1),
            (1, 5, 3),
            (2, 8, 1),
            (2, 10, 3),
            (3, 11, 1),
            (3, 12, 1),
        ],
    },
    EntryDef {
        key: "sextic-B2",
        combinatorics_label: "sextic-6-cusps",
        group: "sextic-pair",
        field: FieldKind::Rational,
        components: &[(
            "B2",
            SexticIrreducible,
            "x^6 - x^4*y^2 + 1/3*x^2*y^4 - 1/27*y^6 + 2*x^3*y^2*z - 2*x^4*z^2 \
             - 5/3*x^2*y^2*z^2 - 2/9*y^4*z^2 + 4/3*x^2*z^4 + 5/9*y^2*z^4 - 8/27*z^6",
        )],
        expected: &[(0, 0, 1), (1, 5, 3), (2, 9, 2), (2, 10, 3), (3, 11, 3)],
    },
    EntryDef {
        key: "deg7-B1,1",
        combinatorics_label: "Cmb123",
        group: "deg7-pair-1",
        field: FieldKind::Quadratic(2),
        components: &[C_STD, L1, L2, D_123, M1_123],
        expected: DEG7_FIRST_SHAPE,
    },
    EntryDef {
        key: "deg7-B1,2",
        combinatorics_label: "Cmb123",
        group: "deg7-pair-1",
        field: FieldKind::Quadratic(2),
        components: &[C_STD, L1, L2, D_123, M2_123],
        expected: DEG7_SECOND_SHAPE,
    },
    EntryDef {
        key: "deg7-B2,1",
        combinatorics_label: "Cmb124",
        group: "deg7-pair-2",
        field: FieldKind::Rational,
        components: &[C_STD, L1, L2, D_124, M1_124],
        expected: DEG7_FIRST_SHAPE,
    },
    EntryDef {
        key: "deg7-B2,2",
        combinatorics_label: "Cmb124",
        group: "deg7-pair-2",
        field: FieldKind::Rational,
        components: &[C_STD, L1, L2, D_124, M2_124],
        expected: DEG7_SECOND_SHAPE,
    },
    EntryDef {
        key: "deg7-B3,1",
        combinatorics_label: "Cmb212",
        group: "deg7-pair-3",
        field: FieldKind::Rational,
        components: &[C1_212, C2_212, M0_212, M1_212, M2_212],
        expected: DEG7_FIRST_SHAPE,
    },
    EntryDef {
        key: "deg7-B3,2",
        combinatorics_label: "Cmb212",
        group: "deg7-pair-3",
        field: FieldKind::Rational,
        components: &[C1_212, C2_212, M0_212, M1_212, M3_212],
        expected: DEG7_SECOND_SHAPE,
    },
    EntryDef {
        key: "deg7-B4,1",
        combinatorics_label: "Cmb223",
        group: "deg7-tuple-4",
        field: FieldKind::Rational,
        components: &[C1_223, C2_223, D_223, M1_223],
        expected: DEG7_B4_SHAPE,
    },
    EntryDef {
        key: "deg7-B4,2",
        combinatorics_label: "Cmb223",
        group: "deg7-tuple-4",
        field: FieldKind::Rational,
        components: &[C1_223, C2_223, D_223, M2_223],
        expected: DEG7_B4_SHAPE,
    },
    EntryDef {
        key: "deg7-B4,3",
        combinatorics_label: "Cmb223",
        group: "deg7-tuple-4",
        field: FieldKind::Rational,
        components: &[C1_223, C2_223, D_223, M3_223],
        expected: DEG7_B4_SHAPE,
    },
    EntryDef {
        key: "deg7-B4,4",
        combinatorics_label: "Cmb223",
        group: "deg7-tuple-4",
        field: FieldKind::Rational,
        components: &[C1_223, C2_223, D_223, M4_223],
        expected: DEG7_B4_SHAPE,
    },
    EntryDef {
        key: "deg7-B5,1",
        combinatorics_label: "Cmb224",
        group: "deg7-pair-5",
        field: FieldKind::Rational,
        components: &[C1_224, C2_224, D_224, M1_224],
        expected: &[
            (0, 0, 1),
            (1, 6, 3),
            (2, 9, 1),
            (2, 10, 1),
            (2, 12, 1),
            (3, 13, 1),
        ],
    },
    EntryDef {
        key: "deg7-B5,2",
        combinatorics_label: "Cmb224",
        group: "deg7-pair-5",
        field: FieldKind::Rational,
        components: &[C1_224, C2_224, D_224, M2_224],
        expected: &[
            (0, 0, 1),
            (1, 6, 3),
            (2, 10, 3),
            (2, 11, 1),
            (3, 11, 1),
            (3, 12, 1),
        ],
    },
    EntryDef {
        key: "deg8-B1",
        combinatorics_label: "cmb223-plus-bitangent",
        group: "deg8-triple",
        field: FieldKind::Rational,
        components: &[C1_223, C2_223, D_223, M1_223, M2_223],
        expected: &[(0, 0, 1), (1, 7, 3), (2, 11, 1), (2, 12, 2), (3, 14, 1)],
    },
    EntryDef {
        key: "deg8-B2",
        combinatorics_label: "cmb223-plus-bitangent",
        group: "deg8-triple",
        field: FieldKind::Rational,
        components: &[C1_223, C2_223, D_223, M1_223, M3_223],
        expected: DEG8_SECOND_SHAPE,
    },
    EntryDef {
        key: "deg8-B3",
        combinatorics_label: "cmb223-plus-bitangent",
        group: "deg8-triple",
        field: FieldKind::Rational,
        components: &[C1_223, C2_223, D_223, M3_223, M4_223],
        expected: &[(0, 0, 1), (1, 7, 3), (2, 12, 5), (3, 13, 3)],
    },
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub curve: Curve,
    pub combinatorics_label: &'static str,
    /// Ties together the members of one Zariski tuple.
    pub group: &'static str,
    pub expected_betti: BettiTable,
}

fn build(def: &EntryDef) -> CatalogEntry {
    let components = def
        .components
        .iter()
        .map(|&(label, kind, src)| Component {
            label: label.to_string(),
            kind,
            poly: parse_poly(src, def.field)
                .unwrap_or_else(|e| panic!("catalog entry {}: {e}", def.key)),
        })
        .collect();
    let curve = Curve::new(def.key, def.field, components)
        .unwrap_or_else(|e| panic!("catalog entry {}: {e}", def.key));
    CatalogEntry {
        key: def.key,
        curve,
        combinatorics_label: def.combinatorics_label,
        group: def.group,
        expected_betti: BettiTable::from_triples(def.expected),
    }
}

/// All bundled curves, in a fixed canonical order.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    ENTRIES.iter().map(build).collect()
}

pub fn catalog_keys() -> Vec<&'static str> {
    ENTRIES.iter().map(|d| d.key).collect()
}

pub fn entry(key: &str) -> Option<CatalogEntry> {
    ENTRIES.iter().find(|d| d.key == key).map(build)
}

/// Result of re-deriving one catalog entry from scratch.
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub key: String,
    pub pass: bool,
    pub detail: String,
    pub reduced: Option<bool>,
    pub tjurina: Option<i64>,
    pub computed: Option<BettiTable>,
    pub expected: BettiTable,
}

/// Recompute the minimal Betti table of an entry and compare with the stored
/// expectation. Failures (including non-reduced curves) come back as report
/// rows, never as panics.
pub fn verify(entry: &CatalogEntry, opts: &Options) -> VerifyOutcome {
    let analysis: ResolutionAnalysis = resolution_analysis(&entry.curve, opts);
    let reduced = analysis.reduced_ok;
    let computed = analysis.betti.clone();
    let pass = reduced && computed == entry.expected_betti;
    let detail = if !reduced {
        "curve is not reduced".to_string()
    } else if pass {
        format!("tau = {}", analysis.tjurina)
    } else {
        match crate::curvelab::compare_betti(&computed, &entry.expected_betti) {
            crate::curvelab::BettiComparison::Distinct { at, left, right } => format!(
                "betti mismatch at (i, j) = ({}, {}): computed {left}, expected {right}",
                at.0, at.1
            ),
            crate::curvelab::BettiComparison::Equal => unreachable!("pass would be true"),
        }
    };
    VerifyOutcome {
        key: entry.key.to_string(),
        pass,
        detail,
        reduced: Some(reduced),
        tjurina: Some(analysis.tjurina),
        computed: Some(computed),
        expected: entry.expected_betti.clone(),
    }
}

/// Verify every entry, optionally in parallel; results always come back in
/// catalog key order.
pub fn verify_all(opts: &Options, parallel: bool) -> Vec<VerifyOutcome> {
    let entries = catalog_entries();
    if !parallel {
        return entries.iter().map(|e| verify(e, opts)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = entries
            .iter()
            .map(|e| {
                let opts = opts.clone();
                scope.spawn(move || verify(e, &opts))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify worker panicked"))
            .collect()
    })
}
