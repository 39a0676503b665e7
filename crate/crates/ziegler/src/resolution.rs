//! Graded free resolutions by iterated Schreyer syzygies, minimization by
//! cancelling scalar entries, graded Betti tables, and the Hilbert-series
//! analytics (numerator, regularity) used to cross-check them.

use crate::groebner::{schreyer_syzygies, GroebnerBasis, LeadTerm, ModuleElement};
use crate::polyring::Poly;
use std::collections::BTreeMap;
use std::fmt;

pub type PolyMatrix = Vec<Vec<Poly>>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolutionError {
    #[error("resolution must be minimized before reading Betti numbers")]
    NotMinimal,
    #[error("complex is broken: {0}")]
    BrokenComplex(String),
}

/// A chain `0 → F_p → … → F_1 → F_0` of twisted free modules.
///
/// `twist_vectors[i]` lists the twists `a` of `F_i = ⊕ S(-a)`;
/// `differentials[i]` is the matrix of `d_{i+1}: F_{i+1} → F_i`, with one row
/// per generator of `F_i` and one column per generator of `F_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeResolution {
    pub twist_vectors: Vec<Vec<i64>>,
    pub differentials: Vec<PolyMatrix>,
    pub minimal: bool,
}

impl FreeResolution {
    /// Homological length `p` (number of nonzero modules past `F_0`).
    pub fn length(&self) -> usize {
        self.twist_vectors.len() - 1
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twist_vectors[i].len()
    }

    /// Paper-style chain, leftmost module first:
    /// `0 → S(-11) ⊕ S(-12) → … → S(0)`.
    pub fn display_chain(&self) -> String {
        let mut parts = vec!["0".to_string()];
        for tv in self.twist_vectors.iter().rev() {
            parts.push(render_module(tv));
        }
        parts.join(" → ")
    }
}

fn render_module(twists: &[i64]) -> String {
    if twists.is_empty() {
        return "0".to_string();
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &a in twists {
        *counts.entry(a).or_insert(0) += 1;
    }
    counts
        .iter()
        .map(|(&a, &k)| {
            let piece = if a == 0 {
                "S(0)".to_string()
            } else {
                format!("S({})", -a)
            };
            if k == 1 {
                piece
            } else {
                format!("{piece}^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

/// Sort a basis for the next Schreyer step: by lead position, then lead
/// monomial lexicographically descending. This ordering makes each syzygy
/// level drop the earliest remaining variable from its lead terms, which
/// bounds the chain length by the number of variables.
fn sort_for_schreyer(g: &mut GroebnerBasis) {
    let order = g.order.clone();
    g.generators.sort_by(|a, b| {
        let la = a.lead(&order).expect("nonzero basis element");
        let lb = b.lead(&order).expect("nonzero basis element");
        la.pos.cmp(&lb.pos).then_with(|| lb.mon.lex_cmp(&la.mon))
    });
}

fn matrix_of(gens: &[ModuleElement], rows: usize) -> PolyMatrix {
    let mut m = vec![vec![Poly::zero(); gens.len()]; rows];
    for (c, g) in gens.iter().enumerate() {
        assert_eq!(g.rank(), rows);
        for (r, p) in g.components.iter().enumerate() {
            m[r][c] = p.clone();
        }
    }
    m
}

/// Free resolution of `F_0 / span(J)` by iterated Schreyer syzygies:
/// `F_1` is built on the (reduced) Gröbner basis, each further step on the
/// syzygies of the previous one, until the syzygy module vanishes. The result
/// is generally non-minimal; see [`minimize`].
pub fn free_resolution(j: &GroebnerBasis) -> FreeResolution {
    assert!(j.reduced, "free_resolution expects a reduced Gröbner basis");
    let mut twist_vectors = vec![j.twists.clone()];
    let mut differentials: Vec<PolyMatrix> = Vec::new();
    let mut current = j.clone();
    sort_for_schreyer(&mut current);
    if current.generators.is_empty() {
        return FreeResolution {
            twist_vectors,
            differentials,
            minimal: true,
        };
    }
    twist_vectors.push(current.generator_degrees());
    differentials.push(matrix_of(&current.generators, current.rank()));
    loop {
        let mut syz = schreyer_syzygies(&current);
        if syz.generators.is_empty() {
            break;
        }
        sort_for_schreyer(&mut syz);
        twist_vectors.push(syz.generator_degrees());
        differentials.push(matrix_of(&syz.generators, current.generators.len()));
        current = syz;
        assert!(
            twist_vectors.len() <= 4,
            "resolution exceeded length 3, impossible over k[x,y,z]"
        );
    }
    FreeResolution {
        twist_vectors,
        differentials,
        minimal: false,
    }
}

fn scalar_entry(p: &Poly) -> Option<crate::scalars::FieldElement> {
    match p.terms() {
        [(c, m)] if m.degree() == 0 => Some(c.clone()),
        _ => None,
    }
}

/// Minimize a resolution: repeatedly cancel a scalar entry of some
/// differential. Cancelling `d_i[r][c] = λ` replaces `d_i` by its Schur
/// complement (dropping row `r` and column `c`), deletes row `c` of `d_{i+1}`
/// and column `r` of `d_{i-1}`, and removes the two cancelled twists. Scalars
/// are searched in fixed row-major scan order for reproducibility.
pub fn minimize(r: &FreeResolution) -> FreeResolution {
    let mut tv = r.twist_vectors.clone();
    let mut ds = r.differentials.clone();
    'scan: loop {
        for i in 0..ds.len() {
            let rows = ds[i].len();
            let cols = if rows > 0 { ds[i][0].len() } else { 0 };
            for row in 0..rows {
                for col in 0..cols {
                    let Some(lambda) = scalar_entry(&ds[i][row][col]) else {
                        continue;
                    };
                    debug_assert_eq!(tv[i][row], tv[i + 1][col]);
                    let inv = lambda.inv().expect("nonzero scalar");
                    // Schur complement on d_i
                    for r2 in 0..rows {
                        if r2 == row {
                            continue;
                        }
                        if ds[i][r2][col].is_zero() {
                            continue;
                        }
                        let factor = ds[i][r2][col].scale(&inv);
                        for c2 in 0..cols {
                            if c2 == col || ds[i][row][c2].is_zero() {
                                continue;
                            }
                            let sub = factor.mul(&ds[i][row][c2]);
                            ds[i][r2][c2] = ds[i][r2][c2].sub(&sub);
                        }
                    }
                    // drop row `row` and column `col` of d_i
                    ds[i].remove(row);
                    for r2 in ds[i].iter_mut() {
                        r2.remove(col);
                    }
                    // d_{i+1} loses the row for the cancelled generator of F_{i+1}
                    if i + 1 < ds.len() {
                        ds[i + 1].remove(col);
                    }
                    // d_{i-1} loses the column for the cancelled generator of F_i
                    if i > 0 {
                        for r2 in ds[i - 1].iter_mut() {
                            r2.remove(row);
                        }
                    }
                    tv[i].remove(row);
                    tv[i + 1].remove(col);
                    continue 'scan;
                }
            }
        }
        break;
    }
    // drop trailing zero modules
    while tv.len() > 1 && tv.last().is_some_and(Vec::is_empty) {
        tv.pop();
        ds.pop();
    }
    FreeResolution {
        twist_vectors: tv,
        differentials: ds,
        minimal: true,
    }
}

/// Graded Betti numbers: `entries[(i, j)] = β_{i,j}`, the multiplicity of the
/// twist `S(-j)` at homological index `i` of a minimal resolution.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(i64, i64), i64>,
}

impl BettiTable {
    pub fn from_triples(triples: &[(i64, i64, i64)]) -> BettiTable {
        let mut entries = BTreeMap::new();
        for &(i, j, b) in triples {
            if b != 0 {
                *entries.entry((i, j)).or_insert(0) += b;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: i64, j: i64) -> i64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn triples(&self) -> Vec<(i64, i64, i64)> {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect()
    }

    /// Number of homological steps (max `i`).
    pub fn length(&self) -> i64 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn total_rank(&self, i: i64) -> i64 {
        self.entries
            .iter()
            .filter(|(&(h, _), _)| h == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// Σ_i (-1)^i Σ_j β_{i,j}; zero for the resolution of `S/J`, `J ≠ 0`.
    pub fn alternating_rank_sum(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&(i, _), &b)| if i % 2 == 0 { b } else { -b })
            .sum()
    }

    /// Twist multiset at homological index `i`, ascending.
    pub fn twists_at(&self, i: i64) -> Vec<i64> {
        let mut out = Vec::new();
        for (&(h, j), &b) in &self.entries {
            if h == i {
                for _ in 0..b {
                    out.push(j);
                }
            }
        }
        out
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style grid: row `d` column `i` holds `β_{i, i+d}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(empty Betti table)");
        }
        let imax = self.length();
        let dmax = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        write!(f, "      ")?;
        for i in 0..=imax {
            write!(f, "{i:>5}")?;
        }
        writeln!(f)?;
        write!(f, "total:")?;
        for i in 0..=imax {
            write!(f, "{:>5}", self.total_rank(i))?;
        }
        for d in 0..=dmax {
            writeln!(f)?;
            write!(f, "{d:>5}:")?;
            for i in 0..=imax {
                let b = self.get(i, i + d);
                if b == 0 {
                    write!(f, "{:>5}", ".")?;
                } else {
                    write!(f, "{b:>5}")?;
                }
            }
        }
        Ok(())
    }
}

/// Read the Betti table off a minimal resolution.
pub fn betti_table(r: &FreeResolution) -> Result<BettiTable, ResolutionError> {
    if !r.minimal {
        return Err(ResolutionError::NotMinimal);
    }
    let mut entries = BTreeMap::new();
    for (i, tv) in r.twist_vectors.iter().enumerate() {
        for &a in tv {
            *entries.entry((i as i64, a)).or_insert(0) += 1;
        }
    }
    Ok(BettiTable { entries })
}

/// The Betti table renders as the chain of its twist multisets.
pub fn betti_display_chain(b: &BettiTable) -> String {
    let mut parts = vec!["0".to_string()];
    for i in (0..=b.length()).rev() {
        parts.push(render_module(&b.twists_at(i)));
    }
    parts.join(" → ")
}

/// `N(t) = Σ_{i,j} (-1)^i β_{i,j} t^j`, the numerator of the Hilbert series
/// `N(t) / (1-t)^3`, with its value and derivatives at `t = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiNumerator {
    /// exponent → coefficient, sparse
    pub coefficients: BTreeMap<i64, i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumeratorStats {
    /// `N(1)`; zero iff the quotient has dimension < 2 (curve case: 0-dim
    /// singular scheme).
    pub at_one: i64,
    /// `N'(1)`; together with `N(1) = 0` forces dimension 0.
    pub derivative_at_one: i64,
    /// `N''(1)/2`; the degree of the 0-dimensional quotient scheme (the
    /// Tjurina number for Jacobian ideals of reduced curves).
    pub half_second_derivative_at_one: i64,
}

pub fn betti_numerator(b: &BettiTable) -> BettiNumerator {
    let mut coefficients: BTreeMap<i64, i64> = BTreeMap::new();
    for (&(i, j), &beta) in &b.entries {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = coefficients.entry(j).or_insert(0);
        *c += sign * beta;
        if *c == 0 {
            coefficients.remove(&j);
        }
    }
    BettiNumerator { coefficients }
}

impl BettiNumerator {
    pub fn stats(&self) -> NumeratorStats {
        let at_one = self.coefficients.values().sum();
        let derivative_at_one = self.coefficients.iter().map(|(&j, &c)| j * c).sum();
        // j(j-1) is always even, so the division is exact
        let second: i64 = self
            .coefficients
            .iter()
            .map(|(&j, &c)| j * (j - 1) * c)
            .sum();
        NumeratorStats {
            at_one,
            derivative_at_one,
            half_second_derivative_at_one: second / 2,
        }
    }
}

impl fmt::Display for BettiNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&j, &c) in &self.coefficients {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mag, j) {
                (m, 0) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (m, 1) => write!(f, "{m}*t")?,
                (1, _) => write!(f, "t^{j}")?,
                (m, _) => write!(f, "{m}*t^{j}")?,
            }
        }
        Ok(())
    }
}

/// Castelnuovo–Mumford regularity read off the Betti table: `max(j - i)`.
pub fn regularity(b: &BettiTable) -> i64 {
    b.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
}

/// `dim_k S(-j)_t = binom(t - j + 2, 2)`.
fn twisted_rank(j: i64, t: i64) -> i64 {
    let s = t - j;
    if s < 0 {
        0
    } else {
        (s + 2) * (s + 1) / 2
    }
}

/// Hilbert function of the resolved module in degree `t`, computed from the
/// twists alone: `Σ_i (-1)^i Σ_j β_{i,j} binom(t-j+2, 2)`.
pub fn hilbert_from_betti(b: &BettiTable, t: i64) -> i64 {
    b.entries
        .iter()
        .map(|(&(i, j), &beta)| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * beta * twisted_rank(j, t)
        })
        .sum()
}

/// Exactness bookkeeping: `d_i ∘ d_{i+1} = 0` and every entry of `d_i` is
/// homogeneous of degree `a_col - a_row` (or zero).
pub fn check_complex(r: &FreeResolution) -> Result<(), ResolutionError> {
    for (i, d) in r.differentials.iter().enumerate() {
        let rows = r.twist_vectors[i].len();
        let cols = r.twist_vectors[i + 1].len();
        if d.len() != rows || d.iter().any(|row| row.len() != cols) {
            return Err(ResolutionError::BrokenComplex(format!(
                "differential {} has the wrong shape",
                i + 1
            )));
        }
        for (row, row_entries) in d.iter().enumerate() {
            for (col, p) in row_entries.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let expected = r.twist_vectors[i + 1][col] - r.twist_vectors[i][row];
                match p.homogeneous_degree() {
                    Ok(deg) if deg == expected => {}
                    _ => {
                        return Err(ResolutionError::BrokenComplex(format!(
                            "entry ({row}, {col}) of differential {} is not homogeneous of degree {expected}",
                            i + 1
                        )))
                    }
                }
            }
        }
        if r.minimal {
            for (row, row_entries) in d.iter().enumerate() {
                for (col, p) in row_entries.iter().enumerate() {
                    if scalar_entry(p).is_some() {
                        return Err(ResolutionError::BrokenComplex(format!(
                            "minimal resolution has a scalar entry at ({row}, {col}) of differential {}",
                            i + 1
                        )));
                    }
                }
            }
        }
    }
    for i in 0..r.differentials.len().saturating_sub(1) {
        let a = &r.differentials[i];
        let b = &r.differentials[i + 1];
        let rows = r.twist_vectors[i].len();
        let mids = r.twist_vectors[i + 1].len();
        let cols = r.twist_vectors[i + 2].len();
        for row in 0..rows {
            for col in 0..cols {
                let mut acc = Poly::zero();
                for mid in 0..mids {
                    acc = acc.add(&a[row][mid].mul(&b[mid][col]));
                }
                if !acc.is_zero() {
                    return Err(ResolutionError::BrokenComplex(format!(
                        "d_{} ∘ d_{} has a nonzero entry at ({row}, {col})",
                        i + 1,
                        i + 2
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Lead terms of the first differential's source basis — convenience accessor
/// used when cross-checking against the generating Gröbner basis.
pub fn first_step_leads(g: &GroebnerBasis) -> Vec<LeadTerm> {
    g.lead_terms()
}
