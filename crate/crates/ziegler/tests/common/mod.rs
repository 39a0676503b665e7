#![allow(dead_code)] // shared by several test binaries, each using a subset

//! Brute-force graded linear algebra over the exact coefficient fields.
//!
//! Everything here is deliberately independent of the Gröbner machinery it
//! cross-checks: ideal membership and graded dimensions are decided by
//! Gaussian elimination on monomial-basis coordinate vectors of `m · g_i`.

use ziegler::polyring::{Monomial, Poly};
use ziegler::scalars::FieldElement;

pub fn monomials_of_degree(d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for ex in 0..=d {
        for ey in 0..=(d - ex) {
            let ez = d - ex - ey;
            out.push(Monomial::new(ex as u16, ey as u16, ez as u16));
        }
    }
    out
}

fn coordinates(p: &Poly, basis: &[Monomial]) -> Vec<FieldElement> {
    let mut row = vec![FieldElement::zero(); basis.len()];
    for (c, m) in p.terms() {
        let idx = basis
            .iter()
            .position(|b| b == m)
            .expect("degree matches basis");
        row[idx] = c.clone();
    }
    row
}

/// In-place Gaussian elimination; returns the rank.
pub fn rank(mut rows: Vec<Vec<FieldElement>>) -> usize {
    let width = rows.first().map(Vec::len).unwrap_or(0);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for c in col..width {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..width {
                    let sub = &rows[rank][c] * &factor;
                    rows[r][c] = rows[r][c].try_sub(&sub).unwrap();
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Coordinate rows spanning the degree-`t` piece of the ideal generated by
/// homogeneous `gens` (no Gröbner basis involved: the rows are `m · g` for
/// all monomials `m` of complementary degree).
pub fn ideal_piece_rows(gens: &[Poly], t: i64) -> Vec<Vec<FieldElement>> {
    let basis = monomials_of_degree(t);
    let mut rows = Vec::new();
    for g in gens {
        let d = g.homogeneous_degree().expect("homogeneous generator");
        if d > t {
            continue;
        }
        for m in monomials_of_degree(t - d) {
            rows.push(coordinates(&g.mul_term(&FieldElement::one(), &m), &basis));
        }
    }
    rows
}

pub fn ideal_piece_dim(gens: &[Poly], t: i64) -> usize {
    rank(ideal_piece_rows(gens, t))
}

/// Exact membership test for a homogeneous polynomial by rank comparison.
pub fn ideal_contains(gens: &[Poly], f: &Poly) -> bool {
    if f.is_zero() {
        return true;
    }
    let t = f.homogeneous_degree().expect("homogeneous test element");
    let rows = ideal_piece_rows(gens, t);
    let base_rank = rank(rows.clone());
    let mut extended = rows;
    extended.push(coordinates(f, &monomials_of_degree(t)));
    rank(extended) == base_rank
}

/// `dim (S/I)_t` from generators alone.
pub fn quotient_dim(gens: &[Poly], t: i64) -> i64 {
    (t + 2) * (t + 1) / 2 - ideal_piece_dim(gens, t) as i64
}
