//! Sparse homogeneous polynomials in the three variables `x, y, z`, with the
//! graded reverse-lexicographic term order baked in as the canonical internal
//! sort.

use crate::scalars::{FieldElement, FieldKind, ScalarError};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomial is not homogeneous (degrees {0} and {1} both occur)")]
    NotHomogeneous(i64, i64),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }
}

/// A power product `x^a y^b z^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: [u16; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(ex: u16, ey: u16, ez: u16) -> Monomial {
        Monomial { exps: [ex, ey, ez] }
    }

    pub fn var(v: Var) -> Monomial {
        let mut exps = [0u16; 3];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: [
                    other.exps[0] - self.exps[0],
                    other.exps[1] - self.exps[1],
                    other.exps[2] - self.exps[2],
                ],
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0].max(other.exps[0]),
                self.exps[1].max(other.exps[1]),
                self.exps[2].max(other.exps[2]),
            ],
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0].min(other.exps[0]),
                self.exps[1].min(other.exps[1]),
                self.exps[2].min(other.exps[2]),
            ],
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Lexicographic comparison with `x > y > z`; used when sorting generator
    /// lists for iterated syzygy steps, not as the working ideal order.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

/// Graded reverse-lexicographic order: higher total degree wins; on equal
/// degree the smaller exponent in `z`, then `y`, wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        grevlex_cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn grevlex_cmp(m1: &Monomial, m2: &Monomial) -> Ordering {
    m1.degree()
        .cmp(&m2.degree())
        .then_with(|| m2.exps[2].cmp(&m1.exps[2]))
        .then_with(|| m2.exps[1].cmp(&m1.exps[1]))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exps[v.index()];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.symbol())?;
            } else {
                write!(f, "{}^{}", v.symbol(), e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over the active field: a strictly grevlex-descending term
/// list with no zero coefficients and no duplicate monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(FieldElement, Monomial)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(FieldElement::one())
    }

    pub fn constant(c: FieldElement) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(c, Monomial::ONE)],
            }
        }
    }

    pub fn var(v: Var) -> Poly {
        Poly {
            terms: vec![(FieldElement::one(), Monomial::var(v))],
        }
    }

    pub fn term(c: FieldElement, m: Monomial) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(c, m)],
            }
        }
    }

    /// Build from arbitrary (coefficient, monomial) pairs: merges duplicates,
    /// drops zeros, sorts grevlex-descending.
    pub fn from_terms(terms: impl IntoIterator<Item = (FieldElement, Monomial)>) -> Poly {
        let mut terms: Vec<(FieldElement, Monomial)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(FieldElement, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = &last.0 + &c;
                    continue;
                }
            }
            out.push((c, m));
        }
        out.retain(|(c, _)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(FieldElement, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(FieldElement, Monomial)> {
        self.terms.first()
    }

    /// Total degree (maximum over terms); `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// The common degree of all terms, or an error if degrees are mixed.
    pub fn homogeneous_degree(&self) -> Result<i64, PolyError> {
        let mut it = self.terms.iter().map(|(_, m)| m.degree());
        let d = it.next().ok_or(PolyError::ZeroPolynomial)?;
        for e in it {
            if e != d {
                return Err(PolyError::NotHomogeneous(d, e));
            }
        }
        Ok(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_ok()
    }

    /// The smallest field containing every coefficient. Zero reports `Q`.
    pub fn field(&self) -> FieldKind {
        for (c, _) in &self.terms {
            if let FieldKind::Quadratic(d) = c.field() {
                return FieldKind::Quadratic(d);
            }
        }
        FieldKind::Rational
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ca, ma)), Some((cb, mb))) => match ma.cmp(mb) {
                    Ordering::Greater => {
                        out.push((ca.clone(), *ma));
                        a.next();
                    }
                    Ordering::Less => {
                        let c = if negate { -cb.clone() } else { cb.clone() };
                        out.push((c, *mb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let c = if negate {
                            ca.try_sub(cb)
                        } else {
                            ca.try_add(cb)
                        }
                        .expect("field mismatch in polynomial arithmetic");
                        if !c.is_zero() {
                            out.push((c, *ma));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    out.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    for (cb, mb) in b {
                        let c = if negate { -cb.clone() } else { cb.clone() };
                        out.push((c, *mb));
                    }
                    break;
                }
                (None, None) => break,
            }
        }
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(c, m)| (-c.clone(), *m)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(a, m)| (a * c, *m)).collect(),
        }
    }

    /// `c * m * self`, preserving the sorted term list.
    pub fn mul_term(&self, c: &FieldElement, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(a, w)| (a * c, w.mul(m))).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Poly::zero();
        for (c, m) in &small.terms {
            acc = acc.add(&large.mul_term(c, m));
        }
        acc
    }

    /// `self - c * m * g`; the inner step of the division algorithm.
    pub fn sub_mul_term(&self, c: &FieldElement, m: &Monomial, g: &Poly) -> Poly {
        self.sub(&g.mul_term(c, m))
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> Poly {
        let i = v.index();
        let mut terms = Vec::new();
        for (c, m) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps;
            exps[i] = e - 1;
            terms.push((c * &FieldElement::from_int(e as i64), Monomial { exps }));
        }
        // differentiation preserves grevlex order on distinct surviving terms
        Poly::from_terms(terms)
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .iter()
            .find(|(_, w)| w == m)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(FieldElement::zero)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let (sign, mag) = display_parts(c);
            if i == 0 {
                if sign {
                    write!(f, "-")?;
                }
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Split a coefficient into (is_negative, magnitude rendered in the input
/// grammar). Quadratic elements with both parts render parenthesized so the
/// output string reparses.
fn display_parts(c: &FieldElement) -> (bool, String) {
    match c {
        FieldElement::Rat(r) => (r.is_negative(), r.abs().to_string()),
        FieldElement::Quad(q) => {
            if q.a.is_zero() {
                if q.b.is_negative() {
                    let nb = -q.b.clone();
                    if nb.is_one() {
                        (true, "r".into())
                    } else {
                        (true, format!("{nb}*r"))
                    }
                } else if q.b.is_one() {
                    (false, "r".into())
                } else {
                    (false, format!("{}*r", q.b))
                }
            } else {
                (false, format!("({q})"))
            }
        }
    }
}
