//! Exact coefficient arithmetic: arbitrary-precision rationals and quadratic
//! extensions `Q(sqrt(d))` for square-free `d > 1`.
//!
//! Every element knows which field it lives in. Rationals embed into every
//! quadratic field; combining elements of two different quadratic fields is a
//! hard error, never a coercion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num_rational`).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: sqrt({0}) vs sqrt({1})")]
    FieldMismatch(i64, i64),
    #[error("field mismatch: rational element required in Q(sqrt({0}))")]
    QuadraticInRational(i64),
    #[error("{0} is not a valid discriminant (need square-free integer > 1)")]
    BadDiscriminant(i64),
}

/// Descriptor of the coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    /// `Q(sqrt(d))` with `d` square-free and `> 1`.
    Quadratic(i64),
}

impl FieldKind {
    pub fn quadratic(d: i64) -> Result<FieldKind, ScalarError> {
        if is_square_free(d) {
            Ok(FieldKind::Quadratic(d))
        } else {
            Err(ScalarError::BadDiscriminant(d))
        }
    }

    /// Whether an element of field `other` may appear in a computation
    /// declared over `self` (rationals embed everywhere).
    pub fn admits(self, other: FieldKind) -> bool {
        match (self, other) {
            (_, FieldKind::Rational) => true,
            (FieldKind::Quadratic(a), FieldKind::Quadratic(b)) => a == b,
            (FieldKind::Rational, FieldKind::Quadratic(_)) => false,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

pub fn is_square_free(d: i64) -> bool {
    if d <= 1 {
        return false;
    }
    let mut n = d;
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// `n/m` in lowest terms with positive denominator.
pub fn normalize(n: impl Into<BigInt>, m: impl Into<BigInt>) -> Result<Rational, ScalarError> {
    let m = m.into();
    if m.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(BigRational::new(n.into(), m))
}

pub fn rat(n: i64, m: i64) -> Rational {
    normalize(n, m).expect("nonzero denominator")
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `a + b*sqrt(d)` in the quadratic field `Q(sqrt(d))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: i64,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<QuadExt, ScalarError> {
        if !is_square_free(d) {
            return Err(ScalarError::BadDiscriminant(d));
        }
        Ok(QuadExt { a, b, d })
    }

    pub fn sqrt_d(d: i64) -> Result<QuadExt, ScalarError> {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn from_rational(r: Rational, d: i64) -> QuadExt {
        QuadExt {
            a: r,
            b: Rational::zero(),
            d,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> QuadExt {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Field norm `a^2 - d*b^2`; zero only for the zero element since `d` is
    /// square-free and `> 1`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(self.d)) * &self.b * &self.b
    }

    pub fn add(&self, rhs: &QuadExt) -> Result<QuadExt, ScalarError> {
        self.check_field(rhs)?;
        Ok(QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d,
        })
    }

    pub fn mul(&self, rhs: &QuadExt) -> Result<QuadExt, ScalarError> {
        self.check_field(rhs)?;
        let d = Rational::from_integer(BigInt::from(self.d));
        Ok(QuadExt {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d,
        })
    }

    /// Multiplicative inverse via the conjugate: `u^-1 = conj(u) / norm(u)`.
    pub fn inv(&self) -> Result<QuadExt, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        assert!(
            !n.is_zero(),
            "norm of a nonzero element of Q(sqrt(d)) cannot vanish"
        );
        Ok(QuadExt {
            a: &self.a / &n,
            b: -&self.b / &n,
            d: self.d,
        })
    }

    fn check_field(&self, rhs: &QuadExt) -> Result<(), ScalarError> {
        if self.d == rhs.d {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.d, rhs.d))
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            if self.b.is_one() {
                return write!(f, "r");
            }
            return write!(f, "{}*r", self.b);
        }
        if self.b.is_negative() {
            let nb = -self.b.clone();
            if nb.is_one() {
                write!(f, "{} - r", self.a)
            } else {
                write!(f, "{} - {}*r", self.a, nb)
            }
        } else if self.b.is_one() {
            write!(f, "{} + r", self.a)
        } else {
            write!(f, "{} + {}*r", self.a, self.b)
        }
    }
}

/// A scalar in the active coefficient field. Kept canonical: a quadratic
/// element with vanishing irrational part collapses to `Rat`, so structural
/// equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rat(Rational),
    Quad(QuadExt),
}

impl FieldElement {
    pub fn zero() -> FieldElement {
        FieldElement::Rat(Rational::zero())
    }

    pub fn one() -> FieldElement {
        FieldElement::Rat(Rational::one())
    }

    pub fn from_rational(r: Rational) -> FieldElement {
        FieldElement::Rat(r)
    }

    pub fn from_int(n: i64) -> FieldElement {
        FieldElement::Rat(rat_int(n))
    }

    pub fn from_quad(q: QuadExt) -> FieldElement {
        if q.b.is_zero() {
            FieldElement::Rat(q.a)
        } else {
            FieldElement::Quad(q)
        }
    }

    pub fn sqrt_d(d: i64) -> Result<FieldElement, ScalarError> {
        Ok(FieldElement::Quad(QuadExt::sqrt_d(d)?))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_zero(),
            FieldElement::Quad(_) => false, // canonical: Quad always has b != 0
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, FieldElement::Rat(r) if r.is_one())
    }

    /// The smallest field containing this element.
    pub fn field(&self) -> FieldKind {
        match self {
            FieldElement::Rat(_) => FieldKind::Rational,
            FieldElement::Quad(q) => FieldKind::Quadratic(q.d),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElement::Rat(r) => Some(r),
            FieldElement::Quad(_) => None,
        }
    }

    pub fn try_add(&self, rhs: &FieldElement) -> Result<FieldElement, ScalarError> {
        self.combine(rhs, |a, b| Ok(a + b), |a, b| a.add(b))
    }

    pub fn try_sub(&self, rhs: &FieldElement) -> Result<FieldElement, ScalarError> {
        self.try_add(&(-rhs.clone()))
    }

    pub fn try_mul(&self, rhs: &FieldElement) -> Result<FieldElement, ScalarError> {
        self.combine(rhs, |a, b| Ok(a * b), |a, b| a.mul(b))
    }

    pub fn inv(&self) -> Result<FieldElement, ScalarError> {
        match self {
            FieldElement::Rat(r) => {
                if r.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(FieldElement::Rat(r.recip()))
                }
            }
            FieldElement::Quad(q) => Ok(FieldElement::from_quad(q.inv()?)),
        }
    }

    pub fn try_div(&self, rhs: &FieldElement) -> Result<FieldElement, ScalarError> {
        self.try_mul(&rhs.inv()?)
    }

    fn combine(
        &self,
        rhs: &FieldElement,
        on_rat: impl Fn(&Rational, &Rational) -> Result<Rational, ScalarError>,
        on_quad: impl Fn(&QuadExt, &QuadExt) -> Result<QuadExt, ScalarError>,
    ) -> Result<FieldElement, ScalarError> {
        match (self, rhs) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => Ok(FieldElement::Rat(on_rat(a, b)?)),
            (FieldElement::Quad(a), FieldElement::Quad(b)) => {
                Ok(FieldElement::from_quad(on_quad(a, b)?))
            }
            (FieldElement::Rat(a), FieldElement::Quad(b)) => {
                let lifted = QuadExt::from_rational(a.clone(), b.d);
                Ok(FieldElement::from_quad(on_quad(&lifted, b)?))
            }
            (FieldElement::Quad(a), FieldElement::Rat(b)) => {
                let lifted = QuadExt::from_rational(b.clone(), a.d);
                Ok(FieldElement::from_quad(on_quad(a, &lifted)?))
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rat(r) => write!(f, "{r}"),
            FieldElement::Quad(q) => write!(f, "{q}"),
        }
    }
}

macro_rules! field_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .expect("field mismatch in scalar arithmetic")
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

field_binop!(Add, add, try_add);
field_binop!(Sub, sub, try_sub);
field_binop!(Mul, mul, try_mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rat(r) => FieldElement::Rat(-r),
            FieldElement::Quad(q) => FieldElement::Quad(QuadExt {
                a: -q.a,
                b: -q.b,
                d: q.d,
            }),
        }
    }
}
