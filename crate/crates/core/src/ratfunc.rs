//! Elements of the rational function field `k(x)`.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;

/// `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                den: Polynomial::one(num.field()),
                num,
            });
        }
        let g = num.gcd(&den)?;
        let mut n = num.exact_div(&g)?;
        let mut d = den.exact_div(&g)?;
        let lc = d.leading().inv()?;
        n = n.scale(&lc);
        d = d.scale(&lc);
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn from_poly(p: &Polynomial) -> RationalFunction {
        RationalFunction {
            num: p.clone(),
            den: Polynomial::one(p.field()),
        }
    }

    pub fn constant(c: &FieldElement) -> RationalFunction {
        RationalFunction::from_poly(&Polynomial::constant(c))
    }

    pub fn zero(k: &Field) -> RationalFunction {
        RationalFunction::from_poly(&Polynomial::zero(k))
    }

    pub fn one(k: &Field) -> RationalFunction {
        RationalFunction::from_poly(&Polynomial::one(k))
    }

    pub fn x(k: &Field) -> RationalFunction {
        RationalFunction::from_poly(&Polynomial::x(k))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<FieldElement> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, c: &FieldElement) -> RationalFunction {
        RationalFunction::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, e: i64) -> Result<RationalFunction> {
        let b = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs();
        Ok(RationalFunction {
            num: b.num.pow(n),
            den: b.den.pow(n),
        })
    }

    /// Value at `a`; `None` at a pole.
    pub fn eval(&self, a: &FieldElement) -> Option<FieldElement> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(a) * &d.inv().ok()?)
    }

    /// Value at an element of an extension field; `None` at a pole.
    pub fn eval_in(&self, a: &FieldElement) -> Result<Option<FieldElement>> {
        let d = self.den.eval_in(a)?;
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(&self.num.eval_in(a)? * &d.inv()?))
    }

    /// Value at infinity; `None` at a pole.
    pub fn eval_infinity(&self) -> Option<FieldElement> {
        let (n, d) = (self.num.deg(), self.den.deg());
        if n > d {
            None
        } else if n < d {
            Some(self.field().zero())
        } else {
            Some(&self.num.leading() * &self.den.leading().inv().ok()?)
        }
    }

    /// `deg den - deg num`.
    pub fn valuation_infinity(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.den.deg() - self.num.deg())
    }

    /// Valuation at the finite place given by a monic irreducible polynomial.
    pub fn valuation_at(&self, p: &Polynomial) -> Option<i64> {
        let a = self.num.valuation(p)? as i64;
        let b = self.den.valuation(p)? as i64;
        Some(a - b)
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &RationalFunction) -> Result<RationalFunction> {
        let n = self.num.deg().max(self.den.deg()).max(0) as usize;
        // homogenise: P(a/b) = P~(a, b) / b^n
        let hom = |p: &Polynomial| -> Polynomial {
            let mut acc = Polynomial::zero(self.field());
            for (i, c) in p.coeffs().iter().enumerate() {
                let term = &inner.num.pow(i as u64) * &inner.den.pow((n - i) as u64);
                acc = &acc + &term.scale(c);
            }
            acc
        };
        RationalFunction::new(hom(&self.num), hom(&self.den))
    }

    pub fn derivative(&self) -> RationalFunction {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(n, self.den.pow(2)).expect("nonzero denominator")
    }

    /// `f(-x)`.
    pub fn negate_variable(&self) -> RationalFunction {
        RationalFunction::new(self.num.negate_variable(), self.den.negate_variable())
            .expect("nonzero denominator")
    }

    /// Same function viewed over an extension of the constant field.
    pub fn embed(&self, k: &Field) -> Result<RationalFunction> {
        RationalFunction::new(self.num.embed(k)?, self.den.embed(k)?)
    }

    /// Largest of the numerator and denominator degrees.
    pub fn height(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn to_string_in(&self, var: &str) -> alloc::string::String {
        if self.den.is_one() {
            alloc::format!("{}", self.num.to_string_in(var))
        } else {
            alloc::format!("({}) / ({})", self.num.to_string_in(var), self.den.to_string_in(var))
        }
    }
}

/// Sum of the given terms.
pub fn sum(k: &Field, terms: &[RationalFunction]) -> RationalFunction {
    terms.iter().fold(RationalFunction::zero(k), |a, b| &a + b)
}

pub fn product(k: &Field, terms: &[RationalFunction]) -> RationalFunction {
    terms.iter().fold(RationalFunction::one(k), |a, b| &a * b)
}

/// `prod p_i^{e_i}`.
pub fn from_factors(k: &Field, factors: &[(Polynomial, i64)]) -> RationalFunction {
    let mut num = Polynomial::one(k);
    let mut den = Polynomial::one(k);
    for (p, e) in factors {
        if *e >= 0 {
            num = &num * &p.pow(*e as u64);
        } else {
            den = &den * &p.pow(e.unsigned_abs());
        }
    }
    RationalFunction::new(num, den).expect("nonzero denominator")
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &'a RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation_cancels_common_factors() {
        let k = Field::prime(7).unwrap();
        let a = Polynomial::from_ints(&k, &[-1, 0, 1]);
        let b = Polynomial::from_ints(&k, &[2, 2]);
        let r = RationalFunction::new(a, b).unwrap();
        assert_eq!(r.num(), &Polynomial::from_ints(&k, &[-4, 4]));
        assert!(r.den().is_monic());
        assert_eq!(r.den().degree(), Some(0));
    }

    #[test]
    fn compose_matches_pointwise_evaluation() {
        let k = Field::prime(11).unwrap();
        let f = RationalFunction::new(
            Polynomial::from_ints(&k, &[1, 2, 3]),
            Polynomial::from_ints(&k, &[5, 0, 1]),
        )
        .unwrap();
        let g = RationalFunction::new(
            Polynomial::from_ints(&k, &[0, 1, 1]),
            Polynomial::from_ints(&k, &[1, 3]),
        )
        .unwrap();
        let h = f.compose(&g).unwrap();
        for a in k.elements() {
            let expect = g.eval(&a).and_then(|b| f.eval(&b));
            if let (Some(e), Some(v)) = (expect, h.eval(&a)) {
                assert_eq!(e, v);
            }
        }
    }

    #[test]
    fn valuations() {
        let k = Field::prime(5).unwrap();
        let x = Polynomial::x(&k);
        let r = RationalFunction::new(x.pow(2), Polynomial::from_ints(&k, &[1, 0, 0, 1])).unwrap();
        assert_eq!(r.valuation_at(&x), Some(2));
        assert_eq!(r.valuation_infinity(), Some(1));
    }
}
