//! Dense univariate polynomials over a [`Field`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl Polynomial {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    /// Convenience constructor from integer coefficients, lowest first.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Polynomial {
        Polynomial::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Polynomial {
        Polynomial::constant(&field.one())
    }

    pub fn constant(c: &FieldElement) -> Polynomial {
        Polynomial::new(c.field(), vec![c.clone()])
    }

    pub fn x(field: &Field) -> Polynomial {
        Polynomial::monomial(&field.one(), 1)
    }

    pub fn monomial(c: &FieldElement, n: usize) -> Polynomial {
        let k = c.field();
        let mut v = vec![k.zero(); n];
        v.push(c.clone());
        Polynomial::new(k, v)
    }

    /// `x - a`.
    pub fn linear(a: &FieldElement) -> Polynomial {
        Polynomial::new(a.field(), vec![-a, a.field().one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg 0 = -1`, convenient for degree arithmetic.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn eval(&self, a: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + c;
        }
        acc
    }

    /// Evaluate at an element of an extension of the coefficient field.
    pub fn eval_in(&self, a: &FieldElement) -> Result<FieldElement> {
        let k = a.field();
        let mut acc = k.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + &k.embed(c)?;
        }
        Ok(acc)
    }

    /// Same coefficients viewed over an extension field.
    pub fn embed(&self, k: &Field) -> Result<Polynomial> {
        let c = self
            .coeffs
            .iter()
            .map(|c| k.embed(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(k, c))
    }

    pub fn derivative(&self) -> Polynomial {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * &self.field.from_i64(i as i64))
            .collect();
        Polynomial::new(&self.field, c)
    }

    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if self.field != d.field {
            return Err(Error::FieldMismatch);
        }
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.leading().inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Polynomial::zero(&self.field), self.clone()));
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * b);
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Polynomial::new(&self.field, q), Polynomial::new(&self.field, r)))
    }

    pub fn rem(&self, d: &Polynomial) -> Polynomial {
        self.div_rem(d).expect("nonzero divisor").1
    }

    /// Exact quotient; fails when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InvalidInput(alloc::format!(
                "{d} does not divide {self}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, f: &Polynomial) -> bool {
        f.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd (zero when both inputs vanish).
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn xgcd(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let k = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(k), Polynomial::zero(k));
        let (mut t0, mut t1) = (Polynomial::zero(k), Polynomial::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = r0.leading().inv()?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Inverse modulo `m`, when `gcd(self, m) = 1`.
    pub fn inv_mod(&self, m: &Polynomial) -> Result<Polynomial> {
        let (g, s, _) = self.rem(m).xgcd(m)?;
        if !g.is_one() {
            return Err(Error::DivisionByZero);
        }
        Ok(s.rem(m))
    }

    pub fn mul_mod(&self, other: &Polynomial, m: &Polynomial) -> Polynomial {
        (self * other).rem(m)
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn pow_mod(&self, e: &BigUint, m: &Polynomial) -> Polynomial {
        let base = self.rem(m);
        let mut acc = Polynomial::one(&self.field).rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c);
        }
        acc
    }

    /// `x^n p(1/x)` with `n = deg p`.
    pub fn reversed(&self) -> Polynomial {
        let mut c = self.coeffs.clone();
        c.reverse();
        Polynomial::new(&self.field, c)
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Polynomial {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
            .collect();
        Polynomial::new(&self.field, c)
    }

    /// Order of vanishing at the place given by the monic irreducible `p`.
    pub fn valuation(&self, p: &Polynomial) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut f = self.clone();
        let mut v = 0;
        loop {
            let (q, r) = f.div_rem(p).ok()?;
            if !r.is_zero() {
                return Some(v);
            }
            f = q;
            v += 1;
        }
    }

    pub fn is_squarefree(&self) -> bool {
        if self.degree().unwrap_or(0) == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).map(|g| g.is_one()).unwrap_or(false)
    }

    /// Roots in the coefficient field (finite fields: exhaustive over the
    /// linear factors).
    pub fn roots(&self) -> Result<Vec<FieldElement>> {
        let mut out = Vec::new();
        for (g, _) in crate::factor::factor(self)?.factors {
            if g.degree() == Some(1) {
                out.push(-g.coeff(0));
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = alloc::format!("{c}");
            let term = match i {
                0 => cs,
                1 if c.is_one() => String::from(var),
                1 => alloc::format!("{cs}*{var}"),
                _ if c.is_one() => alloc::format!("{var}^{i}"),
                _ => alloc::format!("{cs}*{var}^{i}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Polynomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by degree, then coefficients from the top down.
impl Ord for Polynomial {
    fn cmp(&self, other: &Polynomial) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| {
                for (a, b) in self.coeffs.iter().zip(&other.coeffs).rev() {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Polynomial::new(&self.field, c)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Polynomial::new(&self.field, c)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let k = &self.field;
        let mut c = vec![k.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        Polynomial::new(k, c)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(&self.field, self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let k = Field::prime(7).unwrap();
        let a = Polynomial::from_ints(&k, &[3, 1, 4, 1, 5, 2]);
        let b = Polynomial::from_ints(&k, &[2, 0, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn xgcd_bezout() {
        let k = Field::prime(11).unwrap();
        let a = Polynomial::from_ints(&k, &[1, 2, 1]);
        let b = Polynomial::from_ints(&k, &[-1, 0, 1]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(g, Polynomial::from_ints(&k, &[1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = Polynomial::x(&Field::prime(5).unwrap());
        let b = Polynomial::x(&Field::prime(7).unwrap());
        assert_eq!(a.gcd(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn valuation_counts_multiplicity() {
        let k = Field::prime(5).unwrap();
        let p = Polynomial::from_ints(&k, &[1, 1]);
        let f = &p.pow(3) * &Polynomial::from_ints(&k, &[2, 0, 1]);
        assert_eq!(f.valuation(&p), Some(3));
    }

    #[test]
    fn squarefree_in_char_p() {
        let k = Field::prime(5).unwrap();
        // x^5 - 1 = (x - 1)^5
        assert!(!Polynomial::from_ints(&k, &[-1, 0, 0, 0, 0, 1]).is_squarefree());
        assert!(Polynomial::from_ints(&k, &[-2, 0, 1]).is_squarefree());
    }
}
