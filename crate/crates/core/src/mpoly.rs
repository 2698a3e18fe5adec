//! Sparse multivariate Laurent polynomials, used to check polynomial
//! identities between curve models.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{bail, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Vec<i32>, FieldElement>,
}

impl MPoly {
    pub fn zero(k: &Field, nvars: usize) -> MPoly {
        MPoly { field: k.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: &FieldElement, nvars: usize) -> MPoly {
        let mut p = MPoly::zero(c.field(), nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c.clone());
        }
        p
    }

    pub fn int(k: &Field, n: i64, nvars: usize) -> MPoly {
        MPoly::constant(&k.from_i64(n), nvars)
    }

    /// `var_i ^ e`.
    pub fn monomial(k: &Field, nvars: usize, i: usize, e: i32) -> MPoly {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        let mut p = MPoly::zero(k, nvars);
        p.terms.insert(exps, k.one());
        p
    }

    pub fn var(k: &Field, nvars: usize, i: usize) -> MPoly {
        MPoly::monomial(k, nvars, i, 1)
    }

    /// A univariate polynomial placed in variable `i`.
    pub fn from_poly(p: &Polynomial, nvars: usize, i: usize) -> MPoly {
        let k = p.field();
        let mut out = MPoly::zero(k, nvars);
        for (e, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0; nvars];
                exps[i] = e as i32;
                out.terms.insert(exps, c.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &FieldElement) -> MPoly {
        let mut out = MPoly::zero(&self.field, self.nvars);
        for (e, a) in &self.terms {
            let v = a * c;
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::int(&self.field, 1, self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &FieldElement)> {
        self.terms.iter()
    }

    /// Substitute `1/var_i` for `var_i`.
    pub fn invert(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(&self.field, self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[i] = -e[i];
            out.terms.insert(e, c.clone());
        }
        out
    }

    fn add_term(&mut self, e: Vec<i32>, c: FieldElement) {
        let v = match self.terms.get(&e) {
            Some(old) => old + &c,
            None => c,
        };
        if v.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
    }

    /// Substitute a polynomial for a variable that occurs with nonnegative
    /// exponents only.
    pub fn substitute(&self, i: usize, value: &MPoly) -> Result<MPoly> {
        let mut out = MPoly::zero(&self.field, self.nvars);
        for (e, c) in &self.terms {
            if e[i] < 0 {
                bail!(InvalidInput, "negative exponent in substituted variable");
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let mut mono = MPoly::zero(&self.field, self.nvars);
            mono.terms.insert(rest, c.clone());
            out = &out + &(&mono * &value.pow(e[i] as u32));
        }
        Ok(out)
    }

    /// Reduce modulo `var_i^2 - rhs`, where `rhs` does not involve `var_i`.
    pub fn reduce_square(&self, i: usize, rhs: &MPoly) -> Result<MPoly> {
        let mut out = MPoly::zero(&self.field, self.nvars);
        for (e, c) in &self.terms {
            if e[i] < 0 {
                bail!(InvalidInput, "negative exponent in reduced variable");
            }
            let mut rest = e.clone();
            rest[i] = e[i] % 2;
            let mut mono = MPoly::zero(&self.field, self.nvars);
            mono.terms.insert(rest, c.clone());
            out = &out + &(&mono * &rhs.pow((e[i] / 2) as u32));
        }
        Ok(out)
    }

    /// Evaluate at a point (all coordinates nonzero where exponents are negative).
    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        let k = point.first().map_or(self.field.clone(), |p| p.field().clone());
        let mut acc = k.zero();
        for (e, c) in &self.terms {
            let mut t = k.embed(c)?;
            for (x, &n) in point.iter().zip(e) {
                t = &t * &x.pow_i64(n as i64)?;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for (n, &x) in names.iter().zip(e) {
                match x {
                    0 => {}
                    1 => mono.push(String::from(*n)),
                    _ => mono.push(format!("{n}^{x}")),
                }
            }
            if mono.is_empty() {
                parts.push(format!("{c}"));
            } else if c.is_one() {
                parts.push(mono.join("*"));
            } else {
                parts.push(format!("{c}*{}", mono.join("*")));
            }
        }
        parts.join(" + ")
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Neg for &'a MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-&self.field.one())
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        self + &-rhs
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero(&self.field, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_identity() {
        let k = Field::rationals();
        let s = MPoly::var(&k, 1, 0);
        let si = MPoly::monomial(&k, 1, 0, -1);
        let w = &s + &si;
        let lhs = &w.pow(3) - &w.scale(&k.from_i64(3));
        let rhs = &s.pow(3) + &MPoly::monomial(&k, 1, 0, -3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_and_substitution() {
        let k = Field::prime(7).unwrap();
        let (x, y) = (MPoly::var(&k, 2, 0), MPoly::var(&k, 2, 1));
        let rhs = &x.pow(3) + &MPoly::int(&k, 1, 2);
        let p = &y.pow(4) - &rhs.pow(2);
        assert!(p.reduce_square(1, &rhs).unwrap().is_zero());
        let q = x.substitute(0, &y.pow(2)).unwrap();
        assert_eq!(q, y.pow(2));
    }
}
