//! Coefficient fields: prime fields, finite extensions (including residue
//! fields of places), and the rationals with their quadratic extensions.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_core::RngCore;

use crate::error::{bail, Error, Result};
use crate::poly::Polynomial;

/// Shared handle to a field description.
#[derive(Clone)]
pub struct Field(Arc<FieldKind>);

#[derive(Debug)]
pub enum FieldKind {
    Prime {
        p: u64,
    },
    /// `base[t]/(modulus)`; `modulus` is monic, stored lowest coefficient first.
    Extension {
        base: Field,
        modulus: Vec<Repr>,
    },
    Rationals,
}

/// Raw element data; interpretation depends on the owning field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Repr {
    Int(u64),
    Vec(Vec<Repr>),
    Rat(BigRational),
}

#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field `F_p`. Characteristic 3 is excluded throughout.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime_u64(p) {
            bail!(InvalidField, "{p} is not prime");
        }
        if p == 3 {
            bail!(InvalidField, "characteristic 3 is not supported");
        }
        Ok(Field(Arc::new(FieldKind::Prime { p })))
    }

    /// Prime field without the characteristic-3 restriction; used for auxiliary
    /// reductions only.
    pub(crate) fn prime_unchecked(p: u64) -> Field {
        Field(Arc::new(FieldKind::Prime { p }))
    }

    pub fn rationals() -> Field {
        Field(Arc::new(FieldKind::Rationals))
    }

    /// `F_q` for `q = p` or `q = p^2`. The quadratic extension uses the smallest
    /// monic irreducible quadratic in canonical order.
    pub fn finite(q: u64) -> Result<Field> {
        if is_prime_u64(q) {
            return Field::prime(q);
        }
        for n in 2..64u32 {
            let r = q.nth_root(n);
            if r < 2 {
                break;
            }
            if r.checked_pow(n) == Some(q) && is_prime_u64(r) {
                let base = Field::prime(r)?;
                let modulus = crate::factor::smallest_irreducible(&base, n as usize);
                return Field::extension(&modulus);
            }
        }
        bail!(InvalidField, "unsupported field order {q}")
    }

    /// `k[t]/(modulus)` for a monic irreducible `modulus` over `k`.
    pub fn extension(modulus: &Polynomial) -> Result<Field> {
        let base = modulus.field().clone();
        if modulus.degree() < Some(1) {
            bail!(InvalidField, "modulus must be nonconstant");
        }
        if !modulus.leading().is_one() {
            bail!(InvalidField, "modulus must be monic");
        }
        if base.is_finite() {
            if !crate::factor::is_irreducible(modulus)? {
                bail!(InvalidField, "modulus is reducible");
            }
        } else {
            if !matches!(&*base.0, FieldKind::Rationals) || modulus.degree() != Some(2) {
                bail!(Unsupported, "only quadratic extensions of Q are supported");
            }
            let b = &modulus.coeffs()[1];
            let c = &modulus.coeffs()[0];
            let disc = b * b - c * &base.from_i64(4);
            if disc.is_square() {
                bail!(InvalidField, "modulus is reducible over Q");
            }
        }
        Ok(Field::extension_unchecked(modulus))
    }

    pub(crate) fn extension_unchecked(modulus: &Polynomial) -> Field {
        let base = modulus.field().clone();
        let m = modulus.coeffs().iter().map(|c| c.repr.clone()).collect();
        Field(Arc::new(FieldKind::Extension { base, modulus: m }))
    }

    /// Residue field `k[x]/(p)` of a finite place; `k` itself when `deg p = 1`.
    pub fn residue(place: &Polynomial) -> Field {
        if place.degree() == Some(1) {
            place.field().clone()
        } else {
            Field::extension_unchecked(place)
        }
    }

    /// The ring `k[x]/(m)` presented like a field; only safe for irreducible `m`.
    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Prime { p } => *p,
            FieldKind::Extension { base, .. } => base.characteristic(),
            FieldKind::Rationals => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// Degree over the base field (1 for prime fields and Q).
    pub fn degree(&self) -> usize {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            FieldKind::Extension { base, .. } => Some(base),
            _ => None,
        }
    }

    /// Defining polynomial over the base field, for extensions.
    pub fn modulus(&self) -> Option<Polynomial> {
        match &*self.0 {
            FieldKind::Extension { base, modulus } => Some(Polynomial::new(
                base,
                modulus.iter().map(|r| base.wrap(r.clone())).collect(),
            )),
            _ => None,
        }
    }

    /// Number of elements, for finite fields.
    pub fn order(&self) -> Option<BigUint> {
        match &*self.0 {
            FieldKind::Prime { p } => Some(BigUint::from(*p)),
            FieldKind::Extension { base, modulus } => {
                base.order().map(|q| q.pow((modulus.len() - 1) as u32))
            }
            FieldKind::Rationals => None,
        }
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|q| q.to_u64())
    }

    pub(crate) fn wrap(&self, repr: Repr) -> FieldElement {
        FieldElement {
            field: self.clone(),
            repr,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(self.0.zero())
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(self.0.one())
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        self.wrap(self.0.from_bigint(&BigInt::from(n)))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        self.wrap(self.0.from_bigint(n))
    }

    /// Image of a rational number; fails when the denominator vanishes.
    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElement> {
        let n = self.from_bigint(r.numer());
        let d = self.from_bigint(r.denom());
        Ok(n * d.inv()?)
    }

    /// The generator `t` of an extension.
    pub fn generator(&self) -> Option<FieldElement> {
        match &*self.0 {
            FieldKind::Extension { base, modulus } => {
                let n = modulus.len() - 1;
                let mut v = vec![base.0.zero(); n];
                if n == 1 {
                    let c = base.wrap(modulus[0].clone());
                    return Some(self.wrap(Repr::Vec(vec![(-c).repr])));
                }
                v[1] = base.0.one();
                Some(self.wrap(Repr::Vec(v)))
            }
            _ => None,
        }
    }

    /// Element with the given coordinates in the power basis of an extension.
    pub fn from_coordinates(&self, coords: &[FieldElement]) -> Result<FieldElement> {
        match &*self.0 {
            FieldKind::Extension { base, modulus } => {
                let n = modulus.len() - 1;
                if coords.len() > n {
                    bail!(InvalidInput, "too many coordinates");
                }
                let mut v: Vec<Repr> = coords
                    .iter()
                    .map(|c| {
                        if c.field != *base {
                            Err(Error::FieldMismatch)
                        } else {
                            Ok(c.repr.clone())
                        }
                    })
                    .collect::<Result<_>>()?;
                v.resize(n, base.0.zero());
                Ok(self.wrap(Repr::Vec(v)))
            }
            _ => {
                if coords.len() != 1 || coords[0].field != *self {
                    bail!(InvalidInput, "expected a single coordinate");
                }
                Ok(coords[0].clone())
            }
        }
    }

    /// Embeds an element of the base field (or of this field itself).
    pub fn embed(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.field == *self {
            return Ok(a.clone());
        }
        match &*self.0 {
            FieldKind::Extension { base, .. } => {
                let inner = base.embed(a)?;
                self.from_coordinates(&[inner])
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Finite-field element with the given index in canonical order.
    pub fn element_from_index(&self, mut n: u64) -> FieldElement {
        match &*self.0 {
            FieldKind::Prime { p } => self.wrap(Repr::Int(n % p)),
            FieldKind::Extension { base, modulus } => {
                let q = base.order_u64().expect("finite base");
                let mut v = Vec::with_capacity(modulus.len() - 1);
                for _ in 0..modulus.len() - 1 {
                    v.push(base.element_from_index(n % q).repr);
                    n /= q;
                }
                self.wrap(Repr::Vec(v))
            }
            FieldKind::Rationals => self.from_i64(n as i64),
        }
    }

    /// Position of a finite-field element in canonical order.
    pub fn index_of(&self, a: &FieldElement) -> BigUint {
        match (&*self.0, &a.repr) {
            (FieldKind::Prime { .. }, Repr::Int(x)) => BigUint::from(*x),
            (FieldKind::Extension { base, .. }, Repr::Vec(v)) => {
                let q = base.order().unwrap_or_default();
                let mut acc = BigUint::zero();
                for r in v.iter().rev() {
                    acc = acc * &q + base.index_of(&base.wrap(r.clone()));
                }
                acc
            }
            _ => BigUint::zero(),
        }
    }

    /// All elements in canonical order (finite fields only).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let q = self.order_u64().unwrap_or(0);
        (0..q).map(move |i| self.element_from_index(i))
    }

    pub fn random_element<R: RngCore>(&self, rng: &mut R) -> FieldElement {
        match self.order_u64() {
            Some(q) => self.element_from_index(rng.next_u64() % q),
            None => {
                let n = (rng.next_u32() % 41) as i64 - 20;
                let d = (rng.next_u32() % 9) as i64 + 1;
                self.from_rational(&BigRational::new(n.into(), d.into()))
                    .expect("nonzero denominator")
            }
        }
    }

    /// Smallest non-square in canonical order (finite, odd characteristic).
    pub fn smallest_nonsquare(&self) -> Option<FieldElement> {
        if !self.is_finite() || self.characteristic() == 2 {
            return None;
        }
        self.elements().skip(1).find(|a| !a.is_square())
    }

    /// Smallest element of absolute trace one (characteristic 2); such `a`
    /// make `X^2 + X + a` irreducible.
    pub fn smallest_trace_one(&self) -> Option<FieldElement> {
        if self.characteristic() != 2 {
            return None;
        }
        self.elements().find(|a| a.absolute_trace().is_one())
    }

    /// A primitive cube root of unity, if the field contains one.
    pub fn cube_root_of_unity(&self) -> Option<FieldElement> {
        if !self.is_finite() {
            return None;
        }
        let q = self.order()?;
        if !((&q - 1u32) % 3u32).is_zero() {
            return None;
        }
        let e = (&q - 1u32) / 3u32;
        self.elements()
            .skip(1)
            .map(|a| a.pow(&e))
            .find(|z| !z.is_one())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (FieldKind::Prime { p }, FieldKind::Prime { p: q }) => p == q,
            (FieldKind::Rationals, FieldKind::Rationals) => true,
            (
                FieldKind::Extension { base, modulus },
                FieldKind::Extension {
                    base: b2,
                    modulus: m2,
                },
            ) => base == b2 && modulus == m2,
            _ => false,
        }
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Prime { p } => write!(f, "F_{p}"),
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Extension { base, .. } => {
                write!(f, "{}[t]/({})", base, self.modulus().expect("extension"))
            }
        }
    }
}

impl FieldKind {
    fn zero(&self) -> Repr {
        match self {
            FieldKind::Prime { .. } => Repr::Int(0),
            FieldKind::Extension { base, modulus } => {
                Repr::Vec(vec![base.0.zero(); modulus.len() - 1])
            }
            FieldKind::Rationals => Repr::Rat(BigRational::zero()),
        }
    }

    fn one(&self) -> Repr {
        match self {
            FieldKind::Prime { .. } => Repr::Int(1),
            FieldKind::Extension { base, modulus } => {
                let mut v = vec![base.0.zero(); modulus.len() - 1];
                v[0] = base.0.one();
                Repr::Vec(v)
            }
            FieldKind::Rationals => Repr::Rat(BigRational::one()),
        }
    }

    fn from_bigint(&self, n: &BigInt) -> Repr {
        match self {
            FieldKind::Prime { p } => {
                let r = n.mod_floor(&BigInt::from(*p));
                Repr::Int(r.to_u64().expect("reduced"))
            }
            FieldKind::Extension { base, modulus } => {
                let mut v = vec![base.0.zero(); modulus.len() - 1];
                v[0] = base.0.from_bigint(n);
                Repr::Vec(v)
            }
            FieldKind::Rationals => Repr::Rat(BigRational::from_integer(n.clone())),
        }
    }

    fn is_zero(&self, a: &Repr) -> bool {
        match (self, a) {
            (FieldKind::Prime { .. }, Repr::Int(x)) => *x == 0,
            (FieldKind::Extension { base, .. }, Repr::Vec(v)) => {
                v.iter().all(|c| base.0.is_zero(c))
            }
            (FieldKind::Rationals, Repr::Rat(r)) => r.is_zero(),
            _ => unreachable!("representation does not match field"),
        }
    }

    fn add(&self, a: &Repr, b: &Repr) -> Repr {
        match (self, a, b) {
            (FieldKind::Prime { p }, Repr::Int(x), Repr::Int(y)) => {
                Repr::Int(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (FieldKind::Extension { base, .. }, Repr::Vec(x), Repr::Vec(y)) => {
                Repr::Vec(x.iter().zip(y).map(|(u, v)| base.0.add(u, v)).collect())
            }
            (FieldKind::Rationals, Repr::Rat(x), Repr::Rat(y)) => Repr::Rat(x + y),
            _ => unreachable!("representation does not match field"),
        }
    }

    fn neg(&self, a: &Repr) -> Repr {
        match (self, a) {
            (FieldKind::Prime { p }, Repr::Int(x)) => Repr::Int(if *x == 0 { 0 } else { p - x }),
            (FieldKind::Extension { base, .. }, Repr::Vec(x)) => {
                Repr::Vec(x.iter().map(|u| base.0.neg(u)).collect())
            }
            (FieldKind::Rationals, Repr::Rat(x)) => Repr::Rat(-x),
            _ => unreachable!("representation does not match field"),
        }
    }

    fn sub(&self, a: &Repr, b: &Repr) -> Repr {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Repr, b: &Repr) -> Repr {
        match (self, a, b) {
            (FieldKind::Prime { p }, Repr::Int(x), Repr::Int(y)) => {
                Repr::Int(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (FieldKind::Extension { base, modulus }, Repr::Vec(x), Repr::Vec(y)) => {
                let n = modulus.len() - 1;
                let bk = &base.0;
                let mut prod = vec![bk.zero(); 2 * n - 1];
                for (i, u) in x.iter().enumerate() {
                    if bk.is_zero(u) {
                        continue;
                    }
                    for (j, v) in y.iter().enumerate() {
                        prod[i + j] = bk.add(&prod[i + j], &bk.mul(u, v));
                    }
                }
                for k in (n..prod.len()).rev() {
                    let c = prod[k].clone();
                    if bk.is_zero(&c) {
                        continue;
                    }
                    for (i, m) in modulus.iter().enumerate().take(n) {
                        prod[k - n + i] = bk.sub(&prod[k - n + i], &bk.mul(&c, m));
                    }
                }
                prod.truncate(n);
                Repr::Vec(prod)
            }
            (FieldKind::Rationals, Repr::Rat(x), Repr::Rat(y)) => Repr::Rat(x * y),
            _ => unreachable!("representation does not match field"),
        }
    }

    fn inv(&self, a: &Repr) -> Option<Repr> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (FieldKind::Prime { p }, Repr::Int(x)) => {
                let (g, s, _) = ext_gcd_i128(*x as i128, *p as i128);
                debug_assert_eq!(g, 1);
                Some(Repr::Int(s.rem_euclid(*p as i128) as u64))
            }
            (FieldKind::Extension { base, modulus }, Repr::Vec(_)) => {
                // Solve a * c = 1 in the power basis.
                let n = modulus.len() - 1;
                let bk = &base.0;
                let mut cols = Vec::with_capacity(n);
                let mut basis = vec![bk.zero(); n];
                basis[0] = bk.one();
                let mut cur = Repr::Vec(basis);
                let t = {
                    let mut v = vec![bk.zero(); n];
                    if n > 1 {
                        v[1] = bk.one();
                    }
                    Repr::Vec(v)
                };
                for _ in 0..n {
                    cols.push(self.mul(a, &cur));
                    cur = self.mul(&cur, &t);
                }
                let mut m: Vec<Vec<Repr>> = (0..n)
                    .map(|i| {
                        let mut row: Vec<Repr> = cols
                            .iter()
                            .map(|c| match c {
                                Repr::Vec(v) => v[i].clone(),
                                _ => unreachable!(),
                            })
                            .collect();
                        row.push(if i == 0 { bk.one() } else { bk.zero() });
                        row
                    })
                    .collect();
                let sol = solve_square(bk, &mut m)?;
                Some(Repr::Vec(sol))
            }
            (FieldKind::Rationals, Repr::Rat(x)) => Some(Repr::Rat(x.recip())),
            _ => unreachable!("representation does not match field"),
        }
    }

    fn cmp(&self, a: &Repr, b: &Repr) -> Ordering {
        match (self, a, b) {
            (FieldKind::Prime { .. }, Repr::Int(x), Repr::Int(y)) => x.cmp(y),
            (FieldKind::Extension { base, .. }, Repr::Vec(x), Repr::Vec(y)) => {
                for (u, v) in x.iter().zip(y).rev() {
                    match base.0.cmp(u, v) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            (FieldKind::Rationals, Repr::Rat(x), Repr::Rat(y)) => x.cmp(y),
            _ => unreachable!("representation does not match field"),
        }
    }
}

/// Gaussian elimination on an augmented `n x (n+1)` system.
fn solve_square(k: &FieldKind, m: &mut [Vec<Repr>]) -> Option<Vec<Repr>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !k.is_zero(&m[r][col]))?;
        m.swap(col, piv);
        let inv = k.inv(&m[col][col])?;
        for j in col..=n {
            m[col][j] = k.mul(&m[col][j], &inv);
        }
        for r in 0..n {
            if r != col && !k.is_zero(&m[r][col]) {
                let f = m[r][col].clone();
                for j in col..=n {
                    let t = k.mul(&f, &m[col][j]);
                    m[r][j] = k.sub(&m[r][j], &t);
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n].clone()).collect())
}

fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

/// Square root of a rational number, if it is a square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.field.0.is_zero(&self.repr)
    }

    pub fn is_one(&self) -> bool {
        self.repr == self.field.0.one()
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field
            .0
            .inv(&self.repr)
            .map(|r| self.field.wrap(r))
            .ok_or(Error::DivisionByZero)
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self * &other.inv()?)
    }

    pub fn square(&self) -> FieldElement {
        self * self
    }

    pub fn pow(&self, e: &BigUint) -> FieldElement {
        let mut acc = self.field.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.square();
            if e.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    pub fn pow_i64(&self, e: i64) -> Result<FieldElement> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow(&BigUint::from(e.unsigned_abs())))
    }

    /// Value for prime-field elements.
    pub fn as_u64(&self) -> Option<u64> {
        match self.repr {
            Repr::Int(x) => Some(x),
            _ => None,
        }
    }

    /// Value for rational elements.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// Power-basis coordinates over the base field; the element itself
    /// otherwise.
    pub fn coordinates(&self) -> Vec<FieldElement> {
        match (&*self.field.0, &self.repr) {
            (FieldKind::Extension { base, .. }, Repr::Vec(v)) => {
                v.iter().map(|r| base.wrap(r.clone())).collect()
            }
            _ => vec![self.clone()],
        }
    }

    /// Whether the element lies in the base field of an extension.
    pub fn in_base(&self) -> Option<FieldElement> {
        let c = self.coordinates();
        if self.field.base().is_some() && c[1..].iter().all(|x| x.is_zero()) {
            Some(c[0].clone())
        } else if self.field.base().is_none() {
            Some(self.clone())
        } else {
            None
        }
    }

    /// Absolute trace to the prime field, for finite fields.
    pub fn absolute_trace(&self) -> FieldElement {
        let p = self.field.characteristic();
        let mut acc = self.field.zero();
        let mut cur = self.clone();
        let pe = BigUint::from(p);
        let mut q = BigUint::one();
        let order = self.field.order().unwrap_or_default();
        while q < order {
            acc = &acc + &cur;
            cur = cur.pow(&pe);
            q *= &pe;
        }
        acc
    }

    pub fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        match self.field.order() {
            Some(q) => {
                if self.field.characteristic() == 2 {
                    return true;
                }
                self.pow(&((q - 1u32) >> 1)).is_one()
            }
            None => self.sqrt().is_some(),
        }
    }

    /// A square root, choosing the smaller of `{r, -r}` in canonical order.
    pub fn sqrt(&self) -> Option<FieldElement> {
        let r = self.sqrt_any()?;
        let m = -&r;
        Some(if m < r { m } else { r })
    }

    fn sqrt_any(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let k = &self.field;
        if let Some(q) = k.order() {
            if k.characteristic() == 2 {
                return Some(self.pow(&(q >> 1)));
            }
            if !self.is_square() {
                return None;
            }
            return Some(tonelli_shanks(self, &q));
        }
        match &*k.0 {
            FieldKind::Rationals => rational_sqrt(self.as_rational()?).map(|r| k.wrap(Repr::Rat(r))),
            FieldKind::Extension { .. } => sqrt_quadratic_over_q(self),
            _ => None,
        }
    }

    /// Is the element a cube (finite fields)?
    pub fn is_cube(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        match self.field.order() {
            Some(q) => {
                let qm = q - 1u32;
                if !(&qm % 3u32).is_zero() {
                    return true;
                }
                self.pow(&(qm / 3u32)).is_one()
            }
            None => false,
        }
    }
}

fn tonelli_shanks(a: &FieldElement, q: &BigUint) -> FieldElement {
    let k = a.field();
    let qm = q - 1u32;
    let s = qm.trailing_zeros().unwrap_or(0);
    let odd = &qm >> s;
    let z = k.smallest_nonsquare().expect("odd finite field");
    let mut m = s;
    let mut c = z.pow(&odd);
    let mut t = a.pow(&odd);
    let mut r = a.pow(&((&odd + 1u32) >> 1));
    while !t.is_one() {
        let mut i = 0;
        let mut tt = t.clone();
        while !tt.is_one() {
            tt = tt.square();
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = b.square();
        }
        m = i;
        c = b.square();
        t = &t * &c;
        r = &r * &b;
    }
    r
}

/// Square roots in `Q[t]/(t^2 - a t - b)`.
fn sqrt_quadratic_over_q(x: &FieldElement) -> Option<FieldElement> {
    let k = x.field();
    let m = k.modulus()?;
    if m.degree() != Some(2) || k.characteristic() != 0 {
        return None;
    }
    let q = k.base()?;
    // t^2 + m1 t + m0 = 0; write s = t + m1/2 so that s^2 = D.
    let half = q.from_i64(2).inv().ok()?;
    let m1 = &m.coeffs()[1];
    let m0 = &m.coeffs()[0];
    let shift = m1 * &half;
    let d = &(&shift * &shift) - m0;
    let c = x.coordinates();
    // x = c0 + c1 t = (c0 - c1 shift) + c1 s
    let a0 = &c[0] - &(&c[1] * &shift);
    let a1 = c[1].clone();
    let d_r = d.as_rational()?;
    let a0r = a0.as_rational()?;
    let a1r = a1.as_rational()?;
    // (u + v s)^2 = u^2 + d v^2 + 2 u v s
    let norm = a0r * a0r - d_r * a1r * a1r;
    let root_norm = rational_sqrt(&norm)?;
    let two = BigRational::from_integer(2.into());
    for sign in [BigRational::one(), -BigRational::one()] {
        let u2 = (a0r + &sign * &root_norm) / &two;
        if let Some(u) = rational_sqrt(&u2) {
            let (u, v) = if u.is_zero() {
                let v2 = a0r / d_r;
                match rational_sqrt(&v2) {
                    Some(v) => (u, v),
                    None => continue,
                }
            } else {
                let v = a1r / (&two * &u);
                (u, v)
            };
            // back to the t basis: u + v s = (u + v shift) + v t
            let ue = q.wrap(Repr::Rat(u));
            let ve = q.wrap(Repr::Rat(v));
            let c0 = &ue + &(&ve * &shift);
            let r = k.from_coordinates(&[c0, ve]).ok()?;
            if &r * &r == *x {
                return Some(r);
            }
        }
    }
    None
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &FieldElement) -> bool {
        self.repr == other.repr
    }
}
impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &FieldElement) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &FieldElement) -> Ordering {
        self.field.0.cmp(&self.repr, &other.repr)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Int(x) => write!(f, "{x}"),
            Repr::Rat(r) => write!(f, "{r}"),
            Repr::Vec(_) => {
                let parts: Vec<String> = self
                    .coordinates()
                    .iter()
                    .map(|c| format!("{c}"))
                    .collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:ident) => {
        impl<'a> $tr<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &'a FieldElement) -> FieldElement {
                debug_assert!(self.field == rhs.field, "field mismatch");
                self.field.wrap(self.field.0.$op(&self.repr, &rhs.repr))
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}
binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("division by zero")
    }
}
impl Div<FieldElement> for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        &self / &rhs
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.wrap(self.field.0.neg(&self.repr))
    }
}
impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        self.repr = self.field.0.add(&self.repr, &rhs.repr);
    }
}
impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        self.repr = self.field.0.sub(&self.repr, &rhs.repr);
    }
}
impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        self.repr = self.field.0.mul(&self.repr, &rhs.repr);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_sqrt(a: &FieldElement) -> Option<FieldElement> {
        a.field().elements().find(|x| &(x * x) == a)
    }

    #[test]
    fn rejects_char_three_and_composites() {
        assert!(Field::prime(3).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::finite(6).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn inverse_in_prime_field() {
        let k = Field::prime(13).unwrap();
        for a in k.elements().skip(1) {
            assert!((&a * &a.inv().unwrap()).is_one());
        }
        assert!(k.zero().inv().is_err());
    }

    #[test]
    fn sqrt_matches_exhaustive_search() {
        for q in [5u64, 7, 11, 13, 17, 25, 49, 4, 8] {
            let k = match Field::finite(q) {
                Ok(k) => k,
                Err(_) => continue,
            };
            for a in k.elements() {
                let expect = brute_sqrt(&a);
                assert_eq!(a.is_square(), expect.is_some(), "q={q} a={a}");
                if let Some(r) = a.sqrt() {
                    assert_eq!(&r * &r, a);
                }
            }
        }
    }

    #[test]
    fn f4_arithmetic() {
        let k = Field::finite(4).unwrap();
        let t = k.generator().unwrap();
        // t^2 = t + 1
        assert_eq!(&t * &t, &t + &k.one());
        assert_eq!(t.pow(&BigUint::from(3u32)), k.one());
        assert_eq!(k.elements().count(), 4);
        assert_eq!(k.smallest_trace_one().unwrap(), t);
    }

    #[test]
    fn extension_inverse() {
        let k = Field::finite(49).unwrap();
        for a in k.elements().skip(1) {
            assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_order_is_index_order() {
        let k = Field::finite(25).unwrap();
        let v: Vec<_> = k.elements().collect();
        for w in v.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, a) in v.iter().enumerate() {
            assert_eq!(k.index_of(a), BigUint::from(i));
        }
    }

    #[test]
    fn rational_square_roots() {
        let q = Field::rationals();
        let a = q
            .from_rational(&BigRational::new(49.into(), 9.into()))
            .unwrap();
        assert_eq!(
            a.sqrt().unwrap(),
            q.from_rational(&BigRational::new((-7).into(), 3.into())).unwrap()
        );
        assert!(q.from_i64(2).sqrt().is_none());
        assert!(!q.from_i64(-1).is_square());
    }

    #[test]
    fn sqrt_in_quadratic_extension_of_q() {
        let q = Field::rationals();
        let m = Polynomial::new(&q, vec![q.from_i64(-2), q.zero(), q.one()]);
        let k = Field::extension(&m).unwrap();
        let t = k.generator().unwrap();
        // (1 + t)^2 = 3 + 2t
        let x = &(&k.one() + &t) * &(&k.one() + &t);
        let r = x.sqrt().unwrap();
        assert_eq!(&r * &r, x);
        assert!(k.from_i64(2).is_square());
        assert!(!k.from_i64(3).is_square());
    }

    #[test]
    fn cube_classes() {
        let k = Field::prime(7).unwrap();
        let cubes: Vec<_> = k.elements().skip(1).filter(|a| a.is_cube()).collect();
        assert_eq!(cubes, vec![k.from_i64(1), k.from_i64(6)]);
        assert!(k.cube_root_of_unity().is_some());
        assert!(Field::prime(5).unwrap().cube_root_of_unity().is_none());
    }
}
