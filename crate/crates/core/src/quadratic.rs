//! Quadratic extensions of `k(x)`: square classes, Artin–Schreier classes,
//! genus-zero models and their rational parametrizations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{bail, Error, Result};
use crate::factor;
use crate::field::{Field, FieldElement, FieldKind};
use crate::function_field::{lift_residue, Place};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// Class of a quadratic extension `K(sqrt(d))` (odd characteristic) or
/// `K(y)`, `y^2 + y = gamma` (characteristic 2).
#[derive(Clone)]
pub enum QuadClass {
    /// `d = kappa * m`, `m` monic squarefree, `kappa` a canonical constant
    /// class representative.
    Kummer { kappa: FieldElement, m: Polynomial },
    /// `gamma` reduced so that every pole has odd order.
    ArtinSchreier { gamma: RationalFunction },
}

impl QuadClass {
    pub fn trivial(k: &Field) -> QuadClass {
        if k.characteristic() == 2 {
            QuadClass::ArtinSchreier {
                gamma: RationalFunction::zero(k),
            }
        } else {
            QuadClass::Kummer {
                kappa: k.one(),
                m: Polynomial::one(k),
            }
        }
    }

    /// Class of `K(sqrt(d))`.
    pub fn kummer(d: &RationalFunction) -> Result<QuadClass> {
        let k = d.field();
        if k.characteristic() == 2 {
            bail!(InvalidInput, "Kummer classes need odd characteristic");
        }
        if d.is_zero() {
            bail!(InvalidInput, "square class of zero");
        }
        let g = d.num() * d.den();
        let mut m = Polynomial::one(k);
        for (h, e) in factor::squarefree_decomposition(&g)? {
            if e % 2 == 1 {
                m = &m * &h;
            }
        }
        let kappa = constant_class(&g.leading())?;
        Ok(QuadClass::Kummer { kappa, m })
    }

    /// Class of `y^2 + y = gamma`.
    pub fn artin_schreier(gamma: &RationalFunction) -> Result<QuadClass> {
        Ok(QuadClass::ArtinSchreier {
            gamma: as_reduce(gamma)?,
        })
    }

    pub fn field(&self) -> &Field {
        match self {
            QuadClass::Kummer { m, .. } => m.field(),
            QuadClass::ArtinSchreier { gamma } => gamma.field(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            QuadClass::Kummer { kappa, m } => kappa.is_one() && m.is_one(),
            QuadClass::ArtinSchreier { gamma } => gamma.is_zero(),
        }
    }

    /// Nontrivial and geometrically trivial: the constant field extension.
    pub fn is_constant(&self) -> bool {
        !self.is_trivial()
            && match self {
                QuadClass::Kummer { m, .. } => m.is_one(),
                QuadClass::ArtinSchreier { gamma } => gamma.is_constant(),
            }
    }

    /// The class of the third quadratic subfield of the compositum.
    pub fn complementary(&self, other: &QuadClass) -> Result<QuadClass> {
        match (self, other) {
            (QuadClass::Kummer { .. }, QuadClass::Kummer { .. }) => {
                QuadClass::kummer(&(&self.representative() * &other.representative()))
            }
            (QuadClass::ArtinSchreier { gamma: a }, QuadClass::ArtinSchreier { gamma: b }) => {
                QuadClass::artin_schreier(&(a + b))
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    /// `kappa * m` or the reduced `gamma`.
    pub fn representative(&self) -> RationalFunction {
        match self {
            QuadClass::Kummer { kappa, m } => RationalFunction::from_poly(&m.scale(kappa)),
            QuadClass::ArtinSchreier { gamma } => gamma.clone(),
        }
    }

    /// Places ramified in the extension.
    pub fn branch_places(&self) -> Result<Vec<Place>> {
        let mut out = Vec::new();
        match self {
            QuadClass::Kummer { m, .. } => {
                for (g, _) in factor::factor(m)?.factors {
                    out.push(Place::Finite(g));
                }
                if m.degree().unwrap_or(0) % 2 == 1 {
                    out.push(Place::Infinity);
                }
            }
            QuadClass::ArtinSchreier { gamma } => {
                for (g, _) in factor::factor(gamma.den())?.factors {
                    out.push(Place::Finite(g));
                }
                if gamma.valuation_infinity().is_some_and(|v| v < 0) {
                    out.push(Place::Infinity);
                }
            }
        }
        Ok(out)
    }
}

impl PartialEq for QuadClass {
    fn eq(&self, other: &QuadClass) -> bool {
        match (self, other) {
            (QuadClass::Kummer { kappa: a, m: b }, QuadClass::Kummer { kappa: c, m: d }) => {
                a == c && b == d
            }
            (QuadClass::ArtinSchreier { gamma: a }, QuadClass::ArtinSchreier { gamma: b }) => {
                as_reduce(&(a + b)).map(|g| g.is_zero()).unwrap_or(false)
            }
            _ => false,
        }
    }
}
impl Eq for QuadClass {}

impl fmt::Debug for QuadClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadClass::Kummer { kappa, m } => write!(f, "Kummer({kappa} * ({m}))"),
            QuadClass::ArtinSchreier { gamma } => write!(f, "ArtinSchreier({gamma})"),
        }
    }
}

/// Canonical representative of the square class of a nonzero constant:
/// `1` or the smallest non-square (finite fields), the squarefree integer in
/// the class (Q).
pub fn constant_class(c: &FieldElement) -> Result<FieldElement> {
    let k = c.field();
    if c.is_zero() {
        bail!(InvalidInput, "square class of zero");
    }
    if k.is_finite() {
        return Ok(if c.is_square() {
            k.one()
        } else {
            k.smallest_nonsquare().expect("odd finite field")
        });
    }
    match k.kind() {
        FieldKind::Rationals => {
            let r = c.as_rational().expect("rational");
            let n = squarefree_part(&(r.numer() * r.denom()))?;
            Ok(k.from_bigint(&n))
        }
        _ => bail!(Unsupported, "square classes over {k}"),
    }
}

/// Squarefree integer in the square class of `n` (sign kept).
pub fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    let mut rest = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= rest {
        if p > limit {
            let r = num_integer::Roots::sqrt(&rest);
            if &r * &r == rest {
                rest = BigInt::one();
                break;
            }
            bail!(Unsupported, "integer {n} too large to reduce");
        }
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out *= rest;
    if n.is_negative() {
        out = -out;
    }
    Ok(out)
}

/// Reduce `gamma` modulo `{h^2 + h}` until every pole has odd order; a
/// pole-free remainder is reduced to `0` or a fixed trace-one constant.
pub fn as_reduce(gamma: &RationalFunction) -> Result<RationalFunction> {
    let k = gamma.field().clone();
    if k.characteristic() != 2 {
        bail!(InvalidInput, "Artin-Schreier classes need characteristic 2");
    }
    let mut g = gamma.clone();
    loop {
        let mut changed = false;
        // infinity
        if let Some(v) = g.valuation_infinity() {
            if v < 0 && v % 2 == 0 {
                let m = (-v / 2) as usize;
                let c = &g.num().leading() * &g.den().leading().inv()?;
                let s = c.sqrt().expect("char 2");
                let h = RationalFunction::from_poly(&Polynomial::monomial(&s, m));
                g = &(&g + &(&h * &h)) + &h;
                changed = true;
            }
        }
        if !changed {
            for (p, e) in factor::factor(g.den())?.factors {
                if e % 2 == 0 {
                    let m = (e / 2) as u64;
                    let pe = p.pow(e as u64);
                    let lead = crate::function_field::residue_of(&p, g.num())?;
                    let den_rest = crate::function_field::residue_of(&p, &g.den().exact_div(&pe)?)?;
                    let c = &lead * &den_rest.inv()?;
                    let s = c.sqrt().expect("char 2");
                    let h = RationalFunction::new(lift_residue(&p, &s), p.pow(m))?;
                    g = &(&g + &(&h * &h)) + &h;
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            break;
        }
    }
    if let Some(c) = g.as_constant() {
        return Ok(if c.absolute_trace().is_zero() {
            RationalFunction::zero(&k)
        } else {
            RationalFunction::constant(&k.smallest_trace_one().expect("char 2"))
        });
    }
    Ok(g)
}

/// Behaviour of a place in a quadratic extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Splitting {
    /// Splits; `rho` is the value of `y` (of `y / x^{deg f / 2}` at infinity)
    /// at one of the two places above, in the residue field.
    Split { rho: FieldElement },
    Inert,
    Ramified,
}

/// Genus-zero quadratic extensions used as closures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticModel {
    /// `y^2 = f`, `f` squarefree of degree at most two.
    Kummer { f: Polynomial },
    /// `y^2 + y = gamma`, `gamma` of the form `a x + b` with `a != 0`.
    ArtinSchreier { gamma: RationalFunction },
}

impl QuadraticModel {
    pub fn kummer(f: Polynomial) -> Result<QuadraticModel> {
        let k = f.field();
        if k.characteristic() == 2 {
            bail!(InvalidInput, "Kummer models need odd characteristic");
        }
        match f.degree() {
            None => bail!(InvalidInput, "y^2 = 0 is not a field"),
            Some(0) => {
                if f.coeff(0).is_square() {
                    bail!(Degenerate, "y^2 = {f} is split");
                }
            }
            Some(1) | Some(2) => {
                if !f.is_squarefree() {
                    bail!(InvalidInput, "{f} is not squarefree");
                }
            }
            Some(_) => bail!(Unsupported, "closures of positive genus ({f})"),
        }
        Ok(QuadraticModel::Kummer { f })
    }

    pub fn artin_schreier(gamma: RationalFunction) -> Result<QuadraticModel> {
        if gamma.field().characteristic() != 2 {
            bail!(InvalidInput, "Artin-Schreier models need characteristic 2");
        }
        match gamma.as_polynomial() {
            Some(p) if p.degree() == Some(1) => Ok(QuadraticModel::ArtinSchreier { gamma }),
            _ => bail!(Unsupported, "Artin-Schreier closure {gamma}"),
        }
    }

    pub fn from_class(c: &QuadClass) -> Result<QuadraticModel> {
        if c.is_trivial() {
            bail!(Degenerate, "trivial class has no quadratic model");
        }
        match c {
            QuadClass::Kummer { kappa, m } => QuadraticModel::kummer(m.scale(kappa)),
            QuadClass::ArtinSchreier { gamma } => QuadraticModel::artin_schreier(gamma.clone()),
        }
    }

    pub fn class(&self) -> Result<QuadClass> {
        match self {
            QuadraticModel::Kummer { f } => QuadClass::kummer(&RationalFunction::from_poly(f)),
            QuadraticModel::ArtinSchreier { gamma } => QuadClass::artin_schreier(gamma),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            QuadraticModel::Kummer { f } => f.field(),
            QuadraticModel::ArtinSchreier { gamma } => gamma.field(),
        }
    }

    /// Constant field extension `k'(x)`.
    pub fn is_constant(&self) -> bool {
        matches!(self, QuadraticModel::Kummer { f } if f.degree() == Some(0))
    }

    pub fn branch_places(&self) -> Result<Vec<Place>> {
        self.class()?.branch_places()
    }

    pub fn splitting(&self, place: &Place) -> Result<Splitting> {
        match self {
            QuadraticModel::Kummer { f } => {
                let r = match place {
                    Place::Finite(p) => {
                        if p.divides(f) {
                            return Ok(Splitting::Ramified);
                        }
                        place.reduce_poly(f)?
                    }
                    Place::Infinity => {
                        if f.degree().unwrap_or(0) % 2 == 1 {
                            return Ok(Splitting::Ramified);
                        }
                        f.leading()
                    }
                };
                Ok(match r.sqrt() {
                    Some(rho) => Splitting::Split { rho },
                    None => Splitting::Inert,
                })
            }
            QuadraticModel::ArtinSchreier { gamma } => {
                let r = match place.value(gamma)? {
                    None => return Ok(Splitting::Ramified),
                    Some(r) => r,
                };
                let kk = r.field().clone();
                if !r.absolute_trace().is_zero() {
                    return Ok(Splitting::Inert);
                }
                let rho = kk
                    .elements()
                    .find(|z| &(z * z) + z == r)
                    .ok_or_else(|| Error::Unsupported("root of z^2 + z = r".into()))?;
                Ok(Splitting::Split { rho })
            }
        }
    }

    /// Relation `y^2 = s y + t` as `(s, t)`.
    fn relation(&self) -> (RationalFunction, RationalFunction) {
        let k = self.field();
        match self {
            QuadraticModel::Kummer { f } => {
                (RationalFunction::zero(k), RationalFunction::from_poly(f))
            }
            QuadraticModel::ArtinSchreier { gamma } => (RationalFunction::one(k), gamma.clone()),
        }
    }

    pub fn element(&self, a: RationalFunction, b: RationalFunction) -> QuadFunction {
        let (s, t) = self.relation();
        QuadFunction { a, b, s, t }
    }

    pub fn y(&self) -> QuadFunction {
        let k = self.field();
        self.element(RationalFunction::zero(k), RationalFunction::one(k))
    }
}

/// `a + b y` in `K(y)` with `y^2 = s y + t`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadFunction {
    pub a: RationalFunction,
    pub b: RationalFunction,
    s: RationalFunction,
    t: RationalFunction,
}

impl QuadFunction {
    fn with(&self, a: RationalFunction, b: RationalFunction) -> QuadFunction {
        QuadFunction {
            a,
            b,
            s: self.s.clone(),
            t: self.t.clone(),
        }
    }

    pub fn rational(&self, r: RationalFunction) -> QuadFunction {
        self.with(r, RationalFunction::zero(self.a.field()))
    }

    pub fn add(&self, o: &QuadFunction) -> QuadFunction {
        self.with(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &QuadFunction) -> QuadFunction {
        self.with(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn mul(&self, o: &QuadFunction) -> QuadFunction {
        let bd = &self.b * &o.b;
        let a = &(&self.a * &o.a) + &(&bd * &self.t);
        let b = &(&(&self.a * &o.b) + &(&self.b * &o.a)) + &(&bd * &self.s);
        self.with(a, b)
    }

    /// Image under the nontrivial automorphism `y -> s - y`.
    pub fn conj(&self) -> QuadFunction {
        self.with(&self.a + &(&self.b * &self.s), -&self.b)
    }

    pub fn norm(&self) -> RationalFunction {
        self.mul(&self.conj()).a
    }

    pub fn inv(&self) -> Result<QuadFunction> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(self.with(c.a.checked_div(&n)?, c.b.checked_div(&n)?))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl fmt::Debug for QuadFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*y", self.a, self.b)
    }
}

/// `u -> (a u + b) / (c u + d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

/// A point of the projective line: `None` is infinity.
pub type LinePoint = Option<FieldElement>;

impl Mobius {
    pub fn as_function(&self) -> RationalFunction {
        let k = self.a.field();
        RationalFunction::new(
            Polynomial::new(k, vec![self.b.clone(), self.a.clone()]),
            Polynomial::new(k, vec![self.d.clone(), self.c.clone()]),
        )
        .expect("invertible transformation")
    }

    /// `r(sigma(u))`.
    pub fn apply(&self, r: &RationalFunction) -> Result<RationalFunction> {
        r.compose(&self.as_function())
    }

    pub fn apply_point(&self, p: &LinePoint) -> LinePoint {
        match p {
            None => {
                if self.c.is_zero() {
                    None
                } else {
                    Some(&self.a / &self.c)
                }
            }
            Some(u) => {
                let den = &(&self.c * u) + &self.d;
                if den.is_zero() {
                    None
                } else {
                    Some(&(&(&self.a * u) + &self.b) / &den)
                }
            }
        }
    }

    pub fn then(&self, o: &Mobius) -> Mobius {
        // o(self(u))
        Mobius {
            a: &(&o.a * &self.a) + &(&o.b * &self.c),
            b: &(&o.a * &self.b) + &(&o.b * &self.d),
            c: &(&o.c * &self.a) + &(&o.d * &self.c),
            d: &(&o.c * &self.b) + &(&o.d * &self.d),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }
}

/// Rational parametrization of a genus-zero quadratic extension `K(y) = k(u)`.
#[derive(Clone, Debug)]
pub struct Parametrization {
    pub model: QuadraticModel,
    pub x_of_u: RationalFunction,
    pub y_of_u: RationalFunction,
    /// `u` written as `A(x) + B(x) y`.
    pub u: QuadFunction,
    /// The Galois involution acting on `u`.
    pub sigma: Mobius,
}

impl Parametrization {
    /// Pullback of `A + B y` to `k(u)`.
    pub fn pull(&self, q: &QuadFunction) -> Result<RationalFunction> {
        Ok(&q.a.compose(&self.x_of_u)? + &(&q.b.compose(&self.x_of_u)? * &self.y_of_u))
    }

    /// `r(U)` as an element `A + B y`.
    pub fn push(&self, r: &RationalFunction) -> Result<QuadFunction> {
        let eval = |p: &Polynomial| -> QuadFunction {
            let mut acc = self.u.rational(RationalFunction::zero(p.field()));
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(&self.u).add(&self.u.rational(RationalFunction::constant(c)));
            }
            acc
        };
        Ok(eval(r.num()).mul(&eval(r.den()).inv()?))
    }
}

/// Line parametrization of a nonconstant genus-zero quadratic extension.
pub fn parametrize(model: &QuadraticModel) -> Result<Parametrization> {
    let k = model.field().clone();
    let rf = |n: Polynomial, d: Polynomial| RationalFunction::new(n, d);
    let poly = |c: Vec<FieldElement>| Polynomial::new(&k, c);
    let zero = k.zero();
    let one = k.one();
    match model {
        QuadraticModel::ArtinSchreier { gamma } => {
            let g = gamma.as_polynomial().expect("linear");
            let (a, b) = (g.coeff(1), g.coeff(0));
            let ainv = a.inv()?;
            // x = (u^2 + u - b) / a, y = u
            let x_of_u = RationalFunction::from_poly(&poly(vec![-&b, one.clone(), one.clone()]).scale(&ainv));
            let y_of_u = RationalFunction::x(&k);
            Ok(Parametrization {
                model: model.clone(),
                x_of_u,
                y_of_u,
                u: model.y(),
                sigma: Mobius {
                    a: one.clone(),
                    b: one.clone(),
                    c: zero,
                    d: one,
                },
            })
        }
        QuadraticModel::Kummer { f } => match f.degree() {
            Some(1) => {
                // f = kappa (x - e): x = kappa u^2 + e, y = kappa u
                let kappa = f.leading();
                let e = -&(&f.coeff(0) / &kappa);
                let x_of_u = RationalFunction::from_poly(&poly(vec![e, zero.clone(), kappa.clone()]));
                let y_of_u = RationalFunction::from_poly(&poly(vec![zero.clone(), kappa.clone()]));
                let u = model.element(
                    RationalFunction::zero(&k),
                    RationalFunction::constant(&kappa.inv()?),
                );
                Ok(Parametrization {
                    model: model.clone(),
                    x_of_u,
                    y_of_u,
                    u,
                    sigma: Mobius {
                        a: -&one,
                        b: zero.clone(),
                        c: zero,
                        d: one,
                    },
                })
            }
            Some(2) => {
                let kappa = f.leading();
                let (b, c) = (f.coeff(1), f.coeff(0));
                if let Some(s) = kappa.sqrt() {
                    // line through a point at infinity: u = s x + y
                    let two = k.from_i64(2);
                    let den = poly(vec![b.clone(), &two * &s]);
                    let x_of_u = rf(poly(vec![-&c, zero.clone(), one.clone()]), den.clone())?;
                    let y_of_u = &RationalFunction::x(&k) - &x_of_u.scale(&s);
                    let u = model.element(
                        RationalFunction::from_poly(&poly(vec![zero.clone(), s.clone()])),
                        RationalFunction::one(&k),
                    );
                    return Ok(Parametrization {
                        model: model.clone(),
                        x_of_u,
                        y_of_u,
                        u,
                        sigma: Mobius {
                            a: -&b,
                            b: -&(&(&two * &s) * &c),
                            c: &two * &s,
                            d: b,
                        },
                    });
                }
                let (x0, y0) = affine_point(f)?;
                let fp = f.derivative().eval(&x0);
                let two = k.from_i64(2);
                // h = (f'(x0) - 2 y0 s) / (s^2 - kappa), x = x0 + h, y = y0 + s h
                let hn = poly(vec![fp.clone(), -&(&two * &y0)]);
                let hd = poly(vec![-&kappa, zero.clone(), one.clone()]);
                let h = rf(hn, hd)?;
                let x_of_u = &RationalFunction::constant(&x0) + &h;
                let y_of_u = &RationalFunction::constant(&y0) + &(&RationalFunction::x(&k) * &h);
                let inv_lin = rf(Polynomial::one(&k), Polynomial::linear(&x0))?;
                let u = model.element(inv_lin.scale(&-&y0), inv_lin);
                let sigma = Mobius {
                    a: -&fp,
                    b: &(&two * &y0) * &kappa,
                    c: -&(&two * &y0),
                    d: fp,
                };
                Ok(Parametrization {
                    model: model.clone(),
                    x_of_u,
                    y_of_u,
                    u,
                    sigma,
                })
            }
            _ => bail!(Unsupported, "no line parametrization for y^2 = {f}"),
        },
    }
}

/// A point `(x0, y0)` on `y^2 = f` with `x0` in `k`: a root of `f` if there is
/// one, otherwise the smallest `x0` with `f(x0)` a nonzero square.
fn affine_point(f: &Polynomial) -> Result<(FieldElement, FieldElement)> {
    let k = f.field();
    if let Ok(roots) = f.roots() {
        if let Some(r) = roots.first() {
            return Ok((r.clone(), k.zero()));
        }
    }
    let candidates: Vec<FieldElement> = if k.is_finite() {
        k.elements().collect()
    } else {
        let mut v = Vec::new();
        for n in 0..64i64 {
            v.push(k.from_i64(n));
            v.push(k.from_i64(-n - 1));
        }
        for d in 2..12i64 {
            for n in -24..=24i64 {
                if n.gcd(&d) == 1 {
                    v.push(k.from_rational(&BigRational::new(n.into(), d.into()))?);
                }
            }
        }
        v
    };
    for x0 in candidates {
        let v = f.eval(&x0);
        if v.is_zero() {
            continue;
        }
        if let Some(y0) = v.sqrt() {
            return Ok((x0, y0));
        }
    }
    bail!(NoRationalPoint, "y^2 = {f} has no point found with x in k")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_param(model: &QuadraticModel) {
        let p = parametrize(model).unwrap();
        let k = model.field();
        let QuadraticModel::Kummer { f } = model else {
            unreachable!()
        };
        // y^2 = f(x)
        let lhs = &p.y_of_u * &p.y_of_u;
        let rhs = RationalFunction::from_poly(f).compose(&p.x_of_u).unwrap();
        assert_eq!(lhs, rhs);
        // sigma fixes x, negates y, and is an involution
        assert_eq!(p.sigma.apply(&p.x_of_u).unwrap(), p.x_of_u);
        assert_eq!(p.sigma.apply(&p.y_of_u).unwrap(), -&p.y_of_u);
        let s2 = p.sigma.then(&p.sigma);
        assert!(s2.is_identity());
        // U pulls back to u
        assert_eq!(p.pull(&p.u).unwrap(), RationalFunction::x(k));
    }

    #[test]
    fn parametrizations_over_f5_and_f7() {
        for q in [5u64, 7, 11] {
            let k = Field::prime(q).unwrap();
            let ns = k.smallest_nonsquare().unwrap();
            for kappa in [k.one(), ns.clone()] {
                for m in crate::factor::monic_polynomials(&k, 2).filter(|m| m.is_squarefree()) {
                    check_param(&QuadraticModel::kummer(m.scale(&kappa)).unwrap());
                }
                check_param(&QuadraticModel::kummer(Polynomial::from_ints(&k, &[3, 1]).scale(&kappa)).unwrap());
            }
        }
    }

    #[test]
    fn push_then_pull_is_identity() {
        let k = Field::prime(7).unwrap();
        let model = QuadraticModel::kummer(Polynomial::from_ints(&k, &[3, 0, 3])).unwrap();
        let p = parametrize(&model).unwrap();
        let r = RationalFunction::new(
            Polynomial::from_ints(&k, &[1, 2, 0, 1]),
            Polynomial::from_ints(&k, &[4, 1]),
        )
        .unwrap();
        let q = p.push(&r).unwrap();
        assert_eq!(p.pull(&q).unwrap(), r);
    }

    #[test]
    fn square_classes() {
        let k = Field::prime(5).unwrap();
        // 2 (x^2 - 1)^3 x^2 / (x + 1)  ~  2 (x - 1)
        let num = &(&Polynomial::from_ints(&k, &[-1, 0, 1]).pow(3) * &Polynomial::x(&k).pow(2)).scale(&k.from_i64(2));
        let den = Polynomial::from_ints(&k, &[1, 1]);
        let c = QuadClass::kummer(&RationalFunction::new(num.clone(), den).unwrap()).unwrap();
        assert_eq!(
            c,
            QuadClass::Kummer {
                kappa: k.from_i64(2),
                m: Polynomial::from_ints(&k, &[-1, 1])
            }
        );
        let d = QuadClass::kummer(&RationalFunction::constant(&k.from_i64(4))).unwrap();
        assert!(d.is_trivial());
    }

    #[test]
    fn rational_square_classes() {
        let q = Field::rationals();
        let c = QuadClass::kummer(&RationalFunction::constant(
            &q.from_rational(&BigRational::new((-50).into(), 3.into())).unwrap(),
        ))
        .unwrap();
        let QuadClass::Kummer { kappa, .. } = c else { unreachable!() };
        assert_eq!(kappa, q.from_i64(-6));
    }

    #[test]
    fn artin_schreier_reduction() {
        let k = Field::prime(2).unwrap();
        // (x^2 + x + 1)^2 reduces to the constant 1, a nontrivial class over F_2
        let g = RationalFunction::from_poly(&Polynomial::from_ints(&k, &[1, 1, 1]).pow(2));
        let r = as_reduce(&g).unwrap();
        assert_eq!(r, RationalFunction::one(&k));
        // 1/x^2 ~ 1/x
        let g = RationalFunction::x(&k).pow(-2).unwrap();
        let r = as_reduce(&g).unwrap();
        assert_eq!(r.valuation_at(&Polynomial::x(&k)), Some(-1));
        // x^2 + x is trivial
        let g = RationalFunction::from_poly(&Polynomial::from_ints(&k, &[0, 1, 1]));
        assert!(as_reduce(&g).unwrap().is_zero());
        let f4 = Field::finite(4).unwrap();
        let one = RationalFunction::one(&f4);
        assert!(as_reduce(&one).unwrap().is_zero());
    }

    #[test]
    fn artin_schreier_reduction_at_degree_two_place() {
        let k = Field::prime(2).unwrap();
        let p = Polynomial::from_ints(&k, &[1, 1, 1]);
        let g = RationalFunction::new(Polynomial::x(&k), p.pow(2)).unwrap();
        let r = as_reduce(&g).unwrap();
        assert_eq!(r.valuation_at(&p), Some(-1));
        assert_eq!(QuadClass::artin_schreier(&g).unwrap(), QuadClass::artin_schreier(&r).unwrap());
    }

    #[test]
    fn splitting_types() {
        let k = Field::prime(5).unwrap();
        let m = QuadraticModel::kummer(Polynomial::from_ints(&k, &[-2, 0, 1])).unwrap();
        assert_eq!(m.splitting(&Place::Infinity).unwrap(), Splitting::Split { rho: k.one() });
        assert_eq!(m.splitting(&Place::at(&k.zero())).unwrap(), Splitting::Inert);
        match m.splitting(&Place::at(&k.from_i64(1))).unwrap() {
            Splitting::Split { rho } => assert_eq!(&rho * &rho, k.from_i64(-1)),
            s => panic!("{s:?}"),
        }
        let m = QuadraticModel::kummer(Polynomial::from_ints(&k, &[0, 1])).unwrap();
        assert_eq!(m.splitting(&Place::Infinity).unwrap(), Splitting::Ramified);
    }
}
