//! Places and divisors of the rational function field `k(x)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{bail, Error, Result};
use crate::factor;
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// A place of `k(x)`: a monic irreducible polynomial or the place at infinity.
/// Finite places sort before infinity, and among themselves canonically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(Polynomial),
    Infinity,
}

impl Place {
    /// Validated finite place.
    pub fn finite(p: Polynomial) -> Result<Place> {
        if !p.is_monic() {
            bail!(InvalidInput, "place polynomial {p} is not monic");
        }
        if !factor::is_irreducible(&p)? {
            bail!(InvalidInput, "place polynomial {p} is not irreducible");
        }
        Ok(Place::Finite(p))
    }

    /// The degree-one place `x - a`.
    pub fn at(a: &FieldElement) -> Place {
        Place::Finite(Polynomial::linear(a))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn poly(&self) -> Option<&Polynomial> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinity => None,
        }
    }

    pub fn residue_field(&self, k: &Field) -> Field {
        match self {
            Place::Finite(p) => Field::residue(p),
            Place::Infinity => k.clone(),
        }
    }

    /// Image of a polynomial in the residue field of a finite place.
    pub fn reduce_poly(&self, f: &Polynomial) -> Result<FieldElement> {
        match self {
            Place::Finite(p) => residue_of(p, f),
            Place::Infinity => bail!(InvalidInput, "polynomials have no residue at infinity"),
        }
    }

    /// Value of a rational function at the place; `None` at a pole.
    pub fn value(&self, f: &RationalFunction) -> Result<Option<FieldElement>> {
        match self {
            Place::Infinity => Ok(f.eval_infinity()),
            Place::Finite(p) => {
                let d = residue_of(p, f.den())?;
                if d.is_zero() {
                    return Ok(None);
                }
                Ok(Some(&residue_of(p, f.num())? * &d.inv()?))
            }
        }
    }

    pub fn valuation(&self, f: &RationalFunction) -> Option<i64> {
        match self {
            Place::Infinity => f.valuation_infinity(),
            Place::Finite(p) => f.valuation_at(p),
        }
    }

    /// Uniformizer: `p` itself, or `1/x` at infinity.
    pub fn uniformizer(&self, k: &Field) -> RationalFunction {
        match self {
            Place::Finite(p) => RationalFunction::from_poly(p),
            Place::Infinity => RationalFunction::x(k).inv().expect("x is nonzero"),
        }
    }
}

/// `f mod p` in `k[x]/(p)`.
pub fn residue_of(p: &Polynomial, f: &Polynomial) -> Result<FieldElement> {
    let r = f.div_rem(p)?.1;
    if p.degree() == Some(1) {
        return Ok(r.coeff(0));
    }
    let k = Field::residue(p);
    k.from_coordinates(r.coeffs())
}

/// Lift of a residue-field element to a polynomial of degree `< deg p`.
pub fn lift_residue(p: &Polynomial, a: &FieldElement) -> Polynomial {
    if p.degree() == Some(1) {
        return Polynomial::constant(a);
    }
    Polynomial::new(p.field(), a.coordinates())
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

/// Formal sum of places with integer multiplicities (no zero entries).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    terms: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn new() -> Divisor {
        Divisor::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Place, i64)>>(it: I) -> Divisor {
        let mut d = Divisor::new();
        for (p, m) in it {
            d.add_term(p, m);
        }
        d
    }

    pub fn add_term(&mut self, p: Place, m: i64) {
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn mult(&self, p: &Place) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Place, &i64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Place> {
        self.terms.keys().cloned().collect()
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(p, m)| p.degree() as i64 * m).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    pub fn scaled(&self, c: i64) -> Divisor {
        Divisor::from_terms(self.terms.iter().map(|(p, m)| (p.clone(), m * c)))
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, m) in &other.terms {
            d.add_term(p.clone(), *m);
        }
        d
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.terms.iter().map(|(p, m)| format!("{m}*{p}")).collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

/// Principal divisor of a nonzero rational function (finite fields, or Q when
/// the numerator and denominator factor).
pub fn divisor_of(f: &RationalFunction) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::InvalidInput("divisor of zero".into()));
    }
    let mut d = Divisor::new();
    for (g, m) in factor::factor(f.num())?.factors {
        d.add_term(Place::Finite(g), m as i64);
    }
    for (g, m) in factor::factor(f.den())?.factors {
        d.add_term(Place::Finite(g), -(m as i64));
    }
    d.add_term(Place::Infinity, f.valuation_infinity().unwrap_or(0));
    Ok(d)
}

/// Divisor of `f` restricted to a known list of places; fails if `f` has a
/// zero or pole elsewhere. Used where factoring is unavailable.
pub fn divisor_on(f: &RationalFunction, places: &[Place]) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::InvalidInput("divisor of zero".into()));
    }
    let mut d = Divisor::new();
    let mut num = f.num().clone();
    let mut den = f.den().clone();
    for p in places {
        match p {
            Place::Infinity => d.add_term(Place::Infinity, f.valuation_infinity().unwrap_or(0)),
            Place::Finite(g) => {
                let a = num.valuation(g).unwrap_or(0);
                let b = den.valuation(g).unwrap_or(0);
                num = num.exact_div(&g.pow(a as u64))?;
                den = den.exact_div(&g.pow(b as u64))?;
                d.add_term(p.clone(), a as i64 - b as i64);
            }
        }
    }
    if num.degree() != Some(0) || den.degree() != Some(0) {
        bail!(InvalidInput, "support of {f} is not contained in the supplied places");
    }
    Ok(d)
}

/// All finite places of the given degree (finite fields only).
pub fn places_of_degree(k: &Field, d: usize) -> Vec<Place> {
    factor::irreducibles(k, d).map(Place::Finite).collect()
}

/// Total (triple) and partial (double) ramification of a cubic cover of the
/// line, with the genus of the cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub total: Vec<Place>,
    pub partial: Vec<Place>,
    pub genus: i64,
}

/// Riemann-Hurwitz for a cubic cover of the line. Partially ramified places
/// contribute different exponent 1 (tame) or 2 (characteristic 2).
pub fn genus_of_cubic(total: &[Place], partial: &[Place], characteristic: u64) -> Result<i64> {
    if characteristic == 3 {
        bail!(InvalidInput, "characteristic 3");
    }
    let deg = |s: &[Place]| s.iter().map(|p| p.degree() as i64).sum::<i64>();
    let w = if characteristic == 2 { 2 } else { 1 };
    let r = -6 + 2 * deg(total) + w * deg(partial);
    if r % 2 != 0 || r < -2 {
        bail!(Degenerate, "ramification data give 2g - 2 = {r}");
    }
    Ok(r / 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_divisors_have_degree_zero() {
        let k = Field::prime(7).unwrap();
        let f = RationalFunction::new(
            Polynomial::from_ints(&k, &[1, 0, 1, 1]),
            Polynomial::from_ints(&k, &[0, 0, 3]),
        )
        .unwrap();
        let d = divisor_of(&f).unwrap();
        assert_eq!(d.degree(), 0);
        assert_eq!(d.mult(&Place::at(&k.zero())), -2);
        assert_eq!(d.mult(&Place::Infinity), -1);
    }

    #[test]
    fn residues_of_degree_two_place() {
        let k = Field::prime(5).unwrap();
        let p = Polynomial::from_ints(&k, &[2, 0, 1]);
        let place = Place::finite(p.clone()).unwrap();
        let x = place.reduce_poly(&Polynomial::x(&k)).unwrap();
        // x^2 = -2 in the residue field
        assert_eq!(&x * &x, x.field().from_i64(-2));
        assert_eq!(lift_residue(&p, &x), Polynomial::x(&k));
    }

    #[test]
    fn genus_table_rows() {
        let k = Field::prime(5).unwrap();
        let p = |a: i64| Place::at(&k.from_i64(a));
        let inf = Place::Infinity;
        // (3^2, 0), (3^2 2^2, 1), (3^3, 1), (3^1 2^2, 0) tame
        assert_eq!(genus_of_cubic(&[p(0), inf.clone()], &[], 5).unwrap(), 0);
        assert_eq!(genus_of_cubic(&[p(0), inf.clone()], &[p(1), p(2)], 5).unwrap(), 1);
        assert_eq!(genus_of_cubic(&[p(0), p(1), inf.clone()], &[], 5).unwrap(), 1);
        assert_eq!(genus_of_cubic(&[inf.clone()], &[p(1), p(2)], 5).unwrap(), 0);
        // (3^1 2^1, 0) and (3^2 2^1, 1) in characteristic 2
        assert_eq!(genus_of_cubic(&[inf.clone()], &[p(0)], 2).unwrap(), 0);
        assert_eq!(genus_of_cubic(&[p(0), p(1)], &[inf.clone()], 2).unwrap(), 1);
        assert!(genus_of_cubic(&[inf.clone()], &[p(0)], 5).is_err());
        assert!(genus_of_cubic(&[inf], &[], 5).is_err());
    }

    #[test]
    fn rejects_reducible_places() {
        let k = Field::prime(5).unwrap();
        assert!(Place::finite(Polynomial::from_ints(&k, &[-1, 0, 1])).is_err());
    }

    #[test]
    fn divisor_on_supplied_places_over_q() {
        let q = Field::rationals();
        let f = RationalFunction::new(
            Polynomial::from_ints(&q, &[-2, 0, 1]),
            Polynomial::from_ints(&q, &[0, 1]),
        )
        .unwrap();
        let places = [
            Place::Finite(Polynomial::from_ints(&q, &[-2, 0, 1])),
            Place::Finite(Polynomial::x(&q)),
            Place::Infinity,
        ];
        let d = divisor_on(&f, &places).unwrap();
        assert_eq!(d.degree(), 0);
        assert!(divisor_on(&f, &places[1..]).is_err());
    }
}
