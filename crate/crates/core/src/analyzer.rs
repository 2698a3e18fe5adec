//! Ramification, genus, purely cubic closure and Galois resolvent of a cubic
//! model.

use alloc::vec::Vec;

use crate::cubic::CubicModel;
use crate::error::{bail, Result};
use crate::function_field::{divisor_of, divisor_on, genus_of_cubic, Divisor, Place, RamificationReport};
use crate::quadratic::{as_reduce, QuadClass};
use crate::ratfunc::RationalFunction;

/// `alpha^2 - 4 c^3`; in characteristic 2 the Artin-Schreier datum `c^3 / alpha^2`.
pub fn discriminant_datum(model: &CubicModel) -> Result<RationalFunction> {
    let CubicModel::Impure { c, alpha } = model else {
        bail!(InvalidInput, "pure models have trivial closure");
    };
    let k = model.field();
    let c3 = RationalFunction::constant(&(&c.square() * c));
    if k.characteristic() == 2 {
        return c3.checked_div(&(alpha * alpha));
    }
    let d = &(alpha * alpha) - &c3.scale(&k.from_i64(4));
    if d.is_zero() {
        bail!(Degenerate, "alpha^2 = 4 c^3 identically");
    }
    Ok(d)
}

/// Ramification report, factoring over the base field.
pub fn analyze(model: &CubicModel) -> Result<RamificationReport> {
    analyze_with(model, &|f| divisor_of(f))
}

/// Ramification report when factoring is unavailable (Q): every zero and pole
/// of the relevant functions must be among `places`.
pub fn analyze_on(model: &CubicModel, places: &[Place]) -> Result<RamificationReport> {
    analyze_with(model, &|f| divisor_on(f, places))
}

fn analyze_with(
    model: &CubicModel,
    div: &dyn Fn(&RationalFunction) -> Result<Divisor>,
) -> Result<RamificationReport> {
    let k = model.field();
    let ch = k.characteristic();
    if ch == 3 {
        bail!(InvalidInput, "characteristic 3");
    }
    let (total, partial) = match model {
        CubicModel::Pure { beta } => {
            if beta.is_constant() {
                bail!(Degenerate, "constant right-hand side");
            }
            let d = div(beta)?;
            let total: Vec<Place> = d.terms().filter(|(_, v)| *v % 3 != 0).map(|(p, _)| p.clone()).collect();
            (total, Vec::new())
        }
        CubicModel::Impure { alpha, .. } => {
            if alpha.is_constant() {
                bail!(Degenerate, "constant alpha");
            }
            let da = div(alpha)?;
            let total: Vec<Place> =
                da.terms().filter(|(_, v)| **v < 0 && *v % 3 != 0).map(|(p, _)| p.clone()).collect();
            let datum = discriminant_datum(model)?;
            let partial = if ch == 2 {
                wild_places(&datum, div)?
            } else {
                div(&datum)?.terms().filter(|(_, v)| *v % 2 != 0).map(|(p, _)| p.clone()).collect()
            };
            (total, partial)
        }
    };
    if total.is_empty() {
        bail!(Degenerate, "no total ramification: the model is reducible or a constant extension");
    }
    let genus = genus_of_cubic(&total, &partial, ch)?;
    Ok(RamificationReport { total, partial, genus })
}

// Poles of the reduced Artin-Schreier datum. Only simple reduced poles are
// covered by the fixed different exponent.
fn wild_places(
    gamma: &RationalFunction,
    div: &dyn Fn(&RationalFunction) -> Result<Divisor>,
) -> Result<Vec<Place>> {
    let g = as_reduce(gamma)?;
    if g.is_constant() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (p, v) in div(&g)?.terms() {
        if *v < 0 {
            if *v != -1 {
                bail!(Unsupported, "wild ramification at {p} with conductor beyond different exponent 2");
            }
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Set comparison of a model's ramification with an expectation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RamificationDiff {
    pub missing_total: Vec<Place>,
    pub extra_total: Vec<Place>,
    pub missing_partial: Vec<Place>,
    pub extra_partial: Vec<Place>,
}

impl RamificationDiff {
    pub fn is_empty(&self) -> bool {
        self.missing_total.is_empty()
            && self.extra_total.is_empty()
            && self.missing_partial.is_empty()
            && self.extra_partial.is_empty()
    }
}

pub fn diff_report(report: &RamificationReport, total: &[Place], partial: &[Place]) -> RamificationDiff {
    let minus = |a: &[Place], b: &[Place]| -> Vec<Place> {
        let mut v: Vec<Place> = a.iter().filter(|p| !b.contains(p)).cloned().collect();
        v.sort();
        v.dedup();
        v
    };
    RamificationDiff {
        missing_total: minus(total, &report.total),
        extra_total: minus(&report.total, total),
        missing_partial: minus(partial, &report.partial),
        extra_partial: minus(&report.partial, partial),
    }
}

/// `(matches, diff)` for the model against the expected loci.
pub fn verify_against(
    model: &CubicModel,
    total: &[Place],
    partial: &[Place],
) -> Result<(bool, RamificationDiff)> {
    let d = diff_report(&analyze(model)?, total, partial);
    Ok((d.is_empty(), d))
}

/// Class of the purely cubic closure `K'` of the extension.
pub fn purely_cubic_closure(model: &CubicModel) -> Result<QuadClass> {
    let k = model.field();
    match model {
        CubicModel::Pure { .. } => Ok(QuadClass::trivial(k)),
        CubicModel::Impure { .. } => {
            let d = discriminant_datum(model)?;
            if k.characteristic() == 2 {
                QuadClass::artin_schreier(&d)
            } else {
                QuadClass::kummer(&d)
            }
        }
    }
}

/// Class of the quadratic resolvent: the closure twisted by `sqrt(-3)`.
pub fn resolvent(model: &CubicModel) -> Result<QuadClass> {
    let k = model.field();
    let closure = purely_cubic_closure(model)?;
    let twist = if k.characteristic() == 2 {
        QuadClass::artin_schreier(&RationalFunction::one(k))?
    } else {
        QuadClass::kummer(&RationalFunction::constant(&k.from_i64(-3)))?
    };
    closure.complementary(&twist)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub purely_cubic: bool,
    pub galois: bool,
}

pub fn classify(model: &CubicModel) -> Result<Classification> {
    Ok(Classification {
        purely_cubic: purely_cubic_closure(model)?.is_trivial(),
        galois: resolvent(model)?.is_trivial(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::Polynomial;
    use alloc::vec;

    fn rf(k: &Field, n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(k, n), Polynomial::from_ints(k, d)).unwrap()
    }

    fn fin(k: &Field, c: &[i64]) -> Place {
        Place::Finite(Polynomial::from_ints(k, c))
    }

    #[test]
    fn weierstrass_like_family() {
        let k = Field::prime(5).unwrap();
        let m = CubicModel::standard(rf(&k, &[0, 1], &[1])).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!(r.total, vec![Place::Infinity]);
        assert_eq!(r.partial, vec![fin(&k, &[2, 1]), fin(&k, &[-2, 1])]);
        assert_eq!(r.genus, 0);
    }

    #[test]
    fn unramified_closure() {
        let k = Field::prime(5).unwrap();
        let m = CubicModel::standard(rf(&k, &[1, 0, 2], &[2, 0, 1])).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!(r.total, vec![fin(&k, &[2, 0, 1])]);
        assert!(r.partial.is_empty());
        assert_eq!(r.genus, 0);
        let cl = purely_cubic_closure(&m).unwrap();
        assert!(cl.is_constant() && !cl.is_trivial());
    }

    #[test]
    fn pure_degree_three_locus() {
        let k = Field::prime(7).unwrap();
        let m = CubicModel::pure(rf(&k, &[0, -1, 1], &[1])).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!(r.total.len(), 3);
        assert_eq!(r.genus, 1);
        // F7 contains the cube roots of unity, so the pure model is Galois.
        assert_eq!(classify(&m).unwrap(), Classification { purely_cubic: true, galois: true });
        let k5 = Field::prime(5).unwrap();
        let m5 = CubicModel::pure(rf(&k5, &[0, 1], &[1])).unwrap();
        assert!(!classify(&m5).unwrap().galois);
    }

    #[test]
    fn verify_reports_missing_infinity() {
        let k = Field::prime(5).unwrap();
        let m = CubicModel::pure(rf(&k, &[0, 1], &[1])).unwrap();
        let (ok, d) = verify_against(&m, &[Place::at(&k.zero())], &[]).unwrap();
        assert!(!ok);
        assert_eq!(d.extra_total, vec![Place::Infinity]);
    }

    #[test]
    fn quadratic_family_with_one_pole() {
        // alpha = 2(2x^2 - d)/d, alpha^2 - 4 = (16 x^2/d^2)(x^2 - d)
        for p in [5u64, 7, 11, 13] {
            let k = Field::prime(p).unwrap();
            let d = k.smallest_nonsquare().unwrap();
            let dinv = d.inv().unwrap();
            let num = Polynomial::new(&k, vec![-k.from_i64(2), k.zero(), &k.from_i64(4) * &dinv]);
            let m = CubicModel::standard(RationalFunction::from_poly(&num)).unwrap();
            let xd = Polynomial::new(&k, vec![-d.clone(), k.zero(), k.one()]);
            let (ok, diff) = verify_against(&m, &[Place::Infinity], &[Place::Finite(xd)]).unwrap();
            assert!(ok, "{diff:?}");
        }
    }

    #[test]
    fn characteristic_two_rows() {
        let k = Field::prime(2).unwrap();
        // y^3 = y + x: (3^1 2^1, 0)
        let m = CubicModel::standard(rf(&k, &[0, 1], &[1])).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!(r.total, vec![Place::Infinity]);
        assert_eq!(r.partial, vec![Place::at(&k.zero())]);
        assert_eq!(r.genus, 0);
        assert_ne!(resolvent(&m).unwrap(), purely_cubic_closure(&m).unwrap());
        // y^3 = y + lambda/(x^2 + x + a) over F4, lambda != 0, 1: (3^2 2^1, 1)
        let k4 = Field::finite(4).unwrap();
        let lam = k4.generator().unwrap();
        let den = Polynomial::new(&k4, vec![k4.zero(), k4.one(), k4.one()]);
        let m = CubicModel::standard(RationalFunction::new(Polynomial::constant(&lam), den).unwrap()).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!(r.partial, vec![Place::Infinity]);
        assert_eq!(r.genus, 1);
        // F4 contains the cube roots of unity
        assert_eq!(resolvent(&m).unwrap(), purely_cubic_closure(&m).unwrap());
    }

    #[test]
    fn degenerate_models() {
        let k = Field::prime(5).unwrap();
        assert!(analyze(&CubicModel::standard(rf(&k, &[2], &[1])).unwrap()).is_err());
        // y^3 = x^3 is reducible
        assert!(analyze(&CubicModel::pure(rf(&k, &[0, 0, 0, 1], &[1])).unwrap()).is_err());
    }

    #[test]
    fn rational_model_with_supplied_places() {
        let q = Field::rationals();
        let m = CubicModel::standard(rf(&q, &[0, 1], &[1])).unwrap();
        let places = [fin(&q, &[0, 1]), fin(&q, &[-2, 1]), fin(&q, &[2, 1]), Place::Infinity];
        let r = analyze_on(&m, &places).unwrap();
        assert_eq!(r.total, vec![Place::Infinity]);
        assert_eq!(r.partial.len(), 2);
        assert!(analyze_on(&m, &places[1..]).is_err());
    }
}
