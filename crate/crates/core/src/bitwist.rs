//! Closed-form bi-twist families of cubic covers of the line with small
//! ramification, and their class counts over finite fields.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::cubic::CubicModel;
use crate::error::{bail, Error, Result};
use crate::factor::{is_irreducible, smallest_irreducible};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;
use crate::pure_cubic::bitwist_reps_deg3;
use crate::ratfunc::RationalFunction;

/// Ramification type over `k-bar` together with the genus of the cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// `(3^2, 0)`.
    R33,
    /// `(3^2, 0)` in characteristic 2 with an Artin-Schreier quadratic.
    R33Char2AS,
    /// `(3^3, 1)`, purely cubic.
    R333,
    /// `(3^1 2^2, 0)`.
    R322,
    /// `(3^2 2^2, 1)` in the `nu`-form.
    R3322,
    /// `(3^2 2^2, 1)` in the `mu`-form.
    R3322Mu,
    /// `(3^1 2^1, 0)`, characteristic 2.
    R32Char2,
    /// `(3^2 2^1, 1)`, characteristic 2.
    R332Char2,
}

pub const ALL_TAGS: [FamilyTag; 8] = [
    FamilyTag::R33,
    FamilyTag::R33Char2AS,
    FamilyTag::R333,
    FamilyTag::R322,
    FamilyTag::R3322,
    FamilyTag::R3322Mu,
    FamilyTag::R32Char2,
    FamilyTag::R332Char2,
];

impl FamilyTag {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyTag::R33 => "R33",
            FamilyTag::R33Char2AS => "R33_char2_AS",
            FamilyTag::R333 => "R333",
            FamilyTag::R322 => "R322",
            FamilyTag::R3322 => "R3322",
            FamilyTag::R3322Mu => "R3322_mu",
            FamilyTag::R32Char2 => "R32_char2",
            FamilyTag::R332Char2 => "R332_char2",
        }
    }

    /// `(deg T, deg S, g)` of every member.
    pub fn row(&self) -> (usize, usize, i64) {
        match self {
            FamilyTag::R33 | FamilyTag::R33Char2AS => (2, 0, 0),
            FamilyTag::R333 => (3, 0, 1),
            FamilyTag::R322 => (1, 2, 0),
            FamilyTag::R3322 | FamilyTag::R3322Mu => (2, 2, 1),
            FamilyTag::R32Char2 => (1, 1, 0),
            FamilyTag::R332Char2 => (2, 1, 1),
        }
    }

    /// `Some(true)`: characteristic 2 only; `Some(false)`: odd only.
    fn characteristic_two(&self) -> Option<bool> {
        match self {
            FamilyTag::R33 | FamilyTag::R333 => None,
            FamilyTag::R33Char2AS | FamilyTag::R32Char2 | FamilyTag::R332Char2 => Some(true),
            FamilyTag::R322 | FamilyTag::R3322 | FamilyTag::R3322Mu => Some(false),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyTag> {
        ALL_TAGS
            .iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::InvalidInput(String::from(s)))
    }
}

/// A family member with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyId {
    /// Quadratic `X^2 + a X + b`, irreducible.
    R33 { a: FieldElement, b: FieldElement },
    /// `X^2 + X + a`, irreducible.
    R33Char2AS { a: FieldElement },
    R322 { d: FieldElement },
    R3322 { nu: FieldElement, d: FieldElement },
    R3322Mu { mu: FieldElement },
    R32Char2 { field: Field },
    R332Char2 { lambda: FieldElement, a: FieldElement },
}

impl FamilyId {
    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilyId::R33 { .. } => FamilyTag::R33,
            FamilyId::R33Char2AS { .. } => FamilyTag::R33Char2AS,
            FamilyId::R322 { .. } => FamilyTag::R322,
            FamilyId::R3322 { .. } => FamilyTag::R3322,
            FamilyId::R3322Mu { .. } => FamilyTag::R3322Mu,
            FamilyId::R32Char2 { .. } => FamilyTag::R32Char2,
            FamilyId::R332Char2 { .. } => FamilyTag::R332Char2,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FamilyId::R33 { a, .. }
            | FamilyId::R33Char2AS { a }
            | FamilyId::R332Char2 { a, .. } => a.field().clone(),
            FamilyId::R322 { d } | FamilyId::R3322 { d, .. } => d.field().clone(),
            FamilyId::R3322Mu { mu } => mu.field().clone(),
            FamilyId::R32Char2 { field } => field.clone(),
        }
    }
}

fn check_char(tag: FamilyTag, k: &Field) -> Result<()> {
    let ch = k.characteristic();
    if ch == 3 {
        bail!(InvalidInput, "characteristic 3");
    }
    match tag.characteristic_two() {
        Some(true) if ch != 2 => bail!(InvalidInput, "{tag} needs characteristic 2"),
        Some(false) if ch == 2 => bail!(InvalidInput, "{tag} needs odd characteristic"),
        _ => Ok(()),
    }
}

/// The defining equation of a family member.
pub fn family_member(id: &FamilyId) -> Result<CubicModel> {
    let k = id.field();
    check_char(id.tag(), &k)?;
    let x = |c: &[FieldElement]| Polynomial::new(&k, c.to_vec());
    let (zero, one, two) = (k.zero(), k.one(), k.from_i64(2));
    let alpha = match id {
        FamilyId::R33 { a, b } => {
            let q = x(&[b.clone(), a.clone(), one.clone()]);
            if !is_irreducible(&q)? {
                bail!(InvalidInput, "X^2 + ({a}) X + ({b}) is reducible");
            }
            // (2x^2 + 2ax + (a^2 - 2b)) / (x^2 + ax + b)
            let num = x(&[&a.square() - &(&two * b), &two * a, two.clone()]);
            RationalFunction::new(num, q)?
        }
        FamilyId::R33Char2AS { a } => {
            let q = x(&[a.clone(), one.clone(), one.clone()]);
            if !is_irreducible(&q)? {
                bail!(InvalidInput, "X^2 + X + ({a}) is reducible");
            }
            RationalFunction::new(Polynomial::one(&k), q)?
        }
        FamilyId::R322 { d } => {
            if d.is_zero() {
                bail!(InvalidInput, "d must be nonzero");
            }
            // 2 (2x^2 - d) / d
            let s = &two * &d.inv()?;
            RationalFunction::from_poly(&x(&[-&two, zero.clone(), &two * &s]))
        }
        FamilyId::R3322 { nu, d } => {
            if nu.is_zero() || nu.is_one() || d.is_zero() {
                bail!(InvalidInput, "need nu not in {{0, 1}} and d nonzero");
            }
            // 2 ((2 nu - 1) x^2 - d nu) / (x^2 - d nu)
            let dn = d * nu;
            let lead = &(&two * nu) - &one;
            let num = x(&[-&(&two * &dn), zero.clone(), &two * &lead]);
            RationalFunction::new(num, x(&[-&dn, zero.clone(), one.clone()]))?
        }
        FamilyId::R3322Mu { mu } => {
            if mu == &two || mu == &-&two {
                bail!(InvalidInput, "mu must differ from 2 and -2");
            }
            // 2 (x^2 + (mu + 4) x + 1) / (x^2 - mu x + 1)
            let num = x(&[two.clone(), &two * &(mu + &k.from_i64(4)), two.clone()]);
            RationalFunction::new(num, x(&[one.clone(), -mu, one.clone()]))?
        }
        FamilyId::R32Char2 { .. } => RationalFunction::x(&k),
        FamilyId::R332Char2 { lambda, a } => {
            if lambda.is_zero() || lambda.is_one() {
                bail!(InvalidInput, "lambda must lie outside {{0, 1}}");
            }
            RationalFunction::new(Polynomial::constant(lambda), x(&[a.clone(), one.clone(), one.clone()]))?
        }
    };
    CubicModel::standard(alpha)
}

fn q_of(k: &Field) -> Result<u64> {
    match k.order_u64() {
        Some(q) => Ok(q),
        None => bail!(Unsupported, "class counts need a finite field"),
    }
}

/// Number of bi-isomorphism classes over `F_q`.
pub fn class_count(tag: FamilyTag, k: &Field) -> Result<u64> {
    check_char(tag, k)?;
    let q = q_of(k)?;
    Ok(match tag {
        FamilyTag::R33 | FamilyTag::R33Char2AS | FamilyTag::R322 => 2,
        FamilyTag::R333 => {
            if q % 3 == 1 {
                9
            } else {
                3
            }
        }
        FamilyTag::R3322 | FamilyTag::R332Char2 => 2 * (q - 2),
        FamilyTag::R3322Mu => q - 2,
        FamilyTag::R32Char2 => 1,
    })
}

/// One member per bi-isomorphism class (for the `mu`-form: one per
/// geometric class, untwisted).
pub fn enumerate_classes(tag: FamilyTag, k: &Field) -> Result<Vec<CubicModel>> {
    check_char(tag, k)?;
    q_of(k)?;
    let trivial_pure = || CubicModel::pure(RationalFunction::x(k));
    let mut out = Vec::new();
    match tag {
        FamilyTag::R33 => {
            let q = smallest_irreducible(k, 2);
            out.push(trivial_pure()?);
            out.push(family_member(&FamilyId::R33 { a: q.coeff(1), b: q.coeff(0) })?);
        }
        FamilyTag::R33Char2AS => {
            out.push(trivial_pure()?);
            out.push(family_member(&FamilyId::R33Char2AS { a: trace_one(k)? })?);
        }
        FamilyTag::R333 => out = bitwist_reps_deg3(k)?,
        FamilyTag::R322 => {
            out.push(CubicModel::standard(RationalFunction::x(k))?);
            out.push(family_member(&FamilyId::R322 { d: nonsquare(k)? })?);
        }
        FamilyTag::R3322 => {
            let d0 = nonsquare(k)?;
            for nu in k.elements().filter(|v| !v.is_zero() && !v.is_one()) {
                for d in [k.one(), d0.clone()] {
                    out.push(family_member(&FamilyId::R3322 { nu: nu.clone(), d })?);
                }
            }
        }
        FamilyTag::R3322Mu => {
            let two = k.from_i64(2);
            for mu in k.elements().filter(|m| m != &two && m != &-&two) {
                out.push(family_member(&FamilyId::R3322Mu { mu })?);
            }
        }
        FamilyTag::R32Char2 => out.push(family_member(&FamilyId::R32Char2 { field: k.clone() })?),
        FamilyTag::R332Char2 => {
            let a0 = trace_one(k)?;
            for lambda in k.elements().filter(|v| !v.is_zero() && !v.is_one()) {
                for a in [k.zero(), a0.clone()] {
                    out.push(family_member(&FamilyId::R332Char2 { lambda: lambda.clone(), a })?);
                }
            }
        }
    }
    Ok(out)
}

/// `mu = 2 - 4 / (1 - nu)`, relating the two forms of the `(3^2 2^2, 1)` family.
pub fn mu_of_nu(nu: &FieldElement) -> Result<FieldElement> {
    let k = nu.field();
    let w = (&k.one() - nu).inv()?;
    Ok(&k.from_i64(2) - &(&k.from_i64(4) * &w))
}

fn nonsquare(k: &Field) -> Result<FieldElement> {
    k.smallest_nonsquare().ok_or_else(|| Error::InvalidInput("no non-square".into()))
}

fn trace_one(k: &Field) -> Result<FieldElement> {
    k.smallest_trace_one().ok_or_else(|| Error::InvalidInput("no trace-one element".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyzer::{analyze, classify, purely_cubic_closure};

    fn check_rows(tag: FamilyTag, k: &Field) {
        let models = enumerate_classes(tag, k).unwrap();
        assert_eq!(models.len() as u64, class_count(tag, k).unwrap(), "{tag} over {k}");
        let (dt, ds, g) = tag.row();
        for m in &models {
            let r = analyze(m).unwrap();
            let deg = |v: &[crate::Place]| v.iter().map(|p| p.degree()).sum::<usize>();
            assert_eq!((deg(&r.total), deg(&r.partial), r.genus), (dt, ds, g), "{tag}: {m}");
        }
        let mut eqs: Vec<String> = models.iter().map(|m| alloc::format!("{m}")).collect();
        eqs.sort();
        eqs.dedup();
        assert_eq!(eqs.len(), models.len());
    }

    #[test]
    fn table_rows_odd() {
        for q in [5u64, 7, 11, 13, 25] {
            let k = Field::finite(q).unwrap();
            for tag in [FamilyTag::R33, FamilyTag::R333, FamilyTag::R322, FamilyTag::R3322, FamilyTag::R3322Mu] {
                check_rows(tag, &k);
            }
        }
    }

    #[test]
    fn table_rows_char_two() {
        for q in [2u64, 4, 8] {
            let k = Field::finite(q).unwrap();
            for tag in [FamilyTag::R33, FamilyTag::R33Char2AS, FamilyTag::R333, FamilyTag::R32Char2, FamilyTag::R332Char2] {
                check_rows(tag, &k);
            }
        }
        assert_eq!(enumerate_classes(FamilyTag::R332Char2, &Field::finite(4).unwrap()).unwrap().len(), 4);
    }

    #[test]
    fn closed_forms() {
        let k = Field::prime(5).unwrap();
        let m = family_member(&FamilyId::R33 { a: k.zero(), b: k.from_i64(2) }).unwrap();
        let want = RationalFunction::new(Polynomial::from_ints(&k, &[1, 0, 2]), Polynomial::from_ints(&k, &[2, 0, 1])).unwrap();
        assert_eq!(m, CubicModel::standard(want).unwrap());
        let m = family_member(&FamilyId::R322 { d: k.from_i64(2) }).unwrap();
        let want = RationalFunction::from_poly(&Polynomial::from_ints(&k, &[3, 0, 2]));
        assert_eq!(m, CubicModel::standard(want).unwrap());
        assert!(family_member(&FamilyId::R33 { a: k.zero(), b: k.from_i64(-1) }).is_err());
        assert!(family_member(&FamilyId::R32Char2 { field: k }).is_err());
    }

    #[test]
    fn quadratic_member_has_the_constant_closure() {
        for q in [5u64, 7, 11, 13] {
            let k = Field::prime(q).unwrap();
            let p = smallest_irreducible(&k, 2);
            let m = family_member(&FamilyId::R33 { a: p.coeff(1), b: p.coeff(0) }).unwrap();
            let disc = &p.coeff(1).square() - &(&k.from_i64(4) * &p.coeff(0));
            let want = crate::quadratic::QuadClass::kummer(&RationalFunction::constant(&disc)).unwrap();
            assert_eq!(purely_cubic_closure(&m).unwrap(), want);
            // exactly one of the two classes is Galois
            let galois = enumerate_classes(FamilyTag::R33, &k)
                .unwrap()
                .iter()
                .filter(|m| classify(m).unwrap().galois)
                .count();
            assert_eq!(galois, 1, "q = {q}");
        }
    }

    #[test]
    fn mu_form_is_nu_form_after_moebius_change() {
        for q in [7u64, 11, 13] {
            let k = Field::prime(q).unwrap();
            let sub = RationalFunction::new(Polynomial::from_ints(&k, &[1, 1]), Polynomial::from_ints(&k, &[-1, 1])).unwrap();
            for nu in k.elements().filter(|v| !v.is_zero() && !v.is_one()) {
                let mu = mu_of_nu(&nu).unwrap();
                let Ok(m) = family_member(&FamilyId::R3322Mu { mu }) else { continue };
                let n = family_member(&FamilyId::R3322 { nu: nu.clone(), d: k.one() }).unwrap();
                let (CubicModel::Impure { alpha: am, .. }, CubicModel::Impure { alpha: an, .. }) = (m, n) else {
                    panic!()
                };
                // equal up to y -> -y
                assert_eq!(am.compose(&sub).unwrap(), -&an, "nu = {nu}");
            }
        }
    }
}
