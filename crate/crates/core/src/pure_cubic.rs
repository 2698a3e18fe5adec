//! Purely cubic extensions `y^3 = u * prod P_i^{+-1}` with prescribed total
//! ramification, their twists, and bi-twist representatives for branch loci
//! of degree three.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cubic::CubicModel;
use crate::error::{bail, Result};
use crate::factor::smallest_irreducible;
use crate::field::{Field, FieldElement};
use crate::function_field::Place;
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// Finite places of `T` ordered by bucket (degree 0, 2, 1 mod 3), then
/// canonically; the flag says whether infinity was present.
pub fn order_places(places: &[Place]) -> Result<(Vec<Polynomial>, bool)> {
    let mut seen = places.to_vec();
    seen.sort();
    seen.dedup();
    if seen.len() != places.len() {
        bail!(InvalidInput, "repeated place in T");
    }
    let has_inf = seen.iter().any(Place::is_infinite);
    let mut finite: Vec<Polynomial> = seen.into_iter().filter_map(|p| p.poly().cloned()).collect();
    let bucket = |p: &Polynomial| match p.degree().unwrap_or(0) % 3 {
        0 => 0,
        2 => 1,
        _ => 2,
    };
    finite.sort_by(|a, b| bucket(a).cmp(&bucket(b)).then_with(|| a.cmp(b)));
    Ok((finite, has_inf))
}

/// Admissible sign vectors for the ordered places, lexicographic with
/// `+1 < -1`, first sign fixed to `+1`.
pub fn sign_vectors(ordered: &[Polynomial], has_inf: bool) -> Vec<Vec<i8>> {
    let n = ordered.len();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for i in 0u64..(1u64 << (n - 1)) {
        let mut eps = Vec::with_capacity(n);
        eps.push(1i8);
        for j in 1..n {
            let bit = (i >> (n - 1 - j)) & 1;
            eps.push(if bit == 0 { 1 } else { -1 });
        }
        let sum: i64 = ordered
            .iter()
            .zip(&eps)
            .filter(|(p, _)| p.degree().unwrap_or(0) % 3 != 0)
            .map(|(_, &e)| e as i64)
            .sum();
        if (sum.rem_euclid(3) == 0) != has_inf {
            out.push(eps);
        }
    }
    out
}

/// `prod P_i^{eps_i}`, with the exponent negated on places of degree
/// `2 mod 3`.
pub fn generator(k: &Field, ordered: &[Polynomial], eps: &[i8]) -> RationalFunction {
    let factors: Vec<(Polynomial, i64)> = ordered
        .iter()
        .zip(eps)
        .map(|(p, &e)| {
            let flip = if p.degree().unwrap_or(0) % 3 == 2 { -1 } else { 1 };
            (p.clone(), (e as i64) * flip)
        })
        .collect();
    crate::ratfunc::from_factors(k, &factors)
}

/// One model per `k-bar`-isomorphism class, totally ramified exactly over `T`.
pub fn enumerate_pure(k: &Field, places: &[Place]) -> Result<Vec<CubicModel>> {
    if k.characteristic() == 3 {
        bail!(InvalidInput, "characteristic 3");
    }
    if places.is_empty() {
        bail!(InvalidInput, "empty ramification locus");
    }
    for p in places {
        if let Some(poly) = p.poly() {
            if poly.field() != k {
                return Err(crate::Error::FieldMismatch);
            }
        }
    }
    let (ordered, has_inf) = order_places(places)?;
    sign_vectors(&ordered, has_inf)
        .iter()
        .map(|eps| CubicModel::pure(generator(k, &ordered, eps)))
        .collect()
}

/// Number of `k-bar`-classes of purely cubic covers totally ramified over `t`
/// places, `s` of them of degree divisible by three.
pub fn count_pure(s: i64, t: i64) -> Result<BigUint> {
    if s < 0 || t < 0 || s > t {
        bail!(InvalidInput, "need 0 <= s <= t, got s = {s}, t = {t}");
    }
    if t == 0 {
        return Ok(BigUint::zero());
    }
    if t == s {
        return Ok(BigUint::one() << (s - 1) as usize);
    }
    // (1/3) 2^s (2^{t-s-1} - (-1)^{t-s-1})
    let m = (t - s - 1) as usize;
    let p = BigUint::one() << m;
    let inner = if m % 2 == 0 { p - 1u32 } else { p + 1u32 };
    Ok((inner << s as usize) / 3u32)
}

/// `(E_k, F_k)`: sign tuples of length `k` with sum `= 0` and `!= 0` mod 3.
/// The closed form is checked against the recursion.
pub fn recursion_check(k: i64) -> Result<(BigUint, BigUint)> {
    if k < 1 {
        bail!(InvalidInput, "k must be at least 1");
    }
    let (e, f) = closed_form(k as usize);
    let (mut er, mut fr) = (BigUint::zero(), BigUint::from(2u32));
    for _ in 1..k {
        let next_f = &er * 2u32 + &fr;
        er = fr;
        fr = next_f;
    }
    if er != e || fr != f {
        bail!(VerificationFailed, "closed form and recursion disagree at k = {k}");
    }
    Ok((e, f))
}

fn closed_form(k: usize) -> (BigUint, BigUint) {
    // E = (2/3)(2^{k-1} - (-1)^{k-1}), F = (2/3)(2^k - (-1)^k)
    let a = BigUint::one() << (k - 1);
    let e = if (k - 1) % 2 == 0 { a - 1u32 } else { a + 1u32 };
    let b = BigUint::one() << k;
    let f = if k % 2 == 0 { b - 1u32 } else { b + 1u32 };
    (e * 2u32 / 3u32, f * 2u32 / 3u32)
}

/// Representatives of `k^* / (k^*)^3`, each the first of its coset in the
/// canonical element order.
pub fn cube_class_reps(k: &Field) -> Result<Vec<FieldElement>> {
    let q = match k.order_u64() {
        Some(q) => q,
        None => bail!(Unsupported, "cube classes are enumerated over finite fields only"),
    };
    if (q - 1) % 3 != 0 {
        return Ok(alloc::vec![k.one()]);
    }
    let mut reps: Vec<FieldElement> = Vec::new();
    for a in k.elements().skip(1) {
        if reps.iter().all(|r| !(&a * &r.inv().expect("nonzero")).is_cube()) {
            reps.push(a);
            if reps.len() == 3 {
                break;
            }
        }
    }
    Ok(reps)
}

/// Twists `y^3 = u beta` over a finite field, one per cube class.
pub fn twists_pure(model: &CubicModel) -> Result<Vec<CubicModel>> {
    let reps = cube_class_reps(model.field())?;
    twists_pure_with(model, &reps)
}

/// Twists by caller-supplied units (used over Q).
pub fn twists_pure_with(model: &CubicModel, units: &[FieldElement]) -> Result<Vec<CubicModel>> {
    let beta = match model {
        CubicModel::Pure { beta } => beta,
        CubicModel::Impure { .. } => bail!(InvalidInput, "twists_pure needs a pure model"),
    };
    units
        .iter()
        .map(|u| {
            if u.is_zero() {
                bail!(InvalidInput, "zero twist parameter");
            }
            CubicModel::pure(beta.scale(u))
        })
        .collect()
}

/// Bi-twist representatives of `y^3 = x (x - 1)`: `y^3 = c f` with `f` running
/// over `x (x - 1)`, `x` times an irreducible quadratic, an irreducible cubic.
pub fn bitwist_reps_deg3(k: &Field) -> Result<Vec<CubicModel>> {
    if !k.is_finite() || k.characteristic() == 3 {
        bail!(InvalidInput, "need a finite field of characteristic other than 3");
    }
    let x = Polynomial::x(k);
    let shapes = [
        &x * &Polynomial::linear(&k.one()),
        &x * &smallest_irreducible(k, 2),
        smallest_irreducible(k, 3),
    ];
    let reps = cube_class_reps(k)?;
    let mut out = Vec::new();
    for f in &shapes {
        for c in &reps {
            out.push(CubicModel::pure(RationalFunction::from_poly(&f.scale(c)))?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::irreducibles;
    use alloc::vec;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn small_loci() {
        let k = f(5);
        let x = Place::at(&k.zero());
        let x1 = Place::at(&k.one());
        let m = enumerate_pure(&k, &[x.clone(), Place::Infinity]).unwrap();
        assert_eq!(m, vec![CubicModel::pure(RationalFunction::x(&k)).unwrap()]);
        let m = enumerate_pure(&k, &[x.clone(), x1, Place::Infinity]).unwrap();
        let beta = RationalFunction::from_poly(&Polynomial::from_ints(&k, &[0, -1, 1]));
        assert_eq!(m, vec![CubicModel::pure(beta).unwrap()]);
        assert!(enumerate_pure(&k, &[x]).unwrap().is_empty());
    }

    #[test]
    fn counts() {
        assert_eq!(count_pure(0, 2).unwrap(), BigUint::from(1u32));
        assert_eq!(count_pure(0, 4).unwrap(), BigUint::from(3u32));
        assert_eq!(count_pure(2, 6).unwrap(), BigUint::from(12u32));
        assert_eq!(count_pure(3, 3).unwrap(), BigUint::from(4u32));
        assert!(count_pure(-1, 2).is_err());
    }

    // Brute force over unnormalised exponent vectors e in {1,2}^t with
    // sum e_i d_i = 0 mod 3 (degrees include infinity as 1 with the total
    // forced), halved for the global inversion.
    fn brute(degs: &[usize], with_inf: bool) -> u64 {
        let n = degs.len();
        let mut c = 0u64;
        for mask in 0u64..(1 << n) {
            let d: usize = (0..n).map(|i| degs[i] * if mask >> i & 1 == 1 { 2 } else { 1 }).sum();
            if (d % 3 == 0) != with_inf {
                c += 1;
            }
        }
        c / 2
    }

    #[test]
    fn count_matches_brute_force() {
        for t in 1..=12i64 {
            for s in 0..=t {
                // finite-only loci: s places of degree 3, the rest degree 1 or 2
                let mut degs = vec![3usize; s as usize];
                for i in 0..(t - s) {
                    degs.push(if i % 2 == 0 { 1 } else { 2 });
                }
                assert_eq!(count_pure(s, t).unwrap(), BigUint::from(brute(&degs, false)), "s={s} t={t}");
                // with infinity among the t places
                if t > s {
                    let mut degs = vec![3usize; s as usize];
                    for i in 0..(t - s - 1) {
                        degs.push(if i % 2 == 0 { 2 } else { 1 });
                    }
                    assert_eq!(count_pure(s, t).unwrap(), BigUint::from(brute(&degs, true)), "inf s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn enumeration_length_and_ramification() {
        let k = f(7);
        let mut places: Vec<Place> = irreducibles(&k, 1).take(3).map(Place::Finite).collect();
        places.extend(irreducibles(&k, 2).take(2).map(Place::Finite));
        places.extend(irreducibles(&k, 3).take(1).map(Place::Finite));
        for with_inf in [false, true] {
            let mut t = places.clone();
            if with_inf {
                t.push(Place::Infinity);
            }
            let models = enumerate_pure(&k, &t).unwrap();
            assert_eq!(BigUint::from(models.len()), count_pure(1, t.len() as i64).unwrap());
            for m in &models {
                let CubicModel::Pure { beta } = m else { panic!() };
                let d = crate::function_field::divisor_of(beta).unwrap();
                let mut ram: Vec<Place> =
                    d.terms().filter(|(_, v)| *v % 3 != 0).map(|(p, _)| p.clone()).collect();
                ram.sort();
                let mut want = t.clone();
                want.sort();
                assert_eq!(ram, want);
            }
        }
    }

    #[test]
    fn recursion() {
        let v = |a: u32, b: u32| (BigUint::from(a), BigUint::from(b));
        assert_eq!(recursion_check(1).unwrap(), v(0, 2));
        assert_eq!(recursion_check(2).unwrap(), v(2, 2));
        assert_eq!(recursion_check(5).unwrap(), v(10, 22));
        for k in 1..40 {
            let (e, f) = recursion_check(k).unwrap();
            assert_eq!(e + f, BigUint::one() << k as usize);
        }
        assert!(recursion_check(0).is_err());
    }

    #[test]
    fn twists() {
        let m = |k: &Field| CubicModel::pure(RationalFunction::x(k)).unwrap();
        let k7 = f(7);
        let us: Vec<u64> = cube_class_reps(&k7).unwrap().iter().map(|u| u.as_u64().unwrap()).collect();
        assert_eq!(us, vec![1, 2, 3]);
        assert_eq!(twists_pure(&m(&k7)).unwrap().len(), 3);
        assert_eq!(twists_pure(&m(&f(5))).unwrap().len(), 1);
        assert_eq!(twists_pure(&m(&f(13))).unwrap().len(), 3);
        let k4 = Field::finite(4).unwrap();
        assert_eq!(twists_pure(&m(&k4)).unwrap().len(), 3);
    }

    #[test]
    fn bitwist_counts() {
        assert_eq!(bitwist_reps_deg3(&f(7)).unwrap().len(), 9);
        assert_eq!(bitwist_reps_deg3(&f(5)).unwrap().len(), 3);
        assert_eq!(bitwist_reps_deg3(&f(2)).unwrap().len(), 3);
    }
}
