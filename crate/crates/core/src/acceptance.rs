//! Acceptance checks, shared by the `selftest` command and the acceptance
//! test target. Each check returns a short detail line or a named failure;
//! timing is left to the caller.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::analyzer::{analyze, purely_cubic_closure};
use crate::bitwist::{class_count, enumerate_classes, family_member, FamilyId, FamilyTag};
use crate::cubic::CubicModel;
use crate::descent::{construct, enumerate_descents, random_problem, serre_count, DescentCase, DescentProblem};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::function_field::{divisor_of, Place};
use crate::parshin::explicit::{genus1_identities_generic, weierstrass_identity_holds};
use crate::parshin::{parshin_cover, AffinePoint, HyperellipticModel};
use crate::poly::Polynomial;
use crate::pure_cubic::{count_pure, recursion_check};
use crate::quadratic::QuadraticModel;
use crate::ratfunc::RationalFunction;

/// Seed for every sampled check.
pub const SEED: u64 = 0x5eed_c0b1;

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    /// Wall-clock budget in milliseconds, where one is pinned.
    pub limit_ms: Option<u64>,
    pub check: fn() -> Result<String>,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "pure-cubic count", limit_ms: Some(1_000), check: pure_count },
        Criterion { id: 2, name: "sign-sum recursion", limit_ms: None, check: recursion },
        Criterion { id: 3, name: "descent round trip", limit_ms: Some(30_000), check: descent_round_trip },
        Criterion { id: 4, name: "count of descents", limit_ms: None, check: descent_counts },
        Criterion { id: 5, name: "bi-twist table", limit_ms: None, check: bitwist_table },
        Criterion { id: 6, name: "quadratic-place cross-check", limit_ms: None, check: quadratic_place_cross_check },
        Criterion { id: 7, name: "Parshin example over Q", limit_ms: Some(10_000), check: parshin_example },
        Criterion { id: 8, name: "symbolic identities", limit_ms: None, check: symbolic_identities },
        Criterion { id: 9, name: "property suite", limit_ms: None, check: property_suite },
    ]
}

fn fail<T>(msg: String) -> Result<T> {
    Err(Error::VerificationFailed(msg))
}

/// Sign vectors on places of the given degrees with `sum eps_i deg_i = 0`
/// mod 3 (or `!= 0` when infinity is also ramified), up to global negation.
fn brute_pure_count(degs: &[usize], with_inf: bool) -> u64 {
    let n = degs.len();
    let mut c = 0u64;
    for mask in 0u32..(1 << n) {
        let d: usize = degs.iter().enumerate().map(|(i, &g)| if mask >> i & 1 == 1 { 2 * g } else { g }).sum();
        if (d % 3 == 0) != with_inf {
            c += 1;
        }
    }
    c / 2
}

fn pure_count() -> Result<String> {
    let mut checked = 0;
    for t in 1..=12i64 {
        for s in 0..=t {
            let want = count_pure(s, t)?;
            let closed = if s == t {
                BigUint::from(1u32) << (s - 1) as usize
            } else {
                let m = t - s - 1;
                let sign: i64 = if m % 2 == 0 { 1 } else { -1 };
                let v: BigInt = (BigInt::from(1) << m as usize) - sign;
                ((v << s as usize) / BigInt::from(3)).to_biguint().expect("positive")
            };
            let mut degs = vec![3usize; s as usize];
            degs.extend((0..t - s).map(|i| if i % 2 == 0 { 1 } else { 2 }));
            let brute = BigUint::from(brute_pure_count(&degs, false));
            if brute != want || closed != want {
                return fail(format!("s = {s}, t = {t}: brute {brute}, formula {closed}, library {want}"));
            }
            if t > s {
                // infinity as one of the places of degree prime to 3
                let mut degs = vec![3usize; s as usize];
                degs.extend((0..t - s - 1).map(|i| if i % 2 == 0 { 2 } else { 1 }));
                let brute = BigUint::from(brute_pure_count(&degs, true));
                if brute != want {
                    return fail(format!("s = {s}, t = {t} with infinity: brute {brute}, library {want}"));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (s, t) pairs"))
}

fn recursion() -> Result<String> {
    let (mut e, mut f) = (BigUint::from(0u32), BigUint::from(2u32));
    for k in 1..=30i64 {
        if k > 1 {
            let nf = &e * 2u32 + &f;
            e = f;
            f = nf;
        }
        let sign = |n: i64| BigInt::from(if n % 2 == 0 { 1 } else { -1 });
        let three = BigInt::from(3);
        let ce = (BigInt::from(2) * ((BigInt::from(1) << (k - 1) as usize) - sign(k - 1)) / &three).to_biguint();
        let cf = (BigInt::from(2) * ((BigInt::from(1) << k as usize) - sign(k)) / &three).to_biguint();
        if ce.as_ref() != Some(&e) || cf.as_ref() != Some(&f) || recursion_check(k)? != (e.clone(), f.clone()) {
            return fail(format!("k = {k}: iteration ({e}, {f})"));
        }
    }
    Ok(String::from("k = 1..30"))
}

fn pole_orders(alpha: &RationalFunction) -> Result<Vec<i64>> {
    Ok(divisor_of(alpha)?.terms().filter(|(_, v)| **v < 0).map(|(_, v)| *v).collect())
}

fn descent_round_trip() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut n = 0;
    for p in [5u64, 7, 11, 13] {
        let k = Field::prime(p)?;
        for _ in 0..100 {
            let pb = random_problem(&k, &mut rng, 4)?;
            let r = construct(&pb)?;
            let rep = analyze(&r.model)?;
            let mut t = pb.places.clone();
            t.sort();
            if rep.total != t {
                return fail(format!("F{p}: total {:?} != T {:?}", rep.total, t));
            }
            if rep.partial != pb.closure.branch_places()? {
                return fail(format!("F{p}: partial ramification differs from the closure's branch locus"));
            }
            if purely_cubic_closure(&r.model)? != pb.closure.class()? {
                return fail(format!("F{p}: purely cubic closure differs"));
            }
            let poles = pole_orders(r.alpha())?;
            let doubles = poles.iter().filter(|v| **v == -2).count();
            let ok = poles.iter().all(|v| *v >= -2) && doubles == usize::from(r.case == DescentCase::Case2b);
            if !ok {
                return fail(format!("F{p}: pole orders {poles:?} in case {}", r.case.tag()));
            }
            n += 1;
        }
    }
    Ok(format!("{n} problems over F5, F7, F11, F13"))
}

fn descent_counts() -> Result<String> {
    let k = Field::prime(11)?;
    let closure = QuadraticModel::kummer(Polynomial::x(&k))?;
    let split: Vec<Place> = k.elements().skip(1).filter(|a| a.is_square()).map(|a| Place::at(&a)).collect();
    let inert = Place::at(&k.smallest_nonsquare().expect("odd"));
    for t in 1..=5 {
        let got = enumerate_descents(&closure, &split[..t])?.len();
        if got != 1 << (t - 1) {
            return fail(format!("t = {t}: {got} descents"));
        }
        let mut bad = split[..t - 1].to_vec();
        bad.push(inert.clone());
        let got = enumerate_descents(&closure, &bad)?.len();
        if got != 0 {
            return fail(format!("t = {t} with an inert place: {got} descents"));
        }
    }
    let int = |n: u64| BigRational::from_integer(BigInt::from(n));
    for t in 1..=8i64 {
        if serre_count(2, t)? != int(1 << (t - 1)) {
            return fail(format!("serre_count(2, {t})"));
        }
        let pure: BigInt = count_pure(0, t)?.into();
        if serre_count(0, t)? != BigRational::from_integer(pure) {
            return fail(format!("serre_count(0, {t}) != count_pure(0, {t})"));
        }
    }
    Ok(String::from("t <= 5 over F11; character sums t <= 8"))
}

fn expected_count(tag: FamilyTag, q: u64) -> u64 {
    match tag {
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
    }
}

fn bitwist_table() -> Result<String> {
    let odd = [FamilyTag::R33, FamilyTag::R333, FamilyTag::R322, FamilyTag::R3322];
    let even = [FamilyTag::R33, FamilyTag::R33Char2AS, FamilyTag::R333, FamilyTag::R32Char2, FamilyTag::R332Char2];
    let mut rows = 0;
    for (qs, tags) in [(&[5u64, 7][..], &odd[..]), (&[2u64, 4][..], &even[..])] {
        for &q in qs {
            let k = Field::finite(q)?;
            for &tag in tags {
                let models = enumerate_classes(tag, &k)?;
                let want = expected_count(tag, q);
                if models.len() as u64 != want || class_count(tag, &k)? != want {
                    return fail(format!("{tag} over F{q}: {} classes, expected {want}", models.len()));
                }
                let (dt, ds, g) = tag.row();
                for m in &models {
                    let r = analyze(m)?;
                    let deg = |v: &[Place]| v.iter().map(Place::degree).sum::<usize>();
                    if (deg(&r.total), deg(&r.partial), r.genus) != (dt, ds, g) {
                        return fail(format!("{tag} over F{q}: {m} has row {:?}", (deg(&r.total), deg(&r.partial), r.genus)));
                    }
                }
                rows += 1;
            }
        }
    }
    Ok(format!("{rows} (family, q) rows"))
}

fn quadratic_place_cross_check() -> Result<String> {
    let k = Field::prime(5)?;
    let closure = QuadraticModel::kummer(Polynomial::constant(&k.from_i64(2)))?;
    let t = vec![Place::Finite(Polynomial::from_ints(&k, &[2, 0, 1]))];
    let r = construct(&DescentProblem::new(closure, t, &[1])?)?;
    let CubicModel::Impure { alpha, .. } = family_member(&FamilyId::R33 { a: k.zero(), b: k.from_i64(2) })? else {
        return fail(String::from("family member is pure"));
    };
    if r.alpha() != &alpha && r.alpha() != &-&alpha {
        return fail(format!("descent gives {}, family gives {alpha}", r.alpha()));
    }
    Ok(format!("alpha = {}", r.alpha()))
}

fn parshin_example() -> Result<String> {
    let k = Field::rationals();
    let q = |n: i64, d: i64| -> Result<FieldElement> { k.from_i64(n).checked_div(&k.from_i64(d)) };
    let p = |c: &[i64]| Polynomial::from_ints(&k, c);
    let w = HyperellipticModel::etale(&[k.from_i64(-5), k.zero(), k.from_i64(4), k.from_i64(4)])?;
    let qt = AffinePoint::new(k.one(), k.from_i64(2));
    let c = parshin_cover(&w, &qt)?;
    if (c.e.u.clone(), c.e.v.clone()) != (p(&[-1, 0, 1]), p(&[2])) {
        return fail(format!("E = {}", c.e));
    }
    let u3 = Polynomial::new(&k, vec![-&q(49, 9)?, k.zero(), k.one()]);
    if (c.three_e.u.clone(), c.three_e.v.clone()) != (u3, Polynomial::constant(&q(3278, 81)?)) {
        return fail(format!("3E = {}", c.three_e));
    }
    let allowed = [AffinePoint::new(q(7, 3)?, q(-3278, 81)?), AffinePoint::new(q(-7, 3)?, q(3278, 81)?)];
    if !allowed.contains(&c.p_tilde) {
        return fail(format!("P~ = {}", c.p_tilde));
    }
    if c.branch_point != AffinePoint::new(q(49, 9)?, q(-22946, 243)?) {
        return fail(format!("P = {}", c.branch_point));
    }
    if c.lambda != k.from_i64(5) {
        return fail(format!("lambda = {}", c.lambda));
    }
    let alpha = (&c.alpha.a, &c.alpha.b, &c.alpha.c);
    let want = (&p(&[1050, 2680, -6860, 1320, 210]), &p(&[-480, -320]), &p(&[49, -156, 174, -76, 9]));
    if alpha != want {
        return fail(format!("alpha = {}", c.alpha));
    }
    Ok(format!("{}", c.equation()))
}

fn symbolic_identities() -> Result<String> {
    genus1_identities_generic()?;
    if !weierstrass_identity_holds() {
        return fail(String::from("(z^3 - 3cz)^2 - 4c^3 = (z^2 - 4c)(z^2 - c)^2"));
    }
    Ok(String::from("genus-one maps over Q(l); Weierstrass identity over Q(c)"))
}

fn random_poly<R: RngCore>(k: &Field, rng: &mut R, max_deg: usize) -> Polynomial {
    let d = (rng.next_u32() as usize) % (max_deg + 1);
    let mut c: Vec<FieldElement> = (0..d).map(|_| k.random_element(rng)).collect();
    c.push(loop {
        let a = k.random_element(rng);
        if !a.is_zero() {
            break a;
        }
    });
    Polynomial::new(k, c)
}

fn random_function<R: RngCore>(k: &Field, rng: &mut R) -> Result<RationalFunction> {
    RationalFunction::new(random_poly(k, rng, 4), random_poly(k, rng, 4))
}

fn property_suite() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    for p in [5u64, 7, 13] {
        let k = Field::prime(p)?;
        for _ in 0..30 {
            let (f, g) = (random_function(&k, &mut rng)?, random_function(&k, &mut rng)?);
            let (df, dg) = (divisor_of(&f)?, divisor_of(&g)?);
            if df.degree() != 0 || dg.degree() != 0 {
                return fail(format!("principal divisor of {f} has degree {}", df.degree()));
            }
            if divisor_of(&(&f * &g))? != df.plus(&dg) {
                return fail(format!("div({f} * {g}) is not additive"));
            }
        }
    }

    let mut fields = 0;
    for q in [2u64, 4, 5, 7, 8, 11, 13, 16, 17, 19, 23, 25, 29, 31, 32, 37, 41, 43, 47, 49] {
        let k = Field::finite(q)?;
        let squares: Vec<FieldElement> = k.elements().map(|a| a.square()).collect();
        for a in k.elements() {
            if a.is_square() != squares.contains(&a) {
                return fail(format!("Euler criterion disagrees at {a} in F{q}"));
            }
            if let Some(r) = a.sqrt() {
                if r.square() != a {
                    return fail(format!("sqrt({a}) in F{q}"));
                }
            }
        }
        fields += 1;
    }

    let mut descents = 0;
    for p in [5u64, 7, 11, 13] {
        let k = Field::prime(p)?;
        for _ in 0..20 {
            let pb = random_problem(&k, &mut rng, 4)?;
            for r in enumerate_descents(&pb.closure, &pb.places)? {
                let norm = r.f.norm();
                if norm.as_constant().as_ref() != Some(&r.lambda) {
                    return fail(format!("F{p}: f sigma(f) = {norm} is not the constant {}", r.lambda));
                }
                descents += 1;
            }
        }
    }

    let mut samples = 0;
    for p in [11u64, 13] {
        let k = Field::prime(p)?;
        let e = |n: i64| k.from_i64(n);
        let w = HyperellipticModel::etale(&[e(-5), e(0), e(4), e(4)])?;
        for _ in 0..3 {
            let r = loop {
                let x = k.random_element(&mut rng);
                if let Some(y) = w.rhs().eval(&x).sqrt() {
                    break AffinePoint::new(x, y);
                }
            };
            let ir = AffinePoint::new(-&r.x, -&r.y);
            let d = w.sub(&w.point_class(&r)?, &w.point_class(&ir)?)?;
            let id = w.involution(&d)?;
            for m in 0..=8 {
                let dm = w.scalar(&d, m)?;
                if w.scalar(&id, m)? != w.involution(&dm)? {
                    return fail(format!("F{p}: i-equivariance fails at m = {m}"));
                }
                for n in 0..=8 {
                    if w.scalar(&d, m + n)? != w.add(&dm, &w.scalar(&d, n)?)? {
                        return fail(format!("F{p}: ({m} + {n}) D != {m} D + {n} D"));
                    }
                    samples += 1;
                }
            }
        }
    }
    Ok(format!("{fields} fields, {descents} descents, {samples} group-law samples"))
}
