//! Factorization: squarefree decomposition, distinct-degree and equal-degree
//! splitting over finite fields; rational-root peeling and irreducibility
//! certificates over Q.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::error::{bail, Error, Result};
use crate::field::{is_prime_u64, Field, FieldElement, FieldKind};
use crate::poly::Polynomial;

/// Seed used when callers do not supply one. Factor lists are sorted, so the
/// seed never changes a result, only the path taken to it.
pub const DEFAULT_SEED: u64 = 0x6375_6269_6361;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    /// Monic irreducible factors with multiplicities, in canonical order.
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::constant(&self.unit);
        for (g, e) in &self.factors {
            acc = &acc * &g.pow(*e as u64);
        }
        acc
    }
}

pub fn factor(f: &Polynomial) -> Result<Factorization> {
    factor_seeded(f, DEFAULT_SEED)
}

pub fn factor_seeded(f: &Polynomial, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        bail!(InvalidInput, "cannot factor the zero polynomial");
    }
    let k = f.field();
    let unit = f.leading();
    let mut out: Vec<(Polynomial, u32)> = Vec::new();
    if f.degree() == Some(0) {
        return Ok(Factorization { unit, factors: out });
    }
    if k.is_finite() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (g, m) in squarefree_decomposition(f)? {
            for (h, d) in distinct_degree(&g) {
                for piece in equal_degree(&h, d, &mut rng) {
                    out.push((piece, m));
                }
            }
        }
    } else {
        for (g, m) in squarefree_decomposition(f)? {
            for piece in factor_squarefree_rational(&g)? {
                out.push((piece, m));
            }
        }
    }
    out.sort();
    Ok(Factorization { unit, factors: out })
}

/// Monic squarefree factors `g_i` with `f = lc * prod g_i^{m_i}`, merged by
/// multiplicity.
pub fn squarefree_decomposition(f: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    if f.is_zero() {
        bail!(InvalidInput, "zero polynomial");
    }
    let mut out: Vec<(Polynomial, u32)> = Vec::new();
    sqf_into(&f.monic(), 1, &mut out)?;
    // merge equal multiplicities
    out.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    let mut merged: Vec<(Polynomial, u32)> = Vec::new();
    for (g, m) in out {
        match merged.last_mut() {
            Some((h, n)) if *n == m => *h = &*h * &g,
            _ => merged.push((g, m)),
        }
    }
    Ok(merged)
}

fn sqf_into(f: &Polynomial, scale: u32, out: &mut Vec<(Polynomial, u32)>) -> Result<()> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(());
    }
    let k = f.field();
    let d = f.derivative();
    let mut c = f.gcd(&d)?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y)?;
        if !z.is_one() {
            out.push((z, i * scale));
        }
        i += 1;
        c = c.exact_div(&y)?;
        w = y;
    }
    if !c.is_one() {
        let p = k.characteristic();
        if p == 0 {
            bail!(InvalidInput, "unexpected repeated part over Q");
        }
        let root = pth_root(&c)?;
        sqf_into(&root, scale * p as u32, out)?;
    }
    Ok(())
}

/// `g` with `g^p = f`, for `f` whose derivative vanishes.
fn pth_root(f: &Polynomial) -> Result<Polynomial> {
    let k = f.field();
    let p = k.characteristic() as usize;
    let q = k.order().ok_or_else(|| Error::Unsupported("p-th root over Q".into()))?;
    let e = q / BigUint::from(p as u64);
    let mut c = Vec::new();
    for (i, a) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            c.push(a.pow(&e));
        } else if !a.is_zero() {
            bail!(InvalidInput, "not a p-th power");
        }
    }
    Ok(Polynomial::new(k, c))
}

/// Splits a monic squarefree `f` into products of irreducibles of equal degree.
pub fn distinct_degree(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let k = f.field();
    let q = k.order().expect("finite field");
    let x = Polynomial::x(k);
    let mut rest = f.monic();
    let mut h = x.rem(&rest);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&q, &rest);
        let g = (&h - &x).gcd(&rest).expect("same field");
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("divides");
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let n = rest.degree().unwrap();
        out.push((rest, n));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
pub fn equal_degree(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return vec![f.monic()];
    }
    let k = f.field();
    let q = k.order().expect("finite field");
    let qd = q.pow(d as u32);
    let char2 = k.characteristic() == 2;
    loop {
        let a = Polynomial::new(k, (0..n).map(|_| k.random_element(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g0 = a.gcd(f).expect("same field");
        let b = if !g0.is_one() {
            None
        } else if char2 {
            let bits = qd.bits() - 1;
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..bits {
                t = t.mul_mod(&t, f);
                acc = &acc + &t;
            }
            Some(acc)
        } else {
            let e = (&qd - 1u32) >> 1;
            Some(&a.pow_mod(&e, f) - &Polynomial::one(k))
        };
        let g = match b {
            None => g0,
            Some(b) => b.gcd(f).expect("same field"),
        };
        if g.degree().unwrap_or(0) > 0 && g.degree() < f.degree() {
            let h = f.exact_div(&g).expect("divides");
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

pub fn is_irreducible(f: &Polynomial) -> Result<bool> {
    let n = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    let k = f.field();
    if k.is_finite() {
        let m = f.monic();
        if !m.is_squarefree() {
            return Ok(false);
        }
        let parts = distinct_degree(&m);
        return Ok(parts.len() == 1 && parts[0].1 == n);
    }
    rational_irreducible(f)
}

/// Deterministic irreducibility over Q: rational roots settle degrees up to 3;
/// higher degrees need a prime modulo which `f` stays irreducible.
fn rational_irreducible(f: &Polynomial) -> Result<bool> {
    let n = f.degree().unwrap_or(0);
    if !f.is_squarefree() {
        return Ok(false);
    }
    if !rational_roots(f)?.is_empty() {
        return Ok(false);
    }
    if n <= 3 {
        return Ok(true);
    }
    let ints = integer_coefficients(f);
    let lead = ints.last().cloned().unwrap_or_default();
    for p in 5u64..400 {
        if !is_prime_u64(p) || (&lead % BigInt::from(p)).is_zero() {
            continue;
        }
        let k = Field::prime_unchecked(p);
        let fp = Polynomial::new(&k, ints.iter().map(|c| k.from_bigint(c)).collect());
        if fp.degree() != Some(n) || !fp.monic().is_squarefree() {
            continue;
        }
        if is_irreducible(&fp)? {
            return Ok(true);
        }
    }
    bail!(Unsupported, "could not certify irreducibility of {f} over Q")
}

/// Primitive integer coefficient vector proportional to `f` (over Q).
pub fn integer_coefficients(f: &Polynomial) -> Vec<BigInt> {
    let rats: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| c.as_rational().cloned().unwrap_or_default())
        .collect();
    let mut l = BigInt::one();
    for r in &rats {
        l = l.lcm(r.denom());
    }
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| (r * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for a in &ints {
        g = g.gcd(a);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|a| a / &g).collect()
}

const TRIAL_LIMIT: u64 = 1_000_000;

fn small_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let v = n
        .to_u64()
        .filter(|&v| v <= TRIAL_LIMIT * TRIAL_LIMIT)
        .ok_or_else(|| Error::Unsupported("integer too large for divisor search".into()))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

/// Rational roots of a polynomial over Q, sorted.
pub fn rational_roots(f: &Polynomial) -> Result<Vec<FieldElement>> {
    let k = f.field();
    let ints = integer_coefficients(f);
    let mut out = Vec::new();
    let mut start = 0;
    while start < ints.len() && ints[start].is_zero() {
        start += 1;
    }
    if start > 0 {
        out.push(k.zero());
    }
    let trimmed = &ints[start..];
    if trimmed.len() >= 2 {
        let a0 = &trimmed[0];
        let an = trimmed.last().unwrap();
        for r in small_divisors(a0)? {
            for s in small_divisors(an)? {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(&r * sign, s.clone());
                    let x = k.from_rational(&cand)?;
                    if f.eval(&x).is_zero() && !out.contains(&x) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn factor_squarefree_rational(f: &Polynomial) -> Result<Vec<Polynomial>> {
    if !matches!(f.field().kind(), FieldKind::Rationals) {
        return factor_by_quadratic_formula(f);
    }
    let mut rest = f.monic();
    let mut out = Vec::new();
    for r in rational_roots(&rest)? {
        let lin = Polynomial::linear(&r);
        rest = rest.exact_div(&lin)?;
        out.push(lin);
    }
    if rest.degree().unwrap_or(0) > 0 {
        if rest.degree() == Some(2) || rest.degree() == Some(3) || rational_irreducible(&rest)? {
            out.push(rest);
        } else {
            bail!(Unsupported, "cannot factor {rest} over Q");
        }
    }
    Ok(out)
}

/// Over quadratic extensions of Q only degrees up to two are handled.
fn factor_by_quadratic_formula(f: &Polynomial) -> Result<Vec<Polynomial>> {
    let f = f.monic();
    match f.degree() {
        Some(1) => Ok(vec![f]),
        Some(2) => {
            let k = f.field();
            let b = f.coeff(1);
            let c = f.coeff(0);
            let disc = &(&b * &b) - &(&c * &k.from_i64(4));
            match disc.sqrt() {
                Some(r) => {
                    let half = k.from_i64(2).inv()?;
                    let mut out = vec![
                        Polynomial::linear(&(&(&(-&b) + &r) * &half)),
                        Polynomial::linear(&(&(&(-&b) - &r) * &half)),
                    ];
                    out.sort();
                    Ok(out)
                }
                None => Ok(vec![f]),
            }
        }
        _ => bail!(Unsupported, "factoring {f} over {}", f.field()),
    }
}

/// All monic polynomials of degree `d` over a finite field, canonical order.
pub fn monic_polynomials(k: &Field, d: usize) -> impl Iterator<Item = Polynomial> + '_ {
    let q = k.order_u64().expect("finite field");
    let total = q.checked_pow(d as u32).expect("enumeration too large");
    (0..total).map(move |mut i| {
        let mut c = vec![k.zero(); d + 1];
        // canonical order compares the top coefficients first
        for j in 0..d {
            c[j] = k.element_from_index(i % q);
            i /= q;
        }
        c[d] = k.one();
        Polynomial::new(k, c)
    })
}

/// Monic irreducibles of degree `d`, canonical order.
pub fn irreducibles(k: &Field, d: usize) -> impl Iterator<Item = Polynomial> + '_ {
    monic_polynomials(k, d).filter(|f| is_irreducible(f).unwrap_or(false))
}

pub fn smallest_irreducible(k: &Field, d: usize) -> Polynomial {
    irreducibles(k, d).next().expect("irreducibles exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    /// Irreducible iff no monic factor of degree <= n/2 divides it.
    fn brute_irreducible(f: &Polynomial) -> bool {
        let n = f.degree().unwrap();
        for d in 1..=n / 2 {
            for g in monic_polynomials(f.field(), d) {
                if g.divides(f) {
                    return false;
                }
            }
        }
        n >= 1
    }

    #[test]
    fn monic_enumeration_is_sorted() {
        let k = Field::prime(5).unwrap();
        let v: Vec<_> = monic_polynomials(&k, 2).collect();
        assert_eq!(v.len(), 25);
        for w in v.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(smallest_irreducible(&k, 2), Polynomial::from_ints(&k, &[2, 0, 1]));
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for p in [2u64, 5, 7] {
            let k = Field::prime(p).unwrap();
            for d in 1..=4 {
                for f in monic_polynomials(&k, d).take(400) {
                    assert_eq!(is_irreducible(&f).unwrap(), brute_irreducible(&f), "{f}");
                }
            }
        }
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree d: (1/d) sum mu(d/e) q^e
        let k = Field::prime(5).unwrap();
        let counts: Vec<usize> = (1..=3).map(|d| irreducibles(&k, d).count()).collect();
        assert_eq!(counts, vec![5, 10, 40]);
        let f4 = Field::finite(4).unwrap();
        let counts: Vec<usize> = (1..=2).map(|d| irreducibles(&f4, d).count()).collect();
        assert_eq!(counts, vec![4, 6]);
    }

    #[test]
    fn factorization_round_trips() {
        for q in [2u64, 4, 5, 7, 13, 25] {
            let k = Field::finite(q).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(q);
            for _ in 0..30 {
                let n = 1 + (rand_core::RngCore::next_u32(&mut rng) % 9) as usize;
                let mut c: Vec<_> = (0..n).map(|_| k.random_element(&mut rng)).collect();
                c.push(k.from_i64(3));
                let f = Polynomial::new(&k, c);
                if f.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let fac = factor(&f).unwrap();
                assert_eq!(fac.expand(), f);
                for (g, _) in &fac.factors {
                    assert!(g.is_monic());
                    assert!(is_irreducible(g).unwrap());
                }
            }
        }
    }

    #[test]
    fn factor_detects_high_multiplicity() {
        let k = Field::prime(2).unwrap();
        let a = Polynomial::from_ints(&k, &[1, 1]);
        let b = Polynomial::from_ints(&k, &[1, 1, 1]);
        let f = &a.pow(4) * &b.pow(3);
        let fac = factor(&f).unwrap();
        let m: BTreeMap<_, _> = fac.factors.into_iter().collect();
        assert_eq!(m.get(&a), Some(&4));
        assert_eq!(m.get(&b), Some(&3));
    }

    #[test]
    fn seed_does_not_change_result() {
        let k = Field::prime(13).unwrap();
        let f = Polynomial::from_ints(&k, &[1, 0, 0, 0, 0, 0, 0, 0, -1]);
        assert_eq!(factor_seeded(&f, 1).unwrap(), factor_seeded(&f, 99).unwrap());
    }

    #[test]
    fn rational_factoring() {
        let q = Field::rationals();
        // (x - 1/2)(x + 3)(x^2 + 1)
        let f = &(&Polynomial::from_ints(&q, &[-1, 2]) * &Polynomial::from_ints(&q, &[3, 1]))
            * &Polynomial::from_ints(&q, &[1, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 3);
        assert_eq!(fac.expand(), f);
        assert!(is_irreducible(&Polynomial::from_ints(&q, &[-2, 0, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&Polynomial::from_ints(&q, &[-4, 0, 1])).unwrap());
    }
}
