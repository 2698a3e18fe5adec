//! Divisor class arithmetic on hyperelliptic curves `v^2 = F(u)` with `F`
//! monic of even degree `2g + 2`, so both points at infinity are rational.
//!
//! A class is stored as `div(a, b) + n_plus inf+ + n_minus inf- - D`, where
//! `D = ceil(g/2) inf+ + floor(g/2) inf-`, `deg a + n_plus + n_minus = g` and
//! `(a, b)` is a semi-reduced Mumford pair. This representative is unique.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{bail, Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    pub fn new(x: FieldElement, y: FieldElement) -> AffinePoint {
        AffinePoint { x, y }
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticModel {
    f: Polynomial,
    genus: usize,
    // polynomial part of sqrt(F) at inf+
    vplus: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MumfordClass {
    pub u: Polynomial,
    pub v: Polynomial,
    pub n_plus: usize,
    pub n_minus: usize,
}

impl fmt::Display for MumfordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.u, self.v, self.n_plus, self.n_minus)
    }
}

// Unreduced class: div(u, v) + n inf+ + m inf- - D.
struct State {
    u: Polynomial,
    v: Polynomial,
    n: i64,
    m: i64,
}

impl HyperellipticModel {
    pub fn new(f: Polynomial) -> Result<HyperellipticModel> {
        let k = f.field().clone();
        if k.characteristic() == 2 {
            bail!(Unsupported, "hyperelliptic models in characteristic 2");
        }
        let d = f.degree().unwrap_or(0);
        if d < 4 || d % 2 == 1 {
            bail!(InvalidInput, "need even degree at least 4, got {d}");
        }
        if !f.is_monic() {
            bail!(InvalidInput, "right-hand side must be monic");
        }
        if !f.is_squarefree() {
            bail!(InvalidInput, "right-hand side {f} is not squarefree");
        }
        let genus = d / 2 - 1;
        let vplus = sqrt_polynomial_part(&f, genus + 1)?;
        Ok(HyperellipticModel { f, genus, vplus })
    }

    /// `v^2 = u^8 + a3 u^6 + a2 u^4 + a1 u^2 + a0`, with fixed-point-free
    /// involution `(u, v) -> (-u, -v)`.
    pub fn etale(a: &[FieldElement; 4]) -> Result<HyperellipticModel> {
        let k = a[0].field().clone();
        if a[0].is_zero() {
            bail!(InvalidInput, "a0 = 0 gives fixed points of the involution");
        }
        let z = k.zero();
        let c = alloc::vec![
            a[0].clone(), z.clone(), a[1].clone(), z.clone(), a[2].clone(), z.clone(), a[3].clone(), z, k.one()
        ];
        HyperellipticModel::new(Polynomial::new(&k, c))
    }

    pub fn field(&self) -> &Field {
        self.f.field()
    }

    pub fn rhs(&self) -> &Polynomial {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_even(&self) -> bool {
        self.f.coeffs().iter().enumerate().all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// Right-hand side `x G(x)` of the quotient by `(u, v) -> (-u, -v)`,
    /// where `F(u) = G(u^2)`.
    pub fn quotient_rhs(&self) -> Result<Polynomial> {
        if !self.is_even() {
            bail!(InvalidInput, "model has no involution (u, v) -> (-u, -v)");
        }
        let k = self.field();
        let mut c: Vec<FieldElement> = alloc::vec![k.zero()];
        c.extend(self.f.coeffs().iter().step_by(2).cloned());
        Ok(Polynomial::new(k, c))
    }

    pub fn embed(&self, k: &Field) -> Result<HyperellipticModel> {
        HyperellipticModel::new(self.f.embed(k)?)
    }

    pub fn contains(&self, p: &AffinePoint) -> bool {
        self.f.eval_in(&p.x).map(|fx| fx == p.y.square()).unwrap_or(false)
    }

    fn dinf(&self) -> (i64, i64) {
        let g = self.genus as i64;
        ((g + 1) / 2, g / 2)
    }

    pub fn zero(&self) -> MumfordClass {
        let (a, b) = self.dinf();
        let k = self.field();
        MumfordClass { u: Polynomial::one(k), v: Polynomial::zero(k), n_plus: a as usize, n_minus: b as usize }
    }

    /// Class of `P - inf+`.
    pub fn point_class(&self, p: &AffinePoint) -> Result<MumfordClass> {
        if !self.contains(p) {
            bail!(InvalidInput, "point {p} is not on the curve");
        }
        let (a, b) = self.dinf();
        let u = Polynomial::linear(&p.x);
        self.reduce(State { u, v: Polynomial::constant(&p.y), n: a - 1, m: b })
    }

    /// Class of `inf- - inf+`.
    pub fn infinity_difference(&self) -> Result<MumfordClass> {
        let (a, b) = self.dinf();
        let k = self.field();
        self.reduce(State { u: Polynomial::one(k), v: Polynomial::zero(k), n: a - 1, m: b + 1 })
    }

    /// Checks a user-supplied representative and reduces it.
    pub fn class(&self, u: Polynomial, v: Polynomial, n_plus: usize, n_minus: usize) -> Result<MumfordClass> {
        if u.is_zero() || !u.is_monic() && !u.is_constant() {
            bail!(InvalidInput, "u must be monic");
        }
        let u = u.monic();
        let diff = &(&v * &v) - &self.f;
        if !u.divides(&diff) {
            bail!(InvalidInput, "v^2 - F is not divisible by u");
        }
        let d = u.deg().max(0);
        if d + (n_plus + n_minus) as i64 != self.genus as i64 {
            bail!(InvalidInput, "deg u + n_plus + n_minus must equal the genus {}", self.genus);
        }
        self.reduce(State { u, v, n: n_plus as i64, m: n_minus as i64 })
    }

    pub fn add(&self, a: &MumfordClass, b: &MumfordClass) -> Result<MumfordClass> {
        let (u, v, h) = self.compose(&a.u, &a.v, &b.u, &b.v)?;
        let (da, db) = self.dinf();
        let n = (a.n_plus + b.n_plus) as i64 + h - da;
        let m = (a.n_minus + b.n_minus) as i64 + h - db;
        self.reduce(State { u, v, n, m })
    }

    pub fn neg(&self, a: &MumfordClass) -> Result<MumfordClass> {
        let (da, db) = self.dinf();
        let d = a.u.deg();
        self.reduce(State {
            u: a.u.clone(),
            v: -&a.v,
            n: 2 * da - d - a.n_plus as i64,
            m: 2 * db - d - a.n_minus as i64,
        })
    }

    pub fn sub(&self, a: &MumfordClass, b: &MumfordClass) -> Result<MumfordClass> {
        self.add(a, &self.neg(b)?)
    }

    pub fn scalar(&self, a: &MumfordClass, n: i64) -> Result<MumfordClass> {
        let base = if n < 0 { self.neg(a)? } else { a.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.zero();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = self.add(&sq, &sq)?;
            }
        }
        Ok(acc)
    }

    /// Push-forward under the hyperelliptic involution `(u, v) -> (u, -v)`.
    pub fn iota(&self, a: &MumfordClass) -> Result<MumfordClass> {
        self.swap_infinity(a.u.clone(), -&a.v, a)
    }

    /// Push-forward under `i : (u, v) -> (-u, -v)` on an even model.
    pub fn involution(&self, a: &MumfordClass) -> Result<MumfordClass> {
        if !self.is_even() {
            bail!(InvalidInput, "model has no involution (u, v) -> (-u, -v)");
        }
        let u = a.u.negate_variable().monic();
        let v = -&a.v.negate_variable();
        self.swap_infinity(u, v, a)
    }

    // Both involutions exchange inf+ and inf-; D is not symmetric when g is odd.
    fn swap_infinity(&self, u: Polynomial, v: Polynomial, a: &MumfordClass) -> Result<MumfordClass> {
        let (da, db) = self.dinf();
        self.reduce(State { u, v, n: a.n_minus as i64 + da - db, m: a.n_plus as i64 + db - da })
    }

    /// Cantor composition; returns the pair and the degree of the removed
    /// polynomial factor.
    fn compose(
        &self,
        u1: &Polynomial,
        v1: &Polynomial,
        u2: &Polynomial,
        v2: &Polynomial,
    ) -> Result<(Polynomial, Polynomial, i64)> {
        let (d0, e1, e2) = u1.xgcd(u2)?;
        let (d, c1, c2) = d0.xgcd(&(v1 + v2))?;
        let s1 = &c1 * &e1;
        let s2 = &c1 * &e2;
        let u = (u1 * u2).exact_div(&(&d * &d))?;
        let num = &(&(&(&s1 * u1) * v2) + &(&(&s2 * u2) * v1)) + &(&c2 * &(&(v1 * v2) + &self.f));
        let v = num.exact_div(&d)?.rem(&u);
        Ok((u, v, d.deg()))
    }

    fn reduce(&self, mut s: State) -> Result<MumfordClass> {
        let g = self.genus as i64;
        s.u = s.u.monic();
        s.v = s.v.rem(&s.u);
        let cap = 4 * (g + s.u.deg() + s.n.abs() + s.m.abs()) + 16;
        for _ in 0..cap {
            let d = s.u.deg();
            if d + s.n + s.m != g {
                return Err(Error::ReductionFailure(format!("degree bookkeeping broke: {d} + {} + {}", s.n, s.m)));
            }
            if d > g + 1 {
                let w = s.v.clone();
                s = self.flip(s, w)?;
            } else if s.m < 0 {
                let r = (&s.v - &self.vplus).rem(&s.u);
                let w = &self.vplus + &r;
                s = self.flip(s, w)?;
            } else if s.n < 0 {
                let r = (&s.v + &self.vplus).rem(&s.u);
                let w = &r - &self.vplus;
                s = self.flip(s, w)?;
            } else {
                return Ok(MumfordClass { u: s.u, v: s.v, n_plus: s.n as usize, n_minus: s.m as usize });
            }
        }
        Err(Error::ReductionFailure(String::from("reduction did not terminate")))
    }

    // div(u, w) ~ div(u', -w) - deg u' (inf+ + inf-) + P+ inf+ + P- inf-,
    // where P+- are the pole orders of y - w.
    fn flip(&self, s: State, w: Polynomial) -> Result<State> {
        let nf = &self.f - &(&w * &w);
        let u2 = nf.exact_div(&s.u).map_err(|_| Error::ReductionFailure(String::from("u does not divide F - w^2")))?;
        let (pp, pm) = self.pole_orders(&w, &nf);
        let u2 = u2.monic();
        let d2 = u2.deg();
        let v2 = (-&w).rem(&u2);
        Ok(State { u: u2, v: v2, n: s.n + pp - d2, m: s.m + pm - d2 })
    }

    // Pole orders of y - w at inf+ and inf-; `nf = F - w^2`.
    fn pole_orders(&self, w: &Polynomial, nf: &Polynomial) -> (i64, i64) {
        let top = self.genus as i64 + 1;
        let dw = w.deg();
        let dn = nf.deg();
        if dw == top {
            let lc = w.leading();
            if lc.is_one() {
                return (dn - top, top);
            }
            if (-&lc).is_one() {
                return (top, dn - top);
            }
        }
        let p = top.max(dw);
        (p, p)
    }

    /// `#J(F_q)` from point counts over `F_q, ..., F_{q^g}`. Exponential in
    /// `g`; meant as an oracle for small fields.
    pub fn jacobian_order(&self) -> Result<num_bigint::BigInt> {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use num_traits::{One, Zero};
        let k = self.field();
        let q = k.order_u64().ok_or_else(|| Error::Unsupported(String::from("finite fields only")))?;
        if k.degree() != 1 {
            bail!(Unsupported, "point counting over prime fields only");
        }
        let p = k.characteristic();
        let g = self.genus;
        // s[r] = q^r + 1 - #C(F_{q^r})
        let mut s: Vec<num_bigint::BigInt> = Vec::new();
        for r in 1..=g {
            let kr = Field::finite(p.pow(r as u32))?;
            let f = self.f.embed(&kr)?;
            let mut count: i64 = 2;
            for x in kr.elements() {
                let y2 = f.eval(&x);
                count += if y2.is_zero() {
                    1
                } else if y2.is_square() {
                    2
                } else {
                    0
                };
            }
            s.push(BigInt::from(q).pow(r as u32) + 1 - BigInt::from(count));
        }
        // Newton identities for the elementary symmetric functions.
        let mut e: Vec<BigRational> = alloc::vec![BigRational::one()];
        for i in 1..=g {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                let term = &e[i - j] * BigRational::from(s[j - 1].clone());
                if j % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            e.push(acc / BigRational::from(BigInt::from(i as u64)));
        }
        // L(1) = sum_{i<=g} (-1)^i e_i + sum_{i<g} (-1)^i q^{g-i} e_i
        let qb = BigRational::from(BigInt::from(q));
        let mut total = BigRational::zero();
        for (i, ei) in e.iter().enumerate() {
            let sign = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            total += &sign * ei;
            if i < g {
                let mut qq = BigRational::one();
                for _ in 0..(g - i) {
                    qq *= &qb;
                }
                total += sign * ei * qq;
            }
        }
        if !total.is_integer() {
            bail!(VerificationFailed, "non-integral L(1)");
        }
        Ok(total.to_integer())
    }
}

/// The polynomial `V` of degree `n` with `deg(F - V^2) < n`, where `F` is
/// monic of degree `2n`.
fn sqrt_polynomial_part(f: &Polynomial, n: usize) -> Result<Polynomial> {
    let k = f.field();
    let half = k.from_i64(2).inv()?;
    let mut v = Polynomial::monomial(&k.one(), n);
    for j in (0..n).rev() {
        let r = f - &(&v * &v);
        let c = &r.coeff(n + j) * &half;
        v = &v + &Polynomial::monomial(&c, j);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    fn example(k: &Field) -> HyperellipticModel {
        let e = |n: i64| k.from_i64(n);
        HyperellipticModel::etale(&[e(-5), e(0), e(4), e(4)]).unwrap()
    }

    fn q(n: i64, d: i64) -> FieldElement {
        let k = Field::rationals();
        &k.from_i64(n) * &k.from_i64(d).inv().unwrap()
    }

    fn random_point<R: rand_core::RngCore>(w: &HyperellipticModel, rng: &mut R) -> AffinePoint {
        loop {
            let x = w.field().random_element(rng);
            let y2 = w.rhs().eval(&x);
            if let Some(y) = y2.sqrt() {
                let y = if rng.next_u32() % 2 == 0 { y } else { -&y };
                return AffinePoint::new(x, y);
            }
        }
    }

    #[test]
    fn tripling_the_example_class() {
        let k = Field::rationals();
        let w = example(&k);
        let qt = AffinePoint::new(k.one(), k.from_i64(2));
        let iq = AffinePoint::new(-&qt.x, -&qt.y);
        let e = w.sub(&w.point_class(&qt).unwrap(), &w.point_class(&iq).unwrap()).unwrap();
        assert_eq!(e.u, Polynomial::from_ints(&k, &[-1, 0, 1]));
        assert_eq!(e.v, Polynomial::from_ints(&k, &[2]));
        assert_eq!((e.n_plus, e.n_minus), (1, 0));
        let e3 = w.scalar(&e, 3).unwrap();
        assert_eq!(e3.u, Polynomial::new(&k, alloc::vec![-q(49, 9), k.zero(), k.one()]));
        assert_eq!(e3.v, Polynomial::constant(&q(3278, 81)));
        assert_eq!(w.involution(&e).unwrap(), w.neg(&e).unwrap());
    }

    #[test]
    fn identity_and_unit_scalars() {
        let k = Field::rationals();
        let w = example(&k);
        let p = w.point_class(&AffinePoint::new(k.one(), k.from_i64(2))).unwrap();
        assert_eq!(w.scalar(&p, 0).unwrap(), w.zero());
        assert_eq!(w.scalar(&p, 1).unwrap(), p);
        assert_eq!(w.add(&p, &w.neg(&p).unwrap()).unwrap(), w.zero());
        let d = w.infinity_difference().unwrap();
        assert_eq!(w.add(&d, &w.neg(&d).unwrap()).unwrap(), w.zero());
    }

    #[test]
    fn group_law_modulo_small_primes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [11u64, 13] {
            let k = Field::prime(p).unwrap();
            let w = example(&k);
            for _ in 0..4 {
                let r = random_point(&w, &mut rng);
                let ir = AffinePoint::new(-&r.x, -&r.y);
                let d = w.sub(&w.point_class(&r).unwrap(), &w.point_class(&ir).unwrap()).unwrap();
                let id = w.involution(&d).unwrap();
                for m in 0..=8 {
                    let dm = w.scalar(&d, m).unwrap();
                    assert_eq!(w.scalar(&id, m).unwrap(), w.involution(&dm).unwrap());
                    for n in 0..=8 {
                        let lhs = w.scalar(&d, m + n).unwrap();
                        assert_eq!(lhs, w.add(&dm, &w.scalar(&d, n).unwrap()).unwrap(), "p={p} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobian_order_annihilates_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [11u64, 13] {
            let k = Field::prime(p).unwrap();
            let w = example(&k);
            let n = w.jacobian_order().unwrap();
            let n: i64 = n.try_into().unwrap();
            for _ in 0..6 {
                let a = w.point_class(&random_point(&w, &mut rng)).unwrap();
                let b = w.point_class(&random_point(&w, &mut rng)).unwrap();
                let d = w.add(&w.sub(&a, &b).unwrap(), &w.infinity_difference().unwrap()).unwrap();
                assert_eq!(w.scalar(&d, n).unwrap(), w.zero(), "p = {p}, #J = {n}");
                assert_ne!(w.scalar(&d, n + 1).unwrap(), w.zero());
            }
        }
    }

    #[test]
    fn genus_two_model() {
        // y^2 = x^6 + 1 over F7
        let k = Field::prime(7).unwrap();
        let w = HyperellipticModel::new(Polynomial::from_ints(&k, &[1, 0, 0, 0, 0, 0, 1])).unwrap();
        let n: i64 = w.jacobian_order().unwrap().try_into().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let a = w.point_class(&random_point(&w, &mut rng)).unwrap();
            assert_eq!(w.scalar(&a, n).unwrap(), w.zero());
        }
    }

    #[test]
    fn conjugate_points_sum_to_the_infinity_difference() {
        // y^2 = x^6 + x + 3 over F11, not even in x
        let k = Field::prime(11).unwrap();
        let w = HyperellipticModel::new(Polynomial::from_ints(&k, &[3, 1, 0, 0, 0, 0, 1])).unwrap();
        let d = w.infinity_difference().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let p = random_point(&w, &mut rng);
            let c = w.point_class(&p).unwrap();
            assert_eq!(c.u.eval(&p.x), k.zero());
            let conj = AffinePoint { x: p.x.clone(), y: -&p.y };
            let s = w.add(&c, &w.point_class(&conj).unwrap()).unwrap();
            assert_eq!(s, d);
        }
    }

    #[test]
    fn rejects_bad_models() {
        let k = Field::prime(7).unwrap();
        assert!(HyperellipticModel::new(Polynomial::from_ints(&k, &[1, 0, 0, 1])).is_err());
        assert!(HyperellipticModel::new(Polynomial::from_ints(&k, &[1, 0, 2, 0, 1])).is_err());
        let z = k.zero();
        assert!(HyperellipticModel::etale(&[z.clone(), z.clone(), z.clone(), z]).is_err());
    }
}
