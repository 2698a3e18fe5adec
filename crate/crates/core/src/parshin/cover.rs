//! Cubic covers of a genus-two curve `X` branched over one non-Weierstrass
//! point, obtained by descending a cyclic cover of an unramified double
//! cover `W -> X`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::mumford::{AffinePoint, HyperellipticModel, MumfordClass};
use crate::error::{bail, Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::nullspace;
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// `(a + b y) / c` on `y^2 = f(x)`, with `a, b, c` polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFunction {
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
}

impl CurveFunction {
    /// Common denominator of `a + b y` with `a, b` in `k(x)`; over `Q` the
    /// coefficients are made coprime integers with `c` positive at infinity,
    /// elsewhere `c` is monic.
    pub fn from_parts(a: &RationalFunction, b: &RationalFunction) -> Result<CurveFunction> {
        let k = a.field().clone();
        let g = a.den().gcd(b.den())?;
        let c = (a.den() * b.den()).exact_div(&g)?;
        let an = a.num() * &c.exact_div(a.den())?;
        let bn = b.num() * &c.exact_div(b.den())?;
        let mut out = CurveFunction { a: an, b: bn, c };
        if matches!(k.kind(), crate::field::FieldKind::Rationals) {
            out = out.integral();
        }
        Ok(out)
    }

    fn integral(self) -> CurveFunction {
        let k = self.c.field().clone();
        let all: Vec<BigRational> = [&self.a, &self.b, &self.c]
            .iter()
            .flat_map(|p| p.coeffs().iter().filter_map(|c| c.as_rational().cloned()).collect::<Vec<_>>())
            .filter(|r| !r.is_zero())
            .collect();
        let lcm = all.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let gcd = all.iter().fold(BigInt::zero(), |acc, r| acc.gcd(&(r.numer() * (&lcm / r.denom()))));
        let mut scale = BigRational::new(lcm, gcd);
        if self.c.leading().as_rational().is_some_and(|r| r.is_negative()) {
            scale = -scale;
        }
        let s = k.from_rational(&scale).expect("rational");
        CurveFunction { a: self.a.scale(&s), b: self.b.scale(&s), c: self.c.scale(&s) }
    }

    pub fn neg(&self) -> CurveFunction {
        CurveFunction { a: -&self.a, b: -&self.b, c: self.c.clone() }
    }

    pub fn to_string_in(&self, x: &str, y: &str) -> String {
        format!("(({})*{y} + ({}))/({})", self.b.to_string_in(x), self.a.to_string_in(x), self.c.to_string_in(x))
    }
}

impl fmt::Display for CurveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x", "y"))
    }
}

/// An element `a + b v` of `k(u)[v] / (v^2 - F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypElement {
    pub a: RationalFunction,
    pub b: RationalFunction,
}

impl HypElement {
    fn mul(&self, o: &HypElement, f: &RationalFunction) -> HypElement {
        HypElement {
            a: &(&self.a * &o.a) + &(&(&self.b * &o.b) * f),
            b: &(&self.a * &o.b) + &(&self.b * &o.a),
        }
    }

    fn sub(&self, o: &HypElement) -> HypElement {
        HypElement { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    /// Pull-back under `(u, v) -> (-u, -v)`.
    fn twist(&self) -> HypElement {
        HypElement { a: self.a.negate_variable(), b: -&self.b.negate_variable() }
    }

    /// Norm to `k(u)`.
    fn norm(&self, f: &RationalFunction) -> RationalFunction {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * f)
    }

    fn scale(&self, s: &FieldElement) -> HypElement {
        HypElement { a: self.a.scale(s), b: self.b.scale(s) }
    }
}

/// Function `f` on `W` with divisor `i(P) + 3 i(Q) - P - 3 Q`, as
/// `(c + d v) / (a + b v)` and in reduced form.
#[derive(Clone, Debug)]
pub struct Interpolant {
    pub numerator: (Polynomial, Polynomial),
    pub denominator: (Polynomial, Polynomial),
    pub f: HypElement,
    /// `f * i^*(f)`.
    pub lambda: FieldElement,
    pub pole_bound: usize,
}

#[derive(Clone, Debug)]
pub struct ParshinCover {
    pub w: HyperellipticModel,
    /// `y^2 = x_rhs(x)` is the curve `X = W / i`.
    pub x_rhs: Polynomial,
    pub q_tilde: AffinePoint,
    pub e: MumfordClass,
    pub three_e: MumfordClass,
    pub p_tilde: AffinePoint,
    pub partner: AffinePoint,
    /// Image of `p_tilde` on `X`.
    pub branch_point: AffinePoint,
    pub f: HypElement,
    pub lambda: FieldElement,
    /// `z^3 = 3 lambda z + alpha` over `k(X)`.
    pub alpha: CurveFunction,
    pub genus: usize,
}

impl ParshinCover {
    pub fn equation(&self) -> String {
        let lin = &self.lambda * &self.lambda.field().from_i64(3);
        format!("z^3 = {lin}*z + {}", self.alpha)
    }
}

fn twist_point(p: &AffinePoint) -> AffinePoint {
    AffinePoint::new(-&p.x, -&p.y)
}

/// The pair `{P, j(P)}` with `3E ~ i(P) - P`, preferred point first (larger
/// `u`-coordinate).
pub fn find_ptilde(w: &HyperellipticModel, three_e: &MumfordClass) -> Result<(AffinePoint, AffinePoint)> {
    if !w.is_even() || w.genus() != 3 {
        bail!(InvalidInput, "need v^2 = u^8 + a3 u^6 + a2 u^4 + a1 u^2 + a0");
    }
    let u = &three_e.u;
    let anti = u.degree() == Some(2) && u.coeff(1).is_zero() && three_e.v.degree().unwrap_or(0) == 0;
    if !anti || (three_e.n_plus, three_e.n_minus) != (1, 0) {
        bail!(InvalidInput, "class {three_e} is not of the form i(P) - P");
    }
    let rho2 = -&u.coeff(0);
    let c = three_e.v.coeff(0);
    let Some(rho) = rho2.sqrt() else {
        return Err(Error::RationalityObstruction(format!("{rho2} is not a square in the base field")));
    };
    if rho.is_zero() {
        bail!(Degenerate, "branch point over u = 0");
    }
    let a = AffinePoint::new(rho.clone(), -&c);
    let b = AffinePoint::new(-&rho, -&c);
    let (p, q) = if a.x >= b.x { (a, b) } else { (b, a) };
    let check = w.sub(&w.point_class(&twist_point(&p))?, &w.point_class(&p)?)?;
    if &check != three_e {
        bail!(VerificationFailed, "i(P) - P does not reproduce {three_e}");
    }
    Ok((p, q))
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

// Taylor coefficients of v at the point in the parameter t = u - u0.
fn local_v(w: &HyperellipticModel, p: &AffinePoint, order: usize) -> Result<Vec<FieldElement>> {
    let k = w.field();
    let shift = Polynomial::new(k, alloc::vec![p.x.clone(), k.one()]);
    let fs = w.rhs().compose(&shift);
    let mut v = alloc::vec![p.y.clone()];
    if order <= 1 {
        return Ok(v);
    }
    if p.y.is_zero() {
        bail!(Unsupported, "higher-order contact at a Weierstrass point");
    }
    let inv = (&p.y * &k.from_i64(2)).inv()?;
    for j in 1..order {
        let mut s = fs.coeff(j);
        for i in 1..j {
            s = &s - &(&v[i] * &v[j - i]);
        }
        v.push(&s * &inv);
    }
    Ok(v)
}

// Rows expressing vanishing of a(u) + b(u) v to the given order at p, for
// unknowns [a_0..=a_da, b_0..=b_db].
fn vanishing_rows(
    w: &HyperellipticModel,
    p: &AffinePoint,
    order: usize,
    da: usize,
    db: Option<usize>,
) -> Result<Vec<Vec<FieldElement>>> {
    let k = w.field();
    let v = local_v(w, p, order)?;
    let pw = |e: usize| p.x.pow(&num_bigint::BigUint::from(e));
    let mut rows = Vec::new();
    for t in 0..order {
        let mut row = Vec::new();
        for i in 0..=da {
            row.push(if i >= t { &k.from_i64(binom(i, t)) * &pw(i - t) } else { k.zero() });
        }
        if let Some(db) = db {
            for j in 0..=db {
                let mut s = k.zero();
                for l in 0..=t.min(j) {
                    s = &s + &(&(&k.from_i64(binom(j, l)) * &pw(j - l)) * &v[t - l]);
                }
                row.push(s);
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn split(k: &Field, vec: &[FieldElement], da: usize) -> (Polynomial, Polynomial) {
    (Polynomial::new(k, vec[..=da].to_vec()), Polynomial::new(k, vec[da + 1..].to_vec()))
}

// Pole orders of a + b v at inf+ and inf-.
fn pole_orders(w: &HyperellipticModel, a: &Polynomial, b: &Polynomial) -> (i64, i64) {
    let top = w.genus() as i64 + 1;
    if b.is_zero() {
        return (a.deg(), a.deg());
    }
    let db = b.deg() + top;
    if a.deg() != db {
        let m = a.deg().max(db);
        return (m, m);
    }
    let n = (&(a * a) - &(&(b * b) * w.rhs())).deg();
    if a.leading() == -&b.leading() {
        (n - db, db)
    } else if a.leading() == b.leading() {
        (db, n - db)
    } else {
        (db, db)
    }
}

fn eval_at(a: &Polynomial, b: &Polynomial, p: &AffinePoint) -> FieldElement {
    &a.eval(&p.x) + &(&b.eval(&p.x) * &p.y)
}

/// Interpolates `f` with `(f) = i(P) + 3 i(Q) - P - 3 Q` from the spaces
/// `L(m (inf+ + inf-))`, growing `m` from `g + 1` by at most 6.
pub fn interpolate_f(w: &HyperellipticModel, p: &AffinePoint, q: &AffinePoint) -> Result<Interpolant> {
    let k = w.field().clone();
    let g = w.genus();
    if !w.contains(p) || !w.contains(q) {
        bail!(InvalidInput, "points must lie on W");
    }
    if p.x.is_zero() || q.x.is_zero() || p.x == q.x || p.x == -&q.x {
        bail!(Degenerate, "points must have distinct nonzero u-coordinates up to sign");
    }
    let (ip, iq) = (twist_point(p), twist_point(q));
    let lin = |c: &FieldElement| Polynomial::linear(c);
    let target_poles = &lin(&p.x) * &lin(&q.x).pow(3);
    for m in (g + 1)..=(g + 7) {
        let da = m;
        let db = m.checked_sub(g + 1);
        let ncols = da + 1 + db.map_or(0, |d| d + 1);
        let mut rows = vanishing_rows(w, p, 1, da, db)?;
        rows.extend(vanishing_rows(w, q, 3, da, db)?);
        let basis = nullspace(&k, &rows, ncols);
        if basis.is_empty() {
            continue;
        }
        let mut candidates: Vec<Vec<FieldElement>> = Vec::new();
        let sum = basis.iter().fold(alloc::vec![k.zero(); ncols], |acc, v| {
            acc.iter().zip(v).map(|(x, y)| x + y).collect()
        });
        candidates.push(sum);
        candidates.extend(basis.iter().cloned());
        for cand in candidates {
            let (ha, hb) = split(&k, &cand, da);
            if hb.is_zero() || pole_orders(w, &ha, &hb) != (m as i64, m as i64) {
                continue;
            }
            if eval_at(&ha, &hb, &ip).is_zero() || eval_at(&ha, &hb, &iq).is_zero() {
                continue;
            }
            let nh = &(&ha * &ha) - &(&(&hb * &hb) * w.rhs());
            let Ok(res) = nh.exact_div(&target_poles) else { continue };
            if !res.gcd(&hb)?.is_one() {
                continue;
            }
            let mut grows = vanishing_rows(w, &ip, 1, da, db)?;
            grows.extend(vanishing_rows(w, &iq, 3, da, db)?);
            // c b_H - d a_H = 0 modulo the residual zeros of H.
            let dr = res.degree().unwrap_or(0);
            let mut cols: Vec<Polynomial> = Vec::new();
            for i in 0..=da {
                cols.push((&Polynomial::monomial(&k.one(), i) * &hb).rem(&res));
            }
            if let Some(db) = db {
                for j in 0..=db {
                    cols.push((-&(&Polynomial::monomial(&k.one(), j) * &ha)).rem(&res));
                }
            }
            for r in 0..dr {
                grows.push(cols.iter().map(|c| c.coeff(r)).collect());
            }
            let gb = nullspace(&k, &grows, ncols);
            if gb.len() != 1 {
                continue;
            }
            let (gc, gd) = split(&k, &gb[0], da);
            let f_el = HypElement {
                a: RationalFunction::new(&(&gc * &ha) - &(&(&gd * &hb) * w.rhs()), nh.clone())?,
                b: RationalFunction::new(&(&gd * &ha) - &(&gc * &hb), nh.clone())?,
            };
            let lambda = verify_interpolant(w, &f_el, p, q)?;
            return Ok(Interpolant {
                numerator: (gc, gd),
                denominator: (ha, hb),
                f: f_el,
                lambda,
                pole_bound: m,
            });
        }
    }
    Err(Error::ReductionFailure(String::from("no interpolating function up to the degree cap")))
}

/// Checks `f i^*(f)` is a constant and the norm of `f` has the expected
/// zeros and poles; returns the constant.
fn verify_interpolant(w: &HyperellipticModel, f: &HypElement, p: &AffinePoint, q: &AffinePoint) -> Result<FieldElement> {
    let fr = RationalFunction::from_poly(w.rhs());
    let prod = f.mul(&f.twist(), &fr);
    if !prod.b.is_zero() {
        bail!(VerificationFailed, "f i*(f) is not invariant");
    }
    let Some(lambda) = prod.a.as_constant() else {
        bail!(VerificationFailed, "f i*(f) is not constant");
    };
    let lin = |c: &FieldElement| Polynomial::linear(c);
    let zeros = &lin(&-&p.x) * &lin(&-&q.x).pow(3);
    let poles = &lin(&p.x) * &lin(&q.x).pow(3);
    let ratio = f.norm(&fr).checked_div(&RationalFunction::new(zeros, poles)?)?;
    if !ratio.is_constant() || ratio.is_zero() {
        bail!(VerificationFailed, "norm of f has unexpected support");
    }
    Ok(lambda)
}

/// Representative of the square class of `l`: 1 or the smallest non-square
/// over finite fields, the squarefree integer over `Q`.
pub fn square_class_representative(l: &FieldElement) -> FieldElement {
    let k = l.field();
    if k.is_finite() {
        return if l.is_square() { k.one() } else { k.smallest_nonsquare().expect("odd characteristic") };
    }
    let Some(r) = l.as_rational() else { return l.clone() };
    let mut n: BigInt = r.numer() * r.denom();
    let negative = n.is_negative();
    n = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(100_000u32);
    while &p * &p <= n && p <= limit {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1u32;
    }
    let s = n.sqrt();
    if &s * &s != n {
        out *= n;
    }
    if negative {
        out = -out;
    }
    k.from_bigint(&out)
}

// Even rational function of u, rewritten in x = u^2.
fn even_in_x(r: &RationalFunction) -> Result<RationalFunction> {
    let k = r.field();
    let half = |p: &Polynomial| -> Result<Polynomial> {
        if p.coeffs().iter().enumerate().any(|(i, c)| i % 2 == 1 && !c.is_zero()) {
            bail!(VerificationFailed, "expected an even function of u");
        }
        Ok(Polynomial::new(k, p.coeffs().iter().step_by(2).cloned().collect()))
    };
    RationalFunction::new(half(r.num())?, half(r.den())?)
}

fn flip_sign(alpha: &CurveFunction) -> bool {
    let lead = if alpha.a.is_zero() { alpha.b.leading() } else { alpha.a.leading() };
    if lead.field().is_finite() {
        -&lead < lead
    } else {
        lead.as_rational().is_some_and(|r| r.is_negative())
    }
}

/// Full pipeline from an even model `W` and a point `Q` on it.
pub fn parshin_cover(w: &HyperellipticModel, q_tilde: &AffinePoint) -> Result<ParshinCover> {
    let k = w.field().clone();
    let x_rhs = w.quotient_rhs()?;
    if w.genus() != 3 {
        bail!(InvalidInput, "W must have degree 8");
    }
    let iq = twist_point(q_tilde);
    let e = w.sub(&w.point_class(q_tilde)?, &w.point_class(&iq)?)?;
    let three_e = w.scalar(&e, 3)?;
    let (p_tilde, partner) = find_ptilde(w, &three_e)?;
    let interp = interpolate_f(w, &p_tilde, q_tilde)?;
    // f -> s f scales lambda by s^2
    let target = square_class_representative(&interp.lambda);
    let s = target
        .checked_div(&interp.lambda)?
        .sqrt()
        .ok_or_else(|| Error::VerificationFailed(String::from("lambda changed square class")))?;
    let mut f = interp.f.scale(&s);
    let lambda = target;
    let build = |f: &HypElement| -> Result<(CurveFunction, RationalFunction, RationalFunction)> {
        let fi = f.twist();
        let even = even_in_x(&(&f.a + &fi.a).scale(&lambda))?;
        let odd = (&f.b + &fi.b).scale(&lambda).checked_div(&RationalFunction::x(&k))?;
        let odd = even_in_x(&odd)?;
        Ok((CurveFunction::from_parts(&even, &odd)?, even, odd))
    };
    let (mut alpha, mut ea, mut eb) = build(&f)?;
    if flip_sign(&alpha) {
        f = f.scale(&-&k.one());
        (alpha, ea, eb) = build(&f)?;
    }
    verify_cover(w, &x_rhs, &f, &lambda, &ea, &eb, &p_tilde, q_tilde)?;
    let branch_point = AffinePoint::new(p_tilde.x.square(), &p_tilde.x * &p_tilde.y);
    Ok(ParshinCover {
        w: w.clone(),
        x_rhs,
        q_tilde: q_tilde.clone(),
        e,
        three_e,
        p_tilde,
        partner,
        branch_point,
        f,
        lambda,
        alpha,
        genus: 5,
    })
}

/// `alpha^2 - 4 lambda^3 = x s^2` in `k(X)`, so the purely cubic closure is
/// `W`, and `alpha` has poles only over the branch point and over `Q`.
#[allow(clippy::too_many_arguments)]
fn verify_cover(
    w: &HyperellipticModel,
    x_rhs: &Polynomial,
    f: &HypElement,
    lambda: &FieldElement,
    ea: &RationalFunction,
    eb: &RationalFunction,
    p: &AffinePoint,
    q: &AffinePoint,
) -> Result<()> {
    let k = w.field();
    let x = RationalFunction::x(k);
    let fx = RationalFunction::from_poly(x_rhs);
    let fi = f.twist();
    let d = f.sub(&fi).scale(lambda);
    let u = RationalFunction::x(k);
    let sa = even_in_x(&d.a.checked_div(&u)?)?;
    let sb = even_in_x(&d.b)?.checked_div(&x)?;
    let s = HypElement { a: sa, b: sb };
    let alpha = HypElement { a: ea.clone(), b: eb.clone() };
    let four_l3 = RationalFunction::constant(&(&k.from_i64(4) * &(&lambda.square() * lambda)));
    let mut lhs = alpha.mul(&alpha, &fx);
    lhs.a = &lhs.a - &four_l3;
    let s2 = s.mul(&s, &fx);
    let rhs = HypElement { a: &s2.a * &x, b: &s2.b * &x };
    if lhs != rhs {
        bail!(VerificationFailed, "alpha^2 - 4 lambda^3 is not x times a square");
    }
    let norm = alpha.norm(&fx);
    let xp = p.x.square();
    let xq = q.x.square();
    let mut den = norm.den().clone();
    for c in [&xp, &xq] {
        let l = Polynomial::linear(c);
        while l.divides(&den) {
            den = den.exact_div(&l)?;
        }
    }
    if !den.is_constant() {
        bail!(VerificationFailed, "alpha has poles away from the branch point");
    }
    let vp = norm.valuation_at(&Polynomial::linear(&xp)).unwrap_or(0);
    if vp >= 0 || vp % 3 == 0 {
        bail!(VerificationFailed, "alpha does not have a pole of order prime to 3 at the branch point");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        let k = Field::rationals();
        &k.from_i64(n) * &k.from_i64(d).inv().unwrap()
    }

    fn example() -> (HyperellipticModel, AffinePoint) {
        let k = Field::rationals();
        let e = |n: i64| k.from_i64(n);
        let w = HyperellipticModel::etale(&[e(-5), e(0), e(4), e(4)]).unwrap();
        (w, AffinePoint::new(e(1), e(2)))
    }

    #[test]
    fn example_cover_over_the_rationals() {
        let (w, qt) = example();
        let k = w.field().clone();
        let c = parshin_cover(&w, &qt).unwrap();
        assert_eq!(c.p_tilde, AffinePoint::new(q(7, 3), q(-3278, 81)));
        assert_eq!(c.partner, AffinePoint::new(q(-7, 3), q(-3278, 81)));
        assert_eq!(c.branch_point, AffinePoint::new(q(49, 9), q(-22946, 243)));
        assert_eq!(c.lambda, k.from_i64(5));
        let p = |v: &[i64]| Polynomial::from_ints(&k, v);
        assert_eq!(c.alpha.b, p(&[-480, -320]));
        assert_eq!(c.alpha.a, p(&[1050, 2680, -6860, 1320, 210]));
        assert_eq!(c.alpha.c, p(&[49, -156, 174, -76, 9]));
        assert_eq!(c.x_rhs, p(&[0, -5, 0, 4, 4, 1]));
        assert_eq!(c.genus, 5);
    }

    #[test]
    fn partner_point_gives_the_same_branch_point() {
        let (w, qt) = example();
        let c = parshin_cover(&w, &qt).unwrap();
        let alt = interpolate_f(&w, &c.partner, &qt).unwrap();
        let image = AffinePoint::new(c.partner.x.square(), &c.partner.x * &c.partner.y);
        // j(P) lies over the other point of X with the same x
        assert_eq!(image.x, c.branch_point.x);
        assert!(!alt.lambda.is_zero());
    }

    #[test]
    fn swapped_divisor_inverts_f() {
        let (w, qt) = example();
        let c = parshin_cover(&w, &qt).unwrap();
        let a = interpolate_f(&w, &c.p_tilde, &qt).unwrap();
        let b = interpolate_f(&w, &twist_point(&c.p_tilde), &twist_point(&qt)).unwrap();
        let fr = RationalFunction::from_poly(w.rhs());
        let prod = a.f.mul(&b.f, &fr);
        assert!(prod.b.is_zero() && prod.a.is_constant());
    }

    #[test]
    fn square_classes() {
        assert_eq!(square_class_representative(&q(9, 5)), q(5, 1));
        assert_eq!(square_class_representative(&q(-12, 1)), q(-3, 1));
        let k = Field::prime(7).unwrap();
        assert_eq!(square_class_representative(&k.from_i64(2)), k.one());
        assert_eq!(square_class_representative(&k.from_i64(3)), k.from_i64(3));
    }

    #[test]
    fn finite_field_pipeline() {
        // The same W reduced mod 13, starting from a few rational points.
        let k = Field::prime(13).unwrap();
        let e = |n: i64| k.from_i64(n);
        let w = HyperellipticModel::etale(&[e(-5), e(0), e(4), e(4)]).unwrap();
        let mut done = 0;
        for x in k.elements() {
            let Some(y) = w.rhs().eval(&x).sqrt() else { continue };
            if x.is_zero() || y.is_zero() {
                continue;
            }
            match parshin_cover(&w, &AffinePoint::new(x, y)) {
                Ok(c) => {
                    assert!(c.lambda.is_one() || c.lambda == k.smallest_nonsquare().unwrap());
                    done += 1;
                }
                Err(Error::RationalityObstruction(_)) | Err(Error::Degenerate(_)) => {}
                Err(err) => panic!("{err}"),
            }
        }
        assert!(done > 0);
    }
}
