//! Explicit Parshin covers: the genus-one family and covers of hyperelliptic
//! curves branched over the Weierstrass point at infinity.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_core::RngCore;

use super::mumford::AffinePoint;
use crate::analyzer::analyze;
use crate::cubic::CubicModel;
use crate::error::{bail, Error, Result};
use crate::field::{Field, FieldElement};
use crate::function_field::Place;
use crate::mpoly::MPoly;
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// Ramification of a cubic cover of the curve `y^2 = F(x)`, listed by the
/// places of the `x`-line underneath.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoverRamification {
    pub total: Vec<Place>,
    pub partial: Vec<Place>,
    pub base_genus: i64,
    pub cover_genus: i64,
}

/// Lifts the ramification of a cubic model over `k(x)` to `k(x, sqrt(F))`.
/// Above a place ramified in the double cover the discriminant datum has even
/// valuation, so partial ramification disappears there; total ramification
/// survives since the pole order of `alpha` only doubles.
pub fn ramification_on_double_cover(model: &CubicModel, rhs: &Polynomial) -> Result<DoubleCoverRamification> {
    if model.field().characteristic() == 2 {
        bail!(InvalidInput, "characteristic 2");
    }
    if rhs.deg() < 3 || !rhs.is_squarefree() {
        bail!(InvalidInput, "F must be squarefree of degree at least 3");
    }
    let shadow = analyze(model)?;
    let f = RationalFunction::from_poly(rhs);
    let e = |p: &Place| if p.valuation(&f).unwrap_or(0) % 2 != 0 { 2 } else { 1 };
    // Sum of the degrees of the places of the double cover above `p`.
    let above = |p: &Place| 2 * p.degree() as i64 / e(p);
    let total = shadow.total.clone();
    let partial: Vec<Place> = shadow.partial.iter().filter(|p| e(p) == 1).cloned().collect();
    let base_genus = (rhs.deg() - 1) / 2;
    let r = 3 * (2 * base_genus - 2)
        + total.iter().map(|p| 2 * above(p)).sum::<i64>()
        + partial.iter().map(|p| above(p)).sum::<i64>();
    if r % 2 != 0 {
        bail!(VerificationFailed, "Riemann-Hurwitz sum {r} is odd");
    }
    Ok(DoubleCoverRamification { total, partial, base_genus, cover_genus: r / 2 + 1 })
}

/// `X: y^2 = (x^2 - 4c^3) g(x)` with its cubic cover
/// `Y: w^2 = (z^2 - 4c) g(z^3 - 3cz)`, `(z, w) -> (z^3 - 3cz, w (z^2 - c))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassParshin {
    pub c: FieldElement,
    pub g: Polynomial,
    pub x_rhs: Polynomial,
    pub y_rhs: Polynomial,
    /// `z^3 = 3 c z + x` over `k(x)`.
    pub cover: CubicModel,
    pub ramification: DoubleCoverRamification,
}

impl WeierstrassParshin {
    pub fn x_equation(&self) -> String {
        format!("y^2 = {}", self.x_rhs.to_string_in("x"))
    }

    pub fn y_equation(&self) -> String {
        format!("w^2 = {}", self.y_rhs.to_string_in("z"))
    }

    /// Coordinate formulas of the map `Y -> X`.
    pub fn map(&self) -> [String; 2] {
        let k = self.c.field();
        let t = cubic_chebyshev(&self.c);
        let q = &Polynomial::x(k).pow(2) - &Polynomial::constant(&self.c);
        [t.to_string_in("z"), format!("w*({})", q.to_string_in("z"))]
    }

    pub fn map_at(&self, p: &AffinePoint) -> AffinePoint {
        let w = &p.y * &(&p.x.square() - &self.c);
        AffinePoint::new(cubic_chebyshev(&self.c).eval(&p.x), w)
    }
}

// z^3 - 3 c z
fn cubic_chebyshev(c: &FieldElement) -> Polynomial {
    let k = c.field();
    Polynomial::new(k, alloc::vec![k.zero(), -&(c * &k.from_i64(3)), k.zero(), k.one()])
}

fn check_characteristic(k: &Field) -> Result<()> {
    match k.characteristic() {
        2 | 3 => bail!(InvalidInput, "characteristic {} is excluded", k.characteristic()),
        _ => Ok(()),
    }
}

pub fn weierstrass_parshin(g: &Polynomial, c: &FieldElement) -> Result<WeierstrassParshin> {
    let k = g.field().clone();
    check_characteristic(&k)?;
    if c.is_zero() {
        bail!(InvalidInput, "c must be nonzero");
    }
    if c.field() != &k {
        return Err(Error::FieldMismatch);
    }
    if g.deg() < 1 || g.deg() % 2 == 0 {
        bail!(InvalidInput, "g must have odd degree");
    }
    let x = Polynomial::x(&k);
    let c3 = &c.square() * c;
    let four = k.from_i64(4);
    let x_rhs = &(&x.pow(2) - &Polynomial::constant(&(&c3 * &four))) * g;
    if !x_rhs.is_squarefree() {
        bail!(Degenerate, "(x^2 - 4c^3) g(x) is not squarefree");
    }
    let t = cubic_chebyshev(c);
    let z2c = &x.pow(2) - &Polynomial::constant(c);
    let z24c = &x.pow(2) - &Polynomial::constant(&(c * &four));
    let y_rhs = &z24c * &g.compose(&t);
    if &t.pow(2) - &Polynomial::constant(&(&c3 * &four)) != &z24c * &z2c.pow(2) {
        bail!(VerificationFailed, "(z^3 - 3cz)^2 - 4c^3 != (z^2 - 4c)(z^2 - c)^2");
    }
    if &y_rhs * &z2c.pow(2) != x_rhs.compose(&t) {
        bail!(VerificationFailed, "the map does not carry Y to X");
    }
    if !y_rhs.is_squarefree() {
        bail!(VerificationFailed, "Y is singular");
    }
    let cover = CubicModel::impure(c.clone(), RationalFunction::x(&k))?;
    let ramification = ramification_on_double_cover(&cover, &x_rhs)?;
    if ramification.total != [Place::Infinity] || !ramification.partial.is_empty() {
        bail!(VerificationFailed, "cover is not ramified over infinity alone");
    }
    if ramification.cover_genus != 3 * ramification.base_genus - 1 {
        bail!(VerificationFailed, "genus of Y is not 3 g(X) - 1");
    }
    Ok(WeierstrassParshin { c: c.clone(), g: g.clone(), x_rhs, y_rhs, cover, ramification })
}

/// The identity `(z^3 - 3cz)^2 - 4c^3 = (z^2 - 4c)(z^2 - c)^2` with `c` an
/// indeterminate over `Q`.
pub fn weierstrass_identity_holds() -> bool {
    let q = Field::rationals();
    let (z, c) = (MPoly::var(&q, 2, 0), MPoly::var(&q, 2, 1));
    let int = |n| MPoly::int(&q, n, 2);
    let t = &z.pow(3) - &(&int(3) * &(&c * &z));
    let lhs = &t.pow(2) - &(&int(4) * &c.pow(3));
    let rhs = &(&z.pow(2) - &(&int(4) * &c)) * &(&z.pow(2) - &c).pow(2);
    lhs == rhs
}

/// The genus-one family: `Z: t^2 = s(s^6 - l s^3 + 1)` over
/// `Y: v^2 = (u^2 - 4)(u^3 - 3u - l)` over `X: y^2 = (x^2 - 4)(x - l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus1Parshin {
    pub lambda: FieldElement,
    pub z_rhs: Polynomial,
    pub y_rhs: Polynomial,
    pub x_rhs: Polynomial,
    /// `u^3 = 3u + x` over `k(x)`.
    pub cover: CubicModel,
    pub ramification: DoubleCoverRamification,
}

pub const PSI: [&str; 2] = ["s + s^-1", "t*(1 - s^-4)/(s + s^-1)"];
pub const PHI: [&str; 2] = ["u^3 - 3*u", "v*(u^2 - 1)"];
pub const PHI_PSI: [&str; 2] = ["s^3 + s^-3", "s*t*(1 - s^-6)"];

impl Genus1Parshin {
    pub fn z_equation(&self) -> String {
        format!("t^2 = {}", self.z_rhs.to_string_in("s"))
    }

    pub fn y_equation(&self) -> String {
        format!("v^2 = {}", self.y_rhs.to_string_in("u"))
    }

    pub fn x_equation(&self) -> String {
        format!("y^2 = {}", self.x_rhs.to_string_in("x"))
    }

    /// `Z -> Y`; undefined where `s` or `s + 1/s` vanishes.
    pub fn psi_at(&self, p: &AffinePoint) -> Result<AffinePoint> {
        let k = p.x.field();
        let si = p.x.inv()?;
        let u = &p.x + &si;
        let v = (&p.y * &(&k.one() - &si.pow_i64(4)?)).checked_div(&u)?;
        Ok(AffinePoint::new(u, v))
    }

    /// `Y -> X`.
    pub fn phi_at(&self, p: &AffinePoint) -> AffinePoint {
        let k = p.x.field();
        let u2 = p.x.square();
        let x = &(&u2 * &p.x) - &(&p.x * &k.from_i64(3));
        AffinePoint::new(x, &p.y * &(&u2 - &k.one()))
    }

    /// Evaluates the maps at `n` random points of `Z` over `ext`, which must
    /// contain the field of `lambda`. Checks that points land on `Y` and `X`,
    /// the closed form of the composite, invariance of `psi` under
    /// `(s, t) -> (1/s, -t/s^4)`, and when `ext` has a primitive cube root of
    /// unity `z`, invariance of the composite under `(s, t) -> (z s, z^2 t)`.
    pub fn sample_check<R: RngCore>(&self, ext: &Field, n: usize, rng: &mut R) -> Result<usize> {
        let (zr, yr, xr) = (self.z_rhs.embed(ext)?, self.y_rhs.embed(ext)?, self.x_rhs.embed(ext)?);
        let zeta = ext.cube_root_of_unity();
        let one = ext.one();
        let mut done = 0;
        let mut attempts = 0;
        while done < n {
            attempts += 1;
            if attempts > 1000 * n {
                bail!(InvalidInput, "field too small to find {n} sample points");
            }
            let s = ext.random_element(rng);
            if s.is_zero() || (&s.pow_i64(6)? + &one).is_zero() {
                continue;
            }
            let Some(t) = zr.eval(&s).sqrt() else { continue };
            let t = if rng.next_u32() % 2 == 0 { t } else { -&t };
            let pz = AffinePoint::new(s.clone(), t.clone());
            let py = self.psi_at(&pz)?;
            if py.y.square() != yr.eval(&py.x) {
                bail!(VerificationFailed, "psi({pz}) is not on Y");
            }
            let px = self.phi_at(&py);
            if px.y.square() != xr.eval(&px.x) {
                bail!(VerificationFailed, "phi({py}) is not on X");
            }
            let si = s.inv()?;
            let closed = AffinePoint::new(
                &s.pow_i64(3)? + &si.pow_i64(3)?,
                &(&s * &t) * &(&one - &si.pow_i64(6)?),
            );
            if closed != px {
                bail!(VerificationFailed, "composite disagrees with its closed form at {pz}");
            }
            let sigma = AffinePoint::new(si.clone(), -&(&t * &si.pow_i64(4)?));
            if self.psi_at(&sigma)? != py {
                bail!(VerificationFailed, "psi is not invariant at {pz}");
            }
            if let Some(z) = &zeta {
                let rho = AffinePoint::new(z * &s, &z.square() * &t);
                if self.phi_at(&self.psi_at(&rho)?) != px {
                    bail!(VerificationFailed, "composite is not rho-invariant at {pz}");
                }
            }
            done += 1;
        }
        Ok(done)
    }
}

/// `x^3 - 3x - x0` has three distinct roots over the algebraic closure.
pub fn fiber_is_reduced(x0: &FieldElement) -> bool {
    let k = x0.field();
    let p = &cubic_chebyshev(&k.one()) - &Polynomial::constant(x0);
    p.is_squarefree()
}

pub fn genus1_parshin(lambda: &FieldElement) -> Result<Genus1Parshin> {
    let k = lambda.field().clone();
    check_characteristic(&k)?;
    if lambda.square() == k.from_i64(4) {
        bail!(Degenerate, "singular parameter: lambda^2 = 4");
    }
    let l = Polynomial::constant(lambda);
    let x = Polynomial::x(&k);
    let z_rhs = Polynomial::new(
        &k,
        alloc::vec![k.zero(), k.one(), k.zero(), k.zero(), -lambda, k.zero(), k.zero(), k.one()],
    );
    let quad = &x.pow(2) - &Polynomial::constant(&k.from_i64(4));
    let y_rhs = &quad * &(&cubic_chebyshev(&k.one()) - &l);
    let x_rhs = &quad * &(&x - &l);
    for (name, p) in [("Z", &z_rhs), ("Y", &y_rhs), ("X", &x_rhs)] {
        if !p.is_squarefree() {
            bail!(Degenerate, "singular parameter: {name} is singular");
        }
    }
    genus1_identities(&MPoly::constant(lambda, 3))?;
    let w = weierstrass_parshin(&(&x - &l), &k.one())?;
    if w.x_rhs != x_rhs || w.y_rhs != y_rhs {
        bail!(VerificationFailed, "genus-one family disagrees with the Weierstrass construction");
    }
    Ok(Genus1Parshin { lambda: lambda.clone(), z_rhs, y_rhs, x_rhs, cover: w.cover, ramification: w.ramification })
}

/// Identities behind the genus-one family, with `l` a polynomial in the third
/// of three variables (a constant, or the indeterminate for generic `l`).
pub fn genus1_identities(l: &MPoly) -> Result<()> {
    let k = l.terms().next().map_or(Field::rationals(), |(_, c)| c.field().clone());
    let var = |i| MPoly::var(&k, 3, i);
    let mono = |i, e| MPoly::monomial(&k, 3, i, e);
    let int = |n| MPoly::int(&k, n, 3);
    let fail = |what: &str| Err(Error::VerificationFailed(format!("genus-one identity failed: {what}")));

    // Z -> Y in (s, t)
    let (s, t) = (var(0), var(1));
    let z_rhs = &(&mono(0, 7) - &(l * &mono(0, 4))) + &s;
    let z_eq = &t.pow(2) - &z_rhs;
    let u = &s + &mono(0, -1);
    // v (s + 1/s)
    let vu = &t * &(&int(1) - &mono(0, -4));
    let y_rhs_of = |u: &MPoly| &(&u.pow(2) - &int(4)) * &(&(&u.pow(3) - &(&int(3) * u)) - l);
    if !(&vu.pow(2) - &(&y_rhs_of(&u) * &u.pow(2))).reduce_square(1, &z_rhs)?.is_zero() {
        return fail("psi maps Z to Y");
    }
    if &(&u.pow(3) - &(&int(3) * &u)) != &(&mono(0, 3) + &mono(0, -3)) {
        return fail("x-coordinate of the composite");
    }
    let y_closed = &(&s * &t) * &(&int(1) - &mono(0, -6));
    if &vu * &(&u.pow(2) - &int(1)) != &y_closed * &u {
        return fail("y-coordinate of the composite");
    }
    let sigma = |p: &MPoly| p.invert(0).substitute(1, &-&(&t * &mono(0, -4)));
    if sigma(&z_eq)? != &z_eq * &mono(0, -8) {
        return fail("(s, t) -> (1/s, -t/s^4) preserves Z");
    }
    if u.invert(0) != u || sigma(&vu)? != vu {
        return fail("psi is invariant under (s, t) -> (1/s, -t/s^4)");
    }
    // (s, t) -> (z s, z^2 t) scales s^a t^b by z^(a + 2b).
    let weight = |p: &MPoly, w: i32| p.terms().all(|(e, _)| (e[0] + 2 * e[1] - w).rem_euclid(3) == 0);
    if !weight(&z_eq, 1) || !weight(&(&mono(0, 3) + &mono(0, -3)), 0) || !weight(&y_closed, 0) {
        return fail("composite is invariant under (s, t) -> (z s, z^2 t)");
    }

    // Y -> X in (u, v)
    let (u, v) = (var(0), var(1));
    let x = &u.pow(3) - &(&int(3) * &u);
    let y = &v * &(&u.pow(2) - &int(1));
    let x_rhs = &(&x.pow(2) - &int(4)) * &(&x - l);
    if !(&y.pow(2) - &x_rhs).reduce_square(1, &y_rhs_of(&u))?.is_zero() {
        return fail("phi maps Y to X");
    }
    Ok(())
}

/// The genus-one identities over `Q(l)` with `l` an indeterminate.
pub fn genus1_identities_generic() -> Result<()> {
    genus1_identities(&MPoly::var(&Field::rationals(), 3, 2))
}
