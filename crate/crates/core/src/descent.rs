//! Impurely cubic extensions with prescribed purely cubic closure `K'` and
//! total ramification `T`, obtained by descending `w^3 = f` from `K'`.
//!
//! Everything happens on the parametrized line `K' = k(u)` (or on `k'(x)`
//! when `K'` is a constant extension), where divisors are ratios of
//! polynomials.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_core::RngCore;

use crate::cubic::CubicModel;
use crate::error::{bail, Error, Result};
use crate::field::{Field, FieldElement};
use crate::function_field::{lift_residue, Place};
use crate::poly::Polynomial;
use crate::quadratic::{parametrize, Parametrization, QuadFunction, QuadraticModel, Splitting};
use crate::ratfunc::RationalFunction;

/// Which divisor was used for `theta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DescentCase {
    /// `deg T` even, poles along a Galois-stable divisor of degree two.
    Even,
    /// `deg T` odd, all poles at a Galois-stable rational place.
    OddStablePoint,
    /// `deg T` odd and `S` a single place of degree two: `c = 1` with one
    /// double pole of `alpha`.
    Case2b,
    /// Same situation, `c = l sigma(l)` and only simple poles.
    Minimized,
}

impl DescentCase {
    pub fn tag(&self) -> &'static str {
        match self {
            DescentCase::Even => "even",
            DescentCase::OddStablePoint => "odd_stable_point",
            DescentCase::Case2b => "case_2b",
            DescentCase::Minimized => "case_2b_minimized",
        }
    }
}

/// Closure `K'`, places of `T`, and for each place the value `rho` of the
/// closure generator at the chosen place `P^-` above it (of `y / x` at
/// infinity). An optional norm-one twist applies to constant closures.
#[derive(Clone, Debug)]
pub struct DescentProblem {
    pub closure: QuadraticModel,
    pub places: Vec<Place>,
    pub rhos: Vec<FieldElement>,
    pub twist: Option<FieldElement>,
}

impl DescentProblem {
    /// Sign `+1` picks the square root returned by the splitting data, `-1`
    /// its negative.
    pub fn new(closure: QuadraticModel, places: Vec<Place>, signs: &[i8]) -> Result<DescentProblem> {
        if signs.len() != places.len() {
            bail!(InvalidInput, "{} signs for {} places", signs.len(), places.len());
        }
        let mut rhos = Vec::with_capacity(places.len());
        for (p, &s) in places.iter().zip(signs) {
            let rho = match closure.splitting(p)? {
                Splitting::Split { rho } => rho,
                _ => bail!(NoDescent, "place {p} does not split in the closure"),
            };
            rhos.push(if s < 0 { -&rho } else { rho });
        }
        DescentProblem::with_rhos(closure, places, rhos)
    }

    pub fn with_rhos(closure: QuadraticModel, places: Vec<Place>, rhos: Vec<FieldElement>) -> Result<DescentProblem> {
        if closure.field().characteristic() == 2 {
            bail!(Unsupported, "descent in characteristic 2");
        }
        if places.is_empty() {
            bail!(InvalidInput, "empty ramification locus");
        }
        if rhos.len() != places.len() {
            bail!(InvalidInput, "one sign choice per place required");
        }
        let mut sorted = places.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != places.len() {
            bail!(InvalidInput, "repeated place in T");
        }
        for (p, rho) in places.iter().zip(&rhos) {
            let Splitting::Split { rho: r0 } = closure.splitting(p)? else {
                bail!(NoDescent, "place {p} does not split in the closure");
            };
            if rho.field() != r0.field() || (rho != &r0 && rho != &-&r0) {
                bail!(InvalidInput, "{rho} is not a square root of the closure datum at {p}");
            }
        }
        Ok(DescentProblem { closure, places, rhos, twist: None })
    }

    pub fn with_twist(mut self, u: FieldElement) -> DescentProblem {
        self.twist = Some(u);
        self
    }

    pub fn degree(&self) -> usize {
        self.places.iter().map(Place::degree).sum()
    }
}

#[derive(Clone, Debug)]
pub struct DescentResult {
    /// `y^3 = 3 c y + alpha`.
    pub model: CubicModel,
    /// `theta = P + Q r`, `r` the closure generator.
    pub theta_p: RationalFunction,
    pub theta_q: RationalFunction,
    /// `f` in `K'` with `alpha = c (f + c / f)`.
    pub f: QuadFunction,
    /// The constant `f sigma(f)`.
    pub lambda: FieldElement,
    pub case: DescentCase,
}

impl DescentResult {
    pub fn alpha(&self) -> &RationalFunction {
        match &self.model {
            CubicModel::Impure { alpha, .. } => alpha,
            CubicModel::Pure { .. } => unreachable!("descents are impure"),
        }
    }

    pub fn c(&self) -> FieldElement {
        match &self.model {
            CubicModel::Impure { c, .. } => c.clone(),
            CubicModel::Pure { .. } => unreachable!("descents are impure"),
        }
    }
}

/// A descent exists iff `T` is nonempty and every place of `T` splits.
pub fn exists_descent(closure: &QuadraticModel, places: &[Place]) -> Result<bool> {
    if closure.field().characteristic() == 2 {
        bail!(Unsupported, "descent in characteristic 2");
    }
    if places.is_empty() {
        return Ok(false);
    }
    for p in places {
        if !matches!(closure.splitting(p)?, Splitting::Split { .. }) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Construct the descent. Odd `deg T` with `S` a single degree-two place uses
/// `c = 1` and a double pole; see [`construct_minimized`] for the variant with
/// simple poles.
pub fn construct(problem: &DescentProblem) -> Result<DescentResult> {
    if problem.closure.is_constant() {
        return construct_constant(problem);
    }
    if problem.twist.is_some() {
        bail!(InvalidInput, "nonconstant closures admit no twists");
    }
    let par = parametrize(&problem.closure)?;
    let k = problem.closure.field().clone();
    let deg_t = problem.degree();
    let ups = upstairs(&par, problem)?;
    let n = product_of(&k, &ups);
    let den_x = par.x_of_u.den().clone();
    let (theta_u, case) = if deg_t % 2 == 0 {
        (&n / &RationalFunction::from_poly(&den_x.pow((deg_t / 2) as u64)), DescentCase::Even)
    } else if let Some(q) = stable_branch_place(&problem.closure)? {
        let m = match stable_point(&par, &q)? {
            Some(g) => g.pow(deg_t as u64),
            None => Polynomial::one(&k),
        };
        (&n / &RationalFunction::from_poly(&m), DescentCase::OddStablePoint)
    } else {
        let i1 = odd_place_index(problem)?;
        let d1 = problem.places[i1].degree() as i64;
        let e = (deg_t as i64 - 3 * d1) / 2;
        let p1 = match &ups[i1] {
            Some(g) => RationalFunction::from_poly(&g.pow(3)),
            None => RationalFunction::one(&k),
        };
        let eta = RationalFunction::from_poly(&den_x).pow(-e)?;
        (&(&n * &eta) / &p1, DescentCase::Case2b)
    };
    let f_u = &par.sigma.apply(&theta_u)? / &theta_u;
    finish(&par, &theta_u, &f_u, &k.one(), case)
}

/// Odd `deg T` with `S` a single degree-two place: `f = l sigma(theta)/theta`
/// with `div l = kappa^- - kappa^+`, `c = l sigma(l)`, `alpha = c (f + c / f)`.
pub fn construct_minimized(problem: &DescentProblem) -> Result<DescentResult> {
    let closure = &problem.closure;
    if closure.is_constant() || stable_branch_place(closure)?.is_some() || problem.degree() % 2 == 0 {
        bail!(InvalidInput, "the minimized variant needs odd deg T and a single degree-two branch place");
    }
    let par = parametrize(closure)?;
    let k = closure.field().clone();
    let ups = upstairs(&par, problem)?;
    let n = product_of(&k, &ups);
    let (u0, u1) = moved_point(&par)?;
    let lin = |p: &Option<FieldElement>| match p {
        Some(a) => RationalFunction::from_poly(&Polynomial::linear(a)),
        None => RationalFunction::one(&k),
    };
    let ell = &lin(&u0) / &lin(&u1);
    let c = (&ell * &par.sigma.apply(&ell)?)
        .as_constant()
        .ok_or_else(|| Error::VerificationFailed("l sigma(l) is not constant".into()))?;
    let e = (problem.degree() as i64 + 1) / 2;
    let den_x = RationalFunction::from_poly(par.x_of_u.den());
    let theta_u = &(&lin(&u0) * &n) / &den_x.pow(e)?;
    let f_u = &ell * &(&par.sigma.apply(&theta_u)? / &theta_u);
    finish(&par, &theta_u, &f_u, &c, DescentCase::Minimized)
}

/// All `2^(t-1)` descents (first sign fixed), or none if some place of `T`
/// does not split.
pub fn enumerate_descents(closure: &QuadraticModel, places: &[Place]) -> Result<Vec<DescentResult>> {
    if !exists_descent(closure, places)? {
        return Ok(Vec::new());
    }
    let t = places.len();
    let mut out = Vec::with_capacity(1 << (t - 1));
    for i in 0u64..(1u64 << (t - 1)) {
        let mut signs = vec![1i8; t];
        for (j, s) in signs.iter_mut().enumerate().skip(1) {
            if (i >> (t - 1 - j)) & 1 == 1 {
                *s = -1;
            }
        }
        let pb = DescentProblem::new(closure.clone(), places.to_vec(), &signs)?;
        out.push(construct(&pb)?);
    }
    Ok(out)
}

/// Representatives of `N_1 / N_1^3`, `N_1` the norm-one elements of the
/// quadratic constant extension `k(sqrt d)` of a finite field. Elements are
/// returned in `k(sqrt d)` with generator `sqrt d`.
pub fn norm_one_reps(closure: &QuadraticModel) -> Result<Vec<FieldElement>> {
    let (q, _) = constant_extension(closure)?;
    let order = match q.base().and_then(|b| b.order_u64()) {
        Some(n) => n,
        None => bail!(Unsupported, "norm-one classes are enumerated over finite fields only"),
    };
    let one = q.one();
    if (order + 1) % 3 != 0 {
        return Ok(vec![one]);
    }
    let e_norm = BigUint::from(order + 1);
    let e_cube = BigUint::from((order + 1) / 3);
    for w in q.elements().skip(1) {
        if w.pow(&e_norm).is_one() && !w.pow(&e_cube).is_one() {
            let w2 = w.square();
            return Ok(vec![one, w, w2]);
        }
    }
    bail!(VerificationFailed, "no generator of N_1 / N_1^3 found")
}

/// Twists of the descent: a single model for nonconstant closures, one per
/// class of `N_1 / N_1^3` for constant ones.
pub fn twists_descent(problem: &DescentProblem) -> Result<Vec<CubicModel>> {
    if !problem.closure.is_constant() {
        return Ok(vec![construct(problem)?.model]);
    }
    let reps = norm_one_reps(&problem.closure)?;
    twists_descent_with(problem, &reps)
}

/// Twists by caller-supplied norm-one elements of `k(sqrt d)` (used over Q).
pub fn twists_descent_with(problem: &DescentProblem, units: &[FieldElement]) -> Result<Vec<CubicModel>> {
    units
        .iter()
        .map(|u| Ok(construct(&problem.clone().with_twist(u.clone()))?.model))
        .collect()
}

/// Serre's character sum for `S_3` with `s` transposition classes and `t`
/// 3-cycle classes, divided by `|S_3|` (covers have no automorphisms). For
/// `s = 0` the group is `Z/3` and the sum runs over all class assignments,
/// halved for the relabelling `g <-> g^2`.
pub fn serre_count(s: i64, t: i64) -> Result<BigRational> {
    if s < 0 || t < 1 {
        bail!(InvalidInput, "need s >= 0 and t >= 1");
    }
    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    if s == 0 {
        // Z/3: chi_j(g^a) = w^{j a}; sum_j w^{j m} = 3 [m = 0 mod 3].
        let mut counts = [BigInt::one(), BigInt::zero(), BigInt::zero()];
        for _ in 0..t {
            let mut next = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
            for (r, c) in counts.iter().enumerate() {
                next[(r + 1) % 3] += c;
                next[(r + 2) % 3] += c;
            }
            counts = next;
        }
        // (1/|G|) * |C|^n * 3 [sum = 0], summed over assignments
        let solutions = BigRational::from_integer(counts[0].clone()) * q(3) / q(3);
        return Ok(solutions / q(2));
    }
    // S_3 character table on (transposition, 3-cycle); dimensions 1, 1, 2.
    let table: [(i64, i64, i64); 3] = [(1, 1, 1), (-1, 1, 1), (0, -1, 2)];
    let n = s + t;
    let mut sum = BigRational::zero();
    for (tr, cy, dim) in table {
        let num = BigRational::from_integer(BigInt::from(tr).pow(s as u32) * BigInt::from(cy).pow(t as u32));
        let den = BigRational::from_integer(BigInt::from(dim)).pow((n - 2) as i32);
        sum += num / den;
    }
    let sizes = BigRational::from_integer(BigInt::from(3).pow(s as u32) * BigInt::from(2).pow(t as u32));
    let solutions = sizes * sum / q(6);
    Ok(solutions / q(6))
}

/// Random satisfiable problem over a finite field: a random genus-zero
/// closure and up to `max_places` distinct split places of degree at most 3,
/// with random signs.
pub fn random_problem<R: RngCore>(k: &Field, rng: &mut R, max_places: usize) -> Result<DescentProblem> {
    let closure = random_closure(k, rng)?;
    let want = 1 + (rng.next_u32() as usize) % max_places.max(1);
    let mut places: Vec<Place> = Vec::new();
    let mut tries = 0;
    while places.len() < want && tries < 200 {
        tries += 1;
        let d = 1 + (rng.next_u32() % 3) as usize;
        let cand = if rng.next_u32() % 8 == 0 {
            Place::Infinity
        } else {
            let mut c: Vec<FieldElement> = (0..d).map(|_| k.random_element(rng)).collect();
            c.push(k.one());
            let p = Polynomial::new(k, c);
            if !crate::factor::is_irreducible(&p)? {
                continue;
            }
            Place::Finite(p)
        };
        if places.contains(&cand) {
            continue;
        }
        if matches!(closure.splitting(&cand)?, Splitting::Split { .. }) {
            places.push(cand);
        }
    }
    if places.is_empty() {
        return random_problem(k, rng, max_places);
    }
    let signs: Vec<i8> = places.iter().map(|_| if rng.next_u32() & 1 == 0 { 1 } else { -1 }).collect();
    DescentProblem::new(closure, places, &signs)
}

fn random_closure<R: RngCore>(k: &Field, rng: &mut R) -> Result<QuadraticModel> {
    loop {
        let kind = rng.next_u32() % 4;
        let f = match kind {
            0 => Polynomial::constant(&k.smallest_nonsquare().expect("odd field")),
            1 => Polynomial::new(k, vec![k.random_element(rng), nonzero(k, rng)]),
            _ => Polynomial::new(k, vec![k.random_element(rng), k.random_element(rng), nonzero(k, rng)]),
        };
        if let Ok(m) = QuadraticModel::kummer(f) {
            return Ok(m);
        }
    }
}

fn nonzero<R: RngCore>(k: &Field, rng: &mut R) -> FieldElement {
    loop {
        let a = k.random_element(rng);
        if !a.is_zero() {
            return a;
        }
    }
}

// ---- constant closures -------------------------------------------------

fn constant_extension(closure: &QuadraticModel) -> Result<(Field, FieldElement)> {
    let QuadraticModel::Kummer { f } = closure else {
        bail!(InvalidInput, "closure is not a constant extension");
    };
    if f.degree() != Some(0) {
        bail!(InvalidInput, "closure is not a constant extension");
    }
    let k = f.field();
    let d = f.coeff(0);
    let modulus = Polynomial::new(k, vec![-&d, k.zero(), k.one()]);
    let q = Field::extension(&modulus)?;
    let r = q.generator().expect("extension");
    Ok((q, r))
}

fn construct_constant(problem: &DescentProblem) -> Result<DescentResult> {
    let closure = &problem.closure;
    let k = closure.field().clone();
    let (q, sd) = constant_extension(closure)?;
    let mut theta = Polynomial::one(&q);
    for (p, rho) in problem.places.iter().zip(&problem.rhos) {
        let Place::Finite(p) = p else {
            bail!(NoDescent, "infinity is inert in a constant extension");
        };
        let r = lift_residue(p, rho).embed(&q)?;
        let h = &Polynomial::constant(&sd) - &r;
        let g = p.embed(&q)?.gcd(&h)?;
        if 2 * g.degree().unwrap_or(0) != p.degree().unwrap_or(0) {
            bail!(VerificationFailed, "no conjugate factor of {p} with sqrt(d) = {rho}");
        }
        theta = &theta * &g;
    }
    let split = |i: usize| -> Polynomial {
        Polynomial::new(&k, theta.coeffs().iter().map(|c| c.coordinates()[i].clone()).collect())
    };
    let (tp, tq) = (RationalFunction::from_poly(&split(0)), RationalFunction::from_poly(&split(1)));
    let th = closure.element(tp.clone(), tq.clone());
    let mut f = th.conj().mul(&th.inv()?);
    if let Some(u) = &problem.twist {
        let u = q.embed(u)?;
        if !(&u * &conj_const(&u)).is_one() {
            bail!(InvalidInput, "twist parameter {u} does not have norm one");
        }
        let c = u.coordinates();
        let ue = closure.element(RationalFunction::constant(&c[0]), RationalFunction::constant(&c[1]));
        f = ue.mul(&f);
    }
    let one = k.one();
    let lambda = f.mul(&f.conj());
    let lambda = constant_of(&lambda)?;
    if !lambda.is_one() {
        bail!(VerificationFailed, "f sigma(f) = {lambda}");
    }
    let alpha = f.add(&f.inv()?);
    if !alpha.is_rational() {
        bail!(VerificationFailed, "f + 1/f is not in K");
    }
    let (alpha, f) = normalize_sign(alpha.a, f);
    Ok(DescentResult {
        model: CubicModel::impure(one, alpha)?,
        theta_p: tp,
        theta_q: tq,
        f,
        lambda,
        case: DescentCase::Even,
    })
}

fn conj_const(u: &FieldElement) -> FieldElement {
    let c = u.coordinates();
    let q = u.field();
    q.from_coordinates(&[c[0].clone(), -&c[1]]).expect("quadratic")
}

// ---- nonconstant closures ----------------------------------------------

type UPlace = Option<Polynomial>;

fn upstairs(par: &Parametrization, problem: &DescentProblem) -> Result<Vec<UPlace>> {
    problem
        .places
        .iter()
        .zip(&problem.rhos)
        .map(|(p, rho)| upstairs_place(par, p, rho))
        .collect()
}

/// The place of `k(u)` above `p` at which the closure generator takes the
/// value `rho`; `None` is the point at infinity of the `u`-line.
fn upstairs_place(par: &Parametrization, place: &Place, rho: &FieldElement) -> Result<UPlace> {
    let (fiber, h) = match place {
        Place::Finite(p) => {
            let fiber = RationalFunction::from_poly(p).compose(&par.x_of_u)?.num().clone();
            let r = RationalFunction::from_poly(&lift_residue(p, rho)).compose(&par.x_of_u)?;
            (fiber, &par.y_of_u - &r)
        }
        Place::Infinity => {
            let h = &(&par.y_of_u / &par.x_of_u) - &RationalFunction::constant(rho);
            (par.x_of_u.den().clone(), h)
        }
    };
    let g = fiber.gcd(h.num())?;
    let d = place.degree();
    match g.degree() {
        Some(n) if n == d => Ok(Some(g)),
        Some(0) if h.valuation_infinity().is_some_and(|v| v > 0) => Ok(None),
        _ => bail!(VerificationFailed, "no place above {place} with generator value {rho}"),
    }
}

/// The ramified rational place preferred for the odd case: infinity if it
/// is a branch point, else the smallest finite degree-one branch place.
fn stable_branch_place(closure: &QuadraticModel) -> Result<Option<Place>> {
    let s = closure.branch_places()?;
    if s.contains(&Place::Infinity) {
        return Ok(Some(Place::Infinity));
    }
    Ok(s.into_iter().filter(|p| p.degree() == 1).min())
}

/// The unique place of the `u`-line over a branch place.
fn stable_point(par: &Parametrization, q: &Place) -> Result<UPlace> {
    let n = match q {
        Place::Infinity => par.x_of_u.den().clone(),
        Place::Finite(p) => RationalFunction::from_poly(p).compose(&par.x_of_u)?.num().clone(),
    };
    if n.degree() == Some(2) {
        let g = n.gcd(&n.derivative())?;
        if g.degree() != Some(1) {
            bail!(VerificationFailed, "{q} is not ramified in the closure");
        }
        return Ok(Some(g));
    }
    Ok(None)
}

/// A rational point of the `u`-line moved by the involution, and its image.
fn moved_point(par: &Parametrization) -> Result<(Option<FieldElement>, Option<FieldElement>)> {
    let k = par.x_of_u.field();
    let mut cands: Vec<Option<FieldElement>> = Vec::new();
    if k.is_finite() {
        cands.extend(k.elements().map(Some));
    } else {
        cands.extend((0..64).map(|n| Some(k.from_i64(n))));
    }
    cands.push(None);
    for p in cands {
        let img = par.sigma.apply_point(&p);
        if img != p {
            return Ok((p, img));
        }
    }
    bail!(NoRationalPoint, "no rational point moved by the involution")
}

fn odd_place_index(problem: &DescentProblem) -> Result<usize> {
    problem
        .places
        .iter()
        .enumerate()
        .filter(|(_, p)| p.degree() % 2 == 1)
        .min_by(|(_, a), (_, b)| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)))
        .map(|(i, _)| i)
        .ok_or_else(|| Error::InvalidInput("odd deg T without a place of odd degree".into()))
}

fn product_of(k: &Field, ups: &[UPlace]) -> RationalFunction {
    let mut n = Polynomial::one(k);
    for g in ups.iter().flatten() {
        n = &n * g;
    }
    RationalFunction::from_poly(&n)
}

fn finish(
    par: &Parametrization,
    theta_u: &RationalFunction,
    f_u: &RationalFunction,
    c: &FieldElement,
    case: DescentCase,
) -> Result<DescentResult> {
    let lambda = (f_u * &par.sigma.apply(f_u)?)
        .as_constant()
        .ok_or_else(|| Error::VerificationFailed("f sigma(f) is not constant".into()))?;
    if &lambda != c {
        bail!(VerificationFailed, "f sigma(f) = {lambda}, expected {c}");
    }
    let cr = RationalFunction::constant(c);
    let alpha_u = &cr * &(f_u + &(&cr / f_u));
    let alpha = par.push(&alpha_u)?;
    if !alpha.is_rational() {
        bail!(VerificationFailed, "alpha is not fixed by the involution");
    }
    let theta = par.push(theta_u)?;
    let f = par.push(f_u)?;
    let (alpha, f) = normalize_sign(alpha.a, f);
    Ok(DescentResult {
        model: CubicModel::impure(c.clone(), alpha)?,
        theta_p: theta.a,
        theta_q: theta.b,
        f,
        lambda,
        case,
    })
}

fn constant_of(q: &QuadFunction) -> Result<FieldElement> {
    if !q.is_rational() {
        bail!(VerificationFailed, "expected a constant, got {q:?}");
    }
    q.a.as_constant().ok_or_else(|| Error::VerificationFailed("expected a constant".into()))
}

/// `y -> -y` changes `alpha` to `-alpha` (and `f` to `-f`). Pick the sign
/// whose numerator has the smaller leading coefficient (positive over Q).
fn normalize_sign(alpha: RationalFunction, f: QuadFunction) -> (RationalFunction, QuadFunction) {
    let lc = alpha.num().leading();
    let flip = if lc.field().is_finite() {
        -&lc < lc
    } else {
        lc.as_rational().is_some_and(|r| r < &BigRational::zero())
    };
    if !flip {
        return (alpha, f);
    }
    let minus = RationalFunction::constant(&-&lc.field().one());
    let g = f.mul(&f.rational(minus));
    (-alpha, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyzer::{analyze, purely_cubic_closure};
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn poly(k: &Field, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(k, c)
    }

    fn rf(k: &Field, n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(k, n), poly(k, d)).unwrap()
    }

    #[test]
    fn existence() {
        let k = Field::prime(5).unwrap();
        let c = QuadraticModel::kummer(poly(&k, &[2])).unwrap();
        assert!(!exists_descent(&c, &[Place::at(&k.zero())]).unwrap());
        assert!(exists_descent(&c, &[Place::Finite(poly(&k, &[2, 0, 1]))]).unwrap());
        let c = QuadraticModel::kummer(poly(&k, &[0, 1])).unwrap();
        assert!(exists_descent(&c, &[Place::at(&k.one())]).unwrap());
        assert!(!exists_descent(&c, &[]).unwrap());
    }

    #[test]
    fn constant_closure_matches_quadratic_family() {
        let k = Field::prime(5).unwrap();
        let c = QuadraticModel::kummer(poly(&k, &[2])).unwrap();
        let pb = DescentProblem::new(c, vec![Place::Finite(poly(&k, &[2, 0, 1]))], &[1]).unwrap();
        let r = construct(&pb).unwrap();
        assert_eq!(r.alpha(), &rf(&k, &[1, 0, 2], &[2, 0, 1]));
        assert_eq!(r.case, DescentCase::Even);
        assert!(r.lambda.is_one());
    }

    #[test]
    fn odd_degree_with_rational_branch_point() {
        let k = Field::prime(5).unwrap();
        let c = QuadraticModel::kummer(poly(&k, &[0, 1])).unwrap();
        let pb = DescentProblem::new(c.clone(), vec![Place::at(&k.one())], &[1]).unwrap();
        let r = construct(&pb).unwrap();
        assert_eq!(r.case, DescentCase::OddStablePoint);
        assert_eq!(r.alpha(), &rf(&k, &[2, 2], &[-1, 1]));
        let rep = analyze(&r.model).unwrap();
        assert_eq!(rep.total, vec![Place::at(&k.one())]);
        assert_eq!(rep.partial, vec![Place::at(&k.zero()), Place::Infinity]);
        assert_eq!(purely_cubic_closure(&r.model).unwrap(), c.class().unwrap());
    }

    #[test]
    fn single_quadratic_branch_place() {
        let k = Field::prime(5).unwrap();
        let c = QuadraticModel::kummer(poly(&k, &[-2, 0, 1])).unwrap();
        // x - 1: 1 - 2 = 4 is a square
        let t = vec![Place::at(&k.one())];
        let pb = DescentProblem::new(c.clone(), t.clone(), &[1]).unwrap();
        let r = construct(&pb).unwrap();
        assert_eq!(r.case, DescentCase::Case2b);
        assert!(r.c().is_one());
        assert_eq!(r.model_pole_orders(), vec![(t[0].clone(), -2)]);
        let m = construct_minimized(&pb).unwrap();
        assert_eq!(m.c(), k.from_i64(2));
        assert!(m.model_pole_orders().iter().all(|(_, v)| *v == -1));
        for res in [&r, &m] {
            let rep = analyze(&res.model).unwrap();
            assert_eq!(rep.total, t);
            assert_eq!(rep.partial, vec![Place::Finite(poly(&k, &[-2, 0, 1]))]);
            assert_eq!(purely_cubic_closure(&res.model).unwrap(), c.class().unwrap());
        }
    }

    impl DescentResult {
        fn model_pole_orders(&self) -> Vec<(Place, i64)> {
            crate::function_field::divisor_of(self.alpha())
                .unwrap()
                .terms()
                .filter(|(_, v)| **v < 0)
                .map(|(p, v)| (p.clone(), *v))
                .collect()
        }
    }

    #[test]
    fn round_trip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [5u64, 7, 11, 13] {
            let k = Field::prime(p).unwrap();
            for _ in 0..15 {
                let pb = random_problem(&k, &mut rng, 4).unwrap();
                let r = construct(&pb).unwrap();
                let rep = analyze(&r.model).unwrap();
                let mut t = pb.places.clone();
                t.sort();
                assert_eq!(rep.total, t, "{:?}", pb);
                assert_eq!(rep.partial, pb.closure.branch_places().unwrap());
                assert_eq!(purely_cubic_closure(&r.model).unwrap(), pb.closure.class().unwrap());
                let poles = r.model_pole_orders();
                let doubles = poles.iter().filter(|(_, v)| *v == -2).count();
                assert!(poles.iter().all(|(_, v)| *v >= -2));
                assert_eq!(doubles, usize::from(r.case == DescentCase::Case2b));
            }
        }
    }

    #[test]
    fn descent_counts() {
        let k = Field::prime(7).unwrap();
        let c = QuadraticModel::kummer(poly(&k, &[0, 1])).unwrap();
        let split: Vec<Place> = k
            .elements()
            .skip(1)
            .filter(|a| a.is_square())
            .map(|a| Place::at(&a))
            .collect();
        for t in 1..=split.len() {
            let all = enumerate_descents(&c, &split[..t]).unwrap();
            assert_eq!(all.len(), 1 << (t - 1));
            let mut alphas: Vec<_> = all.iter().map(|r| r.alpha().clone()).collect();
            alphas.sort_by_key(|a| alloc::format!("{a}"));
            alphas.dedup();
            assert_eq!(alphas.len(), all.len());
        }
        assert!(enumerate_descents(&c, &[Place::at(&k.from_i64(3))]).unwrap().is_empty());
    }

    #[test]
    fn global_sign_flip_gives_same_alpha() {
        let k = Field::prime(11).unwrap();
        let c = QuadraticModel::kummer(poly(&k, &[-3, 1, 1])).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let pb = random_problem(&k, &mut rng, 3).unwrap();
            let pb = DescentProblem::with_rhos(c.clone(), pb.places, pb.rhos).ok();
            let Some(pb) = pb else { continue };
            let flipped = DescentProblem::with_rhos(c.clone(), pb.places.clone(), pb.rhos.iter().map(|r| -r).collect()).unwrap();
            assert_eq!(construct(&pb).unwrap().alpha(), construct(&flipped).unwrap().alpha());
        }
    }

    #[test]
    fn twist_counts() {
        let k5 = Field::prime(5).unwrap();
        let c5 = QuadraticModel::kummer(poly(&k5, &[2])).unwrap();
        let pb = DescentProblem::new(c5.clone(), vec![Place::Finite(poly(&k5, &[2, 0, 1]))], &[1]).unwrap();
        let tw = twists_descent(&pb).unwrap();
        assert_eq!(tw.len(), 3);
        for m in &tw {
            assert_eq!(analyze(m).unwrap().total, pb.places);
        }
        let k7 = Field::prime(7).unwrap();
        let c7 = QuadraticModel::kummer(poly(&k7, &[3])).unwrap();
        assert_eq!(norm_one_reps(&c7).unwrap().len(), 1);
        let c = QuadraticModel::kummer(poly(&k5, &[0, 1])).unwrap();
        let pb = DescentProblem::new(c, vec![Place::at(&k5.one())], &[1]).unwrap();
        assert_eq!(twists_descent(&pb).unwrap().len(), 1);
    }

    #[test]
    fn serre() {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        assert_eq!(serre_count(2, 1).unwrap(), r(1));
        assert_eq!(serre_count(3, 1).unwrap(), r(0));
        assert_eq!(serre_count(0, 4).unwrap(), r(3));
        for t in 1..=8 {
            assert_eq!(serre_count(2, t).unwrap(), r(1 << (t - 1)));
            let pure = crate::pure_cubic::count_pure(0, t).unwrap();
            assert_eq!(serre_count(0, t).unwrap(), BigRational::from_integer(pure.into()));
        }
        assert_eq!(serre_count(4, 3).unwrap(), r(9 * 4));
    }
}
