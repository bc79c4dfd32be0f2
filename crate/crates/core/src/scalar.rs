//! Exact field arithmetic over the rationals, prime fields F_p, and
//! cyclotomic fields Q(zeta_n).
//!
//! Every value is kept in a unique canonical form, so equality of field
//! elements is equality of representations. Cyclotomic elements are stored
//! in the power basis modulo the n-th cyclotomic polynomial. All identity
//! checks elsewhere in the crate reduce to exact scalar comparisons; there
//! are no tolerances anywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which exact field a scalar lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    /// F_p for a prime p < 2^32.
    PrimeField(u64),
    /// Q(zeta_n), elements reduced modulo the n-th cyclotomic polynomial.
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::PrimeField(p) => {
                if *p >= (1 << 32) {
                    return Err(Error::InvalidField(format!("prime {p} too large")));
                }
                if !is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
                Ok(())
            }
            FieldSpec::Cyclotomic(n) => {
                if *n == 0 {
                    Err(Error::InvalidField("cyclotomic index must be >= 1".into()))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
            FieldSpec::Cyclotomic(n) => write!(f, "QQ(zeta_{n})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Monic integer coefficients of the n-th cyclotomic polynomial, ascending,
/// including the leading 1. Computed by dividing x^n - 1 by the cyclotomic
/// polynomials of the proper divisors of n; results are cached.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // x^n - 1
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = divide_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials (ascending coefficients), assuming
/// the divisor is monic and divides evenly.
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, dc) in den.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

pub fn euler_phi(n: u32) -> u32 {
    (cyclotomic_polynomial(n).len() - 1) as u32
}

/// An exact field element. The variant identifies the field, so values are
/// self-describing; mixing fields is an error at module boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { p: u64, value: u64 },
    /// Coefficients of 1, zeta, zeta^2, ... of length phi(n) exactly.
    Cyclo { n: u32, coeffs: Vec<BigRational> },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod { p, .. } => FieldSpec::PrimeField(*p),
            Scalar::Cyclo { n, .. } => FieldSpec::Cyclotomic(*n),
        }
    }

    pub fn zero(field: &FieldSpec) -> Scalar {
        Scalar::from_integer(0, field)
    }

    pub fn one(field: &FieldSpec) -> Scalar {
        Scalar::from_integer(1, field)
    }

    pub fn from_integer(k: i64, field: &FieldSpec) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(k))),
            FieldSpec::PrimeField(p) => {
                let v = (BigInt::from(k) % BigInt::from(*p) + BigInt::from(*p)) % BigInt::from(*p);
                Scalar::Mod {
                    p: *p,
                    value: u64::try_from(v).unwrap(),
                }
            }
            FieldSpec::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); euler_phi(*n) as usize];
                coeffs[0] = BigRational::from(BigInt::from(k));
                Scalar::Cyclo { n: *n, coeffs }.reduced()
            }
        }
    }

    pub fn from_ratio(num: i64, den: i64, field: &FieldSpec) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = Scalar::from_integer(num, field);
        let d = Scalar::from_integer(den, field);
        n.div(&d)
    }

    /// The primitive n-th root of unity generating Cyclotomic(n).
    pub fn zeta(n: u32) -> Scalar {
        let phi = euler_phi(n) as usize;
        if phi == 1 {
            // zeta_1 = 1, zeta_2 = -1: constants in a degree-1 field.
            let c = if n == 1 { 1 } else { -1 };
            return Scalar::from_integer(c, &FieldSpec::Cyclotomic(n));
        }
        let mut coeffs = vec![BigRational::zero(); phi];
        coeffs[1] = BigRational::one();
        Scalar::Cyclo { n, coeffs }
    }

    /// Restores the canonical form invariant on a cyclotomic value.
    fn reduced(self) -> Scalar {
        match self {
            Scalar::Cyclo { n, mut coeffs } => {
                let phi = euler_phi(n) as usize;
                if coeffs.len() > phi {
                    let modulus = cyclotomic_polynomial(n);
                    let modulus: Vec<BigRational> =
                        modulus.into_iter().map(BigRational::from).collect();
                    for k in (phi..coeffs.len()).rev() {
                        let c = std::mem::replace(&mut coeffs[k], BigRational::zero());
                        if !c.is_zero() {
                            for (i, mc) in modulus.iter().enumerate().take(phi) {
                                coeffs[k - phi + i] -= &c * mc;
                            }
                        }
                    }
                }
                coeffs.resize(phi, BigRational::zero());
                Scalar::Cyclo { n, coeffs }
            }
            other => other,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Cyclo { coeffs, .. } => coeffs.iter().all(BigRational::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(&self.field())
    }

    fn check_same_field(&self, other: &Scalar) -> Result<()> {
        let (a, b) = (self.field(), other.field());
        if a != b {
            return Err(Error::FieldMismatch(a, b));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { p, value: a }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                p: *p,
                value: (a + b) % p,
            },
            (Scalar::Cyclo { n, coeffs: a }, Scalar::Cyclo { coeffs: b, .. }) => Scalar::Cyclo {
                n: *n,
                coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect(),
            },
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { p, value } => Scalar::Mod {
                p: *p,
                value: (p - value) % p,
            },
            Scalar::Cyclo { n, coeffs } => Scalar::Cyclo {
                n: *n,
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { p, value: a }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                p: *p,
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            (Scalar::Cyclo { n, coeffs: a }, Scalar::Cyclo { coeffs: b, .. }) => {
                let mut prod = vec![BigRational::zero(); a.len() + b.len()];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::Cyclo { n: *n, coeffs: prod }.reduced()
            }
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Mod { p, value } => Scalar::Mod {
                p: *p,
                value: mod_pow(*value, *p - 2, *p),
            },
            Scalar::Cyclo { n, coeffs } => {
                let modulus: Vec<BigRational> = cyclotomic_polynomial(*n)
                    .into_iter()
                    .map(BigRational::from)
                    .collect();
                let inv = poly_mod_inverse(coeffs, &modulus)?;
                Scalar::Cyclo { n: *n, coeffs: inv }.reduced()
            }
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Scalar::one(&self.field());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Embeds the value into a larger field. Rationals embed into any
    /// characteristic-zero field; Q(zeta_n) embeds into Q(zeta_N) when n | N
    /// via zeta_n -> zeta_N^(N/n). Never implicit: callers must ask.
    pub fn embed(&self, target: &FieldSpec) -> Result<Scalar> {
        if self.field() == *target {
            return Ok(self.clone());
        }
        match (self, target) {
            (Scalar::Rational(a), FieldSpec::Cyclotomic(n)) => {
                let mut coeffs = vec![BigRational::zero(); euler_phi(*n) as usize];
                coeffs[0] = a.clone();
                Ok(Scalar::Cyclo { n: *n, coeffs }.reduced())
            }
            (Scalar::Cyclo { n, coeffs }, FieldSpec::Cyclotomic(m)) if m % n == 0 => {
                let step = (m / n) as usize;
                let mut out = vec![BigRational::zero(); coeffs.len() * step + 1];
                for (k, c) in coeffs.iter().enumerate() {
                    out[k * step] = c.clone();
                }
                Ok(Scalar::Cyclo {
                    n: *m,
                    coeffs: out,
                }
                .reduced())
            }
            _ => Err(Error::FieldMismatch(self.field(), target.clone())),
        }
    }

    /// Multiplicative order when the value is a root of unity, else None.
    /// Only meaningful in characteristic zero; over F_p every nonzero value
    /// is torsion, which is why order-of-automorphism proofs of infinitude
    /// are restricted to characteristic 0.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) | Scalar::Cyclo { .. } => {
                // The torsion subgroup of Q(zeta_n)^x has order lcm(2, n).
                let bound = match self {
                    Scalar::Rational(_) => 2u64,
                    Scalar::Cyclo { n, .. } => (*n as u64).lcm(&2),
                    _ => unreachable!(),
                };
                let one = Scalar::one(&self.field());
                let mut acc = self.clone();
                for k in 1..=bound {
                    if acc == one {
                        return Some(k);
                    }
                    acc = acc.mul(self).ok()?;
                }
                None
            }
            Scalar::Mod { .. } => None,
        }
    }

    /// Canonical text form: integers, fractions `a/b`, and polynomials in
    /// `z` (the primitive root of the ambient cyclotomic field).
    pub fn render(&self) -> String {
        match self {
            Scalar::Rational(r) => render_rational(r),
            Scalar::Mod { value, .. } => value.to_string(),
            Scalar::Cyclo { coeffs, .. } => {
                let mut parts: Vec<String> = Vec::new();
                for (k, c) in coeffs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let mag = render_rational(&c.abs());
                    let body = match k {
                        0 => mag,
                        _ => {
                            let zpow = if k == 1 { "z".to_string() } else { format!("z^{k}") };
                            if c.abs().is_one() {
                                zpow
                            } else {
                                format!("{mag}*{zpow}")
                            }
                        }
                    };
                    if parts.is_empty() {
                        parts.push(if c.is_negative() {
                            format!("-{body}")
                        } else {
                            body
                        });
                    } else if c.is_negative() {
                        parts.push(format!("- {body}"));
                    } else {
                        parts.push(format!("+ {body}"));
                    }
                }
                if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" ")
                }
            }
        }
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Extended Euclid in Q[x]: returns u with u*a == 1 mod m. The modulus is
/// irreducible over Q, so any nonzero a is invertible.
fn poly_mod_inverse(a: &[BigRational], m: &[BigRational]) -> Result<Vec<BigRational>> {
    type Poly = Vec<BigRational>;
    fn deg(p: &Poly) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn rem_div(mut r: Poly, d: &Poly) -> (Poly, Poly) {
        let dd = deg(d).expect("division by zero polynomial");
        let lead = d[dd].clone();
        let mut q = vec![BigRational::zero(); r.len()];
        while let Some(rd) = deg(&r) {
            if rd < dd {
                break;
            }
            let c = &r[rd] / &lead;
            q[rd - dd] = c.clone();
            for (i, dc) in d.iter().enumerate().take(dd + 1) {
                let t = &c * dc;
                r[rd - dd + i] -= t;
            }
        }
        (q, r)
    }
    fn mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = vec![BigRational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        out
    }
    fn sub(a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] -= c;
        }
        out
    }

    // Invariant: r0 = s0*a (mod m), r1 = s1*a (mod m).
    let mut r0: Poly = m.to_vec();
    let mut r1: Poly = a.to_vec();
    let mut s0: Poly = vec![BigRational::zero()];
    let mut s1: Poly = vec![BigRational::one()];
    while deg(&r1).is_some() {
        let (q, r) = rem_div(r0.clone(), &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let d = deg(&r0).ok_or(Error::DivisionByZero)?;
    if d != 0 {
        // Cannot happen for an irreducible modulus.
        return Err(Error::DivisionByZero);
    }
    let lead = r0[0].clone();
    Ok(s0.into_iter().map(|c| c / &lead).collect())
}

/// Result of solving d^m = a inside the torsion subgroup, possibly after an
/// explicit field enlargement. The returned scalar carries the (possibly
/// enlarged) field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSolution {
    pub value: Scalar,
    pub field: FieldSpec,
}

/// Solves d^m = a exactly when a is a root of unity, enlarging the
/// cyclotomic field if needed. Stays in the current field whenever the
/// solution already lives there.
pub fn root_of_unity_solve(a: &Scalar, m: i64) -> Result<RootSolution> {
    if m == 0 {
        return Err(Error::ZeroExponent);
    }
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    match a.field() {
        FieldSpec::Rationals | FieldSpec::Cyclotomic(_) => {}
        other => return Err(Error::UnsupportedField(other)),
    }
    let order = a
        .root_of_unity_order()
        .ok_or_else(|| Error::NotRepresentable(a.render()))?;

    // Try the torsion subgroup of the current field first; enlarge only when
    // the congruence has no solution there.
    let current_n = match a.field() {
        FieldSpec::Cyclotomic(n) => n,
        _ => 1,
    };
    if let Some(sol) = solve_in_torsion(a, m, current_n)? {
        return Ok(RootSolution {
            field: sol.field(),
            value: sol,
        });
    }
    let enlarged = lcm_u64(current_n as u64, m.unsigned_abs() * order) as u32;
    let target = FieldSpec::Cyclotomic(enlarged);
    let lifted = a.embed(&target)?;
    let sol = solve_in_torsion(&lifted, m, enlarged)?
        .ok_or_else(|| Error::NotRepresentable(a.render()))?;
    Ok(RootSolution {
        field: sol.field(),
        value: sol,
    })
}

/// Solves d^m = a inside the torsion subgroup of Q(zeta_n) (order lcm(2, n),
/// generated by zeta_n for even n and by -zeta_n for odd n).
fn solve_in_torsion(a: &Scalar, m: i64, n: u32) -> Result<Option<Scalar>> {
    let torsion = lcm_u64(2, n as u64);
    let field = if n == 1 {
        a.field()
    } else {
        FieldSpec::Cyclotomic(n)
    };
    let generator = if n == 1 {
        Scalar::from_integer(-1, &field)
    } else if n.is_multiple_of(2) {
        Scalar::zeta(n).embed(&field)?
    } else {
        Scalar::zeta(n).neg().embed(&field)?
    };
    // Locate a = generator^j by direct scan; torsion groups here are small.
    let mut j = None;
    let mut acc = Scalar::one(&field);
    for k in 0..torsion {
        if acc == *a {
            j = Some(k);
            break;
        }
        acc = acc.mul(&generator)?;
    }
    let Some(j) = j else {
        return Ok(None);
    };
    // Solve m*x = j (mod torsion).
    let mm = (m.rem_euclid(torsion as i64)) as u64;
    let g = gcd_u64(mm, torsion);
    if g == 0 || j % g != 0 {
        return Ok(None);
    }
    let t = torsion / g;
    let inv = mod_inverse(mm / g, t).expect("coprime after dividing by gcd");
    let x = ((j / g) % t * inv) % t;
    Ok(Some(generator.pow(x as i64)?))
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> Scalar {
        Scalar::from_integer(k, &FieldSpec::Rationals)
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        let as_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_powers_cycle() {
        for n in [1u32, 2, 3, 4, 5, 6, 8, 12] {
            let z = Scalar::zeta(n);
            assert!(z.pow(n as i64).unwrap().is_one(), "zeta_{n}^{n} != 1");
            // Reducing twice equals reducing once: pow already reduces, so a
            // second explicit reduction must be the identity.
            let again = z.pow(n as i64).unwrap().reduced();
            assert!(again.is_one());
        }
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let z = Scalar::zeta(4);
        assert_eq!(z.mul(&z).unwrap(), Scalar::from_integer(-1, &FieldSpec::Cyclotomic(4)));
    }

    #[test]
    fn cyclotomic_inverse_is_exact() {
        let z = Scalar::zeta(12);
        let v = z.pow(7).unwrap().add(&Scalar::from_integer(3, &FieldSpec::Cyclotomic(12))).unwrap();
        let inv = v.inv().unwrap();
        assert!(v.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn prime_field_inverse() {
        let a = Scalar::from_integer(17, &FieldSpec::PrimeField(101));
        assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
        assert_eq!(Scalar::from_integer(-1, &FieldSpec::PrimeField(101)).render(), "100");
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = q(1);
        let b = Scalar::from_integer(1, &FieldSpec::PrimeField(7));
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn root_solve_identity_case() {
        let sol = root_of_unity_solve(&q(1), 5).unwrap();
        assert!(sol.value.is_one());
        assert_eq!(sol.field, FieldSpec::Rationals);
    }

    #[test]
    fn root_solve_minus_one_in_zeta4() {
        let minus_one = Scalar::from_integer(-1, &FieldSpec::Cyclotomic(4));
        let sol = root_of_unity_solve(&minus_one, 2).unwrap();
        assert_eq!(sol.field, FieldSpec::Cyclotomic(4));
        assert_eq!(sol.value, Scalar::zeta(4));
        assert_eq!(sol.value.pow(2).unwrap(), minus_one);
    }

    #[test]
    fn root_solve_rejects_non_torsion() {
        // Oracle: 2^k is never 1 for k up to the torsion bound of the field.
        assert!(matches!(
            root_of_unity_solve(&q(2), 2),
            Err(Error::NotRepresentable(_))
        ));
    }

    #[test]
    fn root_solve_enlarges_when_needed() {
        // Square root of zeta_4 requires zeta_8.
        let sol = root_of_unity_solve(&Scalar::zeta(4), 2).unwrap();
        assert_eq!(sol.field, FieldSpec::Cyclotomic(8));
        let back = sol.value.pow(2).unwrap();
        assert_eq!(back, Scalar::zeta(4).embed(&sol.field).unwrap());
    }

    #[test]
    fn root_solve_negative_exponent() {
        let z = Scalar::zeta(4);
        let sol = root_of_unity_solve(&z, -1).unwrap();
        assert_eq!(sol.value.pow(-1).unwrap(), z.embed(&sol.field).unwrap());
    }

    #[test]
    fn embedding_is_explicit_and_checked() {
        let z6 = Scalar::zeta(6);
        let lifted = z6.embed(&FieldSpec::Cyclotomic(12)).unwrap();
        assert_eq!(lifted, Scalar::zeta(12).pow(2).unwrap());
        assert!(z6.embed(&FieldSpec::Cyclotomic(8)).is_err());
    }

    #[test]
    fn render_canonical_forms() {
        assert_eq!(q(-5).div(&q(15)).unwrap().render(), "-1/3");
        assert_eq!(Scalar::zeta(4).render(), "z");
        assert_eq!(Scalar::zeta(8).pow(2).unwrap().render(), "z^2");
        let half_z = Scalar::zeta(4)
            .div(&Scalar::from_integer(2, &FieldSpec::Cyclotomic(4)))
            .unwrap();
        assert_eq!(half_z.render(), "1/2*z");
    }

    #[test]
    fn torsion_orders() {
        assert_eq!(q(1).root_of_unity_order(), Some(1));
        assert_eq!(q(-1).root_of_unity_order(), Some(2));
        assert_eq!(q(2).root_of_unity_order(), None);
        assert_eq!(Scalar::zeta(6).root_of_unity_order(), Some(6));
        assert_eq!(Scalar::zeta(5).neg().root_of_unity_order(), Some(10));
    }
}
