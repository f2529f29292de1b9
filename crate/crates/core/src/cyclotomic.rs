//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Values are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` after reduction
//! modulo the cyclotomic polynomial `Φ_N`. Binary operations lift both sides to
//! the lcm of their conductors. Rational values are always stored with
//! conductor 1.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::integer::{gcd, lcm};
use num::rational::BigRational;
use num::{Complex, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("{0} is not a rational integer")]
    NotAnInteger(String),
    #[error("{0} is not rational")]
    NotRational(String),
    #[error("cannot parse cyclotomic {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("conductor must be at least 1")]
    ZeroConductor,
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Coefficients (constant term first) of the monic cyclotomic polynomial `Φ_n`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_n = (x^n - 1) / Π_{d | n, d < n} Φ_d, by exact division.
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        let dd = den.len() - 1;
        let nd = num.len() - 1;
        let mut quot = vec![0i128; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = num[k + dd];
            quot[k] = c;
            if c != 0 {
                for (j, &b) in den.iter().enumerate() {
                    num[k + j] -= c * b as i128;
                }
            }
        }
        debug_assert!(num.iter().all(|&c| c == 0));
        num = quot;
    }
    let poly: Vec<i64> = num
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic polynomial coefficient overflow"))
        .collect();
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Reduces a polynomial (constant term first) modulo `Φ_n`.
fn reduce_mod_phi(mut a: Vec<BigRational>, n: u32) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for k in (deg..a.len()).rev() {
        if a[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut a[k], BigRational::zero());
        for (j, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                a[k - deg + j] -= &c * BigRational::from_integer(BigInt::from(p));
            }
        }
    }
    a.truncate(deg);
    a.resize(deg, BigRational::zero());
    a
}

/// An element of `Q(ζ_N)`, with `ζ_N = exp(2πi/N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// `Σ c_i ζ_N^{e_i}` for arbitrary integer exponents `e_i`.
    pub fn from_exponents<I>(conductor: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        assert!(conductor >= 1, "conductor must be at least 1");
        let mut full = vec![BigRational::zero(); conductor as usize];
        for (e, c) in terms {
            let i = e.rem_euclid(conductor as i64) as usize;
            full[i] += c;
        }
        Self::from_full(conductor, full)
    }

    /// From a vector of length `N` indexed by exponent.
    fn from_full(conductor: u32, full: Vec<BigRational>) -> Self {
        Self::normalized(conductor, reduce_mod_phi(full, conductor))
    }

    fn normalized(conductor: u32, mut coeffs: Vec<BigRational>) -> Self {
        if coeffs[1..].iter().all(Zero::is_zero) {
            coeffs.truncate(1);
            Cyclotomic {
                conductor: 1,
                coeffs,
            }
        } else {
            Cyclotomic { conductor, coeffs }
        }
    }

    /// `ζ_N^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::from_exponents(n, [(k, BigRational::one())])
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coordinates, length `φ(conductor)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The same value expressed with conductor `n`, a multiple of the current one.
    fn lifted_coeffs(&self, n: u32) -> Vec<BigRational> {
        if n == self.conductor {
            return self.coeffs.clone();
        }
        assert_eq!(n % self.conductor, 0, "conductor {n} is not a multiple of {}", self.conductor);
        let step = (n / self.conductor) as usize;
        let mut full = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[i * step] = c.clone();
        }
        reduce_mod_phi(full, n)
    }

    /// Coordinates in conductor `n` (a multiple of the current conductor).
    pub fn coeffs_in(&self, n: u32) -> Vec<BigRational> {
        self.lifted_coeffs(n)
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_integer()
    }

    pub fn as_rational(&self) -> Result<BigRational, CyclotomicError> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(CyclotomicError::NotRational(self.to_string()))
        }
    }

    pub fn as_integer(&self) -> Result<BigInt, CyclotomicError> {
        if self.is_integer() {
            Ok(self.coeffs[0].to_integer())
        } else {
            Err(CyclotomicError::NotAnInteger(self.to_string()))
        }
    }

    pub fn scalar_mul(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Image under the Galois automorphism `ζ_N ↦ ζ_N^k`, `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        assert_eq!(
            gcd(k.rem_euclid(n as i64), n as i64),
            1,
            "Galois exponent {k} is not a unit mod {n}"
        );
        Self::from_exponents(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 * k, c.clone())),
        )
    }

    /// Complex conjugate, i.e. `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_rational(self.coeffs[0].recip()));
        }
        // Extended Euclid in Q[x]: s·a + t·Φ = 1 gives a⁻¹ = s mod Φ.
        let n = self.conductor;
        let phi: Vec<BigRational> = cyclotomic_polynomial(n)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because Φ_n is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let mut full: Vec<BigRational> = s0.into_iter().map(|x| x * &c).collect();
        if full.len() < n as usize {
            full.resize(n as usize, BigRational::zero());
        }
        Some(Self::from_full(n, full))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Numerical value at `ζ_N = exp(2πi/N)`; diagnostics only.
    pub fn to_complex(&self) -> Complex<f64> {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / n;
                Complex::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }

    /// Lexicographic comparison of power-basis coordinates after lifting
    /// both values to a common conductor.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let n = lcm(self.conductor, other.conductor);
        self.lifted_coeffs(n).cmp(&other.lifted_coeffs(n))
    }

    fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn add_impl(a: &Cyclotomic, b: &Cyclotomic, negate_b: bool) -> Cyclotomic {
    let n = lcm(a.conductor, b.conductor);
    let mut x = a.lifted_coeffs(n);
    let y = b.lifted_coeffs(n);
    for (xi, yi) in x.iter_mut().zip(y) {
        if negate_b {
            *xi -= yi;
        } else {
            *xi += yi;
        }
    }
    Cyclotomic::normalized(n, x)
}

fn mul_impl(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    if a.is_rational() {
        return b.scalar_mul(&a.coeffs[0]);
    }
    if b.is_rational() {
        return a.scalar_mul(&b.coeffs[0]);
    }
    let n = lcm(a.conductor, b.conductor);
    let x = a.lifted_coeffs(n);
    let y = b.lifted_coeffs(n);
    let mut prod = vec![BigRational::zero(); x.len() + y.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                prod[i + j] += xi * yj;
            }
        }
    }
    Cyclotomic::normalized(n, reduce_mod_phi(prod, n))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        if self.is_rational() != other.is_rational() {
            return false;
        }
        let n = lcm(self.conductor, other.conductor);
        self.lifted_coeffs(n) == other.lifted_coeffs(n)
    }
}

impl Eq for Cyclotomic {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, |a: &Cyclotomic, b: &Cyclotomic| {
    mul_impl(a, &b.inv().expect("division by zero cyclotomic"))
});

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = add_impl(self, rhs, false);
    }
}

impl AddAssign for Cyclotomic {
    fn add_assign(&mut self, rhs: Cyclotomic) {
        *self = add_impl(self, &rhs, false);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = add_impl(self, rhs, true);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

/// `p/q`, or `p` when the denominator is 1.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(t.parse().ok()?)),
    }
}

/// Rationals print as `p/q`; everything else as `C<N>{i:c, …}` listing the
/// nonzero power-basis coordinates.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&format_rational(&self.coeffs[0]));
        }
        write!(f, "C{}{{", self.conductor)?;
        for (k, (i, c)) in self.nonzero_terms().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}:{}", format_rational(c))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclotomic {
    type Err = CyclotomicError;

    /// Accepts the [`Display`](fmt::Display) form; exponents may be any
    /// integers and are reduced.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| CyclotomicError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let Some(rest) = t.strip_prefix('C') else {
            return parse_rational(t)
                .map(Cyclotomic::from_rational)
                .ok_or_else(|| err("expected a rational p/q or C<N>{…}"));
        };
        let open = rest.find('{').ok_or_else(|| err("missing '{'"))?;
        let body = rest[open + 1..]
            .strip_suffix('}')
            .ok_or_else(|| err("missing '}'"))?;
        let n: u32 = rest[..open].trim().parse().map_err(|_| err("bad conductor"))?;
        if n == 0 {
            return Err(CyclotomicError::ZeroConductor);
        }
        let mut terms = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (e, c) = item.split_once(':').ok_or_else(|| err("expected exponent:coefficient"))?;
            let e: i64 = e.trim().parse().map_err(|_| err("bad exponent"))?;
            let c = parse_rational(c).ok_or_else(|| err("bad coefficient"))?;
            terms.push((e, c));
        }
        Ok(Cyclotomic::from_exponents(n, terms))
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    conductor: u32,
    coeffs: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CyclotomicJsonIn {
    Rational(String),
    Integer(i64),
    General(CyclotomicJson),
}

/// Rationals serialize as `"p/q"`; other values as
/// `{"conductor": N, "coeffs": {"i": "p/q", …}}`.
impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_rational() {
            return serializer.serialize_str(&format_rational(&self.coeffs[0]));
        }
        CyclotomicJson {
            conductor: self.conductor,
            coeffs: self
                .nonzero_terms()
                .map(|(i, c)| (i.to_string(), format_rational(c)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match CyclotomicJsonIn::deserialize(deserializer)? {
            CyclotomicJsonIn::Integer(n) => Ok(Cyclotomic::from_integer(n)),
            CyclotomicJsonIn::Rational(s) => parse_rational(&s)
                .map(Cyclotomic::from_rational)
                .ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))),
            CyclotomicJsonIn::General(j) => {
                if j.conductor == 0 {
                    return Err(D::Error::custom("conductor must be at least 1"));
                }
                let mut terms = Vec::new();
                for (e, c) in &j.coeffs {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
                    let c = parse_rational(c)
                        .ok_or_else(|| D::Error::custom(format!("bad rational {c:?}")))?;
                    terms.push((e, c));
                }
                Ok(Cyclotomic::from_exponents(j.conductor, terms))
            }
        }
    }
}

/// Exact `q = p/r` helper.
pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// True when `x` is a real number (fixed by complex conjugation).
pub fn is_real(x: &Cyclotomic) -> bool {
    x == &x.conj()
}

/// True when `x` is a nonnegative rational.
pub fn is_nonnegative_rational(x: &Cyclotomic) -> bool {
    x.is_rational() && !x.coeffs[0].is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    fn int(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in [9u32, 60, 105, 420, 2520] {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n) as usize);
        }
        // Φ_105 is the first with a coefficient other than 0, ±1
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn basic_reductions() {
        assert_eq!(&z(3, 1) * &z(3, 1), int(-1) - z(3, 1));
        let x = z(7, 3) + int(2);
        assert!((&x + &(-&x)).is_zero());
        assert_eq!(&z(4, 1) * &z(4, 1), int(-1));
        assert_eq!(z(3, 1) + z(3, 2), int(-1));
        assert_eq!(z(2, 1), int(-1));
        assert!(z(2, 1).is_rational());
        assert!(!z(9, 1).is_rational());
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(420, 140), z(3, 1));
        assert_eq!(z(9, -1), z(9, 8));
        assert_eq!(z(5, 5), int(1));
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(3, 1).conj(), z(3, 2));
        assert_eq!(z(3, 1).conj(), int(-1) - z(3, 1));
        let q = Cyclotomic::from_rational(rational(-5, 7));
        assert_eq!(q.conj(), q);
        let x = z(12, 5) + z(12, 1).scalar_mul(&rational(3, 2));
        assert_eq!(x.conj().conj(), x);
        assert!(is_real(&(z(5, 1) + z(5, 4))));
        assert!(!is_real(&z(3, 1)));
    }

    #[test]
    fn integrality_predicates() {
        assert!(int(3).is_integer());
        assert_eq!(int(-4).as_integer().unwrap(), BigInt::from(-4));
        assert!(Cyclotomic::from_rational(rational(1, 2)).as_integer().is_err());
        assert!(z(3, 1).as_integer().is_err());
        assert!((z(8, 1) + z(8, 7)).pow(2).is_integer());
    }

    #[test]
    fn inverses() {
        let x = z(9, 1) + int(2);
        assert_eq!(&x * &x.inv().unwrap(), int(1));
        assert!(int(0).inv().is_none());
        assert_eq!(int(4).inv().unwrap(), Cyclotomic::from_rational(rational(1, 4)));
        assert_eq!(int(1) / z(3, 1), z(3, 2));
        let y = z(420, 1) - z(420, 7).scalar_mul(&rational(2, 3));
        assert_eq!(&y * &y.inv().unwrap(), int(1));
    }

    #[test]
    fn text_forms() {
        for x in [
            int(0),
            int(-7),
            Cyclotomic::from_rational(rational(5, 12)),
            z(9, -1),
            z(420, 17) - z(3, 1).scalar_mul(&rational(1, 3)),
        ] {
            assert_eq!(x.to_string().parse::<Cyclotomic>().unwrap(), x);
        }
        assert_eq!("C3{0:-1,1:-1}".parse::<Cyclotomic>().unwrap(), z(3, 2));
        assert_eq!("C9{8:1}".parse::<Cyclotomic>().unwrap(), z(9, -1));
        assert_eq!(z(3, 2).to_string(), "C3{0:-1,1:-1}");
        assert!("C0{1:1}".parse::<Cyclotomic>().is_err());
        assert!("C3{x}".parse::<Cyclotomic>().is_err());
        assert!("1/0".parse::<Cyclotomic>().is_err());
    }

    #[test]
    fn json_forms() {
        let v = serde_json::to_value(z(9, -1)).unwrap();
        assert_eq!(v["conductor"], 9);
        let back: Cyclotomic = serde_json::from_value(v).unwrap();
        assert_eq!(back, z(9, -1));
        let legacy: Cyclotomic =
            serde_json::from_str(r#"{"conductor":9,"coeffs":{"8":"1"}}"#).unwrap();
        assert_eq!(legacy, z(9, 8));
        assert_eq!(serde_json::to_string(&int(3)).unwrap(), "\"3\"");
        let q: Cyclotomic = serde_json::from_str("\"-1/2\"").unwrap();
        assert_eq!(q, Cyclotomic::from_rational(rational(-1, 2)));
        let i: Cyclotomic = serde_json::from_str("2").unwrap();
        assert_eq!(i, int(2));
    }

    #[test]
    fn complex_embedding() {
        let w = z(3, 1).to_complex();
        assert!((w.re + 0.5).abs() < 1e-12);
        assert!((w.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    const CONDUCTORS: [u32; 9] = [1, 2, 3, 4, 6, 9, 12, 60, 420];

    fn arb_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
        (
            proptest::sample::select(CONDUCTORS.to_vec()),
            proptest::collection::vec((0i64..420, -5i64..=5, 1i64..=4), 0..5),
        )
            .prop_map(|(n, terms)| {
                Cyclotomic::from_exponents(n, terms.into_iter().map(|(e, p, q)| (e, rational(p, q))))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_cyclotomic(), b in arb_cyclotomic(), c in arb_cyclotomic()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &Cyclotomic::zero(), a.clone());
            prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
            // inversion runs Euclid over Q[x]; keep it to small conductors
            if !a.is_zero() && a.conductor() <= 60 {
                prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
            }
        }

        #[test]
        fn conj_is_an_involutive_ring_map(a in arb_cyclotomic(), b in arb_cyclotomic()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        }

        #[test]
        fn norm_is_nonnegative(a in arb_cyclotomic()) {
            let w = (&a * &a.conj()).to_complex();
            prop_assert!(w.re >= -1e-9);
            prop_assert!(w.im.abs() < 1e-9);
        }

        #[test]
        fn embedding_is_a_homomorphism(a in arb_cyclotomic(), b in arb_cyclotomic()) {
            let lhs = (&a * &b).to_complex();
            let rhs = a.to_complex() * b.to_complex();
            prop_assert!((lhs - rhs).norm() < 1e-6 * (1.0 + rhs.norm()));
        }

        #[test]
        fn text_round_trip(a in arb_cyclotomic()) {
            prop_assert_eq!(a.to_string().parse::<Cyclotomic>().unwrap(), a);
        }
    }
}
