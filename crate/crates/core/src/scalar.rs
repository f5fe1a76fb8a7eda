//! Exact scalar arithmetic over the rationals, prime fields, and
//! cyclotomic extensions of the rationals.
//!
//! A [`FieldSpec`] names the field a scalar lives in. Cyclotomic fields
//! carry their defining polynomial behind an [`Arc`] so cloning a field
//! tag (which every scalar does) never recomputes it. Scalars of
//! mismatched fields cannot be combined: binary operations panic,
//! because mixing fields is a programming error rather than a data
//! error. Matrix-level entry points validate fields up front and report
//! [`Error::FieldMismatch`] instead.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// Deterministic Miller-Rabin, exact for all `u64`.
fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Some((t0.rem_euclid(p as i128)) as u64)
}

// Dense polynomials over the rationals, coefficients low degree first.
// A trimmed polynomial has a nonzero last coefficient; the zero
// polynomial is the empty vector.

fn poly_trimmed(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    poly_trimmed(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trimmed(out)
}

/// Long division; `den` must be trimmed and nonzero.
fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    debug_assert!(!den.is_empty());
    let mut rem = poly_trimmed(num.to_vec());
    let dlen = den.len();
    if rem.len() < dlen {
        return (Vec::new(), rem);
    }
    let lead = &den[dlen - 1];
    let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
    while rem.len() >= dlen {
        let shift = rem.len() - dlen;
        let coef = rem.last().expect("nonempty") / lead;
        for (i, d) in den.iter().enumerate().take(dlen - 1) {
            let t = d * &coef;
            rem[shift + i] -= t;
        }
        quot[shift] = coef;
        rem.pop();
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    (poly_trimmed(quot), rem)
}

/// The n-th cyclotomic polynomial, monic, low degree first.
///
/// Computed as (x^n - 1) / prod of earlier cyclotomic polynomials over
/// the proper divisors of n; the division is exact.
fn cyclotomic_polynomial(n: u64) -> Vec<BigRational> {
    debug_assert!(n >= 1);
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = poly_divmod(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

/// Returns b with a * b = 1 mod `modulus`, or None when a reduces to 0.
///
/// `modulus` must be irreducible for this to be total on nonzero input.
fn poly_inverse_mod(a: &[BigRational], modulus: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = poly_trimmed(modulus.to_vec());
    let mut r1 = poly_trimmed(a.to_vec());
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let ginv = r0[0].recip();
    let scaled: Vec<BigRational> = s0.iter().map(|c| c * &ginv).collect();
    let (_, rem) = poly_divmod(&scaled, modulus);
    Some(rem)
}

/// A cyclotomic field Q(zeta_n), carrying its defining polynomial.
#[derive(Clone)]
pub struct CycField {
    n: u64,
    modulus: Arc<Vec<BigRational>>,
}

impl CycField {
    /// Order of the root of unity adjoined.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Degree of the extension over the rationals.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Defining polynomial, monic, low degree first.
    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    /// Reduces arbitrary polynomial coefficients to the fixed-length
    /// representative of the residue class.
    fn reduce(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        let (_, mut rem) = poly_divmod(coeffs, &self.modulus);
        rem.resize(self.degree(), BigRational::zero());
        rem
    }
}

impl core::fmt::Debug for CycField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "CycField(n={})", self.n)
    }
}

/// Identifies the scalar field computations run over.
///
/// Equality looks only at the field parameters, never at the cached
/// defining polynomial, so it is cheap.
#[derive(Clone, Debug)]
pub enum FieldSpec {
    /// The rational numbers.
    Rationals,
    /// The integers modulo a prime.
    PrimeField(u64),
    /// A cyclotomic extension of the rationals.
    Cyclotomic(CycField),
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldSpec::Rationals, FieldSpec::Rationals) => true,
            (FieldSpec::PrimeField(p), FieldSpec::PrimeField(q)) => p == q,
            (FieldSpec::Cyclotomic(a), FieldSpec::Cyclotomic(b)) => a.n == b.n,
            _ => false,
        }
    }
}

impl Eq for FieldSpec {}

impl core::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
            FieldSpec::Cyclotomic(c) => write!(f, "Q(zeta_{})", c.n),
        }
    }
}

impl FieldSpec {
    /// The field of rational numbers.
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// The prime field with p elements. Fails when p is not prime.
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    /// The cyclotomic field Q(zeta_n). The defining polynomial is
    /// computed here, once, and shared by every scalar of the field.
    pub fn cyclotomic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "cyclotomic order must be at least 1".to_string(),
            ));
        }
        let modulus = cyclotomic_polynomial(n);
        Ok(FieldSpec::Cyclotomic(CycField {
            n,
            modulus: Arc::new(modulus),
        }))
    }

    /// 0 for the rationals and cyclotomic fields, p for prime fields.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub(crate) fn mismatch(&self, other: &FieldSpec) -> Error {
        Error::FieldMismatch {
            left: self.to_string(),
            right: other.to_string(),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Rational(BigRational),
    Mod(u64),
    Cyc(Vec<BigRational>),
}

/// An element of the field named by its [`FieldSpec`].
///
/// Prime field elements are reduced residues; cyclotomic elements are
/// coefficient vectors of fixed length equal to the extension degree.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactScalar {
    field: FieldSpec,
    repr: Repr,
}

impl ExactScalar {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::from_int(field, 1)
    }

    /// Image of an integer under the unique ring map from the integers.
    pub fn from_int(field: &FieldSpec, v: i64) -> Self {
        let repr = match field {
            FieldSpec::Rationals => Repr::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Repr::Mod((v as i128).rem_euclid(*p as i128) as u64),
            FieldSpec::Cyclotomic(c) => {
                let mut coeffs = vec![BigRational::zero(); c.degree()];
                coeffs[0] = BigRational::from_integer(BigInt::from(v));
                Repr::Cyc(coeffs)
            }
        };
        ExactScalar {
            field: field.clone(),
            repr,
        }
    }

    /// Image of a rational number. Fails over F_p when the denominator
    /// is divisible by p.
    pub fn from_big_rational(field: &FieldSpec, q: BigRational) -> Result<Self> {
        let repr = match field {
            FieldSpec::Rationals => Repr::Rational(q),
            FieldSpec::PrimeField(p) => {
                let pb = BigInt::from(*p);
                let num = ((q.numer() % &pb) + &pb) % &pb;
                let den = ((q.denom() % &pb) + &pb) % &pb;
                let num = num.to_u64().expect("reduced residue fits u64");
                let den = den.to_u64().expect("reduced residue fits u64");
                let dinv = inv_mod(den, *p).ok_or_else(|| {
                    Error::InvalidParameter(format!("denominator of {q} is zero in F_{p}"))
                })?;
                Repr::Mod(mul_mod(num, dinv, *p))
            }
            FieldSpec::Cyclotomic(c) => {
                let mut coeffs = vec![BigRational::zero(); c.degree()];
                coeffs[0] = q;
                Repr::Cyc(coeffs)
            }
        };
        Ok(ExactScalar {
            field: field.clone(),
            repr,
        })
    }

    /// Cyclotomic element from polynomial coefficients in the adjoined
    /// root, low degree first; longer inputs are reduced.
    pub fn from_coeffs(field: &FieldSpec, coeffs: &[BigRational]) -> Result<Self> {
        let FieldSpec::Cyclotomic(c) = field else {
            return Err(Error::InvalidParameter(format!(
                "coefficient vectors only describe cyclotomic scalars, not {field}"
            )));
        };
        Ok(ExactScalar {
            field: field.clone(),
            repr: Repr::Cyc(c.reduce(coeffs)),
        })
    }

    /// Residue class in a prime field.
    pub fn from_residue(field: &FieldSpec, r: u64) -> Result<Self> {
        let FieldSpec::PrimeField(p) = field else {
            return Err(Error::InvalidParameter(format!(
                "residues only describe prime field scalars, not {field}"
            )));
        };
        Ok(ExactScalar {
            field: field.clone(),
            repr: Repr::Mod(r % p),
        })
    }

    /// The adjoined root of unity of a cyclotomic field.
    pub fn zeta(field: &FieldSpec) -> Result<Self> {
        let FieldSpec::Cyclotomic(c) = field else {
            return Err(Error::InvalidParameter(format!(
                "{field} has no adjoined root of unity"
            )));
        };
        let mut coeffs = vec![BigRational::zero(); c.degree() + 1];
        coeffs[1] = BigRational::one();
        Ok(ExactScalar {
            field: field.clone(),
            repr: Repr::Cyc(c.reduce(&coeffs)),
        })
    }

    /// A primitive n-th root of unity in the field, when one exists.
    ///
    /// Over the rationals only n = 1, 2 succeed. Over Q(zeta_m) the
    /// root is zeta_m^(m/n) when n divides m; n = 1, 2 always succeed.
    /// Over F_p a root exists exactly when n divides p - 1.
    pub fn primitive_root_of_unity(field: &FieldSpec, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "root of unity order must be at least 1".to_string(),
            ));
        }
        if n == 1 {
            return Ok(Self::one(field));
        }
        if n == 2 && field.characteristic() != 2 {
            return Ok(Self::from_int(field, -1));
        }
        let no_root = || Error::NoPrimitiveRoot {
            n,
            field: field.to_string(),
        };
        match field {
            FieldSpec::Rationals => Err(no_root()),
            FieldSpec::Cyclotomic(c) => {
                if c.n % n != 0 {
                    return Err(no_root());
                }
                Ok(Self::zeta(field)?.pow(c.n / n))
            }
            FieldSpec::PrimeField(p) => {
                if n == 2 {
                    // p = 2: only the trivial root exists.
                    return Err(no_root());
                }
                if (*p - 1) % n != 0 {
                    return Err(no_root());
                }
                let mut prime_factors: Vec<u64> = Vec::new();
                let mut m = n;
                let mut q = 2;
                while q * q <= m {
                    if m % q == 0 {
                        prime_factors.push(q);
                        while m % q == 0 {
                            m /= q;
                        }
                    }
                    q += 1;
                }
                if m > 1 {
                    prime_factors.push(m);
                }
                for a in 2..*p {
                    let c = pow_mod(a, (*p - 1) / n, *p);
                    if c == 1 {
                        continue;
                    }
                    if prime_factors.iter().all(|q| pow_mod(c, n / q, *p) != 1) {
                        return Ok(ExactScalar {
                            field: field.clone(),
                            repr: Repr::Mod(c),
                        });
                    }
                }
                Err(no_root())
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_zero(),
            Repr::Mod(r) => *r == 0,
            Repr::Cyc(c) => c.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_one(),
            Repr::Mod(r) => *r == 1,
            Repr::Cyc(c) => c[0].is_one() && c[1..].iter().all(Zero::is_zero),
        }
    }

    /// View as a rational number, when the field is the rationals.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// View as a reduced residue, when the field is a prime field.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(r) => Some(*r),
            _ => None,
        }
    }

    /// View as cyclotomic coefficients, low degree first.
    pub fn as_coeffs(&self) -> Option<&[BigRational]> {
        match &self.repr {
            Repr::Cyc(c) => Some(c),
            _ => None,
        }
    }

    fn check_same_field(&self, other: &ExactScalar) {
        assert!(
            self.field == other.field,
            "scalar field mismatch: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &ExactScalar) -> ExactScalar {
        self.check_same_field(other);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                Repr::Mod(add_mod(*a, *b, self.field.characteristic()))
            }
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                Repr::Cyc(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!("matching fields imply matching representations"),
        };
        ExactScalar {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn sub(&self, other: &ExactScalar) -> ExactScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExactScalar {
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(-a),
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Repr::Mod((p - a) % p)
            }
            Repr::Cyc(a) => Repr::Cyc(a.iter().map(|x| -x).collect()),
        };
        ExactScalar {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn mul(&self, other: &ExactScalar) -> ExactScalar {
        self.check_same_field(other);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                Repr::Mod(mul_mod(*a, *b, self.field.characteristic()))
            }
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                let FieldSpec::Cyclotomic(c) = &self.field else {
                    unreachable!("cyclotomic representation implies cyclotomic field");
                };
                Repr::Cyc(c.reduce(&poly_mul(a, b)))
            }
            _ => unreachable!("matching fields imply matching representations"),
        };
        ExactScalar {
            field: self.field.clone(),
            repr,
        }
    }

    /// Multiplicative inverse; None for zero.
    pub fn inv(&self) -> Option<ExactScalar> {
        let repr = match &self.repr {
            Repr::Rational(a) => {
                if a.is_zero() {
                    return None;
                }
                Repr::Rational(a.recip())
            }
            Repr::Mod(a) => Repr::Mod(inv_mod(*a, self.field.characteristic())?),
            Repr::Cyc(a) => {
                let FieldSpec::Cyclotomic(c) = &self.field else {
                    unreachable!("cyclotomic representation implies cyclotomic field");
                };
                let mut inv = poly_inverse_mod(a, c.modulus())?;
                inv.resize(c.degree(), BigRational::zero());
                Repr::Cyc(inv)
            }
        };
        Some(ExactScalar {
            field: self.field.clone(),
            repr,
        })
    }

    /// Quotient; None when `other` is zero.
    pub fn div(&self, other: &ExactScalar) -> Option<ExactScalar> {
        Some(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut exp: u64) -> ExactScalar {
        let mut base = self.clone();
        let mut acc = ExactScalar::one(&self.field);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }
}

impl core::ops::Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::add(self, rhs)
    }
}

impl core::ops::Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::sub(self, rhs)
    }
}

impl core::ops::Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::mul(self, rhs)
    }
}

impl core::ops::Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::neg(self)
    }
}

impl core::fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match &self.repr {
            Repr::Rational(q) => write!(f, "{q}"),
            Repr::Mod(r) => write!(f, "{r} mod {}", self.field.characteristic()),
            Repr::Cyc(coeffs) => {
                if coeffs.iter().all(Zero::is_zero) {
                    return f.write_str("0");
                }
                let mut first = true;
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mag = c.abs();
                    if first {
                        if c.is_negative() {
                            f.write_str("-")?;
                        }
                        first = false;
                    } else if c.is_negative() {
                        f.write_str(" - ")?;
                    } else {
                        f.write_str(" + ")?;
                    }
                    if k == 0 {
                        write!(f, "{mag}")?;
                    } else {
                        if !mag.is_one() {
                            write!(f, "{mag}*")?;
                        }
                        f.write_str("z")?;
                        if k > 1 {
                            write!(f, "^{k}")?;
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

impl core::fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly_of_ints(v: &[i64]) -> Vec<BigRational> {
        v.iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect()
    }

    #[test]
    fn cyclotomic_polynomials_small_orders() {
        let table: &[(u64, &[i64])] = &[
            (1, &[-1, 1]),
            (2, &[1, 1]),
            (3, &[1, 1, 1]),
            (4, &[1, 0, 1]),
            (5, &[1, 1, 1, 1, 1]),
            (6, &[1, -1, 1]),
            (8, &[1, 0, 0, 0, 1]),
            (9, &[1, 0, 0, 1, 0, 0, 1]),
            (12, &[1, 0, -1, 0, 1]),
        ];
        for (n, coeffs) in table {
            assert_eq!(
                cyclotomic_polynomial(*n),
                poly_of_ints(coeffs),
                "order {n}"
            );
        }
    }

    #[test]
    fn primality_check() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(97).is_ok());
        assert!(FieldSpec::prime_field(2305843009213693951).is_ok());
        assert!(FieldSpec::prime_field(0).is_err());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(4).is_err());
        assert!(FieldSpec::prime_field(3599).is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let q = FieldSpec::rationals();
        let half = ExactScalar::from_big_rational(&q, rat(1, 2)).unwrap();
        let third = ExactScalar::from_big_rational(&q, rat(1, 3)).unwrap();
        let sum = &half + &third;
        assert_eq!(sum.as_rational().unwrap(), &rat(5, 6));
        let prod = &half * &third;
        assert_eq!(prod.as_rational().unwrap(), &rat(1, 6));
        let inv = ExactScalar::from_big_rational(&q, rat(-2, 5))
            .unwrap()
            .inv()
            .unwrap();
        assert_eq!(inv.as_rational().unwrap(), &rat(-5, 2));
        assert!(ExactScalar::zero(&q).inv().is_none());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        let a = ExactScalar::from_int(&f7, 3);
        let b = ExactScalar::from_int(&f7, 5);
        assert_eq!((&a + &b).as_residue(), Some(1));
        assert_eq!((&a * &b).as_residue(), Some(1));
        assert_eq!(a.inv().unwrap().as_residue(), Some(5));
        assert_eq!(a.pow(6).as_residue(), Some(1));
        assert!(ExactScalar::zero(&f7).inv().is_none());
        assert_eq!(ExactScalar::from_int(&f7, -1).as_residue(), Some(6));
    }

    #[test]
    fn rational_embeds_in_prime_field() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let half = ExactScalar::from_big_rational(&f5, rat(1, 2)).unwrap();
        assert_eq!(half.as_residue(), Some(3));
        assert!(ExactScalar::from_big_rational(&f5, rat(1, 5)).is_err());
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let f = FieldSpec::cyclotomic(4).unwrap();
        let z = ExactScalar::zeta(&f).unwrap();
        assert_eq!(&z * &z, ExactScalar::from_int(&f, -1));
        assert_eq!(z.pow(4), ExactScalar::one(&f));
    }

    #[test]
    fn zeta6_powers() {
        let f = FieldSpec::cyclotomic(6).unwrap();
        let z = ExactScalar::zeta(&f).unwrap();
        assert_eq!(z.pow(6), ExactScalar::one(&f));
        assert_eq!(z.pow(3), ExactScalar::from_int(&f, -1));
        let cube_root = z.pow(2);
        assert_ne!(cube_root, ExactScalar::one(&f));
        assert_eq!(cube_root.pow(3), ExactScalar::one(&f));
    }

    #[test]
    fn cyclotomic_inverse() {
        let f = FieldSpec::cyclotomic(4).unwrap();
        let z = ExactScalar::zeta(&f).unwrap();
        let one = ExactScalar::one(&f);
        let u = &one + &z;
        assert_eq!(&u * &u.inv().unwrap(), one);
        assert!(ExactScalar::zero(&f).inv().is_none());
    }

    #[test]
    fn low_order_cyclotomic_fields_degenerate_to_rationals() {
        let f1 = FieldSpec::cyclotomic(1).unwrap();
        assert_eq!(ExactScalar::zeta(&f1).unwrap(), ExactScalar::one(&f1));
        let f2 = FieldSpec::cyclotomic(2).unwrap();
        assert_eq!(
            ExactScalar::zeta(&f2).unwrap(),
            ExactScalar::from_int(&f2, -1)
        );
    }

    #[test]
    fn primitive_roots_over_rationals() {
        let q = FieldSpec::rationals();
        assert_eq!(
            ExactScalar::primitive_root_of_unity(&q, 1).unwrap(),
            ExactScalar::one(&q)
        );
        assert_eq!(
            ExactScalar::primitive_root_of_unity(&q, 2).unwrap(),
            ExactScalar::from_int(&q, -1)
        );
        assert!(matches!(
            ExactScalar::primitive_root_of_unity(&q, 3),
            Err(Error::NoPrimitiveRoot { n: 3, .. })
        ));
    }

    #[test]
    fn primitive_roots_in_prime_fields() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        let r = ExactScalar::primitive_root_of_unity(&f7, 3).unwrap();
        assert_eq!(r.pow(3), ExactScalar::one(&f7));
        assert_ne!(r, ExactScalar::one(&f7));
        assert!(ExactScalar::primitive_root_of_unity(&f7, 4).is_err());
        let f13 = FieldSpec::prime_field(13).unwrap();
        let i = ExactScalar::primitive_root_of_unity(&f13, 4).unwrap();
        assert_eq!(&i * &i, ExactScalar::from_int(&f13, -1));
    }

    #[test]
    fn primitive_roots_in_cyclotomic_fields() {
        let f12 = FieldSpec::cyclotomic(12).unwrap();
        let r = ExactScalar::primitive_root_of_unity(&f12, 4).unwrap();
        assert_eq!(r.pow(4), ExactScalar::one(&f12));
        assert_ne!(r.pow(2), ExactScalar::one(&f12));
        let f3 = FieldSpec::cyclotomic(3).unwrap();
        assert_eq!(
            ExactScalar::primitive_root_of_unity(&f3, 2).unwrap(),
            ExactScalar::from_int(&f3, -1)
        );
        assert!(ExactScalar::primitive_root_of_unity(&f3, 4).is_err());
    }

    #[test]
    fn display_formats() {
        let q = FieldSpec::rationals();
        assert_eq!(
            alloc::format!("{}", ExactScalar::from_big_rational(&q, rat(-1, 2)).unwrap()),
            "-1/2"
        );
        let f7 = FieldSpec::prime_field(7).unwrap();
        assert_eq!(
            alloc::format!("{}", ExactScalar::from_int(&f7, 5)),
            "5 mod 7"
        );
        let f4 = FieldSpec::cyclotomic(4).unwrap();
        let one = ExactScalar::one(&f4);
        let z = ExactScalar::zeta(&f4).unwrap();
        let half = ExactScalar::from_big_rational(&f4, rat(1, 2)).unwrap();
        let expr = &one - &(&half * &z);
        assert_eq!(alloc::format!("{expr}"), "1 - 1/2*z");
        assert_eq!(alloc::format!("{}", ExactScalar::zero(&f4)), "0");
        let f8 = FieldSpec::cyclotomic(8).unwrap();
        let z2 = ExactScalar::zeta(&f8).unwrap().pow(2);
        assert_eq!(alloc::format!("{z2}"), "z^2");
    }

    #[test]
    #[should_panic(expected = "scalar field mismatch")]
    fn mixing_fields_panics() {
        let q = FieldSpec::rationals();
        let f7 = FieldSpec::prime_field(7).unwrap();
        let _ = &ExactScalar::one(&q) + &ExactScalar::one(&f7);
    }
}
