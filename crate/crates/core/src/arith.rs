//! Exact elementary number theory on machine integers.
//!
//! Products are taken in `u128`, so every routine here is exact for moduli up
//! to `2^63`. Callers elsewhere in the crate restrict their inputs to
//! [`MAX_INPUT`].

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use num_integer::{Integer, Roots};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest modulus accepted by the symbol and construction routines.
pub const MAX_INPUT: u64 = 1 << 48;

/// Largest argument accepted by [`is_prime`] and [`factorize`].
pub const MAX_PRIMALITY: u64 = (1 << 63) - 1;

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

// Deterministic for every n < 3.3e24.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// The value of a residue symbol of coprime arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Converts a Jacobi value; `0` means the arguments were not coprime.
    pub fn from_jacobi(value: i8) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i8())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.to_i8())
    }
}

/// A prime `p >= 3`, checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(p: u64) -> Result<OddPrime> {
        if p > MAX_PRIMALITY {
            return Err(Error::OutOfRange {
                value: p.into(),
                max: MAX_PRIMALITY.into(),
            });
        }
        if p < 3 || !is_prime(p)? {
            return Err(Error::NotOddPrime(p));
        }
        Ok(OddPrime(p))
    }

    /// Skips the primality test; `p` must already be known to be an odd prime.
    pub(crate) fn new_unchecked(p: u64) -> OddPrime {
        debug_assert!(p >= 3 && is_prime(p).unwrap_or(false));
        OddPrime(p)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Errors unless `p ≡ 1 mod modulus`.
    pub fn require_one_mod(self, modulus: u64) -> Result<OddPrime> {
        if self.0 % modulus == 1 {
            Ok(self)
        } else {
            Err(Error::WrongResidueClass { p: self.0, modulus })
        }
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce(self, a: i128) -> u64 {
        a.rem_euclid(i128::from(self.0)) as u64
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Prime factorization with primes in strictly increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn value(&self) -> u128 {
        self.factors.iter().map(|&(p, e)| u128::from(p).pow(e)).product()
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64
}

fn pow_mod_u64(mut base: u64, mut e: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    acc
}

/// `a^e mod n` with the result in `[0, n)`. Negative bases are reduced first.
pub fn mod_pow(a: i64, e: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidModulus {
            m: 0,
            reason: "modulus must be positive",
        });
    }
    let base = i128::from(a).rem_euclid(i128::from(n)) as u64;
    Ok(pow_mod_u64(base, e, n))
}

fn miller_rabin(n: u64, witness: u64) -> bool {
    let d_shift = (n - 1).trailing_zeros();
    let d = (n - 1) >> d_shift;
    let mut x = pow_mod_u64(witness, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..d_shift {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &MR_WITNESSES {
        if n == w {
            return true;
        }
        if n.is_multiple_of(w) {
            return false;
        }
    }
    MR_WITNESSES.iter().all(|&w| miller_rabin(n, w))
}

/// Deterministic primality for `1 <= n <= 2^63 - 1`.
pub fn is_prime(n: u64) -> Result<bool> {
    if n == 0 || n > MAX_PRIMALITY {
        return Err(Error::OutOfRange {
            value: n.into(),
            max: MAX_PRIMALITY.into(),
        });
    }
    Ok(is_prime_u64(n))
}

// Brent's variant of Pollard rho; `n` must be odd and composite.
fn pollard_rho(n: u64) -> u64 {
    let f = |x: u64, c: u64| (mul_mod(x, x, n) + c) % n;
    for c in 1.. {
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys, c);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Complete factorization, primes ascending. `factorize(1)` is empty.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 || n > MAX_PRIMALITY {
        return Err(Error::OutOfRange {
            value: n.into(),
            max: MAX_PRIMALITY.into(),
        });
    }
    let mut rest = n;
    let mut primes = Vec::new();
    let push_all = |d: u64, rest: &mut u64, primes: &mut Vec<u64>| {
        while (*rest).is_multiple_of(d) {
            *rest /= d;
            primes.push(d);
        }
    };
    push_all(2, &mut rest, &mut primes);
    let mut d = 3;
    while d < TRIAL_DIVISION_LIMIT && d * d <= rest {
        push_all(d, &mut rest, &mut primes);
        d += 2;
    }
    if rest > 1 {
        if d * d > rest {
            primes.push(rest);
        } else {
            split_into(rest, &mut primes);
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { n, factors })
}

/// Jacobi symbol for nonnegative `a` and odd `n`, no checks.
pub(crate) fn jacobi_u64(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut t = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            t = -t;
        }
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: i128, n: i128) -> Result<i8> {
    if n <= 0 || n % 2 == 0 || n > i128::from(u64::MAX) {
        return Err(Error::BadJacobiModulus(n));
    }
    let reduced = a.rem_euclid(n) as u64;
    Ok(jacobi_u64(reduced, n as u64))
}

fn least_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&z| jacobi_u64(z, p) == -1)
        .expect("every odd prime has a quadratic nonresidue")
}

/// Square root modulo an odd prime by Tonelli-Shanks. Of the two roots the
/// smaller one is returned; the auxiliary nonresidue is the least one.
pub fn sqrt_mod_prime(a: i128, p: OddPrime) -> Result<u64> {
    let n = p.get();
    let a = p.reduce(a);
    match jacobi_u64(a, n) {
        0 => return Err(Error::Divisible { a: a.into(), p: n }),
        -1 => return Err(Error::NotQuadraticResidue { a: a.into(), p: n }),
        _ => {}
    }
    let twos = (n - 1).trailing_zeros();
    let odd = (n - 1) >> twos;
    let mut c = pow_mod_u64(least_nonresidue(n), odd, n);
    let mut t = pow_mod_u64(a, odd, n);
    let mut r = pow_mod_u64(a, odd.div_ceil(2), n);
    let mut m = twos;
    while t != 1 {
        let mut i = 0;
        let mut probe = t;
        while probe != 1 {
            probe = mul_mod(probe, probe, n);
            i += 1;
        }
        if i == m {
            return Err(Error::Invariant(format!("Tonelli-Shanks failed for {a} mod {n}")));
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = mul_mod(b, b, n);
        }
        m = i;
        c = mul_mod(b, b, n);
        t = mul_mod(t, c, n);
        r = mul_mod(r, b, n);
    }
    if mul_mod(r, r, n) != a {
        return Err(Error::Invariant(format!("bad square root {r} of {a} mod {n}")));
    }
    Ok(r.min(n - r))
}

/// Integer square root if `n` is a perfect square.
pub(crate) fn exact_sqrt(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

pub(crate) fn check_input(value: u64) -> Result<u64> {
    if value > MAX_INPUT {
        Err(Error::OutOfRange {
            value: value.into(),
            max: MAX_INPUT.into(),
        })
    } else {
        Ok(value)
    }
}
