//! Integer factorization, divisor enumeration and gcd.
//!
//! Factoring runs trial division up to [`TRIAL_BOUND`], then Brent's variant
//! of Pollard rho with fixed starting constants, so the output for a given
//! `n` never varies between runs. Primality of leftover cofactors is decided
//! by Miller-Rabin with fixed prime bases, which is deterministic (and exact)
//! below 3.3e24 and a strong probable-prime test above that.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial division stops at this bound and hands the cofactor to rho.
pub const TRIAL_BOUND: u64 = 1 << 16;

const MR_BASES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];
// The first twelve bases are a deterministic witness set for every n < 2^64.
const MR_BASES_U64: usize = 12;

const RHO_START: u64 = 2;
const RHO_INCREMENT: u64 = 1;
const RHO_BATCH: u64 = 128;

/// A prime `p` raised to a positive exponent `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub prime: BigUint,
    pub exponent: u32,
}

/// Canonical prime factorization of a positive integer.
///
/// Factors are sorted by strictly increasing prime; `n = 1` has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: BigUint,
    factors: Vec<PrimePower>,
}

impl Factorization {
    /// Factors a positive integer. Zero is rejected.
    pub fn of(n: &BigUint) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::NonPositive(BigInt::zero()));
        }
        let mut found = BTreeMap::new();
        factor_big(n.clone(), &mut found);
        let factors = found
            .into_iter()
            .map(|(prime, exponent)| PrimePower { prime, exponent })
            .collect();
        Ok(Factorization {
            n: n.clone(),
            factors,
        })
    }

    pub fn from_u64(n: u64) -> Result<Self> {
        Self::of(&BigUint::from(n))
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Number of distinct primes.
    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.factors.iter().map(|f| f.exponent)
    }

    /// `D = prod (k_i + 1)`, without enumerating anything.
    pub fn divisor_count(&self) -> BigUint {
        self.exponents().map(|k| BigUint::from(k) + 1u32).product()
    }

    /// The divisor count as a `u64`, if it fits.
    pub fn divisor_count_u64(&self) -> Option<u64> {
        self.exponents()
            .try_fold(1u64, |acc, k| acc.checked_mul(u64::from(k) + 1))
    }

    /// All positive divisors in ascending order.
    ///
    /// Refuses to enumerate when the divisor count exceeds `cap`.
    pub fn divisors(&self, cap: u64) -> Result<Vec<BigUint>> {
        let count = match self.divisor_count_u64() {
            Some(d) if d <= cap => d,
            _ => {
                return Err(Error::CapExceeded {
                    cap,
                    actual: self.divisor_count(),
                })
            }
        };
        let mut divisors = Vec::with_capacity(count as usize);
        divisors.push(BigUint::one());
        for PrimePower { prime, exponent } in &self.factors {
            let existing = divisors.len();
            let mut power = BigUint::one();
            for _ in 0..*exponent {
                power *= prime;
                for i in 0..existing {
                    let next = &divisors[i] * &power;
                    divisors.push(next);
                }
            }
        }
        divisors.sort_unstable();
        debug_assert_eq!(divisors.len() as u64, count);
        Ok(divisors)
    }

    /// Whether `d` divides `n`.
    pub fn is_divisor(&self, d: &BigUint) -> bool {
        !d.is_zero() && (&self.n % d).is_zero()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, PrimePower { prime, exponent }) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *exponent == 1 {
                write!(f, "{prime}")?;
            } else {
                write!(f, "{prime}^{exponent}")?;
            }
        }
        Ok(())
    }
}

/// Factors a signed integer, rejecting zero and negatives.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    match n.sign() {
        Sign::Plus => Factorization::of(n.magnitude()),
        _ => Err(Error::NonPositive(n.clone())),
    }
}

pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// Primality test. See the module docs for the exactness range.
pub fn is_prime(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => miller_rabin_big(n),
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES[..MR_BASES_U64] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (d, s) = odd_part(n - 1);
    'bases: for &a in &MR_BASES[..MR_BASES_U64] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_big(n: &BigUint) -> bool {
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let minus_one = n - &one;
    let s = minus_one.trailing_zeros().unwrap_or(0);
    let d = &minus_one >> s;
    'bases: for &a in MR_BASES.iter() {
        let a = BigUint::from(a);
        if (&a % n).is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn odd_part(mut m: u64) -> (u64, u32) {
    let s = m.trailing_zeros();
    m >>= s;
    (m, s)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
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

fn record<T: Into<BigUint>>(found: &mut BTreeMap<BigUint, u32>, p: T, times: u32) {
    *found.entry(p.into()).or_insert(0) += times;
}

fn factor_big(mut rest: BigUint, found: &mut BTreeMap<BigUint, u32>) {
    let mut d = 2u64;
    while rest.to_u64().is_none() && d <= TRIAL_BOUND {
        let mut times = 0;
        while (&rest % d).is_zero() {
            rest /= d;
            times += 1;
        }
        if times > 0 {
            record(found, d, times);
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if let Some(small) = rest.to_u64() {
        factor_u64(small, found);
        return;
    }
    split_big(rest, found);
}

fn split_big(m: BigUint, found: &mut BTreeMap<BigUint, u32>) {
    if m.is_one() {
        return;
    }
    if let Some(small) = m.to_u64() {
        split_u64(small, found);
        return;
    }
    if is_prime(&m) {
        record(found, m, 1);
        return;
    }
    // rho needs ~sqrt(p) steps to split p^k, so peel perfect powers first
    if let Some((root, k)) = perfect_power(&m) {
        let mut inner = BTreeMap::new();
        split_big(root, &mut inner);
        for (p, e) in inner {
            record(found, p, e * k);
        }
        return;
    }
    let factor = rho_big(&m);
    let cofactor = &m / &factor;
    split_big(factor, found);
    split_big(cofactor, found);
}

fn factor_u64(mut rest: u64, found: &mut BTreeMap<BigUint, u32>) {
    let mut d = 2u64;
    while d <= TRIAL_BOUND {
        if d.saturating_mul(d) > rest {
            if rest > 1 {
                record(found, rest, 1);
            }
            return;
        }
        let mut times = 0;
        while rest.is_multiple_of(d) {
            rest /= d;
            times += 1;
        }
        if times > 0 {
            record(found, d, times);
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    split_u64(rest, found);
}

fn split_u64(m: u64, found: &mut BTreeMap<BigUint, u32>) {
    if m == 1 {
        return;
    }
    if is_prime_u64(m) {
        record(found, m, 1);
        return;
    }
    if let Some((root, k)) = perfect_power(&BigUint::from(m)) {
        let mut inner = BTreeMap::new();
        split_u64(root.to_u64().expect("root of a u64"), &mut inner);
        for (p, e) in inner {
            record(found, p, e * k);
        }
        return;
    }
    let factor = rho_u64(m);
    split_u64(factor, found);
    split_u64(m / factor, found);
}

/// `m = root^k` with the largest such `k >= 2`, if any.
fn perfect_power(m: &BigUint) -> Option<(BigUint, u32)> {
    let bits = u32::try_from(m.bits()).ok()?;
    (2..=bits).rev().find_map(|k| {
        let root = m.nth_root(k);
        (root > BigUint::one() && &root.pow(k) == m).then_some((root, k))
    })
}

/// Returns a nontrivial factor of an odd composite `n`.
fn rho_u64(n: u64) -> u64 {
    let mut c = RHO_INCREMENT;
    loop {
        let step = |v: u64| (mul_mod(v, v, n) + c) % n;
        let (mut x, mut y, mut ys) = (RHO_START, RHO_START, RHO_START);
        let (mut g, mut q, mut r) = (1u64, 1u64, 1u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..RHO_BATCH.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += RHO_BATCH;
            }
            r *= 2;
        }
        if g == n {
            // the batched product collapsed; replay one step at a time
            loop {
                ys = step(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += RHO_INCREMENT;
    }
}

fn rho_big(n: &BigUint) -> BigUint {
    let abs_diff = |a: &BigUint, b: &BigUint| match a.cmp(b) {
        Ordering::Less => b - a,
        _ => a - b,
    };
    let mut c = BigUint::from(RHO_INCREMENT);
    loop {
        let step = |v: &BigUint| (v * v + &c) % n;
        let mut x = BigUint::from(RHO_START);
        let mut y = x.clone();
        let mut ys = x.clone();
        let mut g = BigUint::one();
        let mut q = BigUint::one();
        let mut r = 1u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..RHO_BATCH.min(r - k) {
                    y = step(&y);
                    q = (q * abs_diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += RHO_BATCH;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += RHO_INCREMENT;
    }
}
