//! Index values evaluated straight from the prime factorization.
//!
//! Write `n = p_1^k_1 ... p_r^k_r`, `D = prod (k_i + 1)` and
//! `P = prod (2 k_i + 1)`. Every divisor other than 1 shares a prime with
//! `n` itself, and 1 is adjacent to everything, so each distance in the graph
//! is 0, 1 or 2. All formulas below follow from splitting the `D(D-1)/2`
//! unordered pairs into the `|E| = (P - 1)/2` edges and the rest.
//!
//! Each function is O(r) big-integer operations.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arithmetic::Factorization;
use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::report::{IndexReport, Source};

fn product_over(f: &Factorization, term: impl Fn(u64) -> u64) -> BigUint {
    // u64 terms: k is a u32 so (k + 1)^2 + k cannot overflow
    f.exponents()
        .map(|k| BigUint::from(term(u64::from(k))))
        .product()
}

/// `P = prod (2k + 1)`, the number of ordered coprime divisor pairs.
pub fn coprime_pair_product(f: &Factorization) -> BigUint {
    product_over(f, |k| 2 * k + 1)
}

fn square_weight_product(f: &Factorization) -> BigUint {
    product_over(f, |k| (k + 1) * (k + 1) + k)
}

fn triple_product(f: &Factorization) -> BigUint {
    product_over(f, |k| 3 * k + 1)
}

fn exact_half(value: BigUint, what: &str) -> BigUint {
    let (half, rem) = value.div_rem(&BigUint::from(2u32));
    assert!(rem.is_zero(), "{what} is odd; halving would not be exact");
    half
}

/// `D(D - 1)`, twice the number of unordered vertex pairs.
fn ordered_pairs(f: &Factorization) -> BigUint {
    let d = f.divisor_count();
    &d * (&d - 1u32)
}

pub fn edge_count(f: &Factorization) -> BigUint {
    exact_half(coprime_pair_product(f) - 1u32, "P - 1")
}

/// Degree of the vertex `d`: the product of `k_i + 1` over the primes of `n`
/// that do not divide `d`, except that vertex 1 has degree `D - 1`.
pub fn degree(f: &Factorization, d: &BigUint) -> Result<BigUint> {
    if !f.is_divisor(d) {
        return Err(Error::NotADivisor {
            divisor: d.clone(),
            n: f.n().clone(),
        });
    }
    if d.is_one() {
        return Ok(f.divisor_count() - 1u32);
    }
    Ok(f.factors()
        .iter()
        .filter(|p| !(d % &p.prime).is_zero())
        .map(|p| BigUint::from(p.exponent) + 1u32)
        .product())
}

/// Sum of all vertex degrees, `P - 1`.
pub fn degree_sum(f: &Factorization) -> BigUint {
    coprime_pair_product(f) - 1u32
}

pub fn wiener(f: &Factorization) -> BigUint {
    ordered_pairs(f) - edge_count(f)
}

/// `(D(D-1) + P - 1) / 4`, reduced.
pub fn harary(f: &Factorization) -> ExactRational {
    let numerator = ordered_pairs(f) + coprime_pair_product(f) - 1u32;
    ExactRational::new(numerator, 4)
}

/// `3 D(D-1)/2 - P + 1`.
pub fn hyper_wiener(f: &Factorization) -> BigUint {
    let pairs = exact_half(ordered_pairs(f), "D(D - 1)");
    pairs * 3u32 + 1u32 - coprime_pair_product(f)
}

/// `prod ((k+1)^2 + k) - 2D + 1`.
pub fn zagreb_first(f: &Factorization) -> BigUint {
    square_weight_product(f) + 1u32 - f.divisor_count() * 2u32
}

/// `(D prod (3k+1) - 2P - D^2 + 2D) / 2`.
pub fn zagreb_second(f: &Factorization) -> BigUint {
    let d = f.divisor_count();
    let positive = &d * triple_product(f) + &d * 2u32;
    let negative = coprime_pair_product(f) * 2u32 + &d * &d;
    exact_half(positive - negative, "2 M2")
}

/// `(P - 1)^2 - M1 - M2`.
pub fn gutman(f: &Factorization) -> BigUint {
    let sum = degree_sum(f);
    &sum * &sum - zagreb_first(f) - zagreb_second(f)
}

/// `2(D - 1) P - prod ((k+1)^2 + k) + 1`.
pub fn schultz(f: &Factorization) -> BigUint {
    let d = f.divisor_count();
    (d - 1u32) * coprime_pair_product(f) * 2u32 + 1u32 - square_weight_product(f)
}

/// Sum of degree times eccentricity.
///
/// For `D >= 3` the centre has eccentricity 1 and every other vertex 2,
/// giving `2P - D - 1`. That expression is wrong for prime `n` (the graph is
/// a single edge, value 2), so `D <= 2` is dispatched separately.
pub fn eccentric_connectivity(f: &Factorization) -> BigUint {
    let d = f.divisor_count();
    if d.is_one() {
        return BigUint::zero();
    }
    if d == BigUint::from(2u32) {
        return BigUint::from(2u32);
    }
    coprime_pair_product(f) * 2u32 - d - 1u32
}

pub fn report(f: &Factorization) -> IndexReport {
    IndexReport {
        n: f.n().clone(),
        divisor_count: f.divisor_count(),
        edge_count: edge_count(f),
        degree_sum: degree_sum(f),
        wiener: wiener(f),
        harary: harary(f),
        hyper_wiener: hyper_wiener(f),
        zagreb1: zagreb_first(f),
        zagreb2: zagreb_second(f),
        gutman: gutman(f),
        schultz: schultz(f),
        eccentric_connectivity: eccentric_connectivity(f),
        diameter: None,
        source: Source::ClosedForm,
    }
}
