//! Exact integer factorization for the large-prime reports: trial division up
//! to 10^6, Miller-Rabin primality testing, and a Pollard rho fallback for
//! any composite cofactor that survives trial division.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Miller-Rabin witnesses; deterministic for n < 3.3 * 10^24, which covers
/// every count produced at the sizes this crate enumerates.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller-Rabin primality test with a fixed witness set.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &b in &MR_BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &b in &MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho (Brent's cycle finding) for an odd composite with no factor
/// below the trial-division limit. Returns a nontrivial factor.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without a factor; retry with a new constant
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += &one;
    }
}

/// Full prime factorization as (prime, exponent) pairs with primes ascending.
/// Zero and one factor into nothing.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    if rest <= BigUint::one() {
        return factors;
    }
    let divide_out = |p: u64, rest: &mut BigUint, factors: &mut Vec<(BigUint, u32)>| {
        let p_big = BigUint::from(p);
        let mut e = 0;
        while (&*rest % &p_big).is_zero() {
            *rest /= &p_big;
            e += 1;
        }
        if e > 0 {
            factors.push((p_big, e));
        }
    };
    divide_out(2, &mut rest, &mut factors);
    let mut p = 3u64;
    while p <= TRIAL_LIMIT && BigUint::from(p) * BigUint::from(p) <= rest {
        divide_out(p, &mut rest, &mut factors);
        p += 2;
    }
    // Whatever survives is either 1, prime, or a composite with all prime
    // factors above the trial limit; split the latter with Pollard rho.
    let mut stack = Vec::new();
    if !rest.is_one() {
        stack.push(rest);
    }
    let mut large: Vec<BigUint> = Vec::new();
    while let Some(v) = stack.pop() {
        if is_probable_prime(&v) {
            large.push(v);
        } else {
            let d = pollard_rho(&v);
            stack.push(&v / &d);
            stack.push(d);
        }
    }
    large.sort();
    for v in large {
        match factors.last_mut() {
            Some((p, e)) if *p == v => *e += 1,
            _ => factors.push((v, 1)),
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    factors
}
