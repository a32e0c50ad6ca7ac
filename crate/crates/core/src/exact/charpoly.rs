//! Characteristic polynomials of integer (and rational) matrices.
//!
//! The integer kernel reduces the matrix to Hessenberg form modulo a series
//! of 62-bit primes and reconstructs the coefficients by Chinese remaindering.
//! Enough primes are taken to exceed twice a Hadamard-type bound on every
//! coefficient, so the symmetric residue is the exact integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{ExactError, ExactMatrix, Polynomial};

/// `det(xI − m)`, monic of degree `n`.
///
/// With `require_integer` set, non-integer entries are rejected instead of
/// producing a rational polynomial.
pub fn char_poly(m: &ExactMatrix, require_integer: bool) -> Result<Polynomial, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if require_integer && !m.is_integral() {
        return Err(ExactError::NonIntegerEntries);
    }
    let n = m.rows();
    let integer = integer_char_poly(m.numerators(), n);
    if m.is_integral() {
        return Ok(Polynomial::from_big_integers(integer));
    }
    // m = N/d, so det(xI − N/d) = d^{-n} det(dx·I − N): coefficient j picks up d^{j−n}.
    let d = m.denominator();
    let coeffs = integer
        .into_iter()
        .enumerate()
        .map(|(j, c)| BigRational::new(c, d.pow((n - j) as u32)))
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// Coefficients (lowest degree first) of `det(xI − a)` for an `n×n` integer matrix.
pub(crate) fn integer_char_poly(a: &[BigInt], n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    // Any i×i principal minor is at most R^i with R the largest row 2-norm,
    // so |c_i| ≤ C(n,i)·R^i ≤ (1+R)^n.
    let row_norm = (0..n)
        .map(|i| a[i * n..(i + 1) * n].iter().map(|v| v * v).sum::<BigInt>())
        .max()
        .unwrap_or_default();
    let r = row_norm.sqrt() + 1u32;
    let bound: BigInt = (r + 1u32).pow(n as u32);
    let target = bound * 2u32 + 1u32;

    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for p in Primes::below_2_62() {
        let reduced: Vec<u64> = a.iter().map(|v| reduce(v, p)).collect();
        let image = hessenberg_char_poly(reduced, n, p);
        let big_p = BigInt::from(p);
        // Garner step: x ≡ r (mod M), x ≡ s (mod p)  ⇒  x = r + M·((s − r)·M⁻¹ mod p).
        let m_inv = inverse(reduce(&modulus, p), p);
        for (acc, &s) in residues.iter_mut().zip(&image) {
            let r_mod = reduce(acc, p);
            let diff = (s + p - r_mod) % p;
            let t = mul_mod(diff, m_inv, p);
            *acc += &modulus * BigInt::from(t);
        }
        modulus *= &big_p;
        if modulus >= target {
            break;
        }
    }
    let half = &modulus >> 1;
    residues
        .into_iter()
        .map(|c| if c > half { c - &modulus } else { c })
        .collect()
}

fn reduce(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn inverse(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Hessenberg reduction by elementary similarity transforms, then the
/// classical recurrence on the leading principal blocks.
fn hessenberg_char_poly(mut h: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    let at = |i: usize, j: usize| i * n + j;
    for j in 0..n.saturating_sub(2) {
        let Some(pivot) = (j + 1..n).find(|&i| h[at(i, j)] != 0) else {
            continue;
        };
        if pivot != j + 1 {
            for c in 0..n {
                h.swap(at(pivot, c), at(j + 1, c));
            }
            for r in 0..n {
                h.swap(at(r, pivot), at(r, j + 1));
            }
        }
        let inv = inverse(h[at(j + 1, j)], p);
        for i in j + 2..n {
            let u = mul_mod(h[at(i, j)], inv, p);
            if u == 0 {
                continue;
            }
            // row_i −= u·row_{j+1}
            for c in 0..n {
                let sub = mul_mod(u, h[at(j + 1, c)], p);
                h[at(i, c)] = (h[at(i, c)] + p - sub) % p;
            }
            // col_{j+1} += u·col_i
            for r in 0..n {
                let add = mul_mod(u, h[at(r, i)], p);
                h[at(r, j + 1)] = (h[at(r, j + 1)] + add) % p;
            }
        }
    }

    // polys[m] = characteristic polynomial of the leading m×m block.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        let diag = h[at(m - 1, m - 1)];
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - mul_mod(diag, c, p)) % p;
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = mul_mod(t, h[at(i, i - 1)], p);
            if t == 0 {
                break;
            }
            let coef = mul_mod(h[at(i - 1, m - 1)], t, p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                next[k] = (next[k] + p - mul_mod(coef, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n ≥ 1")
}

/// Primes below 2^62, in decreasing order.
struct Primes {
    next: u64,
}

impl Primes {
    fn below_2_62() -> Self {
        Primes { next: (1u64 << 62) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next > 3 {
            let candidate = self.next;
            self.next -= 2;
            if is_prime(candidate) {
                return Some(candidate);
            }
        }
        None
    }
}

/// Deterministic Miller–Rabin for 64-bit inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
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
