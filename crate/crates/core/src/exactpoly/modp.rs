//! Polynomials over a prime field `Z/pZ`, `p < 2^31`. Internal to the
//! factorization pipeline.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::IntPoly;

pub(crate) type FpPoly = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..1 << 31).contains(&p));
        Fp { p }
    }

    pub fn reduce(&self, f: &IntPoly) -> FpPoly {
        let m = BigInt::from(self.p);
        trim(
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().unwrap())
                .collect(),
        )
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow_scalar(a, self.p - 2)
    }

    fn pow_scalar(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }

    #[cfg(test)]
    pub fn add(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> FpPoly {
        trim(a.iter().map(|&x| x * (c % self.p) % self.p).collect())
    }

    pub fn monic(&self, a: &[u64]) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (Vec::new(), trim(r));
        }
        let db = b.len() - 1;
        let inv_lc = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db] * inv_lc % self.p;
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - c * bj % self.p) % self.p;
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> FpPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc = *r0.last().expect("ext_gcd of two zero polynomials");
        let inv = self.inv(lc);
        (
            self.scale(&r0, inv),
            self.scale(&s0, inv),
            self.scale(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &[u64]) -> FpPoly {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * (i as u64 % self.p) % self.p)
                .collect(),
        )
    }

    pub fn powmod(&self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> FpPoly {
        let mut result = vec![1u64];
        let base = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            result = self.rem(&self.mul(&result, &result), modulus);
            if exp.bit(i) {
                result = self.rem(&self.mul(&result, &base), modulus);
            }
        }
        self.rem(&result, modulus)
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Irreducible monic factors of a monic square-free polynomial, by
    /// distinct-degree then equal-degree (Cantor-Zassenhaus) splitting.
    pub fn factor_squarefree(&self, f: &[u64], rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        debug_assert!(self.p > 2);
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 1usize;
        let p_big = BigUint::from(self.p);
        while rest.len() > 2 * d {
            h = self.powmod(&h, &p_big, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                self.split_equal_degree(&g, d, rng, &mut out);
            }
            d += 1;
        }
        if rest.len() > 1 {
            out.push(rest);
        }
        out
    }

    fn split_equal_degree(&self, f: &[u64], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.to_vec());
            return;
        }
        let exp = (num_traits::pow(BigUint::from(self.p), d) - BigUint::one()) >> 1;
        loop {
            let a: FpPoly = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.powmod(&a, &exp, f);
            let g = self.gcd(&self.sub(&b, &[1]), f);
            if g.len() > 1 && g.len() < f.len() {
                let cofactor = self.divrem(f, &g).0;
                self.split_equal_degree(&g, d, rng, out);
                self.split_equal_degree(&cofactor, d, rng, out);
                return;
            }
        }
    }
}

pub(crate) fn seeded_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x6d75_6c74)
}

/// Symmetric residue of `c` modulo `m` in `(-m/2, m/2]`.
pub(crate) fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub(crate) fn is_zero_mod(f: &IntPoly, m: &BigInt) -> bool {
    f.coeffs().iter().all(|c| c.mod_floor(m).is_zero())
}
