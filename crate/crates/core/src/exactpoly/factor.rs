//! Irreducible factorization over the rationals (Zassenhaus) and root-class
//! multiplicities.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{is_zero_mod, seeded_rng, symmetric, Fp, FpPoly};
use super::squarefree::{factor_order, squarefree_decomposition};
use super::{IntPoly, PolyError};

/// An irreducible, primitive integer polynomial with positive leading
/// coefficient. It stands for every root of itself at once: conjugate roots
/// share all multiplicities, so the factor is the exact handle for a root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootClass {
    minpoly: IntPoly,
}

impl RootClass {
    /// Validates irreducibility by factoring.
    pub fn new(minpoly: IntPoly) -> Result<Self, PolyError> {
        let reject = |why: &str| Err(PolyError::InvalidRootClass(format!("{minpoly}: {why}")));
        match minpoly.degree() {
            None | Some(0) => return reject("degree must be positive"),
            _ => {}
        }
        if minpoly.leading().is_some_and(Signed::is_negative) {
            return reject("leading coefficient must be positive");
        }
        if !minpoly.content().is_one() {
            return reject("polynomial is not primitive");
        }
        let fp = factor(&minpoly)?;
        if fp.factors.len() != 1 || fp.factors[0].1 != 1 {
            return reject("polynomial is reducible");
        }
        Ok(RootClass { minpoly })
    }

    /// The class of the root `0`, i.e. the monomial `x`.
    pub fn zero_root() -> Self {
        RootClass {
            minpoly: IntPoly::x(),
        }
    }

    pub(crate) fn new_unchecked(minpoly: IntPoly) -> Self {
        RootClass { minpoly }
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn is_zero_root(&self) -> bool {
        self.minpoly == IntPoly::x()
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }
}

impl PartialOrd for RootClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootClass {
    fn cmp(&self, other: &Self) -> Ordering {
        factor_order(&self.minpoly, &other.minpoly)
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.minpoly.fmt(f)
    }
}

/// `unit * prod(factor^exponent)`, factors distinct and sorted by degree then
/// coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly {
    pub unit: BigInt,
    pub factors: Vec<(RootClass, u32)>,
}

impl FactoredPoly {
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.unit.clone());
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = &acc * f.minpoly();
            }
        }
        acc
    }

    /// Exponent of `root`, zero if absent.
    pub fn exponent_of(&self, root: &RootClass) -> u32 {
        self.factors
            .iter()
            .find(|(f, _)| f == root)
            .map_or(0, |(_, e)| *e)
    }

    pub fn roots(&self) -> impl Iterator<Item = &RootClass> {
        self.factors.iter().map(|(f, _)| f)
    }
}

/// Complete factorization of `p` into irreducibles over the rationals.
pub fn factor(p: &IntPoly) -> Result<FactoredPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut unit = p.content();
    if p.leading().unwrap().is_negative() {
        unit = -unit;
    }
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        for g in factor_squarefree(&part) {
            factors.push((RootClass::new_unchecked(g), mult));
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(FactoredPoly { unit, factors })
}

/// Largest `k` with `root^k` dividing `g`.
pub fn multiplicity(root: &RootClass, g: &IntPoly) -> Result<u32, PolyError> {
    if g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    // x^k is read straight off the low coefficients.
    if root.is_zero_root() {
        return Ok(g.coeffs().iter().take_while(|c| c.is_zero()).count() as u32);
    }
    let f = root.minpoly();
    let mut k = 0;
    let mut rest = g.clone();
    while let Some(q) = rest.divide_exact(f)? {
        k += 1;
        rest = q;
    }
    Ok(k)
}

/// Irreducible factors of a primitive square-free polynomial with positive
/// leading coefficient.
fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let deg = f.degree().expect("nonzero");
    if deg <= 1 {
        return vec![f.clone()];
    }
    // Split off the root 0 so the modular images stay square-free more often.
    if f.coeff(0).is_zero() {
        let rest = f.divide_exact(&IntPoly::x()).unwrap().unwrap();
        let mut out = vec![IntPoly::x()];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let (fp, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let lc = f.leading().unwrap().clone();
    let p = BigInt::from(fp.p);
    let bound = coefficient_bound(f) * 2 + 1;
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
        k += 1;
    }
    let lifted = lift_all(fp, f, &modular, k);
    recombine(f.clone(), lifted, &lc, &pk)
}

/// Bound on `|lc(f)| * |coefficient|` for any factor of `f` (Mignotte).
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let deg = f.degree().unwrap();
    let sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm2 = sq.sqrt() + 1;
    let lc = f.leading().unwrap().abs();
    (BigInt::one() << deg) * norm2 * lc
}

/// Picks, among the first few usable odd primes, the one giving the fewest
/// modular factors.
fn choose_prime(f: &IntPoly) -> (Fp, Vec<FpPoly>) {
    let lc = f.leading().unwrap();
    let mut rng = seeded_rng();
    let mut best: Option<(Fp, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes().into_iter().skip(1) {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let reduced = fp.reduce(f);
        if !fp.is_squarefree(&reduced) {
            continue;
        }
        let fs = fp.factor_squarefree(&reduced, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((fp, fs));
        }
        tried += 1;
        if tried == 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best.expect("a square-free integer polynomial stays square-free modulo some small prime")
}

fn small_primes() -> Vec<u64> {
    let limit = 2000usize;
    let mut sieve = vec![true; limit];
    sieve[0] = false;
    sieve[1] = false;
    for i in 2..limit {
        if sieve[i] {
            for j in (i * i..limit).step_by(i) {
                sieve[j] = false;
            }
        }
    }
    (0..limit).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

fn to_int(a: &[u64]) -> IntPoly {
    IntPoly::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `target = lc * prod(factors) (mod p)` to monic factors modulo `p^k`.
fn lift_all(fp: Fp, target: &IntPoly, factors: &[FpPoly], k: u32) -> Vec<IntPoly> {
    let p = BigInt::from(fp.p);
    let pk = num_traits::pow(p, k as usize);
    if factors.len() == 1 {
        let inv = inverse_mod(target.leading().unwrap(), &pk);
        return vec![reduce_mod(&target.scale(&inv), &pk)];
    }
    let mid = factors.len() / 2;
    let product = |fs: &[FpPoly]| fs.iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
    let g0 = product(&factors[..mid]);
    let lc_mod_p = fp.reduce(&IntPoly::constant(target.leading().unwrap().clone()))[0];
    let h0 = fp.scale(&product(&factors[mid..]), lc_mod_p);
    let (g, h) = hensel_pair(fp, target, &g0, &h0, k);
    let mut out = lift_all(fp, &g, &factors[..mid], k);
    out.extend(lift_all(fp, &h, &factors[mid..], k));
    out
}

/// Linear Hensel lifting of `target = g0 * h0 (mod p)` with `g0` monic to a
/// factorization modulo `p^k`; `g` stays monic and `h` carries the leading
/// coefficient of `target`.
fn hensel_pair(fp: Fp, target: &IntPoly, g0: &[u64], h0: &[u64], k: u32) -> (IntPoly, IntPoly) {
    let p = BigInt::from(fp.p);
    let (one, _, t) = fp.ext_gcd(g0, h0);
    debug_assert_eq!(one, vec![1]);
    let lc = target.leading().unwrap().clone();
    let mut g = to_int(g0);
    let mut h = {
        let mut c = to_int(h0).into_coeffs();
        let last = c.len() - 1;
        c[last] = lc;
        IntPoly::new(c)
    };
    let mut m = p.clone();
    for _ in 1..k {
        let err = target - &(&g * &h);
        debug_assert!(is_zero_mod(&err, &m));
        let e = fp.reduce(&err.div_scalar_exact(&m));
        let tau = fp.rem(&fp.mul(&t, &e), g0);
        let (sigma, r) = fp.divrem(&fp.sub(&e, &fp.mul(&tau, h0)), g0);
        debug_assert!(r.is_empty());
        g = &g + &to_int(&tau).scale(&m);
        h = &h + &to_int(&sigma).scale(&m);
        m *= &p;
    }
    (reduce_mod(&g, &m), reduce_mod(&h, &m))
}

/// Subset recombination of lifted modular factors into true factors.
fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, lc: &BigInt, pk: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut lc = lc.clone();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        for subset in Combinations::new(lifted.len(), size) {
            let mut cand = IntPoly::constant(lc.clone());
            for &i in &subset {
                cand = reduce_mod(&(&cand * &lifted[i]), pk);
            }
            let cand = IntPoly::new(cand.coeffs().iter().map(|c| symmetric(c, pk)).collect())
                .primitive_part();
            if let Some(q) = f.divide_exact(&cand).unwrap() {
                found.push(cand);
                f = q;
                lc = f.leading().unwrap().clone();
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.degree().is_some_and(|d| d > 0) {
        found.push(f.primitive_part());
    }
    found
}

/// Index subsets of a fixed size in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
