//! Small finite fields `GF(p^d)` as residue polynomials.
//!
//! An element is encoded as the integer `Σ c_i p^i` of its coefficient
//! vector, so `0` and `1` are the field's zero and one and the encoding of
//! the prime subfield is the natural one.

use crate::error::{Error, Result};
use crate::linalg::prime_power;

/// Largest field order supported.
pub const MAX_FIELD_ORDER: usize = 1 << 12;

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: usize,
    d: usize,
    /// Low coefficients `c_0..c_{d-1}` of the monic modulus.
    modulus: Vec<usize>,
    add: Vec<u16>,
    mul: Vec<u16>,
}

fn digits(mut x: usize, p: usize, d: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(d);
    for _ in 0..d {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Remainder of `a` modulo the monic polynomial `m` (coefficients low to high).
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let off = a.len() - dm;
        for i in 0..dm {
            a[off + i] = (a[off + i] + p - lead * m[i] % p) % p;
        }
    }
    a
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let d = f.len() - 1;
    for k in 1..=d / 2 {
        for low in 0..p.pow(k as u32) {
            let mut g = digits(low, p, k);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `d` whose coefficient tuple
/// `(c_{d-1}, …, c_0)` is lexicographically smallest. Returns `c_0..c_{d-1}`.
pub fn smallest_irreducible(p: usize, d: usize) -> Vec<usize> {
    (0..p.pow(d as u32))
        .map(|low| digits(low, p, d))
        .find(|low| {
            let mut f = low.clone();
            f.push(1);
            is_irreducible(&f, p)
        })
        .expect("irreducible polynomials exist in every degree")
}

impl GaloisField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, d) = prime_power(q as u64)
            .ok_or_else(|| Error::InvalidFamily(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::Unsupported(format!(
                "field of order {q} is too large"
            )));
        }
        let (p, d) = (p as usize, d as usize);
        let modulus = smallest_irreducible(p, d);
        let mut full = modulus.clone();
        full.push(1);
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a, p, d);
            for b in 0..q {
                let db = digits(b, p, d);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s, p) as u16;
                let mut r = poly_rem(&poly_mul(&da, &db, p), &full, p);
                r.resize(d, 0);
                mul[a * q + b] = undigits(&r, p) as u16;
            }
        }
        Ok(GaloisField {
            p,
            d,
            modulus,
            add,
            mul,
        })
    }

    pub fn order(&self) -> usize {
        self.p.pow(self.d as u32)
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Low coefficients of the defining polynomial.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.order()).find(|&b| self.mul(a, b) == 1)
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut r = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Smallest-encoded generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        let q = self.order();
        if q == 2 {
            return 1;
        }
        (2..q)
            .find(|&a| {
                let mut x = a;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, a);
                    k += 1;
                }
                k == q - 1
            })
            .expect("multiplicative group is cyclic")
    }

    /// Field trace down to the subfield of order `p^e`, `e | d`.
    pub fn trace_to(&self, a: usize, e: usize) -> usize {
        let r = self.p.pow(e as u32) as u64;
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.d / e {
            acc = self.add(acc, x);
            x = self.pow(x, r);
        }
        acc
    }
}
