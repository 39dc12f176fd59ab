use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::closure::{closure, compose};
use crate::group::field::GaloisField;
use crate::group::product::{semidirect_product, SemidirectSpec};
use crate::group::FiniteGroup;
use crate::linalg::{is_prime, prime_power};

/// Builds a table from an explicit element list whose first entry is the identity.
pub(crate) fn table_from_elements<T, F>(elems: &[T], mul: F) -> FiniteGroup
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let index: HashMap<&T, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e, i as u32))
        .collect();
    let n = elems.len();
    let mut table = vec![0u32; n * n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            table[i * n + j] = index[&mul(a, b)];
        }
    }
    FiniteGroup::from_table_unchecked(n, table)
}

pub fn cyclic(m: usize) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::InvalidFamily("cyclic group of order 0".into()));
    }
    let elems: Vec<usize> = (0..m).collect();
    Ok(table_from_elements(&elems, |a, b| (a + b) % m))
}

/// Dihedral group of order `n` (`n` even), elements `r^i s^j` at index `i + j n/2`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidFamily(format!(
            "dihedral order {n} must be even and at least 2"
        )));
    }
    let m = n / 2;
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
    Ok(table_from_elements(&elems, |&(i, j), &(k, l)| {
        if j == 0 {
            ((i + k) % m, l)
        } else {
            ((i + m - k) % m, 1 - l)
        }
    }))
}

/// Generalized quaternion group of order `n = 2^k ≥ 8`.
pub fn quaternion(n: usize) -> Result<FiniteGroup> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::InvalidFamily(format!(
            "quaternion order {n} must be 2^k with k ≥ 3"
        )));
    }
    let m = n / 4; // a has order 2m, b^2 = a^m
    let two_m = 2 * m;
    let elems: Vec<(usize, usize)> = (0..2)
        .flat_map(|j| (0..two_m).map(move |i| (i, j)))
        .collect();
    Ok(table_from_elements(&elems, |&(i, j), &(k, l)| {
        if j == 0 {
            ((i + k) % two_m, l)
        } else if l == 0 {
            ((i + two_m - k) % two_m, 1)
        } else {
            ((i + two_m - k + m) % two_m, 0)
        }
    }))
}

pub fn elementary_abelian(p: usize, d: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidFamily(format!("{p} is not prime")));
    }
    let n = p.pow(d as u32);
    let elems: Vec<usize> = (0..n).collect();
    Ok(table_from_elements(&elems, |&a, &b| {
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..d {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }))
}

/// Isomorphism type of an extraspecial group of order `p^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtraspecialType {
    /// Exponent `p` for odd `p` (Heisenberg group); dihedral `D_8` for `p = 2`.
    Plus,
    /// Exponent `p^2` for odd `p`; quaternion `Q_8` for `p = 2`.
    Minus,
}

pub fn extraspecial(p: usize, kind: ExtraspecialType) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidFamily(format!("{p} is not prime")));
    }
    match (p, kind) {
        (2, ExtraspecialType::Plus) => dihedral(8),
        (2, ExtraspecialType::Minus) => quaternion(8),
        (_, ExtraspecialType::Plus) => {
            let elems: Vec<(usize, usize, usize)> = (0..p * p * p)
                .map(|i| (i / (p * p), (i / p) % p, i % p))
                .collect();
            Ok(table_from_elements(&elems, |&(x, y, z), &(a, b, c)| {
                ((x + a) % p, (y + b) % p, (z + c + x * b) % p)
            }))
        }
        (_, ExtraspecialType::Minus) => {
            // a of order p^2, b a b^-1 = a^{1+p}
            let p2 = p * p;
            let elems: Vec<(usize, usize)> =
                (0..p).flat_map(|j| (0..p2).map(move |i| (i, j))).collect();
            let twist = |k: usize, j: usize| {
                let mut f = 1;
                for _ in 0..j {
                    f = f * (1 + p) % p2;
                }
                k * f % p2
            };
            Ok(table_from_elements(&elems, |&(i, j), &(k, l)| {
                ((i + twist(k, j)) % p2, (j + l) % p)
            }))
        }
    }
}

/// `AGL(1, q)`: the maps `x ↦ ax + b` of `GF(q)` under composition.
///
/// Index of `(a, b)` is `rank(a)·q + b` where `rank(1) = 0` and the other
/// units follow in increasing encoding, so the translations come first.
pub fn agl1(q: usize) -> Result<FiniteGroup> {
    let f = GaloisField::new(q)?;
    let units: Vec<usize> = std::iter::once(1).chain(2..q).collect();
    let elems: Vec<(usize, usize)> = units
        .iter()
        .flat_map(|&a| (0..q).map(move |b| (a, b)))
        .collect();
    Ok(table_from_elements(&elems, |&(a, b), &(c, d)| {
        (f.mul(a, c), f.add(f.mul(a, d), b))
    }))
}

/// A class-two extension of `AGL(1, q)`.
///
/// The normal subgroup is `F_q × F_w` (with `F_w ⊆ F_q`) under
/// `(x,u)(y,v) = (x+y, u+v+β(x,y))`, `β(x,y) = Tr_{q→w}(ω·x·y^{p^j})` for the
/// primitive element `ω`. The unit `a` acts by `(x,u) ↦ (ax, a^{1+p^j}u)`,
/// which requires `a^{1+p^j} ∈ F_w` for every unit. Elements `(x, u)` of the
/// normal subgroup sit at index `x·w + rank(u)`, followed by the cosets of the
/// units ordered by the exponent of `ω`.
pub fn affine_class_two(q: usize, w: usize, j: usize) -> Result<FiniteGroup> {
    let f = GaloisField::new(q)?;
    let (p, d) = (f.characteristic(), f.degree());
    let (pw, e) = check_prime_power(w)?;
    if pw != p || d % e != 0 {
        return Err(Error::InvalidFamily(format!(
            "F_{w} is not a subfield of F_{q}"
        )));
    }
    let twist = 1 + p.pow(j as u32);
    if !(twist * (w - 1)).is_multiple_of(q - 1) {
        return Err(Error::InvalidFamily(format!(
            "a^{twist} does not lie in F_{w} for every unit of F_{q}"
        )));
    }
    let sub: Vec<usize> = (0..q).filter(|&z| f.pow(z, w as u64) == z).collect();
    let mut rank = vec![usize::MAX; q];
    for (i, &z) in sub.iter().enumerate() {
        rank[z] = i;
    }
    let omega = f.primitive_element();
    let frob = p.pow(j as u32) as u64;
    let beta = |x: usize, y: usize| f.trace_to(f.mul(omega, f.mul(x, f.pow(y, frob))), e);
    let elems: Vec<(usize, usize)> = (0..q)
        .flat_map(|x| sub.iter().map(move |&u| (x, u)))
        .collect();
    let kernel = table_from_elements(&elems, |&(x, u), &(y, v)| {
        (f.add(x, y), f.add(f.add(u, v), beta(x, y)))
    });
    let index = |x: usize, u: usize| x * w + rank[u];
    let action: Vec<Vec<usize>> = (0..q - 1)
        .map(|k| {
            let a = f.pow(omega, k as u64);
            let at = f.pow(a, twist as u64);
            elems
                .iter()
                .map(|&(x, u)| index(f.mul(a, x), f.mul(at, u)))
                .collect()
        })
        .collect();
    semidirect_product(&SemidirectSpec {
        kernel_group: kernel,
        acting_group: cyclic(q - 1)?,
        action,
    })
}

/// `SL_2(p)` for a prime `p`, matrices `(a b; c d)` listed lexicographically
/// after the identity.
pub fn sl2(p: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidFamily(format!(
            "SL2 over {p}: prime field required"
        )));
    }
    if p > 13 {
        return Err(Error::Unsupported(format!(
            "SL2({p}) exceeds the supported size"
        )));
    }
    let mut elems = vec![[1usize, 0, 0, 1]];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [a, b, c, d];
                    if (a * d + p * p - b * c % p) % p == 1 && m != [1, 0, 0, 1] {
                        elems.push(m);
                    }
                }
            }
        }
    }
    Ok(table_from_elements(&elems, |x, y| {
        [
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        ]
    }))
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 6 {
        return Err(Error::Unsupported(format!("symmetric group on {n} points")));
    }
    if n == 1 {
        return cyclic(1);
    }
    let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let mut swap: Vec<u32> = (0..n as u32).collect();
    swap.swap(0, 1);
    let id: Vec<u32> = (0..n as u32).collect();
    Ok(closure(id, &[cycle, swap], |a, b| compose(a, b), 1000)?.0)
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 6 {
        return Err(Error::Unsupported(format!(
            "alternating group on {n} points"
        )));
    }
    if n < 3 {
        return cyclic(1);
    }
    let id: Vec<u32> = (0..n as u32).collect();
    let gens: Vec<Vec<u32>> = (2..n)
        .map(|k| {
            let mut c = id.clone();
            c[0] = 1;
            c[1] = k as u32;
            c[k] = 0;
            c
        })
        .collect();
    Ok(closure(id, &gens, |a, b| compose(a, b), 1000)?.0)
}

/// Parses `q` as a prime power or reports it.
pub(crate) fn check_prime_power(q: usize) -> Result<(usize, usize)> {
    prime_power(q as u64)
        .map(|(p, d)| (p as usize, d as usize))
        .ok_or_else(|| Error::InvalidFamily(format!("{q} is not a prime power")))
}
