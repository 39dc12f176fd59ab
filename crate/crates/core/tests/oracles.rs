//! Brute-force oracles that only use the multiplication table: conjugacy
//! classes by direct conjugation, `Z(F_pG)` by enumerating every central
//! element, the radical as the set of nilpotents, the socle both as the
//! annihilator of the radical and as the sum of minimal ideals, and the ideal
//! property by closing the socle under translation.

use std::collections::HashSet;

use soclelab::algebra::GroupAlgebra;
use soclelab::group::io::construct_family;
use soclelab::group::{affine_class_two, FiniteGroup};
use soclelab::structure::check_standing_form;

/// Largest `p^{dim Z}` enumerated.
const CENTER_LIMIT: usize = 4096;
/// Largest `p^{dim Z}` for the minimal-ideal oracle.
const MINIMAL_IDEAL_LIMIT: usize = 256;

const SMALL: &[&str] = &[
    "C2",
    "C3",
    "C4",
    "elementary_abelian(2,2)",
    "S3",
    "C6",
    "D8",
    "Q8",
    "direct(C4,C2)",
    "elementary_abelian(2,3)",
    "D10",
    "D12",
    "A4",
    "AGL(1,4)",
    "elementary_abelian(3,2)",
    "D16",
    "Q16",
    "direct(Q8,C2)",
    "direct(D8,C2)",
    "AGL(1,5)",
    "direct(S3,C3)",
    "SL2(3)",
    "S4",
    "direct(A4,C2)",
    "direct(S3,C4)",
    "D24",
];

type Vector = Vec<u32>;

struct Oracle<'a> {
    g: &'a FiniteGroup,
    p: u32,
    classes: Vec<Vec<usize>>,
}

impl<'a> Oracle<'a> {
    fn new(g: &'a FiniteGroup, p: u32) -> Self {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut c: Vec<usize> = (0..n).map(|y| g.mul(g.mul(y, x), g.inv(y))).collect();
            c.sort_unstable();
            c.dedup();
            for &y in &c {
                seen[y] = true;
            }
            classes.push(c);
        }
        Oracle { g, p, classes }
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vector {
        let mut out = vec![0u32; a.len()];
        for (x, &ax) in a.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (y, &by) in b.iter().enumerate().filter(|(_, &c)| c != 0) {
                let z = self.g.mul(x, y);
                out[z] = (out[z] + ax * by) % self.p;
            }
        }
        out
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vector {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    /// Every element of `Z(F_pG)` as a group-algebra vector.
    fn center(&self) -> Vec<Vector> {
        let k = self.classes.len();
        let total = (self.p as usize).pow(k as u32);
        (0..total)
            .map(|mut code| {
                let mut v = vec![0u32; self.g.order()];
                for c in &self.classes {
                    let a = (code % self.p as usize) as u32;
                    code /= self.p as usize;
                    for &x in c {
                        v[x] = a;
                    }
                }
                v
            })
            .collect()
    }

    fn is_nilpotent(&self, z: &[u32]) -> bool {
        let mut power = z.to_vec();
        for _ in 0..=self.classes.len() {
            if power.iter().all(|&c| c == 0) {
                return true;
            }
            power = self.mul(&power, z);
        }
        false
    }

    /// Smallest set of the form `{Σ a_i s_i}` containing `gens`.
    fn span(&self, gens: &[Vector]) -> HashSet<Vector> {
        let mut set: HashSet<Vector> = HashSet::from([vec![0u32; self.g.order()]]);
        for v in gens {
            if set.contains(v) {
                continue;
            }
            let current: Vec<Vector> = set.iter().cloned().collect();
            for base in current {
                let mut w = base;
                for _ in 1..self.p {
                    w = self.add(&w, v);
                    set.insert(w.clone());
                }
            }
        }
        set
    }
}

/// Class-sum coordinates in the library's class order.
fn coords(g: &FiniteGroup, v: &[u32]) -> Vec<u32> {
    g.conjugacy_classes()
        .iter()
        .map(|c| v[c.representative])
        .collect()
}

fn small_cases() -> Vec<(String, FiniteGroup, u64)> {
    let mut out = Vec::new();
    for spec in SMALL {
        let g = construct_family(spec, 64).unwrap_or_else(|e| panic!("{spec}: {e}"));
        for p in soclelab::linalg::prime_divisors(g.order() as u64) {
            let k = g.class_count() as u32;
            if (p as usize)
                .checked_pow(k)
                .is_some_and(|t| t <= CENTER_LIMIT)
            {
                out.push((spec.to_string(), g.clone(), p));
            }
        }
    }
    out
}

#[test]
fn classes_match_direct_conjugation() {
    for (spec, g, p) in small_cases() {
        let o = Oracle::new(&g, p as u32);
        let mut mine = o.classes.clone();
        let mut theirs: Vec<Vec<usize>> = g
            .conjugacy_classes()
            .iter()
            .map(|c| c.elements.clone())
            .collect();
        mine.sort();
        theirs.sort();
        assert_eq!(mine, theirs, "{spec}");
    }
}

#[test]
fn radical_and_socle_match_enumeration() {
    let mut checked = 0;
    for (spec, g, p) in small_cases() {
        let o = Oracle::new(&g, p as u32);
        let alg = GroupAlgebra::new(&g, p).unwrap();
        let j = alg.nilradical_center();
        let soc = alg.socle_center();
        let center = o.center();
        let nil: Vec<&Vector> = center.iter().filter(|z| o.is_nilpotent(z)).collect();
        assert_eq!(
            nil.len(),
            (p as usize).pow(j.dim() as u32),
            "{spec} at {p}: |J|"
        );
        for z in &center {
            let c = coords(&g, z);
            assert_eq!(
                o.is_nilpotent(z),
                j.space.contains_vector(&c),
                "{spec} at {p}"
            );
            let kills = nil.iter().all(|r| o.mul(z, r).iter().all(|&x| x == 0));
            assert_eq!(kills, soc.space.contains_vector(&c), "{spec} at {p}: socle");
        }
        checked += 1;
    }
    assert!(checked >= 30, "only {checked} cases");
}

#[test]
fn socle_is_sum_of_minimal_ideals() {
    let mut checked = 0;
    for (spec, g, p) in small_cases() {
        let o = Oracle::new(&g, p as u32);
        let center = o.center();
        if center.len() > MINIMAL_IDEAL_LIMIT {
            continue;
        }
        let ideal_of =
            |z: &Vector| -> HashSet<Vector> { center.iter().map(|c| o.mul(z, c)).collect() };
        let nonzero = |v: &Vector| v.iter().any(|&x| x != 0);
        let mut minimal_gens = Vec::new();
        for z in center.iter().filter(|z| nonzero(z)) {
            let iz = ideal_of(z);
            if iz
                .iter()
                .filter(|w| nonzero(w))
                .all(|w| ideal_of(w).len() == iz.len())
            {
                minimal_gens.push(z.clone());
            }
        }
        let socle = o.span(&minimal_gens);
        let alg = GroupAlgebra::new(&g, p).unwrap();
        let soc = alg.socle_center();
        assert_eq!(
            socle.len(),
            (p as usize).pow(soc.dim() as u32),
            "{spec} at {p}"
        );
        for v in &socle {
            assert!(soc.space.contains_vector(&coords(&g, v)), "{spec} at {p}");
        }
        checked += 1;
    }
    assert!(checked >= 15, "only {checked} cases");
}

#[test]
fn ideal_verdict_matches_translation_closure() {
    let mut seen = [0usize; 2];
    for (spec, g, p) in small_cases() {
        let o = Oracle::new(&g, p as u32);
        let alg = GroupAlgebra::new(&g, p).unwrap();
        let soc: Vec<Vector> = alg
            .socle_center()
            .basis()
            .iter()
            .map(|b| alg.expand(b).coeffs().to_vec())
            .collect();
        let set = o.span(&soc);
        let n = g.order();
        let closed = set.iter().all(|s| {
            (0..n).all(|x| {
                let mut e = vec![0u32; n];
                e[x] = 1;
                set.contains(&o.mul(&e, s)) && set.contains(&o.mul(s, &e))
            })
        });
        let v = alg.is_socle_ideal().unwrap();
        assert_eq!(v.direct, closed, "{spec} at {p}");
        assert_eq!(v.criterion, closed, "{spec} at {p}");
        seen[closed as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "both verdicts occur: {seen:?}");
}

#[test]
fn sl23_dimensions_by_enumeration() {
    let g = construct_family("SL2(3)", 64).unwrap();
    let o = Oracle::new(&g, 2);
    let center = o.center();
    let nil: Vec<&Vector> = center.iter().filter(|z| o.is_nilpotent(z)).collect();
    let soc = center
        .iter()
        .filter(|z| nil.iter().all(|r| o.mul(z, r).iter().all(|&x| x == 0)))
        .count();
    assert_eq!((center.len(), nil.len(), soc), (1 << 7, 1 << 6, 1 << 3));
}

fn frobenius(degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    FiniteGroup::from_permutations(degree, gens, 4096).unwrap()
}

fn affine_perm(n: usize, a: usize, b: usize) -> Vec<usize> {
    (0..n).map(|x| (a * x + b) % n).collect()
}

#[test]
fn frobenius_groups_with_ideal_socle_have_abelian_kernel() {
    let mut groups: Vec<(String, FiniteGroup)> = [
        "D6", "D10", "D14", "AGL(1,4)", "AGL(1,7)", "AGL(1,8)", "AGL(1,9)",
    ]
    .iter()
    .map(|s| (s.to_string(), construct_family(s, 4096).unwrap()))
    .collect();
    for (n, a, r) in [(7, 2, 3), (13, 3, 3), (11, 3, 5), (13, 5, 4)] {
        let g = frobenius(n, &[affine_perm(n, 1, 1), affine_perm(n, a, 0)]);
        assert_eq!(g.order(), n * r);
        groups.push((format!("C{n}:C{r}"), g));
    }
    groups.push(("ac2(8,8,1)".into(), affine_class_two(8, 8, 1).unwrap()));
    let mut nonabelian_kernels = 0;
    for (name, g) in &groups {
        let d = g.derived_subgroup();
        assert!(g.is_frobenius_with_kernel(&d), "{name}");
        let p = soclelab::linalg::prime_divisors(d.order() as u64)[0];
        let sf = check_standing_form(g, p);
        assert!(sf.holds(), "{name}");
        let ideal = GroupAlgebra::new(g, p)
            .unwrap()
            .is_socle_ideal()
            .unwrap()
            .direct;
        let abelian = d
            .elements()
            .iter()
            .all(|&x| d.elements().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
        assert_eq!(ideal, abelian, "{name}");
        nonabelian_kernels += !abelian as usize;
    }
    assert!(nonabelian_kernels > 0);
}
