//! Independent enumeration of tame etale algebras over a local field.
//!
//! Over a nonarchimedean local field whose residue field `F_q0` has
//! characteristic `p0 > n`, every degree-`n` etale algebra is tame, and the
//! Galois theory of such algebras is generated by two elements: the
//! Frobenius `phi` and a generator `tau` of tame inertia, subject to
//! `phi tau phi^{-1} = tau^{q0}`. Degree-`n` etale algebras therefore
//! correspond to pairs `(phi, tau)` in `S_n x S_n` satisfying that relation;
//! isomorphism classes are simultaneous-conjugacy classes, and the
//! automorphism group of an algebra is the centralizer of its pair.
//!
//! Invariants read off a pair: the transitive components of `<phi, tau>` are
//! the field pieces; within a component every `tau`-cycle has the same
//! length `e` (the ramification index) and the number of `tau`-cycles is the
//! residue degree `f`; the discriminant valuation of a piece is `f(e-1)`,
//! so the algebra's total is `n` minus the number of `tau`-cycles.
//!
//! This enumeration never touches partition counts, so it serves as the
//! independent oracle for the closed local-mass formula: summing
//! `q0^{-disc} / #Aut` over classes must reproduce
//! `sum_{k<n} q(k, n-k) / q0^k` exactly.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arith::{rat_pow, Rat};
use crate::mass::partitions::partitions_at_most;
use crate::{Error, Result};

/// One field piece of a tame etale algebra: unramified degree `f`, tame
/// ramification index `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TamePiece {
    /// Residue (unramified) degree `f`.
    pub residue_degree: u32,
    /// Ramification index `e`, coprime to the residue characteristic.
    pub ram_index: u32,
}

impl std::fmt::Display for TamePiece {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ram_index == 1 {
            write!(f, "{}", self.residue_degree)
        } else {
            write!(f, "{}^{}", self.residue_degree, self.ram_index)
        }
    }
}

/// An isomorphism class of degree-`n` tame etale algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameAlgebraClass {
    /// Field pieces, ramified pieces first.
    pub pieces: Vec<TamePiece>,
    /// Valuation of the discriminant: `sum f(e-1)` over pieces.
    pub disc_valuation: u32,
    /// Order of the automorphism group over the base field.
    pub aut_order: u64,
}

impl TameAlgebraClass {
    /// Splitting shape such as `1 1 1`, `1 2`, `1^2 1`, or `1^3`.
    pub fn shape(&self) -> String {
        let parts: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        parts.join(" ")
    }

    /// Whether every piece is unramified.
    pub fn is_unramified(&self) -> bool {
        self.pieces.iter().all(|p| p.ram_index == 1)
    }
}

impl std::fmt::Display for TameAlgebraClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}) disc valuation {} aut {}",
            self.shape(),
            self.disc_valuation,
            self.aut_order
        )
    }
}

/// Complete tame enumeration at one residue field size.
#[derive(Debug, Clone)]
pub struct TameLocalMass {
    pub n: u32,
    pub q0: u64,
    /// All isomorphism classes, ordered by discriminant valuation then shape.
    pub classes: Vec<TameAlgebraClass>,
    /// `sum |Disc|_p / #Aut = sum q0^{-disc valuation} / aut` over classes.
    pub disc_weighted: Rat,
    /// `sum 1 / #Aut` over classes.
    pub unweighted: Rat,
}

/// All permutations of `{0, .., n-1}` as image vectors.
pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::with_capacity(out.len() * (k + 1));
        for p in &out {
            for pos in 0..=k {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// `g . p . g^{-1}` as image vectors.
fn conjugate(g: &[usize], p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for i in 0..p.len() {
        out[g[i]] = g[p[i]];
    }
    out
}

/// `p^e`, computed by advancing each cycle `e mod length` steps.
fn perm_pow(p: &[usize], e: u64) -> Vec<usize> {
    let n = p.len();
    let mut out = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut j = p[start];
        while j != start {
            seen[j] = true;
            cycle.push(j);
            j = p[j];
        }
        let len = cycle.len();
        let shift = (e % len as u64) as usize;
        for (i, &v) in cycle.iter().enumerate() {
            out[v] = cycle[(i + shift) % len];
        }
    }
    out
}

/// Cycles of a permutation, each as the list of its points.
fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut j = p[start];
        while j != start {
            seen[j] = true;
            cycle.push(j);
            j = p[j];
        }
        out.push(cycle);
    }
    out
}

/// Smallest prime factor by trial division.
fn smallest_prime_factor(m: u64) -> u64 {
    if m % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= m {
        if m % d == 0 {
            return d;
        }
        d += 2;
    }
    m
}

/// The prime `p0` with `q = p0^k`, when `q` is a prime power at least 2.
pub(crate) fn residue_characteristic(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let p0 = smallest_prime_factor(q);
    let mut power = q;
    while power % p0 == 0 {
        power /= p0;
    }
    if power == 1 {
        Some(p0)
    } else {
        None
    }
}

/// Transitive components of the group generated by two permutations.
fn components(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        comp[start] = id;
        let mut members = vec![start];
        while let Some(i) = stack.pop() {
            for j in [a[i], b[i]] {
                if comp[j] == usize::MAX {
                    comp[j] = id;
                    stack.push(j);
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Enumerates all degree-`n` etale algebras over a local field with residue
/// field size `q0`, in the tame regime (residue characteristic exceeding
/// `n`), together with their automorphism orders and the two mass sums.
///
/// Errors with [`Error::WildRamification`] when the residue characteristic
/// is at most `n`, since the Frobenius-inertia presentation only describes
/// tame algebras.
pub fn tame_local_mass_oracle(n: u32, q0: u64) -> Result<TameLocalMass> {
    if !(1..=5).contains(&n) {
        return Err(Error::UnsupportedDegree);
    }
    let p0 = residue_characteristic(q0)
        .ok_or_else(|| Error::invalid("residue field size must be a prime power"))?;
    if p0 <= n as u64 {
        return Err(Error::WildRamification);
    }

    let n_us = n as usize;
    let perms = all_permutations(n_us);
    let factorial = perms.len() as u64;

    // All pairs (phi, tau) with phi tau phi^{-1} = tau^{q0}.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let tau_pows: Vec<Vec<usize>> = perms.iter().map(|t| perm_pow(t, q0)).collect();
    for (ti, tau) in perms.iter().enumerate() {
        for (pi, phi) in perms.iter().enumerate() {
            if conjugate(phi, tau) == tau_pows[ti] {
                pairs.push((pi, ti));
            }
        }
    }

    // Group into simultaneous-conjugacy classes by canonical (minimal)
    // conjugate representative.
    let mut class_sizes: HashMap<(Vec<usize>, Vec<usize>), u64> = HashMap::new();
    for &(pi, ti) in &pairs {
        let key = perms
            .iter()
            .map(|g| (conjugate(g, &perms[pi]), conjugate(g, &perms[ti])))
            .min()
            .expect("at least the identity conjugator");
        *class_sizes.entry(key).or_insert(0) += 1;
    }

    let mut classes: Vec<TameAlgebraClass> = Vec::new();
    for ((phi, tau), orbit_size) in &class_sizes {
        assert!(factorial % orbit_size == 0, "orbit size divides group order");
        let aut_order = factorial / orbit_size;
        let mut pieces: Vec<TamePiece> = Vec::new();
        for comp in components(phi, tau) {
            let tau_cycles: Vec<Vec<usize>> = cycles(tau)
                .into_iter()
                .filter(|c| comp.contains(&c[0]))
                .collect();
            let e = tau_cycles[0].len();
            assert!(
                tau_cycles.iter().all(|c| c.len() == e),
                "inertia cycles in one field piece share a length"
            );
            let f = tau_cycles.len();
            assert_eq!(e * f, comp.len());
            pieces.push(TamePiece {
                residue_degree: f as u32,
                ram_index: e as u32,
            });
        }
        // Ramified pieces first, then by residue degree.
        pieces.sort_by_key(|p| (std::cmp::Reverse(p.ram_index), p.residue_degree));
        let disc_valuation: u32 = pieces
            .iter()
            .map(|p| p.residue_degree * (p.ram_index - 1))
            .sum();
        let tau_cycle_count = cycles(tau).len() as u32;
        assert_eq!(disc_valuation, n - tau_cycle_count);
        classes.push(TameAlgebraClass {
            pieces,
            disc_valuation,
            aut_order,
        });
    }
    classes.sort_by_key(|c| (c.disc_valuation, c.shape(), c.aut_order));

    let disc_weighted: Rat = classes
        .iter()
        .map(|c| rat_pow(q0, -(c.disc_valuation as i64)) / Rat::from(BigInt::from(c.aut_order)))
        .sum();
    let unweighted: Rat = classes
        .iter()
        .map(|c| Rat::from(BigInt::from(c.aut_order)).recip())
        .sum();

    // The same sums straight from the pairs, without the class grouping:
    // each class of centralizer order a contributes n!/a pairs.
    let by_pairs: Rat = pairs
        .iter()
        .map(|&(_, ti)| {
            let c = cycles(&perms[ti]).len() as i64;
            rat_pow(q0, c - n as i64)
        })
        .sum::<Rat>()
        / Rat::from(BigInt::from(factorial));
    assert_eq!(disc_weighted, by_pairs, "class and pair sums agree");
    assert_eq!(
        unweighted,
        Rat::new(BigInt::from(pairs.len() as u64), BigInt::from(factorial)),
        "unweighted mass is the pair count over n!"
    );

    Ok(TameLocalMass {
        n,
        q0,
        classes,
        disc_weighted,
        unweighted,
    })
}

/// The tame-regime value of `sum 1/#Aut` over degree-`n` etale algebras,
/// which is the partition number `p(n)` independently of the residue field:
/// for each inertia image `tau`, `tau^{q0}` has the same cycle type as `tau`
/// (cycle lengths are coprime to `q0`), so the Frobenius candidates form a
/// full centralizer coset and the pair count is `sum_tau #C(tau)`, which is
/// `n!` times the number of conjugacy classes of `S_n`.
pub fn tame_unweighted_mass(n: u32) -> Result<Rat> {
    if !(1..=5).contains(&n) {
        return Err(Error::UnsupportedDegree);
    }
    Ok(Rat::from(partitions_at_most(n as i64, n as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn cubic_masses_at_residue_size_five() {
        let t = tame_local_mass_oracle(3, 5).unwrap();
        assert_eq!(t.disc_weighted, rat(1, 1) + rat(1, 5) + rat(1, 25));
        assert_eq!(t.unweighted, rat(3, 1));
        let unramified: Rat = t
            .classes
            .iter()
            .filter(|c| c.is_unramified())
            .map(|c| rat(1, c.aut_order as i64))
            .sum();
        assert_eq!(unramified, rat(1, 1));
        let shapes: Vec<String> = t
            .classes
            .iter()
            .filter(|c| c.is_unramified())
            .map(|c| c.shape())
            .collect();
        assert_eq!(shapes, ["1 1 1", "1 2", "3"]);
    }

    #[test]
    fn ramified_cubic_classes_depend_on_the_residue_size() {
        // Totally ramified cubics: for q0 = 1 mod 3 there are three cyclic
        // ones, for q0 = 2 mod 3 a single class without automorphisms; the
        // stratum mass is 1 either way.
        for (q0, expected_auts) in [(7u64, vec![3u64, 3, 3]), (5, vec![1])] {
            let t = tame_local_mass_oracle(3, q0).unwrap();
            let mut auts: Vec<u64> = t
                .classes
                .iter()
                .filter(|c| c.shape() == "1^3")
                .map(|c| c.aut_order)
                .collect();
            auts.sort_unstable();
            assert_eq!(auts, expected_auts, "q0 = {q0}");
            let stratum: Rat = t
                .classes
                .iter()
                .filter(|c| c.shape() == "1^3")
                .map(|c| rat(1, c.aut_order as i64))
                .sum();
            assert_eq!(stratum, rat(1, 1));
            // Ramified quadratic times a line: two classes, each with the
            // quadratic's automorphism of order 2, another stratum of mass 1.
            let quad: Vec<u64> = t
                .classes
                .iter()
                .filter(|c| c.shape() == "1^2 1")
                .map(|c| c.aut_order)
                .collect();
            assert_eq!(quad, vec![2, 2], "q0 = {q0}");
        }
    }

    #[test]
    fn wild_and_malformed_inputs_are_rejected() {
        assert!(matches!(
            tame_local_mass_oracle(3, 3),
            Err(Error::WildRamification)
        ));
        assert!(matches!(
            tame_local_mass_oracle(5, 25),
            Err(Error::WildRamification)
        ));
        assert!(matches!(
            tame_local_mass_oracle(2, 4),
            Err(Error::WildRamification)
        ));
        assert!(matches!(
            tame_local_mass_oracle(3, 6),
            Err(Error::Invalid(_))
        ));
        assert!(matches!(
            tame_local_mass_oracle(3, 1),
            Err(Error::Invalid(_))
        ));
        assert!(tame_local_mass_oracle(0, 7).is_err());
        assert!(tame_local_mass_oracle(6, 101).is_err());
        // 25 is tame for quartics: the residue characteristic is 5 > 4.
        assert!(tame_local_mass_oracle(4, 25).is_ok());
    }

    #[test]
    fn oracle_reproduces_the_partition_mass_formula() {
        let grid: [(u32, &[u64]); 4] = [
            (2, &[5, 7, 11, 13, 25]),
            (3, &[5, 7, 11, 13, 25]),
            (4, &[7, 11, 13]),
            (5, &[7, 11, 13]),
        ];
        for (n, sizes) in grid {
            for &q0 in sizes {
                let t = tame_local_mass_oracle(n, q0).unwrap();
                let formula: Rat = (0..n as i64)
                    .map(|k| Rat::from(partitions_at_most(k, n as i64 - k)) * rat_pow(q0, -k))
                    .sum();
                assert_eq!(t.disc_weighted, formula, "n={n} q0={q0}");
            }
        }
    }

    #[test]
    fn unweighted_mass_is_the_partition_number() {
        for (n, sizes) in [
            (1u32, vec![3u64, 5]),
            (2, vec![5, 7, 9, 11]),
            (3, vec![5, 7, 11, 13, 25]),
            (4, vec![7, 11, 13, 25]),
            (5, vec![7, 11, 13]),
        ] {
            let expected = tame_unweighted_mass(n).unwrap();
            for q0 in sizes {
                let t = tame_local_mass_oracle(n, q0).unwrap();
                assert_eq!(t.unweighted, expected, "n={n} q0={q0}");
            }
        }
        assert_eq!(tame_unweighted_mass(2).unwrap(), rat(2, 1));
        assert_eq!(tame_unweighted_mass(3).unwrap(), rat(3, 1));
        assert_eq!(tame_unweighted_mass(4).unwrap(), rat(5, 1));
        assert_eq!(tame_unweighted_mass(5).unwrap(), rat(7, 1));
    }

    #[test]
    fn class_structure_is_internally_consistent() {
        for (n, q0) in [(2u32, 7u64), (3, 7), (4, 7), (5, 11)] {
            let t = tame_local_mass_oracle(n, q0).unwrap();
            for c in &t.classes {
                let total: u32 = c
                    .pieces
                    .iter()
                    .map(|p| p.residue_degree * p.ram_index)
                    .sum();
                assert_eq!(total, n);
                let v: u32 = c
                    .pieces
                    .iter()
                    .map(|p| p.residue_degree * (p.ram_index - 1))
                    .sum();
                assert_eq!(v, c.disc_valuation);
            }
            // The unramified classes match the conjugacy classes of S_n.
            let unram = t.classes.iter().filter(|c| c.is_unramified()).count();
            let partition_count = partitions_at_most(n as i64, n as i64);
            assert_eq!(BigInt::from(unram as u64), partition_count);
        }
    }

    #[test]
    fn degree_one_is_the_trivial_algebra() {
        let t = tame_local_mass_oracle(1, 5).unwrap();
        assert_eq!(t.classes.len(), 1);
        assert_eq!(t.classes[0].aut_order, 1);
        assert_eq!(t.disc_weighted, rat(1, 1));
        assert_eq!(t.unweighted, rat(1, 1));
    }
}
