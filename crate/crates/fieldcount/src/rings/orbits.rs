//! Orbit census of the nondegenerate locus of `V_n(F_q)`.
//!
//! The acting group is `F_q^*` for `n = 2`, `GL_2(F_q)` for `n = 3`, and
//! `(GL_2 x GL_3)/{(s^2, s^{-1})}` for `n = 4`. Orbits are computed by a
//! union-find sweep: every nondegenerate vector is joined to its image under
//! each member of a fixed generating set (elementary transvections along a
//! basis of `F_q` over its prime field, plus one diagonal torus element), so
//! connected components are exactly the group orbits. Each orbit row carries
//! the minimal-index representative, the orbit size, the stabilizer order
//! `|G| / size`, and the splitting type of the representative.

use crate::arith::{Field, FqCtx, FqElem};
use crate::forms::{Form, GroupElem, GroupElemV4, Mat2, Mat3};
use crate::par::{self, ExecMode};
use crate::rings::splitting::{splitting_type_of, SplittingType};
use crate::{Error, Result};

/// Largest group order the brute-force stabilizer sweep accepts.
pub const DEFAULT_GROUP_BUDGET: u64 = 10_000_000;

/// Largest vector-space size the census sweep accepts.
pub const CENSUS_SPACE_BUDGET: u64 = 100_000_000;

/// Dimension of the representation of degree `n`.
pub fn dim_v(n: u32) -> Result<u32> {
    match n {
        2 => Ok(1),
        3 => Ok(4),
        4 => Ok(12),
        _ => Err(Error::UnsupportedDegree),
    }
}

/// Order of the acting group over `F_q`.
pub fn group_order(n: u32, q: u64) -> Result<u64> {
    let q = q as u128;
    let gl2 = (q * q - 1) * (q * q - q);
    let order = match n {
        2 => q - 1,
        3 => gl2,
        4 => {
            let q3 = q * q * q;
            let gl3 = (q3 - 1) * (q3 - q) * (q3 - q * q);
            gl2 * gl3 / (q - 1)
        }
        _ => return Err(Error::UnsupportedDegree),
    };
    order
        .try_into()
        .map_err(|_| Error::invalid("group order overflows u64"))
}

fn distinct_prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// An element of multiplicative order `q - 1`.
pub fn multiplicative_generator(ctx: &FqCtx) -> FqElem {
    let q = ctx.order();
    let factors = distinct_prime_factors(q - 1);
    for idx in 1..q {
        let x = ctx.elem_from_index(idx);
        if factors
            .iter()
            .all(|&l| !x.pow(((q - 1) / l) as u128).is_one())
        {
            return x;
        }
    }
    unreachable!("a finite field has a primitive element")
}

/// Basis of `F_q` over its prime field, in index order.
pub fn field_basis(ctx: &FqCtx) -> Vec<FqElem> {
    let p = ctx.characteristic();
    let e = ctx.sample().degree_over_prime();
    (0..e).map(|i| ctx.elem_from_index(p.pow(i))).collect()
}

fn gl2_generators(ctx: &FqCtx) -> Vec<Mat2<FqElem>> {
    let one = ctx.elem_from_int(1);
    let zero = ctx.elem_from_int(0);
    let gamma = multiplicative_generator(ctx);
    let mut out = Vec::new();
    for b in field_basis(ctx) {
        out.push(Mat2::new([[one.clone(), b.clone()], [zero.clone(), one.clone()]]));
        out.push(Mat2::new([[one.clone(), zero.clone()], [b, one.clone()]]));
    }
    out.push(Mat2::new([[gamma, zero.clone()], [zero, one]]));
    out
}

fn gl3_generators(ctx: &FqCtx) -> Vec<Mat3<FqElem>> {
    let gamma = multiplicative_generator(ctx);
    let mut out = Vec::new();
    for b in field_basis(ctx) {
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let mut m = Mat3::identity(ctx.sample());
                    m.e[i][j] = b.clone();
                    out.push(m);
                }
            }
        }
    }
    let mut d = Mat3::identity(ctx.sample());
    d.e[0][0] = gamma;
    out.push(d);
    out
}

/// A generating set of the acting group of degree `n`.
pub fn generators(n: u32, ctx: &FqCtx) -> Result<Vec<GroupElem<FqElem>>> {
    match n {
        2 => Ok(vec![GroupElem::V2(multiplicative_generator(ctx))]),
        3 => Ok(gl2_generators(ctx).into_iter().map(GroupElem::V3).collect()),
        4 => {
            let i2 = Mat2::identity(ctx.sample());
            let i3 = Mat3::identity(ctx.sample());
            let mut out: Vec<GroupElem<FqElem>> = gl2_generators(ctx)
                .into_iter()
                .map(|g2| GroupElem::V4(GroupElemV4::new(g2, i3.clone())))
                .collect();
            out.extend(
                gl3_generators(ctx)
                    .into_iter()
                    .map(|g3| GroupElem::V4(GroupElemV4::new(i2.clone(), g3))),
            );
            Ok(out)
        }
        _ => Err(Error::UnsupportedDegree),
    }
}

/// Index of a form in the mixed-radix enumeration of its coefficient space.
fn encode(f: &Form<FqElem>, q: u64) -> u64 {
    let mut idx = 0;
    for c in f.to_coeff_vec().into_iter().rev() {
        idx = idx * q + c.index();
    }
    idx
}

fn decode(n: u32, ctx: &FqCtx, mut idx: u64, dim: u32) -> Form<FqElem> {
    let q = ctx.order();
    let coeffs: Vec<FqElem> = (0..dim)
        .map(|_| {
            let c = ctx.elem_from_index(idx % q);
            idx /= q;
            c
        })
        .collect();
    Form::from_coeff_vec(n, coeffs).expect("decoded coefficient count matches the degree")
}

fn all_invertible_mat2(ctx: &FqCtx) -> Vec<Mat2<FqElem>> {
    let q = ctx.order();
    let mut out = Vec::new();
    for idx in 0..q.pow(4) {
        let mut k = idx;
        let mut entry = || {
            let c = ctx.elem_from_index(k % q);
            k /= q;
            c
        };
        let m = Mat2::new([[entry(), entry()], [entry(), entry()]]);
        if !m.det().is_zero() {
            out.push(m);
        }
    }
    out
}

fn all_invertible_mat3(ctx: &FqCtx) -> Vec<Mat3<FqElem>> {
    let q = ctx.order();
    let mut out = Vec::new();
    for idx in 0..q.pow(9) {
        let mut k = idx;
        let mut entry = || {
            let c = ctx.elem_from_index(k % q);
            k /= q;
            c
        };
        let m = Mat3::new([
            [entry(), entry(), entry()],
            [entry(), entry(), entry()],
            [entry(), entry(), entry()],
        ]);
        if !m.det().is_zero() {
            out.push(m);
        }
    }
    out
}

/// Order of the stabilizer of a nondegenerate form, by sweeping the whole
/// group. Errors when the group order exceeds `budget`.
pub fn stabilizer_order(f: &Form<FqElem>, ctx: &FqCtx, budget: u64) -> Result<u64> {
    if f.disc().is_zero() {
        return Err(match f {
            Form::V4(_) => Error::DegeneratePair,
            _ => Error::DegenerateForm,
        });
    }
    let q = ctx.order();
    let order = group_order(f.n(), q)?;
    if order > budget {
        return Err(Error::Budget(format!(
            "group order {order} exceeds the stabilizer sweep budget {budget}"
        )));
    }
    let count = match f {
        Form::V2(_) => (1..q)
            .filter(|&i| {
                let g = GroupElem::V2(ctx.elem_from_index(i));
                f.act(&g).unwrap() == *f
            })
            .count() as u64,
        Form::V3(_) => all_invertible_mat2(ctx)
            .into_iter()
            .filter(|g| f.act(&GroupElem::V3(g.clone())).unwrap() == *f)
            .count() as u64,
        Form::V4(_) => {
            // pairs overcount by the kernel {(s^2, s^{-1})} of size q - 1
            let mut fixed = 0u64;
            for g3 in all_invertible_mat3(ctx) {
                for g2 in all_invertible_mat2(ctx) {
                    let g = GroupElem::V4(GroupElemV4::new(g2, g3.clone()));
                    if f.act(&g).unwrap() == *f {
                        fixed += 1;
                    }
                }
            }
            assert_eq!(fixed % (q - 1), 0, "kernel acts freely on the fixing pairs");
            fixed / (q - 1)
        }
    };
    Ok(count)
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
    }
}

/// One orbit of the nondegenerate locus.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitRow {
    /// Coefficients of the minimal-index representative, in storage order.
    pub rep: Vec<FqElem>,
    pub orbit_size: u64,
    pub stab: u64,
    pub splitting_type: SplittingType,
}

/// Full orbit decomposition of `{disc != 0}` in `V_n(F_q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitCensus {
    pub n: u32,
    pub q: u64,
    pub group_order: u64,
    pub rows: Vec<OrbitRow>,
}

impl OrbitCensus {
    /// Number of nondegenerate vectors, summed over orbits.
    pub fn total_points(&self) -> u64 {
        self.rows.iter().map(|r| r.orbit_size).sum()
    }

    /// One line per orbit: `rep;orbit_size;stab;splitting_type`, with the
    /// representative's coefficients comma-separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rep;orbit_size;stab;splitting_type\n");
        for row in &self.rows {
            let rep = row
                .rep
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!(
                "{rep};{};{};{}\n",
                row.orbit_size, row.stab, row.splitting_type
            ));
        }
        out
    }
}

/// Decomposes the nondegenerate locus of `V_n(F_q)` into group orbits.
///
/// Errors when `q^dim` exceeds [`CENSUS_SPACE_BUDGET`]. Both execution modes
/// produce identical censuses: representatives are minimal-index, rows are
/// sorted by representative index, and the partition itself does not depend
/// on edge order.
pub fn orbit_census_fq(n: u32, ctx: &FqCtx, mode: ExecMode) -> Result<OrbitCensus> {
    let dim = dim_v(n)?;
    let q = ctx.order();
    let space = (q as u128).pow(dim);
    if space > CENSUS_SPACE_BUDGET as u128 {
        return Err(Error::Budget(format!(
            "census space q^{dim} = {space} exceeds {CENSUS_SPACE_BUDGET}"
        )));
    }
    let total = space as u64;
    let gens = generators(n, ctx)?;
    let order = group_order(n, q)?;

    // one decode pass per block marks nondegenerate indices and lists the
    // generator edges leaving them
    const BLOCK: u64 = 1 << 12;
    let blocks: Vec<u64> = (0..total).step_by(BLOCK as usize).collect();
    let swept = par::map_collect(mode, blocks, |start| {
        let hi = (start + BLOCK).min(total);
        let mut mask = vec![0u64; (BLOCK / 64) as usize];
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for idx in start..hi {
            let f = decode(n, ctx, idx, dim);
            if f.disc().is_zero() {
                continue;
            }
            let off = idx - start;
            mask[(off / 64) as usize] |= 1 << (off % 64);
            for g in &gens {
                let image = f.act(g).expect("census generators are invertible");
                edges.push((idx as u32, encode(&image, q) as u32));
            }
        }
        (mask, edges)
    });

    let mut nondeg_mask: Vec<u64> = Vec::with_capacity(total.div_ceil(64) as usize);
    let mut uf = UnionFind::new(total as usize);
    for (mask, edges) in swept {
        nondeg_mask.extend_from_slice(&mask);
        for (a, b) in edges {
            uf.union(a, b);
        }
    }
    let is_nondeg =
        |idx: u64| nondeg_mask[(idx / 64) as usize] >> (idx % 64) & 1 == 1;

    // ascending sweep: the first index reaching a root is the orbit's
    // minimal representative
    let mut reps: Vec<(u32, u64)> = Vec::new();
    let mut root_slot: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    for idx in 0..total {
        if !is_nondeg(idx) {
            continue;
        }
        let root = uf.find(idx as u32);
        match root_slot.entry(root) {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(reps.len());
                reps.push((idx as u32, 1));
            }
            std::collections::hash_map::Entry::Occupied(o) => {
                reps[*o.get()].1 += 1;
            }
        }
    }

    let mut rows = Vec::with_capacity(reps.len());
    for (min_idx, size) in reps {
        let f = decode(n, ctx, min_idx as u64, dim);
        assert_eq!(order % size, 0, "orbit size divides the group order");
        rows.push(OrbitRow {
            rep: f.to_coeff_vec(),
            orbit_size: size,
            stab: order / size,
            splitting_type: splitting_type_of(&f)?,
        });
    }
    Ok(OrbitCensus {
        n,
        q,
        group_order: order,
        rows,
    })
}
