//! Maximality of cubic rings over `F_q[t]` at a finite place.
//!
//! The ring `R` of a form `f` fails to be maximal at `pi` exactly when some
//! strictly larger ring sits between `R` and `pi^{-1} R`. Any such ring is
//! `R + O*(y/pi)` for a line, or `R + O*(y1/pi) + O*(y2/pi)` for a plane, in
//! the reduction `R/pi R` (an enlargement of index `pi^3` forces `f = 0 mod
//! pi`, in which case the plane `(omega, theta)` already closes). Closure
//! under multiplication forces the candidate line to be a simultaneous
//! eigenvector of multiplication by `omega` and `theta` on `R/pi R`, and the
//! candidate plane to be a simultaneous invariant plane, so eigen-analysis
//! over the residue field enumerates every candidate; each is then checked
//! exactly over `F_q[t]`. [`is_maximal_by_scan`] checks the same conditions
//! on every line and plane of `R/pi R` with no eigen shortcut, as a
//! completeness oracle.

use std::sync::Arc;

use crate::arith::factor::roots_with_multiplicity;
use crate::arith::linalg::{in_span, mat_vec, null_space, rank, rref};
use crate::arith::{Ext, ExtCtx, Field, FqElem, Place, Poly, PolyFq};
use crate::forms::{FormV3, Mat3};
use crate::rings::cubic::CubicRing;
use crate::rings::splitting::reduce_form_v3;
use crate::{Error, Result};

/// Residue-field element of a place of `F_q(t)`.
type K = Ext<FqElem>;

/// Generators, as coordinates over `(1, omega, theta)`, of a ring strictly
/// between `R` and `pi^{-1} R`: the witness denies maximality and can be
/// re-verified independently with [`verify_witness`].
#[derive(Clone, Debug, PartialEq)]
pub enum EnlargementWitness {
    /// `R + O*(y/pi)` is a ring.
    Line([PolyFq; 3]),
    /// `R + O*(y1/pi) + O*(y2/pi)` is a ring.
    Plane([PolyFq; 3], [PolyFq; 3]),
}

/// Outcome of a maximality test at one finite place.
#[derive(Clone, Debug, PartialEq)]
pub struct MaximalityVerdict {
    pub maximal: bool,
    /// Present exactly when non-maximal.
    pub witness: Option<EnlargementWitness>,
}

impl MaximalityVerdict {
    fn maximal() -> Self {
        MaximalityVerdict {
            maximal: true,
            witness: None,
        }
    }

    fn enlarged(w: EnlargementWitness) -> Self {
        MaximalityVerdict {
            maximal: false,
            witness: Some(w),
        }
    }
}

fn finite_part(place: &Place) -> Result<&PolyFq> {
    match place {
        Place::Finite(pi) => Ok(pi),
        Place::Infinity => Err(Error::invalid(
            "maximality is tested at finite places only",
        )),
    }
}

/// Tests whether the cubic ring of `f` is maximal at a finite place.
///
/// Errors with "degenerate form" when `disc(f) = 0`. A non-maximal verdict
/// carries a witness enlargement.
pub fn is_maximal_at(f: &FormV3<PolyFq>, place: &Place) -> Result<MaximalityVerdict> {
    let disc = f.disc();
    if disc.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let pi = finite_part(place)?;
    // an enlargement of index pi^j divides the disc by pi^{2j}, which must
    // stay integral
    if place.valuation_poly(&disc)? < 2 {
        return Ok(MaximalityVerdict::maximal());
    }
    let kctx = place.residue_field()?;
    let ring = CubicRing::new(f.clone());
    let (mw, mt) = reduced_mult_operators(f, &kctx);
    for cand in simultaneous_eigenlines(&mw, &mt) {
        let y = lift3(&cand);
        if line_closes(&ring, pi, &kctx, &y) {
            return Ok(MaximalityVerdict::enlarged(EnlargementWitness::Line(y)));
        }
    }
    for (p1, p2) in simultaneous_invariant_planes(&mw, &mt) {
        let (y1, y2) = (lift3(&p1), lift3(&p2));
        if plane_closes(&ring, pi, &kctx, &y1, &y2) {
            return Ok(MaximalityVerdict::enlarged(EnlargementWitness::Plane(
                y1, y2,
            )));
        }
    }
    Ok(MaximalityVerdict::maximal())
}

/// Same verdict as [`is_maximal_at`], produced by testing every line and
/// every plane of `R/pi R` directly. The candidate count is
/// `2(N^2 + N + 1)` for `N` the residue-field size; exceeding `budget`
/// errors instead of scanning.
pub fn is_maximal_by_scan(
    f: &FormV3<PolyFq>,
    place: &Place,
    budget: u64,
) -> Result<MaximalityVerdict> {
    let disc = f.disc();
    if disc.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let pi = finite_part(place)?;
    if place.valuation_poly(&disc)? < 2 {
        return Ok(MaximalityVerdict::maximal());
    }
    let kctx = place.residue_field()?;
    let zero = Ext::zero_of(&kctx);
    let n = zero.order();
    let candidates = 2 * (n * n + n + 1);
    if candidates > budget {
        return Err(Error::Budget(format!(
            "{candidates} enlargement candidates at a degree-{} place, budget {budget}",
            place.degree()
        )));
    }
    let ring = CubicRing::new(f.clone());
    let lines = normalized_triples(&zero);
    for cand in &lines {
        let y = lift3(cand);
        if line_closes(&ring, pi, &kctx, &y) {
            return Ok(MaximalityVerdict::enlarged(EnlargementWitness::Line(y)));
        }
    }
    for phi in &lines {
        let basis = null_space(&[phi.clone()], &zero);
        assert_eq!(basis.len(), 2, "a nonzero functional on k^3 has a plane kernel");
        let (y1, y2) = (lift3(&basis[0]), lift3(&basis[1]));
        if plane_closes(&ring, pi, &kctx, &y1, &y2) {
            return Ok(MaximalityVerdict::enlarged(EnlargementWitness::Plane(
                y1, y2,
            )));
        }
    }
    Ok(MaximalityVerdict::maximal())
}

/// Re-verifies a witness from scratch: the generated module must close under
/// multiplication and the enlarged ring's disc `disc(f)/pi^{2j}` must stay
/// integral.
pub fn verify_witness(
    f: &FormV3<PolyFq>,
    place: &Place,
    witness: &EnlargementWitness,
) -> Result<bool> {
    let disc = f.disc();
    if disc.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let pi = finite_part(place)?;
    let kctx = place.residue_field()?;
    let ring = CubicRing::new(f.clone());
    let (closes, index) = match witness {
        EnlargementWitness::Line(y) => (line_closes(&ring, pi, &kctx, y), 1),
        EnlargementWitness::Plane(y1, y2) => (plane_closes(&ring, pi, &kctx, y1, y2), 2),
    };
    Ok(closes && place.valuation_poly(&disc)? >= 2 * index)
}

/// Matrices of multiplication by `omega` and `theta` on `R/pi R`, as rows.
fn reduced_mult_operators(
    f: &FormV3<PolyFq>,
    kctx: &Arc<ExtCtx<FqElem>>,
) -> (Vec<Vec<K>>, Vec<Vec<K>>) {
    let rbar = CubicRing::new(reduce_form_v3(f, kctx));
    let rows = |m: Mat3<K>| -> Vec<Vec<K>> { m.e.into_iter().map(|r| r.to_vec()).collect() };
    (
        rows(rbar.mult_matrix(&rbar.omega())),
        rows(rbar.mult_matrix(&rbar.theta())),
    )
}

fn lift3(v: &[K]) -> [PolyFq; 3] {
    std::array::from_fn(|i| v[i].to_poly())
}

fn reduce3(kctx: &Arc<ExtCtx<FqElem>>, coords: &[PolyFq]) -> Vec<K> {
    coords.iter().map(|c| Ext::from_poly(kctx, c)).collect()
}

/// Whether `R + O*(y/pi)` is closed under multiplication: `y*omega` and
/// `y*theta` must land in `k*ybar` mod `pi`, and `y^2` must land in
/// `pi^2 R + pi O y`.
fn line_closes(
    ring: &CubicRing<PolyFq>,
    pi: &PolyFq,
    kctx: &Arc<ExtCtx<FqElem>>,
    y: &[PolyFq; 3],
) -> bool {
    let ybar = reduce3(kctx, y);
    if ybar.iter().all(|c| c.is_zero()) {
        return false;
    }
    let span = [ybar];
    let ye = ring.elem(y[0].clone(), y[1].clone(), y[2].clone());
    for gen in [ring.omega(), ring.theta()] {
        let prod = ring.mul(&ye, &gen);
        if !in_span(&span, &reduce3(kctx, &prod.c)) {
            return false;
        }
    }
    let sq = ring.mul(&ye, &ye);
    let Some(w) = divide_coords(&sq.c, pi) else {
        return false;
    };
    in_span(&span, &reduce3(kctx, &w))
}

/// Whether `R + O*(y1/pi) + O*(y2/pi)` is closed under multiplication.
fn plane_closes(
    ring: &CubicRing<PolyFq>,
    pi: &PolyFq,
    kctx: &Arc<ExtCtx<FqElem>>,
    y1: &[PolyFq; 3],
    y2: &[PolyFq; 3],
) -> bool {
    let b1 = reduce3(kctx, y1);
    let b2 = reduce3(kctx, y2);
    if rank(&[b1.clone(), b2.clone()]) != 2 {
        return false;
    }
    let span = [b1, b2];
    let e1 = ring.elem(y1[0].clone(), y1[1].clone(), y1[2].clone());
    let e2 = ring.elem(y2[0].clone(), y2[1].clone(), y2[2].clone());
    for ye in [&e1, &e2] {
        for gen in [ring.omega(), ring.theta()] {
            let prod = ring.mul(ye, &gen);
            if !in_span(&span, &reduce3(kctx, &prod.c)) {
                return false;
            }
        }
    }
    for (xi, xj) in [(&e1, &e1), (&e1, &e2), (&e2, &e2)] {
        let prod = ring.mul(xi, xj);
        let Some(w) = divide_coords(&prod.c, pi) else {
            return false;
        };
        if !in_span(&span, &reduce3(kctx, &w)) {
            return false;
        }
    }
    true
}

/// Divides every coordinate exactly by `pi`, or reports indivisibility.
fn divide_coords(coords: &[PolyFq; 3], pi: &PolyFq) -> Option<Vec<PolyFq>> {
    let mut out = Vec::with_capacity(3);
    for c in coords {
        let (q, r) = c.divmod(pi);
        if !r.is_zero() {
            return None;
        }
        out.push(q);
    }
    Some(out)
}

/// All lines of `k^3`, one normalized representative each.
fn normalized_triples(zero: &K) -> Vec<Vec<K>> {
    let elems = zero.all_elements();
    let one = zero.one();
    let mut out = Vec::new();
    for y in &elems {
        for z in &elems {
            out.push(vec![one.clone(), y.clone(), z.clone()]);
        }
    }
    for z in &elems {
        out.push(vec![zero.clone(), one.clone(), z.clone()]);
    }
    out.push(vec![zero.clone(), zero.clone(), one.clone()]);
    out
}

fn scale_line(v: &[K], k: &K) -> Vec<K> {
    v.iter().map(|x| x.mul(k)).collect()
}

fn normalize_line(v: &[K]) -> Vec<K> {
    let pivot = v
        .iter()
        .find(|x| !x.is_zero())
        .expect("candidate lines are nonzero");
    scale_line(v, &pivot.inv().expect("nonzero residue-field element"))
}

fn push_line(out: &mut Vec<Vec<K>>, v: &[K]) {
    let n = normalize_line(v);
    if !out.contains(&n) {
        out.push(n);
    }
}

fn mat_minus_scalar(m: &[Vec<K>], lam: &K) -> Vec<Vec<K>> {
    let mut out = m.to_vec();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = row[i].sub(lam);
    }
    out
}

fn char_poly3(m: &[Vec<K>]) -> Poly<K> {
    let x = Poly::var(&m[0][0]);
    let entry = |i: usize, j: usize| -> Poly<K> {
        let c = Poly::constant(&m[i][j]);
        if i == j {
            x.sub(&c)
        } else {
            c.neg()
        }
    };
    Mat3::new([
        [entry(0, 0), entry(0, 1), entry(0, 2)],
        [entry(1, 0), entry(1, 1), entry(1, 2)],
        [entry(2, 0), entry(2, 1), entry(2, 2)],
    ])
    .det()
}

/// Coordinates of `v` in the span of an independent `basis`, if it lies
/// there.
fn express_in_span(basis: &[Vec<K>], v: &[K]) -> Option<Vec<K>> {
    let cols = basis.len();
    let zero = v[0].zero();
    let mut m: Vec<Vec<K>> = (0..v.len())
        .map(|i| {
            let mut row: Vec<K> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&cols) {
        return None;
    }
    let mut sol = vec![zero; cols];
    for (r, &pc) in pivots.iter().enumerate() {
        sol[pc] = m[r][cols].clone();
    }
    Some(sol)
}

/// Lines of `k^3` that are eigenvectors of both operators. Complete: any
/// line with `mw`- and `mt`-stable span appears (multiplication operators of
/// a commutative ring commute, so each `mw`-eigenspace is `mt`-stable).
fn simultaneous_eigenlines(mw: &[Vec<K>], mt: &[Vec<K>]) -> Vec<Vec<K>> {
    let sample = &mw[0][0];
    let mut out: Vec<Vec<K>> = Vec::new();
    for (lam, _) in roots_with_multiplicity(&char_poly3(mw)) {
        let space = null_space(&mat_minus_scalar(mw, &lam), sample);
        match space.len() {
            0 => continue,
            1 => {
                let v = &space[0];
                if in_span(&[v.clone()], &mat_vec(mt, v)) {
                    push_line(&mut out, v);
                }
            }
            2 => {
                let c0 = express_in_span(&space, &mat_vec(mt, &space[0]))
                    .expect("commuting operators preserve eigenspaces");
                let c1 = express_in_span(&space, &mat_vec(mt, &space[1]))
                    .expect("commuting operators preserve eigenspaces");
                let combine = |s: &K, u: &K| -> Vec<K> {
                    (0..3)
                        .map(|i| space[0][i].mul(s).add(&space[1][i].mul(u)))
                        .collect()
                };
                // restriction of mt to the eigenspace, columns c0 and c1
                let (p, r) = (c0[0].clone(), c0[1].clone());
                let (q, s) = (c1[0].clone(), c1[1].clone());
                let x = Poly::var(sample);
                let tr = p.add(&s);
                let det = p.mul(&s).sub(&q.mul(&r));
                let cp = x
                    .mul(&x)
                    .sub(&Poly::constant(&tr).mul(&x))
                    .add(&Poly::constant(&det));
                for (mu, _) in roots_with_multiplicity(&cp) {
                    let bp = p.sub(&mu);
                    let bs = s.sub(&mu);
                    if bp.is_zero() && q.is_zero() && r.is_zero() && bs.is_zero() {
                        // scalar restriction: every line of the eigenspace
                        for c in sample.all_elements() {
                            push_line(&mut out, &combine(&sample.one(), &c));
                        }
                        push_line(&mut out, &combine(&sample.zero(), &sample.one()));
                    } else if !bp.is_zero() || !q.is_zero() {
                        push_line(&mut out, &combine(&q, &bp.neg()));
                    } else {
                        push_line(&mut out, &combine(&bs, &r.neg()));
                    }
                }
            }
            // multiplication by omega sends 1 to omega, so it is never scalar
            _ => unreachable!("a mult-by-omega operator has no 3-dimensional eigenspace"),
        }
    }
    out
}

fn transpose3(m: &[Vec<K>]) -> Vec<Vec<K>> {
    (0..3)
        .map(|j| (0..3).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// Planes of `k^3` invariant under both operators, each as a basis pair.
/// Complete by duality: a plane is invariant exactly when its annihilator
/// line is an eigenline of both transposes.
fn simultaneous_invariant_planes(mw: &[Vec<K>], mt: &[Vec<K>]) -> Vec<(Vec<K>, Vec<K>)> {
    let sample = &mw[0][0];
    simultaneous_eigenlines(&transpose3(mw), &transpose3(mt))
        .into_iter()
        .map(|phi| {
            let basis = null_space(&[phi], sample);
            assert_eq!(basis.len(), 2, "a nonzero functional on k^3 has a plane kernel");
            (basis[0].clone(), basis[1].clone())
        })
        .collect()
}
