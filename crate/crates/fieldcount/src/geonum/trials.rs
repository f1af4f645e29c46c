//! Randomized verification runs shared by the test suite and the command
//! line.
//!
//! Expansion trials build random box unions over random windows, scale them
//! past the expansion threshold, and compare three quantities that must
//! agree there: the spectral count from Poisson summation, the normalized
//! volume, and (budget permitting) the direct enumeration of lattice
//! points. Skew sweeps tabulate the projection bound against the exact
//! count over a grid of mixed shrink/grow scalings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::boxes::{AxisBox, BoxKS, BoxMember, PlaceSet};
use super::func::RatFunc;
use super::poisson::{
    exact_count_check, lattice_points_direct, skew_count_bound, standard_fundamental_domain,
    tiling_check,
};
use crate::arith::{Field, FqCfg, FqCtx, Place, Poly, PolyFq};
use crate::{Error, Result};

/// Outcome of one expansion trial: a random box scaled past the threshold,
/// counted three ways. Exact values are reported as decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct ExpansionTrial {
    pub q: u64,
    pub window: Vec<String>,
    pub axes: usize,
    pub members: usize,
    pub scaling: Vec<String>,
    pub count: String,
    pub volume: String,
    pub threshold_met: bool,
    pub direct_count: Option<String>,
    pub matches_volume: bool,
    pub matches_direct: Option<bool>,
}

/// One grid point of a skew sweep: the exact count of a mixed-scaled box
/// against its projection bound.
#[derive(Debug, Clone, Serialize)]
pub struct SkewTrial {
    pub shrink_exponent: i64,
    pub grow_exponent: i64,
    pub count: String,
    pub bound: String,
    pub within_bound: bool,
    pub tight: bool,
}

/// Tiling verification of one window's fundamental domain.
#[derive(Debug, Clone, Serialize)]
pub struct TilingSummary {
    pub window: Vec<String>,
    pub level: i64,
    pub covolume: String,
    pub cosets_checked: u64,
}

/// Full verification report for one base field, as the command line
/// prints it.
#[derive(Debug, Clone, Serialize)]
pub struct GeonumReport {
    pub q: u64,
    pub seed: u64,
    pub expansion_trials: Vec<ExpansionTrial>,
    pub skew_sweep: Vec<SkewTrial>,
    pub tilings: Vec<TilingSummary>,
}

/// Window shapes the trials draw from, paired with a scaling function of
/// absolute value `q` on the window.
fn window_pool(ctx: &FqCtx) -> Vec<(PlaceSet, RatFunc)> {
    let sample = ctx.sample();
    let t = || Place::finite(ctx.poly_from_ints(&[0, 1])).expect("t is irreducible");
    let t1 = || Place::finite(ctx.poly_from_ints(&[1, 1])).expect("t + 1 is irreducible");
    let grow_t = RatFunc::from_poly(ctx.poly_from_ints(&[0, 1]));
    let grow_t1 = RatFunc::from_poly(ctx.poly_from_ints(&[1, 1]));
    let grow_inv_t = RatFunc::t_power(sample, -1);
    vec![
        (
            PlaceSet::new(sample, vec![Place::Infinity]).expect("valid window"),
            grow_t.clone(),
        ),
        (
            PlaceSet::new(sample, vec![Place::Infinity, t()]).expect("valid window"),
            grow_t1.clone(),
        ),
        (
            PlaceSet::new(sample, vec![t()]).expect("valid window"),
            grow_inv_t.clone(),
        ),
        (
            PlaceSet::new(sample, vec![Place::Infinity, t1()]).expect("valid window"),
            grow_t,
        ),
        (
            PlaceSet::new(sample, vec![t(), t1()]).expect("valid window"),
            grow_inv_t,
        ),
    ]
}

fn random_poly(ctx: &FqCtx, rng: &mut ChaCha8Rng, max_degree: usize) -> PolyFq {
    let sample = ctx.sample();
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree)
        .map(|_| sample.from_index(rng.gen_range(0..sample.order())))
        .collect();
    Poly::from_coeffs(sample, coeffs)
}

fn random_shift(ctx: &FqCtx, rng: &mut ChaCha8Rng, s: &PlaceSet) -> Option<RatFunc> {
    match rng.gen_range(0..4u8) {
        0 => None,
        1 | 2 => Some(RatFunc::from_poly(random_poly(ctx, rng, 2))),
        _ => {
            // A pole at t + 1 when that place sits outside the window, so
            // shifts with tails the lattice cannot reach get exercised.
            let den = ctx.poly_from_ints(&[1, 1]);
            let outside = !s
                .places()
                .any(|p| matches!(p, Place::Finite(pi) if *pi == den));
            if outside {
                Some(RatFunc::new(random_poly(ctx, rng, 2), den).expect("nonzero denominator"))
            } else {
                Some(RatFunc::from_poly(random_poly(ctx, rng, 2)))
            }
        }
    }
}

fn random_box(ctx: &FqCtx, rng: &mut ChaCha8Rng, s: &PlaceSet) -> BoxKS {
    let axes = rng.gen_range(1..=2usize);
    for _ in 0..50 {
        let member_count = rng.gen_range(1..=2usize);
        let members = (0..member_count)
            .map(|_| {
                let axis_boxes = (0..axes)
                    .map(|_| {
                        let floors = (0..s.len()).map(|_| rng.gen_range(-1..=1i64)).collect();
                        AxisBox::new(floors, random_shift(ctx, rng, s))
                    })
                    .collect();
                BoxMember::new(axis_boxes)
            })
            .collect();
        if let Ok(b) = BoxKS::new(s.clone(), members) {
            return b;
        }
    }
    BoxKS::unit(s.clone(), axes).expect("unit box is always valid")
}

/// Smallest power of the grow function taking the axis past the expansion
/// threshold, by direct search on the dual degree.
fn expansion_exponent(b: &BoxKS, grow: &RatFunc, axis: usize) -> i64 {
    let s = b.place_set();
    let cond = b.conductor();
    let outside = if s.has_infinity() { 0 } else { -2 };
    for e in 0i64.. {
        let degree: i64 = cond.exponents[axis]
            .iter()
            .zip(s.data())
            .map(|(&c, d)| {
                let step = grow.valuation(d.place()).expect("nonzero grow function");
                (c + e * step + d.k()) * d.place().degree() as i64
            })
            .sum::<i64>()
            + outside;
        if degree < 0 {
            return e;
        }
    }
    unreachable!("the grow function expands the window")
}

/// Runs random expansion trials over the field of order `q`: each draws a
/// window and a box union, scales every axis past the threshold, and
/// checks the spectral count against the normalized volume and, within
/// budget, against direct enumeration.
pub fn run_expansion_trials(q: u64, trials: usize, seed: u64) -> Result<Vec<ExpansionTrial>> {
    let ctx = FqCfg::from_order(q)?.build()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = window_pool(&ctx);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let (s, grow) = &pool[rng.gen_range(0..pool.len())];
        let b = random_box(&ctx, &mut rng, s);
        let scaling: Vec<RatFunc> = (0..b.dims())
            .map(|a| {
                let e = expansion_exponent(&b, grow, a) + rng.gen_range(0..=1i64);
                grow.pow(e)
            })
            .collect::<Result<Vec<_>>>()?;
        let scaled = b.scaled(&scaling)?;
        let check = exact_count_check(&scaled)?;
        let direct = match lattice_points_direct(&scaled) {
            Ok(d) => Some(d),
            Err(Error::Budget(_)) => None,
            Err(e) => return Err(e),
        };
        out.push(ExpansionTrial {
            q,
            window: s.places().map(|p| p.to_string()).collect(),
            axes: b.dims(),
            members: b.members().len(),
            scaling: scaling.iter().map(|t| t.to_string()).collect(),
            count: check.count.to_string(),
            volume: check.volume.to_string(),
            threshold_met: check.threshold_met,
            matches_volume: check.count == check.volume,
            matches_direct: direct.as_ref().map(|d| *d == check.count),
            direct_count: direct.map(|d| d.to_string()),
        });
    }
    Ok(out)
}

/// Sweeps the projection bound over a grid of mixed scalings of a fixed
/// two-axis box union over the window at infinity: the first axis shrinks
/// by `t^{-a}`, the second grows by `t^b`, and every point records the
/// exact count against the bound.
pub fn run_skew_sweep(q: u64, shrink_range: i64, grow_range: i64) -> Result<Vec<SkewTrial>> {
    let ctx = FqCfg::from_order(q)?.build()?;
    let sample = ctx.sample();
    let s = PlaceSet::new(sample, vec![Place::Infinity])?;
    // Two members, disjoint along the first axis: the unit box, and a
    // translate whose shift carries a pole at t + 1. The tail of that
    // shift is unreachable from the lattice at floor two, so the second
    // member goes empty and keeps the bound strict.
    let t2 = RatFunc::from_poly(ctx.poly_from_ints(&[0, 0, 1]));
    let tail = RatFunc::new(ctx.poly_from_ints(&[1]), ctx.poly_from_ints(&[1, 1]))?;
    let members = vec![
        BoxMember::new(vec![AxisBox::new(vec![0], None), AxisBox::new(vec![0], None)]),
        BoxMember::new(vec![
            AxisBox::new(vec![2], Some(t2.add(&tail))),
            AxisBox::new(vec![0], None),
        ]),
    ];
    let b = BoxKS::new(s, vec![members[0].clone(), members[1].clone()])?;
    let mut out = Vec::new();
    for a in 0..shrink_range {
        for g in 1..=grow_range {
            let scaling = vec![RatFunc::t_power(sample, -a), RatFunc::t_power(sample, g)];
            let sk = skew_count_bound(&b, &scaling, 2)?;
            out.push(SkewTrial {
                shrink_exponent: a,
                grow_exponent: g,
                within_bound: sk.count <= sk.bound,
                tight: sk.count == sk.bound,
                count: sk.count.to_string(),
                bound: sk.bound.to_string(),
            });
        }
    }
    Ok(out)
}

/// Verifies the fundamental domain tilings on the standard windows.
pub fn run_tiling_checks(q: u64) -> Result<Vec<TilingSummary>> {
    let ctx = FqCfg::from_order(q)?.build()?;
    let sample = ctx.sample();
    let t = Place::finite(ctx.poly_from_ints(&[0, 1]))?;
    let cases = vec![
        (PlaceSet::new(sample, vec![Place::Infinity])?, 2i64),
        (
            PlaceSet::new(sample, vec![Place::Infinity, t.clone()])?,
            1i64,
        ),
        (PlaceSet::new(sample, vec![t])?, 1i64),
    ];
    let mut out = Vec::new();
    for (s, level) in cases {
        let domain = standard_fundamental_domain(&s)?;
        let checked = tiling_check(&s, level)?;
        out.push(TilingSummary {
            window: s.places().map(|p| p.to_string()).collect(),
            level,
            covolume: domain.volume().to_string(),
            cosets_checked: checked,
        });
    }
    Ok(out)
}

/// Runs the full verification suite for one base field: expansion trials,
/// a skew sweep, and the tiling checks.
pub fn run_geonum_report(q: u64, trials: usize, seed: u64) -> Result<GeonumReport> {
    Ok(GeonumReport {
        q,
        seed,
        expansion_trials: run_expansion_trials(q, trials, seed)?,
        skew_sweep: run_skew_sweep(q, 4, 5)?,
        tilings: run_tiling_checks(q)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_trials_all_agree() {
        let trials = run_expansion_trials(3, 10, 7).unwrap();
        assert_eq!(trials.len(), 10);
        for tr in &trials {
            assert!(tr.threshold_met);
            assert!(tr.matches_volume);
            assert_eq!(tr.matches_direct, Some(true), "trial {tr:?}");
        }
    }

    #[test]
    fn skew_sweep_stays_within_bounds() {
        let sweep = run_skew_sweep(3, 2, 3).unwrap();
        assert_eq!(sweep.len(), 6);
        for point in &sweep {
            assert!(point.within_bound);
        }
    }

    #[test]
    fn tiling_checks_run_on_the_standard_windows() {
        let tilings = run_tiling_checks(3).unwrap();
        assert_eq!(tilings.len(), 3);
        assert_eq!(tilings[0].covolume, "1");
        assert_eq!(tilings[2].covolume, "1/3");
    }
}
