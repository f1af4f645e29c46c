//! Cross-module properties of the ring layer: orbit invariance of every
//! local invariant, the orbit/etale-algebra mass identity, and splitting
//! densities against inverse automorphism counts.

use fieldcount::arith::{Field, FqCfg, Place};
use fieldcount::forms::{sampling, FormV3};
use fieldcount::par::ExecMode;
use fieldcount::rings::{
    disc_divisibility_by_lifts, disc_divisibility_class, is_maximal_at, orbit_census_fq,
    splitting_type_cubic, splitting_type_cubic_at, splitting_type_of, stabilizer_order,
    verify_witness, SplittingType, DEFAULT_GROUP_BUDGET, DEFAULT_LIFT_BUDGET,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn splitting_and_stabilizers_are_constant_on_orbits_over_fq() {
    for q in [3u64, 5] {
        let ctx = FqCfg::prime(q).build().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(q + 40);
        let mut tested = 0;
        while tested < 100 {
            let mut draw = || sampling::fq_elem(&ctx, &mut rng);
            let f = sampling::form(3, &mut draw);
            if f.disc().is_zero() {
                continue;
            }
            tested += 1;
            let g = sampling::group_elem_invertible(3, &mut draw);
            let h = f.act(&g).unwrap();
            assert_eq!(
                splitting_type_of(&f).unwrap(),
                splitting_type_of(&h).unwrap()
            );
            assert_eq!(
                stabilizer_order(&f, &ctx, DEFAULT_GROUP_BUDGET).unwrap(),
                stabilizer_order(&h, &ctx, DEFAULT_GROUP_BUDGET).unwrap()
            );
        }
    }
}

#[test]
fn quartic_splitting_is_constant_on_orbits_over_f3() {
    let ctx = FqCfg::prime(3).build().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let mut tested = 0;
    let mut stab_checked = 0;
    while tested < 50 {
        let mut draw = || sampling::fq_elem(&ctx, &mut rng);
        let f = sampling::form(4, &mut draw);
        if f.disc().is_zero() {
            continue;
        }
        tested += 1;
        let g = sampling::group_elem_invertible(4, &mut draw);
        let h = f.act(&g).unwrap();
        assert_eq!(
            splitting_type_of(&f).unwrap(),
            splitting_type_of(&h).unwrap()
        );
        if stab_checked < 3 {
            stab_checked += 1;
            assert_eq!(
                stabilizer_order(&f, &ctx, DEFAULT_GROUP_BUDGET).unwrap(),
                stabilizer_order(&h, &ctx, DEFAULT_GROUP_BUDGET).unwrap()
            );
        }
    }
}

#[test]
fn local_cubic_invariants_are_constant_on_unimodular_orbits_over_fqt() {
    let ctx = FqCfg::prime(5).build().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let places = [
        Place::finite(ctx.poly_var()).unwrap(),
        Place::finite(ctx.poly_from_ints(&[1, 1])).unwrap(),
        Place::finite(ctx.poly_from_ints(&[2, 0, 1])).unwrap(),
    ];
    let mut tested = 0;
    while tested < 60 {
        let mut draw = || sampling::poly_elem(&ctx, 2, &mut rng);
        let f = FormV3::new(draw(), draw(), draw(), draw());
        if f.disc().is_zero() {
            continue;
        }
        tested += 1;
        // determinant-one substitutions scale nothing, so every place is
        // untouched by the character
        let g = sampling::mat2_unimodular(&mut draw, 4);
        let h = f.act(&g).unwrap();
        for place in &places {
            assert_eq!(
                splitting_type_cubic_at(&f, place).unwrap(),
                splitting_type_cubic_at(&h, place).unwrap()
            );
            let vf = is_maximal_at(&f, place).unwrap();
            let vh = is_maximal_at(&h, place).unwrap();
            assert_eq!(vf.maximal, vh.maximal, "at {place:?} on {:?}", f.to_vec());
            for (form, verdict) in [(&f, &vf), (&h, &vh)] {
                if let Some(w) = &verdict.witness {
                    assert!(verify_witness(form, place, w).unwrap());
                }
            }
            assert_eq!(
                disc_divisibility_class(&f, place).unwrap(),
                disc_divisibility_class(&h, place).unwrap()
            );
        }
    }
}

/// Orbits of the nondegenerate locus biject with etale algebras, matching
/// stabilizer orders with automorphism groups; summing `1/stab` then gives
/// exactly 1, i.e. the orbit sizes sum to the group order.
#[test]
fn orbit_census_matches_the_etale_algebra_mass() {
    let cubic_types = [
        SplittingType::Split111,
        SplittingType::Split12,
        SplittingType::Split3,
    ];
    for q in [3u64, 5] {
        let ctx = FqCfg::prime(q).build().unwrap();
        let census = orbit_census_fq(3, &ctx, ExecMode::default_mode()).unwrap();
        assert_eq!(census.rows.len(), 3);
        assert_eq!(census.total_points(), census.group_order);
        let mut seen: Vec<SplittingType> = census.rows.iter().map(|r| r.splitting_type).collect();
        seen.sort();
        assert_eq!(seen, cubic_types);
        for row in &census.rows {
            assert_eq!(Some(row.stab), row.splitting_type.aut_order());
        }
    }

    let ctx = FqCfg::prime(3).build().unwrap();
    let census = orbit_census_fq(4, &ctx, ExecMode::default_mode()).unwrap();
    assert_eq!(census.rows.len(), 5);
    assert_eq!(census.group_order, 269_568);
    assert_eq!(census.total_points(), census.group_order);
    let mut seen: Vec<SplittingType> = census.rows.iter().map(|r| r.splitting_type).collect();
    seen.sort();
    assert_eq!(
        seen,
        vec![
            SplittingType::Split1111,
            SplittingType::Split112,
            SplittingType::Split22,
            SplittingType::Split13,
            SplittingType::Split4,
        ]
    );
    for row in &census.rows {
        assert_eq!(Some(row.stab), row.splitting_type.aut_order());
    }
}

/// Among all `q^4` cubic forms the fraction with a given nondegenerate
/// splitting type is `1/#Aut + O(1/q)`; a single constant bounds the error
/// across every tested field and type.
#[test]
fn cubic_splitting_densities_track_inverse_automorphism_orders() {
    let fields = [
        FqCfg::prime(3).build().unwrap(),
        FqCfg::prime(5).build().unwrap(),
        FqCfg::prime(7).build().unwrap(),
        FqCfg::new(3, 2).build().unwrap(),
        FqCfg::prime(11).build().unwrap(),
    ];
    let mut fitted_c: f64 = 0.0;
    for ctx in &fields {
        let q = ctx.order();
        let mut counts = std::collections::HashMap::new();
        let total = q.pow(4);
        for idx in 0..total {
            let mut k = idx;
            let mut digit = || {
                let c = ctx.elem_from_index(k % q);
                k /= q;
                c
            };
            let f = FormV3::new(digit(), digit(), digit(), digit());
            *counts.entry(splitting_type_cubic(&f)).or_insert(0u64) += 1;
        }
        for t in [
            SplittingType::Split111,
            SplittingType::Split12,
            SplittingType::Split3,
        ] {
            let frac = counts[&t] as f64 / total as f64;
            let target = 1.0 / t.aut_order().unwrap() as f64;
            fitted_c = fitted_c.max((frac - target).abs() * q as f64);
        }
    }
    assert!(fitted_c <= 3.0, "fitted density constant {fitted_c}");
}

#[test]
fn divisibility_class_at_a_quadratic_place_matches_the_lift_oracle() {
    let ctx = FqCfg::prime(3).build().unwrap();
    let place = Place::finite(ctx.poly_from_ints(&[1, 0, 1])).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    let mut tested = 0;
    while tested < 40 {
        let mut draw = || sampling::poly_elem(&ctx, 3, &mut rng);
        let f = FormV3::new(draw(), draw(), draw(), draw());
        if f.disc().is_zero() {
            continue;
        }
        tested += 1;
        assert_eq!(
            disc_divisibility_class(&f, &place).unwrap(),
            disc_divisibility_by_lifts(&f, &place, DEFAULT_LIFT_BUDGET).unwrap()
        );
    }
}

/// Splitting types refine the quadratic case too: the census stabilizers of
/// the two orbits both equal the automorphism order 2 of the etale algebras.
#[test]
fn quadratic_census_stabilizers_match_automorphisms() {
    for q in [5u64, 9] {
        let ctx = if q == 9 {
            FqCfg::new(3, 2).build().unwrap()
        } else {
            FqCfg::prime(q).build().unwrap()
        };
        let census = orbit_census_fq(2, &ctx, ExecMode::default_mode()).unwrap();
        assert_eq!(census.rows.len(), 2);
        for row in &census.rows {
            assert_eq!(Some(row.stab), row.splitting_type.aut_order());
        }
    }
}

/// Reduction at a linear place of `F_q[t]` agrees with splitting directly
/// over the residue field `F_q`.
#[test]
fn reduction_at_a_linear_place_matches_the_residue_computation() {
    let ctx = FqCfg::prime(5).build().unwrap();
    let place = Place::finite(ctx.poly_var()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..80 {
        let mut draw = || sampling::poly_elem(&ctx, 2, &mut rng);
        let f = FormV3::new(draw(), draw(), draw(), draw());
        let reduced = FormV3::new(
            f.a.coeff(0),
            f.b.coeff(0),
            f.c.coeff(0),
            f.d.coeff(0),
        );
        assert_eq!(
            splitting_type_cubic_at(&f, &place).unwrap(),
            splitting_type_cubic(&reduced)
        );
    }
}

#[test]
fn quartic_orbit_representatives_reproduce_the_frozen_f3_table() {
    let ctx = FqCfg::prime(3).build().unwrap();
    let census = orbit_census_fq(4, &ctx, ExecMode::default_mode()).unwrap();
    // orbit sizes are |G| / aut in the order the minimal reps appear
    let sizes: Vec<u64> = census.rows.iter().map(|r| r.orbit_size).collect();
    let stabs: Vec<u64> = census.rows.iter().map(|r| r.stab).collect();
    let total: u64 = sizes.iter().sum();
    assert_eq!(total, 269_568);
    for (size, stab) in sizes.iter().zip(&stabs) {
        assert_eq!(size * stab, 269_568);
    }
    // every splitting type names a distinct partition of four
    let csv = census.to_csv();
    for tag in ["(1111)", "(112)", "(22)", "(13)", "(4)"] {
        assert_eq!(csv.matches(tag).count(), 1, "missing or duplicated {tag}");
    }
}

#[test]
fn degree_two_and_three_censuses_agree_between_execution_modes() {
    let ctx = FqCfg::prime(7).build().unwrap();
    for n in [2u32, 3] {
        let seq = orbit_census_fq(n, &ctx, ExecMode::Sequential).unwrap();
        let par = orbit_census_fq(n, &ctx, ExecMode::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
