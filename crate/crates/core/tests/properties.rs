#![allow(clippy::needless_range_loop)]

mod common;

use awcurve::aw::{
    bishop_aw_residuals, bishop_n_chain, decomposition_deviation, frenet_n_chain, gram_schmidt_star, ResidualOptions,
    DEFAULT_EPS_GS, DEFAULT_TRIM,
};
use awcurve::diff::differentiate;
use awcurve::expr::{BinOp, Func};
use awcurve::profile::MeasureOptions;
use awcurve::vec3::gram_deviation;
use awcurve::*;
use common::{trig_profile, Helix, TrigPoly};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

fn unit_vector() -> impl Strategy<Value = Vec3> {
    (0.0..std::f64::consts::TAU, -1.0..1.0f64).prop_map(|(phi, z)| {
        let r = (1.0 - z * z).sqrt();
        Vec3::new(r * phi.cos(), r * phi.sin(), z)
    })
}

fn helix() -> impl Strategy<Value = Helix> {
    (0.5..2.0f64, 0.1..1.5f64).prop_map(|(a, b)| Helix { a, b })
}

fn trig_poly(amplitude: f64) -> impl Strategy<Value = TrigPoly> {
    (-1.0..1.0f64, 0.5..1.5f64, prop::collection::vec((-0.5..0.5f64, -0.5..0.5f64), 2)).prop_map(move |(a0, w, t)| {
        TrigPoly { a0: a0 * amplitude, w, terms: t.into_iter().map(|(a, b)| (a * amplitude, b * amplitude)).collect() }
    })
}

fn trig_expr(p: &TrigPoly) -> ScalarFunction {
    let mut text = format!("{:?}", p.a0);
    for (j, (a, b)) in p.terms.iter().enumerate() {
        let f = (j + 1) as f64 * p.w;
        text += &format!(" + {a:?}*cos({f:?}*s) + {b:?}*sin({f:?}*s)");
    }
    ScalarFunction::parse(&text).unwrap()
}

fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(0.01..10.0f64).prop_map(Expr::Num), Just(Expr::Var), (-5.0..-0.01f64).prop_map(Expr::Num)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let op = prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div), Just(BinOp::Pow)];
        let func = prop_oneof![
            Just(Func::Sin),
            Just(Func::Cos),
            Just(Func::Tan),
            Just(Func::Atan),
            Just(Func::Sqrt),
            Just(Func::Exp),
            Just(Func::Log),
            Just(Func::Abs)
        ];
        prop_oneof![
            (op, inner.clone(), inner.clone()).prop_map(|(o, a, b)| Expr::Bin(o, Box::new(a), Box::new(b))),
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (func, inner).prop_map(|(f, e)| Expr::Call(f, Box::new(e))),
        ]
    })
}

fn interior(n: usize) -> std::ops::Range<usize> {
    DEFAULT_TRIM..n - DEFAULT_TRIM
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn resampling_is_idempotent(h in helix(), n in 800usize..2000, warp in 0.0..0.6f64) {
        let pts: Vec<Vec3> = (0..400)
            .map(|i| {
                let u = i as f64 / 399.0;
                h.point(6.0 * ((1.0 - warp) * u + warp * u * u))
            })
            .collect();
        let once = resample_arclength(&pts, n).unwrap();
        let twice = resample_arclength(once.points(), n).unwrap();
        let moved = once.points().iter().zip(twice.points()).map(|(a, b)| a.distance(*b)).fold(0.0, f64::max);
        prop_assert!(moved < 1e-9, "moved {moved:e}");
    }

    #[test]
    fn derivatives_exact_on_quartics(
        coeffs in prop::collection::vec(-1.0..1.0f64, 15),
        h in 1e-3..1e-2f64,
        n in 40usize..200,
    ) {
        let c = |k: usize, j: usize| coeffs[5 * k + j];
        let eval = |s: f64, order: usize| {
            let mut out = [0.0; 3];
            for (k, slot) in out.iter_mut().enumerate() {
                for j in order..5 {
                    let falling: f64 = (0..order).map(|m| (j - m) as f64).product();
                    *slot += c(k, j) * falling * s.powi((j - order) as i32);
                }
            }
            Vec3::from(out)
        };
        let s0 = -0.5 * h * n as f64;
        let pts = (0..n).map(|i| eval(s0 + i as f64 * h, 0)).collect();
        let curve = CurveSamples::new(pts, s0, h).unwrap();
        let d = derivatives(&curve, 4).unwrap();
        let size = curve.points().iter().map(|p| p.norm()).fold(0.0, f64::max);
        for order in 1..=4 {
            // Stencils are exact on quartics; what remains is rounding in the
            // samples amplified by h^-order.
            let floor = 64.0 * f64::EPSILON * size / h.powi(order as i32);
            let tol = if order <= 2 || (order == 3 && h >= 5e-3) { 1e-7 } else { 1e-7 + floor };
            for i in interior(n) {
                let err = d[order - 1][i].distance(eval(curve.grid().s(i), order));
                prop_assert!(err < tol, "order {order} sample {i}: {err:e}");
            }
        }
    }

    #[test]
    fn printing_and_reparsing_preserves_evaluation(tree in expr_tree(), points in prop::collection::vec(0.0..10.0f64, 100)) {
        let first = Expr::parse(&tree.to_string()).unwrap();
        let second = Expr::parse(&first.to_string()).unwrap();
        prop_assert_eq!(&first, &second);
        for s in points {
            match (tree.eval(s), second.eval(s)) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a.to_bits(), b.to_bits()),
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "{a:?} vs {b:?} at s = {s}"),
            }
        }
    }

    #[test]
    fn frames_are_orthonormal(h in helix(), seed in unit_vector()) {
        let curve = h.samples(10.0, 1001);
        let frenet = frenet_frame(&curve, DEFAULT_KAPPA_MIN).unwrap();
        for i in 0..curve.len() {
            let (n, b) = (frenet.normal[i].unwrap(), frenet.binormal[i].unwrap());
            prop_assert!(gram_deviation(frenet.tangent[i], n, b) < 1e-8);
        }
        let t0 = frenet.tangent[0];
        prop_assume!(seed.cross(t0).norm() > 0.1);
        let bishop = bishop_frame(&curve, Some(seed), DEFAULT_KAPPA_MIN).unwrap();
        for i in 0..curve.len() {
            prop_assert!(gram_deviation(bishop.tangent[i], bishop.m1[i], bishop.m2[i]) < 1e-8);
        }
    }

    #[test]
    fn bishop_normals_do_not_rotate(h in helix()) {
        let curve = h.samples(4.0, 4001);
        prop_assert!((curve.h() - 1e-3).abs() < 1e-15);
        let bishop = bishop_frame(&curve, None, DEFAULT_KAPPA_MIN).unwrap();
        let comp = |k: usize| bishop.m1.iter().map(|v| v.component(k)).collect::<Vec<_>>();
        let d: Vec<Vec<f64>> = (0..3).map(|k| differentiate(&comp(k), curve.h(), 1, 1).unwrap()).collect();
        for i in 0..curve.len() {
            let dm1 = Vec3::new(d[0][i], d[1][i], d[2][i]);
            prop_assert!(dm1.dot(bishop.m2[i]).abs() < 1e-6);
        }
    }

    #[test]
    fn frenet_bishop_round_trip(k in trig_poly(0.3), t in trig_poly(1.0), theta0 in -3.0..3.0f64) {
        let kappa = TrigPoly { a0: 1.0 + k.a0, ..k };
        let grid = Grid::spanning(0.0, 3.0, 1501).unwrap();
        let forward = frenet_to_bishop(&trig_expr(&kappa), &trig_expr(&t), theta0, grid).unwrap();
        let back = bishop_to_frenet(&CurvatureProfile { frenet: None, ..forward }, DEFAULT_KAPPA_MIN).unwrap();
        let f = back.frenet.unwrap();
        for i in interior(grid.n) {
            let s = grid.s(i);
            prop_assert!((f.kappa[i] - kappa.derivative(s, 0)).abs() < 1e-8);
            prop_assert!((f.tau[i].unwrap() - t.derivative(s, 0)).abs() < 1e-8);
        }
    }

    #[test]
    fn frenet_frame_is_a_rotation_of_the_bishop_frame(h in helix()) {
        let curve = h.samples(8.0, 2001);
        let frenet = frenet_frame(&curve, DEFAULT_KAPPA_MIN).unwrap();
        let bishop = bishop_frame(&curve, None, DEFAULT_KAPPA_MIN).unwrap();
        for i in 0..curve.len() {
            if !frenet.frenet_defined(i) {
                continue;
            }
            let (c, s) = (bishop.theta[i].cos(), bishop.theta[i].sin());
            let n = bishop.m1[i] * c + bishop.m2[i] * s;
            let b = bishop.m1[i] * -s + bishop.m2[i] * c;
            prop_assert!(n.distance(frenet.normal[i].unwrap()) < 1e-6);
            prop_assert!(b.distance(frenet.binormal[i].unwrap()) < 1e-6);
        }
    }

    #[test]
    fn residual_scale_covariance(k1 in trig_poly(1.0), k2 in trig_poly(1.0)) {
        let lambda = 2.0;
        let scaled = |p: &TrigPoly| TrigPoly {
            a0: lambda * p.a0,
            w: lambda * p.w,
            terms: p.terms.iter().map(|(a, b)| (lambda * a, lambda * b)).collect(),
        };
        let n = 401;
        let base = bishop_n_chain(&trig_profile(&k1, &k2, Grid::spanning(0.0, 4.0, n).unwrap())).unwrap();
        let small = bishop_n_chain(&trig_profile(&scaled(&k1), &scaled(&k2), Grid::spanning(0.0, 4.0 / lambda, n).unwrap())).unwrap();
        let scale = base.samples.iter().flatten().map(|c| c.n3.norm()).fold(0.0, f64::max);
        for (a, b) in base.samples.iter().zip(&small.samples) {
            let (a, b) = (a.unwrap().n3, b.unwrap().n3);
            let l3 = lambda.powi(3);
            prop_assert!((b.a - l3 * a.a).abs().max((b.b - l3 * a.b).abs()) <= 1e-6 * l3 * scale);
        }
    }

    #[test]
    fn decomposition_identity(k1 in trig_poly(1.0), k2 in trig_poly(1.0)) {
        let p = trig_profile(&k1, &k2, Grid::spanning(0.0, 3.0, 301).unwrap());
        let p = bishop_to_frenet(&p, DEFAULT_KAPPA_MIN).unwrap();
        let mut chains = vec![bishop_n_chain(&p).unwrap()];
        if let Ok(c) = frenet_n_chain(&p, DEFAULT_KAPPA_MIN) {
            chains.push(c);
        }
        for c in chains.iter().flat_map(|c| c.samples.iter().flatten()) {
            let star = gram_schmidt_star(c.n1, c.n2, DEFAULT_EPS_GS);
            if let Some(d) = decomposition_deviation(c.n3, &star) {
                prop_assert!(d < 1e-10, "{d:e}");
            }
        }
    }

    #[test]
    fn hierarchy_on_closed_form_profiles(c in 0.2..5.0f64, negative in any::<bool>(), n in 50usize..400) {
        let family = CanonicalFamily::new(FamilyKind::Aw1Canonical, c, if negative { -1.0 } else { 1.0 }).unwrap();
        let p = canonical_profile(family, Grid::spanning(0.0, 2.0, n).unwrap()).unwrap();
        let fields = bishop_aw_residuals(&p, &ResidualOptions::default()).unwrap();
        let aw1 = fields.iter().find(|f| f.condition == AwCondition::BishopAw1).unwrap();
        for i in 0..n {
            if aw1.raw[i].unwrap() < 1e-12 {
                for f in &fields {
                    prop_assert!(f.raw[i].unwrap() < 1e-10);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn synthesis_is_rigid_motion_equivariant(
        axis in unit_vector(),
        phi in -3.0..3.0f64,
        shift in prop::array::uniform3(-5.0..5.0f64),
        k1 in trig_poly(1.0),
        k2 in trig_poly(1.0),
    ) {
        let spec = SynthesisSpec::new(trig_expr(&k1), trig_expr(&k2), 0.0, 2.0, 1001);
        let base = synthesize_from_bishop(&spec).unwrap();
        let shift = Vec3::from(shift);
        let moved = InitialFrame {
            position: shift,
            tangent: Vec3::X.rotate_about(axis, phi),
            m1: Vec3::Y.rotate_about(axis, phi),
        };
        let other = synthesize_from_bishop(&spec.clone().with_initial(moved)).unwrap();
        for (p, q) in base.curve.points().iter().zip(other.curve.points()) {
            prop_assert!((p.rotate_about(axis, phi) + shift).distance(*q) < 1e-9);
        }
    }

    #[test]
    fn synthesized_curves_have_unit_speed(k1 in trig_poly(2.0), k2 in trig_poly(2.0)) {
        let out = synthesize_from_bishop(&SynthesisSpec::new(trig_expr(&k1), trig_expr(&k2), 0.0, 1.0, 1001)).unwrap();
        prop_assert!(out.max_correction < 1e-6);
        let h = out.curve.h();
        for w in out.curve.points().windows(2) {
            prop_assert!((w[0].distance(w[1]) / h - 1.0).abs() < 1e-6);
        }
        for i in 0..out.curve.len() {
            prop_assert!(gram_deviation(out.frame.tangent[i], out.frame.m1[i], out.frame.m2[i]) < 1e-9);
        }
    }

    #[test]
    fn n3_agrees_between_frames(h in helix()) {
        let curve = h.samples(10.0, 2001);
        let m = measure_curve(&curve, &MeasureOptions::default()).unwrap();
        let bishop = bishop_n_chain(&m.profile).unwrap();
        let frenet = frenet_n_chain(&m.profile, DEFAULT_KAPPA_MIN).unwrap();
        for i in interior(curve.len()) {
            let (b, f) = (bishop.samples[i].unwrap().n3, frenet.samples[i].unwrap().n3);
            let (c, s) = (m.bishop.theta[i].cos(), m.bishop.theta[i].sin());
            let rotated = PlaneVec { a: c * b.a + s * b.b, b: -s * b.a + c * b.b };
            let d = (rotated - f).norm();
            prop_assert!(d < 1e-4, "sample {i}: {d:e}");
        }
    }
}

proptest! {
    #![proptest_config(config(8))]

    #[test]
    fn measured_residuals_match_prescribed(k1 in trig_poly(1.0), k2 in trig_poly(1.0)) {
        let (f1, f2) = (trig_expr(&k1), trig_expr(&k2));
        let out = synthesize_from_bishop(&SynthesisSpec::new(f1.clone(), f2.clone(), 0.0, 2.0, 2001)).unwrap();
        let prescribed = CurvatureProfile::from_bishop_functions(&f1, &f2, out.curve.grid()).unwrap();
        let expected = evaluate_profile(&prescribed, &ClassifyOptions::prescribed()).unwrap();
        let mut opts = ClassifyOptions::measured();
        opts.measure.initial_normal = Some(out.frame.m1[0]);
        let measured = evaluate_curve(&out.curve, &opts).unwrap();
        for ((c, got), (_, want)) in measured.table.columns.iter().zip(&expected.table.columns) {
            if !c.is_bishop() {
                continue;
            }
            for i in interior(out.curve.len()) {
                let d = (got[i].unwrap() - want[i].unwrap()).abs();
                prop_assert!(d < 2e-4, "{} at sample {i}: {d:e}", c.name());
            }
        }
    }
}
