use homcone::homproj::{find_alpha_star, ConePoint, ProjectionOptions};
use homcone::polar::{closed_form_polar, homogenization_polar_membership, polar_cone_membership, polar_membership};
use homcone::{project_homogenization, PsiEvaluator, SetDescriptor, Vector};
use proptest::prelude::*;

fn v(c: &[f64]) -> Vector {
    Vector::from_slice(c).unwrap()
}

fn projectable_sets() -> Vec<SetDescriptor> {
    vec![
        SetDescriptor::centered_ball(3, 1.5).unwrap(),
        SetDescriptor::euclidean_ball(v(&[1.0, 0.0, 0.0]), 1.0).unwrap(),
        SetDescriptor::box_set(v(&[1.0, 2.0, 0.5])).unwrap(),
        SetDescriptor::l1_ball(1.0).unwrap().with_dim(3).unwrap(),
        SetDescriptor::p_ball(f64::INFINITY, 0.7).unwrap().with_dim(3).unwrap(),
        SetDescriptor::ellipsoid(vec![vec![4.0, 1.0, 0.0], vec![1.0, 2.0, 0.5], vec![0.0, 0.5, 1.0]]).unwrap(),
        SetDescriptor::simplex(3).unwrap(),
        SetDescriptor::ball_pen(v(&[0.0, 0.6, 0.8])).unwrap(),
    ]
}

fn all_sets() -> Vec<SetDescriptor> {
    let mut sets = projectable_sets();
    sets.extend([
        SetDescriptor::shifted_unit_ball(v(&[0.0, 0.0, 1.0])).unwrap(),
        SetDescriptor::p_ball(3.0, 1.0).unwrap().with_dim(3).unwrap(),
    ]);
    sets
}

fn vec3() -> impl Strategy<Value = Vector> {
    prop::array::uniform3(-10.0..10.0f64).prop_map(|c| v(&c))
}

fn cone_point() -> impl Strategy<Value = ConePoint> {
    (vec3(), -10.0..10.0f64).prop_map(|(y, s)| ConePoint::new(y, s).unwrap())
}

fn set_index(n: usize) -> impl Strategy<Value = usize> {
    0..n
}

fn project(set: &SetDescriptor, p: &ConePoint) -> ConePoint {
    let opts = ProjectionOptions {
        eps: 1e-10,
        ..Default::default()
    };
    project_homogenization(set, p, &opts).unwrap().point
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn set_projection_is_idempotent(i in set_index(8), x in vec3()) {
        let set = &projectable_sets()[i];
        let p = set.project(&x).unwrap();
        let pp = set.project(&p).unwrap();
        prop_assert!(p.distance(&pp) < 1e-9 * (1.0 + p.norm()));
        prop_assert!(set.contains(&p, 1e-8).unwrap());
    }

    #[test]
    fn set_projection_is_nonexpansive(i in set_index(8), x in vec3(), y in vec3()) {
        let set = &projectable_sets()[i];
        let (px, py) = (set.project(&x).unwrap(), set.project(&y).unwrap());
        prop_assert!(px.distance(&py) <= x.distance(&y) + 1e-9);
    }

    #[test]
    fn set_projection_variational_inequality(i in set_index(8), x in vec3(), c in vec3()) {
        let set = &projectable_sets()[i];
        let p = set.project(&x).unwrap();
        let c = set.project(&c).unwrap();
        prop_assert!(x.sub(&p).dot(&c.sub(&p)) <= 1e-7 * (1.0 + x.norm() * c.norm()));
    }

    #[test]
    fn cone_projection_lands_in_k_and_is_idempotent(i in set_index(8), p in cone_point()) {
        let set = &projectable_sets()[i];
        let q = project(set, &p);
        prop_assert!(q.s >= 0.0);
        if q.s > 1e-9 {
            prop_assert!(set.contains(&q.y.scale(1.0 / q.s), 1e-6).unwrap());
        }
        let qq = project(set, &q);
        prop_assert!(q.distance(&qq) < 1e-6 * (1.0 + q.norm()));
    }

    #[test]
    fn cone_projection_obeys_the_projection_law(i in set_index(8), p in cone_point()) {
        let set = &projectable_sets()[i];
        let q = project(set, &p);
        let r = p.sub(&q);
        prop_assert!(r.dot(&q).abs() < 1e-5 * (1.0 + p.norm() * p.norm()));
        let y = r.y.clone();
        let polar = ConePoint::new(y, r.s).unwrap();
        prop_assert!(homogenization_polar_membership(set, &polar, 1e-4 * (1.0 + p.norm())).unwrap());
    }

    #[test]
    fn cone_projection_commutes_with_positive_scaling(i in set_index(8), p in cone_point(), t in 0.1..10.0f64) {
        let set = &projectable_sets()[i];
        let a = project(set, &p.scale(t));
        let b = project(set, &p).scale(t);
        prop_assert!(a.distance(&b) < 1e-5 * (1.0 + t * p.norm()));
    }

    #[test]
    fn closed_forms_match_forced_bisection(i in set_index(8), p in cone_point()) {
        let set = &projectable_sets()[i];
        let fast = project_homogenization(set, &p, &ProjectionOptions::default()).unwrap().point;
        let opts = ProjectionOptions { force_iterative: true, eps: 1e-10, ..Default::default() };
        let slow = project_homogenization(set, &p, &opts).unwrap().point;
        prop_assert!(fast.distance(&slow) < 1e-6 * (1.0 + p.norm()));
    }

    #[test]
    fn support_function_is_sublinear(i in set_index(10), y in vec3(), z in vec3(), t in 0.0..10.0f64) {
        let set = &all_sets()[i];
        let (sy, sz) = (set.support_function(&y).unwrap(), set.support_function(&z).unwrap());
        let sty = set.support_function(&y.scale(t)).unwrap();
        if sy.is_finite() {
            prop_assert!((sty - t * sy).abs() < 1e-9 * (1.0 + t * sy.abs()));
        }
        let syz = set.support_function(&y.add(&z)).unwrap();
        prop_assert!(syz <= sy + sz + 1e-9 * (1.0 + sy.abs() + sz.abs()));
        prop_assert!(sy >= 0.0);
    }

    #[test]
    fn support_function_dominates_projected_points(i in set_index(8), y in vec3(), x in vec3()) {
        let set = &projectable_sets()[i];
        let c = set.project(&x).unwrap();
        prop_assert!(c.dot(&y) <= set.support_function(&y).unwrap() + 1e-8 * (1.0 + c.norm() * y.norm()));
    }

    #[test]
    fn psi_is_convex_with_monotone_derivative(
        i in set_index(8), p in cone_point(), a in 0.01..20.0f64, b in 0.01..20.0f64,
    ) {
        let set = &projectable_sets()[i];
        let ev = PsiEvaluator::new(set, p.y.clone(), p.s).unwrap();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let m = 0.5 * (lo + hi);
        let (pl, ph, pm) = (ev.psi(lo).unwrap(), ev.psi(hi).unwrap(), ev.psi(m).unwrap());
        prop_assert!(pm <= 0.5 * (pl + ph) + 1e-9 * (1.0 + pl + ph));
        prop_assert!(ev.psi_prime(lo).unwrap() <= ev.psi_prime(hi).unwrap() + 1e-9 * (1.0 + p.norm()));
        let zero = ev.psi(0.0).unwrap();
        prop_assert!(ev.psi(1e-9).unwrap() <= zero + 1e-6 * (1.0 + zero));
    }

    #[test]
    fn phi_limits(i in set_index(8), y in vec3()) {
        let set = &projectable_sets()[i];
        let ev = PsiEvaluator::new(set, y.clone(), 0.0).unwrap();
        // alpha^2 d_C(y/alpha)^2 tends to the squared distance to cl cone C
        let neg = |c: f64| c.min(0.0).powi(2);
        let limit = match i {
            1 => neg(y[0]),
            6 => y.coords().iter().map(|&c| neg(c)).sum(),
            _ => 0.0,
        };
        prop_assert!((ev.phi(1e8).unwrap() - limit).abs() < 1e-5 * (1.0 + y.norm_squared()));
        let rec = set.recession_distance(&y).unwrap();
        prop_assert!((ev.phi(1e-9).unwrap() - rec * rec).abs() < 1e-6 * (1.0 + y.norm_squared()));
        prop_assert!(ev.phi_prime(1.0).unwrap() <= 0.0);
    }

    #[test]
    fn bisection_minimizes_psi(i in set_index(8), p in cone_point()) {
        let set = &projectable_sets()[i];
        let ev = PsiEvaluator::new(set, p.y.clone(), p.s).unwrap();
        let (alpha, _) = find_alpha_star(&ev, 1.0, 2.0, 1e-9, 300).unwrap();
        let best = ev.psi(alpha).unwrap();
        for probe in [0.0, 0.5 * alpha, alpha + 1e-3, 2.0 * alpha + 1.0] {
            prop_assert!(best <= ev.psi(probe).unwrap() + 1e-7 * (1.0 + best));
        }
    }

    #[test]
    fn polar_membership_matches_closed_form(i in set_index(10), y in vec3()) {
        let set = &all_sets()[i];
        let sigma = set.support_function(&y).unwrap();
        prop_assume!((sigma - 1.0).abs() > 1e-7);
        let polar = closed_form_polar(set).unwrap();
        prop_assert_eq!(polar.contains(&y, 0.0).unwrap(), polar_membership(set, &y, 0.0).unwrap());
    }

    #[test]
    fn bipolar_of_projectable_sets(i in set_index(8), x in vec3(), y in vec3()) {
        // x in C iff <x, y> <= 1 for all y in C°; probe with y = the normal at P_C(x)
        let set = &projectable_sets()[i];
        let p = set.project(&x).unwrap();
        let normal = x.sub(&p);
        let inside = set.contains(&x, 1e-9).unwrap();
        if !inside && normal.norm() > 1e-6 {
            let h = normal.dot(&p);
            if h > 1e-9 {
                let witness = normal.scale(1.0 / h);
                prop_assert!(polar_membership(set, &witness, 1e-7).unwrap());
                prop_assert!(witness.dot(&x) > 1.0);
            }
        }
        if inside && polar_membership(set, &y, 0.0).unwrap() {
            prop_assert!(x.dot(&y) <= 1.0 + 1e-7);
        }
    }

    #[test]
    fn hyperbolic_polar_cone_is_recession_of_polar(y in prop::array::uniform2(-10.0..10.0f64)) {
        let set = SetDescriptor::Hyperbolic;
        let y = v(&y);
        let in_cone = polar_cone_membership(&set, &y, 0.0).unwrap();
        let far = [1e2, 1e4, 1e6].iter().all(|t| polar_membership(&set, &y.scale(*t), 0.0).unwrap());
        prop_assert_eq!(in_cone, far);
    }

    #[test]
    fn k_and_k_polar_meet_only_at_the_apex(i in set_index(8), p in cone_point()) {
        let set = &projectable_sets()[i];
        let q = project(set, &p);
        if q.norm() > 1e-6 {
            prop_assert!(!homogenization_polar_membership(set, &q, 1e-9).unwrap());
        }
        let in_polar = homogenization_polar_membership(set, &p, 1e-9).unwrap();
        if in_polar {
            prop_assert!(q.norm() < 1e-5 * (1.0 + p.norm()));
        }
    }
}
