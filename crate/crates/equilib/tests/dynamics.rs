use equilib::construct::{generate_monostable, GeneratorParams};
use equilib::dynamics::*;
use equilib::equilibria::classify_equilibria;
use equilib::geom_core::solids::*;
use equilib::geom_core::{convex_hull, mass_properties};
use equilib::{ConvexPolyhedron, Vec3};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::f64::consts::PI;

fn face_with_normal(p: &ConvexPolyhedron, n: Vec3) -> usize {
    let n = n.normalize();
    p.planes().iter().position(|pl| (pl.normal - n).norm() < 1e-9).expect("face with that normal")
}

#[test]
fn cube_rests_everywhere() {
    let cube = unit_cube();
    let c = Vec3::new(0.5, 0.5, 0.5);
    for f in 0..cube.num_faces() {
        assert_eq!(roll_step(&cube, &c, f).unwrap(), Step::Rest);
        let t = roll_trace(&cube, &c, f).unwrap();
        assert_eq!(t.faces, vec![f]);
        assert_eq!(t.arc_length, 0.0);
        assert!(t.tipped_edges.is_empty());
    }
    // a box keeps every foot inside its face, even for a reference far
    // off centre
    let off = Vec3::new(0.9, 0.5, 0.5);
    for f in 0..cube.num_faces() {
        assert_eq!(roll_step(&cube, &off, f).unwrap(), Step::Rest);
    }
}

#[test]
fn hexagonal_prism_tips_toward_plus_x() {
    // corners on the x axis; the face with normal +y has its edge centred
    // on x = 0 with half length 0.5, so a reference at x = 0.6 tips it
    // over the edge at x = 0.5 onto the face with normal at 30 degrees
    let p = prism(6, 1.0, 0.4);
    let c = Vec3::new(0.6, 0.0, 0.2);
    let from = face_with_normal(&p, Vec3::y());
    let to = face_with_normal(&p, Vec3::new(30f64.to_radians().cos(), 30f64.to_radians().sin(), 0.0));
    match roll_step(&p, &c, from).unwrap() {
        Step::Tip { next_face, edge } => {
            assert_eq!(next_face, to);
            let e = &p.edges()[edge];
            for &v in &e.v {
                assert!((p.vertices()[v].x - 0.5).abs() < 1e-12);
            }
        }
        Step::Rest => panic!("expected a tip"),
    }
    let t = roll_trace(&p, &c, from).unwrap();
    assert_eq!(t.faces, vec![from, to]);
    assert!(t.potentials[1] < t.potentials[0]);
    // c swings about the vertical line through (0.5, sqrt(3)/2) by 60 degrees
    let radius = (0.01f64 + 0.75).sqrt();
    assert!((t.arc_length - radius * PI / 3.0).abs() < 1e-12, "{}", t.arc_length);
    let r = classify_equilibria(&p, &c).unwrap();
    assert!(r.stable_faces().contains(&to));
    assert!(!r.stable_faces().contains(&from));
}

#[test]
fn slim_prism_rolls_more_than_once() {
    let p = prism(12, 1.0, 0.3);
    let c = Vec3::new(0.9, 0.0, 0.15);
    let traces: Vec<RollTrace> = (0..p.num_faces()).map(|f| roll_trace(&p, &c, f).unwrap()).collect();
    let longest = traces.iter().map(|t| t.faces.len()).max().unwrap();
    assert!(longest >= 3, "longest trace {longest}");
    let stable: BTreeSet<usize> = classify_equilibria(&p, &c).unwrap().stable_faces().into_iter().collect();
    for t in &traces {
        assert!(t.potentials.windows(2).all(|w| w[1] < w[0]));
        assert!(stable.contains(&t.final_face()));
        assert!(t.arc_length >= 0.0);
    }
}

#[test]
fn foot_on_an_edge_is_degenerate() {
    // right prism over a triangle with an obtuse corner at the origin; a
    // reference above x = 0 drops its foot onto the vertical edge there
    let mut pts = Vec::new();
    for z in [0.0, 1.0] {
        for (x, y) in [(0.0, 0.0), (3.0, 0.0), (-1.0, 1.0)] {
            pts.push(Vec3::new(x, y, z));
        }
    }
    let p = convex_hull(&pts).unwrap();
    let c = Vec3::new(0.0, 0.2, 0.5);
    let f = face_with_normal(&p, -Vec3::y());
    assert!(matches!(roll_step(&p, &c, f), Err(DynamicsError::DegenerateRest { face }) if face == f));
    assert!(classify_equilibria(&p, &c).unwrap().any_degenerate);
}

#[test]
fn bad_inputs() {
    let cube = unit_cube();
    let c = Vec3::new(0.5, 0.5, 0.5);
    assert!(matches!(roll_step(&cube, &c, 99), Err(DynamicsError::NoSuchFace(99))));
    assert!(matches!(roll_trace(&cube, &Vec3::new(3.0, 0.5, 0.5), 0), Err(DynamicsError::ReferenceNotInterior)));
}

#[test]
fn platonic_and_tetrahedron_are_not_monostable() {
    for (name, p) in platonic() {
        assert!(!monostable_oracle(&p).unwrap(), "{name}");
    }
    assert!(!monostable_oracle(&regular_tetrahedron()).unwrap());
    assert!(!monostable_oracle(&standard_simplex()).unwrap());
}

#[test]
fn generated_body_rolls_onto_one_face() {
    let r = generate_monostable(&GeneratorParams::new(4, 0.25)).unwrap();
    let p = &r.polyhedron;
    assert!(monostable_oracle(p).unwrap());
    let c = mass_properties(p).centroid;
    let stable = r.report.stable_faces();
    assert_eq!(stable.len(), 1);
    let rest = rest_faces(p, &c).unwrap();
    assert!(rest.iter().all(|&f| f == stable[0]));
    let cap = 10 * p.num_faces();
    let mut longest = 0;
    for f in (0..p.num_faces()).step_by(7) {
        let t = roll_trace(p, &c, f).unwrap();
        assert_eq!(t.final_face(), stable[0]);
        assert!(t.potentials.windows(2).all(|w| w[1] < w[0]));
        assert!(t.tipped_edges.len() <= cap);
        longest = longest.max(t.faces.len());
    }
    assert!(longest > 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rolling_agrees_with_the_classifier(seed in any::<u64>(), count in 8usize..120) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_hull(&mut rng, count);
        let g = mass_properties(&p).centroid;
        let inr = p.planes().iter().map(|pl| -pl.signed_distance(&g)).fold(f64::INFINITY, f64::min);
        let c = g + random_in_ball(&mut rng) * (0.5 * inr * rng.gen::<f64>());
        let report = classify_equilibria(&p, &c).unwrap();
        let Ok(rest) = rest_faces(&p, &c) else {
            prop_assert!(report.any_degenerate);
            return Ok(());
        };
        let stable: BTreeSet<usize> = report.stable_faces().into_iter().collect();
        let reached: BTreeSet<usize> = rest.iter().copied().collect();
        // every stable face rests on itself, so both sets coincide
        prop_assert_eq!(&stable, &reached);
        for f in 0..p.num_faces() {
            let t = roll_trace(&p, &c, f).unwrap();
            prop_assert_eq!(t.final_face(), rest[f]);
            prop_assert!(t.potentials.windows(2).all(|w| w[1] < w[0]));
        }
    }
}
