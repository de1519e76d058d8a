mod common;

use equilib::geom_core::solids::*;
use equilib::geom_core::{clip, convex_hull, mass_properties, validate, GeomError, Violation, EPS_GEOM};
use equilib::{ConvexPolyhedron, HalfSpace, Vec3};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cube_corners() -> Vec<Vec3> {
    (0..8).map(|i| Vec3::new((i & 1) as f64, ((i >> 1) & 1) as f64, ((i >> 2) & 1) as f64)).collect()
}

fn counts(p: &ConvexPolyhedron) -> (usize, usize, usize) {
    (p.num_vertices(), p.num_edges(), p.num_faces())
}

#[test]
fn cube_hull_has_merged_square_faces() {
    let p = convex_hull(&cube_corners()).unwrap();
    assert_eq!(counts(&p), (8, 12, 6));
    assert!(p.faces().iter().all(|f| f.len() == 4));
    assert!(validate(&p).is_empty());
}

#[test]
fn octahedron_hull_is_eight_triangles() {
    let mut pts = Vec::new();
    for k in 0..3 {
        for s in [1.0, -1.0] {
            let mut v = Vec3::zeros();
            v[k] = s;
            pts.push(v);
        }
    }
    let p = convex_hull(&pts).unwrap();
    assert_eq!(p.num_faces(), 8);
    assert!(p.faces().iter().all(|f| f.len() == 3));
}

#[test]
fn interior_point_is_dropped() {
    let mut pts = cube_corners();
    pts.push(Vec3::new(0.5, 0.5, 0.5));
    let p = convex_hull(&pts).unwrap();
    let q = convex_hull(&cube_corners()).unwrap();
    assert_eq!(counts(&p), (8, 12, 6));
    assert_eq!(p.vertices(), q.vertices());
    assert_eq!(p.faces(), q.faces());
}

#[test]
fn hull_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pts: Vec<Vec3> = (0..300).map(|_| random_in_ball(&mut rng)).collect();
    let a = convex_hull(&pts).unwrap();
    let b = convex_hull(&pts).unwrap();
    assert_eq!(a.vertices(), b.vertices());
    assert_eq!(a.faces(), b.faces());
}

#[test]
fn flat_inputs_are_rejected() {
    let square: Vec<Vec3> = cube_corners().into_iter().filter(|v| v.z == 0.0).collect();
    assert!(matches!(convex_hull(&square), Err(GeomError::DegenerateInput)));
    let line: Vec<Vec3> = (0..5).map(|i| Vec3::new(i as f64, 2.0 * i as f64, 0.0)).collect();
    assert!(matches!(convex_hull(&line), Err(GeomError::DegenerateInput)));
    assert!(matches!(convex_hull(&square[..3]), Err(GeomError::DegenerateInput)));
}

#[test]
fn platonic_combinatorics() {
    let want = [(4, 6, 4), (8, 12, 6), (6, 12, 8), (20, 30, 12), (12, 30, 20)];
    for ((name, p), w) in platonic().iter().zip(want) {
        assert_eq!(counts(p), w, "{name}");
        assert!(validate(p).is_empty(), "{name}");
    }
}

#[test]
fn icosphere_level_four() {
    let p = icosphere(4);
    assert_eq!(counts(&p), (2562, 7680, 5120));
    assert!(validate(&p).is_empty());
}

#[test]
fn half_cube_clip() {
    let cube = unit_cube();
    let q = clip(&cube, &HalfSpace::new(Vec3::x(), 0.5)).unwrap();
    let m = mass_properties(&q);
    assert!((m.volume - 0.5).abs() < 1e-12);
    assert!((m.centroid - Vec3::new(0.25, 0.5, 0.5)).norm() < 1e-12);
    assert_eq!(counts(&q), (8, 12, 6));
    // the new face lies in the cut plane
    let cut = q.planes().iter().position(|pl| (pl.normal - Vec3::x()).norm() < 1e-12).unwrap();
    assert!(q.faces()[cut].iter().all(|&v| (q.vertices()[v].x - 0.5).abs() < 1e-12));
}

#[test]
fn clip_beyond_body_is_identity() {
    let cube = unit_cube();
    let q = clip(&cube, &HalfSpace::new(Vec3::x(), 2.0)).unwrap();
    assert_eq!(q.vertices(), cube.vertices());
    assert_eq!(q.faces(), cube.faces());
}

#[test]
fn clip_away_everything_is_empty() {
    let cube = unit_cube();
    assert!(matches!(clip(&cube, &HalfSpace::new(Vec3::x(), -0.5)), Err(GeomError::EmptyResult)));
    // touching a single face leaves no interior
    assert!(matches!(clip(&cube, &HalfSpace::new(Vec3::x(), 0.0)), Err(GeomError::EmptyResult)));
}

#[test]
fn tetrahedron_vertex_truncation_has_five_faces() {
    // cut off the corner at (1,1,1) with a plane perpendicular to it:
    // four old faces survive, three of them shortened, plus the cut
    let t = regular_tetrahedron();
    let n = Vec3::new(1.0, 1.0, 1.0).normalize();
    let q = clip(&t, &HalfSpace::new(n, 0.8 * 3f64.sqrt())).unwrap();
    assert_eq!(q.num_faces(), 5);
    assert_eq!(counts(&q), (6, 9, 5));
    assert!(validate(&q).is_empty());
}

#[test]
fn simplex_and_cube_mass() {
    let m = mass_properties(&standard_simplex());
    assert!((m.volume - 1.0 / 6.0).abs() < 1e-15);
    assert!((m.centroid - Vec3::new(0.25, 0.25, 0.25)).norm() < 1e-15);
    let m = mass_properties(&unit_cube());
    assert!((m.volume - 1.0).abs() < 1e-15);
    assert!((m.centroid - Vec3::new(0.5, 0.5, 0.5)).norm() < 1e-15);
    assert!((m.first_moment - m.centroid * m.volume).norm() < 1e-15);
}

#[test]
fn mass_agrees_with_pyramid_oracle_far_from_origin() {
    // anchoring at the vertex average keeps precision when the body is far out
    let cube = unit_cube().translated(&Vec3::new(1e6, -2e6, 3e6));
    let m = mass_properties(&cube);
    assert!((m.volume - 1.0).abs() < 1e-9);
    let near = mass_properties(&unit_cube());
    let (vol, mom) = common::pyramid_mass(&unit_cube());
    assert!((near.volume - vol).abs() < 1e-14);
    assert!((near.first_moment - mom).norm() < 1e-14);
}

#[test]
fn valid_cube_has_no_violations() {
    assert_eq!(validate(&unit_cube()), vec![]);
}

#[test]
fn displaced_vertex_is_reported() {
    let cube = unit_cube();
    let mut v = cube.vertices().to_vec();
    // corner (1,1,1) pushed outward along +z by ten tolerances
    let i = v.iter().position(|x| *x == Vec3::new(1.0, 1.0, 1.0)).unwrap();
    v[i].z += 10.0 * EPS_GEOM * cube.radius_about(&cube.vertex_average());
    let bad = ConvexPolyhedron::from_raw(v, cube.faces().to_vec());
    let found = validate(&bad);
    assert!(found.iter().any(|x| matches!(x, Violation::NonCoplanar { .. } | Violation::NonConvex { .. })), "{found:?}");
}

#[test]
fn duplicate_face_breaks_euler() {
    let cube = unit_cube();
    let mut faces = cube.faces().to_vec();
    faces.push(faces[0].clone());
    let bad = ConvexPolyhedron::from_raw(cube.vertices().to_vec(), faces);
    let found = validate(&bad);
    assert!(found.iter().any(|x| matches!(x, Violation::Euler { .. })), "{found:?}");
}

#[test]
fn from_faces_rejects_invalid_input() {
    let cube = unit_cube();
    let mut faces = cube.faces().to_vec();
    faces.pop();
    assert!(matches!(ConvexPolyhedron::from_faces(cube.vertices().to_vec(), faces), Err(GeomError::Invalid(_))));
}

fn cloud(seed: u64, count: usize) -> Vec<Vec3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_in_ball(&mut rng)).collect()
}

fn rotation(seed: u64) -> nalgebra::Rotation3<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let axis = random_in_ball(&mut rng);
    nalgebra::Rotation3::new(axis * 3.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_hulls_validate(seed in any::<u64>(), count in 20usize..500) {
        let pts = cloud(seed, count);
        let p = convex_hull(&pts).unwrap();
        prop_assert!(validate(&p).is_empty());
        let tol = p.tolerance();
        for x in &pts {
            for pl in p.planes() {
                prop_assert!(pl.signed_distance(x) <= tol);
            }
        }
    }

    #[test]
    fn clip_pieces_add_up(seed in any::<u64>(), count in 20usize..200, d in -0.4f64..0.4) {
        let p = convex_hull(&cloud(seed, count)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
        let n = random_in_ball(&mut rng).normalize();
        let c = mass_properties(&p).centroid;
        let h = HalfSpace::new(n, n.dot(&c) + d * 0.5);
        let (Ok(a), Ok(b)) = (clip(&p, &h), clip(&p, &h.complement())) else {
            return Ok(());
        };
        let (pa, ma, mb) = (mass_properties(&p), mass_properties(&a), mass_properties(&b));
        prop_assert!((ma.volume + mb.volume - pa.volume).abs() <= 1e-9 * pa.volume);
        let scale = pa.volume * p.radius_about(&Vec3::zeros());
        prop_assert!((ma.first_moment + mb.first_moment - pa.first_moment).norm() <= 1e-9 * scale);
        prop_assert!(validate(&a).is_empty());
        prop_assert!(validate(&b).is_empty());
    }

    #[test]
    fn mass_is_rigid_motion_equivariant(seed in any::<u64>(), count in 20usize..200) {
        let p = convex_hull(&cloud(seed, count)).unwrap();
        let rot = rotation(seed);
        let t = Vec3::new(3.0, -1.0, 2.5);
        let q = p.map_vertices(|v| rot * v + t);
        let (mp, mq) = (mass_properties(&p), mass_properties(&q));
        prop_assert!((mp.volume - mq.volume).abs() <= 1e-9 * mp.volume);
        prop_assert!((rot * mp.centroid + t - mq.centroid).norm() <= 1e-9);
        let (vol, _) = common::pyramid_mass(&p);
        prop_assert!((vol - mp.volume).abs() <= 1e-12);
    }
}
