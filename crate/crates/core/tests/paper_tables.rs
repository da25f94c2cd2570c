//! Golden tests: the argmax tables of the four generating polygons and the
//! piecewise images of the first four collections of the builtin trajectory,
//! evaluated on the right half-plane of directions.

use demyanov::dynamics::trajectory;
use demyanov::{
    builtin_counterexample, converter_image, exposed_face, Collection, Direction, Polytope,
};

fn d(a: i64, b: i64) -> Direction {
    Direction::new(a, b).unwrap()
}

fn conv(pts: &[(i64, i64)]) -> Polytope {
    Polytope::from_ints(pts).unwrap()
}

fn p1() -> Polytope {
    conv(&[(1, 0), (1, 1), (-1, 0)])
}
fn p2() -> Polytope {
    conv(&[(-1, 0), (-1, 1), (1, 0)])
}
fn p3() -> Polytope {
    conv(&[(1, 2), (-1, 2), (0, 0)])
}
fn p4() -> Polytope {
    conv(&[(2, 0), (-2, 0)])
}

fn omegas() -> Vec<Collection> {
    trajectory(&builtin_counterexample(), 3).unwrap()
}

/// Each row: representative directions and the expected image.
type Table = Vec<(Vec<(i64, i64)>, Vec<(i64, i64)>)>;

fn check_table(omega: &Collection, table: &Table, label: &str) {
    for (dirs, hull) in table {
        let expected = conv(hull);
        for &(a, b) in dirs {
            let got = converter_image(omega, &d(a, b));
            assert_eq!(got, expected, "{label} at ({a},{b})");
            // The mirror direction gives the mirror image.
            let mirrored = converter_image(omega, &d(-a, b));
            assert_eq!(mirrored, expected.reflect_y(), "{label} at ({},{b})", -a);
        }
    }
}

#[test]
fn argmax_table_p1() {
    let p = p1();
    assert_eq!(exposed_face(&p, &d(0, -1)), conv(&[(-1, 0), (1, 0)]));
    for g in [d(1, -1), d(2, -1), d(1, -5)] {
        assert_eq!(exposed_face(&p, &g), conv(&[(1, 0)]));
    }
    assert_eq!(exposed_face(&p, &d(1, 0)), conv(&[(1, 0), (1, 1)]));
    for g in [d(1, 2), d(1, 3), d(0, 1), d(5, 1)] {
        assert_eq!(exposed_face(&p, &g), conv(&[(1, 1)]));
    }
}

#[test]
fn argmax_table_p2() {
    let p = p2();
    assert_eq!(exposed_face(&p, &d(0, -1)), conv(&[(-1, 0), (1, 0)]));
    for g in [d(1, -1), d(2, -1), d(1, 0), d(1, 1)] {
        assert_eq!(exposed_face(&p, &g), conv(&[(1, 0)]));
    }
    assert_eq!(exposed_face(&p, &d(1, 2)), conv(&[(1, 0), (-1, 1)]));
    for g in [d(1, 3), d(0, 1)] {
        assert_eq!(exposed_face(&p, &g), conv(&[(-1, 1)]));
    }
}

#[test]
fn argmax_table_p3() {
    let p = p3();
    for g in [d(0, -1), d(1, -1)] {
        assert_eq!(exposed_face(&p, &g), conv(&[(0, 0)]));
    }
    assert_eq!(exposed_face(&p, &d(2, -1)), conv(&[(0, 0), (1, 2)]));
    for g in [d(1, 0), d(1, 2), d(1, 3), d(3, -1)] {
        assert_eq!(exposed_face(&p, &g), conv(&[(1, 2)]));
    }
    assert_eq!(exposed_face(&p, &d(0, 1)), conv(&[(-1, 2), (1, 2)]));
}

#[test]
fn argmax_table_p4() {
    let p = p4();
    assert_eq!(exposed_face(&p, &d(0, -1)), p);
    for g in [d(1, -1), d(2, -1), d(1, 0), d(1, 2), d(1, 3)] {
        assert_eq!(exposed_face(&p, &g), conv(&[(2, 0)]));
    }
    assert_eq!(exposed_face(&p, &d(0, 1)), p);
}

#[test]
fn image_table_omega0() {
    let table: Table = vec![
        (vec![(0, -1)], vec![(-2, 0), (2, 0)]),
        (vec![(1, -1), (1, -5)], vec![(0, 0), (2, 0)]),
        (vec![(2, -1)], vec![(0, 0), (1, 2), (2, 0)]),
        (vec![(1, 0), (3, -1), (1, 1)], vec![(1, 0), (1, 2), (2, 0)]),
        (vec![(1, 2)], vec![(1, 0), (-1, 1), (1, 2), (2, 0)]),
        (vec![(1, 3), (1, 7)], vec![(-1, 1), (1, 2), (2, 0)]),
        (vec![(0, 1)], vec![(-1, 2), (1, 2), (2, 0), (-2, 0)]),
    ];
    check_table(&omegas()[0], &table, "P_Omega0");
}

#[test]
fn image_table_omega1() {
    let table: Table = vec![
        (vec![(0, -1), (1, -4)], vec![(-2, 0), (2, 0)]),
        (vec![(1, -3)], vec![(-2, 0), (2, 0), (1, 1)]),
        (vec![(1, -1), (1, -2)], vec![(-1, 0), (1, 1), (2, 0)]),
        (vec![(1, 0)], vec![(-1, 0), (-1, 2), (2, 0), (1, 1)]),
        (vec![(3, 1), (5, 2)], vec![(0, 0), (-1, 2), (2, 0), (1, 1)]),
        (
            vec![(2, 1), (1, 1), (1, 2), (1, 5)],
            vec![(0, 0), (-1, 2), (2, 0), (1, 2)],
        ),
        (vec![(0, 1)], vec![(-1, 2), (1, 2), (2, 0), (-2, 0)]),
    ];
    check_table(&omegas()[1], &table, "P_Omega1");
}

#[test]
fn image_table_omega2() {
    let table: Table = vec![
        (vec![(0, -1)], vec![(-2, 0), (2, 0)]),
        (vec![(1, -1), (1, -3)], vec![(0, 0), (2, 0)]),
        (vec![(2, -1)], vec![(0, 0), (1, 2), (2, 0)]),
        (vec![(1, 0), (1, 1), (3, -1)], vec![(1, 0), (1, 2), (2, 0)]),
        (vec![(1, 2)], vec![(1, 0), (-1, 1), (1, 2), (2, 0), (-1, 2)]),
        (vec![(1, 3), (1, 9)], vec![(-1, 1), (1, 2), (2, 0), (-1, 2)]),
        (vec![(0, 1)], vec![(-1, 2), (1, 2), (2, 0), (-2, 0)]),
    ];
    check_table(&omegas()[2], &table, "P_Omega2");
}

#[test]
fn image_table_omega3() {
    let table: Table = vec![
        (vec![(0, -1)], vec![(-2, 0), (2, 0)]),
        (vec![(1, -3)], vec![(-2, 0), (2, 0), (1, 1)]),
        (vec![(1, -1), (1, -2)], vec![(-1, 0), (1, 1), (2, 0)]),
        (vec![(1, 0)], vec![(-1, 0), (-1, 2), (2, 0), (1, 2)]),
        (
            vec![(3, 1), (1, 1), (1, 2), (1, 5)],
            vec![(0, 0), (-1, 2), (2, 0), (1, 2)],
        ),
        (vec![(0, 1)], vec![(-1, 2), (1, 2), (2, 0), (-2, 0)]),
    ];
    check_table(&omegas()[3], &table, "P_Omega3");
}

#[test]
fn omega3_below_steepest_ray_is_the_base_segment() {
    // The table's first row only names g_x = 0; the open sector
    // g_x > 0, g_y < -3 g_x gives the same segment.
    let om = &omegas()[3];
    assert_eq!(converter_image(om, &d(1, -4)), conv(&[(-2, 0), (2, 0)]));
}

#[test]
fn distinguishing_witness() {
    let om = omegas();
    let witness = demyanov::Point::int(-1, 2);
    assert!(converter_image(&om[2], &d(1, 2)).contains_vertex(&witness));
    assert!(!converter_image(&om[0], &d(1, 2)).contains_vertex(&witness));
    for g in [d(1, 3), d(1, 10)] {
        assert!(converter_image(&om[2], &g).contains_vertex(&witness));
        assert!(!converter_image(&om[0], &g).contains_vertex(&witness));
    }
}

#[test]
fn omega1_is_the_reflected_table() {
    // Seven right-hand rows plus mirrors, two of them self-symmetric.
    let om = omegas();
    assert_eq!(om[1].len(), 12);
    assert_eq!(om[1].reflect_y(), om[1]);
}
