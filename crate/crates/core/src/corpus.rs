//! Small ideals with known behaviour, used by tests, the acceptance suite
//! and the command line.

use crate::graphs::{complete_graph, cycle_graph, edge_ideal, path_graph, star_graph};
use crate::ideal::MonomialIdeal;

const XYZ: &[&str] = &["x", "y", "z"];
const XYZT: &[&str] = &["x", "y", "z", "t"];

/// `<x^2*y, y^2*z, x^3, y^3, z^3>`: Lyubeznik under the listing order.
pub fn i1() -> MonomialIdeal {
    MonomialIdeal::from_exponents(XYZ, &[&[2, 1, 0], &[0, 2, 1], &[3, 0, 0], &[0, 3, 0], &[0, 0, 3]])
}

/// `<x1*x2*x4, x1*x2*x3, x1*x5, x2*x3*x6, x4*x6>`: not minimal under the
/// listing order.
pub fn i2() -> MonomialIdeal {
    MonomialIdeal::from_exponents(
        &["x1", "x2", "x3", "x4", "x5", "x6"],
        &[
            &[1, 1, 0, 1, 0, 0],
            &[1, 1, 1, 0, 0, 0],
            &[1, 0, 0, 0, 1, 0],
            &[0, 1, 1, 0, 0, 1],
            &[0, 0, 0, 1, 0, 1],
        ],
    )
}

/// Seven squarefree cubics in seven variables; not Lyubeznik.
pub fn i3() -> MonomialIdeal {
    MonomialIdeal::from_exponents(
        &["x1", "x2", "x3", "x4", "x5", "x6", "x7"],
        &[
            &[1, 1, 1, 0, 0, 0, 0],
            &[1, 1, 0, 1, 0, 0, 0],
            &[1, 0, 1, 1, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0],
            &[1, 1, 0, 0, 1, 0, 0],
            &[1, 0, 1, 0, 0, 1, 0],
            &[1, 0, 0, 1, 0, 0, 1],
        ],
    )
}

/// `<x^2*y^2, t^2*z^2, x^2*z^2>`.
pub fn remark_i() -> MonomialIdeal {
    MonomialIdeal::from_exponents(XYZT, &[&[2, 2, 0, 0], &[0, 0, 2, 2], &[2, 0, 2, 0]])
}

/// [`remark_i`] plus `t^2*y^2`; not Lyubeznik.
pub fn remark_j() -> MonomialIdeal {
    MonomialIdeal::from_exponents(
        XYZT,
        &[&[2, 2, 0, 0], &[0, 0, 2, 2], &[2, 0, 2, 0], &[0, 2, 0, 2]],
    )
}

/// [`remark_j`] plus `x*y*z*t`; Lyubeznik again.
pub fn remark_k() -> MonomialIdeal {
    MonomialIdeal::from_exponents(
        XYZT,
        &[&[2, 2, 0, 0], &[0, 0, 2, 2], &[2, 0, 2, 0], &[0, 2, 0, 2], &[1, 1, 1, 1]],
    )
}

/// `<x>`.
pub fn principal() -> MonomialIdeal {
    MonomialIdeal::from_exponents(&["x"], &[&[1]])
}

/// `<x*y>`.
pub fn principal_xy() -> MonomialIdeal {
    MonomialIdeal::from_exponents(&["x", "y"], &[&[1, 1]])
}

/// `<x, y>`.
pub fn koszul_xy() -> MonomialIdeal {
    MonomialIdeal::from_exponents(&["x", "y"], &[&[1, 0], &[0, 1]])
}

/// `<x, y, z>`.
pub fn koszul_xyz() -> MonomialIdeal {
    MonomialIdeal::from_exponents(XYZ, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
}

/// Edge ideal of the triangle, `<ab, bc, ac>`.
pub fn triangle() -> MonomialIdeal {
    edge_ideal(&cycle_graph(3)).expect("edges")
}

/// Edge ideal of the 4-cycle, `<ab, bc, cd, ad>`.
pub fn square() -> MonomialIdeal {
    edge_ideal(&cycle_graph(4)).expect("edges")
}

/// Every ideal with μ ≤ 6 and at most 6 variables, named.
pub fn corpus() -> Vec<(&'static str, MonomialIdeal)> {
    let graph = |g| edge_ideal(&g).expect("edges");
    vec![
        ("i1", i1()),
        ("i2", i2()),
        ("remark-i", remark_i()),
        ("remark-j", remark_j()),
        ("remark-k", remark_k()),
        ("principal", principal()),
        ("principal-xy", principal_xy()),
        ("koszul-xy", koszul_xy()),
        ("koszul-xyz", koszul_xyz()),
        ("triangle", triangle()),
        ("square", square()),
        ("path-3", graph(path_graph(3))),
        ("path-4", graph(path_graph(4))),
        ("path-5", graph(path_graph(5))),
        ("cycle-5", graph(cycle_graph(5))),
        ("cycle-6", graph(cycle_graph(6))),
        ("star-3", graph(star_graph(3))),
        ("complete-4", graph(complete_graph(4))),
        (
            "quadrics-xy",
            MonomialIdeal::from_exponents(&["x", "y"], &[&[2, 0], &[1, 1], &[0, 2]]),
        ),
        (
            "cubics-xy",
            MonomialIdeal::from_exponents(&["x", "y"], &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]),
        ),
        (
            "squares-and-xyz",
            MonomialIdeal::from_exponents(XYZ, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]),
        ),
        (
            "boundary-of-tetrahedron",
            MonomialIdeal::from_exponents(
                XYZT,
                &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]],
            ),
        ),
        (
            "mixed",
            MonomialIdeal::from_exponents(XYZ, &[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2], &[1, 0, 3]]),
        ),
        (
            "disjoint-edges",
            MonomialIdeal::from_exponents(XYZT, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]),
        ),
        (
            "staircase",
            MonomialIdeal::from_exponents(
                XYZ,
                &[&[3, 0, 0], &[2, 1, 0], &[0, 2, 1], &[1, 0, 2], &[0, 0, 3], &[0, 3, 0]],
            ),
        ),
    ]
}
