//! Named complexes used as a test corpus and by the command line.

use itertools::Itertools;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Full simplex `Δ^d`.
pub fn simplex(d: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets([(0..=d as u32).collect::<Vec<_>>()])
        .expect("valid facet")
        .with_name(format!("simplex {d}"))
}

/// `∂Δ^{d+1}`, a triangulated `d`-sphere.
pub fn sphere(d: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets((0..=d as u32 + 1).combinations(d + 1))
        .expect("valid facets")
        .with_name(format!("sphere {d}"))
}

/// Path with `k >= 1` edges.
pub fn path(k: usize) -> Result<SimplicialComplex> {
    if k == 0 {
        return Err(invalid("path", "needs at least one edge"));
    }
    Ok(
        SimplicialComplex::from_facets((0..k as u32).map(|i| [i, i + 1]))
            .expect("valid facets")
            .with_name(format!("path {k}")),
    )
}

/// Cycle graph with `k >= 3` vertices.
pub fn cycle(k: usize) -> Result<SimplicialComplex> {
    if k < 3 {
        return Err(invalid("cycle", "needs at least 3 vertices"));
    }
    let k = k as u32;
    Ok(
        SimplicialComplex::from_facets((0..k).map(|i| [i, (i + 1) % k]))
            .expect("valid facets")
            .with_name(format!("cycle {k}")),
    )
}

/// One centre joined to `k >= 1` leaves.
pub fn star(k: usize) -> Result<SimplicialComplex> {
    if k == 0 {
        return Err(invalid("star", "needs at least one leaf"));
    }
    Ok(
        SimplicialComplex::from_facets((1..=k as u32).map(|i| [0, i]))
            .expect("valid facets")
            .with_name(format!("star {k}")),
    )
}

/// Staircase product of two cycles.
pub fn torus(a: usize, b: usize) -> Result<SimplicialComplex> {
    Ok(cycle(a)?
        .product(&cycle(b)?)
        .with_name(format!("torus {a} {b}")))
}

/// Looks up a family by name: `simplex D`, `sphere D`, `path K`, `cycle K`,
/// `star K`, `torus A B`, `point`, `empty`.
pub fn generate(family: &str, params: &[usize]) -> Result<SimplicialComplex> {
    let want = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(invalid(
                family,
                &format!("expected {n} parameter(s), got {}", params.len()),
            ))
        }
    };
    match family {
        "simplex" => want(1).map(|_| simplex(params[0])),
        "sphere" => want(1).map(|_| sphere(params[0])),
        "path" => want(1).and_then(|_| path(params[0])),
        "cycle" => want(1).and_then(|_| cycle(params[0])),
        "star" => want(1).and_then(|_| star(params[0])),
        "torus" => want(2).and_then(|_| torus(params[0], params[1])),
        "point" => want(0).map(|_| simplex(0).with_name("point")),
        "empty" => want(0).map(|_| SimplicialComplex::empty().with_name("empty")),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

fn invalid(family: &str, reason: &str) -> Error {
    Error::InvalidParams {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

/// The cross-validation corpus: edge, two-edge path, 3-cycle, Y-graph,
/// full triangle and the boundary of the tetrahedron.
pub fn corpus() -> Vec<SimplicialComplex> {
    vec![
        path(1).expect("valid").with_name("edge"),
        path(2).expect("valid"),
        cycle(3).expect("valid"),
        star(3).expect("valid").with_name("Y-graph"),
        simplex(2),
        sphere(2),
    ]
}
