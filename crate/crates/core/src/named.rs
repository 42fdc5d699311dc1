//! Built-in graphs addressed by name: `ring:k`, `star:k`, `edgeless:k`,
//! `petersen` and `code613`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Graph, MAX_VERTICES};

/// Outer 5-cycle on 1..5, inner pentagram on 6..10, spokes i -- i+5 (1-based).
const PETERSEN_EDGES: [(usize, usize); 15] = [
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (6, 8), (8, 10), (7, 10), (7, 9), (6, 9),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
];

/// Graph underlying the [[6,1,3]] code. Toggling the local edges (1,5), (4,5)
/// and (2,3) leaves the three cross edges (1,2), (3,4), (5,6).
const CODE613_EDGES: [(usize, usize); 6] = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6)];

fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
    let edges: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edges(n, &edges)
}

pub fn petersen() -> Graph {
    from_one_based(10, &PETERSEN_EDGES).expect("static edge list")
}

pub fn code613() -> Graph {
    from_one_based(6, &CODE613_EDGES).expect("static edge list")
}

pub fn ring(k: usize) -> Result<Graph, Error> {
    check_size("ring", k, 3)?;
    let edges: Vec<_> = (0..k).map(|a| (a, (a + 1) % k)).collect();
    Graph::from_edges(k, &edges)
}

/// Star on `k` vertices: vertex 1 joined to every other vertex. `star:2` is K2.
pub fn star(k: usize) -> Result<Graph, Error> {
    check_size("star", k, 2)?;
    let edges: Vec<_> = (1..k).map(|b| (0, b)).collect();
    Graph::from_edges(k, &edges)
}

pub fn edgeless(k: usize) -> Result<Graph, Error> {
    check_size("edgeless", k, 1)?;
    Graph::edgeless(k)
}

fn check_size(family: &'static str, size: usize, min: usize) -> Result<(), Error> {
    if (min..=MAX_VERTICES).contains(&size) {
        Ok(())
    } else {
        Err(Error::NamedGraphSize {
            family,
            size,
            min,
            max: MAX_VERTICES,
        })
    }
}

/// Resolves a graph identifier such as `ring:5` or `petersen`.
///
/// Returns [`Error::UnknownGraph`] only when the name matches no family, so
/// callers can fall back to treating it as a path.
pub fn named_graph(name: &str) -> Result<Graph, Error> {
    match name {
        "petersen" => return Ok(petersen()),
        "code613" => return Ok(code613()),
        _ => {}
    }
    let unknown = || Error::UnknownGraph(name.to_string());
    let (family, size) = name.split_once(':').ok_or_else(unknown)?;
    let build: fn(usize) -> Result<Graph, Error> = match family {
        "ring" => ring,
        "star" => star,
        "edgeless" => edgeless,
        _ => return Err(unknown()),
    };
    let size: usize = size.parse().map_err(|_| unknown())?;
    build(size)
}

/// Named graphs used throughout the test suites, all with `n <= 10`.
pub fn corpus() -> Vec<(String, Graph)> {
    let names = [
        "edgeless:1", "edgeless:3", "star:2", "star:3", "star:5", "ring:3", "ring:4", "ring:5",
        "ring:6", "ring:7", "ring:8", "ring:9", "ring:10", "code613", "petersen",
    ];
    names
        .iter()
        .map(|&name| (name.to_string(), named_graph(name).expect("corpus name")))
        .collect()
}
