//! The three worked examples, built in code and bundled as documents.
//!
//! The builders and the checked-in JSON files must agree byte for byte; a unit
//! test enforces this.

use crate::morphism::{geometric_dual, RotationSystem};
use crate::{Graph, Matroid, MatroidMorphism, Result};

use super::Descriptor;

pub const FANO_PROJECTION: &str = include_str!("../../fixtures/fano-projection.json");
pub const GRAPH_HOM: &str = include_str!("../../fixtures/graph-hom.json");
pub const K7_TORUS: &str = include_str!("../../fixtures/k7-torus.json");
pub const K7_GRAPH: &str = include_str!("../../fixtures/k7-graph.json");
pub const K7_ROTATION: &str = include_str!("../../fixtures/k7-rotation.json");

pub const NAMES: [&str; 3] = ["fano-projection", "graph-hom", "k7-torus"];

/// Files belonging to a fixture, main document first.
pub fn bundled(name: &str) -> Option<Vec<(&'static str, &'static str)>> {
    match name {
        "fano-projection" => Some(vec![("fano-projection.json", FANO_PROJECTION)]),
        "graph-hom" => Some(vec![("graph-hom.json", GRAPH_HOM)]),
        "k7-torus" => Some(vec![
            ("k7-torus.json", K7_TORUS),
            ("k7-graph.json", K7_GRAPH),
            ("k7-rotation.json", K7_ROTATION),
        ]),
        _ => None,
    }
}

/// The 14 points of `A^4(F_2)` off the line through `0` and `e_1`, as affine
/// dependencies (vectors `(1, x)`), projected from that line onto the Fano
/// plane. Fano element `j` is the point with binary expansion `j + 1`.
pub fn fano_projection() -> MatroidMorphism {
    let points: Vec<u32> = (0..16).filter(|&x| x != 0 && x != 1).collect();
    let mut rows = vec![vec![1i64; points.len()]];
    for bit in 0..4 {
        rows.push(points.iter().map(|&x| i64::from((x >> bit) & 1)).collect());
    }
    let source = Matroid::linear(2, &rows).expect("binary matrix");
    let map = points.iter().map(|&x| (x >> 1) as usize - 1).collect();
    MatroidMorphism::new(source, Matroid::fano(), map).expect("projection is a morphism")
}

/// A triangular prism folded onto a triangle. The outer triangle `a, b, c`
/// goes to `2, 3, 1`, the inner triangle `d, e, f` to `1, 2, 3`, and the
/// spokes are `ad`, `be`, `cf`.
pub fn graph_hom() -> MatroidMorphism {
    let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
    let g_edges = vec![
        (a, b),
        (b, c),
        (c, a),
        (d, e),
        (e, f),
        (f, d),
        (a, d),
        (b, e),
        (c, f),
    ];
    let phi = [1usize, 2, 0, 0, 1, 2];
    let h_edges = vec![(0, 1), (1, 2), (2, 0)];
    let map = g_edges
        .iter()
        .map(|&(u, v)| {
            let (x, y) = (phi[u].min(phi[v]), phi[u].max(phi[v]));
            h_edges
                .iter()
                .position(|&(p, q)| (p.min(q), p.max(q)) == (x, y))
                .expect("adjacent images")
        })
        .collect();
    let g = Graph::new(6, g_edges).expect("prism");
    let h = Graph::new(3, h_edges).expect("triangle");
    MatroidMorphism::new(
        Matroid::cycle_matroid(g).expect("small"),
        Matroid::cycle_matroid(h).expect("small"),
        map,
    )
    .expect("graph homomorphisms give morphisms")
}

pub fn k7_graph() -> Graph {
    Graph::complete(7)
}

/// The minimal triangulation of the torus: around vertex `i` the neighbours
/// are `i+1, i+3, i+2, i+6, i+4, i+5` mod 7.
pub fn k7_rotation() -> RotationSystem {
    let order: Vec<Vec<usize>> = (0..7)
        .map(|i| [1, 3, 2, 6, 4, 5].iter().map(|s| (i + s) % 7).collect())
        .collect();
    RotationSystem::from_neighbour_order(&k7_graph(), &order).expect("simple graph")
}

/// The edge bijection from the cocycle matroid of `K_7` to the cycle matroid
/// of its dual on the torus (the Heawood graph).
pub fn k7_torus() -> Result<MatroidMorphism> {
    let g = k7_graph();
    let dual = geometric_dual(&g, &k7_rotation())?;
    let source = Matroid::cycle_matroid(g)?.dual();
    let target = Matroid::cycle_matroid(dual.dual)?;
    MatroidMorphism::new(source, target, dual.edge_map)
}

/// Canonical text of every bundled file, rebuilt from the constructors.
pub fn regenerate() -> Result<Vec<(&'static str, String)>> {
    let graph_doc = super::canonical_string(&{
        let mut v = super::graph_to_value(&k7_graph());
        v["type"] = "matroid".into();
        v
    });
    Ok(vec![
        (
            "fano-projection.json",
            Descriptor::Morphism(fano_projection()).to_canonical_string()?,
        ),
        (
            "graph-hom.json",
            Descriptor::Morphism(graph_hom()).to_canonical_string()?,
        ),
        (
            "k7-torus.json",
            Descriptor::Morphism(k7_torus()?).to_canonical_string()?,
        ),
        ("k7-graph.json", graph_doc),
        (
            "k7-rotation.json",
            Descriptor::Rotation(k7_rotation()).to_canonical_string()?,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_files_match_constructors() {
        for (name, text) in regenerate().unwrap() {
            let bundled = NAMES
                .iter()
                .flat_map(|n| bundled(n).unwrap())
                .find(|(f, _)| *f == name)
                .unwrap()
                .1;
            assert_eq!(bundled, text, "{name} is stale");
        }
    }

    #[test]
    fn bundled_files_round_trip() {
        for name in NAMES {
            for (file, text) in bundled(name).unwrap() {
                assert_eq!(super::super::canonicalize(text).unwrap(), text, "{file}");
            }
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            fano_projection().b_vector().unwrap()[..7],
            [0, 0, 0, 224, 840, 1232, 0]
        );
        assert_eq!(
            graph_hom().b_vector().unwrap(),
            [0, 0, 27, 79, 111, 75, 0, 0, 0, 0]
        );
    }
}
