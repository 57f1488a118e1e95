//! Rotation systems, face tracing and geometric duals.
//!
//! Every edge `e = (u, v)` of a [`Graph`] has two ends ("darts"): the tail at
//! `u` and the head at `v`. A rotation system lists, for every vertex, the
//! cyclic order of the darts at that vertex; it determines a cellular
//! embedding of a connected graph in an orientable surface. Faces are the
//! orbits of `d ↦ σ(θ(d))`, where `θ` swaps the two ends of an edge and `σ`
//! steps to the next dart in the rotation.

use crate::{Error, Graph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    /// `false` for the end at the first endpoint, `true` for the second.
    pub head: bool,
}

impl Dart {
    pub fn tail(edge: usize) -> Dart {
        Dart { edge, head: false }
    }

    pub fn head(edge: usize) -> Dart {
        Dart { edge, head: true }
    }

    fn index(self) -> usize {
        2 * self.edge + usize::from(self.head)
    }

    fn from_index(i: usize) -> Dart {
        Dart {
            edge: i / 2,
            head: i % 2 == 1,
        }
    }

    fn opposite(self) -> Dart {
        Dart {
            edge: self.edge,
            head: !self.head,
        }
    }
}

/// Cyclic order of darts around each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<Dart>>,
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<Dart>>) -> RotationSystem {
        RotationSystem { rotations }
    }

    /// Rotation read off a neighbour order for simple graphs: vertex `v`
    /// lists its neighbours, each resolved to the unique edge joining them.
    pub fn from_neighbour_order(g: &Graph, order: &[Vec<usize>]) -> Result<RotationSystem> {
        let mut rotations = Vec::with_capacity(order.len());
        for (v, nbrs) in order.iter().enumerate() {
            let mut rot = Vec::with_capacity(nbrs.len());
            for &w in nbrs {
                let mut hits = g.edges().iter().enumerate().filter_map(|(e, &(a, b))| {
                    if (a, b) == (v, w) {
                        Some(Dart::tail(e))
                    } else if (a, b) == (w, v) {
                        Some(Dart::head(e))
                    } else {
                        None
                    }
                });
                let dart = hits.next().ok_or_else(|| {
                    Error::MalformedRotation(format!("no edge between {} and {}", v + 1, w + 1))
                })?;
                if hits.next().is_some() {
                    return Err(Error::MalformedRotation(format!(
                        "vertices {} and {} are joined by several edges",
                        v + 1,
                        w + 1
                    )));
                }
                rot.push(dart);
            }
            rotations.push(rot);
        }
        Ok(RotationSystem { rotations })
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    /// Checks that every dart of `g` occurs exactly once, at its own vertex.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rotations.len() != g.vertex_count() {
            return Err(Error::MalformedRotation(format!(
                "{} rotations for {} vertices",
                self.rotations.len(),
                g.vertex_count()
            )));
        }
        let mut seen = vec![false; 2 * g.edge_count()];
        for (v, rot) in self.rotations.iter().enumerate() {
            for &d in rot {
                if d.edge >= g.edge_count() {
                    return Err(Error::MalformedRotation(format!(
                        "vertex {} lists unknown edge {}",
                        v + 1,
                        d.edge + 1
                    )));
                }
                let (a, b) = g.edge(d.edge);
                let at = if d.head { b } else { a };
                if at != v {
                    return Err(Error::MalformedRotation(format!(
                        "an end of edge {} listed at vertex {} belongs to vertex {}",
                        d.edge + 1,
                        v + 1,
                        at + 1
                    )));
                }
                if std::mem::replace(&mut seen[d.index()], true) {
                    return Err(Error::MalformedRotation(format!(
                        "an end of edge {} is listed twice",
                        d.edge + 1
                    )));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::MalformedRotation(format!(
                "an end of edge {} is missing",
                missing / 2 + 1
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct GeometricDual {
    /// One vertex per face, one edge per primal edge.
    pub dual: Graph,
    /// `edge_map[e]` is the dual edge crossing primal edge `e`.
    pub edge_map: Vec<usize>,
    /// Boundary walks, each starting at its smallest dart.
    pub faces: Vec<Vec<Dart>>,
    /// `V - E + F` of the traced surface.
    pub euler_characteristic: i64,
}

impl GeometricDual {
    pub fn face_sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Genus of the orientable surface, `(2 - χ) / 2`.
    pub fn genus(&self) -> i64 {
        (2 - self.euler_characteristic) / 2
    }
}

/// Traces the faces of the embedding and builds the geometric dual.
pub fn geometric_dual(g: &Graph, rot: &RotationSystem) -> Result<GeometricDual> {
    rot.validate(g)?;
    if g.edge_count() == 0 {
        return Err(Error::MalformedRotation(
            "face tracing needs at least one edge".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::MalformedRotation(
            "graph is disconnected, so the embedding is not cellular".into(),
        ));
    }
    let darts = 2 * g.edge_count();
    let mut next_in_rotation = vec![0usize; darts];
    for rotation in rot.rotations() {
        for (k, d) in rotation.iter().enumerate() {
            let succ = rotation[(k + 1) % rotation.len()];
            next_in_rotation[d.index()] = succ.index();
        }
    }
    let step = |d: usize| next_in_rotation[Dart::from_index(d).opposite().index()];

    let mut face_of = vec![usize::MAX; darts];
    let mut faces = Vec::new();
    for start in 0..darts {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        while face_of[d] == usize::MAX {
            face_of[d] = id;
            walk.push(Dart::from_index(d));
            d = step(d);
        }
        faces.push(walk);
    }

    let edges = (0..g.edge_count())
        .map(|e| {
            (
                face_of[Dart::tail(e).index()],
                face_of[Dart::head(e).index()],
            )
        })
        .collect();
    let dual = Graph::new(faces.len(), edges)?;
    let euler_characteristic = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
    Ok(GeometricDual {
        dual,
        edge_map: (0..g.edge_count()).collect(),
        faces,
        euler_characteristic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_k4() {
        let g = Graph::complete(4);
        // straight-line drawing with vertex 3 (index 3) in the middle of triangle 0,1,2
        let order = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let rot = RotationSystem::from_neighbour_order(&g, &order).unwrap();
        let d = geometric_dual(&g, &rot).unwrap();
        assert_eq!(d.faces.len(), 4);
        assert_eq!(d.euler_characteristic, 2);
        assert!(d.face_sizes().iter().all(|&s| s == 3));
        // K4 is self-dual
        assert_eq!(d.dual.vertex_count(), 4);
        assert_eq!(d.dual.girth(), Some(3));
    }

    #[test]
    fn single_loop_on_the_sphere() {
        let g = Graph::new(1, vec![(0, 0)]).unwrap();
        let rot = RotationSystem::new(vec![vec![Dart::tail(0), Dart::head(0)]]);
        let d = geometric_dual(&g, &rot).unwrap();
        assert_eq!(d.faces.len(), 2);
        assert_eq!(d.euler_characteristic, 2);
        assert_eq!(d.dual.edges(), &[(0, 1)]);
    }

    #[test]
    fn interleaved_bouquet_on_the_torus() {
        let g = Graph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let rot = RotationSystem::new(vec![vec![
            Dart::tail(0),
            Dart::tail(1),
            Dart::head(0),
            Dart::head(1),
        ]]);
        let d = geometric_dual(&g, &rot).unwrap();
        assert_eq!(d.faces.len(), 1);
        assert_eq!(d.euler_characteristic, 0);
        assert_eq!(d.genus(), 1);
        assert_eq!(d.dual.edges(), &[(0, 0), (0, 0)]);
    }

    #[test]
    fn rejects_malformed_rotations() {
        let g = Graph::complete(3);
        let dup = RotationSystem::new(vec![
            vec![Dart::tail(0), Dart::tail(0)],
            vec![Dart::head(0), Dart::tail(2)],
            vec![Dart::head(1), Dart::head(2)],
        ]);
        assert!(matches!(
            geometric_dual(&g, &dup),
            Err(Error::MalformedRotation(_))
        ));
        let wrong_vertex = RotationSystem::new(vec![
            vec![Dart::head(0), Dart::tail(1)],
            vec![Dart::tail(0), Dart::tail(2)],
            vec![Dart::head(1), Dart::head(2)],
        ]);
        assert!(geometric_dual(&g, &wrong_vertex).is_err());
        let short = RotationSystem::new(vec![vec![]]);
        assert!(geometric_dual(&g, &short).is_err());
    }
}
