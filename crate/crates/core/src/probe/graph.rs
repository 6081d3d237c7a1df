//! k-nearest-neighbor graphs and graph geodesics as inner-distance proxies.

use num::complex::Complex64;
use petgraph::algo::dijkstra;
use petgraph::graph::{NodeIndex, UnGraph};
use petgraph::unionfind::UnionFind;

use super::sample::{Hypersurface, PointCloud};
use crate::error::{Error, Result};

/// Default neighbor count.
pub const DEFAULT_K: usize = 8;
/// Neighbor counts are doubled on disconnection up to this cap.
pub const MAX_K: usize = 64;
/// An edge is kept only if its midpoint lies within this fraction of the
/// edge length from the hypersurface, so that edges do not jump between
/// sheets lying close together in the ambient space.
pub const EDGE_TOLERANCE: f64 = 0.25;

/// Symmetric k-nearest-neighbor graph with Euclidean edge weights.
#[derive(Clone, Debug)]
pub struct NeighborGraph {
    graph: UnGraph<(), f64>,
    k: usize,
}

impl NeighborGraph {
    /// Connects each point to its `k` nearest neighbors. With a surface,
    /// edges whose midpoint strays from it are dropped.
    pub fn build(cloud: &PointCloud, surface: Option<&Hypersurface>, k: usize) -> Self {
        let n = cloud.len();
        let mut graph = UnGraph::with_capacity(n, n * k);
        for _ in 0..n {
            graph.add_node(());
        }
        let mut dist: Vec<(f64, usize)> = Vec::with_capacity(n);
        for i in 0..n {
            dist.clear();
            dist.extend((0..n).filter(|&j| j != i).map(|j| (cloud.distance(i, j), j)));
            let kk = k.min(dist.len());
            if kk == 0 {
                continue;
            }
            dist.select_nth_unstable_by(kk - 1, |a, b| a.0.total_cmp(&b.0));
            for &(d, j) in &dist[..kk] {
                if graph.contains_edge(NodeIndex::new(i), NodeIndex::new(j)) {
                    continue;
                }
                if let Some(s) = surface {
                    if !edge_stays_on(s, cloud, i, j, d) {
                        continue;
                    }
                }
                graph.add_edge(NodeIndex::new(i), NodeIndex::new(j), d);
            }
        }
        NeighborGraph { graph, k }
    }

    /// Builds with `k`, doubling it (up to [`MAX_K`]) until all of
    /// `required` lie in one connected component.
    pub fn connected(
        cloud: &PointCloud,
        surface: Option<&Hypersurface>,
        k: usize,
        required: &[usize],
    ) -> Result<Self> {
        let mut k = k.max(1);
        loop {
            let g = NeighborGraph::build(cloud, surface, k);
            if g.joins(required) {
                return Ok(g);
            }
            if k >= MAX_K || k >= cloud.len() {
                return Err(Error::Disconnected { k });
            }
            k = (2 * k).min(MAX_K);
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Whether all listed nodes share a component.
    pub fn joins(&self, nodes: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.graph.node_count());
        for e in self.graph.raw_edges() {
            uf.union(e.source().index(), e.target().index());
        }
        nodes.windows(2).all(|w| uf.equiv(w[0], w[1]))
    }

    /// Graph distances from `source` to every node; unreachable nodes get
    /// infinity.
    pub fn distances_from(&self, source: usize) -> Vec<f64> {
        let map = dijkstra(&self.graph, NodeIndex::new(source), None, |e| *e.weight());
        let mut out = vec![f64::INFINITY; self.graph.node_count()];
        for (node, d) in map {
            out[node.index()] = d;
        }
        out
    }

    /// Shortest-path length between two nodes.
    pub fn path_length(&self, p: usize, q: usize) -> Result<f64> {
        if p == q {
            return Ok(0.0);
        }
        let map = dijkstra(&self.graph, NodeIndex::new(p), Some(NodeIndex::new(q)), |e| *e.weight());
        map.get(&NodeIndex::new(q)).copied().ok_or(Error::Disconnected { k: self.k })
    }
}

fn edge_stays_on(surface: &Hypersurface, cloud: &PointCloud, i: usize, j: usize, length: f64) -> bool {
    let (a, b) = (cloud.complex(i), cloud.complex(j));
    let mid: Vec<Complex64> = a.iter().zip(&b).map(|(x, y)| (x + y) * 0.5).collect();
    surface.distance_estimate(&mid) <= EDGE_TOLERANCE * length
}

/// Inner-distance estimate between cloud points `p` and `q`: the geodesic
/// in the k-nearest-neighbor graph, doubling `k` on disconnection.
pub fn inner_distance(
    cloud: &PointCloud,
    surface: Option<&Hypersurface>,
    p: usize,
    q: usize,
    k: usize,
) -> Result<f64> {
    let graph = NeighborGraph::connected(cloud, surface, k, &[p, q])?;
    graph.path_length(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn line_neighbors() {
        let pts: Vec<Vec<Complex64>> = (0..10).map(|i| vec![c(i as f64, 0.0), c(0.0, 0.0)]).collect();
        let cloud = PointCloud::from_complex(2, &pts);
        assert_eq!(inner_distance(&cloud, None, 3, 3, 2).unwrap(), 0.0);
        assert!((inner_distance(&cloud, None, 3, 4, 2).unwrap() - 1.0).abs() < 1e-12);
        assert!((inner_distance(&cloud, None, 0, 9, 2).unwrap() - 9.0).abs() < 1e-12);
    }

    #[test]
    fn disconnected_clusters() {
        let mut pts: Vec<Vec<Complex64>> = (0..5).map(|i| vec![c(i as f64, 0.0)]).collect();
        pts.extend((0..5).map(|i| vec![c(1000.0 + i as f64, 0.0)]));
        let cloud = PointCloud::from_complex(1, &pts);
        let g = NeighborGraph::build(&cloud, None, 2);
        assert!(g.joins(&[0, 4]));
        assert!(!g.joins(&[0, 5]));
        assert_eq!(g.path_length(0, 5), Err(Error::Disconnected { k: 2 }));
        // doubling reaches k = 8 > 4 neighbors in the cluster and links them
        assert!(NeighborGraph::connected(&cloud, None, 2, &[0, 5]).is_ok());
    }

    #[test]
    fn parabola_sheets_are_not_shortcut() {
        // dense samples of y = x^2 over real x in [-t, t]
        let t = 20.0;
        let pts: Vec<Vec<Complex64>> = (0..=400)
            .map(|i| {
                let x = -t + 2.0 * t * i as f64 / 400.0;
                vec![c(x, 0.0), c(x * x, 0.0)]
            })
            .collect();
        let cloud = PointCloud::from_complex(2, &pts);
        let f = parse_polynomial("y - x^2", &["x", "y"]).unwrap();
        let s = Hypersurface::new(&f).unwrap();
        let d = inner_distance(&cloud, Some(&s), 0, 400, DEFAULT_K).unwrap();
        assert!(d >= 2.0 * t * t * 0.9, "{d}");
        assert!(d >= cloud.distance(0, 400));
    }
}
