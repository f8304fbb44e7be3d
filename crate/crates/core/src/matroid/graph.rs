use crate::error::Error;
use crate::subset::Subset;

/// Undirected multigraph; edge `i` is element `i` of its cycle matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Self-loops are rejected: they would be loops of the cycle matroid.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::InvalidArgument(format!(
                    "edge {i} = ({u}, {v}) has an endpoint outside 0..{vertices}"
                )));
            }
            if u == v {
                return Err(Error::Loop(i));
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("cycle on n >= 2 vertices")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).expect("complete graph has no self-loops")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Components of the spanning subgraph `(V, edges)`; isolated vertices count.
    pub fn components_of(&self, edges: Subset) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        let mut merged = 0;
        for i in edges {
            let (u, v) = self.edges[i];
            if uf.union(u, v) {
                merged += 1;
            }
        }
        self.vertices - merged
    }

    /// c(G).
    pub fn components(&self) -> usize {
        self.components_of(Subset::full(self.edges.len()))
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// Size of a spanning forest of the edge subset.
    pub(crate) fn forest_rank(&self, edges: Subset) -> usize {
        self.vertices - self.components_of(edges)
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
