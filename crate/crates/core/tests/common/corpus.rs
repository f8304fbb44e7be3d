//! The fixed set of small matroids the acceptance and property suites run over.

use std::collections::BTreeSet;

use cyclic_matroids::matroid::Block;
use cyclic_matroids::{Field, Graph, LinearMatrix, Matroid, Subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Entry {
    pub name: String,
    pub matroid: Matroid,
    pub graph: Option<Graph>,
}

/// Connected graphs (as cycle matroids), uniform, random binary and explicit-bases matroids.
pub fn corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    out.extend(graphs());
    out.extend(uniforms());
    out.extend(binary(50, 0xB1));
    out.extend(explicit(20, 0xE5));
    out
}

pub fn graphs() -> Vec<Entry> {
    connected_graphs(5, 7)
        .into_iter()
        .map(|(n, edges)| {
            let g = Graph::new(n, edges.clone()).unwrap();
            Entry {
                name: format!("graph{n}:{edges:?}"),
                matroid: Matroid::graphic(g.clone()).unwrap(),
                graph: Some(g),
            }
        })
        .collect()
}

pub fn uniforms() -> Vec<Entry> {
    let mut out = Vec::new();
    for m in 1..=6 {
        for r in 1..=m {
            out.push(Entry {
                name: format!("U{r},{m}"),
                matroid: Matroid::uniform(r, m).unwrap(),
                graph: None,
            });
        }
    }
    out
}

fn random_columns(rng: &mut ChaCha8Rng, p: i64, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    let mut matrix = vec![vec![0; cols]; rows];
    for c in 0..cols {
        loop {
            for row in matrix.iter_mut() {
                row[c] = rng.gen_range(0..p);
            }
            if matrix.iter().any(|row| row[c] != 0) {
                break;
            }
        }
    }
    matrix
}

pub fn binary(count: usize, seed: u64) -> Vec<Entry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let rows = rng.gen_range(1..=3);
            let cols = rng.gen_range(1..=6);
            let matrix =
                LinearMatrix::new(Field::Prime(2), random_columns(&mut rng, 2, rows, cols))
                    .unwrap();
            Entry {
                name: format!("gf2-{i}"),
                matroid: Matroid::linear(matrix).unwrap(),
                graph: None,
            }
        })
        .collect()
}

/// Base lists read off random ternary and partition matroids.
pub fn explicit(count: usize, seed: u64) -> Vec<Entry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let source = if i % 2 == 0 {
                let rows = rng.gen_range(1..=3);
                let cols = rng.gen_range(2..=6);
                Matroid::linear(
                    LinearMatrix::new(Field::Prime(3), random_columns(&mut rng, 3, rows, cols))
                        .unwrap(),
                )
                .unwrap()
            } else {
                let mut blocks = Vec::new();
                let mut left: usize = rng.gen_range(2..=6);
                while left > 0 {
                    let size = rng.gen_range(1..=left);
                    blocks.push(Block {
                        cap: rng.gen_range(1..=size),
                        size,
                    });
                    left -= size;
                }
                Matroid::partition(&blocks).unwrap()
            };
            let r = source.full_rank();
            let bases: Vec<Subset> = source
                .ground_mask()
                .subsets()
                .filter(|s| s.len() == r && source.is_base(*s))
                .collect();
            Entry {
                name: format!("bases-{i}"),
                matroid: Matroid::from_bases(source.len(), bases).unwrap(),
                graph: None,
            }
        })
        .collect()
}

/// Connected simple graphs with 2..=`max_n` vertices and 1..=`max_edges` edges,
/// one per isomorphism class (canonical form = smallest relabelled edge list).
pub fn connected_graphs(max_n: usize, max_edges: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut seen = BTreeSet::new();
    for n in 2..=max_n {
        let all: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let perms = permutations(n);
        for mask in 1u32..(1 << all.len()) {
            if mask.count_ones() as usize > max_edges {
                continue;
            }
            let edges: Vec<(usize, usize)> = (0..all.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| all[i])
                .collect();
            if !connected(n, &edges) {
                continue;
            }
            let canonical = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize)> = edges
                        .iter()
                        .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                        .collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap();
            seen.insert((n, canonical));
        }
    }
    seen.into_iter().collect()
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reached = vec![false; n];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    reached.iter().all(|&r| r)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}
