//! Simple undirected graphs stored as adjacency bitmasks.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;
use crate::gf2::Gf2Matrix;

/// Largest supported vertex count. Keeps `2^n` enumerations and 64-bit
/// coefficient sums exact.
pub const MAX_VERTICES: usize = 26;

/// A set of vertices stored as a bitmask (bit `a` is vertex `a`, 0-based).
///
/// Used for computational-basis labels, independent sets and bipartition sides.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub const fn symmetric_difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ other.0)
    }

    /// Complement relative to the vertex range `0..n`.
    pub const fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    /// True when no bit at position `>= n` is set.
    pub const fn fits(self, n: usize) -> bool {
        self.0 & !VertexSet::full(n).0 == 0
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Compares the increasing vertex lists lexicographically, so `{0,2,5}`
    /// precedes `{1,3,5}` and `{0,2}` precedes `{0,2,5}`.
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Display for VertexSet {
    /// 1-based, comma separated: `{1,3,6}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

#[derive(Clone, Debug)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on `n <= MAX_VERTICES` vertices.
///
/// Row `a` of `adj` is the neighbourhood of `a`. Rows are kept symmetric
/// with a zero diagonal and no bits beyond `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Result<Self, Error> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: alloc::vec![0; n],
        })
    }

    /// Builds a graph from 0-based edges. Duplicates and self-loops are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::edgeless(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from symmetric adjacency rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<u32>) -> Result<Self, Error> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mask = VertexSet::full(n).bits();
        for (a, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    n,
                });
            }
            if row & (1 << a) != 0 {
                return Err(Error::SelfLoop(a));
            }
            for b in VertexSet::from_bits(row).iter() {
                if adj[b] & (1 << a) == 0 {
                    return Err(Error::InvalidAdjacency { a, b });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), Error> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if self.has_edge(a, b) {
            return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    /// Returns a copy with edge `(a, b)` flipped. This is the action of a
    /// controlled-Z gate between `a` and `b` on the graph state.
    pub fn toggle_edge(&self, a: usize, b: usize) -> Result<Graph, Error> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let mut g = self.clone();
        g.adj[a] ^= 1 << b;
        g.adj[b] ^= 1 << a;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, a: usize) -> VertexSet {
        VertexSet(self.adj[a])
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] & (1 << b) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            VertexSet(self.adj[a] & !VertexSet::full(a + 1).0)
                .iter()
                .map(move |b| (a, b))
        })
    }

    /// Number of edges with both endpoints in `s`.
    pub fn induced_edge_count(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|a| (self.adj[a] & s.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `(1/2) mu Γ mu^T mod 2`, the sign exponent of the amplitude on `|mu>`.
    pub fn induced_edge_parity(&self, s: VertexSet) -> u32 {
        let mut parity = 0;
        for a in s.iter() {
            // Count each induced edge once, from its larger endpoint.
            parity ^= (self.adj[a] & s.0 & ((1u32 << a) - 1)).count_ones() & 1;
        }
        parity
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|a| self.adj[a] & s.0 == 0)
    }

    /// The off-diagonal block `Γ_AB` between `side` (rows) and its complement
    /// (columns), both in increasing vertex order.
    pub fn cross_block(&self, side: VertexSet) -> Result<Gf2Matrix, Error> {
        let other = side.complement(self.n);
        if !side.fits(self.n) || side.is_empty() || other.is_empty() {
            return Err(Error::TrivialBipartition);
        }
        let cols: Vec<usize> = other.iter().collect();
        let rows = side
            .iter()
            .map(|a| {
                cols.iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.has_edge(a, b))
                    .fold(0u64, |acc, (j, _)| acc | (1 << j))
            })
            .collect();
        Ok(Gf2Matrix::from_rows(rows, cols.len()))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, Error> {
        if perm.len() != self.n {
            return Err(Error::VertexCount(perm.len()));
        }
        let mut g = Graph::edgeless(self.n)?;
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b])?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;

    fn brute_parity(g: &Graph, s: VertexSet) -> u32 {
        let vs: Vec<usize> = s.iter().collect();
        let mut count = 0;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if g.has_edge(vs[i], vs[j]) {
                    count += 1;
                }
            }
        }
        count & 1
    }

    #[test]
    fn parity_examples() {
        let ring = named_graph("ring:5").unwrap();
        assert_eq!(ring.induced_edge_parity(VertexSet::from_vertices([0, 1, 2])), 0);
        assert_eq!(ring.induced_edge_parity(VertexSet::EMPTY), 0);
        let p = named_graph("petersen").unwrap();
        assert_eq!(p.induced_edge_parity(p.vertices()), 1);
    }

    #[test]
    fn parity_matches_pair_count() {
        for name in ["ring:5", "ring:8", "code613", "star:7", "edgeless:4"] {
            let g = named_graph(name).unwrap();
            for bits in 0..1u32 << g.n() {
                let s = VertexSet::from_bits(bits);
                assert_eq!(g.induced_edge_parity(s), brute_parity(&g, s), "{name} {s}");
                assert_eq!(g.induced_edge_count(s) as u32 & 1, brute_parity(&g, s));
            }
        }
    }

    #[test]
    fn toggling_code613_leaves_three_cross_edges() {
        let g = named_graph("code613").unwrap();
        let h = g
            .toggle_edge(0, 4)
            .and_then(|g| g.toggle_edge(3, 4))
            .and_then(|g| g.toggle_edge(1, 2))
            .unwrap();
        let edges: Vec<_> = h.edges().collect();
        assert_eq!(edges, [(0, 1), (2, 3), (4, 5)]);
    }

    #[test]
    fn toggle_is_involution() {
        let k2 = named_graph("star:2").unwrap();
        let e = k2.toggle_edge(0, 1).unwrap();
        assert_eq!(e, Graph::edgeless(2).unwrap());
        assert_eq!(e.toggle_edge(0, 1).unwrap().toggle_edge(0, 1).unwrap(), e);
        assert_eq!(k2.toggle_edge(1, 1), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn cross_blocks() {
        let code = named_graph("code613").unwrap();
        let m = code.cross_block(VertexSet::from_vertices([0, 3, 4])).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (3, 3));
        assert_eq!(m.rank(), 3);
        assert!(m.rows().iter().all(|r| r.count_ones() == 1));

        let ring4 = named_graph("ring:4").unwrap();
        let m = ring4.cross_block(VertexSet::from_vertices([0, 2])).unwrap();
        assert_eq!(m.rows(), &[0b11, 0b11]);

        let k2 = named_graph("star:2").unwrap();
        let m = k2.cross_block(VertexSet::singleton(0)).unwrap();
        assert_eq!(m.rows(), &[1]);

        assert_eq!(k2.cross_block(VertexSet::EMPTY), Err(Error::TrivialBipartition));
        assert_eq!(k2.cross_block(k2.vertices()), Err(Error::TrivialBipartition));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::edgeless(0), Err(Error::VertexCount(0)));
        assert_eq!(Graph::edgeless(27), Err(Error::VertexCount(27)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_adjacency(alloc::vec![0b10, 0]), Err(Error::InvalidAdjacency { a: 0, b: 1 }));
    }

    #[test]
    fn lex_order_on_sets() {
        let a = VertexSet::from_vertices([0, 2, 5]);
        let b = VertexSet::from_vertices([1, 3, 5]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(VertexSet::from_vertices([0, 2]).lex_cmp(a), Ordering::Less);
        assert_eq!(alloc::format!("{a}"), "{1,3,6}");
    }
}
