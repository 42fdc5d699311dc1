//! Integer entanglement bounds.
//!
//! Upper: if `A` is independent, pinning every qubit outside `A` to `|0>` and
//! putting each qubit of `A` in `|+>` gives fidelity `2^{-(n-|A|)}`, so
//! `E <= n - |A|`. The best choice of `A` is a maximum independent set.
//!
//! Lower: the entanglement across any cut is a lower bound. For graph states
//! it is the GF(2) rank of the cut's off-diagonal adjacency block, which is
//! the number of Bell pairs left after removing every local edge with
//! controlled-Z gates on each side.

use core::cmp::Ordering;

use nalgebra::DMatrix;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::state::{state_vector, ProductState};

/// Largest `n` for exhaustive bipartition search (`2^{n-1} - 1` cuts).
pub const MAX_EXHAUSTIVE_CUT_VERTICES: usize = 20;

/// Largest `n` for the dense Schmidt-rank oracle.
pub const MAX_ORACLE_VERTICES: usize = 12;

/// Singular values at or below this count as zero in the Schmidt oracle.
pub const SINGULAR_VALUE_THRESHOLD: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MisResult {
    pub size: usize,
    pub witness: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartitionResult {
    pub side: VertexSet,
    pub ebits: usize,
}

/// Branch and bound over candidate bitmasks.
struct MisSearch<'a> {
    adj: &'a [u32],
    best: usize,
}

impl MisSearch<'_> {
    fn run(&mut self, cand: u32, taken: usize) {
        if taken + cand.count_ones() as usize <= self.best {
            return;
        }
        // Highest degree inside the candidate subgraph, lowest index on ties.
        let mut pivot = None;
        let mut pivot_degree = 0;
        for v in VertexSet::from_bits(cand).iter() {
            let d = (self.adj[v] & cand).count_ones();
            if d > pivot_degree {
                pivot_degree = d;
                pivot = Some(v);
            }
        }
        let Some(v) = pivot else {
            // No edges left: every remaining candidate can be taken.
            self.best = taken + cand.count_ones() as usize;
            return;
        };
        let bit = 1u32 << v;
        self.run(cand & !bit & !self.adj[v], taken + 1);
        self.run(cand & !bit, taken);
    }
}

/// Size of a maximum independent set inside `cand`, or `floor` if none
/// exceeds it.
fn mis_size_within(adj: &[u32], cand: u32, floor: usize) -> usize {
    let mut search = MisSearch { adj, best: floor };
    search.run(cand, 0);
    search.best
}

/// Exact maximum independent set. The witness is the lexicographically
/// smallest maximum set (by increasing vertex list).
pub fn max_independent_set(g: &Graph) -> MisResult {
    let adj = g.adjacency();
    let all = g.vertices().bits();
    let size = mis_size_within(adj, all, 0);

    // Take each vertex in order when the rest can still be completed to `size`.
    let mut witness = 0u32;
    let mut allowed = all;
    for v in 0..g.n() {
        let bit = 1u32 << v;
        if allowed & bit == 0 {
            continue;
        }
        let need = size - witness.count_ones() as usize - 1;
        let later = allowed & !adj[v] & !VertexSet::full(v + 1).bits();
        if need == 0 || mis_size_within(adj, later, need - 1) >= need {
            witness |= bit;
            allowed = later;
            if witness.count_ones() as usize == size {
                break;
            }
        }
    }
    MisResult {
        size,
        witness: VertexSet::from_bits(witness),
    }
}

/// `n - |A|` for a maximum independent set `A`.
pub fn independent_set_upper_bound(g: &Graph) -> usize {
    g.n() - max_independent_set(g).size
}

/// Product state with `|+>` on `a_set` and `|0>` elsewhere. Its fidelity with
/// `|G>` is `2^{-(n-|a_set|)}`: only basis states supported inside `a_set`
/// survive, and those carry no sign because `a_set` induces no edges.
pub fn witness_product_state(g: &Graph, a_set: VertexSet) -> Result<ProductState, Error> {
    if !a_set.fits(g.n()) || !g.is_independent(a_set) {
        return Err(Error::NotIndependent);
    }
    let p = (0..g.n())
        .map(|a| if a_set.contains(a) { 0.5 } else { 1.0 })
        .collect();
    ProductState::new(p, alloc::vec![0.0; g.n()])
}

/// Ebits across the cut `(side, complement)`: the GF(2) rank of `Γ_AB`.
pub fn bipartite_entanglement(g: &Graph, side: VertexSet) -> Result<BipartitionResult, Error> {
    let ebits = g.cross_block(side)?.rank();
    Ok(BipartitionResult { side, ebits })
}

fn better(candidate: &BipartitionResult, best: &Option<BipartitionResult>) -> bool {
    match best {
        None => true,
        Some(b) => match candidate.ebits.cmp(&b.ebits) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => candidate.side.lex_cmp(b.side) == Ordering::Less,
        },
    }
}

/// Maximum ebits over the given cuts; ties go to the lexicographically
/// smallest side. Trivial cuts are skipped. Returns `None` when every
/// candidate is trivial.
pub fn best_bipartite_lower_bound_over<I>(g: &Graph, sides: I) -> Option<BipartitionResult>
where
    I: IntoIterator<Item = VertexSet>,
{
    let mut best = None;
    for side in sides {
        if let Ok(r) = bipartite_entanglement(g, side) {
            if better(&r, &best) {
                best = Some(r);
            }
        }
    }
    best
}

/// Maximum ebits over every cut, with vertex 1 fixed on `side`.
///
/// A single-vertex graph has no proper cut; it yields `ebits = 0` with
/// `side = {1}`.
pub fn best_bipartite_lower_bound(g: &Graph) -> Result<BipartitionResult, Error> {
    let n = g.n();
    if n > MAX_EXHAUSTIVE_CUT_VERTICES {
        return Err(Error::TooLarge {
            what: "exhaustive bipartition search",
            n,
            max: MAX_EXHAUSTIVE_CUT_VERTICES,
        });
    }
    if n == 1 {
        return Ok(BipartitionResult {
            side: VertexSet::singleton(0),
            ebits: 0,
        });
    }
    let rest = (1u32 << (n - 1)) - 1;
    let sides = (0..rest).map(|m| VertexSet::from_bits(1 | (m << 1)));
    Ok(best_bipartite_lower_bound_over(g, sides).expect("n >= 2 has a proper cut"))
}

/// Gathers the bits of `bits` selected by `mask` into the low bits.
fn extract_bits(bits: u32, mask: u32) -> usize {
    VertexSet::from_bits(mask)
        .iter()
        .enumerate()
        .fold(0, |acc, (j, v)| acc | (((bits >> v) & 1) as usize) << j)
}

/// `log2` of the Schmidt rank of `|G>` across `(side, complement)`, from the
/// singular values of the reshaped dense amplitude vector.
///
/// Independent of the GF(2) route; used to cross-check [`bipartite_entanglement`].
pub fn schmidt_rank_oracle(g: &Graph, side: VertexSet) -> Result<usize, Error> {
    let n = g.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge {
            what: "Schmidt-rank oracle",
            n,
            max: MAX_ORACLE_VERTICES,
        });
    }
    let other = side.complement(n);
    if !side.fits(n) || side.is_empty() || other.is_empty() {
        return Err(Error::TrivialBipartition);
    }
    let amps = state_vector(g)?;
    let mut m = DMatrix::<f64>::zeros(1 << side.len(), 1 << other.len());
    for (bits, amp) in amps.into_iter().enumerate() {
        let bits = bits as u32;
        m[(extract_bits(bits, side.bits()), extract_bits(bits, other.bits()))] = amp;
    }
    let rank = m
        .singular_values()
        .iter()
        .filter(|&&s| s > SINGULAR_VALUE_THRESHOLD)
        .count();
    if !rank.is_power_of_two() {
        return Err(Error::NonDyadicSchmidtRank(rank));
    }
    Ok(rank.trailing_zeros() as usize)
}
