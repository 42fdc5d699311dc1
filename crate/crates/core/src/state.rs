//! Graph-state amplitudes and overlaps with product states.
//!
//! `|G> = 2^{-n/2} sum_mu (-1)^{q(mu)} |mu>` where `q(mu)` is the parity of
//! the number of edges induced by the support of `mu`. All sums over `mu`
//! stream through the basis in a fixed order; no `2^n` buffer is allocated
//! except by [`state_vector`].

use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::fmt;

use num_complex::Complex64;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

pub type ComplexAmplitude = Complex64;

/// Largest `n` for which [`state_vector`] will materialize amplitudes.
pub const MAX_DENSE_VERTICES: usize = 16;

fn norm_factor(n: usize) -> f64 {
    libm::exp2(-(n as f64) / 2.0)
}

/// Wraps a phase into `[0, 2pi)`.
pub fn wrap_phase(phi: f64) -> f64 {
    let r = phi % TAU;
    let r = if r < 0.0 { r + TAU } else { r };
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// `<mu|G>`: `(-1)^{q(mu)} 2^{-n/2}`.
pub fn amplitude(g: &Graph, mu: VertexSet) -> f64 {
    let s = norm_factor(g.n());
    if g.induced_edge_parity(mu) == 0 {
        s
    } else {
        -s
    }
}

/// `<mu| prod_a Z_a^{k_a} |G>`.
pub fn basis_amplitude(g: &Graph, k: VertexSet, mu: VertexSet) -> f64 {
    let a = amplitude(g, mu);
    if k.intersection(mu).len().is_multiple_of(2) {
        a
    } else {
        -a
    }
}

/// Checks `K_a |G> = |G>` for `K_a = X_a Z_{N_a}` amplitude by amplitude.
///
/// Always true for a valid graph; this exercises [`amplitude`].
///
/// # Panics
/// If `a >= g.n()`.
pub fn verify_stabilizer(g: &Graph, a: usize) -> bool {
    assert!(a < g.n(), "vertex {a} out of range");
    let flip = VertexSet::singleton(a);
    let nbrs = g.neighbors(a);
    (0..1u32 << g.n()).all(|bits| {
        let mu = VertexSet::from_bits(bits);
        let sign = if mu.intersection(nbrs).len().is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * amplitude(g, mu.symmetric_difference(flip)) == amplitude(g, mu)
    })
}

/// Dense amplitude vector indexed by the basis bitmask.
pub fn state_vector(g: &Graph) -> Result<Vec<f64>, Error> {
    if g.n() > MAX_DENSE_VERTICES {
        return Err(Error::TooLarge {
            what: "dense state vector",
            n: g.n(),
            max: MAX_DENSE_VERTICES,
        });
    }
    Ok((0..1u32 << g.n())
        .map(|bits| amplitude(g, VertexSet::from_bits(bits)))
        .collect())
}

/// Pure product state `prod_a (sqrt(p_a)|0> + sqrt(1-p_a) e^{i phi_a}|1>)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductState {
    p: Vec<f64>,
    phi: Vec<f64>,
}

impl ProductState {
    /// Phases are wrapped into `[0, 2pi)`.
    pub fn new(p: Vec<f64>, phi: Vec<f64>) -> Result<Self, Error> {
        if p.len() != phi.len() {
            return Err(Error::InvalidProductState("p and phi lengths differ"));
        }
        if p.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidProductState("probability outside [0, 1]"));
        }
        if phi.iter().any(|f| !f.is_finite()) {
            return Err(Error::InvalidProductState("non-finite phase"));
        }
        let phi = phi.into_iter().map(wrap_phase).collect();
        Ok(ProductState { p, phi })
    }

    /// The same single-qubit state on every qubit.
    pub fn uniform(n: usize, p: f64, phi: f64) -> Result<Self, Error> {
        ProductState::new(alloc::vec![p; n], alloc::vec![phi; n])
    }

    /// `|0...0>`.
    pub fn zeros(n: usize) -> Self {
        ProductState {
            p: alloc::vec![1.0; n],
            phi: alloc::vec![0.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn p(&self) -> &[f64] {
        &self.p
    }

    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    /// Sets qubit `a`, clipping `p` into `[0, 1]` and wrapping `phi`.
    pub fn set(&mut self, a: usize, p: f64, phi: f64) {
        self.p[a] = p.clamp(0.0, 1.0);
        self.phi[a] = wrap_phase(phi);
    }

    /// `sqrt(p_a)`, the `|0>` component of qubit `a`.
    pub fn x(&self, a: usize) -> Complex64 {
        Complex64::new(libm::sqrt(self.p[a]), 0.0)
    }

    /// `sqrt(1-p_a) e^{i phi_a}`, the `|1>` component of qubit `a`.
    pub fn y(&self, a: usize) -> Complex64 {
        Complex64::from_polar(libm::sqrt(1.0 - self.p[a]), self.phi[a])
    }
}

/// Depth-first sum over basis states, pruning branches with zero weight.
struct Enumeration<'a> {
    adj: &'a [u32],
    zero: &'a [Complex64],
    one: &'a [Complex64],
}

impl Enumeration<'_> {
    fn sum(&self, k: usize, set: u32, parity: u32, weight: Complex64) -> Complex64 {
        if k == self.adj.len() {
            return if parity == 0 { weight } else { -weight };
        }
        let mut acc = Complex64::new(0.0, 0.0);
        let w0 = self.zero[k];
        if w0.re != 0.0 || w0.im != 0.0 {
            acc += self.sum(k + 1, set, parity, weight * w0);
        }
        let w1 = self.one[k];
        if w1.re != 0.0 || w1.im != 0.0 {
            let flipped = parity ^ ((self.adj[k] & set).count_ones() & 1);
            acc += self.sum(k + 1, set | (1 << k), flipped, weight * w1);
        }
        acc
    }

    fn run(&self) -> Complex64 {
        self.sum(0, 0, 0, Complex64::new(1.0, 0.0)) * norm_factor(self.adj.len())
    }
}

fn check_len(g: &Graph, s: &ProductState) -> Result<(), Error> {
    if s.len() != g.n() {
        Err(Error::QubitCountMismatch {
            expected: g.n(),
            got: s.len(),
        })
    } else {
        Ok(())
    }
}

fn weights(s: &ProductState) -> (Vec<Complex64>, Vec<Complex64>) {
    (0..s.len()).map(|a| (s.x(a), s.y(a))).unzip()
}

/// `<G|phi>`, summed exactly over all `2^n` basis states.
pub fn product_overlap(g: &Graph, s: &ProductState) -> Result<Complex64, Error> {
    check_len(g, s)?;
    let (zero, one) = weights(s);
    Ok(Enumeration {
        adj: g.adjacency(),
        zero: &zero,
        one: &one,
    }
    .run())
}

/// Splits the overlap along qubit `a`: returns `(alpha, beta)` with
/// `<G|phi> = alpha * x_a + beta * y_a`. Neither part depends on qubit `a`.
pub fn overlap_partials(
    g: &Graph,
    s: &ProductState,
    a: usize,
) -> Result<(Complex64, Complex64), Error> {
    check_len(g, s)?;
    let (mut zero, mut one) = weights(s);
    let unit = Complex64::new(1.0, 0.0);
    let nil = Complex64::new(0.0, 0.0);
    let mut part = |w0, w1| {
        zero[a] = w0;
        one[a] = w1;
        Enumeration {
            adj: g.adjacency(),
            zero: &zero,
            one: &one,
        }
        .run()
    };
    let alpha = part(unit, nil);
    let beta = part(nil, unit);
    Ok((alpha, beta))
}

/// `F = |<G|phi>|^2`.
pub fn fidelity(g: &Graph, s: &ProductState) -> Result<f64, Error> {
    product_overlap(g, s).map(|z| z.norm_sqr())
}

/// Integer coefficients `c_j = sum_{|mu| = j} (-1)^{q(mu)}` of the
/// symmetric-ansatz overlap polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffVector(Vec<i64>);

impl CoeffVector {
    pub fn new(c: Vec<i64>) -> Self {
        assert!(!c.is_empty(), "coefficient vector needs c_0");
        CoeffVector(c)
    }

    /// Number of qubits, one less than the number of coefficients.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Display for CoeffVector {
    /// Space separated: `1 5 0 0 -5 -1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Computes [`CoeffVector`] by walking the reflected Gray code, updating the
/// induced-edge parity by one vertex per step.
pub fn symmetric_coefficients(g: &Graph) -> CoeffVector {
    let n = g.n();
    let adj = g.adjacency();
    let mut c = alloc::vec![0i64; n + 1];
    let mut set = 0u32;
    let mut parity = 0u32;
    c[0] = 1;
    for step in 1..1u64 << n {
        let v = step.trailing_zeros() as usize;
        parity ^= (adj[v] & set).count_ones() & 1;
        set ^= 1 << v;
        c[set.count_ones() as usize] += if parity == 0 { 1 } else { -1 };
    }
    CoeffVector(c)
}

/// `2^{-n/2} sum_j c_j x^{n-j} y^j` with `x = sqrt(p)`, `y = sqrt(1-p) e^{i phi}`.
///
/// Equals [`product_overlap`] on the uniform state `ProductState::uniform(n, p, phi)`.
/// `p` is clipped into `[0, 1]`.
pub fn symmetric_overlap(c: &CoeffVector, p: f64, phi: f64) -> Complex64 {
    let n = c.n();
    let p = p.clamp(0.0, 1.0);
    let x = libm::sqrt(p);
    let y = Complex64::from_polar(libm::sqrt(1.0 - p), phi);
    // x^{n-j} for j = 0..=n, built from the top down.
    let mut xpow = alloc::vec![1.0; n + 1];
    for j in (0..n).rev() {
        xpow[j] = xpow[j + 1] * x;
    }
    let mut ypow = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, &cj) in c.as_slice().iter().enumerate() {
        if cj != 0 {
            acc += ypow * (cj as f64 * xpow[j]);
        }
        ypow *= y;
    }
    acc * norm_factor(n)
}

/// `|symmetric_overlap|^2`.
pub fn symmetric_fidelity(c: &CoeffVector, p: f64, phi: f64) -> f64 {
    symmetric_overlap(c, p, phi).norm_sqr()
}
