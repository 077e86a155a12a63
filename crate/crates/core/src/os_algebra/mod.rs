//! The Orlik–Solomon algebra `A = E/I` in no-broken-circuit coordinates.
//!
//! Every increasing tuple up to the rank is reduced once at construction by
//! rewriting its lexicographically least broken circuit through the relation
//! `∂e_C = 0`; afterwards the algebra is immutable.

mod projective;

pub use projective::{Chart, ProjectiveModel, Split};

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arrangement_model::{AffineArrangement, CentralArrangement};
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::exact_linear_algebra::Matrix;
use crate::rational::Rational;

/// An exterior monomial `e_J` with `J` strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn new(indices: Vec<usize>) -> Option<Self> {
        indices.windows(2).all(|w| w[0] < w[1]).then_some(Monomial(indices))
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

/// Sorts an index sequence, returning the sign of the sorting permutation,
/// or `None` when an index repeats (the wedge product vanishes).
pub fn sort_with_sign(seq: &[usize]) -> Option<(i32, Vec<usize>)> {
    let mut v = seq.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((sign, v))
    }
}

pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn sign_rational(s: i32) -> Rational {
    Rational::from_integer(s.into())
}

/// Homogeneous element of `A^p` in NBC coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsElement {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct OsAlgebra {
    geometry: Geometry,
    weights: Vec<Rational>,
    rank: usize,
    circuits: Vec<Vec<usize>>,
    // (broken circuit, its circuit), sorted by broken circuit
    broken: Vec<(Vec<usize>, Vec<usize>)>,
    nbc: Vec<Vec<Monomial>>,
    position: Vec<HashMap<Vec<usize>, usize>>,
    reductions: Vec<HashMap<Vec<usize>, Vec<Rational>>>,
}

impl OsAlgebra {
    pub fn central(c: &CentralArrangement) -> Self {
        Self::build(Geometry::central(c), c.weights().to_vec())
    }

    pub fn affine(a: &AffineArrangement) -> Self {
        Self::build(Geometry::affine(a), a.weights().to_vec())
    }

    fn build(geometry: Geometry, weights: Vec<Rational>) -> Self {
        let n = geometry.len();
        let rank = geometry.total_rank();
        let mut circuits = Vec::new();
        for k in 2..=(rank + 1).min(n) {
            for s in subsets(n, k) {
                if geometry.is_dependent(&s)
                    && (0..k).all(|drop| {
                        let mut t = s.clone();
                        t.remove(drop);
                        geometry.is_independent(&t)
                    })
                {
                    circuits.push(s);
                }
            }
        }
        circuits.sort();
        let mut broken: Vec<(Vec<usize>, Vec<usize>)> =
            circuits.iter().map(|c| (c[1..].to_vec(), c.clone())).collect();
        broken.sort();
        broken.dedup_by(|a, b| a.0 == b.0);

        let mut nbc = Vec::with_capacity(rank + 1);
        for p in 0..=rank {
            let basis: Vec<Monomial> = subsets(n, p)
                .into_iter()
                .filter(|s| geometry.is_independent(s))
                .filter(|s| !broken.iter().any(|(b, _)| contains_all(s, b)))
                .map(Monomial)
                .collect();
            nbc.push(basis);
        }
        let position = nbc
            .iter()
            .map(|b| b.iter().enumerate().map(|(k, m)| (m.0.clone(), k)).collect())
            .collect();

        let mut alg = OsAlgebra {
            geometry,
            weights,
            rank,
            circuits,
            broken,
            nbc,
            position,
            reductions: vec![HashMap::new(); rank + 1],
        };
        for p in 0..=rank {
            for s in subsets(n, p) {
                alg.reduce_memo(&s);
            }
        }
        alg
    }

    fn reduce_memo(&mut self, j: &[usize]) -> Vec<Rational> {
        let p = j.len();
        if let Some(v) = self.reductions[p].get(j) {
            return v.clone();
        }
        let dim = self.nbc[p].len();
        let mut out = vec![Rational::zero(); dim];
        if !self.geometry.is_independent(j) {
            // dependent or empty intersection: e_J lies in the ideal
        } else if let Some(&k) = self.position[p].get(j) {
            out[k] = Rational::one();
        } else {
            let (b, c) = self
                .broken
                .iter()
                .find(|(b, _)| contains_all(j, b))
                .cloned()
                .expect("an independent non-NBC tuple contains a broken circuit");
            let rest: Vec<usize> = j.iter().copied().filter(|x| !b.contains(x)).collect();
            let mut br = b.clone();
            br.extend(&rest);
            let (s, _) = sort_with_sign(&br).expect("distinct indices");
            // e_B = Σ_{k≥1} (-1)^{k+1} e_{C∖c_k}, 0-based k, from ∂e_C = 0
            for k in 1..c.len() {
                let mut t: Vec<usize> = c.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
                t.extend(&rest);
                let Some((s2, sorted)) = sort_with_sign(&t) else {
                    continue;
                };
                let parity = if k % 2 == 1 { 1 } else { -1 };
                let sign = s * s2 * parity;
                let sub = self.reduce_memo(&sorted);
                let f = sign_rational(sign);
                for (o, x) in out.iter_mut().zip(&sub) {
                    if !x.is_zero() {
                        *o += &f * x;
                    }
                }
            }
        }
        self.reductions[p].insert(j.to_vec(), out.clone());
        out
    }

    pub fn len(&self) -> usize {
        self.geometry.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ambient_dim(&self) -> usize {
        self.geometry.dim()
    }

    pub fn is_affine(&self) -> bool {
        self.geometry.is_affine()
    }

    /// Top nonvanishing degree.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn circuits(&self) -> &[Vec<usize>] {
        &self.circuits
    }

    pub fn is_dependent(&self, j: &Monomial) -> bool {
        self.geometry.is_dependent(&j.0)
    }

    pub fn dim(&self, p: usize) -> usize {
        self.nbc.get(p).map_or(0, Vec::len)
    }

    pub fn nbc_basis(&self, p: usize) -> &[Monomial] {
        self.nbc.get(p).map_or(&[], Vec::as_slice)
    }

    /// NBC coordinates of `e_J` for any index sequence (unsorted or repeated allowed).
    pub fn reduce_sequence(&self, seq: &[usize]) -> Vec<Rational> {
        let p = seq.len();
        let dim = self.dim(p);
        match sort_with_sign(seq) {
            Some((s, sorted)) if p <= self.rank => {
                let v = &self.reductions[p][&sorted];
                if s == 1 {
                    v.clone()
                } else {
                    v.iter().map(|x| -x).collect()
                }
            }
            _ => vec![Rational::zero(); dim],
        }
    }

    pub fn reduce(&self, j: &Monomial) -> OsElement {
        OsElement {
            degree: j.degree(),
            coords: self.reduce_sequence(&j.0),
        }
    }

    pub fn basis_element(&self, p: usize, k: usize) -> OsElement {
        let mut coords = vec![Rational::zero(); self.dim(p)];
        coords[k] = Rational::one();
        OsElement { degree: p, coords }
    }

    pub fn one(&self) -> OsElement {
        self.basis_element(0, 0)
    }

    /// `∂e_J = Σ (-1)^{i-1} e_{J∖j_i}` expanded in NBC coordinates of degree `|J|-1`.
    pub fn boundary_of_sequence(&self, seq: &[usize]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim(seq.len().saturating_sub(1))];
        if seq.is_empty() {
            return out;
        }
        for i in 0..seq.len() {
            let mut t = seq.to_vec();
            t.remove(i);
            let r = self.reduce_sequence(&t);
            for (o, x) in out.iter_mut().zip(r) {
                if i % 2 == 0 {
                    *o += x;
                } else {
                    *o -= x;
                }
            }
        }
        out
    }

    /// Matrix of `∂: A^p → A^{p-1}` (columns indexed by the NBC basis of `A^p`).
    /// `∂` vanishes on `A^0`, so the degree-0 block is `0 × 1`.
    pub fn boundary(&self, p: usize) -> Matrix {
        let target = if p == 0 { 0 } else { self.dim(p - 1) };
        let cols: Vec<Vec<Rational>> = if p == 0 {
            vec![Vec::new(); self.dim(0)]
        } else {
            self.nbc_basis(p).iter().map(|m| self.boundary_of_sequence(&m.0)).collect()
        };
        Matrix::from_columns(target, &cols).expect("boundary columns")
    }

    pub fn wedge(&self, x: &OsElement, y: &OsElement) -> Result<OsElement> {
        let degree = x.degree + y.degree;
        if degree > self.ambient_dim() {
            return Err(Error::DegreeOverflow {
                left: x.degree,
                right: y.degree,
                ambient: self.ambient_dim(),
            });
        }
        let mut coords = vec![Rational::zero(); self.dim(degree)];
        if degree > self.rank {
            return Ok(OsElement { degree, coords });
        }
        for (a, ma) in x.coords.iter().zip(self.nbc_basis(x.degree)) {
            if a.is_zero() {
                continue;
            }
            for (b, mb) in y.coords.iter().zip(self.nbc_basis(y.degree)) {
                if b.is_zero() {
                    continue;
                }
                let mut seq = ma.0.clone();
                seq.extend(&mb.0);
                let r = self.reduce_sequence(&seq);
                let ab = a * b;
                for (o, v) in coords.iter_mut().zip(r) {
                    if !v.is_zero() {
                        *o += &ab * v;
                    }
                }
            }
        }
        Ok(OsElement { degree, coords })
    }

    /// Matrix of `y ↦ x ∧ y` from `A^q` to `A^{deg x + q}`.
    pub fn left_multiplication(&self, x: &OsElement, q: usize) -> Matrix {
        let target = x.degree + q;
        let cols: Vec<Vec<Rational>> = (0..self.dim(q))
            .map(|k| {
                let y = self.basis_element(q, k);
                match self.wedge(x, &y) {
                    Ok(z) => z.coords,
                    Err(_) => Vec::new(),
                }
            })
            .collect();
        Matrix::from_columns(self.dim(target), &cols).expect("product columns")
    }

    /// `ω_i` as an element of `A^1`.
    pub fn generator(&self, i: usize) -> OsElement {
        OsElement {
            degree: 1,
            coords: self.reduce_sequence(&[i]),
        }
    }

    /// `ω_a = Σ a_i ω_i`.
    pub fn omega_a(&self) -> OsElement {
        let mut coords = vec![Rational::zero(); self.dim(1)];
        for (i, a) in self.weights.iter().enumerate() {
            for (o, x) in coords.iter_mut().zip(self.reduce_sequence(&[i])) {
                *o += a * x;
            }
        }
        OsElement { degree: 1, coords }
    }

    /// Matrix of `δ_a = ω_a ∧ -` from `A^p` to `A^{p+1}`.
    pub fn delta_a(&self, p: usize) -> Matrix {
        self.left_multiplication(&self.omega_a(), p)
    }

    /// Matrix whose rows are `reduce(e_J)` for all increasing `p`-tuples `J`,
    /// with the tuples in lexicographic order.
    pub fn all_reductions(&self, p: usize) -> (Vec<Vec<usize>>, Matrix) {
        let tuples = subsets(self.len(), p);
        let rows = tuples.iter().map(|t| self.reduce_sequence(t)).collect();
        (tuples, Matrix::from_rows(self.dim(p), rows).expect("reduction rows"))
    }
}

fn contains_all(set: &[usize], sub: &[usize]) -> bool {
    sub.iter().all(|x| set.binary_search(x).is_ok())
}
