//! The intersection lattice of a central arrangement, its flags and Möbius function.

use std::collections::{BTreeSet, HashMap};

use crate::arrangement_model::CentralArrangement;
use crate::error::{Error, Result};
use crate::geometry::Geometry;

/// An intersection of hyperplanes, named by the closed set of all hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    codim: usize,
    hyperplanes: Vec<usize>,
}

impl Flat {
    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn hyperplanes(&self) -> &[usize] {
        &self.hyperplanes
    }

    /// `H_i ≤ X`, i.e. the flat lies inside hyperplane `i`.
    pub fn lies_in(&self, i: usize) -> bool {
        self.hyperplanes.binary_search(&i).is_ok()
    }

    pub fn is_le(&self, other: &Flat) -> bool {
        self.hyperplanes.iter().all(|i| other.lies_in(*i))
    }
}

/// A chain `X_0 < X_1 < ⋯ < X_p` with `codim X_i = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagChain {
    flats: Vec<Flat>,
}

impl FlagChain {
    /// Checks strict increase and the codimension condition.
    pub fn new(flats: Vec<Flat>) -> Result<Self> {
        let ok = !flats.is_empty()
            && flats.iter().enumerate().all(|(i, x)| x.codim == i)
            && flats.windows(2).all(|w| w[0].is_le(&w[1]));
        if ok {
            Ok(FlagChain { flats })
        } else {
            Err(Error::PreconditionViolated("not a flag".into()))
        }
    }

    /// The length `p` of the flag (one less than the number of flats).
    pub fn len(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn last(&self) -> &Flat {
        self.flats.last().expect("flags contain the minimum")
    }

    pub fn extended(&self, x: &Flat) -> FlagChain {
        let mut flats = self.flats.clone();
        flats.push(x.clone());
        FlagChain { flats }
    }

    pub fn truncated(&self) -> FlagChain {
        assert!(!self.is_empty(), "cannot truncate the length-0 flag");
        FlagChain {
            flats: self.flats[..self.flats.len() - 1].to_vec(),
        }
    }

    /// The flag with the `i`-th flat replaced.
    pub fn replaced(&self, i: usize, x: &Flat) -> FlagChain {
        let mut flats = self.flats.clone();
        flats[i] = x.clone();
        FlagChain { flats }
    }
}

#[derive(Clone, Debug)]
pub struct Lattice {
    flats: Vec<Flat>,
    index: HashMap<Vec<usize>, usize>,
    covers: Vec<Vec<usize>>,
    rank: usize,
}

/// Intersection lattice ordered by reverse inclusion. Flats are sorted by
/// codimension, then lexicographically by hyperplane set.
pub fn build_lattice(arr: &CentralArrangement) -> Lattice {
    Lattice::from_geometry(&Geometry::central(arr))
}

impl Lattice {
    pub(crate) fn from_geometry(g: &Geometry) -> Self {
        let mut levels: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::from([Vec::new()])];
        loop {
            let next: BTreeSet<Vec<usize>> = levels
                .last()
                .expect("nonempty")
                .iter()
                .flat_map(|x| {
                    (0..g.len()).filter(|i| !x.contains(i)).map(move |i| {
                        let mut s = x.clone();
                        s.push(i);
                        s
                    })
                })
                .map(|s| g.closure(&s))
                .collect();
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        let rank = levels.len() - 1;
        let flats: Vec<Flat> = levels
            .into_iter()
            .enumerate()
            .flat_map(|(codim, level)| level.into_iter().map(move |hyperplanes| Flat { codim, hyperplanes }))
            .collect();
        let index = flats
            .iter()
            .enumerate()
            .map(|(k, x)| (x.hyperplanes.clone(), k))
            .collect();
        let covers = flats
            .iter()
            .map(|x| {
                flats
                    .iter()
                    .enumerate()
                    .filter(|(_, y)| y.codim == x.codim + 1 && x.is_le(y))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        Lattice {
            flats,
            index,
            covers,
            rank,
        }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Maximal codimension, the rank of the arrangement.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn minimum(&self) -> &Flat {
        &self.flats[0]
    }

    pub fn flats_of_codim(&self, p: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |x| x.codim == p)
    }

    pub fn position(&self, x: &Flat) -> Result<usize> {
        self.index
            .get(&x.hyperplanes)
            .copied()
            .filter(|&k| self.flats[k] == *x)
            .ok_or_else(|| Error::FlatNotInLattice(x.hyperplanes.clone()))
    }

    /// Looks up the flat whose closed hyperplane set is `set`.
    pub fn flat(&self, set: &[usize]) -> Result<&Flat> {
        self.index
            .get(set)
            .map(|&k| &self.flats[k])
            .ok_or_else(|| Error::FlatNotInLattice(set.to_vec()))
    }

    /// Flats covering `x` (one codimension higher).
    pub fn covers(&self, x: &Flat) -> Result<impl Iterator<Item = &Flat>> {
        let k = self.position(x)?;
        Ok(self.covers[k].iter().map(move |&j| &self.flats[j]))
    }

    /// Flats `Y` with `lower < Y < upper`, for `codim upper = codim lower + 2`.
    pub fn between<'a>(&'a self, lower: &'a Flat, upper: &'a Flat) -> impl Iterator<Item = &'a Flat> + 'a {
        self.flats
            .iter()
            .filter(move |y| y.codim == lower.codim + 1 && lower.is_le(y) && y.is_le(upper))
    }

    /// All flags of length `p`, lexicographic in their flat sequence.
    pub fn flags_of_length(&self, p: usize) -> Vec<FlagChain> {
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        self.extend_flags(&mut stack, p, None, &mut out);
        out
    }

    fn extend_flags(&self, stack: &mut Vec<usize>, p: usize, end: Option<usize>, out: &mut Vec<FlagChain>) {
        let top = *stack.last().expect("nonempty");
        if stack.len() == p + 1 {
            if end.is_none_or(|e| e == top) {
                out.push(FlagChain {
                    flats: stack.iter().map(|&k| self.flats[k].clone()).collect(),
                });
            }
            return;
        }
        for &next in &self.covers[top] {
            if let Some(e) = end {
                if !self.flats[next].is_le(&self.flats[e]) {
                    continue;
                }
            }
            stack.push(next);
            self.extend_flags(stack, p, end, out);
            stack.pop();
        }
    }

    /// Flags of length `codim X` ending at `X`.
    pub fn flags_terminating_at(&self, x: &Flat) -> Result<Vec<FlagChain>> {
        let e = self.position(x)?;
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        self.extend_flags(&mut stack, x.codim, Some(e), &mut out);
        Ok(out)
    }

    /// `μ(minimum, X)` for every flat, in lattice order.
    pub fn moebius(&self) -> Vec<(Flat, i64)> {
        let mut mu: Vec<i64> = Vec::with_capacity(self.flats.len());
        for (k, x) in self.flats.iter().enumerate() {
            if k == 0 {
                mu.push(1);
                continue;
            }
            let s: i64 = self.flats[..k]
                .iter()
                .zip(&mu)
                .filter(|(y, _)| y.codim < x.codim && y.is_le(x))
                .map(|(_, m)| m)
                .sum();
            mu.push(-s);
        }
        self.flats.iter().cloned().zip(mu).collect()
    }

    /// `Σ_{codim X = p} |μ(X)|` for `p = 0..=rank`.
    pub fn whitney_numbers(&self) -> Vec<u64> {
        let mut w = vec![0u64; self.rank + 1];
        for (x, m) in self.moebius() {
            w[x.codim] += m.unsigned_abs();
        }
        w
    }
}
