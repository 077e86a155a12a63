//! Rank oracle for subsets of hyperplanes (the underlying matroid, plus
//! consistency of affine intersections).

use std::collections::HashMap;
use std::sync::Mutex;

use crate::arrangement_model::{AffineArrangement, CentralArrangement, Hyperplane};
use crate::exact_linear_algebra::Matrix;
use crate::rational::Rational;

#[derive(Debug)]
pub(crate) struct Geometry {
    dim: usize,
    planes: Vec<Hyperplane>,
    affine: bool,
    // subset mask -> (rank of linear parts, rank with constants appended)
    cache: Mutex<HashMap<u64, (usize, usize)>>,
}

impl Clone for Geometry {
    fn clone(&self) -> Self {
        Geometry {
            dim: self.dim,
            planes: self.planes.clone(),
            affine: self.affine,
            cache: Mutex::new(self.cache.lock().expect("rank cache").clone()),
        }
    }
}

fn mask(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

impl Geometry {
    fn new(dim: usize, planes: Vec<Hyperplane>, affine: bool) -> Self {
        assert!(planes.len() <= 64, "at most 64 hyperplanes are supported");
        Geometry {
            dim,
            planes,
            affine,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn central(c: &CentralArrangement) -> Self {
        Self::new(c.ambient_dim(), c.hyperplanes().to_vec(), false)
    }

    pub fn affine(a: &AffineArrangement) -> Self {
        Self::new(a.ambient_dim(), a.hyperplanes().to_vec(), true)
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    fn ranks(&self, set: &[usize]) -> (usize, usize) {
        let key = mask(set);
        if let Some(&r) = self.cache.lock().expect("rank cache").get(&key) {
            return r;
        }
        let linear: Vec<Vec<Rational>> = set.iter().map(|&i| self.planes[i].coeffs.clone()).collect();
        let lin = Matrix::from_rows(self.dim, linear.clone()).expect("coefficient rows").rank();
        let aug = if self.affine {
            let rows = set
                .iter()
                .zip(linear)
                .map(|(&i, mut r)| {
                    r.push(self.planes[i].constant.clone());
                    r
                })
                .collect();
            Matrix::from_rows(self.dim + 1, rows).expect("augmented rows").rank()
        } else {
            lin
        };
        self.cache.lock().expect("rank cache").insert(key, (lin, aug));
        (lin, aug)
    }

    /// Rank of the linear parts, i.e. the codimension of a nonempty intersection.
    pub fn rank(&self, set: &[usize]) -> usize {
        self.ranks(set).0
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let (lin, aug) = self.ranks(set);
        lin == aug && lin == set.len()
    }

    /// Consistent but linearly dependent.
    pub fn is_dependent(&self, set: &[usize]) -> bool {
        let (lin, aug) = self.ranks(set);
        lin == aug && lin < set.len()
    }

    /// Rank of the whole arrangement.
    pub fn total_rank(&self) -> usize {
        let all: Vec<usize> = (0..self.len()).collect();
        self.rank(&all)
    }

    /// All hyperplanes containing the intersection of `set` (central case).
    pub fn closure(&self, set: &[usize]) -> Vec<usize> {
        let r = self.rank(set);
        (0..self.len())
            .filter(|i| {
                if set.contains(i) {
                    return true;
                }
                let mut s = set.to_vec();
                s.push(*i);
                self.rank(&s) == r
            })
            .collect()
    }
}
