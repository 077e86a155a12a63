//! Projective subalgebra `Ā = ker ∂`, the splitting `A^p = ω_j ∧ Ā^{p-1} ⊕ Ā^p`
//! and the decone isomorphisms `ε_j : Â_j → Ā`.

use std::sync::OnceLock;

use num_traits::Zero;

use super::{OsAlgebra, OsElement};
use crate::arrangement_model::{decone, AffineArrangement, CentralArrangement, CoordinateChange};
use crate::error::{Error, Result};
use crate::exact_linear_algebra::{Matrix, SubspaceBasis};
use crate::rational::Rational;

/// The decone at one pivot together with `ε_pivot` in every degree.
#[derive(Clone, Debug)]
pub struct Chart {
    pub pivot: usize,
    pub affine: AffineArrangement,
    pub change: CoordinateChange,
    pub algebra: OsAlgebra,
    eps: Vec<Matrix>,
}

impl Chart {
    fn new(central: &OsAlgebra, arr: &CentralArrangement, pivot: usize) -> Result<Chart> {
        let (affine, change) = decone(arr, pivot)?;
        let algebra = OsAlgebra::affine(&affine);
        let eps = (0..=algebra.rank())
            .map(|p| {
                let cols: Vec<Vec<Rational>> = algebra
                    .nbc_basis(p)
                    .iter()
                    .map(|m| {
                        let image: Vec<usize> = m.indices().iter().map(|&k| change.index_map[k]).collect();
                        eps_monomial(central, pivot, &image)
                    })
                    .collect();
                Matrix::from_columns(central.dim(p), &cols).expect("eps columns")
            })
            .collect();
        Ok(Chart {
            pivot,
            affine,
            change,
            algebra,
            eps,
        })
    }

    /// Matrix of `ε: Â^p → A^p`; columns follow the NBC basis of the decone.
    pub fn eps(&self, p: usize) -> Matrix {
        match self.eps.get(p) {
            Some(m) => m.clone(),
            None => Matrix::zeros(0, 0),
        }
    }

    /// Central index of each decone hyperplane.
    pub fn index_map(&self) -> &[usize] {
        &self.change.index_map
    }
}

/// `(ω_{m_1} - ω_j) ∧ ⋯ ∧ (ω_{m_p} - ω_j)` in NBC coordinates of `A^p`.
fn eps_monomial(central: &OsAlgebra, pivot: usize, image: &[usize]) -> Vec<Rational> {
    let mut out = central.reduce_sequence(image);
    for t in 0..image.len() {
        let mut seq = image.to_vec();
        seq[t] = pivot;
        for (o, x) in out.iter_mut().zip(central.reduce_sequence(&seq)) {
            if !x.is_zero() {
                *o -= x;
            }
        }
    }
    out
}

/// The two complementary projectors of `A^p = (ω_j ∧ Ā^{p-1}) ⊕ Ā^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub pivot: usize,
    /// `σ∘∂`, projecting onto `ω_j ∧ Ā^{p-1}`.
    pub onto_wedge: Matrix,
    /// `id - σ∘∂`, projecting onto `Ā^p`.
    pub onto_projective: Matrix,
}

/// A central arrangement with its OS algebra and lazily built charts, one per
/// hyperplane. Charts are initialised at most once and then shared.
#[derive(Debug)]
pub struct ProjectiveModel {
    arrangement: CentralArrangement,
    algebra: OsAlgebra,
    charts: Vec<OnceLock<std::result::Result<Chart, Error>>>,
}

impl ProjectiveModel {
    pub fn new(arrangement: &CentralArrangement) -> Self {
        ProjectiveModel {
            algebra: OsAlgebra::central(arrangement),
            charts: (0..arrangement.len()).map(|_| OnceLock::new()).collect(),
            arrangement: arrangement.clone(),
        }
    }

    pub fn arrangement(&self) -> &CentralArrangement {
        &self.arrangement
    }

    pub fn algebra(&self) -> &OsAlgebra {
        &self.algebra
    }

    /// Top degree `ℓ` of the projective algebra: rank minus one.
    pub fn top_degree(&self) -> usize {
        self.algebra.rank() - 1
    }

    pub fn check_index(&self, j: usize) -> Result<()> {
        if j < self.arrangement.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: j,
                len: self.arrangement.len(),
            })
        }
    }

    pub fn chart(&self, pivot: usize) -> Result<&Chart> {
        self.check_index(pivot)?;
        self.charts[pivot]
            .get_or_init(|| Chart::new(&self.algebra, &self.arrangement, pivot))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `Ā^p = ker(∂: A^p → A^{p-1})`, echelonized.
    pub fn projective_subalgebra(&self, p: usize) -> SubspaceBasis {
        self.algebra.boundary(p).kernel_basis()
    }

    /// The chosen basis of `Ā^p`: the `ε_0`-image of the NBC basis of the
    /// pivot-0 decone, as columns in `A^p` coordinates.
    pub fn projective_basis(&self, p: usize) -> Matrix {
        let chart = self.chart(0).expect("central arrangements are nonempty");
        if p <= chart.algebra.rank() {
            chart.eps(p)
        } else {
            Matrix::zeros(self.algebra.dim(p), 0)
        }
    }

    pub fn projective_dim(&self, p: usize) -> usize {
        self.projective_basis(p).cols()
    }

    /// `σ(x) = ω_j ∧ x` from `A^{p-1}` to `A^p`.
    pub fn sigma(&self, p: usize, pivot: usize) -> Result<Matrix> {
        self.check_index(pivot)?;
        assert!(p >= 1, "σ lands in degree at least one");
        Ok(self.algebra.left_multiplication(&self.algebra.generator(pivot), p - 1))
    }

    pub fn direct_sum_split(&self, p: usize, pivot: usize) -> Result<Split> {
        self.check_index(pivot)?;
        let n = self.algebra.dim(p);
        let onto_wedge = if p == 0 {
            Matrix::zeros(n, n)
        } else {
            self.sigma(p, pivot)?.mul(&self.algebra.boundary(p))
        };
        let onto_projective = Matrix::identity(n).sub(&onto_wedge);
        Ok(Split {
            pivot,
            onto_wedge,
            onto_projective,
        })
    }

    /// `ε_j` in degree `p`.
    pub fn eps(&self, pivot: usize, p: usize) -> Result<Matrix> {
        let chart = self.chart(pivot)?;
        Ok(if p <= chart.algebra.rank() {
            chart.eps(p)
        } else {
            Matrix::zeros(self.algebra.dim(p), 0)
        })
    }

    /// `ε_j(ω̂_â)` where `â` are the weights of the decone.
    pub fn eps_of_omega(&self, pivot: usize) -> Result<OsElement> {
        let chart = self.chart(pivot)?;
        let w = chart.algebra.omega_a();
        Ok(OsElement {
            degree: 1,
            coords: self.eps(pivot, 1)?.mul_vec(&w.coords),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement_model::{cone, AffineArrangement};
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn concurrent() -> ProjectiveModel {
        ProjectiveModel::new(&CentralArrangement::from_int_forms(&[&[1, 0], &[0, 1], &[1, -1]], ints(&[1, 1, -2])).unwrap())
    }

    #[test]
    fn projective_dims() {
        let m = concurrent();
        assert_eq!(m.projective_subalgebra(0).dim(), 1);
        assert_eq!(m.projective_subalgebra(1).dim(), 2);
        assert_eq!(m.projective_subalgebra(2).dim(), 0);
        for v in m.projective_subalgebra(1).vectors() {
            assert!(v.iter().sum::<Rational>().is_zero());
        }
        assert_eq!(m.projective_dim(1), 2);
        assert_eq!(m.projective_dim(2), 0);
    }

    #[test]
    fn split_degree_one() {
        let m = concurrent();
        let s = m.direct_sum_split(1, 0).unwrap();
        assert_eq!(s.onto_wedge.column(1), ints(&[1, 0, 0]));
        assert_eq!(s.onto_projective.column(1), ints(&[-1, 1, 0]));
        assert!(matches!(m.direct_sum_split(1, 9), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn eps_of_points() {
        let pts = AffineArrangement::points(&[int(0), int(1), int(4)], ints(&[1, 2, 3])).unwrap();
        let m = ProjectiveModel::new(&cone(&pts));
        assert_eq!(m.eps(0, 0).unwrap(), Matrix::identity(1));
        let e1 = m.eps(0, 1).unwrap();
        for i in 0..3 {
            let mut expected = ints(&[-1, 0, 0, 0]);
            expected[i + 1] = int(1);
            assert_eq!(e1.column(i), expected);
        }
        assert_eq!(m.eps_of_omega(0).unwrap(), m.algebra().omega_a());
        assert!(m.chart(4).is_err());
    }
}
