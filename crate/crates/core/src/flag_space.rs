//! Flag space `𝓕 ≅ A*` in dual NBC coordinates, the flag differential and the
//! projective quotient `𝓕̄ = 𝓕 / im d ≅ Ā*`.
//!
//! A flag enters only through its values on the NBC basis (`flag_to_dual`);
//! the middle-insertion relations are then satisfied automatically.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{build_lattice, FlagChain, Flat, Lattice};
use crate::exact_linear_algebra::{Matrix, SubspaceBasis};
use crate::os_algebra::{OsElement, ProjectiveModel};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

/// Element of `𝓕̄^p`, in coordinates dual to the chosen basis of `Ā^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveFlagVector {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

/// `⟨F, e_J⟩` for an ordered tuple `J`: the sign of the unique permutation of
/// `J` whose prefix intersections build `F`, or zero if there is none.
pub fn flag_pairing(flag: &FlagChain, j: &[usize]) -> Result<Rational> {
    let p = flag.len();
    if j.len() != p {
        return Err(Error::DegreeMismatch {
            flag: p,
            monomial: j.len(),
        });
    }
    // level of each index: first position i ≥ 1 with H_index ≤ X_i
    let mut slot = vec![usize::MAX; p];
    for (pos, &h) in j.iter().enumerate() {
        let Some(level) = (1..=p).find(|&i| flag.flats()[i].lies_in(h)) else {
            return Ok(Rational::zero());
        };
        if slot[level - 1] != usize::MAX {
            return Ok(Rational::zero());
        }
        slot[level - 1] = pos;
    }
    // slot is the permutation π with j_{π(i)} at level i
    let mut sign = 1i32;
    let mut seen = vec![false; p];
    for start in 0..p {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = slot[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    Ok(Rational::from_integer(sign.into()))
}

/// The flag complex of a central arrangement, tied to its projective model.
pub struct FlagComplex<'m> {
    model: &'m ProjectiveModel,
    lattice: Lattice,
}

impl<'m> FlagComplex<'m> {
    pub fn new(model: &'m ProjectiveModel) -> Self {
        FlagComplex {
            lattice: build_lattice(model.arrangement()),
            model,
        }
    }

    pub fn model(&self) -> &'m ProjectiveModel {
        self.model
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn dim(&self, p: usize) -> usize {
        self.model.algebra().dim(p)
    }

    /// `(⟨F, e_C⟩)_C` over the NBC basis `C` of `A^p`.
    pub fn flag_to_dual(&self, flag: &FlagChain) -> FlagVector {
        let p = flag.len();
        let coords = self
            .model
            .algebra()
            .nbc_basis(p)
            .iter()
            .map(|m| flag_pairing(flag, m.indices()).expect("degrees agree"))
            .collect();
        FlagVector { degree: p, coords }
    }

    /// Embeds a formal combination of flags of equal length.
    pub fn combination_to_dual(&self, p: usize, terms: &[(Rational, FlagChain)]) -> FlagVector {
        let mut coords = vec![Rational::zero(); self.dim(p)];
        for (c, f) in terms {
            assert_eq!(f.len(), p, "flag of wrong length in combination");
            for (o, x) in coords.iter_mut().zip(self.flag_to_dual(f).coords) {
                *o += c * x;
            }
        }
        FlagVector { degree: p, coords }
    }

    /// Columns are `flag_to_dual` of every flag of length `p`, in lattice order.
    pub fn flag_matrix(&self, p: usize) -> (Vec<FlagChain>, Matrix) {
        let flags = self.lattice.flags_of_length(p);
        let cols: Vec<Vec<Rational>> = flags.iter().map(|f| self.flag_to_dual(f).coords).collect();
        (flags, Matrix::from_columns(self.dim(p), &cols).expect("flag columns"))
    }

    /// Matrix of `d: 𝓕^p → 𝓕^{p+1}`, the transpose of `∂: A^{p+1} → A^p`.
    pub fn differential(&self, p: usize) -> Matrix {
        self.model.algebra().boundary(p + 1).transpose()
    }

    /// `d(X_0<⋯<X_p) = (-1)^p Σ (X_0<⋯<X_p<X)` over the flats `X` covering `X_p`.
    ///
    /// With the pairing convention of [`flag_pairing`] the sign `(-1)^p` is
    /// what makes `d` the adjoint of `∂`.
    pub fn d_enumerative(&self, flag: &FlagChain) -> FlagVector {
        let p = flag.len();
        let sign = if p.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        let terms: Vec<(Rational, FlagChain)> = self
            .lattice
            .covers(flag.last())
            .expect("flag flats come from the lattice")
            .map(|x| (sign.clone(), flag.extended(x)))
            .collect();
        self.combination_to_dual(p + 1, &terms)
    }

    /// For every chain with one codimension gap, the flags obtained by filling
    /// the gap. Each group sums to zero in `𝓕`.
    pub fn middle_insertion_sums(&self, p: usize) -> Vec<Vec<FlagChain>> {
        let mut gapped: BTreeSet<(Vec<Flat>, usize)> = BTreeSet::new();
        for f in self.lattice.flags_of_length(p) {
            for i in 1..p {
                let mut flats = f.flats().to_vec();
                flats.remove(i);
                gapped.insert((flats, i));
            }
        }
        gapped
            .into_iter()
            .map(|(flats, i)| {
                let lower = &flats[i - 1];
                let upper = &flats[i];
                self.lattice
                    .between(lower, upper)
                    .map(|y| {
                        let mut full = flats.clone();
                        full.insert(i, y.clone());
                        FlagChain::new(full).expect("filled chain is a flag")
                    })
                    .collect()
            })
            .collect()
    }

    /// `π: 𝓕^p → 𝓕̄^p`, restriction of functionals to `Ā^p`; equal to `Bᵀ`
    /// for the chosen basis `B` of `Ā^p`.
    pub fn projection(&self, p: usize) -> Matrix {
        self.model.projective_basis(p).transpose()
    }

    /// A right inverse of `π` landing in `Ann(ω_j ∧ Ā^{p-1})`, the adjoint of
    /// the projector onto `Ā^p` of the pivot-`j` splitting.
    pub fn section(&self, p: usize, pivot: usize) -> Result<Matrix> {
        let b = self.model.projective_basis(p);
        let k = b.cols();
        let n = b.rows();
        if k == 0 {
            return Ok(Matrix::zeros(n, 0));
        }
        // C with C·B = I from Bᵀ·X = I, C = Xᵀ
        let x = b.transpose().solve(&Matrix::identity(k)).expect("basis has full column rank");
        let split = self.model.direct_sum_split(p, pivot)?;
        Ok(split.onto_projective.transpose().mul(&x))
    }

    /// `(π, section)` for the default pivot 0.
    pub fn projective_quotient(&self, p: usize) -> (Matrix, Matrix) {
        (
            self.projection(p),
            self.section(p, 0).expect("pivot 0 exists"),
        )
    }

    pub fn project(&self, f: &FlagVector) -> ProjectiveFlagVector {
        ProjectiveFlagVector {
            degree: f.degree,
            coords: self.projection(f.degree).mul_vec(&f.coords),
        }
    }

    /// Echelonized span of the flags ending at `x`.
    pub fn vertex_component_basis(&self, x: &Flat) -> Result<SubspaceBasis> {
        let flags = self.lattice.flags_terminating_at(x)?;
        Ok(SubspaceBasis::span(
            self.dim(x.codim()),
            flags.iter().map(|f| self.flag_to_dual(f).coords),
        ))
    }

    /// `Ann(x ∧ A^{p - deg x})` inside `𝓕^p`.
    pub fn annihilator_of_products(&self, x: &OsElement, p: usize) -> SubspaceBasis {
        if p < x.degree {
            return SubspaceBasis::full(self.dim(p));
        }
        self.model
            .algebra()
            .left_multiplication(x, p - x.degree)
            .left_annihilator()
    }

    /// `im(d: 𝓕^{p-1} → 𝓕^p)`; zero in degree 0.
    pub fn image_of_d(&self, p: usize) -> SubspaceBasis {
        if p == 0 {
            return SubspaceBasis::zero(self.dim(0));
        }
        self.differential(p - 1).column_space()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement_model::{cone, AffineArrangement, CentralArrangement};
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn concurrent() -> ProjectiveModel {
        ProjectiveModel::new(&CentralArrangement::from_int_forms(&[&[1, 0], &[0, 1], &[1, -1]], ints(&[1, 2, 3])).unwrap())
    }

    fn flag(l: &Lattice, sets: &[&[usize]]) -> FlagChain {
        FlagChain::new(sets.iter().map(|s| l.flat(s).unwrap().clone()).collect()).unwrap()
    }

    #[test]
    fn pairing_signs() {
        let c = CentralArrangement::from_int_forms(&[&[1, 0], &[0, 1]], ints(&[1, 1])).unwrap();
        let m = ProjectiveModel::new(&c);
        let fc = FlagComplex::new(&m);
        let f = flag(fc.lattice(), &[&[], &[0], &[0, 1]]);
        assert_eq!(flag_pairing(&f, &[0, 1]).unwrap(), int(1));
        assert_eq!(flag_pairing(&f, &[1, 0]).unwrap(), int(-1));
        assert_eq!(
            flag_pairing(&f, &[0]).unwrap_err(),
            Error::DegreeMismatch { flag: 2, monomial: 1 }
        );
    }

    #[test]
    fn concurrent_pairings() {
        let m = concurrent();
        let fc = FlagComplex::new(&m);
        let l = fc.lattice();
        let f0 = flag(l, &[&[], &[0], &[0, 1, 2]]);
        assert_eq!(flag_pairing(&f0, &[0, 2]).unwrap(), int(1));
        let f1 = flag(l, &[&[], &[1], &[0, 1, 2]]);
        assert_eq!(fc.flag_to_dual(&f1).coords, ints(&[-1, 0]));
        let empty = flag(l, &[&[]]);
        assert_eq!(fc.flag_to_dual(&empty).coords, ints(&[1]));
    }

    #[test]
    fn enumerative_differential() {
        let m = concurrent();
        let fc = FlagComplex::new(&m);
        let l = fc.lattice();
        let f = flag(l, &[&[], &[0]]);
        let d = fc.d_enumerative(&f);
        let expected = fc.combination_to_dual(2, &[(int(-1), flag(l, &[&[], &[0], &[0, 1, 2]]))]);
        assert_eq!(d, expected);
        let top = flag(l, &[&[], &[0], &[0, 1, 2]]);
        assert!(fc.d_enumerative(&top).coords.is_empty());
        for p in 0..2 {
            for f in l.flags_of_length(p) {
                let via_matrix = fc.differential(p).mul_vec(&fc.flag_to_dual(&f).coords);
                assert_eq!(fc.d_enumerative(&f).coords, via_matrix);
            }
        }
    }

    #[test]
    fn points_degree_zero_differential() {
        let pts = AffineArrangement::points(&[int(0), int(1), int(3)], ints(&[1, 1, 1])).unwrap();
        let m = ProjectiveModel::new(&cone(&pts));
        let fc = FlagComplex::new(&m);
        let empty = fc.lattice().flags_of_length(0).remove(0);
        assert_eq!(fc.d_enumerative(&empty).coords, ints(&[1, 1, 1, 1]));
        let (pi, section) = fc.projective_quotient(1);
        assert_eq!(pi.mul(&section), Matrix::identity(3));
        // ker π in degree 1 is spanned by Σ F_i
        let ker = pi.kernel_basis();
        assert_eq!(ker.vectors(), &[ints(&[1, 1, 1, 1])]);
        assert_eq!(ker, fc.image_of_d(1));
    }

    #[test]
    fn vertex_components() {
        let m = concurrent();
        let fc = FlagComplex::new(&m);
        let l = fc.lattice();
        assert_eq!(fc.vertex_component_basis(l.flat(&[1]).unwrap()).unwrap().dim(), 1);
        assert_eq!(fc.vertex_component_basis(l.flat(&[0, 1, 2]).unwrap()).unwrap().dim(), 2);
    }

    #[test]
    fn middle_insertions_vanish() {
        let c = CentralArrangement::from_int_forms(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]], ints(&[1, 1, 1, 1])).unwrap();
        let m = ProjectiveModel::new(&c);
        let fc = FlagComplex::new(&m);
        let groups = fc.middle_insertion_sums(2);
        assert!(!groups.is_empty());
        for g in groups {
            let terms: Vec<_> = g.into_iter().map(|f| (int(1), f)).collect();
            assert!(fc.combination_to_dual(2, &terms).coords.iter().all(Zero::is_zero));
        }
    }
}
