//! The contravariant form `S`, the contravariant map `ψ`, singular subspaces,
//! the decone isometry and the transition maps between affine charts.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arrangement_model::AffineArrangement;
use crate::error::{Error, Result};
use crate::flag_space::{FlagComplex, FlagVector};
use crate::lattice::{FlagChain, Lattice};
use crate::exact_linear_algebra::{congruence, Matrix, SubspaceBasis};
use crate::os_algebra::{OsAlgebra, OsElement, ProjectiveModel};
use crate::rational::Rational;

/// `S_p` in dual-NBC coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContravariantGram {
    pub degree: usize,
    pub matrix: Matrix,
}

/// `G = Rᵀ D_a R`, summing over every increasing `p`-tuple.
pub fn gram(alg: &OsAlgebra, p: usize) -> ContravariantGram {
    let n = alg.dim(p);
    let (tuples, r) = alg.all_reductions(p);
    let mut g = Matrix::zeros(n, n);
    for (t, tuple) in tuples.iter().enumerate() {
        let row = r.row(t);
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        let a: Rational = tuple.iter().map(|&j| alg.weights()[j].clone()).product();
        if a.is_zero() {
            continue;
        }
        for x in 0..n {
            if row[x].is_zero() {
                continue;
            }
            let ax = &a * &row[x];
            for y in 0..n {
                if !row[y].is_zero() {
                    g[(x, y)] += &ax * &row[y];
                }
            }
        }
    }
    ContravariantGram { degree: p, matrix: g }
}

/// Matrix of `ψ: 𝓕^p → A^p`; in dual-NBC/NBC coordinates it is the Gram matrix.
pub fn psi(alg: &OsAlgebra, p: usize) -> Matrix {
    gram(alg, p).matrix
}

/// `ψ(F) = Σ_J a_J ⟨F, e_J⟩ e_J` evaluated straight from the pairing.
pub fn psi_of_flag(alg: &OsAlgebra, flag: &FlagChain) -> OsElement {
    let p = flag.len();
    let mut coords = vec![Rational::zero(); alg.dim(p)];
    let (tuples, r) = alg.all_reductions(p);
    for (t, tuple) in tuples.iter().enumerate() {
        let f = crate::flag_space::flag_pairing(flag, tuple).expect("degrees agree");
        if f.is_zero() {
            continue;
        }
        let a: Rational = tuple.iter().map(|&j| alg.weights()[j].clone()).product();
        let c = a * f;
        for (o, x) in coords.iter_mut().zip(r.row(t)) {
            if !x.is_zero() {
                *o += &c * x;
            }
        }
    }
    OsElement { degree: p, coords }
}

/// `G_{p+1}·d_p = δ_a·G_p` with `d_p = ∂_{p+1}ᵀ`.
pub fn chain_map_holds(alg: &OsAlgebra, p: usize) -> bool {
    let d = alg.boundary(p + 1).transpose();
    gram(alg, p + 1).matrix.mul(&d) == alg.delta_a(p).mul(&gram(alg, p).matrix)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Affine,
    Central,
    Projective,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularSpace {
    pub kind: SpaceKind,
    pub degree: usize,
    pub basis: SubspaceBasis,
    /// Representatives in `𝓕^ℓ` of the basis vectors, as columns.
    pub lifts: Matrix,
    pub restricted_gram: Matrix,
    pub rank: usize,
    pub rank_deficient: bool,
}

fn annihilator_below(alg: &OsAlgebra, l: usize) -> SubspaceBasis {
    if l == 0 {
        SubspaceBasis::full(alg.dim(0))
    } else {
        alg.delta_a(l - 1).left_annihilator()
    }
}

/// `Ann(ω_a ∧ A^{ℓ-1})` for the top degree `ℓ` of an affine OS algebra.
pub fn singular_of_algebra(alg: &OsAlgebra) -> SingularSpace {
    let l = alg.rank();
    let basis = annihilator_below(alg, l);
    let lifts = basis.matrix();
    let restricted_gram = congruence(&gram(alg, l).matrix, &lifts);
    SingularSpace {
        kind: SpaceKind::Affine,
        degree: l,
        rank: restricted_gram.rank(),
        rank_deficient: l < alg.ambient_dim(),
        basis,
        lifts,
        restricted_gram,
    }
}

pub fn singular_affine(aff: &AffineArrangement) -> SingularSpace {
    singular_of_algebra(&OsAlgebra::affine(aff))
}

/// `Ann(ω_a ∧ A^{ℓ-1}) ⊆ 𝓕^ℓ` for the projective top degree `ℓ`.
pub fn singular_central(model: &ProjectiveModel) -> SingularSpace {
    let alg = model.algebra();
    let l = model.top_degree();
    let basis = annihilator_below(alg, l);
    let lifts = basis.matrix();
    let restricted_gram = congruence(&gram(alg, l).matrix, &lifts);
    SingularSpace {
        kind: SpaceKind::Central,
        degree: l,
        rank: restricted_gram.rank(),
        rank_deficient: false,
        basis,
        lifts,
        restricted_gram,
    }
}

/// `Sing(𝓕̄^ℓ) = π(Ann(ω_a ∧ A^{ℓ-1}))` with `S̄_ℓ` evaluated on lifts from
/// the annihilator.
pub fn singular_projective(model: &ProjectiveModel) -> SingularSpace {
    let alg = model.algebra();
    let l = model.top_degree();
    let ann = annihilator_below(alg, l).matrix();
    let b = model.projective_basis(l);
    let image = b.transpose().mul(&ann);
    let basis = image.column_space();
    let lifts = if basis.dim() == 0 {
        Matrix::zeros(alg.dim(l), 0)
    } else {
        let c = image.solve(&basis.matrix()).expect("basis lies in the image");
        ann.mul(&c)
    };
    let restricted_gram = congruence(&gram(alg, l).matrix, &lifts);
    SingularSpace {
        kind: SpaceKind::Projective,
        degree: l,
        rank: restricted_gram.rank(),
        rank_deficient: false,
        basis,
        lifts,
        restricted_gram,
    }
}

/// `S_ℓ(F, F')` with `F` an annihilator lift and `F'` the section lift at
/// `pivot`; equal to `S̄_ℓ` because `Ann(ω_a ∧ A)` is orthogonal to `im d`.
pub fn projective_gram_via_section(fc: &FlagComplex, sing: &SingularSpace, pivot: usize) -> Result<Matrix> {
    let alg = fc.model().algebra();
    let w = fc.section(sing.degree, pivot)?.mul(&sing.basis.matrix());
    Ok(sing.lifts.transpose().mul(&gram(alg, sing.degree).matrix).mul(&w))
}

fn require_balanced(model: &ProjectiveModel) -> Result<()> {
    let s = model.arrangement().weight_sum();
    if s.is_zero() {
        Ok(())
    } else {
        Err(Error::WeightSumNonzero(crate::rational::format(&s)))
    }
}

/// Matrix of `ω_a ∧ -: Ā^{p-1} → Ā^p` in the chosen bases. Needs `Σa = 0`.
pub fn projective_delta(model: &ProjectiveModel, p: usize) -> Result<Matrix> {
    require_balanced(model)?;
    assert!(p >= 1, "ω_a ∧ - lands in degree at least one");
    let alg = model.algebra();
    let source = model.projective_basis(p - 1);
    let target = model.projective_basis(p);
    let img = alg.delta_a(p - 1).mul(&source);
    if target.cols() == 0 {
        return Ok(Matrix::zeros(0, source.cols()));
    }
    Ok(target.solve(&img).expect("ω_a ∧ Ā lies in Ā when Σa = 0"))
}

/// `Sing(𝓕̄^ℓ)` computed inside `(Ā^ℓ)*` as `Ann(ω_a ∧ Ā^{ℓ-1})`. Needs `Σa = 0`.
pub fn singular_projective_reduced(model: &ProjectiveModel) -> Result<SubspaceBasis> {
    let l = model.top_degree();
    if l == 0 {
        require_balanced(model)?;
        return Ok(SubspaceBasis::full(model.projective_dim(0)));
    }
    Ok(projective_delta(model, l)?.left_annihilator())
}

/// `T_j` with `ε_j = B·T_j`: the chart-`j` basis written in the chosen basis of `Ā^p`.
pub fn chart_coordinates(model: &ProjectiveModel, pivot: usize, p: usize) -> Result<Matrix> {
    let e = model.eps(pivot, p)?;
    let b = model.projective_basis(p);
    if b.cols() == 0 {
        return Ok(Matrix::zeros(0, e.cols()));
    }
    b.solve(&e)
        .ok_or_else(|| Error::PreconditionViolated(format!("ε_{pivot} does not land in Ā^{p}")))
}

/// Matrix of `ε_j*: 𝓕̄^p → 𝓕̂_j^p`.
pub fn eps_star(model: &ProjectiveModel, pivot: usize, p: usize) -> Result<Matrix> {
    Ok(chart_coordinates(model, pivot, p)?.transpose())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeconeIsometry {
    pub pivot: usize,
    pub degree: usize,
    pub eps_star: Matrix,
    pub projective: SingularSpace,
    pub affine: SingularSpace,
    /// `ε_j*` applied to the projective singular basis, as columns.
    pub image: Matrix,
    /// Gram matrix of `image` under `Ŝ_ℓ`.
    pub transported_gram: Matrix,
    pub bijective: bool,
    pub isometric: bool,
}

pub fn decone_isometry(model: &ProjectiveModel, pivot: usize) -> Result<DeconeIsometry> {
    model.check_index(pivot)?;
    require_balanced(model)?;
    let l = model.top_degree();
    let chart = model.chart(pivot)?;
    let eps_star = eps_star(model, pivot, l)?;
    let projective = singular_projective(model);
    let affine = singular_of_algebra(&chart.algebra);
    let image = eps_star.mul(&projective.basis.matrix());
    let transported_gram = congruence(&gram(&chart.algebra, affine.degree).matrix, &image);
    let span = SubspaceBasis::span(image.rows(), image.columns());
    let bijective = span.dim() == projective.basis.dim() && span == affine.basis;
    let isometric = transported_gram == projective.restricted_gram;
    Ok(DeconeIsometry {
        pivot,
        degree: l,
        eps_star,
        projective,
        affine,
        image,
        transported_gram,
        bijective,
        isometric,
    })
}

fn check_pair(model: &ProjectiveModel, i: usize, j: usize) -> Result<()> {
    model.check_index(i)?;
    model.check_index(j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    Ok(())
}

/// `τ_ij = ε_j* ∘ (ε_i*)^{-1}` in degree `p`, from `𝓕̂_i^p` to `𝓕̂_j^p`.
pub fn transition_block(model: &ProjectiveModel, i: usize, j: usize, p: usize) -> Result<Matrix> {
    check_pair(model, i, j)?;
    let ti = eps_star(model, i, p)?;
    let tj = eps_star(model, j, p)?;
    let inv = ti
        .solve(&Matrix::identity(ti.rows()))
        .ok_or_else(|| Error::PreconditionViolated(format!("ε_{i}* is not invertible in degree {p}")))?;
    Ok(tj.mul(&inv))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    /// `τ_ij` in degrees `0..=ℓ`.
    pub blocks: Vec<Matrix>,
}

impl Transition {
    pub fn top(&self) -> &Matrix {
        self.blocks.last().expect("degree 0 is always present")
    }
}

pub fn transition(model: &ProjectiveModel, i: usize, j: usize) -> Result<Transition> {
    check_pair(model, i, j)?;
    let blocks = (0..=model.top_degree())
        .map(|p| transition_block(model, i, j, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(Transition { from: i, to: j, blocks })
}

/// The class of a central flag in chart `pivot`: `ε_pivotᵀ` applied to its
/// dual coordinates. Needs `H_pivot ⋠ X_p`.
pub fn chart_image(fc: &FlagComplex, pivot: usize, flag: &FlagChain) -> Result<FlagVector> {
    chart_image_of(fc, pivot, flag.len(), &[(Rational::one(), flag.clone())], true)
}

fn chart_image_of(
    fc: &FlagComplex,
    pivot: usize,
    p: usize,
    terms: &[(Rational, FlagChain)],
    strict: bool,
) -> Result<FlagVector> {
    let model = fc.model();
    model.check_index(pivot)?;
    if strict {
        if let Some((_, f)) = terms.iter().find(|(_, f)| f.last().lies_in(pivot)) {
            return Err(Error::PreconditionViolated(format!(
                "flag ending at {:?} lies under H_{pivot}",
                f.last().hyperplanes()
            )));
        }
    }
    let v = fc.combination_to_dual(p, terms);
    let e = model.eps(pivot, p)?;
    Ok(FlagVector {
        degree: p,
        coords: e.transpose().mul_vec(&v.coords),
    })
}

/// The two-case formula for `τ_ij` on a flag with `H_i ⋠ X_p`, as a
/// combination of central flags avoiding `H_j`.
pub fn transition_flag_terms(
    lattice: &Lattice,
    i: usize,
    j: usize,
    flag: &FlagChain,
) -> Result<Vec<(Rational, FlagChain)>> {
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    let p = flag.len();
    let top = flag.last();
    if top.lies_in(i) {
        return Err(Error::PreconditionViolated(format!("H_{i} ≤ X_{p}")));
    }
    if !top.lies_in(j) {
        return Ok(vec![(Rational::one(), flag.clone())]);
    }
    let below = &flag.flats()[p - 1];
    if below.lies_in(j) {
        return Err(Error::PreconditionViolated(format!("H_{j} ≤ X_{}", p - 1)));
    }
    Ok(lattice
        .covers(below)?
        .filter(|x| *x != top)
        .map(|x| (-Rational::one(), flag.replaced(p, x)))
        .collect())
}

/// `τ_ij` of a flag by the two-case formula, in the coordinates of `𝓕̂_j^p`.
pub fn transition_flag_formula(fc: &FlagComplex, i: usize, j: usize, flag: &FlagChain) -> Result<FlagVector> {
    check_pair(fc.model(), i, j)?;
    let terms = transition_flag_terms(fc.lattice(), i, j, flag)?;
    chart_image_of(fc, j, flag.len(), &terms, true)
}

/// Rewrites a flag `(X_0<⋯<X_p)` into a combination of flags with the same
/// `X_p` whose `X_{p-1}` does not lie under `H_h`.
pub fn rewrite_avoiding(lattice: &Lattice, flag: &FlagChain, h: usize) -> Vec<(Rational, FlagChain)> {
    let p = flag.len();
    if p <= 1 {
        return vec![(Rational::one(), flag.clone())];
    }
    let top = flag.last();
    let mut out: Vec<(Rational, FlagChain)> = Vec::new();
    for (c, prefix) in rewrite_avoiding(lattice, &flag.truncated(), h) {
        let f = prefix.extended(top);
        let below = &f.flats()[p - 1];
        if !below.lies_in(h) {
            out.push((c, f));
            continue;
        }
        let base = &f.flats()[p - 2];
        for x in lattice.between(base, top).filter(|x| *x != below) {
            out.push((-c.clone(), f.replaced(p - 1, x)));
        }
    }
    out
}

/// `τ_ij` of any flag with `H_i ⋠ X_p`: rewrite first, then apply the formula.
pub fn transition_of_flag(fc: &FlagComplex, i: usize, j: usize, flag: &FlagChain) -> Result<FlagVector> {
    check_pair(fc.model(), i, j)?;
    if flag.last().lies_in(i) {
        return Err(Error::PreconditionViolated(format!("H_{i} ≤ X_{}", flag.len())));
    }
    let mut terms = Vec::new();
    for (c, f) in rewrite_avoiding(fc.lattice(), flag, j) {
        for (d, g) in transition_flag_terms(fc.lattice(), i, j, &f)? {
            terms.push((&c * d, g));
        }
    }
    chart_image_of(fc, j, flag.len(), &terms, true)
}

/// `τ*_{ji}: Â_i^p → Â_j^p`, the algebra map with `ω̂_k ↦ ω̂_k - ω̂_i` for
/// `k ≠ i, j` and `ω̂_j ↦ -ω̂_i`.
pub fn pullback(model: &ProjectiveModel, i: usize, j: usize, p: usize) -> Result<Matrix> {
    model.check_index(i)?;
    model.check_index(j)?;
    let ci = model.chart(i)?;
    let cj = model.chart(j)?;
    if i == j {
        return Ok(Matrix::identity(ci.algebra.dim(p)));
    }
    let target = &cj.algebra;
    let local = |central: usize| cj.index_map().iter().position(|&c| c == central).expect("index in chart");
    let image_of = |central: usize| -> OsElement {
        let wi = target.generator(local(i));
        if central == j {
            OsElement {
                degree: 1,
                coords: wi.coords.iter().map(|x| -x).collect(),
            }
        } else {
            let wk = target.generator(local(central));
            OsElement {
                degree: 1,
                coords: wk.coords.iter().zip(&wi.coords).map(|(a, b)| a - b).collect(),
            }
        }
    };
    let cols = ci
        .algebra
        .nbc_basis(p)
        .iter()
        .map(|m| {
            let mut acc = target.one();
            for &k in m.indices() {
                acc = target.wedge(&acc, &image_of(ci.index_map()[k]))?;
            }
            Ok(acc.coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(target.dim(p), &cols)
}

/// Both composites around the square, `(τ*_{ji} ∘ ψ_i, ψ_j ∘ τ_ij)`, applied
/// to a basis of `Sing(𝓕̂_i^ℓ)`.
pub fn diagram_composites(model: &ProjectiveModel, i: usize, j: usize) -> Result<(Matrix, Matrix)> {
    model.check_index(i)?;
    model.check_index(j)?;
    require_balanced(model)?;
    let l = model.top_degree();
    let ci = model.chart(i)?;
    let cj = model.chart(j)?;
    let sing = singular_of_algebra(&ci.algebra).basis.matrix();
    let left = pullback(model, i, j, l)?.mul(&psi(&ci.algebra, l)).mul(&sing);
    if i == j {
        return Ok((left.clone(), left));
    }
    let tau = transition_block(model, i, j, l)?;
    let right = psi(&cj.algebra, l).mul(&tau).mul(&sing);
    Ok((left, right))
}

/// `τ*_{ji} ∘ ψ_i = ψ_j ∘ τ_ij` on a basis of `Sing(𝓕̂_i^ℓ)`, as matrices.
pub fn verify_diagram(model: &ProjectiveModel, i: usize, j: usize) -> Result<bool> {
    let (left, right) = diagram_composites(model, i, j)?;
    Ok(left == right)
}

/// The same square read in `H^ℓ(Â_j, δ_â) = Â_j^ℓ / (ω̂_â ∧ Â_j^{ℓ-1})`.
pub fn verify_diagram_in_cohomology(model: &ProjectiveModel, i: usize, j: usize) -> Result<bool> {
    let (left, right) = diagram_composites(model, i, j)?;
    let l = model.top_degree();
    let alg = &model.chart(j)?.algebra;
    let exact = if l == 0 {
        SubspaceBasis::zero(alg.dim(0))
    } else {
        alg.delta_a(l - 1).column_space()
    };
    Ok(left.sub(&right).columns().iter().all(|c| exact.contains(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement_model::{cone, CentralArrangement};
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn two_points() -> AffineArrangement {
        AffineArrangement::points(&[int(0), int(1)], ints(&[1, 2])).unwrap()
    }

    fn concurrent(w: &[i64]) -> CentralArrangement {
        CentralArrangement::from_int_forms(&[&[1, 0], &[0, 1], &[1, -1]], ints(w)).unwrap()
    }

    #[test]
    fn gram_of_points_is_diagonal() {
        let pts = AffineArrangement::points(&[int(0), int(1), int(5)], ints(&[1, 2, 7])).unwrap();
        let g = gram(&OsAlgebra::affine(&pts), 1);
        assert_eq!(g.matrix, Matrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 7]]));
        let zero = AffineArrangement::points(&[int(0), int(1)], ints(&[0, 0])).unwrap();
        assert!(gram(&OsAlgebra::affine(&zero), 1).matrix.is_zero());
    }

    #[test]
    fn gram_of_concurrent_lines() {
        let (a0, a1, a2) = (2, 3, 5);
        let alg = OsAlgebra::central(&concurrent(&[a0, a1, a2]));
        let g = gram(&alg, 2).matrix;
        let expected = Matrix::from_ints(&[&[a0 * a1 + a1 * a2, -a1 * a2], &[-a1 * a2, a0 * a2 + a1 * a2]]);
        assert_eq!(g, expected);
        assert!(g.is_symmetric());
        for p in 0..2 {
            assert!(chain_map_holds(&alg, p));
        }
    }

    #[test]
    fn singular_space_of_two_points() {
        let s = singular_affine(&two_points());
        assert_eq!(s.basis.vectors(), &[ints(&[2, -1])]);
        assert_eq!(s.restricted_gram, Matrix::from_ints(&[&[6]]));
        assert_eq!(s.rank, 1);
        assert!(!s.rank_deficient);

        let zero = AffineArrangement::points(&[int(0), int(1)], ints(&[0, 0])).unwrap();
        let s = singular_affine(&zero);
        assert_eq!(s.basis.dim(), 2);
        assert!(s.restricted_gram.is_zero());
    }

    #[test]
    fn projective_singular_of_cone() {
        let c = cone(&two_points());
        assert_eq!(c.weights(), ints(&[-3, 1, 2]).as_slice());
        let m = ProjectiveModel::new(&c);
        let s = singular_projective(&m);
        assert_eq!(m.projective_dim(1), 2);
        assert_eq!(s.basis.dim(), 1);
        assert_eq!(s.restricted_gram, Matrix::from_ints(&[&[6]]));
        assert_eq!(s.basis, singular_projective_reduced(&m).unwrap());

        let fc = FlagComplex::new(&m);
        for pivot in 0..3 {
            assert_eq!(projective_gram_via_section(&fc, &s, pivot).unwrap(), s.restricted_gram);
        }

        let zero = ProjectiveModel::new(&c.with_weights(ints(&[0, 0, 0])).unwrap());
        assert_eq!(singular_projective(&zero).basis.dim(), 2);
    }

    #[test]
    fn decone_isometry_of_cone() {
        let m = ProjectiveModel::new(&cone(&two_points()));
        let iso = decone_isometry(&m, 0).unwrap();
        assert_eq!(iso.transported_gram, Matrix::from_ints(&[&[6]]));
        assert_eq!(iso.affine.basis.vectors(), &[ints(&[2, -1])]);
        assert!(iso.bijective && iso.isometric);
        for pivot in 1..3 {
            let iso = decone_isometry(&m, pivot).unwrap();
            assert!(iso.bijective && iso.isometric);
            assert_eq!(iso.affine.rank, 1);
        }
        let unbalanced = ProjectiveModel::new(&concurrent(&[1, 1, 1]));
        assert!(matches!(decone_isometry(&unbalanced, 0), Err(Error::WeightSumNonzero(_))));
    }

    #[test]
    fn transition_degree_one() {
        let m = ProjectiveModel::new(&concurrent(&[1, 2, -3]));
        let fc = FlagComplex::new(&m);
        let l = fc.lattice();
        let h1 = FlagChain::new(vec![l.minimum().clone(), l.flat(&[1]).unwrap().clone()]).unwrap();
        let h2 = FlagChain::new(vec![l.minimum().clone(), l.flat(&[2]).unwrap().clone()]).unwrap();
        let tau = transition_block(&m, 0, 1, 1).unwrap();
        // chart 0 holds F_1, F_2 and chart 1 holds F_0, F_2
        assert_eq!(tau, Matrix::from_ints(&[&[-1, 0], &[-1, 1]]));
        let image = chart_image(&fc, 0, &h1).unwrap();
        assert_eq!(tau.mul_vec(&image.coords), ints(&[-1, -1]));
        assert_eq!(transition_flag_formula(&fc, 0, 1, &h1).unwrap().coords, ints(&[-1, -1]));
        assert_eq!(transition_flag_formula(&fc, 0, 1, &h2).unwrap().coords, ints(&[0, 1]));
        assert!(matches!(transition(&m, 1, 1), Err(Error::EqualIndices(1))));
        assert!(matches!(transition(&m, 0, 7), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn pullback_matches_solve() {
        let m = ProjectiveModel::new(&concurrent(&[1, 2, -3]));
        for (i, j) in [(0, 1), (1, 0), (0, 2), (2, 1)] {
            let explicit = pullback(&m, i, j, 1).unwrap();
            let solved = m.eps(j, 1).unwrap().solve(&m.eps(i, 1).unwrap()).unwrap();
            assert_eq!(explicit, solved);
        }
    }

    #[test]
    fn diagram_commutes_modulo_exact_forms() {
        let m = ProjectiveModel::new(&concurrent(&[1, 2, -3]));
        assert!(verify_diagram(&m, 2, 2).unwrap());
        // degree one: the composites differ by -u_j·ω̂_â
        let (left, right) = diagram_composites(&m, 0, 1).unwrap();
        assert_eq!(left.column(0), ints(&[0, -6]));
        assert_eq!(right.column(0), ints(&[-3, 3]));
        assert!(!verify_diagram(&m, 0, 1).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                assert!(verify_diagram_in_cohomology(&m, i, j).unwrap());
            }
        }
        let unbalanced = ProjectiveModel::new(&concurrent(&[1, 1, 1]));
        assert!(matches!(verify_diagram(&unbalanced, 0, 1), Err(Error::WeightSumNonzero(_))));
    }
}
