//! Built-in corpus of weighted arrangements and exact checks of the
//! structural identities on each of them.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrangement_model::{cone, AffineArrangement, CentralArrangement, Hyperplane};
use crate::contravariant::{
    chain_map_holds, chart_image, decone_isometry, gram, projective_delta, projective_gram_via_section, psi_of_flag,
    pullback, singular_of_algebra, singular_projective, singular_projective_reduced, transition_block,
    transition_flag_formula, transition_flag_terms, transition_of_flag, verify_diagram, verify_diagram_in_cohomology,
};
use crate::error::{Error, Result};
use crate::flag_space::{flag_pairing, FlagComplex};
use crate::exact_linear_algebra::{congruence, dot, Matrix, SubspaceBasis};
use crate::os_algebra::{subsets, OsAlgebra, OsElement, ProjectiveModel};
use crate::rational::{frac, int, Rational};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub arrangement: CentralArrangement,
    /// The affine arrangement this entry is the cone of, if any.
    pub affine: Option<AffineArrangement>,
}

impl CorpusEntry {
    fn central(name: &str, arrangement: CentralArrangement) -> Self {
        CorpusEntry {
            name: name.into(),
            arrangement,
            affine: None,
        }
    }

    fn coned(name: &str, affine: AffineArrangement) -> Self {
        CorpusEntry {
            name: name.into(),
            arrangement: cone(&affine),
            affine: Some(affine),
        }
    }

    /// The arrangement itself if its weights sum to zero, else its balanced reweighting.
    pub fn balanced(&self) -> CentralArrangement {
        if self.arrangement.weight_sum().is_zero() {
            self.arrangement.clone()
        } else {
            self.arrangement.with_balanced_weights()
        }
    }
}

const WEIGHTS: [(i64, i64); 8] = [(3, 2), (-1, 1), (2, 1), (1, 3), (-5, 2), (4, 1), (1, 1), (-2, 3)];

fn weights(n: usize) -> Vec<Rational> {
    WEIGHTS.iter().cycle().take(n).map(|&(p, q)| frac(p, q)).collect()
}

fn affine_lines(lines: &[(i64, i64, i64)]) -> AffineArrangement {
    let hyperplanes = lines
        .iter()
        .enumerate()
        .map(|(i, &(a, b, c))| Hyperplane::new(vec![int(a), int(b)], int(c), format!("L{}", i + 1)).expect("nonzero"))
        .collect();
    AffineArrangement::new(2, hyperplanes, weights(lines.len())).expect("distinct lines")
}

fn boolean(dim: usize) -> CentralArrangement {
    let forms: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|k| i64::from(k == i)).collect())
        .collect();
    let refs: Vec<&[i64]> = forms.iter().map(Vec::as_slice).collect();
    CentralArrangement::from_int_forms(&refs, weights(dim)).expect("coordinate hyperplanes")
}

/// The fixed corpus followed by ten seeded random arrangements.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        CorpusEntry::coned(
            "points-2",
            AffineArrangement::points(&[int(0), int(1)], vec![int(1), int(2)]).expect("distinct points"),
        ),
        CorpusEntry::coned(
            "points-3",
            AffineArrangement::points(&[int(0), int(1), int(3)], vec![int(1), int(2), int(3)]).expect("distinct points"),
        ),
    ];
    for dim in 1..=4 {
        out.push(CorpusEntry::central(&format!("boolean-{dim}"), boolean(dim)));
    }
    out.push(CorpusEntry::central(
        "concurrent-3",
        CentralArrangement::from_int_forms(&[&[1, 0], &[0, 1], &[1, -1]], weights(3)).expect("three lines"),
    ));
    // x + y = 1 is written as x + y - 1 = 0
    out.push(CorpusEntry::coned("generic-3", affine_lines(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)])));
    out.push(CorpusEntry::coned(
        "generic-4",
        affine_lines(&[(1, 0, 0), (0, 1, 0), (1, 1, -1), (1, -1, -2)]),
    ));
    out.push(CorpusEntry::central(
        "braid-3",
        CentralArrangement::from_int_forms(&[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]], weights(3)).expect("braid"),
    ));
    for seed in 0..10u64 {
        let dim = 2 + (seed % 3) as usize;
        let n = dim + 1 + (seed % 2) as usize;
        let arr = random_arrangement(seed, dim, n, false).expect("corpus parameters are in range");
        out.push(CorpusEntry::central(&format!("random-{seed}"), arr));
    }
    out
}

/// Deterministic random central arrangement of `n` hyperplanes in `C^dim`,
/// with integer coefficients in `[-3, 3]` and small rational weights.
pub fn random_arrangement(seed: u64, dim: usize, n: usize, zero_sum: bool) -> Result<CentralArrangement> {
    if dim == 0 || dim > 4 || n == 0 || n > 10 {
        return Err(Error::InvalidParameters(format!(
            "need 1 ≤ dim ≤ 4 and 1 ≤ n ≤ 10, got dim = {dim}, n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut planes: Vec<Hyperplane> = Vec::with_capacity(n);
    let mut attempts = 0;
    while planes.len() < n {
        attempts += 1;
        if attempts > 10_000 {
            return Err(Error::InvalidParameters(format!(
                "could not draw {n} distinct hyperplanes in dimension {dim}"
            )));
        }
        let coeffs: Vec<Rational> = (0..dim).map(|_| int(rng.gen_range(-3..=3))).collect();
        let Some(h) = Hyperplane::new(coeffs, Rational::zero(), format!("H{}", planes.len())) else {
            continue;
        };
        if planes.iter().any(|p| p.coeffs == h.coeffs) {
            continue;
        }
        planes.push(h);
    }
    let mut w: Vec<Rational> = (0..n)
        .map(|_| {
            let mut num = 0;
            while num == 0 {
                num = rng.gen_range(-5..=5);
            }
            frac(num, rng.gen_range(1..=3))
        })
        .collect();
    if zero_sum {
        w[0] = -w[1..].iter().sum::<Rational>();
    }
    CentralArrangement::new(dim, planes, w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub theorem: String,
    pub arrangement: String,
    pub passed: bool,
    pub detail: String,
}

/// Checks run by `verify --all`, in report order.
pub const THEOREMS: &[&str] = &[
    "whitney",
    "exactness-os",
    "exactness-flag",
    "adjointness",
    "nondegeneracy",
    "relations",
    "vertex-decomposition",
    "symmetry",
    "orthogonality",
    "chain-map",
    "contravariant-identity",
    "projective-kernel",
    "generation",
    "splitting",
    "annihilator-criterion",
    "vertex-isomorphism",
    "section",
    "well-defined",
    "sing-dimension",
    "eps",
    "decone-isometry",
    "affine-singular",
    "transition-formula",
    "transition-p1",
    "cocycle",
    "transition-isometry",
    "pullback",
    "diagram-cohomology",
];

/// Checks that can be requested by name but are not part of `verify --all`.
pub const EXTRA_THEOREMS: &[&str] = &["diagram"];

pub fn is_theorem(name: &str) -> bool {
    THEOREMS.contains(&name) || EXTRA_THEOREMS.contains(&name)
}

struct Outcome(std::result::Result<(), String>);

impl Outcome {
    fn ok() -> Self {
        Outcome(Ok(()))
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Outcome(Err(format!($($fmt)+)));
        }
    };
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome(Err(err.to_string())),
        }
    };
}

pub fn run_check(theorem: &str, entry: &CorpusEntry) -> Result<CheckResult> {
    if !is_theorem(theorem) {
        return Err(Error::InvalidParameters(format!("unknown theorem '{theorem}'")));
    }
    let model = ProjectiveModel::new(&entry.arrangement);
    let outcome = match theorem {
        "whitney" => whitney(&model),
        "exactness-os" => exactness_os(&model),
        "exactness-flag" => exactness_flag(&model),
        "adjointness" => adjointness(&model),
        "nondegeneracy" => nondegeneracy(&model),
        "relations" => relations(&model),
        "vertex-decomposition" => vertex_decomposition(&model),
        "symmetry" => symmetry(&model),
        "orthogonality" => orthogonality(&model),
        "chain-map" => chain_map(&model),
        "contravariant-identity" => contravariant_identity(&model),
        "projective-kernel" => projective_kernel(&model),
        "generation" => generation(&model),
        "splitting" => splitting(&model),
        "annihilator-criterion" => annihilator_criterion(&model),
        "vertex-isomorphism" => vertex_isomorphism(&model),
        "section" => section(&model),
        "well-defined" => well_defined(&model),
        "affine-singular" => affine_singular(entry),
        "transition-formula" => transition_formula(&model),
        "transition-p1" => transition_p1(&model),
        "cocycle" => cocycle(&model),
        balanced => {
            let model = ProjectiveModel::new(&entry.balanced());
            match balanced {
                "sing-dimension" => sing_dimension(&model),
                "eps" => eps(&model),
                "decone-isometry" => decone(&model),
                "transition-isometry" => transition_isometry(&model),
                "pullback" => pullback_check(&model),
                "diagram-cohomology" => diagram(&model, true),
                "diagram" => diagram(&model, false),
                _ => unreachable!("theorem names are validated above"),
            }
        }
    };
    let (passed, detail) = match outcome.0 {
        Ok(()) => (true, String::new()),
        Err(d) => (false, d),
    };
    Ok(CheckResult {
        theorem: theorem.into(),
        arrangement: entry.name.clone(),
        passed,
        detail,
    })
}

/// Every theorem in `theorems` on every corpus entry, theorem-major.
pub fn run_checks(theorems: &[&str], corpus: &[CorpusEntry]) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for t in theorems {
        for e in corpus {
            out.push(run_check(t, e)?);
        }
    }
    Ok(out)
}

fn whitney(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let w = fc.lattice().whitney_numbers();
    for (p, &n) in w.iter().enumerate() {
        ensure!(model.algebra().dim(p) as u64 == n, "degree {p}: dim A^p = {} but Σ|μ| = {n}", model.algebra().dim(p));
    }
    ensure!(model.algebra().dim(w.len()) == 0, "A is nonzero above the rank");
    Outcome::ok()
}

fn exactness_os(model: &ProjectiveModel) -> Outcome {
    let alg = model.algebra();
    for p in 0..=alg.rank() {
        let r = alg.boundary(p).rank() + alg.boundary(p + 1).rank();
        ensure!(r == alg.dim(p), "degree {p}: rank ∂_p + rank ∂_(p+1) = {r} ≠ {}", alg.dim(p));
    }
    Outcome::ok()
}

fn d_enumerative_rank(fc: &FlagComplex, p: usize) -> usize {
    let cols: Vec<Vec<Rational>> = fc
        .lattice()
        .flags_of_length(p)
        .iter()
        .map(|f| fc.d_enumerative(f).coords)
        .collect();
    Matrix::from_columns(fc.dim(p + 1), &cols).expect("uniform length").rank()
}

fn exactness_flag(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let rank = model.algebra().rank();
    let ranks: Vec<usize> = (0..=rank).map(|p| d_enumerative_rank(&fc, p)).collect();
    for p in 0..=rank {
        let before = if p == 0 { 0 } else { ranks[p - 1] };
        ensure!(before + ranks[p] == fc.dim(p), "degree {p}: rank d_(p-1) + rank d_p ≠ dim 𝓕^p");
    }
    ensure!(ranks[rank] == 0, "d does not vanish in top degree");
    Outcome::ok()
}

fn adjointness(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    for p in 0..=model.algebra().rank() {
        let d = fc.differential(p);
        for f in fc.lattice().flags_of_length(p) {
            ensure!(
                fc.d_enumerative(&f).coords == d.mul_vec(&fc.flag_to_dual(&f).coords),
                "degree {p}: enumerative d differs from ∂ᵀ on {:?}",
                f.last().hyperplanes()
            );
        }
    }
    Outcome::ok()
}

fn nondegeneracy(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    for p in 0..=model.algebra().rank() {
        let (_, m) = fc.flag_matrix(p);
        ensure!(m.rank() == fc.dim(p), "degree {p}: flags span rank {} < {}", m.rank(), fc.dim(p));
    }
    Outcome::ok()
}

fn relations(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let alg = model.algebra();
    let n = alg.len();
    for p in 0..=alg.rank() {
        let flags = fc.lattice().flags_of_length(p);
        let duals: Vec<Vec<Rational>> = flags.iter().map(|f| fc.flag_to_dual(f).coords).collect();
        for j in subsets(n, p + 1) {
            let Some(m) = crate::os_algebra::Monomial::new(j.clone()) else {
                continue;
            };
            if !alg.is_dependent(&m) {
                continue;
            }
            for f in &flags {
                let mut total = Rational::zero();
                for i in 0..j.len() {
                    let mut t = j.clone();
                    t.remove(i);
                    let v = attempt!(flag_pairing(f, &t));
                    if i % 2 == 0 {
                        total += v;
                    } else {
                        total -= v;
                    }
                }
                ensure!(total.is_zero(), "⟨F, ∂e_J⟩ ≠ 0 for dependent J = {j:?}");
            }
        }
        for j in subsets(n, p) {
            let r = alg.reduce_sequence(&j);
            for (f, fd) in flags.iter().zip(&duals) {
                ensure!(
                    attempt!(flag_pairing(f, &j)) == dot(fd, &r),
                    "raw pairing differs from reduced pairing at J = {j:?}"
                );
            }
        }
        for group in fc.middle_insertion_sums(p) {
            let terms: Vec<_> = group.into_iter().map(|f| (Rational::one(), f)).collect();
            ensure!(
                fc.combination_to_dual(p, &terms).coords.iter().all(Zero::is_zero),
                "degree {p}: a middle-insertion sum is nonzero"
            );
        }
    }
    Outcome::ok()
}

fn vertex_decomposition(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    for p in 0..=model.algebra().rank() {
        let mut total = 0;
        let mut all = SubspaceBasis::zero(fc.dim(p));
        for x in fc.lattice().flats_of_codim(p) {
            let b = attempt!(fc.vertex_component_basis(x));
            total += b.dim();
            all = all.sum(&b);
        }
        ensure!(total == fc.dim(p) && all.dim() == fc.dim(p), "degree {p}: Σ dim 𝓕_X = {total} ≠ {}", fc.dim(p));
    }
    Outcome::ok()
}

fn symmetry(model: &ProjectiveModel) -> Outcome {
    for p in 0..=model.algebra().rank() {
        ensure!(gram(model.algebra(), p).matrix.is_symmetric(), "degree {p}: Gram matrix is not symmetric");
    }
    Outcome::ok()
}

fn orthogonality(model: &ProjectiveModel) -> Outcome {
    let alg = model.algebra();
    for p in 1..=alg.rank() {
        let ann = alg.delta_a(p - 1).left_annihilator().matrix();
        let d = alg.boundary(p).transpose();
        let s = ann.transpose().mul(&gram(alg, p).matrix).mul(&d);
        ensure!(s.is_zero(), "degree {p}: S(Ann, im d) ≠ 0");
    }
    Outcome::ok()
}

fn chain_map(model: &ProjectiveModel) -> Outcome {
    let alg = model.algebra();
    for p in 0..=alg.rank() {
        ensure!(chain_map_holds(alg, p), "degree {p}: ψ∘d ≠ δ_a∘ψ");
    }
    Outcome::ok()
}

fn contravariant_identity(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let alg = model.algebra();
    let omega = alg.omega_a();
    for p in 1..=alg.rank() {
        let g = gram(alg, p).matrix;
        let flags: Vec<Vec<Rational>> = fc
            .lattice()
            .flags_of_length(p)
            .iter()
            .map(|f| fc.flag_to_dual(f).coords)
            .collect();
        for fp in fc.lattice().flags_of_length(p - 1) {
            let gd = g.mul_vec(&fc.d_enumerative(&fp).coords);
            let rhs = attempt!(alg.wedge(&omega, &psi_of_flag(alg, &fp)));
            for f in &flags {
                ensure!(dot(f, &gd) == dot(f, &rhs.coords), "degree {p}: S(F, dF') ≠ ⟨F, ω_a ∧ ψ(F')⟩");
            }
        }
    }
    Outcome::ok()
}

fn projective_kernel(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    for p in 0..=model.algebra().rank() {
        let ker = fc.projection(p).kernel_basis();
        ensure!(ker == fc.image_of_d(p), "degree {p}: ker π ≠ im d");
        ensure!(
            model.projective_dim(p) == model.projective_subalgebra(p).dim(),
            "degree {p}: chosen basis does not span Ā^p"
        );
    }
    Outcome::ok()
}

fn generation(model: &ProjectiveModel) -> Outcome {
    let alg = model.algebra();
    let n = alg.len();
    for v in model.projective_subalgebra(1).vectors() {
        ensure!(v.iter().sum::<Rational>().is_zero(), "Ā^1 has a vector with nonzero coefficient sum");
    }
    for p in 1..=alg.rank() {
        let mut products = Vec::new();
        for j in subsets(n, p + 1) {
            let mut acc = alg.one();
            for &k in &j[1..] {
                let diff = OsElement {
                    degree: 1,
                    coords: alg.generator(k).coords.iter().zip(&alg.generator(j[0]).coords).map(|(a, b)| a - b).collect(),
                };
                acc = attempt!(alg.wedge(&acc, &diff));
            }
            ensure!(acc.coords == alg.boundary_of_sequence(&j), "∂e_J ≠ Π(ω_(j_k) - ω_(j_1)) for J = {j:?}");
            products.push(acc.coords);
        }
        let span = SubspaceBasis::span(alg.dim(p), products);
        ensure!(span == model.projective_subalgebra(p), "degree {p}: products of Ā^1 do not span Ā^p");
    }
    Outcome::ok()
}

fn splitting(model: &ProjectiveModel) -> Outcome {
    let alg = model.algebra();
    for pivot in 0..alg.len() {
        for p in 0..=alg.rank() {
            let s = attempt!(model.direct_sum_split(p, pivot));
            let n = alg.dim(p);
            ensure!(s.onto_wedge.mul(&s.onto_wedge) == s.onto_wedge, "pivot {pivot}, degree {p}: σ∂ not idempotent");
            ensure!(
                s.onto_projective.mul(&s.onto_projective) == s.onto_projective,
                "pivot {pivot}, degree {p}: id - σ∂ not idempotent"
            );
            ensure!(s.onto_wedge.add(&s.onto_projective) == Matrix::identity(n), "projectors not complementary");
            ensure!(s.onto_wedge.mul(&s.onto_projective).is_zero(), "projectors not orthogonal");
            ensure!(
                s.onto_projective.column_space() == model.projective_subalgebra(p),
                "pivot {pivot}, degree {p}: image of id - σ∂ is not Ā^p"
            );
            let below = if p == 0 { 0 } else { model.projective_subalgebra(p - 1).dim() };
            ensure!(s.onto_wedge.rank() == below, "pivot {pivot}, degree {p}: rank σ∂ ≠ dim Ā^(p-1)");
            if p >= 1 {
                let wedge_image = attempt!(model.sigma(p, pivot)).mul(&model.projective_basis(p - 1)).column_space();
                ensure!(
                    s.onto_wedge.column_space() == wedge_image,
                    "pivot {pivot}, degree {p}: image of σ∂ is not ω_j ∧ Ā^(p-1)"
                );
            }
        }
    }
    Outcome::ok()
}

fn annihilator_criterion(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let alg = model.algebra();
    for pivot in 0..alg.len() {
        let w = alg.generator(pivot);
        for p in 1..=alg.rank() {
            let ann = fc.annihilator_of_products(&w, p);
            for f in fc.lattice().flags_of_length(p) {
                let inside = ann.contains(&fc.flag_to_dual(&f).coords);
                ensure!(
                    inside == !f.last().lies_in(pivot),
                    "pivot {pivot}: flag ending at {:?} violates the criterion",
                    f.last().hyperplanes()
                );
            }
        }
    }
    Outcome::ok()
}

fn vertex_isomorphism(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let alg = model.algebra();
    for pivot in 0..alg.len() {
        for p in 0..=model.top_degree() {
            let cols: Vec<Vec<Rational>> = fc
                .lattice()
                .flags_of_length(p)
                .iter()
                .filter(|f| !f.last().lies_in(pivot))
                .map(|f| fc.flag_to_dual(f).coords)
                .collect();
            let m = attempt!(Matrix::from_columns(fc.dim(p), &cols));
            let k = model.projective_dim(p);
            ensure!(m.rank() == k, "pivot {pivot}, degree {p}: components avoiding H_j have dim {} ≠ {k}", m.rank());
            ensure!(fc.projection(p).mul(&m).rank() == k, "pivot {pivot}, degree {p}: π is not onto");
        }
    }
    Outcome::ok()
}

fn section(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let alg = model.algebra();
    for pivot in 0..alg.len() {
        for p in 0..=model.top_degree() {
            let s = attempt!(fc.section(p, pivot));
            let pi = fc.projection(p);
            ensure!(pi.mul(&s) == Matrix::identity(pi.rows()), "pivot {pivot}, degree {p}: π∘section ≠ id");
            if p >= 1 {
                let ann = fc.annihilator_of_products(&alg.generator(pivot), p);
                ensure!(
                    s.columns().iter().all(|c| ann.contains(c)),
                    "pivot {pivot}, degree {p}: section leaves Ann(ω_j ∧ A^(p-1))"
                );
            }
        }
    }
    Outcome::ok()
}

fn well_defined(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let sing = singular_projective(model);
    ensure!(sing.restricted_gram.is_symmetric(), "S̄_ℓ is not symmetric");
    for pivot in 0..model.algebra().len() {
        let other = attempt!(projective_gram_via_section(&fc, &sing, pivot));
        ensure!(other == sing.restricted_gram, "pivot {pivot}: S̄_ℓ depends on the choice of lift");
    }
    Outcome::ok()
}

fn sing_dimension(model: &ProjectiveModel) -> Outcome {
    let sing = singular_projective(model);
    let reduced = attempt!(singular_projective_reduced(model));
    ensure!(sing.basis == reduced, "π(Ann(ω_a ∧ A)) ≠ Ann(ω_a ∧ Ā)");
    let l = model.top_degree();
    let r = if l == 0 { 0 } else { attempt!(projective_delta(model, l)).rank() };
    let expected = model.projective_dim(l) - r;
    ensure!(sing.basis.dim() == expected, "dim Sing = {} but dim Ā^ℓ - rank δ_a = {expected}", sing.basis.dim());
    Outcome::ok()
}

fn eps(model: &ProjectiveModel) -> Outcome {
    let alg = model.algebra();
    for pivot in 0..alg.len() {
        let chart = attempt!(model.chart(pivot));
        for p in 0..=model.top_degree() {
            let e = attempt!(model.eps(pivot, p));
            ensure!(e.rank() == e.cols(), "pivot {pivot}, degree {p}: ε is not injective");
            ensure!(e.cols() == model.projective_dim(p), "pivot {pivot}, degree {p}: dim Â^p ≠ dim Ā^p");
            ensure!(alg.boundary(p).mul(&e).is_zero(), "pivot {pivot}, degree {p}: ε does not land in Ā");
            for (k, m) in chart.algebra.nbc_basis(p).iter().enumerate() {
                let mut seq = vec![pivot];
                seq.extend(m.indices().iter().map(|&i| chart.index_map()[i]));
                ensure!(e.column(k) == alg.boundary_of_sequence(&seq), "pivot {pivot}: ε(ω̂_J) ≠ ∂ω_(j,J)");
            }
        }
        ensure!(attempt!(model.eps_of_omega(pivot)) == alg.omega_a(), "pivot {pivot}: ε(ω̂_â) ≠ ω_a");
    }
    Outcome::ok()
}

fn decone(model: &ProjectiveModel) -> Outcome {
    let mut ranks = Vec::new();
    for pivot in 0..model.algebra().len() {
        let iso = attempt!(decone_isometry(model, pivot));
        ensure!(iso.bijective, "pivot {pivot}: ε* does not map Sing onto Sing");
        ensure!(iso.isometric, "pivot {pivot}: Gram matrices differ");
        ranks.push(iso.affine.rank);
    }
    ensure!(ranks.windows(2).all(|w| w[0] == w[1]), "restricted ranks differ across pivots: {ranks:?}");
    Outcome::ok()
}

fn affine_singular(entry: &CorpusEntry) -> Outcome {
    let Some(aff) = &entry.affine else {
        return Outcome::ok();
    };
    let alg = OsAlgebra::affine(aff);
    let sing = singular_of_algebra(&alg);
    ensure!(sing.restricted_gram == congruence(&gram(&alg, sing.degree).matrix, &sing.basis.matrix()), "restricted Gram");
    ensure!(sing.rank == sing.restricted_gram.rank(), "rank field");
    if aff.ambient_dim() == 1 {
        let w = aff.weights();
        for v in sing.basis.vectors() {
            ensure!(dot(v, w).is_zero(), "singular vector with Σ c_i a_i ≠ 0");
        }
        let expected = if w.iter().all(Zero::is_zero) { w.len() } else { w.len() - 1 };
        ensure!(sing.basis.dim() == expected, "dim Sing = {} ≠ {expected}", sing.basis.dim());
    }
    Outcome::ok()
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
}

fn transition_formula(model: &ProjectiveModel) -> Outcome {
    let fc = FlagComplex::new(model);
    let n = model.algebra().len();
    for p in 0..=model.top_degree() {
        let flags = fc.lattice().flags_of_length(p);
        for (i, j) in pairs(n) {
            let tau = attempt!(transition_block(model, i, j, p));
            for f in flags.iter().filter(|f| !f.last().lies_in(i)) {
                let expected = tau.mul_vec(&attempt!(chart_image(&fc, i, f)).coords);
                let direct = transition_flag_terms(fc.lattice(), i, j, f).is_ok();
                let got = if direct {
                    attempt!(transition_flag_formula(&fc, i, j, f))
                } else {
                    attempt!(transition_of_flag(&fc, i, j, f))
                };
                ensure!(
                    got.coords == expected,
                    "τ_{i}{j} on the flag ending at {:?} differs from the formula",
                    f.last().hyperplanes()
                );
            }
        }
    }
    Outcome::ok()
}

fn transition_p1(model: &ProjectiveModel) -> Outcome {
    if model.top_degree() < 1 {
        return Outcome::ok();
    }
    let n = model.algebra().len();
    for (i, j) in pairs(n) {
        let tau = attempt!(transition_block(model, i, j, 1));
        let ci = attempt!(model.chart(i));
        let cj = attempt!(model.chart(j));
        // NBC¹ of a decone is every hyperplane, in index-map order
        let local = |c: usize| cj.index_map().iter().position(|&x| x == c).expect("present");
        for (col, &k) in ci.index_map().iter().enumerate() {
            let mut expected = vec![Rational::zero(); cj.index_map().len()];
            if k != j {
                expected[local(k)] = Rational::one();
            } else {
                for r in (0..n).filter(|&r| r != j) {
                    expected[local(r)] = -Rational::one();
                }
            }
            ensure!(tau.column(col) == expected, "τ_{i}{j}(F_{k}) differs from the degree-one formula");
        }
    }
    Outcome::ok()
}

fn cocycle(model: &ProjectiveModel) -> Outcome {
    let n = model.algebra().len();
    for p in 0..=model.top_degree() {
        for (i, j) in pairs(n) {
            let ij = attempt!(transition_block(model, i, j, p));
            for k in 0..n {
                if k == j {
                    continue;
                }
                let jk = attempt!(transition_block(model, j, k, p));
                let ik = if k == i {
                    Matrix::identity(ij.cols())
                } else {
                    attempt!(transition_block(model, i, k, p))
                };
                ensure!(jk.mul(&ij) == ik, "degree {p}: τ_{j}{k}∘τ_{i}{j} ≠ τ_{i}{k}");
            }
        }
    }
    Outcome::ok()
}

fn transition_isometry(model: &ProjectiveModel) -> Outcome {
    let n = model.algebra().len();
    let l = model.top_degree();
    for (i, j) in pairs(n) {
        let ci = attempt!(model.chart(i));
        let cj = attempt!(model.chart(j));
        let si = singular_of_algebra(&ci.algebra);
        let sj = singular_of_algebra(&cj.algebra);
        let tau = attempt!(transition_block(model, i, j, l));
        let image = tau.mul(&si.basis.matrix());
        ensure!(
            SubspaceBasis::span(image.rows(), image.columns()) == sj.basis,
            "τ_{i}{j} does not map Sing onto Sing"
        );
        ensure!(
            congruence(&gram(&cj.algebra, l).matrix, &image) == si.restricted_gram,
            "τ_{i}{j} is not an isometry"
        );
    }
    Outcome::ok()
}

fn pullback_check(model: &ProjectiveModel) -> Outcome {
    let n = model.algebra().len();
    for p in 0..=model.top_degree() {
        for (i, j) in pairs(n) {
            let explicit = attempt!(pullback(model, i, j, p));
            let ei = attempt!(model.eps(i, p));
            let ej = attempt!(model.eps(j, p));
            ensure!(ej.mul(&explicit) == ei, "degree {p}: ε_j∘τ*_({j}{i}) ≠ ε_{i}");
        }
    }
    Outcome::ok()
}

fn diagram(model: &ProjectiveModel, cohomology: bool) -> Outcome {
    let n = model.algebra().len();
    for i in 0..n {
        for j in 0..n {
            let ok = if cohomology {
                attempt!(verify_diagram_in_cohomology(model, i, j))
            } else {
                attempt!(verify_diagram(model, i, j))
            };
            ensure!(ok, "square ({i}, {j}) does not commute");
        }
    }
    Outcome::ok()
}
