//! Weighted central and affine arrangements, their JSON schema, coning and deconing.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linear_algebra::Matrix;
use crate::rational::{self, Rational};

/// A hyperplane `coeffs · x + constant = 0`, stored with its first nonzero
/// coefficient scaled to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub label: String,
}

impl Hyperplane {
    /// Normalizes the defining form; fails when the linear part vanishes.
    pub fn new(coeffs: Vec<Rational>, constant: Rational, label: impl Into<String>) -> Option<Self> {
        let lead = coeffs.iter().find(|c| !c.is_zero())?.clone();
        Some(Hyperplane {
            coeffs: coeffs.iter().map(|c| c / &lead).collect(),
            constant: constant / lead,
            label: label.into(),
        })
    }

    fn same_locus(&self, other: &Hyperplane) -> bool {
        self.coeffs == other.coeffs && self.constant == other.constant
    }

    fn to_spec(&self, central: bool) -> HyperplaneSpec {
        HyperplaneSpec {
            coeffs: rational::format_vec(&self.coeffs),
            constant: (!central).then(|| rational::format(&self.constant)),
            label: Some(self.label.clone()),
        }
    }
}

/// Central arrangement `H_0, …, H_n` in `Q^{ambient_dim}` with weights `a_0, …, a_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralArrangement {
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane>,
    weights: Vec<Rational>,
}

/// Affine arrangement in `Q^{ambient_dim}` with one weight per hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineArrangement {
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane>,
    weights: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arrangement {
    Central(CentralArrangement),
    Affine(AffineArrangement),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Central,
    Affine,
}

/// Raw JSON form of an arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementSpec {
    #[serde(rename = "type")]
    pub kind: Kind,
    pub ambient_dim: usize,
    pub hyperplanes: Vec<HyperplaneSpec>,
    pub weights: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneSpec {
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ArrangementSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("arrangement spec serializes")
    }
}

fn check_hyperplanes(
    ambient_dim: usize,
    raw: &[HyperplaneSpec],
    central: bool,
) -> Result<Vec<Hyperplane>> {
    let mut out: Vec<Hyperplane> = Vec::with_capacity(raw.len());
    for (index, h) in raw.iter().enumerate() {
        if h.coeffs.len() != ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "hyperplane {index} has {} coefficients in ambient dimension {ambient_dim}",
                h.coeffs.len()
            )));
        }
        let coeffs = rational::parse_vec(&h.coeffs)?;
        let constant = match &h.constant {
            Some(c) => rational::parse(c)?,
            None => Rational::zero(),
        };
        if central && !constant.is_zero() {
            return Err(Error::Parse(format!(
                "central hyperplane {index} has nonzero constant {}",
                rational::format(&constant)
            )));
        }
        let label = h.label.clone().unwrap_or_else(|| format!("H{index}"));
        let plane = Hyperplane::new(coeffs, constant, label).ok_or(Error::ZeroForm { index })?;
        if let Some(first) = out.iter().position(|p| p.same_locus(&plane)) {
            return Err(Error::DuplicateHyperplane {
                first,
                second: index,
            });
        }
        out.push(plane);
    }
    Ok(out)
}

/// Checks a raw arrangement and returns its normalized form.
pub fn validate(spec: &ArrangementSpec) -> Result<Arrangement> {
    let central = spec.kind == Kind::Central;
    let hyperplanes = check_hyperplanes(spec.ambient_dim, &spec.hyperplanes, central)?;
    if spec.weights.len() != hyperplanes.len() {
        return Err(Error::WeightLengthMismatch {
            hyperplanes: hyperplanes.len(),
            weights: spec.weights.len(),
        });
    }
    let weights = rational::parse_vec(&spec.weights)?;
    Ok(if central {
        Arrangement::Central(CentralArrangement::new(spec.ambient_dim, hyperplanes, weights)?)
    } else {
        Arrangement::Affine(AffineArrangement::new(spec.ambient_dim, hyperplanes, weights)?)
    })
}

impl Arrangement {
    pub fn from_json(text: &str) -> Result<Self> {
        validate(&ArrangementSpec::from_json(text)?)
    }

    pub fn to_spec(&self) -> ArrangementSpec {
        match self {
            Arrangement::Central(c) => c.to_spec(),
            Arrangement::Affine(a) => a.to_spec(),
        }
    }

    /// The central arrangement itself, or the cone of an affine one.
    pub fn to_central(&self) -> CentralArrangement {
        match self {
            Arrangement::Central(c) => c.clone(),
            Arrangement::Affine(a) => cone(a),
        }
    }
}

fn check_common(ambient_dim: usize, hyperplanes: &[Hyperplane], weights: &[Rational]) -> Result<()> {
    if weights.len() != hyperplanes.len() {
        return Err(Error::WeightLengthMismatch {
            hyperplanes: hyperplanes.len(),
            weights: weights.len(),
        });
    }
    for (index, h) in hyperplanes.iter().enumerate() {
        if h.coeffs.len() != ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "hyperplane {index} has {} coefficients in ambient dimension {ambient_dim}",
                h.coeffs.len()
            )));
        }
        if h.coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm { index });
        }
        if let Some(first) = hyperplanes[..index].iter().position(|p| p.same_locus(h)) {
            return Err(Error::DuplicateHyperplane {
                first,
                second: index,
            });
        }
    }
    Ok(())
}

impl CentralArrangement {
    pub fn new(ambient_dim: usize, hyperplanes: Vec<Hyperplane>, weights: Vec<Rational>) -> Result<Self> {
        if hyperplanes.is_empty() {
            return Err(Error::NoHyperplanes);
        }
        if let Some(index) = hyperplanes.iter().position(|h| !h.constant.is_zero()) {
            return Err(Error::Parse(format!("central hyperplane {index} has nonzero constant")));
        }
        check_common(ambient_dim, &hyperplanes, &weights)?;
        Ok(CentralArrangement {
            ambient_dim,
            hyperplanes,
            weights,
        })
    }

    /// Builds from integer linear forms with default labels.
    pub fn from_int_forms(forms: &[&[i64]], weights: Vec<Rational>) -> Result<Self> {
        let ambient_dim = forms.first().map_or(0, |f| f.len());
        let hyperplanes = forms
            .iter()
            .enumerate()
            .map(|(i, f)| {
                Hyperplane::new(f.iter().map(|&x| rational::int(x)).collect(), Rational::zero(), format!("H{i}"))
                    .ok_or(Error::ZeroForm { index: i })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient_dim, hyperplanes, weights)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight_sum(&self) -> Rational {
        self.weights.iter().sum()
    }

    pub fn with_weights(&self, weights: Vec<Rational>) -> Result<Self> {
        Self::new(self.ambient_dim, self.hyperplanes.clone(), weights)
    }

    /// Same hyperplanes, with `a_0` replaced by `-Σ_{i≥1} a_i`.
    pub fn with_balanced_weights(&self) -> Self {
        let mut w = self.weights.clone();
        w[0] = -w[1..].iter().sum::<Rational>();
        self.with_weights(w).expect("same length")
    }

    pub fn to_spec(&self) -> ArrangementSpec {
        ArrangementSpec {
            kind: Kind::Central,
            ambient_dim: self.ambient_dim,
            hyperplanes: self.hyperplanes.iter().map(|h| h.to_spec(true)).collect(),
            weights: rational::format_vec(&self.weights),
        }
    }
}

impl AffineArrangement {
    pub fn new(ambient_dim: usize, hyperplanes: Vec<Hyperplane>, weights: Vec<Rational>) -> Result<Self> {
        check_common(ambient_dim, &hyperplanes, &weights)?;
        Ok(AffineArrangement {
            ambient_dim,
            hyperplanes,
            weights,
        })
    }

    /// The points `z_1, …, z_n` of the complex line, weighted.
    pub fn points(points: &[Rational], weights: Vec<Rational>) -> Result<Self> {
        let hyperplanes = points
            .iter()
            .enumerate()
            .map(|(i, z)| Hyperplane::new(vec![Rational::one()], -z.clone(), format!("z{}", i + 1)).expect("nonzero"))
            .collect();
        Self::new(1, hyperplanes, weights)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn to_spec(&self) -> ArrangementSpec {
        ArrangementSpec {
            kind: Kind::Affine,
            ambient_dim: self.ambient_dim,
            hyperplanes: self.hyperplanes.iter().map(|h| h.to_spec(false)).collect(),
            weights: rational::format_vec(&self.weights),
        }
    }
}

/// Central arrangement of the projective closure: hyperplane 0 is `x_0 = 0`
/// (at infinity) and hyperplane `i` is the homogenization of the `i`-th affine
/// form. The new weight `a_0 = -Σ a_i` makes the weights sum to zero.
pub fn cone(aff: &AffineArrangement) -> CentralArrangement {
    let dim = aff.ambient_dim + 1;
    let mut infinity = vec![Rational::zero(); dim];
    infinity[0] = Rational::one();
    let mut hyperplanes = vec![Hyperplane::new(infinity, Rational::zero(), "infinity").expect("nonzero")];
    for h in &aff.hyperplanes {
        let mut coeffs = Vec::with_capacity(dim);
        coeffs.push(h.constant.clone());
        coeffs.extend(h.coeffs.iter().cloned());
        hyperplanes.push(Hyperplane::new(coeffs, Rational::zero(), h.label.clone()).expect("nonzero linear part"));
    }
    let mut weights = vec![-aff.weights.iter().sum::<Rational>()];
    weights.extend(aff.weights.iter().cloned());
    CentralArrangement::new(dim, hyperplanes, weights).expect("cone of a valid affine arrangement is valid")
}

/// Linear coordinate change used to decone: `y = basis · x`, with `y_0 = f_pivot`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    pub pivot: usize,
    /// Rows are the new coordinate functionals written in the old coordinates.
    pub basis: Matrix,
    /// Old coordinate indices appended after `f_pivot` to complete the basis.
    pub appended: Vec<usize>,
    /// `index_map[k]` is the central index of the `k`-th affine hyperplane.
    pub index_map: Vec<usize>,
}

/// Dehomogenizes relative to hyperplane `pivot`.
pub fn decone(c: &CentralArrangement, pivot: usize) -> Result<(AffineArrangement, CoordinateChange)> {
    if pivot >= c.len() {
        return Err(Error::IndexOutOfRange {
            index: pivot,
            len: c.len(),
        });
    }
    let m = c.ambient_dim;
    let mut rows = vec![c.hyperplanes[pivot].coeffs.clone()];
    let mut appended = Vec::new();
    for k in 0..m {
        if rows.len() == m {
            break;
        }
        let mut e = vec![Rational::zero(); m];
        e[k] = Rational::one();
        let mut trial = rows.clone();
        trial.push(e.clone());
        if Matrix::from_rows(m, trial).expect("square rows").rank() == rows.len() + 1 {
            rows.push(e);
            appended.push(k);
        }
    }
    let basis = Matrix::from_rows(m, rows).expect("rows of length m");
    // f = c' · basis, so basisᵀ c'ᵀ = fᵀ
    let bt = basis.transpose();
    let mut hyperplanes = Vec::with_capacity(c.len() - 1);
    let mut weights = Vec::with_capacity(c.len() - 1);
    let mut index_map = Vec::with_capacity(c.len() - 1);
    for (i, h) in c.hyperplanes.iter().enumerate() {
        if i == pivot {
            continue;
        }
        let rhs = Matrix::from_columns(m, std::slice::from_ref(&h.coeffs)).expect("length m");
        let y = bt.solve(&rhs).expect("basis is invertible").column(0);
        let plane = Hyperplane::new(y[1..].to_vec(), y[0].clone(), h.label.clone())
            .expect("a form not proportional to the pivot has a nonzero affine part");
        hyperplanes.push(plane);
        weights.push(c.weights[i].clone());
        index_map.push(i);
    }
    let aff = AffineArrangement::new(m - 1, hyperplanes, weights)?;
    Ok((
        aff,
        CoordinateChange {
            pivot,
            basis,
            appended,
            index_map,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn spec(text: &str) -> Result<Arrangement> {
        Arrangement::from_json(text)
    }

    #[test]
    fn validate_examples() {
        let ok = spec(
            r#"{"type":"central","ambient_dim":2,"hyperplanes":[{"coeffs":["1","0"]},{"coeffs":["0","1"]}],"weights":["1","1"]}"#,
        )
        .unwrap();
        assert!(matches!(ok, Arrangement::Central(ref c) if c.len() == 2));

        let dup = spec(
            r#"{"type":"central","ambient_dim":2,"hyperplanes":[{"coeffs":["1","0"]},{"coeffs":["2","0"]}],"weights":["1","1"]}"#,
        );
        assert_eq!(dup.unwrap_err(), Error::DuplicateHyperplane { first: 0, second: 1 });

        let short = spec(
            r#"{"type":"central","ambient_dim":2,"hyperplanes":[{"coeffs":["1","0"]},{"coeffs":["0","1"]},{"coeffs":["1","1"]}],"weights":["1","1"]}"#,
        );
        assert_eq!(
            short.unwrap_err(),
            Error::WeightLengthMismatch { hyperplanes: 3, weights: 2 }
        );

        let zero = spec(r#"{"type":"affine","ambient_dim":1,"hyperplanes":[{"coeffs":["0"],"constant":"1"}],"weights":["1"]}"#);
        assert_eq!(zero.unwrap_err(), Error::ZeroForm { index: 0 });

        let bad_constant = spec(
            r#"{"type":"central","ambient_dim":1,"hyperplanes":[{"coeffs":["1"],"constant":"2"}],"weights":["1"]}"#,
        );
        assert!(matches!(bad_constant, Err(Error::Parse(_))));

        let empty = spec(r#"{"type":"central","ambient_dim":2,"hyperplanes":[],"weights":[]}"#);
        assert_eq!(empty.unwrap_err(), Error::NoHyperplanes);
    }

    #[test]
    fn affine_duplicates_compare_loci() {
        // 2x - 2 = 0 and x - 1 = 0 are the same point
        let dup = spec(
            r#"{"type":"affine","ambient_dim":1,"hyperplanes":[{"coeffs":["2"],"constant":"-2"},{"coeffs":["1"],"constant":"-1"}],"weights":["1","1"]}"#,
        );
        assert!(matches!(dup, Err(Error::DuplicateHyperplane { .. })));
        // parallel lines are fine
        let par = spec(
            r#"{"type":"affine","ambient_dim":2,"hyperplanes":[{"coeffs":["1","0"],"constant":"0"},{"coeffs":["1","0"],"constant":"1"}],"weights":["1","1"]}"#,
        );
        assert!(par.is_ok());
    }

    #[test]
    fn cone_of_points() {
        let z = [int(0), int(2), int(-1)];
        let aff = AffineArrangement::points(&z, ints(&[1, 1, 1])).unwrap();
        let c = cone(&aff);
        assert_eq!(c.ambient_dim(), 2);
        assert_eq!(c.weights(), ints(&[-3, 1, 1, 1]).as_slice());
        assert_eq!(c.hyperplanes()[0].coeffs, ints(&[1, 0]));
        // v - z u = 0 up to scale
        for (h, zi) in c.hyperplanes()[1..].iter().zip(&z) {
            let target = [-zi.clone(), int(1)];
            let lhs = &h.coeffs[0] * &target[1];
            let rhs = &h.coeffs[1] * &target[0];
            assert_eq!(lhs, rhs);
        }
        assert!(c.weight_sum().is_zero());
    }

    #[test]
    fn cone_of_empty() {
        let aff = AffineArrangement::new(2, vec![], vec![]).unwrap();
        let c = cone(&aff);
        assert_eq!(c.len(), 1);
        assert_eq!(c.hyperplanes()[0].coeffs, ints(&[1, 0, 0]));
        assert_eq!(c.weights(), &[int(0)]);
    }

    #[test]
    fn decone_recovers_points() {
        let z = [int(3), int(-1)];
        let aff = AffineArrangement::points(&z, ints(&[2, 5])).unwrap();
        let (back, change) = decone(&cone(&aff), 0).unwrap();
        assert_eq!(back, aff);
        assert_eq!(change.basis, Matrix::identity(2));
        assert_eq!(change.index_map, vec![1, 2]);
    }

    #[test]
    fn decone_concurrent_lines() {
        let c = CentralArrangement::from_int_forms(&[&[1, 0], &[0, 1], &[1, -1]], ints(&[1, 1, 1])).unwrap();
        let (aff, change) = decone(&c, 0).unwrap();
        assert_eq!(aff.ambient_dim(), 1);
        assert_eq!(change.appended, vec![1]);
        let h = aff.hyperplanes();
        assert_eq!((h[0].coeffs.clone(), h[0].constant.clone()), (ints(&[1]), int(0)));
        assert_eq!((h[1].coeffs.clone(), h[1].constant.clone()), (ints(&[1]), int(-1)));
        assert_eq!(
            decone(&c, 7).unwrap_err(),
            Error::IndexOutOfRange { index: 7, len: 3 }
        );
    }

    #[test]
    fn decone_general_pivot() {
        let c = CentralArrangement::from_int_forms(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]], ints(&[1, 2, -3])).unwrap();
        for j in 0..3 {
            let (aff, change) = decone(&c, j).unwrap();
            assert_eq!(aff.len(), 2);
            assert_eq!(aff.ambient_dim(), 2);
            assert_eq!(change.basis.rank(), 3);
            let w: Vec<_> = change.index_map.iter().map(|&i| c.weights()[i].clone()).collect();
            assert_eq!(aff.weights(), w.as_slice());
        }
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"type":"affine","ambient_dim":2,"hyperplanes":[{"coeffs":["1","-1"],"constant":"1/2","label":"a"}],"weights":["-3/2"]}"#;
        let s = ArrangementSpec::from_json(text).unwrap();
        assert_eq!(ArrangementSpec::from_json(&s.to_json()).unwrap(), s);
        let arr = validate(&s).unwrap();
        assert_eq!(validate(&arr.to_spec()).unwrap(), arr);
    }
}
