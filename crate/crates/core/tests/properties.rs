use arrangements::arrangement_model::ArrangementSpec;
use arrangements::cli::{ErrorReport, Report};
use arrangements::flag_space::FlagComplex;
use arrangements::lattice::build_lattice;
use arrangements::os_algebra::{OsAlgebra, ProjectiveModel};
use arrangements::rational::{format, frac};
use arrangements::verify::random_arrangement;
use arrangements::{Arrangement, Matrix, Rational, SubspaceBasis};
use proptest::prelude::*;
use serde_json::json;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(rational(), c), r)
            .prop_map(move |rows| Matrix::from_rows(c, rows).unwrap())
    })
}

fn arrangement() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 2usize..=3).prop_flat_map(|(seed, dim)| (Just(seed), Just(dim), dim..=dim + 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(m in matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
        let k = m.kernel_basis();
        if k.dim() > 0 {
            prop_assert!(m.mul(&k.matrix()).is_zero());
        }
    }

    #[test]
    fn annihilator_dimension(m in matrix()) {
        let ann = m.left_annihilator();
        prop_assert_eq!(ann.dim() + m.rank(), m.rows());
        if ann.dim() > 0 {
            prop_assert!(ann.matrix().transpose().mul(&m).is_zero());
        }
    }

    #[test]
    fn canonical_bases_ignore_spanning_set(m in matrix(), c in rational()) {
        let cols = m.columns();
        let a = SubspaceBasis::span(m.rows(), cols.clone());
        let mut shuffled: Vec<_> = cols.iter().rev().cloned().collect();
        if c != Rational::from_integer(0.into()) {
            shuffled = shuffled.iter().map(|v| v.iter().map(|x| x * &c).collect()).collect();
        }
        shuffled.push(m.mul_vec(&vec![Rational::from_integer(1.into()); m.cols()]));
        prop_assert_eq!(a.clone(), SubspaceBasis::span(m.rows(), shuffled));
        prop_assert_eq!(a, m.column_space());
    }

    #[test]
    fn arrangement_json_round_trip((seed, dim, n) in arrangement()) {
        let arr = Arrangement::Central(random_arrangement(seed, dim, n, false).unwrap());
        let text = arr.to_spec().to_json();
        let spec = ArrangementSpec::from_json(&text).unwrap();
        prop_assert_eq!(&spec, &arr.to_spec());
        prop_assert_eq!(Arrangement::from_json(&text).unwrap(), arr);
    }

    #[test]
    fn os_dimensions_match_whitney_numbers((seed, dim, n) in arrangement()) {
        let arr = random_arrangement(seed, dim, n, false).unwrap();
        let alg = OsAlgebra::central(&arr);
        let whitney = build_lattice(&arr).whitney_numbers();
        for (p, w) in whitney.iter().enumerate() {
            prop_assert_eq!(alg.dim(p) as u64, *w);
        }
    }

    #[test]
    fn flag_complex_is_exact((seed, dim, n) in arrangement()) {
        let arr = random_arrangement(seed, dim, n, false).unwrap();
        let model = ProjectiveModel::new(&arr);
        let fc = FlagComplex::new(&model);
        let l = model.algebra().rank();
        for p in 1..l {
            let prev = fc.differential(p - 1);
            let next = fc.differential(p);
            prop_assert!(next.mul(&prev).is_zero());
            prop_assert_eq!(prev.rank() + next.rank(), fc.dim(p));
        }
    }

    #[test]
    fn report_round_trip(cmd in "[a-z-]{1,12}", n in 0usize..5, q in rational(), passed in any::<Option<bool>>(), failed in any::<bool>()) {
        let mut arguments = std::collections::BTreeMap::new();
        arguments.insert("degree".to_string(), json!(n));
        let report = Report {
            command: cmd,
            arguments,
            input_sha256: Some("ab".repeat(32)),
            results: json!({"matrix": [[format(&q)]], "dims": vec![n; n]}),
            metadata: json!({"coned": passed.unwrap_or(false)}),
            passed,
            error: failed.then(|| ErrorReport { code: "parse".into(), message: "bad".into() }),
        };
        let text = report.to_json();
        let back = Report::from_json(&text).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(back.to_json(), text);
    }
}
