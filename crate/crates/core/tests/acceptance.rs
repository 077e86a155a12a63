//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::{Command, ExitCode};

use arrangements::contravariant::{
    decone_isometry, gram, singular_affine, singular_of_algebra, singular_projective, transition,
};
use arrangements::exact_linear_algebra::congruence;
use arrangements::os_algebra::ProjectiveModel;
use arrangements::rational::int;
use arrangements::verify::{corpus, run_check};
use arrangements::{cone, AffineArrangement, Matrix, SubspaceBasis};

type Criterion = (&'static str, Box<dyn Fn() -> Verdict>);

struct Verdict {
    passed: bool,
    detail: String,
}

fn checks(theorems: &[&str]) -> Verdict {
    let mut failed = Vec::new();
    let mut total = 0;
    for e in corpus() {
        for t in theorems {
            total += 1;
            let r = run_check(t, &e).expect("known theorem");
            if !r.passed {
                failed.push(format!("{t} on {}: {}", r.arrangement, r.detail));
            }
        }
    }
    Verdict {
        passed: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{total} checks")
        } else {
            format!("{} of {total} checks failed; first: {}", failed.len(), failed[0])
        },
    }
}

fn points_example() -> Verdict {
    let mut problems = Vec::new();
    let points = AffineArrangement::points(&[int(0), int(1)], vec![int(1), int(2)]).unwrap();
    let sing = singular_affine(&points);
    let six = Matrix::from_ints(&[&[6]]);
    if sing.basis != SubspaceBasis::span(2, [vec![int(2), int(-1)]]) {
        problems.push(format!("affine Sing is {:?}", sing.basis.to_strings()));
    }
    if sing.restricted_gram != six {
        problems.push(format!("affine Gram is {:?}", sing.restricted_gram.to_strings()));
    }
    let central = cone(&points);
    if central.weights() != [int(-3), int(1), int(2)] {
        problems.push("coned weights differ from (-3, 1, 2)".into());
    }
    let model = ProjectiveModel::new(&central);
    let proj = singular_projective(&model);
    if proj.restricted_gram != six {
        problems.push(format!("projective Gram is {:?}", proj.restricted_gram.to_strings()));
    }
    let iso = decone_isometry(&model, 0).unwrap();
    if !(iso.bijective && iso.isometric && iso.affine.restricted_gram == six) {
        problems.push("decone isometry at pivot 0 fails".into());
    }
    let l = model.top_degree();
    let s0 = singular_of_algebra(&model.chart(0).unwrap().algebra);
    for j in 1..3 {
        let cj = &model.chart(j).unwrap().algebra;
        let sj = singular_of_algebra(cj);
        let image = transition(&model, 0, j).unwrap().top().mul(&s0.basis.matrix());
        let transported = congruence(&gram(cj, l).matrix, &image);
        let iso = decone_isometry(&model, j).unwrap();
        if image.rank() != s0.rank
            || SubspaceBasis::span(image.rows(), image.columns()) != sj.basis
            || transported != six
            || sj.rank != 1
            || !(iso.bijective && iso.isometric)
        {
            problems.push(format!("transport to pivot {j} fails"));
        }
    }
    Verdict {
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            "Sing = span(2F_1 - F_2), Gram [[6]] at every pivot".into()
        } else {
            problems.join("; ")
        },
    }
}

fn cli_reproducible() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_arrangements"))
            .args(["verify", "--all"])
            .output()
            .expect("binary runs")
    };
    let a = run();
    let b = run();
    let passed = a.status.code() == Some(0) && b.status.code() == Some(0) && a.stdout == b.stdout;
    Verdict {
        passed,
        detail: format!(
            "exit codes {:?}/{:?}, {} bytes, identical: {}",
            a.status.code(),
            b.status.code(),
            a.stdout.len(),
            a.stdout == b.stdout
        ),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("points example end to end", Box::new(points_example)),
        ("exactness of (A, ∂) and (F, d)", Box::new(|| checks(&["exactness-os", "exactness-flag"]))),
        ("nondegenerate flag/NBC pairing", Box::new(|| checks(&["nondegeneracy"]))),
        ("flag relations", Box::new(|| checks(&["relations"]))),
        ("orthogonality of Sing and im d", Box::new(|| checks(&["orthogonality"]))),
        ("ψ chain map and S(F, dF') identity", Box::new(|| checks(&["chain-map", "contravariant-identity"]))),
        ("decone splitting", Box::new(|| checks(&["splitting"]))),
        (
            "transition functions",
            Box::new(|| {
                let mut v = checks(&[
                    "transition-formula",
                    "transition-p1",
                    "cocycle",
                    "transition-isometry",
                    "diagram",
                ]);
                let modulo = checks(&["diagram-cohomology"]);
                v.detail = format!(
                    "{}; modulo ω̂_â ∧ Â^(ℓ-1) the square commutes: {} ({})",
                    v.detail, modulo.passed, modulo.detail
                );
                v
            }),
        ),
        ("dimension oracles", Box::new(|| checks(&["whitney", "sing-dimension"]))),
        ("verify --all reproducible", Box::new(cli_reproducible)),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        failures += usize::from(!v.passed);
        println!("{} {:>2} {name}: {}", if v.passed { "PASS" } else { "FAIL" }, k + 1, v.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
