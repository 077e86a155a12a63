//! Command-line front end. Every subcommand prints one canonical JSON report.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arrangement_model::{decone, Arrangement, CentralArrangement};
use crate::contravariant::{
    decone_isometry, gram, singular_affine, singular_of_algebra, singular_projective, transition, SingularSpace,
};
use crate::error::Error;
use crate::exact_linear_algebra::Matrix;
use crate::flag_space::FlagComplex;
use crate::lattice::{build_lattice, FlagChain};
use crate::os_algebra::{OsAlgebra, ProjectiveModel};
use crate::rational;
use crate::verify::{corpus, random_arrangement, run_checks, CorpusEntry, EXTRA_THEOREMS, THEOREMS};

const BASIS_NOTE: &str = "projective coordinates are dual to the ε_0-image of the NBC basis of the pivot-0 decone";
const ORDER_NOTE: &str = "flats sorted by (codim, lexicographic index set); flags lexicographic in their flats";

#[derive(Parser, Debug)]
#[command(name = "arrangements", version, about = "Exact computations for weighted hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    /// Arrangement JSON file; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Space {
    Affine,
    Projective,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an arrangement and print its normalized form.
    Validate(InputArgs),
    /// Intersection lattice, Möbius values and Whitney numbers.
    Lattice(InputArgs),
    /// Dimensions and NBC bases of the OS algebra.
    OsDim(InputArgs),
    /// Flags per degree with their dual coordinates.
    Flags(InputArgs),
    /// Gram matrix of the contravariant form in one degree.
    Gram {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        degree: usize,
    },
    /// Singular subspace and the restricted form.
    Singular {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        space: Space,
        /// Decone pivot used when an affine space is requested for a central input.
        #[arg(long, default_value_t = 0)]
        pivot: usize,
    },
    /// Dehomogenize relative to one hyperplane.
    Decone {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 0)]
        pivot: usize,
    },
    /// ε* between projective and affine singular spaces.
    DeconeIsometry {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 0)]
        pivot: usize,
    },
    /// Transition map between two affine charts.
    Transition {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Run theorem checks on the built-in corpus or on one input.
    Verify {
        #[arg(long, conflicts_with = "theorem", required_unless_present = "theorem")]
        all: bool,
        #[arg(long)]
        theorem: Option<String>,
        /// Check this arrangement instead of the built-in corpus.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Deterministic random central arrangement.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long)]
        zero_sum: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub code: String,
    pub message: String,
}

/// Output of one invocation. Serialized through `serde_json::Value`, whose
/// maps are ordered, so key order is canonical.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub arguments: BTreeMap<String, Value>,
    pub input_sha256: Option<String>,
    pub results: Value,
    pub metadata: Value,
    pub passed: Option<bool>,
    pub error: Option<ErrorReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("reports serialize");
        let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

enum Failure {
    Usage(Error),
    Compute(Error),
}

struct Input {
    arrangement: Arrangement,
    digest: String,
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Input, Failure> {
    let mut bytes = Vec::new();
    match path {
        Some(p) => {
            bytes = std::fs::read(p).map_err(|e| Failure::Usage(Error::Parse(format!("{}: {e}", p.display()))))?;
        }
        None => {
            stdin
                .read_to_end(&mut bytes)
                .map_err(|e| Failure::Usage(Error::Parse(format!("standard input: {e}"))))?;
        }
    }
    let text = String::from_utf8(bytes.clone()).map_err(|e| Failure::Usage(Error::Parse(e.to_string())))?;
    let arrangement = Arrangement::from_json(&text).map_err(Failure::Usage)?;
    Ok(Input {
        arrangement,
        digest: hex::encode(Sha256::digest(&bytes)),
    })
}

fn matrix(m: &Matrix) -> Value {
    json!(m.to_strings())
}

fn rationals(v: &[rational::Rational]) -> Value {
    json!(rational::format_vec(v))
}

fn nbc(alg: &OsAlgebra) -> Value {
    json!((0..=alg.rank())
        .map(|p| alg.nbc_basis(p).iter().map(|m| m.indices().to_vec()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn flag_json(f: &FlagChain) -> Value {
    json!(f.flats().iter().map(|x| x.hyperplanes().to_vec()).collect::<Vec<_>>())
}

fn singular_json(s: &SingularSpace) -> Value {
    json!({
        "kind": s.kind,
        "degree": s.degree,
        "dimension": s.basis.dim(),
        "basis": s.basis.to_strings(),
        "lifts": matrix(&s.lifts),
        "restricted_gram": matrix(&s.restricted_gram),
        "rank": s.rank,
        "rank_deficient": s.rank_deficient,
    })
}

struct Outcome {
    results: Value,
    metadata: Value,
    passed: Option<bool>,
}

fn outcome(results: Value, metadata: Value) -> Outcome {
    Outcome {
        results,
        metadata,
        passed: None,
    }
}

fn central_of(a: &Arrangement) -> (CentralArrangement, bool) {
    (a.to_central(), matches!(a, Arrangement::Affine(_)))
}

fn os_algebra_of(a: &Arrangement) -> OsAlgebra {
    match a {
        Arrangement::Central(c) => OsAlgebra::central(c),
        Arrangement::Affine(x) => OsAlgebra::affine(x),
    }
}

fn kind_name(a: &Arrangement) -> &'static str {
    match a {
        Arrangement::Central(_) => "central",
        Arrangement::Affine(_) => "affine",
    }
}

fn lattice_report(a: &Arrangement) -> Outcome {
    let (c, coned) = central_of(a);
    let lattice = build_lattice(&c);
    let flats: Vec<Value> = lattice
        .moebius()
        .into_iter()
        .map(|(x, mu)| {
            let covers: Vec<Vec<usize>> = lattice
                .covers(&x)
                .expect("flat from the lattice")
                .map(|y| y.hyperplanes().to_vec())
                .collect();
            json!({"codim": x.codim(), "hyperplanes": x.hyperplanes(), "moebius": mu, "covers": covers})
        })
        .collect();
    outcome(
        json!({"rank": lattice.rank(), "flats": flats, "whitney_numbers": lattice.whitney_numbers()}),
        json!({"coned": coned, "ordering": ORDER_NOTE}),
    )
}

fn os_dim_report(a: &Arrangement) -> Outcome {
    let alg = os_algebra_of(a);
    let dims: Vec<usize> = (0..=alg.rank()).map(|p| alg.dim(p)).collect();
    let (c, _) = central_of(a);
    let model = ProjectiveModel::new(&c);
    let projective: Vec<usize> = (0..=model.top_degree()).map(|p| model.projective_dim(p)).collect();
    outcome(
        json!({
            "rank": alg.rank(),
            "dimensions": dims,
            "total_dimension": dims.iter().sum::<usize>(),
            "projective_dimensions": projective,
            "circuits": alg.circuits(),
            "nbc_basis": nbc(&alg),
        }),
        json!({"kind": kind_name(a), "hyperplane_order": "input order"}),
    )
}

fn flags_report(a: &Arrangement) -> Outcome {
    let (c, coned) = central_of(a);
    let model = ProjectiveModel::new(&c);
    let fc = FlagComplex::new(&model);
    let degrees: Vec<Value> = (0..=model.algebra().rank())
        .map(|p| {
            let flags: Vec<Value> = fc
                .lattice()
                .flags_of_length(p)
                .iter()
                .map(|f| json!({"flats": flag_json(f), "dual": rationals(&fc.flag_to_dual(f).coords)}))
                .collect();
            json!({"degree": p, "dimension": fc.dim(p), "flags": flags})
        })
        .collect();
    outcome(
        json!({"degrees": degrees, "nbc_basis": nbc(model.algebra())}),
        json!({"coned": coned, "ordering": ORDER_NOTE, "coordinates": "a flag F is recorded as (⟨F, e_C⟩) over the NBC basis C"}),
    )
}

fn gram_report(a: &Arrangement, degree: usize) -> Outcome {
    let alg = os_algebra_of(a);
    let g = gram(&alg, degree);
    outcome(
        json!({
            "degree": degree,
            "matrix": matrix(&g.matrix),
            "symmetric": g.matrix.is_symmetric(),
            "rank": g.matrix.rank(),
            "basis": alg.nbc_basis(degree).iter().map(|m| m.indices().to_vec()).collect::<Vec<_>>(),
        }),
        json!({"kind": kind_name(a), "coordinates": "dual NBC basis"}),
    )
}

fn singular_report(a: &Arrangement, space: Space, pivot: usize) -> Result<Outcome, Error> {
    Ok(match (space, a) {
        (Space::Affine, Arrangement::Affine(x)) => {
            outcome(singular_json(&singular_affine(x)), json!({"kind": "affine", "coordinates": "dual NBC basis"}))
        }
        (Space::Affine, Arrangement::Central(c)) => {
            let (aff, _) = decone(c, pivot)?;
            outcome(
                singular_json(&singular_affine(&aff)),
                json!({"kind": "central", "deconed_at": pivot, "coordinates": "dual NBC basis of the decone"}),
            )
        }
        (Space::Projective, _) => {
            let (c, coned) = central_of(a);
            let model = ProjectiveModel::new(&c);
            outcome(
                singular_json(&singular_projective(&model)),
                json!({"coned": coned, "basis": BASIS_NOTE, "lifts": "annihilator representatives in the central flag space"}),
            )
        }
    })
}

fn decone_report(a: &Arrangement, pivot: usize) -> Result<Outcome, Error> {
    let (c, coned) = central_of(a);
    let (aff, change) = decone(&c, pivot)?;
    Ok(outcome(
        json!({
            "affine": serde_json::to_value(aff.to_spec()).expect("spec serializes"),
            "pivot": pivot,
            "index_map": change.index_map,
            "coordinate_change": matrix(&change.basis),
            "appended_coordinates": change.appended,
        }),
        json!({"coned": coned}),
    ))
}

fn decone_isometry_report(a: &Arrangement, pivot: usize) -> Result<Outcome, Error> {
    let (c, coned) = central_of(a);
    let model = ProjectiveModel::new(&c);
    let iso = decone_isometry(&model, pivot)?;
    let chart = model.chart(pivot)?;
    Ok(Outcome {
        results: json!({
            "pivot": pivot,
            "degree": iso.degree,
            "eps_star": matrix(&iso.eps_star),
            "projective": singular_json(&iso.projective),
            "affine": singular_json(&iso.affine),
            "image": matrix(&iso.image),
            "transported_gram": matrix(&iso.transported_gram),
            "bijective": iso.bijective,
            "isometric": iso.isometric,
            "chart_index_map": chart.index_map(),
        }),
        metadata: json!({"coned": coned, "basis": BASIS_NOTE}),
        passed: Some(iso.bijective && iso.isometric),
    })
}

fn transition_report(a: &Arrangement, from: usize, to: usize) -> Result<Outcome, Error> {
    let (c, coned) = central_of(a);
    let model = ProjectiveModel::new(&c);
    let t = transition(&model, from, to)?;
    let blocks: Vec<Value> = t
        .blocks
        .iter()
        .enumerate()
        .map(|(p, m)| json!({"degree": p, "matrix": matrix(m)}))
        .collect();
    let ci = model.chart(from)?;
    let cj = model.chart(to)?;
    let on_sing = singular_of_algebra(&ci.algebra);
    let image = t.top().mul(&on_sing.basis.matrix());
    Ok(outcome(
        json!({
            "from": from,
            "to": to,
            "blocks": blocks,
            "from_index_map": ci.index_map(),
            "to_index_map": cj.index_map(),
            "singular_image": matrix(&image),
        }),
        json!({"coned": coned, "coordinates": "dual NBC bases of the two decones"}),
    ))
}

fn verify_report(theorem: &Option<String>, input: Option<Input>) -> Result<Outcome, Failure> {
    let theorems: Vec<&str> = match theorem {
        None => THEOREMS.to_vec(),
        Some(t) => {
            if !THEOREMS.contains(&t.as_str()) && !EXTRA_THEOREMS.contains(&t.as_str()) {
                return Err(Failure::Usage(Error::InvalidParameters(format!("unknown theorem '{t}'"))));
            }
            vec![t.as_str()]
        }
    };
    let (entries, source) = match input {
        Some(i) => {
            let (c, _) = central_of(&i.arrangement);
            let affine = match &i.arrangement {
                Arrangement::Affine(x) => Some(x.clone()),
                Arrangement::Central(_) => None,
            };
            (
                vec![CorpusEntry {
                    name: "input".into(),
                    arrangement: c,
                    affine,
                }],
                "input",
            )
        }
        None => (corpus(), "built-in corpus"),
    };
    let checks = run_checks(&theorems, &entries).map_err(Failure::Compute)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    Ok(Outcome {
        results: json!({
            "checks": checks,
            "total": checks.len(),
            "failed": failed,
            "arrangements": entries.iter().map(|e| e.name.clone()).collect::<Vec<_>>(),
        }),
        metadata: json!({"source": source, "balanced_checks": "checks that need Σa = 0 use a_0 = -Σ_(i≥1) a_i when the weights do not already sum to zero"}),
        passed: Some(failed == 0),
    })
}

/// Parses `args` (including the program name), runs the command, writes the
/// report to `stdout` and diagnostics to `stderr`, and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    let (name, arguments) = describe(&cli.command);
    let mut report = Report {
        command: name.into(),
        arguments,
        input_sha256: None,
        results: Value::Null,
        metadata: Value::Null,
        passed: None,
        error: None,
    };
    let result = execute(&cli.command, stdin, &mut report);
    let code = match result {
        Ok(out) => {
            report.results = out.results;
            report.metadata = out.metadata;
            report.passed = out.passed;
            i32::from(out.passed == Some(false))
        }
        Err(f) => {
            let (code, e) = match f {
                Failure::Usage(e) => (2, e),
                Failure::Compute(e) => (1, e),
            };
            let _ = writeln!(stderr, "error [{}]: {e}", e.code());
            report.error = Some(ErrorReport {
                code: e.code().into(),
                message: e.to_string(),
            });
            code
        }
    };
    let _ = stdout.write_all(report.to_json().as_bytes());
    code
}

fn describe(c: &Command) -> (&'static str, BTreeMap<String, Value>) {
    let mut a = BTreeMap::new();
    let mut put = |k: &str, v: Value| {
        a.insert(k.to_string(), v);
    };
    let name = match c {
        Command::Validate(_) => "validate",
        Command::Lattice(_) => "lattice",
        Command::OsDim(_) => "os-dim",
        Command::Flags(_) => "flags",
        Command::Gram { degree, .. } => {
            put("degree", json!(degree));
            "gram"
        }
        Command::Singular { space, pivot, .. } => {
            put("space", json!(if *space == Space::Affine { "affine" } else { "projective" }));
            put("pivot", json!(pivot));
            "singular"
        }
        Command::Decone { pivot, .. } => {
            put("pivot", json!(pivot));
            "decone"
        }
        Command::DeconeIsometry { pivot, .. } => {
            put("pivot", json!(pivot));
            "decone-isometry"
        }
        Command::Transition { from, to, .. } => {
            put("from", json!(from));
            put("to", json!(to));
            "transition"
        }
        Command::Verify { all, theorem, .. } => {
            put("all", json!(all));
            put("theorem", json!(theorem));
            "verify"
        }
        Command::Random { seed, dim, n, zero_sum, .. } => {
            put("seed", json!(seed));
            put("dim", json!(dim));
            put("n", json!(n));
            put("zero_sum", json!(zero_sum));
            "random"
        }
    };
    put("format", json!("json"));
    (name, a)
}

fn execute(c: &Command, stdin: &mut dyn Read, report: &mut Report) -> Result<Outcome, Failure> {
    let mut load = |path: &Option<PathBuf>| -> Result<Arrangement, Failure> {
        let i = read_input(path, stdin)?;
        report.input_sha256 = Some(i.digest);
        Ok(i.arrangement)
    };
    let compute = Failure::Compute;
    match c {
        Command::Validate(i) => {
            let a = load(&i.input)?;
            let spec = a.to_spec();
            Ok(outcome(
                json!({
                    "valid": true,
                    "kind": kind_name(&a),
                    "ambient_dim": spec.ambient_dim,
                    "hyperplanes": spec.hyperplanes.len(),
                    "normalized": serde_json::to_value(&spec).expect("spec serializes"),
                }),
                json!({"normalization": "each form scaled so its first nonzero coefficient is 1"}),
            ))
        }
        Command::Lattice(i) => Ok(lattice_report(&load(&i.input)?)),
        Command::OsDim(i) => Ok(os_dim_report(&load(&i.input)?)),
        Command::Flags(i) => Ok(flags_report(&load(&i.input)?)),
        Command::Gram { input, degree } => Ok(gram_report(&load(&input.input)?, *degree)),
        Command::Singular { input, space, pivot } => singular_report(&load(&input.input)?, *space, *pivot).map_err(compute),
        Command::Decone { input, pivot } => decone_report(&load(&input.input)?, *pivot).map_err(compute),
        Command::DeconeIsometry { input, pivot } => decone_isometry_report(&load(&input.input)?, *pivot).map_err(compute),
        Command::Transition { input, from, to } => transition_report(&load(&input.input)?, *from, *to).map_err(compute),
        Command::Verify { theorem, input, .. } => {
            let i = match input {
                Some(_) => {
                    let i = read_input(input, stdin)?;
                    report.input_sha256 = Some(i.digest.clone());
                    Some(i)
                }
                None => None,
            };
            verify_report(theorem, i)
        }
        Command::Random { seed, dim, n, zero_sum, .. } => {
            let arr = random_arrangement(*seed, *dim, *n, *zero_sum).map_err(Failure::Usage)?;
            Ok(outcome(
                json!({"arrangement": serde_json::to_value(arr.to_spec()).expect("spec serializes")}),
                json!({"generator": "ChaCha8", "coefficient_range": [-3, 3]}),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const POINTS: &str = r#"{"type":"affine","ambient_dim":1,"hyperplanes":[{"coeffs":["1"],"constant":"0"},{"coeffs":["1"],"constant":"-1"}],"weights":["1","2"]}"#;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["arrangements"];
        argv.extend(args);
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gram_of_points() {
        let (code, out, _) = call(&["gram", "--degree", "1"], POINTS);
        assert_eq!(code, 0);
        let r = Report::from_json(&out).unwrap();
        assert_eq!(r.results["matrix"], json!([["1", "0"], ["0", "2"]]));
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        assert_eq!(r.input_sha256.as_deref().map(str::len), Some(64));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["validate"], "{not json").0, 2);
        assert_eq!(call(&["gram"], POINTS).0, 2);
        let (code, out, err) = call(&["decone-isometry", "--pivot", "9"], POINTS);
        assert_eq!(code, 1);
        assert!(err.contains("index_out_of_range"));
        assert_eq!(Report::from_json(&out).unwrap().error.unwrap().code, "index_out_of_range");
        assert_eq!(call(&["transition", "--from", "1", "--to", "1"], POINTS).0, 1);
        assert_eq!(call(&["verify", "--theorem", "nope"], "").0, 2);
    }

    #[test]
    fn singular_spaces() {
        let (_, out, _) = call(&["singular", "--space", "affine"], POINTS);
        let r = Report::from_json(&out).unwrap();
        assert_eq!(r.results["basis"], json!([["2", "-1"]]));
        assert_eq!(r.results["restricted_gram"], json!([["6"]]));
        let (_, out, _) = call(&["singular", "--space", "projective"], POINTS);
        let r = Report::from_json(&out).unwrap();
        assert_eq!(r.results["restricted_gram"], json!([["6"]]));
        assert_eq!(r.metadata["coned"], json!(true));
    }

    #[test]
    fn random_round_trips_into_validate() {
        let (code, out, _) = call(&["random", "--seed", "3", "--dim", "3", "--n", "5", "--zero-sum"], "");
        assert_eq!(code, 0);
        let r = Report::from_json(&out).unwrap();
        let spec = serde_json::to_string(&r.results["arrangement"]).unwrap();
        let (code, again, _) = call(&["validate"], &spec);
        assert_eq!(code, 0);
        assert_eq!(Report::from_json(&again).unwrap().results["normalized"], r.results["arrangement"]);
        assert_eq!(call(&["random", "--seed", "3", "--dim", "3", "--n", "5", "--zero-sum"], "").1, out);
    }

    #[test]
    fn every_subcommand_round_trips() {
        let runs: &[&[&str]] = &[
            &["validate"],
            &["lattice"],
            &["os-dim"],
            &["flags"],
            &["decone", "--pivot", "1"],
            &["decone-isometry", "--pivot", "2"],
            &["transition", "--from", "0", "--to", "2"],
            &["verify", "--theorem", "chain-map"],
        ];
        for args in runs {
            let (code, out, _) = call(args, POINTS);
            assert_eq!(code, 0, "{args:?}");
            let r = Report::from_json(&out).unwrap();
            assert_eq!(r.to_json(), out, "{args:?}");
        }
    }
}
