//! `mirabolic`: command-line front end for orbit classification, moment-map
//! images and representation labels. Every subcommand prints one JSON
//! document; the exit code is 0 on success, 1 on a mismatch, 2 on an error.

mod input;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mirabolic::classify::{classify_auto, classify_with_certificate};
use mirabolic::corpus::{orbit_corpus, random_conjugate, DEFAULT_SEED};
use mirabolic::moment::{selection_record, SelectionRecord};
use mirabolic::rep::{all_sign_vectors, verify_duflo, DufloReport, Signs};
use mirabolic::{
    attach_rep_gl, attach_rep_p, check_geometry, classify, dense_selection, enumerate_selections,
    project_to_p_star, stabilizer_dim, symbolic_image, Error, Field, IndexSelection,
    MirabolicOrbitDatum, OrbitDatum, PRepLabel, RepLabel,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use input::{matrix_json, parse_hints, parse_input, parse_signs, read_source, Input};

#[derive(Parser)]
#[command(
    name = "mirabolic",
    version,
    about = "Mirabolic coadjoint orbits, moment-map images and attached representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a functional given as a matrix, an orbit spec (its
    /// projection pr'(xi)) or a mirabolic spec (its realization).
    Classify {
        input: String,
        /// Field for a matrix input.
        #[arg(long, default_value = "C")]
        field: Field,
        /// Comma-separated eigenvalue candidates for the reduced block.
        #[arg(long)]
        eigen: Option<String>,
        /// Project the input onto p* first instead of rejecting a nonzero last column.
        #[arg(long)]
        project: bool,
        /// Include the conjugating element of P_n.
        #[arg(long)]
        certificate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Index selections of an orbit.
    Enumerate {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Moment-map images of the selected points.
    Moment {
        input: String,
        /// Only the dense selection.
        #[arg(long, conflicts_with_all = ["all", "selection"])]
        dense: bool,
        /// Every selection (the default).
        #[arg(long)]
        all: bool,
        /// One selection as JSON, e.g. '{"0":{"1":2}}'.
        #[arg(long)]
        selection: Option<String>,
        /// Also classify each image directly and compare.
        #[arg(long)]
        oracle: bool,
        /// Run the full geometric check over all selections.
        #[arg(long, conflicts_with_all = ["dense", "selection"])]
        check: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Representation attached to an orbit or mirabolic orbit.
    Attach {
        input: String,
        /// Signs per real class with a real eigenvalue, as JSON, e.g. '[[0,1]]'.
        #[arg(long)]
        signs: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Restriction of a GL label to the mirabolic subgroup.
    Restrict {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// End-to-end check of one orbit or of the bounded corpus.
    Verify {
        input: Option<String>,
        /// Verify every corpus orbit of size at most this.
        #[arg(long, conflicts_with = "input")]
        corpus: Option<usize>,
        /// Field of the corpus.
        #[arg(long, default_value = "C")]
        field: Field,
        /// Signs for a single orbit; by default every assignment is checked.
        #[arg(long, requires = "input")]
        signs: Option<String>,
        /// Random conjugations of the dense image per orbit.
        #[arg(long, default_value_t = 2)]
        conjugations: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also run the geometric check over all selections.
        #[arg(long)]
        geometry: bool,
        #[command(flatten)]
        common: Common,
    },
}

enum Outcome {
    Ok,
    Mismatch,
}

type CmdResult = Result<(serde_json::Value, Outcome), String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match &cli.command {
        Command::Classify {
            input,
            field,
            eigen,
            project,
            certificate,
            common,
        } => (
            cmd_classify(input, *field, eigen.as_deref(), *project, *certificate),
            &common.out,
        ),
        Command::Enumerate { input, common } => (cmd_enumerate(input), &common.out),
        Command::Moment {
            input,
            dense,
            all: _,
            selection,
            oracle,
            check,
            common,
        } => (
            cmd_moment(input, *dense, selection.as_deref(), *oracle, *check),
            &common.out,
        ),
        Command::Attach {
            input,
            signs,
            common,
        } => (cmd_attach(input, signs.as_deref()), &common.out),
        Command::Restrict { input, common } => (cmd_restrict(input), &common.out),
        Command::Verify {
            input,
            corpus,
            field,
            signs,
            conjugations,
            seed,
            geometry,
            common,
        } => {
            let opts = VerifyOptions {
                conjugations: *conjugations,
                seed: *seed,
                geometry: *geometry,
            };
            (
                cmd_verify(input.as_deref(), *corpus, *field, signs.as_deref(), &opts),
                &common.out,
            )
        }
    };
    match result.and_then(|(value, outcome)| emit(&value, out.as_deref()).map(|_| outcome)) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(value: &serde_json::Value, out: Option<&str>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{path}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(v: &T) -> Result<serde_json::Value, String> {
    serde_json::to_value(v).map_err(|e| e.to_string())
}

fn load(path: &str) -> Result<Input, String> {
    parse_input(path, &read_source(path)?)
}

fn load_orbit(path: &str) -> Result<OrbitDatum, String> {
    match load(path)? {
        Input::Orbit(o) => Ok(o),
        other => Err(format!(
            "{path}: expected an orbit spec, got a {}",
            other.kind()
        )),
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

#[derive(Serialize)]
struct ClassifyReport {
    #[serde(flatten)]
    datum: MirabolicOrbitDatum,
    stabilizer_dim: usize,
    normal_form: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjugator: Option<Vec<Vec<String>>>,
}

fn cmd_classify(
    path: &str,
    field: Field,
    eigen: Option<&str>,
    project: bool,
    certificate: bool,
) -> CmdResult {
    let (x, field, spec_hints) = match load(path)? {
        Input::Matrix(m) => (m, field, None),
        Input::Orbit(o) => (
            project_to_p_star(&o.realize_xi()),
            o.field(),
            Some(o.eigenvalue_hints()),
        ),
        Input::Mirabolic(m) => (m.realize(), m.field(), Some(m.a_part().eigenvalue_hints())),
        other => return Err(format!("{path}: cannot classify a {}", other.kind())),
    };
    let x = if project { project_to_p_star(&x) } else { x };
    let hints = match eigen {
        Some(s) => Some(parse_hints(s)?),
        None => spec_hints,
    };
    let c = match hints {
        Some(h) => classify_with_certificate(&x, field, &h),
        None => classify_auto(&x, field),
    }
    .map_err(err)?;
    let report = ClassifyReport {
        stabilizer_dim: stabilizer_dim(&c.normal_form),
        normal_form: matrix_json(&c.normal_form),
        conjugator: certificate.then(|| matrix_json(&c.conjugator)),
        datum: c.datum,
    };
    Ok((json(&report)?, Outcome::Ok))
}

#[derive(Serialize)]
struct SelectionEntry {
    selection: IndexSelection,
    positions: Vec<usize>,
    dense: bool,
}

fn cmd_enumerate(path: &str) -> CmdResult {
    let o = load_orbit(path)?;
    let dense = dense_selection(&o);
    let selections: Vec<SelectionEntry> = enumerate_selections(&o)
        .into_iter()
        .map(|s| SelectionEntry {
            positions: s.positions(&o),
            dense: s == dense,
            selection: s,
        })
        .collect();
    let value = serde_json::json!({ "orbit": json(&o)?, "count": selections.len(), "selections": json(&selections)? });
    Ok((value, Outcome::Ok))
}

fn cmd_moment(
    path: &str,
    dense: bool,
    selection: Option<&str>,
    oracle: bool,
    check: bool,
) -> CmdResult {
    let o = load_orbit(path)?;
    if o.is_empty() {
        return Err(format!(
            "{path}: the zero-dimensional orbit has no selections"
        ));
    }
    if check {
        let report = check_geometry(&o).map_err(err)?;
        let outcome = if report.passed() {
            Outcome::Ok
        } else {
            Outcome::Mismatch
        };
        return Ok((json(&report)?, outcome));
    }
    let selections = if let Some(s) = selection {
        let sel: IndexSelection =
            serde_json::from_str(s).map_err(|e| format!("--selection: {e}"))?;
        sel.validate(&o).map_err(err)?;
        vec![sel]
    } else if dense {
        vec![dense_selection(&o)]
    } else {
        enumerate_selections(&o)
    };
    let records: Vec<SelectionRecord> = selections
        .iter()
        .map(|s| selection_record(&o, s, oracle))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let mut value = serde_json::json!({ "orbit": json(&o)?, "records": json(&records)? });
    let mut outcome = Outcome::Ok;
    if oracle {
        let all = records.iter().all(|r| r.agree == Some(true));
        value["all_agree"] = all.into();
        if !all {
            outcome = Outcome::Mismatch;
        }
    }
    Ok((value, outcome))
}

fn cmd_attach(path: &str, signs: Option<&str>) -> CmdResult {
    let signs = signs.map(parse_signs).transpose()?;
    let value = match load(path)? {
        Input::Orbit(o) => {
            let label = attach_rep_gl(&o, signs.as_ref()).map_err(err)?;
            serde_json::json!({ "orbit": json(&o)?, "label": json(&label)?, "display": label.to_string() })
        }
        Input::Mirabolic(m) => {
            let label = attach_rep_p(&m, signs.as_ref()).map_err(err)?;
            serde_json::json!({ "orbit": json(&m)?, "label": json(&label)?, "display": label.to_string() })
        }
        other => {
            return Err(format!(
                "{path}: cannot attach a representation to a {}",
                other.kind()
            ))
        }
    };
    Ok((value, Outcome::Ok))
}

fn cmd_restrict(path: &str) -> CmdResult {
    let label: RepLabel = match load(path)? {
        Input::Label(l) => l,
        other => {
            return Err(format!(
                "{path}: expected a representation label, got a {}",
                other.kind()
            ))
        }
    };
    let r: PRepLabel = label.restrict_to_p().map_err(err)?;
    let value = serde_json::json!({
        "label": json(&label)?,
        "restriction": json(&r)?,
        "display": r.to_string(),
    });
    Ok((value, Outcome::Ok))
}

struct VerifyOptions {
    conjugations: usize,
    seed: u64,
    geometry: bool,
}

#[derive(Serialize)]
struct Checks {
    duflo: bool,
    dense_oracle: bool,
    conjugation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    geometry: Option<bool>,
}

#[derive(Serialize)]
struct OrbitVerdict {
    orbit: OrbitDatum,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Checks>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    reports: Vec<DufloReport>,
}

#[derive(Serialize, Default)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    errors: usize,
}

fn cmd_verify(
    path: Option<&str>,
    corpus: Option<usize>,
    field: Field,
    signs: Option<&str>,
    opts: &VerifyOptions,
) -> CmdResult {
    let signs = signs.map(parse_signs).transpose()?;
    let (orbits, single) = match (path, corpus) {
        (Some(p), _) => (vec![load_orbit(p)?], true),
        (None, Some(n)) => (orbit_corpus(field, n), false),
        (None, None) => return Err("verify needs an orbit spec or --corpus".into()),
    };
    let mut summary = Summary::default();
    let mut results = Vec::new();
    for (idx, o) in orbits.iter().enumerate() {
        // per-orbit stream so results do not depend on processing order
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(idx as u64);
        let v = verify_orbit(o, signs.as_ref(), opts, single, &mut rng);
        summary.total += 1;
        match v.status.as_str() {
            "pass" => summary.passed += 1,
            "fail" => summary.failed += 1,
            s if s.starts_with("skipped") => summary.skipped += 1,
            _ => summary.errors += 1,
        }
        results.push(v);
    }
    let outcome = if summary.failed + summary.errors == 0 {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    };
    let mut value = serde_json::json!({
        "seed": opts.seed,
        "conjugations": opts.conjugations,
        "results": json(&results)?,
        "summary": json(&summary)?,
    });
    if !single {
        value["field"] = json(&field)?;
    }
    Ok((value, outcome))
}

fn verify_orbit(
    o: &OrbitDatum,
    signs: Option<&Signs>,
    opts: &VerifyOptions,
    keep: bool,
    rng: &mut ChaCha8Rng,
) -> OrbitVerdict {
    let mut verdict = OrbitVerdict {
        orbit: o.clone(),
        status: String::new(),
        checks: None,
        witnesses: Vec::new(),
        reports: Vec::new(),
    };
    let sign_sets = match signs {
        Some(s) => vec![s.clone()],
        None => all_sign_vectors(o),
    };
    let mut reports = Vec::new();
    for s in &sign_sets {
        match verify_duflo(o, Some(s)) {
            Ok(r) => reports.push(r),
            Err(Error::UnsupportedOrbitShape(msg)) => {
                verdict.status = "skipped:UnsupportedOrbitShape".into();
                verdict.witnesses.push(msg);
                return verdict;
            }
            Err(e) => {
                verdict.status = format!("error:{e}");
                return verdict;
            }
        }
    }
    let duflo = reports.iter().all(|r| r.agree);
    for r in reports.iter().filter(|r| !r.agree) {
        verdict.witnesses.push(format!(
            "signs {:?}: restriction {} but attached {}",
            r.signs, r.restriction, r.attached
        ));
    }

    let result = (|| -> Result<(bool, bool, Option<bool>), Error> {
        let dense = dense_selection(o);
        let image = symbolic_image(o, &dense)?;
        let record = selection_record(o, &dense, true)?;
        let dense_oracle = record.agree == Some(true);
        if !dense_oracle {
            verdict.witnesses.push(format!(
                "dense image {} but oracle {:?}",
                image, record.oracle
            ));
        }
        let mut conjugation = true;
        let hints = image.a_part().eigenvalue_hints();
        for _ in 0..opts.conjugations {
            let y = random_conjugate(&image.realize(), rng);
            let got = classify(&y, o.field(), &hints)?;
            if got != image {
                conjugation = false;
                verdict
                    .witnesses
                    .push(format!("conjugate of {image} classified as {got}"));
            }
        }
        let geometry = if opts.geometry {
            let g = check_geometry(o)?;
            verdict.witnesses.extend(g.witnesses.iter().cloned());
            Some(g.passed())
        } else {
            None
        };
        Ok((dense_oracle, conjugation, geometry))
    })();
    match result {
        Ok((dense_oracle, conjugation, geometry)) => {
            let ok = duflo && dense_oracle && conjugation && geometry != Some(false);
            verdict.status = if ok { "pass" } else { "fail" }.into();
            verdict.checks = Some(Checks {
                duflo,
                dense_oracle,
                conjugation,
                geometry,
            });
        }
        Err(e) => verdict.status = format!("error:{e}"),
    }
    if keep {
        verdict.reports = reports;
    }
    verdict
}
