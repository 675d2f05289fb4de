//! Dispatch from parsed commands to library calls. Each handler returns
//! the JSON payload together with its table rendering so the output mode
//! is decided once, in `main`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use contact_surgery::algebra::{
    mapping_torus_h1, smith_normal_form, surgery_h1_s3, ClassInfo, IntegerMatrix, Rational,
};
use contact_surgery::brieskorn::report;
use contact_surgery::criterion::{decide, stein_decide, ComponentComparison, Hypothesis, Verdict};
use contact_surgery::handleforms::{
    contact_positivity_at, contact_sample_points, sigma_sample_points, sigma_transversality_at,
    verify_handle_identities, CheckReport,
};
use contact_surgery::legendrian::ComparisonComponent;
use contact_surgery::torus::{boundary_slopes, Slope};

use crate::args::Command;

/// Failures split by exit code: violated mathematical preconditions
/// report as 1, unreadable or malformed inputs as 2.
#[derive(Debug)]
pub enum CliError {
    Math(String),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Math(m) | CliError::Input(m) => m,
        }
    }
}

macro_rules! math_error_from {
    ($($ty:ty),+ $(,)?) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::Math(e.to_string())
            }
        }
    )+};
}

math_error_from!(
    contact_surgery::algebra::AlgebraError,
    contact_surgery::torus::TorusError,
    contact_surgery::legendrian::LegendrianError,
    contact_surgery::criterion::CriterionError,
    contact_surgery::brieskorn::BrieskornError,
    contact_surgery::handleforms::HandleformsError,
);

/// A finished command: the JSON payload, its table rendering, and whether
/// a verification item inside it failed.
pub struct Outcome {
    pub payload: Value,
    pub table: String,
    pub failed: bool,
}

impl Outcome {
    fn passing<T: Serialize>(data: &T, table: String) -> Outcome {
        Outcome { payload: payload(data), table, failed: false }
    }
}

/// Serializes through a `Value` so maps print in key order, then stamps
/// the schema version.
fn payload<T: Serialize>(data: &T) -> Value {
    let mut value = serde_json::to_value(data).expect("payloads are plain data");
    value
        .as_object_mut()
        .expect("payloads are objects")
        .insert("schema".to_string(), Value::from(1));
    value
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Brieskorn { n } => brieskorn(*n),
        Command::Distinguish { input } => distinguish(input),
        Command::Slopes { n, n1, n2, n3 } => slopes(*n, *n1, *n2, *n3),
        Command::Homology { input, mapping_torus } => {
            homology(input.as_deref(), mapping_torus.as_deref())
        }
        Command::VerifyHandle { samples, param } => verify_handle(*samples, param),
        Command::Snf { input } => snf(input),
    }
}

fn brieskorn(n: i64) -> Result<Outcome, CliError> {
    let family = report(n)?;
    let mut table = String::new();
    let _ = writeln!(
        table,
        "family n = {}: {} candidates, bounds {}..={}",
        family.n,
        family.candidates.len(),
        family.lower_bound,
        family.upper_bound
    );
    let names: Vec<String> =
        family.candidates.iter().map(|[m, p]| format!("({m},{p})")).collect();
    let _ = writeln!(table, "candidates: {}", names.join(" "));
    for pair in &family.pairs {
        let reason = match pair.reason {
            Some(contact_surgery::brieskorn::NonIsotopyReason::SameM) => " [same-m]",
            Some(contact_surgery::brieskorn::NonIsotopyReason::CPlusSeparates) => " [c-plus]",
            None => "",
        };
        let _ = writeln!(
            table,
            "({},{}) vs ({},{}): {}{}",
            pair.a[0], pair.a[1], pair.b[0], pair.b[1], pair.verdict, reason
        );
    }
    Ok(Outcome::passing(&family, table))
}

/// On-disk form of a comparison: the shared link with two stabilization
/// assignments per component, the hypothesis licensing the test, and one
/// divisibility record per component (ignored under stein-s3).
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComparisonFile {
    components: Vec<ComparisonComponent>,
    hypothesis: Hypothesis,
    #[serde(default)]
    class_info: Vec<ClassInfo>,
}

#[derive(Serialize)]
struct DistinguishReport {
    hypothesis: Hypothesis,
    verdict: &'static str,
    witnesses: Vec<usize>,
}

fn distinguish(path: &Path) -> Result<Outcome, CliError> {
    let file: ComparisonFile = read_json(path)?;
    let verdict = match file.hypothesis {
        Hypothesis::SteinS3 => {
            // Both assignments stabilize the same link, so the shared
            // baseline rotation cancels and the offsets decide equality.
            let mut first = Vec::with_capacity(file.components.len());
            let mut second = Vec::with_capacity(file.components.len());
            for c in &file.components {
                let (a, b) = c.profiles()?;
                first.push(a.rotation_offset());
                second.push(b.rotation_offset());
            }
            stein_decide(&first, &second)?
        }
        Hypothesis::WeaklyFillable | Hypothesis::NonVanishingCPlus => {
            if file.class_info.len() != file.components.len() {
                return Err(CliError::Math(format!(
                    "class_info lists {} entries for {} components",
                    file.class_info.len(),
                    file.components.len()
                )));
            }
            let mut comparisons = Vec::with_capacity(file.components.len());
            for (c, info) in file.components.iter().zip(&file.class_info) {
                comparisons.push(ComponentComparison::new(c.s, c.p1, c.p2, *info)?);
            }
            decide(&comparisons, file.hypothesis)?
        }
    };
    let (tag, witnesses) = match verdict {
        Verdict::NotIsotopic { witnesses } => ("not-isotopic", witnesses),
        Verdict::Inconclusive => ("inconclusive", Vec::new()),
    };
    let hypothesis_name = match file.hypothesis {
        Hypothesis::WeaklyFillable => "weakly-fillable",
        Hypothesis::NonVanishingCPlus => "c-plus",
        Hypothesis::SteinS3 => "stein-s3",
    };
    let mut table = String::new();
    let _ = writeln!(table, "hypothesis: {hypothesis_name}");
    let _ = writeln!(table, "verdict: {tag}");
    if witnesses.is_empty() {
        let _ = writeln!(table, "witnesses: none");
    } else {
        let labels: Vec<&str> =
            witnesses.iter().map(|&i| file.components[i].label.as_str()).collect();
        let _ = writeln!(table, "witnesses: {}", labels.join(" "));
    }
    let data =
        DistinguishReport { hypothesis: file.hypothesis, verdict: tag, witnesses };
    Ok(Outcome::passing(&data, table))
}

#[derive(Serialize)]
struct SlopeReport {
    n: i64,
    n1: i64,
    n2: i64,
    n3: i64,
    s1: Slope,
    s2: Slope,
    s3: Slope,
}

fn slopes(n: i64, n1: i64, n2: i64, n3: i64) -> Result<Outcome, CliError> {
    let (s1, s2, s3) = boundary_slopes(n, n1, n2, n3)?;
    let table = format!("t1: {s1}\nt2: {s2}\nt3: {s3}\n");
    Ok(Outcome::passing(&SlopeReport { n, n1, n2, n3, s1, s2, s3 }, table))
}

#[derive(Serialize)]
struct HomologyReport {
    free_rank: usize,
    group: String,
    source: &'static str,
    torsion: Vec<i64>,
}

fn parse_mapping_torus(text: &str) -> Result<IntegerMatrix, CliError> {
    let entries: Vec<i64> = text
        .split(',')
        .map(|part| part.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            CliError::Input(format!("--mapping-torus expects four integers, got {text:?}"))
        })?;
    if entries.len() != 4 {
        return Err(CliError::Input(format!(
            "--mapping-torus expects four integers, got {}",
            entries.len()
        )));
    }
    Ok(IntegerMatrix::from_rows(&[
        vec![entries[0], entries[1]],
        vec![entries[2], entries[3]],
    ])?)
}

fn homology(input: Option<&Path>, mapping_torus: Option<&str>) -> Result<Outcome, CliError> {
    let (source, presentation) = match (input, mapping_torus) {
        (Some(path), None) => {
            let linking: IntegerMatrix = read_json(path)?;
            ("linking-matrix", surgery_h1_s3(&linking)?)
        }
        (None, Some(entries)) => {
            ("mapping-torus", mapping_torus_h1(&parse_mapping_torus(entries)?)?)
        }
        _ => unreachable!("the argument parser enforces exactly one source"),
    };
    let structure = presentation.structure()?;
    let data = HomologyReport {
        free_rank: structure.free_rank(),
        group: structure.description(),
        source,
        torsion: structure.torsion().to_vec(),
    };
    let torsion_text = if data.torsion.is_empty() {
        "none".to_string()
    } else {
        data.torsion.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
    };
    let table = format!(
        "group: {}\nfree rank: {}\ntorsion: {}\nsource: {}\n",
        data.group, data.free_rank, torsion_text, data.source
    );
    Ok(Outcome::passing(&data, table))
}

#[derive(Serialize)]
struct Scan {
    all_positive: bool,
    points: usize,
}

#[derive(Serialize)]
struct HandleReport {
    checks: Vec<CheckReport>,
    contact_positivity: Scan,
    cutoff_parameter: Rational,
    pass: bool,
    sigma_transversality: Scan,
}

fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Input(format!("expected an integer or p/q fraction, got {text:?}"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            Rational::new(p, q).map_err(|_| bad())
        }
        None => Ok(Rational::integer(text.trim().parse().map_err(|_| bad())?)),
    }
}

fn verify_handle(samples: usize, param_text: &str) -> Result<Outcome, CliError> {
    if samples == 0 {
        return Err(CliError::Input("--samples must be at least 1".to_string()));
    }
    let param = parse_rational(param_text)?;
    let checks = verify_handle_identities();

    let contact_points = contact_sample_points(samples);
    let mut contact_all_positive = true;
    for point in &contact_points {
        contact_all_positive &= contact_positivity_at(point)?.is_positive();
    }

    let sigma_points = sigma_sample_points(&param, samples)?;
    let mut sigma_all_positive = true;
    for point in &sigma_points {
        sigma_all_positive &= sigma_transversality_at(&param, point)?.is_positive();
    }

    let pass = checks.iter().all(|c| c.pass) && contact_all_positive && sigma_all_positive;
    let mut table = String::new();
    for check in &checks {
        if check.pass {
            let _ = writeln!(table, "{}: ok", check.name);
        } else {
            let _ = writeln!(table, "{}: FAIL ({})", check.name, check.detail);
        }
    }
    let describe = |all: bool| if all { "all positive" } else { "NOT all positive" };
    let _ = writeln!(
        table,
        "contact positivity: {} points, {}",
        contact_points.len(),
        describe(contact_all_positive)
    );
    let _ = writeln!(
        table,
        "sigma transversality at {}: {} points, {}",
        param,
        sigma_points.len(),
        describe(sigma_all_positive)
    );
    let _ = writeln!(table, "overall: {}", if pass { "pass" } else { "FAIL" });

    let data = HandleReport {
        checks,
        contact_positivity: Scan {
            all_positive: contact_all_positive,
            points: contact_points.len(),
        },
        cutoff_parameter: param,
        pass,
        sigma_transversality: Scan {
            all_positive: sigma_all_positive,
            points: sigma_points.len(),
        },
    };
    Ok(Outcome { payload: payload(&data), table, failed: !pass })
}

#[derive(Serialize)]
struct SnfReport<'a> {
    d: &'a IntegerMatrix,
    input: &'a IntegerMatrix,
    u: &'a IntegerMatrix,
    v: &'a IntegerMatrix,
}

fn snf(path: &Path) -> Result<Outcome, CliError> {
    let matrix: IntegerMatrix = read_json(path)?;
    let decomposition = smith_normal_form(&matrix)?;
    let data = SnfReport {
        d: decomposition.d(),
        input: &matrix,
        u: decomposition.u(),
        v: decomposition.v(),
    };
    let table = format!(
        "U\n{}\nD\n{}\nV\n{}\n",
        decomposition.u(),
        decomposition.d(),
        decomposition.v()
    );
    Ok(Outcome::passing(&data, table))
}
