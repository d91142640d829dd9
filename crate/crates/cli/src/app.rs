//! Command dispatch: analyze, chern, genus, charge, verify.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use branecharge_core::charges::{
    charge_dim3, charge_surface, chi_cy3, chi_l_cy3, oracle_check, verify_grr,
};
use branecharge_core::fan::Fan;
use branecharge_core::intersection::{ChowRing, DivisorClass, GradedClass};
use branecharge_core::lcg::Lcg64;
use branecharge_core::linalg::rat_int;
use branecharge_core::polytope::LatticePolytope;
use branecharge_core::Error as CoreError;

use crate::input::{self, InputDocument, InputError};
use crate::report::{self, Style};

const AFTER_HELP: &str = "\
Input formats (detected by the first non-whitespace byte):

  JSON    {\"dim\": 2, \"vertices\": [[-1,-1],[2,-1],[-1,2]], \"divisor\": [1,0,0]}
          \"dim\" is the lattice rank, \"vertices\" an array of integer
          arrays of length dim, \"divisor\" an optional integer array in
          canonical facet order.

  matrix  header line \"d k\" (two integers), then a d-by-k integer matrix
          whose k columns are the points; if d > k the matrix is read
          transposed (rows are points). Blank lines and lines beginning
          with '#' are ignored.

Divisor coefficients are always consumed in canonical facet order: facets
sorted lexicographically by their primitive inward normal (listed by the
analyze command). The --divisor flag overrides a divisor stored in the
input document.

Exit codes: 0 success; 1 input or parse error; 2 unsupported variety
(non-reflexive, non-smooth, incomplete fan, or dimension out of range);
3 internal invariant violation.

Set BRANECHARGE_NO_COLOR to disable ANSI styling in text output.";

#[derive(Parser)]
#[command(
    name = "branecharge",
    version,
    about = "Exact D-brane charges and arithmetic genera on anticanonical \
             hypersurfaces of smooth toric varieties from reflexive polytopes",
    after_long_help = AFTER_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Reflexivity, smoothness, completeness, f-vector and fan summary.
    Analyze {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chern classes, Todd class and the codimension-2 wall sum.
    Chern {
        input: PathBuf,
        /// Truncation degree for the Todd class (default: the dimension).
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Arithmetic genus chi(Y, O(D)|_Y) on a 4-dimensional variety, plus
    /// the spanning-bundle genus chi(Y, L) at D = -3K.
    Genus {
        input: PathBuf,
        /// Comma-separated integer coefficients in canonical facet order.
        #[arg(long)]
        divisor: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Charge of the brane attached to D, with the dimension-specific
    /// closed form, the general formula and the lattice-point oracle.
    Charge {
        input: PathBuf,
        /// Comma-separated integer coefficients in canonical facet order.
        #[arg(long)]
        divisor: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep seeded random divisors through the charge verifier.
    Verify {
        input: PathBuf,
        /// Number of random divisors to draw.
        #[arg(long, default_value_t = 20)]
        trials: u64,
        /// Seed of the 64-bit linear congruential generator.
        #[arg(long, default_value_t = 20260810)]
        seed: u64,
        /// Coefficients are drawn uniformly from [-max-coeff, max-coeff].
        #[arg(long, default_value_t = 3)]
        max_coeff: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

pub struct Outcome {
    pub code: i32,
    pub output: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<InputError> for Failure {
    fn from(err: InputError) -> Self {
        Failure {
            code: 1,
            message: format!("input error: {err}"),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(err: CoreError) -> Self {
        let code = match err {
            CoreError::NotFullDimensional { .. }
            | CoreError::Unbounded { .. }
            | CoreError::NonIntegerCoefficients => 1,
            CoreError::NotReflexive { .. }
            | CoreError::NotSmooth { .. }
            | CoreError::NotComplete
            | CoreError::FaceNotOfThisPolytope
            | CoreError::DimensionMismatch { .. }
            | CoreError::DimensionUnsupported(_)
            | CoreError::NotNef => 2,
            CoreError::InternalNonTermination => 3,
        };
        Failure {
            code,
            message: format!("error: {err}"),
        }
    }
}

/// Parse arguments and execute; never panics on user input.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            return Outcome {
                code,
                output: err.to_string(),
            };
        }
    };

    let result = match cli.command {
        Command::Analyze { input, format } => analyze(&input, format),
        Command::Chern {
            input,
            max_degree,
            format,
        } => chern(&input, max_degree, format),
        Command::Genus {
            input,
            divisor,
            format,
        } => genus(&input, divisor.as_deref(), format),
        Command::Charge {
            input,
            divisor,
            format,
        } => charge(&input, divisor.as_deref(), format),
        Command::Verify {
            input,
            trials,
            seed,
            max_coeff,
            format,
        } => verify(&input, trials, seed, max_coeff, format),
    };

    match result {
        Ok(output) => Outcome { code: 0, output },
        Err(Failure { code, message }) => Outcome {
            code,
            output: message,
        },
    }
}

struct Prepared {
    document: InputDocument,
    polytope: LatticePolytope,
    fan: Fan,
}

fn prepare(path: &Path) -> Result<Prepared, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| Failure::input(format!("cannot read {}: {err}", path.display())))?;
    let document = input::parse_document(&text)?;
    let polytope = LatticePolytope::from_vertices(document.dim, document.vertices.clone())?;
    let fan = Fan::normal_fan(&polytope);
    Ok(Prepared {
        document,
        polytope,
        fan,
    })
}

/// The divisor for this invocation: --divisor beats the document, absent
/// means zero. Length must match the facet count.
fn resolve_divisor(
    prepared: &Prepared,
    flag: Option<&str>,
) -> Result<DivisorClass, Failure> {
    let coefficients = match flag {
        Some(text) => Some(input::parse_divisor_list(text)?),
        None => prepared.document.divisor.clone(),
    };
    match coefficients {
        None => Ok(DivisorClass::zero()),
        Some(list) => {
            let facets = prepared.polytope.facets().len();
            if list.len() != facets {
                return Err(Failure::input(format!(
                    "divisor has {} coefficients but the polytope has {} facets; \
                     coefficients are indexed by the canonical facet order \
                     (lexicographic by normal; see `analyze`)",
                    list.len(),
                    facets
                )));
            }
            Ok(DivisorClass::from_integers(&list))
        }
    }
}

fn style_for(format: Format) -> Style {
    match format {
        Format::Text => Style::from_env(),
        Format::Json => Style::plain(),
    }
}

fn analyze(path: &Path, format: Format) -> Result<String, Failure> {
    let prepared = prepare(path)?;
    let polytope = &prepared.polytope;
    let fan = &prepared.fan;
    let reflexive = polytope.is_reflexive();
    let smooth = fan.is_smooth();
    let complete = fan.is_complete();
    let cones_per_dim: Vec<usize> = (0..=fan.dim()).map(|d| fan.cone_count(d)).collect();

    match format {
        Format::Json => {
            let facets: Vec<Value> = polytope
                .facets()
                .iter()
                .map(|f| {
                    json!({
                        "normal": f.normal.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "offset": f.offset.to_string(),
                    })
                })
                .collect();
            let doc = json!({
                "command": "analyze",
                "polytope": {
                    "dim": polytope.dim(),
                    "vertices": polytope.vertices().len(),
                    "dropped_points": polytope.dropped_points().len(),
                    "hash": format!("{:016x}", polytope.hash()),
                    "reflexive": reflexive,
                    "f_vector": polytope.f_vector(),
                    "facets": facets,
                },
                "fan": {
                    "rays": fan.rays().len(),
                    "max_cones": fan.cone_count(fan.dim()),
                    "smooth": smooth,
                    "complete": complete,
                    "cones_per_dim": cones_per_dim,
                },
            });
            Ok(format!("{:#}\n", doc))
        }
        Format::Text => {
            let style = style_for(format);
            let mut out = String::new();
            out.push_str(&format!(
                "{} dim={} vertices={} dropped={} hash={:016x}\n",
                style.heading("polytope:"),
                polytope.dim(),
                polytope.vertices().len(),
                polytope.dropped_points().len(),
                polytope.hash()
            ));
            out.push_str(&format!(
                "reflexive={reflexive} f-vector={:?}\n",
                polytope.f_vector()
            ));
            out.push_str(
                "facets (canonical order, lexicographic by normal; divisor \
                 coefficients use this order):\n",
            );
            for (i, f) in polytope.facets().iter().enumerate() {
                let normal: Vec<String> = f.normal.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!(
                    "  [{i}] normal=({}) offset={}\n",
                    normal.join(", "),
                    f.offset
                ));
            }
            out.push_str(&format!(
                "{} rays={} max_cones={} smooth={smooth} complete={complete}\n",
                style.heading("fan:"),
                fan.rays().len(),
                fan.cone_count(fan.dim()),
            ));
            out.push_str(&format!("cones per dimension: {cones_per_dim:?}\n"));
            Ok(out)
        }
    }
}

fn chern(path: &Path, max_degree: Option<usize>, format: Format) -> Result<String, Failure> {
    let prepared = prepare(path)?;
    let ring = ChowRing::new(&prepared.fan)?;
    let n = ring.dim();
    let todd_degree = max_degree.unwrap_or(n).min(n);

    let chern = ring.chern_total()?;
    let todd = ring.todd_class(todd_degree)?;
    let walls = ring.c2_wall_sum();
    let chern2 = chern.only_part(2);
    let wall_equality = chern2 == walls && ring.class_eq(&chern2, &walls)?;
    let top_chern_degree = chern.only_part(n).degree();
    let todd_top_degree = todd.degree();
    let max_cones = prepared.fan.cone_count(n);

    match format {
        Format::Json => {
            let doc = json!({
                "command": "chern",
                "variety": {
                    "hash": format!("{:016x}", prepared.polytope.hash()),
                    "dim": n,
                    "rays": prepared.fan.rays().len(),
                },
                "chern_total": report::graded_class_json(&chern),
                "todd": report::graded_class_json(&todd),
                "todd_degree": todd_degree,
                "c2_wall_sum": report::graded_class_json(&walls),
                "c2_equals_wall_sum": wall_equality,
                "top_chern_degree": report::rational_string(&top_chern_degree),
                "max_cones": max_cones,
                "todd_top_degree": report::rational_string(&todd_top_degree),
            });
            Ok(format!("{:#}\n", doc))
        }
        Format::Text => {
            let style = style_for(format);
            let mut out = String::new();
            out.push_str(&format!(
                "{} dim={} rays={} smooth=true complete=true\n",
                style.heading("variety:"),
                n,
                prepared.fan.rays().len()
            ));
            out.push_str(&style.heading("total Chern class:"));
            out.push('\n');
            for line in report::graded_class_lines(&chern) {
                out.push_str("  ");
                out.push_str(&line);
                out.push('\n');
            }
            out.push_str(&style.heading(&format!("Todd class (degree <= {todd_degree}):")));
            out.push('\n');
            for line in report::graded_class_lines(&todd) {
                out.push_str("  ");
                out.push_str(&line);
                out.push('\n');
            }
            out.push_str(&style.heading("c2 as wall sum:"));
            out.push('\n');
            for line in report::graded_class_lines(&walls) {
                out.push_str("  ");
                out.push_str(&line);
                out.push('\n');
            }
            out.push_str(&format!(
                "c2(chern product) equals wall sum: {}\n",
                style.verdict(wall_equality)
            ));
            out.push_str(&format!(
                "deg c_top = {} (= {} max cones); deg td_top = {}\n",
                report::rational_string(&top_chern_degree),
                max_cones,
                report::rational_string(&todd_top_degree)
            ));
            Ok(out)
        }
    }
}

fn genus(path: &Path, divisor_flag: Option<&str>, format: Format) -> Result<String, Failure> {
    let prepared = prepare(path)?;
    let ring = ChowRing::new(&prepared.fan)?;
    let divisor = resolve_divisor(&prepared, divisor_flag)?;

    let chi = chi_cy3(&ring, &divisor)?;
    let chi_l = chi_l_cy3(&ring)?;
    let minus_3k = DivisorClass::anticanonical(&prepared.fan).scaled(&rat_int(3));
    let consistent = chi_l == chi_cy3(&ring, &minus_3k)?;
    let chi_oracle = oracle_check(
        &ring,
        "chi(Y, O(D)|_Y) vs boundary points of P(D)",
        &divisor,
        chi.clone(),
    )?;
    let chi_l_oracle = oracle_check(
        &ring,
        "chi(Y, L) vs boundary points of P(-3K)",
        &minus_3k,
        chi_l.clone(),
    )?;

    match format {
        Format::Json => {
            let doc = json!({
                "command": "genus",
                "variety": {
                    "hash": format!("{:016x}", prepared.polytope.hash()),
                    "dim": ring.dim(),
                    "rays": prepared.fan.rays().len(),
                },
                "divisor": report::rationals_json(&divisor.dense(prepared.fan.rays().len())),
                "chi": report::rational_string(&chi),
                "chi_oracle": report::oracle_outcome_json(&chi_oracle.outcome),
                "chi_spanning_bundle": report::rational_string(&chi_l),
                "chi_spanning_bundle_oracle": report::oracle_outcome_json(&chi_l_oracle.outcome),
                "spanning_bundle_consistency": consistent,
            });
            Ok(format!("{:#}\n", doc))
        }
        Format::Text => {
            let style = style_for(format);
            let divisor_strings: Vec<String> = divisor
                .dense(prepared.fan.rays().len())
                .iter()
                .map(report::rational_string)
                .collect();
            let mut out = String::new();
            out.push_str(&format!(
                "{} dim={} rays={} hash={:016x}\n",
                style.heading("variety:"),
                ring.dim(),
                prepared.fan.rays().len(),
                prepared.polytope.hash()
            ));
            out.push_str(&format!(
                "divisor (canonical facet order): [{}]\n",
                divisor_strings.join(", ")
            ));
            out.push_str(&format!(
                "chi(Y, O(D)|_Y) = {}\n",
                report::rational_string(&chi)
            ));
            out.push_str(&format!(
                "oracle: {} {}\n",
                chi_oracle.name,
                report::oracle_outcome_text(&chi_oracle.outcome, &style)
            ));
            out.push_str(&format!(
                "chi(Y, L) at D = -3K: {}\n",
                report::rational_string(&chi_l)
            ));
            out.push_str(&format!(
                "oracle: {} {}\n",
                chi_l_oracle.name,
                report::oracle_outcome_text(&chi_l_oracle.outcome, &style)
            ));
            out.push_str(&format!(
                "closed form equals chi at -3K: {}\n",
                style.verdict(consistent)
            ));
            Ok(out)
        }
    }
}

fn charge(path: &Path, divisor_flag: Option<&str>, format: Format) -> Result<String, Failure> {
    let prepared = prepare(path)?;
    let ring = ChowRing::new(&prepared.fan)?;
    let divisor = resolve_divisor(&prepared, divisor_flag)?;
    let report_data = verify_grr(&ring, &divisor)?;

    let output = match format {
        Format::Json => {
            let mut doc = report::charge_report_json(&report_data);
            doc["command"] = Value::String("charge".into());
            doc["closed_form"] = closed_form_json(&ring, &divisor)?;
            format!("{:#}\n", doc)
        }
        Format::Text => {
            let style = style_for(format);
            let mut out = report::charge_report_text(&report_data, &style);
            if let Some(lines) = closed_form_lines(&ring, &divisor)? {
                out.push_str(&style.heading("dimension-specific closed form:"));
                out.push('\n');
                for line in lines {
                    out.push_str("  ");
                    out.push_str(&line);
                    out.push('\n');
                }
            }
            out
        }
    };
    if report_data.all_pass() {
        Ok(output)
    } else {
        Err(Failure {
            code: 3,
            message: format!("{output}error: charge consistency checks failed\n"),
        })
    }
}

fn closed_form(ring: &ChowRing, divisor: &DivisorClass) -> Result<Option<GradedClass>, Failure> {
    Ok(match ring.dim() {
        2 => Some(charge_surface(ring, divisor)?),
        3 => Some(charge_dim3(ring, divisor)?),
        _ => None,
    })
}

fn closed_form_lines(
    ring: &ChowRing,
    divisor: &DivisorClass,
) -> Result<Option<Vec<String>>, Failure> {
    Ok(closed_form(ring, divisor)?.map(|class| report::graded_class_lines(&class)))
}

fn closed_form_json(ring: &ChowRing, divisor: &DivisorClass) -> Result<Value, Failure> {
    Ok(match closed_form(ring, divisor)? {
        Some(class) => report::graded_class_json(&class),
        None => Value::Null,
    })
}

fn verify(
    path: &Path,
    trials: u64,
    seed: u64,
    max_coeff: i64,
    format: Format,
) -> Result<String, Failure> {
    let prepared = prepare(path)?;
    let ring = ChowRing::new(&prepared.fan)?;
    let ray_count = prepared.fan.rays().len();
    let mut generator = Lcg64::new(seed);
    let style = style_for(format);

    let mut reports = Vec::new();
    let mut failures = 0usize;
    for _ in 0..trials {
        let divisor = generator.divisor(ray_count, max_coeff);
        let report_data = verify_grr(&ring, &divisor)?;
        if !report_data.all_pass() {
            failures += 1;
        }
        reports.push(report_data);
    }

    let output = match format {
        Format::Json => {
            let doc = json!({
                "command": "verify",
                "variety": {
                    "hash": format!("{:016x}", prepared.polytope.hash()),
                    "dim": ring.dim(),
                    "rays": ray_count,
                },
                "trials": trials,
                "seed": seed,
                "max_coeff": max_coeff,
                "failures": failures,
                "reports": reports.iter().map(report::charge_report_json).collect::<Vec<_>>(),
            });
            format!("{:#}\n", doc)
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{} dim={} rays={} trials={} seed={} max_coeff={}\n",
                style.heading("verify:"),
                ring.dim(),
                ray_count,
                trials,
                seed,
                max_coeff
            ));
            for (index, report_data) in reports.iter().enumerate() {
                let divisor: Vec<String> = report_data
                    .divisor
                    .iter()
                    .map(report::rational_string)
                    .collect();
                let identities_ok = report_data.identities.iter().all(|c| c.pass);
                let oracle_summary: Vec<String> = report_data
                    .oracles
                    .iter()
                    .map(|c| report::oracle_outcome_text(&c.outcome, &style))
                    .collect();
                out.push_str(&format!(
                    "trial {index:3}: D=[{}] identities {} | oracle {}\n",
                    divisor.join(","),
                    style.verdict(identities_ok),
                    oracle_summary.join("; ")
                ));
            }
            out.push_str(&format!(
                "summary: {}/{} trials fully consistent\n",
                reports.len() - failures,
                reports.len()
            ));
            out
        }
    };

    if failures == 0 {
        Ok(output)
    } else {
        Err(Failure {
            code: 3,
            message: format!("{output}error: {failures} trial(s) failed consistency checks\n"),
        })
    }
}
