//! The `wildgalois` command-line driver.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Deserialize;

use crate::construct::{standard_group, synthesize, SynthesisOptions};
use crate::error::{Error, Result};
use crate::field::{make_field, parse_field, FieldSpec, DEFAULT_S_MAX};
use crate::forms::HomogeneousForm;
use crate::group::{recognize_structure, MatrixGroup, DEFAULT_CAP};
use crate::lift::{check_conditions, lift_group_capped};
use crate::linalg::{Matrix, ProjectiveClass};
use crate::ramify::{curve_normality, wildness_verdict, Normality};
use crate::report::{
    error_json, ConstructJson, ConstructParams, Envelope, FixtureJson, LiftJson, RamifyJson, VerifyJson,
};
use crate::text::{parse_form, parse_point};
use crate::verify::{fixtures, galois_report, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "wildgalois", version, about = "Wild Galois points on hypersurfaces over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest extension degree swept.
    #[arg(long = "smax", global = true, default_value_t = DEFAULT_S_MAX)]
    pub s_max: u32,
    /// Cap on group enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Worker threads for the search kernels.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Synthesize a hypersurface with a wild Galois point of shape (u, l).
    Construct {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Work over this field instead of F_{p^u}.
        #[arg(long)]
        field: Option<String>,
    },
    /// Classify a point; the form is read from --form or stdin.
    Verify {
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        form: Option<String>,
        /// Defaults to [1:0:...:0].
        #[arg(long)]
        point: Option<String>,
    },
    /// Lift a projective group to a linear one.
    Lift {
        #[arg(long)]
        field: String,
        /// Generator in matrix text format (`1,1;0,1`), repeatable.
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long)]
        u: Option<u32>,
        #[arg(long)]
        l: Option<u64>,
    },
    /// Check the common-line conditions for a matrix group.
    Conditions {
        #[arg(long)]
        field: String,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
    },
    /// Wild-ramification report for a point; the form is read from --form or stdin.
    Ramify {
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        form: Option<String>,
        #[arg(long)]
        point: Option<String>,
        /// Assert that the hypersurface is normal.
        #[arg(long)]
        normal: bool,
    },
    /// Emit a named test hypersurface: thm25_1, thm25_2 or thm26.
    Fixture {
        name: String,
        #[arg(long)]
        field: Option<String>,
        /// Coefficients a1,a2,a3.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        e: Option<u32>,
        /// The binary part h(X1, X2).
        #[arg(long)]
        h: Option<String>,
    },
}

#[derive(Deserialize)]
struct FormDoc {
    field: String,
    form: String,
}

/// Outcome of one invocation.
pub struct Outcome {
    pub exit_code: i32,
    pub json: String,
}

fn read_form(field: Option<&str>, inline: Option<&str>, stdin: &mut (dyn Read + Send)) -> Result<HomogeneousForm> {
    let text = match inline {
        Some(t) => t.to_string(),
        None => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf).map_err(|e| Error::Io(e.to_string()))?;
            buf
        }
    };
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let doc: FormDoc = serde_json::from_str(trimmed).map_err(|e| Error::Syntax(format!("form document: {e}")))?;
        let f = parse_field(field.unwrap_or(&doc.field))?;
        return parse_form(&doc.form, &f, None);
    }
    let f = parse_field(field.ok_or_else(|| Error::Usage("--field is required for polynomial text".into()))?)?;
    parse_form(trimmed, &f, None)
}

fn read_point(form: &HomogeneousForm, text: Option<&str>) -> Result<Vec<crate::field::Elem>> {
    match text {
        Some(t) => {
            let pt = parse_point(t, form.field())?;
            if pt.len() != form.nvars() {
                return Err(Error::SizeMismatch);
            }
            Ok(pt)
        }
        None => {
            let f = form.field();
            Ok((0..form.nvars()).map(|i| if i == 0 { f.one() } else { f.zero() }).collect())
        }
    }
}

fn parse_gens(field: &FieldSpec, gens: &[String]) -> Result<Vec<Matrix>> {
    gens.iter().map(|g| Matrix::parse(g, field)).collect()
}

fn execute(cli: &Cli, stdin: &mut (dyn Read + Send)) -> Result<String> {
    if cli.s_max == 0 {
        return Err(Error::Usage("--smax must be at least 1".into()));
    }
    if cli.cap == 0 {
        return Err(Error::Usage("--cap must be positive".into()));
    }
    let vopts = VerifyOptions { s_max: cli.s_max, seed: cli.seed };
    match &cli.command {
        Command::Construct { p, u, l, n, m, field } => {
            let mut group = standard_group(*p, *u, *l, *n)?;
            if let Some(text) = field {
                let target = parse_field(text)?;
                group = group.embed(&target)?;
            }
            let opts = SynthesisOptions { s_max: cli.s_max, ..SynthesisOptions::new(*m, cli.seed) };
            let syn = synthesize(&group, &opts)?;
            let rep = galois_report(&syn.form, &syn.point, &vopts)?;
            let verification = VerifyJson::new(&syn.form, &rep)?;
            let params = ConstructParams { p: *p, u: *u, l: *l, n: *n, m: *m, seed: cli.seed, s_max: cli.s_max };
            Ok(Envelope::new("construct", ConstructJson::new(params, &syn, verification)).to_json())
        }
        Command::Verify { field, form, point } => {
            let form = read_form(field.as_deref(), form.as_deref(), stdin)?;
            let pt = read_point(&form, point.as_deref())?;
            let rep = galois_report(&form, &pt, &vopts)?;
            Ok(Envelope::new("verify", VerifyJson::new(&form, &rep)?).to_json())
        }
        Command::Lift { field, gens, u, l } => {
            let f = parse_field(field)?;
            let mats = parse_gens(&f, gens)?;
            let classes: Vec<ProjectiveClass> = mats.iter().map(ProjectiveClass::new).collect::<Result<_>>()?;
            let hint = match (u, l) {
                (Some(u), Some(l)) => Some((*u, *l)),
                (None, None) => None,
                _ => return Err(Error::Usage("--u and --l go together".into())),
            };
            let lift = lift_group_capped(&classes, hint, cli.s_max, cli.cap)?;
            let structure = if lift.lifted_group.order() > 1 && lift.lifted_group.is_ut_star() {
                recognize_structure(&lift.lifted_group).ok()
            } else {
                None
            };
            let conditions = check_conditions(&lift.lifted_group);
            Ok(Envelope::new("lift", LiftJson::new(&f, &lift, structure.as_ref(), &conditions)).to_json())
        }
        Command::Conditions { field, gens } => {
            let f = parse_field(field)?;
            let mats = parse_gens(&f, gens)?;
            let size = mats[0].size();
            let group = MatrixGroup::generate(&f, size, &mats, cli.cap)?;
            let report = check_conditions(&group);
            #[derive(serde::Serialize)]
            struct Body {
                field: String,
                order: usize,
                #[serde(flatten)]
                conditions: crate::report::ConditionsJson,
            }
            Ok(Envelope::new("conditions", Body { field: f.to_string(), order: group.order(), conditions: (&report).into() }).to_json())
        }
        Command::Ramify { field, form, point, normal } => {
            let form = read_form(field.as_deref(), form.as_deref(), stdin)?;
            let pt = read_point(&form, point.as_deref())?;
            let rep = galois_report(&form, &pt, &vopts)?;
            let normality = if *normal { Normality::UserAsserted } else { curve_normality(&form, cli.s_max)? };
            let ram = wildness_verdict(&rep.normalized_form, &rep.group, normality, cli.s_max)?;
            let verification = VerifyJson::new(&form, &rep)?;
            Ok(Envelope::new("ramify", RamifyJson::new(&ram, verification)).to_json())
        }
        Command::Fixture { name, field, a, p, e, h } => {
            let form = match name.as_str() {
                "thm25_1" | "thm25_2" => {
                    let f = parse_field(field.as_deref().unwrap_or("p=3,k=1"))?;
                    let coeffs = match a {
                        Some(t) => parse_point(t, &f)?,
                        None => vec![f.zero(), f.zero(), if name == "thm25_2" { f.one() } else { f.zero() }],
                    };
                    let coeffs: [crate::field::Elem; 3] =
                        coeffs.try_into().map_err(|_| Error::Usage("--a takes three coefficients a1,a2,a3".into()))?;
                    if name == "thm25_1" {
                        fixtures::thm25_1(&f, coeffs)?
                    } else {
                        fixtures::thm25_2(&f, coeffs)?
                    }
                }
                "thm26" => {
                    let p = p.ok_or_else(|| Error::Usage("thm26 needs --p".into()))?;
                    let e = e.ok_or_else(|| Error::Usage("thm26 needs --e".into()))?;
                    let h = match h {
                        Some(t) => Some(parse_form(t, &make_field(p, e.div_ceil(2))?, Some(3))?),
                        None => None,
                    };
                    fixtures::thm26(p, e, h.as_ref(), cli.s_max)?
                }
                other => return Err(Error::Usage(format!("unknown fixture `{other}`"))),
            };
            let body = FixtureJson { name: name.clone(), field: form.field().to_string(), form: form.to_string() };
            Ok(Envelope::new("fixture", body).to_json())
        }
    }
}

/// Runs one invocation. Usage errors and failures produce an error document.
pub fn run<I, T>(args: I, stdin: &mut (dyn Read + Send)) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { exit_code: 0, json: e.to_string() };
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("bad arguments");
            let err = Error::Usage(first.trim_start_matches("error: ").to_string());
            return Outcome { exit_code: err.exit_code(), json: error_json(&err) };
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(Error::Usage("--jobs must be positive".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| execute(&cli, stdin)),
            Err(e) => Err(Error::Usage(e.to_string())),
        },
        None => execute(&cli, stdin),
    };
    let result = result.and_then(|json| match &cli.out {
        Some(path) => std::fs::write(path, format!("{json}\n")).map(|_| String::new()).map_err(|e| Error::Io(e.to_string())),
        None => Ok(json),
    });
    match result {
        Ok(json) => Outcome { exit_code: 0, json },
        Err(e) => Outcome { exit_code: e.exit_code(), json: error_json(&e) },
    }
}
