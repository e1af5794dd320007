//! The `flagstab` command line.
//!
//! Exit status: 0 on success, 2 for parse or validation errors, 3 when a
//! scale guard refuses the job.

mod output;

pub use output::*;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use crate::error::Error;
use crate::gitfan::{compute_fan, fan_svg, validate_fan, ValidateOptions};
use crate::picard::picard_certificate;
use crate::ratlinalg::{parse_rat, QVector};
use crate::rootsys::{Basis, RootSystem, Weight};
use crate::saturated::{build_path, enumerate_saturated, spans_containing, verify_path, SaturatedSubsystem};
use crate::stability::{git_cone, is_semistable, lemma_1_10_values, mu, unstable_codimension, wst};
use crate::weyl::{longest_element, WeylElement, WeylGroup};

#[derive(Parser, Debug)]
#[command(name = "flagstab", version, about = "Exact GIT data for torus actions on flag varieties G/B")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Fundamental,
    Simple,
    Epsilon,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Fundamental => Basis::Fundamental,
            BasisArg::Simple => Basis::SimpleRoot,
            BasisArg::Epsilon => Basis::Epsilon,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Root system, e.g. B4 or A2xG2.
    #[arg(value_name = "TYPE")]
    pub type_spec: String,
    /// Coordinates used for weights on input and output.
    #[arg(long, value_enum, default_value_t = BasisArg::Fundamental)]
    pub basis: BasisArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Lift the rank guards (fan up to rank 6).
    #[arg(long)]
    pub allow_large: bool,
    /// Worker threads; 0 means one per core.
    #[arg(long, env = "FLAGSTAB_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Semistable Weyl set, GIT cone and unstable codimension.
    Wst {
        #[command(flatten)]
        common: Common,
        /// Weight as comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// GIT fan of the Weyl chamber.
    Fan {
        #[command(flatten)]
        common: Common,
        /// Write an SVG wall diagram (rank 2 only).
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Run the fan validity checks.
        #[arg(long)]
        validate: bool,
    },
    /// Rank of the Picard group of the quotient.
    Picard {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// Highest-root path for a Weyl element and a saturated subsystem.
    Path {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        /// Reduced word of w, one-based, e.g. 3,4 for s3 s4.
        #[arg(long)]
        word: Option<String>,
        /// Index from the `saturated` listing; defaults to the whole system.
        #[arg(long)]
        sat: Option<usize>,
    },
    /// Saturated root subsystems.
    Saturated {
        #[command(flatten)]
        common: Common,
        /// Mark the subsystems whose span contains w0 chi.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
    },
    /// Codimension of the unstable locus.
    Codim {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// Numerical function (w chi, lambda) for lambda in the chamber.
    Mu {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        word: Option<String>,
    },
    /// Values (pi_i, pi_i) - (alpha_i, alpha_i)/2 per simple root.
    #[command(name = "lemma110")]
    Lemma110 {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Wst { common, .. }
            | Command::Fan { common, .. }
            | Command::Picard { common, .. }
            | Command::Path { common, .. }
            | Command::Saturated { common, .. }
            | Command::Codim { common, .. }
            | Command::Mu { common, .. }
            | Command::Lemma110 { common } => common,
        }
    }
}

/// A failure with its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn field(field: &str, e: Error) -> CliError {
        CliError {
            code: if e.is_scale_guard() { 3 } else { 2 },
            message: format!("{field}: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError {
            code: if e.is_scale_guard() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn invalid(field: &str, reason: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: format!("{field}: {}", reason.into()),
    }
}

fn parse_list(field: &str, s: &str) -> Result<Vec<crate::ratlinalg::Rat>, CliError> {
    s.split(',')
        .map(|t| parse_rat(t.trim()).ok_or_else(|| invalid(field, format!("cannot parse {:?} as a rational", t.trim()))))
        .collect()
}

struct Ctx {
    rs: RootSystem,
    basis: Basis,
}

impl Ctx {
    fn weight_in(&self, field: &str, s: &str) -> Result<QVector, CliError> {
        let coords = QVector(parse_list(field, s)?);
        self.rs
            .to_internal(&Weight::new(self.basis, coords))
            .map_err(|e| CliError::field(field, e))
    }

    fn chi(&self, s: &str) -> Result<QVector, CliError> {
        let chi = self.weight_in("chi", s)?;
        self.rs.check_strictly_dominant(&chi).map_err(|e| CliError::field("chi", e))?;
        Ok(chi)
    }

    fn out(&self, v: &QVector) -> Weight {
        self.rs.express(v, self.basis).expect("basis checked on input")
    }

    /// Roots read better in simple-root coordinates unless epsilon was asked.
    fn root_out(&self, v: &QVector) -> Weight {
        let basis = if self.basis == Basis::Epsilon { Basis::Epsilon } else { Basis::SimpleRoot };
        self.rs.express(v, basis).expect("basis checked on input")
    }

    fn group(&self) -> Result<WeylGroup, CliError> {
        Ok(WeylGroup::enumerate(&self.rs)?)
    }

    fn word(&self, s: Option<&str>) -> Result<WeylElement, CliError> {
        let Some(s) = s else {
            return Ok(WeylElement::identity(self.rs.rank()));
        };
        if s.trim().is_empty() || s.trim() == "e" {
            return Ok(WeylElement::identity(self.rs.rank()));
        }
        let word = s
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(i) if (1..=self.rs.rank()).contains(&i) => Ok(i - 1),
                _ => Err(invalid("word", format!("{:?} is not a simple reflection index in 1..={}", t.trim(), self.rs.rank()))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WeylElement::from_word(&self.rs, &word))
    }
}

fn element_out(group: &WeylGroup, i: usize) -> ElementOut {
    let w = group.get(i);
    ElementOut {
        index: i,
        word: w.word().iter().map(|j| j + 1).collect(),
        length: w.length(),
    }
}

fn one_based(w: &WeylElement) -> Vec<usize> {
    w.word().iter().map(|j| j + 1).collect()
}

/// Executes a parsed command.
pub fn execute(command: &Command) -> Result<Envelope, CliError> {
    let common = command.common();
    let rs = RootSystem::build(&common.type_spec).map_err(|e| CliError::field("type", e))?;
    let basis: Basis = common.basis.into();
    if basis == Basis::Epsilon && !rs.has_epsilon_basis() {
        return Err(invalid("basis", format!("epsilon coordinates are not available for {}", rs.type_spec())));
    }
    let ctx = Ctx { rs, basis };
    let rs = &ctx.rs;
    let output = match command {
        Command::Wst { chi, .. } => {
            let chi = ctx.chi(chi)?;
            let group = ctx.group()?;
            let set = wst(rs, &group, &chi)?;
            Output::Wst(WstOut {
                chi: ctx.out(&chi),
                wst: set.iter().map(|&i| element_out(&group, i)).collect(),
                unstable_codim: unstable_codimension(rs, &group, &chi)?,
                sigma: git_cone(rs, &group, &chi)?,
                lemma_1_10_applicable: !rs.has_type_a_factor(),
            })
        }
        Command::Codim { chi, .. } => {
            let chi = ctx.chi(chi)?;
            let group = ctx.group()?;
            let codim = unstable_codimension(rs, &group, &chi)?;
            Output::Codim(CodimOut {
                chi: ctx.out(&chi),
                unstable_codim: codim,
                max_unstable_length: rs.num_positive() - codim,
                positive_roots: rs.num_positive(),
                lemma_1_10_applicable: !rs.has_type_a_factor(),
            })
        }
        Command::Fan { svg, validate, .. } => {
            if svg.is_some() && rs.rank() != 2 {
                return Err(invalid("svg", format!("SVG output needs rank 2, {} has rank {}", rs.type_spec(), rs.rank())));
            }
            let group = ctx.group()?;
            let fan = compute_fan(rs, &group, common.allow_large)?;
            let validation = if *validate {
                let opts = ValidateOptions {
                    seed: common.seed,
                    ..ValidateOptions::default()
                };
                let report = validate_fan(rs, &group, &fan, &opts)?;
                Some(ValidationOut {
                    passed: report.passed(),
                    grid_points: report.grid_points,
                    face_pairs: report.face_pairs,
                    samples_per_cone: report.samples_per_cone,
                    violations: report
                        .violations
                        .iter()
                        .map(|v| format!("{}: {}", v.check, v.detail))
                        .collect(),
                })
            } else {
                None
            };
            if let Some(path) = svg {
                std::fs::write(path, fan_svg(rs, &fan)?)
                    .map_err(|e| invalid("svg", format!("cannot write {}: {e}", path.display())))?;
            }
            Output::Fan(FanOut {
                walls: fan.walls.clone(),
                cones: fan
                    .cones
                    .iter()
                    .map(|c| FanConeOut {
                        normals: c.cone.normals.clone(),
                        sample: Weight::fundamental(c.sample.clone()),
                        fingerprint: c.fingerprint.clone(),
                        chambers: c.chambers,
                    })
                    .collect(),
                arrangement_chambers: fan.arrangement_chambers,
                merged: fan.merged(),
                validation,
                svg: svg.as_ref().map(|p| p.display().to_string()),
            })
        }
        Command::Picard { chi, .. } => {
            let chi = ctx.chi(chi)?;
            let group = ctx.group()?;
            let sats = enumerate_saturated(rs)?;
            let cert = picard_certificate(rs, &group, &sats, &chi)?;
            let open = crate::picard::open_cell_constraints(rs, &group, &sats, &chi)?;
            Output::Picard(PicardOut {
                chi: ctx.out(&chi),
                rank: cert.rank,
                an_caveat: cert.an_caveat,
                constraints: cert.constraints.rows.clone(),
                raw_rows: cert.raw_rows,
                nullspace: cert.nullspace.clone(),
                profiles: cert
                    .profiles
                    .iter()
                    .map(|p| ProfileOut {
                        word: one_based(&p.w),
                        span: p.span.vectors().iter().map(|v| ctx.root_out(v)).collect(),
                        complement: p.complement.iter().map(|v| ctx.root_out(v)).collect(),
                    })
                    .collect(),
                open_cell: open.vectors().iter().map(|v| ctx.root_out(v)).collect(),
            })
        }
        Command::Path { chi, word, sat, .. } => {
            let chi = ctx.chi(chi)?;
            let w = ctx.word(word.as_deref())?;
            let sats = enumerate_saturated(rs)?;
            let index = sat.unwrap_or(sats.len() - 1);
            let subsystem: &SaturatedSubsystem = sats
                .get(index)
                .ok_or_else(|| invalid("sat", format!("index {index} out of range 0..{}", sats.len())))?;
            let path = build_path(rs, subsystem, &w, &chi).map_err(|e| match e {
                Error::Precondition(m) => invalid("sat", m),
                other => other.into(),
            })?;
            let violations = verify_path(rs, &path);
            Output::Path(PathOut {
                chi: ctx.out(&chi),
                word: one_based(&w),
                subsystem: index,
                subsystem_label: subsystem.label(),
                end: ctx.root_out(&path.end),
                steps: path
                    .steps
                    .iter()
                    .map(|s| StepOut {
                        m: ctx.root_out(&s.start),
                        system: SaturatedSubsystem::from_roots(rs, s.system.iter().map(|&i| rs.root(i))).label(),
                        beta: s.beta.map(|b| ctx.root_out(rs.root(b))),
                        k: s.k.clone(),
                    })
                    .collect(),
                scale: path.scale.to_string(),
                violations,
            })
        }
        Command::Saturated { chi, .. } => {
            let sats = enumerate_saturated(rs)?;
            let marked = match chi {
                Some(c) => {
                    let chi = ctx.chi(c)?;
                    let w0chi = longest_element(rs).act(&chi);
                    Some(spans_containing(&w0chi, &sats))
                }
                None => None,
            };
            Output::Saturated(SaturatedOut {
                count: sats.len(),
                subsystems: sats
                    .iter()
                    .enumerate()
                    .map(|(i, s)| SubsystemOut {
                        index: i,
                        label: s.label(),
                        dim: s.rank(),
                        positive_roots: s.positive.iter().map(|&b| ctx.root_out(rs.root(b))).collect(),
                        highest_roots: s.highest_roots().iter().map(|&b| ctx.root_out(rs.root(b))).collect(),
                        contains_w0_chi: marked.as_ref().map(|m| m.contains(&i)),
                    })
                    .collect(),
            })
        }
        Command::Mu { chi, lambda, word, .. } => {
            let chi = ctx.chi(chi)?;
            let lam = ctx.weight_in("lambda", lambda)?;
            let w = ctx.word(word.as_deref())?;
            let value = mu(rs, &chi, &w, &lam).map_err(|e| match e {
                Error::LambdaOutsideChamber { .. } => CliError::field("lambda", e),
                other => other.into(),
            })?;
            Output::Mu(MuOut {
                chi: ctx.out(&chi),
                word: one_based(&w),
                lambda: ctx.out(&lam),
                value,
                semistable: is_semistable(&chi, &w),
            })
        }
        Command::Lemma110 { .. } => {
            let values = lemma_1_10_values(rs);
            Output::Lemma110(LemmaOut {
                applicable: !rs.has_type_a_factor(),
                all_nonnegative: values.iter().all(|v| !v.is_negative()),
                values: values
                    .into_iter()
                    .enumerate()
                    .map(|(i, value)| LemmaEntry { simple_root: i + 1, value })
                    .collect(),
            })
        }
    };
    Ok(Envelope {
        schema_version: SCHEMA_VERSION,
        type_spec: rs.type_spec().to_string(),
        output,
    })
}

/// Parses `args` (program name first), runs the command and writes the
/// result. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let common = cli.command.common().clone();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: threads: {e}");
            return 2;
        }
    };
    match pool.install(|| execute(&cli.command)) {
        Ok(env) => {
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&env).expect("serializable") + "\n",
                Format::Text => env.to_text(),
            };
            let _ = write!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
