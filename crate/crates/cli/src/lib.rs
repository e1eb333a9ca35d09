//! The `qalg` command line: `.alg` files in, reports out.
//!
//! Exit codes: 0 success, 1 a claim or internal check failed, 2 usage or
//! parse error, 3 a cap was exceeded where a certified answer is required.

pub mod format;
pub mod report;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qalg_core::artheory::{enumerate_indecomposables, IndecompList};
use qalg_core::auslander::{auslander_algebra, is_auslander, verify_claims, Caps, Claim, Verdict};
use qalg_core::homology::{dominant_dimension, global_dimension, injective_dimension, projective_dimension};
use qalg_core::qalgebra::{injective, projective, DEFAULT_PATH_LENGTH_CAP};
use qalg_core::reps::{self, DEFAULT_SEED};
use qalg_core::tilting::{classify_ids, enumerate_tilting, has_hereditary_property, Category};
use qalg_core::{BoundQuiverAlgebra, Error, Field};

use format::{emit_algebra_file, parse_algebra_file, parse_field, AlgebraFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qalg", version, about = "Exact computations for bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Overrides the file's field: `rational`, `gf7`, `gf:7` or `"gf 7"`.
    #[arg(long, global = true, value_parser = field_arg)]
    pub field: Option<Field>,
    #[arg(long, global = true, default_value_t = qalg_core::homology::DEFAULT_RESOLUTION_CAP)]
    pub cap_resolution: usize,
    /// Maximum number of indecomposables to enumerate.
    #[arg(long, global = true, default_value_t = qalg_core::artheory::DEFAULT_COUNT_CAP)]
    pub cap_count: usize,
    /// Maximum total dimension of an enumerated module.
    #[arg(long, global = true, default_value_t = qalg_core::artheory::DEFAULT_SIZE_CAP)]
    pub cap_size: usize,
    /// Seed for the randomized isomorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also write the report as JSON.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Exit 3 when the enumeration of indecomposables is not certified complete.
    #[arg(long, global = true)]
    pub require_certified: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Dimensions, homological invariants, indecomposables.
    Analyze { file: PathBuf },
    /// Builds the Auslander algebra of a representation-finite algebra.
    Auslander {
        file: PathBuf,
        /// Writes the presentation as an `.alg` file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Classifies the file's modules; optionally lists all basic tilting modules.
    Tilting {
        file: PathBuf,
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        check_hereditary_property: bool,
    },
    /// Checks the listed claims (default: all).
    Verify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
    },
}

fn field_arg(s: &str) -> Result<Field, String> {
    let s = s.trim().replace(':', " ");
    let s = match s.strip_prefix("gf") {
        Some(p) if !p.starts_with(' ') => format!("gf {}", p),
        _ => s,
    };
    parse_field(&s).ok_or_else(|| "expected rational or gf<p> with p prime".into())
}

/// What a run produced: exit code, text for stdout and stderr, and the
/// structured report when one was built.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Value>,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: message, report: None }
    }
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::NotCertified => (EXIT_CAP, "not_certified"),
            Error::PresentationCapExceeded { .. } | Error::UndecidableAtCap { .. } | Error::NotAdmissible { .. } => {
                (EXIT_CAP, "cap_exceeded")
            }
            Error::Sentinel(_) | Error::CharacterizationDisagreement(_) | Error::EquivalenceViolated(_) => {
                (EXIT_FAILED, "internal_check_failed")
            }
            _ => (EXIT_USAGE, "invalid_input"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

fn parse_failure(e: format::ParseError) -> Failure {
    Failure { code: EXIT_USAGE, kind: "parse_error", message: e.to_string() }
}

struct Input {
    file: AlgebraFile,
    algebra: Arc<BoundQuiverAlgebra>,
}

impl Options {
    fn caps(&self) -> Caps {
        Caps {
            size: self.cap_size,
            count: self.cap_count,
            resolution: self.cap_resolution,
            path_length: DEFAULT_PATH_LENGTH_CAP,
        }
    }

    fn enumerate(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<IndecompList, Failure> {
        Ok(enumerate_indecomposables(alg, self.cap_size, self.cap_count, self.cap_resolution)?)
    }

    fn certified(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<IndecompList, Failure> {
        let list = self.enumerate(alg)?;
        if !list.is_certified() {
            return Err(Error::NotCertified.into());
        }
        Ok(list)
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new(), report: None }
            } else {
                Outcome::usage(text)
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let opts = &cli.options;
    let claims = match &cli.command {
        Command::Verify { claims, .. } => match parse_claims(claims) {
            Ok(c) => c,
            Err(e) => return Outcome::usage(e),
        },
        _ => Vec::new(),
    };
    let path = match &cli.command {
        Command::Analyze { file } | Command::Auslander { file, .. } | Command::Tilting { file, .. } => file,
        Command::Verify { file, .. } => file,
    };
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(format!("cannot read {}: {}", path.display(), e)),
    };
    let digest = report::digest(&bytes);
    reps::set_search_seed(opts.seed);

    let outcome = String::from_utf8(bytes)
        .map_err(|_| Failure { code: EXIT_USAGE, kind: "parse_error", message: "input is not UTF-8".into() })
        .and_then(|text| load(&text, opts.field))
        .and_then(|input| match &cli.command {
            Command::Analyze { .. } => analyze(&input, opts),
            Command::Auslander { emit, .. } => auslander(&input, opts, emit.as_ref(), path),
            Command::Tilting { enumerate, check_hereditary_property, .. } => {
                tilting(&input, opts, *enumerate, *check_hereditary_property)
            }
            Command::Verify { .. } => verify(&input, opts, &claims),
        });
    let (code, results, stderr) = match outcome {
        Ok((code, results)) => (code, results, String::new()),
        Err(f) => {
            let message = format!("error: {}", f.message);
            (f.code, json!({ "error": { "kind": f.kind, "message": f.message } }), message)
        }
    };
    let field = opts.field.map(|f| f.to_string());
    let report = report::envelope(Some(&digest), results, flags(cli, field, &claims));
    let mut stderr = stderr;
    if let Some(p) = &opts.json {
        let text = serde_json::to_string_pretty(&report).unwrap() + "\n";
        if let Err(e) = std::fs::write(p, text) {
            stderr = format!("{}cannot write {}: {}", stderr, p.display(), e);
            return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr, report: Some(report) };
        }
    }
    Outcome { code, stdout: report::render_text(&report), stderr, report: Some(report) }
}

fn parse_claims(ids: &[String]) -> Result<Vec<Claim>, String> {
    if ids.is_empty() {
        return Ok(Claim::ALL.to_vec());
    }
    ids.iter()
        .map(|s| Claim::parse(s.trim()).ok_or_else(|| format!("error: unknown claim id '{}'", s.trim())))
        .collect()
}

fn flags(cli: &Cli, field: Option<String>, claims: &[Claim]) -> Value {
    let o = &cli.options;
    let (command, file) = match &cli.command {
        Command::Analyze { file } => ("analyze", file),
        Command::Auslander { file, .. } => ("auslander", file),
        Command::Tilting { file, .. } => ("tilting", file),
        Command::Verify { file, .. } => ("verify", file),
    };
    let mut v = json!({
        "command": command,
        "file": file.display().to_string(),
        "field": field,
        "cap_resolution": o.cap_resolution,
        "cap_count": o.cap_count,
        "cap_size": o.cap_size,
        "cap_path_length": DEFAULT_PATH_LENGTH_CAP,
        "seed": o.seed,
        "require_certified": o.require_certified,
    });
    let m = v.as_object_mut().unwrap();
    match &cli.command {
        Command::Auslander { emit, .. } => {
            m.insert("emit".into(), json!(emit.as_ref().map(|p| p.display().to_string())));
        }
        Command::Tilting { enumerate, check_hereditary_property, .. } => {
            m.insert("enumerate".into(), json!(enumerate));
            m.insert("check_hereditary_property".into(), json!(check_hereditary_property));
        }
        Command::Verify { .. } => {
            m.insert("claims".into(), json!(claims.iter().map(|c| c.id()).collect::<Vec<_>>()));
        }
        Command::Analyze { .. } => {}
    }
    v
}

fn load(text: &str, field: Option<Field>) -> Result<Input, Failure> {
    let file = parse_algebra_file(text, field).map_err(parse_failure)?;
    let algebra = file.build().map_err(parse_failure)?;
    // Type-check module blocks up front so every command reports them alike.
    file.representations(&algebra).map_err(parse_failure)?;
    Ok(Input { file, algebra })
}

fn algebra_summary(alg: &BoundQuiverAlgebra) -> Value {
    json!({
        "field": alg.field().to_string(),
        "vertex_count": alg.vertex_count(),
        "arrow_count": alg.arrow_count(),
        "relation_count": alg.relations().len(),
        "dimension": alg.dimension(),
        "loewy_length": alg.loewy_length(),
    })
}

fn completeness(list: &IndecompList) -> &'static str {
    if list.is_certified() {
        "certified"
    } else {
        "cap_exceeded"
    }
}

fn analyze(input: &Input, opts: &Options) -> Result<(i32, Value), Failure> {
    let alg = &input.algebra;
    let cap = opts.cap_resolution;
    let n = alg.vertex_count();
    let mut results = json!({
        "algebra": algebra_summary(alg),
        "projective_dims": (0..n).map(|v| projective(alg, v).dims().to_vec()).collect::<Vec<_>>(),
        "injective_dims": (0..n).map(|v| injective(alg, v).dims().to_vec()).collect::<Vec<_>>(),
        "global_dimension": report::hom_dim(global_dimension(alg, cap)?.value),
        "dominant_dimension": report::dom_dim(dominant_dimension(alg, cap)?),
    });
    let list = opts.enumerate(alg)?;
    // An uncertified enumeration reports no count.
    let ind = if list.is_certified() {
        let modules: Vec<Value> = list
            .entries
            .iter()
            .map(|e| json!({ "id": e.id, "dims": e.dims, "projective": e.projective, "injective": e.injective }))
            .collect();
        json!({ "completeness": "certified", "count": list.len(), "modules": modules })
    } else {
        json!({ "completeness": completeness(&list) })
    };
    let m = results.as_object_mut().unwrap();
    m.insert("indecomposables".into(), ind);
    let mut mods = Vec::new();
    for (name, rep) in input.file.representations(alg).map_err(parse_failure)? {
        let mut summands: Vec<Vec<usize>> = Vec::new();
        for (s, k) in reps::decompose(&rep)? {
            summands.extend(std::iter::repeat_n(s.dims().to_vec(), k));
        }
        summands.sort();
        mods.push(json!({
            "name": name,
            "dims": rep.dims(),
            "summand_dims": summands,
            "projective_dimension": report::hom_dim(projective_dimension(&rep, cap)),
            "injective_dimension": report::hom_dim(injective_dimension(&rep, cap)),
        }));
    }
    m.insert("modules".into(), json!(mods));
    let code = if opts.require_certified && !list.is_certified() { EXIT_CAP } else { EXIT_OK };
    Ok((code, results))
}

fn auslander(
    input: &Input,
    opts: &Options,
    emit: Option<&PathBuf>,
    source: &std::path::Path,
) -> Result<(i32, Value), Failure> {
    let ctx = auslander_algebra(&input.algebra, opts.caps())?;
    let a = ctx.algebra();
    let q = a.quiver();
    let verdict = is_auslander(a, opts.cap_resolution)?;
    let vertices: Vec<Value> = ctx
        .base_list
        .entries
        .iter()
        .map(|e| json!({ "vertex": e.id + 1, "base_dims": e.dims }))
        .collect();
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|x| json!({ "name": x.name, "source": x.source + 1, "target": x.target + 1 }))
        .collect();
    let relations: Vec<String> = a.relations().iter().map(|r| r.display(q)).collect();
    let ind = match &ctx.list {
        Some(l) => json!({ "completeness": "certified", "count": l.len() }),
        None => json!({ "completeness": "cap_exceeded" }),
    };
    let results = json!({
        "base": {
            "algebra": algebra_summary(&ctx.base),
            "indecomposables": ctx.base_list.len(),
        },
        "algebra": algebra_summary(a),
        "vertices": vertices,
        "arrows": arrows,
        "relations": relations,
        "invariants": {
            "global_dimension": report::hom_dim(verdict.global_dimension.value),
            "dominant_dimension": report::dom_dim(verdict.dominant_dimension),
            "is_auslander": verdict.value,
            "li_zhang": verdict.li_zhang,
            "projective_injective_vertices": report::vertices(&verdict.projective_injective),
            "socle_pd_at_most_one_vertices": report::vertices(&verdict.socle_pd_at_most_one),
        },
        "indecomposables": ind,
    });
    if let Some(path) = emit {
        let name = source.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let mut header = vec![format!("Auslander algebra of {}: vertex i is the i-th indecomposable below.", name)];
        for e in &ctx.base_list.entries {
            header.push(format!("  vertex {}: dims {:?}", e.id + 1, e.dims));
        }
        let text = emit_algebra_file(a, &header, &[]);
        std::fs::write(path, text).map_err(|e| Failure {
            code: EXIT_USAGE,
            kind: "io_error",
            message: format!("cannot write {}: {}", path.display(), e),
        })?;
    }
    let code = if opts.require_certified && ctx.list.is_none() { EXIT_CAP } else { EXIT_OK };
    Ok((code, results))
}

fn tilting(input: &Input, opts: &Options, enumerate: bool, check: bool) -> Result<(i32, Value), Failure> {
    let list = opts.certified(&input.algebra)?;
    let cat = Category::new(&list, opts.cap_resolution)?;
    let dims: Vec<Value> = list.entries.iter().map(|e| json!(e.dims)).collect();
    let describe = |t: &[usize]| -> Result<Value, Failure> {
        let flags = classify_ids(t, &cat)?;
        let mut v = json!({
            "summands": t,
            "partial_tilting": flags.partial_tilting,
            "tilting": flags.tilting,
            "partial_cotilting": flags.partial_cotilting,
            "cotilting": flags.cotilting,
        });
        if check {
            let r = has_hereditary_property(t, &cat)?;
            v.as_object_mut().unwrap().insert("hereditary_property".into(), report::property(&r));
        }
        Ok(v)
    };
    let mut file_modules = Vec::new();
    for (name, rep) in input.file.representations(&input.algebra).map_err(parse_failure)? {
        if rep.is_zero() {
            return Err(Failure { code: EXIT_USAGE, kind: "invalid_input", message: format!("module {} is zero", name) });
        }
        let mut ids = cat.summand_ids(&rep)?;
        ids.dedup();
        let mut v = describe(&ids)?;
        v.as_object_mut().unwrap().insert("name".into(), json!(name));
        file_modules.push(v);
    }
    let mut results = json!({ "indecomposable_dims": dims, "modules": file_modules });
    if enumerate {
        let all = enumerate_tilting(&cat)?;
        let mods = all.iter().map(|t| describe(t)).collect::<Result<Vec<_>, _>>()?;
        results
            .as_object_mut()
            .unwrap()
            .insert("tilting_modules".into(), json!({ "count": all.len(), "modules": mods }));
    }
    Ok((EXIT_OK, results))
}

fn verify(input: &Input, opts: &Options, claims: &[Claim]) -> Result<(i32, Value), Failure> {
    let list = opts.certified(&input.algebra)?;
    let reports = verify_claims(&list, claims, opts.cap_resolution)?;
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let failed = count(Verdict::Fail);
    let results = json!({
        "algebra": algebra_summary(&input.algebra),
        "indecomposables": list.len(),
        "claims": reports.iter().map(report::claim).collect::<Vec<_>>(),
        "summary": {
            "pass": count(Verdict::Pass),
            "fail": failed,
            "not_applicable": count(Verdict::NotApplicable),
        },
    });
    Ok((if failed > 0 { EXIT_FAILED } else { EXIT_OK }, results))
}
