//! Command-line front end for `dkstp`.
//!
//! Every subcommand prints one JSON object `{"command", "result", "meta"}` on
//! standard output. Exit codes: 0 on success, 1 when the library reports a
//! domain error (singular restriction, element outside the group, ...), 2 on
//! usage or input errors.

pub mod document;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dkstp::dynamics::{self, CtMethod, DimVector, Sign};
use dkstp::group::{self, GroupElement};
use dkstp::{lie, spectral, stp, Error, Matrix, ProductKind, Side, WeightScheme};
use serde_json::{json, Value};

pub use document::{parse_matrix, serialize_matrix, MatrixDocument, ParseError};

#[derive(Debug, Parser)]
#[command(name = "dkstp", version, about = "Dimension-keeping semi-tensor product calculator")]
struct Cli {
    /// Write the result JSON to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct KindArgs {
    #[arg(long, default_value = "left", value_name = "left|right")]
    kind: Side,
    #[arg(long, default_value = "ones", value_name = "ones|average|gauss")]
    weighted: WeightScheme,
}

impl KindArgs {
    fn get(&self) -> ProductKind {
        ProductKind::weighted(self.kind, self.weighted)
    }
}

#[derive(Debug, Args)]
struct A {
    /// Matrix file or inline matrix such as "1 2; 3 4".
    #[arg(long, allow_hyphen_values = true)]
    a: String,
}

#[derive(Debug, Args)]
struct AB {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

#[derive(Debug, Args)]
struct XY {
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
}

#[derive(Debug, Args)]
struct Dims {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Series,
    ClosedForm,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// A ⋉̄ B, with B given by --b or --x.
    Product {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "x", required_unless_present = "x")]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Bridge matrix between inner dimensions n and p.
    Bridge {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// k-th power A^<k>.
    Power {
        #[command(flatten)]
        a: A,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Square restriction of A on R^m.
    Restrict {
        #[command(flatten)]
        a: A,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Characteristic polynomial of Π(A), lowest degree first.
    Charpoly {
        #[command(flatten)]
        a: A,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Residual of the generalized Cayley–Hamilton identity.
    GchCheck {
        #[command(flatten)]
        a: A,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Determinant of Π(A).
    Pdet {
        #[command(flatten)]
        a: A,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Π-inverse of A.
    Pinv {
        #[command(flatten)]
        a: A,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Eigenvalues and eigenvectors of Π(A).
    PiEigen {
        #[command(flatten)]
        a: A,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// [A, B] = A ⋉̄ B − B ⋉̄ A.
    Bracket {
        #[command(flatten)]
        ab: AB,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Matrix of X ↦ [A, X] on column-stacked coordinates.
    Adjoint {
        #[command(flatten)]
        a: A,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Killing form tr(ad_A ad_B).
    Killing {
        #[command(flatten)]
        ab: AB,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Center constraint matrix Γ for m×n matrices.
    Gamma {
        #[command(flatten)]
        dims: Dims,
    },
    /// Dimension of the center of the m×n bracket algebra.
    CenterDim {
        #[command(flatten)]
        dims: Dims,
    },
    /// Group product A ∘ B = A + B + A ⋉̄ B.
    GroupMul {
        #[command(flatten)]
        ab: AB,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Group inverse of A.
    GroupInv {
        #[command(flatten)]
        a: A,
        #[arg(long, default_value_t = group::DEFAULT_GROUP_TOL)]
        tol: f64,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Group exponential, checked to be invertible.
    Exp {
        #[command(flatten)]
        a: A,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Series Σ_{i≥1} A^<i>/i!.
    E0 {
        #[command(flatten)]
        a: A,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Row-norm formula and sampled operator norm of A (left product).
    Norm {
        #[command(flatten)]
        a: A,
        /// Dimensions of the sampled vectors; defaults to the column count of A.
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// x(k+1) = A ⋉̄ x(k).
    SimulateDt {
        #[command(flatten)]
        a: A,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Solution of ẋ = A ⋉̄ x at time t.
    SimulateCt {
        #[command(flatten)]
        a: A,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "closed-form")]
        method: MethodArg,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Vector product x ⋉̄ y.
    Vv {
        #[command(flatten)]
        xy: XY,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// x ± y in the dimension-free vector space.
    VecAdd {
        #[command(flatten)]
        xy: XY,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Inner product of x and y.
    Inner {
        #[command(flatten)]
        xy: XY,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Product { .. } => "product",
            Command::Bridge { .. } => "bridge",
            Command::Power { .. } => "power",
            Command::Restrict { .. } => "restrict",
            Command::Charpoly { .. } => "charpoly",
            Command::GchCheck { .. } => "gch-check",
            Command::Pdet { .. } => "pdet",
            Command::Pinv { .. } => "pinv",
            Command::PiEigen { .. } => "pi-eigen",
            Command::Bracket { .. } => "bracket",
            Command::Adjoint { .. } => "adjoint",
            Command::Killing { .. } => "killing",
            Command::Gamma { .. } => "gamma",
            Command::CenterDim { .. } => "center-dim",
            Command::GroupMul { .. } => "group-mul",
            Command::GroupInv { .. } => "group-inv",
            Command::Exp { .. } => "exp",
            Command::E0 { .. } => "e0",
            Command::Norm { .. } => "norm",
            Command::SimulateDt { .. } => "simulate-dt",
            Command::SimulateCt { .. } => "simulate-ct",
            Command::Vv { .. } => "vv",
            Command::VecAdd { .. } => "vec-add",
            Command::Inner { .. } => "inner",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{flag}: {source}")]
    Parse { flag: &'static str, source: ParseError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Domain(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(
                Error::InvalidArgument(_)
                | Error::InvalidDimension(_)
                | Error::DimensionMismatch { .. }
                | Error::NotSquare { .. }
                | Error::InvalidData { .. }
                | Error::NonFinite { .. },
            ) => 2,
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line. `argv` excludes the program name.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("dkstp")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    let name = cli.command.name();
    let result = execute(&cli.command).and_then(|(result, meta)| {
        let body = json!({ "command": name, "result": result, "meta": meta });
        let mut text = serde_json::to_string(&body).expect("values serialize");
        text.push('\n');
        match &cli.out {
            Some(path) => {
                fs::write(path, &text).map_err(|e| CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                Ok(String::new())
            }
            None => Ok(text),
        }
    });
    match result {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Reads a matrix given either inline or as a file path. Values containing
/// `;` or starting like a number or JSON object are taken as inline text.
fn load(flag: &'static str, value: &str) -> Result<Matrix, CliError> {
    let trimmed = value.trim_start();
    let inline = value.contains(';')
        || trimmed.starts_with(|c: char| c.is_ascii_digit() || matches!(c, '-' | '+' | '.' | '{'));
    let text = if inline {
        value.to_string()
    } else {
        fs::read_to_string(value).map_err(|e| CliError::Io {
            path: value.to_string(),
            message: e.to_string(),
        })?
    };
    parse_matrix(&text).map_err(|source| CliError::Parse { flag, source })
}

fn load_vector(flag: &'static str, value: &str) -> Result<DimVector, CliError> {
    let m = load(flag, value)?;
    if m.rows() != 1 && m.cols() != 1 {
        return Err(CliError::Usage(format!(
            "{flag}: expected a vector, got a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    Ok(DimVector::new(m.into_vec())?)
}

fn doc(m: &Matrix) -> Value {
    json!(MatrixDocument::from(m))
}

fn shape(m: &Matrix) -> Value {
    json!([m.rows(), m.cols()])
}

fn kind_meta(kind: ProductKind) -> Value {
    json!({ "side": kind.side.name(), "weights": kind.scheme.name() })
}

fn complex(z: num_complex::Complex64) -> Value {
    json!([z.re, z.im])
}

fn branch_name(b: spectral::Branch) -> &'static str {
    match b {
        spectral::Branch::Direct => "direct",
        spectral::Branch::Transposed => "transposed",
    }
}

fn execute(cmd: &Command) -> Result<(Value, Value), CliError> {
    Ok(match cmd {
        Command::Product { a, b, x, kind } => {
            let kind = kind.get();
            let a = load("--a", a)?;
            let b = match (b, x) {
                (Some(b), _) => load("--b", b)?,
                (None, Some(x)) => load_vector("--x", x)?.to_column(),
                (None, None) => return Err(CliError::Usage("product needs --b or --x".into())),
            };
            let c = stp::dk_stp(&a, &b, kind)?;
            (doc(&c), json!({ "a": shape(&a), "b": shape(&b), "kind": kind_meta(kind) }))
        }
        Command::Bridge { n, p, kind } => {
            let kind = kind.get();
            let k = stp::bridge_matrix(*n, *p, kind)?;
            (doc(&k), json!({ "n": n, "p": p, "kind": kind_meta(kind) }))
        }
        Command::Power { a, k, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let p = stp::dk_power(&a, *k, kind)?;
            (doc(&p), json!({ "a": shape(&a), "k": k, "kind": kind_meta(kind) }))
        }
        Command::Restrict { a, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let r = spectral::square_restriction(&a, kind)?;
            (doc(&r.value), json!({ "a": shape(&a), "kind": kind_meta(kind) }))
        }
        Command::Charpoly { a, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let r = spectral::pi_of(&a, kind)?;
            let p = dkstp::linalg::charpoly(&r.value)?;
            (
                json!(p.monic_coeffs()),
                json!({ "a": shape(&a), "branch": branch_name(r.branch), "order": "ascending", "kind": kind_meta(kind) }),
            )
        }
        Command::GchCheck { a, tol, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let report = spectral::gch_check(&a, kind)?;
            (
                json!({
                    "residual": report.residual,
                    "holds": report.residual <= *tol,
                    "coefficients": report.poly.monic_coeffs(),
                }),
                json!({ "a": shape(&a), "branch": branch_name(report.branch), "tol": tol, "kind": kind_meta(kind) }),
            )
        }
        Command::Pdet { a, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let d = spectral::pdet(&a, kind)?;
            let invertible = spectral::pi_invertible(&a, kind)?;
            (json!(d), json!({ "a": shape(&a), "invertible": invertible, "kind": kind_meta(kind) }))
        }
        Command::Pinv { a, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let b = spectral::pi_inverse(&a, kind)?;
            (doc(&b), json!({ "a": shape(&a), "kind": kind_meta(kind) }))
        }
        Command::PiEigen { a, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let branch = spectral::pi_of(&a, kind)?.branch;
            let pairs = spectral::pi_eigen(&a, kind)?;
            let list: Vec<Value> = pairs
                .iter()
                .map(|p| {
                    json!({
                        "value": complex(p.value),
                        "vector": p.vector.iter().map(|z| complex(*z)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            (
                json!(list),
                json!({ "a": shape(&a), "branch": branch_name(branch), "complex": "[re, im]", "kind": kind_meta(kind) }),
            )
        }
        Command::Bracket { ab, kind } => {
            let kind = kind.get();
            let (a, b) = (load("--a", &ab.a)?, load("--b", &ab.b)?);
            let c = lie::bracket(&a, &b, kind)?;
            (doc(&c), json!({ "a": shape(&a), "b": shape(&b), "kind": kind_meta(kind) }))
        }
        Command::Adjoint { a, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let ad = lie::ad_matrix(&a, kind)?;
            (doc(&ad.value), json!({ "a": shape(&a), "stacking": "column", "kind": kind_meta(kind) }))
        }
        Command::Killing { ab, kind } => {
            let kind = kind.get();
            let (a, b) = (load("--a", &ab.a)?, load("--b", &ab.b)?);
            let k = lie::killing_form(&a, &b, kind)?;
            (json!(k), json!({ "a": shape(&a), "b": shape(&b), "kind": kind_meta(kind) }))
        }
        Command::Gamma { dims } => {
            let g = lie::gamma_matrix(dims.m, dims.n)?;
            (doc(&g), json!({ "m": dims.m, "n": dims.n, "kind": kind_meta(ProductKind::LEFT) }))
        }
        Command::CenterDim { dims } => {
            let d = lie::center_dim(dims.m, dims.n)?;
            (json!(d), json!({ "m": dims.m, "n": dims.n, "kind": kind_meta(ProductKind::LEFT) }))
        }
        Command::GroupMul { ab, kind } => {
            let kind = kind.get();
            let (a, b) = (load("--a", &ab.a)?, load("--b", &ab.b)?);
            let c = group::group_mul(&GroupElement::new(a.clone()), &GroupElement::new(b.clone()), kind)?;
            (doc(&c.coord), json!({ "a": shape(&a), "b": shape(&b), "kind": kind_meta(kind) }))
        }
        Command::GroupInv { a, tol, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let inv = group::group_inverse(&GroupElement::new(a.clone()), *tol, kind)?;
            (doc(&inv.coord), json!({ "a": shape(&a), "tol": tol, "kind": kind_meta(kind) }))
        }
        Command::Exp { a, tol, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let g = group::exp_map(&a, *tol, kind)?;
            (doc(&g.coord), json!({ "a": shape(&a), "tol": tol, "kind": kind_meta(kind) }))
        }
        Command::E0 { a, tol, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let g = group::e0_map(&a, *tol, kind)?;
            (doc(&g.coord), json!({ "a": shape(&a), "tol": tol, "kind": kind_meta(kind) }))
        }
        Command::Norm { a, dims, samples, seed } => {
            let a = load("--a", &a.a)?;
            let dims = if dims.is_empty() { vec![a.cols()] } else { dims.clone() };
            let formula = dynamics::dk_norm_formula(&a);
            let empirical = dynamics::dk_norm_empirical(&a, &dims, *samples, *seed)?;
            (
                json!({ "formula": formula, "empirical": empirical }),
                json!({ "a": shape(&a), "dims": dims, "samples": samples, "seed": seed, "kind": kind_meta(ProductKind::LEFT) }),
            )
        }
        Command::SimulateDt { a, x, steps, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let x0 = load_vector("--x", x)?;
            let traj = dynamics::dt_trajectory(&a, &x0, *steps, kind)?;
            let samples: Vec<Value> = traj
                .samples
                .iter()
                .map(|s| json!({ "time": s.time, "state": doc(&s.state.to_column()) }))
                .collect();
            (json!(samples), json!({ "a": shape(&a), "steps": steps, "kind": kind_meta(kind) }))
        }
        Command::SimulateCt { a, x, t, tol, method, kind } => {
            let kind = kind.get();
            let a = load("--a", &a.a)?;
            let x0 = load_vector("--x", x)?;
            let requested = match method {
                MethodArg::Series => CtMethod::Series,
                MethodArg::ClosedForm => CtMethod::ClosedForm,
            };
            let sol = dynamics::ct_trajectory(&a, &x0, *t, *tol, kind, requested)?;
            let used = match sol.method {
                CtMethod::Series => "series",
                CtMethod::ClosedForm => "closed-form",
            };
            (
                doc(&sol.state.to_column()),
                json!({ "a": shape(&a), "t": t, "tol": tol, "method": used, "terms": sol.terms, "kind": kind_meta(kind) }),
            )
        }
        Command::Vv { xy, kind } => {
            let kind = kind.get();
            let (x, y) = (load_vector("--x", &xy.x)?, load_vector("--y", &xy.y)?);
            let v = stp::vv_stp(x.as_slice(), y.as_slice(), kind)?;
            (json!(v), json!({ "x": x.dim(), "y": y.dim(), "kind": kind_meta(kind) }))
        }
        Command::VecAdd { xy, sign } => {
            let (x, y) = (load_vector("--x", &xy.x)?, load_vector("--y", &xy.y)?);
            let (s, name) = match sign {
                SignArg::Plus => (Sign::Plus, "plus"),
                SignArg::Minus => (Sign::Minus, "minus"),
            };
            let z = dynamics::vec_add(&x, &y, s)?;
            (doc(&z.to_column()), json!({ "x": x.dim(), "y": y.dim(), "sign": name }))
        }
        Command::Inner { xy } => {
            let (x, y) = (load_vector("--x", &xy.x)?, load_vector("--y", &xy.y)?);
            let v = dynamics::inner(&x, &y)?;
            (json!(v), json!({ "x": x.dim(), "y": y.dim() }))
        }
    })
}
