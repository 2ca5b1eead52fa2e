//! Command-line front end. [`run`] parses arguments and returns the JSON
//! document together with the process exit code: 0 on success, 1 on domain
//! errors (reported as `{"error": {"code", "message"}}`), 2 on usage errors.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::burnside::{self, BurnsideElement};
use crate::classset::ClassSet;
use crate::error::{Error, Result};
use crate::group::{tables, FiniteGroup, GroupId, SubgroupClass};
use crate::isotropy::{self, BalmerPrime};
use crate::linalg::{fmt_q, parse_q, Q};
use crate::parse::{parse_expr, parse_set};
use crate::phi_space::{self, ClopenSet};
use crate::semifree::{self, LaurentPoly, Parity, WideSphere};

#[derive(Debug, Parser)]
#[command(name = "ttg", version, about = "Balmer spectra and thick ideals of rational G-spectra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// `Circle`, `O2`, `SO3`, `Finite:<path>` or a built-in finite group
    /// (`Cyclic:n`, `Dihedral:n`, `Symmetric:n`, `Alternating:n`).
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct BoundArg {
    /// Largest series index listed.
    #[arg(long, default_value_t = 6)]
    pub bound: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group catalogue queries.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Is `L` cotoral in `K`?
    Cotoral { #[command(flatten)] g: GroupArg, l: String, k: String },
    /// Is `L` subconjugate to `K`?
    Subconj { #[command(flatten)] g: GroupArg, l: String, k: String },
    /// Decompose the class `K` into classes of the subgroup `H`.
    Restrict { #[command(flatten)] g: GroupArg, h: String, k: String },
    /// The space of classes with finite Weyl group.
    #[command(subcommand)]
    Phi(PhiCmd),
    /// Boolean operations on clopen subsets of Φ.
    #[command(subcommand)]
    Clopen(ClopenCmd),
    /// Table of marks and idempotents of the rational Burnside ring.
    #[command(subcommand)]
    Burnside(BurnsideCmd),
    /// Geometric isotropy of an expression.
    Support { #[command(flatten)] g: GroupArg, expr: String },
    /// Cotorally maximal part of the support of an expression.
    Ctmax { #[command(flatten)] g: GroupArg, expr: String },
    /// Is the set the support of a finite spectrum?
    Realizable { #[command(flatten)] g: GroupArg, set: String },
    /// A wedge of basic cells with the given support.
    Realize { #[command(flatten)] g: GroupArg, set: String },
    /// Is `Y` in the thick tensor ideal generated by `X`?
    Thickt { #[command(flatten)] g: GroupArg, y: String, x: String },
    /// Do two expressions generate the same localizing tensor ideal?
    #[command(name = "loct-eq")]
    LoctEq { #[command(flatten)] g: GroupArg, x: String, y: String },
    /// Zariski closure of a set of classes.
    Closure { #[command(flatten)] g: GroupArg, set: String },
    /// Basic cells separating two cotorally unrelated classes.
    Separate { #[command(flatten)] g: GroupArg, k1: String, k2: String },
    /// The Balmer spectrum as a poset.
    #[command(subcommand)]
    Balmer(BalmerCmd),
    /// The algebraic model of semifree circle spectra.
    #[command(subcommand)]
    Semifree(SemifreeCmd),
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Validate a group and report its order and class count.
    Load { #[command(flatten)] g: GroupArg },
    /// Class families and the structure of Φ.
    Info { #[command(flatten)] g: GroupArg, #[command(flatten)] b: BoundArg },
    /// Subgroup classes with subconjugacy relations.
    Subgroups { #[command(flatten)] g: GroupArg, #[command(flatten)] b: BoundArg },
}

#[derive(Debug, Subcommand)]
pub enum PhiCmd {
    Show { #[command(flatten)] g: GroupArg },
}

#[derive(Debug, Subcommand)]
pub enum ClopenCmd {
    Union { #[command(flatten)] g: GroupArg, a: String, b: String },
    Intersect { #[command(flatten)] g: GroupArg, a: String, b: String },
    Complement { #[command(flatten)] g: GroupArg, a: String },
}

#[derive(Debug, Subcommand)]
pub enum BurnsideCmd {
    Marks { #[command(flatten)] g: GroupArg },
    /// Primitive idempotent of a class over the transitive basis.
    Idempotent { #[command(flatten)] g: GroupArg, class: String },
    /// Marks of a virtual G-set given by comma-separated coefficients over
    /// the transitive basis.
    Eval {
        #[command(flatten)]
        g: GroupArg,
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum BalmerCmd {
    /// Is `℘_L ⊆ ℘_K`?
    Leq { #[command(flatten)] g: GroupArg, l: String, k: String },
    /// Closure of the point `℘_K`.
    Closure { #[command(flatten)] g: GroupArg, k: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Subcommand)]
pub enum SemifreeCmd {
    /// Validate a wide sphere and report its invariants.
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// Isomorphism classes with `p_1 = p_T = poly`.
    Classes {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value = "even")]
        parity: ParityArg,
    },
    /// Homotopy classes `[S^n, W]`, or the cofibre of one when `--class` is
    /// given.
    Attach {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        /// Comma-separated coordinates of the attaching map.
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
    },
    /// The k-twisted conditions, with the model smashed with `S^{kz}`.
    Twist {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Are two wide spheres isomorphic?
    Iso {
        #[arg(long, num_args = 1)]
        file: Vec<PathBuf>,
    },
}

/// Parses the arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.render().to_string(), code);
        }
    };
    match execute(&cli.command) {
        Ok(v) => (render(&v), 0),
        Err(Failure::Usage(msg)) => (format!("error: {msg}\n"), 2),
        Err(Failure::Domain(e)) => (render(&json!({ "error": { "code": e.code(), "message": e.to_string() } })), 1),
    }
}

/// Usage problems that clap cannot see (such as an unknown group name) exit
/// with status 2 like clap's own errors.
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_group(source: &str) -> CliResult<GroupId> {
    let builtin = |rows: tables::Table| -> CliResult<GroupId> { Ok(GroupId::Finite(Arc::new(FiniteGroup::from_table(&rows)?))) };
    let size = |n: &str| -> CliResult<usize> {
        match n.parse() {
            Ok(k) if (1..=64).contains(&k) => Ok(k),
            _ => Err(Failure::Usage(format!("bad group size {n:?}"))),
        }
    };
    match source.split_once(':') {
        None => match source {
            "Circle" | "T" => Ok(GroupId::Circle),
            "O2" => Ok(GroupId::O2),
            "SO3" => Ok(GroupId::SO3),
            _ => Err(Failure::Usage(format!("unknown group {source:?}"))),
        },
        Some(("Finite", path)) => Ok(GroupId::Finite(Arc::new(FiniteGroup::parse(&read(Path::new(path))?)?))),
        Some(("Cyclic", n)) => builtin(tables::cyclic(size(n)?)),
        Some(("Dihedral", n)) => builtin(tables::dihedral(size(n)?)),
        Some(("Symmetric", n)) => builtin(tables::symmetric(size(n)?)),
        Some(("Alternating", n)) => builtin(tables::alternating(size(n)?)),
        _ => Err(Failure::Usage(format!("unknown group {source:?}"))),
    }
}

fn class(g: &GroupId, token: &str) -> Result<SubgroupClass> {
    g.parse_class(token)
}

fn class_list(g: &GroupId, ks: &[SubgroupClass]) -> Vec<String> {
    ks.iter().map(|k| g.class_name(*k)).collect()
}

fn rationals(text: &str) -> Result<Vec<Q>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| parse_q(t).ok_or_else(|| Error::Parse(format!("{t:?} is not a rational"))))
        .collect()
}

fn class_info(g: &GroupId, k: SubgroupClass) -> Result<Value> {
    let weyl = g.weyl_order(k)?;
    let mut v = json!({ "class": g.class_name(k), "in_phi": g.is_in_phi(k)?, "weyl_order": weyl });
    if let (Some(fg), SubgroupClass::Finite(i)) = (g.finite(), k) {
        let c = &fg.classes()[i];
        v["order"] = json!(c.order);
        v["class_size"] = json!(c.class_size());
    }
    Ok(v)
}

fn group_info(g: &GroupId, bound: u64) -> Result<Value> {
    let classes = g.classes(bound).into_iter().map(|k| class_info(g, k)).collect::<Result<Vec<_>>>()?;
    let mut series = serde_json::Map::new();
    for s in [crate::group::Series::C, crate::group::Series::D] {
        if let Some(start) = g.series_start(s) {
            series.insert(s.letter().into(), json!({ "start": start }));
        }
    }
    let mut v = json!({
        "group": g.to_string(),
        "series": series,
        "special": class_list(g, &g.special_classes()),
        "classes": classes,
        "phi": phi_space::phi(g).to_json(),
    });
    if let Some(fg) = g.finite() {
        v["order"] = json!(fg.order());
        v["class_count"] = json!(fg.classes().len());
    }
    Ok(v)
}

fn clopen(g: &GroupId, text: &str) -> Result<ClopenSet> {
    ClopenSet::new(parse_set(g, text)?)
}

fn expr_doc(g: &GroupId, x: &isotropy::SpectrumExpr) -> Value {
    isotropy::expr_json(g, x)
}

fn set_doc(s: &ClassSet) -> Value {
    s.to_json()
}

fn load_sphere(path: &Path) -> Result<WideSphere> {
    WideSphere::parse(&read(path)?)
}

fn sphere_doc(w: &WideSphere) -> Value {
    let r = w.twist_report(0);
    json!({
        "model": w.to_json(),
        "p_fixed": r.p_fixed.to_string(),
        "p_borel": r.p_borel_jump.to_string(),
        "untwisted": r.holds(),
    })
}

fn rows_doc(rows: &[Vec<Q>]) -> Value {
    json!(rows.iter().map(|r| r.iter().map(fmt_q).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn execute(cmd: &Command) -> CliResult<Value> {
    match cmd {
        Command::Group(GroupCmd::Load { g }) => {
            let g = load_group(&g.group)?;
            let fg = g.finite().ok_or_else(|| Error::NotFinite(g.to_string()))?;
            Ok(json!({ "order": fg.order(), "class_count": fg.classes().len(), "valid": true }))
        }
        Command::Group(GroupCmd::Info { g, b }) => Ok(group_info(&load_group(&g.group)?, b.bound)?),
        Command::Group(GroupCmd::Subgroups { g, b }) => {
            let g = load_group(&g.group)?;
            let ks = g.classes(b.bound);
            let mut below = Vec::new();
            for &l in &ks {
                for &k in &ks {
                    if l != k && g.is_subconjugate(l, k)? {
                        below.push(json!([g.class_name(l), g.class_name(k)]));
                    }
                }
            }
            Ok(json!({ "classes": class_list(&g, &ks), "subconjugate": below }))
        }
        Command::Cotoral { g, l, k } => {
            let g = load_group(&g.group)?;
            Ok(json!({ "cotoral": g.is_cotoral(class(&g, l)?, class(&g, k)?)? }))
        }
        Command::Subconj { g, l, k } => {
            let g = load_group(&g.group)?;
            Ok(json!({ "subconjugate": g.is_subconjugate(class(&g, l)?, class(&g, k)?)? }))
        }
        Command::Restrict { g, h, k } => {
            let g = load_group(&g.group)?;
            let r = g.restrict_class(class(&g, h)?, class(&g, k)?)?;
            Ok(json!({ "model": r.model.to_string(), "classes": class_list(&r.model, &r.classes) }))
        }
        Command::Phi(PhiCmd::Show { g }) => Ok(phi_space::phi(&load_group(&g.group)?).to_json()),
        Command::Clopen(op) => {
            let out = match op {
                ClopenCmd::Union { g, a, b } => {
                    let g = load_group(&g.group)?;
                    clopen(&g, a)?.union(&clopen(&g, b)?)?
                }
                ClopenCmd::Intersect { g, a, b } => {
                    let g = load_group(&g.group)?;
                    clopen(&g, a)?.intersection(&clopen(&g, b)?)?
                }
                ClopenCmd::Complement { g, a } => clopen(&load_group(&g.group)?, a)?.complement(),
            };
            Ok(out.to_json())
        }
        Command::Burnside(BurnsideCmd::Marks { g }) => Ok(burnside::marks_matrix(&load_group(&g.group)?)?.to_json()),
        Command::Burnside(BurnsideCmd::Idempotent { g, class: k }) => {
            let g = load_group(&g.group)?;
            let k = class(&g, k)?;
            let coeffs = burnside::primitive_idempotent(&g, k)?;
            Ok(json!({ "class": g.class_name(k), "coefficients": coeffs.iter().map(fmt_q).collect::<Vec<_>>() }))
        }
        Command::Burnside(BurnsideCmd::Eval { g, coeffs }) => {
            let g = load_group(&g.group)?;
            let e = BurnsideElement::from_transitive(&g, &rationals(coeffs)?)?;
            Ok(e.to_json())
        }
        Command::Support { g, expr } => {
            let g = load_group(&g.group)?;
            let x = parse_expr(&g, expr)?;
            Ok(json!({ "expr": expr_doc(&g, &x), "support": set_doc(&isotropy::support(&g, &x)?) }))
        }
        Command::Ctmax { g, expr } => {
            let g = load_group(&g.group)?;
            let x = parse_expr(&g, expr)?;
            Ok(json!({ "ctmax": set_doc(&isotropy::ctmax(&isotropy::support(&g, &x)?)) }))
        }
        Command::Realizable { g, set } => {
            let g = load_group(&g.group)?;
            Ok(json!({ "realizable": isotropy::is_realizable(&parse_set(&g, set)?) }))
        }
        Command::Realize { g, set } => {
            let g = load_group(&g.group)?;
            let x = isotropy::realize(&parse_set(&g, set)?)?;
            Ok(expr_doc(&g, &x))
        }
        Command::Thickt { g, y, x } => {
            let g = load_group(&g.group)?;
            Ok(json!({ "in_thickt": isotropy::in_thickt(&g, &parse_expr(&g, y)?, &parse_expr(&g, x)?)? }))
        }
        Command::LoctEq { g, x, y } => {
            let g = load_group(&g.group)?;
            Ok(json!({ "loct_equal": isotropy::loct_equal(&g, &parse_expr(&g, x)?, &parse_expr(&g, y)?)? }))
        }
        Command::Closure { g, set } => {
            let g = load_group(&g.group)?;
            let s = parse_set(&g, set)?;
            Ok(json!({ "closed": isotropy::is_zariski_closed(&s), "closure": set_doc(&isotropy::zariski_closure(&s)) }))
        }
        Command::Separate { g, k1, k2 } => {
            let g = load_group(&g.group)?;
            let (x1, x2) = isotropy::separate(&g, class(&g, k1)?, class(&g, k2)?)?;
            Ok(json!({
                "x1": expr_doc(&g, &x1),
                "x2": expr_doc(&g, &x2),
                "support1": set_doc(&isotropy::support(&g, &x1)?),
                "support2": set_doc(&isotropy::support(&g, &x2)?),
            }))
        }
        Command::Balmer(BalmerCmd::Leq { g, l, k }) => {
            let g = load_group(&g.group)?;
            let p = BalmerPrime::new(&g, class(&g, l)?)?;
            let q = BalmerPrime::new(&g, class(&g, k)?)?;
            Ok(json!({ "leq": isotropy::prime_leq(&p, &q)? }))
        }
        Command::Balmer(BalmerCmd::Closure { g, k }) => {
            let g = load_group(&g.group)?;
            Ok(json!({ "closure": set_doc(&isotropy::point_closure(&g, class(&g, k)?)?) }))
        }
        Command::Semifree(cmd) => semifree_cmd(cmd),
    }
}

fn semifree_cmd(cmd: &SemifreeCmd) -> CliResult<Value> {
    match cmd {
        SemifreeCmd::Check { file } => match load_sphere(file) {
            Ok(w) => {
                let mut v = sphere_doc(&w);
                v["wide_sphere"] = json!(true);
                Ok(v)
            }
            Err(Error::InvalidWideSphere(reason)) => Ok(json!({ "wide_sphere": false, "reason": reason })),
            Err(e) => Err(e.into()),
        },
        SemifreeCmd::Classes { poly, parity } => {
            let p: LaurentPoly = poly.parse()?;
            let parity = match parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            let classes: Vec<Value> = semifree::enumerate_classes(&p, parity)?.iter().map(sphere_doc).collect();
            Ok(json!({ "poly": p.to_string(), "count": classes.len(), "classes": classes }))
        }
        SemifreeCmd::Attach { file, degree, class } => {
            let w = load_sphere(file)?;
            let hg = w.homotopy_classes(*degree);
            let mut v = json!({
                "degree": degree,
                "hom": rows_doc(&hg.hom),
                "ext": rows_doc(&hg.ext),
                "dim": hg.dim(),
                "provisional": hg.provisional,
            });
            if let Some(c) = class {
                v["cofibre"] = sphere_doc(&w.attach_cell(*degree, &rationals(c)?)?);
            }
            Ok(v)
        }
        SemifreeCmd::Twist { file, k } => {
            let w = load_sphere(file)?;
            let r = w.twist_report(*k);
            Ok(json!({
                "k": k,
                "k_twisted": r.holds(),
                "dimensions_match": r.dimensions_match,
                "overlap_degree": r.overlap_degree,
                "p_fixed": r.p_fixed.to_string(),
                "p_borel": r.p_borel_jump.to_string(),
                "smashed": w.smash_rep_sphere(*k).to_json(),
            }))
        }
        SemifreeCmd::Iso { file } => {
            let [a, b] = file.as_slice() else {
                return Err(Failure::Usage("semifree iso needs exactly two --file arguments".into()));
            };
            Ok(json!({ "isomorphic": semifree::is_isomorphic(&load_sphere(a)?, &load_sphere(b)?)? }))
        }
    }
}
