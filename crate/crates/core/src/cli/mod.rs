//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the exit code with a line-oriented `key = value`
//! report. Exit codes: 0 success, 1 a mathematical check failed, 2 usage or
//! configuration error.

mod config;

use std::ffi::OsString;
use std::fmt::Display;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use config::{RunConfig, SpaceConfig, TermConfig, GroupConfig, TripleConfig, DEFAULT_CONDUCTOR};

use crate::braided::{braid_check, BraidedVectorSpace};
use crate::freealg::{
    braid_word_action, braided_coproduct, default_degree_cap, homogeneous_degree, parse_free, primitivity_defect,
    symmetrizer_matrix, SymmetrizerTower, TensorSquareElement, Word,
};
use crate::lifting::{
    build_lifting_to, hopf_ideal_check, iso_classify_with_bound, one_dim_rep, pbw_check, zero_divisor_witness,
    DefiningRelation, LiftingPresentation, DEFAULT_AUT_BOUND, DEFAULT_LIFT_DEGREE,
};
use crate::nichols::{
    adjoin_primitive_params, ghost_of, nichols_dims_in, relation_generators_in, table1_lookup, NicholsError,
};
use crate::rewrite::{complete_to_degree, MonomialOrder, RewriteSystem};
use crate::scalar::{CyclotomicField, Matrix, Scalar};
use crate::smash::{SmashAlgebra, SmashElement};
use crate::ydcat::{
    classify_dim2, realize_braiding, realize_braiding_permissive, transport_triple, validate_yd_triple, Dim2Class,
    Dim2Module, FGAbelianGroup, GroupElem, GroupHom, YdData, YdTriple, AUTOMATIC_CONDITIONS,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments or configuration (exit 2).
    Usage(String),
    /// A computation refused its input on mathematical grounds (exit 1).
    Math(String),
}

fn usage(e: impl Display) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "jordan-lift", version, about = "Exact computations with Jordan and super Jordan planes and their liftings")]
pub struct Cli {
    /// Conductor N of the coefficient field Q(zeta_N).
    #[arg(long, global = true)]
    conductor: Option<u32>,
    /// Degree bound for dimension tables, relations and completions.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// A braided vector space: a named space or the `[space]` section of the config.
#[derive(Args, Debug, Default)]
struct SpaceArgs {
    /// jordan, super-jordan, block, block-point or diagonal.
    #[arg(long)]
    space: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    q12: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q21: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q22: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Diagonal braiding matrix, rows separated by `;`, entries by `,`.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
}

/// A YD-triple: `jordan` or `super-jordan` over Z, or the `[group]` and
/// `[triple]` sections of the config.
#[derive(Args, Debug, Default)]
struct TripleArgs {
    #[arg(long)]
    triple: Option<String>,
}

#[derive(Args, Debug)]
struct LiftArgs {
    #[command(flatten)]
    triple: TripleArgs,
    /// Deformation parameter; overrides `triple.lambda`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Args, Debug)]
struct RelationArgs {
    /// A relation, as an element of T(V) (or of T(V)#kG when a triple is selected).
    #[arg(long = "relation", allow_hyphen_values = true)]
    relations: Vec<String>,
    /// Number of letters of the free algebra.
    #[arg(long)]
    dim: Option<usize>,
    /// Letters in increasing order, e.g. `1,2` for x1 < x2.
    #[arg(long)]
    order: Option<String>,
    /// Add the minimal relations of the Nichols algebra of the selected space.
    #[arg(long)]
    nichols: bool,
    /// Load a system previously printed by `complete` instead of completing.
    #[arg(long)]
    system: Option<PathBuf>,
    #[command(flatten)]
    space: SpaceArgs,
    #[command(flatten)]
    triple: TripleArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exhaustive braid-equation check.
    CheckBraid {
        #[command(flatten)]
        space: SpaceArgs,
        /// Override one coefficient, `i,j,k,l=value`.
        #[arg(long = "set", allow_hyphen_values = true)]
        set: Vec<String>,
    },
    /// Graded dimensions of the Nichols algebra.
    Dims {
        #[command(flatten)]
        space: SpaceArgs,
        /// Rank the full symmetrizer matrices instead of the factorized tower.
        #[arg(long)]
        dense: bool,
    },
    /// New minimal relations of the Nichols algebra, degree by degree.
    Relations {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Block+point parameters of an adjoined primitive element.
    Primitives {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, allow_hyphen_values = true)]
        adjoin: String,
        /// x-degree of the adjoined element; inferred when omitted.
        #[arg(long)]
        degree: Option<usize>,
        /// Relations already known to hold, used to reduce before reading weights.
        #[arg(long, allow_hyphen_values = true)]
        modulo: Vec<String>,
    },
    /// Ghost of a block+point braiding.
    Ghost {
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// GKdim lookup for a block and a point.
    Table1 {
        #[arg(long, allow_hyphen_values = true)]
        q12q21: String,
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
        #[arg(long, allow_hyphen_values = true)]
        q22: String,
        #[arg(long, allow_hyphen_values = true)]
        ghost: String,
    },
    /// Complete a set of relations to a rewriting system.
    Complete {
        #[command(flatten)]
        rel: RelationArgs,
    },
    /// Normal forms modulo a rewriting system.
    Nf {
        #[command(flatten)]
        rel: RelationArgs,
        #[arg(long = "element", allow_hyphen_values = true, required = true)]
        elements: Vec<String>,
    },
    /// Irreducible words per degree.
    Hilbert {
        #[command(flatten)]
        rel: RelationArgs,
        /// Also compute the Nichols dimensions of the space and compare.
        #[arg(long)]
        compare: bool,
    },
    /// Liftings U(D, lambda).
    Lift {
        #[command(subcommand)]
        action: LiftCommand,
    },
    /// Evaluate scalar expressions.
    Scalar {
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Rank and kernel of a matrix.
    Rank {
        /// Rows separated by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Matsumoto lift of a permutation applied to a tensor.
    BraidAction {
        #[command(flatten)]
        space: SpaceArgs,
        /// Word in the adjacent transpositions, e.g. `1,2,1`.
        #[arg(long)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Braided coproduct in T(V) and the primitivity defect.
    Coproduct {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// YD-triples.
    Triple {
        #[command(subcommand)]
        action: TripleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum LiftCommand {
    /// Defining relations and the completed rewriting system.
    Build {
        #[command(flatten)]
        lift: LiftArgs,
    },
    /// Skew-primitivity of the defining relations.
    Check {
        #[command(flatten)]
        lift: LiftArgs,
        /// Replace the defining relations; each needs a matching `--skew`.
        #[arg(long = "relation", allow_hyphen_values = true)]
        relations: Vec<String>,
        /// k such that the relation should be (g^k, 1)-skew-primitive.
        #[arg(long, allow_hyphen_values = true)]
        skew: Vec<i64>,
    },
    /// Flatness and layer counts up to the degree bound.
    Pbw {
        #[command(flatten)]
        lift: LiftArgs,
        /// Drop every relation (the free smash product).
        #[arg(long)]
        no_relations: bool,
    },
    /// Isomorphism test against a second presentation.
    Iso {
        #[command(flatten)]
        lift: LiftArgs,
        /// Config of the second presentation.
        #[arg(long)]
        other: Option<PathBuf>,
        #[arg(long)]
        other_triple: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        other_lambda: Option<String>,
        /// Transport the second triple along the automorphism with these generator images.
        #[arg(long, allow_hyphen_values = true)]
        transport: Option<String>,
        /// Entry bound for the automorphism search.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Normal forms in U(D, lambda).
    Nf {
        #[command(flatten)]
        lift: LiftArgs,
        #[arg(long = "element", allow_hyphen_values = true, required = true)]
        elements: Vec<String>,
    },
    /// Coproduct in T(V)#kG.
    Coproduct {
        #[command(flatten)]
        lift: LiftArgs,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// One-dimensional representation with trivial group action.
    Rep {
        #[command(flatten)]
        lift: LiftArgs,
        #[arg(long, allow_hyphen_values = true)]
        x1: String,
        #[arg(long, allow_hyphen_values = true)]
        x2: String,
    },
    /// The zero divisors a = s(g - 1) + x1, b = s(g + 1) + x1 with s^2 = lambda.
    Zerodiv {
        #[command(flatten)]
        lift: LiftArgs,
        #[arg(long, allow_hyphen_values = true)]
        sqrt_lambda: String,
    },
}

#[derive(Subcommand, Debug)]
enum TripleCommand {
    /// List violated constraints.
    Validate {
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// chi and eta at a group element.
    Eval {
        #[command(flatten)]
        triple: TripleArgs,
        /// Coordinates, e.g. `2` or `1,0`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// The braiding of V_g(chi, eta).
    Realize {
        #[command(flatten)]
        triple: TripleArgs,
        /// Skip validation, e.g. to see the diagonal braiding when eta(g) = 0.
        #[arg(long)]
        permissive: bool,
    },
    /// Classify a two-dimensional homogeneous module.
    Classify {
        /// Action of each group generator, rows separated by `;`.
        #[arg(long = "action", allow_hyphen_values = true, required = true)]
        actions: Vec<String>,
        /// Coordinates of the degree.
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
    /// Transport along an automorphism given by generator images.
    Transport {
        #[command(flatten)]
        triple: TripleArgs,
        /// Images of the generators, separated by `;`, e.g. `-1`.
        #[arg(long, allow_hyphen_values = true)]
        map: String,
    },
}

/// Library operations reached by each subcommand.
pub const DISPATCH: &[(&str, &[&str])] = &[
    ("check-braid", &["make_block", "make_block_point", "make_diagonal", "from_tensor", "braid_check"]),
    ("dims", &["nichols_dims", "symmetrizer_matrix", "rank_and_kernel"]),
    ("relations", &["relation_generators"]),
    ("primitives", &["adjoin_primitive_params", "primitivity_defect", "make_block_point", "braid_check", "ghost_of", "table1_lookup", "complete_to_degree"]),
    ("ghost", &["ghost_of"]),
    ("table1", &["table1_lookup", "is_root_of_unity"]),
    ("complete", &["complete_to_degree", "relation_generators"]),
    ("nf", &["normal_form", "complete_to_degree"]),
    ("hilbert", &["hilbert_function", "nichols_dims"]),
    ("lift build", &["build_lifting", "validate_yd_triple"]),
    ("lift check", &["hopf_ideal_check", "smash_coproduct"]),
    ("lift pbw", &["pbw_check"]),
    ("lift iso", &["iso_classify", "transport_triple"]),
    ("lift nf", &["normal_form", "smash_multiply"]),
    ("lift coproduct", &["smash_coproduct", "smash_multiply"]),
    ("lift rep", &["one_dim_rep"]),
    ("lift zerodiv", &["zero_divisor_witness"]),
    ("scalar", &["parse_scalar", "is_root_of_unity"]),
    ("rank", &["rank_and_kernel"]),
    ("braid-action", &["braid_word_action"]),
    ("coproduct", &["braided_coproduct", "primitivity_defect"]),
    ("triple validate", &["validate_yd_triple"]),
    ("triple eval", &["evaluate"]),
    ("triple realize", &["realize_braiding", "braid_check"]),
    ("triple classify", &["classify_dim2"]),
    ("triple transport", &["transport_triple", "validate_yd_triple"]),
];

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return (if e.use_stderr() { 2 } else { 0 }, e.to_string()),
    };
    match execute(cli) {
        Ok(report) => (if report.failed { 1 } else { 0 }, report.text()),
        Err(CliError::Usage(m)) => (2, format!("error: {m}\n")),
        Err(CliError::Math(m)) => (1, format!("error: {m}\n")),
    }
}

#[derive(Default)]
struct Report {
    lines: Vec<String>,
    failed: bool,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn kv(&mut self, key: &str, value: impl Display) {
        self.lines.push(format!("{key} = {value}"));
    }

    /// Appends a possibly multi-line block.
    fn block(&mut self, s: impl Display) {
        self.lines.extend(s.to_string().lines().map(str::to_string));
    }

    fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

struct Ctx {
    field: CyclotomicField,
    max_degree: Option<usize>,
    config: RunConfig,
}

fn execute(cli: Cli) -> Result<Report, CliError> {
    let config = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    let conductor = cli.conductor.or(config.conductor).unwrap_or(DEFAULT_CONDUCTOR);
    let field = CyclotomicField::new(conductor).map_err(usage)?;
    let ctx = Ctx { field, max_degree: cli.max_degree, config };
    let mut r = Report::default();
    match cli.command {
        Command::CheckBraid { space, set } => check_braid(&ctx, &space, &set, &mut r)?,
        Command::Dims { space, dense } => dims(&ctx, &space, dense, &mut r)?,
        Command::Relations { space } => relations(&ctx, &space, &mut r)?,
        Command::Primitives { triple, adjoin, degree, modulo } => primitives(&ctx, &triple, &adjoin, degree, &modulo, &mut r)?,
        Command::Ghost { eps, a } => {
            let g = ghost_of(&ctx.scalar("eps", &eps)?, &ctx.scalar("a", &a)?).map_err(usage)?;
            r.kv("ghost", &g.value);
            r.kv("discrete", g.discrete);
        }
        Command::Table1 { q12q21, eps, q22, ghost } => {
            let v = table1_lookup(
                &ctx.scalar("q12q21", &q12q21)?,
                &ctx.scalar("eps", &eps)?,
                &ctx.scalar("q22", &q22)?,
                &ctx.scalar("ghost", &ghost)?,
            )
            .map_err(usage)?;
            r.line(v.to_string());
        }
        Command::Complete { rel } => {
            let sys = ctx.system(&rel)?;
            r.block(sys.to_text());
            r.kv("derived-rules", sys.derived_rules().count());
        }
        Command::Nf { rel, elements } => {
            let sys = ctx.system(&rel)?;
            for e in &elements {
                let x = sys.algebra().parse(e).map_err(usage)?;
                r.kv("nf", sys.normal_form(&x).map_err(usage)?);
            }
        }
        Command::Hilbert { rel, compare } => {
            let sys = ctx.system(&rel)?;
            let n = ctx.degree(sys.degree_bound());
            if n > sys.degree_bound() {
                return Err(CliError::Usage(format!("degree {n} exceeds the system bound {}", sys.degree_bound())));
            }
            let h = sys.hilbert_function(n);
            r.line(join(&h));
            if compare {
                let space = ctx.space(&rel.space)?;
                let dims = nichols_dims_in(&mut SymmetrizerTower::new(&space), n).map_err(usage)?;
                r.kv("nichols", &dims);
                let agree = dims.dims == h;
                r.kv("agree", agree);
                r.failed = !agree;
            }
        }
        Command::Lift { action } => lift(&ctx, action, &mut r)?,
        Command::Scalar { exprs } => {
            for e in &exprs {
                let s = ctx.scalar("expr", e)?;
                r.kv("value", &s);
                if s.is_zero() {
                    r.kv("root-of-unity", "none");
                    continue;
                }
                match s.is_root_of_unity().map_err(usage)? {
                    Some(k) => r.kv("root-of-unity", k),
                    None => r.kv("root-of-unity", "none"),
                }
            }
        }
        Command::Rank { matrix } => {
            let rows = ctx.matrix(&matrix)?;
            let m = Matrix::from_rows(ctx.field, rows);
            let (rank, kernel) = m.rank_and_kernel();
            r.kv("rank", rank);
            for (i, v) in kernel.iter().enumerate() {
                r.kv(&format!("kernel[{}]", i + 1), tuple(v));
            }
        }
        Command::BraidAction { space, word, vector } => {
            let space = ctx.space(&space)?;
            let v = parse_free(&vector, ctx.field, space.dim()).map_err(usage)?;
            let n = homogeneous_degree(&v).ok_or_else(|| usage("vector must be homogeneous and nonzero"))?;
            let w = parse_list::<usize>(&word, ',')?;
            r.kv("result", braid_word_action(&space, n, &w, &v).map_err(usage)?);
        }
        Command::Coproduct { space, element } => {
            let space = ctx.space(&space)?;
            let e = parse_free(&element, ctx.field, space.dim()).map_err(usage)?;
            r.kv("delta", braided_coproduct(&space, &e));
            let d = primitivity_defect(&space, &e).map_err(usage)?;
            r.kv("defect", &d);
            r.kv("primitive", d.is_zero());
        }
        Command::Triple { action } => triple(&ctx, action, &mut r)?,
    }
    Ok(r)
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn tuple(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", "))
}

fn parse_list<T: std::str::FromStr>(text: &str, sep: char) -> Result<Vec<T>, CliError> {
    text.split(sep)
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|_| CliError::Usage(format!("cannot parse {s:?} in {text:?}"))))
        .collect()
}

impl Ctx {
    fn degree(&self, default: usize) -> usize {
        self.max_degree.unwrap_or(default)
    }

    fn scalar(&self, key: &str, text: &str) -> Result<Scalar, CliError> {
        config::scalar(self.field, key, text)
    }

    fn matrix(&self, text: &str) -> Result<Vec<Vec<Scalar>>, CliError> {
        text.split(';')
            .map(|row| row.split(',').map(|e| self.scalar("matrix", e.trim())).collect::<Result<Vec<_>, _>>())
            .collect()
    }

    fn space(&self, args: &SpaceArgs) -> Result<BraidedVectorSpace, CliError> {
        let spec = match &args.space {
            Some(kind) => {
                if kind == "custom" {
                    return Err(usage("custom spaces are given by the [space] section of a config"));
                }
                let q = args.q.as_ref().map(|text| text.split(';').map(|row| row.split(',').map(|e| e.trim().to_string()).collect()).collect());
                SpaceConfig {
                    kind: kind.clone(),
                    eps: args.eps.clone(),
                    ell: args.ell,
                    q12: args.q12.clone(),
                    q21: args.q21.clone(),
                    q22: args.q22.clone(),
                    a: args.a.clone(),
                    q,
                    ..Default::default()
                }
            }
            None => self.config.space.clone().ok_or_else(|| usage("no space selected: pass --space or a config with [space]"))?,
        };
        config::build_space(self.field, &spec)
    }

    fn has_triple(&self, args: &TripleArgs) -> bool {
        args.triple.is_some() || self.config.triple.is_some()
    }

    fn data(&self, args: &TripleArgs) -> Result<YdData, CliError> {
        if let Some(name) = &args.triple {
            return Ok(config::named_triple(self.field, name)?.data().clone());
        }
        let t = self.config.triple.as_ref().ok_or_else(|| usage("no triple selected: pass --triple or a config with [triple]"))?;
        config::build_data(self.field, self.config.group.as_ref(), t)
    }

    fn triple(&self, args: &TripleArgs) -> Result<YdTriple, CliError> {
        config::validated(self.data(args)?)
    }

    fn lambda(&self, args: &LiftArgs) -> Result<Scalar, CliError> {
        match (&args.lambda, self.config.triple.as_ref().and_then(|t| t.lambda.as_ref())) {
            (Some(l), _) | (None, Some(l)) => self.scalar("lambda", l),
            (None, None) => Ok(self.field.zero()),
        }
    }

    fn presentation(&self, args: &LiftArgs, degree: usize) -> Result<LiftingPresentation, CliError> {
        let t = self.triple(&args.triple)?;
        build_lifting_to(&t, &self.lambda(args)?, degree).map_err(usage)
    }

    fn system(&self, rel: &RelationArgs) -> Result<RewriteSystem, CliError> {
        let smash = self.has_triple(&rel.triple) && !rel.nichols;
        let (alg, dim) = if smash {
            let alg = SmashAlgebra::from_triple(&self.triple(&rel.triple)?);
            (alg, 2)
        } else {
            let dim = match (rel.nichols, rel.dim) {
                (true, _) => self.space(&rel.space)?.dim(),
                (false, Some(d)) => d,
                (false, None) => 2,
            };
            (SmashAlgebra::free(self.field, dim), dim)
        };
        if let Some(path) = &rel.system {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            return RewriteSystem::from_text(alg, &text).map_err(usage);
        }
        let order = match &rel.order {
            Some(text) => MonomialOrder::with_letters(parse_list::<u8>(text, ',')?).map_err(usage)?,
            None => MonomialOrder::deglex(dim),
        };
        let d = self.degree(8);
        let mut elems: Vec<SmashElement> = Vec::new();
        if rel.nichols {
            let space = self.space(&rel.space)?;
            let mut tower = SymmetrizerTower::new(&space);
            for n in 2..=d {
                for e in relation_generators_in(&mut tower, n).map_err(usage)? {
                    elems.push(alg.from_free(&e));
                }
            }
        }
        for text in &rel.relations {
            elems.push(alg.parse(text).map_err(usage)?);
        }
        complete_to_degree(&alg, &elems, order, d).map_err(usage)
    }
}

fn check_braid(ctx: &Ctx, args: &SpaceArgs, set: &[String], r: &mut Report) -> Result<(), CliError> {
    let mut space = ctx.space(args)?;
    for s in set {
        let (idx, value) = s.split_once('=').ok_or_else(|| usage(format!("--set expects i,j,k,l=value, got {s:?}")))?;
        let idx = parse_list::<usize>(idx, ',')?;
        let d = space.dim();
        if idx.len() != 4 || idx.iter().any(|&x| x == 0 || x > d) {
            return Err(usage(format!("--set indices must be four numbers in 1..{d}")));
        }
        space = space.with_coeff(idx[0], idx[1], idx[2], idx[3], ctx.scalar("value", value)?);
    }
    let d = space.dim();
    r.kv("dim", d);
    r.kv("invertible", space.matrix().rank() == d * d);
    match braid_check(&space) {
        Ok(()) => r.line("braid: ok"),
        Err(f) => {
            r.line("braid: failed");
            let (i, j, k) = f.triple;
            r.kv("counterexample", format!("x{i} ⊗ x{j} ⊗ x{k}"));
            r.failed = true;
        }
    }
    Ok(())
}

fn dims(ctx: &Ctx, args: &SpaceArgs, dense: bool, r: &mut Report) -> Result<(), CliError> {
    let space = ctx.space(args)?;
    let n = ctx.degree(6);
    if dense {
        let cap = default_degree_cap(space.dim());
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let m = symmetrizer_matrix(&space, k, cap).map_err(usage)?;
            out.push(m.rank_and_kernel().0 as u64);
        }
        r.line(join(&out));
    } else {
        r.line(nichols_dims_in(&mut SymmetrizerTower::new(&space), n).map_err(usage)?.to_string());
    }
    Ok(())
}

fn relations(ctx: &Ctx, args: &SpaceArgs, r: &mut Report) -> Result<(), CliError> {
    let space = ctx.space(args)?;
    let mut tower = SymmetrizerTower::new(&space);
    for n in 2..=ctx.degree(4) {
        let rels = relation_generators_in(&mut tower, n).map_err(usage)?;
        let key = format!("degree-{n}");
        if rels.is_empty() {
            r.kv(&key, "none");
        }
        for e in rels {
            r.kv(&key, e);
        }
    }
    Ok(())
}

fn primitives(
    ctx: &Ctx,
    args: &TripleArgs,
    adjoin: &str,
    degree: Option<usize>,
    modulo: &[String],
    r: &mut Report,
) -> Result<(), CliError> {
    let t = ctx.triple(args)?;
    let z = parse_free(adjoin, ctx.field, 2).map_err(usage)?;
    let m = match degree {
        Some(m) => m,
        None => homogeneous_degree(&z).ok_or_else(|| usage("element must be homogeneous and nonzero"))?,
    };
    let space = realize_braiding(&t);
    r.kv("kind", t.kind());
    r.kv("defect", primitivity_defect(&space, &z).map_err(usage)?);
    let sys = if modulo.is_empty() {
        None
    } else {
        let alg = SmashAlgebra::from_triple(&t);
        let rels = modulo
            .iter()
            .map(|e| parse_free(e, ctx.field, 2).map(|f| alg.from_free(&f)).map_err(usage))
            .collect::<Result<Vec<_>, _>>()?;
        Some(complete_to_degree(&alg, &rels, MonomialOrder::deglex(2), m.max(2)).map_err(usage)?)
    };
    let p = match adjoin_primitive_params(&t, &z, m, sys.as_ref()) {
        Ok(p) => p,
        Err(e @ NicholsError::NotWeightVector { .. }) => return Err(CliError::Math(e.to_string())),
        Err(e) => return Err(usage(e)),
    };
    r.kv("q12", &p.q12);
    r.kv("q21", &p.q21);
    r.kv("q22", &p.q22);
    r.kv("a", &p.a);
    let ghost = ghost_of(&p.eps, &p.a).map_err(usage)?;
    r.kv("ghost", &ghost.value);
    r.kv("discrete", ghost.discrete);
    let w = crate::braided::make_block_point(&p).map_err(usage)?;
    match braid_check(&w) {
        Ok(()) => r.line("braid: ok"),
        Err(f) => {
            r.line(format!("braid: failed ({f})"));
            r.failed = true;
        }
    }
    r.kv("verdict", table1_lookup(&p.q12q21(), &p.eps, &p.q22, &ghost.value).map_err(usage)?);
    Ok(())
}

fn lift(ctx: &Ctx, action: LiftCommand, r: &mut Report) -> Result<(), CliError> {
    match action {
        LiftCommand::Build { lift } => {
            let p = ctx.presentation(&lift, ctx.degree(DEFAULT_LIFT_DEGREE))?;
            r.kv("case", p.case());
            r.kv("lambda", p.lambda());
            for (i, rel) in p.relations().iter().enumerate() {
                r.kv(&format!("relation[{}]", i + 1), &rel.element);
                let skew = p.algebra().group().pow(p.triple().g(), rel.skew_degree);
                let modulo = if rel.modulo_previous { " modulo previous" } else { "" };
                r.kv(&format!("skew[{}]", i + 1), format!("{skew}{modulo}"));
            }
            r.block(p.system().to_text());
            r.kv("flat", p.is_flat());
        }
        LiftCommand::Check { lift, relations, skew } => {
            let degree = ctx.degree(3);
            let p = if relations.is_empty() {
                ctx.presentation(&lift, degree)?
            } else {
                if relations.len() != skew.len() {
                    return Err(usage("each --relation needs a matching --skew"));
                }
                let t = ctx.triple(&lift.triple)?;
                let alg = SmashAlgebra::from_triple(&t);
                let rels = relations
                    .iter()
                    .zip(&skew)
                    .enumerate()
                    .map(|(i, (e, &k))| {
                        Ok(DefiningRelation { element: alg.parse(e).map_err(usage)?, skew_degree: k, modulo_previous: i > 0 })
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                LiftingPresentation::with_relations(&t, &ctx.lambda(&lift)?, rels, degree).map_err(usage)?
            };
            let report = hopf_ideal_check(&p).map_err(usage)?;
            r.failed = !report.is_ok();
            r.block(report);
        }
        LiftCommand::Pbw { lift, no_relations } => {
            let n = ctx.degree(DEFAULT_LIFT_DEGREE);
            let p = if no_relations {
                let t = ctx.triple(&lift.triple)?;
                LiftingPresentation::with_relations(&t, &ctx.lambda(&lift)?, Vec::new(), n).map_err(usage)?
            } else {
                ctx.presentation(&lift, n)?
            };
            let report = pbw_check(&p, n).map_err(usage)?;
            r.failed = !report.is_ok();
            r.block(report);
        }
        LiftCommand::Iso { lift, other, other_triple, other_lambda, transport, bound } => {
            let degree = ctx.degree(3);
            let p = ctx.presentation(&lift, degree)?;
            let other_cfg = match &other {
                Some(path) => RunConfig::load(path)?,
                None => ctx.config.clone(),
            };
            let octx = Ctx { field: ctx.field, max_degree: ctx.max_degree, config: other_cfg };
            let oargs = LiftArgs {
                triple: TripleArgs { triple: other_triple.or_else(|| if other.is_none() { lift.triple.triple.clone() } else { None }) },
                lambda: other_lambda.or_else(|| if other.is_none() { lift.lambda.clone() } else { None }),
            };
            let mut t2 = octx.triple(&oargs.triple)?;
            if let Some(images) = &transport {
                let f = parse_hom(t2.group(), images)?;
                t2 = transport_triple(&t2, &f).map_err(usage)?;
            }
            let q = build_lifting_to(&t2, &octx.lambda(&oargs)?, degree).map_err(usage)?;
            let v = iso_classify_with_bound(&p, &q, bound.unwrap_or(DEFAULT_AUT_BOUND)).map_err(usage)?;
            r.block(v);
        }
        LiftCommand::Nf { lift, elements } => {
            let p = ctx.presentation(&lift, ctx.degree(DEFAULT_LIFT_DEGREE))?;
            for e in &elements {
                let x = p.algebra().parse(e).map_err(usage)?;
                r.kv("nf", p.normal_form(&x).map_err(usage)?);
            }
        }
        LiftCommand::Coproduct { lift, element } => {
            let t = ctx.triple(&lift.triple)?;
            let alg = SmashAlgebra::from_triple(&t);
            let e = alg.parse(&element).map_err(usage)?;
            r.kv("delta", alg.coproduct(&e));
        }
        LiftCommand::Rep { lift, x1, x2 } => {
            let p = ctx.presentation(&lift, ctx.degree(3))?;
            let values = one_dim_rep(&p, &ctx.scalar("x1", &x1)?, &ctx.scalar("x2", &x2)?);
            for (i, v) in values.iter().enumerate() {
                r.kv(&format!("relation[{}]", i + 1), v);
            }
            let ok = values.iter().all(Scalar::is_zero);
            r.line(if ok { "rep: ok" } else { "rep: violated" });
            r.failed = !ok;
        }
        LiftCommand::Zerodiv { lift, sqrt_lambda } => {
            let p = ctx.presentation(&lift, ctx.degree(3))?;
            let ab = zero_divisor_witness(&p, &ctx.scalar("sqrt-lambda", &sqrt_lambda)?).map_err(usage)?;
            r.kv("ab", &ab);
            r.line(if ab.is_zero() { "zero-divisor: ok" } else { "zero-divisor: failed" });
            r.failed = !ab.is_zero();
        }
    }
    Ok(())
}

fn parse_elem(group: &FGAbelianGroup, text: &str) -> Result<GroupElem, CliError> {
    group.element(parse_list::<i64>(text, ',')?).map_err(usage)
}

fn parse_hom(group: &FGAbelianGroup, text: &str) -> Result<GroupHom, CliError> {
    let images = text.split(';').map(|s| parse_elem(group, s)).collect::<Result<Vec<_>, _>>()?;
    GroupHom::new(group, images).map_err(usage)
}

fn triple_lines(r: &mut Report, data: &YdData) {
    let list = |v: &[Scalar]| format!("[{}]", v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", "));
    r.kv("g", &data.g);
    r.kv("chi", list(data.chi.values()));
    r.kv("eta", list(data.eta.values()));
}

fn braiding_lines(r: &mut Report, space: &BraidedVectorSpace) {
    let d = space.dim() as u8;
    for i in 1..=d {
        for j in 1..=d {
            let image = TensorSquareElement::from_terms(
                space.field(),
                space.image(i, j).iter().map(|(k, l, c)| ((Word::letter(*k), Word::letter(*l)), c.clone())),
            );
            r.kv(&format!("c(x{i} ⊗ x{j})"), image);
        }
    }
}

fn triple(ctx: &Ctx, action: TripleCommand, r: &mut Report) -> Result<(), CliError> {
    match action {
        TripleCommand::Validate { triple } => {
            let data = ctx.data(&triple)?;
            let violations = validate_yd_triple(&data);
            if violations.is_empty() {
                r.kv("valid", config::validated(data)?.kind());
            } else {
                for v in &violations {
                    r.kv("violation", v);
                }
                r.failed = true;
            }
            for c in AUTOMATIC_CONDITIONS {
                r.kv("automatic", c);
            }
        }
        TripleCommand::Eval { triple, at } => {
            let data = ctx.data(&triple)?;
            let h = parse_elem(&data.group, &at)?;
            r.kv("chi", data.chi.eval(&h));
            r.kv("eta", data.eta.eval(&data.chi, &h));
        }
        TripleCommand::Realize { triple, permissive } => {
            let data = ctx.data(&triple)?;
            let space = if permissive {
                realize_braiding_permissive(&data).map_err(usage)?
            } else {
                realize_braiding(&config::validated(data)?)
            };
            braiding_lines(r, &space);
            match braid_check(&space) {
                Ok(()) => r.line("braid: ok"),
                Err(f) => {
                    r.line(format!("braid: failed ({f})"));
                    r.failed = true;
                }
            }
        }
        TripleCommand::Classify { actions, degree } => {
            let group = config::build_group(ctx.config.group.as_ref())?;
            let degree = parse_elem(&group, &degree)?;
            let actions = actions
                .iter()
                .map(|a| ctx.matrix(a).map(|rows| Matrix::from_rows(ctx.field, rows)))
                .collect::<Result<Vec<_>, _>>()?;
            match classify_dim2(&Dim2Module { group, degree, actions }).map_err(usage)? {
                Dim2Class::Diagonal => r.kv("class", "diagonal"),
                Dim2Class::Block { data, basis } => {
                    r.kv("class", "block");
                    r.kv("kind", config::validated(data.clone())?.kind());
                    triple_lines(r, &data);
                    r.kv("x1", tuple(&basis[0]));
                    r.kv("x2", tuple(&basis[1]));
                }
            }
        }
        TripleCommand::Transport { triple, map } => {
            let t = ctx.triple(&triple)?;
            let f = parse_hom(t.group(), &map)?;
            let moved = transport_triple(&t, &f).map_err(usage)?;
            r.kv("kind", moved.kind());
            triple_lines(r, moved.data());
            r.kv("valid", validate_yd_triple(moved.data()).is_empty());
        }
    }
    Ok(())
}
