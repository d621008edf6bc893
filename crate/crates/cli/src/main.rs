use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use block_atlas::drinfeld::{DrinfeldError, PolyTuple};
use block_atlas::gamma::{GammaElement, GammaGroup};
use block_atlas::linking::{self, DEvenVariant, LinkChain};
use block_atlas::oracle;
use block_atlas::rootsys::{LieType, RootSystem, Weight};

mod lab;

#[derive(Parser)]
#[command(name = "block-atlas", version, about = "Blocks of finite-dimensional loop-algebra representations")]
struct Cli {
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Re-verify emitted chains after a JSON round trip.
    #[arg(long, global = true)]
    certify: bool,
    /// Seed for randomized irreducibility tests.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The group P/Q.
    Gamma { lie_type: String },
    /// Class of a weight in P/Q.
    Project { lie_type: String, weight: String },
    /// Minimal dominant representative of a class, given as residues.
    LambdaGamma { lie_type: String, class: String },
    /// Factor a Drinfeld tuple given as coefficient lists or factors.
    Factor { lie_type: String, tuple: String },
    /// Spectral character of a tuple.
    Char { lie_type: String, tuple: String },
    /// Whether two tuples lie in the same block.
    SameBlock { lie_type: String, first: String, second: String },
    /// Canonical block label of a tuple.
    BlockLabel { lie_type: String, tuple: String },
    /// Tuple of the dual module.
    Dual { lie_type: String, tuple: String },
    /// Certified linking chain from a weight to its class representative.
    Chain {
        lie_type: String,
        weight: String,
        /// Target sequence for even D_n (1 or 2).
        #[arg(long, default_value_t = 1)]
        variant: u8,
    },
    /// Certified linking chain between two weights of the same class.
    ChainBetween { lie_type: String, from: String, to: String },
    /// Check every step of a chain.
    VerifyChain { lie_type: String, chain: String },
    /// Multiplicity of V(nu) in g ⊗ V(mu), or the whole decomposition.
    TensorMult { lie_type: String, mu: String, nu: Option<String> },
    /// Dimension of V(lambda).
    Dim { lie_type: String, weight: String },
    /// Weight multiplicities of V(lambda).
    Weights {
        lie_type: String,
        weight: String,
        /// All weights rather than dominant ones only.
        #[arg(long)]
        all: bool,
    },
    /// Build and analyse a concrete loop-algebra module.
    ModuleLab(LabArgs),
}

#[derive(Args)]
pub struct LabArgs {
    pub lie_type: String,
    /// eval, ext or tensor.
    pub kind: String,
    /// Highest weight(s); repeat for tensor factors.
    #[arg(long = "lambda")]
    pub lambdas: Vec<String>,
    /// Submodule highest weight for `ext`.
    #[arg(long)]
    pub mu: Option<String>,
    /// Spectral point(s), e.g. 2 or -1/3; repeat for tensor factors.
    #[arg(long = "point", allow_hyphen_values = true)]
    pub points: Vec<String>,
    /// Include the full matrix bundle in the output.
    #[arg(long)]
    pub export: bool,
}

/// Exit 1 for malformed input, 2 for well-formed input the mathematics rejects.
pub enum Failure {
    Parse(String),
    Domain(String),
}

impl Failure {
    fn domain(e: impl std::fmt::Display) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<DrinfeldError> for Failure {
    fn from(e: DrinfeldError) -> Self {
        match e {
            DrinfeldError::Json(_) => Failure::Parse(e.to_string()),
            other => Failure::domain(other),
        }
    }
}

pub type Outcome = Result<Value, Failure>;

pub struct Ctx {
    pub rs: RootSystem,
    pub gamma: GammaGroup,
}

fn ctx(t: &str) -> Result<Ctx, Failure> {
    let lie_type: LieType = t.parse().map_err(|e| Failure::Parse(format!("{e}")))?;
    let rs = RootSystem::build(lie_type);
    let gamma = GammaGroup::new(&rs);
    Ok(Ctx { rs, gamma })
}

pub fn parse_weight(c: &Ctx, text: &str) -> Result<Weight, Failure> {
    let coords: Vec<i64> = serde_json::from_str(text).map_err(|e| Failure::Parse(format!("weight {text:?}: {e}")))?;
    let w = Weight(coords);
    c.rs.check_weight(&w).map_err(Failure::domain)?;
    Ok(w)
}

fn parse_class(c: &Ctx, text: &str) -> Result<GammaElement, Failure> {
    let residues: Vec<i64> = serde_json::from_str(text).map_err(|e| Failure::Parse(format!("class {text:?}: {e}")))?;
    let factors = c.gamma.invariant_factors().to_vec();
    if residues.len() != factors.len() {
        return Err(Failure::Domain(format!("{} has {} cyclic factors, got {} residues", c.gamma.name(), factors.len(), residues.len())));
    }
    let residues = residues.iter().zip(&factors).map(|(r, m)| r.rem_euclid(*m)).collect();
    Ok(GammaElement { residues, invariant_factors: factors })
}

fn parse_chain(c: &Ctx, text: &str) -> Result<LinkChain, Failure> {
    let value: Value = serde_json::from_str(text).map_err(|e| Failure::Parse(format!("chain: {e}")))?;
    let weights = match &value {
        Value::Object(map) => map.get("chain").cloned().ok_or_else(|| Failure::Parse("chain object needs a \"chain\" field".into()))?,
        other => other.clone(),
    };
    let weights: Vec<Weight> = serde_json::from_value(weights).map_err(|e| Failure::Parse(format!("chain: {e}")))?;
    if weights.is_empty() {
        return Err(Failure::Domain("empty chain".into()));
    }
    for w in &weights {
        c.rs.check_weight(w).map_err(Failure::domain)?;
    }
    Ok(LinkChain { lie_type: c.rs.lie_type(), weights })
}

fn tuple(c: &Ctx, text: &str) -> Result<PolyTuple, Failure> {
    Ok(PolyTuple::from_json(&c.rs, text)?)
}

fn label_json(label: &[(block_atlas::drinfeld::SpectralPoint, Weight)]) -> Value {
    label.iter().map(|(a, w)| json!({"point": a, "weight": w})).collect()
}

fn chain_json(c: &Ctx, chain: &LinkChain, recheck: bool) -> Outcome {
    if recheck {
        let text = serde_json::to_string(chain).expect("chains serialize");
        let reloaded: LinkChain = serde_json::from_str(&text).expect("chains deserialize");
        linking::verify_chain(&c.rs, &c.gamma, &reloaded).map_err(Failure::domain)?;
    }
    Ok(json!({"chain": chain.weights, "certified": true}))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gamma { lie_type } => {
            let c = ctx(lie_type)?;
            Ok(json!({"group": c.gamma.name()}))
        }
        Command::Project { lie_type, weight } => {
            let c = ctx(lie_type)?;
            let w = parse_weight(&c, weight)?;
            Ok(json!({"group": c.gamma.name(), "class": c.gamma.project(&w).residues}))
        }
        Command::LambdaGamma { lie_type, class } => {
            let c = ctx(lie_type)?;
            let g = parse_class(&c, class)?;
            Ok(json!({"lambda_gamma": c.gamma.lambda_gamma(&c.rs, &g)}))
        }
        Command::Factor { lie_type, tuple: t } => {
            let c = ctx(lie_type)?;
            Ok(tuple(&c, t)?.to_json())
        }
        Command::Char { lie_type, tuple: t } => {
            let c = ctx(lie_type)?;
            Ok(json!({"character": tuple(&c, t)?.spectral_character(&c.gamma).to_json()}))
        }
        Command::SameBlock { lie_type, first, second } => {
            let c = ctx(lie_type)?;
            let same = tuple(&c, first)?.same_block(&tuple(&c, second)?, &c.gamma)?;
            Ok(json!({"same_block": same}))
        }
        Command::BlockLabel { lie_type, tuple: t } => {
            let c = ctx(lie_type)?;
            Ok(json!({"block_label": label_json(&tuple(&c, t)?.block_label(&c.rs, &c.gamma))}))
        }
        Command::Dual { lie_type, tuple: t } => {
            let c = ctx(lie_type)?;
            Ok(tuple(&c, t)?.dual(&c.rs).to_json())
        }
        Command::Chain { lie_type, weight, variant } => {
            let c = ctx(lie_type)?;
            let w = parse_weight(&c, weight)?;
            let variant = match variant {
                1 => DEvenVariant::First,
                2 => DEvenVariant::Second,
                v => return Err(Failure::Parse(format!("variant must be 1 or 2, got {v}"))),
            };
            let chain = linking::chain_to_representative_with(&c.rs, &c.gamma, &w, variant).map_err(Failure::domain)?;
            chain_json(&c, &chain, cli.certify)
        }
        Command::ChainBetween { lie_type, from, to } => {
            let c = ctx(lie_type)?;
            let (a, b) = (parse_weight(&c, from)?, parse_weight(&c, to)?);
            let chain = linking::chain_between(&c.rs, &c.gamma, &a, &b).map_err(Failure::domain)?;
            chain_json(&c, &chain, cli.certify)
        }
        Command::VerifyChain { lie_type, chain } => {
            let c = ctx(lie_type)?;
            let chain = parse_chain(&c, chain)?;
            Ok(match linking::verify_chain(&c.rs, &c.gamma, &chain) {
                Ok(()) => json!({"valid": true}),
                Err(e) => json!({"valid": false, "reason": e.to_string()}),
            })
        }
        Command::TensorMult { lie_type, mu, nu } => {
            let c = ctx(lie_type)?;
            let mu = parse_weight(&c, mu)?;
            match nu {
                Some(nu) => {
                    let nu = parse_weight(&c, nu)?;
                    let m = oracle::adjoint_tensor_multiplicity(&c.rs, &mu, &nu).map_err(Failure::domain)?;
                    Ok(json!({"multiplicity": m}))
                }
                None => {
                    let dec = oracle::adjoint_tensor_decomposition(&c.rs, &mu).map_err(Failure::domain)?;
                    let parts: Vec<Value> = dec.iter().map(|(w, m)| json!({"weight": w, "multiplicity": m})).collect();
                    Ok(json!({"decomposition": parts}))
                }
            }
        }
        Command::Dim { lie_type, weight } => {
            let c = ctx(lie_type)?;
            let w = parse_weight(&c, weight)?;
            let d = oracle::weyl_dim(&c.rs, &w).map_err(Failure::domain)?;
            let value = u64::try_from(&d).map(Value::from).unwrap_or_else(|_| Value::from(d.to_string()));
            Ok(json!({"dim": value}))
        }
        Command::Weights { lie_type, weight, all } => {
            let c = ctx(lie_type)?;
            let w = parse_weight(&c, weight)?;
            let ws = oracle::weight_multiplicities(&c.rs, &w).map_err(Failure::domain)?;
            let table = if *all { ws.all_weights(&c.rs) } else { ws.dominant_multiplicities().clone() };
            let rows: Vec<Value> = table.iter().rev().map(|(w, m)| json!({"weight": w, "multiplicity": m})).collect();
            Ok(json!({"dim": ws.dimension(&c.rs), "weights": rows}))
        }
        Command::ModuleLab(args) => {
            let c = ctx(&args.lie_type)?;
            lab::run(&c, args, cli.seed)
        }
    }
}

/// One `key: value` line per top-level field; nested values stay compact.
fn render_pretty(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            map.iter()
                .map(|(k, x)| match x {
                    Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                        let rows: Vec<String> = items.iter().map(|i| format!("  {i}")).collect();
                        format!("{k}:\n{}", rows.join("\n"))
                    }
                    _ => format!("{k:<width$}  {x}"),
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(v) => {
            let text = if cli.pretty { render_pretty(&v) } else { v.to_string() };
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
