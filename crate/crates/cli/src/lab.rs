//! `module-lab`: build an evaluation, extension or tensor-product module and
//! report what the library can decide about it.

use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use block_atlas::linalg::Q;
use block_atlas::loop_modules::{
    analysis, build_irrep, equivariant_projection, evaluation_module, is_irreducible, is_nonsplit,
    quotient_is_evaluation, spectral_character_of, ExtensionModule, Irreducibility, LaurentPoly, LieAlgebra, LoopModule,
};

use crate::{parse_weight, Ctx, Failure, LabArgs, Outcome};

fn parse_point(text: &str) -> Result<Q, Failure> {
    let a = Q::from_str(text.trim()).map_err(|e| Failure::Parse(format!("point {text:?}: {e}")))?;
    if a.is_zero() {
        return Err(Failure::Domain("spectral points must be nonzero".into()));
    }
    Ok(a)
}

fn single<'a>(items: &'a [String], what: &str) -> Result<&'a str, Failure> {
    match items {
        [one] => Ok(one),
        _ => Err(Failure::Parse(format!("expected exactly one --{what}, got {}", items.len()))),
    }
}

fn irrep(c: &Ctx, text: &str) -> Result<block_atlas::loop_modules::Irrep, Failure> {
    let w = parse_weight(c, text)?;
    build_irrep(&c.rs, &w).map_err(Failure::domain)
}

pub fn run(c: &Ctx, args: &LabArgs, seed: u64) -> Outcome {
    let alg = LieAlgebra::new(&c.rs).map_err(Failure::domain)?;
    let mut report = serde_json::Map::new();
    report.insert("kind".into(), json!(args.kind));
    let module: LoopModule = match args.kind.as_str() {
        "eval" => {
            let v = irrep(c, single(&args.lambdas, "lambda")?)?;
            let a = parse_point(single(&args.points, "point")?)?;
            evaluation_module(&alg, &v, &a).map_err(Failure::domain)?
        }
        "ext" => {
            let vl = irrep(c, single(&args.lambdas, "lambda")?)?;
            let mu = args.mu.as_deref().ok_or_else(|| Failure::Parse("ext needs --mu".into()))?;
            let vm = irrep(c, mu)?;
            let a = parse_point(single(&args.points, "point")?)?;
            let p = equivariant_projection(&alg, &vl, &vm).map_err(Failure::domain)?;
            let ext = ExtensionModule::new(&alg, &vl, &vm, &a, &p).map_err(Failure::domain)?;
            let jets = (-2..=2).all(|k| {
                let f = LaurentPoly::t_minus(&a).pow(2).mul(&LaurentPoly::monomial(k, Q::one()));
                ext.jet_annihilator_check(&alg, &f)
            });
            report.insert("hom_multiplicity".into(), json!(p.multiplicity));
            report.insert("nonsplit".into(), json!(is_nonsplit(&alg, &ext)));
            report.insert("quotient_is_evaluation".into(), json!(quotient_is_evaluation(&alg, &ext)));
            report.insert("jet_annihilator".into(), json!(jets));
            ext.module().clone()
        }
        "tensor" => {
            if args.lambdas.is_empty() || args.lambdas.len() != args.points.len() {
                return Err(Failure::Parse("tensor needs matching --lambda/--point pairs".into()));
            }
            let mut acc: Option<LoopModule> = None;
            for (l, p) in args.lambdas.iter().zip(&args.points) {
                let m = evaluation_module(&alg, &irrep(c, l)?, &parse_point(p)?).map_err(Failure::domain)?;
                acc = Some(match acc {
                    None => m,
                    Some(prev) => prev.tensor(&m).map_err(Failure::domain)?,
                });
            }
            acc.expect("at least one factor")
        }
        other => return Err(Failure::Parse(format!("unknown module kind {other:?} (eval, ext, tensor)"))),
    };

    report.insert("dim".into(), json!(module.dim()));
    report.insert(
        "lie_action".into(),
        match module.check_lie_action(&alg, -2..=2) {
            Ok(()) => json!(true),
            Err((x, r, y, s)) => json!(format!("fails on [{}⊗t^{r}, {}⊗t^{s}]", x.name(), y.name())),
        },
    );
    let irr = is_irreducible(&alg, &module, seed);
    report.insert("irreducibility".into(), json!(irr.label()));
    if let Irreducibility::Reducible { witness: Some(w) } = &irr {
        report.insert("witness_dim".into(), json!(w.len()));
        report.insert("witness_is_submodule".into(), json!(analysis::is_submodule(&alg, &module, w)));
    }
    report.insert(
        "character".into(),
        match spectral_character_of(&alg, &c.gamma, &module) {
            Ok(chi) => chi.to_json(),
            Err(e) => json!(e.to_string()),
        },
    );
    if args.export {
        report.insert("bundle".into(), module.to_json(&alg, -2..=2));
    }
    Ok(Value::Object(report))
}
