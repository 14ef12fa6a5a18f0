use curalg::constructions::{
    even_odd_submodules, ideal_module_sym, ideal_module_tensor, kostant_dual_module, kostant_module, kr_module,
    sym_dual_module, DegreeBound, Flavor, GradedModule, GradedModuleReport, IdealSpec, Parity,
};
use curalg::curmod::io::{certificate_to_json, matrix_to_json, module_to_value};
use curalg::curmod::{
    annihilator_poly_test, evaluation_module, find_annihilating_polynomial, find_isomorphism, hom_module_space,
    highest_weight_spaces, rep_hom_space, verify_pair, IsoSearch, PairModule,
};
use curalg::extcalc::{ext1, ext1_irreducibles};
use curalg::freelie::{lyndon_degree, monomial_count, tau_degree, truncated_current_dim};
use curalg::liealg::{adjoint_rep, sl2_irrep, trivial, Rep};
use curalg::qlinalg::{format_rational, MatrixQ, Rational, Subspace};
use curalg::{Error, Result};
use serde_json::{json, Value};

use crate::load::{
    load_algebra, load_generators, load_module, load_pair, load_parts, parse_element, parse_list, parse_point,
    LoadedAlgebra,
};
use crate::{BuildArgs, Command, Kind, Outcome, ParityArg};

fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(format_rational(x))).collect())
}

fn matrices(basis: &Subspace, rows: usize, cols: usize) -> Value {
    Value::Array(
        basis
            .basis_dense()
            .iter()
            .map(|v| matrix_to_json(&MatrixQ::from_vec(rows, cols, v.clone())))
            .collect(),
    )
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::CheckAlgebra { algebra } => check_algebra(algebra),
        Command::Freelie { d, max_r, words } => freelie(*d, *max_r, *words),
        Command::Kertau { algebra, r, basis } => kertau(algebra, *r, *basis),
        Command::Truncdim { algebra, k } => truncdim(algebra, *k),
        Command::Verify { file, bound } => verify(file, *bound),
        Command::Build(args) => build(args),
        Command::Act { module, x, r, v, bound } => act(module, x, *r, v, *bound),
        Command::Hom { m1, m2, bound } => hom(m1, m2, *bound),
        Command::Iso { m1, m2, seed, bound } => iso(m1, m2, *seed, *bound),
        Command::Annihilate { module, roots, degree, bound } => annihilate(module, roots.as_deref(), *degree, *bound),
        Command::Highest { module, bound } => highest(module, *bound),
        Command::Ext { m1, m2, big_r, window } => ext(m1, m2, *big_r, *window),
        Command::ExtIrr { v, v2, points, big_r, check } => ext_irr(v, v2, points, *big_r, *check),
    }
}

fn check_algebra(spec: &str) -> Result<Outcome> {
    let loaded = load_algebra(spec)?;
    let alg = &loaded.algebra;
    Ok(Outcome::ok(json!({
        "dim": alg.dim(),
        "names": alg.names(),
        "perfect": alg.is_perfect(),
        "derived_dim": alg.derived_dim(),
        "triangular": alg.triangular().is_some(),
    })))
}

fn freelie(d: usize, max_r: usize, words: bool) -> Result<Outcome> {
    let mut rows = Vec::new();
    for r in 1..=max_r {
        let fd = lyndon_degree(d, r)?;
        let mut row = json!({"r": r, "dim": fd.dim(), "monomials": monomial_count(d, r)});
        if words {
            row["words"] = Value::Array(fd.words().iter().map(|w| json!(w.letters())).collect());
        }
        rows.push(row);
    }
    Ok(Outcome::ok(json!({"d": d, "rows": rows})))
}

fn kertau(spec: &str, r: usize, basis: bool) -> Result<Outcome> {
    let loaded = load_algebra(spec)?;
    let t = tau_degree(&loaded.algebra, r)?;
    let mut report = json!({
        "r": r,
        "dim_f": t.free.dim(),
        "rank": t.rank,
        "kernel_dim": t.free.dim() - t.rank,
    });
    if basis {
        let kernel = curalg::freelie::ker_tau_lyndon(&loaded.algebra, r)?;
        let vectors: Vec<Value> = kernel
            .basis()
            .iter()
            .map(|v| {
                Value::Array(
                    v.iter()
                        .map(|(w, c)| json!([t.free.words()[*w].letters(), format_rational(c)]))
                        .collect(),
                )
            })
            .collect();
        report["kernel"] = Value::Array(vectors);
    }
    Ok(Outcome::ok(report))
}

fn truncdim(spec: &str, k: usize) -> Result<Outcome> {
    let loaded = load_algebra(spec)?;
    let dim = truncated_current_dim(&loaded.algebra, k)?;
    let per_degree = (1..=k).map(|r| Ok(tau_degree(&loaded.algebra, r)?.rank)).collect::<Result<Vec<_>>>()?;
    Ok(Outcome::ok(json!({"k": k, "dim": dim, "per_degree": per_degree})))
}

fn verify(file: &str, bound: usize) -> Result<Outcome> {
    let (rho, eta) = load_parts(file)?;
    let m = verify_pair(&rho, eta, bound)?;
    Ok(Outcome::ok(json!({
        "valid": true,
        "dim": m.dim(),
        "certificate": certificate_to_json(m.certificate()),
    })))
}

fn rep_of(loaded: &LoadedAlgebra, rep: &str) -> Result<Rep> {
    match rep {
        "nat" | "natural" => loaded.natural.clone().ok_or_else(|| Error::Parse("no natural representation".into())),
        "ad" | "adjoint" => Ok(adjoint_rep(&loaded.algebra)),
        "triv" | "trivial" => Ok(trivial(loaded.algebra.clone(), 1)),
        _ => match rep.strip_prefix('v').and_then(|n| n.parse().ok()) {
            Some(n) if loaded.tag.as_deref() == Some("sl2") => sl2_irrep(loaded.algebra.clone(), n),
            _ => Err(Error::Parse(format!("unknown representation {rep:?}"))),
        },
    }
}

fn ideal_spec(loaded: &LoadedAlgebra, flavor: Flavor, text: &str, n: usize) -> Result<IdealSpec> {
    let d = loaded.algebra.dim();
    if text == "zero" {
        return Ok(IdealSpec::new(flavor, Vec::new(), n));
    }
    if text == "augmentation" {
        return Ok(IdealSpec::augmentation(flavor, d, n));
    }
    if text == "ker-tau" {
        if flavor != Flavor::Tensor {
            return Err(Error::Parse("ker-tau is a tensor ideal".into()));
        }
        return IdealSpec::ker_tau(&loaded.algebra, n);
    }
    if let Some(k) = text.strip_prefix("degree:") {
        let k = k.parse().map_err(|_| Error::Parse(format!("bad degree in {text:?}")))?;
        return Ok(IdealSpec::full_degree(flavor, d, k, n));
    }
    if let Some(path) = text.strip_prefix("file:") {
        return Ok(IdealSpec::new(flavor, load_generators(path)?, n));
    }
    Err(Error::Parse(format!("unknown ideal {text:?}")))
}

fn graded_report(g: &GradedModuleReport) -> Value {
    let mut v = json!({"total_dim": g.total_dim, "per_degree_dims": g.per_degree_dims});
    if let Some(iso) = &g.isotypic_dims {
        v["isotypic_dims"] = json!(iso);
    }
    v
}

fn build(args: &BuildArgs) -> Result<Outcome> {
    let loaded = load_algebra(&args.algebra)?;
    let alg = &loaded.algebra;
    let graded: GradedModule = match args.kind {
        Kind::Evaluation => {
            let m = evaluation_module(&rep_of(&loaded, &args.rep)?, &parse_point(&args.a)?)?;
            let degrees = vec![0; m.dim()];
            let report = GradedModuleReport::from_degrees(&degrees);
            return Ok(Outcome::ok(json!({
                "module": module_to_value(&m, loaded.tag.as_deref()),
                "report": graded_report(&report),
            })));
        }
        Kind::TensorIdeal => ideal_module_tensor(alg, &ideal_spec(&loaded, Flavor::Tensor, &args.ideal, args.n)?)?,
        Kind::SymIdeal => ideal_module_sym(alg, &ideal_spec(&loaded, Flavor::Symmetric, &args.ideal, args.n)?)?,
        Kind::SymDual => sym_dual_module(alg, args.n)?,
        Kind::Kr => kr_module(alg, args.r)?.graded,
        Kind::Kostant => kostant_module(&rep_of(&loaded, &args.rep)?)?.graded,
        Kind::KostantDual => kostant_dual_module(&rep_of(&loaded, &args.rep)?)?.graded,
        Kind::EvenOdd => {
            let rho = rep_of(&loaded, &args.rep)?;
            let base = if args.dual { kostant_dual_module(&rho)? } else { kostant_module(&rho)? };
            let parity = match args.parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            let bound = match (args.at_least, args.at_most) {
                (_, Some(k)) => DegreeBound::AtMost(k),
                (Some(k), None) => DegreeBound::AtLeast(k),
                (None, None) if args.dual => DegreeBound::AtMost(usize::MAX),
                (None, None) => DegreeBound::AtLeast(0),
            };
            even_odd_submodules(&base, parity, bound)?
        }
    };
    Ok(Outcome::ok(json!({
        "module": module_to_value(&graded.module, loaded.tag.as_deref()),
        "report": graded_report(&graded.report),
    })))
}

fn act(spec: &str, x: &str, r: usize, v: &str, bound: usize) -> Result<Outcome> {
    let m = load_module(spec, bound)?;
    let xv = parse_element(m.algebra(), x)?;
    let vv = parse_list(v)?;
    if vv.len() != m.dim() {
        return Err(Error::Parse(format!("vector needs {} coordinates", m.dim())));
    }
    let out = m.act(&xv, r, &vv)?;
    Ok(Outcome::ok(json!({"r": r, "result": rationals(&out)})))
}

fn hom(s1: &str, s2: &str, bound: usize) -> Result<Outcome> {
    let (m1, m2) = load_pair(s1, s2, bound)?;
    let space = hom_module_space(&m1, &m2)?;
    let rep = rep_hom_space(&m1, &m2)?;
    Ok(Outcome::ok(json!({
        "dim": space.dim(),
        "rep_dim": rep.dim(),
        "basis": matrices(&space, m2.dim(), m1.dim()),
    })))
}

fn iso(s1: &str, s2: &str, seed: u64, bound: usize) -> Result<Outcome> {
    let (m1, m2) = load_pair(s1, s2, bound)?;
    Ok(Outcome::ok(match find_isomorphism(&m1, &m2, seed)? {
        IsoSearch::Found(mat) => json!({"isomorphic": true, "proven": true, "matrix": matrix_to_json(&mat)}),
        IsoSearch::NotFound { proven: true } => json!({"isomorphic": false, "proven": true}),
        IsoSearch::NotFound { proven: false } => json!({"isomorphic": null, "proven": false}),
    }))
}

fn annihilate(spec: &str, roots: Option<&str>, degree: Option<usize>, bound: usize) -> Result<Outcome> {
    let m = load_module(spec, bound)?;
    match (roots, degree) {
        (Some(text), _) => {
            let roots = parse_list(text)?;
            let yes = annihilator_poly_test(&m, &roots)?;
            Ok(Outcome::ok(json!({"roots": rationals(&roots), "annihilated": yes})))
        }
        (None, Some(k)) => {
            let found = find_annihilating_polynomial(&m, k)?;
            Ok(Outcome::ok(json!({"degree": k, "polynomial": found.as_deref().map(rationals)})))
        }
        (None, None) => Err(Error::Parse("give --roots or --degree".into())),
    }
}

fn highest(spec: &str, bound: usize) -> Result<Outcome> {
    let m: PairModule = load_module(spec, bound)?;
    let spaces = highest_weight_spaces(&m)?;
    let list: Vec<Value> = spaces
        .iter()
        .map(|w| {
            json!({
                "weight": rationals(&w.weight),
                "dim": w.space.dim(),
                "vectors": w.space.basis_dense().iter().map(|v| rationals(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Outcome::ok(json!({"cover": m.certificate().cover(), "spaces": list})))
}

fn ext(s1: &str, s2: &str, big_r: usize, window: usize) -> Result<Outcome> {
    if big_r < 2 {
        return Err(Error::Parse("R must be at least 2".into()));
    }
    let (m1, m2) = load_pair(s1, s2, big_r)?;
    let res = ext1(&m1, &m2, big_r, window)?;
    Ok(Outcome::ok(serde_json::to_value(res.summary()).expect("summary serializes")))
}

fn ext_irr(s1: &str, s2: &str, points: &str, big_r: usize, check: bool) -> Result<Outcome> {
    let (m1, m2) = load_pair(s1, s2, big_r)?;
    let pts = parse_list(points)?;
    let n = ext1_irreducibles(&m1, &m2, &pts, big_r)?;
    let mut report = json!({"points": rationals(&pts), "ext1": n});
    if !check {
        return Ok(Outcome::ok(report));
    }
    let direct = ext1(&m1, &m2, big_r, curalg::extcalc::DEFAULT_WINDOW)?.ext_dim;
    report["direct"] = json!(direct);
    report["agree"] = json!(direct == n);
    Ok(Outcome { report, ok: direct == n })
}
