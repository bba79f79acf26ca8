use serde_json::Value;
use toruscover::charclass::{obstruction_class, obstruction_vectors};
use toruscover::klein::{
    essential_dimension, flag_rank, flag_stabilizer, pairing_flag, quadruple_flag, radical_kernel, tower_feasible,
    universal_disc_lower_bound, universal_lower_bound, FLAG_DIM_CAP,
};
use toruscover::lattice_core::{hermite_normal_form, smith_normal_form};
use toruscover::torus_cover::{classify, dominates, is_equivalent, pullback, tower_rank_bound};
use toruscover::{Lattice, LinearFlag, Permutation, Radical, RadicalSystem, TorusCovering};

use crate::covering::{self, Covering, Source};
use crate::{json, CliError, Command, CoveringArgs, RadicalAction, Rendered};

/// Classes are stored densely, so the torus dimension is bounded.
const CHARCLASS_DIM_CAP: usize = 20;

pub fn run(command: Command, cap: usize) -> Result<Rendered, CliError> {
    match command {
        Command::Snf { matrix } => snf(&matrix),
        Command::Hnf { matrix } => hnf(&matrix),
        Command::Classify(args) => Ok(normal_form(&read_covering(&args, cap)?.covering)),
        Command::Mindim(args) => {
            let k = classify(&read_covering(&args, cap)?.covering).min_inducing_dim();
            Ok(Rendered { json: Value::from(k), human: k.to_string() })
        }
        Command::Equivalent { covering } => {
            let [c1, c2] = two_coverings(&covering, cap)?;
            let same = is_equivalent(&c1.covering, &c2.covering)?;
            Ok(Rendered { json: Value::from(same), human: if same { "equivalent" } else { "not equivalent" }.into() })
        }
        Command::Dominates { covering } => {
            let [c1, c2] = two_coverings(&covering, cap)?;
            if !c1.is_connected() || !c2.is_connected() {
                return Err(CliError::validation(
                    "disconnected_covering",
                    "domination is only defined here for connected coverings (transitive actions)",
                ));
            }
            let d = dominates(&c1.covering, &c2.covering)?;
            Ok(Rendered { json: Value::from(d), human: if d { "dominates" } else { "does not dominate" }.into() })
        }
        Command::Pullback { input, subgroup } => {
            let c = read_covering(&input, cap)?.covering;
            let doc = json::parse_document(&subgroup, "--subgroup")?;
            let h = Lattice::from_generators(&json::to_matrix(&doc, Some(c.dim()), "--subgroup")?);
            let pulled = pullback(&c, &h)?;
            let nf = classify(&pulled);
            Ok(Rendered {
                json: covering::describe(&pulled),
                human: format!(
                    "{nf}\nkernel: {}\nmin inducing dim: {}",
                    pulled.kernel().basis(),
                    nf.min_inducing_dim()
                ),
            })
        }
        Command::TowerBound { rank, dims } => {
            let b = tower_rank_bound(rank, &dims);
            Ok(Rendered { json: Value::from(b), human: b.to_string() })
        }
        Command::Charclass(args) => charclass(&read_covering(&args, cap)?.covering),
        Command::Radical { vars, radicals, dims, action } => radical(vars, &radicals, &dims, action),
        Command::Flag { equations, dim, pairing, quadruple } => {
            let flag = match (equations, pairing, quadruple) {
                (Some(eqs), _, _) => read_flag(&eqs, dim)?,
                (_, Some(n), _) => bounded_flag(n, pairing_flag)?,
                (_, _, Some(n)) => bounded_flag(n, quadruple_flag)?,
                _ => unreachable!("clap requires one flag source"),
            };
            flag_report(&flag)
        }
        Command::Universal { degree } => {
            let u = universal_lower_bound::<toruscover::BigInt>(degree)?;
            let certificate: Vec<String> = u.certificate.radicals().iter().map(Radical::to_string).collect();
            Ok(Rendered {
                human: format!(
                    "bound: {}\ncoordinates: {}\ncertificate radicals: {}",
                    u.bound,
                    u.coordinates.join(" "),
                    certificate.join(" ")
                ),
                json: json::object([
                    ("bound", Value::from(u.bound)),
                    ("coordinates", Value::from(u.coordinates)),
                    ("certificate", Value::from(certificate)),
                ]),
            })
        }
        Command::UniversalDisc { degree } => {
            let d = universal_disc_lower_bound(degree)?;
            let gens = d.certificate.generators();
            let cycles: Vec<String> = gens.iter().map(Permutation::to_string).collect();
            Ok(Rendered {
                human: format!(
                    "bound: {}\nloops: {}\ncertificate: {}",
                    d.bound,
                    d.loops.join(" "),
                    if cycles.is_empty() { "(none)".to_string() } else { cycles.join(" ") }
                ),
                json: json::object([
                    ("bound", Value::from(d.bound)),
                    ("loops", Value::from(d.loops)),
                    ("perms", perms(gens)),
                    ("fiber_size", Value::from(degree)),
                    ("even_only", Value::from(true)),
                ]),
            })
        }
    }
}

fn snf(text: &str) -> Result<Rendered, CliError> {
    let a = json::to_matrix(&json::parse_document(text, "--matrix")?, None, "--matrix")?;
    let s = smith_normal_form(&a);
    let diag = s.diagonal();
    Ok(Rendered {
        json: json::object([
            ("diagonal", json::ints(&diag)),
            ("u", json::matrix(&s.u)),
            ("d", json::matrix(&s.d)),
            ("v", json::matrix(&s.v)),
        ]),
        human: format!("diagonal: {}\nU = {}\nD = {}\nV = {}", json::ints(&diag), s.u, s.d, s.v),
    })
}

fn hnf(text: &str) -> Result<Rendered, CliError> {
    let a = json::to_matrix(&json::parse_document(text, "--matrix")?, None, "--matrix")?;
    let (h, u) = hermite_normal_form(&a);
    Ok(Rendered {
        json: json::object([("h", json::matrix(&h)), ("u", json::matrix(&u))]),
        human: format!("H = {h}\nU = {u}"),
    })
}

fn read_covering(args: &CoveringArgs, cap: usize) -> Result<Covering, CliError> {
    match (&args.kernel, &args.perms, &args.covering) {
        (Some(k), _, _) => {
            let doc = json::parse_document(k, "--kernel")?;
            Ok(Covering { covering: covering::from_kernel(&doc, args.dim, "--kernel")?, source: Source::Kernel })
        }
        (_, Some(p), _) => covering::from_perms(&json::parse_document(p, "--perms")?, args.fiber_size, cap, "--perms"),
        (_, _, Some(c)) => covering::from_document(&json::parse_document(c, "--covering")?, cap),
        _ => Err(CliError::validation("missing_input", "give one of --kernel, --perms or --covering")),
    }
}

fn two_coverings(docs: &[String], cap: usize) -> Result<[Covering; 2], CliError> {
    let [a, b] = docs else {
        return Err(CliError::validation(
            "missing_input",
            format!("expected two --covering documents, found {}", docs.len()),
        ));
    };
    let c1 = covering::from_document(&json::parse_document(a, "--covering")?, cap)?;
    let c2 = covering::from_document(&json::parse_document(b, "--covering")?, cap)?;
    if c1.covering.dim() != c2.covering.dim() {
        return Err(
            toruscover::Error::DimensionMismatch { expected: c1.covering.dim(), found: c2.covering.dim() }.into()
        );
    }
    Ok([c1, c2])
}

fn normal_form(c: &TorusCovering) -> Rendered {
    let nf = classify(c);
    Rendered {
        json: json::object([
            ("s", Value::from(nf.s)),
            ("m", json::ints(&nf.m)),
            ("r", Value::from(nf.r)),
            ("min_inducing_dim", Value::from(nf.min_inducing_dim())),
        ]),
        human: format!("{nf}\nmin inducing dim: {}", nf.min_inducing_dim()),
    }
}

fn charclass(c: &TorusCovering) -> Result<Rendered, CliError> {
    if c.dim() > CHARCLASS_DIM_CAP {
        return Err(CliError::validation(
            "dimension_too_large",
            format!("torus dimension {} exceeds {CHARCLASS_DIM_CAP}", c.dim()),
        ));
    }
    let (m, vectors) = obstruction_vectors(c)?;
    let (_, class) = obstruction_class(c)?;
    let terms: Vec<Value> = class
        .entries()
        .into_iter()
        .filter(|(_, coeff)| !num_traits::Zero::is_zero(coeff))
        .map(|(subset, coeff)| json::object([("subset", Value::from(subset)), ("coeff", json::int(&coeff))]))
        .collect();
    Ok(Rendered {
        json: json::object([
            ("dim", Value::from(class.dim())),
            ("degree", Value::from(class.degree())),
            ("modulus", json::int(&m)),
            ("vectors", Value::Array(vectors.iter().map(|v| json::ints(v)).collect())),
            ("terms", Value::Array(terms)),
        ]),
        human: class.to_string(),
    })
}

fn radical(vars: usize, specs: &[String], dims: &[usize], action: RadicalAction) -> Result<Rendered, CliError> {
    let radicals = specs.iter().map(|s| Radical::parse(s)).collect::<Result<Vec<_>, _>>()?;
    let rs = RadicalSystem::new(vars, radicals)?;
    Ok(match action {
        RadicalAction::Mindim => {
            let k = essential_dimension(&rs);
            Rendered { json: Value::from(k), human: k.to_string() }
        }
        RadicalAction::Kernel => {
            let c = radical_kernel(&rs);
            Rendered { human: format!("kernel: {}", c.kernel().basis()), json: covering::describe(&c) }
        }
        RadicalAction::Classify => normal_form(&radical_kernel(&rs)),
        RadicalAction::Tower => {
            let feasible = tower_feasible(&rs, dims);
            let k = essential_dimension(&rs);
            Rendered {
                human: format!("{} (essential dimension {k}, tower total {})", feasible, dims.iter().sum::<usize>()),
                json: json::object([("feasible", Value::from(feasible)), ("essential_dimension", Value::from(k))]),
            }
        }
    })
}

fn bounded_flag(n: usize, build: fn(usize) -> LinearFlag) -> Result<LinearFlag, CliError> {
    if n > FLAG_DIM_CAP {
        return Err(toruscover::Error::FlagTooLarge { n, cap: FLAG_DIM_CAP }.into());
    }
    Ok(build(n))
}

fn read_flag(text: &str, dim: Option<usize>) -> Result<LinearFlag, CliError> {
    let doc = json::parse_document(text, "--equations")?;
    let steps = json::to_array(&doc, "--equations")?
        .iter()
        .map(|step| json::to_rows(step, "--equations"))
        .collect::<Result<Vec<_>, _>>()?;
    let n = match dim.or_else(|| steps.iter().flatten().next().map(Vec::len)) {
        Some(n) => n,
        None => return Err(CliError::validation("invalid_shape", "flag without equations needs --dim")),
    };
    Ok(LinearFlag::new(n, steps)?)
}

fn perms(gens: &[Permutation]) -> Value {
    Value::Array(gens.iter().map(|p| Value::from(p.images().to_vec())).collect())
}

fn flag_report(flag: &LinearFlag) -> Result<Rendered, CliError> {
    let stabilizer = flag_stabilizer(flag)?;
    let (rank, even_only) = flag_rank(flag)?;
    let steps: Vec<Value> = flag.steps().iter().map(json::matrix).collect();
    let cycles: Vec<String> = stabilizer.iter().map(Permutation::to_string).collect();
    Ok(Rendered {
        human: format!(
            "dimensions: {:?}\nstabilizer ({} elements): {}\nrank: {rank}\neven only: {even_only}",
            flag.dimensions(),
            stabilizer.len(),
            cycles.join(" ")
        ),
        json: json::object([
            ("dim", Value::from(flag.dim())),
            ("steps", Value::Array(steps)),
            ("dimensions", Value::from(flag.dimensions())),
            ("stabilizer", perms(&stabilizer)),
            ("rank", Value::from(rank)),
            ("even_only", Value::from(even_only)),
        ]),
    })
}
