//! Covering documents: `{"kernel": [[...]], "dim": n}` or `{"perms": [[...]]}`.

use serde_json::Value;
use toruscover::permcover::{orbits, PermAction};
use toruscover::torus_cover::{classify, from_perm_action};
use toruscover::{Lattice, TorusCovering};

use crate::json;
use crate::CliError;

pub enum Source {
    Kernel,
    Action(PermAction),
}

pub struct Covering {
    pub covering: TorusCovering,
    pub source: Source,
}

impl Covering {
    /// False only for a permutation action with more than one orbit.
    pub fn is_connected(&self) -> bool {
        match &self.source {
            Source::Kernel => true,
            Source::Action(a) => orbits(a).len() <= 1,
        }
    }
}

pub fn from_kernel(basis: &Value, dim: Option<usize>, what: &str) -> Result<TorusCovering, CliError> {
    let m = json::to_matrix(basis, dim, what)?;
    Ok(TorusCovering::from_kernel(Lattice::from_generators(&m)))
}

pub fn from_perms(perms: &Value, fiber: Option<usize>, cap: usize, what: &str) -> Result<Covering, CliError> {
    let images: Vec<Vec<usize>> = json::to_array(perms, what)?
        .iter()
        .map(|p| json::to_array(p, what)?.iter().map(|x| json::to_usize(x, what)).collect())
        .collect::<Result<_, _>>()?;
    let fiber = match (fiber, images.first()) {
        (Some(f), _) => f,
        (None, Some(p)) => p.len(),
        (None, None) => 1,
    };
    let action = PermAction::from_images(images, fiber)?;
    let covering = from_perm_action(&action, cap)?;
    Ok(Covering { covering, source: Source::Action(action) })
}

pub fn from_document(doc: &Value, cap: usize) -> Result<Covering, CliError> {
    let obj = doc.as_object().ok_or_else(|| {
        CliError::validation("invalid_shape", "covering must be a JSON object with \"kernel\" or \"perms\"")
    })?;
    let size = |key: &str| obj.get(key).map(|v| json::to_usize(v, key)).transpose();
    match (obj.get("kernel"), obj.get("perms")) {
        (Some(k), None) => Ok(Covering { covering: from_kernel(k, size("dim")?, "kernel")?, source: Source::Kernel }),
        (None, Some(p)) => from_perms(p, size("fiber_size")?, cap, "perms"),
        _ => Err(CliError::validation("invalid_shape", "covering needs exactly one of \"kernel\" and \"perms\"")),
    }
}

/// The covering as a document that parses back with [`from_document`],
/// followed by its normal form.
pub fn describe(c: &TorusCovering) -> Value {
    let nf = classify(c);
    json::object([
        ("dim", Value::from(c.dim())),
        ("kernel", json::matrix(c.kernel().basis())),
        ("s", Value::from(nf.s)),
        ("m", json::ints(&nf.m)),
        ("r", Value::from(nf.r)),
        ("min_inducing_dim", Value::from(nf.min_inducing_dim())),
    ])
}
