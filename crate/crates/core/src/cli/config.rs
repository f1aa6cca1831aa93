//! The TOML run configuration. Unknown keys are rejected.

use serde::Deserialize;

use super::CliError;
use crate::braided::{make_block, make_block_point, make_diagonal, BlockPointParams, BraidedVectorSpace};
use crate::scalar::{CyclotomicField, Scalar};
use crate::ydcat::{standard_triple, Character, Derivation, FGAbelianGroup, YdData, YdTriple};

pub const DEFAULT_CONDUCTOR: u32 = 12;

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub conductor: Option<u32>,
    pub space: Option<SpaceConfig>,
    pub group: Option<GroupConfig>,
    pub triple: Option<TripleConfig>,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceConfig {
    pub kind: String,
    pub eps: Option<String>,
    pub ell: Option<usize>,
    pub q12: Option<String>,
    pub q21: Option<String>,
    pub q22: Option<String>,
    pub a: Option<String>,
    /// Rows of the diagonal braiding matrix.
    pub q: Option<Vec<Vec<String>>>,
    pub dim: Option<usize>,
    #[serde(default)]
    pub term: Vec<TermConfig>,
}

/// One coefficient of a custom braiding: x_k⊗x_l in c(x_i⊗x_j).
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermConfig {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub value: String,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    #[serde(default)]
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleConfig {
    pub g: Vec<i64>,
    pub chi: Vec<String>,
    pub eta: Vec<String>,
    pub lambda: Option<String>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("config: {}", e.message())))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

pub fn scalar(field: CyclotomicField, key: &str, text: &str) -> Result<Scalar, CliError> {
    field.parse(text).map_err(|e| CliError::Usage(format!("{key}: {e}")))
}

fn required(field: CyclotomicField, key: &str, value: &Option<String>) -> Result<Scalar, CliError> {
    match value {
        Some(text) => scalar(field, key, text),
        None => Err(CliError::Usage(format!("space: missing {key}"))),
    }
}

pub fn build_space(field: CyclotomicField, s: &SpaceConfig) -> Result<BraidedVectorSpace, CliError> {
    let braid_err = |e: crate::braided::BraidError| CliError::Usage(format!("space: {e}"));
    match s.kind.as_str() {
        "jordan" => make_block(&field.one(), 2).map_err(braid_err),
        "super-jordan" => make_block(&field.integer(-1), 2).map_err(braid_err),
        "block" => {
            let eps = required(field, "eps", &s.eps)?;
            make_block(&eps, s.ell.unwrap_or(2)).map_err(braid_err)
        }
        "block-point" => {
            let params = BlockPointParams {
                q12: required(field, "q12", &s.q12)?,
                q21: required(field, "q21", &s.q21)?,
                q22: required(field, "q22", &s.q22)?,
                eps: required(field, "eps", &s.eps)?,
                a: required(field, "a", &s.a)?,
            };
            make_block_point(&params).map_err(braid_err)
        }
        "diagonal" => {
            let rows = s.q.as_ref().ok_or_else(|| CliError::Usage("space: missing q".into()))?;
            let q = rows
                .iter()
                .map(|row| row.iter().map(|t| scalar(field, "q", t)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            make_diagonal(&q).map_err(braid_err)
        }
        "custom" => {
            let d = s.dim.ok_or_else(|| CliError::Usage("space: missing dim".into()))?;
            let mut coeffs = vec![field.zero(); d.pow(4)];
            for t in &s.term {
                if [t.i, t.j, t.k, t.l].iter().any(|&x| x == 0 || x > d) {
                    return Err(CliError::Usage(format!("space: term index out of range 1..{d}")));
                }
                let idx = (((t.i - 1) * d + (t.j - 1)) * d + (t.k - 1)) * d + (t.l - 1);
                coeffs[idx] = scalar(field, "term.value", &t.value)?;
            }
            BraidedVectorSpace::from_tensor(field, d, coeffs).map_err(braid_err)
        }
        other => Err(CliError::Usage(format!(
            "space: unknown kind {other:?} (jordan, super-jordan, block, block-point, diagonal, custom)"
        ))),
    }
}

pub fn build_group(g: Option<&GroupConfig>) -> Result<FGAbelianGroup, CliError> {
    match g {
        Some(g) => FGAbelianGroup::new(g.free_rank, g.torsion.clone()).map_err(|e| CliError::Usage(format!("group: {e}"))),
        None => Ok(FGAbelianGroup::free(1)),
    }
}

/// The candidate (g, χ, η) of a config, before validation.
pub fn build_data(field: CyclotomicField, group: Option<&GroupConfig>, t: &TripleConfig) -> Result<YdData, CliError> {
    let group = build_group(group)?;
    let g = group.element(t.g.clone()).map_err(|e| CliError::Usage(format!("triple.g: {e}")))?;
    let chi = t.chi.iter().map(|v| scalar(field, "triple.chi", v)).collect::<Result<Vec<_>, _>>()?;
    let eta = t.eta.iter().map(|v| scalar(field, "triple.eta", v)).collect::<Result<Vec<_>, _>>()?;
    Ok(YdData { group, g, chi: Character::new(chi), eta: Derivation::new(eta) })
}

/// `jordan` or `super-jordan` over ℤ.
pub fn named_triple(field: CyclotomicField, name: &str) -> Result<YdTriple, CliError> {
    let eps = match name {
        "jordan" => field.one(),
        "super-jordan" => field.integer(-1),
        other => return Err(CliError::Usage(format!("unknown triple {other:?} (jordan, super-jordan)"))),
    };
    Ok(standard_triple(&eps).expect("standard triples are valid"))
}

pub fn validated(data: YdData) -> Result<YdTriple, CliError> {
    YdTriple::new(data).map_err(|v| {
        let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
        CliError::Usage(format!("invalid triple: {}", msgs.join("; ")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_rejected() {
        assert!(RunConfig::parse("conductor = 12\n[space]\nkind = \"jordan\"\nepsilon = \"1\"\n").is_err());
        assert!(RunConfig::parse("conductr = 12\n").is_err());
        let c = RunConfig::parse("conductor = 24\n[group]\nfree_rank = 1\n[triple]\ng = [1]\nchi = [\"-1\"]\neta = [\"1\"]\n").unwrap();
        assert_eq!(c.conductor, Some(24));
        assert_eq!(c.triple.unwrap().chi, vec!["-1".to_string()]);
    }

    #[test]
    fn custom_space_matches_block() {
        let f = CyclotomicField::new(12).unwrap();
        let mut s = SpaceConfig { kind: "custom".into(), dim: Some(2), ..Default::default() };
        let block = make_block(&f.one(), 2).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    for l in 1..=2 {
                        let c = block.coeff(i, j, k, l);
                        if !c.is_zero() {
                            s.term.push(TermConfig { i, j, k, l, value: c.to_string() });
                        }
                    }
                }
            }
        }
        assert!(build_space(f, &s).unwrap() == block);
    }
}
